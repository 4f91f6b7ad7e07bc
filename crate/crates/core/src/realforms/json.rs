//! JSON wire format: `{"kind": ..., "params": [...], "compact": bool}`.

use super::{RealForm, RealFormError, ReductiveDescriptor};
use crate::rootdata::{Family, SimpleRootSystem};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DescriptorJson {
    pub kind: String,
    pub params: Vec<Value>,
    pub compact: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReductiveJson {
    pub factors: Vec<DescriptorJson>,
    pub torus_dim: u32,
}

impl From<&RealForm> for DescriptorJson {
    fn from(g: &RealForm) -> Self {
        let ints = |v: &[u32]| v.iter().map(|&x| Value::from(x)).collect();
        let (kind, params) = match *g {
            RealForm::SpecialLinearR(n) => ("SpecialLinearR", ints(&[n])),
            RealForm::SpecialLinearH(n) => ("SpecialLinearH", ints(&[n])),
            RealForm::SpecialUnitary(p, q) => ("SpecialUnitary", ints(&[p, q])),
            RealForm::SpecialOrthogonal(p, q) => ("SpecialOrthogonal", ints(&[p, q])),
            RealForm::SOStar(k) => ("SOStar", ints(&[k])),
            RealForm::SymplecticSplit(n) => ("SymplecticSplit", ints(&[n])),
            RealForm::SymplecticPQ(p, q) => ("SymplecticPQ", ints(&[p, q])),
            RealForm::Exceptional(l) => ("Exceptional", vec![Value::from(l.name())]),
            RealForm::Realification(x) => {
                let fam = x.family().symbol();
                let head = if x.family().is_classical() { fam } else { &fam[..1] };
                ("Realification", vec![Value::from(head), Value::from(x.rank())])
            }
        };
        Self { kind: kind.into(), params, compact: g.is_compact() }
    }
}

fn bad(msg: impl Into<String>) -> RealFormError {
    RealFormError::Parse { position: 0, message: msg.into() }
}

impl TryFrom<DescriptorJson> for RealForm {
    type Error = RealFormError;

    fn try_from(j: DescriptorJson) -> Result<Self, Self::Error> {
        let int = |i: usize| -> Result<u32, RealFormError> {
            j.params
                .get(i)
                .and_then(Value::as_u64)
                .and_then(|v| u32::try_from(v).ok())
                .ok_or_else(|| bad(format!("{}: param {i} must be a non-negative integer", j.kind)))
        };
        let text = |i: usize| -> Result<&str, RealFormError> {
            j.params.get(i).and_then(Value::as_str).ok_or_else(|| bad(format!("{}: param {i} must be a string", j.kind)))
        };
        let arity = match j.kind.as_str() {
            "SpecialUnitary" | "SpecialOrthogonal" | "SymplecticPQ" | "Realification" => 2,
            _ => 1,
        };
        if j.params.len() != arity {
            return Err(bad(format!("{} takes {arity} params", j.kind)));
        }
        let g = match j.kind.as_str() {
            "SpecialLinearR" => RealForm::SpecialLinearR(int(0)?),
            "SpecialLinearH" => RealForm::SpecialLinearH(int(0)?),
            "SpecialUnitary" => RealForm::SpecialUnitary(int(0)?, int(1)?),
            "SpecialOrthogonal" => RealForm::SpecialOrthogonal(int(0)?, int(1)?),
            "SOStar" => RealForm::SOStar(int(0)?),
            "SymplecticSplit" => RealForm::SymplecticSplit(int(0)?),
            "SymplecticPQ" => RealForm::SymplecticPQ(int(0)?, int(1)?),
            "Exceptional" => RealForm::Exceptional(text(0)?.parse()?),
            "Realification" => {
                let rank = int(1)?;
                let head = text(0)?;
                let family = Family::ALL
                    .into_iter()
                    .find(|f| {
                        let s = f.symbol();
                        s == head || (!f.is_classical() && &s[..1] == head && f.rank_range().0 == rank)
                    })
                    .ok_or_else(|| bad(format!("unknown family `{head}`")))?;
                RealForm::Realification(SimpleRootSystem::new(family, rank).map_err(|e| bad(e.to_string()))?)
            }
            other => return Err(bad(format!("unknown kind `{other}`"))),
        };
        g.validate()?;
        if g.is_compact() != j.compact {
            return Err(bad(format!("compact flag {} disagrees with {g}", j.compact)));
        }
        Ok(g)
    }
}

impl From<&ReductiveDescriptor> for ReductiveJson {
    fn from(d: &ReductiveDescriptor) -> Self {
        Self { factors: d.factors().iter().map(DescriptorJson::from).collect(), torus_dim: d.torus_dim() }
    }
}

impl TryFrom<ReductiveJson> for ReductiveDescriptor {
    type Error = RealFormError;

    fn try_from(j: ReductiveJson) -> Result<Self, Self::Error> {
        let factors = j.factors.into_iter().map(RealForm::try_from).collect::<Result<_, _>>()?;
        Ok(ReductiveDescriptor::new(factors, j.torus_dim))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_exact_rendering() {
        let g: RealForm = "EIX".parse().unwrap();
        assert_eq!(g.to_json(), r#"{"kind":"Exceptional","params":["EIX"],"compact":false}"#);
        let g: RealForm = "SO(3,1)".parse().unwrap();
        assert_eq!(g.to_json(), r#"{"kind":"Realification","params":["A",1],"compact":false}"#);
        let g: RealForm = "Sp(3)".parse().unwrap();
        assert_eq!(g.to_json(), r#"{"kind":"SymplecticPQ","params":[3,0],"compact":true}"#);
        let g: RealForm = "E7(C)".parse().unwrap();
        assert_eq!(g.to_json(), r#"{"kind":"Realification","params":["E",7],"compact":false}"#);
        assert_eq!(RealForm::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn rejects_inconsistent_json() {
        assert!(RealForm::from_json(r#"{"kind":"SpecialUnitary","params":[1,1],"compact":false}"#).is_err());
        assert!(RealForm::from_json(r#"{"kind":"SpecialUnitary","params":[3,0],"compact":false}"#).is_err());
        assert!(RealForm::from_json(r#"{"kind":"Nope","params":[3],"compact":false}"#).is_err());
    }
}
