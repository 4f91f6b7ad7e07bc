//! Group-expression grammar.
//!
//! ```text
//! expr   := "1" | term ("*" term)*
//! term   := simple | "T(" INT ")"
//! simple := "SL(" n "," (R|H|C) ")" | "SU(" p "," q ")" | "SU(" n ")"
//!         | "SO(" p "," q ")" | "SO(" n ")" | "SO(" n ",C)"
//!         | ("SOstar" | "SO*") "(" 2k ")"
//!         | "Sp(" 2n ",R)" | "Sp(" 2n ",C)" | "Sp(" p "," q ")" | "Sp(" n ")"
//!         | LABEL | ("G2"|"F4"|"E6"|"E7"|"E8") "(C)"
//! ```
//!
//! Keywords are case-insensitive. Every term is canonicalised, so `SO(3,1)`
//! parses to `SL(2,C)` and `SO(4)` to `SU(2)*SU(2)`.

use super::canonical::*;
use super::{ExceptionalLabel, RealForm, RealFormError, ReductiveDescriptor, MAX_PARAM};
use crate::rootdata::{Family, SimpleRootSystem};

#[derive(Debug, Clone, PartialEq)]
enum Arg {
    Int(u32),
    Field(char),
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, RealFormError> {
        Err(RealFormError::Parse { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), RealFormError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn ident(&mut self) -> Result<String, RealFormError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a group name");
        }
        Ok(self.src[start..self.pos].to_ascii_uppercase())
    }

    fn arg(&mut self) -> Result<Arg, RealFormError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        let tok = &self.src[start..self.pos];
        if tok.is_empty() {
            return self.err("expected an argument");
        }
        if tok.bytes().all(|b| b.is_ascii_digit()) {
            match tok.parse::<u32>() {
                Ok(v) if v <= MAX_PARAM => Ok(Arg::Int(v)),
                _ => Err(RealFormError::Range(format!("parameter {tok} exceeds {MAX_PARAM}"))),
            }
        } else {
            match tok.to_ascii_uppercase().as_str() {
                "R" => Ok(Arg::Field('R')),
                "H" => Ok(Arg::Field('H')),
                "C" => Ok(Arg::Field('C')),
                _ => Err(RealFormError::Parse { position: start, message: format!("unexpected `{tok}`") }),
            }
        }
    }

    fn args(&mut self) -> Result<Vec<Arg>, RealFormError> {
        if !self.eat('(') {
            return Ok(vec![]);
        }
        let mut out = vec![self.arg()?];
        while self.eat(',') {
            out.push(self.arg()?);
        }
        self.expect(')')?;
        Ok(out)
    }
}

fn range(msg: impl Into<String>) -> RealFormError {
    RealFormError::Range(msg.into())
}

fn half(v: u32, what: &str) -> Result<u32, RealFormError> {
    if v.is_multiple_of(2) {
        Ok(v / 2)
    } else {
        Err(range(format!("{what} needs an even parameter, got {v}")))
    }
}

fn term(c: &mut Cursor<'_>) -> Result<ReductiveDescriptor, RealFormError> {
    use Arg::{Field, Int};
    let start = c.pos;
    let mut name = c.ident()?;
    if name == "SO" && c.eat('*') {
        name = "SOSTAR".into();
    }
    let args = c.args()?;
    let bad = || {
        Err(RealFormError::Parse {
            position: start,
            message: format!("unsupported arguments for `{name}`: {args:?}"),
        })
    };
    let size: u32 = args.iter().map(|a| if let Int(n) = a { *n } else { 0 }).sum();
    if name != "T" && args.iter().any(|a| matches!(a, Int(_))) && size == 0 {
        return Err(range(format!("`{name}` needs a positive size parameter")));
    }
    let d = match (name.as_str(), args.as_slice()) {
        ("1", []) => ReductiveDescriptor::trivial(),
        ("T", [Int(k)]) => ReductiveDescriptor::torus(*k),
        ("SL", [Int(n), Field('R')]) => canonical_slr(*n),
        ("SL", [Int(n), Field('H')]) => canonical_slh(*n),
        ("SL", [Int(n), Field('C')]) => canonical_sl_complex(*n),
        ("SU", [Int(n)]) => canonical_su(*n, 0),
        ("SU", [Int(p), Int(q)]) => canonical_su(*p, *q),
        ("SO", [Int(n)]) => canonical_so(*n, 0),
        ("SO", [Int(p), Int(q)]) => canonical_so(*p, *q),
        ("SO", [Int(n), Field('C')]) => canonical_so_complex(*n),
        ("SOSTAR", [Int(n)]) => canonical_sostar(half(*n, "SO*")?),
        ("SP", [Int(n)]) => canonical_sp(*n, 0),
        ("SP", [Int(p), Int(q)]) => canonical_sp(*p, *q),
        ("SP", [Int(n), Field('R')]) => canonical_sp_split(half(*n, "Sp(2n,R)")?),
        ("SP", [Int(n), Field('C')]) => canonical_sp_complex(half(*n, "Sp(2n,C)")?),
        (fam @ ("G2" | "F4" | "E6" | "E7" | "E8"), [Field('C')]) => {
            let family: Family = fam.parse().map_err(|_| range(fam.to_string()))?;
            ReductiveDescriptor::simple(RealForm::Realification(SimpleRootSystem::exceptional(family)))
        }
        (label, []) => match label.parse::<ExceptionalLabel>() {
            Ok(l) => ReductiveDescriptor::simple(RealForm::Exceptional(l)),
            Err(_) => {
                return Err(RealFormError::Parse { position: start, message: format!("unknown group `{name}`") })
            }
        },
        _ => return bad(),
    };
    Ok(d)
}

/// Parses a product expression into a canonical reductive descriptor.
pub fn parse(expr: &str) -> Result<ReductiveDescriptor, RealFormError> {
    let mut c = Cursor { src: expr, pos: 0 };
    let mut acc = term(&mut c)?;
    while c.eat('*') {
        acc = acc.product(&term(&mut c)?);
    }
    c.skip_ws();
    if c.pos != expr.len() {
        return c.err("trailing input");
    }
    acc.validate()?;
    Ok(acc)
}

/// Parses an expression that must denote a single simple group.
pub fn parse_simple(expr: &str) -> Result<RealForm, RealFormError> {
    let d = parse(expr)?;
    d.as_simple().copied().ok_or_else(|| RealFormError::NotSimple(d.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_families() {
        assert_eq!(parse_simple("SU(4,2)").unwrap(), RealForm::SpecialUnitary(4, 2));
        assert_eq!(parse_simple("su(2,4)").unwrap(), RealForm::SpecialUnitary(4, 2));
        assert_eq!(parse_simple("SO(3,1)").unwrap(), RealForm::Realification(SimpleRootSystem::a(1)));
        assert_eq!(parse_simple("Sp(3)").unwrap(), RealForm::SymplecticPQ(3, 0));
        assert_eq!(parse_simple("SO*(8)").unwrap(), RealForm::SOStar(4));
        assert_eq!(parse_simple("SOstar(10)").unwrap(), RealForm::SOStar(5));
        assert_eq!(parse_simple("Sp(6,R)").unwrap(), RealForm::SymplecticSplit(3));
        assert_eq!(parse_simple("E6_III").unwrap(), RealForm::Exceptional(ExceptionalLabel::EIII));
        assert_eq!(parse_simple("e8c").unwrap(), RealForm::Exceptional(ExceptionalLabel::E8c));
        assert_eq!(
            parse_simple("G2(C)").unwrap(),
            RealForm::Realification(SimpleRootSystem::exceptional(Family::G2))
        );
    }

    #[test]
    fn parses_products() {
        let d = parse("SU(2) * SL(2,R) * T(3)").unwrap();
        assert_eq!(d.factors().len(), 2);
        assert_eq!(d.torus_dim(), 3);
        assert_eq!(parse("SO*(8)*SO(4)").unwrap().factors().len(), 3);
        assert!(parse("1").unwrap().is_trivial());
        assert_eq!(parse("SO(2)").unwrap(), ReductiveDescriptor::torus(1));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse("SU(4,"), Err(RealFormError::Parse { .. })));
        assert!(matches!(parse("Sp(3,R)"), Err(RealFormError::Range(_))));
        assert!(matches!(parse("XYZ"), Err(RealFormError::Parse { position: 0, .. })));
        assert!(matches!(parse("SU(2)*"), Err(RealFormError::Parse { position: 6, .. })));
        assert!(matches!(parse("SU(2) x"), Err(RealFormError::Parse { .. })));
        assert!(matches!(parse_simple("SO(4)"), Err(RealFormError::NotSimple(_))));
    }
}
