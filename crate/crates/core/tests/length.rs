mod common;

use common::{exceptional, g, sweep};
use proptest::prelude::*;
use realgroups::length::*;
use realgroups::realforms::*;

fn l(s: &str) -> u64 {
    length_of(&parse(s).unwrap())
}

#[test]
fn closed_forms_of_the_classical_table() {
    let delta = |a: u32, b: u32| u32::from(a == b);
    for n in 1..14u32 {
        assert_eq!(l(&format!("SL({},R)", n + 1)), u64::from(n * (n + 5) / 2), "SL({},R)", n + 1);
    }
    for n in 2..=14u32 {
        assert_eq!(l(&format!("SL({n},H)")), u64::from(2 * (n * n + n - 1)));
        assert_eq!(l(&format!("Sp({},R)", 2 * n)), u64::from(n * (n + 2)));
    }
    for k in 4..=14u32 {
        assert_eq!(l(&format!("SO*({})", 2 * k)), u64::from(k * k + k / 2));
    }
    for s in 2..=14u32 {
        for q in 0..=s / 2 {
            let p = s - q;
            let su = match p - q {
                0 => 2 * p * p + 2 * p - 1,
                1 => 2 * (p * p - 1),
                _ => 2 * (p * q + p - 1),
            };
            if p >= 2 {
                assert_eq!(l(&format!("SU({p},{q})")), u64::from(su), "SU({p},{q})");
            }
            let sp = 4 * p * q + 3 * p - 1 + delta(p, q);
            assert_eq!(l(&format!("Sp({p},{q})")), u64::from(sp), "Sp({p},{q})");
            let so = match p - q {
                0 if p >= 4 => Some(p * p + p),
                1 if p >= 3 => Some(p * p - 1),
                2 if p >= 5 => Some(p * p - p - 1),
                d if d > 2 && q >= 1 => Some(p * q + p - 1 + d / 4),
                _ => None,
            };
            if let Some(v) = so {
                assert_eq!(l(&format!("SO({p},{q})")), u64::from(v), "SO({p},{q})");
            }
        }
    }
}

#[test]
fn anchors() {
    assert_eq!(l("SU(4,2)"), 22);
    assert_eq!(l("Sp(2,2)"), 22);
    assert_eq!(l("SO(7,2)"), 21);
    assert_eq!(l("SO*(8)"), 18);
    assert_eq!(l("SL(3,H)"), 22);
    assert_eq!(l("SL(5,R)"), 18);
    assert_eq!(l("EIX"), 125);
    assert_eq!(l("SL(2,R)*T(1)"), 4);
    assert_eq!(l("1"), 0);
}

#[test]
fn compact_lengths() {
    for n in 2..=20u32 {
        assert_eq!(l(&format!("SU({n})")), u64::from(2 * n - 2), "SU({n})");
        assert_eq!(l(&format!("Sp({n})")), u64::from(3 * n - 1), "Sp({n})");
    }
    for n in 3..=20u32 {
        assert_eq!(l(&format!("SO({n})")), u64::from(n + n / 4 - 1), "SO({n})");
    }
    for (s, v) in [("G2c", 5), ("F4c", 11), ("E6c", 13), ("E7c", 17), ("E8c", 20)] {
        assert_eq!(l(s), v, "{s}");
    }
}

#[test]
fn satake_route_equals_table_route() {
    for f in sweep(14).into_iter().chain(exceptional()) {
        let a = LengthBreakdown::from_tables(&f);
        let b = LengthBreakdown::from_satake(&f);
        assert_eq!(a.total, b.total, "{f}");
        assert_eq!(a.total, simple_length(&f), "{f}");
    }
}

#[test]
fn lambda_equals_length() {
    for f in sweep(14).into_iter().chain(exceptional()) {
        let d = ReductiveDescriptor::simple(f);
        assert_eq!(lambda_lower_bound(&d), length_of(&d), "{f}");
    }
}

#[test]
fn compact_below_noncompact_below_split() {
    for f in sweep(14).into_iter().chain(exceptional()) {
        if f.is_compact() || f.is_split() || matches!(f, RealForm::Realification(_)) {
            continue;
        }
        let x = f.root_system();
        let lf = simple_length(&f);
        assert!(compact_simple_length(x) < lf, "{f}");
        assert!(lf <= x.complex_length(), "{f}");
    }
    for f in sweep(14) {
        if f.is_split() {
            assert_eq!(simple_length(&f), f.root_system().complex_length(), "{f}");
        }
    }
    assert_eq!(simple_length(&g("SL(3,C)")), 2 * 3 + 3 * 2);
}

fn any_form() -> impl Strategy<Value = RealForm> {
    proptest::sample::select(sweep(14).into_iter().chain(exceptional()).collect::<Vec<_>>())
}

proptest! {
    #[test]
    fn additive_over_products(a in any_form(), b in any_form(), k in 0u32..6) {
        let d = ReductiveDescriptor::new(vec![a, b], k);
        let one = |f| length_of(&ReductiveDescriptor::simple(f));
        prop_assert_eq!(length_of(&d), one(a) + one(b) + u64::from(k));
        prop_assert_eq!(length(&d).total, length_of(&d));
    }
}
