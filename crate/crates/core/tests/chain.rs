mod common;

use common::{exceptional, g, sweep};
use realgroups::chain::*;
use realgroups::depth::depth;
use realgroups::length::length_of;
use realgroups::realforms::*;

#[test]
fn longest_chains_verify_and_total_the_length() {
    for f in sweep(12).into_iter().chain(exceptional()) {
        let c = longest_chain(&f);
        let v = verify_chain(&c);
        assert!(v.ok, "{f}: {:?}", v.diagnostics);
        assert_eq!(c.claimed_total, length_of(&ReductiveDescriptor::simple(f)), "{f}");
    }
}

#[test]
fn depth_chains_verify_within_bounds() {
    for f in sweep(12).into_iter().chain(exceptional()) {
        let c = depth_chain(&f).unwrap_or_else(|e| panic!("{f}: {e}"));
        let v = verify_chain(&c);
        assert!(v.ok, "{f}: {:?}", v.diagnostics);
        let d = depth(&f);
        assert!(c.segments.len() <= 9, "{f}");
        assert!(u64::from(d.lower) <= c.claimed_total && c.claimed_total <= u64::from(d.upper), "{f}: {} vs {d}", c.claimed_total);
        if d.exact {
            assert_eq!(c.claimed_total, u64::from(d.upper), "{f}");
        }
    }
}

#[test]
fn worked_examples() {
    let c = longest_chain(&g("Sp(2,1)"));
    assert_eq!(c.segments.iter().map(|s| (s.kind, s.count)).collect::<Vec<_>>(), vec![
        (SegmentKind::ParabolicDescent, 1),
        (SegmentKind::SolvableCodim1, 8),
        (SegmentKind::CompactBlock, 2),
        (SegmentKind::CompactBlock, 2),
    ]);
    assert_eq!(c.claimed_total, 13);
    let c = longest_chain(&g("FI"));
    assert_eq!(c.segments.iter().map(|s| s.count).collect::<Vec<_>>(), vec![4, 28]);
    let c = longest_chain(&g("EIX"));
    assert_eq!(verify_chain(&c).total, 125);
    let c = depth_chain(&g("Sp(1,1)")).unwrap();
    assert!(verify_chain(&c).ok);
    assert_eq!(c.claimed_total, 4);
    let c = depth_chain(&g("SO(4,4)")).unwrap();
    let path: Vec<String> = c.segments.iter().map(|s| s.endpoint.to_string()).collect();
    assert_eq!(path, ["SU(2,1)", "SL(2,R)", "T(1)", "1"]);
}

#[test]
fn tampering_is_caught() {
    let mut c = longest_chain(&g("SU(4,2)"));
    c.segments[0].count += 1;
    assert!(!verify_chain(&c).ok);
    let mut c = longest_chain(&g("SU(4,2)"));
    c.claimed_total -= 1;
    assert!(!verify_chain(&c).ok);
    let mut c = depth_chain(&g("SU(4,2)")).unwrap();
    c.segments.remove(1);
    c.claimed_total -= 1;
    assert!(!verify_chain(&c).ok);
    let mut c = depth_chain(&g("EVII")).unwrap();
    c.segments[0].rule = "torus-drop".into();
    assert!(!verify_chain(&c).ok);
    let mut c = depth_chain(&g("EVII")).unwrap();
    c.segments.pop();
    c.claimed_total -= 1;
    assert!(!verify_chain(&c).ok);
}

#[test]
fn json_has_citations() {
    let j = depth_chain(&g("EIX")).unwrap().to_json();
    assert_eq!(j["claimed_total"], 5);
    for s in j["segments"].as_array().unwrap() {
        assert!(!s["cite"].as_str().unwrap().is_empty());
        assert!(parse(s["endpoint"].as_str().unwrap()).is_ok());
    }
}
