//! JSON documents: round trips, rejection of broken tables, determinism.

use hcnerve::groups::{FiniteGroup, SimplicialGroupoid};
use hcnerve::instance::InstanceSpec;
use hcnerve::pipeline::{verify_theorem, RunConfig, TheoremReport};
use hcnerve::simplicial::TruncatedSSet;
use hcnerve::wbar::build_wbar;
use hcnerve::Error;

fn wbar_c2() -> TruncatedSSet {
    build_wbar(&SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2).unwrap(), 3), 3).unwrap()
}

#[test]
fn simplicial_set_round_trip() {
    let w = wbar_c2();
    let text = w.to_json_string();
    assert_eq!(TruncatedSSet::from_json_str(&text).unwrap(), w);
}

#[test]
fn groupoid_round_trip() {
    let g = InstanceSpec::parse_group_arg("xmod:c2,c2,trivial").unwrap().build(2).unwrap();
    assert_eq!(SimplicialGroupoid::from_json_str(&g.to_json_string()).unwrap(), g);
}

#[test]
fn broken_face_names_the_spot() {
    let mut w = wbar_c2();
    // d_0 of simplex 3 at level 2 now points at the wrong edge.
    let right = w.face(2, 0, 3);
    w.corrupt_face(2, 0, 3, 1 - right);
    let err = TruncatedSSet::from_json_str(&w.to_json_string()).unwrap_err();
    assert!(matches!(err, Error::Validation(_)));
    let msg = err.to_string();
    assert!(msg.contains("level"), "{msg}");

    let mut w = wbar_c2();
    w.corrupt_face(2, 1, 3, 99);
    let err = TruncatedSSet::from_json_str(&w.to_json_string()).unwrap_err();
    match err {
        Error::MalformedTable { level, index, .. } => assert_eq!((level, index), (2, 3)),
        other => panic!("expected a malformed table, got {other}"),
    }
}

#[test]
fn schema_mismatch_is_rejected() {
    let mut v: serde_json::Value = serde_json::from_str(&wbar_c2().to_json_string()).unwrap();
    v["schema"] = serde_json::json!(999);
    assert!(matches!(TruncatedSSet::from_json_value(v), Err(Error::Schema { found: 999, .. })));
}

#[test]
fn reports_are_deterministic() {
    let cfg = RunConfig::new(InstanceSpec::parse_group_arg("cyclic:3").unwrap(), 3, 2).unwrap();
    let a = verify_theorem(&cfg).unwrap().to_json_string();
    let b = verify_theorem(&cfg).unwrap().to_json_string();
    assert_eq!(a, b);
    assert_eq!(TheoremReport::from_json_str(&a).unwrap().to_json_string(), a);
}
