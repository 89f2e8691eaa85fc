use aztec_core::aztec::{paths_to_tiling, row_crossings, tiling_to_paths, Tiling};
use aztec_core::lgv::SchemeKind;

fn load() -> Tiling {
    let text = include_str!("fixtures/az3_mixed.json");
    serde_json::from_str(text).unwrap()
}

#[test]
fn mixed_order_three_tiling_maps_to_known_triple() {
    let t = load();
    assert_eq!(t.order(), 3);
    let f = tiling_to_paths(&t).unwrap();
    assert_eq!(f.scheme().kind, SchemeKind::Pi);
    let shown: Vec<String> = f.paths().iter().map(|p| p.to_string()).collect();
    assert_eq!(shown, ["UD@-1", "UULDD@-3", "UUULLDDD@-5"]);
    assert!(f.is_nonintersecting());
    assert_eq!(paths_to_tiling(&f).unwrap(), t);
}

#[test]
fn mixed_tiling_row_crossings() {
    let rows = row_crossings(&load()).unwrap();
    let steps: Vec<String> = rows
        .iter()
        .map(|r| r.steps.iter().map(|s| s.as_char()).collect())
        .collect();
    assert_eq!(steps, ["UD", "ULD", "ULLD"]);
}

#[test]
fn fixture_survives_json_round_trip() {
    let t = load();
    let again: Tiling = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
    assert_eq!(again, t);
}
