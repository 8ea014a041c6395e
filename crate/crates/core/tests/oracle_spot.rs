//! Spot equivalence checks against the brute-force oracle on a
//! representative slice of the corpus. The full corpus sweep lives in the
//! acceptance suite; these keep module development honest at low cost.

use rcg_core::zoo::{build, parse_spec};
use rcg_oracle::check::assert_group_matches_oracle;

fn check(spec: &str) {
    let g = build(&parse_spec(spec).unwrap()).unwrap();
    assert_group_matches_oracle(&g);
}

#[test]
fn symmetric_and_alternating() {
    check("sym:4");
    check("sym:5");
    check("alt:4");
    check("alt:5");
}

#[test]
fn two_groups_and_dihedrals() {
    check("q8");
    check("sd16");
    check("dihedral:6");
    check("dihedral:10");
}

#[test]
fn odd_order_and_affine() {
    check("cyclic:15");
    check("affine:7:3");
    check("affine:5:4");
}

#[test]
fn linear_groups() {
    check("psl2:5");
    check("psl2:7");
    check("sl2:5");
    check("gl2:3");
}

#[test]
fn direct_products() {
    check("sym:3*sym:3");
    check("sym:3*cyclic:2");
}
