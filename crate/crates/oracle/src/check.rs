//! Equivalence assertions between the library under test and the
//! brute-force oracle. Panics with context on the first disagreement.

use std::collections::HashSet;

use rcg_core::classes::conjugacy_classes;
use rcg_core::structure::{
    center, derived_subgroup, is_solvable, normal_subgroups, o_p, o_p_prime, o_upper_p_prime,
    SubgroupHandle,
};
use rcg_core::{PermGroup, Permutation};

use crate::GroupOracle;

fn assert_same_subgroup(
    label: &str,
    group_name: &str,
    handle: &SubgroupHandle,
    oracle_set: &HashSet<Permutation>,
) {
    assert_eq!(
        handle.order(),
        oracle_set.len() as u64,
        "{group_name}: {label} order disagrees with oracle"
    );
    for x in oracle_set {
        assert!(
            handle.contains(x),
            "{group_name}: {label} is missing an oracle element"
        );
    }
}

/// Cross-checks class data, realness, centralizers, center, derived
/// subgroup, solvability, the 2-cores, O^{2'}, and the normal-subgroup
/// lattice of `g` against the exhaustive oracle.
pub fn assert_group_matches_oracle(g: &PermGroup) {
    let name = if g.name().is_empty() {
        "group"
    } else {
        g.name()
    };
    let oracle = GroupOracle::from_generators(g.degree(), g.generators());

    assert_eq!(g.order(), oracle.order(), "{name}: order disagrees");
    for x in &oracle.elements {
        assert!(g.contains(x), "{name}: membership disagrees on an element");
    }

    // Classes: sizes, realness verdicts, centralizer orders, witnesses.
    let impl_classes = conjugacy_classes(g).expect("classes computable");
    let oracle_classes = oracle.conjugacy_classes();
    assert_eq!(
        impl_classes.len(),
        oracle_classes.len(),
        "{name}: class count disagrees"
    );
    let mut matched = vec![false; oracle_classes.len()];
    for c in impl_classes.iter() {
        let pos = oracle_classes
            .iter()
            .position(|oc| oc.contains(&c.representative))
            .expect("representative lies in some oracle class");
        assert!(
            !matched[pos],
            "{name}: two implementation classes map to one oracle class"
        );
        matched[pos] = true;
        let oc = &oracle_classes[pos];
        assert_eq!(c.size, oc.len() as u64, "{name}: class size disagrees");
        assert_eq!(
            c.is_real,
            oracle.is_real(&c.representative),
            "{name}: realness disagrees"
        );
        assert_eq!(
            g.order() / c.size,
            oracle.centralizer_order(&c.representative),
            "{name}: centralizer order disagrees"
        );
        if let Some(w) = &c.reversing_witness {
            assert!(oracle.contains(w), "{name}: witness is not a group element");
            assert_eq!(
                c.representative.conjugate_by(w),
                c.representative.inverse(),
                "{name}: witness does not reverse the representative"
            );
        }
    }
    let sum: u64 = impl_classes.iter().map(|c| c.size).sum();
    assert_eq!(sum, g.order(), "{name}: class sizes do not partition");

    // Center.
    let z = center(g).expect("center computable");
    let oracle_center: HashSet<Permutation> = oracle.center().into_iter().collect();
    assert_same_subgroup("center", name, &z, &oracle_center);

    // Derived subgroup and solvability.
    let derived = derived_subgroup(g).expect("derived subgroup computable");
    let oracle_derived: HashSet<Permutation> =
        oracle.derived_subgroup().elements.into_iter().collect();
    assert_same_subgroup("derived subgroup", name, &derived, &oracle_derived);
    assert_eq!(
        is_solvable(g).expect("solvability computable"),
        oracle.is_solvable(),
        "{name}: solvability disagrees"
    );

    // Cores.
    let lattice_sets = oracle.normal_subgroup_sets();
    assert_same_subgroup(
        "O_2",
        name,
        &o_p(g, 2).expect("O_2 computable"),
        &oracle.o_2(&lattice_sets),
    );
    assert_same_subgroup(
        "O_2'",
        name,
        &o_p_prime(g, 2).expect("O_2' computable"),
        &oracle.o_2_prime(&lattice_sets),
    );
    let oracle_oupper: HashSet<Permutation> =
        oracle.o_upper_2_prime().elements.into_iter().collect();
    assert_same_subgroup(
        "O^{2'}",
        name,
        &o_upper_p_prime(g, 2).expect("O^{2'} computable"),
        &oracle_oupper,
    );

    // Normal-subgroup lattice, both directions.
    let impl_lattice = normal_subgroups(g, g.order()).expect("lattice computable");
    assert_eq!(
        impl_lattice.len(),
        lattice_sets.len(),
        "{name}: normal subgroup count disagrees"
    );
    for set in &lattice_sets {
        let hits = impl_lattice
            .iter()
            .filter(|h| h.order() == set.len() as u64 && set.iter().all(|x| h.contains(x)))
            .count();
        assert_eq!(
            hits, 1,
            "{name}: oracle normal subgroup unmatched in lattice"
        );
    }
    for h in &impl_lattice {
        let hits = lattice_sets
            .iter()
            .filter(|set| {
                set.len() as u64 == h.order() && h.generators.iter().all(|x| set.contains(x))
            })
            .count();
        assert_eq!(
            hits, 1,
            "{name}: implementation normal subgroup unmatched in oracle"
        );
    }

    // Second, fully independent lattice route for small class counts.
    if let Some(by_subsets) = oracle.normal_sets_by_class_subsets() {
        assert_eq!(
            by_subsets.len(),
            lattice_sets.len(),
            "{name}: class-subset lattice disagrees with join-closure lattice"
        );
        for set in &by_subsets {
            let hits = lattice_sets
                .iter()
                .filter(|n| n.len() == set.len() && set.iter().all(|x| n.contains(x)))
                .count();
            assert_eq!(hits, 1, "{name}: subset-route normal subgroup unmatched");
        }
    }
}
