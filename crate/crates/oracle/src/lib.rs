//! Brute-force reference computations built only on exhaustive element
//! enumeration and raw permutation arithmetic.
//!
//! Nothing here touches stabilizer chains, orbit sweeps, class caches, or
//! any other machinery under test: groups are flat element lists obtained
//! by multiplication closure, and every structural notion (classes,
//! centers, derived series, cores, the normal-subgroup lattice) is
//! computed from its definition. This crate exists so the main library can
//! be cross-checked against something expensive but obviously correct.

pub mod check;

use std::collections::HashSet;

use rcg_core::Permutation;

/// Conjugate of `x` by `g`, written out as g^-1 * x * g rather than going
/// through the library's fused routine.
fn conj(x: &Permutation, g: &Permutation) -> Permutation {
    &(&g.inverse() * x) * g
}

/// Multiplication closure of a generating set: every element reachable
/// from the identity by repeated right multiplication.
pub fn closure(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let identity = Permutation::identity(degree);
    let mut set: HashSet<Permutation> = HashSet::from([identity.clone()]);
    let mut queue = vec![identity];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head].clone();
        head += 1;
        for g in gens {
            let y = &x * g;
            if set.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    queue
}

fn is_subgroup(set: &HashSet<Permutation>, elems: &[Permutation]) -> bool {
    for a in elems {
        for b in elems {
            if !set.contains(&(a * b)) {
                return false;
            }
        }
    }
    true
}

/// An exhaustively enumerated group.
pub struct GroupOracle {
    pub degree: usize,
    pub elements: Vec<Permutation>,
    set: HashSet<Permutation>,
}

impl GroupOracle {
    pub fn from_generators(degree: usize, gens: &[Permutation]) -> GroupOracle {
        let elements = closure(degree, gens);
        let set = elements.iter().cloned().collect();
        GroupOracle {
            degree,
            elements,
            set,
        }
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.set.contains(p)
    }

    /// The conjugacy class of `x` as an element set.
    pub fn class_of(&self, x: &Permutation) -> HashSet<Permutation> {
        self.elements.iter().map(|g| conj(x, g)).collect()
    }

    pub fn is_real(&self, x: &Permutation) -> bool {
        self.class_of(x).contains(&x.inverse())
    }

    pub fn centralizer_order(&self, x: &Permutation) -> u64 {
        self.elements
            .iter()
            .filter(|g| (*g * x) == (x * *g))
            .count() as u64
    }

    /// Partition of the group into conjugacy classes, in first-element
    /// sweep order over the enumeration.
    pub fn conjugacy_classes(&self) -> Vec<HashSet<Permutation>> {
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut classes = Vec::new();
        for x in &self.elements {
            if seen.contains(x) {
                continue;
            }
            let class = self.class_of(x);
            for e in &class {
                seen.insert(e.clone());
            }
            classes.push(class);
        }
        classes
    }

    pub fn center(&self) -> Vec<Permutation> {
        self.elements
            .iter()
            .filter(|z| self.elements.iter().all(|g| (*z * g) == (g * *z)))
            .cloned()
            .collect()
    }

    /// The commutator subgroup from all-pairs commutators.
    pub fn derived_subgroup(&self) -> GroupOracle {
        let inverses: Vec<Permutation> = self.elements.iter().map(|x| x.inverse()).collect();
        let mut commutators: HashSet<Permutation> = HashSet::new();
        for (i, a) in self.elements.iter().enumerate() {
            for (j, b) in self.elements.iter().enumerate() {
                let c = &(&inverses[i] * &inverses[j]) * &(a * b);
                commutators.insert(c);
            }
        }
        let gens: Vec<Permutation> = commutators.into_iter().collect();
        GroupOracle::from_generators(self.degree, &gens)
    }

    pub fn is_solvable(&self) -> bool {
        let mut current = GroupOracle {
            degree: self.degree,
            elements: self.elements.clone(),
            set: self.set.clone(),
        };
        loop {
            if current.order() == 1 {
                return true;
            }
            let next = current.derived_subgroup();
            if next.order() == current.order() {
                return false;
            }
            current = next;
        }
    }

    /// O^{2'}(G): the subgroup generated by all elements of 2-power order.
    pub fn o_upper_2_prime(&self) -> GroupOracle {
        let two_elements: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|x| x.order().is_power_of_two())
            .cloned()
            .collect();
        GroupOracle::from_generators(self.degree, &two_elements)
    }

    /// The full normal-subgroup lattice as element sets: the join-closure
    /// of the subgroups generated by single conjugacy classes.
    pub fn normal_subgroup_sets(&self) -> Vec<HashSet<Permutation>> {
        let classes = self.conjugacy_classes();
        let mut lattice: Vec<HashSet<Permutation>> =
            vec![HashSet::from([Permutation::identity(self.degree)])];
        let push_unique = |lattice: &mut Vec<HashSet<Permutation>>, cand: HashSet<Permutation>| {
            let dup = lattice
                .iter()
                .any(|n| n.len() == cand.len() && cand.iter().all(|x| n.contains(x)));
            if !dup {
                lattice.push(cand);
            }
        };
        for class in &classes {
            let gens: Vec<Permutation> = class.iter().cloned().collect();
            let sub: HashSet<Permutation> = closure(self.degree, &gens).into_iter().collect();
            push_unique(&mut lattice, sub);
        }
        let mut i = 0;
        while i < lattice.len() {
            let mut j = 0;
            while j < i {
                let union: Vec<Permutation> = lattice[i].union(&lattice[j]).cloned().collect();
                let join: HashSet<Permutation> = closure(self.degree, &union).into_iter().collect();
                push_unique(&mut lattice, join);
                j += 1;
            }
            i += 1;
        }
        lattice.sort_by_key(|n| n.len());
        lattice
    }

    /// The largest normal subgroup whose order satisfies `accept`, checked
    /// to contain every other accepted member of the lattice.
    fn extremal_normal(
        &self,
        lattice: &[HashSet<Permutation>],
        accept: impl Fn(u64) -> bool,
    ) -> HashSet<Permutation> {
        let accepted: Vec<&HashSet<Permutation>> =
            lattice.iter().filter(|n| accept(n.len() as u64)).collect();
        let largest = *accepted
            .iter()
            .max_by_key(|n| n.len())
            .expect("the trivial subgroup is always accepted");
        for n in &accepted {
            assert!(
                n.iter().all(|x| largest.contains(x)),
                "extremal normal subgroup must contain every accepted one"
            );
        }
        largest.clone()
    }

    pub fn o_2(&self, lattice: &[HashSet<Permutation>]) -> HashSet<Permutation> {
        self.extremal_normal(lattice, |n| n.is_power_of_two())
    }

    pub fn o_2_prime(&self, lattice: &[HashSet<Permutation>]) -> HashSet<Permutation> {
        self.extremal_normal(lattice, |n| n % 2 == 1)
    }

    /// Independent lattice route for groups with few classes: enumerate
    /// every union of classes containing the identity whose size divides
    /// the group order, and keep those closed under multiplication. Such a
    /// union is automatically conjugation-closed, hence normal.
    pub fn normal_sets_by_class_subsets(&self) -> Option<Vec<HashSet<Permutation>>> {
        let classes = self.conjugacy_classes();
        let identity = Permutation::identity(self.degree);
        let id_pos = classes
            .iter()
            .position(|c| c.contains(&identity))
            .expect("identity class exists");
        let others: Vec<&HashSet<Permutation>> = classes
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != id_pos)
            .map(|(_, c)| c)
            .collect();
        if others.len() > 14 {
            return None;
        }
        let mut found = Vec::new();
        for mask in 0u32..(1 << others.len()) {
            let size: usize = 1
                + (0..others.len())
                    .filter(|&k| mask >> k & 1 == 1)
                    .map(|k| others[k].len())
                    .sum::<usize>();
            if !self.order().is_multiple_of(size as u64) {
                continue;
            }
            let mut union: HashSet<Permutation> = HashSet::from([identity.clone()]);
            for (k, class) in others.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    union.extend(class.iter().cloned());
                }
            }
            let elems: Vec<Permutation> = union.iter().cloned().collect();
            if is_subgroup(&union, &elems) {
                found.push(union);
            }
        }
        found.sort_by_key(|n| n.len());
        Some(found)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Permutation {
        let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn sym3_from_scratch() {
        let o = GroupOracle::from_generators(3, &[cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])]);
        assert_eq!(o.order(), 6);
        let classes = o.conjugacy_classes();
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, [1, 2, 3]);
        assert_eq!(o.center().len(), 1);
        assert!(o.is_solvable());
        assert_eq!(o.derived_subgroup().order(), 3);
        assert_eq!(o.o_upper_2_prime().order(), 6);
        let lattice = o.normal_subgroup_sets();
        let orders: Vec<usize> = lattice.iter().map(|n| n.len()).collect();
        assert_eq!(orders, [1, 3, 6]);
        let by_subsets = o.normal_sets_by_class_subsets().unwrap();
        assert_eq!(by_subsets.len(), 3);
    }

    #[test]
    fn alt4_structure() {
        let o = GroupOracle::from_generators(4, &[cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[1, 2, 3]])]);
        assert_eq!(o.order(), 12);
        assert!(o.is_solvable());
        let lattice = o.normal_subgroup_sets();
        let orders: Vec<usize> = lattice.iter().map(|n| n.len()).collect();
        assert_eq!(orders, [1, 4, 12]);
        assert_eq!(o.o_2(&lattice).len(), 4);
        assert_eq!(o.o_2_prime(&lattice).len(), 1);
        // 3-cycles are not real in Alt(4).
        assert!(!o.is_real(&cyc(4, &[&[0, 1, 2]])));
        assert!(o.is_real(&cyc(4, &[&[0, 1], &[2, 3]])));
    }
}
