//! Structural operators: center, normal closures, derived series, p-cores,
//! O^{p'}, Sylow subgroups, the normal-subgroup lattice, quotients, and the
//! p-closed / p-nilpotent predicates.
//!
//! O_p and O_{p'} are computed as joins of single-class normal closures
//! (every normal subgroup is a join of such closures), and O^{p'} as the
//! normal closure of the p-parts of class representatives. Quotients
//! materialize a faithful coset-action image so that all class machinery
//! applies to them unchanged.

use std::collections::HashMap;

use crate::arith;
use crate::caps::{NORMAL_SCAN_CAP, QUOTIENT_DEGREE_CAP};
use crate::classes::{conjugacy_classes, element_p_part};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A subgroup given by generators inside some parent group, carrying its
/// own stabilizer chain over the same degree.
#[derive(Debug)]
pub struct SubgroupHandle {
    pub generators: Vec<Permutation>,
    pub group: PermGroup,
}

impl SubgroupHandle {
    pub fn new(generators: Vec<Permutation>, group: PermGroup) -> SubgroupHandle {
        SubgroupHandle { generators, group }
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.group.contains(p)
    }

    /// True iff every generator of `self` lies in `other`.
    pub fn is_contained_in(&self, other: &PermGroup) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }
}

fn subgroup_from(degree: usize, mut gens: Vec<Permutation>) -> Result<SubgroupHandle> {
    if gens.is_empty() {
        gens.push(Permutation::identity(degree));
    }
    let group = PermGroup::from_generators(degree, gens.clone())?;
    Ok(SubgroupHandle::new(gens, group))
}

pub fn trivial_subgroup(degree: usize) -> SubgroupHandle {
    subgroup_from(degree, vec![Permutation::identity(degree)]).expect("trivial subgroup")
}

/// Z(G), generated by the representatives of the singleton classes.
pub fn center(g: &PermGroup) -> Result<SubgroupHandle> {
    let classes = conjugacy_classes(g)?;
    let gens: Vec<Permutation> = classes
        .iter()
        .filter(|c| c.is_central())
        .map(|c| c.representative.clone())
        .collect();
    let handle = subgroup_from(g.degree(), gens)?;
    debug_assert_eq!(
        handle.order(),
        classes.iter().filter(|c| c.is_central()).count() as u64
    );
    Ok(handle)
}

/// The smallest normal subgroup of `g` containing `seeds`: close the
/// generated subgroup under conjugation by the group generators until a
/// fixpoint is reached.
pub fn normal_closure(g: &PermGroup, seeds: &[Permutation]) -> Result<SubgroupHandle> {
    for s in seeds {
        if !g.contains(s) {
            return Err(Error::NotAMember);
        }
    }
    let mut gens: Vec<Permutation> = seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
    if gens.is_empty() {
        return Ok(trivial_subgroup(g.degree()));
    }
    let mut sub = PermGroup::from_generators(g.degree(), gens.clone())?;
    let mut queue: Vec<Permutation> = gens.clone();
    let mut head = 0;
    while head < queue.len() {
        let h = queue[head].clone();
        head += 1;
        for s in g.generators() {
            let c = h.conjugate_by(s);
            if !sub.contains(&c) {
                gens.push(c.clone());
                queue.push(c);
                sub = PermGroup::from_generators(g.degree(), gens.clone())?;
            }
        }
    }
    Ok(SubgroupHandle::new(gens, sub))
}

/// G' as the normal closure of the generator commutators.
pub fn derived_subgroup(g: &PermGroup) -> Result<SubgroupHandle> {
    let gens = g.generators();
    let mut commutators = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let comm = &(&(&a.inverse() * &b.inverse()) * a) * b;
            if !comm.is_identity() {
                commutators.push(comm);
            }
        }
    }
    normal_closure(g, &commutators)
}

/// Derived series starting at G, iterated until the order stabilizes.
pub fn derived_series(g: &PermGroup) -> Result<Vec<SubgroupHandle>> {
    let mut series = vec![subgroup_from(g.degree(), g.generators().to_vec())?];
    loop {
        let last = series.last().unwrap();
        if last.order() == 1 {
            break;
        }
        let next = derived_subgroup(&last.group)?;
        if next.order() == last.order() {
            break;
        }
        series.push(next);
    }
    Ok(series)
}

pub fn is_solvable(g: &PermGroup) -> Result<bool> {
    Ok(derived_series(g)?.last().unwrap().order() == 1)
}

/// O_p(G): the join of the single-class normal closures that are p-groups.
pub fn o_p(g: &PermGroup, p: u64) -> Result<SubgroupHandle> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let classes = conjugacy_classes(g)?;
    let mut gens: Vec<Permutation> = Vec::new();
    for class in classes.iter() {
        if arith::p_part(class.element_order, p)? != class.element_order {
            continue;
        }
        let closure = normal_closure(g, std::slice::from_ref(&class.representative))?;
        if arith::p_part(closure.order(), p)? == closure.order() {
            gens.extend(closure.generators);
        }
    }
    let handle = subgroup_from(g.degree(), gens)?;
    debug_assert_eq!(arith::p_part(handle.order(), p)?, handle.order());
    Ok(handle)
}

/// O_{p'}(G): the join of the single-class normal closures of p'-order.
pub fn o_p_prime(g: &PermGroup, p: u64) -> Result<SubgroupHandle> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let classes = conjugacy_classes(g)?;
    let mut gens: Vec<Permutation> = Vec::new();
    for class in classes.iter() {
        if class.element_order % p == 0 {
            continue;
        }
        let closure = normal_closure(g, std::slice::from_ref(&class.representative))?;
        if closure.order() % p != 0 {
            gens.extend(closure.generators);
        }
    }
    let handle = subgroup_from(g.degree(), gens)?;
    debug_assert!(handle.order() % p != 0);
    Ok(handle)
}

/// O^{p'}(G): the normal closure of the p-parts of class representatives;
/// the smallest normal subgroup with a p'-quotient.
pub fn o_upper_p_prime(g: &PermGroup, p: u64) -> Result<SubgroupHandle> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let classes = conjugacy_classes(g)?;
    let mut parts = Vec::new();
    for class in classes.iter() {
        let part = element_p_part(&class.representative, p)?;
        if !part.is_identity() {
            parts.push(part);
        }
    }
    let handle = normal_closure(g, &parts)?;
    debug_assert!(!(g.order() / handle.order()).is_multiple_of(p));
    Ok(handle)
}

/// A Sylow p-subgroup, built by greedy extension: starting from a cyclic
/// p-subgroup, repeatedly adjoin the first p-element (in chain order) that
/// normalizes and strictly extends the current p-subgroup.
pub fn sylow_subgroup(g: &PermGroup, p: u64) -> Result<SubgroupHandle> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let target = arith::p_part(g.order(), p)?;
    let mut handle = trivial_subgroup(g.degree());
    while handle.order() < target {
        let mut extender = None;
        for x in g.elements(g.order())? {
            let t = element_p_part(&x, p)?;
            if t.is_identity() || handle.contains(&t) {
                continue;
            }
            let normalizes = handle
                .generators
                .iter()
                .all(|h| handle.contains(&h.conjugate_by(&t)));
            if normalizes {
                extender = Some(t);
                break;
            }
        }
        let t = extender.ok_or_else(|| {
            Error::InvalidParameters("sylow extension step found no p-element".into())
        })?;
        let mut gens = handle.generators.clone();
        gens.retain(|x| !x.is_identity());
        gens.push(t);
        handle = subgroup_from(g.degree(), gens)?;
    }
    Ok(handle)
}

fn same_subgroup(a: &SubgroupHandle, b: &SubgroupHandle) -> bool {
    a.order() == b.order() && a.generators.iter().all(|x| b.contains(x))
}

/// The full normal-subgroup lattice: the join-closure of the single-class
/// normal closures plus the trivial subgroup, deduplicated by
/// order-and-membership. Refuses above `cap`.
pub fn normal_subgroups(g: &PermGroup, cap: u64) -> Result<Vec<SubgroupHandle>> {
    if g.order() > cap {
        return Err(Error::NormalScanCapExceeded {
            order: g.order(),
            cap,
        });
    }
    let classes = conjugacy_classes(g)?;
    let mut lattice: Vec<SubgroupHandle> = vec![trivial_subgroup(g.degree())];
    for class in classes.iter() {
        let atom = normal_closure(g, std::slice::from_ref(&class.representative))?;
        if !lattice.iter().any(|h| same_subgroup(h, &atom)) {
            lattice.push(atom);
        }
    }
    // Close under pairwise joins; a join of normal subgroups is the group
    // generated by the union of their generators.
    let mut i = 0;
    while i < lattice.len() {
        let mut j = 0;
        while j < i {
            let mut gens = lattice[i].generators.clone();
            gens.extend(lattice[j].generators.iter().cloned());
            let join = subgroup_from(g.degree(), gens)?;
            if !lattice.iter().any(|h| same_subgroup(h, &join)) {
                lattice.push(join);
            }
            j += 1;
        }
        i += 1;
    }
    lattice.sort_by_key(|h| h.order());
    Ok(lattice)
}

pub fn normal_subgroups_default(g: &PermGroup) -> Result<Vec<SubgroupHandle>> {
    normal_subgroups(g, NORMAL_SCAN_CAP)
}

enum QuotientRepr {
    /// Kernel is trivial: the parent representation is already faithful
    /// for G/1, so reuse it instead of building the regular coset action.
    IdentityMap,
    Cosets {
        transversal: Vec<Permutation>,
        coset_index: HashMap<Permutation, u32>,
    },
}

/// A faithful permutation representation of G/N on the right cosets of N,
/// with project/lift maps between parent elements and image elements.
pub struct QuotientGroup {
    pub image: PermGroup,
    kernel: PermGroup,
    repr: QuotientRepr,
    parent_degree: usize,
}

impl QuotientGroup {
    pub fn kernel_order(&self) -> u64 {
        self.kernel.order()
    }

    /// Canonical representative of the coset N*x.
    pub fn canonical_rep(&self, x: &Permutation) -> Permutation {
        match &self.repr {
            QuotientRepr::IdentityMap => x.clone(),
            QuotientRepr::Cosets { .. } => self.kernel.chain_canonical_coset_rep(x),
        }
    }

    /// The image permutation of `x` acting on the cosets.
    pub fn project(&self, x: &Permutation) -> Result<Permutation> {
        if x.degree() != self.parent_degree {
            return Err(Error::DegreeMismatch(self.parent_degree, x.degree()));
        }
        match &self.repr {
            QuotientRepr::IdentityMap => Ok(x.clone()),
            QuotientRepr::Cosets {
                transversal,
                coset_index,
            } => {
                let images: Vec<u32> = transversal
                    .iter()
                    .map(|r| {
                        let rep = self.kernel.chain_canonical_coset_rep(&(r * x));
                        coset_index[&rep]
                    })
                    .collect();
                Permutation::from_images(images)
            }
        }
    }

    /// A parent element mapping to the given image element. The coset
    /// action of G/N on itself is regular, so the image of coset 0
    /// determines the element.
    pub fn lift(&self, pi: &Permutation) -> Result<Permutation> {
        if !self.image.contains(pi) {
            return Err(Error::NotAMember);
        }
        match &self.repr {
            QuotientRepr::IdentityMap => Ok(pi.clone()),
            QuotientRepr::Cosets { transversal, .. } => {
                Ok(transversal[pi.apply(0) as usize].clone())
            }
        }
    }

    /// All elements of the coset N * lift(pi).
    pub fn coset_elements(&self, pi: &Permutation, cap: u64) -> Result<Vec<Permutation>> {
        let rep = self.lift(pi)?;
        Ok(self.kernel.elements(cap)?.map(|n| &n * &rep).collect())
    }
}

/// The quotient G/N as a coset action. Normality of `n` is verified, not
/// trusted: every conjugate of an `n`-generator by a `g`-generator must
/// sift back into `n`.
pub fn quotient(g: &PermGroup, n: &SubgroupHandle) -> Result<QuotientGroup> {
    quotient_capped(g, n, QUOTIENT_DEGREE_CAP)
}

pub fn quotient_capped(
    g: &PermGroup,
    n: &SubgroupHandle,
    degree_cap: u64,
) -> Result<QuotientGroup> {
    if !n.is_contained_in(g) {
        return Err(Error::NotAMember);
    }
    for ngen in &n.generators {
        for ggen in g.generators() {
            if !n.contains(&ngen.conjugate_by(ggen)) {
                return Err(Error::NotNormal);
            }
        }
    }
    let kernel = PermGroup::from_generators(g.degree(), n.generators.clone())?;
    if kernel.order() == 1 {
        let image = PermGroup::from_generators(g.degree(), g.generators().to_vec())?;
        return Ok(QuotientGroup {
            image,
            kernel,
            repr: QuotientRepr::IdentityMap,
            parent_degree: g.degree(),
        });
    }
    let index = g.order() / kernel.order();
    if index > degree_cap {
        return Err(Error::QuotientDegreeCapExceeded {
            index,
            cap: degree_cap,
        });
    }

    // Enumerate cosets by BFS from N itself.
    let c0 = kernel.chain_canonical_coset_rep(&g.identity());
    let mut transversal = vec![c0.clone()];
    let mut coset_index: HashMap<Permutation, u32> = HashMap::from([(c0, 0)]);
    let mut head = 0;
    while head < transversal.len() {
        let r = transversal[head].clone();
        head += 1;
        for s in g.generators() {
            let rep = kernel.chain_canonical_coset_rep(&(&r * s));
            if !coset_index.contains_key(&rep) {
                coset_index.insert(rep.clone(), transversal.len() as u32);
                transversal.push(rep);
            }
        }
    }
    assert_eq!(transversal.len() as u64, index, "coset count mismatch");

    let action_gens: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|s| {
            let images: Vec<u32> = transversal
                .iter()
                .map(|r| coset_index[&kernel.chain_canonical_coset_rep(&(r * s))])
                .collect();
            Permutation::from_images(images)
        })
        .collect::<Result<_>>()?;
    let image = PermGroup::from_generators(index as usize, action_gens)?;
    assert_eq!(image.order(), index, "coset action must be regular for G/N");

    Ok(QuotientGroup {
        image,
        kernel,
        repr: QuotientRepr::Cosets {
            transversal,
            coset_index,
        },
        parent_degree: g.degree(),
    })
}

/// p-closed: O_p(G) is a full Sylow p-subgroup.
pub fn is_p_closed(g: &PermGroup, p: u64) -> Result<bool> {
    Ok(o_p(g, p)?.order() == arith::p_part(g.order(), p)?)
}

/// p-nilpotent: O_{p'}(G) is a normal p-complement.
pub fn is_p_nilpotent(g: &PermGroup, p: u64) -> Result<bool> {
    Ok(g.order() / o_p_prime(g, p)?.order() == arith::p_part(g.order(), p)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Permutation {
        let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    fn sym4() -> PermGroup {
        PermGroup::from_generators(4, vec![cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap()
    }

    fn sym3() -> PermGroup {
        PermGroup::from_generators(3, vec![cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])]).unwrap()
    }

    fn alt4() -> PermGroup {
        PermGroup::from_generators(4, vec![cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[1, 2, 3]])]).unwrap()
    }

    fn alt5() -> PermGroup {
        PermGroup::from_generators(5, vec![cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[0, 1, 2, 3, 4]])])
            .unwrap()
    }

    #[test]
    fn centers() {
        assert_eq!(center(&sym4()).unwrap().order(), 1);
        let c6 = PermGroup::from_generators(6, vec![cyc(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap();
        assert_eq!(center(&c6).unwrap().order(), 6);
    }

    #[test]
    fn normal_closures() {
        let g = sym4();
        let whole = normal_closure(&g, &[cyc(4, &[&[0, 1]])]).unwrap();
        assert_eq!(whole.order(), 24);
        let klein = normal_closure(&g, &[cyc(4, &[&[0, 1], &[2, 3]])]).unwrap();
        assert_eq!(klein.order(), 4);
        let triv = normal_closure(&g, &[g.identity()]).unwrap();
        assert_eq!(triv.order(), 1);
        assert!(matches!(
            normal_closure(&alt4(), &[cyc(4, &[&[0, 1]])]),
            Err(Error::NotAMember)
        ));
    }

    #[test]
    fn derived_series_and_solvability() {
        let orders: Vec<u64> = derived_series(&sym4())
            .unwrap()
            .iter()
            .map(|h| h.order())
            .collect();
        assert_eq!(orders, [24, 12, 4, 1]);
        assert!(is_solvable(&sym4()).unwrap());
        assert!(!is_solvable(&alt5()).unwrap());
        let c5 = PermGroup::from_generators(5, vec![cyc(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        assert!(is_solvable(&c5).unwrap());
    }

    #[test]
    fn p_cores() {
        assert_eq!(o_p(&sym4(), 2).unwrap().order(), 4);
        assert_eq!(o_p(&alt5(), 2).unwrap().order(), 1);
        assert_eq!(o_p_prime(&sym4(), 2).unwrap().order(), 1);
        assert_eq!(o_p_prime(&sym3(), 2).unwrap().order(), 3);
        let c15 = PermGroup::from_generators(
            15,
            vec![cyc(
                15,
                &[&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14]],
            )],
        )
        .unwrap();
        assert_eq!(o_p_prime(&c15, 2).unwrap().order(), 15);
        // A p-group is its own O_p.
        let d8 = PermGroup::from_generators(4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[1, 3]])])
            .unwrap();
        assert_eq!(o_p(&d8, 2).unwrap().order(), 8);
    }

    #[test]
    fn o_upper_p_prime_examples() {
        assert_eq!(o_upper_p_prime(&sym4(), 2).unwrap().order(), 24);
        assert_eq!(o_upper_p_prime(&alt4(), 2).unwrap().order(), 4);
        let d8 = PermGroup::from_generators(4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[1, 3]])])
            .unwrap();
        assert_eq!(o_upper_p_prime(&d8, 2).unwrap().order(), 8);
    }

    #[test]
    fn sylow_orders() {
        assert_eq!(sylow_subgroup(&sym4(), 2).unwrap().order(), 8);
        assert_eq!(sylow_subgroup(&sym4(), 3).unwrap().order(), 3);
        assert_eq!(sylow_subgroup(&alt5(), 5).unwrap().order(), 5);
        assert_eq!(sylow_subgroup(&alt5(), 2).unwrap().order(), 4);
        // p not dividing the order gives the trivial subgroup.
        assert_eq!(sylow_subgroup(&sym4(), 5).unwrap().order(), 1);
        // Sylow subgroups are actual subgroups.
        let syl = sylow_subgroup(&sym4(), 2).unwrap();
        for gen in &syl.generators {
            assert!(sym4().contains(gen));
        }
    }

    #[test]
    fn normal_subgroup_lattices() {
        let orders: Vec<u64> = normal_subgroups_default(&sym4())
            .unwrap()
            .iter()
            .map(|h| h.order())
            .collect();
        assert_eq!(orders, [1, 4, 12, 24]);
        let orders: Vec<u64> = normal_subgroups_default(&alt5())
            .unwrap()
            .iter()
            .map(|h| h.order())
            .collect();
        assert_eq!(orders, [1, 60]);
        let c6 = PermGroup::from_generators(6, vec![cyc(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap();
        let orders: Vec<u64> = normal_subgroups_default(&c6)
            .unwrap()
            .iter()
            .map(|h| h.order())
            .collect();
        assert_eq!(orders, [1, 2, 3, 6]);
    }

    #[test]
    fn normal_scan_cap_is_enforced() {
        let g = sym4();
        assert!(matches!(
            normal_subgroups(&g, 10),
            Err(Error::NormalScanCapExceeded { order: 24, cap: 10 })
        ));
    }

    #[test]
    fn quotient_sym4_by_klein() {
        let g = sym4();
        let klein = normal_closure(&g, &[cyc(4, &[&[0, 1], &[2, 3]])]).unwrap();
        let q = quotient(&g, &klein).unwrap();
        assert_eq!(q.image.order(), 6);
        assert_eq!(q.image.degree(), 6);
        assert_eq!(q.kernel_order(), 4);
        // Projection is a homomorphism.
        let a = cyc(4, &[&[0, 1]]);
        let b = cyc(4, &[&[0, 1, 2, 3]]);
        let pa = q.project(&a).unwrap();
        let pb = q.project(&b).unwrap();
        assert_eq!(q.project(&(&a * &b)).unwrap(), &pa * &pb);
        // Kernel elements project to the identity.
        for n in klein.group.elements(10).unwrap() {
            assert!(q.project(&n).unwrap().is_identity());
        }
        // project(lift(c)) = c for every image element.
        for pi in q.image.elements(10).unwrap() {
            let lifted = q.lift(&pi).unwrap();
            assert_eq!(q.project(&lifted).unwrap(), pi);
        }
    }

    #[test]
    fn quotient_by_trivial_preserves_order() {
        let g = sym4();
        let triv = trivial_subgroup(4);
        let q = quotient(&g, &triv).unwrap();
        assert_eq!(q.image.order(), 24);
        let x = cyc(4, &[&[0, 1, 2]]);
        assert_eq!(q.project(&x).unwrap(), x);
    }

    #[test]
    fn quotient_of_cyclic() {
        let c6 = PermGroup::from_generators(6, vec![cyc(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap();
        let sub2 = normal_closure(&c6, &[cyc(6, &[&[0, 3], &[1, 4], &[2, 5]])]).unwrap();
        assert_eq!(sub2.order(), 2);
        let q = quotient(&c6, &sub2).unwrap();
        assert_eq!(q.image.order(), 3);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let g = sym4();
        // <(0 1)> has order 2 and is not normal in Sym(4).
        let sub = subgroup_from(4, vec![cyc(4, &[&[0, 1]])]).unwrap();
        assert!(matches!(quotient(&g, &sub), Err(Error::NotNormal)));
    }

    #[test]
    fn p_closed_and_p_nilpotent() {
        assert!(!is_p_closed(&sym4(), 2).unwrap());
        assert!(!is_p_nilpotent(&sym4(), 2).unwrap());
        assert!(is_p_closed(&alt4(), 2).unwrap());
        assert!(is_p_nilpotent(&sym3(), 2).unwrap());
        assert!(!is_p_closed(&sym3(), 2).unwrap());
    }
}
