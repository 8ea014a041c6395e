//! Conjugacy classes, centralizers, and realness with explicit witnesses.
//!
//! A class is the orbit of an element under conjugation by the group
//! generators. The orbit BFS keeps a parent forest, so a reversing witness
//! `g` with `x^g = x^-1` can be read off as the product of the generators
//! along the path from `x` to `x^-1`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::caps::CLASS_CAP;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::structure::SubgroupHandle;

pub use crate::arith::p_part;

/// A conjugacy class of a fixed parent group.
///
/// `is_real` holds iff the inverse of the representative lies in the class;
/// the witness is the identity exactly when the representative is its own
/// inverse (identity or involution).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    pub representative: Permutation,
    pub size: u64,
    pub element_order: u64,
    pub is_real: bool,
    pub reversing_witness: Option<Permutation>,
}

impl ConjClass {
    pub fn is_central(&self) -> bool {
        self.size == 1
    }
}

/// Conjugation orbit with its BFS parent forest.
struct ClassOrbit {
    elems: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    /// (parent element index, generator index); the root has no entry.
    parent: Vec<Option<(usize, usize)>>,
}

impl ClassOrbit {
    fn compute(g: &PermGroup, x: &Permutation, cap: u64) -> Result<ClassOrbit> {
        let mut orbit = ClassOrbit {
            elems: vec![x.clone()],
            index: HashMap::from([(x.clone(), 0)]),
            parent: vec![None],
        };
        let mut head = 0;
        while head < orbit.elems.len() {
            let y = orbit.elems[head].clone();
            for (gi, s) in g.generators().iter().enumerate() {
                let z = y.conjugate_by(s);
                if !orbit.index.contains_key(&z) {
                    if orbit.elems.len() as u64 >= cap {
                        return Err(Error::ClassCapExceeded { cap });
                    }
                    orbit.index.insert(z.clone(), orbit.elems.len());
                    orbit.parent.push(Some((head, gi)));
                    orbit.elems.push(z);
                }
            }
            head += 1;
        }
        Ok(orbit)
    }

    /// The conjugator `w` with `root^w = elems[target]`, composed from the
    /// generator path in the parent forest.
    fn conjugator_to(&self, g: &PermGroup, target: usize) -> Permutation {
        let mut gens_on_path = Vec::new();
        let mut i = target;
        while let Some((parent, gi)) = self.parent[i] {
            gens_on_path.push(gi);
            i = parent;
        }
        let mut w = Permutation::identity(g.degree());
        for &gi in gens_on_path.iter().rev() {
            w = &w * &g.generators()[gi];
        }
        w
    }

    fn to_class(&self, g: &PermGroup, x: &Permutation) -> ConjClass {
        let inv = x.inverse();
        let witness = if x == &inv {
            Some(Permutation::identity(g.degree()))
        } else {
            self.index.get(&inv).map(|&i| self.conjugator_to(g, i))
        };
        ConjClass {
            representative: x.clone(),
            size: self.elems.len() as u64,
            element_order: x.order(),
            is_real: witness.is_some(),
            reversing_witness: witness,
        }
    }
}

/// The conjugacy class of `x` in `g`, with the default class-size cap.
pub fn class_of(g: &PermGroup, x: &Permutation) -> Result<ConjClass> {
    class_of_capped(g, x, CLASS_CAP)
}

pub fn class_of_capped(g: &PermGroup, x: &Permutation, cap: u64) -> Result<ConjClass> {
    if !g.contains(x) {
        return Err(Error::NotAMember);
    }
    Ok(ClassOrbit::compute(g, x, cap)?.to_class(g, x))
}

/// All conjugacy classes, computed by a deterministic sweep over the chain
/// element stream and cached on the group (write-once). Representatives are
/// the first-discovered element of each class; the list is sorted by
/// (element order, size, representative image sequence).
pub fn conjugacy_classes(g: &PermGroup) -> Result<Arc<[ConjClass]>> {
    if let Some(cached) = g.class_cache.get() {
        return Ok(cached.clone());
    }
    let mut visited: HashMap<Permutation, ()> = HashMap::with_capacity(g.order() as usize);
    let mut classes = Vec::new();
    for x in g.elements(g.order())? {
        if visited.contains_key(&x) {
            continue;
        }
        let orbit = ClassOrbit::compute(g, &x, CLASS_CAP)?;
        classes.push(orbit.to_class(g, &x));
        for e in orbit.elems {
            visited.insert(e, ());
        }
    }
    classes.sort_by(|a, b| {
        (a.element_order, a.size, a.representative.images()).cmp(&(
            b.element_order,
            b.size,
            b.representative.images(),
        ))
    });
    let arc: Arc<[ConjClass]> = classes.into();
    let _ = g.class_cache.set(arc.clone());
    Ok(arc)
}

/// |Cen_G(x)| = |G| / |x^G|.
pub fn centralizer_order(g: &PermGroup, x: &Permutation) -> Result<u64> {
    Ok(g.order() / class_of(g, x)?.size)
}

/// Whether `x^-1` lies in the class of `x`, with a reversing witness.
pub fn is_real(g: &PermGroup, x: &Permutation) -> Result<(bool, Option<Permutation>)> {
    let class = class_of(g, x)?;
    Ok((class.is_real, class.reversing_witness))
}

/// The generalized centralizer `Cen*_G(x) = {g : x^g in {x, x^-1}}` of a
/// real element, returned as a generated subgroup: Schreier generators of
/// the conjugation stabilizer plus one reversing witness.
pub fn generalized_centralizer(g: &PermGroup, x: &Permutation) -> Result<SubgroupHandle> {
    if !g.contains(x) {
        return Err(Error::NotAMember);
    }
    let orbit = ClassOrbit::compute(g, x, CLASS_CAP)?;
    let class = orbit.to_class(g, x);
    let Some(witness) = class.reversing_witness else {
        return Err(Error::NotReal);
    };

    // Schreier generators of Stab_G(x) under conjugation give Cen_G(x).
    let conjugators: Vec<Permutation> = (0..orbit.elems.len())
        .map(|i| orbit.conjugator_to(g, i))
        .collect();
    let mut sub_gens = vec![Permutation::identity(g.degree())];
    let mut sub = PermGroup::from_generators(g.degree(), sub_gens.clone())?;
    for (yi, y) in orbit.elems.iter().enumerate() {
        for s in g.generators() {
            let z = y.conjugate_by(s);
            let zi = orbit.index[&z];
            let schreier = &(&conjugators[yi] * s) * &conjugators[zi].inverse();
            if !sub.contains(&schreier) {
                sub_gens.push(schreier);
                sub = PermGroup::from_generators(g.degree(), sub_gens.clone())?;
            }
        }
    }
    debug_assert_eq!(sub.order(), g.order() / class.size);
    if x != &x.inverse() {
        sub_gens.push(witness);
        sub = PermGroup::from_generators(g.degree(), sub_gens.clone())?;
    }
    Ok(SubgroupHandle::new(sub_gens, sub))
}

/// The p-part `x_p` of `x`: with o(x) = p^a * k and gcd(p, k) = 1, this is
/// `x^(k*alpha)` for `k*alpha = 1 (mod p^a)`. It is a p-element, commutes
/// with `x`, and `x_p * x_p' = x`.
pub fn element_p_part(x: &Permutation, p: u64) -> Result<Permutation> {
    if !crate::arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let order = x.order();
    let pa = crate::arith::p_part(order, p)?;
    if pa == 1 {
        return Ok(Permutation::identity(x.degree()));
    }
    let k = order / pa;
    let alpha = crate::arith::mod_inverse(k % pa, pa).expect("k coprime to p^a");
    Ok(x.power((k * alpha) as i64))
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

    fn alt5() -> PermGroup {
        PermGroup::from_generators(5, vec![cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[0, 1, 2, 3, 4]])])
            .unwrap()
    }

    fn sym3() -> PermGroup {
        PermGroup::from_generators(3, vec![cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])]).unwrap()
    }

    #[test]
    fn identity_class_is_real_singleton() {
        let g = sym4();
        let c = class_of(&g, &g.identity()).unwrap();
        assert_eq!(c.size, 1);
        assert!(c.is_real);
        assert_eq!(c.element_order, 1);
        assert!(c.reversing_witness.unwrap().is_identity());
    }

    #[test]
    fn sym4_class_partition() {
        let g = sym4();
        let classes = conjugacy_classes(&g).unwrap();
        let sizes: Vec<u64> = classes.iter().map(|c| c.size).collect();
        assert_eq!(classes.len(), 5);
        assert_eq!(sizes.iter().sum::<u64>(), 24);
        let mut sorted = sizes.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, [1, 3, 6, 6, 8]);
        // Sorted by (element order, size, representative images).
        let keys: Vec<(u64, u64)> = classes.iter().map(|c| (c.element_order, c.size)).collect();
        assert_eq!(keys, [(1, 1), (2, 3), (2, 6), (3, 8), (4, 6)]);
        for c in classes.iter() {
            assert_eq!(24 % c.size, 0);
        }
    }

    #[test]
    fn abelian_group_has_singleton_classes() {
        let c3 = PermGroup::from_generators(3, vec![cyc(3, &[&[0, 1, 2]])]).unwrap();
        let classes = conjugacy_classes(&c3).unwrap();
        assert_eq!(classes.len(), 3);
        assert!(classes.iter().all(|c| c.size == 1));
    }

    #[test]
    fn alt5_five_cycle_class() {
        let g = alt5();
        let x = cyc(5, &[&[0, 1, 2, 3, 4]]);
        let c = class_of(&g, &x).unwrap();
        assert_eq!(c.size, 12);
        assert!(c.is_real);
        let w = c.reversing_witness.unwrap();
        assert_eq!(x.conjugate_by(&w), x.inverse());
        assert!(g.contains(&w));
        // The explicit double transposition also reverses the 5-cycle.
        let paper_witness = cyc(5, &[&[1, 4], &[2, 3]]);
        assert_eq!(x.conjugate_by(&paper_witness), x.inverse());
        assert!(g.contains(&paper_witness));
    }

    #[test]
    fn involutions_are_real_with_identity_witness() {
        let g = sym4();
        let x = cyc(4, &[&[0, 1]]);
        let (real, witness) = is_real(&g, &x).unwrap();
        assert!(real);
        assert!(witness.unwrap().is_identity());
    }

    #[test]
    fn centralizer_orders_by_counting() {
        let g = sym4();
        let x = cyc(4, &[&[0, 1, 2]]);
        assert_eq!(centralizer_order(&g, &x).unwrap(), 3);
        // Oracle: count commuting elements.
        let count = g
            .elements(100)
            .unwrap()
            .filter(|e| (e * &x) == (&x * e))
            .count() as u64;
        assert_eq!(count, 3);
        assert_eq!(centralizer_order(&g, &g.identity()).unwrap(), 24);
    }

    #[test]
    fn class_of_rejects_non_members() {
        let g = PermGroup::from_generators(4, vec![cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[1, 2, 3]])])
            .unwrap();
        assert!(matches!(
            class_of(&g, &cyc(4, &[&[0, 1]])),
            Err(Error::NotAMember)
        ));
    }

    #[test]
    fn generalized_centralizer_examples() {
        let g3 = sym3();
        let x = cyc(3, &[&[0, 1, 2]]);
        let h = generalized_centralizer(&g3, &x).unwrap();
        assert_eq!(h.group.order(), 6);
        assert_eq!(centralizer_order(&g3, &x).unwrap(), 3);

        let g5 = alt5();
        let x5 = cyc(5, &[&[0, 1, 2, 3, 4]]);
        let h5 = generalized_centralizer(&g5, &x5).unwrap();
        assert_eq!(h5.group.order(), 10);

        // Identity: Cen* is the whole group.
        let hid = generalized_centralizer(&g3, &g3.identity()).unwrap();
        assert_eq!(hid.group.order(), 6);

        // Brute-force filter agrees.
        let direct = g3
            .elements(10)
            .unwrap()
            .filter(|e| {
                let c = x.conjugate_by(e);
                c == x || c == x.inverse()
            })
            .count() as u64;
        assert_eq!(direct, h.group.order());
    }

    #[test]
    fn generalized_centralizer_requires_real() {
        // Order-7 elements of the Frobenius group of order 21 are not real.
        let t = cyc(7, &[&[0, 1, 2, 3, 4, 5, 6]]);
        let m = Permutation::from_images(vec![0, 2, 4, 6, 1, 3, 5]).unwrap(); // x -> 2x mod 7
        let f21 = PermGroup::from_generators(7, vec![t.clone(), m]).unwrap();
        assert_eq!(f21.order(), 21);
        assert!(matches!(
            generalized_centralizer(&f21, &t),
            Err(Error::NotReal)
        ));
    }

    #[test]
    fn element_p_parts() {
        let x = cyc(5, &[&[0, 1], &[2, 3, 4]]);
        assert_eq!(element_p_part(&x, 3).unwrap(), cyc(5, &[&[2, 3, 4]]));
        assert_eq!(element_p_part(&x, 2).unwrap(), cyc(5, &[&[0, 1]]));

        let five = cyc(5, &[&[0, 1, 2, 3, 4]]);
        assert!(element_p_part(&five, 3).unwrap().is_identity());

        let six = cyc(6, &[&[0, 1, 2, 3, 4, 5]]);
        let two_part = element_p_part(&six, 2).unwrap();
        assert_eq!(two_part, six.power(3));
        assert_eq!(two_part, cyc(6, &[&[0, 3], &[1, 4], &[2, 5]]));

        // x_p * x_p' = x and the parts commute.
        let p2 = element_p_part(&six, 2).unwrap();
        let p3 = element_p_part(&six, 3).unwrap();
        assert_eq!(&p2 * &p3, six);
        assert_eq!(&p3 * &p2, six);
        assert!(element_p_part(&six, 4).is_err());
    }
}
