//! Permutation groups given by generators, backed by a deterministic
//! Schreier-Sims stabilizer chain.
//!
//! The chain gives the group order, a membership test (sifting), and a
//! bounded element stream. Base points are always the smallest point moved
//! by some current strong generator, so rebuilding from the same generator
//! list reproduces the same chain.

use std::sync::{Arc, OnceLock};

use crate::caps::ORDER_CAP;
use crate::classes::ConjClass;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// One level of the stabilizer chain: a base point, the strong generators
/// that stabilize all earlier base points, and the Schreier tree of the
/// base orbit under those generators.
#[derive(Debug)]
struct Level {
    base: u32,
    gens: Vec<Permutation>,
    /// Orbit points in BFS discovery order; `orbit[0] == base`.
    orbit: Vec<u32>,
    /// Schreier vector: for a point in the orbit, the generator index and
    /// parent point it was discovered from. The base maps to itself.
    tree: Vec<Option<(u32, u32)>>,
}

impl Level {
    fn new(degree: usize, base: u32) -> Level {
        Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            tree: vec![None; degree],
        }
    }

    fn recompute_orbit(&mut self) {
        self.tree.iter_mut().for_each(|t| *t = None);
        self.orbit.clear();
        self.orbit.push(self.base);
        self.tree[self.base as usize] = Some((u32::MAX, self.base));
        let mut head = 0;
        while head < self.orbit.len() {
            let p = self.orbit[head];
            head += 1;
            for (gi, g) in self.gens.iter().enumerate() {
                let q = g.apply(p);
                if self.tree[q as usize].is_none() {
                    self.tree[q as usize] = Some((gi as u32, p));
                    self.orbit.push(q);
                }
            }
        }
    }

    fn in_orbit(&self, point: u32) -> bool {
        self.tree[point as usize].is_some()
    }

    /// Transversal element mapping the base to `point`, rebuilt by walking
    /// the Schreier tree.
    fn representative(&self, point: u32, degree: usize) -> Permutation {
        let mut path = Vec::new();
        let mut p = point;
        loop {
            let (gi, parent) = self.tree[p as usize].expect("point not in orbit");
            if gi == u32::MAX {
                break;
            }
            path.push(gi);
            p = parent;
        }
        let mut rep = Permutation::identity(degree);
        for &gi in path.iter().rev() {
            rep = &rep * &self.gens[gi as usize];
        }
        rep
    }
}

#[derive(Debug)]
pub(crate) struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Deterministic Schreier-Sims. Processes levels bottom-up; every
    /// Schreier generator of a level must sift to the identity through the
    /// levels below it before the level counts as verified.
    fn build(degree: usize, gens: &[Permutation]) -> StabilizerChain {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        let nontrivial: Vec<Permutation> =
            gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if nontrivial.is_empty() {
            return chain;
        }
        let base = smallest_moved_point_of_any(&nontrivial).expect("nontrivial generator");
        let mut level = Level::new(degree, base);
        level.gens = nontrivial;
        level.recompute_orbit();
        chain.levels.push(level);

        let mut i = 0usize;
        'process: loop {
            // Invariant: levels below `i` are verified.
            let level = &chain.levels[i];
            let orbit = level.orbit.clone();
            for &p in &orbit {
                let u_p = chain.levels[i].representative(p, degree);
                for gi in 0..chain.levels[i].gens.len() {
                    let g = chain.levels[i].gens[gi].clone();
                    let q = g.apply(p);
                    let u_q_inv = chain.levels[i].representative(q, degree).inverse();
                    let schreier = &(&u_p * &g) * &u_q_inv;
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, stuck) = chain.sift_from(i + 1, schreier);
                    if residue.is_identity() {
                        continue;
                    }
                    let j = match stuck {
                        Some(j) => j,
                        None => {
                            let nb = smallest_moved_point(&residue).expect("nontrivial residue");
                            chain.levels.push(Level::new(degree, nb));
                            chain.levels.len() - 1
                        }
                    };
                    for l in (i + 1)..=j {
                        chain.levels[l].gens.push(residue.clone());
                        chain.levels[l].recompute_orbit();
                    }
                    i = j;
                    continue 'process;
                }
            }
            if i == 0 {
                break;
            }
            i -= 1;
        }
        chain
    }

    /// Sifts `g` through levels `from..`. Returns the residue and, when the
    /// residue's base image fell outside some level's orbit, that level.
    fn sift_from(&self, from: usize, g: Permutation) -> (Permutation, Option<usize>) {
        let mut h = g;
        for (idx, level) in self.levels.iter().enumerate().skip(from) {
            let delta = h.apply(level.base);
            if !level.in_orbit(delta) {
                return (h, Some(idx));
            }
            let u = level.representative(delta, self.degree);
            h = &h * &u.inverse();
        }
        (h, None)
    }

    fn order_capped(&self, cap: u64) -> Result<u64> {
        let mut order: u128 = 1;
        for level in &self.levels {
            order *= level.orbit.len() as u128;
            if order > u128::from(cap) {
                return Err(Error::OrderCapExceeded { cap });
            }
        }
        Ok(order as u64)
    }

    fn contains(&self, p: &Permutation) -> bool {
        let (residue, stuck) = self.sift_from(0, p.clone());
        stuck.is_none() && residue.is_identity()
    }

    /// Canonical representative of the right coset `self * g` (the set of
    /// all `n * g` for `n` in this group): at each chain level, greedily
    /// pick the orbit point whose image under the running product is
    /// smallest. Any two elements of a coset canonicalize identically.
    fn canonical_coset_rep(&self, g: &Permutation) -> Permutation {
        let mut h = g.clone();
        for level in &self.levels {
            let best = level
                .orbit
                .iter()
                .copied()
                .min_by_key(|&w| h.apply(w))
                .expect("orbit is never empty");
            if best != level.base {
                let u = level.representative(best, self.degree);
                h = &u * &h;
            }
        }
        h
    }
}

fn smallest_moved_point(p: &Permutation) -> Option<u32> {
    (0..p.degree() as u32).find(|&i| p.apply(i) != i)
}

fn smallest_moved_point_of_any(gens: &[Permutation]) -> Option<u32> {
    gens.iter().filter_map(smallest_moved_point).min()
}

/// A finite permutation group with its stabilizer chain. Immutable after
/// construction; every operation is a pure read.
#[derive(Debug)]
pub struct PermGroup {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabilizerChain,
    order: u64,
    pub(crate) class_cache: OnceLock<Arc<[ConjClass]>>,
}

impl PermGroup {
    /// Builds a group from generators with the default order cap.
    pub fn from_generators(degree: usize, gens: Vec<Permutation>) -> Result<PermGroup> {
        PermGroup::from_generators_capped(degree, gens, ORDER_CAP)
    }

    pub fn from_generators_capped(
        degree: usize,
        gens: Vec<Permutation>,
        order_cap: u64,
    ) -> Result<PermGroup> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let chain = StabilizerChain::build(degree, &gens);
        let order = chain.order_capped(order_cap)?;
        Ok(PermGroup {
            name: String::new(),
            degree,
            generators: gens,
            chain,
            order,
            class_cache: OnceLock::new(),
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> PermGroup {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// True iff every generator commutes with every other.
    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a * b == b * a))
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// Membership test: `p` sifts to the identity through the chain.
    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.chain.contains(p)
    }

    /// Canonical representative of the right coset `self * g`, computed
    /// through the stabilizer chain. Used by the quotient coset action.
    pub(crate) fn chain_canonical_coset_rep(&self, g: &Permutation) -> Permutation {
        self.chain.canonical_coset_rep(g)
    }

    /// Streams every element exactly once in a deterministic order.
    /// Refuses when the group order exceeds `cap`; this is the brute-force
    /// oracle backend and stays bounded by design.
    pub fn elements(&self, cap: u64) -> Result<Elements> {
        if self.order > cap {
            return Err(Error::ElementsCapExceeded {
                order: self.order,
                cap,
            });
        }
        // Per-level transversals, aligned with the sorted orbit.
        let mut transversals: Vec<Vec<Permutation>> = Vec::new();
        for level in &self.chain.levels {
            let mut pts = level.orbit.clone();
            pts.sort_unstable();
            transversals.push(
                pts.iter()
                    .map(|&p| level.representative(p, self.degree))
                    .collect(),
            );
        }
        Ok(Elements::new(self.degree, transversals))
    }

    /// Collects all elements (order must not exceed `cap`).
    pub fn elements_vec(&self, cap: u64) -> Result<Vec<Permutation>> {
        Ok(self.elements(cap)?.collect())
    }
}

/// Deterministic element stream: an odometer over the chain transversals.
/// The element for counter state (c_k, ..., c_1) is
/// `t_k[c_k] * ... * t_1[c_1]`, with the first level spinning fastest.
pub struct Elements {
    degree: usize,
    transversals: Vec<Vec<Permutation>>,
    counters: Vec<usize>,
    /// `partial[l]` = product of transversal picks from the deepest level
    /// down to level `l`.
    partial: Vec<Permutation>,
    done: bool,
}

impl Elements {
    fn new(degree: usize, transversals: Vec<Vec<Permutation>>) -> Elements {
        let k = transversals.len();
        let mut e = Elements {
            degree,
            transversals,
            counters: vec![0; k],
            partial: vec![Permutation::identity(degree); k],
            done: false,
        };
        e.refresh_from(k);
        e
    }

    /// Recomputes partial products for levels `upto-1 .. 0`.
    fn refresh_from(&mut self, upto: usize) {
        for l in (0..upto).rev() {
            let pick = &self.transversals[l][self.counters[l]];
            self.partial[l] = if l + 1 < self.partial.len() {
                &self.partial[l + 1] * pick
            } else {
                pick.clone()
            };
        }
    }
}

impl Iterator for Elements {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let current = if self.partial.is_empty() {
            Permutation::identity(self.degree)
        } else {
            self.partial[0].clone()
        };
        // Advance the odometer.
        let mut l = 0;
        loop {
            if l >= self.counters.len() {
                self.done = true;
                break;
            }
            self.counters[l] += 1;
            if self.counters[l] < self.transversals[l].len() {
                self.refresh_from(l + 1);
                break;
            }
            self.counters[l] = 0;
            l += 1;
        }
        Some(current)
    }
}
