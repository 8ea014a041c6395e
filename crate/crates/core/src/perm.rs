//! Permutations of `{0..degree-1}` stored as image sequences.
//!
//! The composition convention everywhere in this crate is **left acts
//! first**: `compose(p, q)` maps `i` to `q[p[i]]`, and the word `p * q`
//! means "apply `p`, then `q`". Conjugation is `x^g = g^-1 * x * g`, so
//! `x^(g*h) = (x^g)^h` holds under this convention.

use std::fmt;
use std::ops::Mul;

use crate::arith;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image sequence, validating that the
    /// sequence is a bijection of `{0..len-1}`.
    pub fn from_images(images: Vec<u32>) -> Result<Permutation> {
        if images.is_empty() {
            return Err(Error::ZeroDegree);
        }
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &img in &images {
            let i = img as usize;
            if i >= degree {
                return Err(Error::PointOutOfRange {
                    point: u64::from(img),
                    degree,
                });
            }
            if seen[i] {
                return Err(Error::NotABijection);
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation of the given degree from a list of cycles;
    /// points in no cycle are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Permutation> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                let i = pt as usize;
                if i >= degree {
                    return Err(Error::PointOutOfRange {
                        point: u64::from(pt),
                        degree,
                    });
                }
                if seen[i] {
                    return Err(Error::RepeatedPoint(u64::from(pt)));
                }
                seen[i] = true;
                images[i] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &img)| i as u32 == img)
    }

    /// Checked composition: apply `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self * other)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u32;
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// `k`-fold composition of `self`; negative `k` powers the inverse.
    pub fn power(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut exp = k.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            exp >>= 1;
        }
        acc
    }

    /// Order of the permutation: the lcm of its cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_lengths().into_iter().fold(1u64, arith::lcm)
    }

    /// Conjugate `self^g = g^-1 * self * g` in a single pass.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), g.degree());
        let mut images = vec![0u32; self.degree()];
        for i in 0..self.degree() {
            images[g.images[i] as usize] = g.images[self.images[i] as usize];
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Decomposition into cycles of length >= 2, each cycle starting at its
    /// smallest point, cycles sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() as u32 {
            if seen[start as usize] || self.apply(start) == start {
                seen[start as usize] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p as usize] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    fn cycle_lengths(&self) -> Vec<u64> {
        self.cycles().iter().map(|c| c.len() as u64).collect()
    }

    /// Cycle notation with points shifted by `offset` (1 for the file and
    /// CLI convention, 0 for internal dumps). The identity prints as `()`.
    pub fn cycle_string(&self, offset: u32) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for cycle in cycles {
            s.push('(');
            for (k, pt) in cycle.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                s.push_str(&(pt + offset).to_string());
            }
            s.push(')');
        }
        s
    }

    /// Parses cycle notation such as `"(1,2,3)(4,5)"`. Points are read in
    /// the given base (`one_based`) and shifted down to 0-based internally.
    /// `"()"` and the empty string denote the identity.
    pub fn parse_cycles(degree: usize, text: &str, one_based: bool) -> Result<Permutation> {
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let trimmed = text.trim();
        let mut rest = trimmed;
        while !rest.is_empty() {
            let Some(open) = rest.find('(') else {
                return Err(Error::MalformedFile(format!(
                    "bad cycle string {trimmed:?}"
                )));
            };
            let Some(close) = rest[open..].find(')') else {
                return Err(Error::MalformedFile(format!(
                    "unclosed cycle in {trimmed:?}"
                )));
            };
            let body = &rest[open + 1..open + close];
            rest = rest[open + close + 1..].trim_start();
            let mut cycle = Vec::new();
            for tok in body.split([',', ' ']).filter(|t| !t.is_empty()) {
                let raw: u64 = tok.trim().parse().map_err(|_| {
                    Error::MalformedFile(format!("bad point {tok:?} in cycle string"))
                })?;
                let pt = if one_based {
                    raw.checked_sub(1)
                        .ok_or(Error::PointOutOfRange { point: raw, degree })?
                } else {
                    raw
                };
                if pt >= degree as u64 {
                    return Err(Error::PointOutOfRange { point: raw, degree });
                }
                cycle.push(pt as u32);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
        }
        Permutation::from_cycles(degree, &cycles)
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// `p * q`: apply `p` first, then `q`. Panics on degree mismatch; use
    /// [`Permutation::compose`] at input boundaries.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            rhs.degree(),
            "degree mismatch in composition"
        );
        let images: Vec<u32> = self
            .images
            .iter()
            .map(|&i| rhs.images[i as usize])
            .collect();
        Permutation {
            images: images.into_boxed_slice(),
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self.cycle_string(0))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string(1))
    }
}
