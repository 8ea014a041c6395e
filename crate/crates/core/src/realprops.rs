//! Arithmetic predicates on real class sizes: the real spectrum of a
//! group, properties T and WT, good elements, the equal-2-part and
//! two-class-size hypotheses, and the Zsigmondy primitive-prime utility.

use serde::Serialize;

use crate::arith::{
    self, factorize, is_odd_prime_power, is_prime_power, is_two_power, mod_pow, p_part,
};
use crate::classes::{conjugacy_classes, ConjClass};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::structure::{center, is_p_nilpotent, o_upper_p_prime};

/// One real conjugacy class in the spectrum.
#[derive(Debug, Clone)]
pub struct SpectrumEntry {
    pub representative: Permutation,
    pub element_order: u64,
    pub size: u64,
    pub is_central: bool,
    pub size_two_part: u64,
    pub reversing_witness: Option<Permutation>,
}

/// All real classes of a group, ordered deterministically, with the
/// odd-prime-power-order subset marked (element order 1 counts in).
#[derive(Debug, Clone)]
pub struct RealSpectrum {
    pub group: String,
    pub entries: Vec<SpectrumEntry>,
    pub odd_prime_power_order: Vec<usize>,
}

impl RealSpectrum {
    pub fn odd_ppo_entries(&self) -> impl Iterator<Item = &SpectrumEntry> {
        self.odd_prime_power_order.iter().map(|&i| &self.entries[i])
    }

    pub fn noncentral(&self) -> impl Iterator<Item = &SpectrumEntry> {
        self.entries.iter().filter(|e| !e.is_central)
    }
}

pub fn real_spectrum(g: &PermGroup) -> Result<RealSpectrum> {
    let classes = conjugacy_classes(g)?;
    let entries: Vec<SpectrumEntry> = classes
        .iter()
        .filter(|c| c.is_real)
        .map(|c| SpectrumEntry {
            representative: c.representative.clone(),
            element_order: c.element_order,
            size: c.size,
            is_central: c.is_central(),
            size_two_part: p_part(c.size, 2).expect("2 is prime"),
            reversing_witness: c.reversing_witness.clone(),
        })
        .collect();
    let odd_ppo = entries
        .iter()
        .enumerate()
        .filter(|(_, e)| is_odd_prime_power(e.element_order))
        .map(|(i, _)| i)
        .collect();
    Ok(RealSpectrum {
        group: g.name().to_string(),
        entries,
        odd_prime_power_order: odd_ppo,
    })
}

/// Verdict of a class-size property check, carrying the violating class
/// when the property fails.
#[derive(Debug, Clone)]
pub struct PropertyVerdict {
    pub holds: bool,
    pub violating: Option<ConjClass>,
}

fn find_violation(g: &PermGroup, reject: impl Fn(u64) -> bool) -> Result<PropertyVerdict> {
    let classes = conjugacy_classes(g)?;
    let violating = classes
        .iter()
        .find(|c| c.is_real && is_odd_prime_power(c.element_order) && reject(c.size))
        .cloned();
    Ok(PropertyVerdict {
        holds: violating.is_none(),
        violating,
    })
}

/// Property T: no real class of odd prime power order has size divisible
/// by 4.
pub fn has_property_t(g: &PermGroup) -> Result<PropertyVerdict> {
    find_violation(g, |size| size % 4 == 0)
}

/// Property WT: every real class of odd prime power order has size that is
/// a 2-power or not divisible by 4.
pub fn has_property_wt(g: &PermGroup) -> Result<PropertyVerdict> {
    find_violation(g, |size| size % 4 == 0 && !is_two_power(size))
}

/// Good elements: real, odd prime power order, class size divisible by 4,
/// element order coprime to |Z(G)|. Central classes never qualify (their
/// size is 1).
pub fn good_elements(g: &PermGroup) -> Result<Vec<ConjClass>> {
    let z_order = center(g)?.order();
    let classes = conjugacy_classes(g)?;
    Ok(classes
        .iter()
        .filter(|c| {
            c.is_real
                && is_odd_prime_power(c.element_order)
                && c.size % 4 == 0
                && arith::gcd(c.element_order, z_order) == 1
        })
        .cloned()
        .collect())
}

/// Whether the sizes of all noncentral real classes share one 2-part.
/// Vacuously true when there are no noncentral real classes.
pub fn conjecture_c_hypothesis(g: &PermGroup) -> Result<bool> {
    let spectrum = real_spectrum(g)?;
    let mut parts = spectrum.noncentral().map(|e| e.size_two_part);
    let Some(first) = parts.next() else {
        return Ok(true);
    };
    Ok(parts.all(|p| p == first))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ScanVerdict {
    /// Hypothesis holds and the predicted conclusion holds.
    Confirmed,
    /// Hypothesis holds but the conclusion fails: a reportable finding.
    Counterexample,
    /// Hypothesis fails; nothing is claimed.
    Vacuous,
}

/// Checks the equal-2-part hypothesis against the predicted conclusion
/// that O^{2'}(G) is 2-nilpotent (and, in particular, G is solvable).
pub fn conjecture_c_check(g: &PermGroup) -> Result<ScanVerdict> {
    if !conjecture_c_hypothesis(g)? {
        return Ok(ScanVerdict::Vacuous);
    }
    let h = o_upper_p_prime(g, 2)?;
    if is_p_nilpotent(&h.group, 2)? {
        Ok(ScanVerdict::Confirmed)
    } else {
        Ok(ScanVerdict::Counterexample)
    }
}

/// Whether all noncentral real elements share one centralizer order,
/// i.e. the group has at most two real class sizes.
pub fn navarro_hypothesis(g: &PermGroup) -> Result<bool> {
    let spectrum = real_spectrum(g)?;
    let mut sizes = spectrum.noncentral().map(|e| e.size);
    let Some(first) = sizes.next() else {
        return Ok(true);
    };
    Ok(sizes.all(|s| s == first))
}

/// Two-real-class-sizes hypothesis against the predicted solvability.
pub fn navarro_check(g: &PermGroup) -> Result<ScanVerdict> {
    if !navarro_hypothesis(g)? {
        return Ok(ScanVerdict::Vacuous);
    }
    if crate::structure::is_solvable(g)? {
        Ok(ScanVerdict::Confirmed)
    } else {
        Ok(ScanVerdict::Counterexample)
    }
}

/// Largest q^n - 1 accepted by [`zsigmondy_l`]: values must factor by
/// trial division at desk scale.
const ZSIGMONDY_VALUE_CAP: u128 = 10_000_000_000_000;

/// The smallest primitive prime divisor of q^n - 1: a prime dividing
/// q^n - 1 but no q^m - 1 for 1 <= m < n. Returns `None` exactly when no
/// such prime exists, which for q >= 2, n >= 3 happens only at (2, 6).
pub fn zsigmondy_l(q: u64, n: u32) -> Result<Option<u64>> {
    if q < 2 || n < 3 {
        return Err(Error::InvalidParameters(format!(
            "zsigmondy_l requires q >= 2 and n >= 3, got ({q}, {n})"
        )));
    }
    let value = arith::checked_pow_u128(q, n)? - 1;
    if value > ZSIGMONDY_VALUE_CAP {
        return Err(Error::InvalidParameters(format!(
            "q^n - 1 = {value} exceeds the exact-arithmetic cap"
        )));
    }
    for (prime, _) in factorize(value as u64) {
        let primitive = (1..n).all(|m| mod_pow(q % prime, u64::from(m), prime) != 1 % prime);
        if primitive {
            return Ok(Some(prime));
        }
    }
    Ok(None)
}

/// The number of decompositions of an n-dimensional vector space over F_q
/// into a direct sum of a 2-dimensional and an (n-2)-dimensional subspace:
/// q^(2(n-2)) * (q^n - 1)(q^(n-1) - 1) / ((q - 1)(q^2 - 1)), evaluated in
/// exact integers.
///
/// The count is used for fields of characteristic 2, where q^(2(n-2))
/// makes it divisible by 4; odd q is rejected (for q = 3, n = 3 the count
/// is 117, so the divisibility claim genuinely needs even q).
pub fn decomposition_count_t(n: u32, q: u64) -> Result<u128> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!(
            "decomposition count requires n >= 3, got {n}"
        )));
    }
    if !is_prime_power(q) || !q.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!("{q} is not a power of 2")));
    }
    let qn = arith::checked_pow_u128(q, n)?;
    let qn1 = arith::checked_pow_u128(q, n - 1)?;
    let front = arith::checked_pow_u128(q, 2 * (n - 2))?;
    let numerator = front
        .checked_mul(qn - 1)
        .and_then(|v| v.checked_mul(qn1 - 1))
        .ok_or(Error::Overflow)?;
    let denominator = u128::from(q - 1) * u128::from(q * q - 1);
    if numerator % denominator != 0 {
        return Err(Error::NonIntegerDivision);
    }
    let t = numerator / denominator;
    if t % 4 != 0 {
        return Err(Error::NonIntegerDivision);
    }
    Ok(t)
}
