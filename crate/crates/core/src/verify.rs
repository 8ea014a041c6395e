//! The theorem-verification harness: runs the lemma and theorem suites
//! over a group, aggregates corpus-wide results, and emits deterministic,
//! replayable reports.
//!
//! Theorem suites check implications only (hypothesis => conclusion);
//! groups where the hypothesis fails are reported VACUOUS, distinct from
//! PASS, so non-vacuous coverage stays auditable. Cap breaches become
//! SKIPPED with a reason, never failures. Every FAIL and COUNTEREXAMPLE
//! carries a witness with enough data to replay the assertion.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arith::{self, factorize, is_odd_prime_power, p_part};
use crate::caps::Caps;
use crate::classes::{class_of, conjugacy_classes, ConjClass};
use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::realprops::{
    conjecture_c_check, good_elements, has_property_t, has_property_wt, navarro_check,
    real_spectrum, PropertyVerdict, ScanVerdict,
};
use crate::structure::{
    center, is_p_closed, is_p_nilpotent, is_solvable, normal_subgroups, o_p, o_p_prime,
    o_upper_p_prime, quotient, QuotientGroup, SubgroupHandle,
};
use crate::zoo::{build, GroupSpec};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum SuiteKind {
    Lemmas,
    TheoremA,
    TheoremB,
    Prop45,
    Prop31,
    Lemma41,
    ConjC,
    Navarro,
}

impl SuiteKind {
    pub const VERIFY_DEFAULT: [SuiteKind; 6] = [
        SuiteKind::Lemmas,
        SuiteKind::TheoremA,
        SuiteKind::TheoremB,
        SuiteKind::Prop45,
        SuiteKind::Prop31,
        SuiteKind::Lemma41,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Lemmas => "lemmas",
            SuiteKind::TheoremA => "theoremA",
            SuiteKind::TheoremB => "theoremB",
            SuiteKind::Prop45 => "prop45",
            SuiteKind::Prop31 => "prop31",
            SuiteKind::Lemma41 => "lemma41",
            SuiteKind::ConjC => "conjC",
            SuiteKind::Navarro => "navarro",
        }
    }

    pub fn parse(text: &str) -> Option<SuiteKind> {
        match text {
            "lemmas" => Some(SuiteKind::Lemmas),
            "theoremA" => Some(SuiteKind::TheoremA),
            "theoremB" => Some(SuiteKind::TheoremB),
            "prop45" => Some(SuiteKind::Prop45),
            "prop31" => Some(SuiteKind::Prop31),
            "lemma41" => Some(SuiteKind::Lemma41),
            "conjC" => Some(SuiteKind::ConjC),
            "navarro" => Some(SuiteKind::Navarro),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum SuiteStatus {
    Pass,
    Fail,
    Skipped,
    Vacuous,
    Counterexample,
}

/// A replayable record of a failing assertion.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Witness {
    pub schema_version: u32,
    pub group: GroupSpec,
    pub suite: String,
    pub detail: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub status: SuiteStatus,
    pub assertions: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
}

impl SuiteResult {
    fn passed(kind: SuiteKind, assertions: u64) -> SuiteResult {
        SuiteResult {
            suite: kind.name().to_string(),
            status: SuiteStatus::Pass,
            assertions,
            reason: None,
            witnesses: Vec::new(),
        }
    }

    fn vacuous(kind: SuiteKind, reason: impl Into<String>) -> SuiteResult {
        SuiteResult {
            suite: kind.name().to_string(),
            status: SuiteStatus::Vacuous,
            assertions: 0,
            reason: Some(reason.into()),
            witnesses: Vec::new(),
        }
    }

    fn skipped(kind: SuiteKind, reason: impl Into<String>) -> SuiteResult {
        SuiteResult {
            suite: kind.name().to_string(),
            status: SuiteStatus::Skipped,
            assertions: 0,
            reason: Some(reason.into()),
            witnesses: Vec::new(),
        }
    }

    fn failed(kind: SuiteKind, assertions: u64, witnesses: Vec<Witness>) -> SuiteResult {
        SuiteResult {
            suite: kind.name().to_string(),
            status: SuiteStatus::Fail,
            assertions,
            reason: None,
            witnesses,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RealClassSummary {
    pub representative: String,
    pub element_order: u64,
    pub size: u64,
    pub size_two_part: u64,
    pub central: bool,
    pub odd_prime_power_order: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reversing_witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GoodElementCertificate {
    pub representative: String,
    pub element_order: u64,
    pub size: u64,
    pub size_factorization: String,
    pub size_two_part: u64,
    pub four_divides_size: bool,
    pub center_order: u64,
    pub order_coprime_to_center: bool,
    pub reversing_witness: String,
    pub witness_valid: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupReport {
    pub name: String,
    pub order: u64,
    pub degree: usize,
    pub solvable: bool,
    pub property_t: bool,
    pub property_wt: bool,
    pub center_order: u64,
    pub o2_order: u64,
    pub o2_prime_order: u64,
    pub o_upper_2_prime_order: u64,
    pub two_closed: bool,
    pub two_nilpotent: bool,
    pub o_upper_2_prime_two_nilpotent: bool,
    pub quotient_by_o2_prime_two_closed: bool,
    pub odd_ppo_real_sizes: Vec<u64>,
    pub real_classes: Vec<RealClassSummary>,
    pub good_elements: Vec<GoodElementCertificate>,
    pub conjecture_c: ScanVerdict,
    pub navarro: ScanVerdict,
    pub suites: Vec<SuiteResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Precomputed per-group facts shared by the suites.
struct Facts {
    t: PropertyVerdict,
    wt: PropertyVerdict,
    solvable: bool,
    center_order: u64,
    o2_order: u64,
    o2_prime: SubgroupHandle,
    o_upper: SubgroupHandle,
    two_closed: bool,
    two_nilpotent: bool,
    o_upper_two_nilpotent: bool,
    quot_two_closed: bool,
    good: Vec<ConjClass>,
    conjecture_c: ScanVerdict,
    navarro: ScanVerdict,
}

fn compute_facts(g: &PermGroup) -> Result<Facts> {
    let t = has_property_t(g)?;
    let wt = has_property_wt(g)?;
    let solvable = is_solvable(g)?;
    let center_order = center(g)?.order();
    let o2 = o_p(g, 2)?;
    let o2_prime = o_p_prime(g, 2)?;
    let o_upper = o_upper_p_prime(g, 2)?;
    let two_part = p_part(g.order(), 2)?;
    let two_closed = o2.order() == two_part;
    let two_nilpotent = g.order() / o2_prime.order() == two_part;
    let o_upper_two_nilpotent = is_p_nilpotent(&o_upper.group, 2)?;
    let quot = quotient(g, &o2_prime)?;
    let quot_two_closed = is_p_closed(&quot.image, 2)?;
    Ok(Facts {
        t,
        wt,
        solvable,
        center_order,
        o2_order: o2.order(),
        o2_prime,
        o_upper,
        two_closed,
        two_nilpotent,
        o_upper_two_nilpotent,
        quot_two_closed,
        good: good_elements(g)?,
        conjecture_c: conjecture_c_check(g)?,
        navarro: navarro_check(g)?,
    })
}

fn witness(spec: &GroupSpec, suite: SuiteKind, detail: Value) -> Witness {
    Witness {
        schema_version: SCHEMA_VERSION,
        group: spec.clone(),
        suite: suite.name().to_string(),
        detail,
    }
}

fn images_json(p: &Permutation) -> Value {
    json!(p.images().to_vec())
}

fn factorization_string(n: u64) -> String {
    if n == 1 {
        return "1".to_string();
    }
    factorize(n)
        .iter()
        .map(|&(p, a)| {
            if a == 1 {
                p.to_string()
            } else {
                format!("{p}^{a}")
            }
        })
        .collect::<Vec<_>>()
        .join(" * ")
}

/// Shared lattice data for the quantified lemma suites.
struct LatticeCtx {
    subgroups: Vec<SubgroupHandle>,
    quotients: Vec<QuotientGroup>,
}

fn lattice_ctx(g: &PermGroup, cap: u64) -> Result<LatticeCtx> {
    let subgroups = normal_subgroups(g, cap)?;
    let quotients = subgroups
        .iter()
        .map(|n| quotient(g, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(LatticeCtx {
        subgroups,
        quotients,
    })
}

struct LemmaRun<'a> {
    g: &'a PermGroup,
    spec: &'a GroupSpec,
    caps: &'a Caps,
    assertions: u64,
    witnesses: Vec<Witness>,
}

impl<'a> LemmaRun<'a> {
    fn check(&mut self, ok: bool, lemma: &str, detail: impl FnOnce() -> Value) {
        self.assertions += 1;
        if !ok {
            self.witnesses.push(witness(
                self.spec,
                SuiteKind::Lemmas,
                json!({ "lemma": lemma, "data": detail() }),
            ));
        }
    }

    /// Class sizes in subgroups divide class sizes in the group.
    fn conj_sizes_in_subgroup(&mut self, lat: &LatticeCtx) -> Result<()> {
        for n in &lat.subgroups {
            for c in conjugacy_classes(&n.group)?.iter() {
                let g_size = class_of(self.g, &c.representative)?.size;
                self.check(g_size % c.size == 0, "2.1(1)", || {
                    json!({
                        "subgroup_order": n.order(),
                        "element": images_json(&c.representative),
                        "size_in_subgroup": c.size,
                        "size_in_group": g_size,
                    })
                });
            }
        }
        Ok(())
    }

    /// Coset class sizes in quotients divide class sizes in the group.
    fn conj_sizes_in_quotient(&mut self, lat: &LatticeCtx) -> Result<()> {
        let classes = conjugacy_classes(self.g)?;
        for (n, q) in lat.subgroups.iter().zip(&lat.quotients) {
            for c in classes.iter() {
                let image = q.project(&c.representative)?;
                let q_size = class_of(&q.image, &image)?.size;
                self.check(c.size % q_size == 0, "2.1(2)", || {
                    json!({
                        "kernel_order": n.order(),
                        "element": images_json(&c.representative),
                        "size_in_group": c.size,
                        "size_in_quotient": q_size,
                    })
                });
            }
        }
        Ok(())
    }

    /// Central kernels of coprime order preserve class sizes exactly.
    fn central_kernel_sizes(&mut self, lat: &LatticeCtx) -> Result<()> {
        let z = center(self.g)?;
        let classes = conjugacy_classes(self.g)?;
        for (n, q) in lat.subgroups.iter().zip(&lat.quotients) {
            if !n.is_contained_in(&z.group) {
                continue;
            }
            for c in classes.iter() {
                if arith::gcd(c.element_order, n.order()) != 1 {
                    continue;
                }
                let image = q.project(&c.representative)?;
                let q_size = class_of(&q.image, &image)?.size;
                self.check(q_size == c.size, "2.2", || {
                    json!({
                        "central_kernel_order": n.order(),
                        "element": images_json(&c.representative),
                        "size_in_group": c.size,
                        "size_in_quotient": q_size,
                    })
                });
            }
        }
        Ok(())
    }

    /// Real class facts: odd size forces involutions; powers of real
    /// elements are real; the identity is the unique real element iff the
    /// group order is odd.
    fn real_element_facts(&mut self) -> Result<()> {
        let classes = conjugacy_classes(self.g)?;
        let spectrum = real_spectrum(self.g)?;
        for c in classes.iter().filter(|c| c.is_real) {
            if c.size % 2 == 1 {
                let square = &c.representative * &c.representative;
                self.check(square.is_identity(), "2.3(1)", || {
                    json!({
                        "element": images_json(&c.representative),
                        "size": c.size,
                        "element_order": c.element_order,
                    })
                });
            }
            for k in 0..c.element_order {
                let power = c.representative.power(k as i64);
                let real = class_of(self.g, &power)?.is_real;
                self.check(real, "2.3(2)", || {
                    json!({
                        "element": images_json(&c.representative),
                        "power": k,
                    })
                });
            }
        }
        let only_identity_real =
            spectrum.entries.len() == 1 && spectrum.entries[0].element_order == 1;
        self.check(
            only_identity_real == (self.g.order() % 2 == 1),
            "2.3(3)",
            || {
                json!({
                    "real_class_count": spectrum.entries.len(),
                    "group_order": self.g.order(),
                })
            },
        );
        Ok(())
    }

    /// Odd-index normal subgroups absorb all real elements.
    fn odd_index_absorbs_reals(&mut self, lat: &LatticeCtx) -> Result<()> {
        let classes = conjugacy_classes(self.g)?;
        for n in &lat.subgroups {
            if (self.g.order() / n.order()).is_multiple_of(2) {
                continue;
            }
            for c in classes.iter().filter(|c| c.is_real) {
                let inside = n.contains(&c.representative);
                let real_in_n = inside && class_of(&n.group, &c.representative)?.is_real;
                self.check(inside && real_in_n, "2.3(4)", || {
                    json!({
                        "subgroup_order": n.order(),
                        "element": images_json(&c.representative),
                        "in_subgroup": inside,
                    })
                });
            }
        }
        Ok(())
    }

    /// Every reversing conjugator can be replaced by the 2-element obtained
    /// by raising it to its odd part.
    fn reversing_by_two_element(&mut self) -> Result<()> {
        let classes = conjugacy_classes(self.g)?;
        for c in classes.iter().filter(|c| c.is_real) {
            let Some(w) = &c.reversing_witness else {
                continue;
            };
            let m = arith::p_prime_part(w.order(), 2)?;
            let t = w.power(m as i64);
            let t_is_two_element = arith::p_part(t.order(), 2)? == t.order();
            let reverses = c.representative.conjugate_by(&t) == c.representative.inverse();
            self.check(t_is_two_element && reverses, "2.4", || {
                json!({
                    "element": images_json(&c.representative),
                    "witness": images_json(w),
                    "two_element": images_json(&t),
                })
            });
        }
        Ok(())
    }

    /// Lifting: a real coset with representative of order coprime to |N|
    /// consists of real elements of G at the coprime orders.
    fn lift_coprime(&mut self, lat: &LatticeCtx) -> Result<()> {
        for (n, q) in lat.subgroups.iter().zip(&lat.quotients) {
            if n.order() > self.caps.coset_search {
                continue;
            }
            for qc in conjugacy_classes(&q.image)?.iter().filter(|c| c.is_real) {
                let rep = q.lift(&qc.representative)?;
                for nn in n.group.elements(self.caps.coset_search)? {
                    let x = &nn * &rep;
                    if arith::gcd(x.order(), n.order()) != 1 {
                        continue;
                    }
                    let real = class_of(self.g, &x)?.is_real;
                    self.check(real, "2.5(1)", || {
                        json!({
                            "kernel_order": n.order(),
                            "coset_element": images_json(&x),
                        })
                    });
                }
            }
        }
        Ok(())
    }

    /// Odd-prime-power real cosets contain a p-power-order real element.
    fn lift_prime_power(&mut self, lat: &LatticeCtx) -> Result<()> {
        for (n, q) in lat.subgroups.iter().zip(&lat.quotients) {
            if n.order() > self.caps.coset_search {
                continue;
            }
            for qc in conjugacy_classes(&q.image)?.iter() {
                if !qc.is_real || !is_odd_prime_power(qc.element_order) {
                    continue;
                }
                let rep = q.lift(&qc.representative)?;
                let mut found = false;
                for nn in n.group.elements(self.caps.coset_search)? {
                    let y = &nn * &rep;
                    let order = y.order();
                    let is_p_power = if qc.element_order == 1 {
                        order == 1
                    } else {
                        let p = factorize(qc.element_order)[0].0;
                        arith::p_part(order, p)? == order
                    };
                    if is_p_power && class_of(self.g, &y)?.is_real {
                        found = true;
                        break;
                    }
                }
                self.check(found, "2.6", || {
                    json!({
                        "kernel_order": n.order(),
                        "coset_rep": images_json(&rep),
                        "coset_order_in_quotient": qc.element_order,
                    })
                });
            }
        }
        Ok(())
    }

    /// All nontrivial real elements have even order iff the Sylow
    /// 2-subgroup is normal; checked in both directions.
    fn no_odd_order_reals_iff_two_closed(&mut self) -> Result<()> {
        let spectrum = real_spectrum(self.g)?;
        let all_even = spectrum
            .entries
            .iter()
            .all(|e| e.element_order == 1 || e.element_order % 2 == 0);
        let closed = is_p_closed(self.g, 2)?;
        self.check(all_even == closed, "2.7", || {
            json!({
                "all_nontrivial_reals_even": all_even,
                "two_closed": closed,
            })
        });
        Ok(())
    }
}

fn run_lemma_suite(g: &PermGroup, spec: &GroupSpec, caps: &Caps) -> SuiteResult {
    if g.order() > caps.lemma_suite {
        return SuiteResult::skipped(
            SuiteKind::Lemmas,
            format!(
                "group order {} exceeds lemma-suite cap {}",
                g.order(),
                caps.lemma_suite
            ),
        );
    }
    let run = (|| -> Result<LemmaRun> {
        let lat = lattice_ctx(g, caps.normal_scan)?;
        let mut run = LemmaRun {
            g,
            spec,
            caps,
            assertions: 0,
            witnesses: Vec::new(),
        };
        run.conj_sizes_in_subgroup(&lat)?;
        run.conj_sizes_in_quotient(&lat)?;
        run.central_kernel_sizes(&lat)?;
        run.real_element_facts()?;
        run.odd_index_absorbs_reals(&lat)?;
        run.reversing_by_two_element()?;
        run.lift_coprime(&lat)?;
        run.lift_prime_power(&lat)?;
        run.no_odd_order_reals_iff_two_closed()?;
        Ok(run)
    })();
    match run {
        Ok(run) if run.witnesses.is_empty() => {
            SuiteResult::passed(SuiteKind::Lemmas, run.assertions)
        }
        Ok(run) => SuiteResult::failed(SuiteKind::Lemmas, run.assertions, run.witnesses),
        Err(e) => SuiteResult::skipped(SuiteKind::Lemmas, e.to_string()),
    }
}

fn run_theorem_a(spec: &GroupSpec, facts: &Facts) -> SuiteResult {
    if !facts.wt.holds {
        return SuiteResult::vacuous(SuiteKind::TheoremA, "property WT fails");
    }
    if facts.solvable {
        SuiteResult::passed(SuiteKind::TheoremA, 1)
    } else {
        SuiteResult::failed(
            SuiteKind::TheoremA,
            1,
            vec![witness(
                spec,
                SuiteKind::TheoremA,
                json!({ "property_wt": true, "solvable": false }),
            )],
        )
    }
}

fn run_theorem_b(spec: &GroupSpec, facts: &Facts) -> SuiteResult {
    if !facts.t.holds {
        return SuiteResult::vacuous(SuiteKind::TheoremB, "property T fails");
    }
    let mut witnesses = Vec::new();
    if !facts.o_upper_two_nilpotent {
        witnesses.push(witness(
            spec,
            SuiteKind::TheoremB,
            json!({
                "claim": "O^{2'}(G) is 2-nilpotent",
                "o_upper_2_prime_order": facts.o_upper.order(),
            }),
        ));
    }
    if !facts.quot_two_closed {
        witnesses.push(witness(
            spec,
            SuiteKind::TheoremB,
            json!({
                "claim": "G/O_{2'}(G) is 2-closed",
                "o_2_prime_order": facts.o2_prime.order(),
            }),
        ));
    }
    if witnesses.is_empty() {
        SuiteResult::passed(SuiteKind::TheoremB, 2)
    } else {
        SuiteResult::failed(SuiteKind::TheoremB, 2, witnesses)
    }
}

fn run_prop45(g: &PermGroup, spec: &GroupSpec, facts: &Facts) -> SuiteResult {
    if !facts.t.holds {
        return SuiteResult::vacuous(SuiteKind::Prop45, "property T fails");
    }
    if facts.o_upper.order() != g.order() {
        return SuiteResult::vacuous(SuiteKind::Prop45, "G != O^{2'}(G)");
    }
    if facts.two_nilpotent {
        SuiteResult::passed(SuiteKind::Prop45, 1)
    } else {
        SuiteResult::failed(
            SuiteKind::Prop45,
            1,
            vec![witness(
                spec,
                SuiteKind::Prop45,
                json!({ "property_t": true, "g_equals_o_upper": true, "two_nilpotent": false }),
            )],
        )
    }
}

fn run_lemma41(g: &PermGroup, spec: &GroupSpec, facts: &Facts, caps: &Caps) -> SuiteResult {
    if !facts.wt.holds {
        return SuiteResult::vacuous(SuiteKind::Lemma41, "property WT fails");
    }
    if g.order() > caps.lemma_suite {
        return SuiteResult::skipped(
            SuiteKind::Lemma41,
            format!(
                "group order {} exceeds lemma-suite cap {}",
                g.order(),
                caps.lemma_suite
            ),
        );
    }
    let outcome = (|| -> Result<(u64, Vec<Witness>)> {
        let lat = lattice_ctx(g, caps.normal_scan)?;
        let mut assertions = 0;
        let mut witnesses = Vec::new();
        for (n, q) in lat.subgroups.iter().zip(&lat.quotients) {
            for (label, sub_verdict, quot_verdict, applies) in [
                (
                    "T",
                    has_property_t(&n.group)?,
                    has_property_t(&q.image)?,
                    facts.t.holds,
                ),
                (
                    "WT",
                    has_property_wt(&n.group)?,
                    has_property_wt(&q.image)?,
                    facts.wt.holds,
                ),
            ] {
                if !applies {
                    continue;
                }
                assertions += 2;
                if !sub_verdict.holds {
                    witnesses.push(witness(
                        spec,
                        SuiteKind::Lemma41,
                        json!({
                            "property": label,
                            "where": "normal subgroup",
                            "subgroup_order": n.order(),
                        }),
                    ));
                }
                if !quot_verdict.holds {
                    witnesses.push(witness(
                        spec,
                        SuiteKind::Lemma41,
                        json!({
                            "property": label,
                            "where": "quotient",
                            "kernel_order": n.order(),
                        }),
                    ));
                }
            }
        }
        Ok((assertions, witnesses))
    })();
    match outcome {
        Ok((assertions, witnesses)) if witnesses.is_empty() => {
            SuiteResult::passed(SuiteKind::Lemma41, assertions)
        }
        Ok((assertions, witnesses)) => {
            SuiteResult::failed(SuiteKind::Lemma41, assertions, witnesses)
        }
        Err(e) => SuiteResult::skipped(SuiteKind::Lemma41, e.to_string()),
    }
}

/// Good-element existence on nonabelian simple targets. The lattice cap is
/// raised to the group order here: simplicity of the large alternating
/// targets must still be verified rather than assumed.
fn run_prop31(g: &PermGroup, spec: &GroupSpec, facts: &Facts, caps: &Caps) -> SuiteResult {
    let lattice = match normal_subgroups(g, caps.normal_scan.max(g.order())) {
        Ok(l) => l,
        Err(e) => return SuiteResult::skipped(SuiteKind::Prop31, e.to_string()),
    };
    if lattice.len() != 2 || g.is_abelian() {
        return SuiteResult::skipped(SuiteKind::Prop31, "not nonabelian simple");
    }
    if facts.good.is_empty() {
        return SuiteResult::failed(
            SuiteKind::Prop31,
            1,
            vec![witness(
                spec,
                SuiteKind::Prop31,
                json!({ "claim": "a nonabelian simple group possesses a good element" }),
            )],
        );
    }
    SuiteResult::passed(SuiteKind::Prop31, 1)
}

fn scan_result(
    kind: SuiteKind,
    spec: &GroupSpec,
    verdict: ScanVerdict,
    detail: Value,
) -> SuiteResult {
    match verdict {
        ScanVerdict::Confirmed => SuiteResult::passed(kind, 1),
        ScanVerdict::Vacuous => SuiteResult::vacuous(kind, "hypothesis fails"),
        ScanVerdict::Counterexample => SuiteResult {
            suite: kind.name().to_string(),
            status: SuiteStatus::Counterexample,
            assertions: 1,
            reason: None,
            witnesses: vec![witness(spec, kind, detail)],
        },
    }
}

fn good_certificates(g: &PermGroup, facts: &Facts) -> Vec<GoodElementCertificate> {
    facts
        .good
        .iter()
        .map(|c| {
            let w = c.reversing_witness.clone().unwrap_or_else(|| g.identity());
            GoodElementCertificate {
                representative: c.representative.cycle_string(1),
                element_order: c.element_order,
                size: c.size,
                size_factorization: factorization_string(c.size),
                size_two_part: p_part(c.size, 2).expect("2 is prime"),
                four_divides_size: c.size % 4 == 0,
                center_order: facts.center_order,
                order_coprime_to_center: arith::gcd(c.element_order, facts.center_order) == 1,
                reversing_witness: w.cycle_string(1),
                witness_valid: c.representative.conjugate_by(&w) == c.representative.inverse(),
            }
        })
        .collect()
}

fn build_report(
    g: &PermGroup,
    spec: &GroupSpec,
    suites: &[SuiteKind],
    caps: &Caps,
) -> Result<GroupReport> {
    let facts = compute_facts(g)?;
    let spectrum = real_spectrum(g)?;
    let real_classes: Vec<RealClassSummary> = spectrum
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| RealClassSummary {
            representative: e.representative.cycle_string(1),
            element_order: e.element_order,
            size: e.size,
            size_two_part: e.size_two_part,
            central: e.is_central,
            odd_prime_power_order: spectrum.odd_prime_power_order.contains(&i),
            reversing_witness: e.reversing_witness.as_ref().map(|w| w.cycle_string(1)),
        })
        .collect();
    let odd_ppo_real_sizes: Vec<u64> = spectrum.odd_ppo_entries().map(|e| e.size).collect();

    let suite_results: Vec<SuiteResult> = suites
        .iter()
        .map(|kind| match kind {
            SuiteKind::Lemmas => run_lemma_suite(g, spec, caps),
            SuiteKind::TheoremA => run_theorem_a(spec, &facts),
            SuiteKind::TheoremB => run_theorem_b(spec, &facts),
            SuiteKind::Prop45 => run_prop45(g, spec, &facts),
            SuiteKind::Lemma41 => run_lemma41(g, spec, &facts, caps),
            SuiteKind::Prop31 => run_prop31(g, spec, &facts, caps),
            SuiteKind::ConjC => scan_result(
                SuiteKind::ConjC,
                spec,
                facts.conjecture_c,
                json!({
                    "hypothesis": "all noncentral real class sizes share one 2-part",
                    "conclusion": "O^{2'}(G) is 2-nilpotent",
                    "o_upper_2_prime_order": facts.o_upper.order(),
                    "solvable": facts.solvable,
                }),
            ),
            SuiteKind::Navarro => scan_result(
                SuiteKind::Navarro,
                spec,
                facts.navarro,
                json!({
                    "hypothesis": "at most two real class sizes",
                    "conclusion": "G is solvable",
                    "solvable": facts.solvable,
                }),
            ),
        })
        .collect();

    Ok(GroupReport {
        name: spec.name.clone(),
        order: g.order(),
        degree: g.degree(),
        solvable: facts.solvable,
        property_t: facts.t.holds,
        property_wt: facts.wt.holds,
        center_order: facts.center_order,
        o2_order: facts.o2_order,
        o2_prime_order: facts.o2_prime.order(),
        o_upper_2_prime_order: facts.o_upper.order(),
        two_closed: facts.two_closed,
        two_nilpotent: facts.two_nilpotent,
        o_upper_2_prime_two_nilpotent: facts.o_upper_two_nilpotent,
        quotient_by_o2_prime_two_closed: facts.quot_two_closed,
        odd_ppo_real_sizes,
        real_classes,
        good_elements: good_certificates(g, &facts),
        conjecture_c: facts.conjecture_c,
        navarro: facts.navarro,
        suites: suite_results,
        timing_ms: None,
        error: None,
    })
}

/// Runs the requested suites over one group. Errors (cap breaches,
/// invalid specs) become a report whose suites are all SKIPPED.
pub fn verify_group(spec: &GroupSpec, suites: &[SuiteKind], caps: &Caps) -> GroupReport {
    let start = Instant::now();
    let mut report = match build(spec).and_then(|g| build_report(&g, spec, suites, caps)) {
        Ok(report) => report,
        Err(e) => GroupReport {
            name: spec.name.clone(),
            order: 0,
            degree: 0,
            solvable: false,
            property_t: false,
            property_wt: false,
            center_order: 0,
            o2_order: 0,
            o2_prime_order: 0,
            o_upper_2_prime_order: 0,
            two_closed: false,
            two_nilpotent: false,
            o_upper_2_prime_two_nilpotent: false,
            quotient_by_o2_prime_two_closed: false,
            odd_ppo_real_sizes: Vec::new(),
            real_classes: Vec::new(),
            good_elements: Vec::new(),
            conjecture_c: ScanVerdict::Vacuous,
            navarro: ScanVerdict::Vacuous,
            suites: suites
                .iter()
                .map(|k| SuiteResult::skipped(*k, e.to_string()))
                .collect(),
            timing_ms: None,
            error: Some(e.to_string()),
        },
    };
    report.timing_ms = Some(start.elapsed().as_millis() as u64);
    report
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteCounts {
    pub pass: u64,
    pub fail: u64,
    pub skipped: u64,
    pub vacuous: u64,
    pub counterexample: u64,
    pub assertions: u64,
}

#[derive(Debug, Serialize)]
pub struct CorpusReport {
    pub schema_version: u32,
    pub groups: Vec<GroupReport>,
    pub aggregate: BTreeMap<String, SuiteCounts>,
    pub failures: u64,
    pub counterexamples: u64,
}

impl CorpusReport {
    pub fn strip_timing(&mut self) {
        for g in &mut self.groups {
            g.timing_ms = None;
        }
    }
}

/// Verifies a corpus, optionally in parallel. Group order in the output is
/// the corpus order regardless of scheduling.
pub fn run_corpus(
    specs: &[GroupSpec],
    suites: &[SuiteKind],
    caps: &Caps,
    jobs: usize,
) -> CorpusReport {
    let reports: Vec<GroupReport> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            use rayon::prelude::*;
            specs
                .par_iter()
                .map(|spec| verify_group(spec, suites, caps))
                .collect()
        })
    } else {
        specs
            .iter()
            .map(|spec| verify_group(spec, suites, caps))
            .collect()
    };

    let mut aggregate: BTreeMap<String, SuiteCounts> = BTreeMap::new();
    let mut failures = 0;
    let mut counterexamples = 0;
    for report in &reports {
        for suite in &report.suites {
            let counts = aggregate.entry(suite.suite.clone()).or_default();
            counts.assertions += suite.assertions;
            match suite.status {
                SuiteStatus::Pass => counts.pass += 1,
                SuiteStatus::Fail => {
                    counts.fail += 1;
                    failures += 1;
                }
                SuiteStatus::Skipped => counts.skipped += 1,
                SuiteStatus::Vacuous => counts.vacuous += 1,
                SuiteStatus::Counterexample => {
                    counts.counterexample += 1;
                    counterexamples += 1;
                }
            }
        }
    }
    CorpusReport {
        schema_version: SCHEMA_VERSION,
        groups: reports,
        aggregate,
        failures,
        counterexamples,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ReplayOutcome {
    Reproduced,
    NotReproduced,
}

/// Re-runs the witness's suite on the witness's group and reports whether
/// the failure still occurs.
pub fn replay(w: &Witness) -> Result<(ReplayOutcome, SuiteResult)> {
    let kind = SuiteKind::parse(&w.suite).ok_or_else(|| {
        crate::error::Error::InvalidParameters(format!("unknown suite {:?}", w.suite))
    })?;
    let caps = Caps::default();
    let report = verify_group(&w.group, &[kind], &caps);
    let suite = report
        .suites
        .into_iter()
        .next()
        .expect("one suite requested");
    let outcome = match suite.status {
        SuiteStatus::Fail | SuiteStatus::Counterexample => ReplayOutcome::Reproduced,
        _ => ReplayOutcome::NotReproduced,
    };
    Ok((outcome, suite))
}
