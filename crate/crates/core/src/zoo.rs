//! Deterministic constructors for the verification corpus, plus a JSON
//! generator-file format for externally supplied groups.
//!
//! Construction is fully deterministic: identical specs yield identical
//! generator lists, so downstream reports are reproducible byte for byte.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::arith::{self, is_prime};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    Symmetric,
    Alternating,
    Cyclic,
    Dihedral,
    Affine,
    Psl2,
    Sl2,
    Gl2,
    Q8,
    Sd16,
    DirectProduct,
    File,
}

/// A buildable description of a corpus group.
///
/// `parameters` carries the integer arguments of the kind; direct products
/// nest their factor specs in `factors`, and `file` kinds carry `path`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub name: String,
    pub kind: GroupKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parameters: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_order: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<PathBuf>,
}

impl GroupSpec {
    pub fn simple(name: impl Into<String>, kind: GroupKind, parameters: Vec<u64>) -> GroupSpec {
        GroupSpec {
            name: name.into(),
            kind,
            parameters,
            expected_order: None,
            factors: Vec::new(),
            path: None,
        }
    }

    pub fn with_expected_order(mut self, order: u64) -> GroupSpec {
        self.expected_order = Some(order);
        self
    }
}

fn cyc(degree: usize, cycles: &[Vec<u32>]) -> Result<Permutation> {
    Permutation::from_cycles(degree, cycles)
}

fn one_param(spec: &GroupSpec) -> Result<u64> {
    match spec.parameters.as_slice() {
        [n] => Ok(*n),
        _ => Err(Error::InvalidParameters(format!(
            "{:?} takes exactly one parameter",
            spec.kind
        ))),
    }
}

fn symmetric_gens(n: u64) -> Result<Vec<Permutation>> {
    if n < 1 {
        return Err(Error::InvalidParameters(
            "symmetric degree must be >= 1".into(),
        ));
    }
    let n = n as usize;
    if n == 1 {
        return Ok(vec![Permutation::identity(1)]);
    }
    let transposition = cyc(n, &[vec![0, 1]])?;
    if n == 2 {
        return Ok(vec![transposition]);
    }
    let long_cycle = cyc(n, &[(0..n as u32).collect()])?;
    Ok(vec![transposition, long_cycle])
}

fn alternating_gens(n: u64) -> Result<Vec<Permutation>> {
    if n < 3 {
        return Err(Error::InvalidParameters(
            "alternating degree must be >= 3".into(),
        ));
    }
    let n = n as usize;
    let three_cycle = cyc(n, &[vec![0, 1, 2]])?;
    if n == 3 {
        return Ok(vec![three_cycle]);
    }
    // An n-cycle is even only for odd n; for even n use the (n-1)-cycle
    // fixing point 0.
    let long = if n % 2 == 1 {
        cyc(n, &[(0..n as u32).collect()])?
    } else {
        cyc(n, &[(1..n as u32).collect()])?
    };
    Ok(vec![three_cycle, long])
}

fn cyclic_gens(n: u64) -> Result<Vec<Permutation>> {
    if n < 1 {
        return Err(Error::InvalidParameters("cyclic order must be >= 1".into()));
    }
    let n = n as usize;
    if n == 1 {
        return Ok(vec![Permutation::identity(1)]);
    }
    Ok(vec![cyc(n, &[(0..n as u32).collect()])?])
}

fn dihedral_gens(n: u64) -> Result<Vec<Permutation>> {
    if n < 3 {
        return Err(Error::InvalidParameters(
            "dihedral parameter must be >= 3".into(),
        ));
    }
    let n = n as usize;
    let rotation = cyc(n, &[(0..n as u32).collect()])?;
    let reflection =
        Permutation::from_images((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect())?;
    Ok(vec![rotation, reflection])
}

fn multiplicative_order(a: u64, p: u64) -> u64 {
    let mut x = a % p;
    let mut k = 1;
    while x != 1 {
        x = x * a % p;
        k += 1;
    }
    k
}

/// The affine group {x -> ax + b} on F_p with a of multiplicative order
/// exactly k (smallest such a is chosen). Order p*k.
fn affine_gens(p: u64, k: u64) -> Result<Vec<Permutation>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 || !(p - 1).is_multiple_of(k) {
        return Err(Error::InvalidParameters(format!(
            "affine multiplier order {k} must divide p - 1 = {}",
            p - 1
        )));
    }
    let a = (1..p)
        .find(|&a| multiplicative_order(a, p) == k)
        .expect("F_p^* is cyclic, so an element of each dividing order exists");
    let translation = cyc(p as usize, &[(0..p as u32).collect()])?;
    let multiplier =
        Permutation::from_images((0..p).map(|x| (a * x % p) as u32).collect::<Vec<u32>>())?;
    Ok(vec![translation, multiplier])
}

/// PSL2(p) acting on the projective line, labeled infinity, 0, 1, ...,
/// p - 1 as points 0..p. Generated by z -> z + 1 and z -> -1/z.
fn psl2_gens(p: u64) -> Result<Vec<Permutation>> {
    if !is_prime(p) || p < 5 || p.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!(
            "psl2 requires an odd prime >= 5, got {p}"
        )));
    }
    let degree = (p + 1) as usize;
    let mut shift = vec![0u32; degree];
    shift[0] = 0; // infinity is fixed by z -> z + 1
    for j in 0..p {
        shift[(1 + j) as usize] = 1 + ((j + 1) % p) as u32;
    }
    let mut neg_inv = vec![0u32; degree];
    neg_inv[0] = 1; // infinity -> 0
    neg_inv[1] = 0; // 0 -> infinity
    for j in 1..p {
        let inv = arith::mod_inverse(j, p).expect("nonzero mod prime");
        neg_inv[(1 + j) as usize] = 1 + ((p - inv) % p) as u32;
    }
    Ok(vec![
        Permutation::from_images(shift)?,
        Permutation::from_images(neg_inv)?,
    ])
}

/// Index of the nonzero vector (x, y) of F_p^2 in the lexicographic
/// enumeration skipping (0, 0).
fn vector_index(x: u64, y: u64, p: u64) -> u32 {
    (x * p + y - 1) as u32
}

/// Permutation of the nonzero row vectors induced by v -> v * M for
/// M = [[a, b], [c, d]] over F_p.
fn matrix_perm(p: u64, m: [u64; 4]) -> Result<Permutation> {
    let degree = (p * p - 1) as usize;
    let [a, b, c, d] = m;
    let mut images = vec![0u32; degree];
    for x in 0..p {
        for y in 0..p {
            if x == 0 && y == 0 {
                continue;
            }
            let nx = (a * x + c * y) % p;
            let ny = (b * x + d * y) % p;
            images[vector_index(x, y, p) as usize] = vector_index(nx, ny, p);
        }
    }
    Permutation::from_images(images)
}

fn sl2_gens(p: u64) -> Result<Vec<Permutation>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(vec![
        matrix_perm(p, [1, 1, 0, 1])?,
        matrix_perm(p, [0, p - 1, 1, 0])?,
    ])
}

fn gl2_gens(p: u64) -> Result<Vec<Permutation>> {
    let mut gens = sl2_gens(p)?;
    if p > 2 {
        let root = (2..p)
            .find(|&a| multiplicative_order(a, p) == p - 1)
            .expect("F_p^* is cyclic");
        gens.push(matrix_perm(p, [root, 0, 0, 1])?);
    }
    Ok(gens)
}

/// Q8 in its right regular action on its eight elements, ordered
/// 1, i, j, k, -1, -i, -j, -k; generated by right multiplication by i, j.
fn q8_gens() -> Result<Vec<Permutation>> {
    Ok(vec![
        Permutation::from_images(vec![1, 4, 7, 2, 5, 0, 3, 6])?,
        Permutation::from_images(vec![2, 3, 4, 5, 6, 7, 0, 1])?,
    ])
}

/// The semidihedral group of order 16 on 8 points: r the 8-cycle and
/// s: i -> 3i mod 8, so that s r s = r^3.
fn sd16_gens() -> Result<Vec<Permutation>> {
    Ok(vec![
        cyc(8, &[(0..8).collect()])?,
        Permutation::from_images(vec![0, 3, 6, 1, 4, 7, 2, 5])?,
    ])
}

/// Embeds each factor on a disjoint block of points.
fn direct_product_gens(factors: &[GroupSpec]) -> Result<(usize, Vec<Permutation>)> {
    if factors.is_empty() {
        return Err(Error::InvalidParameters(
            "direct product needs at least one factor".into(),
        ));
    }
    let built: Vec<PermGroup> = factors.iter().map(build).collect::<Result<_>>()?;
    let total: usize = built.iter().map(|g| g.degree()).sum();
    let mut gens = Vec::new();
    let mut offset = 0u32;
    for factor in &built {
        for gen in factor.generators() {
            let mut images: Vec<u32> = (0..total as u32).collect();
            for (i, &img) in gen.images().iter().enumerate() {
                images[offset as usize + i] = offset + img;
            }
            gens.push(Permutation::from_images(images)?);
        }
        offset += factor.degree() as u32;
    }
    Ok((total, gens))
}

/// Builds the permutation group described by a spec. The result is named
/// after the spec, and a declared `expected_order` is verified exactly.
pub fn build(spec: &GroupSpec) -> Result<PermGroup> {
    let (degree, gens) = match spec.kind {
        GroupKind::Symmetric => {
            let n = one_param(spec)?;
            (n as usize, symmetric_gens(n)?)
        }
        GroupKind::Alternating => {
            let n = one_param(spec)?;
            (n as usize, alternating_gens(n)?)
        }
        GroupKind::Cyclic => {
            let n = one_param(spec)?;
            (n.max(1) as usize, cyclic_gens(n)?)
        }
        GroupKind::Dihedral => {
            let n = one_param(spec)?;
            (n as usize, dihedral_gens(n)?)
        }
        GroupKind::Affine => match spec.parameters.as_slice() {
            [p, k] => (*p as usize, affine_gens(*p, *k)?),
            _ => {
                return Err(Error::InvalidParameters(
                    "affine takes parameters p, k".into(),
                ))
            }
        },
        GroupKind::Psl2 => {
            let p = one_param(spec)?;
            ((p + 1) as usize, psl2_gens(p)?)
        }
        GroupKind::Sl2 => {
            let p = one_param(spec)?;
            ((p * p - 1) as usize, sl2_gens(p)?)
        }
        GroupKind::Gl2 => {
            let p = one_param(spec)?;
            ((p * p - 1) as usize, gl2_gens(p)?)
        }
        GroupKind::Q8 => (8, q8_gens()?),
        GroupKind::Sd16 => (8, sd16_gens()?),
        GroupKind::DirectProduct => direct_product_gens(&spec.factors)?,
        GroupKind::File => {
            let path = spec
                .path
                .as_ref()
                .ok_or_else(|| Error::InvalidParameters("file spec needs a path".into()))?;
            let g = load_group(path)?;
            if let Some(expected) = spec.expected_order {
                if g.order() != expected {
                    return Err(Error::ExpectedOrderMismatch {
                        expected,
                        actual: g.order(),
                    });
                }
            }
            return Ok(g.with_name(spec.name.clone()));
        }
    };
    let group = PermGroup::from_generators(degree, gens)?.with_name(spec.name.clone());
    if let Some(expected) = spec.expected_order {
        if group.order() != expected {
            return Err(Error::ExpectedOrderMismatch {
                expected,
                actual: group.order(),
            });
        }
    }
    Ok(group)
}

/// Parses a CLI group spec such as `sym:4`, `psl2:13`, `affine:7:3`, `q8`,
/// `file:groups/my.json`, or a `*`-separated direct product of those.
pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let text = text.trim();
    if let Some(path) = text.strip_prefix("file:") {
        let mut spec = GroupSpec::simple(text, GroupKind::File, vec![]);
        spec.path = Some(PathBuf::from(path));
        return Ok(spec);
    }
    if text.contains('*') {
        let factors: Vec<GroupSpec> = text.split('*').map(parse_spec).collect::<Result<_>>()?;
        let mut spec = GroupSpec::simple(text, GroupKind::DirectProduct, vec![]);
        spec.factors = factors;
        return Ok(spec);
    }
    let mut pieces = text.split(':');
    let head = pieces.next().unwrap_or_default();
    let params: Vec<u64> = pieces
        .map(|p| {
            p.parse().map_err(|_| {
                Error::InvalidParameters(format!("bad integer {p:?} in spec {text:?}"))
            })
        })
        .collect::<Result<_>>()?;
    let kind = match head {
        "sym" | "symmetric" => GroupKind::Symmetric,
        "alt" | "alternating" => GroupKind::Alternating,
        "cyclic" | "cyc" => GroupKind::Cyclic,
        "dihedral" | "dih" => GroupKind::Dihedral,
        "affine" => GroupKind::Affine,
        "psl2" => GroupKind::Psl2,
        "sl2" => GroupKind::Sl2,
        "gl2" => GroupKind::Gl2,
        "q8" => GroupKind::Q8,
        "sd16" => GroupKind::Sd16,
        other => {
            return Err(Error::InvalidParameters(format!(
                "unknown group kind {other:?}"
            )))
        }
    };
    Ok(GroupSpec::simple(text, kind, params))
}

#[derive(Serialize, Deserialize)]
struct GroupFile {
    #[serde(default)]
    name: Option<String>,
    degree: usize,
    #[serde(default = "default_one_based")]
    one_based: bool,
    generators: Vec<GeneratorEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    expected_order: Option<u64>,
}

fn default_one_based() -> bool {
    true
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum GeneratorEntry {
    Images(Vec<u64>),
    Cycles(String),
}

fn images_from_file(raw: &[u64], degree: usize, one_based: bool) -> Result<Permutation> {
    if raw.len() != degree {
        return Err(Error::MalformedFile(format!(
            "image array has length {} but degree is {degree}",
            raw.len()
        )));
    }
    let mut images = Vec::with_capacity(degree);
    for &v in raw {
        let shifted = if one_based {
            v.checked_sub(1)
                .ok_or(Error::PointOutOfRange { point: v, degree })?
        } else {
            v
        };
        if shifted >= degree as u64 {
            return Err(Error::PointOutOfRange { point: v, degree });
        }
        images.push(shifted as u32);
    }
    Permutation::from_images(images)
}

/// Loads a group from the JSON generator-file schema.
pub fn load_group(path: impl AsRef<Path>) -> Result<PermGroup> {
    let text = fs::read_to_string(path.as_ref())?;
    let file: GroupFile =
        serde_json::from_str(&text).map_err(|e| Error::MalformedFile(e.to_string()))?;
    if file.generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let gens: Vec<Permutation> = file
        .generators
        .iter()
        .map(|entry| match entry {
            GeneratorEntry::Images(raw) => images_from_file(raw, file.degree, file.one_based),
            GeneratorEntry::Cycles(text) => {
                Permutation::parse_cycles(file.degree, text, file.one_based)
            }
        })
        .collect::<Result<_>>()?;
    let group = PermGroup::from_generators(file.degree, gens)?;
    if let Some(expected) = file.expected_order {
        if group.order() != expected {
            return Err(Error::ExpectedOrderMismatch {
                expected,
                actual: group.order(),
            });
        }
    }
    let name = file
        .name
        .unwrap_or_else(|| path.as_ref().display().to_string());
    Ok(group.with_name(name))
}

/// Saves a group as 0-based image arrays.
pub fn save_group(g: &PermGroup, path: impl AsRef<Path>) -> Result<()> {
    let file = GroupFile {
        name: Some(g.name().to_string()),
        degree: g.degree(),
        one_based: false,
        generators: g
            .generators()
            .iter()
            .map(|p| GeneratorEntry::Images(p.images().iter().map(|&i| u64::from(i)).collect()))
            .collect(),
        expected_order: Some(g.order()),
    };
    fs::write(path, serde_json::to_string_pretty(&file)? + "\n")?;
    Ok(())
}

/// The fixed verification corpus: symmetric and alternating families,
/// small solvable families, the prime PSL2 series, matrix-group samples,
/// and mixed direct products.
pub fn default_corpus() -> Vec<GroupSpec> {
    use GroupKind::*;
    let simple = |name: &str, kind, params: &[u64], order: u64| {
        GroupSpec::simple(name, kind, params.to_vec()).with_expected_order(order)
    };
    let mut corpus = vec![
        simple("sym:3", Symmetric, &[3], 6),
        simple("sym:4", Symmetric, &[4], 24),
        simple("sym:5", Symmetric, &[5], 120),
        simple("sym:6", Symmetric, &[6], 720),
        simple("sym:7", Symmetric, &[7], 5_040),
        simple("sym:8", Symmetric, &[8], 40_320),
        simple("alt:4", Alternating, &[4], 12),
        simple("alt:5", Alternating, &[5], 60),
        simple("alt:6", Alternating, &[6], 360),
        simple("alt:7", Alternating, &[7], 2_520),
        simple("alt:8", Alternating, &[8], 20_160),
        simple("alt:9", Alternating, &[9], 181_440),
        simple("cyclic:2", Cyclic, &[2], 2),
        simple("cyclic:5", Cyclic, &[5], 5),
        simple("cyclic:9", Cyclic, &[9], 9),
        simple("cyclic:12", Cyclic, &[12], 12),
        simple("cyclic:15", Cyclic, &[15], 15),
        simple("dihedral:4", Dihedral, &[4], 8),
        simple("dihedral:5", Dihedral, &[5], 10),
        simple("dihedral:6", Dihedral, &[6], 12),
        simple("dihedral:10", Dihedral, &[10], 20),
        simple("q8", Q8, &[], 8),
        simple("sd16", Sd16, &[], 16),
        simple("affine:7:3", Affine, &[7, 3], 21),
        simple("affine:5:4", Affine, &[5, 4], 20),
        simple("affine:11:5", Affine, &[11, 5], 55),
        simple("affine:13:6", Affine, &[13, 6], 78),
        simple("psl2:5", Psl2, &[5], 60),
        simple("psl2:7", Psl2, &[7], 168),
        simple("psl2:11", Psl2, &[11], 660),
        simple("psl2:13", Psl2, &[13], 1_092),
        simple("sl2:5", Sl2, &[5], 120),
        simple("gl2:3", Gl2, &[3], 48),
    ];
    let product = |name: &str, factors: Vec<GroupSpec>, order: u64| {
        let mut spec = GroupSpec::simple(name, DirectProduct, vec![]);
        spec.factors = factors;
        spec.with_expected_order(order)
    };
    corpus.push(product(
        "sym:4*cyclic:3",
        vec![
            GroupSpec::simple("sym:4", Symmetric, vec![4]),
            GroupSpec::simple("cyclic:3", Cyclic, vec![3]),
        ],
        72,
    ));
    corpus.push(product(
        "cyclic:2*alt:5",
        vec![
            GroupSpec::simple("cyclic:2", Cyclic, vec![2]),
            GroupSpec::simple("alt:5", Alternating, vec![5]),
        ],
        120,
    ));
    corpus.push(product(
        "sym:3*sym:3",
        vec![
            GroupSpec::simple("sym:3", Symmetric, vec![3]),
            GroupSpec::simple("sym:3", Symmetric, vec![3]),
        ],
        36,
    ));
    corpus.push(product(
        "dihedral:5*cyclic:3",
        vec![
            GroupSpec::simple("dihedral:5", Dihedral, vec![5]),
            GroupSpec::simple("cyclic:3", Cyclic, vec![3]),
        ],
        30,
    ));
    corpus
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::normal_subgroups;

    #[test]
    fn closed_form_orders() {
        for spec in default_corpus() {
            let g = build(&spec).unwrap();
            assert_eq!(
                Some(g.order()),
                spec.expected_order,
                "order mismatch for {}",
                spec.name
            );
            assert_eq!(g.name(), spec.name);
        }
    }

    #[test]
    fn psl2_7_is_degree_8_order_168() {
        let g = build(&parse_spec("psl2:7").unwrap()).unwrap();
        assert_eq!(g.degree(), 8);
        assert_eq!(g.order(), 168);
    }

    #[test]
    fn psl2_groups_are_simple() {
        for p in [5u64, 7, 11, 13] {
            let g = build(&parse_spec(&format!("psl2:{p}")).unwrap()).unwrap();
            let lattice = normal_subgroups(&g, 10_000).unwrap();
            assert_eq!(lattice.len(), 2, "psl2:{p} should be simple");
        }
    }

    #[test]
    fn affine_orders_and_oddness() {
        let g = build(&parse_spec("affine:7:3").unwrap()).unwrap();
        assert_eq!(g.order(), 21);
        assert_eq!(g.order() % 2, 1);
    }

    #[test]
    fn sl2_5_on_24_points() {
        let g = build(&parse_spec("sl2:5").unwrap()).unwrap();
        assert_eq!(g.degree(), 24);
        assert_eq!(g.order(), 120);
        assert_eq!(crate::structure::center(&g).unwrap().order(), 2);
    }

    #[test]
    fn q8_and_sd16_shapes() {
        let q8 = build(&parse_spec("q8").unwrap()).unwrap();
        assert_eq!(q8.order(), 8);
        // Q8 has a unique involution (-1), so exactly 2 central elements.
        assert_eq!(crate::structure::center(&q8).unwrap().order(), 2);
        let sd16 = build(&parse_spec("sd16").unwrap()).unwrap();
        assert_eq!(sd16.order(), 16);
        assert!(!sd16.is_abelian());
    }

    #[test]
    fn products_act_on_disjoint_blocks() {
        let spec = parse_spec("sym:3*cyclic:2").unwrap();
        let g = build(&spec).unwrap();
        assert_eq!(g.degree(), 5);
        assert_eq!(g.order(), 12);
    }

    #[test]
    fn construction_is_deterministic() {
        let a = build(&parse_spec("psl2:11").unwrap()).unwrap();
        let b = build(&parse_spec("psl2:11").unwrap()).unwrap();
        assert_eq!(a.generators(), b.generators());
    }

    #[test]
    fn expected_order_mismatch_is_an_error() {
        let spec =
            GroupSpec::simple("sym:4", GroupKind::Symmetric, vec![4]).with_expected_order(25);
        assert!(matches!(
            build(&spec),
            Err(Error::ExpectedOrderMismatch {
                expected: 25,
                actual: 24
            })
        ));
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(build(&GroupSpec::simple("x", GroupKind::Psl2, vec![9])).is_err());
        assert!(build(&GroupSpec::simple("x", GroupKind::Affine, vec![7, 4])).is_err());
        assert!(build(&GroupSpec::simple("x", GroupKind::Dihedral, vec![2])).is_err());
        assert!(parse_spec("nosuch:3").is_err());
        assert!(parse_spec("sym:x").is_err());
    }

    #[test]
    fn file_roundtrip() {
        let dir = std::env::temp_dir().join("rcg_zoo_tests");
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("alt5.json");
        let g = build(&parse_spec("alt:5").unwrap()).unwrap();
        save_group(&g, &path).unwrap();
        let loaded = load_group(&path).unwrap();
        assert_eq!(loaded.order(), 60);
        for gen in g.generators() {
            assert!(loaded.contains(gen));
        }
        for gen in loaded.generators() {
            assert!(g.contains(gen));
        }
    }

    #[test]
    fn file_schema_accepts_cycles_and_one_based_arrays() {
        let dir = std::env::temp_dir().join("rcg_zoo_tests");
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("sym4.json");
        fs::write(
            &path,
            r#"{"name":"s4","degree":4,"generators":[[2,1,3,4],"(1,2,3,4)"],"expected_order":24}"#,
        )
        .unwrap();
        let g = load_group(&path).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.name(), "s4");

        let bad = dir.join("empty.json");
        fs::write(&bad, r#"{"degree":4,"generators":[]}"#).unwrap();
        assert!(matches!(load_group(&bad), Err(Error::EmptyGenerators)));

        let malformed = dir.join("malformed.json");
        fs::write(&malformed, r#"{"degree":4"#).unwrap();
        assert!(matches!(
            load_group(&malformed),
            Err(Error::MalformedFile(_))
        ));

        let out_of_range = dir.join("range.json");
        fs::write(&out_of_range, r#"{"degree":3,"generators":[[1,2,4]]}"#).unwrap();
        assert!(matches!(
            load_group(&out_of_range),
            Err(Error::PointOutOfRange { .. })
        ));
    }
}
