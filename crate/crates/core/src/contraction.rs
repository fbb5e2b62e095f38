//! Graded contractions `ε: G × G → Q` of the catalog gradings, their
//! supports, nice sets of index pairs and the collineation classification.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::GGAlgebra;
use crate::catalog::{catalog_algebra, AlgebraKind, MaskKind};
use crate::error::{Error, Result};
use crate::fano::{collineations, generates, pair_index, star, Collineation, PAIRS};
use crate::linalg::{format_scalar, int, parse_scalar, Scalar};
use crate::structure::Fingerprint;

/// A subset of `X = {{i,j} : 1 <= i < j <= 7}`; bit `n` is `PAIRS[n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct NiceSet(u32);

impl NiceSet {
    pub const EMPTY: NiceSet = NiceSet(0);
    pub const ALL: NiceSet = NiceSet((1 << 21) - 1);

    pub fn from_bits(bits: u32) -> Result<Self> {
        if bits >> 21 != 0 {
            return Err(Error::InvalidContraction(format!("pair mask {bits:#x} exceeds 21 bits")));
        }
        Ok(NiceSet(bits))
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        let mut bits = 0;
        for &(i, j) in pairs {
            if i == j || !(1..=7).contains(&i) || !(1..=7).contains(&j) {
                return Err(Error::DegenerateTriple(i, j, j));
            }
            bits |= 1 << pair_index(i, j);
        }
        Ok(NiceSet(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize, j: usize) -> bool {
        i != j && (1..=7).contains(&i) && (1..=7).contains(&j) && self.0 & (1 << pair_index(i, j)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn pairs(self) -> Vec<(usize, usize)> {
        (0..21).filter(|n| self.0 & (1 << n) != 0).map(|n| PAIRS[n]).collect()
    }

    pub fn is_subset(self, other: NiceSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self) -> NiceSet {
        NiceSet(!self.0 & NiceSet::ALL.0)
    }

    /// `{{μ(i), μ(j)} : {i,j} ∈ T}`.
    pub fn image(self, mu: &Collineation) -> NiceSet {
        apply_action(self.0, &mu.pair_action())
    }

    pub fn is_nice(self) -> bool {
        nice_rules().iter().all(|&(trigger, required)| self.0 & trigger != trigger || self.0 & required == required)
    }
}

impl fmt::Display for NiceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs().iter().map(|(i, j)| format!("{{{i},{j}}}")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn apply_action(bits: u32, action: &[u8; 21]) -> NiceSet {
    let mut out = 0;
    let mut rest = bits;
    while rest != 0 {
        let n = rest.trailing_zeros() as usize;
        out |= 1 << action[n];
        rest &= rest - 1;
    }
    NiceSet(out)
}

/// `P_{{i,j,k}} = {{i,j},{j,k},{k,i},{i,j∗k},{j,k∗i},{k,i∗j}}` for a
/// generating triple.
pub fn p_set(i: usize, j: usize, k: usize) -> Result<NiceSet> {
    let labels_ok = [i, j, k].iter().all(|x| (1..=7).contains(x));
    if !labels_ok || !generates(i, j, k) {
        return Err(Error::DegenerateTriple(i, j, k));
    }
    NiceSet::from_pairs(&[(i, j), (j, k), (k, i), (i, star(j, k)), (j, star(k, i)), (k, star(i, j))])
}

/// Every closure rule as `(trigger, required)` bit masks: `{i,j}` and
/// `{i∗j,k}` present forces `P_{{i,j,k}}`.
fn nice_rules() -> &'static [(u32, u32)] {
    static RULES: OnceLock<Vec<(u32, u32)>> = OnceLock::new();
    RULES.get_or_init(|| {
        let mut rules = Vec::new();
        for i in 1..=7 {
            for j in 1..=7 {
                for k in 1..=7 {
                    if i == j || !generates(i, j, k) {
                        continue;
                    }
                    let trigger = (1 << pair_index(i, j)) | (1 << pair_index(star(i, j), k));
                    let required = p_set(i, j, k).expect("generating triple").bits();
                    rules.push((trigger, required));
                }
            }
        }
        rules.sort_unstable();
        rules.dedup();
        rules
    })
}

/// All nice subsets of `X`, in increasing bit order.
pub fn enumerate_nice() -> Vec<NiceSet> {
    const CHUNK: u32 = 1 << 14;
    (0..(1u32 << 21) / CHUNK)
        .into_par_iter()
        .flat_map_iter(|c| (c * CHUNK..(c + 1) * CHUNK).map(NiceSet).filter(|t| t.is_nice()))
        .collect()
}

/// The lexicographically least image under the 168 collineations, comparing
/// bit masks as integers.
pub fn canonical_form(t: NiceSet) -> NiceSet {
    pair_actions().iter().map(|a| apply_action(t.0, a)).min().expect("collineations are nonempty")
}

fn pair_actions() -> &'static [[u8; 21]] {
    static ACTIONS: OnceLock<Vec<[u8; 21]>> = OnceLock::new();
    ACTIONS.get_or_init(|| collineations().iter().map(Collineation::pair_action).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub canonical: NiceSet,
    pub members: Vec<NiceSet>,
}

/// Partitions `sets` into collineation orbits, ordered by canonical form;
/// members keep their input order.
pub fn orbit_classify(sets: &[NiceSet]) -> Vec<Orbit> {
    let keys: Vec<NiceSet> = sets.par_iter().map(|&t| canonical_form(t)).collect();
    let mut orbits: BTreeMap<NiceSet, Vec<NiceSet>> = BTreeMap::new();
    for (&t, key) in sets.iter().zip(keys) {
        orbits.entry(key).or_default().push(t);
    }
    orbits.into_iter().map(|(canonical, members)| Orbit { canonical, members }).collect()
}

/// `T1 … T24`, indexed from 0.
pub fn catalog_sets() -> [NiceSet; 24] {
    const LISTS: [&[(usize, usize)]; 22] = [
        &[],
        &[(1, 2)],
        &[(1, 2), (1, 3)],
        &[(1, 2), (1, 4)],
        &[(1, 2), (5, 7)],
        &[(1, 2), (1, 4), (2, 4)],
        &[(2, 4), (3, 7), (5, 6)],
        &[(1, 2), (1, 3), (1, 6)],
        &[(1, 2), (1, 3), (1, 4)],
        &[(1, 2), (1, 3), (1, 5)],
        &[(1, 2), (1, 7), (2, 7)],
        &[(1, 2), (1, 7), (5, 7)],
        &[(1, 2), (1, 3), (1, 4), (1, 6)],
        &[(1, 2), (1, 3), (1, 4), (1, 7)],
        &[(1, 2), (1, 5), (1, 7), (2, 7)],
        &[(1, 2), (1, 7), (2, 5), (5, 7)],
        &[(1, 2), (1, 3), (1, 4), (1, 6), (1, 7)],
        &[(1, 2), (1, 5), (1, 7), (2, 5), (2, 7)],
        &[(3, 5), (3, 6), (3, 7), (5, 6), (5, 7), (6, 7)],
        &[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
        &[(1, 2), (1, 3), (1, 5), (2, 3), (2, 7), (3, 4)],
        &[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (2, 3), (2, 7), (3, 4), (4, 7)],
    ];
    let mut out = [NiceSet::EMPTY; 24];
    for (slot, pairs) in out.iter_mut().zip(LISTS) {
        *slot = NiceSet::from_pairs(pairs).expect("catalog pairs are valid");
    }
    out[22] = out[18].complement();
    out[23] = NiceSet::ALL;
    out
}

/// Symmetric map `ε` on `G × G`, stored as an 8 × 8 table indexed by
/// group labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionMap {
    values: Vec<Scalar>,
}

impl ContractionMap {
    pub fn zero() -> Self {
        ContractionMap { values: vec![Scalar::zero(); 64] }
    }

    /// `ε^T`: 1 on the pairs of `T`, 0 elsewhere.
    pub fn indicator(t: NiceSet) -> Self {
        let mut m = ContractionMap::zero();
        for (i, j) in t.pairs() {
            m.set_pair(i, j, Scalar::one());
        }
        m
    }

    /// Map with the listed values on pairs and 0 elsewhere.
    pub fn from_pair_values(values: &[((usize, usize), Scalar)]) -> Result<Self> {
        let mut m = ContractionMap::zero();
        for ((i, j), v) in values {
            if i == j || !(1..=7).contains(i) || !(1..=7).contains(j) {
                return Err(Error::InvalidContraction(format!("pair {{{i},{j}}} is not in X")));
            }
            m.set_pair(*i, *j, v.clone());
        }
        Ok(m)
    }

    /// Any 8 × 8 table; not necessarily admissible or symmetric.
    pub fn from_table(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        if rows.len() != 8 || rows.iter().any(|r| r.len() != 8) {
            return Err(Error::DimensionMismatch { expected: 8, actual: rows.len() });
        }
        Ok(ContractionMap { values: rows.into_iter().flatten().collect() })
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.values[i * 8 + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.values[i * 8 + j] = v;
    }

    fn set_pair(&mut self, i: usize, j: usize, v: Scalar) {
        self.set(i, j, v.clone());
        self.set(j, i, v);
    }

    /// `ε(g, h, k) = ε(g, h+k) ε(h, k)`.
    pub fn ternary(&self, g: usize, h: usize, k: usize) -> Scalar {
        self.get(g, star(h, k)) * self.get(h, k)
    }

    pub fn to_table(&self) -> Vec<Vec<Scalar>> {
        self.values.chunks(8).map(<[Scalar]>::to_vec).collect()
    }

    pub fn is_admissible(&self) -> bool {
        (0..8).all(|i| self.get(i, i).is_zero() && self.get(0, i).is_zero() && self.get(i, 0).is_zero())
    }

    /// Pairs `{i,j} ∈ X` with `ε(g_i, g_j) != 0` (read from the upper triangle).
    pub fn support(&self) -> NiceSet {
        let mut bits = 0;
        for (n, &(i, j)) in PAIRS.iter().enumerate() {
            if !self.get(i, j).is_zero() {
                bits |= 1 << n;
            }
        }
        NiceSet(bits)
    }

    /// `(g_i, g_j) ↦ ε(g_{μ⁻¹ i}, g_{μ⁻¹ j})`, so that the support moves by `μ`.
    pub fn permuted(&self, mu: &Collineation) -> ContractionMap {
        let mut out = ContractionMap::zero();
        for i in 0..8 {
            for j in 0..8 {
                out.set(mu.apply(i), mu.apply(j), self.get(i, j).clone());
            }
        }
        out
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ContractionReport {
    /// Labels `i` with `ε(i,i)`, `ε(0,i)` or `ε(i,0)` nonzero.
    pub admissibility: Vec<usize>,
    /// Pairs `(i, j)`, `i < j`, with `ε(i,j) != ε(j,i)`.
    pub symmetry: Vec<(usize, usize)>,
    /// Ordered generating triples with `ε(g,h,k) != ε(k,g,h)`.
    pub cyclic: Vec<(usize, usize, usize)>,
    pub triples_checked: usize,
}

impl ContractionReport {
    pub fn is_ok(&self) -> bool {
        self.admissibility.is_empty() && self.symmetry.is_empty() && self.cyclic.is_empty()
    }
}

/// Admissibility, symmetry and the cyclic condition on every ordered triple
/// of `G^×` generating `G`.
pub fn verify_contraction(eps: &ContractionMap) -> ContractionReport {
    let mut report = ContractionReport::default();
    for i in 0..8 {
        if !(eps.get(i, i).is_zero() && eps.get(0, i).is_zero() && eps.get(i, 0).is_zero()) {
            report.admissibility.push(i);
        }
        for j in i + 1..8 {
            if eps.get(i, j) != eps.get(j, i) {
                report.symmetry.push((i, j));
            }
        }
    }
    for g in 1..=7 {
        for h in 1..=7 {
            for k in 1..=7 {
                if !generates(g, h, k) {
                    continue;
                }
                report.triples_checked += 1;
                if eps.ternary(g, h, k) != eps.ternary(k, g, h) {
                    report.cyclic.push((g, h, k));
                }
            }
        }
    }
    report
}

/// A named catalog map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContractionSpec {
    /// `ε^{T_n}`, `n ∈ 1..=24`.
    Nice(usize),
    Eta(Scalar),
    Mu(Scalar),
    Beta(Scalar, Scalar),
}

impl ContractionSpec {
    pub fn build(&self) -> ContractionMap {
        let one = Scalar::one;
        let values: Vec<((usize, usize), Scalar)> = match self {
            ContractionSpec::Nice(n) => return ContractionMap::indicator(catalog_sets()[n - 1]),
            ContractionSpec::Eta(l) => vec![((1, 2), one()), ((1, 3), one()), ((1, 4), one()), ((1, 7), l.clone())],
            ContractionSpec::Mu(l) => {
                vec![((1, 2), one()), ((1, 4), one()), ((1, 6), one()), ((1, 3), l.clone()), ((1, 7), l.clone())]
            }
            ContractionSpec::Beta(l1, l2) => vec![
                ((1, 2), one()),
                ((1, 4), one()),
                ((1, 3), l1.clone()),
                ((1, 7), l1.clone()),
                ((1, 5), l2.clone()),
                ((1, 6), l2.clone()),
            ],
        };
        ContractionMap::from_pair_values(&values).expect("family pairs are in X")
    }

    /// `ε^{T1} … ε^{T24}`.
    pub fn all_nice() -> Vec<ContractionSpec> {
        (1..=24).map(ContractionSpec::Nice).collect()
    }
}

impl FromStr for ContractionSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let param = |text: &str| -> Result<Scalar> {
            let q = parse_scalar(text.trim())?;
            if q.is_zero() {
                return Err(Error::ZeroParameter);
            }
            Ok(q)
        };
        if let Some(n) = s.strip_prefix('T') {
            let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad nice-set index in {s:?}")))?;
            if !(1..=24).contains(&n) {
                return Err(Error::Parse(format!("nice-set index {n} outside 1..=24")));
            }
            return Ok(ContractionSpec::Nice(n));
        }
        match s.split_once(':') {
            Some(("eta", q)) => Ok(ContractionSpec::Eta(param(q)?)),
            Some(("mu", q)) => Ok(ContractionSpec::Mu(param(q)?)),
            Some(("beta", qs)) => {
                let (a, b) =
                    qs.split_once(',').ok_or_else(|| Error::Parse(format!("beta needs two parameters: {s:?}")))?;
                Ok(ContractionSpec::Beta(param(a)?, param(b)?))
            }
            _ => Err(Error::Parse(format!("unknown map {s:?} (expected T<n>, eta:<q>, mu:<q> or beta:<q>,<q>)"))),
        }
    }
}

impl fmt::Display for ContractionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContractionSpec::Nice(n) => write!(f, "T{n}"),
            ContractionSpec::Eta(l) => write!(f, "eta:{}", format_scalar(l)),
            ContractionSpec::Mu(l) => write!(f, "mu:{}", format_scalar(l)),
            ContractionSpec::Beta(a, b) => write!(f, "beta:{},{}", format_scalar(a), format_scalar(b)),
        }
    }
}

/// `L^ε`, the algebra with twist `ε(g,h) σ_{g,h}`. Fails unless `ε` passes
/// [`verify_contraction`].
pub fn contract(a: &GGAlgebra, eps: &ContractionMap) -> Result<GGAlgebra> {
    let report = verify_contraction(eps);
    if !report.is_ok() {
        return Err(Error::InvalidContraction(format!(
            "{} admissibility, {} symmetry, {} cyclic violations",
            report.admissibility.len(),
            report.symmetry.len(),
            report.cyclic.len()
        )));
    }
    let twist = a.twist().scaled_by(|i, j| eps.get(i, j).clone());
    GGAlgebra::new(format!("{}^eps", a.name()), twist, a.mask())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub algebra: String,
    pub mask: String,
    pub map: String,
    pub lie: bool,
    pub fingerprint: Fingerprint,
}

/// One row per `(algebra, mask, map)`, in input order.
pub fn contraction_survey(algebras: &[(AlgebraKind, MaskKind)], maps: &[ContractionSpec]) -> Result<Vec<SurveyRow>> {
    let jobs: Vec<(AlgebraKind, MaskKind, &ContractionSpec)> =
        algebras.iter().flat_map(|&(k, m)| maps.iter().map(move |s| (k, m, s))).collect();
    jobs.into_par_iter()
        .map(|(kind, mask, spec)| {
            let c = contract(&catalog_algebra(kind, mask), &spec.build())?;
            Ok(SurveyRow {
                algebra: kind.name().into(),
                mask: mask.name().into(),
                map: spec.to_string(),
                lie: c.is_lie(),
                fingerprint: c.fingerprint(),
            })
        })
        .collect()
}

/// `{2, 1/2, 3, -1, 5}`.
pub fn parameter_sweep() -> Vec<Scalar> {
    vec![int(2), Scalar::new(1.into(), 2.into()), int(3), int(-1), int(5)]
}
