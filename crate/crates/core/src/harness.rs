//! The commands behind the `coxsph` binary: censuses, single-element
//! checks, key expansions, the staircase consistency sweep and the
//! conjecture experiments. Every command returns a report value; printing is
//! left to the caller.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coxeter::{CartanType, CoxeterSystem, Element, EnumeratedGroup, Family};
use crate::error::{Error, Result};
use crate::poly::oracle::split_expand_linear;
use crate::poly::{
    is_d_multiplicity_free, key_polynomial, key_via_kohnert, split_expand, Polynomial, SplitSet,
};
use crate::spherical::{
    census, dihedral_classification, find_witness, find_witness_in, verify_witness,
    w0_sphericality_closed_form, WitnessCertificate,
};
use crate::splitrule::ry_expand;
use crate::typea::{
    bigrassmannian_spherical, contains_perm_pattern, is_bigrassmannian, w_act_on_partition,
    Composition, Partition, Permutation,
};
use crate::words::{evaluate, Word};
use crate::SplitExpansion;

/// Censuses of groups larger than this need the `slow` flag.
pub const SLOW_GROUP_SIZE: usize = 2000;
/// Largest `n` for the consistency sweep without the `slow` flag.
pub const CONSISTENCY_FAST_MAX: usize = 5;
/// Largest `n` the consistency sweep accepts at all.
pub const CONSISTENCY_MAX: usize = 6;
/// Largest `n` for which `check` runs the staircase test.
pub const STAIRCASE_MAX: usize = 6;

/// Known non-maximally-spherical counts.
pub fn expected_nonspherical(t: CartanType) -> Option<usize> {
    match t.to_string().as_str() {
        "A1" | "A2" | "A3" => Some(0),
        "A4" => Some(21),
        "A5" => Some(320),
        "A6" => Some(3450),
        "B3" => Some(18),
        "D4" => Some(70),
        "F4" => Some(1033),
        _ => None,
    }
}

pub fn parse_type(s: &str) -> Result<CoxeterSystem> {
    Ok(CoxeterSystem::new(s.trim().parse()?))
}

/// A comma separated list of labels; the empty string is the empty set.
pub fn parse_labels(csv: &str) -> Result<Vec<usize>> {
    let mut out: Vec<usize> = csv
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("bad label {t:?} in {csv:?}")))
        })
        .collect::<Result<_>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// A one-line permutation (type `A` only) or a word in the generators.
pub fn parse_element(sys: &CoxeterSystem, s: &str) -> Result<Element> {
    if sys.cartan_type().family() == Family::A {
        if let Ok(p) = s.parse::<Permutation>() {
            if p.n() == sys.rank() + 1 {
                return p.to_element(sys);
            }
        }
    }
    evaluate(sys, &s.parse()?)
}

fn one_line(sys: &CoxeterSystem, w: &Element) -> Option<String> {
    (sys.cartan_type().family() == Family::A).then(|| {
        Permutation::from_element(sys, w)
            .expect("type A")
            .to_string()
    })
}

fn fmt_set(labels: &[usize]) -> String {
    let parts: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// One census line in the JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one_line: Option<String>,
    pub word: String,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub spherical: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone)]
pub struct CensusReport {
    pub cartan_type: CartanType,
    pub total_elements: usize,
    pub rows: Vec<CensusRow>,
    pub expected_nonspherical: Option<usize>,
    pub elapsed: Duration,
}

impl CensusReport {
    pub fn nonspherical(&self) -> impl Iterator<Item = &CensusRow> {
        self.rows.iter().filter(|r| !r.spherical)
    }

    pub fn nonspherical_count(&self) -> usize {
        self.nonspherical().count()
    }

    /// Whether the count differs from the known value.
    pub fn discrepancy(&self) -> bool {
        self.expected_nonspherical
            .is_some_and(|e| e != self.nonspherical_count())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.rows).expect("rows serialize")
    }
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bad = self.nonspherical_count();
        writeln!(
            f,
            "{}: {} elements, {} maximally spherical, {} not",
            self.cartan_type,
            self.total_elements,
            self.total_elements - bad,
            bad
        )?;
        if let Some(e) = self.expected_nonspherical {
            if e != bad {
                writeln!(
                    f,
                    "DISCREPANCY: expected {e} non-maximally-spherical elements, found {bad}"
                )?;
            }
        }
        for r in self.nonspherical() {
            match &r.one_line {
                Some(o) => writeln!(f, "{o}\tJ={}\t{}", fmt_set(&r.j), r.word)?,
                None => writeln!(f, "{}\tJ={}", r.word, fmt_set(&r.j))?,
            }
        }
        Ok(())
    }
}

/// Decides maximal sphericality of every element of the group.
///
/// With `paranoid`, every witness is re-verified and the closed forms for
/// rank two groups, bigrassmannian permutations and `w0` are compared with
/// the search.
pub fn run_census(sys: &CoxeterSystem, slow: bool, paranoid: bool) -> Result<CensusReport> {
    let start = Instant::now();
    if !slow && sys.order() > SLOW_GROUP_SIZE as u128 {
        return Err(Error::InvalidArgument(format!(
            "{} has {} elements; pass --slow for groups above {SLOW_GROUP_SIZE}",
            sys.cartan_type(),
            sys.order()
        )));
    }
    let group = EnumeratedGroup::new(sys)?;
    let entries = census(&group);
    let rows: Vec<CensusRow> = entries
        .iter()
        .map(|e| {
            let w = group.element(e.id);
            CensusRow {
                one_line: one_line(sys, w),
                word: Word::new(sys.reduced_word(w)).to_string(),
                j: e.left_descents.clone(),
                spherical: e.spherical(),
                witness: e.witness.as_ref().map(Word::to_string),
            }
        })
        .collect();
    if paranoid {
        entries.par_iter().try_for_each(|e| {
            let w = group.element(e.id);
            if let Some(word) = &e.witness {
                if !verify_witness(sys, w, &e.left_descents, word)? {
                    return Err(mismatch(sys, w, "witness does not verify"));
                }
            }
            if sys.rank() == 2 && dihedral_classification(sys, w)? != e.spherical() {
                return Err(mismatch(sys, w, "dihedral closed form disagrees"));
            }
            if sys.cartan_type().family() == Family::A {
                let p = Permutation::from_element(sys, w)?;
                if is_bigrassmannian(&p) && bigrassmannian_spherical(&p)? != e.spherical() {
                    return Err(mismatch(sys, w, "bigrassmannian closed form disagrees"));
                }
            }
            if w.length() == sys.longest_length()
                && w0_sphericality_closed_form(sys, &e.left_descents)? != e.spherical()
            {
                return Err(mismatch(sys, w, "longest element closed form disagrees"));
            }
            Ok(())
        })?;
    }
    Ok(CensusReport {
        cartan_type: sys.cartan_type(),
        total_elements: group.len(),
        rows,
        expected_nonspherical: expected_nonspherical(sys.cartan_type()),
        elapsed: start.elapsed(),
    })
}

fn mismatch(sys: &CoxeterSystem, w: &Element, what: &str) -> Error {
    let label = one_line(sys, w).unwrap_or_else(|| Word::new(sys.reduced_word(w)).to_string());
    Error::VerificationFailed(format!("{what} at {label}"))
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub cartan_type: String,
    pub element: String,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    #[serde(rename = "I")]
    pub subset: Vec<usize>,
    pub spherical: bool,
    pub witness: Option<WitnessCertificate>,
    /// The staircase verdict, for type `A` up to [`STAIRCASE_MAX`].
    pub staircase: Option<bool>,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} element {}", self.cartan_type, self.element)?;
        writeln!(f, "J(w) = {}", fmt_set(&self.j))?;
        writeln!(f, "I = {}", fmt_set(&self.subset))?;
        writeln!(f, "combinatorial: {}", self.spherical)?;
        match &self.witness {
            Some(c) => writeln!(f, "witness: {}", c.word)?,
            None => writeln!(f, "witness: none")?,
        }
        match self.staircase {
            Some(s) => writeln!(f, "staircase: {s}"),
            None => writeln!(f, "staircase: n/a"),
        }
    }
}

pub fn run_check(
    sys: &CoxeterSystem,
    element: &str,
    subset: &[usize],
    paranoid: bool,
) -> Result<CheckReport> {
    let w = parse_element(sys, element)?;
    let witness = find_witness(sys, &w, subset)?;
    let j = sys.left_descents(&w);
    let spherical = witness.is_some();
    let mut staircase = None;
    let mut label = Word::new(sys.reduced_word(&w)).to_string();
    if sys.cartan_type().family() == Family::A {
        let p = Permutation::from_element(sys, &w)?;
        label = p.to_string();
        if p.n() <= STAIRCASE_MAX {
            staircase = Some(crate::poly::staircase_test(&p, subset)?);
        }
        if paranoid
            && is_bigrassmannian(&p)
            && subset == j
            && bigrassmannian_spherical(&p)? != spherical
        {
            return Err(mismatch(sys, &w, "bigrassmannian closed form disagrees"));
        }
    }
    if paranoid {
        if let Some(c) = &witness {
            if !verify_witness(sys, &w, subset, &c.word)? {
                return Err(mismatch(sys, &w, "witness does not verify"));
            }
        }
        if sys.rank() == 2 && subset == j && dihedral_classification(sys, &w)? != spherical {
            return Err(mismatch(sys, &w, "dihedral closed form disagrees"));
        }
        if w.length() == sys.longest_length()
            && w0_sphericality_closed_form(sys, subset)? != spherical
        {
            return Err(mismatch(sys, &w, "longest element closed form disagrees"));
        }
    }
    Ok(CheckReport {
        cartan_type: sys.cartan_type().to_string(),
        element: label,
        j,
        subset: subset.to_vec(),
        spherical,
        witness,
        staircase,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Oracle {
    /// Leading-term peeling of the key polynomial.
    Peel,
    /// The tableau counting rule.
    Ry,
}

impl FromStr for Oracle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "peel" => Ok(Self::Peel),
            "ry" => Ok(Self::Ry),
            _ => Err(Error::Parse(format!(
                "unknown oracle {s:?}, expected peel or ry"
            ))),
        }
    }
}

/// The D-Schur expansion of `kappa_alpha`. The variable count is the larger
/// of `len(alpha)` and `max(D) + 1`.
///
/// `cross_check` compares the two oracles; `paranoid` additionally compares
/// Demazure with Kohnert and peeling with the linear solve.
pub fn run_key_expand(
    alpha: &Composition,
    cuts: &[usize],
    oracle: Oracle,
    cross_check: bool,
    paranoid: bool,
) -> Result<SplitExpansion> {
    let n = alpha
        .len()
        .max(cuts.iter().max().map_or(0, |m| m + 1))
        .max(1);
    let split = SplitSet::new(n, cuts)?;
    let alpha = alpha.padded(n);
    if let Some(&d) = alpha.descents().iter().find(|d| !cuts.contains(d)) {
        return Err(Error::DescentOutsideSplit {
            composition: alpha.to_string(),
            descent: d,
            split: cuts.to_vec(),
        });
    }
    let peel =
        || -> Result<SplitExpansion> { split_expand(&key_polynomial::<BigInt>(&alpha), &split) };
    let out = match oracle {
        Oracle::Peel => peel()?,
        Oracle::Ry => ry_expand(&alpha, &split)?,
    };
    if cross_check || paranoid {
        let other = match oracle {
            Oracle::Peel => ry_expand(&alpha, &split)?,
            Oracle::Ry => peel()?,
        };
        if other != out {
            return Err(Error::VerificationFailed(format!(
                "tableau rule and peeling disagree for {alpha}"
            )));
        }
    }
    if paranoid {
        let key = key_polynomial::<BigInt>(&alpha);
        if alpha.parts().iter().all(|&a| a < 64) && key_via_kohnert::<BigInt>(&alpha) != key {
            return Err(Error::VerificationFailed(format!(
                "Demazure and Kohnert disagree for {alpha}"
            )));
        }
        if split_expand_linear(&key, &split)? != out {
            return Err(Error::VerificationFailed(format!(
                "peeling and linear solve disagree for {alpha}"
            )));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub w: String,
    #[serde(rename = "I")]
    pub subset: Vec<usize>,
    pub combinatorial: bool,
    pub staircase: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConsistencyReport {
    pub n: usize,
    pub pairs_checked: usize,
    pub disagreements: Vec<Disagreement>,
    /// Permutations that are not maximally spherical by the witness search.
    pub combinatorial_nonspherical: Vec<String>,
    /// Permutations whose staircase key fails for `I = J(w)`.
    pub staircase_nonspherical: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl fmt::Display for ConsistencyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n = {}: {} pairs (w, I) checked, {} disagreements",
            self.n,
            self.pairs_checked,
            self.disagreements.len()
        )?;
        for d in &self.disagreements {
            writeln!(
                f,
                "  w = {} I = {} combinatorial: {} staircase: {}",
                d.w,
                fmt_set(&d.subset),
                d.combinatorial,
                d.staircase
            )?;
        }
        writeln!(
            f,
            "not maximally spherical: {} by search, {} by staircase",
            self.combinatorial_nonspherical.len(),
            self.staircase_nonspherical.len()
        )?;
        if !self.combinatorial_nonspherical.is_empty() {
            writeln!(f, "{}", self.combinatorial_nonspherical.join(" "))?;
        }
        Ok(())
    }
}

/// Subsets of `labels`, as sorted vectors.
fn subsets(labels: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0u32..1 << labels.len()).map(move |mask| {
        labels
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &l)| l)
            .collect()
    })
}

fn complement_split(n: usize, subset: &[usize]) -> SplitSet {
    let cuts: Vec<usize> = (1..n).filter(|d| !subset.contains(d)).collect();
    SplitSet::new(n, &cuts).expect("cuts lie in [n-1]")
}

/// Compares the witness search with the staircase test for every `w` in
/// `S_n` and every `I ⊆ J(w)`.
pub fn verify_consistency(n: usize, slow: bool) -> Result<ConsistencyReport> {
    let start = Instant::now();
    if n == 0 || n > CONSISTENCY_MAX {
        return Err(Error::InvalidArgument(format!(
            "n must lie in 1..={CONSISTENCY_MAX}"
        )));
    }
    if n > CONSISTENCY_FAST_MAX && !slow {
        return Err(Error::InvalidArgument(format!("n = {n} needs --slow")));
    }
    let sys = CoxeterSystem::new(CartanType::a(n.max(2) - 1));
    let group = EnumeratedGroup::new(&sys)?;
    let staircase = Partition::staircase(n);
    type Row = (String, usize, Vec<Disagreement>, bool, bool);
    let rows: Vec<Row> = Permutation::all(n)
        .into_par_iter()
        .map(|p| -> Result<Row> {
            let id = if n == 1 {
                0
            } else {
                group.id_of(&p.to_element(&sys)?).expect("enumerated")
            };
            let j = p.left_descents();
            let key: Polynomial<i64> = key_polynomial(&w_act_on_partition(&p, &staircase)?);
            let (mut pairs, mut bad, mut max_comb, mut max_stair) = (0, Vec::new(), true, true);
            for subset in subsets(&j) {
                let comb = n == 1
                    || find_witness_in(&group, &id, &sys.decompose_subset(&subset)?).is_some();
                let stair = is_d_multiplicity_free(&key, &complement_split(n, &subset))?;
                pairs += 1;
                if subset == j {
                    (max_comb, max_stair) = (comb, stair);
                }
                if comb != stair {
                    bad.push(Disagreement {
                        w: p.to_string(),
                        subset,
                        combinatorial: comb,
                        staircase: stair,
                    });
                }
            }
            Ok((p.to_string(), pairs, bad, max_comb, max_stair))
        })
        .collect::<Result<_>>()?;
    let mut report = ConsistencyReport {
        n,
        pairs_checked: 0,
        disagreements: Vec::new(),
        combinatorial_nonspherical: Vec::new(),
        staircase_nonspherical: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for (w, pairs, bad, comb, stair) in rows {
        report.pairs_checked += pairs;
        report.disagreements.extend(bad);
        if !comb {
            report.combinatorial_nonspherical.push(w.clone());
        }
        if !stair {
            report.staircase_nonspherical.push(w);
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Experiment {
    PatternAvoidance,
    VanishingDensity,
    Upone,
    DistinctLambda,
}

impl Experiment {
    pub const ALL: [Experiment; 4] = [
        Experiment::PatternAvoidance,
        Experiment::VanishingDensity,
        Experiment::Upone,
        Experiment::DistinctLambda,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::PatternAvoidance => "pattern-avoidance",
            Self::VanishingDensity => "vanishing-density",
            Self::Upone => "upone",
            Self::DistinctLambda => "distinct-lambda",
        }
    }

    pub fn default_n(self) -> usize {
        match self {
            Self::PatternAvoidance => 6,
            Self::VanishingDensity => 7,
            Self::Upone => 6,
            Self::DistinctLambda => 5,
        }
    }

    fn max_n(self) -> usize {
        match self {
            Self::PatternAvoidance | Self::VanishingDensity => 8,
            Self::Upone => 7,
            Self::DistinctLambda => 5,
        }
    }
}

impl FromStr for Experiment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown experiment {s:?}")))
    }
}

/// Empirical data for one conjecture. `counterexamples` lists inputs that
/// contradict it; an empty list is evidence, not proof.
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    pub name: String,
    pub n: usize,
    pub lines: Vec<String>,
    pub counterexamples: Vec<String>,
}

impl fmt::Display for ExperimentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "experiment {} (n = {})", self.name, self.n)?;
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        if self.counterexamples.is_empty() {
            writeln!(f, "no counterexample found")
        } else {
            writeln!(f, "{} counterexamples:", self.counterexamples.len())?;
            for c in &self.counterexamples {
                writeln!(f, "  {c}")?;
            }
            Ok(())
        }
    }
}

/// Number of random trials in the `upone` experiment.
pub const UPONE_TRIALS: usize = 400;
/// Largest part of the random compositions in the `upone` experiment.
pub const UPONE_MAX_PART: u32 = 4;

pub fn run_experiment(exp: Experiment, n: Option<usize>, seed: u64) -> Result<ExperimentReport> {
    let n = n.unwrap_or(exp.default_n());
    if n < 2 || n > exp.max_n() {
        return Err(Error::InvalidArgument(format!(
            "{} supports 2 <= n <= {}",
            exp.name(),
            exp.max_n()
        )));
    }
    let mut report = ExperimentReport {
        name: exp.name().to_string(),
        n,
        lines: Vec::new(),
        counterexamples: Vec::new(),
    };
    match exp {
        Experiment::PatternAvoidance => pattern_avoidance(n, &mut report)?,
        Experiment::VanishingDensity => vanishing_density(n, &mut report)?,
        Experiment::Upone => upone(n, seed, &mut report)?,
        Experiment::DistinctLambda => distinct_lambda(n, &mut report)?,
    }
    Ok(report)
}

/// Maximal sphericality of every permutation of `S_n`, in lex order.
fn type_a_census(n: usize) -> Result<Vec<(Permutation, bool)>> {
    let sys = CoxeterSystem::new(CartanType::a(n - 1));
    let group = EnumeratedGroup::new(&sys)?;
    let entries = census(&group);
    let mut out: Vec<(Permutation, bool)> = entries
        .iter()
        .map(|e| {
            Ok((
                Permutation::from_element(&sys, group.element(e.id))?,
                e.spherical(),
            ))
        })
        .collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

fn pattern_avoidance(n: usize, report: &mut ExperimentReport) -> Result<()> {
    let patterns: Vec<Permutation> = type_a_census(5)?
        .into_iter()
        .filter(|(_, s)| !s)
        .map(|(p, _)| p)
        .collect();
    let rows = type_a_census(n)?;
    let (mut bad_with, mut bad_without, mut good_with) = (0, 0, 0);
    for (p, spherical) in &rows {
        let contains = patterns.iter().any(|u| contains_perm_pattern(p, u));
        match (spherical, contains) {
            (false, true) => bad_with += 1,
            (false, false) => {
                bad_without += 1;
                report.counterexamples.push(format!(
                    "{p} is not maximally spherical but avoids every pattern"
                ));
            }
            (true, true) => {
                good_with += 1;
                report
                    .counterexamples
                    .push(format!("{p} is maximally spherical but contains a pattern"));
            }
            (true, false) => {}
        }
    }
    report
        .lines
        .push(format!("{} patterns from S5", patterns.len()));
    report
        .lines
        .push(format!("S{n}: {} permutations", rows.len()));
    report
        .lines
        .push(format!("not spherical, contains a pattern: {bad_with}"));
    report
        .lines
        .push(format!("not spherical, avoids all patterns: {bad_without}"));
    report
        .lines
        .push(format!("spherical, contains a pattern: {good_with}"));
    Ok(())
}

fn vanishing_density(n: usize, report: &mut ExperimentReport) -> Result<()> {
    report
        .lines
        .push("n\ttotal\tnot spherical\tspherical fraction".to_string());
    for k in 2..=n {
        let rows = type_a_census(k)?;
        let bad = rows.iter().filter(|(_, s)| !s).count();
        let frac = (rows.len() - bad) as f64 / rows.len() as f64;
        report
            .lines
            .push(format!("{k}\t{}\t{bad}\t{frac:.4}", rows.len()));
        if let Some(e) = expected_nonspherical(CartanType::a(k - 1)) {
            if e != bad {
                report
                    .counterexamples
                    .push(format!("S{k}: expected {e}, found {bad}"));
            }
        }
    }
    Ok(())
}

fn multiplicity_free(alpha: &Composition, split: &SplitSet) -> Result<bool> {
    is_d_multiplicity_free(&key_polynomial::<BigInt>(alpha), split)
}

fn upone(n: usize, seed: u64, report: &mut ExperimentReport) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut trials, mut premise) = (0, 0);
    while trials < UPONE_TRIALS {
        let parts: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=UPONE_MAX_PART)).collect();
        let j = rng.gen_range(0..n);
        if (0..n).any(|i| i != j && parts[i] == parts[j] + 1) {
            continue;
        }
        let alpha = Composition::new(parts.clone());
        let mut up = parts;
        up[j] += 1;
        let up = Composition::new(up);
        let cuts: BTreeSet<usize> = alpha.descents().into_iter().chain(up.descents()).collect();
        let cuts: Vec<usize> = cuts.into_iter().collect();
        let split = SplitSet::new(n, &cuts)?;
        trials += 1;
        if multiplicity_free(&alpha, &split)? {
            continue;
        }
        premise += 1;
        if multiplicity_free(&up, &split)? {
            report
                .counterexamples
                .push(format!("alpha = {alpha}, raised = {up}, D = {split}"));
        }
    }
    report.lines.push(format!(
        "seed {seed}, {trials} random pairs with parts <= {UPONE_MAX_PART}"
    ));
    report
        .lines
        .push("D = descents of alpha and of the raised composition".to_string());
    report.lines.push(format!(
        "pairs with a non-multiplicity-free alpha: {premise}"
    ));
    Ok(())
}

/// Strictly decreasing partitions with `n` parts drawn from `0..=n+1`.
fn distinct_partitions(n: usize) -> Vec<Partition> {
    let top = n as u32 + 1;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(next_max: i64, left: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::new(current.clone()).expect("decreasing"));
            return;
        }
        for v in (left as i64 - 1..=next_max).rev() {
            current.push(v as u32);
            go(v - 1, left - 1, current, out);
            current.pop();
        }
    }
    go(top as i64, n, &mut current, &mut out);
    out
}

fn distinct_lambda(n: usize, report: &mut ExperimentReport) -> Result<()> {
    let sys = CoxeterSystem::new(CartanType::a(n - 1));
    let group = EnumeratedGroup::new(&sys)?;
    let lambdas = distinct_partitions(n);
    let perms = Permutation::all(n);
    let results: Vec<(usize, usize, Vec<String>)> = perms
        .par_iter()
        .map(|p| -> Result<(usize, usize, Vec<String>)> {
            let id = group.id_of(&p.to_element(&sys)?).expect("enumerated");
            let (mut nonspherical, mut found, mut missing) = (0, 0, Vec::new());
            for subset in subsets(&p.left_descents()) {
                if find_witness_in(&group, &id, &sys.decompose_subset(&subset)?).is_some() {
                    continue;
                }
                nonspherical += 1;
                let split = complement_split(n, &subset);
                let mut hit = false;
                for lambda in &lambdas {
                    if !multiplicity_free(&w_act_on_partition(p, lambda)?, &split)? {
                        hit = true;
                        break;
                    }
                }
                if hit {
                    found += 1;
                } else {
                    missing.push(format!("w = {p}, I = {}", fmt_set(&subset)));
                }
            }
            Ok((nonspherical, found, missing))
        })
        .collect::<Result<_>>()?;
    let nonspherical: usize = results.iter().map(|r| r.0).sum();
    let found: usize = results.iter().map(|r| r.1).sum();
    report.counterexamples = results.into_iter().flat_map(|r| r.2).collect();
    report.lines.push(format!(
        "{} strictly decreasing lambda with parts <= {}",
        lambdas.len(),
        n + 1
    ));
    report.lines.push(format!(
        "pairs (w, I) that are not I-spherical: {nonspherical}"
    ));
    report.lines.push(format!(
        "of these, with a non-multiplicity-free distinct lambda: {found}"
    ));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        let a4 = parse_type("A4").unwrap();
        let w = parse_element(&a4, "24531").unwrap();
        let word = Word::new(a4.reduced_word(&w)).to_string();
        assert_eq!(parse_element(&a4, &word).unwrap(), w);
        assert_eq!(parse_labels(" 3,1,3").unwrap(), vec![1, 3]);
        assert!(parse_labels("").unwrap().is_empty());
        assert!(parse_labels("1,x").is_err());
        assert!("bogus".parse::<Experiment>().is_err());
        assert_eq!("ry".parse::<Oracle>().unwrap(), Oracle::Ry);
    }

    #[test]
    fn check_examples() {
        let r = run_check(&parse_type("A4").unwrap(), "24531", &[1, 3], true).unwrap();
        assert!(!r.spherical);
        assert_eq!(r.staircase, Some(false));
        let r = run_check(&parse_type("A3").unwrap(), "3412", &[2], true).unwrap();
        assert!(r.spherical);
        assert_eq!(r.staircase, Some(true));
        assert!(run_check(&parse_type("A4").unwrap(), "24531", &[2], false).is_err());
    }

    #[test]
    fn small_census() {
        let r = run_census(&parse_type("A3").unwrap(), false, true).unwrap();
        assert_eq!(r.total_elements, 24);
        assert_eq!(r.nonspherical_count(), 0);
        assert!(!r.discrepancy());
        assert!(run_census(&parse_type("A6").unwrap(), false, false).is_err());
    }

    #[test]
    fn distinct_partition_count() {
        // choose 3 distinct values from 0..=4
        assert_eq!(distinct_partitions(3).len(), 10);
        assert!(distinct_partitions(3).contains(&Partition::staircase(3)));
    }
}
