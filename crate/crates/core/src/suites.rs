//! Exhaustive verification suites over all semigroups up to a genus bound.
//!
//! A suite evaluates one family of implications on every enumerated
//! semigroup (the naturals excluded) and records each failure as a
//! violation. Classification suites also list what they found. The probe
//! collects candidates against two open questions about far-flung
//! Gorenstein semigroups; its findings are data, not failures.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::classify::{
    self, is_almost_gorenstein, is_cm_finite, is_far_flung_gorenstein, ref_finiteness,
    RefFiniteness,
};
use crate::construct::{dual, glue, GluingSpec};
use crate::enumerate::{enumerate_levels, Execution};
use crate::error::{Error, Result};
use crate::par;
use crate::rohrbach;
use crate::semigroup::NumericalSemigroup;

/// Registered suite names, in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "redtype-bound",
    "nari-vs-length",
    "maxred-criteria-agree",
    "minmult-pf-formula",
    "lengthconditions",
    "ffg-implications",
    "ag-valuation-bounds",
    "pseudosymm-crit",
    "dual-properties",
    "gluing-formulas",
    "cm-classification",
    "ref-ag-classification",
];

pub const PROBE: &str = "probe-open-questions";

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Record {
    pub generators: Vec<i64>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepResult {
    pub suite_name: String,
    pub genus_bound: usize,
    pub checked: usize,
    pub violations: Vec<Record>,
    pub findings: Vec<Record>,
}

impl SweepResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Search space of the gluing suite. The gluing space is infinite, so
/// these only control coverage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GluingBounds {
    /// Upper bound on both weights `x` and `y`.
    pub max_weight: i64,
    /// Factors are enumerated semigroups of at most this genus.
    pub max_factor_genus: usize,
    /// Gluings whose genus would exceed this are skipped.
    pub max_glued_genus: i64,
}

impl Default for GluingBounds {
    fn default() -> Self {
        GluingBounds {
            max_weight: 30,
            max_factor_genus: 4,
            max_glued_genus: 400,
        }
    }
}

/// Runs the named suite (or the probe) at the given genus bound.
pub fn run_suite(suite_name: &str, g_max: usize) -> Result<SweepResult> {
    Sweep::new(g_max, GluingBounds::default())?.run(suite_name)
}

/// Records far-flung Gorenstein semigroups that answer either open
/// question negatively.
pub fn probe_open_questions(g_max: usize) -> Result<SweepResult> {
    Sweep::new(g_max, GluingBounds::default())?.probe()
}

/// A materialised enumeration shared by several suites.
pub struct Sweep {
    g_max: usize,
    semigroups: Vec<NumericalSemigroup>,
    gluing: GluingBounds,
}

type Check = fn(&NumericalSemigroup) -> Result<Vec<String>>;

impl Sweep {
    pub fn new(g_max: usize, gluing: GluingBounds) -> Result<Self> {
        let semigroups = enumerate_levels(g_max, Execution::Parallel)?
            .into_iter()
            .flatten()
            .filter(|h| !h.is_full())
            .collect();
        Ok(Sweep {
            g_max,
            semigroups,
            gluing,
        })
    }

    pub fn semigroups(&self) -> &[NumericalSemigroup] {
        &self.semigroups
    }

    pub fn run(&self, suite_name: &str) -> Result<SweepResult> {
        let check: Check = match suite_name {
            "redtype-bound" => redtype_bound,
            "nari-vs-length" => nari_vs_length,
            "maxred-criteria-agree" => maxred_criteria_agree,
            "minmult-pf-formula" => minmult_pf_formula,
            "lengthconditions" => length_conditions,
            "ffg-implications" => ffg_implications,
            "ag-valuation-bounds" => ag_valuation_bounds,
            "pseudosymm-crit" => pseudosymm_crit,
            "dual-properties" => dual_properties,
            "gluing-formulas" => return self.gluing_formulas(),
            "cm-classification" => return self.cm_classification(),
            "ref-ag-classification" => return self.ref_ag_classification(),
            PROBE => return self.probe(),
            other => return Err(Error::UnknownSuite(other.to_string())),
        };
        self.per_semigroup(suite_name, check)
    }

    pub fn run_all(&self) -> Result<Vec<SweepResult>> {
        SUITES.iter().map(|name| self.run(name)).collect()
    }

    fn result(&self, name: &str, checked: usize) -> SweepResult {
        SweepResult {
            suite_name: name.to_string(),
            genus_bound: self.g_max,
            checked,
            violations: Vec::new(),
            findings: Vec::new(),
        }
    }

    fn per_semigroup(&self, name: &str, check: Check) -> Result<SweepResult> {
        let outcomes = par::map(&self.semigroups, |h| absorb_internal(check(h)));
        let mut result = self.result(name, self.semigroups.len());
        for (h, outcome) in self.semigroups.iter().zip(outcomes) {
            for detail in outcome?.unwrap_or_else(|d| vec![d]) {
                result.violations.push(record(h, detail));
            }
        }
        Ok(result)
    }

    fn gluing_formulas(&self) -> Result<SweepResult> {
        let bounds = self.gluing;
        let factors: Vec<&NumericalSemigroup> = self
            .semigroups
            .iter()
            .filter(|h| h.genus() <= bounds.max_factor_genus)
            .collect();
        let mut specs = Vec::new();
        for h1 in &factors {
            for h2 in &factors {
                for y in weights(h1, bounds.max_weight) {
                    for x in weights(h2, bounds.max_weight) {
                        if x.gcd(&y) != 1 {
                            continue;
                        }
                        let spec = GluingSpec::new((*h1).clone(), (*h2).clone(), x, y)?;
                        if spec.predicted_genus() <= bounds.max_glued_genus {
                            specs.push(spec);
                        }
                    }
                }
            }
        }

        let outcomes = par::map(&specs, |spec| absorb_internal(check_gluing(spec)));
        let mut result = self.result("gluing-formulas", specs.len());
        let mut equality = 0;
        for (spec, outcome) in specs.iter().zip(outcomes) {
            let (details, product_attained) = match outcome? {
                Ok(pair) => pair,
                Err(detail) => (vec![detail], false),
            };
            equality += usize::from(product_attained);
            for detail in details {
                result.violations.push(Record {
                    generators: spec.glued_generators()?,
                    detail: format!("{} x={} y={} {}: {detail}", spec.h1(), spec.x(), spec.y(), spec.h2()),
                });
            }
        }
        result.findings.push(Record {
            generators: Vec::new(),
            detail: format!(
                "s(glued) = s(H1)*s(H2) in {equality} of {} gluings (weights <= {}, factor genus <= {}, glued genus <= {})",
                specs.len(),
                bounds.max_weight,
                bounds.max_factor_genus,
                bounds.max_glued_genus
            ),
        });
        Ok(result)
    }

    fn cm_classification(&self) -> Result<SweepResult> {
        let outcomes = par::map(&self.semigroups, |h| -> Result<(bool, Vec<String>)> {
            let mut v = Vec::new();
            let gorenstein = h.semigroup_type()? == 1;
            let finite = is_cm_finite(h)?;
            if gorenstein {
                let g = h.generators();
                let ade = h.multiplicity() == 2 || g == [3, 4] || g == [3, 5];
                if finite != ade {
                    v.push(format!("Gorenstein CM-finite = {finite} but ADE list says {ade}"));
                }
            }
            if finite && h.reduced_type()? == 1 && !gorenstein {
                v.push("minimal reduced type, CM-finite, not Gorenstein".into());
            }
            if finite && h.multiplicity() > 3 {
                v.push("CM-finite with multiplicity > 3".into());
            }
            Ok((finite && !gorenstein, v))
        });
        let mut result = self.result("cm-classification", self.semigroups.len());
        let mut found = Vec::new();
        for (h, outcome) in self.semigroups.iter().zip(outcomes) {
            let (listed, details) = outcome?;
            if listed {
                found.push(h.generators().to_vec());
                result.findings.push(record(h, "CM-finite, not Gorenstein".into()));
            }
            for detail in details {
                result.violations.push(record(h, detail));
            }
        }
        let expected = self.expected_members(&[&[3, 4, 5], &[3, 5, 7]]);
        compare_lists(&mut result, found, expected, "non-Gorenstein CM-finite");
        Ok(result)
    }

    fn ref_ag_classification(&self) -> Result<SweepResult> {
        let outcomes = par::map(&self.semigroups, |h| absorb_internal(check_ref_ag(h)));
        let mut result = self.result("ref-ag-classification", self.semigroups.len());
        let mut found = Vec::new();
        for (h, outcome) in self.semigroups.iter().zip(outcomes) {
            let outcome = outcome?;
            let (listed, family, details) = match outcome {
                Ok(t) => t,
                Err(detail) => (false, None, vec![detail]),
            };
            if listed {
                found.push(h.generators().to_vec());
                result.findings.push(record(
                    h,
                    "Ref-finite, almost Gorenstein, minimal reduced type".into(),
                ));
            }
            if let Some(label) = family {
                if h.multiplicity() <= 8 {
                    result.findings.push(record(h, format!("{label}: Ref-finite confirmed")));
                }
            }
            for detail in details {
                result.violations.push(record(h, detail));
            }
        }
        let expected = self.expected_members(&[&[3, 7, 11], &[3, 8, 13]]);
        compare_lists(&mut result, found, expected, "AG minimal reduced type Ref-finite");
        Ok(result)
    }

    /// The listed semigroups whose genus lies within the sweep.
    fn expected_members(&self, gens: &[&[i64]]) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = gens
            .iter()
            .map(|g| NumericalSemigroup::new(g).expect("valid generators"))
            .filter(|h| h.genus() <= self.g_max)
            .map(|h| h.generators().to_vec())
            .collect();
        out.sort();
        out
    }

    pub fn probe(&self) -> Result<SweepResult> {
        let outcomes = par::map(&self.semigroups, |h| absorb_internal(probe_one(h)));
        let mut result = self.result(PROBE, self.semigroups.len());
        for (h, outcome) in self.semigroups.iter().zip(outcomes) {
            match outcome? {
                Ok(notes) => result.findings.extend(notes.into_iter().map(|d| record(h, d))),
                Err(detail) => result.violations.push(record(h, detail)),
            }
        }
        Ok(result)
    }
}

fn record(h: &NumericalSemigroup, detail: String) -> Record {
    Record {
        generators: h.generators().to_vec(),
        detail,
    }
}

/// Internal inconsistencies become violation text; other errors propagate.
fn absorb_internal<T>(r: Result<T>) -> Result<std::result::Result<T, String>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e) if e.is_internal() => Ok(Err(e.to_string())),
        Err(e) => Err(e),
    }
}

fn compare_lists(result: &mut SweepResult, found: Vec<Vec<i64>>, expected: Vec<Vec<i64>>, what: &str) {
    if found != expected {
        result.violations.push(Record {
            generators: Vec::new(),
            detail: format!("{what} list {found:?} != expected {expected:?}"),
        });
    }
}

/// Non-generator elements `2 ≤ w ≤ bound` of `h`.
fn weights(h: &NumericalSemigroup, bound: i64) -> Vec<i64> {
    (2..=bound)
        .filter(|&w| h.contains(w) && !h.generators().contains(&w))
        .collect()
}

fn redtype_bound(h: &NumericalSemigroup) -> Result<Vec<String>> {
    let s = h.reduced_type()?;
    let pf = h.pseudo_frobenius()?;
    let mut v = Vec::new();
    if s < 1 || s > pf.len() {
        v.push(format!("reduced type {s} outside [1, {}]", pf.len()));
    }
    let window = h.conductor() - h.multiplicity();
    if pf.iter().filter(|&&f| f >= window).count() != s {
        v.push("window gaps are not all pseudo-Frobenius".into());
    }
    Ok(v)
}

fn nari_vs_length(h: &NumericalSemigroup) -> Result<Vec<String>> {
    let nari = classify::nari_criterion(h)?;
    let length = classify::length_criterion(h)?;
    Ok(if nari != length {
        vec![format!("Nari {nari} vs length identity {length}")]
    } else {
        vec![]
    })
}

fn maxred_criteria_agree(h: &NumericalSemigroup) -> Result<Vec<String>> {
    let a = classify::maximal_by_interval(h)?;
    let b = classify::maximal_by_pf_minimum(h)?;
    let c = classify::maximal_by_apery(h)?;
    Ok(if a != b || a != c {
        vec![format!("interval {a}, PF minimum {b}, Apery {c}")]
    } else {
        vec![]
    })
}

fn minmult_pf_formula(h: &NumericalSemigroup) -> Result<Vec<String>> {
    let g = h.generators();
    let n = g.len();
    let b1 = g[0];
    if n as i64 != b1 {
        return Ok(vec![]);
    }
    let mut v = Vec::new();
    let pf = h.pseudo_frobenius()?;
    let formula: Vec<i64> = g[1..].iter().map(|b| b - b1).collect();
    if pf != formula.as_slice() {
        v.push(format!("PF {pf:?} != {formula:?}"));
    }
    let s = h.reduced_type()?;
    let maximal = s == pf.len();
    if maximal != (g[1] >= h.conductor()) {
        v.push("maximal reduced type does not match b2 >= c".into());
    }
    // The generator criterion compares the two largest PF numbers; it needs type >= 2.
    if n >= 3 && (s == 1) != (g[n - 2] + b1 - 1 < g[n - 1]) {
        v.push("minimal reduced type does not match b_{n-1} + b1 - 1 < b_n".into());
    }
    Ok(v)
}

fn length_conditions(h: &NumericalSemigroup) -> Result<Vec<String>> {
    let colength = h.conductor_colength();
    let maximal = h.reduced_type()? == h.semigroup_type()?;
    let minimal_mult = h.embedding_dimension() as i64 == h.multiplicity();
    let mut v = Vec::new();
    if colength <= 2 && !maximal {
        v.push(format!("l(R/C) = {colength} but not maximal reduced type"));
    }
    if colength == 3 && !minimal_mult && !maximal {
        v.push("l(R/C) = 3, not minimal multiplicity, not maximal reduced type".into());
    }
    Ok(v)
}

/// `n̄(r) < bound`, or `None` if undecided. The constructive lower bound
/// avoids the search when it already settles the comparison.
fn rohrbach_below(r: usize, bound: i64) -> Result<Option<bool>> {
    if rohrbach::lower_bound(r) as i64 >= bound {
        return Ok(Some(false));
    }
    if r > rohrbach::MAX_R {
        return Ok(None);
    }
    Ok(Some((rohrbach::cached(r)?.value as i64) < bound))
}

fn ffg_implications(h: &NumericalSemigroup) -> Result<Vec<String>> {
    if !is_far_flung_gorenstein(h)? {
        return Ok(vec![]);
    }
    let s = h.reduced_type()?;
    let t = h.semigroup_type()?;
    let e = h.multiplicity();
    let maximal = s == t;
    let minimal_mult = h.embedding_dimension() as i64 == e;
    let mut v = Vec::new();
    if t < 2 || e < 3 {
        v.push(format!("far-flung Gorenstein with type {t}, multiplicity {e}"));
    }
    if s < 2 {
        v.push("far-flung Gorenstein with reduced type 1".into());
    }
    if t <= 3 && !maximal {
        v.push(format!("type {t} <= 3 but s = {s}"));
    }
    if t == 4 && !minimal_mult && !maximal {
        v.push("type 4, not minimal multiplicity, not maximal reduced type".into());
    }
    if t == 5 && e >= 9 && !maximal {
        v.push("type 5, e >= 9, not maximal reduced type".into());
    }
    // e > n̄(t - 1) + 1 forces maximal reduced type.
    if t >= 2 && !maximal && rohrbach_below(t - 1, e - 1)? == Some(true) {
        v.push(format!("e = {e} > n̄({}) + 1 but not maximal reduced type", t - 1));
    }
    // The covering forces e <= n̄(t).
    if rohrbach_below(t, e)? == Some(true) {
        v.push(format!("e = {e} exceeds n̄({t})"));
    }
    Ok(v)
}

fn ag_valuation_bounds(h: &NumericalSemigroup) -> Result<Vec<String>> {
    let t = h.semigroup_type()?;
    if t < 2 || !is_almost_gorenstein(h)? {
        return Ok(vec![]);
    }
    let c = h.conductor();
    let b1 = h.multiplicity();
    let s = h.reduced_type()?;
    let mut v = Vec::new();
    if s == t && c > 2 * b1 - 1 {
        v.push(format!("maximal reduced type with c = {c} > 2b1 - 1"));
    }
    if s == 1 && c < 2 * b1 + 3 {
        v.push(format!("minimal reduced type with c = {c} < 2b1 + 3"));
    }
    Ok(v)
}

fn pseudosymm_crit(h: &NumericalSemigroup) -> Result<Vec<String>> {
    let pf = h.pseudo_frobenius()?;
    let c = h.conductor();
    let pseudo = pf.len() == 2 && 2 * pf[0] == c - 1;
    let ag_two = pf.len() == 2 && is_almost_gorenstein(h)?;
    let mut v = Vec::new();
    if pseudo != ag_two {
        v.push(format!("PF shape {pseudo} vs almost Gorenstein of type 2 {ag_two}"));
    }
    if ag_two {
        let s = h.reduced_type()?;
        let small = c < 2 * h.multiplicity();
        if (s == 2) != small {
            v.push("maximal reduced type does not match c <= 2b1 - 1".into());
        }
        if (s == 1) == small {
            v.push("minimal reduced type does not match c > 2b1 - 1".into());
        }
    }
    Ok(v)
}

fn dual_properties(h: &NumericalSemigroup) -> Result<Vec<String>> {
    let b = dual(h)?;
    let pf = h.pseudo_frobenius()?;
    let c = h.conductor();
    let e = h.multiplicity();
    let s = h.reduced_type()?;
    let t = pf.len();
    let mut v = Vec::new();
    let union_ok = (0..c).all(|x| b.contains(x) == (h.contains(x) || pf.binary_search(&x).is_ok()));
    if !union_ok {
        v.push(format!("dual {b} is not H ∪ PF(H)"));
    }
    let e_dual = b.multiplicity();
    if s == 1 && t >= 2 {
        if e_dual != e {
            v.push(format!("minimal reduced type, non-Gorenstein, dual multiplicity {e_dual} != {e}"));
        }
        if c < 2 * e + 3 {
            v.push(format!("minimal reduced type, non-Gorenstein, c = {c} < 2b1 + 3"));
        }
    }
    if t == 1 && (e_dual < e) != (h.generators() == [2, 3]) {
        v.push(format!("Gorenstein with dual multiplicity {e_dual}"));
    }
    if c > e && s == 1 && e_dual != e {
        v.push("c >= b1 + 1, minimal reduced type, dual multiplicity drops".into());
    }
    if !b.is_full() && b.reduced_type()? == 1 && e_dual == e && s != 1 {
        v.push(format!("dual {b} has minimal reduced type and multiplicity {e} but H has s = {s}"));
    }
    Ok(v)
}

/// Returns the violations and whether `s = s₁·s₂`.
fn check_gluing(spec: &GluingSpec) -> Result<(Vec<String>, bool)> {
    let glued = glue(spec)?;
    let s = glued.reduced_type()?;
    let t = glued.semigroup_type()?;
    let (s1, t1) = (spec.h1().reduced_type()?, spec.h1().semigroup_type()?);
    let (s2, t2) = (spec.h2().reduced_type()?, spec.h2().semigroup_type()?);
    let mut v = Vec::new();
    if glued.genus() as i64 != spec.predicted_genus() {
        v.push(format!("genus {} != predicted {}", glued.genus(), spec.predicted_genus()));
    }
    if s1 == 1 && s2 == 1 && s != 1 {
        v.push("both factors of minimal reduced type but glued is not".into());
    }
    if s == 1 && s1 != 1 && s2 != 1 {
        v.push("glued has minimal reduced type but neither factor does".into());
    }
    if s == t && (s1 != t1 || s2 != t2) {
        v.push("glued has maximal reduced type but a factor does not".into());
    }
    Ok((v, s == s1 * s2))
}

fn family_label(h: &NumericalSemigroup) -> Option<&'static str> {
    let g = h.generators();
    let b1 = g[0];
    let run = |from: i64, to: i64| (from..=to).collect::<Vec<i64>>();
    let mut fam1 = vec![b1];
    fam1.extend(run(b1 + 1, 2 * b1 - 1));
    let mut fam2 = vec![b1];
    fam2.extend(run(b1 + 2, 2 * b1 - 1));
    fam2.push(2 * b1 + 1);
    let mut fam3 = vec![b1, b1 + 1];
    fam3.extend(run(b1 + 3, 2 * b1 - 1));
    if b1 >= 3 && g == fam1.as_slice() {
        Some("family <b1, b1+1, ..., 2b1-1>")
    } else if b1 >= 3 && g == fam2.as_slice() {
        Some("family <b1, b1+2, ..., 2b1-1, 2b1+1>")
    } else if b1 >= 4 && g == fam3.as_slice() {
        Some("family <b1, b1+1, b1+3, ..., 2b1-1>")
    } else {
        None
    }
}

type RefAgOutcome = (bool, Option<&'static str>, Vec<String>);

fn check_ref_ag(h: &NumericalSemigroup) -> Result<RefAgOutcome> {
    let t = h.semigroup_type()?;
    let s = h.reduced_type()?;
    let e = h.multiplicity();
    let ag = is_almost_gorenstein(h)?;
    let verdict = ref_finiteness(h)?;
    let finite = verdict == RefFiniteness::Finite;
    let b = dual(h)?;
    let e_dual = b.multiplicity();
    let b_cm_finite = b.is_full() || is_cm_finite(&b)?;
    let family = family_label(h);
    let mut v = Vec::new();

    if ag && verdict == RefFiniteness::Unknown {
        v.push("almost Gorenstein but Ref-finiteness undecided".into());
    }
    let listed = ag && t >= 2 && s == 1 && finite;
    if ag && t == 2 && s == 2 && e == 3 && !is_cm_finite(h)? {
        v.push("almost Gorenstein, maximal reduced type 2, e = 3, but CM-infinite".into());
    }
    let maximal = s == t;
    if ag && t >= 2 && maximal && e_dual <= 2 {
        let in_family = family.is_some_and(|l| !l.contains("b1+3"));
        if finite != in_family {
            v.push(format!("e(B) = {e_dual}: Ref-finite {finite} but family membership {in_family}"));
        }
    }
    if ag && t >= 2 && maximal && e_dual == 3 {
        let in_family = family.is_some_and(|l| l.contains("b1+3"));
        if finite != in_family {
            v.push(format!("e(B) = 3: Ref-finite {finite} but family membership {in_family}"));
        }
    }
    if !ag && e_dual == e {
        let listed_b = h.generators() == [3, 7, 8] || h.generators() == [3, 8, 10];
        if b_cm_finite != listed_b {
            v.push(format!("not almost Gorenstein, e(B) = e: CM(B) finite {b_cm_finite}"));
        }
    }
    if let Some(label) = family {
        if !(ag && t >= 2 && maximal && finite) {
            v.push(format!("{label} member is not an almost Gorenstein maximal reduced type Ref-finite semigroup"));
        }
    }
    Ok((listed, family, v))
}

fn probe_one(h: &NumericalSemigroup) -> Result<Vec<String>> {
    if !is_far_flung_gorenstein(h)? {
        return Ok(vec![]);
    }
    let s = h.reduced_type()?;
    let t = h.semigroup_type()?;
    if s == t {
        return Ok(vec![]);
    }
    let e = h.multiplicity();
    let n = h.embedding_dimension() as i64;
    let mut notes = Vec::new();
    if e > n {
        notes.push(format!(
            "far-flung Gorenstein with e = {e} > edim = {n} but s = {s} < type = {t}"
        ));
    }
    if t <= rohrbach::MAX_R {
        let bound = rohrbach::cached(t)?.value as i64 - t as i64 + 1;
        if e >= bound {
            notes.push(format!(
                "far-flung Gorenstein with e = {e} >= n̄({t}) - {t} + 1 = {bound} but s = {s} < type = {t}"
            ));
        }
    } else if e > rohrbach::lower_bound(t) as i64 - t as i64 {
        notes.push(format!("type {t} beyond Rohrbach range; second question not evaluated"));
    }
    Ok(notes)
}
