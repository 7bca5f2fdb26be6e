//! Classification predicates and the aggregated [`InvariantReport`].
//!
//! Wherever two criteria are known to be equivalent both are evaluated and
//! compared; disagreement is reported as [`Error::InternalInconsistency`].

use serde::{Deserialize, Serialize};

use crate::construct::dual;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::valuation::ValuationSet;

fn proper(h: &NumericalSemigroup) -> Result<&[i64]> {
    h.pseudo_frobenius()
}

fn inconsistent(h: &NumericalSemigroup, what: &str) -> Error {
    Error::InternalInconsistency(format!("{h}: {what}"))
}

/// `x ∈ H ⇔ F - x ∉ H` for every `x ∈ [0, F]`.
pub fn is_symmetric(h: &NumericalSemigroup) -> Result<bool> {
    proper(h)?;
    let f = h.frobenius();
    Ok((0..=f).all(|x| h.contains(x) != h.contains(f - x)))
}

/// Type one, checked against symmetry of `H`.
pub fn is_gorenstein(h: &NumericalSemigroup) -> Result<bool> {
    let by_type = proper(h)?.len() == 1;
    if by_type != is_symmetric(h)? {
        return Err(inconsistent(h, "type-one and symmetry tests disagree"));
    }
    Ok(by_type)
}

/// Embedding dimension equals multiplicity. When it holds, the
/// pseudo-Frobenius set must be `{b_i - b_1 : i ≥ 2}`.
pub fn is_minimal_multiplicity(h: &NumericalSemigroup) -> Result<bool> {
    let pf = proper(h)?;
    let minimal = h.embedding_dimension() as i64 == h.multiplicity();
    if minimal {
        let b1 = h.multiplicity();
        let expected: Vec<i64> = h.generators()[1..].iter().map(|b| b - b1).collect();
        if pf != expected.as_slice() {
            return Err(inconsistent(h, "minimal multiplicity PF formula fails"));
        }
    }
    Ok(minimal)
}

/// `s(H) = type(H)`, counting gaps in the window `[c - e, c - 1]`.
pub fn maximal_by_interval(h: &NumericalSemigroup) -> Result<bool> {
    Ok(h.reduced_type()? == proper(h)?.len())
}

/// `min PF(H) ≥ c - b₁`.
pub fn maximal_by_pf_minimum(h: &NumericalSemigroup) -> Result<bool> {
    let pf = proper(h)?;
    Ok(pf[0] >= h.conductor() - h.multiplicity())
}

/// `min M(e) ≥ max Ap(H, e) - e + 1`, with `M(e)` the `≤_H`-maximal Apéry
/// elements.
pub fn maximal_by_apery(h: &NumericalSemigroup) -> Result<bool> {
    proper(h)?;
    let e = h.multiplicity();
    let ap = h.apery_set(e)?;
    let maximals = h.apery_maximals(e)?;
    Ok(maximals[0] > ap[ap.len() - 1] - e)
}

pub fn has_maximal_reduced_type(h: &NumericalSemigroup) -> Result<bool> {
    let interval = maximal_by_interval(h)?;
    let pf_min = maximal_by_pf_minimum(h)?;
    let apery = maximal_by_apery(h)?;
    if interval != pf_min || interval != apery {
        return Err(inconsistent(
            h,
            &format!("maximal reduced type criteria disagree: interval {interval}, PF {pf_min}, Apery {apery}"),
        ));
    }
    Ok(interval)
}

pub fn has_minimal_reduced_type(h: &NumericalSemigroup) -> Result<bool> {
    let pf = proper(h)?;
    let by_count = h.reduced_type()? == 1;
    let c = h.conductor();
    let b1 = h.multiplicity();
    let second = pf.len().checked_sub(2).map(|i| pf[i]);
    let strict = second.is_none_or(|x| x < c - b1);
    let loose = second.is_none_or(|x| x <= c - b1 - 2);
    if by_count != strict || by_count != loose {
        return Err(inconsistent(h, "minimal reduced type criteria disagree"));
    }
    let n = h.embedding_dimension();
    if n >= 3 && is_minimal_multiplicity(h)? {
        let g = h.generators();
        let by_generators = g[n - 2] + b1 - 1 < g[n - 1];
        if by_generators != by_count {
            return Err(inconsistent(h, "minimal multiplicity generator criterion disagrees"));
        }
    }
    Ok(by_count)
}

/// `f_i + f_{t-i} = c - 1` for `1 ≤ i ≤ t - 1`, with `f_1 < … < f_t` the
/// pseudo-Frobenius numbers.
pub fn nari_criterion(h: &NumericalSemigroup) -> Result<bool> {
    let pf = proper(h)?;
    let t = pf.len();
    let f = h.frobenius();
    Ok((1..t).all(|i| pf[i - 1] + pf[t - 1 - i] == f))
}

/// `ℓ(R̄/R) = ℓ(R/𝔠) + type - 1`, i.e. `2·genus = c + type - 1`.
pub fn length_criterion(h: &NumericalSemigroup) -> Result<bool> {
    let t = proper(h)?.len() as i64;
    Ok(2 * h.genus() as i64 == h.conductor() + t - 1)
}

pub fn is_almost_gorenstein(h: &NumericalSemigroup) -> Result<bool> {
    let nari = nari_criterion(h)?;
    if nari != length_criterion(h)? {
        return Err(inconsistent(h, "Nari and length criteria for almost Gorenstein disagree"));
    }
    Ok(nari)
}

/// `PF(H) = {(c-1)/2, c-1}`.
///
/// Also enforces that a pseudo-symmetric `H` has maximal reduced type iff
/// `c ≤ 2b₁ - 1` and minimal reduced type otherwise.
pub fn is_pseudo_symmetric(h: &NumericalSemigroup) -> Result<bool> {
    let pf = proper(h)?;
    let f = h.frobenius();
    let pseudo = pf.len() == 2 && 2 * pf[0] == f;
    let ag_type_two = pf.len() == 2 && is_almost_gorenstein(h)?;
    if pseudo != ag_type_two {
        return Err(inconsistent(h, "pseudo-symmetric is not almost Gorenstein of type 2"));
    }
    if pseudo {
        let small_conductor = h.conductor() < 2 * h.multiplicity();
        if has_maximal_reduced_type(h)? != small_conductor
            || has_minimal_reduced_type(h)? == small_conductor
        {
            return Err(inconsistent(h, "pseudo-symmetric conductor criterion fails"));
        }
    }
    Ok(pseudo)
}

/// The exponents `c - 1 - f` for `f ∈ PF(H)`, ascending. They are the
/// valuations of the generators of the standard canonical ideal.
pub fn canonical_exponents(h: &NumericalSemigroup) -> Result<Vec<i64>> {
    let f = h.frobenius();
    let mut out: Vec<i64> = proper(h)?.iter().map(|p| f - p).collect();
    out.sort_unstable();
    Ok(out)
}

/// Value set of the canonical ideal `Σ_{f ∈ PF(H)} t^{c-1-f}·k[[H]]`.
pub fn canonical_valuations(h: &NumericalSemigroup) -> Result<ValuationSet> {
    let values = h.values();
    Ok(canonical_exponents(h)?
        .into_iter()
        .map(|k| values.shifted(k))
        .reduce(|a, b| a.union(&b))
        .expect("PF is non-empty"))
}

/// Pairwise sums of the canonical exponents cover `{0, 1, …, e - 1}`.
pub fn is_far_flung_gorenstein(h: &NumericalSemigroup) -> Result<bool> {
    let exps = canonical_exponents(h)?;
    let e = h.multiplicity();
    let mut covered = vec![false; e as usize];
    for &a in &exps {
        for &b in &exps {
            if a + b < e {
                covered[(a + b) as usize] = true;
            }
        }
    }
    let by_exponents = covered.iter().all(|&c| c);

    // Same statement on the PF side: the top e integers up to 2(c-1) are PF sums.
    let pf = proper(h)?;
    let top = 2 * h.frobenius();
    let by_pf_sums = (top - e + 1..=top).all(|z| pf.iter().any(|&p| pf.binary_search(&(z - p)).is_ok()));
    if by_exponents != by_pf_sums {
        return Err(inconsistent(h, "far-flung covering criteria disagree"));
    }
    Ok(by_exponents)
}

/// `μ((𝔫R̄ + R)/R)`: the number of integers strictly between `e` and `2e`
/// missing from `H`.
pub fn mu_overring(h: &NumericalSemigroup) -> Result<usize> {
    proper(h)?;
    let e = h.multiplicity();
    Ok((e + 1..2 * e).filter(|&j| !h.contains(j)).count())
}

/// Finite CM representation type: `e ≤ 3` and `μ ≤ 1`.
pub fn is_cm_finite(h: &NumericalSemigroup) -> Result<bool> {
    Ok(h.multiplicity() <= 3 && mu_overring(h)? <= 1)
}

/// Finite representation type of the reflexive module category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RefFiniteness {
    Finite,
    Infinite,
    Unknown,
}

impl std::fmt::Display for RefFiniteness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RefFiniteness::Finite => "finite",
            RefFiniteness::Infinite => "infinite",
            RefFiniteness::Unknown => "unknown",
        })
    }
}

/// Decides Ref-finiteness where a criterion applies.
///
/// Finite when the endomorphism ring of the maximal ideal (value semigroup
/// `H*`) has finite CM type; for almost Gorenstein `H` that is also
/// necessary. Otherwise finite CM type of `H` itself suffices, and anything
/// left is `Unknown`. `H* = ℕ` is regular, hence CM-finite.
pub fn ref_finiteness(h: &NumericalSemigroup) -> Result<RefFiniteness> {
    proper(h)?;
    let b = dual(h)?;
    let b_finite = b.is_full() || is_cm_finite(&b)?;
    Ok(if b_finite {
        RefFiniteness::Finite
    } else if is_almost_gorenstein(h)? {
        RefFiniteness::Infinite
    } else if is_cm_finite(h)? {
        RefFiniteness::Finite
    } else {
        RefFiniteness::Unknown
    })
}

/// All invariants and verdicts for one semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub generators: Vec<i64>,
    pub multiplicity: i64,
    #[serde(rename = "edim")]
    pub embedding_dimension: usize,
    pub genus: usize,
    pub frobenius: i64,
    pub conductor: i64,
    #[serde(rename = "type")]
    pub semigroup_type: usize,
    pub reduced_type: usize,
    #[serde(rename = "pf")]
    pub pf_set: Vec<i64>,
    pub gorenstein: bool,
    pub minimal_multiplicity: bool,
    pub max_reduced_type: bool,
    pub min_reduced_type: bool,
    pub almost_gorenstein: bool,
    pub pseudo_symmetric: bool,
    pub far_flung_gorenstein: bool,
    pub cm_finite: bool,
    pub ref_finite: RefFiniteness,
    pub mu_overring: usize,
}

/// Computes every invariant and runs all internal cross-checks.
pub fn classify(h: &NumericalSemigroup) -> Result<InvariantReport> {
    let pf = proper(h)?.to_vec();
    let c = h.conductor();
    let e = h.multiplicity();
    let s = h.reduced_type()?;
    let t = pf.len();

    let in_window = pf.iter().filter(|&&p| p >= c - e).count();
    if s != in_window || s == 0 || s > t {
        return Err(inconsistent(h, "reduced type outside [1, type] or not PF-supported"));
    }
    let ap = h.apery_set(e)?;
    if ap[ap.len() - 1] - e + 1 != c {
        return Err(inconsistent(h, "conductor differs from max Ap(H,e) - e + 1"));
    }
    let from_apery: Vec<i64> = h.apery_maximals(e)?.iter().map(|w| w - e).collect();
    if from_apery != pf {
        return Err(inconsistent(h, "PF differs from Apery maximals shifted by e"));
    }

    let report = InvariantReport {
        generators: h.generators().to_vec(),
        multiplicity: e,
        embedding_dimension: h.embedding_dimension(),
        genus: h.genus(),
        frobenius: h.frobenius(),
        conductor: c,
        semigroup_type: t,
        reduced_type: s,
        gorenstein: is_gorenstein(h)?,
        minimal_multiplicity: is_minimal_multiplicity(h)?,
        max_reduced_type: has_maximal_reduced_type(h)?,
        min_reduced_type: has_minimal_reduced_type(h)?,
        almost_gorenstein: is_almost_gorenstein(h)?,
        pseudo_symmetric: is_pseudo_symmetric(h)?,
        far_flung_gorenstein: is_far_flung_gorenstein(h)?,
        cm_finite: is_cm_finite(h)?,
        ref_finite: ref_finiteness(h)?,
        mu_overring: mu_overring(h)?,
        pf_set: pf,
    };

    if report.gorenstein && !(report.max_reduced_type && report.min_reduced_type) {
        return Err(inconsistent(h, "Gorenstein without both reduced type extremes"));
    }
    if report.max_reduced_type && report.min_reduced_type && !report.gorenstein {
        return Err(inconsistent(h, "both reduced type extremes but not Gorenstein"));
    }
    if report.far_flung_gorenstein && report.min_reduced_type {
        return Err(inconsistent(h, "far-flung Gorenstein of minimal reduced type"));
    }
    if report.pseudo_symmetric && !(report.almost_gorenstein && t == 2) {
        return Err(inconsistent(h, "pseudo-symmetric but not almost Gorenstein of type 2"));
    }
    Ok(report)
}
