//! Gluings and duals.
//!
//! Both constructions carry closed-form predictions (pseudo-Frobenius set,
//! conductor, type, reduced type bound). They are checked against direct
//! recomputation on every call; a mismatch is an [`Error::PredictionMismatch`].

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::semigroup::{NumericalSemigroup, MAX_GENERATOR};

/// Data for the gluing `⟨x·H₁, y·H₂⟩`.
///
/// `y` must be a non-generator element of `H₁` and `x` a non-generator
/// element of `H₂`, with `gcd(x, y) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingSpec {
    h1: NumericalSemigroup,
    h2: NumericalSemigroup,
    x: i64,
    y: i64,
}

impl GluingSpec {
    pub fn new(h1: NumericalSemigroup, h2: NumericalSemigroup, x: i64, y: i64) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidGluing(msg));
        if h1.is_full() || h2.is_full() {
            return bad("factors must be proper numerical semigroups".into());
        }
        if x <= 0 || y <= 0 {
            return bad(format!("weights must be positive (x = {x}, y = {y})"));
        }
        if !h1.contains(y) || h1.generators().contains(&y) {
            return bad(format!("y = {y} must be a non-generator element of H1 = {h1}"));
        }
        if !h2.contains(x) || h2.generators().contains(&x) {
            return bad(format!("x = {x} must be a non-generator element of H2 = {h2}"));
        }
        if x.gcd(&y) != 1 {
            return bad(format!("gcd(x, y) = {} != 1", x.gcd(&y)));
        }
        Ok(GluingSpec { h1, h2, x, y })
    }

    pub fn h1(&self) -> &NumericalSemigroup {
        &self.h1
    }

    pub fn h2(&self) -> &NumericalSemigroup {
        &self.h2
    }

    pub fn x(&self) -> i64 {
        self.x
    }

    pub fn y(&self) -> i64 {
        self.y
    }

    /// Generators `x·a_i` and `y·b_j`, unsorted.
    pub fn glued_generators(&self) -> Result<Vec<i64>> {
        let scale = |k: i64, g: &i64| {
            k.checked_mul(*g)
                .filter(|&p| p <= MAX_GENERATOR)
                .ok_or(Error::Overflow("glued generator"))
        };
        self.h1
            .generators()
            .iter()
            .map(|g| scale(self.x, g))
            .chain(self.h2.generators().iter().map(|g| scale(self.y, g)))
            .collect()
    }

    /// `x(c₁ - 1) + y(c₂ - 1) + xy + 1`.
    pub fn predicted_conductor(&self) -> Result<i64> {
        let (x, y) = (self.x, self.y);
        let terms = [
            x.checked_mul(self.h1.frobenius()),
            y.checked_mul(self.h2.frobenius()),
            x.checked_mul(y),
        ];
        terms
            .into_iter()
            .try_fold(1i64, |acc, t| t.and_then(|t| acc.checked_add(t)))
            .ok_or(Error::Overflow("glued conductor"))
    }

    /// `x·g₁ + y·g₂ + (x - 1)(y - 1)/2`.
    pub fn predicted_genus(&self) -> i64 {
        let (x, y) = (self.x, self.y);
        x * self.h1.genus() as i64 + y * self.h2.genus() as i64 + (x - 1) * (y - 1) / 2
    }
}

/// Builds `⟨x·H₁, y·H₂⟩` and checks the gluing formulas against it.
pub fn glue(spec: &GluingSpec) -> Result<NumericalSemigroup> {
    let glued = NumericalSemigroup::new(&spec.glued_generators()?)?;
    let (x, y) = (spec.x, spec.y);
    let (h1, h2) = (&spec.h1, &spec.h2);
    let mismatch = |what: String| Err(Error::PredictionMismatch(format!("{glued} from {spec:?}: {what}")));

    let pf1 = h1.pseudo_frobenius()?;
    let pf2 = h2.pseudo_frobenius()?;
    let mut predicted_pf: Vec<i64> = pf1
        .iter()
        .flat_map(|f| pf2.iter().map(move |g| x * f + y * g + x * y))
        .collect();
    predicted_pf.sort_unstable();
    let pf = glued.pseudo_frobenius()?;
    if pf != predicted_pf.as_slice() {
        return mismatch(format!("PF {pf:?} != predicted {predicted_pf:?}"));
    }
    if glued.conductor() != spec.predicted_conductor()? {
        return mismatch(format!(
            "conductor {} != predicted {}",
            glued.conductor(),
            spec.predicted_conductor()?
        ));
    }
    if pf.len() != pf1.len() * pf2.len() {
        return mismatch("type is not multiplicative".into());
    }
    let e = (x * h1.multiplicity()).min(y * h2.multiplicity());
    if glued.multiplicity() != e {
        return mismatch(format!("multiplicity {} != {e}", glued.multiplicity()));
    }
    let s = glued.reduced_type()?;
    let bound = h1.reduced_type()? * h2.reduced_type()?;
    if s > bound {
        return mismatch(format!("reduced type {s} exceeds product bound {bound}"));
    }
    Ok(glued)
}

/// The dual `H* = H ∪ PF(H)`, the value semigroup of `End(𝔪)`.
///
/// Its conductor is always `c - e`; when `c = e` the dual is the naturals.
pub fn dual(h: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    let pf = h.pseudo_frobenius()?;
    let mut gens = h.generators().to_vec();
    gens.extend_from_slice(pf);
    let b = NumericalSemigroup::new(&gens)?;
    let expected = h.conductor() - h.multiplicity();
    if b.conductor() != expected {
        return Err(Error::PredictionMismatch(format!(
            "dual of {h} has conductor {} instead of c - e = {expected}",
            b.conductor()
        )));
    }
    Ok(b)
}
