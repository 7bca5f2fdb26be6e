use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::valuation::ValuationSet;

/// Generators above this bound are rejected.
pub const MAX_GENERATOR: i64 = 1 << 31;

/// Hard cap on the membership sieve, in bits.
const MAX_SIEVE_BITS: u64 = 1 << 34;

/// Fixed-length bit table.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    fn new(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    #[inline]
    fn get(&self, i: usize) -> bool {
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.words[i >> 6] |= 1 << (i & 63);
    }

    fn truncated(&self, len: usize) -> Bits {
        let mut out = Bits::new(len);
        for i in 0..len {
            if self.get(i) {
                out.set(i);
            }
        }
        out
    }
}

/// A numerical semigroup with its minimal generating system and cached
/// base invariants.
///
/// Membership below the conductor is stored as a bit table; everything at or
/// above the conductor is a member. Values are immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    below_conductor: Bits,
    conductor: i64,
    gaps: Vec<i64>,
    pf: Vec<i64>,
}

/// Builds the semigroup generated by `raw_generators`.
///
/// Input order and duplicates do not matter; redundant generators are
/// dropped. The gcd of the list must be 1.
pub fn build_semigroup(raw_generators: &[i64]) -> Result<NumericalSemigroup> {
    NumericalSemigroup::new(raw_generators)
}

impl NumericalSemigroup {
    pub fn new(raw_generators: &[i64]) -> Result<Self> {
        if raw_generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = raw_generators.iter().find(|&&g| g <= 0) {
            return Err(Error::ZeroOrNegativeGenerator(g));
        }
        if let Some(&g) = raw_generators.iter().find(|&&g| g > MAX_GENERATOR) {
            return Err(Error::GeneratorTooLarge(g));
        }
        let gcd = raw_generators.iter().fold(0i64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::NonCoprimeGenerators(gcd));
        }
        let mut gens = raw_generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let (table, conductor) = sieve(&gens)?;
        Ok(Self::from_table(table, conductor))
    }

    /// The full semigroup of non-negative integers.
    pub fn naturals() -> Self {
        Self::from_table(Bits::new(0), 0)
    }

    /// Assembles a semigroup from its membership table on `[0, conductor)`.
    fn from_table(below_conductor: Bits, conductor: i64) -> Self {
        debug_assert_eq!(below_conductor.len as i64, conductor);
        let c = conductor as usize;
        let member = |x: usize| x >= c || below_conductor.get(x);
        let e = (1..=c).find(|&x| member(x)).unwrap_or(1);

        // Minimal generators are below c + e: anything larger is e plus a member.
        let mut generators: Vec<i64> = Vec::new();
        for x in 1..(c + e).max(2) {
            if !member(x) {
                continue;
            }
            let decomposable = generators
                .iter()
                .any(|&g| (g as usize) < x && member(x - g as usize));
            if !decomposable {
                generators.push(x as i64);
            }
        }

        let gaps: Vec<i64> = (0..c).filter(|&x| !member(x)).map(|x| x as i64).collect();
        let pf = gaps
            .iter()
            .copied()
            .filter(|&x| generators.iter().all(|&g| member((x + g) as usize)))
            .collect();

        NumericalSemigroup {
            generators,
            below_conductor,
            conductor,
            gaps,
            pf,
        }
    }

    /// The child of `self` in the semigroup tree obtained by removing the
    /// minimal generator `g`, which must exceed the Frobenius number.
    pub(crate) fn remove_generator(&self, g: i64) -> Self {
        debug_assert!(g >= self.conductor && self.generators.contains(&g));
        let len = g as usize + 1;
        let mut table = Bits::new(len);
        for x in 0..g as usize {
            if self.contains(x as i64) {
                table.set(x);
            }
        }
        Self::from_table(table, g + 1)
    }

    /// Minimal generators in increasing order.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    /// Largest gap, or -1 for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.conductor - 1
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn is_full(&self) -> bool {
        self.conductor == 0
    }

    #[inline]
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            false
        } else if n >= self.conductor {
            true
        } else {
            self.below_conductor.get(n as usize)
        }
    }

    /// Elements of the semigroup strictly below the conductor.
    pub fn small_elements(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.conductor).filter(move |&x| self.contains(x))
    }

    /// `ℓ(R/𝔠)`: the number of semigroup elements below the conductor.
    pub fn conductor_colength(&self) -> usize {
        self.conductor as usize - self.gaps.len()
    }

    /// The semigroup itself as a valuation set.
    pub fn values(&self) -> ValuationSet {
        ValuationSet::new(self.small_elements().collect(), self.conductor)
    }

    /// Valuations of the conductor ideal: every integer from `c` on.
    pub fn conductor_values(&self) -> ValuationSet {
        ValuationSet::new(Vec::new(), self.conductor)
    }

    /// `Ap(H, h)`: the least element of each residue class modulo `h`, sorted.
    pub fn apery_set(&self, h: i64) -> Result<Vec<i64>> {
        if h <= 0 {
            return Err(Error::NonPositive(h));
        }
        if !self.contains(h) {
            return Err(Error::NotAMember(h));
        }
        let modulus = h as usize;
        let mut least: Vec<Option<i64>> = vec![None; modulus];
        let mut found = 0;
        let mut x = 0i64;
        while found < modulus {
            let slot = &mut least[(x % h) as usize];
            if slot.is_none() && self.contains(x) {
                *slot = Some(x);
                found += 1;
            }
            x += 1;
        }
        let mut out: Vec<i64> = least.into_iter().flatten().collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Maximal elements of `Ap(H, h)` under `a ≤_H b ⇔ b - a ∈ H`.
    pub fn apery_maximals(&self, h: i64) -> Result<Vec<i64>> {
        let ap = self.apery_set(h)?;
        Ok(ap
            .iter()
            .copied()
            .filter(|&w| !ap.iter().any(|&v| v > w && self.contains(v - w)))
            .collect())
    }

    /// Pseudo-Frobenius numbers, ascending. The last one is the Frobenius number.
    pub fn pseudo_frobenius(&self) -> Result<&[i64]> {
        if self.is_full() {
            return Err(Error::FullSemigroup);
        }
        Ok(&self.pf)
    }

    /// Cohen-Macaulay type of `k[[H]]`: the number of pseudo-Frobenius numbers.
    pub fn semigroup_type(&self) -> Result<usize> {
        self.pseudo_frobenius().map(<[i64]>::len)
    }

    /// Number of gaps in the window `[c - e, c - 1]`.
    pub fn reduced_type(&self) -> Result<usize> {
        if self.is_full() {
            return Err(Error::FullSemigroup);
        }
        let lo = self.conductor - self.multiplicity();
        Ok((lo..self.conductor).filter(|&x| !self.contains(x)).count())
    }
}

/// Grows a membership sieve until the first run of `e` consecutive members.
fn sieve(gens: &[i64]) -> Result<(Bits, i64)> {
    let e = gens[0] as usize;
    if e == 1 {
        return Ok((Bits::new(0), 0));
    }
    let mut bound = (2 * *gens.last().unwrap() as u64).max(64);
    loop {
        if bound > MAX_SIEVE_BITS {
            return Err(Error::SieveLimit(MAX_SIEVE_BITS));
        }
        let len = bound as usize;
        let mut table = Bits::new(len);
        table.set(0);
        let mut run = 0usize;
        for i in 1..len {
            let member = gens
                .iter()
                .take_while(|&&g| g as usize <= i)
                .any(|&g| table.get(i - g as usize));
            if member {
                table.set(i);
                run += 1;
                if run == e {
                    let conductor = i + 1 - e;
                    return Ok((table.truncated(conductor), conductor as i64));
                }
            } else {
                run = 0;
            }
        }
        bound *= 2;
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}
