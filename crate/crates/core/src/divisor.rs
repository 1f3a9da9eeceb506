//! Effective divisors supported on the coordinate hyperplanes of a chart.

use std::fmt::Write as _;

use crate::chart::Chart;
use crate::error::{Error, Result};
use crate::natural::Natural;

/// Multiplicity `e_i` of each hyperplane `{x_i = 0}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Divisor<M> {
    mults: Vec<M>,
}

impl<M: Natural> Divisor<M> {
    pub fn new(mults: Vec<M>) -> Self {
        Divisor { mults }
    }

    pub fn zero(dim: usize) -> Self {
        Divisor {
            mults: vec![M::zero(); dim],
        }
    }

    pub fn from_u64s(mults: &[u64]) -> Result<Self> {
        mults
            .iter()
            .map(|&m| M::from_u64_exact(m))
            .collect::<Result<Vec<_>>>()
            .map(Divisor::new)
    }

    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn mults(&self) -> &[M] {
        &self.mults
    }

    pub fn get(&self, i: usize) -> Option<&M> {
        self.mults.get(i)
    }

    /// True when every multiplicity is zero (the trivial modulus).
    pub fn is_zero(&self) -> bool {
        self.mults.iter().all(|m| m.is_zero())
    }

    /// Indices with positive multiplicity, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.mults
            .iter()
            .enumerate()
            .filter(|(_, m)| !m.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn support_subset_of(&self, other: &Self) -> Result<bool> {
        self.check_len(other.len())?;
        Ok(self
            .mults
            .iter()
            .zip(&other.mults)
            .all(|(a, b)| a.is_zero() || !b.is_zero()))
    }

    /// Containment of effective divisors: `self ⊇ other`, i.e. `self_i >= other_i`.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_len(other.len())?;
        Ok(self.mults.iter().zip(&other.mults).all(|(a, b)| a >= b))
    }

    pub fn scaled(&self, n: &M) -> Result<Self> {
        self.mults
            .iter()
            .map(|m| m.mul_checked(n))
            .collect::<Result<Vec<_>>>()
            .map(Divisor::new)
    }

    /// Drops the entry at `index`.
    pub fn without(&self, index: usize) -> Self {
        let mut mults = self.mults.clone();
        mults.remove(index);
        Divisor { mults }
    }

    pub fn with_appended(&self, m: M) -> Self {
        let mut mults = self.mults.clone();
        mults.push(m);
        Divisor { mults }
    }

    pub(crate) fn check_len(&self, expected: usize) -> Result<()> {
        if self.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: self.len(),
            });
        }
        Ok(())
    }

    /// Canonical text `{coord: mult, ...}`: coordinates in chart order,
    /// zero entries omitted. The zero divisor renders as `{}`.
    pub fn render(&self, chart: &Chart) -> Result<String> {
        self.check_len(chart.dim())?;
        let mut out = String::from("{");
        let mut first = true;
        for (name, m) in chart.coords().iter().zip(&self.mults) {
            if m.is_zero() {
                continue;
            }
            if !first {
                out.push_str(", ");
            }
            first = false;
            let _ = write!(out, "{name}: {m}");
        }
        out.push('}');
        Ok(out)
    }
}

/// `A ⊇ B` as effective divisors.
pub fn divisor_leq<M: Natural>(a: &Divisor<M>, b: &Divisor<M>) -> Result<bool> {
    a.contains(b)
}
