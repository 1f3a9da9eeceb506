//! Blowups of a pair along coordinate centers `Z = {x_b = 0 : b ∈ B}`.
//!
//! A center meeting the support of the divisor gives a smooth blowup; a
//! center cut out only by boundary coordinates (an intersection of boundary
//! components) gives a modification, which is the stronger condition.

use std::fmt;

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::monomial::MonomialMap;
use crate::natural::Natural;
use crate::pair::Pair;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    /// `B ⊆ supp(e)`. Also a smooth blowup.
    Modification,
    /// `B ∩ supp(e) ≠ ∅` but `B ⊄ supp(e)`.
    SmoothBlowup,
    /// `B ∩ supp(e) = ∅`: the center is not inside the boundary.
    Invalid,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Modification => "modification",
            Classification::SmoothBlowup => "smooth-blowup",
            Classification::Invalid => "invalid",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlowupSpec<M> {
    pair: Pair<M>,
    center: Vec<usize>,
}

impl<M: Natural> BlowupSpec<M> {
    /// `center` holds 0-based coordinate indices; it is stored sorted.
    pub fn new(pair: Pair<M>, mut center: Vec<usize>) -> Result<Self> {
        if center.is_empty() {
            return Err(Error::EmptyCenter);
        }
        let dim = pair.dim();
        if let Some(&index) = center.iter().find(|&&b| b >= dim) {
            return Err(Error::CenterOutOfRange { index, dim });
        }
        center.sort_unstable();
        if let Some(w) = center.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateCenterIndex(w[0]));
        }
        Ok(BlowupSpec { pair, center })
    }

    pub fn pair(&self) -> &Pair<M> {
        &self.pair
    }

    pub fn center(&self) -> &[usize] {
        &self.center
    }

    fn mult(&self, i: usize) -> &M {
        &self.pair.divisor().mults()[i]
    }

    /// `B ∩ supp(e) ≠ ∅`.
    pub fn meets_boundary(&self) -> bool {
        self.center.iter().any(|&b| !self.mult(b).is_zero())
    }

    /// `B ⊆ supp(e)`.
    pub fn inside_boundary_components(&self) -> bool {
        self.center.iter().all(|&b| !self.mult(b).is_zero())
    }

    pub fn classify(&self) -> Classification {
        if !self.meets_boundary() {
            Classification::Invalid
        } else if self.inside_boundary_components() {
            Classification::Modification
        } else {
            Classification::SmoothBlowup
        }
    }

    /// One chart per center index, in ascending order of the index.
    pub fn charts(&self) -> Result<Vec<BlowupChart<M>>> {
        let verdict = self.classify();
        if verdict == Classification::Invalid {
            return Err(Error::InvalidBlowup(verdict));
        }
        let mut total = M::zero();
        for &b in &self.center {
            total = total.add_checked(self.mult(b))?;
        }
        self.center
            .iter()
            .map(|&j| self.chart_at(j, &total))
            .collect()
    }

    fn chart_at(&self, j: usize, exceptional: &M) -> Result<BlowupChart<M>> {
        let chart = self.pair.chart().clone();
        let d = chart.dim();
        let expo = (0..d)
            .map(|row| {
                (0..d)
                    .map(|col| {
                        let hit = col == row || (col == j && self.center.contains(&row));
                        if hit {
                            M::one()
                        } else {
                            M::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let chart_map = MonomialMap::new(chart.clone(), chart.clone(), expo)?;
        let mut mults = self.pair.divisor().mults().to_vec();
        mults[j] = exceptional.clone();
        let pair = Pair::new(chart, Divisor::new(mults))?;
        Ok(BlowupChart {
            index: j,
            chart_map,
            pair,
        })
    }
}

/// The affine chart of the blowup where `x_index` cuts out the exceptional divisor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlowupChart<M> {
    index: usize,
    chart_map: MonomialMap<M>,
    pair: Pair<M>,
}

impl<M: Natural> BlowupChart<M> {
    pub fn index(&self) -> usize {
        self.index
    }

    /// `y_j ↦ x_j`, `y_b ↦ x_j x_b` for `b ∈ B ∖ {j}`, `y_i ↦ x_i` otherwise.
    pub fn chart_map(&self) -> &MonomialMap<M> {
        &self.chart_map
    }

    pub fn total_transform(&self) -> &Divisor<M> {
        self.pair.divisor()
    }

    /// The new chart with its total-transform divisor.
    pub fn pair(&self) -> &Pair<M> {
        &self.pair
    }
}

pub fn classify<M: Natural>(spec: &BlowupSpec<M>) -> Classification {
    spec.classify()
}

pub fn blowup_charts<M: Natural>(spec: &BlowupSpec<M>) -> Result<Vec<BlowupChart<M>>> {
    spec.charts()
}
