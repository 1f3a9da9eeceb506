//! Monomial morphisms between charts, presented by exponent matrices.

use crate::chart::Chart;
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::natural::Natural;

/// A morphism `source -> target` sending target coordinate `y_j` to the
/// monomial `∏_i x_i^{expo[j][i]}` (unit coefficient).
///
/// The matrix has one row per target coordinate and one column per source
/// coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialMap<M> {
    source: Chart,
    target: Chart,
    expo: Vec<Vec<M>>,
}

impl<M: Natural> MonomialMap<M> {
    pub fn new(source: Chart, target: Chart, expo: Vec<Vec<M>>) -> Result<Self> {
        if expo.len() != target.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim(),
                found: expo.len(),
            });
        }
        if let Some(row) = expo.iter().find(|r| r.len() != source.dim()) {
            return Err(Error::DimensionMismatch {
                expected: source.dim(),
                found: row.len(),
            });
        }
        Ok(MonomialMap {
            source,
            target,
            expo,
        })
    }

    pub fn from_u64_rows(source: Chart, target: Chart, rows: &[Vec<u64>]) -> Result<Self> {
        let expo = rows
            .iter()
            .map(|r| r.iter().map(|&e| M::from_u64_exact(e)).collect())
            .collect::<Result<Vec<Vec<M>>>>()?;
        Self::new(source, target, expo)
    }

    pub fn identity(chart: Chart) -> Self {
        let d = chart.dim();
        let expo = (0..d)
            .map(|j| {
                (0..d)
                    .map(|i| if i == j { M::one() } else { M::zero() })
                    .collect()
            })
            .collect();
        MonomialMap {
            source: chart.clone(),
            target: chart,
            expo,
        }
    }

    pub fn source(&self) -> &Chart {
        &self.source
    }

    pub fn target(&self) -> &Chart {
        &self.target
    }

    pub fn expo(&self) -> &[Vec<M>] {
        &self.expo
    }

    /// Exponent row of the image of target coordinate `j`.
    pub fn image(&self, j: usize) -> &[M] {
        &self.expo[j]
    }

    /// Pulls a target divisor back to the source: `E_i = Σ_j expo[j][i] · D_j`.
    pub fn pullback(&self, d: &Divisor<M>) -> Result<Divisor<M>> {
        d.check_len(self.target.dim())?;
        let mut out = vec![M::zero(); self.source.dim()];
        for (row, dj) in self.expo.iter().zip(d.mults()) {
            if dj.is_zero() {
                continue;
            }
            for (acc, e) in out.iter_mut().zip(row) {
                *acc = acc.add_checked(&e.mul_checked(dj)?)?;
            }
        }
        Ok(Divisor::new(out))
    }

    /// The composite `g ∘ f`; its matrix is `expo(g) · expo(f)`.
    pub fn compose(g: &Self, f: &Self) -> Result<Self> {
        if f.target != g.source {
            return Err(Error::ChartMismatch(format!(
                "cannot compose: {} is not {}",
                f.target, g.source
            )));
        }
        let mut expo = Vec::with_capacity(g.target.dim());
        for g_row in &g.expo {
            let mut row = vec![M::zero(); f.source.dim()];
            for (gk, f_row) in g_row.iter().zip(&f.expo) {
                if gk.is_zero() {
                    continue;
                }
                for (acc, e) in row.iter_mut().zip(f_row) {
                    *acc = acc.add_checked(&gk.mul_checked(e)?)?;
                }
            }
            expo.push(row);
        }
        Ok(MonomialMap {
            source: f.source.clone(),
            target: g.target.clone(),
            expo,
        })
    }
}

/// `g ∘ f`.
pub fn compose<M: Natural>(g: &MonomialMap<M>, f: &MonomialMap<M>) -> Result<MonomialMap<M>> {
    MonomialMap::compose(g, f)
}
