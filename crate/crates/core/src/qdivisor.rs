//! Rational divisors stored as an integer divisor at a level.
//!
//! `(n, D)` means `(1/n)·D`. Levels form a filtered colimit under the
//! transitions `(n, D) ↦ (nm, mD)`, so two representatives are equal iff
//! their reduced forms coincide.

use num_rational::Ratio;

use crate::chart::Chart;
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::monomial::MonomialMap;
use crate::natural::Natural;
use crate::pair::{twist, Pair, PairMap};

/// Coordinate name used for the chart at infinity of `P¹` in [`cube`].
pub const CUBE_COORD: &str = "inf";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPair<M> {
    level: M,
    pair: Pair<M>,
}

impl<M: Natural> QPair<M> {
    pub fn new(level: M, pair: Pair<M>) -> Result<Self> {
        if level.is_zero() {
            return Err(Error::ZeroNotAllowed("level"));
        }
        Ok(QPair { level, pair })
    }

    pub fn level(&self) -> &M {
        &self.level
    }

    pub fn pair(&self) -> &Pair<M> {
        &self.pair
    }

    /// Exact rational multiplicities `mult_i / level`, for display and testing.
    pub fn rational_mults(&self) -> Vec<Ratio<M>> {
        self.pair
            .divisor()
            .mults()
            .iter()
            .map(|m| Ratio::new(m.clone(), self.level.clone()))
            .collect()
    }

    pub fn normalize(&self) -> Self {
        let g = self
            .pair
            .divisor()
            .mults()
            .iter()
            .fold(self.level.clone(), |g, m| g.gcd(m));
        let mults = self
            .pair
            .divisor()
            .mults()
            .iter()
            .map(|m| m.clone() / g.clone())
            .collect();
        QPair {
            level: self.level.clone() / g,
            pair: Pair::new(self.pair.chart().clone(), Divisor::new(mults))
                .expect("length preserved"),
        }
    }

    /// Equality in the colimit: `B.level · A.D = A.level · B.D`.
    pub fn q_eq(&self, other: &Self) -> Result<bool> {
        if self.pair.chart() != other.pair.chart() {
            return Err(Error::ChartMismatch(format!(
                "{} vs {}",
                self.pair.chart(),
                other.pair.chart()
            )));
        }
        let lhs = self.pair.divisor().scaled(&other.level)?;
        let rhs = other.pair.divisor().scaled(&self.level)?;
        Ok(lhs == rhs)
    }

    /// The transition `(n, P) ↦ (nm, P^(m))`.
    pub fn transition(&self, m: &M) -> Result<Self> {
        if m.is_zero() {
            return Err(Error::ZeroNotAllowed("transition factor"));
        }
        Ok(QPair {
            level: self.level.mul_checked(m)?,
            pair: twist(&self.pair, m)?,
        })
    }
}

pub fn q_normalize<M: Natural>(q: &QPair<M>) -> QPair<M> {
    q.normalize()
}

pub fn q_eq<M: Natural>(a: &QPair<M>, b: &QPair<M>) -> Result<bool> {
    a.q_eq(b)
}

pub fn q_transition<M: Natural>(q: &QPair<M>, m: &M) -> Result<QPair<M>> {
    q.transition(m)
}

/// The chart at infinity of `(X × P¹, X∞ × P¹ + n · X × {∞})`.
///
/// Only this chart is built: the other chart of `P¹` adds no boundary
/// component. The new coordinate is [`CUBE_COORD`] and is appended last.
pub fn cube<M: Natural>(p: &Pair<M>, n: &M) -> Result<Pair<M>> {
    cube_with_coord(p, n, CUBE_COORD)
}

pub fn cube_with_coord<M: Natural>(p: &Pair<M>, n: &M, coord: &str) -> Result<Pair<M>> {
    if n.is_zero() {
        return Err(Error::ZeroNotAllowed("cube weight"));
    }
    let chart = p.chart().extended(coord)?;
    Pair::new(chart, p.divisor().with_appended(n.clone()))
}

/// The projection `cube(P, n) -> P` forgetting the last coordinate.
pub fn cube_projection<M: Natural>(p: &Pair<M>, n: &M) -> Result<PairMap<M>> {
    cube_projection_with_coord(p, n, CUBE_COORD)
}

pub fn cube_projection_with_coord<M: Natural>(
    p: &Pair<M>,
    n: &M,
    coord: &str,
) -> Result<PairMap<M>> {
    let src = cube_with_coord(p, n, coord)?;
    let d = p.dim();
    let expo = (0..d)
        .map(|j| {
            (0..=d)
                .map(|i| if i == j { M::one() } else { M::zero() })
                .collect()
        })
        .collect();
    let map = MonomialMap::new(src.chart().clone(), p.chart().clone(), expo)?;
    PairMap::new(map, src, p.clone())
}

/// The weight `n` if `f` is a cube projection of weight `n` up to renaming
/// of coordinates, `None` otherwise.
///
/// That means: the source has one more coordinate than the target, the
/// matrix is a 0/1 matrix mapping each target coordinate to a distinct
/// source coordinate, exactly one source coordinate `k` is forgotten, the
/// source divisor off `k` is the target divisor carried along, and the
/// source multiplicity at `k` is `n >= 1`.
pub fn ci_weight<M: Natural>(f: &PairMap<M>) -> Option<M> {
    let d = f.dst().dim();
    if f.src().dim() != d + 1 {
        return None;
    }
    let mut hit = vec![None; d + 1];
    for (j, row) in f.map().expo().iter().enumerate() {
        let mut ones = row.iter().enumerate().filter(|(_, e)| !e.is_zero());
        let (i, e) = ones.next()?;
        if !e.is_one() || ones.next().is_some() || hit[i].is_some() {
            return None;
        }
        hit[i] = Some(j);
    }
    let forgotten = hit.iter().position(Option::is_none)?;
    let src = f.src().divisor().mults();
    let dst = f.dst().divisor().mults();
    for (i, target) in hit.iter().enumerate() {
        if let Some(j) = target {
            if src[i] != dst[*j] {
                return None;
            }
        }
    }
    let n = src[forgotten].clone();
    (!n.is_zero()).then_some(n)
}

/// The chart of a point pair, for building `(P¹, {∞})` as `cube(point, 1)`.
pub fn point_pair<M: Natural>() -> Pair<M> {
    Pair::trivial(Chart::point())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(level: u64, mults: &[u64]) -> QPair<u64> {
        let names: Vec<String> = (0..mults.len()).map(|i| format!("x{i}")).collect();
        let pair = Pair::new(Chart::new(names).unwrap(), Divisor::new(mults.to_vec())).unwrap();
        QPair::new(level, pair).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(qp(6, &[4, 2]).normalize(), qp(3, &[2, 1]));
        assert_eq!(qp(1, &[5, 0]).normalize(), qp(1, &[5, 0]));
        assert_eq!(qp(2, &[2]).normalize(), qp(1, &[1]));
        assert_eq!(qp(4, &[0, 0]).normalize(), qp(1, &[0, 0]));
        assert_eq!(qp(7, &[]).normalize(), qp(1, &[]));
        assert_eq!(
            qp(6, &[4, 2]).rational_mults(),
            vec![Ratio::new(2, 3), Ratio::new(1, 3)]
        );
    }

    #[test]
    fn equality_examples() {
        assert!(qp(2, &[2]).q_eq(&qp(1, &[1])).unwrap());
        assert!(!qp(2, &[1]).q_eq(&qp(3, &[1])).unwrap());
        assert!(qp(6, &[4, 2]).q_eq(&qp(3, &[2, 1])).unwrap());
        assert!(matches!(
            qp(1, &[1]).q_eq(&qp(1, &[1, 1])),
            Err(Error::ChartMismatch(_))
        ));
    }

    #[test]
    fn transition_examples() {
        let q = qp(1, &[2, 5]);
        assert_eq!(q.transition(&4).unwrap(), qp(4, &[8, 20]));
        assert_eq!(qp(2, &[1, 0]).transition(&3).unwrap(), qp(6, &[3, 0]));
        assert!(q.transition(&4).unwrap().q_eq(&q).unwrap());
        assert_eq!(
            q.transition(&0),
            Err(Error::ZeroNotAllowed("transition factor"))
        );
        assert_eq!(
            QPair::new(0, q.pair().clone()),
            Err(Error::ZeroNotAllowed("level"))
        );
    }

    #[test]
    fn cube_examples() {
        let line = cube(&point_pair::<u64>(), &1).unwrap();
        assert_eq!(line.chart().coords(), [CUBE_COORD]);
        assert_eq!(line.divisor().mults(), &[1]);

        let p = qp(1, &[2, 0]).pair().clone();
        assert_eq!(cube(&p, &5).unwrap().divisor().mults(), &[2, 0, 5]);
        assert_eq!(
            twist(&cube(&p, &5).unwrap(), &3).unwrap(),
            cube(&twist(&p, &3).unwrap(), &15).unwrap()
        );

        let clash = Pair::<u64>::trivial(Chart::new([CUBE_COORD]).unwrap());
        assert_eq!(
            cube(&clash, &1),
            Err(Error::CoordinateCollision(CUBE_COORD.into()))
        );
        assert!(cube_with_coord(&clash, &1, "s").is_ok());
        assert_eq!(cube(&p, &0), Err(Error::ZeroNotAllowed("cube weight")));
    }

    #[test]
    fn cube_projection_properties() {
        let p = qp(1, &[2, 0, 3]).pair().clone();
        let proj = cube_projection(&p, &4).unwrap();
        assert!(proj.is_admissible().unwrap());
        // Minimal on the shared components; the added one pulls back to nothing.
        let pulled = proj.pulled_back_modulus().unwrap();
        assert_eq!(pulled.without(3), *p.divisor());
        assert!(pulled.mults()[3] == 0);
        assert_eq!(ci_weight(&proj), Some(4));
    }

    #[test]
    fn ci_weight_rejects_other_maps() {
        let p = qp(1, &[1]).pair().clone();
        let id = PairMap::new(
            MonomialMap::identity(p.chart().clone()),
            p.clone(),
            p.clone(),
        )
        .unwrap();
        assert_eq!(ci_weight(&id), None);

        // Forgetting the first coordinate instead of the last still counts.
        let src = Pair::new(Chart::new(["s", "x0"]).unwrap(), Divisor::new(vec![3, 1])).unwrap();
        let map =
            MonomialMap::new(src.chart().clone(), p.chart().clone(), vec![vec![0, 1]]).unwrap();
        let f = PairMap::new(map.clone(), src, p.clone()).unwrap();
        assert_eq!(ci_weight(&f), Some(3));

        // Divisor not carried along.
        let src = Pair::new(Chart::new(["s", "x0"]).unwrap(), Divisor::new(vec![3, 2])).unwrap();
        assert_eq!(
            ci_weight(&PairMap::new(map.clone(), src, p.clone()).unwrap()),
            None
        );

        // Zero weight at infinity.
        let src = Pair::new(Chart::new(["s", "x0"]).unwrap(), Divisor::new(vec![0, 1])).unwrap();
        assert_eq!(ci_weight(&PairMap::new(map, src, p).unwrap()), None);
    }
}
