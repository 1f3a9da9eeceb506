//! Modulus pairs on a monomial chart and morphisms between them.
//!
//! A morphism `f : (X, X∞) -> (Y, Y∞)` is admissible when `X∞ ⊇ f*Y∞`.
//! Twisting the source by `n` multiplies `X∞` by `n`; the maps that become
//! admissible after some twist are exactly the morphisms between the
//! associated log schemes, and a morphism there is determined by its
//! underlying monomial map.

use std::fmt;

use crate::chart::Chart;
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::monomial::MonomialMap;
use crate::natural::{ceil_div, Natural};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pair<M> {
    chart: Chart,
    divisor: Divisor<M>,
}

impl<M: Natural> Pair<M> {
    pub fn new(chart: Chart, divisor: Divisor<M>) -> Result<Self> {
        divisor.check_len(chart.dim())?;
        Ok(Pair { chart, divisor })
    }

    /// The pair with the trivial modulus.
    pub fn trivial(chart: Chart) -> Self {
        let divisor = Divisor::zero(chart.dim());
        Pair { chart, divisor }
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn divisor(&self) -> &Divisor<M> {
        &self.divisor
    }

    pub fn dim(&self) -> usize {
        self.chart.dim()
    }

    /// Indices of the coordinates that survive in the interior.
    pub fn boundary_support(&self) -> Vec<usize> {
        self.divisor.support()
    }

    pub fn render_divisor(&self) -> String {
        // Lengths agree by construction.
        self.divisor.render(&self.chart).expect("pair invariant")
    }
}

impl<M: Natural> fmt::Display for Pair<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.chart, self.render_divisor())
    }
}

/// The twist `P^(n)`: same chart, divisor multiplied by `n >= 1`.
pub fn twist<M: Natural>(p: &Pair<M>, n: &M) -> Result<Pair<M>> {
    if n.is_zero() {
        return Err(Error::ZeroNotAllowed("twist factor"));
    }
    Ok(Pair {
        chart: p.chart.clone(),
        divisor: p.divisor.scaled(n)?,
    })
}

/// A candidate morphism of pairs. Admissibility is a query, not an invariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairMap<M> {
    map: MonomialMap<M>,
    src: Pair<M>,
    dst: Pair<M>,
}

impl<M: Natural> PairMap<M> {
    pub fn new(map: MonomialMap<M>, src: Pair<M>, dst: Pair<M>) -> Result<Self> {
        if map.source() != src.chart() {
            return Err(Error::ChartMismatch(format!(
                "map source {} differs from pair chart {}",
                map.source(),
                src.chart()
            )));
        }
        if map.target() != dst.chart() {
            return Err(Error::ChartMismatch(format!(
                "map target {} differs from pair chart {}",
                map.target(),
                dst.chart()
            )));
        }
        Ok(PairMap { map, src, dst })
    }

    pub fn map(&self) -> &MonomialMap<M> {
        &self.map
    }

    pub fn src(&self) -> &Pair<M> {
        &self.src
    }

    pub fn dst(&self) -> &Pair<M> {
        &self.dst
    }

    /// Same monomial map with the source replaced (charts must agree).
    pub fn with_src(&self, src: Pair<M>) -> Result<Self> {
        Self::new(self.map.clone(), src, self.dst.clone())
    }

    pub fn with_dst(&self, dst: Pair<M>) -> Result<Self> {
        Self::new(self.map.clone(), self.src.clone(), dst)
    }

    /// `f*Y∞` on the source chart.
    pub fn pulled_back_modulus(&self) -> Result<Divisor<M>> {
        self.map.pullback(&self.dst.divisor)
    }

    pub fn is_admissible(&self) -> Result<bool> {
        self.src.divisor.contains(&self.pulled_back_modulus()?)
    }

    pub fn minimal_twist(&self) -> Result<Twist<M>> {
        let pulled = self.pulled_back_modulus()?;
        let mut best = M::one();
        for (e, x) in pulled.mults().iter().zip(self.src.divisor.mults()) {
            if e.is_zero() {
                continue;
            }
            if x.is_zero() {
                return Ok(Twist::Infeasible);
            }
            best = best.max(ceil_div(e, x));
        }
        Ok(Twist::Finite(best))
    }

    /// Whether `f` induces a morphism of the associated log schemes:
    /// `supp(f*Y∞) ⊆ supp(X∞)`.
    pub fn hom_log_exists(&self) -> Result<bool> {
        self.pulled_back_modulus()?
            .support_subset_of(&self.src.divisor)
    }

    /// `X∞ = f*Y∞` exactly.
    pub fn is_minimal(&self) -> Result<bool> {
        Ok(self.pulled_back_modulus()? == self.src.divisor)
    }

    /// The same monomial map between the `n`-twists of source and target.
    pub fn twisted(&self, n: &M) -> Result<Self> {
        Self::new(self.map.clone(), twist(&self.src, n)?, twist(&self.dst, n)?)
    }

    /// `g ∘ f` as a map of pairs, from `f`'s source to `g`'s target.
    pub fn then(&self, g: &Self) -> Result<Self> {
        let map = MonomialMap::compose(&g.map, &self.map)?;
        Self::new(map, self.src.clone(), g.dst.clone())
    }

    /// Morphisms in the log localization are identified by their monomial maps.
    pub fn log_equal(&self, other: &Self) -> bool {
        self.map == other.map
    }
}

/// Least `n` with `P^(n) -> Q` admissible, if any.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Twist<M> {
    Finite(M),
    Infeasible,
}

impl<M> Twist<M> {
    pub fn is_finite(&self) -> bool {
        matches!(self, Twist::Finite(_))
    }

    pub fn finite(&self) -> Option<&M> {
        match self {
            Twist::Finite(n) => Some(n),
            Twist::Infeasible => None,
        }
    }
}

impl<M: fmt::Display> fmt::Display for Twist<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Twist::Finite(n) => write!(f, "{n}"),
            Twist::Infeasible => f.write_str("infeasible"),
        }
    }
}

pub fn is_admissible<M: Natural>(f: &PairMap<M>) -> Result<bool> {
    f.is_admissible()
}

pub fn minimal_twist<M: Natural>(f: &PairMap<M>) -> Result<Twist<M>> {
    f.minimal_twist()
}

pub fn hom_log_exists<M: Natural>(f: &PairMap<M>) -> Result<bool> {
    f.hom_log_exists()
}

pub fn is_minimal<M: Natural>(f: &PairMap<M>) -> Result<bool> {
    f.is_minimal()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn line_pair(name: &str, m: u64) -> Pair<u64> {
        Pair::new(Chart::new([name]).unwrap(), Divisor::new(vec![m])).unwrap()
    }

    fn power(m: u64, p: u64, q: u64) -> PairMap<u64> {
        let src = line_pair("t", p);
        let dst = line_pair("y", q);
        let map = MonomialMap::from_u64_rows(src.chart().clone(), dst.chart().clone(), &[vec![m]])
            .unwrap();
        PairMap::new(map, src, dst).unwrap()
    }

    fn identity(p: u64, q: u64) -> PairMap<u64> {
        let src = line_pair("t", p);
        let dst = line_pair("t", q);
        PairMap::new(MonomialMap::identity(src.chart().clone()), src, dst).unwrap()
    }

    /// Smallest n in 1..=limit with the twisted source admissible.
    fn brute_force_twist(f: &PairMap<u64>, limit: u64) -> Option<u64> {
        (1..=limit).find(|&n| {
            f.with_src(twist(f.src(), &n).unwrap())
                .unwrap()
                .is_admissible()
                .unwrap()
        })
    }

    #[test]
    fn admissibility_examples() {
        assert!(power(2, 6, 3).is_admissible().unwrap());
        assert!(!power(2, 5, 3).is_admissible().unwrap());
        assert!(identity(4, 4).is_admissible().unwrap());
    }

    #[test]
    fn twist_examples() {
        let p = line_pair("t", 1);
        assert_eq!(twist(&p, &1).unwrap(), p);
        assert_eq!(twist(&p, &3).unwrap(), line_pair("t", 3));
        let q = line_pair("t", 5);
        assert_eq!(
            twist(&twist(&q, &4).unwrap(), &6).unwrap(),
            twist(&q, &24).unwrap()
        );
        assert_eq!(twist(&p, &0), Err(Error::ZeroNotAllowed("twist factor")));
    }

    #[test]
    fn minimal_twist_examples() {
        let f = power(2, 1, 3);
        assert_eq!(brute_force_twist(&f, 10), Some(6));
        assert_eq!(f.minimal_twist().unwrap(), Twist::Finite(6));

        let g = identity(0, 1);
        assert_eq!(brute_force_twist(&g, 64), None);
        assert_eq!(g.minimal_twist().unwrap(), Twist::Infeasible);

        assert_eq!(identity(3, 3).minimal_twist().unwrap(), Twist::Finite(1));
        // Empty target divisor: the empty max is 1.
        assert_eq!(identity(0, 0).minimal_twist().unwrap(), Twist::Finite(1));
    }

    #[test]
    fn hom_log_examples() {
        assert!(power(2, 1, 3).hom_log_exists().unwrap());
        assert!(!identity(0, 1).hom_log_exists().unwrap());
        assert!(identity(2, 2).hom_log_exists().unwrap());
    }

    #[test]
    fn minimality_examples() {
        assert!(identity(2, 2).is_minimal().unwrap());
        assert!(power(2, 2, 1).is_minimal().unwrap());
        assert!(!power(2, 1, 1).is_minimal().unwrap());
    }

    #[test]
    fn log_equality_forgets_moduli() {
        assert!(power(2, 1, 3).log_equal(&power(2, 7, 1)));
        assert!(!power(2, 1, 3).log_equal(&power(3, 1, 3)));
    }

    #[test]
    fn pair_map_rejects_wrong_charts() {
        let src = line_pair("t", 1);
        let dst = line_pair("y", 1);
        let map = MonomialMap::identity(src.chart().clone());
        assert!(matches!(
            PairMap::new(map, src, dst),
            Err(Error::ChartMismatch(_))
        ));
        assert!(Pair::new(
            Chart::new(["a", "b"]).unwrap(),
            Divisor::<u64>::new(vec![1])
        )
        .is_err());
    }

    #[test]
    fn big_scalars_agree_with_u64() {
        let c = Chart::new(["t"]).unwrap();
        let src = Pair::new(c.clone(), Divisor::new(vec![BigUint::from(1u32)])).unwrap();
        let dst = Pair::new(c.clone(), Divisor::new(vec![BigUint::from(3u32)])).unwrap();
        let map = MonomialMap::new(c.clone(), c, vec![vec![BigUint::from(2u32)]]).unwrap();
        let f = PairMap::new(map, src, dst).unwrap();
        assert_eq!(
            f.minimal_twist().unwrap(),
            Twist::Finite(BigUint::from(6u32))
        );
    }

    #[test]
    fn overflow_surfaces_as_error() {
        let f = power(u64::MAX, 1, 2);
        assert_eq!(f.is_admissible(), Err(Error::Overflow));
    }
}
