//! Prime correspondences between curve pairs, decided from local data.
//!
//! A correspondence is given by a normalized curve `W` mapping finitely to
//! `X` and to `Y`. At each closed point `w` with images `x`, `y` we record the
//! boundary coefficients `n_x`, `n_y` and the ramification degrees `e_x`,
//! `e_y`. Three memberships are decided pointwise:
//!
//! 1. modulus correspondences: `n_x e_x >= n_y e_y`;
//! 2. the colimit over twists of the source: `n_x = 0 ⇒ n_y = 0`;
//! 3. log correspondences: `n_x e_x | n_y e_y` (with `0 | m ⟺ m = 0`).
//!
//! Finiteness and properness of `W -> X` are the caller's responsibility, as
//! is completeness of the record list.

use crate::error::{Error, Result};
use crate::natural::{ceil_div, Natural};
use crate::pair::{PairMap, Twist};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CorrLocalRecord<M> {
    label: String,
    n_x: M,
    n_y: M,
    e_x: M,
    e_y: M,
}

impl<M: Natural> CorrLocalRecord<M> {
    pub fn new(label: impl Into<String>, n_x: M, n_y: M, e_x: M, e_y: M) -> Result<Self> {
        if e_x.is_zero() {
            return Err(Error::ZeroNotAllowed("ramification degree e_x"));
        }
        if e_y.is_zero() {
            return Err(Error::ZeroNotAllowed("ramification degree e_y"));
        }
        Ok(CorrLocalRecord {
            label: label.into(),
            n_x,
            n_y,
            e_x,
            e_y,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn n_x(&self) -> &M {
        &self.n_x
    }

    pub fn n_y(&self) -> &M {
        &self.n_y
    }

    pub fn e_x(&self) -> &M {
        &self.e_x
    }

    pub fn e_y(&self) -> &M {
        &self.e_y
    }

    fn source_weight(&self) -> Result<M> {
        self.n_x.mul_checked(&self.e_x)
    }

    fn target_weight(&self) -> Result<M> {
        self.n_y.mul_checked(&self.e_y)
    }

    pub fn in_mcor(&self) -> Result<bool> {
        Ok(self.source_weight()? >= self.target_weight()?)
    }

    pub fn in_colim_mcor(&self) -> bool {
        !self.n_x.is_zero() || self.n_y.is_zero()
    }

    pub fn in_lcor(&self) -> Result<bool> {
        let src = self.source_weight()?;
        let dst = self.target_weight()?;
        Ok(if src.is_zero() {
            dst.is_zero()
        } else {
            dst.is_multiple_of(&src)
        })
    }

    /// The record for the source twisted by `n`: `n_x ← n · n_x`.
    pub fn twisted_source(&self, n: &M) -> Result<Self> {
        Ok(CorrLocalRecord {
            n_x: self.n_x.mul_checked(n)?,
            ..self.clone()
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CurveCorr<M> {
    NonConstant(Vec<CorrLocalRecord<M>>),
    /// `W -> Y` is constant; only whether its value lies in `Y°` matters.
    Constant {
        image_in_interior: bool,
    },
}

impl<M: Natural> CurveCorr<M> {
    /// The list is taken as complete: every point where either boundary
    /// coefficient is nonzero must appear.
    pub fn non_constant(records: Vec<CorrLocalRecord<M>>) -> Result<Self> {
        for (i, r) in records.iter().enumerate() {
            if records[..i].iter().any(|s| s.label == r.label) {
                return Err(Error::DuplicateLabel(r.label.clone()));
            }
        }
        Ok(CurveCorr::NonConstant(records))
    }

    pub fn constant(image_in_interior: bool) -> Self {
        CurveCorr::Constant { image_in_interior }
    }

    pub fn records(&self) -> &[CorrLocalRecord<M>] {
        match self {
            CurveCorr::NonConstant(r) => r,
            CurveCorr::Constant { .. } => &[],
        }
    }

    pub fn in_mcor(&self) -> Result<bool> {
        match self {
            CurveCorr::Constant { image_in_interior } => Ok(*image_in_interior),
            CurveCorr::NonConstant(records) => {
                for r in records {
                    if !r.in_mcor()? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    pub fn in_colim_mcor(&self) -> bool {
        match self {
            CurveCorr::Constant { image_in_interior } => *image_in_interior,
            CurveCorr::NonConstant(records) => records.iter().all(CorrLocalRecord::in_colim_mcor),
        }
    }

    pub fn in_lcor(&self) -> Result<bool> {
        match self {
            CurveCorr::Constant { image_in_interior } => Ok(*image_in_interior),
            CurveCorr::NonConstant(records) => {
                for r in records {
                    if !r.in_lcor()? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    /// Least `n` such that the correspondence lies in `MCor(X^(n), Y)`.
    pub fn minimal_twist(&self) -> Result<Twist<M>> {
        let records = match self {
            CurveCorr::Constant {
                image_in_interior: true,
            } => return Ok(Twist::Finite(M::one())),
            CurveCorr::Constant {
                image_in_interior: false,
            } => return Ok(Twist::Infeasible),
            CurveCorr::NonConstant(records) => records,
        };
        let mut best = M::one();
        for r in records {
            if r.n_y.is_zero() {
                continue;
            }
            if r.n_x.is_zero() {
                return Ok(Twist::Infeasible);
            }
            best = best.max(ceil_div(&r.target_weight()?, &r.source_weight()?));
        }
        Ok(Twist::Finite(best))
    }

    /// Every record with its source twisted by `n`.
    pub fn twisted_source(&self, n: &M) -> Result<Self> {
        match self {
            CurveCorr::Constant { .. } => Ok(self.clone()),
            CurveCorr::NonConstant(records) => records
                .iter()
                .map(|r| r.twisted_source(n))
                .collect::<Result<Vec<_>>>()
                .map(CurveCorr::NonConstant),
        }
    }

    /// The curve `t ↦ (t^a, t^b)` between `(A¹, n_x{0})` and `(A¹, n_y{0})`.
    ///
    /// The origin is the only point with a nonzero boundary coefficient, so
    /// one record labelled `"0"` is complete.
    pub fn from_monomial_param(a: M, b: M, n_x: M, n_y: M) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroNotAllowed("exponent a"));
        }
        if b.is_zero() {
            return Err(Error::ZeroNotAllowed("exponent b"));
        }
        let record = CorrLocalRecord::new("0", n_x, n_y, a, b)?;
        Ok(CurveCorr::NonConstant(vec![record]))
    }

    /// The graph of a monomial map `t ↦ t^m` between curve pairs.
    ///
    /// For `m = 0` the map is the constant `1`, which avoids the boundary
    /// point at the origin.
    pub fn graph(f: &PairMap<M>) -> Result<Self> {
        let src_dim = f.src().dim();
        if src_dim != 1 {
            return Err(Error::NotACurve(src_dim));
        }
        let dst_dim = f.dst().dim();
        if dst_dim != 1 {
            return Err(Error::NotACurve(dst_dim));
        }
        let m = f.map().image(0)[0].clone();
        if m.is_zero() {
            return Ok(CurveCorr::Constant {
                image_in_interior: true,
            });
        }
        let p = f.src().divisor().mults()[0].clone();
        let q = f.dst().divisor().mults()[0].clone();
        let record = CorrLocalRecord::new(f.src().chart().coords()[0].clone(), p, q, M::one(), m)?;
        Ok(CurveCorr::NonConstant(vec![record]))
    }
}

pub fn in_mcor<M: Natural>(c: &CurveCorr<M>) -> Result<bool> {
    c.in_mcor()
}

pub fn in_colim_mcor<M: Natural>(c: &CurveCorr<M>) -> bool {
    c.in_colim_mcor()
}

pub fn in_lcor<M: Natural>(c: &CurveCorr<M>) -> Result<bool> {
    c.in_lcor()
}

pub fn corr_minimal_twist<M: Natural>(c: &CurveCorr<M>) -> Result<Twist<M>> {
    c.minimal_twist()
}

pub fn from_monomial_param<M: Natural>(a: M, b: M, n_x: M, n_y: M) -> Result<CurveCorr<M>> {
    CurveCorr::from_monomial_param(a, b, n_x, n_y)
}

pub fn graph_corr<M: Natural>(f: &PairMap<M>) -> Result<CurveCorr<M>> {
    CurveCorr::graph(f)
}
