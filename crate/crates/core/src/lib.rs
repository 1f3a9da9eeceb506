//! Exact arithmetic for modulus pairs presented on a single monomial chart.
//!
//! A [`Pair`] is an affine chart `A^d` together with an effective divisor
//! supported on the coordinate hyperplanes. Morphisms are monomial maps given
//! by exponent matrices, and every criterion in this crate reduces to integer
//! comparisons between multiplicities:
//!
//! * [`pair`] — pullback, admissibility, the twist `(-)^(n)`, minimal twists
//!   and the log-localized hom criterion.
//! * [`blowup`] — classification of coordinate centers and blowup charts.
//! * [`correspondence`] — membership of prime correspondences between curve
//!   pairs in the modulus, colimit and log correspondence groups.
//! * [`qdivisor`] — rational divisors stored at an integer level.
//!
//! All types are generic over the multiplicity scalar (see [`Natural`]). The
//! aliases at the crate root fix it to `u64`; the `Big*` aliases use
//! [`num_bigint::BigUint`] for unbounded exact arithmetic.

pub mod blowup;
pub mod chart;
pub mod correspondence;
pub mod divisor;
pub mod error;
pub mod monomial;
pub mod natural;
pub mod pair;
pub mod qdivisor;

pub use blowup::Classification;
pub use chart::Chart;
pub use error::{Error, Result};
pub use natural::Natural;
pub use pair::Twist;

use num_bigint::BigUint;

pub type Divisor = divisor::Divisor<u64>;
pub type MonomialMap = monomial::MonomialMap<u64>;
pub type Pair = pair::Pair<u64>;
pub type PairMap = pair::PairMap<u64>;
pub type BlowupSpec = blowup::BlowupSpec<u64>;
pub type BlowupChart = blowup::BlowupChart<u64>;
pub type CorrLocalRecord = correspondence::CorrLocalRecord<u64>;
pub type CurveCorr = correspondence::CurveCorr<u64>;
pub type QPair = qdivisor::QPair<u64>;

pub type BigDivisor = divisor::Divisor<BigUint>;
pub type BigMonomialMap = monomial::MonomialMap<BigUint>;
pub type BigPair = pair::Pair<BigUint>;
pub type BigPairMap = pair::PairMap<BigUint>;
pub type BigCurveCorr = correspondence::CurveCorr<BigUint>;
pub type BigQPair = qdivisor::QPair<BigUint>;
