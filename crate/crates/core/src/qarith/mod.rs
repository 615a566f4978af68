//! Exact arithmetic in `Z[v, v^-1]` and `Q(v)`.

mod laurent;
pub(crate) mod poly;
pub mod quantum;
mod ratfunc;

pub use laurent::LaurentPoly;
pub use quantum::{qbinom, qbinom_d, qfactorial, qfactorial_d, qint, qint_d};
pub use ratfunc::RationalFunction;

use num_rational::BigRational;

use crate::error::Result;

/// Specialize `x` at `v = v0`.
pub fn evaluate(x: &RationalFunction, v0: &BigRational) -> Result<BigRational> {
    x.evaluate(v0)
}
