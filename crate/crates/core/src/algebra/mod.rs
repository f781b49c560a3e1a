//! Exact arithmetic kernel.

pub mod ext;
pub mod mpoly;
pub mod parse;
pub mod rat;
pub mod ratfunc;
pub mod surd;

pub use ext::{ext_reduce_mul, ExtElem, ExtNum};
pub use mpoly::{mpoly_equal, poly, MPoly, Monomial};
pub use rat::Rat;
pub use ratfunc::RatFunc;
pub use surd::{surd_sign, SurdExpr};
