//! Index computations for nonic number fields defined by trinomials `x^9 + ax + b`.
//!
//! The crate is layered bottom-up:
//!
//! * [`arith`]: exact p-adic valuations, unit parts and modular inverses.
//! * [`gf`]: polynomials over finite fields `F_q` and their factorization.
//! * [`polygon`]: a first-order Newton polygon engine (phi-expansions,
//!   residual polynomials, regularity, index and prime splitting) together
//!   with Dedekind's criterion.
//! * [`engstrom`]: the common-index-divisor test on splitting types.
//! * [`nonic`]: the classifier for `x^9 + ax + b`.
//! * [`verify`]: independent oracles and congruence-class sweeps.

pub mod arith;
pub mod engstrom;
mod error;
pub mod factor;
pub mod gf;
pub mod intpoly;
pub mod nonic;
pub mod polygon;
pub mod verify;

pub use engstrom::{divides_index, nu_lookup, IndexValuation};
pub use error::{Error, Result};
pub use gf::{FieldPoly, GaloisField};
pub use intpoly::IntPoly;
pub use nonic::{classify, disc, ClassifierReport, TrinomialParams};
pub use polygon::{PrincipalPolygon, Side, SplittingType};
