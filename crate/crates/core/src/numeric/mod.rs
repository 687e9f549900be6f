//! Generic numerical building blocks: adaptive quadrature on finite
//! intervals and bracketing root refinement.

mod quad;
mod roots;

pub use quad::{integrate, Integral, Tolerance};
pub use roots::{brent, expand_bracket};
