//! The coideal `C_{μν}`, its one-sided quotients and the group-like and
//! skew-primitive elements in them.

mod checks;
pub mod linalg;
mod params;
mod quotient;

pub use checks::*;
pub use params::{ParamKind, Params};
pub use quotient::{coideal_generators, Coisotropic, QuotientElement, Side};
