pub mod coisotropic;
pub mod error;
pub mod expr;
pub mod homogeneous;
pub mod hopf;
pub mod pbw;
pub mod random;
pub mod report;
pub mod scalar;
pub mod suites;

pub use error::{Error, Result};

pub type Rational = num_rational::BigRational;
pub type Poly = scalar::Polynomial<Rational>;
pub type RatFunc = scalar::RationalFunction<Rational>;
pub type Scalar = scalar::Quadratic<Rational>;
pub type Element = pbw::AlgebraElement<Scalar>;
pub type Tensor = hopf::TensorElement<Scalar>;
pub type Params = coisotropic::Params<Scalar>;
pub type Quotient = coisotropic::Coisotropic<Scalar>;
pub type Class = coisotropic::QuotientElement<Scalar>;
