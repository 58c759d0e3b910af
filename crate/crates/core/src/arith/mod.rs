//! Exact arithmetic: rings, dense univariate polynomials, gcd, squarefree
//! decomposition, factorization over finite fields and residue maps.

pub mod factor;
pub mod integer;
pub mod poly;
pub mod prime;
pub mod ring;
pub mod sqfree;

pub use factor::{factor_gf, least_irreducible, FactorRng};
pub use poly::Poly;
pub use prime::PrimeSpec;
pub use ring::{Elem, Ring};
pub use sqfree::SquarefreeDecomposition;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("division is not exact")]
    NotDivisible,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("operation needs a field, got {0}")]
    NotAField(String),
    #[error("operation not supported over {0}")]
    Unsupported(String),
    #[error("unknown prime {0} for ring {1}")]
    UnknownPrime(String, String),
}

pub type Result<T> = std::result::Result<T, ArithError>;
