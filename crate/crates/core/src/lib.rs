//! Extremal elliptic surfaces over number rings and their reductions mod p.

pub mod arith;
pub mod catalog;
pub mod cli;
pub mod fibers;
pub mod models;
pub mod weierstrass;

pub use weierstrass::{
    JInvariant, ModelError, Substitution, TateQuantities, TwistSeed, WeierstrassModel,
};
