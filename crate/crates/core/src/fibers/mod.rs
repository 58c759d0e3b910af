//! Singular fibers: places of ℙ¹, Kodaira types, configurations.

mod kodaira;
mod places;
mod tame;
mod tate;

use std::fmt;

use thiserror::Error;

use crate::arith::{ArithError, Poly};
use crate::weierstrass::{ModelError, WeierstrassModel};

pub use kodaira::KodairaType;
pub use places::{local_data, places_of_discriminant};
pub use tame::classify_tame;
pub use tate::tate_local;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FiberError {
    #[error("degenerate model: discriminant is zero")]
    Degenerate,
    #[error("not a rational elliptic surface")]
    NotRational,
    #[error("non-minimal valuation signature")]
    NonMinimal,
    #[error("inconsistent valuation signature (v_c4={v_c4:?}, v_c6={v_c6:?}, v_delta={v_delta})")]
    Inconsistent {
        v_c4: Option<u32>,
        v_c6: Option<u32>,
        v_delta: u32,
    },
    #[error("configuration is incomplete: total v(Δ) = {0}")]
    Incomplete(u32),
    #[error("configuration is not extremal")]
    NonExtremal,
    #[error("product of lattice determinants {0} is not a perfect square")]
    NotSquare(u64),
    #[error("Tate's algorithm needs a finite residue field, got {0}")]
    Unsupported(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

pub type Result<T> = std::result::Result<T, FiberError>;

/// A closed point of ℙ¹, or a bundle of conjugate points sharing all local data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Place {
    /// Monic irreducible π over a finite field.
    Finite(Poly),
    /// Monic squarefree polynomial over a characteristic-0 field whose roots
    /// share the same valuations of Δ, c4 and c6.
    Cluster(Poly),
    Infinity,
}

impl Place {
    /// Number of geometric points.
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) | Place::Cluster(p) => p.degree().unwrap_or(0),
            Place::Infinity => 1,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) | Place::Cluster(p) => write!(f, "({})", p),
            Place::Infinity => write!(f, "∞"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalData {
    pub place: Place,
    pub kodaira: KodairaType,
    /// v(Δ) of the locally minimal model.
    pub v_delta: u32,
    /// `None` stands for v = ∞.
    pub v_c4: Option<u32>,
    pub v_c6: Option<u32>,
    /// False when a local u-substitution was needed.
    pub minimal_input: bool,
}

impl LocalData {
    pub fn count(&self) -> usize {
        self.place.degree()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberConfiguration {
    pub entries: Vec<LocalData>,
    pub total_v: u32,
    pub extremal: bool,
    pub mw_order: Option<u64>,
}

impl FiberConfiguration {
    pub fn new(entries: Vec<LocalData>) -> Self {
        let total_v = entries.iter().map(|e| e.v_delta * e.count() as u32).sum();
        let rank: u32 = entries
            .iter()
            .map(|e| (e.kodaira.component_count() - 1) * e.count() as u32)
            .sum();
        let mut c = FiberConfiguration {
            entries,
            total_v,
            extremal: total_v == 12 && rank == 8,
            mw_order: None,
        };
        c.mw_order = mw_order(&c).ok();
        c
    }

    /// Geometric fiber types, one per point, largest Euler number first.
    pub fn types(&self) -> Vec<KodairaType> {
        let mut v: Vec<KodairaType> = self
            .entries
            .iter()
            .flat_map(|e| std::iter::repeat(e.kodaira).take(e.count()))
            .filter(|k| *k != KodairaType::I(0))
            .collect();
        v.sort();
        v
    }

    /// Number of geometric singular fibers.
    pub fn singular_fibers(&self) -> usize {
        self.types().len()
    }

    /// Type of the fiber at a given place, if it is singular.
    pub fn at(&self, place: &Place) -> Option<KodairaType> {
        self.entries
            .iter()
            .find(|e| &e.place == place)
            .map(|e| e.kodaira)
    }

    pub fn rank_sum(&self) -> u32 {
        self.types().iter().map(|k| k.component_count() - 1).sum()
    }
}

impl fmt::Display for FiberConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.types().iter().map(|k| k.to_string()).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// Format a multiset of types the way [`FiberConfiguration`] displays.
pub fn format_types(types: &[KodairaType]) -> String {
    let mut v = types.to_vec();
    v.sort();
    let names: Vec<String> = v.iter().map(|k| k.to_string()).collect();
    format!("{{{}}}", names.join(", "))
}

/// Classify every singular fiber, including the one at ∞.
pub fn fiber_configuration(m: &WeierstrassModel) -> Result<FiberConfiguration> {
    let entries = local_data(m)?;
    if entries.iter().any(|e| !e.minimal_input) {
        return Err(FiberError::NotRational);
    }
    let c = FiberConfiguration::new(entries);
    if c.total_v != 12 {
        return Err(FiberError::Incomplete(c.total_v));
    }
    Ok(c)
}

/// Places where the model is not minimal; an empty list means minimal everywhere.
pub fn is_minimal(m: &WeierstrassModel) -> Result<Vec<Place>> {
    Ok(local_data(m)?
        .into_iter()
        .filter(|e| !e.minimal_input)
        .map(|e| e.place)
        .collect())
}

pub fn is_extremal(c: &FiberConfiguration) -> Result<bool> {
    if c.total_v != 12 {
        return Err(FiberError::Incomplete(c.total_v));
    }
    Ok(c.rank_sum() == 8)
}

/// √(∏ d) over the singular fibers of an extremal configuration.
pub fn mw_order(c: &FiberConfiguration) -> Result<u64> {
    if !is_extremal(c)? {
        return Err(FiberError::NonExtremal);
    }
    mw_order_of_types(&c.types())
}

pub fn mw_order_of_types(types: &[KodairaType]) -> Result<u64> {
    let rank: u32 = types.iter().map(|k| k.component_count() - 1).sum();
    if rank != 8 {
        return Err(FiberError::NonExtremal);
    }
    let prod: u64 = types.iter().map(|k| k.determinant() as u64).product();
    let r = (prod as f64).sqrt().round() as u64;
    if r * r == prod {
        Ok(r)
    } else {
        Err(FiberError::NotSquare(prod))
    }
}
