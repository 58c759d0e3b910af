use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Kodaira fiber types. `I(0)` is a smooth fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KodairaType {
    I(u32),
    II,
    III,
    IV,
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

use KodairaType::*;

impl KodairaType {
    /// Number of components m (1 for I0 and I1).
    pub fn component_count(&self) -> u32 {
        match *self {
            I(n) => n.max(1),
            II => 1,
            III => 2,
            IV => 3,
            IStar(n) => n + 5,
            IVStar => 7,
            IIIStar => 8,
            IIStar => 9,
        }
    }

    /// Determinant of the root lattice spanned by non-identity components.
    pub fn determinant(&self) -> u32 {
        match *self {
            I(n) => n.max(1),
            II => 1,
            III => 2,
            IV => 3,
            IStar(_) => 4,
            IVStar => 3,
            IIIStar => 2,
            IIStar => 1,
        }
    }

    /// Euler number, equal to v(Δ) in tame characteristic.
    pub fn euler_number(&self) -> u32 {
        match *self {
            I(n) => n,
            II => 2,
            III => 3,
            IV => 4,
            IStar(n) => n + 6,
            IVStar => 8,
            IIIStar => 9,
            IIStar => 10,
        }
    }

    fn index(&self) -> u32 {
        match *self {
            I(_) => 0,
            II => 1,
            III => 2,
            IV => 3,
            IStar(_) => 4,
            IVStar => 5,
            IIIStar => 6,
            IIStar => 7,
        }
    }

    pub fn is_additive(&self) -> bool {
        !matches!(self, I(_))
    }
}

impl Ord for KodairaType {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .euler_number()
            .cmp(&self.euler_number())
            .then_with(|| other.is_additive().cmp(&self.is_additive()))
            .then_with(|| self.index().cmp(&other.index()))
    }
}

impl PartialOrd for KodairaType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            I(n) => write!(f, "I{}", n),
            II => write!(f, "II"),
            III => write!(f, "III"),
            IV => write!(f, "IV"),
            IStar(n) => write!(f, "I*{}", n),
            IVStar => write!(f, "IV*"),
            IIIStar => write!(f, "III*"),
            IIStar => write!(f, "II*"),
        }
    }
}

impl FromStr for KodairaType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        Ok(match s {
            "II" => II,
            "III" => III,
            "IV" => IV,
            "IV*" => IVStar,
            "III*" => IIIStar,
            "II*" => IIStar,
            _ => {
                let bad = || format!("unknown Kodaira type {:?}", s);
                if let Some(n) = s.strip_prefix("I*") {
                    IStar(n.parse().map_err(|_| bad())?)
                } else if let Some(n) = s.strip_prefix('I') {
                    I(n.parse().map_err(|_| bad())?)
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for k in [
            I(0),
            I(9),
            II,
            III,
            IV,
            IStar(0),
            IStar(4),
            IVStar,
            IIIStar,
            IIStar,
        ] {
            assert_eq!(k.to_string().parse::<KodairaType>(), Ok(k));
        }
        assert!("V".parse::<KodairaType>().is_err());
    }

    #[test]
    fn euler_numbers_of_star_types() {
        assert_eq!(IStar(2).euler_number(), 8);
        assert_eq!(IStar(2).component_count(), 7);
        assert_eq!(IVStar.euler_number(), 8);
    }
}
