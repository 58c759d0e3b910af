//! The integral models, their discriminants and fiber configurations, the
//! reference equations for characteristic 2 and 3, and the reduction table.

use crate::arith::{Elem, Poly, Ring};
use crate::cli::parse::{parse_expr, parse_model_file};
use crate::fibers::KodairaType::{self, *};
use crate::weierstrass::{quadratic_twist_x11, ModelError, TwistSeed, WeierstrassModel};

/// Where an expected configuration comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConfigSource {
    /// Read off the digits of a semistable name.
    Name,
    /// Stated in the text accompanying the model.
    Prose,
    /// Standard reading of the name for additive types; advisory only.
    Convention,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub ring: Ring,
    pub model: WeierstrassModel,
    /// The model file as shipped.
    pub source: &'static str,
    /// Discriminant string exactly as printed alongside the model.
    pub printed_delta: &'static str,
    pub expected_delta: Poly,
    /// Differences between the shipped model and the printed one.
    pub notes: Vec<&'static str>,
    pub expected_config: Vec<KodairaType>,
    pub config_source: ConfigSource,
    /// Fiber type at t = 0 when the text names one.
    pub type_at_zero: Option<KodairaType>,
    pub table_row: Option<(&'static str, &'static str)>,
    /// Negative-control model, not part of the surface list.
    pub reference: bool,
}

impl CatalogEntry {
    /// Whether the name check is binding.
    pub fn strict_config(&self) -> bool {
        self.config_source != ConfigSource::Convention
    }

    /// Name of the table row, e.g. `X_8211` for both 8211 models.
    pub fn family(&self) -> &str {
        self.name.trim_end_matches(['A', 'B'])
    }
}

struct Spec {
    file: &'static str,
    printed_delta: &'static str,
    delta: &'static str,
    delta_divisor: i64,
    notes: &'static [&'static str],
    config: &'static [KodairaType],
    source: ConfigSource,
    at_zero: Option<KodairaType>,
    reference: bool,
}

const fn spec(
    file: &'static str,
    printed_delta: &'static str,
    delta: &'static str,
    config: &'static [KodairaType],
    source: ConfigSource,
) -> Spec {
    Spec {
        file,
        printed_delta,
        delta,
        delta_divisor: 1,
        notes: &[],
        config,
        source,
        at_zero: None,
        reference: false,
    }
}

macro_rules! model_file {
    ($n:literal) => {
        include_str!(concat!("../data/catalog/", $n, ".model"))
    };
}

fn specs() -> Vec<Spec> {
    use ConfigSource::*;
    vec![
        Spec {
            notes: &["a2 printed as 16 - 7353t"],
            ..spec(
                model_file!("X_3333"),
                "-(t + 1)^3(27t^2 + 45t + 19)^3",
                "-(t+1)^3*(27*t^2+45*t+19)^3",
                &[I(3), I(3), I(3), I(3)],
                Name,
            )
        },
        Spec {
            at_zero: Some(IStar(2)),
            ..spec(
                model_file!("X_222"),
                "-t^8(89t^2 + 40t + 16)^2",
                "-t^8*(89*t^2+40*t+16)^2",
                &[IStar(2), I(2), I(2)],
                Prose,
            )
        },
        spec(
            model_file!("X_321A"),
            "t^2(64t + 9)",
            "t^2*(64*t+9)",
            &[IIIStar, I(2), I(1)],
            Prose,
        ),
        Spec {
            at_zero: Some(IIIStar),
            ..spec(
                model_file!("X_321B"),
                "t^9(t - 64)",
                "t^9*(t-64)",
                &[IIIStar, I(2), I(1)],
                Prose,
            )
        },
        spec(
            model_file!("X_9111"),
            "-(t^3 + 27)",
            "-(t^3+27)",
            &[I(9), I(1), I(1), I(1)],
            Name,
        ),
        spec(
            model_file!("X_5511"),
            "t^5(t^2 - 11t - 1)",
            "t^5*(t^2-11*t-1)",
            &[I(5), I(5), I(1), I(1)],
            Name,
        ),
        Spec {
            notes: &["a6 printed as -t^6 - 64t^4"],
            ..spec(
                model_file!("X_8211A"),
                "t^2(1 + 16t^2)",
                "t^2*(1+16*t^2)",
                &[I(8), I(2), I(1), I(1)],
                Name,
            )
        },
        Spec {
            notes: &["a6 printed as 441t^2 + 77568"],
            ..spec(
                model_file!("X_8211B"),
                "t^2(t^2 + 16)",
                "t^2*(t^2+16)",
                &[I(8), I(2), I(1), I(1)],
                Name,
            )
        },
        Spec {
            notes: &["a4 printed as 2t^6"],
            ..spec(
                model_file!("X_6321A"),
                "t^3(t + 1)(-1 + 8t)^2",
                "t^3*(t+1)*(-1+8*t)^2",
                &[I(6), I(3), I(2), I(1)],
                Name,
            )
        },
        spec(
            model_file!("X_6321B"),
            "(t + 8)(t - 1)^2t^3",
            "(t+8)*(t-1)^2*t^3",
            &[I(6), I(3), I(2), I(1)],
            Name,
        ),
        spec(
            model_file!("X_4422"),
            "t^4(4t - 1)^2(4t + 1)^2",
            "t^4*(4*t-1)^2*(4*t+1)^2",
            &[I(4), I(4), I(2), I(2)],
            Name,
        ),
        spec(
            model_file!("X_211"),
            "t(432t + 1)(864t + 1)^10",
            "t*(432*t+1)*(864*t+1)^10",
            &[IIStar, I(1), I(1)],
            Convention,
        ),
        spec(
            model_file!("X_431"),
            "-t(27t + 1)^3",
            "-t*(27*t+1)^3",
            &[IVStar, I(3), I(1)],
            Convention,
        ),
        spec(
            model_file!("X_411"),
            "t(16t + 1)",
            "t*(16*t+1)",
            &[IStar(4), I(1), I(1)],
            Convention,
        ),
        spec(
            model_file!("X_141"),
            "t(16t - 1)^7",
            "t*(16*t-1)^7",
            &[IStar(1), I(4), I(1)],
            Convention,
        ),
        spec(
            model_file!("X_33"),
            "(8t - 1 + 2i)^3",
            "(8*t-1+2*i)^3",
            &[IIIStar, III],
            Prose,
        ),
        Spec {
            notes: &["a6 printed as t - 637"],
            ..spec(
                model_file!("X_22"),
                "-169 - 312t√3 - 432t^2",
                "-169 - 312*w^2*t - 432*t^2",
                &[IIStar, II],
                Convention,
            )
        },
        Spec {
            delta_divisor: 9,
            ..spec(
                model_file!("X_44"),
                "-(1/9)(18t + 97√3)^4",
                "-(18*t+97*w^2)^4",
                &[IVStar, IV],
                Convention,
            )
        },
        Spec {
            notes: &["printed discriminant 2^12 3^3 (t^3 + 1)^3 uses the opposite sign convention"],
            reference: true,
            ..spec(
                model_file!("MP_3333"),
                "2^12 3^3 (t^3 + 1)^3",
                "-2^12*3^3*(t^3+1)^3",
                &[I(3), I(3), I(3), I(3)],
                Name,
            )
        },
    ]
}

/// All 19 entries: 18 surfaces followed by the short-form reference model.
pub fn load_catalog() -> Vec<CatalogEntry> {
    let table = expected_table();
    specs()
        .into_iter()
        .map(|s| {
            let file = parse_model_file(s.file).expect("shipped model files parse");
            let name = file.name.expect("shipped model files are named");
            let ring = file.model.ring().clone();
            let expected_delta = parse_expr(&ring, s.delta)
                .expect("expected discriminant parses")
                .div_scalar(&ring.from_i64(s.delta_divisor))
                .expect("divisor divides the expansion");
            let family = name.trim_end_matches(['A', 'B']);
            let table_row = table
                .iter()
                .find(|r| r.0 == name || (r.0 == family && !name.starts_with("MP")))
                .map(|r| (r.1, r.2));
            CatalogEntry {
                name,
                ring,
                model: file.model,
                source: s.file,
                printed_delta: s.printed_delta,
                expected_delta,
                notes: s.notes.to_vec(),
                expected_config: s.config.to_vec(),
                config_source: s.source,
                type_at_zero: s.at_zero,
                table_row,
                reference: s.reference,
            }
        })
        .collect()
}

pub fn find(name: &str) -> Option<CatalogEntry> {
    load_catalog()
        .into_iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
}

/// Literal decoding of a name whose digits sum to 12: each digit n is an I_n fiber.
pub fn decode_semistable_name(name: &str) -> Option<Vec<KodairaType>> {
    let digits: String = name
        .rsplit('_')
        .next()
        .unwrap_or(name)
        .chars()
        .take_while(|c| c.is_ascii_digit())
        .collect();
    let v: Vec<u32> = digits.chars().map(|c| c.to_digit(10).unwrap()).collect();
    if v.is_empty() || v.iter().sum::<u32>() != 12 {
        return None;
    }
    Some(v.into_iter().map(I).collect())
}

/// The reduction table, row by row: (surface, mod 2 label, mod 3 label).
pub fn expected_table() -> Vec<(&'static str, &'static str, &'static str)> {
    vec![
        ("X_11(j)", "I", "VI"),
        ("X_11(j)", "II", "VI bis"),
        ("X_33", "II", "V"),
        ("X_22", "II", "I"),
        ("X_44", "VII", "I"),
        ("X_3333", "X_3333", "III"),
        ("X_222", "I", "IX"),
        ("X_321A", "V", "V"),
        ("X_321B", "V", "XI"),
        ("X_9111", "X_9111", "II"),
        ("X_5511", "X_5511", "X_5511"),
        ("X_8211A", "V", "X_8211"),
        ("X_8211B", "III", "X_8211"),
        ("X_6321A", "IX", "VII"),
        ("X_6321B", "VIII", "VII"),
        ("X_4422", "IV", "X_4422"),
        ("X_211", "VI", "IV"),
        ("X_431", "IX", "IV"),
        ("X_411", "VI", "X"),
        ("X_141", "VI", "VIII"),
    ]
}

/// Reference equations for the reductions of X_11(j) at 2 and 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmallCharReference {
    /// y² + txy = x³ + tx² + kt⁶, j = 1/k.
    Char2I,
    /// y² + t³y = x³ + t⁵, j = 0.
    Char2II,
    /// y² = x³ + tx² + kt³, j = −1/k.
    Char3VI,
    /// y² = x³ + t²x, j = 0.
    Char3VIBis,
}

impl SmallCharReference {
    pub const ALL: [SmallCharReference; 4] = [
        SmallCharReference::Char2I,
        SmallCharReference::Char2II,
        SmallCharReference::Char3VI,
        SmallCharReference::Char3VIBis,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            SmallCharReference::Char2I => "char2-I",
            SmallCharReference::Char2II => "char2-II",
            SmallCharReference::Char3VI => "char3-VI",
            SmallCharReference::Char3VIBis => "char3-VIbis",
        }
    }

    pub fn j_formula(&self) -> &'static str {
        match self {
            SmallCharReference::Char2I => "1/k",
            SmallCharReference::Char3VI => "-1/k",
            _ => "0",
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            SmallCharReference::Char2I | SmallCharReference::Char2II => 2,
            _ => 3,
        }
    }

    pub fn has_parameter(&self) -> bool {
        matches!(
            self,
            SmallCharReference::Char2I | SmallCharReference::Char3VI
        )
    }

    /// The reference model over `field` (of matching characteristic). `k` is
    /// required and nonzero for the parametrized families and ignored otherwise.
    pub fn model(&self, field: &Ring, k: Option<&Elem>) -> Result<WeierstrassModel, ModelError> {
        if field.characteristic() != self.characteristic() {
            return Err(ModelError::Degenerate);
        }
        let k = match (self.has_parameter(), k) {
            (true, Some(k)) if !field.is_zero(k) => k.clone(),
            (true, _) => return Err(ModelError::ZeroScalar),
            (false, _) => field.zero(),
        };
        let one = field.one();
        let mono = |c: &Elem, d: usize| Poly::monomial(field, c.clone(), d);
        let zero = Poly::zero(field);
        let a = match self {
            SmallCharReference::Char2I => [
                mono(&one, 1),
                mono(&one, 1),
                zero.clone(),
                zero,
                mono(&k, 6),
            ],
            SmallCharReference::Char2II => [
                zero.clone(),
                zero.clone(),
                mono(&one, 3),
                zero,
                mono(&one, 5),
            ],
            SmallCharReference::Char3VI => {
                [zero.clone(), mono(&one, 1), zero.clone(), zero, mono(&k, 3)]
            }
            SmallCharReference::Char3VIBis => [
                zero.clone(),
                zero.clone(),
                zero.clone(),
                mono(&one, 2),
                zero,
            ],
        };
        WeierstrassModel::from_array(a)
    }

    /// j of the generic fiber as a field element.
    pub fn j(&self, field: &Ring, k: Option<&Elem>) -> Option<Elem> {
        match self {
            SmallCharReference::Char2I => field.inv(k?),
            SmallCharReference::Char3VI => field.inv(k?).map(|v| field.neg(&v)),
            _ => Some(field.zero()),
        }
    }
}

/// A member of the X_11(j) family with its predicted invariants.
#[derive(Clone, Debug)]
pub struct X11Entry {
    pub seed: TwistSeed,
    pub model: WeierstrassModel,
    /// Δ_E (t² + 4t)⁶.
    pub expected_delta: Poly,
    /// j_E, in the fraction field of the seed's ring.
    pub expected_j: Elem,
}

pub fn x11_family(seed: &TwistSeed) -> X11Entry {
    let r = seed.ring();
    let quad = Poly::from_ints(r, &[0, 4, 1]);
    X11Entry {
        seed: seed.clone(),
        model: quadratic_twist_x11(seed),
        expected_delta: quad.pow(6).scale(seed.delta()),
        expected_j: seed.j(),
    }
}
