//! Weierstrass models y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6 over R[t],
//! their auxiliary quantities and coordinate changes.

use std::fmt;

use thiserror::Error;

use crate::arith::{ArithError, Elem, Poly, PrimeSpec, Ring};

/// Weight of each coefficient, in storage order.
pub const WEIGHTS: [u32; 5] = [1, 2, 3, 4, 6];

pub const NAMES: [&str; 5] = ["a1", "a2", "a3", "a4", "a6"];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("coefficient {name} has degree {degree} > {bound}")]
    DegreeBound {
        name: &'static str,
        degree: usize,
        bound: u32,
    },
    #[error("degenerate model: discriminant is zero")]
    Degenerate,
    #[error("coefficient {0} is not divisible by the required power of u")]
    NotDivisible(&'static str),
    #[error("u must be nonzero")]
    ZeroScalar,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

pub type Result<T> = std::result::Result<T, ModelError>;

#[derive(Clone, PartialEq, Eq)]
pub struct WeierstrassModel {
    ring: Ring,
    a: [Poly; 5],
}

/// The auxiliary polynomials b2 … Δ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TateQuantities {
    pub b2: Poly,
    pub b4: Poly,
    pub b6: Poly,
    pub b8: Poly,
    pub c4: Poly,
    pub c6: Poly,
    pub delta: Poly,
}

/// j = c4³/Δ as a reduced fraction over the fraction field, denominator monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JInvariant {
    pub numerator: Poly,
    pub denominator: Poly,
}

impl JInvariant {
    /// The constant value when j does not depend on t.
    pub fn constant(&self) -> Option<Elem> {
        (self.numerator.is_constant() && self.denominator.is_constant())
            .then(|| self.numerator.coeff(0))
    }

    pub fn is_constant(&self) -> bool {
        self.constant().is_some()
    }
}

impl fmt::Display for JInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_constant() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

/// (x, y) ↦ (u²x + r, u³y + u²s·x + q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub u: Elem,
    pub r: Poly,
    pub s: Poly,
    pub q: Poly,
}

impl Substitution {
    pub fn rsq(r: Poly, s: Poly, q: Poly) -> Substitution {
        let u = r.ring().one();
        Substitution { u, r, s, q }
    }

    pub fn scale(ring: &Ring, u: Elem) -> Substitution {
        let z = Poly::zero(ring);
        Substitution {
            u,
            r: z.clone(),
            s: z.clone(),
            q: z,
        }
    }
}

impl WeierstrassModel {
    /// Build a model; all coefficients must share one ring. The degree bound
    /// is not enforced here, see [`WeierstrassModel::check_degree_bound`].
    pub fn new(a1: Poly, a2: Poly, a3: Poly, a4: Poly, a6: Poly) -> Result<Self> {
        let ring = a1.ring().clone();
        for p in [&a2, &a3, &a4, &a6] {
            if *p.ring() != ring {
                return Err(
                    ArithError::RingMismatch(ring.to_string(), p.ring().to_string()).into(),
                );
            }
        }
        Ok(WeierstrassModel {
            ring,
            a: [a1, a2, a3, a4, a6],
        })
    }

    pub fn from_array(a: [Poly; 5]) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = a;
        Self::new(a1, a2, a3, a4, a6)
    }

    /// Model with integer coefficient lists (lowest degree first).
    pub fn from_ints(ring: &Ring, a: [&[i64]; 5]) -> Self {
        let p = a.map(|c| Poly::from_ints(ring, c));
        Self::from_array(p).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Poly; 5] {
        &self.a
    }

    pub fn a1(&self) -> &Poly {
        &self.a[0]
    }
    pub fn a2(&self) -> &Poly {
        &self.a[1]
    }
    pub fn a3(&self) -> &Poly {
        &self.a[2]
    }
    pub fn a4(&self) -> &Poly {
        &self.a[3]
    }
    pub fn a6(&self) -> &Poly {
        &self.a[4]
    }

    /// Coefficients exceeding deg aᵢ ≤ i, as (name, degree).
    pub fn degree_violations(&self) -> Vec<(&'static str, usize)> {
        self.a
            .iter()
            .zip(WEIGHTS)
            .zip(NAMES)
            .filter_map(|((p, w), n)| p.degree().filter(|&d| d > w as usize).map(|d| (n, d)))
            .collect()
    }

    pub fn check_degree_bound(&self) -> Result<()> {
        match self.degree_violations().first() {
            None => Ok(()),
            Some(&(name, degree)) => {
                let bound = WEIGHTS[NAMES.iter().position(|n| *n == name).unwrap()];
                Err(ModelError::DegreeBound {
                    name,
                    degree,
                    bound,
                })
            }
        }
    }

    /// True when every aᵢ is constant.
    pub fn is_constant(&self) -> bool {
        self.a.iter().all(|p| p.is_constant())
    }

    pub fn tate_quantities(&self) -> TateQuantities {
        let [a1, a2, a3, a4, a6] = &self.a;
        let b2 = &(a1 * a1) + &a2.scale_int(4);
        let b4 = &(a1 * a3) + &a4.scale_int(2);
        let b6 = &(a3 * a3) + &a6.scale_int(4);
        let a1sq = a1 * a1;
        let b8 = &(&(&(&(&a1sq * a6) + &(a2 * a6).scale_int(4)) - &(&(a1 * a3) * a4))
            + &(a2 * &(a3 * a3)))
            - &(a4 * a4);
        let b2sq = &b2 * &b2;
        let c4 = &b2sq - &b4.scale_int(24);
        let c6 = &(&(-&(&b2sq * &b2)) + &(&b2 * &b4).scale_int(36)) - &b6.scale_int(216);
        let delta = &(&(&(-&(&b2sq * &b8)) - &(&(&b4 * &b4) * &b4).scale_int(8))
            - &(&b6 * &b6).scale_int(27))
            + &(&(&b2 * &b4) * &b6).scale_int(9);
        TateQuantities {
            b2,
            b4,
            b6,
            b8,
            c4,
            c6,
            delta,
        }
    }

    pub fn discriminant(&self) -> Poly {
        self.tate_quantities().delta
    }

    pub fn is_degenerate(&self) -> bool {
        self.discriminant().is_zero()
    }

    pub fn j_invariant(&self) -> Result<JInvariant> {
        let q = self.tate_quantities();
        if q.delta.is_zero() {
            return Err(ModelError::Degenerate);
        }
        if coprime_modulo_some_prime(&q.c4, &q.delta) {
            let (num, den) = (q.c4.pow(3).to_fraction_field(), q.delta.to_fraction_field());
            let lc = den.lead().clone();
            return Ok(JInvariant {
                numerator: num.div_scalar(&lc)?,
                denominator: den.div_scalar(&lc)?,
            });
        }
        let c4 = q.c4.to_fraction_field();
        let mut num = &(&c4 * &c4) * &c4;
        let mut den = q.delta.to_fraction_field();
        if c4.is_zero() {
            den = Poly::one(den.ring());
        }
        // peel common factors of c4³ and Δ; every gcd has c4 or a divisor of it as one side
        while !c4.is_zero() {
            let h = c4.gcd(&num)?.gcd(&den)?;
            if h.is_constant() {
                break;
            }
            num = num.exact_div(&h)?;
            den = den.exact_div(&h)?;
        }
        let lc = den.lead().clone();
        Ok(JInvariant {
            numerator: num.div_scalar(&lc)?,
            denominator: den.div_scalar(&lc)?,
        })
    }

    /// Whether two models over the same ring have equal j, by cross-multiplication.
    pub fn same_j(&self, other: &WeierstrassModel) -> Result<bool> {
        let (a, b) = (self.tate_quantities(), other.tate_quantities());
        if a.delta.is_zero() || b.delta.is_zero() {
            return Err(ModelError::Degenerate);
        }
        Ok(a.c4.pow(3).checked_mul(&b.delta)? == b.c4.pow(3).checked_mul(&a.delta)?)
    }

    /// Apply (x, y) ↦ (x + r, y + s·x + q).
    pub fn rsq_substitute(&self, r: &Poly, s: &Poly, q: &Poly) -> WeierstrassModel {
        let [a1, a2, a3, a4, a6] = &self.a;
        let n1 = a1 + &s.scale_int(2);
        let n2 = &(&(a2 - &(s * a1)) + &r.scale_int(3)) - &(s * s);
        let n3 = &(a3 + &(r * a1)) + &q.scale_int(2);
        let rs = r * s;
        let n4 = &(&(&(&(a4 - &(s * a3)) + &(r * a2).scale_int(2)) - &(&(q + &rs) * a1))
            + &(r * r).scale_int(3))
            - &(s * q).scale_int(2);
        let n6 = &(&(&(&(&(a6 + &(r * a4)) + &(&(r * r) * a2)) + &(&(r * r) * r)) - &(q * a3))
            - &(q * q))
            - &(&(r * q) * a1);
        WeierstrassModel {
            ring: self.ring.clone(),
            a: [n1, n2, n3, n4, n6],
        }
    }

    /// aᵢ ↦ aᵢ / uⁱ for a constant u of the coefficient ring.
    pub fn u_substitute(&self, u: &Elem) -> Result<WeierstrassModel> {
        if self.ring.is_zero(u) {
            return Err(ModelError::ZeroScalar);
        }
        let mut out = self.a.clone();
        for (k, (p, w)) in self.a.iter().zip(WEIGHTS).enumerate() {
            let uw = self.ring.pow(u, w as u64);
            out[k] = p
                .div_scalar(&uw)
                .map_err(|_| ModelError::NotDivisible(NAMES[k]))?;
        }
        Ok(WeierstrassModel {
            ring: self.ring.clone(),
            a: out,
        })
    }

    pub fn apply(&self, sub: &Substitution) -> Result<WeierstrassModel> {
        self.rsq_substitute(&sub.r, &sub.s, &sub.q)
            .u_substitute(&sub.u)
    }

    /// ãᵢ(s) = sⁱ·aᵢ(1/s); needs the degree bound.
    pub fn infinity_chart(&self) -> Result<WeierstrassModel> {
        self.check_degree_bound()?;
        let mut out = self.a.clone();
        for (k, w) in WEIGHTS.iter().enumerate() {
            out[k] = self.a[k].reverse(*w as usize);
        }
        Ok(WeierstrassModel {
            ring: self.ring.clone(),
            a: out,
        })
    }

    /// t ↦ α·t + β.
    pub fn reparametrize(&self, alpha: &Elem, beta: &Elem) -> WeierstrassModel {
        let lin = Poly::from_elems(self.ring.clone(), vec![beta.clone(), alpha.clone()]);
        WeierstrassModel {
            ring: self.ring.clone(),
            a: self.a.clone().map(|p| p.compose(&lin)),
        }
    }

    /// Apply a coefficient map into another ring.
    pub fn map(&self, target: &Ring, f: impl Fn(&Elem) -> Elem) -> WeierstrassModel {
        WeierstrassModel {
            ring: target.clone(),
            a: self.a.clone().map(|p| p.map(target, &f)),
        }
    }

    pub fn to_fraction_field(&self) -> WeierstrassModel {
        WeierstrassModel {
            ring: self.ring.fraction_field(),
            a: self.a.clone().map(|p| p.to_fraction_field()),
        }
    }
}

impl fmt::Display for WeierstrassModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = NAMES
            .iter()
            .zip(&self.a)
            .map(|(n, p)| format!("{} = {}", n, p))
            .collect();
        write!(f, "[{}] {}", self.ring, parts.join(", "))
    }
}

impl fmt::Debug for WeierstrassModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn constant_quantities(ring: &Ring, g: &[Elem; 5]) -> TateQuantities {
    let m = WeierstrassModel::from_array(g.clone().map(|c| Poly::constant(ring, c))).unwrap();
    m.tate_quantities()
}

/// A constant curve y² + g1·xy + g3·y = x³ + g2·x² + g4·x + g6.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistSeed {
    ring: Ring,
    g: [Elem; 5],
    delta: Elem,
}

impl TwistSeed {
    pub fn new(ring: &Ring, g: [Elem; 5]) -> Result<TwistSeed> {
        let q = constant_quantities(ring, &g);
        if q.delta.is_zero() {
            return Err(ModelError::Degenerate);
        }
        Ok(TwistSeed {
            ring: ring.clone(),
            delta: q.delta.coeff(0),
            g,
        })
    }

    pub fn from_ints(ring: &Ring, g: [i64; 5]) -> Result<TwistSeed> {
        TwistSeed::new(ring, g.map(|c| ring.from_i64(c)))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Elem; 5] {
        &self.g
    }

    pub fn delta(&self) -> &Elem {
        &self.delta
    }

    /// j(E) in the fraction field.
    pub fn j(&self) -> Elem {
        let q = constant_quantities(&self.ring, &self.g);
        let f = self.ring.fraction_field();
        let c4 = self.ring.to_fraction(&q.c4.coeff(0));
        let num = f.pow(&c4, 3);
        let inv = f
            .inv(&self.ring.to_fraction(&self.delta))
            .expect("nonzero discriminant");
        f.mul(&num, &inv)
    }
}

/// The integral quadratic twist of a constant curve by √(t² + 4t).
pub fn quadratic_twist_x11(seed: &TwistSeed) -> WeierstrassModel {
    let ring = &seed.ring;
    let [g1, g2, g3, g4, g6] = &seed.g;
    let r = ring;
    let p = |c: &Elem, coeffs: &[i64]| Poly::from_ints(r, coeffs).scale(c);
    let g1sq = r.mul(g1, g1);
    let g1g3 = r.mul(g1, g3);
    let g3sq = r.mul(g3, g3);
    let a1 = p(g1, &[0, 1]);
    let a2 = &p(g2, &[0, 4, 1]) + &p(&g1sq, &[0, 1]);
    let a3 = p(g3, &[0, 0, 0, 1]);
    let a4 = &p(g4, &[0, 0, 16, 8, 1]) + &p(&g1g3, &[0, 0, 8, 4]);
    let a6 = &p(g6, &[0, 0, 0, 64, 48, 12, 1]) + &p(&g3sq, &[0, 0, 0, 16, 12, 3]);
    WeierstrassModel::new(a1, a2, a3, a4, a6).unwrap()
}

/// Parameters of y² = x³ + r·t²·x + s·t³.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MpX11Params {
    ring: Ring,
    r: Elem,
    s: Elem,
}

impl MpX11Params {
    pub fn new(ring: &Ring, r: Elem, s: Elem) -> Result<MpX11Params> {
        let d = ring.add(
            &ring.mul(&ring.from_i64(4), &ring.pow(&r, 3)),
            &ring.mul(&ring.from_i64(27), &ring.pow(&s, 2)),
        );
        if ring.is_zero(&d) {
            return Err(ModelError::Degenerate);
        }
        Ok(MpX11Params {
            ring: ring.clone(),
            r,
            s,
        })
    }
}

pub fn mp_x11(params: &MpX11Params) -> WeierstrassModel {
    let ring = &params.ring;
    let z = Poly::zero(ring);
    let a4 = Poly::monomial(ring, params.r.clone(), 2);
    let a6 = Poly::monomial(ring, params.s.clone(), 3);
    WeierstrassModel::new(z.clone(), z.clone(), z, a4, a6).unwrap()
}

/// True when some prime keeps both leading coefficients and the reductions
/// are coprime, which forces coprimality over the fraction field.
fn coprime_modulo_some_prime(a: &Poly, b: &Poly) -> bool {
    let ring = a.ring();
    let integral = ring.is_integers()
        || ring
            .extension_parts()
            .is_some_and(|(base, _, _)| base.is_integers());
    if !integral || a.is_zero() || b.is_zero() {
        return false;
    }
    for p in [101u64, 103, 107, 109, 113] {
        let Ok(primes) = PrimeSpec::primes_above(ring, p) else {
            return false;
        };
        for prime in primes {
            let (Ok(ar), Ok(br)) = (prime.reduce_poly(a), prime.reduce_poly(b)) else {
                continue;
            };
            if ar.degree() != a.degree() || br.degree() != b.degree() {
                continue;
            }
            return ar.gcd(&br).is_ok_and(|g| g.is_constant());
        }
    }
    false
}
