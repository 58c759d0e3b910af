//! Coefficient rings.
//!
//! A [`Ring`] is a runtime descriptor; elements ([`Elem`]) are plain data and
//! every operation goes through the ring that owns them. Supported rings are
//! ℤ, ℚ, prime fields 𝔽_p and simple extensions `base[x]/(m)` with `m` monic.
//! The extension covers ℤ[i], ℤ[3^(1/4)], their fraction fields, 𝔽_{p^k} and
//! the residue fields of places of 𝔽_q[t].

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use super::poly::Poly;

/// An element of some [`Ring`], in canonical form for that ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64),
    /// Power-basis coordinates over the base ring, length = degree of the modulus.
    Ext(Vec<Elem>),
}

#[derive(Debug, PartialEq, Eq, Hash)]
enum Kind {
    Integers,
    Rationals,
    Prime(u64),
    Ext {
        base: Ring,
        /// Monic modulus, coefficients from degree 0 up (length = degree + 1).
        modulus: Vec<Elem>,
        symbol: String,
    },
}

/// Runtime description of a coefficient ring.
#[derive(Clone, Hash)]
pub struct Ring(Arc<Kind>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Kind::Integers => write!(f, "Z"),
            Kind::Rationals => write!(f, "Q"),
            Kind::Prime(p) => write!(f, "GF({})", p),
            Kind::Ext {
                base,
                modulus,
                symbol,
            } => {
                if *self == Ring::gaussian() {
                    return write!(f, "Z[i]");
                }
                if *self == Ring::quartic() {
                    return write!(f, "Z[w]");
                }
                if let Kind::Prime(p) = &*base.0 {
                    if symbol == "a" {
                        return write!(f, "GF({}^{})", p, modulus.len() - 1);
                    }
                }
                let m = Poly::from_elems(base.clone(), modulus.clone());
                write!(f, "{}[{}]/({})", base, symbol, m.display_var(symbol))
            }
        }
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring {
    pub fn integers() -> Ring {
        Ring(Arc::new(Kind::Integers))
    }

    pub fn rationals() -> Ring {
        Ring(Arc::new(Kind::Rationals))
    }

    /// 𝔽_p. Panics unless `p` is prime.
    pub fn prime_field(p: u64) -> Ring {
        assert!(is_prime_u64(p), "{} is not prime", p);
        Ring(Arc::new(Kind::Prime(p)))
    }

    /// `base[symbol]/(modulus)`; the modulus must be monic of degree ≥ 1.
    pub fn extension(modulus: &Poly, symbol: &str) -> Ring {
        let deg = modulus.degree().expect("extension modulus must be nonzero");
        assert!(deg >= 1, "extension modulus must have positive degree");
        assert!(
            modulus.ring().is_one(modulus.lead()),
            "extension modulus must be monic"
        );
        Ring(Arc::new(Kind::Ext {
            base: modulus.ring().clone(),
            modulus: modulus.coeffs().to_vec(),
            symbol: symbol.to_string(),
        }))
    }

    /// ℤ[i] with i² = −1.
    pub fn gaussian() -> Ring {
        let z = Ring::integers();
        Ring::extension(&Poly::from_ints(&z, &[1, 0, 1]), "i")
    }

    /// ℤ[w] with w⁴ = 3, i.e. w = 3^(1/4) and √3 = w².
    pub fn quartic() -> Ring {
        let z = Ring::integers();
        Ring::extension(&Poly::from_ints(&z, &[-3, 0, 0, 0, 1]), "w")
    }

    /// 𝔽_{p^k} built on the lexicographically least monic irreducible of degree k.
    pub fn galois_field(p: u64, k: usize) -> Ring {
        let fp = Ring::prime_field(p);
        if k <= 1 {
            return fp;
        }
        let m = super::factor::least_irreducible(&fp, k);
        Ring::extension(&m, "a")
    }

    pub fn is_integers(&self) -> bool {
        matches!(&*self.0, Kind::Integers)
    }

    pub fn is_rationals(&self) -> bool {
        matches!(&*self.0, Kind::Rationals)
    }

    /// Base ring and modulus when this ring is an extension.
    pub fn extension_parts(&self) -> Option<(&Ring, Poly, &str)> {
        match &*self.0 {
            Kind::Ext {
                base,
                modulus,
                symbol,
            } => Some((
                base,
                Poly::from_elems(base.clone(), modulus.clone()),
                symbol.as_str(),
            )),
            _ => None,
        }
    }

    /// Rank over the prime ring (ℤ, ℚ or 𝔽_p).
    pub fn absolute_degree(&self) -> usize {
        match &*self.0 {
            Kind::Ext { base, modulus, .. } => base.absolute_degree() * (modulus.len() - 1),
            _ => 1,
        }
    }

    fn ext_degree(&self) -> usize {
        match &*self.0 {
            Kind::Ext { modulus, .. } => modulus.len() - 1,
            _ => 1,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            Kind::Integers | Kind::Rationals => 0,
            Kind::Prime(p) => *p,
            Kind::Ext { base, .. } => base.characteristic(),
        }
    }

    pub fn is_field(&self) -> bool {
        match &*self.0 {
            Kind::Integers => false,
            Kind::Rationals | Kind::Prime(_) => true,
            Kind::Ext { base, .. } => base.is_field(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.characteristic() != 0
    }

    /// Number of elements of a finite ring.
    pub fn size(&self) -> Option<BigUint> {
        match &*self.0 {
            Kind::Prime(p) => Some(BigUint::from(*p)),
            Kind::Ext { base, modulus, .. } => {
                base.size().map(|q| num_traits::pow(q, modulus.len() - 1))
            }
            _ => None,
        }
    }

    /// ℚ for ℤ, `Frac(base)[x]/(m)` for extensions, the ring itself for fields.
    pub fn fraction_field(&self) -> Ring {
        match &*self.0 {
            Kind::Integers => Ring::rationals(),
            Kind::Ext {
                base,
                modulus,
                symbol,
            } if !base.is_field() => {
                let fb = base.fraction_field();
                let m: Vec<Elem> = modulus.iter().map(|c| base.to_fraction(c)).collect();
                Ring(Arc::new(Kind::Ext {
                    base: fb,
                    modulus: m,
                    symbol: symbol.clone(),
                }))
            }
            _ => self.clone(),
        }
    }

    /// Embed an element into [`Ring::fraction_field`].
    pub fn to_fraction(&self, a: &Elem) -> Elem {
        match (&*self.0, a) {
            (Kind::Integers, Elem::Int(n)) => Elem::Rat(BigRational::from_integer(n.clone())),
            (Kind::Ext { base, .. }, Elem::Ext(v)) if !base.is_field() => {
                Elem::Ext(v.iter().map(|c| base.to_fraction(c)).collect())
            }
            _ => a.clone(),
        }
    }

    /// Inverse of [`Ring::to_fraction`]; `None` when the element is not integral.
    pub fn from_fraction(&self, a: &Elem) -> Option<Elem> {
        match (&*self.0, a) {
            (Kind::Integers, Elem::Rat(r)) => r.is_integer().then(|| Elem::Int(r.to_integer())),
            (Kind::Ext { base, .. }, Elem::Ext(v)) if !base.is_field() => v
                .iter()
                .map(|c| base.from_fraction(c))
                .collect::<Option<Vec<_>>>()
                .map(Elem::Ext),
            _ => Some(a.clone()),
        }
    }

    pub fn zero(&self) -> Elem {
        match &*self.0 {
            Kind::Integers => Elem::Int(BigInt::zero()),
            Kind::Rationals => Elem::Rat(BigRational::zero()),
            Kind::Prime(_) => Elem::Mod(0),
            Kind::Ext { base, modulus, .. } => Elem::Ext(vec![base.zero(); modulus.len() - 1]),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match &*self.0 {
            Kind::Integers => Elem::Int(n.clone()),
            Kind::Rationals => Elem::Rat(BigRational::from_integer(n.clone())),
            Kind::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Elem::Mod(r.to_u64().unwrap())
            }
            Kind::Ext { base, modulus, .. } => {
                let mut v = vec![base.zero(); modulus.len() - 1];
                v[0] = base.from_bigint(n);
                Elem::Ext(v)
            }
        }
    }

    pub fn from_rational(&self, r: &BigRational) -> Option<Elem> {
        let num = self.from_bigint(r.numer());
        let den = self.from_bigint(r.denom());
        self.div_exact(&num, &den)
    }

    /// The adjoined generator of an extension, as an element.
    pub fn generator(&self) -> Option<Elem> {
        match &*self.0 {
            Kind::Ext { base, modulus, .. } => {
                let d = modulus.len() - 1;
                if d == 1 {
                    // x ≡ −m₀
                    return Some(Elem::Ext(vec![base.neg(&modulus[0])]));
                }
                let mut v = vec![base.zero(); d];
                v[1] = base.one();
                Some(Elem::Ext(v))
            }
            _ => None,
        }
    }

    /// Element with the given power-basis coordinates (extensions only).
    pub fn from_coords(&self, coords: Vec<Elem>) -> Elem {
        match &*self.0 {
            Kind::Ext { base, modulus, .. } => {
                let p = Poly::from_elems(base.clone(), coords);
                let m = Poly::from_elems(base.clone(), modulus.clone());
                self.reduce_poly(&p, &m)
            }
            _ => {
                assert_eq!(coords.len(), 1);
                coords.into_iter().next().unwrap()
            }
        }
    }

    pub fn coords(&self, a: &Elem) -> Vec<Elem> {
        match a {
            Elem::Ext(v) => v.clone(),
            _ => vec![a.clone()],
        }
    }

    fn reduce_poly(&self, p: &Poly, m: &Poly) -> Elem {
        let (base, d) = match &*self.0 {
            Kind::Ext { base, modulus, .. } => (base, modulus.len() - 1),
            _ => unreachable!(),
        };
        let r = p.rem_monic(m);
        let mut v = r.coeffs().to_vec();
        v.resize(d, base.zero());
        Elem::Ext(v)
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Int(n) => n.is_zero(),
            Elem::Rat(r) => r.is_zero(),
            Elem::Mod(m) => *m == 0,
            Elem::Ext(v) => {
                let base = self.base();
                v.iter().all(|c| base.is_zero(c))
            }
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    fn base(&self) -> &Ring {
        match &*self.0 {
            Kind::Ext { base, .. } => base,
            _ => panic!("not an extension ring"),
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (Kind::Integers, Elem::Int(x), Elem::Int(y)) => Elem::Int(x + y),
            (Kind::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            (Kind::Prime(p), Elem::Mod(x), Elem::Mod(y)) => {
                Elem::Mod(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            (Kind::Ext { base, .. }, Elem::Ext(x), Elem::Ext(y)) => {
                Elem::Ext(x.iter().zip(y).map(|(u, v)| base.add(u, v)).collect())
            }
            _ => panic!("element does not belong to ring {}", self),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (&*self.0, a) {
            (Kind::Integers, Elem::Int(x)) => Elem::Int(-x),
            (Kind::Rationals, Elem::Rat(x)) => Elem::Rat(-x),
            (Kind::Prime(p), Elem::Mod(x)) => Elem::Mod(if *x == 0 { 0 } else { p - x }),
            (Kind::Ext { base, .. }, Elem::Ext(x)) => {
                Elem::Ext(x.iter().map(|u| base.neg(u)).collect())
            }
            _ => panic!("element does not belong to ring {}", self),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (Kind::Integers, Elem::Int(x), Elem::Int(y)) => Elem::Int(x * y),
            (Kind::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (Kind::Prime(p), Elem::Mod(x), Elem::Mod(y)) => {
                Elem::Mod(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (Kind::Ext { base, modulus, .. }, Elem::Ext(x), Elem::Ext(y)) => {
                let d = modulus.len() - 1;
                let mut prod = vec![base.zero(); 2 * d - 1];
                for (i, u) in x.iter().enumerate() {
                    if base.is_zero(u) {
                        continue;
                    }
                    for (j, v) in y.iter().enumerate() {
                        prod[i + j] = base.add(&prod[i + j], &base.mul(u, v));
                    }
                }
                for k in (d..2 * d - 1).rev() {
                    let c = prod[k].clone();
                    if base.is_zero(&c) {
                        continue;
                    }
                    for j in 0..d {
                        if !base.is_zero(&modulus[j]) {
                            prod[k - d + j] =
                                base.sub(&prod[k - d + j], &base.mul(&c, &modulus[j]));
                        }
                    }
                }
                prod.truncate(d);
                Elem::Ext(prod)
            }
            _ => panic!("element does not belong to ring {}", self),
        }
    }

    pub fn pow(&self, a: &Elem, mut e: u64) -> Elem {
        let mut result = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    pub fn pow_big(&self, a: &Elem, e: &BigUint) -> Elem {
        let mut result = self.one();
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = self.mul(&result, &result);
            if e.bit(i) {
                result = self.mul(&result, a);
            }
        }
        result
    }

    /// Multiplicative inverse; `None` for zero or for non-units.
    pub fn inv(&self, a: &Elem) -> Option<Elem> {
        if self.is_zero(a) {
            return None;
        }
        match (&*self.0, a) {
            (Kind::Integers, Elem::Int(x)) => {
                if x.is_one() || (-x).is_one() {
                    Some(a.clone())
                } else {
                    None
                }
            }
            (Kind::Rationals, Elem::Rat(x)) => Some(Elem::Rat(x.recip())),
            (Kind::Prime(p), Elem::Mod(x)) => {
                let e = BigInt::from(*x).extended_gcd(&BigInt::from(*p));
                Some(self.from_bigint(&e.x))
            }
            (Kind::Ext { base, modulus, .. }, Elem::Ext(x)) => {
                if base.is_field() {
                    let m = Poly::from_elems(base.clone(), modulus.clone());
                    let f = Poly::from_elems(base.clone(), x.clone());
                    let (g, s, _) = f.xgcd(&m);
                    if g.degree() != Some(0) {
                        return None;
                    }
                    let ginv = base.inv(g.lead())?;
                    let s = s.scale(&ginv);
                    Some(self.reduce_poly(&s, &m))
                } else {
                    self.div_exact(&self.one(), a)
                }
            }
            _ => panic!("element does not belong to ring {}", self),
        }
    }

    /// `a / b` when `b` divides `a` in this ring.
    pub fn div_exact(&self, a: &Elem, b: &Elem) -> Option<Elem> {
        if self.is_zero(b) {
            return None;
        }
        if self.is_zero(a) {
            return Some(self.zero());
        }
        match (&*self.0, a, b) {
            (Kind::Integers, Elem::Int(x), Elem::Int(y)) => {
                let (q, r) = x.div_rem(y);
                r.is_zero().then_some(Elem::Int(q))
            }
            (Kind::Ext { base, .. }, _, _) if !base.is_field() => {
                let f = self.fraction_field();
                let binv = f.inv(&self.to_fraction(b))?;
                let q = f.mul(&self.to_fraction(a), &binv);
                self.from_fraction(&q)
            }
            _ => self.inv(b).map(|bi| self.mul(a, &bi)),
        }
    }

    /// Inverse of the Frobenius map of a finite field: the unique `x` with `x^p = a`.
    pub fn pth_root(&self, a: &Elem) -> Elem {
        let p = self.characteristic();
        assert!(p != 0, "pth_root needs positive characteristic");
        match &*self.0 {
            Kind::Prime(_) => a.clone(),
            _ => {
                let q = self.size().expect("pth_root needs a finite field");
                self.pow_big(a, &(q / BigUint::from(p)))
            }
        }
    }

    /// Norm down to the prime ring, computed as a resultant with the modulus.
    pub fn norm(&self, a: &Elem) -> Elem {
        match &*self.0 {
            Kind::Ext { base, modulus, .. } => {
                let m = Poly::from_elems(base.clone(), modulus.clone());
                let f = Poly::from_elems(base.clone(), self.coords(a));
                let r = m.resultant(&f).expect("resultant over an integral base");
                base.norm(&r)
            }
            _ => a.clone(),
        }
    }

    /// Element of the prime ring as a big integer (ℤ or 𝔽_p representatives).
    pub fn as_integer(&self, a: &Elem) -> Option<BigInt> {
        match a {
            Elem::Int(n) => Some(n.clone()),
            Elem::Mod(m) => Some(BigInt::from(*m)),
            Elem::Rat(r) => r.is_integer().then(|| r.to_integer()),
            Elem::Ext(v) => {
                let base = self.base();
                if v[1..].iter().all(|c| base.is_zero(c)) {
                    base.as_integer(&v[0])
                } else {
                    None
                }
            }
        }
    }

    /// Gcd of the rational-integer coordinates of an element of ℤ or an order over ℤ.
    pub fn integer_content(&self, a: &Elem) -> BigInt {
        match a {
            Elem::Int(n) => n.abs(),
            Elem::Ext(v) => {
                let base = self.base();
                v.iter()
                    .fold(BigInt::zero(), |g, c| g.gcd(&base.integer_content(c)))
            }
            _ => BigInt::one(),
        }
    }

    /// Gcd of coordinate numerators (fraction fields of ℚ-based rings).
    pub fn numerator_content(&self, a: &Elem) -> BigInt {
        match a {
            Elem::Rat(r) => r.numer().abs(),
            Elem::Ext(v) => {
                let base = self.base();
                v.iter()
                    .fold(BigInt::zero(), |g, c| g.gcd(&base.numerator_content(c)))
            }
            _ => self.integer_content(a),
        }
    }

    /// Least common multiple of coordinate denominators (fraction fields of ℚ-based rings).
    pub fn denominator(&self, a: &Elem) -> BigInt {
        match a {
            Elem::Rat(r) => r.denom().clone(),
            Elem::Ext(v) => {
                let base = self.base();
                v.iter()
                    .fold(BigInt::one(), |l, c| l.lcm(&base.denominator(c)))
            }
            _ => BigInt::one(),
        }
    }

    /// Uniform random element; integer coordinates are drawn from `[-bound, bound]`.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Elem {
        match &*self.0 {
            Kind::Integers => Elem::Int(BigInt::from(rng.gen_range(-bound..=bound))),
            Kind::Rationals => {
                let n = rng.gen_range(-bound..=bound);
                let d = rng.gen_range(1..=bound.max(1));
                Elem::Rat(BigRational::new(n.into(), d.into()))
            }
            Kind::Prime(p) => Elem::Mod(rng.gen_range(0..*p)),
            Kind::Ext { base, modulus, .. } => Elem::Ext(
                (0..modulus.len() - 1)
                    .map(|_| base.random(rng, bound))
                    .collect(),
            ),
        }
    }

    /// Enumerate every element of a finite ring (small fields only).
    pub fn elements(&self) -> Vec<Elem> {
        match &*self.0 {
            Kind::Prime(p) => (0..*p).map(Elem::Mod).collect(),
            Kind::Ext { base, modulus, .. } => {
                let be = base.elements();
                let mut out: Vec<Vec<Elem>> = vec![vec![]];
                for _ in 0..modulus.len() - 1 {
                    out = out
                        .into_iter()
                        .flat_map(|v| {
                            be.iter().map(move |c| {
                                let mut w = v.clone();
                                w.push(c.clone());
                                w
                            })
                        })
                        .collect();
                }
                out.into_iter().map(Elem::Ext).collect()
            }
            _ => panic!("ring {} is infinite", self),
        }
    }

    /// Human-readable form, parseable by the model-file grammar for ℤ, ℤ[i], ℤ[w] and 𝔽_p.
    pub fn display(&self, a: &Elem) -> String {
        match (&*self.0, a) {
            (_, Elem::Int(n)) => n.to_string(),
            (_, Elem::Rat(r)) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            (_, Elem::Mod(m)) => m.to_string(),
            (Kind::Ext { base, symbol, .. }, Elem::Ext(v)) => {
                let p = Poly::from_elems(base.clone(), v.clone());
                if p.is_zero() {
                    "0".to_string()
                } else {
                    p.display_ascending(symbol)
                }
            }
            _ => format!("{:?}", a),
        }
    }

    /// True if the element needs parentheses when used as a factor.
    pub fn is_compound(&self, a: &Elem) -> bool {
        match a {
            Elem::Ext(v) => {
                let base = self.base();
                v.iter().filter(|c| !base.is_zero(c)).count() > 1
                    || v.iter().any(|c| !base.is_zero(c) && base.is_compound(c))
            }
            Elem::Rat(r) => !r.is_integer(),
            _ => false,
        }
    }

    /// Whether this is a "negative-looking" scalar (for pretty printing).
    pub fn is_negative(&self, a: &Elem) -> bool {
        match a {
            Elem::Int(n) => n.is_negative(),
            Elem::Rat(r) => r.is_negative(),
            Elem::Ext(v) => {
                let base = self.base();
                let nz: Vec<&Elem> = v.iter().filter(|c| !base.is_zero(c)).collect();
                nz.len() == 1 && base.is_negative(nz[0])
            }
            Elem::Mod(_) => false,
        }
    }

    pub(crate) fn ext_dim(&self) -> usize {
        self.ext_degree()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_arithmetic() {
        let r = Ring::gaussian();
        let i = r.generator().unwrap();
        assert_eq!(r.mul(&i, &i), r.from_i64(-1));
        let one_plus_i = r.add(&r.one(), &i);
        assert_eq!(r.norm(&one_plus_i), Elem::Int(2.into()));
        // (1+i)² = 2i, so 2i / (1+i) = 1+i
        let two_i = r.mul(&r.from_i64(2), &i);
        assert_eq!(r.div_exact(&two_i, &one_plus_i), Some(one_plus_i.clone()));
        assert_eq!(r.div_exact(&r.one(), &one_plus_i), None);
    }

    #[test]
    fn quartic_norms() {
        let r = Ring::quartic();
        let w = r.generator().unwrap();
        assert_eq!(r.pow(&w, 4), r.from_i64(3));
        assert_eq!(r.norm(&w), Elem::Int((-3).into()));
        let one_plus_w = r.add(&r.one(), &w);
        assert_eq!(r.norm(&one_plus_w), Elem::Int((-2).into()));
    }

    #[test]
    fn finite_field_inverse_and_roots() {
        let f = Ring::galois_field(3, 2);
        assert_eq!(f.size().unwrap(), BigUint::from(9u32));
        for a in f.elements() {
            if f.is_zero(&a) {
                continue;
            }
            let ai = f.inv(&a).unwrap();
            assert!(f.is_one(&f.mul(&a, &ai)));
            let r = f.pth_root(&a);
            assert_eq!(f.pow(&r, 3), a);
        }
    }

    #[test]
    fn rational_field_of_gaussian() {
        let r = Ring::gaussian();
        let q = r.fraction_field();
        assert!(q.is_field());
        let i = q.generator().unwrap();
        let inv = q.inv(&i).unwrap();
        assert_eq!(q.mul(&i, &inv), q.one());
    }
}
