//! Dense univariate polynomials over a [`Ring`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::ring::{Elem, Ring};
use super::{ArithError, Result};

/// A polynomial in one variable, coefficients from degree 0 up, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: Ring,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn from_elems(ring: Ring, mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Poly { ring, coeffs }
    }

    pub fn from_ints(ring: &Ring, coeffs: &[i64]) -> Poly {
        Poly::from_elems(
            ring.clone(),
            coeffs.iter().map(|&c| ring.from_i64(c)).collect(),
        )
    }

    pub fn zero(ring: &Ring) -> Poly {
        Poly {
            ring: ring.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Poly {
        Poly::constant(ring, ring.one())
    }

    pub fn constant(ring: &Ring, c: Elem) -> Poly {
        Poly::from_elems(ring.clone(), vec![c])
    }

    pub fn monomial(ring: &Ring, c: Elem, k: usize) -> Poly {
        let mut v = vec![ring.zero(); k];
        v.push(c);
        Poly::from_elems(ring.clone(), v)
    }

    /// The variable `t`.
    pub fn var(ring: &Ring) -> Poly {
        Poly::monomial(ring, ring.one(), 1)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Elem> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient. Panics on the zero polynomial.
    pub fn lead(&self) -> &Elem {
        self.coeffs
            .last()
            .expect("leading coefficient of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.ring != other.ring {
            return Err(ArithError::RingMismatch(
                self.ring.to_string(),
                other.ring.to_string(),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.add_unchecked(&other.neg_unchecked()))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let r = &self.ring;
        let v = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => r.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::from_elems(r.clone(), v)
    }

    fn neg_unchecked(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| self.ring.neg(c)).collect(),
        }
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ring);
        }
        let r = &self.ring;
        let mut v = vec![r.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = r.add(&v[i + j], &r.mul(a, b));
            }
        }
        Poly::from_elems(r.clone(), v)
    }

    pub fn scale(&self, c: &Elem) -> Poly {
        Poly::from_elems(
            self.ring.clone(),
            self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect(),
        )
    }

    pub fn scale_int(&self, n: i64) -> Poly {
        self.scale(&self.ring.from_i64(n))
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut result = Poly::one(&self.ring);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Remainder modulo a monic polynomial (works over any ring).
    pub fn rem_monic(&self, m: &Poly) -> Poly {
        let d = m.degree().expect("modulus must be nonzero");
        let r = &self.ring;
        let mut v = self.coeffs.clone();
        while v.len() > d {
            let k = v.len() - 1;
            let c = v[k].clone();
            if !r.is_zero(&c) {
                for j in 0..d {
                    v[k - d + j] = r.sub(&v[k - d + j], &r.mul(&c, &m.coeffs[j]));
                }
            }
            v.pop();
        }
        Poly::from_elems(r.clone(), v)
    }

    /// Division with remainder. Each step divides by the leading coefficient of
    /// `d` exactly; over a field this always succeeds.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        self.check_ring(d)?;
        let dd = d.degree().ok_or(ArithError::ZeroPolynomial)?;
        let r = &self.ring;
        let lc = d.lead();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![r.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = rem[k].clone();
            if !r.is_zero(&c) {
                let q = r.div_exact(&c, lc).ok_or(ArithError::NotDivisible)?;
                for j in 0..=dd {
                    rem[k - dd + j] = r.sub(&rem[k - dd + j], &r.mul(&q, &d.coeffs[j]));
                }
                quo[k - dd] = q;
            }
            rem.pop();
        }
        Ok((
            Poly::from_elems(r.clone(), quo),
            Poly::from_elems(r.clone(), rem),
        ))
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.div_rem(d)?.1)
    }

    /// `self / d`, failing unless the remainder is zero.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(ArithError::NotDivisible);
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.exact_div(self).is_ok()
    }

    /// Divide every coefficient by a scalar exactly.
    pub fn div_scalar(&self, c: &Elem) -> Result<Poly> {
        let r = &self.ring;
        if r.extension_parts().is_some_and(|(b, _, _)| !b.is_field()) {
            let f = r.fraction_field();
            let inv = f.inv(&r.to_fraction(c)).ok_or(ArithError::NotDivisible)?;
            let v = self
                .coeffs
                .iter()
                .map(|a| {
                    r.from_fraction(&f.mul(&r.to_fraction(a), &inv))
                        .ok_or(ArithError::NotDivisible)
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(Poly::from_elems(r.clone(), v));
        }
        let v = self
            .coeffs
            .iter()
            .map(|a| self.ring.div_exact(a, c).ok_or(ArithError::NotDivisible))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_elems(self.ring.clone(), v))
    }

    pub fn eval(&self, x: &Elem) -> Elem {
        let r = &self.ring;
        self.coeffs
            .iter()
            .rev()
            .fold(r.zero(), |acc, c| r.add(&r.mul(&acc, x), c))
    }

    /// `self(inner)`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(&self.ring), |acc, c| {
                &(&acc * inner) + &Poly::constant(&self.ring, c.clone())
            })
    }

    pub fn derivative(&self) -> Poly {
        let r = &self.ring;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| r.mul(&r.from_i64(i as i64), c))
            .collect();
        Poly::from_elems(r.clone(), v)
    }

    /// Apply a coefficient map into another ring.
    pub fn map<F: Fn(&Elem) -> Elem>(&self, target: &Ring, f: F) -> Poly {
        Poly::from_elems(target.clone(), self.coeffs.iter().map(f).collect())
    }

    /// Same polynomial viewed over the fraction field of its ring.
    pub fn to_fraction_field(&self) -> Poly {
        let f = self.ring.fraction_field();
        self.map(&f, |c| self.ring.to_fraction(c))
    }

    /// Back from the fraction field; `None` unless all coefficients are integral.
    pub fn from_fraction_field(&self, ring: &Ring) -> Option<Poly> {
        let v = self
            .coeffs
            .iter()
            .map(|c| ring.from_fraction(c))
            .collect::<Option<Vec<_>>>()?;
        Some(Poly::from_elems(ring.clone(), v))
    }

    /// Order of vanishing at t = 0; `None` for the zero polynomial.
    pub fn trailing_zeros(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.ring.is_zero(c))
    }

    /// Divide by t^k; the caller guarantees k ≤ trailing_zeros.
    pub fn shift_down(&self, k: usize) -> Poly {
        Poly::from_elems(
            self.ring.clone(),
            self.coeffs.iter().skip(k).cloned().collect(),
        )
    }

    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![self.ring.zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly::from_elems(self.ring.clone(), v)
    }

    /// t^n · p(1/t), for n ≥ deg p.
    pub fn reverse(&self, n: usize) -> Poly {
        assert!(
            self.degree().map_or(true, |d| d <= n),
            "reverse length below degree"
        );
        let mut v = self.coeffs.clone();
        v.resize(n + 1, self.ring.zero());
        v.reverse();
        Poly::from_elems(self.ring.clone(), v)
    }

    /// Multiplicity of `pi` as a factor; `None` for the zero polynomial.
    pub fn valuation(&self, pi: &Poly) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        if pi.degree() == Some(1) && self.ring.is_zero(&pi.coeffs[0]) {
            return self.trailing_zeros().map(|k| k as u32);
        }
        let mut v = 0;
        let mut cur = self.clone();
        loop {
            match cur.div_rem(pi) {
                Ok((q, r)) if r.is_zero() => {
                    cur = q;
                    v += 1;
                }
                _ => return Some(v),
            }
        }
    }

    /// Make monic (field coefficients).
    pub fn monic(&self) -> Result<Poly> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let inv = self
            .ring
            .inv(self.lead())
            .ok_or_else(|| ArithError::NotAField(self.ring.to_string()))?;
        Ok(self.scale(&inv))
    }

    /// Extended Euclid over a field: (g, s, t) with s·self + t·other = g.
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let r = &self.ring;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(r), Poly::zero(r));
        let (mut t0, mut t1) = (Poly::zero(r), Poly::one(r));
        while !r1.is_zero() {
            let (q, rem) = r0.div_rem(&r1).expect("xgcd requires field coefficients");
            r0 = std::mem::replace(&mut r1, rem);
            let s2 = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t2);
        }
        (r0, s0, t0)
    }

    /// Greatest common divisor.
    ///
    /// Over a field the result is monic. Over ℤ it is primitive with positive
    /// leading coefficient. Over an order such as ℤ[i] the field gcd is scaled
    /// to an integral polynomial with coprime rational-integer coordinates.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        if self.ring.is_field() && self.ring.characteristic() == 0 {
            return self.gcd_char0(other);
        }
        if self.ring.is_field() {
            let (g, _, _) = self.xgcd(other);
            return g.monic();
        }
        let g = self.to_fraction_field().gcd(&other.to_fraction_field())?;
        Ok(g.clear_denominators(&self.ring))
    }

    /// Euclid over a characteristic-0 field, rescaling each remainder so its
    /// coordinates are coprime integers.
    fn gcd_char0(&self, other: &Poly) -> Result<Poly> {
        let mut a = self.integral_primitive();
        let mut b = other.integral_primitive();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r.integral_primitive();
        }
        if a.is_zero() {
            return Ok(a);
        }
        a.monic()
    }

    fn integral_primitive(&self) -> Poly {
        let fr = &self.ring;
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(&fr.denominator(c)));
        let num = self
            .coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(&fr.numerator_content(c)));
        if num.is_zero() {
            return self.clone();
        }
        let q = fr
            .div_exact(&fr.from_bigint(&den), &fr.from_bigint(&num))
            .expect("nonzero content");
        self.scale(&q)
    }

    /// Scale a polynomial over a fraction field to a primitive integral one.
    pub(crate) fn clear_denominators(&self, ring: &Ring) -> Poly {
        if self.is_zero() {
            return Poly::zero(ring);
        }
        let fr = &self.ring;
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(&fr.denominator(c)));
        let scaled = self.scale(&fr.from_bigint(&den));
        let p = scaled
            .from_fraction_field(ring)
            .expect("denominators cleared");
        p.primitive_part()
    }

    /// Gcd of all rational-integer coordinates of the coefficients (ℤ-based rings).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(&self.ring.integer_content(c)))
    }

    /// Divide out the integer content; over ℤ also force a positive leading coefficient.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.ring.is_integers() && self.ring.is_negative(self.lead()) {
            c = -c;
        }
        if c.is_one() {
            return self.clone();
        }
        self.div_scalar(&self.ring.from_bigint(&c))
            .expect("content divides")
    }

    /// Resultant, computed over the fraction field by the Euclidean recurrence.
    pub fn resultant(&self, other: &Poly) -> Result<Elem> {
        self.check_ring(other)?;
        if !self.ring.is_field() {
            let r = self
                .to_fraction_field()
                .resultant(&other.to_fraction_field())?;
            return self.ring.from_fraction(&r).ok_or(ArithError::NotDivisible);
        }
        let r = &self.ring;
        if self.is_zero() || other.is_zero() {
            return Ok(r.zero());
        }
        let mut f = self.clone();
        let mut g = other.clone();
        let mut acc = r.one();
        loop {
            let df = f.degree().unwrap();
            let dg = g.degree().unwrap();
            if dg == 0 {
                return Ok(r.mul(&acc, &r.pow(g.lead(), df as u64)));
            }
            let rem = f.rem(&g)?;
            if rem.is_zero() {
                return Ok(r.zero());
            }
            let dr = rem.degree().unwrap();
            if (df * dg) % 2 == 1 {
                acc = r.neg(&acc);
            }
            acc = r.mul(&acc, &r.pow(g.lead(), (df - dr) as u64));
            f = g;
            g = rem;
        }
    }

    /// Discriminant (−1)^{n(n−1)/2} res(f, f') / lc(f).
    pub fn discriminant(&self) -> Result<Elem> {
        let n = self.degree().ok_or(ArithError::ZeroPolynomial)?;
        let r = &self.ring;
        let res = self.resultant(&self.derivative())?;
        let d = r
            .div_exact(&res, self.lead())
            .ok_or(ArithError::NotDivisible)?;
        Ok(if (n * (n.saturating_sub(1)) / 2) % 2 == 1 {
            r.neg(&d)
        } else {
            d
        })
    }

    /// Render with the given variable name, highest degree first.
    pub fn display_var(&self, var: &str) -> String {
        self.render(var, true)
    }

    /// Render with the given variable name, lowest degree first.
    pub fn display_ascending(&self, var: &str) -> String {
        self.render(var, false)
    }

    fn render(&self, var: &str, descending: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let r = &self.ring;
        let mut idx: Vec<usize> = (0..self.coeffs.len())
            .filter(|&i| !r.is_zero(&self.coeffs[i]))
            .collect();
        if descending {
            idx.reverse();
        }
        let mut out = String::new();
        for (n, &i) in idx.iter().enumerate() {
            let c = &self.coeffs[i];
            let neg = r.is_negative(c) && !r.is_compound(c);
            let mag = if neg { r.neg(c) } else { c.clone() };
            if n == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{}^{}", var, i),
            };
            let cs = r.display(&mag);
            if i == 0 {
                if r.is_compound(&mag) && n > 0 {
                    out.push_str(&format!("({})", cs));
                } else {
                    out.push_str(&cs);
                }
            } else if r.is_one(&mag) {
                out.push_str(&mono);
            } else if r.is_compound(&mag) {
                out.push_str(&format!("({})*{}", cs, mono));
            } else {
                out.push_str(&format!("{}*{}", cs, mono));
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_var("t"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.ring, self)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.checked_add(rhs)
            .expect("ring mismatch in polynomial addition")
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.checked_sub(rhs)
            .expect("ring mismatch in polynomial subtraction")
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.checked_mul(rhs)
            .expect("ring mismatch in polynomial multiplication")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.neg_unchecked()
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.neg_unchecked()
    }
}

/// Signed integer coefficient vector of a ℤ-polynomial (test and report helper).
pub fn int_coeffs(p: &Poly) -> Vec<BigInt> {
    p.coeffs()
        .iter()
        .map(|c| p.ring().as_integer(c).expect("integer coefficient"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> Poly {
        Poly::from_ints(&Ring::integers(), c)
    }

    #[test]
    fn product_gives_sum_of_cubes() {
        // (t+3)(t²−3t+9) = t³+27
        assert_eq!(&z(&[3, 1]) * &z(&[9, -3, 1]), z(&[27, 0, 0, 1]));
    }

    #[test]
    fn zero_absorbs() {
        let p = z(&[1, 2, 3]);
        assert!((&p * &Poly::zero(&Ring::integers())).is_zero());
    }

    #[test]
    fn square_of_quadratic() {
        let p = z(&[16, 40, 89]);
        assert_eq!(p.pow(2), z(&[256, 1280, 4448, 7120, 7921]));
    }

    #[test]
    fn exact_div_reports_remainder() {
        assert_eq!(
            z(&[27, 0, 0, 1]).exact_div(&z(&[3, 1])).unwrap(),
            z(&[9, -3, 1])
        );
        assert_eq!(
            z(&[1, 0, 1]).exact_div(&z(&[3, 1])),
            Err(ArithError::NotDivisible)
        );
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = z(&[1, 1]);
        let b = Poly::from_ints(&Ring::prime_field(5), &[1, 1]);
        assert!(matches!(
            a.checked_add(&b),
            Err(ArithError::RingMismatch(..))
        ));
    }

    #[test]
    fn gcd_examples() {
        let q = Ring::rationals();
        let a = Poly::from_ints(&q, &[27, 0, 0, 1]);
        let b = Poly::from_ints(&q, &[0, 0, 3]);
        assert_eq!(a.gcd(&b).unwrap(), Poly::one(&q));
        // gcd(t⁸(16+40t+89t²)², t⁷) = t⁷
        let t = Poly::var(&q);
        let big = &t.pow(8) * &Poly::from_ints(&q, &[16, 40, 89]).pow(2);
        assert_eq!(big.gcd(&t.pow(7)).unwrap(), t.pow(7));
        // idempotence over ℤ, normalized sign
        let p = z(&[-2, 0, -4]);
        assert_eq!(p.gcd(&p).unwrap(), z(&[1, 0, 2]));
    }

    #[test]
    fn resultant_and_discriminant() {
        // disc(t³ + 27) = −27·27² = −3⁹
        let d = z(&[27, 0, 0, 1]).discriminant().unwrap();
        assert_eq!(d, Elem::Int(BigInt::from(-19683)));
        // res(t² + 1, t − 2) = 5
        assert_eq!(
            z(&[1, 0, 1]).resultant(&z(&[-2, 1])).unwrap(),
            Elem::Int(5.into())
        );
    }

    #[test]
    fn compose_and_eval() {
        let p = z(&[1, 0, 1]);
        let q = p.compose(&z(&[8, 9]));
        assert_eq!(q, z(&[65, 144, 81]));
        assert_eq!(q.eval(&Elem::Int(1.into())), Elem::Int(290.into()));
    }

    #[test]
    fn render_parseable() {
        let g = Ring::gaussian();
        let i = g.generator().unwrap();
        let c = g.add(&g.one(), &g.neg(&i));
        let p = Poly::from_elems(g.clone(), vec![c, g.from_i64(-2)]);
        assert_eq!(p.to_string(), "-2*t + (1 - i)");
    }
}
