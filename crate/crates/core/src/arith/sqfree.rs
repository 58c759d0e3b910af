//! Squarefree decomposition (Yun's algorithm, with p-th root extraction in
//! positive characteristic).

use std::collections::BTreeMap;

use super::poly::Poly;
use super::ring::{Elem, Ring};
use super::{ArithError, Result};

/// `unit · ∏ part^multiplicity`, parts squarefree and pairwise coprime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: Elem,
    pub parts: Vec<(Poly, u32)>,
}

impl SquarefreeDecomposition {
    /// Multiply everything back together.
    pub fn reconstruct(&self, ring: &Ring) -> Poly {
        self.parts
            .iter()
            .fold(Poly::constant(ring, self.unit.clone()), |acc, (p, e)| {
                &acc * &p.pow(*e)
            })
    }

    /// Part of the given multiplicity, or 1.
    pub fn part(&self, ring: &Ring, multiplicity: u32) -> Poly {
        self.parts
            .iter()
            .find(|(_, e)| *e == multiplicity)
            .map(|(p, _)| p.clone())
            .unwrap_or_else(|| Poly::one(ring))
    }

    /// Product of all parts.
    pub fn radical(&self, ring: &Ring) -> Poly {
        self.parts
            .iter()
            .fold(Poly::one(ring), |acc, (p, _)| &acc * p)
    }
}

pub fn squarefree_decompose(p: &Poly) -> Result<SquarefreeDecomposition> {
    if p.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    let ring = p.ring();
    if ring.is_integers() {
        let over_q = squarefree_decompose(&p.to_fraction_field())?;
        let parts: Vec<(Poly, u32)> = over_q
            .parts
            .into_iter()
            .map(|(f, e)| (f.clear_denominators(ring), e))
            .collect();
        let prod = parts
            .iter()
            .fold(Poly::one(ring), |acc, (f, e)| &acc * &f.pow(*e));
        let unit = ring
            .div_exact(p.lead(), prod.lead())
            .ok_or(ArithError::NotDivisible)?;
        return Ok(SquarefreeDecomposition { unit, parts });
    }
    if !ring.is_field() {
        return Err(ArithError::Unsupported(ring.to_string()));
    }
    let unit = p.lead().clone();
    let monic = p.monic()?;
    let mut parts: BTreeMap<u32, Poly> = BTreeMap::new();
    if ring.characteristic() == 0 {
        yun(&monic, 1, &mut parts)?;
    } else {
        yun_char_p(&monic, 1, &mut parts)?;
    }
    Ok(SquarefreeDecomposition {
        unit,
        parts: parts.into_iter().map(|(e, f)| (f, e)).collect(),
    })
}

fn push(parts: &mut BTreeMap<u32, Poly>, f: Poly, e: u32) {
    if f.degree().unwrap_or(0) == 0 {
        return;
    }
    let entry = parts.remove(&e);
    let f = match entry {
        Some(g) => (&g * &f).monic().unwrap(),
        None => f,
    };
    parts.insert(e, f);
}

fn yun(f: &Poly, scale: u32, parts: &mut BTreeMap<u32, Poly>) -> Result<()> {
    let df = f.derivative();
    let b = f.gcd(&df)?;
    let mut c = f.exact_div(&b)?;
    let mut d = &df.exact_div(&b)? - &c.derivative();
    let mut i = 1;
    while c.degree().unwrap_or(0) > 0 {
        let a = c.gcd(&d)?;
        c = c.exact_div(&a)?;
        d = &d.exact_div(&a)? - &c.derivative();
        push(parts, a, i * scale);
        i += 1;
    }
    Ok(())
}

fn yun_char_p(f: &Poly, scale: u32, parts: &mut BTreeMap<u32, Poly>) -> Result<()> {
    let ring = f.ring();
    let p = ring.characteristic() as u32;
    let df = f.derivative();
    let mut c = f.gcd(&df)?;
    let mut w = f.exact_div(&c)?;
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c)?;
        let fac = w.exact_div(&y)?;
        push(parts, fac, i * scale);
        w = y;
        c = c.exact_div(&w)?;
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        let root = pth_root_poly(&c);
        yun_char_p(&root, scale * p, parts)?;
    }
    Ok(())
}

/// For `f = g(t^p)` over a perfect field, the unique `h` with `h^p = f`.
pub fn pth_root_poly(f: &Poly) -> Poly {
    let ring = f.ring();
    let p = ring.characteristic() as usize;
    let v = f
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(i, _)| i % p == 0)
        .map(|(_, c)| ring.pth_root(c))
        .collect();
    debug_assert!(f
        .coeffs()
        .iter()
        .enumerate()
        .all(|(i, c)| i % p == 0 || ring.is_zero(c)));
    Poly::from_elems(ring.clone(), v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_of_product_over_z() {
        let z = Ring::integers();
        let a = Poly::from_ints(&z, &[1, 1]);
        let b = Poly::from_ints(&z, &[19, 45, 27]);
        let p = -(&a * &b).pow(3);
        let d = squarefree_decompose(&p).unwrap();
        assert_eq!(d.unit, z.from_i64(-1));
        assert_eq!(d.parts, vec![(&a * &b, 3)]);
        assert_eq!(d.reconstruct(&z), p);
    }

    #[test]
    fn linear_is_squarefree() {
        let z = Ring::integers();
        let t = Poly::var(&z);
        let d = squarefree_decompose(&t).unwrap();
        assert_eq!(d.parts, vec![(t, 1)]);
    }

    #[test]
    fn char_five_fifth_power() {
        let f5 = Ring::prime_field(5);
        let t = Poly::var(&f5);
        let tp2 = Poly::from_ints(&f5, &[2, 1]);
        let p = &t.pow(5) * &tp2.pow(2);
        let d = squarefree_decompose(&p).unwrap();
        assert_eq!(d.parts, vec![(tp2, 2), (t, 5)]);
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(
            squarefree_decompose(&Poly::zero(&Ring::rationals())),
            Err(ArithError::ZeroPolynomial)
        );
    }

    #[test]
    fn char_three_cube_over_gf9() {
        let f9 = Ring::galois_field(3, 2);
        let a = f9.generator().unwrap();
        // (T − a)³ = T³ − a³
        let lin = Poly::from_elems(f9.clone(), vec![f9.neg(&a), f9.one()]);
        let p = lin.pow(3);
        let d = squarefree_decompose(&p).unwrap();
        assert_eq!(d.parts, vec![(lin, 3)]);
    }
}
