//! Factorization over finite fields: squarefree split, distinct-degree
//! factorization and Cantor–Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::poly::Poly;
use super::ring::{Elem, Ring};
use super::sqfree::squarefree_decompose;
use super::{ArithError, Result};

/// Default seed for equal-degree splitting.
pub const DEFAULT_SEED: u64 = 0x5eed_7a7e;

/// Environment variable overriding [`DEFAULT_SEED`].
pub const SEED_ENV: &str = "EXTREMAL_SEED";

/// Seedable randomness for equal-degree splitting.
pub struct FactorRng(ChaCha8Rng);

impl FactorRng {
    pub fn seeded(seed: u64) -> Self {
        FactorRng(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Seed from `EXTREMAL_SEED` if set and numeric, else [`DEFAULT_SEED`].
    pub fn from_env() -> Self {
        let seed = std::env::var(SEED_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_SEED);
        FactorRng::seeded(seed)
    }
}

/// `base^e mod m`.
pub fn powmod(base: &Poly, e: &BigUint, m: &Poly) -> Poly {
    let ring = base.ring();
    let mut result = Poly::one(ring).rem(m).unwrap();
    let b = base.rem(m).unwrap();
    for i in (0..e.bits()).rev() {
        result = (&result * &result).rem(m).unwrap();
        if e.bit(i) {
            result = (&result * &b).rem(m).unwrap();
        }
    }
    result
}

fn check_finite_field(ring: &Ring) -> Result<BigUint> {
    if !ring.is_field() {
        return Err(ArithError::NotAField(ring.to_string()));
    }
    ring.size()
        .ok_or_else(|| ArithError::Unsupported(ring.to_string()))
}

/// Distinct-degree factorization of a monic squarefree polynomial.
pub fn distinct_degree(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let ring = f.ring();
    let q = check_finite_field(ring)?;
    let t = Poly::var(ring);
    let mut f = f.clone();
    let mut h = t.rem(&f)?;
    let mut out = Vec::new();
    let mut i = 1;
    while f.degree().unwrap_or(0) >= 2 * i {
        h = powmod(&h, &q, &f);
        let g = (&h - &t).gcd(&f)?;
        if g.degree().unwrap_or(0) > 0 {
            f = f.exact_div(&g)?;
            h = h.rem(&f)?;
            out.push((g, i));
        }
        i += 1;
    }
    if let Some(d) = f.degree() {
        if d > 0 {
            out.push((f, d));
        }
    }
    Ok(out)
}

/// Split a monic product of distinct irreducibles of degree `d`.
pub fn equal_degree(f: &Poly, d: usize, rng: &mut FactorRng) -> Result<Vec<Poly>> {
    let ring = f.ring();
    let q = check_finite_field(ring)?;
    let n = f.degree().ok_or(ArithError::ZeroPolynomial)?;
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let qd = num_traits::pow(q.clone(), d);
    let two = BigUint::from(2u32);
    loop {
        let coeffs: Vec<Elem> = (0..n).map(|_| ring.random(&mut rng.0, 0)).collect();
        let a = Poly::from_elems(ring.clone(), coeffs);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if ring.characteristic() == 2 {
            // trace map a + a² + … + a^{2^{kd−1}}, with q^d = 2^{kd}
            let kd = (qd.bits() - 1) as usize;
            let mut acc = a.rem(f)?;
            let mut cur = acc.clone();
            for _ in 1..kd {
                cur = (&cur * &cur).rem(f)?;
                acc = &acc + &cur;
            }
            acc
        } else {
            let e = (&qd - BigUint::one()) / &two;
            &powmod(&a, &e, f) - &Poly::one(ring)
        };
        let g = b.gcd(f)?;
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let mut out = equal_degree(&g, d, rng)?;
            out.extend(equal_degree(&f.exact_div(&g)?, d, rng)?);
            return Ok(out);
        }
    }
}

/// Sort key for a finite-field polynomial, for deterministic output order.
pub fn poly_key(p: &Poly) -> (usize, Vec<Vec<u64>>) {
    let key = |e: &Elem| -> Vec<u64> {
        fn walk(e: &Elem, out: &mut Vec<u64>) {
            match e {
                Elem::Mod(m) => out.push(*m),
                Elem::Ext(v) => v.iter().rev().for_each(|c| walk(c, out)),
                Elem::Int(n) => out.push(n.iter_u64_digits().next().unwrap_or(0)),
                Elem::Rat(_) => out.push(0),
            }
        }
        let mut out = Vec::new();
        walk(e, &mut out);
        out
    };
    (
        p.degree().unwrap_or(0),
        p.coeffs().iter().rev().map(key).collect(),
    )
}

/// Factor into monic irreducibles with multiplicities, using [`FactorRng::from_env`].
pub fn factor_gf(p: &Poly) -> Result<Vec<(Poly, u32)>> {
    factor_gf_with(p, &mut FactorRng::from_env())
}

pub fn factor_gf_with(p: &Poly, rng: &mut FactorRng) -> Result<Vec<(Poly, u32)>> {
    check_finite_field(p.ring())?;
    let sq = squarefree_decompose(p)?;
    let mut out = Vec::new();
    for (part, e) in sq.parts {
        for (g, d) in distinct_degree(&part)? {
            for f in equal_degree(&g, d, rng)? {
                out.push((f, e));
            }
        }
    }
    out.sort_by_key(|(f, e)| (poly_key(f), *e));
    Ok(out)
}

pub fn is_irreducible(f: &Poly) -> Result<bool> {
    let n = match f.degree() {
        None | Some(0) => return Ok(false),
        Some(n) => n,
    };
    let f = f.monic()?;
    let sq = squarefree_decompose(&f)?;
    if sq.parts.len() != 1 || sq.parts[0].1 != 1 {
        return Ok(false);
    }
    let dd = distinct_degree(&f)?;
    Ok(dd.len() == 1 && dd[0].1 == n)
}

/// Lexicographically least monic irreducible of degree `k` over a prime field,
/// ordering by coefficients from t^{k−1} down to t^0.
pub fn least_irreducible(fp: &Ring, k: usize) -> Poly {
    let p = fp.characteristic();
    let total = p.pow(k as u32);
    for n in 0..total {
        let mut v = Vec::with_capacity(k + 1);
        let mut m = n;
        for _ in 0..k {
            v.push(Elem::Mod(m % p));
            m /= p;
        }
        v.push(fp.one());
        let f = Poly::from_elems(fp.clone(), v);
        if is_irreducible(&f).unwrap() {
            return f;
        }
    }
    unreachable!("irreducibles exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_of_cubes_mod_two() {
        let f2 = Ring::prime_field(2);
        let p = Poly::from_ints(&f2, &[1, 0, 0, 1]);
        let f = factor_gf(&p).unwrap();
        assert_eq!(
            f,
            vec![
                (Poly::from_ints(&f2, &[1, 1]), 1),
                (Poly::from_ints(&f2, &[1, 1, 1]), 1)
            ]
        );
    }

    #[test]
    fn linear_mod_three() {
        let f3 = Ring::prime_field(3);
        let t = Poly::var(&f3);
        assert_eq!(factor_gf(&t).unwrap(), vec![(t, 1)]);
    }

    #[test]
    fn double_root_mod_five() {
        // t² − 11t − 1 ≡ (t + 2)² mod 5
        let f5 = Ring::prime_field(5);
        let p = Poly::from_ints(&f5, &[-1, -11, 1]);
        assert_eq!(
            factor_gf(&p).unwrap(),
            vec![(Poly::from_ints(&f5, &[2, 1]), 2)]
        );
    }

    #[test]
    fn least_irreducibles() {
        let f2 = Ring::prime_field(2);
        assert_eq!(least_irreducible(&f2, 2), Poly::from_ints(&f2, &[1, 1, 1]));
        assert_eq!(
            least_irreducible(&f2, 3),
            Poly::from_ints(&f2, &[1, 1, 0, 1])
        );
        let f3 = Ring::prime_field(3);
        assert_eq!(least_irreducible(&f3, 2), Poly::from_ints(&f3, &[1, 0, 1]));
    }

    #[test]
    fn splits_over_extension_field() {
        // t² + 1 splits over GF(9) = 𝔽₃[a]/(a² + 1) as (t − a)(t + a)
        let f9 = Ring::galois_field(3, 2);
        let p = Poly::from_ints(&f9, &[1, 0, 1]);
        let f = factor_gf(&p).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|(g, e)| g.degree() == Some(1) && *e == 1));
    }

    #[test]
    fn zero_is_rejected() {
        assert!(factor_gf(&Poly::zero(&Ring::prime_field(7))).is_err());
    }
}
