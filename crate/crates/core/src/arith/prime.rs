//! Primes of ℤ and of monogenic orders ℤ[x]/(m), with their residue maps.
//!
//! A prime above p corresponds to a monic irreducible factor g of m mod p;
//! the residue field is 𝔽_p[x]/(g) and the map sends x to the class of x.
//! For ℤ[i] and ℤ[3^(1/4)] the order is the full ring of integers, so every
//! prime arises this way.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::factor::factor_gf;
use super::poly::Poly;
use super::ring::{Elem, Ring};
use super::{ArithError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSpec {
    ring: Ring,
    p: u64,
    /// Image of the order's generator in the residue field.
    root: Option<Elem>,
    residue_field: Ring,
    generator: Option<Elem>,
    label: String,
}

impl fmt::Display for PrimeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

impl PrimeSpec {
    /// The prime (p) of ℤ.
    pub fn rational(p: u64) -> PrimeSpec {
        let z = Ring::integers();
        PrimeSpec {
            generator: Some(z.from_i64(p as i64)),
            ring: z,
            p,
            root: None,
            residue_field: Ring::prime_field(p),
            label: p.to_string(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The rational prime below.
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn residue_field(&self) -> &Ring {
        &self.residue_field
    }

    pub fn residue_degree(&self) -> usize {
        self.residue_field.absolute_degree()
    }

    pub fn generator(&self) -> Option<&Elem> {
        self.generator.as_ref()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// |residue field| = p^f.
    pub fn norm(&self) -> BigInt {
        BigInt::from(self.p).pow(self.residue_degree() as u32)
    }

    /// All primes of `ring` lying over the rational prime `p`.
    pub fn primes_above(ring: &Ring, p: u64) -> Result<Vec<PrimeSpec>> {
        if ring.is_integers() {
            return Ok(vec![PrimeSpec::rational(p)]);
        }
        let (base, modulus, _) = ring
            .extension_parts()
            .ok_or_else(|| ArithError::Unsupported(ring.to_string()))?;
        if !base.is_integers() {
            return Err(ArithError::Unsupported(ring.to_string()));
        }
        let fp = Ring::prime_field(p);
        let mbar = modulus.map(&fp, |c| fp.from_bigint(&base.as_integer(c).unwrap()));
        let factors = factor_gf(&mbar)?;
        let inert = factors.len() == 1 && factors[0].1 == 1;
        let mut out = Vec::new();
        for (g, _) in factors {
            let (residue_field, root) = if g.degree() == Some(1) {
                (fp.clone(), fp.neg(&g.coeff(0)))
            } else {
                let k = Ring::extension(&g, "x");
                let r = k.generator().unwrap();
                (k, r)
            };
            let mut spec = PrimeSpec {
                ring: ring.clone(),
                p,
                root: Some(root),
                residue_field,
                generator: None,
                label: String::new(),
            };
            if inert {
                spec.generator = Some(ring.from_i64(p as i64));
            } else {
                spec.generator = spec.search_generator();
            }
            spec.label = match &spec.generator {
                Some(g) => ring.display(g).replace(' ', ""),
                None => format!("({}, {})", p, g.display_var("x")),
            };
            out.push(spec);
        }
        Ok(out)
    }

    /// Smallest element (by coordinate size) whose norm is ±p^f and which lies in this prime.
    fn search_generator(&self) -> Option<Elem> {
        let dim = self.ring.ext_dim();
        let target = self.norm();
        for bound in 1..=3i64 {
            let mut candidates: Vec<Vec<i64>> = vec![vec![]];
            for _ in 0..dim {
                candidates = candidates
                    .into_iter()
                    .flat_map(|v| {
                        (-bound..=bound).map(move |c| {
                            let mut w = v.clone();
                            w.push(c);
                            w
                        })
                    })
                    .collect();
            }
            candidates.retain(|v| v.iter().map(|c| c.abs()).max() == Some(bound));
            candidates.sort_by_key(|v| {
                let l1: i64 = v.iter().map(|c| c.abs()).sum();
                let negs = v.iter().filter(|&&c| c < 0).count();
                let nz = v.iter().filter(|&&c| c != 0).count();
                (l1, nz, negs, v.iter().map(|c| -c).collect::<Vec<_>>())
            });
            for v in candidates {
                let base = Ring::integers();
                let e = self
                    .ring
                    .from_coords(v.iter().map(|&c| base.from_i64(c)).collect());
                let n = self.ring.as_integer(&self.ring.norm(&e)).unwrap();
                if n.abs() == target && self.residue_field.is_zero(&self.reduce(&e).unwrap()) {
                    return Some(e);
                }
            }
        }
        None
    }

    /// The prime generated by `g`, which must have norm ±|residue field|.
    pub fn from_generator(ring: &Ring, g: &Elem) -> Result<PrimeSpec> {
        let unknown = || ArithError::UnknownPrime(ring.display(g), ring.to_string());
        let n = ring.as_integer(&ring.norm(g)).ok_or_else(unknown)?.abs();
        let divisors = super::integer::prime_divisors(&n);
        if divisors.len() != 1 {
            return Err(unknown());
        }
        let p = divisors[0];
        for mut spec in PrimeSpec::primes_above(ring, p)? {
            if spec.norm() == n && spec.residue_field.is_zero(&spec.reduce(g)?) {
                spec.generator = Some(g.clone());
                spec.label = ring.display(g).replace(' ', "");
                return Ok(spec);
            }
        }
        Err(unknown())
    }

    /// Residue map on ring elements.
    pub fn reduce(&self, a: &Elem) -> Result<Elem> {
        let k = &self.residue_field;
        match &self.root {
            None => {
                let n = self.ring.as_integer(a).ok_or_else(|| self.mismatch())?;
                Ok(k.from_bigint(&n))
            }
            Some(root) => {
                let (base, _, _) = self.ring.extension_parts().unwrap();
                let coords = match a {
                    Elem::Ext(v) => v,
                    _ => return Err(self.mismatch()),
                };
                let mut acc = k.zero();
                for c in coords.iter().rev() {
                    let n = base.as_integer(c).ok_or_else(|| self.mismatch())?;
                    acc = k.add(&k.mul(&acc, root), &k.from_bigint(&n));
                }
                Ok(acc)
            }
        }
    }

    /// Coefficient-wise residue map on polynomials.
    pub fn reduce_poly(&self, f: &Poly) -> Result<Poly> {
        if *f.ring() != self.ring {
            return Err(self.mismatch());
        }
        let v = f
            .coeffs()
            .iter()
            .map(|c| self.reduce(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_elems(self.residue_field.clone(), v))
    }

    /// p-adic-style divisibility test: does the prime divide this nonzero element?
    pub fn divides(&self, a: &Elem) -> bool {
        self.reduce(a)
            .map(|r| self.residue_field.is_zero(&r))
            .unwrap_or(false)
    }

    fn mismatch(&self) -> ArithError {
        ArithError::UnknownPrime(self.label.clone(), self.ring.to_string())
    }

    /// Sort key: (norm, label).
    pub fn sort_key(&self) -> (u128, String) {
        (
            self.norm().to_u128().unwrap_or(u128::MAX),
            self.label.clone(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_prime_over_two() {
        let g = Ring::gaussian();
        let ps = PrimeSpec::primes_above(&g, 2).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].label(), "1+i");
        assert_eq!(ps[0].residue_field(), &Ring::prime_field(2));
        // 8t − 1 + 2i ↦ 1
        let z = Ring::integers();
        let c = g.from_coords(vec![z.from_i64(-1), z.from_i64(2)]);
        let f = Poly::from_elems(g.clone(), vec![c, g.from_i64(8)]);
        assert_eq!(
            ps[0].reduce_poly(&f).unwrap(),
            Poly::one(&Ring::prime_field(2))
        );
    }

    #[test]
    fn split_and_inert_gaussian_primes() {
        let g = Ring::gaussian();
        assert_eq!(PrimeSpec::primes_above(&g, 5).unwrap().len(), 2);
        let three = PrimeSpec::primes_above(&g, 3).unwrap();
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].residue_degree(), 2);
        assert_eq!(three[0].label(), "3");
    }

    #[test]
    fn quartic_primes_over_two_and_three() {
        let q = Ring::quartic();
        let two = PrimeSpec::primes_above(&q, 2).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].label(), "1+w");
        let three = PrimeSpec::primes_above(&q, 3).unwrap();
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].label(), "w");
        // −312√3 = −312 w² ↦ 0 at (1 + w)
        let w = q.generator().unwrap();
        let e = q.mul(&q.from_i64(-312), &q.mul(&w, &w));
        assert!(two[0].divides(&e));
    }

    #[test]
    fn prime_from_generator() {
        let g = Ring::gaussian();
        let i = g.generator().unwrap();
        let one_plus_i = g.add(&g.one(), &i);
        let p = PrimeSpec::from_generator(&g, &one_plus_i).unwrap();
        assert_eq!(p.characteristic(), 2);
        // 2 = −i(1+i)² is not a prime generator
        assert!(PrimeSpec::from_generator(&g, &g.from_i64(2)).is_err());
        assert!(PrimeSpec::from_generator(&g, &g.from_i64(3)).is_ok());
    }

    #[test]
    fn zero_reduces_to_zero() {
        let p = PrimeSpec::rational(7);
        assert_eq!(p.reduce(&Ring::integers().zero()).unwrap(), Elem::Mod(0));
    }
}
