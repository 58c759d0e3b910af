//! Rational-integer helpers: primality and factorization of the (smooth)
//! resultants and discriminants that arise when listing critical primes.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &p in &SMALL_PRIMES {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for &a in &SMALL_PRIMES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigUint, c: u64) -> Option<BigUint> {
    let f = |x: &BigUint| (x * x + c) % n;
    let mut y = BigUint::from(2u32);
    let mut r = 1u64;
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    let m = 64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += m;
        }
        r *= 2;
        if r > 1 << 22 {
            return None;
        }
    }
    if g == *n {
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (g != *n).then_some(g)
}

fn split(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return;
    }
    for c in 1..64 {
        if let Some(d) = pollard_brent(&n, c) {
            let other = &n / &d;
            split(d, out);
            split(other, out);
            return;
        }
    }
    panic!("failed to factor {}", n);
}

/// Distinct prime divisors of a nonzero integer, ascending.
pub fn prime_divisors(n: &BigInt) -> Vec<u64> {
    assert!(!n.is_zero(), "prime divisors of zero");
    let mut m = n.magnitude().clone();
    let mut out = Vec::new();
    let mut p = 2u64;
    while p < 10_000 {
        let bp = BigUint::from(p);
        if (&m % &bp).is_zero() {
            out.push(BigUint::from(p));
            while (&m % &bp).is_zero() {
                m /= &bp;
            }
        }
        if m.is_one() {
            break;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    split(m, &mut out);
    let mut v: Vec<u64> = out
        .into_iter()
        .map(|b| b.to_u64().expect("prime divisor exceeds 64 bits"))
        .collect();
    v.sort_unstable();
    v.dedup();
    v
}

pub fn is_prime(n: u64) -> bool {
    is_probable_prime(&BigUint::from(n))
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| is_prime(k)).collect()
}
