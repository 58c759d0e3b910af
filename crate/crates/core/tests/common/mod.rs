#![allow(dead_code)]

use extremal::arith::{Elem, Poly, PrimeSpec, Ring};
use extremal::catalog::{x11_family, SmallCharReference};
use extremal::fibers::fiber_configuration;
use extremal::models::{check_prime, reduce_at_prime};
use extremal::{TwistSeed, WeierstrassModel};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Square roots of g in k[t] with degree ≤ `max_deg`, over a finite field of odd characteristic.
fn poly_sqrts(g: &Poly, max_deg: usize) -> Vec<Poly> {
    let k = g.ring();
    if g.is_zero() {
        return vec![Poly::zero(k)];
    }
    let d = g.degree().unwrap();
    if d % 2 == 1 || d / 2 > max_deg {
        return vec![];
    }
    let n = d / 2;
    let lead_roots: Vec<Elem> = k
        .elements()
        .into_iter()
        .filter(|x| k.mul(x, x) == *g.lead())
        .collect();
    let two = k.from_i64(2);
    let mut out = Vec::new();
    for r in lead_roots {
        let mut y = vec![k.zero(); n + 1];
        y[n] = r.clone();
        let inv = k.inv(&k.mul(&two, &r)).unwrap();
        for i in (0..n).rev() {
            // coefficient of t^(n+i) in y² is 2·y_n·y_i plus products of already known terms
            let mut acc = g.coeff(n + i);
            for j in (i + 1)..n {
                acc = k.sub(&acc, &k.mul(&y[j], &y[n + i - j]));
            }
            y[i] = k.mul(&acc, &inv);
        }
        let yp = Poly::from_elems(k.clone(), y);
        if &(&yp * &yp) == g {
            out.push(yp);
        }
    }
    out
}

/// Number of sections (x(t), y(t)) with deg x ≤ 2, deg y ≤ 3 over the finite
/// field of `m`, plus the zero section.
pub fn count_polynomial_sections(m: &WeierstrassModel) -> usize {
    let k = m.ring();
    assert!(k.characteristic() > 2);
    let elems = k.elements();
    let [a1, a2, a3, a4, a6] = m.coeffs().clone();
    let four = k.from_i64(4);
    let mut count = 1;
    for c0 in &elems {
        for c1 in &elems {
            for c2 in &elems {
                let x = Poly::from_elems(k.clone(), vec![c0.clone(), c1.clone(), c2.clone()]);
                let f = &(&(&(&(&x * &x) * &x) + &(&(&a2 * &x) * &x)) + &(&a4 * &x)) + &a6;
                let l = &(&a1 * &x) + &a3;
                let g = &f.scale(&four) + &(&l * &l);
                count += poly_sqrts(&g, 3).len();
            }
        }
    }
    count
}

/// Random nondegenerate integral seeds; `odd_only` forces g1 = g3 = 0.
pub fn seeds(n: usize, rng: &mut ChaCha8Rng, odd_only: bool) -> Vec<TwistSeed> {
    let z = Ring::integers();
    let mut out = Vec::new();
    while out.len() < n {
        let mut g: [i64; 5] = std::array::from_fn(|_| rng.gen_range(-6..=6));
        if odd_only {
            g[0] = 0;
            g[2] = 0;
        }
        if let Ok(s) = TwistSeed::from_ints(&z, g) {
            out.push(s);
        }
    }
    out
}

/// The reference equation the reduction of X_11(j) should match, and whether
/// j, configuration and good reduction all agree with it.
pub fn matches_reference(seed: &TwistSeed, p: u64) -> (SmallCharReference, bool) {
    let e = x11_family(seed);
    let prime = PrimeSpec::rational(p);
    let reduced = reduce_at_prime(&e.model, &prime).unwrap();
    let f = prime.residue_field();
    let j = reduced
        .j_invariant()
        .unwrap()
        .constant()
        .expect("constant j");
    let (reference, k) = match (p, f.is_zero(&j)) {
        (2, false) => (SmallCharReference::Char2I, f.inv(&j)),
        (2, true) => (SmallCharReference::Char2II, None),
        (3, false) => (SmallCharReference::Char3VI, f.inv(&j).map(|v| f.neg(&v))),
        (_, _) => (SmallCharReference::Char3VIBis, None),
    };
    let model = reference.model(f, k.as_ref()).unwrap();
    let jr = model.j_invariant().unwrap().constant();
    let same_j = jr == Some(j) && reference.j(f, k.as_ref()) == jr;
    let same_config = fiber_configuration(&model).unwrap().types()
        == fiber_configuration(&reduced).unwrap().types();
    let good = check_prime(&e.model, &prime).unwrap().verdict.is_good();
    (reference, same_j && same_config && good)
}
