mod common;

use common::{matches_reference, seeds};
use extremal::arith::PrimeSpec;
use extremal::catalog::x11_family;
use extremal::fibers::fiber_configuration;
use extremal::TwistSeed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn twist_discriminant_and_j() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for s in seeds(25, &mut rng, false) {
        let e = x11_family(&s);
        assert_eq!(e.model.discriminant(), e.expected_delta, "{:?}", s.coeffs());
        let j = e.model.j_invariant().unwrap();
        assert_eq!(j.constant(), Some(e.expected_j.clone()), "{:?}", s.coeffs());
        let c = fiber_configuration(&e.model).unwrap();
        assert_eq!(c.to_string(), "{I*0, I*0}");
    }
}

#[test]
fn reductions_match_reference_equations() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut seen = std::collections::BTreeSet::new();
    for (p, odd_only) in [(2u64, false), (3, true)] {
        let prime = PrimeSpec::rational(p);
        let good: Vec<TwistSeed> = seeds(400, &mut rng, odd_only)
            .into_iter()
            .filter(|s| !prime.divides(s.delta()))
            .take(25)
            .collect();
        assert_eq!(good.len(), 25);
        for s in &good {
            let (r, ok) = matches_reference(s, p);
            assert!(ok, "{:?} mod {} vs {}", s.coeffs(), p, r.label());
            seen.insert(r.label());
        }
    }
    assert_eq!(seen.len(), 4, "{:?}", seen);
}
