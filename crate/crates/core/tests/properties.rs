use extremal::arith::sqfree::squarefree_decompose;
use extremal::arith::{factor_gf, Elem, Poly, Ring};
use extremal::cli::{parse_model, render_model_file};
use extremal::fibers::{fiber_configuration, local_data, tate_local, FiberError, Place};
use extremal::weierstrass::WEIGHTS;
use extremal::WeierstrassModel;
use proptest::prelude::*;

#[derive(Clone, Copy, Debug)]
enum R {
    Z,
    Gauss,
    Quartic,
    F2,
    F3,
    F5,
    F9,
}

impl R {
    fn ring(self) -> Ring {
        match self {
            R::Z => Ring::integers(),
            R::Gauss => Ring::gaussian(),
            R::Quartic => Ring::quartic(),
            R::F2 => Ring::prime_field(2),
            R::F3 => Ring::prime_field(3),
            R::F5 => Ring::prime_field(5),
            R::F9 => Ring::galois_field(3, 2),
        }
    }

    fn dim(self) -> usize {
        match self {
            R::Gauss | R::F9 => 2,
            R::Quartic => 4,
            _ => 1,
        }
    }
}

fn elem(ring: &Ring, coords: &[i64]) -> Elem {
    let base = match ring.extension_parts() {
        Some((b, _, _)) => b.clone(),
        None => return ring.from_i64(coords[0]),
    };
    ring.from_coords(coords.iter().map(|&c| base.from_i64(c)).collect())
}

/// Coordinates for a polynomial of degree ≤ d over a ring of dimension `dim`.
fn poly_coords(d: usize, dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, dim), d + 1)
}

fn poly(ring: &Ring, c: &[Vec<i64>]) -> Poly {
    Poly::from_elems(ring.clone(), c.iter().map(|v| elem(ring, v)).collect())
}

fn model_strategy(r: R) -> impl Strategy<Value = WeierstrassModel> {
    let dim = r.dim();
    let parts: Vec<_> = WEIGHTS
        .iter()
        .map(|&w| poly_coords(w as usize, dim))
        .collect();
    parts.prop_map(move |cs| {
        let ring = r.ring();
        let a: Vec<Poly> = cs.iter().map(|c| poly(&ring, c)).collect();
        WeierstrassModel::from_array(a.try_into().unwrap()).unwrap()
    })
}

fn rsq_strategy(r: R) -> impl Strategy<Value = (Vec<Vec<i64>>, Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    (
        poly_coords(2, r.dim()),
        poly_coords(1, r.dim()),
        poly_coords(3, r.dim()),
    )
}

fn check_identities(m: &WeierstrassModel) -> Result<(), TestCaseError> {
    let q = m.tate_quantities();
    let c4_cubed = q.c4.pow(3);
    prop_assert_eq!(q.delta.scale_int(1728), &c4_cubed - &q.c6.pow(2));
    prop_assert_eq!(q.b8.scale_int(4), &(&q.b2 * &q.b6) - &(&q.b4 * &q.b4));
    Ok(())
}

fn check_rsq(m: &WeierstrassModel, r: &Poly, s: &Poly, qq: &Poly) -> Result<(), TestCaseError> {
    let m2 = m.rsq_substitute(r, s, qq);
    let (a, b) = (m.tate_quantities(), m2.tate_quantities());
    prop_assert_eq!(&a.c4, &b.c4);
    prop_assert_eq!(&a.c6, &b.c6);
    prop_assert_eq!(&a.delta, &b.delta);
    Ok(())
}

fn check_scaling(m: &WeierstrassModel, u: &Elem) -> Result<(), TestCaseError> {
    let ring = m.ring();
    if ring.is_zero(u) {
        return Ok(());
    }
    let big: Vec<Poly> = m
        .coeffs()
        .iter()
        .zip(WEIGHTS)
        .map(|(a, w)| a.scale(&ring.pow(u, w as u64)))
        .collect();
    let big = WeierstrassModel::from_array(big.try_into().unwrap()).unwrap();
    prop_assert_eq!(big.discriminant(), m.discriminant().scale(&ring.pow(u, 12)));
    prop_assert_eq!(&big.u_substitute(u).unwrap(), m);
    if !m.is_degenerate() {
        prop_assert!(big.same_j(m).unwrap());
    }
    Ok(())
}

macro_rules! identity_suite {
    ($name:ident, $r:expr) => {
        proptest! {
            #![proptest_config(ProptestConfig::with_cases(256))]
            #[test]
            fn $name(m in model_strategy($r), (r, s, q) in rsq_strategy($r), u in prop::collection::vec(-3i64..=3, $r.dim())) {
                let ring = $r.ring();
                check_identities(&m)?;
                check_rsq(&m, &poly(&ring, &r), &poly(&ring, &s), &poly(&ring, &q))?;
                check_scaling(&m, &elem(&ring, &u))?;
            }
        }
    };
}

identity_suite!(identities_over_z, R::Z);
identity_suite!(identities_over_gaussian, R::Gauss);
identity_suite!(identities_over_quartic, R::Quartic);
identity_suite!(identities_over_f2, R::F2);
identity_suite!(identities_over_f3, R::F3);
identity_suite!(identities_over_f5, R::F5);
identity_suite!(identities_over_f9, R::F9);

fn tate_agrees_with_tame(m: &WeierstrassModel) -> Result<(), TestCaseError> {
    let tame = match local_data(m) {
        Ok(d) => d,
        Err(FiberError::Degenerate | FiberError::NotRational) => return Ok(()),
        Err(e) => return Err(TestCaseError::fail(e.to_string())),
    };
    for d in tame {
        let t = tate_local(m, &d.place).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(t.kodaira, d.kodaira, "at {}", d.place);
        prop_assert_eq!(t.minimal_input, d.minimal_input, "at {}", d.place);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tate_matches_tame_over_f5(m in model_strategy(R::F5)) {
        tate_agrees_with_tame(&m)?;
    }

    #[test]
    fn tate_matches_tame_over_f7(cs in prop::collection::vec(poly_coords(6, 1), 5)) {
        let ring = Ring::prime_field(7);
        let a: Vec<Poly> = cs.iter().zip(WEIGHTS).map(|(c, w)| poly(&ring, &c[..=w as usize])).collect();
        tate_agrees_with_tame(&WeierstrassModel::from_array(a.try_into().unwrap()).unwrap())?;
    }

    #[test]
    fn configuration_is_stable_under_base_extension(m in model_strategy(R::F3)) {
        let big = Ring::galois_field(3, 2);
        let lifted = m.map(&big, |c| big.from_coords(vec![c.clone()]));
        let small = fiber_configuration(&m).map(|c| c.types());
        let large = fiber_configuration(&lifted).map(|c| c.types());
        prop_assert_eq!(small, large);
    }

    #[test]
    fn places_partition_the_discriminant(m in model_strategy(R::F2)) {
        if let Ok(data) = local_data(&m) {
            if data.iter().all(|d| d.minimal_input) {
                let total: u32 = data.iter().map(|d| d.v_delta * d.count() as u32).sum();
                prop_assert_eq!(total, 12);
                for d in &data {
                    if let Place::Finite(p) = &d.place {
                        prop_assert!(p.divides(&m.discriminant()));
                    }
                }
            }
        }
    }

    #[test]
    fn reduced_j_agrees_with_cross_multiplication(m in model_strategy(R::Gauss), (r, s, q) in rsq_strategy(R::Gauss)) {
        prop_assume!(!m.is_degenerate());
        let ring = R::Gauss.ring();
        let m2 = m.rsq_substitute(&poly(&ring, &r), &poly(&ring, &s), &poly(&ring, &q));
        let (j, j2) = (m.j_invariant().unwrap(), m2.j_invariant().unwrap());
        prop_assert_eq!(&j, &j2);
        prop_assert_eq!(&j.numerator * &m.discriminant().to_fraction_field(),
            &j.denominator * &m.tate_quantities().c4.pow(3).to_fraction_field());
    }

    #[test]
    fn model_files_round_trip(m in model_strategy(R::Quartic)) {
        let text = render_model_file(&m, Some("random"), None);
        prop_assert_eq!(parse_model(&text).unwrap(), m);
    }

    #[test]
    fn model_files_round_trip_over_gf9(m in model_strategy(R::F9)) {
        let text = render_model_file(&m, None, None);
        prop_assert_eq!(parse_model(&text).unwrap(), m);
    }

    #[test]
    fn factorization_reconstructs(c in poly_coords(8, 1)) {
        let f = poly(&Ring::prime_field(3), &c);
        prop_assume!(!f.is_zero() && !f.is_constant());
        let mut prod = Poly::constant(f.ring(), f.lead().clone());
        for (p, e) in factor_gf(&f).unwrap() {
            prod = &prod * &p.pow(e);
        }
        prop_assert_eq!(prod, f.clone());
        let sq = squarefree_decompose(&f).unwrap();
        prop_assert_eq!(sq.reconstruct(f.ring()), f);
    }
}
