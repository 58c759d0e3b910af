use crate::arith::factor::factor_gf;
use crate::arith::sqfree::squarefree_decompose;
use crate::arith::Poly;
use crate::weierstrass::{TateQuantities, WeierstrassModel};

use super::{classify_tame, tate_local, FiberError, LocalData, Place, Result};

fn prepare(m: &WeierstrassModel) -> Result<WeierstrassModel> {
    m.check_degree_bound()?;
    let m = if m.ring().is_field() {
        m.clone()
    } else {
        m.to_fraction_field()
    };
    if m.is_degenerate() {
        return Err(FiberError::Degenerate);
    }
    if m.is_constant() {
        return Err(FiberError::NotRational);
    }
    Ok(m)
}

type Cluster = (Poly, u32, Option<u32>, Option<u32>);

/// Split each squarefree part by the squarefree layers of `f`.
fn refine(
    pieces: Vec<(Poly, Vec<Option<u32>>)>,
    f: &Poly,
) -> Result<Vec<(Poly, Vec<Option<u32>>)>> {
    if f.is_zero() {
        return Ok(pieces
            .into_iter()
            .map(|(p, mut v)| {
                v.push(None);
                (p, v)
            })
            .collect());
    }
    let layers = squarefree_decompose(f)?.parts;
    let mut out = Vec::new();
    for (p, v) in pieces {
        let mut rest = p;
        for (layer, e) in &layers {
            let g = rest.gcd(layer)?;
            if g.degree().unwrap_or(0) > 0 {
                rest = rest.exact_div(&g)?;
                let mut w = v.clone();
                w.push(Some(*e));
                out.push((g, w));
            }
        }
        if rest.degree().unwrap_or(0) > 0 {
            let mut w = v;
            w.push(Some(0));
            out.push((rest.monic()?, w));
        }
    }
    Ok(out)
}

/// Valuation-homogeneous clusters of roots of Δ over a field of characteristic 0.
fn clusters(q: &TateQuantities) -> Result<Vec<Cluster>> {
    let parts = squarefree_decompose(&q.delta)?.parts;
    let pieces = parts.into_iter().map(|(p, e)| (p, vec![Some(e)])).collect();
    let pieces = refine(refine(pieces, &q.c4)?, &q.c6)?;
    Ok(pieces
        .into_iter()
        .map(|(p, v)| (p, v[0].unwrap(), v[1], v[2]))
        .collect())
}

fn infinity_valuation(p: &Poly, weight: u32) -> Option<u32> {
    p.degree().map(|d| weight - d as u32)
}

/// Places with v(Δ) > 0, including ∞, with the raw valuation of Δ.
pub fn places_of_discriminant(m: &WeierstrassModel) -> Result<Vec<(Place, u32)>> {
    let m = prepare(m)?;
    let q = m.tate_quantities();
    let mut out: Vec<(Place, u32)> = if m.ring().characteristic() == 0 {
        clusters(&q)?
            .into_iter()
            .map(|(p, e, _, _)| (Place::Cluster(p), e))
            .collect()
    } else {
        factor_gf(&q.delta)?
            .into_iter()
            .map(|(p, e)| (Place::Finite(p), e))
            .collect()
    };
    let v_inf = infinity_valuation(&q.delta, 12).unwrap();
    if v_inf > 0 {
        out.push((Place::Infinity, v_inf));
    }
    Ok(out)
}

fn tame(place: Place, mut vd: u32, mut c4: Option<u32>, mut c6: Option<u32>) -> Result<LocalData> {
    let mut minimal = true;
    loop {
        match classify_tame(c4, c6, vd) {
            Ok(kodaira) => {
                return Ok(LocalData {
                    place,
                    kodaira,
                    v_delta: vd,
                    v_c4: c4,
                    v_c6: c6,
                    minimal_input: minimal,
                })
            }
            Err(FiberError::NonMinimal) => {
                vd -= 12;
                c4 = c4.map(|v| v - 4);
                c6 = c6.map(|v| v - 6);
                minimal = false;
            }
            Err(e) => return Err(e),
        }
    }
}

/// Local data at every place with v(Δ) > 0. Characteristics 2 and 3 go
/// through Tate's algorithm, all others through the valuation table.
pub fn local_data(m: &WeierstrassModel) -> Result<Vec<LocalData>> {
    let m = prepare(m)?;
    let q = m.tate_quantities();
    let p = m.ring().characteristic();
    let mut out = Vec::new();
    if p == 0 {
        for (poly, vd, c4, c6) in clusters(&q)? {
            out.push(tame(Place::Cluster(poly), vd, c4, c6)?);
        }
    } else {
        for (pi, vd) in factor_gf(&q.delta)? {
            let place = Place::Finite(pi);
            if p == 2 || p == 3 {
                out.push(tate_local(&m, &place)?);
            } else {
                let Place::Finite(pi) = &place else {
                    unreachable!()
                };
                let (c4, c6) = (q.c4.valuation(pi), q.c6.valuation(pi));
                out.push(tame(place, vd, c4, c6)?);
            }
        }
    }
    let v_inf = infinity_valuation(&q.delta, 12).unwrap();
    if v_inf > 0 {
        if p == 2 || p == 3 {
            out.push(tate_local(&m, &Place::Infinity)?);
        } else {
            let c4 = infinity_valuation(&q.c4, 4);
            let c6 = infinity_valuation(&q.c6, 6);
            out.push(tame(Place::Infinity, v_inf, c4, c6)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Ring;
    use crate::fibers::{fiber_configuration, is_minimal, KodairaType::*};

    #[test]
    fn x3333_clusters() {
        let z = Ring::integers();
        let m = WeierstrassModel::from_array([
            Poly::from_ints(&z, &[0, 171]),
            Poly::from_ints(&z, &[16, 0, -7353]),
            Poly::from_ints(&z, &[-3]),
            Poly::from_ints(&z, &[76, 214, -528, -54, 594]),
            Poly::from_ints(&z, &[88, -304, -1682, -3, 3924, 648, -2700]),
        ])
        .unwrap();
        let places = places_of_discriminant(&m).unwrap();
        let degs: Vec<(usize, u32)> = places.iter().map(|(p, v)| (p.degree(), *v)).collect();
        assert_eq!(degs.iter().map(|d| d.0 as u32 * d.1).sum::<u32>(), 12);
        assert!(degs.iter().all(|d| d.1 == 3));
        assert!(places.iter().any(|(p, v)| p.is_infinity() && *v == 3));
        let c = fiber_configuration(&m).unwrap();
        assert_eq!(c.types(), vec![I(3); 4]);
        assert_eq!(c.mw_order, Some(9));
    }

    #[test]
    fn x5511_mod_five_places() {
        let f5 = Ring::prime_field(5);
        let m = WeierstrassModel::from_ints(&f5, [&[1, 5], &[-3, -4, -6], &[1], &[2], &[-1, -1]]);
        let places = places_of_discriminant(&m).unwrap();
        let t = Poly::var(&f5);
        assert!(places.contains(&(Place::Finite(t), 5)));
        assert!(places.contains(&(Place::Finite(Poly::from_ints(&f5, &[2, 1])), 2)));
        assert!(places.contains(&(Place::Infinity, 5)));
        assert_eq!(
            fiber_configuration(&m).unwrap().types(),
            vec![I(5), I(5), II]
        );
    }

    #[test]
    fn constant_and_non_minimal_models() {
        let z = Ring::integers();
        let constant = WeierstrassModel::from_ints(&z, [&[], &[], &[], &[], &[1]]);
        assert_eq!(
            places_of_discriminant(&constant),
            Err(FiberError::NotRational)
        );
        assert_eq!(is_minimal(&constant), Err(FiberError::NotRational));
        let sixth = WeierstrassModel::from_ints(&z, [&[], &[], &[], &[], &[0, 0, 0, 0, 0, 0, 1]]);
        let bad = is_minimal(&sixth).unwrap();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].degree(), 1);
        assert!(!bad[0].is_infinity());
        assert_eq!(fiber_configuration(&sixth), Err(FiberError::NotRational));
        let degenerate = WeierstrassModel::from_ints(&z, [&[], &[], &[], &[], &[]]);
        assert_eq!(
            places_of_discriminant(&degenerate),
            Err(FiberError::Degenerate)
        );
    }

    #[test]
    fn x9111_over_q_and_mod_two() {
        let z = Ring::integers();
        let m = WeierstrassModel::from_ints(&z, [&[0, 1], &[], &[-1], &[], &[]]);
        let c = fiber_configuration(&m).unwrap();
        assert_eq!(c.types(), vec![I(9), I(1), I(1), I(1)]);
        assert_eq!(c.at(&Place::Infinity), Some(I(9)));
        let f2 = Ring::prime_field(2);
        let m2 = WeierstrassModel::from_ints(&f2, [&[0, 1], &[], &[1], &[], &[]]);
        assert_eq!(
            fiber_configuration(&m2).unwrap().types(),
            vec![I(9), I(1), I(1), I(1)]
        );
    }
}
