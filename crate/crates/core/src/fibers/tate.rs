//! Tate's algorithm at a place of 𝔽_q[t].
//!
//! The residue field k = 𝔽_q[t]/(π) is perfect, so every multiple root that
//! the algorithm asks about is already k-rational and can be read off a
//! squarefree decomposition; no field extension is ever needed and the
//! reported type is the geometric one.

use crate::arith::sqfree::squarefree_decompose;
use crate::arith::{Elem, Poly, Ring};
use crate::weierstrass::{WeierstrassModel, WEIGHTS};

use super::{FiberError, KodairaType, LocalData, Place, Result};

struct Local {
    pi: Poly,
    residue: Ring,
    /// Root of π when deg π = 1.
    root: Option<Elem>,
}

impl Local {
    fn new(pi: &Poly) -> Local {
        let pi = pi.monic().expect("place over a field");
        if pi.degree() == Some(1) {
            let k = pi.ring().clone();
            let root = k.neg(&pi.coeff(0));
            Local {
                pi,
                residue: k,
                root: Some(root),
            }
        } else {
            let residue = Ring::extension(&pi, "x");
            Local {
                pi,
                residue,
                root: None,
            }
        }
    }

    fn val(&self, f: &Poly) -> Option<u32> {
        f.valuation(&self.pi)
    }

    fn red(&self, f: &Poly) -> Elem {
        match &self.root {
            Some(r) => f.eval(r),
            None => self
                .residue
                .from_coords(f.rem(&self.pi).unwrap().into_coeffs()),
        }
    }

    fn lift(&self, a: &Elem) -> Poly {
        let k = self.pi.ring();
        match &self.root {
            Some(_) => Poly::constant(k, a.clone()),
            None => Poly::from_elems(k.clone(), self.residue.coords(a)),
        }
    }

    fn pi_pow(&self, k: u32) -> Poly {
        self.pi.pow(k)
    }

    /// red(f / π^k); f must be divisible.
    fn red_div(&self, f: &Poly, k: u32) -> Result<Elem> {
        Ok(self.red(&f.exact_div(&self.pi_pow(k))?))
    }

    fn sqrt(&self, a: &Elem) -> Elem {
        self.residue.pth_root(a)
    }
}

fn below(v: Option<u32>, k: u32) -> bool {
    v.is_some_and(|v| v < k)
}

/// Double root of a·X² + b·X + c over k, or `None` if the roots are distinct.
fn double_root(k: &Ring, a: &Elem, b: &Elem, c: &Elem) -> Option<Elem> {
    if k.characteristic() == 2 {
        if !k.is_zero(b) {
            return None;
        }
        let ainv = k.inv(a)?;
        Some(k.pth_root(&k.mul(c, &ainv)))
    } else {
        let disc = k.sub(&k.mul(b, b), &k.mul(&k.from_i64(4), &k.mul(a, c)));
        if !k.is_zero(&disc) {
            return None;
        }
        let two_a = k.mul(&k.from_i64(2), a);
        Some(k.neg(&k.mul(b, &k.inv(&two_a)?)))
    }
}

/// Multiple root of a monic cubic over a perfect field, with its multiplicity.
fn multiple_root(cubic: &Poly) -> Result<Option<(Elem, u32)>> {
    let sq = squarefree_decompose(cubic)?;
    let k = cubic.ring();
    Ok(sq
        .parts
        .iter()
        .find(|(_, e)| *e >= 2)
        .map(|(g, e)| (k.neg(&g.coeff(0)), *e)))
}

fn singular_point(m: &WeierstrassModel, loc: &Local) -> Result<(Elem, Elem)> {
    let k = &loc.residue;
    let red: Vec<Elem> = m.coeffs().iter().map(|p| loc.red(p)).collect();
    let (a1, a2, a3, a4, a6) = (&red[0], &red[1], &red[2], &red[3], &red[4]);
    if k.characteristic() == 2 {
        if k.is_zero(a1) {
            let x0 = loc.sqrt(a4);
            let x2 = k.mul(&x0, &x0);
            let rhs = k.add(
                &k.add(&k.mul(&x2, &x0), &k.mul(a2, &x2)),
                &k.add(&k.mul(a4, &x0), a6),
            );
            Ok((x0.clone(), loc.sqrt(&rhs)))
        } else {
            let inv = k.inv(a1).unwrap();
            let x0 = k.mul(a3, &inv);
            let y0 = k.mul(&k.add(&k.mul(&x0, &x0), a4), &inv);
            Ok((x0, y0))
        }
    } else {
        let q = m.tate_quantities();
        let f = Poly::from_elems(
            k.clone(),
            vec![
                loc.red(&q.b6),
                k.mul(&k.from_i64(2), &loc.red(&q.b4)),
                loc.red(&q.b2),
                k.from_i64(4),
            ],
        );
        let f = f.monic()?;
        let (x0, _) =
            multiple_root(&f)?.ok_or_else(|| internal("no singular point on a singular fiber"))?;
        let half = k.inv(&k.from_i64(2)).unwrap();
        let y0 = k.neg(&k.mul(&k.add(&k.mul(a1, &x0), a3), &half));
        Ok((x0, y0))
    }
}

fn internal(msg: &str) -> FiberError {
    FiberError::Unsupported(format!("internal: {}", msg))
}

fn finish(
    m: &WeierstrassModel,
    loc: &Local,
    place: &Place,
    kodaira: KodairaType,
    minimal: bool,
) -> LocalData {
    let q = m.tate_quantities();
    LocalData {
        place: place.clone(),
        kodaira,
        v_delta: loc.val(&q.delta).unwrap_or(u32::MAX),
        v_c4: loc.val(&q.c4),
        v_c6: loc.val(&q.c6),
        minimal_input: minimal,
    }
}

/// Tate's algorithm for a model over 𝔽_q[t] at a finite place or at ∞.
pub fn tate_local(model: &WeierstrassModel, place: &Place) -> Result<LocalData> {
    let field = model.ring();
    if !(field.is_field() && field.is_finite()) {
        return Err(FiberError::Unsupported(field.to_string()));
    }
    let (start, pi) = match place {
        Place::Finite(pi) | Place::Cluster(pi) => (model.clone(), pi.clone()),
        Place::Infinity => (model.infinity_chart()?, Poly::var(field)),
    };
    if start.is_degenerate() {
        return Err(FiberError::Degenerate);
    }
    let loc = Local::new(&pi);
    let k = loc.residue.clone();
    let char2 = k.characteristic() == 2;
    let zero = Poly::zero(field);
    let mut m = start;
    let mut minimal = true;
    loop {
        let vd = loc.val(&m.discriminant()).ok_or(FiberError::Degenerate)?;
        if vd == 0 {
            return Ok(finish(&m, &loc, place, KodairaType::I(0), minimal));
        }
        let (x0, y0) = singular_point(&m, &loc)?;
        m = m.rsq_substitute(&loc.lift(&x0), &zero, &loc.lift(&y0));
        let q = m.tate_quantities();
        if loc.val(&q.b2) == Some(0) {
            return Ok(finish(&m, &loc, place, KodairaType::I(vd), minimal));
        }
        if below(loc.val(m.a6()), 2) {
            return Ok(finish(&m, &loc, place, KodairaType::II, minimal));
        }
        if below(loc.val(&q.b8), 3) {
            return Ok(finish(&m, &loc, place, KodairaType::III, minimal));
        }
        if below(loc.val(&q.b6), 3) {
            return Ok(finish(&m, &loc, place, KodairaType::IV, minimal));
        }
        // π | a1, a2; π² | a3, a4; π³ | a6
        let (s, qq) = if char2 {
            let s = loc.lift(&loc.sqrt(&loc.red(m.a2())));
            let q = &loc.pi * &loc.lift(&loc.sqrt(&loc.red_div(m.a6(), 2)?));
            (s, q)
        } else {
            let half = field.inv(&field.from_i64(2)).unwrap();
            (
                m.a1().scale(&field.neg(&half)),
                m.a3().scale(&field.neg(&half)),
            )
        };
        m = m.rsq_substitute(&zero, &s, &qq);
        let p_cubic = Poly::from_elems(
            k.clone(),
            vec![
                loc.red_div(m.a6(), 3)?,
                loc.red_div(m.a4(), 2)?,
                loc.red_div(m.a2(), 1)?,
                k.one(),
            ],
        );
        let root = multiple_root(&p_cubic)?;
        match root {
            None => return Ok(finish(&m, &loc, place, KodairaType::IStar(0), minimal)),
            Some((alpha, 2)) => {
                let r = &loc.pi * &loc.lift(&alpha);
                m = m.rsq_substitute(&r, &zero, &zero);
                let n = istar_chain(&mut m, &loc, vd)?;
                return Ok(finish(&m, &loc, place, KodairaType::IStar(n), minimal));
            }
            Some((alpha, _)) => {
                let r = &loc.pi * &loc.lift(&alpha);
                m = m.rsq_substitute(&r, &zero, &zero);
                let b = loc.red_div(m.a3(), 2)?;
                let c = k.neg(&loc.red_div(m.a6(), 4)?);
                match double_root(&k, &k.one(), &b, &c) {
                    None => return Ok(finish(&m, &loc, place, KodairaType::IVStar, minimal)),
                    Some(beta) => {
                        let q = &loc.pi_pow(2) * &loc.lift(&beta);
                        m = m.rsq_substitute(&zero, &zero, &q);
                    }
                }
                if below(loc.val(m.a4()), 4) {
                    return Ok(finish(&m, &loc, place, KodairaType::IIIStar, minimal));
                }
                if below(loc.val(m.a6()), 6) {
                    return Ok(finish(&m, &loc, place, KodairaType::IIStar, minimal));
                }
                let mut a = m.coeffs().clone();
                for (i, w) in WEIGHTS.iter().enumerate() {
                    a[i] = a[i].exact_div(&loc.pi_pow(*w))?;
                }
                m = WeierstrassModel::from_array(a)?;
                minimal = false;
            }
        }
    }
}

/// The I*_n subprocedure; on entry P(T) has a double root at 0.
fn istar_chain(m: &mut WeierstrassModel, loc: &Local, vd: u32) -> Result<u32> {
    let k = &loc.residue;
    let zero = Poly::zero(m.ring());
    let mut n = 1;
    while n <= vd {
        if n % 2 == 1 {
            let e = (n + 3) / 2;
            let b = loc.red_div(m.a3(), e)?;
            let c = k.neg(&loc.red_div(m.a6(), 2 * e)?);
            match double_root(k, &k.one(), &b, &c) {
                None => return Ok(n),
                Some(beta) => {
                    let q = &loc.pi_pow(e) * &loc.lift(&beta);
                    *m = m.rsq_substitute(&zero, &zero, &q);
                }
            }
        } else {
            let e = (n + 2) / 2;
            let a = loc.red_div(m.a2(), 1)?;
            let b = loc.red_div(m.a4(), e + 1)?;
            let c = loc.red_div(m.a6(), 2 * e + 1)?;
            match double_root(k, &a, &b, &c) {
                None => return Ok(n),
                Some(alpha) => {
                    let r = &loc.pi_pow(e) * &loc.lift(&alpha);
                    *m = m.rsq_substitute(&r, &zero, &zero);
                }
            }
        }
        n += 1;
    }
    Err(internal("I*_n chain did not terminate"))
}
