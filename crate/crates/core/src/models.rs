//! Integral models at primes: reduction, good-reduction verdicts, comparison
//! with the generic configuration, and the brute-force I* ansatz search.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::arith::integer::prime_divisors;
use crate::arith::sqfree::squarefree_decompose;
use crate::arith::{ArithError, Elem, Poly, PrimeSpec, Ring};
use crate::fibers::{
    classify_tame, fiber_configuration, format_types, local_data, FiberConfiguration, FiberError,
    KodairaType, Place,
};
use crate::weierstrass::WeierstrassModel;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("bad reduction at {prime}: {reason}")]
    BadReduction { prime: String, reason: String },
    #[error("generic fiber: {0}")]
    Generic(FiberError),
    #[error("no Mordell-Weil order at {0}: configuration is not extremal")]
    NotExtremal(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

pub type Result<T> = std::result::Result<T, ReductionError>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Good,
    Bad(String),
}

impl Verdict {
    pub fn is_good(&self) -> bool {
        *self == Verdict::Good
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Good => write!(f, "good"),
            Verdict::Bad(r) => write!(f, "bad ({})", r),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReductionReport {
    pub prime: PrimeSpec,
    pub delta_nonzero: bool,
    pub minimal: bool,
    pub configuration: Option<FiberConfiguration>,
    pub extremal: bool,
    pub mw_order: Option<u64>,
    pub verdict: Verdict,
}

/// Coefficient-wise residue map.
pub fn reduce_at_prime(m: &WeierstrassModel, p: &PrimeSpec) -> Result<WeierstrassModel> {
    let a = m.coeffs().clone().map(|c| p.reduce_poly(&c));
    let [a1, a2, a3, a4, a6] = a;
    Ok(WeierstrassModel::from_array([a1?, a2?, a3?, a4?, a6?]).expect("residues share a ring"))
}

/// Reduce and classify at one prime.
pub fn check_prime(m: &WeierstrassModel, p: &PrimeSpec) -> Result<ReductionReport> {
    let reduced = reduce_at_prime(m, p)?;
    let mut report = ReductionReport {
        prime: p.clone(),
        delta_nonzero: !reduced.is_degenerate(),
        minimal: false,
        configuration: None,
        extremal: false,
        mw_order: None,
        verdict: Verdict::Good,
    };
    if !report.delta_nonzero {
        report.verdict = Verdict::Bad("discriminant vanishes".into());
        return Ok(report);
    }
    let entries = match local_data(&reduced) {
        Ok(e) => e,
        Err(FiberError::NotRational) => {
            report.verdict = Verdict::Bad("reduction is a constant curve".into());
            return Ok(report);
        }
        Err(e) => {
            report.verdict = Verdict::Bad(e.to_string());
            return Ok(report);
        }
    };
    let bad: Vec<String> = entries
        .iter()
        .filter(|e| !e.minimal_input)
        .map(|e| e.place.to_string())
        .collect();
    report.minimal = bad.is_empty();
    if !report.minimal {
        report.verdict = Verdict::Bad(format!("not minimal at {}", bad.join(", ")));
        return Ok(report);
    }
    let c = FiberConfiguration::new(entries);
    if c.total_v != 12 {
        report.verdict = Verdict::Bad(format!("total v(Δ) = {}", c.total_v));
    }
    report.extremal = c.extremal;
    report.mw_order = c.mw_order;
    report.configuration = Some(c);
    Ok(report)
}

/// One report per prime, in the order given.
pub fn verify_good_reduction(
    m: &WeierstrassModel,
    primes: &[PrimeSpec],
) -> Result<Vec<ReductionReport>> {
    primes.iter().map(|p| check_prime(m, p)).collect()
}

fn good_configuration(m: &WeierstrassModel, p: &PrimeSpec) -> Result<FiberConfiguration> {
    let r = check_prime(m, p)?;
    let bad = |reason: String| ReductionError::BadReduction {
        prime: p.label().to_string(),
        reason,
    };
    match r.verdict {
        Verdict::Good => r
            .configuration
            .ok_or_else(|| bad("no configuration".into())),
        Verdict::Bad(reason) => Err(bad(reason)),
    }
}

/// Why primes outside [`critical_primes`] need no check.
pub const CRITICAL_PRIMES_ARGUMENT: &str = "outside the listed primes the reduction keeps deg Δ and the leading \
coefficients of c4 and c6, keeps the roots of rad Δ distinct, keeps multiplicative roots off c4, and keeps the \
order of c4 at additive roots; residue characteristic is at least 5, so the valuation table assigns the same \
Kodaira types and the model stays minimal";

fn rational_of(k: &Ring, x: &Elem) -> BigRational {
    match k.norm(x) {
        Elem::Rat(r) => r,
        Elem::Int(n) => BigRational::from_integer(n),
        other => panic!("norm to ℚ expected, got {:?}", other),
    }
}

fn add_primes_of(set: &mut BTreeSet<u64>, r: &BigRational) {
    if r.is_zero() {
        return;
    }
    set.extend(prime_divisors(r.numer()));
    set.extend(prime_divisors(r.denom()));
}

fn add_denominators(set: &mut BTreeSet<u64>, k: &Ring, f: &Poly) {
    for c in f.coeffs() {
        set.extend(prime_divisors(&k.denominator(c)));
    }
}

/// Rational primes below which the reduction type could change, always
/// including 2, 3 and 5.
pub fn critical_rational_primes(m: &WeierstrassModel) -> Result<BTreeSet<u64>> {
    let mut set: BTreeSet<u64> = [2, 3, 5].into_iter().collect();
    let ring = m.ring();
    let k = ring.fraction_field();
    let q = m.to_fraction_field().tate_quantities();
    let delta_r = m.discriminant();
    let mut content = BigInt::zero();
    for c in delta_r.coeffs() {
        if !ring.is_zero(c) {
            content = content.gcd(&rational_of(&k, &ring.to_fraction(c)).to_integer());
        }
    }
    set.extend(prime_divisors(&content));
    let mut values: Vec<Elem> = Vec::new();
    for f in [&q.delta, &q.c4, &q.c6] {
        if !f.is_zero() {
            values.push(f.lead().clone());
        }
    }
    let rad = squarefree_decompose(&q.delta)?.radical(&k);
    add_denominators(&mut set, &k, &rad);
    if rad.degree().unwrap_or(0) > 0 {
        values.push(rad.discriminant()?);
    }
    if !q.c4.is_zero() {
        let d_add = rad.gcd(&q.c4)?;
        let d_mult = rad.exact_div(&d_add)?;
        add_denominators(&mut set, &k, &d_add);
        add_denominators(&mut set, &k, &d_mult);
        if d_mult.degree().unwrap_or(0) > 0 {
            values.push(d_mult.resultant(&q.c4)?);
        }
        let mut rest = q.c4.clone();
        loop {
            let g = rest.gcd(&d_add)?;
            if g.degree().unwrap_or(0) == 0 {
                break;
            }
            rest = rest.exact_div(&g)?;
        }
        if d_add.degree().unwrap_or(0) > 0 && rest.degree().unwrap_or(0) > 0 {
            values.push(d_add.resultant(&rest)?);
        }
    }
    for v in &values {
        add_primes_of(&mut set, &rational_of(&k, v));
    }
    Ok(set)
}

/// Every prime of the coefficient ring above [`critical_rational_primes`].
pub fn critical_primes(m: &WeierstrassModel) -> Result<Vec<PrimeSpec>> {
    let mut out = Vec::new();
    for p in critical_rational_primes(m)? {
        out.extend(PrimeSpec::primes_above(m.ring(), p)?);
    }
    out.sort_by_key(|p| p.sort_key());
    Ok(out)
}

/// Primes of `ring` above every rational prime up to `bound`.
pub fn primes_up_to(ring: &Ring, bound: u64) -> Result<Vec<PrimeSpec>> {
    let mut out = Vec::new();
    for p in crate::arith::integer::primes_up_to(bound) {
        out.extend(PrimeSpec::primes_above(ring, p)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Same(Vec<KodairaType>),
    Exceptional {
        generic: Vec<KodairaType>,
        reduced: Vec<KodairaType>,
    },
}

impl Comparison {
    pub fn is_same(&self) -> bool {
        matches!(self, Comparison::Same(_))
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comparison::Same(t) => write!(f, "same {}", format_types(t)),
            Comparison::Exceptional { generic, reduced } => {
                write!(
                    f,
                    "exceptional: {} vs {}",
                    format_types(generic),
                    format_types(reduced)
                )
            }
        }
    }
}

fn generic_configuration(m: &WeierstrassModel) -> Result<FiberConfiguration> {
    fiber_configuration(m).map_err(ReductionError::Generic)
}

/// Multiset comparison of the generic and reduced configurations.
pub fn compare_reduction(m: &WeierstrassModel, p: &PrimeSpec) -> Result<Comparison> {
    let reduced = good_configuration(m, p)?.types();
    let generic = generic_configuration(m)?.types();
    Ok(if generic == reduced {
        Comparison::Same(generic)
    } else {
        Comparison::Exceptional { generic, reduced }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MwCheck {
    pub generic: u64,
    pub reduced: u64,
    /// reduced order divides generic order.
    pub holds: bool,
}

pub fn mw_divisibility_check(m: &WeierstrassModel, p: &PrimeSpec) -> Result<MwCheck> {
    let reduced = good_configuration(m, p)?
        .mw_order
        .ok_or_else(|| ReductionError::NotExtremal(p.label().to_string()))?;
    let generic = generic_configuration(m)?
        .mw_order
        .ok_or_else(|| ReductionError::NotExtremal("generic".into()))?;
    Ok(MwCheck {
        generic,
        reduced,
        holds: generic % reduced == 0,
    })
}

/// Parameters of a1 = c0·t, a2 = t(a + bt), a3 = d0·t³, a4 = t³(ct + d), a6 = t⁵(et + f).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SearchAnsatz {
    pub c0: i64,
    pub d0: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
}

impl SearchAnsatz {
    pub fn from_array(v: [i64; 8]) -> Self {
        let [c0, d0, a, b, c, d, e, f] = v;
        SearchAnsatz {
            c0,
            d0,
            a,
            b,
            c,
            d,
            e,
            f,
        }
    }

    pub fn to_array(&self) -> [i64; 8] {
        [
            self.c0, self.d0, self.a, self.b, self.c, self.d, self.e, self.f,
        ]
    }

    pub fn model(&self) -> WeierstrassModel {
        let z = Ring::integers();
        WeierstrassModel::from_ints(
            &z,
            [
                &[0, self.c0],
                &[0, self.a, self.b],
                &[0, 0, 0, self.d0],
                &[0, 0, 0, self.d, self.c],
                &[0, 0, 0, 0, 0, self.f, self.e],
            ],
        )
    }

    /// Δ / t⁸ as coefficients from degree 0 up.
    pub fn reduced_discriminant(&self) -> [i64; 5] {
        let s = self;
        let b2 = [4 * s.a, s.c0 * s.c0 + 4 * s.b];
        let b4 = [2 * s.d, s.c0 * s.d0 + 2 * s.c];
        let a4 = [s.d, s.c];
        let rest = sub(
            &shift(&add(
                &scale(&a4, -s.c0 * s.d0),
                &scale(&[s.a, s.b], s.d0 * s.d0),
            )),
            &mul(&a4, &a4),
        );
        let p = [4 * s.a, s.c0 * s.c0 + 4 * s.b];
        let b2sq = mul(&b2, &b2);
        let x = sub(
            &scale(&mul(&b2sq, &rest), -1),
            &shift(&scale(&mul(&mul(&b4, &b4), &b4), 8)),
        );
        let n = scale(&mul(&b2sq, &p), -1);
        let mm = shift(&scale(&mul(&b2, &b4), 9));
        q_inner(&x, &n, &mm, [s.f, s.e], [4 * s.f, s.d0 * s.d0 + 4 * s.e])
    }
}

impl fmt::Display for SearchAnsatz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_array();
        let names = ["c0", "d0", "a", "b", "c", "d", "e", "f"];
        let parts: Vec<String> = names
            .iter()
            .zip(v)
            .map(|(n, x)| format!("{}={}", n, x))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

type P = Vec<i64>;

fn mul(x: &[i64], y: &[i64]) -> P {
    let mut out = vec![0; x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

fn add(x: &[i64], y: &[i64]) -> P {
    let n = x.len().max(y.len());
    (0..n)
        .map(|i| x.get(i).unwrap_or(&0) + y.get(i).unwrap_or(&0))
        .collect()
}

fn sub(x: &[i64], y: &[i64]) -> P {
    add(x, &scale(y, -1))
}

fn scale(x: &[i64], c: i64) -> P {
    x.iter().map(|a| a * c).collect()
}

fn shift(x: &[i64]) -> P {
    let mut v = vec![0];
    v.extend_from_slice(x);
    v
}

/// Q = X + N·A6 + M·B6 − 27t²B6², padded to degree 4.
fn q_inner(x: &[i64], n: &[i64], m: &[i64], a6: [i64; 2], b6: [i64; 2]) -> [i64; 5] {
    let mut q = [0i64; 5];
    for (i, v) in x.iter().enumerate() {
        q[i] += v;
    }
    for (i, v) in n.iter().enumerate() {
        q[i] += v * a6[0];
        q[i + 1] += v * a6[1];
    }
    for (i, v) in m.iter().enumerate() {
        q[i] += v * b6[0];
        q[i + 1] += v * b6[1];
    }
    q[2] -= 27 * b6[0] * b6[0];
    q[3] -= 54 * b6[0] * b6[1];
    q[4] -= 27 * b6[1] * b6[1];
    q
}

fn isqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = (n as f64).sqrt() as i64;
    (r.saturating_sub(1)..=r + 1).find(|x| x * x == n)
}

/// Whether ±q is the square of an integer polynomial.
pub fn is_unit_times_square(q: &[i64; 5]) -> bool {
    let Some(deg) = (0..5).rev().find(|&i| q[i] != 0) else {
        return false;
    };
    if deg % 2 == 1 {
        return false;
    }
    let sign = q[deg].signum();
    let q: Vec<i64> = q.iter().map(|v| v * sign).collect();
    match deg {
        0 => isqrt(q[0]).is_some(),
        2 => {
            let Some(s1) = isqrt(q[2]) else { return false };
            if q[1] % (2 * s1) != 0 {
                return false;
            }
            let s0 = q[1] / (2 * s1);
            q[0] == s0 * s0
        }
        _ => {
            let Some(s2) = isqrt(q[4]) else { return false };
            if q[3] % (2 * s2) != 0 {
                return false;
            }
            let s1 = q[3] / (2 * s2);
            let r = q[2] - s1 * s1;
            if r % (2 * s2) != 0 {
                return false;
            }
            let s0 = r / (2 * s2);
            q[1] == 2 * s1 * s0 && q[0] == s0 * s0
        }
    }
}

/// Parameters giving the printed X_222 model.
pub const X222_ANSATZ: [i64; 8] = [1, 4, 1, 1, 2, 0, 1, 4];

/// All tuples with entries in [−bound, bound], in lexicographic order, whose
/// discriminant is t⁸ times ± a nonzero square and whose model is minimal at
/// t = 0. Minimality fails exactly when a = d = f = 0.
pub fn search_i2star(bound: i64) -> Vec<SearchAnsatz> {
    let r: Vec<i64> = (-bound..=bound).collect();
    let mut hits = Vec::new();
    for &c0 in &r {
        for &d0 in &r {
            for &a in &r {
                for &b in &r {
                    let b2 = [4 * a, c0 * c0 + 4 * b];
                    let b2sq = mul(&b2, &b2);
                    let n = scale(&mul(&b2sq, &b2), -1);
                    let a2_d0 = scale(&[a, b], d0 * d0);
                    for &c in &r {
                        for &d in &r {
                            let a4 = [d, c];
                            let b4 = [2 * d, c0 * d0 + 2 * c];
                            let rest =
                                sub(&shift(&add(&scale(&a4, -c0 * d0), &a2_d0)), &mul(&a4, &a4));
                            let x = sub(
                                &scale(&mul(&b2sq, &rest), -1),
                                &shift(&scale(&mul(&mul(&b4, &b4), &b4), 8)),
                            );
                            let m = shift(&scale(&mul(&b2, &b4), 9));
                            for &e in &r {
                                for &f in &r {
                                    if a == 0 && d == 0 && f == 0 {
                                        continue;
                                    }
                                    let q = q_inner(&x, &n, &m, [f, e], [4 * f, d0 * d0 + 4 * e]);
                                    if is_unit_times_square(&q) {
                                        hits.push(SearchAnsatz {
                                            c0,
                                            d0,
                                            a,
                                            b,
                                            c,
                                            d,
                                            e,
                                            f,
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    hits
}

/// Kodaira type at t = 0 from the valuations of Δ, c4 and c6 there.
pub fn type_at_zero(h: &SearchAnsatz) -> std::result::Result<KodairaType, FiberError> {
    let q = h.model().tate_quantities();
    let v = |p: &Poly| p.trailing_zeros().map(|k| k as u32);
    let vd = v(&q.delta).ok_or(FiberError::Degenerate)?;
    classify_tame(v(&q.c4), v(&q.c6), vd)
}

/// Same, read off the full configuration over ℚ.
pub fn type_at_zero_global(h: &SearchAnsatz) -> std::result::Result<KodairaType, FiberError> {
    let c = fiber_configuration(&h.model())?;
    let t = Poly::var(&Ring::rationals());
    Ok(c.at(&Place::Cluster(t)).unwrap_or(KodairaType::I(0)))
}
