//! A rational space curve in the three-dimensional torus over `Q(t)` whose
//! tropicalization contains the half ray `X = Y = 0, Z > -1`, split into three
//! Gröbner strata with equal support.
//!
//! The curve is cut out by the 2×2 minors of
//!
//! ```text
//! [ x-1      t(y-1)      t(y-1-tz) ]
//! [ t(y-1)   t(y-1-tz)   x-1-t     ]
//! ```
//!
//! and parametrized by
//! `x = (1+t-u³)/(1-u³)`, `y = (1+u-u³)/(1-u³)`, `z = u/(t(1+u+u²))`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{canonical_basis, PolyIdeal};
use crate::initial::{initial_ideal, support_equal, LiftedIdeal, TorusIdeal};
use crate::laurent::{LaurentPoly, WeightVector};
use crate::parse::{parse_poly, parse_poly_list};
use crate::scalar::{int, Rational, TScalar};
use crate::series::{series_eval_poly, series_inv, series_sqrt, TruncatedSeries};
use crate::strata::{compare_stratifications, stratify_lifted, RayStratification};
use crate::unipoly::UniPoly;

pub const MINORS: [&str; 3] = [
    "(x-1)*t*(y-1-t*z) - t^2*(y-1)^2",
    "(x-1)*(x-1-t) - t^2*(y-1)*(y-1-t*z)",
    "t*(y-1)*(x-1-t) - t^2*(y-1-t*z)^2",
];

/// A polynomial in the ideal that involves no `x`: it defines the image of
/// the curve under projection to the `(y, z)` plane.
pub const PROJECTION: &str = "(1-3*t*z)*(y-1)^2 + t*z*(3*t*z-1)*(y-1) - t^3*z^3";

/// Weights on the ray and the initial ideals there.
pub const RAY_STRATA: [(&str, &str); 3] = [
    ("0,0,-1/2", "x-1, (y-1)^2"),
    ("0,0,0", "(x-1)^2, (x-1)*z-(y-1)"),
    ("0,0,1", "(x-1)^2, y-1"),
];

pub const SUPPORT: &str = "x-1, y-1";

pub fn names() -> Vec<String> {
    ["x", "y", "z"].iter().map(|s| s.to_string()).collect()
}

pub fn minors() -> Vec<LaurentPoly> {
    MINORS.iter().map(|m| parse_poly(m, &names()).expect("valid")).collect()
}

pub fn curve_ideal() -> TorusIdeal {
    TorusIdeal::new(3, minors()).expect("three variables")
}

pub fn projection_poly() -> LaurentPoly {
    parse_poly(PROJECTION, &names()).expect("valid")
}

/// Ideal of `Q[x, y, z]` from a comma separated generator list.
pub fn residue_ideal(gens: &str) -> PolyIdeal {
    let gens = parse_poly_list(gens, &names())
        .expect("valid")
        .iter()
        .map(|g| g.map_coeffs(|c| c.as_rational().expect("rational coefficients")))
        .collect();
    PolyIdeal::new(3, gens).expect("polynomial generators")
}

/// Whether the projection polynomial lies in the lifted ideal in `Q[t, x, y, z]`.
pub fn projection_in_ideal() -> Result<bool> {
    let lifted = LiftedIdeal::new(&curve_ideal())?;
    let gb = canonical_basis(lifted.lifted())?;
    let f = projection_poly();
    let mut g = crate::laurent::ResiduePoly::zero(4);
    for (m, c) in f.terms() {
        for (k, a) in c.numer().coeffs().iter().enumerate() {
            if !a.is_zero() {
                let mono = crate::laurent::Monomial::new(std::iter::once(k as i32).chain(m.exps().iter().copied()));
                g.add_term(mono, a.clone());
            }
        }
    }
    gb.contains(&g)
}

/// Stratifies the ray `(0, 0, s)`, `-1 < s < ∞`, and checks the result
/// against the three expected ideals with a single breakpoint at 0.
pub fn verify_ray_strata(cap: &Rational) -> Result<RayStratification> {
    let lifted = LiftedIdeal::new(&curve_ideal())?;
    let r = stratify_lifted(
        &lifted,
        &WeightVector::zero(3),
        &[int(0), int(0), int(1)],
        Some(int(-1)),
        None,
        cap,
    )?;
    let mut diffs = Vec::new();
    if r.breakpoints != vec![int(0)] {
        diffs.push(format!(
            "breakpoints: expected [0], got [{}]",
            r.breakpoints.iter().map(crate::scalar::fmt_rational).collect::<Vec<_>>().join(", ")
        ));
    }
    if r.segments.len() == 3 {
        for (seg, (_, want)) in r.segments.iter().zip(RAY_STRATA) {
            let expected = canonical_basis(&residue_ideal(want))?;
            if seg.initial.gb() != &expected {
                diffs.push(format!(
                    "segment at {}: expected <{}>, got <{}>",
                    crate::scalar::fmt_rational(&seg.sample()),
                    want,
                    seg.initial.display_with(&names())
                ));
            }
        }
    } else {
        diffs.push(format!("expected 3 segments, got {}", r.segments.len()));
    }
    if diffs.is_empty() {
        Ok(r)
    } else {
        Err(Error::VerificationFailure(diffs.join("; ")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn scalar(self) -> TScalar {
        match self {
            Sign::Plus => TScalar::one(),
            Sign::Minus => TScalar::from_int(-1),
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            _ => Err(Error::Input(format!("sign must be + or -, got {s:?}"))),
        }
    }
}

pub const MIN_BRANCH_ORDER: usize = 6;

/// Precision lost when dividing by `y - 1 - tz`.
pub const BRANCH_ORDER_LOSS: usize = 3;

/// The two branches through `x = y = 1` as series in `z` modulo `zⁿ`:
/// `y = 1 + (tz/2)(1 ± √((1+tz)/(1-3tz)))` from the projection polynomial,
/// then `x = 1 + t(y-1)²/(y-1-tz)` from the first minor. The `x` series
/// loses the orders cancelled in that division.
pub fn branch_series(sign: Sign, n: usize) -> Result<(TruncatedSeries, TruncatedSeries)> {
    if n < MIN_BRANCH_ORDER {
        return Err(Error::TruncationTooSmall { got: n, min: MIN_BRANCH_ORDER });
    }
    let t = TScalar::t();
    let tz = TruncatedSeries::z(n).scale(&t);
    let one = TruncatedSeries::one(n);
    let ratio = one.add(&tz).mul(&series_inv(&one.sub(&tz.scale(&TScalar::from_int(3))))?);
    let root = series_sqrt(&ratio)?;
    let half = TScalar::from_rational(crate::scalar::rat(1, 2));
    let y_minus_1 = tz.scale(&half).mul(&one.add(&root.scale(&sign.scalar())));
    let y = one.add(&y_minus_1);
    let x_minus_1 = y_minus_1.mul(&y_minus_1).scale(&t).div(&y_minus_1.sub(&tz))?;
    let x = TruncatedSeries::one(x_minus_1.order()).add(&x_minus_1);
    Ok((y, x))
}

/// Whether `(x, y, z)` annihilates every minor modulo `z^(n-3)`.
pub fn branch_satisfies_minors(y: &TruncatedSeries, x: &TruncatedSeries, n: usize) -> Result<bool> {
    let keep = n.saturating_sub(BRANCH_ORDER_LOSS);
    let subs = [x.truncate(keep), y.truncate(keep), TruncatedSeries::z(keep)];
    if subs.iter().any(|s| s.order() < keep) {
        return Ok(false);
    }
    for m in minors() {
        if !series_eval_poly(&m, &subs)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn verify_branch(sign: Sign, n: usize) -> Result<bool> {
    let (y, x) = branch_series(sign, n)?;
    branch_satisfies_minors(&y, &x, n)
}

/// A rational function of `u` over `Q(t)`, kept in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunctionU {
    num: UniPoly<TScalar>,
    den: UniPoly<TScalar>,
}

impl RationalFunctionU {
    pub fn new(num: UniPoly<TScalar>, den: UniPoly<TScalar>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if num.is_zero() {
            return Ok(RationalFunctionU { num, den: UniPoly::one() });
        }
        let g = num.gcd(&den);
        let num = num.div_rem(&g).0;
        let den = den.div_rem(&g).0;
        let lead = den.lead().expect("nonzero").clone();
        let inv = &TScalar::one() / &lead;
        Ok(RationalFunctionU { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn poly(p: UniPoly<TScalar>) -> Self {
        RationalFunctionU { num: p, den: UniPoly::one() }
    }

    pub fn numer(&self) -> &UniPoly<TScalar> {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly<TScalar> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).expect("nonzero")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunctionU { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Value at `u0`, `None` at a pole.
    pub fn eval(&self, u0: &TScalar) -> Option<TScalar> {
        let d = self.den.eval(u0);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval(u0) / &d)
    }

    pub fn fmt_var(&self, var: &str) -> String {
        let wrap = |s: String| if s.contains(['+', '-']) { format!("({s})") } else { s };
        if self.den.is_one() {
            self.num.fmt_var(var)
        } else {
            format!("{}/{}", wrap(self.num.fmt_var(var)), wrap(self.den.fmt_var(var)))
        }
    }
}

/// Substitutes rational functions of `u` into a Laurent polynomial.
pub fn substitute(f: &LaurentPoly, subs: &[RationalFunctionU]) -> Result<RationalFunctionU> {
    let mut acc = RationalFunctionU::poly(UniPoly::zero());
    for (m, c) in f.terms() {
        let mut term = RationalFunctionU::poly(UniPoly::constant(c.clone()));
        for (i, &e) in m.exps().iter().enumerate() {
            let base = if e >= 0 { subs[i].clone() } else { subs[i].inv()? };
            for _ in 0..e.unsigned_abs() {
                term = term.mul(&base);
            }
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

fn upoly(coeffs: &[&str]) -> UniPoly<TScalar> {
    UniPoly::from_coeffs(
        coeffs
            .iter()
            .map(|c| crate::parse::parse_scalar(c).expect("valid"))
            .collect(),
    )
}

/// `(x(u), y(u), z(u))`.
pub fn parametrization() -> [RationalFunctionU; 3] {
    let den = upoly(&["1", "0", "0", "-1"]);
    [
        RationalFunctionU::new(upoly(&["1+t", "0", "0", "-1"]), den.clone()).expect("nonzero"),
        RationalFunctionU::new(upoly(&["1", "1", "0", "-1"]), den).expect("nonzero"),
        RationalFunctionU::new(upoly(&["0", "1"]), upoly(&["t", "t", "t"])).expect("nonzero"),
    ]
}

/// Whether every minor vanishes identically on the parametrization.
pub fn parametrization_on_curve() -> Result<bool> {
    let p = parametrization();
    for m in minors() {
        if !substitute(&m, &p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A point of the projective `u`-line over `Q(t)` or a closed point given by
/// an irreducible polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundaryPoint {
    /// A monic polynomial, assumed irreducible over `Q(t)`.
    Poly(UniPoly<TScalar>),
    Value(TScalar),
    Infinity,
}

impl BoundaryPoint {
    pub fn label(&self) -> String {
        match self {
            BoundaryPoint::Poly(p) => p.fmt_var("u"),
            BoundaryPoint::Value(v) => UniPoly::from_coeffs(vec![-v, TScalar::one()]).fmt_var("u"),
            BoundaryPoint::Infinity => "inf".to_string(),
        }
    }
}

fn multiplicity(f: &UniPoly<TScalar>, p: &UniPoly<TScalar>) -> i64 {
    let mut f = f.clone();
    let mut k = 0;
    loop {
        let (q, r) = f.div_rem(p);
        if !r.is_zero() {
            return k;
        }
        f = q;
        k += 1;
    }
}

/// Order of vanishing of `phi` at `point` (negative at poles).
pub fn ord_at(phi: &RationalFunctionU, point: &BoundaryPoint) -> Result<i64> {
    if phi.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let p = match point {
        BoundaryPoint::Poly(p) => {
            if p.degree().unwrap_or(0) == 0 {
                return Err(Error::Input("boundary polynomial must have positive degree".into()));
            }
            p.monic()
        }
        BoundaryPoint::Value(v) => UniPoly::from_coeffs(vec![-v, TScalar::one()]),
        BoundaryPoint::Infinity => {
            let dn = phi.num.degree().expect("nonzero") as i64;
            let dd = phi.den.degree().expect("nonzero") as i64;
            return Ok(dd - dn);
        }
    };
    Ok(multiplicity(&phi.num, &p) - multiplicity(&phi.den, &p))
}

/// A valuation or `±∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum TropValue {
    NegInfinity,
    Finite(i64),
    PosInfinity,
}

impl std::fmt::Display for TropValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TropValue::NegInfinity => f.write_str("-inf"),
            TropValue::Finite(v) => write!(f, "{v}"),
            TropValue::PosInfinity => f.write_str("+inf"),
        }
    }
}

/// Valuations of the three coordinates at a point of the `u`-line with
/// coordinates in `Q(t)`.
pub fn puncture_trop(point: &BoundaryPoint) -> Result<[TropValue; 3]> {
    let point = match point {
        BoundaryPoint::Poly(p) if p.degree() == Some(1) => {
            let p = p.monic();
            BoundaryPoint::Value(-p.coeff(0))
        }
        BoundaryPoint::Poly(_) => return Err(Error::IrrationalPoint),
        other => other.clone(),
    };
    let params = parametrization();
    let mut out = [TropValue::Finite(0); 3];
    for (slot, phi) in out.iter_mut().zip(&params) {
        let ord = ord_at(phi, &point)?;
        *slot = if ord > 0 {
            TropValue::PosInfinity
        } else if ord < 0 {
            TropValue::NegInfinity
        } else {
            let value = match &point {
                BoundaryPoint::Value(u0) => phi.eval(u0).expect("no pole"),
                _ => {
                    // same degree: the value at infinity is the ratio of leading coefficients
                    phi.num.lead().expect("nonzero") / phi.den.lead().expect("nonzero")
                }
            };
            TropValue::Finite(value.val().expect("nonzero value"))
        };
    }
    Ok(out)
}

/// Boundary points of the curve, with their divisor orders of `(x, y, z)`.
pub fn boundary_points() -> Vec<(BoundaryPoint, [i64; 3])> {
    vec![
        (BoundaryPoint::Poly(upoly(&["-1-t", "0", "0", "1"])), [1, 0, 0]),
        (BoundaryPoint::Poly(upoly(&["-1", "-1", "0", "1"])), [0, 1, 0]),
        (BoundaryPoint::Value(TScalar::zero()), [0, 0, 1]),
        (BoundaryPoint::Poly(upoly(&["1", "1", "1"])), [-1, -1, -1]),
        (BoundaryPoint::Value(TScalar::one()), [-1, -1, 0]),
        (BoundaryPoint::Infinity, [0, 0, 1]),
    ]
}

pub fn divisor_orders(point: &BoundaryPoint) -> Result<[i64; 3]> {
    let p = parametrization();
    Ok([ord_at(&p[0], point)?, ord_at(&p[1], point)?, ord_at(&p[2], point)?])
}

/// One line of the verification report.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl Check {
    fn new(name: impl Into<String>, expected: impl Into<String>, computed: impl Into<String>) -> Self {
        let (expected, computed) = (expected.into(), computed.into());
        let pass = expected == computed;
        Check { name: name.into(), expected, computed, pass }
    }
}

/// Runs every verification of the curve and reports each result.
pub fn verification_report(cap: &Rational, order: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let ideal = curve_ideal();
    let v = names();
    checks.push(Check::new("generator count", "3", ideal.gens().len().to_string()));
    checks.push(Check::new("projection polynomial in ideal", "true", projection_in_ideal()?.to_string()));
    checks.push(Check::new("parametrization on curve", "true", parametrization_on_curve()?.to_string()));
    let lifted = LiftedIdeal::new(&ideal)?;
    for (w, want) in RAY_STRATA {
        let w = WeightVector::parse(w)?;
        let got = lifted.initial_ideal(&w)?;
        let expected = canonical_basis(&residue_ideal(want))?;
        let computed = if got.gb() == &expected { want.to_string() } else { got.display_with(&v) };
        checks.push(Check::new(format!("initial ideal at {w}"), want, computed));
    }
    let ray = match verify_ray_strata(cap) {
        Ok(r) => r.breakpoints.iter().map(crate::scalar::fmt_rational).collect::<Vec<_>>().join(","),
        Err(Error::VerificationFailure(d)) => d,
        Err(e) => return Err(e),
    };
    checks.push(Check::new("ray breakpoints", "0", ray));
    let support = residue_ideal(SUPPORT);
    for (w, _) in RAY_STRATA {
        let w = WeightVector::parse(w)?;
        let j = lifted.initial_ideal(&w)?;
        let verdict = support_equal(&j, &support, crate::initial::DEFAULT_M_MAX)?;
        checks.push(Check::new(format!("support at {w}"), "equal", verdict.to_string()));
    }
    for (w, want) in [("0,0,0", "0 < 1"), ("0,0,1", "1 = 1"), ("0,0,-1/2", "1 = 1")] {
        let w = WeightVector::parse(w)?;
        let rep = compare_stratifications(&ideal, &w, &support)?;
        let rel = match rep.topological_dim {
            Some(t) if rep.groebner_dim < t => format!("{} < {t}", rep.groebner_dim),
            Some(t) if rep.groebner_dim == t => format!("{} = {t}", rep.groebner_dim),
            Some(t) => format!("{} > {t}", rep.groebner_dim),
            None => format!("{} vs unknown", rep.groebner_dim),
        };
        checks.push(Check::new(format!("groebner vs topological dim at {w}"), want, rel));
    }
    for sign in [Sign::Plus, Sign::Minus] {
        checks.push(Check::new(
            format!("branch {sign:?} satisfies minors"),
            "true",
            verify_branch(sign, order)?.to_string(),
        ));
    }
    for (point, want) in boundary_points() {
        let got = divisor_orders(&point)?;
        checks.push(Check::new(
            format!("divisor orders at {}", point.label()),
            format!("{want:?}"),
            format!("{got:?}"),
        ));
    }
    for (point, want) in [
        (BoundaryPoint::Value(TScalar::zero()), "(0, 0, +inf)"),
        (BoundaryPoint::Value(TScalar::one()), "(-inf, -inf, -1)"),
        (BoundaryPoint::Infinity, "(0, 0, +inf)"),
    ] {
        let [a, b, c] = puncture_trop(&point)?;
        checks.push(Check::new(
            format!("tropical image of {}", point.label()),
            want,
            format!("({a}, {b}, {c})"),
        ));
    }
    let unit = initial_ideal(&ideal, &WeightVector::from_ints(&[0, 0, -2]))?.is_unit();
    checks.push(Check::new("(0,0,-2) outside the tropical curve", "true", unit.to_string()));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parametrization_lies_on_curve() {
        assert!(parametrization_on_curve().unwrap());
        let p = parametrization();
        assert!(substitute(&projection_poly(), &p).unwrap().is_zero());
    }

    #[test]
    fn projection_polynomial_is_in_ideal() {
        assert!(projection_in_ideal().unwrap());
    }

    #[test]
    fn divisor_orders_of_boundary_points() {
        for (point, want) in boundary_points() {
            assert_eq!(divisor_orders(&point).unwrap(), want, "{}", point.label());
        }
        let zero = RationalFunctionU::poly(UniPoly::zero());
        assert_eq!(ord_at(&zero, &BoundaryPoint::Infinity).unwrap_err(), Error::ZeroFunction);
    }

    #[test]
    fn tropical_images_of_punctures() {
        use TropValue::*;
        assert_eq!(puncture_trop(&BoundaryPoint::Value(TScalar::zero())).unwrap(), [Finite(0), Finite(0), PosInfinity]);
        assert_eq!(puncture_trop(&BoundaryPoint::Value(TScalar::one())).unwrap(), [NegInfinity, NegInfinity, Finite(-1)]);
        assert_eq!(puncture_trop(&BoundaryPoint::Infinity).unwrap(), [Finite(0), Finite(0), PosInfinity]);
        let cubic = boundary_points()[0].0.clone();
        assert_eq!(puncture_trop(&cubic).unwrap_err(), Error::IrrationalPoint);
    }

    #[test]
    fn branches() {
        assert_eq!(branch_series(Sign::Plus, 5).unwrap_err(), Error::TruncationTooSmall { got: 5, min: 6 });
        for sign in [Sign::Plus, Sign::Minus] {
            assert!(verify_branch(sign, 8).unwrap());
            let (y, _) = branch_series(sign, 8).unwrap();
            assert!(y.coeff(0).is_one());
        }
        let (mut y, x) = branch_series(Sign::Plus, 8).unwrap();
        y = y.add(&TruncatedSeries::z(8).pow(2));
        assert!(!branch_satisfies_minors(&y, &x, 8).unwrap());
    }

    #[test]
    fn ray_strata() {
        let r = verify_ray_strata(&int(10)).unwrap();
        let dims: Vec<_> = r.segments.iter().map(|s| s.groebner_dim).collect();
        assert_eq!(dims, vec![Some(1), Some(0), Some(1)]);
    }
}
