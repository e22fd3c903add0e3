//! The valued field Q(t): t-adic valuation, residue map to Q and the
//! splitting `γ ↦ t^γ`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::unipoly::{Field, UniPoly};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Input(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Least common multiple of the denominators of `v`.
pub fn common_denominator<'a>(v: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    v.into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// An element of Q(t) as a reduced fraction with monic denominator.
///
/// The representation is canonical, so structural equality and hashing agree
/// with field equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TScalar {
    num: UniPoly<Rational>,
    den: UniPoly<Rational>,
}

impl TScalar {
    /// Builds `num / den`. Panics if `den` is zero.
    pub fn from_fraction(num: UniPoly<Rational>, den: UniPoly<Rational>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.lead().cloned().unwrap();
        let inv = Rational::one() / lead;
        TScalar {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(num: UniPoly<Rational>) -> Self {
        TScalar {
            num,
            den: UniPoly::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn t() -> Self {
        Self::from_poly(UniPoly::var())
    }

    /// The splitting of the valuation, `γ ↦ t^γ`.
    pub fn split(gamma: i64) -> Self {
        let k = gamma.unsigned_abs() as usize;
        let p = UniPoly::monomial(Rational::one(), k);
        if gamma >= 0 {
            Self::from_poly(p)
        } else {
            TScalar {
                num: UniPoly::one(),
                den: p,
            }
        }
    }

    pub fn numer(&self) -> &UniPoly<Rational> {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly<Rational> {
        &self.den
    }

    /// t-adic valuation; `None` stands for `+∞` (the zero element).
    pub fn val(&self) -> Option<i64> {
        let n = self.num.ord()? as i64;
        let d = self.den.ord().unwrap() as i64;
        Some(n - d)
    }

    /// Image in the residue field Q of an element of the valuation ring.
    pub fn residue(&self) -> Result<Rational> {
        match self.val() {
            None => Ok(Rational::zero()),
            Some(v) if v < 0 => Err(Error::NegativeValuation),
            Some(v) if v > 0 => Ok(Rational::zero()),
            Some(_) => Ok(self.num.coeff(0) / self.den.coeff(0)),
        }
    }

    /// The lowest t-coefficient: `residue(t^(-val(a)) * a)`, zero for zero.
    pub fn lead_coeff(&self) -> Rational {
        match (self.num.ord(), self.den.ord()) {
            (Some(n), Some(d)) => self.num.coeff(n) / self.den.coeff(d),
            _ => Rational::zero(),
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rational::zero()),
            (Some(0), Some(0)) => Some(self.num.coeff(0) / self.den.coeff(0)),
            _ => None,
        }
    }

    /// Value at `t = c`, or `None` at a pole.
    pub fn eval(&self, c: &Rational) -> Option<Rational> {
        let d = self.den.eval(c);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(c) / d)
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::from_fraction(self.den.clone(), self.num.clone()))
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        TScalar {
            num: base.num.pow(k.unsigned_abs() as u32),
            den: base.den.pow(k.unsigned_abs() as u32),
        }
    }
}

impl fmt::Display for TScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.num.fmt_var("t");
        if self.den.is_one() {
            return f.write_str(&n);
        }
        let wrap = |s: String| {
            if s.contains(['+', '-', '*']) {
                format!("({s})")
            } else {
                s
            }
        };
        let n = if n.trim_start_matches('-').contains(['+', '-', '/']) {
            format!("({n})")
        } else {
            n
        };
        let d = self.den.fmt_var("t");
        write!(f, "{}/{}", n, wrap(d))
    }
}

impl Zero for TScalar {
    fn zero() -> Self {
        TScalar {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for TScalar {
    fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }
}

impl Add for &TScalar {
    type Output = TScalar;
    fn add(self, rhs: Self) -> TScalar {
        if self.den == rhs.den {
            return TScalar::from_fraction(&self.num + &rhs.num, self.den.clone());
        }
        TScalar::from_fraction(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &TScalar {
    type Output = TScalar;
    fn sub(self, rhs: Self) -> TScalar {
        self + &(-rhs)
    }
}

impl Mul for &TScalar {
    type Output = TScalar;
    fn mul(self, rhs: Self) -> TScalar {
        if self.den.is_one() && rhs.den.is_one() {
            return TScalar::from_poly(&self.num * &rhs.num);
        }
        TScalar::from_fraction(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &TScalar {
    type Output = TScalar;
    fn div(self, rhs: Self) -> TScalar {
        assert!(!rhs.is_zero(), "division by zero in Q(t)");
        TScalar::from_fraction(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &TScalar {
    type Output = TScalar;
    fn neg(self) -> TScalar {
        TScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for TScalar {
            type Output = TScalar;
            fn $m(self, rhs: TScalar) -> TScalar {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for TScalar {
    type Output = TScalar;
    fn neg(self) -> TScalar {
        -&self
    }
}

impl Field for TScalar {}

impl From<Rational> for TScalar {
    fn from(c: Rational) -> Self {
        TScalar::from_rational(c)
    }
}

/// Renders a rational as `p` or `p/q`.
pub fn fmt_rational(r: &Rational) -> String {
    r.to_string()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tpoly(c: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_coeffs(c.iter().map(|&v| int(v)).collect())
    }

    fn frac(n: &[i64], d: &[i64]) -> TScalar {
        TScalar::from_fraction(tpoly(n), tpoly(d))
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(TScalar::zero().val(), None);
        // t^2 (2 + t) / (3 + t)
        assert_eq!(frac(&[0, 0, 2, 1], &[3, 1]).val(), Some(2));
        assert_eq!(TScalar::t().val(), Some(1));
    }

    #[test]
    fn residue_examples() {
        // (2t + t^2) / t
        assert_eq!(frac(&[0, 2, 1], &[0, 1]).residue().unwrap(), int(2));
        assert_eq!(TScalar::split(3).residue().unwrap(), int(0));
        assert_eq!(frac(&[1, 1], &[1, -1]).residue().unwrap(), int(1));
        assert_eq!(TScalar::split(-1).residue(), Err(Error::NegativeValuation));
    }

    #[test]
    fn split_examples() {
        assert_eq!(TScalar::split(0), TScalar::one());
        assert_eq!(TScalar::split(3), TScalar::t().pow(3));
        assert_eq!(TScalar::split(-2), TScalar::one() / TScalar::t().pow(2));
        assert_eq!(TScalar::split(-2).val(), Some(-2));
    }

    #[test]
    fn canonical_form() {
        // (2t + 2) / (4t + 4) = 1/2
        assert_eq!(frac(&[2, 2], &[4, 4]), TScalar::from_rational(rat(1, 2)));
        assert_eq!(frac(&[0, 1], &[0, 0, 2]).to_string(), "(1/2)/t");
        assert_eq!(frac(&[1, 1], &[-1, 1]).to_string(), "(t + 1)/(t - 1)");
    }

    pub(crate) fn arb_tscalar() -> impl Strategy<Value = TScalar> {
        (
            prop::collection::vec(-3i64..=3, 0..4),
            prop::collection::vec(-3i64..=3, 1..3),
            -2i64..=2,
        )
            .prop_filter_map("nonzero denominator", |(n, d, shift)| {
                let den = tpoly(&d);
                if den.is_zero() {
                    return None;
                }
                Some(&TScalar::from_fraction(tpoly(&n), den) * &TScalar::split(shift))
            })
    }

    proptest! {
        #[test]
        fn valuation_is_multiplicative_and_ultrametric(a in arb_tscalar(), b in arb_tscalar()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let (va, vb) = (a.val().unwrap(), b.val().unwrap());
            prop_assert_eq!((&a * &b).val(), Some(va + vb));
            let s = &a + &b;
            if let Some(vs) = s.val() {
                prop_assert!(vs >= va.min(vb));
                if va != vb {
                    prop_assert_eq!(vs, va.min(vb));
                }
            }
        }

        #[test]
        fn residue_is_multiplicative_on_units(a in arb_tscalar(), b in arb_tscalar()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let ua = &a * &TScalar::split(-a.val().unwrap());
            let ub = &b * &TScalar::split(-b.val().unwrap());
            let r = (&ua * &ub).residue().unwrap();
            prop_assert_eq!(r, ua.residue().unwrap() * ub.residue().unwrap());
            prop_assert!(!ua.residue().unwrap().is_zero());
        }

        #[test]
        fn field_round_trips(a in arb_tscalar(), b in arb_tscalar()) {
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&(&a * &b) / &b, a);
            }
        }
    }
}
