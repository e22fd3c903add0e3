//! Truncated power series in one variable `z` over `Q(t)`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::{Rational, TScalar};

/// `c₀ + c₁z + … + c_{n-1}z^{n-1} + O(zⁿ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<TScalar>,
}

impl TruncatedSeries {
    /// Pads with zeros or truncates to exactly `n` coefficients.
    pub fn new(mut coeffs: Vec<TScalar>, n: usize) -> Self {
        coeffs.resize(n, TScalar::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(Vec::new(), n)
    }

    pub fn constant(c: TScalar, n: usize) -> Self {
        Self::new(vec![c], n)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(TScalar::one(), n)
    }

    /// The series `z`.
    pub fn z(n: usize) -> Self {
        Self::new(vec![TScalar::zero(), TScalar::one()], n)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[TScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> TScalar {
        self.coeffs.get(i).cloned().unwrap_or_else(TScalar::zero)
    }

    pub fn truncate(&self, m: usize) -> Self {
        Self::new(self.coeffs[..m.min(self.order())].to_vec(), m.min(self.order()))
    }

    /// Index of the first nonzero coefficient, `None` if all vanish.
    pub fn z_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.z_order().is_none()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new((0..n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(), n)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new((0..n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(), n)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect(), self.order())
    }

    pub fn scale(&self, c: &TScalar) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.order())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![TScalar::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.order()), |acc, _| acc.mul(self))
    }

    /// Divides by `z^k`, dropping `k` orders of precision. The first `k`
    /// coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::Input(format!("series is not divisible by z^{k}")));
        }
        let n = self.order().saturating_sub(k);
        Ok(Self::new(self.coeffs[k.min(self.order())..].to_vec(), n))
    }

    /// `self / other`, after cancelling the power of `z` dividing `other`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let k = other.z_order().ok_or(Error::NonUnitConstantTerm)?;
        let a = self.shift_down(k)?;
        let b = other.shift_down(k)?;
        Ok(a.mul(&series_inv(&b)?))
    }

    pub fn fmt_with(&self, var: &str) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            crate::unipoly::push_term(&mut out, &c.to_string(), &mono);
        }
        if out.is_empty() {
            out.push('0');
        }
        format!("{out} + O({var}^{})", self.order())
    }
}

impl std::fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.fmt_with("z"))
    }
}

/// Multiplicative inverse by Newton iteration `g ← g(2 − s g)`.
pub fn series_inv(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    let n = s.order();
    let c0 = s.coeff(0);
    if n == 0 {
        return Ok(TruncatedSeries::zero(0));
    }
    let g0 = c0.inv().ok_or(Error::NonUnitConstantTerm)?;
    let mut g = TruncatedSeries::constant(g0, 1);
    let mut p = 1;
    while p < n {
        p = (2 * p).min(n);
        let g_p = TruncatedSeries::new(g.coeffs.clone(), p);
        let sg = s.truncate(p).mul(&g_p);
        let two = TruncatedSeries::constant(TScalar::from_int(2), p);
        g = g_p.mul(&two.sub(&sg));
    }
    Ok(g)
}

/// Square root with constant term 1 by Newton iteration `g ← (g + s/g)/2`.
pub fn series_sqrt(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    let n = s.order();
    if n == 0 {
        return Ok(TruncatedSeries::zero(0));
    }
    if !s.coeff(0).is_one() {
        return Err(Error::BadConstantTerm);
    }
    let half = TScalar::from_rational(Rational::new(1.into(), 2.into()));
    let mut g = TruncatedSeries::one(1);
    let mut p = 1;
    while p < n {
        p = (2 * p).min(n);
        let g_p = TruncatedSeries::new(g.coeffs.clone(), p);
        let q = s.truncate(p).mul(&series_inv(&g_p)?);
        g = g_p.add(&q).scale(&half);
    }
    Ok(g)
}

/// Substitutes one series per variable into `f`. Negative exponents need a
/// substitution with nonzero constant term.
pub fn series_eval_poly(f: &LaurentPoly, subs: &[TruncatedSeries]) -> Result<TruncatedSeries> {
    if subs.len() != f.nvars() {
        return Err(Error::DimensionMismatch {
            expected: f.nvars(),
            found: subs.len(),
        });
    }
    let n = subs.iter().map(TruncatedSeries::order).min().unwrap_or(0);
    let mut inverses: Vec<Option<TruncatedSeries>> = vec![None; subs.len()];
    let mut acc = TruncatedSeries::zero(n);
    for (m, c) in f.terms() {
        let mut term = TruncatedSeries::constant(c.clone(), n);
        for (i, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                term = term.mul(&subs[i].pow(e as u32));
            } else if e < 0 {
                if inverses[i].is_none() {
                    inverses[i] = Some(series_inv(&subs[i]).map_err(|_| Error::NonUnitSubstitution)?);
                }
                term = term.mul(&inverses[i].as_ref().unwrap().pow((-e) as u32));
            }
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, parse_scalar};
    use proptest::prelude::*;

    fn series(cs: &[&str], n: usize) -> TruncatedSeries {
        TruncatedSeries::new(cs.iter().map(|c| parse_scalar(c).unwrap()).collect(), n)
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(series_inv(&series(&["1", "1"], 5)).unwrap(), series(&["1", "-1", "1", "-1", "1"], 5));
        assert_eq!(series_inv(&series(&["2"], 3)).unwrap(), series(&["1/2"], 3));
        assert_eq!(
            series_inv(&series(&["1", "t"], 4)).unwrap(),
            series(&["1", "-t", "t^2", "-t^3"], 4)
        );
        assert_eq!(series_inv(&series(&["0", "1"], 3)).unwrap_err(), Error::NonUnitConstantTerm);
    }

    #[test]
    fn square_root_examples() {
        assert_eq!(
            series_sqrt(&series(&["1", "1"], 4)).unwrap(),
            series(&["1", "1/2", "-1/8", "1/16"], 4)
        );
        assert_eq!(series_sqrt(&TruncatedSeries::one(5)).unwrap(), TruncatedSeries::one(5));
        assert_eq!(series_sqrt(&series(&["4"], 2)).unwrap_err(), Error::BadConstantTerm);
    }

    #[test]
    fn evaluation_examples() {
        let v: Vec<String> = vec!["x".into(), "y".into(), "w".into()];
        let n = 6;
        let subs = [series(&["1", "1"], n), series(&["1", "-1"], n), TruncatedSeries::z(n)];
        let f = parse_poly("x - 1", &v).unwrap();
        assert_eq!(series_eval_poly(&f, &subs).unwrap(), TruncatedSeries::z(n));
        let g = parse_poly("x*y", &v).unwrap();
        assert_eq!(series_eval_poly(&g, &subs).unwrap(), series(&["1", "0", "-1"], n));
        let h = parse_poly("w^-1", &v).unwrap();
        assert_eq!(series_eval_poly(&h, &subs).unwrap_err(), Error::NonUnitSubstitution);
        let k = parse_poly("x^-1", &v).unwrap();
        assert_eq!(series_eval_poly(&k, &subs).unwrap(), series_inv(&subs[0]).unwrap());
    }

    #[test]
    fn division_cancels_common_z_powers() {
        let a = series(&["0", "0", "1", "1"], 6);
        let b = series(&["0", "2"], 6);
        let q = a.div(&b).unwrap();
        assert_eq!(q.order(), 5);
        assert_eq!(q, series(&["0", "1/2", "1/2"], 5));
        assert!(b.div(&a).is_err());
    }

    #[test]
    fn formatting() {
        let s = series(&["1", "-2*t", "0", "1/3"], 5);
        assert_eq!(s.to_string(), "1 - 2*t*z + 1/3*z^3 + O(z^5)");
    }

    fn arb_coeff() -> impl Strategy<Value = TScalar> {
        prop::collection::vec(-3i64..=3, 0..3).prop_map(|cs| {
            cs.iter().rev().fold(TScalar::zero(), |acc, &c| &(&acc * &TScalar::t()) + &TScalar::from_int(c))
        })
    }

    fn arb_series(n: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec(arb_coeff(), n).prop_map(move |c| TruncatedSeries::new(c, n))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn inverse_and_root_identities(mut s in arb_series(8), c0 in arb_coeff()) {
            prop_assume!(!c0.is_zero());
            s.coeffs[0] = c0;
            let inv = series_inv(&s).unwrap();
            prop_assert_eq!(s.mul(&inv), TruncatedSeries::one(8));
            s.coeffs[0] = TScalar::one();
            let r = series_sqrt(&s).unwrap();
            prop_assert_eq!(r.mul(&r), s.clone());
            prop_assert!(r.coeff(0).is_one());
        }

        #[test]
        fn truncation_is_coherent(mut s in arb_series(8), m in 1usize..8) {
            s.coeffs[0] = TScalar::one();
            prop_assert_eq!(series_inv(&s).unwrap().truncate(m), series_inv(&s.truncate(m)).unwrap());
            prop_assert_eq!(series_sqrt(&s).unwrap().truncate(m), series_sqrt(&s.truncate(m)).unwrap());
        }
    }
}
