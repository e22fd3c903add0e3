//! Dense univariate polynomials over an exact field.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Rational;

/// Exact field arithmetic, as needed by the dense polynomial and linear
/// algebra routines.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
}

impl Field for Rational {}

/// Coefficients are stored lowest degree first with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * var^k`
    pub fn monomial(c: F, k: usize) -> Self {
        let mut coeffs = vec![F::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn var() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `var^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Divide by `var^k`; the caller guarantees `k <= ord()`.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.ord().is_none_or(|o| o >= k));
        Self::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let inv = F::one() / l.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Evaluation of a polynomial whose coefficients embed into a bigger ring.
    pub fn eval_in<R>(&self, x: &R, embed: impl Fn(&F) -> R) -> R
    where
        R: Clone + Add<Output = R> + Mul<Output = R> + Zero,
    {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + embed(c))
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = F::one() / d.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = r[k + dd].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].clone() - c.clone() * dj.clone();
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Formats with the given variable name, highest degree first.
    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            push_term(&mut out, &c.to_string(), &mono);
        }
        out
    }
}

/// Appends `coeff * mono` to a sum being printed, handling signs and unit
/// coefficients. `coeff` is the coefficient's own rendering.
pub(crate) fn push_term(out: &mut String, coeff: &str, mono: &str) {
    let (neg, body) = match coeff.strip_prefix('-') {
        Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
        _ => (false, coeff.to_string()),
    };
    let compound = body.contains(['+', '-']);
    let body = if compound && !(mono.is_empty() && out.is_empty()) { format!("({body})") } else { body };
    let term = if mono.is_empty() {
        body
    } else if body == "1" {
        mono.to_string()
    } else {
        format!("{body}*{mono}")
    };
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    out.push_str(&term);
}

impl<F: Field> Add for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn add(self, rhs: Self) -> UniPoly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<F: Field> Sub for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn sub(self, rhs: Self) -> UniPoly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<F: Field> Mul for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn mul(self, rhs: Self) -> UniPoly<F> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl<F: Field> Neg for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}
