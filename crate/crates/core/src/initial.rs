//! Initial ideals of ideals in `Q(t)[x^±]`, tropical membership and support
//! comparison.
//!
//! An ideal is lifted to `Q[t, x]` (denominators cleared, monomials shifted,
//! saturated by `t·x₁⋯x_N`). Its degrevlex basis is homogenized with an extra
//! variable `h`, which turns the minimization of `val + w·u` into a positive
//! weight order on `Q[t, x, h]`. The initial forms of that basis, with `h` and
//! `t` set to 1, generate the initial ideal up to saturation by the variables.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{
    buchberger, canonical_basis, homogeneity_of_basis, saturate_by_variables, HomogeneitySpace,
    PolyIdeal, ReducedGB,
};
use crate::laurent::{LaurentPoly, Monomial, ResiduePoly, TermOrder, WeightVector};
use crate::scalar::{common_denominator, Rational};
use crate::unipoly::UniPoly;

/// Ideal of the Laurent polynomial ring over `Q(t)` in `N` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusIdeal {
    nvars: usize,
    gens: Vec<LaurentPoly>,
}

impl TorusIdeal {
    pub fn new(nvars: usize, gens: Vec<LaurentPoly>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: g.nvars(),
                });
            }
        }
        Ok(TorusIdeal {
            nvars,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    /// The ideal generated by polynomials with rational coefficients, that is,
    /// over the trivially valued part of `Q(t)`.
    pub fn from_residue(ideal: &PolyIdeal) -> Self {
        TorusIdeal {
            nvars: ideal.nvars(),
            gens: ideal.gens().iter().map(|g| g.to_laurent()).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[LaurentPoly] {
        &self.gens
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| g.fmt_with(names)).collect();
        format!("<{}>", parts.join(", "))
    }
}

fn lcm_poly(a: &UniPoly<Rational>, b: &UniPoly<Rational>) -> UniPoly<Rational> {
    let g = a.gcd(b);
    (a * b).div_rem(&g).0
}

/// Polynomial in `Q[t, x]` (variable 0 is `t`) with the same zero set on the
/// torus as `f`.
fn clear_denominators(f: &LaurentPoly) -> ResiduePoly {
    let n = f.nvars();
    let den = f
        .terms()
        .fold(UniPoly::one(), |acc, (_, c)| lcm_poly(&acc, c.denom()));
    let shift = f.min_exponents();
    let mut out = ResiduePoly::zero(n + 1);
    for (m, c) in f.terms() {
        let num = c.numer() * &den.div_rem(c.denom()).0;
        let u = m.div(&shift);
        for (k, a) in num.coeffs().iter().enumerate() {
            if !a.is_zero() {
                let mono = Monomial::new(std::iter::once(k as i32).chain(u.exps().iter().copied()));
                out.add_term(mono, a.clone());
            }
        }
    }
    // Rational content does not matter, but integral coefficients keep the
    // lifted computation smaller.
    let d = common_denominator(out.terms().map(|(_, c)| c));
    out.scale(&Rational::from_integer(d))
}

/// The lift of `I` to `Q[t, x]`: the ideal of all polynomials that vanish on
/// the closure of the torus variety, saturated by `t·x₁⋯x_N`.
pub fn lift(ideal: &TorusIdeal) -> Result<PolyIdeal> {
    let n = ideal.nvars;
    let gens = ideal.gens.iter().map(clear_denominators).collect();
    let raw = PolyIdeal::new(n + 1, gens)?;
    let sat = saturate_by_variables(&raw)?;
    Ok(canonical_basis(&sat)?.ideal())
}

/// A lifted ideal prepared for repeated initial ideal computations.
#[derive(Clone, Debug)]
pub struct LiftedIdeal {
    nvars: usize,
    lifted: PolyIdeal,
    homogenized: PolyIdeal,
}

impl LiftedIdeal {
    pub fn new(ideal: &TorusIdeal) -> Result<Self> {
        let lifted = lift(ideal)?;
        let n = ideal.nvars;
        let hom = lifted
            .gens()
            .iter()
            .map(|g| {
                let d = g.total_degree().unwrap_or(0);
                ResiduePoly::from_terms(
                    n + 2,
                    g.terms().map(|(m, c)| {
                        let e = (d - m.degree()) as i32;
                        (Monomial::new(m.exps().iter().copied().chain(std::iter::once(e))), c.clone())
                    }),
                )
            })
            .collect();
        Ok(LiftedIdeal {
            nvars: n,
            lifted,
            homogenized: PolyIdeal::new(n + 2, hom)?,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The lift in `Q[t, x]`.
    pub fn lifted(&self) -> &PolyIdeal {
        &self.lifted
    }

    fn check(&self, w: &WeightVector) -> Result<()> {
        if w.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: w.len(),
            });
        }
        Ok(())
    }

    /// Reduced basis of the homogenized lift in `Q[t, x, h]` for the order
    /// refining `min (k + w·u)` on terms `t^k x^u h^e`.
    pub fn weighted_basis(&self, w: &WeightVector) -> Result<ReducedGB> {
        self.check(w)?;
        let c = Rational::from_integer(common_denominator(w.0.iter()));
        let mut scaled: Vec<i64> = Vec::with_capacity(self.nvars + 2);
        scaled.push(integral(&c)?);
        for wi in &w.0 {
            scaled.push(integral(&(wi * &c))?);
        }
        scaled.push(0);
        let lambda = 1 + scaled.iter().copied().max().unwrap_or(0);
        let weights = scaled.iter().map(|v| lambda - v).collect();
        buchberger(
            &self.homogenized,
            &TermOrder::weighted(weights, TermOrder::DegRevLex),
        )
    }

    pub fn initial_ideal(&self, w: &WeightVector) -> Result<InitialIdeal> {
        let gb = self.weighted_basis(w)?;
        let n = self.nvars;
        let weights = match gb.order() {
            TermOrder::Weighted { weights, .. } => weights.clone(),
            _ => unreachable!(),
        };
        let omega = |m: &Monomial| -> i128 {
            weights
                .iter()
                .zip(m.exps())
                .map(|(&a, &e)| a as i128 * e as i128)
                .sum()
        };
        let mut gens = Vec::with_capacity(gb.len());
        for g in gb.polys() {
            let top = g.terms().map(|(m, _)| omega(m)).max().unwrap();
            let mut f = ResiduePoly::zero(n);
            for (m, c) in g.terms().filter(|(m, _)| omega(m) == top) {
                f.add_term(Monomial::new(m.exps()[1..=n].iter().copied()), c.clone());
            }
            gens.push(f);
        }
        let residue = PolyIdeal::new(n, gens)?;
        let sat = saturate_by_variables(&residue)?;
        Ok(InitialIdeal {
            w: w.clone(),
            gb: canonical_basis(&sat)?,
        })
    }
}

fn integral(r: &Rational) -> Result<i64> {
    let v: Option<i64> = r.to_integer().try_into().ok();
    v.ok_or_else(|| Error::Input(format!("weight entry {r} is too large")))
}

/// The initial ideal `in_w(I)` as a saturated ideal of `Q[x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialIdeal {
    w: WeightVector,
    gb: ReducedGB,
}

impl InitialIdeal {
    pub fn weight(&self) -> &WeightVector {
        &self.w
    }

    /// Canonical (degrevlex) reduced basis.
    pub fn gb(&self) -> &ReducedGB {
        &self.gb
    }

    pub fn ideal(&self) -> PolyIdeal {
        self.gb.ideal()
    }

    pub fn polys(&self) -> Vec<ResiduePoly> {
        self.gb.polys()
    }

    /// True when the initial degeneration is empty.
    pub fn is_unit(&self) -> bool {
        self.gb.is_unit()
    }

    pub fn homogeneity_space(&self) -> HomogeneitySpace {
        homogeneity_of_basis(&self.gb)
    }

    /// Same ideal, ignoring the weight it was computed at.
    pub fn same_ideal(&self, other: &InitialIdeal) -> bool {
        self.gb == other.gb
    }

    /// Membership of a Laurent polynomial, using that monomials are units.
    pub fn contains_laurent(&self, f: &ResiduePoly) -> Result<bool> {
        let shift = f.min_exponents();
        let g = f.mul_monomial(&Monomial::one(f.nvars()).div(&shift));
        self.gb.contains(&g)
    }

    /// Generators in compact form, e.g. `(x-1)^2, y-1`.
    pub fn display_with(&self, names: &[String]) -> String {
        self.polys()
            .iter()
            .map(|g| compact_generator(g, names))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Writes `(x+b)^d` when `f` is a power of a monic linear univariate
/// polynomial and the expanded form otherwise; spaces are dropped.
pub fn compact_generator(f: &ResiduePoly, names: &[String]) -> String {
    if let Some(s) = as_linear_power(f, names) {
        return s;
    }
    f.fmt_with(names).replace(' ', "")
}

fn as_linear_power(f: &ResiduePoly, names: &[String]) -> Option<String> {
    let n = f.nvars();
    let var = (0..n).find(|&i| f.terms().any(|(m, _)| m.exps()[i] != 0))?;
    if f
        .terms()
        .any(|(m, _)| m.exps().iter().enumerate().any(|(i, &e)| i != var && e != 0))
    {
        return None;
    }
    let d = f.total_degree()?;
    let lead = f.coeff(&Monomial::new((0..n).map(|i| if i == var { d as i32 } else { 0 })));
    if d < 2 || lead.is_zero() {
        return None;
    }
    let next = f.coeff(&Monomial::new((0..n).map(|i| if i == var { d as i32 - 1 } else { 0 })));
    let b = next / (&lead * Rational::from_integer(d.into()));
    let x = ResiduePoly::var(n, var);
    let base = x.add(&ResiduePoly::constant(n, b.clone()));
    if base.pow(d as u32).scale(&lead) != *f {
        return None;
    }
    let inner = base.fmt_with(names).replace(' ', "");
    let scale = if lead.is_one() {
        String::new()
    } else {
        format!("{}*", crate::scalar::fmt_rational(&lead))
    };
    Some(format!("{scale}({inner})^{d}"))
}

pub fn initial_ideal(ideal: &TorusIdeal, w: &WeightVector) -> Result<InitialIdeal> {
    LiftedIdeal::new(ideal)?.initial_ideal(w)
}

/// Whether `w` lies in the tropical variety, i.e. the initial ideal is proper.
pub fn trop_member(ideal: &TorusIdeal, w: &WeightVector) -> Result<bool> {
    Ok(!initial_ideal(ideal, w)?.is_unit())
}

/// Initial ideal of a rational polynomial ideal for the trivial valuation.
pub fn trivial_initial_ideal(ideal: &PolyIdeal, delta: &WeightVector) -> Result<InitialIdeal> {
    initial_ideal(&TorusIdeal::from_residue(ideal), delta)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Equal,
    NotEqual,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::Equal => "equal",
            Verdict::NotEqual => "not equal",
            Verdict::Inconclusive => "inconclusive",
        };
        f.write_str(s)
    }
}

pub const DEFAULT_M_MAX: u32 = 16;

/// Decides whether the zero set of `j` on the torus equals that of the
/// candidate `j_red`: `j ⊆ j_red`, and a power of each generator of `j_red` of
/// exponent at most `m_max` lies in `j`. When the powers run out, differing
/// Krull dimensions still prove the supports differ.
pub fn support_equal(j: &InitialIdeal, j_red: &PolyIdeal, m_max: u32) -> Result<Verdict> {
    if m_max == 0 {
        return Err(Error::Input("m_max must be at least 1".into()));
    }
    let red = canonical_basis(&saturate_by_variables(j_red)?)?;
    for g in j.polys() {
        if !red.contains(&g)? {
            return Ok(Verdict::NotEqual);
        }
    }
    let jgb = j.gb();
    'gens: for g in red.polys() {
        let mut p = jgb.reduce(&g)?;
        for _ in 1..m_max {
            if p.is_zero() {
                continue 'gens;
            }
            p = jgb.reduce(&p.mul(&g))?;
        }
        if p.is_zero() {
            continue;
        }
        return Ok(if jgb.krull_dimension() != red.krull_dimension() {
            Verdict::NotEqual
        } else {
            Verdict::Inconclusive
        });
    }
    Ok(Verdict::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::initial_form;
    use crate::parse::{parse_poly, parse_poly_list};

    fn names(s: &str) -> Vec<String> {
        s.split(',').map(String::from).collect()
    }

    fn torus(gens: &str, vars: &str) -> TorusIdeal {
        let v = names(vars);
        TorusIdeal::new(v.len(), parse_poly_list(gens, &v).unwrap()).unwrap()
    }

    fn poly_ideal(gens: &str, vars: &str) -> PolyIdeal {
        let v = names(vars);
        let gs = parse_poly_list(gens, &v)
            .unwrap()
            .iter()
            .map(|g| g.map_coeffs(|c| c.as_rational().unwrap()))
            .collect();
        PolyIdeal::new(v.len(), gs).unwrap()
    }

    fn curve() -> TorusIdeal {
        torus(
            "(x-1)*t*(y-1-t*z) - t^2*(y-1)^2; \
             (x-1)*(x-1-t) - t^2*(y-1)*(y-1-t*z); \
             t*(y-1)*(x-1-t) - t^2*(y-1-t*z)^2",
            "x,y,z",
        )
    }

    fn assert_initial(i: &TorusIdeal, w: WeightVector, expected: &str, vars: &str) {
        let got = initial_ideal(i, &w).unwrap();
        let want = canonical_basis(&poly_ideal(expected, vars)).unwrap();
        assert_eq!(got.gb(), &want, "at {w}");
    }

    #[test]
    fn lift_examples() {
        let v = "x,y";
        let l = lift(&torus("x - 1 - t", v)).unwrap();
        let lifted = |g: &str| lift(&torus(g, v)).unwrap();
        let expect = |g: &str| canonical_basis(&poly_ideal(g, "t0,x,y")).unwrap().ideal();
        assert_eq!(l, expect("x - 1 - t0"));
        assert_eq!(lifted("x^-1*(y - 1)"), expect("y - 1"));
        assert_eq!(lifted("t*x - t"), expect("x - 1"));
        assert_eq!(lifted("(x - 1)/(1 + t)"), expect("x - 1"));
    }

    #[test]
    fn three_strata_of_the_curve() {
        let i = curve();
        let v = "x,y,z";
        assert_initial(&i, WeightVector::from_ints(&[0, 0, 1]), "(x-1)^2, y-1", v);
        assert_initial(&i, WeightVector::from_ints(&[0, 0, 0]), "(x-1)^2, (x-1)*z-(y-1)", v);
        assert_initial(&i, WeightVector::parse("0,0,-1/2").unwrap(), "x-1, (y-1)^2", v);
    }

    #[test]
    fn tropical_membership() {
        let i = curve();
        assert!(trop_member(&i, &WeightVector::from_ints(&[0, 0, 0])).unwrap());
        assert!(trop_member(&i, &WeightVector::parse("0,0,-1/2").unwrap()).unwrap());
        assert!(!trop_member(&i, &WeightVector::from_ints(&[0, 0, -2])).unwrap());
        let line = torus("x + y + t", "x,y");
        assert!(trop_member(&line, &WeightVector::from_ints(&[1, 1])).unwrap());
        assert!(trop_member(&line, &WeightVector::from_ints(&[1, 5])).unwrap());
        assert!(!trop_member(&line, &WeightVector::from_ints(&[0, 1])).unwrap());
        let unit = torus("1", "x,y");
        assert!(initial_ideal(&unit, &WeightVector::from_ints(&[3, -1])).unwrap().is_unit());
    }

    #[test]
    fn principal_ideals_match_initial_forms() {
        let v = names("x,y");
        for (g, w) in [("x + y + t", [1, 1]), ("x + y + t", [1, 2]), ("x^2 + t*x*y + t^3*y^2 + 1", [-1, -2])] {
            let f = parse_poly(g, &v).unwrap();
            let w = WeightVector::from_ints(&w);
            let expected = PolyIdeal::new(2, vec![initial_form(&f, &w).unwrap()]).unwrap();
            let got = initial_ideal(&TorusIdeal::new(2, vec![f]).unwrap(), &w).unwrap();
            assert_eq!(got.gb(), &canonical_basis(&saturate_by_variables(&expected).unwrap()).unwrap());
        }
    }

    #[test]
    fn support_comparison() {
        let i = curve();
        let red = poly_ideal("x-1, y-1", "x,y,z");
        for w in [[0, 0, 0], [0, 0, 1]] {
            let j = initial_ideal(&i, &WeightVector::from_ints(&w)).unwrap();
            assert_eq!(support_equal(&j, &red, 4).unwrap(), Verdict::Equal);
        }
        let j = trivial_initial_ideal(&poly_ideal("x-1", "x,y,z"), &WeightVector::zero(3)).unwrap();
        assert_eq!(support_equal(&j, &red, 4).unwrap(), Verdict::NotEqual);
        let j = trivial_initial_ideal(&poly_ideal("(x-1)^5, y-1", "x,y,z"), &WeightVector::zero(3)).unwrap();
        assert_eq!(support_equal(&j, &red, 4).unwrap(), Verdict::Inconclusive);
        assert_eq!(support_equal(&j, &red, 5).unwrap(), Verdict::Equal);
    }

    #[test]
    fn compact_printing() {
        let j = initial_ideal(&curve(), &WeightVector::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(j.display_with(&names("x,y,z")), "(x-1)^2, y-1");
        let j = initial_ideal(&curve(), &WeightVector::zero(3)).unwrap();
        assert_eq!(j.display_with(&names("x,y,z")), "(x-1)^2, x*y-x-y+1, (y-1)^2, x*z-y-z+1");
    }
}
