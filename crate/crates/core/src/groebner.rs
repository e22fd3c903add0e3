//! Buchberger's algorithm over Q: normal forms, reduced bases, membership,
//! saturation, ideal equality and homogeneity spaces.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{Monomial, ResiduePoly, TermOrder};
use crate::linalg::integer_kernel;
use crate::scalar::Rational;

pub const DEFAULT_STEP_LIMIT: u64 = 1_000_000;

static STEP_LIMIT: AtomicU64 = AtomicU64::new(DEFAULT_STEP_LIMIT);

/// Sets the maximal number of reduction steps any single Gröbner basis
/// computation may take before failing with [`Error::StepLimitExceeded`].
pub fn set_step_limit(limit: u64) {
    STEP_LIMIT.store(limit, AtomicOrdering::Relaxed);
}

pub fn step_limit() -> u64 {
    STEP_LIMIT.load(AtomicOrdering::Relaxed)
}

pub(crate) struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    pub(crate) fn new() -> Self {
        Budget {
            used: 0,
            limit: step_limit(),
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::StepLimitExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Polynomial with terms sorted strictly decreasing for some term order that
/// the caller keeps track of.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Poly {
    terms: Vec<(Monomial, Rational)>,
}

impl Poly {
    pub(crate) fn from_residue(f: &ResiduePoly, order: &TermOrder) -> Self {
        let mut terms: Vec<_> = f.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly { terms }
    }

    pub(crate) fn to_residue(&self, nvars: usize) -> ResiduePoly {
        ResiduePoly::from_terms(nvars, self.terms.iter().cloned())
    }

    fn one(nvars: usize) -> Self {
        Poly {
            terms: vec![(Monomial::one(nvars), Rational::one())],
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &Rational {
        &self.terms[0].1
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// `self - c * m * g`
    fn sub_mul(&self, c: &Rational, m: &Monomial, g: &Poly, order: &TermOrder) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let (bm, bc) = b.next().unwrap();
                    out.push((bm, -bc));
                }
                Ordering::Equal => {
                    let (am, ac) = a.next().unwrap();
                    let (_, bc) = b.next().unwrap();
                    let s = ac - bc;
                    if !s.is_zero() {
                        out.push((am.clone(), s));
                    }
                }
            }
        }
        Poly { terms: out }
    }

    fn spoly(&self, other: &Poly, order: &TermOrder) -> Poly {
        let l = self.lm().lcm(other.lm());
        let zero = Poly { terms: Vec::new() };
        let a = zero.sub_mul(&(-Rational::one() / self.lc()), &l.div(self.lm()), self, order);
        a.sub_mul(&(Rational::one() / other.lc()), &l.div(other.lm()), other, order)
    }
}

/// Full normal form of `f` modulo `basis`.
fn reduce_full(f: Poly, basis: &[Poly], order: &TermOrder, budget: &mut Budget) -> Result<Poly> {
    let mut f = f;
    let mut rem = Vec::new();
    // Terms before `start` have already been moved to `rem`.
    let mut start = 0;
    while start < f.terms.len() {
        let (m, c) = &f.terms[start];
        match basis.iter().find(|g| g.lm().divides(m)) {
            Some(g) => {
                budget.tick()?;
                let q = m.div(g.lm());
                let coef = c / g.lc();
                f.terms.drain(..start);
                start = 0;
                f = f.sub_mul(&coef, &q, g, order);
            }
            None => {
                rem.push(f.terms[start].clone());
                start += 1;
            }
        }
    }
    Ok(Poly { terms: rem })
}

/// Polynomial with integer coefficients, kept primitive with a positive
/// leading coefficient. Buchberger's algorithm runs on these to avoid a gcd
/// per coefficient operation.
#[derive(Clone, Debug)]
struct IPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl IPoly {
    fn from_poly(p: &Poly) -> Self {
        let den = crate::scalar::common_denominator(p.terms.iter().map(|(_, c)| c));
        let terms = p
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), (c * Rational::from_integer(den.clone())).to_integer()))
            .collect();
        let mut out = IPoly { terms };
        out.make_primitive();
        out
    }

    fn to_monic(&self) -> Poly {
        let lc = Rational::from_integer(self.terms[0].1.clone());
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), Rational::from_integer(c.clone()) / &lc))
                .collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    fn degree(&self) -> i64 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    fn make_primitive(&mut self) {
        let g = content(self.terms.iter().map(|(_, c)| c));
        let flip = self.terms.first().is_some_and(|(_, c)| c.is_negative());
        let g = if flip { -g } else { g };
        if !g.is_one() && !g.is_zero() {
            for (_, c) in self.terms.iter_mut() {
                *c = &*c / &g;
            }
        }
    }

    /// `a * self[start..] - b * m * g`
    fn combine(&self, start: usize, a: &BigInt, b: &BigInt, m: &Monomial, g: &IPoly, order: &TermOrder) -> IPoly {
        let mut out = Vec::with_capacity(self.terms.len() - start + g.terms.len());
        let mut x = self.terms[start..].iter().peekable();
        let mut y = g.terms.iter().map(|(gm, gc)| (gm.mul(m), gc)).peekable();
        let scale = |c: &BigInt| if a.is_one() { c.clone() } else { a * c };
        loop {
            let ord = match (x.peek(), y.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(p), Some(q)) => order.cmp(&p.0, &q.0),
            };
            match ord {
                Ordering::Greater => {
                    let (pm, pc) = x.next().unwrap();
                    out.push((pm.clone(), scale(pc)));
                }
                Ordering::Less => {
                    let (qm, qc) = y.next().unwrap();
                    out.push((qm, -(b * qc)));
                }
                Ordering::Equal => {
                    let (pm, pc) = x.next().unwrap();
                    let (_, qc) = y.next().unwrap();
                    let v = scale(pc) - b * qc;
                    if !v.is_zero() {
                        out.push((pm.clone(), v));
                    }
                }
            }
        }
        IPoly { terms: out }
    }

    fn spoly(&self, other: &IPoly, order: &TermOrder) -> IPoly {
        let l = self.lm().lcm(other.lm());
        let g = self.lc().gcd(other.lc());
        let a = other.lc() / &g;
        let b = self.lc() / &g;
        let lifted = IPoly {
            terms: self.terms.iter().map(|(m, c)| (m.mul(&l.div(self.lm())), c.clone())).collect(),
        };
        lifted.combine(0, &a, &b, &l.div(other.lm()), other, order)
    }
}

fn content<'a>(coeffs: impl Iterator<Item = &'a BigInt>) -> BigInt {
    let mut g = BigInt::zero();
    for c in coeffs {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Normal form up to a nonzero integer factor, returned primitive.
fn reduce_int(f: IPoly, basis: &[IPoly], order: &TermOrder, budget: &mut Budget) -> Result<IPoly> {
    let mut f = f;
    let mut rem: Vec<(Monomial, BigInt)> = Vec::new();
    let mut start = 0;
    let mut steps = 0u32;
    while start < f.terms.len() {
        let (m, c) = &f.terms[start];
        match basis.iter().find(|g| g.lm().divides(m)) {
            Some(g) => {
                budget.tick()?;
                let q = m.div(g.lm());
                let h = c.gcd(g.lc());
                let a = g.lc() / &h;
                let b = c / &h;
                if !a.is_one() {
                    for (_, r) in rem.iter_mut() {
                        *r = &*r * &a;
                    }
                }
                f = f.combine(start, &a, &b, &q, g, order);
                start = 0;
                steps += 1;
                if steps % 8 == 0 {
                    let g = content(rem.iter().chain(&f.terms).map(|(_, c)| c));
                    if !g.is_one() && !g.is_zero() {
                        for (_, c) in rem.iter_mut().chain(f.terms.iter_mut()) {
                            *c = &*c / &g;
                        }
                    }
                }
            }
            None => {
                rem.push(f.terms[start].clone());
                start += 1;
            }
        }
    }
    let mut out = IPoly { terms: rem };
    out.make_primitive();
    Ok(out)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: i64,
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub(crate) fn groebner_polys(
    gens: Vec<Poly>,
    nvars: usize,
    order: &TermOrder,
    budget: &mut Budget,
) -> Result<Vec<Poly>> {
    let mut basis: Vec<IPoly> = Vec::new();
    let mut sugar: Vec<i64> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let mut gens: Vec<IPoly> = gens.iter().filter(|g| !g.is_zero()).map(IPoly::from_poly).collect();
    gens.sort_by_key(IPoly::degree);
    let mut queue: Vec<(IPoly, i64)> = gens
        .into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let d = g.degree();
            (g, d)
        })
        .collect();
    queue.reverse();

    loop {
        // Feed input generators before any pair of higher sugar.
        let next_pair = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.sugar.cmp(&b.sugar).then_with(|| order.cmp(&a.lcm, &b.lcm)))
            .map(|(k, p)| (k, p.sugar));
        let (candidate, s) = match (queue.last(), next_pair) {
            (Some((_, gs)), Some((_, ps))) if *gs <= ps => {
                let (g, gs) = queue.pop().unwrap();
                (g, gs)
            }
            (Some(_), None) => queue.pop().unwrap(),
            (_, Some((k, _))) => {
                let p = pairs.swap_remove(k);
                pending.remove(&(p.i, p.j));
                let (bi, bj) = (&basis[p.i], &basis[p.j]);
                if bi.lm().coprime(bj.lm()) {
                    continue;
                }
                let chain = (0..basis.len()).any(|k| {
                    k != p.i
                        && k != p.j
                        && basis[k].lm().divides(&p.lcm)
                        && !pending.contains(&(p.i.min(k), p.i.max(k)))
                        && !pending.contains(&(p.j.min(k), p.j.max(k)))
                });
                if chain {
                    continue;
                }
                (bi.spoly(bj, order), p.sugar)
            }
            (None, None) => break,
        };
        let h = reduce_int(candidate, &basis, order, budget)?;
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![Poly::one(nvars)]);
        }
        let n = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let lcm = g.lm().lcm(h.lm());
            let d = lcm.degree();
            let ps = (sugar[i] + d - g.lm().degree()).max(s + d - h.lm().degree());
            pairs.push(Pair {
                i,
                j: n,
                lcm,
                sugar: ps,
            });
            pending.insert((i, n));
        }
        basis.push(h);
        sugar.push(s);
    }
    reduce_basis(basis, order, budget)
}

fn reduce_basis(mut basis: Vec<IPoly>, order: &TermOrder, budget: &mut Budget) -> Result<Vec<Poly>> {
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let mut minimal: Vec<IPoly> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h.lm().divides(g.lm())) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<IPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        out.push(reduce_int(minimal[i].clone(), &others, order, budget)?.to_monic());
    }
    out.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    Ok(out)
}

/// Ideal of a polynomial ring over Q given by generators with nonnegative
/// exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyIdeal {
    nvars: usize,
    gens: Vec<ResiduePoly>,
}

impl PolyIdeal {
    /// Zero generators are dropped. Fails on negative exponents.
    pub fn new(nvars: usize, gens: Vec<ResiduePoly>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: g.nvars(),
                });
            }
            if !g.has_nonnegative_exponents() {
                return Err(Error::NegativeExponent);
            }
        }
        Ok(PolyIdeal {
            nvars,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[ResiduePoly] {
        &self.gens
    }

    pub fn unit(nvars: usize) -> Self {
        PolyIdeal {
            nvars,
            gens: vec![ResiduePoly::one(nvars)],
        }
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| g.fmt_with(names)).collect();
        format!("<{}>", parts.join(", "))
    }
}

/// The reduced Gröbner basis of an ideal for a fixed term order. Elements are
/// monic and sorted by decreasing leading monomial, so two bases of the same
/// ideal and order compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGB {
    nvars: usize,
    order: TermOrder,
    elements: Vec<Poly>,
}

impl ReducedGB {
    pub(crate) fn from_polys(nvars: usize, order: TermOrder, elements: Vec<Poly>) -> Self {
        ReducedGB {
            nvars,
            order,
            elements,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn polys(&self) -> Vec<ResiduePoly> {
        self.elements.iter().map(|g| g.to_residue(self.nvars)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.lm().clone()).collect()
    }

    pub fn ideal(&self) -> PolyIdeal {
        PolyIdeal {
            nvars: self.nvars,
            gens: self.polys(),
        }
    }

    pub fn reduce(&self, f: &ResiduePoly) -> Result<ResiduePoly> {
        if !f.has_nonnegative_exponents() {
            return Err(Error::NegativeExponent);
        }
        let p = Poly::from_residue(f, &self.order);
        let r = reduce_full(p, &self.elements, &self.order, &mut Budget::new())?;
        Ok(r.to_residue(self.nvars))
    }

    pub fn contains(&self, f: &ResiduePoly) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> Result<bool> {
        let mut budget = Budget::new();
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let s = self.elements[i].spoly(&self.elements[j], &self.order);
                if !reduce_full(s, &self.elements, &self.order, &mut budget)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Monic elements, and no term of any element divisible by the leading
    /// monomial of another.
    pub fn is_reduced(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, g)| {
            g.lc().is_one()
                && self.elements.iter().enumerate().all(|(j, h)| {
                    i == j || g.terms.iter().all(|(m, _)| !h.lm().divides(m))
                })
        })
    }

    /// Krull dimension of the quotient ring, `None` for the unit ideal.
    pub fn krull_dimension(&self) -> Option<usize> {
        if self.is_unit() {
            return None;
        }
        let lms = self.leading_monomials();
        let n = self.nvars;
        (0u64..1 << n)
            .filter(|&mask| {
                lms.iter().all(|m| {
                    m.exps()
                        .iter()
                        .enumerate()
                        .any(|(i, &e)| e > 0 && mask & (1 << i) == 0)
                })
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        self.ideal().fmt_with(names)
    }
}

pub fn buchberger(ideal: &PolyIdeal, order: &TermOrder) -> Result<ReducedGB> {
    let gens = ideal
        .gens
        .iter()
        .map(|g| Poly::from_residue(g, order))
        .collect();
    let elements = groebner_polys(gens, ideal.nvars, order, &mut Budget::new())?;
    Ok(ReducedGB::from_polys(ideal.nvars, order.clone(), elements))
}

/// Canonical basis used for comparing ideals.
pub fn canonical_basis(ideal: &PolyIdeal) -> Result<ReducedGB> {
    buchberger(ideal, &TermOrder::DegRevLex)
}

pub fn normal_form(f: &ResiduePoly, gb: &ReducedGB) -> Result<ResiduePoly> {
    gb.reduce(f)
}

pub fn member(f: &ResiduePoly, ideal: &PolyIdeal) -> Result<bool> {
    canonical_basis(ideal)?.contains(f)
}

pub fn ideal_equal(a: &PolyIdeal, b: &PolyIdeal) -> Result<bool> {
    if a.nvars != b.nvars {
        return Err(Error::DimensionMismatch {
            expected: a.nvars,
            found: b.nvars,
        });
    }
    Ok(canonical_basis(a)? == canonical_basis(b)?)
}

fn prepend_var(f: &ResiduePoly, exp: i32) -> ResiduePoly {
    ResiduePoly::from_terms(
        f.nvars() + 1,
        f.terms()
            .map(|(m, c)| (Monomial::new(std::iter::once(exp).chain(m.exps().iter().copied())), c.clone())),
    )
}

/// `(I : g^∞)`, via elimination of an auxiliary variable `s` from
/// `I + <s g - 1>`. The returned generators form the degrevlex reduced basis.
pub fn saturate(ideal: &PolyIdeal, g: &ResiduePoly) -> Result<PolyIdeal> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = ideal.nvars;
    let mut gens: Vec<ResiduePoly> = ideal.gens.iter().map(|f| prepend_var(f, 0)).collect();
    let sg = prepend_var(g, 1);
    gens.push(sg.sub(&ResiduePoly::one(n + 1)));
    let order = TermOrder::elimination(n + 1, 1);
    let big = PolyIdeal { nvars: n + 1, gens };
    let gb = buchberger(&big, &order)?;
    let kept = gb
        .polys()
        .into_iter()
        .filter(|f| f.terms().all(|(m, _)| m.exps()[0] == 0))
        .map(|f| {
            ResiduePoly::from_terms(
                n,
                f.terms()
                    .map(|(m, c)| (Monomial::new(m.exps()[1..].iter().copied()), c.clone())),
            )
        })
        .collect();
    Ok(PolyIdeal { nvars: n, gens: kept })
}

/// `(I : x_i^∞)`. The generators are homogenized by an extra variable and
/// ordered so that `x_i` is the last degrevlex variable; for a homogeneous
/// ideal the saturation is then read off the basis by dividing out powers of
/// `x_i`. Setting the extra variable to 1 gives back the affine saturation.
pub fn saturate_by_variable(ideal: &PolyIdeal, i: usize) -> Result<PolyIdeal> {
    let n = ideal.nvars;
    if i >= n {
        return Err(Error::DimensionMismatch { expected: n, found: i + 1 });
    }
    // Layout: the other variables in order, then h, then x_i.
    let gens = ideal
        .gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let d = g.total_degree().unwrap_or(0);
            ResiduePoly::from_terms(
                n + 1,
                g.terms().map(|(m, c)| {
                    let e = m.exps();
                    let h = (d - m.degree()) as i32;
                    let exps = e[..i].iter().chain(&e[i + 1..]).copied().chain([h, e[i]]);
                    (Monomial::new(exps), c.clone())
                }),
            )
        })
        .collect();
    let gb = buchberger(&PolyIdeal { nvars: n + 1, gens }, &TermOrder::DegRevLex)?;
    let out = gb
        .polys()
        .into_iter()
        .map(|g| {
            let k = g.terms().map(|(m, _)| m.exps()[n]).min().unwrap_or(0);
            let mut f = ResiduePoly::zero(n);
            for (m, c) in g.terms() {
                let e = m.exps();
                let mut exps: Vec<i32> = e[..n - 1].to_vec();
                exps.insert(i, e[n] - k);
                f.add_term(Monomial::new(exps), c.clone());
            }
            f
        })
        .collect();
    Ok(PolyIdeal { nvars: n, gens: out })
}

/// Saturation by the product of all variables, one variable at a time.
pub fn saturate_by_variables(ideal: &PolyIdeal) -> Result<PolyIdeal> {
    (0..ideal.nvars).try_fold(ideal.clone(), |acc, i| saturate_by_variable(&acc, i))
}

/// Rational weights `δ` for which an ideal is `δ`-homogeneous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneitySpace {
    nvars: usize,
    basis: Vec<Vec<Rational>>,
}

impl HomogeneitySpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut rows: Vec<Vec<Rational>> = self.basis.clone();
        let r = crate::linalg::rank(&rows);
        rows.push(v.to_vec());
        crate::linalg::rank(&rows) == r
    }
}

pub(crate) fn homogeneity_of_basis(gb: &ReducedGB) -> HomogeneitySpace {
    let n = gb.nvars;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for g in &gb.elements {
        let base = &g.terms[0].0;
        for (m, _) in &g.terms[1..] {
            rows.push(
                m.exps()
                    .iter()
                    .zip(base.exps())
                    .map(|(a, b)| BigInt::from(a - b))
                    .collect(),
            );
        }
    }
    let basis = integer_kernel(&rows, n)
        .into_iter()
        .map(|v| v.into_iter().map(Rational::from_integer).collect())
        .collect();
    HomogeneitySpace { nvars: n, basis }
}

pub fn homogeneity_space(ideal: &PolyIdeal) -> Result<HomogeneitySpace> {
    Ok(homogeneity_of_basis(&canonical_basis(ideal)?))
}

/// Whether every element of `gb` is homogeneous for the weight `delta`.
pub fn is_homogeneous_for(gb: &ReducedGB, delta: &[Rational]) -> bool {
    let dot = |m: &Monomial| -> Rational {
        m.exps()
            .iter()
            .zip(delta)
            .fold(Rational::zero(), |acc, (&e, d)| acc + d * Rational::from_integer(e.into()))
    };
    gb.elements.iter().all(|g| {
        let w0 = dot(&g.terms[0].0);
        g.terms.iter().all(|(m, _)| dot(m) == w0)
    })
}
