//! Gröbner and topological dimensions at a weight, and stratification of a
//! ray of weights into segments of constant initial ideal.

use std::collections::BTreeSet;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{homogeneity_space, saturate_by_variables, PolyIdeal, ReducedGB};
use crate::initial::{support_equal, InitialIdeal, LiftedIdeal, TorusIdeal, Verdict, DEFAULT_M_MAX};
use crate::laurent::WeightVector;
use crate::scalar::{fmt_rational, int, Rational};

pub const DEFAULT_CAP: i64 = 10;

fn outside_check(initial: &InitialIdeal) -> Result<()> {
    if initial.is_unit() {
        Err(Error::OutsideTropicalVariety)
    } else {
        Ok(())
    }
}

/// Dimension of the Gröbner stratum through `w`: the dimension of the torus
/// of weights under which the initial ideal is homogeneous.
pub fn groebner_dim(ideal: &TorusIdeal, w: &WeightVector) -> Result<usize> {
    let j = crate::initial::initial_ideal(ideal, w)?;
    outside_check(&j)?;
    Ok(j.homogeneity_space().dim())
}

/// Dimension of the topological stratum through `w`, read off from a verified
/// candidate for the reduced initial ideal.
pub fn topological_dim(ideal: &TorusIdeal, w: &WeightVector, support: &PolyIdeal) -> Result<usize> {
    let j = crate::initial::initial_ideal(ideal, w)?;
    outside_check(&j)?;
    match support_equal(&j, support, DEFAULT_M_MAX)? {
        Verdict::Equal => support_dim(support),
        Verdict::NotEqual => Err(Error::SupportMismatch),
        Verdict::Inconclusive => Err(Error::SupportUnverified),
    }
}

fn support_dim(support: &PolyIdeal) -> Result<usize> {
    Ok(homogeneity_space(&saturate_by_variables(support)?)?.dim())
}

#[derive(Clone, Debug)]
pub struct StratumReport {
    pub w: WeightVector,
    pub initial: InitialIdeal,
    pub groebner_dim: usize,
    /// `None` when the support candidate could not be verified.
    pub topological_dim: Option<usize>,
    pub support_verdict: Verdict,
}

impl StratumReport {
    pub fn strictly_finer(&self) -> bool {
        matches!(self.topological_dim, Some(t) if self.groebner_dim < t)
    }
}

pub fn compare_stratifications(
    ideal: &TorusIdeal,
    w: &WeightVector,
    support: &PolyIdeal,
) -> Result<StratumReport> {
    compare_with_bound(ideal, w, support, DEFAULT_M_MAX)
}

pub fn compare_with_bound(
    ideal: &TorusIdeal,
    w: &WeightVector,
    support: &PolyIdeal,
    m_max: u32,
) -> Result<StratumReport> {
    let initial = crate::initial::initial_ideal(ideal, w)?;
    outside_check(&initial)?;
    let groebner_dim = initial.homogeneity_space().dim();
    let support_verdict = support_equal(&initial, support, m_max)?;
    let topological_dim = match support_verdict {
        Verdict::Equal => Some(support_dim(support)?),
        _ => None,
    };
    Ok(StratumReport {
        w: w.clone(),
        initial,
        groebner_dim,
        topological_dim,
        support_verdict,
    })
}

/// One piece of a ray: an open interval `lo < s < hi` or the single point
/// `lo = hi`.
#[derive(Clone, Debug)]
pub struct Segment {
    pub lo: Rational,
    pub hi: Rational,
    pub initial: InitialIdeal,
    /// `None` outside the tropical variety.
    pub groebner_dim: Option<usize>,
}

impl Segment {
    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn sample(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }
}

#[derive(Clone, Debug)]
pub struct RayStratification {
    pub base: WeightVector,
    pub direction: Vec<Rational>,
    pub lo: Rational,
    pub hi: Rational,
    /// Whether the lower or upper end was infinite and replaced by the cap.
    pub capped: (bool, bool),
    pub breakpoints: Vec<Rational>,
    pub segments: Vec<Segment>,
}

#[derive(Serialize)]
struct RangeJson {
    lo: String,
    hi: String,
}

#[derive(Serialize)]
struct SegmentJson {
    range: RangeJson,
    generators: Vec<String>,
    groebner_dim: Option<usize>,
}

#[derive(Serialize)]
struct RayJson {
    base: Vec<String>,
    direction: Vec<String>,
    interval: [String; 2],
    capped: [bool; 2],
    breakpoints: Vec<String>,
    segments: Vec<SegmentJson>,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(fmt_rational).collect()
}

impl RayStratification {
    pub fn weight_at(&self, s: &Rational) -> WeightVector {
        self.base.along(&self.direction, s)
    }

    /// The open segments only.
    pub fn open_segments(&self) -> impl Iterator<Item = &Segment> {
        self.segments.iter().filter(|s| !s.is_point())
    }

    pub fn to_json(&self, names: &[String]) -> serde_json::Value {
        let doc = RayJson {
            base: strings(&self.base.0),
            direction: strings(&self.direction),
            interval: [fmt_rational(&self.lo), fmt_rational(&self.hi)],
            capped: [self.capped.0, self.capped.1],
            breakpoints: strings(&self.breakpoints),
            segments: self
                .segments
                .iter()
                .map(|s| SegmentJson {
                    range: RangeJson {
                        lo: fmt_rational(&s.lo),
                        hi: fmt_rational(&s.hi),
                    },
                    generators: s.initial.polys().iter().map(|g| g.fmt_with(names)).collect(),
                    groebner_dim: s.groebner_dim,
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("serializable")
    }

    pub fn to_text(&self, names: &[String]) -> String {
        let mut out = format!(
            "ray {} + s*({}) for s in ({}, {})\n",
            self.base,
            strings(&self.direction).join(","),
            if self.capped.0 { format!("-inf capped at {}", fmt_rational(&self.lo)) } else { fmt_rational(&self.lo) },
            if self.capped.1 { format!("+inf capped at {}", fmt_rational(&self.hi)) } else { fmt_rational(&self.hi) },
        );
        out.push_str(&format!("breakpoints: [{}]\n", strings(&self.breakpoints).join(", ")));
        for s in &self.segments {
            let range = if s.is_point() {
                format!("{{{}}}", fmt_rational(&s.lo))
            } else {
                format!("({}, {})", fmt_rational(&s.lo), fmt_rational(&s.hi))
            };
            let dim = s.groebner_dim.map_or("-".to_string(), |d| d.to_string());
            out.push_str(&format!("{range}: <{}>  groebner_dim {dim}\n", s.initial.display_with(names)));
        }
        out
    }
}

/// Parameters where two terms of some basis element both attain the minimum
/// of `k + w(s)·u` along the ray, inside `(lo, hi)`.
fn tie_points(gb: &ReducedGB, base: &WeightVector, dir: &[Rational], lo: &Rational, hi: &Rational) -> Vec<Rational> {
    let n = base.len();
    let mut out = BTreeSet::new();
    for g in gb.polys() {
        // value(s) = a + s·d for each term t^k x^u h^e
        let lines: Vec<(Rational, Rational)> = g
            .terms()
            .map(|(m, _)| {
                let e = m.exps();
                let mut a = Rational::from_integer(e[0].into());
                let mut d = Rational::zero();
                for i in 0..n {
                    let ei = Rational::from_integer(e[i + 1].into());
                    a += &base.0[i] * &ei;
                    d += &dir[i] * &ei;
                }
                (a, d)
            })
            .collect();
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                let (a1, d1) = &lines[i];
                let (a2, d2) = &lines[j];
                if d1 == d2 {
                    continue;
                }
                let s = (a2 - a1) / (d1 - d2);
                if &s <= lo || &s >= hi {
                    continue;
                }
                let v = a1 + &s * d1;
                if lines.iter().all(|(a, d)| a + &s * d >= v) {
                    out.insert(s);
                }
            }
        }
    }
    out.into_iter().collect()
}

fn explore(
    lifted: &LiftedIdeal,
    base: &WeightVector,
    dir: &[Rational],
    lo: Rational,
    hi: Rational,
    points: &mut BTreeSet<Rational>,
) -> Result<()> {
    let mid = (&lo + &hi) / int(2);
    let gb = lifted.weighted_basis(&base.along(dir, &mid))?;
    let roots = tie_points(&gb, base, dir, &lo, &hi);
    if roots.is_empty() {
        return Ok(());
    }
    let mut cuts = Vec::with_capacity(roots.len() + 2);
    cuts.push(lo);
    for r in roots {
        points.insert(r.clone());
        cuts.push(r);
    }
    cuts.push(hi);
    for w in cuts.windows(2) {
        explore(lifted, base, dir, w[0].clone(), w[1].clone(), points)?;
    }
    Ok(())
}

/// Stratifies `{base + s·dir : lo < s < hi}`. A missing endpoint is infinite
/// and replaced by `∓cap`.
pub fn stratify_ray(
    ideal: &TorusIdeal,
    base: &WeightVector,
    dir: &[Rational],
    lo: Option<Rational>,
    hi: Option<Rational>,
    cap: &Rational,
) -> Result<RayStratification> {
    let lifted = LiftedIdeal::new(ideal)?;
    stratify_lifted(&lifted, base, dir, lo, hi, cap)
}

pub fn stratify_lifted(
    lifted: &LiftedIdeal,
    base: &WeightVector,
    dir: &[Rational],
    lo: Option<Rational>,
    hi: Option<Rational>,
    cap: &Rational,
) -> Result<RayStratification> {
    let n = lifted.nvars();
    for len in [base.len(), dir.len()] {
        if len != n {
            return Err(Error::DimensionMismatch { expected: n, found: len });
        }
    }
    if dir.iter().all(|d| d.is_zero()) {
        return Err(Error::DegenerateDirection);
    }
    let capped = (lo.is_none(), hi.is_none());
    let lo = lo.unwrap_or_else(|| -cap.clone());
    let hi = hi.unwrap_or_else(|| cap.clone());
    if lo >= hi {
        return Err(Error::Input(format!(
            "empty interval ({}, {})",
            fmt_rational(&lo),
            fmt_rational(&hi)
        )));
    }
    let mut points = BTreeSet::new();
    explore(lifted, base, dir, lo.clone(), hi.clone(), &mut points)?;

    let mut cuts: Vec<Rational> = vec![lo.clone()];
    cuts.extend(points.iter().cloned());
    cuts.push(hi.clone());
    let mut pieces: Vec<(Rational, Rational)> = Vec::new();
    for (k, w) in cuts.windows(2).enumerate() {
        if k > 0 {
            pieces.push((w[0].clone(), w[0].clone()));
        }
        pieces.push((w[0].clone(), w[1].clone()));
    }
    let classified: Vec<Segment> = pieces
        .into_par_iter()
        .map(|(a, b)| {
            let s = (&a + &b) / int(2);
            let initial = lifted.initial_ideal(&base.along(dir, &s))?;
            let groebner_dim = (!initial.is_unit()).then(|| initial.homogeneity_space().dim());
            Ok(Segment { lo: a, hi: b, initial, groebner_dim })
        })
        .collect::<Result<_>>()?;

    let segments = merge(classified);
    let breakpoints = segments
        .iter()
        .filter(|s| s.is_point())
        .map(|s| s.lo.clone())
        .collect();
    Ok(RayStratification {
        base: base.clone(),
        direction: dir.to_vec(),
        lo,
        hi,
        capped,
        breakpoints,
        segments,
    })
}

/// Drops candidate points whose ideal agrees with both neighbours and joins
/// the neighbours. The input alternates open, point, open, ...
fn merge(classified: Vec<Segment>) -> Vec<Segment> {
    let mut out: Vec<Segment> = Vec::new();
    let mut it = classified.into_iter();
    let Some(first) = it.next() else {
        return out;
    };
    out.push(first);
    while let (Some(point), Some(next)) = (it.next(), it.next()) {
        let prev = out.last_mut().unwrap();
        if prev.initial.same_ideal(&point.initial) && point.initial.same_ideal(&next.initial) {
            prev.hi = next.hi;
        } else {
            out.push(point);
            out.push(next);
        }
    }
    out
}

/// Convenience for the default cap.
pub fn default_cap() -> Rational {
    Rational::from_integer(DEFAULT_CAP.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::canonical_basis;
    use crate::parse::parse_poly_list;
    use crate::scalar::rat;

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

    fn same(seg: &Segment, gens: &str, vars: &str) -> bool {
        seg.initial.gb() == &canonical_basis(&poly_ideal(gens, vars)).unwrap()
    }

    #[test]
    fn line_along_the_diagonal() {
        let i = torus("x + y + t", "x,y");
        let r = stratify_ray(&i, &WeightVector::zero(2), &[int(1), int(1)], Some(int(0)), Some(int(3)), &default_cap()).unwrap();
        assert_eq!(r.breakpoints, vec![int(1)]);
        assert_eq!(r.segments.len(), 3);
        assert!(same(&r.segments[0], "x + y", "x,y"));
        assert!(same(&r.segments[1], "x + y + 1", "x,y"));
        assert!(r.segments[2].initial.is_unit());
        assert_eq!(r.segments[2].groebner_dim, None);
        assert_eq!(r.segments[0].groebner_dim, Some(1));
        assert_eq!(r.segments[1].groebner_dim, Some(0));
    }

    #[test]
    fn constant_along_an_irrelevant_direction() {
        let i = torus("x - 1", "x,y");
        let r = stratify_ray(&i, &WeightVector::zero(2), &[int(0), int(1)], Some(int(-5)), Some(int(5)), &default_cap()).unwrap();
        assert!(r.breakpoints.is_empty());
        assert_eq!(r.segments.len(), 1);
        assert!(same(&r.segments[0], "x - 1", "x,y"));
    }

    #[test]
    fn degenerate_inputs() {
        let i = torus("x - 1", "x,y");
        let e = stratify_ray(&i, &WeightVector::zero(2), &[int(0), int(0)], None, None, &default_cap());
        assert_eq!(e.unwrap_err(), Error::DegenerateDirection);
        let e = stratify_ray(&i, &WeightVector::zero(2), &[int(0), int(1)], Some(int(1)), Some(int(1)), &default_cap());
        assert!(matches!(e, Err(Error::Input(_))));
    }

    #[test]
    fn tropical_line_vertex() {
        let i = torus("x + y + t", "x,y");
        let rep = compare_stratifications(&i, &WeightVector::from_ints(&[1, 1]), &poly_ideal("x + y + 1", "x,y")).unwrap();
        assert_eq!((rep.groebner_dim, rep.topological_dim), (0, Some(0)));
        assert!(!rep.strictly_finer());
        let w = WeightVector::new(vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(groebner_dim(&i, &w).unwrap(), 1);
        let out = groebner_dim(&i, &WeightVector::from_ints(&[2, 2]));
        assert_eq!(out.unwrap_err(), Error::OutsideTropicalVariety);
    }

    #[test]
    fn hypersurface_topological_dim() {
        let i = torus("x + y + 1", "x,y,z");
        let d = topological_dim(&i, &WeightVector::zero(3), &poly_ideal("x + y + 1", "x,y,z")).unwrap();
        assert_eq!(d, 1);
        let e = topological_dim(&i, &WeightVector::zero(3), &poly_ideal("x - 1", "x,y,z"));
        assert_eq!(e.unwrap_err(), Error::SupportMismatch);
    }
}
