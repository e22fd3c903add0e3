use std::sync::OnceLock;

use proptest::prelude::*;

use tropstrat::curve::{curve_ideal, residue_ideal};
use tropstrat::groebner::is_homogeneous_for;
use tropstrat::initial::support_equal;
use tropstrat::laurent::Monomial;
use tropstrat::scalar::{int, rat};
use tropstrat::{
    canonical_basis, groebner_dim, homogeneity_space, ideal_equal, initial_form, initial_ideal, saturate,
    saturate_by_variables, stratify_ray, topological_dim, trivial_initial_ideal, trop_member, LaurentPoly, PolyIdeal,
    RayStratification, ResiduePoly, TScalar, TorusIdeal, Verdict, WeightVector,
};

fn arb_residue(n: usize, max_exp: i32) -> impl Strategy<Value = ResiduePoly> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, n), -3i64..=3), 1..=3).prop_map(move |terms| {
        ResiduePoly::from_terms(n, terms.into_iter().map(|(e, c)| (Monomial::new(e), int(c))))
    })
}

fn arb_ideal(n: usize) -> impl Strategy<Value = PolyIdeal> {
    prop::collection::vec(arb_residue(n, 2), 1..=3)
        .prop_filter("some nonzero generator", |g| g.iter().any(|f| !f.is_zero()))
        .prop_map(move |gens| PolyIdeal::new(n, gens).unwrap())
}

/// Laurent polynomial in two variables with coefficients `a + b t` and
/// exponents in `[-1, 2]`.
fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-1i32..=2, -1i32..=2), -2i64..=2, -2i64..=2), 2..=4).prop_map(|terms| {
        LaurentPoly::from_terms(
            2,
            terms.into_iter().map(|((a, b), c0, c1)| {
                let c = &TScalar::from_int(c0) + &(&TScalar::from_int(c1) * &TScalar::t());
                (Monomial::new([a, b]), c)
            }),
        )
    })
}

fn curve_ray() -> &'static RayStratification {
    static RAY: OnceLock<RayStratification> = OnceLock::new();
    RAY.get_or_init(|| {
        stratify_ray(&curve_ideal(), &WeightVector::zero(3), &[int(0), int(0), int(1)], Some(int(-1)), None, &int(10))
            .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generators_reduce_to_zero(i in arb_ideal(3)) {
        let gb = canonical_basis(&i).unwrap();
        prop_assert!(gb.satisfies_buchberger_criterion().unwrap());
        prop_assert!(gb.is_reduced());
        for g in i.gens() {
            prop_assert!(gb.reduce(g).unwrap().is_zero());
        }
    }

    #[test]
    fn saturation_is_monotone_and_idempotent(i in arb_ideal(2), g in arb_residue(2, 1)) {
        prop_assume!(!g.is_zero());
        let s = saturate(&i, &g).unwrap();
        let sb = canonical_basis(&s).unwrap();
        for f in i.gens() {
            prop_assert!(sb.contains(f).unwrap());
        }
        prop_assert!(ideal_equal(&saturate(&s, &g).unwrap(), &s).unwrap());
        let v = saturate_by_variables(&i).unwrap();
        prop_assert!(ideal_equal(&saturate_by_variables(&v).unwrap(), &v).unwrap());
    }

    #[test]
    fn homogeneity_basis_vectors_grade_the_basis(i in arb_ideal(3)) {
        let space = homogeneity_space(&i).unwrap();
        let gb = canonical_basis(&i).unwrap();
        for delta in space.basis() {
            prop_assert!(is_homogeneous_for(&gb, delta));
        }
    }

    #[test]
    fn initial_forms_lie_in_the_initial_ideal(
        f in arb_laurent(),
        g in arb_laurent(),
        w in prop::collection::vec(-4i64..=4, 2),
        d in 1i64..=3,
    ) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let ideal = TorusIdeal::new(2, vec![f.clone(), g.clone()]).unwrap();
        let w = WeightVector::new(w.iter().map(|&v| rat(v, d)).collect());
        let j = initial_ideal(&ideal, &w).unwrap();
        for h in [&f, &g] {
            prop_assert!(j.contains_laurent(&initial_form(h, &w).unwrap()).unwrap());
        }
    }

    #[test]
    fn unit_ideal_stays_unit(w in prop::collection::vec(-5i64..=5, 3)) {
        let one = TorusIdeal::new(3, vec![LaurentPoly::one(3)]).unwrap();
        let w = WeightVector::from_ints(&w);
        prop_assert!(initial_ideal(&one, &w).unwrap().is_unit());
        prop_assert!(!trop_member(&one, &w).unwrap());
    }

    #[test]
    fn initial_of_initial_for_hypersurfaces(
        f in arb_laurent(),
        w in prop::collection::vec(-2i64..=2, 2),
        delta in prop::collection::vec(-3i64..=3, 2),
    ) {
        prop_assume!(!f.is_zero());
        let ideal = TorusIdeal::new(2, vec![f]).unwrap();
        let w = WeightVector::from_ints(&w);
        // Small enough to stay inside the cone of w for these exponents.
        let delta = WeightVector::new(delta.iter().map(|&v| rat(v, 1000)).collect());
        let outer = initial_ideal(&ideal, &w).unwrap();
        let nested = trivial_initial_ideal(&outer.ideal(), &delta).unwrap();
        let direct = initial_ideal(&ideal, &w.add(&delta)).unwrap();
        prop_assert!(ideal_equal(&direct.ideal(), &nested.ideal()).unwrap());
    }

    #[test]
    fn open_segments_have_one_initial_ideal(p in 1i64..=1000, q in 1i64..=1000, k in 0usize..2) {
        let ray = curve_ray();
        let seg = ray.open_segments().nth(k).unwrap();
        // A rational strictly inside (lo, hi).
        let frac = rat(p.min(q), p.max(q) + 1);
        let s = &seg.lo + &(&(&seg.hi - &seg.lo) * &frac);
        prop_assume!(s > seg.lo && s < seg.hi);
        let j = initial_ideal(&curve_ideal(), &ray.weight_at(&s)).unwrap();
        prop_assert!(j.same_ideal(&seg.initial));
    }
}

#[test]
fn breakpoints_differ_from_a_neighbour() {
    let ray = curve_ray();
    for (i, seg) in ray.segments.iter().enumerate().filter(|(_, s)| s.is_point()) {
        let before = &ray.segments[i - 1].initial;
        let after = &ray.segments[i + 1].initial;
        assert!(!seg.initial.same_ideal(before) || !seg.initial.same_ideal(after));
    }
}

#[test]
fn refinement_and_support_along_the_ray() {
    let ideal = curve_ideal();
    let support = residue_ideal("x-1, y-1");
    for s in ["-3/4", "-1/2", "-1/10", "0", "1/10", "1", "7"] {
        let w = WeightVector::new(vec![int(0), int(0), tropstrat::scalar::parse_rational(s).unwrap()]);
        let j = initial_ideal(&ideal, &w).unwrap();
        assert_eq!(support_equal(&j, &support, 16).unwrap(), Verdict::Equal, "at {s}");
        let top = topological_dim(&ideal, &w, &support).unwrap();
        assert!(groebner_dim(&ideal, &w).unwrap() <= top, "at {s}");
        // The support is a single coset of a one-dimensional subtorus.
        assert_eq!(canonical_basis(&support).unwrap().krull_dimension(), Some(1));
    }
}
