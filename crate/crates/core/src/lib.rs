//! Initial degenerations of ideals in Laurent polynomial rings over the
//! valued field `Q(t)`, tropical varieties and their Gröbner and topological
//! strata along rays, matroids and Bergman fans, and formal series branches.
//!
//! All arithmetic is exact. Scalars are [`TScalar`] (reduced fractions of
//! polynomials in `t`, valued by the order of vanishing at `t = 0`), and
//! ideals are compared through reduced Gröbner bases.
//!
//! ```
//! use tropstrat::{initial_ideal, parse_poly_list, TorusIdeal, WeightVector};
//!
//! let vars = vec!["x".to_string(), "y".to_string()];
//! let line = TorusIdeal::new(2, parse_poly_list("x + y + t", &vars).unwrap()).unwrap();
//! let j = initial_ideal(&line, &WeightVector::from_ints(&[1, 1])).unwrap();
//! assert_eq!(j.display_with(&vars), "x+y+1");
//! ```

pub mod cli;
pub mod curve;
pub mod error;
pub mod groebner;
pub mod initial;
pub mod laurent;
pub mod linalg;
pub mod matroid;
pub mod parse;
pub mod scalar;
pub mod series;
pub mod strata;
pub mod unipoly;

pub use error::{Error, Result};
pub use groebner::{
    buchberger, canonical_basis, homogeneity_space, ideal_equal, member, normal_form, saturate, saturate_by_variable,
    saturate_by_variables, set_step_limit, HomogeneitySpace, PolyIdeal, ReducedGB,
};
pub use initial::{
    initial_ideal, lift, support_equal, trivial_initial_ideal, trop_member, InitialIdeal,
    LiftedIdeal, TorusIdeal, Verdict,
};
pub use laurent::{
    initial_form, trop_eval, LaurentPoly, Monomial, ResiduePoly, TermOrder, WeightVector,
};
pub use matroid::{verify_linear_initial, Matroid};
pub use parse::{parse_ideal_text, parse_poly, parse_poly_list, parse_scalar, parse_vars};
pub use scalar::{Rational, TScalar};
pub use series::{series_eval_poly, series_inv, series_sqrt, TruncatedSeries};
pub use strata::{
    compare_stratifications, groebner_dim, stratify_ray, topological_dim, RayStratification,
    StratumReport,
};
