//! Matroids given by their bases, weight-minimizing bases, loops, Bergman fan
//! membership and the linear initial ideal check.

use std::collections::HashSet;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::initial::{initial_ideal, TorusIdeal};
use crate::laurent::{LaurentPoly, Monomial, WeightVector};
use crate::linalg::{kernel, rank};
use crate::scalar::{parse_rational, Rational, TScalar};
use crate::unipoly::Field;

/// Largest ground set for which the exchange axiom is checked exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 12;

/// A matroid on `{0, …, n-1}`; each basis is a bitmask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<u64>,
}

fn exchange_holds(bases: &[u64]) -> bool {
    let set: HashSet<u64> = bases.iter().copied().collect();
    bases.iter().all(|&b1| {
        bases.iter().all(|&b2| {
            bits(b1 & !b2).all(|x| bits(b2 & !b1).any(|y| set.contains(&((b1 & !(1 << x)) | (1 << y)))))
        })
    })
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask & (1 << i) != 0)
}

/// All `k`-subsets of `{0, …, n-1}` as bitmasks, in increasing order.
fn subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    (0u64..1 << n).filter(move |m| m.count_ones() as usize == k)
}

impl Matroid {
    /// Validates rank consistency, the ground set and (for `n` up to
    /// [`EXHAUSTIVE_LIMIT`]) the basis exchange axiom.
    pub fn new(n: usize, bases: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n > 63 {
            return Err(Error::InvalidMatroid(format!("ground set of size {n} is too large")));
        }
        let mut bases: Vec<u64> = bases.into_iter().collect();
        bases.sort_unstable();
        bases.dedup();
        let Some(&first) = bases.first() else {
            return Err(Error::InvalidMatroid("no bases".into()));
        };
        let rank = first.count_ones() as usize;
        if bases.iter().any(|b| b.count_ones() as usize != rank) {
            return Err(Error::InvalidMatroid("bases of different sizes".into()));
        }
        if bases.iter().any(|b| b >> n != 0) {
            return Err(Error::InvalidMatroid("basis element outside the ground set".into()));
        }
        if n <= EXHAUSTIVE_LIMIT && !exchange_holds(&bases) {
            return Err(Error::InvalidMatroid("basis exchange fails".into()));
        }
        Ok(Matroid { n, rank, bases })
    }

    pub fn uniform(rank: usize, n: usize) -> Result<Self> {
        Matroid::new(n, subsets(n, rank))
    }

    /// Column matroid of a full-rank `r × n` matrix over any exact field.
    pub fn from_matrix<F: Field>(rows: &[Vec<F>]) -> Result<Self> {
        let r = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != n) {
            return Err(Error::Input("ragged matrix".into()));
        }
        let full = rank(rows);
        if full < r {
            return Err(Error::RankDeficient { rank: full, expected: r });
        }
        let bases = subsets(n, r).filter(|&mask| {
            let sub: Vec<Vec<F>> = rows
                .iter()
                .map(|row| bits(mask).map(|j| row[j].clone()).collect())
                .collect();
            rank(&sub) == r
        });
        Matroid::new(n, bases)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[u64] {
        &self.bases
    }

    pub fn is_basis(&self, mask: u64) -> bool {
        self.bases.binary_search(&mask).is_ok()
    }

    /// `w_B`, the total weight of a basis.
    pub fn basis_weight(w: &WeightVector, basis: u64) -> Rational {
        bits(basis).fold(Rational::zero(), |acc, i| acc + &w.0[i])
    }

    fn check(&self, w: &WeightVector) -> Result<()> {
        if w.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: w.len() });
        }
        Ok(())
    }

    /// `M_w`: the bases of minimal total weight.
    pub fn restrict_to_min(&self, w: &WeightVector) -> Result<Matroid> {
        self.check(w)?;
        let weights: Vec<Rational> = self.bases.iter().map(|&b| Self::basis_weight(w, b)).collect();
        let min = weights.iter().min().expect("nonempty").clone();
        let bases = self
            .bases
            .iter()
            .zip(&weights)
            .filter(|(_, v)| **v == min)
            .map(|(&b, _)| b)
            .collect();
        Ok(Matroid { n: self.n, rank: self.rank, bases })
    }

    /// Elements (0-based) lying in no basis.
    pub fn loops(&self) -> Vec<usize> {
        let union = self.bases.iter().fold(0u64, |acc, b| acc | b);
        (0..self.n).filter(|i| union & (1 << i) == 0).collect()
    }

    /// Whether `M_w` has no loops.
    pub fn bergman_member(&self, w: &WeightVector) -> Result<bool> {
        Ok(self.restrict_to_min(w)?.loops().is_empty())
    }

    pub fn satisfies_exchange(&self) -> bool {
        exchange_holds(&self.bases)
    }
}

fn format_basis(b: u64, n: usize) -> String {
    let elems: Vec<String> = bits(b).map(|i| (i + 1).to_string()).collect();
    if n <= 9 {
        elems.concat()
    } else {
        elems.join(".")
    }
}

impl fmt::Display for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bases: Vec<String> = self.bases.iter().map(|&b| format_basis(b, self.n)).collect();
        write!(f, "N={}; bases={}", self.n, bases.join(","))
    }
}

/// Parses a basis list such as `12,13,23` (1-based elements; on ground sets
/// larger than 9 elements are always separated by dots, e.g. `1.10`).
pub fn parse_bases(text: &str, n: usize) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for token in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let elems: Vec<&str> = if n > 9 {
            token.split('.').collect()
        } else {
            token.split("").filter(|s| !s.is_empty()).collect()
        };
        let mut mask = 0u64;
        for e in elems {
            let i: usize = e
                .parse()
                .map_err(|_| Error::InvalidMatroid(format!("bad basis element {e:?}")))?;
            if i == 0 || i > n {
                return Err(Error::InvalidMatroid(format!("element {i} outside 1..={n}")));
            }
            mask |= 1 << (i - 1);
        }
        out.push(mask);
    }
    Ok(out)
}

/// Reads `N=3; bases=12,13,23` or a matrix block with one row per line.
pub fn parse_matroid(text: &str) -> Result<Matroid> {
    let trimmed = text.trim();
    if trimmed.starts_with("N=") || trimmed.starts_with("N =") {
        let mut n = None;
        let mut bases = None;
        for part in trimmed.split(';') {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidMatroid(format!("expected key=value in {part:?}")))?;
            match k.trim() {
                "N" => {
                    n = Some(v.trim().parse::<usize>().map_err(|_| Error::InvalidMatroid(format!("bad N {v:?}")))?)
                }
                "bases" => bases = Some(v.to_string()),
                other => return Err(Error::InvalidMatroid(format!("unknown key {other:?}"))),
            }
        }
        let n = n.ok_or_else(|| Error::InvalidMatroid("missing N".into()))?;
        let bases = bases.ok_or_else(|| Error::InvalidMatroid("missing bases".into()))?;
        Matroid::new(n, parse_bases(&bases, n)?)
    } else {
        Matroid::from_matrix(&parse_matrix(trimmed)?)
    }
}

/// Rows separated by newlines or `;`, entries by whitespace or commas.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<Rational>>> {
    text.split(['\n', ';'])
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|line| {
            line.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(parse_rational)
                .collect()
        })
        .collect()
}

/// The ideal of linear forms vanishing on the row space of `rows`.
pub fn rowspace_ideal(rows: &[Vec<TScalar>]) -> Result<TorusIdeal> {
    let n = rows.first().map_or(0, Vec::len);
    let gens = kernel(rows, n)
        .into_iter()
        .map(|c| {
            LaurentPoly::from_terms(
                n,
                c.into_iter()
                    .enumerate()
                    .filter(|(_, a)| !a.is_zero())
                    .map(|(j, a)| (Monomial::var(n, j), a)),
            )
        })
        .collect();
    TorusIdeal::new(n, gens)
}

/// For an ideal generated by affine-linear polynomials, whether its initial
/// ideal at `w` again has a reduced basis of polynomials of degree at most 1.
pub fn verify_linear_initial(ideal: &TorusIdeal, w: &WeightVector) -> Result<bool> {
    for g in ideal.gens() {
        if !g.has_nonnegative_exponents() || g.total_degree().unwrap_or(0) > 1 {
            return Err(Error::NonlinearInput(format!(
                "generator {} is not affine-linear",
                g.fmt_with(&crate::laurent::default_names(ideal.nvars()))
            )));
        }
    }
    let j = initial_ideal(ideal, w)?;
    Ok(j.polys().iter().all(|g| g.total_degree().unwrap_or(0) <= 1))
}
