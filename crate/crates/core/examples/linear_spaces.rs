// Initial ideals of linear spaces stay linear, and the tropical linear space
// of a constant-coefficient row space is the Bergman fan of its column
// matroid with weights negated.
//
// ```bash
// cargo run --example linear_spaces
// ```

use std::fmt::Write;

use tropstrat::matroid::{parse_matrix, rowspace_ideal};
use tropstrat::{trop_member, verify_linear_initial, Matroid, Result, TScalar, WeightVector};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let a = parse_matrix("1 0 1 2\n0 1 1 -1")?;
    let m = Matroid::from_matrix(&a)?;
    let rows: Vec<Vec<TScalar>> = a.iter().map(|r| r.iter().cloned().map(TScalar::from).collect()).collect();
    let l = rowspace_ideal(&rows)?;
    let vars: Vec<String> = ["a", "b", "c", "d"].map(String::from).to_vec();
    writeln!(out, "L = {}, matroid {m}", l.fmt_with(&vars)).unwrap();
    let mut agree = 0;
    let mut total = 0;
    for i in -1..=1 {
        for j in -1..=1 {
            for k in -1..=1 {
                let w = WeightVector::from_ints(&[i, j, k, 0]);
                let neg = WeightVector::from_ints(&[-i, -j, -k, 0]);
                total += 1;
                if trop_member(&l, &w)? == m.bergman_member(&neg)? {
                    agree += 1;
                }
                if trop_member(&l, &w)? && !verify_linear_initial(&l, &w)? {
                    writeln!(out, "nonlinear initial ideal at {w}").unwrap();
                }
            }
        }
    }
    writeln!(out, "Trop(L) and the Bergman fan agree at {agree} of {total} weights").unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    match run_example() {
        Ok(s) => print!("{s}"),
        Err(e) => eprintln!("error: {e}"),
    }
}
