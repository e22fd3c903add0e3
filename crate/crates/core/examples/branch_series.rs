// Power series in z for the two branches of the curve through x = y = 1,
// with a check that they satisfy every defining minor.
//
// ```bash
// cargo run --example branch_series
// ```

use std::fmt::Write;

use tropstrat::curve::{branch_series, verify_branch, Sign};
use tropstrat::{series_sqrt, Result, TScalar, TruncatedSeries};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let s = TruncatedSeries::new(vec![TScalar::from_int(1), TScalar::from_int(1)], 6);
    writeln!(out, "sqrt(1 + z) = {}", series_sqrt(&s)?).unwrap();
    for sign in [Sign::Plus, Sign::Minus] {
        let (y, x) = branch_series(sign, 10)?;
        writeln!(out, "{sign:?} branch\n  y = {y}\n  x = {x}\n  on curve: {}", verify_branch(sign, 10)?).unwrap();
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    match run_example() {
        Ok(s) => print!("{s}"),
        Err(e) => eprintln!("error: {e}"),
    }
}
