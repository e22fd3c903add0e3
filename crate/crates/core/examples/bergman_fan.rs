// Matroids, weight-minimal bases and Bergman fan membership.
//
// ```bash
// cargo run --example bergman_fan
// ```

use std::fmt::Write;

use tropstrat::matroid::{parse_matrix, parse_matroid};
use tropstrat::{Matroid, Result, WeightVector};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let u23 = parse_matroid("N=3; bases=12,13,23")?;
    for w in ["0,0,0", "1,0,0", "-1,0,0", "2,1,0"] {
        let w = WeightVector::parse(w)?;
        let mw = u23.restrict_to_min(&w)?;
        let loops: Vec<usize> = mw.loops().iter().map(|i| i + 1).collect();
        writeln!(out, "U(2,3) at {w}: {mw}, loops {loops:?}, in Bergman fan: {}", u23.bergman_member(&w)?).unwrap();
    }
    let m = Matroid::from_matrix(&parse_matrix("1 0 1 1\n0 1 1 0")?)?;
    writeln!(out, "column matroid: {m}, loops {:?}", m.loops()).unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    match run_example() {
        Ok(s) => print!("{s}"),
        Err(e) => eprintln!("error: {e}"),
    }
}
