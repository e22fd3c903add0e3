// Arithmetic in Q(t) with the t-adic valuation, and initial forms of single
// polynomials.
//
// ```bash
// cargo run --example valued_scalars
// ```

use std::fmt::Write;

use tropstrat::{initial_form, parse_poly, parse_scalar, trop_eval, Result, TScalar, WeightVector};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    for s in ["(2*t + t^2)/t", "t^3", "(1+t)/(1-t)", "t^-2 * (3 + t)"] {
        let a = parse_scalar(s)?;
        let residue = match a.residue() {
            Ok(r) => r.to_string(),
            Err(e) => format!("undefined ({e})"),
        };
        writeln!(out, "{a}: val {:?}, residue {residue}", a.val()).unwrap();
    }
    let a = TScalar::split(3);
    writeln!(out, "split(3) = {a}, split(-2) * split(3) = {}", &TScalar::split(-2) * &a).unwrap();

    let vars: Vec<String> = ["x", "y", "z"].map(String::from).to_vec();
    let f = parse_poly("(x-1)*(y-1-t*z) - t*(y-1)^2", &vars)?;
    for w in ["0,0,0", "0,0,-1", "0,0,-2"] {
        let w = WeightVector::parse(w)?;
        let m = trop_eval(&f, &w).expect("nonzero");
        writeln!(out, "at {w}: min {m}, initial form {}", initial_form(&f, &w)?.fmt_with(&vars)).unwrap();
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
