// Stratifying rays of weights by their initial ideals.
//
// ```bash
// cargo run --example ray_strata
// ```

use std::fmt::Write;

use tropstrat::curve::{curve_ideal, names};
use tropstrat::scalar::int;
use tropstrat::{parse_poly_list, stratify_ray, Result, TorusIdeal, WeightVector};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let vars = names();
    let r = stratify_ray(
        &curve_ideal(),
        &WeightVector::zero(3),
        &[int(0), int(0), int(1)],
        Some(int(-1)),
        None,
        &int(10),
    )?;
    out.push_str(&r.to_text(&vars));

    let xy: Vec<String> = ["x", "y"].map(String::from).to_vec();
    let line = TorusIdeal::new(2, parse_poly_list("x + y + t", &xy)?)?;
    let r = stratify_ray(&line, &WeightVector::zero(2), &[int(1), int(1)], Some(int(0)), Some(int(3)), &int(10))?;
    out.push_str(&r.to_text(&xy));
    writeln!(out, "{}", serde_json::to_string(&r.to_json(&xy)).unwrap()).unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    match run_example() {
        Ok(s) => print!("{s}"),
        Err(e) => eprintln!("error: {e}"),
    }
}
