// Orders of vanishing of the curve's coordinate functions at the points
// where the parametrization leaves the torus.
//
// ```bash
// cargo run --example boundary_points
// ```

use std::fmt::Write;

use tropstrat::curve::{boundary_points, divisor_orders, parametrization, parametrization_on_curve, puncture_trop};
use tropstrat::Result;

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let [x, y, z] = parametrization();
    writeln!(out, "x = {}\ny = {}\nz = {}", x.fmt_var("u"), y.fmt_var("u"), z.fmt_var("u")).unwrap();
    writeln!(out, "satisfies the minors: {}", parametrization_on_curve()?).unwrap();
    for (point, _) in boundary_points() {
        let ords = divisor_orders(&point)?;
        let image = match puncture_trop(&point) {
            Ok([a, b, c]) => format!("({a}, {b}, {c})"),
            Err(_) => "needs a Puiseux expansion".to_string(),
        };
        writeln!(out, "{:<14} orders {ords:?}, tropical image {image}", point.label()).unwrap();
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
