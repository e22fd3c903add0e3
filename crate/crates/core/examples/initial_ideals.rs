// Initial ideals of a space curve over Q(t) at three weights on one ray,
// and tropical membership.
//
// ```bash
// cargo run --example initial_ideals
// ```

use std::fmt::Write;

use tropstrat::curve::{curve_ideal, names};
use tropstrat::{LiftedIdeal, Result, WeightVector};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let vars = names();
    let ideal = curve_ideal();
    writeln!(out, "I = {}", ideal.fmt_with(&vars)).unwrap();
    // Lift once and reuse it for every weight.
    let lifted = LiftedIdeal::new(&ideal)?;
    for w in ["0,0,-1/2", "0,0,0", "0,0,1", "0,0,-2", "1,0,0"] {
        let w = WeightVector::parse(w)?;
        let j = lifted.initial_ideal(&w)?;
        if j.is_unit() {
            writeln!(out, "in_{w}(I) = <1>, so {w} is not in Trop(I)").unwrap();
        } else {
            writeln!(out, "in_{w}(I) = <{}>", j.display_with(&vars)).unwrap();
        }
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
