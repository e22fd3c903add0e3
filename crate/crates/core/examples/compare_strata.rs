// Gröbner dimension against topological dimension: the curve's initial
// scheme changes at the origin while its support does not.
//
// ```bash
// cargo run --example compare_strata
// ```

use std::fmt::Write;

use tropstrat::curve::{curve_ideal, names, residue_ideal, SUPPORT};
use tropstrat::{compare_stratifications, Result, WeightVector};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let vars = names();
    let support = residue_ideal(SUPPORT);
    for w in ["0,0,-1/2", "0,0,0", "0,0,1"] {
        let w = WeightVector::parse(w)?;
        let rep = compare_stratifications(&curve_ideal(), &w, &support)?;
        writeln!(
            out,
            "{w}: <{}>, support {}, groebner dim {}, topological dim {:?}{}",
            rep.initial.display_with(&vars),
            rep.support_verdict,
            rep.groebner_dim,
            rep.topological_dim,
            if rep.strictly_finer() { ", strictly finer" } else { "" }
        )
        .unwrap();
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
