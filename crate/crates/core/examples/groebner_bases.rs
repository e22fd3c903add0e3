// Reduced Gröbner bases over Q: normal forms, membership, saturation,
// ideal equality and homogeneity spaces.
//
// ```bash
// cargo run --example groebner_bases
// ```

use std::fmt::Write;

use tropstrat::{
    buchberger, homogeneity_space, ideal_equal, member, parse_poly_list, saturate, PolyIdeal, ResiduePoly, Result,
    TermOrder,
};

fn ideal(gens: &str, vars: &[String]) -> Result<PolyIdeal> {
    let gens: Vec<ResiduePoly> = parse_poly_list(gens, vars)?
        .iter()
        .map(|g| g.map_coeffs(|c| c.as_rational().expect("rational")))
        .collect();
    PolyIdeal::new(vars.len(), gens)
}

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let xy: Vec<String> = ["x", "y"].map(String::from).to_vec();
    let i = ideal("x^2 - 1, x*y - 1", &xy)?;
    let gb = buchberger(&i, &TermOrder::Lex)?;
    writeln!(out, "lex basis of {}: {}", i.fmt_with(&xy), gb.fmt_with(&xy)).unwrap();
    let f = &parse_poly_list("x^3 + y", &xy)?[0].map_coeffs(|c| c.as_rational().unwrap());
    writeln!(out, "normal form of x^3 + y: {}", gb.reduce(f)?.fmt_with(&xy)).unwrap();
    writeln!(out, "equal to <x - y, y^2 - 1>: {}", ideal_equal(&i, &ideal("x - y, y^2 - 1", &xy)?)?).unwrap();

    let s = saturate(&ideal("x*(y-1)", &xy)?, &ResiduePoly::var(2, 0))?;
    writeln!(out, "<x*(y-1)> saturated by x: {}", s.fmt_with(&xy)).unwrap();

    let xyz: Vec<String> = ["x", "y", "z"].map(String::from).to_vec();
    let j = ideal("(x-1)^2, (x-1)*z - (y-1)", &xyz)?;
    let g = &parse_poly_list("(x-1)*(y-1)", &xyz)?[0].map_coeffs(|c| c.as_rational().unwrap());
    writeln!(out, "(x-1)*(y-1) in {}: {}", j.fmt_with(&xyz), member(g, &j)?).unwrap();
    for gens in ["(x-1)^2, y-1", "(x-1)^2, (x-1)*z - (y-1)", "y - x^2, z - x^3"] {
        let h = homogeneity_space(&ideal(gens, &xyz)?)?;
        let basis: Vec<String> = h
            .basis()
            .iter()
            .map(|v| format!("({})", v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        writeln!(out, "homogeneity space of <{gens}>: dim {} {}", h.dim(), basis.join(" ")).unwrap();
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
