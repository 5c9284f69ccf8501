//! Exact polynomial arithmetic: parsing, gcd, resultants, rational roots.

use gitstab::poly::{default_var_names, gcd, parse_poly, rational_roots, resultant};

fn main() -> gitstab::Result<()> {
    let names = default_var_names(2);
    let p = parse_poly("x^3 - x*y^2 + 2*x^2 - 2*y^2", &names)?;
    let q = parse_poly("x^2 + x*y - 2*x - 2*y", &names)?;
    println!("p = {}", p.to_string_with(&names));
    println!("q = {}", q.to_string_with(&names));
    println!("gcd(p, q) = {}", gcd(&p, &q).to_string_with(&names));

    let f = parse_poly("x^2 + y^2 - 1", &names)?;
    let g = parse_poly("x - y", &names)?;
    let r = resultant(&f, &g, 0)?;
    println!("Res_x(x^2 + y^2 - 1, x - y) = {}", r.to_string_with(&names));

    let u = parse_poly("6*x^3 - 5*x^2 - 2*x + 1", &names)?;
    let roots = rational_roots(&u)?;
    let shown: Vec<String> = roots.roots.iter().map(ToString::to_string).collect();
    println!("rational roots of 6x^3 - 5x^2 - 2x + 1: {}", shown.join(", "));
    Ok(())
}
