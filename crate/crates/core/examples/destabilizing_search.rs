//! Searching diagonal one-parameter subgroups for (de)stabilizing weights.

use gitstab::cli::parse_map;
use gitstab::git::find_destabilizing_diag;

fn main() -> gitstab::Result<()> {
    for text in [
        "[y*z : x*z + y^2 : z^2]",
        "[y*z^2 : x*z^2 + y^3 : z^3]",
        "[x^2 : y^2 : z^2]",
    ] {
        let f = parse_map(text)?;
        for strict in [true, false] {
            let label = if strict { "mu > 0 " } else { "mu >= 0" };
            match find_destabilizing_diag(&f, strict) {
                Some(c) => println!("{text:<30} {label}: {} (mu = {})", c.weights, c.mu),
                None => println!("{text:<30} {label}: none"),
            }
        }
    }
    Ok(())
}
