//! Degree sequences of iterates and algebraic stability.

use gitstab::cli::parse_map;
use gitstab::ratmap::{is_algebraically_stable_upto, iterate_degrees};

fn main() -> gitstab::Result<()> {
    for text in [
        "[y*z : x*z + y^2 : z^2]",
        "[y^2 : z*x : z^2]",
        "[y*z : x*y : x^2]",
    ] {
        let f = parse_map(text)?;
        let degs = iterate_degrees(&f, 5)?;
        let stable = is_algebraically_stable_upto(&f, 5)?;
        println!("{text:<28} degrees {degs:?}  stable up to 5: {stable}");
    }
    Ok(())
}
