//! Which members of a one-parameter family of quadratic maps are morphisms.

use gitstab::henon::family_fdt;
use gitstab::poly::{int, rat};
use gitstab::ratmap::is_morphism_p2;

fn main() -> gitstab::Result<()> {
    for t in [int(-2), int(-1), rat(-1, 3), int(0), int(1), int(2)] {
        let f = family_fdt(2, &t)?;
        println!("t = {t:>4}: {f}  morphism: {}", is_morphism_p2(&f)?);
    }
    Ok(())
}
