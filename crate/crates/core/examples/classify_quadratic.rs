//! Fibering centers, degree drop and the semistability verdict on P^2.

use gitstab::classify2::rat22_verdict;
use gitstab::cli::parse_map;

fn main() -> gitstab::Result<()> {
    for text in [
        "[y*z : x*z + y^2 : z^2]",
        "[x*z : y*z + x^2 : z^2]",
        "[y^2 : z*x : z^2]",
        "[x^2 + 2*y^2 + x*z : 2*x*y + y*z : z^2]",
    ] {
        let f = parse_map(text)?;
        let v = rat22_verdict(&f)?;
        let centers: Vec<String> = v.centers.iter().map(|p| format!("{p}")).collect();
        println!(
            "{text:<40} branch {:?}, deg F^2 = {}, centers [{}], conclusion {:?}",
            v.branch,
            v.deg_f2,
            centers.join(", "),
            v.semistable_conclusion
        );
    }
    Ok(())
}
