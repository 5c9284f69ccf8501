//! Images of lines under a quadratic Hénon map of P^2.

use gitstab::cli::{parse_line, parse_spec};
use gitstab::ratmap::{line_image, PlaneCurveImage};

fn main() -> gitstab::Result<()> {
    let spec = parse_spec("henon N=2 k=2 d=2 b=(2,3) P3=(x2^2 - 1)")?;
    let f = spec.homogenize_map();
    println!("{f}");
    for text in ["z", "y - 2*z", "y + 1/3*z", "x - y", "x - 3*y + z", "x - 5*z"] {
        let line = parse_line(text)?;
        let image = match line_image(&f, &line)? {
            PlaneCurveImage::Point(p) => format!("point {p}"),
            PlaneCurveImage::Line(l) => format!("line {l}"),
            PlaneCurveImage::IrreducibleConic(q) => format!("conic {q} = 0"),
            PlaneCurveImage::ReducibleOrDegenerate(q) => format!("degenerate conic {q} = 0"),
        };
        println!("  {line} -> {image}");
    }
    Ok(())
}
