//! Building a Hénon map, its inverse, and checking both composites.

use gitstab::henon::HenonSpec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gitstab::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let spec = HenonSpec::random(&mut rng, 3, 2, 2)?;
    let names = spec.var_names();
    let f = spec.build_affine();
    let g = spec.inverse_affine();
    println!("{spec}");
    for (i, (a, b)) in f.iter().zip(&g).enumerate() {
        println!("  f{} = {}", i + 1, a.to_string_with(&names));
        println!("  g{} = {}", i + 1, b.to_string_with(&names));
    }
    let fg: Vec<String> = f.iter().map(|p| p.compose(&g).map(|q| q.to_string_with(&names))).collect::<Result<_, _>>()?;
    let gf: Vec<String> = g.iter().map(|p| p.compose(&f).map(|q| q.to_string_with(&names))).collect::<Result<_, _>>()?;
    println!("f o g = ({})", fg.join(", "));
    println!("g o f = ({})", gf.join(", "));
    Ok(())
}
