//! The numerical function mu and block-weight certificates for Hénon maps.

use gitstab::git::{mu, block_certificate, verify_certificate, CertificateKind, Expectation, WeightVector};
use gitstab::henon::HenonSpec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gitstab::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    let planar = HenonSpec::random(&mut rng, 2, 2, 2)?;
    let w = WeightVector::parse("1,0,-1")?;
    println!("{planar}");
    println!("  mu at {w} = {}", mu(&planar.homogenize_map(), &w)?);

    for (n, k, d) in [(2, 2, 3), (3, 2, 2), (3, 3, 2), (4, 3, 3)] {
        let spec = HenonSpec::random(&mut rng, n, k, d)?;
        let cert = block_certificate(n, k, d)?;
        let m = spec.homogenize_map();
        let expect = match cert.expected {
            CertificateKind::StrictlyDestabilizing => Expectation::Positive,
            CertificateKind::NonStableWitness => Expectation::NonNegative,
        };
        let checked = verify_certificate(&m, &cert.weights, expect)?;
        println!(
            "N={n} k={k} d={d}: (r, s, t) = ({}, {}, {}), weights {}, mu = {}",
            cert.r, cert.s, cert.t, cert.weights, checked.mu
        );
    }
    Ok(())
}
