//! Module invariants under proptest-chosen seeds.

mod common;

use common::invariants::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

macro_rules! invariant_tests {
    ($cases:expr; $($name:ident),+ $(,)?) => {
        proptest! {
            #![proptest_config(ProptestConfig::with_cases($cases))]
            $(
                #[test]
                fn $name(seed in any::<u64>()) {
                    let outcome = super::$name(&mut ChaCha8Rng::seed_from_u64(seed));
                    prop_assert!(outcome.is_ok(), "{}", outcome.unwrap_err());
                }
            )+
        }
    };
}

mod algebra {
    use super::*;
    invariant_tests!(64;
        ring_axioms,
        gcd_multiplicative,
        compose_chain,
        homogenize_round_trip,
        resultant_detects_common_factor,
        normalize_idempotent,
        exponent_linear,
        mu_scaling,
        mu_permutation,
        mu_support_only,
        mu_brute_force,
        table_rows_match_exponents,
        certificate_rows_positive,
        henon_inverse,
        henon_support_patterns,
        henon_homogenization,
        map_print_parse,
    );
}

mod dynamics {
    use super::*;
    invariant_tests!(16;
        degree_submultiplicative,
        line_image_kind_matches_rank,
        iterate_degrees_conjugation,
        fibering_witness_commutes,
        centers_equivariant,
        quadratic_henon_semistable,
        degree_drop_unstable_sequence,
        check_fibering_matches_centers,
        seeded_reports_identical,
    );
}
