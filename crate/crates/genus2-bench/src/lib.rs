//! Shared fixtures for the pipeline benchmarks.

use num_bigint::BigInt;

use genus2_core::{Rat, SexticForm};

/// A good-reduction curve, a one-node curve, and a two-component curve at
/// p = 7, exercising the cheap and the expensive pipeline paths.
pub fn fixtures() -> Vec<(&'static str, SexticForm)> {
    let q = |n: i64| Rat::from(BigInt::from(n));
    let roots = |rs: [i64; 6]| SexticForm::from_roots(q(1), &rs.map(q));
    vec![
        ("smooth", roots([0, 1, 2, 3, 4, 5])),
        ("one-node", roots([0, 1, 2, 3, 4, 7])),
        ("two-smooth-components", roots([0, 7, 14, 1, 8, 15])),
    ]
}
