//! Shared fixtures for the benchmark targets.

use ttlink::{twisted_torus_braid, BraidWord, TwistedTorusParams};

/// Representative parameter sets spanning narrow and wide twist blocks.
pub fn sample_params() -> Vec<TwistedTorusParams> {
    [
        (4, 2, 3, -1),
        (8, 2, 4, -1),
        (8, 6, 7, -1),
        (4, 2, 5, -1),
        (9, 3, 3, -3),
    ]
    .into_iter()
    .map(|(p, q, r, s)| TwistedTorusParams::new(p, q, r, s).unwrap())
    .collect()
}

pub fn sample_braids() -> Vec<BraidWord> {
    sample_params().iter().map(twisted_torus_braid).collect()
}
