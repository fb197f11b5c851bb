//! Shared fixtures for the criterion benches.

use vcyc_core::matrix::IntMatrix;
use vcyc_core::testsupport;

pub fn sample_matrices(n: usize, count: usize) -> Vec<IntMatrix> {
    testsupport::sample_unimodular(n, count, 9, 0xBEC4)
}

pub fn hyperbolic4() -> IntMatrix {
    // Companion matrix of x^4 - 2x^3 - x^2 - 2x + 1; no cyclotomic factors.
    IntMatrix::from_rows(&[
        vec![0, 0, 0, -1],
        vec![1, 0, 0, 2],
        vec![0, 1, 0, 1],
        vec![0, 0, 1, 2],
    ])
}

pub fn rotation_block6() -> IntMatrix {
    IntMatrix::from_rows(&[
        vec![0, -1, 0, 0, 0, 0],
        vec![1, 0, 0, 0, 0, 0],
        vec![0, 0, 0, -1, 0, 0],
        vec![0, 0, 1, -1, 0, 0],
        vec![0, 0, 0, 0, 1, 1],
        vec![0, 0, 0, 0, 0, 1],
    ])
}
