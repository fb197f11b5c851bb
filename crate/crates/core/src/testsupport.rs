//! Deterministic sample generators shared by the test batteries and the
//! benchmark harness. Not part of the public API surface.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::matrix::IntMatrix;

/// SplitMix64; deterministic across platforms, no dependencies.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

/// Structured finite-order and small hyperbolic/unipotent seeds of size `n`.
pub fn structured_unimodular(n: usize) -> Vec<IntMatrix> {
    let mut out = vec![IntMatrix::identity(n)];
    let neg = IntMatrix::from_fn(n, n, |r, c| {
        if r == c {
            BigInt::from(-1)
        } else {
            BigInt::from(0)
        }
    });
    out.push(neg);
    if n >= 2 {
        let mut shear = IntMatrix::identity(n);
        shear.set(0, 1, BigInt::from(1));
        out.push(shear);

        let mut rot = IntMatrix::identity(n);
        rot.set(0, 0, BigInt::from(0));
        rot.set(0, 1, BigInt::from(-1));
        rot.set(1, 0, BigInt::from(1));
        rot.set(1, 1, BigInt::from(0));
        out.push(rot);

        let mut six = IntMatrix::identity(n);
        six.set(0, 0, BigInt::from(0));
        six.set(0, 1, BigInt::from(-1));
        six.set(1, 0, BigInt::from(1));
        six.set(1, 1, BigInt::from(1));
        out.push(six);

        let mut hyper = IntMatrix::identity(n);
        hyper.set(0, 0, BigInt::from(2));
        hyper.set(0, 1, BigInt::from(1));
        hyper.set(1, 0, BigInt::from(1));
        hyper.set(1, 1, BigInt::from(1));
        out.push(hyper);

        // Cyclic coordinate permutation, order n.
        let perm = IntMatrix::from_fn(n, n, |r, c| {
            if r == (c + 1) % n {
                BigInt::from(1)
            } else {
                BigInt::from(0)
            }
        });
        out.push(perm);
    }
    out
}

/// `count` unimodular `n x n` matrices with entries bounded by `max_abs`,
/// generated as products of random shears, swaps and sign flips. The
/// structured seeds above are always included first.
pub fn sample_unimodular(n: usize, count: usize, max_abs: i64, seed: u64) -> Vec<IntMatrix> {
    let mut rng = Rng::new(seed);
    let mut out = structured_unimodular(n);
    out.truncate(count);
    let bound = BigInt::from(max_abs);
    while out.len() < count {
        let mut m = IntMatrix::identity(n);
        let ops = 2 + rng.below(7);
        for _ in 0..ops {
            match rng.below(3) {
                0 => {
                    // column shear: c_j += sign * c_i
                    let i = rng.below(n as u64) as usize;
                    let mut j = rng.below(n as u64) as usize;
                    if n > 1 {
                        while j == i {
                            j = rng.below(n as u64) as usize;
                        }
                        let sign = if rng.below(2) == 0 { 1i64 } else { -1 };
                        for r in 0..n {
                            let v = m.get(r, j) + BigInt::from(sign) * m.get(r, i);
                            m.set(r, j, v);
                        }
                    }
                }
                1 => {
                    // swap two columns
                    if n > 1 {
                        let i = rng.below(n as u64) as usize;
                        let mut j = rng.below(n as u64) as usize;
                        while j == i {
                            j = rng.below(n as u64) as usize;
                        }
                        for r in 0..n {
                            let a = m.get(r, i).clone();
                            let b = m.get(r, j).clone();
                            m.set(r, i, b);
                            m.set(r, j, a);
                        }
                    }
                }
                _ => {
                    // negate a column
                    let i = rng.below(n as u64) as usize;
                    for r in 0..n {
                        let v = -m.get(r, i);
                        m.set(r, i, v);
                    }
                }
            }
        }
        let in_range = (0..n).all(|r| (0..n).all(|c| m.get(r, c).abs() <= bound));
        if in_range {
            out.push(m);
        }
    }
    out
}
