//! Finitely generated abelian groups in invariant-factor form.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::matrix::IntMatrix;

/// `Z^free_rank + Z/d_1 + Z/d_2 + ...` with `d_1 | d_2 | ...` and every
/// `d_i >= 2`. This is exactly the cokernel classification produced by the
/// Smith normal form, so cohomology values land here directly.
#[derive(Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Self {
        for w in torsion.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "invariant factors must form a divisibility chain");
        }
        assert!(torsion.iter().all(|d| d >= &BigInt::from(2)), "invariant factors must be >= 2");
        AbelianGroup { free_rank, torsion }
    }

    pub fn trivial() -> Self {
        AbelianGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn cyclic_of_order(d: u64) -> Self {
        AbelianGroup::new(0, vec![BigInt::from(d)])
    }

    /// The cokernel `Z^rows / im(M)`.
    pub fn cokernel_of(m: &IntMatrix) -> Self {
        let snf = m.snf();
        let rank = snf.invariants.len();
        let torsion = snf.invariants.into_iter().filter(|d| !d.is_one()).collect();
        AbelianGroup { free_rank: m.rows() - rank, torsion }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Generated by a single element.
    pub fn is_cyclic(&self) -> bool {
        self.free_rank + self.torsion.len() <= 1
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        // Re-normalize the combined torsion through a diagonal SNF.
        let all: Vec<&BigInt> = self.torsion.iter().chain(other.torsion.iter()).collect();
        let n = all.len();
        let diag = IntMatrix::from_fn(n, n, |r, c| {
            if r == c {
                all[r].clone()
            } else {
                BigInt::from(0)
            }
        });
        let torsion = diag
            .snf()
            .invariants
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        AbelianGroup { free_rank: self.free_rank + other.free_rank, torsion }
    }

    /// Free part raised by `extra`, torsion unchanged.
    pub fn plus_free(&self, extra: usize) -> AbelianGroup {
        AbelianGroup { free_rank: self.free_rank + extra, torsion: self.torsion.clone() }
    }
}

impl fmt::Debug for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbelianGroup({self})")
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
