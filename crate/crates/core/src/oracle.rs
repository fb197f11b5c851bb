//! Brute-force oracles.
//!
//! These deliberately avoid the cyclotomic analysis used by the engine:
//! they walk matrix powers directly, so the two routes can be compared
//! against each other by the `verify` command and the test battery.

use crate::error::Result;
use crate::matrix::IntMatrix;

/// Default power bound for a rank-`n` problem: the lcm of all orders `d`
/// whose primitive roots of unity fit into dimension `n`
/// (`totient(d) <= n`), capped at 2520.
pub const ORACLE_DEPTH_CAP: u64 = 2520;

pub fn default_oracle_depth(n: usize) -> u64 {
    let mut acc: u64 = 1;
    let bound = (n * n).max(6);
    for d in 1..=bound {
        if totient(d) <= n {
            acc = num_integer::lcm(acc, d as u64);
            if acc >= ORACLE_DEPTH_CAP {
                return ORACLE_DEPTH_CAP;
            }
        }
    }
    acc
}

fn totient(d: usize) -> usize {
    let mut n = d;
    let mut result = d;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// `max rank ker(A^k - I)` over `k = 1..=depth`, by direct powering.
/// Returns `(argmax_k, max_rank)` with the smallest maximizing `k`.
pub fn brute_force_max_fixed_rank(a: &IntMatrix, depth: u64) -> Result<(u64, usize)> {
    let n = a.rows();
    let mut power = IntMatrix::identity(n);
    let mut best = (1u64, 0usize);
    for k in 1..=depth {
        power = power.mul(a);
        let rank = power.sub_identity()?.kernel_lattice().rank();
        if rank > best.1 {
            best = (k, rank);
        }
        if rank == n {
            break; // cannot grow further
        }
    }
    Ok(best)
}

/// Outcome of searching for the order of `A` by direct powering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerSearch {
    FoundOrder(u64),
    NoneUpTo(u64),
}

/// Smallest `k <= depth` with `A^k = I`, by direct powering.
pub fn order_by_powering(a: &IntMatrix, depth: u64) -> PowerSearch {
    let n = a.rows();
    let mut power = IntMatrix::identity(n);
    for k in 1..=depth {
        power = power.mul(a);
        if power.is_identity() {
            return PowerSearch::FoundOrder(k);
        }
    }
    PowerSearch::NoneUpTo(depth)
}
