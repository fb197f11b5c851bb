//! Dense matrices over the ring of integers with exact arithmetic.
//!
//! Everything downstream (lattices, normal forms, the dimension engine)
//! reduces to the operations in this module. Matrices act on column
//! vectors; an automorphism of `Z^n` is recorded by the images of the
//! standard basis vectors as columns.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::poly::IntPoly;

/// Rectangular integer matrix, entries stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

/// Column-style Hermite normal form `H = M * U` with `U` unimodular.
#[derive(Clone, Debug)]
pub struct Hnf {
    pub h: IntMatrix,
    pub u: IntMatrix,
}

/// Smith normal form `D = S * M * T`: diagonal with a divisibility chain.
/// Only the diagonal and the invariant factors are retained.
#[derive(Clone, Debug)]
pub struct Snf {
    pub d: IntMatrix,
    /// Nonzero diagonal entries `d_1 | d_2 | ...`, all positive.
    pub invariants: Vec<BigInt>,
}

/// Result of the finite-order test for a unimodular matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixOrder {
    Finite(u64),
    Infinite,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        IntMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        IntMatrix::new(rows, cols, entries)
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in rows {
            assert_eq!(row.len(), c, "ragged row in matrix literal");
        }
        IntMatrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j { e.is_one() } else { e.is_zero() }
                })
            })
    }

    /// Skew-symmetric with zero diagonal.
    pub fn is_alternating(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self.get(i, i).is_zero()
                    && (0..i).all(|j| *self.get(i, j) == -self.get(j, i))
            })
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        IntMatrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = BigInt::zero();
            for k in 0..self.cols {
                acc += self.get(r, k) * other.get(k, c);
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "vector length must equal column count");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * &v[c]).sum())
            .collect()
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + other.get(r, c))
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - other.get(r, c))
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |r, c| -self.get(r, c))
    }

    /// `self - I`, the map whose kernel is the fixed lattice.
    pub fn sub_identity(&self) -> Result<IntMatrix> {
        self.require_square()?;
        Ok(self.sub(&IntMatrix::identity(self.rows)))
    }

    pub fn pow(&self, mut e: u64) -> Result<IntMatrix> {
        self.require_square()?;
        let mut base = self.clone();
        let mut acc = IntMatrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Determinant by fraction-free Gaussian elimination (Bareiss).
    pub fn det(&self) -> Result<BigInt> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m: Vec<Vec<BigInt>> = (0..n).map(|r| self.column_slice_row(r)).collect();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = &t / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if sign < 0 { -d } else { d })
    }

    fn column_slice_row(&self, r: usize) -> Vec<BigInt> {
        (0..self.cols).map(|c| self.get(r, c).clone()).collect()
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().map(|d| d.abs().is_one()).unwrap_or(false)
    }

    /// Column-style Hermite normal form.
    ///
    /// Returns `H = M * U` with `U` unimodular, where `H` is the canonical
    /// column echelon form: pivot rows strictly increase left to right,
    /// pivots are positive, entries left of a pivot in its row lie in
    /// `[0, pivot)`, and zero columns are rightmost.
    pub fn hnf(&self) -> Hnf {
        let mut h = self.clone();
        let mut u = IntMatrix::identity(self.cols);
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut pc = 0usize;
        for row in 0..self.rows {
            if pc == self.cols {
                break;
            }
            // Euclidean reduction across columns pc.. in this row.
            loop {
                let mut best: Option<usize> = None;
                for j in pc..self.cols {
                    if h.get(row, j).is_zero() {
                        continue;
                    }
                    best = match best {
                        None => Some(j),
                        Some(b) => {
                            if h.get(row, j).abs() < h.get(row, b).abs() {
                                Some(j)
                            } else {
                                Some(b)
                            }
                        }
                    };
                }
                let Some(b) = best else { break };
                if b != pc {
                    h.swap_cols(pc, b);
                    u.swap_cols(pc, b);
                }
                let mut done = true;
                let pivot = h.get(row, pc).clone();
                for j in pc + 1..self.cols {
                    if h.get(row, j).is_zero() {
                        continue;
                    }
                    let q = h.get(row, j).div_floor(&pivot);
                    h.add_col_multiple(j, pc, &-&q);
                    u.add_col_multiple(j, pc, &-&q);
                    if !h.get(row, j).is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if !h.get(row, pc).is_zero() {
                if h.get(row, pc).is_negative() {
                    h.negate_col(pc);
                    u.negate_col(pc);
                }
                pivots.push((row, pc));
                pc += 1;
            }
        }
        // Reduce entries left of each pivot into [0, pivot).
        for &(row, col) in &pivots {
            let pivot = h.get(row, col).clone();
            for j in 0..col {
                let q = h.get(row, j).div_floor(&pivot);
                if !q.is_zero() {
                    h.add_col_multiple(j, col, &-&q);
                    u.add_col_multiple(j, col, &-&q);
                }
            }
        }
        Hnf { h, u }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }

    /// col_dst += q * col_src
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, dst) + q * self.get(r, src);
            self.set(r, dst, v);
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(dst, c) + q * self.get(src, c);
            self.set(dst, c, v);
        }
    }

    /// Rank over the rationals (number of nonzero columns in the HNF).
    pub fn rank(&self) -> usize {
        let h = self.hnf().h;
        (0..h.cols)
            .filter(|&c| (0..h.rows).any(|r| !h.get(r, c).is_zero()))
            .count()
    }

    /// Smith normal form. The diagonal satisfies `d_1 | d_2 | ...` and the
    /// invariant factors are the positive nonzero diagonal entries.
    pub fn snf(&self) -> Snf {
        let mut d = self.clone();
        let n = d.rows.min(d.cols);
        let mut t = 0usize;
        while t < n {
            // Locate a nonzero entry of minimal magnitude in the trailing block.
            let mut best: Option<(usize, usize)> = None;
            for i in t..d.rows {
                for j in t..d.cols {
                    if d.get(i, j).is_zero() {
                        continue;
                    }
                    best = match best {
                        None => Some((i, j)),
                        Some((bi, bj)) => {
                            if d.get(i, j).abs() < d.get(bi, bj).abs() {
                                Some((i, j))
                            } else {
                                Some((bi, bj))
                            }
                        }
                    };
                }
            }
            let Some((bi, bj)) = best else { break };
            if bi != t {
                d.swap_rows(t, bi);
            }
            if bj != t {
                d.swap_cols(t, bj);
            }
            // Clear row and column t; reductions may reintroduce entries.
            loop {
                let mut clean = true;
                for i in t + 1..d.rows {
                    if d.get(i, t).is_zero() {
                        continue;
                    }
                    let q = d.get(i, t).div_floor(d.get(t, t));
                    d.add_row_multiple(i, t, &-&q);
                    if !d.get(i, t).is_zero() {
                        // Remainder is smaller than the pivot; promote it.
                        d.swap_rows(t, i);
                        clean = false;
                    }
                }
                for j in t + 1..d.cols {
                    if d.get(t, j).is_zero() {
                        continue;
                    }
                    let q = d.get(t, j).div_floor(d.get(t, t));
                    d.add_col_multiple(j, t, &-&q);
                    if !d.get(t, j).is_zero() {
                        d.swap_cols(t, j);
                        clean = false;
                    }
                }
                if clean {
                    break;
                }
            }
            // Enforce divisibility of the remaining block by the pivot.
            let pivot = d.get(t, t).clone();
            let offender = (t + 1..d.rows)
                .flat_map(|i| (t + 1..d.cols).map(move |j| (i, j)))
                .find(|&(i, j)| !d.get(i, j).mod_floor(&pivot).is_zero());
            if let Some((i, _)) = offender {
                d.add_row_multiple(t, i, &BigInt::one());
                continue; // redo this pivot
            }
            if d.get(t, t).is_negative() {
                for j in t..d.cols {
                    let v = -d.get(t, j);
                    d.set(t, j, v);
                }
            }
            t += 1;
        }
        let invariants = (0..n)
            .map(|i| d.get(i, i).clone())
            .filter(|v| !v.is_zero())
            .collect();
        Snf { d, invariants }
    }

    /// The saturated lattice `{ v in Z^cols : M v = 0 }`.
    pub fn kernel_lattice(&self) -> Lattice {
        let Hnf { h, u } = self.hnf();
        let zero_cols: Vec<usize> = (0..h.cols())
            .filter(|&c| (0..h.rows()).all(|r| h.get(r, c).is_zero()))
            .collect();
        let gens = IntMatrix::from_fn(self.cols, zero_cols.len(), |r, k| {
            u.get(r, zero_cols[k]).clone()
        });
        Lattice::from_generators(self.cols, &gens)
    }

    /// Exact inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        let det = self.det()?;
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular(det));
        }
        // The HNF of a unimodular matrix is the identity, so M * U = I.
        let Hnf { h, u } = self.hnf();
        debug_assert!(h.is_identity());
        let _ = h;
        Ok(u)
    }

    /// Monic characteristic polynomial `det(xI - A)` by the fraction-free
    /// Faddeev-LeVerrier recursion. The 0x0 matrix yields the constant 1.
    pub fn char_poly(&self) -> Result<IntPoly> {
        self.require_square()?;
        let n = self.rows;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut m = IntMatrix::identity(n);
        for k in 1..=n {
            m = self.mul(&m);
            let trace: BigInt = (0..n).map(|i| m.get(i, i).clone()).sum();
            let c = -trace / BigInt::from(k as u64);
            coeffs[n - k] = c.clone();
            for i in 0..n {
                let v = m.get(i, i) + &c;
                m.set(i, i, v);
            }
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }

    /// `k`-th exterior power in the lexicographic basis of `k`-subsets.
    pub fn exterior_power(&self, k: usize) -> Result<IntMatrix> {
        self.require_square()?;
        let n = self.rows;
        if k > n {
            return Err(Error::DegreeTooLarge { k, n });
        }
        let subsets = k_subsets(n, k);
        let dim = subsets.len();
        let mut out = IntMatrix::zero(dim, dim);
        for (r, srows) in subsets.iter().enumerate() {
            for (c, scols) in subsets.iter().enumerate() {
                let minor = IntMatrix::from_fn(k, k, |i, j| self.get(srows[i], scols[j]).clone());
                out.set(r, c, minor.det().expect("minor is square"));
            }
        }
        Ok(out)
    }

    /// Saturated fixed lattice `ker(A^k - I)`.
    pub fn fixed_lattice(&self, k: u64) -> Result<Lattice> {
        assert!(k >= 1, "power must be positive");
        Ok(self.pow(k)?.sub_identity()?.kernel_lattice())
    }

    /// Smallest `k >= 1` with `A^k = I`, if any.
    ///
    /// The eigenvalue screen comes first: unless the characteristic
    /// polynomial is a product of cyclotomics, no power can be the
    /// identity. Non-semisimple matrices can pass the screen and still
    /// have infinite order, so the candidate is always re-checked.
    pub fn matrix_order(&self) -> Result<MatrixOrder> {
        let det = self.det()?;
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular(det));
        }
        if self.rows == 0 {
            return Ok(MatrixOrder::Finite(1));
        }
        let fact = self.char_poly()?.cyclotomic_factorization()?;
        if !fact.remainder.is_one() {
            return Ok(MatrixOrder::Infinite);
        }
        let k_star = fact.factors.iter().fold(1u64, |acc, &(d, _)| acc.lcm(&d));
        if !self.pow(k_star)?.is_identity() {
            return Ok(MatrixOrder::Infinite);
        }
        let k = divisors(k_star)
            .into_iter()
            .find(|&k| self.pow(k).map(|p| p.is_identity()).unwrap_or(false))
            .unwrap_or(k_star);
        Ok(MatrixOrder::Finite(k))
    }

    /// `(k*, rank)` where `k*` is the lcm of the cyclotomic orders found in
    /// the characteristic polynomial and `rank = rank ker(A^{k*} - I)`.
    ///
    /// Since every root-of-unity eigenvalue of `A` has order dividing `k*`
    /// and the fixed lattices are nested along divisibility, this rank is
    /// the maximum of `rank ker(A^k - I)` over all `k >= 1`.
    pub fn max_fixed_rank(&self) -> Result<(u64, usize)> {
        let det = self.det()?;
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular(det));
        }
        let fact = self.char_poly()?.cyclotomic_factorization()?;
        let k_star = fact.factors.iter().fold(1u64, |acc, &(d, _)| acc.lcm(&d));
        let rank = self.fixed_lattice(k_star)?.rank();
        Ok((k_star, rank))
    }
}

/// All `k`-element subsets of `{0, .., n-1}` in lexicographic order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            if n - i < k - current.len() {
                break;
            }
            current.push(i);
            rec(n, k, i + 1, current, out);
            current.pop();
        }
    }
    rec(n, k, 0, &mut current, &mut out);
    out
}

/// Positive divisors in increasing order.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{} ", self.rows, self.cols)?;
        f.debug_list()
            .entries((0..self.rows).map(|r| self.column_slice_row(r)))
            .finish()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
