//! Sublattices of `Z^n` with canonical Hermite-form bases.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::matrix::IntMatrix;

/// A sublattice of `Z^n`. The basis matrix has `ambient` rows and one
/// column per basis vector, kept in column Hermite normal form so that
/// equal lattices compare equal. Fixed lattices `L_k = ker(A^k - id)`
/// are stored in this form.
#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    ambient: usize,
    basis: IntMatrix,
}

impl Lattice {
    /// The lattice spanned by the columns of `gens` (ambient x k). Zero and
    /// dependent generators are absorbed by the normal form.
    pub fn from_generators(ambient: usize, gens: &IntMatrix) -> Self {
        assert_eq!(gens.rows(), ambient, "generators must live in Z^ambient");
        let h = gens.hnf().h;
        let nonzero = (0..h.cols())
            .filter(|&c| (0..h.rows()).any(|r| !h.get(r, c).is_zero()))
            .count();
        let basis = IntMatrix::from_fn(ambient, nonzero, |r, c| h.get(r, c).clone());
        Lattice { ambient, basis }
    }

    pub fn zero(ambient: usize) -> Self {
        Lattice { ambient, basis: IntMatrix::zero(ambient, 0) }
    }

    /// All of `Z^n`.
    pub fn standard(ambient: usize) -> Self {
        Lattice { ambient, basis: IntMatrix::identity(ambient) }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    /// Saturation: the lattice `(Q-span of self) meet Z^n`. Computed through a
    /// double orthogonal complement, which lands on a kernel lattice and is
    /// therefore automatically saturated. Idempotent.
    pub fn saturate(&self) -> Lattice {
        if self.rank() == 0 {
            return self.clone();
        }
        // Columns of `perp` span { w : w^T B = 0 }.
        let perp = self.basis.transpose().kernel_lattice();
        if perp.rank() == 0 {
            return Lattice::standard(self.ambient);
        }
        perp.basis().transpose().kernel_lattice()
    }

    pub fn is_saturated(&self) -> bool {
        self.saturate() == *self
    }

    /// Integer coordinates of `v` in this basis, if `v` lies in the lattice.
    pub fn coordinates_of(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient);
        let mut rest: Vec<BigInt> = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for c in 0..self.rank() {
            // Pivot row of column c: first nonzero entry; rows above are zero
            // in every later column, so the coefficient is forced.
            let pivot_row = (0..self.ambient)
                .find(|&r| !self.basis.get(r, c).is_zero())
                .expect("basis columns are nonzero");
            let pivot = self.basis.get(pivot_row, c);
            let (q, r) = num_integer::Integer::div_rem(&rest[pivot_row], pivot);
            if !r.is_zero() {
                return None;
            }
            for (row, r) in rest.iter_mut().enumerate() {
                let v = &*r - &q * self.basis.get(row, c);
                *r = v;
            }
            coords.push(q);
        }
        if rest.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains_vector(&self, v: &[BigInt]) -> bool {
        self.coordinates_of(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.ambient == self.ambient
            && (0..other.rank()).all(|c| self.contains_vector(&other.basis.column(c)))
    }

    /// The saturated rank-1 lattice spanned by basis column `c`.
    pub fn primitive_column(&self, c: usize) -> Lattice {
        let col = IntMatrix::from_fn(self.ambient, 1, |r, _| self.basis.get(r, c).clone());
        Lattice::from_generators(self.ambient, &col).saturate()
    }
}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Lattice(rank {} in Z^{}) basis {:?}", self.rank(), self.ambient, self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(ambient: usize, cols: &[Vec<i64>]) -> Lattice {
        let m = IntMatrix::from_fn(ambient, cols.len(), |r, c| BigInt::from(cols[c][r]));
        Lattice::from_generators(ambient, &m)
    }

    #[test]
    fn saturate_primitive_extraction() {
        let l = gens(2, &[vec![2, 0]]);
        let s = l.saturate();
        assert_eq!(s.rank(), 1);
        assert_eq!(s.basis().column(0), vec![BigInt::from(1), BigInt::from(0)]);
    }

    #[test]
    fn saturate_is_idempotent_on_saturated_input() {
        let l = gens(3, &[vec![1, 0, 2], vec![0, 1, 1]]).saturate();
        assert_eq!(l.saturate(), l);
    }

    #[test]
    fn saturate_full_rank_sublattice() {
        // Index-8 sublattice of Z^2: rational span is the whole plane.
        let l = gens(2, &[vec![2, 2], vec![0, 4]]);
        assert_eq!(l.rank(), 2);
        let snf = l.basis().snf();
        let idx: BigInt = snf.invariants.iter().product();
        assert_eq!(idx, BigInt::from(8));
        assert_eq!(l.saturate(), Lattice::standard(2));
    }

    #[test]
    fn membership_and_containment() {
        let l = gens(3, &[vec![1, 0, 0], vec![0, 2, 0]]);
        assert!(l.contains_vector(&[BigInt::from(3), BigInt::from(4), BigInt::from(0)]));
        assert!(!l.contains_vector(&[BigInt::from(0), BigInt::from(1), BigInt::from(0)]));
        assert!(!l.contains_vector(&[BigInt::from(0), BigInt::from(0), BigInt::from(1)]));
        assert!(l.saturate().contains_lattice(&l));
        assert!(!l.contains_lattice(&l.saturate()));
    }

    #[test]
    fn rank_invariant_under_regeneration() {
        // Same lattice from a redundant generating set.
        let a = gens(2, &[vec![1, 2], vec![3, 4]]);
        let b = gens(2, &[vec![1, 2], vec![3, 4], vec![4, 6], vec![2, 4]]);
        assert_eq!(a, b);
        assert_eq!(a.rank(), 2);
    }
}
