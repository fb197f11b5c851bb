//! Integer polynomials, cyclotomic polynomials and the root-of-unity test.
//!
//! The only factorization performed here is trial division by cyclotomic
//! polynomials. By Kronecker's theorem a monic integer polynomial whose
//! complex roots all lie on the unit circle is a product of cyclotomics,
//! so the cyclotomic-free remainder decides every periodicity question
//! the dimension engine asks.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Polynomial with integer coefficients in ascending degree order.
/// The zero polynomial has an empty coefficient vector; otherwise the
/// leading (last) coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Outcome of cyclotomic trial division: `p = remainder * prod Phi_d^mult`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    /// Pairs `(d, multiplicity)` sorted by `d`.
    pub factors: Vec<(u64, u32)>,
    /// Monic cyclotomic-free part; equals 1 exactly when every complex
    /// root of the input is a root of unity.
    pub remainder: IntPoly,
}

impl IntPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    /// `x^d - 1`
    pub fn x_pow_minus_one(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[0] = -BigInt::one();
        coeffs[d] = BigInt::one();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of a nonzero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    /// Division with remainder by a monic divisor; exact over the integers.
    pub fn divrem_monic(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        if !divisor.is_monic() {
            return Err(Error::NotMonic);
        }
        let d = divisor.degree().expect("monic divisor is nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let lead = rem.last().expect("nonempty").clone();
            let shift = rem.len() - 1 - d;
            if !lead.is_zero() {
                quot[shift] = lead.clone();
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] -= &lead * c;
                }
            }
            rem.pop();
        }
        Ok((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, a: &IntMatrix) -> Result<IntMatrix> {
        if !a.is_square() {
            return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
        }
        let n = a.rows();
        let mut acc = IntMatrix::zero(n, n);
        for c in self.coeffs.iter().rev() {
            acc = a.mul(&acc);
            for i in 0..n {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        Ok(acc)
    }

    /// Strips every cyclotomic factor `Phi_d` with `totient(d) <= deg`.
    pub fn cyclotomic_factorization(&self) -> Result<CyclotomicFactorization> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let deg = self.degree().expect("monic polynomial is nonzero");
        let table = cyclotomic_table(cyclotomic_search_bound(deg));
        let mut remainder = self.clone();
        let mut factors = Vec::new();
        for (d, phi) in table.iter().enumerate().skip(1) {
            let Some(phi_deg) = phi.degree() else { continue };
            let mut mult = 0u32;
            while remainder.degree().is_some_and(|rd| rd >= phi_deg) {
                let (q, r) = remainder.divrem_monic(phi)?;
                if r.is_zero() {
                    remainder = q;
                    mult += 1;
                } else {
                    break;
                }
            }
            if mult > 0 {
                factors.push((d as u64, mult));
            }
        }
        Ok(CyclotomicFactorization { factors, remainder })
    }
}

/// Largest `d` that can satisfy `totient(d) <= deg`; `totient(d) >= sqrt(d)`
/// for every `d` outside `{1, 2, 6}`.
fn cyclotomic_search_bound(deg: usize) -> usize {
    (deg * deg).max(6)
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

/// Cyclotomic polynomials `Phi_1 .. Phi_max` (index 0 unused).
fn cyclotomic_table(max: usize) -> Vec<IntPoly> {
    let mut table = vec![IntPoly::one(); max + 1];
    for d in 1..=max {
        let mut p = IntPoly::x_pow_minus_one(d);
        for (e, phi) in table.iter().enumerate().take(d).skip(1) {
            if d % e == 0 {
                let (q, r) = p.divrem_monic(phi).expect("cyclotomics are monic");
                debug_assert!(r.is_zero());
                p = q;
            }
        }
        table[d] = p;
    }
    table
}

/// The `d`-th cyclotomic polynomial; its degree is `totient(d)`.
pub fn cyclotomic_poly(d: u64) -> IntPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    let table = cyclotomic_table(d as usize);
    let phi = table[d as usize].clone();
    debug_assert_eq!(phi.degree(), Some(totient(d as usize)));
    phi
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_small_cases() {
        assert_eq!(cyclotomic_poly(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), IntPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic_poly(4), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), IntPoly::from_i64(&[1, -1, 1]));
    }

    #[test]
    fn cyclotomic_12_by_explicit_division() {
        // x^12 - 1 divided by the product of Phi_e over proper divisors e of 12.
        let mut divisor = IntPoly::one();
        for e in [1u64, 2, 3, 4, 6] {
            divisor = divisor.mul(&cyclotomic_poly(e));
        }
        let (q, r) = IntPoly::x_pow_minus_one(12).divrem_monic(&divisor).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, IntPoly::from_i64(&[1, 0, -1, 0, 1])); // x^4 - x^2 + 1
        assert_eq!(cyclotomic_poly(12), q);
    }

    #[test]
    fn factorization_examples() {
        // (x - 1)^2
        let p = IntPoly::from_i64(&[1, -2, 1]);
        let f = p.cyclotomic_factorization().unwrap();
        assert_eq!(f.factors, vec![(1, 2)]);
        assert!(f.remainder.is_one());

        // x^2 - 3x + 1 has real roots away from the unit circle.
        let p = IntPoly::from_i64(&[1, -3, 1]);
        let f = p.cyclotomic_factorization().unwrap();
        assert!(f.factors.is_empty());
        assert_eq!(f.remainder, p);

        // (x^2 + 1)(x - 2)
        let p = IntPoly::from_i64(&[1, 0, 1]).mul(&IntPoly::from_i64(&[-2, 1]));
        let f = p.cyclotomic_factorization().unwrap();
        assert_eq!(f.factors, vec![(4, 1)]);
        assert_eq!(f.remainder, IntPoly::from_i64(&[-2, 1]));
    }

    #[test]
    fn factorization_rejects_non_monic() {
        let p = IntPoly::from_i64(&[1, 2]);
        assert!(p.cyclotomic_factorization().is_err());
    }

    #[test]
    fn factorization_reassembles_input() {
        let inputs = [
            IntPoly::from_i64(&[1, -2, 1]),
            IntPoly::from_i64(&[-1, 0, 0, 0, 0, 0, 1]), // x^6 - 1
            IntPoly::from_i64(&[1, -3, 1]),
            IntPoly::from_i64(&[2, 1, 1]).mul(&cyclotomic_poly(3)),
        ];
        for p in inputs {
            let f = p.cyclotomic_factorization().unwrap();
            let mut prod = f.remainder.clone();
            for (d, mult) in f.factors {
                for _ in 0..mult {
                    prod = prod.mul(&cyclotomic_poly(d));
                }
            }
            assert_eq!(prod, p);
        }
    }

    #[test]
    fn divrem_monic_basics() {
        let p = IntPoly::from_i64(&[2, 3, 1]); // (x+1)(x+2)
        let (q, r) = p.divrem_monic(&IntPoly::from_i64(&[1, 1])).unwrap();
        assert_eq!(q, IntPoly::from_i64(&[2, 1]));
        assert!(r.is_zero());
        assert!(p.divrem_monic(&IntPoly::from_i64(&[1, 2])).is_err());
    }
}
