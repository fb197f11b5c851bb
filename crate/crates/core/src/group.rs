//! The supported group zoo as a validated tagged union.
//!
//! A `GroupSpec` is pure data; every structural hypothesis the dimension
//! engine relies on is checked by [`validate_spec`], which reports
//! violations instead of raising. Downstream operations refuse invalid
//! specs.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::matrix::{IntMatrix, MatrixOrder};

/// Cap on the explicit point-group listing of a crystallographic spec.
pub const POINT_GROUP_CAP: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalKind {
    LocallyFinite,
    LocallyVirtuallyCyclic,
}

/// One group of the supported zoo.
///
/// Matrices follow the column convention: an automorphism of `Z^n` is the
/// matrix whose columns are the images of the standard basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum GroupSpec {
    /// `Z^n`.
    FreeAbelian { n: u32 },
    /// `Z^n x|_A Z` for a unimodular `A`.
    ZnByZ {
        n: u32,
        #[serde(rename = "A")]
        a: IntMatrix,
    },
    /// `Z^n`-by-finite, with the finite point group listed explicitly.
    Crystallographic { n: u32, point_group: Vec<IntMatrix> },
    /// Central extension `1 -> Z^m -> G -> Z^n -> 1` of nilpotency class
    /// at most 2 whose center is claimed to be exactly `Z^m`; the
    /// commutator pairing `Z^n x Z^n -> Z^m` is given by `m` alternating
    /// matrices.
    CentralExtension { m: u32, n: u32, form: Vec<IntMatrix> },
    /// `H x|_f Z` where `1 -> Z -> H -> Z^n -> 1` is a central extension
    /// with `cent(H) = Z` (commutator form alternating with trivial
    /// radical). The automorphism is recorded by its induced pair: `f_bar`
    /// on `H/cent(H) = Z^n` and the sign `epsilon` of its action on the
    /// center.
    HeisenbergByZ { n: u32, form: IntMatrix, f_bar: IntMatrix, epsilon: i8 },
    /// The additive group of `p`-adic fractions `Z[1/p]`.
    ZOneOverP { p: u64 },
    /// A countable group known only through the listed local properties.
    CountableLocal { kind: LocalKind, infinite: bool, virtually_cyclic: bool },
    Product { left: Box<GroupSpec>, right: Box<GroupSpec> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        ValidationReport { ok: violations.is_empty(), violations }
    }

    /// Flattens the violations into an error; `Ok` when the report is clean.
    pub fn into_result(self) -> Result<()> {
        if self.ok {
            Ok(())
        } else {
            let msgs: Vec<String> =
                self.violations.iter().map(|v| format!("[{}] {}", v.rule, v.message)).collect();
            Err(Error::InvalidSpec(msgs.join("; ")))
        }
    }
}

fn violation(out: &mut Vec<Violation>, rule: String, message: impl Into<String>) {
    out.push(Violation { rule, message: message.into() });
}

/// Checks every structural invariant of the spec. Total: never raises on
/// syntactically well-formed input.
pub fn validate_spec(g: &GroupSpec) -> ValidationReport {
    let mut v = Vec::new();
    collect_violations(g, "", &mut v);
    ValidationReport::from_violations(v)
}

fn collect_violations(g: &GroupSpec, prefix: &str, out: &mut Vec<Violation>) {
    let rule = |name: &str| format!("{prefix}{name}");
    match g {
        GroupSpec::FreeAbelian { .. } => {}
        GroupSpec::ZnByZ { n, a } => {
            let n = *n as usize;
            if n == 0 {
                violation(out, rule("zn_by_z.rank"), "n must be positive");
                return;
            }
            if a.rows() != n || a.cols() != n {
                violation(
                    out,
                    rule("zn_by_z.shape"),
                    format!("A must be {n}x{n}, got {}x{}", a.rows(), a.cols()),
                );
                return;
            }
            let det = a.det().expect("square");
            if !det.abs().is_one() {
                violation(out, rule("zn_by_z.unimodular"), format!("|det A| must be 1, got {det}"));
            }
        }
        GroupSpec::Crystallographic { n, point_group } => {
            let n = *n as usize;
            if n == 0 {
                violation(out, rule("crystallographic.rank"), "n must be positive");
                return;
            }
            if point_group.len() > POINT_GROUP_CAP {
                violation(
                    out,
                    rule("crystallographic.cap"),
                    format!("point group listing exceeds the cap of {POINT_GROUP_CAP} elements"),
                );
                return;
            }
            for (i, p) in point_group.iter().enumerate() {
                if p.rows() != n || p.cols() != n {
                    violation(
                        out,
                        rule("crystallographic.shape"),
                        format!("point-group element {i} must be {n}x{n}"),
                    );
                    return;
                }
                match p.matrix_order() {
                    Ok(MatrixOrder::Finite(_)) => {}
                    Ok(MatrixOrder::Infinite) => violation(
                        out,
                        rule("crystallographic.finite_order"),
                        format!("point-group element {i} has infinite order"),
                    ),
                    Err(_) => violation(
                        out,
                        rule("crystallographic.finite_order"),
                        format!("point-group element {i} is not invertible over Z"),
                    ),
                }
            }
            let mut seen = std::collections::HashSet::new();
            for p in point_group {
                if !seen.insert(p.clone()) {
                    violation(out, rule("crystallographic.duplicate"), "duplicate point-group element");
                    return;
                }
            }
            if !point_group.iter().any(|p| p.is_identity()) {
                violation(out, rule("crystallographic.identity"), "point group must contain the identity");
                return;
            }
            for a in point_group {
                for b in point_group {
                    let prod = a.mul(b);
                    if !seen.contains(&prod) {
                        violation(
                            out,
                            rule("crystallographic.closed"),
                            "point group listing is not closed under multiplication",
                        );
                        return;
                    }
                }
            }
        }
        GroupSpec::CentralExtension { m, n, form } => {
            let (m, n) = (*m as usize, *n as usize);
            if form.len() != m {
                violation(
                    out,
                    rule("central_extension.form_count"),
                    format!("expected {m} commutator form matrices, got {}", form.len()),
                );
                return;
            }
            for (i, f) in form.iter().enumerate() {
                if f.rows() != n || f.cols() != n {
                    violation(
                        out,
                        rule("central_extension.shape"),
                        format!("form matrix {i} must be {n}x{n}"),
                    );
                    return;
                }
                if !f.is_alternating() {
                    violation(
                        out,
                        rule("central_extension.alternating"),
                        format!("form matrix {i} must be alternating (skew with zero diagonal)"),
                    );
                    return;
                }
            }
            if m > 0 {
                let radical = pairing_radical(n, form);
                let best = min_pairing_radical_rank(m, n);
                if radical.rank() > best {
                    violation(
                        out,
                        rule("central_extension.radical"),
                        format!(
                            "radical nontrivial: cent(G) != Z^m (radical rank {}, best possible {best})",
                            radical.rank(),
                        ),
                    );
                }
            }
        }
        GroupSpec::HeisenbergByZ { n, form, f_bar, epsilon } => {
            let n = *n as usize;
            if n < 2 {
                violation(out, rule("heisenberg.rank"), "n >= 2 is required (n = 1 is rejected)");
                return;
            }
            if form.rows() != n || form.cols() != n || f_bar.rows() != n || f_bar.cols() != n {
                violation(out, rule("heisenberg.shape"), format!("form and f_bar must be {n}x{n}"));
                return;
            }
            if !form.is_alternating() {
                violation(out, rule("heisenberg.alternating"), "form must be alternating");
                return;
            }
            if pairing_radical(n, std::slice::from_ref(form)).rank() > 0 {
                violation(
                    out,
                    rule("heisenberg.radical"),
                    "form must have trivial radical so that cent(H) = Z",
                );
            }
            let det = f_bar.det().expect("square");
            if !det.abs().is_one() {
                violation(out, rule("heisenberg.unimodular"), format!("|det f_bar| must be 1, got {det}"));
            }
            if *epsilon != 1 && *epsilon != -1 {
                violation(out, rule("heisenberg.epsilon"), "epsilon must be +1 or -1");
                return;
            }
            // f_bar^T * form * f_bar = epsilon * form, as an exact identity.
            let lhs = f_bar.transpose().mul(form).mul(f_bar);
            let rhs = if *epsilon == 1 { form.clone() } else { form.neg() };
            if lhs != rhs {
                violation(
                    out,
                    rule("heisenberg.compatibility"),
                    "f_bar^T * form * f_bar = epsilon * form fails",
                );
            }
        }
        GroupSpec::ZOneOverP { p } => {
            if !is_prime(*p) {
                violation(out, rule("z_one_over_p.prime"), format!("{p} is not prime"));
            }
        }
        GroupSpec::CountableLocal { kind, infinite, virtually_cyclic } => {
            if !infinite && !virtually_cyclic {
                violation(
                    out,
                    rule("countable_local.flags"),
                    "a finite group is virtually cyclic; set virtually_cyclic",
                );
            }
            if *kind == LocalKind::LocallyFinite && *infinite && *virtually_cyclic {
                violation(
                    out,
                    rule("countable_local.flags"),
                    "an infinite locally finite group cannot be virtually cyclic",
                );
            }
        }
        GroupSpec::Product { left, right } => {
            collect_violations(left, &format!("{prefix}left."), out);
            collect_violations(right, &format!("{prefix}right."), out);
            for (side, factor) in [("left", left), ("right", right)] {
                if vcd_unchecked(factor).is_none() {
                    violation(
                        out,
                        rule("product.poly_z"),
                        format!("{side} factor is not virtually poly-Z; such products are rejected"),
                    );
                }
            }
        }
    }
}

/// Common kernel of the commutator form matrices: the vectors pairing
/// trivially with everything, computed by stacking the forms.
fn pairing_radical(n: usize, forms: &[IntMatrix]) -> Lattice {
    if forms.is_empty() {
        return Lattice::standard(n);
    }
    let stacked =
        IntMatrix::from_fn(forms.len() * n, n, |r, c| forms[r / n].get(r % n, c).clone());
    stacked.kernel_lattice()
}

/// Smallest radical rank an `m`-tuple of alternating `n x n` forms can
/// achieve. An alternating form has even rank, so a single form on odd
/// `Z^n` always has a kernel, and for `n = 1` every alternating form
/// vanishes; those shapes are accepted with their unavoidable radical.
fn min_pairing_radical_rank(m: usize, n: usize) -> usize {
    if n == 0 {
        0
    } else if n == 1 {
        1
    } else if n.is_multiple_of(2) || m >= 2 {
        0
    } else {
        1
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl GroupSpec {
    /// Canonical form used by the dimension engine: a central extension
    /// with `m = 0` is the plain free abelian quotient.
    pub fn normalized(&self) -> GroupSpec {
        match self {
            GroupSpec::CentralExtension { m: 0, n, .. } => GroupSpec::FreeAbelian { n: *n },
            GroupSpec::Product { left, right } => GroupSpec::Product {
                left: Box::new(left.normalized()),
                right: Box::new(right.normalized()),
            },
            other => other.clone(),
        }
    }

    /// Short human-readable label for reports and error messages.
    pub fn label(&self) -> String {
        match self {
            GroupSpec::FreeAbelian { n } => format!("Z^{n}"),
            GroupSpec::ZnByZ { n, .. } => format!("Z^{n} x| Z"),
            GroupSpec::Crystallographic { n, point_group } => {
                format!("Z^{n}-by-finite ({} point-group elements)", point_group.len())
            }
            GroupSpec::CentralExtension { m, n, .. } => format!("central ext Z^{m} -> G -> Z^{n}"),
            GroupSpec::HeisenbergByZ { n, .. } => format!("(Z -> H -> Z^{n}) x| Z"),
            GroupSpec::ZOneOverP { p } => format!("Z[1/{p}]"),
            GroupSpec::CountableLocal { kind, infinite, virtually_cyclic } => format!(
                "countable {} ({}, {})",
                match kind {
                    LocalKind::LocallyFinite => "locally finite",
                    LocalKind::LocallyVirtuallyCyclic => "locally virtually cyclic",
                },
                if *infinite { "infinite" } else { "finite" },
                if *virtually_cyclic { "virtually cyclic" } else { "not virtually cyclic" },
            ),
            GroupSpec::Product { left, right } => {
                format!("({}) x ({})", left.label(), right.label())
            }
        }
    }
}

/// Hirsch-length bookkeeping without validation; `None` for the classes
/// that are not virtually poly-Z.
pub(crate) fn vcd_unchecked(g: &GroupSpec) -> Option<u64> {
    match g.normalized() {
        GroupSpec::FreeAbelian { n } => Some(n as u64),
        GroupSpec::ZnByZ { n, .. } => Some(n as u64 + 1),
        GroupSpec::Crystallographic { n, .. } => Some(n as u64),
        GroupSpec::CentralExtension { m, n, .. } => Some(m as u64 + n as u64),
        GroupSpec::HeisenbergByZ { n, .. } => Some(n as u64 + 2),
        GroupSpec::ZOneOverP { .. } | GroupSpec::CountableLocal { .. } => None,
        GroupSpec::Product { left, right } => Some(vcd_unchecked(&left)? + vcd_unchecked(&right)?),
    }
}

/// Virtual cohomological dimension. Extensions add vcd, a finite piece
/// contributes nothing, and each infinite cyclic stage contributes 1.
/// `None` means "undefined" (the spec is not virtually poly-Z).
pub fn vcd_of(g: &GroupSpec) -> Result<Option<u64>> {
    validate_spec(g).into_result()?;
    Ok(vcd_unchecked(g))
}

/// Rank of the free part of the center, or `None` when unknown.
///
/// For `HeisenbergByZ` with `epsilon = +1` this reports 1 even though the
/// center could conceivably have rank 2 (the induced pair cannot detect an
/// inner-trivial lift); every consumer only needs the lower bound `>= 1`.
pub fn center_rank(g: &GroupSpec) -> Result<Option<u64>> {
    validate_spec(g).into_result()?;
    center_rank_unchecked(&g.normalized())
}

fn center_rank_unchecked(g: &GroupSpec) -> Result<Option<u64>> {
    Ok(match g {
        GroupSpec::FreeAbelian { n } => Some(*n as u64),
        GroupSpec::ZnByZ { n: _, a } => {
            let fixed = a.fixed_lattice(1)?.rank() as u64;
            Some(fixed + u64::from(a.is_identity()))
        }
        GroupSpec::Crystallographic { n, point_group } => {
            let n = *n as usize;
            let stacked = IntMatrix::from_fn(point_group.len() * n, n, |r, c| {
                let mut e = point_group[r / n].get(r % n, c).clone();
                if r % n == c {
                    e -= BigInt::one();
                }
                e
            });
            Some(stacked.kernel_lattice().rank() as u64)
        }
        GroupSpec::CentralExtension { m, .. } => Some(*m as u64),
        GroupSpec::HeisenbergByZ { epsilon, .. } => Some(if *epsilon == 1 { 1 } else { 0 }),
        GroupSpec::ZOneOverP { .. } | GroupSpec::CountableLocal { .. } => None,
        GroupSpec::Product { left, right } => {
            match (center_rank_unchecked(left)?, center_rank_unchecked(right)?) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            }
        }
    })
}

/// If the group is virtually `Z^r`, the rank `r`; otherwise `None`.
pub(crate) fn virtually_abelian_rank(g: &GroupSpec) -> Result<Option<u64>> {
    Ok(match g {
        GroupSpec::FreeAbelian { n } => Some(*n as u64),
        GroupSpec::Crystallographic { n, .. } => Some(*n as u64),
        GroupSpec::ZnByZ { n, a } => {
            if *n == 1 {
                Some(2)
            } else {
                match a.matrix_order()? {
                    MatrixOrder::Finite(_) => Some(*n as u64 + 1),
                    MatrixOrder::Infinite => None,
                }
            }
        }
        GroupSpec::CentralExtension { m, n: 0, .. } => Some(*m as u64),
        GroupSpec::CentralExtension { .. } | GroupSpec::HeisenbergByZ { .. } => None,
        GroupSpec::ZOneOverP { .. } | GroupSpec::CountableLocal { .. } => None,
        GroupSpec::Product { left, right } => {
            match (virtually_abelian_rank(left)?, virtually_abelian_rank(right)?) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn symplectic2() -> IntMatrix {
        m(&[vec![0, 1], vec![-1, 0]])
    }

    #[test]
    fn heisenberg_by_z_example_validates() {
        let g = GroupSpec::HeisenbergByZ {
            n: 2,
            form: symplectic2(),
            f_bar: m(&[vec![3, 2], vec![1, 1]]),
            epsilon: 1,
        };
        assert!(validate_spec(&g).ok);
    }

    #[test]
    fn heisenberg_rejects_rank_one_and_bad_epsilon() {
        let g = GroupSpec::HeisenbergByZ {
            n: 1,
            form: IntMatrix::zero(1, 1),
            f_bar: IntMatrix::identity(1),
            epsilon: 1,
        };
        let r = validate_spec(&g);
        assert!(!r.ok);
        assert!(r.violations.iter().any(|v| v.rule == "heisenberg.rank"));

        let g = GroupSpec::HeisenbergByZ {
            n: 2,
            form: symplectic2(),
            f_bar: m(&[vec![3, 2], vec![1, 1]]),
            epsilon: -1, // det f_bar = +1, so the compatibility identity fails
        };
        let r = validate_spec(&g);
        assert!(r.violations.iter().any(|v| v.rule == "heisenberg.compatibility"));
    }

    #[test]
    fn zn_by_z_accepts_det_minus_one() {
        let g = GroupSpec::ZnByZ { n: 2, a: m(&[vec![2, 1], vec![1, 0]]) };
        assert!(validate_spec(&g).ok);
        let g = GroupSpec::ZnByZ { n: 2, a: m(&[vec![2, 0], vec![0, 1]]) };
        assert!(!validate_spec(&g).ok);
    }

    #[test]
    fn central_extension_zero_form_is_rejected() {
        let g = GroupSpec::CentralExtension { m: 1, n: 2, form: vec![IntMatrix::zero(2, 2)] };
        let r = validate_spec(&g);
        assert!(!r.ok);
        assert!(r
            .violations
            .iter()
            .any(|v| v.rule == "central_extension.radical"
                && v.message.contains("radical nontrivial")));
    }

    #[test]
    fn central_extension_unavoidable_radical_is_accepted() {
        // n = 1 admits only the zero pairing; the radical is unavoidable.
        let g = GroupSpec::CentralExtension {
            m: 2,
            n: 1,
            form: vec![IntMatrix::zero(1, 1), IntMatrix::zero(1, 1)],
        };
        assert!(validate_spec(&g).ok, "{:?}", validate_spec(&g).violations);
        // Odd n with a single form: rank-1 radical is the best possible.
        let j_plus_zero = m(&[vec![0, 1, 0], vec![-1, 0, 0], vec![0, 0, 0]]);
        let g = GroupSpec::CentralExtension { m: 1, n: 3, form: vec![j_plus_zero] };
        assert!(validate_spec(&g).ok);
        // But a sloppier n = 3 form with a rank-3 radical is rejected.
        let g = GroupSpec::CentralExtension { m: 1, n: 3, form: vec![IntMatrix::zero(3, 3)] };
        assert!(!validate_spec(&g).ok);
    }

    #[test]
    fn crystallographic_closure_check() {
        let id = IntMatrix::identity(2);
        let rot = m(&[vec![0, -1], vec![1, 0]]);
        let g = GroupSpec::Crystallographic { n: 2, point_group: vec![id.clone(), rot.clone()] };
        let r = validate_spec(&g);
        assert!(r.violations.iter().any(|v| v.rule == "crystallographic.closed"));

        let full =
            vec![id.clone(), rot.clone(), rot.mul(&rot), rot.mul(&rot).mul(&rot)];
        let g = GroupSpec::Crystallographic { n: 2, point_group: full };
        assert!(validate_spec(&g).ok);
    }

    #[test]
    fn vcd_examples() {
        let hei = GroupSpec::HeisenbergByZ {
            n: 2,
            form: symplectic2(),
            f_bar: m(&[vec![3, 2], vec![1, 1]]),
            epsilon: 1,
        };
        assert_eq!(vcd_of(&hei).unwrap(), Some(4));
        assert_eq!(vcd_of(&GroupSpec::FreeAbelian { n: 3 }).unwrap(), Some(3));
        let prod = GroupSpec::Product { left: Box::new(hei.clone()), right: Box::new(hei) };
        assert_eq!(vcd_of(&prod).unwrap(), Some(8));
        assert_eq!(vcd_of(&GroupSpec::ZOneOverP { p: 5 }).unwrap(), None);
    }

    #[test]
    fn center_rank_examples() {
        assert_eq!(center_rank(&GroupSpec::FreeAbelian { n: 2 }).unwrap(), Some(2));
        let hyper = GroupSpec::ZnByZ { n: 2, a: m(&[vec![2, 1], vec![1, 1]]) };
        assert_eq!(center_rank(&hyper).unwrap(), Some(0));
        let z3 = GroupSpec::ZnByZ { n: 2, a: IntMatrix::identity(2) };
        assert_eq!(center_rank(&z3).unwrap(), Some(3));
        let hei = GroupSpec::HeisenbergByZ {
            n: 2,
            form: symplectic2(),
            f_bar: m(&[vec![3, 2], vec![1, 1]]),
            epsilon: 1,
        };
        assert_eq!(center_rank(&hei).unwrap(), Some(1));
    }

    #[test]
    fn central_extension_m0_normalizes_to_free_abelian() {
        let g = GroupSpec::CentralExtension { m: 0, n: 3, form: vec![] };
        assert_eq!(g.normalized(), GroupSpec::FreeAbelian { n: 3 });
        assert_eq!(vcd_of(&g).unwrap(), Some(3));
    }

    #[test]
    fn product_rejects_non_poly_z_factor() {
        let g = GroupSpec::Product {
            left: Box::new(GroupSpec::FreeAbelian { n: 2 }),
            right: Box::new(GroupSpec::ZOneOverP { p: 3 }),
        };
        let r = validate_spec(&g);
        assert!(r.violations.iter().any(|v| v.rule == "product.poly_z"));
    }

    #[test]
    fn countable_local_flag_consistency() {
        let bad = GroupSpec::CountableLocal {
            kind: LocalKind::LocallyFinite,
            infinite: true,
            virtually_cyclic: true,
        };
        assert!(!validate_spec(&bad).ok);
        let finite_not_vc = GroupSpec::CountableLocal {
            kind: LocalKind::LocallyFinite,
            infinite: false,
            virtually_cyclic: false,
        };
        assert!(!validate_spec(&finite_not_vc).ok);
    }

    #[test]
    fn spec_json_round_trip() {
        let g: GroupSpec =
            serde_json::from_str(r#"{"tag":"zn_by_z","n":2,"A":[[2,1],[1,1]]}"#).unwrap();
        assert_eq!(g, GroupSpec::ZnByZ { n: 2, a: m(&[vec![2, 1], vec![1, 1]]) });
        let back = serde_json::to_string(&g).unwrap();
        let again: GroupSpec = serde_json::from_str(&back).unwrap();
        assert_eq!(again, g);

        let g: GroupSpec = serde_json::from_str(r#"{"tag":"free_abelian","n":2}"#).unwrap();
        assert_eq!(g, GroupSpec::FreeAbelian { n: 2 });

        let g: GroupSpec = serde_json::from_str(
            r#"{"tag":"heisenberg_by_z","n":2,"form":[[0,1],[-1,0]],"f_bar":[[1,1],[0,1]],"epsilon":1}"#,
        )
        .unwrap();
        assert!(validate_spec(&g).ok);
    }
}
