//! The case dispatcher.
//!
//! For each supported group the engine produces the pair
//! `hdim_fin = hdim^G(E_FIN G)` and `hdim_vcyc = hdim^G(E_VCY G)` together
//! with the case of the classification that fired and machine-checkable
//! witnesses for it.
//!
//! For a virtually poly-Z group that is not virtually cyclic there are
//! exactly four possibilities, distinguished by the commensurability
//! classes of infinite cyclic subgroups whose commensurator has finite
//! index:
//!
//! * no such class: `hdim_vcyc = vcd`;
//! * a unique class, every other class has commensurator of dimension at
//!   most `vcd - 2`: `hdim_vcyc = vcd - 1`;
//! * a unique class, some other class reaches `vcd - 1`:
//!   `hdim_vcyc = vcd`;
//! * more than one class (a finite-index subgroup has `Z^2` in its
//!   center): `hdim_vcyc = vcd + 1`.
//!
//! All discriminators reduce to exact lattice computations on the
//! defining matrices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{
    center_rank, validate_spec, virtually_abelian_rank, GroupSpec, LocalKind,
};
use crate::lattice::Lattice;
use crate::matrix::{IntMatrix, MatrixOrder};
use crate::poly::IntPoly;

/// Which case of the classification produced the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseTag {
    /// No commensurability class with finite-index commensurator.
    #[serde(rename = "PolyZ_Empty")]
    PolyZEmpty,
    /// Unique class, all others at most `vcd - 2`: value `vcd - 1`.
    #[serde(rename = "PolyZ_UniqueLow")]
    PolyZUniqueLow,
    /// Unique class, some other class reaches `vcd - 1`: value `vcd`.
    #[serde(rename = "PolyZ_UniqueHigh")]
    PolyZUniqueHigh,
    /// More than one class: value `vcd + 1`.
    #[serde(rename = "PolyZ_Many")]
    PolyZMany,
    /// Contains `Z^n` with finite index; handled by the virtually abelian rule.
    #[serde(rename = "VirtuallyZn")]
    VirtuallyZn,
    #[serde(rename = "LowDim_LocallyFinite")]
    LowDimLocallyFinite,
    #[serde(rename = "LowDim_LocallyVC")]
    LowDimLocallyVc,
    #[serde(rename = "LowDim_VC")]
    LowDimVc,
    #[serde(rename = "ZOneOverP")]
    ZOneOverP,
    /// Product resolved exactly (virtually abelian factors).
    #[serde(rename = "ProductExact")]
    ProductExact,
    /// Product bounded by the sandwich and the `+3` product inequality.
    #[serde(rename = "ProductBounds")]
    ProductBounds,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::PolyZEmpty => "PolyZ_Empty",
            CaseTag::PolyZUniqueLow => "PolyZ_UniqueLow",
            CaseTag::PolyZUniqueHigh => "PolyZ_UniqueHigh",
            CaseTag::PolyZMany => "PolyZ_Many",
            CaseTag::VirtuallyZn => "VirtuallyZn",
            CaseTag::LowDimLocallyFinite => "LowDim_LocallyFinite",
            CaseTag::LowDimLocallyVc => "LowDim_LocallyVC",
            CaseTag::LowDimVc => "LowDim_VC",
            CaseTag::ZOneOverP => "ZOneOverP",
            CaseTag::ProductExact => "ProductExact",
            CaseTag::ProductBounds => "ProductBounds",
        }
    }
}

/// An exact dimension or, for products outside the exact rules, an
/// interval that is guaranteed to contain the true value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DimValue {
    Exact(u64),
    Interval { lo: u64, hi: u64 },
}

impl DimValue {
    pub fn exact(&self) -> Option<u64> {
        match self {
            DimValue::Exact(v) => Some(*v),
            DimValue::Interval { .. } => None,
        }
    }

    pub fn bounds(&self) -> (u64, u64) {
        match *self {
            DimValue::Exact(v) => (v, v),
            DimValue::Interval { lo, hi } => (lo, hi),
        }
    }
}

impl std::fmt::Display for DimValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DimValue::Exact(v) => write!(f, "{v}"),
            DimValue::Interval { lo, hi } => write!(f, "[{lo}, {hi}]"),
        }
    }
}

/// Payload of a witness; each variant is checkable by a stated predicate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WitnessData {
    /// A sublattice; when `power` is set, every basis vector is fixed by
    /// the `power`-th matrix power of the defining automorphism.
    Lattice {
        lattice: Lattice,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        power: Option<u64>,
    },
    Matrix { matrix: IntMatrix },
    /// Cyclotomic-free remainder of the characteristic polynomial; no
    /// nontrivial fixed lattice exists when it carries the full degree.
    Poly { poly: IntPoly },
    Int { value: i64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: String,
    pub data: WitnessData,
    pub citation: String,
}

impl Witness {
    fn lattice(kind: &str, citation: &str, lattice: Lattice, power: Option<u64>) -> Self {
        Witness {
            kind: kind.to_string(),
            data: WitnessData::Lattice { lattice, power },
            citation: citation.to_string(),
        }
    }

    fn poly(kind: &str, citation: &str, poly: IntPoly) -> Self {
        Witness { kind: kind.to_string(), data: WitnessData::Poly { poly }, citation: citation.to_string() }
    }

    fn int(kind: &str, citation: &str, value: i64) -> Self {
        Witness { kind: kind.to_string(), data: WitnessData::Int { value }, citation: citation.to_string() }
    }
}

/// Full output record for one group.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimReport {
    pub spec: GroupSpec,
    /// Virtual cohomological dimension; `None` outside the poly-Z classes.
    pub vcd: Option<u64>,
    pub hdim_fin: u64,
    pub hdim_vcyc: DimValue,
    pub case: CaseTag,
    pub witnesses: Vec<Witness>,
    pub citations: Vec<String>,
}

// Stable citation labels; golden tests assert which rule fired.
pub mod citation {
    pub const FIN_EQUALS_VCD: &str = "fin-dimension-equals-vcd";
    pub const VIRTUALLY_ABELIAN: &str = "virtually-abelian-rule";
    pub const POLY_Z_EMPTY: &str = "poly-z-case-empty";
    pub const POLY_Z_UNIQUE_LOW: &str = "poly-z-case-unique-low";
    pub const POLY_Z_UNIQUE_HIGH: &str = "poly-z-case-unique-high";
    pub const POLY_Z_MANY: &str = "poly-z-case-many";
    pub const ZN_BY_Z_DICHOTOMY: &str = "zn-by-z-dichotomy";
    pub const CENTRAL_EXTENSION: &str = "central-extension-rule";
    pub const HEISENBERG_BY_Z: &str = "heisenberg-by-z-rule";
    pub const LOW_DIMENSION: &str = "low-dimension-table";
    pub const Z_ONE_OVER_P: &str = "z-one-over-p-rule";
    pub const PRODUCT_DELEGATION: &str = "product-delegation";
    pub const PRODUCT_CENTER: &str = "product-center-rule";
    pub const PRODUCT_BOUNDS: &str = "product-bounds-rule";
}

/// Computes the full report for one group. The spec is validated first;
/// invalid specs produce an error, never a partial report.
pub fn compute_report(g: &GroupSpec) -> Result<DimReport> {
    validate_spec(g).into_result()?;
    let normalized = g.normalized();
    let mut report = analyze(&normalized)?;
    report.spec = g.clone();
    Ok(report)
}

/// `hdim^G(E_FIN G)`: equals vcd on the poly-Z classes and follows the
/// low-dimension table elsewhere.
pub fn hdim_fin(g: &GroupSpec) -> Result<u64> {
    Ok(compute_report(g)?.hdim_fin)
}

/// `hdim^G(E_VCY G)`: exact for every non-product class, possibly an
/// interval for products.
pub fn hdim_vcyc(g: &GroupSpec) -> Result<DimValue> {
    Ok(compute_report(g)?.hdim_vcyc)
}

/// The classification case together with its witnesses. Only defined for
/// the virtually poly-Z classes.
pub fn classify_case(g: &GroupSpec) -> Result<(CaseTag, Vec<Witness>)> {
    let report = compute_report(g)?;
    if report.vcd.is_none() {
        return Err(Error::Unsupported(format!(
            "classification cases apply to virtually poly-Z groups, not {}",
            g.label()
        )));
    }
    Ok((report.case, report.witnesses))
}

fn analyze(g: &GroupSpec) -> Result<DimReport> {
    match g {
        GroupSpec::FreeAbelian { n } => Ok(free_abelian_report(g.clone(), *n as u64)),
        GroupSpec::ZnByZ { n, a } => zn_by_z_report(g.clone(), *n as u64, a),
        GroupSpec::Crystallographic { n, .. } => {
            let n = *n as u64;
            let mut rep = virtually_abelian_report(g.clone(), n, n);
            rep.citations.insert(0, citation::FIN_EQUALS_VCD.to_string());
            Ok(rep)
        }
        GroupSpec::CentralExtension { m, n, .. } => {
            central_extension_report(g.clone(), *m as u64, *n as u64)
        }
        GroupSpec::HeisenbergByZ { n, f_bar, .. } => {
            heisenberg_report(g.clone(), *n as u64, f_bar)
        }
        GroupSpec::ZOneOverP { .. } => Ok(DimReport {
            spec: g.clone(),
            vcd: None,
            hdim_fin: 2,
            hdim_vcyc: DimValue::Exact(1),
            case: CaseTag::ZOneOverP,
            witnesses: vec![],
            citations: vec![citation::Z_ONE_OVER_P.to_string()],
        }),
        GroupSpec::CountableLocal { kind, infinite, virtually_cyclic } => {
            let (fin, vcyc) = low_dim_table(*kind, *infinite, *virtually_cyclic)?;
            let case = if *virtually_cyclic || !*infinite {
                CaseTag::LowDimVc
            } else if *kind == LocalKind::LocallyFinite {
                CaseTag::LowDimLocallyFinite
            } else {
                CaseTag::LowDimLocallyVc
            };
            Ok(DimReport {
                spec: g.clone(),
                vcd: None,
                hdim_fin: fin,
                hdim_vcyc: DimValue::Exact(vcyc),
                case,
                witnesses: vec![],
                citations: vec![citation::LOW_DIMENSION.to_string()],
            })
        }
        GroupSpec::Product { left, right } => {
            let a = analyze(left)?;
            let b = analyze(right)?;
            product_dims(&a, &b)
        }
    }
}

/// `Z^r` and anything containing it with finite index: `E_VCY` needs
/// `r + 1` dimensions once `r >= 2`, and collapses to a point for
/// virtually cyclic groups.
fn virtually_abelian_vcyc(rank: u64) -> u64 {
    if rank <= 1 {
        0
    } else {
        rank + 1
    }
}

fn free_abelian_report(spec: GroupSpec, n: u64) -> DimReport {
    if n >= 2 {
        let witnesses = coordinate_axis_witnesses(n as usize, citation::POLY_Z_MANY);
        DimReport {
            spec,
            vcd: Some(n),
            hdim_fin: n,
            hdim_vcyc: DimValue::Exact(n + 1),
            case: CaseTag::PolyZMany,
            witnesses,
            citations: vec![
                citation::FIN_EQUALS_VCD.to_string(),
                citation::VIRTUALLY_ABELIAN.to_string(),
                citation::POLY_Z_MANY.to_string(),
            ],
        }
    } else {
        DimReport {
            spec,
            vcd: Some(n),
            hdim_fin: n,
            hdim_vcyc: DimValue::Exact(0),
            case: CaseTag::VirtuallyZn,
            witnesses: vec![Witness::int(
                "virtually-cyclic",
                citation::VIRTUALLY_ABELIAN,
                n as i64,
            )],
            citations: vec![
                citation::FIN_EQUALS_VCD.to_string(),
                citation::VIRTUALLY_ABELIAN.to_string(),
            ],
        }
    }
}

/// Two non-commensurable saturated rank-1 sublattices: the first two
/// coordinate axes.
fn coordinate_axis_witnesses(ambient: usize, citation: &str) -> Vec<Witness> {
    (0..2)
        .map(|i| {
            Witness::lattice(
                "commensurability-class",
                citation,
                Lattice::standard(ambient).primitive_column(i),
                None,
            )
        })
        .collect()
}

fn virtually_abelian_report(spec: GroupSpec, vcd: u64, rank: u64) -> DimReport {
    DimReport {
        spec,
        vcd: Some(vcd),
        hdim_fin: vcd,
        hdim_vcyc: DimValue::Exact(virtually_abelian_vcyc(rank)),
        case: CaseTag::VirtuallyZn,
        witnesses: vec![Witness::int(
            "virtually-abelian-rank",
            citation::VIRTUALLY_ABELIAN,
            rank as i64,
        )],
        citations: vec![citation::VIRTUALLY_ABELIAN.to_string()],
    }
}

fn zn_by_z_report(spec: GroupSpec, n: u64, a: &IntMatrix) -> Result<DimReport> {
    let vcd = n + 1;
    if n == 1 {
        // Z^2 or the Klein-bottle group: virtually Z^2 either way. The
        // generic dichotomy must not be applied at n = 1.
        let mut rep = virtually_abelian_report(spec, vcd, 2);
        rep.citations.insert(0, citation::FIN_EQUALS_VCD.to_string());
        return Ok(rep);
    }
    if let MatrixOrder::Finite(k) = a.matrix_order()? {
        // Finite-order twist: the group is virtually Z^{n+1}.
        let mut rep = virtually_abelian_report(spec, vcd, n + 1);
        rep.witnesses.push(Witness::int(
            "automorphism-order",
            citation::VIRTUALLY_ABELIAN,
            k as i64,
        ));
        rep.citations.insert(0, citation::FIN_EQUALS_VCD.to_string());
        return Ok(rep);
    }
    let (k_star, rank) = a.max_fixed_rank()?;
    let fixed = a.fixed_lattice(k_star)?;
    let (case, hdim, witnesses) = match rank {
        0 => {
            let remainder = a.char_poly()?.cyclotomic_factorization()?.remainder;
            (
                CaseTag::PolyZEmpty,
                vcd,
                vec![Witness::poly(
                    "cyclotomic-free-remainder",
                    citation::POLY_Z_EMPTY,
                    remainder,
                )],
            )
        }
        1 => (
            CaseTag::PolyZUniqueHigh,
            vcd,
            vec![Witness::lattice(
                "fixed-lattice",
                citation::POLY_Z_UNIQUE_HIGH,
                fixed,
                Some(k_star),
            )],
        ),
        _ => (
            CaseTag::PolyZMany,
            vcd + 1,
            vec![Witness::lattice(
                "fixed-lattice",
                citation::POLY_Z_MANY,
                fixed,
                Some(k_star),
            )],
        ),
    };
    let case_citation = match case {
        CaseTag::PolyZEmpty => citation::POLY_Z_EMPTY,
        CaseTag::PolyZUniqueHigh => citation::POLY_Z_UNIQUE_HIGH,
        _ => citation::POLY_Z_MANY,
    };
    Ok(DimReport {
        spec,
        vcd: Some(vcd),
        hdim_fin: vcd,
        hdim_vcyc: DimValue::Exact(hdim),
        case,
        witnesses,
        citations: vec![
            citation::FIN_EQUALS_VCD.to_string(),
            citation::ZN_BY_Z_DICHOTOMY.to_string(),
            case_citation.to_string(),
        ],
    })
}

fn central_extension_report(spec: GroupSpec, m: u64, n: u64) -> Result<DimReport> {
    let vcd = m + n;
    if vcd <= 1 {
        // Trivial or infinite cyclic.
        let mut rep = virtually_abelian_report(spec, vcd, vcd);
        rep.citations.insert(0, citation::CENTRAL_EXTENSION.to_string());
        return Ok(rep);
    }
    if n == 0 {
        // Center is everything: the group is Z^m.
        let mut rep = free_abelian_report(spec, m);
        rep.citations.insert(0, citation::CENTRAL_EXTENSION.to_string());
        return Ok(rep);
    }
    if m == 1 {
        // Unique class through the center; every transversal class has a
        // commensurator of dimension exactly n = vcd - 1.
        Ok(DimReport {
            spec,
            vcd: Some(vcd),
            hdim_fin: vcd,
            hdim_vcyc: DimValue::Exact(n + 1),
            case: CaseTag::PolyZUniqueHigh,
            witnesses: vec![
                Witness::int("normal-cyclic-center", citation::POLY_Z_UNIQUE_HIGH, 1),
                Witness::int(
                    "transversal-commensurator-dim",
                    citation::POLY_Z_UNIQUE_HIGH,
                    n as i64,
                ),
            ],
            citations: vec![
                citation::FIN_EQUALS_VCD.to_string(),
                citation::CENTRAL_EXTENSION.to_string(),
                citation::POLY_Z_UNIQUE_HIGH.to_string(),
            ],
        })
    } else {
        // m >= 2: the center already contains Z^2.
        Ok(DimReport {
            spec,
            vcd: Some(vcd),
            hdim_fin: vcd,
            hdim_vcyc: DimValue::Exact(vcd + 1),
            case: CaseTag::PolyZMany,
            witnesses: coordinate_axis_witnesses(m as usize, citation::POLY_Z_MANY),
            citations: vec![
                citation::FIN_EQUALS_VCD.to_string(),
                citation::CENTRAL_EXTENSION.to_string(),
                citation::POLY_Z_MANY.to_string(),
            ],
        })
    }
}

fn heisenberg_report(spec: GroupSpec, n: u64, f_bar: &IntMatrix) -> Result<DimReport> {
    let vcd = n + 2;
    let center = Witness::int("center-generator", citation::HEISENBERG_BY_Z, 1);
    let (case, hdim, mut witnesses) = match f_bar.matrix_order()? {
        MatrixOrder::Finite(k) => (
            CaseTag::PolyZMany,
            n + 3,
            vec![Witness::int("fbar-order", citation::POLY_Z_MANY, k as i64)],
        ),
        MatrixOrder::Infinite => {
            let (k_star, rank) = f_bar.max_fixed_rank()?;
            if rank == 0 {
                let remainder = f_bar.char_poly()?.cyclotomic_factorization()?.remainder;
                (
                    CaseTag::PolyZUniqueLow,
                    n + 1,
                    vec![Witness::poly(
                        "cyclotomic-free-remainder",
                        citation::POLY_Z_UNIQUE_LOW,
                        remainder,
                    )],
                )
            } else {
                (
                    CaseTag::PolyZUniqueHigh,
                    n + 2,
                    vec![Witness::lattice(
                        "fixed-lattice",
                        citation::POLY_Z_UNIQUE_HIGH,
                        f_bar.fixed_lattice(k_star)?,
                        Some(k_star),
                    )],
                )
            }
        }
    };
    witnesses.insert(0, center);
    let case_citation = match case {
        CaseTag::PolyZUniqueLow => citation::POLY_Z_UNIQUE_LOW,
        CaseTag::PolyZUniqueHigh => citation::POLY_Z_UNIQUE_HIGH,
        _ => citation::POLY_Z_MANY,
    };
    Ok(DimReport {
        spec,
        vcd: Some(vcd),
        hdim_fin: vcd,
        hdim_vcyc: DimValue::Exact(hdim),
        case,
        witnesses,
        citations: vec![
            citation::FIN_EQUALS_VCD.to_string(),
            citation::HEISENBERG_BY_Z.to_string(),
            case_citation.to_string(),
        ],
    })
}

/// The countable low-dimension table.
///
/// `kind` is the most specific class known for the group: a locally
/// virtually cyclic spec is taken to be not locally finite (otherwise the
/// stronger kind applies).
pub fn low_dim_table(kind: LocalKind, infinite: bool, virtually_cyclic: bool) -> Result<(u64, u64)> {
    let spec = GroupSpec::CountableLocal { kind, infinite, virtually_cyclic };
    validate_spec(&spec).into_result()?;
    if !infinite {
        return Ok((0, 0));
    }
    Ok(match kind {
        LocalKind::LocallyFinite => (1, 1),
        LocalKind::LocallyVirtuallyCyclic => {
            if virtually_cyclic {
                (1, 0)
            } else {
                (2, 1)
            }
        }
    })
}

/// Combines two exact reports of virtually poly-Z groups.
///
/// Exact whenever both factors are virtually abelian (delegation to the
/// free abelian rule) or both have provably positive central rank (the
/// product center then contains `Z^2`). Otherwise an interval is
/// returned, never a guess: the sandwich around vcd intersected with the
/// `+3` product upper bound and the restriction lower bound.
pub fn product_dims(a: &DimReport, b: &DimReport) -> Result<DimReport> {
    let (Some(vcd_a), Some(vcd_b)) = (a.vcd, b.vcd) else {
        return Err(Error::Unsupported(format!(
            "product factors must be virtually poly-Z, got {} and {}",
            a.spec.label(),
            b.spec.label()
        )));
    };
    let (Some(ha), Some(hb)) = (a.hdim_vcyc.exact(), b.hdim_vcyc.exact()) else {
        return Err(Error::InexactProduct);
    };
    let spec =
        GroupSpec::Product { left: Box::new(a.spec.clone()), right: Box::new(b.spec.clone()) };
    let vcd = vcd_a + vcd_b;

    if let (Some(ra), Some(rb)) =
        (virtually_abelian_rank(&a.spec)?, virtually_abelian_rank(&b.spec)?)
    {
        let rank = ra + rb;
        let mut rep = virtually_abelian_report(spec, vcd, rank);
        rep.case = CaseTag::ProductExact;
        rep.citations = vec![
            citation::PRODUCT_DELEGATION.to_string(),
            citation::VIRTUALLY_ABELIAN.to_string(),
        ];
        return Ok(rep);
    }

    let ca = center_rank(&a.spec)?.unwrap_or(0);
    let cb = center_rank(&b.spec)?.unwrap_or(0);
    if ca >= 1 && cb >= 1 {
        // Each factor contributes an infinite cyclic central subgroup, so
        // the product center contains Z^2.
        return Ok(DimReport {
            spec,
            vcd: Some(vcd),
            hdim_fin: vcd,
            hdim_vcyc: DimValue::Exact(vcd + 1),
            case: CaseTag::PolyZMany,
            witnesses: vec![
                Witness::int("left-center-rank", citation::PRODUCT_CENTER, ca as i64),
                Witness::int("right-center-rank", citation::PRODUCT_CENTER, cb as i64),
            ],
            citations: vec![
                citation::FIN_EQUALS_VCD.to_string(),
                citation::PRODUCT_CENTER.to_string(),
                citation::POLY_Z_MANY.to_string(),
            ],
        });
    }

    let lo = (vcd - 1).max(ha).max(hb);
    let hi = (vcd + 1).min(ha + hb + 3);
    Ok(DimReport {
        spec,
        vcd: Some(vcd),
        hdim_fin: vcd,
        hdim_vcyc: if lo == hi {
            DimValue::Exact(lo)
        } else {
            DimValue::Interval { lo, hi }
        },
        case: CaseTag::ProductBounds,
        witnesses: vec![],
        citations: vec![citation::FIN_EQUALS_VCD.to_string(), citation::PRODUCT_BOUNDS.to_string()],
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

    fn hei(f_bar: &[Vec<i64>], epsilon: i8) -> GroupSpec {
        GroupSpec::HeisenbergByZ { n: 2, form: symplectic2(), f_bar: m(f_bar), epsilon }
    }

    fn pair(g: &GroupSpec) -> (u64, DimValue) {
        let r = compute_report(g).unwrap();
        (r.hdim_fin, r.hdim_vcyc)
    }

    #[test]
    fn heisenberg_family() {
        let hyper = hei(&[vec![3, 2], vec![1, 1]], 1);
        assert_eq!(pair(&hyper), (4, DimValue::Exact(3)));
        let shear = hei(&[vec![1, 1], vec![0, 1]], 1);
        assert_eq!(pair(&shear), (4, DimValue::Exact(4)));
        let id = hei(&[vec![1, 0], vec![0, 1]], 1);
        assert_eq!(pair(&id), (4, DimValue::Exact(5)));
    }

    #[test]
    fn heisenberg_case_monotonicity() {
        // n+1 < n+2 < n+3 across the three cases.
        let values = [
            hei(&[vec![3, 2], vec![1, 1]], 1),
            hei(&[vec![1, 1], vec![0, 1]], 1),
            hei(&[vec![1, 0], vec![0, 1]], 1),
        ]
        .map(|g| hdim_vcyc(&g).unwrap().exact().unwrap());
        assert_eq!(values, [3, 4, 5]);
    }

    #[test]
    fn free_abelian_rule() {
        assert_eq!(pair(&GroupSpec::FreeAbelian { n: 0 }), (0, DimValue::Exact(0)));
        assert_eq!(pair(&GroupSpec::FreeAbelian { n: 1 }), (1, DimValue::Exact(0)));
        for n in 2..=5u32 {
            assert_eq!(
                pair(&GroupSpec::FreeAbelian { n }),
                (n as u64, DimValue::Exact(n as u64 + 1))
            );
        }
    }

    #[test]
    fn zn_by_z_dichotomy() {
        let hyperbolic = GroupSpec::ZnByZ { n: 2, a: m(&[vec![2, 1], vec![1, 1]]) };
        assert_eq!(pair(&hyperbolic), (3, DimValue::Exact(3)));

        let unipotent = GroupSpec::ZnByZ { n: 2, a: m(&[vec![1, 1], vec![0, 1]]) };
        assert_eq!(pair(&unipotent), (3, DimValue::Exact(3)));

        let torus = GroupSpec::ZnByZ { n: 2, a: IntMatrix::identity(2) };
        assert_eq!(pair(&torus), (3, DimValue::Exact(4)));
    }

    #[test]
    fn zn_by_z_rank_one_edge() {
        let klein = GroupSpec::ZnByZ { n: 1, a: m(&[vec![-1]]) };
        assert_eq!(pair(&klein), (2, DimValue::Exact(3)));
        assert_eq!(compute_report(&klein).unwrap().case, CaseTag::VirtuallyZn);
        let z2 = GroupSpec::ZnByZ { n: 1, a: m(&[vec![1]]) };
        assert_eq!(pair(&z2), (2, DimValue::Exact(3)));
    }

    #[test]
    fn finite_order_twist_matches_free_abelian() {
        // All finite orders realizable in GL_2(Z): 1, 2, 3, 4, 6.
        let reps = [
            IntMatrix::identity(2),
            m(&[vec![-1, 0], vec![0, -1]]),
            m(&[vec![0, -1], vec![1, -1]]),
            m(&[vec![0, -1], vec![1, 0]]),
            m(&[vec![0, -1], vec![1, 1]]),
            m(&[vec![1, 0], vec![0, -1]]),
            m(&[vec![0, 1], vec![1, 0]]),
        ];
        let expected = pair(&GroupSpec::FreeAbelian { n: 3 });
        for a in reps {
            assert!(a.matrix_order().unwrap() != MatrixOrder::Infinite);
            let g = GroupSpec::ZnByZ { n: 2, a };
            assert_eq!(pair(&g), expected);
        }
    }

    #[test]
    fn classify_case_examples() {
        let (case, wit) =
            classify_case(&GroupSpec::ZnByZ { n: 2, a: m(&[vec![2, 1], vec![1, 1]]) }).unwrap();
        assert_eq!(case, CaseTag::PolyZEmpty);
        assert!(wit.iter().any(|w| {
            w.kind == "cyclotomic-free-remainder"
                && w.data == WitnessData::Poly { poly: IntPoly::from_i64(&[1, -3, 1]) }
        }));

        let (case, wit) =
            classify_case(&GroupSpec::ZnByZ { n: 2, a: m(&[vec![1, 1], vec![0, 1]]) }).unwrap();
        assert_eq!(case, CaseTag::PolyZUniqueHigh);
        let lattice_witness = wit
            .iter()
            .find_map(|w| match &w.data {
                WitnessData::Lattice { lattice, power } => Some((lattice.clone(), *power)),
                _ => None,
            })
            .unwrap();
        assert_eq!(lattice_witness.0.rank(), 1);
        assert_eq!(lattice_witness.1, Some(1));

        let (case, wit) = classify_case(&hei(&[vec![3, 2], vec![1, 1]], 1)).unwrap();
        assert_eq!(case, CaseTag::PolyZUniqueLow);
        assert!(wit.iter().any(|w| w.kind == "center-generator"));
        assert!(wit.iter().any(|w| w.kind == "cyclotomic-free-remainder"));

        assert!(classify_case(&GroupSpec::ZOneOverP { p: 2 }).is_err());
    }

    #[test]
    fn classify_witness_lattices_are_fixed() {
        let samples = [
            GroupSpec::ZnByZ { n: 2, a: m(&[vec![1, 1], vec![0, 1]]) },
            GroupSpec::ZnByZ { n: 3, a: m(&[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]) },
        ];
        for g in samples {
            let a = match &g {
                GroupSpec::ZnByZ { a, .. } => a.clone(),
                _ => unreachable!(),
            };
            let (_, witnesses) = classify_case(&g).unwrap();
            for w in witnesses {
                if let WitnessData::Lattice { lattice, power: Some(k) } = w.data {
                    let pk = a.pow(k).unwrap();
                    for c in 0..lattice.rank() {
                        let v = lattice.basis().column(c);
                        assert_eq!(pk.mul_vec(&v), v, "witness lattice must be fixed by A^k");
                    }
                }
            }
        }
    }

    #[test]
    fn central_extension_rule() {
        let j = symplectic2();
        let g = GroupSpec::CentralExtension { m: 1, n: 2, form: vec![j.clone()] };
        assert_eq!(pair(&g), (3, DimValue::Exact(3)));
        assert_eq!(compute_report(&g).unwrap().case, CaseTag::PolyZUniqueHigh);

        let g = GroupSpec::CentralExtension { m: 3, n: 2, form: vec![j.clone(), j.clone(), j] };
        assert_eq!(pair(&g), (5, DimValue::Exact(6)));
        assert_eq!(compute_report(&g).unwrap().case, CaseTag::PolyZMany);
    }

    #[test]
    fn heisenberg_dual_representation() {
        // The 3-dimensional integer Heisenberg group, twice.
        let as_central =
            GroupSpec::CentralExtension { m: 1, n: 2, form: vec![symplectic2()] };
        let as_semidirect = GroupSpec::ZnByZ { n: 2, a: m(&[vec![1, 1], vec![0, 1]]) };
        let ra = compute_report(&as_central).unwrap();
        let rb = compute_report(&as_semidirect).unwrap();
        assert_eq!((ra.vcd, ra.hdim_fin, ra.hdim_vcyc), (rb.vcd, rb.hdim_fin, rb.hdim_vcyc));
        assert_eq!(ra.case, rb.case);
        assert_eq!(ra.hdim_vcyc, DimValue::Exact(3));
    }

    #[test]
    fn low_dim_examples() {
        assert_eq!(low_dim_table(LocalKind::LocallyFinite, true, false).unwrap(), (1, 1));
        assert_eq!(
            low_dim_table(LocalKind::LocallyVirtuallyCyclic, true, true).unwrap(),
            (1, 0)
        );
        assert_eq!(
            low_dim_table(LocalKind::LocallyVirtuallyCyclic, true, false).unwrap(),
            (2, 1)
        );
        assert!(low_dim_table(LocalKind::LocallyFinite, true, true).is_err());
    }

    #[test]
    fn z_one_over_p_values() {
        for p in [2, 3, 5] {
            assert_eq!(pair(&GroupSpec::ZOneOverP { p }), (2, DimValue::Exact(1)));
        }
    }

    #[test]
    fn product_z_times_z() {
        let z = compute_report(&GroupSpec::FreeAbelian { n: 1 }).unwrap();
        let p = product_dims(&z, &z).unwrap();
        assert_eq!(p.hdim_vcyc, DimValue::Exact(3));
        assert_eq!(p.case, CaseTag::ProductExact);
        assert_eq!(p.hdim_fin, 2);
    }

    #[test]
    fn product_of_heisenberg_hyperbolics() {
        let g = compute_report(&hei(&[vec![3, 2], vec![1, 1]], 1)).unwrap();
        let p = product_dims(&g, &g).unwrap();
        assert_eq!(p.hdim_vcyc, DimValue::Exact(9));
        assert_eq!(p.hdim_fin, 8);
        assert_eq!(p.case, CaseTag::PolyZMany);
    }

    #[test]
    fn product_interval_for_centerless_factors() {
        // Trivial centers on both sides: only the sandwich around vcd and
        // the +3 inequality apply, leaving the interval [5, 7].
        let t = compute_report(&GroupSpec::ZnByZ { n: 2, a: m(&[vec![2, 1], vec![1, 1]]) })
            .unwrap();
        let p = product_dims(&t, &t).unwrap();
        assert_eq!(p.hdim_fin, 6);
        assert_eq!(p.hdim_vcyc, DimValue::Interval { lo: 5, hi: 7 });
        assert_eq!(p.case, CaseTag::ProductBounds);
    }

    #[test]
    fn product_rejects_non_poly_z_and_inexact_factors() {
        let z = compute_report(&GroupSpec::FreeAbelian { n: 1 }).unwrap();
        let zp = compute_report(&GroupSpec::ZOneOverP { p: 2 }).unwrap();
        assert!(product_dims(&z, &zp).is_err());

        let t = compute_report(&GroupSpec::ZnByZ { n: 2, a: m(&[vec![2, 1], vec![1, 1]]) })
            .unwrap();
        let interval = product_dims(&t, &t).unwrap();
        assert!(matches!(product_dims(&interval, &z), Err(Error::InexactProduct)));
    }

    #[test]
    fn nested_product_via_spec() {
        let g = GroupSpec::Product {
            left: Box::new(GroupSpec::Product {
                left: Box::new(GroupSpec::FreeAbelian { n: 1 }),
                right: Box::new(GroupSpec::FreeAbelian { n: 1 }),
            }),
            right: Box::new(GroupSpec::FreeAbelian { n: 1 }),
        };
        let r = compute_report(&g).unwrap();
        assert_eq!(r.vcd, Some(3));
        assert_eq!(r.hdim_vcyc, DimValue::Exact(4));
    }

    #[test]
    fn sandwich_offsets_match_case_tags() {
        let samples = [
            GroupSpec::ZnByZ { n: 2, a: m(&[vec![2, 1], vec![1, 1]]) },
            GroupSpec::ZnByZ { n: 2, a: m(&[vec![1, 1], vec![0, 1]]) },
            GroupSpec::ZnByZ { n: 3, a: m(&[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]) },
            hei(&[vec![3, 2], vec![1, 1]], 1),
            hei(&[vec![1, 1], vec![0, 1]], 1),
            hei(&[vec![1, 0], vec![0, 1]], 1),
            GroupSpec::FreeAbelian { n: 4 },
        ];
        for g in samples {
            let r = compute_report(&g).unwrap();
            let vcd = r.vcd.unwrap() as i64;
            let h = r.hdim_vcyc.exact().unwrap() as i64;
            let offset = h - vcd;
            let expected = match r.case {
                CaseTag::PolyZEmpty | CaseTag::PolyZUniqueHigh => 0,
                CaseTag::PolyZUniqueLow => -1,
                CaseTag::PolyZMany => 1,
                _ => continue,
            };
            assert_eq!(offset, expected, "offset mismatch for {}", g.label());
            assert!((-1..=1).contains(&offset));
        }
    }
}
