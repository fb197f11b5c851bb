//! The four subcommands. Each returns the bytes for stdout plus the
//! process exit code; exit codes are a stable contract:
//! 0 success, 1 usage error, 2 validation failure, 3 verify discrepancy.

use vcyc_core::cohomology::{self, certificate_applicable};
use vcyc_core::engine;
use vcyc_core::group::GroupSpec;
use vcyc_core::matrix::{IntMatrix, MatrixOrder};
use vcyc_core::oracle::{self, PowerSearch};

use crate::doc::{Diagnostic, GroupReport, ReportDocument, SpecDocument};
use crate::markdown;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_DISCREPANCY: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

pub struct CmdOutput {
    pub stdout: String,
    pub exit: i32,
}

fn render(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => doc.to_json(),
        Format::Markdown => markdown::render(doc),
    }
}

/// Oracle depth configured globally through the environment, if any.
/// It is recorded in report documents so a report states the depth that
/// any follow-up verification will use.
fn configured_oracle_depth() -> Option<u64> {
    std::env::var("VCYC_ORACLE_DEPTH").ok().and_then(|v| v.parse().ok())
}

/// One dimension report per group, in a deterministic order; entry-level
/// failures land in the diagnostics section without aborting the batch.
pub fn cmd_compute(doc: &SpecDocument, format: Format) -> CmdOutput {
    let mut groups = Vec::new();
    let mut diagnostics = doc.diagnostics.clone();
    for (name, spec) in &doc.entries {
        match engine::compute_report(spec) {
            Ok(report) => groups.push(GroupReport {
                name: name.clone(),
                report,
                cohomology: None,
                mv_certificate: None,
            }),
            Err(e) => diagnostics.push(Diagnostic {
                name: name.clone(),
                rule: "compute".to_string(),
                message: e.to_string(),
            }),
        }
    }
    let mut out = ReportDocument::new(groups, diagnostics);
    out.oracle_depth = configured_oracle_depth();
    let exit = if out.diagnostics.is_empty() { EXIT_OK } else { EXIT_VALIDATION };
    CmdOutput { stdout: render(&out, format), exit }
}

/// Dimension reports with Wang cohomology tables (for the `Z^n x| Z`
/// family) and non-vanishing certificates for the maximal case attached.
pub fn cmd_cohomology(doc: &SpecDocument, degree_max: Option<usize>) -> CmdOutput {
    let mut groups = Vec::new();
    let mut diagnostics = doc.diagnostics.clone();
    for (name, spec) in &doc.entries {
        let report = match engine::compute_report(spec) {
            Ok(r) => r,
            Err(e) => {
                diagnostics.push(Diagnostic {
                    name: name.clone(),
                    rule: "compute".to_string(),
                    message: e.to_string(),
                });
                continue;
            }
        };
        let cohomology = match spec.normalized() {
            GroupSpec::ZnByZ { n, a } => match cohomology::wang_cohomology(n as usize, &a) {
                Ok(mut table) => {
                    if let Some(dmax) = degree_max {
                        table.entries.truncate(dmax + 1);
                    }
                    Some(table)
                }
                Err(e) => {
                    diagnostics.push(Diagnostic {
                        name: name.clone(),
                        rule: "cohomology".to_string(),
                        message: e.to_string(),
                    });
                    None
                }
            },
            _ => None,
        };
        let mv_certificate = if certificate_applicable(report.case, report.vcd, report.hdim_vcyc)
        {
            cohomology::mv_case3_certificate(spec).ok()
        } else {
            None
        };
        groups.push(GroupReport { name: name.clone(), report, cohomology, mv_certificate });
    }
    let mut out = ReportDocument::new(groups, diagnostics);
    out.oracle_depth = configured_oracle_depth();
    let exit = if out.diagnostics.is_empty() { EXIT_OK } else { EXIT_VALIDATION };
    CmdOutput { stdout: out.to_json(), exit }
}

/// The product of two named groups.
pub fn cmd_product(
    doc: &SpecDocument,
    left: &str,
    right: &str,
    format: Format,
) -> CmdOutput {
    let find = |wanted: &str| doc.entries.iter().find(|(n, _)| n == wanted).map(|(_, g)| g);
    let (Some(gl), Some(gr)) = (find(left), find(right)) else {
        let missing = if find(left).is_none() { left } else { right };
        return CmdOutput {
            stdout: format!("error: unknown group name {missing:?}\n"),
            exit: EXIT_USAGE,
        };
    };
    let combine = (|| {
        let a = engine::compute_report(gl)?;
        let b = engine::compute_report(gr)?;
        engine::product_dims(&a, &b)
    })();
    match combine {
        Ok(report) => {
            let name = format!("product({left},{right})");
            let out = ReportDocument::new(
                vec![GroupReport { name, report, cohomology: None, mv_certificate: None }],
                doc.diagnostics.clone(),
            );
            CmdOutput { stdout: render(&out, format), exit: EXIT_OK }
        }
        Err(e) => CmdOutput { stdout: format!("error: {e}\n"), exit: EXIT_VALIDATION },
    }
}

struct VerifyLog {
    lines: Vec<String>,
    discrepancies: usize,
    warnings: usize,
}

impl VerifyLog {
    fn ok(&mut self, name: &str, check: &str) {
        self.lines.push(format!("OK          {name}: {check}"));
    }
    fn warn(&mut self, name: &str, check: &str, detail: String) {
        self.warnings += 1;
        self.lines.push(format!("WARNING     {name}: {check}: {detail}"));
    }
    fn bad(&mut self, name: &str, check: &str, detail: String) {
        self.discrepancies += 1;
        self.lines.push(format!("DISCREPANCY {name}: {check}: {detail}"));
    }
}

/// Runs the brute-force oracles and cross-checks against the engine for
/// every group in the document. Nonzero exit iff any discrepancy.
///
/// Setting the environment variable `VCYC_FAULT_INJECT` perturbs the
/// engine-side values before comparison; it exists so the test suite can
/// prove this command actually detects corruption.
pub fn cmd_verify(doc: &SpecDocument, oracle_depth: Option<u64>) -> CmdOutput {
    let fault = std::env::var("VCYC_FAULT_INJECT").map(|v| !v.is_empty()).unwrap_or(false);
    let mut log = VerifyLog { lines: Vec::new(), discrepancies: 0, warnings: 0 };
    log.lines.push(match oracle_depth {
        Some(k) => format!("oracle depth: {k}"),
        None => "oracle depth: default (per-rank lcm rule)".to_string(),
    });
    for d in &doc.diagnostics {
        log.lines.push(format!("SKIPPED     {}: invalid entry [{}] {}", d.name, d.rule, d.message));
    }
    for (name, spec) in &doc.entries {
        verify_group(name, spec, oracle_depth, fault, &mut log);
    }
    let mut stdout = log.lines.join("\n");
    stdout.push('\n');
    stdout.push_str(&format!(
        "verify: {} check(s) failed, {} warning(s)\n",
        log.discrepancies, log.warnings
    ));
    let exit = if log.discrepancies > 0 { EXIT_DISCREPANCY } else { EXIT_OK };
    CmdOutput { stdout, exit }
}

fn verify_group(
    name: &str,
    spec: &GroupSpec,
    oracle_depth: Option<u64>,
    fault: bool,
    log: &mut VerifyLog,
) {
    let report = match engine::compute_report(spec) {
        Ok(r) => r,
        Err(e) => {
            log.bad(name, "compute", e.to_string());
            return;
        }
    };

    // Sandwich around vcd.
    if let Some(vcd) = report.vcd {
        let (lo, hi) = report.hdim_vcyc.bounds();
        let hdim_fin = report.hdim_fin + u64::from(fault);
        let lower = vcd.saturating_sub(1);
        if lo >= lower && hi <= vcd + 1 && hdim_fin == vcd {
            log.ok(name, "hdim sandwich vcd-1 <= hdim_vcyc <= vcd+1");
        } else {
            log.bad(
                name,
                "hdim sandwich",
                format!("vcd {vcd}, hdim_fin {}, hdim_vcyc {}", report.hdim_fin, report.hdim_vcyc),
            );
        }
    }

    // Matrix-level oracles.
    if let Some((rank_n, a)) = defining_matrix(spec) {
        let depth = oracle_depth.unwrap_or_else(|| oracle::default_oracle_depth(rank_n));
        match (a.max_fixed_rank(), oracle::brute_force_max_fixed_rank(&a, depth)) {
            (Ok((k_star, engine_rank)), Ok((_, brute_rank))) => {
                let engine_rank = engine_rank + usize::from(fault);
                if k_star > depth {
                    log.warn(
                        name,
                        "max_fixed_rank",
                        format!("oracle depth {depth} below engine power {k_star}; not conclusive"),
                    );
                } else if engine_rank == brute_rank {
                    log.ok(name, "max_fixed_rank matches brute force");
                } else {
                    log.bad(
                        name,
                        "max_fixed_rank",
                        format!("engine rank {engine_rank} vs brute-force rank {brute_rank} (depth {depth})"),
                    );
                }
            }
            (Err(e), _) | (_, Err(e)) => log.bad(name, "max_fixed_rank", e.to_string()),
        }
        match a.matrix_order() {
            Ok(MatrixOrder::Finite(k)) => {
                if k > depth {
                    log.warn(
                        name,
                        "matrix_order",
                        format!("order {k} exceeds oracle depth {depth}; not conclusive"),
                    );
                } else {
                    let k = k + u64::from(fault);
                    match oracle::order_by_powering(&a, depth) {
                        PowerSearch::FoundOrder(j) if j == k => {
                            log.ok(name, "matrix_order matches direct powering");
                        }
                        other => log.bad(
                            name,
                            "matrix_order",
                            format!("engine order {k}, powering found {other:?}"),
                        ),
                    }
                }
            }
            Ok(MatrixOrder::Infinite) => match oracle::order_by_powering(&a, depth) {
                PowerSearch::NoneUpTo(_) => {
                    log.ok(name, "matrix_order infinite consistent with powering");
                }
                PowerSearch::FoundOrder(j) => log.bad(
                    name,
                    "matrix_order",
                    format!("engine says infinite but A^{j} = I"),
                ),
            },
            Err(e) => log.bad(name, "matrix_order", e.to_string()),
        }

        // Witness lattices must be fixed by the stated power.
        for w in &report.witnesses {
            if let engine::WitnessData::Lattice { lattice, power: Some(k) } = &w.data {
                match a.pow(*k) {
                    Ok(pk) => {
                        let fixed = (0..lattice.rank()).all(|c| {
                            let v = lattice.basis().column(c);
                            pk.mul_vec(&v) == v
                        });
                        if fixed {
                            log.ok(name, "witness lattice fixed by stated power");
                        } else {
                            log.bad(name, "witness", "lattice not fixed by stated power".into());
                        }
                    }
                    Err(e) => log.bad(name, "witness", e.to_string()),
                }
            }
        }
    }

    // Wang cross-check for the mapping-torus family.
    if let GroupSpec::ZnByZ { n, a } = spec.normalized() {
        let n = n as usize;
        match (cohomology::top_cohomology(n, &a), cohomology::wang_cohomology(n, &a)) {
            (Ok(mut top), Ok(table)) => {
                if fault {
                    top = top.plus_free(1);
                }
                if table.group(n + 1) == Some(&top) {
                    log.ok(name, "top cohomology agrees with Wang table");
                } else {
                    log.bad(
                        name,
                        "top cohomology",
                        format!("closed form {top} vs table {:?}", table.group(n + 1)),
                    );
                }
                if table.euler_characteristic() == 0 {
                    log.ok(name, "Euler characteristic vanishes");
                } else {
                    log.bad(
                        name,
                        "euler characteristic",
                        format!("chi = {}", table.euler_characteristic()),
                    );
                }
            }
            (Err(e), _) | (_, Err(e)) => log.bad(name, "wang cohomology", e.to_string()),
        }
    }

    // Dual representation of the 3-dimensional integer Heisenberg group.
    if let GroupSpec::CentralExtension { m: 1, n: 2, .. } = spec.normalized() {
        let dual = GroupSpec::ZnByZ {
            n: 2,
            a: IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]),
        };
        match engine::compute_report(&dual) {
            Ok(dual_report) => {
                let same = report.vcd == dual_report.vcd
                    && report.hdim_fin == dual_report.hdim_fin
                    && report.hdim_vcyc == dual_report.hdim_vcyc
                    && report.case == dual_report.case;
                if same {
                    log.ok(name, "dual representation agrees");
                } else {
                    log.bad(
                        name,
                        "dual representation",
                        format!(
                            "central-extension report ({}, {}) differs from semidirect ({}, {})",
                            report.hdim_fin,
                            report.hdim_vcyc,
                            dual_report.hdim_fin,
                            dual_report.hdim_vcyc
                        ),
                    );
                }
            }
            Err(e) => log.bad(name, "dual representation", e.to_string()),
        }
    }

    // Certificate replay in the maximal case.
    if certificate_applicable(report.case, report.vcd, report.hdim_vcyc) {
        match cohomology::mv_case3_certificate(spec) {
            Ok(cert) => {
                if cert.non_surjective && Some(cert.degree) == report.vcd && cert.target_count >= 2
                {
                    log.ok(name, "non-vanishing certificate checks");
                } else {
                    log.bad(name, "certificate", format!("inconsistent certificate {cert:?}"));
                }
            }
            Err(e) => log.bad(name, "certificate", e.to_string()),
        }
    }
}

/// The matrix whose fixed lattices drive the classification, if any.
fn defining_matrix(spec: &GroupSpec) -> Option<(usize, IntMatrix)> {
    match spec.normalized() {
        GroupSpec::ZnByZ { n, a } => Some((n as usize, a)),
        GroupSpec::HeisenbergByZ { n, f_bar, .. } => Some((n as usize, f_bar)),
        _ => None,
    }
}
