//! Markdown rendering of a report document.

use crate::doc::ReportDocument;

pub fn render(doc: &ReportDocument) -> String {
    let mut out = String::new();
    out.push_str("| name | group | vcd | hdim_fin | hdim_vcyc | case | citations |\n");
    out.push_str("|---|---|---|---|---|---|---|\n");
    for g in &doc.groups {
        let r = &g.report;
        let vcd = r.vcd.map_or("-".to_string(), |v| v.to_string());
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} |\n",
            g.name,
            r.spec.label(),
            vcd,
            r.hdim_fin,
            r.hdim_vcyc,
            r.case.as_str(),
            r.citations.join("; "),
        ));
    }
    if !doc.diagnostics.is_empty() {
        out.push_str("\n| rejected entry | rule | message |\n|---|---|---|\n");
        for d in &doc.diagnostics {
            out.push_str(&format!("| {} | {} | {} |\n", d.name, d.rule, d.message));
        }
    }
    out
}
