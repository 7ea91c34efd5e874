use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use super::{AuditRun, Check, ClaimRun, Verdict};

/// Structured report. Every number is a decimal string so nothing is lost to
/// JSON number precision.
#[derive(Debug, Serialize)]
pub struct StructuredReport {
    pub run: RunInfo,
    pub claims: Vec<ClaimReport>,
}

#[derive(Debug, Serialize)]
pub struct RunInfo {
    pub tool: &'static str,
    pub version: &'static str,
    pub selection: String,
    pub max_n: Option<String>,
    pub max_r: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct ClaimReport {
    pub id: &'static str,
    pub description: &'static str,
    pub locus: &'static str,
    pub hypotheses: &'static [&'static str],
    pub grid: BTreeMap<&'static str, String>,
    pub cells: Vec<CellReport>,
    pub totals: TotalsReport,
}

#[derive(Debug, Serialize)]
pub struct CellReport {
    pub params: BTreeMap<&'static str, String>,
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub variants: Vec<VariantReport>,
}

#[derive(Debug, Serialize)]
pub struct WitnessReport {
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Serialize)]
pub struct VariantReport {
    pub id: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
}

#[derive(Debug, Serialize)]
pub struct TotalsReport {
    pub cells: usize,
    pub pass: usize,
    pub variant_pass: usize,
    pub fail: usize,
}

fn witness(c: &Check) -> WitnessReport {
    WitnessReport { lhs: c.lhs.clone(), rhs: c.rhs.clone() }
}

fn claim_report(run: &ClaimRun) -> ClaimReport {
    let t = run.totals();
    ClaimReport {
        id: run.claim.id,
        description: run.claim.description,
        locus: run.claim.locus,
        hypotheses: run.claim.hypotheses,
        grid: run.grid_summary(),
        cells: run
            .results
            .iter()
            .map(|r| CellReport {
                params: r.cell.params().iter().map(|(k, v)| (*k, v.to_string())).collect(),
                verdict: r.verdict.label(),
                variant: match r.verdict {
                    Verdict::VariantPass(id) => Some(id),
                    _ => None,
                },
                witness: r.witness.as_ref().map(witness),
                // variants only matter once the printed form has failed
                variants: if r.witness.is_some() {
                    r.variants
                        .iter()
                        .map(|(id, c)| VariantReport {
                            id,
                            holds: c.holds,
                            witness: (!c.holds).then(|| witness(c)),
                        })
                        .collect()
                } else {
                    Vec::new()
                },
            })
            .collect(),
        totals: TotalsReport { cells: t.cells, pass: t.pass, variant_pass: t.variant_pass, fail: t.fail },
    }
}

pub fn structured(run: &AuditRun) -> StructuredReport {
    StructuredReport {
        run: RunInfo {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            selection: run.selection.to_string(),
            max_n: run.overrides.max_n.map(|n| n.to_string()),
            max_r: run.overrides.max_r.map(|r| r.to_string()),
        },
        claims: run.claims.iter().map(claim_report).collect(),
    }
}

/// Pretty-printed JSON followed by a newline.
pub fn render_structured(run: &AuditRun) -> String {
    let mut out = serde_json::to_string_pretty(&structured(run)).expect("report serializes");
    out.push('\n');
    out
}

/// Per-claim summary line, then one block per failing cell and a tally of the
/// variants that rescued printed-form failures.
pub fn render_text(run: &AuditRun) -> String {
    let mut out = String::new();
    if run.claims.is_empty() {
        out.push_str("nothing run\n");
        return out;
    }
    for c in &run.claims {
        let t = c.totals();
        let status = if t.fail > 0 {
            "FAIL"
        } else if t.variant_pass > 0 {
            "VARIANT"
        } else {
            "ok"
        };
        let _ = writeln!(
            out,
            "{:<20} {:<7} cells {:>5}  pass {:>5}  variant {:>5}  fail {:>5}  [{}] {}",
            c.claim.id, status, t.cells, t.pass, t.variant_pass, t.fail, c.claim.locus, c.claim.description
        );
        let mut rescued: BTreeMap<&str, usize> = BTreeMap::new();
        for r in &c.results {
            match (&r.verdict, &r.witness) {
                (Verdict::VariantPass(id), _) => *rescued.entry(id).or_default() += 1,
                (Verdict::Fail, Some(w)) => {
                    let _ = writeln!(out, "    fail {}: lhs = {}, rhs = {}", r.cell, w.lhs, w.rhs);
                    for (id, v) in &r.variants {
                        let _ = writeln!(out, "      variant {id}: lhs = {}, rhs = {}", v.lhs, v.rhs);
                    }
                }
                _ => {}
            }
        }
        for (id, count) in rescued {
            let _ = writeln!(out, "    variant {id} holds on {count} cells where the printed form fails");
        }
    }
    let failing = run.claims.iter().filter(|c| c.totals().fail > 0).count();
    let _ = writeln!(out, "{} claims, {} with failures", run.claims.len(), failing);
    out
}

#[cfg(test)]
mod tests {
    use super::super::{run_audit, GridOverrides, Selection};
    use super::*;

    #[test]
    fn empty_selection() {
        let run = run_audit(&Selection::Ids(vec![]), &GridOverrides::default()).unwrap();
        assert_eq!(render_text(&run), "nothing run\n");
        assert!(render_structured(&run).contains("\"claims\": []"));
    }

    #[test]
    fn structured_is_deterministic() {
        let sel = Selection::parse("cor8-iii,eq1,thm2-S4n-1");
        let o = GridOverrides { max_n: Some(9), max_r: Some(1) };
        let a = render_structured(&run_audit(&sel, &o).unwrap());
        let b = render_structured(&run_audit(&sel, &o).unwrap());
        assert_eq!(a, b);
        assert!(a.contains("\"variant\": \"constant-p\""));
    }

    #[test]
    fn failure_blocks_carry_witnesses() {
        let run = run_audit(&Selection::parse("eq2"), &GridOverrides::default()).unwrap();
        let text = render_text(&run);
        assert!(text.contains("fail spec=(1,2;0,1)"), "{text}");
        assert!(text.contains("lhs = "));
    }
}
