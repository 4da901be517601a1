//! Human-readable report rendering.

use std::io::Write;

use allroots::SolveReport;

pub fn print_table(out: &mut impl Write, report: &SolveReport) -> std::io::Result<()> {
    if report.roots.is_empty() {
        writeln!(out, "no roots found")?;
    } else {
        writeln!(out, "roots ({}):", report.roots.len())?;
        for root in &report.roots {
            writeln!(
                out,
                "  {} ± {:.3e}  [{}]",
                root.location, root.error_bound, root.kind
            )?;
        }
    }
    writeln!(out, "evaluations: {}", report.evaluations)?;
    writeln!(
        out,
        "derivative evaluations: {}",
        report.derivative_evaluations
    )?;
    writeln!(out, "terminated: {}", report.terminated_by)?;
    Ok(())
}
