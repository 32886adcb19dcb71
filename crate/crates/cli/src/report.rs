//! Textual forms of a verification report: CSV with a fixed column set,
//! an aligned human table, and JSON.

use std::fmt::Write as _;

use ngon_core::bounds::BoundsReport;

/// Fixed CSV layout: `inequality,bound,observed,slack,equality`.
pub fn report_csv(report: &BoundsReport) -> String {
    let mut out = String::from("inequality,bound,observed,slack,equality\n");
    for e in &report.entries {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            e.inequality, e.bound, e.observed, e.slack, e.equality
        );
    }
    out
}

pub fn report_human(report: &BoundsReport) -> String {
    let mut out = format!("bounds report for {}\n", report.polygon_id);
    let _ = writeln!(
        out,
        "{:<28} {:>18} {:>18} {:>12}  {}",
        "inequality", "bound", "observed", "slack", "flags"
    );
    for e in &report.entries {
        let mut flags = String::new();
        if e.equality {
            flags.push_str("equality");
        }
        if e.attainable {
            if !flags.is_empty() {
                flags.push(' ');
            }
            flags.push_str("attainable");
        }
        let _ = writeln!(
            out,
            "{:<28} {:>18.12} {:>18.12} {:>12.3e}  {}",
            e.inequality.name(),
            e.bound,
            e.observed,
            e.slack,
            flags
        );
    }
    out
}

pub fn report_json(report: &BoundsReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serialization is total");
    s.push('\n');
    s
}
