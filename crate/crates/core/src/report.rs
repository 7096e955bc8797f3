//! Report rendering: JSON lines, CSV and a plain-text summary.
//!
//! Reals are printed with 12 significant digits in `%g` style; non-finite
//! values become JSON `null` or an empty CSV field.

use std::fmt::Write as _;
use std::io::Write;
use std::str::FromStr;

use crate::bounds::BoundCheck;
use crate::error::{Error, Result};
use crate::scan::ScanReport;

pub const SIGNIFICANT_DIGITS: usize = 12;

pub const COLUMNS: [&str; 9] = [
    "bound", "g6", "lhs", "rhs", "slack", "holds", "equality", "skipped", "reason",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Jsonl,
    Csv,
    Summary,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jsonl" => Ok(Format::Jsonl),
            "csv" => Ok(Format::Csv),
            "summary" => Ok(Format::Summary),
            _ => Err(Error::InvalidConfig(format!("unknown report format {s:?}"))),
        }
    }
}

/// `x` with 12 significant digits, trailing zeros trimmed; `None` if not finite.
pub fn format_real(x: f64) -> Option<String> {
    if !x.is_finite() {
        return None;
    }
    if x == 0.0 {
        return Some("0".to_string());
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let trim = |s: &str| -> String {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s.to_string()
        }
    };
    if exp < -4 || exp >= SIGNIFICANT_DIGITS as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        Some(format!("{}e{}{:02}", trim(mantissa), sign, exp.abs()))
    } else {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp) as usize;
        Some(trim(&format!("{x:.decimals$}")))
    }
}

fn reason(row: &BoundCheck) -> Option<String> {
    Some(row.annotation()).filter(|s| !s.is_empty())
}

/// One JSON object with the report columns, in column order.
pub fn jsonl_line(row: &BoundCheck) -> String {
    let num = |x: f64| format_real(x).unwrap_or_else(|| "null".to_string());
    let text = |s: &str| serde_json::to_string(s).expect("strings serialise");
    format!(
        "{{\"bound\":{},\"g6\":{},\"lhs\":{},\"rhs\":{},\"slack\":{},\"holds\":{},\"equality\":{},\"skipped\":{},\"reason\":{}}}",
        text(&row.bound),
        text(&row.graph6),
        num(row.lhs),
        num(row.rhs),
        num(row.slack),
        row.holds,
        row.equality,
        row.skipped,
        reason(row).map_or_else(|| "null".to_string(), |r| text(&r)),
    )
}

pub fn write_jsonl(rows: &[BoundCheck], out: &mut impl Write) -> Result<()> {
    for row in rows {
        writeln!(out, "{}", jsonl_line(row))?;
    }
    Ok(())
}

pub fn write_csv(rows: &[BoundCheck], out: &mut impl Write) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(out);
    w.write_record(COLUMNS)?;
    let num = |x: f64| format_real(x).unwrap_or_default();
    for row in rows {
        w.write_record([
            row.bound.clone(),
            row.graph6.clone(),
            num(row.lhs),
            num(row.rhs),
            num(row.slack),
            row.holds.to_string(),
            row.equality.to_string(),
            row.skipped.to_string(),
            reason(row).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn summary_text(report: &ScanReport) -> String {
    let meta = &report.metadata;
    let mut s = String::new();
    if let Some(cmd) = &meta.command {
        let _ = writeln!(s, "command: {cmd}");
    }
    let _ = writeln!(s, "source: {}", meta.source);
    let _ = writeln!(s, "graphs: {}", meta.graphs);
    let _ = writeln!(s, "tolerance: {}", format_real(meta.tolerance).unwrap_or_default());
    if let Some(seed) = meta.seed {
        let _ = writeln!(s, "seed: {seed}");
    }
    let _ = writeln!(
        s,
        "{:<14} {:<21} {:>10} {:>10} {:>6} {:>10} {:>6} {:>20}  argmin",
        "bound", "status", "evaluated", "skipped", "viol", "equality", "tight", "min_slack"
    );
    for a in &report.aggregates {
        let status = serde_json::to_value(a.status).expect("status serialises");
        let _ = writeln!(
            s,
            "{:<14} {:<21} {:>10} {:>10} {:>6} {:>10} {:>6} {:>20}  {}",
            a.bound,
            status.as_str().unwrap_or_default(),
            a.evaluated,
            a.skipped,
            a.violations,
            a.equalities,
            a.tight,
            a.min_slack.and_then(format_real).unwrap_or_else(|| "-".into()),
            a.argmin_graph6.as_deref().unwrap_or("-"),
        );
    }
    let errors: u64 = report.aggregates.iter().map(|a| a.errors).sum();
    if errors > 0 {
        let _ = writeln!(s, "ERRORS: {errors}");
    }
    let _ = writeln!(s, "VIOLATIONS: {}", report.violations());
    s
}

pub fn write_report(report: &ScanReport, format: Format, out: &mut impl Write) -> Result<()> {
    match format {
        Format::Jsonl => write_jsonl(&report.rows, out),
        Format::Csv => write_csv(&report.rows, out),
        Format::Summary => Ok(out.write_all(summary_text(report).as_bytes())?),
    }
}
