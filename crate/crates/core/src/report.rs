//! Rendering evaluation reports as text tables, CSV and JSON.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::eval::{EvalReport, Method, ReportRow, NO_LAYOUT};

fn column_label(method: Method, layout: &str) -> String {
    if layout == NO_LAYOUT {
        method.name().to_string()
    } else {
        format!("{} ({layout})", method.name())
    }
}

/// One row per dataset, one column per method/layout pair, averages to two
/// decimals.
pub fn render_table(report: &EvalReport) -> String {
    let mut datasets: Vec<&str> = Vec::new();
    let mut columns: Vec<(Method, &str)> = Vec::new();
    for row in &report.rows {
        if !datasets.contains(&row.dataset.as_str()) {
            datasets.push(&row.dataset);
        }
        if !columns.contains(&(row.method, row.layout.as_str())) {
            columns.push((row.method, &row.layout));
        }
    }
    let mut header = vec!["dataset".to_string(), "n".to_string()];
    header.extend(columns.iter().map(|(m, l)| column_label(*m, l)));
    let mut body = Vec::new();
    for ds in &datasets {
        let count = report
            .rows
            .iter()
            .find(|r| r.dataset == *ds)
            .map_or(0, |r| r.count);
        let mut line = vec![ds.to_string(), count.to_string()];
        for (m, l) in &columns {
            line.push(
                report
                    .get(ds, *m, l)
                    .map_or_else(|| "-".to_string(), |r| format!("{:.2}", r.average)),
            );
        }
        body.push(line);
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|i| {
            body.iter()
                .map(|l| l[i].chars().count())
                .chain([header[i].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    let fmt_line = |out: &mut String, cells: &[String]| {
        let parts: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| if i == 0 { format!("{c:<w$}", w = widths[i]) } else { format!("{c:>w$}", w = widths[i]) })
            .collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    fmt_line(&mut out, &header);
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    let _ = writeln!(out, "{}", rule.join("  "));
    for line in &body {
        fmt_line(&mut out, line);
    }
    out
}

pub const CSV_HEADER: &str = "dataset,method,layout,average,count";

/// `dataset,method,layout,average,count` rows. Averages use the shortest
/// representation that parses back to the same value.
pub fn render_csv(report: &EvalReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER.split(',')).expect("in-memory write");
    for r in &report.rows {
        w.write_record([
            r.dataset.as_str(),
            r.method.name(),
            r.layout.as_str(),
            &r.average.to_string(),
            &r.count.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

/// Parses [`render_csv`] output. Per-entry costs are not part of the CSV
/// and come back empty.
pub fn parse_csv(text: &str) -> Result<EvalReport> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| Error::Report(e.to_string()))?;
    if headers.iter().collect::<Vec<_>>().join(",") != CSV_HEADER {
        return Err(Error::Report(format!("expected header `{CSV_HEADER}`")));
    }
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Report(e.to_string()))?;
        let field = |i: usize| record.get(i).unwrap_or_default();
        rows.push(ReportRow {
            dataset: field(0).to_string(),
            method: field(1).parse().map_err(Error::Report)?,
            layout: field(2).to_string(),
            average: field(3).parse().map_err(|e| Error::Report(format!("average: {e}")))?,
            count: field(4).parse().map_err(|e| Error::Report(format!("count: {e}")))?,
            costs: Vec::new(),
        });
    }
    Ok(EvalReport { rows })
}

/// Structured report including per-entry cost vectors.
pub fn render_json(report: &EvalReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

pub fn parse_json(text: &str) -> Result<EvalReport> {
    serde_json::from_str(text).map_err(|e| Error::Report(e.to_string()))
}
