//! Fixed-width text rendering of the reports.

use crate::document::ConfigurationDocument;
use crate::report::{
    join, ClassificationReport, GeneralPositionReport, GraphReport, HilbertReport, HullReport,
};
use crate::verify::VerifyReport;

/// Left-aligned columns, each as wide as its widest cell.
fn grid(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    out.push_str(&line(widths.iter().map(|&w| "-".repeat(w)).collect()));
    for row in rows {
        out.push_str(&line(row.clone()));
    }
    out
}

fn point(v: &[i64]) -> String {
    format!("({})", join(v))
}

fn tuples(ts: &[Vec<usize>]) -> String {
    ts.iter()
        .map(|t| point_usize(t))
        .collect::<Vec<_>>()
        .join(" ")
}

fn point_usize(v: &[usize]) -> String {
    format!("({})", join(v))
}

fn flag(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn config_header(doc: &ConfigurationDocument) -> String {
    let mut out = String::new();
    if let Some(label) = &doc.label {
        out.push_str(&format!("label: {label}\n"));
    }
    out.push_str(&format!("d = {}, n = {}\n", doc.d, doc.points.len()));
    out
}

pub fn hull(report: &HullReport) -> String {
    let rows: Vec<Vec<String>> = report
        .points
        .iter()
        .enumerate()
        .map(|(k, p)| vec![k.to_string(), point(p)])
        .collect();
    format!(
        "{}hull lattice points: {}\n{}",
        config_header(&report.config),
        report.count,
        grid(&["#", "point"], &rows)
    )
}

pub fn classification(report: &ClassificationReport) -> String {
    let rows: Vec<Vec<String>> = report
        .vertices
        .iter()
        .map(|v| {
            vec![
                point(&v.vertex),
                v.argmins
                    .iter()
                    .map(|j| format!("{{{}}}", join(j)))
                    .collect::<Vec<_>>()
                    .join(" "),
                point_usize(&v.factor_dims),
                v.p.to_string(),
                flag(v.is_component),
                flag(v.is_primary),
                tuples(&v.multidegrees),
            ]
        })
        .collect();
    let c = report.counts;
    format!(
        "{}general position: {}\ncomponents: {} total, {} primary, {} secondary\n{}",
        config_header(&report.config),
        flag(report.general_position),
        c.total,
        c.primary,
        c.secondary,
        grid(
            &[
                "vertex",
                "argmins",
                "dims",
                "p",
                "comp",
                "primary",
                "multidegrees"
            ],
            &rows
        )
    )
}

pub fn hilbert(report: &HilbertReport) -> String {
    grid(
        &["vertex", "u", "p", "value"],
        &[vec![
            point(&report.vertex),
            point_usize(&report.u),
            report.p.to_string(),
            report.value.clone(),
        ]],
    )
}

pub fn graph(report: &GraphReport) -> String {
    let rows: Vec<Vec<String>> = report
        .edges
        .iter()
        .map(|e| {
            vec![
                point(&e.from),
                point(&e.to),
                point(&e.forward.iter().map(|&x| i64::from(x)).collect::<Vec<_>>()),
                point(&e.backward.iter().map(|&x| i64::from(x)).collect::<Vec<_>>()),
            ]
        })
        .collect();
    format!(
        "vertices: {}, edges: {}, connected: {}\n{}",
        report.vertices.len(),
        report.edges.len(),
        flag(report.connected),
        grid(&["from", "to", "forward", "backward"], &rows)
    )
}

pub fn general_position(report: &GeneralPositionReport) -> String {
    let mut out = format!("general position: {}\n", flag(report.general_position));
    if let Some(w) = &report.witness {
        out.push_str(&format!(
            "singular minor: rows {{{}}}, cols {{{}}}, value {}, attained {} times\n",
            join(&w.rows),
            join(&w.cols),
            w.value,
            w.optimal_count
        ));
        let rows: Vec<Vec<String>> = w
            .matrix
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let header: Vec<String> = w.cols.iter().map(|c| format!("c{c}")).collect();
        let header: Vec<&str> = header.iter().map(String::as_str).collect();
        out.push_str(&grid(&header, &rows));
    }
    out
}

pub fn document(doc: &ConfigurationDocument) -> String {
    let rows: Vec<Vec<String>> = doc
        .points
        .iter()
        .enumerate()
        .map(|(k, p)| vec![k.to_string(), point(p)])
        .collect();
    format!("{}{}", config_header(doc), grid(&["#", "point"], &rows))
}

pub fn verify(report: &VerifyReport) -> String {
    let rows: Vec<Vec<String>> = report
        .checks
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                c.cases.to_string(),
                c.skipped.to_string(),
                c.failures.len().to_string(),
            ]
        })
        .collect();
    let mut out = format!(
        "configurations: {}, result: {}\n{}",
        report.configurations,
        if report.passed { "PASS" } else { "FAIL" },
        grid(&["check", "cases", "skipped", "failures"], &rows)
    );
    for c in &report.checks {
        for f in &c.failures {
            out.push_str(&format!("{}: {f}\n", c.name));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_are_aligned() {
        let text = grid(
            &["a", "bb"],
            &[
                vec!["long".into(), "x".into()],
                vec!["s".into(), "yy".into()],
            ],
        );
        assert_eq!(text, "a     bb\n----  --\nlong  x\ns     yy\n");
    }
}
