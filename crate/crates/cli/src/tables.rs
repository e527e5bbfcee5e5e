//! Multiplication tables as text grids or JSON.
//!
//! The grid has a header row and a header column of basis labels with `*` in
//! the corner; cell `(a, b)` holds `a * b`. Columns are left-aligned to one
//! space more than the widest cell and trailing blanks are trimmed.

use nonassoc::Algebra;
use serde_json::json;

/// All cells including headers, row by row.
pub fn table_cells(alg: &Algebra) -> Vec<Vec<String>> {
    let mut header = vec!["*".to_string()];
    header.extend(alg.labels().iter().cloned());
    let mut rows = vec![header];
    for a in 0..alg.dim() {
        let mut row = vec![alg.label(a).to_string()];
        row.extend((0..alg.dim()).map(|b| alg.format_coeffs(alg.product(a, b))));
        rows.push(row);
    }
    rows
}

pub fn table_text(alg: &Algebra) -> String {
    let cells = table_cells(alg);
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(0) + 1;
    let mut out = String::new();
    for row in &cells {
        let line: String = row.iter().map(|c| format!("{c:<width$}")).collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// `{"algebra", "dim", "labels", "rows"}` with `rows` the full grid.
pub fn table_json(alg: &Algebra) -> serde_json::Value {
    json!({
        "algebra": alg.name(),
        "dim": alg.dim(),
        "labels": alg.labels(),
        "rows": table_cells(alg),
    })
}
