//! Plain-text rendering of result documents.

use weylchar::document::OutputDocument;

fn join(v: &[u32]) -> String {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    s.join(",")
}

/// Aligned table with one header line, preceded by a one-line summary.
pub fn format_text(doc: &OutputDocument) -> String {
    let headers = ["partition", "dynkin", "multiplicity", "orbit_size"];
    let mut cells: Vec<[String; 4]> = Vec::with_capacity(doc.rows.len());
    for row in &doc.rows {
        cells.push([
            join(&row.partition),
            join(&row.dynkin),
            row.multiplicity.clone(),
            row.orbit_size.clone(),
        ]);
    }
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in &cells {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = format!(
        "{} rank_n={} dominant={} dynkin={} weight={} dimension={}\n",
        doc.algebra,
        doc.rank_n,
        join(&doc.dominant.partition),
        join(&doc.dominant.dynkin),
        doc.weight_m,
        doc.dimension
    );
    let fmt_row = |cols: [&str; 4], widths: &[usize]| -> String {
        let mut line = String::new();
        for (i, (col, w)) in cols.iter().zip(widths).enumerate() {
            if i > 0 {
                line.push_str(" | ");
            }
            line.push_str(&format!("{col:<w$}"));
        }
        line.trim_end().to_string()
    };
    out.push_str(&fmt_row(
        [headers[0], headers[1], headers[2], headers[3]],
        &widths,
    ));
    out.push('\n');
    for row in &cells {
        out.push_str(&fmt_row([&row[0], &row[1], &row[2], &row[3]], &widths));
        out.push('\n');
    }
    out
}
