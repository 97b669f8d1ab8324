//! q = 1 specialization tables over prime powers, as aligned text or JSON.

use clap::ValueEnum;
use qcert_core::congruences::catalan::p_catalan_table;
use qcert_core::congruences::sums::p_binomial_table;
use qcert_core::congruences::TableLine;

/// Integer congruence families with printable prime-power tables.
#[derive(Clone, Copy, ValueEnum)]
pub enum Corollary {
    /// Truncated central binomial sums modulo p^a
    PBinomial,
    /// Doubled Catalan sums modulo p^a
    PCatalan,
}

pub fn run_table(corollary: Corollary, p_max: i64, a_max: u32, d_max: i64, json: bool) -> i32 {
    if p_max < 2 {
        eprintln!("qcert: --p-max must be at least 2");
        return 2;
    }
    if a_max < 1 {
        eprintln!("qcert: --a-max must be at least 1");
        return 2;
    }
    if d_max < 0 {
        eprintln!("qcert: --d-max must be nonnegative");
        return 2;
    }
    let rows = match corollary {
        Corollary::PBinomial => p_binomial_table(p_max, a_max, d_max),
        Corollary::PCatalan => p_catalan_table(p_max, a_max),
    };
    if json {
        for row in &rows {
            crate::emit(serde_json::to_string(row).expect("table row serializes"));
        }
        return 0;
    }
    print_aligned(&rows);
    0
}

fn print_aligned(rows: &[TableLine]) {
    let header = [
        "p", "a", "p^a", "d", "sum", "value", "modulus", "residue", "target", "ok",
    ];
    let mut cells: Vec<[String; 10]> = Vec::with_capacity(rows.len());
    for row in rows {
        cells.push([
            row.p.to_string(),
            row.a.to_string(),
            row.n.to_string(),
            row.d.map(|d| d.to_string()).unwrap_or_default(),
            row.label.clone(),
            row.sum.clone(),
            row.modulus.to_string(),
            row.residue.to_string(),
            format!("{} = {}", row.target, row.target_residue),
            if row.holds { "ok" } else { "FAIL" }.to_string(),
        ]);
    }
    let mut widths: [usize; 10] = header.map(str::len);
    for row in &cells {
        for (width, cell) in widths.iter_mut().zip(row.iter()) {
            *width = (*width).max(cell.len());
        }
    }
    // Left-align the textual columns (sum description and target), right-align
    // the numeric ones.
    let left = [
        false, false, false, false, true, false, false, false, true, true,
    ];
    let render = |row: &[String]| {
        row.iter()
            .enumerate()
            .map(|(i, cell)| {
                if left[i] {
                    format!("{cell:<width$}", width = widths[i])
                } else {
                    format!("{cell:>width$}", width = widths[i])
                }
            })
            .collect::<Vec<_>>()
            .join("  ")
    };
    let header_cells: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    crate::emit(render(&header_cells).trim_end());
    for row in &cells {
        crate::emit(render(row).trim_end());
    }
}
