//! The three published radius tables with their printed values, recomputed
//! cell by cell and diffed.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::radius::{solve, Equation, RadiusQuery};

/// Half a unit in the last printed decimal.
pub const DIFF_TOLERANCE: f64 = 5e-7;

/// Which parameter varies down a column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    K,
    M,
    P,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::K => "k",
            Axis::M => "m",
            Axis::P => "p",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ColumnSpec {
    pub label: &'static str,
    pub equation: Equation,
    /// `(k, m, p)` with the varying entry overwritten per row.
    pub fixed: (u32, u32, f64),
    pub axis: Axis,
    pub rows: Vec<u32>,
    pub printed: Vec<f64>,
}

impl ColumnSpec {
    fn query(&self, row: u32) -> RadiusQuery {
        let (mut k, mut m, mut p) = self.fixed;
        match self.axis {
            Axis::K => k = row,
            Axis::M => m = row,
            Axis::P => p = row as f64,
        }
        RadiusQuery::new(self.equation).k(k).m(m).p(p)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableSpec {
    pub id: u8,
    pub title: &'static str,
    pub columns: Vec<ColumnSpec>,
}

const TABLE1_ROWS: [u32; 6] = [3, 4, 5, 10, 15, 20];
const TABLE2_ROWS: [u32; 8] = [1, 2, 3, 4, 5, 10, 15, 20];
const TABLE3_ROWS: [u32; 8] = [1, 2, 3, 4, 5, 6, 7, 8];

fn column(label: &'static str, equation: Equation, fixed: (u32, u32, f64), axis: Axis, rows: &[u32], printed: &[f64]) -> ColumnSpec {
    debug_assert_eq!(rows.len(), printed.len());
    ColumnSpec {
        label,
        equation,
        fixed,
        axis,
        rows: rows.to_vec(),
        printed: printed.to_vec(),
    }
}

impl TableSpec {
    pub fn new(id: u8) -> Result<Self> {
        use Axis::{K, M, P};
        use Equation::{AlphaKMP, BetaKMP, R1};
        let spec = match id {
            1 => TableSpec {
                id,
                title: "R^p_{k,m}",
                columns: vec![
                    column("R^1_{1,m}", R1, (1, 0, 1.0), M, &TABLE1_ROWS, &[0.318201, 0.328083, 0.331541, 0.333326, 0.333333, 0.333333]),
                    column("R^2_{1,m}", R1, (1, 0, 2.0), M, &TABLE1_ROWS, &[0.469396, 0.484925, 0.492432, 0.499757, 0.499992, 0.500000]),
                    column("R^1_{3,m}", R1, (3, 0, 1.0), M, &TABLE1_ROWS, &[0.584804, 0.624100, 0.647197, 0.685896, 0.692116, 0.693159]),
                    column("R^1_{5,m}", R1, (5, 0, 1.0), M, &TABLE1_ROWS, &[0.647197, 0.695544, 0.724780, 0.780637, 0.795317, 0.800196]),
                ],
            },
            2 => TableSpec {
                id,
                title: "alpha_{k,m,p}",
                columns: vec![
                    column("alpha_{1,m,1}", AlphaKMP, (1, 0, 1.0), M, &TABLE2_ROWS, &[0.236068, 0.295598, 0.319053, 0.328197, 0.331555, 0.333326, 0.333333, 0.333333]),
                    column("alpha_{1,m,2}", AlphaKMP, (1, 0, 2.0), M, &TABLE2_ROWS, &[0.333333, 0.414214, 0.453398, 0.474627, 0.486389, 0.499516, 0.499985, 0.500000]),
                    column("alpha_{5,m,1}", AlphaKMP, (5, 0, 1.0), M, &TABLE2_ROWS, &[0.632447, 0.686395, 0.715894, 0.735303, 0.749217, 0.783683, 0.795743, 0.800252]),
                    column("alpha_{k,1,1}", AlphaKMP, (0, 1, 1.0), K, &TABLE2_ROWS, &[0.236068, 0.414214, 0.516239, 0.583776, 0.632447, 0.759593, 0.816751, 0.850170]),
                ],
            },
            3 => TableSpec {
                id,
                title: "beta_{k,m,p}",
                columns: vec![
                    column("beta_{k,1,3}", BetaKMP, (0, 1, 3.0), K, &TABLE3_ROWS, &[0.472213, 0.648791, 0.725563, 0.770224, 0.800095, 0.821776, 0.838383, 0.851600]),
                    column("beta_{1,m,3}", BetaKMP, (1, 0, 3.0), M, &TABLE3_ROWS, &[0.472213, 0.496239, 0.499515, 0.499939, 0.499992, 0.499999, 0.500000, 0.500000]),
                    column("beta_{1,1,p}", BetaKMP, (1, 1, 0.0), P, &TABLE3_ROWS, &[0.381966, 0.445042, 0.472213, 0.485690, 0.492639, 0.496239, 0.498091, 0.499037]),
                ],
            },
            _ => return Err(Error::InvalidParameter(format!("unknown table {id}, expected 1, 2 or 3"))),
        };
        Ok(spec)
    }

    pub fn cell_count(&self) -> usize {
        self.columns.iter().map(|c| c.rows.len()).sum()
    }

    /// Solves every cell in parallel; cells keep column-major order.
    pub fn compute(&self, tol: f64) -> Result<ComputedTable> {
        let jobs: Vec<(&ColumnSpec, usize)> = self
            .columns
            .iter()
            .flat_map(|c| (0..c.rows.len()).map(move |i| (c, i)))
            .collect();
        let cells = jobs
            .par_iter()
            .map(|&(col, i)| {
                let row = col.rows[i];
                let query = col.query(row);
                let value = solve(&query, tol)?.value;
                let printed = col.printed[i];
                Ok(TableCell {
                    column: col.label.to_string(),
                    axis: col.axis,
                    row,
                    k: query.k,
                    m: query.m,
                    p: query.p,
                    value,
                    printed,
                    abs_diff: (value - printed).abs(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let max_abs_diff = cells.iter().map(|c| c.abs_diff).fold(0.0, f64::max);
        Ok(ComputedTable {
            id: self.id,
            title: self.title.to_string(),
            cells,
            max_abs_diff,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableCell {
    pub column: String,
    pub axis: Axis,
    pub row: u32,
    pub k: u32,
    pub m: u32,
    pub p: f64,
    pub value: f64,
    pub printed: f64,
    pub abs_diff: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComputedTable {
    pub id: u8,
    pub title: String,
    pub cells: Vec<TableCell>,
    pub max_abs_diff: f64,
}

impl ComputedTable {
    pub fn within_tolerance(&self) -> bool {
        self.max_abs_diff <= DIFF_TOLERANCE
    }

    fn columns(&self) -> Vec<Vec<&TableCell>> {
        let mut out: Vec<Vec<&TableCell>> = Vec::new();
        for cell in &self.cells {
            match out.last_mut() {
                Some(col) if col[0].column == cell.column => col.push(cell),
                _ => out.push(vec![cell]),
            }
        }
        out
    }

    /// One `row | value` pair of columns per quantity, as in print.
    pub fn to_markdown(&self, diff: bool) -> String {
        let columns = self.columns();
        let rows = columns.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = format!("Table {}: {}\n\n|", self.id, self.title);
        for col in &columns {
            let _ = write!(out, " {} | {} |", col[0].axis.name(), col[0].column);
        }
        out.push_str("\n|");
        out.push_str(&"---|".repeat(2 * columns.len()));
        out.push('\n');
        for i in 0..rows {
            out.push('|');
            for col in &columns {
                match col.get(i) {
                    Some(c) => {
                        let _ = write!(out, " {} | {:.6} |", c.row, c.value);
                    }
                    None => out.push_str(" | |"),
                }
            }
            out.push('\n');
        }
        if diff {
            let _ = writeln!(
                out,
                "\nmax abs deviation from printed values: {:.3e} (tolerance {:.0e}) {}",
                self.max_abs_diff,
                DIFF_TOLERANCE,
                if self.within_tolerance() { "pass" } else { "fail" }
            );
        }
        out
    }

    /// Long format, one cell per line, six decimals.
    pub fn to_csv(&self, diff: bool) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["table", "quantity", "k", "m", "p", "value"];
        if diff {
            header.extend(["printed", "abs_diff"]);
        }
        w.write_record(&header).expect("in-memory write");
        for c in &self.cells {
            let mut record = vec![
                self.id.to_string(),
                c.column.clone(),
                c.k.to_string(),
                c.m.to_string(),
                c.p.to_string(),
                format!("{:.6}", c.value),
            ];
            if diff {
                record.extend([format!("{:.6}", c.printed), format!("{:.3e}", c.abs_diff)]);
            }
            w.write_record(&record).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table is plain data")
    }
}
