//! The four published classification tables, and their reproduction.

use std::time::{Duration, Instant};

use crate::catalog;
use crate::classify::{classify_with, ClassifyOptions};
use crate::error::{Error, Result};
use crate::homology::AbelianInvariants;
use crate::vectors::Signature;

#[derive(Clone, Debug)]
pub struct TableRow {
    pub table: u8,
    pub group: &'static str,
    pub t1: &'static str,
    pub t2: &'static str,
    pub n: usize,
    /// Homology groups with multiplicity, in the tables' notation.
    pub homology: &'static [(&'static str, usize)],
    pub dimension: Option<u64>,
    pub chi: Option<i64>,
    /// Rows that take minutes rather than seconds.
    pub slow: bool,
}

#[allow(clippy::too_many_arguments)]
const fn row(
    table: u8,
    group: &'static str,
    t1: &'static str,
    t2: &'static str,
    n: usize,
    homology: &'static [(&'static str, usize)],
    dimension: Option<u64>,
    chi: Option<i64>,
    slow: bool,
) -> TableRow {
    TableRow {
        table,
        group,
        t1,
        t2,
        n,
        homology,
        dimension,
        chi,
        slow,
    }
}

pub static TABLE_ROWS: &[TableRow] = &[
    // surfaces with p_g = q = 0
    row(
        1,
        "a5",
        "2,5,5",
        "3,3,3,3",
        1,
        &[("(Z3)^2 x Z15", 1)],
        Some(1),
        None,
        false,
    ),
    row(1, "a5", "5,5,5", "2,2,2,3", 1, &[("(Z10)^2", 1)], Some(1), None, false),
    row(
        1,
        "a5",
        "3,3,5",
        "2,2,2,2,2",
        1,
        &[("(Z2)^3 x Z6", 1)],
        Some(2),
        None,
        false,
    ),
    row(
        1,
        "s4xz2",
        "2,4,6",
        "2,2,2,2,2,2",
        1,
        &[("(Z2)^4 x Z4", 1)],
        Some(3),
        None,
        false,
    ),
    row(
        1,
        "g32",
        "2,2,4,4",
        "2,2,2,4",
        1,
        &[("(Z2)^2 x Z4 x Z8", 1)],
        Some(2),
        None,
        false,
    ),
    row(1, "z5xz5", "5,5,5", "5,5,5", 1, &[("(Z5)^3", 1)], Some(0), None, false),
    row(
        1,
        "s4",
        "3,4,4",
        "2,2,2,2,2,2",
        1,
        &[("(Z2)^4 x Z8", 1)],
        Some(3),
        None,
        false,
    ),
    row(
        1,
        "g16",
        "2,2,4,4",
        "2,2,4,4",
        1,
        &[("(Z2)^2 x Z4 x Z8", 1)],
        Some(2),
        None,
        false,
    ),
    row(
        1,
        "d4xz2",
        "2,2,2,4",
        "2,2,2,2,2,2",
        1,
        &[("(Z2)^3 x (Z4)^2", 1)],
        Some(4),
        None,
        false,
    ),
    row(
        1,
        "z2^4",
        "2,2,2,2,2",
        "2,2,2,2,2",
        1,
        &[("(Z4)^4", 1)],
        Some(4),
        None,
        false,
    ),
    row(
        1,
        "z3xz3",
        "3,3,3,3",
        "3,3,3,3",
        1,
        &[("(Z3)^5", 1)],
        Some(2),
        None,
        false,
    ),
    row(
        1,
        "z2^3",
        "2,2,2,2,2",
        "2,2,2,2,2,2",
        1,
        &[("(Z2)^4 x (Z4)^2", 1)],
        Some(5),
        None,
        false,
    ),
    // Beauville surfaces with p_g = 1
    row(
        2,
        "psl27xz2",
        "2,3,14",
        "4,4,4",
        2,
        &[("(Z4)^2", 2)],
        None,
        Some(2),
        false,
    ),
    row(
        2,
        "psl27",
        "7,7,7",
        "3,3,4",
        2,
        &[("Z7 x Z21", 2)],
        None,
        Some(2),
        false,
    ),
    row(
        2,
        "psl27",
        "3,3,7",
        "4,4,4",
        2,
        &[("Z4 x Z12", 2)],
        None,
        Some(2),
        false,
    ),
    row(
        2,
        "g128",
        "4,4,4",
        "4,4,4",
        2,
        &[("(Z2)^3 x (Z4)^2", 2)],
        None,
        Some(2),
        false,
    ),
    // PSL(2, q), q <= 9
    row(
        3,
        "psl27",
        "3,3,4",
        "7,7,7",
        2,
        &[("Z7 x Z21", 2)],
        None,
        Some(2),
        false,
    ),
    row(
        3,
        "psl27",
        "3,4,4",
        "7,7,7",
        1,
        &[("Z7 x Z28", 1)],
        None,
        Some(4),
        false,
    ),
    row(3, "psl27", "4,4,4", "7,7,7", 2, &[("(Z28)^2", 2)], None, Some(6), false),
    row(
        3,
        "psl27",
        "4,4,4",
        "3,7,7",
        4,
        &[("Z4 x Z28", 4)],
        None,
        Some(4),
        false,
    ),
    row(
        3,
        "psl27",
        "4,4,4",
        "3,3,7",
        2,
        &[("Z4 x Z12", 2)],
        None,
        Some(2),
        false,
    ),
    row(3, "psl28", "2,7,7", "3,3,9", 3, &[("Z3 x Z21", 3)], None, Some(6), true),
    row(
        3,
        "psl28",
        "2,7,7",
        "3,9,9",
        3,
        &[("Z3 x Z63", 3)],
        None,
        Some(12),
        true,
    ),
    row(
        3,
        "psl28",
        "2,7,7",
        "9,9,9",
        7,
        &[("Z9 x Z63", 7)],
        None,
        Some(18),
        true,
    ),
    row(
        3,
        "psl28",
        "7,7,7",
        "9,9,9",
        14,
        &[("(Z63)^2", 14)],
        None,
        Some(48),
        true,
    ),
    row(
        3,
        "psl28",
        "7,7,7",
        "2,9,9",
        6,
        &[("Z7 x Z63", 6)],
        None,
        Some(20),
        true,
    ),
    row(3, "psl28", "7,7,7", "2,3,9", 6, &[("Z7 x Z21", 6)], None, Some(4), true),
    row(
        3,
        "psl28",
        "7,7,7",
        "3,9,9",
        6,
        &[("Z21 x Z63", 6)],
        None,
        Some(32),
        true,
    ),
    row(3, "psl28", "7,7,7", "3,3,9", 6, &[("(Z21)^2", 6)], None, Some(16), true),
    row(3, "a6", "3,3,5", "4,4,4", 1, &[("(Z12)^2", 1)], None, Some(3), false),
    row(3, "a6", "3,5,5", "4,4,4", 1, &[("Z4 x Z60", 1)], None, Some(6), false),
    row(
        3,
        "a6",
        "5,5,5",
        "4,4,4",
        4,
        &[("Z20 x Z60", 2), ("(Z20)^2", 2)],
        None,
        Some(9),
        false,
    ),
    // printed with T2 = [3,3,5], for which chi = 72 * 24 / 360 is not an
    // integer; [3,3,4] is the pair with chi = 3 and it matches N and H1
    row(
        3,
        "a6",
        "5,5,5",
        "3,3,4",
        4,
        &[("Z5 x Z15", 2), ("(Z15)^2", 2)],
        None,
        Some(3),
        false,
    ),
    // S5, S6 and (Z7)^2
    row(4, "s5", "4,4,5", "3,6,6", 1, &[("Z3 x Z24", 1)], None, Some(3), false),
    row(4, "s6", "5,6,6", "4,6,6", 8, &[("(Z6)^2", 8)], None, Some(35), true),
    row(4, "s6", "5,6,6", "4,4,6", 16, &[("Z2 x Z24", 16)], None, Some(28), true),
    row(4, "s6", "5,6,6", "4,4,4", 8, &[("Z4 x Z12", 8)], None, Some(21), true),
    row(4, "s6", "3,6,6", "4,4,4", 5, &[("(Z12)^2", 5)], None, Some(15), true),
    row(4, "s6", "2,5,6", "4,4,4", 1, &[("(Z4)^2", 1)], None, Some(6), true),
    row(4, "z7xz7", "7,7,7", "7,7,7", 7, &[("(Z7)^3", 7)], None, Some(4), false),
];

pub fn rows_of(table: u8) -> Vec<&'static TableRow> {
    TABLE_ROWS.iter().filter(|r| r.table == table).collect()
}

impl TableRow {
    pub fn label(&self) -> String {
        format!("table {} {} [{}] [{}]", self.table, self.group, self.t1, self.t2)
    }

    pub fn expected_homology(&self) -> Vec<AbelianInvariants> {
        let mut out: Vec<AbelianInvariants> = self
            .homology
            .iter()
            .flat_map(|&(s, k)| std::iter::repeat_n(s.parse().expect("table notation parses"), k))
            .collect();
        out.sort();
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug)]
pub struct RowOutcome {
    pub row: TableRow,
    pub status: RowStatus,
    pub n: Option<usize>,
    pub homology: Vec<AbelianInvariants>,
    pub dimension: Option<u64>,
    pub chi: Option<i64>,
    pub elapsed: Duration,
}

impl RowOutcome {
    pub fn line(&self) -> String {
        let status = match &self.status {
            RowStatus::Pass => "PASS".to_string(),
            RowStatus::Fail(why) => format!("FAIL ({why})"),
            RowStatus::Skipped(why) => format!("SKIPPED ({why})"),
        };
        let computed = match self.n {
            Some(n) => {
                let hs: Vec<String> = self.homology.iter().map(|h| h.to_string()).collect();
                format!(
                    "N = {n} (expected {}), D = {}, chi = {}, H1 = {{{}}}",
                    self.row.n,
                    self.dimension.map_or("-".into(), |d| d.to_string()),
                    self.chi.map_or("-".into(), |c| c.to_string()),
                    hs.join("; ")
                )
            }
            None => String::new(),
        };
        format!(
            "{:<44} {:<8} {:>7.1}s  {}",
            self.row.label(),
            status,
            self.elapsed.as_secs_f64(),
            computed
        )
    }
}

/// Runs one table row and compares N, D or χ, and the homology multiset.
pub fn run_row(row: &TableRow, opts: &ClassifyOptions) -> Result<RowOutcome> {
    let start = Instant::now();
    let Some(entry) = catalog::lookup(row.group) else {
        return Ok(RowOutcome {
            row: row.clone(),
            status: RowStatus::Skipped(format!("group {} is not in the catalog", row.group)),
            n: None,
            homology: vec![],
            dimension: None,
            chi: None,
            elapsed: start.elapsed(),
        });
    };
    let group = entry.build()?;
    let t1: Signature = row.t1.parse()?;
    let t2: Signature = row.t2.parse()?;
    let result = classify_with(&group, &t1, &t2, opts)?;
    let mut homology: Vec<AbelianInvariants> = result
        .records
        .iter()
        .map(|r| {
            r.homology
                .clone()
                .ok_or_else(|| Error::Internal("homology was not computed".into()))
        })
        .collect::<Result<_>>()?;
    homology.sort();
    let inv = result.invariants;

    let mut problems = Vec::new();
    if result.records.len() != row.n {
        problems.push(format!("N = {} instead of {}", result.records.len(), row.n));
    }
    if let Some(d) = row.dimension {
        if inv.dimension != d {
            problems.push(format!("D = {} instead of {d}", inv.dimension));
        }
    }
    if let Some(c) = row.chi {
        if inv.chi != c {
            problems.push(format!("chi = {} instead of {c}", inv.chi));
        }
    }
    if homology != row.expected_homology() {
        problems.push("homology differs".into());
    }
    if homology.iter().any(|h| h.rank() != 0) {
        problems.push("positive free rank".into());
    }
    Ok(RowOutcome {
        row: row.clone(),
        status: if problems.is_empty() {
            RowStatus::Pass
        } else {
            RowStatus::Fail(problems.join(", "))
        },
        n: Some(result.records.len()),
        homology,
        dimension: Some(inv.dimension),
        chi: Some(inv.chi),
        elapsed: start.elapsed(),
    })
}
