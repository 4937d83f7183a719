use std::fmt;

use serde::Serialize;

use crate::config::Bounds;
use crate::error::Result;
use crate::partitions::Partition;

/// A bijective filling of a diagram with `1..n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
    #[serde(skip)]
    standard: bool,
}

impl Tableau {
    /// Builds from rows of entries; panics unless the rows fit a diagram and
    /// hold each of `1..n` exactly once.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Self {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())
            .expect("tableau rows must have weakly decreasing lengths");
        let n = shape.size() as u32;
        let mut seen = vec![false; n as usize];
        for &x in rows.iter().flatten() {
            assert!(x >= 1 && x <= n && !seen[x as usize - 1], "entries must be a bijection onto 1..{n}");
            seen[x as usize - 1] = true;
        }
        let standard = is_standard(&rows);
        Tableau { shape, rows, standard }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_standard(&self) -> bool {
        self.standard
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect())
            .collect()
    }
}

fn is_standard(rows: &[Vec<u32>]) -> bool {
    let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
    let cols_ok = rows
        .windows(2)
        .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
    rows_ok && cols_ok
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau[{self}]")
    }
}

/// The row-reading tableau: `1..n` entered left to right, top to bottom.
pub fn canonical_tableau(shape: &Partition) -> Tableau {
    let mut next = 1;
    let rows = shape
        .rows()
        .iter()
        .map(|&len| {
            let row: Vec<u32> = (next..next + len).collect();
            next += len;
            row
        })
        .collect();
    Tableau::from_rows(rows)
}

/// Every standard tableau of the given shape, in lexicographic order of
/// their row words.
pub fn standard_tableaux(shape: &Partition, bounds: &Bounds) -> Result<Vec<Tableau>> {
    bounds.check("tableau size", shape.size(), bounds.tableau_size)?;
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.len()];
    place(shape, 1, &mut rows, &mut out);
    out.sort_by(|a: &Tableau, b| a.rows.cmp(&b.rows));
    Ok(out)
}

// Entries go in increasing order; `k` may go at the end of row i when the
// row is not full and the row above is strictly longer.
fn place(shape: &Partition, k: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
    if k as usize > shape.size() {
        out.push(Tableau {
            shape: shape.clone(),
            rows: rows.clone(),
            standard: true,
        });
        return;
    }
    for i in 0..rows.len() {
        let len = rows[i].len();
        if len < shape.rows()[i] as usize && (i == 0 || rows[i - 1].len() > len) {
            rows[i].push(k);
            place(shape, k + 1, rows, out);
            rows[i].pop();
        }
    }
}
