//! Young diagrams and the Young lattice.
//!
//! A [`Partition`] is stored as its weakly decreasing row lengths. Nodes are
//! addressed 1-based as `(row, col)`. The lattice order is containment of
//! diagrams; an arrow `μ → λ` adds exactly one node.
//!
//! Lists of partitions are always produced in reverse lexicographic order
//! within a size, smaller sizes first. This is also the [`Ord`] of
//! [`Partition`], so sorted collections and certificates are reproducible.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::config::Bounds;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    rows: Vec<u32>,
    size: u32,
}

/// A cell of a diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: u32,
    pub col: u32,
}

impl Node {
    pub fn new(row: u32, col: u32) -> Self {
        assert!(row >= 1 && col >= 1, "nodes are 1-based");
        Node { row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// How `λ` sits over `μ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkewClass {
    NotContained,
    Contained {
        size: u32,
        /// Two skew nodes share a column (`μ →² λ`).
        has_column_pair: bool,
        /// Two skew nodes share a row (`μᵀ →² λᵀ`).
        has_row_pair: bool,
    },
}

impl SkewClass {
    pub fn contained(&self) -> bool {
        matches!(self, SkewClass::Contained { .. })
    }

    pub fn size(&self) -> Option<u32> {
        match *self {
            SkewClass::Contained { size, .. } => Some(size),
            SkewClass::NotContained => None,
        }
    }

    /// Contained with no two skew nodes in one column.
    pub fn is_horizontal_strip(&self) -> bool {
        matches!(
            self,
            SkewClass::Contained {
                has_column_pair: false,
                ..
            }
        )
    }

    /// Contained with no two skew nodes in one row.
    pub fn is_vertical_strip(&self) -> bool {
        matches!(
            self,
            SkewClass::Contained {
                has_row_pair: false,
                ..
            }
        )
    }
}

/// Two distinct one-node extensions of `bottom` together with their common
/// one-node extension `top`. `mid_left < mid_right` in the partition order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diamond {
    pub bottom: Partition,
    pub mid_left: Partition,
    pub mid_right: Partition,
    pub top: Partition,
}

impl Partition {
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Validating constructor. Trailing zeros are dropped.
    pub fn new(mut rows: Vec<u32>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.iter().any(|&r| r == 0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidRows(rows));
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u32>) -> Self {
        debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(rows.iter().all(|&r| r > 0));
        let size = rows.iter().sum();
        Partition { rows, size }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.size as usize
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Length of row `i` (1-based); zero past the last row.
    pub fn row(&self, i: u32) -> u32 {
        if i == 0 {
            return 0;
        }
        self.rows.get(i as usize - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based).
    pub fn column(&self, j: u32) -> u32 {
        self.rows.iter().take_while(|&&r| r >= j).count() as u32
    }

    pub fn contains_node(&self, node: Node) -> bool {
        self.row(node.row) >= node.col
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.rows.first().copied().unwrap_or(0);
        Partition::from_rows_unchecked((1..=cols).map(|j| self.column(j)).collect())
    }

    /// Nodes whose addition gives a diagram, top row first.
    pub fn addable_nodes(&self) -> Vec<Node> {
        let k = self.rows.len() as u32;
        (1..=k + 1)
            .filter(|&i| i == 1 || self.row(i - 1) > self.row(i))
            .map(|i| Node::new(i, self.row(i) + 1))
            .collect()
    }

    /// Nodes whose removal gives a diagram, top row first.
    pub fn removable_nodes(&self) -> Vec<Node> {
        let k = self.rows.len() as u32;
        (1..=k)
            .filter(|&i| self.row(i) > self.row(i + 1))
            .map(|i| Node::new(i, self.row(i)))
            .collect()
    }

    pub fn add_node(&self, node: Node) -> Result<Partition> {
        let reject = |reason| Error::NotAddable {
            partition: self.to_string(),
            row: node.row,
            col: node.col,
            reason,
        };
        if node.row == 0 || node.col == 0 {
            return Err(reject("nodes are 1-based"));
        }
        if self.contains_node(node) {
            return Err(reject("cell already occupied"));
        }
        if self.row(node.row) + 1 != node.col {
            return Err(reject("cell is not at the end of its row"));
        }
        if node.row > 1 && self.row(node.row - 1) < node.col {
            return Err(reject("row above is too short"));
        }
        Ok(self.add_to_row(node.row))
    }

    /// Adds a node at the end of row `r`, which must be addable.
    pub(crate) fn add_to_row(&self, r: u32) -> Partition {
        let mut rows = self.rows.clone();
        let idx = r as usize - 1;
        if idx == rows.len() {
            rows.push(1);
        } else {
            rows[idx] += 1;
        }
        Partition::from_rows_unchecked(rows)
    }

    /// Removes the last node of row `r`, which must be removable.
    pub(crate) fn remove_from_row(&self, r: u32) -> Partition {
        let mut rows = self.rows.clone();
        let idx = r as usize - 1;
        rows[idx] -= 1;
        if rows[idx] == 0 {
            rows.pop();
        }
        Partition::from_rows_unchecked(rows)
    }

    /// All one-node extensions, top row first.
    pub fn covers(&self) -> Vec<Partition> {
        self.addable_nodes()
            .into_iter()
            .map(|n| self.add_to_row(n.row))
            .collect()
    }

    /// All one-node restrictions, top row first.
    pub fn cocovers(&self) -> Vec<Partition> {
        self.removable_nodes()
            .into_iter()
            .map(|n| self.remove_from_row(n.row))
            .collect()
    }

    /// Containment of diagrams, `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.rows.len() <= other.rows.len()
            && self.rows.iter().zip(&other.rows).all(|(a, b)| a <= b)
    }

    /// If `other` is `self` plus one node, the row that node sits in.
    pub fn added_row(&self, other: &Partition) -> Option<u32> {
        if other.size != self.size + 1 || !self.is_contained_in(other) {
            return None;
        }
        (1..=other.rows.len() as u32).find(|&i| other.row(i) != self.row(i))
    }

    pub fn lattice_join(&self, other: &Partition) -> Partition {
        let k = self.rows.len().max(other.rows.len()) as u32;
        Partition::from_rows_unchecked((1..=k).map(|i| self.row(i).max(other.row(i))).collect())
    }

    pub fn lattice_meet(&self, other: &Partition) -> Partition {
        let k = self.rows.len().min(other.rows.len()) as u32;
        Partition::from_rows_unchecked((1..=k).map(|i| self.row(i).min(other.row(i))).collect())
    }

    /// Every diamond with bottom `self`, each unordered mid pair once.
    pub fn diamonds_above(&self) -> Vec<Diamond> {
        let mut mids = self.covers();
        mids.sort();
        let mut out = Vec::new();
        for (a, left) in mids.iter().enumerate() {
            for right in &mids[a + 1..] {
                out.push(Diamond {
                    bottom: self.clone(),
                    mid_left: left.clone(),
                    mid_right: right.clone(),
                    top: left.lattice_join(right),
                });
            }
        }
        out
    }

    /// Number of nodes strictly above row `r`.
    pub fn nodes_above_row(&self, r: u32) -> u32 {
        self.rows.iter().take(r.saturating_sub(1) as usize).sum()
    }

    /// Iterates over all nodes, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Node::new(i as u32 + 1, j)))
    }
}

/// Classifies `λ \ μ`.
pub fn skew_classify(mu: &Partition, lambda: &Partition) -> SkewClass {
    if !mu.is_contained_in(lambda) {
        return SkewClass::NotContained;
    }
    let has_row_pair = (1..=lambda.len() as u32).any(|i| lambda.row(i) - mu.row(i) >= 2);
    let width = lambda.row(1);
    let has_column_pair = (1..=width).any(|j| lambda.column(j) - mu.column(j) >= 2);
    SkewClass::Contained {
        size: lambda.size - mu.size,
        has_column_pair,
        has_row_pair,
    }
}

/// All partitions of `n`, reverse lexicographic.
pub fn partitions_of(n: usize, bounds: &Bounds) -> Result<Vec<Partition>> {
    bounds.check("partition size", n, bounds.partition_size)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n as u32, n as u32, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_rows_unchecked(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// All partitions of size `0..=max`, grouped by size.
pub fn partitions_up_to(max: usize, bounds: &Bounds) -> Result<Vec<Partition>> {
    bounds.check("partition size", max, bounds.partition_size)?;
    let mut out = Vec::new();
    for n in 0..=max {
        out.extend(partitions_of(n, bounds)?);
    }
    Ok(out)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| other.rows.cmp(&self.rows))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("0");
        }
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() || cleaned == "0" {
            return Ok(Partition::empty());
        }
        let bad = |reason: String| Error::ParsePartition {
            input: s.to_string(),
            reason,
        };
        let rows = cleaned
            .split(',')
            .map(|t| t.parse::<u32>().map_err(|e| bad(format!("`{t}`: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if rows.iter().any(|&r| r == 0) {
            return Err(bad("row lengths must be positive".into()));
        }
        Partition::new(rows).map_err(|_| bad("rows must be weakly decreasing".into()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `λ` from a literal row list; panics on invalid input. Test and doc helper.
#[macro_export]
macro_rules! part {
    () => { $crate::partitions::Partition::empty() };
    ($($r:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($r),+]).expect("valid partition")
    };
}
