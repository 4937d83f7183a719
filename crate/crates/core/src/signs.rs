//! Signs on the arrows of the Young quiver such that every diamond
//! anticommutes.
//!
//! Every diagram sits in an infinite column of rows, all of which start with
//! sign `+1` for `∅`. Adding a node in row `r` keeps the sign of rows
//! `1..=r` and flips every row below; the new arrow takes the sign of row
//! `r`. Because each node added above row `r` flips it exactly once, the
//! outcome is path independent:
//!
//! ```text
//! row_sign(λ, r) = (-1)^(λ_1 + … + λ_{r-1})
//! ```
//!
//! [`arrow_sign`] uses this closed form. [`build_sign_table`] runs the
//! incremental procedure instead, and [`verify_anticommutativity`] checks
//! the two against each other on every path through the lattice.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::json;

use crate::certificate::{Certificate, CertificateBuilder};
use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::partitions::{partitions_up_to, Diamond, Partition};

pub type Sign = i8;

/// `(-1)^(nodes of λ strictly above row r)`, for any row `r ≥ 1`.
pub fn row_sign(lambda: &Partition, r: u32) -> Sign {
    if lambda.nodes_above_row(r) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `s^λ_μ` for an arrow `λ → μ`.
pub fn arrow_sign(lambda: &Partition, mu: &Partition) -> Result<Sign> {
    let r = lambda.added_row(mu).ok_or_else(|| Error::NotAnArrow {
        from: lambda.to_string(),
        to: mu.to_string(),
    })?;
    Ok(row_sign(lambda, r))
}

/// Row signs produced by the incremental procedure.
///
/// Only finitely many rows are stored; every row past the end carries the
/// sign of the last stored row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthState {
    diagram: Partition,
    rows: Vec<Sign>,
}

impl GrowthState {
    pub fn empty() -> Self {
        GrowthState {
            diagram: Partition::empty(),
            rows: vec![1],
        }
    }

    pub fn diagram(&self) -> &Partition {
        &self.diagram
    }

    pub fn row(&self, r: u32) -> Sign {
        let idx = (r as usize - 1).min(self.rows.len() - 1);
        self.rows[idx]
    }

    /// Adds a node at the end of row `r`; returns the new state and the
    /// sign of the arrow taken.
    pub fn grow(&self, r: u32) -> Result<(GrowthState, Sign)> {
        let addable = self.diagram.addable_nodes();
        let Some(node) = addable.iter().find(|n| n.row == r) else {
            return Err(Error::NotAddable {
                partition: self.diagram.to_string(),
                row: r,
                col: self.diagram.row(r) + 1,
                reason: "row does not admit a node",
            });
        };
        let diagram = self.diagram.add_node(*node)?;
        let mut rows = self.rows.clone();
        // keep one spare row past the diagram so "rows below" stay represented
        while rows.len() < diagram.len() + 1 {
            rows.push(*rows.last().unwrap());
        }
        let sign = rows[r as usize - 1];
        for s in rows.iter_mut().skip(r as usize) {
            *s = -*s;
        }
        Ok((GrowthState { diagram, rows }, sign))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SignTable {
    pub max_size: usize,
    #[serde(serialize_with = "serialize_arrows")]
    arrow_signs: BTreeMap<(Partition, Partition), Sign>,
    #[serde(serialize_with = "serialize_rows")]
    row_signs: BTreeMap<(Partition, u32), Sign>,
}

fn serialize_arrows<S: serde::Serializer>(
    m: &BTreeMap<(Partition, Partition), Sign>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<_> = m.iter().map(|((a, b), sign)| (a.to_string(), b.to_string(), sign)).collect();
    v.serialize(s)
}

fn serialize_rows<S: serde::Serializer>(
    m: &BTreeMap<(Partition, u32), Sign>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<_> = m.iter().map(|((p, r), sign)| (p.to_string(), r, sign)).collect();
    v.serialize(s)
}

impl SignTable {
    pub fn arrow_sign(&self, from: &Partition, to: &Partition) -> Result<Sign> {
        self.arrow_signs
            .get(&(from.clone(), to.clone()))
            .copied()
            .ok_or_else(|| Error::NotAnArrow {
                from: from.to_string(),
                to: to.to_string(),
            })
    }

    /// Stored sign of row `r` of `λ`; rows `1..=len(λ)+1` are stored.
    pub fn row_sign(&self, lambda: &Partition, r: u32) -> Option<Sign> {
        self.row_signs.get(&(lambda.clone(), r)).copied()
    }

    pub fn arrows(&self) -> impl Iterator<Item = (&Partition, &Partition, Sign)> {
        self.arrow_signs.iter().map(|((a, b), s)| (a, b, *s))
    }

    pub fn len(&self) -> usize {
        self.arrow_signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrow_signs.is_empty()
    }

    /// `s^{λ₂}_{λ₄} s^{λ₁}_{λ₂}` and `s^{λ₃}_{λ₄} s^{λ₁}_{λ₃}`.
    pub fn diamond_products(&self, d: &Diamond) -> Result<(Sign, Sign)> {
        let left = self.arrow_sign(&d.mid_left, &d.top)? * self.arrow_sign(&d.bottom, &d.mid_left)?;
        let right = self.arrow_sign(&d.mid_right, &d.top)? * self.arrow_sign(&d.bottom, &d.mid_right)?;
        Ok((left, right))
    }
}

/// Runs the growth procedure over the lattice up to `max_size`, each
/// diagram reached first from its earliest parent in the partition order.
pub fn build_sign_table(max_size: usize, bounds: &Bounds) -> Result<SignTable> {
    bounds.check("lattice size", max_size, bounds.lattice_size)?;
    let mut states: BTreeMap<Partition, GrowthState> = BTreeMap::new();
    states.insert(Partition::empty(), GrowthState::empty());
    let mut arrow_signs = BTreeMap::new();
    for lambda in partitions_up_to(max_size.saturating_sub(1), bounds)? {
        if max_size == 0 {
            break;
        }
        let state = states[&lambda].clone();
        for node in lambda.addable_nodes() {
            let (next, sign) = state.grow(node.row)?;
            arrow_signs.insert((lambda.clone(), next.diagram.clone()), sign);
            states.entry(next.diagram.clone()).or_insert(next);
        }
    }
    let mut row_signs = BTreeMap::new();
    for (p, st) in &states {
        for r in 1..=p.len() as u32 + 1 {
            row_signs.insert((p.clone(), r), st.row(r));
        }
    }
    Ok(SignTable {
        max_size,
        arrow_signs,
        row_signs,
    })
}

/// Checks every diamond with top of size at most `max_size`, and that the
/// growth procedure reproduces the closed form along every path from `∅`
/// to every diagram of size at most `path_size`.
pub fn verify_anticommutativity(max_size: usize, path_size: usize, bounds: &Bounds) -> Result<Certificate> {
    let mut cert = CertificateBuilder::new("verify signs")
        .param("max_size", max_size)
        .param("path_size", path_size)
        .param("convention", "row_sign(λ, r) = (-1)^(nodes above row r), all ambient rows start at +1");
    let table = build_sign_table(max_size, bounds)?;
    cert.set_count("arrows_checked", table.len() as u64);

    for (from, to, sign) in table.arrows() {
        if arrow_sign(from, to)? != sign {
            cert.fail(json!({ "kind": "table_vs_closed_form", "from": from, "to": to, "table": sign }));
        }
    }

    let mut diamonds = 0u64;
    for bottom in partitions_up_to(max_size.saturating_sub(2), bounds)? {
        if max_size < 2 {
            break;
        }
        for d in bottom.diamonds_above() {
            diamonds += 1;
            let (left, right) = table.diamond_products(&d)?;
            // exactly one product is +1 iff the two products are opposite
            if left != -right {
                cert.fail(json!({
                    "kind": "diamond",
                    "diamond": [&d.bottom, &d.mid_left, &d.mid_right, &d.top],
                    "products": [left, right],
                }));
            }
        }
    }
    cert.set_count("diamonds_checked", diamonds);

    bounds.check("lattice size", path_size, bounds.lattice_size)?;
    let mut paths = 0u64;
    let mut states = 0u64;
    walk_paths(&GrowthState::empty(), path_size, &mut paths, &mut states, &mut cert)?;
    cert.set_count("paths_checked", paths);
    cert.set_count("path_states_checked", states);
    Ok(cert.finish())
}

fn walk_paths(
    state: &GrowthState,
    max: usize,
    paths: &mut u64,
    states: &mut u64,
    cert: &mut CertificateBuilder,
) -> Result<()> {
    *states += 1;
    let lambda = state.diagram();
    for r in 1..=lambda.len() as u32 + 1 {
        if state.row(r) != row_sign(lambda, r) {
            cert.fail(json!({ "kind": "path_dependence", "diagram": lambda, "row": r }));
        }
    }
    if lambda.size() == max {
        *paths += 1;
        return Ok(());
    }
    for node in lambda.addable_nodes() {
        let (next, _) = state.grow(node.row)?;
        walk_paths(&next, max, paths, states, cert)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn figure_values() {
        let t = build_sign_table(4, &Bounds::default()).unwrap();
        assert_eq!(t.arrow_sign(&Partition::empty(), &part![1]).unwrap(), 1);
        assert_eq!(t.arrow_sign(&part![1], &part![1, 1]).unwrap(), -1);
        assert_eq!(t.arrow_sign(&part![1], &part![2]).unwrap(), 1);
        assert_eq!(t.arrow_sign(&part![2, 1], &part![2, 1, 1]).unwrap(), -1);
        assert_eq!(t.arrow_sign(&part![1, 1], &part![2, 1]).unwrap(), 1);
        assert_eq!(t.row_sign(&part![1], 2), Some(-1));
        assert_eq!(t.row_sign(&part![1, 1], 3), Some(1));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(arrow_sign(&part![1, 1], &part![2, 1]).unwrap(), 1);
        assert_eq!(arrow_sign(&part![2], &part![3]).unwrap(), 1);
        assert_eq!(arrow_sign(&part![3, 1], &part![3, 1, 1]).unwrap(), 1);
        assert_eq!(arrow_sign(&part![2, 1], &part![2, 1, 1]).unwrap(), -1);
        assert!(matches!(arrow_sign(&part![1], &part![3]), Err(Error::NotAnArrow { .. })));
    }

    #[test]
    fn small_diamond() {
        let t = build_sign_table(2, &Bounds::default()).unwrap();
        let d = &part![1].diamonds_above()[0];
        assert!(t.diamond_products(d).is_err(), "top (2,1) is outside a size-2 table");
        let t = build_sign_table(3, &Bounds::default()).unwrap();
        // (2) then (2,1): (+1)(+1); (1,1) then (2,1): (+1)(-1)
        assert_eq!(t.diamond_products(d).unwrap(), (1, -1));
    }

    #[test]
    fn tiny_sweeps_pass() {
        let c = verify_anticommutativity(2, 2, &Bounds::default()).unwrap();
        assert!(c.passed());
        assert_eq!(c.count("diamonds_checked"), 0);
        let c = verify_anticommutativity(0, 0, &Bounds::default()).unwrap();
        assert!(c.passed());
    }

    #[test]
    fn growth_rejects_bad_row() {
        assert!(GrowthState::empty().grow(2).is_err());
    }
}
