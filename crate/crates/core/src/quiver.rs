//! The Young lattice as a quiver, and its quotient by the column relations.
//!
//! `C'` is the linearized Young lattice: one morphism `μ → λ` (up to scalar)
//! whenever `μ ⊆ λ`. `C` is `C'` modulo the ideal spanned by all `C'(μ, λ)`
//! with two skew nodes in one column. Every hom space of `C` is therefore
//! zero or one dimensional, and is non-zero exactly when `λ ∖ μ` is a
//! horizontal strip. Morphisms are represented by that dimension only.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::config::Bounds;
use crate::error::Result;
use crate::partitions::{partitions_up_to, skew_classify, Partition, SkewClass};
use crate::signs::SignTable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomSpace {
    pub source: Partition,
    pub target: Partition,
    pub dimension: u8,
    /// `|target| - |source|`; meaningful only when the source is contained.
    pub degree: i64,
}

impl HomSpace {
    pub fn in_c(source: &Partition, target: &Partition) -> Self {
        HomSpace {
            source: source.clone(),
            target: target.clone(),
            dimension: hom_dim_c(source, target),
            degree: target.size() as i64 - source.size() as i64,
        }
    }
}

/// `dim C(μ, λ)`: 1 iff `μ ⊆ λ` and no two skew nodes share a column.
pub fn hom_dim_c(mu: &Partition, lambda: &Partition) -> u8 {
    u8::from(skew_classify(mu, lambda).is_horizontal_strip())
}

/// `dim C'(μ, λ)`: 1 iff `μ ⊆ λ`.
pub fn hom_dim_cprime(mu: &Partition, lambda: &Partition) -> u8 {
    u8::from(mu.is_contained_in(lambda))
}

/// `dim (C'/J)(μ, λ)` where `J` is generated by the hom spaces whose skew
/// shape has a column pair or a row pair.
pub fn hom_dim_cprime_mod_j(mu: &Partition, lambda: &Partition) -> u8 {
    u8::from(matches!(
        skew_classify(mu, lambda),
        SkewClass::Contained {
            has_column_pair: false,
            has_row_pair: false,
            ..
        }
    ))
}

/// The full subquiver on diagrams of size at most `max_size`.
#[derive(Debug, Clone, Serialize)]
pub struct QuiverSlice {
    pub max_size: usize,
    pub nodes: Vec<Partition>,
    pub arrows: Vec<(Partition, Partition)>,
}

pub fn quiver_slice(max_size: usize, bounds: &Bounds) -> Result<QuiverSlice> {
    bounds.check("lattice size", max_size, bounds.lattice_size)?;
    let nodes = partitions_up_to(max_size, bounds)?;
    let arrows = nodes
        .iter()
        .filter(|p| p.size() < max_size)
        .flat_map(|p| p.covers().into_iter().map(move |q| (p.clone(), q)))
        .collect();
    Ok(QuiverSlice {
        max_size,
        nodes,
        arrows,
    })
}

impl QuiverSlice {
    /// Graphviz rendering; arrows carry their sign when a table is given.
    pub fn to_dot(&self, signs: Option<&SignTable>) -> String {
        let mut s = String::from("digraph young_quiver {\n  rankdir=TB;\n");
        for p in &self.nodes {
            let _ = writeln!(s, "  \"{p}\";");
        }
        for (a, b) in &self.arrows {
            match signs.and_then(|t| t.arrow_sign(a, b).ok()) {
                Some(sign) => {
                    let _ = writeln!(s, "  \"{a}\" -> \"{b}\" [label=\"{sign}\"];");
                }
                None => {
                    let _ = writeln!(s, "  \"{a}\" -> \"{b}\";");
                }
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_text(&self, signs: Option<&SignTable>) -> String {
        let mut s = format!(
            "quiver slice up to size {}: {} nodes, {} arrows\n",
            self.max_size,
            self.nodes.len(),
            self.arrows.len()
        );
        let names: Vec<String> = self.nodes.iter().map(Partition::to_string).collect();
        let _ = writeln!(s, "nodes: {}", names.join(" "));
        for (a, b) in &self.arrows {
            match signs.and_then(|t| t.arrow_sign(a, b).ok()) {
                Some(sign) => {
                    let _ = writeln!(s, "{a} -> {b}  [{sign:+}]");
                }
                None => {
                    let _ = writeln!(s, "{a} -> {b}");
                }
            }
        }
        s
    }
}

/// Graded pieces of the projective `P_λ = C(λ, _)`: for each degree
/// `d ≤ max_degree`, the diagrams `μ ⊢ |λ| + d` with `C(λ, μ) ≠ 0`.
pub fn projective_graded_dims(lambda: &Partition, max_degree: usize) -> BTreeMap<usize, Vec<Partition>> {
    let mut out = BTreeMap::new();
    let mut level = vec![lambda.clone()];
    for d in 0..=max_degree {
        level.sort();
        level.dedup();
        out.insert(d, level.clone());
        // Sub-strips of a horizontal strip are horizontal, so extending only
        // surviving diagrams reaches every survivor of the next degree.
        level = level
            .iter()
            .flat_map(|p| p.covers())
            .filter(|q| hom_dim_c(lambda, q) == 1)
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn hom_c_examples() {
        assert_eq!(hom_dim_c(&part![3, 1], &part![3, 1]), 1);
        assert_eq!(hom_dim_c(&part![1], &part![1, 1, 1]), 0);
        assert_eq!(hom_dim_c(&part![1], &part![2, 1]), 1);
        assert_eq!(hom_dim_c(&part![2], &part![1, 1]), 0);
    }

    #[test]
    fn hom_cprime_mod_j_examples() {
        assert_eq!(hom_dim_cprime_mod_j(&part![1], &part![2, 1]), 1);
        assert_eq!(hom_dim_cprime_mod_j(&part![1], &part![3]), 0);
        assert_eq!(hom_dim_cprime_mod_j(&part![1], &part![1, 1, 1]), 0);
    }

    #[test]
    fn slice_examples() {
        let b = Bounds::default();
        let s0 = quiver_slice(0, &b).unwrap();
        assert_eq!(s0.nodes, vec![Partition::empty()]);
        assert!(s0.arrows.is_empty());
        let s1 = quiver_slice(1, &b).unwrap();
        assert_eq!(s1.arrows, vec![(Partition::empty(), part![1])]);
        let s4 = quiver_slice(4, &b).unwrap();
        // 1 + 2 + 4 + 7 arrows, one per edge of the size-4 truncation
        assert_eq!((s4.nodes.len(), s4.arrows.len()), (12, 14));
        assert!(quiver_slice(31, &b).is_err());
    }

    #[test]
    fn projective_examples() {
        let p = projective_graded_dims(&Partition::empty(), 2);
        assert_eq!(p[&2], vec![part![2]]);
        assert_eq!(projective_graded_dims(&part![3, 1], 0)[&0], vec![part![3, 1]]);
        assert_eq!(projective_graded_dims(&part![1], 1)[&1], vec![part![2], part![1, 1]]);
    }

    #[test]
    fn dot_has_every_arrow() {
        let s = quiver_slice(2, &Bounds::default()).unwrap();
        let dot = s.to_dot(None);
        assert!(dot.contains("\"0\" -> \"1\";"));
        assert!(dot.contains("\"1\" -> \"1,1\";"));
        assert_eq!(dot.matches("->").count(), 3);
    }
}
