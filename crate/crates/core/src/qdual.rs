//! Quadratic presentations on the Young quiver and their quadratic duals.
//!
//! A presentation keeps, for every pair `μ ⊆ λ` with `|λ∖μ| = 2`, a
//! subspace of relations inside the span of the length-two paths
//! `μ → ν → λ` (one or two of them). Higher hom spaces are the free paths
//! `μ → λ` modulo the two-sided ideal generated by the quadratic
//! relations, computed one degree at a time by exact elimination.
//!
//! The dual of a presentation replaces each relation space by its
//! annihilator under the pairing in which the path basis is orthonormal.
//! A dual generator `f*_{μ,ν}` is stored as a morphism `μ → ν`, and
//! composition follows lattice path concatenation; the opposite category in
//! the self-duality statement absorbs this choice. All checks made here are
//! dimension and relation-membership checks, which do not depend on it.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::certificate::{Certificate, CertificateBuilder};
use crate::config::Bounds;
use crate::error::Result;
use crate::exactlinalg::RationalMatrix;
use crate::partitions::{partitions_up_to, skew_classify, Partition, SkewClass};
use crate::quiver::{hom_dim_c, hom_dim_cprime_mod_j};
use crate::signs::arrow_sign;

/// The relations on the length-two paths from one diagram to another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSpace {
    /// Intermediate diagrams; the path basis is `μ → mids[k] → λ`.
    pub mids: Vec<Partition>,
    /// A basis of the relation subspace, as coefficient vectors over `mids`.
    pub basis: Vec<Vec<BigRational>>,
}

impl RelationSpace {
    pub fn path_count(&self) -> usize {
        self.mids.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Annihilator under the dot product on the path basis.
    pub fn annihilator(&self) -> RelationSpace {
        let basis = if self.basis.is_empty() {
            RationalMatrix::identity(self.mids.len()).row_space_basis()
        } else {
            RationalMatrix::from_rational_rows(self.mids.len(), &self.basis).kernel_basis()
        };
        RelationSpace {
            mids: self.mids.clone(),
            basis,
        }
    }

    /// True when `v` lies in the span of the basis.
    pub fn contains(&self, v: &[BigRational]) -> bool {
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let mut rows = self.basis.clone();
        let before = RationalMatrix::from_rational_rows(self.mids.len(), &rows).rank();
        rows.push(v.to_vec());
        RationalMatrix::from_rational_rows(self.mids.len(), &rows).rank() == before
    }

    pub fn same_span(&self, other: &RelationSpace) -> bool {
        self.mids == other.mids
            && self.dim() == other.dim()
            && other.basis.iter().all(|v| self.contains(v))
    }
}

/// The three shapes of a two-node skew diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TwoStepKind {
    /// Both nodes in one column: a single path, killed in `C`.
    ColumnPair,
    /// Both nodes in one row: a single path, non-zero in `C`.
    RowPair,
    /// Two paths around a diamond.
    Diamond,
}

pub fn two_step_kind(mu: &Partition, lambda: &Partition) -> Option<TwoStepKind> {
    match skew_classify(mu, lambda) {
        SkewClass::Contained {
            size: 2,
            has_column_pair,
            has_row_pair,
        } => Some(if has_column_pair {
            TwoStepKind::ColumnPair
        } else if has_row_pair {
            TwoStepKind::RowPair
        } else {
            TwoStepKind::Diamond
        }),
        _ => None,
    }
}

#[derive(Debug, Clone)]
pub struct QuadraticPresentation {
    pub max_size: usize,
    pub objects: Vec<Partition>,
    relations: BTreeMap<(Partition, Partition), RelationSpace>,
}

fn mids_between(mu: &Partition, lambda: &Partition) -> Vec<Partition> {
    let mut mids: Vec<Partition> = mu.covers().into_iter().filter(|n| n.is_contained_in(lambda)).collect();
    mids.sort();
    mids
}

/// The matrix of `m_{μ,λ}` into a target of dimension `target_dim ≤ 1`,
/// where every path composes to the chosen generator.
fn multiplication_matrix(paths: usize, target_dim: u8) -> RationalMatrix {
    let rows: Vec<Vec<i64>> = (0..target_dim).map(|_| vec![1; paths]).collect();
    RationalMatrix::from_int_rows(paths, &rows)
}

impl QuadraticPresentation {
    /// Presentation of a quotient of the lattice whose degree-two hom
    /// dimensions are given by `two_step_dim`, with all paths between the
    /// same objects identified (so the relations are `ker m`).
    fn from_multiplication(max_size: usize, bounds: &Bounds, two_step_dim: impl Fn(&Partition, &Partition) -> u8) -> Result<Self> {
        Self::build(max_size, bounds, |mu, lambda, mids| {
            multiplication_matrix(mids.len(), two_step_dim(mu, lambda)).kernel_basis()
        })
    }

    fn build(
        max_size: usize,
        bounds: &Bounds,
        relations_at: impl Fn(&Partition, &Partition, &[Partition]) -> Vec<Vec<BigRational>>,
    ) -> Result<Self> {
        bounds.check("dual size", max_size, bounds.dual_size)?;
        let objects = partitions_up_to(max_size, bounds)?;
        let mut relations = BTreeMap::new();
        for mu in objects.iter().filter(|p| p.size() + 2 <= max_size) {
            let mut tops: Vec<Partition> = mu.covers().iter().flat_map(|n| n.covers()).collect();
            tops.sort();
            tops.dedup();
            for lambda in tops {
                let mids = mids_between(mu, &lambda);
                let basis = relations_at(mu, &lambda, &mids);
                relations.insert((mu.clone(), lambda), RelationSpace { mids, basis });
            }
        }
        Ok(QuadraticPresentation {
            max_size,
            objects,
            relations,
        })
    }

    /// `C`: paths commute around diamonds; column dominoes vanish.
    pub fn of_c(max_size: usize, bounds: &Bounds) -> Result<Self> {
        Self::from_multiplication(max_size, bounds, hom_dim_c)
    }

    /// `C'`: the linearized Young lattice, every square commuting.
    pub fn of_cprime(max_size: usize, bounds: &Bounds) -> Result<Self> {
        Self::from_multiplication(max_size, bounds, |_, _| 1)
    }

    /// The quadratic dual: annihilators of every relation space.
    pub fn dual(&self) -> Self {
        QuadraticPresentation {
            max_size: self.max_size,
            objects: self.objects.clone(),
            relations: self
                .relations
                .iter()
                .map(|(k, r)| (k.clone(), r.annihilator()))
                .collect(),
        }
    }

    pub fn relation(&self, mu: &Partition, lambda: &Partition) -> Option<&RelationSpace> {
        self.relations.get(&(mu.clone(), lambda.clone()))
    }

    pub fn relations(&self) -> impl Iterator<Item = (&Partition, &Partition, &RelationSpace)> {
        self.relations.iter().map(|((a, b), r)| (a, b, r))
    }

    /// Dimension of the hom space `μ → λ` of the presented category.
    pub fn hom_dim(&self, mu: &Partition, lambda: &Partition) -> usize {
        assert!(lambda.size() <= self.max_size, "{lambda:?} is outside the presentation");
        if !mu.is_contained_in(lambda) {
            return 0;
        }
        self.sweep(mu, Some(lambda)).dims.get(lambda).copied().unwrap_or(0)
    }

    /// `dim A(μ, λ)` for every `λ ⊇ μ` in range; missing diagrams have
    /// dimension zero.
    pub fn hom_dims_from(&self, mu: &Partition) -> BTreeMap<Partition, usize> {
        self.sweep(mu, None).dims
    }

    /// Builds `A(μ, λ)` degree by degree as
    /// `(⊕_{ν ⋖ λ} A(μ, ν)) / (image of A(μ, ρ) ⊗ R(ρ, λ))`,
    /// keeping the matrices of right multiplication by each arrow.
    fn sweep(&self, mu: &Partition, top: Option<&Partition>) -> Sweep {
        let inside = |p: &Partition| top.map_or(true, |t| p.is_contained_in(t));
        let mut sw = Sweep {
            dims: BTreeMap::from([(mu.clone(), 1)]),
            mult: BTreeMap::new(),
        };
        let mut level = vec![mu.clone()];
        while level[0].size() < self.max_size {
            let mut next: Vec<Partition> = level
                .iter()
                .filter(|p| sw.dims[*p] > 0)
                .flat_map(|p| p.covers())
                .filter(|q| inside(q))
                .collect();
            next.sort();
            next.dedup();
            if next.is_empty() {
                break;
            }
            for lambda in &next {
                sw.extend(mu, lambda, &self.relations);
            }
            level = next;
        }
        sw
    }
}

struct Sweep {
    dims: BTreeMap<Partition, usize>,
    /// `(ν, λ)` ↦ matrix of `A(μ, ν) → A(μ, λ)`, `dim λ × dim ν`.
    mult: BTreeMap<(Partition, Partition), Vec<Vec<BigRational>>>,
}

impl Sweep {
    fn dim(&self, p: &Partition) -> usize {
        self.dims.get(p).copied().unwrap_or(0)
    }

    fn extend(
        &mut self,
        mu: &Partition,
        lambda: &Partition,
        relations: &BTreeMap<(Partition, Partition), RelationSpace>,
    ) {
        let blocks: Vec<Partition> = lambda
            .cocovers()
            .into_iter()
            .filter(|nu| mu.is_contained_in(nu) && self.dim(nu) > 0)
            .collect();
        let mut offsets = BTreeMap::new();
        let mut width = 0;
        for nu in &blocks {
            offsets.insert(nu.clone(), width);
            width += self.dim(nu);
        }
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        if lambda.size() >= mu.size() + 2 {
            let mut rhos: Vec<Partition> = blocks
                .iter()
                .flat_map(|nu| nu.cocovers())
                .filter(|rho| mu.is_contained_in(rho) && self.dim(rho) > 0)
                .collect();
            rhos.sort();
            rhos.dedup();
            for rho in rhos {
                let rel = &relations[&(rho.clone(), lambda.clone())];
                for r in &rel.basis {
                    for b in 0..self.dim(&rho) {
                        let mut v = vec![BigRational::zero(); width];
                        for (nu, c) in rel.mids.iter().zip(r) {
                            if c.is_zero() || self.dim(nu) == 0 {
                                continue;
                            }
                            let m = &self.mult[&(rho.clone(), nu.clone())];
                            for (i, row) in m.iter().enumerate() {
                                v[offsets[nu] + i] += c * &row[b];
                            }
                        }
                        rows.push(v);
                    }
                }
            }
        }
        let (rref, pivots) = RationalMatrix::from_rational_rows(width, &rows).rref();
        let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
        // projection of each generator onto the free coordinates
        let mut proj = vec![vec![BigRational::zero(); width]; free.len()];
        for (i, &f) in free.iter().enumerate() {
            proj[i][f] = BigRational::one();
        }
        for (r, &p) in pivots.iter().enumerate() {
            for (i, &f) in free.iter().enumerate() {
                proj[i][p] = -rref[r][f].clone();
            }
        }
        for nu in &blocks {
            let off = offsets[nu];
            let m: Vec<Vec<BigRational>> = proj
                .iter()
                .map(|row| row[off..off + self.dim(nu)].to_vec())
                .collect();
            self.mult.insert((nu.clone(), lambda.clone()), m);
        }
        self.dims.insert(lambda.clone(), free.len());
    }
}

/// Every saturated chain `μ = p_0 → p_1 → … → p_k = λ`.
pub fn lattice_paths(mu: &Partition, lambda: &Partition) -> Vec<Vec<Partition>> {
    let mut out = Vec::new();
    let mut current = vec![mu.clone()];
    extend_paths(lambda, &mut current, &mut out);
    out
}

fn extend_paths(lambda: &Partition, current: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
    let last = current.last().unwrap().clone();
    if last == *lambda {
        out.push(current.clone());
        return;
    }
    for next in last.covers().into_iter().filter(|n| n.is_contained_in(lambda)) {
        current.push(next);
        extend_paths(lambda, current, out);
        current.pop();
    }
}

/// The dual of `C`, with relation spaces computed as the image of the dual
/// multiplication map `m*_{μ,λ}` (the row space of `m_{μ,λ}`).
pub fn build_quadratic_dual(max_size: usize, bounds: &Bounds) -> Result<QuadraticPresentation> {
    QuadraticPresentation::build(max_size, bounds, |mu, lambda, mids| {
        multiplication_matrix(mids.len(), hom_dim_c(mu, lambda)).row_space_basis()
    })
}

pub fn dual_hom_dim(mu: &Partition, lambda: &Partition, presentation: &QuadraticPresentation) -> usize {
    presentation.hom_dim(mu, lambda)
}

/// Compares `dim A(μ, λ)` with `expected` over all pairs of objects with
/// `|μ| ≤ |λ|`, one parallel sweep per source. Returns the number of pairs
/// and the mismatches `(μ, λ, found, expected)` in object order.
fn compare_dims(
    pres: &QuadraticPresentation,
    expected: impl Fn(&Partition, &Partition) -> usize + Sync,
) -> (u64, Vec<(Partition, Partition, usize, usize)>) {
    let per_source: Vec<(u64, Vec<_>)> = pres
        .objects
        .par_iter()
        .map(|mu| {
            let dims = pres.hom_dims_from(mu);
            let mut n = 0;
            let mut bad = Vec::new();
            for lambda in pres.objects.iter().filter(|l| l.size() >= mu.size()) {
                n += 1;
                let found = dims.get(lambda).copied().unwrap_or(0);
                let want = expected(mu, lambda);
                if found != want {
                    bad.push((mu.clone(), lambda.clone(), found, want));
                }
            }
            (n, bad)
        })
        .collect();
    let total = per_source.iter().map(|(n, _)| n).sum();
    (total, per_source.into_iter().flat_map(|(_, b)| b).collect())
}

fn two_step_expectation(kind: TwoStepKind) -> (usize, usize, usize) {
    // (paths, dual relation dim, dual hom dim)
    match kind {
        TwoStepKind::ColumnPair => (1, 0, 1),
        TwoStepKind::RowPair => (1, 1, 0),
        TwoStepKind::Diamond => (2, 1, 1),
    }
}

/// Self-duality of `C` on diagrams up to `max_size`:
///
/// * dimensions: `dim C^!(μ, λ) = dim C(μᵀ, λᵀ)` for every pair;
/// * relation spaces follow the three-case table, and the diamond relation
///   is the anticommutativity `p₁ + p₂`;
/// * the signed transpose `f_{μ,ν} ↦ s^μ_ν f*_{μᵀ,νᵀ}` carries every
///   relation of `C` into the relations of `C^!`.
pub fn verify_self_duality(max_size: usize, bounds: &Bounds) -> Result<Certificate> {
    let mut cert = CertificateBuilder::new("verify qdual")
        .param("max_size", max_size)
        .param("convention", "f*_{μ,ν} stored as μ → ν; composition is path concatenation");
    let c = QuadraticPresentation::of_c(max_size, bounds)?;
    let dual = build_quadratic_dual(max_size, bounds)?;

    for (mu, lambda, rel) in dual.relations() {
        cert.bump("relation_spaces_checked", 1);
        let kind = two_step_kind(mu, lambda).expect("relations live on two-node skews");
        let (paths, rel_dim, hom) = two_step_expectation(kind);
        let annihilator = c.relation(mu, lambda).unwrap().annihilator();
        let mut ok = rel.path_count() == paths && rel.dim() == rel_dim && rel.same_span(&annihilator);
        if kind == TwoStepKind::Diamond {
            let anti = vec![BigRational::one(), BigRational::one()];
            ok &= rel.contains(&anti);
        }
        ok &= dual.hom_dim(mu, lambda) == hom;
        if !ok {
            cert.fail(json!({
                "kind": "relation_table",
                "mu": mu, "lambda": lambda, "case": kind,
                "paths": rel.path_count(), "relation_dim": rel.dim(),
            }));
        }
    }

    let (pairs, mismatches) = compare_dims(&dual, |mu, lambda| hom_dim_c(&mu.transpose(), &lambda.transpose()) as usize);
    cert.set_count("pairs_checked", pairs);
    for (mu, lambda, lhs, rhs) in mismatches {
        cert.fail(json!({ "kind": "dimension", "mu": mu, "lambda": lambda, "dual": lhs, "transposed": rhs }));
    }

    // Push every relation of C through the signed transpose.
    for (mu, lambda, rel) in c.relations() {
        let (mu_t, lambda_t) = (mu.transpose(), lambda.transpose());
        let target = dual.relation(&mu_t, &lambda_t).unwrap();
        let kind = two_step_kind(mu, lambda).unwrap();
        for r in &rel.basis {
            let mut image = vec![BigRational::zero(); target.path_count()];
            for (mid, coeff) in rel.mids.iter().zip(r) {
                let sign = arrow_sign(mu, mid)? * arrow_sign(mid, lambda)?;
                let slot = target.mids.iter().position(|m| *m == mid.transpose()).unwrap();
                image[slot] += coeff * BigRational::from_integer(sign.into());
            }
            match kind {
                TwoStepKind::Diamond => cert.bump("diamonds_checked", 1),
                _ => cert.bump("zero_relations_checked", 1),
            }
            if !target.contains(&image) {
                cert.fail(json!({ "kind": "functor", "mu": mu, "lambda": lambda, "case": kind }));
            }
        }
    }
    Ok(cert.finish())
}

/// `C'^! ≅ (C'/J)^op` on dimensions, `J` generated by the column and row
/// dominoes.
pub fn verify_lattice_dual(max_size: usize, bounds: &Bounds) -> Result<Certificate> {
    let mut cert = CertificateBuilder::new("verify lattice dual").param("max_size", max_size);
    let dual = QuadraticPresentation::of_cprime(max_size, bounds)?.dual();
    let (pairs, mismatches) =
        compare_dims(&dual, |mu, lambda| hom_dim_cprime_mod_j(&mu.transpose(), &lambda.transpose()) as usize);
    cert.set_count("pairs_checked", pairs);
    for (mu, lambda, lhs, rhs) in mismatches {
        cert.fail(json!({ "mu": mu, "lambda": lambda, "dual": lhs, "quotient": rhs }));
    }
    Ok(cert.finish())
}

/// Dualizing twice returns the relations, and hence the hom dimensions, of `C`.
pub fn verify_involution(max_size: usize, bounds: &Bounds) -> Result<Certificate> {
    let mut cert = CertificateBuilder::new("verify qdual involution").param("max_size", max_size);
    let c = QuadraticPresentation::of_c(max_size, bounds)?;
    let twice = build_quadratic_dual(max_size, bounds)?.dual();
    for (mu, lambda, rel) in c.relations() {
        cert.bump("relation_spaces_checked", 1);
        if !rel.same_span(twice.relation(mu, lambda).unwrap()) {
            cert.fail(json!({ "kind": "relations", "mu": mu, "lambda": lambda }));
        }
    }
    let (pairs, mismatches) = compare_dims(&twice, |mu, lambda| hom_dim_c(mu, lambda) as usize);
    cert.set_count("pairs_checked", pairs);
    for (mu, lambda, lhs, rhs) in mismatches {
        cert.fail(json!({ "kind": "dimension", "mu": mu, "lambda": lambda, "double_dual": lhs, "c": rhs }));
    }
    Ok(cert.finish())
}

/// `(μ, λ, dim C^!(μ, λ))` for every contained pair up to `max_size`.
pub fn dual_dims_table(max_size: usize, bounds: &Bounds) -> Result<Vec<(Partition, Partition, usize)>> {
    let dual = build_quadratic_dual(max_size, bounds)?;
    let per_source: Vec<Vec<_>> = dual
        .objects
        .par_iter()
        .map(|mu| {
            let dims = dual.hom_dims_from(mu);
            dual.objects
                .iter()
                .filter(|l| mu.is_contained_in(l))
                .map(|l| (mu.clone(), l.clone(), dims.get(l).copied().unwrap_or(0)))
                .collect()
        })
        .collect();
    Ok(per_source.into_iter().flatten().collect())
}
