//! Linear projective resolutions of the simple modules `L_ξ` over `C`.
//!
//! For a fixed diagram `ξ`, the stratum `I_i` (`i ≤ 0`) consists of the
//! diagrams obtained from `ξ` by adding `-i` nodes, no two in one row. The
//! term in position `i` is `⊕_{λ ∈ I_i} P_λ⟨i⟩` and the differential sends
//! the generator of `P_ν⟨i⟩` to `Σ s^λ_ν · (generator of P_λ⟨i+1⟩)` over
//! the one-node restrictions `λ ∈ I_{i+1}` of `ν`.
//!
//! A complex of `C`-modules is exact iff it is exact after evaluating at
//! every object `μ`, and `P_λ(μ) = C(λ, μ)` is zero or one dimensional. So
//! each evaluation is a short chain of integer matrices with entries in
//! `{0, ±1}`, one basis vector per component `λ` with `C(λ, μ) ≠ 0`, and
//! the whole statement reduces to exact ranks.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::certificate::{Certificate, CertificateBuilder};
use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::exactlinalg::RationalMatrix;
use crate::partitions::{partitions_of, partitions_up_to, skew_classify, Partition};
use crate::quiver::hom_dim_c;
use crate::signs::{arrow_sign, Sign};

/// Which arrow signs the differentials use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SignConvention {
    /// `s^λ_ν = (-1)^(nodes above the added row)`.
    Rows,
    /// The row convention of the transposed lattice, `s^{λᵀ}_{νᵀ}`. It also
    /// anticommutes on every diamond, so it must give an isomorphic complex.
    Transposed,
}

impl SignConvention {
    fn sign(self, from: &Partition, to: &Partition) -> Sign {
        let s = match self {
            SignConvention::Rows => arrow_sign(from, to),
            SignConvention::Transposed => arrow_sign(&from.transpose(), &to.transpose()),
        };
        s.expect("differentials are only built along arrows")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub i: i64,
    pub members: Vec<Partition>,
}

/// `I_i`: all `λ ⊇ ξ` with `|λ∖ξ| = -i` and no two skew nodes in one row.
pub fn stratum(xi: &Partition, i: i64, bounds: &Bounds) -> Result<Stratum> {
    if i > 0 {
        return Err(Error::PositiveStratum(i));
    }
    let k = (-i) as usize;
    bounds.check("resolution depth", k, bounds.depth)?;
    let mut level = vec![xi.clone()];
    for _ in 0..k {
        // Sub-strips of a vertical strip are vertical.
        level = level
            .iter()
            .flat_map(|p| p.covers())
            .filter(|q| skew_classify(xi, q).is_vertical_strip())
            .collect();
        level.sort();
        level.dedup();
    }
    Ok(Stratum { i, members: level })
}

/// A small dense matrix with entries in `{0, ±1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignMatrix {
    pub n_rows: usize,
    pub n_cols: usize,
    pub entries: Vec<Vec<i8>>,
}

impl SignMatrix {
    fn zeros(n_rows: usize, n_cols: usize) -> Self {
        SignMatrix {
            n_rows,
            n_cols,
            entries: vec![vec![0; n_cols]; n_rows],
        }
    }

    pub fn to_rational(&self) -> RationalMatrix {
        let rows: Vec<Vec<i64>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect();
        RationalMatrix::from_int_rows(self.n_cols, &rows)
    }

    pub fn rank(&self) -> usize {
        self.to_rational().rank()
    }
}

/// The evaluation of the complex at one object `μ`.
#[derive(Debug, Clone, Serialize)]
pub struct ObjectChain {
    pub object: Partition,
    /// `components[k]`: the `λ ∈ I_{-k}` with `C(λ, μ) ≠ 0`, in stratum order.
    pub components: Vec<Vec<Partition>>,
    /// `differentials[k]`: `Δ_{-k-1}(μ)` from position `-k-1` to `-k`; rows
    /// index `components[k]`, columns `components[k+1]`.
    pub differentials: Vec<SignMatrix>,
}

impl ObjectChain {
    pub fn dim(&self, position: i64) -> usize {
        self.components.get((-position) as usize).map_or(0, Vec::len)
    }

    /// `Δ_i(μ)` for `i < 0`, mapping position `i` to `i + 1`; `None` past
    /// the truncation.
    pub fn differential(&self, i: i64) -> Option<&SignMatrix> {
        if i >= 0 {
            return None;
        }
        self.differentials.get((-i - 1) as usize)
    }

    fn rank_of(&self, i: i64) -> usize {
        self.differential(i).map_or(0, SignMatrix::rank)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GradedComplex {
    pub xi: Partition,
    pub depth: usize,
    pub convention: SignConvention,
    /// `strata[k] = I_{-k}` for `k = 0..=depth`.
    pub strata: Vec<Stratum>,
    /// One chain per object `μ` with `|μ| ≤ |ξ| + depth`.
    pub objects: Vec<ObjectChain>,
}

pub fn build_resolution(xi: &Partition, depth: usize, bounds: &Bounds) -> Result<GradedComplex> {
    build_resolution_with(xi, depth, SignConvention::Rows, bounds)
}

pub fn build_resolution_with(
    xi: &Partition,
    depth: usize,
    convention: SignConvention,
    bounds: &Bounds,
) -> Result<GradedComplex> {
    bounds.check("resolution depth", depth, bounds.depth)?;
    let strata = (0..=depth as i64)
        .map(|k| stratum(xi, -k, bounds))
        .collect::<Result<Vec<_>>>()?;
    let objects: Vec<Partition> = partitions_up_to(xi.size() + depth, bounds)?;
    let chains = objects
        .into_par_iter()
        .map(|mu| evaluate(&mu, &strata, convention))
        .collect();
    Ok(GradedComplex {
        xi: xi.clone(),
        depth,
        convention,
        strata,
        objects: chains,
    })
}

fn evaluate(mu: &Partition, strata: &[Stratum], convention: SignConvention) -> ObjectChain {
    let components: Vec<Vec<Partition>> = strata
        .iter()
        .map(|s| {
            s.members
                .iter()
                .filter(|lambda| hom_dim_c(lambda, mu) == 1)
                .cloned()
                .collect()
        })
        .collect();
    let differentials = components
        .windows(2)
        .map(|w| {
            let (targets, sources) = (&w[0], &w[1]);
            let mut m = SignMatrix::zeros(targets.len(), sources.len());
            for (r, lambda) in targets.iter().enumerate() {
                for (c, nu) in sources.iter().enumerate() {
                    if lambda.added_row(nu).is_some() {
                        m.entries[r][c] = convention.sign(lambda, nu);
                    }
                }
            }
            m
        })
        .collect();
    ObjectChain {
        object: mu.clone(),
        components,
        differentials,
    }
}

impl GradedComplex {
    pub fn stratum(&self, i: i64) -> Option<&Stratum> {
        self.strata.get((-i) as usize)
    }

    pub fn object(&self, mu: &Partition) -> Option<&ObjectChain> {
        self.objects.iter().find(|c| &c.object == mu)
    }

    /// Every component of position `-n` is generated in internal degree `n`.
    pub fn is_linear(&self) -> bool {
        self.strata
            .iter()
            .all(|s| s.members.iter().all(|l| l.size() as i64 == self.xi.size() as i64 - s.i))
    }
}

fn convention_name(c: SignConvention) -> &'static str {
    match c {
        SignConvention::Rows => "rows",
        SignConvention::Transposed => "transposed",
    }
}

/// `Δ_{i+1}(μ) Δ_i(μ) = 0` at every object and position.
pub fn verify_complex(c: &GradedComplex) -> Certificate {
    let mut cert = CertificateBuilder::new("verify complex")
        .param("xi", &c.xi)
        .param("depth", c.depth)
        .param("signs", convention_name(c.convention));
    let results: Vec<(u64, u64, Option<serde_json::Value>)> = c
        .objects
        .par_iter()
        .map(|chain| {
            let mut products = 0;
            let mut cancellations = 0;
            let mut failure = None;
            for (k, pair) in chain.differentials.windows(2).enumerate() {
                // pair[0] = Δ_{-k-1}, pair[1] = Δ_{-k-2}
                let (outer, inner) = (&pair[0], &pair[1]);
                products += 1;
                for r in 0..outer.n_rows {
                    for col in 0..inner.n_cols {
                        let terms: Vec<i64> = (0..outer.n_cols)
                            .map(|k| outer.entries[r][k] as i64 * inner.entries[k][col] as i64)
                            .filter(|&t| t != 0)
                            .collect();
                        let sum: i64 = terms.iter().sum();
                        if terms.len() == 2 && sum == 0 {
                            cancellations += 1;
                        }
                        if sum != 0 && failure.is_none() {
                            failure = Some(json!({
                                "object": chain.object,
                                "position": -(k as i64) - 2,
                                "source": chain.components[k + 2][col],
                                "target": chain.components[k][r],
                                "entry_sum": sum,
                            }));
                        }
                    }
                }
            }
            (products, cancellations, failure)
        })
        .collect();
    for (p, k, f) in results {
        cert.bump("compositions_checked", p);
        cert.bump("diamond_cancellations", k);
        if let Some(f) = f {
            cert.fail(f);
        }
    }
    cert.set_count("objects_checked", c.objects.len() as u64);
    cert.set_count("linear", u64::from(c.is_linear()));
    if !c.is_linear() {
        cert.fail(json!({ "kind": "nonlinear_stratum" }));
    }
    cert.finish()
}

#[derive(Debug, Clone, Serialize)]
pub struct RankRecord {
    pub object: Partition,
    pub position: i64,
    pub dim: usize,
    /// Rank of the differential leaving this position (`Δ_i`, zero at 0).
    pub rank_out: usize,
    /// Rank of the differential arriving here (`Δ_{i-1}`).
    pub rank_in: usize,
    pub cohomology: usize,
}

/// Exactness at every position below zero and `L_ξ` at position zero,
/// object by object, plus the Euler characteristic check.
pub fn verify_exactness(c: &GradedComplex, record_ranks: bool) -> Certificate {
    let mut cert = CertificateBuilder::new("verify exactness")
        .param("xi", &c.xi)
        .param("depth", c.depth)
        .param("signs", convention_name(c.convention));
    let per_object: Vec<Vec<RankRecord>> = c
        .objects
        .par_iter()
        .map(|chain| {
            (0..=c.depth as i64)
                .map(|k| {
                    let i = -k;
                    let dim = chain.dim(i);
                    let rank_out = chain.rank_of(i);
                    let rank_in = chain.rank_of(i - 1);
                    RankRecord {
                        object: chain.object.clone(),
                        position: i,
                        dim,
                        rank_out,
                        rank_in,
                        cohomology: dim - rank_out - rank_in,
                    }
                })
                .collect()
        })
        .collect();
    let mut records = Vec::new();
    for (chain, recs) in c.objects.iter().zip(per_object) {
        let mu = &chain.object;
        let expected_top = usize::from(*mu == c.xi);
        let mut euler: i64 = 0;
        for rec in &recs {
            cert.bump("positions_checked", 1);
            euler += if rec.position % 2 == 0 { 1 } else { -1 } * rec.dim as i64;
            let expected = if rec.position == 0 { expected_top } else { 0 };
            if rec.cohomology != expected {
                cert.fail(json!({
                    "kind": "cohomology",
                    "object": mu,
                    "position": rec.position,
                    "dim": rec.dim,
                    "rank_out": rec.rank_out,
                    "rank_in": rec.rank_in,
                    "expected": expected,
                }));
            }
        }
        if euler != expected_top as i64 {
            cert.fail(json!({ "kind": "euler", "object": mu, "euler": euler }));
        }
        if expected_top == 1 {
            cert.bump("top_cohomology_objects", 1);
        }
        if record_ranks {
            records.extend(recs);
        }
    }
    cert.set_count("objects_checked", c.objects.len() as u64);
    if record_ranks {
        cert.details(json!({ "ranks": records }));
    }
    cert.finish()
}

/// Builds, checks `δ² = 0`, and checks exactness in one certificate.
pub fn verify_resolution(xi: &Partition, depth: usize, dump_matrices: bool, bounds: &Bounds) -> Result<Certificate> {
    let complex = build_resolution(xi, depth, bounds)?;
    let mut cert = CertificateBuilder::new("verify resolution")
        .param("xi", xi)
        .param("depth", depth)
        .param("signs", "rows");
    let squares = verify_complex(&complex);
    cert.absorb("complex", &squares);
    if squares.passed() {
        let exact = verify_exactness(&complex, false);
        cert.absorb("exactness", &exact);
    } else {
        cert.fail(json!({ "kind": "exactness_skipped", "reason": "not a complex" }));
    }
    cert.set_count("objects_checked", complex.objects.len() as u64);
    let strata: BTreeMap<String, usize> = complex
        .strata
        .iter()
        .map(|s| (s.i.to_string(), s.members.len()))
        .collect();
    let mut details = json!({ "strata_sizes": strata });
    if dump_matrices {
        details["matrices"] = serde_json::to_value(&complex.objects).expect("chains serialize");
    }
    cert.details(details);
    Ok(cert.finish())
}

/// The row and transposed sign conventions give complexes with the same
/// components, the same non-zero pattern, and the same ranks everywhere.
pub fn verify_sign_conventions(xi: &Partition, depth: usize, bounds: &Bounds) -> Result<Certificate> {
    let rows = build_resolution_with(xi, depth, SignConvention::Rows, bounds)?;
    let transposed = build_resolution_with(xi, depth, SignConvention::Transposed, bounds)?;
    let mut cert = CertificateBuilder::new("verify sign conventions")
        .param("xi", xi)
        .param("depth", depth);
    cert.absorb("transposed_complex", &verify_complex(&transposed));
    for (a, b) in rows.objects.iter().zip(&transposed.objects) {
        cert.bump("objects_checked", 1);
        if a.components != b.components {
            cert.fail(json!({ "kind": "components", "object": a.object }));
            continue;
        }
        for (k, (da, db)) in a.differentials.iter().zip(&b.differentials).enumerate() {
            let same_support = da
                .entries
                .iter()
                .flatten()
                .zip(db.entries.iter().flatten())
                .all(|(x, y)| (*x == 0) == (*y == 0));
            if !same_support || da.rank() != db.rank() {
                cert.fail(json!({ "kind": "differential", "object": a.object, "position": -(k as i64) - 1 }));
            }
        }
    }
    Ok(cert.finish())
}

/// Indicator of `P_λ⟨i⟩` occurring in position `i`, over all diagrams of
/// size `|ξ| - i`.
pub fn betti_table(xi: &Partition, depth: usize, bounds: &Bounds) -> Result<BTreeMap<(i64, Partition), u8>> {
    let mut out = BTreeMap::new();
    for k in 0..=depth as i64 {
        let s = stratum(xi, -k, bounds)?;
        for lambda in partitions_of(xi.size() + k as usize, bounds)? {
            let v = u8::from(s.members.contains(&lambda));
            out.insert((-k, lambda), v);
        }
    }
    Ok(out)
}
