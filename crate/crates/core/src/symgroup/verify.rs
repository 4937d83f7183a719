//! Sweeps comparing the group algebra with the quiver.

use rayon::prelude::*;
use serde_json::json;

use super::algebra::GroupAlgebraElement;
use super::idempotents::{central_idempotent, direct_hom_dimension, is_central, is_idempotent, young_symmetrizer};
use super::induction::{branching_count, induction_multiplicity, pieri_coefficient};
use super::tableaux::canonical_tableau;
use crate::certificate::{Certificate, CertificateBuilder};
use crate::config::Bounds;
use crate::error::Result;
use crate::partitions::{partitions_of, Partition};
use crate::quiver::hom_dim_c;

/// Arrows of the quiver from the group algebra, for `μ ⊢ k ≤ n`, `λ ⊢ k+1`:
/// the rank of `e_{t¹_λ} M_{k,1} e_{t¹_μ}`, the character multiplicity, and
/// the one-node rule all agree, and the multiplicities over `λ` sum to the
/// number of addable nodes of `μ`.
pub fn verify_morita(n: usize, bounds: &Bounds) -> Result<Certificate> {
    bounds.check("direct hom degree", n, bounds.direct_hom_degree)?;
    let mut cert = CertificateBuilder::new("verify morita")
        .param("n", n)
        .param("coset_representatives", "minimal length, increasing on the added points");
    let mut pairs = Vec::new();
    for k in 0..=n {
        for mu in partitions_of(k, bounds)? {
            for lambda in partitions_of(k + 1, bounds)? {
                pairs.push((mu.clone(), lambda));
            }
        }
    }
    let rows: Vec<(Partition, Partition, usize, u64)> = pairs
        .into_par_iter()
        .map(|(mu, lambda)| {
            let direct = direct_hom_dimension(&mu, &lambda, bounds)?;
            let chars = induction_multiplicity(&mu, 1, &lambda, bounds)?;
            Ok((mu, lambda, direct, chars))
        })
        .collect::<Result<_>>()?;
    for (mu, lambda, direct, chars) in &rows {
        cert.bump("pairs_checked", 1);
        let arrow = usize::from(mu.added_row(lambda).is_some());
        if *direct != arrow || *chars as usize != arrow {
            cert.fail(json!({ "mu": mu, "lambda": lambda, "direct": direct, "induction": chars, "arrow": arrow }));
        }
    }
    for k in 0..=n {
        for mu in partitions_of(k, bounds)? {
            cert.bump("branching_checked", 1);
            let count = branching_count(&mu, bounds)?;
            if count as usize != mu.addable_nodes().len() {
                cert.fail(json!({ "kind": "branching", "mu": mu, "count": count }));
            }
        }
    }
    Ok(cert.finish())
}

/// For every `k ≤ n`: the `E_μ` are central idempotents, pairwise
/// orthogonal, summing to the identity; each `e_{t¹_μ}` is idempotent.
pub fn verify_idempotents(n: usize, bounds: &Bounds) -> Result<Certificate> {
    bounds.check("group degree", n, bounds.group_degree)?;
    let mut cert = CertificateBuilder::new("verify idempotents").param("n", n);
    for k in 1..=n {
        let shapes = partitions_of(k, bounds)?;
        let es: Vec<GroupAlgebraElement> = shapes
            .par_iter()
            .map(|mu| central_idempotent(mu, bounds))
            .collect::<Result<_>>()?;
        let mut sum = GroupAlgebraElement::zero(k);
        for (mu, e) in shapes.iter().zip(&es) {
            cert.bump("idempotents_checked", 1);
            if !is_idempotent(e)? || !is_central(e)? {
                cert.fail(json!({ "kind": "central_idempotent", "mu": mu }));
            }
            let y = young_symmetrizer(&canonical_tableau(mu), bounds)?;
            cert.bump("symmetrizers_checked", 1);
            if !is_idempotent(&y)? {
                cert.fail(json!({ "kind": "symmetrizer", "mu": mu }));
            }
            sum = sum.add(e)?;
        }
        let products: Vec<(usize, usize, bool)> = (0..es.len())
            .flat_map(|i| (0..es.len()).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|(i, j)| Ok((i, j, es[i].multiply(&es[j])?.is_zero())))
            .collect::<Result<_>>()?;
        for (i, j, zero) in products {
            cert.bump("orthogonality_checked", 1);
            if !zero {
                cert.fail(json!({ "kind": "orthogonality", "mu": shapes[i], "nu": shapes[j] }));
            }
        }
        if sum != GroupAlgebraElement::identity(k) {
            cert.fail(json!({ "kind": "completeness", "n": k }));
        }
    }
    Ok(cert.finish())
}

/// Character multiplicities against the Pieri rule, and against the hom
/// spaces of the quiver category, for `μ ⊢ k ≤ max_n`, `1 ≤ m ≤ max_m`.
pub fn verify_pieri(max_n: usize, max_m: usize, bounds: &Bounds) -> Result<Certificate> {
    bounds.check("induction degree", max_n + max_m, bounds.induction_degree)?;
    let mut cert = CertificateBuilder::new("verify pieri")
        .param("max_n", max_n)
        .param("max_m", max_m);
    for k in 0..=max_n {
        for m in 1..=max_m {
            for mu in partitions_of(k, bounds)? {
                for lambda in partitions_of(k + m, bounds)? {
                    cert.bump("triples_checked", 1);
                    let chars = induction_multiplicity(&mu, m, &lambda, bounds)?;
                    let pieri = pieri_coefficient(&mu, m, &lambda);
                    if chars != u64::from(pieri) || pieri != hom_dim_c(&mu, &lambda) {
                        cert.fail(json!({ "mu": mu, "m": m, "lambda": lambda, "induction": chars, "pieri": pieri }));
                    }
                }
            }
        }
    }
    Ok(cert.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        let b = Bounds::default();
        assert!(verify_morita(2, &b).unwrap().passed());
        assert!(verify_idempotents(3, &b).unwrap().passed());
        let c = verify_pieri(3, 2, &b).unwrap();
        assert!(c.passed());
        assert!(c.count("triples_checked") > 0);
        assert!(verify_morita(5, &b).is_err());
    }
}
