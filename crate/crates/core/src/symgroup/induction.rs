use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::characters::{centralizer_order, character_value, union_type};
use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, skew_classify, Partition};

/// Multiplicity of `S^λ` in `Ind_{S_n × S_m}^{S_{n+m}} (S^μ ⊠ trivial)`.
///
/// By Frobenius reciprocity this is the pairing
/// `Σ_{α ⊢ n, β ⊢ m} χ^λ(α ∪ β) χ^μ(α) / (z_α z_β)`, summed over cycle
/// types with class-size weights.
pub fn induction_multiplicity(mu: &Partition, m: usize, lambda: &Partition, bounds: &Bounds) -> Result<u64> {
    let n = mu.size();
    if lambda.size() != n + m {
        return Err(Error::SizeMismatch(format!("|{lambda:?}| != |{mu:?}| + {m}")));
    }
    bounds.check("induction degree", n + m, bounds.induction_degree)?;
    let mut total = BigRational::zero();
    for alpha in partitions_of(n, bounds)? {
        let chi_mu = character_value(mu, &alpha)?;
        if chi_mu == 0 {
            continue;
        }
        let z_alpha = centralizer_order(&alpha);
        for beta in partitions_of(m, bounds)? {
            let chi_lambda = character_value(lambda, &union_type(&alpha, &beta))?;
            if chi_lambda == 0 {
                continue;
            }
            let denom = &z_alpha * centralizer_order(&beta);
            total += BigRational::new(BigInt::from(chi_lambda * chi_mu), denom);
        }
    }
    assert!(total.is_integer(), "character pairing must be an integer, got {total}");
    Ok(total.to_integer().to_u64().expect("multiplicities are non-negative"))
}

/// The Pieri rule for a single-row second factor: 1 iff `λ ⊇ μ`,
/// `|λ∖μ| = m` and `λ∖μ` is a horizontal strip.
pub fn pieri_coefficient(mu: &Partition, m: usize, lambda: &Partition) -> u8 {
    let class = skew_classify(mu, lambda);
    u8::from(class.size() == Some(m as u32) && class.is_horizontal_strip())
}

/// Number of `λ ⊢ n+1` whose Specht module occurs in `Ind S^μ`, counted
/// through characters.
pub fn branching_count(mu: &Partition, bounds: &Bounds) -> Result<u64> {
    partitions_of(mu.size() + 1, bounds)?
        .iter()
        .map(|lambda| induction_multiplicity(mu, 1, lambda, bounds))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn multiplicity_examples() {
        let b = Bounds::default();
        assert_eq!(induction_multiplicity(&part![3, 1], 0, &part![3, 1], &b).unwrap(), 1);
        assert_eq!(induction_multiplicity(&part![1], 1, &part![2], &b).unwrap(), 1);
        assert_eq!(induction_multiplicity(&part![1], 1, &part![1, 1], &b).unwrap(), 1);
        assert_eq!(induction_multiplicity(&part![2], 2, &part![2, 1, 1], &b).unwrap(), 0);
        assert_eq!(induction_multiplicity(&part![2], 2, &part![2, 2], &b).unwrap(), 1);
        assert_eq!(induction_multiplicity(&part![2], 2, &part![3, 1], &b).unwrap(), 1);
        assert_eq!(induction_multiplicity(&part![2], 2, &part![4], &b).unwrap(), 1);
        assert!(induction_multiplicity(&part![2], 2, &part![4, 1], &b).is_err());
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_coefficient(&part![1], 2, &part![1, 1, 1]), 0);
        assert_eq!(pieri_coefficient(&part![1], 2, &part![2, 1]), 1);
        assert_eq!(pieri_coefficient(&part![2], 2, &part![2, 2]), 1);
        assert_eq!(pieri_coefficient(&part![2], 2, &part![1, 1]), 0);
    }

    #[test]
    fn induction_bound() {
        let b = Bounds::default();
        assert!(induction_multiplicity(&part![7], 6, &part![13], &b).is_err());
    }

    #[test]
    fn branching_counts_addable_nodes() {
        let b = Bounds::default();
        assert_eq!(branching_count(&part![2, 1], &b).unwrap(), 3);
        assert_eq!(branching_count(&part![2, 2], &b).unwrap(), 2);
    }
}
