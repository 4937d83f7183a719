//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule.
//!
//! A diagram is encoded by its beta-set `{λ_i + k - i}`; removing a rim hook
//! of length `r` moves one bead from `b` to an empty position `b - r`, with
//! sign `(-1)^(beads strictly between)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// `χ^λ` evaluated on the class of cycle type `cycle_type`.
pub fn character_value(lambda: &Partition, cycle_type: &Partition) -> Result<i64> {
    if lambda.size() != cycle_type.size() {
        return Err(Error::SizeMismatch(format!(
            "character of {lambda:?} evaluated on cycle type {cycle_type:?}"
        )));
    }
    let k = lambda.len();
    let beta: Vec<u32> = lambda
        .rows()
        .iter()
        .enumerate()
        .map(|(i, &r)| r + (k - 1 - i) as u32)
        .collect();
    let mut memo = HashMap::new();
    Ok(mn(beta, cycle_type.rows(), &mut memo))
}

fn mn(beta: Vec<u32>, hooks: &[u32], memo: &mut HashMap<(Vec<u32>, usize), i64>) -> i64 {
    let Some((&r, rest)) = hooks.split_first() else {
        return 1;
    };
    let key = (beta, hooks.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let beta = &key.0;
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        total += sign * mn(next, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Centralizer order `z_α = ∏ i^{m_i} m_i!`.
pub fn centralizer_order(cycle_type: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut counts: HashMap<u32, u32> = HashMap::new();
    for &part in cycle_type.rows() {
        *counts.entry(part).or_default() += 1;
    }
    for (part, mult) in counts {
        for k in 1..=mult {
            z *= BigInt::from(part) * BigInt::from(k);
        }
    }
    z
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Size of the conjugacy class with the given cycle type.
pub fn class_size(cycle_type: &Partition) -> BigInt {
    factorial(cycle_type.size()) / centralizer_order(cycle_type)
}

/// `dim S^λ` by the hook length formula.
pub fn specht_dimension(lambda: &Partition) -> BigInt {
    let mut hooks = BigInt::one();
    for node in lambda.nodes() {
        let arm = lambda.row(node.row) - node.col;
        let leg = lambda.column(node.col) - node.row;
        hooks *= BigInt::from(arm + leg + 1);
    }
    factorial(lambda.size()) / hooks
}

/// Disjoint union of cycle types.
pub(crate) fn union_type(a: &Partition, b: &Partition) -> Partition {
    let mut rows: Vec<u32> = a.rows().iter().chain(b.rows()).copied().collect();
    rows.sort_unstable_by(|x, y| y.cmp(x));
    Partition::from_rows_unchecked(rows)
}
