//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's combinatorics; diagrams are plain row vectors.
#![allow(dead_code)]

use injcat::partitions::Partition;

pub fn part(rows: &[u32]) -> Partition {
    Partition::new(rows.to_vec()).unwrap()
}

/// All weakly decreasing positive sequences summing to `n`, found by
/// filtering every composition of `n`.
pub fn brute_partitions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let mut parts = Vec::new();
        let mut run = 1;
        for bit in 0..n - 1 {
            if mask & (1 << bit) != 0 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            out.push(parts);
        }
    }
    out
}

pub fn row(rows: &[u32], i: usize) -> u32 {
    rows.get(i).copied().unwrap_or(0)
}

pub fn contains(inner: &[u32], outer: &[u32]) -> bool {
    (0..inner.len().max(outer.len())).all(|i| row(inner, i) <= row(outer, i))
}

/// The skew cells `outer ∖ inner` as `(row, col)`, 0-based.
pub fn skew_cells(inner: &[u32], outer: &[u32]) -> Vec<(u32, u32)> {
    (0..outer.len())
        .flat_map(|i| (row(inner, i)..row(outer, i)).map(move |j| (i as u32, j)))
        .collect()
}

pub fn is_horizontal_strip(inner: &[u32], outer: &[u32]) -> bool {
    if !contains(inner, outer) {
        return false;
    }
    let cells = skew_cells(inner, outer);
    cells.iter().all(|a| cells.iter().all(|b| a == b || a.1 != b.1))
}

pub fn is_vertical_strip(inner: &[u32], outer: &[u32]) -> bool {
    if !contains(inner, outer) {
        return false;
    }
    let cells = skew_cells(inner, outer);
    cells.iter().all(|a| cells.iter().all(|b| a == b || a.0 != b.0))
}

/// Number of semistandard tableaux of shape `shape` and content `content`,
/// as chains of horizontal strips.
pub fn kostka(shape: &[u32], content: &[u32]) -> u64 {
    fn go(current: Vec<u32>, shape: &[u32], content: &[u32]) -> u64 {
        let Some((&k, rest)) = content.split_first() else {
            return u64::from(current.iter().sum::<u32>() == shape.iter().sum::<u32>() && contains(shape, &current));
        };
        let mut total = 0;
        let target: u32 = current.iter().sum::<u32>() + k;
        for next in brute_partitions(target) {
            if contains(&next, shape) && is_horizontal_strip(&current, &next) {
                total += go(next, shape, rest);
            }
        }
        total
    }
    go(Vec::new(), shape, content)
}

/// Number of row tabloids of shape `shape` fixed by a permutation with
/// cycle lengths `cycles`: each cycle must sit inside one row.
pub fn fixed_tabloids(shape: &[u32], cycles: &[u32]) -> i64 {
    fn go(free: &mut Vec<u32>, cycles: &[u32]) -> i64 {
        let Some((&c, rest)) = cycles.split_first() else {
            return i64::from(free.iter().all(|&x| x == 0));
        };
        let mut total = 0;
        for i in 0..free.len() {
            if free[i] >= c {
                free[i] -= c;
                total += go(free, rest);
                free[i] += c;
            }
        }
        total
    }
    go(&mut shape.to_vec(), cycles)
}

/// Dominance order `a ⊵ b` for partitions of the same size.
pub fn dominates(a: &[u32], b: &[u32]) -> bool {
    let (mut sa, mut sb) = (0, 0);
    (0..a.len().max(b.len())).all(|i| {
        sa += row(a, i);
        sb += row(b, i);
        sa >= sb
    })
}

/// The character table of `S_n` from permutation characters and Kostka
/// numbers: `π^λ = Σ_{ν ⊵ λ} K_{νλ} χ^ν`, solved from the top of the
/// dominance order down. Rows and columns follow `brute_partitions(n)`.
pub fn character_table(n: u32) -> (Vec<Vec<u32>>, Vec<Vec<i64>>) {
    let mut shapes = brute_partitions(n);
    shapes.sort_by(|a, b| b.cmp(a));
    let mut table: Vec<Vec<i64>> = Vec::new();
    for (i, lambda) in shapes.iter().enumerate() {
        let mut chi: Vec<i64> = shapes.iter().map(|rho| fixed_tabloids(lambda, rho)).collect();
        for (j, nu) in shapes.iter().enumerate().take(i) {
            if dominates(nu, lambda) {
                let k = kostka(nu, lambda) as i64;
                for (c, t) in chi.iter_mut().zip(&table[j]) {
                    *c -= k * t;
                }
            }
        }
        table.push(chi);
    }
    (shapes, table)
}

/// `z_ρ = Π_i i^{m_i} m_i!`.
pub fn centralizer(cycles: &[u32]) -> i64 {
    let mut z = 1i64;
    let mut i = 0;
    while i < cycles.len() {
        let mut j = i;
        while j < cycles.len() && cycles[j] == cycles[i] {
            j += 1;
        }
        let m = (j - i) as i64;
        z *= (cycles[i] as i64).pow(m as u32) * (1..=m).product::<i64>();
        i = j;
    }
    z
}

pub fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

/// Standard fillings of `shape` by brute force over all permutations.
pub fn count_standard_fillings(shape: &[u32]) -> usize {
    let n: u32 = shape.iter().sum();
    let mut count = 0;
    let mut perm: Vec<u32> = (1..=n).collect();
    loop {
        let mut rows = Vec::new();
        let mut k = 0;
        for &len in shape {
            rows.push(perm[k..k + len as usize].to_vec());
            k += len as usize;
        }
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = (1..rows.len()).all(|i| (0..rows[i].len()).all(|j| rows[i - 1][j] < rows[i][j]));
        if rows_ok && cols_ok {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            return count;
        }
    }
}

pub fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
