use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A permutation of `{1..n}` in one-line notation.
///
/// Images are stored 0-based; the public constructors and serializations are
/// 1-based. Products compose right to left: `(σ·τ)(i) = σ(τ(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(images: &[u32]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x as usize > n || seen[x as usize - 1] {
                return Err(Error::InvalidPermutation(images.to_vec()));
            }
            seen[x as usize - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&x| (x - 1) as u8).collect(),
        })
    }

    /// Product of disjoint or overlapping cycles given 1-based, applied
    /// right to left.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut p = Self::identity(n);
        for cycle in cycles.iter().rev() {
            if cycle.iter().any(|&x| x == 0 || x as usize > n) {
                return Err(Error::InvalidPermutation(cycle.to_vec()));
            }
            let mut c = Self::identity(n);
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                c.images[x as usize - 1] = (y - 1) as u8;
            }
            Self::from_one_line(&c.one_line())?;
            p = c.compose(&p);
        }
        Ok(p)
    }

    pub(crate) fn from_images0(images: Vec<u8>) -> Self {
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `i` (0-based).
    pub(crate) fn apply0(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<u32> {
        self.images.iter().map(|&x| x as u32 + 1).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// Extends to `{1..n}` by fixing the new points.
    pub fn embed(&self, n: usize) -> Permutation {
        assert!(n >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..n as u8);
        Permutation { images }
    }

    /// Cycles (0-based), each starting at its smallest element, fixed points included.
    pub(crate) fn cycles0(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply0(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply0(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        let mut lens: Vec<u32> = self.cycles0().iter().map(|c| c.len() as u32).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_rows_unchecked(lens)
    }

    pub fn sign(&self) -> i64 {
        let even = self
            .cycles0()
            .iter()
            .filter(|c| c.len() % 2 == 0)
            .count()
            % 2
            == 0;
        if even {
            1
        } else {
            -1
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Position of this permutation in the lexicographic listing of `S_n`.
    pub fn lex_rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0;
        let mut fact = (1..n).product::<usize>().max(1);
        let mut used = vec![false; n];
        for (pos, &x) in self.images.iter().enumerate() {
            let smaller = (0..x as usize).filter(|&y| !used[y]).count();
            rank += smaller * fact;
            used[x as usize] = true;
            if pos + 1 < n {
                fact /= n - pos - 1;
            }
        }
        rank
    }
}

/// All of `S_n`, lexicographic in one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut current: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![Permutation::from_images0(current.clone())];
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(Permutation::from_images0(current.clone()));
    }
}

/// All permutations of `S_n` that map every block of `blocks` (0-based) to itself.
pub(crate) fn block_stabilizer(n: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut out = vec![Permutation::identity(n)];
    for block in blocks.iter().filter(|b| b.len() > 1) {
        let local = all_permutations(block.len());
        let mut next = Vec::with_capacity(out.len() * local.len());
        for p in &out {
            for q in &local {
                let mut images = p.images.clone();
                for (k, &src) in block.iter().enumerate() {
                    images[src] = block[q.apply0(k)] as u8;
                }
                next.push(Permutation { images });
            }
        }
        out = next;
    }
    out
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles0().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let items: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", items.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        Permutation::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn composition_is_right_to_left() {
        let a = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[2, 3]]).unwrap();
        // (12)(23) sends 3 -> 2 -> 1
        assert_eq!(a.compose(&b).one_line(), vec![2, 3, 1]);
        assert_eq!(a.compose(&b).to_string(), "(1 2 3)");
    }

    #[test]
    fn cycle_type_and_sign() {
        let p = Permutation::from_one_line(&[2, 1, 4, 5, 3]).unwrap();
        assert_eq!(p.cycle_type(), part![3, 2]);
        assert_eq!(p.sign(), -1);
        assert_eq!(Permutation::identity(0).cycle_type(), Partition::empty());
    }

    #[test]
    fn lex_rank_matches_listing() {
        for (i, p) in all_permutations(4).iter().enumerate() {
            assert_eq!(p.lex_rank(), i);
        }
        assert_eq!(all_permutations(5).len(), 120);
        assert_eq!(all_permutations(0).len(), 1);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_cycles(2, &[&[1, 3]]).is_err());
    }

    #[test]
    fn block_stabilizer_sizes() {
        let g = block_stabilizer(5, &[vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(g.len(), 12);
        assert!(g.iter().all(|p| p.apply0(3) >= 3));
    }
}
