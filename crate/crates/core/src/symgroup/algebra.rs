use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;

use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::exactlinalg::format_rational;

/// A finite exact-rational combination of permutations of one degree.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, BigRational>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(degree: usize) -> Self {
        Self::from_permutation(Permutation::identity(degree))
    }

    pub fn from_permutation(p: Permutation) -> Self {
        let mut e = Self::zero(p.degree());
        e.terms.insert(p, BigRational::one());
        e
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Permutation, BigRational)>) -> Result<Self> {
        let mut e = Self::zero(degree);
        for (p, c) in terms {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: p.degree(),
                });
            }
            e.add_term(p, c);
        }
        Ok(e)
    }

    /// Sum of the given permutations with coefficient one each.
    pub fn sum_of(degree: usize, perms: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        Self::from_terms(degree, perms.into_iter().map(|p| (p, BigRational::one())))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Permutation) -> BigRational {
        self.terms.get(p).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &BigRational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, p: Permutation, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let sum = self.coefficient(&p) + c;
        if sum.is_zero() {
            self.terms.remove(&p);
        } else {
            self.terms.insert(p, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero(self.degree);
        }
        GroupAlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c * k)).collect(),
        }
    }

    /// Convolution product: bilinear extension of composition.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut acc: BTreeMap<Permutation, BigRational> = BTreeMap::new();
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                *acc.entry(p.compose(q)).or_insert_with(BigRational::zero) += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(GroupAlgebraElement {
            degree: self.degree,
            terms: acc,
        })
    }

    /// Image under `C[S_k] ⊂ C[S_n]`, the new points fixed.
    pub fn embed(&self, n: usize) -> Self {
        GroupAlgebraElement {
            degree: n,
            terms: self.terms.iter().map(|(p, c)| (p.embed(n), c.clone())).collect(),
        }
    }

    /// Dense coefficient vector indexed by [`Permutation::lex_rank`].
    pub fn to_dense(&self) -> Vec<BigRational> {
        let size: usize = (1..=self.degree).product();
        let mut v = vec![BigRational::zero(); size];
        for (p, c) in &self.terms {
            v[p.lex_rank()] = c.clone();
        }
        v
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}·{}", format_rational(c), p)?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[S_{}] {}", self.degree, self)
    }
}

#[derive(Serialize)]
struct TermJson {
    perm: Vec<u32>,
    coeff: String,
}

impl Serialize for GroupAlgebraElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(p, c)| TermJson {
                perm: p.one_line(),
                coeff: format_rational(c),
            })
            .collect();
        let mut st = s.serialize_struct("GroupAlgebraElement", 2)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}
