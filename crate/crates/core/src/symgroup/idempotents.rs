use num_bigint::BigInt;
use num_rational::BigRational;

use super::algebra::GroupAlgebraElement;
use super::characters::{character_value, factorial, specht_dimension};
use super::perm::{all_permutations, block_stabilizer, Permutation};
use super::tableaux::Tableau;
use crate::config::Bounds;
use crate::error::Result;
use crate::partitions::{partitions_of, Partition};

/// `E_μ = (dim S^μ / n!) Σ_σ χ^μ(σ) σ`, the central idempotent of the
/// `S^μ`-isotypic block of `C[S_n]`.
pub fn central_idempotent(mu: &Partition, bounds: &Bounds) -> Result<GroupAlgebraElement> {
    let n = mu.size();
    bounds.check("group degree", n, bounds.group_degree)?;
    let scale = BigRational::new(specht_dimension(mu), factorial(n));
    // Characters are class functions; evaluate once per cycle type.
    let types = partitions_of(n, bounds)?;
    let values: Vec<(Partition, i64)> = types
        .into_iter()
        .map(|c| {
            let v = character_value(mu, &c)?;
            Ok((c, v))
        })
        .collect::<Result<_>>()?;
    let terms = all_permutations(n).into_iter().filter_map(|p| {
        let ct = p.cycle_type();
        let chi = values.iter().find(|(c, _)| *c == ct).map(|(_, v)| *v).unwrap();
        (chi != 0).then(|| (p, &scale * BigRational::from_integer(BigInt::from(chi))))
    });
    GroupAlgebraElement::from_terms(n, terms)
}

/// Row and column groups of `t` as subgroups of `S_n`.
fn row_and_column_groups(t: &Tableau) -> (Vec<Permutation>, Vec<Permutation>) {
    let n = t.shape().size();
    let to_blocks = |blocks: Vec<Vec<u32>>| -> Vec<Vec<usize>> {
        blocks
            .into_iter()
            .map(|b| b.into_iter().map(|x| x as usize - 1).collect())
            .collect()
    };
    let rows = block_stabilizer(n, &to_blocks(t.rows().to_vec()));
    let cols = block_stabilizer(n, &to_blocks(t.columns()));
    (rows, cols)
}

/// The Young symmetrizer of `t`, scaled by `dim S^λ / n!` so that it is an
/// idempotent: `(dim/n!) (Σ_{r ∈ R_t} r)(Σ_{c ∈ C_t} sgn(c) c)`.
pub fn young_symmetrizer(t: &Tableau, bounds: &Bounds) -> Result<GroupAlgebraElement> {
    let n = t.shape().size();
    bounds.check("group degree", n, bounds.group_degree)?;
    let (rows, cols) = row_and_column_groups(t);
    let scale = BigRational::new(specht_dimension(t.shape()), factorial(n));
    // R_t ∩ C_t is trivial, so the products r·c are pairwise distinct.
    let mut terms = Vec::with_capacity(rows.len() * cols.len());
    for r in &rows {
        for c in &cols {
            let coeff = if c.sign() == 1 { scale.clone() } else { -scale.clone() };
            terms.push((r.compose(c), coeff));
        }
    }
    GroupAlgebraElement::from_terms(n, terms)
}

/// One basis vector of the bimodule of injections `n ↪ n+m` inside
/// `C[S_{n+m}]`.
#[derive(Debug, Clone)]
pub struct InjectionBasisElement {
    /// Images of `1..n`, 1-based.
    pub injection: Vec<u32>,
    /// Coset representative: agrees with `injection` on `1..n` and is
    /// increasing on `n+1..n+m` (the minimal-length representative).
    pub representative: Permutation,
    /// `Σ_{π ∈ S_{n+m∖n}} representative·π`.
    pub element: GroupAlgebraElement,
}

/// A basis of the bimodule spanned by sums over cosets `σ·S_{n+m∖n}`, where
/// `S_{n+m∖n}` permutes `n+1..n+m` and fixes `1..n`. One element per
/// injection, `(n+m)!/m!` in total, ordered lexicographically by injection.
pub fn injection_bimodule(n: usize, m: usize, bounds: &Bounds) -> Result<Vec<InjectionBasisElement>> {
    let total = n + m;
    bounds.check("group degree", total, bounds.group_degree)?;
    let block: Vec<usize> = (n..total).collect();
    let tail = block_stabilizer(total, &[block]);
    let mut out = Vec::new();
    let mut used = vec![false; total];
    let mut images = Vec::with_capacity(n);
    collect_injections(n, total, &mut images, &mut used, &mut |inj: &[u8]| {
        let mut full = inj.to_vec();
        let taken: Vec<bool> = (0..total).map(|x| inj.contains(&(x as u8))).collect();
        full.extend((0..total as u8).filter(|&x| !taken[x as usize]));
        let representative = Permutation::from_images0(full);
        let element = GroupAlgebraElement::sum_of(total, tail.iter().map(|pi| representative.compose(pi)))
            .expect("degrees agree");
        out.push(InjectionBasisElement {
            injection: inj.iter().map(|&x| x as u32 + 1).collect(),
            representative,
            element,
        });
    });
    Ok(out)
}

fn collect_injections(
    n: usize,
    total: usize,
    images: &mut Vec<u8>,
    used: &mut [bool],
    sink: &mut dyn FnMut(&[u8]),
) {
    if images.len() == n {
        sink(images);
        return;
    }
    for x in 0..total {
        if !used[x] {
            used[x] = true;
            images.push(x as u8);
            collect_injections(n, total, images, used, sink);
            images.pop();
            used[x] = false;
        }
    }
}

/// `dim e_{t¹_λ} · M_{n,m} · e_{t¹_μ}` by exact rank of the spanning set
/// `{e_λ b e_μ : b ∈ basis}`, with `e_μ ∈ C[S_n] ⊂ C[S_{n+m}]`.
pub fn idempotent_hom_dimension(mu: &Partition, m: usize, lambda: &Partition, bounds: &Bounds) -> Result<usize> {
    use super::tableaux::canonical_tableau;
    use crate::error::Error;
    use crate::exactlinalg::RationalMatrix;

    let n = mu.size();
    if lambda.size() != n + m {
        return Err(Error::SizeMismatch(format!("|{lambda:?}| != |{mu:?}| + {m}")));
    }
    bounds.check("direct hom degree", n + m, bounds.direct_hom_degree + 1)?;
    let e_lambda = young_symmetrizer(&canonical_tableau(lambda), bounds)?;
    let e_mu = young_symmetrizer(&canonical_tableau(mu), bounds)?.embed(n + m);
    let basis = injection_bimodule(n, m, bounds)?;
    let rows: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|b| {
            let v = e_lambda.multiply(&b.element)?.multiply(&e_mu)?;
            Ok(v.to_dense())
        })
        .collect::<Result<_>>()?;
    let width: usize = (1..=n + m).product();
    Ok(RationalMatrix::from_rational_rows(width, &rows).rank())
}

/// `dim e_{t¹_λ} C[S_{n+1}] e_{t¹_μ}` for `μ ⊢ n`, `λ ⊢ n+1`: the direct
/// group-algebra count of arrows `μ → λ`.
pub fn direct_hom_dimension(mu: &Partition, lambda: &Partition, bounds: &Bounds) -> Result<usize> {
    bounds.check("direct hom degree", mu.size(), bounds.direct_hom_degree)?;
    idempotent_hom_dimension(mu, 1, lambda, bounds)
}

/// True when `e` is idempotent, central in `C[S_n]`, i.e. commutes with
/// every group element.
pub fn is_central(e: &GroupAlgebraElement) -> Result<bool> {
    for p in all_permutations(e.degree()) {
        let g = GroupAlgebraElement::from_permutation(p);
        if g.multiply(e)? != e.multiply(&g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_idempotent(e: &GroupAlgebraElement) -> Result<bool> {
    Ok(e.multiply(e)? == *e)
}
