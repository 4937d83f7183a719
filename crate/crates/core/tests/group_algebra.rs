//! The idempotent system of `C[S_n]` and the bimodule of injections.

use injcat::config::Bounds;
use injcat::exactlinalg::rational;
use injcat::partitions::partitions_of;
use injcat::symgroup::{
    all_permutations, canonical_tableau, central_idempotent, idempotent_hom_dimension, injection_bimodule,
    is_central, is_idempotent, standard_tableaux, young_symmetrizer, GroupAlgebraElement, Permutation,
};
use proptest::prelude::*;

#[test]
fn central_idempotents_form_a_complete_orthogonal_system() {
    let b = Bounds::default();
    for n in 1..=4 {
        let es: Vec<_> = partitions_of(n, &b)
            .unwrap()
            .iter()
            .map(|mu| central_idempotent(mu, &b).unwrap())
            .collect();
        let mut sum = GroupAlgebraElement::zero(n);
        for (i, e) in es.iter().enumerate() {
            assert!(is_idempotent(e).unwrap());
            assert!(is_central(e).unwrap());
            for (j, f) in es.iter().enumerate() {
                if i != j {
                    assert!(e.multiply(f).unwrap().is_zero());
                }
            }
            sum = sum.add(e).unwrap();
        }
        assert_eq!(sum, GroupAlgebraElement::identity(n));
    }
}

#[test]
fn symmetrizers_are_idempotents_in_their_block() {
    let b = Bounds::default();
    for n in 1..=4 {
        for mu in partitions_of(n, &b).unwrap() {
            let e_mu = central_idempotent(&mu, &b).unwrap();
            for t in standard_tableaux(&mu, &b).unwrap() {
                let y = young_symmetrizer(&t, &b).unwrap();
                assert!(is_idempotent(&y).unwrap(), "{t:?}");
                assert_eq!(e_mu.multiply(&y).unwrap(), y);
            }
        }
    }
}

#[test]
fn bimodule_has_one_element_per_injection() {
    let b = Bounds::default();
    for n in 0..=3 {
        for m in 0..=3 - n.min(3) {
            let basis = injection_bimodule(n, m, &b).unwrap();
            let expected: usize = ((m + 1)..=(n + m)).product();
            assert_eq!(basis.len(), expected, "n={n} m={m}");
            for e in &basis {
                assert_eq!(e.element.len(), (1..=m).product::<usize>());
            }
        }
    }
}

#[test]
fn two_step_hom_dimensions_follow_the_strip_rule() {
    let b = Bounds::default();
    for mu in partitions_of(2, &b).unwrap() {
        for lambda in partitions_of(4, &b).unwrap() {
            let d = idempotent_hom_dimension(&mu, 2, &lambda, &b).unwrap();
            let strip = injcat::partitions::skew_classify(&mu, &lambda).is_horizontal_strip();
            assert_eq!(d, usize::from(strip), "{mu:?} → {lambda:?}");
        }
    }
}

#[test]
fn spec_product_examples() {
    let t = Permutation::from_cycles(2, &[&[1, 2]]).unwrap();
    let g = GroupAlgebraElement::from_permutation(t.clone());
    assert_eq!(g.multiply(&g).unwrap(), GroupAlgebraElement::identity(2));
    let b = Bounds::default();
    let y = young_symmetrizer(&canonical_tableau(&"1,1".parse().unwrap()), &b).unwrap();
    assert_eq!(y.coefficient(&t), rational(-1, 2));
}

fn element(n: usize) -> impl Strategy<Value = GroupAlgebraElement> {
    let perms = all_permutations(n);
    proptest::collection::vec((0..perms.len(), -3i64..=3), 0..6).prop_map(move |terms| {
        GroupAlgebraElement::from_terms(n, terms.into_iter().map(|(i, c)| (perms[i].clone(), rational(c, 1)))).unwrap()
    })
}

proptest! {
    #[test]
    fn multiplication_is_associative(a in element(3), b in element(3), c in element(3)) {
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_is_neutral(a in element(4)) {
        let id = GroupAlgebraElement::identity(4);
        prop_assert_eq!(id.multiply(&a).unwrap(), a.clone());
        prop_assert_eq!(a.multiply(&id).unwrap(), a);
    }

    #[test]
    fn permutation_inverse(idx in 0usize..120) {
        let p = all_permutations(5)[idx].clone();
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert_eq!(p.sign() * p.inverse().sign(), 1);
    }
}
