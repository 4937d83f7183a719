//! Young lattice combinatorics, quiver slices and arrow signs.

mod common;

use common::*;
use injcat::config::Bounds;
use injcat::partitions::{partitions_of, partitions_up_to, skew_classify, Partition};
use injcat::quiver::{hom_dim_c, hom_dim_cprime_mod_j, projective_graded_dims, quiver_slice};
use injcat::signs::{arrow_sign, build_sign_table, row_sign, verify_anticommutativity, GrowthState};
use proptest::prelude::*;

const PARTITION_COUNTS: [usize; 16] = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176];

#[test]
fn partitions_match_composition_filter() {
    let b = Bounds::default();
    for n in 0..16u32 {
        let ours: Vec<Vec<u32>> = partitions_of(n as usize, &b).unwrap().iter().map(|p| p.rows().to_vec()).collect();
        let mut brute = brute_partitions(n);
        brute.sort_by(|a, b| b.cmp(a));
        assert_eq!(ours, brute, "n = {n}");
        assert_eq!(ours.len(), PARTITION_COUNTS[n as usize]);
    }
}

#[test]
fn skew_classes_match_cell_oracle() {
    let b = Bounds::default();
    let all = partitions_up_to(6, &b).unwrap();
    for mu in &all {
        for lambda in &all {
            let class = skew_classify(mu, lambda);
            assert_eq!(class.contained(), contains(mu.rows(), lambda.rows()));
            assert_eq!(class.is_horizontal_strip(), is_horizontal_strip(mu.rows(), lambda.rows()), "{mu:?} {lambda:?}");
            assert_eq!(class.is_vertical_strip(), is_vertical_strip(mu.rows(), lambda.rows()));
        }
    }
}

#[test]
fn quiver_invariants_up_to_eight() {
    let b = Bounds::default();
    let slice = quiver_slice(8, &b).unwrap();
    let total: usize = PARTITION_COUNTS[..=8].iter().sum();
    assert_eq!(slice.nodes.len(), total);
    for (from, to) in &slice.arrows {
        assert_eq!(to.size(), from.size() + 1);
        assert!(from.is_contained_in(to));
        assert_eq!(hom_dim_c(from, to), 1);
    }
    // arrows out of each diagram = addable nodes; into each = removable nodes
    for p in slice.nodes.iter().filter(|p| p.size() < 8) {
        let out = slice.arrows.iter().filter(|(a, _)| a == p).count();
        assert_eq!(out, p.addable_nodes().len());
        assert_eq!(out, p.rows().iter().collect::<std::collections::BTreeSet<_>>().len() + 1);
    }
    for p in slice.nodes.iter().filter(|p| !p.is_empty()) {
        let into = slice.arrows.iter().filter(|(_, b)| b == p).count();
        assert_eq!(into, p.removable_nodes().len());
    }
}

#[test]
fn hom_dimensions_are_transpose_symmetric_where_expected() {
    let b = Bounds::default();
    let all = partitions_up_to(7, &b).unwrap();
    for mu in &all {
        for lambda in &all {
            let (mt, lt) = (mu.transpose(), lambda.transpose());
            assert_eq!(hom_dim_cprime_mod_j(mu, lambda), hom_dim_cprime_mod_j(&mt, &lt));
            let strip = is_horizontal_strip(mu.rows(), lambda.rows());
            assert_eq!(hom_dim_c(mu, lambda), u8::from(strip));
        }
    }
}

#[test]
fn projective_levels_are_the_horizontal_strips() {
    let b = Bounds::default();
    for lambda in partitions_up_to(4, &b).unwrap() {
        let levels = projective_graded_dims(&lambda, 4);
        for (d, members) in levels {
            let expected: Vec<Partition> = partitions_of(lambda.size() + d, &b)
                .unwrap()
                .into_iter()
                .filter(|q| is_horizontal_strip(lambda.rows(), q.rows()))
                .collect();
            let mut got = members.clone();
            got.sort();
            let mut want = expected;
            want.sort();
            assert_eq!(got, want, "{lambda:?} degree {d}");
        }
    }
}

#[test]
fn growth_is_path_independent_up_to_eight() {
    // every path from ∅ reaches each diagram with the same row signs
    fn walk(state: &GrowthState, max: usize, seen: &mut std::collections::BTreeMap<Partition, Vec<i8>>) {
        let p = state.diagram().clone();
        let rows: Vec<i8> = (1..=p.len() as u32 + 1).map(|r| state.row(r)).collect();
        let prev = seen.entry(p.clone()).or_insert_with(|| rows.clone());
        assert_eq!(*prev, rows, "{p:?}");
        if p.size() == max {
            return;
        }
        for node in p.addable_nodes() {
            let (next, sign) = state.grow(node.row).unwrap();
            assert_eq!(sign, state.row(node.row));
            walk(&next, max, seen);
        }
    }
    let mut seen = std::collections::BTreeMap::new();
    walk(&GrowthState::empty(), 8, &mut seen);
    for (p, rows) in seen {
        for (r, s) in rows.iter().enumerate() {
            let above: u32 = p.rows().iter().take(r).sum();
            assert_eq!(*s, if above % 2 == 0 { 1 } else { -1 });
            assert_eq!(*s, row_sign(&p, r as u32 + 1));
        }
    }
}

#[test]
fn sign_table_and_diamonds() {
    let b = Bounds::default();
    let table = build_sign_table(10, &b).unwrap();
    for (from, to, s) in table.arrows() {
        assert_eq!(arrow_sign(from, to).unwrap(), s);
    }
    for bottom in partitions_up_to(8, &b).unwrap() {
        for d in bottom.diamonds_above() {
            let (l, r) = table.diamond_products(&d).unwrap();
            assert_eq!(l, -r, "{d:?}");
        }
    }
    let cert = verify_anticommutativity(10, 8, &b).unwrap();
    assert!(cert.passed());
    assert_eq!(cert.count("paths_checked"), 764);
}

fn partition(max: u32) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1u32..=max, 0..6).prop_map(|mut v| {
        v.sort_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn transpose_is_an_involution(p in partition(7)) {
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(p.transpose().size(), p.size());
    }

    #[test]
    fn strips_swap_under_transpose(mu in partition(4), lambda in partition(5)) {
        let c = skew_classify(&mu, &lambda);
        let t = skew_classify(&mu.transpose(), &lambda.transpose());
        prop_assert_eq!(c.is_horizontal_strip(), t.is_vertical_strip());
        prop_assert_eq!(c.is_vertical_strip(), t.is_horizontal_strip());
    }

    #[test]
    fn addable_count_is_distinct_rows_plus_one(p in partition(8)) {
        let distinct = p.rows().iter().collect::<std::collections::BTreeSet<_>>().len();
        prop_assert_eq!(p.addable_nodes().len(), distinct + 1);
    }

    #[test]
    fn diamonds_are_unique_and_closed(p in partition(6)) {
        let ds = p.diamonds_above();
        let k = p.addable_nodes().len();
        prop_assert_eq!(ds.len(), k * (k - 1) / 2);
        for d in &ds {
            prop_assert_eq!(d.mid_left.lattice_join(&d.mid_right), d.top.clone());
            prop_assert_eq!(d.mid_left.lattice_meet(&d.mid_right), p.clone());
            prop_assert_eq!(d.top.size(), p.size() + 2);
        }
    }

    #[test]
    fn canonical_string_round_trips(p in partition(9)) {
        let s = p.to_string();
        prop_assert_eq!(s.parse::<Partition>().unwrap(), p);
    }
}
