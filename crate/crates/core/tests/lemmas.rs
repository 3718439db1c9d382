//! Integration tests for the longest-element identities behind the
//! co-minuscule characterization, each verified exhaustively.

use std::sync::Arc;

use cominuscule_core::rootsys::{RootSystem, TypeLabel, Weight};
use cominuscule_core::weyl::{enumerate_wj, longest_element, min_coset_rep, ParabolicSubset};

const BUDGET: u128 = 1_000_000;

fn sys(label: TypeLabel, rank: usize) -> Arc<RootSystem> {
    Arc::new(RootSystem::build(label, rank).unwrap())
}

fn all_cases() -> Vec<(TypeLabel, usize)> {
    let mut cases: Vec<(TypeLabel, usize)> = Vec::new();
    cases.extend((2..=5).map(|n| (TypeLabel::B, n)));
    cases.extend((3..=5).map(|n| (TypeLabel::C, n)));
    cases.push((TypeLabel::F, 4));
    cases.push((TypeLabel::G, 2));
    cases.extend((2..=4).map(|n| (TypeLabel::A, n)));
    cases.push((TypeLabel::D, 4));
    cases.push((TypeLabel::E, 6));
    cases
}

/// `α_r` is co-minuscule iff `w_{0,S∖{α_r}}(α_r) = α_0`, both directions,
/// over every simple root.
#[test]
fn cominuscule_iff_longest_element_sends_root_to_highest() {
    for (label, rank) in all_cases() {
        let rs = sys(label, rank);
        let a0 = rs.highest_root().omega.clone();
        let co: Vec<usize> = rs.co_minuscule_roots();
        for r in 0..rank {
            let j = ParabolicSubset::new((0..rank).filter(|&k| k != r).collect());
            let w0j = longest_element(&rs, &j);
            let image = w0j.act(&rs.simple_root_weight(r));
            let hits_highest = image == a0;
            assert_eq!(
                hits_highest,
                co.contains(&r),
                "{label}{rank} r={} image {:?}",
                r + 1,
                image
            );
        }
    }
}

/// For the special non-co-minuscule root (`α_2` in B, `α_1` in C and F_4,
/// `α_2` in G_2): `w_{0,S∖{α_r}}(α_r) = α_0 − α_r`.
#[test]
fn special_root_loses_exactly_itself() {
    let cases = [
        (TypeLabel::B, 2, 1usize),
        (TypeLabel::B, 3, 1),
        (TypeLabel::B, 4, 1),
        (TypeLabel::B, 5, 1),
        (TypeLabel::C, 3, 0),
        (TypeLabel::C, 4, 0),
        (TypeLabel::C, 5, 0),
        (TypeLabel::F, 4, 0),
        (TypeLabel::G, 2, 1),
    ];
    for (label, rank, r) in cases {
        let rs = sys(label, rank);
        let j = ParabolicSubset::new((0..rank).filter(|&k| k != r).collect());
        let w0j = longest_element(&rs, &j);
        let image = w0j.act(&rs.simple_root_weight(r));
        let expect = &rs.highest_root().omega - &rs.simple_root_weight(r);
        assert_eq!(image, expect, "{label}{rank} r={}", r + 1);
    }
}

/// For co-minuscule `α_r`, the unique `v ∈ W^{S∖{α_r}}` with `v(α_0) < 0` is
/// the top representative `w_0^{S∖{α_r}}`; brute force over the coset list.
#[test]
fn unique_coset_representative_negates_highest_root() {
    for (label, rank) in all_cases() {
        if matches!(label, TypeLabel::E) {
            continue; // |W^J| fine, but the full-group walk dominates runtime
        }
        let rs = sys(label, rank);
        let a0 = rs.highest_root().omega.clone();
        for r in rs.co_minuscule_roots() {
            let j = ParabolicSubset::new((0..rank).filter(|&k| k != r).collect());
            let reps = enumerate_wj(&rs, &j, BUDGET).unwrap();
            let top = min_coset_rep(&longest_element(&rs, &ParabolicSubset::full(rank)), &j);
            let mut negatives = Vec::new();
            for v in &reps {
                let image = v.act(&a0);
                let alpha = alpha_coords_of(&rs, &image).expect("image of a root is a root");
                let idx = rs.root_index(&alpha).unwrap();
                if !rs.is_positive_root(idx) {
                    negatives.push(v.clone());
                }
            }
            assert_eq!(negatives.len(), 1, "{label}{rank} r={}", r + 1);
            assert_eq!(negatives[0], top, "{label}{rank} r={}", r + 1);
        }
    }
}

/// Invert the Cartan transform: recover simple-root coordinates of a weight
/// known to be a root (exact integer back-substitution via search).
fn alpha_coords_of(rs: &RootSystem, w: &Weight) -> Option<Vec<i64>> {
    (0..rs.num_roots())
        .find(|&k| &rs.root(k).omega == w)
        .map(|k| rs.root(k).alpha.clone())
}
