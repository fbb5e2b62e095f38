//! Independent recount of nice sets: pairs as `(i, j)` tuples in hash sets,
//! the group law from bit triples, and orbits by direct closure under a
//! separately searched collineation group instead of canonical forms.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use gga_core::contraction::{canonical_form, catalog_sets, enumerate_nice, orbit_classify};
use gga_core::fano::collineations;

type Pair = (u8, u8);

const LABELS: [[u8; 3]; 8] = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1], [1, 1, 1], [1, 0, 1]];

fn add(i: u8, j: u8) -> u8 {
    let s = [0, 1, 2].map(|k| LABELS[i as usize][k] ^ LABELS[j as usize][k]);
    LABELS.iter().position(|l| *l == s).unwrap() as u8
}

fn pair(i: u8, j: u8) -> Pair {
    (i.min(j), i.max(j))
}

fn all_pairs() -> Vec<Pair> {
    (1..=7).flat_map(|i| (i + 1..=7).map(move |j| (i, j))).collect()
}

fn decode(bits: u32, pairs: &[Pair]) -> HashSet<Pair> {
    pairs.iter().enumerate().filter(|(n, _)| bits & (1 << n) != 0).map(|(_, p)| *p).collect()
}

fn nice(t: &HashSet<Pair>) -> bool {
    for i in 1..=7u8 {
        for j in 1..=7u8 {
            for k in 1..=7u8 {
                let ij = add(i, j);
                if i == j || k == i || k == j || k == ij {
                    continue;
                }
                if t.contains(&pair(i, j)) && t.contains(&pair(ij, k)) {
                    let need =
                        [pair(i, j), pair(j, k), pair(k, i), pair(i, add(j, k)), pair(j, add(k, i)), pair(k, ij)];
                    if !need.iter().all(|p| t.contains(p)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every permutation of `1..=7` that respects the group law, by brute force.
fn group() -> Vec<[u8; 8]> {
    let mut out = Vec::new();
    let mut perm: Vec<u8> = (1..=7).collect();
    permute(&mut perm, 0, &mut out);
    out
}

fn permute(items: &mut Vec<u8>, k: usize, out: &mut Vec<[u8; 8]>) {
    if k == items.len() {
        let mut p = [0u8; 8];
        p[1..].copy_from_slice(items);
        if line_preserving(&p) {
            out.push(p);
        }
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

fn line_preserving(p: &[u8; 8]) -> bool {
    (1..=7u8).all(|i| (1..=7u8).all(|j| i == j || p[add(i, j) as usize] == add(p[i as usize], p[j as usize])))
}

#[test]
fn recount_nice_sets() {
    let pairs = all_pairs();
    let ours: Vec<u32> = (0u32..1 << 21).into_par_iter().filter(|&b| nice(&decode(b, &pairs))).collect();
    let library: Vec<u32> = enumerate_nice().into_iter().map(|t| t.bits()).collect();
    assert_eq!(ours, library);
    assert_eq!(ours.len(), 779);
}

#[test]
fn orbits_by_group_closure() {
    let pairs = all_pairs();
    let group = group();
    let nice_sets: Vec<BTreeSet<Pair>> =
        enumerate_nice().into_iter().map(|t| decode(t.bits(), &pairs).into_iter().collect()).collect();
    let mut seen: HashSet<BTreeSet<Pair>> = HashSet::new();
    let mut orbit_sizes = Vec::new();
    for t in &nice_sets {
        if seen.contains(t) {
            continue;
        }
        let mut orbit = HashSet::from([t.clone()]);
        let mut frontier = vec![t.clone()];
        while let Some(s) = frontier.pop() {
            for g in &group {
                let img: BTreeSet<Pair> = s.iter().map(|&(a, b)| pair(g[a as usize], g[b as usize])).collect();
                if orbit.insert(img.clone()) {
                    frontier.push(img);
                }
            }
        }
        orbit_sizes.push(orbit.len());
        seen.extend(orbit);
    }
    assert_eq!(orbit_sizes.len(), 24);
    assert_eq!(orbit_sizes.iter().sum::<usize>(), 779);
    assert!(orbit_sizes.iter().all(|s| 168 % s == 0));

    let lib = orbit_classify(&enumerate_nice());
    let mut lib_sizes: Vec<usize> = lib.iter().map(|o| o.members.len()).collect();
    lib_sizes.sort_unstable();
    orbit_sizes.sort_unstable();
    assert_eq!(lib_sizes, orbit_sizes);
}

#[test]
fn group_matches_library() {
    let ours: BTreeSet<[u8; 8]> = group().into_iter().collect();
    let library: BTreeSet<[u8; 8]> =
        collineations().iter().map(|c| std::array::from_fn(|i| c.apply(i) as u8)).collect();
    assert_eq!(ours.len(), 168);
    assert_eq!(ours, library);
}

#[test]
fn catalog_sets_are_singleton_per_orbit() {
    let keys: BTreeSet<_> = catalog_sets().iter().map(|&t| canonical_form(t)).collect();
    assert_eq!(keys.len(), 24);
}
