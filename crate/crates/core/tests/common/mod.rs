#![allow(dead_code)]

use proptest::prelude::*;

use fatforest_core::{FatForestSpec, Gluing};

pub fn n_vertices(sizes: &[usize]) -> usize {
    sizes.iter().sum::<usize>() + 1 - sizes.len()
}

/// Explicit schedule whose targets are drawn from `seeds`, each reduced
/// modulo the number of vertices present when the facet is attached.
pub fn schedule_from_seeds(sizes: &[usize], seeds: &[u64]) -> Gluing {
    let mut present = sizes[0];
    let mut pairs = Vec::new();
    for (idx, &n) in sizes.iter().enumerate().skip(1) {
        let seed = seeds.get(idx - 1).copied().unwrap_or(0);
        pairs.push((idx + 1, (seed % present as u64) as usize));
        present += n - 1;
    }
    Gluing::Explicit(pairs)
}

pub fn sizes_strategy(max_e: usize, max_n: usize, max_vertices: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(2..=max_n, 1..=max_e)
        .prop_filter("too many vertices", move |s| n_vertices(s) <= max_vertices)
}

pub fn spec_strategy(
    max_e: usize,
    max_n: usize,
    max_vertices: usize,
) -> impl Strategy<Value = FatForestSpec> {
    (sizes_strategy(max_e, max_n, max_vertices), 0..3u8, prop::collection::vec(any::<u64>(), 4)).prop_map(
        |(sizes, kind, seeds)| {
            let gluing = match kind {
                0 => Gluing::ChainDistinct,
                1 => Gluing::Star,
                _ => schedule_from_seeds(&sizes, &seeds),
            };
            FatForestSpec::new(sizes, gluing)
        },
    )
}
