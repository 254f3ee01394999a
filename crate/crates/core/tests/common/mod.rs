#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use fcspec::{catalog, Analysis, Bounds, FiniteModule, Submodule};
use fixedbitset::FixedBitSet;

pub fn module(name: &str) -> FiniteModule {
    catalog::get(name).unwrap()
}

pub fn analyse(name: &str) -> Analysis {
    Analysis::new(Arc::new(module(name)), Bounds::default()).unwrap()
}

/// Element index of a coefficient vector.
pub fn elem(a: &Analysis, coeffs: &[u32]) -> u32 {
    a.module().additive().encode(coeffs)
}

pub fn span(a: &Analysis, gens: &[&[u32]]) -> Submodule {
    let gens: Vec<u32> = gens.iter().map(|c| elem(a, c)).collect();
    Submodule::span(a.module(), &gens)
}

/// Lattice position of the span of `gens`.
pub fn pos(a: &Analysis, gens: &[&[u32]]) -> usize {
    a.position(&span(a, gens))
}

pub fn members(s: &Submodule) -> BTreeSet<u32> {
    s.members().collect()
}

pub fn point_labels(a: &Analysis) -> Vec<String> {
    a.points().iter().map(|&p| a.label(p)).collect()
}

pub fn bitset(n: usize, ones: &[usize]) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    for &i in ones {
        b.insert(i);
    }
    b
}
