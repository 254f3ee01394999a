//! Module homomorphisms from a submodule into a module.
//!
//! A homomorphism is determined by the images of R-generators of its domain.
//! The search assigns images one generator at a time; each assignment is
//! propagated over the generated submodule (extending additively coset by
//! coset and following the ring action), and rejected as soon as two
//! derivations of the same element disagree.

use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Bounds, Error, Result};
use crate::lattice::Submodule;
use crate::module::FiniteModule;

const UNSET: u32 = u32::MAX;

/// All homomorphisms `L -> N`, each given by the images of the canonical
/// generators of `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSet {
    pub domain_generators: Vec<u32>,
    pub images: Vec<Vec<u32>>,
}

impl HomSet {
    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// The `i`-th map as a table over source element indices (`u32::MAX`
    /// outside the domain).
    pub fn table(&self, source: &FiniteModule, target: &FiniteModule, i: usize) -> Vec<u32> {
        let mut partial = PartialMap::new(source, target);
        let mut budget = u64::MAX;
        for (&g, &y) in self.domain_generators.iter().zip(&self.images[i]) {
            let ok = partial.adjoin(g, y, &mut budget);
            debug_assert!(ok);
        }
        partial.phi
    }
}

#[derive(Clone)]
struct PartialMap<'a> {
    source: &'a FiniteModule,
    target: &'a FiniteModule,
    bits: FixedBitSet,
    members: Vec<u32>,
    phi: Vec<u32>,
}

impl<'a> PartialMap<'a> {
    fn new(source: &'a FiniteModule, target: &'a FiniteModule) -> Self {
        let n = source.element_count() as usize;
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert(0);
        let mut phi = vec![UNSET; n];
        phi[0] = 0;
        PartialMap { source, target, bits, members: vec![0], phi }
    }

    /// Extends the map by `g -> y`; false on inconsistency.
    fn adjoin(&mut self, g: u32, y: u32, budget: &mut u64) -> bool {
        let src = self.source.additive();
        let dst = self.target.additive();
        let k = self.source.ring().generator_count();
        let mut queue = vec![(g, y)];
        while let Some((g, y)) = queue.pop() {
            if self.bits.contains(g as usize) {
                if self.phi[g as usize] != y {
                    return false;
                }
                continue;
            }
            let base = self.members.len();
            *budget = budget.saturating_sub(base as u64);
            let (mut t, mut ty) = (g, y);
            loop {
                for i in 0..base {
                    let u = self.members[i];
                    let v = src.add(u, t);
                    self.bits.insert(v as usize);
                    self.members.push(v);
                    self.phi[v as usize] = dst.add(self.phi[u as usize], ty);
                }
                t = src.add(t, g);
                ty = dst.add(ty, y);
                if self.bits.contains(t as usize) {
                    if self.phi[t as usize] != ty {
                        return false;
                    }
                    break;
                }
            }
            for a in 0..k {
                queue.push((self.source.act_gen(a, g), self.target.act_gen(a, y)));
            }
        }
        true
    }
}

/// Enumerates `Hom_R(L, N)` for a submodule `L` of `source`.
pub fn hom_set(source: &FiniteModule, domain: &Submodule, target: &FiniteModule, bounds: &Bounds) -> Result<HomSet> {
    let mut out = Vec::new();
    let gens = domain.generators(source).to_vec();
    search(source, &gens, target, bounds, &mut |images| {
        out.push(images.to_vec());
        if out.len() as u64 > bounds.max_endomorphisms {
            return Err(Error::BoundExceeded {
                what: "homomorphisms",
                limit: bounds.max_endomorphisms,
                actual: out.len() as u64,
            });
        }
        Ok(())
    })?;
    Ok(HomSet { domain_generators: gens, images: out })
}

/// Number of homomorphisms `L -> N` without materialising them.
pub fn hom_count(source: &FiniteModule, domain: &Submodule, target: &FiniteModule, bounds: &Bounds) -> Result<u64> {
    let mut count = 0u64;
    let gens = domain.generators(source).to_vec();
    search(source, &gens, target, bounds, &mut |_| {
        count += 1;
        Ok(())
    })?;
    Ok(count)
}

fn search(
    source: &FiniteModule,
    gens: &[u32],
    target: &FiniteModule,
    bounds: &Bounds,
    emit: &mut dyn FnMut(&[u32]) -> Result<()>,
) -> Result<()> {
    if !Arc::ptr_eq(source.ring(), target.ring()) && source.ring() != target.ring() {
        return Err(Error::RingMismatch);
    }
    source.gen_tables();
    target.gen_tables();
    let k = source.ring().generator_count();
    let n = target.element_count() as u32;
    // cheap necessary conditions: order and generator annihilators
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&x| {
            let ord = source.additive().order_of(x);
            let killers: Vec<usize> = (0..k).filter(|&a| source.act_gen(a, x) == 0).collect();
            (0..n)
                .filter(|&y| {
                    ord % target.additive().order_of(y) == 0 && killers.iter().all(|&a| target.act_gen(a, y) == 0)
                })
                .collect()
        })
        .collect();
    let mut budget = bounds.max_hom_nodes;
    let mut images = Vec::with_capacity(gens.len());
    let root = PartialMap::new(source, target);
    recurse(&root, gens, &candidates, &mut images, &mut budget, bounds, emit)
}

fn recurse(
    state: &PartialMap<'_>,
    gens: &[u32],
    candidates: &[Vec<u32>],
    images: &mut Vec<u32>,
    budget: &mut u64,
    bounds: &Bounds,
    emit: &mut dyn FnMut(&[u32]) -> Result<()>,
) -> Result<()> {
    let level = images.len();
    if level == gens.len() {
        return emit(images);
    }
    for &y in &candidates[level] {
        if *budget == 0 {
            return Err(Error::BoundExceeded {
                what: "hom search nodes",
                limit: bounds.max_hom_nodes,
                actual: bounds.max_hom_nodes + 1,
            });
        }
        *budget -= 1;
        let mut next = state.clone();
        if next.adjoin(gens[level], y, budget) {
            images.push(y);
            recurse(&next, gens, candidates, images, budget, bounds, emit)?;
            images.pop();
        }
    }
    Ok(())
}

/// Finds an isomorphism `M -> N` if one exists, as an element table.
pub fn find_isomorphism(source: &FiniteModule, target: &FiniteModule, bounds: &Bounds) -> Result<Option<Vec<u32>>> {
    if source.element_count() != target.element_count() {
        return Ok(None);
    }
    let full = Submodule::full(source);
    let homs = hom_set(source, &full, target, bounds)?;
    for i in 0..homs.len() {
        let table = homs.table(source, target, i);
        let mut hit = FixedBitSet::with_capacity(target.element_count() as usize);
        for &y in &table {
            hit.insert(y as usize);
        }
        if hit.is_full() {
            return Ok(Some(table));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;

    #[test]
    fn homs_of_z4() {
        let m = FiniteModule::regular(Arc::new(FiniteRing::zn(4).unwrap()));
        let b = Bounds::default();
        let all = hom_set(&m, &Submodule::full(&m), &m, &b).unwrap();
        assert_eq!(all.images, vec![vec![0], vec![1], vec![2], vec![3]]);
        let two = Submodule::cyclic(&m, 2);
        let h = hom_set(&m, &two, &m, &b).unwrap();
        assert_eq!(h.images, vec![vec![0], vec![2]]);
        let zero = hom_set(&m, &Submodule::zero(&m), &m, &b).unwrap();
        assert_eq!(zero.len(), 1);
        assert_eq!(hom_count(&m, &two, &m, &b).unwrap(), 2);
    }

    #[test]
    fn isomorphism_between_presentations_of_z6() {
        let r = Arc::new(FiniteRing::zn(6).unwrap());
        let m = FiniteModule::regular(r.clone());
        let n = FiniteModule::new(r, vec![3, 2], vec![vec![vec![1, 0], vec![0, 1]]]).unwrap();
        let iso = find_isomorphism(&m, &n, &Bounds::default()).unwrap().unwrap();
        for x in 0..6 {
            for s in 0..6 {
                assert_eq!(iso[m.act(s, x) as usize], n.act(s, iso[x as usize]));
            }
        }
    }

    #[test]
    fn node_budget_is_enforced() {
        let r = Arc::new(FiniteRing::zn(2).unwrap());
        let id = |m: usize| (0..m).map(|i| (0..m).map(|j| u32::from(i == j)).collect()).collect();
        let v = FiniteModule::new(r, vec![2; 4], vec![id(4)]).unwrap();
        let b = Bounds { max_hom_nodes: 10, ..Bounds::default() };
        let err = hom_set(&v, &Submodule::full(&v), &v, &b).unwrap_err();
        assert!(matches!(err, Error::BoundExceeded { .. }));
    }
}
