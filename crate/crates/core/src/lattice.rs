//! Submodules as bit sets over element indices, and lattice enumeration.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Bounds, Error, Result};
use crate::group::CyclicProduct;
use crate::module::FiniteModule;

/// Closure of subsets of a finite abelian group under addition and a set of
/// additive operators (ring generators acting on a module, or
/// multiplication by ring generators on a ring).
pub(crate) struct Closure<'a> {
    pub group: &'a CyclicProduct,
    pub ops: Vec<&'a [u32]>,
}

impl<'a> Closure<'a> {
    pub fn for_module(module: &'a FiniteModule) -> Self {
        Closure {
            group: module.additive(),
            ops: module.gen_tables().iter().map(Vec::as_slice).collect(),
        }
    }

    pub fn zero(&self) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.group.size() as usize);
        bits.insert(0);
        bits
    }

    /// Enlarges the closed set `bits` to the closed set generated by it
    /// together with `gens`.
    pub fn extend(&self, bits: &mut FixedBitSet, gens: impl IntoIterator<Item = u32>) {
        let mut queue: Vec<u32> = gens.into_iter().collect();
        let mut members: Option<Vec<u32>> = None;
        while let Some(g) = queue.pop() {
            if bits.contains(g as usize) {
                continue;
            }
            let members = members.get_or_insert_with(|| bits.ones().map(|i| i as u32).collect());
            let base = members.len();
            let mut t = g;
            loop {
                for i in 0..base {
                    let y = self.group.add(members[i], t);
                    bits.insert(y as usize);
                    members.push(y);
                }
                t = self.group.add(t, g);
                if bits.contains(t as usize) {
                    break;
                }
            }
            for op in &self.ops {
                queue.push(op[g as usize]);
            }
        }
    }

    pub fn span(&self, gens: impl IntoIterator<Item = u32>) -> FixedBitSet {
        let mut bits = self.zero();
        self.extend(&mut bits, gens);
        bits
    }

    pub fn is_closed(&self, bits: &FixedBitSet) -> bool {
        self.span(bits.ones().map(|i| i as u32)) == *bits
    }

    /// Greedy generating set in index order, with redundant entries pruned.
    pub fn generators(&self, bits: &FixedBitSet) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut span = self.zero();
        for x in bits.ones() {
            if !span.contains(x) {
                gens.push(x as u32);
                self.extend(&mut span, [x as u32]);
            }
        }
        let mut i = 0;
        while i < gens.len() && gens.len() > 1 {
            let rest: Vec<u32> = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &g)| g).collect();
            if self.span(rest.iter().copied()) == *bits {
                gens.remove(i);
            } else {
                i += 1;
            }
        }
        gens
    }
}

/// A submodule of a fixed module, stored as its set of element indices.
/// Equality and hashing use the members only.
#[derive(Clone)]
pub struct Submodule {
    bits: FixedBitSet,
    generators: OnceLock<Vec<u32>>,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for Submodule {}

impl Hash for Submodule {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl std::fmt::Debug for Submodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}

/// Canonical order: by size, then lexicographically by sorted member list.
pub fn canonical_cmp(a: &FixedBitSet, b: &FixedBitSet) -> Ordering {
    a.count_ones(..)
        .cmp(&b.count_ones(..))
        .then_with(|| a.ones().cmp(b.ones()))
}

impl Submodule {
    pub(crate) fn from_bits(bits: FixedBitSet) -> Self {
        Submodule { bits, generators: OnceLock::new() }
    }

    pub fn zero(module: &FiniteModule) -> Self {
        let mut bits = FixedBitSet::with_capacity(module.element_count() as usize);
        bits.insert(0);
        Submodule::from_bits(bits)
    }

    pub fn full(module: &FiniteModule) -> Self {
        let mut bits = FixedBitSet::with_capacity(module.element_count() as usize);
        bits.insert_range(..);
        Submodule::from_bits(bits)
    }

    /// Smallest submodule containing `gens`.
    pub fn span(module: &FiniteModule, gens: &[u32]) -> Self {
        Submodule::from_bits(Closure::for_module(module).span(gens.iter().copied()))
    }

    /// `R x`.
    pub fn cyclic(module: &FiniteModule, x: u32) -> Self {
        Submodule::span(module, &[x])
    }

    /// Validates that `members` is a submodule.
    pub fn from_members(module: &FiniteModule, members: &[u32]) -> Result<Self> {
        let n = module.element_count() as usize;
        let mut bits = FixedBitSet::with_capacity(n);
        for &x in members {
            if x as usize >= n {
                return Err(Error::NotASubmodule(format!("element index {x} out of range")));
            }
            bits.insert(x as usize);
        }
        if !Closure::for_module(module).is_closed(&bits) {
            return Err(Error::NotASubmodule("not closed under addition and the ring action".into()));
        }
        Ok(Submodule::from_bits(bits))
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    pub fn contains(&self, x: u32) -> bool {
        self.bits.contains(x as usize)
    }

    pub fn members(&self) -> impl Iterator<Item = u32> + '_ {
        self.bits.ones().map(|i| i as u32)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_full(&self) -> bool {
        self.bits.is_full()
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn meet(&self, other: &Submodule) -> Submodule {
        Submodule::from_bits(&self.bits & &other.bits)
    }

    pub fn join(&self, other: &Submodule, module: &FiniteModule) -> Submodule {
        if other.is_subset(self) {
            return self.clone();
        }
        if self.is_subset(other) {
            return other.clone();
        }
        let mut bits = self.bits.clone();
        Closure::for_module(module).extend(&mut bits, other.members());
        Submodule::from_bits(bits)
    }

    /// Sum of a family; 0 for the empty family.
    pub fn sum<'a>(module: &FiniteModule, parts: impl IntoIterator<Item = &'a Submodule>) -> Submodule {
        let closure = Closure::for_module(module);
        let mut bits = closure.zero();
        for p in parts {
            if !p.bits.is_subset(&bits) {
                closure.extend(&mut bits, p.members());
            }
        }
        Submodule::from_bits(bits)
    }

    /// Canonical irredundant generators, chosen greedily in index order.
    pub fn generators(&self, module: &FiniteModule) -> &[u32] {
        self.generators.get_or_init(|| Closure::for_module(module).generators(&self.bits))
    }

    /// `0`, `⟨2⟩`, `⟨(0,1), (1,0)⟩`.
    pub fn label(&self, module: &FiniteModule) -> String {
        let gens = self.generators(module);
        if gens.is_empty() {
            return "0".to_string();
        }
        let mut out = String::from("⟨");
        for (i, &g) in gens.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            write!(out, "{}", module.element(g)).unwrap();
        }
        out.push('⟩');
        out
    }
}

/// All submodules of a module in canonical order.
#[derive(Debug, Clone)]
pub struct SubmoduleLattice {
    all: Vec<Submodule>,
    index: HashMap<FixedBitSet, usize>,
}

impl SubmoduleLattice {
    pub(crate) fn from_sorted(all: Vec<Submodule>) -> Self {
        let index = all.iter().enumerate().map(|(i, s)| (s.bits.clone(), i)).collect();
        SubmoduleLattice { all, index }
    }

    pub fn all(&self) -> &[Submodule] {
        &self.all
    }

    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    pub fn get(&self, i: usize) -> &Submodule {
        &self.all[i]
    }

    pub fn index_of(&self, s: &Submodule) -> Option<usize> {
        self.index.get(&s.bits).copied()
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.all.len() - 1
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.all[i].is_subset(&self.all[j])
    }
}

/// Enumerates every submodule: all cyclic submodules, closed under joins.
pub fn enumerate_submodules(module: &FiniteModule, bounds: &Bounds) -> Result<SubmoduleLattice> {
    enumerate_with_order(module, bounds, None)
}

/// As [`enumerate_submodules`], processing seeds in a shuffled order; the
/// output is identical.
pub fn enumerate_submodules_shuffled(module: &FiniteModule, bounds: &Bounds, seed: u64) -> Result<SubmoduleLattice> {
    enumerate_with_order(module, bounds, Some(seed))
}

fn enumerate_with_order(module: &FiniteModule, bounds: &Bounds, shuffle: Option<u64>) -> Result<SubmoduleLattice> {
    bounds.check_elements("module elements", module.element_count())?;
    let closure = Closure::for_module(module);
    let all = enumerate_closed(&closure, "submodules", bounds.max_submodules, shuffle)?;
    Ok(SubmoduleLattice::from_sorted(all.into_iter().map(Submodule::from_bits).collect()))
}

/// Every closed subset (subgroup closed under the operators), in canonical
/// order: seed with the cyclic closures, then close under joins.
pub(crate) fn enumerate_closed(
    closure: &Closure<'_>,
    what: &'static str,
    limit: usize,
    shuffle: Option<u64>,
) -> Result<Vec<FixedBitSet>> {
    let n = closure.group.size() as u32;
    let cyclic: Vec<(u32, FixedBitSet)> = (0..n).into_par_iter().map(|x| (x, closure.span([x]))).collect();
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut seeds: Vec<(u32, FixedBitSet)> = Vec::new();
    for (x, bits) in cyclic {
        if seen.insert(bits.clone()) {
            seeds.push((x, bits));
        }
    }
    if let Some(seed) = shuffle {
        seeds.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let check = |count: usize| -> Result<()> {
        if count > limit {
            return Err(Error::BoundExceeded { what, limit: limit as u64, actual: count as u64 });
        }
        Ok(())
    };
    check(seen.len())?;

    let mut frontier: Vec<FixedBitSet> = seeds.iter().map(|(_, b)| b.clone()).collect();
    while !frontier.is_empty() {
        let produced: Vec<FixedBitSet> = frontier
            .par_iter()
            .flat_map_iter(|a| {
                seeds.iter().filter_map(move |(x, c)| {
                    if a.contains(*x as usize) || a.is_subset(c) {
                        return None;
                    }
                    let mut bits = a.clone();
                    closure.extend(&mut bits, [*x]);
                    Some(bits)
                })
            })
            .collect();
        let mut next = Vec::new();
        for bits in produced {
            if !seen.contains(&bits) {
                seen.insert(bits.clone());
                next.push(bits);
                check(seen.len())?;
            }
        }
        frontier = next;
    }

    let mut all: Vec<FixedBitSet> = seen.into_iter().collect();
    all.sort_by(canonical_cmp);
    Ok(all)
}

/// `(L :_R M) = { r : rM ⊆ L }`, as sorted ring element indices.
pub fn colon_ring(l: &Submodule, module: &FiniteModule) -> Vec<u32> {
    let gens: Vec<u32> = (0..module.orders().len()).map(|i| module.additive().generator(i)).collect();
    (0..module.ring().element_count() as u32)
        .filter(|&r| gens.iter().all(|&e| l.contains(module.act(r, e))))
        .collect()
}

/// `(L :_M I) = { m : Im ⊆ L }`. Fails if the result is not closed under the
/// action, which can only happen when `I` is not a right ideal.
pub fn colon_module(l: &Submodule, ideal: &[u32], module: &FiniteModule) -> Result<Submodule> {
    let members: Vec<u32> = (0..module.element_count() as u32)
        .filter(|&m| ideal.iter().all(|&r| l.contains(module.act(r, m))))
        .collect();
    Submodule::from_members(module, &members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;
    use std::sync::Arc;

    fn regular(n: u32) -> FiniteModule {
        FiniteModule::regular(Arc::new(FiniteRing::zn(n).unwrap()))
    }

    #[test]
    fn lattice_of_z4() {
        let m = regular(4);
        let lat = enumerate_submodules(&m, &Bounds::default()).unwrap();
        let sizes: Vec<usize> = lat.all().iter().map(Submodule::len).collect();
        assert_eq!(sizes, vec![1, 2, 4]);
        assert_eq!(lat.get(1).label(&m), "⟨2⟩");
        assert_eq!(lat.get(0).label(&m), "0");
    }

    #[test]
    fn cyclic_and_colon() {
        let m = regular(4);
        assert_eq!(Submodule::cyclic(&m, 2).members().collect::<Vec<_>>(), vec![0, 2]);
        assert!(Submodule::cyclic(&m, 0).is_zero());
        let two_m = Submodule::cyclic(&m, 2);
        assert_eq!(colon_ring(&two_m, &m), vec![0, 2]);
        assert_eq!(colon_ring(&Submodule::zero(&m), &m), vec![0]);
        let zero = Submodule::zero(&m);
        assert_eq!(colon_module(&zero, &[2], &m).unwrap(), two_m);
        assert!(colon_module(&zero, &[0, 1, 2, 3], &m).unwrap().is_zero());
        assert!(colon_module(&zero, &[0], &m).unwrap().is_full());
    }

    #[test]
    fn from_members_rejects_non_submodules() {
        let m = regular(4);
        assert!(matches!(Submodule::from_members(&m, &[0, 1]), Err(Error::NotASubmodule(_))));
    }

    #[test]
    fn submodule_bound_is_enforced() {
        let m = regular(8);
        let bounds = Bounds { max_submodules: 2, ..Bounds::default() };
        assert!(matches!(enumerate_submodules(&m, &bounds), Err(Error::BoundExceeded { .. })));
        let bounds = Bounds { max_elements: 4, ..Bounds::default() };
        assert!(matches!(enumerate_submodules(&m, &bounds), Err(Error::BoundExceeded { .. })));
    }
}
