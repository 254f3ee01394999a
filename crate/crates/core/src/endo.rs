//! The endomorphism ring `S = End_R(M)^op` and the `An`/`Ke` correspondence.
//!
//! An endomorphism is stored as an `m x m` matrix `F` with row `i` the
//! coefficient vector of `f(e_i)`, so `f(x) = x F`. The product in `S` is
//! `f * g = g ∘ f` (apply `f` first), whose matrix is `F G`.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Bounds, Error, Result};
use crate::group::{cyclic_decomposition, AdditiveGroup, CyclicProduct};
use crate::hom::{hom_count, hom_set};
use crate::lattice::{enumerate_closed, Closure, Submodule, SubmoduleLattice};
use crate::module::FiniteModule;
use crate::ring::FiniteRing;

/// An R-linear self-map of `M` as a matrix acting on row vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Endomorphism {
    pub matrix: Vec<Vec<u32>>,
}

/// Which multiplications an ideal of `S` is closed under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// Computed sidedness of an additive subgroup of `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sidedness {
    pub left: bool,
    pub right: bool,
}

impl Sidedness {
    pub fn two_sided(&self) -> bool {
        self.left && self.right
    }
}

/// A subset of `S` given by a bit set over `S`-element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EndoIdeal {
    bits: FixedBitSet,
}

impl EndoIdeal {
    pub(crate) fn from_bits(bits: FixedBitSet) -> Self {
        EndoIdeal { bits }
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    pub fn contains(&self, f: u32) -> bool {
        self.bits.contains(f as usize)
    }

    pub fn members(&self) -> impl Iterator<Item = u32> + '_ {
        self.bits.ones().map(|i| i as u32)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1 && self.contains(0)
    }

    pub fn is_full(&self) -> bool {
        self.bits.is_full()
    }

    pub fn is_subset(&self, other: &EndoIdeal) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn intersection(&self, other: &EndoIdeal) -> EndoIdeal {
        EndoIdeal::from_bits(&self.bits & &other.bits)
    }
}

struct MatrixGroup<'a> {
    orders: &'a [u32],
}

impl AdditiveGroup for MatrixGroup<'_> {
    type Elem = Vec<u32>;

    fn zero(&self) -> Vec<u32> {
        vec![0; self.orders.len() * self.orders.len()]
    }

    fn add(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let m = self.orders.len();
        a.iter()
            .zip(b)
            .enumerate()
            .map(|(p, (&x, &y))| (x + y) % self.orders[p % m])
            .collect()
    }
}

/// `S = End_R(M)^op`, with a [`FiniteRing`] presentation.
#[derive(Debug)]
pub struct EndoRing {
    module: Arc<FiniteModule>,
    matrices: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, u32>,
    ring: Arc<FiniteRing>,
    identity: u32,
}

impl EndoRing {
    pub fn compute(module: Arc<FiniteModule>, bounds: &Bounds) -> Result<Self> {
        bounds.check_elements("module elements", module.element_count())?;
        let m = module.orders().len();
        let full = Submodule::full(&module);
        let homs = hom_set(&module, &full, &module, bounds)?;
        let basis: Vec<u32> = (0..m).map(|i| module.additive().generator(i)).collect();
        let maps: Vec<Vec<u32>> = (0..homs.len())
            .map(|h| {
                let table = homs.table(&module, &module, h);
                basis.iter().flat_map(|&e| module.additive().decode(table[e as usize])).collect()
            })
            .collect();

        let group = MatrixGroup { orders: module.orders() };
        let summands = cyclic_decomposition(&group, &maps);
        let s_orders: Vec<u32> = if summands.is_empty() {
            // only possible for the zero module, which is rejected upstream
            return Err(Error::InvalidModule("endomorphism ring is zero".into()));
        } else {
            summands.iter().map(|s| s.order as u32).collect()
        };
        let additive = CyclicProduct::new(s_orders);
        let size = additive.size();
        debug_assert_eq!(size, maps.len() as u64);
        let mut matrices = Vec::with_capacity(size as usize);
        let mut index = HashMap::with_capacity(size as usize);
        for s in 0..size as u32 {
            let c = additive.decode(s);
            let mut mat = group.zero();
            for (sum, &ci) in summands.iter().zip(&c) {
                if ci != 0 {
                    mat = group.add(&mat, &group.scale(&sum.generator, ci as u64));
                }
            }
            index.insert(mat.clone(), s);
            matrices.push(mat);
        }

        let k = summands.len();
        let mut mul = Vec::with_capacity(k * k * k);
        for a in 0..k {
            for b in 0..k {
                let p = matmul(module.orders(), &summands[a].generator, &summands[b].generator);
                mul.extend(additive.decode(index[&p]));
            }
        }
        let id: Vec<u32> = (0..m * m).map(|p| u32::from(p / m == p % m)).collect();
        let identity = index[&id];
        let ring = FiniteRing::from_parts(additive, mul, identity);
        ring.validate()?;
        Ok(EndoRing { module, matrices, index, ring: Arc::new(ring), identity })
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    /// `S` as an abstract finite ring; its product is `f * g = g ∘ f`.
    pub fn as_ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn endomorphism(&self, f: u32) -> Endomorphism {
        let m = self.module.orders().len();
        Endomorphism { matrix: self.matrices[f as usize].chunks(m).map(<[u32]>::to_vec).collect() }
    }

    pub fn index_of(&self, e: &Endomorphism) -> Option<u32> {
        let flat: Vec<u32> = e.matrix.iter().flatten().copied().collect();
        self.index.get(&flat).copied()
    }

    /// `f(x)`.
    pub fn eval(&self, f: u32, x: u32) -> u32 {
        let orders = self.module.orders();
        let m = orders.len();
        let c = self.module.additive().decode(x);
        let mat = &self.matrices[f as usize];
        let mut out = vec![0u64; m];
        for (i, &ci) in c.iter().enumerate() {
            if ci == 0 {
                continue;
            }
            for j in 0..m {
                out[j] = (out[j] + ci as u64 * mat[i * m + j] as u64) % orders[j] as u64;
            }
        }
        let out: Vec<u32> = out.into_iter().map(|v| v as u32).collect();
        self.module.additive().encode(&out)
    }

    /// Product in `S`: apply `f`, then `g`.
    pub fn mul(&self, f: u32, g: u32) -> u32 {
        self.ring.mul(f, g)
    }

    /// Additive generators of `S`.
    pub fn generators(&self) -> Vec<u32> {
        (0..self.ring.generator_count()).map(|a| self.ring.generator(a)).collect()
    }

    pub fn image(&self, f: u32) -> Submodule {
        let gens: Vec<u32> =
            (0..self.module.orders().len()).map(|i| self.eval(f, self.module.additive().generator(i))).collect();
        Submodule::span(&self.module, &gens)
    }

    pub fn kernel(&self, f: u32) -> Submodule {
        self.ke([f])
    }

    /// `An(L) = { f : f(L) = 0 }`.
    pub fn an(&self, l: &Submodule) -> EndoIdeal {
        let gens = l.generators(&self.module);
        let mut bits = FixedBitSet::with_capacity(self.len());
        for f in 0..self.len() as u32 {
            if gens.iter().all(|&x| self.eval(f, x) == 0) {
                bits.insert(f as usize);
            }
        }
        EndoIdeal::from_bits(bits)
    }

    /// `Ke(I) = ⋂ Ker f`; `M` for the empty family.
    pub fn ke(&self, family: impl IntoIterator<Item = u32>) -> Submodule {
        let fs: Vec<u32> = family.into_iter().collect();
        let members: Vec<u32> = (0..self.module.element_count() as u32)
            .filter(|&x| fs.iter().all(|&f| self.eval(f, x) == 0))
            .collect();
        let mut bits = FixedBitSet::with_capacity(self.module.element_count() as usize);
        for x in members {
            bits.insert(x as usize);
        }
        Submodule::from_bits(bits)
    }

    /// `Ke` of an additive subgroup of `S`, using its additive generators.
    pub fn ke_ideal(&self, ideal: &EndoIdeal) -> Submodule {
        self.ke(self.additive_generators(ideal))
    }

    pub(crate) fn additive_generators(&self, ideal: &EndoIdeal) -> Vec<u32> {
        let closure = Closure { group: self.ring.additive(), ops: Vec::new() };
        let mut span = closure.zero();
        let mut gens = Vec::new();
        for f in ideal.members() {
            if !span.contains(f as usize) {
                gens.push(f);
                closure.extend(&mut span, [f]);
            }
        }
        gens
    }

    /// `f(L) ⊆ L` for every `f`; by linearity it suffices to check additive
    /// generators of `S` on R-generators of `L`.
    pub fn is_fully_invariant(&self, l: &Submodule) -> bool {
        let gens = l.generators(&self.module);
        self.generators().iter().all(|&f| gens.iter().all(|&x| l.contains(self.eval(f, x))))
    }

    pub fn sidedness(&self, ideal: &EndoIdeal) -> Sidedness {
        let gens = self.generators();
        let members: Vec<u32> = ideal.members().collect();
        Sidedness {
            left: members.iter().all(|&x| gens.iter().all(|&g| ideal.contains(self.mul(g, x)))),
            right: members.iter().all(|&x| gens.iter().all(|&g| ideal.contains(self.mul(x, g)))),
        }
    }

    fn closure(&self, side: Side) -> Closure<'_> {
        let mut ops: Vec<&[u32]> = Vec::new();
        if matches!(side, Side::Left | Side::TwoSided) {
            ops.extend(self.ring.left_tables().iter().map(Vec::as_slice));
        }
        if matches!(side, Side::Right | Side::TwoSided) {
            ops.extend(self.ring.right_tables().iter().map(Vec::as_slice));
        }
        Closure { group: self.ring.additive(), ops }
    }

    /// All ideals of the given side, in canonical order.
    pub fn ideals(&self, side: Side, bounds: &Bounds) -> Result<Vec<EndoIdeal>> {
        let closure = self.closure(side);
        let all = enumerate_closed(&closure, "ideals", bounds.max_submodules, None)?;
        Ok(all.into_iter().map(EndoIdeal::from_bits).collect())
    }

    /// Two-sided ideal generated by a set.
    pub fn ideal_generated(&self, gens: &[u32], side: Side) -> EndoIdeal {
        EndoIdeal::from_bits(self.closure(side).span(gens.iter().copied()))
    }

    /// Prime test for a proper two-sided ideal: `a S b ⊆ P` forces `a ∈ P` or
    /// `b ∈ P`. Only coset representatives need checking, and `a S b` is
    /// additively generated by the `a g b` for additive generators `g`.
    pub fn is_prime(&self, p: &EndoIdeal) -> bool {
        if p.is_full() {
            return false;
        }
        let reps = self.coset_representatives(p);
        let gens = self.generators();
        for &a in &reps {
            if p.contains(a) {
                continue;
            }
            for &b in &reps {
                if p.contains(b) {
                    continue;
                }
                if gens.iter().all(|&g| p.contains(self.mul(self.mul(a, g), b))) {
                    return false;
                }
            }
        }
        true
    }

    fn coset_representatives(&self, p: &EndoIdeal) -> Vec<u32> {
        let n = self.len();
        let additive = self.ring.additive();
        let members: Vec<u32> = p.members().collect();
        let mut covered = FixedBitSet::with_capacity(n);
        let mut reps = Vec::new();
        for x in 0..n as u32 {
            if covered.contains(x as usize) {
                continue;
            }
            reps.push(x);
            for &q in &members {
                covered.insert(additive.add(x, q) as usize);
            }
        }
        reps
    }

    pub fn prime_ideals(&self, bounds: &Bounds) -> Result<Vec<EndoIdeal>> {
        Ok(self.ideals(Side::TwoSided, bounds)?.into_iter().filter(|p| self.is_prime(p)).collect())
    }

    /// Intersection of all prime ideals.
    pub fn prad(&self, bounds: &Bounds) -> Result<EndoIdeal> {
        let primes = self.prime_ideals(bounds)?;
        let mut bits = FixedBitSet::with_capacity(self.len());
        bits.insert_range(..);
        for p in &primes {
            bits &= &p.bits;
        }
        Ok(EndoIdeal::from_bits(bits))
    }

    pub fn every_prime_maximal(&self, bounds: &Bounds) -> Result<bool> {
        let ideals = self.ideals(Side::TwoSided, bounds)?;
        Ok(ideals.iter().filter(|p| self.is_prime(p)).all(|p| {
            !ideals.iter().any(|j| !j.is_full() && j != p && p.is_subset(j))
        }))
    }

    /// Every submodule is fully invariant.
    pub fn is_duo(&self, lattice: &SubmoduleLattice) -> bool {
        lattice.all().iter().all(|l| self.is_fully_invariant(l))
    }

    /// Every homomorphism from a submodule into `M` extends to `M`: the
    /// restriction map `S -> Hom(L, M)` is onto for every `L`.
    pub fn is_self_injective(&self, lattice: &SubmoduleLattice, bounds: &Bounds) -> Result<bool> {
        for l in lattice.all() {
            if l.is_zero() || l.is_full() {
                continue;
            }
            let gens = l.generators(&self.module);
            let restrictions: HashSet<Vec<u32>> = (0..self.len() as u32)
                .map(|f| gens.iter().map(|&x| self.eval(f, x)).collect())
                .collect();
            let total = hom_count(&self.module, l, &self.module, bounds)?;
            if (restrictions.len() as u64) < total {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `L = Ke(An(L))` for every submodule `L`.
    pub fn is_self_cogenerator(&self, lattice: &SubmoduleLattice) -> bool {
        lattice.all().iter().all(|l| self.ke_ideal(&self.an(l)) == *l)
    }

    /// `An(Ke(I)) = I` for every right ideal `I` of `S`.
    pub fn is_intrinsically_injective(&self, bounds: &Bounds) -> Result<bool> {
        let ideals = self.ideals(Side::Right, bounds)?;
        Ok(ideals.iter().all(|i| self.an(&self.ke_ideal(i)) == *i))
    }
}

fn matmul(orders: &[u32], a: &[u32], b: &[u32]) -> Vec<u32> {
    let m = orders.len();
    let mut out = vec![0u32; m * m];
    for i in 0..m {
        for j in 0..m {
            let mut acc = 0u64;
            for l in 0..m {
                acc += a[i * m + l] as u64 * b[l * m + j] as u64;
            }
            out[i * m + j] = (acc % orders[j] as u64) as u32;
        }
    }
    out
}
