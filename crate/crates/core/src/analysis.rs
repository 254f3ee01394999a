//! Shared precomputation for one module: lattice, `S`, annihilators, the
//! ⊙ table on fully invariant submodules, and the spectrum.

use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::endo::{EndoIdeal, EndoRing};
use crate::error::{Bounds, Error, Result};
use crate::lattice::{enumerate_submodules, Submodule, SubmoduleLattice};
use crate::module::FiniteModule;

/// Everything derived from a module that the spectrum, topology and
/// verifier layers share. Lattice positions (`usize`) index
/// [`SubmoduleLattice::all`].
pub struct Analysis {
    pub(crate) module: Arc<FiniteModule>,
    pub(crate) bounds: Bounds,
    pub(crate) lattice: SubmoduleLattice,
    pub(crate) endo: EndoRing,
    pub(crate) fully_invariant: Vec<bool>,
    pub(crate) fi: Vec<usize>,
    an: Vec<OnceLock<EndoIdeal>>,
    /// `odot_fi[i][j]` = lattice position of `fi[i] ⊙ fi[j]`.
    pub(crate) odot_fi: Vec<Vec<usize>>,
    pub(crate) points: Vec<usize>,
    cache: Cache,
}

#[derive(Default)]
struct Cache {
    self_injective: OnceLock<Result<bool>>,
    self_cogenerator: OnceLock<bool>,
    intrinsically_injective: OnceLock<Result<bool>>,
    primes: OnceLock<Result<Vec<EndoIdeal>>>,
    every_prime_maximal: OnceLock<Result<bool>>,
}

impl Analysis {
    pub fn new(module: Arc<FiniteModule>, bounds: Bounds) -> Result<Self> {
        bounds.check_elements("module elements", module.element_count())?;
        bounds.check_elements("ring elements", module.ring().element_count())?;
        let lattice = enumerate_submodules(&module, &bounds)?;
        let endo = EndoRing::compute(module.clone(), &bounds)?;
        let fully_invariant: Vec<bool> = lattice.all().par_iter().map(|l| endo.is_fully_invariant(l)).collect();
        let fi: Vec<usize> = (0..lattice.len()).filter(|&i| fully_invariant[i]).collect();
        let an = (0..lattice.len()).map(|_| OnceLock::new()).collect();
        let mut analysis = Analysis {
            module,
            bounds,
            lattice,
            endo,
            fully_invariant,
            fi,
            an,
            odot_fi: Vec::new(),
            points: Vec::new(),
            cache: Cache::default(),
        };
        analysis.odot_fi = analysis.compute_odot_table();
        analysis.points = analysis
            .fi
            .iter()
            .copied()
            .filter(|&k| k != analysis.lattice.zero() && analysis.coprime_at_lattice(k))
            .collect();
        Ok(analysis)
    }

    fn compute_odot_table(&self) -> Vec<Vec<usize>> {
        self.fi
            .par_iter()
            .map(|&x| {
                let images = self.images_under_an(x);
                self.fi
                    .iter()
                    .map(|&y| {
                        let s = self.preimage_of(&images, self.lattice.get(y));
                        self.lattice.index_of(&s).expect("⊙ yields a submodule")
                    })
                    .collect()
            })
            .collect()
    }

    /// For each element `m`, the images `f(m)` under additive generators of
    /// `An(X)`.
    fn images_under_an(&self, x: usize) -> Vec<Vec<u32>> {
        let gens = self.endo.additive_generators(self.an(x));
        (0..self.module.element_count() as u32)
            .map(|m| gens.iter().map(|&f| self.endo.eval(f, m)).collect())
            .collect()
    }

    fn preimage_of(&self, images: &[Vec<u32>], y: &Submodule) -> Submodule {
        let mut bits = FixedBitSet::with_capacity(images.len());
        for (m, img) in images.iter().enumerate() {
            if img.iter().all(|&v| y.contains(v)) {
                bits.insert(m);
            }
        }
        Submodule::from_bits(bits)
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn lattice(&self) -> &SubmoduleLattice {
        &self.lattice
    }

    pub fn endo(&self) -> &EndoRing {
        &self.endo
    }

    pub fn submodule(&self, i: usize) -> &Submodule {
        self.lattice.get(i)
    }

    pub fn label(&self, i: usize) -> String {
        self.lattice.get(i).label(&self.module)
    }

    /// Lattice position of a submodule of this module.
    pub fn position(&self, s: &Submodule) -> usize {
        self.lattice.index_of(s).expect("submodule of the analysed module")
    }

    pub fn is_fully_invariant_at(&self, i: usize) -> bool {
        self.fully_invariant[i]
    }

    /// Lattice positions of the fully invariant submodules.
    pub fn fully_invariant(&self) -> &[usize] {
        &self.fi
    }

    /// `An` of the submodule at lattice position `i`.
    pub fn an(&self, i: usize) -> &EndoIdeal {
        self.an[i].get_or_init(|| self.endo.an(self.lattice.get(i)))
    }

    /// Lattice positions of the spectrum points, in canonical order.
    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub(crate) fn fi_position(&self, i: usize) -> Option<usize> {
        self.fi.binary_search(&i).ok()
    }

    pub fn sum_of(&self, parts: impl IntoIterator<Item = usize>) -> usize {
        let subs: Vec<&Submodule> = parts.into_iter().map(|i| self.lattice.get(i)).collect();
        self.position(&Submodule::sum(&self.module, subs))
    }

    pub fn is_self_injective(&self) -> Result<bool> {
        self.cache
            .self_injective
            .get_or_init(|| self.endo.is_self_injective(&self.lattice, &self.bounds))
            .clone()
    }

    pub fn is_self_cogenerator(&self) -> bool {
        *self.cache.self_cogenerator.get_or_init(|| {
            (0..self.lattice.len()).all(|i| self.endo.ke_ideal(self.an(i)) == *self.lattice.get(i))
        })
    }

    pub fn is_intrinsically_injective(&self) -> Result<bool> {
        self.cache
            .intrinsically_injective
            .get_or_init(|| self.endo.is_intrinsically_injective(&self.bounds))
            .clone()
    }

    pub fn is_duo(&self) -> bool {
        self.fi.len() == self.lattice.len()
    }

    pub fn prime_ideals(&self) -> Result<Vec<EndoIdeal>> {
        self.cache.primes.get_or_init(|| self.endo.prime_ideals(&self.bounds)).clone()
    }

    pub fn every_prime_maximal(&self) -> Result<bool> {
        self.cache
            .every_prime_maximal
            .get_or_init(|| self.endo.every_prime_maximal(&self.bounds))
            .clone()
    }

    pub(crate) fn require_fi_nonzero(&self, s: &Submodule) -> Result<usize> {
        let i = self.position(s);
        if s.is_zero() {
            return Err(Error::ZeroSubmodule);
        }
        if !self.fully_invariant[i] {
            return Err(Error::NotFullyInvariant);
        }
        Ok(i)
    }

    pub(crate) fn distinct(items: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut seen = HashSet::new();
        let mut out: Vec<usize> = items.into_iter().filter(|i| seen.insert(*i)).collect();
        out.sort_unstable();
        out
    }
}
