//! The ⊙ product, fully coprime submodules, `Spec^fc(M)`, varieties,
//! coradicals, socle data and module-class predicates.
//!
//! Submodules are addressed by lattice position; sets of spectrum points are
//! bit sets over positions in [`Analysis::points`].

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::analysis::Analysis;
use crate::error::Result;
use crate::hom::hom_set;
use crate::lattice::{colon_ring, Closure, Submodule};

/// A point of `Spec^fc(M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumPoint {
    pub submodule: Submodule,
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct Spectrum {
    pub points: Vec<SpectrumPoint>,
    pub fi_submodules: Vec<Submodule>,
}

impl Spectrum {
    /// No points at all.
    pub fn is_coprimeless(&self) -> bool {
        self.points.is_empty()
    }
}

/// Min-property decided two ways that must agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MinProperty {
    /// No simple `L` lies in the sum of the other simples.
    pub by_sums: bool,
    /// The simple submodules are pairwise non-isomorphic.
    pub by_isomorphism: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassPredicates {
    pub duo: bool,
    pub self_injective: bool,
    pub self_cogenerator: bool,
    pub intrinsically_injective: bool,
    pub colocal: bool,
    pub uniform: bool,
    pub atomic: bool,
    pub fi_atomic: bool,
    pub s_iad: bool,
    pub multiplication: bool,
    pub comultiplication: bool,
    pub fully_coprime_module: bool,
    pub b_coprime: bool,
    pub min_property: bool,
}

impl Analysis {
    /// `X ⊙ Y = { m : f(m) ∈ Y for all f ∈ An(X) }`.
    pub fn odot(&self, x: &Submodule, y: &Submodule) -> Submodule {
        let xi = self.position(x);
        if let (Some(i), Some(j)) = (self.fi_position(xi), self.fi_position(self.position(y))) {
            return self.lattice.get(self.odot_fi[i][j]).clone();
        }
        let gens = self.endo.additive_generators(self.an(xi));
        let mut bits = FixedBitSet::with_capacity(self.module.element_count() as usize);
        for m in 0..self.module.element_count() as u32 {
            if gens.iter().all(|&f| y.contains(self.endo.eval(f, m))) {
                bits.insert(m as usize);
            }
        }
        Submodule::from_bits(bits)
    }

    /// Lattice position of `X ⊙ Y`.
    pub fn odot_at(&self, x: usize, y: usize) -> usize {
        match (self.fi_position(x), self.fi_position(y)) {
            (Some(i), Some(j)) => self.odot_fi[i][j],
            _ => self.position(&self.odot(self.lattice.get(x), self.lattice.get(y))),
        }
    }

    /// `Ke({ f * g : f ∈ An(X), g ∈ An(Y) })` with `f * g` = apply `f`, then
    /// `g`. Agrees with [`Analysis::odot`] when `M` is a self-cogenerator and
    /// `X`, `Y` are fully invariant; otherwise it is only computed.
    pub fn odot_via_ke(&self, x: &Submodule, y: &Submodule) -> Submodule {
        let fs = self.endo.additive_generators(self.an(self.position(x)));
        let gs = self.endo.additive_generators(self.an(self.position(y)));
        let products: Vec<u32> = fs.iter().flat_map(|&f| gs.iter().map(move |&g| (f, g))).map(|(f, g)| self.endo.mul(f, g)).collect();
        self.endo.ke(products)
    }

    /// Whether a non-zero fully invariant `K` is fully coprime in `M`.
    pub fn is_fully_coprime_in(&self, k: &Submodule) -> Result<bool> {
        let i = self.require_fi_nonzero(k)?;
        Ok(self.coprime_at_lattice(i))
    }

    pub(crate) fn coprime_at_lattice(&self, k: usize) -> bool {
        let n = self.fi.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                !self.lattice.leq(k, self.odot_fi[i][j])
                    || self.lattice.leq(k, self.fi[i])
                    || self.lattice.leq(k, self.fi[j])
            })
        })
    }

    pub fn spectrum(&self) -> Spectrum {
        Spectrum {
            points: self
                .points
                .iter()
                .map(|&p| SpectrumPoint { submodule: self.lattice.get(p).clone(), label: self.label(p) })
                .collect(),
            fi_submodules: self.fi.iter().map(|&i| self.lattice.get(i).clone()).collect(),
        }
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    /// `𝒱^fc(L)`: points contained in `L`.
    pub fn v_fc(&self, l: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.points.len());
        for (p, &k) in self.points.iter().enumerate() {
            if self.lattice.leq(k, l) {
                bits.insert(p);
            }
        }
        bits
    }

    /// `𝒳^fc(L)`: points not contained in `L`.
    pub fn x_fc(&self, l: usize) -> FixedBitSet {
        let mut bits = self.v_fc(l);
        bits.toggle_range(..);
        bits
    }

    /// `𝓗(A)`: sum of the given points (0 if none).
    pub fn hull(&self, points: &FixedBitSet) -> usize {
        self.sum_of(points.ones().map(|p| self.points[p]))
    }

    /// `Corad^fc(L)`.
    pub fn corad_fc(&self, l: usize) -> usize {
        self.hull(&self.v_fc(l))
    }

    pub fn is_fc_coradical(&self, l: usize) -> bool {
        self.corad_fc(l) == l
    }

    /// Lattice positions `L` with `Corad^fc(L) = L`.
    pub fn fc_coradical_submodules(&self) -> Vec<usize> {
        (0..self.lattice.len()).filter(|&l| self.is_fc_coradical(l)).collect()
    }

    /// Lattice position of `R x` for every element `x`.
    fn cyclic_positions(&self) -> Vec<usize> {
        (0..self.module.element_count() as u32)
            .map(|x| self.position(&Submodule::cyclic(&self.module, x)))
            .collect()
    }

    /// Minimal non-zero submodules, in canonical order.
    pub fn simples(&self) -> Vec<usize> {
        let cyc = self.cyclic_positions();
        Analysis::distinct((1..cyc.len()).map(|x| cyc[x]).filter(|&c| {
            self.lattice.get(c).members().all(|y| y == 0 || cyc[y as usize] == c)
        }))
    }

    /// Minimal non-zero fully invariant submodules.
    pub fn fi_simples(&self) -> Vec<usize> {
        let nonzero: Vec<usize> = self.fi.iter().copied().filter(|&i| i != self.lattice.zero()).collect();
        nonzero
            .iter()
            .copied()
            .filter(|&i| !nonzero.iter().any(|&j| j != i && self.lattice.leq(j, i)))
            .collect()
    }

    pub fn socle(&self) -> usize {
        self.sum_of(self.simples())
    }

    /// Simple submodules of `M` inside `L`.
    pub fn simples_in(&self, l: usize) -> Vec<usize> {
        self.simples().into_iter().filter(|&s| self.lattice.leq(s, l)).collect()
    }

    pub fn min_property(&self) -> Result<MinProperty> {
        let simples = self.simples();
        let by_sums = simples.iter().all(|&l| {
            let rest = self.sum_of(simples.iter().copied().filter(|&k| k != l));
            !self.lattice.leq(l, rest)
        });
        let mut by_isomorphism = true;
        'outer: for (a, &l1) in simples.iter().enumerate() {
            let homs = hom_set(&self.module, self.lattice.get(l1), &self.module, &self.bounds)?;
            for &l2 in &simples[a + 1..] {
                let t = self.lattice.get(l2);
                if homs.images.iter().any(|img| img.iter().any(|&y| y != 0) && img.iter().all(|&y| t.contains(y))) {
                    by_isomorphism = false;
                    break 'outer;
                }
            }
        }
        Ok(MinProperty { by_sums, by_isomorphism })
    }

    /// `EP(M)`: non-zero fully invariant `L` with `An(L)` prime in `S`.
    pub fn e_prime_submodules(&self) -> Result<Vec<usize>> {
        let primes = self.prime_ideals()?;
        Ok(self
            .fi
            .iter()
            .copied()
            .filter(|&l| l != self.lattice.zero() && primes.iter().any(|p| p == self.an(l)))
            .collect())
    }

    /// Maximal elements of `𝒱^fc(L)`, as lattice positions.
    pub fn maximal_under(&self, l: usize) -> Vec<usize> {
        let under: Vec<usize> = self.v_fc(l).ones().map(|p| self.points[p]).collect();
        under
            .iter()
            .copied()
            .filter(|&k| !under.iter().any(|&j| j != k && self.lattice.leq(k, j)))
            .collect()
    }

    pub fn is_colocal(&self) -> bool {
        let mut bits = FixedBitSet::with_capacity(self.module.element_count() as usize);
        bits.insert_range(..);
        for l in self.lattice.all().iter().skip(1) {
            bits &= l.bits();
        }
        bits.count_ones(..) > 1
    }

    pub fn is_uniform(&self) -> bool {
        let all = self.lattice.all();
        all.iter().skip(1).all(|a| all.iter().skip(1).all(|b| !a.meet(b).is_zero()))
    }

    /// Every non-zero submodule contains a simple submodule.
    pub fn is_atomic(&self) -> bool {
        let simples = self.simples();
        (1..self.lattice.len()).all(|l| simples.iter().any(|&s| self.lattice.leq(s, l)))
    }

    /// Every non-zero fully invariant submodule contains a minimal non-zero
    /// fully invariant submodule.
    pub fn is_fi_atomic(&self) -> bool {
        let fs = self.fi_simples();
        self.fi
            .iter()
            .filter(|&&l| l != self.lattice.zero())
            .all(|&l| fs.iter().any(|&s| self.lattice.leq(s, l)))
    }

    /// `L = (L :_R M) M` for every `L`.
    pub fn is_multiplication(&self) -> bool {
        let m = &self.module;
        let basis: Vec<u32> = (0..m.orders().len()).map(|i| m.additive().generator(i)).collect();
        self.lattice.all().iter().all(|l| {
            let ideal = colon_ring(l, m);
            let gens: Vec<u32> = ideal.iter().flat_map(|&r| basis.iter().map(move |&e| m.act(r, e))).collect();
            Submodule::span(m, &gens) == *l
        })
    }

    /// `L = (0 :_M (0 :_R L))` for every `L`.
    pub fn is_comultiplication(&self) -> bool {
        let m = &self.module;
        let ring = m.ring();
        let ring_closure = Closure { group: ring.additive(), ops: Vec::new() };
        self.lattice.all().iter().all(|l| {
            let members: Vec<u32> = l.members().collect();
            let ann: Vec<u32> = (0..ring.element_count() as u32)
                .filter(|&r| members.iter().all(|&x| m.act(r, x) == 0))
                .collect();
            let ann_gens = ring_closure.generators(&{
                let mut b = FixedBitSet::with_capacity(ring.element_count() as usize);
                for &r in &ann {
                    b.insert(r as usize);
                }
                b
            });
            (0..m.element_count() as u32).all(|x| {
                let killed = ann_gens.iter().all(|&r| m.act(r, x) == 0);
                killed == l.contains(x)
            })
        })
    }

    /// `M = X ⊙ Y ⇒ M = X or M = Y` over fully invariant `X`, `Y`.
    pub fn is_fully_coprime_module(&self) -> bool {
        self.coprime_at_lattice(self.lattice.top())
    }

    /// `M` is generated by each non-zero factor module: for every `L ≠ M`,
    /// the images of the endomorphisms killing `L` sum to `M`.
    pub fn is_b_coprime(&self) -> bool {
        let top = self.lattice.top();
        (0..top).all(|l| {
            let gens = self.endo.additive_generators(self.an(l));
            let images: Vec<Submodule> = gens.iter().map(|&f| self.endo.image(f)).collect();
            Submodule::sum(&self.module, &images).is_full()
        })
    }

    pub fn class_predicates(&self) -> Result<ClassPredicates> {
        let duo = self.is_duo();
        let self_injective = self.is_self_injective()?;
        let atomic = self.is_atomic();
        let min = self.min_property()?;
        Ok(ClassPredicates {
            duo,
            self_injective,
            self_cogenerator: self.is_self_cogenerator(),
            intrinsically_injective: self.is_intrinsically_injective()?,
            colocal: self.is_colocal(),
            uniform: self.is_uniform(),
            atomic,
            fi_atomic: self.is_fi_atomic(),
            s_iad: self_injective && atomic && duo,
            multiplication: self.is_multiplication(),
            comultiplication: self.is_comultiplication(),
            fully_coprime_module: self.is_fully_coprime_module(),
            b_coprime: self.is_b_coprime(),
            min_property: min.by_sums,
        })
    }
}
