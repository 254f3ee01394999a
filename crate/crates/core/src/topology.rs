//! Finite topological spaces given by their closed sets, and the dual
//! Zariski topology on `Spec^fc(M)`.
//!
//! Point sets are bit sets over point positions. Every property is decided
//! by scanning the (finite) family of closed sets.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::Analysis;
use crate::error::{Error, Result};
use crate::lattice::canonical_cmp;

/// Subset scans are exhaustive up to this many points.
pub const EXHAUSTIVE_POINTS: usize = 15;
/// Number of sampled subsets above [`EXHAUSTIVE_POINTS`].
pub const SAMPLED_SUBSETS: usize = 10_000;

/// Truth value of a property that is undefined on the empty space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Holds,
    Fails,
    Vacuous,
}

impl Outcome {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Outcome::Holds
        } else {
            Outcome::Fails
        }
    }

    pub fn holds(self) -> bool {
        self == Outcome::Holds
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub contains_empty: bool,
    pub contains_full: bool,
    pub closed_under_intersection: bool,
    pub closed_under_union: bool,
    /// First offending pair of closed sets, by index into the family.
    pub union_witness: Option<(usize, usize)>,
    pub intersection_witness: Option<(usize, usize)>,
}

impl AxiomReport {
    pub fn of(n: usize, family: &[FixedBitSet]) -> Self {
        let members: std::collections::HashSet<&FixedBitSet> = family.iter().collect();
        let empty = FixedBitSet::with_capacity(n);
        let mut full = FixedBitSet::with_capacity(n);
        full.insert_range(..);
        let mut union_witness = None;
        let mut intersection_witness = None;
        'pairs: for i in 0..family.len() {
            for j in i + 1..family.len() {
                if union_witness.is_none() && !members.contains(&(&family[i] | &family[j])) {
                    union_witness = Some((i, j));
                }
                if intersection_witness.is_none() && !members.contains(&(&family[i] & &family[j])) {
                    intersection_witness = Some((i, j));
                }
                if union_witness.is_some() && intersection_witness.is_some() {
                    break 'pairs;
                }
            }
        }
        AxiomReport {
            contains_empty: members.contains(&empty),
            contains_full: members.contains(&full),
            closed_under_intersection: intersection_witness.is_none(),
            closed_under_union: union_witness.is_none(),
            union_witness,
            intersection_witness,
        }
    }

    pub fn holds(&self) -> bool {
        self.contains_empty && self.contains_full && self.closed_under_intersection && self.closed_under_union
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub t0: Outcome,
    pub t1: Outcome,
    pub t2: Outcome,
    pub discrete: Outcome,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub connected: Outcome,
    pub irreducible: Outcome,
    pub ultraconnected: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Specialization {
    /// `below[y]` = points `x` with `x ∈ cl{y}`.
    pub below: Vec<Vec<usize>>,
    /// Covering pairs `(x, y)`: `x < y` with nothing strictly between.
    pub covers: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleClosed {
    pub set: FixedBitSet,
    pub generic_points: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChainConditions {
    pub closed_set_count: usize,
    /// Number of closed sets in the longest strictly increasing chain.
    pub longest_chain: usize,
    pub noetherian: bool,
    pub artinian: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Compactness {
    pub compact: bool,
    pub countably_compact: bool,
    /// Indices of closed sets whose complements form the subcover found
    /// for the cover by all open sets.
    pub subcover: Vec<usize>,
}

/// Non-empty subsets of an `n`-point set: all of them for small `n`,
/// otherwise a seeded sample.
#[derive(Clone, Debug)]
pub struct SubsetScan {
    pub exhaustive: bool,
    pub subsets: Vec<FixedBitSet>,
}

impl SubsetScan {
    pub fn new(n: usize, seed: u64) -> Self {
        if n <= EXHAUSTIVE_POINTS {
            let subsets = (1u32..1 << n)
                .map(|mask| {
                    let mut b = FixedBitSet::with_capacity(n);
                    for i in 0..n {
                        if mask >> i & 1 == 1 {
                            b.insert(i);
                        }
                    }
                    b
                })
                .collect();
            return SubsetScan { exhaustive: true, subsets };
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut subsets = Vec::with_capacity(SAMPLED_SUBSETS);
        while subsets.len() < SAMPLED_SUBSETS {
            let mut b = FixedBitSet::with_capacity(n);
            for i in 0..n {
                if rng.gen_bool(0.5) {
                    b.insert(i);
                }
            }
            if b.count_ones(..) > 0 {
                subsets.push(b);
            }
        }
        SubsetScan { exhaustive: false, subsets }
    }
}

/// A topology on `{0, ..., n-1}` given by its closed sets.
#[derive(Clone, Debug)]
pub struct FiniteSpace {
    labels: Vec<String>,
    closed: Vec<FixedBitSet>,
    index: HashMap<FixedBitSet, usize>,
}

impl FiniteSpace {
    /// Deduplicates and sorts the family; fails with `NotATopology` if it
    /// violates an axiom.
    pub fn from_closed_sets(labels: Vec<String>, family: impl IntoIterator<Item = FixedBitSet>) -> Result<Self> {
        let n = labels.len();
        let mut closed: Vec<FixedBitSet> = family.into_iter().collect();
        closed.sort_by(canonical_cmp);
        closed.dedup();
        let axioms = AxiomReport::of(n, &closed);
        if !axioms.holds() {
            return Err(Error::NotATopology(describe_failure(&axioms, &closed, &labels)));
        }
        let index = closed.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        Ok(FiniteSpace { labels, closed, index })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn closed_sets(&self) -> &[FixedBitSet] {
        &self.closed
    }

    pub fn closed_index(&self, set: &FixedBitSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub fn is_closed(&self, set: &FixedBitSet) -> bool {
        self.index.contains_key(set)
    }

    pub fn is_open(&self, set: &FixedBitSet) -> bool {
        self.is_closed(&self.complement(set))
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut b = self.empty_set();
        b.insert_range(..);
        b
    }

    pub fn complement(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut b = set.clone();
        b.toggle_range(..);
        b
    }

    pub fn singleton(&self, x: usize) -> FixedBitSet {
        let mut b = self.empty_set();
        b.insert(x);
        b
    }

    /// Smallest closed superset.
    pub fn closure(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut out = self.full_set();
        for c in &self.closed {
            if set.is_subset(c) {
                out &= c;
            }
        }
        out
    }

    /// Smallest open set containing `x`.
    pub fn smallest_open(&self, x: usize) -> FixedBitSet {
        let mut out = self.full_set();
        for c in &self.closed {
            if !c.contains(x) {
                out.difference_with(c);
            }
        }
        out
    }

    pub fn separation(&self) -> Separation {
        if self.is_empty() {
            return Separation {
                t0: Outcome::Vacuous,
                t1: Outcome::Vacuous,
                t2: Outcome::Vacuous,
                discrete: Outcome::Vacuous,
            };
        }
        let n = self.len();
        let cl: Vec<FixedBitSet> = (0..n).map(|x| self.closure(&self.singleton(x))).collect();
        let t0 = (0..n).all(|x| (x + 1..n).all(|y| cl[x] != cl[y]));
        let t1 = (0..n).all(|x| cl[x].count_ones(..) == 1);
        // in a finite space, disjoint neighbourhoods exist iff the smallest
        // ones are disjoint
        let opens: Vec<FixedBitSet> = (0..n).map(|x| self.smallest_open(x)).collect();
        let t2 = (0..n).all(|x| (x + 1..n).all(|y| opens[x].is_disjoint(&opens[y])));
        let discrete = (0..n).all(|x| self.is_open(&self.singleton(x)));
        Separation {
            t0: Outcome::from_bool(t0),
            t1: Outcome::from_bool(t1),
            t2: Outcome::from_bool(t2),
            discrete: Outcome::from_bool(discrete),
        }
    }

    pub fn connectivity(&self) -> Connectivity {
        if self.is_empty() {
            return Connectivity {
                connected: Outcome::Vacuous,
                irreducible: Outcome::Vacuous,
                ultraconnected: Outcome::Vacuous,
            };
        }
        let full = self.full_set();
        let connected = !self.closed.iter().any(|c| c.count_ones(..) > 0 && *c != full && self.is_open(c));
        let proper: Vec<&FixedBitSet> = self.closed.iter().filter(|c| **c != full).collect();
        let irreducible = !proper.iter().any(|a| proper.iter().any(|b| (*a | *b) == full));
        let nonempty: Vec<&FixedBitSet> = self.closed.iter().filter(|c| c.count_ones(..) > 0).collect();
        let ultraconnected = nonempty.iter().all(|a| nonempty.iter().all(|b| !a.is_disjoint(b)));
        Connectivity {
            connected: Outcome::from_bool(connected),
            irreducible: Outcome::from_bool(irreducible),
            ultraconnected: Outcome::from_bool(ultraconnected),
        }
    }

    /// Closed sets of the subspace `a`, without duplicates.
    fn relative_closed(&self, a: &FixedBitSet) -> Vec<FixedBitSet> {
        let mut out: Vec<FixedBitSet> = self.closed.iter().map(|c| c & a).collect();
        out.sort_by(canonical_cmp);
        out.dedup();
        out
    }

    /// `a` is non-empty and not the union of two proper relatively closed
    /// subsets.
    pub fn is_irreducible_subset(&self, a: &FixedBitSet) -> bool {
        if a.count_ones(..) == 0 {
            return false;
        }
        let proper: Vec<FixedBitSet> = self.relative_closed(a).into_iter().filter(|r| r != a).collect();
        let maximal: Vec<&FixedBitSet> = proper
            .iter()
            .filter(|r| !proper.iter().any(|s| s != *r && r.is_subset(s)))
            .collect();
        !maximal.iter().any(|r| maximal.iter().any(|s| &(*r | *s) == a))
    }

    /// `a` admits no partition into two non-empty relatively closed sets.
    pub fn is_connected_subset(&self, a: &FixedBitSet) -> bool {
        let rel = self.relative_closed(a);
        let set: std::collections::HashSet<&FixedBitSet> = rel.iter().collect();
        !rel.iter().any(|r| {
            let mut rest = a.clone();
            rest.difference_with(r);
            r.count_ones(..) > 0 && rest.count_ones(..) > 0 && set.contains(&rest)
        })
    }

    /// `x ≤ y` iff `x ∈ cl{y}`.
    pub fn specialization(&self) -> Specialization {
        let n = self.len();
        let cl: Vec<FixedBitSet> = (0..n).map(|y| self.closure(&self.singleton(y))).collect();
        let below: Vec<Vec<usize>> = cl.iter().map(|c| c.ones().collect()).collect();
        let strictly = |x: usize, y: usize| x != y && cl[y].contains(x) && !cl[x].contains(y);
        let mut covers = Vec::new();
        for y in 0..n {
            for x in 0..n {
                if strictly(x, y) && !(0..n).any(|z| strictly(x, z) && strictly(z, y)) {
                    covers.push((x, y));
                }
            }
        }
        covers.sort_unstable();
        Specialization { below, covers }
    }

    /// Irreducible closed sets with their generic points.
    pub fn irreducible_closed_sets(&self) -> Vec<IrreducibleClosed> {
        let cl: Vec<FixedBitSet> = (0..self.len()).map(|y| self.closure(&self.singleton(y))).collect();
        self.closed
            .iter()
            .filter(|c| self.is_irreducible_subset(c))
            .map(|c| IrreducibleClosed {
                set: c.clone(),
                generic_points: c.ones().filter(|&y| cl[y] == *c).collect(),
            })
            .collect()
    }

    /// Every irreducible closed set has exactly one generic point.
    pub fn is_sober(&self) -> bool {
        self.irreducible_closed_sets().iter().all(|c| c.generic_points.len() == 1)
    }

    /// Maximal irreducible closed sets.
    pub fn components(&self) -> Vec<FixedBitSet> {
        let irr: Vec<FixedBitSet> = self.irreducible_closed_sets().into_iter().map(|c| c.set).collect();
        irr.iter()
            .filter(|c| !irr.iter().any(|d| d != *c && c.is_subset(d)))
            .cloned()
            .collect()
    }

    pub fn chain_conditions(&self) -> ChainConditions {
        // closed sets are sorted by size, so every strict superset comes later
        let mut longest = vec![1usize; self.closed.len()];
        for j in 0..self.closed.len() {
            for i in 0..j {
                if self.closed[i] != self.closed[j] && self.closed[i].is_subset(&self.closed[j]) {
                    longest[j] = longest[j].max(longest[i] + 1);
                }
            }
        }
        let longest_chain = longest.into_iter().max().unwrap_or(0);
        // a family of finitely many sets admits no infinite strict chain
        let finite = longest_chain <= self.closed.len();
        ChainConditions { closed_set_count: self.closed.len(), longest_chain, noetherian: finite, artinian: finite }
    }

    /// Greedy finite subcover of a cover given by open sets; `None` if the
    /// sets do not cover the space.
    pub fn finite_subcover(&self, cover: &[FixedBitSet]) -> Option<Vec<usize>> {
        let mut covered = self.empty_set();
        for u in cover {
            covered |= u;
        }
        if covered != self.full_set() {
            return None;
        }
        let mut chosen = Vec::new();
        let mut covered = self.empty_set();
        while covered != self.full_set() {
            let (best, _) = cover
                .iter()
                .enumerate()
                .map(|(i, u)| (i, u.difference(&covered).count()))
                .max_by_key(|&(i, gain)| (gain, std::cmp::Reverse(i)))?;
            covered |= &cover[best];
            chosen.push(best);
        }
        chosen.sort_unstable();
        Some(chosen)
    }

    pub fn compactness(&self) -> Compactness {
        let opens: Vec<FixedBitSet> = self.closed.iter().map(|c| self.complement(c)).collect();
        let subcover = self.finite_subcover(&opens);
        let compact = subcover.is_some();
        Compactness { compact, countably_compact: compact, subcover: subcover.unwrap_or_default() }
    }

    pub fn format_set(&self, set: &FixedBitSet) -> String {
        let parts: Vec<&str> = set.ones().map(|i| self.labels[i].as_str()).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

fn describe_failure(axioms: &AxiomReport, family: &[FixedBitSet], labels: &[String]) -> String {
    let fmt = |s: &FixedBitSet| {
        let parts: Vec<&str> = s.ones().map(|i| labels[i].as_str()).collect();
        format!("{{{}}}", parts.join(", "))
    };
    if !axioms.contains_empty {
        "the empty set is not closed".into()
    } else if !axioms.contains_full {
        "the whole space is not closed".into()
    } else if let Some((i, j)) = axioms.union_witness {
        format!("union of {} and {} is not closed", fmt(&family[i]), fmt(&family[j]))
    } else if let Some((i, j)) = axioms.intersection_witness {
        format!("intersection of {} and {} is not closed", fmt(&family[i]), fmt(&family[j]))
    } else {
        String::new()
    }
}

/// Which submodules generate the closed sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TopologyKind {
    /// `𝒱^fc(L)` for every submodule `L`.
    AllSubmodules,
    /// `𝒱^fc(L)` for fully invariant `L` only.
    FullyInvariant,
}

/// `Spec^fc(M)` with one of its variety topologies.
#[derive(Clone, Debug)]
pub struct SpectrumSpace {
    pub kind: TopologyKind,
    pub space: FiniteSpace,
    /// Lattice position of `Corad^fc(𝓗(A))` for each closed set `A`.
    pub generators: Vec<usize>,
    /// Closed-set index of `𝒱^fc(L)` per lattice position (`None` outside
    /// the generating family).
    pub variety_of: Vec<Option<usize>>,
    /// The variety family of all submodules is closed under finite unions.
    pub is_top_fc: bool,
}

impl Analysis {
    /// Positions of the submodules generating the closed sets of `kind`.
    pub fn generating_family(&self, kind: TopologyKind) -> Vec<usize> {
        match kind {
            TopologyKind::AllSubmodules => (0..self.lattice.len()).collect(),
            TopologyKind::FullyInvariant => self.fi.clone(),
        }
    }

    /// Varieties of the generating family, without deduplication.
    pub fn variety_family(&self, kind: TopologyKind) -> Vec<FixedBitSet> {
        self.generating_family(kind).into_iter().map(|l| self.v_fc(l)).collect()
    }

    pub fn point_labels(&self) -> Vec<String> {
        self.points.iter().map(|&p| self.label(p)).collect()
    }

    /// Whether the varieties of all submodules are closed under finite
    /// unions.
    pub fn is_top_fc(&self) -> bool {
        let family = self.variety_family(TopologyKind::AllSubmodules);
        AxiomReport::of(self.points.len(), &family).closed_under_union
    }

    pub fn build_space(&self, kind: TopologyKind) -> Result<SpectrumSpace> {
        let space = FiniteSpace::from_closed_sets(self.point_labels(), self.variety_family(kind))?;
        let generators = space.closed_sets().iter().map(|a| self.corad_fc(self.hull(a))).collect();
        let mut variety_of = vec![None; self.lattice.len()];
        for l in self.generating_family(kind) {
            variety_of[l] = space.closed_index(&self.v_fc(l));
        }
        Ok(SpectrumSpace { kind, space, generators, variety_of, is_top_fc: self.is_top_fc() })
    }

    /// `𝒱^fc(𝓗(A))`.
    pub fn closure_by_formula(&self, a: &FixedBitSet) -> FixedBitSet {
        self.v_fc(self.hull(a))
    }
}
