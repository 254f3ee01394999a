//! Hypothesis-gated checks of the structural theorems about `Spec^fc(M)`
//! and its topology.
//!
//! Each registry entry computes its hypotheses and its claim on one shared
//! [`Analysis`]. A check is `vacuous` when some hypothesis fails (the claim
//! is still computed and recorded as an observation), `falsified` when the
//! hypotheses hold but the claim does not, and `verified` otherwise.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::analysis::Analysis;
use crate::error::{Bounds, Error, Result};
use crate::lattice::Submodule;
use crate::module::FiniteModule;
use crate::spectrum::ClassPredicates;
use crate::topology::{FiniteSpace, Outcome, SpectrumSpace, SubsetScan, TopologyKind};

const MAX_WITNESSES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Vacuous,
    Falsified,
}

/// Whether a check can discriminate on finite inputs or only confirms a
/// degenerate consequence of finiteness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Evidence,
    Consistency,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub kind: CheckKind,
    pub hypotheses: Vec<Hypothesis>,
    pub verdict: Verdict,
    pub details: Vec<String>,
    /// Replayable counterexample data (canonical labels) when falsified.
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub module: String,
    pub element_count: u64,
    pub submodule_count: usize,
    pub endomorphism_count: usize,
    pub predicates: ClassPredicates,
    pub spectrum: Vec<String>,
    pub topology: TopologyKind,
    pub is_top_fc: bool,
    pub checks: Vec<TheoremCheck>,
}

impl VerificationReport {
    pub fn count(&self, verdict: Verdict) -> usize {
        self.checks.iter().filter(|c| c.verdict == verdict).count()
    }

    pub fn falsified(&self) -> impl Iterator<Item = &TheoremCheck> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Falsified)
    }

    pub fn check(&self, id: &str) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| c.id == id)
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyConfig {
    /// Seed for sampled subset scans on large spectra.
    pub seed: u64,
    /// Restrict the run to these registry ids.
    pub theorems: Option<Vec<String>>,
}

/// Accumulates one check's hypotheses and findings.
#[derive(Default)]
struct Check {
    hypotheses: Vec<Hypothesis>,
    details: Vec<String>,
    witnesses: Vec<String>,
    failures: usize,
}

impl Check {
    fn gate(&mut self, name: &str, holds: bool) {
        self.hypotheses.push(Hypothesis { name: name.to_string(), holds });
    }

    fn note(&mut self, s: impl Into<String>) {
        self.details.push(s.into());
    }

    fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    fn finish(mut self, theorem: &Theorem) -> TheoremCheck {
        let gated = self.hypotheses.iter().all(|h| h.holds);
        let verdict = if !gated {
            if self.failures > 0 {
                self.details.push(format!("claim fails on {} instance(s) (hypotheses unmet)", self.failures));
                let observed = std::mem::take(&mut self.witnesses);
                self.details.extend(observed.into_iter().map(|w| format!("observed: {w}")));
            }
            Verdict::Vacuous
        } else if self.failures > 0 {
            if self.failures > self.witnesses.len() {
                self.details.push(format!("{} failing instance(s), first {} shown", self.failures, self.witnesses.len()));
            }
            Verdict::Falsified
        } else {
            Verdict::Verified
        };
        TheoremCheck {
            id: theorem.id,
            statement: theorem.statement,
            kind: theorem.kind,
            hypotheses: self.hypotheses,
            verdict,
            details: self.details,
            witnesses: self.witnesses,
        }
    }
}

/// Shared state for one module's checks.
struct Ctx<'a> {
    a: &'a Analysis,
    preds: ClassPredicates,
    spec: SpectrumSpace,
    simples: Vec<usize>,
    top_fc: bool,
    scan: SubsetScan,
    seed: u64,
}

impl Ctx<'_> {
    fn sp(&self) -> &FiniteSpace {
        &self.spec.space
    }

    fn label(&self, l: usize) -> String {
        self.a.label(l)
    }

    fn set(&self, bits: &FixedBitSet) -> String {
        self.sp().format_set(bits)
    }

    fn leq(&self, x: usize, y: usize) -> bool {
        self.a.lattice.leq(x, y)
    }

    fn n(&self) -> usize {
        self.a.points.len()
    }

    /// Position among the points of a lattice position.
    fn point_index(&self, l: usize) -> Option<usize> {
        self.a.points.binary_search(&l).ok()
    }

    fn is_coprime(&self, l: usize) -> bool {
        l != self.a.lattice.zero() && self.a.fully_invariant[l] && self.a.coprime_at_lattice(l)
    }

    fn spec_is_simples(&self) -> bool {
        self.a.points == self.simples
    }

    fn every_point_simple(&self) -> bool {
        self.a.points.iter().all(|p| self.simples.contains(p))
    }

    /// The simple submodules as a point set, or the first simple that is
    /// not a point.
    fn simples_as_points(&self) -> std::result::Result<FixedBitSet, usize> {
        let mut bits = FixedBitSet::with_capacity(self.n());
        for &s in &self.simples {
            bits.insert(self.point_index(s).ok_or(s)?);
        }
        Ok(bits)
    }

    fn scan_note(&self, c: &mut Check, what: &str, scan: &SubsetScan) {
        let mode = if scan.exhaustive { "exhaustive" } else { "sampled" };
        c.note(format!("{} {what} ({mode})", scan.subsets.len()));
    }

    fn s_iad(&self, c: &mut Check) {
        c.gate("S-IAD", self.preds.s_iad);
    }
}

struct Theorem {
    id: &'static str,
    statement: &'static str,
    kind: CheckKind,
    run: fn(&Ctx, &mut Check) -> Result<()>,
}

macro_rules! theorem {
    ($id:literal, $kind:ident, $statement:literal, $run:expr) => {
        Theorem { id: $id, statement: $statement, kind: CheckKind::$kind, run: $run }
    };
}

static REGISTRY: &[Theorem] = &[
    theorem!("lemma-properties-1", Evidence, "V(0) is empty and V(M) is the whole spectrum", properties_1),
    theorem!("lemma-properties-2", Evidence, "intersections of varieties are varieties of intersections", properties_2),
    theorem!("lemma-properties-3", Evidence, "V(L) ∪ V(L') = V(L + L') = V(L ⊙ L') for fully invariant L, L'", properties_3),
    theorem!("thm-topology", Evidence, "fully invariant varieties form the closed sets of a topology; all varieties do when M is duo", topology_axioms),
    theorem!("lemma-closure", Evidence, "closure(A) = V(H(A))", closure_formula),
    theorem!("remark-simple-char-1", Evidence, "the spectrum is a T0 space", simple_char_1),
    theorem!("remark-simple-char-2", Evidence, "for duo M, X(L1) ∩ X(L2) = X(L1 + L2) and the X(L) form a basis", simple_char_2),
    theorem!("remark-simple-char-3", Evidence, "closure{L} = V(L), so specialization is containment", simple_char_3),
    theorem!("remark-simple-char-4", Evidence, "self-injective duo M: X(L) empty implies Soc(M) ⊆ L", simple_char_4),
    theorem!("remark-simple-char-5", Evidence, "S-IAD M: V(L) is empty iff L = 0", simple_char_5),
    theorem!("thm-11", Evidence, "L ↦ V(L) is an order bijection from fc-coradical submodules onto closed sets", theorem_11),
    theorem!("thm-noth-art", Consistency, "Artinian (Noetherian) M gives a Noetherian (Artinian) space", noth_art),
    theorem!("prop-duo-irr", Evidence, "duo M: A is irreducible iff H(A) is fully coprime", duo_irr),
    theorem!("ex-chain", Evidence, "every chain of points is irreducible", chain_irreducible),
    theorem!("thm-corad-fc-1", Evidence, "duo M: the spectrum is irreducible iff Corad(M) is fully coprime", corad_fc_1),
    theorem!("thm-corad-fc-2", Evidence, "self-injective duo M: the simples form an irreducible set iff Soc(M) is fully coprime", corad_fc_2),
    theorem!("prop-max-irr", Evidence, "duo M: points match irreducible closed sets and maximal points match components", max_irr),
    theorem!("cor-sober", Evidence, "duo M: the spectrum is sober", sober),
    theorem!("prop-uniform", Evidence, "S-IAD M: M is uniform iff the spectrum is ultraconnected", uniform),
    theorem!("thm-compact", Consistency, "S-IAD M with finitely many simples: the spectrum is compact", compact),
    theorem!("thm-count-compact", Consistency, "S-IAD M, all points simple: compact iff finitely many simples", count_compact),
    theorem!("prop-it-irr", Evidence, "duo M with Spec = simples: min-property gives discreteness; unique simple iff min-property and connected", it_irr),
    theorem!("thm-colocal", Evidence, "S-IAD M, all points simple: M is colocal iff the spectrum is connected", colocal),
    theorem!("lemma-bireg", Evidence, "self-injective self-cogenerator duo M with every prime of S maximal: Spec = simples", bireg),
    theorem!("lemma-1n", Evidence, "each member of a connected set of at least two points is comparable to another member", lemma_1n),
    theorem!("prop-lf", Evidence, "S-IAD M: every set of simples is locally finite, with explicit neighbourhoods", locally_finite),
    theorem!("lemma-singleton", Evidence, "S-IAD M: L simple iff L is a point with V(L) = {L} iff {L} is closed", singleton),
    theorem!("prop-T1", Evidence, "S-IAD M: Spec = simples iff the spectrum is T1", t1),
    theorem!("thm-T2", Evidence, "S-IAD M: Spec = simples iff discrete iff T2 iff T1", t2),
    theorem!("lemma-min", Evidence, "self-injective duo M has the min-property", min_property),
    theorem!("prop-corad=", Evidence, "self-cogenerator M: EP ⊆ Spec; intrinsically injective: EP = Spec and Prad(S) = An(Corad M), Corad M = Ke(Prad S)", corad_eq),
    theorem!("lemma-inn-ideal", Evidence, "self-cogenerator M: X ⊙ Y = Ke(An(X) An(Y)) for fully invariant X, Y", inn_ideal),
    theorem!("prop-ro-inn", Evidence, "self-injective M: points of M inside L are the points of L, and Spec(L) → Spec(M) is continuous", ro_inn),
    theorem!("lemma-fc-max", Evidence, "self-injective f.i.-atomic M: every non-zero fully invariant L has a maximal point under it", fc_max),
    theorem!("remark-sub-cop", Evidence, "self-injective M: minimal fully invariant submodules are points", sub_cop),
];

/// Registry ids in report order.
pub fn registry_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|t| t.id).collect()
}

pub fn validate_ids(ids: &[String]) -> Result<()> {
    let known = registry_ids();
    for id in ids {
        if !known.contains(&id.as_str()) {
            return Err(Error::UnknownTheorem { id: id.clone(), known: known.join(", ") });
        }
    }
    Ok(())
}

/// The topology used for checks: all varieties when they form a topology,
/// otherwise the fully invariant ones.
fn choose_space(a: &Analysis) -> Result<SpectrumSpace> {
    if a.is_top_fc() {
        a.build_space(TopologyKind::AllSubmodules)
    } else {
        a.build_space(TopologyKind::FullyInvariant)
    }
}

pub fn run_all(a: &Analysis, name: &str, config: &VerifyConfig) -> Result<VerificationReport> {
    if let Some(ids) = &config.theorems {
        validate_ids(ids)?;
    }
    let preds = a.class_predicates()?;
    let spec = choose_space(a)?;
    let ctx = Ctx {
        a,
        preds,
        top_fc: spec.is_top_fc,
        simples: a.simples(),
        scan: SubsetScan::new(a.points.len(), config.seed),
        seed: config.seed,
        spec,
    };
    let checks = REGISTRY
        .iter()
        .filter(|t| config.theorems.as_ref().map_or(true, |ids| ids.iter().any(|i| i == t.id)))
        .map(|t| {
            let mut c = Check::default();
            if let Err(e) = (t.run)(&ctx, &mut c) {
                c.gate("within-bounds", false);
                c.note(e.to_string());
            }
            c.finish(t)
        })
        .collect();
    Ok(VerificationReport {
        module: name.to_string(),
        element_count: a.module.element_count(),
        submodule_count: a.lattice.len(),
        endomorphism_count: a.endo.len(),
        predicates: preds,
        spectrum: a.point_labels(),
        topology: ctx.spec.kind,
        is_top_fc: ctx.top_fc,
        checks,
    })
}

/// Builds the analysis and runs the registry.
pub fn verify_module(module: Arc<FiniteModule>, name: &str, bounds: Bounds, config: &VerifyConfig) -> Result<VerificationReport> {
    let a = Analysis::new(module, bounds)?;
    run_all(&a, name, config)
}

fn properties_1(x: &Ctx, c: &mut Check) -> Result<()> {
    let a = x.a;
    c.expect(a.v_fc(a.lattice.zero()).count_ones(..) == 0, || "V(0) is non-empty".into());
    c.expect(a.v_fc(a.lattice.top()).count_ones(..) == x.n(), || "V(M) misses a point".into());
    Ok(())
}

fn properties_2(x: &Ctx, c: &mut Check) -> Result<()> {
    let a = x.a;
    let len = a.lattice.len();
    let v: Vec<FixedBitSet> = (0..len).map(|l| a.v_fc(l)).collect();
    for i in 0..len {
        for j in i..len {
            let meet = a.position(&a.lattice.get(i).meet(a.lattice.get(j)));
            c.expect((&v[i] & &v[j]) == v[meet], || format!("L = {}, L' = {}", x.label(i), x.label(j)));
        }
    }
    let families = SubsetScan::new(len, x.seed);
    for fam in &families.subsets {
        let mut bits = a.lattice.get(len - 1).bits().clone();
        let mut vars = x.sp().full_set();
        for l in fam.ones() {
            bits &= a.lattice.get(l).bits();
            vars &= &v[l];
        }
        let meet = a.position(&Submodule::from_bits(bits));
        c.expect(vars == v[meet], || {
            let parts: Vec<String> = fam.ones().map(|l| x.label(l)).collect();
            format!("family {{{}}}", parts.join(", "))
        });
    }
    c.note(format!("{} pairs", len * (len + 1) / 2));
    x.scan_note(c, "families", &families);
    Ok(())
}

fn properties_3(x: &Ctx, c: &mut Check) -> Result<()> {
    let a = x.a;
    for &l in &a.fi {
        for &m in &a.fi {
            let union = &a.v_fc(l) | &a.v_fc(m);
            let sum = a.v_fc(a.sum_of([l, m]));
            let odot = a.v_fc(a.odot_at(l, m));
            c.expect(union == sum && sum == odot, || {
                format!("L = {}, L' = {}: union {}, V(L+L') {}, V(L⊙L') {}", x.label(l), x.label(m), x.set(&union), x.set(&sum), x.set(&odot))
            });
        }
    }
    c.note(format!("{} ordered fully invariant pairs", a.fi.len() * a.fi.len()));
    Ok(())
}

fn topology_axioms(x: &Ctx, c: &mut Check) -> Result<()> {
    let a = x.a;
    let fi = crate::topology::AxiomReport::of(x.n(), &a.variety_family(TopologyKind::FullyInvariant));
    c.expect(fi.holds(), || format!("fully invariant varieties: {fi:?}"));
    let all = crate::topology::AxiomReport::of(x.n(), &a.variety_family(TopologyKind::AllSubmodules));
    if x.preds.duo {
        c.expect(all.holds(), || format!("all varieties: {all:?}"));
        c.note("duo: all-submodule family checked");
    } else {
        c.note(format!("not duo: all-submodule family closed under unions = {}", all.closed_under_union));
    }
    Ok(())
}

fn closure_formula(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("top-fc", x.top_fc);
    let sp = x.sp();
    let empty = sp.empty_set();
    for s in x.scan.subsets.iter().chain(std::iter::once(&empty)) {
        let formula = x.a.closure_by_formula(s);
        let lattice = sp.closure(s);
        c.expect(formula == lattice, || format!("A = {}: V(H(A)) = {}, closure = {}", x.set(s), x.set(&formula), x.set(&lattice)));
        c.expect(s.is_subset(&lattice) && sp.closure(&lattice) == lattice, || format!("closure not extensive/idempotent at {}", x.set(s)));
        for p in 0..x.n() {
            let mut bigger = s.clone();
            bigger.insert(p);
            c.expect(lattice.is_subset(&sp.closure(&bigger)), || format!("closure not monotone at {}", x.set(s)));
        }
    }
    x.scan_note(c, "subsets", &x.scan);
    Ok(())
}

fn simple_char_1(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("top-fc", x.top_fc);
    let t0 = x.sp().separation().t0;
    c.expect(t0 != Outcome::Fails, || "two points with equal closures".into());
    Ok(())
}

fn simple_char_2(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("duo", x.preds.duo);
    let a = x.a;
    let len = a.lattice.len();
    let xs: Vec<FixedBitSet> = (0..len).map(|l| a.x_fc(l)).collect();
    for i in 0..len {
        for j in i..len {
            let sum = a.sum_of([i, j]);
            c.expect((&xs[i] & &xs[j]) == xs[sum], || format!("L1 = {}, L2 = {}", x.label(i), x.label(j)));
        }
    }
    c.expect(xs[a.lattice.zero()].count_ones(..) == x.n(), || "X(0) misses a point".into());
    Ok(())
}

fn simple_char_3(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("top-fc", x.top_fc);
    let sp = x.sp();
    for (p, &l) in x.a.points.iter().enumerate() {
        let cl = sp.closure(&sp.singleton(p));
        c.expect(cl == x.a.v_fc(l), || format!("closure of {{{}}} is {}", x.label(l), x.set(&cl)));
        for (q, &k) in x.a.points.iter().enumerate() {
            c.expect(cl.contains(q) == x.leq(k, l), || format!("K = {}, L = {}", x.label(k), x.label(l)));
        }
    }
    Ok(())
}

fn simple_char_4(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("self-injective", x.preds.self_injective);
    c.gate("duo", x.preds.duo);
    let a = x.a;
    let soc = a.socle();
    let converse = x.spec_is_simples();
    for l in 0..a.lattice.len() {
        let empty = a.x_fc(l).count_ones(..) == 0;
        c.expect(!empty || x.leq(soc, l), || format!("X({}) is empty but Soc ⊄ L", x.label(l)));
        if converse {
            c.expect(empty || !x.leq(soc, l), || format!("Soc ⊆ {} but X(L) is non-empty", x.label(l)));
        }
    }
    c.note(format!("converse checked (Spec = simples): {converse}"));
    Ok(())
}

fn simple_char_5(x: &Ctx, c: &mut Check) -> Result<()> {
    x.s_iad(c);
    let a = x.a;
    for l in 0..a.lattice.len() {
        let empty = a.v_fc(l).count_ones(..) == 0;
        c.expect(empty == (l == a.lattice.zero()), || format!("L = {}, V(L) empty = {empty}", x.label(l)));
    }
    Ok(())
}

fn theorem_11(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("top-fc", x.top_fc);
    let a = x.a;
    let sp = x.sp();
    let cr = a.fc_coradical_submodules();
    let images: Vec<FixedBitSet> = cr.iter().map(|&l| a.v_fc(l)).collect();
    let distinct: BTreeSet<Vec<usize>> = images.iter().map(|s| s.ones().collect()).collect();
    c.expect(distinct.len() == cr.len(), || "V is not injective on fc-coradical submodules".into());
    for img in &images {
        c.expect(sp.is_closed(img), || format!("{} is not closed", x.set(img)));
    }
    for closed in sp.closed_sets() {
        let g = a.corad_fc(a.hull(closed));
        c.expect(cr.contains(&g) && a.v_fc(g) == *closed, || format!("closed set {} has no coradical preimage", x.set(closed)));
    }
    c.expect(sp.closed_sets().len() == cr.len(), || format!("{} coradicals vs {} closed sets", cr.len(), sp.closed_sets().len()));
    for (i, &l1) in cr.iter().enumerate() {
        for (j, &l2) in cr.iter().enumerate() {
            c.expect(x.leq(l1, l2) == images[i].is_subset(&images[j]), || format!("order differs at {} vs {}", x.label(l1), x.label(l2)));
        }
        c.expect(a.corad_fc(a.hull(&images[i])) == l1, || format!("round trip fails at {}", x.label(l1)));
    }
    for l in 0..a.lattice.len() {
        c.expect(a.corad_fc(a.hull(&a.v_fc(l))) == a.corad_fc(l), || format!("Corad(H(V(L))) ≠ Corad(L) at {}", x.label(l)));
    }
    // longest chains must agree under an order isomorphism
    let mut longest = vec![1usize; cr.len()];
    for j in 0..cr.len() {
        for i in 0..j {
            if x.leq(cr[i], cr[j]) {
                longest[j] = longest[j].max(longest[i] + 1);
            }
        }
    }
    let coradical_chain = longest.into_iter().max().unwrap_or(0);
    let closed_chain = sp.chain_conditions().longest_chain;
    c.expect(coradical_chain == closed_chain, || format!("longest chains {coradical_chain} vs {closed_chain}"));
    c.note(format!("{} fc-coradical submodules, {} closed sets", cr.len(), sp.closed_sets().len()));
    Ok(())
}

fn noth_art(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("top-fc", x.top_fc);
    c.gate("M Artinian and Noetherian (finite)", true);
    let cc = x.sp().chain_conditions();
    c.expect(cc.noetherian && cc.artinian, || format!("{cc:?}"));
    Ok(())
}

fn duo_irr(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("duo", x.preds.duo);
    let sp = x.sp();
    for s in &x.scan.subsets {
        let irreducible = sp.is_irreducible_subset(s);
        let h = x.a.hull(s);
        let coprime = x.is_coprime(h);
        c.expect(irreducible == coprime, || format!("A = {}: irreducible = {irreducible}, H(A) = {} fully coprime = {coprime}", x.set(s), x.label(h)));
    }
    x.scan_note(c, "subsets", &x.scan);
    Ok(())
}

fn chain_irreducible(x: &Ctx, c: &mut Check) -> Result<()> {
    let pts = &x.a.points;
    let mut chains = 0;
    for s in &x.scan.subsets {
        let members: Vec<usize> = s.ones().map(|p| pts[p]).collect();
        let chain = members.iter().all(|&k| members.iter().all(|&l| x.leq(k, l) || x.leq(l, k)));
        if chain {
            chains += 1;
            c.expect(x.sp().is_irreducible_subset(s), || format!("chain {} is reducible", x.set(s)));
        }
    }
    c.note(format!("{chains} chains among scanned subsets"));
    Ok(())
}

fn corad_fc_1(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("duo", x.preds.duo);
    let irreducible = x.sp().connectivity().irreducible.holds();
    let corad = x.a.corad_fc(x.a.lattice.top());
    let coprime = x.is_coprime(corad);
    c.note(format!("irreducible = {irreducible}, Corad(M) = {} fully coprime = {coprime}", x.label(corad)));
    c.expect(irreducible == coprime, || "sides differ".into());
    Ok(())
}

fn corad_fc_2(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("duo", x.preds.duo);
    c.gate("self-injective", x.preds.self_injective);
    let simples = match x.simples_as_points() {
        Ok(b) => b,
        Err(s) => {
            c.expect(false, || format!("simple {} is not a point", x.label(s)));
            return Ok(());
        }
    };
    let irreducible = x.sp().is_irreducible_subset(&simples);
    let soc = x.a.socle();
    let coprime = x.is_coprime(soc);
    c.note(format!("S(M) irreducible = {irreducible}, Soc = {} fully coprime = {coprime}", x.label(soc)));
    c.expect(irreducible == coprime, || "sides differ".into());
    Ok(())
}

fn max_irr(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("duo", x.preds.duo);
    let a = x.a;
    let sp = x.sp();
    let irr: BTreeSet<Vec<usize>> = sp.irreducible_closed_sets().into_iter().map(|s| s.set.ones().collect()).collect();
    let from_points: Vec<Vec<usize>> = a.points.iter().map(|&k| a.v_fc(k).ones().collect()).collect();
    let image: BTreeSet<Vec<usize>> = from_points.iter().cloned().collect();
    c.expect(image.len() == a.points.len(), || "K ↦ V(K) is not injective".into());
    c.expect(image == irr, || format!("{} irreducible closed sets vs {} point varieties", irr.len(), image.len()));
    let maximal: BTreeSet<Vec<usize>> = a
        .points
        .iter()
        .filter(|&&k| !a.points.iter().any(|&j| j != k && x.leq(k, j)))
        .map(|&k| a.v_fc(k).ones().collect())
        .collect();
    let components: BTreeSet<Vec<usize>> = sp.components().into_iter().map(|s| s.ones().collect()).collect();
    c.expect(maximal == components, || format!("{} maximal points vs {} components", maximal.len(), components.len()));
    Ok(())
}

fn sober(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("duo", x.preds.duo);
    for irr in x.sp().irreducible_closed_sets() {
        c.expect(irr.generic_points.len() == 1, || format!("{} has {} generic points", x.set(&irr.set), irr.generic_points.len()));
    }
    Ok(())
}

fn uniform(x: &Ctx, c: &mut Check) -> Result<()> {
    x.s_iad(c);
    let ultra = x.sp().connectivity().ultraconnected.holds();
    c.note(format!("uniform = {}, ultraconnected = {ultra}", x.preds.uniform));
    c.expect(x.preds.uniform == ultra, || "sides differ".into());
    Ok(())
}

fn compact(x: &Ctx, c: &mut Check) -> Result<()> {
    x.s_iad(c);
    c.gate("finitely many simples", true);
    let k = x.sp().compactness();
    c.expect(k.compact && k.countably_compact, || format!("{k:?}"));
    c.note(format!("{} simples", x.simples.len()));
    Ok(())
}

fn count_compact(x: &Ctx, c: &mut Check) -> Result<()> {
    x.s_iad(c);
    c.gate("every point simple", x.every_point_simple());
    let k = x.sp().compactness();
    c.expect(k.compact && k.countably_compact, || format!("{k:?} with finitely many simples"));
    Ok(())
}

fn it_irr(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("duo", x.preds.duo);
    c.gate("Spec = simples", x.spec_is_simples());
    let min = x.a.min_property()?.by_sums;
    let sp = x.sp();
    let discrete = sp.separation().discrete.holds();
    let connected = sp.connectivity().connected.holds();
    let unique = x.simples.len() == 1;
    c.note(format!("min-property = {min}, discrete = {discrete}, connected = {connected}, simples = {}", x.simples.len()));
    c.expect(!min || discrete, || "min-property without discreteness".into());
    c.expect(unique == (min && connected), || "unique simple differs from min-property ∧ connected".into());
    Ok(())
}

fn colocal(x: &Ctx, c: &mut Check) -> Result<()> {
    x.s_iad(c);
    c.gate("every point simple", x.every_point_simple());
    let connected = x.sp().connectivity().connected.holds();
    c.note(format!("colocal = {}, connected = {connected}", x.preds.colocal));
    c.expect(x.preds.colocal == connected, || "sides differ".into());
    Ok(())
}

fn bireg(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("self-injective", x.preds.self_injective);
    c.gate("self-cogenerator", x.preds.self_cogenerator);
    c.gate("duo", x.preds.duo);
    c.gate("every prime of S maximal", x.a.every_prime_maximal()?);
    c.expect(x.spec_is_simples(), || {
        let pts: Vec<String> = x.a.points.iter().map(|&p| x.label(p)).collect();
        let sim: Vec<String> = x.simples.iter().map(|&p| x.label(p)).collect();
        format!("Spec = [{}], simples = [{}]", pts.join(", "), sim.join(", "))
    });
    Ok(())
}

fn lemma_1n(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("top-fc", x.top_fc);
    let pts = &x.a.points;
    let mut connected = 0;
    for s in &x.scan.subsets {
        if s.count_ones(..) < 2 || !x.sp().is_connected_subset(s) {
            continue;
        }
        connected += 1;
        for i in s.ones() {
            let ok = s.ones().any(|j| j != i && (x.leq(pts[i], pts[j]) || x.leq(pts[j], pts[i])));
            c.expect(ok, || format!("{} in connected {} is incomparable to the rest", x.label(pts[i]), x.set(s)));
        }
    }
    c.note(format!("{connected} connected subsets with at least two points"));
    Ok(())
}

fn locally_finite(x: &Ctx, c: &mut Check) -> Result<()> {
    x.s_iad(c);
    c.gate("finitely many simples under each point", true);
    let a = x.a;
    let simples = match x.simples_as_points() {
        Ok(_) => &x.simples,
        Err(s) => {
            c.expect(false, || format!("simple {} is not a point", x.label(s)));
            return Ok(());
        }
    };
    let families = SubsetScan::new(simples.len(), x.seed);
    for fam in &families.subsets {
        let k: Vec<usize> = fam.ones().map(|i| simples[i]).collect();
        for &l in &a.points {
            let f = a.sum_of(k.iter().copied().filter(|&s| !x.leq(s, l)));
            c.expect(!x.leq(l, f), || format!("L = {} lies in its witness F = {}", x.label(l), x.label(f)));
            let meets: Vec<usize> = k.iter().copied().filter(|&s| !x.leq(s, f)).collect();
            let under: Vec<usize> = k.iter().copied().filter(|&s| x.leq(s, l)).collect();
            c.expect(meets == under, || format!("L = {}, F = {}: neighbourhood meets a different set", x.label(l), x.label(f)));
        }
    }
    x.scan_note(c, "families of simples", &families);
    Ok(())
}

fn singleton(x: &Ctx, c: &mut Check) -> Result<()> {
    x.s_iad(c);
    let a = x.a;
    let sp = x.sp();
    for l in 0..a.lattice.len() {
        let simple = x.simples.contains(&l);
        let (point, closed) = match x.point_index(l) {
            Some(p) => {
                let single = sp.singleton(p);
                (a.v_fc(l) == single, sp.is_closed(&single))
            }
            None => (false, false),
        };
        c.expect(simple == point && point == closed, || {
            format!("L = {}: simple = {simple}, point with V(L) = {{L}} = {point}, {{L}} closed = {closed}", x.label(l))
        });
    }
    Ok(())
}

fn t1(x: &Ctx, c: &mut Check) -> Result<()> {
    x.s_iad(c);
    let t1 = x.sp().separation().t1.holds();
    c.note(format!("Spec = simples: {}, T1 = {t1}", x.spec_is_simples()));
    c.expect(x.spec_is_simples() == t1, || "sides differ".into());
    Ok(())
}

fn t2(x: &Ctx, c: &mut Check) -> Result<()> {
    x.s_iad(c);
    let s = x.sp().separation();
    let values = [x.spec_is_simples(), s.discrete.holds(), s.t2.holds(), s.t1.holds()];
    c.note(format!("Spec = simples, discrete, T2, T1: {values:?}"));
    c.expect(values.iter().all(|&v| v == values[0]), || "conditions disagree".into());
    Ok(())
}

fn min_property(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("self-injective", x.preds.self_injective);
    c.gate("duo", x.preds.duo);
    let m = x.a.min_property()?;
    c.note(format!("by sums = {}, by isomorphism = {}", m.by_sums, m.by_isomorphism));
    c.expect(m.by_sums, || "some simple lies in the sum of the others".into());
    c.expect(m.by_isomorphism, || "two distinct simples are isomorphic".into());
    Ok(())
}

fn corad_eq(x: &Ctx, c: &mut Check) -> Result<()> {
    let a = x.a;
    c.gate("self-cogenerator", x.preds.self_cogenerator);
    let ep = a.e_prime_submodules()?;
    for &e in &ep {
        c.expect(a.points.contains(&e), || format!("E-prime {} is not a point", x.label(e)));
    }
    let ii = x.preds.intrinsically_injective;
    c.note(format!("intrinsically injective = {ii}"));
    if ii {
        c.expect(ep == a.points, || "EP ≠ Spec".into());
        let prad = a.endo.prad(&a.bounds)?;
        let corad = a.corad_fc(a.lattice.top());
        c.expect(prad == *a.an(corad), || format!("Prad(S) ≠ An({})", x.label(corad)));
        c.expect(a.endo.ke_ideal(&prad) == *a.lattice.get(corad), || format!("Ke(Prad S) ≠ {}", x.label(corad)));
    }
    Ok(())
}

fn inn_ideal(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("self-cogenerator", x.preds.self_cogenerator);
    let a = x.a;
    for &l in &a.fi {
        for &m in &a.fi {
            let (p, q) = (a.lattice.get(l), a.lattice.get(m));
            let direct = a.odot(p, q);
            let via = a.odot_via_ke(p, q);
            c.expect(direct == via, || {
                format!("X = {}, Y = {}: ⊙ = {}, Ke = {}", x.label(l), x.label(m), direct.label(&a.module), via.label(&a.module))
            });
        }
    }
    Ok(())
}

fn ro_inn(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("self-injective", x.preds.self_injective);
    let a = x.a;
    let n_elems = a.module.element_count() as usize;
    for &l in a.fi.iter().filter(|&&l| l != a.lattice.zero()) {
        let members: Vec<u32> = a.lattice.get(l).members().collect();
        let (sub, embedding) = a.module.restrict_to(&members).expect("non-zero submodule");
        let inner = Analysis::new(Arc::new(sub), a.bounds)?;
        let back: HashMap<u32, u32> = embedding.iter().enumerate().map(|(i, &y)| (y, i as u32)).collect();
        let to_outer = |s: &Submodule| {
            let mut bits = FixedBitSet::with_capacity(n_elems);
            for y in s.members() {
                bits.insert(embedding[y as usize] as usize);
            }
            a.position(&Submodule::from_bits(bits))
        };
        let image: Vec<usize> = inner.points.iter().map(|&p| to_outer(inner.lattice.get(p))).collect();
        let mut sorted = image.clone();
        sorted.sort_unstable();
        let inside: Vec<usize> = a.points.iter().copied().filter(|&k| x.leq(k, l)).collect();
        let contained = inside.iter().all(|k| sorted.contains(k));
        c.expect(contained, || format!("L = {}: a point of M inside L is not a point of L", x.label(l)));
        c.expect(sorted == inside, || format!("L = {}: points of L differ from points of M inside L", x.label(l)));
        let inner_space = choose_space(&inner)?;
        for nn in 0..a.lattice.len() {
            let mut pre = FixedBitSet::with_capacity(inner.points.len());
            for (i, &img) in image.iter().enumerate() {
                if x.leq(img, nn) {
                    pre.insert(i);
                }
            }
            let mut meet = FixedBitSet::with_capacity(inner.module.element_count() as usize);
            for y in a.lattice.get(nn).meet(a.lattice.get(l)).members() {
                meet.insert(back[&y] as usize);
            }
            let meet = inner.position(&Submodule::from_bits(meet));
            c.expect(pre == inner.v_fc(meet), || format!("L = {}, N = {}: preimage ≠ V(N ∩ L)", x.label(l), x.label(nn)));
            c.expect(inner_space.space.is_closed(&pre), || format!("L = {}, N = {}: preimage not closed", x.label(l), x.label(nn)));
        }
    }
    Ok(())
}

fn fc_max(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("self-injective", x.preds.self_injective);
    c.gate("f.i.-atomic", x.preds.fi_atomic);
    let a = x.a;
    for &l in a.fi.iter().filter(|&&l| l != a.lattice.zero()) {
        c.expect(!a.maximal_under(l).is_empty(), || format!("nothing maximal under {}", x.label(l)));
    }
    Ok(())
}

fn sub_cop(x: &Ctx, c: &mut Check) -> Result<()> {
    c.gate("self-injective", x.preds.self_injective);
    let a = x.a;
    let fs = a.fi_simples();
    for &s in &fs {
        c.expect(a.points.contains(&s), || format!("{} is not a point", x.label(s)));
    }
    if x.preds.fi_atomic {
        for &l in a.fi.iter().filter(|&&l| l != a.lattice.zero()) {
            let v = a.v_fc(l);
            let under: Vec<usize> = fs.iter().copied().filter(|&s| x.leq(s, l)).collect();
            c.expect(!under.is_empty(), || format!("no minimal fully invariant submodule under {}", x.label(l)));
            for s in under {
                c.expect(x.point_index(s).is_some_and(|p| v.contains(p)), || format!("{} not in V({})", x.label(s), x.label(l)));
            }
        }
        c.note("f.i.-atomic: inclusion in every V(L) checked");
    }
    Ok(())
}

/// Checks that an isomorphism `θ: M → N` (as an element table) induces a
/// bijection of spectra that is a homeomorphism, with matching topological
/// records and `θ(Corad M) = Corad N`.
pub fn check_isomorphism_invariance(m: &Analysis, n: &Analysis, theta: &[u32]) -> Result<TheoremCheck> {
    let theorem = Theorem {
        id: "remark-simple-char-7",
        statement: "an isomorphism M ≅ N induces a homeomorphism of spectra and maps Corad(M) onto Corad(N)",
        kind: CheckKind::Evidence,
        run: |_, _| Ok(()),
    };
    let mut c = Check::default();
    let size = n.module.element_count() as usize;
    let mut hit = FixedBitSet::with_capacity(size);
    for &y in theta {
        hit.insert(y as usize);
    }
    let linear = theta.len() == m.module.element_count() as usize
        && hit.is_full()
        && (0..theta.len() as u32).all(|x| {
            (0..m.module.ring().generator_count())
                .all(|g| theta[m.module.act_gen(g, x) as usize] == n.module.act_gen(g, theta[x as usize]))
                && (0..theta.len() as u32).all(|y| {
                    theta[m.module.additive().add(x, y) as usize] == n.module.additive().add(theta[x as usize], theta[y as usize])
                })
        });
    c.gate("θ is an isomorphism", linear);
    if !linear {
        return Ok(c.finish(&theorem));
    }
    let image = |s: &Submodule| {
        let mut bits = FixedBitSet::with_capacity(size);
        for x in s.members() {
            bits.insert(theta[x as usize] as usize);
        }
        n.position(&Submodule::from_bits(bits))
    };
    let mapped: Vec<Option<usize>> = m.points.iter().map(|&k| n.points.binary_search(&image(m.lattice.get(k))).ok()).collect();
    let distinct: BTreeSet<usize> = mapped.iter().flatten().copied().collect();
    let bijective = mapped.iter().all(Option::is_some) && distinct.len() == n.points.len();
    c.expect(bijective, || "θ does not biject the spectra".into());
    let corad_m = m.corad_fc(m.lattice.top());
    let corad_n = n.corad_fc(n.lattice.top());
    c.expect(image(m.lattice.get(corad_m)) == corad_n, || format!("θ({}) ≠ {}", m.label(corad_m), n.label(corad_n)));
    if bijective {
        let perm: Vec<usize> = mapped.iter().map(|p| p.expect("checked")).collect();
        let sm = choose_space(m)?;
        let sn = choose_space(n)?;
        let moved: BTreeSet<Vec<usize>> = sm
            .space
            .closed_sets()
            .iter()
            .map(|s| {
                let mut v: Vec<usize> = s.ones().map(|p| perm[p]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        let target: BTreeSet<Vec<usize>> = sn.space.closed_sets().iter().map(|s| s.ones().collect()).collect();
        c.expect(moved == target, || "closed sets do not correspond".into());
        let (a, b) = (&sm.space, &sn.space);
        c.expect(a.separation() == b.separation(), || "separation records differ".into());
        c.expect(a.connectivity() == b.connectivity(), || "connectivity records differ".into());
        c.expect(a.is_sober() == b.is_sober(), || "soberness differs".into());
        c.expect(a.chain_conditions() == b.chain_conditions(), || "chain conditions differ".into());
        c.expect(a.compactness().compact == b.compactness().compact, || "compactness differs".into());
    }
    Ok(c.finish(&theorem))
}
