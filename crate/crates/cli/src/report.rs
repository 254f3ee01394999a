//! Report documents: one serde tree per command, rendered as aligned text or
//! as pretty JSON with a fixed key order.

use std::fmt::Write;

use fcspec::topology::{ChainConditions, Compactness, Connectivity, Separation};
use fcspec::{Analysis, ClassPredicates, Outcome, SpectrumSpace, TopologyKind, Verdict, VerificationReport};
use serde::Serialize;

pub const SCHEMA: &str = "fcspec/report-v1";

#[derive(Debug, Serialize)]
pub struct ModuleSummary {
    pub name: String,
    pub elements: u64,
    pub ring_elements: u64,
    pub submodules: usize,
    pub fully_invariant: usize,
    pub endomorphisms: usize,
    pub duo: bool,
}

impl ModuleSummary {
    pub fn of(name: &str, a: &Analysis) -> Self {
        ModuleSummary {
            name: name.to_string(),
            elements: a.module().element_count(),
            ring_elements: a.module().ring().element_count(),
            submodules: a.lattice().len(),
            fully_invariant: a.fully_invariant().len(),
            endomorphisms: a.endo().len(),
            duo: a.is_duo(),
        }
    }

    fn render(&self, out: &mut String) {
        writeln!(
            out,
            "module {}: {} elements over a ring of {}; {} submodules ({} fully invariant); |S| = {}; {}",
            self.name,
            self.elements,
            self.ring_elements,
            self.submodules,
            self.fully_invariant,
            self.endomorphisms,
            if self.duo { "duo" } else { "not duo" }
        )
        .unwrap();
    }
}

fn labels(a: &Analysis, positions: &[usize]) -> Vec<String> {
    positions.iter().map(|&i| a.label(i)).collect()
}

fn list(xs: &[String]) -> String {
    if xs.is_empty() {
        "(none)".to_string()
    } else {
        xs.join(", ")
    }
}

#[derive(Debug, Serialize)]
pub struct SpecDocument {
    pub schema: &'static str,
    pub command: &'static str,
    pub module: ModuleSummary,
    pub spectrum: Vec<String>,
    pub coprimeless: bool,
    pub fully_invariant: Vec<String>,
    pub fc_coradical: Vec<String>,
    pub e_prime: Vec<String>,
    pub simples: Vec<String>,
    pub socle: String,
    pub predicates: ClassPredicates,
}

impl SpecDocument {
    pub fn build(name: &str, a: &Analysis) -> fcspec::Result<Self> {
        Ok(SpecDocument {
            schema: SCHEMA,
            command: "spec",
            module: ModuleSummary::of(name, a),
            spectrum: labels(a, a.points()),
            coprimeless: a.points().is_empty(),
            fully_invariant: labels(a, a.fully_invariant()),
            fc_coradical: labels(a, &a.fc_coradical_submodules()),
            e_prime: labels(a, &a.e_prime_submodules()?),
            simples: labels(a, &a.simples()),
            socle: a.label(a.socle()),
            predicates: a.class_predicates()?,
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.module.render(&mut out);
        let n = self.spectrum.len();
        writeln!(out, "spectrum: {} point{}", n, if n == 1 { "" } else { "s" }).unwrap();
        for p in &self.spectrum {
            writeln!(out, "  {p}").unwrap();
        }
        if self.coprimeless {
            writeln!(out, "  (fc-coprimeless)").unwrap();
        }
        writeln!(out, "fully invariant: {}", list(&self.fully_invariant)).unwrap();
        writeln!(out, "fc-coradical:    {}", list(&self.fc_coradical)).unwrap();
        writeln!(out, "E-prime:         {}", list(&self.e_prime)).unwrap();
        writeln!(out, "simples:         {}", list(&self.simples)).unwrap();
        writeln!(out, "socle:           {}", self.socle).unwrap();
        writeln!(out, "predicates:").unwrap();
        let p = &self.predicates;
        let rows = [
            ("duo", p.duo),
            ("self-injective", p.self_injective),
            ("self-cogenerator", p.self_cogenerator),
            ("intrinsically injective", p.intrinsically_injective),
            ("colocal", p.colocal),
            ("uniform", p.uniform),
            ("atomic", p.atomic),
            ("f.i.-atomic", p.fi_atomic),
            ("S-IAD", p.s_iad),
            ("multiplication", p.multiplication),
            ("comultiplication", p.comultiplication),
            ("fully coprime module", p.fully_coprime_module),
            ("B-coprime", p.b_coprime),
            ("min-property", p.min_property),
        ];
        for (name, v) in rows {
            writeln!(out, "  {name:<24} {}", yes_no(v)).unwrap();
        }
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn outcome(o: Outcome) -> &'static str {
    match o {
        Outcome::Holds => "yes",
        Outcome::Fails => "no",
        Outcome::Vacuous => "vacuous",
    }
}

#[derive(Debug, Serialize)]
pub struct ClosedSetDoc {
    pub points: Vec<String>,
    /// The fc-coradical submodule whose variety this is.
    pub generator: String,
}

#[derive(Debug, Serialize)]
pub struct IrreducibleDoc {
    pub points: Vec<String>,
    pub generic_points: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct TopologyDocument {
    pub schema: &'static str,
    pub command: &'static str,
    pub module: ModuleSummary,
    pub kind: TopologyKind,
    pub is_top_fc: bool,
    pub summary: String,
    pub points: Vec<String>,
    pub closed_sets: Vec<ClosedSetDoc>,
    pub separation: Separation,
    pub connectivity: Connectivity,
    pub sober: bool,
    pub irreducible_closed_sets: Vec<IrreducibleDoc>,
    pub components: Vec<Vec<String>>,
    pub specialization_covers: Vec<(String, String)>,
    pub chain_conditions: ChainConditions,
    pub compactness: Compactness,
}

/// `one point; connected, irreducible` or `2 points; discrete, T2, disconnected, sober`.
fn summarize(sep: &Separation, conn: &Connectivity, sober: bool, n: usize) -> String {
    let mut parts: Vec<&str> = Vec::new();
    let size = match n {
        0 => return "empty space".to_string(),
        1 => "one point".to_string(),
        n => format!("{n} points"),
    };
    if n > 1 {
        if sep.discrete.holds() {
            parts.push("discrete");
        }
        parts.push(if sep.t2.holds() {
            "T2"
        } else if sep.t1.holds() {
            "T1"
        } else {
            "T0"
        });
    }
    parts.push(if conn.connected.holds() { "connected" } else { "disconnected" });
    if conn.irreducible.holds() {
        parts.push("irreducible");
    }
    if n > 1 && sober {
        parts.push("sober");
    }
    format!("{size}; {}", parts.join(", "))
}

impl TopologyDocument {
    pub fn build(name: &str, a: &Analysis, sp: &SpectrumSpace) -> Self {
        let s = &sp.space;
        let names = |set: &fixedbitset::FixedBitSet| -> Vec<String> { set.ones().map(|i| s.labels()[i].clone()).collect() };
        let separation = s.separation();
        let connectivity = s.connectivity();
        let sober = s.is_sober();
        TopologyDocument {
            schema: SCHEMA,
            command: "topology",
            module: ModuleSummary::of(name, a),
            kind: sp.kind,
            is_top_fc: sp.is_top_fc,
            summary: summarize(&separation, &connectivity, sober, s.len()),
            points: s.labels().to_vec(),
            closed_sets: s
                .closed_sets()
                .iter()
                .zip(&sp.generators)
                .map(|(c, &g)| ClosedSetDoc { points: names(c), generator: a.label(g) })
                .collect(),
            separation,
            connectivity,
            sober,
            irreducible_closed_sets: s
                .irreducible_closed_sets()
                .iter()
                .map(|c| IrreducibleDoc {
                    points: names(&c.set),
                    generic_points: c.generic_points.iter().map(|&i| s.labels()[i].clone()).collect(),
                })
                .collect(),
            components: s.components().iter().map(names).collect(),
            specialization_covers: s
                .specialization()
                .covers
                .iter()
                .map(|&(x, y)| (s.labels()[x].clone(), s.labels()[y].clone()))
                .collect(),
            chain_conditions: s.chain_conditions(),
            compactness: s.compactness(),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.module.render(&mut out);
        let kind = match self.kind {
            TopologyKind::AllSubmodules => "varieties of all submodules",
            TopologyKind::FullyInvariant => "varieties of fully invariant submodules",
        };
        writeln!(out, "topology: {kind}").unwrap();
        writeln!(out, "all varieties closed under unions: {}", yes_no(self.is_top_fc)).unwrap();
        writeln!(out, "summary: {}", self.summary).unwrap();
        writeln!(out, "points: {}", list(&self.points)).unwrap();
        writeln!(out, "closed sets: {}", self.closed_sets.len()).unwrap();
        for c in &self.closed_sets {
            writeln!(out, "  {{{}}} = V({})", c.points.join(", "), c.generator).unwrap();
        }
        let sep = &self.separation;
        writeln!(
            out,
            "separation: T0 {}, T1 {}, T2 {}, discrete {}",
            outcome(sep.t0),
            outcome(sep.t1),
            outcome(sep.t2),
            outcome(sep.discrete)
        )
        .unwrap();
        let conn = &self.connectivity;
        writeln!(
            out,
            "connectivity: connected {}, irreducible {}, ultraconnected {}",
            outcome(conn.connected),
            outcome(conn.irreducible),
            outcome(conn.ultraconnected)
        )
        .unwrap();
        writeln!(out, "sober: {}", yes_no(self.sober)).unwrap();
        writeln!(out, "irreducible closed sets:").unwrap();
        for c in &self.irreducible_closed_sets {
            writeln!(out, "  {{{}}} generic {}", c.points.join(", "), list(&c.generic_points)).unwrap();
        }
        writeln!(out, "components:").unwrap();
        for c in &self.components {
            writeln!(out, "  {{{}}}", c.join(", ")).unwrap();
        }
        writeln!(out, "specialization covers:").unwrap();
        for (x, y) in &self.specialization_covers {
            writeln!(out, "  {x} < {y}").unwrap();
        }
        let ch = &self.chain_conditions;
        writeln!(
            out,
            "chains: longest {}, noetherian {}, artinian {}",
            ch.longest_chain,
            yes_no(ch.noetherian),
            yes_no(ch.artinian)
        )
        .unwrap();
        writeln!(
            out,
            "compact {}, countably compact {}",
            yes_no(self.compactness.compact),
            yes_no(self.compactness.countably_compact)
        )
        .unwrap();
        out
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Totals {
    pub modules: usize,
    pub verified: usize,
    pub vacuous: usize,
    pub falsified: usize,
}

impl Totals {
    pub fn of<'a>(reports: impl IntoIterator<Item = &'a VerificationReport>) -> Self {
        let mut t = Totals::default();
        for r in reports {
            t.modules += 1;
            t.verified += r.count(Verdict::Verified);
            t.vacuous += r.count(Verdict::Vacuous);
            t.falsified += r.count(Verdict::Falsified);
        }
        t
    }

    fn render(&self, out: &mut String) {
        writeln!(
            out,
            "total: {} module{}; {} verified, {} vacuous, {} falsified",
            self.modules,
            if self.modules == 1 { "" } else { "s" },
            self.verified,
            self.vacuous,
            self.falsified
        )
        .unwrap();
    }
}

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Verified => "verified",
        Verdict::Vacuous => "vacuous",
        Verdict::Falsified => "FALSIFIED",
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyDocument {
    pub schema: &'static str,
    pub command: &'static str,
    pub reports: Vec<VerificationReport>,
    pub totals: Totals,
}

impl VerifyDocument {
    pub fn new(reports: Vec<VerificationReport>) -> Self {
        let totals = Totals::of(&reports);
        VerifyDocument { schema: SCHEMA, command: "verify", reports, totals }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            writeln!(
                out,
                "module {}: {} elements, {} submodules, |S| = {}, spectrum [{}]",
                r.module,
                r.element_count,
                r.submodule_count,
                r.endomorphism_count,
                r.spectrum.join(", ")
            )
            .unwrap();
            let width = r.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
            for c in &r.checks {
                let unmet: Vec<&str> = c.hypotheses.iter().filter(|h| !h.holds).map(|h| h.name.as_str()).collect();
                let mut line = format!("  {:<width$}  {}", c.id, verdict(c.verdict));
                if !unmet.is_empty() {
                    write!(line, " (unmet: {})", unmet.join(", ")).unwrap();
                }
                writeln!(out, "{line}").unwrap();
                if c.verdict == Verdict::Falsified {
                    for w in &c.witnesses {
                        writeln!(out, "      witness: {w}").unwrap();
                    }
                }
            }
        }
        self.totals.render(&mut out);
        out
    }
}

#[derive(Debug, Serialize)]
pub struct FuzzLine {
    pub module: String,
    pub elements: u64,
    pub duo: bool,
    pub verified: usize,
    pub vacuous: usize,
    pub falsified: usize,
    pub falsified_checks: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct FuzzDocument {
    pub schema: &'static str,
    pub command: &'static str,
    pub seed: u64,
    pub count: usize,
    pub max_size: u64,
    pub duo_modules: usize,
    pub non_duo_modules: usize,
    pub modules: Vec<FuzzLine>,
    pub totals: Totals,
}

impl FuzzDocument {
    pub fn new(seed: u64, max_size: u64, reports: &[VerificationReport]) -> Self {
        let modules: Vec<FuzzLine> = reports
            .iter()
            .map(|r| FuzzLine {
                module: r.module.clone(),
                elements: r.element_count,
                duo: r.predicates.duo,
                verified: r.count(Verdict::Verified),
                vacuous: r.count(Verdict::Vacuous),
                falsified: r.count(Verdict::Falsified),
                falsified_checks: r.falsified().map(|c| c.id.to_string()).collect(),
            })
            .collect();
        let duo = modules.iter().filter(|m| m.duo).count();
        FuzzDocument {
            schema: SCHEMA,
            command: "fuzz",
            seed,
            count: reports.len(),
            max_size,
            duo_modules: duo,
            non_duo_modules: modules.len() - duo,
            modules,
            totals: Totals::of(reports),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "fuzz: seed {}, {} modules of at most {} elements", self.seed, self.count, self.max_size).unwrap();
        for m in &self.modules {
            write!(
                out,
                "  {} ({} elements, {}): {} verified, {} vacuous, {} falsified",
                m.module,
                m.elements,
                if m.duo { "duo" } else { "not duo" },
                m.verified,
                m.vacuous,
                m.falsified
            )
            .unwrap();
            if !m.falsified_checks.is_empty() {
                write!(out, " [{}]", m.falsified_checks.join(", ")).unwrap();
            }
            out.push('\n');
        }
        writeln!(out, "duo modules: {}, non-duo modules: {}", self.duo_modules, self.non_duo_modules).unwrap();
        self.totals.render(&mut out);
        out
    }
}

#[derive(Debug, Serialize)]
pub struct CatalogLine {
    pub name: &'static str,
    pub description: &'static str,
    pub elements: u64,
}

#[derive(Debug, Serialize)]
pub struct CatalogDocument {
    pub schema: &'static str,
    pub command: &'static str,
    pub entries: Vec<CatalogLine>,
}

impl CatalogDocument {
    pub fn build() -> fcspec::Result<Self> {
        let entries = fcspec::catalog::entries()
            .iter()
            .map(|e| Ok(CatalogLine { name: e.name, description: e.description, elements: e.build()?.element_count() }))
            .collect::<fcspec::Result<_>>()?;
        Ok(CatalogDocument { schema: SCHEMA, command: "catalog", entries })
    }

    pub fn render(&self) -> String {
        let width = self.entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for e in &self.entries {
            writeln!(out, "{:<width$}  {:>3} elements  {}", e.name, e.elements, e.description).unwrap();
        }
        out
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
    s.push('\n');
    s
}
