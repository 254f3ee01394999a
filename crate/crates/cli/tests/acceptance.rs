//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero on any FAIL.

mod support;

use std::collections::BTreeSet;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use fcspec::hom::find_isomorphism;
use fcspec::oracle::{submodules, Reference};
use fcspec::verifier::check_isomorphism_invariance;
use fcspec::{catalog, run_all, Analysis, Bounds, TopologyKind, Verdict, VerifyConfig};
use fixedbitset::FixedBitSet;

type Outcome = Result<String, String>;

fn analyse(name: &str) -> Analysis {
    Analysis::new(Arc::new(catalog::get(name).unwrap()), Bounds::default()).unwrap()
}

fn catalog_analyses() -> Vec<(&'static str, Analysis)> {
    catalog::names().into_iter().map(|n| (n, analyse(n))).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn members(a: &Analysis, i: usize) -> BTreeSet<u32> {
    a.submodule(i).members().collect()
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for e in catalog::entries() {
        let module = e.build().unwrap();
        if module.element_count() > 64 {
            continue;
        }
        let a = Analysis::new(Arc::new(module), Bounds::default()).unwrap();
        let engine: BTreeSet<_> = (0..a.lattice().len()).map(|i| members(&a, i)).collect();
        let oracle: BTreeSet<_> = submodules(a.module()).into_iter().collect();
        ensure(engine == oracle && engine.len() == a.lattice().len(), || format!("{}: submodule lattices differ", e.name))?;
        let r = Reference::new(a.module(), 1 << 16).ok_or_else(|| format!("{}: oracle limit", e.name))?;
        let spec: BTreeSet<_> = a.points().iter().map(|&p| members(&a, p)).collect();
        ensure(spec == r.spectrum().into_iter().collect(), || format!("{}: spectra differ", e.name))?;
        checked += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{checked} modules in {:.2}s", elapsed.as_secs_f64()))
}

fn lemma_properties() -> Outcome {
    let mut pairs = 0usize;
    for (name, a) in catalog_analyses() {
        let n = a.lattice().len();
        let full = a.v_fc(a.lattice().top());
        ensure(a.v_fc(a.lattice().zero()).count_ones(..) == 0, || format!("{name}: V(0) ≠ ∅"))?;
        ensure(full.count_ones(..) == a.points().len(), || format!("{name}: V(M) ≠ Spec"))?;
        let mut all = full.clone();
        for i in 0..n {
            all.intersect_with(&a.v_fc(i));
            for j in 0..n {
                let meet = a.position(&a.submodule(i).meet(a.submodule(j)));
                let mut both = a.v_fc(i);
                both.intersect_with(&a.v_fc(j));
                ensure(a.v_fc(meet) == both, || format!("{name}: V(L ∩ L') ≠ V(L) ∩ V(L') at {}, {}", a.label(i), a.label(j)))?;
                pairs += 1;
            }
        }
        let total_meet = (0..n).fold(a.lattice().top(), |acc, i| a.position(&a.submodule(acc).meet(a.submodule(i))));
        ensure(a.v_fc(total_meet) == all, || format!("{name}: intersection of the whole family"))?;
        for &x in a.fully_invariant() {
            for &y in a.fully_invariant() {
                let mut union = a.v_fc(x);
                union.union_with(&a.v_fc(y));
                let sum = a.sum_of([x, y]);
                let odot = a.odot_at(x, y);
                ensure(union == a.v_fc(sum) && union == a.v_fc(odot), || {
                    format!("{name}: V(L) ∪ V(L') vs V(L+L'), V(L⊙L') at {}, {}", a.label(x), a.label(y))
                })?;
            }
        }
        let r = run_all(&a, name, &VerifyConfig::default()).unwrap();
        for id in ["lemma-properties-1", "lemma-properties-2", "lemma-properties-3"] {
            ensure(r.check(id).map(|c| c.verdict) == Some(Verdict::Verified), || format!("{name}: {id} not verified"))?;
        }
    }
    Ok(format!("{pairs} submodule pairs"))
}

fn subsets(n: usize) -> Vec<FixedBitSet> {
    (0u64..1 << n)
        .map(|m| {
            let mut b = FixedBitSet::with_capacity(n);
            (0..n).filter(|i| m >> i & 1 == 1).for_each(|i| b.insert(i));
            b
        })
        .collect()
}

fn closure_formula() -> Outcome {
    let mut count = 0;
    for (name, a) in catalog_analyses() {
        let sp = a.build_space(TopologyKind::AllSubmodules).unwrap().space;
        let n = sp.len();
        ensure(n <= 15, || format!("{name}: {n} points, exhaustive scan expected"))?;
        for s in subsets(n) {
            let mut smallest = sp.full_set();
            for c in sp.closed_sets().iter().filter(|c| s.is_subset(c)) {
                smallest.intersect_with(c);
            }
            ensure(a.closure_by_formula(&s) == smallest, || format!("{name}: closure of {} differs", sp.format_set(&s)))?;
            count += 1;
        }
    }
    Ok(format!("{count} subsets"))
}

fn coradical_bijection() -> Outcome {
    let mut total = 0;
    for (name, a) in catalog_analyses() {
        let sp = a.build_space(TopologyKind::AllSubmodules).unwrap().space;
        let corads = a.fc_coradical_submodules();
        let images: Vec<FixedBitSet> = corads.iter().map(|&l| a.v_fc(l)).collect();
        let distinct: BTreeSet<Vec<usize>> = images.iter().map(|b| b.ones().collect()).collect();
        ensure(distinct.len() == corads.len(), || format!("{name}: V not injective on coradicals"))?;
        ensure(images.iter().all(|b| sp.is_closed(b)) && images.len() == sp.closed_sets().len(), || format!("{name}: V not onto closed sets"))?;
        for (i, &l1) in corads.iter().enumerate() {
            ensure(a.corad_fc(a.hull(&images[i])) == l1, || format!("{name}: Corad(H(V(L))) ≠ L at {}", a.label(l1)))?;
            for (j, &l2) in corads.iter().enumerate() {
                ensure(a.lattice().leq(l1, l2) == images[i].is_subset(&images[j]), || format!("{name}: order not preserved"))?;
            }
        }
        for c in sp.closed_sets() {
            ensure(a.v_fc(a.corad_fc(a.hull(c))) == *c, || format!("{name}: V(Corad(H(C))) ≠ C"))?;
        }
        total += corads.len();
    }
    Ok(format!("{total} coradical submodules"))
}

fn concrete_spectra() -> Outcome {
    let oracle_spec = |a: &Analysis| -> BTreeSet<BTreeSet<u32>> {
        Reference::new(a.module(), 1 << 16).unwrap().spectrum().into_iter().collect()
    };
    let engine_spec = |a: &Analysis| -> BTreeSet<BTreeSet<u32>> { a.points().iter().map(|&p| members(a, p)).collect() };

    let z4 = analyse("Z4");
    let two: BTreeSet<u32> = [0, 2].map(|c| z4.module().additive().encode(&[c])).into();
    ensure(oracle_spec(&z4) == BTreeSet::from([two]), || "Z4: oracle spectrum is not {2M}".into())?;
    ensure(engine_spec(&z4) == oracle_spec(&z4), || "Z4: engine differs from oracle".into())?;

    let m = analyse("Z2xZ3");
    let factor = |c: &[u32], order: u32| -> BTreeSet<u32> {
        (0..order).map(|k| m.module().additive().encode(&c.iter().map(|&x| x * k).collect::<Vec<_>>())).collect()
    };
    let expected = BTreeSet::from([factor(&[1, 0], 2), factor(&[0, 1], 3)]);
    ensure(oracle_spec(&m) == expected, || "Z2xZ3: oracle spectrum is not the two factors".into())?;
    ensure(engine_spec(&m) == expected, || "Z2xZ3: engine differs".into())?;
    let s = m.build_space(TopologyKind::AllSubmodules).unwrap().space;
    let sep = s.separation();
    ensure(sep.discrete.holds() && sep.t2.holds(), || "Z2xZ3: not discrete T2".into())?;
    ensure(!s.connectivity().connected.holds() && s.is_sober(), || "Z2xZ3: connected or not sober".into())?;

    let v4 = analyse("V4overF2");
    let whole: BTreeSet<u32> = (0..4).collect();
    ensure(oracle_spec(&v4) == BTreeSet::from([whole.clone()]), || "V4overF2: oracle spectrum is not {M}".into())?;
    let s = v4.build_space(TopologyKind::FullyInvariant).unwrap().space;
    ensure(s.len() == 1 && members(&v4, v4.points()[0]) == whole, || "V4overF2: f.i. space is not one point on M".into())?;
    Ok("Z4 {⟨2⟩}; Z2xZ3 discrete T2 disconnected sober pair; V4overF2 {M}".into())
}

fn equivalence_theorems() -> Outcome {
    let ids = ["prop-duo-irr", "prop-uniform", "thm-colocal", "prop-T1", "thm-T2", "lemma-bireg", "lemma-min", "prop-corad=", "lemma-inn-ideal", "prop-ro-inn"];
    let mut verified = 0;
    let mut vacuous = 0;
    for (name, a) in catalog_analyses() {
        let r = run_all(&a, name, &VerifyConfig::default()).unwrap();
        for id in ids {
            let c = r.check(id).ok_or_else(|| format!("{name}: {id} missing"))?;
            let gates = c.hypotheses.iter().all(|h| h.holds);
            match c.verdict {
                Verdict::Verified if gates => verified += 1,
                Verdict::Vacuous if !gates => vacuous += 1,
                v => return Err(format!("{name}: {id} is {v:?} with gates {gates}: {:?}", c.witnesses)),
            }
        }
    }
    Ok(format!("{verified} verified, {vacuous} gated out, 0 falsified"))
}

fn homeomorphism_invariance() -> Outcome {
    let m = analyse("Z6");
    let n = analyse("Z6-scrambled");
    let theta = find_isomorphism(m.module(), n.module(), &Bounds::default())
        .unwrap()
        .ok_or_else(|| "no isomorphism Z6 → Z6-scrambled".to_string())?;
    let check = check_isomorphism_invariance(&m, &n, &theta).unwrap();
    ensure(check.verdict == Verdict::Verified, || format!("{:?}: {:?}", check.verdict, check.witnesses))?;
    let sm = m.build_space(TopologyKind::AllSubmodules).unwrap().space;
    let sn = n.build_space(TopologyKind::AllSubmodules).unwrap().space;
    ensure(sm.separation() == sn.separation() && sm.connectivity() == sn.connectivity(), || "records differ".into())?;
    ensure(sm.is_sober() == sn.is_sober() && sm.chain_conditions() == sn.chain_conditions(), || "records differ".into())?;
    let image: BTreeSet<u32> = m.submodule(m.corad_fc(m.lattice().top())).members().map(|x| theta[x as usize]).collect();
    ensure(image == members(&n, n.corad_fc(n.lattice().top())), || "θ(Corad M) ≠ Corad N".into())?;
    Ok(format!("{} points matched", sm.len()))
}

fn fuzz_gate() -> Outcome {
    let args = ["fuzz", "--seed", "1", "--count", "200", "--max-size", "64", "--json"];
    let mut outputs = Vec::new();
    let mut times = Vec::new();
    for _ in 0..2 {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_fcspec")).args(args).output().map_err(|e| e.to_string())?;
        times.push(start.elapsed());
        ensure(out.status.code() == Some(0), || format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)))?;
        outputs.push(out.stdout);
    }
    ensure(times.iter().all(|t| *t < Duration::from_secs(60)), || format!("took {times:?}"))?;
    ensure(outputs[0] == outputs[1], || "reruns differ".into())?;
    let doc: serde_json::Value = serde_json::from_slice(&outputs[0]).map_err(|e| e.to_string())?;
    let falsified = doc["totals"]["falsified"].as_u64().unwrap_or(u64::MAX);
    ensure(falsified == 0, || format!("{falsified} falsified"))?;
    ensure(doc["modules"].as_array().map(Vec::len) == Some(200), || "wrong module count".into())?;
    Ok(format!("200 modules, 0 falsified, {:.1}s and {:.1}s, byte-identical", times[0].as_secs_f64(), times[1].as_secs_f64()))
}

fn cli_contract() -> Outcome {
    let cases = support::cases();
    let failures: Vec<String> = cases
        .iter()
        .filter_map(|c| match support::check(c) {
            support::Outcome::Match => None,
            support::Outcome::Mismatch(m) => Some(m),
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    let codes: BTreeSet<i32> = cases.iter().map(|c| c.exit).collect();
    Ok(format!("{} golden transcripts, exit codes {codes:?} exercised", cases.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("oracle equivalence of lattices and spectra", oracle_equivalence),
        ("variety identities for zero, whole, meets, sums and ⊙", lemma_properties),
        ("closure formula equals smallest closed superset", closure_formula),
        ("varieties biject coradical submodules onto closed sets", coradical_bijection),
        ("concrete spectra of Z4, Z2xZ3 and V4overF2", concrete_spectra),
        ("equivalence theorems verified wherever gated in", equivalence_theorems),
        ("isomorphic copy of Z6 gives a homeomorphic spectrum", homeomorphism_invariance),
        ("fuzz seed 1, 200 modules, at most 64 elements", fuzz_gate),
        ("CLI golden transcripts and exit codes", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
