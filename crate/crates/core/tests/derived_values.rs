//! Small hand-checkable values, frozen after agreeing with the oracles.

mod common;

use std::collections::BTreeSet;

use common::{analyse, elem, members, point_labels, pos, span};
use fcspec::hom::hom_count;
use fcspec::lattice::{colon_module, colon_ring};
use fcspec::{Analysis, Bounds, Side, Submodule};

/// Multipliers of the endomorphisms in an ideal of `End(Z/n)`.
fn multipliers(a: &Analysis, ideal: &fcspec::EndoIdeal) -> BTreeSet<u32> {
    ideal.members().map(|f| a.endo().endomorphism(f).matrix[0][0]).collect()
}

fn set(xs: &[u32]) -> BTreeSet<u32> {
    xs.iter().copied().collect()
}

#[test]
fn submodule_lattices() {
    assert_eq!(analyse("Z4").lattice().len(), 3);
    assert_eq!(analyse("Z2xZ3").lattice().len(), 4);
    assert_eq!(analyse("Z2").lattice().len(), 2);
    let z4 = analyse("Z4");
    assert_eq!(members(&span(&z4, &[&[2]])), set(&[0, 2]));
    let m = analyse("Z2xZ3");
    assert!(span(&m, &[&[1, 1]]).is_full());
    assert!(span(&m, &[&[0, 0]]).is_zero());
}

#[test]
fn colon_ideals_and_submodules() {
    let a = analyse("Z4");
    let m = a.module();
    let r = |x: u32| m.ring().additive().encode(&[x]);
    let full = Submodule::full(m);
    let zero = Submodule::zero(m);
    assert_eq!(colon_ring(&full, m).len(), 4);
    assert_eq!(set(&colon_ring(&span(&a, &[&[2]]), m)), set(&[r(0), r(2)]));
    assert_eq!(colon_ring(&zero, m), vec![r(0)]);
    assert_eq!(colon_module(&zero, &[r(2)], m).unwrap(), span(&a, &[&[2]]));
    assert!(colon_module(&zero, &[0, 1, 2, 3], m).unwrap().is_zero());
    assert!(colon_module(&zero, &[r(0)], m).unwrap().is_full());
}

#[test]
fn hom_counts_and_endomorphism_ring_sizes() {
    let a = analyse("Z4");
    let b = Bounds::default();
    let m = a.module();
    assert_eq!(hom_count(m, &Submodule::full(m), m, &b).unwrap(), 4);
    assert_eq!(hom_count(m, &span(&a, &[&[2]]), m, &b).unwrap(), 2);
    assert_eq!(hom_count(m, &Submodule::zero(m), m, &b).unwrap(), 1);
    assert_eq!(analyse("Z4").endo().len(), 4);
    assert_eq!(analyse("Z2xZ3").endo().len(), 6);
    assert_eq!(analyse("V4overF2").endo().len(), 16);
    assert_eq!(analyse("M2F2-column").endo().len(), 2);
    assert_eq!(analyse("T2F2").endo().len(), 8);
    assert_eq!(analyse("Z4xZ2").endo().len(), 32);
}

#[test]
fn annihilators_and_kernels() {
    let a = analyse("Z4");
    let two = pos(&a, &[&[2]]);
    assert_eq!(multipliers(&a, a.an(two)), set(&[0, 2]));
    assert_eq!(multipliers(&a, a.an(a.lattice().top())), set(&[0]));
    assert!(a.an(a.lattice().zero()).is_full());
    let endo = a.endo();
    assert!(endo.ke(std::iter::empty()).is_full());
    assert!(endo.ke([endo.identity()]).is_zero());
    let double = (0..4).find(|&f| endo.endomorphism(f).matrix[0][0] == 2).unwrap();
    assert_eq!(endo.ke([double]), span(&a, &[&[2]]));
}

#[test]
fn invariance_and_module_classes() {
    let v4 = analyse("V4overF2");
    assert!(!v4.is_fully_invariant_at(pos(&v4, &[&[1, 0]])));
    assert!(!v4.is_duo());
    let m = analyse("Z2xZ3");
    assert!(m.is_fully_invariant_at(pos(&m, &[&[1, 0]])));
    assert!(m.is_duo());
    let z4 = analyse("Z4");
    assert!(z4.is_duo());
    assert!(z4.is_self_injective().unwrap());
    assert!(analyse("Z2").is_self_injective().unwrap());
    assert!(z4.is_self_cogenerator());
    assert!(m.is_self_cogenerator());
    assert!(z4.is_intrinsically_injective().unwrap());
}

#[test]
fn ideals_primes_and_prime_radical() {
    let b = Bounds::default();
    assert_eq!(analyse("Z2").endo().ideals(Side::TwoSided, &b).unwrap().len(), 2);
    assert_eq!(analyse("V4overF2").endo().ideals(Side::TwoSided, &b).unwrap().len(), 2);
    let z4 = analyse("Z4");
    let ideals: Vec<_> = z4.endo().ideals(Side::TwoSided, &b).unwrap().iter().map(|i| multipliers(&z4, i)).collect();
    assert_eq!(ideals, vec![set(&[0]), set(&[0, 2]), set(&[0, 1, 2, 3])]);

    let primes: Vec<_> = z4.prime_ideals().unwrap().iter().map(|p| multipliers(&z4, p)).collect();
    assert_eq!(primes, vec![set(&[0, 2])]);
    assert_eq!(multipliers(&z4, &z4.endo().prad(&b).unwrap()), set(&[0, 2]));

    let z6 = analyse("Z6");
    let primes: BTreeSet<_> = z6.prime_ideals().unwrap().iter().map(|p| multipliers(&z6, p)).collect();
    assert_eq!(primes, BTreeSet::from([set(&[0, 2, 4]), set(&[0, 3])]));
    assert!(z6.endo().prad(&b).unwrap().is_zero());

    let v4 = analyse("V4overF2");
    let primes = v4.prime_ideals().unwrap();
    assert_eq!(primes.len(), 1);
    assert!(primes[0].is_zero());
    assert!(v4.endo().prad(&b).unwrap().is_zero());

    for name in ["Z4", "Z6", "Z2"] {
        assert!(analyse(name).every_prime_maximal().unwrap(), "{name}");
    }
}

#[test]
fn odot_on_z4() {
    let a = analyse("Z4");
    let two = span(&a, &[&[2]]);
    let zero = Submodule::zero(a.module());
    let full = Submodule::full(a.module());
    assert!(a.odot(&two, &two).is_full());
    assert_eq!(a.odot(&two, &zero), two);
    assert_eq!(a.odot(&zero, &two), two);
    for x in a.lattice().all() {
        assert!(a.odot(x, &full).is_full());
        // An(M) = 0
        assert!(a.odot(&full, x).is_full());
        for y in a.lattice().all() {
            assert_eq!(a.odot_via_ke(x, y), a.odot(x, y));
        }
    }
}

#[test]
fn fully_coprime_submodules() {
    let a = analyse("Z4");
    assert!(a.is_fully_coprime_in(&span(&a, &[&[2]])).unwrap());
    assert!(!a.is_fully_coprime_in(&Submodule::full(a.module())).unwrap());
    assert!(a.is_fully_coprime_in(&Submodule::zero(a.module())).is_err());
    let m = analyse("Z2xZ3");
    assert!(m.is_fully_coprime_in(&span(&m, &[&[1, 0]])).unwrap());
    assert!(!m.is_fully_coprime_in(&Submodule::full(m.module())).unwrap());
    let v4 = analyse("V4overF2");
    assert!(v4.is_fully_coprime_in(&span(&v4, &[&[1, 0]])).is_err());
}

#[test]
fn catalog_spectra() {
    let expected: &[(&str, &[&str])] = &[
        ("Z2", &["⟨1⟩"]),
        ("Z4", &["⟨2⟩"]),
        ("Z8", &["⟨4⟩"]),
        ("Z9", &["⟨3⟩"]),
        ("Z6", &["⟨3⟩", "⟨2⟩"]),
        ("Z2xZ3", &["⟨(1,0)⟩", "⟨(0,1)⟩"]),
        ("Z6-scrambled", &["⟨(0,1)⟩", "⟨(1,0)⟩"]),
        ("V4overF2", &["⟨(0,1), (1,0)⟩"]),
        ("Z4xZ2", &["⟨(2,0)⟩", "⟨(0,1), (2,0)⟩"]),
        ("M2F2-column", &["⟨(0,1)⟩"]),
        ("T2F2", &["⟨(0,0,1)⟩", "⟨(0,0,1), (0,1,0)⟩"]),
    ];
    for (name, labels) in expected {
        assert_eq!(point_labels(&analyse(name)), *labels, "{name}");
    }
    assert!(analyse("V4overF2").submodule(analyse("V4overF2").points()[0]).is_full());
}

#[test]
fn varieties_and_coradicals() {
    let m = analyse("Z2xZ3");
    let factor = pos(&m, &[&[1, 0]]);
    let v: Vec<usize> = m.v_fc(factor).ones().collect();
    assert_eq!(v.len(), 1);
    assert_eq!(m.points()[v[0]], factor);
    assert_eq!(m.v_fc(m.lattice().zero()).count_ones(..), 0);
    assert_eq!(m.v_fc(m.lattice().top()).count_ones(..), 2);
    assert_eq!(m.corad_fc(m.lattice().top()), m.lattice().top());
    assert_eq!(m.corad_fc(m.lattice().zero()), m.lattice().zero());
    assert_eq!(m.fc_coradical_submodules().len(), 4);

    let z4 = analyse("Z4");
    assert_eq!(z4.corad_fc(z4.lattice().top()), pos(&z4, &[&[2]]));
    assert!(!z4.is_fc_coradical(z4.lattice().top()));
    assert_eq!(z4.fc_coradical_submodules(), vec![z4.lattice().zero(), pos(&z4, &[&[2]])]);
}

#[test]
fn simples_socle_and_min_property() {
    let z4 = analyse("Z4");
    assert_eq!(z4.simples(), vec![pos(&z4, &[&[2]])]);
    assert_eq!(z4.socle(), pos(&z4, &[&[2]]));
    let m = analyse("Z2xZ3");
    assert_eq!(BTreeSet::from_iter(m.simples()), BTreeSet::from([pos(&m, &[&[1, 0]]), pos(&m, &[&[0, 1]])]));
    assert_eq!(m.socle(), m.lattice().top());
    let simple = analyse("M2F2-column");
    assert_eq!(simple.socle(), simple.lattice().top());

    let mp = m.min_property().unwrap();
    assert!(mp.by_sums && mp.by_isomorphism);
    let mp = analyse("V4overF2").min_property().unwrap();
    assert!(!mp.by_sums && !mp.by_isomorphism);
    let mp = z4.min_property().unwrap();
    assert!(mp.by_sums && mp.by_isomorphism);
}

#[test]
fn e_prime_submodules_and_maximal_points() {
    let z4 = analyse("Z4");
    assert_eq!(z4.e_prime_submodules().unwrap(), z4.points().to_vec());
    let m = analyse("Z2xZ3");
    assert_eq!(BTreeSet::from_iter(m.e_prime_submodules().unwrap()), BTreeSet::from_iter(m.points().iter().copied()));
    let v4 = analyse("V4overF2");
    assert_eq!(v4.e_prime_submodules().unwrap(), vec![v4.lattice().top()]);

    assert_eq!(z4.maximal_under(z4.lattice().top()), vec![pos(&z4, &[&[2]])]);
    assert_eq!(BTreeSet::from_iter(m.maximal_under(m.lattice().top())), BTreeSet::from_iter(m.points().iter().copied()));
    let t = analyse("T2F2");
    let top_point = t.points()[1];
    assert_eq!(t.maximal_under(top_point), vec![top_point]);
}

#[test]
fn class_predicate_tables() {
    let p = analyse("Z4").class_predicates().unwrap();
    assert!(p.colocal && p.uniform && p.duo && p.s_iad && p.multiplication && p.comultiplication);
    assert!(p.atomic && !p.fully_coprime_module);
    let p = analyse("Z2xZ3").class_predicates().unwrap();
    assert!(!p.colocal && !p.uniform && p.s_iad);
    let p = analyse("M2F2-column").class_predicates().unwrap();
    assert!(p.fully_coprime_module && p.comultiplication);
    let p = analyse("V4overF2").class_predicates().unwrap();
    assert!(!p.duo && p.self_injective && p.self_cogenerator && p.intrinsically_injective && !p.min_property);
    assert!(p.fully_coprime_module);
    let p = analyse("Z4xZ2").class_predicates().unwrap();
    assert!(!p.duo && !p.self_injective && p.self_cogenerator && !p.intrinsically_injective);
    let p = analyse("T2F2").class_predicates().unwrap();
    assert!(!p.duo && !p.self_injective && !p.self_cogenerator && !p.intrinsically_injective);
}

#[test]
fn element_encoding_is_row_major_over_generators() {
    let m = analyse("Z2xZ3");
    assert_eq!(m.module().element(elem(&m, &[1, 2])).coefficients, vec![1, 2]);
}
