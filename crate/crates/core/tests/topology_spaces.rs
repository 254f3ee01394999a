//! Concrete spectrum spaces and their topological records.

mod common;

use std::sync::Arc;

use common::{analyse, bitset, pos};
use fcspec::hom::find_isomorphism;
use fcspec::verifier::check_isomorphism_invariance;
use fcspec::{catalog, Analysis, Bounds, Outcome, TopologyKind, Verdict};

fn closed_sets(a: &Analysis, kind: TopologyKind) -> Vec<Vec<usize>> {
    a.build_space(kind).unwrap().space.closed_sets().iter().map(|c| c.ones().collect()).collect()
}

#[test]
fn z4_is_a_single_point() {
    let a = analyse("Z4");
    let sp = a.build_space(TopologyKind::AllSubmodules).unwrap();
    assert_eq!(sp.space.labels(), ["⟨2⟩"]);
    assert_eq!(closed_sets(&a, TopologyKind::AllSubmodules), vec![vec![], vec![0]]);
    let sep = sp.space.separation();
    assert_eq!((sep.t0, sep.t1, sep.t2, sep.discrete), (Outcome::Holds, Outcome::Holds, Outcome::Holds, Outcome::Holds));
    let conn = sp.space.connectivity();
    assert_eq!((conn.connected, conn.irreducible, conn.ultraconnected), (Outcome::Holds, Outcome::Holds, Outcome::Holds));
    assert!(sp.space.is_sober());
    // coradicals {0, 2M} correspond to closed sets {∅, {2M}}
    assert_eq!(sp.generators, vec![a.lattice().zero(), pos(&a, &[&[2]])]);
}

#[test]
fn z2_x_z3_is_a_discrete_pair() {
    let a = analyse("Z2xZ3");
    let sp = a.build_space(TopologyKind::AllSubmodules).unwrap();
    let s = &sp.space;
    assert_eq!(s.len(), 2);
    assert_eq!(s.closed_sets().len(), 4);
    let sep = s.separation();
    assert!(sep.t2.holds() && sep.discrete.holds());
    assert_eq!(s.connectivity().connected, Outcome::Fails);
    assert_eq!(s.connectivity().irreducible, Outcome::Fails);
    assert_eq!(s.connectivity().ultraconnected, Outcome::Fails);
    assert!(s.is_sober());
    assert_eq!(a.fc_coradical_submodules().len(), s.closed_sets().len());

    // components are the varieties of the two maximal points
    let components = s.components();
    assert_eq!(components.len(), 2);
    for (p, &k) in a.points().iter().enumerate() {
        assert!(components.contains(&a.v_fc(k)));
        assert_eq!(s.closure(&s.singleton(p)), a.v_fc(k));
    }

    let z2 = a.points().iter().position(|&k| k == pos(&a, &[&[1, 0]])).unwrap();
    let only = bitset(2, &[z2]);
    assert_eq!(s.closure(&only), only);
    assert_eq!(a.closure_by_formula(&only), only);
    assert_eq!(s.closure(&bitset(2, &[])), bitset(2, &[]));

    let both = bitset(2, &[0, 1]);
    assert!(!s.is_irreducible_subset(&both));
    assert!(!a.is_fully_coprime_in(a.submodule(a.hull(&both))).unwrap());

    // open cover by complements of singletons
    let cover = [s.complement(&s.singleton(0)), s.complement(&s.singleton(1))];
    let sub = s.finite_subcover(&cover).unwrap();
    assert_eq!(sub.len(), 2);
    assert!(s.compactness().compact);
}

#[test]
fn v4_fully_invariant_space_is_one_point_on_m() {
    let a = analyse("V4overF2");
    let sp = a.build_space(TopologyKind::FullyInvariant).unwrap();
    assert_eq!(sp.space.len(), 1);
    assert!(a.submodule(a.points()[0]).is_full());
    assert_eq!(closed_sets(&a, TopologyKind::FullyInvariant), vec![vec![], vec![0]]);
}

#[test]
fn chain_spectra_are_irreducible_sierpinski_spaces() {
    for name in ["T2F2", "Z4xZ2"] {
        let a = analyse(name);
        let s = a.build_space(TopologyKind::AllSubmodules).unwrap().space;
        assert_eq!(s.len(), 2, "{name}");
        assert_eq!(s.connectivity().irreducible, Outcome::Holds, "{name}");
        assert_eq!(s.separation().t0, Outcome::Holds);
        assert_eq!(s.separation().t1, Outcome::Fails);
        assert_eq!(s.specialization().covers, vec![(0, 1)]);
        assert!(s.is_sober());
    }
}

#[test]
fn every_catalog_space_is_t0_compact_and_finite_length() {
    for e in catalog::entries() {
        let a = analyse(e.name);
        let sp = a.build_space(TopologyKind::AllSubmodules).unwrap();
        assert!(sp.is_top_fc);
        let s = &sp.space;
        assert!(s.separation().t0.holds(), "{}", e.name);
        assert!(s.compactness().compact && s.compactness().countably_compact);
        let chains = s.chain_conditions();
        assert!(chains.noetherian && chains.artinian);
        assert_eq!(chains.closed_set_count, a.fc_coradical_submodules().len(), "{}", e.name);
        for (l, v) in sp.variety_of.iter().enumerate() {
            let v = v.expect("every variety is a closed set");
            assert_eq!(sp.generators[v], a.corad_fc(l));
        }
    }
}

fn invariance(m: &Analysis, n: &Analysis, theta: &[u32]) {
    let check = check_isomorphism_invariance(m, n, theta).unwrap();
    assert_eq!(check.verdict, Verdict::Verified, "{:?}", check);
}

#[test]
fn scrambled_copy_of_z6_is_homeomorphic() {
    let m = analyse("Z6");
    let n = analyse("Z6-scrambled");
    let theta = find_isomorphism(m.module(), n.module(), &Bounds::default()).unwrap().expect("isomorphic");
    invariance(&m, &n, &theta);
    assert!(find_isomorphism(analyse("Z4").module(), analyse("Z2").module(), &Bounds::default()).unwrap().is_none());
}

#[test]
fn relabelled_copies_of_catalog_modules_are_homeomorphic() {
    for e in catalog::entries() {
        let m = analyse(e.name);
        let orders = m.module().orders().to_vec();
        let perm: Vec<usize> = (0..orders.len()).rev().collect();
        let units: Vec<u32> = perm.iter().map(|&p| orders[p] - 1).collect();
        let (copy, theta) = m.module().relabelled(&perm, &units).unwrap();
        let n = Analysis::new(Arc::new(copy), Bounds::default()).unwrap();
        invariance(&m, &n, &theta);
    }
}

#[test]
fn non_isomorphism_is_rejected() {
    let m = analyse("Z6");
    let identity: Vec<u32> = (0..6).collect();
    let check = check_isomorphism_invariance(&m, &analyse("Z2xZ3"), &identity).unwrap();
    assert_ne!(check.verdict, Verdict::Verified);
}
