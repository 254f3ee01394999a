//! Definition-level reference implementations used to cross-check the
//! engine. Nothing here shares code with the fast paths: closures are
//! computed by naive fixpoint iteration, endomorphisms by filtering every
//! candidate matrix, and the coprime test by a direct triple scan.

use std::collections::BTreeSet;

use crate::module::FiniteModule;

/// A set of module element indices.
pub type ElementSet = BTreeSet<u32>;

/// Naive closure under addition and the action of every ring element.
pub fn naive_closure(module: &FiniteModule, seed: &ElementSet) -> ElementSet {
    let mut set = seed.clone();
    set.insert(0);
    let ring_size = module.ring().element_count() as u32;
    loop {
        let mut next = set.clone();
        for &x in &set {
            for &y in &set {
                next.insert(module.additive().add(x, y));
            }
            for r in 0..ring_size {
                next.insert(module.act(r, x));
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

/// Every subset closed under addition and the ring action. For at most 16
/// elements this literally filters the power set; above that it decides
/// membership element by element, excluding an element only when doing so
/// stays consistent, which yields exactly the same family.
pub fn submodules(module: &FiniteModule) -> Vec<ElementSet> {
    let n = module.element_count() as u32;
    let mut out = Vec::new();
    if n <= 16 {
        for mask in 0u32..(1 << n) {
            let set: ElementSet = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if set.contains(&0) && naive_closure(module, &set) == set {
                out.push(set);
            }
        }
    } else {
        let mut excluded = ElementSet::new();
        decide(module, 0, n, ElementSet::from([0]), &mut excluded, &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
    out
}

fn decide(module: &FiniteModule, next: u32, n: u32, included: ElementSet, excluded: &mut ElementSet, out: &mut Vec<ElementSet>) {
    if next == n {
        out.push(included);
        return;
    }
    if included.contains(&next) {
        decide(module, next + 1, n, included, excluded, out);
        return;
    }
    let mut with = included.clone();
    with.insert(next);
    let closed = naive_closure(module, &with);
    if closed.is_disjoint(excluded) {
        decide(module, next + 1, n, closed, excluded, out);
    }
    excluded.insert(next);
    decide(module, next + 1, n, included, excluded, out);
    excluded.remove(&next);
}

/// An endomorphism as the full element table `x -> f(x)`.
pub type Map = Vec<u32>;

/// All R-linear self-maps, found by filtering every matrix with entries in
/// the right ranges. Returns `None` if there are more than `limit`
/// candidates.
pub fn endomorphisms(module: &FiniteModule, limit: u64) -> Option<Vec<Map>> {
    let orders = module.orders();
    let m = orders.len();
    let n = module.element_count() as u32;
    let candidates: u64 = orders.iter().map(|&e| (e as u64).pow(m as u32)).product();
    if candidates > limit {
        return None;
    }
    let additive = module.additive();
    let ring_size = module.ring().element_count() as u32;
    let mut out = Vec::new();
    for code in 0..candidates {
        // column j of the matrix holds m residues mod e_j
        let mut rest = code;
        let mut mat = vec![vec![0u32; m]; m];
        for j in 0..m {
            for row in mat.iter_mut() {
                row[j] = (rest % orders[j] as u64) as u32;
                rest /= orders[j] as u64;
            }
        }
        let table: Map = (0..n)
            .map(|x| {
                let c = additive.decode(x);
                let img: Vec<u64> = (0..m)
                    .map(|j| (0..m).map(|i| c[i] as u64 * mat[i][j] as u64).sum::<u64>() % orders[j] as u64)
                    .collect();
                additive.encode(&img.iter().map(|&v| v as u32).collect::<Vec<_>>())
            })
            .collect();
        let additive_ok = (0..n).all(|x| (0..n).all(|y| table[additive.add(x, y) as usize] == additive.add(table[x as usize], table[y as usize])));
        let linear = additive_ok && (0..ring_size).all(|r| (0..n).all(|x| table[module.act(r, x) as usize] == module.act(r, table[x as usize])));
        if linear {
            out.push(table);
        }
    }
    Some(out)
}

/// Reference computation of the fully coprime spectrum.
pub struct Reference {
    pub submodules: Vec<ElementSet>,
    pub endomorphisms: Vec<Map>,
    pub fully_invariant: Vec<ElementSet>,
}

impl Reference {
    pub fn new(module: &FiniteModule, limit: u64) -> Option<Self> {
        let endomorphisms = endomorphisms(module, limit)?;
        let submodules = submodules(module);
        let fully_invariant = submodules
            .iter()
            .filter(|l| endomorphisms.iter().all(|f| l.iter().all(|&x| l.contains(&f[x as usize]))))
            .cloned()
            .collect();
        Some(Reference { submodules, endomorphisms, fully_invariant })
    }

    /// `An(X)` as a list of maps.
    pub fn an(&self, x: &ElementSet) -> Vec<&Map> {
        self.endomorphisms.iter().filter(|f| x.iter().all(|&v| f[v as usize] == 0)).collect()
    }

    /// `⋂ { f⁻¹(Y) : f ∈ An(X) }`, straight from the definition.
    pub fn odot(&self, x: &ElementSet, y: &ElementSet) -> ElementSet {
        let an = self.an(x);
        let n = self.endomorphisms.first().map_or(0, Vec::len) as u32;
        (0..n).filter(|&m| an.iter().all(|f| y.contains(&f[m as usize]))).collect()
    }

    pub fn is_fully_coprime(&self, k: &ElementSet) -> bool {
        self.fully_invariant.iter().all(|x| {
            self.fully_invariant.iter().all(|y| {
                let p = self.odot(x, y);
                !k.is_subset(&p) || k.is_subset(x) || k.is_subset(y)
            })
        })
    }

    pub fn spectrum(&self) -> Vec<ElementSet> {
        self.fully_invariant
            .iter()
            .filter(|k| k.len() > 1 && self.is_fully_coprime(k))
            .cloned()
            .collect()
    }
}
