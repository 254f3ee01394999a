//! Finite abelian groups presented as products of cyclic groups.
//!
//! Elements are addressed by a mixed-radix index: the first coordinate is the
//! most significant digit, so index order coincides with lexicographic order
//! of coefficient tuples.

use std::collections::HashMap;
use std::hash::Hash;

use crate::snf::smith_normal_form;

/// `Z/d_1 x ... x Z/d_k` with a mixed-radix element encoding.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicProduct {
    orders: Vec<u32>,
    strides: Vec<u64>,
    size: u64,
}

impl CyclicProduct {
    /// Panics if an order is zero; callers validate orders first.
    pub fn new(orders: Vec<u32>) -> Self {
        assert!(orders.iter().all(|&d| d > 0), "cyclic orders must be positive");
        let mut strides = vec![0u64; orders.len()];
        let mut size: u64 = 1;
        for i in (0..orders.len()).rev() {
            strides[i] = size;
            size = size.saturating_mul(orders[i] as u64);
        }
        CyclicProduct { orders, strides, size }
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// Number of elements; saturates at `u64::MAX`.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Index of the `i`-th standard generator.
    pub fn generator(&self, i: usize) -> u32 {
        if self.orders[i] == 1 {
            0
        } else {
            self.strides[i] as u32
        }
    }

    pub fn decode(&self, index: u32) -> Vec<u32> {
        let mut out = vec![0; self.orders.len()];
        self.decode_into(index, &mut out);
        out
    }

    pub fn decode_into(&self, index: u32, out: &mut [u32]) {
        let mut rest = index as u64;
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = (rest / self.strides[i]) as u32;
            rest %= self.strides[i];
        }
    }

    /// Encodes arbitrary (unreduced) integer coefficients.
    pub fn encode(&self, coeffs: &[u32]) -> u32 {
        debug_assert_eq!(coeffs.len(), self.orders.len());
        let mut index = 0u64;
        for (i, &c) in coeffs.iter().enumerate() {
            index += (c % self.orders[i]) as u64 * self.strides[i];
        }
        index as u32
    }

    pub fn encode_i64(&self, coeffs: &[i64]) -> u32 {
        let mut index = 0u64;
        for (i, &c) in coeffs.iter().enumerate() {
            index += c.rem_euclid(self.orders[i] as i64) as u64 * self.strides[i];
        }
        index as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let mut index = 0u64;
        let (mut ra, mut rb) = (a as u64, b as u64);
        for i in 0..self.orders.len() {
            let s = self.strides[i];
            let (ca, cb) = (ra / s, rb / s);
            ra %= s;
            rb %= s;
            index += ((ca + cb) % self.orders[i] as u64) * s;
        }
        index as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        let mut index = 0u64;
        let mut ra = a as u64;
        for i in 0..self.orders.len() {
            let s = self.strides[i];
            let d = self.orders[i] as u64;
            let c = ra / s;
            ra %= s;
            index += ((d - c) % d) * s;
        }
        index as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn scale(&self, a: u32, k: u64) -> u32 {
        let mut index = 0u64;
        let mut ra = a as u64;
        for i in 0..self.orders.len() {
            let s = self.strides[i];
            let d = self.orders[i] as u64;
            let c = ra / s;
            ra %= s;
            index += ((c * (k % d)) % d) * s;
        }
        index as u32
    }

    /// Additive order of an element.
    pub fn order_of(&self, a: u32) -> u64 {
        self.decode(a)
            .iter()
            .zip(&self.orders)
            .map(|(&c, &d)| d as u64 / gcd(c as u64, d as u64))
            .fold(1, lcm)
    }

    /// Exponent of the group (lcm of the cyclic orders).
    pub fn exponent(&self) -> u64 {
        self.orders.iter().map(|&d| d as u64).fold(1, lcm)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Minimal abstraction over a finite abelian group whose elements can be
/// hashed; used to decompose subgroups that do not live inside an enumerable
/// ambient group (e.g. groups of matrices).
pub trait AdditiveGroup {
    type Elem: Clone + Eq + Hash;
    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn scale(&self, a: &Self::Elem, k: u64) -> Self::Elem {
        // double-and-add
        let mut acc = self.zero();
        let mut base = a.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            k >>= 1;
        }
        acc
    }
}

impl AdditiveGroup for CyclicProduct {
    type Elem = u32;
    fn zero(&self) -> u32 {
        0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        CyclicProduct::add(self, *a, *b)
    }
    fn scale(&self, a: &u32, k: u64) -> u32 {
        CyclicProduct::scale(self, *a, k)
    }
}

/// One cyclic summand of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSummand<E> {
    pub generator: E,
    pub order: u64,
}

/// Decomposes the subgroup generated by `gens` into an internal direct sum of
/// cyclic subgroups with orders `d_1 | d_2 | ... ` (trivial summands dropped).
///
/// The subgroup is first given a polycyclic presentation by greedily adjoining
/// generators in the given order; its relation matrix is then brought to Smith
/// normal form and the column transform yields the new basis.
pub fn cyclic_decomposition<G: AdditiveGroup>(
    group: &G,
    gens: &[G::Elem],
) -> Vec<CyclicSummand<G::Elem>> {
    let zero = group.zero();
    let mut coords: HashMap<G::Elem, Vec<i64>> = HashMap::new();
    coords.insert(zero.clone(), Vec::new());
    let mut basis: Vec<G::Elem> = Vec::new();
    let mut relative_orders: Vec<i64> = Vec::new();
    let mut relations: Vec<Vec<i64>> = Vec::new();

    for g in gens {
        if coords.contains_key(g) {
            continue;
        }
        let j = basis.len();
        let snapshot: Vec<(G::Elem, Vec<i64>)> =
            coords.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        for (_, c) in coords.iter_mut() {
            c.push(0);
        }
        let mut k: i64 = 1;
        let mut t = g.clone();
        while !coords.contains_key(&t) {
            for (h, c) in &snapshot {
                let mut c = c.clone();
                c.push(k);
                coords.insert(group.add(h, &t), c);
            }
            k += 1;
            t = group.add(&t, g);
        }
        // k * g lies in the previous subgroup
        let mut rel: Vec<i64> = coords[&t].iter().map(|&c| -c).collect();
        rel.truncate(j);
        rel.resize(j + 1, 0);
        rel[j] = k;
        basis.push(g.clone());
        relative_orders.push(k);
        relations.push(rel);
    }

    let t = basis.len();
    if t == 0 {
        return Vec::new();
    }
    let mut matrix: Vec<Vec<i128>> = relations
        .iter()
        .map(|r| {
            let mut row: Vec<i128> = r.iter().map(|&x| x as i128).collect();
            row.resize(t, 0);
            row
        })
        .collect();
    let snf = smith_normal_form(&mut matrix);
    let orders_of_basis: Vec<u64> = basis.iter().map(|b| element_order(group, b)).collect();

    let mut out = Vec::new();
    for i in 0..t {
        let d = snf.diagonal[i].unsigned_abs() as u64;
        if d == 1 {
            continue;
        }
        let mut elem = zero.clone();
        for j in 0..t {
            let ord = orders_of_basis[j] as i128;
            let c = snf.v_inverse[i][j].rem_euclid(ord) as u64;
            if c != 0 {
                elem = group.add(&elem, &group.scale(&basis[j], c));
            }
        }
        out.push(CyclicSummand { generator: elem, order: d });
    }
    out
}

fn element_order<G: AdditiveGroup>(group: &G, a: &G::Elem) -> u64 {
    let zero = group.zero();
    let mut t = a.clone();
    let mut k = 1;
    while t != zero {
        t = group.add(&t, a);
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_radix_roundtrip_and_order() {
        let g = CyclicProduct::new(vec![2, 3, 4]);
        assert_eq!(g.size(), 24);
        for i in 0..24 {
            assert_eq!(g.encode(&g.decode(i)), i);
        }
        // index order is lexicographic on tuples
        assert_eq!(g.decode(5), vec![0, 1, 1]);
        assert_eq!(g.order_of(g.encode(&[1, 1, 2])), 6);
        assert_eq!(g.exponent(), 12);
    }

    #[test]
    fn arithmetic_matches_coordinates() {
        let g = CyclicProduct::new(vec![4, 6]);
        for a in 0..24 {
            assert_eq!(g.add(a, g.neg(a)), 0);
            for b in 0..24 {
                let (ca, cb) = (g.decode(a), g.decode(b));
                let want = g.encode(&[(ca[0] + cb[0]) % 4, (ca[1] + cb[1]) % 6]);
                assert_eq!(g.add(a, b), want);
            }
            assert_eq!(g.scale(a, 3), g.add(a, g.add(a, a)));
        }
    }

    #[test]
    fn decomposition_of_z2_x_z3_is_cyclic_of_order_six() {
        let g = CyclicProduct::new(vec![2, 3]);
        let all: Vec<u32> = (0..6).collect();
        let parts = cyclic_decomposition(&g, &all);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].order, 6);
        assert_eq!(g.order_of(parts[0].generator), 6);
    }

    #[test]
    fn decomposition_respects_invariant_factors() {
        // Z/4 x Z/6 ~ Z/2 x Z/12
        let g = CyclicProduct::new(vec![4, 6]);
        let all: Vec<u32> = (0..24).collect();
        let parts = cyclic_decomposition(&g, &all);
        let orders: Vec<u64> = parts.iter().map(|p| p.order).collect();
        assert_eq!(orders, vec![2, 12]);
        // the summands generate a subgroup of the right size, internally direct
        let mut seen = std::collections::HashSet::new();
        for a in 0..2u64 {
            for b in 0..12u64 {
                let e = g.add(g.scale(parts[0].generator, a), g.scale(parts[1].generator, b));
                assert!(seen.insert(e));
            }
        }
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn decomposition_of_proper_subgroup() {
        let g = CyclicProduct::new(vec![4, 4]);
        // subgroup generated by (2,0) and (1,1)
        let gens = [g.encode(&[2, 0]), g.encode(&[1, 1])];
        let parts = cyclic_decomposition(&g, &gens);
        let size: u64 = parts.iter().map(|p| p.order).product();
        assert_eq!(size, 8);
    }
}
