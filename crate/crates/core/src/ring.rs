//! Finite associative unital rings given by structure constants.
//!
//! The additive group is `Z/d_1 x ... x Z/d_k` with standard generators
//! `g_1..g_k`; the product is the bilinear extension of a table giving each
//! `g_a * g_b` as a coefficient vector. Ring elements are addressed by their
//! mixed-radix index in the additive group.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::group::CyclicProduct;

pub struct FiniteRing {
    additive: CyclicProduct,
    /// `mul[(a * k + b) * k + c]` is coefficient `c` of `g_a * g_b`.
    mul: Vec<u32>,
    one: u32,
    left_tables: OnceLock<Vec<Vec<u32>>>,
    right_tables: OnceLock<Vec<Vec<u32>>>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("orders", &self.additive.orders())
            .field("mul", &self.mul)
            .field("one", &self.one)
            .finish()
    }
}

impl Clone for FiniteRing {
    fn clone(&self) -> Self {
        FiniteRing {
            additive: self.additive.clone(),
            mul: self.mul.clone(),
            one: self.one,
            left_tables: OnceLock::new(),
            right_tables: OnceLock::new(),
        }
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.additive == other.additive && self.mul == other.mul && self.one == other.one
    }
}

impl Eq for FiniteRing {}

impl Hash for FiniteRing {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.additive.hash(state);
        self.mul.hash(state);
        self.one.hash(state);
    }
}

impl FiniteRing {
    /// Builds and validates a ring. `mul[a][b]` is the coefficient vector of
    /// `g_a * g_b`; `one` is the coefficient vector of the identity.
    pub fn new(orders: Vec<u32>, mul: Vec<Vec<Vec<u32>>>, one: Vec<u32>) -> Result<Self> {
        let k = orders.len();
        if k == 0 {
            return Err(Error::InvalidRing("ring needs at least one additive generator".into()));
        }
        if let Some(i) = orders.iter().position(|&d| d < 2) {
            return Err(Error::InvalidRing(format!("generator {i} has order {} (< 2)", orders[i])));
        }
        if mul.len() != k || mul.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidRing(format!("multiplication table must be {k}x{k}")));
        }
        let mut flat = Vec::with_capacity(k * k * k);
        for (a, row) in mul.iter().enumerate() {
            for (b, v) in row.iter().enumerate() {
                if v.len() != k {
                    return Err(Error::InvalidRing(format!(
                        "product g{a}*g{b} must have {k} coefficients"
                    )));
                }
                for (c, &x) in v.iter().enumerate() {
                    if x >= orders[c] {
                        return Err(Error::InvalidRing(format!(
                            "coefficient {c} of g{a}*g{b} is {x}, not reduced mod {}",
                            orders[c]
                        )));
                    }
                    flat.push(x);
                }
            }
        }
        if one.len() != k || one.iter().zip(&orders).any(|(&x, &d)| x >= d) {
            return Err(Error::InvalidRing("identity must be a reduced coefficient vector".into()));
        }
        let additive = CyclicProduct::new(orders);
        let one = additive.encode(&one);
        let ring = FiniteRing::from_parts(additive, flat, one);
        ring.validate()?;
        Ok(ring)
    }

    /// Assembles a ring without validation; callers guarantee the axioms.
    pub(crate) fn from_parts(additive: CyclicProduct, mul: Vec<u32>, one: u32) -> Self {
        FiniteRing {
            additive,
            mul,
            one,
            left_tables: OnceLock::new(),
            right_tables: OnceLock::new(),
        }
    }

    /// `Z/n`.
    pub fn zn(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRing(format!("Z/{n} is the zero ring")));
        }
        FiniteRing::new(vec![n], vec![vec![vec![1 % n]]], vec![1])
    }

    /// Direct product; generators are concatenated factor by factor.
    pub fn product(factors: &[FiniteRing]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidRing("empty product".into()));
        }
        let orders: Vec<u32> = factors.iter().flat_map(|r| r.orders().to_vec()).collect();
        let k = orders.len();
        let mut mul = vec![vec![vec![0u32; k]; k]; k];
        let mut one = vec![0u32; k];
        let mut offset = 0;
        for r in factors {
            let kr = r.generator_count();
            for a in 0..kr {
                for b in 0..kr {
                    for (c, &x) in r.gen_product(a, b).iter().enumerate() {
                        mul[offset + a][offset + b][offset + c] = x;
                    }
                }
            }
            for (c, x) in r.coefficients(r.one()).into_iter().enumerate() {
                one[offset + c] = x;
            }
            offset += kr;
        }
        FiniteRing::new(orders, mul, one)
    }

    /// `d x d` matrices over `base`. Generator `(i, j, b)` is `E_ij * g_b`,
    /// numbered `(i * d + j) * k_base + b`.
    pub fn matrix(base: &FiniteRing, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidRing("matrix dimension must be positive".into()));
        }
        let kb = base.generator_count();
        let k = dim * dim * kb;
        let idx = |i: usize, j: usize, b: usize| (i * dim + j) * kb + b;
        let orders: Vec<u32> = (0..dim * dim).flat_map(|_| base.orders().to_vec()).collect();
        let mut mul = vec![vec![vec![0u32; k]; k]; k];
        for i in 0..dim {
            for j in 0..dim {
                for l in 0..dim {
                    for b in 0..kb {
                        for c in 0..kb {
                            let prod = base.gen_product(b, c);
                            for (e, &x) in prod.iter().enumerate() {
                                mul[idx(i, j, b)][idx(j, l, c)][idx(i, l, e)] = x;
                            }
                        }
                    }
                }
            }
        }
        let base_one = base.coefficients(base.one());
        let mut one = vec![0u32; k];
        for i in 0..dim {
            for (e, &x) in base_one.iter().enumerate() {
                one[idx(i, i, e)] = x;
            }
        }
        FiniteRing::new(orders, mul, one)
    }

    /// Generator-level check of the ring axioms. By multilinearity this is
    /// equivalent to checking every element triple.
    pub fn validate(&self) -> Result<()> {
        let k = self.generator_count();
        let orders = self.orders();
        // g_a * g_b must be killed by the orders of g_a and g_b
        for a in 0..k {
            for b in 0..k {
                let p = self.gen_index_product(a, b);
                for (d, side) in [(orders[a], "left"), (orders[b], "right")] {
                    if self.additive.scale(p, d as u64) != 0 {
                        return Err(Error::InvalidRing(format!(
                            "product g{a}*g{b} is not annihilated by the {side} order {d}"
                        )));
                    }
                }
            }
        }
        for a in 0..k {
            for b in 0..k {
                let ab = self.gen_index_product(a, b);
                for c in 0..k {
                    let gc = self.additive.generator(c);
                    let ga = self.additive.generator(a);
                    let bc = self.gen_index_product(b, c);
                    if self.mul(ab, gc) != self.mul(ga, bc) {
                        return Err(Error::InvalidRing(format!(
                            "associativity fails for generators (g{a}, g{b}, g{c})"
                        )));
                    }
                }
            }
        }
        for a in 0..k {
            let ga = self.additive.generator(a);
            if self.mul(self.one, ga) != ga || self.mul(ga, self.one) != ga {
                return Err(Error::InvalidRing(format!("identity does not fix generator g{a}")));
            }
        }
        if self.one == 0 {
            return Err(Error::InvalidRing("1 = 0".into()));
        }
        Ok(())
    }

    pub fn additive(&self) -> &CyclicProduct {
        &self.additive
    }

    pub fn orders(&self) -> &[u32] {
        self.additive.orders()
    }

    pub fn generator_count(&self) -> usize {
        self.additive.rank()
    }

    pub fn element_count(&self) -> u64 {
        self.additive.size()
    }

    pub fn one(&self) -> u32 {
        self.one
    }

    pub fn generator(&self, a: usize) -> u32 {
        self.additive.generator(a)
    }

    pub fn coefficients(&self, x: u32) -> Vec<u32> {
        self.additive.decode(x)
    }

    /// Coefficient vector of `g_a * g_b`.
    pub fn gen_product(&self, a: usize, b: usize) -> &[u32] {
        let k = self.generator_count();
        &self.mul[(a * k + b) * k..(a * k + b + 1) * k]
    }

    fn gen_index_product(&self, a: usize, b: usize) -> u32 {
        self.additive.encode(self.gen_product(a, b))
    }

    pub fn add(&self, x: u32, y: u32) -> u32 {
        self.additive.add(x, y)
    }

    pub fn neg(&self, x: u32) -> u32 {
        self.additive.neg(x)
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        let k = self.generator_count();
        let orders = self.orders();
        let cx = self.additive.decode(x);
        let cy = self.additive.decode(y);
        let mut acc = vec![0u64; k];
        for (a, &xa) in cx.iter().enumerate() {
            if xa == 0 {
                continue;
            }
            for (b, &yb) in cy.iter().enumerate() {
                if yb == 0 {
                    continue;
                }
                let coef = xa as u64 * yb as u64;
                for (c, &m) in self.gen_product(a, b).iter().enumerate() {
                    if m != 0 {
                        acc[c] = (acc[c] + coef % orders[c] as u64 * m as u64) % orders[c] as u64;
                    }
                }
            }
        }
        let coeffs: Vec<u32> = acc.into_iter().map(|x| x as u32).collect();
        self.additive.encode(&coeffs)
    }

    /// `tables[a][x] = g_a * x`.
    pub fn left_tables(&self) -> &[Vec<u32>] {
        self.left_tables.get_or_init(|| {
            let n = self.element_count() as u32;
            (0..self.generator_count())
                .map(|a| {
                    let g = self.generator(a);
                    (0..n).map(|x| self.mul(g, x)).collect()
                })
                .collect()
        })
    }

    /// `tables[a][x] = x * g_a`.
    pub fn right_tables(&self) -> &[Vec<u32>] {
        self.right_tables.get_or_init(|| {
            let n = self.element_count() as u32;
            (0..self.generator_count())
                .map(|a| {
                    let g = self.generator(a);
                    (0..n).map(|x| self.mul(x, g)).collect()
                })
                .collect()
        })
    }

    pub fn is_commutative(&self) -> bool {
        let k = self.generator_count();
        (0..k).all(|a| (0..k).all(|b| self.gen_product(a, b) == self.gen_product(b, a)))
    }

    /// Characteristic: the additive order of 1.
    pub fn characteristic(&self) -> u64 {
        self.additive.order_of(self.one)
    }

    /// Smallest `d` with `d * x = 0` for all `x`.
    pub fn exponent(&self) -> u64 {
        self.additive.exponent()
    }
}
