//! Finite left modules over a [`FiniteRing`].
//!
//! The additive group is `Z/e_1 x ... x Z/e_m`. For each additive generator
//! `g_a` of the ring, `action[a]` is an `m x m` matrix whose row `i` is the
//! coefficient vector of `g_a * e_i` (row-vector convention: `g_a * x = x A_a`).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::group::{cyclic_decomposition, CyclicProduct};
use crate::ring::FiniteRing;

pub struct FiniteModule {
    ring: Arc<FiniteRing>,
    additive: CyclicProduct,
    action: Vec<Vec<Vec<u32>>>,
    gen_tables: OnceLock<Vec<Vec<u32>>>,
}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteModule")
            .field("ring", &self.ring)
            .field("orders", &self.additive.orders())
            .field("action", &self.action)
            .finish()
    }
}

impl Clone for FiniteModule {
    fn clone(&self) -> Self {
        FiniteModule {
            ring: self.ring.clone(),
            additive: self.additive.clone(),
            action: self.action.clone(),
            gen_tables: OnceLock::new(),
        }
    }
}

impl PartialEq for FiniteModule {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.additive == other.additive && self.action == other.action
    }
}

impl Eq for FiniteModule {}

/// A module element with both of its encodings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleElement {
    pub index: u32,
    pub coefficients: Vec<u32>,
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.len() == 1 {
            write!(f, "{}", self.coefficients[0])
        } else {
            let parts: Vec<String> = self.coefficients.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

impl FiniteModule {
    /// Builds and validates a module. Validation is at generator level; by
    /// bilinearity this covers every ring element and module element.
    pub fn new(ring: Arc<FiniteRing>, orders: Vec<u32>, action: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        let m = orders.len();
        if m == 0 {
            return Err(Error::InvalidModule("module must be non-zero".into()));
        }
        if let Some(i) = orders.iter().position(|&e| e < 2) {
            return Err(Error::InvalidModule(format!("generator {i} has order {} (< 2)", orders[i])));
        }
        let k = ring.generator_count();
        if action.len() != k {
            return Err(Error::InvalidModule(format!(
                "expected {k} action matrices (one per ring generator), got {}",
                action.len()
            )));
        }
        for (a, mat) in action.iter().enumerate() {
            if mat.len() != m || mat.iter().any(|row| row.len() != m) {
                return Err(Error::InvalidModule(format!("action matrix {a} must be {m}x{m}")));
            }
            for (i, row) in mat.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    if x >= orders[j] {
                        return Err(Error::InvalidModule(format!(
                            "action matrix {a} entry ({i},{j}) is {x}, not reduced mod {}",
                            orders[j]
                        )));
                    }
                }
            }
        }
        let module = FiniteModule::from_parts(ring, CyclicProduct::new(orders), action);
        module.validate()?;
        Ok(module)
    }

    pub(crate) fn from_parts(ring: Arc<FiniteRing>, additive: CyclicProduct, action: Vec<Vec<Vec<u32>>>) -> Self {
        FiniteModule { ring, additive, action, gen_tables: OnceLock::new() }
    }

    /// The left regular module `_R R`.
    pub fn regular(ring: Arc<FiniteRing>) -> Self {
        let k = ring.generator_count();
        let action = (0..k)
            .map(|a| (0..k).map(|i| ring.gen_product(a, i).to_vec()).collect())
            .collect();
        let additive = ring.additive().clone();
        FiniteModule::from_parts(ring, additive, action)
    }

    fn validate(&self) -> Result<()> {
        let k = self.ring.generator_count();
        let m = self.additive.rank();
        let orders = self.additive.orders();
        for a in 0..k {
            for i in 0..m {
                let img = self.row_image(a, i);
                if self.additive.scale(img, orders[i] as u64) != 0 {
                    return Err(Error::InvalidModule(format!(
                        "image of e{i} under g{a} is not killed by the order {} of e{i}",
                        orders[i]
                    )));
                }
                let d = self.ring.orders()[a];
                if self.additive.scale(img, d as u64) != 0 {
                    return Err(Error::InvalidModule(format!(
                        "image of e{i} under g{a} is not killed by the order {d} of g{a}"
                    )));
                }
            }
        }
        for i in 0..m {
            let e = self.additive.generator(i);
            if self.act(self.ring.one(), e) != e {
                return Err(Error::InvalidModule(format!("1 does not act as identity on e{i}")));
            }
        }
        for a in 0..k {
            for b in 0..k {
                let ab = self.ring.mul(self.ring.generator(a), self.ring.generator(b));
                for i in 0..m {
                    let e = self.additive.generator(i);
                    let lhs = self.act_gen(a, self.act_gen(b, e));
                    if lhs != self.act(ab, e) {
                        return Err(Error::InvalidModule(format!(
                            "g{a}*(g{b}*e{i}) differs from (g{a}g{b})*e{i}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn row_image(&self, a: usize, i: usize) -> u32 {
        self.additive.encode(&self.action[a][i])
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn additive(&self) -> &CyclicProduct {
        &self.additive
    }

    pub fn orders(&self) -> &[u32] {
        self.additive.orders()
    }

    pub fn action(&self) -> &[Vec<Vec<u32>>] {
        &self.action
    }

    pub fn element_count(&self) -> u64 {
        self.additive.size()
    }

    pub fn element(&self, index: u32) -> ModuleElement {
        ModuleElement { index, coefficients: self.additive.decode(index) }
    }

    /// `g_a * x` computed from the action matrix.
    fn act_gen_direct(&self, a: usize, x: u32) -> u32 {
        let cx = self.additive.decode(x);
        let orders = self.additive.orders();
        let mut acc = vec![0u64; cx.len()];
        for (i, &c) in cx.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, &v) in self.action[a][i].iter().enumerate() {
                acc[j] = (acc[j] + c as u64 * v as u64) % orders[j] as u64;
            }
        }
        let coeffs: Vec<u32> = acc.into_iter().map(|x| x as u32).collect();
        self.additive.encode(&coeffs)
    }

    pub fn act_gen(&self, a: usize, x: u32) -> u32 {
        match self.gen_tables.get() {
            Some(t) => t[a][x as usize],
            None => self.act_gen_direct(a, x),
        }
    }

    /// `r * x` for an arbitrary ring element.
    pub fn act(&self, r: u32, x: u32) -> u32 {
        let cr = self.ring.coefficients(r);
        let mut acc = 0;
        for (a, &c) in cr.iter().enumerate() {
            if c != 0 {
                acc = self.additive.add(acc, self.additive.scale(self.act_gen(a, x), c as u64));
            }
        }
        acc
    }

    /// `tables[a][x] = g_a * x`; materialised on first use.
    pub fn gen_tables(&self) -> &[Vec<u32>] {
        self.gen_tables.get_or_init(|| {
            let n = self.element_count() as u32;
            (0..self.ring.generator_count())
                .map(|a| (0..n).map(|x| self.act_gen_direct(a, x)).collect())
                .collect()
        })
    }

    /// Re-presents a subset closed under addition and the action as a module
    /// in its own right. Returns the module and the embedding of its elements
    /// (by index) into `self`. `None` for the zero subset.
    pub fn restrict_to(&self, members: &[u32]) -> Option<(FiniteModule, Vec<u32>)> {
        let summands = cyclic_decomposition(&self.additive, members);
        if summands.is_empty() {
            return None;
        }
        let orders: Vec<u32> = summands.iter().map(|s| s.order as u32).collect();
        let sub = CyclicProduct::new(orders);
        let mut embedding = Vec::with_capacity(sub.size() as usize);
        let mut back = HashMap::new();
        for idx in 0..sub.size() as u32 {
            let c = sub.decode(idx);
            let mut x = 0;
            for (s, &ci) in summands.iter().zip(&c) {
                x = self.additive.add(x, self.additive.scale(s.generator, ci as u64));
            }
            embedding.push(x);
            back.insert(x, idx);
        }
        let action = (0..self.ring.generator_count())
            .map(|a| {
                summands
                    .iter()
                    .map(|s| sub.decode(back[&self.act_gen(a, s.generator)]))
                    .collect()
            })
            .collect();
        Some((FiniteModule::from_parts(self.ring.clone(), sub, action), embedding))
    }

    /// An isomorphic copy with generators permuted and rescaled by units:
    /// new generator `j` is `units[j] * e_{perm[j]}`. Returns the copy and the
    /// isomorphism from `self` to the copy as an index table.
    pub fn relabelled(&self, perm: &[usize], units: &[u32]) -> Result<(FiniteModule, Vec<u32>)> {
        let m = self.additive.rank();
        let orders = self.additive.orders();
        let mut seen = vec![false; m];
        if perm.len() != m || units.len() != m || perm.iter().any(|&p| p >= m || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidModule("relabelling must be a permutation".into()));
        }
        let new_orders: Vec<u32> = perm.iter().map(|&p| orders[p]).collect();
        let inverse_units: Vec<u32> = perm
            .iter()
            .zip(units)
            .map(|(&p, &u)| {
                let d = orders[p];
                (1..d).find(|&v| (v as u64 * u as u64) % d as u64 == 1)
                    .ok_or_else(|| Error::InvalidModule(format!("{u} is not a unit mod {d}")))
            })
            .collect::<Result<_>>()?;
        let target = CyclicProduct::new(new_orders.clone());
        // old coefficient c_p on e_p becomes c_p * u_j^{-1} on new generator j
        let to_new = |x: u32| -> Vec<u32> {
            let c = self.additive.decode(x);
            (0..m)
                .map(|j| ((c[perm[j]] as u64 * inverse_units[j] as u64) % new_orders[j] as u64) as u32)
                .collect()
        };
        let action = (0..self.ring.generator_count())
            .map(|a| {
                (0..m)
                    .map(|j| {
                        let g = self.additive.scale(self.additive.generator(perm[j]), units[j] as u64);
                        to_new(self.act_gen(a, g))
                    })
                    .collect()
            })
            .collect();
        let copy = FiniteModule::new(self.ring.clone(), new_orders.clone(), action)?;
        let iso = (0..self.element_count() as u32).map(|x| target.encode(&to_new(x))).collect();
        Ok((copy, iso))
    }
}
