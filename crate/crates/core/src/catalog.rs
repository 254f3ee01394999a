//! Built-in example modules.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::module::FiniteModule;
use crate::ring::FiniteRing;

pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    build: fn() -> Result<FiniteModule>,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<FiniteModule> {
        (self.build)()
    }
}

fn identity(m: usize) -> Vec<Vec<u32>> {
    (0..m).map(|i| (0..m).map(|j| u32::from(i == j)).collect()).collect()
}

fn regular_zn(n: u32) -> Result<FiniteModule> {
    Ok(FiniteModule::regular(Arc::new(FiniteRing::zn(n)?)))
}

/// `Z/n` acting diagonally on a product of cyclic groups.
fn zn_on(n: u32, orders: Vec<u32>) -> Result<FiniteModule> {
    let m = orders.len();
    FiniteModule::new(Arc::new(FiniteRing::zn(n)?), orders, vec![identity(m)])
}

fn m2f2_column() -> Result<FiniteModule> {
    let ring = FiniteRing::matrix(&FiniteRing::zn(2)?, 2)?;
    // E_ij sends e_j to e_i
    let action = (0..2)
        .flat_map(|i| (0..2).map(move |j| (i, j)))
        .map(|(i, j)| {
            let mut mat = vec![vec![0u32; 2]; 2];
            mat[j][i] = 1;
            mat
        })
        .collect();
    FiniteModule::new(Arc::new(ring), vec![2, 2], action)
}

/// Upper triangular 2x2 matrices over F2 on the basis `1, e11, e12`.
pub fn t2f2_ring() -> Result<FiniteRing> {
    let mul = vec![
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        vec![vec![0, 1, 0], vec![0, 1, 0], vec![0, 0, 1]],
        vec![vec![0, 0, 1], vec![0, 0, 0], vec![0, 0, 0]],
    ];
    FiniteRing::new(vec![2, 2, 2], mul, vec![1, 0, 0])
}

static ENTRIES: &[CatalogEntry] = &[
    CatalogEntry { name: "Z2", description: "Z/2 over Z/2", build: || regular_zn(2) },
    CatalogEntry { name: "Z4", description: "Z/4 over Z/4", build: || regular_zn(4) },
    CatalogEntry { name: "Z8", description: "Z/8 over Z/8", build: || regular_zn(8) },
    CatalogEntry { name: "Z9", description: "Z/9 over Z/9", build: || regular_zn(9) },
    CatalogEntry { name: "Z6", description: "Z/6 over Z/6", build: || regular_zn(6) },
    CatalogEntry { name: "Z2xZ3", description: "Z/2 + Z/3 over Z/6", build: || zn_on(6, vec![2, 3]) },
    CatalogEntry {
        name: "Z6-scrambled",
        description: "Z/3 + Z/2 over Z/6, an isomorphic copy of Z6",
        build: || zn_on(6, vec![3, 2]),
    },
    CatalogEntry { name: "V4overF2", description: "Z/2 + Z/2 over Z/2", build: || zn_on(2, vec![2, 2]) },
    CatalogEntry { name: "Z4xZ2", description: "Z/4 + Z/2 over Z/4", build: || zn_on(4, vec![4, 2]) },
    CatalogEntry {
        name: "M2F2-column",
        description: "column vectors over 2x2 matrices over F2",
        build: m2f2_column,
    },
    CatalogEntry {
        name: "T2F2",
        description: "upper triangular 2x2 matrices over F2, regular",
        build: || Ok(FiniteModule::regular(Arc::new(t2f2_ring()?))),
    },
];

pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

pub fn get(name: &str) -> Result<FiniteModule> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::InvalidModule(format!("unknown catalog module `{name}` (known: {})", names().join(", "))))?
        .build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds() {
        for e in entries() {
            let m = e.build().unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert!(m.element_count() <= 64, "{}", e.name);
        }
        assert!(get("nope").is_err());
    }
}
