//! Deterministic random modules for running the verifier at scale.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::analysis::Analysis;
use crate::catalog::t2f2_ring;
use crate::error::{Bounds, Error, Result};
use crate::module::FiniteModule;
use crate::ring::FiniteRing;
use crate::verifier::{run_all, VerificationReport, VerifyConfig};

/// Attempts per module before giving up on a family.
pub const ATTEMPTS: u64 = 10_000;

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub seed: u64,
    pub count: usize,
    /// Largest module element count generated.
    pub max_size: u64,
    pub bounds: Bounds,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 1,
            count: 50,
            max_size: 64,
            bounds: Bounds { max_endomorphisms: 1024, ..Bounds::default() },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Zn,
    Product,
    F2Algebra,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Zn => "zn",
            Family::Product => "product",
            Family::F2Algebra => "f2-algebra",
        }
    }
}

fn identity(m: usize) -> Vec<Vec<u32>> {
    (0..m).map(|i| (0..m).map(|j| u32::from(i == j)).collect()).collect()
}

fn divisors(n: u32) -> Vec<u32> {
    (2..=n).filter(|d| n % d == 0).collect()
}

/// `Z/n` acting on a random product of cyclic groups of exponent dividing `n`.
fn zn_module(rng: &mut ChaCha8Rng, max_size: u64) -> Result<Option<(String, FiniteModule)>> {
    let n = rng.gen_range(2..=12u32);
    let rank = rng.gen_range(1..=3usize);
    let divs = divisors(n);
    let orders: Vec<u32> = (0..rank).map(|_| *divs.choose(rng).expect("n ≥ 2")).collect();
    if orders.iter().map(|&e| e as u64).product::<u64>() > max_size {
        return Ok(None);
    }
    let ring = Arc::new(FiniteRing::zn(n)?);
    let name = format!("Z/{n} on {orders:?}");
    Ok(Some((name, FiniteModule::new(ring, orders, vec![identity(rank)])?)))
}

/// `Z/a x Z/b` acting through its two idempotents.
fn product_module(rng: &mut ChaCha8Rng, max_size: u64) -> Result<Option<(String, FiniteModule)>> {
    let a = rng.gen_range(2..=5u32);
    let b = rng.gen_range(2..=5u32);
    let ring = Arc::new(FiniteRing::product(&[FiniteRing::zn(a)?, FiniteRing::zn(b)?])?);
    let rank = rng.gen_range(1..=3usize);
    let side: Vec<usize> = (0..rank).map(|_| rng.gen_range(0..2)).collect();
    let orders: Vec<u32> = side
        .iter()
        .map(|&s| *divisors(if s == 0 { a } else { b }).choose(rng).expect("≥ 2"))
        .collect();
    if orders.iter().map(|&e| e as u64).product::<u64>() > max_size {
        return Ok(None);
    }
    let projection = |k: usize| -> Vec<Vec<u32>> {
        (0..rank).map(|i| (0..rank).map(|j| u32::from(i == j && side[i] == k)).collect()).collect()
    };
    let name = format!("Z/{a} x Z/{b} on {orders:?}");
    match FiniteModule::new(ring, orders, vec![projection(0), projection(1)]) {
        Ok(m) => Ok(Some((name, m))),
        Err(Error::InvalidModule(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn f2_rings() -> Result<Vec<(&'static str, FiniteRing)>> {
    let f2 = FiniteRing::zn(2)?;
    Ok(vec![
        ("F2", f2.clone()),
        ("F2 x F2", FiniteRing::product(&[f2.clone(), f2])?),
        ("F4", FiniteRing::new(vec![2, 2], vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]], vec![1, 0])?),
        ("F2[x]/x^2", FiniteRing::new(vec![2, 2], vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]], vec![1, 0])?),
        ("T2(F2)", t2f2_ring()?),
    ])
}

/// A random `F2`-algebra acting on `F2^m` through rejection-sampled
/// matrices. Generator 0 is the identity in every listed algebra except the
/// product, whose identity is the sum of its two generators.
fn f2_module(rng: &mut ChaCha8Rng, max_size: u64) -> Result<Option<(String, FiniteModule)>> {
    let rings = f2_rings()?;
    let (rname, ring) = rings.choose(rng).expect("non-empty").clone();
    let max_rank = (63 - max_size.max(2).leading_zeros()) as usize;
    let m = rng.gen_range(1..=max_rank.clamp(1, 4));
    let k = ring.generator_count();
    let one = ring.coefficients(ring.one());
    let random = |rng: &mut ChaCha8Rng| -> Vec<Vec<u32>> {
        (0..m).map(|_| (0..m).map(|_| rng.gen_range(0..2)).collect()).collect()
    };
    let mut action: Vec<Vec<Vec<u32>>> = (0..k).map(|_| random(rng)).collect();
    if one[0] == 1 && one[1..].iter().all(|&c| c == 0) {
        action[0] = identity(m);
    } else {
        // identity = g0 + g1: the second generator is I - A0
        action[1] = (0..m)
            .map(|i| (0..m).map(|j| (u32::from(i == j) + action[0][i][j]) % 2).collect())
            .collect();
    }
    let name = format!("{rname} on F2^{m}");
    match FiniteModule::new(Arc::new(ring), vec![2; m], action) {
        Ok(module) => Ok(Some((name, module))),
        Err(Error::InvalidModule(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Fixed picks guaranteeing both a duo and a non-duo module.
fn forced(index: usize, rng: &mut ChaCha8Rng) -> Result<Option<(String, FiniteModule)>> {
    match index {
        0 => {
            let n = rng.gen_range(2..=12u32);
            Ok(Some((format!("Z/{n} regular"), FiniteModule::regular(Arc::new(FiniteRing::zn(n)?)))))
        }
        1 => {
            let p = *[2u32, 3].choose(rng).expect("non-empty");
            let ring = Arc::new(FiniteRing::zn(p)?);
            Ok(Some((format!("Z/{p} on [{p}, {p}]"), FiniteModule::new(ring, vec![p, p], vec![identity(2)])?)))
        }
        _ => Ok(None),
    }
}

/// Generates the `index`-th module of a run, already analysed.
pub fn generate(config: &FuzzConfig, index: usize) -> Result<(String, Analysis)> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index as u64));
    let family = [Family::Zn, Family::Product, Family::F2Algebra][index % 3];
    for _ in 0..ATTEMPTS {
        let candidate = match forced(index, &mut rng)? {
            Some(c) => Some(c),
            None => match family {
                Family::Zn => zn_module(&mut rng, config.max_size)?,
                Family::Product => product_module(&mut rng, config.max_size)?,
                Family::F2Algebra => f2_module(&mut rng, config.max_size)?,
            },
        };
        let Some((name, module)) = candidate else { continue };
        if module.element_count() > config.max_size {
            continue;
        }
        match Analysis::new(Arc::new(module), config.bounds) {
            Ok(a) => return Ok((format!("fuzz-{index} {name}"), a)),
            Err(Error::BoundExceeded { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenerationExhausted { family: family.name().into(), attempts: ATTEMPTS })
}

/// Runs the verifier on `count` generated modules; reports come back in
/// index order.
pub fn fuzz(config: &FuzzConfig) -> Result<Vec<VerificationReport>> {
    (0..config.count)
        .into_par_iter()
        .map(|i| {
            let (name, a) = generate(config, i)?;
            run_all(&a, &name, &VerifyConfig { seed: config.seed, theorems: None })
        })
        .collect()
}
