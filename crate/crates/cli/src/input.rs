//! Module definition files and catalog references.

use std::path::Path;
use std::sync::Arc;

use fcspec::{catalog, Bounds, FiniteModule, FiniteRing};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub ring: RingSpec,
    pub module: ModuleBody,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", deny_unknown_fields)]
pub enum RingSpec {
    Zn { n: u32 },
    #[serde(rename = "product")]
    Product { factors: Vec<RingSpec> },
    #[serde(rename = "matrix")]
    Matrix { base: Box<RingSpec>, dim: usize },
    #[serde(rename = "table")]
    Table { orders: Vec<u32>, mul: Vec<Vec<Vec<u32>>>, one: Vec<u32> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleBody {
    pub orders: Vec<u32>,
    /// One `m x m` matrix per additive generator of the ring; row `i` is the
    /// image of module generator `i`.
    pub action: Vec<Vec<Vec<u32>>>,
}

fn invalid(path: &str, e: fcspec::Error) -> CliError {
    match e {
        fcspec::Error::BoundExceeded { .. } => CliError::Core(e),
        other => CliError::Validation(format!("{path}: {other}")),
    }
}

/// Size of a ring spec computed without building it, saturating.
fn ring_size(spec: &RingSpec) -> u64 {
    match spec {
        RingSpec::Zn { n } => *n as u64,
        RingSpec::Product { factors } => factors.iter().fold(1u64, |acc, f| acc.saturating_mul(ring_size(f))),
        RingSpec::Matrix { base, dim } => {
            let b = ring_size(base);
            (0..dim * dim).fold(1u64, |acc, _| acc.saturating_mul(b))
        }
        RingSpec::Table { orders, .. } => orders.iter().fold(1u64, |acc, &e| acc.saturating_mul(e as u64)),
    }
}

impl RingSpec {
    pub fn build(&self, path: &str, bounds: &Bounds) -> Result<FiniteRing, CliError> {
        bounds.check_elements("ring elements", ring_size(self)).map_err(|e| invalid(path, e))?;
        match self {
            RingSpec::Zn { n } => FiniteRing::zn(*n).map_err(|e| invalid(path, e)),
            RingSpec::Product { factors } => {
                let built = factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.build(&format!("{path}.factors[{i}]"), bounds))
                    .collect::<Result<Vec<_>, _>>()?;
                FiniteRing::product(&built).map_err(|e| invalid(path, e))
            }
            RingSpec::Matrix { base, dim } => {
                let b = base.build(&format!("{path}.base"), bounds)?;
                FiniteRing::matrix(&b, *dim).map_err(|e| invalid(path, e))
            }
            RingSpec::Table { orders, mul, one } => {
                FiniteRing::new(orders.clone(), mul.clone(), one.clone()).map_err(|e| invalid(path, e))
            }
        }
    }

    /// Structure constants of an already built ring.
    pub fn table_of(ring: &FiniteRing) -> Self {
        let k = ring.generator_count();
        RingSpec::Table {
            orders: ring.orders().to_vec(),
            mul: (0..k).map(|a| (0..k).map(|b| ring.gen_product(a, b).to_vec()).collect()).collect(),
            one: ring.coefficients(ring.one()),
        }
    }
}

impl ModuleSpecFile {
    pub fn parse(text: &str, source: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| {
            CliError::Validation(format!("{source}:{}:{}: {e}", e.line(), e.column()))
        })
    }

    pub fn build(&self, bounds: &Bounds) -> Result<FiniteModule, CliError> {
        let ring = self.ring.build("ring", bounds)?;
        let size = self.module.orders.iter().fold(1u64, |acc, &e| acc.saturating_mul(e as u64));
        bounds.check_elements("module elements", size).map_err(|e| invalid("module", e))?;
        FiniteModule::new(Arc::new(ring), self.module.orders.clone(), self.module.action.clone())
            .map_err(|e| invalid("module", e))
    }

    /// A file describing `module` with its ring as a structure-constant table.
    pub fn describe(module: &FiniteModule, name: Option<&str>) -> Self {
        ModuleSpecFile {
            name: name.map(str::to_string),
            ring: RingSpec::table_of(module.ring()),
            module: ModuleBody { orders: module.orders().to_vec(), action: module.action().to_vec() },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

/// Resolves `catalog:NAME` or a file path to a named module.
pub fn load(input: &str, bounds: &Bounds) -> Result<(String, FiniteModule), CliError> {
    if let Some(name) = input.strip_prefix("catalog:") {
        let module = catalog::get(name).map_err(|e| CliError::Validation(e.to_string()))?;
        bounds.check_elements("module elements", module.element_count())?;
        return Ok((name.to_string(), module));
    }
    let text = std::fs::read_to_string(input).map_err(|e| CliError::Validation(format!("cannot read {input}: {e}")))?;
    let file = ModuleSpecFile::parse(&text, input)?;
    let module = file.build(bounds)?;
    let name = file.name.clone().unwrap_or_else(|| {
        Path::new(input).file_stem().map_or_else(|| input.to_string(), |s| s.to_string_lossy().into_owned())
    });
    Ok((name, module))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_modules_round_trip_through_files() {
        let bounds = Bounds::default();
        for e in catalog::entries() {
            let module = e.build().unwrap();
            let text = ModuleSpecFile::describe(&module, Some(e.name)).to_json();
            let file = ModuleSpecFile::parse(&text, e.name).unwrap();
            assert_eq!(file.name.as_deref(), Some(e.name));
            assert_eq!(file.build(&bounds).unwrap(), module, "{}", e.name);
        }
    }

    #[test]
    fn nested_ring_specs_build() {
        let text = r#"{"ring": {"type": "product", "factors": [{"type": "Zn", "n": 2}, {"type": "matrix", "base": {"type": "Zn", "n": 2}, "dim": 1}]},
                      "module": {"orders": [2], "action": [[[1]], [[0]]]}}"#;
        let m = ModuleSpecFile::parse(text, "inline").unwrap().build(&Bounds::default()).unwrap();
        assert_eq!(m.element_count(), 2);
    }

    #[test]
    fn unknown_keys_are_rejected_with_position() {
        let text = "{\"ring\": {\"type\": \"Zn\", \"n\": 4, \"extra\": 1},\n \"module\": {\"orders\": [4], \"action\": [[[1]]]}}";
        let err = ModuleSpecFile::parse(text, "bad.json").unwrap_err().to_string();
        assert!(err.starts_with("bad.json:1:"), "{err}");
        assert!(err.contains("extra"), "{err}");
        let text = r#"{"ring": {"type": "Zn", "n": 4}, "module": {"orders": [4], "action": [[[1]]], "name": "x"}}"#;
        assert!(ModuleSpecFile::parse(text, "bad.json").is_err());
    }

    #[test]
    fn semantic_errors_name_their_location() {
        let text = r#"{"ring": {"type": "product", "factors": [{"type": "Zn", "n": 0}]}, "module": {"orders": [2], "action": [[[1]]]}}"#;
        let err = ModuleSpecFile::parse(text, "f").unwrap().build(&Bounds::default()).unwrap_err().to_string();
        assert!(err.starts_with("ring.factors[0]:"), "{err}");
    }

    #[test]
    fn oversized_rings_hit_bounds_before_construction() {
        let text = r#"{"ring": {"type": "matrix", "base": {"type": "Zn", "n": 7}, "dim": 5}, "module": {"orders": [7], "action": []}}"#;
        let err = ModuleSpecFile::parse(text, "f").unwrap().build(&Bounds::default()).unwrap_err();
        assert_eq!(err.exit_code(), crate::EXIT_BOUNDS);
    }
}
