use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A desk-scale guardrail was hit; not a mathematical failure.
    #[error("bound exceeded: {what} ({actual} > {limit})")]
    BoundExceeded { what: &'static str, limit: u64, actual: u64 },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("set is not a submodule: {0}")]
    NotASubmodule(String),

    #[error("submodule is not fully invariant")]
    NotFullyInvariant,

    #[error("submodule is zero")]
    ZeroSubmodule,

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(&'static str),

    #[error("modules are over different rings")]
    RingMismatch,

    #[error("variety family is not closed under finite unions: {0}")]
    NotATopology(String),

    #[error("unknown theorem id `{id}` (known: {known})")]
    UnknownTheorem { id: String, known: String },

    #[error("generation exhausted for family {family} after {attempts} attempts")]
    GenerationExhausted { family: String, attempts: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Configurable desk-scale limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest module (or ring) element count that will be enumerated.
    pub max_elements: u64,
    /// Largest submodule lattice (or ideal lattice) that will be built.
    pub max_submodules: usize,
    /// Largest endomorphism ring that will be materialised.
    pub max_endomorphisms: u64,
    /// Search-tree nodes allowed per Hom-set enumeration.
    pub max_hom_nodes: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_elements: 4096,
            max_submodules: 100_000,
            max_endomorphisms: 4096,
            max_hom_nodes: 20_000_000,
        }
    }
}

impl Bounds {
    pub fn check_elements(&self, what: &'static str, n: u64) -> Result<()> {
        if n > self.max_elements {
            return Err(Error::BoundExceeded { what, limit: self.max_elements, actual: n });
        }
        Ok(())
    }
}
