use thiserror::Error;

/// Largest `n` accepted by direct enumeration. Subset generation above
/// this is intractable at desk scale.
pub const ENUMERATION_MAX_N: u64 = 25;

/// Default ceiling on `n` for every recursive procedure.
pub const DEFAULT_N_MAX: u64 = 2000;

/// Environment variable that overrides the default `n` ceiling.
pub const N_MAX_ENV_VAR: &str = "IBN_EZRA_N_MAX";

/// Configured size ceiling shared by all operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    n_max: u64,
}

impl Limits {
    pub fn new(n_max: u64) -> Self {
        Limits { n_max }
    }

    /// Reads the ceiling from `IBN_EZRA_N_MAX` when set, otherwise
    /// uses the default of 2000.
    pub fn from_env() -> Self {
        match std::env::var(N_MAX_ENV_VAR) {
            Ok(raw) => match raw.trim().parse::<u64>() {
                Ok(v) => Limits::new(v),
                Err(_) => Limits::default(),
            },
            Err(_) => Limits::default(),
        }
    }

    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    pub fn check(&self, n: u64) -> Result<(), Error> {
        if n > self.n_max {
            Err(Error::LimitExceeded {
                value: n,
                n_max: self.n_max,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::new(DEFAULT_N_MAX)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("value {value} exceeds the configured limit N_MAX = {n_max}")]
    LimitExceeded { value: u64, n_max: u64 },

    #[error("direct enumeration refuses n = {n} (guard: n <= {max})")]
    EnumerationGuard { n: u64, max: u64 },

    #[error("invalid query: k = {k} exceeds n = {n}")]
    KOutOfRange { n: u64, k: u64 },

    #[error("duplicate planet name: {0}")]
    DuplicatePlanet(String),

    #[error("planet list is empty")]
    EmptyPlanetList,

    #[error("planet name is empty")]
    EmptyPlanetName,

    #[error("min_size must be at least 1, got {0}")]
    MinSizeTooSmall(u64),

    #[error("circle size must be at least 1")]
    EmptyCircle,

    #[error("step must be at least 1")]
    ZeroStep,

    #[error("start position {start} outside 1..={size}")]
    StartOutOfRange { start: u64, size: u64 },

    #[error("doomed count {count} exceeds circle size {size}")]
    DoomedCountTooLarge { count: u64, size: u64 },

    #[error("doomed position {position} outside 1..={size}")]
    DoomedPositionOutOfRange { position: u64, size: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
