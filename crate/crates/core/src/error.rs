use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Enumeration would exceed the configured subgroup budget.
    #[error("subgroup enumeration budget ({budget}) exceeded for group {group}")]
    ResourceLimit { group: String, budget: usize },

    /// A structure table failed exhaustive axiom validation.
    #[error("{law} violated at {witness}")]
    ValidationFailed { law: String, witness: String },

    /// A law the library relies on failed; indicates a bug or a genuine counterexample.
    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
