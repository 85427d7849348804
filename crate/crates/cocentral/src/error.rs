use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("invalid group spec `{0}`")]
    InvalidSpec(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not central")]
    NotCentral,
    #[error("center is not cyclic")]
    CenterNotCyclic,
    #[error("{0} does not divide the order of the center")]
    BadFiberOrder(u64),
    #[error("{l} is not a unit modulo {m}")]
    NotUnit { l: u64, m: u64 },
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("invalid datum: {}", .0.join("; "))]
    InvalidDatum(Vec<String>),
    #[error("invalid cocentral action: {0}")]
    InvalidAction(String),
    #[error("cocycles are not cohomologous")]
    NotCohomologous,
    #[error("group is not dihedral in canonical ordering")]
    NotDihedral,
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
