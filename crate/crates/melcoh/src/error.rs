use gfp_linalg as gfp;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("element does not normalize the domain: {0}")]
    NotNormalizing(String),
    #[error("module law violated: {0}")]
    ModuleLaw(String),
    #[error("restrictedness violated: no p-power image for {0}")]
    NotRestricted(String),
    #[error("internal stability violation: {0}")]
    Stability(String),
    #[error("value outside block: {0}")]
    OutsideBlock(String),
    #[error(transparent)]
    Linalg(#[from] gfp::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
