use num_bigint::BigInt;

/// Errors reported by the exact-arithmetic and classification layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("matrix is not invertible over the integers (det = {0})")]
    NotUnimodular(BigInt),

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("exterior power degree {k} exceeds matrix size {n}")]
    DegreeTooLarge { k: usize, n: usize },

    #[error("ambient rank {0} exceeds the supported cap of {1}")]
    RankTooLarge(usize, usize),

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("operation not defined for this group class: {0}")]
    Unsupported(String),

    #[error("certificate requires a group with hdim_vcyc = vcd + 1, got case {0}")]
    WrongCase(String),

    #[error("product factors must carry exact dimension values")]
    InexactProduct,
}

pub type Result<T> = std::result::Result<T, Error>;
