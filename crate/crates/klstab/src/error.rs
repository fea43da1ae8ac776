use thiserror::Error;

use crate::hecke::Basis;

#[derive(Debug, Error)]
pub enum Error {
    #[error("integer coefficient overflow in exact arithmetic")]
    CoefficientOverflow,
    #[error("basis mismatch: expected {expected:?}, got {got:?}")]
    BasisMismatch { expected: Basis, got: Basis },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("rank {needed} exceeds the feasibility ceiling {ceiling}")]
    RankExceeded { needed: usize, ceiling: usize },
    #[error("routes disagree for x={x}, y={y} at rank {rank} ({detail}); this is a bug, please report it")]
    RouteDisagreement {
        x: String,
        y: String,
        rank: usize,
        detail: String,
    },
    #[error("tableaux have different shapes")]
    ShapeMismatch,
    #[error("partitions have different sizes")]
    SizeMismatch,
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("cache file has an unsupported or missing format version")]
    FormatVersionMismatch,
    #[error("cache file checksum mismatch")]
    ChecksumMismatch,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
