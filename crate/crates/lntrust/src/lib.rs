//! Desk-scale simulator and library for decentralized output-only peer
//! querying with learned neighbor trust.
//!
//! Nodes on an undirected communication graph each train a small classifier
//! head on skewed local data. They exchange only queries and soft
//! predictions, never labels, parameters, or gradients. Each node fits a
//! compact trust model over relational features of its neighbors, and the
//! learned weights drive both gated distillation during training and a
//! closed-neighborhood ensemble at deployment.
//!
//! The crate is organized bottom-up:
//!
//! - [`numerics`]: probability vectors and shared loss primitives
//! - [`graph`]: the three communication topologies and neighborhood queries
//! - [`data`]: synthetic feature pools and the skewed per-node partition
//! - [`node_model`]: per-node classifier heads with in-crate backprop
//! - [`trust`]: probe statistics, relational features, the trust model,
//!   and the alternative weighting rules
//! - [`distill`]: ensembling, the negative-transfer gate, confidence
//!   filtering, and both distillation losses
//! - [`protocol`]: round-based orchestration, communication accounting,
//!   and the baseline runners
//! - [`verify`]: executable numerical checks for the accompanying bounds
//!
//! Everything is deterministic for a fixed seed: all randomness is drawn
//! from counter-derived streams so that runs reproduce byte-for-byte and
//! per-round node updates commute.

pub mod config;
pub mod data;
pub mod distill;
pub mod graph;
pub mod node_model;
pub mod numerics;
pub mod protocol;
pub mod streams;
pub mod trust;
pub mod verify;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("protocol violation: {0}")]
    ProtocolViolation(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serialization(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
