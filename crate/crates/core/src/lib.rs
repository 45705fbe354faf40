//! Multiscale analysis of skill co-occurrence networks.
//!
//! The crate turns a corpus of job-advert records into a skills graph and a
//! set of robust multiscale clusterings of that graph, then computes the
//! descriptive statistics used to characterise the clusters:
//!
//! 1. [`corpus`] — deduplication, lexicon mapping, region resolution, and the
//!    skill co-occurrence matrix `K`.
//! 2. [`embedding`] — correspondence analysis of `K` and cosine similarities
//!    between the resulting skill vectors.
//! 3. [`graph`] — distance transform and CkNN sparsification into a weighted
//!    undirected skills graph.
//! 4. [`stability`] — Markov Stability: diffusion operators, per-scale
//!    partition optimization, NVI robustness, and robust-scale selection.
//! 5. [`metrics`] / [`panel`] — per-cluster statistics, coverage, entropy,
//!    regional profiles, and two-period comparison.
//! 6. [`synth`] — planted-partition corpus generation and brute-force oracles
//!    for testing the pipeline end to end.
//!
//! The crate is `no_std` + `alloc`: everything here is pure computation on
//! owned buffers. File formats, the CLI, and parallel orchestration live in
//! the companion `skillnet-cli` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;

pub mod corpus;
pub mod embedding;
pub mod graph;
pub mod linalg;
pub mod metrics;
pub mod panel;
pub mod partition;
pub mod rng;
pub mod stability;
pub mod synth;

pub use error::{Error, Result};
pub use partition::Partition;
