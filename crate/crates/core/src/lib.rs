//! Certifying recognition of split, almost-split and doubled graphs.
//!
//! Recognizers return either a [`DoubledCertificate`] that can be checked
//! with [`check_aligned`], or a [`Witness`]: a minimal induced subgraph that
//! is not in the class. The [`miner`] module enumerates small graphs to
//! derive the minimal obstruction sets independently.

pub mod canon;
pub mod cli;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod miner;
pub mod patterns;
pub mod recognition;
pub mod sample;
pub mod selfcheck;
pub mod structure;

pub use canon::{are_isomorphic, canonicalize, CanonicalForm};
pub use error::{Error, Result};
pub use graph::Graph;
pub use patterns::{circus, family_f_seed, find_any_of, find_induced, Embedding, PatternId};
pub use recognition::{
    minimize_witness, recognize_almost_split, recognize_doubled, recognize_split, ClassId,
    RecognitionOutcome, Witness,
};
pub use structure::{check_aligned, extend_to_double_split, is_doubled_oracle, DoubledCertificate};
