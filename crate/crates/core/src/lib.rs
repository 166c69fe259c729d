//! Video object retrieval from descriptor transition tables.
//!
//! A video sequence is represented as a dense grid of quantized local
//! appearance descriptors per frame. For every gallery object a descriptor
//! transition table (DTT) is learnt: a row-stochastic matrix giving the
//! probability that a patch's descriptor word turns into another word under
//! a small viewpoint change. Matching a query against a gallery object runs
//! maximum-likelihood word tracks through the query under the gallery's
//! table, separates foreground tracks from clutter by min-cut over a track
//! coherence graph, and scores the object by the foreground track
//! likelihood.
//!
//! Pipeline stages map onto the modules below:
//!
//! * [`ingest`] — frame loading and image-space distances
//! * [`scalenorm`] — motion-parallax scale normalization and coarse masks
//! * [`densegrid`] — dense overlapping-patch descriptor extraction
//! * [`codebook`] — k-means vocabulary and word quantization
//! * [`dtt`] — transition table learning
//! * [`tracker`] — Viterbi word-track inference
//! * [`segcut`] — track-level graph-cut segmentation
//! * [`matcher`] — gallery scoring and ranking
//! * [`baselines`] — max-max cosine reference methods
//! * [`harness`] — evaluation protocol, synthetic data, reports

pub mod baselines;
pub mod codebook;
pub mod densegrid;
pub mod dtt;
pub mod error;
pub mod harness;
pub mod ingest;
pub mod matcher;
pub mod scalenorm;
pub mod segcut;
pub mod synth;
pub mod tracker;

pub use error::{Error, Result};
