//! Joint transductive-inductive nuclei segmentation.
//!
//! The crate is organized around a small reverse-mode autodiff engine
//! ([`tensor`]) on top of which the model components are built:
//!
//! - [`datakit`] — dataset ingestion, synthetic data, patching/stitching,
//!   augmentation, and episodic sampling
//! - [`backbone`] — convolutional feature extractor with three output strides
//! - [`maskenc`] — two-head mask encoder producing label encodings
//! - [`transduction`] — transformer encoder/decoder propagating template
//!   labels to the target via cross-attention
//! - [`induction`] — differentiable regularized least-squares few-shot learner
//! - [`decoder`] — segmentation decoder fusing both branches with skip
//!   features into full-resolution logits
//! - [`trainer`] — episodic meta-training with best-epoch selection
//! - [`inference`] — two-stage transductive inference with pseudo-label reuse
//! - [`metrics`] — Dice and object-level F1 evaluation

pub mod backbone;
pub mod checkpoint;
pub mod config;
pub mod datakit;
pub mod decoder;
pub mod error;
pub mod induction;
pub mod inference;
pub mod maskenc;
pub mod metrics;
pub mod model;
pub mod params;
pub mod rng;
pub mod tensor;
pub mod trainer;
pub mod transduction;

pub use config::RunConfig;
pub use error::{DataError, EvalError, InferenceError, ModelError, TrainError};
pub use tensor::{Dtype, Scalar, Tape, Var};
