//! Error types shared across the crate.

use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DataError {
    #[error("io error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("image decode error at {path}: {source}")]
    Image {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },
    #[error("annotation xml parse error at {path}: {msg}")]
    Xml { path: PathBuf, msg: String },
    #[error("missing annotation for image stem `{stem}`")]
    MissingAnnotation { stem: String },
    #[error("patch size {size} exceeds image dimension {dim} for record `{id}`")]
    PatchTooLarge { id: String, size: usize, dim: usize },
    #[error("pixel ({x}, {y}) not covered by any patch")]
    UncoveredPixel { x: usize, y: usize },
    #[error("episode needs {required} patches but only {available} are available")]
    InsufficientPatches { required: usize, available: usize },
    #[error("record `{id}`: {msg}")]
    InvalidRecord { id: String, msg: String },
    #[error("cache file {path}: {msg}")]
    Cache { path: PathBuf, msg: String },
}

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("input size {size} is not divisible by {divisor}")]
    SizeNotDivisible { size: usize, divisor: usize },
    #[error("channel mismatch: expected {expected}, got {got}")]
    ChannelMismatch { expected: usize, got: usize },
    #[error("attention requires at least one key token")]
    EmptyKeys,
    #[error("token/encoding misalignment: {tokens} tokens vs {encodings} encodings")]
    TokenMisalignment { tokens: usize, encodings: usize },
    #[error("stride mismatch: expected {expected}, got {got}")]
    StrideMismatch { expected: usize, got: usize },
    #[error("mask input must be binary (found value {value})")]
    NonBinaryMask { value: f64 },
    #[error("shape mismatch: {msg}")]
    Shape { msg: String },
}

#[derive(Debug, Error)]
pub enum TrainError {
    #[error(transparent)]
    Data(#[from] DataError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("non-finite loss at epoch {epoch}, step {step} (episode seed {episode_seed})")]
    NonFiniteLoss {
        epoch: usize,
        step: usize,
        episode_seed: u64,
    },
    #[error("dataset record `{id}` is missing a mask; training requires masks")]
    MissingMask { id: String },
    #[error("checkpoint error: {0}")]
    Checkpoint(String),
    #[error("io error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Error)]
pub enum InferenceError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Data(#[from] DataError),
    #[error("training set is empty; stage 1 needs template sources")]
    EmptyTrainingSet,
    #[error("need {required} template candidates but only {available} are available")]
    InsufficientCandidates { required: usize, available: usize },
    #[error("pseudo-label store is missing patch `{patch_id}`")]
    MissingPatch { patch_id: String },
    #[error("store file {path}: {msg}")]
    Store { path: PathBuf, msg: String },
    #[error("stage config invalid: {msg}")]
    Config { msg: String },
}

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("mask shape mismatch: {a:?} vs {b:?}")]
    ShapeMismatch { a: Vec<usize>, b: Vec<usize> },
    #[error("prediction/ground-truth key sets differ; missing: {missing:?}, extra: {extra:?}")]
    KeySetMismatch {
        missing: Vec<String>,
        extra: Vec<String>,
    },
}
