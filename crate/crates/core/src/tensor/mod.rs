//! Minimal reverse-mode autodiff over dense n-d arrays.
//!
//! The engine is a flat tape: ops execute eagerly and append a node holding
//! the forward value plus enough information to push gradients to parents.
//! Node ids grow monotonically, so reverse iteration over the tape is a
//! valid topological order for backpropagation.
//!
//! Everything is generic over [`Scalar`] so the same model code runs in
//! single precision for training speed and double precision for the
//! finite-difference gradient checks.

mod gradcheck;
mod tape;

pub use gradcheck::{check_gradients, numeric_grad, GradCheckReport};
pub use tape::{Gradients, Tape, Var};

use ndarray::ArrayD;

/// Element type tag stored in serialized containers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dtype {
    F32,
    F64,
}

impl Dtype {
    pub fn tag(self) -> u8 {
        match self {
            Dtype::F32 => 4,
            Dtype::F64 => 8,
        }
    }

    pub fn from_tag(tag: u8) -> Option<Self> {
        match tag {
            4 => Some(Dtype::F32),
            8 => Some(Dtype::F64),
            _ => None,
        }
    }

    pub fn byte_width(self) -> usize {
        match self {
            Dtype::F32 => 4,
            Dtype::F64 => 8,
        }
    }
}

/// Floating-point element type usable by the tape.
pub trait Scalar:
    num_traits::Float
    + ndarray::LinalgScalar
    + ndarray::ScalarOperand
    + std::fmt::Debug
    + std::fmt::Display
    + Send
    + Sync
    + 'static
{
    const DTYPE: Dtype;

    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;
    fn write_le(self, out: &mut Vec<u8>);
    fn read_le(bytes: &[u8]) -> Self;
}

impl Scalar for f32 {
    const DTYPE: Dtype = Dtype::F32;

    fn from_f64(v: f64) -> Self {
        v as f32
    }
    fn to_f64(self) -> f64 {
        self as f64
    }
    fn write_le(self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.to_le_bytes());
    }
    fn read_le(bytes: &[u8]) -> Self {
        f32::from_le_bytes(bytes[..4].try_into().unwrap())
    }
}

impl Scalar for f64 {
    const DTYPE: Dtype = Dtype::F64;

    fn from_f64(v: f64) -> Self {
        v
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn write_le(self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.to_le_bytes());
    }
    fn read_le(bytes: &[u8]) -> Self {
        f64::from_le_bytes(bytes[..8].try_into().unwrap())
    }
}

/// Convert an array between scalar types (used at precision boundaries).
pub fn cast_array<A: Scalar, B: Scalar>(a: &ArrayD<A>) -> ArrayD<B> {
    a.mapv(|v| B::from_f64(v.to_f64()))
}
