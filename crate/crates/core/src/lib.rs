//! Online distillation of a shallow student cohort from a co-trained deep
//! teacher, with deep mutual learning between peers and curriculum-scheduled
//! adversarial perturbation of input embeddings.
//!
//! The crate is the algorithmic core: dense reverse-mode autodiff, a miniature
//! transformer encoder exposing the internals needed for feature-level
//! distillation, the loss family, the curriculum noise function, Adam, the
//! semi-supervised training loop, and the analysis metrics (accuracy, linear
//! CKA, KL match). Everything is deterministic given a seed and free of IO;
//! file formats and the command-line front end live in the companion crate.
//!
//! The crate is `no_std`-compatible (with `alloc`); the default `std` feature
//! only widens dependency features and changes nothing in this crate's code.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod autodiff;
pub mod data;
pub mod error;
pub mod eval;
pub mod gradcheck;
pub mod losses;
pub mod matrix;
pub mod model;
pub mod optim;
pub mod perturb;
pub mod trainer;

pub use error::{Error, Result};
pub use matrix::Matrix;
