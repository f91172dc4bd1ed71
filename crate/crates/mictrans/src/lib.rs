//! Microphone-to-microphone audio translation on log-spectrograms.
//!
//! Different microphones impose different transfer functions on the same
//! physical signal, so an audio classifier trained on one microphone loses
//! accuracy when deployed behind another. This crate learns a translation
//! between two microphone domains from *unpaired, unlabeled* spectrograms
//! using a cycle-consistent adversarial model, and measures how much of the
//! lost downstream accuracy the translation recovers.
//!
//! Real hardware recordings are replaced by synthetic microphone domains
//! with known ground truth: [`micsim`] renders a clean corpus through
//! per-frequency gain curves, which makes every result checkable against
//! the transfer functions that produced the data.
//!
//! Module map:
//!
//! - [`dsp`] — WAV ingestion, STFT log-spectrograms, MFCCs, VAD, patching
//! - [`micsim`] — synthetic microphone domains and frequency sweeps
//! - [`nncore`] — deterministic tensor/layer/optimizer substrate
//! - [`cyclegan`] — the translation model and its training loop
//! - [`calibrate`] — the frequency-sweep calibration baseline
//! - [`eval`] — PSNR, keyword classifier, accuracy-recovery metrics
//! - [`pipeline`] — deployment pipeline glue and the training manager
//!
//! The `mictrans` binary exposes the same functionality as subcommands;
//! see the crate examples for library-level usage.

pub mod calibrate;
pub mod cli;
pub mod config;
pub mod cyclegan;
pub mod dsp;
pub mod error;
pub mod eval;
pub mod micsim;
pub mod nncore;
pub mod pipeline;

pub use error::{Error, Result};
