//! Exact combinatorics and 0-Hecke representation theory of regular Schur
//! labeled skew shape posets.

pub mod error;
pub mod linalg;
pub mod symgrp;

pub use error::{Error, Result};
pub mod shape;
pub mod tabx;
pub mod qsym;
pub mod config;
pub mod poset;
pub mod hecke;
pub mod structure;
pub mod verify;
