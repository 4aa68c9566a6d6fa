//! Process-wide size caps.

use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::symgrp::MAX_N;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest n accepted by enumerations over S_n.
    pub max_n: usize,
    /// Largest module dimension accepted by Hom-space solves.
    pub max_dim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_n: MAX_N, max_dim: 200 }
    }
}

static CAPS: RwLock<Caps> = RwLock::new(Caps { max_n: MAX_N, max_dim: 200 });

pub fn caps() -> Caps {
    *CAPS.read().unwrap()
}

pub fn set_caps(c: Caps) {
    *CAPS.write().unwrap() = Caps { max_n: c.max_n.min(MAX_N), max_dim: c.max_dim };
}

pub fn check_n(n: usize) -> Result<()> {
    let cap = caps().max_n;
    if n > cap {
        return Err(Error::Cap(format!("n = {n} exceeds cap {cap}")));
    }
    Ok(())
}

pub fn check_dim(dim: usize) -> Result<()> {
    let cap = caps().max_dim;
    if dim > cap {
        return Err(Error::Cap(format!("dimension {dim} exceeds cap {cap}")));
    }
    Ok(())
}
