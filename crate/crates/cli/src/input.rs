//! Parsing of command-line payloads: inline values, `@file` references and
//! `kind:value` module descriptions.

use std::str::FromStr;

use serde_json::Value;
use skewposet::hecke::HeckeModule;
use skewposet::poset::LabeledPoset;
use skewposet::shape::{Composition, GeneralizedComposition, SkewPartition};
use skewposet::symgrp::Permutation;
use skewposet::tabx::{canonical, BijectiveTableau, Canonical};
use skewposet::{Error, Result};

/// Reads `@path` from disk, otherwise returns the argument itself.
pub fn load(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::invalid(format!("{path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

pub fn json(arg: &str) -> Result<Value> {
    serde_json::from_str(&load(arg)?).map_err(|e| Error::invalid(format!("bad JSON: {e}")))
}

pub fn parsed<T: FromStr<Err = Error>>(arg: &str) -> Result<T> {
    load(arg)?.trim().parse()
}

pub fn perm(arg: &str) -> Result<Permutation> {
    parsed(arg)
}

pub fn shape(arg: &str) -> Result<SkewPartition> {
    parsed(arg)
}

pub fn tableau(arg: &str) -> Result<BijectiveTableau> {
    parsed(arg)
}

pub fn poset(arg: &str) -> Result<LabeledPoset> {
    parsed(arg)
}

/// A module description, `kind:value`:
/// `shape:` M_poset(τ₀), `syt:` X_{λ/μ}, `tau:` M_poset(τ), `poset:` M_P,
/// `interval:σ..ρ`, `projective:`, `simple:`, `subset:σ,ρ,…`, `json:`.
#[derive(Clone, Debug)]
pub enum ModuleSpec {
    Shape(SkewPartition),
    Syt(SkewPartition),
    Tau(BijectiveTableau),
    Poset(LabeledPoset),
    Interval(Permutation, Permutation),
    Projective(GeneralizedComposition),
    Simple(Composition),
    Subset(Vec<Permutation>),
    Json(Value),
}

impl FromStr for ModuleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<ModuleSpec> {
        let (kind, rest) = s.split_once(':').ok_or_else(|| Error::invalid(format!("module spec {s:?} lacks `kind:`")))?;
        let rest = rest.trim();
        Ok(match kind.trim() {
            "shape" => ModuleSpec::Shape(shape(rest)?),
            "syt" => ModuleSpec::Syt(shape(rest)?),
            "tau" => ModuleSpec::Tau(tableau(rest)?),
            "poset" => ModuleSpec::Poset(poset(rest)?),
            "interval" => {
                let (a, b) = rest.split_once("..").ok_or_else(|| Error::invalid("interval spec is `σ..ρ`"))?;
                ModuleSpec::Interval(perm(a)?, perm(b)?)
            }
            "projective" => ModuleSpec::Projective(parsed(rest)?),
            "simple" => ModuleSpec::Simple(parsed(rest)?),
            "subset" => ModuleSpec::Subset(rest.split(',').map(perm).collect::<Result<_>>()?),
            "json" => ModuleSpec::Json(json(rest)?),
            other => return Err(Error::invalid(format!("unknown module kind {other:?}"))),
        })
    }
}

impl ModuleSpec {
    pub fn build(&self) -> Result<HeckeModule> {
        match self {
            ModuleSpec::Shape(s) => HeckeModule::poset(&LabeledPoset::from_tableau(&canonical(s, Canonical::Tau0))),
            ModuleSpec::Syt(s) => Ok(HeckeModule::tableau(s)),
            ModuleSpec::Tau(t) => HeckeModule::poset(&LabeledPoset::from_tableau(t)),
            ModuleSpec::Poset(p) => HeckeModule::poset(p),
            ModuleSpec::Interval(a, b) => HeckeModule::interval(a, b),
            ModuleSpec::Projective(g) => HeckeModule::projective(g),
            ModuleSpec::Simple(a) => Ok(HeckeModule::simple(a)),
            ModuleSpec::Subset(v) => HeckeModule::from_subset(v),
            ModuleSpec::Json(v) => HeckeModule::from_json(v),
        }
    }

    /// The labeled poset behind a poset module description.
    pub fn poset(&self) -> Result<LabeledPoset> {
        match self {
            ModuleSpec::Shape(s) => Ok(LabeledPoset::from_tableau(&canonical(s, Canonical::Tau0))),
            ModuleSpec::Tau(t) => Ok(LabeledPoset::from_tableau(t)),
            ModuleSpec::Poset(p) => Ok(p.clone()),
            _ => Err(Error::invalid("this command needs a poset module (shape:, tau: or poset:)")),
        }
    }
}
