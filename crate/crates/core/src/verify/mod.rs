//! Parameterized sweeps that reproduce the structural results at small n,
//! reported as deterministic JSON lines.

mod checks;
pub mod fixtures;

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::config::check_n;
use crate::error::{Error, Result};

/// Registered check ids; those taking `n` are marked.
pub const CHECKS: [(&str, bool); 12] = [
    ("bw", true),
    ("interval", true),
    ("example_4_3", false),
    ("classes", true),
    ("classification", true),
    ("dpc", true),
    ("filtration", true),
    ("example_6_2_table", false),
    ("sec7_decomps", false),
    ("kp", true),
    ("properties", true),
    ("table2", false),
];

fn takes_n(id: &str) -> Result<bool> {
    CHECKS
        .iter()
        .find(|(c, _)| *c == id)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::invalid(format!("unknown check \"{id}\"")))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub seed: u64,
    /// Random sample size in place of an exhaustive sweep, where supported.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sample: Option<usize>,
}

impl Params {
    pub fn n(n: usize) -> Params {
        Params { n: Some(n), ..Params::default() }
    }

    pub fn none() -> Params {
        Params::default()
    }

    pub fn with_seed(mut self, seed: u64) -> Params {
        self.seed = seed;
        self
    }

    pub fn with_sample(mut self, k: usize) -> Params {
        self.sample = Some(k);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub check_id: String,
    pub instance: Value,
    pub reason: String,
}

impl Failure {
    /// Replay payload accepted by [`replay`].
    pub fn payload(&self) -> Value {
        json!({"check_id": self.check_id, "instance": self.instance})
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub params: Params,
    pub instances: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check_id": self.check_id,
            "params": self.params,
            "instances": self.instances,
            "pass": self.passed(),
            "failures": self.failures,
        })
    }

    pub fn to_json_line(&self) -> String {
        self.to_json().to_string()
    }
}

fn run_instance(id: &str, inst: &Value) -> Option<String> {
    match checks::check(id, inst) {
        Ok(r) => r,
        Err(e) => Some(format!("error: {e}")),
    }
}

pub fn run_check(id: &str, params: &Params) -> Result<CheckReport> {
    if takes_n(id)? {
        let n = params.n.ok_or_else(|| Error::invalid(format!("check \"{id}\" needs n")))?;
        check_n(n)?;
    }
    let insts = checks::instances(id, params)?;
    let failures: Vec<Failure> = insts
        .par_iter()
        .filter_map(|inst| {
            run_instance(id, inst).map(|reason| Failure { check_id: id.to_string(), instance: inst.clone(), reason })
        })
        .collect();
    Ok(CheckReport { check_id: id.to_string(), params: params.clone(), instances: insts.len(), failures })
}

/// Re-runs one failure payload; `None` means the instance now passes.
pub fn replay(payload: &Value) -> Result<Option<String>> {
    let id = payload
        .get("check_id")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::invalid("payload lacks \"check_id\""))?;
    takes_n(id)?;
    let inst = payload.get("instance").ok_or_else(|| Error::invalid("payload lacks \"instance\""))?;
    Ok(run_instance(id, inst))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Fast,
    Full,
    Extended,
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Level> {
        match s {
            "fast" => Ok(Level::Fast),
            "full" => Ok(Level::Full),
            "extended" => Ok(Level::Extended),
            other => Err(Error::invalid(format!("unknown level \"{other}\""))),
        }
    }
}

const SWEEPS: [&str; 8] = ["bw", "interval", "classes", "classification", "dpc", "filtration", "kp", "properties"];

/// The (check, params) pairs making up a level.
pub fn suite_plan(level: Level, seed: u64) -> Vec<(&'static str, Params)> {
    let mut plan = Vec::new();
    match level {
        Level::Fast | Level::Full => {
            let top = if level == Level::Fast { 4 } else { 5 };
            for id in SWEEPS {
                for n in 1..=top {
                    plan.push((id, Params::n(n).with_seed(seed)));
                }
            }
            plan.push(("example_4_3", Params::none().with_seed(seed)));
            plan.push(("example_6_2_table", Params::none().with_seed(seed)));
            if level == Level::Full {
                for id in ["interval", "filtration", "kp", "properties"] {
                    plan.push((id, Params::n(6).with_seed(seed)));
                }
            }
        }
        Level::Extended => {
            plan.push(("bw", Params::n(6).with_seed(seed)));
            plan.push(("dpc", Params::n(6).with_seed(seed)));
            plan.push(("classes", Params::n(6).with_seed(seed).with_sample(1000)));
            plan.push(("sec7_decomps", Params::none().with_seed(seed)));
            plan.push(("table2", Params::none().with_seed(seed)));
        }
    }
    plan
}

pub fn run_suite(level: Level, seed: u64) -> Result<Vec<CheckReport>> {
    suite_plan(level, seed).iter().map(|(id, p)| run_check(id, p)).collect()
}

pub fn summary_table(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<20} {:<24} {:>9} {:>8}  status", "check", "params", "instances", "failures");
    for r in reports {
        let params = serde_json::to_string(&r.params).unwrap_or_default();
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{:<20} {:<24} {:>9} {:>8}  {status}", r.check_id, params, r.instances, r.failures.len());
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let _ = writeln!(out, "{} checks, {} failed", reports.len(), failed);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_check_is_rejected() {
        assert!(run_check("nope", &Params::none()).is_err());
        assert!(run_check("bw", &Params::none()).is_err());
        assert!(replay(&json!({"check_id": "nope", "instance": {}})).is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        for id in ["bw", "interval", "classes", "dpc", "filtration", "kp", "properties", "classification"] {
            for n in 1..=3 {
                let r = run_check(id, &Params::n(n)).unwrap();
                assert!(r.passed(), "{}", r.to_json_line());
                assert!(r.instances > 0);
            }
        }
    }

    #[test]
    fn poset_counts() {
        assert_eq!(run_check("bw", &Params::n(4)).unwrap().instances, 220);
        assert_eq!(run_check("dpc", &Params::n(4)).unwrap().instances, 219);
    }

    #[test]
    fn examples_pass() {
        for id in ["example_4_3", "example_6_2_table"] {
            let r = run_check(id, &Params::none()).unwrap();
            assert!(r.passed(), "{}", r.to_json_line());
        }
    }

    #[test]
    fn failures_replay() {
        let f = Failure {
            check_id: "example_4_3".into(),
            instance: json!({"kind": "class", "bottom": "2134", "top": "2143", "expect": {"size": 4}}),
            reason: String::new(),
        };
        assert!(replay(&f.payload()).unwrap().is_some());
        let ok = json!({"check_id": "bw", "instance": {"kind": "count", "n": 3}});
        assert_eq!(replay(&ok).unwrap(), None);
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_check("classes", &Params::n(4).with_seed(3).with_sample(20)).unwrap();
        let b = run_check("classes", &Params::n(4).with_seed(3).with_sample(20)).unwrap();
        assert_eq!(a.to_json_line(), b.to_json_line());
        let back: CheckReport = serde_json::from_value(a.to_json()).unwrap();
        assert_eq!(back.check_id, a.check_id);
    }

    #[test]
    fn suite_plans() {
        let fast = suite_plan(Level::Fast, 0);
        assert!(fast.iter().all(|(_, p)| p.n.map_or(true, |n| n <= 4)));
        assert!(suite_plan(Level::Extended, 0).iter().any(|(id, _)| *id == "table2"));
        assert_eq!("full".parse::<Level>().unwrap(), Level::Full);
    }

    #[test]
    fn summary_lists_every_report() {
        let r = run_check("example_4_3", &Params::none()).unwrap();
        let t = summary_table(&[r]);
        assert!(t.contains("example_4_3"));
        assert!(t.contains("PASS"));
    }
}
