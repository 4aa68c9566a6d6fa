use std::collections::{BTreeMap, HashMap};

use super::{composition_character, socle, HeckeModule, Labels};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Vector};
use crate::qsym::QSym;
use crate::shape::{Cell, SkewPartition};
use crate::tabx::BijectiveTableau;

fn sub_tableau(t: &BijectiveTableau, cells: &[Cell], shift: u8) -> Result<BijectiveTableau> {
    let shape = SkewPartition::from_cells(cells)?;
    let mut sorted = cells.to_vec();
    sorted.sort();
    let entries = sorted.iter().map(|&c| t.at(c).expect("cell in shape") - shift).collect();
    BijectiveTableau::new(shape, entries)
}

fn entry_index(m: &HeckeModule) -> HashMap<Vec<u8>, usize> {
    match m.labels() {
        Labels::Tableaux(ts) => ts.iter().enumerate().map(|(k, t)| (t.entries().to_vec(), k)).collect(),
        _ => unreachable!("tableau module"),
    }
}

/// Splits SYT(s) by the cells holding 1..k. Each block is checked to be
/// closed under π_i (i ≠ k) and to match X_a ⊗ X_b generator by generator;
/// returns the pairs (a, b), sorted.
pub fn restrict_blocks(s: &SkewPartition, k: usize) -> Result<Vec<(SkewPartition, SkewPartition)>> {
    let n = s.size();
    if k == 0 || k >= n {
        return Err(Error::invalid(format!("restriction point {k} outside 1..{}", n.saturating_sub(1))));
    }
    let x = HeckeModule::tableau(s);
    let Labels::Tableaux(syt) = x.labels() else { unreachable!() };
    let mut blocks: BTreeMap<Vec<Cell>, Vec<usize>> = BTreeMap::new();
    for (idx, t) in syt.iter().enumerate() {
        let low: Vec<Cell> = t.cells().iter().copied().filter(|&c| t.at(c).unwrap() as usize <= k).collect();
        blocks.entry(low).or_default().push(idx);
    }
    let mut out = Vec::new();
    for (low, members) in blocks {
        let high: Vec<Cell> = s.cells().into_iter().filter(|c| !low.contains(c)).collect();
        let (a, b) = (SkewPartition::from_cells(&low)?, SkewPartition::from_cells(&high)?);
        let (xa, xb) = (HeckeModule::tableau(&a), HeckeModule::tableau(&b));
        if members.len() != xa.dim() * xb.dim() {
            return Err(Error::check(format!("block of {a} ⊗ {b} has {} tableaux", members.len())));
        }
        let (ia, ib) = (entry_index(&xa), entry_index(&xb));
        let mut pair_of = HashMap::new();
        for &m in &members {
            let t = &syt[m];
            let ta = sub_tableau(t, &low, 0)?;
            let tb = sub_tableau(t, &high, k as u8)?;
            pair_of.insert(m, (ia[ta.entries()], ib[tb.entries()]));
        }
        for i in (1..n).filter(|&i| i != k) {
            for &m in &members {
                let col = x.action(i).column(m);
                let (pa, pb) = pair_of[&m];
                let expected: Vec<(usize, usize)> = if i < k {
                    xa.action(i).column(pa).iter().map(|(r, _)| (*r, pb)).collect()
                } else {
                    xb.action(i - k).column(pb).iter().map(|(r, _)| (pa, *r)).collect()
                };
                let got: Vec<(usize, usize)> = col
                    .iter()
                    .map(|(r, _)| pair_of.get(r).copied().ok_or_else(|| Error::check(format!("π_{i} leaves the block"))))
                    .collect::<Result<_>>()?;
                if got != expected {
                    return Err(Error::check(format!("π_{i} disagrees with {a} ⊗ {b}")));
                }
            }
        }
        out.push((a, b));
    }
    out.sort_by_key(|(a, b)| (a.to_string(), b.to_string()));
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct SubmoduleReport {
    pub closed: bool,
    pub dim: usize,
    pub character: Option<QSym>,
    pub quotient_character: Option<QSym>,
    pub socle_dim: Option<usize>,
}

impl SubmoduleReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "closed": self.closed,
            "dim": self.dim,
            "character": self.character.as_ref().map(|c| c.to_string()),
            "quotient_character": self.quotient_character.as_ref().map(|c| c.to_string()),
            "socle_dim": self.socle_dim,
        })
    }
}

/// Whether span(vectors) is a submodule, with the characteristics of N and M/N.
pub fn verify_submodule(m: &HeckeModule, vectors: &[Vector]) -> Result<SubmoduleReport> {
    if vectors.iter().any(|v| v.len() != m.dim()) {
        return Err(Error::invalid("vector length does not match the module dimension"));
    }
    let ech = Echelon::from_vectors(m.dim(), vectors.iter().cloned());
    let dim = ech.rank();
    match m.restrict_to(&ech) {
        Err(Error::Relation(_)) => {
            Ok(SubmoduleReport { closed: false, dim, character: None, quotient_character: None, socle_dim: None })
        }
        Err(e) => Err(e),
        Ok(sub) => Ok(SubmoduleReport {
            closed: true,
            dim,
            character: Some(composition_character(&sub)?),
            quotient_character: Some(composition_character(&m.quotient_by(&ech))?),
            socle_dim: Some(socle(&sub)?.0.len()),
        }),
    }
}
