use super::{HeckeModule, Twist};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Mat, Rat, Vector};
use crate::qsym::QSym;
use crate::shape::Composition;
use crate::symgrp::DescentSet;

/// rad M is generated by the images of the commutators [A_i, A_{i+1}];
/// the quotient then carries commuting idempotents and is semisimple.
pub fn radical(m: &HeckeModule) -> Echelon {
    let mut seeds = Vec::new();
    for w in m.matrices().windows(2) {
        let c = w[0].mul(&w[1]).sub(&w[1].mul(&w[0]));
        for j in 0..m.dim() {
            if !c.column(j).is_empty() {
                let mut v = vec![Rat::ZERO; m.dim()];
                for (r, x) in c.column(j) {
                    v[*r] = x.clone();
                }
                seeds.push(v);
            }
        }
    }
    m.generated_submodule(seeds)
}

/// Splits a semisimple module into joint eigenspaces; returns (fixed set, multiplicity).
fn joint_eigenspaces(m: &HeckeModule) -> Result<Vec<(DescentSet, usize)>> {
    let n = m.n();
    let d = m.dim();
    let mats: Vec<Mat> = m.matrices().iter().map(|a| a.to_dense()).collect();
    let mut pieces: Vec<(Vec<Vector>, Vec<usize>)> =
        vec![((0..d).map(|k| crate::linalg::unit_vec(d, k)).collect(), Vec::new())];
    for (i, a) in mats.iter().enumerate() {
        let mut next = Vec::new();
        for (basis, fixed) in pieces {
            let img = Echelon::from_vectors(d, basis.iter().map(|v| a.mul_vec(v)));
            let ker = Echelon::from_vectors(
                d,
                basis.iter().map(|v| {
                    let av = a.mul_vec(v);
                    v.iter().zip(&av).map(|(x, y)| x - y).collect()
                }),
            );
            if img.rank() + ker.rank() != basis.len() {
                return Err(Error::internal("quotient by the radical is not semisimple"));
            }
            if img.rank() > 0 {
                let mut f = fixed.clone();
                f.push(i + 1);
                next.push((img.basis().to_vec(), f));
            }
            if ker.rank() > 0 {
                next.push((ker.basis().to_vec(), fixed));
            }
        }
        pieces = next;
    }
    Ok(pieces
        .into_iter()
        .filter(|(b, _)| !b.is_empty())
        .map(|(b, f)| (DescentSet::new(n, f).expect("in range"), b.len()))
        .collect())
}

fn simples_of(m: &HeckeModule) -> Result<Vec<Composition>> {
    if m.dim() == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (fixed, mult) in joint_eigenspaces(m)? {
        let alpha = Composition::from_set(&fixed.complement());
        out.extend(std::iter::repeat(alpha).take(mult));
    }
    out.sort();
    Ok(out)
}

/// Composition factors of M / rad M, sorted.
pub fn top(m: &HeckeModule) -> Result<Vec<Composition>> {
    simples_of(&m.quotient_by(&radical(m)))
}

/// Composition factors of soc M with a basis of soc M; the socle is the
/// annihilator of the radical of the transpose module.
pub fn socle(m: &HeckeModule) -> Result<(Vec<Composition>, Echelon)> {
    let dual = super::twist(m, Twist::ChiDual);
    let factors = top(&dual)?;
    let ann = Echelon::from_vectors(m.dim(), radical(&dual).annihilator());
    if ann.rank() != factors.len() {
        return Err(Error::internal("socle dimension disagrees with the dual top"));
    }
    Ok((factors, ann))
}

/// Characteristics of the radical layers rad^k M / rad^{k+1} M.
pub fn radical_layers(m: &HeckeModule) -> Result<Vec<QSym>> {
    let mut layers = Vec::new();
    let mut cur = m.clone();
    while cur.dim() > 0 {
        let rad = radical(&cur);
        let mut ch = QSym::zero(m.n());
        for alpha in simples_of(&cur.quotient_by(&rad))? {
            ch.add_term(alpha, &Rat::ONE);
        }
        layers.push(ch);
        cur = cur.restrict_to(&rad)?;
    }
    Ok(layers)
}

/// ch over any basis, as the sum of the radical layers.
pub fn composition_character(m: &HeckeModule) -> Result<QSym> {
    Ok(radical_layers(m)?.into_iter().fold(QSym::zero(m.n()), |a, b| a.add(&b)))
}

#[derive(Clone, Debug)]
pub struct RadicalTopSocle {
    pub radical: Vec<Vector>,
    pub top: Vec<Composition>,
    pub socle: Vec<Composition>,
    pub socle_basis: Vec<Vector>,
}

impl HeckeModule {
    pub fn radical_top_socle(&self) -> Result<RadicalTopSocle> {
        let rad = radical(self);
        let (socle, soc) = socle(self)?;
        Ok(RadicalTopSocle {
            radical: rad.basis().to_vec(),
            top: top(self)?,
            socle,
            socle_basis: soc.basis().to_vec(),
        })
    }
}
