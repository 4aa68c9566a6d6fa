use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{composition_character, radical_layers, socle, top, twist, HeckeModule, Twist};
use crate::config::check_dim;
use crate::error::{Error, Result};
use crate::linalg::{sparse_kernel, Echelon, Mat, Rat, Vector};
use crate::symgrp::Permutation;

/// A module homomorphism, stored as a dim(target) × dim(source) matrix.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: HeckeModule,
    pub target: HeckeModule,
    pub matrix: Mat,
}

pub fn intertwines(source: &HeckeModule, target: &HeckeModule, x: &Mat) -> bool {
    if source.n() != target.n() || x.rows() != target.dim() || x.cols() != source.dim() {
        return false;
    }
    source.matrices().iter().zip(target.matrices()).all(|(a, b)| x.mul(&a.to_dense()) == b.to_dense().mul(x))
}

impl ModuleMap {
    pub fn new(source: HeckeModule, target: HeckeModule, matrix: Mat) -> Result<ModuleMap> {
        if !intertwines(&source, &target, &matrix) {
            return Err(Error::check("matrix does not commute with the H_n(0)-action"));
        }
        Ok(ModuleMap { source, target, matrix })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn kernel(&self) -> Vec<Vector> {
        self.matrix.kernel()
    }

    pub fn image(&self) -> Echelon {
        Echelon::from_vectors(self.target.dim(), (0..self.matrix.cols()).map(|c| self.matrix.col(c)))
    }
}

/// Basis of Hom(M, N) as matrices X with X·A_i^M = A_i^N·X.
pub fn hom_space(m: &HeckeModule, n: &HeckeModule) -> Result<Vec<Mat>> {
    if m.n() != n.n() {
        return Err(Error::invalid("Hom between modules over different H_n(0)"));
    }
    check_dim(m.dim().max(n.dim()))?;
    let (dm, dn) = (m.dim(), n.dim());
    let var = |r: usize, c: usize| r * dm + c;
    let mut rows = Vec::new();
    for (am, an) in m.matrices().iter().zip(n.matrices()) {
        let an_rows = an.transpose();
        for r in 0..dn {
            for c in 0..dm {
                let mut eq: Vec<(usize, Rat)> = am.column(c).iter().map(|(k, a)| (var(r, *k), a.clone())).collect();
                eq.extend(an_rows.column(r).iter().map(|(k, b)| (var(*k, c), -b)));
                if !eq.is_empty() {
                    rows.push(eq);
                }
            }
        }
    }
    Ok(sparse_kernel(rows, dm * dn)
        .into_iter()
        .map(|v| Mat::from_fn(dn, dm, |r, c| v[var(r, c)].clone()))
        .collect())
}

fn combine(basis: &[Mat], coeffs: &[i64]) -> Mat {
    let mut acc = Mat::zeros(basis[0].rows(), basis[0].cols());
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            acc = acc.add(&b.scale(&Rat::int(c)));
        }
    }
    acc
}

#[derive(Clone, Debug)]
pub enum IsoOutcome {
    Isomorphic { witness: Mat, method: String },
    NotIsomorphic { reason: String },
    Inconclusive { reason: String },
}

impl IsoOutcome {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic { .. })
    }

    pub fn is_not_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::NotIsomorphic { .. })
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            IsoOutcome::Isomorphic { witness, method } => serde_json::json!({
                "result": "isomorphic",
                "method": method,
                "witness": witness.to_rows().iter().map(|r| r.iter().map(Rat::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
            }),
            IsoOutcome::NotIsomorphic { reason } => serde_json::json!({"result": "not_isomorphic", "reason": reason}),
            IsoOutcome::Inconclusive { reason } => serde_json::json!({"result": "inconclusive", "reason": reason}),
        }
    }
}

/// γ ↦ γσ^{-1}σ′ between permutation-labeled modules, if it is a module map.
pub fn translation_witness(m: &HeckeModule, n: &HeckeModule) -> Option<Mat> {
    let (pm, pn) = (m.labels().perms()?, n.labels().perms()?);
    if pm.len() != pn.len() || pm.is_empty() {
        return None;
    }
    let index: HashMap<&Permutation, usize> = pn.iter().enumerate().map(|(k, g)| (g, k)).collect();
    let s1 = &pm[0];
    let min_len = pn[0].length();
    for s2 in pn.iter().take_while(|g| g.length() == min_len) {
        let shift = s1.inverse().compose(s2);
        let mut x = Mat::zeros(pn.len(), pm.len());
        let mut ok = true;
        for (c, g) in pm.iter().enumerate() {
            match index.get(&g.compose(&shift)) {
                Some(&r) => x.set(r, c, Rat::ONE),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && intertwines(m, n, &x) {
            return Some(x);
        }
    }
    None
}

/// Invariants first, then a translation witness, then a seeded search for an
/// invertible element of Hom(M, N).
pub fn is_isomorphic(m: &HeckeModule, n: &HeckeModule, seed: u64) -> Result<IsoOutcome> {
    let not = |r: &str| Ok(IsoOutcome::NotIsomorphic { reason: r.to_string() });
    if m.n() != n.n() {
        return Err(Error::invalid("modules over different H_n(0)"));
    }
    if m.dim() != n.dim() {
        return not("dimensions differ");
    }
    if composition_character(m)? != composition_character(n)? {
        return not("characteristics differ");
    }
    if top(m)? != top(n)? {
        return not("tops differ");
    }
    if socle(m)?.0 != socle(n)?.0 {
        return not("socles differ");
    }
    if radical_layers(m)? != radical_layers(n)? {
        return not("radical layers differ");
    }
    if radical_layers(&twist(m, Twist::ChiDual))? != radical_layers(&twist(n, Twist::ChiDual))? {
        return not("socle layers differ");
    }
    if let Some(x) = translation_witness(m, n) {
        return Ok(IsoOutcome::Isomorphic { witness: x, method: "translation".into() });
    }
    let hom = hom_space(m, n)?;
    let (end_m, end_n, hom_nm) = (hom_space(m, m)?.len(), hom_space(n, n)?.len(), hom_space(n, m)?.len());
    if hom.len() != end_m || hom_nm != end_n || end_m != end_n {
        return not("Hom dimensions differ");
    }
    let d = m.dim();
    if hom.is_empty() {
        return if d == 0 {
            Ok(IsoOutcome::Isomorphic { witness: Mat::zeros(0, 0), method: "trivial".into() })
        } else {
            not("Hom(M, N) = 0")
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..12 {
        let coeffs: Vec<i64> = (0..hom.len()).map(|_| rng.gen_range(-50..=50)).collect();
        let x = combine(&hom, &coeffs);
        if x.rank() == d {
            return Ok(IsoOutcome::Isomorphic { witness: x, method: "random".into() });
        }
    }
    if hom.len() <= 6 {
        let k = hom.len();
        let mut coeffs = vec![-2i64; k];
        loop {
            if coeffs.iter().any(|&c| c != 0) {
                let x = combine(&hom, &coeffs);
                if x.rank() == d {
                    return Ok(IsoOutcome::Isomorphic { witness: x, method: "exhaustive".into() });
                }
            }
            let mut j = 0;
            while j < k && coeffs[j] == 2 {
                coeffs[j] = -2;
                j += 1;
            }
            if j == k {
                break;
            }
            coeffs[j] += 1;
        }
        return Ok(IsoOutcome::Inconclusive {
            reason: format!("no invertible element among {} random and all {{-2..2}}^{k} combinations", 12),
        });
    }
    Ok(IsoOutcome::Inconclusive { reason: format!("no invertible element among 12 random combinations (dim Hom = {})", hom.len()) })
}

/// dim End(M)/rad End(M), where the radical is the kernel of the trace form.
pub fn end_semisimple_dim(m: &HeckeModule) -> Result<usize> {
    let end = hom_space(m, m)?;
    let d = m.dim();
    let k = end.len();
    let gram = Mat::from_fn(k, k, |a, b| {
        let (x, y) = (&end[a], &end[b]);
        let mut t = Rat::ZERO;
        for i in 0..d {
            for j in 0..d {
                let (p, q) = (x.get(i, j), y.get(j, i));
                if !p.is_zero() && !q.is_zero() {
                    t += &(p * q);
                }
            }
        }
        t
    });
    Ok(gram.rank())
}

/// End(M)/rad End(M) is one-dimensional.
pub fn is_indecomposable(m: &HeckeModule) -> Result<bool> {
    Ok(m.dim() > 0 && end_semisimple_dim(m)? == 1)
}
