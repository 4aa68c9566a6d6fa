use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{hom_space, radical, socle, HeckeModule, ModuleMap};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Mat, Rat};
use crate::poset::{schur_recognize, LabeledPoset};
use crate::shape::GeneralizedComposition;
use crate::symgrp::Permutation;
use crate::tabx::{canonical, enumerate_syt, reading, BijectiveTableau, Canonical};

#[derive(Clone, Debug)]
pub struct CoverWitness {
    pub gen: GeneralizedComposition,
    pub module: HeckeModule,
    pub map: ModuleMap,
}

fn regular_tau(p: &LabeledPoset) -> Result<BijectiveTableau> {
    let tau = schur_recognize(p)?.ok_or_else(|| Error::invalid("poset is not Schur labeled"))?;
    if !p.is_regular() {
        return Err(Error::invalid("poset is not regular"));
    }
    Ok(tau)
}

fn index_of(m: &HeckeModule) -> HashMap<Permutation, usize> {
    m.labels().perms().expect("permutation basis").iter().cloned().enumerate().map(|(k, g)| (g, k)).collect()
}

/// Projective cover P_𝛂 → M_P, 𝛂 = balproj(sh(τ_P)): γ ↦ f_P(γ) on
/// Σ_L(poset(τ_0)) and γ ↦ 0 elsewhere. Checked surjective with kernel in rad.
pub fn proj_cover(p: &LabeledPoset) -> Result<CoverWitness> {
    let tau = regular_tau(p)?;
    let shape = tau.shape().clone();
    let gen = shape.bal_proj();
    let cover = HeckeModule::projective(&gen)?;
    let target = HeckeModule::poset(p)?;
    let tau0 = canonical(&shape, Canonical::Tau0);
    let f: HashMap<Permutation, Permutation> = enumerate_syt(&shape)
        .iter()
        .map(|t| Ok((reading(&tau0, t)?, reading(&tau, t)?)))
        .collect::<Result<_>>()?;
    let tgt = index_of(&target);
    let mut x = Mat::zeros(target.dim(), cover.dim());
    for (c, g) in cover.labels().perms().expect("permutation basis").iter().enumerate() {
        if let Some(img) = f.get(g) {
            x.set(tgt[img], c, Rat::ONE);
        }
    }
    let map = ModuleMap::new(cover.clone(), target, x)?;
    if !map.is_surjective() {
        return Err(Error::check("projective cover map is not surjective"));
    }
    let rad = radical(&cover);
    if !map.kernel().iter().all(|v| rad.contains(v)) {
        return Err(Error::check("kernel of the cover map is not inside the radical"));
    }
    Ok(CoverWitness { gen, module: cover, map })
}

/// Injective hull M_P → P_𝛂, 𝛂 = balinj(sh(τ_P)), found as an injective
/// element of Hom(M_P, P_𝛂) whose image contains the socle.
pub fn inj_hull(p: &LabeledPoset, seed: u64) -> Result<CoverWitness> {
    let tau = regular_tau(p)?;
    let gen = tau.shape().bal_inj();
    let hull = HeckeModule::projective(&gen)?;
    let source = HeckeModule::poset(p)?;
    let hom = hom_space(&source, &hull)?;
    if hom.is_empty() {
        return Err(Error::check("Hom(M_P, hull) = 0"));
    }
    let soc = socle(&hull)?.1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..16 {
        let mut x = Mat::zeros(hull.dim(), source.dim());
        for b in &hom {
            let c = if attempt == 0 { 1 } else { rng.gen_range(-50i64..=50) };
            x = x.add(&b.scale(&Rat::int(c)));
        }
        if x.rank() != source.dim() {
            continue;
        }
        let image = Echelon::from_vectors(hull.dim(), (0..x.cols()).map(|c| x.col(c)));
        if soc.basis().iter().all(|v| image.contains(v)) {
            let map = ModuleMap::new(source, hull.clone(), x)?;
            return Ok(CoverWitness { gen, module: hull, map });
        }
    }
    Err(Error::check("no essential embedding into the injective hull found"))
}
