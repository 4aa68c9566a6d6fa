use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::fixtures::{basis_vector, six_dim_module, submodule_table, DECOMP_TAUS, COVER_PAIRS};
use crate::error::{Error, Result};
use crate::hecke::{
    composition_character, inj_hull, is_indecomposable, is_isomorphic, proj_cover, socle, top, twist, verify_submodule,
    HeckeModule, IsoOutcome, Twist,
};
use crate::linalg::Echelon;
use crate::poset::{all_posets, as_left_interval, kp_fundamental, kp_monomial, schur_index, to_monomials, LabeledPoset};
use crate::qsym::{schur_straight, QSym};
use crate::shape::{basic_shapes, Composition, GeneralizedComposition, Partition, SkewPartition};
use crate::structure::{
    descent_preserving_map, distinguished_filtration, dual_knuth_closure_test, equivalence_class, filtration_nonexistence_probe,
    is_rsp, is_single_schur, translation_preserves_colors, FiltrationOrder,
};
use crate::symgrp::{weak_interval, weak_leq, Permutation, Side};
use crate::tabx::{canonical, enumerate_syt, rectify, rectify_via_rsk, reading, rsk, schur_labelings, BijectiveTableau, Canonical, LabelingFilter};

use super::Params;

pub(super) type Outcome = Result<Option<String>>;

fn pass() -> Outcome {
    Ok(None)
}

fn fail(reason: impl Into<String>) -> Outcome {
    Ok(Some(reason.into()))
}

fn field<'a>(inst: &'a Value, key: &str) -> Result<&'a Value> {
    inst.get(key).ok_or_else(|| Error::invalid(format!("instance lacks \"{key}\"")))
}

fn str_field<'a>(inst: &'a Value, key: &str) -> Result<&'a str> {
    field(inst, key)?.as_str().ok_or_else(|| Error::invalid(format!("\"{key}\" is not a string")))
}

fn usize_field(inst: &Value, key: &str) -> Result<usize> {
    field(inst, key)?.as_u64().map(|v| v as usize).ok_or_else(|| Error::invalid(format!("\"{key}\" is not an integer")))
}

fn parse<T: std::str::FromStr<Err = Error>>(inst: &Value, key: &str) -> Result<T> {
    str_field(inst, key)?.parse()
}

fn poset_field(inst: &Value) -> Result<LabeledPoset> {
    LabeledPoset::from_json(field(inst, "poset")?)
}

fn left_intervals(n: usize) -> Result<Vec<(Permutation, Permutation)>> {
    let all = Permutation::all(n);
    let mut out = Vec::new();
    for s in &all {
        for r in &all {
            if weak_leq(s, r, Side::Left)? {
                out.push((s.clone(), r.clone()));
            }
        }
    }
    Ok(out)
}

fn shapes_of(n: usize) -> Result<BTreeMap<String, Vec<LabeledPoset>>> {
    let mut groups: BTreeMap<String, Vec<LabeledPoset>> = BTreeMap::new();
    for (p, tau) in schur_index(n)?.regular_entries() {
        groups.entry(tau.shape().to_string()).or_default().push(p);
    }
    Ok(groups)
}

fn shape_module(s: &SkewPartition) -> Result<HeckeModule> {
    HeckeModule::poset(&LabeledPoset::from_tableau(&canonical(s, Canonical::Tau0)))
}

pub(super) fn instances(id: &str, params: &Params) -> Result<Vec<Value>> {
    let n = params.n.unwrap_or(0);
    let seed = params.seed;
    let posets = |kind: &str| -> Result<Vec<Value>> {
        Ok(all_posets(n)?.iter().map(|p| json!({"kind": kind, "poset": p.to_json()})).collect())
    };
    let per_shape = |kinds: &[&str]| -> Vec<Value> {
        basic_shapes(n)
            .iter()
            .flat_map(|s| kinds.iter().map(move |k| json!({"kind": k, "shape": s.to_string()})))
            .collect()
    };
    Ok(match id {
        "bw" => {
            let mut v = vec![json!({"kind": "count", "n": n})];
            v.extend(posets("poset")?);
            v
        }
        "interval" => per_shape(&["sigma", "reading"]),
        "example_4_3" => vec![json!({
            "kind": "class",
            "bottom": "2134",
            "top": "2143",
            "expect": {"size": 3, "min": ["2134", "2341"], "max": ["2143", "2431"]},
        })],
        "classes" => {
            let mut ivs = left_intervals(n)?;
            if let Some(k) = params.sample {
                ivs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
                ivs.truncate(k);
            }
            let mut v: Vec<Value> = ivs
                .iter()
                .map(|(b, t)| json!({"kind": "class", "bottom": b.to_string(), "top": t.to_string()}))
                .collect();
            if params.sample.is_none() {
                v.push(json!({"kind": "partition", "n": n}));
            }
            v.extend(shapes_of(n)?.keys().map(|s| json!({"kind": "shape", "n": n, "shape": s})));
            v
        }
        "classification" => {
            let keys: Vec<String> = shapes_of(n)?.into_keys().collect();
            let mut v: Vec<Value> =
                keys.iter().map(|s| json!({"kind": "group", "n": n, "shape": s, "seed": seed})).collect();
            v.extend(keys.iter().map(|s| json!({"kind": "distinct", "n": n, "shape": s, "seed": seed})));
            v
        }
        "dpc" => posets("poset")?,
        "filtration" => {
            let mut v: Vec<Value> =
                schur_index(n)?.regular_entries().iter().map(|(p, _)| json!({"kind": "poset", "poset": p.to_json()})).collect();
            if n == 4 {
                v.push(json!({"kind": "example"}));
            }
            v
        }
        "example_6_2_table" => {
            let mut v = vec![json!({"kind": "module"}), json!({"kind": "probe"})];
            v.extend((0..9).map(|k| json!({"kind": "row", "row": k})));
            v
        }
        "sec7_decomps" => ["tau1", "tau2_character", "tau2_stated", "tau3", "pairwise", "indecomposable_331", "decomposable_2_2"]
            .iter()
            .map(|c| json!({"claim": c, "seed": seed}))
            .collect(),
        "kp" => schur_index(n)?.entries().iter().map(|(p, _)| json!({"poset": p.to_json()})).collect(),
        "properties" => {
            let mut v = vec![json!({"kind": "rsk", "n": n}), json!({"kind": "involutions", "n": n}), json!({"kind": "projectives", "n": n})];
            v.extend(per_shape(&["tableau_module"]));
            v
        }
        "table2" => (0..COVER_PAIRS.len()).map(|k| json!({"pair": k, "seed": seed})).collect(),
        other => return Err(Error::invalid(format!("unknown check \"{other}\""))),
    })
}

pub(super) fn check(id: &str, inst: &Value) -> Outcome {
    match id {
        "bw" => check_bw(inst),
        "interval" => check_interval(inst),
        "example_4_3" | "classes" => check_classes(inst),
        "classification" => check_classification(inst),
        "dpc" => check_dpc(inst),
        "filtration" => check_filtration(inst),
        "example_6_2_table" => check_submodule_table(inst),
        "sec7_decomps" => check_decomps(inst),
        "kp" => check_kp(inst),
        "properties" => check_properties(inst),
        "table2" => check_cover_pairs(inst),
        other => Err(Error::invalid(format!("unknown check \"{other}\""))),
    }
}

fn check_bw(inst: &Value) -> Outcome {
    if str_field(inst, "kind")? == "count" {
        // all_posets validates the count against the known sequence.
        let n = usize_field(inst, "n")?;
        return match all_posets(n) {
            Ok(_) => pass(),
            Err(e) => fail(e.to_string()),
        };
    }
    let p = poset_field(inst)?;
    let lin = p.linear_extensions(Side::Left)?;
    let interval = as_left_interval(&lin).is_some();
    if interval != p.is_regular() {
        return fail(format!("interval = {interval}, regular = {}", p.is_regular()));
    }
    pass()
}

fn check_interval(inst: &Value) -> Outcome {
    let s: SkewPartition = parse(inst, "shape")?;
    let taus = schur_labelings(&s, LabelingFilter::Distinguished);
    if taus.is_empty() {
        return fail("no distinguished Schur labeling");
    }
    match str_field(inst, "kind")? {
        "sigma" => {
            let (t_row, t_col) = (canonical(&s, Canonical::TRow), canonical(&s, Canonical::TCol));
            for tau in &taus {
                let lin = LabeledPoset::from_tableau(tau).linear_extensions(Side::Left)?;
                let want = (reading(tau, &t_row)?, reading(tau, &t_col)?);
                if as_left_interval(&lin) != Some(want.clone()) {
                    return fail(format!("Σ_L(poset({tau})) ≠ [{}, {}]_L", want.0, want.1));
                }
            }
            pass()
        }
        _ => {
            let (tau0, tau1) = (canonical(&s, Canonical::Tau0), canonical(&s, Canonical::Tau1));
            for t in enumerate_syt(&s) {
                let got: BTreeSet<Permutation> = taus.iter().map(|tau| reading(tau, &t)).collect::<Result<_>>()?;
                let iv = weak_interval(&reading(&tau0, &t)?, &reading(&tau1, &t)?, Side::Right)?;
                if iv.element_set() != got {
                    return fail(format!("readings of {t} are not the right interval"));
                }
            }
            pass()
        }
    }
}

fn check_classes(inst: &Value) -> Outcome {
    match str_field(inst, "kind")? {
        "class" => {
            let (b, t): (Permutation, Permutation) = (parse(inst, "bottom")?, parse(inst, "top")?);
            let iv = weak_interval(&b, &t, Side::Left)?;
            let d = match equivalence_class(&iv) {
                Ok(d) => d,
                Err(e) => return fail(e.to_string()),
            };
            if !d.members().contains(&(b.clone(), t.clone())) {
                return fail("interval missing from its own class");
            }
            for (mb, mt) in d.members() {
                let other = weak_interval(&mb, &mt, Side::Left)?;
                match descent_preserving_map(&iv, &other)? {
                    Some(shift) if translation_preserves_colors(&iv, &other, &shift) => {}
                    Some(_) => return fail(format!("translation to [{mb}, {mt}]_L changes colours")),
                    None => return fail(format!("[{mb}, {mt}]_L is not ≃_D to the input")),
                }
            }
            if let Some(e) = inst.get("expect") {
                let got = json!({
                    "size": d.class_size(),
                    "min": [d.min_interval.bottom().to_string(), d.min_interval.top().to_string()],
                    "max": [d.max_interval.bottom().to_string(), d.max_interval.top().to_string()],
                });
                if got != *e {
                    return fail(format!("class {got}"));
                }
            }
            pass()
        }
        "partition" => {
            let n = usize_field(inst, "n")?;
            let total = left_intervals(n)?.len();
            let mut seen = BTreeSet::new();
            for d in crate::structure::all_equivalence_classes(n)? {
                for m in d.members() {
                    if !seen.insert(m) {
                        return fail("classes overlap");
                    }
                }
            }
            if seen.len() != total {
                return fail(format!("classes cover {} of {total} intervals", seen.len()));
            }
            pass()
        }
        _ => {
            let n = usize_field(inst, "n")?;
            let s: SkewPartition = parse(inst, "shape")?;
            let want: BTreeSet<(Permutation, Permutation)> = shapes_of(n)?
                .remove(&s.to_string())
                .unwrap_or_default()
                .iter()
                .map(|q| as_left_interval(&q.linear_extensions(Side::Left)?).ok_or_else(|| Error::check("Σ_L(Q) is not an interval")))
                .collect::<Result<_>>()?;
            let lin = LabeledPoset::from_tableau(&canonical(&s, Canonical::Tau0)).linear_extensions(Side::Left)?;
            let (b, t) = as_left_interval(&lin).ok_or_else(|| Error::check("Σ_L(poset(τ_0)) is not an interval"))?;
            let got: BTreeSet<_> = equivalence_class(&weak_interval(&b, &t, Side::Left)?)?.members().into_iter().collect();
            if got != want {
                return fail(format!("class has {} members, shape {s} has {} posets", got.len(), want.len()));
            }
            pass()
        }
    }
}

fn check_classification(inst: &Value) -> Outcome {
    let n = usize_field(inst, "n")?;
    let seed = field(inst, "seed")?.as_u64().unwrap_or(0);
    let s: SkewPartition = parse(inst, "shape")?;
    let rep = shape_module(&s)?;
    let groups = shapes_of(n)?;
    match str_field(inst, "kind")? {
        "group" => {
            for p in groups.get(&s.to_string()).map(Vec::as_slice).unwrap_or(&[]) {
                let m = HeckeModule::poset(p)?;
                match is_isomorphic(&m, &rep, seed)? {
                    IsoOutcome::Isomorphic { .. } => {}
                    other => return fail(format!("M_{p} vs shape representative: {}", other.to_json())),
                }
                let pc = proj_cover(p)?;
                if pc.gen != s.bal_proj() {
                    return fail(format!("cover of {p} is P_{}", pc.gen));
                }
                let ih = inj_hull(p, seed)?;
                if ih.gen != s.bal_inj() {
                    return fail(format!("hull of {p} is P_{}", ih.gen));
                }
            }
            pass()
        }
        _ => {
            let ch = rep.characteristic()?;
            for other in groups.keys().filter(|k| k.as_str() > s.to_string().as_str()) {
                let t: SkewPartition = other.parse()?;
                let m = shape_module(&t)?;
                if m.characteristic()? != ch {
                    continue;
                }
                match is_isomorphic(&rep, &m, seed)? {
                    IsoOutcome::NotIsomorphic { .. } => {}
                    o => return fail(format!("{s} vs {t}: {}", o.to_json())),
                }
            }
            pass()
        }
    }
}

fn check_dpc(inst: &Value) -> Outcome {
    let p = poset_field(inst)?;
    let rsp = is_rsp(&p)?;
    let closed = dual_knuth_closure_test(&p.linear_extensions(Side::Left)?)?.closed;
    if rsp != closed {
        return fail(format!("RSP = {rsp}, dual-plactic closed = {closed}"));
    }
    pass()
}

fn rectification_shapes(shape: &SkewPartition) -> Result<BTreeMap<Partition, usize>> {
    let mut counts: BTreeMap<Partition, usize> = BTreeMap::new();
    for t in enumerate_syt(shape) {
        *counts.entry(rectify(&t)?.shape().lambda().to_vec()).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(nu, c)| {
            let f = enumerate_syt(&SkewPartition::straight(nu.clone())?).len();
            Ok((nu, c / f))
        })
        .collect()
}

fn check_filtration(inst: &Value) -> Outcome {
    if str_field(inst, "kind")? == "example" {
        let s: SkewPartition = "(4,2,1)/(2,1)".parse()?;
        let p = LabeledPoset::from_tableau(&canonical(&s, Canonical::Tau0));
        let qs: Vec<BijectiveTableau> = ["[[1],[2],[3],[4]]", "[[1,3],[2],[4]]", "[[1,4],[2],[3]]", "[[1,3],[2,4]]", "[[1,3,4],[2]]"]
            .iter()
            .map(|t| t.parse())
            .collect::<Result<_>>()?;
        let mut swapped = qs.clone();
        swapped.swap(1, 2);
        let f1 = distinguished_filtration(&p, &FiltrationOrder::Explicit(qs))?;
        let f2 = distinguished_filtration(&p, &FiltrationOrder::Explicit(swapped))?;
        let want: Vec<Partition> = vec![vec![4], vec![3, 1], vec![3, 1], vec![2, 2], vec![2, 1, 1]];
        if f1.quotient_shapes != want || f2.quotient_shapes != want {
            return fail(format!("quotients {:?} / {:?}", f1.quotient_shapes, f2.quotient_shapes));
        }
        if f1.layers == f2.layers {
            return fail("the two orders give the same filtration");
        }
        return pass();
    }
    let p = poset_field(inst)?;
    let tau = crate::poset::schur_recognize(&p)?.ok_or_else(|| Error::invalid("poset is not Schur labeled"))?;
    let f = match distinguished_filtration(&p, &FiltrationOrder::Default) {
        Ok(f) => f,
        Err(e) => return fail(e.to_string()),
    };
    let mut got: BTreeMap<Partition, usize> = BTreeMap::new();
    for s in &f.quotient_shapes {
        *got.entry(s.clone()).or_default() += 1;
    }
    let want = rectification_shapes(tau.shape())?;
    if got != want {
        return fail(format!("quotient shapes {got:?}, rectification shapes {want:?}"));
    }
    pass()
}

fn sum_f(parts: &[Composition]) -> QSym {
    let n = parts.first().map_or(0, Composition::size);
    parts.iter().fold(QSym::zero(n), |a, c| a.add(&QSym::f(c.clone())))
}

fn check_submodule_table(inst: &Value) -> Outcome {
    let m = six_dim_module();
    let vec_of = |terms: &[(i64, Permutation)]| basis_vector(&m, terms).ok_or_else(|| Error::invalid("label outside the module"));
    match str_field(inst, "kind")? {
        "module" => {
            let want = schur_straight(&[3, 1]).add(&schur_straight(&[2, 1, 1]));
            if m.characteristic()? != want {
                return fail(format!("ch = {}", m.characteristic()?));
            }
            let soc = socle(&m)?.1;
            let labels: Vec<Permutation> = ["3412", "3214", "1432"].iter().map(|s| s.parse()).collect::<Result<_>>()?;
            let span = Echelon::from_vectors(m.dim(), labels.iter().map(|g| vec_of(&[(1, g.clone())])).collect::<Result<Vec<_>>>()?);
            if soc.basis() != span.basis() {
                return fail("socle differs from span{3412, 3214, 1432}");
            }
            pass()
        }
        "probe" => {
            let candidates: Vec<Vec<_>> = submodule_table()
                .iter()
                .map(|r| r.span.iter().map(|t| vec_of(t)).collect::<Result<Vec<_>>>())
                .collect::<Result<_>>()?;
            let targets = [schur_straight(&[3, 1]), schur_straight(&[2, 1, 1])];
            let r = filtration_nonexistence_probe(&m, 3, &candidates, &targets)?;
            if r.achieved_any || r.rows.iter().any(|row| row.is_schur) {
                return fail("a candidate has Schur characteristic");
            }
            pass()
        }
        _ => {
            let k = usize_field(inst, "row")?;
            let row = submodule_table().into_iter().nth(k).ok_or_else(|| Error::invalid(format!("no row {k}")))?;
            let vs: Vec<_> = row.span.iter().map(|t| vec_of(t)).collect::<Result<_>>()?;
            let r = verify_submodule(&m, &vs)?;
            let ch = sum_f(&row.character);
            if !r.closed || r.dim != 3 || r.socle_dim != Some(row.socle_dim) || r.character.as_ref() != Some(&ch) {
                return fail(format!("row {}: {}", k + 1, r.to_json()));
            }
            if is_single_schur(&ch) {
                return fail(format!("row {} is Schur", k + 1));
            }
            pass()
        }
    }
}

fn decomp_module(k: usize) -> Result<HeckeModule> {
    HeckeModule::poset(&LabeledPoset::from_tableau(&DECOMP_TAUS[k].parse()?))
}

fn direct_sum(parts: &[HeckeModule]) -> Result<HeckeModule> {
    HeckeModule::direct_sum(&parts.iter().collect::<Vec<_>>())
}

fn simple(a: &str) -> Result<HeckeModule> {
    Ok(HeckeModule::simple(&a.parse()?))
}

fn projective(g: &str) -> Result<HeckeModule> {
    HeckeModule::projective(&g.parse::<GeneralizedComposition>()?)
}

fn interval_module(a: &str, b: &str) -> Result<HeckeModule> {
    HeckeModule::interval(&a.parse()?, &b.parse()?)
}

fn tau2_stated() -> Result<HeckeModule> {
    direct_sum(&[simple("(1,2,1)")?, interval_module("4213", "4312")?, simple("(3,1)")?, simple("(2,2)")?, simple("(4)")?])
}

fn expect_iso(a: &HeckeModule, b: &HeckeModule, seed: u64) -> Outcome {
    match is_isomorphic(a, b, seed)? {
        IsoOutcome::Isomorphic { .. } => pass(),
        o => fail(o.to_json().to_string()),
    }
}

fn check_decomps(inst: &Value) -> Outcome {
    let seed = field(inst, "seed")?.as_u64().unwrap_or(0);
    match str_field(inst, "claim")? {
        "tau1" => expect_iso(&decomp_module(0)?, &direct_sum(&[projective("(4)")?, projective("(2,2)")?])?, seed),
        "tau2_character" => {
            let (m, s) = (decomp_module(1)?, tau2_stated()?);
            if composition_character(&m)? != composition_character(&s)? {
                return fail("characteristics differ");
            }
            pass()
        }
        "tau2_stated" => {
            let (m, s) = (decomp_module(1)?, tau2_stated()?);
            match is_isomorphic(&m, &s, seed)? {
                IsoOutcome::Isomorphic { .. } => pass(),
                o => {
                    let tops: Vec<String> = top(&m)?.iter().map(|c| c.to_string()).collect();
                    fail(format!("{}; top(M) = {}", o.to_json(), tops.join(" + ")))
                }
            }
        }
        "tau3" => {
            let s = direct_sum(&[
                simple("(1,2,1)")?,
                interval_module("4213", "4312")?,
                interval_module("2431", "3421")?,
                simple("(4)")?,
            ])?;
            expect_iso(&decomp_module(2)?, &s, seed)
        }
        "pairwise" => {
            let ms = [decomp_module(0)?, decomp_module(1)?, decomp_module(2)?];
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                if !is_isomorphic(&ms[i], &ms[j], seed)?.is_not_isomorphic() {
                    return fail(format!("τ_{} and τ_{} not separated", i + 1, j + 1));
                }
            }
            pass()
        }
        "indecomposable_331" => {
            if !is_indecomposable(&HeckeModule::tableau(&"(3,3,1)/(1,1)".parse()?))? {
                return fail("X_(3,3,1)/(1,1) decomposes");
            }
            pass()
        }
        "decomposable_2_2" => {
            if is_indecomposable(&projective("(2)*(2)")?)? {
                return fail("P_(2)*(2) is indecomposable");
            }
            pass()
        }
        other => Err(Error::invalid(format!("unknown claim {other}"))),
    }
}

fn check_kp(inst: &Value) -> Outcome {
    let p = poset_field(inst)?;
    let n = p.n();
    let k = kp_fundamental(&p)?;
    if to_monomials(&k, n) != kp_monomial(&p, n)? {
        return fail("fundamental and P-partition forms differ");
    }
    if HeckeModule::poset(&p)?.characteristic()? != k.psi() {
        return fail("ch(M_P) ≠ ψ(K_P)");
    }
    pass()
}

fn check_properties(inst: &Value) -> Outcome {
    match str_field(inst, "kind")? {
        "rsk" => {
            let n = usize_field(inst, "n")?;
            let mut seen = BTreeSet::new();
            for g in Permutation::all(n) {
                let (p, q) = rsk(&g);
                if p.shape() != q.shape() || !p.is_standard() || !q.is_standard() {
                    return fail(format!("RSK({g}) is not a pair of same-shape SYT"));
                }
                seen.insert((p, q));
            }
            let pairs: usize = crate::shape::partitions(n)
                .into_iter()
                .map(|l| enumerate_syt(&SkewPartition::straight(l).expect("partition")).len().pow(2))
                .sum();
            if seen.len() != pairs {
                return fail(format!("{} distinct pairs, expected {pairs}", seen.len()));
            }
            pass()
        }
        "involutions" => {
            let n = usize_field(inst, "n")?;
            for a in Composition::all(n) {
                let f = QSym::f(a.clone());
                if f.psi().psi() != f || f.rho().rho() != f || f.psi().rho() != f.rho().psi() {
                    return fail(format!("involutions on F_{a}"));
                }
            }
            pass()
        }
        "projectives" => {
            let n = usize_field(inst, "n")?;
            for a in Composition::all(n) {
                let m = HeckeModule::projective(&GeneralizedComposition::single(a.clone()))?;
                if top(&m)? != vec![a.clone()] {
                    return fail(format!("top(P_{a}) is not F_{a}"));
                }
            }
            pass()
        }
        _ => {
            let s: SkewPartition = parse(inst, "shape")?;
            let x = HeckeModule::tableau(&s);
            if let Err(e) = x.check_relations() {
                return fail(e.to_string());
            }
            let ch = x.characteristic()?;
            let phi = twist(&x, Twist::Phi);
            phi.check_relations()?;
            if phi.characteristic()? != ch.rho() {
                return fail("ch of the φ-twist is not ρ(ch)");
            }
            if x.dim() <= crate::config::caps().max_dim {
                let th = twist(&x, Twist::ThetaHatDual);
                th.check_relations()?;
                if composition_character(&th)? != ch.psi() {
                    return fail("ch of the θ̂-twist is not ψ(ch)");
                }
            }
            for t in enumerate_syt(&s) {
                if rectify(&t)? != rectify_via_rsk(&t) {
                    return fail(format!("rectification of {t} disagrees with RSK"));
                }
            }
            pass()
        }
    }
}

fn check_cover_pairs(inst: &Value) -> Outcome {
    let k = usize_field(inst, "pair")?;
    let seed = field(inst, "seed")?.as_u64().unwrap_or(0);
    let (a, b) = *COVER_PAIRS.get(k).ok_or_else(|| Error::invalid(format!("no pair {k}")))?;
    let (ma, mb) = (interval_module("123456", a)?, interval_module("123456", b)?);
    let (ta, tb): (Permutation, Permutation) = (a.parse()?, b.parse()?);
    if ma.characteristic()? != mb.characteristic()? || ta.descents(Side::Left) != tb.descents(Side::Left) {
        return fail("pair does not meet the necessary conditions");
    }
    let (ia, ib) = (weak_interval(&"123456".parse()?, &ta, Side::Left)?, weak_interval(&"123456".parse()?, &tb, Side::Left)?);
    if crate::structure::descent_preserving_equiv(&ia, &ib)? {
        return fail("pair is ≃_D-equivalent");
    }
    match is_isomorphic(&ma, &mb, seed)? {
        IsoOutcome::NotIsomorphic { .. } => pass(),
        o => fail(o.to_json().to_string()),
    }
}
