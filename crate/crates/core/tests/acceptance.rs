//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Library sweeps are paired with brute-force oracles written here from the
//! definitions (weak order by inversion sets, linear extensions by filtering
//! S_n, regularity, elementary dual Knuth moves).

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use skewposet::hecke::socle;
use skewposet::poset::{all_posets, schur_recognize, LabeledPoset};
use skewposet::qsym::{schur_straight, QSym};
use skewposet::shape::{basic_shapes, Composition, SkewPartition};
use skewposet::structure::{distinguished_filtration, equivalence_class, FiltrationOrder};
use skewposet::symgrp::{weak_interval, Permutation, Side};
use skewposet::tabx::{canonical, enumerate_syt, reading, schur_labelings, Canonical, LabelingFilter};
use skewposet::verify::fixtures::{basis_vector, six_dim_module};
use skewposet::verify::{run_check, CheckReport, Params};

/// Criteria expected to fail: the stated five-summand decomposition for τ₂
/// is not isomorphic to M_poset(τ₂).
const KNOWN_FAILURES: [usize; 1] = [9];

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sweep(id: &str, params: Params) -> Outcome {
    let r: CheckReport = run_check(id, &params).map_err(|e| format!("{id}: {e}"))?;
    ensure(r.passed(), || {
        let f = &r.failures[0];
        format!("{id} {}: {} failures, first {} ({})", serde_json::to_string(&params).unwrap(), r.failures.len(), f.instance, f.reason)
    })
}

fn sweeps(id: &str, ns: impl IntoIterator<Item = usize>) -> Outcome {
    ns.into_iter().try_for_each(|n| sweep(id, Params::n(n)))
}

// ---- oracles ----

fn perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut w: Vec<usize> = (1..=n).collect();
    loop {
        out.push(w.clone());
        let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else { break };
        let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).unwrap();
        w.swap(i - 1, j);
        w[i..].reverse();
    }
    out
}

/// Value pairs (a, b), a < b, with b written before a: right weak order is inclusion.
fn value_inv(w: &[usize]) -> BTreeSet<(usize, usize)> {
    let mut pos = vec![0; w.len() + 1];
    for (p, &v) in w.iter().enumerate() {
        pos[v] = p;
    }
    let n = w.len();
    (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).filter(|&(a, b)| pos[b] < pos[a]).collect()
}

/// Position pairs (i, j), i < j, with w(i) > w(j): left weak order is inclusion.
fn position_inv(w: &[usize]) -> BTreeSet<(usize, usize)> {
    let n = w.len();
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).collect()
}

fn oracle_interval(n: usize, lo: &[usize], hi: &[usize], left: bool) -> BTreeSet<Vec<usize>> {
    let inv = |w: &[usize]| if left { position_inv(w) } else { value_inv(w) };
    let (a, b) = (inv(lo), inv(hi));
    perms(n)
        .into_iter()
        .filter(|g| {
            let x = inv(g);
            a.is_subset(&x) && x.is_subset(&b)
        })
        .collect()
}

fn oracle_is_left_interval(n: usize, set: &BTreeSet<Vec<usize>>) -> bool {
    let len = |w: &Vec<usize>| value_inv(w).len();
    let (Some(lo), Some(hi)) = (set.iter().min_by_key(|w| len(w)), set.iter().max_by_key(|w| len(w))) else {
        return false;
    };
    oracle_interval(n, lo, hi, true) == *set
}

fn oracle_extensions(p: &LabeledPoset) -> BTreeSet<Vec<usize>> {
    let n = p.n();
    perms(n)
        .into_iter()
        .filter(|w| (1..=n).all(|i| (1..=n).all(|j| !p.leq(i, j) || w[i - 1] <= w[j - 1])))
        .collect()
}

fn oracle_regular(p: &LabeledPoset) -> bool {
    let n = p.n();
    for x in 1..=n {
        for z in 1..=n {
            if x == z || !p.leq(x, z) {
                continue;
            }
            for y in x.min(z) + 1..x.max(z) {
                if !(p.comparable(x, y) || p.comparable(y, z)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Closure under swapping values i, i+1 when i-1 or i+2 sits between them.
fn oracle_dual_knuth_closed(set: &BTreeSet<Vec<usize>>) -> bool {
    set.iter().all(|w| {
        let n = w.len();
        let mut pos = vec![0; n + 2];
        for (p, &v) in w.iter().enumerate() {
            pos[v] = p;
        }
        (1..n).all(|i| {
            let (lo, hi) = (pos[i].min(pos[i + 1]), pos[i].max(pos[i + 1]));
            let between = |v: usize| (1..=n).contains(&v) && lo < pos[v] && pos[v] < hi;
            if !(between(i.wrapping_sub(1)) || between(i + 2)) {
                return true;
            }
            let mut m = w.clone();
            m.swap(pos[i], pos[i + 1]);
            set.contains(&m)
        })
    })
}

fn word(g: &Permutation) -> Vec<usize> {
    g.word().iter().map(|&v| v as usize).collect()
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn lib_extensions(p: &LabeledPoset) -> Result<BTreeSet<Vec<usize>>, String> {
    Ok(p.linear_extensions(Side::Left).map_err(|e| e.to_string())?.iter().map(word).collect())
}

// ---- criteria ----

fn c1_bjorner_wachs() -> Outcome {
    for n in [4, 5] {
        sweep("bw", Params::n(n))?;
        let ps = all_posets(n).map_err(|e| e.to_string())?;
        ensure(ps.len() == [219, 4231][n - 4], || format!("{} posets on [{n}]", ps.len()))?;
        for p in &ps {
            let ext = oracle_extensions(p);
            ensure(ext == lib_extensions(p)?, || format!("{p}: linear extensions disagree with oracle"))?;
            ensure(oracle_is_left_interval(n, &ext) == oracle_regular(p), || format!("{p}: interval ⇔ regular fails"))?;
        }
    }
    Ok(())
}

fn c2_interval_description() -> Outcome {
    sweeps("interval", 1..=6)?;
    for n in 1..=6 {
        for s in basic_shapes(n) {
            let (t_row, t_col) = (canonical(&s, Canonical::TRow), canonical(&s, Canonical::TCol));
            let taus = schur_labelings(&s, LabelingFilter::Distinguished);
            for tau in &taus {
                let lo = word(&reading(tau, &t_row).unwrap());
                let hi = word(&reading(tau, &t_col).unwrap());
                let ext = oracle_extensions(&LabeledPoset::from_tableau(tau));
                ensure(ext == oracle_interval(n, &lo, &hi, true), || format!("{s} {tau}: Σ_L ≠ [read(T_row), read(T_col)]_L"))?;
            }
            let (tau0, tau1) = (canonical(&s, Canonical::Tau0), canonical(&s, Canonical::Tau1));
            for t in enumerate_syt(&s) {
                let got: BTreeSet<Vec<usize>> = taus.iter().map(|tau| word(&reading(tau, &t).unwrap())).collect();
                let lo = word(&reading(&tau0, &t).unwrap());
                let hi = word(&reading(&tau1, &t).unwrap());
                ensure(got == oracle_interval(n, &lo, &hi, false), || format!("{s} {t}: readings ≠ right interval"))?;
            }
        }
    }
    Ok(())
}

/// Members of the class of a left interval: same shape of translation, with
/// left descents preserved element by element.
fn oracle_class(bottom: &[usize], top: &[usize]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = bottom.len();
    let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&x| a[x - 1]).collect() };
    let inverse = |a: &[usize]| -> Vec<usize> {
        let mut r = vec![0; a.len()];
        for (i, &v) in a.iter().enumerate() {
            r[v - 1] = i + 1;
        }
        r
    };
    let des_l = |w: &[usize]| -> Vec<usize> {
        let pos = inverse(w);
        (1..n).filter(|&i| pos[i - 1] > pos[i]).collect()
    };
    let base = oracle_interval(n, bottom, top, true);
    let x = compose(top, &inverse(bottom));
    let mut out = Vec::new();
    for b in perms(n) {
        let t = compose(&x, &b);
        if value_inv(&t).len() != value_inv(&b).len() + value_inv(&x).len() {
            continue;
        }
        let xi = compose(&inverse(bottom), &b);
        if base.iter().all(|g| des_l(g) == des_l(&compose(g, &xi))) {
            out.push((b, t));
        }
    }
    out
}

fn c3_example_class() -> Outcome {
    sweep("example_4_3", Params::none())?;
    let class = oracle_class(&[2, 1, 3, 4], &[2, 1, 4, 3]);
    ensure(class.len() == 3, || format!("oracle class has {} members", class.len()))?;
    let bottoms: BTreeSet<Vec<usize>> = class.iter().map(|c| c.0.clone()).collect();
    let tops: BTreeSet<Vec<usize>> = class.iter().map(|c| c.1.clone()).collect();
    ensure(bottoms == oracle_interval(4, &[2, 1, 3, 4], &[2, 3, 4, 1], false), || "min(C) ≠ [2134,2341]_R".into())?;
    ensure(tops == oracle_interval(4, &[2, 1, 4, 3], &[2, 4, 3, 1], false), || "max(C) ≠ [2143,2431]_R".into())?;
    let iv = weak_interval(&perm("2134"), &perm("2143"), Side::Left).unwrap();
    let d = equivalence_class(&iv).map_err(|e| e.to_string())?;
    let members: BTreeSet<(Vec<usize>, Vec<usize>)> = d.members().iter().map(|(b, t)| (word(b), word(t))).collect();
    ensure(members == class.into_iter().collect(), || "library class differs from oracle".into())?;
    ensure(
        (d.min_interval.bottom(), d.min_interval.top(), d.max_interval.bottom(), d.max_interval.top())
            == (&perm("2134"), &perm("2341"), &perm("2143"), &perm("2431")),
        || "library min/max differ".into(),
    )
}

fn c4_classes() -> Outcome {
    sweeps("classes", 1..=5)?;
    sweep("classes", Params::n(5).with_seed(0).with_sample(1000))?;
    for n in 1..=4 {
        for b in perms(n) {
            for t in perms(n) {
                if !position_inv(&b).is_subset(&position_inv(&t)) {
                    continue;
                }
                let iv = weak_interval(&Permutation::from_slice(&b).unwrap(), &Permutation::from_slice(&t).unwrap(), Side::Left)
                    .unwrap();
                let d = equivalence_class(&iv).map_err(|e| e.to_string())?;
                let got: BTreeSet<(Vec<usize>, Vec<usize>)> = d.members().iter().map(|(x, y)| (word(x), word(y))).collect();
                ensure(got == oracle_class(&b, &t).into_iter().collect(), || format!("class of [{b:?},{t:?}]_L"))?;
            }
        }
    }
    for n in 1..=5 {
        let mut owner: BTreeMap<BTreeSet<Vec<usize>>, SkewPartition> = BTreeMap::new();
        for p in all_posets(n).map_err(|e| e.to_string())? {
            let Some(tau) = schur_recognize(&p).map_err(|e| e.to_string())? else { continue };
            if !oracle_regular(&p) {
                continue;
            }
            let shape = tau.shape().clone();
            let prev = owner.entry(oracle_extensions(&p)).or_insert_with(|| shape.clone());
            ensure(*prev == shape, || format!("Σ_L({p}) lies in classes of {prev} and {shape}"))?;
        }
    }
    Ok(())
}

fn c5_classification() -> Outcome {
    sweeps("classification", 1..=5)
}

fn c6_dual_plactic() -> Outcome {
    sweeps("dpc", 1..=5)?;
    for n in 1..=5 {
        for p in all_posets(n).map_err(|e| e.to_string())? {
            let rsp = oracle_regular(&p) && schur_recognize(&p).map_err(|e| e.to_string())?.is_some();
            ensure(rsp == oracle_dual_knuth_closed(&oracle_extensions(&p)), || format!("{p}: RSP ⇔ closed fails"))?;
        }
    }
    Ok(())
}

fn c7_filtrations() -> Outcome {
    sweeps("filtration", 1..=6)?;
    let s: SkewPartition = "(4,2,1)/(2,1)".parse().unwrap();
    let f = distinguished_filtration(&LabeledPoset::from_tableau(&canonical(&s, Canonical::Tau0)), &FiltrationOrder::Default)
        .map_err(|e| e.to_string())?;
    let want: Vec<QSym> = [&[4][..], &[3, 1], &[3, 1], &[2, 2], &[2, 1, 1]].iter().map(|l| schur_straight(l)).collect();
    ensure(f.quotient_chars == want, || format!("quotients {:?}", f.quotient_shapes))
}

fn c8_table_one() -> Outcome {
    sweep("example_6_2_table", Params::none())?;
    let m = six_dim_module();
    let labels = ["2314", "1423", "3214", "2413", "1432", "3412"];
    // ch of a span of permutations: Σ F over the complements of left descent sets.
    let mut ch = QSym::zero(4);
    for g in labels.map(perm) {
        let des = g.descents(Side::Left);
        ch = ch.add(&QSym::f(Composition::from_set(&des.complement())));
    }
    ensure(ch == schur_straight(&[3, 1]).add(&schur_straight(&[2, 1, 1])), || format!("ch(M) = {ch}"))?;
    ensure(m.characteristic().ok() == Some(ch), || "library ch(M) differs".into())?;
    let soc = socle(&m).map_err(|e| e.to_string())?.1;
    let inside = ["3412", "3214", "1432"].iter().all(|g| {
        basis_vector(&m, &[(1, perm(g))]).is_some_and(|v| soc.contains(&v))
    });
    ensure(soc.rank() == 3 && inside, || format!("socle rank {}", soc.rank()))
}

fn c9_decompositions() -> Outcome {
    let r = run_check("sec7_decomps", &Params::none()).map_err(|e| e.to_string())?;
    let failed: Vec<String> = r
        .failures
        .iter()
        .map(|f| format!("{} ({})", f.instance["claim"].as_str().unwrap_or("?"), f.reason))
        .collect();
    ensure(failed.is_empty(), || format!("{} of {} claims fail: {}", failed.len(), r.instances, failed.join("; ")))
}

fn c10_characteristics() -> Outcome {
    sweeps("kp", 1..=5)
}

fn c11_properties() -> Outcome {
    sweeps("properties", 1..=6)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("regular posets are exactly those with interval linear extensions", c1_bjorner_wachs),
        ("linear extensions and readings of basic shapes are weak intervals", c2_interval_description),
        ("class of [2134,2143]_L", c3_example_class),
        ("equivalence classes and shape classes", c4_classes),
        ("isomorphism classification with covers and hulls", c5_classification),
        ("RSP iff dual-plactic-closed", c6_dual_plactic),
        ("distinguished filtrations", c7_filtrations),
        ("six-dimensional example and its submodule table", c8_table_one),
        ("decompositions and indecomposability", c9_decompositions),
        ("K_P against the monomial oracle and ch(M_P) = psi(K_P)", c10_characteristics),
        ("property suites", c11_properties),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({secs:.1}s)", k + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL  {name} ({secs:.1}s): {why}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    println!("{} of {} criteria pass; failing: {failed:?}", criteria.len() - failed.len(), criteria.len());
    if failed == KNOWN_FAILURES {
        ExitCode::SUCCESS
    } else {
        println!("failing set differs from the recorded {KNOWN_FAILURES:?}");
        ExitCode::FAILURE
    }
}
