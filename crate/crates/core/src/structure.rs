//! Descent-preserving equivalence of left weak intervals, dual-Knuth closure
//! and distinguished filtrations of poset modules.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::hecke::{HeckeModule, Move};
use crate::linalg::{Rat, Vector};
use crate::poset::{schur_recognize, LabeledPoset};
use crate::qsym::{schur_expand, schur_straight, schur_to_f, QSym};
use crate::shape::{partition_transpose, strictly_dominated, Composition, Partition};
use crate::symgrp::{longest_element, weak_interval, weak_leq, DescentSet, Permutation, Side, WeakInterval};
use crate::tabx::{rsk, BijectiveTableau};

fn require_left(iv: &WeakInterval) -> Result<()> {
    if iv.side() != Side::Left {
        return Err(Error::invalid("expected a left weak interval"));
    }
    Ok(())
}

/// The translation γ ↦ γσ₁⁻¹σ₂ when it carries I₁ onto I₂ preserving Des_L.
pub fn descent_preserving_map(i1: &WeakInterval, i2: &WeakInterval) -> Result<Option<Permutation>> {
    require_left(i1)?;
    require_left(i2)?;
    if i1.n() != i2.n() {
        return Err(Error::invalid("intervals live in different symmetric groups"));
    }
    let xi1 = i1.top().compose(&i1.bottom().inverse());
    let xi2 = i2.top().compose(&i2.bottom().inverse());
    if xi1 != xi2 || i1.len() != i2.len() {
        return Ok(None);
    }
    let shift = i1.bottom().inverse().compose(i2.bottom());
    for g in i1.elements() {
        let h = g.compose(&shift);
        if !i2.contains(&h) || g.descents(Side::Left) != h.descents(Side::Left) {
            return Ok(None);
        }
    }
    Ok(Some(shift))
}

/// I₁ ≃_D I₂.
pub fn descent_preserving_equiv(i1: &WeakInterval, i2: &WeakInterval) -> Result<bool> {
    Ok(descent_preserving_map(i1, i2)?.is_some())
}

/// Whether the translation sends every cover γ → s_iγ of I₁ to a cover of I₂
/// with the same colour.
pub fn translation_preserves_colors(i1: &WeakInterval, i2: &WeakInterval, shift: &Permutation) -> bool {
    let els = i1.elements();
    let covers2: HashSet<(Permutation, Permutation, usize)> = i2
        .covers()
        .iter()
        .map(|c| (i2.elements()[c.from].clone(), i2.elements()[c.to].clone(), c.color))
        .collect();
    i1.covers().iter().all(|c| {
        covers2.contains(&(els[c.from].compose(shift), els[c.to].compose(shift), c.color))
    }) && i1.covers().len() == i2.covers().len()
}

#[derive(Clone, Debug)]
pub struct EquivClassDescriptor {
    pub n: usize,
    pub xi: Permutation,
    pub min_interval: WeakInterval,
    pub max_interval: WeakInterval,
}

impl EquivClassDescriptor {
    pub fn class_size(&self) -> usize {
        self.min_interval.len()
    }

    /// Members [γ, ξγ]_L for γ in min(C), as (bottom, top) pairs.
    pub fn members(&self) -> Vec<(Permutation, Permutation)> {
        let mut v: Vec<_> =
            self.min_interval.elements().iter().map(|g| (g.clone(), self.xi.compose(g))).collect();
        v.sort();
        v
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "xi": self.xi,
            "min": self.min_interval.to_json(),
            "max": self.max_interval.to_json(),
            "class_size": self.class_size(),
        })
    }
}

fn class_bottoms(iv: &WeakInterval) -> Result<BTreeSet<Permutation>> {
    let n = iv.n();
    let xi = iv.top().compose(&iv.bottom().inverse());
    let mut seen = BTreeSet::from([iv.bottom().clone()]);
    let mut queue = VecDeque::from([iv.bottom().clone()]);
    while let Some(g) = queue.pop_front() {
        for j in 1..n {
            let h = g.right_mul_simple(j);
            if seen.contains(&h) {
                continue;
            }
            let top = xi.compose(&h);
            if !weak_leq(&h, &top, Side::Left)? {
                continue;
            }
            let cand = weak_interval(&h, &top, Side::Left)?;
            if descent_preserving_equiv(iv, &cand)? {
                seen.insert(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(seen)
}

fn as_right_interval(set: &BTreeSet<Permutation>) -> Result<WeakInterval> {
    let bottom = set.iter().min_by_key(|g| (g.length(), (*g).clone())).expect("non-empty");
    let top = set.iter().max_by_key(|g| (g.length(), (*g).clone())).expect("non-empty");
    let fail = || Error::check(format!("class set of size {} is not a right weak interval", set.len()));
    if !weak_leq(bottom, top, Side::Right)? {
        return Err(fail());
    }
    let iv = weak_interval(bottom, top, Side::Right)?;
    if iv.element_set() != *set {
        return Err(fail());
    }
    Ok(iv)
}

/// The ≃_D-class of a left interval, found by right-cover search from its
/// bottom; min(C) and max(C) must come out as right intervals.
pub fn equivalence_class(iv: &WeakInterval) -> Result<EquivClassDescriptor> {
    require_left(iv)?;
    let xi = iv.top().compose(&iv.bottom().inverse());
    let bottoms = class_bottoms(iv)?;
    let min_interval = as_right_interval(&bottoms)?;
    let tops: BTreeSet<Permutation> = bottoms.iter().map(|g| xi.compose(g)).collect();
    let max_interval = as_right_interval(&tops)?;
    if max_interval.bottom() != &xi.compose(min_interval.bottom()) || max_interval.top() != &xi.compose(min_interval.top())
    {
        return Err(Error::check("max(C) is not ξ·min(C)"));
    }
    Ok(EquivClassDescriptor { n: iv.n(), xi, min_interval, max_interval })
}

/// Every left weak interval in S_n, grouped into ≃_D-classes.
pub fn all_equivalence_classes(n: usize) -> Result<Vec<EquivClassDescriptor>> {
    crate::config::check_n(n)?;
    let perms = Permutation::all(n);
    let mut done: HashSet<(Permutation, Permutation)> = HashSet::new();
    let mut out = Vec::new();
    for s in &perms {
        for r in &perms {
            if done.contains(&(s.clone(), r.clone())) || !weak_leq(s, r, Side::Left)? {
                continue;
            }
            let d = equivalence_class(&weak_interval(s, r, Side::Left)?)?;
            for m in d.members() {
                done.insert(m);
            }
            out.push(d);
        }
    }
    Ok(out)
}

/// Unique-minimum candidate for a class with ξ = s_{i₀} and X = {i₀-1, i₀},
/// i₀+1 ∈ D₁. `shift_last` places the last block's descents relative to the
/// block start; otherwise D₁ ∩ [p₄-1] is used verbatim.
pub fn shift_min_w0(n: usize, i0: usize, d1: &DescentSet, shift_last: bool) -> Option<Permutation> {
    if i0 < 2 || i0 + 1 >= n || !d1.contains(i0 + 1) {
        return None;
    }
    let mut m1 = i0;
    while m1 > 1 && d1.contains(m1 - 1) {
        m1 -= 1;
    }
    let mut m2 = i0 + 1;
    while m2 < n - 1 && d1.contains(m2 + 1) {
        m2 += 1;
    }
    let (p1, p2, p3, p4) = (m1 - 1, m2 - i0, i0 - m1, n - (m2 + 1));
    let block = |len: usize, members: Vec<usize>| -> Vec<usize> {
        if len == 0 {
            return Vec::new();
        }
        let set = DescentSet::new(len, members.into_iter().filter(|&d| d >= 1 && d < len)).expect("in range");
        longest_element(len, &set).word().iter().map(|&v| v as usize).collect()
    };
    let rev = |len: usize| -> Vec<usize> { (1..=len).rev().collect() };
    let w1 = block(p1, d1.members());
    let w4 = if shift_last {
        block(p4, d1.members().into_iter().filter(|&d| d > m2 + 1).map(|d| d - (m2 + 1)).collect())
    } else {
        block(p4, d1.members())
    };
    let mut word = w1;
    word.extend(rev(p2).into_iter().map(|v| v + i0 + 1));
    word.push(i0);
    word.extend(rev(p3).into_iter().map(|v| v + m1 - 1));
    word.push(i0 + 1);
    word.extend(w4.into_iter().map(|v| v + m2 + 1));
    Permutation::from_slice(&word).ok()
}

#[derive(Clone, Debug)]
pub struct ShiftMinRecord {
    pub i0: usize,
    pub d1: Vec<usize>,
    pub bfs_min: Permutation,
    pub formula_shifted: Option<Permutation>,
    pub formula_verbatim: Option<Permutation>,
}

impl ShiftMinRecord {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "i0": self.i0,
            "d1": self.d1,
            "bfs_min": self.bfs_min,
            "formula_shifted": self.formula_shifted,
            "formula_verbatim": self.formula_verbatim,
        })
    }
}

/// Compares the search-based min(C) with the explicit w₀ candidate over all
/// classes in S_n with ξ = s_{i₀} falling in the i₀+1 ∈ D₁ subcase of X = {i₀-1, i₀}.
pub fn shift_min_comparison(n: usize) -> Result<Vec<ShiftMinRecord>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for sigma in Permutation::all(n) {
        for i0 in 2..n.saturating_sub(1) {
            if sigma.has_descent(i0, Side::Left) {
                continue;
            }
            let top = sigma.left_mul_simple(i0);
            let d1 = sigma.descents(Side::Left);
            let d2 = top.descents(Side::Left);
            let x: Vec<usize> = (1..n).filter(|&i| d1.contains(i) != d2.contains(i)).collect();
            if x != [i0 - 1, i0] || !d1.contains(i0 + 1) {
                continue;
            }
            let class = equivalence_class(&weak_interval(&sigma, &top, Side::Left)?)?;
            let bfs_min = class.min_interval.bottom().clone();
            if !seen.insert((i0, bfs_min.clone())) {
                continue;
            }
            let d1 = bfs_min.descents(Side::Left);
            out.push(ShiftMinRecord {
                i0,
                d1: d1.members(),
                formula_shifted: shift_min_w0(n, i0, &d1, true),
                formula_verbatim: shift_min_w0(n, i0, &d1, false),
                bfs_min,
            });
        }
    }
    Ok(out)
}

type QMemo = HashMap<Permutation, BijectiveTableau>;

fn q_memo(n: usize) -> Option<Arc<QMemo>> {
    if n > 7 {
        return None;
    }
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<QMemo>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(m) = cache.lock().unwrap().get(&n) {
        return Some(m.clone());
    }
    let memo: QMemo = Permutation::all(n).into_iter().map(|g| {
        let q = rsk(&g).1;
        (g, q)
    }).collect();
    let memo = Arc::new(memo);
    cache.lock().unwrap().insert(n, memo.clone());
    Some(memo)
}

/// Q(σ), the RSK recording tableau.
pub fn recording_tableau(sigma: &Permutation) -> BijectiveTableau {
    match q_memo(sigma.n()) {
        Some(m) => m[sigma].clone(),
        None => rsk(sigma).1,
    }
}

fn dual_knuth_class_sizes(n: usize) -> HashMap<BijectiveTableau, usize> {
    let mut sizes = HashMap::new();
    if let Some(m) = q_memo(n) {
        for q in m.values() {
            *sizes.entry(q.clone()).or_insert(0) += 1;
        }
    }
    sizes
}

#[derive(Clone, Debug)]
pub struct DualKnuthReport {
    pub closed: bool,
    pub classes: BTreeMap<BijectiveTableau, Vec<Permutation>>,
}

impl DualKnuthReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "closed": self.closed,
            "classes": self.classes.iter().map(|(q, v)| serde_json::json!({"q": q.to_json(), "members": v})).collect::<Vec<_>>(),
        })
    }
}

/// Partition by recording tableau; closed when every class is complete in S_n.
pub fn dual_knuth_closure_test(set: &[Permutation]) -> Result<DualKnuthReport> {
    let Some(first) = set.first() else {
        return Ok(DualKnuthReport { closed: true, classes: BTreeMap::new() });
    };
    let n = first.n();
    if set.iter().any(|g| g.n() != n) {
        return Err(Error::invalid("permutations of different sizes"));
    }
    if n > 7 {
        return Err(Error::Cap(format!("dual-Knuth closure is capped at n = 7, got {n}")));
    }
    let mut classes: BTreeMap<BijectiveTableau, Vec<Permutation>> = BTreeMap::new();
    let unique: BTreeSet<&Permutation> = set.iter().collect();
    for g in unique {
        classes.entry(recording_tableau(g)).or_default().push(g.clone());
    }
    let sizes = dual_knuth_class_sizes(n);
    let closed = classes.iter().all(|(q, v)| sizes[q] == v.len());
    Ok(DualKnuthReport { closed, classes })
}

/// P is a regular Schur labeled skew shape poset.
pub fn is_rsp(p: &LabeledPoset) -> Result<bool> {
    Ok(p.is_regular() && schur_recognize(p)?.is_some())
}

/// σ ⪯_L ρ forces σ, ρ dual-Knuth equivalent or sh(Q(ρ)) ◁ sh(Q(σ)); returns the
/// left cover pairs in S_n violating this.
pub fn left_order_shape_violations(n: usize) -> Vec<(Permutation, Permutation)> {
    let mut bad = Vec::new();
    for g in Permutation::all(n) {
        let qg = recording_tableau(&g);
        for i in 1..n {
            if g.has_descent(i, Side::Left) {
                continue;
            }
            let h = g.left_mul_simple(i);
            let qh = recording_tableau(&h);
            if qg != qh && !strictly_dominated(qh.shape().lambda(), qg.shape().lambda()) {
                bad.push((g.clone(), h));
            }
        }
    }
    bad
}

/// Total order on recording tableaux used to build a filtration.
#[derive(Clone, Debug, Default)]
pub enum FiltrationOrder {
    /// Shapes in increasing lexicographic order (a linear extension of
    /// dominance), ties broken by row reading.
    #[default]
    Default,
    Explicit(Vec<BijectiveTableau>),
}

#[derive(Clone, Debug)]
pub struct Filtration {
    pub module: HeckeModule,
    /// Cumulative basis subsets B_1 ⊂ B_2 ⊂ ⋯.
    pub layers: Vec<Vec<Permutation>>,
    pub q_tableaux: Vec<BijectiveTableau>,
    pub quotient_chars: Vec<QSym>,
    /// sh(T_k)^t for each quotient.
    pub quotient_shapes: Vec<Partition>,
}

impl Filtration {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "layers": self.layers.iter().map(|l| l.iter().map(|g| g.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "q_tableaux": self.q_tableaux.iter().map(BijectiveTableau::to_json).collect::<Vec<_>>(),
            "quotient_schur": self.quotient_shapes,
            "quotient_chars": self.quotient_chars.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
        })
    }
}

fn default_key(t: &BijectiveTableau) -> (Vec<usize>, Vec<u8>) {
    (t.shape().lambda().to_vec(), t.row_reading())
}

/// Checks that `order` never puts S before T when sh(T) ◁ sh(S).
pub fn validate_order(order: &[BijectiveTableau]) -> Result<()> {
    for (i, s) in order.iter().enumerate() {
        for t in &order[i + 1..] {
            if strictly_dominated(t.shape().lambda(), s.shape().lambda()) {
                return Err(Error::invalid(format!("order places {s} before {t} against dominance")));
            }
        }
    }
    Ok(())
}

fn fixed_set_comp(g: &Permutation) -> Composition {
    Composition::from_set(&g.descents(Side::Left).complement())
}

/// Distinguished filtration of M_P: unions of dual-Knuth classes of Σ_L(P)
/// taken along a dominance-compatible order of their recording tableaux.
pub fn distinguished_filtration(p: &LabeledPoset, order: &FiltrationOrder) -> Result<Filtration> {
    let tau = schur_recognize(p)?.ok_or_else(|| Error::invalid("poset is not Schur labeled"))?;
    if !p.is_regular() {
        return Err(Error::invalid("poset is not regular"));
    }
    let module = HeckeModule::poset(p)?;
    let basis = module.labels().perms().expect("permutation basis").to_vec();
    let dk = dual_knuth_closure_test(&basis)?;
    if !dk.closed {
        return Err(Error::check("Σ_L(P) is not dual-Knuth closed"));
    }
    let mut qs: Vec<BijectiveTableau> = dk.classes.keys().cloned().collect();
    match order {
        FiltrationOrder::Default => qs.sort_by_key(default_key),
        FiltrationOrder::Explicit(list) => {
            validate_order(list)?;
            let pos: HashMap<&BijectiveTableau, usize> = list.iter().enumerate().map(|(k, t)| (t, k)).collect();
            if let Some(missing) = qs.iter().find(|q| !pos.contains_key(q)) {
                return Err(Error::invalid(format!("order does not rank {missing}")));
            }
            qs.sort_by_key(|q| pos[q]);
        }
    }
    validate_order(&qs)?;
    let index: HashMap<&Permutation, usize> = basis.iter().enumerate().map(|(k, g)| (g, k)).collect();
    let moves = module.combinatorial_moves().expect("poset modules are combinatorial");
    let mut layer: HashSet<usize> = HashSet::new();
    let mut layers = Vec::new();
    let mut quotient_chars = Vec::new();
    let mut quotient_shapes = Vec::new();
    for q in &qs {
        let class = &dk.classes[q];
        layer.extend(class.iter().map(|g| index[g]));
        for &b in &layer {
            for m in &moves[b] {
                if let Move::To(t) = m {
                    if !layer.contains(t) {
                        return Err(Error::check(format!("layer ending at {q} is not a submodule")));
                    }
                }
            }
        }
        let mut ch = QSym::zero(p.n());
        for g in class {
            ch.add_term(fixed_set_comp(g), &Rat::ONE);
        }
        let shape_t = partition_transpose(q.shape().lambda());
        if ch != schur_straight(&shape_t) {
            return Err(Error::check(format!("quotient for {q} is not s_{shape_t:?}")));
        }
        let mut l: Vec<Permutation> = layer.iter().map(|&b| basis[b].clone()).collect();
        l.sort();
        layers.push(l);
        quotient_chars.push(ch);
        quotient_shapes.push(shape_t);
    }
    let total = quotient_chars.iter().fold(QSym::zero(p.n()), |a, b| a.add(b));
    if total != schur_to_f(tau.shape()) {
        return Err(Error::check("quotient characteristics do not sum to the skew Schur function"));
    }
    Ok(Filtration { module, layers, q_tableaux: qs, quotient_chars, quotient_shapes })
}

#[derive(Clone, Debug)]
pub struct ProbeRow {
    pub closed: bool,
    pub dim: usize,
    pub character: Option<QSym>,
    pub is_schur: bool,
    pub achieved: bool,
}

#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub rows: Vec<ProbeRow>,
    pub achieved_any: bool,
}

impl ProbeReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "achieved_any": self.achieved_any,
            "rows": self.rows.iter().map(|r| serde_json::json!({
                "closed": r.closed,
                "dim": r.dim,
                "character": r.character.as_ref().map(|c| c.to_string()),
                "is_schur": r.is_schur,
                "achieved": r.achieved,
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn is_single_schur(q: &QSym) -> bool {
    schur_expand(q).is_some_and(|e| {
        let nz: Vec<_> = e.values().filter(|c| !c.is_zero()).collect();
        nz.len() == 1 && nz[0].is_one()
    })
}

/// Tests each candidate subspace for being a submodule of the target
/// dimension whose characteristic is one of `targets`.
pub fn filtration_nonexistence_probe(
    m: &HeckeModule,
    dim_target: usize,
    candidates: &[Vec<Vector>],
    targets: &[QSym],
) -> Result<ProbeReport> {
    let mut rows = Vec::new();
    for cand in candidates {
        let r = crate::hecke::verify_submodule(m, cand)?;
        let is_schur = r.character.as_ref().is_some_and(is_single_schur);
        let achieved = r.closed && r.dim == dim_target && r.character.as_ref().is_some_and(|c| targets.contains(c));
        rows.push(ProbeRow { closed: r.closed, dim: r.dim, character: r.character, is_schur, achieved });
    }
    let achieved_any = rows.iter().any(|r| r.achieved);
    Ok(ProbeReport { rows, achieved_any })
}
