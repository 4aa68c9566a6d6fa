//! Literal data for the worked examples the harness reproduces.

use crate::hecke::HeckeModule;
use crate::linalg::{Rat, Vector};
use crate::shape::Composition;
use crate::symgrp::Permutation;

fn perm(s: &str) -> Permutation {
    s.parse().expect("fixture permutation")
}

fn comp(s: &str) -> Composition {
    s.parse().expect("fixture composition")
}

/// The six-dimensional module on {2314, 1423, 3214, 2413, 1432, 3412}.
pub fn six_dim_module() -> HeckeModule {
    let b: Vec<Permutation> = ["2314", "1423", "3214", "2413", "1432", "3412"].iter().map(|s| perm(s)).collect();
    HeckeModule::from_subset(&b).expect("fixture subset is a module")
}

pub struct SubmoduleRow {
    pub span: Vec<Vec<(i64, Permutation)>>,
    pub socle_dim: usize,
    pub character: Vec<Composition>,
}

pub fn submodule_table() -> Vec<SubmoduleRow> {
    let rows: [(&[&[(i64, &str)]], usize, [&str; 3]); 9] = [
        (&[&[(1, "3214")], &[(1, "1432")], &[(1, "3412")]], 3, ["(3,1)", "(1,3)", "(1,2,1)"]),
        (&[&[(1, "3214")], &[(1, "1423"), (-1, "1432"), (-1, "2413")], &[(1, "3412")]], 2, ["(3,1)", "(1,1,2)", "(1,2,1)"]),
        (&[&[(1, "3214")], &[(1, "2314"), (-1, "3214"), (-1, "2413")], &[(1, "3412")]], 2, ["(3,1)", "(2,1,1)", "(1,2,1)"]),
        (&[&[(1, "3214")], &[(1, "2413")], &[(1, "3412")]], 2, ["(3,1)", "(2,2)", "(1,2,1)"]),
        (&[&[(1, "1432")], &[(1, "1423"), (-1, "1432"), (-1, "2413")], &[(1, "3412")]], 2, ["(1,3)", "(1,1,2)", "(1,2,1)"]),
        (&[&[(1, "1432")], &[(1, "2314"), (-1, "3214"), (-1, "2413")], &[(1, "3412")]], 2, ["(1,3)", "(2,1,1)", "(1,2,1)"]),
        (&[&[(1, "1432")], &[(1, "2413")], &[(1, "3412")]], 2, ["(1,3)", "(2,2)", "(1,2,1)"]),
        (&[&[(1, "2314"), (-1, "3214")], &[(1, "2413")], &[(1, "3412")]], 1, ["(2,1,1)", "(2,2)", "(1,2,1)"]),
        (&[&[(1, "1423"), (-1, "1432")], &[(1, "2413")], &[(1, "3412")]], 1, ["(1,1,2)", "(2,2)", "(1,2,1)"]),
    ];
    rows.iter()
        .map(|(span, soc, ch)| SubmoduleRow {
            span: span.iter().map(|v| v.iter().map(|&(c, g)| (c, perm(g))).collect()).collect(),
            socle_dim: *soc,
            character: ch.iter().map(|a| comp(a)).collect(),
        })
        .collect()
}

/// Coordinates of Σ c·γ in the permutation basis of `m`.
pub fn basis_vector(m: &HeckeModule, terms: &[(i64, Permutation)]) -> Option<Vector> {
    let labels = m.labels().perms()?;
    let mut v = vec![Rat::ZERO; m.dim()];
    for (c, g) in terms {
        let k = labels.iter().position(|h| h == g)?;
        v[k] += &Rat::int(*c);
    }
    Some(v)
}

/// The three fillings of (4,2)/(2) whose poset modules share a shape.
pub const DECOMP_TAUS: [&str; 3] = ["[[_,_,2,1],[4,3]]", "[[_,_,4,2],[3,1]]", "[[_,_,4,1],[3,2]]"];

/// Pairs of left intervals in S_6 with equal characteristic and end descents.
pub const COVER_PAIRS: [(&str, &str); 7] = [
    ("426351", "624153"),
    ("354612", "561324"),
    ("356412", "561342"),
    ("563124", "534612"),
    ("536412", "563142"),
    ("465312", "645132"),
    ("564213", "546231"),
];
