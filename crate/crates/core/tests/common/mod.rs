//! Shared helpers for the integration tests: a tiny parser for linear
//! expressions in the symbols a, b, c and transcribed reference tables.

#![allow(dead_code)]

pub mod tables;

use std::collections::{BTreeMap, BTreeSet};

use eorbit_core::scalar::q;
use eorbit_core::weylgroup::even_dominant_point;
use eorbit_core::{ChamberConfig, RootSystem, Weight};

/// Values substituted for the symbols a, b, c.
pub type Vars = [i64; 3];

/// Evaluates an integer linear expression such as `-a-2b+c` or `0`.
pub fn eval_expr(expr: &str, v: &Vars) -> i64 {
    let bytes = expr.as_bytes();
    let mut i = 0;
    let mut total = 0;
    let mut first = true;
    while i < bytes.len() {
        let mut sign = 1;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        } else if !first {
            panic!("malformed expression `{expr}`");
        }
        first = false;
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coeff = if i > start { expr[start..i].parse::<i64>().unwrap() } else { 1 };
        let value = match bytes.get(i) {
            Some(b'a') => v[0],
            Some(b'b') => v[1],
            Some(b'c') => v[2],
            _ => {
                assert!(i > start, "malformed expression `{expr}`");
                total += sign * coeff;
                continue;
            }
        };
        i += 1;
        total += sign * coeff * value;
    }
    total
}

/// Parses one point written as space-separated expressions.
pub fn eval_point(point: &str, v: &Vars) -> Weight {
    point.split_whitespace().map(|e| q(eval_expr(e, v))).collect()
}

/// Parses a comma-separated list of points.
pub fn eval_points(list: &str, v: &Vars) -> Vec<Weight> {
    list.split(',').map(|p| eval_point(p, v)).collect()
}

/// How a listed set of points is completed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Closure {
    /// The list is complete.
    Listed,
    /// Every point comes with its negative.
    PlusMinus,
    /// Every point (a' b' c') comes with (−c' −b' −a').
    Contragredient,
}

/// The full point set described by a listing.
pub fn complete(points: Vec<Weight>, closure: Closure) -> BTreeSet<Weight> {
    let mut out = BTreeSet::new();
    for p in points {
        match closure {
            Closure::Listed => {}
            Closure::PlusMinus => {
                out.insert(p.iter().map(|x| -x).collect());
            }
            Closure::Contragredient => {
                out.insert(p.iter().rev().map(|x| -x).collect());
            }
        }
        out.insert(p);
    }
    out
}

/// Canonical multiset {even-dominant rep → multiplicity} of a list of
/// weights with multiplicities.
pub fn canonical_multiset(sys: &RootSystem, cfg: &ChamberConfig, terms: &[(u64, Weight)]) -> BTreeMap<Weight, u64> {
    let mut out = BTreeMap::new();
    for (k, w) in terms {
        *out.entry(even_dominant_point(sys, cfg, w)).or_insert(0) += k;
    }
    out
}

/// The first `count` positive triples (ordered by sum, then
/// lexicographically) with entries up to `limit` that satisfy `pred`. Only
/// the first `vars` symbols are varied; the others stay 0.
pub fn instantiate(vars: usize, count: usize, limit: i64, pred: impl Fn(&Vars) -> bool) -> Vec<Vars> {
    let mut found = Vec::new();
    let range = |k: usize| if k < vars { 1..=limit } else { 0..=0 };
    for a in range(0) {
        for b in range(1) {
            for c in range(2) {
                let v = [a, b, c];
                if pred(&v) {
                    found.push(v);
                }
            }
        }
    }
    found.sort_by_key(|v| (v.iter().sum::<i64>(), *v));
    found.truncate(count);
    found
}
