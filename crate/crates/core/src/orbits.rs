//! W- and W_e-orbits, signed orbits, and decompositions of orbit products
//! and branchings into W_e-orbits.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rootsystem::{Basis, DiagramSpec, RootSystem, Series};
use crate::scalar::{format_weight, q, Rational, Weight};
use crate::weylgroup::{
    dominant_reduce, even_dominant_point, even_dominant_scaled, reflect_simple, reflect_simple_scaled,
    scale_to_integers, unscale, ChamberConfig,
};

/// Whether an orbit representative lies in D_+ or only in r_α D_+.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitKind {
    First,
    Second,
}

/// A W_e-orbit with its even-dominant representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub rep: Weight,
    /// Orbit points, sorted lexicographically.
    pub points: Vec<Weight>,
    pub kind: OrbitKind,
    /// Order of the stabilizer of `rep` in W_e.
    pub stabilizer_order: u128,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// A W-orbit of a strictly dominant weight split by the sign det w.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedOrbit {
    /// Points wλ with det w = +1, sorted.
    pub plus: Vec<Weight>,
    /// Points wλ with det w = −1, sorted.
    pub minus: Vec<Weight>,
}

/// One term of an [`OrbitDecomposition`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Term {
    pub rep: Weight,
    pub mult: u64,
}

/// A multiset of W_e-orbits given by representatives, sorted by rep.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrbitDecomposition {
    pub terms: Vec<Term>,
}

impl OrbitDecomposition {
    /// Multiplicity of the orbit with the given even-dominant representative.
    pub fn mult(&self, rep: &[Rational]) -> u64 {
        self.terms.iter().find(|t| t.rep == rep).map_or(0, |t| t.mult)
    }

    /// Σ mult · |O_e(rep)| computed in `sys`.
    pub fn point_count(&self, sys: &RootSystem) -> usize {
        self.terms.iter().map(|t| t.mult as usize * we_orbit_points(sys, &t.rep).len()).sum()
    }
}

/// Breadth-first closure of a point under products r_i r_j.
fn even_closure(sys: &RootSystem, start: &[Rational]) -> Vec<Weight> {
    if let Some(pts) = even_closure_scaled(sys, start) {
        return pts;
    }
    let n = sys.rank();
    let mut seen: HashSet<Weight> = HashSet::from([start.to_vec()]);
    let mut queue = VecDeque::from([start.to_vec()]);
    while let Some(x) = queue.pop_front() {
        for i in 0..n {
            let mut y = x.clone();
            reflect_simple(sys, &mut y, i);
            for j in 0..n {
                if j == i {
                    continue;
                }
                let mut z = y.clone();
                reflect_simple(sys, &mut z, j);
                if seen.insert(z.clone()) {
                    queue.push_back(z);
                }
            }
        }
    }
    let mut pts: Vec<Weight> = seen.into_iter().collect();
    pts.sort();
    pts
}

/// [`even_closure`] on the point scaled to integers; `None` on overflow.
fn even_closure_scaled(sys: &RootSystem, start: &[Rational]) -> Option<Vec<Weight>> {
    let n = sys.rank();
    let (p, d) = scale_to_integers(start)?;
    let mut seen: HashSet<Vec<i64>> = HashSet::from([p.clone()]);
    let mut queue = VecDeque::from([p]);
    while let Some(x) = queue.pop_front() {
        for i in 0..n {
            let mut y = x.clone();
            reflect_simple_scaled(sys, &mut y, i)?;
            for j in (0..n).filter(|&j| j != i) {
                let mut z = y.clone();
                reflect_simple_scaled(sys, &mut z, j)?;
                if seen.insert(z.clone()) {
                    queue.push_back(z);
                }
            }
        }
    }
    let mut pts: Vec<Weight> = seen.iter().map(|p| unscale(p, d)).collect();
    pts.sort();
    Some(pts)
}

/// Points of the W_e-orbit of any weight, sorted.
pub fn we_orbit_points(sys: &RootSystem, x: &[Rational]) -> Vec<Weight> {
    if sys.rank() == 1 {
        // W_e(A1) is trivial.
        return vec![x.to_vec()];
    }
    even_closure(sys, x)
}

/// The W_e-orbit of λ. Any weight is accepted; the stored representative is
/// its even-dominant form.
pub fn we_orbit(sys: &RootSystem, cfg: &ChamberConfig, lambda: &[Rational]) -> Result<Orbit> {
    sys.check_rank(lambda)?;
    let rep = even_dominant_point(sys, cfg, lambda);
    let points = we_orbit_points(sys, &rep);
    let kind = if rep.iter().all(|v| !v.is_negative()) { OrbitKind::First } else { OrbitKind::Second };
    let stabilizer_order = sys.even_weyl_order()? / points.len() as u128;
    Ok(Orbit { rep, points, kind, stabilizer_order })
}

/// Points of the full W-orbit, sorted.
pub fn w_orbit(sys: &RootSystem, x: &[Rational]) -> Result<Vec<Weight>> {
    sys.check_rank(x)?;
    let mut seen: HashSet<Weight> = HashSet::from([x.to_vec()]);
    let mut queue = VecDeque::from([x.to_vec()]);
    while let Some(p) = queue.pop_front() {
        for i in 0..sys.rank() {
            let mut y = p.clone();
            reflect_simple(sys, &mut y, i);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut pts: Vec<Weight> = seen.into_iter().collect();
    pts.sort();
    Ok(pts)
}

/// The W-orbit of a strictly dominant λ with each point signed by det w.
pub fn signed_orbit(sys: &RootSystem, lambda: &[Rational]) -> Result<SignedOrbit> {
    sys.check_rank(lambda)?;
    if !lambda.iter().all(|v| v.is_positive()) {
        return Err(Error::NotStrictlyDominant(format_weight(lambda)));
    }
    // The stabilizer is trivial, so the parity of any word reaching a point
    // is well defined.
    let mut sign: HashMap<Weight, bool> = HashMap::from([(lambda.to_vec(), false)]);
    let mut queue = VecDeque::from([lambda.to_vec()]);
    while let Some(p) = queue.pop_front() {
        let odd = sign[&p];
        for i in 0..sys.rank() {
            let mut y = p.clone();
            reflect_simple(sys, &mut y, i);
            if !sign.contains_key(&y) {
                sign.insert(y.clone(), !odd);
                queue.push_back(y);
            }
        }
    }
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (p, odd) in sign {
        if odd {
            minus.push(p);
        } else {
            plus.push(p);
        }
    }
    plus.sort();
    minus.sort();
    Ok(SignedOrbit { plus, minus })
}

/// Groups a multiset of points into W_e-orbits of `sys`.
fn group_points<I>(sys: &RootSystem, counts: I) -> Result<OrbitDecomposition>
where
    I: IntoIterator<Item = (Weight, usize)>,
{
    let mut terms = Vec::new();
    for (rep, count) in counts {
        let size = we_orbit_points(sys, &rep).len();
        if count % size != 0 {
            return Err(Error::NonIntegralMultiplicity { rep: format_weight(&rep), count, size });
        }
        terms.push(Term { rep, mult: (count / size) as u64 });
    }
    terms.sort();
    Ok(OrbitDecomposition { terms })
}

/// Counts even-dominant representatives of a list of points.
fn count_reps(
    sys: &RootSystem,
    cfg: &ChamberConfig,
    pts: impl ParallelIterator<Item = Weight>,
) -> BTreeMap<Weight, usize> {
    pts.fold(BTreeMap::new, |mut acc: BTreeMap<Weight, usize>, p| {
        *acc.entry(even_dominant_point(sys, cfg, &p)).or_default() += 1;
        acc
    })
    .reduce(BTreeMap::new, |mut a, b| {
        for (k, v) in b {
            *a.entry(k).or_default() += v;
        }
        a
    })
}

/// [`count_reps`] over all sums p + q computed on integer points scaled by
/// the common denominator. `None` on overflow.
fn count_sums_scaled(
    sys: &RootSystem,
    cfg: &ChamberConfig,
    a: &[Weight],
    b: &[Weight],
) -> Option<BTreeMap<Weight, usize>> {
    let all: Vec<Rational> = a.iter().chain(b).flatten().cloned().collect();
    let (flat, d) = scale_to_integers(&all)?;
    let n = sys.rank();
    let (sa, sb) = flat.split_at(a.len() * n);
    let counts = sa
        .par_chunks(n)
        .map(|p| {
            let mut acc: BTreeMap<(Vec<i64>, bool), usize> = BTreeMap::new();
            for q in sb.chunks(n) {
                let mut s: Vec<i64> = p.iter().zip(q).map(|(x, y)| x.checked_add(*y)).collect::<Option<_>>()?;
                let flip = even_dominant_scaled(sys, &mut s)?;
                *acc.entry((s, flip)).or_default() += 1;
            }
            Some(acc)
        })
        .try_reduce(BTreeMap::new, |mut x, y| {
            for (k, v) in y {
                *x.entry(k).or_default() += v;
            }
            Some(x)
        })?;
    let mut out = BTreeMap::new();
    for ((p, flip), count) in counts {
        let w = unscale(&p, d);
        *out.entry(if flip { cfg.reflect(&w) } else { w }).or_default() += count;
    }
    Some(out)
}

/// Decomposes O_e(λ) ⊗ O_e(μ) = {p + q} into W_e-orbits by brute force.
pub fn product_decompose(
    sys: &RootSystem,
    cfg: &ChamberConfig,
    lambda: &[Rational],
    mu: &[Rational],
) -> Result<OrbitDecomposition> {
    sys.check_rank(lambda)?;
    sys.check_rank(mu)?;
    let a = we_orbit_points(sys, lambda);
    let b = we_orbit_points(sys, mu);
    if let Some(counts) = count_sums_scaled(sys, cfg, &a, &b) {
        return group_points(sys, counts);
    }
    let sums = a.par_iter().flat_map_iter(|p| b.iter().map(move |q| p.iter().zip(q).map(|(x, y)| x + y).collect()));
    let counts = count_reps(sys, cfg, sums);
    group_points(sys, counts)
}

/// How a system is restricted to a subsystem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BranchRule {
    /// A_n → A_{n−1} (drop the last orthogonal coordinate) and
    /// B_n → B_{n−1}, C_n → C_{n−1}, D_n → D_{n−1} (drop the first).
    CoordinateDrop,
    /// A full-rank subsystem given by its simple roots in α-coordinates.
    EqualRank { simple_roots: Vec<Vec<i64>> },
}

/// A branching result together with the subsystem it refers to.
#[derive(Debug, Clone)]
pub struct Branching {
    pub subsystem: RootSystem,
    /// Representatives are in the subsystem's ω-coordinates.
    pub decomposition: OrbitDecomposition,
}

/// The subsystem targeted by a coordinate-drop branching.
pub fn coordinate_drop_target(sys: &RootSystem) -> Result<RootSystem> {
    let n = sys.rank();
    let bad = || Error::UnsupportedBranch(format!("no coordinate-drop rule for {}", sys.name()));
    match sys.series() {
        Some(s @ (Series::A | Series::B | Series::C | Series::D)) => {
            let min = match s {
                Series::A => 2,
                Series::D => 4,
                _ => 3,
            };
            if n < min {
                return Err(bad());
            }
            RootSystem::classical(s, n - 1).map_err(|_| bad())
        }
        _ => Err(bad()),
    }
}

/// Decomposes O_e(λ) into W_e-orbits of a subsystem.
pub fn branch_decompose(sys: &RootSystem, lambda: &[Rational], rule: &BranchRule) -> Result<Branching> {
    sys.check_rank(lambda)?;
    match rule {
        BranchRule::CoordinateDrop => branch_coordinate_drop(sys, lambda),
        BranchRule::EqualRank { simple_roots } => branch_equal_rank(sys, lambda, simple_roots),
    }
}

fn branch_coordinate_drop(sys: &RootSystem, lambda: &[Rational]) -> Result<Branching> {
    let sub = coordinate_drop_target(sys)?;
    let sub_cfg = ChamberConfig::new(&sub);
    let drop_last = sys.series() == Some(Series::A);
    let points = we_orbit_points(sys, lambda);
    let projected = points
        .par_iter()
        .map(|p| {
            let mut x = sys.basis_convert(p, Basis::Omega, Basis::Orthogonal)?;
            if drop_last {
                x.pop();
            } else {
                x.remove(0);
            }
            sub.basis_convert(&x, Basis::Orthogonal, Basis::Omega)
        })
        .collect::<Result<Vec<Weight>>>()?;
    let counts = count_reps(&sub, &sub_cfg, projected.into_par_iter());
    let decomposition = group_points(&sub, counts)?;
    Ok(Branching { subsystem: sub, decomposition })
}

fn branch_equal_rank(sys: &RootSystem, lambda: &[Rational], roots: &[Vec<i64>]) -> Result<Branching> {
    let n = sys.rank();
    if roots.len() != n {
        return Err(Error::UnsupportedBranch(format!(
            "equal-rank subsystem needs {n} simple roots, got {}",
            roots.len()
        )));
    }
    let all_roots: HashSet<Vec<i64>> =
        sys.positive_roots().iter().flat_map(|r| [r.clone(), r.iter().map(|v| -v).collect()]).collect();
    for r in roots {
        if r.len() != n || !all_roots.contains(r) {
            return Err(Error::UnsupportedBranch(format!("{r:?} is not a root")));
        }
    }
    // ⟨α_a, α_b⟩ = M_ab n_b / 2.
    let gram = |x: &[i64], y: &[i64]| -> Rational {
        let mut acc = Rational::zero();
        for a in 0..n {
            for b in 0..n {
                if x[a] != 0 && y[b] != 0 {
                    acc += q(x[a] * y[b] * sys.cartan()[a][b]) * &sys.root_norms()[b] / q(2);
                }
            }
        }
        acc
    };
    let mut cartan = vec![vec![0i64; n]; n];
    for j in 0..n {
        for k in 0..n {
            let v = q(2) * gram(&roots[j], &roots[k]) / gram(&roots[k], &roots[k]);
            if !v.is_integer() {
                return Err(Error::UnsupportedBranch("roots do not form a simple system".into()));
            }
            cartan[j][k] =
                v.to_integer().try_into().map_err(|_| Error::UnsupportedBranch("bad Cartan entry".into()))?;
        }
    }
    let sub = RootSystem::build(&DiagramSpec::Cartan(cartan))
        .map_err(|e| Error::UnsupportedBranch(format!("roots do not form a simple system: {e}")))?;
    let sub_cfg = ChamberConfig::new(&sub);
    // Subsystem ω-coordinates of x are ⟨x, β_j∨⟩ = Σ_k x_k c_jk.
    let coroot_coeffs: Vec<Weight> = roots
        .iter()
        .map(|r| {
            let norm = sys.root_norm(r);
            r.iter().zip(sys.root_norms()).map(|(&b, nb)| q(b) * nb / &norm).collect()
        })
        .collect();
    let to_sub = |x: &[Rational]| -> Weight {
        coroot_coeffs.iter().map(|c| x.iter().zip(c).map(|(a, b)| a * b).sum()).collect()
    };
    let points = we_orbit_points(sys, lambda);
    let projected: Vec<Weight> = points.par_iter().map(|p| to_sub(p)).collect();
    let counts = count_reps(&sub, &sub_cfg, projected.into_par_iter());
    let decomposition = group_points(&sub, counts)?;
    Ok(Branching { subsystem: sub, decomposition })
}

/// True when λ lies in D_+ ∪ r_α D_+ and is the canonical even-dominant
/// representative of its W_e-orbit.
pub fn is_canonical_rep(sys: &RootSystem, cfg: &ChamberConfig, lambda: &[Rational]) -> bool {
    even_dominant_point(sys, cfg, lambda) == lambda
}

/// Dominant representative of the W-orbit.
pub fn dominant_rep(sys: &RootSystem, x: &[Rational]) -> Weight {
    dominant_reduce(sys, x).point
}
