//! Weyl groups, even Weyl groups and chamber reductions.
//!
//! Group elements are integer matrices acting on ω-coordinate column vectors.
//! A simple reflection acts as `(r_i x)_k = x_k − x_i M_ik`.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rootsystem::RootSystem;
use crate::scalar::{q, Coord, Rational, Weight};

/// Default cap on the number of group elements materialized by [`generate`].
pub const DEFAULT_GROUP_CAP: usize = 500_000;

/// Default cap on the rank accepted by [`generate`].
pub const DEFAULT_RANK_CAP: usize = 8;

/// Default step cap for [`affine_reduce`].
pub const DEFAULT_AFFINE_STEPS: usize = 100_000;

/// One Weyl group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    /// Row-major n×n matrix acting on ω-coordinate columns.
    pub matrix: Vec<Vec<i64>>,
    /// Determinant, ±1.
    pub det: i8,
    /// Generator indices (0-based) with `w = r_{word[0]} r_{word[1]} ⋯`.
    pub word: Vec<usize>,
}

impl GroupElement {
    pub fn identity(n: usize) -> Self {
        GroupElement {
            matrix: (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect(),
            det: 1,
            word: Vec::new(),
        }
    }

    pub fn is_even(&self) -> bool {
        self.det == 1
    }

    /// Matrix product `self · other` (apply `other` first).
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let n = self.matrix.len();
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| self.matrix[i][k] * other.matrix[k][j]).sum()).collect())
            .collect();
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        GroupElement { matrix, det: self.det * other.det, word }
    }

    /// Image of an exact ω-coordinate vector.
    pub fn apply(&self, x: &[Rational]) -> Weight {
        self.matrix
            .iter()
            .map(|row| {
                let mut acc = <Rational as Zero>::zero();
                for (&m, v) in row.iter().zip(x) {
                    if m != 0 && !v.is_zero() {
                        acc += q(m) * v;
                    }
                }
                acc
            })
            .collect()
    }

    /// Image of a floating-point ω-coordinate vector.
    pub fn apply_f64(&self, x: &[f64]) -> Vec<f64> {
        self.matrix.iter().map(|row| row.iter().zip(x).map(|(&m, v)| m as f64 * v).sum()).collect()
    }
}

/// A fully enumerated Weyl group.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    pub elements: Vec<GroupElement>,
    pub generators: Vec<GroupElement>,
    /// Indices into `elements` of the elements with determinant +1.
    pub even_indices: Vec<usize>,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
    pub fn even_order(&self) -> usize {
        self.even_indices.len()
    }
    pub fn even_elements(&self) -> impl Iterator<Item = &GroupElement> {
        self.even_indices.iter().map(move |&i| &self.elements[i])
    }
}

/// Choice of the positive root α used to form the even chambers
/// `D_+^e = D_+ ∪ r_α D_+` and `F_e = F̄ ∪ r_α F̄`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberConfig {
    /// The split root in α-coordinates.
    pub split_root: Vec<i64>,
    /// α∨ in ω-dual form: ⟨x, α∨⟩ = Σ_k x_k c_k for ω-coordinates x.
    coroot_coeffs: Weight,
    /// α in ω-coordinates.
    root_omega: Weight,
}

impl ChamberConfig {
    /// The default choice α = α_1.
    pub fn new(sys: &RootSystem) -> Self {
        let mut root = vec![0; sys.rank()];
        root[0] = 1;
        Self::with_split_root(sys, &root).expect("simple root is positive")
    }

    /// Uses the given positive root (α-coordinates) as the split root.
    pub fn with_split_root(sys: &RootSystem, root: &[i64]) -> Result<Self> {
        if !sys.positive_roots().iter().any(|r| r == root) {
            return Err(Error::InvalidArgument(format!("{root:?} is not a positive root")));
        }
        let norm = sys.root_norm(root);
        let coroot_coeffs = root.iter().zip(sys.root_norms()).map(|(&b, n)| q(b) * n / &norm).collect();
        Ok(ChamberConfig { split_root: root.to_vec(), coroot_coeffs, root_omega: sys.root_to_omega(root) })
    }

    /// Uses the positive root with the given 0-based index in
    /// [`RootSystem::positive_roots`].
    pub fn with_root_index(sys: &RootSystem, index: usize) -> Result<Self> {
        let root = sys
            .positive_roots()
            .get(index)
            .ok_or(Error::IndexOutOfRange { index: index + 1, max: sys.positive_roots().len() })?
            .clone();
        Self::with_split_root(sys, &root)
    }

    /// ⟨x, α∨⟩ for ω-coordinates x.
    pub fn coroot_pairing(&self, x: &[Rational]) -> Rational {
        x.iter().zip(&self.coroot_coeffs).map(|(a, b)| a * b).sum()
    }

    /// r_α x = x − ⟨x, α∨⟩ α.
    pub fn reflect(&self, x: &[Rational]) -> Weight {
        let c = self.coroot_pairing(x);
        x.iter().zip(&self.root_omega).map(|(a, r)| a - &c * r).collect()
    }

    /// r_α on any coordinate type.
    pub fn reflect_coord<C: Coord>(&self, x: &[C]) -> Vec<C> {
        let mut c = C::coord_zero();
        for (a, b) in x.iter().zip(&self.coroot_coeffs) {
            c = c.add(&a.mul(&C::from_rational(b)));
        }
        x.iter().zip(&self.root_omega).map(|(a, r)| a.sub(&c.mul(&C::from_rational(r)))).collect()
    }

    /// r_α as a group element.
    pub fn reflection_element(&self, sys: &RootSystem) -> GroupElement {
        let n = sys.rank();
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![<Rational as Zero>::zero(); n];
            e[j] = <Rational as One>::one();
            cols.push(self.reflect(&e));
        }
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| cols[j][i].to_integer().try_into().expect("integral reflection")).collect())
            .collect();
        let word = reflection_word(sys, &self.split_root);
        GroupElement { matrix, det: -1, word }
    }
}

/// A word for the reflection in a positive root: conjugate a simple
/// reflection by the reduction of the root to a simple root.
fn reflection_word(sys: &RootSystem, root: &[i64]) -> Vec<usize> {
    let n = sys.rank();
    let m = sys.cartan();
    let mut b = root.to_vec();
    let mut path = Vec::new();
    loop {
        if let Some(i) = (0..n).find(|&i| b.iter().enumerate().all(|(j, &v)| v == i64::from(i == j))) {
            let mut word: Vec<usize> = path.clone();
            word.push(i);
            word.extend(path.iter().rev());
            return word;
        }
        // Lower the height with some simple reflection.
        let i = (0..n)
            .find(|&i| (0..n).map(|j| b[j] * m[j][i]).sum::<i64>() > 0)
            .expect("non-simple positive root has a descent");
        let c: i64 = (0..n).map(|j| b[j] * m[j][i]).sum();
        b[i] -= c;
        path.push(i);
    }
}

/// Simple reflection r_i for a 1-based index `i`.
pub fn reflection_matrix(sys: &RootSystem, i: usize) -> Result<GroupElement> {
    let n = sys.rank();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let i = i - 1;
    let m = sys.cartan();
    let matrix =
        (0..n).map(|k| (0..n).map(|j| i64::from(k == j) - if j == i { m[i][k] } else { 0 }).collect()).collect();
    Ok(GroupElement { matrix, det: -1, word: vec![i] })
}

/// Applies r_i (0-based) to an exact ω-vector in place.
pub(crate) fn reflect_simple(sys: &RootSystem, x: &mut [Rational], i: usize) {
    let xi = x[i].clone();
    if xi.is_zero() {
        return;
    }
    for (k, v) in x.iter_mut().enumerate() {
        let mik = sys.cartan()[i][k];
        if mik != 0 {
            *v -= &xi * q(mik);
        }
    }
}

/// Enumerates W by breadth-first closure with the default caps.
pub fn generate(sys: &RootSystem) -> Result<WeylGroup> {
    generate_with_cap(sys, DEFAULT_RANK_CAP, DEFAULT_GROUP_CAP)
}

/// Enumerates W by breadth-first closure, so every element carries a shortest
/// word.
pub fn generate_with_cap(sys: &RootSystem, rank_cap: usize, element_cap: usize) -> Result<WeylGroup> {
    let n = sys.rank();
    if n > rank_cap {
        return Err(Error::RankTooLarge { rank: n, max: rank_cap });
    }
    let generators: Vec<GroupElement> = (1..=n).map(|i| reflection_matrix(sys, i)).collect::<Result<_>>()?;
    let id = GroupElement::identity(n);
    let mut index: HashMap<Vec<Vec<i64>>, usize> = HashMap::from([(id.matrix.clone(), 0)]);
    let mut elements = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(e) = queue.pop_front() {
        for g in &generators {
            let next = g.compose(&elements[e]);
            if index.contains_key(&next.matrix) {
                continue;
            }
            if elements.len() >= element_cap {
                return Err(Error::GroupTooLarge { cap: element_cap });
            }
            index.insert(next.matrix.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(next);
        }
    }
    let even_indices = (0..elements.len()).filter(|&i| elements[i].det == 1).collect();
    Ok(WeylGroup { elements, generators, even_indices })
}

/// Result of a chamber reduction that tracks only the word.
#[derive(Debug, Clone)]
pub(crate) struct Reduced {
    pub point: Weight,
    /// Reflections applied, in order of application.
    pub applied: Vec<usize>,
}

/// [`dominant_reduce`] on d·x in machine integers, where d is the common
/// denominator. Simple reflections have integer Cartan entries, so the
/// scaled point stays integral. Returns `None` when anything overflows.
fn dominant_reduce_scaled(sys: &RootSystem, x: &[Rational]) -> Option<Reduced> {
    let (mut p, d) = scale_to_integers(x)?;
    let mut applied = Vec::new();
    while let Some(i) = p.iter().position(|&v| v < 0) {
        reflect_simple_scaled(sys, &mut p, i)?;
        applied.push(i);
    }
    Some(Reduced { point: unscale(&p, d), applied })
}

/// Reduces a scaled integer point to D_+ in place and reports whether the
/// even-dominant representative is its r_α image (odd word, no zero
/// coordinate). `None` on overflow.
pub(crate) fn even_dominant_scaled(sys: &RootSystem, p: &mut [i64]) -> Option<bool> {
    let mut odd = false;
    while let Some(i) = p.iter().position(|&v| v < 0) {
        reflect_simple_scaled(sys, p, i)?;
        odd = !odd;
    }
    Some(odd && p.iter().all(|&v| v != 0))
}

/// Writes x as p/d with integer p and the least common denominator d.
pub(crate) fn scale_to_integers(x: &[Rational]) -> Option<(Vec<i64>, i64)> {
    let mut d: i64 = 1;
    for v in x {
        let den = v.denom().to_i64()?;
        d = d.checked_mul(den / num_integer::gcd(d, den))?;
    }
    let p = x.iter().map(|v| (v.numer() * BigInt::from(d / v.denom().to_i64()?)).to_i64()).collect::<Option<_>>()?;
    Some((p, d))
}

/// The exact point p/d.
pub(crate) fn unscale(p: &[i64], d: i64) -> Weight {
    p.iter().map(|&v| Rational::new(v.into(), d.into())).collect()
}

/// [`reflect_simple`] on a scaled integer point; `None` on overflow.
pub(crate) fn reflect_simple_scaled(sys: &RootSystem, p: &mut [i64], i: usize) -> Option<()> {
    let xi = p[i];
    for (k, &mik) in sys.cartan()[i].iter().enumerate() {
        if mik != 0 {
            p[k] = p[k].checked_sub(xi.checked_mul(mik)?)?;
        }
    }
    Some(())
}

/// Reduces to the dominant chamber by repeatedly reflecting at the smallest
/// index with a negative coordinate.
pub(crate) fn dominant_reduce(sys: &RootSystem, x: &[Rational]) -> Reduced {
    if let Some(r) = dominant_reduce_scaled(sys, x) {
        return r;
    }
    let mut p = x.to_vec();
    let mut applied = Vec::new();
    while let Some(i) = p.iter().position(|v| v.is_negative()) {
        reflect_simple(sys, &mut p, i);
        applied.push(i);
    }
    Reduced { point: p, applied }
}

/// Builds the group element for a sequence of applied simple reflections.
fn element_from_applied(sys: &RootSystem, applied: &[usize]) -> GroupElement {
    let mut w = GroupElement::identity(sys.rank());
    for &i in applied {
        let r = reflection_matrix(sys, i + 1).expect("valid index");
        w = r.compose(&w);
    }
    w
}

/// Returns the dominant representative x* and w with w·x = x*.
pub fn reduce_to_dominant(sys: &RootSystem, x: &[Rational]) -> Result<(Weight, GroupElement)> {
    sys.check_rank(x)?;
    let r = dominant_reduce(sys, x);
    Ok((r.point, element_from_applied(sys, &r.applied)))
}

/// The even-dominant representative of `x`, without the group element.
pub fn even_dominant_point(sys: &RootSystem, cfg: &ChamberConfig, x: &[Rational]) -> Weight {
    let r = dominant_reduce(sys, x);
    if r.applied.len() % 2 == 0 || r.point.iter().any(|v| v.is_zero()) {
        r.point
    } else {
        cfg.reflect(&r.point)
    }
}

/// Returns x* ∈ D_+ ∪ r_α D_+ and an even w with w·x = x*. Points whose
/// W-orbit meets a wall of D_+ are represented by their D_+ copy.
pub fn reduce_to_even_dominant(
    sys: &RootSystem,
    cfg: &ChamberConfig,
    x: &[Rational],
) -> Result<(Weight, GroupElement)> {
    sys.check_rank(x)?;
    let r = dominant_reduce(sys, x);
    let w = element_from_applied(sys, &r.applied);
    if w.is_even() {
        return Ok((r.point, w));
    }
    if let Some(i) = r.point.iter().position(|v| v.is_zero()) {
        let ri = reflection_matrix(sys, i + 1)?;
        return Ok((r.point, ri.compose(&w)));
    }
    let ra = cfg.reflection_element(sys);
    Ok((cfg.reflect(&r.point), ra.compose(&w)))
}

/// True when x ∈ D_+ ∪ r_α D_+.
pub fn is_even_dominant(sys: &RootSystem, cfg: &ChamberConfig, x: &[Rational]) -> bool {
    let _ = sys;
    x.iter().all(|v| !v.is_negative()) || cfg.reflect(x).iter().all(|v| !v.is_negative())
}

/// Precomputed data for reductions into the affine fundamental domain.
struct AffineData {
    /// ω → α∨ coordinates: c = x · T.
    to_coroot: Vec<Vec<Rational>>,
    /// α∨_j in ω-coordinates.
    coroots: Vec<Weight>,
    /// Highest root ξ in ω-coordinates (ξ∨ = ξ).
    xi: Weight,
}

impl AffineData {
    fn new(sys: &RootSystem) -> Self {
        let n = sys.rank();
        let inv = sys.cartan_inverse();
        let norms = sys.root_norms();
        let to_coroot = (0..n).map(|j| (0..n).map(|k| &inv[j][k] * &norms[k] / q(2)).collect()).collect();
        let coroots = (0..n).map(|j| sys.coroot_omega(j)).collect();
        AffineData { to_coroot, coroots, xi: sys.highest_root_omega() }
    }
}

/// Reduces a point into F̄ = {x_i ≥ 0, Σ q_k x_k ≤ 1} by a translation in Q∨
/// followed by reflections in violated walls (including the affine wall r_0).
/// With `even`, the result lies in F̄ ∪ r_α F̄ and is reached by an even
/// affine element.
pub fn affine_reduce<C: Coord>(sys: &RootSystem, cfg: &ChamberConfig, x: &[C], even: bool) -> Result<Vec<C>> {
    affine_reduce_with_steps(sys, cfg, x, even, DEFAULT_AFFINE_STEPS)
}

/// [`affine_reduce`] with an explicit step cap.
pub fn affine_reduce_with_steps<C: Coord>(
    sys: &RootSystem,
    cfg: &ChamberConfig,
    x: &[C],
    even: bool,
    max_steps: usize,
) -> Result<Vec<C>> {
    sys.require_irreducible()?;
    if x.len() != sys.rank() {
        return Err(Error::RankMismatch { expected: sys.rank(), got: x.len() });
    }
    let data = AffineData::new(sys);
    let n = sys.rank();
    let tol = C::wall_tolerance();
    let neg_tol = C::coord_zero().sub(&tol);
    let cm: Vec<C> = sys.comarks().iter().map(|&v| C::from_rational(&q(v))).collect();
    let xi: Vec<C> = data.xi.iter().map(C::from_rational).collect();
    let cartan: Vec<Vec<C>> =
        sys.cartan().iter().map(|r| r.iter().map(|&v| C::from_rational(&q(v))).collect()).collect();

    // Translate into the fundamental parallelepiped of Q∨.
    let mut p: Vec<C> = x.to_vec();
    for j in 0..n {
        let mut c = C::coord_zero();
        for k in 0..n {
            c = c.add(&x[k].mul(&C::from_rational(&data.to_coroot[k][j])));
        }
        let f = c.floor();
        for k in 0..n {
            p[k] = p[k].sub(&f.mul(&C::from_rational(&data.coroots[j][k])));
        }
    }

    let level = |p: &[C]| p.iter().zip(&cm).fold(C::coord_zero(), |acc, (a, b)| acc.add(&a.mul(b)));
    let one = C::coord_one();
    let mut odd = false;
    let mut steps = 0usize;
    loop {
        for v in p.iter_mut() {
            if v.magnitude() <= tol {
                *v = C::coord_zero();
            }
        }
        if let Some(i) = p.iter().position(|v| *v < neg_tol) {
            let xi_i = p[i].clone();
            for k in 0..n {
                p[k] = p[k].sub(&xi_i.mul(&cartan[i][k]));
            }
            odd = !odd;
        } else {
            let l = level(&p);
            if l > one.add(&tol) {
                let shift = l.sub(&one);
                for k in 0..n {
                    p[k] = p[k].sub(&shift.mul(&xi[k]));
                }
                odd = !odd;
            } else {
                break;
            }
        }
        steps += 1;
        if steps > max_steps {
            return Err(Error::NonConvergence { steps: max_steps });
        }
    }
    if even && odd {
        let on_wall = p.iter().any(|v| v.magnitude() <= tol) || level(&p).sub(&one).magnitude() <= tol;
        if !on_wall {
            p = cfg.reflect_coord(&p);
        }
    }
    Ok(p)
}

/// True when x ∈ F̄ (exact).
pub fn in_fundamental_domain(sys: &RootSystem, x: &[Rational]) -> bool {
    let level: Rational = x.iter().zip(sys.comarks()).map(|(a, &b)| a * q(b)).sum();
    x.iter().all(|v| !v.is_negative()) && level <= <Rational as One>::one()
}
