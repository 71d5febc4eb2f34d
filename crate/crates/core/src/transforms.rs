//! Sampling grids, discrete inner products and the finite E-orbit transform.
//!
//! The torus group T_m = (1/m)Q∨/Q∨ is stored as the points
//! `Σ (d_i/m) α_i∨` with digits `0 ≤ d_i < m`, ordered lexicographically by
//! digits. For an integral weight μ the phase at digit vector d is
//! `exp(2πi Σ μ_i d_i / m)`, so sums over T_m of integral E-functions use only
//! integer arithmetic and a table of m-th roots of unity.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Mutex;

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::efunctions::{complex_sum, Family, OrbitSum};
use crate::error::{Error, Result};
use crate::orbits::we_orbit_points;
use crate::rootsystem::{Basis, DiagramSpec, RootSystem};
use crate::scalar::{format_weight, is_integral, q, qf, Rational, Weight};
use crate::weylgroup::{affine_reduce, even_dominant_point, ChamberConfig};

/// Default cap on the number of grid points materialized.
pub const DEFAULT_GRID_CAP: u128 = 4_000_000;

/// The points of T_m in ω-coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridTm {
    pub m: u64,
    pub points: Vec<Weight>,
}

/// One point of an F-domain grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridPoint {
    /// ω-coordinates.
    pub omega: Weight,
    /// ω∨-coordinates (the s_i/M of the grid definition).
    pub coweight: Weight,
    /// Order of the stabilizer of the point in the affine Weyl group.
    pub stabilizer: u128,
    /// Order of the stabilizer in the even affine Weyl group.
    pub even_stabilizer: u128,
}

/// The grid F_M, or F^e_M = F_M ∪ r_α F_M when `even` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridFM {
    pub big_m: u64,
    pub even: bool,
    /// Points sorted by ω∨-coordinates.
    pub points: Vec<GridPoint>,
}

/// One coefficient of a finite expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct Coefficient {
    pub lambda: Weight,
    pub value: Complex64,
}

fn grid_size(sys: &RootSystem, m: u64, cap: u128) -> Result<usize> {
    if m == 0 {
        return Err(Error::InvalidArgument("resolution must be at least 1".into()));
    }
    let points = (m as u128).checked_pow(sys.rank() as u32).unwrap_or(u128::MAX);
    if points > cap {
        return Err(Error::GridTooLarge { points, cap });
    }
    Ok(points as usize)
}

/// Digit vector of the k-th point of T_m.
pub fn tm_digits(n: usize, m: u64, mut k: usize) -> Vec<u64> {
    let mut d = vec![0; n];
    for i in (0..n).rev() {
        d[i] = k as u64 % m;
        k /= m as usize;
    }
    d
}

/// Enumerates T_m with the default point cap.
pub fn grid_tm(sys: &RootSystem, m: u64) -> Result<GridTm> {
    grid_tm_with_cap(sys, m, DEFAULT_GRID_CAP)
}

/// Enumerates T_m, refusing grids above `cap` points.
pub fn grid_tm_with_cap(sys: &RootSystem, m: u64, cap: u128) -> Result<GridTm> {
    let size = grid_size(sys, m, cap)?;
    let n = sys.rank();
    let coroots: Vec<Weight> = (0..n).map(|i| sys.coroot_omega(i)).collect();
    let points = (0..size)
        .into_par_iter()
        .map(|k| {
            let d = tm_digits(n, m, k);
            (0..n).map(|j| (0..n).map(|i| qf(d[i] as i64, m as i64) * &coroots[i][j]).sum()).collect()
        })
        .collect();
    Ok(GridTm { m, points })
}

/// Index in grid order of an exact point of (1/m)Q∨, taken modulo Q∨.
pub fn tm_index(sys: &RootSystem, m: u64, x: &[Rational]) -> Result<usize> {
    let c = sys.basis_convert(x, Basis::Omega, Basis::Coroot)?;
    let mut k = 0usize;
    for v in c {
        let d = v * q(m as i64);
        if !d.is_integer() {
            return Err(Error::InvalidArgument(format!("{} is not a point of T_{m}", format_weight(x))));
        }
        let d = d.to_integer().to_i64().expect("small digit").rem_euclid(m as i64) as usize;
        k = k * m as usize + d;
    }
    Ok(k)
}

/// Orders sample values along T_m. Every grid point must occur exactly once
/// (modulo Q∨).
pub fn align_samples(sys: &RootSystem, m: u64, samples: &[(Weight, Complex64)]) -> Result<Vec<Complex64>> {
    let size = grid_size(sys, m, DEFAULT_GRID_CAP)?;
    let mut out: Vec<Option<Complex64>> = vec![None; size];
    for (x, v) in samples {
        let k = tm_index(sys, m, x)?;
        if out[k].replace(*v).is_some() {
            return Err(Error::InvalidArgument(format!("duplicate sample at {}", format_weight(x))));
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(k, v)| {
            v.ok_or_else(|| {
                Error::InvalidArgument(format!("missing sample for T_{m} digits {:?}", tm_digits(sys.rank(), m, k)))
            })
        })
        .collect()
}

/// Orders of reflection subgroups generated by walls of the affine
/// fundamental simplex, from the extended Cartan matrix.
pub struct AffineStabilizers {
    extended: Vec<Vec<i64>>,
    comarks: Vec<Rational>,
    cache: Mutex<HashMap<Vec<usize>, u128>>,
}

impl AffineStabilizers {
    pub fn new(sys: &RootSystem) -> Result<Self> {
        sys.require_irreducible()?;
        let n = sys.rank();
        let xi = sys.highest_root_omega();
        let mut extended = vec![vec![0i64; n + 1]; n + 1];
        extended[0][0] = 2;
        for j in 0..n {
            // ⟨α_0, α_j∨⟩ = −ξ_j and ⟨α_j, α_0∨⟩ = −⟨α_j, ξ⟩ since ⟨ξ, ξ⟩ = 2.
            extended[0][j + 1] = -xi[j].to_integer().to_i64().expect("small");
            let v = -(&xi[j] * &sys.root_norms()[j] / q(2));
            extended[j + 1][0] = v.to_integer().to_i64().expect("integral extended entry");
            for k in 0..n {
                extended[j + 1][k + 1] = sys.cartan()[j][k];
            }
        }
        Ok(AffineStabilizers {
            extended,
            comarks: sys.comarks().iter().map(|&v| q(v)).collect(),
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// The extended Cartan matrix, with the affine node at index 0.
    pub fn extended_cartan(&self) -> &[Vec<i64>] {
        &self.extended
    }

    /// Walls of F̄ containing x (0 is the affine wall). x must lie in F̄.
    pub fn walls(&self, x: &[Rational]) -> Vec<usize> {
        let level: Rational = x.iter().zip(&self.comarks).map(|(a, b)| a * b).sum();
        let mut walls = Vec::new();
        if level.is_one() {
            walls.push(0);
        }
        walls.extend(x.iter().enumerate().filter(|(_, v)| v.is_zero()).map(|(i, _)| i + 1));
        walls
    }

    /// Order of the group generated by reflections in the given walls.
    pub fn order_of_walls(&self, walls: &[usize]) -> Result<u128> {
        if walls.is_empty() {
            return Ok(1);
        }
        if let Some(&v) = self.cache.lock().expect("cache lock").get(walls) {
            return Ok(v);
        }
        let sub: Vec<Vec<i64>> = walls.iter().map(|&i| walls.iter().map(|&j| self.extended[i][j]).collect()).collect();
        let order = RootSystem::build(&DiagramSpec::Cartan(sub))?.weyl_order()?;
        self.cache.lock().expect("cache lock").insert(walls.to_vec(), order);
        Ok(order)
    }

    /// Stabilizer order in the affine Weyl group of a point of F̄.
    pub fn stabilizer(&self, x: &[Rational]) -> Result<u128> {
        self.order_of_walls(&self.walls(x))
    }
}

/// Halves a nontrivial reflection-group order: its even part.
pub fn even_part(order: u128) -> u128 {
    if order > 1 {
        order / 2
    } else {
        1
    }
}

/// Enumerates F_M (or F^e_M), with exact coordinates and stabilizers.
pub fn grid_fm(sys: &RootSystem, cfg: &ChamberConfig, big_m: u64, even: bool) -> Result<GridFM> {
    sys.require_irreducible()?;
    if big_m == 0 {
        return Err(Error::InvalidArgument("M must be at least 1".into()));
    }
    let n = sys.rank();
    let marks = sys.marks();
    let stab = AffineStabilizers::new(sys)?;
    let mut raw: Vec<Vec<u64>> = Vec::new();
    let mut s = vec![0u64; n];
    enumerate_compositions(marks, big_m, 0, &mut s, &mut raw);
    let to_omega = |y: &[Rational]| -> Weight { y.iter().zip(sys.root_norms()).map(|(v, nv)| v * q(2) / nv).collect() };
    let to_coweight =
        |x: &[Rational]| -> Weight { x.iter().zip(sys.root_norms()).map(|(v, nv)| v * nv / q(2)).collect() };
    let mut omegas: BTreeSet<Weight> = BTreeSet::new();
    for s in &raw {
        let y: Weight = s.iter().map(|&v| qf(v as i64, big_m as i64)).collect();
        let x = to_omega(&y);
        if even {
            omegas.insert(cfg.reflect(&x));
        }
        omegas.insert(x);
    }
    let mut points: Vec<GridPoint> = omegas
        .into_iter()
        .map(|x| {
            let base = if crate::weylgroup::in_fundamental_domain(sys, &x) { x.clone() } else { cfg.reflect(&x) };
            let order = stab.stabilizer(&base)?;
            Ok(GridPoint { coweight: to_coweight(&x), omega: x, stabilizer: order, even_stabilizer: even_part(order) })
        })
        .collect::<Result<_>>()?;
    points.sort_by(|a, b| a.coweight.cmp(&b.coweight));
    Ok(GridFM { big_m, even, points })
}

fn enumerate_compositions(marks: &[i64], budget: u64, i: usize, s: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if i == marks.len() {
        out.push(s.clone());
        return;
    }
    let mark = marks[i] as u64;
    let mut v = 0;
    while v * mark <= budget {
        s[i] = v;
        enumerate_compositions(marks, budget - v * mark, i + 1, s, out);
        v += 1;
    }
    s[i] = 0;
}

/// A W_e-class of T_m points with its canonical representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TmClass {
    /// Canonical point of F̄ ∪ r_α F̄.
    pub rep: Weight,
    /// Grid index of the first member.
    pub first_index: usize,
    /// Number of T_m points in the class.
    pub size: usize,
    /// Stabilizer order in the even affine Weyl group, from the walls.
    pub even_stabilizer: u128,
}

/// Partitions T_m into W_e-classes by exact affine reduction.
pub fn tm_classes(sys: &RootSystem, cfg: &ChamberConfig, m: u64) -> Result<Vec<TmClass>> {
    let grid = grid_tm(sys, m)?;
    let stab = AffineStabilizers::new(sys)?;
    let reps: Vec<Weight> = grid.points.par_iter().map(|x| affine_reduce(sys, cfg, x, true)).collect::<Result<_>>()?;
    let mut classes: BTreeMap<Weight, (usize, usize)> = BTreeMap::new();
    for (k, r) in reps.into_iter().enumerate() {
        classes.entry(r).and_modify(|e| e.1 += 1).or_insert((k, 1));
    }
    classes
        .into_iter()
        .map(|(rep, (first_index, size))| {
            let base = if crate::weylgroup::in_fundamental_domain(sys, &rep) { rep.clone() } else { cfg.reflect(&rep) };
            let even_stabilizer = even_part(stab.stabilizer(&base)?);
            Ok(TmClass { rep, first_index, size, even_stabilizer })
        })
        .collect()
}

/// Σ_x f(x) conj(g(x)) over T_m, in grid order.
pub fn tm_inner(f: &[Complex64], g: &[Complex64]) -> Complex64 {
    complex_sum(f.iter().zip(g).map(|(a, b)| a * b.conj()))
}

/// Integer ω-coordinates of an integral weight.
fn integral_coords(lambda: &[Rational]) -> Result<Vec<i64>> {
    if !is_integral(lambda) {
        return Err(Error::InvalidArgument(format!("{} is not an integral weight", format_weight(lambda))));
    }
    Ok(lambda.iter().map(|v| v.to_integer().to_i64().expect("small weight")).collect())
}

/// Values on T_m of `Σ_μ c_μ exp(2πi⟨μ,x⟩)` over the W_e-orbit of an
/// integral λ, with coefficient `scale` on every term.
fn orbit_values_on_tm(sys: &RootSystem, m: u64, lambda: &[Rational], scale: f64) -> Result<Vec<Complex64>> {
    let size = grid_size(sys, m, DEFAULT_GRID_CAP)?;
    integral_coords(lambda)?;
    let n = sys.rank();
    let points: Vec<Vec<i64>> =
        we_orbit_points(sys, lambda).iter().map(|p| integral_coords(p)).collect::<Result<_>>()?;
    let roots: Vec<Complex64> = (0..m).map(|k| crate::efunctions::unit_phase(k as f64 / m as f64)).collect();
    let mi = m as i64;
    Ok((0..size)
        .into_par_iter()
        .map(|k| {
            let d = tm_digits(n, m, k);
            complex_sum(points.iter().map(|p| {
                let t: i64 = p.iter().zip(&d).map(|(a, &b)| a * b as i64).sum();
                roots[t.rem_euclid(mi) as usize] * scale
            }))
        })
        .collect())
}

/// E_λ on T_m in grid order, for integral λ.
pub fn e_on_tm(sys: &RootSystem, m: u64, lambda: &[Rational]) -> Result<Vec<Complex64>> {
    orbit_values_on_tm(sys, m, lambda, 1.0)
}

/// Checks that T_m separates the W_e-orbits of the given integral weights:
/// no two distinct orbit points are congruent modulo m in ω-coordinates.
pub fn check_separation(sys: &RootSystem, m: u64, spectrum: &[Weight]) -> Result<()> {
    let mut seen: HashMap<Vec<i64>, (usize, Vec<i64>)> = HashMap::new();
    let mi = m as i64;
    for (idx, lambda) in spectrum.iter().enumerate() {
        sys.check_rank(lambda)?;
        for p in we_orbit_points(sys, lambda) {
            let p = integral_coords(&p)?;
            let key: Vec<i64> = p.iter().map(|v| v.rem_euclid(mi)).collect();
            if let Some((other, q_pt)) = seen.get(&key) {
                if *q_pt != p || *other != idx {
                    return Err(Error::OrbitsNotSeparated {
                        first: format_weight(&spectrum[*other]),
                        second: format_weight(lambda),
                        m,
                    });
                }
            } else {
                seen.insert(key, (idx, p));
            }
        }
    }
    Ok(())
}

/// Largest M bound on the default spectrum search.
const SPECTRUM_SEARCH_LIMIT: u64 = 256;

/// Integral weights Ξ_M = {Σ s_i ω_i : Σ s_i m_i ≤ M} together with r_α Ξ_M,
/// as canonical even-dominant representatives, sorted.
pub fn spectrum_for(sys: &RootSystem, cfg: &ChamberConfig, big_m: u64) -> Vec<Weight> {
    let mut raw = Vec::new();
    let mut s = vec![0; sys.rank()];
    enumerate_compositions(sys.marks(), big_m, 0, &mut s, &mut raw);
    let mut out: BTreeSet<Weight> = BTreeSet::new();
    for s in raw {
        let x: Weight = s.iter().map(|&v| q(v as i64)).collect();
        out.insert(even_dominant_point(sys, cfg, &cfg.reflect(&x)));
        out.insert(even_dominant_point(sys, cfg, &x));
    }
    out.into_iter().collect()
}

/// The automatic spectrum: Ξ_M ∪ r_α Ξ_M for the largest M whose orbits T_m
/// still separates.
pub fn spectrum_auto(sys: &RootSystem, cfg: &ChamberConfig, m: u64) -> Result<Vec<Weight>> {
    sys.require_irreducible()?;
    let mut best = spectrum_for(sys, cfg, 0);
    for big_m in 1..=SPECTRUM_SEARCH_LIMIT {
        let candidate = spectrum_for(sys, cfg, big_m);
        if check_separation(sys, m, &candidate).is_err() {
            break;
        }
        best = candidate;
    }
    Ok(best)
}

fn expect_grid_len(sys: &RootSystem, m: u64, values: &[Complex64]) -> Result<usize> {
    let size = grid_size(sys, m, DEFAULT_GRID_CAP)?;
    if values.len() != size {
        return Err(Error::InvalidArgument(format!("expected {size} samples on T_{m}, got {}", values.len())));
    }
    Ok(size)
}

/// Finite transform: a_λ = (m^n |O_e(λ)|)⁻¹ Σ_{x∈T_m} f(x) conj E_λ(x).
pub fn analyze(sys: &RootSystem, m: u64, values: &[Complex64], spectrum: &[Weight]) -> Result<Vec<Coefficient>> {
    let size = expect_grid_len(sys, m, values)?;
    check_separation(sys, m, spectrum)?;
    spectrum
        .par_iter()
        .map(|lambda| {
            let e = e_on_tm(sys, m, lambda)?;
            let orbit = we_orbit_points(sys, lambda).len();
            let value = tm_inner(values, &e) / (size as f64 * orbit as f64);
            Ok(Coefficient { lambda: lambda.clone(), value })
        })
        .collect()
}

/// The same coefficients from one representative per W_e-class:
/// a_λ = m⁻ⁿ |W^e_λ| Σ_s |W^e_s|⁻¹ f(s) conj E_λ(s).
pub fn analyze_fdomain(
    sys: &RootSystem,
    cfg: &ChamberConfig,
    m: u64,
    values: &[Complex64],
    spectrum: &[Weight],
) -> Result<Vec<Coefficient>> {
    let size = expect_grid_len(sys, m, values)?;
    check_separation(sys, m, spectrum)?;
    let classes = tm_classes(sys, cfg, m)?;
    let even_order = sys.even_weyl_order()?;
    spectrum
        .par_iter()
        .map(|lambda| {
            let e = OrbitSum::new(sys, cfg, Family::E, lambda)?;
            let stab = even_order / e.len() as u128;
            let sum = complex_sum(
                classes
                    .iter()
                    .map(|c| values[c.first_index] * e.eval_exact::<f64>(&c.rep).conj() / c.even_stabilizer as f64),
            );
            Ok(Coefficient { lambda: lambda.clone(), value: sum * stab as f64 / size as f64 })
        })
        .collect()
}

/// f(x) = Σ a_λ E_λ(x) at floating-point ω-coordinate points.
pub fn synthesize(
    sys: &RootSystem,
    cfg: &ChamberConfig,
    coeffs: &[Coefficient],
    points: &[Vec<f64>],
) -> Result<Vec<Complex64>> {
    let sums: Vec<OrbitSum> =
        coeffs.iter().map(|c| OrbitSum::new(sys, cfg, Family::E, &c.lambda)).collect::<Result<_>>()?;
    points
        .par_iter()
        .map(|x| {
            if x.len() != sys.rank() {
                return Err(Error::RankMismatch { expected: sys.rank(), got: x.len() });
            }
            Ok(complex_sum(sums.iter().zip(coeffs).map(|(s, c)| c.value * s.eval_f64(x))))
        })
        .collect()
}

/// f(x) = Σ a_λ E_λ(x) at exact points, with exactly reduced phases.
pub fn synthesize_exact(
    sys: &RootSystem,
    cfg: &ChamberConfig,
    coeffs: &[Coefficient],
    points: &[Weight],
) -> Result<Vec<Complex64>> {
    let sums: Vec<OrbitSum> =
        coeffs.iter().map(|c| OrbitSum::new(sys, cfg, Family::E, &c.lambda)).collect::<Result<_>>()?;
    points
        .par_iter()
        .map(|x| {
            sys.check_rank(x)?;
            Ok(complex_sum(sums.iter().zip(coeffs).map(|(s, c)| c.value * s.eval_exact::<f64>(x))))
        })
        .collect()
}

/// Σ a_λ E_λ on T_m in grid order, for integral λ.
pub fn synthesize_tm(sys: &RootSystem, m: u64, coeffs: &[Coefficient]) -> Result<Vec<Complex64>> {
    let size = grid_size(sys, m, DEFAULT_GRID_CAP)?;
    let columns: Vec<Vec<Complex64>> = coeffs.par_iter().map(|c| e_on_tm(sys, m, &c.lambda)).collect::<Result<_>>()?;
    Ok((0..size).map(|k| complex_sum(columns.iter().zip(coeffs).map(|(col, c)| c.value * col[k]))).collect())
}

/// Fourier-series coefficient c_λ = |W_e|⁻¹ m⁻ⁿ Σ_{x∈T_m} f(x) Ê_λ(x), the
/// torus-sum realization of the integral over F̄_e. Reconstruction is
/// f = Σ c_λ conj E_λ.
pub fn fourier_series_coeff(sys: &RootSystem, m: u64, values: &[Complex64], lambda: &[Rational]) -> Result<Complex64> {
    let size = expect_grid_len(sys, m, values)?;
    sys.check_rank(lambda)?;
    if check_separation(sys, m, &[lambda.to_vec()]).is_err() {
        return Err(Error::BandLimitExceeded { lambda: format_weight(lambda), m });
    }
    let even_order = sys.even_weyl_order()? as f64;
    let orbit = we_orbit_points(sys, lambda).len() as f64;
    let stab = even_order / orbit;
    let ehat = orbit_values_on_tm(sys, m, lambda, stab)?;
    let sum = complex_sum(values.iter().zip(&ehat).map(|(f, e)| f * e));
    Ok(sum / (even_order * size as f64))
}

/// Samples an exact-point function on T_m in grid order.
pub fn sample_tm<F>(sys: &RootSystem, m: u64, f: F) -> Result<Vec<Complex64>>
where
    F: Fn(&[Rational]) -> Complex64 + Sync,
{
    let grid = grid_tm(sys, m)?;
    Ok(grid.points.par_iter().map(|x| f(x)).collect())
}

/// Result of a least-squares fit of coefficients to arbitrary sample points.
#[derive(Debug, Clone)]
pub struct LeastSquaresFit {
    pub coefficients: Vec<Coefficient>,
    /// Numerical rank of the sampling matrix.
    pub rank: usize,
    /// True when the sampling matrix is square and of full rank.
    pub exact: bool,
}

/// Fits f ≈ Σ a_λ E_λ on arbitrary exact points by SVD least squares. This
/// covers square sampling on F^e_M, whose invertibility is not guaranteed.
pub fn fit_least_squares(
    sys: &RootSystem,
    cfg: &ChamberConfig,
    points: &[Weight],
    values: &[Complex64],
    spectrum: &[Weight],
) -> Result<LeastSquaresFit> {
    use nalgebra::{Complex, DMatrix, DVector};
    if points.len() != values.len() {
        return Err(Error::InvalidArgument("points and values differ in length".into()));
    }
    let sums: Vec<OrbitSum> = spectrum.iter().map(|l| OrbitSum::new(sys, cfg, Family::E, l)).collect::<Result<_>>()?;
    let a = DMatrix::from_fn(points.len(), spectrum.len(), |i, j| {
        let v = sums[j].eval_exact::<f64>(&points[i]);
        Complex::new(v.re, v.im)
    });
    let b = DVector::from_iterator(values.len(), values.iter().map(|v| Complex::new(v.re, v.im)));
    let svd = a.svd(true, true);
    let tol = 1e-10 * svd.singular_values.max().max(1.0);
    let rank = svd.rank(tol);
    let x = svd.solve(&b, tol).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let coefficients = spectrum
        .iter()
        .zip(x.iter())
        .map(|(l, v)| Coefficient { lambda: l.clone(), value: Complex64::new(v.re, v.im) })
        .collect();
    Ok(LeastSquaresFit { coefficients, rank, exact: rank == spectrum.len() && points.len() == spectrum.len() })
}

/// True when every coordinate of the weight is non-negative.
pub fn is_dominant(x: &[Rational]) -> bool {
    x.iter().all(|v| !v.is_negative())
}
