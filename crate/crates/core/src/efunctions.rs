//! E-, C- and S-orbit functions and their analytic checks.
//!
//! An orbit function is a finite sum `Σ c_μ exp(2πi⟨μ, x⟩)` over orbit points
//! μ. [`OrbitSum`] stores the covectors μS once, so repeated evaluation costs
//! one dot product per term. Terms are kept in sorted point order and
//! accumulated with compensated summation, so values are reproducible to the
//! last bit regardless of how callers parallelize.

use std::str::FromStr;

use num_complex::Complex;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::orbits::{signed_orbit, w_orbit, we_orbit_points};
use crate::rootsystem::{Basis, RootSystem, Series};
use crate::scalar::{format_weight, q, to_real, Rational, Real, Weight};
use crate::weylgroup::ChamberConfig;

/// Which orbit sum to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Σ over O_e(λ).
    E,
    /// Σ over all w ∈ W_e, i.e. |W^e_λ| E_λ.
    EHat,
    /// Σ over O(λ).
    C,
    /// Σ over all w ∈ W, i.e. |W_λ| φ_λ.
    CHat,
    /// Σ over W of det w · exp(2πi⟨wλ, x⟩), λ strictly dominant.
    S,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "e" => Ok(Family::E),
            "e-hat" | "ehat" => Ok(Family::EHat),
            "c" => Ok(Family::C),
            "c-hat" | "chat" => Ok(Family::CHat),
            "s" => Ok(Family::S),
            _ => Err(Error::InvalidArgument(format!("unknown family `{s}`"))),
        }
    }
}

/// Neumaier-compensated accumulator.
#[derive(Debug, Clone, Copy)]
pub struct CompensatedSum<T> {
    sum: T,
    carry: T,
}

impl<T: Real> CompensatedSum<T> {
    pub fn new() -> Self {
        CompensatedSum { sum: T::zero(), carry: T::zero() }
    }
    pub fn add(&mut self, v: T) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.carry = self.carry + ((self.sum - t) + v);
        } else {
            self.carry = self.carry + ((v - t) + self.sum);
        }
        self.sum = t;
    }
    pub fn value(&self) -> T {
        self.sum + self.carry
    }
}

impl<T: Real> Default for CompensatedSum<T> {
    fn default() -> Self {
        Self::new()
    }
}

/// Compensated sum of complex values.
pub fn complex_sum<T: Real>(values: impl IntoIterator<Item = Complex<T>>) -> Complex<T> {
    let mut re = CompensatedSum::new();
    let mut im = CompensatedSum::new();
    for v in values {
        re.add(v.re);
        im.add(v.im);
    }
    Complex::new(re.value(), im.value())
}

/// exp(2πi t) after reducing t modulo 1, which keeps the trigonometric
/// argument small.
pub fn unit_phase<T: Real>(t: T) -> Complex<T> {
    let frac = t - t.round();
    let a = T::TAU() * frac;
    Complex::new(a.cos(), a.sin())
}

/// exp(2πi t) for an exact rational, reducing modulo 1 exactly.
pub fn unit_phase_exact<T: Real>(t: &Rational) -> Complex<T> {
    let frac = t - t.floor();
    unit_phase(T::from_rational(&frac))
}

/// A precomputed orbit sum `Σ c_μ exp(2πi⟨μ, x⟩)`.
#[derive(Debug, Clone)]
pub struct OrbitSum {
    /// Orbit points in ω-coordinates, sorted.
    pub points: Vec<Weight>,
    /// Covectors μS, so ⟨μ, x⟩ = Σ_k (μS)_k x_k.
    covectors: Vec<Weight>,
    covectors_f64: Vec<Vec<f64>>,
    coefficients: Vec<i64>,
}

impl OrbitSum {
    /// Builds the sum for one family and weight.
    /// The chamber choice does not affect the value: orbits are independent
    /// of the split root.
    pub fn new(sys: &RootSystem, _cfg: &ChamberConfig, family: Family, lambda: &[Rational]) -> Result<Self> {
        sys.check_rank(lambda)?;
        let (points, coefficients): (Vec<Weight>, Vec<i64>) = match family {
            Family::E | Family::EHat => {
                let pts = we_orbit_points(sys, lambda);
                let c = if family == Family::EHat { (sys.even_weyl_order()? / pts.len() as u128) as i64 } else { 1 };
                let n = pts.len();
                (pts, vec![c; n])
            }
            Family::C | Family::CHat => {
                let pts = w_orbit(sys, lambda)?;
                let c = if family == Family::CHat { (sys.weyl_order()? / pts.len() as u128) as i64 } else { 1 };
                let n = pts.len();
                (pts, vec![c; n])
            }
            Family::S => {
                let s = signed_orbit(sys, lambda)?;
                let mut terms: Vec<(Weight, i64)> =
                    s.plus.into_iter().map(|p| (p, 1)).chain(s.minus.into_iter().map(|p| (p, -1))).collect();
                terms.sort();
                terms.into_iter().unzip()
            }
        };
        Ok(Self::from_terms(sys, points, coefficients))
    }

    /// A sum with explicit points and integer coefficients.
    pub fn from_terms(sys: &RootSystem, points: Vec<Weight>, coefficients: Vec<i64>) -> Self {
        let covectors: Vec<Weight> = points.iter().map(|p| sys.covector(p)).collect();
        let covectors_f64 = covectors.iter().map(|c| to_real::<f64>(c)).collect();
        OrbitSum { points, covectors, covectors_f64, coefficients }
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Value at a floating-point point in ω-coordinates.
    pub fn eval<T: Real>(&self, x: &[T]) -> Complex<T> {
        complex_sum(self.covectors.iter().zip(&self.coefficients).map(|(c, &k)| {
            let mut t = CompensatedSum::new();
            for (ci, xi) in c.iter().zip(x) {
                t.add(T::from_rational(ci) * *xi);
            }
            unit_phase(t.value()) * T::from_i64(k).expect("small coefficient")
        }))
    }

    /// Value at a double-precision point, using cached float covectors.
    pub fn eval_f64(&self, x: &[f64]) -> Complex<f64> {
        complex_sum(self.covectors_f64.iter().zip(&self.coefficients).map(|(c, &k)| {
            let mut t = CompensatedSum::new();
            for (ci, xi) in c.iter().zip(x) {
                t.add(ci * xi);
            }
            unit_phase(t.value()) * k as f64
        }))
    }

    /// Value at an exact point; the phases are reduced exactly.
    pub fn eval_exact<T: Real>(&self, x: &[Rational]) -> Complex<T> {
        complex_sum(self.covectors.iter().zip(&self.coefficients).map(|(c, &k)| {
            let t: Rational = c.iter().zip(x).map(|(a, b)| a * b).sum();
            unit_phase_exact::<T>(&t) * T::from_i64(k).expect("small coefficient")
        }))
    }
}

/// Evaluates an orbit function at a floating-point ω-coordinate point.
pub fn eval<T: Real>(
    sys: &RootSystem,
    cfg: &ChamberConfig,
    family: Family,
    lambda: &[Rational],
    x: &[T],
) -> Result<Complex<T>> {
    if x.len() != sys.rank() {
        return Err(Error::RankMismatch { expected: sys.rank(), got: x.len() });
    }
    Ok(OrbitSum::new(sys, cfg, family, lambda)?.eval(x))
}

/// Evaluates an orbit function at an exact ω-coordinate point.
pub fn eval_exact<T: Real>(
    sys: &RootSystem,
    cfg: &ChamberConfig,
    family: Family,
    lambda: &[Rational],
    x: &[Rational],
) -> Result<Complex<T>> {
    sys.check_rank(x)?;
    Ok(OrbitSum::new(sys, cfg, family, lambda)?.eval_exact(x))
}

/// Matrix of the linear map taking `from`-coordinates to ω-coordinates.
/// Row k holds the ω-image of the k-th unit vector.
pub fn conversion_matrix(sys: &RootSystem, from: Basis) -> Result<Vec<Weight>> {
    let dim = if from == Basis::Orthogonal { sys.orthogonal_dim()? } else { sys.rank() };
    (0..dim)
        .map(|k| {
            let e: Weight = (0..dim).map(|j| if j == k { q(1) } else { Rational::zero() }).collect();
            sys.basis_convert(&e, from, Basis::Omega)
        })
        .collect()
}

/// Converts a floating-point point to ω-coordinates.
pub fn point_to_omega<T: Real>(sys: &RootSystem, x: &[T], from: Basis) -> Result<Vec<T>> {
    let m = conversion_matrix(sys, from)?;
    if x.len() != m.len() {
        return Err(Error::RankMismatch { expected: m.len(), got: x.len() });
    }
    Ok((0..sys.rank())
        .map(|j| {
            let mut acc = CompensatedSum::new();
            for (row, xi) in m.iter().zip(x) {
                acc.add(T::from_rational(&row[j]) * *xi);
            }
            acc.value()
        })
        .collect())
}

/// Which half of the determinant expansion to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetPart {
    /// Even permutations.
    Plus,
    /// Odd permutations, with their sign −1 included.
    Minus,
}

/// Largest A_n rank accepted by [`eval_detsplit_an`].
pub const DETSPLIT_MAX_RANK: usize = 6;

/// One half of det(exp(2πi m_i x_j)) for A_n in orthogonal coordinates.
/// The plus part equals E_λ(x) for strictly dominant λ, and
/// plus + minus is the full antisymmetric sum.
pub fn eval_detsplit_an<T: Real>(sys: &RootSystem, m: &[T], x: &[T], part: DetPart) -> Result<Complex<T>> {
    if sys.series() != Some(Series::A) {
        return Err(Error::UnsupportedSeries(format!("determinant split needs series A, got {}", sys.name())));
    }
    let n = sys.rank();
    if n > DETSPLIT_MAX_RANK {
        return Err(Error::RankTooLarge { rank: n, max: DETSPLIT_MAX_RANK });
    }
    for v in [m, x] {
        if v.len() != n + 1 {
            return Err(Error::RankMismatch { expected: n + 1, got: v.len() });
        }
    }
    let want_even = part == DetPart::Plus;
    let terms = permutations_with_parity(n + 1).into_iter().filter(|(_, even)| *even == want_even).map(|(p, _)| {
        let mut t = CompensatedSum::new();
        for (i, &pi) in p.iter().enumerate() {
            t.add(m[i] * x[pi]);
        }
        let v = unit_phase(t.value());
        if want_even {
            v
        } else {
            -v
        }
    });
    Ok(complex_sum(terms))
}

/// All permutations of 0..k with a flag telling whether each is even.
pub fn permutations_with_parity(k: usize) -> Vec<(Vec<usize>, bool)> {
    use itertools::Itertools;
    (0..k)
        .permutations(k)
        .map(|p| {
            let inversions = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            (p, inversions % 2 == 0)
        })
        .collect()
}

/// −4π²⟨λ, λ⟩, the eigenvalue of the Laplacian on E_λ.
pub fn laplacian_eigenvalue(sys: &RootSystem, lambda: &[Rational]) -> Result<f64> {
    let n2 = sys.scalar_product(lambda, lambda)?;
    Ok(-4.0 * std::f64::consts::PI.powi(2) * crate::scalar::rational_to_f64(&n2))
}

/// Default finite-difference step.
pub const DEFAULT_LAPLACIAN_STEP: f64 = 1e-4;

/// Fourth-order second derivative of `f` at `x` along `v`.
fn second_directional<F>(f: &F, x: &[f64], v: &[f64], h: f64) -> Complex<f64>
where
    F: Fn(&[f64]) -> Complex<f64>,
{
    let at = |s: f64| -> Complex<f64> {
        let p: Vec<f64> = x.iter().zip(v).map(|(a, b)| a + s * h * b).collect();
        f(&p)
    };
    (-at(2.0) + at(1.0) * 16.0 - at(0.0) * 30.0 + at(-1.0) * 16.0 - at(-2.0)) / (12.0 * h * h)
}

/// Lower Cholesky factor of a symmetric positive definite matrix.
fn cholesky(a: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
            if i == j {
                l[i][j] = (a[i][i] - s).sqrt();
            } else {
                l[i][j] = (a[i][j] - s) / l[j][j];
            }
        }
    }
    l
}

/// Σ_ij G_ij ∂_i∂_j f at x for a symmetric positive definite G, evaluated as
/// a sum of second derivatives along the columns of its Cholesky factor.
pub fn quadratic_operator<F>(g: &[Vec<f64>], f: &F, x: &[f64], h: f64) -> Complex<f64>
where
    F: Fn(&[f64]) -> Complex<f64>,
{
    let l = cholesky(g);
    let n = g.len();
    complex_sum((0..n).map(|k| {
        let v: Vec<f64> = (0..n).map(|i| l[i][k]).collect();
        second_directional(f, x, &v, h)
    }))
}

/// S⁻¹ = D⁻¹M, the Laplacian coefficients in ω-coordinates.
pub fn omega_laplacian_matrix(sys: &RootSystem) -> Vec<Vec<f64>> {
    let n = sys.rank();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| crate::scalar::rational_to_f64(&(q(2 * sys.cartan()[i][j]) / &sys.root_norms()[i])))
                .collect()
        })
        .collect()
}

/// Finite-difference Laplacian of E_λ at an ω-coordinate point. Series A–D
/// use second differences along the orthogonal axes; the exceptional series
/// use the ω-basis operator with coefficients S⁻¹.
pub fn laplacian_e(
    sys: &RootSystem,
    cfg: &ChamberConfig,
    lambda: &[Rational],
    x: &[f64],
    h: f64,
) -> Result<Complex<f64>> {
    let e = OrbitSum::new(sys, cfg, Family::E, lambda)?;
    if x.len() != sys.rank() {
        return Err(Error::RankMismatch { expected: sys.rank(), got: x.len() });
    }
    match sys.series() {
        Some(Series::A | Series::B | Series::C | Series::D) => {
            let to_omega = conversion_matrix(sys, Basis::Orthogonal)?;
            let to_omega: Vec<Vec<f64>> = to_omega.iter().map(|r| to_real::<f64>(r)).collect();
            let kappa = crate::scalar::rational_to_f64(&sys.orthogonal_scale()?);
            let from_omega = orthogonal_matrix(sys)?;
            let dim = sys.orthogonal_dim()?;
            let y: Vec<f64> = (0..dim).map(|k| (0..sys.rank()).map(|j| from_omega[j][k] * x[j]).sum()).collect();
            let f = |p: &[f64]| {
                let w: Vec<f64> =
                    (0..sys.rank()).map(|j| p.iter().zip(&to_omega).map(|(pk, row)| pk * row[j]).sum()).collect();
                e.eval_f64(&w)
            };
            let g: Vec<Vec<f64>> =
                (0..dim).map(|i| (0..dim).map(|j| if i == j { kappa } else { 0.0 }).collect()).collect();
            Ok(quadratic_operator(&g, &f, &y, h))
        }
        _ => {
            let g = omega_laplacian_matrix(sys);
            Ok(quadratic_operator(&g, &|p: &[f64]| e.eval_f64(p), x, h))
        }
    }
}

/// Rows: orthogonal images of the ω basis vectors.
fn orthogonal_matrix(sys: &RootSystem) -> Result<Vec<Vec<f64>>> {
    (0..sys.rank())
        .map(|k| {
            let e: Weight = (0..sys.rank()).map(|j| if j == k { q(1) } else { Rational::zero() }).collect();
            Ok(to_real(&sys.basis_convert(&e, Basis::Omega, Basis::Orthogonal)?))
        })
        .collect()
}

/// |Δ_h E_λ(x) + 4π²⟨λ,λ⟩E_λ(x)|.
pub fn laplacian_residual(
    sys: &RootSystem,
    cfg: &ChamberConfig,
    lambda: &[Rational],
    x: &[f64],
    h: f64,
) -> Result<f64> {
    if h <= 0.0 {
        return Err(Error::InvalidArgument("step must be positive".into()));
    }
    let lap = laplacian_e(sys, cfg, lambda, x, h)?;
    let value = eval(sys, cfg, Family::E, lambda, x)?;
    let eig = laplacian_eigenvalue(sys, lambda)?;
    Ok((lap - value * eig).norm())
}

/// True when every coordinate is positive.
pub fn is_strictly_dominant(lambda: &[Rational]) -> bool {
    lambda.iter().all(|v| v.is_positive())
}

/// Error for S-functions at non-strictly-dominant weights.
pub fn require_strictly_dominant(lambda: &[Rational]) -> Result<()> {
    if is_strictly_dominant(lambda) {
        Ok(())
    } else {
        Err(Error::NotStrictlyDominant(format_weight(lambda)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{qf, weight};
    use std::f64::consts::PI;

    fn sys(name: &str) -> RootSystem {
        RootSystem::from_name(name).unwrap()
    }

    #[test]
    fn value_at_origin_is_orbit_size() {
        let c2 = sys("C2");
        let cfg = ChamberConfig::new(&c2);
        let v = eval(&c2, &cfg, Family::E, &weight(&[1, 0]), &[0.0, 0.0]).unwrap();
        assert_eq!(v, Complex::new(4.0, 0.0));
    }

    #[test]
    fn a1_closed_form() {
        let a1 = sys("A1");
        let cfg = ChamberConfig::new(&a1);
        for (m, theta) in [(3i64, 0.3f64), (-2, 0.71), (5, -1.2)] {
            let v = eval(&a1, &cfg, Family::E, &weight(&[m]), &[theta]).unwrap();
            let expected = Complex::new(0.0, PI * m as f64 * theta).exp();
            assert!((v - expected).norm() < 1e-13);
        }
    }

    #[test]
    fn c2_closed_form() {
        let c2 = sys("C2");
        let cfg = ChamberConfig::new(&c2);
        let a = 2.0;
        for (t1, t2) in [(0.1, 0.2), (0.37, -0.41), (1.3, 0.05)] {
            let v = eval(&c2, &cfg, Family::E, &weight(&[2, 0]), &[t1, t2]).unwrap();
            let expected = 2.0 * (PI * a * (t1 + t2)).cos() + 2.0 * (PI * a * t2).cos();
            assert!((v.re - expected).abs() < 1e-12 && v.im.abs() < 1e-12, "{v} vs {expected}");
        }
    }

    #[test]
    fn exact_and_float_evaluation_agree() {
        let g2 = sys("G2");
        let cfg = ChamberConfig::new(&g2);
        let x = vec![qf(1, 7), qf(-2, 5)];
        let a = eval_exact::<f64>(&g2, &cfg, Family::E, &weight(&[1, 2]), &x).unwrap();
        let b = eval(&g2, &cfg, Family::E, &weight(&[1, 2]), &[1.0 / 7.0, -0.4]).unwrap();
        assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn detsplit_rejects_other_series() {
        let c2 = sys("C2");
        assert!(matches!(
            eval_detsplit_an(&c2, &[0.0, 0.0], &[0.0, 0.0], DetPart::Plus),
            Err(Error::UnsupportedSeries(_))
        ));
        let a7 = sys("A7");
        let z = vec![0.0; 8];
        assert!(matches!(eval_detsplit_an(&a7, &z, &z, DetPart::Plus), Err(Error::RankTooLarge { .. })));
    }

    #[test]
    fn a3_detsplit_at_origin() {
        let a3 = sys("A3");
        let v = eval_detsplit_an(&a3, &[1.5, 0.5, -0.5, -1.5], &[0.0; 4], DetPart::Plus).unwrap();
        assert!((v - Complex::new(12.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn zero_weight_has_zero_residual() {
        let b3 = sys("B3");
        let cfg = ChamberConfig::new(&b3);
        let r = laplacian_residual(&b3, &cfg, &weight(&[0, 0, 0]), &[0.1, 0.2, 0.3], 1e-3).unwrap();
        assert!(r < 1e-9);
    }
}
