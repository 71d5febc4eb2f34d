//! Functions symmetrized over even permutation groups and over W_e:
//! separable products, symmetric orthogonal polynomials and symmetrized
//! Hermite polynomials.

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::efunctions::{complex_sum, permutations_with_parity, Family, OrbitSum};
use crate::error::{Error, Result};
use crate::rootsystem::{Basis, RootSystem, Series};
use crate::scalar::{rational_to_f64, to_real, Rational};
use crate::transforms::tm_classes;
use crate::weylgroup::ChamberConfig;

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence
/// H_{k+1} = 2x H_k − 2k H_{k−1}.
pub fn hermite(n: usize, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * x);
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// H_n(x) = n! Σ_{m ≤ n/2} (−1)^m (2x)^{n−2m} / (m! (n−2m)!), summed directly.
pub fn hermite_series(n: usize, x: f64) -> f64 {
    let fact = |k: usize| (1..=k).map(|v| v as f64).product::<f64>();
    let mut acc = 0.0;
    for m in 0..=n / 2 {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * (2.0 * x).powi((n - 2 * m) as i32) / (fact(m) * fact(n - 2 * m));
    }
    fact(n) * acc
}

/// Hermite polynomials normalized against the weight e^{−x²}:
/// ∫ p_m p_k e^{−x²} dx = δ_mk.
pub fn hermite_orthonormal(n: usize, x: f64) -> f64 {
    // Recurrence on the normalized family avoids the factorial.
    let c0 = std::f64::consts::PI.powf(-0.25);
    let (mut prev, mut cur) = (c0, c0 * std::f64::consts::SQRT_2 * x);
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Nodes and weights of a quadrature rule.
#[derive(Debug, Clone, PartialEq)]
pub struct Quadrature {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Quadrature {
    /// Σ w_i f(x_i).
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

/// Gauss rule from the Jacobi matrix with diagonal `a`, off-diagonal `b`
/// and total mass `mu0` (Golub–Welsch).
fn golub_welsch(a: &[f64], b: &[f64], mu0: f64) -> Quadrature {
    use nalgebra::DMatrix;
    let n = a.len();
    let mut j = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        j[(i, i)] = a[i];
        if i + 1 < n {
            j[(i, i + 1)] = b[i];
            j[(i + 1, i)] = b[i];
        }
    }
    let eig = j.symmetric_eigen();
    let mut pairs: Vec<(f64, f64)> =
        (0..n).map(|k| (eig.eigenvalues[k], mu0 * eig.eigenvectors[(0, k)].powi(2))).collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    Quadrature { nodes: pairs.iter().map(|p| p.0).collect(), weights: pairs.iter().map(|p| p.1).collect() }
}

/// k-point Gauss–Hermite rule for the weight e^{−x²}.
pub fn gauss_hermite(k: usize) -> Quadrature {
    let a = vec![0.0; k];
    let b: Vec<f64> = (1..k).map(|i| (i as f64 / 2.0).sqrt()).collect();
    golub_welsch(&a, &b, std::f64::consts::PI.sqrt())
}

/// k-point Gauss–Legendre rule on [lo, hi].
pub fn gauss_legendre(k: usize, lo: f64, hi: f64) -> Quadrature {
    let a = vec![0.0; k];
    let b: Vec<f64> = (1..k).map(|i| i as f64 / ((4 * i * i - 1) as f64).sqrt()).collect();
    let base = golub_welsch(&a, &b, 2.0);
    let half = (hi - lo) / 2.0;
    let mid = (hi + lo) / 2.0;
    Quadrature {
        nodes: base.nodes.iter().map(|x| mid + half * x).collect(),
        weights: base.weights.iter().map(|w| w * half).collect(),
    }
}

type Evaluator = dyn Fn(usize, f64) -> f64 + Send + Sync;

/// A family of one-variable functions u_m(x), with an optional quadrature
/// rule for its orthogonality measure.
#[derive(Clone)]
pub struct SeparableFamily {
    evaluator: Arc<Evaluator>,
    /// Largest admissible index, if bounded.
    pub max_index: Option<usize>,
    /// Quadrature rule for the orthogonality measure, if any.
    pub measure: Option<Quadrature>,
}

impl std::fmt::Debug for SeparableFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SeparableFamily").field("max_index", &self.max_index).finish_non_exhaustive()
    }
}

impl SeparableFamily {
    pub fn new(evaluator: impl Fn(usize, f64) -> f64 + Send + Sync + 'static, max_index: Option<usize>) -> Self {
        SeparableFamily { evaluator: Arc::new(evaluator), max_index, measure: None }
    }

    /// Attaches the quadrature rule of the orthogonality measure.
    pub fn with_measure(mut self, q: Quadrature) -> Self {
        self.measure = Some(q);
        self
    }

    /// Orthonormal Hermite polynomials with a Gauss–Hermite rule exact up to
    /// degree 2·`points` − 1.
    pub fn hermite(points: usize) -> Self {
        Self::new(hermite_orthonormal, None).with_measure(gauss_hermite(points))
    }

    /// The constant function 1 at every index.
    pub fn constant() -> Self {
        Self::new(|_, _| 1.0, None)
    }

    pub fn eval(&self, index: usize, x: f64) -> Result<f64> {
        if let Some(max) = self.max_index {
            if index > max {
                return Err(Error::IndexOutOfRange { index, max });
            }
        }
        Ok((self.evaluator)(index, x))
    }
}

/// Distinct images of m under even permutations, one per coset of S_m.
pub fn even_coset_images(m: &[usize]) -> Vec<Vec<usize>> {
    let images: BTreeSet<Vec<usize>> = permutations_with_parity(m.len())
        .into_iter()
        .filter(|(_, even)| *even)
        .map(|(p, _)| p.iter().map(|&i| m[i]).collect())
        .collect();
    images.into_iter().collect()
}

/// p^sym_m(x) = Σ over even-coset representatives w of Π_i p_{m_{w(i)}}(x_i).
pub fn sym_poly_eval(family: &SeparableFamily, m: &[usize], x: &[f64]) -> Result<f64> {
    if m.len() != x.len() {
        return Err(Error::RankMismatch { expected: m.len(), got: x.len() });
    }
    if m.len() < 2 {
        return Err(Error::InvalidArgument("at least two variables are required".into()));
    }
    let mut acc = 0.0;
    for image in even_coset_images(m) {
        let mut term = 1.0;
        for (&k, &xi) in image.iter().zip(x) {
            term *= family.eval(k, xi)?;
        }
        acc += term;
    }
    Ok(acc)
}

/// 𝓗_m(λ) = Σ_{w ∈ S^e_n} Π_i H_{m_i}(λ_{w(i)}).
pub fn sym_hermite_eval(m: &[usize], lambda: &[f64]) -> Result<f64> {
    if m.len() != lambda.len() {
        return Err(Error::RankMismatch { expected: m.len(), got: lambda.len() });
    }
    let mut acc = 0.0;
    for (p, even) in permutations_with_parity(m.len()) {
        if even {
            acc += m.iter().zip(&p).map(|(&mi, &pi)| hermite(mi, lambda[pi])).product::<f64>();
        }
    }
    Ok(acc)
}

/// ∫_{−8}^{8} e^{2πipx} e^{−πp²} H_m(√(2π) p) dp by Gauss–Legendre quadrature.
pub fn hermite_fourier_transform(m: usize, x: f64) -> Complex64 {
    static RULE: OnceLock<Quadrature> = OnceLock::new();
    let rule = RULE.get_or_init(|| gauss_legendre(200, -8.0, 8.0));
    let s = (2.0 * std::f64::consts::PI).sqrt();
    complex_sum(rule.nodes.iter().zip(&rule.weights).map(|(&p, &w)| {
        let amp = w * (-std::f64::consts::PI * p * p).exp() * hermite(m, s * p);
        Complex64::from_polar(amp, 2.0 * std::f64::consts::PI * p * x)
    }))
}

/// i^m e^{−πx²} H_m(√(2π) x), the closed form of [`hermite_fourier_transform`].
pub fn hermite_fourier_expected(m: usize, x: f64) -> Complex64 {
    let im = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0), Complex64::new(-1.0, 0.0), Complex64::new(0.0, -1.0)];
    im[m % 4] * (-std::f64::consts::PI * x * x).exp() * hermite(m, (2.0 * std::f64::consts::PI).sqrt() * x)
}

/// A quadrature value with its estimated error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: Complex64,
    pub error: f64,
}

/// Coordinates at which the separable factors are evaluated: orthogonal
/// coordinates for series A–D, ω-coordinates otherwise.
fn separable_coords(sys: &RootSystem, x: &[Rational]) -> Result<Vec<f64>> {
    match sys.series() {
        Some(Series::A | Series::B | Series::C | Series::D) => {
            Ok(to_real(&sys.basis_convert(x, Basis::Omega, Basis::Orthogonal)?))
        }
        _ => Ok(x.iter().map(rational_to_f64).collect()),
    }
}

fn symmetrize_at(
    sys: &RootSystem,
    cfg: &ChamberConfig,
    u: &SeparableFamily,
    indices: &[usize],
    e: &OrbitSum,
    m: u64,
) -> Result<Complex64> {
    let classes = tm_classes(sys, cfg, m)?;
    let scale = (m as f64).powi(sys.rank() as i32);
    let terms: Vec<Complex64> = classes
        .par_iter()
        .map(|c| {
            let y = separable_coords(sys, &c.rep)?;
            let mut prod = 1.0;
            for (&k, &yi) in indices.iter().zip(&y) {
                prod *= u.eval(k, yi)?;
            }
            Ok(e.eval_exact::<f64>(&c.rep) * prod / (scale * c.even_stabilizer as f64))
        })
        .collect::<Result<_>>()?;
    Ok(complex_sum(terms))
}

/// Quadrature of ∫_{F̄_e} u_{i_1}(y_1)⋯u_{i_n}(y_n) E_λ(x) dx under the torus
/// normalization |T| = 1, so |F̄_e| = 1/|W_e|. The rule sums one point per
/// W_e-class of T_m with weight 1/(mⁿ |W^e_s|); the returned value is the
/// 2m result and the error estimate is |v_2m − v_m| / 3.
pub fn symmetrize_separable(
    sys: &RootSystem,
    cfg: &ChamberConfig,
    u: &SeparableFamily,
    indices: &[usize],
    lambda: &[Rational],
    m: u64,
) -> Result<Estimate> {
    let dim = match sys.series() {
        Some(Series::A | Series::B | Series::C | Series::D) => sys.orthogonal_dim()?,
        _ => sys.rank(),
    };
    if indices.len() != dim {
        return Err(Error::RankMismatch { expected: dim, got: indices.len() });
    }
    let e = OrbitSum::new(sys, cfg, Family::E, lambda)?;
    let coarse = symmetrize_at(sys, cfg, u, indices, &e, m)?;
    let fine = symmetrize_at(sys, cfg, u, indices, &e, 2 * m)?;
    Ok(Estimate { value: fine, error: (fine - coarse).norm() / 3.0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_hermite_values() {
        for x in [-1.3, 0.0, 0.4, 2.2] {
            assert_eq!(hermite(0, x), 1.0);
            assert_eq!(hermite(1, x), 2.0 * x);
            assert!((hermite(2, x) - (4.0 * x * x - 2.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn gauss_hermite_integrates_polynomials() {
        let g = gauss_hermite(6);
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert!((g.integrate(|_| 1.0) - sqrt_pi).abs() < 1e-12);
        assert!((g.integrate(|x| x * x) - sqrt_pi / 2.0).abs() < 1e-12);
    }

    #[test]
    fn two_variable_sym_poly_is_a_product() {
        let f = SeparableFamily::hermite(8);
        let v = sym_poly_eval(&f, &[2, 1], &[0.3, -0.7]).unwrap();
        assert!((v - hermite_orthonormal(2, 0.3) * hermite_orthonormal(1, -0.7)).abs() < 1e-14);
    }

    #[test]
    fn bounded_family_rejects_large_index() {
        let f = SeparableFamily::new(|k, x| x.powi(k as i32), Some(2));
        assert!(matches!(sym_poly_eval(&f, &[3, 0], &[0.1, 0.2]), Err(Error::IndexOutOfRange { .. })));
    }
}
