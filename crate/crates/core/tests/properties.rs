//! Property tests for the structural invariants of each module.

use std::collections::{BTreeMap, BTreeSet};

use eorbit_core::efunctions::{eval_detsplit_an, DetPart, Family, OrbitSum};
use eorbit_core::orbits::{product_decompose, signed_orbit, w_orbit, we_orbit, we_orbit_points};
use eorbit_core::scalar::{q, qf, rational_to_f64, to_real, weight};
use eorbit_core::symfunc::{hermite, hermite_series, sym_poly_eval, symmetrize_separable, SeparableFamily};
use eorbit_core::transforms::{
    analyze, analyze_fdomain, e_on_tm, fit_least_squares, fourier_series_coeff, grid_fm, sample_tm, spectrum_auto,
    synthesize_tm, tm_inner, Coefficient,
};
use eorbit_core::weylgroup::{
    affine_reduce, even_dominant_point, generate, in_fundamental_domain, is_even_dominant, reduce_to_dominant,
};
use eorbit_core::{Basis, ChamberConfig, Complex64, Rational, RootSystem, Weight};
use proptest::prelude::*;

fn system(name: &str) -> RootSystem {
    RootSystem::from_name(name).unwrap()
}

const CLASSICAL: &[&str] = &["A1", "A2", "A3", "A4", "B3", "B4", "C2", "C3", "C4", "D4"];
const ALL: &[&str] = &["A1", "A2", "A3", "A4", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4"];
const SMALL: &[&str] = &["A1", "A2", "A3", "B3", "C2", "C3", "G2"];

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| qf(n, d))
}

fn vector(n: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(rational(), n)
}

/// A system name together with a random rational vector of matching rank.
fn system_and_vector(names: &'static [&'static str]) -> impl Strategy<Value = (&'static str, Weight)> {
    prop::sample::select(names).prop_flat_map(|name| (Just(name), vector(system(name).rank())))
}

fn system_and_integral(
    names: &'static [&'static str],
    lo: i64,
    hi: i64,
) -> impl Strategy<Value = (&'static str, Weight)> {
    prop::sample::select(names)
        .prop_flat_map(move |name| (Just(name), prop::collection::vec(lo..=hi, system(name).rank())))
        .prop_map(|(name, v)| (name, weight(&v)))
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn basis_conversions_round_trip((name, v) in system_and_vector(ALL)) {
        let sys = system(name);
        for other in [Basis::Alpha, Basis::Coroot] {
            let there = sys.basis_convert(&v, Basis::Omega, other).unwrap();
            prop_assert_eq!(&sys.basis_convert(&there, other, Basis::Omega).unwrap(), &v);
            let back = sys.basis_convert(&v, other, Basis::Omega).unwrap();
            prop_assert_eq!(&sys.basis_convert(&back, Basis::Omega, other).unwrap(), &v);
        }
        if CLASSICAL.contains(&name) {
            let orth = sys.basis_convert(&v, Basis::Omega, Basis::Orthogonal).unwrap();
            prop_assert_eq!(&sys.basis_convert(&orth, Basis::Orthogonal, Basis::Omega).unwrap(), &v);
            let alpha = sys.basis_convert(&v, Basis::Omega, Basis::Alpha).unwrap();
            prop_assert_eq!(&sys.basis_convert(&alpha, Basis::Alpha, Basis::Orthogonal).unwrap(), &orth);
        }
    }

    #[test]
    fn scalar_product_matches_orthogonal_chart(
        (name, x) in system_and_vector(CLASSICAL),
        seed in prop::collection::vec(rational(), 4),
    ) {
        let sys = system(name);
        let y: Weight = seed.into_iter().take(sys.rank()).collect();
        let ox = sys.basis_convert(&x, Basis::Omega, Basis::Orthogonal).unwrap();
        let oy = sys.basis_convert(&y, Basis::Omega, Basis::Orthogonal).unwrap();
        prop_assert_eq!(ox.len(), sys.orthogonal_dim().unwrap());
        let kappa = sys.orthogonal_scale().unwrap();
        prop_assert_eq!(dot(&ox, &oy), kappa * sys.scalar_product(&x, &y).unwrap());
    }

    #[test]
    fn group_elements_preserve_the_quadratic_form(name in prop::sample::select(SMALL)) {
        let sys = system(name);
        let group = generate(&sys).unwrap();
        let n = sys.rank();
        let basis: Vec<Weight> = (0..n).map(|i| (0..n).map(|j| q(i64::from(i == j))).collect()).collect();
        for w in &group.elements {
            for (i, ei) in basis.iter().enumerate() {
                for (j, ej) in basis.iter().enumerate() {
                    let s = sys.scalar_product(&w.apply(ei), &w.apply(ej)).unwrap();
                    prop_assert_eq!(&s, &sys.quadratic_form()[i][j]);
                }
            }
        }
        prop_assert_eq!(group.even_order() * 2, group.order());
    }

    #[test]
    fn dominant_reduction_is_the_unique_dominant_orbit_point((name, x) in system_and_vector(SMALL)) {
        let sys = system(name);
        let (star, w) = reduce_to_dominant(&sys, &x).unwrap();
        prop_assert_eq!(&w.apply(&x), &star);
        let group = generate(&sys).unwrap();
        let dominant: BTreeSet<Weight> = group
            .elements
            .iter()
            .map(|g| g.apply(&x))
            .filter(|p| p.iter().all(|v| *v >= q(0)))
            .collect();
        prop_assert_eq!(dominant.len(), 1);
        prop_assert_eq!(dominant.into_iter().next().unwrap(), star);
    }

    #[test]
    fn affine_reduction_ignores_coroot_translations(
        (name, x) in system_and_vector(&["A1", "A2", "A3", "B3", "C2", "C3", "G2"]),
        shift in prop::collection::vec(-3i64..=3, 3),
        even in any::<bool>(),
    ) {
        let sys = system(name);
        let cfg = ChamberConfig::new(&sys);
        let mut moved = x.clone();
        for (i, k) in shift.iter().take(sys.rank()).enumerate() {
            for (m, c) in moved.iter_mut().zip(sys.coroot_omega(i)) {
                *m += q(*k) * c;
            }
        }
        let r = affine_reduce(&sys, &cfg, &x, even).unwrap();
        prop_assert_eq!(&affine_reduce(&sys, &cfg, &moved, even).unwrap(), &r);
        if even {
            prop_assert!(in_fundamental_domain(&sys, &r) || in_fundamental_domain(&sys, &cfg.reflect(&r)));
        } else {
            prop_assert!(in_fundamental_domain(&sys, &r));
        }
    }

    #[test]
    fn full_orbit_splits_into_two_even_orbits((name, lambda) in system_and_integral(SMALL, 1, 3)) {
        let sys = system(name);
        let cfg = ChamberConfig::new(&sys);
        let full: BTreeSet<Weight> = w_orbit(&sys, &lambda).unwrap().into_iter().collect();
        let first: BTreeSet<Weight> = we_orbit_points(&sys, &lambda).into_iter().collect();
        let second: BTreeSet<Weight> = we_orbit_points(&sys, &cfg.reflect(&lambda)).into_iter().collect();
        prop_assert!(first.is_disjoint(&second));
        prop_assert_eq!(&first.union(&second).cloned().collect::<BTreeSet<_>>(), &full);
        prop_assert_eq!(full.len() as u128, sys.weyl_order().unwrap());
        let signed = signed_orbit(&sys, &lambda).unwrap();
        prop_assert_eq!(signed.plus.into_iter().collect::<BTreeSet<_>>(), first);
        prop_assert_eq!(signed.minus.into_iter().collect::<BTreeSet<_>>(), second);
    }

    #[test]
    fn e_values_are_bounded_by_orbit_size(
        (name, lambda) in system_and_integral(SMALL, -2, 2),
        x in prop::collection::vec(-1.0f64..1.0, 3),
    ) {
        let sys = system(name);
        let cfg = ChamberConfig::new(&sys);
        let e = OrbitSum::new(&sys, &cfg, Family::E, &lambda).unwrap();
        let v = e.eval_f64(&x[..sys.rank()]);
        prop_assert!(v.norm() <= e.len() as f64 * (1.0 + 1e-12));
        prop_assert_eq!(e.len(), we_orbit(&sys, &cfg, &lambda).unwrap().len());
    }

    #[test]
    fn e_functions_are_even_and_affine_invariant(
        (name, lambda) in system_and_integral(SMALL, -2, 2),
        x in prop::collection::vec(-1.0f64..1.0, 3),
        shift in prop::collection::vec(-2i64..=2, 3),
    ) {
        let sys = system(name);
        let cfg = ChamberConfig::new(&sys);
        let n = sys.rank();
        let x = &x[..n];
        let e = OrbitSum::new(&sys, &cfg, Family::E, &lambda).unwrap();
        let base = e.eval_f64(x);
        for w in generate(&sys).unwrap().even_elements() {
            prop_assert!((e.eval_f64(&w.apply_f64(x)) - base).norm() < 1e-12 * (1.0 + e.len() as f64));
        }
        let mut moved = x.to_vec();
        for (i, k) in shift.iter().take(n).enumerate() {
            for (m, c) in moved.iter_mut().zip(sys.coroot_omega(i)) {
                *m += *k as f64 * rational_to_f64(&c);
            }
        }
        prop_assert!((e.eval_f64(&moved) - base).norm() < 1e-11 * (1.0 + e.len() as f64));
    }

    #[test]
    fn plus_half_of_the_determinant_is_e(
        rank in 1usize..=4,
        gaps in prop::collection::vec(1i64..=3, 4),
        x in prop::collection::vec(-1.0f64..1.0, 5),
    ) {
        let sys = system(&format!("A{rank}"));
        let cfg = ChamberConfig::new(&sys);
        let lambda = weight(&gaps[..rank]);
        let m: Vec<f64> = to_real(&sys.basis_convert(&lambda, Basis::Omega, Basis::Orthogonal).unwrap());
        let xo = &x[..rank + 1];
        let mean = xo.iter().sum::<f64>() / (rank + 1) as f64;
        let xo: Vec<f64> = xo.iter().map(|v| v - mean).collect();
        let xw: Vec<f64> = sys
            .basis_convert(
                &xo.iter().map(|v| Rational::from_float(*v).unwrap()).collect::<Vec<_>>(),
                Basis::Orthogonal,
                Basis::Omega,
            )
            .unwrap()
            .iter()
            .map(rational_to_f64)
            .collect();
        let plus = eval_detsplit_an(&sys, &m, &xo, DetPart::Plus).unwrap();
        let minus = eval_detsplit_an(&sys, &m, &xo, DetPart::Minus).unwrap();
        let e = OrbitSum::new(&sys, &cfg, Family::E, &lambda).unwrap().eval_f64(&xw);
        let s = OrbitSum::new(&sys, &cfg, Family::S, &lambda).unwrap().eval_f64(&xw);
        prop_assert!((plus - e).norm() < 1e-9, "{} vs {}", plus, e);
        prop_assert!((plus + minus - s).norm() < 1e-9, "{} vs {}", plus + minus, s);
    }

    #[test]
    fn sym_poly_is_even_permutation_invariant(
        n in 2usize..=4,
        m in prop::collection::vec(0usize..=3, 4),
        x in prop::collection::vec(-2.0f64..2.0, 4),
    ) {
        let family = SeparableFamily::hermite(8);
        let mut m = m[..n].to_vec();
        m.sort_unstable_by(|a, b| b.cmp(a));
        let x = &x[..n];
        let base = sym_poly_eval(&family, &m, x).unwrap();
        for (p, even) in eorbit_core::efunctions::permutations_with_parity(n) {
            if even {
                let px: Vec<f64> = p.iter().map(|&i| x[i]).collect();
                prop_assert!((sym_poly_eval(&family, &m, &px).unwrap() - base).abs() < 1e-12 * (1.0 + base.abs()));
            }
        }
    }
}

/// Canonical representatives of all W_e-orbits through points with
/// coordinates in [−bound, bound].
fn orbit_sets(sys: &RootSystem, bound: i64) -> BTreeSet<Vec<Weight>> {
    let n = sys.rank();
    let side = 2 * bound + 1;
    (0..side.pow(n as u32))
        .map(|mut k| {
            let v: Vec<i64> = (0..n)
                .map(|_| {
                    let c = k % side - bound;
                    k /= side;
                    c
                })
                .collect();
            we_orbit_points(sys, &weight(&v))
        })
        .collect()
}

#[test]
fn orbits_do_not_depend_on_the_split_root() {
    for name in ["A2", "C2", "G2", "A3", "B3", "C3"] {
        let sys = system(name);
        let reference = orbit_sets(&sys, 2);
        for index in 0..sys.positive_roots().len() {
            let cfg = ChamberConfig::with_root_index(&sys, index).unwrap();
            let mut reps = BTreeSet::new();
            for points in &reference {
                let rep = even_dominant_point(&sys, &cfg, &points[0]);
                assert!(is_even_dominant(&sys, &cfg, &rep), "{name} root {index}");
                assert!(points.contains(&rep), "{name} root {index}");
                reps.insert(rep);
            }
            assert_eq!(reps.len(), reference.len(), "{name} root {index}");
            let via_cfg: BTreeSet<Vec<Weight>> = reps.iter().map(|r| we_orbit(&sys, &cfg, r).unwrap().points).collect();
            assert_eq!(via_cfg, reference, "{name} root {index}");
        }
    }
}

fn small_weights(sys: &RootSystem, cfg: &ChamberConfig) -> Vec<Weight> {
    let mut out = BTreeSet::new();
    let n = sys.rank();
    for k in 0..3i64.pow(n as u32) {
        let mut r = k;
        let w: Vec<i64> = (0..n)
            .map(|_| {
                let v = r % 3;
                r /= 3;
                v
            })
            .collect();
        let w = weight(&w);
        out.insert(cfg.reflect(&w));
        out.insert(w);
    }
    out.into_iter().collect()
}

#[test]
fn products_conserve_points_in_rank_three() {
    for name in ["A3", "B3", "C3"] {
        let sys = system(name);
        let cfg = ChamberConfig::new(&sys);
        let weights = small_weights(&sys, &cfg);
        let sizes: BTreeMap<&Weight, usize> = weights.iter().map(|w| (w, we_orbit_points(&sys, w).len())).collect();
        for (i, l) in weights.iter().enumerate() {
            for m in &weights[i..] {
                let d = product_decompose(&sys, &cfg, l, m).unwrap();
                assert_eq!(d.point_count(&sys), sizes[l] * sizes[m], "{name} {l:?} ⊗ {m:?}");
            }
        }
    }
}

fn even_stabilizer(sys: &RootSystem, x: &[Rational]) -> usize {
    sys.even_weyl_order().unwrap() as usize / we_orbit_points(sys, x).len()
}

#[test]
fn products_with_shifts_inside_the_even_chamber() {
    let mut prop3 = 0;
    let mut prop5 = 0;
    for name in ["A2", "C2", "G2", "A3"] {
        let sys = system(name);
        let cfg = ChamberConfig::new(&sys);
        let n = sys.rank();
        for k in 0..3i64.pow(n as u32) {
            let lambda: Vec<i64> = (0..n).map(|i| (k / 3i64.pow(i as u32)) % 3).collect();
            let lambda = weight(&lambda);
            for shift in 1..=8i64 {
                for tweak in 0..n {
                    let mu: Weight = (0..n).map(|i| q(if i == tweak { shift } else { shift + 1 })).collect();
                    let shifted: Vec<Weight> = we_orbit_points(&sys, &lambda)
                        .iter()
                        .map(|p| p.iter().zip(&mu).map(|(a, b)| a + b).collect())
                        .collect();
                    if !shifted.iter().all(|p| is_even_dominant(&sys, &cfg, p)) {
                        continue;
                    }
                    let d = product_decompose(&sys, &cfg, &lambda, &mu).unwrap();
                    let interior = shifted.iter().all(|p| even_stabilizer(&sys, p) == 1);
                    for p in &shifted {
                        let rep = even_dominant_point(&sys, &cfg, p);
                        assert_eq!(d.mult(&rep) as usize, even_stabilizer(&sys, p), "{name} {lambda:?} ⊗ {mu:?}");
                    }
                    if interior {
                        assert!(d.terms.iter().all(|t| t.mult == 1), "{name} {lambda:?} ⊗ {mu:?}");
                        prop3 += 1;
                    }
                    prop5 += 1;
                }
            }
        }
    }
    assert!(prop3 > 20 && prop5 > prop3, "{prop3} interior and {prop5} total cases");
}

#[test]
fn distinct_e_functions_are_orthogonal_on_the_torus() {
    for name in ["A2", "C2", "G2"] {
        let sys = system(name);
        let cfg = ChamberConfig::new(&sys);
        let spectrum: Vec<Weight> = small_weights(&sys, &cfg)
            .iter()
            .map(|w| even_dominant_point(&sys, &cfg, w))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let bound = spectrum
            .iter()
            .flat_map(|l| we_orbit_points(&sys, l))
            .flat_map(|p| p.into_iter().map(|v| num_traits::Signed::abs(&v)))
            .max()
            .unwrap();
        let m = 2 * bound.to_integer().try_into().unwrap_or(0u64) + 1;
        let values: Vec<Vec<Complex64>> = spectrum.iter().map(|l| e_on_tm(&sys, m, l).unwrap()).collect();
        let size = (m as f64).powi(sys.rank() as i32);
        for (i, a) in values.iter().enumerate() {
            for (j, b) in values.iter().enumerate() {
                let s = tm_inner(a, b);
                if i == j {
                    let expected = size * we_orbit_points(&sys, &spectrum[i]).len() as f64;
                    assert!((s.re - expected).abs() < 1e-9 * expected && s.im.abs() < 1e-9 * expected);
                } else {
                    assert!(s.norm() < 1e-9, "{name} {:?} {:?}: {s}", spectrum[i], spectrum[j]);
                }
            }
        }
    }
}

#[test]
fn sampled_expansion_is_recovered() {
    let sys = system("A2");
    let cfg = ChamberConfig::new(&sys);
    let m = 6;
    let e10 = OrbitSum::new(&sys, &cfg, Family::E, &weight(&[1, 0])).unwrap();
    let e11 = OrbitSum::new(&sys, &cfg, Family::E, &weight(&[1, 1])).unwrap();
    let values = sample_tm(&sys, m, |x| e10.eval_exact::<f64>(x) + e11.eval_exact::<f64>(x) * 4.0).unwrap();
    let spectrum = spectrum_auto(&sys, &cfg, m).unwrap();
    let expected = |l: &Weight| {
        if *l == even_dominant_point(&sys, &cfg, &weight(&[1, 0])) {
            1.0
        } else if *l == even_dominant_point(&sys, &cfg, &weight(&[1, 1])) {
            4.0
        } else {
            0.0
        }
    };
    for c in analyze(&sys, m, &values, &spectrum).unwrap() {
        assert!((c.value - Complex64::new(expected(&c.lambda), 0.0)).norm() < 1e-12, "{:?}: {}", c.lambda, c.value);
    }
    // Series coefficients refer to the expansion f = Σ c_λ conj(E_λ). On A2,
    // conj(E_(1,0)) = E_(0,1) and conj(E_(1,1)) = E_(-1,2).
    for (l, want) in [([1, 0], 0.0), ([0, 1], 1.0), ([1, 1], 0.0), ([-1, 2], 4.0)] {
        let c = fourier_series_coeff(&sys, m, &values, &weight(&l)).unwrap();
        assert!((c - Complex64::new(want, 0.0)).norm() < 1e-12, "{l:?}: {c}");
    }
    let conjugated: Vec<Complex64> = values.iter().map(|v| v.conj()).collect();
    for (l, want) in [([1, 0], 1.0), ([0, 1], 0.0), ([1, 1], 4.0)] {
        let c = fourier_series_coeff(&sys, m, &conjugated, &weight(&l)).unwrap();
        assert!((c - Complex64::new(want, 0.0)).norm() < 1e-12, "{l:?}: {c}");
    }
}

#[test]
fn both_analysis_normalizations_agree() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for (name, m) in [("A2", 6u64), ("C2", 6), ("G2", 7), ("A3", 4)] {
        let sys = system(name);
        let cfg = ChamberConfig::new(&sys);
        let spectrum = spectrum_auto(&sys, &cfg, m).unwrap();
        let coeffs: Vec<Coefficient> = spectrum
            .iter()
            .map(|l| Coefficient {
                lambda: l.clone(),
                value: Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            })
            .collect();
        let values = synthesize_tm(&sys, m, &coeffs).unwrap();
        let direct = analyze(&sys, m, &values, &spectrum).unwrap();
        let folded = analyze_fdomain(&sys, &cfg, m, &values, &spectrum).unwrap();
        for ((a, b), c) in direct.iter().zip(&folded).zip(&coeffs) {
            assert!((a.value - c.value).norm() < 1e-10, "{name} {:?}", a.lambda);
            assert!((a.value - b.value).norm() < 1e-10, "{name} {:?}", a.lambda);
        }
    }
}

#[test]
fn least_squares_on_the_even_grid_recovers_coefficients() {
    let sys = system("C2");
    let cfg = ChamberConfig::new(&sys);
    let grid = grid_fm(&sys, &cfg, 4, true).unwrap();
    let points: Vec<Weight> = grid.points.iter().map(|p| p.omega.clone()).collect();
    let spectrum: Vec<Weight> =
        [[0, 0], [1, 0], [0, 1], [1, 1]].iter().map(|w| even_dominant_point(&sys, &cfg, &weight(w))).collect();
    let truth = [1.5, -0.25, 2.0, 0.5];
    let sums: Vec<OrbitSum> = spectrum.iter().map(|l| OrbitSum::new(&sys, &cfg, Family::E, l).unwrap()).collect();
    let values: Vec<Complex64> =
        points.iter().map(|x| sums.iter().zip(truth).map(|(s, c)| s.eval_exact::<f64>(x) * c).sum()).collect();
    let fit = fit_least_squares(&sys, &cfg, &points, &values, &spectrum).unwrap();
    assert_eq!(fit.rank, spectrum.len());
    for (c, t) in fit.coefficients.iter().zip(truth) {
        assert!((c.value - Complex64::new(t, 0.0)).norm() < 1e-10);
    }
}

#[test]
fn constant_factors_integrate_e_to_its_mean() {
    let family = SeparableFamily::constant();
    for name in ["A2", "C2", "G2"] {
        let sys = system(name);
        let cfg = ChamberConfig::new(&sys);
        let dim = if name == "A2" { 3 } else { 2 };
        let even_order = sys.even_weyl_order().unwrap() as f64;
        for l in [[0, 0], [1, 0], [0, 1], [2, 1]] {
            let est = symmetrize_separable(&sys, &cfg, &family, &vec![0; dim], &weight(&l), 6).unwrap();
            let expected = if l == [0, 0] { 1.0 / even_order } else { 0.0 };
            assert!((est.value - Complex64::new(expected, 0.0)).norm() < 1e-12, "{name} {l:?}: {}", est.value);
        }
    }
}

#[test]
fn hermite_recurrence_matches_the_series() {
    for n in 0..=10 {
        for k in -8..=8 {
            let x = k as f64 / 4.0;
            let (a, b) = (hermite(n, x), hermite_series(n, x));
            assert!((a - b).abs() <= 1e-9 * (1.0 + b.abs()), "H_{n}({x}): {a} vs {b}");
        }
    }
}

#[test]
fn group_orders_and_dual_bases() {
    for name in ALL {
        let sys = system(name);
        let n = sys.rank();
        for i in 0..n {
            for j in 0..n {
                let mut omega_j = vec![q(0); n];
                omega_j[j] = q(1);
                let pairing = sys.scalar_product(&sys.coroot_omega(i), &omega_j).unwrap();
                assert_eq!(pairing, q(i64::from(i == j)), "{name} ⟨α{i}∨, ω{j}⟩");
            }
        }
        let xi = sys.highest_root_omega();
        assert_eq!(sys.scalar_product(&xi, &xi).unwrap(), q(2), "{name}");
        let coroot: Weight = xi.iter().map(|v| v * q(2) / sys.scalar_product(&xi, &xi).unwrap()).collect();
        assert_eq!(coroot, xi, "{name}");
        assert_eq!(sys.even_weyl_order().unwrap() * 2, sys.weyl_order().unwrap());
    }
}
