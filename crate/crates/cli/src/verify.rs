//! Built-in property suites for `eorbit verify`. Every check compares the
//! library against an independent computation: brute-force enumeration,
//! closed-form counts or a second algorithm.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;

use eorbit_core::efunctions::{
    eval as eval_e, laplacian_residual, permutations_with_parity, Family, OrbitSum, DEFAULT_LAPLACIAN_STEP,
};
use eorbit_core::orbits::{branch_decompose, product_decompose, w_orbit, we_orbit, we_orbit_points, BranchRule};
use eorbit_core::scalar::{format_weight, q, rational_to_f64, to_real, weight};
use eorbit_core::symfunc::{
    even_coset_images, gauss_hermite, hermite, hermite_fourier_expected, hermite_fourier_transform, hermite_series,
    sym_hermite_eval, sym_poly_eval, SeparableFamily,
};
use eorbit_core::transforms::{
    analyze, analyze_fdomain, check_separation, grid_fm, grid_tm, sample_tm, spectrum_auto, synthesize_tm, tm_inner,
    Coefficient,
};
use eorbit_core::weylgroup::{even_dominant_point, generate, is_even_dominant};
use eorbit_core::{ChamberConfig, Complex64, Rational, RootSystem, Weight};
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::VerifyArgs;
use crate::{CliError, CliResult};

/// Names accepted by `--suite`, in run order.
pub const SUITES: [&str; 10] = [
    "groups",
    "orbits",
    "products",
    "branching",
    "functions",
    "laplacian",
    "orthogonality",
    "transforms",
    "grids",
    "symfunc",
];

/// Result of one check: a detail line on success, a failure description otherwise.
pub type Outcome = Result<String, String>;

type Check = (&'static str, fn() -> Outcome);

/// The checks of one suite.
pub fn checks(suite: &str) -> Vec<Check> {
    match suite {
        "groups" => vec![("group orders", group_orders), ("elements preserve the form", form_preserved)],
        "orbits" => vec![
            ("W-orbit splits into two W_e-orbits", orbit_split),
            ("orbits independent of the split root", split_root_independence),
        ],
        "products" => vec![("products match brute force", products_brute_force)],
        "branching" => vec![("coordinate-drop branching", branching)],
        "functions" => vec![("orbit function identities", function_identities)],
        "laplacian" => vec![("Laplacian eigenfunctions", laplacian)],
        "orthogonality" => vec![("discrete orthogonality on T_7", orthogonality)],
        "transforms" => {
            vec![("analysis inverts synthesis", round_trip), ("fundamental-domain analysis", fdomain_analysis)]
        }
        "grids" => vec![("grid orbit counts", grid_counts), ("F^e_2(G2) has 3 points", g2_even_grid)],
        "symfunc" => vec![
            ("Hermite recurrence matches the series", hermite_recurrence),
            ("symmetrized Hermite invariance", hermite_invariance),
            ("sym-poly orthogonality", sym_poly_orthogonality),
            ("Hermite Fourier eigenrelation", hermite_eigenrelation),
        ],
        _ => Vec::new(),
    }
}

/// Runs the selected suites, prints the table and fails if any check fails.
pub fn run(args: &VerifyArgs) -> CliResult<()> {
    if args.list {
        for s in SUITES {
            println!("{s}");
        }
        return Ok(());
    }
    let selected: Vec<&str> = if args.suite.is_empty() {
        SUITES.to_vec()
    } else {
        SUITES.iter().copied().filter(|s| args.suite.iter().any(|a| a == s)).collect()
    };
    println!("{:<14} {:<40} {:<6} detail", "suite", "check", "result");
    let mut total = 0;
    let mut failed = 0;
    for suite in selected {
        for (name, check) in checks(suite) {
            total += 1;
            let (status, detail) = match check() {
                Ok(d) => ("PASS", d),
                Err(d) => {
                    failed += 1;
                    ("FAIL", d)
                }
            };
            println!("{suite:<14} {name:<40} {status:<6} {detail}");
        }
    }
    println!("{} of {total} checks passed", total - failed);
    if failed > 0 {
        return Err(CliError::VerificationFailed(failed));
    }
    Ok(())
}

fn system(name: &str) -> RootSystem {
    RootSystem::from_name(name).expect("built-in system name")
}

fn verdict(failures: Vec<String>, detail: String) -> Outcome {
    if failures.is_empty() {
        Ok(detail)
    } else {
        Err(failures.join("; "))
    }
}

/// All integer vectors with entries in [lo, hi].
fn box_points(n: usize, lo: i64, hi: i64) -> Vec<Weight> {
    let side = (hi - lo + 1) as usize;
    (0..side.pow(n as u32))
        .map(|mut k| {
            let v: Vec<i64> = (0..n)
                .map(|_| {
                    let c = lo + (k % side) as i64;
                    k /= side;
                    c
                })
                .collect();
            weight(&v)
        })
        .collect()
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

fn group_orders() -> Outcome {
    let cases: [(&str, u128); 12] = [
        ("A1", factorial(2)),
        ("A2", factorial(3)),
        ("A3", factorial(4)),
        ("A4", factorial(5)),
        ("B3", 8 * factorial(3)),
        ("B4", 16 * factorial(4)),
        ("C2", 4 * factorial(2)),
        ("C3", 8 * factorial(3)),
        ("C4", 16 * factorial(4)),
        ("D4", 8 * factorial(4)),
        ("G2", 12),
        ("F4", 1152),
    ];
    let mut failures = Vec::new();
    for (name, expected) in cases {
        let g = generate(&system(name)).map_err(|e| e.to_string())?;
        let distinct: BTreeSet<&Vec<Vec<i64>>> = g.elements.iter().map(|e| &e.matrix).collect();
        if g.order() as u128 != expected || 2 * g.even_order() as u128 != expected || distinct.len() != g.order() {
            failures.push(format!("{name}: |W| = {}, |W_e| = {}, expected {expected}", g.order(), g.even_order()));
        }
    }
    verdict(failures, format!("{} systems", cases.len()))
}

fn form_preserved() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut failures = Vec::new();
    let mut checked = 0;
    for name in ["A2", "A3", "B3", "C3", "G2", "D4"] {
        let sys = system(name);
        let g = generate(&sys).map_err(|e| e.to_string())?;
        for _ in 0..5 {
            let x: Weight = (0..sys.rank()).map(|_| q(rng.gen_range(-4..=4))).collect();
            let y: Weight = (0..sys.rank()).map(|_| q(rng.gen_range(-4..=4))).collect();
            let base = sys.scalar_product(&x, &y).map_err(|e| e.to_string())?;
            for e in &g.elements {
                checked += 1;
                if sys.scalar_product(&e.apply(&x), &e.apply(&y)).map_err(|e| e.to_string())? != base {
                    failures.push(format!("{name}: element {:?} changes ⟨x, y⟩", e.word));
                }
            }
        }
    }
    verdict(failures, format!("{checked} element-pair checks"))
}

fn orbit_split() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for name in ["A2", "A3", "B3", "C2", "C3", "G2"] {
        let sys = system(name);
        let cfg = ChamberConfig::new(&sys);
        for lambda in box_points(sys.rank(), 1, 2) {
            let full: BTreeSet<Weight> = w_orbit(&sys, &lambda).map_err(|e| e.to_string())?.into_iter().collect();
            let first: BTreeSet<Weight> = we_orbit_points(&sys, &lambda).into_iter().collect();
            let second: BTreeSet<Weight> = we_orbit_points(&sys, &cfg.reflect(&lambda)).into_iter().collect();
            let union: BTreeSet<Weight> = first.union(&second).cloned().collect();
            checked += 1;
            if !first.is_disjoint(&second) || union != full || full.len() as u128 != sys.weyl_order().unwrap() {
                failures.push(format!("{name} λ = {}", format_weight(&lambda)));
            }
        }
    }
    verdict(failures, format!("{checked} strictly dominant weights"))
}

fn split_root_independence() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for name in ["A2", "C2", "G2", "A3"] {
        let sys = system(name);
        let reference: BTreeSet<Vec<Weight>> =
            box_points(sys.rank(), -2, 2).iter().map(|x| we_orbit_points(&sys, x)).collect();
        for index in 0..sys.positive_roots().len() {
            let cfg = ChamberConfig::with_root_index(&sys, index).map_err(|e| e.to_string())?;
            let mut via_cfg = BTreeSet::new();
            for points in &reference {
                let rep = even_dominant_point(&sys, &cfg, &points[0]);
                if !is_even_dominant(&sys, &cfg, &rep) || !points.contains(&rep) {
                    failures.push(format!("{name} root {}: bad representative {}", index + 1, format_weight(&rep)));
                }
                via_cfg.insert(we_orbit(&sys, &cfg, &rep).map_err(|e| e.to_string())?.points);
            }
            checked += 1;
            if via_cfg != reference {
                failures.push(format!("{name} root {}: orbit sets differ", index + 1));
            }
        }
    }
    verdict(failures, format!("{checked} split roots"))
}

fn products_brute_force() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for name in ["A2", "C2", "G2", "A3"] {
        let sys = system(name);
        let cfg = ChamberConfig::new(&sys);
        let mut weights: BTreeSet<Weight> = BTreeSet::new();
        for w in box_points(sys.rank(), 0, 2) {
            weights.insert(cfg.reflect(&w));
            weights.insert(w);
        }
        let weights: Vec<Weight> = weights.into_iter().collect();
        let step = if sys.rank() > 2 { 5 } else { 1 };
        for (i, l) in weights.iter().enumerate().step_by(step) {
            for m in weights[i..].iter().step_by(step) {
                let d = product_decompose(&sys, &cfg, l, m).map_err(|e| e.to_string())?;
                let mut expected: BTreeMap<Weight, u64> = BTreeMap::new();
                let b = we_orbit_points(&sys, m);
                for p in we_orbit_points(&sys, l) {
                    for r in &b {
                        let s: Weight = p.iter().zip(r).map(|(x, y)| x + y).collect();
                        *expected.entry(even_dominant_point(&sys, &cfg, &s)).or_insert(0) += 1;
                    }
                }
                let expected: BTreeMap<Weight, u64> = expected
                    .into_iter()
                    .map(|(rep, count)| {
                        let size = we_orbit_points(&sys, &rep).len() as u64;
                        (rep, count / size)
                    })
                    .collect();
                let got: BTreeMap<Weight, u64> = d.terms.iter().map(|t| (t.rep.clone(), t.mult)).collect();
                checked += 1;
                if got != expected {
                    failures.push(format!("{name} {} ⊗ {}", format_weight(l), format_weight(m)));
                }
            }
        }
    }
    verdict(failures, format!("{checked} products"))
}

/// Projects every orbit point onto the kept ω-coordinates and groups the
/// projections into subsystem orbits.
fn branching_oracle(
    sys: &RootSystem,
    sub: &RootSystem,
    keep: &[usize],
    lambda: &[Rational],
) -> Option<BTreeMap<BTreeSet<Weight>, u64>> {
    let mut remaining: BTreeMap<Weight, u64> = BTreeMap::new();
    for p in we_orbit_points(sys, lambda) {
        *remaining.entry(keep.iter().map(|&i| p[i].clone()).collect()).or_insert(0) += 1;
    }
    let mut out = BTreeMap::new();
    while let Some(p) = remaining.keys().next().cloned() {
        let orbit: BTreeSet<Weight> = we_orbit_points(sub, &p).into_iter().collect();
        let counts: Vec<u64> = orbit.iter().map(|x| remaining.get(x).copied().unwrap_or(0)).collect();
        let mult = *counts.iter().min()?;
        if mult != *counts.iter().max()? {
            return None;
        }
        for x in &orbit {
            remaining.remove(x);
        }
        *out.entry(orbit).or_insert(0) += mult;
    }
    Some(out)
}

fn branching() -> Outcome {
    let cases: [(&str, &[usize]); 4] = [("A3", &[0, 1]), ("B3", &[1, 2]), ("C3", &[1, 2]), ("D4", &[1, 2, 3])];
    let mut failures = Vec::new();
    let mut checked = 0;
    for (name, keep) in cases {
        let sys = system(name);
        for lambda in box_points(sys.rank(), 0, 2).into_iter().step_by(3) {
            let b = branch_decompose(&sys, &lambda, &BranchRule::CoordinateDrop).map_err(|e| e.to_string())?;
            let got: BTreeMap<BTreeSet<Weight>, u64> = b
                .decomposition
                .terms
                .iter()
                .map(|t| (we_orbit_points(&b.subsystem, &t.rep).into_iter().collect(), t.mult))
                .collect();
            checked += 1;
            if branching_oracle(&sys, &b.subsystem, keep, &lambda) != Some(got) {
                failures.push(format!("{name} → {} at {}", b.subsystem.name(), format_weight(&lambda)));
            }
        }
    }
    verdict(failures, format!("{checked} branchings"))
}

fn function_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst: BTreeMap<&str, f64> = BTreeMap::new();
    let mut note = |k: &'static str, v: f64| {
        let e = worst.entry(k).or_insert(0.0);
        *e = e.max(v);
    };
    let random_weight = |rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64| -> Weight {
        (0..n).map(|_| q(rng.gen_range(lo..=hi))).collect()
    };
    for name in ["A2", "C2", "G2", "A3", "B3"] {
        let sys = system(name);
        let cfg = ChamberConfig::new(&sys);
        let n = sys.rank();
        let group = generate(&sys).map_err(|e| e.to_string())?;
        let e = |l: &[Rational], p: &[f64]| eval_e(&sys, &cfg, Family::E, l, p).unwrap();
        for _ in 0..5 {
            let lambda = random_weight(&mut rng, n, 1, 3);
            let mixed = random_weight(&mut rng, n, -3, 3);
            let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let sum = OrbitSum::new(&sys, &cfg, Family::E, &mixed).map_err(|e| e.to_string())?;
            let base = sum.eval(&x);
            note("bounded by the orbit size", (base.norm() - sum.len() as f64).max(0.0));
            for w in group.even_elements() {
                note("W_e invariance", (sum.eval(&w.apply_f64(&x)) - base).norm());
            }
            for i in 0..n {
                let shift = to_real::<f64>(&sys.coroot_omega(i));
                let y: Vec<f64> = x.iter().zip(&shift).map(|(a, b)| a + b).collect();
                note("affine invariance", (sum.eval(&y) - base).norm());
            }
            let other = random_weight(&mut rng, n, -3, 3);
            let hat = |a: &[Rational], b: &[Rational]| {
                OrbitSum::new(&sys, &cfg, Family::EHat, a).unwrap().eval_exact::<f64>(b)
            };
            note("duality of full sums", (hat(&mixed, &other) - hat(&other, &mixed)).norm());
            let r_lambda = cfg.reflect(&lambda);
            let (el, er) = (e(&lambda, &x), e(&r_lambda, &x));
            let phi = eval_e(&sys, &cfg, Family::C, &lambda, &x).unwrap();
            let varphi = eval_e(&sys, &cfg, Family::S, &lambda, &x).unwrap();
            note("C = E + E∘r_α", (phi - (el + er)).norm());
            note("S = E − E∘r_α", (varphi - (el - er)).norm());
            note("C² − S² = 4 E E∘r_α", (phi * phi - varphi * varphi - el * er * 4.0).norm());
            if name == "C2" || name == "G2" {
                note("real values", base.im.abs());
            }
        }
    }
    let bad: Vec<String> = worst.iter().filter(|(_, &v)| v > 1e-10).map(|(k, v)| format!("{k}: {v:.2e}")).collect();
    let max = worst.values().cloned().fold(0.0, f64::max);
    verdict(bad, format!("{} identities, worst deviation {max:.2e}", worst.len()))
}

fn laplacian() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    for name in ["A2", "C2", "G2", "A3", "B3", "C3"] {
        let sys = system(name);
        let cfg = ChamberConfig::new(&sys);
        for lambda in box_points(sys.rank(), 0, 2) {
            let norm = rational_to_f64(&sys.scalar_product(&lambda, &lambda).map_err(|e| e.to_string())?);
            let tol = 1e-5 * (1.0 + 4.0 * PI * PI * norm);
            for _ in 0..3 {
                let x: Vec<f64> = (0..sys.rank()).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let r =
                    laplacian_residual(&sys, &cfg, &lambda, &x, DEFAULT_LAPLACIAN_STEP).map_err(|e| e.to_string())?;
                worst = worst.max(r / tol);
                if r > tol {
                    failures.push(format!("{name} λ = {} residual {r:.2e}", format_weight(&lambda)));
                }
            }
        }
    }
    verdict(failures, format!("worst residual/tolerance {worst:.2e}"))
}

/// Even-dominant weights whose orbits stay inside the box [−bound, bound]ⁿ.
fn bounded_spectrum(sys: &RootSystem, cfg: &ChamberConfig, bound: i64) -> Vec<Weight> {
    let reps: BTreeSet<Weight> = box_points(sys.rank(), -bound, bound)
        .iter()
        .map(|x| even_dominant_point(sys, cfg, x))
        .filter(|rep| we_orbit_points(sys, rep).iter().all(|p| p.iter().all(|v| v.abs() <= q(bound))))
        .collect();
    reps.into_iter().collect()
}

fn orthogonality() -> Outcome {
    let m = 7u64;
    let mut failures = Vec::new();
    let mut pairs = 0;
    for name in ["A2", "C2", "G2"] {
        let sys = system(name);
        let cfg = ChamberConfig::new(&sys);
        let spectrum = bounded_spectrum(&sys, &cfg, 3);
        if let Err(e) = check_separation(&sys, m, &spectrum) {
            failures.push(format!("{name}: {e}"));
            continue;
        }
        let grid = grid_tm(&sys, m).map_err(|e| e.to_string())?;
        let values: Vec<Vec<Complex64>> = spectrum
            .iter()
            .map(|l| {
                let e = OrbitSum::new(&sys, &cfg, Family::E, l).unwrap();
                grid.points.iter().map(|x| e.eval_exact::<f64>(x)).collect()
            })
            .collect();
        let scale = (m as f64).powi(sys.rank() as i32);
        for (i, l) in spectrum.iter().enumerate() {
            for j in 0..spectrum.len() {
                let ip = tm_inner(&values[i], &values[j]);
                pairs += 1;
                let expected = if i == j { scale * we_orbit_points(&sys, l).len() as f64 } else { 0.0 };
                if (ip - expected).norm() > 1e-9 * expected.max(1.0) {
                    failures.push(format!("{name} ⟨E{}, E{}⟩ = {ip}", format_weight(l), format_weight(&spectrum[j])));
                }
            }
        }
    }
    verdict(failures, format!("{pairs} pairs"))
}

fn random_coefficients(rng: &mut ChaCha8Rng, spectrum: &[Weight]) -> Vec<Coefficient> {
    spectrum
        .iter()
        .map(|l| Coefficient {
            lambda: l.clone(),
            value: Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
        })
        .collect()
}

fn round_trip() -> Outcome {
    let m = 6u64;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut worst, mut worst_plancherel) = (0.0f64, 0.0f64);
    for name in ["A2", "C2", "G2"] {
        let sys = system(name);
        let cfg = ChamberConfig::new(&sys);
        let spectrum = spectrum_auto(&sys, &cfg, m).map_err(|e| e.to_string())?;
        let sums: Vec<OrbitSum> = spectrum.iter().map(|l| OrbitSum::new(&sys, &cfg, Family::E, l).unwrap()).collect();
        for _ in 0..3 {
            let coeffs = random_coefficients(&mut rng, &spectrum);
            let values =
                sample_tm(&sys, m, |x| coeffs.iter().zip(&sums).map(|(c, s)| c.value * s.eval_exact::<f64>(x)).sum())
                    .map_err(|e| e.to_string())?;
            let recovered = analyze(&sys, m, &values, &spectrum).map_err(|e| e.to_string())?;
            for (a, b) in coeffs.iter().zip(&recovered) {
                worst = worst.max((a.value - b.value).norm());
            }
            let energy: f64 = values.iter().map(|v| v.norm_sqr()).sum();
            let spectral: f64 = coeffs.iter().zip(&sums).map(|(c, s)| c.value.norm_sqr() * s.len() as f64).sum::<f64>()
                * (m as f64).powi(sys.rank() as i32);
            worst_plancherel = worst_plancherel.max((energy - spectral).abs() / spectral);
        }
    }
    let detail = format!("max |Δa| = {worst:.2e}, Plancherel relative error {worst_plancherel:.2e}");
    if worst <= 1e-10 && worst_plancherel <= 1e-9 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn fdomain_analysis() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst = 0.0f64;
    for (name, m) in [("A2", 6u64), ("C2", 6), ("G2", 7), ("A3", 4)] {
        let sys = system(name);
        let cfg = ChamberConfig::new(&sys);
        let spectrum = spectrum_auto(&sys, &cfg, m).map_err(|e| e.to_string())?;
        let coeffs = random_coefficients(&mut rng, &spectrum);
        let values = synthesize_tm(&sys, m, &coeffs).map_err(|e| e.to_string())?;
        let direct = analyze(&sys, m, &values, &spectrum).map_err(|e| e.to_string())?;
        let folded = analyze_fdomain(&sys, &cfg, m, &values, &spectrum).map_err(|e| e.to_string())?;
        for ((a, b), c) in direct.iter().zip(&folded).zip(&coeffs) {
            worst = worst.max((a.value - c.value).norm()).max((a.value - b.value).norm());
        }
    }
    let detail = format!("max deviation {worst:.2e}");
    if worst <= 1e-10 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Σ over F_M of |W| / |Stab(x)| counts (1/M)P∨/Q∨, which has M^n det(C)
/// elements. F^e_M is the point set F_M ∪ r_α F_M, so its boundary points
/// may repeat W_e-orbits and it is checked against that union instead.
fn grid_counts() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for name in ["A2", "C2", "G2", "A3", "B3", "C3"] {
        let sys = system(name);
        let cfg = ChamberConfig::new(&sys);
        let n = sys.rank();
        let index = cartan_determinant(sys.cartan());
        let order = sys.weyl_order().map_err(|e| e.to_string())?;
        for big_m in 1..=5u64 {
            let expected = (big_m as u128).pow(n as u32) * index as u128;
            let plain = grid_fm(&sys, &cfg, big_m, false).map_err(|e| e.to_string())?;
            let total: u128 = plain.points.iter().map(|p| order / p.stabilizer).sum();
            checked += 1;
            if total != expected {
                failures.push(format!("{name} M = {big_m}: {total} torus points, expected {expected}"));
            }
            let even = grid_fm(&sys, &cfg, big_m, true).map_err(|e| e.to_string())?;
            let got: BTreeSet<Weight> = even.points.iter().map(|p| p.omega.clone()).collect();
            let union: BTreeSet<Weight> =
                plain.points.iter().flat_map(|p| [p.omega.clone(), cfg.reflect(&p.omega)]).collect();
            checked += 1;
            if got != union || got.len() != even.points.len() {
                failures.push(format!("{name} M = {big_m}: F^e_M is not F_M ∪ r_α F_M"));
            }
        }
    }
    verdict(failures, format!("{checked} grids"))
}

/// Determinant of a small integer matrix by cofactor expansion.
fn cartan_determinant(m: &[Vec<i64>]) -> i64 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| *v).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * cartan_determinant(&minor)
        })
        .sum()
}

fn g2_even_grid() -> Outcome {
    let sys = system("G2");
    let g = grid_fm(&sys, &ChamberConfig::new(&sys), 2, true).map_err(|e| e.to_string())?;
    if g.points.len() == 3 {
        Ok("3 points".into())
    } else {
        Err(format!("{} points", g.points.len()))
    }
}

fn hermite_recurrence() -> Outcome {
    let mut worst = 0.0f64;
    for n in 0..=10 {
        for k in 0..=20 {
            let x = -2.5 + 0.25 * k as f64;
            let (a, b) = (hermite(n, x), hermite_series(n, x));
            worst = worst.max((a - b).abs() / b.abs().max(1.0));
        }
    }
    let detail = format!("max relative deviation {worst:.2e}");
    if worst <= 1e-12 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Index vectors m_1 ≥ … ≥ m_n with entries up to `max`.
fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..=max {
        for mut rest in partitions(n - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn hermite_invariance() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=4usize {
        let perms: Vec<Vec<usize>> =
            permutations_with_parity(n).into_iter().filter(|(_, even)| *even).map(|(p, _)| p).collect();
        for m in partitions(n, 3) {
            let lambda = &[1.0, -2.0, 3.0, 0.5][..n];
            let base = sym_hermite_eval(&m, lambda).map_err(|e| e.to_string())?;
            for p in &perms {
                let pl: Vec<f64> = p.iter().map(|&i| lambda[i]).collect();
                let pm: Vec<usize> = p.iter().map(|&i| m[i]).collect();
                checked += 2;
                if sym_hermite_eval(&m, &pl).unwrap() != base || sym_hermite_eval(&pm, lambda).unwrap() != base {
                    failures.push(format!("m = {m:?}"));
                }
            }
        }
    }
    verdict(failures, format!("{checked} permutations"))
}

fn sym_poly_orthogonality() -> Outcome {
    let family = SeparableFamily::hermite(8);
    let rule = gauss_hermite(8);
    let mut worst = 0.0f64;
    for n in 2..=3usize {
        let even_order = (1..=n).product::<usize>() / 2;
        let size = rule.nodes.len();
        let nodes: Vec<(Vec<f64>, f64)> = (0..size.pow(n as u32))
            .map(|mut k| {
                let (mut x, mut w) = (Vec::new(), 1.0);
                for _ in 0..n {
                    x.push(rule.nodes[k % size]);
                    w *= rule.weights[k % size];
                    k /= size;
                }
                (x, w)
            })
            .collect();
        let indices = partitions(n, 3);
        let values: Vec<Vec<f64>> = indices
            .iter()
            .map(|m| nodes.iter().map(|(x, _)| sym_poly_eval(&family, m, x).unwrap()).collect())
            .collect();
        for (i, m) in indices.iter().enumerate() {
            for j in 0..indices.len() {
                let integral: f64 =
                    nodes.iter().zip(&values[i]).zip(&values[j]).map(|(((_, w), a), b)| w * a * b).sum::<f64>()
                        / even_order as f64;
                let expected = if i == j { even_coset_images(m).len() as f64 / even_order as f64 } else { 0.0 };
                worst = worst.max((integral - expected).abs());
            }
        }
    }
    let detail = format!("max deviation {worst:.2e}");
    if worst <= 1e-8 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn hermite_eigenrelation() -> Outcome {
    let mut worst = 0.0f64;
    for m in 0..=4 {
        for x in [0.0, 0.5, -0.5, 1.0, -1.0] {
            worst = worst.max((hermite_fourier_transform(m, x) - hermite_fourier_expected(m, x)).norm());
        }
    }
    let detail = format!("max deviation {worst:.2e}");
    if worst <= 1e-6 {
        Ok(detail)
    } else {
        Err(detail)
    }
}
