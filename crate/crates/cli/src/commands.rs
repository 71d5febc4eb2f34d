//! Command handlers. Each one validates its inputs, calls the library and
//! writes the result in a fixed order.

use eorbit_core::efunctions::{Family, OrbitSum};
use eorbit_core::orbits::{
    branch_decompose, dominant_rep, product_decompose, w_orbit, we_orbit, BranchRule, OrbitKind,
};
use eorbit_core::scalar::{format_rational, parse_weight, rational_to_f64};
use eorbit_core::symfunc::{sym_hermite_eval, sym_poly_eval, SeparableFamily};
use eorbit_core::transforms::{
    align_samples, analyze, grid_fm, grid_tm, spectrum_auto, synthesize_exact, synthesize_tm, Coefficient,
};
use eorbit_core::weylgroup::generate;
use eorbit_core::{ChamberConfig, Complex64, Error, RootSystem, Weight};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::*;
use crate::table::{coordinate_header, parse_rows, read_input, render, write_output};
use crate::wire::*;
use crate::{verify, CliError, CliResult};

/// Runs one parsed command line.
pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Group(a) => group(&a),
        Command::Orbit(a) => orbit(&a),
        Command::Product(a) => product(&a),
        Command::Branch(a) => branch(&a),
        Command::Eval(a) => eval(&a),
        Command::Grid(a) => grid(&a),
        Command::Dft(DftCommand::Analyze(a)) => dft_analyze(&a),
        Command::Dft(DftCommand::Synthesize(a)) => dft_synthesize(&a),
        Command::Symfunc(SymfuncCommand::Hermite(a)) => symfunc(&a, false),
        Command::Symfunc(SymfuncCommand::SymPoly(a)) => symfunc(&a, true),
        Command::Verify(a) => verify::run(&a),
    }
}

fn system(args: &SystemArgs) -> CliResult<RootSystem> {
    Ok(RootSystem::from_name(&args.system)?)
}

fn chamber(sys: &RootSystem, args: &ChamberArgs) -> CliResult<ChamberConfig> {
    match args.split_root {
        None => Ok(ChamberConfig::new(sys)),
        Some(0) => Err(Error::IndexOutOfRange { index: 0, max: sys.positive_roots().len() }.into()),
        Some(i) => Ok(ChamberConfig::with_root_index(sys, i - 1)?),
    }
}

/// Writes a JSON-serializable result, or its CSV rendering.
fn emit<T: Serialize>(value: &T, out: &OutputArgs, csv: impl FnOnce() -> CliResult<String>) -> CliResult<()> {
    let text = match out.format {
        Format::Json => to_json(value, false),
        Format::Pretty => to_json(value, true),
        Format::Csv => return write_output(out.out.as_deref(), &csv()?),
    }
    .map_err(|e| CliError::Io(e.to_string()))?;
    write_output(out.out.as_deref(), &text)
}

fn text_row(w: &[eorbit_core::Rational]) -> Vec<String> {
    w.iter().map(format_rational).collect()
}

fn complex_cells(v: Complex64) -> [String; 2] {
    [format_f17(v.re), format_f17(v.im)]
}

fn group(args: &GroupArgs) -> CliResult<()> {
    let sys = system(&args.system)?;
    let g = generate(&sys)?;
    let value = GroupOut {
        system: sys.name(),
        order: g.order() as u64,
        even_order: g.even_order() as u64,
        elements: g
            .elements
            .iter()
            .map(|e| ElementOut { matrix: e.matrix.clone(), det: e.det, word: e.word.iter().map(|i| i + 1).collect() })
            .collect(),
    };
    emit(&value, &args.output, || Err(CliError::Usage("group output is JSON only; use --format json or pretty".into())))
}

fn orbit(args: &OrbitArgs) -> CliResult<()> {
    let sys = system(&args.system)?;
    let lambda = &args.lambda.0;
    let value = if args.even {
        let cfg = chamber(&sys, &args.chamber)?;
        let o = we_orbit(&sys, &cfg, lambda)?;
        let kind = match o.kind {
            OrbitKind::First => "first",
            OrbitKind::Second => "second",
        };
        OrbitOut {
            system: sys.name(),
            even: true,
            rep: rats(&o.rep),
            kind: Some(kind.to_string()),
            stabilizer: o.stabilizer_order as u64,
            size: o.points.len(),
            points: o.points.iter().map(|p| rats(p)).collect(),
        }
    } else {
        let points = w_orbit(&sys, lambda)?;
        let order = sys.weyl_order()?;
        OrbitOut {
            system: sys.name(),
            even: false,
            rep: rats(&dominant_rep(&sys, lambda)),
            kind: None,
            stabilizer: (order / points.len() as u128) as u64,
            size: points.len(),
            points: points.iter().map(|p| rats(p)).collect(),
        }
    };
    emit(&value, &args.output, || {
        let rows: Vec<Vec<String>> = value.points.iter().map(|p| text_row(&unrats(p))).collect();
        render(&coordinate_header("x", sys.rank()), &rows)
    })
}

fn decomposition_csv(n: usize, d: &DecompositionOut) -> CliResult<String> {
    let mut header = coordinate_header("rep", n);
    header.push("mult".into());
    let rows: Vec<Vec<String>> = d
        .terms
        .iter()
        .map(|t| {
            let mut row = text_row(&unrats(&t.rep));
            row.push(t.mult.to_string());
            row
        })
        .collect();
    render(&header, &rows)
}

fn product(args: &ProductArgs) -> CliResult<()> {
    let sys = system(&args.system)?;
    let cfg = chamber(&sys, &args.chamber)?;
    let d = product_decompose(&sys, &cfg, &args.lambda.0, &args.mu.0)?;
    let value = DecompositionOut {
        subsystem: None,
        terms: d.terms.iter().map(|t| TermOut { rep: rats(&t.rep), mult: t.mult }).collect(),
    };
    emit(&value, &args.output, || decomposition_csv(sys.rank(), &value))
}

/// Parses simple roots written as `1,0,0;0,1,0`.
fn parse_roots(text: &str) -> CliResult<Vec<Vec<i64>>> {
    text.split(';')
        .map(|root| {
            root.split(',')
                .map(|c| {
                    c.trim()
                        .parse::<i64>()
                        .map_err(|_| CliError::Usage(format!("bad root coordinate `{c}` in --roots")))
                })
                .collect()
        })
        .collect()
}

fn branch(args: &BranchArgs) -> CliResult<()> {
    let sys = system(&args.system)?;
    let rule = match &args.roots {
        Some(r) => BranchRule::EqualRank { simple_roots: parse_roots(r)? },
        None => BranchRule::CoordinateDrop,
    };
    let b = branch_decompose(&sys, &args.lambda.0, &rule)?;
    if let Some(to) = &args.to {
        if !to.trim().eq_ignore_ascii_case(&b.subsystem.name()) {
            return Err(Error::UnsupportedBranch(format!(
                "{} branches to {} under this rule, not {to}",
                sys.name(),
                b.subsystem.name()
            ))
            .into());
        }
    }
    let value = DecompositionOut {
        subsystem: Some(b.subsystem.name()),
        terms: b.decomposition.terms.iter().map(|t| TermOut { rep: rats(&t.rep), mult: t.mult }).collect(),
    };
    emit(&value, &args.output, || decomposition_csv(b.subsystem.rank(), &value))
}

fn eval(args: &EvalArgs) -> CliResult<()> {
    let sys = system(&args.system)?;
    let cfg = chamber(&sys, &args.chamber)?;
    let family: Family = args.family.parse()?;
    let sum = OrbitSum::new(&sys, &cfg, family, &args.lambda.0)?;
    let rows = parse_rows(&read_input(&args.points)?, sys.rank(), 0)?;
    let lines: Vec<Vec<String>> = rows
        .par_iter()
        .map(|r| {
            let mut line = r.fields.clone();
            line.extend(complex_cells(sum.eval_exact::<f64>(&r.values)));
            line
        })
        .collect();
    let mut header = coordinate_header("x", sys.rank());
    header.extend(["re".to_string(), "im".to_string()]);
    write_output(args.out.as_deref(), &render(&header, &lines)?)
}

fn grid(args: &GridArgs) -> CliResult<()> {
    let sys = system(&args.system)?;
    let n = sys.rank();
    if let Some(m) = args.torus {
        let g = grid_tm(&sys, m)?;
        let value = TorusOut {
            system: sys.name(),
            m,
            size: g.points.len(),
            points: g.points.iter().map(|p| rats(p)).collect(),
        };
        let csv = || render(&coordinate_header("x", n), &g.points.iter().map(|p| text_row(p)).collect::<Vec<_>>());
        if let Some(path) = &args.dump_grid_csv {
            write_output(Some(path), &csv()?)?;
        }
        return emit(&value, &args.output, csv);
    }
    let big_m = args.big_m.expect("clap requires --M or --m");
    let cfg = chamber(&sys, &args.chamber)?;
    let g = grid_fm(&sys, &cfg, big_m, args.even)?;
    let value = GridOut {
        system: sys.name(),
        big_m,
        even: args.even,
        size: g.points.len(),
        points: g
            .points
            .iter()
            .map(|p| GridPointOut {
                omega: rats(&p.omega),
                coweight: rats(&p.coweight),
                stabilizer: p.stabilizer as u64,
                even_stabilizer: p.even_stabilizer as u64,
            })
            .collect(),
    };
    let csv = || {
        let mut header = coordinate_header("omega", n);
        header.extend(coordinate_header("coweight", n));
        header.extend(["stabilizer".to_string(), "even_stabilizer".to_string()]);
        let rows: Vec<Vec<String>> = g
            .points
            .iter()
            .map(|p| {
                let mut row = text_row(&p.omega);
                row.extend(text_row(&p.coweight));
                row.extend([p.stabilizer.to_string(), p.even_stabilizer.to_string()]);
                row
            })
            .collect();
        render(&header, &rows)
    };
    if let Some(path) = &args.dump_grid_csv {
        write_output(Some(path), &csv()?)?;
    }
    emit(&value, &args.output, csv)
}

fn parse_spectrum(text: &str) -> CliResult<Vec<Weight>> {
    text.split(';').map(|w| parse_weight(w).map_err(|e| CliError::Usage(format!("--spectrum: {e}")))).collect()
}

fn dft_analyze(args: &AnalyzeArgs) -> CliResult<()> {
    let sys = system(&args.system)?;
    let cfg = chamber(&sys, &args.chamber)?;
    let n = sys.rank();
    let rows = parse_rows(&read_input(&args.samples)?, n, 2)?;
    let samples: Vec<(Weight, Complex64)> =
        rows.iter().map(|r| (r.values.clone(), Complex64::new(r.floats[0], r.floats[1]))).collect();
    let values = align_samples(&sys, args.m, &samples)?;
    let spectrum = if args.spectrum.trim().eq_ignore_ascii_case("auto") {
        spectrum_auto(&sys, &cfg, args.m)?
    } else {
        parse_spectrum(&args.spectrum)?
    };
    let coeffs = analyze(&sys, args.m, &values, &spectrum)?;
    let value: Vec<CoeffOut> =
        coeffs.iter().map(|c| CoeffOut { lambda: rats(&c.lambda), re: F17(c.value.re), im: F17(c.value.im) }).collect();
    emit(&value, &args.output, || {
        let mut header = coordinate_header("lambda", n);
        header.extend(["re".to_string(), "im".to_string()]);
        let rows: Vec<Vec<String>> = coeffs
            .iter()
            .map(|c| {
                let mut row = text_row(&c.lambda);
                row.extend(complex_cells(c.value));
                row
            })
            .collect();
        render(&header, &rows)
    })
}

fn dft_synthesize(args: &SynthesizeArgs) -> CliResult<()> {
    let sys = system(&args.system)?;
    let cfg = chamber(&sys, &args.chamber)?;
    let n = sys.rank();
    let text = read_input(&args.coeffs)?;
    let parsed: Vec<CoeffOut> =
        serde_json::from_str(&text).map_err(|e| Error::InvalidArgument(format!("{}: {e}", args.coeffs.display())))?;
    let coeffs: Vec<Coefficient> = parsed
        .iter()
        .map(|c| Coefficient { lambda: unrats(&c.lambda), value: Complex64::new(c.re.0, c.im.0) })
        .collect();
    let (fields, values): (Vec<Vec<String>>, Vec<Complex64>) = match args.torus {
        Some(m) => {
            let g = grid_tm(&sys, m)?;
            (g.points.iter().map(|p| text_row(p)).collect(), synthesize_tm(&sys, m, &coeffs)?)
        }
        None => {
            let path = args.points.as_ref().expect("clap requires --points or --m");
            let rows = parse_rows(&read_input(path)?, n, 0)?;
            let points: Vec<Weight> = rows.iter().map(|r| r.values.clone()).collect();
            (rows.into_iter().map(|r| r.fields).collect(), synthesize_exact(&sys, &cfg, &coeffs, &points)?)
        }
    };
    let lines: Vec<Vec<String>> = fields
        .into_iter()
        .zip(values)
        .map(|(mut row, v)| {
            row.extend(complex_cells(v));
            row
        })
        .collect();
    let mut header = coordinate_header("x", n);
    header.extend(["re".to_string(), "im".to_string()]);
    write_output(args.out.as_deref(), &render(&header, &lines)?)
}

fn symfunc(args: &SymfuncArgs, orthonormal: bool) -> CliResult<()> {
    if args.m.len() != args.n {
        return Err(Error::RankMismatch { expected: args.n, got: args.m.len() }.into());
    }
    let rows = parse_rows(&read_input(&args.points)?, args.n, 0)?;
    let family = SeparableFamily::hermite(args.m.iter().max().copied().unwrap_or(0) + 1);
    let lines: Vec<Vec<String>> = rows
        .par_iter()
        .map(|r| {
            let x: Vec<f64> = r.values.iter().map(rational_to_f64).collect();
            let v = if orthonormal { sym_poly_eval(&family, &args.m, &x)? } else { sym_hermite_eval(&args.m, &x)? };
            let mut line = r.fields.clone();
            line.push(format_f17(v));
            Ok(line)
        })
        .collect::<eorbit_core::Result<_>>()?;
    let mut header = coordinate_header("x", args.n);
    header.push("value".into());
    write_output(args.out.as_deref(), &render(&header, &lines)?)
}
