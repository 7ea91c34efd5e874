use std::fmt::Write;

use recpow::audit::{self, GridOverrides, Selection};
use recpow::binsum::{binom_sum_closed, binom_sum_direct};
use recpow::gfpow::{check_against_oracle, gf_oracle, gf_power};
use recpow::partsum::{partial_sum_closed, partial_sum_direct, PartialSumQuery, Route};
use recpow::polyrat::render::{render, render_poly, Style};
use recpow::qfield::rational;
use recpow::seq::SequenceHandle;
use recpow::{Rational, RecurrenceSpec};
use serde_json::json;

use super::args::{AuditArgs, AuditFormat, BinomSumArgs, Command, GfArgs, GfFormat, Mode, SeqArgs, SpecArgs, SumArgs};
use super::{Cli, Config, Failure, EXIT_MISMATCH, EXIT_OK, EXIT_ORACLE};

/// What to print on stdout and the exit code to finish with.
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, stderr: String::new(), code: EXIT_OK }
    }
}

pub fn run(cli: Cli) -> Result<Output, Failure> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    match cli.command {
        Command::Seq(args) => seq(args),
        Command::Gf(args) => gf(args, &config),
        Command::Sum(args) => sum(args),
        Command::BinomSum(args) => binom_sum(args),
        Command::Audit(args) => run_audit(args, &config),
    }
}

fn preset(name: &str) -> Result<RecurrenceSpec, Failure> {
    Ok(match name {
        "fibonacci" => RecurrenceSpec::fibonacci(),
        "lucas" => RecurrenceSpec::lucas(),
        "pell" => RecurrenceSpec::pell(),
        "pell-q" => RecurrenceSpec::pell_q(),
        other => {
            let params = other
                .strip_prefix("gen-pell:")
                .ok_or_else(|| Failure::usage(format!("unknown preset `{other}`")))?;
            let (p, q) = params
                .split_once(',')
                .ok_or_else(|| Failure::usage("gen-pell expects gen-pell:P,Q"))?;
            let parse = |s: &str| {
                s.trim().parse::<Rational>().map_err(|_| Failure::usage(format!("gen-pell: `{s}` is not a rational")))
            };
            RecurrenceSpec::generalized_pell(parse(p)?, parse(q)?)
        }
    })
}

fn spec(args: &SpecArgs) -> Result<RecurrenceSpec, Failure> {
    if let Some(name) = &args.preset {
        return preset(name);
    }
    let (Some(a), Some(b)) = (args.a, args.b) else {
        return Err(Failure::usage("give --preset or both --a and --b"));
    };
    let u0 = args.u0.clone().unwrap_or_else(|| rational(0));
    let u1 = args.u1.clone().unwrap_or_else(|| rational(1));
    Ok(RecurrenceSpec::new(a, b, u0, u1)?)
}

fn seq(args: SeqArgs) -> Result<Output, Failure> {
    let spec = spec(&args.spec)?;
    let handle = if args.companion { SequenceHandle::v(&spec) } else { SequenceHandle::u(&spec) };
    let value = if args.fast {
        let n = u64::try_from(args.n).map_err(|_| Failure::usage("--fast needs n >= 0"))?;
        handle.term_fast(n)
    } else {
        handle.term(args.n)
    };
    Ok(Output::ok(format!("{value}\n")))
}

fn gf(args: GfArgs, config: &Config) -> Result<Output, Failure> {
    if args.power == 0 {
        return Err(Failure::usage("--power must be at least 1"));
    }
    let spec = spec(&args.spec)?;
    let format = match args.format {
        Some(f) => f,
        None => match config.get("format") {
            None | Some("text") => GfFormat::Text,
            Some("latex") => GfFormat::Latex,
            Some("structured") => GfFormat::Structured,
            Some(other) => return Err(Failure::usage(format!("config `format`: unknown value `{other}`"))),
        },
    };
    let check_terms = match args.check_terms {
        Some(n) => Some(n),
        None => config.number::<usize>("check-terms")?,
    };
    let f = gf_power(&spec, args.power)?;
    let mut stderr = String::new();
    if let Some(order) = check_terms {
        if let Some(i) = check_against_oracle(&spec, args.power, order)? {
            let series = f.expand(order)?;
            let oracle = gf_oracle(&spec, args.power, order);
            return Err(Failure::new(
                EXIT_ORACLE,
                format!(
                    "series coefficient {i} is {} but U_{i}^{} = {}",
                    series.coeffs()[i],
                    args.power,
                    oracle.coeffs()[i]
                ),
            ));
        }
        let _ = writeln!(stderr, "first {order} coefficients agree with U_n^{}", args.power);
    }
    let stdout = match format {
        GfFormat::Text => format!("{}\n", render(&f, Style::Text)),
        GfFormat::Latex => format!("{}\n", render(&f, Style::Latex)),
        GfFormat::Structured => {
            let coeffs = |p: &recpow::polyrat::Polynomial<Rational>| -> Vec<String> {
                p.coeffs().iter().map(|c| c.to_string()).collect()
            };
            let doc = json!({
                "spec": spec.to_string(),
                "power": args.power.to_string(),
                "numerator": coeffs(f.num()),
                "denominator": coeffs(f.den()),
                "text": render(&f, Style::Text),
                "latex": render(&f, Style::Latex),
                "denominator_text": render_poly(f.den(), Style::Text),
                "checked_terms": check_terms.map(|n| n.to_string()),
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json"))
        }
    };
    Ok(Output { stdout, stderr, code: EXIT_OK })
}

fn compare(direct: Option<String>, closed: Option<String>, note: Option<&str>) -> Output {
    let mut stdout = String::new();
    let mut code = EXIT_OK;
    let mut stderr = String::new();
    if let Some(d) = &direct {
        let _ = writeln!(stdout, "direct: {d}");
    }
    if let Some(c) = &closed {
        match note {
            Some(n) => {
                let _ = writeln!(stdout, "closed ({n}): {c}");
            }
            None => {
                let _ = writeln!(stdout, "closed: {c}");
            }
        }
    }
    if let (Some(d), Some(c)) = (&direct, &closed) {
        if d == c {
            stdout.push_str("match\n");
        } else {
            stdout.push_str("mismatch\n");
            let _ = writeln!(stderr, "closed form disagrees with direct sum: {c} != {d}");
            code = EXIT_MISMATCH;
        }
    }
    Output { stdout, stderr, code }
}

fn sum(args: SumArgs) -> Result<Output, Failure> {
    if args.power == 0 {
        return Err(Failure::usage("--power must be at least 1"));
    }
    let spec = spec(&args.spec)?;
    let q = PartialSumQuery { spec, n: args.n, r: args.power, x: args.x };
    let mode = args.mode.mode();
    let direct = match mode {
        Mode::Closed => None,
        _ => Some(partial_sum_direct(&q)?.to_string()),
    };
    let (closed, note) = match mode {
        Mode::Direct => (None, None),
        _ => {
            let c = partial_sum_closed(&q)?;
            let note = (c.route == Route::GeneralB).then_some("general-b route");
            (Some(c.sum.to_string()), note)
        }
    };
    Ok(compare(direct, closed, note))
}

fn binom_sum(args: BinomSumArgs) -> Result<Output, Failure> {
    let spec = spec(&args.spec)?;
    let (r, n, x) = (args.power, args.n, &args.x);
    let mode = args.mode.mode();
    let direct = (mode != Mode::Closed).then(|| binom_sum_direct(&spec, r, n, x).to_string());
    let closed = match mode {
        Mode::Direct => None,
        _ => Some(binom_sum_closed(&spec, r, n, x)?.to_string()),
    };
    Ok(compare(direct, closed, None))
}

fn run_audit(args: AuditArgs, config: &Config) -> Result<Output, Failure> {
    if args.list {
        let mut out = String::new();
        for c in audit::claims() {
            let _ = writeln!(out, "{:<20} [{}] {}", c.id, c.locus, c.description);
        }
        return Ok(Output::ok(out));
    }
    let claims = args.claims.clone().or_else(|| config.get("claims").map(str::to_string)).unwrap_or_else(|| "all".into());
    let overrides = GridOverrides {
        max_n: match args.max_n {
            Some(n) => Some(n),
            None => config.number("max-n")?,
        },
        max_r: match args.max_r {
            Some(r) => Some(r),
            None => config.number("max-r")?,
        },
    };
    let format = match args.format {
        Some(f) => f,
        None => match config.get("format") {
            None | Some("text") => AuditFormat::Text,
            Some("structured") => AuditFormat::Structured,
            Some(other) => return Err(Failure::usage(format!("config `format`: unknown value `{other}`"))),
        },
    };
    let run = audit::run_audit(&Selection::parse(&claims), &overrides)?;
    let report = match format {
        AuditFormat::Text => audit::render_text(&run),
        AuditFormat::Structured => audit::render_structured(&run),
    };
    let code = if run.has_failures() { EXIT_MISMATCH } else { EXIT_OK };
    match args.out {
        Some(path) => {
            std::fs::write(&path, report)
                .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
            let failing = run.claims.iter().filter(|c| c.totals().fail > 0).count();
            Ok(Output {
                stdout: String::new(),
                stderr: format!("wrote {} ({} claims, {} with failures)\n", path.display(), run.claims.len(), failing),
                code,
            })
        }
        None => Ok(Output { stdout: report, stderr: String::new(), code }),
    }
}
