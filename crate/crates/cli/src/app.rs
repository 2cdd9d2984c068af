//! Command dispatch. [`run`] takes the argument list and output streams and
//! returns the process exit code, so tests can drive it in-process.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use plethora::deltaplet::{
    delta_op, dwork_action, lambda_from_adams, lambda_p_membership, linearization_report,
    FrobeniusLift,
};
use plethora::symfunc::{change_basis, Basis};
use plethora::witt::{
    artin_hasse, from_ghost, series_of, teichmuller, witt_of_series, GhostVector, PowerSeries,
};
use plethora::{AlgebraError, RingDescriptor, RingElement, TruncationSet, WittVector};

use crate::{expr, suites};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "plethora",
    version,
    about = "Exact symmetric functions, Witt vectors and delta-rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Symmetric functions: parse, evaluate, change basis, test membership.
    #[command(subcommand)]
    Sym(SymCommand),
    /// Witt vector arithmetic.
    #[command(subcommand)]
    Witt(WittCommand),
    /// Artin-Hasse map W -> W(W), p-typical.
    Ah {
        #[command(flatten)]
        shape: Shape,
        /// Outer length.
        #[arg(long)]
        r: u32,
        /// Inner length.
        #[arg(long)]
        s: u32,
        #[arg(allow_hyphen_values = true)]
        vector: String,
    },
    /// Witt vector with ghost components r, f(r), f(f(r)), ... for a Frobenius lift f.
    Dwork {
        #[command(flatten)]
        lift: LiftArgs,
        /// The element r.
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long)]
        len: u32,
        #[arg(long)]
        json: bool,
    },
    /// The p-derivation delta(r) = (f(r) - r^p)/p.
    Delta {
        #[command(flatten)]
        lift: LiftArgs,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    /// lambda_0..lambda_N from Adams operations psi_1..psi_N.
    Lambda {
        #[arg(long, default_value = "Z")]
        ring: String,
        /// Values of psi_1, ..., psi_N.
        #[arg(required = true, allow_hyphen_values = true)]
        psi: Vec<String>,
    },
    /// Run identity suites; exits 1 if any fails.
    Check {
        /// Run every suite.
        #[arg(long)]
        all: bool,
        /// Suites to run, by number or name fragment.
        suites: Vec<String>,
        #[arg(long)]
        json: bool,
        /// List the suites without running them.
        #[arg(long)]
        list: bool,
    },
    /// Linearization checks of the p-typical layer.
    Linearize {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum SymCommand {
    /// Print the syntax tree of an expression.
    Parse {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Evaluate an expression.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_parser = parse_basis)]
        to: Option<Basis>,
    },
    /// Evaluate an expression and rewrite it in another basis.
    Convert {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_parser = parse_basis)]
        to: Basis,
    },
    /// Decide membership in the p-typical layer, printing a theta-polynomial.
    Member {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        p: u32,
    },
}

#[derive(Args, Debug, Clone)]
struct Shape {
    /// Prime for p-typical truncation {1, p, ..., p^(len-1)}.
    #[arg(long)]
    p: Option<u32>,
    /// Length; without --p this is the big truncation {1..len}.
    #[arg(long)]
    len: Option<u32>,
    /// Explicit truncation set, e.g. 1,2,4.
    #[arg(long)]
    trunc: Option<String>,
    /// Coefficients modulo m; 0 means Z.
    #[arg(long = "mod")]
    modulus: Option<u64>,
    /// Coefficient ring, e.g. Z, Q, Z/4, Z[x].
    #[arg(long)]
    ring: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum WittCommand {
    Add {
        #[command(flatten)]
        shape: Shape,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Mul {
        #[command(flatten)]
        shape: Shape,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Neg {
        #[command(flatten)]
        shape: Shape,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Ghost components.
    Ghost {
        #[command(flatten)]
        shape: Shape,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Witt vector with the given ghost components.
    Unghost {
        #[command(flatten)]
        shape: Shape,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Teichmuller representative (b, 0, 0, ...).
    Teich {
        #[command(flatten)]
        shape: Shape,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Frobenius F_n.
    Frob {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        n: u32,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Verschiebung V_n into the smallest truncation containing T and nT.
    Versch {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        n: u32,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// The power series prod (1 - a_n t^n), or with --inverse its Witt vector.
    Series {
        #[command(flatten)]
        shape: Shape,
        /// Read a list of series coefficients and factor it instead.
        #[arg(long)]
        inverse: bool,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
}

#[derive(Args, Debug, Clone)]
struct LiftArgs {
    /// Z, or a polynomial ring Z[x].
    #[arg(long, default_value = "Z")]
    ring: String,
    #[arg(long)]
    p: u32,
    /// Image of the generator; defaults to x^p.
    #[arg(long)]
    lift: Option<String>,
    /// Skip the congruence check on the lift.
    #[arg(long)]
    unchecked: bool,
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    let mut chars = s.chars();
    match (chars.next().and_then(Basis::from_symbol), chars.next()) {
        (Some(b), None) => Ok(b),
        _ => Err(format!("unknown basis `{s}`; expected one of m, e, p, w")),
    }
}

/// Failure of a command: usage problems exit 2, algebra errors exit 3.
enum Failure {
    Usage(String),
    Domain(AlgebraError),
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        match e {
            // malformed input text is a usage problem
            AlgebraError::Parse { offset, message } => {
                Failure::Usage(format!("SyntaxError at offset {offset}: {message}"))
            }
            e => Failure::Domain(e),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the command line `args` (program name first).
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "{msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            // the Display text already leads with the error kind
            let _ = writeln!(err, "{e}");
            EXIT_DOMAIN
        }
    }
}

fn put(out: &mut dyn Write, text: impl std::fmt::Display) -> Outcome {
    writeln!(out, "{text}").map_err(|e| Failure::Usage(format!("write failed: {e}")))?;
    Ok(EXIT_OK)
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Sym(c) => sym(c, out),
        Command::Witt(c) => witt(c, out),
        Command::Ah {
            shape,
            r,
            s,
            vector,
        } => {
            let p = shape
                .p
                .ok_or_else(|| Failure::Usage("ah needs --p".into()))?;
            let a = shape.vector(&vector)?;
            put(out, artin_hasse(&a, p, r, s)?)
        }
        Command::Dwork { lift, r, len, json } => {
            let lift = lift.build()?;
            let r = RingElement::parse(lift.ring(), &r)?;
            let w = dwork_action(&lift, &r, len)?;
            if json {
                put(out, w.to_json())
            } else {
                put(out, w)
            }
        }
        Command::Delta { lift, r } => {
            let lift = lift.build()?;
            let r = RingElement::parse(lift.ring(), &r)?;
            put(out, delta_op(&lift, &r)?)
        }
        Command::Lambda { ring, psi } => {
            let ring = RingDescriptor::parse(&ring)?;
            let psi = psi
                .iter()
                .map(|t| RingElement::parse(&ring, t))
                .collect::<plethora::Result<Vec<_>>>()?;
            let lambda = lambda_from_adams(&psi)?;
            let shown: Vec<String> = lambda.iter().map(ToString::to_string).collect();
            put(out, format!("[{}]", shown.join(",")))
        }
        Command::Check {
            all,
            suites: keys,
            json,
            list,
        } => check(all, &keys, json, list, out),
        Command::Linearize { p, json } => {
            let report = linearization_report(p)?;
            if json {
                let v = serde_json::to_value(&report).expect("serializable report");
                put(out, v)?;
            } else {
                for c in &report {
                    let status = if c.passed() { "pass" } else { "fail" };
                    put(out, format!("{status} {}: {}", c.check, c.witness))?;
                }
            }
            Ok(if report.iter().all(|c| c.passed()) {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
    }
}

fn sym(cmd: SymCommand, out: &mut dyn Write) -> Outcome {
    match cmd {
        SymCommand::Parse { expr } => put(out, expr::parse(&expr)?.tree()),
        SymCommand::Eval { expr, to } => {
            let f = expr::eval_str(&expr)?;
            match to {
                Some(b) => put(out, change_basis(&f, b)?),
                None => put(out, f),
            }
        }
        SymCommand::Convert { expr, to } => put(out, change_basis(&expr::eval_str(&expr)?, to)?),
        SymCommand::Member { expr, p } => {
            let f = expr::eval_str(&expr)?;
            let f = if f.is_integral() { f.integralize()? } else { f };
            match lambda_p_membership(&f, p)? {
                Some(word) => put(out, word),
                None => {
                    put(out, "not in the p-typical layer")?;
                    Ok(EXIT_CHECK_FAILED)
                }
            }
        }
    }
}

impl Shape {
    fn trunc(&self) -> Result<TruncationSet, Failure> {
        match (&self.trunc, self.p, self.len) {
            (Some(t), None, None) => Ok(TruncationSet::parse(t)?),
            (None, Some(p), Some(len)) => Ok(TruncationSet::p_typical(p, len)?),
            (None, None, Some(len)) => Ok(TruncationSet::big(len)),
            _ => Err(Failure::Usage(
                "give the truncation as --p P --len N, --len N (big) or --trunc 1,2,4".into(),
            )),
        }
    }

    fn ring(&self) -> Result<RingDescriptor, Failure> {
        match (&self.ring, self.modulus) {
            (Some(r), None) => Ok(RingDescriptor::parse(r)?),
            (None, Some(0)) | (None, None) => Ok(RingDescriptor::Integer),
            (None, Some(m)) => Ok(RingDescriptor::modular(m)?),
            (Some(_), Some(_)) => Err(Failure::Usage(
                "give at most one of --ring and --mod".into(),
            )),
        }
    }

    fn vector(&self, text: &str) -> Result<WittVector, Failure> {
        let items = split_list(text)?;
        Ok(WittVector::parse(self.trunc()?, &self.ring()?, &items)?)
    }

    fn show(&self, w: &WittVector, out: &mut dyn Write) -> Outcome {
        if self.json {
            put(out, w.to_json())
        } else {
            put(out, w)
        }
    }
}

/// Splits `[a,b,c]` at top-level commas.
fn split_list(text: &str) -> Result<Vec<&str>, Failure> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Failure::Usage(format!("expected a bracketed list, got `{text}`")))?;
    let mut items = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in inner.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                items.push(inner[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if !inner.trim().is_empty() {
        items.push(inner[start..].trim());
    }
    Ok(items)
}

fn witt(cmd: WittCommand, out: &mut dyn Write) -> Outcome {
    match cmd {
        WittCommand::Add { shape, a, b } => {
            let r = shape.vector(&a)?.try_add(&shape.vector(&b)?)?;
            shape.show(&r, out)
        }
        WittCommand::Mul { shape, a, b } => {
            let r = shape.vector(&a)?.try_mul(&shape.vector(&b)?)?;
            shape.show(&r, out)
        }
        WittCommand::Neg { shape, a } => shape.show(&shape.vector(&a)?.neg()?, out),
        WittCommand::Ghost { shape, a } => {
            let g = shape.vector(&a)?.ghost();
            if shape.json {
                let entries: Vec<String> = g
                    .values()
                    .iter()
                    .map(|v| g.ring().format_value(v))
                    .collect();
                put(
                    out,
                    serde_json::json!({
                        "trunc": g.trunc().members(),
                        "ring": g.ring().to_string(),
                        "ghost": entries,
                    }),
                )
            } else {
                put(out, g)
            }
        }
        WittCommand::Unghost { shape, g } => {
            let (t, ring) = (shape.trunc()?, shape.ring()?);
            let values = split_list(&g)?
                .into_iter()
                .map(|s| ring.parse_value(s))
                .collect::<plethora::Result<Vec<_>>>()?;
            let w = from_ghost(&GhostVector::new(t, ring, values)?)?;
            shape.show(&w, out)
        }
        WittCommand::Teich { shape, b } => {
            let b = RingElement::parse(&shape.ring()?, &b)?;
            shape.show(&teichmuller(&b, &shape.trunc()?), out)
        }
        WittCommand::Frob { shape, n, a } => shape.show(&shape.vector(&a)?.frobenius(n)?, out),
        WittCommand::Versch { shape, n, a } => {
            let a = shape.vector(&a)?;
            let target = WittVector::verschiebung_target(a.trunc(), n);
            shape.show(&a.verschiebung(n, &target)?, out)
        }
        WittCommand::Series { shape, inverse, a } => {
            if inverse {
                let ring = shape.ring()?;
                let coeffs = split_list(&a)?
                    .into_iter()
                    .map(|s| ring.parse_value(s))
                    .collect::<plethora::Result<Vec<_>>>()?;
                let w = witt_of_series(&PowerSeries::new(ring, coeffs)?)?;
                shape.show(&w, out)
            } else {
                put(out, series_of(&shape.vector(&a)?)?)
            }
        }
    }
}

impl LiftArgs {
    fn build(&self) -> Result<FrobeniusLift, Failure> {
        let ring = RingDescriptor::parse(&self.ring)?;
        if ring == RingDescriptor::Integer {
            if self.lift.is_some() {
                return Err(Failure::Usage(
                    "the only endomorphism of Z is the identity".into(),
                ));
            }
            return Ok(FrobeniusLift::integers(self.p)?);
        }
        Ok(match (&self.lift, self.unchecked) {
            (None, _) => FrobeniusLift::power_map(&ring, self.p)?,
            (Some(img), false) => {
                FrobeniusLift::polynomial(&ring, self.p, &RingElement::parse(&ring, img)?)?
            }
            (Some(img), true) => FrobeniusLift::unchecked_polynomial(
                &ring,
                self.p,
                &RingElement::parse(&ring, img)?,
            )?,
        })
    }
}

fn check(all: bool, keys: &[String], json: bool, list: bool, out: &mut dyn Write) -> Outcome {
    if list {
        for s in suites::SUITES {
            put(out, format!("{:>2} {}", s.id, s.name))?;
        }
        return Ok(EXIT_OK);
    }
    let chosen: Vec<&suites::Suite> = match (all, keys.is_empty()) {
        (true, true) => suites::SUITES.iter().collect(),
        (false, false) => {
            let mut chosen = Vec::new();
            for k in keys {
                let found = suites::select(k);
                if found.is_empty() {
                    return Err(Failure::Usage(format!("no suite matches `{k}`")));
                }
                chosen.extend(found);
            }
            chosen.sort_by_key(|s| s.id);
            chosen.dedup_by_key(|s| s.id);
            chosen
        }
        (true, false) => return Err(Failure::Usage("--all takes no suite names".into())),
        (false, true) => return Err(Failure::Usage("name suites to run, or pass --all".into())),
    };
    let reports = suites::run_parallel(&chosen);
    if json {
        let v: Vec<_> = reports.iter().map(suites::Report::to_json).collect();
        put(out, serde_json::Value::Array(v))?;
    } else {
        for r in &reports {
            put(out, r.line())?;
        }
        let failed = reports.iter().filter(|r| !r.passed()).count();
        put(
            out,
            format!("{} passed, {failed} failed", reports.len() - failed),
        )?;
    }
    Ok(if reports.iter().all(suites::Report::passed) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}
