//! Command dispatch for the `tamecurve` binary.
//!
//! [`run_command`] is the whole tool minus argument parsing and process
//! exit, so tests drive it directly. Exit codes: 0 decided, 2 unknown or
//! inconclusive, 1 error.

pub mod json;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use tamecurve::curves::{
    decide_equivalence_with, implicitize, is_coordinate, normalize_curve, zl_screen, CoordinateVerdict,
    EquivDecision, EquivOptions, ParamCurve, ZlVerdict,
};
use tamecurve::embeddings::{
    family, irreducible_by_axis_sum, tietze_witness, verify_family_inequivalent, verify_isomorphism,
    AxisSumVerdict, FamilySpec,
};
use tamecurve::groebner::{self, IdealBasis, MonOrder};
use tamecurve::syntax::{parse_bipoly, parse_system, parse_unipoly};
use tamecurve::tame::{canonicalize, decompose, CanonStatus};
use tamecurve::Error;

pub const EXIT_DECIDED: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "tamecurve", version, about = "Plane curves under polynomial automorphisms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    #[command(flatten)]
    pub flags: Flags,
    /// Run every line of the file as a command.
    #[arg(long, value_name = "FILE")]
    pub batch: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, clap::Args)]
pub struct Flags {
    /// Emit one JSON object per command.
    #[arg(long, global = true)]
    pub json: bool,
    /// Show reduction steps in the human-readable output.
    #[arg(long, global = true)]
    pub trace: bool,
    /// Gröbner reduction-step budget.
    #[arg(long, global = true, value_name = "STEPS", default_value_t = groebner::DEFAULT_BUDGET)]
    pub budget: usize,
}

impl Default for Flags {
    fn default() -> Self {
        Self {
            json: false,
            trace: false,
            budget: groebner::DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lex,
    Grlex,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Reduce a polynomial to canonical form.
    Canon {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Decide whether an automorphism takes P to a multiple of Q.
    Equiv {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Implicitize and peak-reduce the curve x = U(t), y = V(t).
    Implicitize {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Decompose x -> G1, y -> G2 into elementary and affine steps.
    Decomp {
        #[arg(allow_hyphen_values = true)]
        g1: String,
        #[arg(allow_hyphen_values = true)]
        g2: String,
    },
    /// Test whether a polynomial is a coordinate.
    Coord {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Screen for an irreducible simply connected zero fiber.
    Zl {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Build and verify the family of isomorphic, inequivalent curves.
    Family {
        #[arg(long = "k")]
        k: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u32>,
    },
    /// Reduced Gröbner basis and consistency of a polynomial system.
    Groebner {
        #[arg(required = true)]
        polys: Vec<String>,
        #[arg(long, value_enum, default_value_t = OrderArg::Grlex)]
        order: OrderArg,
    },
}

/// Exit code and printed text of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn new(code: i32, human: String, machine: Value, flags: &Flags) -> Self {
        let output = if flags.json { machine.to_string() } else { human };
        Outcome { code, output }
    }

    fn error(e: &Error, flags: &Flags) -> Self {
        let human = format!("error: {} ({})", e, e.name());
        Outcome::new(EXIT_ERROR, human, json::error(e), flags)
    }
}

pub fn run_command(cmd: &Command, flags: &Flags) -> Outcome {
    dispatch(cmd, flags).unwrap_or_else(|e| Outcome::error(&e, flags))
}

fn dispatch(cmd: &Command, flags: &Flags) -> Result<Outcome, Error> {
    match cmd {
        Command::Canon { poly } => canon(&parse_bipoly(poly)?, flags),
        Command::Equiv { p, q } => equiv(&parse_bipoly(p)?, &parse_bipoly(q)?, flags),
        Command::Implicitize { u, v } => {
            let curve = ParamCurve::new(parse_unipoly(u)?, parse_unipoly(v)?)?;
            implicit(&curve, flags)
        }
        Command::Decomp { g1, g2 } => decomp(&parse_bipoly(g1)?, &parse_bipoly(g2)?, flags),
        Command::Coord { poly } => coord(&parse_bipoly(poly)?, flags),
        Command::Zl { poly } => zl(&parse_bipoly(poly)?, flags),
        Command::Family { k, primes } => fam(&FamilySpec::new(*k, primes.clone())?, flags),
        Command::Groebner { polys, order } => {
            let texts: Vec<&str> = polys.iter().map(String::as_str).collect();
            gb(&texts, *order, flags)
        }
    }
}

fn canon(p: &tamecurve::poly::BiPoly, flags: &Flags) -> Result<Outcome, Error> {
    let c = canonicalize(p);
    let code = match c.status {
        CanonStatus::Canonical | CanonStatus::LinearPoly => EXIT_DECIDED,
        _ => EXIT_UNKNOWN,
    };
    let status = match &c.status {
        CanonStatus::Canonical => "canonical",
        CanonStatus::LinearPoly => "linear",
        CanonStatus::NonTriangular => "non_triangular",
        CanonStatus::FieldObstruction(_) => "field_obstruction",
    };
    let required = match &c.status {
        CanonStatus::FieldObstruction(r) => Value::String(r.to_string()),
        _ => Value::Null,
    };
    let profile = c.profile().map(|f| json!([f.n, f.m]));
    let machine = json!({
        "canonical": c.poly.to_string(),
        "status": status,
        "profile": profile,
        "required_root": required,
        "trace": json::auto_trace(&c.auto, p),
    });
    let mut human = format!("{}\nstatus: {}", c.poly, c.status);
    if let Some(f) = c.profile() {
        let _ = write!(human, "\nprofile: (n, m) = ({}, {})", f.n, f.m);
    }
    if flags.trace {
        let mut current = p.clone();
        for step in &c.auto.steps {
            current = step.apply(&current);
            let _ = write!(human, "\n  {step}  =>  {current}");
        }
    }
    Ok(Outcome::new(code, human, machine, flags))
}

fn equiv(p: &tamecurve::poly::BiPoly, q: &tamecurve::poly::BiPoly, flags: &Flags) -> Result<Outcome, Error> {
    let opts = EquivOptions {
        budget: flags.budget,
        ..EquivOptions::default()
    };
    let d = decide_equivalence_with(p, q, &opts)?;
    let human = match &d {
        EquivDecision::Equivalent { witness, scale } => {
            let mut s = String::from("Equivalent\nwitness:");
            if witness.steps.is_empty() {
                s.push_str(" identity");
            }
            for step in &witness.steps {
                let _ = write!(s, "\n  {step}");
            }
            let _ = write!(s, "\nscale: {}", tamecurve::poly::rat::fmt_rat(scale));
            s
        }
        EquivDecision::Inequivalent { reason } => format!("Inequivalent\nreason: {reason}"),
        EquivDecision::Unknown { reason } => format!("Unknown\nreason: {reason}"),
    };
    let code = if matches!(d, EquivDecision::Unknown { .. }) { EXIT_UNKNOWN } else { EXIT_DECIDED };
    Ok(Outcome::new(code, human, json::decision(&d, p), flags))
}

fn implicit(curve: &ParamCurve, flags: &Flags) -> Result<Outcome, Error> {
    let r = implicitize(curve)?;
    let (reduced, trace, _) = normalize_curve(curve);
    let machine = json!({
        "p": r.p.to_string(),
        "mult": r.mult,
        "normalized": {"u": reduced.u.to_string(), "v": reduced.v.to_string()},
        "trace": json::et_trace(&trace),
    });
    let mut human = format!("{}\nmultiplicity: {}", r.p, r.mult);
    let _ = write!(human, "\npeak-reduced: ({}, {})", reduced.u, reduced.v);
    if flags.trace {
        for (step, deg) in trace.steps.iter().zip(&trace.degree_profile) {
            let d = deg.map_or("-inf".to_string(), |d| d.to_string());
            let _ = write!(human, "\n  {}  max degree {d}", json::et_step(step));
        }
    }
    Ok(Outcome::new(EXIT_DECIDED, human, machine, flags))
}

fn decomp(g1: &tamecurve::poly::BiPoly, g2: &tamecurve::poly::BiPoly, flags: &Flags) -> Result<Outcome, Error> {
    let Some(auto) = decompose(g1, g2) else {
        let machine = json!({"verdict": "not_automorphism", "witness": null});
        return Ok(Outcome::new(EXIT_DECIDED, "not an automorphism".into(), machine, flags));
    };
    let mut human = String::from("automorphism:");
    for step in &auto.steps {
        let _ = write!(human, "\n  {step}");
    }
    let machine = json!({
        "verdict": "automorphism",
        "witness": json::auto_trace(&auto, &tamecurve::poly::BiPoly::x()),
    });
    Ok(Outcome::new(EXIT_DECIDED, human, machine, flags))
}

fn coord(p: &tamecurve::poly::BiPoly, flags: &Flags) -> Result<Outcome, Error> {
    Ok(match is_coordinate(p)? {
        CoordinateVerdict::Coordinate { witness } => {
            let machine = json!({
                "verdict": "coordinate",
                "witness": json::auto_trace(&witness, p),
                "reason": "canonical form is linear",
            });
            let mut human = String::from("coordinate");
            if flags.trace {
                for step in &witness.steps {
                    let _ = write!(human, "\n  {step}");
                }
            }
            Outcome::new(EXIT_DECIDED, human, machine, flags)
        }
        CoordinateVerdict::NotCoordinate { degree } => {
            let reason = format!("canonical form has degree {degree}");
            let machine = json!({"verdict": "not_coordinate", "witness": null, "reason": reason});
            Outcome::new(EXIT_DECIDED, format!("not coordinate\nreason: {reason}"), machine, flags)
        }
        CoordinateVerdict::Unknown { reason } => {
            let machine = json!({"verdict": "unknown", "witness": null, "reason": reason});
            Outcome::new(EXIT_UNKNOWN, format!("unknown\nreason: {reason}"), machine, flags)
        }
    })
}

fn zl(p: &tamecurve::poly::BiPoly, flags: &Flags) -> Result<Outcome, Error> {
    Ok(match zl_screen(p)? {
        ZlVerdict::Candidate { k, l } => Outcome::new(
            EXIT_DECIDED,
            format!("candidate: x^{k} - y^{l}"),
            json!({"verdict": "candidate", "k": k, "l": l, "reasons": []}),
            flags,
        ),
        ZlVerdict::Reject { reasons } => Outcome::new(
            EXIT_DECIDED,
            format!("reject\n{}", reasons.iter().map(|r| format!("  {r}")).collect::<Vec<_>>().join("\n")),
            json!({"verdict": "reject", "k": null, "l": null, "reasons": reasons}),
            flags,
        ),
        ZlVerdict::Undetermined { reason } => Outcome::new(
            EXIT_UNKNOWN,
            format!("undetermined\nreason: {reason}"),
            json!({"verdict": "undetermined", "k": null, "l": null, "reasons": [reason]}),
            flags,
        ),
    })
}

fn fam(spec: &FamilySpec, flags: &Flags) -> Result<Outcome, Error> {
    let fs = family(spec)?;
    let report = verify_family_inequivalent(&fs)?;
    let mut isos = Vec::new();
    for j in 1..spec.k {
        let w = tietze_witness(spec, j)?;
        let ok = verify_isomorphism(&fs[j - 1], &fs[j], &w)?;
        if !ok {
            return Err(Error::VerificationFailed(format!("isomorphism f{j} -> f{}", j + 1)));
        }
        isos.push((j, w));
    }
    let axis = irreducible_by_axis_sum(&fs[0]);
    let axis_name = match axis {
        AxisSumVerdict::Irreducible => "irreducible",
        AxisSumVerdict::Inconclusive => "inconclusive",
    };

    let mut human = String::new();
    for (j, f) in fs.iter().enumerate() {
        let _ = writeln!(human, "f{} = {}", j + 1, f);
    }
    for r in &report {
        let _ = writeln!(
            human,
            "f{} vs f{}: inequivalent (canonical profiles ({}, {}) and ({}, {}))",
            r.i, r.j, r.profile_i.0, r.profile_i.1, r.profile_j.0, r.profile_j.1
        );
    }
    for (j, w) in &isos {
        let _ = writeln!(
            human,
            "f{j} ~ f{}: isomorphic rings via y -> {} / y -> {} (verified)",
            j + 1,
            w.forward.1,
            w.backward.1
        );
    }
    let _ = write!(human, "f1 irreducible by axis-sum criterion: {}", axis == AxisSumVerdict::Irreducible);

    let machine = json!({
        "polynomials": fs.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "degrees": fs.iter().map(|f| f.total_degree()).collect::<Vec<_>>(),
        "inequivalent": report.iter().map(|r| json!({
            "i": r.i, "j": r.j,
            "profile_i": [r.profile_i.0, r.profile_i.1],
            "profile_j": [r.profile_j.0, r.profile_j.1],
        })).collect::<Vec<_>>(),
        "isomorphisms": isos.iter().map(|(j, w)| json!({
            "j": j,
            "forward": [w.forward.0.to_string(), w.forward.1.to_string()],
            "backward": [w.backward.0.to_string(), w.backward.1.to_string()],
            "verified": true,
        })).collect::<Vec<_>>(),
        "axis_sum_f1": axis_name,
    });
    Ok(Outcome::new(EXIT_DECIDED, human, machine, flags))
}

fn gb(texts: &[&str], order: OrderArg, flags: &Flags) -> Result<Outcome, Error> {
    let system = parse_system(texts)?;
    let vars: Vec<String> = system[0].vars().to_vec();
    let (mon, order_name) = match order {
        OrderArg::Lex => (MonOrder::lex(vars.len()), "lex"),
        OrderArg::Grlex => (MonOrder::grlex(vars.len()), "grlex"),
    };
    let basis = IdealBasis::new(system, mon);
    match groebner::buchberger_with_budget(&basis, flags.budget) {
        Ok(gb) => {
            let polys: Vec<String> = gb.generators.iter().map(|g| g.to_string()).collect();
            let consistent = !gb.is_unit();
            let machine = json!({
                "variables": vars,
                "order": order_name,
                "basis": polys,
                "consistent": consistent,
            });
            let human = format!(
                "basis ({order_name}, {}):\n{}\n{}",
                vars.join(" > "),
                polys.iter().map(|p| format!("  {p}")).collect::<Vec<_>>().join("\n"),
                if consistent { "consistent over the algebraic closure" } else { "inconsistent" }
            );
            Ok(Outcome::new(EXIT_DECIDED, human, machine, flags))
        }
        Err(Error::BudgetExhausted(b)) => {
            let reason = format!("Gröbner budget of {b} steps exhausted");
            let machine = json!({
                "variables": vars,
                "order": order_name,
                "basis": null,
                "consistent": null,
                "reason": reason,
            });
            Ok(Outcome::new(EXIT_UNKNOWN, format!("unknown\nreason: {reason}"), machine, flags))
        }
        Err(e) => Err(e),
    }
}

/// Runs each nonblank, non-comment line of a batch file as a command line
/// (without the program name). Lines run concurrently; outputs keep their
/// order. The combined exit code is the worst one: error, then unknown.
pub fn run_batch(text: &str, flags: &Flags) -> Vec<Outcome> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    lines.par_iter().map(|line| run_line(line, flags)).collect()
}

/// Parses one command line (without the program name) and runs it.
pub fn run_line(line: &str, flags: &Flags) -> Outcome {
    let Some(words) = shlex::split(line) else {
        return Outcome::error(&Error::ParseError { pos: 0, msg: "unbalanced quotes".into() }, flags);
    };
    let argv = std::iter::once("tamecurve".to_string()).chain(words);
    match Cli::try_parse_from(argv) {
        Ok(Cli { command: Some(cmd), flags: line_flags, .. }) => {
            let merged = Flags {
                json: flags.json || line_flags.json,
                trace: flags.trace || line_flags.trace,
                budget: line_flags.budget.min(flags.budget),
            };
            run_command(&cmd, &merged)
        }
        Ok(_) => Outcome::error(&Error::ParseError { pos: 0, msg: "missing command".into() }, flags),
        Err(e) => {
            let msg = e.to_string().lines().next().unwrap_or_default().to_string();
            Outcome::error(&Error::ParseError { pos: 0, msg }, flags)
        }
    }
}

pub fn combined_code(outcomes: &[Outcome]) -> i32 {
    if outcomes.iter().any(|o| o.code == EXIT_ERROR) {
        EXIT_ERROR
    } else if outcomes.iter().any(|o| o.code == EXIT_UNKNOWN) {
        EXIT_UNKNOWN
    } else {
        EXIT_DECIDED
    }
}
