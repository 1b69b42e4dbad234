use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use e36_core::e36::{check_relation_suite, g0_weight, Status, Weight};
use e36_core::e510::{super_bracket, Grading, SuperElement};
use e36_core::g0rep::IrrepF;
use e36_core::induced::{parametric_y_search, singular_search, InducedElement, InducedModule, YCondition};
use e36_core::parse::{parse_element, parse_expression, ExprError};
use e36_core::scalar::{parse_rational, rational_to_short_string, rational_to_string, Rational};
use e36_core::verify::{enumerate_hwv_lambda, kernel_e0prime, theorem41_scan, verify_lemma, HwvLine, LineReport};

#[derive(Parser)]
#[command(name = "e36", version, about = "Exact computations in E(3,6) and its induced modules")]
struct Cli {
    /// Human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Consistent,
    Secondary,
}

#[derive(Subcommand)]
enum Command {
    /// Bracket of two elements.
    Bracket { a: String, b: String },
    /// Degree of an element for one of the gradings.
    Grade {
        #[arg(long, value_enum)]
        which: Which,
        expr: String,
    },
    /// Weight of a degree-zero eigenvector: (h1, h2, h3, Y) eigenvalues.
    Weight { expr: String },
    /// The relation and commutation table checks.
    Relations,
    /// sl(3) highest weight vectors of Lambda^+- (x) F(p,q).
    Hwv {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long, value_parser = ["+", "-"], allow_hyphen_values = true)]
        sign: String,
        /// Keep only vectors killed by e'0 (sign +) or e'1 (sign -).
        #[arg(long)]
        annihilated: bool,
    },
    /// Singular vectors of the induced module over F(p,q;r;y).
    Singular {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        #[arg(long)]
        max_depth: u32,
        /// Treat y as unknown and report conditions on it.
        #[arg(long)]
        parametric_y: bool,
    },
    /// Parametric search over a grid of (p, q, r).
    Scan {
        #[arg(long)]
        pmax: u32,
        #[arg(long)]
        qmax: u32,
        /// Comma-separated list of r values.
        #[arg(long, value_delimiter = ',')]
        r: Vec<u32>,
        #[arg(long)]
        max_depth: u32,
        /// Also scan p = 0 or q = 0.
        #[arg(long)]
        include_boundary: bool,
    },
    /// Runs one verification check.
    Verify {
        id: String,
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
    },
    /// Parses and prints an expression in canonical form.
    Parse { expr: String },
}

enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// The computation ran and a check failed: exit code 1, output shown.
    Check(Value, String),
}

type Outcome = Result<(Value, String), Failure>;

fn rat(r: &Rational) -> Value {
    Value::String(rational_to_string(r))
}

fn element(text: &str) -> Result<SuperElement, Failure> {
    parse_element(text).map_err(|e| Failure::Usage(format!("{text}: {e}")))
}

fn weight_json(w: &Weight) -> Value {
    json!([w.a, w.b, w.r, rat(&w.y)])
}

fn indices(mask: u8) -> Vec<usize> {
    (0..3).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect()
}

fn terms_json(v: &InducedElement) -> Value {
    v.terms()
        .iter()
        .map(|((m, f), c)| {
            json!({
                "alpha": m.alpha,
                "dminus": indices(m.minus),
                "dplus": indices(m.plus),
                "fIndex": f,
                "coeff": rat(c),
            })
        })
        .collect()
}

fn terms_text(v: &InducedElement) -> String {
    let parts: Vec<String> = v
        .terms()
        .iter()
        .map(|((m, f), c)| {
            let mut s = format!("({})", rational_to_short_string(c));
            for (i, a) in m.alpha.iter().enumerate() {
                if *a > 0 {
                    s += &format!(" dh{}^{a}", i + 1);
                }
            }
            for i in indices(m.minus) {
                s += &format!(" d-{i}");
            }
            for i in indices(m.plus) {
                s += &format!(" d+{i}");
            }
            s + &format!(" v{f}")
        })
        .collect();
    parts.join(" + ")
}

fn bracket(a: &str, b: &str) -> Outcome {
    let c = super_bracket(&element(a)?, &element(b)?);
    let json = json!({ "a": a, "b": b, "bracket": c.to_string(), "zero": c.is_zero() });
    Ok((json, format!("[{a}, {b}] = {c}")))
}

fn grade(which: Which, text: &str) -> Outcome {
    let e = element(text)?;
    let (grading, name) = match which {
        Which::Consistent => (Grading::Consistent, "consistent"),
        Which::Secondary => (Grading::Secondary, "secondary"),
    };
    let components: BTreeMap<String, String> = e
        .homogeneous_components(grading)
        .into_iter()
        .map(|(d, c)| (d.to_string(), c.to_string()))
        .collect();
    let degree = e.degree(grading).ok();
    let json = json!({ "element": e.to_string(), "grading": name, "degree": degree, "components": components });
    let text = match degree {
        Some(d) => format!("{name} degree of {e}: {d}"),
        None => {
            let parts: Vec<String> = components.iter().map(|(d, c)| format!("  {d}: {c}")).collect();
            format!("{e} is inhomogeneous for the {name} grading\n{}", parts.join("\n"))
        }
    };
    Ok((json, text))
}

fn weight(text: &str) -> Outcome {
    let e = element(text)?;
    let w = g0_weight(&e).map_err(|err| Failure::Usage(format!("{text}: {err}")))?;
    let json = json!({ "element": e.to_string(), "weight": weight_json(&w) });
    Ok((json, format!("weight of {e}: {w}")))
}

fn status_json(s: Status) -> Value {
    Value::String(s.as_str().to_string())
}

fn relations() -> Outcome {
    let checks = check_relation_suite();
    let json: Value = checks
        .iter()
        .map(|c| {
            json!({
                "relation": c.relation,
                "expected": c.expected,
                "computed": c.computed,
                "status": status_json(c.status),
                "note": c.note,
            })
        })
        .collect();
    let text: Vec<String> = checks
        .iter()
        .map(|c| {
            let mut line = format!("[{}] {} : computed {}", c.status.as_str(), c.relation, c.computed);
            if let Some(n) = &c.note {
                line += &format!(" ({n})");
            }
            line
        })
        .collect();
    let text = text.join("\n");
    if checks.iter().any(|c| c.status == Status::Fail) {
        return Err(Failure::Check(json, text));
    }
    Ok((json, text))
}

fn hwv(p: u32, q: u32, sign: &str, annihilated: bool) -> Outcome {
    let plus = sign == "+";
    let report: LineReport = if annihilated { kernel_e0prime(p, q, plus) } else { enumerate_hwv_lambda(p, q, plus) };
    let line_json = |l: &HwvLine| {
        json!({
            "tag": l.tag,
            "degree": l.degree,
            "weight": [l.weight.0, l.weight.1],
            "terms": terms_json(&l.vector),
        })
    };
    let json = json!({
        "p": p,
        "q": q,
        "sign": sign,
        "annihilated": annihilated,
        "lines": report.lines.iter().map(line_json).collect::<Vec<_>>(),
        "issues": report.issues,
    });
    let mut text = vec![format!("F({p},{q}), Lambda^{sign}: {} lines", report.lines.len())];
    for l in &report.lines {
        text.push(format!(
            "  {} degree {} weight ({},{}): {}",
            l.tag.as_deref().unwrap_or("?"),
            l.degree,
            l.weight.0,
            l.weight.1,
            terms_text(&l.vector)
        ));
    }
    text.extend(report.issues.iter().map(|i| format!("  issue: {i}")));
    let text = text.join("\n");
    if report.issues.is_empty() {
        Ok((json, text))
    } else {
        Err(Failure::Check(json, text))
    }
}

fn condition_json(c: &YCondition) -> Value {
    json!({
        "depth": c.depth,
        "weight": [c.a, c.b, c.r],
        "y-shift": rat(&c.y_shift),
        "poly-in-y": c.condition.to_string(),
        "rational-roots": c.rational_roots.iter().map(rat).collect::<Vec<_>>(),
    })
}

fn condition_text(c: &YCondition) -> String {
    let roots: Vec<String> = c.rational_roots.iter().map(rational_to_short_string).collect();
    format!(
        "  depth {} weight ({},{};{}): {} = 0, rational roots [{}]",
        c.depth,
        c.a,
        c.b,
        c.r,
        c.condition,
        roots.join(", ")
    )
}

fn singular(p: u32, q: u32, r: u32, y: Option<&str>, max_depth: u32, parametric: bool) -> Outcome {
    if parametric {
        let conds = parametric_y_search(p, q, r, max_depth);
        let json = json!({
            "F": { "p": p, "q": q, "r": r, "y": Value::Null },
            "maxDepth": max_depth,
            "conditions": conds.iter().map(condition_json).collect::<Vec<_>>(),
        });
        let mut text = vec![format!("F({p},{q};{r};y) up to depth {max_depth}: {} conditions", conds.len())];
        text.extend(conds.iter().map(condition_text));
        return Ok((json, text.join("\n")));
    }
    let y = y.ok_or_else(|| Failure::Usage("--y is required unless --parametric-y is given".into()))?;
    let y = parse_rational(y).ok_or_else(|| Failure::Usage(format!("bad rational for --y: {y}")))?;
    let module = InducedModule::new(IrrepF::new(p, q, r, y.clone()));
    let found = singular_search(&module, max_depth);
    let json = json!({
        "F": { "p": p, "q": q, "r": r, "y": rat(&y) },
        "maxDepth": max_depth,
        "found": found.iter().map(|s| json!({
            "depth": s.depth,
            "weight": weight_json(&s.weight),
            "terms": terms_json(&s.vector),
        })).collect::<Vec<_>>(),
    });
    let mut text = vec![format!(
        "F({p},{q};{r};{}) up to depth {max_depth}: {} singular vectors",
        rational_to_short_string(&y),
        found.len()
    )];
    for s in &found {
        text.push(format!("  depth {} weight {}: {}", s.depth, s.weight, terms_text(&s.vector)));
    }
    Ok((json, text.join("\n")))
}

fn scan(pmax: u32, qmax: u32, rs: &[u32], max_depth: u32, include_boundary: bool) -> Outcome {
    if rs.is_empty() {
        return Err(Failure::Usage("--r needs at least one value".into()));
    }
    let rows = theorem41_scan(pmax, qmax, rs, max_depth, include_boundary);
    let json: Value = rows
        .iter()
        .map(|row| {
            json!({
                "p": row.p,
                "q": row.q,
                "r": row.r,
                "conditions": row.conditions.iter().map(condition_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut text = Vec::new();
    for row in &rows {
        text.push(format!("F({},{};{};y): {} conditions", row.p, row.q, row.r, row.conditions.len()));
        text.extend(row.conditions.iter().map(condition_text));
    }
    let text = text.join("\n");
    if rows.iter().any(|row| row.p * row.q != 0 && !row.conditions.is_empty()) {
        return Err(Failure::Check(json, text));
    }
    Ok((json, text))
}

fn verify(id: &str, raw: &[String]) -> Outcome {
    let mut params = BTreeMap::new();
    for kv in raw {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("--param expects k=v, got {kv}")))?;
        params.insert(k.trim().to_string(), v.trim().to_string());
    }
    let report = verify_lemma(id, &params).map_err(|e| Failure::Usage(e.to_string()))?;
    let json = json!({
        "lemma-id": report.id,
        "parameters": report.params,
        "status": status_json(report.status),
        "details": report.details.iter().map(|d| json!({
            "claim": d.claim,
            "computed": d.computed,
            "expected": d.expected,
            "status": status_json(d.status),
        })).collect::<Vec<_>>(),
    });
    let mut text = vec![format!("{}: {}", report.id, report.status.as_str())];
    for d in &report.details {
        text.push(format!("  [{}] {}", d.status.as_str(), d.claim));
        if d.status != Status::Pass {
            text.push(format!("      computed: {}\n      expected: {}", d.computed, d.expected));
        }
    }
    let text = text.join("\n");
    if report.status == Status::Fail {
        return Err(Failure::Check(json, text));
    }
    Ok((json, text))
}

fn parse(text: &str) -> Outcome {
    let ast = parse_expression(text).map_err(|e| Failure::Usage(e.to_string()))?;
    let canonical = ast.to_string();
    match e36_core::parse::evaluate(&ast) {
        Ok(e) => {
            let json = json!({ "input": text, "canonical": canonical, "element": e.to_string() });
            Ok((json, format!("{canonical}\n  = {e}")))
        }
        Err(err @ ExprError::Invalid(_)) => Err(Failure::Usage(format!("{canonical}: {err}"))),
        Err(err) => Err(Failure::Usage(err.to_string())),
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Bracket { a, b } => bracket(a, b),
        Command::Grade { which, expr } => grade(*which, expr),
        Command::Weight { expr } => weight(expr),
        Command::Relations => relations(),
        Command::Hwv { p, q, sign, annihilated } => hwv(*p, *q, sign, *annihilated),
        Command::Singular { p, q, r, y, max_depth, parametric_y } => {
            singular(*p, *q, *r, y.as_deref(), *max_depth, *parametric_y)
        }
        Command::Scan { pmax, qmax, r, max_depth, include_boundary } => {
            scan(*pmax, *qmax, r, *max_depth, *include_boundary)
        }
        Command::Verify { id, params } => verify(id, params),
        Command::Parse { expr } => parse(expr),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // a closed pipe (e.g. `| head`) is not an error worth panicking over
    let show = |json: &Value, text: &str| {
        let mut out = std::io::stdout().lock();
        let _ = if cli.pretty {
            writeln!(out, "{text}")
        } else {
            writeln!(out, "{}", serde_json::to_string(json).expect("serializable"))
        };
    };
    match run(&cli) {
        Ok((json, text)) => {
            show(&json, &text);
            ExitCode::SUCCESS
        }
        Err(Failure::Check(json, text)) => {
            show(&json, &text);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
