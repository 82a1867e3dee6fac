//! `boxsort`: compute families, grammar derivatives, normal-ordered operators,
//! tableaux and ordered weak partitions, and run the identity catalog.

use std::fmt::Display;
use std::process::ExitCode;

use boxsort_core::boxsort::enumerate_owp;
use boxsort_core::families::{family, FamilyId};
use boxsort_core::grammar::{Grammar, NormalOp};
use boxsort_core::normalorder::ckd_power_on_c;
use boxsort_core::poly::{latex, text};
use boxsort_core::tableaux::enumerate_syt;
use boxsort_core::Poly;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "boxsort", version, about = "Box sorting and context-free grammar workbench")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// A named polynomial family at index n.
    Family {
        name: String,
        n: usize,
        /// The k of kInvEulerian and kOrder.
        #[arg(long)]
        param: Option<i64>,
    },
    /// D_G^n applied to a word.
    Expand {
        #[arg(long)]
        grammar: String,
        #[arg(long)]
        word: String,
        #[arg(long)]
        times: usize,
    },
    /// Normal-ordered coefficients of (w D_G)^n.
    NormalOrder {
        #[arg(long)]
        grammar: String,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        power: usize,
    },
    /// (c^m D)^n c in the jets c[i].
    Jets {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        n: usize,
    },
    /// Standard Young tableaux of size n.
    Syt {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_cols: Option<usize>,
        /// Also print the order-m box sorting indices.
        #[arg(long)]
        indices: Option<u32>,
    },
    /// Ordered weak partitions of [n] at order m, with weights and images.
    Owp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        order: u32,
    },
    /// Run one catalog identity, or `all`.
    Verify {
        identity: String,
        #[arg(long)]
        n_max: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

fn usage(flag: &str, e: impl Display) -> Failure {
    Failure::Usage(format!("{flag}: {e}"))
}

fn poly_json(p: &Poly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            let mono: Map<String, Value> = m
                .factors()
                .iter()
                .map(|(v, e)| (v.to_string(), json!(e)))
                .collect();
            json!({ "coeff": c.to_string(), "monomial": mono })
        })
        .collect();
    json!({ "terms": terms })
}

fn render(p: &Poly, format: Format) -> String {
    match format {
        Format::Text => text(p),
        Format::Latex => latex(p),
        Format::Json => poly_json(p).to_string(),
    }
}

fn render_op(op: &NormalOp<BigInt>, format: Format) -> String {
    match format {
        Format::Json => {
            let orders: Vec<Value> = op
                .orders()
                .map(|(k, p)| json!({ "order": k, "coefficient": poly_json(p) }))
                .collect();
            json!({ "orders": orders }).to_string()
        }
        Format::Text => op
            .orders()
            .map(|(k, p)| format!("D^{k}: {}", text(p)))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Latex => op
            .orders()
            .map(|(k, p)| {
                let d = if k == 1 { "D".to_string() } else { format!("D^{{{k}}}") };
                if p.len() == 1 {
                    format!("{}{d}", latex(p))
                } else {
                    format!("({}){d}", latex(p))
                }
            })
            .collect::<Vec<_>>()
            .join("+"),
    }
}

fn grammar(spec: &str) -> Result<Grammar<BigInt>, Failure> {
    Grammar::parse(spec).map_err(|e| usage("--grammar", e))
}

fn poly(flag: &str, s: &str) -> Result<Poly, Failure> {
    s.parse().map_err(|e| usage(flag, e))
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format = cli.format;
    Ok(match cli.command {
        Command::Family { name, n, param } => {
            let id = FamilyId::parse(&name, param).map_err(|e| usage("<name>", e))?;
            render(&family(id, n).map_err(|e| usage("<n>", e))?, format)
        }
        Command::Expand { grammar: spec, word, times } => {
            let g = grammar(&spec)?;
            let w = poly("--word", &word)?;
            render(&g.derive_n(&w, times).map_err(|e| usage("--word", e))?, format)
        }
        Command::NormalOrder { grammar: spec, weight, power } => {
            let g = grammar(&spec)?;
            let w = poly("--weight", &weight)?;
            render_op(&g.op_power(&w, power).map_err(|e| usage("--weight", e))?, format)
        }
        Command::Jets { order, n } => {
            if order == 0 {
                return Err(usage("--order", "must be at least 1"));
            }
            render(&ckd_power_on_c(order, n).map_err(|e| usage("--n", e))?, format)
        }
        Command::Syt { n, max_cols, indices } => {
            if indices == Some(0) {
                return Err(usage("--indices", "order must be at least 1"));
            }
            let rows: Vec<(String, Value)> = enumerate_syt(n, max_cols)
                .iter()
                .map(|t| {
                    let mut obj = json!({
                        "tableau": t.to_string(),
                        "shape": t.shape().to_string(),
                        "descents": t.descent_set(),
                    });
                    let mut line = format!("{t}  shape {}  descents {:?}", t.shape(), t.descent_set());
                    if let Some(m) = indices {
                        let idx: Vec<u64> = (1..=n as u32)
                            .map(|i| t.box_index(i, m).expect("entry present"))
                            .collect();
                        let prod = t.box_product(m);
                        line.push_str(&format!("  indices {idx:?}  product {prod}"));
                        obj["indices"] = json!(idx);
                        obj["product"] = json!(prod.to_string());
                    }
                    (line, obj)
                })
                .collect();
            listing(rows, format)
        }
        Command::Owp { n, order } => {
            if order == 0 {
                return Err(usage("--order", "must be at least 1"));
            }
            let rows = enumerate_owp(n, order)
                .iter()
                .map(|p| {
                    let w = p.weight();
                    let phi = p.phi();
                    let line = format!("{p}  weight {}  phi {phi}", render(&w, Format::Text));
                    (line, json!({ "owp": p.to_string(), "weight": poly_json(&w), "phi": phi.to_string() }))
                })
                .collect();
            listing(rows, format)
        }
        Command::Verify { identity, n_max } => {
            let report = if identity == "all" {
                boxsort_suite::verify_all(n_max)
            } else {
                let id = boxsort_suite::lookup(&identity).map_err(|e| usage("<identity>", e))?;
                let lo = *id.n_range.start();
                let hi = n_max.map_or(*id.n_range.end(), |m| m.min(*id.n_range.end()));
                if hi < lo {
                    return Err(usage("--n-max", format!("must be at least {lo}")));
                }
                boxsort_suite::verify(id.token, Some(lo..=hi)).map_err(|e| usage("<identity>", e))?
            };
            let out = match format {
                Format::Json => report.to_json(),
                _ => report.to_text().trim_end().to_string(),
            };
            if !report.passed() {
                return Err(Failure::Verification(out));
            }
            out
        }
    })
}

fn listing(rows: Vec<(String, Value)>, format: Format) -> String {
    match format {
        Format::Json => Value::Array(rows.into_iter().map(|r| r.1).collect()).to_string(),
        _ => rows.into_iter().map(|r| r.0).collect::<Vec<_>>().join("\n"),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            println!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
