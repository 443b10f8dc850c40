//! The `modgraph` command line.
//!
//! Exit status: 0 on success, 1 on a usage error (unknown subcommand,
//! malformed argument), 2 when the library rejects the input.

use std::io::Write;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

use crate::cark::{self, Cark};
use crate::congruence::{self, CongruenceSpec, Family};
use crate::error::{Error, Result};
use crate::fold;
use crate::forms::{self, ClassNumberOptions, QuadForm, Representation};
use crate::graph::RibbonGraph;
use crate::json::number;
use crate::word::{Mat, TraceKind, Word};

pub const JSON_SCHEMA_VERSION: u32 = 1;

/// Default work cap: the largest discriminant for `form class-number`, and
/// the largest coset space, ball or representation target elsewhere.
pub const DEFAULT_LIMIT: u128 = 1_000_000_000;

#[derive(Parser, Debug)]
#[command(name = "modgraph", version, about = "Modular group words, modular graphs, carks and quadratic forms")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Work cap; see the README for what it bounds per command.
    #[arg(long, global = true)]
    limit: Option<u128>,
    /// Worker threads for class numbers.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    group: Group,
}

#[derive(Subcommand, Debug)]
enum Group {
    /// Words in S and L.
    #[command(subcommand)]
    Word(WordCmd),
    /// Modular graphs.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Carks of hyperbolic elements.
    #[command(subcommand)]
    Cark(CarkCmd),
    /// Indefinite binary quadratic forms.
    #[command(subcommand)]
    Form(FormCmd),
}

#[derive(Subcommand, Debug)]
enum WordCmd {
    /// Trace class of a word.
    Classify { word: String },
    /// Matrix of a word.
    Matrix { word: String },
    /// Normal form of a word or of a matrix `p,q;r,s`.
    Normal {
        #[arg(allow_hyphen_values = true)]
        input: String,
        /// Conjugacy class representative instead.
        #[arg(long)]
        cyclic: bool,
    },
}

#[derive(Subcommand, Debug)]
enum GraphCmd {
    /// Core graph of the subgroup generated by the words.
    Fold { words: Vec<String> },
    /// Coset graph of gamma0, gamma1 or gamma of level N.
    Congruence { family: String, level: String },
    /// Passport of a finite graph source.
    Passport { source: String },
    /// Graphviz rendering of a graph source.
    Dot { source: String },
}

#[derive(Subcommand, Debug)]
enum CarkCmd {
    /// Cark of a hyperbolic word.
    OfWord { word: String },
    /// Cark of the fundamental automorph of a form.
    OfForm {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// SVG drawing of a cark (or of the cark of a word).
    Svg { cark: String },
    /// Whether the element is conjugate to its inverse.
    Reciprocal { cark: String },
}

#[derive(Subcommand, Debug)]
enum FormCmd {
    /// Reduced form and the matrix reaching it.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// The rho-cycle through the reduction.
    Cycle {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Narrow class number of a discriminant.
    ClassNumber { discriminant: String },
    /// Reduced composite of two forms of equal discriminant.
    Compose {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Fundamental solution of t^2 - D u^2 = 4.
    Pell { discriminant: String },
    /// Least positive value of the form.
    Minimum {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Whether f(x, y) = N has a solution, with a witness.
    Represents {
        #[arg(allow_hyphen_values = true)]
        form: String,
        #[arg(allow_hyphen_values = true)]
        target: String,
    },
    /// Form of a hyperbolic word.
    OfWord { word: String },
    /// Word of the fundamental automorph of a form.
    ToWord {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
}

/// Command output: text and JSON renderings.
struct Output {
    text: String,
    json: Value,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json }
    }

    /// Raw documents (DOT, SVG, graph JSON) print the same either way.
    fn raw(text: String) -> Self {
        Output { text, json: Value::Null }
    }
}

struct Ctx {
    limit: u128,
    jobs: usize,
}

impl Ctx {
    fn check(&self, what: impl FnOnce() -> String, cost: u128) -> Result<()> {
        if cost > self.limit {
            return Err(Error::LimitExceeded(what(), self.limit.to_string()));
        }
        Ok(())
    }
}

fn form_json(f: &QuadForm) -> Value {
    json!([number(&f.a), number(&f.b), number(&f.c)])
}

fn mat_json(m: &Mat) -> Value {
    json!([number(&m.p), number(&m.q), number(&m.r), number(&m.s)])
}

fn parse_word(s: &str) -> Result<Word> {
    s.parse()
}

fn parse_form(s: &str) -> Result<QuadForm> {
    s.parse()
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.trim().parse().map_err(|_| Error::parse("integer", s))
}

fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::parse("permutation", s)))
        .collect()
}

/// Graph sources: `arc`, `fold:W1,W2,..`, `gamma0:N`, `gamma1:N`,
/// `gamma:N`, `ball:R`, `perm:S-images/L-images` (zero-based, comma
/// separated), or the path of a graph JSON file.
fn load_graph(source: &str, ctx: &Ctx) -> Result<RibbonGraph> {
    if source == "arc" {
        return Ok(RibbonGraph::modular_arc());
    }
    if let Some((kind, arg)) = source.split_once(':') {
        match kind {
            "fold" => {
                let words = arg
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(parse_word)
                    .collect::<Result<Vec<_>>>()?;
                return Ok(fold::fold_subgroup_graph(&words));
            }
            "ball" => {
                let r: u32 = arg.parse().map_err(|_| Error::parse("radius", arg))?;
                ctx.check(|| format!("ball radius {r}"), 1u128.checked_shl(r).unwrap_or(u128::MAX))?;
                return Ok(fold::farey_ball(r as usize));
            }
            "perm" => {
                let (s, l) = arg.split_once('/').ok_or_else(|| Error::parse("permutation pair", arg))?;
                return RibbonGraph::from_permutation_pair(&parse_usize_list(s)?, &parse_usize_list(l)?);
            }
            _ => {
                if let Ok(family) = kind.parse::<Family>() {
                    return congruence_graph(family, arg, ctx);
                }
            }
        }
    }
    let text = std::fs::read_to_string(source).map_err(|_| Error::parse("graph source", source))?;
    RibbonGraph::from_json(&text)
}

fn congruence_graph(family: Family, level: &str, ctx: &Ctx) -> Result<RibbonGraph> {
    let n: u64 = level.trim().parse().map_err(|_| Error::parse("level", level))?;
    let spec = CongruenceSpec::new(family, n)?;
    let cost = match family {
        Family::GammaFull => (n as u128).pow(3),
        _ => (n as u128).pow(2),
    };
    ctx.check(|| format!("{family} level {n}"), cost)?;
    congruence::congruence_graph(&spec)
}

fn graph_summary(g: &RibbonGraph) -> Result<String> {
    let mut lines = vec![
        format!("edges {}", g.edge_count()),
        format!("stubs {}", g.stubs().len()),
    ];
    if !g.has_stubs() {
        let p = g.passport()?;
        lines.push(format!("genus {}", p.genus));
        lines.push(format!("punctures {}", p.punctures));
    }
    if let Some(spine) = g.spine() {
        let sides: String = spine
            .branches
            .iter()
            .map(|s| match s {
                crate::graph::Side::Left => 'L',
                crate::graph::Side::Right => 'R',
            })
            .collect();
        lines.push(format!("spine {} {}", spine.edges.len(), sides));
    }
    let gens: Vec<String> = g.generators()?.iter().map(|w| w.to_string()).collect();
    lines.push(format!("generators {}", gens.join(" ")));
    Ok(lines.join("\n"))
}

fn graph_output(g: &RibbonGraph, json: bool) -> Result<Output> {
    if json {
        Ok(Output::raw(g.to_json()))
    } else {
        Ok(Output::raw(graph_summary(g)?))
    }
}

fn cark_output(c: &Cark) -> Output {
    Output::new(
        c.to_string(),
        json!({
            "cark": c.to_string(),
            "spine": c.spine().iter().map(|b| format!("{b:?}")).collect::<String>(),
            "multiplicity": c.multiplicity(),
            "reciprocal": c.is_reciprocal(),
        }),
    )
}

fn parse_cark_or_word(s: &str) -> Result<Cark> {
    match s.parse::<Cark>() {
        Ok(c) => Ok(c),
        Err(Error::Parse { .. }) => cark::word_to_cark(&parse_word(s)?)
            .map_err(|e| if matches!(e, Error::Parse { .. }) { Error::parse("cark", s) } else { e }),
        Err(e) => Err(e),
    }
}

fn run_word(cmd: WordCmd) -> Result<Output> {
    match cmd {
        WordCmd::Classify { word } => {
            let c = parse_word(&word)?.classify();
            let (kind, order) = match c.kind {
                TraceKind::Identity => ("identity", None),
                TraceKind::Elliptic { order } => ("elliptic", Some(order)),
                TraceKind::Parabolic => ("parabolic", None),
                TraceKind::Hyperbolic => ("hyperbolic", None),
            };
            Ok(Output::new(
                c.to_string(),
                json!({"kind": kind, "order": order, "absTrace": number(&c.abs_trace)}),
            ))
        }
        WordCmd::Matrix { word } => {
            let m = parse_word(&word)?.to_matrix();
            Ok(Output::new(m.to_string(), json!({"matrix": mat_json(&m)})))
        }
        WordCmd::Normal { input, cyclic } => {
            let w = if input.contains(',') {
                input.parse::<Mat>()?.to_word()
            } else {
                parse_word(&input)?
            };
            let w = if cyclic { w.cyclic_normal_form() } else { w };
            Ok(Output::new(w.to_string(), json!({"word": w.to_string()})))
        }
    }
}

fn run_graph(cmd: GraphCmd, ctx: &Ctx, json: bool) -> Result<Output> {
    match cmd {
        GraphCmd::Fold { words } => {
            let gens = words.iter().map(|w| parse_word(w)).collect::<Result<Vec<_>>>()?;
            graph_output(&fold::fold_subgroup_graph(&gens), json)
        }
        GraphCmd::Congruence { family, level } => {
            let family: Family = family.parse()?;
            graph_output(&congruence_graph(family, &level, ctx)?, json)
        }
        GraphCmd::Passport { source } => {
            let p = load_graph(&source, ctx)?.passport()?;
            let text = format!(
                "edges {}\ngenus {}\npunctures {}\ncircle degrees {:?}\nbullet degrees {:?}\nface degrees {:?}\nmonodromy order {}",
                p.edges, p.genus, p.punctures, p.circle_degrees, p.bullet_degrees, p.face_degrees, p.monodromy_order
            );
            let value = serde_json::to_value(&p).expect("serializable");
            Ok(Output::new(text, value))
        }
        GraphCmd::Dot { source } => Ok(Output::raw(load_graph(&source, ctx)?.to_dot())),
    }
}

fn run_cark(cmd: CarkCmd) -> Result<Output> {
    match cmd {
        CarkCmd::OfWord { word } => Ok(cark_output(&cark::word_to_cark(&parse_word(&word)?)?)),
        CarkCmd::OfForm { form } => {
            let w = cark::form_to_word(&parse_form(&form)?)?;
            Ok(cark_output(&cark::word_to_cark(&w)?))
        }
        CarkCmd::Svg { cark } => Ok(Output::raw(parse_cark_or_word(&cark)?.to_svg())),
        CarkCmd::Reciprocal { cark } => {
            let c = parse_cark_or_word(&cark)?;
            let r = c.is_reciprocal();
            Ok(Output::new(r.to_string(), json!({"cark": c.to_string(), "reciprocal": r})))
        }
    }
}

fn run_form(cmd: FormCmd, ctx: &Ctx) -> Result<Output> {
    match cmd {
        FormCmd::Reduce { form } => {
            let (g, m) = parse_form(&form)?.reduce()?;
            Ok(Output::new(
                format!("{g} matrix={m}"),
                json!({"form": form_json(&g), "matrix": mat_json(&m)}),
            ))
        }
        FormCmd::Cycle { form } => {
            let f = parse_form(&form)?;
            let class = f.cycle()?;
            let text: Vec<String> = class.forms().iter().map(|g| g.to_string()).collect();
            Ok(Output::new(
                text.join(" "),
                json!({
                    "discriminant": number(&class.discriminant()),
                    "cycle": class.forms().iter().map(form_json).collect::<Vec<_>>(),
                }),
            ))
        }
        FormCmd::ClassNumber { discriminant } => {
            let d = parse_int(&discriminant)?;
            let opts = ClassNumberOptions {
                limit: Some(ctx.limit),
                jobs: ctx.jobs,
            };
            let h = forms::class_number_with(&d, opts)?;
            Ok(Output::new(
                h.to_string(),
                json!({"discriminant": number(&d), "classNumber": h}),
            ))
        }
        FormCmd::Compose { first, second } => {
            let g = forms::compose(&parse_form(&first)?, &parse_form(&second)?)?;
            Ok(Output::new(g.to_string(), json!({"form": form_json(&g)})))
        }
        FormCmd::Pell { discriminant } => {
            let d = parse_int(&discriminant)?;
            let p = forms::pell_fundamental(&d)?;
            Ok(Output::new(
                format!("t={} u={}", p.t, p.u),
                json!({"discriminant": number(&d), "t": number(&p.t), "u": number(&p.u)}),
            ))
        }
        FormCmd::Minimum { form } => {
            let m = parse_form(&form)?.minimum()?;
            Ok(Output::new(m.to_string(), json!({"minimum": number(&m)})))
        }
        FormCmd::Represents { form, target } => {
            let f = parse_form(&form)?;
            let n = parse_int(&target)?;
            let size = n.abs().try_into().unwrap_or(u128::MAX);
            ctx.check(|| format!("target {n}"), size)?;
            Ok(match f.represents(&n)? {
                Representation::Present { x, y } => Output::new(
                    format!("yes x={x} y={y}"),
                    json!({"represented": true, "x": number(&x), "y": number(&y)}),
                ),
                Representation::Absent { candidates } => Output::new(
                    "no",
                    json!({
                        "represented": false,
                        "candidates": candidates.iter().map(form_json).collect::<Vec<_>>(),
                    }),
                ),
            })
        }
        FormCmd::OfWord { word } => {
            let f = cark::word_to_form(&parse_word(&word)?)?;
            let d = f.discriminant();
            Ok(Output::new(
                format!("{f} disc={d}"),
                json!({"form": form_json(&f), "discriminant": number(&d)}),
            ))
        }
        FormCmd::ToWord { form } => {
            let w = cark::form_to_word(&parse_form(&form)?)?;
            Ok(Output::new(w.to_string(), json!({"word": w.to_string()})))
        }
    }
}

fn with_schema(v: Value) -> Value {
    match v {
        Value::Object(mut map) => {
            map.insert("schemaVersion".into(), json!(JSON_SCHEMA_VERSION));
            Value::Object(map)
        }
        other => json!({"schemaVersion": JSON_SCHEMA_VERSION, "value": other}),
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    1
                }
            };
        }
    };
    let ctx = Ctx {
        limit: cli.limit.unwrap_or(DEFAULT_LIMIT),
        jobs: cli.jobs,
    };
    let json = cli.json;
    let result = match cli.group {
        Group::Word(cmd) => run_word(cmd),
        Group::Graph(cmd) => run_graph(cmd, &ctx, json),
        Group::Cark(cmd) => run_cark(cmd),
        Group::Form(cmd) => run_form(cmd, &ctx),
    };
    match result {
        Ok(output) => {
            if json && !output.json.is_null() {
                let text = serde_json::to_string_pretty(&with_schema(output.json)).expect("serializable");
                let _ = writeln!(out, "{text}");
            } else if output.text.ends_with('\n') {
                let _ = write!(out, "{}", output.text);
            } else {
                let _ = writeln!(out, "{}", output.text);
            }
            0
        }
        Err(e) => {
            let status = if matches!(e, Error::Parse { .. }) { 1 } else { 2 };
            if json {
                let doc = json!({
                    "schemaVersion": JSON_SCHEMA_VERSION,
                    "error": {"code": e.code(), "message": e.to_string()},
                });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                let _ = writeln!(err, "error: {e}");
            }
            status
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("modgraph").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn documented_outputs() {
        assert_eq!(call(&["form", "class-number", "12"]), (0, "2\n".into(), String::new()));
        assert_eq!(call(&["word", "classify", "LSLLS"]).1, "hyperbolic trace=3\n");
        assert_eq!(call(&["form", "of-word", "LSLLS"]).1, "(1,-1,-1) disc=5\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["form", "pell", "9"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 1);
        let (code, _, err) = call(&["word", "classify", "LXS"]);
        assert_eq!(code, 1);
        assert!(err.contains('X'), "{err}");
        assert_eq!(call(&["form", "reduce", "-1,2,2"]).0, 0);
    }

    #[test]
    fn json_errors_carry_codes() {
        let (code, out, _) = call(&["--json", "form", "pell", "9"]);
        assert_eq!(code, 2);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["error"]["code"], "SquareDiscriminant");
        assert_eq!(v["schemaVersion"], 1);
    }
}
