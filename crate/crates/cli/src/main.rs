//! `lagmap`: JSON in, JSON out.
//!
//! Every command prints one result object `{status, payload, diagnostics}`.
//! Exit codes: 0 ok, 1 domain error, 2 usage error.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use lagmap::doc::{
    big_to_value, parse_as, Document, MapDoc, MatroidDoc, PolytopeDoc, RepresentationDoc,
};
use lagmap::hyperoct::SignedPerm;
use lagmap::lagrangian::{bases_of_map, AdmissibleSet, LagrangianMatroid, BASES_BOUND};
use lagmap::map::{enumerate_partial_duals, is_isomorphic, DEFAULT_ORBIT_BOUND};
use lagmap::polytope::{gs_violation, MatroidPolytope};
use lagmap::repr::{interlacement_representation, Mode};
use lagmap::{EdgeSubset, Error, OrientedMap};

#[derive(Parser)]
#[command(
    name = "lagmap",
    version,
    about = "Maps, partial duals, and Lagrangian matroids"
)]
struct Cli {
    /// Input document; standard input when omitted.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Counts, genus, face permutation, and cartographic group order of a map.
    Info,
    /// The dual map.
    Dual,
    /// The partial dual with respect to a set of edges.
    Pdual {
        /// Comma-separated edge labels, `all`, or empty for none.
        #[arg(long, allow_hyphen_values = true)]
        edges: String,
    },
    /// The Lagrangian matroid of a map.
    Bases,
    /// Checks the symmetric exchange axiom on a collection of admissible sets.
    MatroidCheck,
    /// An orthogonal representation of a map's matroid from an interlacement matrix.
    Represent {
        /// Base to build from, e.g. `12*3`; the first base when omitted.
        #[arg(long)]
        base: Option<String>,
    },
    /// The bases read off the non-zero maximal minors of a matrix.
    Minors {
        /// Overrides the mode in the document.
        #[arg(long)]
        mode: Option<Mode>,
    },
    /// The matroid polytope with its hull edges.
    Polytope,
    /// Checks that every hull edge points along a root of type C.
    GsCheck,
    /// Applies a signed permutation to a map, matroid, matrix, or polytope.
    Act {
        /// A product of generators such as `(1 1*)(1 2)(1* 2*)`.
        #[arg(long)]
        word: String,
    },
    /// All partial duals of a map with their isomorphism classes.
    Orbit,
    /// Decides whether two maps are isomorphic; input is a two-element array.
    Iso,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Document(_) | Error::BadWord(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = Result<(Value, Vec<String>), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return emit(Err(Failure::Usage(e.to_string().trim_end().to_string()))),
    };
    emit(read_input(cli.input.as_ref()).and_then(|input| run(cli.command, input)))
}

fn emit(outcome: Outcome) -> ExitCode {
    let (result, code) = match outcome {
        Ok((payload, diagnostics)) => (
            json!({"status": "ok", "payload": payload, "diagnostics": diagnostics}),
            0,
        ),
        Err(Failure::Usage(msg)) => (error_envelope(msg), 2),
        Err(Failure::Domain(msg)) => (error_envelope(msg), 1),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&result).expect("values serialise")
    );
    ExitCode::from(code)
}

fn error_envelope(msg: String) -> Value {
    json!({"status": "error", "payload": null, "diagnostics": [msg]})
}

fn read_input(path: Option<&PathBuf>) -> Result<Value, Failure> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("invalid JSON: {e}")))
}

fn run(command: Command, input: Value) -> Outcome {
    match command {
        Command::Info => info(input),
        Command::Dual => {
            let map = read_map(input)?;
            Ok((map_value(&map.dual()), Vec::new()))
        }
        Command::Pdual { edges } => {
            let map = read_map(input)?;
            let subset = parse_edges(&edges, map.n())?;
            Ok((map_value(&map.partial_dual(&subset)?), Vec::new()))
        }
        Command::Bases => {
            let map = read_map(input)?;
            guard(map.n(), BASES_BOUND)?;
            Ok((matroid_value(&bases_of_map(&map)?), Vec::new()))
        }
        Command::MatroidCheck => matroid_check(input),
        Command::Represent { base } => represent(input, base),
        Command::Minors { mode } => {
            let doc: RepresentationDoc = parse_as(input)?;
            let rep = doc.to_representation(mode)?;
            Ok((matroid_value(&rep.bases()?), Vec::new()))
        }
        Command::Polytope => {
            let m = read_matroid(input)?;
            let p = MatroidPolytope::from_matroid(&m)?;
            Ok((to_value(&PolytopeDoc::from_polytope(&p)), Vec::new()))
        }
        Command::GsCheck => {
            let m = read_matroid(input)?;
            let violation = gs_violation(&m)?;
            let payload = json!({
                "n": m.n(),
                "gs": violation.is_none(),
                "violation": violation.map(|v| json!({
                    "from": v.from.to_string(),
                    "to": v.to.to_string(),
                    "difference": v.difference.coords(),
                })),
            });
            Ok((payload, Vec::new()))
        }
        Command::Act { word } => act(input, &word),
        Command::Orbit => orbit(input),
        Command::Iso => iso(input),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("documents serialise")
}

fn map_value(map: &OrientedMap) -> Value {
    to_value(&MapDoc::from_map(map))
}

fn matroid_value(m: &LagrangianMatroid) -> Value {
    to_value(&MatroidDoc::from_matroid(m))
}

fn read_map(input: Value) -> Result<OrientedMap, Failure> {
    let doc: MapDoc = parse_as(input)?;
    Ok(doc.to_map()?)
}

/// A matroid document, or a map document standing for its matroid.
fn read_matroid(input: Value) -> Result<LagrangianMatroid, Failure> {
    match Document::from_value(input)? {
        Document::Matroid(d) => Ok(d.to_matroid()?),
        Document::Map(d) => {
            let map = d.to_map()?;
            guard(map.n(), BASES_BOUND)?;
            Ok(bases_of_map(&map)?)
        }
        _ => Err(Failure::Usage("expected a matroid or map document".into())),
    }
}

fn guard(n: usize, bound: usize) -> Result<(), Failure> {
    if n > bound {
        return Err(Failure::Domain(format!(
            "refusing n = {n}: more than {bound} edges would take too long"
        )));
    }
    Ok(())
}

fn parse_edges(text: &str, n: usize) -> Result<EdgeSubset, Failure> {
    let text = text.trim();
    if text.eq_ignore_ascii_case("all") {
        return Ok(EdgeSubset::full(n));
    }
    let edges = text
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Failure::Usage(format!("bad edge label {t:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(EdgeSubset::new(n, edges)?)
}

fn info(input: Value) -> Outcome {
    let map = read_map(input)?;
    let mut payload = map_value(&map);
    let obj = payload.as_object_mut().expect("map documents are objects");
    obj.insert("edges".into(), json!(map.n()));
    obj.insert("one_face".into(), json!(map.is_one_face()));
    obj.insert(
        "group_order".into(),
        big_to_value(&map.cartographic_group_order()),
    );
    let mut diagnostics = Vec::new();
    if map.label_trace().is_some() {
        diagnostics.push("half-edges renumbered so that alpha = (1 2)(3 4)...".into());
    }
    Ok((payload, diagnostics))
}

fn matroid_check(input: Value) -> Outcome {
    let doc: MatroidDoc = parse_as(input)?;
    let m = doc.to_matroid()?;
    let witness = m.check_symmetric_exchange().err();
    let payload = json!({
        "n": m.n(),
        "lagrangian": witness.is_none(),
        "matroid": m.is_matroid(),
        "witness": witness.map(|w| json!({"a": w.a.to_string(), "b": w.b.to_string(), "j": w.j})),
    });
    Ok((payload, Vec::new()))
}

fn represent(input: Value, base: Option<String>) -> Outcome {
    let map = read_map(input)?;
    guard(map.n(), BASES_BOUND)?;
    let base = base
        .map(|b| AdmissibleSet::parse(&b, map.n()))
        .transpose()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let rep = interlacement_representation(&map, base.as_ref())?;
    Ok((
        to_value(&RepresentationDoc::from_representation(&rep)),
        vec!["minors checked against the bases of the map".into()],
    ))
}

fn act(input: Value, word: &str) -> Outcome {
    let doc = Document::from_value(input)?;
    let w = SignedPerm::from_word(word, doc.n())?;
    let payload = match doc {
        Document::Map(d) => map_value(&w.act_on_map(&d.to_map()?)?),
        Document::Matroid(d) => matroid_value(&w.act_on_matroid(&d.to_matroid()?)?),
        Document::Representation(d) => to_value(&RepresentationDoc::from_representation(
            &w.act_on_matrix(&d.to_representation(None)?)?,
        )),
        Document::Polytope(d) => to_value(&PolytopeDoc::from_polytope(
            &w.act_on_polytope(&d.to_polytope()?)?,
        )),
    };
    Ok((payload, vec![format!("acted by {w}")]))
}

fn orbit(input: Value) -> Outcome {
    let map = read_map(input)?;
    guard(map.n(), DEFAULT_ORBIT_BOUND)?;
    let rows = enumerate_partial_duals(&map, DEFAULT_ORBIT_BOUND)?;
    let classes = rows.iter().map(|r| r.class).max().map_or(0, |c| c + 1);
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "edges": r.edges.edges(),
                "vertices": r.vertices,
                "faces": r.faces,
                "genus": r.genus,
                "one_face": r.one_face,
                "class": r.class,
                "sigma": r.map.sigma().cycles(),
            })
        })
        .collect();
    Ok((
        json!({"n": map.n(), "classes": classes, "rows": rows}),
        Vec::new(),
    ))
}

fn iso(input: Value) -> Outcome {
    let docs: Vec<MapDoc> = parse_as(input)?;
    let [a, b] = docs.as_slice() else {
        return Err(Failure::Usage(format!(
            "expected an array of two map documents, got {}",
            docs.len()
        )));
    };
    let (a, b) = (a.to_map()?, b.to_map()?);
    let found = is_isomorphic(&a, &b);
    let payload = json!({
        "isomorphic": found.is_some(),
        "isomorphism": found.map(|h| h.cycles()),
    });
    Ok((payload, Vec::new()))
}
