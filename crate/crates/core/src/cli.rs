//! The `superybe` command-line driver.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails,
//! 2 on usage or parse errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::{format_map, load_fixture};
use crate::error::Error;
use crate::format::{emit, parse, Document};
use crate::graded::map::format_combination;
use crate::graded::scalar::parse_scalar;
use crate::graded::{GradedLinearMap, Parity, Scalar, Tensor3};
use crate::lie::check_lie_axioms;
use crate::oop::{grid_search_oops, is_oop, parity_dual_oop, SearchOptions, DEFAULT_SEARCH_CAP};
use crate::prelie::{
    check_prelie, compatible_prelie, prelie_from_oop, prelie_rmatrix_pair, subadjacent,
};
use crate::rep::check_representation;
use crate::report::Report;
use crate::rmat::{
    hierarchy_walk, is_pan_supersymmetric, operator_to_rmatrix, scybe_defect, SemidirectRMatrix,
    Variant,
};

#[derive(Debug, Parser)]
#[command(name = "superybe", version, about = "Lie superalgebras, O-operators and super r-matrices")]
pub struct Cli {
    /// Emit a JSON object instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for searches; output does not depend on it.
    #[arg(long, global = true, env = "SUPERYBE_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Plain,
    Dual,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the algebra, representation and pre-Lie axioms of a file.
    Validate { file: PathBuf },
    /// Check the O-operator identity and print the defect table.
    CheckOop {
        file: PathBuf,
        #[arg(long)]
        map: String,
        #[arg(long)]
        rep: String,
    },
    /// Check the super classical Yang-Baxter equation.
    CheckCybe {
        file: PathBuf,
        #[arg(long)]
        tensor: String,
    },
    /// Emit T^s and ρ^s.
    Dualize {
        file: PathBuf,
        #[arg(long)]
        map: String,
        #[arg(long)]
        rep: String,
    },
    /// Emit the semidirect algebra and the r-matrix built from an O-operator.
    BuildRmatrix {
        file: PathBuf,
        #[arg(long)]
        map: String,
        #[arg(long)]
        rep: String,
        #[arg(long, value_enum, default_value = "plain")]
        variant: VariantArg,
    },
    /// Walk the tree hierarchy along a word in `+` and `-`.
    Hierarchy {
        file: PathBuf,
        #[arg(long)]
        tensor: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Print every level, not only the last.
        #[arg(long)]
        trace: bool,
    },
    /// Pre-Lie constructions.
    Prelie {
        file: PathBuf,
        #[command(subcommand)]
        action: PrelieAction,
    },
    /// Enumerate O-operators with entries from a finite set.
    Search {
        file: PathBuf,
        #[arg(long)]
        rep: String,
        #[arg(long)]
        parity: Parity,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        entries: Vec<String>,
        /// Largest number of candidate maps to enumerate.
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        cap: u128,
    },
    /// Run a built-in fixture and print its expectations.
    Demo { name: String },
}

#[derive(Debug, Subcommand)]
pub enum PrelieAction {
    /// The sub-adjacent Lie superalgebra.
    Subadjacent {
        #[arg(long)]
        prelie: String,
    },
    /// r_id and r_{id^s} for the left regular representation.
    RmatrixPair {
        #[arg(long)]
        prelie: String,
    },
    /// The product induced by an O-operator (on sV when it is odd).
    FromOop {
        #[arg(long)]
        map: String,
        #[arg(long)]
        rep: String,
    },
    /// The compatible pre-Lie product of an invertible O-operator.
    Compatible {
        #[arg(long)]
        map: String,
        #[arg(long)]
        rep: String,
    },
}

/// What a command printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Outcome {
    passed: bool,
    text: String,
    json: Value,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::UnknownName(_)
        | Error::UnknownLabel(_)
        | Error::UnknownFixture(_)
        | Error::SearchTooLarge { .. } => 2,
        _ => 1,
    }
}

/// Parses arguments and runs the command without touching the process state.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let json = cli.json;
    match execute(&cli) {
        Ok(outcome) => {
            let stdout = if json {
                let mut v = outcome.json;
                v["passed"] = Value::Bool(outcome.passed);
                format!("{v:#}\n")
            } else {
                outcome.text
            };
            Output {
                code: if outcome.passed { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            let code = exit_code(&e);
            if json {
                let v = json!({ "passed": false, "error": e.to_string() });
                Output { code, stdout: format!("{v:#}\n"), stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: format!("error: {e}\n") }
            }
        }
    }
}

fn load(file: &PathBuf) -> Result<Document, Error> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", file.display()),
    })?;
    parse(&text)
}

/// The space reference a representation acts on.
fn rep_space(doc: &Document, rep: &str) -> String {
    match doc.reps.iter().find(|r| r.name == rep) {
        Some(r) => r.on.clone(),
        None if rep == "coad" => "g*".to_string(),
        None => "g".to_string(),
    }
}

fn defect_lines(d: &Tensor3) -> Vec<String> {
    let s = d.space();
    d.nonzero()
        .into_iter()
        .map(|((a, b, c), v)| {
            format!(
                "{} {}⊗{}⊗{}",
                crate::graded::scalar::format_scalar(&v),
                s.label(a),
                s.label(b),
                s.label(c)
            )
        })
        .collect()
}

fn report_json(object: &str, r: &Report) -> Value {
    json!({ "object": object, "checks": r.checks })
}

fn report_text(out: &mut String, object: &str, r: &Report) {
    for c in &r.checks {
        let _ = writeln!(out, "{object}: {c}");
    }
}

/// A document carrying the original algebra and declared spaces.
fn derived(doc: &Document) -> Document {
    let mut d = Document::new(doc.algebra.clone());
    d.spaces = doc.spaces.clone();
    d
}

/// `T^s` and `ρ^s` as `{map}_s` and `{rep}_s`, next to the original algebra.
pub fn dualize(doc: &Document, map: &str, rep: &str) -> Result<Document, Error> {
    let rho = doc.representation(rep)?;
    let entry = doc
        .maps
        .iter()
        .find(|m| m.name == map)
        .ok_or_else(|| Error::UnknownName(map.to_string()))?;
    let on = rep_space(doc, rep);
    if entry.source != on {
        return Err(Error::SpaceMismatch(format!("`{map}` is not defined on the space of `{rep}`")));
    }
    let (ts, rho_s) = parity_dual_oop(&entry.map, &rho);
    let mut out = derived(doc);
    out.add_rep(&format!("{rep}_s"), &format!("s{on}"), &rho_s)?;
    out.add_map(&format!("{map}_s"), &format!("s{on}"), &entry.target, &ts)?;
    Ok(out)
}

/// The semidirect algebra with the r-matrix as tensor `r`.
pub fn rmatrix_document(level: &SemidirectRMatrix) -> Result<Document, Error> {
    let mut d = Document::new(level.semidirect.algebra.clone());
    d.add_tensor("r", &level.rmatrix)?;
    Ok(d)
}

fn rmatrix_outcome(levels: &[(String, SemidirectRMatrix)]) -> Result<Outcome, Error> {
    let mut text = String::new();
    let mut items = Vec::new();
    let mut passed = true;
    for (label, level) in levels {
        let defect = scybe_defect(&level.rmatrix);
        passed &= defect.is_zero();
        let doc = rmatrix_document(level)?;
        let _ = writeln!(text, "# {label}");
        let _ = writeln!(text, "# SCYBE defect: {defect}");
        text.push_str(&emit(&doc));
        text.push('\n');
        items.push(json!({
            "label": label,
            "document": emit(&doc),
            "tensor": level.rmatrix.to_string(),
            "parity": level.rmatrix.parity().to_string(),
            "defect": defect_lines(&defect),
        }));
    }
    Ok(Outcome {
        passed,
        text,
        json: json!({ "levels": items }),
    })
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Validate { file } => {
            let doc = load(file)?;
            let mut text = String::new();
            let mut objects = Vec::new();
            let mut passed = true;
            let r = check_lie_axioms(&doc.algebra);
            passed &= r.passed();
            report_text(&mut text, "algebra", &r);
            objects.push(report_json("algebra", &r));
            for rep in &doc.reps {
                let space = doc.space(&rep.on)?;
                let r = check_representation(&doc.algebra, &space, &rep.action)?;
                passed &= r.passed();
                let name = format!("rep {}", rep.name);
                report_text(&mut text, &name, &r);
                objects.push(report_json(&name, &r));
            }
            for p in &doc.prelies {
                let r = check_prelie(&p.algebra);
                passed &= r.passed();
                let name = format!("prelie {}", p.name);
                report_text(&mut text, &name, &r);
                objects.push(report_json(&name, &r));
            }
            Ok(Outcome { passed, text, json: json!({ "reports": objects }) })
        }
        Command::CheckOop { file, map, rep } => {
            let doc = load(file)?;
            let rho = doc.representation(rep)?;
            let t = doc.map(map)?;
            let verdict = is_oop(t, &rho)?;
            let g = doc.algebra.space();
            let v = rho.space();
            let mut text = format!(
                "{map} is {}an O-operator for {rep}\n",
                if verdict.holds { "" } else { "not " }
            );
            let mut table = Vec::new();
            for (i, j) in verdict.failures() {
                let value = format_combination(g, verdict.defect(i, j));
                let _ = writeln!(text, "Op({}, {}) = {value}", v.label(i), v.label(j));
                table.push(json!({ "left": v.label(i), "right": v.label(j), "value": value }));
            }
            Ok(Outcome {
                passed: verdict.holds,
                text,
                json: json!({ "map": map, "rep": rep, "holds": verdict.holds, "defect": table }),
            })
        }
        Command::CheckCybe { file, tensor } => {
            let doc = load(file)?;
            let r = doc.tensor(tensor)?;
            let defect = scybe_defect(r);
            let pan = is_pan_supersymmetric(r);
            let mut text = format!("{tensor} = {r}\nparity: {}\npan-supersymmetric: {pan}\n", r.parity());
            let lines = defect_lines(&defect);
            if lines.is_empty() {
                text.push_str("SCYBE defect: 0\n");
            } else {
                text.push_str("SCYBE defect:\n");
                for l in &lines {
                    let _ = writeln!(text, "  {l}");
                }
            }
            Ok(Outcome {
                passed: defect.is_zero(),
                text,
                json: json!({
                    "tensor": tensor,
                    "value": r.to_string(),
                    "parity": r.parity().to_string(),
                    "pan_supersymmetric": pan,
                    "defect": lines,
                }),
            })
        }
        Command::Dualize { file, map, rep } => {
            let out = dualize(&load(file)?, map, rep)?;
            let text = emit(&out);
            Ok(Outcome { passed: true, json: json!({ "document": text }), text })
        }
        Command::BuildRmatrix { file, map, rep, variant } => {
            let doc = load(file)?;
            let rho = doc.representation(rep)?;
            let t = doc.map(map)?;
            let variant = match variant {
                VariantArg::Plain => Variant::Plain,
                VariantArg::Dual => Variant::Dual,
            };
            let level = operator_to_rmatrix(t, &rho, variant)?;
            rmatrix_outcome(&[(format!("r from {map}"), level)])
        }
        Command::Hierarchy { file, tensor, word, trace } => {
            let doc = load(file)?;
            let r = doc.tensor(tensor)?;
            let levels = hierarchy_walk(r, word)?;
            let labelled: Vec<(String, SemidirectRMatrix)> = levels
                .into_iter()
                .enumerate()
                .map(|(i, l)| (format!("level {}", i + 1), l))
                .collect();
            let shown = if *trace || labelled.is_empty() {
                &labelled[..]
            } else {
                &labelled[labelled.len() - 1..]
            };
            let mut outcome = rmatrix_outcome(shown)?;
            outcome.passed = labelled.iter().all(|(_, l)| scybe_defect(&l.rmatrix).is_zero());
            Ok(outcome)
        }
        Command::Prelie { file, action } => prelie_command(&load(file)?, action),
        Command::Search { file, rep, parity, entries, cap } => {
            let doc = load(file)?;
            let rho = doc.representation(rep)?;
            let values = entries
                .iter()
                .map(|e| {
                    parse_scalar(e).ok_or_else(|| Error::Parse {
                        line: 0,
                        message: format!("malformed rational `{e}` in --entries"),
                    })
                })
                .collect::<Result<Vec<Scalar>, Error>>()?;
            let options = SearchOptions { cap: *cap, threads: cli.threads };
            let found = grid_search_oops(&rho, *parity, &values, options)?;
            let mut out = derived(&doc);
            if let Some(entry) = doc.reps.iter().find(|r| r.name == *rep) {
                out.reps.push(entry.clone());
            }
            let on = rep_space(&doc, rep);
            let mut maps = Vec::new();
            for (i, t) in found.iter().enumerate() {
                out.add_map(&format!("T{}", i + 1), &on, "g", t)?;
                maps.push(format_map(t));
            }
            let text = format!("# {} O-operator(s) of parity {parity}\n{}", found.len(), emit(&out));
            Ok(Outcome {
                passed: true,
                text,
                json: json!({ "count": found.len(), "maps": maps, "document": emit(&out) }),
            })
        }
        Command::Demo { name } => {
            let f = load_fixture(name)?;
            let mut text = format!("{}: {}\n\n{}\n", f.name, f.summary, emit(&f.document));
            for e in &f.expectations {
                let _ = writeln!(text, "{e}");
            }
            let items: Vec<Value> = f
                .expectations
                .iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "source": e.source,
                        "expected": e.expected,
                        "actual": e.actual,
                        "passed": e.passed(),
                    })
                })
                .collect();
            Ok(Outcome {
                passed: f.passed(),
                text,
                json: json!({ "fixture": f.name, "document": emit(&f.document), "expectations": items }),
            })
        }
    }
}

fn prelie_command(doc: &Document, action: &PrelieAction) -> Result<Outcome, Error> {
    match action {
        PrelieAction::Subadjacent { prelie } => {
            let a = doc.prelie(prelie)?;
            let g = subadjacent(a)?;
            let mut out = Document::new(g);
            out.add_prelie(prelie, "g", &a.relabel(out.algebra.space().clone())?)?;
            let text = emit(&out);
            Ok(Outcome { passed: true, json: json!({ "document": text }), text })
        }
        PrelieAction::RmatrixPair { prelie } => {
            let (plain, dual) = prelie_rmatrix_pair(doc.prelie(prelie)?)?;
            rmatrix_outcome(&[("r_id".to_string(), plain), ("r_{id^s}".to_string(), dual)])
        }
        PrelieAction::FromOop { map, rep } => {
            let rho = doc.representation(rep)?;
            let t: &GradedLinearMap = doc.map(map)?;
            let a = prelie_from_oop(t, &rho)?;
            let on = rep_space(doc, rep);
            let on = if t.parity().is_odd() { format!("s{on}") } else { on };
            let mut out = derived(doc);
            out.add_prelie(&format!("{map}_prelie"), &on, &a)?;
            let report = check_prelie(&a);
            let mut text = emit(&out);
            report_text(&mut text, "# prelie", &report);
            Ok(Outcome {
                passed: report.passed(),
                json: json!({ "document": emit(&out), "checks": report.checks }),
                text,
            })
        }
        PrelieAction::Compatible { map, rep } => {
            let rho = doc.representation(rep)?;
            let a = compatible_prelie(doc.map(map)?, &rho)?;
            let mut out = derived(doc);
            out.add_prelie(&format!("{map}_compatible"), "g", &a)?;
            let report = check_prelie(&a);
            let mut text = emit(&out);
            report_text(&mut text, "# prelie", &report);
            Ok(Outcome {
                passed: report.passed(),
                json: json!({ "document": emit(&out), "checks": report.checks }),
                text,
            })
        }
    }
}
