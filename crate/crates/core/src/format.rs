//! Line-oriented text format for algebras, representations, maps, tensors,
//! pre-Lie products and bilinear forms.
//!
//! ```text
//! [space]
//! even = e
//! odd = f
//!
//! [bracket]
//! e f = 1 f
//!
//! [map T0 : g* -> g parity even]
//! f* = -1 f
//!
//! [tensor r0 parity even]
//! f f = 1
//! ```
//!
//! Space references are declared names, `g` for the algebra, `X*` for duals
//! and `sX` for suspensions. The representations `ad` and `coad` are built in.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graded::linalg::Matrix;
use crate::graded::map::format_combination;
use crate::graded::scalar::{format_scalar, parse_scalar, Scalar};
use crate::graded::{GradedLinearMap, Parity, SuperSpace, Tensor2};
use crate::lie::{BilinearForm, LieSuperAlgebra};
use crate::prelie::PreLieSuperAlgebra;
use crate::rep::Representation;
use crate::rmat::RMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepEntry {
    pub name: String,
    pub on: String,
    /// `ρ(e_a)` for each basis vector of the algebra, not yet checked.
    pub action: Vec<GradedLinearMap>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapEntry {
    pub name: String,
    pub source: String,
    pub target: String,
    pub map: GradedLinearMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieEntry {
    pub name: String,
    pub on: String,
    pub algebra: PreLieSuperAlgebra,
}

/// Everything one file declares, in declaration order. The algebra and the
/// representations are stored unchecked so that invalid input can be reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub algebra: LieSuperAlgebra,
    pub spaces: Vec<(String, SuperSpace)>,
    pub reps: Vec<RepEntry>,
    pub maps: Vec<MapEntry>,
    pub tensors: Vec<(String, RMatrix)>,
    pub prelies: Vec<PreLieEntry>,
    pub forms: Vec<(String, BilinearForm)>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || "_-.'".contains(c))
}

impl Document {
    pub fn new(algebra: LieSuperAlgebra) -> Self {
        Document {
            algebra,
            spaces: Vec::new(),
            reps: Vec::new(),
            maps: Vec::new(),
            tensors: Vec::new(),
            prelies: Vec::new(),
            forms: Vec::new(),
        }
    }

    /// Resolves a space reference.
    pub fn space(&self, name: &str) -> Result<SuperSpace> {
        if name == "g" {
            return Ok(self.algebra.space().clone());
        }
        if let Some((_, s)) = self.spaces.iter().find(|(n, _)| n == name) {
            return Ok(s.clone());
        }
        if let Some(inner) = name.strip_suffix('*') {
            return Ok(self.space(inner)?.dual());
        }
        if let Some(inner) = name.strip_prefix('s') {
            if !inner.is_empty() {
                return Ok(self.space(inner)?.suspend().space);
            }
        }
        Err(Error::UnknownName(name.to_string()))
    }

    fn fresh(&self, name: &str, taken: bool) -> Result<()> {
        if !valid_name(name) {
            return Err(Error::Precondition(format!("invalid name `{name}`")));
        }
        if taken {
            return Err(Error::Precondition(format!("`{name}` is declared twice")));
        }
        Ok(())
    }

    pub fn add_space(&mut self, name: &str, space: SuperSpace) -> Result<()> {
        let taken = name == "g" || self.spaces.iter().any(|(n, _)| n == name);
        self.fresh(name, taken)?;
        self.spaces.push((name.to_string(), space));
        Ok(())
    }

    pub fn add_rep(&mut self, name: &str, on: &str, rho: &Representation) -> Result<()> {
        if rho.algebra() != &self.algebra {
            return Err(Error::AlgebraMismatch(format!("`{name}` acts through another algebra")));
        }
        if rho.space() != &self.space(on)? {
            return Err(Error::SpaceMismatch(format!("`{name}` does not act on `{on}`")));
        }
        let taken = self.reps.iter().any(|r| r.name == name);
        self.fresh(name, taken)?;
        self.reps.push(RepEntry {
            name: name.to_string(),
            on: on.to_string(),
            action: rho.actions().to_vec(),
        });
        Ok(())
    }

    pub fn add_map(&mut self, name: &str, source: &str, target: &str, map: &GradedLinearMap) -> Result<()> {
        if map.domain() != &self.space(source)? || map.codomain() != &self.space(target)? {
            return Err(Error::SpaceMismatch(format!("`{name}` is not a map {source} -> {target}")));
        }
        let taken = self.maps.iter().any(|m| m.name == name);
        self.fresh(name, taken)?;
        self.maps.push(MapEntry {
            name: name.to_string(),
            source: source.to_string(),
            target: target.to_string(),
            map: map.clone(),
        });
        Ok(())
    }

    pub fn add_tensor(&mut self, name: &str, r: &RMatrix) -> Result<()> {
        if r.algebra() != &self.algebra {
            return Err(Error::AlgebraMismatch(format!("`{name}` lives in another algebra")));
        }
        let taken = self.tensors.iter().any(|(n, _)| n == name);
        self.fresh(name, taken)?;
        self.tensors.push((name.to_string(), r.clone()));
        Ok(())
    }

    pub fn add_prelie(&mut self, name: &str, on: &str, a: &PreLieSuperAlgebra) -> Result<()> {
        if a.space() != &self.space(on)? {
            return Err(Error::SpaceMismatch(format!("`{name}` is not defined on `{on}`")));
        }
        let taken = self.prelies.iter().any(|p| p.name == name);
        self.fresh(name, taken)?;
        self.prelies.push(PreLieEntry {
            name: name.to_string(),
            on: on.to_string(),
            algebra: a.clone(),
        });
        Ok(())
    }

    pub fn add_form(&mut self, name: &str, beta: &BilinearForm) -> Result<()> {
        if beta.space() != self.algebra.space() {
            return Err(Error::SpaceMismatch(format!("`{name}` is not a form on g")));
        }
        let taken = self.forms.iter().any(|(n, _)| n == name);
        self.fresh(name, taken)?;
        self.forms.push((name.to_string(), beta.clone()));
        Ok(())
    }

    /// A declared representation, checked, or the built-in `ad` / `coad`.
    pub fn representation(&self, name: &str) -> Result<Representation> {
        if let Some(entry) = self.reps.iter().find(|r| r.name == name) {
            return Representation::new(
                self.algebra.clone(),
                self.space(&entry.on)?,
                entry.action.clone(),
            );
        }
        match name {
            "ad" => Ok(Representation::adjoint(&self.algebra)),
            "coad" => Ok(Representation::coadjoint(&self.algebra)),
            _ => Err(Error::UnknownName(name.to_string())),
        }
    }

    pub fn map(&self, name: &str) -> Result<&GradedLinearMap> {
        self.maps
            .iter()
            .find(|m| m.name == name)
            .map(|m| &m.map)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn tensor(&self, name: &str) -> Result<&RMatrix> {
        self.tensors
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, r)| r)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn prelie(&self, name: &str) -> Result<&PreLieSuperAlgebra> {
        self.prelies
            .iter()
            .find(|p| p.name == name)
            .map(|p| &p.algebra)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn form(&self, name: &str) -> Result<&BilinearForm> {
        self.forms
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, b)| b)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }
}

// ---------------------------------------------------------------- emitting

fn emit_space(out: &mut String, header: &str, s: &SuperSpace) {
    let block = |p: Parity| s.indices(p).map(|i| s.label(i)).collect::<Vec<_>>().join(" ");
    let _ = writeln!(out, "[{header}]");
    let even = block(Parity::Even);
    let odd = block(Parity::Odd);
    let _ = writeln!(out, "{}", format!("even = {even}").trim_end());
    let _ = writeln!(out, "{}", format!("odd = {odd}").trim_end());
}

/// Renders a document; [`parse`] reads it back to an equal value.
pub fn emit(doc: &Document) -> String {
    let mut out = String::new();
    let g = &doc.algebra;
    let gs = g.space();
    emit_space(&mut out, "space", gs);
    out.push_str("\n[bracket]\n");
    for i in 0..g.dim() {
        for j in i..g.dim() {
            let v: Vec<Scalar> = (0..g.dim()).map(|k| g.structure(i, j, k).clone()).collect();
            if v.iter().any(|x| !x.is_zero()) {
                let _ = writeln!(out, "{} {} = {}", gs.label(i), gs.label(j), format_combination(gs, &v));
            }
        }
    }
    for (name, s) in &doc.spaces {
        out.push('\n');
        emit_space(&mut out, &format!("space {name}"), s);
    }
    for rep in &doc.reps {
        let _ = writeln!(out, "\n[rep {} on {}]", rep.name, rep.on);
        for (a, m) in rep.action.iter().enumerate() {
            let s = m.domain();
            for j in 0..s.dim() {
                let image = m.image_of_basis(j);
                if image.iter().any(|x| !x.is_zero()) {
                    let _ = writeln!(out, "{} {} = {}", gs.label(a), s.label(j), format_combination(s, &image));
                }
            }
        }
    }
    for m in &doc.maps {
        let _ = writeln!(
            out,
            "\n[map {} : {} -> {} parity {}]",
            m.name,
            m.source,
            m.target,
            m.map.parity()
        );
        for j in 0..m.map.domain().dim() {
            let image = m.map.image_of_basis(j);
            if image.iter().any(|x| !x.is_zero()) {
                let _ = writeln!(
                    out,
                    "{} = {}",
                    m.map.domain().label(j),
                    format_combination(m.map.codomain(), &image)
                );
            }
        }
    }
    for (name, r) in &doc.tensors {
        let _ = writeln!(out, "\n[tensor {name} parity {}]", r.parity());
        for (c, i, j) in r.tensor().terms() {
            let _ = writeln!(out, "{} {} = {}", gs.label(i), gs.label(j), format_scalar(&c));
        }
    }
    for p in &doc.prelies {
        let a = &p.algebra;
        let _ = writeln!(out, "\n[prelie {} on {} parity {}]", p.name, p.on, a.shift());
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let v = a.product_basis(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    let s = a.space();
                    let _ = writeln!(out, "{} {} = {}", s.label(i), s.label(j), format_combination(s, &v));
                }
            }
        }
    }
    for (name, beta) in &doc.forms {
        let _ = writeln!(out, "\n[form {name} parity {}]", beta.parity());
        for i in 0..gs.dim() {
            for j in 0..gs.dim() {
                let c = beta.eval_basis(i, j);
                if !c.is_zero() {
                    let _ = writeln!(out, "{} {} = {}", gs.label(i), gs.label(j), format_scalar(c));
                }
            }
        }
    }
    out
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit(self))
    }
}

// ---------------------------------------------------------------- parsing

struct Line<'a> {
    number: usize,
    text: &'a str,
}

struct Section<'a> {
    header: Line<'a>,
    lines: Vec<Line<'a>>,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn at(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        e @ Error::Parse { .. } => e,
        other => err(line, other.to_string()),
    }
}

fn split_sections(text: &str) -> Result<Vec<Section<'_>>> {
    let mut sections: Vec<Section<'_>> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let number = n + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(inner) = line.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| err(number, "unterminated section header"))?;
            sections.push(Section {
                header: Line {
                    number,
                    text: inner.trim(),
                },
                lines: Vec::new(),
            });
        } else {
            match sections.last_mut() {
                Some(s) => s.lines.push(Line { number, text: line }),
                None => return Err(err(number, "entry outside of any section")),
            }
        }
    }
    Ok(sections)
}

fn parse_parity(word: &str, line: usize) -> Result<Parity> {
    word.parse()
        .map_err(|_| err(line, format!("expected a parity, found `{word}`")))
}

fn parse_coeff(word: &str, line: usize) -> Result<Scalar> {
    parse_scalar(word).ok_or_else(|| err(line, format!("malformed rational `{word}`")))
}

/// `c1 x1 + c2 x2 ...` or `0`.
fn parse_combination(text: &str, space: &SuperSpace, line: usize) -> Result<Vec<Scalar>> {
    let mut out = vec![Scalar::zero(); space.dim()];
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens == ["0"] {
        return Ok(out);
    }
    let mut k = 0;
    let mut negate = false;
    loop {
        let coeff = tokens
            .get(k)
            .ok_or_else(|| err(line, "expected a coefficient"))?;
        let label = tokens
            .get(k + 1)
            .ok_or_else(|| err(line, format!("coefficient `{coeff}` has no basis vector")))?;
        let mut c = parse_coeff(coeff, line)?;
        if negate {
            c = -c;
        }
        let i = space
            .index_of(label)
            .ok_or_else(|| err(line, format!("unknown basis label `{label}`")))?;
        out[i] += c;
        k += 2;
        match tokens.get(k) {
            None => return Ok(out),
            Some(&"+") => negate = false,
            Some(&"-") => negate = true,
            Some(other) => return Err(err(line, format!("expected `+` or `-`, found `{other}`"))),
        }
        k += 1;
    }
}

/// Splits `lhs = rhs` into the left-hand tokens and the right-hand text.
fn split_entry<'a>(line: &Line<'a>, arity: usize) -> Result<(Vec<&'a str>, &'a str)> {
    let (lhs, rhs) = line
        .text
        .split_once('=')
        .ok_or_else(|| err(line.number, "expected `lhs = rhs`"))?;
    let lhs: Vec<&str> = lhs.split_whitespace().collect();
    if lhs.len() != arity {
        return Err(err(
            line.number,
            format!("expected {arity} label(s) before `=`, found {}", lhs.len()),
        ));
    }
    Ok((lhs, rhs.trim()))
}

fn index(space: &SuperSpace, label: &str, line: usize) -> Result<usize> {
    space
        .index_of(label)
        .ok_or_else(|| err(line, format!("unknown basis label `{label}`")))
}

/// Checks that every non-zero coefficient sits on a vector of parity `expected`.
fn check_parity(space: &SuperSpace, v: &[Scalar], expected: Parity, what: &str, line: usize) -> Result<()> {
    for (k, c) in v.iter().enumerate() {
        if !c.is_zero() && space.parity(k) != expected {
            return Err(err(
                line,
                format!(
                    "{what}: `{}` is {} but the entry must be {expected}",
                    space.label(k),
                    space.parity(k)
                ),
            ));
        }
    }
    Ok(())
}

fn parse_space(section: &Section<'_>) -> Result<SuperSpace> {
    let mut even: Option<Vec<String>> = None;
    let mut odd: Option<Vec<String>> = None;
    for line in &section.lines {
        let (lhs, rhs) = split_entry(line, 1)?;
        let labels: Vec<String> = rhs.split_whitespace().map(str::to_string).collect();
        let slot = match lhs[0] {
            "even" => &mut even,
            "odd" => &mut odd,
            other => return Err(err(line.number, format!("expected `even` or `odd`, found `{other}`"))),
        };
        if slot.is_some() {
            return Err(err(line.number, format!("`{}` given twice", lhs[0])));
        }
        *slot = Some(labels);
    }
    SuperSpace::new(even.unwrap_or_default(), odd.unwrap_or_default()).map_err(at(section.header.number))
}

fn seen_once(seen: &mut [bool], k: usize, line: usize) -> Result<()> {
    if seen[k] {
        return Err(err(line, "entry given twice"));
    }
    seen[k] = true;
    Ok(())
}

fn parse_bracket(space: &SuperSpace, section: &Section<'_>) -> Result<LieSuperAlgebra> {
    let n = space.dim();
    let mut entries = Vec::new();
    let mut seen = vec![false; n * n];
    for line in &section.lines {
        let (lhs, rhs) = split_entry(line, 2)?;
        let i = index(space, lhs[0], line.number)?;
        let j = index(space, lhs[1], line.number)?;
        if i > j {
            return Err(err(
                line.number,
                format!("give the bracket as `{} {}`", lhs[1], lhs[0]),
            ));
        }
        seen_once(&mut seen, i * n + j, line.number)?;
        let v = parse_combination(rhs, space, line.number)?;
        let expected = space.parity(i) + space.parity(j);
        check_parity(space, &v, expected, "bracket parity mismatch", line.number)?;
        entries.push((i, j, v));
    }
    LieSuperAlgebra::from_brackets(space.clone(), &entries).map_err(at(section.header.number))
}

fn parse_rep(doc: &Document, space: &SuperSpace, section: &Section<'_>) -> Result<Vec<GradedLinearMap>> {
    let gs = doc.algebra.space();
    let n = space.dim();
    let mut matrices = vec![Matrix::zeros(n, n); gs.dim()];
    let mut seen = vec![false; gs.dim() * n];
    for line in &section.lines {
        let (lhs, rhs) = split_entry(line, 2)?;
        let a = index(gs, lhs[0], line.number)?;
        let j = index(space, lhs[1], line.number)?;
        seen_once(&mut seen, a * n + j, line.number)?;
        let v = parse_combination(rhs, space, line.number)?;
        let expected = gs.parity(a) + space.parity(j);
        check_parity(space, &v, expected, "action parity mismatch", line.number)?;
        for (k, c) in v.into_iter().enumerate() {
            matrices[a].set(k, j, c);
        }
    }
    matrices
        .into_iter()
        .enumerate()
        .map(|(a, m)| GradedLinearMap::new(space.clone(), space.clone(), gs.parity(a), m))
        .collect::<Result<Vec<_>>>()
        .map_err(at(section.header.number))
}

fn parse_map(source: &SuperSpace, target: &SuperSpace, parity: Parity, section: &Section<'_>) -> Result<GradedLinearMap> {
    let mut m = Matrix::zeros(target.dim(), source.dim());
    let mut seen = vec![false; source.dim()];
    for line in &section.lines {
        let (lhs, rhs) = split_entry(line, 1)?;
        let j = index(source, lhs[0], line.number)?;
        seen_once(&mut seen, j, line.number)?;
        let v = parse_combination(rhs, target, line.number)?;
        let expected = source.parity(j) + parity;
        check_parity(target, &v, expected, "map parity mismatch", line.number)?;
        for (k, c) in v.into_iter().enumerate() {
            m.set(k, j, c);
        }
    }
    GradedLinearMap::new(source.clone(), target.clone(), parity, m).map_err(at(section.header.number))
}

/// Coefficients `a b = c`, one scalar per ordered pair.
fn parse_pairs(space: &SuperSpace, parity: Option<Parity>, section: &Section<'_>) -> Result<(Matrix, Option<Parity>)> {
    let n = space.dim();
    let mut m = Matrix::zeros(n, n);
    let mut seen = vec![false; n * n];
    let mut parity = parity;
    for line in &section.lines {
        let (lhs, rhs) = split_entry(line, 2)?;
        let i = index(space, lhs[0], line.number)?;
        let j = index(space, lhs[1], line.number)?;
        seen_once(&mut seen, i * n + j, line.number)?;
        let c = parse_coeff(rhs, line.number)?;
        if c.is_zero() {
            continue;
        }
        let p = space.parity(i) + space.parity(j);
        match parity {
            Some(q) if q != p => {
                return Err(err(
                    line.number,
                    format!("`{} {}` has parity {p} but the entry must be {q}", lhs[0], lhs[1]),
                ))
            }
            _ => parity = Some(p),
        }
        m.set(i, j, c);
    }
    Ok((m, parity))
}

fn parse_prelie(space: &SuperSpace, shift: Parity, section: &Section<'_>) -> Result<PreLieSuperAlgebra> {
    let n = space.dim();
    let mut entries = Vec::new();
    let mut seen = vec![false; n * n];
    for line in &section.lines {
        let (lhs, rhs) = split_entry(line, 2)?;
        let i = index(space, lhs[0], line.number)?;
        let j = index(space, lhs[1], line.number)?;
        seen_once(&mut seen, i * n + j, line.number)?;
        let v = parse_combination(rhs, space, line.number)?;
        let expected = space.parity(i) + space.parity(j) + shift;
        check_parity(space, &v, expected, "product parity mismatch", line.number)?;
        entries.push((i, j, v));
    }
    PreLieSuperAlgebra::from_entries(space.clone(), shift, &entries).map_err(at(section.header.number))
}

/// Reads `parity P` from the end of a header, if present.
fn trailing_parity<'a>(words: &'a [&'a str], line: usize) -> Result<(&'a [&'a str], Option<Parity>)> {
    match words {
        [rest @ .., "parity", p] => Ok((rest, Some(parse_parity(p, line)?))),
        _ => Ok((words, None)),
    }
}

/// Parses a document. Axioms are not checked; see `validate` in the CLI.
pub fn parse(text: &str) -> Result<Document> {
    let sections = split_sections(text)?;
    let mut iter = sections.iter();
    let first = iter.next().ok_or_else(|| err(1, "missing [space] section"))?;
    if first.header.text != "space" {
        return Err(err(first.header.number, "the first section must be [space]"));
    }
    let space = parse_space(first)?;
    let second = iter
        .next()
        .ok_or_else(|| err(first.header.number, "missing [bracket] section"))?;
    if second.header.text != "bracket" {
        return Err(err(second.header.number, "[space] must be followed by [bracket]"));
    }
    let algebra = parse_bracket(&space, second)?;
    let mut doc = Document::new(algebra);

    for section in iter {
        let line = section.header.number;
        let words: Vec<&str> = section.header.text.split_whitespace().collect();
        let (head, parity) = trailing_parity(&words, line)?;
        match head {
            ["space", name] if parity.is_none() => {
                let s = parse_space(section)?;
                doc.add_space(name, s).map_err(at(line))?;
            }
            ["rep", name, "on", on] if parity.is_none() => {
                let s = doc.space(on).map_err(at(line))?;
                let action = parse_rep(&doc, &s, section)?;
                if doc.reps.iter().any(|r| r.name == *name) || !valid_name(name) {
                    return Err(err(line, format!("invalid or repeated name `{name}`")));
                }
                doc.reps.push(RepEntry {
                    name: name.to_string(),
                    on: on.to_string(),
                    action,
                });
            }
            ["map", name, ":", source, "->", target] => {
                let src = doc.space(source).map_err(at(line))?;
                let dst = doc.space(target).map_err(at(line))?;
                let m = parse_map(&src, &dst, parity.unwrap_or(Parity::Even), section)?;
                doc.add_map(name, source, target, &m).map_err(at(line))?;
            }
            ["tensor", name] => {
                let gs = doc.algebra.space().clone();
                let (m, p) = parse_pairs(&gs, parity, section)?;
                let r = RMatrix::with_parity(doc.algebra.clone(), p.unwrap_or(Parity::Even), m)
                    .map_err(at(line))?;
                doc.add_tensor(name, &r).map_err(at(line))?;
            }
            ["prelie", name, "on", on] => {
                let s = doc.space(on).map_err(at(line))?;
                let a = parse_prelie(&s, parity.unwrap_or(Parity::Even), section)?;
                doc.add_prelie(name, on, &a).map_err(at(line))?;
            }
            ["form", name] => {
                let gs = doc.algebra.space().clone();
                let (m, p) = parse_pairs(&gs, parity, section)?;
                let beta = BilinearForm::new(gs, p.unwrap_or(Parity::Even), m).map_err(at(line))?;
                doc.add_form(name, &beta).map_err(at(line))?;
            }
            ["space"] | ["bracket"] => {
                return Err(err(line, format!("[{}] given twice", section.header.text)));
            }
            _ => return Err(err(line, format!("unknown section `[{}]`", section.header.text))),
        }
    }
    Ok(doc)
}

impl FromStr for Document {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

/// A tensor as a standalone element of `g ⊗ g`, for display next to its algebra.
pub fn emit_tensor(name: &str, t: &Tensor2) -> String {
    let mut out = format!("[tensor {name}");
    if let Some(p) = t.parity() {
        let _ = write!(out, " parity {p}");
    }
    out.push_str("]\n");
    for (c, i, j) in t.terms() {
        let _ = writeln!(out, "{} {} = {}", t.left().label(i), t.right().label(j), format_scalar(&c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX: &str = "\
# a 1|1 algebra
[space]
even = e
odd = f

[bracket]
e f = 1 f

[map T1 : g* -> g parity odd]
e* = 1 f
f* = -1 e

[tensor r1]
e f = 1
f e = 1
";

    #[test]
    fn round_trip() {
        let doc = parse(EX).unwrap();
        assert_eq!(doc.tensor("r1").unwrap().parity(), Parity::Odd);
        let text = emit(&doc);
        assert_eq!(parse(&text).unwrap(), doc);
        assert_eq!(emit(&parse(&text).unwrap()), text);
    }

    #[test]
    fn odd_square_is_accepted() {
        let doc = parse("[space]\neven = e\nodd = f\n[bracket]\nf f = 1 e\n").unwrap();
        assert_eq!(doc.algebra.product_table(), vec!["[f,f] = 1 e"]);
    }

    #[test]
    fn parity_mismatch_reports_the_line() {
        let e = parse("[space]\neven = e\nodd = f\n[bracket]\ne f = 1 e\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 5, .. }), "{e}");
    }

    #[test]
    fn malformed_rational() {
        let e = parse("[space]\neven = e\nodd = f\n[bracket]\ne f = 1/x f\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 5, ref message } if message.contains("rational")));
    }

    #[test]
    fn builtin_representations() {
        let doc = parse(EX).unwrap();
        let co = doc.representation("coad").unwrap();
        assert_eq!(co.space(), &doc.space("g*").unwrap());
        assert!(doc.representation("nope").is_err());
    }
}
