//! Line-oriented text format for algebra definitions.
//!
//! ```text
//! field GF(2)
//! dim 3
//! basis e1 e2 e3
//! [e1, e2] = e3
//! subspace B = span(e1, e1 + e3)
//! ```
//!
//! Alternatively `preset name(args)` replaces the basis and bracket lines.
//! Unlisted brackets are zero; `#` starts a comment.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::corpus::{Built, Preset, PresetError};
use crate::exactfield::{Field, Scalar};
use crate::liecore::{LieAlgebra, LieError};
use crate::linspace::{zero_vector, Subspace, Vector};

/// 1-based line and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("bracket [{0}, {1}] defined more than once")]
    DuplicateBracket(String, String),
    #[error("antisymmetry: diagonal bracket [{0}, {0}] must be 0")]
    Antisymmetry(String),
    #[error("Jacobi identity fails at (i,j,k) = ({i},{j},{k}) = ({li},{lj},{lk}): residual {residual}")]
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        li: String,
        lj: String,
        lk: String,
        residual: String,
    },
    #[error("field: {0}")]
    Field(String),
    #[error("preset: {0}")]
    Preset(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{pos}: {kind}")]
pub struct ParseError {
    pub pos: Pos,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn new(pos: Pos, kind: ParseErrorKind) -> Self {
        ParseError { pos, kind }
    }

    fn syntax(pos: Pos, msg: impl Into<String>) -> Self {
        ParseError::new(pos, ParseErrorKind::Syntax(msg.into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub negative: bool,
    /// Literal coefficient text, `None` for an implicit 1.
    pub coeff: Option<String>,
    pub label: String,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketStmt {
    pub left: (String, Pos),
    pub right: (String, Pos),
    pub terms: Vec<Term>,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceStmt {
    pub name: String,
    pub vectors: Vec<Vec<Term>>,
    pub pos: Pos,
}

/// The statements of a document before they are resolved into an algebra.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Document {
    pub field: Option<(Field, Pos)>,
    pub dim: Option<(usize, Pos)>,
    pub basis: Option<(Vec<String>, Pos)>,
    pub preset: Option<(Preset, Pos)>,
    pub brackets: Vec<BracketStmt>,
    pub subspaces: Vec<SubspaceStmt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(String),
    Sym(char),
}

fn lex(line: &str, line_no: usize) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos {
            line: line_no,
            col: i + 1,
        };
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Num(chars[start..i].iter().collect()), pos));
        } else if "[],=()+-*/".contains(c) {
            out.push((Tok::Sym(c), pos));
            i += 1;
        } else {
            return Err(ParseError::syntax(pos, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Cursor<'a> {
    toks: &'a [(Tok, Pos)],
    at: usize,
    end: Pos,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<(&'a Tok, Pos)> {
        let t = self.toks.get(self.at).map(|(t, p)| (t, *p));
        self.at += 1;
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(ParseError::syntax(self.pos(), format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Result<(String, Pos), ParseError> {
        match self.next() {
            Some((Tok::Ident(s), p)) => Ok((s.clone(), p)),
            _ => {
                self.at -= 1;
                Err(ParseError::syntax(self.pos(), "expected an identifier"))
            }
        }
    }

    fn done(&self) -> bool {
        self.at >= self.toks.len()
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.done() {
            Ok(())
        } else {
            Err(ParseError::syntax(self.pos(), "unexpected trailing input"))
        }
    }

    fn number(&mut self) -> Option<String> {
        if let Some(Tok::Num(n)) = self.peek() {
            self.at += 1;
            let mut lit = n.clone();
            if self.peek() == Some(&Tok::Sym('/')) {
                if let Some((Tok::Num(d), _)) = self.toks.get(self.at + 1) {
                    self.at += 2;
                    lit = format!("{lit}/{d}");
                }
            }
            Some(lit)
        } else {
            None
        }
    }
}

/// `expr := 0 | [sign] term (sign term)*`, `term := [coeff ['*']] label`.
fn parse_expr(cur: &mut Cursor, stop: &[char]) -> Result<Vec<Term>, ParseError> {
    let at_stop = |cur: &Cursor| match cur.peek() {
        None => true,
        Some(Tok::Sym(c)) => stop.contains(c),
        _ => false,
    };
    if let Some(Tok::Num(n)) = cur.peek() {
        let follows_stop = match cur.toks.get(cur.at + 1) {
            None => true,
            Some((Tok::Sym(c), _)) => stop.contains(c),
            _ => false,
        };
        if follows_stop && n.chars().all(|c| c == '0') {
            cur.at += 1;
            return Ok(Vec::new());
        }
    }
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let mut negative = false;
        let mut signed = false;
        while let Some(Tok::Sym(c @ ('+' | '-'))) = cur.peek() {
            negative ^= *c == '-';
            signed = true;
            cur.at += 1;
        }
        if !first && !signed {
            return Err(ParseError::syntax(cur.pos(), "expected `+` or `-` between terms"));
        }
        let coeff = cur.number();
        if coeff.is_some() {
            cur.eat('*');
        }
        let (label, lpos) = cur.ident().map_err(|_| {
            ParseError::syntax(cur.pos(), "expected a basis label in linear combination")
        })?;
        terms.push(Term {
            negative,
            coeff,
            label,
            pos: lpos,
        });
        first = false;
        if at_stop(cur) {
            return Ok(terms);
        }
    }
}

fn parse_field(cur: &mut Cursor) -> Result<Field, ParseError> {
    let pos = cur.pos();
    let (name, _) = cur.ident()?;
    let field = match name.as_str() {
        "Q" => Field::Rationals,
        "GF" => {
            cur.expect('(')?;
            let ppos = cur.pos();
            let Some((Tok::Num(p), _)) = cur.next() else {
                return Err(ParseError::syntax(ppos, "expected a prime"));
            };
            cur.expect(')')?;
            let p: u64 = p
                .parse()
                .map_err(|_| ParseError::new(ppos, ParseErrorKind::Field(format!("bad modulus {p}"))))?;
            Field::prime(p).map_err(|e| ParseError::new(ppos, ParseErrorKind::Field(e.to_string())))?
        }
        other => {
            return Err(ParseError::new(
                pos,
                ParseErrorKind::Field(format!("unknown field `{other}`; use GF(p) or Q")),
            ))
        }
    };
    Ok(field)
}

fn once<T>(slot: &mut Option<(T, Pos)>, value: T, pos: Pos, what: &str) -> Result<(), ParseError> {
    if slot.is_some() {
        return Err(ParseError::syntax(pos, format!("`{what}` given more than once")));
    }
    *slot = Some((value, pos));
    Ok(())
}

/// Parse statements without resolving labels or coefficients.
pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let mut doc = Document::default();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks = lex(line, line_no)?;
        if toks.is_empty() {
            continue;
        }
        let end = Pos {
            line: line_no,
            col: line.chars().count() + 1,
        };
        let mut cur = Cursor {
            toks: &toks,
            at: 0,
            end,
        };
        let start = cur.pos();
        match cur.peek() {
            Some(Tok::Sym('[')) => {
                cur.next();
                let left = cur.ident()?;
                cur.expect(',')?;
                let right = cur.ident()?;
                cur.expect(']')?;
                cur.expect('=')?;
                let terms = parse_expr(&mut cur, &[])?;
                cur.finish()?;
                doc.brackets.push(BracketStmt {
                    left,
                    right,
                    terms,
                    pos: start,
                });
            }
            Some(Tok::Ident(kw)) => {
                cur.next();
                match kw.as_str() {
                    "field" => {
                        let f = parse_field(&mut cur)?;
                        cur.finish()?;
                        once(&mut doc.field, f, start, "field")?;
                    }
                    "dim" => {
                        let npos = cur.pos();
                        let Some((Tok::Num(n), _)) = cur.next() else {
                            return Err(ParseError::syntax(npos, "expected a dimension"));
                        };
                        cur.finish()?;
                        let n = n
                            .parse()
                            .map_err(|_| ParseError::syntax(npos, "dimension too large"))?;
                        once(&mut doc.dim, n, start, "dim")?;
                    }
                    "basis" => {
                        let mut labels = Vec::new();
                        while !cur.done() {
                            let (l, lpos) = cur.ident()?;
                            if labels.contains(&l) {
                                return Err(ParseError::syntax(lpos, format!("label `{l}` repeated")));
                            }
                            labels.push(l);
                        }
                        once(&mut doc.basis, labels, start, "basis")?;
                    }
                    "preset" => {
                        let ppos = cur.pos();
                        let rest: String = line
                            .chars()
                            .skip(ppos.col.saturating_sub(1))
                            .collect();
                        let preset: Preset = rest.parse().map_err(|e: PresetError| {
                            ParseError::new(ppos, ParseErrorKind::Preset(e.to_string()))
                        })?;
                        once(&mut doc.preset, preset, start, "preset")?;
                    }
                    "subspace" => {
                        let (name, _) = cur.ident()?;
                        cur.expect('=')?;
                        let (kw, kpos) = cur.ident()?;
                        if kw != "span" {
                            return Err(ParseError::syntax(kpos, "expected `span(...)`"));
                        }
                        cur.expect('(')?;
                        let mut vectors = Vec::new();
                        if !cur.eat(')') {
                            loop {
                                vectors.push(parse_expr(&mut cur, &[',', ')'])?);
                                if cur.eat(')') {
                                    break;
                                }
                                cur.expect(',')?;
                            }
                        }
                        cur.finish()?;
                        if doc.subspaces.iter().any(|s| s.name == name) {
                            return Err(ParseError::syntax(start, format!("subspace `{name}` defined twice")));
                        }
                        doc.subspaces.push(SubspaceStmt {
                            name,
                            vectors,
                            pos: start,
                        });
                    }
                    other => {
                        return Err(ParseError::syntax(start, format!("unknown statement `{other}`")));
                    }
                }
            }
            _ => return Err(ParseError::syntax(start, "expected a statement")),
        }
    }
    Ok(doc)
}

fn resolve_vector(
    field: Field,
    index: &HashMap<&str, usize>,
    n: usize,
    terms: &[Term],
) -> Result<Vector, ParseError> {
    let mut v = zero_vector(field, n);
    for t in terms {
        let &k = index
            .get(t.label.as_str())
            .ok_or_else(|| ParseError::new(t.pos, ParseErrorKind::UnknownLabel(t.label.clone())))?;
        let c = match &t.coeff {
            Some(lit) => field
                .parse_scalar(lit)
                .map_err(|e| ParseError::new(t.pos, ParseErrorKind::Field(e.to_string())))?,
            None => field.one(),
        };
        let c = if t.negative { c.neg() } else { c };
        v[k] = v[k].checked_add(&c).expect("same field");
    }
    Ok(v)
}

impl Document {
    /// Resolve labels and literals and validate the algebra.
    pub fn build(&self) -> Result<Built, ParseError> {
        let origin = Pos { line: 1, col: 1 };
        let mut built = if let Some((preset, ppos)) = &self.preset {
            if let Some((_, bpos)) = &self.basis {
                return Err(ParseError::syntax(*bpos, "`basis` cannot be combined with `preset`"));
            }
            if let Some(b) = self.brackets.first() {
                return Err(ParseError::syntax(b.pos, "brackets cannot be combined with `preset`"));
            }
            let field = match (&self.field, preset.natural_field()) {
                (Some((f, _)), _) => *f,
                (None, Some(f)) => f,
                (None, None) => {
                    return Err(ParseError::new(
                        *ppos,
                        ParseErrorKind::Field("preset needs a `field` line".into()),
                    ))
                }
            };
            preset
                .build(field)
                .map_err(|e| ParseError::new(*ppos, ParseErrorKind::Preset(e.to_string())))?
        } else {
            let (field, _) = self.field.ok_or_else(|| {
                ParseError::new(origin, ParseErrorKind::Field("missing `field` line".into()))
            })?;
            let (labels, _) = self
                .basis
                .clone()
                .ok_or_else(|| ParseError::syntax(origin, "missing `basis` line"))?;
            let n = labels.len();
            let index: HashMap<&str, usize> =
                labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
            let lookup = |(l, p): &(String, Pos)| {
                index
                    .get(l.as_str())
                    .copied()
                    .ok_or_else(|| ParseError::new(*p, ParseErrorKind::UnknownLabel(l.clone())))
            };
            let mut seen: HashMap<(usize, usize), Pos> = HashMap::new();
            let mut table = Vec::new();
            for b in &self.brackets {
                let i = lookup(&b.left)?;
                let j = lookup(&b.right)?;
                let v = resolve_vector(field, &index, n, &b.terms)?;
                if i == j {
                    if v.iter().all(Scalar::is_zero) {
                        continue;
                    }
                    return Err(ParseError::new(b.pos, ParseErrorKind::Antisymmetry(b.left.0.clone())));
                }
                let key = (i.min(j), i.max(j));
                if seen.insert(key, b.pos).is_some() {
                    return Err(ParseError::new(
                        b.pos,
                        ParseErrorKind::DuplicateBracket(b.left.0.clone(), b.right.0.clone()),
                    ));
                }
                table.push((i, j, v));
            }
            let algebra = LieAlgebra::from_brackets(field, labels.clone(), table).map_err(|e| match e {
                LieError::Jacobi { i, j, k, residual, .. } => ParseError::new(
                    self.brackets.first().map(|b| b.pos).unwrap_or(origin),
                    ParseErrorKind::Jacobi {
                        i,
                        j,
                        k,
                        li: labels[i - 1].clone(),
                        lj: labels[j - 1].clone(),
                        lk: labels[k - 1].clone(),
                        residual,
                    },
                ),
                other => ParseError::syntax(origin, other.to_string()),
            })?;
            Built {
                algebra,
                subspaces: BTreeMap::new(),
            }
        };
        if let Some((f, fpos)) = &self.field {
            if *f != built.algebra.field() {
                return Err(ParseError::new(
                    *fpos,
                    ParseErrorKind::Field(format!("preset is defined over {}", built.algebra.field())),
                ));
            }
        }
        if let Some((n, dpos)) = self.dim {
            if n != built.algebra.dim() {
                return Err(ParseError::syntax(
                    dpos,
                    format!("`dim {n}` does not match {} basis elements", built.algebra.dim()),
                ));
            }
        }
        let extra = resolve_subspaces(&built.algebra, &self.subspaces)?;
        built.subspaces.extend(extra);
        Ok(built)
    }
}

fn resolve_subspaces(
    alg: &LieAlgebra,
    stmts: &[SubspaceStmt],
) -> Result<BTreeMap<String, Subspace>, ParseError> {
    let index: HashMap<&str, usize> = alg
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let mut out = BTreeMap::new();
    for s in stmts {
        let vs = s
            .vectors
            .iter()
            .map(|terms| resolve_vector(alg.field(), &index, alg.dim(), terms))
            .collect::<Result<Vec<_>, _>>()?;
        out.insert(s.name.clone(), alg.span(&vs));
    }
    Ok(out)
}

/// Parse a file holding only `subspace` statements against an existing
/// algebra's labels (used for witness files).
pub fn parse_subspaces(alg: &LieAlgebra, text: &str) -> Result<BTreeMap<String, Subspace>, ParseError> {
    let doc = parse_document(text)?;
    let stray = doc
        .field
        .map(|(_, p)| p)
        .or(doc.dim.map(|(_, p)| p))
        .or(doc.basis.as_ref().map(|(_, p)| *p))
        .or(doc.preset.as_ref().map(|(_, p)| *p))
        .or(doc.brackets.first().map(|b| b.pos));
    if let Some(pos) = stray {
        return Err(ParseError::syntax(pos, "only `subspace` statements are allowed here"));
    }
    resolve_subspaces(alg, &doc.subspaces)
}

/// Parse and build in one step.
pub fn parse(text: &str) -> Result<Built, ParseError> {
    parse_document(text)?.build()
}

/// `c1*l1 + c2*l2 + …`, or `0` for the zero vector.
pub fn format_combination(labels: &[String], v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(labels)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| {
            if c.is_one() {
                l.clone()
            } else {
                format!("{}*{l}", c.to_literal())
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// Serialize an algebra and named subspaces in the document format.
pub fn print(alg: &LieAlgebra, subspaces: &BTreeMap<String, Subspace>) -> String {
    let mut out = String::new();
    out.push_str(&format!("field {}\n", alg.field()));
    out.push_str(&format!("dim {}\n", alg.dim()));
    out.push_str("basis");
    for l in alg.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    let labels = alg.labels();
    for (i, j, v) in alg.brackets() {
        out.push_str(&format!(
            "[{}, {}] = {}\n",
            labels[i],
            labels[j],
            format_combination(labels, v)
        ));
    }
    for (name, s) in subspaces {
        let vs: Vec<String> = s
            .basis()
            .iter()
            .map(|v| format_combination(labels, v))
            .collect();
        out.push_str(&format!("subspace {name} = span({})\n", vs.join(", ")));
    }
    out
}
