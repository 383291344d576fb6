//! Named algebra builders and the default verification corpus.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::dsl::{self, ParseError};
use crate::exactfield::Field;
use crate::liecore::{LieAlgebra, LieError};
use crate::linspace::{unit_vector, zero_vector, Subspace, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresetError {
    #[error("unknown preset `{0}`")]
    Unknown(String),
    #[error("malformed preset invocation `{0}`")]
    Malformed(String),
    #[error("{name}: {constraint}")]
    InvalidParam { name: String, constraint: String },
    #[error(transparent)]
    Lie(#[from] LieError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Preset {
    Abelian(usize),
    Heisenberg,
    TwoDimNonabelian,
    /// Total dimension `n`: `x, y1, …, y(n-1)` with `[x, yi] = yi`.
    AlmostAbelian(usize),
    Sl2,
    Example34(u64),
    DirectSum(Box<Preset>, Box<Preset>),
}

/// A built algebra with its distinguished subspaces.
#[derive(Debug, Clone)]
pub struct Built {
    pub algebra: LieAlgebra,
    pub subspaces: BTreeMap<String, Subspace>,
}

impl Built {
    fn plain(algebra: LieAlgebra) -> Self {
        Built {
            algebra,
            subspaces: BTreeMap::new(),
        }
    }
}

fn invalid(name: &str, constraint: impl Into<String>) -> PresetError {
    PresetError::InvalidParam {
        name: name.into(),
        constraint: constraint.into(),
    }
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn ints(f: Field, xs: &[i64]) -> Vector {
    xs.iter().map(|&x| f.from_int(x)).collect()
}

impl Preset {
    /// The field a preset is tied to, if any.
    pub fn natural_field(&self) -> Option<Field> {
        match self {
            Preset::Example34(p) => Field::prime(*p).ok(),
            Preset::DirectSum(a, b) => a.natural_field().or_else(|| b.natural_field()),
            _ => None,
        }
    }

    pub fn build(&self, field: Field) -> Result<Built, PresetError> {
        match self {
            Preset::Abelian(n) => Ok(Built::plain(LieAlgebra::abelian(field, *n))),
            Preset::Heisenberg => Ok(Built::plain(LieAlgebra::from_brackets(
                field,
                labels(&["e1", "e2", "e3"]),
                [(0, 1, ints(field, &[0, 0, 1]))],
            )?)),
            Preset::TwoDimNonabelian => Ok(Built::plain(LieAlgebra::from_brackets(
                field,
                labels(&["x", "y"]),
                [(0, 1, ints(field, &[0, 1]))],
            )?)),
            Preset::AlmostAbelian(n) => {
                if *n == 0 {
                    return Err(invalid("almost_abelian", "dimension must be at least 1"));
                }
                let mut names = vec!["x".to_string()];
                names.extend((1..*n).map(|i| format!("y{i}")));
                let brackets = (1..*n).map(|i| (0, i, unit_vector(field, *n, i)));
                Ok(Built::plain(LieAlgebra::from_brackets(field, names, brackets)?))
            }
            Preset::Sl2 => Ok(Built::plain(LieAlgebra::from_brackets(
                field,
                labels(&["e", "f", "h"]),
                [
                    (0, 1, ints(field, &[0, 0, 1])),
                    (2, 0, ints(field, &[2, 0, 0])),
                    (2, 1, ints(field, &[0, -2, 0])),
                ],
            )?)),
            Preset::Example34(p) => example34(*p, field),
            Preset::DirectSum(a, b) => {
                let left = a.build(field)?;
                let right = b.build(field)?;
                direct_sum_built(&left, &right)
            }
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::Abelian(n) => write!(f, "abelian({n})"),
            Preset::Heisenberg => write!(f, "heisenberg"),
            Preset::TwoDimNonabelian => write!(f, "two_dim_nonabelian"),
            Preset::AlmostAbelian(n) => write!(f, "almost_abelian({n})"),
            Preset::Sl2 => write!(f, "sl2"),
            Preset::Example34(p) => write!(f, "example34({p})"),
            Preset::DirectSum(a, b) => write!(f, "direct_sum({a}, {b})"),
        }
    }
}

impl FromStr for Preset {
    type Err = PresetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let malformed = || PresetError::Malformed(s.to_string());
        let (name, args) = match s.find('(') {
            Some(open) => {
                if !s.ends_with(')') {
                    return Err(malformed());
                }
                (s[..open].trim(), Some(&s[open + 1..s.len() - 1]))
            }
            None => (s, None),
        };
        let args: Vec<&str> = match args {
            Some(a) if a.trim().is_empty() => Vec::new(),
            Some(a) => split_top_level(a).ok_or_else(malformed)?,
            None => Vec::new(),
        };
        let one_int = |args: &[&str]| -> Result<u64, PresetError> {
            match args {
                [a] => a.trim().parse().map_err(|_| malformed()),
                _ => Err(invalid(name, "expects exactly one integer argument")),
            }
        };
        let no_args = |args: &[&str]| {
            if args.is_empty() {
                Ok(())
            } else {
                Err(invalid(name, "takes no arguments"))
            }
        };
        match name {
            "abelian" => Ok(Preset::Abelian(one_int(&args)? as usize)),
            "heisenberg" => no_args(&args).map(|_| Preset::Heisenberg),
            "two_dim_nonabelian" => no_args(&args).map(|_| Preset::TwoDimNonabelian),
            "almost_abelian" => Ok(Preset::AlmostAbelian(one_int(&args)? as usize)),
            "sl2" => no_args(&args).map(|_| Preset::Sl2),
            "example34" => Ok(Preset::Example34(one_int(&args)?)),
            "direct_sum" => match args.as_slice() {
                [a, b] => Ok(Preset::DirectSum(Box::new(a.parse()?), Box::new(b.parse()?))),
                _ => Err(invalid(name, "expects two summands")),
            },
            other => Err(PresetError::Unknown(other.to_string())),
        }
    }
}

/// Split on commas that are not nested inside parentheses.
fn split_top_level(s: &str) -> Option<Vec<&str>> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut out = Vec::new();
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return None;
    }
    out.push(&s[start..]);
    Some(out)
}

/// Block-diagonal direct sum. Labels get `_1` / `_2` suffixes when the
/// summands share a label.
pub fn direct_sum(l1: &LieAlgebra, l2: &LieAlgebra) -> Result<LieAlgebra, LieError> {
    if l1.field() != l2.field() {
        return Err(LieError::FieldMismatch {
            expected: l1.field(),
            found: l2.field(),
        });
    }
    let field = l1.field();
    let (n1, n2) = (l1.dim(), l2.dim());
    let n = n1 + n2;
    let clash = l1.labels().iter().any(|a| l2.labels().contains(a));
    let mut names: Vec<String> = Vec::with_capacity(n);
    for (labels, tag) in [(l1.labels(), "_1"), (l2.labels(), "_2")] {
        names.extend(labels.iter().map(|l| {
            if clash {
                format!("{l}{tag}")
            } else {
                l.clone()
            }
        }));
    }
    let embed = |v: &Vector, offset: usize| {
        let mut w = zero_vector(field, n);
        for (k, c) in v.iter().enumerate() {
            w[offset + k] = c.clone();
        }
        w
    };
    let mut brackets = Vec::new();
    for (i, j, v) in l1.brackets() {
        brackets.push((i, j, embed(v, 0)));
    }
    for (i, j, v) in l2.brackets() {
        brackets.push((n1 + i, n1 + j, embed(v, n1)));
    }
    LieAlgebra::from_brackets(field, names, brackets)
}

fn direct_sum_built(left: &Built, right: &Built) -> Result<Built, PresetError> {
    let algebra = direct_sum(&left.algebra, &right.algebra)?;
    let n1 = left.algebra.dim();
    let n = algebra.dim();
    let mut subspaces = BTreeMap::new();
    for (side, offset, tag) in [(left, 0, "_1"), (right, n1, "_2")] {
        for (name, s) in &side.subspaces {
            let vs: Vec<Vector> = s
                .basis()
                .iter()
                .map(|v| {
                    let mut w = zero_vector(algebra.field(), n);
                    for (k, c) in v.iter().enumerate() {
                        w[offset + k] = c.clone();
                    }
                    w
                })
                .collect();
            subspaces.insert(format!("{name}{tag}"), algebra.span(&vs));
        }
    }
    Ok(Built { algebra, subspaces })
}

/// `sl(2) ⊗ O₁ + F·D` over GF(p), `O₁ = F[x]/(x^p)`, `D = (1 + x) d/dx`.
///
/// Basis `u_i ⊗ x^j` for `i ∈ {-1, 0, 1}`, `0 ≤ j < p` (in that order),
/// then `D`. Distinguished subspaces: `A = sl(2) ⊗ O₁`,
/// `M = (F u_0 + F u_1) ⊗ O₁ + F D`, `SO1plus = sl(2) ⊗ span(x, …, x^{p-1})`
/// and the line `Um1 = F (u_{-1} ⊗ 1)`.
pub fn example34(p: u64, field: Field) -> Result<Built, PresetError> {
    if p <= 2 || Field::prime(p).is_err() {
        return Err(invalid("example34", "requires a prime p > 2"));
    }
    if field != Field::prime(p).expect("checked") {
        return Err(invalid("example34", format!("is only built over GF({p})")));
    }
    let p = p as usize;
    let n = 3 * p + 1;
    let d = 3 * p;
    let idx = |a: usize, j: usize| a * p + j;
    // [u_a, u_b] in S: a, b ∈ {0, 1, 2} standing for u_{-1}, u_0, u_1.
    let s_bracket = |a: usize, b: usize| -> Option<(usize, i64)> {
        match (a, b) {
            (0, 1) => Some((0, 1)),
            (1, 0) => Some((0, -1)),
            (0, 2) => Some((1, 1)),
            (2, 0) => Some((1, -1)),
            (1, 2) => Some((2, 1)),
            (2, 1) => Some((2, -1)),
            _ => None,
        }
    };
    let mut brackets: Vec<(usize, usize, Vector)> = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for j in 0..p {
                for k in 0..p {
                    let (r, s) = (idx(a, j), idx(b, k));
                    if r >= s || j + k >= p {
                        continue;
                    }
                    if let Some((c, coeff)) = s_bracket(a, b) {
                        let mut v = zero_vector(field, n);
                        v[idx(c, j + k)] = field.from_int(coeff);
                        brackets.push((r, s, v));
                    }
                }
            }
        }
    }
    for a in 0..3 {
        for j in 1..p {
            // D(x^j) = j x^{j-1} + j x^j
            let mut v = zero_vector(field, n);
            v[idx(a, j - 1)] = field.from_int(j as i64);
            v[idx(a, j)] = field.from_int(j as i64);
            brackets.push((d, idx(a, j), v));
        }
    }
    let mut names = Vec::with_capacity(n);
    for u in ["um1", "u0", "u1"] {
        names.extend((0..p).map(|j| format!("{u}_x{j}")));
    }
    names.push("D".to_string());
    let algebra = LieAlgebra::from_brackets(field, names, brackets)?;
    let e = |i: usize| unit_vector(field, n, i);
    let a_space = algebra.span(&(0..3 * p).map(e).collect::<Vec<_>>());
    let mut m_basis: Vec<Vector> = (p..3 * p).map(e).collect();
    m_basis.push(e(d));
    let m_space = algebra.span(&m_basis);
    let plus: Vec<Vector> = (0..3)
        .flat_map(|a| (1..p).map(move |j| idx(a, j)))
        .map(e)
        .collect();
    let mut subspaces = BTreeMap::new();
    subspaces.insert("A".to_string(), a_space);
    subspaces.insert("M".to_string(), m_space);
    subspaces.insert("SO1plus".to_string(), algebra.span(&plus));
    subspaces.insert("Um1".to_string(), algebra.span(&[e(idx(0, 0))]));
    Ok(Built { algebra, subspaces })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    Preset(#[from] PresetError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone)]
pub enum Source {
    Preset(Preset, Field),
    /// An algebra document in the text format of [`crate::dsl`].
    Document(String),
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: String,
    pub source: Source,
}

impl CorpusEntry {
    pub fn preset(preset: Preset, field: Field) -> Self {
        CorpusEntry {
            id: format!("{preset} over {field}"),
            source: Source::Preset(preset, field),
        }
    }

    pub fn document(id: &str, text: &str) -> Self {
        CorpusEntry {
            id: id.to_string(),
            source: Source::Document(text.to_string()),
        }
    }

    pub fn build(&self) -> Result<Built, BuildError> {
        match &self.source {
            Source::Preset(p, f) => Ok(p.build(*f)?),
            Source::Document(text) => Ok(dsl::parse(text)?),
        }
    }
}

/// Solvable, not supersolvable over GF(2): `x` acts on `span(y1, y2)` by
/// a matrix with irreducible characteristic polynomial `t² + t + 1`.
const ROTATION_GF2: &str = "\
field GF(2)
dim 3
basis x y1 y2
[x, y1] = y2
[x, y2] = y1 + y2
";

/// Solvable, not supersolvable over GF(3): `t² + 1` is irreducible.
const ROTATION_GF3: &str = "\
field GF(3)
dim 3
basis x y1 y2
[x, y1] = y2
[x, y2] = -1*y1
";

/// The default corpus in its fixed report order.
pub fn default_corpus() -> Vec<CorpusEntry> {
    use Preset::*;
    let gf = |p: u64| Field::prime(p).expect("prime");
    let ds = |a: Preset, b: Preset| DirectSum(Box::new(a), Box::new(b));
    let mut out = vec![
        CorpusEntry::preset(Abelian(1), gf(2)),
        CorpusEntry::preset(Abelian(2), gf(2)),
        CorpusEntry::preset(Abelian(3), gf(2)),
        CorpusEntry::preset(Abelian(2), gf(3)),
        CorpusEntry::preset(Heisenberg, gf(2)),
        CorpusEntry::preset(Heisenberg, gf(3)),
        CorpusEntry::preset(TwoDimNonabelian, gf(2)),
        CorpusEntry::preset(TwoDimNonabelian, gf(3)),
        CorpusEntry::preset(TwoDimNonabelian, gf(5)),
        CorpusEntry::preset(AlmostAbelian(3), gf(2)),
        CorpusEntry::preset(AlmostAbelian(3), gf(3)),
        CorpusEntry::preset(ds(Abelian(1), TwoDimNonabelian), gf(2)),
        CorpusEntry::preset(ds(Abelian(1), TwoDimNonabelian), gf(3)),
        CorpusEntry::preset(ds(Abelian(1), AlmostAbelian(3)), gf(2)),
        CorpusEntry::preset(ds(Heisenberg, Abelian(1)), gf(2)),
        CorpusEntry::preset(ds(TwoDimNonabelian, TwoDimNonabelian), gf(2)),
        CorpusEntry::preset(Sl2, gf(3)),
        CorpusEntry::preset(Sl2, gf(5)),
        CorpusEntry::preset(ds(Sl2, Abelian(1)), gf(3)),
    ];
    out.push(CorpusEntry::document("rotation over GF(2)", ROTATION_GF2));
    out.push(CorpusEntry::document("rotation over GF(3)", ROTATION_GF3));
    out.push(CorpusEntry::preset(Example34(3), gf(3)));
    out
}
