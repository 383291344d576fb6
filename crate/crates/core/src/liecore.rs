//! Lie algebras given by structure constants.
//!
//! Only the brackets `[e_i, e_j]` with `i < j` are stored; the accessor
//! derives the rest from antisymmetry, so an inconsistent antisymmetric table
//! cannot be represented. The Jacobi identity is checked once at
//! construction.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exactfield::{Field, Scalar};
use crate::linspace::{
    axpy, is_zero_vector, quotient_coordinates, unit_vector, zero_vector, Matrix, QuotientMap,
    Subspace, Vector,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("basis index {0} out of range for dimension {1}")]
    IndexOutOfRange(usize, usize),
    #[error("bracket [e{0},e{0}] must be zero")]
    DiagonalBracket(usize),
    #[error("bracket [e{0},e{1}] defined twice")]
    DuplicateBracket(usize, usize),
    #[error("bracket coefficients have length {found}, expected {expected}")]
    CoefficientLength { expected: usize, found: usize },
    #[error("coefficient from {found} in an algebra over {expected}")]
    FieldMismatch { expected: Field, found: Field },
    #[error("expected {expected} basis labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("Jacobi identity fails at ({i},{j},{k}) with residual {residual}")]
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        residual: String,
        residual_vector: Vector,
    },
    #[error("subspace is not an ideal of the algebra")]
    NotIdeal,
    #[error("ambient dimension {found} does not match algebra dimension {expected}")]
    AmbientMismatch { expected: usize, found: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    field: Field,
    dim: usize,
    /// `[e_i, e_j]` for `i < j`, indexed by `pair_index`.
    table: Vec<Vector>,
    labels: Vec<String>,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl LieAlgebra {
    /// Build and validate an algebra from brackets `(i, j, [e_i, e_j])`
    /// (0-based). Pairs may be given in either order; `(j, i)` is stored as
    /// the negation.
    pub fn from_brackets(
        field: Field,
        labels: Vec<String>,
        brackets: impl IntoIterator<Item = (usize, usize, Vector)>,
    ) -> Result<Self, LieError> {
        let n = labels.len();
        let mut table = vec![zero_vector(field, n); n * n.saturating_sub(1) / 2];
        let mut seen = vec![false; table.len()];
        for (i, j, coeffs) in brackets {
            if i >= n || j >= n {
                return Err(LieError::IndexOutOfRange(i.max(j) + 1, n));
            }
            if coeffs.len() != n {
                return Err(LieError::CoefficientLength {
                    expected: n,
                    found: coeffs.len(),
                });
            }
            if let Some(s) = coeffs.iter().find(|s| s.field() != field) {
                return Err(LieError::FieldMismatch {
                    expected: field,
                    found: s.field(),
                });
            }
            if i == j {
                if is_zero_vector(&coeffs) {
                    continue;
                }
                return Err(LieError::DiagonalBracket(i + 1));
            }
            let (a, b, v) = if i < j {
                (i, j, coeffs)
            } else {
                (j, i, coeffs.iter().map(Scalar::neg).collect())
            };
            let idx = pair_index(n, a, b);
            if seen[idx] {
                return Err(LieError::DuplicateBracket(a + 1, b + 1));
            }
            seen[idx] = true;
            table[idx] = v;
        }
        let alg = LieAlgebra {
            field,
            dim: n,
            table,
            labels,
        };
        alg.check_jacobi()?;
        Ok(alg)
    }

    pub fn abelian(field: Field, n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        LieAlgebra::from_brackets(field, labels, []).expect("abelian algebra is valid")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `[e_i, e_j]` with antisymmetry applied.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.table[pair_index(self.dim, i, j)].clone(),
            std::cmp::Ordering::Greater => self.table[pair_index(self.dim, j, i)]
                .iter()
                .map(Scalar::neg)
                .collect(),
            std::cmp::Ordering::Equal => zero_vector(self.field, self.dim),
        }
    }

    /// Nonzero structure constants `(i, j, [e_i, e_j])` with `i < j`.
    pub fn brackets(&self) -> impl Iterator<Item = (usize, usize, &Vector)> {
        let n = self.dim;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .map(move |(i, j)| (i, j, &self.table[pair_index(n, i, j)]))
            .filter(|(_, _, v)| !is_zero_vector(v))
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(self.field, n);
        for i in 0..n {
            for j in i + 1..n {
                let c = &self.table[pair_index(n, i, j)];
                if is_zero_vector(c) {
                    continue;
                }
                let coeff = x[i]
                    .mul_unchecked(&y[j])
                    .sub_unchecked(&x[j].mul_unchecked(&y[i]));
                if !coeff.is_zero() {
                    out = axpy(&out, &coeff, c);
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.field, self.dim, i)
    }

    /// Matrix of `ad x` acting on column vectors: column `j` is `[x, e_j]`.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(self.field, n, n);
        for j in 0..n {
            let col = self.bracket(x, &self.basis_vector(j));
            for (i, c) in col.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    /// The Jacobi sum `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> Vector {
        let e = |t| self.basis_vector(t);
        let a = self.bracket(&self.basis_bracket(i, j), &e(k));
        let b = self.bracket(&self.basis_bracket(j, k), &e(i));
        let c = self.bracket(&self.basis_bracket(k, i), &e(j));
        let one = self.field.one();
        axpy(&axpy(&a, &one, &b), &one, &c)
    }

    fn check_jacobi(&self) -> Result<(), LieError> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let r = self.jacobi_residual(i, j, k);
                    if !is_zero_vector(&r) {
                        return Err(LieError::Jacobi {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            residual: self.format_vector(&r),
                            residual_vector: r,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Human-readable linear combination of basis labels.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        let terms: Vec<String> = v
            .iter()
            .zip(&self.labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| if c.is_one() { l.clone() } else { format!("{c}*{l}") })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.field, self.dim)
    }

    pub fn span(&self, vectors: &[Vector]) -> Subspace {
        Subspace::from_vectors_unchecked(self.field, self.dim, vectors.to_vec())
    }

    pub(crate) fn check_space(&self, s: &Subspace) -> Result<(), LieError> {
        if s.ambient_dim() != self.dim || s.field() != self.field {
            return Err(LieError::AmbientMismatch {
                expected: self.dim,
                found: s.ambient_dim(),
            });
        }
        Ok(())
    }

    /// `[A, B]`
    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vectors = Vec::with_capacity(a.dim() * b.dim());
        for x in a.basis() {
            for y in b.basis() {
                let z = self.bracket(x, y);
                if !is_zero_vector(&z) {
                    vectors.push(z);
                }
            }
        }
        self.span(&vectors)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let b = s.basis();
        for (idx, x) in b.iter().enumerate() {
            for y in &b[idx + 1..] {
                if !s.contains_unchecked(&self.bracket(x, y)) {
                    return false;
                }
            }
        }
        true
    }

    /// `[K, I] ⊆ I`
    pub fn is_ideal_of(&self, i: &Subspace, k: &Subspace) -> bool {
        k.basis()
            .iter()
            .all(|x| i.basis().iter().all(|y| i.contains_unchecked(&self.bracket(x, y))))
    }

    pub fn is_ideal(&self, i: &Subspace) -> bool {
        (0..self.dim).all(|t| {
            let e = self.basis_vector(t);
            i.basis().iter().all(|y| i.contains_unchecked(&self.bracket(&e, y)))
        })
    }

    /// Smallest subalgebra containing `s`: fixed point of `U ↦ U + [U,U]`.
    pub fn subalgebra_closure(&self, s: &Subspace) -> Subspace {
        let mut u = s.clone();
        loop {
            let next = u.join(&self.product_space(&u, &u));
            if next == u {
                return u;
            }
            u = next;
        }
    }

    pub fn is_abelian_space(&self, s: &Subspace) -> bool {
        self.product_space(s, s).is_zero()
    }

    pub fn series(&self, kind: SeriesKind) -> SeriesReport {
        self.series_of(&self.whole(), kind)
    }

    /// Series of a subalgebra `K`, computed inside `K`.
    pub fn series_of(&self, k: &Subspace, kind: SeriesKind) -> SeriesReport {
        let mut terms = vec![k.clone()];
        loop {
            let last = terms.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = match kind {
                SeriesKind::Derived => self.product_space(last, last),
                SeriesKind::LowerCentral => self.product_space(k, last),
            };
            let repeated = &next == last;
            terms.push(next);
            if repeated {
                break;
            }
        }
        SeriesReport {
            kind,
            terms,
            stabilized: true,
        }
    }

    pub fn is_nilpotent_space(&self, k: &Subspace) -> bool {
        self.series_of(k, SeriesKind::LowerCentral).reaches_zero()
    }

    pub fn is_solvable_space(&self, k: &Subspace) -> bool {
        self.series_of(k, SeriesKind::Derived).reaches_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_nilpotent_space(&self.whole())
    }

    pub fn is_solvable(&self) -> bool {
        self.is_solvable_space(&self.whole())
    }

    /// `C_L(A) = {x : [x, A] = 0}`
    pub fn centralizer(&self, a: &Subspace) -> Subspace {
        let n = self.dim;
        let mut rows = Vec::new();
        for y in a.basis() {
            // Row k of the system: Σ_i x_i [e_i, y]_k = 0.
            let cols: Vec<Vector> = (0..n)
                .map(|i| self.bracket(&self.basis_vector(i), y))
                .collect();
            for k in 0..n {
                rows.push(cols.iter().map(|c| c[k].clone()).collect::<Vector>());
            }
        }
        if rows.is_empty() {
            return self.whole();
        }
        Matrix::from_rows(self.field, n, &rows)
            .expect("consistent rows")
            .kernel()
    }

    /// `{x : [x, B] ⊆ B}`
    pub fn normalizer(&self, b: &Subspace) -> Subspace {
        let n = self.dim;
        let qm = quotient_coordinates(b);
        let mut rows = Vec::new();
        for y in b.basis() {
            let cols: Vec<Vector> = (0..n)
                .map(|i| qm.project(&self.bracket(&self.basis_vector(i), y)))
                .collect();
            for k in 0..qm.quotient_dim() {
                rows.push(cols.iter().map(|c| c[k].clone()).collect::<Vector>());
            }
        }
        if rows.is_empty() {
            return self.whole();
        }
        Matrix::from_rows(self.field, n, &rows)
            .expect("consistent rows")
            .kernel()
    }

    /// `L / I` in the complement coordinates of `I`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient, LieError> {
        self.check_space(ideal)?;
        if !self.is_ideal(ideal) {
            return Err(LieError::NotIdeal);
        }
        let map = quotient_coordinates(ideal);
        let cols = map.complement.clone();
        let labels = cols.iter().map(|&c| self.labels[c].clone()).collect();
        let mut brackets = Vec::new();
        for (a, &ca) in cols.iter().enumerate() {
            for (b, &cb) in cols.iter().enumerate().skip(a + 1) {
                let v = map.project(&self.basis_bracket(ca, cb));
                if !is_zero_vector(&v) {
                    brackets.push((a, b, v));
                }
            }
        }
        let algebra = LieAlgebra::from_brackets(self.field, labels, brackets)
            .expect("quotient of a Lie algebra by an ideal is a Lie algebra");
        let q = Quotient { algebra, map };
        debug_assert!(q.projection_is_homomorphism(self));
        Ok(q)
    }

    pub fn to_json(&self) -> AlgebraJson {
        AlgebraJson {
            field: self.field,
            dim: self.dim,
            labels: self.labels.clone(),
            brackets: self
                .brackets()
                .map(|(i, j, v)| BracketJson {
                    i: i + 1,
                    j: j + 1,
                    coeffs: v.clone(),
                })
                .collect(),
        }
    }

    /// Relabel the basis (used by builders for readable output).
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, LieError> {
        if labels.len() != self.dim {
            return Err(LieError::LabelCount {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn label_index(&self) -> BTreeMap<&str, usize> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect()
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({}, dim {}", self.field, self.dim)?;
        for (i, j, v) in self.brackets() {
            write!(
                f,
                ", [{},{}]={}",
                self.labels[i],
                self.labels[j],
                self.format_vector(v)
            )?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vector,
}

/// JSON export `{field, dim, labels, brackets: [{i, j, coeffs}]}` with
/// 1-based indices and only nonzero brackets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraJson {
    pub field: Field,
    pub dim: usize,
    pub labels: Vec<String>,
    pub brackets: Vec<BracketJson>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

impl std::str::FromStr for SeriesKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "derived" => Ok(SeriesKind::Derived),
            "lower-central" => Ok(SeriesKind::LowerCentral),
            other => Err(format!("unknown series kind {other:?}")),
        }
    }
}

/// Terms `L^(1) = L ⊇ L^(2) ⊇ …` (or `L^1 ⊇ L^2 ⊇ …`). The list stops at
/// the zero term if the series reaches it; otherwise the first repeated
/// term is included once more to witness stabilization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
    pub stabilized: bool,
}

impl SeriesReport {
    pub fn terminal(&self) -> &Subspace {
        self.terms.last().expect("series has at least one term")
    }

    pub fn reaches_zero(&self) -> bool {
        self.terminal().is_zero()
    }

    /// Term with 1-based index `k`; indices past the end repeat the
    /// terminal term.
    pub fn term(&self, k: usize) -> &Subspace {
        assert!(k >= 1);
        self.terms.get(k - 1).unwrap_or_else(|| self.terminal())
    }
}

#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    pub map: QuotientMap,
}

impl Quotient {
    pub fn project(&self, v: &[Scalar]) -> Vector {
        self.map.project(v)
    }

    pub fn lift(&self, w: &[Scalar]) -> Vector {
        self.map.lift(w)
    }

    pub fn project_space(&self, s: &Subspace) -> Subspace {
        self.map.project_space(s)
    }

    pub fn preimage(&self, w: &Subspace) -> Subspace {
        self.map.preimage(w)
    }

    /// `π([e_i, e_j]) = [π e_i, π e_j]` for all basis pairs.
    pub fn projection_is_homomorphism(&self, parent: &LieAlgebra) -> bool {
        let n = parent.dim();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let lhs = self.project(&parent.basis_bracket(i, j));
                let rhs = self.algebra.bracket(
                    &self.project(&parent.basis_vector(i)),
                    &self.project(&parent.basis_vector(j)),
                );
                lhs == rhs
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn vec_of(f: Field, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| f.from_int(x)).collect()
    }

    fn heisenberg(f: Field) -> LieAlgebra {
        LieAlgebra::from_brackets(f, labels(&["e1", "e2", "e3"]), [(0, 1, vec_of(f, &[0, 0, 1]))])
            .unwrap()
    }

    fn two_dim(f: Field) -> LieAlgebra {
        LieAlgebra::from_brackets(f, labels(&["x", "y"]), [(0, 1, vec_of(f, &[0, 1]))]).unwrap()
    }

    #[test]
    fn jacobi_violation_reports_triple_and_residual() {
        let q = Field::Rationals;
        let err = LieAlgebra::from_brackets(
            q,
            labels(&["e1", "e2", "e3"]),
            [
                (0, 1, vec_of(q, &[1, 0, 0])),
                (0, 2, vec_of(q, &[0, 1, 0])),
                (1, 2, vec_of(q, &[0, 0, 0])),
            ],
        )
        .unwrap_err();
        match err {
            LieError::Jacobi {
                i,
                j,
                k,
                residual_vector,
                residual,
            } => {
                assert_eq!((i, j, k), (1, 2, 3));
                assert_eq!(residual_vector, vec_of(q, &[0, 1, 0]));
                assert_eq!(residual, "e2");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn construction_errors() {
        let f = gf(3);
        let l = labels(&["a", "b"]);
        assert_eq!(
            LieAlgebra::from_brackets(f, l.clone(), [(0, 0, vec_of(f, &[0, 1]))]).unwrap_err(),
            LieError::DiagonalBracket(1)
        );
        assert_eq!(
            LieAlgebra::from_brackets(
                f,
                l.clone(),
                [(0, 1, vec_of(f, &[0, 1])), (1, 0, vec_of(f, &[0, 2]))]
            )
            .unwrap_err(),
            LieError::DuplicateBracket(1, 2)
        );
        assert!(matches!(
            LieAlgebra::from_brackets(f, l, [(0, 1, vec_of(gf(5), &[0, 1]))]),
            Err(LieError::FieldMismatch { .. })
        ));
        assert!(LieAlgebra::abelian(f, 4).brackets().next().is_none());
    }

    #[test]
    fn brackets_and_antisymmetry() {
        let f = gf(5);
        let h = heisenberg(f);
        assert_eq!(h.bracket(&h.basis_vector(0), &h.basis_vector(1)), h.basis_vector(2));
        assert_eq!(h.basis_bracket(1, 0), vec_of(f, &[0, 0, 4]));
        let x = vec_of(f, &[2, 3, 4]);
        assert!(is_zero_vector(&h.bracket(&x, &x)));
        let y = vec_of(f, &[1, 4, 0]);
        let xy = h.bracket(&x, &y);
        let yx = h.bracket(&y, &x);
        assert_eq!(xy, yx.iter().map(Scalar::neg).collect::<Vector>());
    }

    #[test]
    fn product_spaces_and_closure() {
        let f = gf(2);
        let h = heisenberg(f);
        let l = h.whole();
        assert_eq!(h.product_space(&l, &l), h.span(&[h.basis_vector(2)]));
        assert!(h.product_space(&l, &h.zero_space()).is_zero());
        let t = two_dim(f);
        assert_eq!(
            t.product_space(&t.whole(), &t.whole()),
            t.span(&[t.basis_vector(1)])
        );
        let plane = h.span(&[h.basis_vector(0), h.basis_vector(1)]);
        assert_eq!(h.subalgebra_closure(&plane), l);
        let line = h.span(&[h.basis_vector(0)]);
        assert_eq!(h.subalgebra_closure(&line), line);
        assert!(h.subalgebra_closure(&h.zero_space()).is_zero());
    }

    #[test]
    fn series_examples() {
        let f = Field::Rationals;
        let t = two_dim(f);
        let y = t.span(&[t.basis_vector(1)]);
        let d = t.series(SeriesKind::Derived);
        assert_eq!(d.terms, vec![t.whole(), y.clone(), t.zero_space()]);
        assert!(d.reaches_zero());
        let lc = t.series(SeriesKind::LowerCentral);
        assert_eq!(lc.terms, vec![t.whole(), y.clone(), y]);
        assert!(!lc.reaches_zero());
        let a = LieAlgebra::abelian(f, 3);
        for kind in [SeriesKind::Derived, SeriesKind::LowerCentral] {
            assert_eq!(a.series(kind).terms, vec![a.whole(), a.zero_space()]);
        }
        let z = LieAlgebra::abelian(f, 0);
        assert_eq!(z.series(SeriesKind::Derived).terms.len(), 1);
    }

    #[test]
    fn centralizers_and_normalizers() {
        let f = gf(3);
        let h = heisenberg(f);
        let e1 = h.span(&[h.basis_vector(0)]);
        assert_eq!(
            h.centralizer(&e1),
            h.span(&[h.basis_vector(0), h.basis_vector(2)])
        );
        assert_eq!(h.centralizer(&h.zero_space()), h.whole());
        let a = LieAlgebra::abelian(f, 3);
        assert_eq!(a.centralizer(&a.span(&[a.basis_vector(1)])), a.whole());
        assert_eq!(
            h.normalizer(&e1),
            h.span(&[h.basis_vector(0), h.basis_vector(2)])
        );

        let t = two_dim(f);
        let x = t.span(&[t.basis_vector(0)]);
        assert_eq!(t.normalizer(&x), x);
        let y = t.span(&[t.basis_vector(1)]);
        assert_eq!(t.normalizer(&y), t.whole());
    }

    #[test]
    fn quotients() {
        let f = gf(2);
        let h = heisenberg(f);
        let z = h.span(&[h.basis_vector(2)]);
        let q = h.quotient(&z).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        assert!(q.algebra.brackets().next().is_none());
        assert!(q.projection_is_homomorphism(&h));

        let q0 = h.quotient(&h.zero_space()).unwrap();
        assert_eq!(q0.algebra, h);
        let ql = h.quotient(&h.whole()).unwrap();
        assert_eq!(ql.algebra.dim(), 0);

        let e1 = h.span(&[h.basis_vector(0)]);
        assert_eq!(h.quotient(&e1).unwrap_err(), LieError::NotIdeal);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn sl2_gf5() -> LieAlgebra {
            let f = gf(5);
            // [h,e]=2e, [h,f]=-2f, [e,f]=h with basis (e, f, h)
            LieAlgebra::from_brackets(
                f,
                labels(&["e", "f", "h"]),
                [
                    (2, 0, vec_of(f, &[2, 0, 0])),
                    (2, 1, vec_of(f, &[0, -2, 0])),
                    (0, 1, vec_of(f, &[0, 0, 1])),
                ],
            )
            .unwrap()
        }

        fn vecs() -> impl Strategy<Value = Vec<Vector>> {
            prop::collection::vec(prop::collection::vec(0i64..5, 3), 0..3)
                .prop_map(|rows| rows.iter().map(|r| vec_of(gf(5), r)).collect())
        }

        proptest! {
            #[test]
            fn product_space_symmetric_and_monotone(a in vecs(), b in vecs(), extra in vecs()) {
                let l = sl2_gf5();
                let a = l.span(&a);
                let b = l.span(&b);
                let a2 = a.join(&l.span(&extra));
                let ab = l.product_space(&a, &b);
                prop_assert_eq!(&ab, &l.product_space(&b, &a));
                prop_assert!(ab.le(&l.product_space(&a2, &b)));
            }

            #[test]
            fn derived_terms_inside_lower_central_terms(pick in 0usize..4) {
                let f = gf(3);
                let algs = [
                    heisenberg(f),
                    two_dim(f),
                    LieAlgebra::from_brackets(f, labels(&["e", "f", "h"]), [
                        (2, 0, vec_of(f, &[2, 0, 0])),
                        (2, 1, vec_of(f, &[0, -2, 0])),
                        (0, 1, vec_of(f, &[0, 0, 1])),
                    ]).unwrap(),
                    LieAlgebra::abelian(f, 2),
                ];
                let l = &algs[pick];
                let d = l.series(SeriesKind::Derived);
                let c = l.series(SeriesKind::LowerCentral);
                for k in 1..=l.dim() + 2 {
                    prop_assert!(d.term(k + 1).le(d.term(k)));
                    prop_assert!(c.term(k + 1).le(c.term(k)));
                    prop_assert!(d.term(k).le(c.term(k)));
                    prop_assert!(l.is_ideal(c.term(k)));
                    prop_assert!(l.is_ideal(d.term(k)));
                }
            }
        }
    }
}
