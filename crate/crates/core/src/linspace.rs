//! Dense exact linear algebra and canonical subspaces of F^n.
//!
//! A [`Subspace`] is stored by its reduced row echelon basis, which is unique,
//! so equality of subspaces is plain structural equality and subspaces can be
//! used as hash keys.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exactfield::{Field, Scalar};

pub type Vector = Vec<Scalar>;

/// Default cap on the number of subspaces an enumeration may emit.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("vector of length {found} in ambient space of dimension {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("ambient mismatch: {left} vs {right}")]
    AmbientMismatch { left: String, right: String },
    #[error("enumeration unsupported over infinite field")]
    InfiniteField,
    #[error("enumeration budget exceeded: {required} subspaces needed, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
}

/// Upper bound on how many lattice elements an exhaustive routine may touch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_subspaces: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_subspaces: DEFAULT_BUDGET,
        }
    }
}

impl Budget {
    pub fn new(max_subspaces: u64) -> Self {
        Budget { max_subspaces }
    }

    pub fn check(&self, required: u128) -> Result<(), SpaceError> {
        if required > self.max_subspaces as u128 {
            Err(SpaceError::BudgetExceeded {
                required,
                budget: self.max_subspaces,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vector]) -> Result<Self, SpaceError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            check_len(row, cols)?;
            data.extend(row.iter().cloned());
        }
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| dot(self.field, self.row(r), v))
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    acc = acc.add_unchecked(&self.get(r, k).mul_unchecked(other.get(k, c)));
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    /// Right kernel `{x : M x = 0}` as a canonical subspace of F^cols.
    pub fn kernel(&self) -> Subspace {
        let mut rows = self.to_rows();
        let pivots = row_reduce(&mut rows);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &pc) in rows.iter().zip(&pivots) {
                    v[pc] = row[f].neg();
                }
                v
            })
            .collect::<Vec<_>>();
        Subspace::from_vectors_unchecked(self.field, self.cols, basis)
    }

    /// Some solution of `M x = b`, if the system is consistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let mut rows: Vec<Vector> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        let pivots = row_reduce(&mut rows);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &pc) in rows.iter().zip(&pivots) {
            x[pc] = row[self.cols].clone();
        }
        Some(x)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        row_reduce(&mut rows).len()
    }
}

/// Reduced row echelon form with zero rows removed.
pub fn rref(m: &Matrix) -> Matrix {
    let mut rows = m.to_rows();
    row_reduce(&mut rows);
    Matrix {
        field: m.field,
        rows: rows.len(),
        cols: m.cols,
        data: rows.into_iter().flatten().collect(),
    }
}

fn check_len(v: &[Scalar], n: usize) -> Result<(), SpaceError> {
    if v.len() != n {
        Err(SpaceError::LengthMismatch {
            expected: n,
            found: v.len(),
        })
    } else {
        Ok(())
    }
}

pub(crate) fn dot(field: Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc.add_unchecked(&x.mul_unchecked(y));
        }
    }
    acc
}

pub fn zero_vector(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `a + c * b`
pub fn axpy(a: &[Scalar], c: &Scalar, b: &[Scalar]) -> Vector {
    let neg = c.neg();
    a.iter().zip(b).map(|(x, y)| x.sub_mul(&neg, y)).collect()
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c.mul_unchecked(x)).collect()
}

/// In-place Gauss-Jordan elimination. Leaves `rows` in RREF without zero
/// rows and returns the pivot columns.
pub(crate) fn row_reduce(rows: &mut Vec<Vector>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(c) {
                *x = x.mul_unchecked(&inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x = x.sub_mul(&factor, y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// A subspace of F^n in canonical (RREF) form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: (0..ambient).map(|i| unit_vector(field, ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vector]) -> Result<Self, SpaceError> {
        for v in vectors {
            check_len(v, ambient)?;
            if let Some(s) = v.iter().find(|s| s.field() != field) {
                return Err(SpaceError::AmbientMismatch {
                    left: field.to_string(),
                    right: s.field().to_string(),
                });
            }
        }
        Ok(Self::from_vectors_unchecked(field, ambient, vectors.to_vec()))
    }

    pub(crate) fn from_vectors_unchecked(field: Field, ambient: usize, mut rows: Vec<Vector>) -> Self {
        rows.retain(|r| !is_zero_vector(r));
        let pivots = row_reduce(&mut rows);
        Subspace {
            field,
            ambient,
            basis: rows,
            pivots,
        }
    }

    /// Wrap rows already known to be in RREF.
    fn from_rref(field: Field, ambient: usize, basis: Vec<Vector>, pivots: Vec<usize>) -> Self {
        Subspace {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient, &self.basis).expect("consistent rows")
    }

    fn compatible(&self, other: &Subspace) -> Result<(), SpaceError> {
        if self.field != other.field || self.ambient != other.ambient {
            return Err(SpaceError::AmbientMismatch {
                left: format!("{}^{}", self.field, self.ambient),
                right: format!("{}^{}", other.field, other.ambient),
            });
        }
        Ok(())
    }

    /// Residual of `v` after elimination against the basis; zero iff `v`
    /// lies in the subspace, and always zero at the pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if out[pc].is_zero() {
                continue;
            }
            let factor = out[pc].clone();
            for (x, y) in out.iter_mut().zip(row).skip(pc) {
                if !y.is_zero() {
                    *x = x.sub_mul(&factor, y);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, SpaceError> {
        check_len(v, self.ambient)?;
        Ok(self.contains_unchecked(v))
    }

    pub(crate) fn contains_unchecked(&self, v: &[Scalar]) -> bool {
        if self.is_full() {
            return true;
        }
        is_zero_vector(&self.reduce(v))
    }

    /// `self ⊆ other`
    pub fn leq(&self, other: &Subspace) -> Result<bool, SpaceError> {
        self.compatible(other)?;
        Ok(self.le(other))
    }

    /// Inclusion without the compatibility check.
    pub fn le(&self, other: &Subspace) -> bool {
        if self.dim() > other.dim() {
            return false;
        }
        if other.is_full() || self.is_zero() {
            return true;
        }
        // Pivots of a subspace are a subset of pivots of any superspace.
        if !self.pivots.iter().all(|p| other.pivots.binary_search(p).is_ok()) {
            return false;
        }
        self.basis.iter().all(|b| other.contains_unchecked(b))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, SpaceError> {
        self.compatible(other)?;
        Ok(self.join(other))
    }

    pub(crate) fn join(&self, other: &Subspace) -> Subspace {
        if self.le(other) {
            return other.clone();
        }
        if other.le(self) {
            return self.clone();
        }
        let rows = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::from_vectors_unchecked(self.field, self.ambient, rows)
    }

    /// Add vectors to the span.
    pub(crate) fn extend(&self, vectors: impl IntoIterator<Item = Vector>) -> Subspace {
        let mut rows = self.basis.clone();
        let before = rows.len();
        for v in vectors {
            if !self.contains_unchecked(&v) {
                rows.push(v);
            }
        }
        if rows.len() == before {
            return self.clone();
        }
        Subspace::from_vectors_unchecked(self.field, self.ambient, rows)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, SpaceError> {
        self.compatible(other)?;
        Ok(self.meet(other))
    }

    /// Intersection via the left kernel of the stacked bases: every relation
    /// `a·U = -b·V` yields the common vector `a·U`.
    pub(crate) fn meet(&self, other: &Subspace) -> Subspace {
        if self.le(other) {
            return self.clone();
        }
        if other.le(self) {
            return other.clone();
        }
        let k = self.dim();
        let stacked: Vec<Vector> = self.basis.iter().chain(&other.basis).cloned().collect();
        let m = Matrix::from_rows(self.field, self.ambient, &stacked)
            .expect("consistent rows")
            .transpose();
        let relations = m.kernel();
        let vectors = relations
            .basis
            .iter()
            .map(|coeffs| combine(self.field, self.ambient, &coeffs[..k], &self.basis))
            .collect();
        Subspace::from_vectors_unchecked(self.field, self.ambient, vectors)
    }

    /// Coordinates of `v` in the RREF basis (read off at the pivots).
    /// Only meaningful when `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Vector {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Image of the subspace under a linear map given as a matrix acting on
    /// column vectors.
    pub fn image(&self, map: &Matrix) -> Subspace {
        let rows = self.basis.iter().map(|b| map.mul_vec(b)).collect();
        Subspace::from_vectors_unchecked(map.field(), map.shape().0, rows)
    }

    /// Flattened basis entries, the secondary key of the canonical order.
    fn key(&self) -> impl Iterator<Item = &Scalar> {
        self.basis.iter().flatten()
    }
}

/// Incrementally grown RREF basis.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    field: Field,
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub(crate) fn new(field: Field, ambient: usize) -> Self {
        Echelon {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub(crate) fn from_subspace(s: &Subspace) -> Self {
        Echelon {
            field: s.field,
            ambient: s.ambient,
            rows: s.basis.clone(),
            pivots: s.pivots.clone(),
        }
    }

    fn residual(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if out[pc].is_zero() {
                continue;
            }
            let factor = out[pc].clone();
            for (x, y) in out.iter_mut().zip(row).skip(pc) {
                if !y.is_zero() {
                    *x = x.sub_mul(&factor, y);
                }
            }
        }
        out
    }

    /// Adds `v`; returns whether the span grew.
    pub(crate) fn insert(&mut self, v: &[Scalar]) -> bool {
        if self.rows.len() == self.ambient {
            return false;
        }
        let mut r = self.residual(v);
        let Some(pc) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[pc].inv().expect("nonzero");
        if !inv.is_one() {
            r = scale(&inv, &r);
        }
        for row in &mut self.rows {
            if row[pc].is_zero() {
                continue;
            }
            let factor = row[pc].clone();
            for (x, y) in row.iter_mut().zip(&r).skip(pc) {
                if !y.is_zero() {
                    *x = x.sub_mul(&factor, y);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.rows.insert(at, r);
        self.pivots.insert(at, pc);
        true
    }

    pub(crate) fn into_subspace(self) -> Subspace {
        Subspace::from_rref(self.field, self.ambient, self.rows, self.pivots)
    }
}

/// Linear combination `Σ c_i · vectors_i`.
pub fn combine(field: Field, n: usize, coeffs: &[Scalar], vectors: &[Vector]) -> Vector {
    let mut acc = zero_vector(field, n);
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        acc = axpy(&acc, c, v);
    }
    acc
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by dimension, then lexicographically on the RREF basis.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .cmp(&other.field)
            .then(self.ambient.cmp(&other.ambient))
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.key().cmp(other.key()))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span[")?;
        for (i, row) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "] in {}^{}", self.field, self.ambient)
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.basis.serialize(serializer)
    }
}

/// Gaussian binomial coefficient `[n choose k]_q`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Total number of subspaces of F_q^n (optionally of one dimension).
pub fn subspace_count(n: usize, q: u64, dim_filter: Option<usize>) -> u128 {
    match dim_filter {
        Some(k) => gaussian_binomial(n, k, q),
        None => (0..=n).map(|k| gaussian_binomial(n, k, q)).sum(),
    }
}

/// Every subspace of F^n exactly once, in canonical order.
///
/// RREF matrices are generated directly per pivot pattern; each dimension
/// is materialized and sorted before it is yielded.
pub fn enumerate_subspaces(
    field: Field,
    n: usize,
    dim_filter: Option<usize>,
    budget: &Budget,
) -> Result<SubspaceEnumeration, SpaceError> {
    let q = field.order().ok_or(SpaceError::InfiniteField)?;
    budget.check(subspace_count(n, q, dim_filter))?;
    let dims = match dim_filter {
        Some(k) if k > n => Vec::new(),
        Some(k) => vec![k],
        None => (0..=n).collect(),
    };
    Ok(SubspaceEnumeration {
        field,
        n,
        dims: dims.into_iter(),
        current: Vec::new().into_iter(),
    })
}

pub struct SubspaceEnumeration {
    field: Field,
    n: usize,
    dims: std::vec::IntoIter<usize>,
    current: std::vec::IntoIter<Subspace>,
}

impl Iterator for SubspaceEnumeration {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        loop {
            if let Some(s) = self.current.next() {
                return Some(s);
            }
            let k = self.dims.next()?;
            let mut batch = subspaces_of_dim(self.field, self.n, k);
            batch.sort();
            self.current = batch.into_iter();
        }
    }
}

fn subspaces_of_dim(field: Field, n: usize, k: usize) -> Vec<Subspace> {
    let elements: Vec<Scalar> = field.elements().expect("finite field").collect();
    let q = elements.len();
    let mut out = Vec::new();
    for pivots in combinations(n, k) {
        // Free slots: right of each pivot, outside the pivot columns.
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| {
                let pivots = &pivots;
                (pc + 1..n)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let mut base: Vec<Vector> = pivots
            .iter()
            .map(|&pc| unit_vector(field, n, pc))
            .collect();
        let mut digits = vec![0usize; free.len()];
        loop {
            for (&(r, c), &d) in free.iter().zip(&digits) {
                base[r][c] = elements[d].clone();
            }
            out.push(Subspace::from_rref(field, n, base.clone(), pivots.clone()));
            // Odometer increment.
            let mut i = 0;
            loop {
                if i == digits.len() {
                    break;
                }
                digits[i] += 1;
                if digits[i] < q {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == digits.len() {
                break;
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Coordinates on F^n / U.
///
/// The complement is spanned by the unit vectors at the non-pivot columns
/// of U; projecting reduces against U and reads off those columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMap {
    pub complement: Vec<usize>,
    /// `(n - dim U) × n`
    pub projection: Matrix,
    /// `n × (n - dim U)`
    pub lift: Matrix,
    kernel: Subspace,
}

impl QuotientMap {
    pub fn project(&self, v: &[Scalar]) -> Vector {
        let r = self.kernel.reduce(v);
        self.complement.iter().map(|&c| r[c].clone()).collect()
    }

    pub fn lift(&self, w: &[Scalar]) -> Vector {
        self.lift.mul_vec(w)
    }

    pub fn quotient_dim(&self) -> usize {
        self.complement.len()
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    /// Image of a subspace in quotient coordinates.
    pub fn project_space(&self, s: &Subspace) -> Subspace {
        let rows = s.basis().iter().map(|b| self.project(b)).collect();
        Subspace::from_vectors_unchecked(s.field(), self.quotient_dim(), rows)
    }

    /// Full preimage `lift(W) + U` of a quotient subspace.
    pub fn preimage(&self, w: &Subspace) -> Subspace {
        let lifted = w.basis().iter().map(|b| self.lift(b));
        self.kernel.extend(lifted)
    }
}

pub fn quotient_coordinates(u: &Subspace) -> QuotientMap {
    let field = u.field();
    let n = u.ambient_dim();
    let complement: Vec<usize> = (0..n).filter(|c| !u.pivots().contains(c)).collect();
    let q = complement.len();
    let mut projection = Matrix::zeros(field, q, n);
    for i in 0..n {
        let r = u.reduce(&unit_vector(field, n, i));
        for (row, &c) in complement.iter().enumerate() {
            projection.set(row, i, r[c].clone());
        }
    }
    let mut lift = Matrix::zeros(field, n, q);
    for (col, &c) in complement.iter().enumerate() {
        lift.set(c, col, field.one());
    }
    QuotientMap {
        complement,
        projection,
        lift,
        kernel: u.clone(),
    }
}
