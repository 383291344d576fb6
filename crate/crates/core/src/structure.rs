//! Structure-theoretic predicates: nilpotent, solvable, supersolvable,
//! simple, almost abelian; minimal ideals, maximal and maximal nilpotent
//! subalgebras, Frattini subalgebra, Cartan subalgebras, and the classifier
//! for algebras whose one-dimensional subalgebras are all weak c-ideals.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::{Field, Scalar};
use crate::ideals::{core_in, ideal_closure_in};
use crate::lattice::Lattice;
use crate::liecore::{LieAlgebra, SeriesKind};
use crate::linspace::{axpy, is_zero_vector, Budget, Echelon, Matrix, Subspace, Vector};

/// Answer of a predicate that may be out of reach of the artifact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tri {
    True,
    False,
    Unsupported,
}

impl From<bool> for Tri {
    fn from(b: bool) -> Self {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }
}

impl Tri {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Tri::True => Some(true),
            Tri::False => Some(false),
            Tri::Unsupported => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureFlags {
    pub nilpotent: Tri,
    pub solvable: Tri,
    pub supersolvable: Tri,
    pub simple: Tri,
    pub almost_abelian: Tri,
}

pub fn flags(alg: &LieAlgebra, budget: &Budget) -> StructureFlags {
    StructureFlags {
        nilpotent: alg.is_nilpotent().into(),
        solvable: alg.is_solvable().into(),
        supersolvable: is_supersolvable(alg, budget),
        simple: is_simple(alg, budget),
        almost_abelian: is_almost_abelian(alg).into(),
    }
}

/// Supersolvability: a flag of ideals with one-dimensional steps exists.
///
/// Peels off one 1-dimensional ideal at a time and recurses on the
/// quotient; any choice works since quotients of supersolvable algebras are
/// supersolvable. Over GF(p) the 1-dimensional ideals come from scanning
/// projective points, over Q from common rational eigenvectors of the
/// adjoint operators.
pub fn is_supersolvable(alg: &LieAlgebra, budget: &Budget) -> Tri {
    let route = match alg.field() {
        Field::Prime(_) => OneDimIdealRoute::Projective,
        Field::Rationals => OneDimIdealRoute::Eigen,
    };
    match supersolvable_via(alg, route, budget) {
        Ok(b) => b.into(),
        Err(_) => Tri::Unsupported,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OneDimIdealRoute {
    Projective,
    Eigen,
}

pub fn supersolvable_via(alg: &LieAlgebra, route: OneDimIdealRoute, budget: &Budget) -> Result<bool> {
    let mut cur = alg.clone();
    loop {
        if cur.dim() <= 1 || cur.is_nilpotent() {
            return Ok(true);
        }
        let found = match route {
            OneDimIdealRoute::Projective => one_dim_ideal_projective(&cur, budget)?,
            OneDimIdealRoute::Eigen => one_dim_ideal_eigen(&cur),
        };
        let Some(v) = found else {
            return Ok(false);
        };
        let line = cur.span(&[v]);
        cur = cur.quotient(&line)?.algebra;
    }
}

/// Normalized representatives (first nonzero entry 1) of the points of the
/// projective space over a finite field.
fn projective_points(field: Field, n: usize, budget: &Budget) -> Result<Vec<Vector>> {
    let q = field.order().ok_or(Error::Unsupported(
        "projective enumeration needs a finite field".into(),
    ))?;
    let count = (0..n).map(|k| (q as u128).pow(k as u32)).sum::<u128>();
    budget.check(count)?;
    let elems: Vec<Scalar> = field.elements().expect("finite").collect();
    let mut out = Vec::with_capacity(count as usize);
    for lead in 0..n {
        let tail = n - lead - 1;
        let total = (q as u128).pow(tail as u32) as usize;
        for mut idx in 0..total {
            let mut v = vec![field.zero(); n];
            v[lead] = field.one();
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = elems[idx % q as usize].clone();
                idx /= q as usize;
            }
            out.push(v);
        }
    }
    Ok(out)
}

/// `[e_i, v] ∈ F v` for every basis vector.
fn spans_ideal_line(alg: &LieAlgebra, v: &[Scalar]) -> bool {
    let lead = v.iter().position(|x| !x.is_zero()).expect("nonzero");
    (0..alg.dim()).all(|i| {
        let w = alg.bracket(&alg.basis_vector(i), v);
        let lambda = w[lead].checked_div(&v[lead]).expect("nonzero lead");
        is_zero_vector(&axpy(&w, &lambda.neg(), v))
    })
}

pub fn one_dim_ideal_projective(alg: &LieAlgebra, budget: &Budget) -> Result<Option<Vector>> {
    Ok(projective_points(alg.field(), alg.dim(), budget)?
        .into_iter()
        .find(|v| spans_ideal_line(alg, v)))
}

/// All 1-dimensional ideals by projective scan (finite fields).
pub fn one_dim_ideals(alg: &LieAlgebra, budget: &Budget) -> Result<Vec<Subspace>> {
    Ok(projective_points(alg.field(), alg.dim(), budget)?
        .into_iter()
        .filter(|v| spans_ideal_line(alg, v))
        .map(|v| alg.span(&[v]))
        .collect())
}

/// A common eigenvector of all `ad(e_i)`, found by intersecting eigenspaces
/// one operator at a time. Eigenvalue candidates are all field elements
/// over GF(p) and the rational roots of the characteristic polynomial over
/// Q.
pub fn one_dim_ideal_eigen(alg: &LieAlgebra) -> Option<Vector> {
    let n = alg.dim();
    if n == 0 {
        return None;
    }
    let ads: Vec<Matrix> = (0..n).map(|i| alg.ad(&alg.basis_vector(i))).collect();
    let candidates: Vec<Vec<Scalar>> = ads.iter().map(eigenvalue_candidates).collect();
    common_eigenvector(&ads, &candidates, 0, alg.whole())
}

fn common_eigenvector(
    ads: &[Matrix],
    candidates: &[Vec<Scalar>],
    i: usize,
    space: Subspace,
) -> Option<Vector> {
    if i == ads.len() {
        return space.basis().first().cloned();
    }
    let field = space.field();
    for lambda in &candidates[i] {
        let mut shifted = ads[i].clone();
        for d in 0..shifted.shape().0 {
            let v = shifted.get(d, d).sub_unchecked(lambda);
            shifted.set(d, d, v);
        }
        let eigenspace = shifted.kernel();
        if eigenspace.is_zero() {
            continue;
        }
        let next = space.meet(&eigenspace);
        debug_assert_eq!(next.field(), field);
        if next.is_zero() {
            continue;
        }
        if let Some(v) = common_eigenvector(ads, candidates, i + 1, next) {
            return Some(v);
        }
    }
    None
}

fn eigenvalue_candidates(m: &Matrix) -> Vec<Scalar> {
    match m.field() {
        f @ Field::Prime(_) => f.elements().expect("finite").collect(),
        Field::Rationals => rational_roots(&characteristic_polynomial(m))
            .into_iter()
            .map(Scalar::Rat)
            .collect(),
    }
}

/// Coefficients `c_0, …, c_n` of `det(t I - M)` (Faddeev-LeVerrier).
pub fn characteristic_polynomial(m: &Matrix) -> Vec<BigRational> {
    let n = m.shape().0;
    let to_q = |s: &Scalar| s.as_rational().cloned().expect("rational matrix");
    let a: Vec<Vec<BigRational>> = (0..n)
        .map(|r| (0..n).map(|c| to_q(m.get(r, c))).collect())
        .collect();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut mk = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for r in 0..n {
            for c in 0..n {
                let mut acc = BigRational::zero();
                for t in 0..n {
                    if !a[r][t].is_zero() && !mk[t][c].is_zero() {
                        acc += &a[r][t] * &mk[t][c];
                    }
                }
                if r == c {
                    acc += &coeffs[n - k + 1];
                }
                next[r][c] = acc;
            }
        }
        mk = next;
        let mut trace = BigRational::zero();
        for r in 0..n {
            for t in 0..n {
                trace += &a[r][t] * &mk[t][r];
            }
        }
        coeffs[n - k] = -trace / BigRational::from_integer(BigInt::from(k));
    }
    coeffs
}

/// Distinct rational roots, ascending.
pub fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let mut roots = BTreeSet::new();
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    while ints.len() > 1 && ints[0].is_zero() {
        roots.insert(BigRational::zero());
        ints.remove(0);
    }
    while ints.last().is_some_and(|c| c.is_zero()) {
        ints.pop();
    }
    if ints.len() <= 1 {
        return roots.into_iter().collect();
    }
    let lead = ints.last().expect("nonempty").clone();
    let constant = ints[0].clone();
    let evaluate = |x: &BigRational| {
        ints.iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    };
    for p in divisors(&constant) {
        for q in divisors(&lead) {
            for sign in [1, -1] {
                let cand = BigRational::new(BigInt::from(sign) * &p, q.clone());
                if evaluate(&cand).is_zero() {
                    roots.insert(cand);
                }
            }
        }
    }
    roots.into_iter().collect()
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let other = &n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out
}

/// Smallest ideal of `L` containing `v`.
pub fn spin(alg: &LieAlgebra, v: &[Scalar]) -> Subspace {
    ideal_closure_in(alg, &alg.span(&[v.to_vec()]), &alg.whole())
}

/// Distinct spins of all projective points.
fn all_spins(alg: &LieAlgebra, budget: &Budget) -> Result<Vec<Subspace>> {
    if !alg.field().is_finite() {
        return Err(Error::Unsupported(
            "spinning over an infinite field".into(),
        ));
    }
    use rayon::prelude::*;
    let points = projective_points(alg.field(), alg.dim(), budget)?;
    let spins: BTreeSet<Subspace> = points.par_iter().map(|v| spin(alg, v)).collect();
    Ok(spins.into_iter().collect())
}

pub fn is_simple(alg: &LieAlgebra, budget: &Budget) -> Tri {
    if alg.dim() <= 1 {
        return Tri::False;
    }
    match all_spins(alg, budget) {
        Ok(spins) => spins.iter().all(Subspace::is_full).into(),
        Err(_) => Tri::Unsupported,
    }
}

/// Minimal ideals as the minimal elements among spins of nonzero vectors.
pub fn minimal_ideals(alg: &LieAlgebra, budget: &Budget) -> Result<Vec<Subspace>> {
    let spins = all_spins(alg, budget)?;
    Ok(spins
        .iter()
        .filter(|s| !spins.iter().any(|t| t != *s && t.le(s)))
        .cloned()
        .collect())
}

pub fn maximal_subalgebras(lattice: &Lattice) -> Vec<Subspace> {
    collect(lattice, lattice.maximal_subalgebras())
}

/// `(F(L), φ(L))`: intersection of the maximal subalgebras and its core.
pub fn frattini(lattice: &Lattice) -> (Subspace, Subspace) {
    let alg = lattice.algebra();
    let f = lattice.frattini_of(lattice.whole());
    let phi = core_in(alg, &f, &alg.whole());
    (f, phi)
}

pub fn maximal_nilpotent_subalgebras(lattice: &Lattice) -> Vec<Subspace> {
    collect(lattice, lattice.maximal_nilpotent())
}

pub fn cartan_subalgebras(lattice: &Lattice) -> Vec<Subspace> {
    collect(lattice, lattice.cartan())
}

fn collect(lattice: &Lattice, idx: Vec<usize>) -> Vec<Subspace> {
    idx.into_iter().map(|i| lattice.get(i).clone()).collect()
}

/// An `x` with `[x, y] = y` for every `y` in the (abelian) space `d`.
fn identity_acting_element(alg: &LieAlgebra, d: &Subspace) -> Option<Vector> {
    let n = alg.dim();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for y in d.basis() {
        let cols: Vec<Vector> = (0..n)
            .map(|i| alg.bracket(&alg.basis_vector(i), y))
            .collect();
        for k in 0..n {
            rows.push(cols.iter().map(|c| c[k].clone()).collect::<Vector>());
            rhs.push(y[k].clone());
        }
    }
    if rows.is_empty() {
        return Some(vec![alg.field().zero(); n]);
    }
    Matrix::from_rows(alg.field(), n, &rows)
        .expect("consistent rows")
        .solve(&rhs)
}

/// `L = L² ⊕ Fx` with `L²` abelian and `[x, y] = y` on `L²`.
pub fn is_almost_abelian(alg: &LieAlgebra) -> bool {
    is_almost_abelian_space(alg, &alg.whole())
}

/// Almost-abelian test for a subalgebra `B`, computed inside `B`.
pub fn is_almost_abelian_space(alg: &LieAlgebra, b: &Subspace) -> bool {
    if b.is_zero() {
        return false;
    }
    let d = alg.product_space(b, b);
    if d.dim() + 1 != b.dim() || !alg.is_abelian_space(&d) {
        return false;
    }
    if d.is_zero() {
        return true;
    }
    // Restrict the unknown x to B: solve in B's coordinates.
    let n = alg.dim();
    let k = b.dim();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for y in d.basis() {
        let images: Vec<Vector> = b.basis().iter().map(|bi| alg.bracket(bi, y)).collect();
        for c in 0..n {
            rows.push(images.iter().map(|im| im[c].clone()).collect::<Vector>());
            rhs.push(y[c].clone());
        }
    }
    // Any solution lies outside d, since d acts trivially on itself.
    Matrix::from_rows(alg.field(), k, &rows)
        .expect("consistent rows")
        .solve(&rhs)
        .is_some()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "kebab-case")]
pub enum OneDimVerdict {
    /// `L³ = 0`
    CaseI,
    /// `L = A ⊕ B`, `A` an abelian ideal, `B` an almost abelian ideal.
    CaseII {
        abelian: Subspace,
        almost_abelian: Subspace,
    },
    Neither,
}

impl OneDimVerdict {
    pub fn is_positive(&self) -> bool {
        !matches!(self, OneDimVerdict::Neither)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OneDimReport {
    pub verdict: OneDimVerdict,
    /// Whether every 1-dimensional subalgebra is a weak c-ideal (finite
    /// fields within budget only).
    pub all_lines_weak_c: Option<bool>,
    /// A 1-dimensional subalgebra without any weak c-ideal witness.
    pub non_witness: Option<Subspace>,
    /// `verdict positive ⇔ all_lines_weak_c`, when both are known.
    pub consistent: Option<bool>,
}

/// Structural classification valid over any field.
pub fn one_dim_verdict(alg: &LieAlgebra) -> OneDimVerdict {
    let lc = alg.series(SeriesKind::LowerCentral);
    if lc.term(3).is_zero() {
        return OneDimVerdict::CaseI;
    }
    let whole = alg.whole();
    let d = alg.product_space(&whole, &whole);
    if !alg.is_abelian_space(&d) {
        return OneDimVerdict::Neither;
    }
    let Some(x0) = identity_acting_element(alg, &d) else {
        return OneDimVerdict::Neither;
    };
    // Solutions form x0 + C_L(L²); need L = Z(L) + L² + Fx with x among them.
    let centralizer = alg.centralizer(&d);
    let center = alg.centralizer(&whole);
    let s = center.join(&d);
    let x = if s.is_full() {
        x0
    } else if s.codim() == 1 {
        if !s.contains_unchecked(&x0) {
            x0
        } else {
            match centralizer.basis().iter().find(|c| !s.contains_unchecked(c)) {
                Some(c) => axpy(&x0, &alg.field().one(), c),
                None => return OneDimVerdict::Neither,
            }
        }
    } else {
        return OneDimVerdict::Neither;
    };
    let b = d.extend([x]);
    let mut a = Echelon::new(alg.field(), alg.dim());
    let mut total = Echelon::from_subspace(&b);
    for z in center.basis() {
        if total.insert(z) {
            a.insert(z);
        }
    }
    let a = a.into_subspace();
    debug_assert!(a.join(&b).is_full() && a.meet(&b).is_zero());
    OneDimVerdict::CaseII {
        abelian: a,
        almost_abelian: b,
    }
}

/// Classify and, over finite fields, cross-check the classification by an
/// exhaustive scan of the 1-dimensional subalgebras.
pub fn classify_one_dim_weak_c(alg: &LieAlgebra, budget: &Budget) -> OneDimReport {
    let verdict = one_dim_verdict(alg);
    let scan = if alg.field().is_finite() {
        Lattice::build(alg, budget).ok().map(|lat| {
            let bad = (0..lat.len())
                .filter(|&i| lat.get(i).dim() == 1)
                .find(|&i| !lat.is_weak_c(i))
                .map(|i| lat.get(i).clone());
            (bad.is_none(), bad)
        })
    } else {
        None
    };
    let (all_lines_weak_c, non_witness) = match scan {
        Some((all, bad)) => (Some(all), bad),
        None => (None, None),
    };
    let consistent = all_lines_weak_c.map(|all| all == verdict.is_positive());
    OneDimReport {
        verdict,
        all_lines_weak_c,
        non_witness,
        consistent,
    }
}
