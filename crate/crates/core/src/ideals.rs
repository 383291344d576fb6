//! Cores, ideal closures, subideal chains, and c-ideal / weak c-ideal
//! certificates.
//!
//! A subalgebra `B` of `L` is a weak c-ideal when some subideal `C` gives
//! `L = B + C` with `B ∩ C` inside the core `B_L` (the largest ideal of `L`
//! contained in `B`); it is a c-ideal when `C` can be taken to be an ideal.
//!
//! Most routines come in two flavours: one relative to the whole algebra,
//! and an `_in` variant relative to an ambient subalgebra `K`, which the
//! exhaustive checks need when they pass to subalgebras.
//!
//! Subideal chains are allowed to be improper: `B = L` is a subideal via the
//! one-term chain `[L]`.

use serde::Serialize;
use thiserror::Error;

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::liecore::{LieAlgebra, Quotient, SeriesKind};
use crate::linspace::{combine, quotient_coordinates, Budget, Echelon, Matrix, Subspace, Vector};

/// Largest ideal of `L` contained in the subalgebra `B`.
pub fn core(alg: &LieAlgebra, b: &Subspace) -> Result<Subspace> {
    alg.check_space(b)?;
    if !alg.is_subalgebra(b) {
        return Err(Error::NotSubalgebra("B"));
    }
    Ok(core_in(alg, b, &alg.whole()))
}

/// Largest ideal of `K` contained in `B`, as the descending fixed point
/// `B_0 = B`, `B_{i+1} = {x ∈ B_i : [K, x] ⊆ B_i}`.
pub fn core_in(alg: &LieAlgebra, b: &Subspace, k: &Subspace) -> Subspace {
    let mut cur = b.clone();
    loop {
        if cur.is_zero() || alg.is_ideal_of(&cur, k) {
            return cur;
        }
        let qm = quotient_coordinates(&cur);
        let d = cur.dim();
        let qd = qm.quotient_dim();
        // Unknowns: coordinates t_r of x = Σ t_r b_r. One equation per
        // (generator of K, quotient coordinate).
        let mut rows: Vec<Vector> = Vec::new();
        for x in k.basis() {
            let images: Vec<Vector> = cur
                .basis()
                .iter()
                .map(|br| qm.project(&alg.bracket(x, br)))
                .collect();
            for q in 0..qd {
                rows.push(images.iter().map(|im| im[q].clone()).collect());
            }
        }
        let kernel = Matrix::from_rows(alg.field(), d, &rows)
            .expect("consistent rows")
            .kernel();
        let vectors: Vec<Vector> = kernel
            .basis()
            .iter()
            .map(|t| combine(alg.field(), alg.dim(), t, cur.basis()))
            .collect();
        let next = alg.span(&vectors);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Smallest ideal of the subalgebra `K` containing `B`.
pub fn ideal_closure(alg: &LieAlgebra, b: &Subspace, k: &Subspace) -> Result<Subspace> {
    alg.check_space(b)?;
    alg.check_space(k)?;
    if !alg.is_subalgebra(k) {
        return Err(Error::NotSubalgebra("K"));
    }
    if !b.le(k) {
        return Err(Error::NotContained {
            inner: "B",
            outer: "K",
        });
    }
    Ok(ideal_closure_in(alg, b, k))
}

pub(crate) fn ideal_closure_in(alg: &LieAlgebra, b: &Subspace, k: &Subspace) -> Subspace {
    let mut span = Echelon::from_subspace(b);
    let mut queue: Vec<Vector> = b.basis().to_vec();
    while let Some(w) = queue.pop() {
        for x in k.basis() {
            let z = alg.bracket(x, &w);
            if span.insert(&z) {
                queue.push(z);
            }
        }
    }
    span.into_subspace()
}

/// `I_0 < I_1 < … < I_n`, each term an ideal of the next, ending at the
/// ambient subalgebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SubidealChain {
    terms: Vec<Subspace>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainDefect {
    #[error("chain is empty")]
    Empty,
    #[error("term {0} is not a subalgebra")]
    NotSubalgebra(usize),
    #[error("term {0} is not strictly contained in term {1}")]
    NotStrictlyIncreasing(usize, usize),
    #[error("term {0} is not an ideal of term {1}")]
    NotIdealOfNext(usize, usize),
    #[error("last term is not the ambient algebra")]
    WrongTop,
    #[error("first term is not the claimed subideal")]
    WrongBottom,
}

impl SubidealChain {
    pub fn new(terms: Vec<Subspace>) -> Self {
        SubidealChain { terms }
    }

    pub fn terms(&self) -> &[Subspace] {
        &self.terms
    }

    /// Number of steps `n` (so `[L]` has length 0).
    pub fn len(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn bottom(&self) -> Option<&Subspace> {
        self.terms.first()
    }

    /// Term-by-term re-validation against the definition.
    pub fn validate(&self, alg: &LieAlgebra, ambient: &Subspace) -> Result<(), ChainDefect> {
        let top = self.terms.last().ok_or(ChainDefect::Empty)?;
        if top != ambient {
            return Err(ChainDefect::WrongTop);
        }
        for (idx, t) in self.terms.iter().enumerate() {
            if alg.check_space(t).is_err() || !alg.is_subalgebra(t) {
                return Err(ChainDefect::NotSubalgebra(idx));
            }
        }
        for (idx, pair) in self.terms.windows(2).enumerate() {
            if !(pair[0].le(&pair[1]) && pair[0].dim() < pair[1].dim()) {
                return Err(ChainDefect::NotStrictlyIncreasing(idx, idx + 1));
            }
            if !alg.is_ideal_of(&pair[0], &pair[1]) {
                return Err(ChainDefect::NotIdealOfNext(idx, idx + 1));
            }
        }
        Ok(())
    }
}

/// Decide whether `B` is a subideal of `L` and return a chain if so.
pub fn subideal_chain(alg: &LieAlgebra, b: &Subspace) -> Result<Option<SubidealChain>> {
    alg.check_space(b)?;
    if !alg.is_subalgebra(b) {
        return Err(Error::NotSubalgebra("B"));
    }
    Ok(subideal_chain_in(alg, b, &alg.whole()))
}

/// Standard series `K_0 = K`, `K_{i+1}` = ideal closure of `B` in `K_i`.
/// It stabilizes at `B` exactly when `B` is a subideal of `K`; the reversed
/// series is then the chain. The chain is re-validated before it is
/// returned.
pub fn subideal_chain_in(alg: &LieAlgebra, b: &Subspace, k: &Subspace) -> Option<SubidealChain> {
    let series = standard_series(alg, b, k)?;
    let chain = SubidealChain::new(series.into_iter().rev().collect());
    debug_assert_eq!(chain.bottom(), Some(b));
    match chain.validate(alg, k) {
        Ok(()) => Some(chain),
        Err(defect) => panic!("standard series produced an invalid chain: {defect}"),
    }
}

/// Decision only, without building the chain.
pub fn is_subideal_in(alg: &LieAlgebra, b: &Subspace, k: &Subspace) -> bool {
    standard_series(alg, b, k).is_some()
}

fn standard_series(alg: &LieAlgebra, b: &Subspace, k: &Subspace) -> Option<Vec<Subspace>> {
    if !b.le(k) {
        return None;
    }
    let mut series = vec![k.clone()];
    loop {
        let last = series.last().expect("nonempty");
        if last == b {
            return Some(series);
        }
        let next = ideal_closure_in(alg, b, last);
        if &next == last {
            return None;
        }
        series.push(next);
    }
}

/// First condition of the weak c-ideal / c-ideal definitions that fails.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeakCFailure {
    #[error("{0} is not a subalgebra")]
    NotSubalgebra(&'static str),
    #[error("{0} is not contained in the ambient subalgebra")]
    NotInAmbient(&'static str),
    #[error("C is not a subideal")]
    NotSubideal,
    #[error("C is not an ideal")]
    NotIdeal,
    #[error("B + C is not the whole algebra")]
    SumNotWhole,
    #[error("B ∩ C is not contained in the core of B")]
    IntersectionNotInCore,
    #[error("invalid subideal chain: {0}")]
    BadChain(String),
    #[error("recorded core does not match the core of B")]
    CoreMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakCIdealCertificate {
    #[serde(rename = "B")]
    pub b: Subspace,
    #[serde(rename = "C")]
    pub c: Subspace,
    pub chain: SubidealChain,
    #[serde(rename = "core_B")]
    pub core_b: Subspace,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CIdealCertificate {
    #[serde(rename = "B")]
    pub b: Subspace,
    #[serde(rename = "C")]
    pub c: Subspace,
    #[serde(rename = "core_B")]
    pub core_b: Subspace,
}

impl WeakCIdealCertificate {
    /// Re-check every condition directly, without any search.
    pub fn check(&self, alg: &LieAlgebra) -> Result<(), WeakCFailure> {
        let whole = alg.whole();
        if !alg.is_subalgebra(&self.b) {
            return Err(WeakCFailure::NotSubalgebra("B"));
        }
        if self.chain.bottom() != Some(&self.c) {
            return Err(WeakCFailure::BadChain(ChainDefect::WrongBottom.to_string()));
        }
        self.chain
            .validate(alg, &whole)
            .map_err(|d| WeakCFailure::BadChain(d.to_string()))?;
        check_core(alg, &self.b, &self.core_b)?;
        check_sum_and_meet(&self.b, &self.c, &self.core_b, &whole)
    }

    /// Every c-ideal certificate is also a weak one.
    pub fn from_c(alg: &LieAlgebra, cert: &CIdealCertificate) -> Self {
        let chain = if cert.c == alg.whole() {
            SubidealChain::new(vec![cert.c.clone()])
        } else {
            SubidealChain::new(vec![cert.c.clone(), alg.whole()])
        };
        WeakCIdealCertificate {
            b: cert.b.clone(),
            c: cert.c.clone(),
            chain,
            core_b: cert.core_b.clone(),
        }
    }
}

impl CIdealCertificate {
    pub fn check(&self, alg: &LieAlgebra) -> Result<(), WeakCFailure> {
        if !alg.is_subalgebra(&self.b) {
            return Err(WeakCFailure::NotSubalgebra("B"));
        }
        if !alg.is_ideal(&self.c) {
            return Err(WeakCFailure::NotIdeal);
        }
        check_core(alg, &self.b, &self.core_b)?;
        check_sum_and_meet(&self.b, &self.c, &self.core_b, &alg.whole())
    }
}

fn check_core(alg: &LieAlgebra, b: &Subspace, core_b: &Subspace) -> Result<(), WeakCFailure> {
    if !alg.is_ideal(core_b) || !core_b.le(b) || core_in(alg, b, &alg.whole()) != *core_b {
        return Err(WeakCFailure::CoreMismatch);
    }
    Ok(())
}

fn check_sum_and_meet(
    b: &Subspace,
    c: &Subspace,
    core_b: &Subspace,
    ambient: &Subspace,
) -> Result<(), WeakCFailure> {
    if &b.join(c) != ambient {
        return Err(WeakCFailure::SumNotWhole);
    }
    if !b.meet(c).le(core_b) {
        return Err(WeakCFailure::IntersectionNotInCore);
    }
    Ok(())
}

/// Check whether `C` witnesses that `B` is a weak c-ideal of `L`.
pub fn verify_weak_c(
    alg: &LieAlgebra,
    b: &Subspace,
    c: &Subspace,
) -> Result<WeakCIdealCertificate, WeakCFailure> {
    verify_weak_c_in(alg, b, c, &alg.whole())
}

/// Same as [`verify_weak_c`] with a subalgebra `K` as the ambient algebra.
pub fn verify_weak_c_in(
    alg: &LieAlgebra,
    b: &Subspace,
    c: &Subspace,
    k: &Subspace,
) -> Result<WeakCIdealCertificate, WeakCFailure> {
    check_pair(alg, b, c, k)?;
    let chain = subideal_chain_in(alg, c, k).ok_or(WeakCFailure::NotSubideal)?;
    let core_b = core_in(alg, b, k);
    check_sum_and_meet(b, c, &core_b, k)?;
    Ok(WeakCIdealCertificate {
        b: b.clone(),
        c: c.clone(),
        chain,
        core_b,
    })
}

/// Check whether the ideal `C` witnesses that `B` is a c-ideal of `L`.
pub fn verify_c(
    alg: &LieAlgebra,
    b: &Subspace,
    c: &Subspace,
) -> Result<CIdealCertificate, WeakCFailure> {
    let whole = alg.whole();
    check_pair(alg, b, c, &whole)?;
    if !alg.is_ideal(c) {
        return Err(WeakCFailure::NotIdeal);
    }
    let core_b = core_in(alg, b, &whole);
    check_sum_and_meet(b, c, &core_b, &whole)?;
    Ok(CIdealCertificate {
        b: b.clone(),
        c: c.clone(),
        core_b,
    })
}

fn check_pair(
    alg: &LieAlgebra,
    b: &Subspace,
    c: &Subspace,
    k: &Subspace,
) -> Result<(), WeakCFailure> {
    for (name, s) in [("B", b), ("C", c)] {
        if alg.check_space(s).is_err() || !alg.is_subalgebra(s) {
            return Err(WeakCFailure::NotSubalgebra(name));
        }
        if !s.le(k) {
            return Err(WeakCFailure::NotInAmbient(name));
        }
    }
    Ok(())
}

fn searchable(alg: &LieAlgebra, b: &Subspace) -> Result<()> {
    alg.check_space(b)?;
    if !alg.field().is_finite() {
        return Err(Error::Unsupported(
            "witness search needs a finite field; supply a witness to verify instead".into(),
        ));
    }
    if !alg.is_subalgebra(b) {
        return Err(Error::NotSubalgebra("B"));
    }
    Ok(())
}

/// Exhaustive search for a subideal `C` making `B` a weak c-ideal; the
/// first witness in canonical lattice order is returned.
pub fn find_weak_c_witness(
    alg: &LieAlgebra,
    b: &Subspace,
    budget: &Budget,
) -> Result<Option<WeakCIdealCertificate>> {
    searchable(alg, b)?;
    let lattice = Lattice::build(alg, budget)?;
    Ok(find_weak_c_witness_with(&lattice, b))
}

pub fn find_weak_c_witness_with(lattice: &Lattice, b: &Subspace) -> Option<WeakCIdealCertificate> {
    let alg = lattice.algebra();
    let idx = lattice.index_of(b)?;
    let c = lattice.weak_c_witness(idx)?;
    Some(
        verify_weak_c(alg, b, lattice.get(c))
            .expect("lattice witness must verify against the definition"),
    )
}

/// Exhaustive search for an ideal `C` making `B` a c-ideal.
pub fn find_c_witness(
    alg: &LieAlgebra,
    b: &Subspace,
    budget: &Budget,
) -> Result<Option<CIdealCertificate>> {
    searchable(alg, b)?;
    let lattice = Lattice::build(alg, budget)?;
    Ok(find_c_witness_with(&lattice, b))
}

pub fn find_c_witness_with(lattice: &Lattice, b: &Subspace) -> Option<CIdealCertificate> {
    let alg = lattice.algebra();
    let idx = lattice.index_of(b)?;
    let c = lattice.c_witness(idx)?;
    Some(verify_c(alg, b, lattice.get(c)).expect("lattice witness must verify against the definition"))
}

/// A subalgebra `K ⊇ B_L` such that `K / B_L` is a subideal complement of
/// `B / B_L` in `L / B_L`. The search runs in the quotient algebra.
pub fn subideal_complement_mod_core(
    alg: &LieAlgebra,
    b: &Subspace,
    budget: &Budget,
) -> Result<Option<Subspace>> {
    searchable(alg, b)?;
    let core_b = core_in(alg, b, &alg.whole());
    let quotient = alg.quotient(&core_b)?;
    let q_lattice = Lattice::build(&quotient.algebra, budget)?;
    Ok(subideal_complement_with(&quotient, &q_lattice, b))
}

/// The complement search of [`subideal_complement_mod_core`] given the
/// quotient `L / B_L` and its lattice.
pub fn subideal_complement_with(quotient: &Quotient, q_lattice: &Lattice, b: &Subspace) -> Option<Subspace> {
    let bar_b = quotient.project_space(b);
    let q_alg = &quotient.algebra;
    let whole = q_alg.whole();
    q_lattice
        .subideal_indices()
        .into_iter()
        .map(|idx| q_lattice.get(idx))
        .find(|c| bar_b.dim() + c.dim() == q_alg.dim() && bar_b.join(c) == whole && bar_b.meet(c).is_zero())
        .map(|c| quotient.preimage(c))
}

/// Certificate-checking mode: does `K` satisfy the complement conditions
/// for `B` modulo its core?
pub fn is_subideal_complement_mod_core(alg: &LieAlgebra, b: &Subspace, k: &Subspace) -> bool {
    let whole = alg.whole();
    if !alg.is_subalgebra(b) || !alg.is_subalgebra(k) {
        return false;
    }
    let core_b = core_in(alg, b, &whole);
    if !core_b.le(k) {
        return false;
    }
    let Ok(quotient) = alg.quotient(&core_b) else {
        return false;
    };
    let bar_b = quotient.project_space(b);
    let bar_k = quotient.project_space(k);
    let q_whole = quotient.algebra.whole();
    is_subideal_in(&quotient.algebra, &bar_k, &q_whole)
        && bar_b.join(&bar_k) == q_whole
        && bar_b.meet(&bar_k).is_zero()
}

/// Smallest 1-based index `k` with the `k`-th series term inside `target`.
pub fn min_power_in(alg: &LieAlgebra, target: &Subspace, kind: SeriesKind) -> Option<usize> {
    let series = alg.series(kind);
    series
        .terms
        .iter()
        .position(|t| t.le(target))
        .map(|i| i + 1)
}
