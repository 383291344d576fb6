//! The subalgebra lattice of an algebra over a finite field, with the
//! per-element data the searches and exhaustive checks keep asking for.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideals::{core_in, is_subideal_in};
use crate::liecore::LieAlgebra;
use crate::linspace::{enumerate_subspaces, Budget, Subspace};

pub struct Lattice {
    algebra: LieAlgebra,
    /// Subalgebras in canonical order; index 0 is the zero subalgebra and
    /// the last index is the whole algebra.
    elements: Vec<Subspace>,
    index: HashMap<Subspace, usize>,
    /// `below[i]` holds every `j` with `elements[j] ⊆ elements[i]`.
    below: Vec<FixedBitSet>,
    ideal: Vec<bool>,
    subideal: Vec<bool>,
    core: Vec<usize>,
    nilpotent: Vec<bool>,
    solvable: Vec<bool>,
    weak_c: Vec<Option<usize>>,
    c_witness: Vec<Option<usize>>,
}

impl Lattice {
    pub fn build(alg: &LieAlgebra, budget: &Budget) -> Result<Self> {
        if !alg.field().is_finite() {
            return Err(Error::Unsupported(
                "lattice enumeration needs a finite field".into(),
            ));
        }
        let all: Vec<Subspace> = enumerate_subspaces(alg.field(), alg.dim(), None, budget)?.collect();
        let elements: Vec<Subspace> = all
            .into_par_iter()
            .filter(|s| alg.is_subalgebra(s))
            .collect();
        let index: HashMap<Subspace, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let n = elements.len();
        let below: Vec<FixedBitSet> = elements
            .par_iter()
            .map(|big| {
                let mut set = FixedBitSet::with_capacity(n);
                for (j, small) in elements.iter().enumerate() {
                    if small.dim() > big.dim() {
                        break;
                    }
                    if small.le(big) {
                        set.insert(j);
                    }
                }
                set
            })
            .collect();
        let whole = alg.whole();
        let ideal: Vec<bool> = elements.par_iter().map(|s| alg.is_ideal(s)).collect();
        let subideal: Vec<bool> = elements
            .par_iter()
            .map(|s| is_subideal_in(alg, s, &whole))
            .collect();
        let core: Vec<usize> = elements
            .par_iter()
            .map(|s| index[&core_in(alg, s, &whole)])
            .collect();
        let nilpotent: Vec<bool> = elements
            .par_iter()
            .map(|s| alg.is_nilpotent_space(s))
            .collect();
        let solvable: Vec<bool> = elements
            .par_iter()
            .map(|s| alg.is_solvable_space(s))
            .collect();
        let mut lattice = Lattice {
            algebra: alg.clone(),
            elements,
            index,
            below,
            ideal,
            subideal,
            core,
            nilpotent,
            solvable,
            weak_c: Vec::new(),
            c_witness: Vec::new(),
        };
        let whole_idx = lattice.whole();
        let subideals = lattice.subideal_indices();
        let ideals = lattice.ideal_indices();
        lattice.weak_c = (0..n)
            .into_par_iter()
            .map(|b| lattice.first_witness(b, whole_idx, &subideals))
            .collect();
        lattice.c_witness = (0..n)
            .into_par_iter()
            .map(|b| lattice.first_witness(b, whole_idx, &ideals))
            .collect();
        Ok(lattice)
    }

    /// First `C` among `candidates` (all below `K`), scanned from the
    /// highest index down, with `B + C = K` and `B ∩ C ⊆ core_K(B)`. For an
    /// ideal `B` this returns `C = K`.
    fn first_witness(&self, b: usize, k: usize, candidates: &[usize]) -> Option<usize> {
        let bs = &self.elements[b];
        let ks = &self.elements[k];
        let core = if k == self.whole() {
            self.elements[self.core[b]].clone()
        } else {
            core_in(&self.algebra, bs, ks)
        };
        candidates.iter().rev().copied().find(|&c| {
            let cs = &self.elements[c];
            bs.dim() + cs.dim() >= ks.dim() && &bs.join(cs) == ks && bs.meet(cs).le(&core)
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Subspace] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &Subspace {
        &self.elements[i]
    }

    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn whole(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn zero(&self) -> usize {
        0
    }

    /// `elements[j] ⊆ elements[i]`
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.below[i].contains(j)
    }

    pub fn below(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.below[i].ones()
    }

    pub fn above(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        (j..self.len()).filter(move |&i| self.below[i].contains(j))
    }

    pub fn is_ideal(&self, i: usize) -> bool {
        self.ideal[i]
    }

    pub fn is_subideal(&self, i: usize) -> bool {
        self.subideal[i]
    }

    pub fn core(&self, i: usize) -> usize {
        self.core[i]
    }

    pub fn is_nilpotent(&self, i: usize) -> bool {
        self.nilpotent[i]
    }

    pub fn is_solvable(&self, i: usize) -> bool {
        self.solvable[i]
    }

    pub fn weak_c_witness(&self, i: usize) -> Option<usize> {
        self.weak_c[i]
    }

    pub fn c_witness(&self, i: usize) -> Option<usize> {
        self.c_witness[i]
    }

    pub fn is_weak_c(&self, i: usize) -> bool {
        self.weak_c[i].is_some()
    }

    pub fn is_c_ideal(&self, i: usize) -> bool {
        self.c_witness[i].is_some()
    }

    pub fn ideal_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.ideal[i]).collect()
    }

    pub fn subideal_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.subideal[i]).collect()
    }

    /// Subalgebras of `K` that are subideals of `K`.
    pub fn subideals_of(&self, k: usize) -> Vec<usize> {
        let ks = &self.elements[k];
        self.below(k)
            .filter(|&c| is_subideal_in(&self.algebra, &self.elements[c], ks))
            .collect()
    }

    /// Weak c-ideal witness for `B` inside the subalgebra `K`, searching
    /// over `subideals_of(K)`.
    pub fn weak_c_witness_in(&self, b: usize, k: usize, subideals_of_k: &[usize]) -> Option<usize> {
        if !self.contains(k, b) {
            return None;
        }
        self.first_witness(b, k, subideals_of_k)
    }

    /// Maximal subalgebras of the element `i` (its lower covers).
    pub fn lower_covers(&self, i: usize) -> Vec<usize> {
        let mut strict = self.below[i].clone();
        strict.set(i, false);
        let mut covered = FixedBitSet::with_capacity(self.len());
        for k in strict.ones() {
            let mut under = self.below[k].clone();
            under.set(k, false);
            covered.union_with(&under);
        }
        strict.difference(&covered).collect()
    }

    pub fn maximal_subalgebras(&self) -> Vec<usize> {
        if self.algebra.dim() == 0 {
            return Vec::new();
        }
        self.lower_covers(self.whole())
    }

    /// Frattini subalgebra of the element `i`: the intersection of its
    /// maximal subalgebras (the element itself is zero when it has none).
    pub fn frattini_of(&self, i: usize) -> Subspace {
        let covers = self.lower_covers(i);
        let mut acc = self.elements[i].clone();
        for c in covers {
            acc = acc.meet(&self.elements[c]);
        }
        acc
    }

    /// Nonzero ideals minimal under inclusion.
    pub fn minimal_ideals(&self) -> Vec<usize> {
        let ideals: Vec<usize> = self
            .ideal_indices()
            .into_iter()
            .filter(|&i| i != self.zero())
            .collect();
        ideals
            .iter()
            .copied()
            .filter(|&i| !ideals.iter().any(|&j| j != i && self.contains(i, j)))
            .collect()
    }

    pub fn maximal_nilpotent(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.nilpotent[i])
            .filter(|&i| !self.above(i).any(|j| j != i && self.nilpotent[j]))
            .collect()
    }

    pub fn cartan(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.nilpotent[i])
            .filter(|&i| self.algebra.normalizer(&self.elements[i]) == self.elements[i])
            .collect()
    }

    /// Number of subalgebras of each dimension.
    pub fn counts_by_dim(&self) -> Vec<usize> {
        let mut counts = vec![0; self.algebra.dim() + 1];
        for s in &self.elements {
            counts[s.dim()] += 1;
        }
        counts
    }
}
