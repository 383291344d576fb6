//! Executable checks of the weak c-ideal results over a corpus of algebras.
//!
//! Hard checks are statements proved over every field; a `fail` is a bug.
//! Observational checks are characteristic-zero statements evaluated over
//! finite fields and only ever report `observed-true` / `observed-false`.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{Built, CorpusEntry};
use crate::error::Error;
use crate::ideals::{
    find_c_witness, find_weak_c_witness, is_subideal_complement_mod_core, min_power_in,
    subideal_complement_mod_core, subideal_complement_with, verify_c, verify_weak_c,
    verify_weak_c_in, WeakCIdealCertificate,
};
use crate::lattice::Lattice;
use crate::liecore::{LieAlgebra, Quotient, SeriesKind};
use crate::linspace::{Budget, Subspace};
use crate::structure::{self, Tri};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Hard,
    Observational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Unsupported,
    ObservedTrue,
    ObservedFalse,
    /// The algebra could not be constructed.
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unsupported => "unsupported",
            Status::ObservedTrue => "observed-true",
            Status::ObservedFalse => "observed-false",
            Status::Error => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedSubspace {
    pub name: String,
    pub basis: Subspace,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub condition: String,
    pub subspaces: Vec<NamedSubspace>,
}

impl Witness {
    fn new(condition: impl Into<String>, subspaces: Vec<(String, Subspace)>) -> Self {
        Witness {
            condition: condition.into(),
            subspaces: subspaces
                .into_iter()
                .map(|(name, basis)| NamedSubspace { name, basis })
                .collect(),
        }
    }

    pub fn get(&self, name: &str) -> Option<&Subspace> {
        self.subspaces.iter().find(|s| s.name == name).map(|s| &s.basis)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub algebra: String,
    pub kind: CheckKind,
    pub status: Status,
    pub hypothesis_count: u64,
    pub detail: String,
    pub witness: Option<Witness>,
}

/// Every registered check with its kind, in report order.
pub const CHECKS: &[(&str, CheckKind)] = &[
    ("structure-flags", CheckKind::Hard),
    ("maximal-subalgebras-nilpotent", CheckKind::Hard),
    ("maximal-subalgebras-supersolvable", CheckKind::Hard),
    ("lemma-2.4-1", CheckKind::Hard),
    ("lemma-2.4-2", CheckKind::Hard),
    ("lemma-2.4-3", CheckKind::Hard),
    ("lemma-2.4-4", CheckKind::Hard),
    ("proposition-2.5", CheckKind::Hard),
    ("lemma-2.7", CheckKind::Hard),
    ("lemma-3.5", CheckKind::Hard),
    ("theorem-3.2-solvable-direction", CheckKind::Hard),
    ("corollary-3.3-forward", CheckKind::Hard),
    ("theorem-3.2", CheckKind::Observational),
    ("corollary-3.3", CheckKind::Observational),
    ("theorem-3.6", CheckKind::Observational),
    ("theorem-3.7", CheckKind::Observational),
    ("theorem-3.8", CheckKind::Observational),
    ("example-3.4", CheckKind::Hard),
    ("example-3.4-minimal-ideal", CheckKind::Observational),
    ("lemma-4.1", CheckKind::Hard),
    ("lemma-4.2", CheckKind::Hard),
    ("lemma-4.3", CheckKind::Hard),
    ("lemma-4.4", CheckKind::Hard),
    ("lemma-4.4-strong", CheckKind::Hard),
    ("theorem-4.5", CheckKind::Hard),
    ("corollary-4.6", CheckKind::Observational),
    ("corollary-4.7", CheckKind::Observational),
    ("lemma-5.1", CheckKind::Hard),
    ("theorem-5.2", CheckKind::Hard),
];

pub fn check_kind(check_id: &str) -> Option<CheckKind> {
    CHECKS.iter().find(|(id, _)| *id == check_id).map(|(_, k)| *k)
}

/// Outcome of one check before it is labelled with ids.
struct Outcome {
    status: Status,
    hyp: u64,
    detail: String,
    witness: Option<Witness>,
}

impl Outcome {
    fn pass(hyp: u64, detail: impl Into<String>) -> Self {
        Outcome {
            status: Status::Pass,
            hyp,
            detail: detail.into(),
            witness: None,
        }
    }

    fn fail(hyp: u64, witness: Witness) -> Self {
        Outcome {
            status: Status::Fail,
            hyp,
            detail: witness.condition.clone(),
            witness: Some(witness),
        }
    }

    fn unsupported(reason: impl Into<String>) -> Self {
        Outcome {
            status: Status::Unsupported,
            hyp: 0,
            detail: reason.into(),
            witness: None,
        }
    }

    fn observed(holds: bool, hyp: u64, detail: impl Into<String>, witness: Option<Witness>) -> Self {
        Outcome {
            status: if holds {
                Status::ObservedTrue
            } else {
                Status::ObservedFalse
            },
            hyp,
            detail: detail.into(),
            witness,
        }
    }

    fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }
}

/// Per-algebra state shared by the checks.
pub struct Subject<'a> {
    pub name: &'a str,
    pub built: &'a Built,
    pub budget: Budget,
    lattice: Result<Lattice, Error>,
}

impl<'a> Subject<'a> {
    pub fn new(name: &'a str, built: &'a Built, budget: Budget) -> Self {
        let lattice = Lattice::build(&built.algebra, &budget);
        Subject {
            name,
            built,
            budget,
            lattice,
        }
    }

    fn alg(&self) -> &LieAlgebra {
        &self.built.algebra
    }

    pub fn lattice(&self) -> Option<&Lattice> {
        self.lattice.as_ref().ok()
    }

    fn is_example34(&self) -> bool {
        ["A", "M", "SO1plus", "Um1"]
            .iter()
            .all(|k| self.built.subspaces.contains_key(*k))
    }
}

fn named(lat: &Lattice, items: &[(&str, usize)]) -> Vec<(String, Subspace)> {
    items
        .iter()
        .map(|(n, i)| (n.to_string(), lat.get(*i).clone()))
        .collect()
}

fn sub(name: &str, s: &Subspace) -> (String, Subspace) {
    (name.to_string(), s.clone())
}

/// Every maximal subalgebra of each maximal nilpotent subalgebra is a weak
/// c-ideal.
fn maxsub_of_maxnil_weak_c(lat: &Lattice) -> bool {
    lat.maximal_nilpotent()
        .into_iter()
        .all(|u| lat.lower_covers(u).into_iter().all(|b| lat.is_weak_c(b)))
}

fn minimal_abelian_ideals(lat: &Lattice) -> Vec<usize> {
    let alg = lat.algebra();
    lat.minimal_ideals()
        .into_iter()
        .filter(|&a| alg.is_abelian_space(lat.get(a)))
        .collect()
}

fn quotient_lattice(lat: &Lattice, ideal: usize, budget: &Budget) -> Result<(Quotient, Lattice), Error> {
    let q = lat.algebra().quotient(lat.get(ideal))?;
    let ql = Lattice::build(&q.algebra, budget)?;
    Ok((q, ql))
}

fn needs_lattice<'s>(s: &'s Subject) -> Result<&'s Lattice, Outcome> {
    match &s.lattice {
        Ok(l) => Ok(l),
        Err(e) => Err(Outcome::unsupported(e.to_string())),
    }
}

macro_rules! lattice_or_return {
    ($s:expr) => {
        match needs_lattice($s) {
            Ok(l) => l,
            Err(o) => return Some(o),
        }
    };
}

fn structure_flags(s: &Subject) -> Option<Outcome> {
    let f = structure::flags(s.alg(), &s.budget);
    let implies = |a: Tri, b: Tri| a != Tri::True || b != Tri::False;
    let mut bad = Vec::new();
    if !implies(f.nilpotent, f.solvable) {
        bad.push("nilpotent but not solvable");
    }
    if !implies(f.nilpotent, f.supersolvable) {
        bad.push("nilpotent but not supersolvable");
    }
    if !implies(f.supersolvable, f.solvable) {
        bad.push("supersolvable but not solvable");
    }
    if f.simple == Tri::True && f.solvable == Tri::True {
        bad.push("simple and solvable");
    }
    if f.almost_abelian == Tri::True && f.supersolvable == Tri::False {
        bad.push("almost abelian but not supersolvable");
    }
    let detail = serde_json::to_string(&f).expect("serializable");
    if bad.is_empty() {
        Some(Outcome::pass(1, detail))
    } else {
        Some(Outcome::fail(1, Witness::new(format!("{}: {detail}", bad.join(", ")), vec![])))
    }
}

fn barnes_nilpotent(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    if !s.alg().is_nilpotent() {
        return Some(Outcome::pass(0, "not nilpotent"));
    }
    let maxes = lat.maximal_subalgebras();
    for &m in &maxes {
        if !lat.is_ideal(m) {
            return Some(Outcome::fail(
                maxes.len() as u64,
                Witness::new("maximal subalgebra of a nilpotent algebra is not an ideal", named(lat, &[("M", m)])),
            ));
        }
    }
    Some(Outcome::pass(maxes.len() as u64, "every maximal subalgebra is an ideal"))
}

fn barnes_supersolvable(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let alg = s.alg();
    let ss = structure::is_supersolvable(alg, &s.budget);
    if !alg.is_solvable() {
        return Some(Outcome::pass(0, "not solvable"));
    }
    let maxes = lat.maximal_subalgebras();
    let all_codim_one = maxes.iter().all(|&m| lat.get(m).codim() == 1);
    match ss {
        Tri::Unsupported => Some(Outcome::unsupported("supersolvability undecided")),
        Tri::True | Tri::False if all_codim_one == (ss == Tri::True) => Some(Outcome::pass(
            1,
            format!("supersolvable = {}, all {} maximal subalgebras of codimension 1 = {all_codim_one}", ss == Tri::True, maxes.len()),
        )),
        _ => {
            let wit = maxes
                .iter()
                .find(|&&m| lat.get(m).codim() != 1)
                .map(|&m| named(lat, &[("M", m)]))
                .unwrap_or_default();
            Some(Outcome::fail(
                1,
                Witness::new(
                    format!("supersolvable = {} disagrees with codimension-1 maximal subalgebras", ss == Tri::True),
                    wit,
                ),
            ))
        }
    }
}

fn c_ideals_are_weak_c(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let alg = s.alg();
    let mut hyp = 0;
    for b in 0..lat.len() {
        let Some(c) = lat.c_witness(b) else { continue };
        hyp += 1;
        let ok = verify_c(alg, lat.get(b), lat.get(c))
            .map(|cert| WeakCIdealCertificate::from_c(alg, &cert).check(alg).is_ok())
            .unwrap_or(false);
        if !ok || !lat.is_weak_c(b) {
            return Some(Outcome::fail(
                hyp,
                Witness::new("c-ideal that is not a weak c-ideal", named(lat, &[("B", b), ("C", c)])),
            ));
        }
    }
    Some(Outcome::pass(hyp, format!("{hyp} c-ideals, each a weak c-ideal")))
}

fn weak_c_simple_iff_simple(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let alg = s.alg();
    if alg.dim() < 2 {
        return Some(Outcome::pass(
            0,
            "dimension below 2 is excluded: such algebras are weak c-simple but not simple",
        ));
    }
    let proper = (0..lat.len()).find(|&b| b != lat.zero() && b != lat.whole() && lat.is_weak_c(b));
    let weak_c_simple = proper.is_none();
    let simple = match structure::is_simple(alg, &s.budget) {
        Tri::Unsupported => return Some(Outcome::unsupported("simplicity undecided")),
        t => t == Tri::True,
    };
    let detail = format!("weak c-simple = {weak_c_simple}, simple = {simple}");
    if weak_c_simple == simple {
        return Some(Outcome::pass(1, detail));
    }
    let wit = if let Some(b) = proper {
        named(lat, &[("B", b), ("C", lat.weak_c_witness(b).expect("weak c"))])
    } else {
        let ideal = lat
            .ideal_indices()
            .into_iter()
            .find(|&i| i != lat.zero() && i != lat.whole())
            .unwrap_or(lat.whole());
        named(lat, &[("I", ideal)])
    };
    Some(Outcome::fail(1, Witness::new(detail, wit)))
}

fn weak_c_in_intermediate(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let alg = s.alg();
    let mut hyp = 0;
    for k in 0..lat.len() {
        let subideals_k = lat.subideals_of(k);
        let ks = lat.get(k);
        for b in lat.below(k) {
            let Some(c) = lat.weak_c_witness(b) else { continue };
            hyp += 1;
            let meet = lat.get(c).meet(ks);
            let constructed = verify_weak_c_in(alg, lat.get(b), &meet, ks).is_ok();
            let searched = lat.weak_c_witness_in(b, k, &subideals_k).is_some();
            if !constructed || !searched {
                let mut wit = named(lat, &[("B", b), ("K", k), ("C", c)]);
                wit.push(sub("C∩K", &meet));
                return Some(Outcome::fail(
                    hyp,
                    Witness::new("weak c-ideal of L that is not a weak c-ideal of K", wit),
                ));
            }
        }
    }
    Some(Outcome::pass(hyp, format!("{hyp} pairs B ≤ K with B a weak c-ideal of L")))
}

fn weak_c_in_quotients(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let mut hyp = 0;
    for i in lat.ideal_indices() {
        if i == lat.zero() {
            continue;
        }
        let (q, ql) = match quotient_lattice(lat, i, &s.budget) {
            Ok(x) => x,
            Err(e) => return Some(Outcome::unsupported(e.to_string())),
        };
        for b in lat.above(i) {
            hyp += 1;
            let qb = ql
                .index_of(&q.project_space(lat.get(b)))
                .expect("image of a subalgebra is a subalgebra");
            if lat.is_weak_c(b) != ql.is_weak_c(qb) {
                return Some(Outcome::fail(
                    hyp,
                    Witness::new(
                        format!(
                            "B weak c-ideal of L = {}, B/I weak c-ideal of L/I = {}",
                            lat.is_weak_c(b),
                            ql.is_weak_c(qb)
                        ),
                        named(lat, &[("I", i), ("B", b)]),
                    ),
                ));
            }
        }
    }
    Some(Outcome::pass(hyp, format!("{hyp} pairs I ≤ B with I a nonzero ideal")))
}

fn weak_c_under_frattini(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let alg = s.alg();
    let (_, phi) = structure::frattini(lat);
    let mut hyp = 0;
    for c in 0..lat.len() {
        let fc = lat.frattini_of(c);
        for b in lat.below(c) {
            if b == lat.zero() || !lat.is_weak_c(b) || !lat.get(b).le(&fc) {
                continue;
            }
            hyp += 1;
            if !lat.is_ideal(b) || !lat.get(b).le(&phi) {
                let mut wit = named(lat, &[("B", b), ("C", c)]);
                wit.push(sub("F(C)", &fc));
                wit.push(sub("phi(L)", &phi));
                return Some(Outcome::fail(
                    hyp,
                    Witness::new("weak c-ideal inside F(C) that is not an ideal inside phi(L)", wit),
                ));
            }
        }
    }
    let _ = alg;
    Some(Outcome::pass(hyp, format!("{hyp} pairs with 0 ≠ B ≤ F(C), B a weak c-ideal")))
}

fn complement_modulo_core(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let alg = s.alg();
    let mut quotients: HashMap<usize, (Quotient, Lattice)> = HashMap::new();
    let mut positive = 0;
    for b in 0..lat.len() {
        let core = lat.core(b);
        if let std::collections::hash_map::Entry::Vacant(e) = quotients.entry(core) {
            match quotient_lattice(lat, core, &s.budget) {
                Ok(x) => {
                    e.insert(x);
                }
                Err(err) => return Some(Outcome::unsupported(err.to_string())),
            }
        }
        let (q, ql) = &quotients[&core];
        let k = subideal_complement_with(q, ql, lat.get(b));
        let agrees = k.is_some() == lat.is_weak_c(b);
        let certified = k.as_ref().is_none_or(|k| {
            is_subideal_complement_mod_core(alg, lat.get(b), k) && verify_weak_c(alg, lat.get(b), k).is_ok()
        });
        if !agrees || !certified {
            let mut wit = named(lat, &[("B", b)]);
            if let Some(k) = &k {
                wit.push(sub("K", k));
            }
            return Some(Outcome::fail(
                lat.len() as u64,
                Witness::new(
                    format!(
                        "weak c-ideal = {}, subideal complement modulo the core = {}",
                        lat.is_weak_c(b),
                        k.is_some()
                    ),
                    wit,
                ),
            ));
        }
        positive += usize::from(k.is_some());
    }
    Some(Outcome::pass(
        lat.len() as u64,
        format!("{} subalgebras, {positive} with a complement modulo the core", lat.len()),
    ))
}

fn sum_decomposition_powers(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let alg = s.alg();
    let whole = alg.whole();
    let subideals = lat.subideal_indices();
    let mut hyp = 0;
    let mut worst = 0;
    for u in (0..lat.len()).filter(|&u| lat.is_solvable(u)) {
        for &c in &subideals {
            if lat.get(u).join(lat.get(c)) != whole {
                continue;
            }
            hyp += 1;
            match min_power_in(alg, lat.get(c), SeriesKind::Derived) {
                Some(n0) => worst = worst.max(n0),
                None => {
                    return Some(Outcome::fail(
                        hyp,
                        Witness::new("no derived power of L lies in C", named(lat, &[("U", u), ("C", c)])),
                    ))
                }
            }
        }
    }
    Some(Outcome::pass(hyp, format!("{hyp} pairs L = U + C, largest n0 = {worst}")))
}

fn solvable_direction(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let alg = s.alg();
    let maxes = lat.maximal_subalgebras();
    let mut hyp = 0;
    for b in lat.ideal_indices() {
        if !lat.is_solvable(b) {
            continue;
        }
        let series = alg.series_of(lat.get(b), SeriesKind::Derived);
        for &m in &maxes {
            let ms = lat.get(m);
            if lat.get(b).le(ms) {
                continue;
            }
            hyp += 1;
            let t = series
                .terms
                .iter()
                .position(|term| term.le(ms))
                .expect("solvable series reaches zero");
            let c = &series.terms[t - 1];
            if verify_c(alg, ms, c).is_err() || !lat.is_c_ideal(m) || !lat.is_weak_c(m) {
                let mut wit = named(lat, &[("B", b), ("M", m)]);
                wit.push(sub("C", c));
                return Some(Outcome::fail(
                    hyp,
                    Witness::new("maximal subalgebra not containing a solvable ideal is not a c-ideal", wit),
                ));
            }
        }
    }
    Some(Outcome::pass(hyp, format!("{hyp} pairs (solvable ideal B, maximal M ⊉ B), each certified by a derived term of B")))
}

fn solvable_maximals_weak_c(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    if !s.alg().is_solvable() {
        return Some(Outcome::pass(0, "not solvable"));
    }
    let maxes = lat.maximal_subalgebras();
    for &m in &maxes {
        if !lat.is_weak_c(m) {
            return Some(Outcome::fail(
                maxes.len() as u64,
                Witness::new("maximal subalgebra of a solvable algebra is not a weak c-ideal", named(lat, &[("M", m)])),
            ));
        }
    }
    Some(Outcome::pass(maxes.len() as u64, format!("all {} maximal subalgebras are weak c-ideals", maxes.len())))
}

fn observe_solvable_ideals(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let maxes = lat.maximal_subalgebras();
    let ideals = lat.ideal_indices();
    for &b in &ideals {
        let bad_m = maxes
            .iter()
            .copied()
            .find(|&m| !lat.get(b).le(lat.get(m)) && !lat.is_weak_c(m));
        if lat.is_solvable(b) != bad_m.is_none() {
            let mut items = vec![("B", b)];
            items.extend(bad_m.map(|m| ("M", m)));
            return Some(Outcome::observed(
                false,
                ideals.len() as u64,
                format!("ideal with solvable = {} disagrees", lat.is_solvable(b)),
                Some(Witness::new("statement fails for this ideal", named(lat, &items))),
            ));
        }
    }
    Some(Outcome::observed(true, ideals.len() as u64, format!("{} ideals", ideals.len()), None))
}

fn observe_maximals_weak_c(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let bad = lat.maximal_subalgebras().into_iter().find(|&m| !lat.is_weak_c(m));
    let solvable = s.alg().is_solvable();
    let holds = solvable == bad.is_none();
    Some(Outcome::observed(
        holds,
        1,
        format!("solvable = {solvable}, every maximal subalgebra weak c = {}", bad.is_none()),
        bad.filter(|_| !holds)
            .map(|m| Witness::new("maximal subalgebra that is not a weak c-ideal", named(lat, &[("M", m)]))),
    ))
}

fn observe_solvable_maximal_weak_c(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let found = lat
        .maximal_subalgebras()
        .into_iter()
        .find(|&m| lat.is_solvable(m) && lat.is_weak_c(m));
    let solvable = s.alg().is_solvable();
    let holds = found.is_some() == solvable;
    Some(Outcome::observed(
        holds,
        1,
        format!("solvable = {solvable}, solvable maximal weak c-ideal exists = {}", found.is_some()),
        found
            .filter(|_| !holds)
            .map(|m| Witness::new("solvable maximal weak c-ideal of a non-solvable algebra", named(lat, &[("M", m)]))),
    ))
}

fn implication_observation(
    lat: &Lattice,
    hypothesis: bool,
    conclusion: bool,
    what: &str,
    members: &[usize],
) -> Outcome {
    let holds = !hypothesis || conclusion;
    let witness = (!holds).then(|| {
        Witness::new(
            format!("{what}, conclusion fails"),
            members
                .iter()
                .enumerate()
                .map(|(k, &i)| (format!("H{}", k + 1), lat.get(i).clone()))
                .collect(),
        )
    });
    Outcome::observed(
        holds,
        u64::from(hypothesis),
        format!("hypothesis = {hypothesis}, conclusion = {conclusion}"),
        witness,
    )
}

fn observe_maximal_nilpotent_weak_c(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let maxnil = lat.maximal_nilpotent();
    let hyp = maxnil.iter().all(|&u| lat.is_weak_c(u));
    Some(implication_observation(
        lat,
        hyp,
        s.alg().is_solvable(),
        "all maximal nilpotent subalgebras are weak c-ideals",
        &maxnil,
    ))
}

fn observe_cartan_weak_c(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let cartan = lat.cartan();
    let hyp = cartan.iter().all(|&h| lat.is_weak_c(h));
    Some(implication_observation(
        lat,
        hyp,
        s.alg().is_solvable(),
        "all Cartan subalgebras are weak c-ideals",
        &cartan,
    ))
}

/// Field-independent facts of the characteristic-p example.
pub fn example34_facts(built: &Built) -> Vec<(String, bool)> {
    let alg = &built.algebra;
    let a = &built.subspaces["A"];
    let m = &built.subspaces["M"];
    let plus = &built.subspaces["SO1plus"];
    let line = &built.subspaces["Um1"];
    let whole = alg.whole();
    let core_m = crate::ideals::core_in(alg, m, &whole);
    let p = alg.field().characteristic() as usize;
    let maximal = m.codim() > 0 && maximal_by_lines(alg, m);
    vec![
        ("Jacobi identity holds".into(), jacobi_ok(alg)),
        (format!("dim L = 3p+1 = {}", 3 * p + 1), alg.dim() == 3 * p + 1),
        (format!("A is an ideal of dim 3p = {}", 3 * p), alg.is_ideal(a) && a.dim() == 3 * p),
        ("[L, A] = A".into(), alg.product_space(&whole, a) == *a),
        (
            format!("M is a subalgebra of dim 2p+1 = {}", 2 * p + 1),
            alg.is_subalgebra(m) && m.dim() == 2 * p + 1,
        ),
        ("M does not contain A".into(), !a.le(m)),
        ("core(M) = 0".into(), core_m.is_zero()),
        ("M is a maximal subalgebra".into(), maximal),
        (
            format!("dim S⊗O1+ = 3(p-1) = {}", 3 * (p - 1)),
            plus.dim() == 3 * (p - 1),
        ),
        ("u_-1⊗1 ∉ S⊗O1+ + M".into(), !line.le(&plus.join(m))),
    ]
}

fn jacobi_ok(alg: &LieAlgebra) -> bool {
    let n = alg.dim();
    (0..n).all(|i| {
        (i + 1..n).all(|j| (j + 1..n).all(|k| crate::linspace::is_zero_vector(&alg.jacobi_residual(i, j, k))))
    })
}

/// `M` is maximal iff adjoining any vector outside it generates `L`; it
/// suffices to try one representative per line of `L / M`.
fn maximal_by_lines(alg: &LieAlgebra, m: &Subspace) -> bool {
    let q = crate::linspace::quotient_coordinates(m);
    let k = q.quotient_dim();
    let Some(order) = alg.field().order() else {
        return false;
    };
    let elems: Vec<_> = alg.field().elements().expect("finite").collect();
    let whole = alg.whole();
    for lead in 0..k {
        let total = (order as usize).pow((k - lead - 1) as u32);
        for mut idx in 0..total {
            let mut w = vec![alg.field().zero(); k];
            w[lead] = alg.field().one();
            for slot in w.iter_mut().skip(lead + 1) {
                *slot = elems[idx % order as usize].clone();
                idx /= order as usize;
            }
            let v = q.lift(&w);
            if alg.subalgebra_closure(&m.extend([v])) != whole {
                return false;
            }
        }
    }
    true
}

fn char_p_example(s: &Subject) -> Option<Outcome> {
    if !s.is_example34() {
        return None;
    }
    let facts = example34_facts(s.built);
    let detail = facts
        .iter()
        .map(|(f, ok)| format!("{f}: {}", if *ok { "yes" } else { "NO" }))
        .collect::<Vec<_>>()
        .join("; ");
    let wit = ["A", "M", "SO1plus", "Um1"]
        .iter()
        .map(|k| sub(k, &s.built.subspaces[*k]))
        .collect();
    if facts.iter().all(|(_, ok)| *ok) {
        Some(Outcome::pass(facts.len() as u64, detail).with_witness(Witness::new("distinguished subspaces", wit)))
    } else {
        Some(Outcome::fail(facts.len() as u64, Witness::new(detail, wit)))
    }
}

fn char_p_example_minimal_ideal(s: &Subject) -> Option<Outcome> {
    if !s.is_example34() {
        return None;
    }
    let a = &s.built.subspaces["A"];
    match structure::minimal_ideals(s.alg(), &s.budget) {
        Ok(mins) => {
            let unique = mins.len() == 1 && mins[0] == *a;
            let wit = mins
                .iter()
                .enumerate()
                .map(|(k, m)| (format!("N{}", k + 1), m.clone()))
                .collect();
            Some(Outcome::observed(
                unique,
                1,
                format!("{} minimal ideal(s); A is the unique one = {unique}", mins.len()),
                Some(Witness::new("minimal ideals found by spinning", wit)),
            ))
        }
        Err(e) => Some(Outcome::unsupported(e.to_string())),
    }
}

fn maximal_nilpotent_modulo_ideal(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let maxnil = lat.maximal_nilpotent();
    let mut hyp = 0;
    for a in lat.ideal_indices() {
        if a == lat.zero() {
            continue;
        }
        let (q, ql) = match quotient_lattice(lat, a, &s.budget) {
            Ok(x) => x,
            Err(e) => return Some(Outcome::unsupported(e.to_string())),
        };
        for u_bar in ql.maximal_nilpotent() {
            hyp += 1;
            let u = q.preimage(ql.get(u_bar));
            let found = maxnil.iter().any(|&c| lat.get(c).join(lat.get(a)) == u);
            if !found {
                let mut wit = named(lat, &[("A", a)]);
                wit.push(sub("U", &u));
                return Some(Outcome::fail(
                    hyp,
                    Witness::new("U/A maximal nilpotent but U ≠ C + A for every maximal nilpotent C", wit),
                ));
            }
        }
    }
    Some(Outcome::pass(hyp, format!("{hyp} pairs (nonzero ideal A, maximal nilpotent U/A)")))
}

fn subideal_sum_powers(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let alg = s.alg();
    let whole = alg.whole();
    let subideals = lat.subideal_indices();
    let mins = lat.minimal_ideals();
    let mut hyp = 0;
    let mut power_fails = 0;
    let mut minimal_fails = 0;
    let mut first_power = None;
    let mut first_minimal = None;
    for b in (0..lat.len()).filter(|&b| lat.is_nilpotent(b)) {
        for &k in &subideals {
            if lat.get(b).join(lat.get(k)) != whole {
                continue;
            }
            hyp += 1;
            if min_power_in(alg, lat.get(k), SeriesKind::LowerCentral).is_none() {
                power_fails += 1;
                first_power.get_or_insert((b, k));
            }
            for &a in &mins {
                if !lat.contains(k, a) && !alg.product_space(&whole, lat.get(a)).is_zero() {
                    minimal_fails += 1;
                    first_minimal.get_or_insert((b, k, a));
                }
            }
        }
    }
    let detail = format!(
        "{hyp} pairs L = B + K; no L^s inside K: {power_fails}; minimal ideal neither inside K nor central: {minimal_fails}"
    );
    if let Some((b, k, a)) = first_minimal {
        return Some(Outcome::fail(
            hyp,
            Witness::new(
                format!("{detail}; shown: minimal ideal neither inside K nor central"),
                named(lat, &[("B", b), ("K", k), ("A", a)]),
            ),
        ));
    }
    if let Some((b, k)) = first_power {
        return Some(Outcome::fail(
            hyp,
            Witness::new(format!("{detail}; shown: no power L^s lies in K"), named(lat, &[("B", b), ("K", k)])),
        ));
    }
    Some(Outcome::pass(hyp, detail))
}

fn minimal_abelian_ideals_are_lines(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    if !maxsub_of_maxnil_weak_c(lat) {
        return Some(Outcome::pass(0, "hypothesis fails for L"));
    }
    let mut hyp = 0;
    for a in minimal_abelian_ideals(lat) {
        hyp += 1;
        let (_, ql) = match quotient_lattice(lat, a, &s.budget) {
            Ok(x) => x,
            Err(e) => return Some(Outcome::unsupported(e.to_string())),
        };
        if !maxsub_of_maxnil_weak_c(&ql) {
            return Some(Outcome::fail(
                hyp,
                Witness::new("hypothesis does not pass to L/A", named(lat, &[("A", a)])),
            ));
        }
    }
    Some(Outcome::pass(hyp, format!("{hyp} minimal abelian ideals")))
}

/// `hypothesis` is the property required of `L`; every minimal abelian
/// ideal must be a line as soon as a core-free maximal subalgebra exists.
fn minimal_abelian_is_line(lat: &Lattice, hypothesis: bool) -> Outcome {
    if !hypothesis {
        return Outcome::pass(0, "hypothesis fails for L");
    }
    let core_free: Vec<usize> = lat
        .maximal_subalgebras()
        .into_iter()
        .filter(|&m| lat.core(m) == lat.zero())
        .collect();
    let mut hyp = 0;
    for a in minimal_abelian_ideals(lat) {
        for &m in &core_free {
            hyp += 1;
            if lat.get(a).dim() != 1 {
                return Outcome::fail(
                    hyp,
                    Witness::new("minimal abelian ideal of dimension > 1", named(lat, &[("A", a), ("M", m)])),
                );
            }
        }
    }
    Outcome::pass(hyp, format!("{hyp} pairs (minimal abelian ideal, core-free maximal subalgebra)"))
}

fn core_free_maximal_lines(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let hyp = lat.maximal_nilpotent().into_iter().all(|u| lat.is_weak_c(u));
    Some(minimal_abelian_is_line(lat, hyp))
}

/// The same conclusion under the hypothesis of the neighbouring results:
/// every maximal subalgebra of each maximal nilpotent subalgebra is a weak
/// c-ideal.
fn core_free_maximal_lines_strong(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    Some(minimal_abelian_is_line(lat, maxsub_of_maxnil_weak_c(lat)))
}

fn supersolvable_from_maximal_nilpotent(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let alg = s.alg();
    if !alg.is_solvable() || !maxsub_of_maxnil_weak_c(lat) {
        return Some(Outcome::pass(0, "hypothesis fails"));
    }
    match structure::is_supersolvable(alg, &s.budget) {
        Tri::True => Some(Outcome::pass(1, "supersolvable")),
        Tri::False => Some(Outcome::fail(
            1,
            Witness::new("solvable, hypothesis holds, not supersolvable", vec![sub("L", &alg.whole())]),
        )),
        Tri::Unsupported => Some(Outcome::unsupported("supersolvability undecided")),
    }
}

fn observe_supersolvable_maximal_nilpotent(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let maxnil = lat.maximal_nilpotent();
    let big = maxnil.iter().all(|&u| lat.get(u).dim() >= 2);
    let hyp = big && maxsub_of_maxnil_weak_c(lat);
    let ss = structure::is_supersolvable(s.alg(), &s.budget);
    if hyp && ss == Tri::Unsupported {
        return Some(Outcome::unsupported("supersolvability undecided"));
    }
    Some(implication_observation(lat, hyp, ss == Tri::True, "hypothesis holds", &maxnil))
}

fn observe_supersolvable_cartan(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let alg = s.alg();
    let hyp = maxsub_of_maxnil_weak_c(lat);
    let ss = structure::is_supersolvable(alg, &s.budget);
    let simple3 = alg.dim() == 3 && structure::is_simple(alg, &s.budget) == Tri::True;
    if hyp && ss == Tri::Unsupported {
        return Some(Outcome::unsupported("supersolvability undecided"));
    }
    Some(implication_observation(
        lat,
        hyp,
        ss == Tri::True || simple3,
        "hypothesis holds",
        &lat.maximal_nilpotent(),
    ))
}

fn lines_weak_c_iff_c(s: &Subject) -> Option<Outcome> {
    let lat = lattice_or_return!(s);
    let mut hyp = 0;
    let mut table = Vec::new();
    for b in (0..lat.len()).filter(|&b| lat.get(b).dim() == 1) {
        hyp += 1;
        let weak = lat.weak_c_witness(b);
        let c = lat.c_witness(b);
        if weak.is_some() != c.is_some() {
            let mut items = vec![("B", b)];
            items.extend(weak.map(|w| ("C", w)));
            return Some(Outcome::fail(
                hyp,
                Witness::new("line that is a weak c-ideal but not a c-ideal", named(lat, &items)),
            ));
        }
        table.push(sub(&format!("B{hyp}"), lat.get(b)));
        match c {
            Some(c) => table.push(sub(&format!("C{hyp}"), lat.get(c))),
            None => table.push(sub(&format!("C{hyp} (none)"), &s.alg().zero_space())),
        }
    }
    let weak_lines = table.len() / 2;
    Some(
        Outcome::pass(hyp, format!("{weak_lines} lines, weak c-ideal iff c-ideal on each"))
            .with_witness(Witness::new("per-line c-ideal witnesses", table)),
    )
}

fn one_dim_classification(s: &Subject) -> Option<Outcome> {
    let alg = s.alg();
    let verdict = structure::one_dim_verdict(alg);
    let mut wit = Vec::new();
    if let structure::OneDimVerdict::CaseII {
        abelian,
        almost_abelian,
    } = &verdict
    {
        wit.push(sub("A", abelian));
        wit.push(sub("B", almost_abelian));
        let valid = alg.is_ideal(abelian)
            && alg.is_abelian_space(abelian)
            && alg.is_ideal(almost_abelian)
            && structure::is_almost_abelian_space(alg, almost_abelian)
            && abelian.meet(almost_abelian).is_zero()
            && abelian.join(almost_abelian).is_full();
        if !valid {
            return Some(Outcome::fail(1, Witness::new("invalid decomposition L = A ⊕ B", wit)));
        }
    }
    let verdict_text = match &verdict {
        structure::OneDimVerdict::CaseI => "case (i): L^3 = 0",
        structure::OneDimVerdict::CaseII { .. } => "case (ii): L = A ⊕ B",
        structure::OneDimVerdict::Neither => "neither case",
    };
    let lat = match needs_lattice(s) {
        Ok(l) => l,
        Err(_) => {
            return Some(Outcome::unsupported(format!(
                "{verdict_text}; exhaustive line scan unavailable"
            )))
        }
    };
    let lines: Vec<usize> = (0..lat.len()).filter(|&b| lat.get(b).dim() == 1).collect();
    let bad = lines.iter().copied().find(|&b| !lat.is_weak_c(b));
    if let Some(b) = bad {
        wit.push(sub("non-witness line", lat.get(b)));
    }
    let detail = format!(
        "{verdict_text}; all {} lines weak c-ideals = {}",
        lines.len(),
        bad.is_none()
    );
    if verdict.is_positive() == bad.is_none() {
        let mut o = Outcome::pass(lines.len() as u64, detail);
        if !wit.is_empty() {
            o = o.with_witness(Witness::new(verdict_text, wit));
        }
        Some(o)
    } else {
        Some(Outcome::fail(lines.len() as u64, Witness::new(detail, wit)))
    }
}

fn dispatch(check_id: &str, s: &Subject) -> Option<Outcome> {
    match check_id {
        "structure-flags" => structure_flags(s),
        "maximal-subalgebras-nilpotent" => barnes_nilpotent(s),
        "maximal-subalgebras-supersolvable" => barnes_supersolvable(s),
        "lemma-2.4-1" => c_ideals_are_weak_c(s),
        "lemma-2.4-2" => weak_c_simple_iff_simple(s),
        "lemma-2.4-3" => weak_c_in_intermediate(s),
        "lemma-2.4-4" => weak_c_in_quotients(s),
        "proposition-2.5" => weak_c_under_frattini(s),
        "lemma-2.7" => complement_modulo_core(s),
        "lemma-3.5" => sum_decomposition_powers(s),
        "theorem-3.2-solvable-direction" => solvable_direction(s),
        "corollary-3.3-forward" => solvable_maximals_weak_c(s),
        "theorem-3.2" => observe_solvable_ideals(s),
        "corollary-3.3" => observe_maximals_weak_c(s),
        "theorem-3.6" => observe_solvable_maximal_weak_c(s),
        "theorem-3.7" => observe_maximal_nilpotent_weak_c(s),
        "theorem-3.8" => observe_cartan_weak_c(s),
        "example-3.4" => char_p_example(s),
        "example-3.4-minimal-ideal" => char_p_example_minimal_ideal(s),
        "lemma-4.1" => maximal_nilpotent_modulo_ideal(s),
        "lemma-4.2" => subideal_sum_powers(s),
        "lemma-4.3" => minimal_abelian_ideals_are_lines(s),
        "lemma-4.4" => core_free_maximal_lines(s),
        "lemma-4.4-strong" => core_free_maximal_lines_strong(s),
        "theorem-4.5" => supersolvable_from_maximal_nilpotent(s),
        "corollary-4.6" => observe_supersolvable_maximal_nilpotent(s),
        "corollary-4.7" => observe_supersolvable_cartan(s),
        "lemma-5.1" => lines_weak_c_iff_c(s),
        "theorem-5.2" => one_dim_classification(s),
        _ => None,
    }
}

/// Run one registered check; `None` when it does not apply to the algebra
/// (the example34 checks need its distinguished subspaces) or the id is
/// unknown.
pub fn run_check(check_id: &str, subject: &Subject) -> Option<CheckResult> {
    let kind = check_kind(check_id)?;
    let mut o = dispatch(check_id, subject)?;
    if kind == CheckKind::Observational && o.status == Status::Fail {
        o.status = Status::ObservedFalse;
    }
    Some(CheckResult {
        check_id: check_id.to_string(),
        algebra: subject.name.to_string(),
        kind,
        status: o.status,
        hypothesis_count: o.hyp,
        detail: o.detail,
        witness: o.witness,
    })
}

/// All applicable checks on one corpus entry, in registry order.
pub fn run_entry(entry: &CorpusEntry, budget: Budget) -> Vec<CheckResult> {
    let built = match entry.build() {
        Ok(b) => b,
        Err(e) => {
            return vec![CheckResult {
                check_id: "construction".into(),
                algebra: entry.id.clone(),
                kind: CheckKind::Hard,
                status: Status::Error,
                hypothesis_count: 0,
                detail: e.to_string(),
                witness: None,
            }]
        }
    };
    let subject = Subject::new(&entry.id, &built, budget);
    CHECKS
        .par_iter()
        .filter_map(|(id, _)| run_check(id, &subject))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Report {
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn count(&self, status: Status) -> usize {
        self.results.iter().filter(|r| r.status == status).count()
    }

    /// Any `fail` or construction `error` row.
    pub fn has_failures(&self) -> bool {
        self.results
            .iter()
            .any(|r| matches!(r.status, Status::Fail | Status::Error))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report")
    }

    pub fn to_text(&self) -> String {
        let w_id = self.results.iter().map(|r| r.check_id.len()).max().unwrap_or(8).max(8);
        let w_alg = self
            .results
            .iter()
            .map(|r| r.algebra.chars().count())
            .max()
            .unwrap_or(7)
            .max(7);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<w_id$}  {:<w_alg$}  {:<14}  {:>6}  detail",
            "check", "algebra", "status", "hyp"
        );
        for r in &self.results {
            let pad = w_alg - r.algebra.chars().count();
            let _ = writeln!(
                out,
                "{:<w_id$}  {}{}  {:<14}  {:>6}  {}",
                r.check_id,
                r.algebra,
                " ".repeat(pad),
                r.status.as_str(),
                r.hypothesis_count,
                r.detail
            );
        }
        let _ = writeln!(
            out,
            "\n{} rows: {} pass, {} fail, {} unsupported, {} observed-true, {} observed-false, {} error",
            self.results.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Unsupported),
            self.count(Status::ObservedTrue),
            self.count(Status::ObservedFalse),
            self.count(Status::Error),
        );
        out
    }
}

pub fn run_suite(corpus: &[CorpusEntry], budget: Budget) -> Report {
    let results = corpus
        .par_iter()
        .map(|e| run_entry(e, budget))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Report { results }
}

/// Re-derive the violation recorded in a `fail` row from its witness alone,
/// using the direct (non-lattice) library operations. `Some(true)` means
/// the violation reproduces; `None` means the check has no replayable
/// payload.
pub fn recheck(result: &CheckResult, alg: &LieAlgebra, budget: &Budget) -> Option<bool> {
    let w = result.witness.as_ref()?;
    let get = |n: &str| w.get(n);
    let whole = alg.whole();
    let weak = |b: &Subspace| find_weak_c_witness(alg, b, budget).ok().map(|c| c.is_some());
    match result.check_id.as_str() {
        "lemma-2.4-1" => {
            let (b, c) = (get("B")?, get("C")?);
            let is_c = verify_c(alg, b, c).is_ok();
            Some(is_c && !weak(b)?)
        }
        "lemma-2.4-3" => {
            let (b, k) = (get("B")?, get("K")?);
            let lat = Lattice::build(alg, budget).ok()?;
            let (bi, ki) = (lat.index_of(b)?, lat.index_of(k)?);
            let subs = lat.subideals_of(ki);
            Some(weak(b)? && lat.weak_c_witness_in(bi, ki, &subs).is_none())
        }
        "lemma-2.4-4" => {
            let (i, b) = (get("I")?, get("B")?);
            let q = alg.quotient(i).ok()?;
            let qb = q.project_space(b);
            let in_quotient = find_weak_c_witness(&q.algebra, &qb, budget).ok()?.is_some();
            Some(weak(b)? != in_quotient)
        }
        "proposition-2.5" => {
            let (b, fc, phi) = (get("B")?, get("F(C)")?, get("phi(L)")?);
            Some(b.le(fc) && weak(b)? && !(alg.is_ideal(b) && b.le(phi)))
        }
        "lemma-2.7" => {
            let b = get("B")?;
            let k = subideal_complement_mod_core(alg, b, budget).ok()?;
            Some(weak(b)? != k.is_some())
        }
        "lemma-3.5" => {
            let (u, c) = (get("U")?, get("C")?);
            let solvable = alg.is_solvable_space(u);
            let chain = crate::ideals::subideal_chain(alg, c).ok()?.is_some();
            Some(solvable && chain && u.join(c) == whole && min_power_in(alg, c, SeriesKind::Derived).is_none())
        }
        "lemma-4.2" => {
            let (b, k) = (get("B")?, get("K")?);
            let chain = crate::ideals::subideal_chain(alg, k).ok()?.is_some();
            let hyp = alg.is_nilpotent_space(b) && chain && b.join(k) == whole;
            let violated = match get("A") {
                Some(a) => {
                    structure::minimal_ideals(alg, budget).ok()?.contains(a)
                        && !a.le(k)
                        && !alg.product_space(&whole, a).is_zero()
                }
                None => min_power_in(alg, k, SeriesKind::LowerCentral).is_none(),
            };
            Some(hyp && violated)
        }
        "lemma-4.4" => {
            let (a, m) = (get("A")?, get("M")?);
            let lat = Lattice::build(alg, budget).ok()?;
            let maxnil = lat.maximal_nilpotent();
            let hyp = maxnil.iter().all(|&u| weak(lat.get(u)) == Some(true));
            let core_free = crate::ideals::core_in(alg, m, &whole).is_zero()
                && lat.maximal_subalgebras().iter().any(|&i| lat.get(i) == m);
            let minimal_abelian =
                alg.is_abelian_space(a) && structure::minimal_ideals(alg, budget).ok()?.contains(a);
            Some(hyp && core_free && minimal_abelian && a.dim() > 1)
        }
        "lemma-5.1" => {
            let b = get("B")?;
            let c = find_c_witness(alg, b, budget).ok()?.is_some();
            Some(b.dim() == 1 && weak(b)? != c)
        }
        "corollary-3.3-forward" => {
            let m = get("M")?;
            Some(alg.is_solvable() && !weak(m)?)
        }
        "theorem-3.2-solvable-direction" => {
            let m = get("M")?;
            Some(find_c_witness(alg, m, budget).ok()?.is_none())
        }
        _ => None,
    }
}
