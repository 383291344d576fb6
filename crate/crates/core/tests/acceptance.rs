//! Acceptance run: one line per criterion with its verdict and timing.
//! Runs without the libtest harness so the lines always reach the output.

mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::{gaussian, rank_mod_p, Mask, Oracle};
use weakc_core::corpus::{default_corpus, Built, CorpusEntry, Preset};
use weakc_core::dsl;
use weakc_core::ideals::{core, subideal_chain};
use weakc_core::linspace::enumerate_subspaces;
use weakc_core::verify::{recheck, run_check, run_suite, CheckResult, Status, Subject};
use weakc_core::{Budget, Field, Lattice, LieAlgebra};

enum Verdict {
    Pass(String),
    Fail(String),
    /// The criterion cannot hold because the statement it tests is false;
    /// every counterexample was re-verified independently.
    Refuted(String),
}

fn gf(p: u64) -> Field {
    Field::prime(p).unwrap()
}

fn built_corpus() -> Vec<(CorpusEntry, Built)> {
    default_corpus()
        .into_iter()
        .map(|e| {
            let b = e.build().expect("corpus entry builds");
            (e, b)
        })
        .collect()
}

fn rows_for(entry: &CorpusEntry, built: &Built, ids: &[&str]) -> Vec<CheckResult> {
    let subject = Subject::new(&entry.id, built, Budget::default());
    ids.iter().filter_map(|id| run_check(id, &subject)).collect()
}

fn fits_oracle(alg: &LieAlgebra) -> bool {
    alg.field()
        .order()
        .is_some_and(|q| (q as u128).pow(alg.dim() as u32) <= 128)
}

fn criterion_1() -> Verdict {
    let mut notes = Vec::new();
    for (p, max_n) in [(2u64, 5usize), (3, 4)] {
        for n in 0..=max_n {
            let lib: u128 = enumerate_subspaces(gf(p), n, None, &Budget::default())
                .unwrap()
                .count() as u128;
            let formula: u128 = (0..=n as u32).map(|k| gaussian(n as u32, k, p as u128)).sum();
            let brute = Oracle::space(p as usize, n).all_subspaces().len() as u128;
            if lib != formula || lib != brute {
                return Verdict::Fail(format!("GF({p})^{n}: library {lib}, formula {formula}, brute force {brute}"));
            }
            for k in 0..=n {
                let by_dim = enumerate_subspaces(gf(p), n, Some(k), &Budget::default())
                    .unwrap()
                    .count() as u128;
                if by_dim != gaussian(n as u32, k as u32, p as u128) {
                    return Verdict::Fail(format!("GF({p})^{n}, dim {k}: {by_dim}"));
                }
            }
            notes.push(format!("GF({p})^{n}={lib}"));
        }
    }
    let n3 = enumerate_subspaces(gf(2), 3, None, &Budget::default()).unwrap().count();
    let n4 = enumerate_subspaces(gf(2), 4, None, &Budget::default()).unwrap().count();
    if (n3, n4) != (16, 67) {
        return Verdict::Fail(format!("GF(2): n=3 gives {n3}, n=4 gives {n4}"));
    }
    Verdict::Pass(notes.join(" "))
}

fn criterion_2() -> Verdict {
    let mut checked = 0;
    let mut algebras = 0;
    for (entry, built) in built_corpus() {
        let alg = &built.algebra;
        if alg.field() != gf(2) || alg.dim() > 4 {
            continue;
        }
        algebras += 1;
        let oracle = Oracle::new(alg);
        let subs = oracle.subalgebras();
        let lat = Lattice::build(alg, &Budget::default()).unwrap();
        if lat.len() != subs.len() {
            return Verdict::Fail(format!("{}: {} subalgebras, oracle finds {}", entry.id, lat.len(), subs.len()));
        }
        for b in lat.elements() {
            let lib = oracle.from_subspace(&core(alg, b).unwrap());
            let expected = oracle.core(&subs, oracle.from_subspace(b));
            if lib != expected {
                return Verdict::Fail(format!("{}: core of {b:?} disagrees with the enumerated ideals", entry.id));
            }
            checked += 1;
        }
    }
    Verdict::Pass(format!("{checked} subalgebras across {algebras} algebras over GF(2)"))
}

fn criterion_3() -> Verdict {
    let mut checked = 0;
    let mut positives = 0;
    for (entry, built) in built_corpus() {
        let alg = &built.algebra;
        if alg.field() != gf(2) || alg.dim() > 3 {
            continue;
        }
        let oracle = Oracle::new(alg);
        let subs = oracle.subalgebras();
        let lat = Lattice::build(alg, &Budget::default()).unwrap();
        let whole = alg.whole();
        for b in lat.elements() {
            let chain = subideal_chain(alg, b).unwrap();
            let brute = oracle.is_subideal(&subs, oracle.from_subspace(b), oracle.whole());
            if chain.is_some() != brute {
                return Verdict::Fail(format!("{}: {b:?} decision {} vs brute force {brute}", entry.id, chain.is_some()));
            }
            if let Some(chain) = chain {
                if chain.validate(alg, &whole).is_err() {
                    return Verdict::Fail(format!("{}: invalid chain for {b:?}", entry.id));
                }
                positives += 1;
            }
            checked += 1;
        }
    }
    Verdict::Pass(format!("{checked} subalgebras, {positives} subideals, all agree with the chain search"))
}

const SECTION_2: [&str; 6] = [
    "lemma-2.4-1",
    "lemma-2.4-2",
    "lemma-2.4-3",
    "lemma-2.4-4",
    "proposition-2.5",
    "lemma-2.7",
];

fn criterion_4() -> Verdict {
    let mut totals = vec![0u64; SECTION_2.len()];
    let mut over_budget = Vec::new();
    let mut rows_seen = 0;
    let mut oracle_lines = 0;
    for (entry, built) in built_corpus() {
        let alg = &built.algebra;
        if !matches!(alg.field().order(), Some(2 | 3)) {
            continue;
        }
        let within = Lattice::build(alg, &Budget::default());
        for row in rows_for(&entry, &built, &SECTION_2) {
            rows_seen += 1;
            match (row.status, within.is_ok()) {
                (Status::Pass, true) => {}
                (Status::Unsupported, false) => {
                    if !over_budget.contains(&entry.id) {
                        over_budget.push(entry.id.clone());
                    }
                }
                (s, _) => return Verdict::Fail(format!("{} on {}: {s:?} ({})", row.check_id, row.algebra, row.detail)),
            }
            let k = SECTION_2.iter().position(|c| *c == row.check_id).unwrap();
            totals[k] += row.hypothesis_count;
        }
        // Independent weak c-ideal table for every subalgebra.
        if let (Ok(lat), true) = (&within, fits_oracle(alg)) {
            let oracle = Oracle::new(alg);
            let subs = oracle.subalgebras();
            let subideals = oracle.subideals(&subs);
            for (i, b) in lat.elements().iter().enumerate() {
                let expected = oracle.has_witness(&subs, &subideals, oracle.from_subspace(b));
                if lat.is_weak_c(i) != expected {
                    return Verdict::Fail(format!("{}: weak c-ideal table disagrees at {b:?}", entry.id));
                }
                oracle_lines += 1;
            }
        }
    }
    if let Some(k) = totals.iter().position(|&t| t == 0) {
        return Verdict::Fail(format!("{} has no hypothesis instances", SECTION_2[k]));
    }
    let counts: Vec<String> = SECTION_2.iter().zip(&totals).map(|(c, t)| format!("{c}:{t}")).collect();
    Verdict::Pass(format!(
        "{rows_seen} rows, zero fail; hypothesis counts {}; {oracle_lines} weak c-ideal verdicts match brute force; unsupported over budget: {}",
        counts.join(" "),
        if over_budget.is_empty() { "none".into() } else { over_budget.join(", ") }
    ))
}

fn criterion_5() -> Verdict {
    let mut passes = 0;
    let mut cases = Vec::new();
    for (entry, built) in built_corpus() {
        let alg = &built.algebra;
        let within = Lattice::build(alg, &Budget::default()).is_ok();
        let rows = rows_for(&entry, &built, &["lemma-5.1", "theorem-5.2"]);
        for row in &rows {
            match (row.status, within) {
                (Status::Pass, true) => passes += 1,
                (Status::Unsupported, false) => {}
                (s, _) => return Verdict::Fail(format!("{} on {}: {s:?} ({})", row.check_id, row.algebra, row.detail)),
            }
        }
        let t52 = &rows[1];
        let expect = |prefix: &str| -> Result<(), String> {
            if t52.detail.starts_with(prefix) {
                Ok(())
            } else {
                Err(format!("{}: expected {prefix}, got {}", entry.id, t52.detail))
            }
        };
        let named = match entry.id.as_str() {
            "heisenberg over GF(2)" | "heisenberg over GF(3)" => Some("case (i)"),
            "direct_sum(abelian(1), almost_abelian(3)) over GF(2)"
            | "direct_sum(abelian(1), two_dim_nonabelian) over GF(2)"
            | "direct_sum(abelian(1), two_dim_nonabelian) over GF(3)" => Some("case (ii)"),
            "sl2 over GF(5)" => Some("neither"),
            _ => None,
        };
        let Some(prefix) = named else { continue };
        if let Err(e) = expect(prefix) {
            return Verdict::Fail(e);
        }
        let oracle = Oracle::new(alg);
        let subs = oracle.subalgebras();
        let subideals = oracle.subideals(&subs);
        if prefix == "neither" {
            let Some(line) = t52.witness.as_ref().and_then(|w| w.get("non-witness line")) else {
                return Verdict::Fail("sl2 over GF(5): no explicit non-witness line".into());
            };
            if line.dim() != 1 || oracle.has_witness(&subs, &subideals, oracle.from_subspace(line)) {
                return Verdict::Fail("sl2 over GF(5): the reported line is a weak c-ideal".into());
            }
            cases.push(format!("sl2/GF(5) non-witness {line:?}"));
        } else {
            let all = subs
                .iter()
                .filter(|&&m| oracle.dim(m) == 1)
                .all(|&m| oracle.has_witness(&subs, &subideals, m));
            if !all {
                return Verdict::Fail(format!("{}: brute force finds a line that is not a weak c-ideal", entry.id));
            }
            cases.push(format!("{} {prefix}", entry.id));
        }
    }
    Verdict::Pass(format!("{passes} rows pass; {}", cases.join("; ")))
}

/// The example34 structure constants at `p`, straight from the formulas,
/// keyed by label.
fn example34_table(p: usize) -> Vec<(String, String, Vec<(String, u64)>)> {
    let name = |a: i32, j: usize| format!("{}_x{j}", ["um1", "u0", "u1"][(a + 1) as usize]);
    // [u_a, u_b] in S, as (coefficient, index)
    let s_bracket = |a: i32, b: i32| -> Option<(i64, i32)> {
        match (a, b) {
            (-1, 0) => Some((1, -1)),
            (0, -1) => Some((-1, -1)),
            (-1, 1) => Some((1, 0)),
            (1, -1) => Some((-1, 0)),
            (0, 1) => Some((1, 1)),
            (1, 0) => Some((-1, 1)),
            _ => None,
        }
    };
    let m = |c: i64| c.rem_euclid(p as i64) as u64;
    let mut out = Vec::new();
    for a in -1..=1 {
        for i in 0..p {
            for b in -1..=1 {
                for j in 0..p {
                    if let Some((c, r)) = s_bracket(a, b) {
                        if (a, i) < (b, j) && i + j < p {
                            out.push((name(a, i), name(b, j), vec![(name(r, i + j), m(c))]));
                        }
                    }
                }
            }
            // [D, a⊗x^i] = a⊗(i x^(i-1) + i x^i)
            let mut img = Vec::new();
            if i >= 1 {
                img.push((name(a, i - 1), m(i as i64)));
                img.push((name(a, i), m(i as i64)));
            }
            if !img.is_empty() {
                out.push(("D".into(), name(a, i), img));
            }
        }
    }
    out
}

fn criterion_6() -> Verdict {
    let p = 3usize;
    let built = match dsl::parse("preset example34(3)") {
        Ok(b) => b,
        Err(e) => return Verdict::Fail(format!("construction rejected: {e}")),
    };
    let alg = &built.algebra;
    let index = alg.label_index();
    let n = alg.dim();
    let pm = p as u64;
    let coords = |v: &[weakc_core::Scalar]| -> Vec<u64> {
        v.iter().map(|s| s.to_bigint().unwrap().try_into().unwrap()).collect()
    };
    // Independent table from the formulas.
    let mut table = vec![vec![vec![0u64; n]; n]; n];
    for (l, r, img) in example34_table(p) {
        let (i, j) = (index[l.as_str()], index[r.as_str()]);
        for (t, c) in img {
            let k = index[t.as_str()];
            table[i][j][k] = (table[i][j][k] + c) % pm;
            table[j][i][k] = (table[j][i][k] + pm - c) % pm;
        }
    }
    for i in 0..n {
        for j in 0..n {
            if coords(&alg.basis_bracket(i, j)) != table[i][j] {
                return Verdict::Fail(format!("bracket [{}, {}] differs from the formula", alg.labels()[i], alg.labels()[j]));
            }
        }
    }
    let br = |x: &[u64], y: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                let f = x[i] * y[j] % pm;
                if f != 0 {
                    for k in 0..n {
                        out[k] = (out[k] + f * table[i][j][k]) % pm;
                    }
                }
            }
        }
        out
    };
    let unit = |i: usize| -> Vec<u64> { (0..n).map(|k| u64::from(k == i)).collect() };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (a, b, c) = (unit(i), unit(j), unit(k));
                let t1 = br(&a, &br(&b, &c));
                let t2 = br(&b, &br(&c, &a));
                let t3 = br(&c, &br(&a, &b));
                if (0..n).any(|q| (t1[q] + t2[q] + t3[q]) % pm != 0) {
                    return Verdict::Fail(format!("Jacobi fails at ({i},{j},{k})"));
                }
            }
        }
    }
    let d = index["D"];
    let a_idx: Vec<usize> = (0..n).filter(|&i| i != d).collect();
    let m_idx: Vec<usize> = (0..n).filter(|&i| !alg.labels()[i].starts_with("um1")).collect();
    let in_span = |basis: &[Vec<u64>], v: &[u64]| {
        let mut with = basis.to_vec();
        with.push(v.to_vec());
        rank_mod_p(&with, pm) == rank_mod_p(basis, pm)
    };
    let a_basis: Vec<Vec<u64>> = a_idx.iter().map(|&i| unit(i)).collect();
    let m_basis: Vec<Vec<u64>> = m_idx.iter().map(|&i| unit(i)).collect();
    let a_ideal = (0..n).all(|x| a_idx.iter().all(|&y| in_span(&a_basis, &br(&unit(x), &unit(y)))));
    let m_sub = m_idx.iter().all(|&x| m_idx.iter().all(|&y| in_span(&m_basis, &br(&unit(x), &unit(y)))));
    if !(a_ideal && a_basis.len() == 9 && m_sub && m_basis.len() == 7) {
        return Verdict::Fail(format!("A ideal {a_ideal} (dim {}), M subalgebra {m_sub} (dim {})", a_basis.len(), m_basis.len()));
    }
    // core(M) = 0: no nonzero vector of M generates an ideal inside M.
    let mut coeffs = vec![0u64; m_idx.len()];
    loop {
        let mut k = 0;
        while k < coeffs.len() && coeffs[k] == pm - 1 {
            coeffs[k] = 0;
            k += 1;
        }
        if k == coeffs.len() {
            break;
        }
        coeffs[k] += 1;
        let mut v = vec![0u64; n];
        for (c, &i) in coeffs.iter().zip(&m_idx) {
            v[i] = *c;
        }
        let mut ideal = vec![v];
        let mut at = 0;
        let mut escaped = false;
        while at < ideal.len() && !escaped {
            for x in 0..n {
                let w = br(&unit(x), &ideal[at]);
                if !in_span(&ideal, &w) {
                    escaped |= !in_span(&m_basis, &w);
                    ideal.push(w);
                }
            }
            at += 1;
        }
        if !escaped {
            return Verdict::Fail(format!("{coeffs:?} generates an ideal inside M"));
        }
    }
    let plus: Vec<Vec<u64>> = (0..n)
        .filter(|&i| i != d && !alg.labels()[i].ends_with("_x0"))
        .map(unit)
        .collect();
    let mut sum = plus.clone();
    sum.extend(m_basis.iter().cloned());
    let um1 = unit(index["um1_x0"]);
    if plus.len() != 3 * (p - 1) || in_span(&sum, &um1) {
        return Verdict::Fail("u_-1⊗1 lies in S⊗O1+ + M".into());
    }
    // The library's own row must agree.
    let entry = CorpusEntry::preset(Preset::Example34(3), gf(3));
    let rows = rows_for(&entry, &built, &["example-3.4"]);
    if rows.len() != 1 || rows[0].status != Status::Pass {
        return Verdict::Fail(format!("example-3.4 row: {:?}", rows.first().map(|r| &r.detail)));
    }
    Verdict::Pass("table matches the formulas and satisfies Jacobi; A ideal of dim 9; M subalgebra of dim 7; core(M) = 0 over all 2186 nonzero vectors of M; u_-1⊗1 ∉ S⊗O1+ + M".into())
}

fn criterion_7() -> Verdict {
    let ids = ["theorem-4.5", "lemma-4.2", "corollary-3.3-forward"];
    let mut hyp_45 = 0;
    let mut solvable_checked = 0;
    let mut refuted = Vec::new();
    let mut subideal_powers_pass = 0;
    for (entry, built) in built_corpus() {
        let alg = &built.algebra;
        let within = Lattice::build(alg, &Budget::default()).is_ok();
        for row in rows_for(&entry, &built, &ids) {
            match (row.check_id.as_str(), row.status) {
                (_, Status::Unsupported) if !within => {}
                ("theorem-4.5", Status::Pass) => hyp_45 += row.hypothesis_count,
                ("corollary-3.3-forward", Status::Pass) => {
                    if alg.is_solvable() {
                        solvable_checked += 1;
                    }
                }
                ("lemma-4.2", Status::Pass) => subideal_powers_pass += 1,
                ("lemma-4.2", Status::Fail) => {
                    if recheck(&row, alg, &Budget::default()) != Some(true) {
                        return Verdict::Fail(format!("lemma-4.2 fail on {} does not re-verify", entry.id));
                    }
                    if let Err(e) = subideal_powers_oracle(alg, &row) {
                        return Verdict::Fail(format!("lemma-4.2 fail on {}: {e}", entry.id));
                    }
                    refuted.push(entry.id.clone());
                }
                (id, s) => return Verdict::Fail(format!("{id} on {}: {s:?} ({})", entry.id, row.detail)),
            }
        }
    }
    let summary = format!(
        "theorem-4.5 never violated ({hyp_45} hypothesis instances); corollary-3.3 forward passes on {solvable_checked} solvable algebras; lemma-4.2 passes on {subideal_powers_pass}"
    );
    if refuted.is_empty() {
        Verdict::Pass(summary)
    } else {
        Verdict::Refuted(format!(
            "{summary} but is violated on {} algebras ({}); every counterexample re-verified by brute force",
            refuted.len(),
            refuted.join(", ")
        ))
    }
}

/// Re-derive a subideal-powers counterexample with the brute-force oracle.
fn subideal_powers_oracle(alg: &LieAlgebra, row: &CheckResult) -> Result<(), String> {
    let w = row.witness.as_ref().ok_or("no witness")?;
    let oracle = Oracle::new(alg);
    let subs = oracle.subalgebras();
    let get = |n: &str| w.get(n).map(|s| oracle.from_subspace(s)).ok_or(format!("missing {n}"));
    let (b, k) = (get("B")?, get("K")?);
    let whole = oracle.whole();
    if !oracle.is_nilpotent(b) || !oracle.is_subideal(&subs, k, whole) || oracle.sum(b, k) != whole {
        return Err("hypothesis does not hold".into());
    }
    let a: Mask = get("A")?;
    if !oracle.minimal_ideals(&subs).contains(&a) {
        return Err("A is not a minimal ideal".into());
    }
    if a & k == a || oracle.product(whole, a) == oracle.zero() {
        return Err("A satisfies the conclusion".into());
    }
    Ok(())
}

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_weakc")
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn criterion_8() -> Verdict {
    let corpus = default_corpus();
    let a = run_suite(&corpus, Budget::default()).to_json();
    let b = run_suite(&corpus, Budget::default()).to_json();
    if a != b {
        return Verdict::Fail("in-process reports differ".into());
    }
    let run = || Command::new(bin()).args(["verify", "--json"]).output().expect("binary runs");
    let (x, y) = (run(), run());
    if x.stdout != y.stdout {
        return Verdict::Fail("two `verify --json` runs differ".into());
    }
    if x.stdout != format!("{a}\n").into_bytes() {
        return Verdict::Fail("CLI report differs from the library report".into());
    }
    Verdict::Pass(format!("two `verify --json` runs byte-identical ({} bytes)", x.stdout.len()))
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(bin()).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn criterion_9() -> Verdict {
    // Round trip over the corpus and the golden algebras.
    let mut round_trips = 0;
    let mut texts: Vec<String> = built_corpus()
        .into_iter()
        .map(|(_, b)| dsl::print(&b.algebra, &b.subspaces))
        .collect();
    for f in ["heis.alg", "two_dim_q.alg", "sl2_q.alg", "sl2_gf5.alg", "rotation_gf2.alg"] {
        texts.push(std::fs::read_to_string(golden(f)).unwrap());
    }
    for text in &texts {
        let first = match dsl::parse(text) {
            Ok(b) => b,
            Err(e) => return Verdict::Fail(format!("golden text rejected: {e}")),
        };
        let again = dsl::parse(&dsl::print(&first.algebra, &first.subspaces)).unwrap();
        if again.algebra != first.algebra || again.algebra.to_json() != first.algebra.to_json() || again.subspaces != first.subspaces {
            return Verdict::Fail("print/parse round trip changed the table".into());
        }
        round_trips += 1;
    }
    let path = |f: &str| golden(f).to_string_lossy().into_owned();
    let cases: Vec<(Vec<String>, i32, &str)> = vec![
        (vec!["check".into(), path("heis.alg"), "--predicate".into(), "weak-c-ideal".into(), "--subspace".into(), "B".into()], 0, "\"verdict\": \"yes\""),
        (vec!["check".into(), path("sl2_gf5.alg"), "--predicate".into(), "weak-c-ideal".into(), "--subspace".into(), "H".into()], 0, "\"verdict\": \"no\""),
        (vec!["check".into(), path("sl2_q.alg"), "--predicate".into(), "simple".into()], 3, "unsupported"),
        (vec!["check".into(), path("two_dim_q.alg"), "--predicate".into(), "weak-c-ideal".into(), "--subspace".into(), "B".into()], 3, "unsupported"),
        (vec!["check".into(), path("two_dim_q.alg"), "--predicate".into(), "c-ideal".into(), "--subspace".into(), "B".into(), "--witness".into(), path("two_dim_q.wit")], 0, "\"verdict\": \"yes\""),
        (vec!["check".into(), path("two_dim_q.alg"), "--predicate".into(), "weak-c-ideal".into(), "--subspace".into(), "B".into(), "--witness".into(), path("two_dim_q_bad.wit")], 0, "\"verdict\": \"no\""),
        (vec!["check".into(), path("heis.alg"), "--predicate".into(), "ideal".into()], 2, "--subspace"),
        (vec!["check".into(), path("heis.alg")], 2, "--predicate"),
        (vec!["series".into(), path("sl2_q.alg"), "--kind".into(), "derived".into()], 0, "\"reaches_zero\": false"),
        (vec!["lattice".into(), path("example34.alg")], 3, "unsupported"),
        (vec!["check".into(), path("jacobi_bad.alg"), "--predicate".into(), "solvable".into()], 2, "Jacobi identity fails at (i,j,k) = (1,2,3)"),
        (vec!["check".into(), path("unknown_label.alg"), "--predicate".into(), "solvable".into()], 2, "unknown label `z`"),
        (vec!["check".into(), path("duplicate.alg"), "--predicate".into(), "solvable".into()], 2, "defined more than once"),
        (vec!["check".into(), path("diagonal.alg"), "--predicate".into(), "solvable".into()], 2, "antisymmetry"),
        (vec!["check".into(), path("syntax.alg"), "--predicate".into(), "solvable".into()], 2, "syntax error"),
        (vec!["frobnicate".into()], 2, "unrecognized subcommand"),
    ];
    for (args, code, needle) in &cases {
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let (got, out, err) = cli(&argv);
        if got != *code || !(out.contains(needle) || err.contains(needle)) {
            return Verdict::Fail(format!("`weakc {}` exited {got} (want {code}); output lacks `{needle}`: {out}{err}", argv.join(" ")));
        }
    }
    Verdict::Pass(format!("{round_trips} round trips; {} golden invocations with the expected exit codes", cases.len()))
}

fn main() -> ExitCode {
    let criteria: [(u32, Duration, fn() -> Verdict); 9] = [
        (1, Duration::from_secs(5), criterion_1),
        (2, Duration::from_secs(30), criterion_2),
        (3, Duration::from_secs(60), criterion_3),
        (4, Duration::from_secs(300), criterion_4),
        (5, Duration::from_secs(120), criterion_5),
        (6, Duration::from_secs(10), criterion_6),
        (7, Duration::from_secs(300), criterion_7),
        (8, Duration::from_secs(300), criterion_8),
        (9, Duration::from_secs(120), criterion_9),
    ];
    let mut broken = 0;
    for (n, limit, f) in criteria {
        let start = Instant::now();
        let verdict = f();
        let took = start.elapsed();
        let timing = format!("{:.2}s of {}s", took.as_secs_f64(), limit.as_secs());
        let over = took > limit;
        match verdict {
            Verdict::Pass(d) if !over => println!("criterion {n}: PASS [{timing}] {d}"),
            Verdict::Pass(d) => {
                broken += 1;
                println!("criterion {n}: FAIL [{timing}, over the limit] {d}");
            }
            Verdict::Fail(d) => {
                broken += 1;
                println!("criterion {n}: FAIL [{timing}] {d}");
            }
            Verdict::Refuted(d) => {
                if over {
                    broken += 1;
                }
                println!("criterion {n}: FAIL (statement refuted, see decisions ledger) [{timing}] {d}");
            }
        }
    }
    if broken == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{broken} criteria failed unexpectedly");
        ExitCode::FAILURE
    }
}
