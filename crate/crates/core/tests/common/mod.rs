//! Brute-force oracle over GF(p)^n with p^n <= 128. Points are base-p
//! integers and a subspace is the bitmask of the points it contains, so
//! nothing here goes through row reduction.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use weakc_core::{LieAlgebra, Subspace};

pub type Mask = u128;

pub struct Oracle {
    pub p: usize,
    pub n: usize,
    pub points: usize,
    add: Vec<Vec<usize>>,
    scale: Vec<Vec<usize>>,
    bracket: Vec<Vec<usize>>,
}

fn residue(s: &weakc_core::Scalar) -> usize {
    s.to_bigint().expect("prime field scalar").try_into().expect("small residue")
}

impl Oracle {
    pub fn new(alg: &LieAlgebra) -> Self {
        let p = alg.field().order().expect("finite field") as usize;
        let n = alg.dim();
        let points = p.pow(n as u32);
        assert!(points <= 128, "oracle limited to 128 points");
        let decode = |x: usize| -> Vec<usize> { (0..n).map(|k| (x / p.pow(k as u32)) % p).collect() };
        let encode = |v: &[usize]| -> usize { v.iter().enumerate().map(|(k, c)| c * p.pow(k as u32)).sum() };
        // structure constants c[i][j][k]
        let mut c = vec![vec![vec![0usize; n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                let v = alg.basis_bracket(i, j);
                for k in 0..n {
                    c[i][j][k] = residue(&v[k]);
                }
            }
        }
        let add = (0..points)
            .map(|a| {
                let va = decode(a);
                (0..points)
                    .map(|b| {
                        let vb = decode(b);
                        encode(&va.iter().zip(&vb).map(|(x, y)| (x + y) % p).collect::<Vec<_>>())
                    })
                    .collect()
            })
            .collect();
        let scale = (0..p)
            .map(|s| {
                (0..points)
                    .map(|a| encode(&decode(a).iter().map(|x| (s * x) % p).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        let bracket = (0..points)
            .map(|a| {
                let va = decode(a);
                (0..points)
                    .map(|b| {
                        let vb = decode(b);
                        let mut out = vec![0usize; n];
                        for i in 0..n {
                            for j in 0..n {
                                let f = va[i] * vb[j] % p;
                                if f == 0 {
                                    continue;
                                }
                                for k in 0..n {
                                    out[k] = (out[k] + f * c[i][j][k]) % p;
                                }
                            }
                        }
                        encode(&out)
                    })
                    .collect()
            })
            .collect();
        Oracle {
            p,
            n,
            points,
            add,
            scale,
            bracket,
        }
    }

    /// Oracle for the bare vector space, without a bracket.
    pub fn space(p: usize, n: usize) -> Self {
        let f = weakc_core::Field::prime(p as u64).unwrap();
        Oracle::new(&LieAlgebra::abelian(f, n))
    }

    pub fn points_of(&self, m: Mask) -> impl Iterator<Item = usize> + '_ {
        (0..self.points).filter(move |&x| m >> x & 1 == 1)
    }

    pub fn zero(&self) -> Mask {
        1
    }

    pub fn whole(&self) -> Mask {
        if self.points == 128 {
            Mask::MAX
        } else {
            (1 << self.points) - 1
        }
    }

    /// Smallest subspace containing `m` and the point `v`.
    pub fn adjoin(&self, m: Mask, v: usize) -> Mask {
        if m >> v & 1 == 1 {
            return m;
        }
        let mut out = m;
        for s in self.points_of(m).collect::<Vec<_>>() {
            for c in 1..self.p {
                out |= 1 << self.add[s][self.scale[c][v]];
            }
        }
        out
    }

    pub fn sum(&self, a: Mask, b: Mask) -> Mask {
        self.points_of(b).fold(a, |acc, v| self.adjoin(acc, v))
    }

    pub fn dim(&self, m: Mask) -> usize {
        let mut size = m.count_ones() as usize;
        let mut d = 0;
        while size > 1 {
            size /= self.p;
            d += 1;
        }
        d
    }

    pub fn from_subspace(&self, s: &Subspace) -> Mask {
        let p = self.p;
        s.basis().iter().fold(self.zero(), |acc, v| {
            let idx: usize = v.iter().enumerate().map(|(k, c)| residue(c) * p.pow(k as u32)).sum();
            self.adjoin(acc, idx)
        })
    }

    /// Every subspace, by breadth-first adjunction from zero.
    pub fn all_subspaces(&self) -> BTreeSet<Mask> {
        let mut seen = BTreeSet::from([self.zero()]);
        let mut queue = VecDeque::from([self.zero()]);
        while let Some(m) = queue.pop_front() {
            for v in 0..self.points {
                let next = self.adjoin(m, v);
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        seen
    }

    /// `[a, b] ⊆ target` for all points.
    pub fn bracket_into(&self, a: Mask, b: Mask, target: Mask) -> bool {
        self.points_of(a)
            .all(|x| self.points_of(b).all(|y| target >> self.bracket[x][y] & 1 == 1))
    }

    pub fn product(&self, a: Mask, b: Mask) -> Mask {
        let mut out = self.zero();
        for x in self.points_of(a) {
            for y in self.points_of(b) {
                out = self.adjoin(out, self.bracket[x][y]);
            }
        }
        out
    }

    pub fn is_subalgebra(&self, m: Mask) -> bool {
        self.bracket_into(m, m, m)
    }

    pub fn is_ideal_in(&self, i: Mask, k: Mask) -> bool {
        i & k == i && self.bracket_into(k, i, i)
    }

    pub fn subalgebras(&self) -> Vec<Mask> {
        self.all_subspaces().into_iter().filter(|&m| self.is_subalgebra(m)).collect()
    }

    /// Largest ideal of `L` inside `b`: the sum of every ideal contained
    /// in `b`, asserted to be one of them.
    pub fn core(&self, subs: &[Mask], b: Mask) -> Mask {
        let inside: Vec<Mask> = subs
            .iter()
            .copied()
            .filter(|&i| i & b == i && self.is_ideal_in(i, self.whole()))
            .collect();
        let top = inside.iter().fold(self.zero(), |acc, &i| self.sum(acc, i));
        assert!(inside.contains(&top));
        top
    }

    /// `b` is a subideal of `top` iff some strictly increasing chain of
    /// subalgebras, each an ideal of the next, joins them.
    pub fn is_subideal(&self, subs: &[Mask], b: Mask, top: Mask) -> bool {
        let mut memo = HashMap::new();
        self.reach(subs, b, top, &mut memo)
    }

    fn reach(&self, subs: &[Mask], s: Mask, top: Mask, memo: &mut HashMap<Mask, bool>) -> bool {
        if s == top {
            return true;
        }
        if let Some(&r) = memo.get(&s) {
            return r;
        }
        memo.insert(s, false);
        let r = subs.iter().copied().any(|t| {
            t != s && t & s == s && t & top == t && self.is_ideal_in(s, t) && self.reach(subs, t, top, memo)
        });
        memo.insert(s, r);
        r
    }

    pub fn subideals(&self, subs: &[Mask]) -> Vec<Mask> {
        subs.iter().copied().filter(|&c| self.is_subideal(subs, c, self.whole())).collect()
    }

    pub fn ideals(&self, subs: &[Mask]) -> Vec<Mask> {
        subs.iter().copied().filter(|&c| self.is_ideal_in(c, self.whole())).collect()
    }

    /// Some `C` among `candidates` with `L = B + C` and `B ∩ C ⊆ core(B)`.
    /// Candidates are the subideals for weak c-ideals, the ideals for
    /// c-ideals.
    pub fn has_witness(&self, subs: &[Mask], candidates: &[Mask], b: Mask) -> bool {
        let whole = self.whole();
        let core = self.core(subs, b);
        candidates
            .iter()
            .any(|&c| self.sum(b, c) == whole && (b & c) & core == b & c)
    }

    /// Nonzero ideals of `L` with no nonzero ideal strictly inside.
    pub fn minimal_ideals(&self, subs: &[Mask]) -> Vec<Mask> {
        let nonzero: Vec<Mask> = self.ideals(subs).into_iter().filter(|&i| i != self.zero()).collect();
        nonzero
            .iter()
            .copied()
            .filter(|&i| !nonzero.iter().any(|&j| j != i && j & i == j))
            .collect()
    }

    pub fn is_nilpotent(&self, m: Mask) -> bool {
        let mut term = m;
        for _ in 0..=self.n {
            if term == self.zero() {
                return true;
            }
            term = self.product(m, term);
        }
        term == self.zero()
    }
}

/// `[n choose k]_q` from the product formula, in exact integers.
pub fn gaussian(n: u32, k: u32, q: u128) -> u128 {
    if k > n {
        return 0;
    }
    let num: u128 = (0..k).map(|i| q.pow(n - i) - 1).product();
    let den: u128 = (0..k).map(|i| q.pow(i + 1) - 1).product();
    num / den
}

/// Rank of a list of vectors over GF(p) by Gaussian elimination.
pub fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let inv = |a: u64| (1..p).find(|b| a * b % p == 1).expect("nonzero");
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, piv);
        let f = inv(m[rank][col]);
        for x in m[rank].iter_mut() {
            *x = *x * f % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let c = m[r][col];
                for k in 0..cols {
                    m[r][k] = (m[r][k] + p * p - c * m[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}
