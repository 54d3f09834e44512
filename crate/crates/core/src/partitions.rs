//! Integer partitions as cycle types of `Sym(n)`: parity classes, coarsening,
//! and the combinatorial description of the commuting relation.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::bitmatrix::BitMatrix;
use crate::catalog::symmetric_group;
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hall::max_matching;
#[allow(unused_imports)]
use crate::par::prelude::*;
use crate::par::{into_iter_of, iter_of};
use crate::perm::Permutation;

/// Weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    /// Sorts `parts` into weakly decreasing order first.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(size, multiplicity)` in decreasing size order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((s, m)) if *s == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        f.write_str(&s.join("+"))
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `4+3+3+1`, `4,3,3,1` or exponent shorthand `4+3^2+1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in s.split(['+', ',']).map(str::trim).filter(|t| !t.is_empty()) {
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, e),
                None => (tok, "1"),
            };
            let bad = || Error::Parse(format!("bad partition term {tok:?}"));
            let base: u32 = base.trim().parse().map_err(|_| bad())?;
            let exp: usize = exp.trim().parse().map_err(|_| bad())?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::from_unsorted(parts)
    }
}

/// Partitions of `n` in reverse-lexicographic order, generated in place.
pub struct PartitionIter {
    current: Option<Vec<u32>>,
}

impl PartitionIter {
    pub fn new(n: u32) -> Self {
        PartitionIter {
            current: Some(if n == 0 { Vec::new() } else { vec![n] }),
        }
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let a = self.current.as_mut()?;
        let out = Partition { parts: a.clone() };
        let mut rem = 0;
        while a.last() == Some(&1) {
            a.pop();
            rem += 1;
        }
        match a.last_mut() {
            None => self.current = None,
            Some(last) => {
                *last -= 1;
                let k = *last;
                rem += 1;
                while rem >= k {
                    a.push(k);
                    rem -= k;
                }
                if rem > 0 {
                    a.push(rem);
                }
            }
        }
        Some(out)
    }
}

pub fn partitions(n: u32) -> Vec<Partition> {
    PartitionIter::new(n).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// Even number of even parts: the cycle type lies in `Alt(n)`.
    pub in_p_even: bool,
    /// Distinct odd parts: the class splits in `Alt(n)`.
    pub in_d_o: bool,
}

pub fn classify(lambda: &Partition) -> Classification {
    let even_parts = lambda.parts.iter().filter(|&&p| p % 2 == 0).count();
    let in_p_even = even_parts % 2 == 0;
    let in_d_o = lambda.parts.iter().all(|&p| p % 2 == 1)
        && lambda.parts.windows(2).all(|w| w[0] != w[1]);
    debug_assert!(!in_d_o || in_p_even);
    Classification { in_p_even, in_d_o }
}

/// Every partition obtained by adding together parts of `mu` of equal size:
/// for each size `s` occurring `m` times, the `m` copies are grouped
/// according to a partition of `m`, each group of `g` becoming a part `g·s`.
/// Includes `mu` itself.
pub fn coarsenings(mu: &Partition) -> BTreeSet<Partition> {
    let mut acc: Vec<Vec<u32>> = vec![Vec::new()];
    for (size, mult) in mu.multiplicities() {
        let groupings = partitions(mult);
        let mut next = Vec::with_capacity(acc.len() * groupings.len());
        for prefix in &acc {
            for grouping in &groupings {
                let mut v = prefix.clone();
                v.extend(grouping.parts.iter().map(|g| g * size));
                next.push(v);
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|v| Partition::from_unsorted(v).expect("positive parts"))
        .collect()
}

/// Smallest common coarsening (lexicographically, which is also the finest).
pub fn common_coarsening(lambda: &Partition, mu: &Partition) -> Result<Option<Partition>> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let a = coarsenings(lambda);
    let b = coarsenings(mu);
    Ok(a.intersection(&b).next().cloned())
}

/// Brute-force commuting test for cycle-type classes of `Sym(n)`, `n ≤ 8`.
pub struct SymClassOracle {
    group: Arc<FiniteGroup<Permutation>>,
    class_by_type: HashMap<Partition, usize>,
}

pub const MAX_ORACLE_DEGREE: u32 = 8;

impl SymClassOracle {
    pub fn new(n: u32) -> Result<Self> {
        if n > MAX_ORACLE_DEGREE {
            return Err(Error::TooLarge(format!("Sym({n}) exceeds the brute-force limit")));
        }
        let group = Arc::new(symmetric_group(n as usize)?);
        let class_by_type = group
            .classes()
            .classes()
            .iter()
            .map(|c| (cycle_type(group.element(c.rep)), c.id))
            .collect();
        Ok(SymClassOracle {
            group,
            class_by_type,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup<Permutation>> {
        &self.group
    }

    pub fn class_id(&self, lambda: &Partition) -> Result<usize> {
        self.class_by_type
            .get(lambda)
            .copied()
            .ok_or_else(|| Error::Invalid(format!("{lambda} is not a cycle type here")))
    }

    pub fn commute(&self, lambda: &Partition, mu: &Partition) -> Result<bool> {
        let (a, b) = (self.class_id(lambda)?, self.class_id(mu)?);
        Ok(self.group.commuting_relation().get(a, b))
    }
}

pub fn cycle_type(p: &Permutation) -> Partition {
    Partition::new(p.cycle_type()).expect("cycle type is a partition")
}

pub fn sym_commuting_oracle(n: u32, lambda: &Partition, mu: &Partition) -> Result<bool> {
    SymClassOracle::new(n)?.commute(lambda, mu)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub n: u32,
    pub pairs_checked: usize,
    pub commuting_pairs: usize,
}

/// Checks, over unordered pairs (including equal pairs), that a common
/// coarsening exists exactly when the classes commute in `Sym(n)`.
pub fn proposition1_crosscheck(n: u32) -> Result<CrosscheckReport> {
    let oracle = SymClassOracle::new(n)?;
    let parts = partitions(n);
    let coarse: Vec<BTreeSet<Partition>> = iter_of!(parts).map(coarsenings).collect();
    let mut pairs_checked = 0;
    let mut commuting_pairs = 0;
    for i in 0..parts.len() {
        for j in i..parts.len() {
            let combinatorial = coarse[i].intersection(&coarse[j]).next().is_some();
            let brute = oracle.commute(&parts[i], &parts[j])?;
            if combinatorial != brute {
                return Err(Error::CrosscheckFailure(format!(
                    "{} vs {}: coarsening says {combinatorial}, group says {brute}",
                    parts[i], parts[j]
                )));
            }
            pairs_checked += 1;
            commuting_pairs += brute as usize;
        }
    }
    Ok(CrosscheckReport {
        n,
        pairs_checked,
        commuting_pairs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountingRow {
    pub n: u32,
    pub p_even: u64,
    pub p_odd: u64,
    pub d_o: u64,
}

/// Counts `P_even(n)`, `P_odd(n)`, `D_o(n)` by enumeration and checks
/// `p_even = p_odd + d_o`.
pub fn counting_identity(n: u32) -> Result<CountingRow> {
    let mut row = CountingRow {
        n,
        p_even: 0,
        p_odd: 0,
        d_o: 0,
    };
    for lambda in PartitionIter::new(n) {
        let c = classify(&lambda);
        if c.in_p_even {
            row.p_even += 1;
        } else {
            row.p_odd += 1;
        }
        row.d_o += c.in_d_o as u64;
    }
    if row.p_even != row.p_odd + row.d_o {
        return Err(Error::CrosscheckFailure(format!("counting identity fails: {row:?}")));
    }
    Ok(row)
}

/// A bijection `P_even(n) \ D_o(n) → P_odd(n)` pairing only partitions with a
/// common coarsening, found by bipartite matching.
pub fn sym_bijection_f(n: u32) -> Result<Vec<(Partition, Partition)>> {
    let all = partitions(n);
    let (left, right): (Vec<Partition>, Vec<Partition>) = all
        .into_iter()
        .filter(|p| !classify(p).in_d_o)
        .partition(|p| classify(p).in_p_even);
    let lc: Vec<BTreeSet<Partition>> = iter_of!(left).map(coarsenings).collect();
    let rc: Vec<BTreeSet<Partition>> = iter_of!(right).map(coarsenings).collect();
    let rows: Vec<Vec<bool>> = into_iter_of!(0..left.len())
        .map(|i| {
            rc.iter()
                .map(|r| lc[i].intersection(r).next().is_some())
                .collect()
        })
        .collect();
    let relation = BitMatrix::from_fn(left.len(), right.len(), |i, j| rows[i][j]);
    let ids_l: Vec<usize> = (0..left.len()).collect();
    let ids_r: Vec<usize> = (0..right.len()).collect();
    let matching = max_matching(&relation, &ids_l, &ids_r);
    if matching.len() != left.len() || left.len() != right.len() {
        return Err(Error::MatchingIncomplete {
            matched: matching.len(),
            needed: left.len().max(right.len()),
        });
    }
    Ok(matching
        .into_iter()
        .map(|(i, j)| (left[i].clone(), right[j].clone()))
        .collect())
}

/// True when `x` preserves every orbit of `z` and agrees there with some power of `z`.
pub fn acts_as_powers_on_orbits(z: &Permutation, x: &Permutation) -> bool {
    z.cycles().iter().all(|orbit| {
        let len = orbit.len() as u64;
        (0..len).any(|a| {
            let za = z.pow(a);
            orbit.iter().all(|&pt| x.image(pt as usize) == za.image(pt as usize))
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sym4Report {
    pub x: String,
    pub y: String,
    pub commute: bool,
    pub z_checked: usize,
    /// A `z` with both `x` and `y` acting as powers of it; expected absent.
    pub witness: Option<String>,
    /// Same search with `y` replaced by `x`; expected present.
    pub control_witness: Option<String>,
}

/// Commuting double transpositions in `Sym(4)` that are not simultaneously
/// powers of a single permutation on its orbits.
pub fn sym4_counterexample() -> Result<Sym4Report> {
    let x = Permutation::parse_cycles(4, "(0 1)(2 3)")?;
    let y = Permutation::parse_cycles(4, "(0 2)(1 3)")?;
    let g = symmetric_group(4)?;
    let search = |a: &Permutation, b: &Permutation| {
        g.elements()
            .iter()
            .find(|z| acts_as_powers_on_orbits(z, a) && acts_as_powers_on_orbits(z, b))
            .map(Permutation::render)
    };
    Ok(Sym4Report {
        commute: x.commutes_with(&y),
        z_checked: g.order(),
        witness: search(&x, &y),
        control_witness: search(&x, &x),
        x: x.render(),
        y: y.render(),
    })
}
