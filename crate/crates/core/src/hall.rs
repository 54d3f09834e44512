//! Hall-condition audits, maximum bipartite matching, and the constructive
//! matching and partition results built on top of them.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitmatrix::BitMatrix;
use crate::element::GroupElement;
use crate::error::{Error, Result};
#[allow(unused_imports)]
use crate::par::prelude::*;
use crate::par::into_iter_of;
use crate::quotient::{gcd, is_prime, QuotientData};
use crate::relation::{classes_commute, split_flags, ClassPairWitness};

/// Left sides at most this large are audited over every nonempty subset.
pub const DEFAULT_SUBSET_CAP: usize = 18;
/// Random subsets drawn when the left side exceeds the cap.
pub const RANDOM_SUBSETS: usize = 10_000;

/// A left-side subset with `r` members and `s` right-side neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HallSubset {
    pub left: Vec<usize>,
    pub r: usize,
    pub s: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HallAuditReport {
    pub audited: usize,
    pub exhaustive: bool,
    /// Subsets with `s < r`.
    pub violations: Vec<HallSubset>,
    /// The audited subset minimising `s - r`, first found on ties.
    pub tightest: Option<HallSubset>,
    pub pass: bool,
}

/// Checks `s ≥ r` for subsets of `left` against `relation` restricted to
/// `right`. Every nonempty subset is tried when `left.len() <= subset_cap`;
/// otherwise singletons, pairs and [`RANDOM_SUBSETS`] seeded random subsets.
pub fn hall_audit(
    relation: &BitMatrix,
    left: &[usize],
    right: &[usize],
    subset_cap: usize,
    seed: u64,
) -> HallAuditReport {
    let words = right.len().div_ceil(64).max(1);
    let masks: Vec<Vec<u64>> = left
        .iter()
        .map(|&l| {
            let mut m = vec![0u64; words];
            for (j, &r) in right.iter().enumerate() {
                if relation.get(l, r) {
                    m[j / 64] |= 1 << (j % 64);
                }
            }
            m
        })
        .collect();
    let neighbours = |subset: &[usize]| -> usize {
        let mut acc = vec![0u64; words];
        for &i in subset {
            acc.iter_mut().zip(&masks[i]).for_each(|(a, b)| *a |= b);
        }
        acc.iter().map(|w| w.count_ones() as usize).sum()
    };
    let entry = |subset: Vec<usize>| -> HallSubset {
        let s = neighbours(&subset);
        HallSubset {
            left: subset.iter().map(|&i| left[i]).collect(),
            r: subset.len(),
            s,
        }
    };

    let k = left.len();
    let exhaustive = k <= subset_cap;
    let entries: Vec<HallSubset> = if exhaustive {
        into_iter_of!(1u64..(1u64 << k))
            .map(|mask| entry((0..k).filter(|&i| mask >> i & 1 == 1).collect()))
            .collect()
    } else {
        let mut subsets: Vec<Vec<usize>> = Vec::new();
        for i in 0..k {
            subsets.push(vec![i]);
            for j in i + 1..k {
                subsets.push(vec![i, j]);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        while subsets.len() < k * (k + 1) / 2 + RANDOM_SUBSETS {
            let s: Vec<usize> = (0..k).filter(|_| rng.gen_bool(0.5)).collect();
            if !s.is_empty() {
                subsets.push(s);
            }
        }
        into_iter_of!(subsets).map(entry).collect()
    };

    let audited = entries.len();
    let mut tightest: Option<HallSubset> = None;
    let mut violations = Vec::new();
    for e in entries {
        let slack = e.s as i64 - e.r as i64;
        if slack < 0 {
            violations.push(e.clone());
        }
        if tightest
            .as_ref()
            .is_none_or(|t| slack < t.s as i64 - t.r as i64)
        {
            tightest = Some(e);
        }
    }
    HallAuditReport {
        audited,
        exhaustive,
        pass: violations.is_empty(),
        violations,
        tightest,
    }
}

/// Maximum-cardinality matching between `left` and `right` ids under
/// `relation`, returned as `(left_id, right_id)` pairs in left order.
///
/// A greedy pass in canonical order is followed by augmenting-path search,
/// so the result is deterministic and equals the identity pairing on a
/// complete relation.
pub fn max_matching(relation: &BitMatrix, left: &[usize], right: &[usize]) -> Vec<(usize, usize)> {
    let adj: Vec<Vec<usize>> = left
        .iter()
        .map(|&l| (0..right.len()).filter(|&j| relation.get(l, right[j])).collect())
        .collect();
    let mut match_left: Vec<Option<usize>> = vec![None; left.len()];
    let mut match_right: Vec<Option<usize>> = vec![None; right.len()];

    for i in 0..left.len() {
        if let Some(&j) = adj[i].iter().find(|&&j| match_right[j].is_none()) {
            match_left[i] = Some(j);
            match_right[j] = Some(i);
        }
    }

    fn augment(
        i: usize,
        adj: &[Vec<usize>],
        visited: &mut [bool],
        match_left: &mut [Option<usize>],
        match_right: &mut [Option<usize>],
    ) -> bool {
        for &j in &adj[i] {
            if visited[j] {
                continue;
            }
            visited[j] = true;
            let free = match match_right[j] {
                None => true,
                Some(other) => augment(other, adj, visited, match_left, match_right),
            };
            if free {
                match_left[i] = Some(j);
                match_right[j] = Some(i);
                return true;
            }
        }
        false
    }

    for i in 0..left.len() {
        if match_left[i].is_none() {
            let mut visited = vec![false; right.len()];
            augment(i, &adj, &mut visited, &mut match_left, &mut match_right);
        }
    }

    match_left
        .iter()
        .enumerate()
        .filter_map(|(i, j)| j.map(|j| (left[i], right[j])))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchedPair {
    pub left: usize,
    pub right: usize,
    pub witness: ClassPairWitness,
}

/// Matching between non-split classes of `H t^x` and classes of a target coset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassMatching {
    pub coset_x: usize,
    pub coset_y: usize,
    pub pairs: Vec<MatchedPair>,
}

/// JSON shape of a matching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingReport {
    pub coset_x: usize,
    pub pairs: Vec<PairReport>,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub left_rep: String,
    pub right_rep: String,
    pub witness: [String; 2],
}

impl ClassMatching {
    pub fn report<E: GroupElement>(&self, q: &QuotientData<E>, verified: bool) -> MatchingReport {
        let g = q.group();
        let t = g.classes();
        MatchingReport {
            coset_x: self.coset_x,
            pairs: self
                .pairs
                .iter()
                .map(|p| PairReport {
                    left_rep: g.render(t.class(p.left).rep),
                    right_rep: g.render(t.class(p.right).rep),
                    witness: [g.render(p.witness.c), g.render(p.witness.d)],
                })
                .collect(),
            verified,
        }
    }
}

fn non_split_in_coset<E: GroupElement>(q: &QuotientData<E>, flags: &[bool], m: usize) -> Vec<usize> {
    q.classes_in_coset(m)
        .into_iter()
        .filter(|&c| !flags[c])
        .collect()
}

fn witnessed_matching<E: GroupElement>(
    q: &QuotientData<E>,
    left: &[usize],
    right: &[usize],
) -> Vec<MatchedPair> {
    let g = q.group();
    let t = g.classes();
    max_matching(g.commuting_relation(), left, right)
        .into_iter()
        .map(|(l, r)| MatchedPair {
            left: l,
            right: r,
            witness: classes_commute(g, t.class(l), t.class(r))
                .expect("relation entry has a witness"),
        })
        .collect()
}

/// Perfect commuting matching from the non-split classes of `H t^x` onto the
/// classes of the generating coset `H t`.
pub fn theorem1_matching<E: GroupElement>(q: &QuotientData<E>, x: usize) -> Result<ClassMatching> {
    let n = q.quotient_order();
    if x >= n {
        return Err(Error::Invalid(format!("coset exponent {x} out of range 0..{n}")));
    }
    let flags = split_flags(q);
    let left = non_split_in_coset(q, &flags, x);
    let right = q.classes_in_coset(1 % n);
    let pairs = witnessed_matching(q, &left, &right);
    if pairs.len() != left.len() || left.len() != right.len() {
        return Err(Error::MatchingIncomplete {
            matched: pairs.len(),
            needed: left.len().max(right.len()),
        });
    }
    let m = ClassMatching {
        coset_x: x,
        coset_y: 1 % n,
        pairs,
    };
    if !verify_class_matching(q, &m) {
        return Err(Error::MatchingIncomplete {
            matched: 0,
            needed: left.len(),
        });
    }
    Ok(m)
}

/// Re-checks a matching from scratch: endpoints are distinct and exhaust the
/// non-split classes of `H t^x` and the non-split classes of `H t^y`, and every
/// witness lies in its classes and commutes by direct multiplication.
pub fn verify_class_matching<E: GroupElement>(q: &QuotientData<E>, m: &ClassMatching) -> bool {
    let g = q.group();
    let t = g.classes();
    let flags = split_flags(q);
    let mut left: Vec<usize> = m.pairs.iter().map(|p| p.left).collect();
    let mut right: Vec<usize> = m.pairs.iter().map(|p| p.right).collect();
    left.sort_unstable();
    right.sort_unstable();
    let sides_ok = left == non_split_in_coset(q, &flags, m.coset_x)
        && right == non_split_in_coset(q, &flags, m.coset_y);
    let witnesses_ok = m.pairs.iter().all(|p| {
        let (c, d) = (g.element(p.witness.c), g.element(p.witness.d));
        t.class_of(p.witness.c) == p.left
            && t.class_of(p.witness.d) == p.right
            && c.mul(d) == d.mul(c)
    });
    sides_ok && witnesses_ok
}

/// Inverse of `c` modulo `modulus`, if it exists.
pub fn inverse_mod(c: i64, modulus: u64) -> Option<u64> {
    let m = modulus as i128;
    let (mut r0, mut r1) = (m, (c as i128).rem_euclid(m));
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(m) as u64)
}

/// Class pairing `g^G ↦ (g^c)^G` from `H t^x` to `H t^{cx}`, checked to be a
/// bijection onto the classes of the target coset.
pub fn power_map_class_bijection<E: GroupElement>(
    q: &QuotientData<E>,
    c: i64,
    x: usize,
) -> Result<Vec<(usize, usize)>> {
    let g = q.group();
    let order = g.order();
    if gcd(c.rem_euclid(order as i64) as usize, order) != 1 {
        return Err(Error::NotCoprime { c, order });
    }
    let n = q.quotient_order() as i64;
    let target = (c.rem_euclid(n) * x as i64).rem_euclid(n) as usize;
    let t = g.classes();
    let pairs: Vec<(usize, usize)> = q
        .classes_in_coset(x)
        .into_iter()
        .map(|cls| (cls, t.class_of(g.pow(t.class(cls).rep, c))))
        .collect();
    let mut images: Vec<usize> = pairs.iter().map(|&(_, img)| img).collect();
    images.sort_unstable();
    if images != q.classes_in_coset(target) {
        return Err(Error::CrosscheckFailure(format!(
            "power map by {c} is not a class bijection from coset {x} to coset {target}"
        )));
    }
    Ok(pairs)
}

/// Smallest positive `c ≡ i (mod p)` coprime to `group_order`.
pub fn find_coprime_residue(group_order: u64, p: u64, i: u64) -> u64 {
    let mut c = i % p;
    if c == 0 {
        c = p;
    }
    while gcd(c as usize, group_order as usize) != 1 {
        c += p;
    }
    c
}

/// One cell of the prime-index partition: classes `g_0^G, .., g_{p-1}^G` with
/// `g_m^G ⊆ H t^m` and pairwise commuting representatives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutingTuple {
    pub classes: Vec<usize>,
    pub reps: Vec<usize>,
    /// `c_2, .., c_{p-1}` with `g_i = g_1^{c_i}`.
    pub exponents: Vec<u64>,
}

/// Partitions the non-split classes of `G` into commuting tuples, one class
/// per coset, starting from the `H ↔ Ht` matching.
pub fn theorem2_partition<E: GroupElement>(q: &QuotientData<E>) -> Result<Vec<CommutingTuple>> {
    let p = q.quotient_order();
    if !is_prime(p) {
        return Err(Error::NotPrimeIndex(p));
    }
    let g = q.group();
    let t = g.classes();
    let exponents: Vec<u64> = (2..p as u64)
        .map(|i| find_coprime_residue(g.order() as u64, p as u64, i))
        .collect();
    let base = theorem1_matching(q, 0)?;
    let tuples: Vec<CommutingTuple> = base
        .pairs
        .iter()
        .map(|pair| {
            let (h, x) = (pair.witness.c, pair.witness.d);
            let mut reps = vec![h, x];
            reps.extend(exponents.iter().map(|&c| g.pow(x, c as i64)));
            CommutingTuple {
                classes: reps.iter().map(|&r| t.class_of(r)).collect(),
                reps,
                exponents: exponents.clone(),
            }
        })
        .collect();

    let defect = |msg: String| Err(Error::PartitionDefect(msg));
    let flags = split_flags(q);
    let mut seen = HashSet::new();
    for tuple in &tuples {
        for (m, (&cls, &r)) in tuple.classes.iter().zip(&tuple.reps).enumerate() {
            if q.exponent_of(r) != m {
                return defect(format!("class {cls} sits in coset {} not {m}", q.exponent_of(r)));
            }
            if !seen.insert(cls) {
                return defect(format!("class {cls} appears twice"));
            }
        }
        for (a, &x) in tuple.reps.iter().enumerate() {
            for &y in &tuple.reps[a + 1..] {
                if !g.commute(x, y) {
                    return defect(format!("representatives {x} and {y} do not commute"));
                }
            }
        }
    }
    let non_split: HashSet<usize> = (0..t.len()).filter(|&c| !flags[c]).collect();
    if seen != non_split {
        return defect("tuples do not cover the non-split classes".to_string());
    }
    Ok(tuples)
}

/// Outcome of searching for a commuting matching between two arbitrary cosets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExplorerOutcome {
    pub experimental: bool,
    pub coset_x: usize,
    pub coset_y: usize,
    pub left_count: usize,
    pub right_count: usize,
    pub found: bool,
    pub status: String,
    pub matching: Option<ClassMatching>,
}

/// Looks for a perfect commuting matching between the non-split classes of
/// `H t^x` and those of `H t^y`. Experimental: nothing is asserted.
pub fn conjecture_explorer<E: GroupElement>(q: &QuotientData<E>, x: usize, y: usize) -> ExplorerOutcome {
    let n = q.quotient_order();
    let (x, y) = (x % n, y % n);
    let flags = split_flags(q);
    let left = non_split_in_coset(q, &flags, x);
    let right = non_split_in_coset(q, &flags, y);
    let pairs = witnessed_matching(q, &left, &right);
    let found = left.len() == right.len() && pairs.len() == left.len();
    ExplorerOutcome {
        experimental: true,
        coset_x: x,
        coset_y: y,
        left_count: left.len(),
        right_count: right.len(),
        found,
        status: if found {
            "found".to_string()
        } else {
            "not found by this search".to_string()
        },
        matching: found.then_some(ClassMatching {
            coset_x: x,
            coset_y: y,
            pairs,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn audit_trivial_and_violation() {
        let rel = BitMatrix::from_fn(1, 1, |_, _| true);
        let rep = hall_audit(&rel, &[0], &[0], DEFAULT_SUBSET_CAP, 0);
        assert!(rep.pass && rep.exhaustive);
        assert_eq!(rep.audited, 1);
        assert_eq!(rep.tightest.unwrap(), HallSubset { left: vec![0], r: 1, s: 1 });

        // left vertex 1 is isolated
        let rel = BitMatrix::from_fn(2, 2, |i, j| i == 0 && j == 0);
        let rep = hall_audit(&rel, &[0, 1], &[0, 1], DEFAULT_SUBSET_CAP, 0);
        assert!(!rep.pass);
        assert!(rep.violations.contains(&HallSubset { left: vec![1], r: 1, s: 0 }));
        assert_eq!(max_matching(&rel, &[0, 1], &[0, 1]).len(), 1);
    }

    #[test]
    fn audit_sampling_above_cap() {
        let k = 20;
        let rel = BitMatrix::from_fn(k, k, |i, j| i == j || j == 0);
        let ids: Vec<usize> = (0..k).collect();
        let rep = hall_audit(&rel, &ids, &ids, 4, 7);
        assert!(!rep.exhaustive && rep.pass);
        assert_eq!(rep.audited, k * (k + 1) / 2 + RANDOM_SUBSETS);
        assert_eq!(rep, hall_audit(&rel, &ids, &ids, 4, 7));
    }

    #[test]
    fn complete_relation_gives_identity_pairing() {
        let k = 6;
        let rel = BitMatrix::from_fn(k, k, |_, _| true);
        let ids: Vec<usize> = (0..k).collect();
        let m = max_matching(&rel, &ids, &ids);
        assert_eq!(m, ids.iter().map(|&i| (i, i)).collect::<Vec<_>>());
    }

    #[test]
    fn augmenting_path_is_used() {
        // greedy takes 0-0, then 1 can only use 0: must reroute 0 to 1.
        let rel = BitMatrix::from_fn(2, 2, |i, j| j == 0 || (i == 0 && j == 1));
        assert_eq!(max_matching(&rel, &[0, 1], &[0, 1]), vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn coprime_residues() {
        assert_eq!(find_coprime_residue(6, 3, 2), 5);
        assert_eq!(find_coprime_residue(12, 3, 2), 5);
        assert_eq!(find_coprime_residue(7, 7, 3), 3);
        assert_eq!(find_coprime_residue(5, 5, 4), 4);
    }

    #[test]
    fn modular_inverse() {
        assert_eq!(inverse_mod(5, 6), Some(5));
        assert_eq!(inverse_mod(-1, 7), Some(6));
        assert_eq!(inverse_mod(4, 6), None);
        assert_eq!(inverse_mod(7, 48), Some(7));
    }
}
