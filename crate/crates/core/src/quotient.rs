//! Normal subgroups with cyclic quotient, and the coset-exponent map.

use std::sync::Arc;

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// `G`, a normal subgroup `H` with `G/H` cyclic, and a generating coset `Ht`.
///
/// `exponent_of(g) = m` means `g ∈ H t^m` with `0 ≤ m < |G:H|`.
#[derive(Debug, Clone)]
pub struct QuotientData<E> {
    group: Arc<FiniteGroup<E>>,
    h_members: Vec<usize>,
    h_mask: Vec<bool>,
    h_gens: Vec<usize>,
    quotient_order: usize,
    t_rep: usize,
    exponent_of: Vec<usize>,
}

/// Builds the quotient data for `G/H`, where `h_members` must form a subgroup.
///
/// `t_rep` is the canonically smallest element whose coset generates `G/H`.
pub fn cyclic_quotient<E: GroupElement>(
    group: Arc<FiniteGroup<E>>,
    h_members: &[usize],
) -> Result<QuotientData<E>> {
    let n = group.order();
    let mut h_members = h_members.to_vec();
    h_members.sort_unstable();
    h_members.dedup();
    if h_members.iter().any(|&h| h >= n) {
        return Err(Error::NotSubgroup);
    }
    let (h_gens, span) = group.generating_subset(&h_members);
    if span != h_members {
        return Err(Error::NotSubgroup);
    }
    let mut h_mask = vec![false; n];
    h_members.iter().for_each(|&h| h_mask[h] = true);
    if !group.is_normal(&h_mask, &h_gens) {
        return Err(Error::NotNormal);
    }

    // Label the cosets Hg.
    const UNSET: usize = usize::MAX;
    let mut label = vec![UNSET; n];
    let mut coset_reps = Vec::new();
    for g in 0..n {
        if label[g] != UNSET {
            continue;
        }
        let l = coset_reps.len();
        coset_reps.push(g);
        for &h in &h_members {
            label[group.mul(h, g)] = l;
        }
    }
    let index = coset_reps.len();

    let coset_order = |rep: usize| -> usize {
        let mut k = 1;
        let mut x = rep;
        while !h_mask[x] {
            x = group.mul(x, rep);
            k += 1;
        }
        k
    };
    let orders: Vec<usize> = coset_reps.iter().map(|&r| coset_order(r)).collect();
    let t_rep = (0..n)
        .find(|&g| orders[label[g]] == index)
        .ok_or(Error::QuotientNotCyclic)?;

    let mut exponent_of_label = vec![0; index];
    let mut x = group.identity();
    for m in 0..index {
        exponent_of_label[label[x]] = m;
        x = group.mul(x, t_rep);
    }
    let exponent_of = label.iter().map(|&l| exponent_of_label[l]).collect();

    Ok(QuotientData {
        group,
        h_members,
        h_mask,
        h_gens,
        quotient_order: index,
        t_rep,
        exponent_of,
    })
}

impl<E: GroupElement> QuotientData<E> {
    pub fn group(&self) -> &FiniteGroup<E> {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup<E>> {
        &self.group
    }

    pub fn h_members(&self) -> &[usize] {
        &self.h_members
    }

    pub fn in_h(&self, g: usize) -> bool {
        self.h_mask[g]
    }

    pub fn h_generators(&self) -> &[usize] {
        &self.h_gens
    }

    pub fn quotient_order(&self) -> usize {
        self.quotient_order
    }

    pub fn t_rep(&self) -> usize {
        self.t_rep
    }

    pub fn exponent_of(&self, g: usize) -> usize {
        self.exponent_of[g]
    }

    /// Coset exponent of a conjugacy class (constant on the class).
    pub fn class_exponent(&self, class_id: usize) -> usize {
        self.exponent_of[self.group.classes().class(class_id).rep]
    }

    /// Element ids of the coset `H t^m`.
    pub fn coset(&self, m: usize) -> Vec<usize> {
        let m = m % self.quotient_order;
        (0..self.group.order())
            .filter(|&g| self.exponent_of[g] == m)
            .collect()
    }

    /// Class ids lying in `H t^m`, in increasing order.
    pub fn classes_in_coset(&self, m: usize) -> Vec<usize> {
        let m = m % self.quotient_order;
        self.group
            .classes()
            .classes()
            .iter()
            .filter(|c| self.exponent_of[c.rep] == m)
            .map(|c| c.id)
            .collect()
    }

    /// Whether `H t^m` generates `G/H`.
    pub fn is_generating_coset(&self, m: usize) -> bool {
        gcd(m % self.quotient_order, self.quotient_order) == 1
    }
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{close_group, DEFAULT_CAP};
    use crate::perm::Permutation;

    fn sym4() -> Arc<FiniteGroup<Permutation>> {
        let gens = [
            Permutation::parse_cycles(4, "(0 1)").unwrap(),
            Permutation::parse_cycles(4, "(0 1 2 3)").unwrap(),
        ];
        Arc::new(close_group(&gens, DEFAULT_CAP).unwrap())
    }

    #[test]
    fn sym4_over_alt4() {
        let g = sym4();
        let alt: Vec<usize> = g.all().into_iter().filter(|&i| g.element(i).is_even()).collect();
        let q = cyclic_quotient(g.clone(), &alt).unwrap();
        assert_eq!(q.quotient_order(), 2);
        assert_eq!(g.render(q.t_rep()), "(2 3)");
        assert_eq!(q.exponent_of(q.t_rep()), 1);
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(q.exponent_of(g.mul(a, b)), (q.exponent_of(a) + q.exponent_of(b)) % 2);
            }
        }
        for c in g.classes().classes() {
            let e = q.exponent_of(c.rep);
            assert!(c.members.iter().all(|&m| q.exponent_of(m) == e));
        }
    }

    #[test]
    fn whole_group_gives_trivial_quotient() {
        let g = sym4();
        let q = cyclic_quotient(g.clone(), &g.all()).unwrap();
        assert_eq!(q.quotient_order(), 1);
        assert!(g.all().iter().all(|&x| q.exponent_of(x) == 0));
        assert_eq!(q.t_rep(), g.identity());
    }

    #[test]
    fn klein_quotient_is_not_cyclic() {
        let g = sym4();
        let v4: Vec<usize> = g
            .all()
            .into_iter()
            .filter(|&i| matches!(g.element(i).cycle_type().as_slice(), [2, 2] | [1, 1, 1, 1]))
            .collect();
        assert_eq!(cyclic_quotient(g, &v4).unwrap_err(), Error::QuotientNotCyclic);
    }

    #[test]
    fn rejects_non_normal_and_non_subgroups() {
        let g = sym4();
        let t = g.index_of(&Permutation::parse_cycles(4, "(0 1)").unwrap()).unwrap();
        assert_eq!(
            cyclic_quotient(g.clone(), &[g.identity(), t]).unwrap_err(),
            Error::NotNormal
        );
        assert_eq!(cyclic_quotient(g.clone(), &[t]).unwrap_err(), Error::NotSubgroup);
    }

    #[test]
    fn primes_and_gcd() {
        let primes: Vec<usize> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(0, 5), 5);
    }
}
