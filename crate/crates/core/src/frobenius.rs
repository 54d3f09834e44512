//! Prime-index subgroups all of whose non-identity classes split, and
//! Frobenius groups.

use serde::Serialize;

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
#[allow(unused_imports)]
use crate::par::prelude::*;
use crate::par::iter_of;
use crate::quotient::{is_prime, QuotientData};
use crate::relation::split_flags;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrobeniusReport {
    pub all_nonidentity_split: bool,
    pub is_frobenius: bool,
    pub complement_order: usize,
    /// Every `t ∉ H` was checked to have `t^p = 1`.
    pub fixed_point_free_witness_checked: bool,
    pub kernel_nilpotent: bool,
    /// Orders of `Z_0 ≤ Z_1 ≤ ..` in the upper central series of `H`.
    pub upper_central_series_lengths: Vec<usize>,
}

fn require_prime<E: GroupElement>(q: &QuotientData<E>) -> Result<usize> {
    let p = q.quotient_order();
    if is_prime(p) {
        Ok(p)
    } else {
        Err(Error::NotPrimeIndex(p))
    }
}

/// Every class of `G` inside `H`, apart from `{1}`, is split.
pub fn all_nonidentity_classes_split<E: GroupElement>(q: &QuotientData<E>) -> Result<bool> {
    require_prime(q)?;
    let g = q.group();
    let flags = split_flags(q);
    Ok(g.classes()
        .classes()
        .iter()
        .filter(|c| q.in_h(c.rep) && c.rep != g.identity())
        .all(|c| flags[c.id]))
}

/// Fixed-point-freeness: no `t ∉ H` centralizes a non-identity element of `H`.
pub fn is_frobenius_with_kernel<E: GroupElement>(group: &FiniteGroup<E>, h_members: &[usize]) -> Result<bool> {
    let mut mask = vec![false; group.order()];
    h_members.iter().for_each(|&h| mask[h] = true);
    let (gens, span) = group.generating_subset(h_members);
    let mut sorted = h_members.to_vec();
    sorted.sort_unstable();
    if span != sorted {
        return Err(Error::NotSubgroup);
    }
    if !group.is_normal(&mask, &gens) {
        return Err(Error::NotNormal);
    }
    let outside: Vec<usize> = (0..group.order()).filter(|&t| !mask[t]).collect();
    let id = group.identity();
    Ok(!outside.is_empty()
        && iter_of!(outside).all(|&t| h_members.iter().all(|&h| h == id || !group.commute(t, h))))
}

/// Orders of the upper central series of the subgroup `h_members`, stopping
/// once it stabilises.
pub fn upper_central_series<E: GroupElement>(group: &FiniteGroup<E>, h_members: &[usize]) -> Vec<usize> {
    let (h_gens, _) = group.generating_subset(h_members);
    let mut in_z = vec![false; group.order()];
    in_z[group.identity()] = true;
    let mut sizes = vec![1];
    loop {
        let next: Vec<usize> = h_members
            .iter()
            .copied()
            .filter(|&x| {
                h_gens.iter().all(|&k| {
                    let comm = group.mul(group.mul(group.inv(x), group.inv(k)), group.mul(x, k));
                    in_z[comm]
                })
            })
            .collect();
        if next.len() == *sizes.last().expect("nonempty") {
            return sizes;
        }
        next.iter().for_each(|&x| in_z[x] = true);
        sizes.push(next.len());
    }
}

pub fn is_nilpotent<E: GroupElement>(group: &FiniteGroup<E>, h_members: &[usize]) -> bool {
    upper_central_series(group, h_members).last() == Some(&h_members.len())
}

/// Computes both sides of the equivalence independently and fails if they
/// disagree. Frobenius kernels are also checked for nilpotency.
pub fn proposition3_check<E: GroupElement>(q: &QuotientData<E>) -> Result<FrobeniusReport> {
    let p = require_prime(q)?;
    let g = q.group();
    let split_side = all_nonidentity_classes_split(q)?;
    let frobenius_side = is_frobenius_with_kernel(g, q.h_members())?;
    if split_side != frobenius_side {
        return Err(Error::EquivalenceFailure(format!(
            "all non-identity classes split = {split_side}, Frobenius = {frobenius_side}"
        )));
    }
    let series = upper_central_series(g, q.h_members());
    let nilpotent = series.last() == Some(&q.h_members().len());
    let mut orders_ok = true;
    if frobenius_side {
        orders_ok = (0..g.order())
            .filter(|&t| !q.in_h(t))
            .all(|t| g.pow(t, p as i64) == g.identity());
        if !orders_ok || !nilpotent {
            return Err(Error::EquivalenceFailure(format!(
                "Frobenius kernel check failed: t^p = 1 for all t: {orders_ok}, nilpotent: {nilpotent}"
            )));
        }
    }
    Ok(FrobeniusReport {
        all_nonidentity_split: split_side,
        is_frobenius: frobenius_side,
        complement_order: p,
        fixed_point_free_witness_checked: frobenius_side && orders_ok,
        kernel_nilpotent: nilpotent,
        upper_central_series_lengths: series,
    })
}

/// Observation for the weaker hypothesis that every non-central class of `G`
/// inside `H` splits. Nothing is asserted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakHypothesisObservation {
    pub quotient_order: usize,
    pub hypothesis_holds: bool,
    pub kernel_nilpotent: bool,
}

pub fn weak_hypothesis_observation<E: GroupElement>(q: &QuotientData<E>) -> WeakHypothesisObservation {
    let g = q.group();
    let flags = split_flags(q);
    let hypothesis_holds = g
        .classes()
        .classes()
        .iter()
        .filter(|c| q.in_h(c.rep) && c.size() > 1)
        .all(|c| flags[c.id]);
    WeakHypothesisObservation {
        quotient_order: q.quotient_order(),
        hypothesis_holds,
        kernel_nilpotent: is_nilpotent(g, q.h_members()),
    }
}
