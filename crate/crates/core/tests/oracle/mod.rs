//! Brute-force reference computations that only use element multiplication
//! and inversion, never the library's class tables or relation matrix.

#![allow(dead_code)]

use std::collections::HashMap;

use commuting_classes::{GroupElement, QuotientData};

pub struct Oracle<E> {
    pub elems: Vec<E>,
    pub index: HashMap<E, usize>,
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    pub in_h: Vec<bool>,
    pub coset: Vec<usize>,
    pub n: usize,
}

impl<E: GroupElement> Oracle<E> {
    /// Uses only the element list, the membership of `H` and the coset
    /// representative `t` from the quotient.
    pub fn new(q: &QuotientData<E>) -> Self {
        let g = q.group();
        let elems: Vec<E> = g.elements().to_vec();
        let index: HashMap<E, usize> = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let inverses: Vec<E> = elems.iter().map(|e| e.inverse()).collect();
        let mut class_of = vec![usize::MAX; elems.len()];
        let mut classes = Vec::new();
        for x in 0..elems.len() {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members: Vec<usize> = elems
                .iter()
                .zip(&inverses)
                .map(|(y, yi)| index[&yi.mul(&elems[x]).mul(y)])
                .collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = id;
            }
            classes.push(members);
        }
        let in_h: Vec<bool> = (0..elems.len()).map(|i| q.in_h(i)).collect();
        let n = elems.len() / q.h_members().len();
        let t_inv = elems[q.t_rep()].inverse();
        let coset = elems
            .iter()
            .map(|x| {
                let mut y = x.clone();
                (0..n)
                    .find(|_| {
                        let hit = in_h[index[&y]];
                        y = y.mul(&t_inv);
                        hit
                    })
                    .expect("some coset contains x")
            })
            .collect();
        Oracle {
            elems,
            index,
            class_of,
            classes,
            in_h,
            coset,
            n,
        }
    }

    pub fn rep(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    pub fn class_coset(&self, class: usize) -> usize {
        self.coset[self.rep(class)]
    }

    /// `g^G ≠ g^H`.
    pub fn split(&self, class: usize) -> bool {
        let x = &self.elems[self.rep(class)];
        let orbit: std::collections::HashSet<E> = self
            .elems
            .iter()
            .enumerate()
            .filter(|&(h, _)| self.in_h[h])
            .map(|(_, e)| e.inverse().mul(x).mul(e))
            .collect();
        orbit.len() < self.classes[class].len()
    }

    pub fn commute(&self, c: usize, d: usize) -> bool {
        let x = &self.elems[self.rep(c)];
        self.classes[d].iter().any(|&y| {
            let y = &self.elems[y];
            x.mul(y) == y.mul(x)
        })
    }

    pub fn non_split_in_coset(&self, m: usize) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&c| self.class_coset(c) == m && !self.split(c))
            .collect()
    }

    pub fn classes_in_coset(&self, m: usize) -> Vec<usize> {
        (0..self.classes.len()).filter(|&c| self.class_coset(c) == m).collect()
    }

    pub fn centre(&self) -> Vec<usize> {
        (0..self.elems.len())
            .filter(|&z| {
                let z = &self.elems[z];
                self.elems.iter().all(|y| z.mul(y) == y.mul(z))
            })
            .collect()
    }

    /// Every nonempty subset of `left` has at least as many neighbours in
    /// `right`. Returns the number of subsets checked.
    pub fn hall_exhaustive(&self, left: &[usize], right: &[usize]) -> Result<usize, Vec<usize>> {
        let nbrs: Vec<u64> = left
            .iter()
            .map(|&l| {
                right
                    .iter()
                    .enumerate()
                    .filter(|&(_, &r)| self.commute(l, r))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        let k = left.len();
        for mask in 1u64..(1 << k) {
            let union = (0..k).filter(|i| mask >> i & 1 == 1).fold(0u64, |a, i| a | nbrs[i]);
            if union.count_ones() < mask.count_ones() {
                return Err((0..k).filter(|i| mask >> i & 1 == 1).map(|i| left[i]).collect());
            }
        }
        Ok((1usize << k) - 1)
    }

    /// Upper central series of `H`, by definition.
    pub fn h_nilpotent(&self) -> bool {
        let h: Vec<usize> = (0..self.elems.len()).filter(|&i| self.in_h[i]).collect();
        let id = self
            .elems
            .iter()
            .position(|e| *e == e.identity_like())
            .expect("identity present");
        let mut z = vec![false; self.elems.len()];
        z[id] = true;
        let mut size = 1;
        loop {
            let next: Vec<usize> = h
                .iter()
                .copied()
                .filter(|&x| {
                    let ex = &self.elems[x];
                    h.iter().all(|&y| {
                        let ey = &self.elems[y];
                        let comm = ex.inverse().mul(&ey.inverse()).mul(ex).mul(ey);
                        z[self.index[&comm]]
                    })
                })
                .collect();
            if next.len() == size {
                return size == h.len();
            }
            size = next.len();
            next.iter().for_each(|&x| z[x] = true);
        }
    }

    /// No `t ∉ H` commutes with a non-identity element of `H`.
    pub fn fixed_point_free(&self) -> bool {
        let outside = (0..self.elems.len()).filter(|&t| !self.in_h[t]);
        let h: Vec<&E> = (0..self.elems.len())
            .filter(|&i| self.in_h[i] && self.elems[i] != self.elems[i].identity_like())
            .map(|i| &self.elems[i])
            .collect();
        outside.clone().count() > 0
            && outside.into_iter().all(|t| {
                let t = &self.elems[t];
                h.iter().all(|x| t.mul(x) != x.mul(t))
            })
    }
}

/// All permutations of `0..n` as image vectors, in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<u32>> {
    let mut cur: Vec<u32> = (0..n as u32).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Cycle lengths in decreasing order.
pub fn cycle_lengths(images: &[u32]) -> Vec<u32> {
    let mut seen = vec![false; images.len()];
    let mut out = Vec::new();
    for s in 0..images.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = images[x] as usize;
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().map(|&x| b[x as usize]).collect()
}

/// For `Sym(n)`: which pairs of cycle types contain commuting elements.
/// Keys are the decreasing cycle-length vectors.
pub fn sym_commuting_types(n: usize) -> HashMap<(Vec<u32>, Vec<u32>), bool> {
    let perms = all_permutations(n);
    let types: Vec<Vec<u32>> = perms.iter().map(|p| cycle_lengths(p)).collect();
    let mut reps: HashMap<Vec<u32>, usize> = HashMap::new();
    for (i, t) in types.iter().enumerate() {
        reps.entry(t.clone()).or_insert(i);
    }
    let mut out = HashMap::new();
    for (t, &r) in &reps {
        for u in reps.keys() {
            out.insert((t.clone(), u.clone()), false);
        }
        let x = &perms[r];
        for (y, u) in perms.iter().zip(&types) {
            if compose(x, y) == compose(y, x) {
                out.insert((t.clone(), u.clone()), true);
            }
        }
    }
    out
}
