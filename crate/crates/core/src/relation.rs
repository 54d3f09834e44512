//! The relation `C ~ D` on conjugacy classes: some `c ∈ C` and `d ∈ D` commute.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bitmatrix::BitMatrix;
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::group::{centralizer, orbit_under_conjugation, ConjugacyClass, FiniteGroup};
#[allow(unused_imports)]
use crate::par::prelude::*;
use crate::par::into_iter_of;
use crate::quotient::QuotientData;

/// A commuting pair `c ∈ class_c`, `d ∈ class_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassPairWitness {
    pub class_c: usize,
    pub class_d: usize,
    pub c: usize,
    pub d: usize,
}

/// Split status of the classes in one coset `H t^m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassCosetProfile {
    pub exponent: usize,
    pub classes: Vec<usize>,
    pub split: Vec<bool>,
    pub non_split_count: usize,
}

/// Pairs the representative of `c` with the smallest element of `d` that
/// commutes with it. Conjugating a commuting pair keeps it commuting, so the
/// fixed representative suffices.
pub fn classes_commute<E: GroupElement>(
    group: &FiniteGroup<E>,
    c: &ConjugacyClass,
    d: &ConjugacyClass,
) -> Option<ClassPairWitness> {
    d.members
        .iter()
        .find(|&&y| group.commute(c.rep, y))
        .map(|&y| ClassPairWitness {
            class_c: c.id,
            class_d: d.id,
            c: c.rep,
            d: y,
        })
}

impl<E: GroupElement> FiniteGroup<E> {
    /// The relation `~` as a symmetric bit matrix over class ids, built once.
    pub fn commuting_relation(&self) -> &BitMatrix {
        self.relation.get_or_init(|| build_relation(self))
    }
}

fn build_relation<E: GroupElement>(group: &FiniteGroup<E>) -> BitMatrix {
    let classes = group.classes().classes();
    let k = classes.len();
    let rows: Vec<Vec<bool>> = into_iter_of!(0..k)
        .map(|i| {
            (0..k)
                .map(|j| j >= i && classes_commute(group, &classes[i], &classes[j]).is_some())
                .collect()
        })
        .collect();
    BitMatrix::from_fn(k, k, |i, j| {
        if i <= j {
            rows[i][j]
        } else {
            rows[j][i]
        }
    })
}

/// Same as [`FiniteGroup::commuting_relation`]; reflexive and symmetric.
pub fn commuting_class_graph<E: GroupElement>(group: &FiniteGroup<E>) -> &BitMatrix {
    group.commuting_relation()
}

/// Split test by comparing the `H`-conjugation orbit of the representative
/// with the full class.
pub fn is_split<E: GroupElement>(q: &QuotientData<E>, c: &ConjugacyClass) -> bool {
    let group = q.group();
    let mut seen = std::collections::HashSet::new();
    let orbit = orbit_under_conjugation(group, c.rep, q.h_generators(), |x| seen.insert(x));
    orbit.len() < c.size()
}

/// Split test via `Cent_G(rep)`: non-split iff it meets every coset of `H`.
pub fn is_split_by_centralizer<E: GroupElement>(q: &QuotientData<E>, c: &ConjugacyClass) -> bool {
    let group = q.group();
    let cent = centralizer(group, c.rep, &group.all());
    let mut hit = vec![false; q.quotient_order()];
    cent.iter().for_each(|&x| hit[q.exponent_of(x)] = true);
    !hit.into_iter().all(|b| b)
}

/// Split flags for every class of `G`, indexed by class id.
pub fn split_flags<E: GroupElement>(q: &QuotientData<E>) -> Vec<bool> {
    let classes = q.group().classes().classes();
    into_iter_of!(0..classes.len())
        .map(|i| is_split(q, &classes[i]))
        .collect()
}

/// One profile per coset exponent. The non-split counts are equal across
/// cosets and classes in generating cosets are non-split; either failing is
/// reported as an error.
pub fn coset_profiles<E: GroupElement>(q: &QuotientData<E>) -> Result<Vec<ClassCosetProfile>> {
    let flags = split_flags(q);
    let profiles: Vec<ClassCosetProfile> = (0..q.quotient_order())
        .map(|m| {
            let classes = q.classes_in_coset(m);
            let split: Vec<bool> = classes.iter().map(|&c| flags[c]).collect();
            let non_split_count = split.iter().filter(|&&s| !s).count();
            ClassCosetProfile {
                exponent: m,
                classes,
                split,
                non_split_count,
            }
        })
        .collect();
    let counts: Vec<usize> = profiles.iter().map(|p| p.non_split_count).collect();
    if counts.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::CountMismatch(counts));
    }
    for p in &profiles {
        if q.is_generating_coset(p.exponent) && p.split.iter().any(|&s| s) {
            return Err(Error::CountMismatch(counts));
        }
    }
    Ok(profiles)
}

/// Classes related to every class. Each must be a central singleton.
pub fn central_classes<E: GroupElement>(group: &FiniteGroup<E>) -> Result<Vec<usize>> {
    let rel = group.commuting_relation();
    let k = rel.rows();
    let table = group.classes();
    let universal: Vec<usize> = (0..k).filter(|&i| rel.row_count(i) == k).collect();
    for &i in &universal {
        let class = table.class(i);
        let central = group.generators().iter().all(|&g| group.commute(class.rep, g));
        if class.size() != 1 || !central {
            return Err(Error::NonCentralUniversalClass(i));
        }
    }
    Ok(universal)
}

/// Graphviz rendering of `~` with loops omitted. Pass `None` for `H = G`.
pub fn to_dot<E: GroupElement>(group: &FiniteGroup<E>, quotient: Option<&QuotientData<E>>) -> String {
    let rel = group.commuting_relation();
    let table = group.classes();
    let flags = quotient.map(split_flags);
    let mut out = String::from("graph commuting_classes {\n");
    for c in table.classes() {
        let coset = quotient.map_or(0, |q| q.exponent_of(c.rep));
        let split = flags.as_ref().is_some_and(|f| f[c.id]) as u8;
        let _ = writeln!(
            out,
            "  c{}[coset={},split={},size={}];",
            c.id,
            coset,
            split,
            c.size()
        );
    }
    for i in 0..rel.rows() {
        for j in i + 1..rel.cols() {
            if rel.get(i, j) {
                let _ = writeln!(out, "  c{i} -- c{j};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::group::{close_group, DEFAULT_CAP};
    use crate::perm::Permutation;
    use crate::quotient::cyclic_quotient;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    fn sym(n: usize) -> Arc<FiniteGroup<Permutation>> {
        let cycle: Vec<u32> = (0..n as u32).collect();
        let gens = [p(n, "(0 1)"), Permutation::from_cycles(n, &[cycle]).unwrap()];
        Arc::new(close_group(&gens, DEFAULT_CAP).unwrap())
    }

    fn over_alt(g: &Arc<FiniteGroup<Permutation>>) -> QuotientData<Permutation> {
        let alt: Vec<usize> = g.all().into_iter().filter(|&i| g.element(i).is_even()).collect();
        cyclic_quotient(g.clone(), &alt).unwrap()
    }

    fn class_by_type(g: &FiniteGroup<Permutation>, t: &[u32]) -> usize {
        g.classes()
            .classes()
            .iter()
            .find(|c| g.element(c.rep).cycle_type() == t)
            .unwrap()
            .id
    }

    #[test]
    fn sym4_witnesses() {
        let g = sym(4);
        let t = g.classes();
        let id = t.class(class_by_type(&g, &[1, 1, 1, 1]));
        let four = t.class(class_by_type(&g, &[4]));
        let w = classes_commute(&g, id, four).unwrap();
        assert_eq!((w.c, w.d), (g.identity(), four.rep));

        let dt = t.class(class_by_type(&g, &[2, 2]));
        let w = classes_commute(&g, dt, four).unwrap();
        assert!(g.commute(w.c, w.d));
        assert_eq!(g.mul(w.d, w.d), w.c);

        let tr = t.class(class_by_type(&g, &[2, 1, 1]));
        assert!(classes_commute(&g, tr, four).is_none());
        assert!(classes_commute(&g, tr, dt).is_some());
    }

    #[test]
    fn relation_matches_double_loop() {
        for n in 3..=5 {
            let g = sym(n);
            let rel = g.commuting_relation();
            assert!(rel.is_symmetric());
            let t = g.classes();
            for c in t.classes() {
                assert!(rel.get(c.id, c.id));
                for d in t.classes() {
                    let brute = c
                        .members
                        .iter()
                        .any(|&x| d.members.iter().any(|&y| g.commute(x, y)));
                    assert_eq!(rel.get(c.id, d.id), brute);
                }
            }
        }
    }

    #[test]
    fn sym3_graph() {
        let g = sym(3);
        let rel = g.commuting_relation();
        assert_eq!(rel.row_count(0), 3);
        assert!(!rel.get(1, 2));
        let dot = to_dot(&g, None);
        assert!(dot.contains("c0[coset=0,split=0,size=1];"));
        assert!(dot.contains("c0 -- c1;"));
        assert!(!dot.contains("c1 -- c2;"));
        assert!(!dot.contains("c0 -- c0;"));
    }

    #[test]
    fn split_flags_sym4() {
        let g = sym(4);
        let q = over_alt(&g);
        for c in g.classes().classes() {
            let expected = g.element(c.rep).cycle_type() == [3, 1];
            assert_eq!(is_split(&q, c), expected);
            assert_eq!(is_split_by_centralizer(&q, c), expected);
        }
    }

    #[test]
    fn profiles() {
        let g = sym(4);
        let q = over_alt(&g);
        let prof = coset_profiles(&q).unwrap();
        assert_eq!(prof.iter().map(|p| p.non_split_count).collect::<Vec<_>>(), vec![2, 2]);
        let odd: Vec<Vec<u32>> = prof[1]
            .classes
            .iter()
            .map(|&c| g.element(g.classes().class(c).rep).cycle_type())
            .collect();
        assert_eq!(odd, vec![vec![2, 1, 1], vec![4]]);

        let g3 = sym(3);
        let prof = coset_profiles(&over_alt(&g3)).unwrap();
        assert_eq!(prof.iter().map(|p| p.non_split_count).collect::<Vec<_>>(), vec![1, 1]);

        let whole = cyclic_quotient(g.clone(), &g.all()).unwrap();
        let prof = coset_profiles(&whole).unwrap();
        assert_eq!(prof.len(), 1);
        assert_eq!(prof[0].non_split_count, 5);
    }

    #[test]
    fn centre_of_sym4_and_q8() {
        let g = sym(4);
        assert_eq!(central_classes(&g).unwrap(), vec![0]);
        // Q8 acting regularly on 8 points.
        let i = p(8, "(0 2 1 3)(4 7 5 6)");
        let j = p(8, "(0 4 1 5)(2 6 3 7)");
        let q8 = close_group(&[i, j], 100).unwrap();
        assert_eq!(q8.order(), 8);
        let central = central_classes(&q8).unwrap();
        assert_eq!(central.len(), 2);
        let mut centre = q8.centre();
        centre.sort_unstable();
        let mut reps: Vec<usize> = central.iter().map(|&c| q8.classes().class(c).rep).collect();
        reps.sort_unstable();
        assert_eq!(reps, centre);
    }

    #[test]
    fn abelian_graph_is_complete() {
        let g = close_group(&[p(6, "(0 1 2 3 4 5)")], 100).unwrap();
        let rel = g.commuting_relation();
        assert!((0..6).all(|i| rel.row_count(i) == 6));
        assert_eq!(central_classes(&g).unwrap().len(), 6);
    }
}
