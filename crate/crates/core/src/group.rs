//! Exhaustively enumerated finite groups and their conjugacy classes.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use crate::bitmatrix::BitMatrix;
use crate::element::GroupElement;
use crate::error::{Error, Result};
#[allow(unused_imports)]
use crate::par::prelude::*;
use crate::par::iter_of;

/// Default bound on the number of elements [`close_group`] will enumerate.
pub const DEFAULT_CAP: usize = 250_000;

/// A finite group with every element enumerated, indexed in canonical order.
#[derive(Debug)]
pub struct FiniteGroup<E> {
    elements: Vec<E>,
    index: HashMap<E, usize>,
    inverses: Vec<usize>,
    identity: usize,
    generators: Vec<usize>,
    classes: OnceLock<ClassTable>,
    pub(crate) relation: OnceLock<BitMatrix>,
}

/// One conjugacy class `g^G`. `rep` is the smallest element id in the class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub id: usize,
    pub rep: usize,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Debug, Clone)]
pub struct ClassTable {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl ClassTable {
    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &ConjugacyClass {
        &self.classes[id]
    }

    /// Class id of element `g`.
    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Enumerates the group generated by `generators`, refusing to grow past `cap`.
pub fn close_group<E: GroupElement>(generators: &[E], cap: usize) -> Result<FiniteGroup<E>> {
    let first = generators.first().ok_or(Error::NoGenerators)?;
    let shape = first.shape();
    if let Some(bad) = generators.iter().find(|g| g.shape() != shape) {
        return Err(Error::KindMismatch(format!("{} vs {}", shape, bad.shape())));
    }

    let identity = first.identity_like();
    let mut seen: HashSet<E> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.mul(g);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }

    let mut elements: Vec<E> = seen.into_iter().collect();
    elements.sort_unstable();
    let group = FiniteGroup::from_sorted(elements);
    let mut generators: Vec<usize> = generators
        .iter()
        .map(|g| group.index_of(g).expect("generator in its own closure"))
        .collect();
    generators.dedup();
    Ok(FiniteGroup { generators, ..group })
}

impl<E: GroupElement> FiniteGroup<E> {
    fn from_sorted(elements: Vec<E>) -> Self {
        let index: HashMap<E, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let identity = index[&elements[0].identity_like()];
        let inverses = elements.iter().map(|e| index[&e.inverse()]).collect();
        FiniteGroup {
            elements,
            index,
            inverses,
            identity,
            generators: Vec::new(),
            classes: OnceLock::new(),
            relation: OnceLock::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn all(&self) -> Vec<usize> {
        (0..self.order()).collect()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].mul(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g^-1 x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        let e = self.elements[self.inverses[g]]
            .mul(&self.elements[x])
            .mul(&self.elements[g]);
        self.index[&e]
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.elements[a].commutes_with(&self.elements[b])
    }

    /// `a^e` for any integer `e`.
    pub fn pow(&self, a: usize, e: i64) -> usize {
        let m = e.rem_euclid(self.order() as i64) as u64;
        self.index[&self.elements[a].pow(m)]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn render(&self, a: usize) -> String {
        self.elements[a].render()
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.commute(a, b)))
    }

    /// The conjugacy classes, computed on first use.
    pub fn classes(&self) -> &ClassTable {
        self.classes.get_or_init(|| conjugacy_classes(self))
    }

    /// Sorted element ids of the subgroup generated by `gens`.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([self.identity]);
        seen[self.identity] = true;
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|&i| seen[i]).collect()
    }

    /// A small generating set for the subgroup generated by `members`,
    /// chosen greedily in canonical order. Also returns that subgroup.
    pub fn generating_subset(&self, members: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        let mut in_span = vec![false; self.order()];
        in_span[self.identity] = true;
        for &m in members {
            if !in_span[m] {
                gens.push(m);
                span = self.subgroup_closure(&gens);
                in_span.iter_mut().for_each(|b| *b = false);
                span.iter().for_each(|&s| in_span[s] = true);
            }
        }
        (gens, span)
    }

    /// Elements of the centre `Z(G)`.
    pub fn centre(&self) -> Vec<usize> {
        let gens = &self.generators;
        (0..self.order())
            .filter(|&x| gens.iter().all(|&g| self.commute(x, g)))
            .collect()
    }

    /// Checks `x^-1 h x ∈ H` for generators `x` of G and `h` of H.
    pub fn is_normal(&self, h_mask: &[bool], h_gens: &[usize]) -> bool {
        self.generators
            .iter()
            .all(|&g| h_gens.iter().all(|&h| h_mask[self.conj(h, g)]))
    }
}

/// Orbits of conjugation, each represented by its smallest element id.
/// Classes come out sorted by representative.
pub fn conjugacy_classes<E: GroupElement>(group: &FiniteGroup<E>) -> ClassTable {
    const UNSET: usize = usize::MAX;
    let n = group.order();
    let mut class_of = vec![UNSET; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if class_of[start] != UNSET {
            continue;
        }
        let id = classes.len();
        let members = orbit_under_conjugation(group, start, group.generators(), |x| {
            if class_of[x] == UNSET {
                class_of[x] = id;
                true
            } else {
                false
            }
        });
        classes.push(ConjugacyClass {
            id,
            rep: start,
            members,
        });
    }
    ClassTable { classes, class_of }
}

/// Orbit of `x` under conjugation by the group generated by `gens`,
/// returned sorted. `visit` marks a point and reports whether it was new.
pub(crate) fn orbit_under_conjugation<E: GroupElement>(
    group: &FiniteGroup<E>,
    x: usize,
    gens: &[usize],
    mut visit: impl FnMut(usize) -> bool,
) -> Vec<usize> {
    let mut members = vec![x];
    visit(x);
    let mut head = 0;
    while head < members.len() {
        let y = members[head];
        head += 1;
        for &g in gens {
            let z = group.conj(y, g);
            if visit(z) {
                members.push(z);
            }
        }
    }
    members.sort_unstable();
    members
}

/// `{x ∈ within : xg = gx}`.
pub fn centralizer<E: GroupElement>(group: &FiniteGroup<E>, g: usize, within: &[usize]) -> Vec<usize> {
    iter_of!(within)
        .filter(|&&x| group.commute(x, g))
        .copied()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    pub(crate) fn sym(n: usize) -> FiniteGroup<Permutation> {
        let mut gens = vec![p(n, "(0 1)")];
        if n > 2 {
            let cycle: Vec<u32> = (0..n as u32).collect();
            gens.push(Permutation::from_cycles(n, &[cycle]).unwrap());
        }
        close_group(&gens, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn sym3_closure() {
        let g = close_group(&[p(3, "(0 1)"), p(3, "(0 1 2)")], 100).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity(), 0);
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn trivial_group() {
        let g = close_group(&[Permutation::identity(3)], 10).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.classes().len(), 1);
    }

    #[test]
    fn closure_errors() {
        assert_eq!(
            close_group(&[p(4, "(0 1)"), p(4, "(0 1 2 3)")], 10).unwrap_err(),
            Error::CapExceeded { cap: 10 }
        );
        assert!(matches!(
            close_group(&[p(3, "(0 1)"), p(4, "(0 1)")], 10),
            Err(Error::KindMismatch(_))
        ));
        assert_eq!(close_group::<Permutation>(&[], 10).unwrap_err(), Error::NoGenerators);
    }

    #[test]
    fn class_sizes_sym3_sym4() {
        let s3 = sym(3);
        let sizes: Vec<usize> = s3.classes().classes().iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        let s4 = sym(4);
        let sizes: Vec<usize> = s4.classes().classes().iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 6, 8, 3, 6]);
        let types: Vec<Vec<u32>> = s4
            .classes()
            .classes()
            .iter()
            .map(|c| s4.element(c.rep).cycle_type())
            .collect();
        assert_eq!(
            types,
            vec![vec![1, 1, 1, 1], vec![2, 1, 1], vec![3, 1], vec![2, 2], vec![4]]
        );
    }

    #[test]
    fn class_equation_and_orbit_sizes() {
        let s5 = sym(5);
        let table = s5.classes();
        assert_eq!(table.classes().iter().map(|c| c.size()).sum::<usize>(), 120);
        for c in table.classes() {
            assert_eq!(120 % c.size(), 0);
            let cent = centralizer(&s5, c.rep, &s5.all());
            assert_eq!(c.size() * cent.len(), 120);
            assert_eq!(c.rep, c.members[0]);
            assert!(c.members.iter().all(|&m| table.class_of(m) == c.id));
        }
    }

    #[test]
    fn centralizer_examples() {
        let s3 = sym(3);
        let all = s3.all();
        assert_eq!(centralizer(&s3, s3.identity(), &all), all);
        let c3 = s3.index_of(&p(3, "(0 1 2)")).unwrap();
        let cent: Vec<String> = centralizer(&s3, c3, &all).iter().map(|&i| s3.render(i)).collect();
        assert_eq!(cent.len(), 3);
        assert!(cent.contains(&"()".to_string()));
        let odd: Vec<usize> = all.iter().copied().filter(|&i| !s3.element(i).is_even()).collect();
        assert!(centralizer(&s3, c3, &odd).is_empty());
    }

    #[test]
    fn closure_is_closed_under_products() {
        let s4 = sym(4);
        for a in 0..s4.order() {
            for b in 0..s4.order() {
                let ab = s4.element(a).mul(s4.element(b));
                assert!(s4.index_of(&ab).is_some());
            }
            assert_eq!(s4.mul(a, s4.inv(a)), s4.identity());
        }
    }

    #[test]
    fn generating_subset_spans_alt4() {
        let s4 = sym(4);
        let alt: Vec<usize> = s4.all().into_iter().filter(|&i| s4.element(i).is_even()).collect();
        let (gens, span) = s4.generating_subset(&alt);
        assert_eq!(span, alt);
        assert!(gens.len() <= 3);
    }
}
