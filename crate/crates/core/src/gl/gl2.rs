//! Conjugacy classes of `GL₂(q)` by type, the `SL₂(q)` / `C_ξ` class table,
//! and an explicit commuting matching between those two cosets.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::field::{FieldElem, GaloisField};
use super::matrix::MatrixElem;
use super::params::{class_determinant, gl_split_predicate, GLClassParams, MonicPoly};
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::group::{close_group, FiniteGroup, DEFAULT_CAP};
use crate::partitions::Partition;
use crate::quotient::{cyclic_quotient, QuotientData};
use crate::relation::is_split;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Gl2Type {
    /// Scalars.
    A,
    /// One eigenvalue, not semisimple.
    B,
    /// Two distinct eigenvalues.
    C,
    /// No eigenvalue in `GF(q)`.
    D,
}

impl Gl2Type {
    pub const ALL: [Gl2Type; 4] = [Gl2Type::A, Gl2Type::B, Gl2Type::C, Gl2Type::D];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Gl2Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone)]
pub struct GL2ClassRecord {
    pub kind: Gl2Type,
    pub rep: MatrixElem,
    pub params: GLClassParams,
    pub determinant: FieldElem,
}

fn part(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

fn make_params(field: &GaloisField, items: Vec<(MonicPoly, &str)>) -> GLClassParams {
    let map: BTreeMap<MonicPoly, Partition> = items.into_iter().map(|(f, l)| (f, part(l))).collect();
    GLClassParams::new(2, field.order(), map).expect("degree-two parameters")
}

/// Monic irreducible quadratics `t² + c t + e` keyed by `(c, e)` in order.
pub fn irreducible_quadratics(field: &GaloisField) -> Vec<(FieldElem, FieldElem)> {
    field
        .elements()
        .flat_map(|c| field.nonzero().map(move |e| (c, e)))
        .filter(|&(c, e)| field.quadratic_roots(c, e).is_empty())
        .collect()
}

/// Type and class parameters of a `2×2` invertible matrix.
pub fn classify_gl2(m: &MatrixElem) -> (Gl2Type, GLClassParams) {
    let f = m.field();
    if m.is_scalar() {
        let a = m.at(0, 0);
        return (Gl2Type::A, make_params(f, vec![(MonicPoly::linear(f, a), "1+1")]));
    }
    let c = f.neg(m.trace());
    let e = m.det();
    match f.quadratic_roots(c, e).as_slice() {
        [a] => (Gl2Type::B, make_params(f, vec![(MonicPoly::linear(f, *a), "2")])),
        [a, b] => (
            Gl2Type::C,
            make_params(
                f,
                vec![(MonicPoly::linear(f, *a), "1"), (MonicPoly::linear(f, *b), "1")],
            ),
        ),
        _ => (Gl2Type::D, make_params(f, vec![(MonicPoly::quadratic(c, e), "1")])),
    }
}

/// Every class of `GL₂(q)` with its canonical representative: `aI`,
/// `[[a,1],[0,a]]`, `diag(a,b)` with `a < b`, and companion matrices.
pub fn gl2_class_catalog(field: &Arc<GaloisField>) -> Vec<GL2ClassRecord> {
    let f = field.as_ref();
    let mut reps = Vec::new();
    for a in f.nonzero() {
        reps.push(MatrixElem::scalar(field, 2, a));
    }
    for a in f.nonzero() {
        reps.push(MatrixElem::from_rows(field, &[&[a.0, 1], &[0, a.0]]).expect("valid"));
    }
    for a in f.nonzero() {
        for b in f.nonzero().filter(|&b| b > a) {
            reps.push(MatrixElem::diag(field, a, b));
        }
    }
    for (c, e) in irreducible_quadratics(f) {
        reps.push(MatrixElem::companion(field, c, e));
    }
    reps.into_iter()
        .map(|rep| {
            let (kind, params) = classify_gl2(&rep);
            GL2ClassRecord {
                kind,
                determinant: class_determinant(f, &params),
                rep,
                params,
            }
        })
        .collect()
}

/// Expected catalog counts `(A, B, C, D)`.
pub fn catalog_counts(q: u32) -> [usize; 4] {
    let q = q as usize;
    [q - 1, q - 1, (q - 1) * (q - 2) / 2, (q * q - q) / 2]
}

/// `GL₂(q)` generated by `diag(ξ, 1)`, `[[-1, 1], [-1, 0]]` and the
/// transvection `[[1, 1], [0, 1]]`.
pub fn gl2_generators(field: &Arc<GaloisField>) -> Vec<MatrixElem> {
    let f = field.as_ref();
    let m1 = f.neg(f.one()).0;
    vec![
        MatrixElem::diag(field, f.xi(), f.one()),
        MatrixElem::from_rows(field, &[&[m1, 1], &[m1, 0]]).expect("valid"),
        MatrixElem::from_rows(field, &[&[1, 1], &[0, 1]]).expect("valid"),
    ]
}

pub fn general_linear_2(field: &Arc<GaloisField>) -> Result<FiniteGroup<MatrixElem>> {
    close_group(&gl2_generators(field), DEFAULT_CAP)
}

/// `GL₂(q)` over `SL₂(q)`.
pub fn gl2_over_sl2(field: &Arc<GaloisField>) -> Result<QuotientData<MatrixElem>> {
    let g = Arc::new(general_linear_2(field)?);
    let sl: Vec<usize> = (0..g.order())
        .filter(|&i| g.element(i).det() == field.one())
        .collect();
    cyclic_quotient(g, &sl)
}

/// Checks the catalog against the enumerated group: every catalog
/// representative lies in a distinct class, the counts agree, and the
/// parametrized determinant equals the matrix determinant.
pub fn catalog_matches_group(field: &Arc<GaloisField>, group: &FiniteGroup<MatrixElem>) -> bool {
    let catalog = gl2_class_catalog(field);
    let table = group.classes();
    let mut ids: Vec<usize> = catalog
        .iter()
        .filter_map(|r| group.index_of(&r.rep).map(|i| table.class_of(i)))
        .collect();
    ids.sort_unstable();
    ids.dedup();
    let counts_ok = {
        let mut c = [0usize; 4];
        catalog.iter().for_each(|r| c[r.kind.index()] += 1);
        c == catalog_counts(field.order())
    };
    ids.len() == catalog.len()
        && catalog.len() == table.len()
        && counts_ok
        && catalog.iter().all(|r| r.rep.det() == r.determinant)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetTable {
    pub q: u32,
    /// Type counts `(A, B, C, D)` of classes in `SL₂(q)`.
    pub sl: [usize; 4],
    /// Type counts of classes with determinant `ξ`.
    pub c_xi: [usize; 4],
    pub verified: bool,
}

/// Closed forms `(2, 2, (q-3)/2, (q-1)/2)` and `(0, 0, (q-1)/2, (q+1)/2)`.
pub fn coset_table_formula(q: u32) -> ([usize; 4], [usize; 4]) {
    let q = q as usize;
    ([2, 2, (q - 3) / 2, (q - 1) / 2], [0, 0, (q - 1) / 2, q.div_ceil(2)])
}

/// Type counts in `SL₂(q)` and `C_ξ` filtered from the class catalog and
/// compared with the closed forms.
pub fn coset_table(q: u32) -> Result<CosetTable> {
    if q.is_multiple_of(2) {
        return Err(Error::EvenField(q));
    }
    let field = Arc::new(GaloisField::of_order(q)?);
    let mut sl = [0; 4];
    let mut c_xi = [0; 4];
    for r in gl2_class_catalog(&field) {
        if r.determinant == field.one() {
            sl[r.kind.index()] += 1;
        } else if r.determinant == field.xi() {
            c_xi[r.kind.index()] += 1;
        }
    }
    let (fsl, fxi) = coset_table_formula(q);
    Ok(CosetTable {
        q,
        verified: sl == fsl && c_xi == fxi,
        sl,
        c_xi,
    })
}

/// The same counts from the enumerated group: each brute-force class is
/// typed from its smallest element.
pub fn coset_table_brute_force(q: u32) -> Result<CosetTable> {
    if q.is_multiple_of(2) {
        return Err(Error::EvenField(q));
    }
    let field = Arc::new(GaloisField::of_order(q)?);
    let group = general_linear_2(&field)?;
    let mut sl = [0; 4];
    let mut c_xi = [0; 4];
    for c in group.classes().classes() {
        let m = group.element(c.rep);
        let (kind, _) = classify_gl2(m);
        if m.det() == field.one() {
            sl[kind.index()] += 1;
        } else if m.det() == field.xi() {
            c_xi[kind.index()] += 1;
        }
    }
    let (fsl, fxi) = coset_table_formula(q);
    Ok(CosetTable {
        q,
        verified: sl == fsl && c_xi == fxi,
        sl,
        c_xi,
    })
}

/// Compares the divisor criterion with direct `H`-orbit splitting for every
/// class of `GL₂(q)` over `SL₂(q)`. Returns the number of classes checked.
pub fn split_predicate_crosscheck(q: u32) -> Result<usize> {
    let field = Arc::new(GaloisField::of_order(q)?);
    let quotient = gl2_over_sl2(&field)?;
    let group = quotient.group();
    for c in group.classes().classes() {
        let (_, params) = classify_gl2(group.element(c.rep));
        let predicted = gl_split_predicate(&params);
        let actual = is_split(&quotient, c);
        if predicted != actual {
            return Err(Error::CrosscheckFailure(format!(
                "GL2({q}) class of {}: predicate {predicted}, orbit {actual}",
                group.render(c.rep)
            )));
        }
    }
    Ok(group.classes().len())
}

/// One matched pair of classes with commuting witnesses.
#[derive(Debug, Clone)]
pub struct Gl2Pair {
    pub left: usize,
    pub right: usize,
    pub witness: (MatrixElem, MatrixElem),
}

#[derive(Debug, Clone)]
pub struct Gl2Matching {
    pub q: u32,
    pub catalog: Vec<GL2ClassRecord>,
    pub pairs: Vec<Gl2Pair>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Gl2PairReport {
    pub left_type: Gl2Type,
    pub right_type: Gl2Type,
    pub left_rep: String,
    pub right_rep: String,
    pub witness: [String; 2],
}

#[derive(Debug, Clone, Serialize)]
pub struct Gl2MatchingReport {
    pub q: u32,
    pub pairs: Vec<Gl2PairReport>,
    pub verified: bool,
}

impl Gl2Matching {
    pub fn report(&self) -> Gl2MatchingReport {
        Gl2MatchingReport {
            q: self.q,
            pairs: self
                .pairs
                .iter()
                .map(|p| Gl2PairReport {
                    left_type: self.catalog[p.left].kind,
                    right_type: self.catalog[p.right].kind,
                    left_rep: self.catalog[p.left].rep.render(),
                    right_rep: self.catalog[p.right].rep.render(),
                    witness: [p.witness.0.render(), p.witness.1.render()],
                })
                .collect(),
            verified: self.verify(),
        }
    }

    /// Witnesses lie in their classes and commute; the pairing is a
    /// bijection from non-split `SL₂(q)` classes onto the `C_ξ` classes.
    pub fn verify(&self) -> bool {
        let field = self.catalog[0].rep.field();
        let mut left: Vec<usize> = self.pairs.iter().map(|p| p.left).collect();
        let mut right: Vec<usize> = self.pairs.iter().map(|p| p.right).collect();
        left.sort_unstable();
        right.sort_unstable();
        let expected_left: Vec<usize> = (0..self.catalog.len())
            .filter(|&i| {
                self.catalog[i].determinant == field.one() && !gl_split_predicate(&self.catalog[i].params)
            })
            .collect();
        let expected_right: Vec<usize> = (0..self.catalog.len())
            .filter(|&i| self.catalog[i].determinant == field.xi())
            .collect();
        left == expected_left
            && right == expected_right
            && self.pairs.iter().all(|p| {
                let (x, y) = &p.witness;
                classify_gl2(x).1 == self.catalog[p.left].params
                    && classify_gl2(y).1 == self.catalog[p.right].params
                    && x.mul(y) == y.mul(x)
            })
    }
}

/// Embedding of `GF(q²)` as `{a I + b U}` for the companion matrix `U` of
/// the first irreducible quadratic. All of these matrices commute.
struct QuadraticTorus {
    field: Arc<GaloisField>,
    u: MatrixElem,
}

impl QuadraticTorus {
    fn new(field: &Arc<GaloisField>) -> Self {
        let (c, e) = irreducible_quadratics(field)[0];
        QuadraticTorus {
            field: field.clone(),
            u: MatrixElem::companion(field, c, e),
        }
    }

    fn element(&self, a: FieldElem, b: FieldElem) -> MatrixElem {
        MatrixElem::scalar(&self.field, 2, a).add(&self.u.scale(b))
    }

    /// An element of the torus with characteristic polynomial `t² + c t + e`.
    fn realize(&self, c: FieldElem, e: FieldElem) -> Option<MatrixElem> {
        let f = &self.field;
        f.elements()
            .flat_map(|a| f.nonzero().map(move |b| (a, b)))
            .map(|(a, b)| self.element(a, b))
            .find(|m| m.trace() == f.neg(c) && m.det() == e)
    }
}

/// A commuting representative for catalog record `r` that commutes with
/// every other representative of the same type.
fn typed_witness(torus: &QuadraticTorus, r: &GL2ClassRecord) -> MatrixElem {
    match r.kind {
        Gl2Type::D => {
            let (c, e) = (r.rep.at(1, 1), r.rep.at(0, 1));
            let f = &torus.field;
            torus
                .realize(f.neg(c), f.neg(e))
                .expect("every irreducible quadratic has a root in GF(q²)")
        }
        _ => r.rep.clone(),
    }
}

/// Matches non-split `SL₂(q)` classes with classes of determinant `ξ`:
/// type C with type C and type D with type D in catalog order, then the
/// two scalar classes take the one leftover class of each type. For even
/// `q` every class is shifted by the scalar `s` with `s² = ξ`.
pub fn sl2_cxi_matching(q: u32) -> Result<Gl2Matching> {
    let field = Arc::new(GaloisField::of_order(q)?);
    let catalog = gl2_class_catalog(&field);
    let f = field.as_ref();
    let by_params: HashMap<&GLClassParams, usize> =
        catalog.iter().enumerate().map(|(i, r)| (&r.params, i)).collect();
    let in_sl = |i: &usize| catalog[*i].determinant == f.one() && !gl_split_predicate(&catalog[*i].params);
    let in_cxi = |i: &usize| catalog[*i].determinant == f.xi();
    let of_type = |kind: Gl2Type, pred: &dyn Fn(&usize) -> bool| -> Vec<usize> {
        (0..catalog.len())
            .filter(|i| catalog[*i].kind == kind && pred(i))
            .collect()
    };

    let mut pairs = Vec::new();
    if q.is_multiple_of(2) {
        let s = f.pow(f.xi(), q as u64 / 2);
        let shift = MatrixElem::scalar(&field, 2, s);
        for i in (0..catalog.len()).filter(in_sl) {
            let x = catalog[i].rep.clone();
            let y = x.mul(&shift);
            let j = by_params[&classify_gl2(&y).1];
            pairs.push(Gl2Pair {
                left: i,
                right: j,
                witness: (x, y),
            });
        }
    } else {
        let torus = QuadraticTorus::new(&field);
        let scalars = of_type(Gl2Type::A, &in_sl);
        let mut leftovers = Vec::new();
        for kind in [Gl2Type::C, Gl2Type::D] {
            let left = of_type(kind, &in_sl);
            let right = of_type(kind, &in_cxi);
            if right.len() != left.len() + 1 {
                return Err(Error::SchemeDefect(format!(
                    "type {kind}: {} classes in SL vs {} in C_xi",
                    left.len(),
                    right.len()
                )));
            }
            for (&l, &r) in left.iter().zip(&right) {
                pairs.push(Gl2Pair {
                    left: l,
                    right: r,
                    witness: (typed_witness(&torus, &catalog[l]), typed_witness(&torus, &catalog[r])),
                });
            }
            leftovers.push(*right.last().expect("nonempty"));
        }
        if scalars.len() != leftovers.len() {
            return Err(Error::SchemeDefect(format!("{} scalar classes in SL", scalars.len())));
        }
        for (&s, &r) in scalars.iter().zip(&leftovers) {
            pairs.push(Gl2Pair {
                left: s,
                right: r,
                witness: (catalog[s].rep.clone(), catalog[r].rep.clone()),
            });
        }
        pairs.sort_by_key(|p| p.left);
    }
    let m = Gl2Matching { q, catalog, pairs };
    if !m.verify() {
        return Err(Error::SchemeDefect(format!("witness check failed for q = {q}")));
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SameTypeRow {
    pub kind: Gl2Type,
    pub classes: usize,
    pub pairs_checked: usize,
    pub all_commute: bool,
    pub all_polynomial: bool,
}

/// Finds `α, β` with `α I + β x = y`, if any.
pub fn linear_polynomial_relation(x: &MatrixElem, y: &MatrixElem) -> Option<(FieldElem, FieldElem)> {
    let f = x.field();
    f.elements()
        .flat_map(|a| f.elements().map(move |b| (a, b)))
        .find(|&(a, b)| &MatrixElem::scalar(f, 2, a).add(&x.scale(b)) == y)
}

/// For each type, every pair of classes of that type in `SL₂(q) ∪ C_ξ`
/// has representatives that are polynomials in each other.
pub fn same_type_commute_check(q: u32) -> Result<Vec<SameTypeRow>> {
    if q.is_multiple_of(2) {
        return Err(Error::EvenField(q));
    }
    let field = Arc::new(GaloisField::of_order(q)?);
    let torus = QuadraticTorus::new(&field);
    let catalog = gl2_class_catalog(&field);
    let reps: Vec<(Gl2Type, MatrixElem)> = catalog
        .iter()
        .filter(|r| r.determinant == field.one() || r.determinant == field.xi())
        .map(|r| (r.kind, typed_witness(&torus, r)))
        .collect();
    Ok(Gl2Type::ALL
        .iter()
        .map(|&kind| {
            let ms: Vec<&MatrixElem> = reps.iter().filter(|(k, _)| *k == kind).map(|(_, m)| m).collect();
            let mut row = SameTypeRow {
                kind,
                classes: ms.len(),
                pairs_checked: 0,
                all_commute: true,
                all_polynomial: true,
            };
            for (i, x) in ms.iter().enumerate() {
                for y in &ms[i + 1..] {
                    row.pairs_checked += 1;
                    row.all_commute &= x.commutes_with(y);
                    row.all_polynomial &= linear_polynomial_relation(x, y).is_some()
                        && linear_polynomial_relation(y, x).is_some();
                }
            }
            row
        })
        .collect())
}
