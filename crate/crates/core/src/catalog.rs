//! Group specification strings, standard constructions, and the built-in
//! catalog of `(G, H)` pairs with cyclic quotient.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::gl::{general_linear_2, GaloisField, MatrixElem};
use crate::group::{close_group, FiniteGroup, DEFAULT_CAP};
use crate::perm::Permutation;
use crate::quotient::{cyclic_quotient, QuotientData};

fn perm(n: usize, cycles: &str) -> Permutation {
    Permutation::parse_cycles(n, cycles).expect("literal permutation")
}

fn n_cycle(n: usize) -> Permutation {
    Permutation::from_cycles(n, &[(0..n as u32).collect()]).expect("valid cycle")
}

pub fn symmetric_group(n: usize) -> Result<FiniteGroup<Permutation>> {
    let mut gens = vec![Permutation::identity(n)];
    if n >= 2 {
        gens = vec![perm(n, "(0 1)"), n_cycle(n)];
    }
    close_group(&gens, DEFAULT_CAP)
}

pub fn alternating_group(n: usize) -> Result<FiniteGroup<Permutation>> {
    let mut gens: Vec<Permutation> = (2..n)
        .map(|i| Permutation::from_cycles(n, &[vec![0, 1, i as u32]]).expect("valid"))
        .collect();
    if gens.is_empty() {
        gens.push(Permutation::identity(n));
    }
    close_group(&gens, DEFAULT_CAP)
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon;
/// the rotation is the first generator.
pub fn dihedral_group(n: usize) -> Result<FiniteGroup<Permutation>> {
    if n < 3 {
        return Err(Error::Invalid("dihedral:N needs N >= 3".into()));
    }
    let reflection = Permutation::from_images((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect())?;
    close_group(&[n_cycle(n), reflection], DEFAULT_CAP)
}

pub fn cyclic_group(n: usize) -> Result<FiniteGroup<Permutation>> {
    if n == 0 {
        return Err(Error::Invalid("cyclic:0".into()));
    }
    close_group(&[n_cycle(n)], DEFAULT_CAP)
}

/// The quaternion group in its regular representation on 8 points
/// (`1, -1, i, -i, j, -j, k, -k`).
pub fn quaternion_group() -> Result<FiniteGroup<Permutation>> {
    close_group(&[perm(8, "(0 2 1 3)(4 7 5 6)"), perm(8, "(0 4 1 5)(2 6 3 7)")], DEFAULT_CAP)
}

/// `AGL(1, p)`: translations `x ↦ x + 1` (first generator) and `x ↦ g x`
/// for the smallest primitive root `g`.
pub fn affine_group(p: usize) -> Result<FiniteGroup<Permutation>> {
    if !crate::quotient::is_prime(p) {
        return Err(Error::NotPrime(p as u32));
    }
    let f = GaloisField::new(p as u32, 1)?;
    let g = f.xi().0;
    let scale = Permutation::from_images((0..p as u32).map(|x| x * g % p as u32).collect())?;
    close_group(&[n_cycle(p), scale], DEFAULT_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Sym(usize),
    AltInSym(usize),
    Alt(usize),
    Dihedral(usize),
    Gl2(u32),
    Sl2InGl2(u32),
    Cyclic(usize),
    Quaternion,
    Affine(usize),
    PermFile(PathBuf),
}

/// Which normal subgroup `H` to take.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgroupSpec {
    /// The spec's own choice: `Alt(n)`, `SL₂(q)`, rotations, translations, or `G`.
    Default,
    Whole,
    Trivial,
    /// Even permutations.
    Alt,
    /// Determinant one.
    Sl,
    /// Generated by the first generator (rotations, translations).
    Rot,
    Centre,
    Derived,
    /// Identity and the double transpositions.
    V4,
    /// Generated by the `k`-th powers of the generators.
    Powers(usize),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Sym(n) => write!(f, "sym:{n}"),
            GroupSpec::AltInSym(n) => write!(f, "alt-in-sym:{n}"),
            GroupSpec::Alt(n) => write!(f, "alt:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Gl2(q) => write!(f, "gl2:{q}"),
            GroupSpec::Sl2InGl2(q) => write!(f, "sl2-in-gl2:{q}"),
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Quaternion => write!(f, "q8"),
            GroupSpec::Affine(p) => write!(f, "affine:{p}"),
            GroupSpec::PermFile(p) => write!(f, "perm-file:{}", p.display()),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q8" {
            return Ok(GroupSpec::Quaternion);
        }
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("group spec {s:?} has no ':'")))?;
        let num = || -> Result<usize> {
            arg.parse()
                .map_err(|_| Error::Parse(format!("bad number {arg:?} in {s:?}")))
        };
        Ok(match kind {
            "sym" => GroupSpec::Sym(num()?),
            "alt-in-sym" => GroupSpec::AltInSym(num()?),
            "alt" => GroupSpec::Alt(num()?),
            "dihedral" => GroupSpec::Dihedral(num()?),
            "gl2" => GroupSpec::Gl2(num()? as u32),
            "sl2-in-gl2" => GroupSpec::Sl2InGl2(num()? as u32),
            "cyclic" => GroupSpec::Cyclic(num()?),
            "affine" => GroupSpec::Affine(num()?),
            "perm-file" if !arg.is_empty() => GroupSpec::PermFile(PathBuf::from(arg)),
            _ => return Err(Error::Parse(format!("unknown group spec {s:?}"))),
        })
    }
}

impl fmt::Display for SubgroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupSpec::Default => f.write_str("default"),
            SubgroupSpec::Whole => f.write_str("whole"),
            SubgroupSpec::Trivial => f.write_str("trivial"),
            SubgroupSpec::Alt => f.write_str("alt"),
            SubgroupSpec::Sl => f.write_str("sl"),
            SubgroupSpec::Rot => f.write_str("rot"),
            SubgroupSpec::Centre => f.write_str("centre"),
            SubgroupSpec::Derived => f.write_str("derived"),
            SubgroupSpec::V4 => f.write_str("v4"),
            SubgroupSpec::Powers(k) => write!(f, "sub:{k}"),
        }
    }
}

impl FromStr for SubgroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "default" => SubgroupSpec::Default,
            "whole" => SubgroupSpec::Whole,
            "trivial" => SubgroupSpec::Trivial,
            "alt" => SubgroupSpec::Alt,
            "sl" => SubgroupSpec::Sl,
            "rot" => SubgroupSpec::Rot,
            "centre" | "center" => SubgroupSpec::Centre,
            "derived" => SubgroupSpec::Derived,
            "v4" => SubgroupSpec::V4,
            other => match other.strip_prefix("sub:").map(str::parse) {
                Some(Ok(k)) => SubgroupSpec::Powers(k),
                _ => return Err(Error::Parse(format!("unknown subgroup selector {s:?}"))),
            },
        })
    }
}

/// A quotient over either element kind.
#[derive(Debug, Clone)]
pub enum AnyQuotient {
    Perm(QuotientData<Permutation>),
    Matrix(QuotientData<MatrixElem>),
}

/// Runs a generic expression against whichever quotient is inside.
#[macro_export]
macro_rules! with_quotient {
    ($any:expr, $q:ident => $body:expr) => {
        match $any {
            $crate::catalog::AnyQuotient::Perm($q) => $body,
            $crate::catalog::AnyQuotient::Matrix($q) => $body,
        }
    };
}

fn read_perm_file(path: &PathBuf) -> Result<Vec<Permutation>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let degree = lines
        .iter()
        .flat_map(|l| l.split(|c: char| !c.is_ascii_digit()))
        .filter_map(|t| t.parse::<usize>().ok())
        .max()
        .map_or(1, |m| m + 1);
    lines
        .iter()
        .map(|l| Permutation::parse_cycles(degree, l))
        .collect()
}

fn select<E: GroupElement>(
    group: &FiniteGroup<E>,
    which: &SubgroupSpec,
    predicate: Option<&dyn Fn(&E) -> bool>,
) -> Result<Vec<usize>> {
    let all = group.all();
    Ok(match which {
        SubgroupSpec::Whole | SubgroupSpec::Default => all,
        SubgroupSpec::Trivial => vec![group.identity()],
        SubgroupSpec::Centre => group.centre(),
        SubgroupSpec::Rot => group.subgroup_closure(&group.generators()[..1]),
        SubgroupSpec::Derived => derived_subgroup(group),
        SubgroupSpec::Powers(k) => {
            let gens: Vec<usize> = group.generators().iter().map(|&g| group.pow(g, *k as i64)).collect();
            group.subgroup_closure(&gens)
        }
        SubgroupSpec::Alt | SubgroupSpec::Sl | SubgroupSpec::V4 => {
            let pred = predicate
                .ok_or_else(|| Error::Invalid(format!("selector {which} does not apply to this group")))?;
            all.into_iter().filter(|&i| pred(group.element(i))).collect()
        }
    })
}

/// Normal closure of the commutators of generators.
pub fn derived_subgroup<E: GroupElement>(group: &FiniteGroup<E>) -> Vec<usize> {
    let gens = group.generators();
    let mut seeds = Vec::new();
    for &a in gens {
        for &b in gens {
            let comm = group.mul(group.mul(group.inv(a), group.inv(b)), group.mul(a, b));
            seeds.push(comm);
        }
    }
    loop {
        let span = group.subgroup_closure(&seeds);
        let mut mask = vec![false; group.order()];
        span.iter().for_each(|&s| mask[s] = true);
        let extra: Vec<usize> = seeds
            .iter()
            .flat_map(|&s| gens.iter().map(move |&g| (s, g)))
            .map(|(s, g)| group.conj(s, g))
            .filter(|&c| !mask[c])
            .collect();
        if extra.is_empty() {
            return span;
        }
        seeds.extend(extra);
    }
}

type PermPredicate = Box<dyn Fn(&Permutation) -> bool>;

fn perm_predicate(which: &SubgroupSpec) -> Option<PermPredicate> {
    match which {
        SubgroupSpec::Alt => Some(Box::new(Permutation::is_even)),
        SubgroupSpec::V4 => Some(Box::new(|p: &Permutation| {
            let t = p.cycle_type();
            let nontrivial: Vec<u32> = t.into_iter().filter(|&c| c > 1).collect();
            nontrivial.is_empty() || nontrivial == [2, 2]
        })),
        _ => None,
    }
}

fn perm_quotient(group: FiniteGroup<Permutation>, which: &SubgroupSpec) -> Result<AnyQuotient> {
    let pred = perm_predicate(which);
    let h = select(&group, which, pred.as_deref())?;
    Ok(AnyQuotient::Perm(cyclic_quotient(Arc::new(group), &h)?))
}

impl GroupSpec {
    /// The normal subgroup used when no selector is given.
    pub fn default_subgroup(&self) -> SubgroupSpec {
        match self {
            GroupSpec::AltInSym(_) => SubgroupSpec::Alt,
            GroupSpec::Sl2InGl2(_) => SubgroupSpec::Sl,
            GroupSpec::Dihedral(_) | GroupSpec::Affine(_) => SubgroupSpec::Rot,
            _ => SubgroupSpec::Whole,
        }
    }

    /// Enumerates `G`, picks `H`, and builds the cyclic quotient data.
    pub fn build(&self, which: &SubgroupSpec, cap: usize) -> Result<AnyQuotient> {
        let which = match which {
            SubgroupSpec::Default => self.default_subgroup(),
            w => w.clone(),
        };
        let perms = |gens: Vec<Permutation>| close_group(&gens, cap);
        match self {
            GroupSpec::Sym(n) | GroupSpec::AltInSym(n) => {
                let g = if *n >= 2 {
                    perms(vec![perm(*n, "(0 1)"), n_cycle(*n)])?
                } else {
                    symmetric_group(*n)?
                };
                perm_quotient(g, &which)
            }
            GroupSpec::Alt(n) => perm_quotient(alternating_group(*n)?, &which),
            GroupSpec::Dihedral(n) => perm_quotient(dihedral_group(*n)?, &which),
            GroupSpec::Cyclic(n) => perm_quotient(cyclic_group(*n)?, &which),
            GroupSpec::Quaternion => perm_quotient(quaternion_group()?, &which),
            GroupSpec::Affine(p) => perm_quotient(affine_group(*p)?, &which),
            GroupSpec::PermFile(path) => perm_quotient(perms(read_perm_file(path)?)?, &which),
            GroupSpec::Gl2(q) | GroupSpec::Sl2InGl2(q) => {
                let field = Arc::new(GaloisField::of_order(*q)?);
                let group = general_linear_2(&field)?;
                if group.order() > cap {
                    return Err(Error::CapExceeded { cap });
                }
                let one = field.one();
                let is_sl = move |m: &MatrixElem| m.det() == one;
                let pred: Option<&dyn Fn(&MatrixElem) -> bool> = match which {
                    SubgroupSpec::Sl => Some(&is_sl),
                    _ => None,
                };
                let h = select(&group, &which, pred)?;
                Ok(AnyQuotient::Matrix(cyclic_quotient(Arc::new(group), &h)?))
            }
        }
    }
}

/// A named `(G, H)` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub group: GroupSpec,
    pub subgroup: SubgroupSpec,
    pub family: Family,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Symmetric,
    Dihedral,
    Cyclic,
    Linear,
    Small,
}

impl CatalogEntry {
    pub fn name(&self) -> String {
        format!("{} --mod {}", self.group, self.subgroup)
    }

    pub fn build(&self) -> Result<AnyQuotient> {
        self.group.build(&self.subgroup, DEFAULT_CAP)
    }
}

/// Built-in `(G, H)` pairs: `Sym(n)/Alt(n)` for `3 ≤ n ≤ 7`, dihedral groups
/// over rotations for `3 ≤ N ≤ 12`, cyclic chains, `GL₂(q)/SL₂(q)` for
/// `q ∈ {3, 4, 5, 7, 9}`, `Alt(4)/V₄`, `Q₈` over `⟨i⟩`, and `AGL(1, p)`
/// over translations for `p ∈ {5, 7}`.
pub fn catalog() -> Vec<CatalogEntry> {
    let e = |group, subgroup, family| CatalogEntry {
        group,
        subgroup,
        family,
    };
    let mut out = Vec::new();
    for n in 3..=7 {
        out.push(e(GroupSpec::AltInSym(n), SubgroupSpec::Alt, Family::Symmetric));
    }
    for n in 3..=12 {
        out.push(e(GroupSpec::Dihedral(n), SubgroupSpec::Rot, Family::Dihedral));
    }
    for p in [2, 3, 5, 7] {
        out.push(e(GroupSpec::Cyclic(p), SubgroupSpec::Trivial, Family::Cyclic));
    }
    for (n, k) in [(6, 2), (6, 3), (8, 2), (8, 4), (9, 3), (12, 4), (12, 6)] {
        out.push(e(GroupSpec::Cyclic(n), SubgroupSpec::Powers(k), Family::Cyclic));
    }
    for q in [3, 4, 5, 7, 9] {
        out.push(e(GroupSpec::Sl2InGl2(q), SubgroupSpec::Sl, Family::Linear));
    }
    out.push(e(GroupSpec::Alt(4), SubgroupSpec::V4, Family::Small));
    out.push(e(GroupSpec::Quaternion, SubgroupSpec::Rot, Family::Small));
    out.push(e(GroupSpec::Affine(5), SubgroupSpec::Rot, Family::Small));
    out.push(e(GroupSpec::Affine(7), SubgroupSpec::Rot, Family::Small));
    out
}
