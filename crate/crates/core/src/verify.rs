//! The property suite behind `commclass verify`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::catalog::{catalog, AnyQuotient};
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::frobenius::{proposition3_check, weak_hypothesis_observation};
use crate::gl::{coset_table, coset_table_brute_force, gl4_counterexample, sl2_cxi_matching, split_predicate_crosscheck};
use crate::hall::{hall_audit, power_map_class_bijection, theorem1_matching, theorem2_partition, DEFAULT_SUBSET_CAP};
use crate::partitions::{counting_identity, proposition1_crosscheck, sym4_counterexample};
use crate::quotient::{gcd, is_prime, QuotientData};
use crate::relation::{central_classes, coset_profiles, split_flags};
use crate::with_quotient;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Matching,
    Sym,
    Gl2,
    Gl4,
    Frobenius,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Matching, Suite::Sym, Suite::Gl2, Suite::Gl4, Suite::Frobenius];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Matching => "matching",
            Suite::Sym => "sym",
            Suite::Gl2 => "gl2",
            Suite::Gl4 => "gl4",
            Suite::Frobenius => "frobenius",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub claim: String,
    pub subject: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub suites: Vec<Suite>,
    /// Field orders for the `gl2` suite.
    pub gl2_q: Vec<u32>,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            suites: Suite::ALL.to_vec(),
            gl2_q: vec![3, 5, 7, 9, 11],
            seed: 0,
        }
    }
}

struct Recorder {
    out: Vec<CheckOutcome>,
    suite: Suite,
}

impl Recorder {
    fn push(&mut self, claim: &str, subject: impl Into<String>, result: Result<String>) {
        let (pass, detail) = match result {
            Ok(d) => (true, d),
            Err(e) => (false, e.to_string()),
        };
        self.out.push(CheckOutcome {
            suite: self.suite,
            claim: claim.to_string(),
            subject: subject.into(),
            pass,
            detail,
        });
    }
}

fn check(ok: bool, pass: String, fail: impl FnOnce() -> String) -> Result<String> {
    if ok {
        Ok(pass)
    } else {
        Err(Error::CrosscheckFailure(fail()))
    }
}

fn matching_checks<E: GroupElement>(rec: &mut Recorder, name: &str, q: &QuotientData<E>, seed: u64) {
    let n = q.quotient_order();
    let g = q.group();

    rec.push(
        "perfect commuting matching onto the generating coset",
        name,
        (0..n)
            .map(|x| theorem1_matching(q, x).map(|m| m.pairs.len()))
            .collect::<Result<Vec<_>>>()
            .map(|sizes| format!("pairs per coset {sizes:?}")),
    );

    rec.push(
        "equal non-split counts across cosets",
        name,
        coset_profiles(q).map(|p| format!("{} non-split per coset", p[0].non_split_count)),
    );

    let flags = split_flags(q);
    let right = q.classes_in_coset(1 % n);
    let audits: Vec<_> = (0..n)
        .map(|x| {
            let left: Vec<usize> = q.classes_in_coset(x).into_iter().filter(|&c| !flags[c]).collect();
            hall_audit(g.commuting_relation(), &left, &right, DEFAULT_SUBSET_CAP, seed)
        })
        .collect();
    let audited: usize = audits.iter().map(|a| a.audited).sum();
    rec.push(
        "Hall condition on non-split classes",
        name,
        check(
            audits.iter().all(|a| a.pass),
            format!("{audited} subsets audited"),
            || "Hall violation found".to_string(),
        ),
    );

    if is_prime(n) {
        rec.push(
            "prime-index partition into commuting tuples",
            name,
            theorem2_partition(q).map(|t| format!("{} tuples", t.len())),
        );
    }

    let order = g.order();
    let cs: Vec<i64> = (1..).filter(|&c| gcd(c as usize, order) == 1).take(4).collect();
    let lemma: Result<String> = cs
        .iter()
        .try_for_each(|&c| {
            let d = crate::hall::inverse_mod(c, order as u64).expect("coprime") as i64;
            for x in 0..n {
                let forward = power_map_class_bijection(q, c, x)?;
                for (src, img) in forward {
                    let back = g.classes().class_of(g.pow(g.classes().class(img).rep, d));
                    if back != src {
                        return Err(Error::CrosscheckFailure(format!("c = {c}: class {src} returns as {back}")));
                    }
                }
            }
            Ok(())
        })
        .map(|_| format!("c in {cs:?}"));
    rec.push("power map is a class bijection", name, lemma);

    let brute: Vec<usize> = g
        .classes()
        .classes()
        .iter()
        .filter(|c| g.all().into_iter().all(|y| g.commute(c.rep, y)))
        .map(|c| c.id)
        .collect();
    rec.push(
        "central classes are the singleton classes of the centre",
        name,
        central_classes(g).and_then(|c| {
            check(c == brute, format!("{} central classes", c.len()), || {
                format!("{c:?} vs brute force {brute:?}")
            })
        }),
    );
}

fn frobenius_checks<E: GroupElement>(rec: &mut Recorder, name: &str, q: &QuotientData<E>) {
    if is_prime(q.quotient_order()) {
        rec.push(
            "all non-identity classes in H split iff Frobenius with kernel H",
            name,
            proposition3_check(q).map(|r| format!("frobenius = {}, kernel nilpotent = {}", r.is_frobenius, r.kernel_nilpotent)),
        );
    }
    if q.quotient_order() == 2 {
        let obs = weak_hypothesis_observation(q);
        if obs.hypothesis_holds {
            rec.push(
                "observation: index 2, non-central classes in H split, H nilpotent",
                name,
                check(obs.kernel_nilpotent, "H nilpotent".to_string(), || {
                    "counterexample: hypothesis holds but H is not nilpotent".to_string()
                }),
            );
        }
    }
}

/// Runs the selected suites; outcomes come back in a fixed order.
pub fn run(opts: &VerifyOptions) -> Vec<CheckOutcome> {
    let mut rec = Recorder {
        out: Vec::new(),
        suite: Suite::Matching,
    };
    let wants = |s: Suite| opts.suites.contains(&s);

    if wants(Suite::Matching) || wants(Suite::Frobenius) {
        for entry in catalog() {
            let name = entry.name();
            let q = match entry.build() {
                Ok(q) => q,
                Err(e) => {
                    rec.push("catalog entry builds", name, Err(e));
                    continue;
                }
            };
            if wants(Suite::Matching) {
                rec.suite = Suite::Matching;
                with_quotient!(&q, q => matching_checks(&mut rec, &name, q, opts.seed));
            }
            if wants(Suite::Frobenius) {
                rec.suite = Suite::Frobenius;
                with_quotient!(&q, q => frobenius_checks(&mut rec, &name, q));
            }
        }
    }

    if wants(Suite::Sym) {
        rec.suite = Suite::Sym;
        for n in 1..=8 {
            rec.push(
                "common coarsening iff commuting classes",
                format!("Sym({n})"),
                proposition1_crosscheck(n).map(|r| format!("{} pairs", r.pairs_checked)),
            );
        }
        rec.push(
            "p_even = p_odd + d_o",
            "n = 1..60",
            (1..=60).try_for_each(|n| counting_identity(n).map(|_| ())).map(|_| "60 rows".to_string()),
        );
        for n in 1..=7usize {
            let res = crate::catalog::GroupSpec::AltInSym(n)
                .build(&crate::catalog::SubgroupSpec::Alt, crate::group::DEFAULT_CAP)
                .and_then(|q| match q {
                    AnyQuotient::Perm(q) => sym_split_agreement(&q),
                    AnyQuotient::Matrix(_) => unreachable!(),
                });
            rec.push("odd distinct parts iff split", format!("Sym({n})/Alt({n})"), res);
        }
        rec.push(
            "commuting double transpositions share no z",
            "Sym(4)",
            sym4_counterexample().and_then(|r| {
                check(
                    r.commute && r.witness.is_none() && r.control_witness.is_some(),
                    format!("{} candidates checked", r.z_checked),
                    || format!("{r:?}"),
                )
            }),
        );
    }

    if wants(Suite::Gl2) {
        rec.suite = Suite::Gl2;
        for &q in &opts.gl2_q {
            let subject = format!("GL2({q})");
            if q % 2 == 1 {
                rec.push(
                    "SL2 / C_xi type table",
                    subject.clone(),
                    coset_table(q).and_then(|t| {
                        check(t.verified, format!("sl {:?}, c_xi {:?}", t.sl, t.c_xi), || format!("{t:?}"))
                    }),
                );
                if q <= 7 {
                    rec.push(
                        "type table by brute force",
                        subject.clone(),
                        coset_table_brute_force(q).and_then(|t| {
                            check(t.verified, format!("sl {:?}, c_xi {:?}", t.sl, t.c_xi), || format!("{t:?}"))
                        }),
                    );
                }
            }
            rec.push(
                "explicit SL2 / C_xi matching",
                subject.clone(),
                sl2_cxi_matching(q).map(|m| format!("{} verified pairs", m.pairs.len())),
            );
            if q <= 9 {
                rec.push(
                    "divisor split criterion",
                    subject,
                    split_predicate_crosscheck(q).map(|n| format!("{n} classes")),
                );
            }
        }
    }

    if wants(Suite::Gl4) {
        rec.suite = Suite::Gl4;
        rec.push(
            "commuting unipotents (3,1), (2,2) lie in no common cyclic algebra",
            "GL4(2)",
            gl4_counterexample().and_then(|r| {
                check(
                    r.commuting_y.is_some()
                        && r.scan.algebras_meeting_both == 0
                        && r.control.algebras_meeting_both > 0,
                    format!("{} candidates checked", r.scan.z_checked),
                    || format!("{r:?}"),
                )
            }),
        );
    }
    rec.out
}

fn sym_split_agreement(q: &QuotientData<crate::perm::Permutation>) -> Result<String> {
    let g = q.group();
    let flags = split_flags(q);
    for c in g.classes().classes() {
        let lambda = crate::partitions::cycle_type(g.element(c.rep));
        let predicted = q.in_h(c.rep) && crate::partitions::classify(&lambda).in_d_o && g.order() > 1;
        if predicted != flags[c.id] {
            return Err(Error::CrosscheckFailure(format!(
                "cycle type {lambda}: criterion {predicted}, orbit {}",
                flags[c.id]
            )));
        }
    }
    Ok(format!("{} classes", g.classes().len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn sym_suite_passes() {
        let opts = VerifyOptions {
            suites: vec![Suite::Sym],
            ..Default::default()
        };
        let out = run(&opts);
        assert!(out.iter().all(|o| o.pass && o.suite == Suite::Sym), "{out:#?}");
    }
}
