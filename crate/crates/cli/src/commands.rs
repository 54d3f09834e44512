use std::fmt::Write;

use anyhow::{bail, Result};
use serde::Serialize;

use commuting_classes::catalog::{AnyQuotient, GroupSpec};
use commuting_classes::frobenius::{proposition3_check, weak_hypothesis_observation};
use commuting_classes::gl::gl2::{coset_table_brute_force, coset_table_formula};
use commuting_classes::gl::{coset_table, GaloisField, Gl2Type};
use commuting_classes::partitions::{classify, counting_identity, sym_bijection_f};
use commuting_classes::verify::{self, VerifyOptions};
use commuting_classes::{
    coarsenings, common_coarsening, conjecture_explorer, partitions, split_flags, theorem1_matching,
    theorem2_partition, to_dot, verify_class_matching, with_quotient, GroupElement, QuotientData,
};

use crate::{unsupported, Args, Command, Format};

type Output = (String, bool);

fn json<T: Serialize>(value: &T) -> Result<Output> {
    Ok((serde_json::to_string_pretty(value)? + "\n", true))
}

fn build(args: &Args, group: &GroupSpec) -> Result<AnyQuotient> {
    Ok(group.build(&args.subgroup(), args.cap)?)
}

pub fn run(args: &Args) -> Result<Output> {
    match &args.command {
        Command::Classes { group } => {
            let q = build(args, group)?;
            with_quotient!(&q, q => classes(args, q))
        }
        Command::Relation { group } => {
            let q = build(args, group)?;
            with_quotient!(&q, q => relation(args, q))
        }
        Command::Match { group } => {
            let q = build(args, group)?;
            with_quotient!(&q, q => matching(args, q))
        }
        Command::Partition { group } => {
            let q = build(args, group)?;
            with_quotient!(&q, q => partition(args, q))
        }
        Command::Coarsen { lambda, mu } => coarsen(args, lambda, mu.as_ref()),
        Command::SymTable { n } => sym_table(args, *n),
        Command::Gl2Table { q } => gl2_table(args, q),
        Command::Frobenius { group } => {
            let q = build(args, group)?;
            with_quotient!(&q, q => frobenius(args, q))
        }
        Command::Explore { group, to } => {
            let q = build(args, group)?;
            with_quotient!(&q, q => explore(args, q, *to))
        }
        Command::Verify { all, only, q } => verify_cmd(args, *all, only, q),
    }
}

#[derive(Serialize)]
struct ClassRow {
    id: usize,
    rep: String,
    size: usize,
    coset: usize,
    split: bool,
}

fn class_rows<E: GroupElement>(q: &QuotientData<E>) -> Vec<ClassRow> {
    let g = q.group();
    let flags = split_flags(q);
    g.classes()
        .classes()
        .iter()
        .map(|c| ClassRow {
            id: c.id,
            rep: g.render(c.rep),
            size: c.size(),
            coset: q.exponent_of(c.rep),
            split: flags[c.id],
        })
        .collect()
}

fn classes<E: GroupElement>(args: &Args, q: &QuotientData<E>) -> Result<Output> {
    let rows = class_rows(q);
    match args.format_or(Format::Tsv) {
        Format::Tsv => {
            let mut out = String::from("id\trep\tsize\tcoset\tsplit\n");
            for r in rows {
                writeln!(out, "{}\t{}\t{}\t{}\t{}", r.id, r.rep, r.size, r.coset, r.split)?;
            }
            Ok((out, true))
        }
        Format::Json => json(&serde_json::json!({
            "group_order": q.group().order(),
            "quotient_order": q.quotient_order(),
            "classes": rows,
        })),
        f => unsupported("classes", f),
    }
}

fn relation<E: GroupElement>(args: &Args, q: &QuotientData<E>) -> Result<Output> {
    let g = q.group();
    match args.format_or(Format::Dot) {
        Format::Dot => Ok((to_dot(g, Some(q)), true)),
        Format::Json => {
            let rel = g.commuting_relation();
            let edges: Vec<[usize; 2]> = (0..rel.rows())
                .flat_map(|i| (i..rel.cols()).map(move |j| [i, j]))
                .filter(|&[i, j]| rel.get(i, j))
                .collect();
            json(&serde_json::json!({ "classes": class_rows(q), "edges": edges }))
        }
        Format::Tsv => {
            let rel = g.commuting_relation();
            let mut out = String::from("class_c\tclass_d\n");
            for i in 0..rel.rows() {
                for j in i..rel.cols() {
                    if rel.get(i, j) {
                        writeln!(out, "{i}\t{j}")?;
                    }
                }
            }
            Ok((out, true))
        }
    }
}

fn matching<E: GroupElement>(args: &Args, q: &QuotientData<E>) -> Result<Output> {
    let m = theorem1_matching(q, args.coset)?;
    let report = m.report(q, verify_class_matching(q, &m));
    match args.format_or(Format::Json) {
        Format::Json => json(&report),
        Format::Tsv => {
            let mut out = String::from("left_rep\tright_rep\twitness_left\twitness_right\n");
            for p in &report.pairs {
                writeln!(out, "{}\t{}\t{}\t{}", p.left_rep, p.right_rep, p.witness[0], p.witness[1])?;
            }
            Ok((out, report.verified))
        }
        f => unsupported("match", f),
    }
}

fn partition<E: GroupElement>(args: &Args, q: &QuotientData<E>) -> Result<Output> {
    let g = q.group();
    let tuples = theorem2_partition(q)?;
    #[derive(Serialize)]
    struct TupleReport {
        classes: Vec<usize>,
        reps: Vec<String>,
        exponents: Vec<u64>,
    }
    let reports: Vec<TupleReport> = tuples
        .iter()
        .map(|t| TupleReport {
            classes: t.classes.clone(),
            reps: t.reps.iter().map(|&r| g.render(r)).collect(),
            exponents: t.exponents.clone(),
        })
        .collect();
    match args.format_or(Format::Json) {
        Format::Json => json(&serde_json::json!({
            "quotient_order": q.quotient_order(),
            "tuples": reports,
        })),
        Format::Tsv => {
            let mut out = String::from("tuple\tcoset\tclass\trep\n");
            for (i, t) in reports.iter().enumerate() {
                for (m, (c, r)) in t.classes.iter().zip(&t.reps).enumerate() {
                    writeln!(out, "{i}\t{m}\t{c}\t{r}")?;
                }
            }
            Ok((out, true))
        }
        f => unsupported("partition", f),
    }
}

fn coarsen(
    args: &Args,
    lambda: &commuting_classes::Partition,
    mu: Option<&commuting_classes::Partition>,
) -> Result<Output> {
    let fmt = args.format_or(Format::Tsv);
    match (mu, fmt) {
        (None, Format::Tsv) => {
            let mut out = String::new();
            for p in coarsenings(lambda) {
                writeln!(out, "{p}")?;
            }
            Ok((out, true))
        }
        (None, Format::Json) => json(&serde_json::json!({
            "partition": lambda,
            "coarsenings": coarsenings(lambda),
        })),
        (Some(mu), Format::Tsv) => {
            let common = common_coarsening(lambda, mu)?;
            Ok((common.map_or("none".to_string(), |p| p.to_string()) + "\n", true))
        }
        (Some(mu), Format::Json) => json(&serde_json::json!({
            "lambda": lambda,
            "mu": mu,
            "common_coarsening": common_coarsening(lambda, mu)?,
        })),
        (_, f) => unsupported("coarsen", f),
    }
}

fn sym_table(args: &Args, n: u32) -> Result<Output> {
    let counts = counting_identity(n)?;
    let f = sym_bijection_f(n)?;
    #[derive(Serialize)]
    struct Row {
        partition: String,
        even: bool,
        distinct_odd: bool,
        split: bool,
        pairs_with: Option<String>,
    }
    let rows: Vec<Row> = partitions(n)
        .into_iter()
        .map(|p| {
            let c = classify(&p);
            let partner = f
                .iter()
                .find_map(|(a, b)| {
                    if *a == p {
                        Some(b)
                    } else if *b == p {
                        Some(a)
                    } else {
                        None
                    }
                })
                .map(ToString::to_string);
            Row {
                partition: p.to_string(),
                even: c.in_p_even,
                distinct_odd: c.in_d_o,
                split: c.in_d_o && n > 1,
                pairs_with: partner,
            }
        })
        .collect();
    match args.format_or(Format::Tsv) {
        Format::Tsv => {
            let mut out = String::from("partition\teven\tdistinct_odd\tsplit\tpairs_with\n");
            for r in &rows {
                let partner = r.pairs_with.as_deref().unwrap_or("-");
                writeln!(out, "{}\t{}\t{}\t{}\t{}", r.partition, r.even, r.distinct_odd, r.split, partner)?;
            }
            writeln!(out, "# p_even={} p_odd={} d_o={}", counts.p_even, counts.p_odd, counts.d_o)?;
            Ok((out, true))
        }
        Format::Json => json(&serde_json::json!({ "n": n, "counts": counts, "rows": rows })),
        f => unsupported("sym-table", f),
    }
}

fn gl2_table(args: &Args, qs: &[u32]) -> Result<Output> {
    #[derive(Serialize)]
    struct Row {
        q: u32,
        kind: Gl2Type,
        sl: usize,
        c_xi: usize,
        formula_sl: usize,
        formula_c_xi: usize,
        verified: bool,
    }
    let mut rows = Vec::new();
    for &q in qs {
        let table = coset_table(q)?;
        // brute force is cheap enough up to q = 9
        let brute = if q <= 9 { Some(coset_table_brute_force(q)?) } else { None };
        let (fsl, fxi) = coset_table_formula(q);
        for kind in Gl2Type::ALL {
            let i = kind as usize;
            let agrees = brute.as_ref().is_none_or(|b| b.sl[i] == table.sl[i] && b.c_xi[i] == table.c_xi[i]);
            rows.push(Row {
                q,
                kind,
                sl: table.sl[i],
                c_xi: table.c_xi[i],
                formula_sl: fsl[i],
                formula_c_xi: fxi[i],
                verified: agrees && table.sl[i] == fsl[i] && table.c_xi[i] == fxi[i],
            });
        }
    }
    let ok = rows.iter().all(|r| r.verified);
    match args.format_or(Format::Tsv) {
        Format::Tsv => {
            let mut out = String::from("q\ttype\tsl\tc_xi\tformula_sl\tformula_c_xi\tverified\n");
            for r in &rows {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.q, r.kind, r.sl, r.c_xi, r.formula_sl, r.formula_c_xi, r.verified
                )?;
            }
            Ok((out, ok))
        }
        Format::Json => json(&rows).map(|(s, _)| (s, ok)),
        f => unsupported("gl2-table", f),
    }
}

fn frobenius<E: GroupElement>(args: &Args, q: &QuotientData<E>) -> Result<Output> {
    let report = proposition3_check(q)?;
    let weak = weak_hypothesis_observation(q);
    match args.format_or(Format::Json) {
        Format::Json => json(&serde_json::json!({ "report": report, "weak_hypothesis": weak })),
        Format::Tsv => {
            let mut out = String::from("all_nonidentity_split\tis_frobenius\tkernel_nilpotent\tupper_central_series\n");
            let series: Vec<String> = report.upper_central_series_lengths.iter().map(ToString::to_string).collect();
            writeln!(
                out,
                "{}\t{}\t{}\t{}",
                report.all_nonidentity_split,
                report.is_frobenius,
                report.kernel_nilpotent,
                series.join(",")
            )?;
            Ok((out, true))
        }
        f => unsupported("frobenius", f),
    }
}

fn explore<E: GroupElement>(args: &Args, q: &QuotientData<E>, to: usize) -> Result<Output> {
    let outcome = conjecture_explorer(q, args.coset, to);
    match args.format_or(Format::Json) {
        Format::Json => json(&serde_json::json!({
            "experimental": outcome.experimental,
            "coset_x": outcome.coset_x,
            "coset_y": outcome.coset_y,
            "left_count": outcome.left_count,
            "right_count": outcome.right_count,
            "status": outcome.status,
            "pairs": outcome.matching.as_ref().map(|m| m.report(q, true).pairs),
        })),
        Format::Tsv => Ok((
            format!(
                "experimental\tcoset_x\tcoset_y\tleft\tright\tstatus\n{}\t{}\t{}\t{}\t{}\t{}\n",
                outcome.experimental,
                outcome.coset_x,
                outcome.coset_y,
                outcome.left_count,
                outcome.right_count,
                outcome.status
            ),
            true,
        )),
        f => unsupported("explore", f),
    }
}

fn verify_cmd(args: &Args, all: bool, only: &[verify::Suite], qs: &[u32]) -> Result<Output> {
    if all && !only.is_empty() {
        bail!("--all and --only are exclusive");
    }
    let mut opts = VerifyOptions {
        seed: args.seed,
        ..Default::default()
    };
    if !only.is_empty() {
        opts.suites = only.to_vec();
    }
    if !qs.is_empty() {
        for &q in qs {
            GaloisField::of_order(q)?;
        }
        opts.gl2_q = qs.to_vec();
    }
    let outcomes = verify::run(&opts);
    let ok = outcomes.iter().all(|o| o.pass);
    match args.format_or(Format::Tsv) {
        Format::Tsv => {
            let mut out = String::from("result\tsuite\tclaim\tsubject\tdetail\n");
            for o in &outcomes {
                let result = if o.pass { "PASS" } else { "FAIL" };
                writeln!(out, "{result}\t{}\t{}\t{}\t{}", o.suite, o.claim, o.subject, o.detail)?;
            }
            let passed = outcomes.iter().filter(|o| o.pass).count();
            writeln!(out, "# {passed}/{} checks passed", outcomes.len())?;
            Ok((out, ok))
        }
        Format::Json => json(&serde_json::json!({ "pass": ok, "checks": outcomes })).map(|(s, _)| (s, ok)),
        f => unsupported("verify", f),
    }
}
