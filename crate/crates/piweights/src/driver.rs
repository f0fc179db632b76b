//! Batch driver: corpus ingestion, pi selection, check orchestration and
//! deterministic report assembly.  Group tasks run in parallel; the report
//! is merged in input order, so two runs over the same inputs are
//! byte-identical.

use crate::chartab::ClassFunction;
use crate::corpus;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::pi::PiConfig;
use crate::report::{
    GroupPiReport, Summary, VerificationReport, SKIP_NOT_PI_SEPARABLE, SKIP_ORDER_LIMIT,
};
use crate::workbench::Workbench;
use rayon::prelude::*;
use std::path::PathBuf;

#[derive(Clone, Debug)]
pub enum PiSpec {
    Primes(Vec<u64>),
    All,
    Each,
}

#[derive(Clone, Debug)]
pub enum GroupSource {
    Builtin,
    Named(Vec<String>),
    Dir(PathBuf),
}

#[derive(Clone, Copy, Debug)]
pub struct CheckSet {
    pub thm_a: bool,
    pub thm_b: bool,
    pub cor_c: bool,
    pub awc: bool,
    pub lemmas: bool,
    pub basic: bool,
    pub relative: bool,
}

impl CheckSet {
    pub fn all() -> CheckSet {
        CheckSet {
            thm_a: true,
            thm_b: true,
            cor_c: true,
            awc: true,
            lemmas: true,
            basic: true,
            relative: true,
        }
    }

    pub fn none() -> CheckSet {
        CheckSet {
            thm_a: false,
            thm_b: false,
            cor_c: false,
            awc: false,
            lemmas: false,
            basic: false,
            relative: false,
        }
    }

    pub fn parse(spec: &str) -> Result<CheckSet> {
        let mut set = CheckSet::none();
        for part in spec.split(',') {
            match part.trim() {
                "thmA" => set.thm_a = true,
                "thmB" => set.thm_b = true,
                "corC" => set.cor_c = true,
                "awc" => set.awc = true,
                "lemmas" => set.lemmas = true,
                "basic" => set.basic = true,
                "relative" => set.relative = true,
                "all" => set = CheckSet::all(),
                other => {
                    return Err(Error::input(format!(
                        "unknown check {:?}; known: thmA, thmB, corC, awc, lemmas, basic, relative, all",
                        other
                    )))
                }
            }
        }
        Ok(set)
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub pi: PiSpec,
    pub source: GroupSource,
    pub checks: CheckSet,
    pub limit: u128,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            pi: PiSpec::Each,
            source: GroupSource::Builtin,
            checks: CheckSet::all(),
            limit: crate::workbench::DEFAULT_ORDER_LIMIT,
            seed: 0,
        }
    }
}

fn load_groups(source: &GroupSource) -> Result<Vec<(String, PermGroup)>> {
    match source {
        GroupSource::Builtin => corpus::full_corpus(),
        GroupSource::Named(names) => {
            let mut out = Vec::new();
            for name in names {
                let path = PathBuf::from(name);
                if path.is_file() {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::input(format!("{}: {}", path.display(), e)))?;
                    out.extend(
                        corpus::parse_group_file(&text)
                            .map_err(|e| Error::input(format!("{}: {}", path.display(), e)))?,
                    );
                } else {
                    out.push((name.clone(), corpus::builtin(name)?));
                }
            }
            Ok(out)
        }
        GroupSource::Dir(dir) => {
            let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
                .map_err(|e| Error::input(format!("{}: {}", dir.display(), e)))?
                .filter_map(|entry| entry.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect();
            files.sort();
            let mut out = Vec::new();
            for path in files {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::input(format!("{}: {}", path.display(), e)))?;
                out.extend(
                    corpus::parse_group_file(&text)
                        .map_err(|e| Error::input(format!("{}: {}", path.display(), e)))?,
                );
            }
            if out.is_empty() {
                return Err(Error::input("corpus directory holds no group files"));
            }
            Ok(out)
        }
    }
}

fn pi_choices(group: &PermGroup, spec: &PiSpec) -> Result<Vec<PiConfig>> {
    match spec {
        PiSpec::Each => Ok(corpus::enumerate_pi_choices(group)),
        PiSpec::All => {
            let primes: Vec<u64> = crate::arith::factorize(group.order())
                .keys()
                .copied()
                .collect();
            Ok(vec![PiConfig::from_primes(primes)?])
        }
        PiSpec::Primes(ps) => Ok(vec![PiConfig::from_primes(ps.iter().copied())?]),
    }
}

/// G-invariant irreducible characters of the normal pi-subgroups, paired for
/// the relative checks.
fn relative_instances(
    wb: &mut Workbench,
    group: &PermGroup,
    pi: &PiConfig,
) -> Result<Vec<(PermGroup, ClassFunction)>> {
    let normals = wb.normal_subgroups(group)?.as_ref().clone();
    let mut out = Vec::new();
    for z in normals.iter().filter(|z| pi.is_pi_number(z.order())) {
        let table = wb.table(z)?;
        for lambda in table.irreducibles() {
            if crate::glauberman::is_invariant_under(lambda, group)? {
                out.push((z.clone(), lambda.clone()));
            }
        }
    }
    Ok(out)
}

fn run_one(
    name: &str,
    group: &PermGroup,
    pi: &PiConfig,
    checks: &CheckSet,
    wb: &mut Workbench,
) -> Result<GroupPiReport> {
    if group.order() > wb.limit() {
        return Ok(GroupPiReport::skipped(
            name,
            group.order(),
            pi,
            SKIP_ORDER_LIMIT,
        ));
    }
    if !wb.is_pi_separable(group, pi)? {
        return Ok(GroupPiReport::skipped(
            name,
            group.order(),
            pi,
            SKIP_NOT_PI_SEPARABLE,
        ));
    }
    let mut report = GroupPiReport {
        group: name.to_string(),
        order: group.order() as u64,
        pi: pi.primes().iter().copied().collect(),
        skipped: None,
        pi_classes: None,
        i_count: None,
        i_pi: Vec::new(),
        per_q: Vec::new(),
        corollary_c: None,
        awc: None,
        lemmas: None,
        basic: Vec::new(),
        relative: Vec::new(),
        failures: Vec::new(),
        checks_run: 0,
        checks_passed: 0,
    };
    let run_check = |ok: bool, desc: String, report: &mut GroupPiReport| {
        report.checks_run += 1;
        if ok {
            report.checks_passed += 1;
        } else {
            report.failures.push(desc);
        }
    };

    let data = wb.pi_partial_data(group, pi)?;
    report.pi_classes = Some(data.pi_classes.len());
    report.i_count = Some(data.irreducibles.len());
    report.i_pi = data
        .irreducibles
        .iter()
        .map(|m| crate::report::IpiRow {
            degree: m.degree(),
            lifts: m.lifts().iter().copied().collect(),
        })
        .collect();
    run_check(
        data.irreducibles.len() == data.pi_classes.len(),
        format!(
            "basis count |I_pi| = {} differs from pi-classes",
            data.irreducibles.len()
        ),
        &mut report,
    );

    if checks.thm_a || checks.thm_b {
        let rows = wb.per_q_rows(group, pi)?;
        for row in &rows {
            if checks.thm_a {
                run_check(
                    row.thm_a_ok,
                    format!(
                        "thmA fails at |Q| = {}: |I(G|Q)| = {} > {} = |I(N|Q)|",
                        row.q_order, row.i_g_q, row.i_n_q
                    ),
                    &mut report,
                );
                run_check(
                    row.weight_bijection_ok,
                    format!("weight bijection fails at |Q| = {}", row.q_order),
                    &mut report,
                );
            }
            if checks.thm_b {
                if let Some(eq) = row.thm_b_ok {
                    run_check(
                        eq,
                        format!(
                            "thmB fails at |Q| = {}: {} vs {}",
                            row.q_order, row.i_g_q, row.i_n_q
                        ),
                        &mut report,
                    );
                }
            }
        }
        report.per_q = rows;
    }

    if checks.cor_c {
        let row = wb.corollary_c_row(group, pi)?;
        run_check(
            row.count_ok,
            format!("corollary C(a) fails: {} vs {}", row.i_g_q, row.i_n_q),
            &mut report,
        );
        run_check(
            row.census_ok,
            format!(
                "corollary C(b) fails: |X_pi| = {} vs |Irr(N/Q)| = {}",
                row.x_pi, row.irr_n_mod_q
            ),
            &mut report,
        );
        report.corollary_c = Some(row);
    }

    if checks.awc {
        let row = wb.awc_row(group, pi)?;
        if let Some(eq) = row.ok {
            run_check(
                eq,
                format!(
                    "weight count {} differs from pi-class count {}",
                    row.weight_classes, row.pi_class_count
                ),
                &mut report,
            );
        }
        report.awc = Some(row);
    }

    if checks.lemmas {
        let summary = wb.lemma_suite(group, pi)?;
        // the suite raises on any violation; reaching here means it passed
        run_check(true, String::new(), &mut report);
        report.lemmas = Some(summary);
    }

    if checks.basic {
        let actions = wb.coprime_actions(group, pi)?;
        for (k, q) in actions {
            let action = crate::glauberman::CoprimeAction::new(k.clone(), q.clone())?;
            let pairs = wb.glauberman_map(&action)?;
            for (theta, image) in &pairs {
                run_check(
                    crate::glauberman::degree_congruence_holds(&action, theta, image)?,
                    format!(
                        "degree congruence fails for K of order {}, Q of order {}",
                        k.order(),
                        q.order()
                    ),
                    &mut report,
                );
            }
            for (theta, _) in &pairs {
                let row = wb.basic_theorem_check(group, pi, &k, &q, theta)?;
                run_check(
                    row.ok,
                    format!(
                        "count identity fails for K = {}, Q = {}, tau of degree {}",
                        row.k_order, row.q_order, row.tau_degree
                    ),
                    &mut report,
                );
                report.basic.push(row);
            }
        }
    }

    if checks.relative {
        for (z, lambda) in relative_instances(wb, group, pi)? {
            let rows = wb.relative_rows(group, pi, &z, &lambda)?;
            for row in &rows {
                run_check(
                    row.a_ok,
                    format!(
                        "relative (a) fails at |Z| = {}, |Q| = {}: {} > {}",
                        row.z_order, row.q_order, row.lhs, row.rhs
                    ),
                    &mut report,
                );
                if let Some(eq) = row.b_ok {
                    run_check(
                        eq,
                        format!(
                            "relative (b) fails at |Z| = {}, |Q| = {}",
                            row.z_order, row.q_order
                        ),
                        &mut report,
                    );
                }
            }
            report.relative.extend(rows);
        }
    }

    Ok(report)
}

/// Run the verification over the configured corpus.  Returns the report and
/// the process exit code: 0 pass, 1 verification failure, 3 resource skip.
pub fn run(config: &RunConfig) -> Result<(VerificationReport, i32)> {
    let tasks = load_groups(&config.source)?;
    let entries: Vec<Result<Vec<GroupPiReport>>> = tasks
        .par_iter()
        .map(|(name, group)| {
            let mut wb = Workbench::with_limit_and_seed(config.limit, config.seed);
            let mut out = Vec::new();
            for pi in pi_choices(group, &config.pi)? {
                let entry = match run_one(name, group, &pi, &config.checks, &mut wb) {
                    Ok(entry) => entry,
                    Err(Error::Resource(msg)) => {
                        let mut e =
                            GroupPiReport::skipped(name, group.order(), &pi, SKIP_ORDER_LIMIT);
                        e.failures.push(msg);
                        e
                    }
                    Err(other) => {
                        // theory violations and internal errors are failures
                        let mut e = GroupPiReport::skipped(name, group.order(), &pi, "error");
                        e.skipped = None;
                        e.checks_run = 1;
                        e.failures.push(other.to_string());
                        e
                    }
                };
                out.push(entry);
            }
            Ok(out)
        })
        .collect();

    let mut flat = Vec::new();
    for group_entries in entries {
        flat.extend(group_entries?);
    }
    let mut summary = Summary::default();
    for e in &flat {
        summary.checks_run += e.checks_run;
        summary.passed += e.checks_passed;
        summary.failed += e.checks_run - e.checks_passed;
        if e.skipped.is_some() {
            summary.skipped += 1;
        }
    }
    let report = VerificationReport {
        schema: 1,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        entries: flat,
        summary,
    };
    let exit = if report.summary.failed > 0 {
        1
    } else if report
        .entries
        .iter()
        .any(|e| e.skipped.as_deref() == Some(SKIP_ORDER_LIMIT))
    {
        3
    } else {
        0
    };
    Ok((report, exit))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checkset_parsing() {
        let set = CheckSet::parse("thmA,corC").unwrap();
        assert!(set.thm_a && set.cor_c);
        assert!(!set.thm_b && !set.lemmas);
        assert!(CheckSet::parse("bogus").is_err());
        let all = CheckSet::parse("all").unwrap();
        assert!(all.relative && all.basic);
    }

    #[test]
    fn s3_single_group_run() {
        let config = RunConfig {
            pi: PiSpec::Primes(vec![3]),
            source: GroupSource::Named(vec!["S3".to_string()]),
            checks: CheckSet::all(),
            ..RunConfig::default()
        };
        let (report, exit) = run(&config).unwrap();
        assert_eq!(exit, 0, "failures: {:?}", report.entries[0].failures);
        assert_eq!(report.entries.len(), 1);
        let entry = &report.entries[0];
        assert_eq!(entry.pi_classes, Some(2));
        assert_eq!(entry.i_count, Some(2));
        assert_eq!(entry.per_q.len(), 2);
        for row in &entry.per_q {
            assert_eq!((row.i_g_q, row.i_n_q), (1, 1));
        }
        assert_eq!(report.summary.failed, 0);
    }

    #[test]
    fn a5_is_skipped_for_partial_pi() {
        let config = RunConfig {
            pi: PiSpec::Primes(vec![2]),
            source: GroupSource::Named(vec!["A5".to_string()]),
            checks: CheckSet::all(),
            ..RunConfig::default()
        };
        let (report, exit) = run(&config).unwrap();
        assert_eq!(exit, 0);
        assert_eq!(
            report.entries[0].skipped.as_deref(),
            Some("not_pi_separable")
        );
        assert_eq!(report.summary.skipped, 1);
    }

    #[test]
    fn determinism_of_reports() {
        let config = RunConfig {
            pi: PiSpec::Each,
            source: GroupSource::Named(vec!["S4".to_string()]),
            checks: CheckSet::parse("thmA,thmB,corC,awc").unwrap(),
            ..RunConfig::default()
        };
        let (r1, _) = run(&config).unwrap();
        let (r2, _) = run(&config).unwrap();
        let s1 = serde_json::to_string(&r1).unwrap();
        let s2 = serde_json::to_string(&r2).unwrap();
        assert_eq!(s1, s2);
    }

    #[test]
    fn order_limit_skip_and_exit_code() {
        let config = RunConfig {
            pi: PiSpec::Primes(vec![2]),
            source: GroupSource::Named(vec!["S4".to_string()]),
            checks: CheckSet::all(),
            limit: 10,
            ..RunConfig::default()
        };
        let (report, exit) = run(&config).unwrap();
        assert_eq!(exit, 3);
        assert_eq!(
            report.entries[0].skipped.as_deref(),
            Some("order_limit_exceeded")
        );
    }
}
