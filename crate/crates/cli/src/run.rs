//! Task execution and suite running.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use secantcat::multisym::{self, ConfigRing, Outcome};
use secantcat::rank3::{self, Rank3Certificate, Rank3Family};
use secantcat::secants::{verify_determinantal, SecantOptions};
use secantcat::sections::{model_p1, model_veronese, SectionModel};
use secantcat::text::write_ideal_file;
use secantcat::{Budget, Error, Result, ScalarMode, Verdict};

use crate::certificate::{worst, Certificate, EXIT_INVALID, EXIT_OK};
use crate::spec::{ModelSpec, TaskKind, TaskSpec};

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    pub timings: bool,
}

/// A finished task: its certificate and, for rank-3 tasks, the family as an ideal file.
#[derive(Debug, Clone)]
pub struct TaskOutput {
    pub certificate: Certificate,
    pub family_file: Option<String>,
}

struct Check {
    name: &'static str,
    verdict: Verdict,
    witness: Option<String>,
}

fn check(name: &'static str, verdict: Verdict, witness: Option<String>) -> Check {
    Check { name, verdict, witness }
}

fn names(kind: &TaskKind) -> &'static [&'static str] {
    match kind {
        TaskKind::CheckDiagonal { .. } => &["containment", "equal"],
        TaskKind::MapPoly { .. } => &["products_equal_power", "power_equal_lower_power"],
        TaskKind::ProductTriple { .. } => &["all_members"],
        TaskKind::SecantVerify { .. } => &["minors_contained", "equal", "degree_k1_empty", "generated_in_degree_k2"],
        TaskKind::Rank3Veronese { .. } | TaskKind::Rank3Ideal { .. } => {
            &["members_in_ideal", "ranks_at_most_3", "spans2", "generates"]
        }
    }
}

fn build_model(m: &ModelSpec) -> Result<SectionModel> {
    match *m {
        ModelSpec::P1 { dega, degb } => Ok(model_p1(dega, degb)),
        ModelSpec::Veronese { n, d1, d2 } => model_veronese(n, d1, d2),
    }
}

fn config(n: usize, d: usize, mode: ScalarMode) -> Result<ConfigRing> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidArgument("n and d must be positive".into()));
    }
    ConfigRing::new(n, d, mode)
}

fn diagonal_checks(n: usize, d: usize, dmax: Option<u32>, mode: ScalarMode, budget: Budget) -> Result<(serde_json::Value, Vec<Check>)> {
    let cfg = config(n, d, mode)?;
    let dmax = dmax.unwrap_or_else(|| multisym::default_dmax(&cfg));
    let cert = multisym::verify_jd_equals_diagonal(&cfg, dmax, budget)?;
    let containment = if cert.checks.is_empty() {
        match &cert.outcome {
            Outcome::Inconclusive { reason } => Verdict::Inconclusive(reason.clone()),
            Outcome::Success { .. } => Verdict::Inconclusive("no truncation computed".into()),
        }
    } else {
        Verdict::from_bool(cert.containment)
    };
    let last_hash = cert.checks.last().map(|c| format!("D={};J={}", c.truncation, c.truncation_hash));
    let equal = match &cert.outcome {
        Outcome::Success { .. } => Verdict::True,
        Outcome::Inconclusive { reason } => Verdict::Inconclusive(reason.clone()),
    };
    let diag = cert.diagonal_gb_hash.clone().or_else(|| cert.diagonal_hash.clone());
    let checks = vec![
        check("containment", containment, last_hash.clone()),
        check("equal", equal, last_hash.map(|h| format!("{h};I={}", diag.unwrap_or_default()))),
    ];
    Ok((serde_json::to_value(&cert).unwrap(), checks))
}

fn mappoly_checks(n: usize, d: usize, ell: u32, emax: u32, mode: ScalarMode) -> Result<(serde_json::Value, Vec<Check>)> {
    if ell == 0 {
        return Err(Error::InvalidArgument("ell must be positive".into()));
    }
    let cfg = config(n, d, mode)?;
    let cert = multisym::verify_mappoly(&cfg, ell, emax)?;
    let products: Vec<String> = cert.degrees.iter().map(|g| format!("{}:{}", g.degree, g.products_hash)).collect();
    let powers: Vec<String> = cert.degrees.iter().map(|g| format!("{}:{}", g.degree, g.power_hash)).collect();
    let checks = vec![
        check(
            "products_equal_power",
            Verdict::from_bool(cert.degrees.iter().all(|g| g.products_equal_power)),
            Some(products.join(",")),
        ),
        check(
            "power_equal_lower_power",
            Verdict::from_bool(cert.degrees.iter().all(|g| g.power_equal_lower_power)),
            Some(powers.join(",")),
        ),
    ];
    Ok((serde_json::to_value(&cert).unwrap(), checks))
}

fn triple_checks(n: usize, dmax: Option<u32>, mode: ScalarMode, budget: Budget) -> Result<(serde_json::Value, Vec<Check>)> {
    let cfg = config(n, 3, mode)?;
    let dmax = dmax.unwrap_or_else(|| multisym::default_dmax(&cfg));
    let cert = multisym::verify_product_triple(&cfg, dmax, budget)?;
    let verdict = if cert.all_members {
        Verdict::True
    } else {
        Verdict::Inconclusive(
            cert.inconclusive_reason.clone().unwrap_or_else(|| format!("some products outside J^(D) for D <= {dmax}")),
        )
    };
    let witness = cert.truncation_hashes.last().map(|(dd, h)| format!("D={dd};J={h}"));
    Ok((serde_json::to_value(&cert).unwrap(), vec![check("all_members", verdict, witness)]))
}

fn rank3_checks(cert: &Rank3Certificate) -> Vec<Check> {
    let fam = Some(format!("family={}", cert.family_hash));
    let gb = cert.ideal_gb_hash.as_ref().map(|h| format!("family={};gb={h}", cert.family_hash));
    vec![
        check("members_in_ideal", cert.members_in_ideal.clone(), gb.clone()),
        check("ranks_at_most_3", cert.ranks_at_most_3.clone(), Some(format!("max_rank={}", cert.max_rank))),
        check("spans2", cert.spans2.clone(), fam.map(|f| format!("{f};dim={}", cert.degree2_dim))),
        check("generates", cert.generates.clone(), gb),
    ]
}

/// The family as an ideal file, one origin comment per member.
pub fn family_file(family: &Rank3Family) -> String {
    let comments: Vec<String> = family
        .members
        .iter()
        .enumerate()
        .map(|(i, m)| format!("member {i} rank {} origin {}", m.rank, serde_json::to_string(&m.origin).unwrap()))
        .collect();
    write_ideal_file(&family.ring, &family.polys(), &comments)
}

/// Budget errors become inconclusive checks; others propagate.
fn soften(kind: &TaskKind, r: Result<(serde_json::Value, Vec<Check>)>) -> Result<(serde_json::Value, Vec<Check>)> {
    match r {
        Err(e) if e.is_budget() => {
            let reason = e.to_string();
            let checks = names(kind).iter().map(|n| check(n, Verdict::Inconclusive(reason.clone()), None)).collect();
            Ok((serde_json::json!({ "aborted": reason }), checks))
        }
        r => r,
    }
}

/// Runs one task. Errors other than exhausted budgets mean an invalid task.
pub fn run_task(spec: &TaskSpec, opts: RunOptions) -> Result<TaskOutput> {
    spec.mode.validate()?;
    let start = Instant::now();
    let budget = spec.budget.to_budget();
    let mut cert = Certificate::new(spec);
    let mut timings = BTreeMap::new();
    let mut family_file_text = None;

    match &spec.kind {
        TaskKind::SecantVerify { model, k } => {
            let m = build_model(model)?;
            let sopts = SecantOptions {
                mode: ScalarMode::Rational,
                budget,
                screen_prime: spec.mode.screen,
                screen_only: !spec.mode.confirm,
            };
            let sc = verify_determinantal(&m, *k, sopts)?;
            let verdicts = sc.verdicts();
            let run = sc.confirm.as_ref().or(sc.screen.as_ref());
            let gb = run.and_then(|r| r.secant_gb_hash.clone()).map(|h| format!("secant_gb={h}"));
            let minors = run.map(|r| format!("minors={}", r.minors_hash));
            let both = match (&gb, &minors) {
                (Some(g), Some(m)) => Some(format!("{g};{m}")),
                _ => None,
            };
            let k1 = run.and_then(|r| r.degree_k1_dim).map(|d| format!("dim_{}={d}", k + 1));
            let screen_note = |v: Verdict, screened: Option<&Verdict>| match (v, screened, spec.mode.confirm) {
                (Verdict::Inconclusive(_), Some(s), false) => {
                    Verdict::Inconclusive(format!("screen-only run over FP:{}; screened verdict {}", spec.mode.screen.unwrap(), s.label()))
                }
                (v, _, _) => v,
            };
            let sv = sc.screen.as_ref().map(|r| &r.verdicts);
            cert.record("minors_contained", screen_note(verdicts.minors_contained, sv.map(|s| &s.minors_contained)), both.clone());
            cert.record("equal", screen_note(verdicts.equal, sv.map(|s| &s.equal)), both);
            cert.record("degree_k1_empty", screen_note(verdicts.degree_k1_empty, sv.map(|s| &s.degree_k1_empty)), k1);
            cert.record(
                "generated_in_degree_k2",
                screen_note(verdicts.generated_in_degree_k2, sv.map(|s| &s.generated_in_degree_k2)),
                gb,
            );
            if let Some(r) = &sc.screen {
                timings.insert("screen".to_string(), r.seconds);
            }
            if let Some(r) = &sc.confirm {
                timings.insert("confirm".to_string(), r.seconds);
            }
            cert.details = serde_json::to_value(&sc).unwrap();
        }
        TaskKind::Rank3Veronese { .. } | TaskKind::Rank3Ideal { .. } => {
            if !spec.mode.confirm {
                return Err(Error::ModeUnsupported("rank-3 tasks run over QQ only".into()));
            }
            let r = match &spec.kind {
                TaskKind::Rank3Veronese { n } => rank3::certify_veronese(*n, spec.seed, budget),
                TaskKind::Rank3Ideal { model: ModelSpec::P1 { dega, degb } } => rank3::certify_p1(*dega, *degb, spec.seed, budget),
                TaskKind::Rank3Ideal { model: ModelSpec::Veronese { n, d1: 1, d2: 1 } } => {
                    rank3::certify_veronese(*n, spec.seed, budget)
                }
                _ => return Err(Error::InvalidArgument("rank-3 ideals are built for p1 and veronese with d1 = d2 = 1".into())),
            };
            match r {
                Ok((fam, rc)) => {
                    for c in rank3_checks(&rc) {
                        cert.record(c.name, c.verdict, c.witness);
                    }
                    cert.details = serde_json::to_value(&rc).unwrap();
                    family_file_text = Some(family_file(&fam));
                }
                Err(e) if e.is_budget() => {
                    for n in names(&spec.kind) {
                        cert.record(n, Verdict::Inconclusive(e.to_string()), None);
                    }
                    cert.details = serde_json::json!({ "aborted": e.to_string() });
                }
                Err(e) => return Err(e),
            }
        }
        kind => {
            let run_in = |mode: ScalarMode| -> Result<(serde_json::Value, Vec<Check>)> {
                let r = match *kind {
                    TaskKind::CheckDiagonal { n, d, dmax } => diagonal_checks(n, d, dmax, mode, budget),
                    TaskKind::MapPoly { n, d, ell, emax } => mappoly_checks(n, d, ell, emax, mode),
                    TaskKind::ProductTriple { n, dmax } => triple_checks(n, dmax, mode, budget),
                    _ => unreachable!(),
                };
                soften(kind, r)
            };
            let mut details = serde_json::Map::new();
            let mut screened = None;
            if let Some(p) = spec.mode.screen {
                let t = Instant::now();
                let (d, checks) = run_in(ScalarMode::prime_field(p)?)?;
                timings.insert("screen".to_string(), t.elapsed().as_secs_f64());
                details.insert("screen".into(), d);
                screened = Some(checks);
            }
            if spec.mode.confirm {
                let t = Instant::now();
                let (d, checks) = run_in(ScalarMode::Rational)?;
                timings.insert("confirm".to_string(), t.elapsed().as_secs_f64());
                details.insert("confirm".into(), d);
                for c in checks {
                    cert.record(c.name, c.verdict, c.witness);
                }
            } else {
                let p = spec.mode.screen.unwrap();
                for c in screened.unwrap_or_default() {
                    let reason = format!("screen-only run over FP:{p}; screened verdict {}", c.verdict.label());
                    cert.record(c.name, Verdict::Inconclusive(reason), c.witness);
                }
            }
            cert.details = serde_json::Value::Object(details);
        }
    }

    timings.insert("total".to_string(), start.elapsed().as_secs_f64());
    if opts.timings {
        cert.timings = Some(timings);
    }
    debug_assert!(cert.is_well_formed());
    Ok(TaskOutput { certificate: cert, family_file: family_file_text })
}

/// One output line of a suite run.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum SuiteLine {
    Done(Box<Certificate>),
    Failed {
        line: usize,
        error: String,
        #[serde(rename = "exitCode")]
        exit_code: i32,
    },
}

impl SuiteLine {
    pub fn exit_code(&self) -> i32 {
        match self {
            SuiteLine::Done(c) => c.exit_code(),
            SuiteLine::Failed { exit_code, .. } => *exit_code,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("suite lines serialize")
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteReport {
    pub lines: Vec<SuiteLine>,
}

impl SuiteReport {
    pub fn exit_code(&self) -> i32 {
        self.lines.iter().fold(EXIT_OK, |acc, l| worst(acc, l.exit_code()))
    }

    /// Counts by exit code, for the stderr summary.
    pub fn summary(&self) -> String {
        let mut counts: BTreeMap<i32, usize> = BTreeMap::new();
        for l in &self.lines {
            *counts.entry(l.exit_code()).or_default() += 1;
        }
        let parts: Vec<String> = counts.iter().map(|(c, k)| format!("exit {c}: {k}")).collect();
        format!("{} tasks; {}", self.lines.len(), parts.join(", "))
    }
}

/// Thread count: explicit value, then `SECANTCAT_JOBS`, then all cores.
pub fn resolve_jobs(explicit: Option<usize>) -> usize {
    explicit
        .or_else(|| std::env::var("SECANTCAT_JOBS").ok().and_then(|s| s.trim().parse().ok()))
        .filter(|&j| j > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Runs a JSONL suite. Blank lines and `#` comments are skipped; output keeps input order.
pub fn run_suite(text: &str, opts: RunOptions, jobs: usize) -> SuiteReport {
    let tasks: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let lines = with_jobs(jobs, || {
        tasks
            .par_iter()
            .map(|&(line, l)| match TaskSpec::from_json(l).and_then(|s| run_task(&s, opts)) {
                Ok(out) => SuiteLine::Done(Box::new(out.certificate)),
                Err(e) => SuiteLine::Failed { line, error: e.to_string(), exit_code: EXIT_INVALID },
            })
            .collect()
    });
    SuiteReport { lines }
}
