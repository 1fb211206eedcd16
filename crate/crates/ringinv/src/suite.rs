//! Parallel theorem runs over a list of rings.

use std::ops::Range;
use std::time::Instant;

use rayon::prelude::*;
use rayon::ThreadPool;
use ringinv_core::{Counterexample, FiniteRing, Lab, LabConfig, RingContext, ScanResult, Sink, Theorem, Value};
use thiserror::Error;

use crate::report::{CounterexampleRecord, Status, TheoremReport, Vars};

/// The outer instance space of every theorem is cut into this many ranges,
/// whatever the worker count, so results do not depend on it.
pub const CHUNKS: usize = 64;

pub const DEFAULT_MAX_COUNTEREXAMPLES: usize = 1000;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub theorems: Vec<Theorem>,
    /// Instances examined per (theorem, ring) before the report is skipped.
    pub budget: u64,
    pub workers: usize,
    pub include_formal_one: bool,
    pub cline_max_exponent: u32,
    pub max_counterexamples: usize,
    pub rings: Vec<FiniteRing>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            theorems: Theorem::ALL.to_vec(),
            budget: u64::MAX,
            workers: 1,
            include_formal_one: true,
            cline_max_exponent: 3,
            max_counterexamples: DEFAULT_MAX_COUNTEREXAMPLES,
            rings: Vec::new(),
        }
    }
}

impl SuiteConfig {
    fn lab_config(&self) -> LabConfig {
        LabConfig { include_formal_one: self.include_formal_one, cline_max_exponent: self.cline_max_exponent }
    }
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("budget must be positive")]
    ZeroBudget,
    #[error("worker count must be positive")]
    ZeroWorkers,
    #[error("cannot start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

pub fn pool(workers: usize) -> Result<ThreadPool, SuiteError> {
    if workers == 0 {
        return Err(SuiteError::ZeroWorkers);
    }
    Ok(rayon::ThreadPoolBuilder::new().num_threads(workers).build()?)
}

/// Runs every selected theorem on every ring.
///
/// Reports are ordered by theorem id, then ring name.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<TheoremReport>, SuiteError> {
    if config.budget == 0 {
        return Err(SuiteError::ZeroBudget);
    }
    if config.theorems.is_empty() {
        return Ok(Vec::new());
    }
    let pool = pool(config.workers)?;
    let lab_config = config.lab_config();
    let labs: Vec<Lab> = pool.install(|| {
        config.rings.par_iter().map(|r| Lab::new(RingContext::new(r.clone()), lab_config)).collect()
    });
    let mut reports = Vec::with_capacity(config.theorems.len() * labs.len());
    for &theorem in &config.theorems {
        for lab in &labs {
            log::info!("{} on {}", theorem.id(), lab.ring().name());
            reports.push(check(lab, theorem, config.budget, config.max_counterexamples, &pool));
        }
    }
    reports.sort_by(|a, b| (&a.theorem, &a.ring).cmp(&(&b.theorem, &b.ring)));
    Ok(reports)
}

/// Runs one theorem (or search target) on one ring.
pub fn check(lab: &Lab, theorem: Theorem, budget: u64, keep: usize, pool: &ThreadPool) -> TheoremReport {
    let start = Instant::now();
    let ring = lab.ring();
    if let Some(reason) = lab.skip_reason(theorem) {
        return TheoremReport {
            theorem: theorem.id().into(),
            ring: ring.name().into(),
            tuples_scanned: 0,
            counterexamples: Vec::new(),
            status: Status::Skipped(reason.into()),
            elapsed_ms: 0,
        };
    }
    let result = scan_chunked(lab, theorem, budget, keep, pool);
    let mut counterexamples: Vec<CounterexampleRecord> =
        result.counterexamples.iter().map(|c| record(ring, c)).collect();
    counterexamples.sort();
    let status = if !counterexamples.is_empty() {
        Status::Fail
    } else if result.exhausted {
        Status::Skipped(format!("budget of {budget} tuples exhausted"))
    } else {
        Status::Pass
    };
    TheoremReport {
        theorem: theorem.id().into(),
        ring: ring.name().into(),
        tuples_scanned: result.tuples,
        counterexamples,
        status,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Exploratory search on one ring; every finding is a counterexample record.
pub fn search_counterexamples(lab: &Lab, target: Theorem, keep: usize, pool: &ThreadPool) -> TheoremReport {
    assert!(target.is_search(), "{} is not a search target", target.id());
    check(lab, target, u64::MAX, keep, pool)
}

fn chunk(len: usize, i: usize) -> Range<usize> {
    len * i / CHUNKS..len * (i + 1) / CHUNKS
}

/// Same result as a sequential [`Lab::run`] with the same budget.
pub fn scan_chunked(lab: &Lab, theorem: Theorem, budget: u64, keep: usize, pool: &ThreadPool) -> ScanResult {
    let len = lab.outer_len(theorem);
    let parts: Vec<ScanResult> = pool.install(|| {
        (0..CHUNKS)
            .into_par_iter()
            .map(|i| {
                let mut sink = Sink::new(budget, keep);
                lab.scan(theorem, chunk(len, i), &mut sink);
                ScanResult { tuples: sink.ticks(), exhausted: sink.exhausted(), counterexamples: sink.into_counterexamples() }
            })
            .collect()
    });
    merge(parts, budget, keep)
}

/// Concatenates chunk results, cutting at the global budget.
fn merge(parts: Vec<ScanResult>, budget: u64, keep: usize) -> ScanResult {
    let mut offset = 0u64;
    let mut exhausted = false;
    let mut found = Vec::new();
    for part in parts {
        for mut c in part.counterexamples {
            let at = offset.saturating_add(c.at);
            if at <= budget && found.len() < keep {
                c.at = at;
                found.push(c);
            }
        }
        offset = offset.saturating_add(part.tuples);
        if part.exhausted || offset > budget {
            exhausted = true;
            break;
        }
    }
    ScanResult { tuples: offset.min(budget), exhausted, counterexamples: found }
}

pub const FORMAL_ONE_LABEL: &str = "(1)";

fn record(ring: &FiniteRing, c: &Counterexample) -> CounterexampleRecord {
    let vars = c
        .vars
        .iter()
        .map(|&(name, v)| {
            let value = match v {
                Value::Elem(e) => ring.label(e).to_string(),
                Value::FormalOne => FORMAL_ONE_LABEL.to_string(),
                Value::Int(n) => n.to_string(),
            };
            (name.to_string(), value)
        })
        .collect();
    CounterexampleRecord { vars: Vars(vars), failed_clause: c.clause.to_string() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ringinv_core::make_zmod;

    fn z(n: usize) -> Lab {
        Lab::new(RingContext::new(make_zmod(n).unwrap()), LabConfig::default())
    }

    #[test]
    fn chunks_cover_the_space() {
        for len in [0, 1, 63, 64, 65, 1000] {
            let mut next = 0;
            for i in 0..CHUNKS {
                let r = chunk(len, i);
                assert_eq!(r.start, next);
                next = r.end;
            }
            assert_eq!(next, len);
        }
    }

    #[test]
    fn chunked_matches_sequential_under_any_budget() {
        let lab = z(6);
        let p = pool(3).unwrap();
        for t in [Theorem::IntertwiningAnn, Theorem::SearchReverseOrderOpen, Theorem::Cline] {
            let full = lab.outer_len(t) as u64 * 4;
            for budget in [1, 2, 17, 100, 500, full, u64::MAX] {
                for keep in [0, 3, usize::MAX] {
                    let seq = lab.run(t, budget, keep);
                    let par = scan_chunked(&lab, t, budget, keep, &p);
                    assert_eq!(par.tuples, seq.tuples, "{} budget {budget}", t.id());
                    assert_eq!(par.exhausted, seq.exhausted, "{} budget {budget}", t.id());
                    assert_eq!(par.counterexamples, seq.counterexamples, "{} budget {budget}", t.id());
                }
            }
        }
    }

    #[test]
    fn budget_of_one_skips() {
        let config = SuiteConfig { budget: 1, rings: vec![make_zmod(4).unwrap()], ..SuiteConfig::default() };
        let reports = run_suite(&config).unwrap();
        let lab = z(4);
        for r in &reports {
            let t = Theorem::from_id(&r.theorem).unwrap();
            assert!(r.tuples_scanned <= 1);
            if lab.run(t, u64::MAX, 0).tuples > 1 {
                assert!(matches!(r.status, Status::Skipped(_)), "{}", r.theorem);
            }
        }
    }

    #[test]
    fn empty_filter_gives_no_reports() {
        let config = SuiteConfig { theorems: Vec::new(), rings: vec![make_zmod(4).unwrap()], ..SuiteConfig::default() };
        assert!(run_suite(&config).unwrap().is_empty());
    }

    #[test]
    fn zero_budget_is_rejected() {
        let config = SuiteConfig { budget: 0, ..SuiteConfig::default() };
        assert!(matches!(run_suite(&config), Err(SuiteError::ZeroBudget)));
    }

    #[test]
    fn missing_involution_is_a_skip() {
        let p = pool(1).unwrap();
        let r = check(&z(4), Theorem::MpCorrespondence, u64::MAX, 10, &p);
        assert_eq!(r.status, Status::Skipped("no involution".into()));
    }
}
