//! Validation reports and the sharded instance runner.
//!
//! A validator is a list of independent *families*; each family enumerates
//! its instances into a [`Sink`]. Families are spread over worker threads and
//! the per-family sinks are merged in family order, so the rendered report
//! does not depend on the number of workers.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};

pub const UNDEFINED: &str = "!undefined";

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Count {
    pub checked: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Failure {
    pub family: String,
    pub ids: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Failure {
    pub fn render(&self) -> String {
        format!(
            "FAIL {} [{}] lhs={} rhs={}",
            self.family,
            self.ids.join(" "),
            self.lhs,
            self.rhs
        )
    }

    /// Multiset containment of `wanted` in the instance identifiers.
    pub fn mentions(&self, wanted: &[String]) -> bool {
        let mut pool: Vec<&String> = self.ids.iter().collect();
        for w in wanted {
            match pool.iter().position(|x| *x == w) {
                Some(k) => {
                    pool.swap_remove(k);
                }
                None => return false,
            }
        }
        true
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub counts: BTreeMap<String, Count>,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn checked(&self) -> usize {
        self.counts.values().map(|c| c.checked).sum()
    }

    pub fn checked_in(&self, family: &str) -> usize {
        self.counts.get(family).map_or(0, |c| c.checked)
    }

    pub fn failures_in<'a>(&'a self, family: &'a str) -> impl Iterator<Item = &'a Failure> {
        self.failures.iter().filter(move |f| f.family == family)
    }

    pub fn absorb(&mut self, other: Report) {
        for (k, c) in other.counts {
            let e = self.counts.entry(k).or_default();
            e.checked += c.checked;
            e.failed += c.failed;
        }
        self.failures.extend(other.failures);
        self.failures.sort();
        self.notes.extend(other.notes);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "report {}", self.subject);
        for (fam, c) in &self.counts {
            let _ = writeln!(out, "family {fam} checked {} failed {}", c.checked, c.failed);
        }
        for n in &self.notes {
            let _ = writeln!(out, "note {n}");
        }
        for f in &self.failures {
            let _ = writeln!(out, "{}", f.render());
        }
        let failed: usize = self.counts.values().map(|c| c.failed).sum();
        let _ = writeln!(
            out,
            "summary checked {} failed {} verdict {}",
            self.checked(),
            failed,
            if self.passed() { "pass" } else { "fail" }
        );
        out
    }
}

/// Collects instance outcomes for one or more families.
#[derive(Default)]
pub struct Sink {
    counts: BTreeMap<String, Count>,
    failures: Vec<Failure>,
}

impl Sink {
    pub fn record(&mut self, family: &str, ok: bool, fail: impl FnOnce() -> (Vec<String>, String, String)) {
        let c = self.counts.entry(family.to_string()).or_default();
        c.checked += 1;
        if !ok {
            c.failed += 1;
            let (ids, lhs, rhs) = fail();
            self.failures.push(Failure {
                family: family.to_string(),
                ids,
                lhs,
                rhs,
            });
        }
    }

    /// Equation between two possibly undefined values; undefined never passes.
    pub fn eq<T: PartialEq + Copy>(
        &mut self,
        family: &str,
        lhs: Option<T>,
        rhs: Option<T>,
        ids: impl FnOnce() -> Vec<String>,
        name: impl Fn(T) -> String,
    ) {
        let ok = matches!((lhs, rhs), (Some(a), Some(b)) if a == b);
        self.record(family, ok, || {
            let show = |x: Option<T>| x.map_or_else(|| UNDEFINED.to_string(), &name);
            (ids(), show(lhs), show(rhs))
        });
    }

    /// Make sure a family shows up in the counts even if it has no instances.
    pub fn touch(&mut self, family: &str) {
        self.counts.entry(family.to_string()).or_default();
    }

    pub fn into_report(self, subject: &str) -> Report {
        Report {
            subject: subject.to_string(),
            counts: self.counts,
            failures: self.failures,
            notes: Vec::new(),
        }
    }
}

pub type Task<'a> = Box<dyn Fn(&mut Sink) + Send + Sync + 'a>;

/// Run independent families on up to `jobs` threads and merge deterministically.
pub fn run(subject: &str, tasks: Vec<Task<'_>>, jobs: usize) -> Report {
    let jobs = jobs.max(1).min(tasks.len().max(1));
    let mut sinks: Vec<Option<Sink>> = (0..tasks.len()).map(|_| None).collect();
    if jobs == 1 {
        for (k, t) in tasks.iter().enumerate() {
            let mut s = Sink::default();
            t(&mut s);
            sinks[k] = Some(s);
        }
    } else {
        let next = AtomicUsize::new(0);
        let results: Vec<Vec<(usize, Sink)>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|_| {
                    scope.spawn(|| {
                        let mut done = Vec::new();
                        loop {
                            let k = next.fetch_add(1, Ordering::Relaxed);
                            if k >= tasks.len() {
                                break;
                            }
                            let mut s = Sink::default();
                            tasks[k](&mut s);
                            done.push((k, s));
                        }
                        done
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        for (k, s) in results.into_iter().flatten() {
            sinks[k] = Some(s);
        }
    }
    let mut report = Report::new(subject);
    for s in sinks.into_iter().flatten() {
        report.absorb(s.into_report(subject));
    }
    report
}
