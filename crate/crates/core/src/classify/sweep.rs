//! Classification of every ascending index triple in a range, with an
//! optional oracle cross-check per row.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{classify, Family, IndexTriple, Status, Verdict};
use crate::error::Error;
use crate::kernel::GenSet3;
use crate::oracle::{check_equivalence, enumerate_within, DEFAULT_CONDUCTOR_CEILING};

/// How far the oracle confirmed a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "state", rename_all = "snake_case")]
pub enum OracleCheck {
    Confirmed,
    Disagrees {
        mismatches: Vec<String>,
    },
    /// Conductor above the ceiling; the verdict rests on the formulas alone.
    Infeasible,
    /// No numerical semigroup to sieve.
    NotApplicable,
    Skipped,
}

impl OracleCheck {
    pub fn label(&self) -> &'static str {
        match self {
            OracleCheck::Confirmed => "confirmed",
            OracleCheck::Disagrees { .. } => "disagrees",
            OracleCheck::Infeasible => "infeasible",
            OracleCheck::NotApplicable => "not_applicable",
            OracleCheck::Skipped => "skipped",
        }
    }
}

/// Checks a verdict against the sieve: certificates through
/// [`check_equivalence`], non-symmetric verdicts by reflection.
pub fn cross_check(verdict: &Verdict, conductor_ceiling: u64) -> OracleCheck {
    let g = GenSet3::new(verdict.generators.clone()).expect("verdict generators are positive");
    if let Some(cert) = &verdict.certificate {
        return match check_equivalence(&g, cert, conductor_ceiling) {
            Ok(eq) if eq.holds() => OracleCheck::Confirmed,
            Ok(eq) => OracleCheck::Disagrees { mismatches: eq.mismatches().iter().map(|s| s.to_string()).collect() },
            Err(Error::OracleInfeasible { .. }) => OracleCheck::Infeasible,
            Err(e) => OracleCheck::Disagrees { mismatches: vec![e.to_string()] },
        };
    }
    if verdict.status != Status::NonSymmetric {
        return OracleCheck::NotApplicable;
    }
    match enumerate_within(g.values(), conductor_ceiling) {
        Ok(r) if !r.symmetric && r.genus_conductor_dichotomy_holds() => OracleCheck::Confirmed,
        Ok(_) => OracleCheck::Disagrees { mismatches: vec!["symmetry".into()] },
        Err(Error::OracleInfeasible { .. }) => OracleCheck::Infeasible,
        Err(e) => OracleCheck::Disagrees { mismatches: vec![e.to_string()] },
    }
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    /// Defaults to the family's smallest admissible index.
    pub min_index: Option<u32>,
    pub max_index: u32,
    pub conductor_ceiling: u64,
    pub oracle: bool,
    /// Worker threads; `None` uses rayon's default pool.
    pub workers: Option<usize>,
}

impl SweepOptions {
    pub fn new(max_index: u32) -> Self {
        SweepOptions {
            min_index: None,
            max_index,
            conductor_ceiling: DEFAULT_CONDUCTOR_CEILING,
            oracle: true,
            workers: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub triple: IndexTriple,
    pub verdict: Verdict,
    pub oracle: OracleCheck,
}

pub fn triples(family: Family, min_index: u32, max_index: u32) -> Vec<IndexTriple> {
    let lo = min_index.max(family.min_index());
    let mut out = Vec::new();
    for a in lo..=max_index {
        for b in a + 1..=max_index {
            for c in b + 1..=max_index {
                out.push(IndexTriple::new(family, [a, b, c]).expect("ascending and in range"));
            }
        }
    }
    out
}

/// Rows in ascending lexicographic index order, whatever order the workers
/// finish in.
pub fn sweep(family: Family, options: &SweepOptions) -> Vec<SweepRow> {
    let list = triples(family, options.min_index.unwrap_or(0), options.max_index);
    let row = |t: &IndexTriple| {
        let verdict = classify(t);
        let oracle =
            if options.oracle { cross_check(&verdict, options.conductor_ceiling) } else { OracleCheck::Skipped };
        SweepRow { triple: *t, verdict, oracle }
    };
    match options.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(|| list.par_iter().map(row).collect()),
        None => list.par_iter().map(row).collect(),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub rows: usize,
    pub by_status: BTreeMap<Status, usize>,
    pub by_oracle: BTreeMap<String, usize>,
}

impl SweepSummary {
    pub fn of(rows: &[SweepRow]) -> Self {
        let mut summary = SweepSummary { rows: rows.len(), ..Default::default() };
        for status in Status::ALL {
            summary.by_status.insert(status, 0);
        }
        for r in rows {
            *summary.by_status.entry(r.verdict.status).or_default() += 1;
            *summary.by_oracle.entry(r.oracle.label().to_string()).or_default() += 1;
        }
        summary
    }

    pub fn disagreements(&self) -> usize {
        self.by_oracle.get("disagrees").copied().unwrap_or(0)
    }
}
