//! Text, CSV and JSON renderings of verdicts and sweeps.

use std::fmt::Write as _;

use fibsym::classify::sweep::{OracleCheck, SweepRow, SweepSummary};
use fibsym::{Family, Status, Verdict};
use serde::{Deserialize, Serialize};

pub const CSV_HEADER: [&str; 15] = [
    "family",
    "i1",
    "i2",
    "i3",
    "d1",
    "d2",
    "d3",
    "status",
    "reason",
    "lambda",
    "e1",
    "e2",
    "frobenius",
    "genus",
    "oracle",
];

/// `fibonacci`, `lucas` or `raw` for explicit generators.
pub fn family_label(family: Option<Family>) -> String {
    family.map_or_else(|| "raw".to_string(), |f| f.to_string())
}

/// Names for the gcd and the two numerator exponents.
fn names(family: Option<Family>) -> (&'static str, &'static str, &'static str) {
    match family {
        Some(Family::Fibonacci) => ("lambda", "f1", "f2"),
        Some(Family::Lucas) => ("eta", "l1", "l2"),
        None => ("lambda", "e1", "e2"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub family: String,
    pub indices: Option<[u32; 3]>,
    pub verdict: Verdict,
    pub oracle: OracleCheck,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub family: Family,
    pub min_index: u32,
    pub max_index: u32,
    pub conductor_ceiling: u64,
    pub rows: Vec<SweepRow>,
    pub summary: SweepSummary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub triple: String,
    pub status: String,
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub family: Family,
    pub min_index: u32,
    pub max_index: u32,
    pub conductor_ceiling: u64,
    pub rows: usize,
    pub confirmed: usize,
    /// Rows whose conductor is above the ceiling.
    pub skipped: usize,
    pub not_applicable: usize,
    /// Symmetric rows with their Frobenius number and oracle state.
    pub symmetric: Vec<SymmetricRow>,
    pub discrepancies: Vec<Discrepancy>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricRow {
    pub triple: String,
    pub frobenius: String,
    pub genus: String,
    pub oracle: String,
}

impl VerifyReport {
    pub fn from_sweep(sweep: &SweepReport) -> Self {
        let count = |label: &str| sweep.rows.iter().filter(|r| r.oracle.label() == label).count();
        let discrepancies = sweep
            .rows
            .iter()
            .filter_map(|r| match &r.oracle {
                OracleCheck::Disagrees { mismatches } => Some(Discrepancy {
                    triple: r.triple.to_string(),
                    status: r.verdict.status.to_string(),
                    mismatches: mismatches.clone(),
                }),
                _ => None,
            })
            .collect();
        let symmetric = sweep
            .rows
            .iter()
            .filter(|r| r.verdict.status == Status::Symmetric)
            .filter_map(|r| {
                let c = r.verdict.certificate.as_ref()?;
                Some(SymmetricRow {
                    triple: r.triple.to_string(),
                    frobenius: c.frobenius.to_string(),
                    genus: c.genus.to_string(),
                    oracle: r.oracle.label().to_string(),
                })
            })
            .collect();
        VerifyReport {
            family: sweep.family,
            min_index: sweep.min_index,
            max_index: sweep.max_index,
            conductor_ceiling: sweep.conductor_ceiling,
            rows: sweep.rows.len(),
            confirmed: count("confirmed"),
            skipped: count("infeasible"),
            not_applicable: count("not_applicable"),
            symmetric,
            discrepancies,
        }
    }
}

/// One CSV record, in `CSV_HEADER` order. Certificate fields are empty when
/// the verdict has no certificate.
pub fn csv_record(
    family: Option<Family>,
    indices: Option<[u32; 3]>,
    verdict: &Verdict,
    oracle: &OracleCheck,
) -> Vec<String> {
    let mut rec = vec![family_label(family)];
    match indices {
        Some(ix) => rec.extend(ix.iter().map(u32::to_string)),
        None => rec.extend(std::iter::repeat_n(String::new(), 3)),
    }
    rec.extend(verdict.generators.iter().map(|d| d.to_string()));
    rec.push(verdict.status.to_string());
    rec.push(verdict.reason.to_string());
    match &verdict.certificate {
        Some(c) => rec.extend([&c.lambda, &c.e1, &c.e2, &c.frobenius, &c.genus].map(|x| x.to_string())),
        None => rec.extend(std::iter::repeat_n(String::new(), 5)),
    }
    rec.push(oracle.label().to_string());
    rec
}

pub fn csv_document(records: impl IntoIterator<Item = Vec<String>>) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for rec in records {
        w.write_record(&rec)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// `(1-z^e1)(1-z^e2) / ((1-z^d1)(1-z^d2)(1-z^d3))`.
pub fn hilbert_display(verdict: &Verdict) -> Option<String> {
    let cert = verdict.certificate.as_ref()?;
    let h = cert.hilbert();
    let factors = |exps: &[fibsym::BigUint]| exps.iter().map(|e| format!("(1-z^{e})")).collect::<String>();
    Some(format!("{} / ({})", factors(&h.numerator_exponents), factors(&h.denominator_exponents)))
}

pub fn analyze_text(report: &AnalyzeReport, family: Option<Family>) -> String {
    let v = &report.verdict;
    let (gcd_name, e1_name, e2_name) = names(family);
    let join = |xs: Vec<String>| xs.join(" ");
    let mut lines: Vec<(String, String)> = vec![("family".into(), report.family.clone())];
    if let Some(ix) = report.indices {
        lines.push(("indices".into(), join(ix.iter().map(u32::to_string).collect())));
    }
    lines.push(("generators".into(), join(v.generators.iter().map(|d| d.to_string()).collect())));
    lines.push(("status".into(), v.status.to_string()));
    lines.push(("reason".into(), v.reason.to_string()));
    if let Some(w) = &v.witness {
        let pair = format!("{} {}", v.generators[w.pair.0], v.generators[w.pair.1]);
        let mut s = format!("{} (pair {pair}", w.gcd);
        if let Some(ig) = w.index_gcd {
            let _ = write!(s, ", index gcd {ig}");
        }
        s.push(')');
        lines.push((gcd_name.into(), s));
    }
    if let Some(dep) = &v.dependency {
        let (a, b) = (&dep.coefficients[0], &dep.coefficients[1]);
        let g = &v.generators;
        lines.push((
            "dependency".into(),
            format!("{} = {a}*{} + {b}*{}", g[dep.dependent], g[dep.others.0], g[dep.others.1]),
        ));
    }
    if let Some(c) = &v.certificate {
        if v.witness.is_none() {
            lines.push((gcd_name.into(), c.lambda.to_string()));
        }
        lines.push((e1_name.into(), c.e1.to_string()));
        lines.push((e2_name.into(), c.e2.to_string()));
        lines.push(("frobenius".into(), c.frobenius.to_string()));
        lines.push(("genus".into(), c.genus.to_string()));
        lines.push(("hilbert".into(), hilbert_display(v).unwrap_or_default()));
    }
    lines.push(("oracle".into(), report.oracle.label().into()));
    if let OracleCheck::Disagrees { mismatches } = &report.oracle {
        lines.push(("mismatches".into(), mismatches.join(", ")));
    }
    let width = lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    lines.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

fn summary_text(summary: &SweepSummary) -> String {
    let statuses: Vec<String> = summary.by_status.iter().map(|(s, n)| format!("{s} {n}")).collect();
    let oracle: Vec<String> = summary.by_oracle.iter().map(|(s, n)| format!("{s} {n}")).collect();
    let mut out = format!("rows {}\nstatus: {}\n", summary.rows, statuses.join(", "));
    if !oracle.is_empty() {
        let _ = writeln!(out, "oracle: {}", oracle.join(", "));
    }
    out
}

pub fn sweep_text(report: &SweepReport) -> String {
    let records: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| {
            let ix = r.triple.indices.map(|i| i.get());
            csv_record(Some(report.family), Some(ix), &r.verdict, &r.oracle)
        })
        .collect();
    let mut widths: Vec<usize> = CSV_HEADER.iter().map(|h| h.len()).collect();
    for rec in &records {
        for (w, cell) in widths.iter_mut().zip(rec) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(&CSV_HEADER.map(String::from));
    for rec in &records {
        out += &line(rec);
    }
    out.push('\n');
    out + &summary_text(&report.summary)
}

pub fn sweep_summary_text(report: &SweepReport) -> String {
    summary_text(&report.summary)
}

pub fn verify_text(report: &VerifyReport) -> String {
    let mut out = format!(
        "{} indices {}..={}, conductor ceiling {}\nrows {}: confirmed {}, skipped {}, not applicable {}\n",
        report.family,
        report.min_index,
        report.max_index,
        report.conductor_ceiling,
        report.rows,
        report.confirmed,
        report.skipped,
        report.not_applicable
    );
    let _ = writeln!(out, "symmetric {}", report.symmetric.len());
    for r in &report.symmetric {
        let _ = writeln!(out, "  {} F={} G={} {}", r.triple, r.frobenius, r.genus, r.oracle);
    }
    let _ = writeln!(out, "discrepancies {}", report.discrepancies.len());
    for d in &report.discrepancies {
        let _ = writeln!(out, "  {} {}: {}", d.triple, d.status, d.mismatches.join(", "));
    }
    out
}
