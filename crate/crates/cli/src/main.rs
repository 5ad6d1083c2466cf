mod args;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Parser;
use serde::Serialize;

use lcdbch::bchcodes::{dimension_constructive, CodeSpec};
use lcdbch::cosets::{exception_set_even_m, exception_sets_odd_m, leader_and_size, CosetParams};
use lcdbch::dimensions::{dim_designed_qt, DimValue, TheoremId};
use lcdbch::distance::{distance_auto, DistanceMethod, DistanceResult};
use lcdbch::report::{CodeReport, ReportOptions};
use lcdbch::sweep::{
    golden_cases, min_dis_cases, min_dis_row, oracle_on, MinDisRow, OracleConfig, OracleSummary, ParamGrid, StatedDistance,
};
use lcdbch::{Coverage, Exec};

use args::{Cli, Command, ConstructArgs, CosetsArgs, DistanceArgs, Format, SpecArgs, TableArgs, TableKind, VerifyArgs};
use output::{emit_one, emit_rows, opt, Row};

/// Exit status for a failed check, as opposed to a usage or input error.
const MISMATCH: u8 = 1;
const FAILURE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(MISMATCH),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(FAILURE)
        }
    }
}

/// Returns whether every requested check passed.
fn run(cli: Cli) -> Result<bool> {
    let exec = match cli.threads {
        Some(0) => bail!("--threads must be at least 1"),
        Some(1) => Exec::Sequential,
        Some(n) => {
            rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
            Exec::Parallel
        }
        None => Exec::Parallel,
    };
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let ok = match &cli.command {
        Command::Cosets(a) => cosets(a, cli.format, &mut out).map(|()| true),
        Command::Construct(a) => construct(a, cli.format, exec, &mut out),
        Command::Distance(a) => distance(a, cli.format, exec, &mut out).map(|()| true),
        Command::Verify(a) => verify(a, cli.format, exec, &mut out),
        Command::Table(a) => table(a, cli.format, exec, &mut out).map(|()| true),
    }?;
    out.flush()?;
    Ok(ok)
}

#[derive(Serialize)]
struct CosetRow {
    s: u64,
    leader: u64,
    size: u32,
    is_leader: bool,
    /// Listed by the closed-form exception sets for `u = q - 1`.
    exception: bool,
}

impl Row for CosetRow {
    const HEADER: &'static [&'static str] = &["s", "leader", "size", "is_leader", "exception"];
    fn text(&self) -> String {
        let mark = if self.exception { "  exception" } else { "" };
        format!("{:>8} {:>8} {:>4}{mark}", self.s, self.leader, self.size)
    }
}

/// Sorted union of the closed-form exception sets at `u = q - 1`.
fn exception_list(p: &CosetParams) -> Vec<u64> {
    let u = p.q() - 1;
    let mut all: Vec<u64> = if p.m().is_multiple_of(2) {
        exception_set_even_m(p, u)
            .map(|e| e.non_leaders.into_iter().chain(e.half_size_leaders).collect())
            .unwrap_or_default()
    } else {
        exception_sets_odd_m(p, u)
            .map(|(a, b)| a.into_iter().chain(b).collect())
            .unwrap_or_default()
    };
    all.sort_unstable();
    all
}

fn cosets(a: &CosetsArgs, format: Format, out: &mut dyn Write) -> Result<()> {
    let p = CosetParams::new(a.q, a.m)?;
    if a.range.start <= a.range.end && a.range.end >= p.n() {
        bail!("range {} must lie in 0:{}", a.range, p.n() - 1);
    }
    let exceptions = exception_list(&p);
    let rows: Vec<CosetRow> = a
        .range
        .iter()
        .map(|s| {
            let (leader, size) = leader_and_size(&p, s);
            CosetRow {
                s,
                leader,
                size,
                is_leader: leader == s,
                exception: exceptions.binary_search(&s).is_ok(),
            }
        })
        .collect();
    emit_rows(out, format, &rows)
}

#[derive(Serialize)]
struct ReportRow {
    family: String,
    q: u64,
    m: u32,
    n: u64,
    delta: u64,
    b: u64,
    k: u64,
    lcd: bool,
    designed_distance: u64,
    bch_lower: u64,
    d_lower: u64,
    d_upper: Option<u64>,
    d_exact: Option<u64>,
    method: DistanceMethod,
    formula: Option<TheoremId>,
    formula_k_lower: Option<u64>,
    formula_k_upper: Option<u64>,
    formula_matches: Option<bool>,
}

impl From<&CodeReport> for ReportRow {
    fn from(r: &CodeReport) -> Self {
        let p = r.spec.params();
        let (source, lo, hi) = match &r.prediction {
            Coverage::Covered(v) => match v.value {
                DimValue::Exact { k } => (Some(v.source_theorem), Some(k), Some(k)),
                DimValue::Bounds { k_lower, k_upper } => (Some(v.source_theorem), Some(k_lower), Some(k_upper)),
            },
            Coverage::NotCovered { .. } => (None, None, None),
        };
        ReportRow {
            family: r.spec.family().name().into(),
            q: p.q(),
            m: p.m(),
            n: r.n(),
            delta: r.spec.delta(),
            b: r.spec.b(),
            k: r.k,
            lcd: r.lcd,
            designed_distance: r.designed_distance,
            bch_lower: r.bch_lower,
            d_lower: r.distance.lower,
            d_upper: r.distance.upper,
            d_exact: r.distance.exact,
            method: r.distance.method,
            formula: source,
            formula_k_lower: lo,
            formula_k_upper: hi,
            formula_matches: r.formula_matches,
        }
    }
}

/// Renders `d` as the exact value or `≥lower`.
fn d_label(lower: u64, exact: Option<u64>) -> String {
    exact.map_or_else(|| format!("≥{lower}"), |d| d.to_string())
}

impl Row for ReportRow {
    const HEADER: &'static [&'static str] = &[
        "family",
        "q",
        "m",
        "n",
        "delta",
        "b",
        "k",
        "lcd",
        "designed_distance",
        "bch_lower",
        "d_lower",
        "d_upper",
        "d_exact",
        "method",
        "formula",
        "formula_k_lower",
        "formula_k_upper",
        "formula_matches",
    ];
    fn text(&self) -> String {
        format!(
            "{:<16} q={:<3} m={:<2} δ={:<6} [{}, {}, {}]",
            self.family,
            self.q,
            self.m,
            self.delta,
            self.n,
            self.k,
            d_label(self.d_lower, self.d_exact)
        )
    }
}

fn report_options(mode: args::DistanceOpts, generator: bool, exec: Exec) -> ReportOptions {
    ReportOptions {
        distance: mode.mode(),
        generator,
        budget: mode.budget(),
        exec,
    }
}

fn construct(a: &ConstructArgs, format: Format, exec: Exec, out: &mut dyn Write) -> Result<bool> {
    let spec = a.spec.spec()?;
    let report = CodeReport::build(&spec, &report_options(a.distance, a.generator, exec))?;
    emit_one(out, format, &report, |r| ReportRow::from(r))?;
    if a.check && report.formula_matches == Some(false) {
        eprintln!("closed-form dimension disagrees with the constructive k = {}", report.k);
        return Ok(false);
    }
    Ok(true)
}

#[derive(Serialize)]
struct DistanceReport {
    code: String,
    n: u64,
    k: u64,
    #[serde(flatten)]
    result: DistanceResult,
}

impl std::fmt::Display for DistanceReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let r = &self.result;
        writeln!(f, "{}", self.code)?;
        writeln!(f, "  parameters [{}, {}, {}]", self.n, self.k, d_label(r.lower, r.exact))?;
        writeln!(f, "  lower      {}", r.lower)?;
        writeln!(f, "  upper      {}", opt(r.upper))?;
        writeln!(f, "  method     {:?}", r.method)?;
        if let Some(w) = &r.witness {
            let terms: Vec<String> = w.terms().iter().map(|(e, c)| format!("{c}x^{e}")).collect();
            writeln!(f, "  witness    {}", terms.join(" + "))?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct DistanceRow {
    code: String,
    n: u64,
    k: u64,
    lower: u64,
    upper: Option<u64>,
    exact: Option<u64>,
    method: DistanceMethod,
    witness_weight: Option<u64>,
}

impl Row for DistanceRow {
    const HEADER: &'static [&'static str] = &["code", "n", "k", "lower", "upper", "exact", "method", "witness_weight"];
    fn text(&self) -> String {
        format!("{} [{}, {}, {}]", self.code, self.n, self.k, d_label(self.lower, self.exact))
    }
}

fn distance(a: &DistanceArgs, format: Format, exec: Exec, out: &mut dyn Write) -> Result<()> {
    let spec = a.spec.spec()?;
    let budget = lcdbch::distance::SearchBudget {
        messages: a.max_messages,
        supports: a.max_supports,
    };
    let result = distance_auto(&spec, budget, exec)?;
    let report = DistanceReport {
        code: spec.label(),
        n: spec.n(),
        k: dimension_constructive(&spec),
        result,
    };
    emit_one(out, format, &report, |r| DistanceRow {
        code: r.code.clone(),
        n: r.n,
        k: r.k,
        lower: r.result.lower,
        upper: r.result.upper,
        exact: r.result.exact,
        method: r.result.method,
        witness_weight: r.result.witness.as_ref().map(|w| w.weight()),
    })
}

/// `(q, m)` pairs with `q` a prime power in `qs`, `m >= 2` in `ms`, and
/// `q^m <= max_qm`.
fn param_range(qs: args::Span, ms: args::Span, max_qm: u64) -> Vec<CosetParams> {
    let mut out = Vec::new();
    for q in qs.iter() {
        for m in ms.start.max(2)..=ms.end.min(63) {
            let within = lcdbch::arith::checked_pow(q, m as u32).is_some_and(|v| v <= max_qm);
            if within {
                if let Ok(p) = CosetParams::new(q, m as u32) {
                    out.push(p);
                }
            }
        }
    }
    out
}

#[derive(Serialize)]
struct VerifyRow {
    checked: u64,
    exact_checked: u64,
    bounds_checked: u64,
    skipped: u64,
    mismatches: usize,
}

impl Row for VerifyRow {
    const HEADER: &'static [&'static str] = &["checked", "exact_checked", "bounds_checked", "skipped", "mismatches"];
    fn text(&self) -> String {
        format!(
            "checked {} ({} exact, {} bounds), skipped {} not covered, mismatches {}",
            self.checked, self.exact_checked, self.bounds_checked, self.skipped, self.mismatches
        )
    }
}

struct VerifyReport<'a> {
    summary: &'a OracleSummary,
    limit: usize,
}

impl Serialize for VerifyReport<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.summary.serialize(s)
    }
}

impl std::fmt::Display for VerifyReport<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}", verify_row(self.summary).text())?;
        for m in self.summary.mismatches.iter().take(self.limit) {
            writeln!(
                f,
                "  {} {}: predicted {:?}, constructive k = {} ({})",
                m.theorem, m.code, m.predicted, m.constructive, m.note
            )?;
        }
        let hidden = self.summary.mismatches.len().saturating_sub(self.limit);
        if hidden > 0 {
            writeln!(f, "  ... {hidden} more")?;
        }
        Ok(())
    }
}

fn verify_row(s: &OracleSummary) -> VerifyRow {
    VerifyRow {
        checked: s.checked,
        exact_checked: s.exact_checked,
        bounds_checked: s.bounds_checked,
        skipped: s.skipped,
        mismatches: s.mismatches.len(),
    }
}

fn verify(a: &VerifyArgs, format: Format, exec: Exec, out: &mut dyn Write) -> Result<bool> {
    let explicit = a.q.is_some() && a.m.is_some();
    let params = if a.q.is_none() && a.m.is_none() {
        ParamGrid {
            max_qm: a.max_qm,
            binary_max_m: a.binary_max_m,
        }
        .params()
    } else {
        let qs = a.q.unwrap_or(args::Span { start: 2, end: a.max_qm });
        let ms = a.m.unwrap_or(args::Span { start: 2, end: 63 });
        param_range(qs, ms, if explicit { u64::MAX } else { a.max_qm })
    };
    let cfg = OracleConfig {
        theorems: if a.theorems.is_empty() {
            TheoremId::ALL.to_vec()
        } else {
            a.theorems.clone()
        },
        bounds_max_qm: a.bounds_max_qm,
        check_dispatch: !a.no_dispatch,
        ..Default::default()
    };
    let summary = oracle_on(&params, &cfg, exec);
    let report = VerifyReport {
        summary: &summary,
        limit: if a.all { usize::MAX } else { 10 },
    };
    emit_one(out, format, &report, |r| verify_row(r.summary))?;
    Ok(summary.is_clean())
}

#[derive(Serialize)]
struct GoldenRow {
    id: &'static str,
    family: &'static str,
    q: u64,
    m: u32,
    delta: u64,
    b: Option<u64>,
    n: u64,
    k: u64,
    distance: String,
}

impl Row for GoldenRow {
    const HEADER: &'static [&'static str] = &["id", "family", "q", "m", "delta", "b", "n", "k", "distance"];
    fn text(&self) -> String {
        format!("{:<20} [{}, {}, {}]", self.id, self.n, self.k, self.distance.replace(">=", "≥"))
    }
}

#[derive(Serialize)]
#[serde(transparent)]
struct MinDis(MinDisRow);

impl Row for MinDis {
    const HEADER: &'static [&'static str] = &["m", "delta", "n", "k", "bch_lower", "sphere_cap", "d"];
    fn text(&self) -> String {
        let r = &self.0;
        format!(
            "m={:<2} δ={:<2} [{}, {}, {}]",
            r.m,
            r.delta,
            r.n,
            r.k,
            r.d.map_or_else(|| format!("≥{}", r.bch_lower), |d| d.to_string())
        )
    }
}

fn table(a: &TableArgs, format: Format, exec: Exec, out: &mut dyn Write) -> Result<()> {
    match a.kind {
        TableKind::Golden => {
            let rows: Vec<GoldenRow> = golden_cases()
                .into_iter()
                .map(|c| {
                    let spec = c.spec();
                    GoldenRow {
                        id: c.id,
                        family: c.family.name(),
                        q: c.q,
                        m: c.m,
                        delta: c.delta,
                        b: c.b,
                        n: spec.n(),
                        k: dimension_constructive(&spec),
                        distance: match c.stated {
                            StatedDistance::Exact(d) => d.to_string(),
                            StatedDistance::Lower(d) => format!(">={d}"),
                        },
                    }
                })
                .collect();
            emit_rows(out, format, &rows)
        }
        TableKind::Mindis => {
            let rows: Vec<MinDis> = min_dis_cases()
                .into_iter()
                .filter(|&(m, _)| a.m.iter().contains(&(m as u64)))
                .map(|(m, d)| MinDis(min_dis_row(m, d)))
                .collect();
            emit_rows(out, format, &rows)
        }
        TableKind::DesignedQt => {
            let mut specs = Vec::new();
            for p in param_range(a.q, a.m, a.max_qm) {
                let ts = a.t.unwrap_or(args::Span {
                    start: 1,
                    end: p.m_bar() as u64,
                });
                for t in ts.iter() {
                    if let Some(pred) = dim_designed_qt(&p, t as u32).covered() {
                        specs.push(pred.spec);
                    }
                }
            }
            report_table(specs, a, exec, format, out)
        }
        TableKind::Family => {
            let family = a.family.context("--kind family needs --family")?;
            let mut specs = Vec::new();
            let mut rejected = 0;
            for p in param_range(a.q, a.m, a.max_qm) {
                let values: Vec<(Option<u64>, Option<u64>)> = match (a.u, a.delta) {
                    (Some(u), _) => u.iter().map(|u| (Some(u), None)).collect(),
                    (None, Some(d)) => d.iter().map(|d| (None, Some(d))).collect(),
                    (None, None) if family == args::FamilyArg::Melas => vec![(None, None)],
                    (None, None) => bail!("--kind family needs --u or --delta"),
                };
                for (u, delta) in values {
                    let args = SpecArgs {
                        family,
                        q: p.q(),
                        m: p.m(),
                        u,
                        delta,
                        designed: None,
                        b: a.b,
                    };
                    match args.spec() {
                        Ok(s) => specs.push(s),
                        Err(_) => rejected += 1,
                    }
                }
            }
            if rejected > 0 {
                eprintln!("skipped {rejected} parameter sets outside the family's domain");
            }
            report_table(specs, a, exec, format, out)
        }
    }
}

fn report_table(mut specs: Vec<CodeSpec>, a: &TableArgs, exec: Exec, format: Format, out: &mut dyn Write) -> Result<()> {
    specs.sort();
    specs.dedup();
    let opts = report_options(a.distance, false, exec);
    let rows = specs
        .iter()
        .map(|s| CodeReport::build(s, &opts).map(|r| ReportRow::from(&r)))
        .collect::<Result<Vec<_>, _>>()?;
    emit_rows(out, format, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use lcdbch::cosets::coset_size;

    #[test]
    fn coset_sizes_match_table() {
        let p = CosetParams::new(2, 4).unwrap();
        assert_eq!(coset_size(&p, 5), 2);
        assert_eq!(exception_list(&CosetParams::new(3, 5).unwrap()), vec![28, 29, 37, 46]);
    }
}
