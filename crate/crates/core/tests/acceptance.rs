//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lcdbch::bchcodes::{defining_set, dimension_constructive, hull_dimension, is_lcd, CodeSpec, Family};
use lcdbch::cosets::{exception_set_even_m, exception_sets_odd_m, intersection_cardinality, run_count, CosetParams};
use lcdbch::dimensions::TheoremId;
use lcdbch::distance::{distance_auto, DistanceMethod, SearchBudget};
use lcdbch::polyring::{Poly, RootField};
use lcdbch::sweep::{golden_cases, master_oracle, min_dis_row, OracleConfig, ParamGrid, StatedDistance};
use lcdbch::Exec;

/// Every `(n, k)` pair the suite must reproduce.
const GOLDEN_PAIRS: [(u64, u64); 37] = [
    (31, 11),
    (127, 71),
    (15, 7),
    (80, 56),
    (80, 34),
    (242, 152),
    (242, 82),
    (255, 207),
    (2186, 1457),
    (2186, 841),
    (24, 9),
    (48, 25),
    (242, 241),
    (242, 221),
    (242, 161),
    (80, 79),
    (80, 63),
    (1023, 863),
    (1023, 723),
    (1023, 573),
    (127, 29),
    (1023, 463),
    (1023, 243),
    (63, 39),
    (255, 223),
    (255, 193),
    (255, 161),
    (15, 3),
    (255, 195),
    (255, 135),
    (255, 83),
    (127, 113),
    (127, 85),
    (63, 51),
    (63, 27),
    (31, 20),
    (26, 13),
];

/// Golden rows whose exact distance is checked, and whether a witness
/// (rather than a search) must produce it.
const EXACT_DISTANCE_CASES: [(&str, bool); 9] = [
    ("narrow-2-5-1", false),
    ("narrow-2-4-1", false),
    ("lcd-a-5-2-1", false),
    ("lcd-a-7-2-1", false),
    ("one-sided-2-6-1", false),
    ("lcd-a-2-4-1", false),
    ("lcd-a-4-4-1", true),
    ("lcd-b-2-5-3", false),
    ("lcd-b-3-3-4", false),
];

const GOLDEN_LIMIT: Duration = Duration::from_secs(30);
const SEARCH_LIMIT: Duration = Duration::from_secs(60);
const WITNESS_LIMIT: Duration = Duration::from_secs(1);
const ORACLE_LIMIT: Duration = Duration::from_secs(300);
const EXCEPTION_LIMIT: Duration = Duration::from_secs(120);

const EXCEPTION_MAX_QM: u64 = 2187;
const INTERSECTION_MAX_QM: u64 = 729;
const HULL_MAX_QM: u64 = 1 << 10;
const RUN_MAX_Q: u64 = 5;
const RUN_MAX_R: u32 = 4;
const RUN_MAX_S: u32 = 12;
const MANN_MAX_QM: u64 = 1 << 16;
const FACTOR_MAX_QM: u64 = 1 << 12;

type Verdict = Result<String, String>;

/// Name, optional wall-clock limit and check.
type Criterion = (&'static str, Option<Duration>, fn() -> Verdict);

fn all_params(max_qm: u64) -> Vec<CosetParams> {
    ParamGrid { max_qm, binary_max_m: 0 }.params()
}

fn golden_suite() -> Verdict {
    let cases = golden_cases();
    let mut errors = Vec::new();
    for case in &cases {
        let spec = case.spec();
        let k = dimension_constructive(&spec);
        let naive = common::naive_dimension(&spec);
        if (spec.n(), k) != (case.n, case.k) || naive != k {
            errors.push(format!(
                "{}: got [{}, {k}] (naive {naive}), want [{}, {}]",
                case.id,
                spec.n(),
                case.n,
                case.k
            ));
        }
        let formula = lcdbch::dimensions::predict(&spec).covered().map(|p| p.value.admits(k));
        if formula == Some(false) {
            errors.push(format!("{}: closed form disagrees", case.id));
        }
    }
    let produced: BTreeSet<(u64, u64)> = cases.iter().map(|c| (c.n, c.k)).collect();
    for pair in GOLDEN_PAIRS {
        if !produced.contains(&pair) {
            errors.push(format!("pair {pair:?} has no golden row"));
        }
    }
    if errors.is_empty() {
        Ok(format!("{} rows, {} distinct pairs", cases.len(), GOLDEN_PAIRS.len()))
    } else {
        Err(errors.join("; "))
    }
}

fn exact_distances() -> Verdict {
    let cases = golden_cases();
    let mut errors = Vec::new();
    let mut slowest = Duration::ZERO;
    for (id, needs_witness) in EXACT_DISTANCE_CASES {
        let case = cases.iter().find(|c| c.id == id).ok_or(format!("missing golden row {id}"))?;
        let StatedDistance::Exact(want) = case.stated else {
            return Err(format!("{id} has no exact distance"));
        };
        let start = Instant::now();
        let got = distance_auto(&case.spec(), SearchBudget::default(), Exec::Parallel).map_err(|e| format!("{id}: {e}"))?;
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        let limit = if got.method == DistanceMethod::Witness {
            WITNESS_LIMIT
        } else {
            SEARCH_LIMIT
        };
        if got.exact != Some(want) {
            errors.push(format!("{id}: got {:?}, want {want}", got.exact));
        }
        if needs_witness && got.method != DistanceMethod::Witness {
            errors.push(format!("{id}: expected a witness, used {:?}", got.method));
        }
        if elapsed > limit {
            errors.push(format!("{id}: {elapsed:?} exceeds {limit:?}"));
        }
    }
    for m in 5..=13 {
        let row = min_dis_row(m, 3);
        if row.d != Some(6) {
            errors.push(format!("optimal-code table m = {m}: {row:?}"));
        }
    }
    if errors.is_empty() {
        Ok(format!(
            "{} codes plus 9 table rows, slowest {slowest:.2?}",
            EXACT_DISTANCE_CASES.len()
        ))
    } else {
        Err(errors.join("; "))
    }
}

fn dimension_oracle() -> Verdict {
    let summary = master_oracle(&OracleConfig::default(), Exec::Parallel);
    let text = format!(
        "{} checked ({} exact, {} bounds), {} outside domain",
        summary.checked, summary.exact_checked, summary.bounds_checked, summary.skipped
    );
    if summary.is_clean() {
        Ok(text)
    } else {
        Err(format!(
            "{text}; {} mismatches, first {:?}",
            summary.mismatches.len(),
            summary.mismatches[0]
        ))
    }
}

fn check_exceptions(p: &CosetParams) -> Result<u64, String> {
    let (q, m) = (p.q(), p.m());
    let top_unit = p.pow(p.m_bar());
    let mut checked = 0;
    for u in 1..q {
        let (non_leaders, short) = common::leader_exceptions(q, m, u * top_unit);
        let (want_non, want_short) = if m % 2 == 0 {
            let e = exception_set_even_m(p, u).map_err(|e| e.to_string())?;
            (e.non_leaders, e.half_size_leaders)
        } else {
            let (j1, j2) = exception_sets_odd_m(p, u).map_err(|e| e.to_string())?;
            let mut all: Vec<u64> = j1.into_iter().chain(j2).collect();
            all.sort_unstable();
            (all, Vec::new())
        };
        if non_leaders != want_non || short != want_short {
            return Err(format!(
                "q = {q}, m = {m}, u = {u}: brute ({non_leaders:?}, {short:?}) vs ({want_non:?}, {want_short:?})"
            ));
        }
        checked += 1;
    }
    Ok(checked)
}

fn exception_sets() -> Verdict {
    let params: Vec<CosetParams> = all_params(EXCEPTION_MAX_QM)
        .into_iter()
        .filter(|p| p.m() % 2 == 0 || p.m() >= 5)
        .collect();
    let results = Exec::Parallel.map(&params, check_exceptions);
    let mut total = 0;
    for r in results {
        total += r?;
    }
    Ok(format!("{total} (q, m, u) triples"))
}

fn intersections() -> Verdict {
    let mut checked = 0;
    for p in all_params(INTERSECTION_MAX_QM) {
        for u in 1..p.q() {
            let Ok(formula) = intersection_cardinality(&p, u) else {
                continue;
            };
            let brute = common::intersection_size(p.q(), p.m(), u) as u64;
            if brute != formula {
                return Err(format!(
                    "q = {}, m = {}, u = {u}: brute {brute}, closed form {formula}",
                    p.q(),
                    p.m()
                ));
            }
            checked += 1;
        }
    }
    if checked == 0 {
        return Err("no valid triples".into());
    }
    Ok(format!("{checked} (q, m, u) triples"))
}

/// Every LCD family member with `q^m <= HULL_MAX_QM`, one per distinct
/// defining set.
fn lcd_specs(p: CosetParams) -> Vec<CodeSpec> {
    let half = p.n().div_ceil(2);
    let mut specs = Vec::new();
    for family in Family::ALL.into_iter().filter(|f| f.is_lcd_family()) {
        let deltas = if family == Family::MelasEvenlike { 2..=2 } else { 1..=half };
        specs.extend(deltas.filter_map(|d| CodeSpec::new(family, p, d, None).ok()));
    }
    let mut seen = BTreeSet::new();
    specs.retain(|s| seen.insert(defining_set(s).leaders().to_vec()));
    specs
}

fn lcd_end_to_end() -> Verdict {
    let specs: Vec<CodeSpec> = all_params(HULL_MAX_QM).into_iter().flat_map(lcd_specs).collect();
    let results = Exec::Parallel.map(&specs, |spec| -> Result<(), String> {
        let set = defining_set(spec);
        if !set.is_negation_closed() || !is_lcd(&set) {
            return Err(format!("{}: defining set not closed under negation", spec.label()));
        }
        let rf = RootField::new(spec.params()).map_err(|e| e.to_string())?;
        match hull_dimension(spec, &rf) {
            Ok(0) => Ok(()),
            Ok(h) => Err(format!("{}: hull dimension {h}", spec.label())),
            Err(e) => Err(format!("{}: {e}", spec.label())),
        }
    });
    for r in results {
        r?;
    }
    Ok(format!("{} distinct LCD codes", specs.len()))
}

fn runs_and_mann() -> Verdict {
    let mut compared = 0;
    for q in 2..=RUN_MAX_Q {
        let hist = common::run_histogram(q, RUN_MAX_S as usize);
        for r in 1..=RUN_MAX_R {
            for s in 0..=RUN_MAX_S {
                let brute = common::words_with_run(&hist, r as usize, s as usize);
                let rec = run_count(q, r, s);
                if brute != rec {
                    return Err(format!("run_count({q}, {r}, {s}) = {rec}, enumeration {brute}"));
                }
                compared += 1;
            }
        }
    }
    let cfg = OracleConfig {
        grid: ParamGrid {
            max_qm: MANN_MAX_QM,
            binary_max_m: 16,
        },
        theorems: vec![TheoremId::LcdBMann, TheoremId::NarrowMannDegree],
        bounds_max_qm: MANN_MAX_QM,
        check_dispatch: false,
    };
    let summary = master_oracle(&cfg, Exec::Parallel);
    if !summary.is_clean() {
        return Err(format!("Mann bounds: {:?}", summary.mismatches[0]));
    }
    Ok(format!("{compared} run counts, {} Mann instances", summary.checked))
}

fn factorization() -> Verdict {
    let params = all_params(FACTOR_MAX_QM);
    let results = Exec::Parallel.map(&params, |p| -> Result<(), String> {
        let rf = RootField::new(p).map_err(|e| e.to_string())?;
        let ring = rf.ring();
        let n = p.n();
        let table = common::leader_table(p.q(), n);
        let mut minimal: Vec<Option<Poly>> = vec![None; n as usize];
        let mut product = Poly::one();
        for s in 0..n {
            let leader = table[s as usize].0;
            if leader == s {
                let f = rf.minimal_poly(s).map_err(|e| e.to_string())?;
                product = ring.mul(&product, &f);
                minimal[s as usize] = Some(f);
            }
        }
        if product != ring.x_n_minus_one(n as usize) {
            return Err(format!("q = {}, m = {}: product differs from x^n - 1", p.q(), p.m()));
        }
        for s in 0..n {
            let Some(f) = &minimal[s as usize] else { continue };
            let neg_leader = table[((n - s) % n) as usize].0;
            let g = minimal[neg_leader as usize].as_ref().expect("leader has a polynomial");
            let rec = ring.monic(&ring.reciprocal(f).map_err(|e| e.to_string())?);
            if &rec != g {
                return Err(format!("q = {}, m = {}: reciprocal of m_{s} is not m_{}", p.q(), p.m(), n - s));
            }
        }
        Ok(())
    });
    for r in results {
        r?;
    }
    Ok(format!("{} (q, m) pairs", params.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("golden (n, k) pairs", Some(GOLDEN_LIMIT), golden_suite),
        ("exact distances", None, exact_distances),
        ("dimension oracle", Some(ORACLE_LIMIT), dimension_oracle),
        ("leader exception sets", Some(EXCEPTION_LIMIT), exception_sets),
        ("intersection cardinalities", None, intersections),
        ("LCD hull and negation closure", None, lcd_end_to_end),
        ("run counts and Mann bounds", None, runs_and_mann),
        ("minimal polynomial factorization", None, factorization),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut verdict = run();
        let elapsed = start.elapsed();
        if let (Ok(msg), Some(limit)) = (&verdict, limit) {
            if elapsed > limit {
                verdict = Err(format!("{msg}; took {elapsed:.1?}, limit {limit:?}"));
            }
        }
        match verdict {
            Ok(msg) => println!("PASS {} {name}: {msg} [{elapsed:.2?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
