//! Parameter sweeps: the dimension oracle, golden example rows and the
//! optimal-code table.

use serde::Serialize;

use crate::arith::prime_powers_up_to;
use crate::bchcodes::{dimension_constructive, CodeSpec, Family};
use crate::cosets::CosetParams;
use crate::dimensions::{
    dim_designed_qt, dim_lcd_a, dim_lcd_b_delta3, dim_lcd_b_mann, dim_lcd_b_monomial, dim_lcd_b_small_delta, dim_lcd_b_ternary_delta4,
    dim_melas_evenlike, dim_narrow, dim_narrow_mann, dim_one_sided, predict, DimPrediction, DimValue, Side, TheoremId,
};
use crate::distance::{bch_lower, distance_auto, sphere_packing_cap, DistanceError, DistanceResult, SearchBudget};
use crate::{Coverage, Exec};

/// Which `(q, m)` pairs a sweep visits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamGrid {
    /// Every prime power `q` and `m >= 2` with `q^m <= max_qm`.
    pub max_qm: u64,
    /// Additional binary lengths up to this `m`.
    pub binary_max_m: u32,
}

impl Default for ParamGrid {
    fn default() -> Self {
        ParamGrid {
            max_qm: 6561,
            binary_max_m: 20,
        }
    }
}

impl ParamGrid {
    pub fn params(&self) -> Vec<CosetParams> {
        let mut out = Vec::new();
        for q in prime_powers_up_to(self.max_qm.isqrt()) {
            let mut m = 2;
            while crate::arith::checked_pow(q, m).is_some_and(|v| v <= self.max_qm) {
                out.push(CosetParams::new(q, m).expect("prime power"));
                m += 1;
            }
        }
        for m in 2..=self.binary_max_m {
            let p = CosetParams::new(2, m).expect("binary");
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out.sort_by_key(|p| (p.q(), p.m()));
        out
    }
}

/// Every instance of `theorem` on one `(q, m)`, covered or not.
pub fn instances(theorem: TheoremId, p: &CosetParams) -> Vec<Coverage<DimPrediction>> {
    let us = 1..p.q();
    let lambdas = p.m_bar()..p.m();
    match theorem {
        TheoremId::NarrowSense => us.map(|u| dim_narrow(p, u)).collect(),
        TheoremId::OneSided => us
            .flat_map(|u| [dim_one_sided(p, u, Side::Upper), dim_one_sided(p, u, Side::Lower)])
            .collect(),
        TheoremId::LcdA => us.map(|u| dim_lcd_a(p, u)).collect(),
        TheoremId::DesignedQt => (1..=p.m_bar()).map(|t| dim_designed_qt(p, t)).collect(),
        TheoremId::LcdBMonomial => us.map(|u| dim_lcd_b_monomial(p, u)).collect(),
        TheoremId::LcdBSmallDelta => {
            let top = (2 * p.pow(p.m_bar()) + 1).min(p.n() / 2);
            (2..=top).map(|d| dim_lcd_b_small_delta(p, d)).collect()
        }
        TheoremId::LcdBMann => lambdas.map(|l| dim_lcd_b_mann(p, l)).collect(),
        TheoremId::NarrowMannDegree => lambdas.map(|l| dim_narrow_mann(p, l)).collect(),
        TheoremId::MelasEvenlike => vec![dim_melas_evenlike(p)],
        TheoremId::LcdBDelta3 => vec![dim_lcd_b_delta3(p)],
        TheoremId::LcdBTernaryDelta4 => vec![dim_lcd_b_ternary_delta4(p)],
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleConfig {
    pub grid: ParamGrid,
    pub theorems: Vec<TheoremId>,
    /// `q^m` ceiling for bound-type formulas.
    pub bounds_max_qm: u64,
    /// Also require [`predict`] to reproduce each covered instance.
    pub check_dispatch: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            grid: ParamGrid::default(),
            theorems: TheoremId::ALL.to_vec(),
            bounds_max_qm: 1 << 16,
            check_dispatch: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub theorem: TheoremId,
    pub code: String,
    pub predicted: DimValue,
    pub constructive: u64,
    pub note: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OracleSummary {
    pub checked: u64,
    pub exact_checked: u64,
    pub bounds_checked: u64,
    pub skipped: u64,
    pub mismatches: Vec<Mismatch>,
}

impl OracleSummary {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn merge(&mut self, other: OracleSummary) {
        self.checked += other.checked;
        self.exact_checked += other.exact_checked;
        self.bounds_checked += other.bounds_checked;
        self.skipped += other.skipped;
        self.mismatches.extend(other.mismatches);
    }
}

fn check_one(theorem: TheoremId, cov: Coverage<DimPrediction>, dispatch: bool) -> OracleSummary {
    let mut s = OracleSummary::default();
    let pred = match cov {
        Coverage::Covered(p) => p,
        Coverage::NotCovered { .. } => {
            s.skipped = 1;
            return s;
        }
    };
    let k = dimension_constructive(&pred.spec);
    s.checked = 1;
    match pred.value {
        DimValue::Exact { .. } => s.exact_checked = 1,
        DimValue::Bounds { .. } => s.bounds_checked = 1,
    }
    let mismatch = |note: String| Mismatch {
        theorem,
        code: pred.spec.label(),
        predicted: pred.value,
        constructive: k,
        note,
    };
    if !pred.value.admits(k) {
        s.mismatches.push(mismatch("formula".into()));
    } else if dispatch {
        match predict(&pred.spec) {
            Coverage::Covered(d) if d.value.admits(k) => {}
            Coverage::Covered(d) => s
                .mismatches
                .push(mismatch(format!("dispatcher chose {} with {:?}", d.source, d.value))),
            Coverage::NotCovered { reason } => s.mismatches.push(mismatch(format!("dispatcher: {reason}"))),
        }
    }
    s
}

/// Compares every covered closed form with the constructive dimension.
pub fn master_oracle(cfg: &OracleConfig, exec: Exec) -> OracleSummary {
    oracle_on(&cfg.grid.params(), cfg, exec)
}

/// [`master_oracle`] over an explicit list of `(q, m)` pairs; only the
/// theorem list, the bounds ceiling and the dispatch flag of `cfg` apply.
pub fn oracle_on(params: &[CosetParams], cfg: &OracleConfig, exec: Exec) -> OracleSummary {
    let mut jobs: Vec<(TheoremId, CosetParams)> = Vec::new();
    for p in params {
        for &t in &cfg.theorems {
            let bounds_only = t == TheoremId::LcdBMann;
            if !bounds_only || p.pow(p.m()) <= cfg.bounds_max_qm {
                jobs.push((t, *p));
            }
        }
    }
    let parts = exec.map(&jobs, |&(t, p)| {
        let mut s = OracleSummary::default();
        for cov in instances(t, &p) {
            s.merge(check_one(t, cov, cfg.check_dispatch));
        }
        s
    });
    let mut total = OracleSummary::default();
    for part in parts {
        total.merge(part);
    }
    total
}

/// How the source annotates the minimum distance of an example.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum StatedDistance {
    Exact(u64),
    Lower(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoldenCase {
    pub id: &'static str,
    pub family: Family,
    pub q: u64,
    pub m: u32,
    pub delta: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<u64>,
    pub n: u64,
    pub k: u64,
    pub stated: StatedDistance,
}

impl GoldenCase {
    pub fn spec(&self) -> CodeSpec {
        let p = CosetParams::new(self.q, self.m).expect("golden parameters are valid");
        CodeSpec::new(self.family, p, self.delta, self.b).expect("golden spec passes its gates")
    }
}

macro_rules! golden {
    ($id:literal, $fam:ident, $q:literal, $m:literal, $delta:literal, $b:expr, [$n:literal, $k:literal], $d:expr) => {
        GoldenCase {
            id: $id,
            family: Family::$fam,
            q: $q,
            m: $m,
            delta: $delta,
            b: $b,
            n: $n,
            k: $k,
            stated: $d,
        }
    };
}

use StatedDistance::{Exact as Ex, Lower as Ge};

/// Every worked example, with the family parameters that produce it.
pub fn golden_cases() -> Vec<GoldenCase> {
    vec![
        golden!("narrow-2-5-1", Narrow, 2, 5, 9, Some(1), [31, 11], Ex(11)),
        golden!("narrow-2-7-1", Narrow, 2, 7, 17, Some(1), [127, 71], Ex(19)),
        golden!("narrow-2-4-1", Narrow, 2, 4, 5, Some(1), [15, 7], Ex(5)),
        golden!("narrow-3-4-1", Narrow, 3, 4, 10, Some(1), [80, 56], Ex(10)),
        golden!("narrow-3-4-2", Narrow, 3, 4, 19, Some(1), [80, 34], Ex(20)),
        golden!("narrow-3-5-1", Narrow, 3, 5, 28, Some(1), [242, 152], Ge(28)),
        golden!("narrow-3-5-2", Narrow, 3, 5, 55, Some(1), [242, 82], Ge(55)),
        golden!("narrow-4-4-1", Narrow, 4, 4, 17, Some(1), [255, 207], Ge(17)),
        golden!("narrow-4-4-2", Narrow, 4, 4, 33, Some(1), [255, 161], Ge(33)),
        golden!("narrow-4-4-3", Narrow, 4, 4, 49, Some(1), [255, 119], Ge(49)),
        golden!("lcd-a-3-7-1", LcdAEvenN, 3, 7, 82, None, [2186, 1457], Ge(164)),
        golden!("lcd-a-3-7-2", LcdAEvenN, 3, 7, 163, None, [2186, 841], Ge(326)),
        golden!("lcd-a-5-2-1", LcdAEvenN, 5, 2, 6, None, [24, 9], Ex(12)),
        golden!("lcd-a-7-2-1", LcdAEvenN, 7, 2, 8, None, [48, 25], Ex(16)),
        golden!("designed-qt-3-5-1", LcdAEvenN, 3, 5, 1, None, [242, 241], Ex(2)),
        golden!("designed-qt-3-5-2", LcdAEvenN, 3, 5, 4, None, [242, 221], Ex(8)),
        golden!("designed-qt-3-5-3", LcdAEvenN, 3, 5, 13, None, [242, 161], Ex(26)),
        golden!("designed-qt-3-4-1", LcdAEvenN, 3, 4, 1, None, [80, 79], Ex(2)),
        golden!("designed-qt-3-4-2", LcdAEvenN, 3, 4, 4, None, [80, 63], Ex(8)),
        golden!("one-sided-2-7-1", Generic, 2, 7, 9, Some(64), [127, 71], Ex(19)),
        golden!("one-sided-4-5-1", Generic, 4, 5, 33, Some(512), [1023, 863], Ge(33)),
        golden!("one-sided-4-5-2", Generic, 4, 5, 65, Some(512), [1023, 723], Ge(65)),
        golden!("one-sided-4-5-3", Generic, 4, 5, 97, Some(512), [1023, 573], Ge(97)),
        golden!("lcd-a-2-7-1", LcdAOddN, 2, 7, 9, None, [127, 29], Ex(37)),
        golden!("lcd-a-4-5-1", LcdAOddN, 4, 5, 33, None, [1023, 723], Ge(65)),
        golden!("lcd-a-4-5-2", LcdAOddN, 4, 5, 65, None, [1023, 463], Ge(129)),
        golden!("lcd-a-4-5-3", LcdAOddN, 4, 5, 97, None, [1023, 243], Ge(193)),
        golden!("one-sided-2-6-1", Generic, 2, 6, 5, Some(32), [63, 39], Ex(9)),
        golden!("one-sided-4-4-1", Generic, 4, 4, 9, Some(128), [255, 223], Ge(9)),
        golden!("one-sided-4-4-2", Generic, 4, 4, 17, Some(128), [255, 193], Ge(17)),
        golden!("one-sided-4-4-3", Generic, 4, 4, 25, Some(128), [255, 161], Ge(25)),
        golden!("lcd-a-2-4-1", LcdAOddN, 2, 4, 3, None, [15, 3], Ex(5)),
        golden!("lcd-a-4-4-1", LcdAOddN, 4, 4, 9, None, [255, 195], Ex(17)),
        golden!("lcd-a-4-4-2", LcdAOddN, 4, 4, 17, None, [255, 135], Ge(33)),
        golden!("lcd-a-4-4-3", LcdAOddN, 4, 4, 25, None, [255, 83], Ge(49)),
        golden!("designed-qt-2-7-2", LcdAOddN, 2, 7, 2, None, [127, 113], Ex(5)),
        golden!("designed-qt-2-7-3", LcdAOddN, 2, 7, 4, None, [127, 85], Ex(11)),
        golden!("designed-qt-2-7-4", LcdAOddN, 2, 7, 8, None, [127, 29], Ex(37)),
        golden!("designed-qt-2-6-2", LcdAOddN, 2, 6, 2, None, [63, 51], Ex(3)),
        golden!("designed-qt-2-6-3", LcdAOddN, 2, 6, 4, None, [63, 27], Ex(7)),
        golden!("lcd-b-2-5-3", LcdB, 2, 5, 3, None, [31, 20], Ex(6)),
        golden!("lcd-b-3-3-4", LcdB, 3, 3, 4, None, [26, 13], Ex(8)),
    ]
}

/// A golden case next to what the crate computes for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoldenRow {
    #[serde(flatten)]
    pub case: GoldenCase,
    pub k_constructive: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_formula: Option<u64>,
    pub bch_lower: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<DistanceResult>,
}

impl GoldenRow {
    pub fn dimension_ok(&self) -> bool {
        self.case.k == self.k_constructive && self.k_formula.is_none_or(|k| k == self.case.k)
    }
}

pub fn golden_row(case: &GoldenCase, distance: Option<SearchBudget>, exec: Exec) -> Result<GoldenRow, DistanceError> {
    let spec = case.spec();
    let k_formula = predict(&spec).covered().and_then(|p| match p.value {
        DimValue::Exact { k } => Some(k),
        DimValue::Bounds { .. } => None,
    });
    let distance = match distance {
        Some(budget) => Some(distance_auto(&spec, budget, exec)?),
        None => None,
    };
    Ok(GoldenRow {
        case: case.clone(),
        k_constructive: dimension_constructive(&spec),
        k_formula,
        bch_lower: bch_lower(&spec),
        distance,
    })
}

/// One row of the optimal binary code table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinDisRow {
    pub m: u32,
    pub delta: u64,
    pub n: u64,
    pub k: u64,
    pub bch_lower: u64,
    pub sphere_cap: bool,
    /// `2δ` when the BCH bound meets the sphere-packing cap.
    pub d: Option<u64>,
}

/// `(m, δ)` pairs of the binary optimal-code table.
pub fn min_dis_cases() -> Vec<(u32, u64)> {
    let mut out = Vec::new();
    for m in 5..=20u32 {
        let deltas: &[u64] = match m {
            5..=7 => &[3],
            8..=13 => &[3, 5],
            14..=19 => &[3, 5, 7],
            _ => &[3, 5, 7, 9],
        };
        out.extend(deltas.iter().map(|&d| (m, d)));
    }
    out
}

pub fn min_dis_row(m: u32, delta: u64) -> MinDisRow {
    let p = CosetParams::new(2, m).expect("binary");
    let spec = CodeSpec::lcd_b(p, delta).expect("small δ passes the gate");
    let k = dimension_constructive(&spec);
    let lower = bch_lower(&spec);
    let cap = sphere_packing_cap(spec.n(), k, 2, delta);
    MinDisRow {
        m,
        delta,
        n: spec.n(),
        k,
        bch_lower: lower,
        sphere_cap: cap,
        d: (cap && lower >= 2 * delta).then_some(2 * delta),
    }
}

/// Outcome of an empirical check of an open statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub code: String,
    pub n: u64,
    pub k: u64,
    pub expected: u64,
    pub distance: DistanceResult,
    /// `Some(true)` when the exact distance matches, `None` if undecided.
    pub holds: Option<bool>,
}

fn conjecture_row(spec: CodeSpec, expected: u64, budget: SearchBudget, exec: Exec) -> Result<ConjectureRow, DistanceError> {
    let distance = distance_auto(&spec, budget, exec)?;
    let holds = match distance.exact {
        Some(d) => Some(d == expected),
        None if distance.lower > expected || distance.upper.is_some_and(|u| u < expected) => Some(false),
        None => None,
    };
    Ok(ConjectureRow {
        code: spec.label(),
        n: spec.n(),
        k: dimension_constructive(&spec),
        expected,
        distance,
        holds,
    })
}

/// q odd, designed distance `q^t - 1`: is the distance exactly `q^t - 1`?
pub fn conjecture_designed_qt(pairs: &[(u64, u32)], budget: SearchBudget, exec: Exec) -> Result<Vec<ConjectureRow>, DistanceError> {
    let mut rows = Vec::new();
    for &(q, m) in pairs {
        let p = CosetParams::new(q, m).map_err(crate::bchcodes::CodeError::from)?;
        for t in 1..=p.m_bar() {
            if let Coverage::Covered(pred) = dim_designed_qt(&p, t) {
                if p.q_odd() {
                    rows.push(conjecture_row(pred.spec, p.pow(t) - 1, budget, exec)?);
                }
            }
        }
    }
    Ok(rows)
}

/// Family-B codes at `δ = q^λ - 1`: is the distance exactly `2δ`?
pub fn conjecture_family_b(pairs: &[(u64, u32)], budget: SearchBudget, exec: Exec) -> Result<Vec<ConjectureRow>, DistanceError> {
    let mut rows = Vec::new();
    for &(q, m) in pairs {
        let p = CosetParams::new(q, m).map_err(crate::bchcodes::CodeError::from)?;
        for lambda in 1..p.m() {
            let delta = p.pow(lambda) - 1;
            if let Ok(spec) = CodeSpec::lcd_b(p, delta) {
                rows.push(conjecture_row(spec, 2 * delta, budget, exec)?);
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_contents() {
        let g = ParamGrid {
            max_qm: 81,
            binary_max_m: 8,
        };
        let ps = g.params();
        assert!(ps.contains(&CosetParams::new(9, 2).unwrap()));
        assert!(ps.contains(&CosetParams::new(2, 8).unwrap()));
        assert!(!ps.contains(&CosetParams::new(11, 2).unwrap()));
    }

    #[test]
    fn small_oracle_is_clean() {
        let cfg = OracleConfig {
            grid: ParamGrid {
                max_qm: 729,
                binary_max_m: 9,
            },
            ..Default::default()
        };
        let s = master_oracle(&cfg, Exec::Parallel);
        assert!(s.is_clean(), "{:#?}", s.mismatches);
        assert!(s.checked > 100 && s.skipped > 0);
    }

    #[test]
    fn golden_dimensions() {
        for case in golden_cases() {
            let row = golden_row(&case, None, Exec::Sequential).unwrap();
            assert!(row.dimension_ok(), "{row:?}");
        }
    }

    #[test]
    fn min_dis_small() {
        let r = min_dis_row(8, 3);
        assert_eq!((r.k, r.d), (238, Some(6)));
        assert_eq!(min_dis_cases().len(), 3 + 12 + 18 + 4);
    }
}
