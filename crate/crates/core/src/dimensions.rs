//! Closed-form dimensions of the code families.
//!
//! Each `dim_*` function checks its hypotheses and returns
//! [`Coverage::NotCovered`] outside them. [`predict`] picks the most
//! specific formula for an arbitrary [`CodeSpec`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bchcodes::{CodeSpec, Family};
use crate::cosets::{run_count, CosetParams};
use crate::Coverage;

/// Identifier of a dimension formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    NarrowSense,
    OneSided,
    LcdA,
    DesignedQt,
    LcdBMonomial,
    LcdBSmallDelta,
    LcdBMann,
    NarrowMannDegree,
    MelasEvenlike,
    LcdBDelta3,
    LcdBTernaryDelta4,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::NarrowSense,
        TheoremId::OneSided,
        TheoremId::LcdA,
        TheoremId::DesignedQt,
        TheoremId::LcdBMonomial,
        TheoremId::LcdBSmallDelta,
        TheoremId::LcdBMann,
        TheoremId::NarrowMannDegree,
        TheoremId::MelasEvenlike,
        TheoremId::LcdBDelta3,
        TheoremId::LcdBTernaryDelta4,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::NarrowSense => "narrow-sense",
            TheoremId::OneSided => "one-sided",
            TheoremId::LcdA => "lcd-a",
            TheoremId::DesignedQt => "designed-qt",
            TheoremId::LcdBMonomial => "lcd-b-monomial",
            TheoremId::LcdBSmallDelta => "lcd-b-small-delta",
            TheoremId::LcdBMann => "lcd-b-mann",
            TheoremId::NarrowMannDegree => "narrow-mann-degree",
            TheoremId::MelasEvenlike => "melas-evenlike",
            TheoremId::LcdBDelta3 => "lcd-b-delta3",
            TheoremId::LcdBTernaryDelta4 => "lcd-b-ternary-delta4",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TheoremId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "thm-gene" {
            return Ok(TheoremId::LcdBSmallDelta);
        }
        TheoremId::ALL.into_iter().find(|t| t.id() == s).ok_or_else(|| {
            let ids: Vec<&str> = TheoremId::ALL.iter().map(|t| t.id()).collect();
            format!("unknown theorem '{s}'; expected one of {}", ids.join(", "))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DimValue {
    Exact { k: u64 },
    Bounds { k_lower: u64, k_upper: u64 },
}

impl DimValue {
    /// Whether a constructive dimension is consistent with this value.
    pub fn admits(&self, k: u64) -> bool {
        match *self {
            DimValue::Exact { k: e } => e == k,
            DimValue::Bounds { k_lower, k_upper } => k_lower <= k && k <= k_upper,
        }
    }
}

/// A minimum-distance statement attached to some formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceClaim {
    Exact(u64),
    AtLeast(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimPrediction {
    pub spec: CodeSpec,
    #[serde(flatten)]
    pub value: DimValue,
    pub source: TheoremId,
    /// The hypotheses that were checked, in words.
    pub domain: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<DistanceClaim>,
}

impl DimPrediction {
    fn exact(spec: CodeSpec, k: i128, source: TheoremId, domain: impl Into<String>) -> Coverage<Self> {
        if k < 0 {
            return Coverage::not_covered(format!("{source} gives a negative dimension"));
        }
        Coverage::Covered(DimPrediction {
            spec,
            value: DimValue::Exact { k: k as u64 },
            source,
            domain: domain.into(),
            distance: None,
        })
    }

    fn with_distance(mut self, claim: DistanceClaim) -> Self {
        self.distance = Some(claim);
        self
    }
}

fn nc<T>(reason: impl Into<String>) -> Coverage<T> {
    Coverage::not_covered(reason)
}

macro_rules! spec_or_nc {
    ($e:expr) => {
        match $e {
            Ok(s) => s,
            Err(err) => return Coverage::not_covered(err.to_string()),
        }
    };
}

fn u_in_range(p: &CosetParams, u: u64) -> bool {
    1 <= u && u < p.q()
}

/// `(q, m, n, q^m̄)` as `i128`.
fn ints(p: &CosetParams) -> (i128, i128, i128, i128) {
    (p.q() as i128, p.m() as i128, p.n() as i128, p.pow(p.m_bar()) as i128)
}

fn narrow_formula(p: &CosetParams, u: u64) -> Option<i128> {
    let (q, m, n, _) = ints(p);
    let u = u as i128;
    if p.m_odd() {
        (p.m() >= 5).then(|| {
            let h = p.pow((p.m() - 1) / 2) as i128;
            n - (u * h - u * u + u) * (q - 1) * m
        })
    } else {
        let h = p.pow(p.m() / 2 - 1) as i128;
        Some(n - u * h * (q - 1) * m + (u - 1) * (u - 1) * m / 2)
    }
}

/// Narrow-sense code with designed distance `u q^{m̄} + 1`.
pub fn dim_narrow(p: &CosetParams, u: u64) -> Coverage<DimPrediction> {
    if !u_in_range(p, u) {
        return nc("requires 1 <= u <= q-1");
    }
    let designed = u * p.pow(p.m_bar()) + 1;
    let spec = spec_or_nc!(CodeSpec::narrow(*p, designed));
    let Some(k) = narrow_formula(p, u) else {
        return nc("requires m >= 5 when m is odd");
    };
    let pred = DimPrediction::exact(
        spec,
        k,
        TheoremId::NarrowSense,
        "δ = u q^m̄ + 1, 1 <= u <= q-1; m odd >= 5 or m even",
    );
    if u == 1 && !p.m_odd() {
        pred.map(|d| d.with_distance(DistanceClaim::Exact(designed)))
    } else {
        pred
    }
}

/// Which end of the symmetric range a one-sided code sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// Starts just above the middle of `Z_n`.
    Upper,
    /// Ends just below the middle.
    Lower,
}

/// One of the two single-sided constituents of the family-A code: a
/// `GENERIC` code starting at or ending just below the middle of `Z_n`.
pub fn dim_one_sided(p: &CosetParams, u: u64, side: Side) -> Coverage<DimPrediction> {
    if !u_in_range(p, u) {
        return nc("requires 1 <= u <= q-1");
    }
    let (q, m, n, top) = ints(p);
    let ui = u as i128;
    if p.m_odd() && p.m() < 5 {
        return nc("requires m >= 5 when m is odd");
    }
    let (designed, mid, k) = if p.q_odd() {
        let d = u * p.pow(p.m_bar()) + 1;
        (d, p.n() / 2, narrow_formula(p, u).unwrap())
    } else {
        let d = u * p.pow(p.m_bar()) / 2 + 1;
        let k = match (p.m_odd(), u.is_multiple_of(2)) {
            (true, true) => n - (ui * top / 2 - ui * ui * q / 4) * m,
            (true, false) => n - (ui * top / 2 - (ui * ui - ui) * q / 4) * m,
            (false, true) => n - (ui * top - ui * ui / 4) * m / 2,
            (false, false) => n - (ui * top - (ui - 1) * (ui - 1) / 4) * m / 2,
        };
        // the lower constituent starts at (n+1)/2 - (δ-1); the upper at (n+1)/2,
        // so both are expressed through `mid + 1 = (n+1)/2` below
        (d, p.n().div_ceil(2) - 1, k)
    };
    let b = match side {
        Side::Upper => mid + 1,
        Side::Lower => {
            let shift = designed - 1 + u64::from(p.q_odd());
            match (mid + 1).checked_sub(shift) {
                Some(b) => b,
                None => return nc("designed distance exceeds the half-range"),
            }
        }
    };
    let spec = spec_or_nc!(CodeSpec::generic(*p, designed, b));
    DimPrediction::exact(
        spec,
        k,
        TheoremId::OneSided,
        "single-sided constituent of family A; m odd >= 5 or m even",
    )
}

/// The family-A LCD code at `u`: `LCD_A_EVEN_N` with `δ = u q^{m̄} + 1`
/// for q odd, `LCD_A_ODD_N` with `δ = u q^{m̄}/2 + 1` for q even.
pub fn dim_lcd_a(p: &CosetParams, u: u64) -> Coverage<DimPrediction> {
    if !u_in_range(p, u) {
        return nc("requires 1 <= u <= q-1");
    }
    if p.m_odd() && p.m() < 5 {
        return nc("requires m >= 5 when m is odd");
    }
    let (q, m, n, top) = ints(p);
    let ui = u as i128;
    if p.q_odd() {
        if p.m() == 2 && u > (p.q() - 1) / 2 {
            return nc("m = 2 requires u <= (q-1)/2");
        }
        let delta = u * p.pow(p.m_bar()) + 1;
        let spec = spec_or_nc!(CodeSpec::new(Family::LcdAEvenN, *p, delta, None));
        let k = lcd_q_odd_formula(p, u);
        let pred = DimPrediction::exact(
            spec,
            k,
            TheoremId::LcdA,
            "q odd, δ = u q^m̄ + 1; m odd >= 5, or m even with u <= (q-1)/2 when m = 2",
        );
        if u == 1 && p.q() % 4 == 3 && p.m() % 4 == 2 {
            return pred.map(|d| d.with_distance(DistanceClaim::Exact(2 * delta)));
        }
        pred
    } else {
        if p.m() == 2 && u > p.q() / 2 {
            return nc("m = 2 requires u <= q/2");
        }
        let delta = u * p.pow(p.m_bar()) / 2 + 1;
        let spec = spec_or_nc!(CodeSpec::new(Family::LcdAOddN, *p, delta, None));
        let k = match (p.m_odd(), u.is_multiple_of(2)) {
            (true, _) => n - (ui * top - ui * ui * q) * m,
            (false, true) => n - (ui * top - ui * ui / 2) * m,
            (false, false) => n - (ui * top - (ui * ui + 1) / 2) * m,
        };
        let pred = DimPrediction::exact(
            spec,
            k,
            TheoremId::LcdA,
            "q even, δ = u q^m̄/2 + 1; m odd >= 5, or m even with u <= q/2 when m = 2",
        );
        if u == 1 && !p.m_odd() {
            return pred.map(|d| d.with_distance(DistanceClaim::Exact(2 * delta - 1)));
        }
        pred
    }
}

fn lcd_q_odd_formula(p: &CosetParams, u: u64) -> i128 {
    let (q, m, _, _) = ints(p);
    let u = u as i128;
    let qm = p.pow(p.m()) as i128;
    if p.m_odd() {
        let h = p.pow((p.m() - 1) / 2) as i128;
        qm - 2 - 2 * (u * h - 2 * u * u + u) * (q - 1) * m
    } else {
        let h = p.pow(p.m() / 2 - 1) as i128;
        qm - 2 - 2 * u * h * (q - 1) * m + (2 * u * u - 2 * u + 1) * m
    }
}

/// `LCD_B` at `δ = u q^{m̄} + 1`, q odd: same dimension as the family-A
/// code through monomial equivalence.
pub fn dim_lcd_b_monomial(p: &CosetParams, u: u64) -> Coverage<DimPrediction> {
    if !p.q_odd() {
        return nc("requires q odd");
    }
    if !u_in_range(p, u) {
        return nc("requires 1 <= u <= q-1");
    }
    if p.m_odd() && p.m() < 5 {
        return nc("requires m >= 5 when m is odd");
    }
    if p.m() == 2 && u > (p.q() - 1) / 2 {
        return nc("m = 2 requires u <= (q-1)/2");
    }
    let delta = u * p.pow(p.m_bar()) + 1;
    let spec = spec_or_nc!(CodeSpec::lcd_b(*p, delta));
    DimPrediction::exact(
        spec,
        lcd_q_odd_formula(p, u),
        TheoremId::LcdBMonomial,
        "q odd, δ = u q^m̄ + 1, equivalent to family A",
    )
}

/// Family-A code with designed distance `q^t - 1`, `1 <= t <= m̄`.
pub fn dim_designed_qt(p: &CosetParams, t: u32) -> Coverage<DimPrediction> {
    if t == 0 || t > p.m_bar() {
        return nc("requires 1 <= t <= m̄");
    }
    let (q, m, n, top) = ints(p);
    let qt = p.pow(t) as i128;
    if p.q_odd() {
        let delta = (p.pow(t) - 1) / 2;
        let spec = spec_or_nc!(CodeSpec::new(Family::LcdAEvenN, *p, delta, None));
        let k = (n + 1) - 2 - (qt - qt / q - 2) * m;
        DimPrediction::exact(spec, k, TheoremId::DesignedQt, "q odd, δ = (q^t - 1)/2")
    } else {
        if p.m() == 3 {
            return nc("q even requires m != 3");
        }
        let delta = p.pow(t) / 2;
        if delta < 2 {
            return nc("q even requires q^t/2 >= 2");
        }
        let spec = spec_or_nc!(CodeSpec::new(Family::LcdAOddN, *p, delta, None));
        let k = if p.m_odd() && t == p.m_bar() {
            n - (top - q) * m
        } else {
            n - (qt - 2) * m
        };
        DimPrediction::exact(spec, k, TheoremId::DesignedQt, "q even, m != 3, δ = q^t/2")
    }
}

/// `δ - 1 = δ_q q + δ_0` with `0 <= δ_0 < q`.
pub fn small_delta_split(q: u64, delta: u64) -> (u64, u64) {
    ((delta - 1) / q, (delta - 1) % q)
}

/// `LCD_B` for `δ` up to about `q^{m̄}` (m odd) or `2 q^{m/2}` (m even).
pub fn dim_lcd_b_small_delta(p: &CosetParams, delta: u64) -> Coverage<DimPrediction> {
    let spec = spec_or_nc!(CodeSpec::lcd_b(*p, delta));
    let (q, m, _, top) = ints(p);
    let qm = p.pow(p.m()) as i128;
    let (dq, d0) = small_delta_split(p.q(), delta);
    let base = (dq * (p.q() - 1) + d0) as i128;
    let d = delta as i128;
    let k = if p.m_odd() {
        if d <= top - q {
            qm - 2 - 2 * m * base
        } else if d <= top + 1 {
            let h = p.pow((p.m() - 1) / 2) as i128;
            qm - 2 - 2 * m * (h - 1) * (q - 1)
        } else {
            return nc("m odd requires δ <= q^m̄ + 1");
        }
    } else {
        let h = p.pow(p.m() / 2) as i128;
        let main = qm - 2 - 2 * m * base;
        if p.q() > 2 {
            if d < h {
                main
            } else if d <= h + 1 {
                main + m
            } else if d <= 2 * h - 2 {
                main + 2 * m
            } else if d == 2 * h - 1 {
                main + 3 * m
            } else if d <= 2 * h + 1 {
                main + 5 * m
            } else {
                return nc("m even requires δ <= 2 q^{m/2} + 1");
            }
        } else {
            if p.m() < 4 {
                return nc("q = 2 with m even requires m >= 4");
            }
            if d < h {
                main
            } else if d <= h + 1 {
                main + m
            } else if d <= 2 * h - 3 {
                main + 2 * m
            } else if d < 2 * h && p.m() >= 6 {
                main + 4 * m
            } else if d <= 2 * h + 1 && d >= 2 * h && p.m() >= 6 {
                main + 6 * m
            } else if p.m() < 6 && d <= 2 * h + 1 {
                return nc("q = 2, m = 4 is not covered for δ >= 2^{m/2+1} - 2");
            } else {
                return nc("m even requires δ <= 2 q^{m/2} + 1");
            }
        }
    };
    DimPrediction::exact(
        spec,
        k,
        TheoremId::LcdBSmallDelta,
        "δ - 1 = δ_q q + δ_0 within the piecewise windows",
    )
}

fn mann_terms(p: &CosetParams, lambda: u32) -> Option<(u32, i128, i128, i128, i128)> {
    let m = p.m();
    if lambda < p.m_bar() || lambda > m - 1 {
        return None;
    }
    let r = m - lambda;
    let q = p.q();
    let l = |s: u32| run_count(q, r, s) as i128;
    let s_sum: i128 = (0..r.saturating_sub(1))
        .map(|u| {
            let e = m - r - u - 2;
            (r - u - 1) as i128 * (p.pow(e) as i128 - l(e))
        })
        .sum();
    let qq = (q as i128 - 1) * (q as i128 - 1);
    Some((r, l(m), l(m - r), qq, s_sum))
}

/// Degree of the narrow-sense generator for `δ = q^λ`,
/// `ceil(m/2) <= λ <= m-1`.
pub fn mann_narrow_degree(p: &CosetParams, lambda: u32) -> Coverage<u64> {
    match mann_terms(p, lambda) {
        Some((_, lm, _, qq, s)) => Coverage::Covered((lm - 1 + qq * s) as u64),
        None => nc("requires ceil(m/2) <= λ <= m-1"),
    }
}

/// Narrow-sense code at `δ = q^λ` with the exact degree above.
pub fn dim_narrow_mann(p: &CosetParams, lambda: u32) -> Coverage<DimPrediction> {
    let deg = match mann_narrow_degree(p, lambda) {
        Coverage::Covered(d) => d,
        Coverage::NotCovered { reason } => return nc(reason),
    };
    let spec = spec_or_nc!(CodeSpec::narrow(*p, p.pow(lambda)));
    DimPrediction::exact(
        spec,
        p.n() as i128 - deg as i128,
        TheoremId::NarrowMannDegree,
        "δ = q^λ, ceil(m/2) <= λ <= m-1",
    )
}

/// Dimension bounds for `LCD_B` at `δ = q^λ`.
pub fn dim_lcd_b_mann(p: &CosetParams, lambda: u32) -> Coverage<DimPrediction> {
    let Some((_, lm, lmr, qq, s)) = mann_terms(p, lambda) else {
        return nc("requires ceil(m/2) <= λ <= m-1");
    };
    let spec = spec_or_nc!(CodeSpec::lcd_b(*p, p.pow(lambda)));
    let qm = p.pow(p.m()) as i128;
    let m = p.m() as i128;
    let lower = qm - 2 * lm + 2 * lmr - 2 * qq * s;
    let upper = qm - 2 * lm + m * lmr - 2 * qq * s;
    // the lower bound can be vacuous (negative) when r = 1
    let lower = lower.max(0);
    Coverage::Covered(DimPrediction {
        spec,
        value: DimValue::Bounds {
            k_lower: lower as u64,
            k_upper: upper as u64,
        },
        source: TheoremId::LcdBMann,
        domain: "δ = q^λ, ceil(m/2) <= λ <= m-1".into(),
        distance: None,
    })
}

/// Even-like Melas subcode, q odd.
pub fn dim_melas_evenlike(p: &CosetParams) -> Coverage<DimPrediction> {
    if !p.q_odd() {
        return nc("requires q odd");
    }
    let spec = spec_or_nc!(CodeSpec::melas_evenlike(*p));
    let k = p.pow(p.m()) as i128 - 2 - 2 * p.m() as i128;
    DimPrediction::exact(spec, k, TheoremId::MelasEvenlike, "q odd, m >= 2").map(|d| d.with_distance(DistanceClaim::Exact(4)))
}

/// `LCD_B` with `δ = 3`.
pub fn dim_lcd_b_delta3(p: &CosetParams) -> Coverage<DimPrediction> {
    if p.m() < 4 {
        return nc("requires m >= 4");
    }
    let spec = spec_or_nc!(CodeSpec::lcd_b(*p, 3));
    let qm = p.pow(p.m()) as i128;
    let m = p.m() as i128;
    let k = if p.q() == 2 {
        qm - 2 - 2 * m
    } else if p.pow(p.m()) % 3 == 1 {
        qm - 2 - 4 * m
    } else {
        return nc("requires q = 2, or q >= 3 with q^m ≡ 1 (mod 3)");
    };
    DimPrediction::exact(spec, k, TheoremId::LcdBDelta3, "δ = 3, m >= 4; q = 2 or q^m ≡ 1 (mod 3)")
        .map(|d| d.with_distance(DistanceClaim::Exact(6)))
}

/// Ternary `LCD_B` with `δ = 4`.
pub fn dim_lcd_b_ternary_delta4(p: &CosetParams) -> Coverage<DimPrediction> {
    if p.q() != 3 || p.m() < 3 {
        return nc("requires q = 3 and m >= 3");
    }
    let spec = spec_or_nc!(CodeSpec::lcd_b(*p, 4));
    let k = p.pow(p.m()) as i128 - 2 - 4 * p.m() as i128;
    let claim = if p.m_odd() {
        DistanceClaim::AtLeast(8)
    } else {
        DistanceClaim::Exact(8)
    };
    DimPrediction::exact(spec, k, TheoremId::LcdBTernaryDelta4, "q = 3, δ = 4, m >= 3").map(|d| d.with_distance(claim))
}

/// Formulas for `δ ∈ {2, 3, 4}`.
pub fn dim_small_delta_theorems(p: &CosetParams, delta: u64) -> Coverage<DimPrediction> {
    match delta {
        2 => dim_melas_evenlike(p).map(|mut d| {
            if let Ok(s) = CodeSpec::lcd_b(*p, 2) {
                d.spec = s;
            }
            d
        }),
        3 => dim_lcd_b_delta3(p),
        4 => dim_lcd_b_ternary_delta4(p),
        _ => nc("only δ = 2, 3, 4 have dedicated formulas"),
    }
}

fn find_u(p: &CosetParams, value: u64, scale_num: u64, scale_den: u64) -> Option<u64> {
    // value == u * q^m̄ * num / den + 1 for some 1 <= u <= q-1
    let step = p.pow(p.m_bar()) * scale_num / scale_den;
    if step == 0 || value < 1 || !(value - 1).is_multiple_of(step) {
        return None;
    }
    let u = (value - 1) / step;
    u_in_range(p, u).then_some(u)
}

fn find_power(p: &CosetParams, value: u64) -> Option<u32> {
    (0..=p.m()).find(|&e| p.pow(e) == value)
}

fn first_covered(options: impl IntoIterator<Item = Coverage<DimPrediction>>) -> Coverage<DimPrediction> {
    let mut reasons = Vec::new();
    for o in options {
        match o {
            Coverage::Covered(d) => return Coverage::Covered(d),
            Coverage::NotCovered { reason } => reasons.push(reason),
        }
    }
    if reasons.is_empty() {
        nc("no formula applies to these parameters")
    } else {
        nc(reasons.join("; "))
    }
}

/// Routes a spec to the most specific applicable formula. The returned
/// prediction always refers to `spec` itself.
pub fn predict(spec: &CodeSpec) -> Coverage<DimPrediction> {
    let p = spec.params();
    let delta = spec.delta();
    let mut options: Vec<Coverage<DimPrediction>> = Vec::new();
    match spec.family() {
        Family::Narrow => {
            if let Some(u) = find_u(p, delta, 1, 1) {
                options.push(dim_narrow(p, u));
            }
            if let Some(l) = find_power(p, delta) {
                options.push(dim_narrow_mann(p, l));
            }
        }
        Family::Generic => {
            let (num, den) = if p.q_odd() { (1, 1) } else { (1, 2) };
            if let Some(u) = find_u(p, delta, num, den) {
                options.push(dim_one_sided(p, u, Side::Upper));
                options.push(dim_one_sided(p, u, Side::Lower));
            }
            if spec.b() == 1 {
                if let Ok(n) = CodeSpec::narrow(*p, delta) {
                    options.push(predict(&n));
                }
            }
        }
        Family::LcdAEvenN => {
            if let Some(u) = find_u(p, delta, 1, 1) {
                options.push(dim_lcd_a(p, u));
            }
            if let Some(t) = find_power(p, 2 * delta + 1) {
                options.push(dim_designed_qt(p, t));
            }
            if let Ok(b) = CodeSpec::lcd_b(*p, delta) {
                options.push(predict(&b));
            }
        }
        Family::LcdAOddN => {
            if let Some(u) = find_u(p, delta, 1, 2) {
                options.push(dim_lcd_a(p, u));
            }
            if let Some(t) = find_power(p, 2 * delta) {
                options.push(dim_designed_qt(p, t));
            }
        }
        Family::LcdB => {
            options.push(dim_small_delta_theorems(p, delta));
            options.push(dim_lcd_b_small_delta(p, delta));
            if let Some(u) = find_u(p, delta, 1, 1) {
                options.push(dim_lcd_b_monomial(p, u));
            }
            if let Some(l) = find_power(p, delta) {
                options.push(dim_lcd_b_mann(p, l));
            }
        }
        Family::LcdBTilde => return nc("no closed form for the tilde code"),
        Family::MelasEvenlike => {
            options.push(dim_melas_evenlike(p));
            options.push(dim_lcd_b_small_delta(p, 2));
        }
    }
    // keep only formulas about this very code
    let this = crate::bchcodes::defining_set(spec);
    let options = options.into_iter().map(|o| match o {
        Coverage::Covered(mut d) if d.spec != *spec => {
            if crate::bchcodes::defining_set(&d.spec) == this {
                d.domain = format!("{} (applied to the code with the same defining set, {})", d.domain, d.spec.label());
                d.spec = *spec;
                Coverage::Covered(d)
            } else if spec.family() == Family::LcdAEvenN && d.spec.family() == Family::LcdB {
                d.domain = format!("{} (via monomial equivalence with {})", d.domain, d.spec.label());
                d.spec = *spec;
                d.distance = None;
                Coverage::Covered(d)
            } else {
                nc(format!("{} describes {}", d.source, d.spec.label()))
            }
        }
        other => other,
    });
    first_covered(options)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(q: u64, m: u32) -> CosetParams {
        CosetParams::new(q, m).unwrap()
    }

    fn k(c: Coverage<DimPrediction>) -> u64 {
        match c.covered().expect("covered").value {
            DimValue::Exact { k } => k,
            DimValue::Bounds { .. } => panic!("expected exact"),
        }
    }

    #[test]
    fn narrow_examples() {
        assert_eq!(k(dim_narrow(&params(2, 5), 1)), 11);
        assert_eq!(k(dim_narrow(&params(2, 7), 1)), 71);
        assert_eq!(k(dim_narrow(&params(3, 4), 2)), 34);
        assert!(!dim_narrow(&params(2, 3), 1).is_covered());
    }

    #[test]
    fn one_sided_examples() {
        assert_eq!(k(dim_one_sided(&params(3, 5), 1, Side::Upper)), 152);
        assert_eq!(k(dim_one_sided(&params(4, 5), 1, Side::Lower)), 863);
        let d = dim_one_sided(&params(2, 6), 1, Side::Upper).covered().unwrap();
        assert_eq!(d.value, DimValue::Exact { k: 39 });
        assert_eq!((d.spec.delta(), d.spec.b()), (5, 32));
        let d = dim_one_sided(&params(3, 5), 1, Side::Lower).covered().unwrap();
        assert_eq!(d.spec.b() + d.spec.delta() - 2, 120);
        let d = dim_one_sided(&params(2, 6), 1, Side::Lower).covered().unwrap();
        assert_eq!(d.spec.b() + d.spec.delta() - 2, 31);
    }

    #[test]
    fn lcd_a_examples() {
        assert_eq!(k(dim_lcd_a(&params(3, 7), 1)), 1457);
        let d = dim_lcd_a(&params(5, 2), 1).covered().unwrap();
        assert_eq!(d.value, DimValue::Exact { k: 9 });
        let d = dim_lcd_a(&params(4, 4), 1).covered().unwrap();
        assert_eq!(d.value, DimValue::Exact { k: 195 });
        assert_eq!(d.distance, Some(DistanceClaim::Exact(17)));
        assert!(!dim_lcd_a(&params(5, 2), 3).is_covered());
    }

    #[test]
    fn designed_qt_examples() {
        assert_eq!(k(dim_designed_qt(&params(3, 5), 2)), 221);
        assert_eq!(k(dim_designed_qt(&params(2, 7), 4)), 29);
        assert_eq!(k(dim_designed_qt(&params(2, 6), 2)), 51);
        assert_eq!(k(dim_designed_qt(&params(3, 5), 1)), 241);
        assert!(!dim_designed_qt(&params(2, 3), 2).is_covered());
    }

    #[test]
    fn small_delta_examples() {
        assert_eq!(k(dim_lcd_b_small_delta(&params(2, 5), 3)), 20);
        assert_eq!(k(dim_lcd_b_small_delta(&params(3, 3), 4)), 13);
        assert_eq!(k(dim_lcd_b_small_delta(&params(2, 4), 2)), 6);
        assert_eq!(small_delta_split(2, 2), (0, 1));
        assert_eq!(k(dim_melas_evenlike(&params(3, 3))), 19);
        assert_eq!(k(dim_lcd_b_delta3(&params(2, 5))), 20);
        let d = dim_lcd_b_ternary_delta4(&params(3, 3)).covered().unwrap();
        assert_eq!(d.distance, Some(DistanceClaim::AtLeast(8)));
        assert!(!dim_lcd_b_delta3(&params(2, 4)).is_covered() || k(dim_lcd_b_delta3(&params(2, 4))) == 6);
    }

    #[test]
    fn mann_examples() {
        assert_eq!(mann_narrow_degree(&params(2, 4), 2), Coverage::Covered(8));
        let d = dim_lcd_b_mann(&params(3, 4), 3).covered().unwrap();
        assert!(matches!(d.value, DimValue::Bounds { .. }));
        assert!(!dim_lcd_b_mann(&params(3, 4), 1).is_covered());
    }

    #[test]
    fn dispatcher_routes() {
        let s = CodeSpec::lcd_a(params(3, 7), 82).unwrap();
        assert_eq!(predict(&s).covered().unwrap().source, TheoremId::LcdA);
        let s = CodeSpec::lcd_b(params(3, 4), 27).unwrap();
        assert_eq!(predict(&s).covered().unwrap().source, TheoremId::LcdBMann);
        let s = CodeSpec::narrow(params(2, 3), 5).unwrap();
        assert!(!predict(&s).is_covered());
        let s = CodeSpec::lcd_b_tilde(params(2, 5), 3).unwrap();
        assert!(!predict(&s).is_covered());
        assert_eq!("thm-gene".parse::<TheoremId>().unwrap(), TheoremId::LcdBSmallDelta);
        assert!("nope".parse::<TheoremId>().is_err());
    }
}
