//! Primitive BCH code families as defining sets, with generator
//! polynomials when `n` is small enough to materialise.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cosets::{leader_and_size, CosetParams, ParamError};
use crate::polyring::{Poly, PolyError, RootField};

/// Largest length for which generator polynomials are built.
pub const GENERATOR_CEILING: u64 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    /// `C(q,n,δ,1)`.
    Narrow,
    /// `C(q,n,δ,b)`.
    Generic,
    /// `C(q,n,2δ,n/2-δ+1)`, q odd.
    LcdAEvenN,
    /// `C(q,n,2δ-1,(n+1)/2-δ+1)`, q even.
    LcdAOddN,
    /// `C(q,n,2δ,n-δ+1)`.
    LcdB,
    /// `C(q,n,2δ,n-δ+1)` without the factor `x - 1`.
    LcdBTilde,
    /// Even-like subcode of the Melas code.
    MelasEvenlike,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Narrow,
        Family::Generic,
        Family::LcdAEvenN,
        Family::LcdAOddN,
        Family::LcdB,
        Family::LcdBTilde,
        Family::MelasEvenlike,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Narrow => "NARROW",
            Family::Generic => "GENERIC",
            Family::LcdAEvenN => "LCD_A_EVEN_N",
            Family::LcdAOddN => "LCD_A_ODD_N",
            Family::LcdB => "LCD_B",
            Family::LcdBTilde => "LCD_B_TILDE",
            Family::MelasEvenlike => "MELAS_EVENLIKE",
        }
    }

    /// Families whose every member is LCD.
    pub fn is_lcd_family(self) -> bool {
        !matches!(self, Family::Narrow | Family::Generic)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("{family} requires {requirement}")]
    Gate { family: Family, requirement: String },
    #[error("n = {n} exceeds the generator ceiling {ceiling}; only the defining set is available")]
    DefiningSetOnly { n: u64, ceiling: u64 },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A member of one of the code families.
///
/// `delta` is the family's own parameter: the designed distance for
/// `Narrow` and `Generic`, and the half-range parameter for the LCD
/// families (see [`CodeSpec::designed_distance`]). `b` is normalised to
/// `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeSpec {
    family: Family,
    params: CosetParams,
    delta: u64,
    b: u64,
}

impl Serialize for CodeSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CodeSpec", 6)?;
        st.serialize_field("family", &self.family)?;
        st.serialize_field("q", &self.params.q())?;
        st.serialize_field("m", &self.params.m())?;
        st.serialize_field("n", &self.params.n())?;
        st.serialize_field("delta", &self.delta)?;
        st.serialize_field("b", &self.b)?;
        st.end()
    }
}

impl CodeSpec {
    /// Validates the family gates and derives `b` where the family fixes it.
    /// `b` is required for `Generic` and must be 1 (or absent) for `Narrow`.
    pub fn new(family: Family, params: CosetParams, delta: u64, b: Option<u64>) -> Result<Self, CodeError> {
        let n = params.n();
        let gate = |ok: bool, requirement: String| {
            if ok {
                Ok(())
            } else {
                Err(CodeError::Gate { family, requirement })
            }
        };
        let half = n.div_ceil(2);
        let derived = match family {
            Family::Narrow => {
                gate(2 <= delta && delta <= n, format!("2 <= δ <= n = {n}, got δ = {delta}"))?;
                gate(b.is_none_or(|b| b % n == 1), "b = 1".into())?;
                1
            }
            Family::Generic => {
                gate(2 <= delta && delta <= n, format!("2 <= δ <= n = {n}, got δ = {delta}"))?;
                let b = b.ok_or_else(|| CodeError::Gate {
                    family,
                    requirement: "an explicit b".into(),
                })?;
                b % n
            }
            Family::LcdAEvenN => {
                gate(params.q_odd(), "q odd (n even)".into())?;
                gate(
                    1 <= delta && delta <= half,
                    format!("1 <= δ <= floor((n+1)/2) = {half}, got δ = {delta}"),
                )?;
                n / 2 + 1 - delta
            }
            Family::LcdAOddN => {
                gate(!params.q_odd(), "q even (n odd)".into())?;
                gate(
                    2 <= delta && delta <= half,
                    format!("2 <= δ <= floor((n+1)/2) = {half}, got δ = {delta}"),
                )?;
                n.div_ceil(2) + 1 - delta
            }
            Family::LcdB | Family::LcdBTilde => {
                gate(
                    2 <= delta && delta < half,
                    format!("2 <= δ < floor((n+1)/2) = {half}, got δ = {delta}"),
                )?;
                n + 1 - delta
            }
            Family::MelasEvenlike => {
                gate(delta == 2, format!("δ = 2, got δ = {delta}"))?;
                gate(2 < half, format!("floor((n+1)/2) > 2, got n = {n}"))?;
                n - 1
            }
        };
        if family != Family::Generic {
            if let Some(b) = b {
                gate(b % n == derived, format!("b = {derived} for this family, got b = {b}"))?;
            }
        }
        Ok(CodeSpec {
            family,
            params,
            delta,
            b: derived,
        })
    }

    pub fn narrow(params: CosetParams, designed: u64) -> Result<Self, CodeError> {
        CodeSpec::new(Family::Narrow, params, designed, None)
    }
    pub fn generic(params: CosetParams, designed: u64, b: u64) -> Result<Self, CodeError> {
        CodeSpec::new(Family::Generic, params, designed, Some(b))
    }
    /// The family-A code for this parity of `q`.
    pub fn lcd_a(params: CosetParams, delta: u64) -> Result<Self, CodeError> {
        let family = if params.q_odd() { Family::LcdAEvenN } else { Family::LcdAOddN };
        CodeSpec::new(family, params, delta, None)
    }
    pub fn lcd_b(params: CosetParams, delta: u64) -> Result<Self, CodeError> {
        CodeSpec::new(Family::LcdB, params, delta, None)
    }
    pub fn lcd_b_tilde(params: CosetParams, delta: u64) -> Result<Self, CodeError> {
        CodeSpec::new(Family::LcdBTilde, params, delta, None)
    }
    pub fn melas_evenlike(params: CosetParams) -> Result<Self, CodeError> {
        CodeSpec::new(Family::MelasEvenlike, params, 2, None)
    }

    pub fn family(&self) -> Family {
        self.family
    }
    pub fn params(&self) -> &CosetParams {
        &self.params
    }
    pub fn n(&self) -> u64 {
        self.params.n()
    }
    pub fn delta(&self) -> u64 {
        self.delta
    }
    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn designed_distance(&self) -> u64 {
        match self.family {
            Family::Narrow | Family::Generic | Family::LcdBTilde => self.delta,
            Family::LcdAEvenN | Family::LcdB | Family::MelasEvenlike => 2 * self.delta,
            Family::LcdAOddN => 2 * self.delta - 1,
        }
    }

    /// The exponents whose cosets make up the defining set, before closure.
    pub fn seed_exponents(&self) -> Vec<u64> {
        let p = &self.params;
        let n = p.n() as i128;
        let d = self.delta as i128;
        let range = |lo: i128, hi: i128| (lo..=hi).map(|e| p.reduce(e)).collect::<Vec<_>>();
        match self.family {
            Family::Narrow | Family::Generic => {
                let b = self.b as i128;
                range(b, b + d - 2)
            }
            Family::LcdAEvenN => range(n / 2 - d + 1, n / 2 + d - 1),
            Family::LcdAOddN => {
                let h = (n + 1) / 2;
                range(h - d + 1, h + d - 2)
            }
            Family::LcdB | Family::MelasEvenlike => range(-(d - 1), d - 1),
            Family::LcdBTilde => {
                let mut v = range(-(d - 1), -1);
                v.extend(range(1, d - 1));
                v
            }
        }
    }

    /// Compact label such as `LCD_B(q=3,m=3,δ=4)`.
    pub fn label(&self) -> String {
        match self.family {
            Family::Generic => format!(
                "{}(q={},m={},δ={},b={})",
                self.family,
                self.params.q(),
                self.params.m(),
                self.delta,
                self.b
            ),
            _ => format!("{}(q={},m={},δ={})", self.family, self.params.q(), self.params.m(), self.delta),
        }
    }
}

/// A union of cosets, stored by leader.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningSet {
    params: CosetParams,
    leaders: Vec<(u64, u32)>,
}

impl DefiningSet {
    /// Closure of an arbitrary exponent list under multiplication by `q`.
    pub fn from_exponents(params: &CosetParams, exps: impl IntoIterator<Item = u64>) -> Self {
        let mut map = BTreeMap::new();
        for e in exps {
            let (l, s) = leader_and_size(params, e);
            map.insert(l, s);
        }
        DefiningSet {
            params: *params,
            leaders: map.into_iter().collect(),
        }
    }

    pub fn params(&self) -> &CosetParams {
        &self.params
    }
    /// `(leader, coset size)` pairs, by increasing leader.
    pub fn leaders(&self) -> &[(u64, u32)] {
        &self.leaders
    }
    pub fn size(&self) -> u64 {
        self.leaders.iter().map(|&(_, s)| s as u64).sum()
    }
    pub fn contains(&self, e: u64) -> bool {
        let (l, _) = leader_and_size(&self.params, e);
        self.leaders.binary_search_by_key(&l, |&(x, _)| x).is_ok()
    }
    /// Every exponent, sorted.
    pub fn exponents(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for &(l, _) in &self.leaders {
            out.extend(crate::cosets::coset(&self.params, l).elements);
        }
        out.sort_unstable();
        out
    }
    /// `T = -T (mod n)`.
    pub fn is_negation_closed(&self) -> bool {
        self.leaders.iter().all(|&(l, _)| self.contains(self.params.neg(l)))
    }
}

pub fn defining_set(spec: &CodeSpec) -> DefiningSet {
    DefiningSet::from_exponents(&spec.params, spec.seed_exponents())
}

/// `n - |T|`; integer arithmetic only.
pub fn dimension_constructive(spec: &CodeSpec) -> u64 {
    spec.n() - defining_set(spec).size()
}

pub fn is_lcd(set: &DefiningSet) -> bool {
    set.is_negation_closed()
}

fn check_ceiling(n: u64) -> Result<(), CodeError> {
    if n > GENERATOR_CEILING {
        Err(CodeError::DefiningSetOnly {
            n,
            ceiling: GENERATOR_CEILING,
        })
    } else {
        Ok(())
    }
}

/// Monic generator: the product of the minimal polynomials of the
/// defining set's cosets.
pub fn generator_poly(spec: &CodeSpec, field: &RootField) -> Result<Poly, CodeError> {
    check_ceiling(spec.n())?;
    generator_from_set(&defining_set(spec), field)
}

pub fn generator_from_set(set: &DefiningSet, field: &RootField) -> Result<Poly, CodeError> {
    check_ceiling(set.params().n())?;
    let ring = field.ring();
    let mut g = Poly::one();
    for &(l, _) in set.leaders() {
        g = ring.mul(&g, &field.minimal_poly(l)?);
    }
    Ok(g)
}

/// Compares the dimensions of the two LCD families at the same `δ`
/// (q odd). Returns `Ok(false)` when only one of the two is defined.
pub fn monomial_equivalence_check(params: &CosetParams, delta: u64) -> Result<bool, CodeError> {
    if !params.q_odd() {
        return Err(CodeError::Gate {
            family: Family::LcdAEvenN,
            requirement: "q odd for the equivalence with LCD_B".into(),
        });
    }
    let a = CodeSpec::new(Family::LcdAEvenN, *params, delta, None)?;
    let b = CodeSpec::lcd_b(*params, delta)?;
    Ok(dimension_constructive(&a) == dimension_constructive(&b))
}

/// Rank of a dense matrix over GF(q), destroying it.
pub fn rank(field: &crate::field::FieldCtx, rows: &mut [Vec<u32>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    if field.size() == 2 {
        return rank_binary(rows);
    }
    if field.size() <= SMALL_FIELD {
        return rank_tabulated(field, rows);
    }
    rank_generic(field, rows)
}

fn rank_generic(field: &crate::field::FieldCtx, rows: &mut [Vec<u32>]) -> usize {
    let nrows = rows.len();
    let ncols = rows[0].len();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..nrows).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = field.inv(rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &p) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = field.sub(*x, field.mul(f, p));
            }
        }
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

/// Fields up to this size get full addition and multiplication tables.
const SMALL_FIELD: u64 = 256;

fn rank_binary(rows: &[Vec<u32>]) -> usize {
    let ncols = rows[0].len();
    let words = ncols.div_ceil(64);
    let mut packed: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| {
            let mut w = vec![0u64; words];
            for (j, &x) in row.iter().enumerate() {
                if x != 0 {
                    w[j / 64] |= 1 << (j % 64);
                }
            }
            w
        })
        .collect();
    let mut r = 0;
    for c in 0..ncols {
        let (word, bit) = (c / 64, 1u64 << (c % 64));
        let Some(piv) = (r..packed.len()).find(|&i| packed[i][word] & bit != 0) else {
            continue;
        };
        packed.swap(r, piv);
        let (head, tail) = packed.split_at_mut(r + 1);
        let pivot = &head[r];
        for row in tail.iter_mut().filter(|row| row[word] & bit != 0) {
            for (x, &p) in row.iter_mut().zip(pivot).skip(word) {
                *x ^= p;
            }
        }
        r += 1;
        if r == packed.len() {
            break;
        }
    }
    r
}

/// Forward elimination with byte-sized lookup tables.
fn rank_tabulated(field: &crate::field::FieldCtx, rows: &[Vec<u32>]) -> usize {
    let q = field.size() as usize;
    let mut mul = vec![0u8; q * q];
    let mut sub = vec![0u8; q * q];
    for a in 0..q {
        for b in 0..q {
            mul[a * q + b] = field.mul(a as u32, b as u32) as u8;
            sub[a * q + b] = field.sub(a as u32, b as u32) as u8;
        }
    }
    let mut m: Vec<Vec<u8>> = rows.iter().map(|row| row.iter().map(|&x| x as u8).collect()).collect();
    let ncols = m[0].len();
    let mut r = 0;
    let mut scaled = vec![0u8; ncols];
    for c in 0..ncols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = field.inv(m[r][c] as u32).expect("pivot is nonzero") as usize;
        for x in m[r].iter_mut() {
            *x = mul[inv * q + *x as usize];
        }
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot = &head[r];
        for row in tail.iter_mut().filter(|row| row[c] != 0) {
            let f = row[c] as usize;
            let fm = &mul[f * q..(f + 1) * q];
            for (s, &p) in scaled[c..].iter_mut().zip(&pivot[c..]) {
                *s = fm[p as usize];
            }
            for (x, &s) in row[c..].iter_mut().zip(&scaled[c..]) {
                *x = sub[*x as usize * q + s as usize];
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// `dim(C ∩ C⊥)` computed as `rows - rank(G Gᵀ)` for a generator matrix
/// `G` of either `C` or `C⊥`, whichever has fewer rows.
pub fn hull_dimension(spec: &CodeSpec, field: &RootField) -> Result<usize, CodeError> {
    let g = generator_poly(spec, field)?;
    hull_dimension_of(&g, spec.n() as usize, field)
}

pub fn hull_dimension_of(g: &Poly, n: usize, field: &RootField) -> Result<usize, CodeError> {
    let ring = field.ring();
    let deg = g.degree().ok_or(PolyError::ZeroPolynomial)?;
    let k = n - deg;
    let row_poly = if k <= n - k {
        g.clone()
    } else {
        let (h, r) = ring.divrem(&ring.x_n_minus_one(n), g)?;
        debug_assert!(r.is_zero());
        ring.monic(&ring.reciprocal(&h)?)
    };
    let rows = n - row_poly.degree().unwrap();
    if rows == 0 {
        return Ok(0);
    }
    let f = field.small();
    let c = row_poly.coeffs();
    // Gram entries depend only on the row offset: a(d) = sum_t c_t c_{t+d}
    let auto: Vec<u32> = (0..rows)
        .map(|d| (0..c.len().saturating_sub(d)).fold(0u32, |acc, t| f.add(acc, f.mul(c[t], c[t + d]))))
        .collect();
    let mut gram: Vec<Vec<u32>> = (0..rows).map(|i| (0..rows).map(|j| auto[i.abs_diff(j)]).collect()).collect();
    Ok(rows - rank(f, &mut gram))
}
