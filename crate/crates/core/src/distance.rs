//! Minimum-distance bounds, witnesses and exact search.
//!
//! Lower bounds come from the BCH bound on the defining set. Upper bounds
//! come from explicit low-weight codewords ([`Witness`]) and from the
//! sphere-packing bound. When the two meet, the distance is exact without
//! any search. Otherwise [`exact_distance`] enumerates messages or
//! low-weight supports within a [`SearchBudget`].

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{factorize, gcd};
use crate::bchcodes::{defining_set, generator_from_set, CodeError, CodeSpec, DefiningSet, Family, GENERATOR_CEILING};
use crate::field::FieldCtx;
use crate::polyring::{Poly, RootField};
use crate::Exec;

/// Largest `n` for which the longest consecutive run is computed.
pub const RUN_CEILING: u64 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DistanceMethod {
    Bch,
    SpherePacking,
    Witness,
    ExhaustiveMessages,
    LowWeightSearch,
}

/// A codeword given as a sparse `exponent -> coefficient label` map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Witness {
    terms: BTreeMap<u64, u32>,
}

impl Witness {
    pub fn from_terms(terms: impl IntoIterator<Item = (u64, u32)>) -> Self {
        Witness {
            terms: terms.into_iter().filter(|&(_, c)| c != 0).collect(),
        }
    }

    pub fn from_dense(coeffs: &[u32]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (i as u64, c)))
    }

    pub fn terms(&self) -> Vec<(u64, u32)> {
        self.terms.iter().map(|(&e, &c)| (e, c)).collect()
    }

    pub fn weight(&self) -> u64 {
        self.terms.len() as u64
    }

    pub fn to_poly(&self) -> Poly {
        let len = self.terms.keys().next_back().map_or(0, |&e| e as usize + 1);
        let mut v = vec![0; len];
        for (&e, &c) in &self.terms {
            v[e as usize] = c;
        }
        Poly::new(v)
    }

    /// Every element of the defining set is a root.
    pub fn is_codeword(&self, set: &DefiningSet, rf: &RootField) -> bool {
        let terms = self.terms();
        !terms.is_empty() && set.leaders().iter().all(|&(l, _)| rf.eval_sparse_at_beta(&terms, l) == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceResult {
    pub lower: u64,
    pub upper: Option<u64>,
    pub exact: Option<u64>,
    pub method: DistanceMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl DistanceResult {
    fn bounds(lower: u64, upper: Option<u64>, method: DistanceMethod) -> Self {
        DistanceResult {
            lower,
            upper,
            exact: None,
            method,
            witness: None,
        }
    }

    fn exact(d: u64, method: DistanceMethod, witness: Option<Witness>) -> Self {
        DistanceResult {
            lower: d,
            upper: Some(d),
            exact: Some(d),
            method,
            witness,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }
}

#[derive(Debug, Error)]
pub enum DistanceError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("divisibility precondition unmet: no D in {candidates:?} divides gcd(n, b-1) for n = {n}")]
    DivisibilityUnmet { n: u64, candidates: Vec<u64> },
    #[error("constructed word is not a codeword of {0}")]
    NotACodeword(String),
}

/// Maximal run of consecutive exponents inside the defining set, read
/// cyclically. `start` is the first exponent of the run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Run {
    pub start: u64,
    pub len: u64,
}

pub fn longest_run(set: &DefiningSet) -> Run {
    let n = set.params().n();
    let mut member = vec![false; n as usize];
    for e in set.exponents() {
        member[e as usize] = true;
    }
    if member.iter().all(|&b| b) {
        return Run { start: 0, len: n };
    }
    // start scanning just after a gap so cyclic runs are seen whole
    let gap = member.iter().position(|&b| !b).unwrap() as u64;
    let mut best = Run { start: 0, len: 0 };
    let mut cur = Run { start: 0, len: 0 };
    for step in 1..=n {
        let e = (gap + step) % n;
        if member[e as usize] {
            if cur.len == 0 {
                cur.start = e;
            }
            cur.len += 1;
            if cur.len > best.len {
                best = cur;
            }
        } else {
            cur.len = 0;
        }
    }
    best
}

/// BCH bound: the designed distance, or one more than the longest run of
/// consecutive roots when that is larger. Tilde codes with `δ ∤ n` get
/// `δ + 1`.
pub fn bch_lower(spec: &CodeSpec) -> u64 {
    let mut lower = spec.designed_distance();
    if spec.n() <= RUN_CEILING {
        let run = longest_run(&defining_set(spec));
        lower = lower.max(run.len + 1);
    }
    if spec.family() == Family::LcdBTilde && !spec.n().is_multiple_of(spec.delta()) {
        lower = lower.max(spec.delta() + 1);
    }
    lower.min(spec.n())
}

/// `sum_{i <= t} C(n, i) (q-1)^i`.
pub fn hamming_ball(n: u64, t: u64, q: u64) -> BigUint {
    let mut term = BigUint::one();
    let mut total = BigUint::one();
    for i in 1..=t.min(n) {
        term = term * (n - i + 1) * (q - 1) / i;
        total += &term;
    }
    total
}

/// Whether the radius-`delta` ball already exceeds `q^(n-k)`, in which
/// case `d <= 2 delta`.
pub fn sphere_packing_cap(n: u64, k: u64, q: u64, delta: u64) -> bool {
    hamming_ball(n, delta, q) > BigUint::from(q).pow((n - k) as u32)
}

/// Smallest upper bound `2t` from the sphere-packing bound, capped by the
/// Singleton bound `n - k + 1`.
pub fn sphere_packing_upper(n: u64, k: u64, q: u64) -> u64 {
    let singleton = n - k + 1;
    let cap = BigUint::from(q).pow((n - k) as u32);
    let mut term = BigUint::one();
    let mut total = BigUint::one();
    let mut t = 0;
    while 2 * t < singleton {
        if total > cap {
            return 2 * t;
        }
        t += 1;
        if t > n {
            break;
        }
        term = term * (n - t + 1) * (q - 1) / t;
        total += &term;
    }
    singleton
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// `sum_{i<D} zeta^i x^{i n/D}` with `zeta = beta^{-s n/D}`, optionally
/// multiplied by `x - a`.
fn subgroup_word(rf: &RootField, d: u64, s: u64, extra_root: Option<u64>) -> Option<Witness> {
    let n = rf.params().n();
    let stride = n / d;
    let big = rf.big();
    let emb = rf.embedding();
    let zeta = rf.beta_pow((n - (s * stride) % n) % n);
    let mut terms = Vec::with_capacity(2 * d as usize);
    let mut z = 1u32;
    let small = rf.small();
    for i in 0..d {
        terms.push((i * stride, emb.label(z)?));
        z = big.mul(z, zeta);
    }
    let Some(t0) = extra_root else {
        return Some(Witness::from_terms(terms));
    };
    if stride < 2 {
        return None;
    }
    let a = emb.label(rf.beta_pow(t0))?;
    let mut out: Vec<(u64, u32)> = terms.iter().map(|&(e, c)| (e + 1, c)).collect();
    out.extend(terms.iter().map(|&(e, c)| (e, small.neg(small.mul(a, c)))));
    Some(Witness::from_terms(out))
}

/// Lightest codeword of the form `sum zeta^i x^{i n/D}` (or that times a
/// linear factor) over all divisors `D` of `n`, verified by evaluation.
pub fn subgroup_witness(set: &DefiningSet, rf: &RootField) -> Option<Witness> {
    let p = set.params();
    let n = p.n();
    let q = p.q();
    let mut best: Option<Witness> = None;
    for d in divisors(n).into_iter().filter(|&d| d >= 2) {
        if best.as_ref().is_some_and(|w| w.weight() <= d) {
            break;
        }
        // classes s mod D whose zeta lies in GF(q)
        let step = d / gcd(d, q - 1);
        for s in (0..d).step_by(step as usize) {
            let hits: Vec<(u64, u32)> = set.leaders().iter().copied().filter(|&(l, _)| l % d == s).collect();
            let candidate = match hits.as_slice() {
                [] => subgroup_word(rf, d, s, None),
                [(t0, 1)] => subgroup_word(rf, d, s, Some(*t0)),
                _ => None,
            };
            if let Some(w) = candidate {
                if best.as_ref().is_none_or(|b| w.weight() < b.weight()) && w.is_codeword(set, rf) {
                    best = Some(w);
                }
            }
        }
    }
    best
}

/// Exact distance from a divisibility witness. The precondition is
/// `D | gcd(n, b - 1)` for the nominal `(D, b)` or for the longest run of
/// consecutive roots; the LCD_B and tilde codes use `δ | n` instead.
pub fn witness_delta_divides(spec: &CodeSpec, rf: &RootField) -> Result<DistanceResult, DistanceError> {
    let n = spec.n();
    let set = defining_set(spec);
    let run = longest_run(&set);
    let mut candidates = vec![(spec.designed_distance(), spec.b())];
    if run.len + 1 > spec.designed_distance() {
        candidates.push((run.len + 1, run.start));
    }
    let ok = match spec.family() {
        Family::LcdB | Family::LcdBTilde => n.is_multiple_of(spec.delta()),
        _ => candidates.iter().any(|&(d, b)| d >= 2 && gcd(n, (b + n - 1) % n).is_multiple_of(d)),
    };
    if !ok {
        return Err(DistanceError::DivisibilityUnmet {
            n,
            candidates: candidates.iter().map(|c| c.0).collect(),
        });
    }
    let w = subgroup_witness(&set, rf).ok_or_else(|| DistanceError::NotACodeword(spec.label()))?;
    let lower = bch_lower(spec);
    Ok(witness_result(lower, w))
}

fn witness_result(lower: u64, w: Witness) -> DistanceResult {
    let weight = w.weight();
    if weight <= lower {
        DistanceResult::exact(weight, DistanceMethod::Witness, Some(w))
    } else {
        DistanceResult {
            lower,
            upper: Some(weight),
            exact: None,
            method: DistanceMethod::Witness,
            witness: Some(w),
        }
    }
}

/// Caps on exhaustive work.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    /// Largest `q^k` for message enumeration.
    pub messages: u64,
    /// Largest `sum_{w <= target} C(n, w) (q-1)^w` for the support search.
    pub supports: u128,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            messages: 1 << 24,
            supports: 1 << 26,
        }
    }
}

/// Everything about a code that the search needs.
struct SearchCode<'a> {
    field: &'a FieldCtx,
    g: Vec<u32>,
    n: usize,
    k: usize,
    q: u64,
}

/// Below this many free digits a message shard is run whole.
const SHARD_FREE_DIGITS_LOG2: u32 = 14;

fn min_over_messages(code: &SearchCode<'_>, lower: u64, exec: Exec) -> (u64, Vec<u32>) {
    let f = code.field;
    let q = code.q;
    let r = code.g.len() - 1;
    // label increments realising the counter c -> c + 1 (mod q)
    let scaled: Vec<Vec<u32>> = (0..q as u32)
        .map(|c| {
            let delta = f.sub(((c as u64 + 1) % q) as u32, c);
            code.g.iter().map(|&x| f.mul(delta, x)).collect()
        })
        .collect();
    let free_cap = (SHARD_FREE_DIGITS_LOG2 as f64 / (q as f64).log2()).floor().max(1.0) as usize;
    let mut shards = Vec::new();
    for p in 0..code.k {
        let free = p.min(free_cap);
        let prefix_len = p - free;
        let count = q.pow(prefix_len as u32);
        for prefix in 0..count {
            shards.push((p, free, prefix));
        }
    }
    let hit = AtomicUsize::new(usize::MAX);
    let results = exec.map(&(0..shards.len()).collect::<Vec<_>>(), |&idx| {
        if idx > hit.load(Ordering::Relaxed) {
            return None;
        }
        let (p, free, prefix) = shards[idx];
        let mut cw = vec![0u32; code.n];
        let mut weight = 0u64;
        let add = |cw: &mut [u32], shift: usize, gs: &[u32], weight: &mut u64| {
            for (j, &c) in gs.iter().enumerate() {
                let pos = shift + j;
                let old = cw[pos];
                let new = f.add(old, c);
                cw[pos] = new;
                match (old == 0, new == 0) {
                    (true, false) => *weight += 1,
                    (false, true) => *weight -= 1,
                    _ => {}
                }
            }
        };
        add(&mut cw, p, &code.g, &mut weight);
        let mut rest = prefix;
        for pos in (free..p).rev() {
            let digit = (rest % q) as u32;
            rest /= q;
            if digit != 0 {
                let gs: Vec<u32> = code.g.iter().map(|&x| f.mul(digit, x)).collect();
                add(&mut cw, pos, &gs, &mut weight);
            }
        }
        let mut best = (weight, cw.clone());
        let mut digits = vec![0u32; free];
        let total = q.pow(free as u32);
        for _ in 1..total {
            if best.0 <= lower {
                break;
            }
            let mut i = 0;
            loop {
                let c = digits[i];
                add(&mut cw, i, &scaled[c as usize], &mut weight);
                digits[i] = ((c as u64 + 1) % q) as u32;
                if digits[i] != 0 {
                    break;
                }
                i += 1;
            }
            if weight < best.0 {
                best = (weight, cw.clone());
            }
        }
        debug_assert!(r < code.n);
        if best.0 <= lower {
            hit.fetch_min(idx, Ordering::Relaxed);
        }
        Some(best)
    });
    results
        .into_iter()
        .flatten()
        .min_by_key(|(w, _)| *w)
        .expect("k >= 1 gives at least one shard")
}

/// `v = scale * key` with the first nonzero entry of `key` equal to 1.
fn normalize(f: &FieldCtx, v: &[u32]) -> Option<(Vec<u32>, u32)> {
    let lead = *v.iter().find(|&&x| x != 0)?;
    let inv = f.inv(lead).expect("nonzero");
    Some((v.iter().map(|&x| f.mul(x, inv)).collect(), lead))
}

type ColumnIndex = HashMap<Vec<u32>, Vec<(usize, u32)>>;

/// Syndromes `x^j mod g` for every position.
fn syndrome_columns(code: &SearchCode<'_>) -> Vec<Vec<u32>> {
    let f = code.field;
    let r = code.g.len() - 1;
    let mut cols = Vec::with_capacity(code.n);
    let mut cur = vec![0u32; r];
    cur[0] = 1;
    for _ in 0..code.n {
        cols.push(cur.clone());
        // multiply by x and reduce by the monic g
        let top = cur[r - 1];
        let mut next = vec![0u32; r];
        for i in (1..r).rev() {
            next[i] = cur[i - 1];
        }
        if top != 0 {
            for (i, x) in next.iter_mut().enumerate() {
                *x = f.sub(*x, f.mul(top, code.g[i]));
            }
        }
        cur = next;
    }
    cols
}

struct LowWeight<'a> {
    f: &'a FieldCtx,
    q: u32,
    n: usize,
    cols: Vec<Vec<u32>>,
    index: ColumnIndex,
}

impl LowWeight<'_> {
    /// Completes a partial support with one more position, if possible.
    fn close(&self, s: &[u32], last: usize) -> Option<(usize, u32)> {
        let neg: Vec<u32> = s.iter().map(|&x| self.f.neg(x)).collect();
        let (key, scale) = normalize(self.f, &neg)?;
        let list = self.index.get(&key)?;
        list.iter()
            .rev()
            .take_while(|&&(p, _)| p > last)
            .last()
            .map(|&(p, fp)| (p, self.f.div(scale, fp).expect("nonzero")))
    }

    fn dfs(&self, s: &mut Vec<u32>, chosen: &mut Vec<(usize, u32)>, remaining: usize) -> bool {
        let last = chosen.last().unwrap().0;
        if remaining == 1 {
            if let Some(t) = self.close(s, last) {
                chosen.push(t);
                return true;
            }
            return false;
        }
        for p in last + 1..self.n - (remaining - 1) {
            for a in 1..self.q {
                let col = &self.cols[p];
                for (x, &c) in s.iter_mut().zip(col) {
                    *x = self.f.add(*x, self.f.mul(a, c));
                }
                chosen.push((p, a));
                if self.dfs(s, chosen, remaining - 1) {
                    return true;
                }
                chosen.pop();
                for (x, &c) in s.iter_mut().zip(col) {
                    *x = self.f.sub(*x, self.f.mul(a, c));
                }
            }
        }
        false
    }

    /// A codeword of weight exactly `w` with position 0 in its support.
    fn find(&self, w: usize, exec: Exec) -> Option<Vec<(usize, u32)>> {
        let base = self.cols[0].clone();
        if w == 2 {
            return self.close(&base, 0).map(|t| vec![(0, 1), t]);
        }
        let hit = AtomicUsize::new(usize::MAX);
        let firsts: Vec<usize> = (1..self.n).collect();
        let found = exec.map(&firsts, |&p1| {
            if p1 > hit.load(Ordering::Relaxed) {
                return None;
            }
            for a in 1..self.q {
                let mut s: Vec<u32> = base
                    .iter()
                    .zip(&self.cols[p1])
                    .map(|(&x, &c)| self.f.add(x, self.f.mul(a, c)))
                    .collect();
                let mut chosen = vec![(0, 1), (p1, a)];
                if self.dfs(&mut s, &mut chosen, w - 2) {
                    hit.fetch_min(p1, Ordering::Relaxed);
                    return Some(chosen);
                }
            }
            None
        });
        found.into_iter().flatten().next()
    }
}

fn binomial_cost(n: u64, w: u64, q: u64) -> u128 {
    let mut c: u128 = 1;
    for i in 1..=w {
        c = c.saturating_mul((n - i + 1) as u128) / i as u128;
        c = c.saturating_mul((q - 1) as u128);
    }
    c
}

/// Exact minimum distance by message enumeration (`q^k` within budget)
/// or by a low-weight support search; otherwise the best bounds reached.
pub fn exact_distance(spec: &CodeSpec, rf: &RootField, budget: SearchBudget, exec: Exec) -> Result<DistanceResult, DistanceError> {
    let set = defining_set(spec);
    let g = generator_from_set(&set, rf)?;
    let lower = bch_lower(spec);
    search_distance(&set, &g, rf, lower, None, budget, exec)
}

fn search_distance(
    set: &DefiningSet,
    g: &Poly,
    rf: &RootField,
    lower: u64,
    upper: Option<u64>,
    budget: SearchBudget,
    exec: Exec,
) -> Result<DistanceResult, DistanceError> {
    let n = set.params().n() as usize;
    let q = set.params().q();
    let r = g.degree().unwrap_or(0);
    let k = n - r;
    if k == 0 {
        return Ok(DistanceResult::bounds(lower, upper, DistanceMethod::Bch));
    }
    if r == 0 {
        let w = Witness::from_terms([(0, 1)]);
        return Ok(DistanceResult::exact(1, DistanceMethod::ExhaustiveMessages, Some(w)));
    }
    let code = SearchCode {
        field: rf.small(),
        g: g.coeffs().to_vec(),
        n,
        k,
        q,
    };
    let messages = crate::arith::checked_pow(q, k as u32);
    if messages.is_some_and(|m| m <= budget.messages) {
        let (d, cw) = min_over_messages(&code, lower, exec);
        let w = Witness::from_dense(&cw);
        if !w.is_codeword(set, rf) {
            return Err(DistanceError::NotACodeword("message enumeration".into()));
        }
        return Ok(DistanceResult::exact(d, DistanceMethod::ExhaustiveMessages, Some(w)));
    }
    let cols = syndrome_columns(&code);
    let mut index: ColumnIndex = HashMap::new();
    for (p, col) in cols.iter().enumerate().skip(1) {
        let (key, scale) = normalize(code.field, col).expect("x^j mod g is nonzero");
        index.entry(key).or_default().push((p, scale));
    }
    let search = LowWeight {
        f: code.field,
        q: q as u32,
        n,
        cols,
        index,
    };
    let stop = upper.unwrap_or(n as u64 + 1);
    let mut cost: u128 = (0..lower).map(|w| binomial_cost(n as u64, w, q)).sum();
    let mut w = lower.max(2);
    while w < stop {
        cost = cost.saturating_add(binomial_cost(n as u64, w, q));
        if cost > budget.supports {
            return Ok(DistanceResult::bounds(w, upper, DistanceMethod::LowWeightSearch));
        }
        if let Some(support) = search.find(w as usize, exec) {
            let wit = Witness::from_terms(support.iter().map(|&(p, a)| (p as u64, a)));
            if !wit.is_codeword(set, rf) {
                return Err(DistanceError::NotACodeword("support search".into()));
            }
            return Ok(DistanceResult::exact(w, DistanceMethod::LowWeightSearch, Some(wit)));
        }
        w += 1;
    }
    // nothing lighter than the known upper bound exists
    Ok(DistanceResult {
        lower: stop,
        upper,
        exact: upper,
        method: DistanceMethod::LowWeightSearch,
        witness: None,
    })
}

/// Best available answer: BCH and sphere-packing bounds, then a
/// subgroup witness, then exact search within budget.
pub fn distance_auto(spec: &CodeSpec, budget: SearchBudget, exec: Exec) -> Result<DistanceResult, DistanceError> {
    let n = spec.n();
    let set = defining_set(spec);
    let k = n - set.size();
    let lower = bch_lower(spec);
    if k == 0 {
        return Ok(DistanceResult::bounds(lower, None, DistanceMethod::Bch));
    }
    let sphere = sphere_packing_upper(n, k, spec.params().q());
    if sphere <= lower {
        return Ok(DistanceResult::exact(sphere, DistanceMethod::SpherePacking, None));
    }
    if n > GENERATOR_CEILING {
        return Ok(DistanceResult::bounds(lower, Some(sphere), DistanceMethod::SpherePacking));
    }
    let rf = RootField::new(spec.params()).map_err(CodeError::from)?;
    let mut best = DistanceResult::bounds(lower, Some(sphere), DistanceMethod::SpherePacking);
    if let Some(w) = subgroup_witness(&set, &rf) {
        if w.weight() < sphere {
            best = witness_result(lower, w);
            if best.is_exact() {
                return Ok(best);
            }
        }
    }
    let g = generator_from_set(&set, &rf)?;
    let searched = search_distance(&set, &g, &rf, lower, best.upper, budget, exec)?;
    Ok(match searched {
        // the search only certified that nothing lighter than the witness exists
        DistanceResult {
            exact: Some(d),
            witness: None,
            ..
        } if best.witness.is_some() => DistanceResult {
            lower: d,
            exact: Some(d),
            ..best
        },
        s if s.is_exact() => s,
        s => DistanceResult {
            lower: s.lower.max(best.lower),
            ..best
        },
    })
}

/// Errors from the subspace witness.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RmError {
    #[error("the subspace witness needs q = 2")]
    NotBinary,
    #[error("r = {r} must satisfy 2 <= r <= floor(m/2) = {max}")]
    BadRank { r: u32, max: u32 },
    #[error("basis H{which} has {got} vectors, expected {expected}")]
    WrongDimension { which: usize, got: usize, expected: u32 },
    #[error("basis H{which} is linearly dependent")]
    DependentBasis { which: usize },
    #[error("H{a} and H{b} intersect nontrivially")]
    Intersecting { a: usize, b: usize },
    #[error("inverse of alpha^{element} lies outside (H3 ∪ H4) minus zero")]
    InverseMismatch { element: u64 },
    #[error("the incidence word is not in the code: {0}")]
    NotACodeword(String),
    #[error(transparent)]
    Code(#[from] CodeError),
}

fn span(f: &FieldCtx, basis: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32];
    for &b in basis {
        let more: Vec<u32> = out.iter().map(|&x| f.add(x, b)).collect();
        out.extend(more);
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Subspace bases given as exponents of `alpha`.
pub type SubspaceBases = [Vec<u64>; 4];

/// Binary LCD_B code with `δ = 2^r - 1` and weight-`2δ` incidence word
/// supported on `(H1 ∪ H2) \ {0}`, coordinates indexed by ascending
/// powers of `alpha`.
pub fn rm_subspace_witness(m: u32, r: u32, bases: &SubspaceBases) -> Result<DistanceResult, RmError> {
    let params = crate::cosets::CosetParams::new(2, m).map_err(CodeError::from)?;
    if r < 2 || r > m / 2 {
        return Err(RmError::BadRank { r, max: m / 2 });
    }
    let rf = RootField::new(&params).map_err(CodeError::from)?;
    let f = rf.big();
    let spaces = bases
        .iter()
        .enumerate()
        .map(|(i, b)| {
            if b.len() != r as usize {
                return Err(RmError::WrongDimension {
                    which: i + 1,
                    got: b.len(),
                    expected: r,
                });
            }
            let elems: Vec<u32> = b.iter().map(|&e| f.alpha_pow(e)).collect();
            let s = span(f, &elems);
            if s.len() != 1 << r {
                return Err(RmError::DependentBasis { which: i + 1 });
            }
            Ok(s)
        })
        .collect::<Result<Vec<_>, _>>()?;
    for (a, b) in [(0, 1), (2, 3)] {
        if spaces[a].iter().any(|x| *x != 0 && spaces[b].contains(x)) {
            return Err(RmError::Intersecting { a: a + 1, b: b + 1 });
        }
    }
    let support: Vec<u32> = spaces[0].iter().chain(&spaces[1]).copied().filter(|&x| x != 0).collect();
    let mirror: Vec<u32> = spaces[2].iter().chain(&spaces[3]).copied().filter(|&x| x != 0).collect();
    for &x in &support {
        let inv = f.inv(x).expect("nonzero");
        if !mirror.contains(&inv) {
            return Err(RmError::InverseMismatch {
                element: f.log_alpha(x).unwrap(),
            });
        }
    }
    let delta = (1u64 << r) - 1;
    let spec = CodeSpec::lcd_b(params, delta)?;
    let w = Witness::from_terms(support.iter().map(|&x| (f.log_alpha(x).unwrap(), 1)));
    if !w.is_codeword(&defining_set(&spec), &rf) {
        return Err(RmError::NotACodeword(spec.label()));
    }
    let lower = bch_lower(&spec);
    Ok(witness_result(lower, w))
}

/// First valid `(H1, H2, H3, H4)` for `r = 2` in a fixed enumeration
/// order; only `m <= 6` is searched.
pub fn find_rm_subspaces(m: u32) -> Option<SubspaceBases> {
    if !(4..=6).contains(&m) {
        return None;
    }
    let params = crate::cosets::CosetParams::new(2, m).ok()?;
    let rf = RootField::new(&params).ok()?;
    let f = rf.big();
    let size = 1u32 << m;
    let mut planes = Vec::new();
    for a in 1..size {
        for b in a + 1..size {
            let c = a ^ b;
            if c > b {
                planes.push([a, b, c]);
            }
        }
    }
    let log = |x: u32| f.log_alpha(x).unwrap();
    let as_plane = |s: &[u32]| -> Option<[u32; 2]> { (s[0] ^ s[1] == s[2]).then_some([s[0], s[1]]) };
    for (i, h1) in planes.iter().enumerate() {
        for h2 in &planes[i + 1..] {
            if h1.iter().any(|x| h2.contains(x)) {
                continue;
            }
            let mut inv: Vec<u32> = h1.iter().chain(h2).map(|&x| f.inv(x).unwrap()).collect();
            inv.sort_unstable();
            let s0 = inv[0];
            for &s1 in &inv[1..] {
                let s2 = s0 ^ s1;
                if s2 == s0 || s2 == s1 || !inv.contains(&s2) {
                    continue;
                }
                let rest: Vec<u32> = inv.iter().copied().filter(|x| ![s0, s1, s2].contains(x)).collect();
                if let Some(h4) = as_plane(&rest) {
                    return Some([
                        vec![log(h1[0]), log(h1[1])],
                        vec![log(h2[0]), log(h2[1])],
                        vec![log(s0), log(s1)],
                        vec![log(h4[0]), log(h4[1])],
                    ]);
                }
            }
        }
    }
    None
}
