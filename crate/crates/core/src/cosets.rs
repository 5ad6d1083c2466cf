//! q-cyclotomic cosets modulo `n = q^m - 1` and the combinatorics built on
//! them: coset leaders, the sets of small non-leaders, the intersection
//! sets used by the LCD dimension formulas, negated pairs and run counts.
//!
//! Everything here is integer arithmetic; no finite-field operations.

use serde::Serialize;
use thiserror::Error;

use crate::arith::{checked_pow, mul_mod, prime_power};
use crate::Coverage;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("m must be at least 2, got {0}")]
    DegreeTooSmall(u32),
    #[error("q^m - 1 does not fit in 63 bits (q = {q}, m = {m})")]
    TooLarge { q: u64, m: u32 },
    #[error("{0}")]
    Domain(String),
}

fn domain(msg: impl Into<String>) -> ParamError {
    ParamError::Domain(msg.into())
}

/// The pair `(q, m)` with `n = q^m - 1` and its derived quantities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CosetParams {
    q: u64,
    m: u32,
    n: u64,
    #[serde(skip)]
    p: u64,
}

impl CosetParams {
    pub fn new(q: u64, m: u32) -> Result<Self, ParamError> {
        let (p, _) = prime_power(q).ok_or(ParamError::NotPrimePower(q))?;
        if m < 2 {
            return Err(ParamError::DegreeTooSmall(m));
        }
        let qm = checked_pow(q, m).filter(|&v| v <= 1 << 63).ok_or(ParamError::TooLarge { q, m })?;
        Ok(CosetParams { q, m, n: qm - 1, p })
    }

    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn n(&self) -> u64 {
        self.n
    }
    /// Characteristic of GF(q).
    pub fn p(&self) -> u64 {
        self.p
    }
    /// `ceil(m / 2)`.
    pub fn m_bar(&self) -> u32 {
        self.m.div_ceil(2)
    }
    /// `ceil(n / 2)`.
    pub fn n_bar(&self) -> u64 {
        self.n.div_ceil(2)
    }
    pub fn q_odd(&self) -> bool {
        self.q % 2 == 1
    }
    pub fn m_odd(&self) -> bool {
        self.m % 2 == 1
    }
    /// `q^e`; panics if it overflows, which cannot happen for `e <= m`.
    pub fn pow(&self, e: u32) -> u64 {
        checked_pow(self.q, e).expect("q^e overflow")
    }
    /// `-s mod n`.
    pub fn neg(&self, s: u64) -> u64 {
        let s = s % self.n;
        if s == 0 {
            0
        } else {
            self.n - s
        }
    }
    /// Reduces a signed exponent into `[0, n)`.
    pub fn reduce(&self, e: i128) -> u64 {
        e.rem_euclid(self.n as i128) as u64
    }
}

/// The orbit of `leader` under multiplication by `q` modulo `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coset {
    pub leader: u64,
    pub elements: Vec<u64>,
    pub size: u32,
}

pub fn coset(params: &CosetParams, s: u64) -> Coset {
    let n = params.n;
    let s = s % n;
    let mut elements = vec![s];
    let mut x = mul_mod(s, params.q, n);
    while x != s {
        elements.push(x);
        x = mul_mod(x, params.q, n);
    }
    let size = elements.len() as u32;
    elements.sort_unstable();
    Coset {
        leader: elements[0],
        elements,
        size,
    }
}

/// `(leader, size)` of the coset containing `s`, without allocating.
pub fn leader_and_size(params: &CosetParams, s: u64) -> (u64, u32) {
    let n = params.n;
    let s = s % n;
    let mut best = s;
    let mut size = 1;
    let mut x = mul_mod(s, params.q, n);
    while x != s {
        best = best.min(x);
        size += 1;
        x = mul_mod(x, params.q, n);
    }
    (best, size)
}

pub fn coset_leader(params: &CosetParams, s: u64) -> u64 {
    leader_and_size(params, s).0
}

pub fn coset_size(params: &CosetParams, s: u64) -> u32 {
    leader_and_size(params, s).1
}

/// Largest `n` for which [`CosetTable`] will materialise the partition.
pub const TABLE_CEILING: u64 = 1 << 20;

/// The full partition of `Z_n` into cosets.
#[derive(Clone, Debug)]
pub struct CosetTable {
    params: CosetParams,
    leader_of: Vec<u32>,
    leaders: Vec<(u64, u32)>,
}

impl CosetTable {
    pub fn build(params: &CosetParams) -> Result<Self, ParamError> {
        let n = params.n;
        if n > TABLE_CEILING {
            return Err(domain(format!(
                "coset tables are only materialised for n <= {TABLE_CEILING}, got n = {n}"
            )));
        }
        let mut leader_of = vec![u32::MAX; n as usize];
        let mut leaders = Vec::new();
        for s in 0..n {
            if leader_of[s as usize] != u32::MAX {
                continue;
            }
            // every smaller element is already assigned, so s is the minimum
            let mut x = s;
            let mut size = 0;
            loop {
                leader_of[x as usize] = s as u32;
                size += 1;
                x = mul_mod(x, params.q, n);
                if x == s {
                    break;
                }
            }
            leaders.push((s, size));
        }
        Ok(CosetTable {
            params: *params,
            leader_of,
            leaders,
        })
    }

    pub fn params(&self) -> &CosetParams {
        &self.params
    }
    pub fn leader(&self, s: u64) -> u64 {
        self.leader_of[(s % self.params.n) as usize] as u64
    }
    /// `(leader, size)` for every coset, by increasing leader.
    pub fn leaders(&self) -> &[(u64, u32)] {
        &self.leaders
    }
    pub fn size_of(&self, s: u64) -> u32 {
        let l = self.leader(s);
        let idx = self.leaders.binary_search_by_key(&l, |&(x, _)| x).expect("leader present");
        self.leaders[idx].1
    }
}

/// Base-`q` digits of an integer in `[0, q^m)`, most significant first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QaryExpansion {
    q: u64,
    digits: Vec<u64>,
}

impl QaryExpansion {
    pub fn of(params: &CosetParams, s: u64) -> Self {
        Self::with_len(params.q, params.m as usize, s)
    }

    pub fn with_len(q: u64, len: usize, mut s: u64) -> Self {
        let mut digits = vec![0; len];
        for d in digits.iter_mut().rev() {
            *d = s % q;
            s /= q;
        }
        assert_eq!(s, 0, "value does not fit in {len} base-{q} digits");
        QaryExpansion { q, digits }
    }

    /// Builds from most-significant-first digits.
    pub fn from_digits(q: u64, digits: Vec<u64>) -> Self {
        assert!(digits.iter().all(|&d| d < q), "digit out of range");
        QaryExpansion { q, digits }
    }

    /// Digits `(s_{m-1}, ..., s_0)`.
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Coefficient of `q^i`.
    pub fn digit(&self, i: usize) -> u64 {
        self.digits[self.digits.len() - 1 - i]
    }

    pub fn value(&self) -> u64 {
        self.digits.iter().fold(0, |acc, &d| acc * self.q + d)
    }

    pub fn weight(&self) -> usize {
        self.digits.iter().filter(|&&d| d != 0).count()
    }

    /// Indices `i` with `s_i != 0`, increasing.
    pub fn support(&self) -> Vec<usize> {
        (0..self.digits.len()).filter(|&i| self.digit(i) != 0).collect()
    }
}

fn sorted(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v.dedup();
    v
}

fn check_u(params: &CosetParams, u: u64, max: u64) -> Result<(), ParamError> {
    if u == 0 || u > max {
        return Err(domain(format!(
            "u must satisfy 1 <= u <= {max} for q = {}, m = {}; got u = {u}",
            params.q, params.m
        )));
    }
    Ok(())
}

fn require(cond: bool, msg: &str) -> Result<(), ParamError> {
    if cond {
        Ok(())
    } else {
        Err(domain(msg))
    }
}

/// The two exception sets for odd `m >= 5`: integers in `[1, u q^{m̄}]`
/// prime to `q` that are not coset leaders.
pub fn exception_sets_odd_m(params: &CosetParams, u: u64) -> Result<(Vec<u64>, Vec<u64>), ParamError> {
    require(params.m_odd() && params.m >= 5, "requires m odd and m >= 5")?;
    check_u(params, u, params.q - 1)?;
    let q = params.q;
    let top = params.pow(params.m_bar());
    let mid = params.pow(params.m_bar() - 1);
    let mut j1 = Vec::new();
    let mut j2 = Vec::new();
    for a in 1..u {
        for b in 0..a {
            for c in 1..q {
                j1.push(a * top + b * q + c);
            }
        }
        for b in 1..q {
            for c in 1..=a {
                j2.push(a * top + b * mid + c);
            }
        }
    }
    Ok((sorted(j1), sorted(j2)))
}

/// Exceptions for even `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenExceptions {
    /// Integers in `[1, u q^{m/2}]` prime to `q` that are not leaders.
    pub non_leaders: Vec<u64>,
    /// Leaders `v (q^{m/2} + 1)` whose cosets have size `m/2`.
    pub half_size_leaders: Vec<u64>,
}

pub fn exception_set_even_m(params: &CosetParams, u: u64) -> Result<EvenExceptions, ParamError> {
    require(!params.m_odd(), "requires m even")?;
    check_u(params, u, params.q - 1)?;
    let top = params.pow(params.m_bar());
    let mut non_leaders = Vec::new();
    for a in 1..u {
        for c in 1..a {
            non_leaders.push(a * top + c);
        }
    }
    let half_size_leaders = (1..u).map(|v| v * (top + 1)).collect();
    Ok(EvenExceptions {
        non_leaders: sorted(non_leaders),
        half_size_leaders,
    })
}

/// An index set together with the exponents whose cosets it selects.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionSet {
    pub labels: Vec<u64>,
    /// One exponent per selected coset (not deduplicated: the selected
    /// cosets are pairwise disjoint, which callers may check).
    pub representatives: Vec<u64>,
}

fn repunit_block(params: &CosetParams, from: u32, to: u32) -> u64 {
    // (q-1) * sum_{i=from}^{to} q^i
    (from..=to).map(|i| (params.q - 1) * params.pow(i)).sum()
}

/// Labels `l` for which `C_{n̄+l}` and `C_{n̄-l}` make up the overlap of
/// the two one-sided ranges around `n/2` (q odd, m odd >= 5).
pub fn intersection_set_odd(params: &CosetParams, u: u64) -> Result<IntersectionSet, ParamError> {
    require(params.q_odd(), "requires q odd")?;
    require(params.m_odd() && params.m >= 5, "requires m odd and m >= 5")?;
    check_u(params, u, params.q - 1)?;
    let q = params.q;
    let mb = params.m_bar();
    let top = params.pow(mb);
    let mid = params.pow(mb - 1);
    let block = repunit_block(params, 1, mb - 2);
    let mut labels = Vec::new();
    for a in 0..u {
        for b in 0..=q - 2 {
            for c in q - u..q {
                labels.push(a * top + b * mid + block + c);
            }
        }
    }
    let labels = sorted(labels);
    let nb = params.n_bar();
    let representatives = labels
        .iter()
        .flat_map(|&l| [params.reduce(nb as i128 + l as i128), params.reduce(nb as i128 - l as i128)])
        .collect();
    Ok(IntersectionSet { labels, representatives })
}

/// Even-`m` counterpart of [`intersection_set_odd`]; only `C_{n̄-l}` occur.
pub fn intersection_set_even(params: &CosetParams, u: u64) -> Result<IntersectionSet, ParamError> {
    require(params.q_odd(), "requires q odd")?;
    require(!params.m_odd(), "requires m even")?;
    let max = if params.m == 2 { (params.q - 1) / 2 } else { params.q - 1 };
    check_u(params, u, max)?;
    let q = params.q;
    let mb = params.m_bar();
    let top = params.pow(mb);
    let block = repunit_block(params, 1, mb - 1);
    let mut labels = Vec::new();
    for a in 0..u {
        for c in q - u..q {
            labels.push(a * top + block + c);
        }
    }
    let labels = sorted(labels);
    let nb = params.n_bar();
    let representatives = labels.iter().map(|&l| params.reduce(nb as i128 - l as i128)).collect();
    Ok(IntersectionSet { labels, representatives })
}

/// The q-even analogue, indexed by odd labels `l`; each label stands for
/// the exponents `n̄ + (l-1)/2` and `n̄ - (l+1)/2` (m odd) or only the
/// latter (m even).
pub fn tilde_sets(params: &CosetParams, u: u64) -> Result<IntersectionSet, ParamError> {
    require(!params.q_odd(), "requires q even")?;
    let q = params.q;
    let mb = params.m_bar();
    let top = params.pow(mb);
    let nb = params.n_bar() as i128;
    let mut labels = Vec::new();
    if params.m_odd() {
        require(params.m >= 5, "requires m >= 5 when m is odd")?;
        check_u(params, u, q - 1)?;
        let mid = params.pow(mb - 1);
        let block = repunit_block(params, 1, mb - 2);
        for a in 0..u {
            for b in (0..=q - 2).step_by(2) {
                for c in (q - u..q).filter(|c| c % 2 == 1) {
                    labels.push(a * top + b * mid + block + c);
                }
            }
        }
        let labels = sorted(labels);
        let representatives = labels
            .iter()
            .flat_map(|&l| {
                let l = l as i128;
                [params.reduce(nb + (l - 1) / 2), params.reduce(nb - (l + 1) / 2)]
            })
            .collect();
        Ok(IntersectionSet { labels, representatives })
    } else {
        let max = if params.m == 2 { q / 2 } else { q - 1 };
        check_u(params, u, max)?;
        let block = repunit_block(params, 1, mb - 1);
        for a in (0..u).step_by(2) {
            for c in (q - u..q).filter(|c| c % 2 == 1) {
                labels.push(a * top + block + c);
            }
        }
        let labels = sorted(labels);
        let representatives = labels.iter().map(|&l| params.reduce(nb - (l as i128 + 1) / 2)).collect();
        Ok(IntersectionSet { labels, representatives })
    }
}

/// Closed-form size of the union of cosets selected by
/// [`intersection_set_odd`], [`intersection_set_even`] or [`tilde_sets`].
pub fn intersection_cardinality(params: &CosetParams, u: u64) -> Result<u64, ParamError> {
    let (q, m) = (params.q, params.m as u64);
    match (params.q_odd(), params.m_odd()) {
        (true, true) => intersection_set_odd(params, u).map(|_| 2 * u * u * (q - 1) * m),
        (true, false) => intersection_set_even(params, u).map(|_| u * u * m),
        (false, true) => tilde_sets(params, u).map(|_| {
            if u.is_multiple_of(2) {
                u * u * q * m / 2
            } else {
                u * (u + 1) * q * m / 2
            }
        }),
        (false, false) => tilde_sets(params, u).map(|_| {
            if u.is_multiple_of(2) {
                u * u * m / 4
            } else {
                (u + 1) * (u + 1) * m / 4
            }
        }),
    }
}

/// Closed-form counts of odd leaders below `u q^{m̄}` (q even, m odd >= 5):
/// `(λ1, λ2)` where λ1 counts odd leaders and λ2 counts odd non-leaders
/// from the exception sets whose leader is even.
pub fn lambda_counts(params: &CosetParams, u: u64) -> Result<(u64, u64), ParamError> {
    require(!params.q_odd(), "requires q even")?;
    require(params.m_odd() && params.m >= 5, "requires m odd and m >= 5")?;
    check_u(params, u, params.q - 1)?;
    let q = params.q;
    let top = params.pow(params.m_bar());
    let (l1, l2) = if u.is_multiple_of(2) {
        (
            u * top / 2 - (u * u - u) * q / 4 - u * u * (q - 1) / 4,
            ((u * u - u) * q - u * u) / 4,
        )
    } else {
        (
            u * top / 2 - (u * u - u) * q / 4 - (u * u - 1) * (q - 1) / 4,
            (u * u - 1) * (q - 1) / 4,
        )
    };
    Ok((l1, l2))
}

/// Closed-form counts for q even, m even: odd leaders of full-size cosets,
/// odd leaders of half-size cosets, and odd non-leaders with even leader.
pub fn theta_counts(params: &CosetParams, u: u64) -> Result<(u64, u64, u64), ParamError> {
    require(!params.q_odd(), "requires q even")?;
    require(!params.m_odd(), "requires m even")?;
    check_u(params, u, params.q - 1)?;
    let top = params.pow(params.m_bar());
    let t1 = u * top / 2 - if u.is_multiple_of(2) { u * u / 4 } else { (u * u - 1) / 4 };
    let t2 = u / 2;
    let t3 = if u.is_multiple_of(2) { u * (u - 2) / 8 } else { (u * u - 1) / 8 };
    Ok((t1, t2, t3))
}

/// Largest `l` for which [`negated_pair_count`] and
/// [`negated_pair_profiles`] make a statement.
pub fn negated_pair_range(params: &CosetParams) -> u64 {
    if params.m_odd() {
        params.pow(params.m_bar())
    } else {
        2 * params.pow(params.m / 2)
    }
}

/// Number of leader pairs `(cl(i), cl(j))` with `1 <= i, j <= l` and
/// `-j ∈ C_i`.
pub fn negated_pair_count(params: &CosetParams, l: u64) -> Coverage<u64> {
    if l == 0 {
        return Coverage::not_covered("l must be at least 1");
    }
    let q = params.q;
    let out_of_range = || Coverage::not_covered(format!("l = {l} exceeds the covered range 1..={}", negated_pair_range(params)));
    if params.m_odd() {
        let a = params.pow(params.m_bar());
        return if l <= a - q {
            Coverage::Covered(0)
        } else if l <= a - 2 {
            Coverage::Covered(2 * (l - (a - q)))
        } else if l <= a {
            Coverage::Covered(2 * (q - 1))
        } else {
            out_of_range()
        };
    }
    let h = params.pow(params.m / 2);
    if q > 2 {
        return if l <= h - 2 {
            Coverage::Covered(0)
        } else if l <= 2 * h - 3 {
            Coverage::Covered(1)
        } else if l == 2 * h - 2 {
            Coverage::Covered(2)
        } else if l <= 2 * h {
            Coverage::Covered(4)
        } else {
            out_of_range()
        };
    }
    if params.m < 4 {
        return Coverage::not_covered("q = 2 with even m requires m >= 4");
    }
    if params.m == 4 && l >= 2 * h - 3 {
        // the piecewise count fails here (brute force gives different values)
        return Coverage::not_covered("q = 2, m = 4 is only covered for l <= 4");
    }
    if l <= h - 2 {
        Coverage::Covered(0)
    } else if l <= 2 * h - 4 {
        Coverage::Covered(1)
    } else if l <= 2 * h - 2 {
        Coverage::Covered(3)
    } else if l <= 2 * h {
        Coverage::Covered(5)
    } else {
        out_of_range()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NegatedPair {
    pub i: QaryExpansion,
    pub j: QaryExpansion,
}

/// Every concrete pair `(i, j)` from the digit-pattern templates for
/// `-j ∈ C_i`, in increasing `(i, j)` order. Pairs outside
/// `[1, negated_pair_range]` are dropped.
pub fn negated_pair_profiles(params: &CosetParams) -> Result<Vec<NegatedPair>, ParamError> {
    let q = params.q;
    let mut raw: Vec<(u64, u64)> = Vec::new();
    if params.m_odd() {
        let h = (params.m - 1) / 2;
        let qh = params.pow(h);
        let high = repunit_block(params, 1, h);
        for u in 0..q {
            let i = high + u;
            let j = (q - 1 - u) * qh + (qh - 1);
            raw.push((i, j));
            raw.push((j, i));
        }
    } else if q > 2 {
        let h = params.pow(params.m / 2);
        raw.extend([(2 * h - 2, 2 * h - 2), (h - 2, 2 * h - 1), (2 * h - 1, h - 2), (h - 1, h - 1)]);
    } else {
        require(params.m >= 4, "q = 2 with even m requires m >= 4")?;
        let h = params.pow(params.m / 2);
        raw.extend([
            (h / 2 - 1, 2 * h - 1),
            (2 * h - 1, h / 2 - 1),
            (h - 1, h - 1),
            (h + h / 2 - 1, 2 * h - 3),
            (2 * h - 3, h + h / 2 - 1),
        ]);
    }
    let top = negated_pair_range(params);
    raw.retain(|&(i, j)| (1..=top).contains(&i) && (1..=top).contains(&j));
    raw.sort_unstable();
    raw.dedup();
    Ok(raw
        .into_iter()
        .map(|(i, j)| NegatedPair {
            i: QaryExpansion::of(params, i),
            j: QaryExpansion::of(params, j),
        })
        .collect())
}

/// Number of length-`s` words over a `q`-letter alphabet that contain a
/// run of at least `r` consecutive copies of one fixed letter.
///
/// Panics if the count overflows `u128`.
pub fn run_count(q: u64, r: u32, s: u32) -> u128 {
    let q = q as u128;
    let r = r as usize;
    let s = s as usize;
    if s < r {
        return 0;
    }
    let mut l = vec![0u128; s + 1];
    let pow = |e: usize| -> u128 { (0..e).fold(1u128, |acc, _| acc.checked_mul(q).expect("run_count overflow")) };
    for t in r..=s {
        l[t] = if t == r {
            1
        } else {
            let tail = pow(t - r - 1) - l[t - r - 1];
            q.checked_mul(l[t - 1])
                .and_then(|v| v.checked_add((q - 1) * tail))
                .expect("run_count overflow")
        };
    }
    l[s]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(q: u64, m: u32) -> CosetParams {
        CosetParams::new(q, m).unwrap()
    }

    #[test]
    fn params_validation() {
        assert_eq!(CosetParams::new(6, 2), Err(ParamError::NotPrimePower(6)));
        assert_eq!(CosetParams::new(2, 1), Err(ParamError::DegreeTooSmall(1)));
        assert!(matches!(CosetParams::new(2, 64), Err(ParamError::TooLarge { .. })));
        let p = params(3, 5);
        assert_eq!((p.n(), p.m_bar(), p.n_bar()), (242, 3, 121));
        assert_eq!(params(2, 5).n_bar(), 16);
    }

    #[test]
    fn coset_examples() {
        let p = params(2, 4);
        let c = coset(&p, 0);
        assert_eq!((c.elements.clone(), c.size), (vec![0], 1));
        let c = coset(&p, 5);
        assert_eq!((c.elements, c.size), (vec![5, 10], 2));
        assert_eq!(coset_leader(&p, 8), 1);
        let p = params(3, 5);
        let c = coset(&p, 28);
        assert_eq!((c.leader, c.size), (10, 5));
        assert!(coset_leader(&p, 29) < 29);
        assert_eq!(coset_leader(&params(2, 5), 7), 7);
    }

    #[test]
    fn table_partitions() {
        let p = params(3, 4);
        let t = CosetTable::build(&p).unwrap();
        let total: u64 = t.leaders().iter().map(|&(_, s)| s as u64).sum();
        assert_eq!(total, p.n());
        assert_eq!(t.leader(10), 10);
        assert_eq!(t.size_of(10), 2);
        assert!(CosetTable::build(&params(2, 21)).is_err());
    }

    #[test]
    fn qary_expansion_round_trip() {
        let p = params(3, 5);
        let e = QaryExpansion::of(&p, 28);
        assert_eq!(e.digits(), &[0, 1, 0, 0, 1]);
        assert_eq!(e.value(), 28);
        assert_eq!(e.weight(), 2);
        assert_eq!(e.support(), vec![0, 3]);
    }

    #[test]
    fn exception_set_examples() {
        let p = params(3, 5);
        assert_eq!(exception_sets_odd_m(&p, 1).unwrap(), (vec![], vec![]));
        let (j1, j2) = exception_sets_odd_m(&p, 2).unwrap();
        assert_eq!((j1, j2), (vec![28, 29], vec![37, 46]));
        let (j1, j2) = exception_sets_odd_m(&params(4, 5), 3).unwrap();
        let mut all = j1;
        all.extend(j2);
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 18);
        assert!(exception_sets_odd_m(&params(3, 4), 1).is_err());
        assert!(exception_sets_odd_m(&params(3, 3), 1).is_err());
        assert!(exception_sets_odd_m(&p, 3).is_err());

        let e = exception_set_even_m(&params(3, 4), 2).unwrap();
        assert!(e.non_leaders.is_empty());
        assert_eq!(e.half_size_leaders, vec![10]);
        assert_eq!(exception_set_even_m(&params(5, 2), 4).unwrap().non_leaders.len(), 3);
        let e = exception_set_even_m(&params(7, 2), 1).unwrap();
        assert!(e.non_leaders.is_empty() && e.half_size_leaders.is_empty());
        assert!(exception_set_even_m(&params(3, 5), 1).is_err());
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(intersection_set_odd(&params(3, 5), 1).unwrap().labels.len(), 2);
        assert_eq!(intersection_set_odd(&params(5, 5), 1).unwrap().labels.len(), 4);
        assert_eq!(intersection_cardinality(&params(3, 5), 2).unwrap(), 80);
        assert_eq!(intersection_set_even(&params(5, 2), 1).unwrap().labels, vec![4]);
        assert_eq!(intersection_cardinality(&params(3, 4), 2).unwrap(), 16);
        assert!(intersection_set_even(&params(5, 2), 3).is_err());
        assert_eq!(intersection_cardinality(&params(2, 7), 1).unwrap(), 14);
        assert_eq!(intersection_cardinality(&params(4, 4), 1).unwrap(), 4);
        assert_eq!(intersection_cardinality(&params(4, 4), 2).unwrap(), 4);
        assert!(tilde_sets(&params(3, 5), 1).is_err());
    }

    #[test]
    fn lambda_theta_examples() {
        assert_eq!(lambda_counts(&params(2, 5), 1).unwrap(), (4, 0));
        assert_eq!(lambda_counts(&params(4, 5), 2).unwrap().1, 1);
        assert_eq!(lambda_counts(&params(4, 5), 3).unwrap().1, 6);
        assert_eq!(theta_counts(&params(2, 4), 1).unwrap(), (2, 0, 0));
        assert_eq!(theta_counts(&params(4, 4), 2).unwrap().1, 1);
        assert_eq!(theta_counts(&params(4, 4), 3).unwrap().2, 1);
        assert!(lambda_counts(&params(3, 5), 1).is_err());
    }

    #[test]
    fn negated_pair_examples() {
        assert_eq!(negated_pair_count(&params(2, 4), 2), Coverage::Covered(0));
        assert_eq!(negated_pair_count(&params(2, 4), 3), Coverage::Covered(1));
        assert_eq!(negated_pair_count(&params(3, 3), 8), Coverage::Covered(4));
        assert!(!negated_pair_count(&params(2, 4), 5).is_covered());
        assert!(!negated_pair_count(&params(3, 3), 10).is_covered());
        assert!(!negated_pair_count(&params(2, 2), 1).is_covered());

        let pairs = negated_pair_profiles(&params(3, 3)).unwrap();
        assert!(pairs.iter().any(|p| p.i.value() == 6 && p.j.value() == 8));
        let pairs = negated_pair_profiles(&params(2, 4)).unwrap();
        assert!(pairs.iter().any(|p| p.i.value() == 3 && p.j.value() == 3));
    }

    #[test]
    fn run_count_examples() {
        assert_eq!(run_count(2, 2, 2), 1);
        assert_eq!(run_count(2, 2, 3), 3);
        assert_eq!(run_count(5, 3, 2), 0);
        assert_eq!(run_count(2, 2, 4), 8);
        assert_eq!(run_count(3, 0, 4), 81);
    }
}
