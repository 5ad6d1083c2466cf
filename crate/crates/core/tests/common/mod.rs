//! Brute-force reference implementations shared by the integration tests.
//!
//! Nothing here calls into the coset or dimension code of the library; the
//! point is to have a second, naive opinion.

#![allow(dead_code)]

use std::collections::BTreeSet;

use lcdbch::bchcodes::{CodeSpec, Family};

/// The orbit of `s` under multiplication by `q` modulo `n`, sorted.
pub fn orbit(q: u64, n: u64, s: u64) -> Vec<u64> {
    let mut out = vec![s % n];
    let mut x = (s * q) % n;
    while x != s % n {
        out.push(x);
        x = (x * q) % n;
    }
    out.sort_unstable();
    out
}

/// `(leader, size)` of every residue, by orbit enumeration.
pub fn leader_table(q: u64, n: u64) -> Vec<(u64, u32)> {
    let mut table = vec![(u64::MAX, 0u32); n as usize];
    for s in 0..n {
        if table[s as usize].1 != 0 {
            continue;
        }
        let o = orbit(q, n, s);
        for &x in &o {
            table[x as usize] = (o[0], o.len() as u32);
        }
    }
    table
}

/// Integers `1 <= j <= top` with `q ∤ j` that are not their own coset
/// leader, and those that are leaders of a coset smaller than `m`.
pub fn leader_exceptions(q: u64, m: u32, top: u64) -> (Vec<u64>, Vec<u64>) {
    let n = q.pow(m) - 1;
    let table = leader_table(q, n);
    let mut non_leaders = Vec::new();
    let mut short = Vec::new();
    for j in (1..=top).filter(|j| j % q != 0) {
        let (l, size) = table[j as usize];
        if l != j {
            non_leaders.push(j);
        } else if size != m {
            short.push(j);
        }
    }
    (non_leaders, short)
}

/// Union of the cosets of `center + sign * j` for `j` in `range`.
pub fn coset_union(q: u64, n: u64, center: u64, sign: i64, range: std::ops::RangeInclusive<u64>) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for j in range {
        let e = (center as i128 + sign as i128 * j as i128).rem_euclid(n as i128) as u64;
        if !out.contains(&e) {
            out.extend(orbit(q, n, e));
        }
    }
    out
}

/// `|J⁺ ∩ J⁻|` around `⌈n/2⌉` computed from explicit coset unions. For odd
/// `q` both sides run over `1..=u q^{m̄}`; for even `q` the upper side runs
/// over `0..u q^{m̄}/2` and the lower over `1..=u q^{m̄}/2`.
pub fn intersection_size(q: u64, m: u32, u: u64) -> usize {
    let n = q.pow(m) - 1;
    let center = n.div_ceil(2);
    let top = u * q.pow(m.div_ceil(2));
    let (plus, minus) = if q % 2 == 1 {
        (coset_union(q, n, center, 1, 1..=top), coset_union(q, n, center, -1, 1..=top))
    } else {
        (
            coset_union(q, n, center, 1, 0..=top / 2 - 1),
            coset_union(q, n, center, -1, 1..=top / 2),
        )
    };
    plus.intersection(&minus).count()
}

/// Defining set of a family member, built from its consecutive exponent
/// range and closed under multiplication by `q`.
pub fn naive_defining_set(spec: &CodeSpec) -> BTreeSet<u64> {
    let p = spec.params();
    let (q, n) = (p.q(), p.n());
    let seeds: Vec<i128> = match spec.family() {
        Family::LcdB => {
            let d = spec.delta() as i128;
            (-(d - 1)..=d - 1).collect()
        }
        Family::LcdBTilde => {
            let d = spec.delta() as i128;
            (-(d - 1)..=d - 1).filter(|&e| e != 0).collect()
        }
        Family::MelasEvenlike => vec![-1, 0, 1],
        _ => {
            let b = spec.b() as i128;
            (b..b + spec.designed_distance() as i128 - 1).collect()
        }
    };
    let mut out = BTreeSet::new();
    for e in seeds {
        let e = e.rem_euclid(n as i128) as u64;
        if !out.contains(&e) {
            out.extend(orbit(q, n, e));
        }
    }
    out
}

pub fn naive_dimension(spec: &CodeSpec) -> u64 {
    spec.n() - naive_defining_set(spec).len() as u64
}

/// `hist[s][r]`: number of length-`s` words over `0..q` whose longest run of
/// the letter 0 is exactly `r`, for every `s <= max_len`. Every word is
/// visited.
pub fn run_histogram(q: u64, max_len: usize) -> Vec<Vec<u128>> {
    let mut hist = vec![vec![0u128; max_len + 1]; max_len + 1];
    fn walk(q: u64, depth: usize, current: usize, longest: usize, max_len: usize, hist: &mut [Vec<u128>]) {
        hist[depth][longest] += 1;
        if depth == max_len {
            return;
        }
        for letter in 0..q {
            let c = if letter == 0 { current + 1 } else { 0 };
            walk(q, depth + 1, c, longest.max(c), max_len, hist);
        }
    }
    walk(q, 0, 0, 0, max_len, &mut hist);
    hist
}

/// Words of length `s` containing a run of at least `r` zeros.
pub fn words_with_run(hist: &[Vec<u128>], r: usize, s: usize) -> u128 {
    hist[s].iter().skip(r).sum()
}
