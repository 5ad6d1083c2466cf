//! GF(p^e) in a polynomial basis over GF(p).
//!
//! Elements are packed as integers `sum d_i p^i` with digits `d_i` in
//! `[0, p)`, so the labels of GF(q) are simply `0..q`. Fields with at most
//! [`LOG_TABLE_CEILING`] elements get exp/log tables; small odd-characteristic
//! extension fields also get an addition table.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{checked_pow, factorize, is_prime, prime_power};

pub const FIELD_CEILING: u64 = 1 << 32;
pub const LOG_TABLE_CEILING: u64 = 1 << 20;
const ADD_TABLE_CEILING: u64 = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of size {p}^{e} exceeds the ceiling 2^32")]
    TooLarge { p: u64, e: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different field contexts")]
    ContextMismatch,
    #[error("invalid field description: {0}")]
    InvalidDescriptor(String),
    #[error("GF({q}) is not a subfield of GF({p}^{e})")]
    NotASubfield { q: u64, p: u64, e: u32 },
}

/// Exact, serialisable description of a field: `{p, e, modulus, alpha}`.
/// Digit vectors are lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u64,
    pub e: u32,
    pub modulus: Vec<u32>,
    pub alpha: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct FieldCtx {
    id: u64,
    p: u32,
    e: u32,
    size: u64,
    modulus: Vec<u32>,
    alpha: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Vec<u32>,
}

/// An element tagged with the identity of its field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    ctx: u64,
    value: u32,
}

impl FieldElem {
    pub fn value(&self) -> u32 {
        self.value
    }
}

// polynomials over GF(p) as digit vectors, lowest degree first

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn zp_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    zp_rem(prod, f, p)
}

/// Remainder modulo a monic `f`.
fn zp_rem(mut a: Vec<u64>, f: &[u64], p: u64) -> Vec<u64> {
    let d = f.len() - 1;
    trim(&mut a);
    while a.len() > d {
        let top = a.len() - 1;
        let c = a[top];
        for (k, &fk) in f.iter().enumerate() {
            let idx = top - d + k;
            let sub = (c as u128 * fk as u128 % p as u128) as u64;
            a[idx] = (a[idx] + p - sub) % p;
        }
        trim(&mut a);
    }
    a
}

fn zp_powmod(base: &[u64], mut exp: u128, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = zp_rem(base.to_vec(), f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = zp_mulmod(&acc, &b, f, p);
        }
        b = zp_mulmod(&b, &b, f, p);
        exp >>= 1;
    }
    acc
}

fn zp_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = crate::arith::pow_mod(*b.last().unwrap(), p - 2, p);
        let monic: Vec<u64> = b.iter().map(|&c| (c as u128 * inv as u128 % p as u128) as u64).collect();
        let r = zp_rem(a, &monic, p);
        a = monic;
        b = r;
    }
    a
}

/// Rabin's irreducibility test for a monic polynomial over GF(p).
fn zp_is_irreducible(f: &[u64], p: u64) -> bool {
    let e = (f.len() - 1) as u32;
    if e == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let frobenius = |k: u32| -> Vec<u64> {
        let mut y = x.clone();
        for _ in 0..k {
            y = zp_powmod(&y, p as u128, f, p);
        }
        y
    };
    if frobenius(e) != x {
        return false;
    }
    for (r, _) in factorize(e as u64) {
        let mut y = frobenius(e / r as u32);
        if y.len() < 2 {
            y.resize(2, 0);
        }
        y[1] = (y[1] + p - 1) % p;
        trim(&mut y);
        if zp_gcd(f.to_vec(), y, p).len() != 1 {
            return false;
        }
    }
    true
}

fn digits_of(mut v: u64, p: u64, e: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(e as usize);
    for _ in 0..e {
        out.push(v % p);
        v /= p;
    }
    out
}

fn fingerprint(p: u64, e: u32, modulus: &[u32], alpha: u32) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut mix = |v: u64| {
        h ^= v;
        h = h.wrapping_mul(0x0100_0000_01b3);
    };
    mix(p);
    mix(e as u64);
    for &c in modulus {
        mix(c as u64);
    }
    mix(alpha as u64);
    h
}

impl FieldCtx {
    /// Builds GF(p^e). Seed 0 picks the lexicographically first monic
    /// irreducible modulus; other seeds start the search at a pseudorandom
    /// offset. `alpha` is the first element, in packed order, of full order.
    pub fn new(p: u64, e: u32, seed: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if e == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let size = checked_pow(p, e)
            .filter(|&s| s <= FIELD_CEILING)
            .ok_or(FieldError::TooLarge { p, e })?;
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            let start = if seed == 0 {
                0
            } else {
                ChaCha8Rng::seed_from_u64(seed).gen_range(0..size)
            };
            (0..size)
                .map(|i| (start + i) % size)
                .filter(|c| c % p != 0)
                .map(|c| {
                    let mut f = digits_of(c, p, e);
                    f.push(1);
                    f
                })
                .find(|f| zp_is_irreducible(f, p))
                .expect("irreducible polynomials exist in every degree")
        };
        let mut ctx = FieldCtx::bare(p, e, size, modulus.iter().map(|&c| c as u32).collect(), 0);
        ctx.alpha = (1..size as u32)
            .find(|&a| ctx.has_full_order(a))
            .expect("the multiplicative group is cyclic");
        ctx.finish();
        Ok(ctx)
    }

    fn bare(p: u64, e: u32, size: u64, modulus: Vec<u32>, alpha: u32) -> Self {
        FieldCtx {
            id: 0,
            p: p as u32,
            e,
            size,
            modulus,
            alpha,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: Vec::new(),
        }
    }

    pub fn from_descriptor(d: &FieldDescriptor) -> Result<Self, FieldError> {
        let bad = |m: &str| FieldError::InvalidDescriptor(m.to_string());
        if !is_prime(d.p) {
            return Err(FieldError::NotPrime(d.p));
        }
        if d.e == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let size = checked_pow(d.p, d.e)
            .filter(|&s| s <= FIELD_CEILING)
            .ok_or(FieldError::TooLarge { p: d.p, e: d.e })?;
        if d.modulus.len() != d.e as usize + 1 || d.modulus.last() != Some(&1) {
            return Err(bad("modulus must be monic of degree e"));
        }
        if d.modulus.iter().chain(&d.alpha).any(|&c| c as u64 >= d.p) {
            return Err(bad("digit out of range"));
        }
        if d.alpha.len() > d.e as usize {
            return Err(bad("alpha has more than e digits"));
        }
        let f: Vec<u64> = d.modulus.iter().map(|&c| c as u64).collect();
        if !zp_is_irreducible(&f, d.p) {
            return Err(bad("modulus is reducible"));
        }
        let alpha = d.alpha.iter().rev().fold(0u64, |acc, &c| acc * d.p + c as u64);
        let mut ctx = FieldCtx::bare(d.p, d.e, size, d.modulus.clone(), alpha as u32);
        if !ctx.has_full_order(ctx.alpha) {
            return Err(bad("alpha is not primitive"));
        }
        ctx.finish();
        Ok(ctx)
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p as u64,
            e: self.e,
            modulus: self.modulus.clone(),
            alpha: self.digits(self.alpha),
        }
    }

    fn finish(&mut self) {
        self.id = fingerprint(self.p as u64, self.e, &self.modulus, self.alpha);
        if self.size <= LOG_TABLE_CEILING {
            let ord = (self.size - 1) as usize;
            let mut exp = Vec::with_capacity(ord);
            let mut log = vec![0u32; self.size as usize];
            let mut x = 1u32;
            for i in 0..ord {
                exp.push(x);
                log[x as usize] = i as u32;
                x = self.mul_slow(x, self.alpha);
            }
            self.exp = exp;
            self.log = log;
        }
        if self.p != 2 && self.e > 1 && self.size <= ADD_TABLE_CEILING {
            let s = self.size as u32;
            let mut t = Vec::with_capacity((s * s) as usize);
            for a in 0..s {
                for b in 0..s {
                    t.push(self.add_slow(a, b));
                }
            }
            self.add_table = t;
        }
    }

    fn has_full_order(&self, a: u32) -> bool {
        if a == 0 {
            return false;
        }
        let ord = self.size - 1;
        self.pow_slow(a, ord) == 1 && factorize(ord).into_iter().all(|(r, _)| self.pow_slow(a, ord / r) != 1)
    }

    pub fn id(&self) -> u64 {
        self.id
    }
    pub fn p(&self) -> u64 {
        self.p as u64
    }
    pub fn e(&self) -> u32 {
        self.e
    }
    /// Number of elements, `p^e`.
    pub fn size(&self) -> u64 {
        self.size
    }
    /// Multiplicative order of `alpha`, `p^e - 1`.
    pub fn order(&self) -> u64 {
        self.size - 1
    }
    pub fn alpha(&self) -> u32 {
        self.alpha
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    pub fn has_tables(&self) -> bool {
        !self.exp.is_empty()
    }

    /// Digits of a packed element, lowest first, length `e`.
    pub fn digits(&self, a: u32) -> Vec<u32> {
        digits_of(a as u64, self.p as u64, self.e).into_iter().map(|d| d as u32).collect()
    }

    pub fn pack(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0u64, |acc, &d| acc * self.p as u64 + (d % self.p) as u64) as u32
    }

    // raw arithmetic on packed values

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let (mut a, mut b) = (a as u64, b as u64);
        let mut out = 0u64;
        let mut place = 1u64;
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            a ^ b
        } else if self.e == 1 {
            ((a as u64 + b as u64) % self.p as u64) as u32
        } else if !self.add_table.is_empty() {
            self.add_table[(a as u64 * self.size + b as u64) as usize]
        } else {
            self.add_slow(a, b)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        if self.e == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let p = self.p as u64;
        let mut a = a as u64;
        let mut out = 0u64;
        let mut place = 1u64;
        while a > 0 {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        if self.e == 1 {
            return (a as u64 * b as u64 % p) as u32;
        }
        let f: Vec<u64> = self.modulus.iter().map(|&c| c as u64).collect();
        let r = zp_mulmod(&digits_of(a as u64, p, self.e), &digits_of(b as u64, p, self.e), &f, p);
        r.iter().rev().fold(0u64, |acc, &d| acc * p + d) as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.exp.is_empty() {
            return self.mul_slow(a, b);
        }
        let ord = self.exp.len();
        let s = self.log[a as usize] as usize + self.log[b as usize] as usize;
        self.exp[if s >= ord { s - ord } else { s }]
    }

    fn pow_slow(&self, a: u32, mut k: u64) -> u32 {
        let mut acc = 1u32;
        let mut b = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_slow(acc, b);
            }
            b = self.mul_slow(b, b);
            k >>= 1;
        }
        acc
    }

    /// Square-and-multiply (or a table lookup when tables exist).
    pub fn pow(&self, a: u32, k: u64) -> u32 {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if !self.exp.is_empty() {
            let ord = self.exp.len() as u128;
            let l = self.log[a as usize] as u128;
            return self.exp[(l * k as u128 % ord) as usize];
        }
        self.pow_slow(a, k)
    }

    /// `alpha^k`.
    pub fn alpha_pow(&self, k: u64) -> u32 {
        if !self.exp.is_empty() {
            return self.exp[(k % self.order()) as usize];
        }
        self.pow(self.alpha, k % self.order())
    }

    /// Discrete logarithm base `alpha`, available for table-backed fields.
    pub fn log_alpha(&self, a: u32) -> Option<u64> {
        if a == 0 || self.exp.is_empty() {
            None
        } else {
            Some(self.log[a as usize] as u64)
        }
    }

    pub fn inv(&self, a: u32) -> Result<u32, FieldError> {
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        if !self.exp.is_empty() {
            let ord = self.exp.len();
            let l = self.log[a as usize] as usize;
            return Ok(self.exp[(ord - l) % ord]);
        }
        Ok(self.pow(a, self.size - 2))
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    // context-checked element API

    pub fn elem(&self, value: u32) -> FieldElem {
        assert!((value as u64) < self.size, "value outside the field");
        FieldElem { ctx: self.id, value }
    }
    pub fn zero(&self) -> FieldElem {
        self.elem(0)
    }
    pub fn one(&self) -> FieldElem {
        self.elem(1)
    }
    pub fn alpha_elem(&self) -> FieldElem {
        self.elem(self.alpha)
    }

    fn own(&self, a: FieldElem) -> Result<u32, FieldError> {
        if a.ctx == self.id {
            Ok(a.value)
        } else {
            Err(FieldError::ContextMismatch)
        }
    }

    pub fn add_elem(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem, FieldError> {
        Ok(self.elem(self.add(self.own(a)?, self.own(b)?)))
    }
    pub fn sub_elem(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem, FieldError> {
        Ok(self.elem(self.sub(self.own(a)?, self.own(b)?)))
    }
    pub fn mul_elem(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem, FieldError> {
        Ok(self.elem(self.mul(self.own(a)?, self.own(b)?)))
    }
    pub fn neg_elem(&self, a: FieldElem) -> Result<FieldElem, FieldError> {
        Ok(self.elem(self.neg(self.own(a)?)))
    }
    pub fn inv_elem(&self, a: FieldElem) -> Result<FieldElem, FieldError> {
        Ok(self.elem(self.inv(self.own(a)?)?))
    }
    pub fn pow_elem(&self, a: FieldElem, k: u64) -> Result<FieldElem, FieldError> {
        Ok(self.elem(self.pow(self.own(a)?, k)))
    }
}

/// Shorthand for [`FieldCtx::new`].
pub fn make_field(p: u64, e: u32, seed: u64) -> Result<FieldCtx, FieldError> {
    FieldCtx::new(p, e, seed)
}

/// GF(q) sitting inside a larger field of the same characteristic, with
/// labels matching the standalone GF(q) built by `make_field(p, k, 0)`.
#[derive(Clone, Debug)]
pub struct SubfieldEmbedding {
    q: u64,
    degree: u32,
    beta0: u32,
    small: FieldCtx,
    to_big: Vec<u32>,
    label_of: HashMap<u32, u32>,
}

impl SubfieldEmbedding {
    pub fn new(big: &FieldCtx, q: u64) -> Result<Self, FieldError> {
        let not_sub = || FieldError::NotASubfield { q, p: big.p(), e: big.e() };
        let (p, k) = prime_power(q).ok_or_else(not_sub)?;
        if p != big.p() || !big.e().is_multiple_of(k) {
            return Err(not_sub());
        }
        let small = FieldCtx::new(p, k, 0)?;
        let beta0 = big.alpha_pow(big.order() / (q - 1));
        let to_big: Vec<u32> = if k == 1 {
            (0..q as u32).collect()
        } else {
            // send the generator of the small field's polynomial basis to a
            // root of its modulus inside the subfield
            let f = small.modulus();
            let eval = |x: u32| f.iter().rev().fold(0u32, |acc, &c| big.add(big.mul(acc, x), c));
            let root = (0..q - 1)
                .map(|s| big.pow(beta0, s))
                .find(|&x| eval(x) == 0)
                .expect("the subfield splits every irreducible of degree k");
            (0..q as u32)
                .map(|label| {
                    small
                        .digits(label)
                        .iter()
                        .rev()
                        .fold(0u32, |acc, &d| big.add(big.mul(acc, root), d))
                })
                .collect()
        };
        let label_of: HashMap<u32, u32> = to_big.iter().enumerate().map(|(l, &v)| (v, l as u32)).collect();
        debug_assert_eq!(label_of.len(), q as usize);
        Ok(SubfieldEmbedding {
            q,
            degree: big.e() / k,
            beta0,
            small,
            to_big,
            label_of,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }
    /// `[big : GF(q)]`.
    pub fn degree(&self) -> u32 {
        self.degree
    }
    /// Generator of the subfield's multiplicative group, `alpha^((Q-1)/(q-1))`.
    pub fn beta0(&self) -> u32 {
        self.beta0
    }
    /// The standalone GF(q) whose labels this embedding uses.
    pub fn small(&self) -> &FieldCtx {
        &self.small
    }
    pub fn embed(&self, label: u32) -> u32 {
        self.to_big[label as usize]
    }
    /// Label of a big-field element, if it lies in the subfield.
    pub fn label(&self, big_value: u32) -> Option<u32> {
        self.label_of.get(&big_value).copied()
    }
}
