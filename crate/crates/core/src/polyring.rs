//! Dense polynomials over GF(q) and minimal polynomials of powers of a
//! primitive `n`-th root of unity.

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cosets::{coset, CosetParams};
use crate::field::{FieldCtx, FieldError, SubfieldEmbedding};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("coefficient {value} of a minimal polynomial is not in GF({q}); field arithmetic is inconsistent")]
    NotInSubfield { value: u32, q: u64 },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Coefficient labels, lowest degree first, without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<u32>,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }
    /// `c x^d`.
    pub fn monomial(c: u32, d: usize) -> Self {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c;
        Poly::new(coeffs)
    }
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }
    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }
}

/// Ring operations in `K[x]` for a field context `K`.
#[derive(Clone, Copy, Debug)]
pub struct PolyRing<'a> {
    field: &'a FieldCtx,
}

impl<'a> PolyRing<'a> {
    pub fn new(field: &'a FieldCtx) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &FieldCtx {
        self.field
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let len = a.coeffs.len().max(b.coeffs.len());
        Poly::new((0..len).map(|i| self.field.add(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        let len = a.coeffs.len().max(b.coeffs.len());
        Poly::new((0..len).map(|i| self.field.sub(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn scale(&self, a: &Poly, c: u32) -> Poly {
        Poly::new(a.coeffs.iter().map(|&x| self.field.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let f = self.field;
        let mut out = vec![0u32; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        Poly::new(out)
    }

    pub fn divrem(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly), PolyError> {
        let db = b.degree().ok_or(PolyError::DivisionByZero)?;
        let f = self.field;
        let inv_lead = f.inv(b.leading())?;
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(), a.clone()));
        }
        let mut quot = vec![0u32; rem.len() - db];
        for top in (db..rem.len()).rev() {
            let c = f.mul(rem[top], inv_lead);
            if c == 0 {
                continue;
            }
            quot[top - db] = c;
            for (k, &bk) in b.coeffs.iter().enumerate() {
                let idx = top - db + k;
                rem[idx] = f.sub(rem[idx], f.mul(c, bk));
            }
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, a: &Poly, b: &Poly) -> Result<Poly, PolyError> {
        Ok(self.divrem(a, b)?.1)
    }

    /// Scales to leading coefficient 1; the zero polynomial stays zero.
    pub fn monic(&self, a: &Poly) -> Poly {
        if a.is_zero() {
            return Poly::zero();
        }
        let inv = self.field.inv(a.leading()).expect("nonzero leading coefficient");
        self.scale(a, inv)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b).expect("b is nonzero");
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Monic least common multiple of a list; the empty list gives 1.
    pub fn lcm(&self, polys: &[Poly]) -> Result<Poly, PolyError> {
        let mut acc = Poly::one();
        for p in polys {
            if p.is_zero() {
                return Err(PolyError::ZeroPolynomial);
            }
            let g = self.gcd(&acc, p);
            let (q, _) = self.divrem(&self.mul(&acc, p), &g)?;
            acc = self.monic(&q);
        }
        Ok(acc)
    }

    /// `x^l f(1/x)` where `l = deg f`.
    pub fn reciprocal(&self, f: &Poly) -> Result<Poly, PolyError> {
        if f.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut c = f.coeffs.clone();
        c.reverse();
        Ok(Poly::new(c))
    }

    /// Whether `f` equals its reciprocal after both are made monic.
    pub fn is_self_reciprocal(&self, f: &Poly) -> Result<bool, PolyError> {
        let r = self.reciprocal(f)?;
        if r.degree() != f.degree() {
            return Ok(false);
        }
        Ok(self.monic(&r) == self.monic(f))
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(&self, n: usize) -> Poly {
        let mut c = vec![0u32; n + 1];
        c[0] = self.field.neg(1);
        c[n] = 1;
        Poly::new(c)
    }

    /// Horner evaluation at an element of the same field.
    pub fn eval(&self, f: &Poly, x: u32) -> u32 {
        f.coeffs.iter().rev().fold(0, |acc, &c| self.field.add(self.field.mul(acc, x), c))
    }
}

/// GF(q^m) with its primitive element `beta` (a primitive `n`-th root of
/// unity for `n = q^m - 1`) and the embedding of GF(q).
#[derive(Clone, Debug)]
pub struct RootField {
    params: CosetParams,
    big: FieldCtx,
    embedding: SubfieldEmbedding,
}

impl RootField {
    pub fn new(params: &CosetParams) -> Result<Self, PolyError> {
        let (p, k) = crate::arith::prime_power(params.q()).expect("validated prime power");
        let big = FieldCtx::new(p, k * params.m(), 0)?;
        let embedding = SubfieldEmbedding::new(&big, params.q())?;
        Ok(RootField {
            params: *params,
            big,
            embedding,
        })
    }

    pub fn params(&self) -> &CosetParams {
        &self.params
    }
    pub fn big(&self) -> &FieldCtx {
        &self.big
    }
    /// The standalone GF(q) in which polynomial coefficients live.
    pub fn small(&self) -> &FieldCtx {
        self.embedding.small()
    }
    pub fn embedding(&self) -> &SubfieldEmbedding {
        &self.embedding
    }
    /// Ring over GF(q).
    pub fn ring(&self) -> PolyRing<'_> {
        PolyRing::new(self.small())
    }

    /// `beta^j`, with `beta = alpha`.
    pub fn beta_pow(&self, j: u64) -> u32 {
        self.big.alpha_pow(j)
    }

    /// Evaluates a GF(q) polynomial at an element of GF(q^m).
    pub fn eval(&self, f: &Poly, x: u32) -> u32 {
        let b = &self.big;
        f.coeffs()
            .iter()
            .rev()
            .fold(0, |acc, &c| b.add(b.mul(acc, x), self.embedding.embed(c)))
    }

    /// Evaluates `sum c_i x^{e_i}` given as sparse `(exponent, label)` terms
    /// at `beta^j`.
    pub fn eval_sparse_at_beta(&self, terms: &[(u64, u32)], j: u64) -> u32 {
        let n = self.params.n();
        let b = &self.big;
        terms.iter().fold(0, |acc, &(e, c)| {
            let t = b.mul(self.embedding.embed(c), self.beta_pow(crate::arith::mul_mod(e % n, j % n, n)));
            b.add(acc, t)
        })
    }

    /// Minimal polynomial of `beta^i` over GF(q), as the product of
    /// `x - beta^j` over the coset of `i`.
    pub fn minimal_poly(&self, i: u64) -> Result<Poly, PolyError> {
        let c = coset(&self.params, i);
        let ring = PolyRing::new(&self.big);
        let mut acc = Poly::one();
        for &j in &c.elements {
            let root = self.beta_pow(j);
            acc = ring.mul(&acc, &Poly::new(vec![self.big.neg(root), 1]));
        }
        let labels = acc
            .coeffs()
            .iter()
            .map(|&v| {
                self.embedding.label(v).ok_or(PolyError::NotInSubfield {
                    value: v,
                    q: self.params.q(),
                })
            })
            .collect::<Result<Vec<u32>, _>>()?;
        Ok(Poly::new(labels))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn p(c: &[u32]) -> Poly {
        Poly::new(c.to_vec())
    }

    #[test]
    fn gcd_lcm_over_gf3() {
        let f = make_field(3, 1, 0).unwrap();
        let r = PolyRing::new(&f);
        assert_eq!(r.gcd(&p(&[2, 0, 1]), &p(&[2, 1])), p(&[2, 1]));
        assert_eq!(r.lcm(&[p(&[2, 1]), p(&[1, 1])]).unwrap(), p(&[2, 0, 1]));
        assert_eq!(r.lcm(&[]).unwrap(), Poly::one());
        assert_eq!(r.lcm(&[Poly::zero()]), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn divrem_over_gf2() {
        let f = make_field(2, 1, 0).unwrap();
        let r = PolyRing::new(&f);
        let (q, rem) = r.divrem(&p(&[1, 1, 0, 0, 1]), &p(&[1, 1, 1])).unwrap();
        assert_eq!(q, p(&[0, 1, 1]));
        assert_eq!(rem, p(&[1]));
        assert_eq!(r.divrem(&p(&[1]), &Poly::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn reciprocals() {
        let f2 = make_field(2, 1, 0).unwrap();
        let f3 = make_field(3, 1, 0).unwrap();
        let r2 = PolyRing::new(&f2);
        let r3 = PolyRing::new(&f3);
        assert!(r2.is_self_reciprocal(&p(&[1, 1])).unwrap());
        assert!(r3.is_self_reciprocal(&p(&[1, 2, 1])).unwrap());
        assert_eq!(r2.reciprocal(&p(&[1, 1, 0, 1])).unwrap(), p(&[1, 0, 1, 1]));
        assert!(!r2.is_self_reciprocal(&p(&[1, 1, 0, 1])).unwrap());
        // x + 2 over GF(3) has reciprocal 2x + 1 = 2(x + 2)
        assert!(r3.is_self_reciprocal(&p(&[2, 1])).unwrap());
        assert_eq!(r2.reciprocal(&Poly::zero()), Err(PolyError::ZeroPolynomial));
        // x^2 + x has reciprocal x + 1 of lower degree
        assert!(!r2.is_self_reciprocal(&p(&[0, 1, 1])).unwrap());
    }

    #[test]
    fn minimal_polys_gf16() {
        let params = CosetParams::new(2, 4).unwrap();
        let rf = RootField::new(&params).unwrap();
        assert_eq!(rf.minimal_poly(0).unwrap(), p(&[1, 1]));
        assert_eq!(rf.minimal_poly(5).unwrap(), p(&[1, 1, 1]));
        let m1 = rf.minimal_poly(1).unwrap();
        assert_eq!(m1.degree(), Some(4));
        for j in [1, 2, 4, 8] {
            assert_eq!(rf.eval(&m1, rf.beta_pow(j)), 0);
        }
        assert_ne!(rf.eval(&m1, rf.beta_pow(3)), 0);
    }

    #[test]
    fn eval_examples() {
        let params = CosetParams::new(3, 2).unwrap();
        let rf = RootField::new(&params).unwrap();
        let ring = rf.ring();
        assert_eq!(rf.eval(&p(&[2, 1]), 1), 0);
        let xn = ring.x_n_minus_one(8);
        for j in 0..8 {
            assert_eq!(rf.eval(&xn, rf.beta_pow(j)), 0);
        }
    }
}
