//! Exact integer helpers: overflow-safe modular arithmetic, primality,
//! factorisation and prime-power detection.

/// `a * b mod n` without overflow for any `u64` operands.
#[inline]
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `base^exp`, or `None` on `u64` overflow.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Deterministic Miller-Rabin for the whole `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorisation by trial division, as `(prime, multiplicity)` pairs
/// in increasing order. Intended for arguments up to about 2^40.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Splits `q = p^k` into `(p, k)`; `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = factorize(q);
    match f.as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// All prime powers in `[2, limit]`, increasing.
pub fn prime_powers_up_to(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&q| prime_power(q).is_some()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_mod_does_not_overflow() {
        let n = (1u64 << 63) - 1;
        assert_eq!(mul_mod(n - 1, n - 1, n), 1);
    }

    #[test]
    fn primes_and_powers() {
        assert!(is_prime(2) && is_prime(65537) && !is_prime(65535));
        assert!(is_prime(18446744073709551557));
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(factorize(242), vec![(2, 1), (11, 2)]);
        assert_eq!(prime_powers_up_to(16), vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16]);
    }

    #[test]
    fn pow_mod_matches_naive() {
        for b in 0..20u64 {
            for e in 0..10u32 {
                assert_eq!(pow_mod(b, e as u64, 97), b.pow(e) % 97);
            }
        }
    }
}
