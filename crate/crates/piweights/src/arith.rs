//! Small integer utilities: factorization by trial division, gcd/lcm,
//! modular arithmetic.  Orders handled here are desk-scale, so nothing
//! fancier than trial division is warranted.

use std::collections::BTreeMap;

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd_u64(a, b) * b
    }
}

pub fn gcd_u128(a: u128, b: u128) -> u128 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Prime factorization `p -> multiplicity` by trial division.
pub fn factorize(n: u128) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut n = n;
    let mut p: u128 = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            *out.entry(p as u64).or_insert(0) += 1;
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        *out.entry(n as u64).or_insert(0) += 1;
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p: u64 = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    true
}

pub fn mod_pow(base: u64, exp: u64, modulus: u64) -> u64 {
    let mut result: u128 = 1;
    let mut base = base as u128 % modulus as u128;
    let mut exp = exp;
    let m = modulus as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    result as u64
}

/// Inverse of `a` modulo `m` for `gcd(a, m) = 1`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(m as i128) as u64)
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    for &p in factorize(n as u128).keys() {
        result = result / p * (p - 1);
    }
    result
}
