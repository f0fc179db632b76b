//! Exact arithmetic in cyclotomic fields.
//!
//! A value is a rational linear combination of powers of `E(e) = exp(2*pi*i/e)`
//! kept in canonical form: coefficients live on the power basis
//! `1, E(e), .., E(e)^(phi(e)-1)` (reduction modulo the e-th cyclotomic
//! polynomial), and the conductor `e` is minimal for the value.  Canonical
//! forms are unique, so equality, hashing and ordering are plain structural
//! comparisons.  Rationals always have conductor 1.
//!
//! No floating point enters any computation here; the complex embedding is
//! provided only so tests can cross-check the symbolic reductions.

use crate::arith::{factorize, gcd_u64, lcm_u64};
use crate::error::{Error, Result};
use crate::ratlin::{solve_exact, SolveOutcome};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// Coefficients of the e-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(e: u64) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&e) {
        return hit.clone();
    }
    // x^e - 1 divided by the cyclotomic polynomials of the proper divisors
    let mut poly: Vec<BigInt> = vec![BigInt::zero(); e as usize + 1];
    poly[0] = BigInt::from(-1);
    poly[e as usize] = BigInt::one();
    for d in 1..e {
        if e.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            poly = divide_monic(&poly, &phi_d);
        }
    }
    let arc = Arc::new(poly);
    cache.lock().unwrap().insert(e, arc.clone());
    arc
}

/// Exact division of integer polynomials by a monic divisor.
fn divide_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    debug_assert!(den[dn].is_one());
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            let delta = d * &c;
            rem[k + i] -= delta;
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicValue {
    conductor: u64,
    coeffs: BTreeMap<u64, BigRational>,
}

/// Reduce a sparse exponent map modulo `x^e - 1` and then modulo the e-th
/// cyclotomic polynomial; result exponents are below `phi(e)`.
fn reduce_mod_phi(e: u64, map: &BTreeMap<u64, BigRational>) -> BTreeMap<u64, BigRational> {
    let mut dense = vec![BigRational::zero(); e as usize];
    for (&k, v) in map {
        let idx = (k % e) as usize;
        dense[idx] = &dense[idx] + v;
    }
    let phi = cyclotomic_polynomial(e);
    let deg = phi.len() - 1;
    // long division by the monic phi, keeping the remainder
    for k in (deg..e as usize).rev() {
        if dense[k].is_zero() {
            continue;
        }
        let c = dense[k].clone();
        dense[k] = BigRational::zero();
        for (i, p) in phi.iter().enumerate().take(deg) {
            let delta = &c * BigRational::from_integer(p.clone());
            dense[k - deg + i] = &dense[k - deg + i] - &delta;
        }
    }
    dense
        .into_iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i as u64, v))
        .collect()
}

/// Canonical form of `x^k` at conductor `e` as a rational vector of length
/// `phi(e)`.
fn basis_vector(e: u64, k: u64, phi_e: usize) -> Vec<BigRational> {
    let mut map = BTreeMap::new();
    map.insert(k % e, BigRational::one());
    let reduced = reduce_mod_phi(e, &map);
    let mut out = vec![BigRational::zero(); phi_e];
    for (i, v) in reduced {
        out[i as usize] = v;
    }
    out
}

fn phi_of(e: u64) -> usize {
    crate::arith::euler_phi(e) as usize
}

impl CyclotomicValue {
    pub fn zero() -> Self {
        CyclotomicValue {
            conductor: 1,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(0, r);
        }
        CyclotomicValue {
            conductor: 1,
            coeffs,
        }
    }

    /// `E(e)^k`.
    pub fn root_of_unity(e: u64, k: i64) -> Result<Self> {
        if e == 0 {
            return Err(Error::input("conductor must be positive"));
        }
        let kk = k.rem_euclid(e as i64) as u64;
        let mut map = BTreeMap::new();
        map.insert(kk, BigRational::one());
        Ok(Self::canonicalize(e, map))
    }

    /// Establish the canonical invariants from a raw exponent map.
    fn canonicalize(e: u64, map: BTreeMap<u64, BigRational>) -> Self {
        let mut conductor = e;
        let mut coeffs = reduce_mod_phi(conductor, &map);
        // conductor descent: drop any prime whose Galois group over the
        // candidate subfield fixes the value
        'descend: loop {
            if coeffs.is_empty() {
                return CyclotomicValue {
                    conductor: 1,
                    coeffs,
                };
            }
            if conductor == 1 {
                break;
            }
            for &p in factorize(conductor as u128).keys() {
                let d = conductor / p;
                let fixed = (0..conductor)
                    .filter(|k| k % d == 1 % d && gcd_u64(*k, conductor) == 1)
                    .all(|k| {
                        let image: BTreeMap<u64, BigRational> = coeffs
                            .iter()
                            .map(|(&i, v)| (i * k % conductor, v.clone()))
                            .fold(BTreeMap::new(), |mut acc, (i, v)| {
                                acc.entry(i).and_modify(|x| *x = &*x + &v).or_insert(v);
                                acc
                            });
                        reduce_mod_phi(conductor, &image) == coeffs
                    });
                if fixed {
                    coeffs = Self::rewrite_at(conductor, &coeffs, d);
                    conductor = d;
                    continue 'descend;
                }
            }
            break;
        }
        CyclotomicValue { conductor, coeffs }
    }

    /// Rewrite a value known to lie in `Q(zeta_d)` (for `d | e`) on the power
    /// basis of the smaller field, by exact linear solve.
    fn rewrite_at(
        e: u64,
        coeffs: &BTreeMap<u64, BigRational>,
        d: u64,
    ) -> BTreeMap<u64, BigRational> {
        let phi_e = phi_of(e);
        let phi_d = phi_of(d);
        let scale = e / d;
        let columns: Vec<Vec<BigRational>> = (0..phi_d as u64)
            .map(|j| basis_vector(e, j * scale, phi_e))
            .collect();
        let mut rhs = vec![BigRational::zero(); phi_e];
        for (&i, v) in coeffs {
            rhs[i as usize] = v.clone();
        }
        match solve_exact(&columns, &rhs) {
            SolveOutcome::Unique(sol) => sol
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i as u64, v))
                .collect(),
            _ => unreachable!("power basis of a subfield is independent and spans fixed values"),
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Canonical coefficients on the power basis of `Q(zeta_conductor)`.
    pub fn coefficients(&self) -> &BTreeMap<u64, BigRational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn lift_map(&self, e: u64) -> BTreeMap<u64, BigRational> {
        let scale = e / self.conductor;
        self.coeffs
            .iter()
            .map(|(&k, v)| (k * scale, v.clone()))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let e = lcm_u64(self.conductor, other.conductor);
        let mut map = self.lift_map(e);
        for (k, v) in other.lift_map(e) {
            map.entry(k).and_modify(|x| *x = &*x + &v).or_insert(v);
        }
        Self::canonicalize(e, map)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CyclotomicValue {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(&k, v)| (k, -v.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let e = lcm_u64(self.conductor, other.conductor);
        let a = self.lift_map(e);
        let b = other.lift_map(e);
        let mut map: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (&i, x) in &a {
            for (&j, y) in &b {
                let k = (i + j) % e;
                let prod = x * y;
                map.entry(k)
                    .and_modify(|v| *v = &*v + &prod)
                    .or_insert(prod);
            }
        }
        Self::canonicalize(e, map)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        CyclotomicValue {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(&k, v)| (k, v * r)).collect(),
        }
    }

    /// Galois conjugation `zeta_e -> zeta_e^k` for `gcd(k, e) = 1`.
    pub fn galois_conjugate(&self, k: u64) -> Result<Self> {
        let e = self.conductor;
        let kk = k % e;
        if gcd_u64(kk.max(1), e) != 1 || (kk == 0 && e > 1) {
            return Err(Error::domain(format!(
                "exponent {} is not coprime to the conductor {}",
                k, e
            )));
        }
        if e == 1 {
            return Ok(self.clone());
        }
        let map: BTreeMap<u64, BigRational> = self
            .coeffs
            .iter()
            .map(|(&i, v)| (i * kk % e, v.clone()))
            .fold(BTreeMap::new(), |mut acc, (i, v)| {
                acc.entry(i).and_modify(|x| *x = &*x + &v).or_insert(v);
                acc
            });
        Ok(Self::canonicalize(e, map))
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois_conjugate(self.conductor - 1)
            .expect("e-1 is coprime to e")
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.conductor != 1 {
            return None;
        }
        Some(
            self.coeffs
                .get(&0)
                .cloned()
                .unwrap_or_else(BigRational::zero),
        )
    }

    pub fn as_rational_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        if r.is_integer() {
            Some(r.to_integer())
        } else {
            None
        }
    }

    /// Canonical coordinates on the power basis of `Q(zeta_e)` for a
    /// conductor multiple `e`; length `phi(e)`.
    pub fn coefficients_at(&self, e: u64) -> Result<Vec<BigRational>> {
        if !e.is_multiple_of(self.conductor) {
            return Err(Error::domain(format!(
                "{} is not a multiple of the conductor {}",
                e, self.conductor
            )));
        }
        let reduced = reduce_mod_phi(e, &self.lift_map(e));
        let mut out = vec![BigRational::zero(); phi_of(e)];
        for (i, v) in reduced {
            out[i as usize] = v;
        }
        Ok(out)
    }

    /// Numeric embedding at `zeta_e = exp(2*pi*i/e)`; for cross-checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (&k, v) in &self.coeffs {
            let c = rational_to_f64(v);
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / (self.conductor as f64);
            re += c * angle.cos();
            im += c * angle.sin();
        }
        (re, im)
    }
}

/// Multiplicative order of a root of unity, or `None` when the value is not
/// one.  A root of unity with conductor `e` has order `e` or `2e`, so a
/// memoized table of the canonical forms of `mu_2e` answers by lookup.
pub fn root_of_unity_order(v: &CyclotomicValue) -> Option<u64> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<HashMap<CyclotomicValue, u64>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let e = v.conductor();
    let table = {
        let mut guard = cache.lock().unwrap();
        guard
            .entry(e)
            .or_insert_with(|| {
                let m = 2 * e;
                let mut map = HashMap::new();
                for k in 0..m {
                    let root = CyclotomicValue::root_of_unity(m, k as i64)
                        .expect("positive conductor");
                    let order = m / gcd_u64(m, k.max(1));
                    let order = if k == 0 { 1 } else { order };
                    map.insert(root, order);
                }
                Arc::new(map)
            })
            .clone()
    };
    table.get(v).copied()
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    let num = r.numer();
    let den = r.denom();
    // adequate for the desk-scale coefficient sizes exercised in tests
    let nf: f64 = num.to_string().parse().unwrap_or(f64::NAN);
    let df: f64 = den.to_string().parse().unwrap_or(f64::NAN);
    nf / df
}

fn format_coeff(v: &BigRational, lead: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if v.is_negative() {
        write!(f, "-")?;
    } else if !lead {
        write!(f, "+")?;
    }
    let a = v.abs();
    if !a.is_one() {
        write!(f, "{}*", a)?;
    }
    Ok(())
}

impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        if self.conductor == 1 {
            return write!(f, "{}", self.coeffs[&0]);
        }
        let mut lead = true;
        for (&k, v) in &self.coeffs {
            if k == 0 {
                if v.is_negative() {
                    write!(f, "-{}", v.abs())?;
                } else {
                    if !lead {
                        write!(f, "+")?;
                    }
                    write!(f, "{}", v)?;
                }
            } else {
                format_coeff(v, lead, f)?;
                write!(f, "E({})", self.conductor)?;
                if k > 1 {
                    write!(f, "^{}", k)?;
                }
            }
            lead = false;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
