//! The prime set pi and the arithmetic it induces: pi-parts of integers,
//! pi-numbers, pi-elements.  The complement pi' is kept implicit; a prime is
//! a pi'-prime exactly when it is not in pi.

use crate::arith::factorize;
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiConfig {
    primes: BTreeSet<u64>,
}

/// Selects either the pi-side or the pi'-side of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PiSide {
    Pi,
    PiPrime,
}

impl PiConfig {
    pub fn empty() -> Self {
        PiConfig {
            primes: BTreeSet::new(),
        }
    }

    pub fn from_primes<I: IntoIterator<Item = u64>>(primes: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for p in primes {
            if !crate::arith::is_prime(p) {
                return Err(Error::input(format!("{} is not a prime", p)));
            }
            set.insert(p);
        }
        Ok(PiConfig { primes: set })
    }

    pub fn primes(&self) -> &BTreeSet<u64> {
        &self.primes
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.contains(&p)
    }

    /// pi-part of `n`: the largest divisor all of whose prime factors lie in pi.
    pub fn pi_part(&self, n: u128) -> u128 {
        let mut part: u128 = 1;
        for (&p, &e) in factorize(n).iter() {
            if self.contains(p) {
                part *= (p as u128).pow(e);
            }
        }
        part
    }

    pub fn pi_prime_part(&self, n: u128) -> u128 {
        n / self.pi_part(n)
    }

    pub fn part(&self, n: u128, side: PiSide) -> u128 {
        match side {
            PiSide::Pi => self.pi_part(n),
            PiSide::PiPrime => self.pi_prime_part(n),
        }
    }

    /// `n` is a pi-number when every prime factor lies in pi (1 counts).
    pub fn is_pi_number(&self, n: u128) -> bool {
        self.pi_prime_part(n) == 1
    }

    pub fn is_pi_prime_number(&self, n: u128) -> bool {
        self.pi_part(n) == 1
    }

    pub fn is_number_of(&self, n: u128, side: PiSide) -> bool {
        match side {
            PiSide::Pi => self.is_pi_number(n),
            PiSide::PiPrime => self.is_pi_prime_number(n),
        }
    }
}

impl fmt::Debug for PiConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pi{}", self)
    }
}

impl fmt::Display for PiConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.primes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "}}")
    }
}
