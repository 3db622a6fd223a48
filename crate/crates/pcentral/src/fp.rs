//! Arithmetic in the prime field Z/pZ.
//!
//! Residues are kept reduced to `[0, p-1]`. The modulus is restricted to
//! `p < 2^31` so products never overflow `u64`; the toolkit only ever needs
//! small primes, but nothing here assumes a particular one.

use crate::error::{Error, Result};

/// Trial-division primality test; sufficient for the moduli this crate uses.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Validates that `p` is a usable prime modulus.
pub fn check_modulus(p: u64) -> Result<()> {
    if p >= 1 << 31 {
        return Err(Error::ModulusTooLarge(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b % p) % p
}

pub(crate) fn neg_mod(a: u64, p: u64) -> u64 {
    (p - a % p) % p
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a % p) * (b % p) % p
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    base %= p;
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse mod the prime `p`.
pub(crate) fn inv_mod(a: u64, p: u64) -> Result<u64> {
    if a.is_multiple_of(p) {
        return Err(Error::DivisionByZero);
    }
    Ok(pow_mod(a, p - 2, p))
}

/// Reduce a signed integer into `[0, p-1]`.
pub(crate) fn reduce_signed(value: i64, p: u64) -> u64 {
    value.rem_euclid(p as i64) as u64
}

/// A residue in the prime field Z/pZ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FpScalar {
    value: u64,
    modulus: u64,
}

impl FpScalar {
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(Self {
            value: reduce_signed(value, modulus),
            modulus,
        })
    }

    /// Same as [`FpScalar::new`] but assumes the modulus was already checked.
    pub(crate) fn from_reduced(value: u64, modulus: u64) -> Self {
        debug_assert!(value < modulus);
        Self { value, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        Ok(Self::from_reduced(
            add_mod(self.value, other.value, self.modulus),
            self.modulus,
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        Ok(Self::from_reduced(
            sub_mod(self.value, other.value, self.modulus),
            self.modulus,
        ))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        Ok(Self::from_reduced(
            mul_mod(self.value, other.value, self.modulus),
            self.modulus,
        ))
    }

    pub fn neg(&self) -> Self {
        Self::from_reduced(neg_mod(self.value, self.modulus), self.modulus)
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(Self::from_reduced(
            inv_mod(self.value, self.modulus)?,
            self.modulus,
        ))
    }
}

impl std::fmt::Display for FpScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}
