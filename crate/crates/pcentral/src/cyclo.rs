//! Exact arithmetic in the cyclotomic field Q(ρ), ρ a primitive p-th root
//! of unity.
//!
//! An element is stored as the unique representative
//! `c0 + c1·ρ + … + c_{p-2}·ρ^{p-2}` of its class modulo the cyclotomic
//! polynomial `Φ_p = 1 + t + … + t^{p-1}`, with arbitrary-precision rational
//! coefficients. Reduction is applied on every operation, so equality of
//! values is equality of representations. Both `ρ^p = 1` and
//! `1 + ρ + … + ρ^{p-1} = 0` hold exactly.
//!
//! `p = 2` is permitted (ρ = −1, one rational coefficient) so the classical
//! Clifford relations can be exercised by the same engine.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fp::check_modulus;

/// An element of Q(ρ) with ρ a primitive p-th root of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloNum {
    p: u64,
    /// Exactly `p - 1` coefficients: `coeffs[k]` multiplies `ρ^k`.
    coeffs: Vec<BigRational>,
}

impl CycloNum {
    fn degree(p: u64) -> usize {
        (p - 1) as usize
    }

    pub fn zero(p: u64) -> Result<Self> {
        check_modulus(p)?;
        Ok(Self {
            p,
            coeffs: vec![BigRational::zero(); Self::degree(p)],
        })
    }

    pub fn one(p: u64) -> Result<Self> {
        Self::from_rational(p, BigRational::one())
    }

    pub fn from_rational(p: u64, value: BigRational) -> Result<Self> {
        let mut out = Self::zero(p)?;
        out.coeffs[0] = value;
        Ok(out)
    }

    pub fn from_integer(p: u64, value: i64) -> Result<Self> {
        Self::from_rational(p, BigRational::from_integer(BigInt::from(value)))
    }

    /// Builds an element from raw coefficients on `1, ρ, …, ρ^{p-2}`.
    pub fn from_coeffs(p: u64, coeffs: Vec<BigRational>) -> Result<Self> {
        check_modulus(p)?;
        if coeffs.len() != Self::degree(p) {
            return Err(Error::Format(format!(
                "cyclotomic element for p = {} needs exactly {} coefficients, got {}",
                p,
                Self::degree(p),
                coeffs.len()
            )));
        }
        Ok(Self { p, coeffs })
    }

    /// ρ^k, with k taken mod p (negative k allowed).
    pub fn root_power(p: u64, k: i64) -> Result<Self> {
        check_modulus(p)?;
        let e = k.rem_euclid(p as i64) as usize;
        let mut out = Self::zero(p)?;
        if e < Self::degree(p) {
            out.coeffs[e] = BigRational::one();
        } else {
            // ρ^{p-1} = -(1 + ρ + … + ρ^{p-2})
            for c in out.coeffs.iter_mut() {
                *c = -BigRational::one();
            }
        }
        Ok(out)
    }

    /// The primitive root ρ itself.
    pub fn rho(p: u64) -> Result<Self> {
        Self::root_power(p, 1)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Some(r) when the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn same_prime(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch {
                left: self.p,
                right: other.p,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { p: self.p, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self { p: self.p, coeffs })
    }

    pub fn neg(&self) -> Self {
        Self {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Exact product, reduced mod Φ_p.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let d = Self::degree(self.p);
        // Accumulate on 1, ρ, …, ρ^{p-1} (exponents mod p), then fold the
        // top power through ρ^{p-1} = -(1 + ρ + … + ρ^{p-2}).
        let mut acc = vec![BigRational::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let e = (i + j) % (self.p as usize);
                acc[e] += a * b;
            }
        }
        let top = acc.pop().expect("accumulator has p entries");
        let coeffs = acc.into_iter().map(|c| c - &top).collect();
        Ok(Self { p: self.p, coeffs })
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = Self::one(self.p)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Field inverse via the product of Galois conjugates: with
    /// `N = Π_{k=1}^{p-1} σ_k(x)` rational, the inverse is
    /// `Π_{k=2}^{p-1} σ_k(x) / N`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut partial = Self::one(self.p)?;
        for k in 2..self.p {
            partial = partial.mul(&self.conjugate(k)?)?;
        }
        let norm = partial.mul(self)?;
        let norm = norm
            .as_rational()
            .expect("product over all Galois conjugates is rational")
            .clone();
        assert!(!norm.is_zero(), "nonzero element has nonzero norm");
        Ok(partial.scale(&norm.recip()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    /// The Galois conjugate ρ ↦ ρ^k (k coprime to p).
    fn conjugate(&self, k: u64) -> Result<Self> {
        let mut out = Self::zero(self.p)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = Self::root_power(self.p, (i as u64 * k) as i64)?.scale(c);
            out = out.add(&term)?;
        }
        Ok(out)
    }
}

impl std::fmt::Display for CycloNum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{}", mag)?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}rho", if unit_coeff { "" } else { "*" })?,
                _ => write!(f, "{}rho^{}", if unit_coeff { "" } else { "*" }, k)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn cy(p: u64, coeffs: &[(i64, i64)]) -> CycloNum {
        CycloNum::from_coeffs(p, coeffs.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    #[test]
    fn rho_squared_at_p3() {
        // ρ·ρ = ρ² = −1 − ρ, forced by Φ₃ = t² + t + 1
        let rho = CycloNum::rho(3).unwrap();
        let sq = rho.mul(&rho).unwrap();
        assert_eq!(sq, cy(3, &[(-1, 1), (-1, 1)]));
    }

    #[test]
    fn one_plus_rho_squared_is_rho() {
        // (1+ρ)² = 1 + 2ρ + ρ² = ρ
        let v = cy(3, &[(1, 1), (1, 1)]);
        assert_eq!(v.mul(&v).unwrap(), CycloNum::rho(3).unwrap());
    }

    #[test]
    fn rho2_times_rho3_at_p5() {
        let a = CycloNum::root_power(5, 2).unwrap();
        let b = CycloNum::root_power(5, 3).unwrap();
        assert!(a.mul(&b).unwrap().is_one());
    }

    #[test]
    fn root_power_examples() {
        assert!(CycloNum::root_power(3, 0).unwrap().is_one());
        assert_eq!(
            CycloNum::root_power(3, 2).unwrap(),
            cy(3, &[(-1, 1), (-1, 1)])
        );
        assert_eq!(
            CycloNum::root_power(3, 4).unwrap(),
            CycloNum::rho(3).unwrap()
        );
        // negative exponents wrap: ρ^{-1} = ρ^{p-1}
        assert_eq!(
            CycloNum::root_power(3, -1).unwrap(),
            CycloNum::root_power(3, 2).unwrap()
        );
    }

    #[test]
    fn root_powers_have_order_dividing_p() {
        for p in [2u64, 3, 5, 7] {
            for k in 0..p {
                let w = CycloNum::root_power(p, k as i64).unwrap();
                assert!(w.pow(p).unwrap().is_one(), "ρ^{k} to the {p} must be 1");
            }
        }
    }

    #[test]
    fn root_powers_sum_to_zero() {
        for p in [2u64, 3, 5, 7] {
            let mut sum = CycloNum::zero(p).unwrap();
            for k in 0..p {
                sum = sum
                    .add(&CycloNum::root_power(p, k as i64).unwrap())
                    .unwrap();
            }
            assert!(sum.is_zero(), "Σ ρ^k = 0 fails for p = {p}");
        }
    }

    #[test]
    fn p2_is_sign_arithmetic() {
        let minus_one = CycloNum::rho(2).unwrap();
        assert_eq!(minus_one, CycloNum::from_integer(2, -1).unwrap());
        assert!(minus_one.mul(&minus_one).unwrap().is_one());
    }

    #[test]
    fn mismatched_primes_rejected() {
        let a = CycloNum::one(3).unwrap();
        let b = CycloNum::one(5).unwrap();
        assert!(matches!(
            a.mul(&b),
            Err(Error::ModulusMismatch { left: 3, right: 5 })
        ));
    }

    #[test]
    fn inverse_round_trips() {
        for p in [2u64, 3, 5, 7] {
            let x = {
                let mut c = CycloNum::zero(p).unwrap();
                for (k, slot) in c.coeffs.iter_mut().enumerate() {
                    *slot = rat(2 * k as i64 + 1, k as i64 + 2);
                }
                c
            };
            let product = x.inv().unwrap().mul(&x).unwrap();
            assert!(product.is_one(), "x * x^-1 != 1 at p = {p}");
        }
        // ρ^{-1} = ρ^{p-1}
        let rho = CycloNum::rho(5).unwrap();
        assert_eq!(rho.inv().unwrap(), CycloNum::root_power(5, 4).unwrap());
        // division is multiplication by the inverse
        let x = cy(3, &[(3, 2), (-1, 7)]);
        let y = cy(3, &[(0, 1), (5, 4)]);
        assert_eq!(x.div(&y).unwrap().mul(&y).unwrap(), x);
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(matches!(
            CycloNum::zero(3).unwrap().inv(),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn display_is_readable() {
        let v = cy(3, &[(1, 1), (-2, 3)]);
        assert_eq!(v.to_string(), "1 - 2/3*rho");
        assert_eq!(CycloNum::zero(3).unwrap().to_string(), "0");
        assert_eq!(CycloNum::rho(3).unwrap().to_string(), "rho");
    }
}
