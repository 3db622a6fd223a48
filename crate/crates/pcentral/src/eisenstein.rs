//! The Eisenstein integers Z\[ρ\], ρ a primitive cube root of unity.
//!
//! Elements are `a + b·ρ` with arbitrary-precision integer components and
//! the reduction `ρ² = −1 − ρ`. The norm is `a² − ab + b²`, which is
//! non-negative and multiplicative; the six units are ±1, ±ρ, ±ρ².

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::cyclo::CycloNum;
use crate::error::{Error, Result};

/// An Eisenstein integer `a + b·ρ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EisensteinInt {
    a: BigInt,
    b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    /// The root ρ itself.
    pub fn rho() -> Self {
        Self::new(0, 1)
    }

    /// ρ² = −1 − ρ.
    pub fn rho_squared() -> Self {
        Self::new(-1, -1)
    }

    /// The six units of Z\[ρ\].
    pub fn units() -> [Self; 6] {
        [
            Self::new(1, 0),
            Self::new(-1, 0),
            Self::rho(),
            Self::rho().neg(),
            Self::rho_squared(),
            Self::rho_squared().neg(),
        ]
    }

    pub fn component_a(&self) -> &BigInt {
        &self.a
    }

    pub fn component_b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.a + &other.a, &self.b + &other.b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.a - &other.a, &self.b - &other.b)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.a, -&self.b)
    }

    /// `(a+bρ)(c+dρ) = (ac − bd) + (ad + bc − bd)ρ`.
    pub fn mul(&self, other: &Self) -> Self {
        let bd = &self.b * &other.b;
        Self::new(
            &self.a * &other.a - &bd,
            &self.a * &other.b + &self.b * &other.a - &bd,
        )
    }

    pub fn pow(&self, exp: u64) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// `a² − ab + b²`; zero exactly on the zero element.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// The ring embedding Z\[ρ\] → Q(ρ) at p = 3.
    pub fn to_cyclo(&self) -> CycloNum {
        CycloNum::from_coeffs(
            3,
            vec![
                BigRational::from_integer(self.a.clone()),
                BigRational::from_integer(self.b.clone()),
            ],
        )
        .expect("p = 3 is a valid modulus")
    }

    /// All points of norm at most `bound`, sorted by `(a, b)`.
    pub fn points_with_norm_at_most(bound: u64) -> Vec<Self> {
        // norm = (a − b/2)² + 3b²/4, so |a|, |b| ≤ sqrt(4·bound/3)
        let limit = ((4.0 * bound as f64 / 3.0).sqrt().ceil()) as i64 + 1;
        let bound = BigInt::from(bound);
        let mut points = Vec::new();
        for a in -limit..=limit {
            for b in -limit..=limit {
                let candidate = Self::new(a, b);
                if candidate.norm() <= bound {
                    points.push(candidate);
                }
            }
        }
        points
    }
}

/// Parses the literal form `a+b*r` with `r` standing for ρ: `"5"`,
/// `"-3"`, `"2-1*r"`, `"-4*r"`. Whitespace-insensitive; at most one plain
/// integer part and one `*r` part.
impl FromStr for EisensteinInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Format("empty Eisenstein literal".into()));
        }
        // Split into signed terms at '+'/'-' that are not leading signs.
        let mut terms: Vec<String> = Vec::new();
        let mut current = String::new();
        for (idx, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && idx > 0 {
                terms.push(std::mem::take(&mut current));
            }
            current.push(ch);
        }
        terms.push(current);

        let mut plain: Option<BigInt> = None;
        let mut rho_part: Option<BigInt> = None;
        for term in &terms {
            let body = term.trim_start_matches('+');
            if let Some(coeff) = body.strip_suffix("*r") {
                let value = BigInt::from_str(coeff).map_err(|_| {
                    Error::Format(format!("bad rho coefficient {coeff:?} in {s:?}"))
                })?;
                if rho_part.replace(value).is_some() {
                    return Err(Error::Format(format!("duplicate rho term in {s:?}")));
                }
            } else {
                let value = BigInt::from_str(body)
                    .map_err(|_| Error::Format(format!("bad integer part {body:?} in {s:?}")))?;
                if plain.replace(value).is_some() {
                    return Err(Error::Format(format!("duplicate integer term in {s:?}")));
                }
            }
        }
        Ok(Self {
            a: plain.unwrap_or_else(BigInt::zero),
            b: rho_part.unwrap_or_else(BigInt::zero),
        })
    }
}

impl std::fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut wrote = false;
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            wrote = true;
        }
        if !self.b.is_zero() {
            if wrote && self.b.is_positive() {
                write!(f, "+")?;
            }
            write!(f, "{}*r", self.b)?;
        }
        Ok(())
    }
}
