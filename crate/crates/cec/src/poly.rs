//! Dense univariate polynomials with arbitrary-precision nonnegative
//! integer coefficients.
//!
//! Coefficient `i` holds the number of covers of size `i`, so everything
//! downstream is exact counting: no negative coefficients, no floats.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul};

/// Polynomial over x with nonnegative arbitrary-precision coefficients.
///
/// The zero polynomial is the empty coefficient list; otherwise the
/// trailing coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<BigUint>,
}

impl Poly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Poly {
            coeffs: vec![BigUint::one()],
        }
    }

    /// The monomial x^k.
    pub fn x_pow(k: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); k + 1];
        coeffs[k] = BigUint::one();
        Poly { coeffs }
    }

    /// Builds a polynomial from dense coefficients (index = exponent),
    /// trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Convenience constructor from small dense coefficients.
    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest exponent with a nonzero coefficient, or `None` for zero.
    pub fn min_exp(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Coefficient of x^i (zero beyond the stored range).
    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Dense coefficient slice from exponent 0 through the degree.
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Poly::from_coeffs(coeffs)
    }

    /// Schoolbook product; degrees stay small at the scales this crate
    /// works at.
    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }

    /// Multiplies by x^k.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigUint::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Multiplies every coefficient by a constant.
    pub fn scale(&self, c: &BigUint) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// (a + x)^e expanded via the binomial theorem.
    pub fn binom_power(a: u64, e: usize) -> Poly {
        let a = BigUint::from(a);
        let coeffs = (0..=e)
            .map(|i| binomial(e as u64, i as u64) * a.pow((e - i) as u32))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Exact evaluation at a nonnegative integer point.
    pub fn eval(&self, x0: &BigUint) -> BigUint {
        let mut acc = BigUint::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0 + c;
        }
        acc
    }

    /// Value at x = 1, i.e. the total count.
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// True iff the coefficients over the nonzero support rise weakly to a
    /// peak and then fall weakly. An internal zero inside the support makes
    /// the answer false; the zero polynomial is unimodal by convention.
    pub fn is_unimodal(&self) -> bool {
        let Some(lo) = self.min_exp() else {
            return true;
        };
        let support = &self.coeffs[lo..];
        let mut i = 0;
        while i + 1 < support.len() && support[i] <= support[i + 1] {
            i += 1;
        }
        while i + 1 < support.len() && support[i] >= support[i + 1] {
            if support[i + 1].is_zero() {
                return false;
            }
            i += 1;
        }
        i + 1 == support.len()
    }

    /// True iff some coefficient strictly inside the nonzero support is
    /// zero. No such polynomial has been observed for any graph family;
    /// the scanner reports one as an anomaly.
    pub fn has_internal_zero(&self) -> bool {
        match self.min_exp() {
            None => false,
            Some(lo) => self.coeffs[lo..].iter().any(|c| c.is_zero()),
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{c}")?;
                    }
                    if e == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// JSON shape: decimal coefficient strings so arbitrary precision
/// survives transport, plus the redundant min_exp/degree markers.
#[derive(Serialize, Deserialize)]
struct PolyJson {
    coeffs: Vec<String>,
    min_exp: Option<usize>,
    degree: Option<usize>,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
            min_exp: self.min_exp(),
            degree: self.degree(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigUint>()
                    .map_err(|_| D::Error::custom(format!("bad coefficient {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// 2^e as a big integer.
pub fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}
