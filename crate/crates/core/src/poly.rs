//! Exact univariate polynomials with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial stored by ascending degree with no trailing zero
/// coefficients; the zero polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// `x - a`.
    pub fn linear(a: i64) -> Self {
        Poly::from_integers(&[-a, 1])
    }

    /// The falling factorial `(x)_i = x(x−1)⋯(x−i+1)`.
    pub fn falling_factorial(i: usize) -> Self {
        (0..i as i64).fold(Poly::one(), |acc, j| &acc * &Poly::linear(j))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, k: i64) -> BigRational {
        self.eval(&BigRational::from_integer(k.into()))
    }

    /// Integer value at `k`, or `None` if the value is not an integer.
    pub fn eval_integer(&self, k: i64) -> Option<BigInt> {
        let v = self.eval_int(k);
        v.is_integer().then(|| v.to_integer())
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Coefficients as reduced `"num/den"` strings, ascending degree.
    pub fn to_fraction_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }

    /// Parse coefficients written as `"num/den"` or plain integers.
    pub fn from_fraction_strings<S: AsRef<str>>(items: &[S]) -> Result<Poly> {
        let coeffs = items
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Format(format!("invalid rational coefficient {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;

            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |acc, p| &acc + &p)
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |acc, p| &acc * &p)
    }
}

/// Descending-degree monomial rendering, e.g. `x^6-8x^5+34x`, with
/// non-integer coefficients parenthesized as in `(1/2)x^2-(1/2)x`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let monomial = match i {
                0 => String::new(),
                1 => "x".to_owned(),
                _ => format!("x^{i}"),
            };
            if mag.is_integer() {
                if !mag.is_one() || i == 0 {
                    write!(f, "{}", mag.numer())?;
                }
            } else if i == 0 {
                write!(f, "{}/{}", mag.numer(), mag.denom())?;
            } else {
                write!(f, "({}/{})", mag.numer(), mag.denom())?;
            }
            f.write_str(&monomial)?;
        }
        Ok(())
    }
}
