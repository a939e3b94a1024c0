//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{binom, fact, Integer, Rational};
use crate::error::{domain, Result};

/// A polynomial stored densely by ascending degree.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has an
/// empty coefficient vector and `degree() == None`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * t^d`.
    pub fn monomial(c: Rational, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending-degree coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<Integer>,
    {
        Self::from_coeffs(
            coeffs
                .into_iter()
                .map(|c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    /// The linear polynomial `slope * t + intercept`.
    pub fn linear(slope: Rational, intercept: Rational) -> Self {
        Self::from_coeffs(vec![intercept, slope])
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Ascending-degree coefficients, without trailing zeros.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^d`; zero past the degree.
    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Exact value at a rational point (Horner).
    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_int(&self, t: &Integer) -> Rational {
        self.eval(&Rational::from_integer(t.clone()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Drops every term of degree greater than `order`.
    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(order + 1).cloned().collect())
    }

    /// `p(-t)`.
    pub fn reflect(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| if d % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// The lowest common denominator of all coefficients.
    pub fn common_denominator(&self) -> Integer {
        self.coeffs.iter().fold(Integer::one(), |acc, c| {
            num_integer::Integer::lcm(&acc, c.denom())
        })
    }

    /// Truncated product, computing only the terms up to `order`.
    pub fn mul_truncated(&self, other: &Self, order: usize) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(order + 1);
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Renders with variable name `var`, e.g. `1 + 7/3 t + 2 t^2`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let power = match d {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{d}"),
            };
            if d == 0 {
                out.push_str(&magnitude.to_string());
            } else if magnitude.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{magnitude} {power}"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let order = self.coeffs.len() + rhs.coeffs.len() - 2;
        self.mul_truncated(rhs, order)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}

/// The polynomial in `t` equal to `C(c*t + shift, d)`, that is
/// `(1/d!) * prod_{r=0}^{d-1} (c*t + shift - r)`.
pub fn t_binomial(c: i64, shift: i64, d: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    for r in 0..d as i64 {
        let factor = Polynomial::linear(
            Rational::from_integer(c.into()),
            Rational::from_integer((shift - r).into()),
        );
        acc = &acc * &factor;
    }
    acc.scale(&Rational::new(Integer::one(), fact(d as u64)))
}

/// The expansion of `1/(1-x)^e` through degree `order`: `sum_i C(e-1+i, e-1) x^i`.
pub fn inverse_one_minus_x_pow(e: usize, order: usize) -> Polynomial {
    if e == 0 {
        return Polynomial::one();
    }
    Polynomial::from_integers((0..=order).map(|i| binom((e - 1 + i) as i64, (e - 1) as u64)))
}

/// The unique polynomial of degree below `points.len()` through the given
/// `(node, value)` pairs.
pub fn lagrange_interpolate(points: &[(Rational, Rational)]) -> Result<Polynomial> {
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(domain(format!("repeated interpolation node {xi}")));
        }
    }
    let mut result = Polynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Polynomial::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = &basis * &Polynomial::linear(Rational::one(), -xj);
            denom *= xi - xj;
        }
        result = &result + &basis.scale(&(yi / denom));
    }
    Ok(result)
}
