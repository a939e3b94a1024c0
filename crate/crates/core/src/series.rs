//! Truncated power series in two variables `x` and `s`.

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{domain, Error, Result};

/// Coefficients of `x^i s^j` for `0 <= i <= x_trunc`, `0 <= j <= s_trunc`.
///
/// Products drop every term beyond either bound, so results are exact modulo
/// the ideal `(x^{x_trunc+1}, s^{s_trunc+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    x_trunc: usize,
    s_trunc: usize,
    coeffs: Vec<Rational>,
}

impl BivariateSeries {
    pub fn zero(x_trunc: usize, s_trunc: usize) -> Self {
        Self {
            x_trunc,
            s_trunc,
            coeffs: vec![Rational::zero(); (x_trunc + 1) * (s_trunc + 1)],
        }
    }

    pub fn one(x_trunc: usize, s_trunc: usize) -> Self {
        let mut f = Self::zero(x_trunc, s_trunc);
        f.coeffs[0] = Rational::one();
        f
    }

    /// `sum_{k=1}^{x_trunc} (x^k / k) * (1 + s + ... + s^{k-1})`, truncated in `s`.
    ///
    /// Equal to `(log(1/(1-x)) - log(1/(1-sx))) / (1-s)`.
    pub fn log_term(x_trunc: usize, s_trunc: usize) -> Self {
        let mut f = Self::zero(x_trunc, s_trunc);
        for k in 1..=x_trunc {
            let c = Rational::new(1.into(), k.into());
            for j in 0..k.min(s_trunc + 1) {
                *f.at_mut(k, j) = c.clone();
            }
        }
        f
    }

    pub fn x_trunc(&self) -> usize {
        self.x_trunc
    }

    pub fn s_trunc(&self) -> usize {
        self.s_trunc
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        i * (self.s_trunc + 1) + j
    }

    fn at_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        let k = self.idx(i, j);
        &mut self.coeffs[k]
    }

    /// `[x^i s^j]`. Indices past the truncation are an error, never an implicit zero.
    pub fn coeff(&self, i: usize, j: usize) -> Result<&Rational> {
        if i > self.x_trunc || j > self.s_trunc {
            return Err(Error::Truncation {
                i,
                j,
                x_trunc: self.x_trunc,
                s_trunc: self.s_trunc,
            });
        }
        Ok(&self.coeffs[self.idx(i, j)])
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) -> Result<()> {
        self.coeff(i, j)?;
        *self.at_mut(i, j) = value;
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            x_trunc: self.x_trunc,
            s_trunc: self.s_trunc,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if (self.x_trunc, self.s_trunc) != (other.x_trunc, other.s_trunc) {
            return Err(domain(format!(
                "series truncations differ: ({}, {}) vs ({}, {})",
                self.x_trunc, self.s_trunc, other.x_trunc, other.s_trunc
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(Self {
            x_trunc: self.x_trunc,
            s_trunc: self.s_trunc,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Truncated product. Both operands must share truncation bounds.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = Self::zero(self.x_trunc, self.s_trunc);
        let rhs: Vec<(usize, usize, &Rational)> = (0..=other.x_trunc)
            .flat_map(|i| (0..=other.s_trunc).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, &other.coeffs[other.idx(i, j)]))
            .filter(|(_, _, c)| !c.is_zero())
            .collect();
        for i1 in 0..=self.x_trunc {
            for j1 in 0..=self.s_trunc {
                let a = &self.coeffs[self.idx(i1, j1)];
                if a.is_zero() {
                    continue;
                }
                for &(i2, j2, b) in &rhs {
                    if i1 + i2 <= self.x_trunc && j1 + j2 <= self.s_trunc {
                        *out.at_mut(i1 + i2, j1 + j2) += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self^m` within the truncation; `self^0 = 1`.
    pub fn pow(&self, m: usize) -> Self {
        let mut result = Self::one(self.x_trunc, self.s_trunc);
        let mut base = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same shape");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same shape");
            }
        }
        result
    }
}
