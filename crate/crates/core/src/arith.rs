//! Integer and rational arithmetic plus the classical number families.
//!
//! Stirling numbers of the first kind and Eulerian numbers are read from
//! process-wide triangles that grow on demand. The tables only ever gain rows,
//! and every row is a pure function of its index, so callers cannot observe
//! whether a value came from the cache.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{domain, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// `n!`, failing for negative `n`.
pub fn factorial(n: i64) -> Result<Integer> {
    if n < 0 {
        return Err(domain(format!("factorial of negative number {n}")));
    }
    Ok(fact(n as u64))
}

/// `n!` for unsigned `n`.
pub fn fact(n: u64) -> Integer {
    (2..=n).fold(Integer::one(), |acc, i| acc * i)
}

/// Binomial coefficient `C(n, r)` for any integer `n`.
///
/// For `n < 0` this is the generalized value `n(n-1)...(n-r+1)/r!`. For
/// `0 <= n < r` it is zero.
pub fn binomial(n: i64, r: i64) -> Result<Integer> {
    if r < 0 {
        return Err(domain(format!("binomial lower index {r} is negative")));
    }
    Ok(binom(n, r as u64))
}

pub(crate) fn binom(n: i64, r: u64) -> Integer {
    if n >= 0 && (n as u64) < r {
        return Integer::zero();
    }
    // Falling product divided step by step; each partial quotient is an integer.
    let mut acc = Integer::one();
    for i in 0..r {
        acc *= n - i as i64;
        acc /= i + 1;
    }
    acc
}

fn grow_triangle<F>(
    cell: &'static OnceLock<RwLock<Vec<Vec<Integer>>>>,
    n: usize,
    next_row: F,
) -> Vec<Integer>
where
    F: Fn(usize, &[Integer]) -> Vec<Integer>,
{
    let lock = cell.get_or_init(|| RwLock::new(Vec::new()));
    if let Some(row) = lock.read().expect("triangle lock poisoned").get(n) {
        return row.clone();
    }
    let mut rows = lock.write().expect("triangle lock poisoned");
    if rows.is_empty() {
        rows.push(vec![Integer::one()]);
    }
    while rows.len() <= n {
        let i = rows.len();
        let row = next_row(i, &rows[i - 1]);
        rows.push(row);
    }
    rows[n].clone()
}

static STIRLING1: OnceLock<RwLock<Vec<Vec<Integer>>>> = OnceLock::new();
static EULERIAN: OnceLock<RwLock<Vec<Vec<Integer>>>> = OnceLock::new();

/// Row `n` of the unsigned Stirling numbers of the first kind, `[n, 0..=n]`.
pub fn stirling1_row(n: usize) -> Vec<Integer> {
    grow_triangle(&STIRLING1, n, |i, prev| {
        // [i, r] = (i-1)[i-1, r] + [i-1, r-1]
        let mut row = vec![Integer::zero(); i + 1];
        for r in 0..=i {
            if r < i {
                row[r] += &prev[r] * (i - 1);
            }
            if r > 0 {
                row[r] += &prev[r - 1];
            }
        }
        row
    })
}

/// Unsigned Stirling number of the first kind `[n, r]`: permutations of `n`
/// elements with exactly `r` cycles.
///
/// Zero outside `0 <= r <= n`, so formulas may pass negative indices freely.
pub fn stirling1_unsigned(n: i64, r: i64) -> Integer {
    if n < 0 || r < 0 || r > n {
        return Integer::zero();
    }
    stirling1_row(n as usize)[r as usize].clone()
}

/// Row `m` of the Eulerian numbers, `A(m, 0..=max(m-1, 0))`.
pub fn eulerian_row(m: usize) -> Vec<Integer> {
    grow_triangle(&EULERIAN, m, |i, prev| {
        // A(i, j) = (j+1) A(i-1, j) + (i-j) A(i-1, j-1)
        (0..i)
            .map(|j| {
                let mut v = Integer::zero();
                if let Some(a) = prev.get(j) {
                    v += a * (j + 1);
                }
                if j > 0 {
                    if let Some(a) = prev.get(j - 1) {
                        v += a * (i - j);
                    }
                }
                v
            })
            .collect()
    })
}

/// Eulerian number `A(m, j)`: permutations of `{1..m}` with exactly `j` descents.
///
/// `A(0, 0) = 1`.
pub fn eulerian(m: usize, j: i64) -> Integer {
    if j < 0 {
        return Integer::zero();
    }
    eulerian_row(m)
        .get(j as usize)
        .cloned()
        .unwrap_or_else(Integer::zero)
}

/// Lah number `L(n, m) = n!/m! * C(n-1, m-1)`.
pub fn lah(n: i64, m: i64) -> Result<Integer> {
    if n < 1 || m < 1 {
        return Err(domain(format!("lah({n}, {m}) needs n, m >= 1")));
    }
    if m > n {
        return Ok(Integer::zero());
    }
    Ok(fact(n as u64) / fact(m as u64) * binom(n - 1, (m - 1) as u64))
}

/// `P(a, b; u)`: the sum over all `u`-subsets `x_1 < ... < x_u` of the integer
/// interval `[a, b]` of `x_1 * ... * x_u`, i.e. the elementary symmetric
/// polynomial of degree `u` evaluated at `a, a+1, ..., b`.
pub fn sym_range_product(a: i64, b: i64, u: usize) -> Integer {
    let mut e = vec![Integer::zero(); u + 1];
    e[0] = Integer::one();
    let mut x = a;
    while x <= b {
        for i in (1..=u).rev() {
            let term = &e[i - 1] * x;
            e[i] += term;
        }
        x += 1;
    }
    e.swap_remove(u)
}

/// The rational `p/q` for machine integers, handy in tests and tables.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}
