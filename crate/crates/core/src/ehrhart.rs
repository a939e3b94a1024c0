//! Ehrhart polynomials of hypersimplices.
//!
//! `E(k,n; t)` counts the integer points of `t * Δ(k,n)`, i.e. the vectors
//! `y in {0..t}^n` with `y_1 + ... + y_n = k t`. Four routes compute it:
//!
//! * [`EhrhartMethod::Katzman`]: `sum_{j<k} (-1)^j C(n,j) C((k-j)t + n-1-j, n-1)`
//!   expanded as a polynomial in `t`.
//! * [`EhrhartMethod::Stirling`]: each coefficient from the double sum over
//!   Stirling numbers of the first kind.
//! * [`EhrhartMethod::Wlah`]: each coefficient as
//!   `(1/(n-1)!) sum_l W(l, n, m+1) A(m, k-l-1)`, a sum of positive terms.
//! * [`EhrhartMethod::Oracle`]: brute-force lattice counts at `t = 0..n-1`,
//!   interpolated exactly.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::arith::{binom, eulerian, fact, stirling1_unsigned, Integer, Rational};
use crate::error::{domain, Error, Result};
use crate::poly::{inverse_one_minus_x_pow, lagrange_interpolate, t_binomial, Polynomial};
use crate::wlah::{WlahMethod, WlahTable};

/// Default bound on `(t+1)^n` for direct lattice enumeration.
pub const DEFAULT_DIRECT_CAP: u128 = 100_000_000;

/// The hypersimplex `Δ(k,n) = { x in [0,1]^n : sum x_i = k }`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HypersimplexParams {
    k: usize,
    n: usize,
}

impl HypersimplexParams {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(domain("hypersimplex needs n >= 1"));
        }
        if k > n {
            return Err(domain(format!(
                "hypersimplex needs 0 <= k <= n (got k={k}, n={n})"
            )));
        }
        Ok(Self { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `k = 0` or `k = n`: the polytope is a single lattice point.
    pub fn is_degenerate(&self) -> bool {
        self.k == 0 || self.k == self.n
    }
}

fn nondegenerate(k: usize, n: usize) -> Result<HypersimplexParams> {
    let p = HypersimplexParams::new(k, n)?;
    if p.is_degenerate() {
        return Err(domain(format!(
            "formula routes need 1 <= k <= n-1 (got k={k}, n={n})"
        )));
    }
    Ok(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EhrhartMethod {
    Katzman,
    Stirling,
    Wlah,
    Oracle,
}

impl EhrhartMethod {
    pub const ALL: [EhrhartMethod; 4] = [
        EhrhartMethod::Katzman,
        EhrhartMethod::Stirling,
        EhrhartMethod::Wlah,
        EhrhartMethod::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EhrhartMethod::Katzman => "katzman",
            EhrhartMethod::Stirling => "stirling",
            EhrhartMethod::Wlah => "wlah",
            EhrhartMethod::Oracle => "oracle",
        }
    }
}

impl fmt::Display for EhrhartMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EhrhartMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EhrhartMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| domain(format!("unknown Ehrhart method {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartResult {
    pub params: HypersimplexParams,
    pub poly: Polynomial,
    pub method: EhrhartMethod,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeStrategy {
    /// Pruned depth-first search over `{0..t}^n`.
    Direct,
    /// `[x^{kt}] (1 + x + ... + x^t)^n` by repeated convolution.
    Coeff,
}

/// Number of integer points in `t * Δ(k,n)`.
pub fn lattice_point_count(
    k: usize,
    n: usize,
    t: usize,
    strategy: LatticeStrategy,
) -> Result<Integer> {
    lattice_point_count_with_cap(k, n, t, strategy, DEFAULT_DIRECT_CAP)
}

pub fn lattice_point_count_with_cap(
    k: usize,
    n: usize,
    t: usize,
    strategy: LatticeStrategy,
    direct_cap: u128,
) -> Result<Integer> {
    HypersimplexParams::new(k, n)?;
    let target = k * t;
    match strategy {
        LatticeStrategy::Direct => {
            let space = (t as u128 + 1).checked_pow(n as u32).unwrap_or(u128::MAX);
            if space > direct_cap {
                return Err(Error::Capacity {
                    what: "direct lattice enumeration ((t+1)^n)",
                    requested: space,
                    cap: direct_cap,
                });
            }
            Ok(Integer::from(count_direct(n, t, target)))
        }
        LatticeStrategy::Coeff => {
            let mut acc = vec![Integer::one()];
            for _ in 0..n {
                let mut next = vec![Integer::zero(); (acc.len() + t).min(target + 1)];
                for (i, a) in acc.iter().enumerate() {
                    for d in 0..=t {
                        if let Some(slot) = next.get_mut(i + d) {
                            *slot += a;
                        }
                    }
                }
                acc = next;
            }
            Ok(acc.get(target).cloned().unwrap_or_else(Integer::zero))
        }
    }
}

// Counts y in {0..t}^slots with sum == remaining.
fn count_direct(slots: usize, t: usize, remaining: usize) -> u64 {
    if slots == 0 {
        return u64::from(remaining == 0);
    }
    if remaining > slots * t {
        return 0;
    }
    if slots == 1 {
        return 1;
    }
    (0..=t.min(remaining))
        .map(|y| count_direct(slots - 1, t, remaining - y))
        .sum()
}

/// The alternating binomial sum, expanded in `t`.
pub fn ehrhart_katzman(k: usize, n: usize) -> Result<EhrhartResult> {
    let params = nondegenerate(k, n)?;
    let (k, n) = (k as i64, n as i64);
    let poly = (0..k)
        .map(|j| {
            let term = t_binomial(k - j, n - 1 - j, (n - 1) as usize);
            let c = Rational::from_integer(binom(n, j as u64));
            term.scale(&if j % 2 == 0 { c } else { -c })
        })
        .sum();
    Ok(EhrhartResult {
        params,
        poly,
        method: EhrhartMethod::Katzman,
    })
}

/// Exact interpolation through brute-force lattice counts at `t = 0..n-1`.
pub fn ehrhart_interpolated(k: usize, n: usize) -> Result<EhrhartResult> {
    ehrhart_interpolated_with_cap(k, n, DEFAULT_DIRECT_CAP)
}

pub fn ehrhart_interpolated_with_cap(
    k: usize,
    n: usize,
    direct_cap: u128,
) -> Result<EhrhartResult> {
    let params = nondegenerate(k, n)?;
    let points = (0..n)
        .map(|t| {
            let y = lattice_point_count_with_cap(k, n, t, LatticeStrategy::Direct, direct_cap)?;
            Ok((Rational::from_integer(t.into()), Rational::from_integer(y)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EhrhartResult {
        params,
        poly: lagrange_interpolate(&points)?,
        method: EhrhartMethod::Oracle,
    })
}

/// `f(j,n,m) = sum_{i=0}^{n-m-1} (-1)^i [j, j-i] [n-j, m+1+i-j]`.
pub fn f_coefficient(j: usize, n: usize, m: usize) -> Integer {
    let (j, n, m) = (j as i64, n as i64, m as i64);
    (0..n - m).fold(Integer::zero(), |acc, i| {
        let term = stirling1_unsigned(j, j - i) * stirling1_unsigned(n - j, m + 1 + i - j);
        if i % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

fn check_m(n: usize, m: usize) -> Result<()> {
    if m >= n {
        return Err(domain(format!(
            "coefficient index m={m} must be below n={n}"
        )));
    }
    Ok(())
}

/// `[t^m] E(k,n; t) = (1/(n-1)!) sum_{j<k} (-1)^j C(n,j) (k-j)^m f(j,n,m)`.
pub fn ehrhart_coefficient_stirling(k: usize, n: usize, m: usize) -> Result<Rational> {
    nondegenerate(k, n)?;
    check_m(n, m)?;
    let mut sum = Integer::zero();
    for j in 0..k {
        let term =
            binom(n as i64, j as u64) * Integer::from(k - j).pow(m as u32) * f_coefficient(j, n, m);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(Rational::new(sum, fact(n as u64 - 1)))
}

fn coefficient_from_table(k: usize, n: usize, m: usize, table: &WlahTable) -> Result<Rational> {
    let sum = (0..k).fold(Integer::zero(), |acc, l| {
        acc + table.value(l as i64, m + 1) * eulerian(m, k as i64 - l as i64 - 1)
    });
    let c = Rational::new(sum, fact(n as u64 - 1));
    if !c.is_positive() {
        return Err(Error::Consistency(format!(
            "coefficient of t^{m} in E({k},{n}) is {c}, expected positive"
        )));
    }
    Ok(c)
}

/// `[t^m] E(k,n; t) = (1/(n-1)!) sum_{l<k} W(l, n, m+1) A(m, k-l-1)`, always positive.
pub fn ehrhart_coefficient_wlah(k: usize, n: usize, m: usize) -> Result<Rational> {
    nondegenerate(k, n)?;
    check_m(n, m)?;
    coefficient_from_table(k, n, m, &WlahTable::build(n, WlahMethod::RecA)?)
}

/// `C(n,m; x) = F(n,m; x) / (1-x)^{m+1}` with
/// `F(n,m; x) = sum_j (-1)^j C(n,j) f(j,n,m) x^j`.
///
/// The quotient is a polynomial of degree at most `n-m-1` whose coefficients are
/// `W(l, n, m+1)`. The product is formed through order `2n`; any nonzero term
/// past degree `n-m-1` is reported as a consistency error.
pub fn cnm_polynomial(n: usize, m: usize) -> Result<Polynomial> {
    if n < 1 || m + 1 > n {
        return Err(domain(format!(
            "C(n,m) needs 1 <= m+1 <= n (got n={n}, m={m})"
        )));
    }
    let f_poly = Polynomial::from_integers((0..=n).map(|j| {
        let c = binom(n as i64, j as u64) * f_coefficient(j, n, m);
        if j % 2 == 0 {
            c
        } else {
            -c
        }
    }));
    let order = 2 * n;
    let product = f_poly.mul_truncated(&inverse_one_minus_x_pow(m + 1, order), order);
    let top = n - m - 1;
    if let Some(d) = product.degree().filter(|&d| d > top) {
        return Err(Error::Consistency(format!(
            "C({n},{m}) has nonzero x^{d} term beyond degree {top}"
        )));
    }
    Ok(product)
}

/// `E(k,n; t)` by the chosen route. The single-point cases `k = 0` and `k = n`
/// give the constant `1` for every method.
pub fn ehrhart_polynomial(k: usize, n: usize, method: EhrhartMethod) -> Result<EhrhartResult> {
    let params = HypersimplexParams::new(k, n)?;
    if params.is_degenerate() {
        return Ok(EhrhartResult {
            params,
            poly: Polynomial::one(),
            method,
        });
    }
    match method {
        EhrhartMethod::Katzman => ehrhart_katzman(k, n),
        EhrhartMethod::Oracle => ehrhart_interpolated(k, n),
        EhrhartMethod::Stirling => {
            let coeffs = (0..n)
                .map(|m| ehrhart_coefficient_stirling(k, n, m))
                .collect::<Result<Vec<_>>>()?;
            Ok(EhrhartResult {
                params,
                poly: Polynomial::from_coeffs(coeffs),
                method,
            })
        }
        EhrhartMethod::Wlah => {
            let table = WlahTable::build(n, WlahMethod::RecA)?;
            let coeffs = (0..n)
                .map(|m| coefficient_from_table(k, n, m, &table))
                .collect::<Result<Vec<_>>>()?;
            Ok(EhrhartResult {
                params,
                poly: Polynomial::from_coeffs(coeffs),
                method,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{binomial, lah, ratio};

    fn e24() -> Polynomial {
        Polynomial::from_coeffs(vec![ratio(1, 1), ratio(7, 3), ratio(2, 1), ratio(2, 3)])
    }

    // Plain brute force over {0..t}^n, no pruning.
    fn brute_count(k: usize, n: usize, t: usize) -> u64 {
        let mut count = 0;
        let mut y = vec![0usize; n];
        loop {
            if y.iter().sum::<usize>() == k * t {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                if y[i] < t {
                    y[i] += 1;
                    break;
                }
                y[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn params_validation() {
        assert!(HypersimplexParams::new(0, 0).is_err());
        assert!(HypersimplexParams::new(5, 4).is_err());
        assert!(HypersimplexParams::new(0, 4).unwrap().is_degenerate());
        assert!(HypersimplexParams::new(4, 4).unwrap().is_degenerate());
        assert!(!HypersimplexParams::new(2, 4).unwrap().is_degenerate());
    }

    #[test]
    fn lattice_counts() {
        for strategy in [LatticeStrategy::Direct, LatticeStrategy::Coeff] {
            assert_eq!(
                lattice_point_count(2, 4, 2, strategy).unwrap(),
                Integer::from(19)
            );
            for n in 1..7 {
                for k in 0..=n {
                    assert_eq!(
                        lattice_point_count(k, n, 0, strategy).unwrap(),
                        Integer::one()
                    );
                    assert_eq!(
                        lattice_point_count(k, n, 1, strategy).unwrap(),
                        binomial(n as i64, k as i64).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn lattice_strategies_match_brute_force() {
        for n in 1..=5 {
            for k in 0..=n {
                for t in 0..=4 {
                    let b = Integer::from(brute_count(k, n, t));
                    assert_eq!(
                        lattice_point_count(k, n, t, LatticeStrategy::Direct).unwrap(),
                        b
                    );
                    assert_eq!(
                        lattice_point_count(k, n, t, LatticeStrategy::Coeff).unwrap(),
                        b
                    );
                }
            }
        }
    }

    #[test]
    fn direct_capacity() {
        assert!(matches!(
            lattice_point_count(5, 10, 9, LatticeStrategy::Direct),
            Err(Error::Capacity { .. })
        ));
        assert!(lattice_point_count(5, 10, 9, LatticeStrategy::Coeff).is_ok());
        assert!(lattice_point_count_with_cap(1, 3, 2, LatticeStrategy::Direct, 26).is_err());
        assert!(lattice_point_count_with_cap(1, 3, 2, LatticeStrategy::Direct, 27).is_ok());
    }

    #[test]
    fn katzman_examples() {
        assert_eq!(ehrhart_katzman(2, 4).unwrap().poly, e24());
        for n in 2..8 {
            assert_eq!(
                ehrhart_katzman(1, n).unwrap().poly,
                t_binomial(1, n as i64 - 1, n - 1)
            );
            for k in 1..n {
                let e = ehrhart_katzman(k, n).unwrap().poly;
                assert_eq!(
                    e.eval_int(&Integer::one()),
                    Rational::from_integer(binomial(n as i64, k as i64).unwrap())
                );
            }
        }
        assert!(ehrhart_katzman(0, 4).is_err());
        assert!(ehrhart_katzman(4, 4).is_err());
    }

    #[test]
    fn interpolation_examples() {
        assert_eq!(
            ehrhart_interpolated(1, 3).unwrap().poly,
            Polynomial::from_coeffs(vec![ratio(1, 1), ratio(3, 2), ratio(1, 2)])
        );
        assert_eq!(ehrhart_interpolated(2, 4).unwrap().poly, e24());
        for n in 2..7 {
            for k in 1..n {
                assert_eq!(
                    ehrhart_interpolated(k, n).unwrap().poly,
                    ehrhart_interpolated(n - k, n).unwrap().poly
                );
            }
        }
    }

    #[test]
    fn f_coefficient_examples() {
        for n in 1..8usize {
            for m in 0..n {
                assert_eq!(
                    f_coefficient(0, n, m),
                    stirling1_unsigned(n as i64, m as i64 + 1)
                );
            }
            for j in 0..=n {
                assert_eq!(f_coefficient(j, n, n - 1), Integer::one());
            }
        }
        assert_eq!(f_coefficient(1, 4, 2), Integer::from(3));
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(ehrhart_coefficient_stirling(2, 4, 3).unwrap(), ratio(2, 3));
        assert_eq!(ehrhart_coefficient_stirling(2, 4, 1).unwrap(), ratio(7, 3));
        assert_eq!(ehrhart_coefficient_wlah(2, 4, 2).unwrap(), ratio(2, 1));
        for n in 2..9 {
            for k in 1..n {
                assert_eq!(ehrhart_coefficient_stirling(k, n, 0).unwrap(), ratio(1, 1));
                assert_eq!(ehrhart_coefficient_wlah(k, n, 0).unwrap(), ratio(1, 1));
                assert_eq!(
                    ehrhart_coefficient_wlah(k, n, n - 1).unwrap(),
                    Rational::new(eulerian(n - 1, k as i64 - 1), fact(n as u64 - 1))
                );
            }
        }
        assert!(ehrhart_coefficient_stirling(2, 4, 4).is_err());
        assert!(ehrhart_coefficient_wlah(0, 4, 1).is_err());
    }

    #[test]
    fn cnm_examples() {
        let table = crate::wlah::wlah_table(5).unwrap();
        for m in 1..=5 {
            let c = cnm_polynomial(5, m - 1).unwrap();
            let expected = Polynomial::from_integers(table.row(m).iter().cloned());
            assert_eq!(c, expected, "m={m}");
        }
        for n in 1..9usize {
            assert_eq!(cnm_polynomial(n, n - 1).unwrap(), Polynomial::one());
            for m in 0..n {
                assert_eq!(
                    cnm_polynomial(n, m).unwrap().eval_int(&Integer::one()),
                    Rational::from_integer(lah(n as i64, m as i64 + 1).unwrap())
                );
            }
        }
        assert!(cnm_polynomial(3, 3).is_err());
    }

    #[test]
    fn dispatcher() {
        for method in EhrhartMethod::ALL {
            assert_eq!(
                ehrhart_polynomial(2, 4, method).unwrap().poly,
                e24(),
                "{method}"
            );
            assert_eq!(
                ehrhart_polynomial(4, 4, method).unwrap().poly,
                Polynomial::one()
            );
            assert_eq!(
                ehrhart_polynomial(0, 4, method).unwrap().poly,
                Polynomial::one()
            );
            assert_eq!(
                ehrhart_polynomial(0, 1, method).unwrap().poly,
                Polynomial::one()
            );
            assert!(ehrhart_polynomial(5, 4, method).is_err());
            assert_eq!(method.name().parse::<EhrhartMethod>().unwrap(), method);
        }
    }
}
