//! Runs every identity suite over a finite range and reports pass/fail.

use std::fmt::Write as _;

use hypersimplex::arith::{eulerian_row, fact};
use hypersimplex::ehrhart::{ehrhart_interpolated, lattice_point_count};
use hypersimplex::poly::inverse_one_minus_x_pow;
use hypersimplex::wlah::{WlahConfig, WlahTable, DEFAULT_ENUM_CAP};
use hypersimplex::{
    cnm_polynomial, ehrhart_polynomial, eulerian, lah, stirling1_unsigned, EhrhartMethod, Integer,
    LatticeStrategy, Polynomial, Rational, WlahMethod,
};
use num_traits::{One, Signed, Zero};

use crate::render::{render_table, Format};

/// Perturbs one weighted Lah value so the failure path can be exercised.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InjectedFault {
    pub method: WlahMethod,
    pub l: usize,
    pub n: usize,
    pub m: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscheckConfig {
    pub max_n: usize,
    pub oracle_max_n: usize,
    pub enum_cap: usize,
    pub fault: Option<InjectedFault>,
}

impl Default for CrosscheckConfig {
    fn default() -> Self {
        Self {
            max_n: 8,
            oracle_max_n: 8,
            enum_cap: DEFAULT_ENUM_CAP,
            fault: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: u64,
    /// Total number of failed checks.
    pub failures: u64,
    /// The first failing case, with its tuple.
    pub first_failure: Option<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checks: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub suites: Vec<SuiteResult>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            if s.passed() {
                writeln!(out, "PASS {:<22} checks={}", s.name, s.checks).unwrap();
            } else {
                writeln!(
                    out,
                    "FAIL {:<22} checks={} failures={} first: {}",
                    s.name,
                    s.checks,
                    s.failures,
                    s.first_failure.as_deref().unwrap_or("")
                )
                .unwrap();
            }
        }
        let failed = self.suites.iter().filter(|s| !s.passed()).count();
        if failed == 0 {
            writeln!(out, "all {} suites passed", self.suites.len()).unwrap();
        } else {
            writeln!(out, "{failed} of {} suites failed", self.suites.len()).unwrap();
        }
        out
    }
}

/// Error raised when a suite cannot even be evaluated (bad bounds, capacity).
#[derive(Debug, thiserror::Error)]
pub enum CrosscheckError {
    #[error("crosscheck needs max_n >= 2 (got {0})")]
    Bounds(usize),
    #[error(transparent)]
    Library(#[from] hypersimplex::Error),
}

fn q(v: Integer) -> Rational {
    Rational::from_integer(v)
}

pub fn run_crosscheck(config: &CrosscheckConfig) -> Result<CrosscheckReport, CrosscheckError> {
    if config.max_n < 2 {
        return Err(CrosscheckError::Bounds(config.max_n));
    }
    let max_n = config.max_n;
    let enum_max = max_n.min(config.enum_cap);
    let oracle_max = max_n.min(config.oracle_max_n);
    let wcfg = WlahConfig {
        enum_cap: config.enum_cap,
    };

    let mut tables: Vec<(usize, Vec<(WlahMethod, WlahTable)>)> = Vec::new();
    for n in 1..=max_n {
        let mut by_method = Vec::new();
        for method in WlahMethod::ALL {
            if method == WlahMethod::Enum && n > enum_max {
                continue;
            }
            by_method.push((method, WlahTable::build_with_config(n, method, &wcfg)?));
        }
        tables.push((n, by_method));
    }
    let value = |method: WlahMethod, table: &WlahTable, l: usize, m: usize| -> Integer {
        let mut v = table.get(m, l).cloned().unwrap_or_else(Integer::zero);
        if config.fault
            == Some(InjectedFault {
                method,
                l,
                n: table.n(),
                m,
            })
        {
            v += 1;
        }
        v
    };

    let mut suites = Vec::new();

    let mut s = SuiteResult::new("wlah-methods");
    for (n, by_method) in &tables {
        let (ref_method, reference) = by_method
            .iter()
            .find(|(m, _)| *m == WlahMethod::RecA)
            .expect("recurrence table always built");
        for m in 1..=*n {
            for l in 0..=n - m {
                let expected = value(*ref_method, reference, l, m);
                for (method, t) in by_method {
                    let got = value(*method, t, l, m);
                    s.check(got == expected, || {
                        format!("(l={l}, n={n}, m={m}): {method}={got}, {ref_method}={expected}")
                    });
                }
            }
        }
    }
    suites.push(s);

    let mut sym = SuiteResult::new("wlah-symmetry");
    let mut stir = SuiteResult::new("wlah-stirling");
    let mut rows = SuiteResult::new("wlah-lah-row-sum");
    let mut support = SuiteResult::new("wlah-support");
    for (n, by_method) in &tables {
        let n = *n;
        let (method, t) = &by_method[0];
        for m in 1..=n {
            let w = |l: usize| value(*method, t, l, m);
            for l in 0..=n - m {
                sym.check(w(l) == w(n - m - l), || format!("(l={l}, n={n}, m={m})"));
                support.check(w(l).is_positive(), || format!("(l={l}, n={n}, m={m})"));
            }
            support.check(t.get(m, n - m + 1).is_none(), || {
                format!("(l={}, n={n}, m={m})", n - m + 1)
            });
            stir.check(w(0) == stirling1_unsigned(n as i64, m as i64), || {
                format!("(l=0, n={n}, m={m})")
            });
            let total: Integer = (0..=n - m).map(w).sum();
            rows.check(total == lah(n as i64, m as i64)?, || {
                format!("(n={n}, m={m})")
            });
        }
    }
    suites.extend([sym, stir, rows, support]);

    let mut s = SuiteResult::new("cnm-polynomial");
    for (n, by_method) in &tables {
        let n = *n;
        let (method, t) = &by_method[0];
        for m in 0..n {
            let c = cnm_polynomial(n, m)?;
            for l in 0..=n - m - 1 {
                let w = value(*method, t, l, m + 1);
                s.check(c.coeff(l) == q(w.clone()), || {
                    format!(
                        "(n={n}, m={m}, l={l}): C coefficient {} vs W={w}",
                        c.coeff(l)
                    )
                });
            }
            s.check(
                c.eval_int(&Integer::one()) == q(lah(n as i64, m as i64 + 1)?),
                || format!("(n={n}, m={m}): C(1) != L(n, m+1)"),
            );
        }
    }
    suites.push(s);

    let mut s = SuiteResult::new("paper-tables");
    for (n, golden) in [
        (5, include_str!("../golden/wlah_table_5.csv")),
        (6, include_str!("../golden/wlah_table_6.csv")),
    ] {
        for method in WlahMethod::ALL {
            if method == WlahMethod::Enum && n > config.enum_cap {
                continue;
            }
            let rendered = render_table(
                &WlahTable::build_with_config(n, method, &wcfg)?,
                Format::Csv,
            );
            s.check(rendered == golden, || {
                format!("(n={n}) {method} table differs from golden")
            });
        }
    }
    suites.push(s);

    let mut methods = SuiteResult::new("ehrhart-methods");
    let mut positivity = SuiteResult::new("ehrhart-positivity");
    let mut leading = SuiteResult::new("ehrhart-leading-coeff");
    let mut symmetric = SuiteResult::new("ehrhart-complement");
    for n in 2..=max_n {
        for k in 1..n {
            let reference = ehrhart_polynomial(k, n, EhrhartMethod::Katzman)?.poly;
            for method in [EhrhartMethod::Stirling, EhrhartMethod::Wlah] {
                let p = ehrhart_polynomial(k, n, method)?.poly;
                methods.check(p == reference, || {
                    format!("(k={k}, n={n}) {method}: {p} vs katzman: {reference}")
                });
            }
            if n <= oracle_max {
                let p = ehrhart_interpolated(k, n)?.poly;
                methods.check(p == reference, || {
                    format!("(k={k}, n={n}) oracle: {p} vs katzman: {reference}")
                });
            }
            let w = ehrhart_polynomial(k, n, EhrhartMethod::Wlah)?.poly;
            for m in 0..n {
                let c = w.coeff(m);
                positivity.check(c.is_positive(), || format!("(k={k}, n={n}, m={m}): {c}"));
            }
            let expected = Rational::new(eulerian(n - 1, k as i64 - 1), fact(n as u64 - 1));
            leading.check(w.coeff(n - 1) == expected, || format!("(k={k}, n={n})"));
            let flipped = ehrhart_polynomial(n - k, n, EhrhartMethod::Katzman)?.poly;
            symmetric.check(flipped == reference, || format!("(k={k}, n={n})"));
        }
    }
    suites.extend([methods, positivity, leading, symmetric]);

    let mut s = SuiteResult::new("oracle-evaluation");
    for n in 1..=oracle_max {
        for k in 0..=n {
            let e = ehrhart_polynomial(k, n, EhrhartMethod::Katzman)?.poly;
            for t in 0..=5usize {
                let direct = lattice_point_count(k, n, t, LatticeStrategy::Direct)?;
                let coeff = lattice_point_count(k, n, t, LatticeStrategy::Coeff)?;
                s.check(direct == coeff, || {
                    format!("(k={k}, n={n}, t={t}) direct vs coeff")
                });
                let v = e.eval_int(&Integer::from(t));
                s.check(v == q(direct.clone()), || {
                    format!("(k={k}, n={n}, t={t}): E(t)={v}, count={direct}")
                });
            }
        }
    }
    suites.push(s);

    let mut s = SuiteResult::new("worpitzky");
    for m in 1..=6usize {
        let numerator =
            Polynomial::from_integers(std::iter::once(Integer::zero()).chain(eulerian_row(m)));
        let g = numerator.mul_truncated(&inverse_one_minus_x_pow(m + 1, 12), 12);
        for t in 0..=12u32 {
            let expected = q(Integer::from(t).pow(m as u32));
            s.check(g.coeff(t as usize) == expected, || {
                format!("(m={m}, t={t})")
            });
        }
    }
    suites.push(s);

    Ok(CrosscheckReport { suites })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_range_passes() {
        let r = run_crosscheck(&CrosscheckConfig {
            max_n: 2,
            ..Default::default()
        })
        .unwrap();
        assert!(r.passed(), "{}", r.render());
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn rejects_tiny_bound() {
        assert!(matches!(
            run_crosscheck(&CrosscheckConfig {
                max_n: 1,
                ..Default::default()
            }),
            Err(CrosscheckError::Bounds(1))
        ));
    }

    #[test]
    fn injected_fault_is_reported() {
        let r = run_crosscheck(&CrosscheckConfig {
            max_n: 5,
            fault: Some(InjectedFault {
                method: WlahMethod::Genfun,
                l: 1,
                n: 4,
                m: 2,
            }),
            ..Default::default()
        })
        .unwrap();
        assert_eq!(r.exit_code(), 1);
        let bad = r.suites.iter().find(|s| s.name == "wlah-methods").unwrap();
        assert!(!bad.passed());
        let text = r.render();
        assert!(text.contains("FAIL wlah-methods"), "{text}");
        assert!(text.contains("(l=1, n=4, m=2)"), "{text}");
    }
}
