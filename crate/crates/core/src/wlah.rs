//! Weighted Lah numbers.
//!
//! A partition of `{1..n}` into `m` linearly ordered blocks has weight equal to
//! the sum, over its blocks, of the number of entries smaller than the block's
//! first entry. `W(l, n, m)` counts such partitions of weight `l`. Summing over
//! `l` gives the Lah number `L(n, m)`; `W(0, n, m)` is the unsigned Stirling
//! number `[n, m]`.
//!
//! Five independent ways of computing `W` are provided, selected by
//! [`WlahMethod`]:
//!
//! * `Enum`: walk every ordered partition and bucket by weight.
//! * `RecA`: the recurrence obtained by removing the element `1`,
//!   `W(l,n,m) = (n-1) W(l-1,n-1,m) + sum_j C(n-1,j) j! W(l,n-1-j,m-1)`.
//! * `RecB`: the four-term recurrence
//!   `W(l,n,m) = (n-1) W(l-1,n-1,m) + (n-1) W(l,n-1,m) + W(l,n-1,m-1) - (n-1)(n-2) W(l-1,n-2,m)`.
//! * `Closed`: the double alternating sum over Stirling numbers and binomials.
//! * `Genfun`: `n!/m! * [x^n s^l] (sum_k x^k/k (1 + s + ... + s^{k-1}))^m`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::arith::{binom, fact, stirling1_unsigned, Integer, Rational};
use crate::error::{domain, Error, Result};
use crate::series::BivariateSeries;

/// Largest `n` the enumeration method accepts by default.
pub const DEFAULT_ENUM_CAP: usize = 10;

/// A partition of `{1..n}` into linearly ordered blocks.
///
/// Blocks are kept sorted by their minimum element, so two partitions are equal
/// exactly when they have the same blocks with the same internal orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedSetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    /// Validates that `blocks` partition `{1..n}` into nonempty blocks, then
    /// puts them in canonical order.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(domain("empty block"));
            }
            for &e in b {
                if e == 0 || e > n {
                    return Err(domain(format!("element {e} outside 1..={n}")));
                }
                if std::mem::replace(&mut seen[e], true) {
                    return Err(domain(format!("element {e} appears twice")));
                }
            }
        }
        if let Some(missing) = (1..=n).find(|&e| !seen[e]) {
            return Err(domain(format!("element {missing} is missing")));
        }
        blocks.sort_by_key(|b| *b.iter().min().expect("nonempty"));
        Ok(Self { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn weight(&self) -> usize {
        self.blocks.iter().map(|b| block_weight(b)).sum()
    }

    /// Applies `i -> n + 1 - i` to every entry, keeping positions inside blocks.
    ///
    /// This is an involution that sends weight `l` to weight `n - m - l`.
    pub fn reversed(&self) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&e| self.n + 1 - e).collect())
            .collect();
        Self::new(self.n, blocks).expect("relabelling preserves validity")
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("(")?;
            for (j, e) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str(")")?;
        }
        f.write_str("}")
    }
}

/// Number of entries of `block` smaller than its first entry.
pub fn block_weight(block: &[usize]) -> usize {
    match block.split_first() {
        Some((first, rest)) => rest.iter().filter(|&&e| e < *first).count(),
        None => 0,
    }
}

pub fn partition_weight(p: &OrderedSetPartition) -> usize {
    p.weight()
}

/// Every set partition of `{1..n}` into exactly `m` blocks, blocks ordered by
/// minimum and sorted internally.
fn set_partitions(n: usize, m: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(e: usize, n: usize, m: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if e > n {
            if cur.len() == m {
                out.push(cur.clone());
            }
            return;
        }
        let remaining = n - e + 1;
        if cur.len() + remaining < m {
            return;
        }
        for i in 0..cur.len() {
            cur[i].push(e);
            go(e + 1, n, m, cur, out);
            cur[i].pop();
        }
        if cur.len() < m {
            cur.push(vec![e]);
            go(e + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, m, &mut Vec::new(), &mut out);
    out
}

/// Lexicographic successor; on the last permutation, resets to sorted and returns false.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Stream over all partitions of `{1..n}` into `m` linearly ordered blocks.
///
/// Each partition is produced exactly once, in canonical form.
pub struct OrderedPartitions {
    n: usize,
    shapes: std::vec::IntoIter<Vec<Vec<usize>>>,
    current: Option<Vec<Vec<usize>>>,
    fresh: bool,
}

impl OrderedPartitions {
    /// Advances `current` to the next internal ordering of its blocks.
    fn step(&mut self) -> bool {
        let Some(blocks) = self.current.as_mut() else {
            return false;
        };
        for b in blocks.iter_mut().rev() {
            if next_permutation(b) {
                return true;
            }
        }
        false
    }
}

impl Iterator for OrderedPartitions {
    type Item = OrderedSetPartition;

    fn next(&mut self) -> Option<Self::Item> {
        if !self.fresh && !self.step() {
            self.current = self.shapes.next();
        }
        self.fresh = false;
        self.current.as_ref().map(|blocks| OrderedSetPartition {
            n: self.n,
            blocks: blocks.clone(),
        })
    }
}

/// All partitions of `{1..n}` into `m` linearly ordered blocks.
///
/// Empty when `m > n`.
pub fn enumerate_ordered_partitions(n: usize, m: usize) -> Result<OrderedPartitions> {
    if n < 1 || m < 1 {
        return Err(domain(format!(
            "ordered partitions need n, m >= 1 (got n={n}, m={m})"
        )));
    }
    let mut shapes = if m > n {
        Vec::new()
    } else {
        set_partitions(n, m)
    }
    .into_iter();
    let current = shapes.next();
    Ok(OrderedPartitions {
        n,
        shapes,
        current,
        fresh: true,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WlahMethod {
    Enum,
    RecA,
    RecB,
    Closed,
    Genfun,
}

impl WlahMethod {
    pub const ALL: [WlahMethod; 5] = [
        WlahMethod::Enum,
        WlahMethod::RecA,
        WlahMethod::RecB,
        WlahMethod::Closed,
        WlahMethod::Genfun,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WlahMethod::Enum => "enum",
            WlahMethod::RecA => "rec-a",
            WlahMethod::RecB => "rec-b",
            WlahMethod::Closed => "closed",
            WlahMethod::Genfun => "genfun",
        }
    }
}

impl fmt::Display for WlahMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WlahMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WlahMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| domain(format!("unknown weighted Lah method {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WlahConfig {
    /// Largest `n` accepted by [`WlahMethod::Enum`].
    pub enum_cap: usize,
}

impl Default for WlahConfig {
    fn default() -> Self {
        Self {
            enum_cap: DEFAULT_ENUM_CAP,
        }
    }
}

fn check_nm(n: usize, m: usize) -> Result<()> {
    if m < 1 || n < m {
        return Err(domain(format!(
            "weighted Lah numbers need 1 <= m <= n (got n={n}, m={m})"
        )));
    }
    Ok(())
}

fn check_enum_cap(n: usize, config: &WlahConfig) -> Result<()> {
    if n > config.enum_cap {
        return Err(Error::Capacity {
            what: "ordered partition enumeration (n)",
            requested: n as u128,
            cap: config.enum_cap as u128,
        });
    }
    Ok(())
}

/// `W(l, n, m)` by the chosen method. Zero for `l` outside `0..=n-m`.
pub fn wlah(l: i64, n: usize, m: usize, method: WlahMethod) -> Result<Integer> {
    wlah_with_config(l, n, m, method, &WlahConfig::default())
}

pub fn wlah_with_config(
    l: i64,
    n: usize,
    m: usize,
    method: WlahMethod,
    config: &WlahConfig,
) -> Result<Integer> {
    check_nm(n, m)?;
    match method {
        WlahMethod::Enum => {
            check_enum_cap(n, config)?;
            if l < 0 {
                return Ok(Integer::zero());
            }
            let count = enumerate_ordered_partitions(n, m)?
                .filter(|p| p.weight() as i64 == l)
                .count();
            Ok(Integer::from(count))
        }
        WlahMethod::RecA | WlahMethod::RecB => {
            let table = RecurrenceTable::build(n, method);
            Ok(table.get(l, n, m))
        }
        WlahMethod::Closed => Ok(wlah_closed(l, n, m)),
        WlahMethod::Genfun => {
            if l < 0 {
                return Ok(Integer::zero());
            }
            let row = wlah_genfun_row(n, m, (n - m).max(l as usize))?;
            Ok(row[l as usize].clone())
        }
    }
}

/// `W(0..=n-m, n, m)` by the chosen method.
pub fn wlah_row(n: usize, m: usize, method: WlahMethod) -> Result<Vec<Integer>> {
    wlah_row_with_config(n, m, method, &WlahConfig::default())
}

pub fn wlah_row_with_config(
    n: usize,
    m: usize,
    method: WlahMethod,
    config: &WlahConfig,
) -> Result<Vec<Integer>> {
    check_nm(n, m)?;
    let width = n - m + 1;
    match method {
        WlahMethod::Enum => {
            check_enum_cap(n, config)?;
            let mut counts = vec![0u64; width];
            for p in enumerate_ordered_partitions(n, m)? {
                let w = p.weight();
                if w >= width {
                    return Err(Error::Consistency(format!(
                        "partition {p} has weight {w} above n - m = {}",
                        n - m
                    )));
                }
                counts[w] += 1;
            }
            Ok(counts.into_iter().map(Integer::from).collect())
        }
        WlahMethod::RecA | WlahMethod::RecB => {
            let table = RecurrenceTable::build(n, method);
            Ok(table.row(n, m).to_vec())
        }
        WlahMethod::Closed => Ok((0..width as i64).map(|l| wlah_closed(l, n, m)).collect()),
        WlahMethod::Genfun => wlah_genfun_row(n, m, n - m),
    }
}

/// Bottom-up table of `W(l, n', m')` for all `n' <= n`, filled by one of the
/// two recurrences.
struct RecurrenceTable {
    // rows[n][m] holds W(0..=n-m, n, m) for 1 <= m <= n; empty otherwise.
    rows: Vec<Vec<Vec<Integer>>>,
}

impl RecurrenceTable {
    fn build(n_max: usize, method: WlahMethod) -> Self {
        let mut t = RecurrenceTable {
            rows: Vec::with_capacity(n_max + 1),
        };
        t.rows.push(vec![Vec::new()]);
        for n in 1..=n_max {
            let mut level = vec![Vec::new(); n + 1];
            for (m, slot) in level.iter_mut().enumerate().skip(1) {
                *slot = (0..=(n - m) as i64)
                    .map(|l| t.next_value(l, n, m, method))
                    .collect();
            }
            t.rows.push(level);
        }
        t
    }

    fn get(&self, l: i64, n: usize, m: usize) -> Integer {
        if l < 0 || m < 1 || m > n {
            return Integer::zero();
        }
        self.rows[n][m]
            .get(l as usize)
            .cloned()
            .unwrap_or_else(Integer::zero)
    }

    fn row(&self, n: usize, m: usize) -> &[Integer] {
        &self.rows[n][m]
    }

    // Rows below n are complete when this is called.
    fn next_value(&self, l: i64, n: usize, m: usize, method: WlahMethod) -> Integer {
        if m == 1 {
            // One block: its first entry fixes the weight, the rest is free.
            return fact(n as u64 - 1);
        }
        let nn = n as i64;
        match method {
            WlahMethod::RecA => {
                let mut v = self.get(l - 1, n - 1, m) * (nn - 1);
                // C(n-1, j) j! = (n-1)! / (n-1-j)!
                let mut falling = Integer::one();
                for j in 0..n {
                    if j > 0 {
                        falling *= nn - j as i64;
                    }
                    v += &falling * self.get(l, n - 1 - j, m - 1);
                }
                v
            }
            WlahMethod::RecB => {
                if n == m {
                    return if l == 0 {
                        Integer::one()
                    } else {
                        Integer::zero()
                    };
                }
                // here n >= 3
                self.get(l - 1, n - 1, m) * (nn - 1)
                    + self.get(l, n - 1, m) * (nn - 1)
                    + self.get(l, n - 1, m - 1)
                    - self.get(l - 1, n - 2, m) * ((nn - 1) * (nn - 2))
            }
            _ => unreachable!("not a recurrence method"),
        }
    }
}

/// Closed form
/// `sum_{j=0}^{l} sum_{i=0}^{n-m} (-1)^{i+j} C(n,j) C(m+l-j-1, m-1) [j, j-i] [n-j, m+i-j]`.
fn wlah_closed(l: i64, n: usize, m: usize) -> Integer {
    let (n, m) = (n as i64, m as i64);
    let mut total = Integer::zero();
    for j in 0..=l {
        let outer = binom(n, j as u64) * binom(m + l - j - 1, (m - 1) as u64);
        if outer.is_zero() {
            continue;
        }
        let mut inner = Integer::zero();
        for i in 0..=n - m {
            let term = stirling1_unsigned(j, j - i) * stirling1_unsigned(n - j, m + i - j);
            if (i + j) % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        total += outer * inner;
    }
    total
}

/// `W(0..=s_trunc, n, m)` read off `n!/m! * [x^n s^l] f^m` with `f` the log term.
fn wlah_genfun_row(n: usize, m: usize, s_trunc: usize) -> Result<Vec<Integer>> {
    let f = BivariateSeries::log_term(n, s_trunc).pow(m);
    let scale = Rational::from_integer(fact(n as u64) / fact(m as u64));
    (0..=s_trunc)
        .map(|l| {
            let c = f.coeff(n, l)? * &scale;
            if !c.is_integer() || c.is_negative() {
                return Err(Error::Consistency(format!(
                    "generating function gave non-count {c} at l={l}, n={n}, m={m}"
                )));
            }
            Ok(c.to_integer())
        })
        .collect()
}

/// `W(l, n, m)` for one `n`, rows `m = 1..=n`, columns `l = 0..=n-m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WlahTable {
    n: usize,
    rows: Vec<Vec<Integer>>,
}

impl WlahTable {
    pub fn build(n: usize, method: WlahMethod) -> Result<Self> {
        Self::build_with_config(n, method, &WlahConfig::default())
    }

    pub fn build_with_config(n: usize, method: WlahMethod, config: &WlahConfig) -> Result<Self> {
        if n < 1 {
            return Err(domain("weighted Lah table needs n >= 1"));
        }
        let rows = match method {
            WlahMethod::RecA | WlahMethod::RecB => {
                let t = RecurrenceTable::build(n, method);
                (1..=n).map(|m| t.row(n, m).to_vec()).collect()
            }
            _ => (1..=n)
                .map(|m| wlah_row_with_config(n, m, method, config))
                .collect::<Result<_>>()?,
        };
        Ok(Self { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `W(l, n, m)`, or `None` outside `1 <= m <= n`, `0 <= l <= n - m`.
    pub fn get(&self, m: usize, l: usize) -> Option<&Integer> {
        self.rows.get(m.checked_sub(1)?)?.get(l)
    }

    /// Like [`get`](Self::get) but zero outside the support.
    pub fn value(&self, l: i64, m: usize) -> Integer {
        if l < 0 {
            return Integer::zero();
        }
        self.get(m, l as usize)
            .cloned()
            .unwrap_or_else(Integer::zero)
    }

    /// Row `m`: `W(0..=n-m, n, m)`.
    pub fn row(&self, m: usize) -> &[Integer] {
        &self.rows[m - 1]
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &[Integer])> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, r)| (i + 1, r.as_slice()))
    }
}

/// The full table for `n`, filled by the four-term recurrence.
pub fn wlah_table(n: usize) -> Result<WlahTable> {
    WlahTable::build(n, WlahMethod::RecB)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::lah;
    use std::collections::HashSet;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    fn part(n: usize, blocks: &[&[usize]]) -> OrderedSetPartition {
        OrderedSetPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(OrderedSetPartition::new(3, vec![vec![1, 2], vec![]]).is_err());
        assert!(OrderedSetPartition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(OrderedSetPartition::new(3, vec![vec![1, 2]]).is_err());
        assert!(OrderedSetPartition::new(3, vec![vec![1, 4], vec![2, 3]]).is_err());
        let p = part(3, &[&[3, 2], &[1]]);
        assert_eq!(p.blocks(), &[vec![1], vec![3, 2]]);
        assert_eq!(p.to_string(), "{(1),(3,2)}");
    }

    #[test]
    fn weight_examples() {
        assert_eq!(partition_weight(&part(3, &[&[1, 2], &[3]])), 0);
        assert_eq!(partition_weight(&part(3, &[&[2, 1], &[3]])), 1);
        assert_eq!(partition_weight(&part(3, &[&[1, 3], &[2]])), 0);
        assert_eq!(partition_weight(&part(3, &[&[3, 1], &[2]])), 1);
        assert_eq!(partition_weight(&part(3, &[&[2, 3], &[1]])), 0);
        assert_eq!(partition_weight(&part(3, &[&[3, 2], &[1]])), 1);
        for n in 1..8 {
            let desc: Vec<usize> = (1..=n).rev().collect();
            assert_eq!(part(n, &[&desc]).weight(), n - 1);
        }
    }

    #[test]
    fn enumerates_the_six_partitions_of_three_into_two() {
        let got: HashSet<_> = enumerate_ordered_partitions(3, 2).unwrap().collect();
        let expected: HashSet<_> = [
            part(3, &[&[1, 2], &[3]]),
            part(3, &[&[2, 1], &[3]]),
            part(3, &[&[1, 3], &[2]]),
            part(3, &[&[3, 1], &[2]]),
            part(3, &[&[2, 3], &[1]]),
            part(3, &[&[3, 2], &[1]]),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);
        assert_eq!(enumerate_ordered_partitions(3, 2).unwrap().count(), 6);
    }

    #[test]
    fn enumeration_counts_and_uniqueness() {
        for n in 1..=7 {
            for m in 1..=n {
                let all: Vec<_> = enumerate_ordered_partitions(n, m).unwrap().collect();
                let distinct: HashSet<_> = all.iter().cloned().collect();
                assert_eq!(distinct.len(), all.len(), "duplicates at n={n} m={m}");
                assert_eq!(Integer::from(all.len()), lah(n as i64, m as i64).unwrap());
                for p in &all {
                    assert_eq!(p.num_blocks(), m);
                    assert_eq!(
                        &OrderedSetPartition::new(n, p.blocks().to_vec()).unwrap(),
                        p
                    );
                }
            }
        }
        assert_eq!(enumerate_ordered_partitions(4, 2).unwrap().count(), 36);
        let single: Vec<_> = enumerate_ordered_partitions(4, 4).unwrap().collect();
        assert_eq!(single, vec![part(4, &[&[1], &[2], &[3], &[4]])]);
        assert_eq!(enumerate_ordered_partitions(2, 3).unwrap().count(), 0);
        assert!(enumerate_ordered_partitions(0, 1).is_err());
        assert!(enumerate_ordered_partitions(3, 0).is_err());
    }

    #[test]
    fn reversal_is_weight_complementing_involution() {
        for n in 1..=7 {
            for m in 1..=n {
                for p in enumerate_ordered_partitions(n, m).unwrap() {
                    let r = p.reversed();
                    assert_eq!(r.weight(), n - m - p.weight(), "{p}");
                    assert_eq!(r.reversed(), p);
                }
            }
        }
    }

    #[test]
    fn method_names_round_trip() {
        for m in WlahMethod::ALL {
            assert_eq!(m.name().parse::<WlahMethod>().unwrap(), m);
        }
        assert!("bogus".parse::<WlahMethod>().is_err());
    }

    #[test]
    fn paper_examples_every_method() {
        for method in WlahMethod::ALL {
            assert_eq!(wlah(0, 3, 2, method).unwrap(), int(3), "{method}");
            assert_eq!(wlah(1, 3, 2, method).unwrap(), int(3), "{method}");
            assert_eq!(wlah(2, 6, 2, method).unwrap(), int(444), "{method}");
            assert_eq!(wlah(0, 5, 3, method).unwrap(), int(35), "{method}");
            assert_eq!(wlah(4, 5, 1, method).unwrap(), int(24), "{method}");
            assert_eq!(wlah(5, 6, 1, method).unwrap(), int(120), "{method}");
        }
    }

    #[test]
    fn out_of_support_is_zero() {
        for method in WlahMethod::ALL {
            assert_eq!(wlah(-1, 5, 2, method).unwrap(), int(0), "{method}");
            assert_eq!(wlah(4, 5, 2, method).unwrap(), int(0), "{method}");
            assert_eq!(wlah(7, 5, 2, method).unwrap(), int(0), "{method}");
        }
    }

    #[test]
    fn argument_errors() {
        for method in WlahMethod::ALL {
            assert!(matches!(wlah(0, 3, 0, method), Err(Error::Domain(_))));
            assert!(matches!(wlah(0, 3, 4, method), Err(Error::Domain(_))));
        }
        assert!(matches!(
            wlah(0, 11, 2, WlahMethod::Enum),
            Err(Error::Capacity { .. })
        ));
        let tight = WlahConfig { enum_cap: 4 };
        assert!(wlah_with_config(0, 5, 2, WlahMethod::Enum, &tight).is_err());
        assert!(wlah_with_config(0, 4, 2, WlahMethod::Enum, &tight).is_ok());
    }

    #[test]
    fn small_tables_by_hand() {
        let t = wlah_table(1).unwrap();
        assert_eq!(t.get(1, 0), Some(&int(1)));
        assert_eq!(t.get(1, 1), None);
        let t = wlah_table(2).unwrap();
        assert_eq!(t.row(1), &[int(1), int(1)]);
        assert_eq!(t.row(2), &[int(1)]);
        assert_eq!(t.get(0, 0), None);
        assert_eq!(t.get(3, 0), None);
    }

    #[test]
    fn five_methods_agree_up_to_seven() {
        for n in 1..=7 {
            let reference = WlahTable::build(n, WlahMethod::Enum).unwrap();
            for method in WlahMethod::ALL {
                assert_eq!(
                    WlahTable::build(n, method).unwrap(),
                    reference,
                    "n={n} {method}"
                );
            }
        }
    }

    #[test]
    fn closed_form_vanishes_past_support() {
        for n in 1..=9usize {
            for m in 1..=n {
                for l in (n - m + 1) as i64..(n - m + 4) as i64 {
                    assert!(wlah_closed(l, n, m).is_zero(), "l={l} n={n} m={m}");
                }
            }
        }
    }
}
