//! Representation numbers.
//!
//! * `r_k(N)`: ordered integer `k`-tuples with `x_1^2 + ... + x_k^2 = N`.
//! * `R_k(N)`: the same, restricted to tuples with no zero coordinate.
//! * `r_Q(N)`, `R_Q(N)`: solutions of `Q(x) = 2N` for an even form `Q`.
//!
//! Exact counts come from theta-series generating functions built on
//! [`QSeries`]; closed divisor formulas and brute-force enumerations are
//! provided alongside as independent oracles.

mod lattice;
pub mod modular;
mod quadform;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qseries::QSeries;

pub use lattice::{box_half_widths, for_each_in_box, for_each_in_ellipsoid};
pub use quadform::QuadForm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepKind {
    Squares(u32),
    NonvanishingSquares(u32),
    Form(QuadForm),
    NonvanishingForm(QuadForm),
}

impl RepKind {
    pub fn is_nonvanishing(&self) -> bool {
        matches!(self, RepKind::NonvanishingSquares(_) | RepKind::NonvanishingForm(_))
    }
}

/// Counts for `N = 0..=nmax` of one representation kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepTable {
    kind: RepKind,
    counts: Vec<BigInt>,
}

impl RepTable {
    /// Wraps precomputed counts, checking the table invariants.
    pub fn new(kind: RepKind, counts: Vec<BigInt>) -> Result<Self> {
        let Some(first) = counts.first() else {
            return Err(Error::TableMismatch("empty table".into()));
        };
        let expect0 = if kind.is_nonvanishing() { 0 } else { 1 };
        if *first != BigInt::from(expect0) {
            return Err(Error::TableMismatch(format!(
                "count at N=0 is {first}, expected {expect0}"
            )));
        }
        if let Some(neg) = counts.iter().find(|c| c.is_negative()) {
            return Err(Error::NegativeCount(neg.to_string()));
        }
        Ok(RepTable { kind, counts })
    }

    pub fn kind(&self) -> &RepKind {
        &self.kind
    }

    pub fn nmax(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    pub fn count(&self, n: usize) -> Result<&BigInt> {
        self.counts.get(n).ok_or(Error::IndexOutOfTruncation {
            index: n,
            truncation: self.nmax(),
        })
    }
}

/// `theta_3 = sum_{m in Z} q^{m^2}`, truncated at `tmax`.
pub fn theta3_series(tmax: usize) -> QSeries {
    let mut c = vec![BigInt::zero(); tmax + 1];
    c[0] = BigInt::one();
    let two = BigInt::from(2);
    let mut m = 1usize;
    while m * m <= tmax {
        c[m * m] = two.clone();
        m += 1;
    }
    QSeries::from_coeffs(c)
}

/// `theta_3 - 1 = sum_{m != 0} q^{m^2}`.
pub fn theta3_nonzero_series(tmax: usize) -> QSeries {
    &theta3_series(tmax) - &QSeries::one(tmax)
}

/// `r_k(N)` for `N = 0..=nmax`, as the coefficients of `theta_3^k`.
pub fn r_squares_table(k: u32, nmax: usize) -> RepTable {
    let counts = theta3_series(nmax).pow(k).into_coeffs();
    RepTable::new(RepKind::Squares(k), counts).expect("theta power counts lattice points")
}

/// `R_k(N)` for `N = 0..=nmax`, as the coefficients of `(theta_3 - 1)^k`.
pub fn nonvanishing_squares_table(k: u32, nmax: usize) -> RepTable {
    let counts = theta3_nonzero_series(nmax).pow(k).into_coeffs();
    RepTable::new(RepKind::NonvanishingSquares(k), counts)
        .expect("theta power counts lattice points")
}

/// Exact binomial coefficient by the multiplicative formula.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `R_k(N) = sum_{i=1..k} (-1)^{k-i} C(k,i) r_i(N)` for `N >= 1`.
///
/// `tables[i - 1]` must be the `r_i` table for `i = 1..=k`.
pub fn nonvanishing_squares_binomial(k: u32, n: usize, tables: &[RepTable]) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::OutOfRange("N must be at least 1".into()));
    }
    if tables.len() < k as usize {
        return Err(Error::TableMismatch(format!(
            "need r_i tables for i = 1..{k}, got {}",
            tables.len()
        )));
    }
    let mut total = BigInt::zero();
    for i in 1..=k {
        let table = &tables[i as usize - 1];
        if table.kind() != &RepKind::Squares(i) {
            return Err(Error::TableMismatch(format!(
                "table {} has kind {:?}, expected r_{i}",
                i - 1,
                table.kind()
            )));
        }
        let term = binomial(k, i) * table.count(n)?;
        if (k - i) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    if total.is_negative() {
        return Err(Error::NegativeCount(total.to_string()));
    }
    Ok(total)
}

/// Builds the `r_1..r_k` tables consumed by [`nonvanishing_squares_binomial`].
pub fn r_squares_tables(k: u32, nmax: usize) -> Vec<RepTable> {
    (1..=k).map(|i| r_squares_table(i, nmax)).collect()
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `r_2(N) = 4 (d_1(N) - d_3(N))`, with `d_r` counting divisors `≡ r (mod 4)`.
pub fn r2_divisor(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::OutOfRange("N must be at least 1".into()));
    }
    let (mut d1, mut d3) = (0i64, 0i64);
    for d in divisors(n) {
        match d % 4 {
            1 => d1 += 1,
            3 => d3 += 1,
            _ => {}
        }
    }
    Ok(BigInt::from(4 * (d1 - d3)))
}

/// `r_4(N) = 8 * sum of the divisors of N not divisible by 4`.
pub fn r4_divisor(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::OutOfRange("N must be at least 1".into()));
    }
    let s: BigInt = divisors(n)
        .into_iter()
        .filter(|d| d % 4 != 0)
        .map(BigInt::from)
        .sum();
    Ok(s * 8)
}

/// True iff `N` is not of the form `4^a (8b + 7)`.
pub fn legendre_three_square(n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::OutOfRange("N must be at least 1".into()));
    }
    let mut m = n;
    while m % 4 == 0 {
        m /= 4;
    }
    Ok(m % 8 != 7)
}

/// Exhaustive count of `x in Z^k` with `sum x_i^2 = N`, each `|x_i| <= floor(sqrt N)`.
pub fn brute_squares(k: u32, n: u64, require_nonzero: bool) -> BigInt {
    fn walk(left: u32, rem: u64, nonzero: bool) -> u64 {
        if left == 0 {
            return u64::from(rem == 0);
        }
        let w = rem.sqrt() as i64;
        let mut count = 0;
        for x in -w..=w {
            if nonzero && x == 0 {
                continue;
            }
            count += walk(left - 1, rem - (x * x) as u64, nonzero);
        }
        count
    }
    BigInt::from(walk(k, n, require_nonzero))
}

/// Brute-force `r_k` or `R_k` table by binning every tuple with `sum x_i^2 <= nmax`.
pub fn brute_squares_table(k: u32, nmax: u64, require_nonzero: bool) -> Vec<BigInt> {
    fn walk(left: u32, used: u64, nmax: u64, nonzero: bool, bins: &mut [u64]) {
        if left == 0 {
            bins[used as usize] += 1;
            return;
        }
        let w = (nmax - used).sqrt() as i64;
        for x in -w..=w {
            if nonzero && x == 0 {
                continue;
            }
            walk(left - 1, used + (x * x) as u64, nmax, nonzero, bins);
        }
    }
    let mut bins = vec![0u64; nmax as usize + 1];
    walk(k, 0, nmax, require_nonzero, &mut bins);
    bins.into_iter().map(BigInt::from).collect()
}

/// `theta(z, Q) = 1 + sum_N r_Q(N) e^{2 pi i N z}` truncated at `nmax`:
/// coefficient `N` counts `x` with `Q(x) = 2N`.
pub fn theta_form_series(form: &QuadForm, nmax: usize) -> QSeries {
    let mut bins = vec![0u64; nmax + 1];
    for_each_in_ellipsoid(form, 2 * nmax as i128, |_, v| {
        debug_assert!(v % 2 == 0, "even form takes even values");
        bins[(v / 2) as usize] += 1;
    });
    QSeries::from_coeffs(bins.into_iter().map(BigInt::from).collect())
}

pub fn form_table(form: &QuadForm, nmax: usize) -> RepTable {
    RepTable::new(
        RepKind::Form(form.clone()),
        theta_form_series(form, nmax).into_coeffs(),
    )
    .expect("lattice counts are nonnegative with r_Q(0) = 1")
}

/// `R_Q(N)` for `N = 0..=nmax` by inclusion-exclusion over principal
/// submatrices: `R_Q = sum_{S proper subset} (-1)^{|S|} r_{Q_S}`, where `Q_S`
/// deletes the rows and columns in `S`. The fully deleted form contributes
/// nothing for `N >= 1` and is omitted; `R_Q(0)` is 0 by definition.
pub fn nonvanishing_form_table(form: &QuadForm, nmax: usize) -> Result<RepTable> {
    let n = form.dim();
    let mut acc = vec![BigInt::zero(); nmax + 1];
    for deleted in 0u32..(1u32 << n) - 1 {
        let keep: Vec<usize> = (0..n).filter(|i| deleted & (1 << i) == 0).collect();
        let series = theta_form_series(&form.principal(&keep), nmax);
        let negative = deleted.count_ones() % 2 == 1;
        for (slot, c) in acc.iter_mut().zip(series.coeffs()) {
            if negative {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
    }
    acc[0] = BigInt::zero();
    RepTable::new(RepKind::NonvanishingForm(form.clone()), acc)
}

/// `R_Q(N)` for a single `N >= 1` via [`nonvanishing_form_table`].
pub fn nonvanishing_form_inclusion_exclusion(form: &QuadForm, n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::OutOfRange("N must be at least 1".into()));
    }
    Ok(nonvanishing_form_table(form, n)?.count(n)?.clone())
}

/// Box enumeration of `x` with `Q(x) = 2N`, optionally all coordinates nonzero.
pub fn brute_form(form: &QuadForm, n: u64, require_nonzero: bool) -> BigInt {
    let target = 2 * n as i128;
    let mut count = 0u64;
    for_each_in_box(form, target, require_nonzero, |_, v| {
        if v == target {
            count += 1;
        }
    });
    BigInt::from(count)
}

/// `R_Q(N)` by direct enumeration of all-nonzero vectors.
pub fn nonvanishing_form_direct(form: &QuadForm, n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::OutOfRange("N must be at least 1".into()));
    }
    Ok(brute_form(form, n, true))
}

/// The `n x n` form with 2 on the diagonal and 1 elsewhere.
pub fn an_form(n: usize) -> Result<QuadForm> {
    QuadForm::an(n)
}
