//! Holonomy conjugacy classes, the Chern-Weil charge of a singular
//! `SU(n+1)` connection, its Chern-Simons value, and the charge's critical
//! values over the holonomy region.
//!
//! Everything here is exact rational arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn frac(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Reason `alpha` lies outside `1 > a_0 >= a_1 >= ... >= a_n >= 0` with an
/// integral sum in `{0, ..., n}`, or `None` if it is inside.
pub fn region_violation(alpha: &[BigRational]) -> Option<String> {
    if alpha.is_empty() {
        return Some("empty holonomy vector".into());
    }
    let one = BigRational::one();
    for (i, a) in alpha.iter().enumerate() {
        if a.is_negative() || *a >= one {
            return Some(format!("alpha_{i} = {a} is outside [0, 1)"));
        }
    }
    for i in 1..alpha.len() {
        if alpha[i] > alpha[i - 1] {
            return Some(format!(
                "alpha_{} = {} exceeds alpha_{} = {}",
                i,
                alpha[i],
                i - 1,
                alpha[i - 1]
            ));
        }
    }
    let sum: BigRational = alpha.iter().sum();
    if !sum.is_integer() {
        return Some(format!("sum {sum} is not an integer"));
    }
    // each entry < 1, so an integral sum is automatically at most n
    None
}

/// Holonomy parameters `(alpha_0, ..., alpha_n)` of one `SU(n+1)` conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HolonomyClass {
    alpha: Vec<BigRational>,
}

impl HolonomyClass {
    /// Accepts `alpha` only if it already lies in the canonical region.
    pub fn new(alpha: Vec<BigRational>) -> Result<Self> {
        if !alpha.is_empty() {
            let sum: BigRational = alpha.iter().sum();
            if !sum.is_integer() {
                return Err(Error::SumNotIntegral(sum.to_string()));
            }
        }
        match region_violation(&alpha) {
            Some(reason) => Err(Error::OutsideRegion(reason)),
            None => Ok(HolonomyClass { alpha }),
        }
    }

    /// Reduces each entry mod 1 into `[0, 1)` and sorts nonincreasing.
    pub fn canonicalize(raw: &[BigRational]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::OutsideRegion("empty holonomy vector".into()));
        }
        let mut alpha: Vec<BigRational> = raw.iter().map(|a| a - a.floor()).collect();
        let sum: BigRational = alpha.iter().sum();
        if !sum.is_integer() {
            return Err(Error::SumNotIntegral(sum.to_string()));
        }
        alpha.sort_by(|a, b| b.cmp(a));
        Ok(HolonomyClass { alpha })
    }

    /// The identity class of `SU(n+1)`.
    pub fn trivial(n: usize) -> Self {
        HolonomyClass {
            alpha: vec![BigRational::zero(); n + 1],
        }
    }

    pub fn alpha(&self) -> &[BigRational] {
        &self.alpha
    }

    /// `n` for `SU(n+1)`.
    pub fn rank(&self) -> usize {
        self.alpha.len() - 1
    }
}

/// Instanton number `k`, monopole numbers `l_0..l_n` and self-intersection `sigma`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BundleTopology {
    k: i64,
    l: Vec<i64>,
    sigma: i64,
}

impl BundleTopology {
    pub fn new(k: i64, l: Vec<i64>, sigma: i64) -> Result<Self> {
        if l.is_empty() {
            return Err(Error::DimensionMismatch { alpha: 0, l: 0 });
        }
        let sum: i64 = l.iter().sum();
        if sum != 0 {
            return Err(Error::MonopoleSum(sum));
        }
        Ok(BundleTopology { k, l, sigma })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn l(&self) -> &[i64] {
        &self.l
    }

    pub fn sigma(&self) -> i64 {
        self.sigma
    }

    pub fn rank(&self) -> usize {
        self.l.len() - 1
    }
}

/// `k + sum a_i l_i - (1/2) (sum a_i^2) sigma` for an arbitrary `alpha`
/// (no region check). Panics if the lengths differ.
pub fn charge_value(k: i64, l: &[i64], sigma: i64, alpha: &[BigRational]) -> BigRational {
    assert_eq!(l.len(), alpha.len(), "alpha and l must have equal length");
    let linear: BigRational = alpha.iter().zip(l).map(|(a, &li)| a * rat(li)).sum();
    let square: BigRational = alpha.iter().map(|a| a * a).sum();
    rat(k) + linear - square * frac(sigma, 2)
}

fn check_dims(b: &BundleTopology, h: &HolonomyClass) -> Result<()> {
    if b.l.len() != h.alpha.len() {
        return Err(Error::DimensionMismatch {
            alpha: h.alpha.len(),
            l: b.l.len(),
        });
    }
    Ok(())
}

/// Charge of a singular connection with the given topology and holonomy.
pub fn chern_weil_charge(b: &BundleTopology, h: &HolonomyClass) -> Result<BigRational> {
    check_dims(b, h)?;
    Ok(charge_value(b.k, &b.l, b.sigma, &h.alpha))
}

/// The charge minus `k`, reduced mod 1 into `[0, 1)`.
pub fn chern_simons(b: &BundleTopology, h: &HolonomyClass) -> Result<BigRational> {
    check_dims(b, h)?;
    let v = charge_value(0, &b.l, b.sigma, &h.alpha);
    Ok(&v - v.floor())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stratum {
    /// Critical point on the slice `sum alpha = j`.
    Interior { j: usize },
    /// Critical point on `alpha_j = ... = alpha_n = 0`, `sum alpha = m`.
    Boundary { j: usize, m: usize },
    /// Critical point with every coordinate outside `kept` set to zero,
    /// `sum alpha = m`. Only produced in all-subsets mode.
    Subset { kept: Vec<usize>, m: usize },
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stratum::Interior { j } => write!(f, "interior(j={j})"),
            Stratum::Boundary { j, m } => write!(f, "boundary(j={j},m={m})"),
            Stratum::Subset { kept, m } => {
                let idx: Vec<String> = kept.iter().map(usize::to_string).collect();
                write!(f, "subset(kept={},m={m})", idx.join("+"))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremumCandidate {
    pub stratum: Stratum,
    pub alpha_point: Vec<BigRational>,
    /// Charge obtained by substituting `alpha_point`; authoritative.
    pub value: BigRational,
    /// Closed-form critical value.
    pub closed_form: BigRational,
    /// `sum` of `l_i` over the kept coordinates (boundary strata only).
    pub s_j: Option<i64>,
    pub feasible: bool,
}

impl ExtremumCandidate {
    pub fn agrees(&self) -> bool {
        self.value == self.closed_form
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremaReport {
    /// Charge at `alpha = 0` (the `j = 0` slice), i.e. `k`.
    pub base_value: BigRational,
    pub candidates: Vec<ExtremumCandidate>,
    /// Extremes over feasible candidates together with `base_value`.
    pub feasible_min: BigRational,
    pub feasible_max: BigRational,
}

impl ExtremaReport {
    /// Candidates whose closed form disagrees with substitution.
    pub fn defects(&self) -> impl Iterator<Item = &ExtremumCandidate> {
        self.candidates.iter().filter(|c| !c.agrees())
    }
}

/// Critical point of the charge restricted to the coordinates in `kept` with
/// `sum alpha = m`: `alpha_i = l_i/sigma + m/j - s/(j sigma)`.
fn restricted_candidate(b: &BundleTopology, kept: &[usize], m: usize, stratum: Stratum, with_s: bool) -> ExtremumCandidate {
    let n1 = b.l.len();
    let j = kept.len() as i64;
    let sigma = b.sigma;
    let s: i64 = kept.iter().map(|&i| b.l[i]).sum();
    let shift = frac(m as i64, j) - frac(s, j * sigma);
    let mut alpha_point = vec![BigRational::zero(); n1];
    for &i in kept {
        alpha_point[i] = frac(b.l[i], sigma) + &shift;
    }
    let sq: i64 = kept.iter().map(|&i| b.l[i] * b.l[i]).sum();
    let m = m as i64;
    let closed_form = rat(b.k) + frac(sq, 2 * sigma) - frac(m * m * sigma, 2 * j)
        + frac(s, j) * (rat(m) - frac(s, 2 * sigma));
    let value = charge_value(b.k, &b.l, sigma, &alpha_point);
    let feasible = region_violation(&alpha_point).is_none();
    ExtremumCandidate {
        stratum,
        alpha_point,
        value,
        closed_form,
        s_j: with_s.then_some(s),
        feasible,
    }
}

/// All interior and boundary critical points of the charge, each with its
/// closed-form value, the value recomputed by substitution, and whether the
/// point lies in the holonomy region.
///
/// With `all_subsets`, also emits critical points on faces where an
/// arbitrary subset of coordinates vanishes (not only trailing ones).
pub fn charge_extrema(b: &BundleTopology, all_subsets: bool) -> Result<ExtremaReport> {
    if b.sigma == 0 {
        return Err(Error::SigmaZero);
    }
    let n = b.rank();
    let all: Vec<usize> = (0..=n).collect();
    let mut candidates = Vec::new();
    for j in 1..=n {
        // with sum l = 0 the interior formula is the kept = all case of the boundary one
        let mut c = restricted_candidate(b, &all, j, Stratum::Interior { j }, false);
        let sq: i64 = b.l.iter().map(|l| l * l).sum();
        let j = j as i64;
        c.closed_form = rat(b.k) + frac(sq, 2 * b.sigma) - frac(j * j * b.sigma, 2 * (n as i64 + 1));
        candidates.push(c);
    }
    for j in 2..=n {
        for m in 1..j {
            candidates.push(restricted_candidate(b, &all[..j], m, Stratum::Boundary { j, m }, true));
        }
    }
    if all_subsets {
        for mask in 1u64..(1u64 << (n + 1)) - 1 {
            let kept: Vec<usize> = (0..=n).filter(|i| mask & (1 << i) != 0).collect();
            let is_prefix = kept.iter().enumerate().all(|(pos, &i)| pos == i);
            if kept.len() < 2 || is_prefix {
                continue;
            }
            for m in 1..kept.len() {
                let stratum = Stratum::Subset { kept: kept.clone(), m };
                candidates.push(restricted_candidate(b, &kept, m, stratum, true));
            }
        }
    }
    let base_value = rat(b.k);
    let feasible_values = candidates
        .iter()
        .filter(|c| c.feasible)
        .map(|c| &c.value)
        .chain(std::iter::once(&base_value));
    let feasible_min = feasible_values.clone().min().cloned().unwrap();
    let feasible_max = feasible_values.max().cloned().unwrap();
    Ok(ExtremaReport {
        base_value,
        candidates,
        feasible_min,
        feasible_max,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridScan {
    pub denominator: u32,
    pub points: usize,
    pub min: BigRational,
    pub max: BigRational,
    pub argmin: Vec<BigRational>,
    pub argmax: Vec<BigRational>,
}

/// Exact charge over every grid point `alpha in {0, 1/D, ..., (D-1)/D}^{n+1}`
/// inside the holonomy region.
pub fn charge_grid_scan(b: &BundleTopology, denominator: u32) -> Result<GridScan> {
    if b.sigma == 0 {
        return Err(Error::SigmaZero);
    }
    if denominator == 0 {
        return Err(Error::OutOfRange("grid denominator must be positive".into()));
    }
    let d = denominator as i64;
    let mut best: Option<GridScan> = None;
    let mut numerators = Vec::with_capacity(b.l.len());
    grid_walk(b, d, d - 1, &mut numerators, &mut best);
    Ok(best.expect("alpha = 0 is always on the grid"))
}

/// Max-norm distance from `alpha` to the nearest region point of the `1/D` grid.
pub fn grid_displacement(alpha: &[BigRational], denominator: u32) -> BigRational {
    let d = denominator as i64;
    let scaled: Vec<BigRational> = alpha.iter().map(|a| a * rat(d)).collect();
    // search shells of radius m/D; m = D always reaches alpha = 0
    for m in 0..=d {
        let ranges: Vec<(i64, i64)> = scaled
            .iter()
            .map(|x| {
                let lo = (x - rat(m)).ceil().to_integer();
                let hi = (x + rat(m)).floor().to_integer();
                let lo = i64::try_from(lo).unwrap_or(0).max(0);
                let hi = i64::try_from(hi).unwrap_or(d - 1).min(d - 1);
                (lo, hi)
            })
            .collect();
        let mut nums = Vec::with_capacity(alpha.len());
        let mut best: Option<BigRational> = None;
        nearest_walk(&scaled, &ranges, d, &mut nums, &mut best);
        if let Some(dist) = best {
            return dist / rat(d);
        }
    }
    unreachable!("the zero vector is a grid point of the region")
}

fn nearest_walk(
    scaled: &[BigRational],
    ranges: &[(i64, i64)],
    d: i64,
    nums: &mut Vec<i64>,
    best: &mut Option<BigRational>,
) {
    let i = nums.len();
    if i == scaled.len() {
        if nums.iter().sum::<i64>() % d != 0 {
            return;
        }
        let dist = nums
            .iter()
            .zip(scaled)
            .map(|(&p, x)| (rat(p) - x).abs())
            .max()
            .unwrap_or_else(BigRational::zero);
        if best.as_ref().is_none_or(|b| dist < *b) {
            *best = Some(dist);
        }
        return;
    }
    let (lo, mut hi) = ranges[i];
    if let Some(&prev) = nums.last() {
        hi = hi.min(prev);
    }
    for p in lo..=hi {
        nums.push(p);
        nearest_walk(scaled, ranges, d, nums, best);
        nums.pop();
    }
}

/// Bound on how far the charge at `alpha` can be from the charge at the
/// nearest region point of the `1/D` grid. Zero when `alpha` is on the grid.
///
/// With `delta` the [`grid_displacement`],
/// `|f(a + e) - f(a)| <= delta sum |l_i - sigma a_i| + |sigma| (n+1) delta^2 / 2`.
pub fn grid_resolution_slack(b: &BundleTopology, alpha: &[BigRational], denominator: u32) -> BigRational {
    let delta = grid_displacement(alpha, denominator);
    if delta.is_zero() {
        return delta;
    }
    let gradient: BigRational = alpha
        .iter()
        .zip(&b.l)
        .map(|(a, &li)| (rat(li) - a * rat(b.sigma)).abs())
        .sum();
    &delta * gradient + &delta * &delta * frac(b.sigma.abs() * alpha.len() as i64, 2)
}

impl GridScan {
    /// True when the grid range covers `k` and, up to grid resolution, every
    /// feasible candidate value.
    pub fn brackets(&self, b: &BundleTopology, report: &ExtremaReport) -> bool {
        if report.base_value < self.min || report.base_value > self.max {
            return false;
        }
        report.candidates.iter().filter(|c| c.feasible).all(|c| {
            let slack = grid_resolution_slack(b, &c.alpha_point, self.denominator);
            &self.min - &slack <= c.value && c.value <= &self.max + &slack
        })
    }
}

fn grid_walk(b: &BundleTopology, d: i64, cap: i64, nums: &mut Vec<i64>, best: &mut Option<GridScan>) {
    if nums.len() == b.l.len() {
        if nums.iter().sum::<i64>() % d != 0 {
            return;
        }
        let alpha: Vec<BigRational> = nums.iter().map(|&p| frac(p, d)).collect();
        let v = charge_value(b.k, &b.l, b.sigma, &alpha);
        match best {
            None => {
                *best = Some(GridScan {
                    denominator: d as u32,
                    points: 1,
                    min: v.clone(),
                    max: v,
                    argmin: alpha.clone(),
                    argmax: alpha,
                })
            }
            Some(scan) => {
                scan.points += 1;
                if v < scan.min {
                    scan.min = v.clone();
                    scan.argmin = alpha.clone();
                }
                if v > scan.max {
                    scan.max = v;
                    scan.argmax = alpha;
                }
            }
        }
        return;
    }
    for p in 0..=cap {
        nums.push(p);
        grid_walk(b, d, p, nums, best);
        nums.pop();
    }
}
