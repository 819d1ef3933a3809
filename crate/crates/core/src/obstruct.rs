//! Arithmetic constraints on flat twisted connections and the decision
//! procedure that certifies `pi_1(X \ Sigma)` has no irreducible `SU(n+1)`
//! representation.
//!
//! A flat connection with holonomy `alpha` forces `l_i = alpha_i sigma` and
//! `k = -sum l_i^2 / (2 sigma)`. Eliminating `l_0 = -sum_{i>=1} l_i`, integrality
//! of `k` makes `sigma` divide `N = sum_{i>=1} l_i^2 + sum_{i<j} l_i l_j`, a value
//! of half the `A_n`-type form. If no such `N` below the bound is represented
//! with all coordinates nonzero, no irreducible representation exists.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gauge::{BundleTopology, HolonomyClass};
use crate::repnum::{nonvanishing_form_table, nonvanishing_squares_table, QuadForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlatDiagnostics {
    /// Every `alpha_i sigma` is an integer.
    pub l_integral: bool,
    /// `sum l_i = 0`.
    pub l_sum_zero: bool,
    /// `k` is an integer.
    pub k_integral: bool,
}

impl FlatDiagnostics {
    pub fn all_pass(&self) -> bool {
        self.l_integral && self.l_sum_zero && self.k_integral
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatSolution {
    pub alpha: HolonomyClass,
    pub sigma: i64,
    /// `alpha_i sigma`, kept rational so a failed integrality check loses nothing.
    pub l: Vec<BigRational>,
    pub k: BigRational,
    pub diagnostics: FlatDiagnostics,
}

impl FlatSolution {
    pub fn integer_l(&self) -> Option<Vec<i64>> {
        self.l
            .iter()
            .map(|v| v.is_integer().then(|| v.to_integer().to_i64()).flatten())
            .collect()
    }

    /// The bundle topology, when every diagnostic passes.
    pub fn topology(&self) -> Option<BundleTopology> {
        if !self.diagnostics.all_pass() {
            return None;
        }
        let k = self.k.to_integer().to_i64()?;
        BundleTopology::new(k, self.integer_l()?, self.sigma).ok()
    }
}

/// `l_i = alpha_i sigma`, `k = -sum l_i^2 / (2 sigma)`; for `sigma = 0`, `k = 0` and
/// `l = 0`. Inconsistencies are reported in the diagnostics, never rounded away.
pub fn flat_constraints(h: &HolonomyClass, sigma: i64) -> FlatSolution {
    let n1 = h.alpha().len();
    if sigma == 0 {
        return FlatSolution {
            alpha: h.clone(),
            sigma,
            l: vec![BigRational::zero(); n1],
            k: BigRational::zero(),
            diagnostics: FlatDiagnostics {
                l_integral: true,
                l_sum_zero: true,
                k_integral: true,
            },
        };
    }
    let s = BigRational::from_integer(BigInt::from(sigma));
    let l: Vec<BigRational> = h.alpha().iter().map(|a| a * &s).collect();
    let sq: BigRational = l.iter().map(|v| v * v).sum();
    let k = -sq / (&s * BigRational::from_integer(BigInt::from(2)));
    let diagnostics = FlatDiagnostics {
        l_integral: l.iter().all(BigRational::is_integer),
        l_sum_zero: l.iter().sum::<BigRational>().is_zero(),
        k_integral: k.is_integer(),
    };
    FlatSolution {
        alpha: h.clone(),
        sigma,
        l,
        k,
        diagnostics,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ObstructionCase {
    /// Off-diagonal products `sum_{i != j} l_i l_j` vanish; counts are `R_n(N)`.
    Diagonal,
    /// No side condition; counts are `R_Q(N)` for the `A_n`-type form.
    General,
}

impl fmt::Display for ObstructionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObstructionCase::Diagonal => "diagonal",
            ObstructionCase::General => "general",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Obstructed,
    Inconclusive,
}

fn as_decimal<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(serialize_with = "as_decimal")]
    pub count: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub group: String,
    pub rank: usize,
    pub sigma: i64,
    pub case: ObstructionCase,
    /// Strict upper bound on the scanned `N`.
    pub bound: u64,
    pub witnesses: Vec<Witness>,
    pub verdict: Verdict,
    /// Conditions under which an `Obstructed` verdict is a theorem.
    pub hypotheses: Vec<String>,
}

impl ObstructionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn check_args(n: usize, sigma: i64) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("rank n must be at least 1".into()));
    }
    if sigma == 0 {
        return Err(Error::SigmaZero);
    }
    Ok(())
}

fn scan(n: usize, sigma: i64, case: ObstructionCase, bound: u64, counts: &[BigInt]) -> ObstructionReport {
    let step = sigma.unsigned_abs();
    let witnesses: Vec<Witness> = (1..)
        .map(|m| m * step)
        .take_while(|&big_n| big_n < bound)
        .filter_map(|big_n| {
            let c = &counts[big_n as usize];
            c.is_positive().then(|| Witness {
                n: big_n,
                count: c.clone(),
            })
        })
        .collect();
    let verdict = if witnesses.is_empty() {
        Verdict::Obstructed
    } else {
        Verdict::Inconclusive
    };
    let mut hypotheses = vec![
        "X is simply connected".to_string(),
        "Sigma is an embedded oriented surface".to_string(),
        format!("Sigma.Sigma = {sigma} is nonzero"),
    ];
    if case == ObstructionCase::Diagonal {
        hypotheses.push("sum of l_i l_j over i != j in 1..n vanishes".to_string());
    }
    ObstructionReport {
        group: format!("SU({})", n + 1),
        rank: n,
        sigma,
        case,
        bound,
        witnesses,
        verdict,
        hypotheses,
    }
}

/// Scans multiples `N` of `|sigma|` below `n sigma^2` for `R_n(N) > 0`.
pub fn obstruction_diagonal(n: usize, sigma: i64) -> Result<ObstructionReport> {
    check_args(n, sigma)?;
    let bound = n as u64 * sigma.unsigned_abs().pow(2);
    let table = nonvanishing_squares_table(n as u32, bound.saturating_sub(1) as usize);
    Ok(scan(n, sigma, ObstructionCase::Diagonal, bound, table.counts()))
}

/// Scans multiples `N` of `|sigma|` below `n(n+1)/2 sigma^2` for `R_Q(N) > 0`,
/// `Q` the `A_n`-type form.
pub fn obstruction_general(n: usize, sigma: i64) -> Result<ObstructionReport> {
    check_args(n, sigma)?;
    let bound = (n * (n + 1) / 2) as u64 * sigma.unsigned_abs().pow(2);
    let form = QuadForm::an(n)?;
    let table = nonvanishing_form_table(&form, bound.saturating_sub(1) as usize)?;
    Ok(scan(n, sigma, ObstructionCase::General, bound, table.counts()))
}

pub fn obstruction(n: usize, sigma: i64, case: ObstructionCase) -> Result<ObstructionReport> {
    match case {
        ObstructionCase::Diagonal => obstruction_diagonal(n, sigma),
        ObstructionCase::General => obstruction_general(n, sigma),
    }
}

/// A concrete monopole vector `(l_1, ..., l_n)` compatible with a flat connection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessVector {
    pub l: Vec<i64>,
    /// `sum l_i^2 + sum_{i<j} l_i l_j`, a positive multiple of `|sigma|`.
    #[serde(rename = "N")]
    pub norm: u64,
}

/// Enumerates `(l_1..l_n)` with `0 < |l_i| < |sigma|` and, unless `both_signs`,
/// `sign(l_i) = sign(sigma)`, keeping those where `sigma` divides
/// `N = sum l_i^2 + sum_{i<j} l_i l_j`. Lexicographic order.
pub fn witness_enumerate(n: usize, sigma: i64, both_signs: bool) -> Result<Vec<WitnessVector>> {
    check_args(n, sigma)?;
    let cap = sigma.abs() - 1;
    let sign = sigma.signum();
    let mut values: Vec<i64> = (1..=cap).map(|v| v * sign).collect();
    if both_signs {
        values.extend((1..=cap).map(|v| -v * sign));
    }
    values.sort_unstable();
    let mut out = Vec::new();
    let mut l = Vec::with_capacity(n);
    enumerate_l(n, sigma, &values, &mut l, &mut out);
    Ok(out)
}

fn enumerate_l(n: usize, sigma: i64, values: &[i64], l: &mut Vec<i64>, out: &mut Vec<WitnessVector>) {
    if l.len() == n {
        let sq: i64 = l.iter().map(|v| v * v).sum();
        let total: i64 = l.iter().sum();
        // sum_{i<j} l_i l_j = ((sum l)^2 - sum l^2) / 2
        let norm = sq + (total * total - sq) / 2;
        debug_assert!(norm > 0);
        if norm % sigma == 0 {
            out.push(WitnessVector {
                l: l.clone(),
                norm: norm as u64,
            });
        }
        return;
    }
    for &v in values {
        l.push(v);
        enumerate_l(n, sigma, values, l, out);
        l.pop();
    }
}
