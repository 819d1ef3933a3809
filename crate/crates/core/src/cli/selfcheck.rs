//! Built-in cross-validation suites behind `thetarep selfcheck`.

use num_bigint::BigInt;
use num_complex::Complex64;
use serde::Serialize;

use super::Level;
use crate::gauge::{self, BundleTopology};
use crate::repnum::{self, modular, QuadForm};

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, outcome: Result<String, String>) -> Check {
    match outcome {
        Ok(detail) => Check {
            name,
            passed: true,
            detail,
        },
        Err(detail) => Check {
            name,
            passed: false,
            detail,
        },
    }
}

struct Bounds {
    kmax: u32,
    nmax: usize,
    form_rank: usize,
    form_nmax: usize,
}

fn bounds(level: Level) -> Bounds {
    match level {
        Level::Quick => Bounds {
            kmax: 4,
            nmax: 100,
            form_rank: 3,
            form_nmax: 30,
        },
        Level::Full => Bounds {
            kmax: 6,
            nmax: 200,
            form_rank: 4,
            form_nmax: 100,
        },
    }
}

/// Runs every suite and stops at the first failure.
pub fn run(level: Level) -> Vec<Check> {
    let b = bounds(level);
    let suites: [(&'static str, &dyn Fn() -> Result<String, String>); 6] = [
        ("nonvanishing squares three ways", &|| squares_three_ways(&b)),
        ("divisor formulas", &|| divisor_formulas(b.nmax)),
        ("three-square criterion", &|| legendre(b.nmax)),
        ("form inclusion-exclusion", &|| form_routes(&b)),
        ("extrema substitution", &extrema_substitution),
        ("theta modular law at z = i", &|| theta_at_i(b.form_rank)),
    ];
    let mut out = Vec::new();
    for (name, f) in suites {
        let c = check(name, f());
        let stop = !c.passed;
        out.push(c);
        if stop {
            break;
        }
    }
    out
}

fn squares_three_ways(b: &Bounds) -> Result<String, String> {
    let tables = repnum::r_squares_tables(b.kmax, b.nmax);
    for k in 1..=b.kmax {
        let direct = repnum::nonvanishing_squares_table(k, b.nmax);
        let brute = repnum::brute_squares_table(k, b.nmax as u64, true);
        for n in 1..=b.nmax {
            let via_binomial = repnum::nonvanishing_squares_binomial(k, n, &tables).map_err(|e| e.to_string())?;
            let d = direct.count(n).map_err(|e| e.to_string())?;
            if *d != via_binomial || *d != brute[n] {
                return Err(format!("k={k} N={n}: direct {d}, binomial {via_binomial}, brute {}", brute[n]));
            }
        }
    }
    Ok(format!("k<={} N<={}", b.kmax, b.nmax))
}

fn divisor_formulas(nmax: usize) -> Result<String, String> {
    let r2 = repnum::r_squares_table(2, nmax);
    let r4 = repnum::r_squares_table(4, nmax);
    for n in 1..=nmax {
        let a = repnum::r2_divisor(n as u64).map_err(|e| e.to_string())?;
        let b = repnum::r4_divisor(n as u64).map_err(|e| e.to_string())?;
        if r2.counts()[n] != a || r4.counts()[n] != b {
            return Err(format!("N={n}: r2 {} vs {a}, r4 {} vs {b}", r2.counts()[n], r4.counts()[n]));
        }
    }
    Ok(format!("N<={nmax}"))
}

fn legendre(nmax: usize) -> Result<String, String> {
    let r3 = repnum::r_squares_table(3, nmax);
    for n in 1..=nmax {
        let predicted = repnum::legendre_three_square(n as u64).map_err(|e| e.to_string())?;
        let actual = r3.counts()[n] > BigInt::from(0);
        if predicted != actual {
            return Err(format!("N={n}: criterion says {predicted}, r3 = {}", r3.counts()[n]));
        }
    }
    Ok(format!("N<={nmax}"))
}

fn form_routes(b: &Bounds) -> Result<String, String> {
    let mut forms: Vec<QuadForm> = (1..=b.form_rank).map(|n| QuadForm::an(n).unwrap()).collect();
    forms.push(QuadForm::twice_identity(3).unwrap());
    for q in &forms {
        let table = repnum::nonvanishing_form_table(q, b.form_nmax).map_err(|e| e.to_string())?;
        for n in 1..=b.form_nmax {
            let direct = repnum::nonvanishing_form_direct(q, n as u64).map_err(|e| e.to_string())?;
            if table.counts()[n] != direct {
                return Err(format!("{}: N={n} inclusion-exclusion {} vs direct {direct}", q.to_text().trim(), table.counts()[n]));
            }
        }
    }
    Ok(format!("{} forms, N<={}", forms.len(), b.form_nmax))
}

fn extrema_substitution() -> Result<String, String> {
    let cases: &[(i64, &[i64], i64)] = &[
        (0, &[1, -1], 2),
        (3, &[2, -1, -1], -3),
        (-1, &[0, 0, 0], 5),
        (2, &[3, 1, -2, -2], 1),
    ];
    let mut total = 0;
    for &(k, l, sigma) in cases {
        let bt = BundleTopology::new(k, l.to_vec(), sigma).map_err(|e| e.to_string())?;
        let report = gauge::charge_extrema(&bt, true).map_err(|e| e.to_string())?;
        if let Some(c) = report.defects().next() {
            return Err(format!("{}: closed form {} vs substitution {}", c.stratum, c.closed_form, c.value));
        }
        total += report.candidates.len();
    }
    Ok(format!("{total} candidates"))
}

fn theta_at_i(max_rank: usize) -> Result<String, String> {
    let mut worst: f64 = 0.0;
    for n in 1..=max_rank.min(3) {
        let q = QuadForm::an(n).unwrap();
        let c = modular::theta_modular_numcheck(&q, Complex64::i(), 1e-12).map_err(|e| e.to_string())?;
        if !(c.absdiff < 1e-6) {
            return Err(format!("n={n}: |lhs - rhs| = {:e}", c.absdiff));
        }
        worst = worst.max(c.absdiff);
    }
    Ok(format!("max |lhs - rhs| = {worst:e}"))
}
