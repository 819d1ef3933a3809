//! Exact enumeration of lattice points inside `{x : Q(x) <= bound}`.
//!
//! Two independent routes are provided:
//!
//! * [`for_each_in_ellipsoid`] decomposes `Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2`
//!   over the rationals and walks the coordinates from last to first, pruning
//!   each coordinate to the exact integer interval that still fits the remaining
//!   budget (Fincke-Pohst).
//! * [`for_each_in_box`] enumerates the bounding box `|x_i| <= sqrt(bound * (A^-1)_ii)`,
//!   with each half-width computed as an exact integer square root.
//!
//! Floating point is only used to guess interval endpoints; the endpoints are
//! then corrected with exact rational comparisons, so inclusion is never
//! decided in floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::QuadForm;

struct Decomposition {
    diag: Vec<BigRational>,
    // mu[i][j] for j > i
    mu: Vec<Vec<BigRational>>,
}

fn decompose(form: &QuadForm) -> Decomposition {
    let n = form.dim();
    let a = |p: usize, q: usize| BigRational::from_integer(BigInt::from(form.entry(p, q)));
    let mut diag: Vec<BigRational> = Vec::with_capacity(n);
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        let mut d = a(i, i);
        for k in 0..i {
            d -= &diag[k] * &mu[k][i] * &mu[k][i];
        }
        for j in i + 1..n {
            let mut v = a(i, j);
            for k in 0..i {
                v -= &diag[k] * &mu[k][i] * &mu[k][j];
            }
            mu[i][j] = v / &d;
        }
        diag.push(d);
    }
    Decomposition { diag, mu }
}

/// Integer interval `{x : (x + c)^2 <= t}` for rational `c` and `t >= 0`.
fn exact_interval(c: &BigRational, t: &BigRational) -> Option<(i64, i64)> {
    if t.is_negative() {
        return None;
    }
    let fits = |x: i64| {
        let s = BigRational::from_integer(x.into()) + c;
        &s * &s <= *t
    };
    let center = -c.to_f64().unwrap_or(0.0);
    let radius = t.to_f64().unwrap_or(0.0).max(0.0).sqrt();
    let mut lo = (center - radius).ceil() as i64;
    let mut hi = (center + radius).floor() as i64;
    while fits(lo - 1) {
        lo -= 1;
    }
    while lo <= hi && !fits(lo) {
        lo += 1;
    }
    while fits(hi + 1) {
        hi += 1;
    }
    while hi >= lo && !fits(hi) {
        hi -= 1;
    }
    if lo <= hi {
        return Some((lo, hi));
    }
    // the float guess can miss a nonempty interval only by rounding
    let near = center.round() as i64;
    (near - 1..=near + 1).find(|&x| fits(x)).map(|x| {
        let (mut lo, mut hi) = (x, x);
        while fits(lo - 1) {
            lo -= 1;
        }
        while fits(hi + 1) {
            hi += 1;
        }
        (lo, hi)
    })
}

/// Calls `visit(x, Q(x))` for every `x` in `Z^n` with `Q(x) <= bound`.
pub fn for_each_in_ellipsoid<F: FnMut(&[i64], i128)>(form: &QuadForm, bound: i128, mut visit: F) {
    if bound < 0 {
        return;
    }
    let dec = decompose(form);
    let n = form.dim();
    let mut x = vec![0i64; n];
    let budget = BigRational::from_integer(BigInt::from(bound));
    descend(form, &dec, n - 1, budget, &mut x, bound, &mut visit);
}

fn descend<F: FnMut(&[i64], i128)>(
    form: &QuadForm,
    dec: &Decomposition,
    level: usize,
    budget: BigRational,
    x: &mut [i64],
    bound: i128,
    visit: &mut F,
) {
    let n = x.len();
    let mut c = BigRational::zero();
    for j in level + 1..n {
        if x[j] != 0 {
            c += &dec.mu[level][j] * BigRational::from_integer(x[j].into());
        }
    }
    let t = &budget / &dec.diag[level];
    let Some((lo, hi)) = exact_interval(&c, &t) else {
        return;
    };
    for v in lo..=hi {
        x[level] = v;
        if level == 0 {
            let value = form.value(x);
            debug_assert!(value <= bound);
            visit(x, value);
        } else {
            let s = BigRational::from_integer(v.into()) + &c;
            let rest = &budget - &dec.diag[level] * &s * &s;
            descend(form, dec, level - 1, rest, x, bound, visit);
        }
    }
    x[level] = 0;
}

/// Exact half-widths `floor(sqrt(bound * (A^-1)_ii))` of the bounding box of
/// the ellipsoid `Q(x) <= bound`.
pub fn box_half_widths(form: &QuadForm, bound: i128) -> Vec<i64> {
    let inv = form.inverse();
    (0..form.dim())
        .map(|i| {
            let scaled = &inv[i][i] * BigRational::from_integer(BigInt::from(bound.max(0)));
            let fl = scaled.floor().to_integer();
            fl.sqrt().to_i64().expect("box half-width fits in i64")
        })
        .collect()
}

/// Calls `visit(x, Q(x))` for every `x` in the bounding box of `Q(x) <= bound`,
/// optionally skipping vectors with a zero coordinate. Points outside the
/// ellipsoid are visited too; callers filter on the value.
pub fn for_each_in_box<F: FnMut(&[i64], i128)>(
    form: &QuadForm,
    bound: i128,
    nonzero_only: bool,
    mut visit: F,
) {
    if bound < 0 {
        return;
    }
    let widths = box_half_widths(form, bound);
    if nonzero_only && widths.contains(&0) {
        return;
    }
    let start = |w: i64| -w;
    let mut x: Vec<i64> = widths.iter().map(|&w| start(w)).collect();
    loop {
        if !nonzero_only || x.iter().all(|&v| v != 0) {
            visit(&x, form.value(&x));
        }
        // odometer step
        let mut i = 0;
        loop {
            if i == x.len() {
                return;
            }
            x[i] += 1;
            if nonzero_only && x[i] == 0 {
                x[i] = 1;
            }
            if x[i] <= widths[i] {
                break;
            }
            x[i] = start(widths[i]);
            i += 1;
        }
    }
}
