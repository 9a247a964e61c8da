use num_complex::Complex64;
use std::f64::consts::PI;

use super::{power_geometric_sum, power_geometric_tail, Series, SeriesBudget};
use crate::arith::lcm;
use crate::error::{Error, Result};
use crate::exact::rational::{floor, to_f64};
use crate::exact::Rational;
use crate::sequences::PeriodicSequence;

fn max_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// A(z, s; A_α, B_β; r₁, r₂) = Σ_{m>-r₁} f(αm) Σ_{n≥1} f*(βn) e(n((m+r₁)z+r₂)/k) n^{s-1},
/// with k the common period of the two sequences.
#[allow(clippy::too_many_arguments)]
pub fn a_series(
    z: Complex64,
    s: Complex64,
    a: &PeriodicSequence,
    alpha: i64,
    b: &PeriodicSequence,
    beta: i64,
    r1: &Rational,
    r2: &Rational,
    budget: SeriesBudget,
) -> Result<Series> {
    if !(z.im > 0.0) {
        return Err(Error::Domain(format!("A-series needs Im z > 0, got {z}")));
    }
    let (fa, fb) = (a.embed(), b.embed());
    let (ka, kb) = (fa.len() as i64, fb.len() as i64);
    let k = lcm(ka, kb) as f64;
    let (amax, bmax) = (max_norm(&fa), max_norm(&fb));
    let zero = Series { value: Complex64::new(0.0, 0.0), achieved_tail: 0.0, terms: 0 };
    if amax == 0.0 || bmax == 0.0 {
        return Ok(zero);
    }
    let target = budget.tail_target;
    let sigma = s.re - 1.0;
    let big_q = (-2.0 * PI * z.im / k).exp();
    let m0 = i64::try_from(floor(&-r1)).map_err(|_| Error::Domain("r₁ out of range".into()))? + 1;
    let r1f = to_f64(r1);
    let r2f = to_f64(r2);
    let two_pi_i = Complex64::new(0.0, 2.0 * PI);
    let row_target = target * 1e-2 * (1.0 - big_q);

    let mut value = Complex64::new(0.0, 0.0);
    let mut inner_tails = 0.0;
    let mut terms = 0usize;
    let mut m = m0;
    loop {
        let x = m as f64 + r1f;
        let q = (-2.0 * PI * x * z.im / k).exp();
        let wa = fa[(alpha * m).rem_euclid(ka) as usize];
        if wa != Complex64::new(0.0, 0.0) {
            let step = (two_pi_i * (x * z + r2f) / k).exp();
            let mut ph = step;
            let mut row = Complex64::new(0.0, 0.0);
            let mut n = 1i64;
            loop {
                let wb = fb[(beta * n).rem_euclid(kb) as usize];
                if wb != Complex64::new(0.0, 0.0) {
                    row += wb * ph * ((s - 1.0) * (n as f64).ln()).exp();
                }
                terms += 1;
                n += 1;
                ph = if n % 64 == 0 { (two_pi_i * n as f64 * (x * z + r2f) / k).exp() } else { ph * step };
                let t = bmax * power_geometric_tail(sigma, q, n as f64);
                if t <= row_target {
                    inner_tails += wa.norm() * t;
                    break;
                }
                if terms > budget.max_terms {
                    return Err(Error::Accuracy { achieved: t, target });
                }
            }
            value += wa * row;
        }
        // every later row m' satisfies q_{m'} ≤ q·Q^{m'-m}
        let outer = amax * bmax * power_geometric_sum(sigma, q) * big_q / (1.0 - big_q);
        if outer + inner_tails <= target {
            return Ok(Series { value, achieved_tail: outer + inner_tails, terms });
        }
        if terms > budget.max_terms {
            return Err(Error::Accuracy { achieved: outer + inner_tails, target });
        }
        m += 1;
    }
}
