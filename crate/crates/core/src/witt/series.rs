use std::fmt;

use super::trunc::TruncationSet;
use super::vector::WittVector;
use crate::error::{AlgebraError, Result};
use crate::exactalg::{RingDescriptor, Value};

/// A power series `c_0 + c_1 t + … + c_N t^N + O(t^{N+1})`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    ring: RingDescriptor,
    coeffs: Vec<Value>,
}

impl PowerSeries {
    /// Known coefficients `c_0..c_N`; the precision is `N + 1`.
    pub fn new(ring: RingDescriptor, coeffs: Vec<Value>) -> Result<Self> {
        for c in &coeffs {
            ring.validate(c)?;
        }
        Ok(PowerSeries { ring, coeffs })
    }

    pub fn from_i64s(ring: &RingDescriptor, coeffs: &[i64]) -> Result<Self> {
        PowerSeries::new(
            ring.clone(),
            coeffs.iter().map(|&c| ring.from_i64(c)).collect(),
        )
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Value] {
        &self.coeffs
    }

    /// Number of known coefficients; the series is known modulo `t^precision`.
    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// Product modulo `t^min(precision)`.
    pub fn try_mul(&self, other: &PowerSeries) -> Result<PowerSeries> {
        if self.ring != other.ring {
            return Err(AlgebraError::descriptor("series over different rings"));
        }
        let n = self.precision().min(other.precision());
        let r = &self.ring;
        let coeffs = (0..n)
            .map(|k| {
                (0..=k).fold(r.zero(), |acc, i| {
                    r.add(&acc, &r.mul(&self.coeffs[i], &other.coeffs[k - i]))
                })
            })
            .collect();
        Ok(PowerSeries {
            ring: r.clone(),
            coeffs,
        })
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.ring;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if r.is_zero(c) {
                continue;
            }
            let text = r.format_value(c);
            let compound = text.contains(' ');
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, text.clone()),
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let power = match k {
                0 => String::new(),
                1 => "t".to_string(),
                k => format!("t^{k}"),
            };
            match (power.is_empty(), mag.as_str()) {
                (true, _) => f.write_str(&mag)?,
                (false, "1") => f.write_str(&power)?,
                (false, _) if compound => write!(f, "({mag})*{power}")?,
                (false, _) => write!(f, "{mag}*{power}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.coeffs.len())
    }
}

/// `Π_{n ≤ N} (1 − a_n t^n) mod t^{N+1}` for a big Witt vector on `{1..N}`.
pub fn series_of(a: &WittVector) -> Result<PowerSeries> {
    if !a.trunc().is_big() {
        return Err(AlgebraError::descriptor(format!(
            "series presentation needs a truncation {{1..N}}, got {}",
            a.trunc()
        )));
    }
    let r = a.ring();
    let n = a.trunc().len();
    let mut coeffs = vec![r.zero(); n + 1];
    coeffs[0] = r.one();
    for (i, an) in a.values().iter().enumerate() {
        let deg = i + 1;
        // multiply by (1 - a_deg t^deg), high degrees first so each source is unmodified
        for k in (deg..=n).rev() {
            let delta = r.mul(an, &coeffs[k - deg]);
            coeffs[k] = r.sub(&coeffs[k], &delta);
        }
    }
    PowerSeries::new(r.clone(), coeffs)
}

/// The big Witt vector on `{1..N}` whose series is `s mod t^{N+1}`, found by
/// stripping the factors `1 − w_n t^n` in turn.
pub fn witt_of_series(s: &PowerSeries) -> Result<WittVector> {
    let r = s.ring();
    match s.coeffs().first() {
        Some(c) if r.is_one(c) => {}
        _ => {
            return Err(AlgebraError::SeriesFormat(
                "constant term must be 1".to_string(),
            ))
        }
    }
    let n = s.precision() - 1;
    let mut cur = s.coeffs().to_vec();
    let mut w = Vec::with_capacity(n);
    for deg in 1..=n {
        let wn = r.neg(&cur[deg]);
        // divide by (1 - w t^deg): c_k += w·c_{k-deg}, ascending
        for k in deg..=n {
            let delta = r.mul(&wn, &cur[k - deg]);
            cur[k] = r.add(&cur[k], &delta);
        }
        w.push(wn);
    }
    WittVector::new(TruncationSet::big(n as u32), r.clone(), w)
}
