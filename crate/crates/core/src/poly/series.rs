//! Formal power series in an auxiliary variable `z` over `Z[q]`.

use super::QPoly;
use crate::error::{Error, Result};

/// A polynomial in `z` whose coefficients are polynomials in `q`; entry `k`
/// is the coefficient of `z^k`.
pub type ZPoly = Vec<QPoly>;

pub fn zpoly_mul(a: &[QPoly], b: &[QPoly]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![QPoly::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

/// Coefficient of `z^k` in `numerator / denominator`, by long division.
///
/// The constant term of the denominator must be `±1`.
pub fn rational_series_coeff(
    numerator: &[QPoly],
    denominator: &[QPoly],
    k: usize,
) -> Result<QPoly> {
    Ok(series_prefix(numerator, denominator, k + 1)?
        .pop()
        .unwrap_or_default())
}

/// The first `len` coefficients of `numerator / denominator`.
pub fn series_prefix(numerator: &[QPoly], denominator: &[QPoly], len: usize) -> Result<Vec<QPoly>> {
    let unit = match denominator.first().map(|d0| d0.coeffs()) {
        Some([1]) => 1,
        Some([-1]) => -1,
        _ => return Err(Error::NonInvertibleSeries),
    };
    let mut out: Vec<QPoly> = Vec::with_capacity(len);
    for m in 0..len {
        let mut acc = numerator.get(m).cloned().unwrap_or_default();
        for i in 1..=m.min(denominator.len().saturating_sub(1)) {
            acc = &acc - &(&denominator[i] * &out[m - i]);
        }
        out.push(acc.scale(unit));
    }
    Ok(out)
}

/// The generating function whose `z^m` coefficient is `P_{e,v}` for the
/// element `v` with a three-row diamond heap of width `m`:
///
/// `(-1 + q^2 z^2 + q^3 z^3) / ((1 + q z + q^2 z^2)(-1 + z + q z + q z^2 + q^2 z^2 + q^2 z^3 - q^4 z^4))`
#[derive(Clone, Debug)]
pub struct ThreeRowSeries {
    numerator: ZPoly,
    denominator: ZPoly,
}

impl Default for ThreeRowSeries {
    fn default() -> Self {
        Self::new()
    }
}

impl ThreeRowSeries {
    pub fn new() -> Self {
        let q = |c: Vec<i64>| QPoly::from_coeffs(c);
        let numerator = vec![
            q(vec![-1]),
            q(vec![]),
            q(vec![0, 0, 1]),
            q(vec![0, 0, 0, 1]),
        ];
        let left = vec![q(vec![1]), q(vec![0, 1]), q(vec![0, 0, 1])];
        let right = vec![
            q(vec![-1]),
            q(vec![1, 1]),
            q(vec![0, 1, 1]),
            q(vec![0, 0, 1]),
            q(vec![0, 0, 0, 0, -1]),
        ];
        Self {
            numerator,
            denominator: zpoly_mul(&left, &right),
        }
    }

    pub fn numerator(&self) -> &[QPoly] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[QPoly] {
        &self.denominator
    }

    pub fn coeff(&self, m: usize) -> QPoly {
        rational_series_coeff(&self.numerator, &self.denominator, m)
            .expect("constant term of the expanded denominator is -1")
    }
}
