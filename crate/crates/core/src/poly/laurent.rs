use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::qpoly::{checked_add, checked_mul};
use super::QPoly;

/// A Laurent polynomial in `v = q^{1/2}` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HalfLaurent {
    #[serde(rename = "v_exps")]
    terms: BTreeMap<i32, i64>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c v^k`
    pub fn monomial(c: i64, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(k, c);
        }
        Self { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// Embeds `p(q)` as `p(v^2)`.
    pub fn from_qpoly(p: &QPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(d, &c)| (2 * d as i32, c)),
        )
    }

    /// Reads back a polynomial in `q`; `None` if any exponent of `v` is odd
    /// or negative.
    pub fn to_qpoly(&self) -> Option<QPoly> {
        let mut coeffs = Vec::new();
        for (&k, &c) in &self.terms {
            if k < 0 || k % 2 != 0 {
                return None;
            }
            let d = (k / 2) as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            coeffs[d] = c;
        }
        Some(QPoly::from_coeffs(coeffs))
    }

    pub fn add_term(&mut self, k: i32, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(k).or_insert(0);
        *entry = checked_add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&k);
        }
    }

    pub fn coeff(&self, k: i32) -> i64 {
        self.terms.get(&k).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_terms(self.terms().map(|(k, a)| (k, checked_mul(a, c))))
    }

    /// The ring involution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, &c)| (-k, c)).collect(),
        }
    }
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i == 0 {
                ""
            } else {
                "+"
            };
            let abs = c.unsigned_abs();
            match (k, abs) {
                (0, _) => write!(f, "{sign}{abs}")?,
                (_, 1) => write!(f, "{sign}v^{k}")?,
                _ => write!(f, "{sign}{abs}v^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HalfLaurent({self})")
    }
}

impl AddAssign<&HalfLaurent> for HalfLaurent {
    fn add_assign(&mut self, rhs: &HalfLaurent) {
        for (k, c) in rhs.terms() {
            self.add_term(k, c);
        }
    }
}

impl Add for &HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        self.scale(-1)
    }
}

impl Sub for &HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        self + &(-rhs)
    }
}

impl Mul for &HalfLaurent {
    type Output = HalfLaurent;
    // exponents add when monomials multiply
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        for (a, x) in self.terms() {
            for (b, y) in rhs.terms() {
                out.add_term(a + b, checked_mul(x, y));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bar_examples() {
        let v = HalfLaurent::monomial(1, 1);
        assert_eq!(v.bar(), HalfLaurent::monomial(1, -1));
        let three = HalfLaurent::monomial(3, 0);
        assert_eq!(three.bar(), three);
        let h = HalfLaurent::from_terms([(-3, 1), (1, 2)]);
        assert_eq!(h.bar().bar(), h);
    }

    #[test]
    fn json_shape() {
        let h = HalfLaurent::from_terms([(-3, 1), (1, 2)]);
        assert_eq!(
            serde_json::to_string(&h).unwrap(),
            r#"{"v_exps":{"-3":1,"1":2}}"#
        );
        let back: HalfLaurent = serde_json::from_str(r#"{"v_exps":{"-3":1,"1":2}}"#).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn qpoly_embedding() {
        let p = QPoly::from_coeffs(vec![1, 2]);
        let h = HalfLaurent::from_qpoly(&p);
        assert_eq!(h.coeff(2), 2);
        assert_eq!(h.to_qpoly(), Some(p));
        assert_eq!(HalfLaurent::monomial(1, 1).to_qpoly(), None);
    }

    fn small() -> impl Strategy<Value = HalfLaurent> {
        prop::collection::vec((-4i32..=4, -3i64..=3), 0..4).prop_map(HalfLaurent::from_terms)
    }

    proptest! {
        #[test]
        fn bar_is_involutive_ring_homomorphism(a in small(), b in small()) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
        }
    }
}
