use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::perm::Permutation;
use crate::poly::{HalfLaurent, QPoly};

/// An element `sum_w α_w T_w` of the Hecke algebra of `S_n`, with
/// coefficients in `Z[v, v^{-1}]`, `v = q^{1/2}`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, HalfLaurent>,
}

fn q() -> HalfLaurent {
    HalfLaurent::monomial(1, 2)
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element `T_w`.
    pub fn t(w: &Permutation) -> Self {
        let mut h = Self::zero(w.n());
        h.add_term(w.clone(), &HalfLaurent::one());
        h
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, w: &Permutation) -> HalfLaurent {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &HalfLaurent)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Permutation, c: &HalfLaurent) {
        debug_assert_eq!(w.n(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &HeckeElement, c: &HalfLaurent) {
        for (w, a) in &other.terms {
            self.add_term(w.clone(), &(a * c));
        }
    }

    pub fn scale(&self, c: &HalfLaurent) -> Self {
        let mut out = Self::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &HeckeElement) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &HalfLaurent::monomial(-1, 0));
        out
    }

    /// Right multiplication by `T_s`:
    /// `T_w T_s = T_{ws}` if `ws > w`, else `(q-1) T_w + q T_{ws}`.
    pub fn t_mul_gen(&self, s: usize) -> Self {
        let q_minus_one = HalfLaurent::from_terms([(2, 1), (0, -1)]);
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let ws = w.mul_gen_right(s);
            if w.has_right_descent(s) {
                out.add_term(w.clone(), &(c * &q_minus_one));
                out.add_term(ws, &(c * &q()));
            } else {
                out.add_term(ws, c);
            }
        }
        out
    }

    /// Right multiplication by `T_s^{-1} = q^{-1} T_s + (q^{-1} - 1) T_e`.
    pub fn t_mul_gen_inverse(&self, s: usize) -> Self {
        let mut out = self.t_mul_gen(s).scale(&HalfLaurent::monomial(1, -2));
        out.add_scaled(self, &HalfLaurent::from_terms([(-2, 1), (0, -1)]));
        out
    }

    /// Right multiplication by `C'_s = v^{-1}(T_e + T_s)`.
    pub fn mul_c_prime_s(&self, s: usize) -> Self {
        let mut out = self.t_mul_gen(s);
        out.add_scaled(self, &HalfLaurent::one());
        out.scale(&HalfLaurent::monomial(1, -1))
    }

    /// General product, expanding each `T_x` of `rhs` along a reduced word.
    pub fn mul(&self, rhs: &HeckeElement) -> Self {
        let mut out = Self::zero(self.n);
        for (x, c) in &rhs.terms {
            let mut part = self.clone();
            for &l in crate::perm::canonical_reduced_word(x).letters() {
                part = part.t_mul_gen(l as usize);
            }
            out.add_scaled(&part, c);
        }
        out
    }

    /// `v^{-l(w)} sum_x P_x(v^2) T_x`.
    pub fn from_kl_polys<'a>(
        w: &Permutation,
        polys: impl IntoIterator<Item = (&'a Permutation, &'a QPoly)>,
    ) -> Self {
        let shift = -(w.length() as i32);
        let mut out = Self::zero(w.n());
        for (x, p) in polys {
            out.add_term(x.clone(), &HalfLaurent::from_qpoly(p).shift(shift));
        }
        out
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "({c})T[{w}]")?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `C'_s = v^{-1}(T_e + T_s)`.
pub fn c_prime_s(s: usize, n: usize) -> HeckeElement {
    HeckeElement::t(&Permutation::identity(n)).mul_c_prime_s(s)
}

/// Memo of `ι(T_w) = (T_{w^{-1}})^{-1}` per element.
#[derive(Default)]
pub struct BarCache {
    images: HashMap<Permutation, HeckeElement>,
}

impl BarCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `ι(T_w) = ι(T_{ws}) T_s^{-1}` for a right descent `s` of `w`.
    pub fn iota_t(&mut self, w: &Permutation) -> HeckeElement {
        if let Some(h) = self.images.get(w) {
            return h.clone();
        }
        let h = match w.right_descents().next() {
            None => HeckeElement::t(w),
            Some(s) => self.iota_t(&w.mul_gen_right(s)).t_mul_gen_inverse(s),
        };
        self.images.insert(w.clone(), h.clone());
        h
    }

    /// `ι(sum α_w T_w) = sum bar(α_w) ι(T_w)`.
    pub fn bar_element(&mut self, h: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero(h.n());
        for (w, c) in h.terms() {
            let image = self.iota_t(w);
            out.add_scaled(&image, &c.bar());
        }
        out
    }
}

pub fn bar_element(h: &HeckeElement) -> HeckeElement {
    BarCache::new().bar_element(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Word;

    fn e(n: usize) -> Permutation {
        Permutation::identity(n)
    }

    #[test]
    fn generator_multiplication() {
        let s1 = Permutation::generator(1, 3).unwrap();
        assert_eq!(HeckeElement::t(&e(3)).t_mul_gen(1), HeckeElement::t(&s1));

        let sq = HeckeElement::t(&s1).t_mul_gen(1);
        assert_eq!(sq.coeff(&s1), HalfLaurent::from_terms([(2, 1), (0, -1)]));
        assert_eq!(sq.coeff(&e(3)), HalfLaurent::monomial(1, 2));
        assert_eq!(sq.len(), 2);

        let s1s2: Permutation = Word::parse("1 2", Some(3)).unwrap().apply();
        assert_eq!(HeckeElement::t(&s1).t_mul_gen(2), HeckeElement::t(&s1s2));
    }

    #[test]
    fn inverse_generator_undoes_generator() {
        let h = HeckeElement::t(&"2,3,1".parse().unwrap());
        assert_eq!(h.t_mul_gen(1).t_mul_gen_inverse(1), h);
        assert_eq!(h.t_mul_gen_inverse(2).t_mul_gen(2), h);
    }

    #[test]
    fn braid_relation_in_t_basis() {
        let start = HeckeElement::t(&e(4));
        let along = |letters: &[usize]| letters.iter().fold(start.clone(), |h, &s| h.t_mul_gen(s));
        assert_eq!(along(&[1, 2, 1]), along(&[2, 1, 2]));
        assert_eq!(along(&[1, 3]), along(&[3, 1]));
        assert_eq!(along(&[2, 3, 2, 1]), along(&[3, 2, 3, 1]));
    }

    #[test]
    fn bar_examples() {
        let t_e = HeckeElement::t(&e(3));
        assert_eq!(bar_element(&t_e), t_e);
        let cs = c_prime_s(1, 3);
        assert_eq!(bar_element(&cs), cs);
        let h = HeckeElement::t(&"3,1,2".parse().unwrap())
            .scale(&HalfLaurent::from_terms([(3, 2), (-1, 1)]));
        assert_eq!(bar_element(&bar_element(&h)), h);
    }

    #[test]
    fn c_prime_s_squares() {
        let cs = c_prime_s(2, 3);
        assert_eq!(cs.coeff(&e(3)), HalfLaurent::monomial(1, -1));
        let sq = cs.mul_c_prime_s(2);
        assert_eq!(sq, cs.scale(&HalfLaurent::from_terms([(1, 1), (-1, 1)])));
        assert_eq!(cs.mul(&cs), sq);
    }
}
