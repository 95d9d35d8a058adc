use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::perm::Permutation;
use crate::poly::QPoly;

/// A map `x -> P_x` from permutations to polynomials. Absent keys are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyTable {
    entries: BTreeMap<Permutation, QPoly>,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct TableRow {
    pub x: Permutation,
    pub poly: QPoly,
}

impl PolyTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, x: &Permutation) -> QPoly {
        self.entries.get(x).cloned().unwrap_or_default()
    }

    pub fn get_ref(&self, x: &Permutation) -> Option<&QPoly> {
        self.entries.get(x)
    }

    pub fn insert(&mut self, x: Permutation, p: QPoly) {
        if p.is_zero() {
            self.entries.remove(&x);
        } else {
            self.entries.insert(x, p);
        }
    }

    pub fn add(&mut self, x: Permutation, p: &QPoly) {
        let sum = &self.get(&x) + p;
        self.insert(x, sum);
    }

    /// Pointwise sum; associative and commutative.
    pub fn merge(&mut self, other: &PolyTable) {
        for (x, p) in &other.entries {
            self.add(x.clone(), p);
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = &Permutation> {
        self.entries.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &QPoly)> {
        self.entries.iter()
    }

    /// Entries ordered by length, then one-line notation.
    pub fn sorted(&self) -> Vec<(&Permutation, &QPoly)> {
        let mut rows: Vec<_> = self.entries.iter().collect();
        rows.sort_by_cached_key(|(x, _)| x.table_key());
        rows
    }

    /// `sum_x P_x(1)`.
    pub fn total_at_one(&self) -> i64 {
        self.entries.values().map(|p| p.eval(1)).sum()
    }

    pub fn to_text(&self) -> String {
        self.sorted()
            .into_iter()
            .map(|(x, p)| format!("{x}\t{p}\n"))
            .collect()
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<TableRow> = self
            .sorted()
            .into_iter()
            .map(|(x, p)| TableRow {
                x: x.clone(),
                poly: p.clone(),
            })
            .collect();
        serde_json::to_string(&rows).expect("table serialises")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["x", "coeffs"]).expect("in-memory write");
        for (x, p) in self.sorted() {
            let coeffs: Vec<String> = p.coeffs().iter().map(i64::to_string).collect();
            w.write_record([x.to_string(), coeffs.join(" ")])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }
}

impl FromIterator<(Permutation, QPoly)> for PolyTable {
    fn from_iter<I: IntoIterator<Item = (Permutation, QPoly)>>(iter: I) -> Self {
        let mut t = PolyTable::new();
        for (x, p) in iter {
            t.add(x, &p);
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn export_formats() {
        let t: PolyTable = [
            ("2,1,3".parse().unwrap(), QPoly::one()),
            ("1,2,3".parse().unwrap(), QPoly::from_coeffs(vec![1, 2])),
        ]
        .into_iter()
        .collect();
        assert_eq!(
            t.to_json(),
            r#"[{"x":"1,2,3","poly":{"coeffs":[1,2]}},{"x":"2,1,3","poly":{"coeffs":[1]}}]"#
        );
        assert_eq!(t.to_csv(), "x,coeffs\n\"1,2,3\",1 2\n\"2,1,3\",1\n");
        assert_eq!(t.to_text(), "1,2,3\t1+2q\n2,1,3\t1\n");
        assert_eq!(t.total_at_one(), 4);
    }

    #[test]
    fn merge_is_pointwise_addition() {
        let x: Permutation = "2,1".parse().unwrap();
        let mut a = PolyTable::new();
        a.add(x.clone(), &QPoly::one());
        let mut b = PolyTable::new();
        b.add(x.clone(), &QPoly::monomial(1, 1));
        b.add(Permutation::identity(2), &QPoly::one());
        a.merge(&b);
        assert_eq!(a.get(&x), QPoly::one_plus_q());
        assert_eq!(a.len(), 2);
    }
}
