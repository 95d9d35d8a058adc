use std::collections::HashMap;
use std::fs;
use std::io::Write as _;
use std::path::Path;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use super::element::{BarCache, HeckeElement};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{Degree, QPoly};
use crate::table::{PolyTable, TableRow};

/// `P_{x,w}` for every `x <= w`, together with `C'_w` in the T-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KlTable {
    w: Permutation,
    entries: PolyTable,
    c_prime: HeckeElement,
}

impl KlTable {
    fn from_entries(w: Permutation, entries: PolyTable) -> Result<Self> {
        let c_prime = HeckeElement::from_kl_polys(&w, entries.iter());
        let t = Self {
            w,
            entries,
            c_prime,
        };
        t.check_degrees()?;
        Ok(t)
    }

    fn check_degrees(&self) -> Result<()> {
        if !self.get(&self.w).is_one() {
            return Err(Error::Internal(format!("P_(w,w) != 1 for w = {}", self.w)));
        }
        let lw = self.w.length();
        for (x, p) in self.entries.iter() {
            if *x == self.w {
                continue;
            }
            let ok = match p.degree() {
                Degree::MinusInfinity => true,
                Degree::Finite(d) => x.length() < lw && 2 * d < lw - x.length(),
            };
            if !ok {
                return Err(Error::Internal(format!(
                    "degree bound fails for x = {x}, w = {}",
                    self.w
                )));
            }
        }
        Ok(())
    }

    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn get(&self, x: &Permutation) -> QPoly {
        self.entries.get(x)
    }

    pub fn entries(&self) -> &PolyTable {
        &self.entries
    }

    pub fn c_prime(&self) -> &HeckeElement {
        &self.c_prime
    }

    /// Coefficient of `q^{(l(w)-l(x)-1)/2}` in `P_{x,w}`, zero when that
    /// exponent is not an integer.
    pub fn mu(&self, x: &Permutation) -> i64 {
        let (lw, lx) = (self.w.length(), x.length());
        if lx >= lw || (lw - lx - 1) % 2 != 0 {
            return 0;
        }
        self.get(x).coeff_at((lw - lx - 1) / 2)
    }
}

#[derive(Serialize, Deserialize)]
struct CacheLine {
    w: Permutation,
    entries: Vec<TableRow>,
}

/// Memo of KL tables keyed by `w`. Readers share the lock; each new table
/// is inserted under a short exclusive write.
#[derive(Default)]
pub struct KlStore {
    tables: RwLock<HashMap<Permutation, Arc<KlTable>>>,
}

impl KlStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide store used by [`kl_table`].
    pub fn global() -> &'static KlStore {
        static STORE: OnceLock<KlStore> = OnceLock::new();
        STORE.get_or_init(KlStore::new)
    }

    pub fn len(&self) -> usize {
        self.tables.read().expect("store lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn lookup(&self, w: &Permutation) -> Option<Arc<KlTable>> {
        self.tables.read().expect("store lock").get(w).cloned()
    }

    fn insert(&self, t: KlTable) -> Arc<KlTable> {
        let mut guard = self.tables.write().expect("store lock");
        guard
            .entry(t.w.clone())
            .or_insert_with(|| Arc::new(t))
            .clone()
    }

    /// `C'_w = C'_{ws} C'_s - sum_{z < ws, zs < z} μ(z, ws) C'_z` for a right
    /// descent `s` of `w`.
    pub fn table(&self, w: &Permutation) -> Result<Arc<KlTable>> {
        if let Some(t) = self.lookup(w) {
            return Ok(t);
        }
        let Some(s) = w.right_descents().next() else {
            let entries = [(w.clone(), QPoly::one())].into_iter().collect();
            return Ok(self.insert(KlTable::from_entries(w.clone(), entries)?));
        };
        let v = w.mul_gen_right(s);
        let tv = self.table(&v)?;
        let mut c = tv.c_prime.mul_c_prime_s(s);
        for (z, _) in tv.entries.iter() {
            if z == &v || !z.has_right_descent(s) {
                continue;
            }
            let m = tv.mu(z);
            if m != 0 {
                let tz = self.table(z)?;
                c.add_scaled(&tz.c_prime, &crate::poly::HalfLaurent::monomial(-m, 0));
            }
        }
        let shift = w.length() as i32;
        let mut entries = PolyTable::new();
        for (x, coeff) in c.terms() {
            let p = coeff.shift(shift).to_qpoly().ok_or_else(|| {
                Error::Internal(format!("non-polynomial coefficient at {x} for w = {w}"))
            })?;
            entries.insert(x.clone(), p);
        }
        Ok(self.insert(KlTable::from_entries(w.clone(), entries)?))
    }

    /// Reads a cache file written by [`KlStore::save`]. Missing files are
    /// treated as empty.
    pub fn load(&self, path: &Path) -> Result<usize> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(Error::Cache(format!("{}: {e}", path.display()))),
        };
        let mut loaded = 0;
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let parsed: CacheLine = serde_json::from_str(line)
                .map_err(|e| Error::Cache(format!("line {}: {e}", lineno + 1)))?;
            let entries = parsed.entries.into_iter().map(|r| (r.x, r.poly)).collect();
            self.insert(KlTable::from_entries(parsed.w, entries)?);
            loaded += 1;
        }
        Ok(loaded)
    }

    /// One JSON object per line, ordered by length then one-line notation.
    pub fn to_cache_string(&self) -> String {
        let guard = self.tables.read().expect("store lock");
        let mut tables: Vec<&Arc<KlTable>> = guard.values().collect();
        tables.sort_by_cached_key(|t| t.w.table_key());
        let mut out = String::new();
        for t in tables {
            let line = CacheLine {
                w: t.w.clone(),
                entries: t
                    .entries
                    .sorted()
                    .into_iter()
                    .map(|(x, p)| TableRow {
                        x: x.clone(),
                        poly: p.clone(),
                    })
                    .collect(),
            };
            out.push_str(&serde_json::to_string(&line).expect("cache line serialises"));
            out.push('\n');
        }
        out
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
        let mut f = fs::File::create(path).map_err(io)?;
        f.write_all(self.to_cache_string().as_bytes()).map_err(io)
    }

    /// `ι(C'_w) = C'_w` for every table currently in the store.
    pub fn check_bar_invariance(&self) -> bool {
        let guard = self.tables.read().expect("store lock");
        let mut caches: HashMap<usize, BarCache> = HashMap::new();
        guard.values().all(|t| {
            let cache = caches.entry(t.w.n()).or_default();
            cache.bar_element(&t.c_prime) == t.c_prime
        })
    }
}

pub fn kl_table(w: &Permutation) -> Result<Arc<KlTable>> {
    KlStore::global().table(w)
}

pub fn kl_poly(x: &Permutation, w: &Permutation) -> Result<QPoly> {
    if x.n() != w.n() {
        return Err(Error::RankMismatch {
            left: x.n(),
            right: w.n(),
        });
    }
    Ok(kl_table(w)?.get(x))
}
