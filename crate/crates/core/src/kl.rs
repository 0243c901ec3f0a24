//! Classical Kazhdan-Lusztig basis `C_w = T_w + sum_{y<w} p_{y,w} T_y`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterGroup, Generator, GroupElement, Side};
use crate::error::{Error, Result};
use crate::hecke::HeckeVector;
use crate::laurent::LaurentInt;

/// Bumped whenever the cache layout changes.
pub const CACHE_VERSION: u32 = 1;

/// Environment variable that overrides the cache directory.
pub const CACHE_DIR_ENV: &str = "HECKE_WGRAPH_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct KlTable {
    group: Arc<CoxeterGroup>,
    /// `columns[w]` holds `p_{y,w}` for every `y` in the support of `C_w`, including `p_{w,w} = 1`.
    columns: Vec<BTreeMap<GroupElement, LaurentInt>>,
    /// `mu[w]` lists `(y, mu(y,w))` for `y < w` with nonzero `mu`.
    mu: Vec<Vec<(GroupElement, i64)>>,
}

/// `(-q)^d * bar(P(q^2))`: converts a classical polynomial `P_{y,w}` with
/// `d = l(w) - l(y)` into the `p_{y,w}` normalization used here.
pub fn convert_kl_convention(p: &LaurentInt, length_diff: u32) -> LaurentInt {
    let sign = if length_diff.is_multiple_of(2) { 1 } else { -1 };
    p.subs_q_squared().bar().shift(length_diff as i32).scale(&sign.into())
}

fn mu_of(p: &LaurentInt) -> i64 {
    (-p.coeff(1)).to_i64().expect("mu fits in i64")
}

impl KlTable {
    /// Runs the recursion `C_w = (T_s - q) C_v - sum_{z<v, sz<z} mu(z,v) C_z`
    /// with `s` the least left descent of `w` and `v = sw`.
    pub fn compute(group: &Arc<CoxeterGroup>) -> Self {
        let g = group.as_ref();
        let n = g.order();
        let mut columns: Vec<BTreeMap<GroupElement, LaurentInt>> = Vec::with_capacity(n);
        let mut mu: Vec<Vec<(GroupElement, i64)>> = Vec::with_capacity(n);
        let minus_q = -LaurentInt::q();
        for w in g.elements() {
            let mut col: BTreeMap<GroupElement, LaurentInt> = BTreeMap::new();
            if w == g.identity() {
                col.insert(w, LaurentInt::one());
            } else {
                let s = g.descents(w, Side::Left).iter().next().expect("nontrivial element");
                let v = g.left_mul(s, w);
                let add = |col: &mut BTreeMap<GroupElement, LaurentInt>, y: GroupElement, c: LaurentInt| {
                    let e = col.entry(y).or_default();
                    *e += c;
                    if e.is_zero() {
                        col.remove(&y);
                    }
                };
                for (&y, p) in &columns[v.index()] {
                    let sy = g.left_mul(s, y);
                    add(&mut col, sy, p.clone());
                    if g.length(sy) < g.length(y) {
                        add(&mut col, y, p * &LaurentInt::q_minus_q_inv());
                    }
                    add(&mut col, y, p * &minus_q);
                }
                for &(z, m) in &mu[v.index()] {
                    if g.is_left_descent(s, z) {
                        for (&y, p) in &columns[z.index()] {
                            add(&mut col, y, p.scale(&(-m).into()));
                        }
                    }
                }
            }
            mu.push(
                col.iter()
                    .filter(|(&y, _)| y != w)
                    .map(|(&y, p)| (y, mu_of(p)))
                    .filter(|&(_, m)| m != 0)
                    .collect(),
            );
            columns.push(col);
        }
        Self {
            group: Arc::clone(group),
            columns,
            mu,
        }
    }

    pub fn group(&self) -> &Arc<CoxeterGroup> {
        &self.group
    }

    /// `p_{y,w}`; zero outside the support.
    pub fn p(&self, y: GroupElement, w: GroupElement) -> LaurentInt {
        self.columns[w.index()].get(&y).cloned().unwrap_or_default()
    }

    /// Nonzero `p_{y,w}` for fixed `w`, ordered by `y`.
    pub fn column(&self, w: GroupElement) -> &BTreeMap<GroupElement, LaurentInt> {
        &self.columns[w.index()]
    }

    /// `C_w` in the T-basis.
    pub fn c(&self, w: GroupElement) -> HeckeVector {
        HeckeVector::from_terms(
            &self.group,
            self.columns[w.index()].iter().map(|(&y, p)| (y, p.clone())),
        )
    }

    /// Coefficient of `q` in `-p_{y,w}`; zero unless `y < w`.
    pub fn mu(&self, y: GroupElement, w: GroupElement) -> i64 {
        if y == w {
            return 0;
        }
        mu_of(&self.p(y, w))
    }

    /// `(y, mu(y,w))` for `y < w` with nonzero `mu`.
    pub fn mu_column(&self, w: GroupElement) -> &[(GroupElement, i64)] {
        &self.mu[w.index()]
    }

    /// `mu` extended symmetrically to incomparable-by-length pairs: `mu(y,w)` if `y < w`,
    /// `mu(w,y)` if `w < y`.
    pub fn mu_sym(&self, a: GroupElement, b: GroupElement) -> i64 {
        if self.columns[b.index()].contains_key(&a) {
            self.mu(a, b)
        } else {
            self.mu(b, a)
        }
    }

    /// `T_s C_w` in C-coordinates: `-q^-1 C_w` if `sw < w`, otherwise
    /// `q C_w + C_{sw} + sum_{y<w, sy<y} mu(y,w) C_y`.
    pub fn c_mul_generator(&self, s: Generator, w: GroupElement) -> BTreeMap<GroupElement, LaurentInt> {
        let g = self.group.as_ref();
        let mut out = BTreeMap::new();
        if g.is_left_descent(s, w) {
            out.insert(w, -LaurentInt::q_inv());
            return out;
        }
        out.insert(w, LaurentInt::q());
        out.insert(g.left_mul(s, w), LaurentInt::one());
        for &(y, m) in self.mu_column(w) {
            if g.is_left_descent(s, y) {
                out.insert(y, LaurentInt::from(m));
            }
        }
        out
    }

    /// Loads the table from `dir` if a valid cache file exists, else computes and stores it.
    pub fn load_or_compute(group: &Arc<CoxeterGroup>, dir: Option<&Path>) -> Result<Self> {
        let Some(dir) = dir else {
            return Ok(Self::compute(group));
        };
        let path = Self::cache_path(dir, group);
        if path.exists() {
            if let Ok(table) = Self::load(group, &path) {
                return Ok(table);
            }
        }
        let table = Self::compute(group);
        fs::create_dir_all(dir)?;
        table.save(&path)?;
        Ok(table)
    }

    pub fn cache_path(dir: &Path, group: &CoxeterGroup) -> PathBuf {
        dir.join(format!("kl-{}.json", &group.spec().content_hash()[..16]))
    }

    pub fn to_cache_json(&self) -> String {
        let file = CacheFile {
            version: CACHE_VERSION,
            matrix_hash: self.group.spec().content_hash(),
            order: self.group.order(),
            columns: self
                .columns
                .iter()
                .map(|col| col.iter().map(|(y, p)| (y.index(), p.clone())).collect())
                .collect(),
        };
        serde_json::to_string(&file).expect("serializable")
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_cache_json())?;
        Ok(())
    }

    /// Reads a cache file; rejects version, hash or size mismatches.
    pub fn load(group: &Arc<CoxeterGroup>, path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let file: CacheFile = serde_json::from_str(&text).map_err(|e| Error::Cache(e.to_string()))?;
        if file.version != CACHE_VERSION {
            return Err(Error::Cache(format!("version {} != {}", file.version, CACHE_VERSION)));
        }
        if file.matrix_hash != group.spec().content_hash() {
            return Err(Error::Cache("matrix hash mismatch".into()));
        }
        if file.order != group.order() || file.columns.len() != group.order() {
            return Err(Error::Cache("group order mismatch".into()));
        }
        let mut columns = Vec::with_capacity(file.columns.len());
        let mut mu = Vec::with_capacity(file.columns.len());
        for (w, col) in file.columns.into_iter().enumerate() {
            let mut map = BTreeMap::new();
            for (y, p) in col {
                let y = group.element(y).map_err(|e| Error::Cache(e.to_string()))?;
                if !p.is_zero() {
                    map.insert(y, p);
                }
            }
            mu.push(
                map.iter()
                    .filter(|(y, _)| y.index() != w)
                    .map(|(&y, p)| (y, mu_of(p)))
                    .filter(|&(_, m)| m != 0)
                    .collect(),
            );
            columns.push(map);
        }
        Ok(Self {
            group: Arc::clone(group),
            columns,
            mu,
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct CacheFile {
    version: u32,
    matrix_hash: String,
    order: usize,
    columns: Vec<Vec<(usize, LaurentInt)>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentInt {
        s.parse().unwrap()
    }

    fn setup(name: &str) -> (Arc<CoxeterGroup>, KlTable) {
        let g = Arc::new(CoxeterGroup::named(name).unwrap());
        let kl = KlTable::compute(&g);
        (g, kl)
    }

    #[test]
    fn a2_examples() {
        let (g, kl) = setup("A2");
        let e = g.identity();
        assert_eq!(kl.c(e), HeckeVector::basis(&g, e));
        let s1 = g.generator(0);
        assert_eq!(kl.p(e, s1), lp("-q"));
        let w0 = g.longest();
        for y in g.elements() {
            let d = (3 - g.length(y)) as i32;
            assert_eq!(kl.p(y, w0), LaurentInt::monomial(if d % 2 == 0 { 1 } else { -1 }, d));
        }
        assert_eq!(kl.mu(e, s1), 1);
        assert_eq!(kl.mu(s1, w0), 0);
        assert_eq!(kl.mu(s1, g.from_word(&[1, 0]).unwrap()), 1);
    }

    #[test]
    fn c_mul_generator_examples() {
        let (g, kl) = setup("A2");
        let (s1, s2) = (g.generator(0), g.generator(1));
        assert_eq!(kl.c_mul_generator(0, s1), BTreeMap::from([(s1, lp("-q^-1"))]));
        let s2s1 = g.from_word(&[1, 0]).unwrap();
        assert_eq!(
            kl.c_mul_generator(1, s1),
            BTreeMap::from([(s1, lp("q")), (s2s1, lp("1"))])
        );
        let s1s2 = g.from_word(&[0, 1]).unwrap();
        assert_eq!(
            kl.c_mul_generator(0, s2),
            BTreeMap::from([(s2, lp("q")), (s1s2, lp("1"))])
        );
    }

    #[test]
    fn convention_conversion() {
        assert_eq!(convert_kl_convention(&lp("1"), 1), lp("-q"));
        assert_eq!(convert_kl_convention(&lp("1"), 2), lp("q^2"));
        assert_eq!(convert_kl_convention(&lp("1 + q"), 3), lp("-q^3 - q"));
        let (g, kl) = setup("A3");
        let x = g.from_word(&[1]).unwrap();
        let w = g.from_word(&[1, 0, 2, 1]).unwrap();
        assert_eq!(kl.p(x, w), convert_kl_convention(&lp("1 + q"), 3));
    }

    #[test]
    fn bar_invariance_and_degrees() {
        for name in ["A2", "A3", "B2", "B3", "I2(5)", "I2(7)"] {
            let (g, kl) = setup(name);
            for w in g.elements() {
                let c = kl.c(w);
                assert_eq!(c.bar(), c, "{name}");
                for (y, p) in c.terms() {
                    assert!(g.bruhat_leq(y, w));
                    if y != w {
                        assert!(p.in_q_zq());
                    } else {
                        assert!(p.is_one());
                    }
                }
            }
        }
    }

    #[test]
    fn c_mul_generator_reexpands() {
        for name in ["A3", "B3", "I2(7)"] {
            let (g, kl) = setup(name);
            for w in g.elements() {
                for s in 0..g.rank() {
                    let lhs = kl.c(w).t_mul_generator(s, Side::Left);
                    let mut rhs = HeckeVector::zero(&g);
                    for (y, c) in kl.c_mul_generator(s, w) {
                        rhs.axpy(&c, &kl.c(y)).unwrap();
                    }
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn cache_round_trip_and_rejection() {
        let (g, kl) = setup("B3");
        let dir = tempfile::tempdir().unwrap();
        let loaded = KlTable::load_or_compute(&g, Some(dir.path())).unwrap();
        let path = KlTable::cache_path(dir.path(), &g);
        assert!(path.exists());
        let again = KlTable::load(&g, &path).unwrap();
        for w in g.elements() {
            assert_eq!(again.column(w), kl.column(w));
            assert_eq!(loaded.column(w), kl.column(w));
            assert_eq!(again.mu_column(w), kl.mu_column(w));
        }
        let other = Arc::new(CoxeterGroup::named("A3").unwrap());
        assert!(matches!(KlTable::load(&other, &path), Err(Error::Cache(_))));
    }
}
