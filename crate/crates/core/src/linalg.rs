//! Exact linear algebra over Laurent polynomials and their fraction field.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Signed};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::hecke::HeckeVector;
use crate::laurent::LaurentInt;

/// Sparse vector with integer-indexed coordinates.
pub type SparseVec = BTreeMap<usize, LaurentInt>;

/// T-basis coordinates of a Hecke element keyed by element index.
pub fn sparse_from_hecke(h: &HeckeVector) -> SparseVec {
    h.terms().map(|(w, c)| (w.index(), c.clone())).collect()
}

fn axpy(v: &mut SparseVec, c: &LaurentInt, x: &SparseVec) {
    for (&i, a) in x {
        let e = v.entry(i).or_default();
        *e += c * a;
        if e.is_zero() {
            v.remove(&i);
        }
    }
}

/// `±q^k` has an inverse in the Laurent ring.
fn unit_inverse(p: &LaurentInt) -> Option<LaurentInt> {
    match p.terms() {
        [(e, c)] if c.abs().is_one() => Some(LaurentInt::monomial(c.clone(), -e)),
        _ => None,
    }
}

/// Divides out the polynomial content and the common power of `q`.
fn normalize(v: &mut SparseVec) {
    let mut entries: Vec<&LaurentInt> = v.values().collect();
    entries.sort_by_key(|p| p.terms().len());
    let mut g = LaurentInt::zero();
    for p in entries {
        g = g.gcd(p);
        if g.is_one() {
            break;
        }
    }
    let shift = v.values().filter_map(LaurentInt::min_exp).min().unwrap_or(0);
    if g.is_one() && shift == 0 {
        return;
    }
    for p in v.values_mut() {
        *p = p.div_exact(&g).expect("content divides every entry").shift(-shift);
    }
}

/// Row-echelon basis of a subspace over the fraction field `Q(q)`, kept
/// fraction free: rows have Laurent entries and are reduced in insertion order.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    rows: Vec<(usize, SparseVec)>,
    /// Only coordinates below this index become pivots.
    pivot_limit: usize,
}

impl Default for EchelonBasis {
    fn default() -> Self {
        Self {
            rows: Vec::new(),
            pivot_limit: usize::MAX,
        }
    }
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    /// Coordinates at or above `limit` are carried along but never eliminated.
    pub fn with_pivot_limit(limit: usize) -> Self {
        Self {
            rows: Vec::new(),
            pivot_limit: limit,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The residue of `v` after elimination against all rows (up to a nonzero scalar).
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        for (pivot, row) in &self.rows {
            let Some(a) = v.get(pivot).cloned() else {
                continue;
            };
            let p = &row[pivot];
            if let Some(inv) = unit_inverse(p) {
                axpy(&mut v, &-(&a * &inv), row);
            } else {
                let g = a.gcd(p);
                let (a, p) = (
                    a.div_exact(&g).expect("gcd divides"),
                    p.div_exact(&g).expect("gcd divides"),
                );
                for c in v.values_mut() {
                    *c = &*c * &p;
                }
                axpy(&mut v, &-a, row);
                normalize(&mut v);
            }
        }
        v
    }

    /// Adds `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = self.reduce(v);
        let limit = self.pivot_limit;
        if v.range(..limit).next().is_none() {
            return false;
        }
        let unit = v
            .range(..limit)
            .rev()
            .find_map(|(&i, p)| unit_inverse(p).map(|inv| (i, inv)));
        let pivot = match unit {
            Some((i, inv)) => {
                for c in v.values_mut() {
                    *c = &*c * &inv;
                }
                i
            }
            None => {
                normalize(&mut v);
                *v.range(..limit)
                    .min_by_key(|(&i, p)| (p.terms().len(), std::cmp::Reverse(i)))
                    .unwrap()
                    .0
            }
        };
        self.rows.push((pivot, v));
        true
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn insert_hecke(&mut self, h: &HeckeVector) -> bool {
        self.insert(sparse_from_hecke(h))
    }

    pub fn contains_hecke(&self, h: &HeckeVector) -> bool {
        self.contains(sparse_from_hecke(h))
    }
}

/// Coordinates modulo a subspace: expresses vectors as combinations of a
/// family that is independent modulo the subspace.
#[derive(Clone, Debug)]
pub struct QuotientSolver {
    dim: usize,
    family: usize,
    echelon: EchelonBasis,
}

impl QuotientSolver {
    /// `None` if `family` is dependent modulo the span of `subspace`.
    pub fn new(dim: usize, subspace: impl IntoIterator<Item = SparseVec>, family: &[SparseVec]) -> Option<Self> {
        let mut echelon = EchelonBasis::with_pivot_limit(dim);
        for v in subspace {
            echelon.insert(v);
        }
        for (k, v) in family.iter().enumerate() {
            let mut v = v.clone();
            v.insert(dim + k, LaurentInt::one());
            if !echelon.insert(v) {
                return None;
            }
        }
        Some(Self {
            dim,
            family: family.len(),
            echelon,
        })
    }

    /// Laurent coefficients `r` with `v - sum r_k family_k` in the subspace;
    /// `None` if there are none.
    pub fn solve(&self, v: &SparseVec) -> Option<Vec<LaurentInt>> {
        let tag = self.dim + self.family;
        let mut v = v.clone();
        v.insert(tag, LaurentInt::one());
        let residue = self.echelon.reduce(v);
        if residue.range(..self.dim).next().is_some() {
            return None;
        }
        let scale = residue.get(&tag)?;
        (0..self.family)
            .map(|k| match residue.get(&(self.dim + k)) {
                Some(c) => (-c).div_exact(scale),
                None => Some(LaurentInt::zero()),
            })
            .collect()
    }
}

/// Rank over `Q(q)` of a family of vectors.
pub fn rank<I: IntoIterator<Item = SparseVec>>(vectors: I) -> usize {
    let mut basis = EchelonBasis::new();
    for v in vectors {
        basis.insert(v);
    }
    basis.rank()
}

/// Dense matrix with Laurent polynomial entries.
#[derive(Clone, PartialEq, Eq)]
pub struct LMatrix {
    rows: usize,
    cols: usize,
    data: Vec<LaurentInt>,
}

impl LMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![LaurentInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &LaurentInt::one())
    }

    pub fn scalar(n: usize, c: &LaurentInt) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_columns(rows: usize, columns: &[Vec<LaurentInt>]) -> Self {
        let mut m = Self::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, c) in col.iter().enumerate() {
                m[(i, j)] = c.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<LaurentInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(LaurentInt::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &LaurentInt) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Product of a sequence of square matrices, left to right.
    pub fn product<'a>(n: usize, factors: impl IntoIterator<Item = &'a LMatrix>) -> Self {
        factors.into_iter().fold(Self::identity(n), |acc, m| acc.mul(m))
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| self[(i, i)].is_one() && (0..i).all(|j| self[(i, j)].is_zero()))
    }

    /// Inverse of an upper unitriangular matrix by back substitution.
    pub fn unitriangular_inverse(&self) -> Option<Self> {
        if !self.is_upper_unitriangular() {
            return None;
        }
        let n = self.rows;
        let mut inv = Self::identity(n);
        for j in 0..n {
            for i in (0..j).rev() {
                let mut acc = LaurentInt::zero();
                for k in i + 1..=j {
                    if !self[(i, k)].is_zero() && !inv[(k, j)].is_zero() {
                        acc += &self[(i, k)] * &inv[(k, j)];
                    }
                }
                inv[(i, j)] = -acc;
            }
        }
        Some(inv)
    }

    /// Row-major nested vectors.
    pub fn to_rows(&self) -> Vec<Vec<LaurentInt>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].clone()).collect())
            .collect()
    }
}

impl Index<(usize, usize)> for LMatrix {
    type Output = LaurentInt;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for LMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for LMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LMatrix {}x{}", self.rows, self.cols)?;
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Display for LMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect())
            .collect();
        let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in rows {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", cells.join("  "))?;
        }
        Ok(())
    }
}

impl Serialize for LMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for row in self.to_rows() {
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}
