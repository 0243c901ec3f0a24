//! Type A: partitions, tableaux, Robinson-Schensted, the Murphy basis and
//! the passage between Murphy and W-graph bases of `S^λ`.
//!
//! Permutations are functions composed right to left and written in one-line
//! notation `[w(1), ..., w(n)]`; `s_i` swaps `i` and `i+1`, so `w s_i` swaps
//! positions `i`, `i+1` of the one-line word.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::cellular::CellularDatum;
use crate::coxeter::{CoxeterGroup, GenSet, GroupElement, Side};
use crate::error::{Error, Result};
use crate::hecke::HeckeVector;
use crate::kl::KlTable;
use crate::laurent::LaurentInt;
use crate::linalg::{sparse_from_hecke, LMatrix, QuotientSolver};
use crate::parabolic::{EjClass, ParabolicSystem};
use crate::wgraph::WGraph;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition("parts must be weakly decreasing".into()));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Self {
        let parts = (0..self.parts[0])
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Self { parts }
    }

    /// Prefix sums of `self` are bounded by those of `other`.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        let prefix = |p: &Partition, k: usize| p.parts.iter().take(k).sum::<usize>();
        Ok((1..=self.parts.len().max(other.parts.len())).all(|k| prefix(self, k) <= prefix(other, k)))
    }

    /// Generators `s_i` with `i`, `i+1` in the same row of the row-reading tableau.
    pub fn row_stabilizer(&self) -> GenSet {
        let mut j = GenSet::EMPTY;
        let mut start = 0;
        for &p in &self.parts {
            for i in start..start + p - 1 {
                j = j.with(i);
            }
            start += p;
        }
        j
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part `{p}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// A filling of a Young diagram by `1..n`, stored row by row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

/// Descent data of a tableau: `i ∈ I` when `i+1` sits in a lower row than `i`;
/// `I1` when directly below, `I0` when lower and strictly to the left.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableauDescents {
    pub i: BTreeSet<usize>,
    pub i0: BTreeSet<usize>,
    pub i1: BTreeSet<usize>,
}

impl Tableau {
    /// Validates the shape and that the entries are exactly `1..n`.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        Partition::new(rows.iter().map(Vec::len).collect())?;
        let mut all: Vec<usize> = rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.iter().enumerate().any(|(i, &v)| v != i + 1) {
            return Err(Error::InvalidPartition("entries must be 1..n".into()));
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(Vec::len).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// `1..n` filled along rows.
    pub fn row_reading(shape: &Partition) -> Self {
        let mut k = 0;
        Self {
            rows: shape
                .parts
                .iter()
                .map(|&p| {
                    k += p;
                    (k - p + 1..=k).collect()
                })
                .collect(),
        }
    }

    /// `1..n` filled down columns.
    pub fn column_reading(shape: &Partition) -> Self {
        Self::row_reading(&shape.conjugate()).transpose()
    }

    pub fn transpose(&self) -> Self {
        let shape = self.shape().conjugate();
        Self {
            rows: (0..shape.parts.len())
                .map(|c| (0..shape.parts[c]).map(|r| self.rows[r][c]).collect())
                .collect(),
        }
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_standard(&self) -> bool {
        self.is_row_standard()
            && (1..self.rows.len()).all(|r| (0..self.rows[r].len()).all(|c| self.rows[r - 1][c] < self.rows[r][c]))
    }

    /// `(row, column)` of entry `k`.
    pub fn position(&self, k: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&v| v == k) {
                return (r, c);
            }
        }
        panic!("entry {k} not in tableau")
    }

    pub fn descents(&self) -> TableauDescents {
        let mut d = TableauDescents {
            i: BTreeSet::new(),
            i0: BTreeSet::new(),
            i1: BTreeSet::new(),
        };
        for k in 1..self.n() {
            let (r0, c0) = self.position(k);
            let (r1, c1) = self.position(k + 1);
            if r1 > r0 {
                d.i.insert(k);
                if c1 == c0 && r1 == r0 + 1 {
                    d.i1.insert(k);
                } else {
                    d.i0.insert(k);
                }
            }
        }
        d
    }

    /// Entries read along rows, top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Standard tableaux of shape `shape`, in lexicographic order of their rows.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn go(shape: &mut Vec<usize>, n: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if n == 0 {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let removable = shape[r] > 0 && (r + 1 == shape.len() || shape[r + 1] < shape[r]);
            if removable {
                shape[r] -= 1;
                let c = shape[r];
                rows[r][c] = n;
                go(shape, n - 1, rows, out);
                shape[r] += 1;
            }
        }
    }
    let mut rows: Vec<Vec<usize>> = shape.parts.iter().map(|&p| vec![0; p]).collect();
    let mut out = Vec::new();
    go(&mut shape.parts.clone(), shape.n(), &mut rows, &mut out);
    out.sort();
    out
}

/// One-line notation of `w`.
pub fn permutation(group: &CoxeterGroup, w: GroupElement) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=group.rank() + 1).collect();
    for &s in group.word(w) {
        p.swap(s as usize, s as usize + 1);
    }
    p
}

/// The element with one-line notation `perm`.
pub fn element_of_permutation(group: &CoxeterGroup, perm: &[usize]) -> Result<GroupElement> {
    let n = group.rank() + 1;
    let mut sorted = perm.to_vec();
    sorted.sort_unstable();
    if perm.len() != n || sorted.iter().enumerate().any(|(i, &v)| v != i + 1) {
        return Err(Error::Parse(format!("not a permutation of 1..{n}")));
    }
    let mut p = perm.to_vec();
    let mut word = Vec::new();
    while let Some(i) = (0..n - 1).find(|&i| p[i] > p[i + 1]) {
        p.swap(i, i + 1);
        word.push(i);
    }
    word.reverse();
    group.from_word(&word)
}

/// `d(t)`: the permutation with `d(t) t^λ = t`, whose one-line form is the row reading of `t`.
pub fn coset_word(group: &CoxeterGroup, t: &Tableau) -> Result<GroupElement> {
    if !t.is_row_standard() {
        return Err(Error::NotRowStandard);
    }
    element_of_permutation(group, &t.reading_word())
}

/// Row-insertion Robinson-Schensted: `(P, Q)` of a one-line permutation.
pub fn rs_insert(perm: &[usize]) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in perm.iter().enumerate() {
        let mut x = x;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            match p[r].iter().position(|&y| y > x) {
                Some(c) => {
                    x = std::mem::replace(&mut p[r][c], x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push(step + 1);
                    break;
                }
            }
        }
    }
    (Tableau { rows: p }, Tableau { rows: q })
}

/// Which of the four classes an `E_{J(λ)}` element falls into under `s_i`, read off tableaux.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TableauClasses {
    pub minus: Vec<Tableau>,
    pub plus: Vec<Tableau>,
    pub zero_minus: Vec<Tableau>,
    pub zero_plus: Vec<Tableau>,
}

/// Per-shape data: `J(λ)`, `w_λ` and tableaux in `(l(d(t)), ShortLex)` order.
#[derive(Debug)]
pub struct ShapeData {
    pub lambda: Partition,
    pub j: GenSet,
    pub w_j: GroupElement,
    pub w_lambda: GroupElement,
    pub tableaux: Vec<Tableau>,
    /// `d(t)` for each tableau.
    pub coset_words: Vec<GroupElement>,
    /// `d(t) w_{J(λ)}` for each tableau; together a left cell.
    pub cell: Vec<GroupElement>,
    system: Arc<ParabolicSystem>,
}

impl ShapeData {
    pub fn system(&self) -> &Arc<ParabolicSystem> {
        &self.system
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    fn check_generator(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.lambda.n() {
            return Err(Error::GeneratorOutOfRange(i));
        }
        Ok(())
    }

    /// Classes under `s_i` (1-based) read off descent sets of `t` and `t'`.
    pub fn classes(&self, i: usize) -> Result<TableauClasses> {
        self.check_generator(i)?;
        let mut out = TableauClasses::default();
        for t in &self.tableaux {
            let (d, dc) = (t.descents(), t.transpose().descents());
            if dc.i0.contains(&i) {
                out.minus.push(t.clone());
            }
            if d.i0.contains(&i) {
                out.plus.push(t.clone());
            }
            if dc.i1.contains(&i) {
                out.zero_minus.push(t.clone());
            }
            if d.i1.contains(&i) {
                out.zero_plus.push(t.clone());
            }
        }
        Ok(out)
    }

    /// The class of `d(t) w_{J(λ)}` under `s_i` (1-based), computed in the group.
    pub fn classify(&self, t: usize, i: usize) -> Result<EjClass> {
        self.check_generator(i)?;
        self.system.classify_ej(i - 1, self.cell[t])
    }

    /// `p_{t,s} = -P_{t,s}/q` off the diagonal, zero on it.
    pub fn lowered(p: &LMatrix) -> LMatrix {
        let mut out = LMatrix::zero(p.rows(), p.cols());
        for a in 0..p.rows() {
            for b in a + 1..p.cols() {
                out[(a, b)] = -p[(a, b)].shift(-1);
            }
        }
        out
    }
}

/// `S^λ`: the images of `m_t = T_{d(t)} C_{w_{J(λ)}}` modulo the span of all
/// `m_uv` of shapes strictly dominating `λ`.
#[derive(Debug)]
pub struct SpechtLambda {
    solver: QuotientSolver,
    actions: Vec<LMatrix>,
}

impl SpechtLambda {
    /// Matrix of `T_i` (1-based) on the basis `m_t`.
    pub fn action(&self, i: usize) -> Result<LMatrix> {
        self.actions
            .get(i.wrapping_sub(1))
            .cloned()
            .ok_or(Error::GeneratorOutOfRange(i))
    }

    pub fn actions(&self) -> &[LMatrix] {
        &self.actions
    }

    /// Coordinates of the image of `h` in the basis `m_t`, if `h` lies in
    /// their span plus the dominance ideal.
    pub fn coordinates(&self, h: &HeckeVector) -> Option<Vec<LaurentInt>> {
        self.solver.solve(&sparse_from_hecke(h))
    }
}

/// `S_n` as the Coxeter group `A_{n-1}` with its cellular data.
#[derive(Debug)]
pub struct TypeAContext {
    n: usize,
    group: Arc<CoxeterGroup>,
    datum: CellularDatum,
    kl: OnceLock<KlTable>,
}

impl TypeAContext {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidPartition("type A computations need n >= 2".into()));
        }
        let group = Arc::new(CoxeterGroup::named(&format!("A{}", n - 1))?);
        let datum = CellularDatum::new(&group)?;
        Ok(Self {
            n,
            group,
            datum,
            kl: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &Arc<CoxeterGroup> {
        &self.group
    }

    pub fn datum(&self) -> &CellularDatum {
        &self.datum
    }

    /// Classical KL data of the whole group, computed on first use.
    pub fn kl(&self) -> &KlTable {
        self.kl.get_or_init(|| KlTable::compute(&self.group))
    }

    fn check_size(&self, lambda: &Partition) -> Result<()> {
        if lambda.n() != self.n {
            return Err(Error::SizeMismatch(lambda.n(), self.n));
        }
        Ok(())
    }

    pub fn shape(&self, lambda: &Partition) -> Result<ShapeData> {
        self.check_size(lambda)?;
        let g = &self.group;
        let j = lambda.row_stabilizer();
        let system = Arc::clone(self.datum.system(j));
        let mut keyed: Vec<(GroupElement, Tableau)> = standard_tableaux(lambda)
            .into_iter()
            .map(|t| Ok((coset_word(g, &t)?, t)))
            .collect::<Result<_>>()?;
        keyed.sort();
        let coset_words: Vec<GroupElement> = keyed.iter().map(|(d, _)| *d).collect();
        let cell = coset_words.iter().map(|&d| g.multiply(d, system.w_j())).collect();
        Ok(ShapeData {
            lambda: lambda.clone(),
            j,
            w_j: system.w_j(),
            w_lambda: coset_word(g, &Tableau::column_reading(lambda))?,
            tableaux: keyed.into_iter().map(|(_, t)| t).collect(),
            coset_words,
            cell,
            system,
        })
    }

    /// `{d w_{J(λ)} : d a prefix of w_λ}`, in ShortLex order.
    pub fn ej_lambda(&self, lambda: &Partition) -> Result<Vec<GroupElement>> {
        self.check_size(lambda)?;
        let g = &self.group;
        let w_lambda = coset_word(g, &Tableau::column_reading(lambda))?;
        let w_j = g.longest_element(lambda.row_stabilizer());
        let mut out: Vec<GroupElement> = g
            .elements()
            .filter(|&d| g.weak_left_leq(d, w_lambda))
            .map(|d| g.multiply(d, w_j))
            .collect();
        out.sort();
        Ok(out)
    }

    fn shape_murphy(&self, shape: &ShapeData) -> Result<Vec<HeckeVector>> {
        let mut out = Vec::with_capacity(shape.dim() * shape.dim());
        for &s in &shape.coset_words {
            for &t in &shape.coset_words {
                out.push(self.datum.murphy_element(shape.j, s, t)?);
            }
        }
        Ok(out)
    }

    /// Span of `m_uv` over shapes strictly dominating `lambda`.
    pub fn dominance_ideal(&self, lambda: &Partition) -> Result<Vec<HeckeVector>> {
        let mut out = Vec::new();
        for mu in partitions(self.n) {
            if mu != *lambda && lambda.dominated_by(&mu)? {
                out.extend(self.shape_murphy(&self.shape(&mu)?)?);
            }
        }
        Ok(out)
    }

    pub fn specht(&self, shape: &ShapeData) -> Result<SpechtLambda> {
        let g = &self.group;
        let ideal = self.dominance_ideal(&shape.lambda)?;
        let c = shape.system.c_wj();
        let basis: Vec<HeckeVector> = shape
            .coset_words
            .iter()
            .map(|&d| HeckeVector::basis(g, d).t_mul(&c))
            .collect::<Result<_>>()?;
        let family: Vec<_> = basis.iter().map(sparse_from_hecke).collect();
        let solver = QuotientSolver::new(g.order(), ideal.iter().map(sparse_from_hecke), &family)
            .ok_or_else(|| Error::RecursionStuck(format!("m_t are dependent modulo the ideal of {}", shape.lambda)))?;
        let k = shape.dim();
        let actions = (0..g.rank())
            .map(|s| {
                let columns = basis
                    .iter()
                    .map(|m| {
                        solver
                            .solve(&sparse_from_hecke(&m.t_mul_generator(s, Side::Left)))
                            .ok_or_else(|| {
                                Error::RecursionStuck(format!("T_{} m_t leaves the span for {}", s + 1, shape.lambda))
                            })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(LMatrix::from_columns(k, &columns))
            })
            .collect::<Result<_>>()?;
        Ok(SpechtLambda { solver, actions })
    }

    /// `(P, P^-1)`: column `s` of `P` expresses the image of `C_{d(s) w_{J(λ)}}` in the basis `m_t`.
    pub fn transition(&self, shape: &ShapeData, specht: &SpechtLambda) -> Result<(LMatrix, LMatrix)> {
        let kl = self.kl();
        let columns = shape
            .cell
            .iter()
            .map(|&x| {
                specht.coordinates(&kl.c(x)).ok_or_else(|| {
                    Error::RecursionStuck(format!("C_{} has no image in S^{}", self.group.format(x), shape.lambda))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let p = LMatrix::from_columns(shape.dim(), &columns);
        let inv = p
            .unitriangular_inverse()
            .ok_or_else(|| Error::RecursionStuck("transition matrix is not unitriangular".into()))?;
        Ok((p, inv))
    }

    /// The W-graph of the left cell `{d(t) w_{J(λ)}}`, vertices in tableau order.
    pub fn cell_wgraph(&self, shape: &ShapeData) -> WGraph {
        let kl = self.kl();
        let vertices = shape
            .cell
            .iter()
            .map(|&x| WGraph::element_vertex(&self.group, x))
            .collect();
        let k = shape.dim();
        let edges = (0..k).flat_map(|a| (a + 1..k).map(move |b| ((a, b), kl.mu_sym(shape.cell[a], shape.cell[b]))));
        WGraph::new(self.group.spec().clone(), Some(shape.j), vertices, edges)
    }

    /// `m_st` for all pairs of standard tableaux of equal shape.
    pub fn murphy_basis(&self, cap: usize) -> Result<Vec<MurphyElement>> {
        let size: usize = (1..=self.n).product();
        if size > cap {
            return Err(Error::TooLarge {
                what: "Murphy basis size".into(),
                size,
                cap,
            });
        }
        let mut out = Vec::with_capacity(size);
        for lambda in partitions(self.n) {
            let shape = self.shape(&lambda)?;
            let mut elements = self.shape_murphy(&shape)?.into_iter();
            for s in &shape.tableaux {
                for t in &shape.tableaux {
                    out.push(MurphyElement {
                        lambda: lambda.clone(),
                        s: s.clone(),
                        t: t.clone(),
                        element: elements.next().expect("one element per pair"),
                    });
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct MurphyElement {
    pub lambda: Partition,
    pub s: Tableau,
    pub t: Tableau,
    pub element: HeckeVector,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn tab(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn partition_basics() {
        assert_eq!(partitions(1), vec![lam("1")]);
        assert_eq!(partitions(3), vec![lam("3"), lam("2,1"), lam("1,1,1")]);
        assert_eq!(partitions(5).len(), 7);
        assert!(lam("1,1,1").dominated_by(&lam("2,1")).unwrap());
        assert!(lam("2,1").dominated_by(&lam("3")).unwrap());
        assert!(!lam("2,2,2").dominated_by(&lam("3,1,1,1")).unwrap());
        assert!(!lam("3,1,1,1").dominated_by(&lam("2,2,2")).unwrap());
        assert!(lam("3,2").dominated_by(&lam("3,2")).unwrap());
        assert_eq!(lam("2,1").dominated_by(&lam("2")), Err(Error::SizeMismatch(3, 2)));
        assert_eq!(lam("4,2,1").conjugate(), lam("3,2,1,1"));
        assert!("2,3".parse::<Partition>().is_err());
        assert_eq!(lam("3,1").row_stabilizer(), GenSet(0b011));
    }

    #[test]
    fn tableau_basics() {
        assert_eq!(standard_tableaux(&lam("3")).len(), 1);
        assert_eq!(
            standard_tableaux(&lam("2,1")),
            vec![tab(&[&[1, 2], &[3]]), tab(&[&[1, 3], &[2]])]
        );
        assert_eq!(standard_tableaux(&lam("2,2")).len(), 2);
        let d = tab(&[&[1, 2], &[3]]).descents();
        assert_eq!(
            (d.i, d.i0, d.i1),
            (BTreeSet::from([2]), BTreeSet::from([2]), BTreeSet::new())
        );
        let d = tab(&[&[1, 3], &[2]]).descents();
        assert_eq!((d.i, d.i1.clone()), (BTreeSet::from([1]), BTreeSet::from([1])));
        assert_eq!(Tableau::column_reading(&lam("2,1")), tab(&[&[1, 3], &[2]]));
        assert_eq!(Tableau::row_reading(&lam("2,1")), tab(&[&[1, 2], &[3]]));
    }

    #[test]
    fn coset_words_and_rs() {
        let g = CoxeterGroup::named("A2").unwrap();
        let tl = Tableau::row_reading(&lam("2,1"));
        assert_eq!(coset_word(&g, &tl).unwrap(), g.identity());
        assert_eq!(coset_word(&g, &tab(&[&[1, 3], &[2]])).unwrap(), g.generator(1));
        assert_eq!(coset_word(&g, &tab(&[&[2, 1], &[3]])), Err(Error::NotRowStandard));
        let s2s1 = g.from_word(&[1, 0]).unwrap();
        assert_eq!(permutation(&g, s2s1), vec![3, 1, 2]);
        assert_eq!(element_of_permutation(&g, &[3, 1, 2]).unwrap(), s2s1);
        let (p, q) = rs_insert(&[3, 1, 2]);
        assert_eq!((p, q), (tab(&[&[1, 2], &[3]]), tab(&[&[1, 3], &[2]])));
        let (p, q) = rs_insert(&[1, 2, 3]);
        assert_eq!((p.clone(), q), (tab(&[&[1, 2, 3]]), tab(&[&[1, 2, 3]])));
        let (p, q) = rs_insert(&permutation(&g, g.longest()));
        assert_eq!((p.shape(), q.shape()), (lam("1,1,1"), lam("1,1,1")));
    }

    #[test]
    fn shape_21() {
        let ctx = TypeAContext::new(3).unwrap();
        let g = ctx.group();
        let shape = ctx.shape(&lam("2,1")).unwrap();
        let specht = ctx.specht(&shape).unwrap();
        assert_eq!(shape.w_lambda, g.generator(1));
        assert_eq!(
            ctx.ej_lambda(&lam("2,1")).unwrap(),
            vec![g.generator(0), g.from_word(&[1, 0]).unwrap()]
        );
        assert_eq!(ctx.ej_lambda(&lam("1,1,1")).unwrap(), vec![g.identity()]);
        assert_eq!(ctx.ej_lambda(&lam("3")).unwrap(), vec![g.longest()]);
        let lp = |s: &str| s.parse::<LaurentInt>().unwrap();
        let t1 = specht.action(1).unwrap();
        assert_eq!(t1.column(0), vec![lp("-q^-1"), lp("0")]);
        assert_eq!(t1.column(1), vec![lp("-q^2"), lp("q")]);
        assert_eq!(specht.action(2).unwrap().column(0), vec![lp("0"), lp("1")]);
        let (p, _) = ctx.transition(&shape, &specht).unwrap();
        assert_eq!(p[(0, 1)], lp("-q"));
        let c = shape.classes(2).unwrap();
        assert_eq!(c.plus, vec![Tableau::row_reading(&lam("2,1"))]);
        let c = shape.classes(1).unwrap();
        assert_eq!(c.zero_minus, vec![Tableau::row_reading(&lam("2,1"))]);
        assert_eq!(c.zero_plus, vec![Tableau::column_reading(&lam("2,1"))]);
    }

    #[test]
    fn murphy_small() {
        let ctx = TypeAContext::new(2).unwrap();
        let basis = ctx.murphy_basis(1000).unwrap();
        assert_eq!(basis.len(), 2);
        let g = ctx.group();
        let mut c1 = HeckeVector::basis(g, g.generator(0));
        c1.add_term(g.identity(), &"-q".parse().unwrap());
        assert_eq!(basis[0].element, c1);
        assert_eq!(basis[1].element, HeckeVector::basis(g, g.identity()));
        let ctx = TypeAContext::new(3).unwrap();
        assert_eq!(ctx.murphy_basis(1000).unwrap().len(), 6);
        assert!(TypeAContext::new(5).unwrap().murphy_basis(100).is_err());
    }
}
