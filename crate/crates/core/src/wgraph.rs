//! W-graphs, their `τ_s` operators, relation checks and cells.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::sync::Arc;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use serde::Serialize;

use crate::coxeter::{CoxeterGroup, CoxeterSpec, GenSet, Generator, GroupElement, Side};
use crate::error::{Error, Result};
use crate::kl::KlTable;
use crate::laurent::LaurentInt;
use crate::linalg::LMatrix;
use crate::specht::{RelativeKl, SpechtModule};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub element: Option<GroupElement>,
    /// 1-based reduced word, empty for the identity.
    pub word: Vec<usize>,
    pub descents: GenSet,
}

impl Vertex {
    pub fn label(&self) -> String {
        if self.word.is_empty() {
            "e".into()
        } else {
            self.word.iter().map(|s| format!("s{s}")).collect()
        }
    }
}

/// A W-graph `(Γ, I, μ)` with symmetric integer edge weights.
#[derive(Clone, Debug)]
pub struct WGraph {
    spec: CoxeterSpec,
    j: Option<GenSet>,
    vertices: Vec<Vertex>,
    /// Keyed by `(a, b)` with `a < b`; zero weights are never stored.
    edges: BTreeMap<(usize, usize), i64>,
}

/// Outcome of the quadratic and braid checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WGraphReport {
    pub quadratic_failures: Vec<usize>,
    pub braid_failures: Vec<(usize, usize)>,
    pub checks: usize,
}

impl WGraphReport {
    pub fn passed(&self) -> bool {
        self.quadratic_failures.is_empty() && self.braid_failures.is_empty()
    }
}

/// Strongly connected components of the cell preorder, with the induced order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellPartition {
    /// Each cell sorted, cells ordered by their least vertex.
    pub cells: Vec<Vec<usize>>,
    /// `(a, b)`: some vertex of cell `a` lies directly below some vertex of cell `b`.
    pub order: Vec<(usize, usize)>,
}

impl CellPartition {
    pub fn cell_of(&self, v: usize) -> usize {
        self.cells
            .iter()
            .position(|c| c.contains(&v))
            .expect("vertex in some cell")
    }
}

impl WGraph {
    pub fn new(
        spec: CoxeterSpec,
        j: Option<GenSet>,
        vertices: Vec<Vertex>,
        edges: impl IntoIterator<Item = ((usize, usize), i64)>,
    ) -> Self {
        let mut map = BTreeMap::new();
        for ((a, b), mu) in edges {
            if mu != 0 && a != b {
                map.insert((a.min(b), a.max(b)), mu);
            }
        }
        Self {
            spec,
            j,
            vertices,
            edges: map,
        }
    }

    /// A vertex for `w` with its left descent set.
    pub fn element_vertex(group: &CoxeterGroup, w: GroupElement) -> Vertex {
        Vertex {
            element: Some(w),
            word: group.word_one_based(w),
            descents: group.descents(w, Side::Left),
        }
    }

    /// The W-graph of `S^J`: vertices `E_J` with left descent sets, weights from relative `mu`.
    pub fn from_specht(module: &SpechtModule, kl: &RelativeKl) -> Self {
        let g = module.group();
        let vertices = module.basis().iter().map(|&w| Self::element_vertex(g, w)).collect();
        let n = module.dim();
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| ((a, b), kl.mu_sym(a, b))));
        Self::new(g.spec().clone(), Some(module.system().j()), vertices, edges)
    }

    /// The W-graph of the regular representation in the C-basis.
    pub fn from_kl(kl: &KlTable) -> Self {
        let g = kl.group();
        let vertices = g.elements().map(|w| Self::element_vertex(g, w)).collect();
        let edges = g
            .elements()
            .flat_map(|w| kl.mu_column(w).iter().map(move |&(y, m)| ((y.index(), w.index()), m)));
        Self::new(g.spec().clone(), None, vertices, edges)
    }

    pub fn spec(&self) -> &CoxeterSpec {
        &self.spec
    }

    pub fn j(&self) -> Option<GenSet> {
        self.j
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.edges.iter().map(|(&k, &m)| (k, m))
    }

    pub fn mu(&self, a: usize, b: usize) -> i64 {
        self.edges.get(&(a.min(b), a.max(b))).copied().unwrap_or(0)
    }

    /// Overwrites one edge weight; zero removes the edge.
    pub fn set_mu(&mut self, a: usize, b: usize, mu: i64) {
        let key = (a.min(b), a.max(b));
        if mu == 0 {
            self.edges.remove(&key);
        } else {
            self.edges.insert(key, mu);
        }
    }

    /// `τ_s γ = -q^-1 γ` if `s ∈ I_γ`, else `q γ + sum_{s ∈ I_δ} μ(δ,γ) δ`.
    pub fn tau(&self, s: Generator) -> LMatrix {
        let n = self.len();
        let mut m = LMatrix::zero(n, n);
        for (c, v) in self.vertices.iter().enumerate() {
            if v.descents.contains(s) {
                m[(c, c)] = -LaurentInt::q_inv();
            } else {
                m[(c, c)] = LaurentInt::q();
            }
        }
        for (&(a, b), &mu) in &self.edges {
            let (ia, ib) = (&self.vertices[a].descents, &self.vertices[b].descents);
            if ia.contains(s) && !ib.contains(s) {
                m[(a, b)] = mu.into();
            }
            if ib.contains(s) && !ia.contains(s) {
                m[(b, a)] = mu.into();
            }
        }
        m
    }

    pub fn taus(&self) -> Vec<LMatrix> {
        (0..self.spec.rank()).map(|s| self.tau(s)).collect()
    }

    /// Exact checks of `(τ_s + q^-1)(τ_s - q) = 0` and the braid relations.
    pub fn verify(&self) -> WGraphReport {
        check_relations(&self.spec, &self.taus())
    }

    /// Cells: strongly connected components of the preorder generated by
    /// `x ≤ y` whenever `μ(x,y) ≠ 0` and `I_x ⊄ I_y`.
    pub fn cells(&self) -> CellPartition {
        let n = self.len();
        let mut graph: DiGraph<(), ()> = DiGraph::with_capacity(n, 2 * self.edges.len());
        let nodes: Vec<NodeIndex> = (0..n).map(|_| graph.add_node(())).collect();
        for (x, y) in self.preorder_edges() {
            graph.add_edge(nodes[x], nodes[y], ());
        }
        let mut cells: Vec<Vec<usize>> = tarjan_scc(&graph)
            .into_iter()
            .map(|c| {
                let mut v: Vec<usize> = c.into_iter().map(|i| i.index()).collect();
                v.sort_unstable();
                v
            })
            .collect();
        cells.sort();
        let mut id = vec![0usize; n];
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                id[v] = c;
            }
        }
        let order: BTreeSet<(usize, usize)> = self
            .preorder_edges()
            .map(|(x, y)| (id[x], id[y]))
            .filter(|(a, b)| a != b)
            .collect();
        CellPartition {
            cells,
            order: order.into_iter().collect(),
        }
    }

    /// Directed edges `x -> y` of the generating relation `x ≤ y`.
    pub fn preorder_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.keys().flat_map(move |&(a, b)| {
            let (ia, ib) = (self.vertices[a].descents, self.vertices[b].descents);
            let mut v = Vec::with_capacity(2);
            if !ia.is_subset(ib) {
                v.push((a, b));
            }
            if !ib.is_subset(ia) {
                v.push((b, a));
            }
            v
        })
    }

    /// Disjoint union of two graphs over the same Coxeter system.
    pub fn disjoint_union(&self, other: &WGraph) -> Result<WGraph> {
        if self.spec.matrix() != other.spec.matrix() {
            return Err(Error::MixedGroups);
        }
        let off = self.len();
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().cloned());
        let edges = self
            .edges()
            .chain(other.edges().map(|((a, b), m)| ((a + off, b + off), m)));
        Ok(WGraph::new(self.spec.clone(), None, vertices, edges))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let cells = self.cells();
        serde_json::json!({
            "J": self.j.map(|j| j.one_based()),
            "vertices": self.vertices.iter().map(|v| serde_json::json!({
                "word": v.word,
                "label": v.label(),
                "descents": v.descents.one_based(),
            })).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|(&(a, b), &mu)| serde_json::json!({
                "a": a, "b": b, "mu": mu,
            })).collect::<Vec<_>>(),
            "cells": cells.cells,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph wgraph {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let d: Vec<String> = v.descents.one_based().iter().map(|s| s.to_string()).collect();
            let _ = writeln!(out, "  {i} [label=\"{}|{}\"];", v.label(), d.join(","));
        }
        for (&(a, b), &mu) in &self.edges {
            let _ = writeln!(out, "  {a} -- {b} [label=\"{mu}\"];");
        }
        out.push_str("}\n");
        out
    }
}

/// Checks the quadratic relation for each matrix and the braid relation for each pair.
pub fn check_relations(spec: &CoxeterSpec, taus: &[LMatrix]) -> WGraphReport {
    let mut report = WGraphReport::default();
    let Some(n) = taus.first().map(LMatrix::rows) else {
        return report;
    };
    let q = LMatrix::scalar(n, &LaurentInt::q());
    let qi = LMatrix::scalar(n, &LaurentInt::q_inv());
    for (s, t) in taus.iter().enumerate() {
        report.checks += 1;
        if !t.add(&qi).mul(&t.sub(&q)).is_zero() {
            report.quadratic_failures.push(s);
        }
    }
    for s in 0..taus.len() {
        for t in s + 1..taus.len() {
            report.checks += 1;
            let m = spec.m(s, t) as usize;
            let alt =
                |a: usize, b: usize| LMatrix::product(n, (0..m).map(|k| if k % 2 == 0 { &taus[a] } else { &taus[b] }));
            if alt(s, t) != alt(t, s) {
                report.braid_failures.push((s, t));
            }
        }
    }
    report
}

/// Left cells of `W`, as sets of elements.
pub fn full_group_cells(kl: &KlTable) -> Vec<Vec<GroupElement>> {
    let g = kl.group();
    WGraph::from_kl(kl)
        .cells()
        .cells
        .into_iter()
        .map(|c| {
            c.into_iter()
                .map(|i| g.element(i).expect("vertex is an element"))
                .collect()
        })
        .collect()
}

/// Matrices of `T_s` on the left cell module spanned by `C_w`, `w ∈ cells`.
/// The set must be convex for the left preorder (hence a union of left cells).
pub fn cell_module(kl: &KlTable, cells: &[GroupElement]) -> Result<Vec<LMatrix>> {
    let g: &Arc<CoxeterGroup> = kl.group();
    let graph = WGraph::from_kl(kl);
    let n = g.order();
    let mut members: Vec<GroupElement> = cells.to_vec();
    members.sort();
    members.dedup();
    let inside: BTreeSet<usize> = members.iter().map(|w| w.index()).collect();
    let mut succ = vec![Vec::new(); n];
    let mut pred = vec![Vec::new(); n];
    for (x, y) in graph.preorder_edges() {
        succ[x].push(y);
        pred[y].push(x);
    }
    let closure = |adj: &Vec<Vec<usize>>| {
        let mut seen = vec![false; n];
        let mut stack: Vec<usize> = inside.iter().copied().collect();
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen
    };
    let (above, below) = (closure(&succ), closure(&pred));
    if (0..n).any(|v| above[v] && below[v] && !inside.contains(&v)) {
        return Err(Error::NotCellClosed);
    }
    let pos: BTreeMap<GroupElement, usize> = members.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    let k = members.len();
    Ok((0..g.rank())
        .map(|s| {
            let mut m = LMatrix::zero(k, k);
            for (c, &w) in members.iter().enumerate() {
                for (y, coef) in kl.c_mul_generator(s, w) {
                    if let Some(&r) = pos.get(&y) {
                        m[(r, c)] = coef;
                    }
                }
            }
            m
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentInt {
        s.parse().unwrap()
    }

    fn specht_graph(g: &Arc<CoxeterGroup>, j: GenSet) -> WGraph {
        let m = SpechtModule::build(g, j).unwrap();
        WGraph::from_specht(&m, &m.relative_kl().unwrap())
    }

    #[test]
    fn a2_graph() {
        let g = Arc::new(CoxeterGroup::named("A2").unwrap());
        let w = specht_graph(&g, GenSet::singleton(0));
        assert_eq!(w.len(), 2);
        assert_eq!(w.vertices()[0].descents, GenSet::singleton(0));
        assert_eq!(w.vertices()[1].descents, GenSet::singleton(1));
        assert_eq!(w.edges().collect::<Vec<_>>(), vec![((0, 1), 1)]);
        let t1 = w.tau(0);
        assert_eq!(t1.to_rows(), vec![vec![lp("-q^-1"), lp("1")], vec![lp("0"), lp("q")]]);
        assert!(w.verify().passed());
        assert_eq!(w.cells().cells, vec![vec![0, 1]]);
        let mut bad = w.clone();
        bad.set_mu(0, 1, 2);
        assert!(!bad.verify().braid_failures.is_empty());
    }

    #[test]
    fn singleton_graphs() {
        let g = Arc::new(CoxeterGroup::named("A2").unwrap());
        let top = specht_graph(&g, g.generators());
        assert_eq!(top.vertices()[0].element, Some(g.longest()));
        assert_eq!(top.vertices()[0].descents, g.generators());
        let bottom = specht_graph(&g, GenSet::EMPTY);
        assert_eq!(bottom.tau(0).to_rows(), vec![vec![lp("q")]]);
        assert!(top.verify().passed() && bottom.verify().passed());
        assert_eq!(bottom.cells().cells, vec![vec![0]]);
        let both = top.disjoint_union(&bottom).unwrap();
        assert_eq!(both.cells().cells, vec![vec![0], vec![1]]);
    }

    #[test]
    fn a2_full_cells() {
        let g = Arc::new(CoxeterGroup::named("A2").unwrap());
        let kl = KlTable::compute(&g);
        let cells: Vec<Vec<String>> = full_group_cells(&kl)
            .iter()
            .map(|c| c.iter().map(|&w| g.format(w)).collect())
            .collect();
        assert_eq!(
            cells,
            vec![vec!["e"], vec!["s1", "s2s1"], vec!["s2", "s1s2"], vec!["s1s2s1"]]
        );
        let top = cell_module(&kl, &[g.longest()]).unwrap();
        assert!(top.iter().all(|m| m.to_rows() == vec![vec![lp("-q^-1")]]));
        let bottom = cell_module(&kl, &[g.identity()]).unwrap();
        assert!(bottom.iter().all(|m| m.to_rows() == vec![vec![lp("q")]]));
        let ej = [g.generator(0), g.from_word(&[1, 0]).unwrap()];
        let mats = cell_module(&kl, &ej).unwrap();
        assert_eq!(mats, specht_graph(&g, GenSet::singleton(0)).taus());
        assert_eq!(
            cell_module(&kl, &[g.identity(), g.longest()]),
            Err(Error::NotCellClosed)
        );
        assert_eq!(cell_module(&kl, &[g.generator(0)]), Err(Error::NotCellClosed));
    }

    #[test]
    fn relations_hold_for_all_subsets() {
        for name in ["A3", "B3", "I2(5)", "I2(6)"] {
            let g = Arc::new(CoxeterGroup::named(name).unwrap());
            for j in GenSet::all_subsets_lex(g.rank()) {
                let w = specht_graph(&g, j);
                assert!(w.verify().passed(), "{name} {j}");
            }
            let kl = KlTable::compute(&g);
            assert!(WGraph::from_kl(&kl).verify().passed());
        }
    }

    #[test]
    fn dot_and_json() {
        let g = Arc::new(CoxeterGroup::named("A2").unwrap());
        let w = specht_graph(&g, GenSet::singleton(0));
        let dot = w.to_dot();
        assert!(dot.contains("0 [label=\"s1|1\"]"));
        assert!(dot.contains("0 -- 1 [label=\"1\"]"));
        let json = w.to_json();
        assert_eq!(json["J"], serde_json::json!([1]));
        assert_eq!(json["edges"][0]["mu"], 1);
        assert_eq!(json["vertices"][1]["word"], serde_json::json!([2, 1]));
    }
}
