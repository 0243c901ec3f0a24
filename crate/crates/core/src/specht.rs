//! The generic Specht module `S^J = M^J / N^J`, with `N^J = sum_{K ⊋ J} H C_{w_K}`.
//!
//! `N^J` is free on `n_p = T_{p w_K} C_{w_K}` for `p ∈ E_K`, `K ⊋ J`. In the basis
//! `T_d C_{w_J}` of `M^J`, `n_p` has coefficient 1 at the coset of `p` and is
//! otherwise supported on strictly shorter cosets, so reduction modulo `N^J` is
//! a single unitriangular sweep from long to short cosets. The images
//! `b_x = T_{x w_J} C_{w_J} + N^J`, `x ∈ E_J`, form a basis of `S^J`.

use std::sync::Arc;

use num_traits::ToPrimitive;

use crate::coxeter::{CoxeterGroup, GenSet, Generator, GroupElement, Side};
use crate::error::{Error, Result};
use crate::hecke::HeckeVector;
use crate::laurent::LaurentInt;
use crate::linalg::LMatrix;
use crate::parabolic::{EjClass, MJElement, ParabolicSystem};

/// A generator `T_{p w_K} C_{w_K}` of `N^J`, in `M^J` coordinates.
#[derive(Clone, Debug)]
struct IdealGenerator {
    k: GenSet,
    vector: MJElement,
}

/// Result of reducing an element of `M^J` modulo `N^J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// Coefficients on `T_{x w_J} C_{w_J}`, `x ∈ E_J`, indexed like `E_J`.
    pub ej: Vec<LaurentInt>,
    /// `(K, p, r)`: the element equals the `E_J` part plus `sum r T_{p w_K} C_{w_K}`.
    pub higher: Vec<(GenSet, GroupElement, LaurentInt)>,
}

#[derive(Debug)]
pub struct SpechtModule {
    sys: Arc<ParabolicSystem>,
    /// For each `D_J` position: its `E_J` index or the generator of `N^J` it leads.
    ej_index: Vec<Option<usize>>,
    ideal: Vec<Option<IdealGenerator>>,
    /// `D_J` positions by decreasing coset length.
    sweep: Vec<usize>,
    action: Vec<LMatrix>,
}

impl SpechtModule {
    pub fn new(sys: &Arc<ParabolicSystem>) -> Result<Self> {
        let g = sys.group().as_ref();
        let n = sys.dj().len();
        let mut ej_index = vec![None; n];
        let mut ideal = vec![None; n];
        for (pos, &d) in sys.dj().iter().enumerate() {
            let p = sys.maximal_form(d);
            if let Some(i) = sys.ej_position(p) {
                ej_index[pos] = Some(i);
                continue;
            }
            let k = g.descents(p, Side::Right);
            let w_k = g.longest_element(k);
            let u = g.multiply(p, w_k);
            let lk = g.length(w_k) as i32;
            let eps = g.sign(w_k);
            let mut vector = sys.mj_zero();
            for w in g.parabolic_subgroup(k) {
                let x = g.multiply(u, w);
                if let Some(i) = sys.dj_position(g.multiply(x, sys.w_j())) {
                    vector.coords[i] += LaurentInt::monomial(eps * g.sign(w), lk - g.length(w) as i32);
                }
            }
            ideal[pos] = Some(IdealGenerator { k, vector });
        }
        let mut sweep: Vec<usize> = (0..n).collect();
        sweep.sort_by_key(|&i| std::cmp::Reverse((g.length(sys.dj()[i]), sys.dj()[i])));
        let mut module = Self {
            sys: Arc::clone(sys),
            ej_index,
            ideal,
            sweep,
            action: Vec::new(),
        };
        module.action = (0..g.rank())
            .map(|s| {
                let cols: Vec<Vec<LaurentInt>> = sys
                    .ej()
                    .iter()
                    .map(|&x| {
                        let b = sys
                            .mj_basis(sys.minimal_form(x).expect("E_J lies in D̄_J"))
                            .expect("minimal form lies in D_J");
                        module.reduce(&sys.mj_apply(s, &b)).ej
                    })
                    .collect();
                LMatrix::from_columns(sys.ej().len(), &cols)
            })
            .collect();
        Ok(module)
    }

    pub fn build(group: &Arc<CoxeterGroup>, j: GenSet) -> Result<Self> {
        Self::new(&Arc::new(ParabolicSystem::new(group, j)?))
    }

    pub fn system(&self) -> &Arc<ParabolicSystem> {
        &self.sys
    }

    pub fn group(&self) -> &Arc<CoxeterGroup> {
        self.sys.group()
    }

    pub fn dim(&self) -> usize {
        self.sys.ej().len()
    }

    pub fn basis(&self) -> &[GroupElement] {
        self.sys.ej()
    }

    /// Reduces `m ∈ M^J` modulo `N^J`.
    pub fn reduce(&self, m: &MJElement) -> Reduction {
        let mut m = m.clone();
        let mut higher = Vec::new();
        for &pos in &self.sweep {
            let Some(gen) = &self.ideal[pos] else { continue };
            let c = std::mem::take(&mut m.coords[pos]);
            if c.is_zero() {
                continue;
            }
            m.axpy(&-&c, &gen.vector);
            m.coords[pos] = LaurentInt::zero();
            higher.push((gen.k, self.sys.maximal_form(self.sys.dj()[pos]), c));
        }
        let mut ej = vec![LaurentInt::zero(); self.dim()];
        for (pos, c) in m.coords.into_iter().enumerate() {
            if let Some(i) = self.ej_index[pos] {
                ej[i] = c;
            } else {
                debug_assert!(c.is_zero());
            }
        }
        Reduction { ej, higher }
    }

    /// Expresses `T_{x w_J} C_{w_J}`, `x ∈ D̄_J`, through the `E_J` layer and higher layers.
    pub fn decompose(&self, x: GroupElement) -> Result<Reduction> {
        let d = self.sys.minimal_form(x)?;
        Ok(self.reduce(&self.sys.mj_basis(d)?))
    }

    /// Element of `N^J` generated by `p ∈ D̄_J ∖ E_J`, as a Hecke element.
    pub fn ideal_generator(&self, p: GroupElement) -> Option<HeckeVector> {
        let pos = self.sys.dj_position(self.sys.minimal_form(p).ok()?)?;
        self.ideal[pos].as_ref().map(|gen| self.sys.mj_embed(&gen.vector))
    }

    /// Matrix of `T_s`: column `x` holds the coordinates of `T_s b_x`.
    pub fn action(&self, s: Generator) -> &LMatrix {
        &self.action[s]
    }

    pub fn actions(&self) -> &[LMatrix] {
        &self.action
    }

    /// `T_s b_x`
    pub fn apply(&self, s: Generator, x: GroupElement) -> Result<Vec<LaurentInt>> {
        let i = self.sys.ej_position(x).ok_or_else(|| self.sys.err_not_in_ej(x))?;
        Ok(self.action[s].column(i))
    }

    /// A generator `s` with `s w < w` and `s w ∈ E_J`, least index first.
    pub fn pivot(&self, w: GroupElement) -> Option<Generator> {
        (0..self.group().rank()).find(|&s| self.sys.classify_ej(s, w) == Ok(EjClass::Minus))
    }

    /// Bar involution on `S^J`: `bar(b_y) = sum_x R_{x,y} b_x`, built from
    /// `bar(b_y) = (T_s + q^-1 - q) bar(b_{sy})`.
    pub fn r_table(&self) -> Result<LMatrix> {
        let n = self.dim();
        let ej = self.sys.ej();
        let shift = LaurentInt::q_minus_q_inv().bar();
        let mut cols: Vec<Vec<LaurentInt>> = Vec::with_capacity(n);
        for (i, &y) in ej.iter().enumerate() {
            if i == 0 {
                let mut c = vec![LaurentInt::zero(); n];
                c[0] = LaurentInt::one();
                cols.push(c);
                continue;
            }
            let s = self
                .pivot(y)
                .ok_or_else(|| Error::RecursionStuck(self.group().format(y)))?;
            let v = self
                .sys
                .ej_position(self.group().left_mul(s, y))
                .expect("pivot stays in E_J");
            cols.push(self.apply_plus_scalar(s, &cols[v], &shift));
        }
        Ok(LMatrix::from_columns(n, &cols))
    }

    /// `(T_s + c) v` for a coordinate vector `v`.
    fn apply_plus_scalar(&self, s: Generator, v: &[LaurentInt], c: &LaurentInt) -> Vec<LaurentInt> {
        let a = &self.action[s];
        (0..v.len())
            .map(|i| {
                let mut acc = c * &v[i];
                for (j, vj) in v.iter().enumerate() {
                    if !vj.is_zero() && !a[(i, j)].is_zero() {
                        acc += &a[(i, j)] * vj;
                    }
                }
                acc
            })
            .collect()
    }

    /// `bar(b_y)` computed in the Hecke algebra and reduced modulo `N^J`.
    pub fn bar_by_expansion(&self, y: GroupElement) -> Result<Vec<LaurentInt>> {
        let d = self.sys.minimal_form(y)?;
        let h = self.sys.mj_embed(&self.sys.mj_basis(d)?).bar();
        let m = self
            .sys
            .mj_from_hecke(&h)
            .ok_or_else(|| Error::RecursionStuck(format!("bar of {} left M^J", self.group().format(y))))?;
        Ok(self.reduce(&m).ej)
    }

    /// Relative Kazhdan-Lusztig basis via
    /// `C_w = (T_s - q) C_v - sum_{z : s z < z} mu(z,v) C_z`, `v = s w`.
    pub fn relative_kl(&self) -> Result<RelativeKl> {
        let g = self.group();
        let ej = self.sys.ej();
        let n = ej.len();
        let mut cols: Vec<Vec<LaurentInt>> = Vec::with_capacity(n);
        let mut mu = vec![vec![0i64; n]; n];
        let mut pivots = Vec::with_capacity(n);
        let minus_q = -LaurentInt::q();
        for (i, &w) in ej.iter().enumerate() {
            let col = if i == 0 {
                pivots.push(None);
                let mut c = vec![LaurentInt::zero(); n];
                c[0] = LaurentInt::one();
                c
            } else {
                let s = self.pivot(w).ok_or_else(|| Error::RecursionStuck(g.format(w)))?;
                pivots.push(Some(s));
                let v = self.sys.ej_position(g.left_mul(s, w)).expect("pivot stays in E_J");
                let mut c = self.apply_plus_scalar(s, &cols[v], &minus_q);
                for (z, &m) in mu.iter().map(|row| &row[v]).enumerate() {
                    if m != 0 && g.is_left_descent(s, ej[z]) {
                        for (k, p) in cols[z].iter().enumerate() {
                            if !p.is_zero() {
                                c[k] -= p.scale(&m.into());
                            }
                        }
                    }
                }
                c
            };
            for (y, p) in col.iter().enumerate() {
                if y != i && !p.is_zero() {
                    mu[y][i] = (-p.coeff(1)).to_i64().expect("mu fits in i64");
                }
            }
            cols.push(col);
        }
        let p = LMatrix::from_columns(n, &cols);
        let q = p
            .unitriangular_inverse()
            .ok_or_else(|| Error::RecursionStuck("relative KL matrix is not unitriangular".into()))?;
        Ok(RelativeKl { p, q, mu, pivots })
    }
}

/// Relative Kazhdan-Lusztig data of `S^J`, indexed like `E_J`.
#[derive(Clone, Debug)]
pub struct RelativeKl {
    /// Column `w` holds `P_{y,w}`: `C_w = sum_y P_{y,w} b_y`.
    pub p: LMatrix,
    /// The inverse of `p`: `Q_{y,w}` off the diagonal, 1 on it.
    pub q: LMatrix,
    /// `mu[y][w]`, coefficient of `q` in `-P_{y,w}`.
    pub mu: Vec<Vec<i64>>,
    /// Generator used by the recursion at each `w` (none at the minimum).
    pub pivots: Vec<Option<Generator>>,
}

impl RelativeKl {
    /// `mu` symmetrized across the diagonal.
    pub fn mu_sym(&self, a: usize, b: usize) -> i64 {
        if a <= b {
            self.mu[a][b]
        } else {
            self.mu[b][a]
        }
    }
}

/// Solves `bar(C_w) = C_w`, `C_w ∈ b_w + sum qZ[q] b_y`, degree by degree
/// from a bar matrix `r` that is unitriangular in the given order.
pub fn kl_by_bar_invariance(r: &LMatrix) -> Option<LMatrix> {
    let n = r.rows();
    if !r.is_upper_unitriangular() {
        return None;
    }
    let mut p = LMatrix::identity(n);
    for w in 0..n {
        for x in (0..w).rev() {
            // P_x - bar(P_x) = sum_{x<y<=w} bar(P_{y,w}) R_{x,y}
            let mut rhs = LaurentInt::zero();
            for y in x + 1..=w {
                if !r[(x, y)].is_zero() && !p[(y, w)].is_zero() {
                    rhs += &p[(y, w)].bar() * &r[(x, y)];
                }
            }
            let px = rhs.positive_part();
            if &px - &px.bar() != rhs {
                return None;
            }
            p[(x, w)] = px;
        }
    }
    Some(p)
}
