//! Parabolic coset systems `D_J`, `D̄_J = D_J w_J`, `E_J` and the induced module
//! `M^J = H C_{w_J}` in its basis `T_d C_{w_J}`, `d ∈ D_J`.

use std::sync::Arc;

use serde::Serialize;

use crate::coxeter::{CoxeterGroup, GenSet, Generator, GroupElement, Side};
use crate::error::{Error, Result};
use crate::hecke::HeckeVector;
use crate::laurent::LaurentInt;

/// Class of a minimal coset representative under left multiplication by `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", content = "witness", rename_all = "camelCase")]
pub enum DjClass {
    Minus,
    Plus,
    /// `s d = d t` with `t ∈ J`.
    Zero(Generator),
}

/// Class of an element of `E_J` under left multiplication by `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", content = "witness", rename_all = "camelCase")]
pub enum EjClass {
    Minus,
    Plus,
    /// `s x < x` and `s x = x t` with `t ∈ J`.
    ZeroMinus(Generator),
    /// `s x > x` and `s x = x t` with `t ∉ J`.
    ZeroPlus(Generator),
}

#[derive(Debug)]
pub struct ParabolicSystem {
    group: Arc<CoxeterGroup>,
    j: GenSet,
    w_j: GroupElement,
    dj: Vec<GroupElement>,
    djbar: Vec<GroupElement>,
    ej: Vec<GroupElement>,
    dj_pos: Vec<Option<u32>>,
    ej_pos: Vec<Option<u32>>,
}

fn positions(n: usize, list: &[GroupElement]) -> Vec<Option<u32>> {
    let mut pos = vec![None; n];
    for (i, w) in list.iter().enumerate() {
        pos[w.index()] = Some(i as u32);
    }
    pos
}

impl ParabolicSystem {
    pub fn new(group: &Arc<CoxeterGroup>, j: GenSet) -> Result<Self> {
        let g = group.as_ref();
        if !j.is_subset(g.generators()) {
            return Err(Error::GeneratorOutOfRange(j.iter().last().unwrap_or(0) + 1));
        }
        let w_j = g.longest_element(j);
        let dj: Vec<_> = g
            .elements()
            .filter(|&w| j.iter().all(|s| !g.is_right_descent(w, s)))
            .collect();
        let mut djbar: Vec<_> = dj.iter().map(|&d| g.multiply(d, w_j)).collect();
        djbar.sort();
        let ej: Vec<_> = g.elements().filter(|&w| g.descents(w, Side::Right) == j).collect();
        let n = g.order();
        Ok(Self {
            group: Arc::clone(group),
            j,
            w_j,
            dj_pos: positions(n, &dj),
            ej_pos: positions(n, &ej),
            dj,
            djbar,
            ej,
        })
    }

    pub fn group(&self) -> &Arc<CoxeterGroup> {
        &self.group
    }

    pub fn j(&self) -> GenSet {
        self.j
    }

    pub fn w_j(&self) -> GroupElement {
        self.w_j
    }

    /// Minimal coset representatives, in ShortLex order.
    pub fn dj(&self) -> &[GroupElement] {
        &self.dj
    }

    /// Maximal coset representatives, in ShortLex order.
    pub fn djbar(&self) -> &[GroupElement] {
        &self.djbar
    }

    /// Elements with right descent set exactly `J`, in ShortLex order.
    pub fn ej(&self) -> &[GroupElement] {
        &self.ej
    }

    pub fn dj_position(&self, d: GroupElement) -> Option<usize> {
        self.dj_pos[d.index()].map(|p| p as usize)
    }

    pub fn ej_position(&self, x: GroupElement) -> Option<usize> {
        self.ej_pos[x.index()].map(|p| p as usize)
    }

    pub fn in_djbar(&self, x: GroupElement) -> bool {
        self.dj_position(self.group.multiply(x, self.w_j)).is_some()
    }

    /// `x w_J`, the minimal representative of the coset of `x ∈ D̄_J`.
    pub fn minimal_form(&self, x: GroupElement) -> Result<GroupElement> {
        let d = self.group.multiply(x, self.w_j);
        if self.dj_position(d).is_some() {
            Ok(d)
        } else {
            Err(self.err_not_in_djbar(x))
        }
    }

    /// `d w_J`, the maximal representative of the coset of `d ∈ D_J`.
    pub fn maximal_form(&self, d: GroupElement) -> GroupElement {
        self.group.multiply(d, self.w_j)
    }

    fn err_not_in_dj(&self, d: GroupElement) -> Error {
        Error::NotInDJ {
            element: self.group.format(d),
            subset: self.j.to_string(),
        }
    }

    fn err_not_in_djbar(&self, x: GroupElement) -> Error {
        Error::NotInDJbar {
            element: self.group.format(x),
            subset: self.j.to_string(),
        }
    }

    pub(crate) fn err_not_in_ej(&self, x: GroupElement) -> Error {
        Error::NotInEJ {
            element: self.group.format(x),
            subset: self.j.to_string(),
        }
    }

    /// The generator `t ∈ candidates` with `s x = x t`, if any.
    fn witness(&self, s: Generator, x: GroupElement, candidates: GenSet) -> Option<Generator> {
        let g = &self.group;
        let sx = g.left_mul(s, x);
        candidates.iter().find(|&t| g.right_mul(x, t) == sx)
    }

    pub fn classify_dj(&self, s: Generator, d: GroupElement) -> Result<DjClass> {
        if self.dj_position(d).is_none() {
            return Err(self.err_not_in_dj(d));
        }
        let g = &self.group;
        let sd = g.left_mul(s, d);
        if self.dj_position(sd).is_some() {
            return Ok(if g.length(sd) < g.length(d) {
                DjClass::Minus
            } else {
                DjClass::Plus
            });
        }
        let t = self
            .witness(s, d, self.j)
            .ok_or_else(|| Error::RecursionStuck(format!("no J-witness for s{} on {}", s + 1, g.format(d))))?;
        Ok(DjClass::Zero(t))
    }

    pub fn classify_ej(&self, s: Generator, x: GroupElement) -> Result<EjClass> {
        if self.ej_position(x).is_none() {
            return Err(self.err_not_in_ej(x));
        }
        let g = &self.group;
        let sx = g.left_mul(s, x);
        let shorter = g.length(sx) < g.length(x);
        if self.ej_position(sx).is_some() {
            return Ok(if shorter { EjClass::Minus } else { EjClass::Plus });
        }
        let (candidates, make): (GenSet, fn(Generator) -> EjClass) = if shorter {
            (self.j, EjClass::ZeroMinus)
        } else {
            (self.j.complement(g.rank()), EjClass::ZeroPlus)
        };
        let t = self
            .witness(s, x, candidates)
            .ok_or_else(|| Error::RecursionStuck(format!("no witness for s{} on {}", s + 1, g.format(x))))?;
        Ok(make(t))
    }

    /// `C_{w_J} = ε_{w_J} q^{l(w_J)} sum_{w ∈ W_J} ε_w q^{-l(w)} T_w`.
    pub fn c_wj(&self) -> HeckeVector {
        let g = &self.group;
        let lj = g.length(self.w_j) as i32;
        let eps_j = g.sign(self.w_j);
        HeckeVector::from_terms(
            g,
            g.parabolic_subgroup(self.j)
                .into_iter()
                .map(|w| (w, LaurentInt::monomial(eps_j * g.sign(w), lj - g.length(w) as i32))),
        )
    }

    /// `sum_{w ∈ W_J} q^{2 l(w)}`
    pub fn poincare_j(&self) -> LaurentInt {
        let g = &self.group;
        g.parabolic_subgroup(self.j)
            .into_iter()
            .map(|w| LaurentInt::monomial(1, 2 * g.length(w) as i32))
            .sum()
    }

    pub fn mj_zero(&self) -> MJElement {
        MJElement {
            coords: vec![LaurentInt::zero(); self.dj.len()],
        }
    }

    /// The basis element `T_d C_{w_J}`.
    pub fn mj_basis(&self, d: GroupElement) -> Result<MJElement> {
        let pos = self.dj_position(d).ok_or_else(|| self.err_not_in_dj(d))?;
        let mut m = self.mj_zero();
        m.coords[pos] = LaurentInt::one();
        Ok(m)
    }

    /// `T_s m` in the basis `T_d C_{w_J}`.
    pub fn mj_apply(&self, s: Generator, m: &MJElement) -> MJElement {
        let g = &self.group;
        let mut out = self.mj_zero();
        for (i, c) in m.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = self.dj[i];
            let sd = g.left_mul(s, d);
            match self.dj_position(sd) {
                Some(k) if g.length(sd) > g.length(d) => out.coords[k] += c,
                Some(k) => {
                    out.coords[k] += c;
                    out.coords[i] += c * &LaurentInt::q_minus_q_inv();
                }
                None => out.coords[i] -= c * &LaurentInt::q_inv(),
            }
        }
        out
    }

    /// `sum_d c_d T_d C_{w_J}` in the T-basis.
    pub fn mj_embed(&self, m: &MJElement) -> HeckeVector {
        let g = &self.group;
        let c = self.c_wj();
        let mut out = HeckeVector::zero(g);
        for (i, a) in m.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let d = self.dj[i];
            for (w, b) in c.terms() {
                out.add_term(g.multiply(d, w), &(a * b));
            }
        }
        out
    }

    /// Inverse of [`Self::mj_embed`]: `None` if `h ∉ M^J`.
    pub fn mj_from_hecke(&self, h: &HeckeVector) -> Option<MJElement> {
        let m = MJElement {
            coords: self.dj.iter().map(|&d| h.coeff(self.maximal_form(d))).collect(),
        };
        (self.mj_embed(&m) == *h).then_some(m)
    }
}

/// Coordinates in the basis `T_d C_{w_J}`, indexed by position in `D_J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MJElement {
    pub coords: Vec<LaurentInt>,
}

impl MJElement {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(LaurentInt::is_zero)
    }

    pub fn axpy(&mut self, c: &LaurentInt, other: &MJElement) {
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }
}
