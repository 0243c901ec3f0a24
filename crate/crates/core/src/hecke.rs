//! The Hecke algebra in its standard basis `T_w`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::coxeter::{CoxeterGroup, Generator, GroupElement, Side};
use crate::error::{Error, Result};
use crate::laurent::LaurentInt;

/// An element `sum a_w T_w` of the Hecke algebra of a finite Coxeter group.
#[derive(Clone)]
pub struct HeckeVector {
    group: Arc<CoxeterGroup>,
    coords: BTreeMap<GroupElement, LaurentInt>,
}

impl HeckeVector {
    pub fn zero(group: &Arc<CoxeterGroup>) -> Self {
        Self {
            group: Arc::clone(group),
            coords: BTreeMap::new(),
        }
    }

    /// `T_w`
    pub fn basis(group: &Arc<CoxeterGroup>, w: GroupElement) -> Self {
        Self::monomial(group, w, LaurentInt::one())
    }

    /// `c T_w`
    pub fn monomial(group: &Arc<CoxeterGroup>, w: GroupElement, c: LaurentInt) -> Self {
        let mut v = Self::zero(group);
        v.add_term(w, &c);
        v
    }

    pub fn from_terms(group: &Arc<CoxeterGroup>, terms: impl IntoIterator<Item = (GroupElement, LaurentInt)>) -> Self {
        let mut v = Self::zero(group);
        for (w, c) in terms {
            v.add_term(w, &c);
        }
        v
    }

    pub fn group(&self) -> &Arc<CoxeterGroup> {
        &self.group
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, w: GroupElement) -> LaurentInt {
        self.coords.get(&w).cloned().unwrap_or_default()
    }

    pub fn get(&self, w: GroupElement) -> Option<&LaurentInt> {
        self.coords.get(&w)
    }

    /// Nonzero terms in ShortLex order of the basis element.
    pub fn terms(&self) -> impl Iterator<Item = (GroupElement, &LaurentInt)> {
        self.coords.iter().map(|(&w, c)| (w, c))
    }

    pub fn support_len(&self) -> usize {
        self.coords.len()
    }

    pub fn add_term(&mut self, w: GroupElement, c: &LaurentInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coords.entry(w).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coords.remove(&w);
        }
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::MixedGroups)
        }
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: &LaurentInt, other: &Self) -> Result<()> {
        self.same_group(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (&w, a) in &other.coords {
            self.add_term(w, &(c * a));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut v = self.clone();
        v.axpy(&LaurentInt::one(), other)?;
        Ok(v)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let mut v = self.clone();
        v.axpy(&-LaurentInt::one(), other)?;
        Ok(v)
    }

    pub fn scale(&self, c: &LaurentInt) -> Self {
        Self::from_terms(&self.group, self.coords.iter().map(|(&w, a)| (w, c * a)))
    }

    /// `T_s h` or `h T_s`.
    pub fn t_mul_generator(&self, s: Generator, side: Side) -> Self {
        let g = &self.group;
        let qq = LaurentInt::q_minus_q_inv();
        let mut out = Self::zero(g);
        for (&w, a) in &self.coords {
            let sw = match side {
                Side::Left => g.left_mul(s, w),
                Side::Right => g.right_mul(w, s),
            };
            out.add_term(sw, a);
            if g.length(sw) < g.length(w) {
                out.add_term(w, &(a * &qq));
            }
        }
        out
    }

    /// `h T_w`
    fn right_mul_basis(&self, w: GroupElement) -> Self {
        let word = self.group.word(w).to_vec();
        word.iter()
            .fold(self.clone(), |h, &s| h.t_mul_generator(s as usize, Side::Right))
    }

    /// Product in the Hecke algebra.
    pub fn t_mul(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let mut out = Self::zero(&self.group);
        for (&y, b) in &other.coords {
            out.axpy(b, &self.right_mul_basis(y))?;
        }
        Ok(out)
    }

    /// The ring involution `q -> q^-1`, `T_s -> T_s + (q^-1 - q)`.
    pub fn bar(&self) -> Self {
        let g = &self.group;
        let shift = LaurentInt::q_minus_q_inv().bar();
        let mut out = Self::zero(g);
        for (&w, a) in &self.coords {
            let mut h = Self::monomial(g, g.identity(), a.bar());
            for &s in g.word(w) {
                let ts = h.t_mul_generator(s as usize, Side::Right);
                h = h.scale(&shift);
                h.axpy(&LaurentInt::one(), &ts).expect("same group");
            }
            out.axpy(&LaurentInt::one(), &h).expect("same group");
        }
        out
    }

    /// The anti-involution `T_w -> T_{w^-1}`, linear over Laurent polynomials.
    pub fn star(&self) -> Self {
        let g = &self.group;
        Self::from_terms(g, self.coords.iter().map(|(&w, a)| (g.inverse(w), a.clone())))
    }
}

impl PartialEq for HeckeVector {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.coords == other.coords
    }
}

impl Eq for HeckeVector {}

impl fmt::Display for HeckeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coords
            .iter()
            .rev()
            .map(|(&w, c)| {
                let t = format!("T[{}]", self.group.format(w));
                if c.is_one() {
                    t
                } else {
                    format!("({c})*{t}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for HeckeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeVector({self})")
    }
}
