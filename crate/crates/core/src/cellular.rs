//! The elements `m_xy = T_x C_{w_J} T_y^*`, the layer ideals they span and
//! rank diagnostics for the family of all layers.

use std::sync::Arc;

use serde::Serialize;

use crate::coxeter::{CoxeterGroup, GenSet, Generator, GroupElement, Side};
use crate::error::{Error, Result};
use crate::hecke::HeckeVector;
use crate::kl::KlTable;
use crate::linalg::EchelonBasis;
use crate::parabolic::{EjClass, ParabolicSystem};
use crate::specht::{Reduction, SpechtModule};

/// Parabolic systems for every `J ⊆ S`.
#[derive(Debug)]
pub struct CellularDatum {
    group: Arc<CoxeterGroup>,
    systems: Vec<Arc<ParabolicSystem>>,
}

impl CellularDatum {
    pub fn new(group: &Arc<CoxeterGroup>) -> Result<Self> {
        let rank = group.rank();
        let systems = (0..1u32 << rank)
            .map(|m| ParabolicSystem::new(group, GenSet(m)).map(Arc::new))
            .collect::<Result<_>>()?;
        Ok(Self {
            group: Arc::clone(group),
            systems,
        })
    }

    pub fn group(&self) -> &Arc<CoxeterGroup> {
        &self.group
    }

    pub fn system(&self, j: GenSet) -> &Arc<ParabolicSystem> {
        &self.systems[j.0 as usize]
    }

    /// All subsets in lexicographic order of their sorted member lists.
    pub fn subsets_lex(&self) -> Vec<GenSet> {
        GenSet::all_subsets_lex(self.group.rank())
    }

    /// `m_xy = T_x C_{w_J} T_y^*`; `x`, `y` may be given in minimal (`D_J`) or maximal (`D̄_J`) form.
    pub fn murphy_element(&self, j: GenSet, x: GroupElement, y: GroupElement) -> Result<HeckeVector> {
        let sys = self.system(j);
        let (x, y) = (minimal(sys, x)?, minimal(sys, y)?);
        Ok(m_element(sys, x, y))
    }

    /// `m_uv` for `u, v ∈ E_K` over all `K ⊋ J`.
    pub fn layer_ideal_basis(&self, j: GenSet) -> Vec<HeckeVector> {
        let mut out = Vec::new();
        for k in self.subsets_lex() {
            if k == j || !j.is_subset(k) {
                continue;
            }
            let sys = self.system(k);
            for &u in sys.ej() {
                for &v in sys.ej() {
                    out.push(m_element(sys, to_minimal(sys, u), to_minimal(sys, v)));
                }
            }
        }
        out
    }

    /// Echelon form of the layer ideal, for membership tests over `Q(q)`.
    pub fn layer_ideal(&self, j: GenSet) -> LayerIdeal {
        let mut basis = EchelonBasis::new();
        for h in self.layer_ideal_basis(j) {
            basis.insert_hecke(&h);
        }
        LayerIdeal { j, basis }
    }

    /// Compares `|W|`, `sum_J |E_J|^2` and the exact rank of all `m_uv`.
    pub fn rank_report(&self, cap: usize) -> Result<RankReport> {
        let order = self.group.order();
        if order > cap {
            return Err(Error::TooLarge {
                what: "group order for rank elimination".into(),
                size: order,
                cap,
            });
        }
        let mut basis = EchelonBasis::new();
        let mut per_layer = Vec::new();
        let mut sum = 0;
        for j in self.subsets_lex() {
            let sys = self.system(j);
            let size = sys.ej().len();
            sum += size * size;
            per_layer.push(LayerSize {
                j: j.one_based(),
                size_ej: size,
            });
            for &u in sys.ej() {
                for &v in sys.ej() {
                    basis.insert_hecke(&m_element(sys, to_minimal(sys, u), to_minimal(sys, v)));
                }
            }
        }
        let rank = basis.rank();
        let note = if sum == rank && rank == order {
            "the elements m_uv are linearly independent and span the algebra".to_string()
        } else {
            format!(
                "{sum} elements m_uv span a space of rank {rank} in an algebra of dimension {order}; \
                 they do not form a basis"
            )
        };
        Ok(RankReport {
            group_order: order,
            sum_of_squares: sum,
            rank,
            per_layer,
            note,
        })
    }

    /// Every term `T_x C_{t w_J}` that a zero-plus case contributes beyond `q T_x C_{w_J}`,
    /// tested for membership in the layer ideal of `J`.
    pub fn dropped_terms(&self, kl: &KlTable) -> Result<Vec<DroppedTerm>> {
        let g = &self.group;
        let mut out = Vec::new();
        for j in self.subsets_lex() {
            let sys = self.system(j);
            let ideal = self.layer_ideal(j);
            for &x in sys.ej() {
                for s in 0..g.rank() {
                    if let EjClass::ZeroPlus(t) = sys.classify_ej(s, x)? {
                        let twj = g.left_mul(t, sys.w_j());
                        let term = HeckeVector::basis(g, x).t_mul(&kl.c(twj))?;
                        out.push(DroppedTerm {
                            j,
                            s,
                            x,
                            t,
                            in_layer_ideal: ideal.contains(&term),
                            term,
                        });
                    }
                }
            }
        }
        Ok(out)
    }
}

fn minimal(sys: &ParabolicSystem, x: GroupElement) -> Result<GroupElement> {
    if sys.dj_position(x).is_some() {
        return Ok(x);
    }
    sys.minimal_form(x).map_err(|_| Error::NotInCosetSet {
        element: sys.group().format(x),
        subset: sys.j().to_string(),
    })
}

fn to_minimal(sys: &ParabolicSystem, u: GroupElement) -> GroupElement {
    sys.minimal_form(u).expect("E_J lies in D̄_J")
}

/// `T_x C_{w_J} T_{y^-1}` for minimal representatives `x`, `y`.
fn m_element(sys: &ParabolicSystem, x: GroupElement, y: GroupElement) -> HeckeVector {
    let g = sys.group();
    let mut h = sys.c_wj();
    for &s in g.word(x).iter().rev() {
        h = h.t_mul_generator(s as usize, Side::Left);
    }
    for &s in g.word(y).iter().rev() {
        h = h.t_mul_generator(s as usize, Side::Right);
    }
    h
}

/// The span of `m_uv`, `u, v ∈ E_K`, `K ⊋ J`, in echelon form.
#[derive(Clone, Debug)]
pub struct LayerIdeal {
    j: GenSet,
    basis: EchelonBasis,
}

impl LayerIdeal {
    pub fn j(&self) -> GenSet {
        self.j
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn contains(&self, h: &HeckeVector) -> bool {
        self.basis.contains_hecke(h)
    }
}

/// Splits `T_{x w_J} C_{w_J}`, `x ∈ D̄_J`, into its `E_J` part and higher layers.
pub fn decompose_layer(module: &SpechtModule, x: GroupElement) -> Result<Reduction> {
    module.decompose(x)
}

/// Checks `T_s m_uv ≡ sum_w r_w m_wv` modulo the layer ideal, with `r` read
/// off the action of `T_s` on `S^J`.
pub fn congruence_holds(
    datum: &CellularDatum,
    module: &SpechtModule,
    ideal: &LayerIdeal,
    s: Generator,
    u: GroupElement,
    v: GroupElement,
) -> Result<bool> {
    let sys = module.system();
    let j = sys.j();
    let mut diff = datum.murphy_element(j, u, v)?.t_mul_generator(s, Side::Left);
    for (i, r) in module.apply(s, u)?.iter().enumerate() {
        if !r.is_zero() {
            diff.axpy(&-r, &datum.murphy_element(j, sys.ej()[i], v)?)?;
        }
    }
    Ok(ideal.contains(&diff))
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LayerSize {
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    #[serde(rename = "sizeEJ")]
    pub size_ej: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RankReport {
    pub group_order: usize,
    pub sum_of_squares: usize,
    pub rank: usize,
    pub per_layer: Vec<LayerSize>,
    pub note: String,
}

#[derive(Clone, Debug)]
pub struct DroppedTerm {
    pub j: GenSet,
    pub s: Generator,
    pub x: GroupElement,
    pub t: Generator,
    pub term: HeckeVector,
    pub in_layer_ideal: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentInt;

    fn lp(s: &str) -> LaurentInt {
        s.parse().unwrap()
    }

    #[test]
    fn murphy_elements() {
        let g = Arc::new(CoxeterGroup::named("A2").unwrap());
        let d = CellularDatum::new(&g).unwrap();
        let j = GenSet::singleton(0);
        let c = d.system(j).c_wj();
        assert_eq!(d.murphy_element(j, g.identity(), g.identity()).unwrap(), c);
        assert_eq!(d.murphy_element(j, g.generator(0), g.generator(0)).unwrap(), c);
        let s2s1 = g.from_word(&[1, 0]).unwrap();
        let mut expect = HeckeVector::basis(&g, s2s1);
        expect.add_term(g.generator(1), &lp("-q"));
        assert_eq!(d.murphy_element(j, s2s1, g.generator(0)).unwrap(), expect);
        assert!(matches!(
            d.murphy_element(g.generators(), g.generator(0), g.identity()),
            Err(Error::NotInCosetSet { .. })
        ));
        for k in d.subsets_lex() {
            let sys = d.system(k);
            for &u in sys.ej() {
                for &v in sys.ej() {
                    assert_eq!(
                        d.murphy_element(k, u, v).unwrap().star(),
                        d.murphy_element(k, v, u).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn layer_ideals() {
        let g = Arc::new(CoxeterGroup::named("A2").unwrap());
        let d = CellularDatum::new(&g).unwrap();
        assert!(d.layer_ideal_basis(g.generators()).is_empty());
        let j = GenSet::singleton(0);
        assert_eq!(d.layer_ideal_basis(j).len(), 1);
        let ideal = d.layer_ideal(j);
        let kl = KlTable::compute(&g);
        assert!(ideal.contains(&HeckeVector::zero(&g)));
        assert!(ideal.contains(&kl.c(g.longest())));
        assert!(!ideal.contains(&kl.c(g.generator(0))));
        assert_eq!(d.layer_ideal_basis(GenSet::EMPTY).len(), 4 + 4 + 1);
    }

    #[test]
    fn rank_reports() {
        let a1 = Arc::new(CoxeterGroup::named("A1").unwrap());
        let r = CellularDatum::new(&a1).unwrap().rank_report(200).unwrap();
        assert_eq!((r.group_order, r.sum_of_squares, r.rank), (2, 2, 2));
        let a2 = Arc::new(CoxeterGroup::named("A2").unwrap());
        let r = CellularDatum::new(&a2).unwrap().rank_report(200).unwrap();
        assert_eq!((r.group_order, r.sum_of_squares, r.rank), (6, 10, 6));
        let b2 = Arc::new(CoxeterGroup::named("B2").unwrap());
        let r = CellularDatum::new(&b2).unwrap().rank_report(200).unwrap();
        // E_J sizes 1, 3, 3, 1
        assert_eq!((r.group_order, r.sum_of_squares), (8, 20));
        assert!(r.rank <= 8);
        assert!(CellularDatum::new(&a2).unwrap().rank_report(5).is_err());
    }

    #[test]
    fn dropped_term_a2_is_outside_the_ideal() {
        let g = Arc::new(CoxeterGroup::named("A2").unwrap());
        let d = CellularDatum::new(&g).unwrap();
        let kl = KlTable::compute(&g);
        let terms = d.dropped_terms(&kl).unwrap();
        let s2s1 = g.from_word(&[1, 0]).unwrap();
        let t = terms
            .iter()
            .find(|t| t.j == GenSet::singleton(0) && t.s == 0 && t.x == s2s1)
            .unwrap();
        // T_{s2s1} C_{s2s1} = q C_{s1} - q^-1 C_{w0}
        let mut expect = kl.c(g.generator(0)).scale(&lp("q"));
        expect.axpy(&lp("-q^-1"), &kl.c(g.longest())).unwrap();
        assert_eq!(t.term, expect);
        assert!(!t.in_layer_ideal);
    }

    #[test]
    fn congruences_a2() {
        let g = Arc::new(CoxeterGroup::named("A2").unwrap());
        let d = CellularDatum::new(&g).unwrap();
        for j in d.subsets_lex() {
            let m = SpechtModule::new(d.system(j)).unwrap();
            let ideal = d.layer_ideal(j);
            for s in 0..g.rank() {
                for &u in m.basis() {
                    for &v in m.basis() {
                        assert!(congruence_holds(&d, &m, &ideal, s, u, v).unwrap());
                    }
                }
            }
        }
    }
}
