use std::sync::{Arc, OnceLock};

use hecke_wgraph::linalg::{rank, EchelonBasis, SparseVec};
use hecke_wgraph::typea::{permutation, rs_insert, Partition};
use hecke_wgraph::{
    CoxeterGroup, EjClass, GenSet, GroupElement, HeckeVector, KlTable, LMatrix, LaurentInt, ParabolicSystem, Side,
};
use proptest::prelude::*;

const NAMES: [&str; 5] = ["A3", "B3", "I2(5)", "H3", "D4"];

fn group(k: usize) -> &'static Arc<CoxeterGroup> {
    static GROUPS: OnceLock<Vec<Arc<CoxeterGroup>>> = OnceLock::new();
    &GROUPS.get_or_init(|| {
        NAMES
            .iter()
            .map(|n| Arc::new(CoxeterGroup::named(n).unwrap()))
            .collect()
    })[k]
}

fn b3_kl() -> &'static KlTable {
    static KL: OnceLock<KlTable> = OnceLock::new();
    KL.get_or_init(|| KlTable::compute(group(1)))
}

fn elem(g: &CoxeterGroup, i: usize) -> GroupElement {
    g.element(i % g.order()).unwrap()
}

fn laurent() -> impl Strategy<Value = LaurentInt> {
    prop::collection::vec((-3i32..4, -4i64..5), 0..4).prop_map(LaurentInt::from_terms)
}

fn hecke(g: &'static Arc<CoxeterGroup>) -> impl Strategy<Value = HeckeVector> {
    prop::collection::vec((0..g.order(), laurent()), 0..4)
        .prop_map(move |terms| HeckeVector::from_terms(g, terms.into_iter().map(|(i, c)| (elem(g, i), c))))
}

fn permutation_of(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..6, 1..6).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_laws(k in 0..NAMES.len(), a in any::<usize>(), b in any::<usize>(), c in any::<usize>()) {
        let g = group(k);
        let (x, y, z) = (elem(g, a), elem(g, b), elem(g, c));
        prop_assert_eq!(g.multiply(g.multiply(x, y), z), g.multiply(x, g.multiply(y, z)));
        prop_assert_eq!(g.multiply(x, g.inverse(x)), g.identity());
        prop_assert_eq!(g.length(g.inverse(x)), g.length(x));
        prop_assert_eq!(g.from_word(&g.word(x).iter().map(|&s| s as usize).collect::<Vec<_>>()).unwrap(), x);
        prop_assert!(g.length(g.multiply(x, y)) <= g.length(x) + g.length(y));
        prop_assert_eq!(g.sign(g.multiply(x, y)), g.sign(x) * g.sign(y));
        let w0 = g.longest();
        prop_assert_eq!(g.length(g.multiply(x, w0)), g.length(w0) - g.length(x));
    }

    #[test]
    fn orders_are_compatible(k in 0..NAMES.len(), a in any::<usize>(), b in any::<usize>()) {
        let g = group(k);
        let (x, y) = (elem(g, a), elem(g, b));
        if g.weak_left_leq(x, y) {
            prop_assert!(g.bruhat_leq(x, y));
        }
        if g.bruhat_leq(x, y) && g.bruhat_leq(y, x) {
            prop_assert_eq!(x, y);
        }
        // multiplication by the longest element reverses Bruhat order
        let w0 = g.longest();
        prop_assert_eq!(g.bruhat_leq(x, y), g.bruhat_leq(g.multiply(y, w0), g.multiply(x, w0)));
    }

    #[test]
    fn hecke_algebra_laws(a in hecke(group(1)), b in hecke(group(1)), c in hecke(group(1)), s in 0usize..3) {
        let ab = a.t_mul(&b).unwrap();
        prop_assert_eq!(ab.t_mul(&c).unwrap(), a.t_mul(&b.t_mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!(ab.bar(), a.bar().t_mul(&b.bar()).unwrap());
        prop_assert_eq!(ab.star(), b.star().t_mul(&a.star()).unwrap());
        // T_s^2 = 1 + (q - q^-1) T_s
        let ts = a.t_mul_generator(s, Side::Left);
        let lhs = ts.t_mul_generator(s, Side::Left);
        let rhs = a.checked_add(&ts.scale(&LaurentInt::q_minus_q_inv())).unwrap();
        prop_assert_eq!(lhs, rhs);
        let left_right = a.t_mul_generator(s, Side::Left).t_mul_generator(s, Side::Right);
        prop_assert_eq!(left_right, a.t_mul_generator(s, Side::Right).t_mul_generator(s, Side::Left));
    }

    #[test]
    fn kl_basis_structure(w in 0usize..48, s in 0usize..3) {
        let kl = b3_kl();
        let g = kl.group();
        let w = elem(g, w);
        let c = kl.c(w);
        prop_assert_eq!(c.bar(), c.clone());
        // T_s C_w = -q^-1 C_w exactly when s is a left descent
        if g.is_left_descent(s, w) {
            prop_assert_eq!(c.t_mul_generator(s, Side::Left), c.scale(&-LaurentInt::q_inv()));
        }
        for (y, p) in c.terms() {
            prop_assert!(g.bruhat_leq(y, w));
            prop_assert!(y == w || p.in_q_zq());
        }
    }

    #[test]
    fn ej_classification(k in 0..3usize, mask in 0u32..8, s in 0usize..3, i in any::<usize>()) {
        let g = group(k);
        let j = GenSet(mask & ((1 << g.rank()) - 1));
        let sys = ParabolicSystem::new(g, j).unwrap();
        prop_assume!(!sys.ej().is_empty());
        let s = s % g.rank();
        let x = sys.ej()[i % sys.ej().len()];
        let sx = g.left_mul(s, x);
        match sys.classify_ej(s, x).unwrap() {
            EjClass::Minus => prop_assert!(sys.ej_position(sx).is_some() && g.length(sx) < g.length(x)),
            EjClass::Plus => prop_assert!(sys.ej_position(sx).is_some() && g.length(sx) > g.length(x)),
            EjClass::ZeroMinus(t) => prop_assert!(j.contains(t) && sx == g.right_mul(x, t)),
            EjClass::ZeroPlus(t) => prop_assert!(!j.contains(t) && sx == g.right_mul(x, t)),
        }
        prop_assert_eq!(g.descents(x, Side::Right), j);
    }

    #[test]
    fn rs_is_a_shape_preserving_bijection(perm in (1usize..8).prop_flat_map(permutation_of)) {
        let (p, q) = rs_insert(&perm);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert!(p.is_standard() && q.is_standard());
        let mut inverse = vec![0; perm.len()];
        for (i, &v) in perm.iter().enumerate() {
            inverse[v - 1] = i + 1;
        }
        prop_assert_eq!(rs_insert(&inverse), (q.clone(), p.clone()));
        let reversed: Vec<usize> = perm.iter().rev().copied().collect();
        prop_assert_eq!(rs_insert(&reversed).0, p.transpose());
    }

    #[test]
    fn permutations_match_group_elements(i in any::<usize>(), j in any::<usize>()) {
        let g = group(0);
        let (x, y) = (elem(g, i), elem(g, j));
        let (px, py, pxy) = (permutation(g, x), permutation(g, y), permutation(g, g.multiply(x, y)));
        let inversions = |p: &[usize]| (0..p.len()).flat_map(|a| (a + 1..p.len()).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count();
        prop_assert_eq!(inversions(&px), g.length(x));
        // one-line composition: (xy)(k) = x(y(k))
        let composed: Vec<usize> = py.iter().map(|&k| px[k - 1]).collect();
        prop_assert_eq!(pxy, composed);
    }

    #[test]
    fn conjugation_reverses_dominance(a in partition(), b in partition()) {
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!(a.conjugate().n(), a.n());
        if a.n() == b.n() {
            prop_assert_eq!(a.dominated_by(&b).unwrap(), b.conjugate().dominated_by(&a.conjugate()).unwrap());
        } else {
            prop_assert!(a.dominated_by(&b).is_err());
        }
        let text = a.to_string();
        prop_assert_eq!(text.trim_matches(|c| c == '(' || c == ')').parse::<Partition>().unwrap(), a);
    }

    #[test]
    fn laurent_text_and_json_round_trip(a in laurent()) {
        prop_assert_eq!(a.to_string().parse::<LaurentInt>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentInt>(&json).unwrap(), a);
    }

    #[test]
    fn echelon_span(vectors in prop::collection::vec(prop::collection::btree_map(0usize..5, laurent(), 0..4), 0..5)) {
        let vectors: Vec<SparseVec> = vectors
            .into_iter()
            .map(|v| v.into_iter().filter(|(_, c)| !c.is_zero()).collect())
            .collect();
        let mut basis = EchelonBasis::new();
        for v in &vectors {
            basis.insert(v.clone());
        }
        prop_assert_eq!(basis.rank(), rank(vectors.clone()));
        prop_assert!(basis.rank() <= vectors.len().min(5));
        for v in &vectors {
            prop_assert!(basis.contains(v.clone()));
            // scalar multiples and sums stay in the span
            let doubled: SparseVec = v.iter().map(|(&i, c)| (i, c * &LaurentInt::from(2) * LaurentInt::q())).collect();
            prop_assert!(basis.contains(doubled));
        }
    }

    #[test]
    fn unitriangular_inverse(entries in prop::collection::vec(laurent(), 6)) {
        let mut m = LMatrix::identity(4);
        let mut it = entries.into_iter();
        for r in 0..4 {
            for c in r + 1..4 {
                m[(r, c)] = it.next().unwrap();
            }
        }
        let inv = m.unitriangular_inverse().unwrap();
        prop_assert_eq!(m.mul(&inv), LMatrix::identity(4));
        prop_assert_eq!(inv.mul(&m), LMatrix::identity(4));
    }
}
