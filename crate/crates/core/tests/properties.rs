use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::select;
use ringinv_core::inverses::{
    ann_bc_inverse, ann_solutions, bc_solutions, compose_sided, is_ann_inverse, is_outer, regularize_lann,
    regularize_rann, sided_ann_inverses,
};
use ringinv_core::lab::{ann_inventory, Cert, IntertwiningResiduals};
use ringinv_core::{
    attach_involution, make_matrix_ring, make_zmod, subring_closure, transpose_permutation, validate_axioms, Axiom,
    Elem, FiniteRing, Lab, LabConfig, Mult, RingContext, RingTables, Side,
};

fn johnson() -> FiniteRing {
    let m3 = make_matrix_ring(3, 2).unwrap();
    let gens: Vec<Elem> = ["e11", "e21", "e22", "e31"].iter().map(|l| m3.find_label(l).unwrap()).collect();
    subring_closure(&m3, &gens).unwrap()
}

fn m2z3() -> &'static RingContext {
    static CTX: OnceLock<RingContext> = OnceLock::new();
    CTX.get_or_init(|| {
        let r = make_matrix_ring(2, 3).unwrap();
        RingContext::new(attach_involution(&r, &transpose_permutation(&r).unwrap()).unwrap())
    })
}

fn m2z3_inventory() -> &'static [Cert] {
    static INV: OnceLock<Vec<Cert>> = OnceLock::new();
    INV.get_or_init(|| ann_inventory(m2z3()))
}

fn labs() -> &'static [Lab] {
    static LABS: OnceLock<Vec<Lab>> = OnceLock::new();
    LABS.get_or_init(|| {
        [johnson(), make_matrix_ring(2, 2).unwrap(), make_zmod(12).unwrap()]
            .into_iter()
            .map(|r| Lab::new(RingContext::new(r), LabConfig::default()))
            .collect()
    })
}

fn test_rings() -> Vec<FiniteRing> {
    vec![make_zmod(6).unwrap(), make_zmod(7).unwrap(), johnson(), make_matrix_ring(2, 2).unwrap()]
}

/// Re-evaluates an axiom at its reported witness directly on the tables.
fn fails_at(t: &RingTables, axiom: Axiom, w: &[Elem]) -> bool {
    let add = |a: usize, b: usize| t.add[a][b];
    let mul = |a: usize, b: usize| t.mul[a][b];
    let i: Vec<usize> = w.iter().map(|e| e.idx()).collect();
    match axiom {
        Axiom::MulAssociative => mul(mul(i[0], i[1]), i[2]) != mul(i[0], mul(i[1], i[2])),
        Axiom::LeftDistributive => mul(i[0], add(i[1], i[2])) != add(mul(i[0], i[1]), mul(i[0], i[2])),
        Axiom::RightDistributive => mul(add(i[0], i[1]), i[2]) != add(mul(i[0], i[2]), mul(i[1], i[2])),
        Axiom::OneIsIdentity => mul(i[0], i[1]) != i[1] || mul(i[1], i[0]) != i[1],
        Axiom::IdentityDeclared => t.one.is_none() && (0..t.size).all(|x| mul(i[0], x) == x && mul(x, i[0]) == x),
        _ => false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// With at least three elements, changing any one product breaks an axiom.
    #[test]
    fn single_corrupted_product_is_caught(ring in 0usize..4, a in any::<prop::sample::Index>(),
                                          b in any::<prop::sample::Index>(), shift in 1usize..64) {
        let r = &test_rings()[ring];
        let n = r.size();
        let mut t = r.to_tables();
        let (a, b) = (a.index(n), b.index(n));
        t.mul[a][b] = (t.mul[a][b] + shift % (n - 1) + 1) % n;
        let report = validate_axioms(&t).unwrap();
        let failure = report.first_failure().expect("corruption detected");
        let witness = failure.witness.clone().unwrap();
        prop_assert!(fails_at(&t, failure.axiom, &witness), "{:?} at {:?}", failure.axiom, witness);
    }

    #[test]
    fn powers_add_exponents(a in 0u16..81, i in 1u32..9, j in 1u32..9) {
        let r = m2z3().ring();
        let a = Elem(a);
        prop_assert_eq!(r.pow(a, i + j).unwrap(), r.mul(r.pow(a, i).unwrap(), r.pow(a, j).unwrap()));
        let listed = r.powers(a, 9);
        prop_assert_eq!(listed[(i - 1) as usize], r.pow(a, i).unwrap());
    }

    #[test]
    fn star_laws(x in 0u16..81, y in 0u16..81) {
        let r = m2z3().ring();
        let s = |e| r.star(e).unwrap();
        let (x, y) = (Elem(x), Elem(y));
        prop_assert_eq!(s(s(x)), x);
        prop_assert_eq!(s(r.add(x, y)), r.add(s(x), s(y)));
        prop_assert_eq!(s(r.mul(x, y)), r.mul(s(y), s(x)));
    }

    /// °a is a left ideal and a° a right ideal.
    #[test]
    fn annihilators_are_one_sided_ideals(a in 0u16..81, s in 0u16..81, t in 0u16..81, u in 0u16..81) {
        let ctx = m2z3();
        let r = ctx.ring();
        let (a, s, t, u) = (Elem(a), Elem(s), Elem(t), Elem(u));
        let left = ctx.left_annihilator(a);
        if left.contains(s) && left.contains(t) {
            prop_assert!(left.contains(r.sub(s, t)));
            prop_assert!(left.contains(r.mul(u, s)));
        }
        let right = ctx.right_annihilator(a);
        if right.contains(s) && right.contains(t) {
            prop_assert!(right.contains(r.sub(s, t)));
            prop_assert!(right.contains(r.mul(s, u)));
        }
    }

    /// At most one annihilator (b,c)-inverse, and every (b,c)-inverse is one.
    #[test]
    fn uniqueness_and_weakening(a in 0u16..81, b in 0u16..81, c in 0u16..81) {
        let ctx = m2z3();
        let (a, b, c) = (Elem(a), Elem(b), Elem(c));
        let ann = ann_solutions(ctx, a, b, c);
        prop_assert!(ann.len() <= 1);
        let bc = bc_solutions(ctx, a, b, c);
        prop_assert!(bc.len() <= 1);
        if let Some(&x) = bc.first() {
            prop_assert_eq!(ann.first(), Some(&x));
        }
    }

    #[test]
    fn residual_identities_hold_for_every_tuple(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(),
                                                y in 0u16..81) {
        let r = m2z3().ring();
        let inv = m2z3_inventory();
        let (c1, c2) = (inv[i.index(inv.len())], inv[j.index(inv.len())]);
        let res = IntertwiningResiduals::compute(r, &c1, &c2, Mult::Of(Elem(y)));
        prop_assert_eq!(res.identities(r, &c1, &c2), [true; 3]);
        prop_assert_eq!(res.variant_identities(r, &c1, &c2), [true; 4]);
    }

    /// The lab's tables agree with fresh solver calls.
    #[test]
    fn inventory_agrees_with_solver(lab in select(labs()), a in any::<prop::sample::Index>(),
                                    b in any::<prop::sample::Index>(), c in any::<prop::sample::Index>()) {
        let n = lab.size();
        let (a, b, c) = (Elem(a.index(n) as u16), Elem(b.index(n) as u16), Elem(c.index(n) as u16));
        let solved = ann_bc_inverse(lab.ctx(), a, b, c).unwrap().map(|cert| cert.witness);
        prop_assert_eq!(lab.ann(a, b, c), solved);
        let listed = lab.ann_certs_of(a).iter().find(|k| k.b == b && k.c == c).map(|k| k.x);
        prop_assert_eq!(listed, solved);
    }

    /// Composition, and regularization of one-sided solutions, on random triples.
    #[test]
    fn one_sided_solutions(lab in select(labs()), a in any::<prop::sample::Index>(),
                           b in any::<prop::sample::Index>(), c in any::<prop::sample::Index>()) {
        let ctx = lab.ctx();
        let n = lab.size();
        let (a, b, c) = (Elem(a.index(n) as u16), Elem(b.index(n) as u16), Elem(c.index(n) as u16));
        let left = sided_ann_inverses(ctx, a, b, c, Side::Left);
        let right = sided_ann_inverses(ctx, a, b, c, Side::Right);
        let x = lab.ann(a, b, c);
        prop_assert_eq!(x.is_some(), !left.is_empty() && !right.is_empty());
        for &xl in &left.solutions {
            for &xr in &right.solutions {
                prop_assert_eq!(Some(compose_sided(ctx, a, b, c, xl, xr).unwrap()), x);
            }
            if let Some(reg) = regularize_lann(ctx, a, b, c, xl).unwrap() {
                prop_assert!(left.contains(reg) && is_outer(ctx, a, reg));
            }
        }
        for &xr in &right.solutions {
            if let Some(reg) = regularize_rann(ctx, a, b, c, xr).unwrap() {
                prop_assert!(right.contains(reg) && is_outer(ctx, a, reg));
            }
        }
        if let Some(x) = x {
            prop_assert!(is_ann_inverse(ctx, a, b, c, x));
        }
    }
}
