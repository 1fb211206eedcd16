use ringinv_core::{
    attach_involution, make_matrix_ring, make_zmod, subring_closure, transpose_permutation, Elem, FiniteRing, Lab,
    LabConfig, RingContext, Theorem, Value,
};

fn johnson() -> FiniteRing {
    let m3 = make_matrix_ring(3, 2).unwrap();
    let gens: Vec<Elem> = ["e11", "e21", "e22", "e31"].iter().map(|l| m3.find_label(l).unwrap()).collect();
    subring_closure(&m3, &gens).unwrap()
}

fn lab(r: FiniteRing) -> Lab {
    Lab::new(RingContext::new(r), LabConfig::default())
}

fn assert_all_pass(lab: &Lab) {
    for t in Theorem::ALL {
        let res = lab.run(t, u64::MAX, 5);
        assert!(!res.exhausted);
        assert!(res.counterexamples.is_empty(), "{} on {}: {:?}", t.id(), lab.ring().name(), res.counterexamples);
    }
}

#[test]
fn every_theorem_holds_on_small_rings() {
    let m2 = make_matrix_ring(2, 2).unwrap();
    let m2_star = attach_involution(&m2, &transpose_permutation(&m2).unwrap()).unwrap();
    let z5_star = attach_involution(&make_zmod(5).unwrap(), &[0, 1, 2, 3, 4]).unwrap();
    for r in [make_zmod(1).unwrap(), make_zmod(6).unwrap(), make_zmod(12).unwrap(), z5_star, johnson(), m2_star] {
        assert_all_pass(&lab(r));
    }
}

#[test]
fn every_theorem_holds_without_the_formal_identity() {
    let l = Lab::new(RingContext::new(johnson()), LabConfig { include_formal_one: false, cline_max_exponent: 2 });
    assert_all_pass(&l);
}

#[test]
fn triple_counts() {
    assert_eq!(lab(johnson()).run(Theorem::Uniqueness, u64::MAX, 0).tuples, 4096);
    assert_eq!(lab(make_zmod(6).unwrap()).run(Theorem::Uniqueness, u64::MAX, 0).tuples, 216);
}

#[test]
fn mp_needs_an_involution() {
    let l = lab(make_zmod(4).unwrap());
    assert_eq!(l.skip_reason(Theorem::MpCorrespondence), Some("no involution"));
    assert_eq!(l.outer_len(Theorem::MpCorrespondence), 0);
}

fn elem_var(r: &FiniteRing, vars: &[(&str, Value)], name: &str) -> Option<String> {
    vars.iter().find(|(k, _)| *k == name).and_then(|(_, v)| match v {
        Value::Elem(e) => Some(r.label(*e).to_string()),
        _ => None,
    })
}

#[test]
fn nonunique_search_finds_the_extra_right_solution() {
    let l = lab(johnson());
    let r = l.ring();
    let res = l.run(Theorem::SearchNonuniqueSided, u64::MAX, usize::MAX);
    let hit = res.counterexamples.iter().find(|c| {
        c.clause == "rann-differs-from-ann-inverse"
            && elem_var(r, &c.vars, "a").as_deref() == Some("e11+e22")
            && elem_var(r, &c.vars, "b").as_deref() == Some("e11+e21")
            && elem_var(r, &c.vars, "c").as_deref() == Some("e11+e21")
    });
    let hit = hit.expect("instance found");
    assert_eq!(elem_var(r, &hit.vars, "y").as_deref(), Some("e11+e21+e31"));
    assert!(hit.vars.contains(&("solutions", Value::Int(2))));

    let faithful = lab(make_zmod(6).unwrap());
    assert!(faithful.run(Theorem::SearchNonuniqueSided, u64::MAX, usize::MAX).counterexamples.is_empty());
}

#[test]
fn nonregular_search_finds_the_idempotent_instance() {
    let l = lab(johnson());
    let r = l.ring();
    let res = l.run(Theorem::SearchNonregularSided, u64::MAX, usize::MAX);
    assert!(res.counterexamples.iter().any(|c| {
        c.clause == "nonregular-rann"
            && ["a", "b", "c"].iter().all(|v| elem_var(r, &c.vars, v).as_deref() == Some("e22"))
            && elem_var(r, &c.vars, "y").as_deref() == Some("e22+e31")
    }));
}

#[test]
fn budget_truncates_deterministically() {
    let l = lab(johnson());
    let full = l.run(Theorem::IntertwiningAnn, u64::MAX, 0);
    let cut = l.run(Theorem::IntertwiningAnn, 1000, 0);
    assert!(!full.exhausted && cut.exhausted);
    assert_eq!(cut.tuples, 1000);
    let exact = l.run(Theorem::IntertwiningAnn, full.tuples, 0);
    assert!(!exact.exhausted);
}
