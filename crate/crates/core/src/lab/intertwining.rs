//! Intertwining relations `y·x₁ = x₂·y` and their variants.

use alloc::vec::Vec;

use super::{pair_vars, Cert, IntertwiningResiduals, Lab, Sink, Value};
use crate::ring::{Elem, FiniteRing};
use crate::unital::Mult;

/// A certificate with the products the checkers keep reusing.
#[derive(Clone, Copy)]
struct Expanded {
    cert: Cert,
    ax: Elem,
    xa: Elem,
    ab: Elem,
    ca: Elem,
}

impl Expanded {
    fn new(r: &FiniteRing, cert: Cert) -> Expanded {
        Expanded {
            cert,
            ax: r.mul(cert.a, cert.x),
            xa: r.mul(cert.x, cert.a),
            ab: r.mul(cert.a, cert.b),
            ca: r.mul(cert.c, cert.a),
        }
    }
}

fn with_y(c1: &Cert, c2: &Cert, y: Mult) -> Vec<(&'static str, Value)> {
    let mut v = pair_vars(c1, c2);
    v.push(("y", y.into()));
    v
}

pub(super) fn intertwining_ann(lab: &Lab, i: usize, sink: &mut Sink) {
    let ctx = lab.ctx();
    let r = lab.ring();
    let k1 = lab.ann_certs[i];
    let (a1, b1, c1, x1) = (k1.a, k1.b, k1.c, k1.x);
    let ys = lab.ys();
    for k2 in &lab.ann_certs {
        let (a2, b2, c2, x2) = (k2.a, k2.b, k2.c, k2.x);
        for &y in &ys {
            if !sink.tick() {
                return;
            }
            let vars = || with_y(&k1, k2, y);
            let lhs = lab.ly(y, x1) == lab.ry(x2, y);
            let yb1 = lab.ly(y, b1);
            let c2y = lab.ry(c2, y);
            let balanced = r.mul3(c2y, a1, b1) == r.mul3(c2, a2, yb1);
            let member = balanced && ctx.in_right_multiples(yb1, x2) && ctx.in_left_multiples(c2y, x1);
            let equation = balanced && r.mul3(x2, a2, yb1) == yb1 && r.mul3(c2y, a1, x1) == c2y;
            sink.iff(lhs, member, "yx1=x2y=>conditions", "conditions=>yx1=x2y", vars);
            sink.expect(member == equation, "membership-form-equals-equation-form", vars);
            let stronger = balanced && ctx.in_right_multiples(yb1, b2) && ctx.in_left_multiples(c2y, c1);
            sink.expect(!stronger || lhs, "b-c-membership=>yx1=x2y", vars);
            let res = IntertwiningResiduals::compute(r, &k1, k2, y);
            let [r6, r7, r8] = res.identities(r, &k1, k2);
            sink.expect(r6, "tau=tau-a1-x1+x2-a2-tau+x2-eps1-x1", vars);
            sink.expect(r7, "tau-a1-b1=eps2-x2-a2-eps2-x2-eps1-b1", vars);
            sink.expect(r8, "c2-a2-tau=eps3-eps3-a1-x1-c2-eps1-x1", vars);
        }
    }
}

pub(super) fn intertwining_bc(lab: &Lab, i: usize, sink: &mut Sink) {
    let ctx = lab.ctx();
    let r = lab.ring();
    let k1 = lab.bc_certs[i];
    let (a1, b1, c1, x1) = (k1.a, k1.b, k1.c, k1.x);
    let ys = lab.ys();
    for k2 in &lab.bc_certs {
        let (a2, b2, c2, x2) = (k2.a, k2.b, k2.c, k2.x);
        for &y in &ys {
            if !sink.tick() {
                return;
            }
            let vars = || with_y(&k1, k2, y);
            let lhs = lab.ly(y, x1) == lab.ry(x2, y);
            let yb1 = lab.ly(y, b1);
            let c2y = lab.ry(c2, y);
            let balanced = r.mul3(c2y, a1, b1) == r.mul3(c2, a2, yb1);
            let member = balanced && ctx.in_right_multiples(yb1, b2) && ctx.in_left_multiples(c2y, c1);
            let equation = balanced && r.mul3(x2, a2, yb1) == yb1 && r.mul3(c2y, a1, x1) == c2y;
            sink.iff(lhs, member, "yx1=x2y=>conditions", "conditions=>yx1=x2y", vars);
            sink.iff(lhs, equation, "yx1=x2y=>equations", "equations=>yx1=x2y", vars);
        }
    }
}

/// Right `(b₁,c₁)`-inverse `x₁` of `a₁` and left `(b₂,c₂)`-inverse `x₂` of
/// `a₂`: the equation form of the conditions implies `y·x₁ = x₂·y`.
///
/// The statement involves `c₁` only through `c₁a₁x₁ = c₁` and `b₂` only through
/// `x₂a₂b₂ = b₂`, both satisfied by `0`. So the instances are exactly
/// `x₁ ∈ b₁R`, `x₂ ∈ Rc₂` with the remaining variables free.
pub(super) fn one_sided_sufficiency(lab: &Lab, i: usize, sink: &mut Sink) {
    let ctx = lab.ctx();
    let r = lab.ring();
    let n = lab.size();
    let y = lab.ys()[i / n];
    let a1 = Elem((i % n) as u16);
    for c2 in r.elements() {
        let c2y = lab.ry(c2, y);
        for b1 in r.elements() {
            let yb1 = lab.ly(y, b1);
            let x1s: Vec<Elem> = ctx
                .right_multiples(b1)
                .iter()
                .filter(|&x1| r.mul3(c2y, a1, x1) == c2y)
                .collect();
            if x1s.is_empty() {
                continue;
            }
            let c2ya1b1 = r.mul3(c2y, a1, b1);
            for a2 in r.elements() {
                if c2ya1b1 != r.mul3(c2, a2, yb1) {
                    continue;
                }
                for x2 in ctx.left_multiples(c2).iter() {
                    if r.mul3(x2, a2, yb1) != yb1 {
                        continue;
                    }
                    let x2y = lab.ry(x2, y);
                    for &x1 in &x1s {
                        if !sink.tick() {
                            return;
                        }
                        sink.expect(lab.ly(y, x1) == x2y, "right-x1-left-x2:equations=>yx1=x2y", || {
                            Vec::from([
                                ("y", y.into()),
                                ("a1", a1.into()),
                                ("b1", b1.into()),
                                ("x1", x1.into()),
                                ("a2", a2.into()),
                                ("c2", c2.into()),
                                ("x2", x2.into()),
                            ])
                        });
                    }
                }
            }
        }
    }
}

/// Regular left `(b₁,c₁)`-inverse `x₁` and regular right `(b₂,c₂)`-inverse
/// `x₂`: `y·x₁ = x₂·y` implies the equation form of the conditions.
///
/// `c₁` enters only through `x₁ ∈ Rc₁` and `b₂` only through `x₂ ∈ b₂R`;
/// regularity makes `c₁ = x₁`, `b₂ = x₂` admissible, so they drop out.
pub(super) fn one_sided_necessity(lab: &Lab, i: usize, sink: &mut Sink) {
    let r = lab.ring();
    let n = lab.size();
    let y = lab.ys()[i / n];
    let a1 = Elem((i % n) as u16);
    for x1 in r.elements().filter(|&x1| lab.is_outer(a1, x1)) {
        let yx1 = lab.ly(y, x1);
        for a2 in r.elements() {
            for x2 in r.elements().filter(|&x2| lab.is_outer(a2, x2)) {
                if yx1 != lab.ry(x2, y) {
                    continue;
                }
                for b1 in r.elements().filter(|&b1| r.mul3(x1, a1, b1) == b1) {
                    let yb1 = lab.ly(y, b1);
                    for c2 in r.elements().filter(|&c2| r.mul3(c2, a2, x2) == c2) {
                        if !sink.tick() {
                            return;
                        }
                        let c2y = lab.ry(c2, y);
                        let vars = || {
                            Vec::from([
                                ("y", y.into()),
                                ("a1", a1.into()),
                                ("b1", b1.into()),
                                ("x1", x1.into()),
                                ("a2", a2.into()),
                                ("c2", c2.into()),
                                ("x2", x2.into()),
                            ])
                        };
                        sink.expect(
                            r.mul3(c2y, a1, b1) == r.mul3(c2, a2, yb1),
                            "regular-left-x1-right-x2:yx1=x2y=>c2-y-a1-b1=c2-a2-y-b1",
                            vars,
                        );
                        sink.expect(
                            r.mul3(x2, a2, yb1) == yb1,
                            "regular-left-x1-right-x2:yx1=x2y=>y-b1=x2-a2-y-b1",
                            vars,
                        );
                        sink.expect(
                            r.mul3(c2y, a1, x1) == c2y,
                            "regular-left-x1-right-x2:yx1=x2y=>c2-y=c2-y-a1-x1",
                            vars,
                        );
                    }
                }
            }
        }
    }
}

/// `a₁ = a₂`, `y = 1`: the inverses agree iff `b₁S = b₂S` and `Sc₁ = Sc₂`.
pub(super) fn same_element_special_case(lab: &Lab, i: usize, sink: &mut Sink) {
    let ctx = lab.ctx();
    let k1 = lab.bc_certs[i];
    for k2 in lab.bc_certs_of(k1.a) {
        if !sink.tick() {
            return;
        }
        let masks = ctx.right_multiples(k1.b) == ctx.right_multiples(k2.b)
            && ctx.left_multiples(k1.c) == ctx.left_multiples(k2.c);
        sink.iff(k1.x == k2.x, masks, "x1=x2=>equal-ideals", "equal-ideals=>x1=x2", || pair_vars(&k1, k2));
    }
}

/// Translation centralizers `F(s) = s·t`, `G(s) = t'·s` with `t, t' ∈ R¹`.
pub(super) fn centralizer_sufficiency(lab: &Lab, i: usize, sink: &mut Sink) {
    let ctx = lab.ctx();
    let k1 = lab.bc_certs[i];
    let ys = lab.ys();
    let unit = lab.config.include_formal_one;
    for k2 in &lab.bc_certs {
        for &y in &ys {
            if lab.ly(y, k1.a) != lab.ry(k2.a, y) {
                continue;
            }
            if !sink.tick() {
                return;
            }
            let yb1 = lab.ly(y, k1.b);
            let b2y = lab.ry(k2.b, y);
            let c2y = lab.ry(k2.c, y);
            let yc1 = lab.ly(y, k1.c);
            let (right, left) = if unit {
                (ctx.in_right_multiples_unit(yb1, b2y), ctx.in_left_multiples_unit(c2y, yc1))
            } else {
                (ctx.in_right_multiples(yb1, b2y), ctx.in_left_multiples(c2y, yc1))
            };
            if right && left {
                sink.expect(
                    lab.ly(y, k1.x) == lab.ry(k2.x, y),
                    "translation-centralizers=>yx1=x2y",
                    || with_y(&k1, k2, y),
                );
            }
        }
    }
}

pub(super) fn variants_ann(lab: &Lab, i: usize, sink: &mut Sink) {
    let ctx = lab.ctx();
    let r = lab.ring();
    let e1 = Expanded::new(r, lab.ann_certs[i]);
    let k1 = e1.cert;
    let ys = lab.ys();
    for &k2 in &lab.ann_certs {
        let e2 = Expanded::new(r, k2);
        let c2a2 = r.mul(k2.c, k2.a);
        let a2b2 = e2.ab;
        for &y in &ys {
            if !sink.tick() {
                return;
            }
            let vars = || with_y(&k1, &k2, y);
            let ya1x1 = lab.ly(y, e1.ax);
            let yx1a1 = lab.ly(y, e1.xa);
            let a2x2y = lab.ry(e2.ax, y);
            let x2a2y = lab.ry(e2.xa, y);
            let ya1b1 = lab.ly(y, e1.ab);
            let yb1 = lab.ly(y, k1.b);
            let c2y = lab.ry(k2.c, y);
            let c2a2y = lab.ry(c2a2, y);

            let (l1, l2, l3, l4) = (ya1x1 == a2x2y, yx1a1 == x2a2y, ya1x1 == x2a2y, yx1a1 == a2x2y);
            let r1 = ctx.in_right_multiples(ya1b1, e2.ax) && ctx.in_left_multiples(c2y, k1.x);
            let r2 = ctx.in_right_multiples(yb1, k2.x) && ctx.in_left_multiples(c2a2y, e1.xa);
            let r3 = ctx.in_right_multiples(ya1b1, k2.x) && ctx.in_left_multiples(c2a2y, k1.x);
            let r4 = ctx.in_right_multiples(yb1, e2.ax) && ctx.in_left_multiples(c2y, e1.xa);
            sink.iff(l1, r1, "i:y-a1-x1=a2-x2-y=>conditions", "i:conditions=>y-a1-x1=a2-x2-y", vars);
            sink.iff(l2, r2, "ii:y-x1-a1=x2-a2-y=>conditions", "ii:conditions=>y-x1-a1=x2-a2-y", vars);
            sink.iff(l3, r3, "iii:y-a1-x1=x2-a2-y=>conditions", "iii:conditions=>y-a1-x1=x2-a2-y", vars);
            sink.iff(l4, r4, "iv:y-x1-a1=a2-x2-y=>conditions", "iv:conditions=>y-x1-a1=a2-x2-y", vars);

            let s1 = ctx.in_right_multiples(ya1b1, a2b2) && ctx.in_left_multiples(c2y, k1.c);
            let s2 = ctx.in_right_multiples(yb1, k2.b) && ctx.in_left_multiples(c2a2y, e1.ca);
            let s3 = ctx.in_right_multiples(ya1b1, k2.b) && ctx.in_left_multiples(c2a2y, k1.c);
            let s4 = ctx.in_right_multiples(yb1, a2b2) && ctx.in_left_multiples(c2y, e1.ca);
            sink.expect(!s1 || l1, "i:b-c-membership=>y-a1-x1=a2-x2-y", vars);
            sink.expect(!s2 || l2, "ii:b-c-membership=>y-x1-a1=x2-a2-y", vars);
            sink.expect(!s3 || l3, "iii:b-c-membership=>y-a1-x1=x2-a2-y", vars);
            sink.expect(!s4 || l4, "iv:b-c-membership=>y-x1-a1=a2-x2-y", vars);

            let res = IntertwiningResiduals::compute(r, &k1, &k2, y);
            let [t1, t2, t3, t4] = res.variant_identities(r, &k1, &k2);
            sink.expect(t1, "tau1=tau1-a1-x1+a2-x2-tau1", vars);
            sink.expect(t2, "tau2=tau2-x1-a1+x2-a2-tau2", vars);
            sink.expect(t3, "tau3=tau3-a1-x1+x2-a2-tau3", vars);
            sink.expect(t4, "tau4=tau4-x1-a1+a2-x2-tau4", vars);
        }
    }
}

pub(super) fn variant_masks(lab: &Lab, i: usize, sink: &mut Sink) {
    if !sink.tick() {
        return;
    }
    let ctx = lab.ctx();
    let e = Expanded::new(lab.ring(), lab.ann_certs[i]);
    let k = e.cert;
    let vars = || Vec::from(k.vars(["a", "b", "c", "x"]));
    sink.expect(ctx.right_annihilator(e.ax) == ctx.right_annihilator(k.c), "rann(ax)=rann(c)", vars);
    sink.expect(ctx.left_annihilator(e.xa) == ctx.left_annihilator(k.b), "lann(xa)=lann(b)", vars);
}

pub(super) fn variants_bc(lab: &Lab, i: usize, sink: &mut Sink) {
    let ctx = lab.ctx();
    let r = lab.ring();
    let e1 = Expanded::new(r, lab.bc_certs[i]);
    let k1 = e1.cert;
    let ys = lab.ys();
    for &k2 in &lab.bc_certs {
        let e2 = Expanded::new(r, k2);
        let c2a2 = r.mul(k2.c, k2.a);
        for &y in &ys {
            if !sink.tick() {
                return;
            }
            let vars = || with_y(&k1, &k2, y);
            let ya1x1 = lab.ly(y, e1.ax);
            let yx1a1 = lab.ly(y, e1.xa);
            let a2x2y = lab.ry(e2.ax, y);
            let x2a2y = lab.ry(e2.xa, y);
            let ya1b1 = lab.ly(y, e1.ab);
            let yb1 = lab.ly(y, k1.b);
            let c2y = lab.ry(k2.c, y);
            let c2a2y = lab.ry(c2a2, y);

            let (l1, l2, l3, l4) = (ya1x1 == a2x2y, yx1a1 == x2a2y, ya1x1 == x2a2y, yx1a1 == a2x2y);
            let r1 = ctx.in_right_multiples(ya1b1, e2.ab) && ctx.in_left_multiples(c2y, k1.c);
            let r2 = ctx.in_right_multiples(yb1, k2.b) && ctx.in_left_multiples(c2a2y, e1.ca);
            let r3 = ctx.in_right_multiples(ya1b1, k2.b) && ctx.in_left_multiples(c2a2y, k1.c);
            let r4 = ctx.in_right_multiples(yb1, e2.ab) && ctx.in_left_multiples(c2y, e1.ca);
            sink.iff(l1, r1, "i:y-a1-x1=a2-x2-y=>conditions", "i:conditions=>y-a1-x1=a2-x2-y", vars);
            sink.iff(l2, r2, "ii:y-x1-a1=x2-a2-y=>conditions", "ii:conditions=>y-x1-a1=x2-a2-y", vars);
            sink.iff(l3, r3, "iii:y-a1-x1=x2-a2-y=>conditions", "iii:conditions=>y-a1-x1=x2-a2-y", vars);
            sink.iff(l4, r4, "iv:y-x1-a1=a2-x2-y=>conditions", "iv:conditions=>y-x1-a1=a2-x2-y", vars);
        }
    }
}

/// `x₁a₁ = a₂x₂` ⟺ `a₂b₂S = b₁S, Sc₁a₁ = Sc₂` ⟺ `a₂b₂ ∈ b₁S, c₁a₁ ∈ Sc₂`
/// ⟺ `b₁ ∈ a₂b₂S, c₂ ∈ Sc₁a₁`.
pub(super) fn four_way_equivalence(lab: &Lab, i: usize, sink: &mut Sink) {
    let ctx = lab.ctx();
    let r = lab.ring();
    let e1 = Expanded::new(r, lab.bc_certs[i]);
    let k1 = e1.cert;
    for &k2 in &lab.bc_certs {
        if !sink.tick() {
            return;
        }
        let e2 = Expanded::new(r, k2);
        let vars = || pair_vars(&k1, &k2);
        let s1 = e1.xa == e2.ax;
        let s2 = ctx.right_multiples(e2.ab) == ctx.right_multiples(k1.b)
            && ctx.left_multiples(e1.ca) == ctx.left_multiples(k2.c);
        let s3 = ctx.in_right_multiples(e2.ab, k1.b) && ctx.in_left_multiples(e1.ca, k2.c);
        let s4 = ctx.in_right_multiples(k1.b, e2.ab) && ctx.in_left_multiples(k2.c, e1.ca);
        sink.iff(s1, s2, "x1-a1=a2-x2=>equal-ideals", "equal-ideals=>x1-a1=a2-x2", vars);
        sink.iff(s1, s3, "x1-a1=a2-x2=>a2-b2-in-b1S", "a2-b2-in-b1S=>x1-a1=a2-x2", vars);
        sink.iff(s1, s4, "x1-a1=a2-x2=>b1-in-a2-b2S", "b1-in-a2-b2S=>x1-a1=a2-x2", vars);
    }
}
