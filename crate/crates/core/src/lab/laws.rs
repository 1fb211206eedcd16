//! Absorption and reverse order laws.

use alloc::vec::Vec;

use super::{pair_vars, Lab, Sink};
use crate::ring::Elem;

/// Left annihilator inverse `x₁` of `a₁` and right annihilator inverse `x₂` of
/// `a₂`, sharing `b`: `x₁a₁x₂ − x₂ ∈ R°`.
///
/// `c₁` enters only through `c₁° ⊆ x₁°` (take `c₁ = x₁`) and `(a₂, c₂)` only
/// through `c₂a₂x₂ = c₂` (take `c₂ = 0`), so the instances are all `x₁` with
/// `x₁a₁b = b` against all `x₂` with `°b ⊆ °x₂`.
pub(super) fn sided_absorption_shared_b(lab: &Lab, i: usize, sink: &mut Sink) {
    let ctx = lab.ctx();
    let r = lab.ring();
    let n = lab.size();
    let (b, a1) = (Elem((i / n) as u16), Elem((i % n) as u16));
    let lb = ctx.left_annihilator(b);
    let x2s: Vec<Elem> = r.elements().filter(|&x2| lb.is_subset(ctx.left_annihilator(x2))).collect();
    for x1 in r.elements().filter(|&x1| r.mul3(x1, a1, b) == b) {
        for &x2 in &x2s {
            if !sink.tick() {
                return;
            }
            let d = r.sub(r.mul3(x1, a1, x2), x2);
            sink.expect(ctx.right_kernel().contains(d), "shared-b:x1-a1-x2-minus-x2-in-right-kernel", || {
                Vec::from([("b", b.into()), ("a1", a1.into()), ("x1", x1.into()), ("x2", x2.into())])
            });
        }
    }
}

/// Dual: sharing `c`, `x₁a₂x₂ − x₁ ∈ °R`. Here `(a₁, b₁)` drop out via
/// `b₁ = 0` and `b₂` via `b₂ = x₂`.
pub(super) fn sided_absorption_shared_c(lab: &Lab, i: usize, sink: &mut Sink) {
    let ctx = lab.ctx();
    let r = lab.ring();
    let n = lab.size();
    let (c, a2) = (Elem((i / n) as u16), Elem((i % n) as u16));
    let rc = ctx.right_annihilator(c);
    let x1s: Vec<Elem> = r.elements().filter(|&x1| rc.is_subset(ctx.right_annihilator(x1))).collect();
    for x2 in r.elements().filter(|&x2| r.mul3(c, a2, x2) == c) {
        for &x1 in &x1s {
            if !sink.tick() {
                return;
            }
            let d = r.sub(r.mul3(x1, a2, x2), x1);
            sink.expect(ctx.left_kernel().contains(d), "shared-c:x1-a2-x2-minus-x1-in-left-kernel", || {
                Vec::from([("c", c.into()), ("a2", a2.into()), ("x1", x1.into()), ("x2", x2.into())])
            });
        }
    }
}

pub(super) fn absorption_pairs(lab: &Lab, i: usize, sink: &mut Sink) {
    let r = lab.ring();
    let k1 = lab.ann_certs[i];
    let (a1, x1) = (k1.a, k1.x);
    for k2 in &lab.ann_certs {
        let (shared_b, shared_c) = (k1.b == k2.b, k1.c == k2.c);
        if !shared_b && !shared_c {
            continue;
        }
        if !sink.tick() {
            return;
        }
        let (a2, x2) = (k2.a, k2.x);
        let vars = || pair_vars(&k1, k2);
        if shared_b {
            sink.expect(r.mul3(x1, a1, x2) == x2, "shared-b:x1-a1-x2=x2", vars);
            sink.expect(r.mul3(x2, a2, x1) == x1, "shared-b:x2-a2-x1=x1", vars);
        }
        if shared_c {
            sink.expect(r.mul3(x1, a2, x2) == x1, "shared-c:x1-a2-x2=x1", vars);
            sink.expect(r.mul3(x2, a1, x1) == x2, "shared-c:x2-a1-x1=x2", vars);
        }
        if shared_b && shared_c {
            let sum = r.add(x1, x2);
            let a = r.add(a1, a2);
            sink.expect(sum == r.mul3(x1, a, x2), "x1+x2=x1(a1+a2)x2", vars);
            sink.expect(sum == r.mul3(x2, a, x1), "x1+x2=x2(a1+a2)x1", vars);
        }
    }
}

pub(super) fn reverse_order_ann(lab: &Lab, i: usize, sink: &mut Sink) {
    let ctx = lab.ctx();
    let r = lab.ring();
    let k1 = lab.ann_certs[i];
    let (a1, b1, c1, x1) = (k1.a, k1.b, k1.c, k1.x);
    let x1a1 = r.mul(x1, a1);
    let a1x1 = r.mul(a1, x1);
    let c1a1 = r.mul(c1, a1);
    for k2 in &lab.ann_certs {
        if !sink.tick() {
            return;
        }
        let (a2, b2, c2, x2) = (k2.a, k2.b, k2.c, k2.x);
        let vars = || pair_vars(&k1, k2);
        let p = r.mul(a1, a2);
        let q = r.mul(x2, x1);
        let law = lab.ann(p, b2, c1) == Some(q);
        let equations = r.mul3(q, p, b2) == b2 && r.mul3(c1, p, q) == c1;
        sink.iff(law, equations, "law=>equations", "equations=>law", vars);
        let a2x2 = r.mul(a2, x2);
        let branch1 = x1a1 == a1x1 && c1 == c2;
        let branch2 = r.mul(x2, a2) == a2x2 && b1 == b2;
        let branch3 = x1a1 == a2x2;
        sink.expect(!branch1 || law, "i:x1-a1=a1-x1,c1=c2=>law", vars);
        sink.expect(!branch2 || law, "ii:x2-a2=a2-x2,b1=b2=>law", vars);
        sink.expect(!branch3 || law, "iii:x1-a1=a2-x2=>law", vars);
        let members = ctx.in_right_multiples(r.mul(a2, b2), b1) && ctx.in_left_multiples(c1a1, c2);
        sink.expect(!members || branch3, "a2-b2-in-b1R,c1-a1-in-Rc2=>x1-a1=a2-x2", vars);
    }
}

pub(super) fn reverse_order_bc(lab: &Lab, i: usize, sink: &mut Sink) {
    let ctx = lab.ctx();
    let r = lab.ring();
    let k1 = lab.bc_certs[i];
    let (a1, b1, c1, x1) = (k1.a, k1.b, k1.c, k1.x);
    let x1a1 = r.mul(x1, a1);
    let a1x1 = r.mul(a1, x1);
    let c1a1 = r.mul(c1, a1);
    let a1b1 = r.mul(a1, b1);
    for k2 in &lab.bc_certs {
        if !sink.tick() {
            return;
        }
        let (a2, b2, c2, x2) = (k2.a, k2.b, k2.c, k2.x);
        let vars = || pair_vars(&k1, k2);
        let p = r.mul(a1, a2);
        let q = r.mul(x2, x1);
        let law = lab.bc(p, b2, c1) == Some(q);
        let equations = r.mul3(q, p, b2) == b2 && r.mul3(c1, p, q) == c1;
        sink.iff(law, equations, "law=>equations", "equations=>law", vars);
        let a2x2 = r.mul(a2, x2);
        let a2b2 = r.mul(a2, b2);
        let c2a2 = r.mul(c2, a2);
        let branch1 = x1a1 == a1x1 && c1 == c2;
        let branch2 = r.mul(x2, a2) == a2x2 && b1 == b2;
        let branch3 = x1a1 == a2x2;
        sink.expect(!branch1 || law, "i:x1-a1=a1-x1,c1=c2=>law", vars);
        sink.expect(!branch2 || law, "ii:x2-a2=a2-x2,b1=b2=>law", vars);
        sink.expect(!branch3 || law, "iii:x1-a1=a2-x2=>law", vars);
        let mask1 = ctx.right_multiples(a1b1) == ctx.right_multiples(b1)
            && ctx.left_multiples(c1a1) == ctx.left_multiples(c1)
            && c1 == c2;
        let mask2 = ctx.right_multiples(a2b2) == ctx.right_multiples(b2)
            && ctx.left_multiples(c2a2) == ctx.left_multiples(c2)
            && b1 == b2;
        let mask3 = ctx.right_multiples(a2b2) == ctx.right_multiples(b1)
            && ctx.left_multiples(c1a1) == ctx.left_multiples(c2);
        sink.iff(branch1, mask1, "i:branch=>ideal-form", "i:ideal-form=>branch", vars);
        sink.iff(branch2, mask2, "ii:branch=>ideal-form", "ii:ideal-form=>branch", vars);
        sink.iff(branch3, mask3, "iii:branch=>ideal-form", "iii:ideal-form=>branch", vars);
    }
}
