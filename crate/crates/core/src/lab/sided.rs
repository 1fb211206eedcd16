//! Single-instance statements: uniqueness, one-sided annihilator inverses,
//! Drazin correspondences, definition forms, and the elementary facts.

use alloc::vec;
use alloc::vec::Vec;

use super::{Lab, Sink, Value};
use crate::inverses::{bc_solutions, bc_solutions_sandwich, bc_solutions_unit, inverse_along, is_lann, is_rann, mp_solutions};
use crate::ring::Elem;

fn abc(a: Elem, b: Elem, c: Elem) -> Vec<(&'static str, Value)> {
    vec![("a", a.into()), ("b", b.into()), ("c", c.into())]
}

fn abcx(a: Elem, b: Elem, c: Elem, name: &'static str, x: Elem) -> Vec<(&'static str, Value)> {
    let mut v = abc(a, b, c);
    v.push((name, x.into()));
    v
}

pub(super) fn uniqueness(lab: &Lab, t: usize, sink: &mut Sink) {
    if !sink.tick() {
        return;
    }
    let (a, b, c) = lab.triple(t);
    sink.expect(!lab.ann_multi[t], "at-most-one-ann-inverse", || abc(a, b, c));
    sink.expect(!lab.bc_multi[t], "at-most-one-bc-inverse", || abc(a, b, c));
}

pub(super) fn sided_composition(lab: &Lab, t: usize, sink: &mut Sink) {
    let (a, b, c) = lab.triple(t);
    let r = lab.ring();
    for &xl in lab.lann.get(t) {
        for &xr in lab.rann.get(t) {
            if !sink.tick() {
                return;
            }
            let w = r.mul3(xl, a, xr);
            sink.expect(lab.ann[t] == Some(w), "x_l-a-x_r-is-ann-inverse", || {
                let mut v = abc(a, b, c);
                v.extend([("x_l", xl.into()), ("x_r", xr.into())]);
                v
            });
        }
    }
}

pub(super) fn sided_propositions(lab: &Lab, i: usize, sink: &mut Sink) {
    let cert = lab.ann_certs[i];
    let (a, b, c, x) = (cert.a, cert.b, cert.c, cert.x);
    let ctx = lab.ctx();
    let r = lab.ring();
    let t = lab.triple_index(a, b, c);
    let lset = lab.lann.get(t);
    let rset = lab.rann.get(t);
    for &xl in lset {
        for &xr in rset {
            if !sink.tick() {
                return;
            }
            let vars = || {
                let mut v = abcx(a, b, c, "x", x);
                v.extend([("x_l", xl.into()), ("x_r", xr.into())]);
                v
            };
            sink.iff(
                x == xl,
                ctx.in_left_multiples(xl, xr),
                "inverse-is-x_l=>x_l-in-Rx_r",
                "x_l-in-Rx_r=>inverse-is-x_l",
                vars,
            );
            sink.iff(
                x == xr,
                ctx.in_right_multiples(xr, xl),
                "inverse-is-x_r=>x_r-in-x_lR",
                "x_r-in-x_lR=>inverse-is-x_r",
                vars,
            );
        }
    }
    for &xl in lset {
        if !sink.tick() {
            return;
        }
        let vars = || {
            let mut v = abcx(a, b, c, "x", x);
            v.push(("x_l", xl.into()));
            v
        };
        let w = r.mul3(xl, a, xl);
        sink.expect(
            ctx.left_annihilator(b).is_subset(ctx.left_annihilator(w)),
            "lann(b)-in-lann(x_l-a-x_l)",
            vars,
        );
        sink.expect(r.mul3(w, a, xl) == w, "x_l-a-x_l-a-x_l=x_l-a-x_l", vars);
        sink.iff(
            x == w,
            r.mul3(c, a, xl) == c,
            "inverse-is-x_l-a-x_l=>c-a-x_l=c",
            "c-a-x_l=c=>inverse-is-x_l-a-x_l",
            vars,
        );
        if lab.is_outer(a, xl) {
            sink.iff(
                x == xl,
                ctx.in_left_multiples(c, xl),
                "regular:inverse-is-x_l=>c-in-Rx_l",
                "regular:c-in-Rx_l=>inverse-is-x_l",
                vars,
            );
        }
        sink.expect(!ctx.in_left_multiples(xl, c) || x == xl, "x_l-in-Rc=>inverse-is-x_l", vars);
    }
    for &xr in rset {
        if !sink.tick() {
            return;
        }
        let vars = || {
            let mut v = abcx(a, b, c, "x", x);
            v.push(("x_r", xr.into()));
            v
        };
        let w = r.mul3(xr, a, xr);
        sink.expect(
            ctx.right_annihilator(c).is_subset(ctx.right_annihilator(w)),
            "rann(c)-in-rann(x_r-a-x_r)",
            vars,
        );
        sink.expect(r.mul3(xr, a, w) == w, "x_r-a-x_r-a-x_r=x_r-a-x_r", vars);
        sink.iff(
            x == w,
            r.mul3(xr, a, b) == b,
            "inverse-is-x_r-a-x_r=>x_r-a-b=b",
            "x_r-a-b=b=>inverse-is-x_r-a-x_r",
            vars,
        );
        if lab.is_outer(a, xr) {
            sink.iff(
                x == xr,
                ctx.in_right_multiples(b, xr),
                "regular:inverse-is-x_r=>b-in-x_rR",
                "regular:b-in-x_rR=>inverse-is-x_r",
                vars,
            );
        }
        sink.expect(!ctx.in_right_multiples(xr, b) || x == xr, "x_r-in-bR=>inverse-is-x_r", vars);
    }
}

/// `x` solving the four non-idempotent conditions gives the inverse `xax`.
pub(super) fn two_sided_solution(lab: &Lab, t: usize, sink: &mut Sink) {
    let (a, b, c) = lab.triple(t);
    let ctx = lab.ctx();
    let rset = lab.rann.get(t);
    for &x in lab.lann.get(t) {
        if rset.binary_search(&x).is_err() {
            continue;
        }
        if !sink.tick() {
            return;
        }
        let w = ctx.ring().mul3(x, a, x);
        let vars = || abcx(a, b, c, "x", x);
        sink.expect(lab.ann[t] == Some(w), "x-a-x-is-ann-inverse", vars);
        sink.iff(w == x, ctx.in_left_multiples(x, x), "xax=x=>x-in-Rx", "x-in-Rx=>xax=x", vars);
        sink.iff(w == x, ctx.in_right_multiples(x, x), "xax=x=>x-in-xR", "x-in-xR=>xax=x", vars);
    }
}

pub(super) fn faithful_uniqueness(lab: &Lab, i: usize, sink: &mut Sink) {
    let cert = lab.ann_certs[i];
    let (a, b, c, x) = (cert.a, cert.b, cert.c, cert.x);
    let ctx = lab.ctx();
    let r = lab.ring();
    let t = lab.triple_index(a, b, c);
    let (left_faithful, right_faithful) = (ctx.is_left_faithful(), ctx.is_right_faithful());
    for &xl in lab.lann.get(t) {
        if !sink.tick() {
            return;
        }
        let vars = || {
            let mut v = abcx(a, b, c, "x", x);
            v.push(("x_l", xl.into()));
            v
        };
        sink.expect(ctx.left_kernel().contains(r.sub(xl, x)), "x_l-minus-inverse-in-left-kernel", vars);
        if left_faithful {
            sink.expect(xl == x, "left-faithful=>x_l-is-inverse", vars);
        }
    }
    for &xr in lab.rann.get(t) {
        if !sink.tick() {
            return;
        }
        let vars = || {
            let mut v = abcx(a, b, c, "x", x);
            v.push(("x_r", xr.into()));
            v
        };
        sink.expect(ctx.right_kernel().contains(r.sub(xr, x)), "x_r-minus-inverse-in-right-kernel", vars);
        if right_faithful {
            sink.expect(xr == x, "right-faithful=>x_r-is-inverse", vars);
        }
    }
}

pub(super) fn drazin_regularization(lab: &Lab, t: usize, sink: &mut Sink) {
    let (a, b, c) = lab.triple(t);
    let ctx = lab.ctx();
    let r = lab.ring();
    for &xl in lab.lann.get(t) {
        let Some((d, _)) = lab.drazin(r.mul(xl, a)) else {
            continue;
        };
        if !sink.tick() {
            return;
        }
        let w = r.mul(d, xl);
        let vars = || {
            let mut v = abcx(a, b, c, "x_l", xl);
            v.push(("t", d.into()));
            v
        };
        sink.expect(is_lann(ctx, a, b, c, w), "t-x_l-is-lann", vars);
        sink.expect(lab.is_outer(a, w), "t-x_l-is-regular", vars);
    }
    for &xr in lab.rann.get(t) {
        let Some((d, _)) = lab.drazin(r.mul(a, xr)) else {
            continue;
        };
        if !sink.tick() {
            return;
        }
        let w = r.mul(xr, d);
        let vars = || {
            let mut v = abcx(a, b, c, "x_r", xr);
            v.push(("t", d.into()));
            v
        };
        sink.expect(is_rann(ctx, a, b, c, w), "x_r-t-is-rann", vars);
        sink.expect(lab.is_outer(a, w), "x_r-t-is-regular", vars);
    }
}

pub(super) fn drazin_ann_equivalence(lab: &Lab, i: usize, sink: &mut Sink) {
    if !sink.tick() {
        return;
    }
    let ctx = lab.ctx();
    let a = Elem(i as u16);
    let vars = || vec![("a", Value::from(a))];
    let powers = ctx.ring().powers(a, lab.size() + 1);
    let sweep = |get: &dyn Fn(Elem) -> Option<Elem>| {
        powers.iter().enumerate().find_map(|(k, &p)| get(p).map(|x| (x, k as u32 + 1)))
    };
    let ann = sweep(&|p| lab.ann(a, p, p));
    let bc = sweep(&|p| lab.bc(a, p, p));
    let drazin = lab.drazin(a);
    sink.expect(!lab.drazin_multi[i], "drazin-inverse-unique", vars);
    sink.iff(drazin.is_some(), ann.is_some(), "drazin=>ann-power-invertible", "ann-power-invertible=>drazin", vars);
    sink.iff(drazin.is_some(), bc.is_some(), "drazin=>bc-power-invertible", "bc-power-invertible=>drazin", vars);
    if let (Some((d, m)), Some((x, k))) = (drazin, ann) {
        sink.expect(d == x, "drazin-inverse-equals-ann-power-inverse", vars);
        sink.expect(m == k, "index-equals-least-ann-power", vars);
    }
    if let (Some((d, m)), Some((x, k))) = (drazin, bc) {
        sink.expect(d == x, "drazin-inverse-equals-bc-power-inverse", vars);
        sink.expect(m == k, "index-equals-least-bc-power", vars);
    }
    if let Some((d, m)) = drazin {
        let p = powers[m as usize - 1];
        sink.expect(ctx.left_annihilator(p).is_subset(ctx.left_annihilator(d)), "lann(a^ind)-in-lann(a^D)", vars);
        sink.expect(ctx.right_annihilator(p).is_subset(ctx.right_annihilator(d)), "rann(a^ind)-in-rann(a^D)", vars);
    }
}

pub(super) fn definition_forms(lab: &Lab, t: usize, sink: &mut Sink) {
    if !sink.tick() {
        return;
    }
    let (a, b, c) = lab.triple(t);
    let ctx = lab.ctx();
    let principal = bc_solutions(ctx, a, b, c);
    let sandwich = bc_solutions_sandwich(ctx, a, b, c);
    let unit = bc_solutions_unit(ctx, a, b, c);
    let vars = || abc(a, b, c);
    sink.expect(principal == sandwich, "principal-form-equals-sandwich-form", vars);
    sink.expect(principal == unit, "principal-form-equals-unit-form", vars);
    if let Some(x) = lab.bc[t] {
        sink.expect(lab.ann[t] == Some(x), "bc-inverse-is-ann-inverse", vars);
    }
}

pub(super) fn along_forms(lab: &Lab, i: usize, sink: &mut Sink) {
    if !sink.tick() {
        return;
    }
    let n = lab.size();
    let (a, d) = (Elem((i / n) as u16), Elem((i % n) as u16));
    let vars = || vec![("a", Value::from(a)), ("d", d.into())];
    match inverse_along(lab.ctx(), a, d) {
        Ok(found) => sink.expect(
            found.map(|cert| cert.witness) == lab.bc(a, d, d),
            "inverse-along-d-equals-dd-inverse",
            vars,
        ),
        Err(_) => sink.record("inverse-along-d-equals-dd-inverse", vars()),
    }
}

pub(super) fn facts_bc(lab: &Lab, i: usize, sink: &mut Sink) {
    if !sink.tick() {
        return;
    }
    let cert = lab.bc_certs[i];
    let ctx = lab.ctx();
    let vars = || abcx(cert.a, cert.b, cert.c, "x", cert.x);
    sink.expect(ctx.right_multiples(cert.b) == ctx.right_multiples(cert.x), "bR=xR", vars);
    sink.expect(ctx.left_multiples(cert.c) == ctx.left_multiples(cert.x), "Rc=Rx", vars);
    sink.expect(lab.is_outer(cert.a, cert.x), "bc-inverse-xax=x", vars);
}

pub(super) fn facts_ann(lab: &Lab, i: usize, sink: &mut Sink) {
    if !sink.tick() {
        return;
    }
    let cert = lab.ann_certs[i];
    let ctx = lab.ctx();
    let vars = || abcx(cert.a, cert.b, cert.c, "x", cert.x);
    sink.expect(ctx.left_annihilator(cert.x) == ctx.left_annihilator(cert.b), "lann(x)=lann(b)", vars);
    sink.expect(ctx.right_annihilator(cert.x) == ctx.right_annihilator(cert.c), "rann(x)=rann(c)", vars);
    sink.expect(lab.is_outer(cert.a, cert.x), "ann-inverse-xax=x", vars);
}

pub(super) fn facts_outer(lab: &Lab, i: usize, sink: &mut Sink) {
    let n = lab.size();
    let (a, x) = (Elem((i / n) as u16), Elem((i % n) as u16));
    if !lab.is_outer(a, x) {
        return;
    }
    let ctx = lab.ctx();
    let r = lab.ring();
    let ax = r.mul(a, x);
    let xa = r.mul(x, a);
    for t in r.elements() {
        if !sink.tick() {
            return;
        }
        let vars = || vec![("a", Value::from(a)), ("x", x.into()), ("t", t.into())];
        sink.iff(ctx.in_right_multiples(t, x), r.mul3(x, a, t) == t, "t-in-xR=>t=xat", "t=xat=>t-in-xR", vars);
        sink.iff(ctx.in_left_multiples(t, x), r.mul3(t, a, x) == t, "t-in-Rx=>t=tax", "t=tax=>t-in-Rx", vars);
        sink.iff(ctx.in_right_multiples(t, ax), r.mul(ax, t) == t, "t-in-axR=>t=axt", "t=axt=>t-in-axR", vars);
        sink.iff(ctx.in_left_multiples(t, xa), r.mul(t, xa) == t, "t-in-Rxa=>t=txa", "t=txa=>t-in-Rxa", vars);
    }
}

pub(super) fn mp_correspondence(lab: &Lab, i: usize, sink: &mut Sink) {
    if !sink.tick() {
        return;
    }
    let a = Elem(i as u16);
    let vars = || vec![("a", Value::from(a))];
    let Ok(sols) = mp_solutions(lab.ctx(), a) else {
        return;
    };
    let a_star = lab.ring().star(a).expect("ring has an involution");
    let ann = lab.ann(a, a_star, a_star);
    sink.expect(sols.len() <= 1, "mp-inverse-unique", vars);
    sink.iff(!sols.is_empty(), ann.is_some(), "mp=>ann-star-invertible", "ann-star-invertible=>mp", vars);
    if let (Some(&x), Some(y)) = (sols.first(), ann) {
        sink.expect(x == y, "mp-inverse-equals-ann-star-inverse", vars);
    }
}
