//! Transport of inverses from `a₁a₂` to `a₂a₁`.

use alloc::vec::Vec;

use super::{Lab, Sink, Value};
use crate::ring::Elem;
use crate::unital::Mult;

fn factors(lab: &Lab, i: usize) -> (Elem, Elem) {
    let n = lab.size();
    (Elem((i / n) as u16), Elem((i % n) as u16))
}

/// `(a₁a₂)ⁿ⁺¹` annihilator `(b,c)`-invertible with inverse `x` gives
/// `(a₂a₁)ⁿ` annihilator `(a₂b, ca₁)`-invertible with inverse `a₂xa₁`.
pub(super) fn cline_power(lab: &Lab, i: usize, sink: &mut Sink) {
    let r = lab.ring();
    let (a1, a2) = factors(lab, i);
    let p = r.mul(a1, a2);
    let q = r.mul(a2, a1);
    let max = lab.config.cline_max_exponent as usize;
    let p_pows = r.powers(p, max + 1);
    let q_pows = r.powers(q, max);
    for e in 1..=max {
        let pe = p_pows[e - 1];
        let qe = q_pows[e - 1];
        for cert in lab.ann_certs_of(p_pows[e]) {
            if !sink.tick() {
                return;
            }
            let (b, c, x) = (cert.b, cert.c, cert.x);
            let w = r.mul3(a2, x, a1);
            let vars = || {
                Vec::from([
                    ("a1", a1.into()),
                    ("a2", a2.into()),
                    ("n", Value::Int(e as u64)),
                    ("b", b.into()),
                    ("c", c.into()),
                    ("x", x.into()),
                ])
            };
            sink.expect(
                lab.ann(qe, r.mul(a2, b), r.mul(c, a1)) == Some(w),
                "a2-x-a1-is-ann-(a2b,ca1)-inverse-of-(a2a1)^n",
                vars,
            );
            if r.mul(x, pe) == r.mul(pe, x) {
                sink.expect(r.mul(w, qe) == r.mul(qe, w), "x-commutes-with-(a1a2)^n=>a2-x-a1-commutes-with-(a2a1)^n", vars);
            }
            if lab.bicommutant(p).contains(x) {
                sink.expect(lab.bicommutant(q).contains(w), "x-in-comm2(a1a2)=>a2-x-a1-in-comm2(a2a1)", vars);
            }
        }
    }
}

/// The R¹ elements `μ` with `p·b ∈ bμ·R` and `ν` with `c·p ∈ R·νc`.
fn multipliers(lab: &Lab, p: Elem, b: Elem, c: Elem) -> (Vec<Mult>, Vec<Mult>) {
    let ctx = lab.ctx();
    let r = lab.ring();
    let pb = r.mul(p, b);
    let cp = r.mul(c, p);
    let ys = lab.ys();
    let mus = ys.iter().copied().filter(|&mu| ctx.in_right_multiples(pb, lab.ry(b, mu))).collect();
    let nus = ys.iter().copied().filter(|&nu| ctx.in_left_multiples(cp, lab.ly(nu, c))).collect();
    (mus, nus)
}

pub(super) fn cline_commuting(lab: &Lab, i: usize, sink: &mut Sink) {
    let r = lab.ring();
    let (a1, a2) = factors(lab, i);
    let p = r.mul(a1, a2);
    let q = r.mul(a2, a1);
    for cert in lab.ann_certs_of(p) {
        let (b, c, x) = (cert.b, cert.c, cert.x);
        let commutes = r.mul(x, p) == r.mul(p, x);
        let w = r.product(&[a2, x, x, a1]);
        let base = || {
            Vec::from([
                ("a1", a1.into()),
                ("a2", a2.into()),
                ("b", b.into()),
                ("c", c.into()),
                ("x", x.into()),
            ])
        };
        if commutes {
            if !sink.tick() {
                return;
            }
            sink.expect(
                lab.ann(q, r.mul(a2, b), r.mul(c, a1)) == Some(w),
                "x-commutes=>a2-x2-a1-is-ann-(a2b,ca1)-inverse",
                base,
            );
        }
        let (mus, nus) = multipliers(lab, p, b, c);
        for &mu in &mus {
            let bmu = r.mul(a2, lab.ry(b, mu));
            for &nu in &nus {
                if !sink.tick() {
                    return;
                }
                let vars = || {
                    let mut v = base();
                    v.extend([("mu", Value::from(mu)), ("nu", nu.into())]);
                    v
                };
                sink.expect(commutes, "mu-nu-hypotheses=>x-commutes-with-a1a2", vars);
                let cnu = r.mul(lab.ly(nu, c), a1);
                sink.expect(lab.ann(q, bmu, cnu) == Some(w), "a2-x2-a1-is-ann-(a2-b-mu,nu-c-a1)-inverse", vars);
            }
        }
    }
}

pub(super) fn cline_semigroup(lab: &Lab, i: usize, sink: &mut Sink) {
    let r = lab.ring();
    let (a1, a2) = factors(lab, i);
    let p = r.mul(a1, a2);
    let q = r.mul(a2, a1);
    for cert in lab.bc_certs_of(p) {
        let (b, c, x) = (cert.b, cert.c, cert.x);
        let w = r.product(&[a2, x, x, a1]);
        let base = || {
            Vec::from([
                ("a1", a1.into()),
                ("a2", a2.into()),
                ("b", b.into()),
                ("c", c.into()),
                ("x", x.into()),
            ])
        };
        let (mus, nus) = multipliers(lab, p, b, c);
        for &mu in &mus {
            let bmu = r.mul(a2, lab.ry(b, mu));
            for &nu in &nus {
                if !sink.tick() {
                    return;
                }
                let cnu = r.mul(lab.ly(nu, c), a1);
                sink.expect(lab.bc(q, bmu, cnu) == Some(w), "a2-x2-a1-is-(a2-b-mu,nu-c-a1)-inverse", || {
                    let mut v = base();
                    v.extend([("mu", Value::from(mu)), ("nu", nu.into())]);
                    v
                });
            }
        }
        if b == c && r.mul(x, p) == r.mul(p, x) {
            if !sink.tick() {
                return;
            }
            let d = r.mul3(a2, b, a1);
            sink.expect(lab.bc(q, d, d) == Some(w), "b=c=d,x-commutes=>a2-x2-a1-is-(a2da1,a2da1)-inverse", base);
        }
    }
}

/// `a₁a₂a₁ = a₁a₃a₁` with `x` the commuting `(d,d)`-inverse of `a₁a₂`: `a₃x²a₁`
/// is the `(a₃da₁, a₃da₁)`-inverse of `a₃a₁` and commutes with it.
pub(super) fn cline_third_factor(lab: &Lab, i: usize, sink: &mut Sink) {
    let r = lab.ring();
    let (a1, a2) = factors(lab, i);
    let p = r.mul(a1, a2);
    let pa1 = r.mul(p, a1);
    for cert in lab.bc_certs_of(p) {
        let (d, x) = (cert.b, cert.x);
        if cert.c != d || r.mul(x, p) != r.mul(p, x) {
            continue;
        }
        let xx = r.mul(x, x);
        for a3 in r.elements().filter(|&a3| r.mul3(a1, a3, a1) == pa1) {
            if !sink.tick() {
                return;
            }
            let s = r.mul(a3, a1);
            let w = r.mul3(a3, xx, a1);
            let dd = r.mul3(a3, d, a1);
            let vars = || {
                Vec::from([
                    ("a1", a1.into()),
                    ("a2", a2.into()),
                    ("a3", a3.into()),
                    ("d", d.into()),
                    ("x", x.into()),
                ])
            };
            sink.expect(lab.bc(s, dd, dd) == Some(w), "a3-x2-a1-is-(a3da1,a3da1)-inverse-of-a3a1", vars);
            sink.expect(r.mul(w, s) == r.mul(s, w), "a3-x2-a1-commutes-with-a3a1", vars);
        }
    }
}

pub(super) fn index_bound(lab: &Lab, i: usize, sink: &mut Sink) {
    let r = lab.ring();
    let (a1, a2) = factors(lab, i);
    let p = r.mul(a1, a2);
    let q = r.mul(a2, a1);
    let (Some((x, k)), Some((z, k2))) = (lab.drazin(p), lab.drazin(q)) else {
        return;
    };
    if !sink.tick() {
        return;
    }
    let vars = || Vec::from([("a1", Value::from(a1)), ("a2", a2.into())]);
    sink.expect(k.abs_diff(k2) <= 1, "index-difference-at-most-one", vars);
    let w = r.product(&[a2, x, x, a1]);
    sink.expect(z == w, "drazin(a2a1)=a2-drazin(a1a2)^2-a1", vars);
    let qk = r.pow(q, k + 1).expect("positive exponent");
    sink.expect(lab.bc(q, qk, qk) == Some(w), "a2-x2-a1-is-(q^(k+1),q^(k+1))-inverse", vars);
}
