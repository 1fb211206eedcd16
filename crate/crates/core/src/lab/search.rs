//! Exploratory searches. Every instance found is recorded; nothing is asserted.

use alloc::vec::Vec;

use super::{pair_vars, Lab, Sink, Value};

/// One-sided annihilator inverses that differ from the two-sided one.
pub(super) fn nonunique_sided(lab: &Lab, i: usize, sink: &mut Sink) {
    if !sink.tick() {
        return;
    }
    let k = lab.ann_certs[i];
    let (lset, rset) = (lab.lann_set(k.a, k.b, k.c), lab.rann_set(k.a, k.b, k.c));
    for (set, clause) in [(lset, "lann-differs-from-ann-inverse"), (rset, "rann-differs-from-ann-inverse")] {
        for &y in set.iter().filter(|&&y| y != k.x) {
            let mut vars = Vec::from(k.vars(["a", "b", "c", "x"]));
            vars.extend([("y", y.into()), ("solutions", Value::Int(set.len() as u64))]);
            sink.record(clause, vars);
        }
    }
}

/// One-sided annihilator inverses `y` with `yay ≠ y`.
pub(super) fn nonregular_sided(lab: &Lab, i: usize, sink: &mut Sink) {
    if !sink.tick() {
        return;
    }
    let k = lab.ann_certs[i];
    let (lset, rset) = (lab.lann_set(k.a, k.b, k.c), lab.rann_set(k.a, k.b, k.c));
    for (set, clause) in [(lset, "nonregular-lann"), (rset, "nonregular-rann")] {
        for &y in set.iter().filter(|&&y| !lab.is_outer(k.a, y)) {
            let mut vars = Vec::from(k.vars(["a", "b", "c", "x"]));
            vars.push(("y", y.into()));
            sink.record(clause, vars);
        }
    }
}

/// Pairs of (b,c)-invertible instances where none of the sufficient conditions
/// for the reverse order law applies, split by whether the law holds.
pub(super) fn reverse_order_open(lab: &Lab, i: usize, sink: &mut Sink) {
    let r = lab.ring();
    let k1 = lab.bc_certs[i];
    let x1a1 = r.mul(k1.x, k1.a);
    let a1x1 = r.mul(k1.a, k1.x);
    for k2 in &lab.bc_certs {
        let a2x2 = r.mul(k2.a, k2.x);
        let branch = (x1a1 == a1x1 && k1.c == k2.c) || (r.mul(k2.x, k2.a) == a2x2 && k1.b == k2.b) || x1a1 == a2x2;
        if branch {
            continue;
        }
        if !sink.tick() {
            return;
        }
        let law = lab.bc(r.mul(k1.a, k2.a), k2.b, k1.c) == Some(r.mul(k2.x, k1.x));
        let clause = if law { "law-holds-without-sufficient-branch" } else { "law-fails-without-sufficient-branch" };
        sink.record(clause, pair_vars(&k1, k2));
    }
}
