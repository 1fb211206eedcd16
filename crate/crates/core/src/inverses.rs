//! Verified search for generalized inverses.
//!
//! Every solver scans ring elements, so "no solution" is exact. When a scan finds
//! more solutions than a uniqueness statement allows, or two routes that must
//! agree do not, the solver returns [`InverseError::Violation`] instead of
//! picking one.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::ring::Elem;
use crate::sets::{RingContext, Sandwich, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InverseKind {
    Bc,
    Along,
    LeftBc,
    RightBc,
    AnnBc,
    Lann,
    Rann,
    MoorePenrose,
    Drazin,
    Core,
}

impl InverseKind {
    pub fn name(self) -> &'static str {
        match self {
            InverseKind::Bc => "bc",
            InverseKind::Along => "along",
            InverseKind::LeftBc => "left-bc",
            InverseKind::RightBc => "right-bc",
            InverseKind::AnnBc => "ann",
            InverseKind::Lann => "lann",
            InverseKind::Rann => "rann",
            InverseKind::MoorePenrose => "mp",
            InverseKind::Drazin => "drazin",
            InverseKind::Core => "core",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Condition {
    pub name: &'static str,
    pub holds: bool,
}

/// A verified inverse of `a` relative to `(b, c)`.
///
/// For `Along` both `b` and `c` hold `d`; for `Drazin` they hold `a^m` with `m`
/// the index; for `Core` they are `a` and `a*`; for `MoorePenrose` they are `a*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseCertificate {
    pub kind: InverseKind,
    pub a: Elem,
    pub b: Elem,
    pub c: Elem,
    pub witness: Elem,
    pub conditions: Vec<Condition>,
    pub drazin_index: Option<u32>,
}

impl InverseCertificate {
    pub fn all_hold(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }
}

/// All one-sided solutions of a problem, ascending by element index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SidedSolutionSet {
    pub solutions: Vec<Elem>,
    /// `regular[i]` ⟺ `solutions[i]·a·solutions[i] = solutions[i]`.
    pub regular: Vec<bool>,
}

impl SidedSolutionSet {
    pub fn contains(&self, x: Elem) -> bool {
        self.solutions.binary_search(&x).is_ok()
    }

    pub fn is_regular(&self, x: Elem) -> Option<bool> {
        self.solutions.binary_search(&x).ok().map(|i| self.regular[i])
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
}

/// Evidence that a uniqueness or agreement statement failed on a concrete
/// instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub statement: &'static str,
    pub elements: Vec<(&'static str, Elem)>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at", self.statement)?;
        for (name, e) in &self.elements {
            write!(f, " {name}={}", e.0)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InverseError {
    NoInvolution,
    Precondition(&'static str),
    Violation(Violation),
}

impl fmt::Display for InverseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InverseError::NoInvolution => f.write_str("ring has no involution"),
            InverseError::Precondition(p) => write!(f, "precondition failed: {p}"),
            InverseError::Violation(v) => v.fmt(f),
        }
    }
}

impl core::error::Error for InverseError {}

fn violation(statement: &'static str, elements: Vec<(&'static str, Elem)>) -> InverseError {
    InverseError::Violation(Violation { statement, elements })
}

fn conds(list: &[(&'static str, bool)]) -> Vec<Condition> {
    list.iter().map(|&(name, holds)| Condition { name, holds }).collect()
}

// ---------------------------------------------------------------------------
// Membership predicates
// ---------------------------------------------------------------------------

/// The five annihilator (b,c)-inverse conditions for a candidate `x`.
pub fn ann_conditions(ctx: &RingContext, a: Elem, b: Elem, c: Elem, x: Elem) -> [bool; 5] {
    let r = ctx.ring();
    [
        r.mul3(x, a, x) == x,
        r.mul3(x, a, b) == b,
        r.mul3(c, a, x) == c,
        ctx.left_annihilator(b).is_subset(ctx.left_annihilator(x)),
        ctx.right_annihilator(c).is_subset(ctx.right_annihilator(x)),
    ]
}

/// Cheapest conditions first: the two product equations, then `xax = x`, then
/// the annihilator inclusions.
#[inline]
pub fn is_ann_inverse(ctx: &RingContext, a: Elem, b: Elem, c: Elem, x: Elem) -> bool {
    let r = ctx.ring();
    r.mul3(x, a, b) == b
        && r.mul3(c, a, x) == c
        && r.mul3(x, a, x) == x
        && ctx.left_annihilator(b).is_subset(ctx.left_annihilator(x))
        && ctx.right_annihilator(c).is_subset(ctx.right_annihilator(x))
}

/// `xab = b` and `c° ⊆ x°`.
#[inline]
pub fn is_lann(ctx: &RingContext, a: Elem, b: Elem, c: Elem, x: Elem) -> bool {
    ctx.ring().mul3(x, a, b) == b && ctx.right_annihilator(c).is_subset(ctx.right_annihilator(x))
}

/// `cay = c` and `°b ⊆ °y`.
#[inline]
pub fn is_rann(ctx: &RingContext, a: Elem, b: Elem, c: Elem, y: Elem) -> bool {
    ctx.ring().mul3(c, a, y) == c && ctx.left_annihilator(b).is_subset(ctx.left_annihilator(y))
}

/// `xab = b`, `cax = c`, `x ∈ bR`, `x ∈ Rc`.
#[inline]
pub fn is_bc_inverse(ctx: &RingContext, a: Elem, b: Elem, c: Elem, x: Elem) -> bool {
    let r = ctx.ring();
    r.mul3(x, a, b) == b
        && r.mul3(c, a, x) == c
        && ctx.in_right_multiples(x, b)
        && ctx.in_left_multiples(x, c)
}

/// `x` is idempotent-regular: `xax = x`.
#[inline]
pub fn is_outer(ctx: &RingContext, a: Elem, x: Elem) -> bool {
    ctx.ring().mul3(x, a, x) == x
}

// ---------------------------------------------------------------------------
// Raw scans (all solutions)
// ---------------------------------------------------------------------------

/// Every solution of the five annihilator (b,c)-conditions.
pub fn ann_solutions(ctx: &RingContext, a: Elem, b: Elem, c: Elem) -> Vec<Elem> {
    ctx.ring().elements().filter(|&x| is_ann_inverse(ctx, a, b, c, x)).collect()
}

/// Solutions of `xab = b`, `cax = c`, `x ∈ bR`, `x ∈ Rc`, scanning only
/// `bR ∩ Rc`.
pub fn bc_solutions(ctx: &RingContext, a: Elem, b: Elem, c: Elem) -> Vec<Elem> {
    let r = ctx.ring();
    ctx.right_multiples(b)
        .intersection(ctx.left_multiples(c))
        .iter()
        .filter(|&x| r.mul3(x, a, b) == b && r.mul3(c, a, x) == c)
        .collect()
}

/// Solutions of the sandwich form `xab = b`, `cax = c`, `x ∈ bRx`, `x ∈ xRc`,
/// scanning every element.
pub fn bc_solutions_sandwich(ctx: &RingContext, a: Elem, b: Elem, c: Elem) -> Vec<Elem> {
    let r = ctx.ring();
    r.elements()
        .filter(|&x| r.mul3(x, a, b) == b && r.mul3(c, a, x) == c)
        .filter(|&x| {
            ctx.sandwich_set(Sandwich::BSX, b, x, false).contains(x)
                && ctx.sandwich_set(Sandwich::XSC, c, x, false).contains(x)
        })
        .collect()
}

/// Solutions with the membership conditions taken over R¹: `x ∈ bR¹`, `x ∈ R¹c`.
pub fn bc_solutions_unit(ctx: &RingContext, a: Elem, b: Elem, c: Elem) -> Vec<Elem> {
    let r = ctx.ring();
    r.elements()
        .filter(|&x| r.mul3(x, a, b) == b && r.mul3(c, a, x) == c)
        .filter(|&x| ctx.in_right_multiples_unit(x, b) && ctx.in_left_multiples_unit(x, c))
        .collect()
}

/// Every `(x, m)` with `x²a = x`, `ax = xa`, and `m` the least positive integer
/// with `a^{m+1}x = a^m`.
pub fn drazin_solutions(ctx: &RingContext, a: Elem) -> Vec<(Elem, u32)> {
    let r = ctx.ring();
    let n = r.size();
    // Powers a^1..a^{n+2}; the index never exceeds the pre-period of a, which is
    // at most n.
    let pw = r.powers(a, n + 2);
    let mut out = Vec::new();
    for x in r.elements() {
        if r.mul3(x, x, a) != x || r.mul(a, x) != r.mul(x, a) {
            continue;
        }
        if let Some(m) = (1..=n + 1).find(|&m| r.mul(pw[m], x) == pw[m - 1]) {
            out.push((x, m as u32));
        }
    }
    out
}

/// Every solution of the four Penrose equations.
pub fn mp_solutions(ctx: &RingContext, a: Elem) -> Result<Vec<Elem>, InverseError> {
    let r = ctx.ring();
    if !r.has_star() {
        return Err(InverseError::NoInvolution);
    }
    let star = |e: Elem| r.star(e).unwrap();
    Ok(r.elements()
        .filter(|&x| {
            let ax = r.mul(a, x);
            let xa = r.mul(x, a);
            r.mul(ax, a) == a && r.mul(xa, x) == x && star(ax) == ax && star(xa) == xa
        })
        .collect())
}

// ---------------------------------------------------------------------------
// Solvers
// ---------------------------------------------------------------------------

/// The (b,c)-inverse of `a`, if any.
///
/// Scans `bR ∩ Rc`; a found witness is also checked against the sandwich form
/// (`x ∈ bRx`, `x ∈ xRc`), the R¹ form, and `xax = x`.
pub fn bc_inverse(
    ctx: &RingContext,
    a: Elem,
    b: Elem,
    c: Elem,
) -> Result<Option<InverseCertificate>, InverseError> {
    let vars = || vec![("a", a), ("b", b), ("c", c)];
    let sols = bc_solutions(ctx, a, b, c);
    if sols.len() > 1 {
        let mut v = vars();
        v.push(("x1", sols[0]));
        v.push(("x2", sols[1]));
        return Err(violation("uniqueness of the (b,c)-inverse", v));
    }
    let unit = bc_solutions_unit(ctx, a, b, c);
    if unit != sols {
        return Err(violation("agreement of the bS and bS¹ membership forms", vars()));
    }
    let Some(&x) = sols.first() else {
        return Ok(None);
    };
    let in_bsx = ctx.sandwich_set(Sandwich::BSX, b, x, false).contains(x);
    let in_xsc = ctx.sandwich_set(Sandwich::XSC, c, x, false).contains(x);
    let outer = is_outer(ctx, a, x);
    if !(in_bsx && in_xsc && outer) {
        let mut v = vars();
        v.push(("x", x));
        let statement = if outer {
            "agreement of the sandwich and principal-ideal forms"
        } else {
            "outer-inverse property xax = x"
        };
        return Err(violation(statement, v));
    }
    Ok(Some(InverseCertificate {
        kind: InverseKind::Bc,
        a,
        b,
        c,
        witness: x,
        conditions: conds(&[
            ("xab=b", true),
            ("cax=c", true),
            ("x in bS", true),
            ("x in Sc", true),
            ("x in bSx", in_bsx),
            ("x in xSc", in_xsc),
        ]),
        drazin_index: None,
    }))
}

/// The inverse of `a` along `d`, solved from its own definition (with S¹
/// containments) and checked against the (d,d)-inverse.
pub fn inverse_along(ctx: &RingContext, a: Elem, d: Elem) -> Result<Option<InverseCertificate>, InverseError> {
    let r = ctx.ring();
    let d_right = ctx.multiples(d, Side::Right, true);
    let d_left = ctx.multiples(d, Side::Left, true);
    let sols: Vec<Elem> = r
        .elements()
        .filter(|&x| r.mul3(x, a, d) == d && r.mul3(d, a, x) == d)
        .filter(|&x| {
            ctx.multiples(x, Side::Right, true).is_subset(&d_right)
                && ctx.multiples(x, Side::Left, true).is_subset(&d_left)
        })
        .collect();
    if sols.len() > 1 {
        return Err(violation(
            "uniqueness of the inverse along d",
            vec![("a", a), ("d", d), ("x1", sols[0]), ("x2", sols[1])],
        ));
    }
    let bc = bc_inverse(ctx, a, d, d)?.map(|cert| cert.witness);
    if bc != sols.first().copied() {
        return Err(violation("inverse along d equals the (d,d)-inverse", vec![("a", a), ("d", d)]));
    }
    Ok(sols.first().map(|&x| InverseCertificate {
        kind: InverseKind::Along,
        a,
        b: d,
        c: d,
        witness: x,
        conditions: conds(&[
            ("xad=d", true),
            ("dax=d", true),
            ("xS1 in dS1", true),
            ("S1x in S1d", true),
        ]),
        drazin_index: None,
    }))
}

/// Left (`yab = b`, `y ∈ Rc`) or right (`cay = c`, `y ∈ bR`) (b,c)-inverses.
pub fn sided_bc_inverses(ctx: &RingContext, a: Elem, b: Elem, c: Elem, side: Side) -> SidedSolutionSet {
    let r = ctx.ring();
    let solutions: Vec<Elem> = match side {
        Side::Left => ctx.left_multiples(c).iter().filter(|&y| r.mul3(y, a, b) == b).collect(),
        Side::Right => ctx.right_multiples(b).iter().filter(|&y| r.mul3(c, a, y) == c).collect(),
    };
    with_regularity(ctx, a, solutions)
}

fn with_regularity(ctx: &RingContext, a: Elem, solutions: Vec<Elem>) -> SidedSolutionSet {
    let regular = solutions.iter().map(|&x| is_outer(ctx, a, x)).collect();
    SidedSolutionSet { solutions, regular }
}

/// The annihilator (b,c)-inverse of `a`, if any.
///
/// All candidates are scanned; two or more solutions are reported as a
/// violation of uniqueness.
pub fn ann_bc_inverse(
    ctx: &RingContext,
    a: Elem,
    b: Elem,
    c: Elem,
) -> Result<Option<InverseCertificate>, InverseError> {
    let sols = ann_solutions(ctx, a, b, c);
    match sols.as_slice() {
        [] => Ok(None),
        [x] => Ok(Some(ann_certificate(ctx, InverseKind::AnnBc, a, b, c, *x))),
        [x1, x2, ..] => Err(violation(
            "at most one annihilator (b,c)-inverse",
            vec![("a", a), ("b", b), ("c", c), ("x1", *x1), ("x2", *x2)],
        )),
    }
}

fn ann_certificate(ctx: &RingContext, kind: InverseKind, a: Elem, b: Elem, c: Elem, x: Elem) -> InverseCertificate {
    let [c1, c2, c3, c4, c5] = ann_conditions(ctx, a, b, c, x);
    InverseCertificate {
        kind,
        a,
        b,
        c,
        witness: x,
        conditions: conds(&[
            ("xax=x", c1),
            ("xab=b", c2),
            ("cax=c", c3),
            ("lann(b) in lann(x)", c4),
            ("rann(c) in rann(x)", c5),
        ]),
        drazin_index: None,
    }
}

/// Left (`xab = b`, `c° ⊆ x°`) or right (`cay = c`, `°b ⊆ °y`) annihilator
/// (b,c)-inverses.
pub fn sided_ann_inverses(ctx: &RingContext, a: Elem, b: Elem, c: Elem, side: Side) -> SidedSolutionSet {
    let r = ctx.ring();
    let solutions: Vec<Elem> = match side {
        Side::Left => r.elements().filter(|&x| is_lann(ctx, a, b, c, x)).collect(),
        Side::Right => r.elements().filter(|&y| is_rann(ctx, a, b, c, y)).collect(),
    };
    with_regularity(ctx, a, solutions)
}

/// `x_l · a · x_r` for a left and a right annihilator (b,c)-inverse of `a`.
pub fn compose_sided(
    ctx: &RingContext,
    a: Elem,
    b: Elem,
    c: Elem,
    x_l: Elem,
    x_r: Elem,
) -> Result<Elem, InverseError> {
    if !is_lann(ctx, a, b, c, x_l) {
        return Err(InverseError::Precondition("x_l is not a left annihilator (b,c)-inverse"));
    }
    if !is_rann(ctx, a, b, c, x_r) {
        return Err(InverseError::Precondition("x_r is not a right annihilator (b,c)-inverse"));
    }
    Ok(ctx.ring().mul3(x_l, a, x_r))
}

/// The Moore–Penrose inverse, checked against the annihilator (a*,a*)-inverse.
pub fn moore_penrose(ctx: &RingContext, a: Elem) -> Result<Option<InverseCertificate>, InverseError> {
    let sols = mp_solutions(ctx, a)?;
    let a_star = ctx.ring().star(a).expect("checked by mp_solutions");
    if sols.len() > 1 {
        return Err(violation(
            "uniqueness of the Moore-Penrose inverse",
            vec![("a", a), ("x1", sols[0]), ("x2", sols[1])],
        ));
    }
    let ann = ann_bc_inverse(ctx, a, a_star, a_star)?.map(|cert| cert.witness);
    if ann != sols.first().copied() {
        return Err(violation(
            "Moore-Penrose inverse equals the annihilator (a*,a*)-inverse",
            vec![("a", a)],
        ));
    }
    Ok(sols.first().map(|&x| InverseCertificate {
        kind: InverseKind::MoorePenrose,
        a,
        b: a_star,
        c: a_star,
        witness: x,
        conditions: conds(&[("axa=a", true), ("xax=x", true), ("(ax)*=ax", true), ("(xa)*=xa", true)]),
        drazin_index: None,
    }))
}

/// The Drazin inverse and index of `a`.
///
/// Indices are positive: an invertible element has index 1. The result is
/// checked against the least `m` for which `a` is annihilator (aᵐ,aᵐ)-invertible
/// and the least `m` for which it is (aᵐ,aᵐ)-invertible.
pub fn drazin(ctx: &RingContext, a: Elem) -> Result<Option<InverseCertificate>, InverseError> {
    let sols = drazin_solutions(ctx, a);
    if sols.len() > 1 {
        return Err(violation(
            "uniqueness of the Drazin inverse",
            vec![("a", a), ("x1", sols[0].0), ("x2", sols[1].0)],
        ));
    }
    let found = sols.first().copied();
    let ann_sweep = power_sweep(ctx, a, |p| Ok(ann_bc_inverse(ctx, a, p, p)?.map(|c| c.witness)))?;
    let bc_sweep = power_sweep(ctx, a, |p| Ok(bc_inverse(ctx, a, p, p)?.map(|c| c.witness)))?;
    if ann_sweep != found {
        return Err(violation("Drazin inverse equals the annihilator (a^m,a^m)-inverse", vec![("a", a)]));
    }
    if bc_sweep != found {
        return Err(violation("Drazin inverse equals the (a^m,a^m)-inverse", vec![("a", a)]));
    }
    Ok(found.map(|(x, m)| {
        let am = ctx.ring().pow(a, m).expect("m >= 1");
        InverseCertificate {
            kind: InverseKind::Drazin,
            a,
            b: am,
            c: am,
            witness: x,
            conditions: conds(&[("a^(m+1)x=a^m", true), ("x^2a=x", true), ("ax=xa", true)]),
            drazin_index: Some(m),
        }
    }))
}

/// Least `m` in `1..=n+1` for which `solve(a^m)` has a solution, with that
/// solution.
pub(crate) fn power_sweep(
    ctx: &RingContext,
    a: Elem,
    mut solve: impl FnMut(Elem) -> Result<Option<Elem>, InverseError>,
) -> Result<Option<(Elem, u32)>, InverseError> {
    let pw = ctx.ring().powers(a, ctx.size() + 1);
    for (i, &p) in pw.iter().enumerate() {
        if let Some(x) = solve(p)? {
            return Ok(Some((x, i as u32 + 1)));
        }
    }
    Ok(None)
}

/// The core inverse: the (a, a*)-inverse.
pub fn core_inverse(ctx: &RingContext, a: Elem) -> Result<Option<InverseCertificate>, InverseError> {
    let a_star = ctx.ring().star(a).ok_or(InverseError::NoInvolution)?;
    Ok(bc_inverse(ctx, a, a, a_star)?.map(|mut cert| {
        cert.kind = InverseKind::Core;
        cert
    }))
}

/// Turns a left annihilator (b,c)-inverse into a regular one: with
/// `t = (x_l a)^D`, the element `t x_l` is again a left annihilator
/// (b,c)-inverse and satisfies `(t x_l) a (t x_l) = t x_l`.
pub fn regularize_lann(
    ctx: &RingContext,
    a: Elem,
    b: Elem,
    c: Elem,
    x_l: Elem,
) -> Result<Option<Elem>, InverseError> {
    if !is_lann(ctx, a, b, c, x_l) {
        return Err(InverseError::Precondition("x_l is not a left annihilator (b,c)-inverse"));
    }
    let r = ctx.ring();
    let Some(&(t, _)) = drazin_solutions(ctx, r.mul(x_l, a)).first() else {
        return Ok(None);
    };
    let out = r.mul(t, x_l);
    if !(is_lann(ctx, a, b, c, out) && is_outer(ctx, a, out)) {
        return Err(violation(
            "Drazin regularization yields a regular left annihilator inverse",
            vec![("a", a), ("b", b), ("c", c), ("x_l", x_l)],
        ));
    }
    Ok(Some(out))
}

/// Mirror of [`regularize_lann`]: with `t = (a x_r)^D`, returns `x_r t`.
pub fn regularize_rann(
    ctx: &RingContext,
    a: Elem,
    b: Elem,
    c: Elem,
    x_r: Elem,
) -> Result<Option<Elem>, InverseError> {
    if !is_rann(ctx, a, b, c, x_r) {
        return Err(InverseError::Precondition("x_r is not a right annihilator (b,c)-inverse"));
    }
    let r = ctx.ring();
    let Some(&(t, _)) = drazin_solutions(ctx, r.mul(a, x_r)).first() else {
        return Ok(None);
    };
    let out = r.mul(x_r, t);
    if !(is_rann(ctx, a, b, c, out) && is_outer(ctx, a, out)) {
        return Err(violation(
            "Drazin regularization yields a regular right annihilator inverse",
            vec![("a", a), ("b", b), ("c", c), ("x_r", x_r)],
        ));
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::make_zmod;

    fn z(n: usize) -> RingContext {
        RingContext::new(make_zmod(n).unwrap())
    }

    #[test]
    fn bc_in_z6() {
        let ctx = z(6);
        let cert = bc_inverse(&ctx, Elem(2), Elem(4), Elem(4)).unwrap().unwrap();
        assert_eq!(cert.witness, Elem(2));
        assert!(cert.all_hold());
        let zero = bc_inverse(&ctx, Elem(0), Elem(0), Elem(0)).unwrap().unwrap();
        assert_eq!(zero.witness, Elem(0));
    }

    #[test]
    fn along() {
        let ctx = z(6);
        assert_eq!(inverse_along(&ctx, Elem(2), Elem(4)).unwrap().unwrap().witness, Elem(2));
        assert_eq!(inverse_along(&ctx, Elem(0), Elem(0)).unwrap().unwrap().witness, Elem(0));
        assert_eq!(inverse_along(&z(4), Elem(2), Elem(2)).unwrap(), None);
    }

    #[test]
    fn sided_bc_z6() {
        let ctx = z(6);
        let left = sided_bc_inverses(&ctx, Elem(2), Elem(4), Elem(4), Side::Left);
        assert_eq!(left.solutions, vec![Elem(2)]);
        let trivial = sided_bc_inverses(&ctx, Elem(0), Elem(0), Elem(0), Side::Right);
        assert_eq!(trivial.solutions, vec![Elem(0)]);
    }

    #[test]
    fn ann_zero_triple() {
        let ctx = z(5);
        let cert = ann_bc_inverse(&ctx, Elem(0), Elem(0), Elem(0)).unwrap().unwrap();
        assert_eq!(cert.witness, Elem(0));
        assert!(cert.all_hold());
    }

    #[test]
    fn lann_in_z6_is_unique() {
        let ctx = z(6);
        let set = sided_ann_inverses(&ctx, Elem(2), Elem(4), Elem(4), Side::Left);
        assert_eq!(set.solutions, vec![Elem(2)]);
        assert_eq!(set.regular, vec![true]);
    }

    #[test]
    fn compose_and_regularize_z6() {
        let ctx = z(6);
        let (a, b) = (Elem(2), Elem(4));
        assert_eq!(compose_sided(&ctx, a, b, b, Elem(2), Elem(2)), Ok(Elem(2)));
        assert_eq!(compose_sided(&ctx, Elem(0), Elem(0), Elem(0), Elem(0), Elem(0)), Ok(Elem(0)));
        assert!(matches!(compose_sided(&ctx, a, b, b, Elem(1), Elem(2)), Err(InverseError::Precondition(_))));
        assert_eq!(regularize_lann(&ctx, a, b, b, Elem(2)), Ok(Some(Elem(2))));
        assert_eq!(regularize_lann(&ctx, Elem(0), Elem(0), Elem(0), Elem(0)), Ok(Some(Elem(0))));
    }

    #[test]
    fn drazin_examples() {
        let d = drazin(&z(4), Elem(2)).unwrap().unwrap();
        assert_eq!((d.witness, d.drazin_index), (Elem(0), Some(2)));
        let d = drazin(&z(6), Elem(2)).unwrap().unwrap();
        assert_eq!((d.witness, d.drazin_index), (Elem(2), Some(1)));
        let d = drazin(&z(5), Elem(1)).unwrap().unwrap();
        assert_eq!((d.witness, d.drazin_index), (Elem(1), Some(1)));
    }

    #[test]
    fn star_required() {
        let ctx = z(6);
        assert_eq!(moore_penrose(&ctx, Elem(1)), Err(InverseError::NoInvolution));
        assert_eq!(core_inverse(&ctx, Elem(1)), Err(InverseError::NoInvolution));
    }
}
