//! Self-contained worked examples with their expected outcomes.

use anyhow::{bail, Result};
use ringinv_core::inverses::{ann_bc_inverse, compose_sided, sided_ann_inverses};
use ringinv_core::{Elem, FiniteRing, RingContext, Side};
use serde::Serialize;

use crate::rings;

pub const NAMES: [&str; 3] = ["johnson-regular-extra", "johnson-nonregular", "mp-annihilator-gap"];

/// Older names still accepted on the command line.
pub const ALIASES: [(&str, &str); 3] =
    [("johnson-2.1", NAMES[0]), ("johnson-2.2", NAMES[1]), ("mp-remark", NAMES[2])];

/// Maps an alias to its current name; other input is returned unchanged.
pub fn canonical(name: &str) -> &str {
    ALIASES.iter().find(|(alias, _)| *alias == name).map_or(name, |(_, to)| to)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub check: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub scenario: String,
    pub ring: String,
    pub checks: Vec<Check>,
}

impl Outcome {
    pub fn matches(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    fn push(&mut self, check: &str, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let ok = expected == actual;
        self.checks.push(Check { check: check.into(), expected, actual, ok });
    }
}

pub fn run(name: &str) -> Result<Outcome> {
    match canonical(name) {
        "johnson-regular-extra" => johnson_regular_extra(),
        "johnson-nonregular" => johnson_nonregular(),
        "mp-annihilator-gap" => mp_annihilator_gap(),
        _ => bail!("unknown example `{name}` (expected one of {})", NAMES.join(", ")),
    }
}

fn el(r: &FiniteRing, label: &str) -> Result<Elem> {
    Ok(rings::element(r, label)?)
}

fn set_label(r: &FiniteRing, xs: &[Elem]) -> String {
    let labels: Vec<&str> = xs.iter().map(|&x| r.label(x)).collect();
    format!("{{{}}}", labels.join(", "))
}

fn opt_label(r: &FiniteRing, x: Option<Elem>) -> String {
    x.map_or_else(|| "none".to_string(), |x| r.label(x).to_string())
}

fn outcome(scenario: &str, ctx: &RingContext) -> Outcome {
    Outcome { scenario: scenario.into(), ring: ctx.ring().name().into(), checks: Vec::new() }
}

/// An extra right solution next to the two-sided inverse, itself regular.
fn johnson_regular_extra() -> Result<Outcome> {
    let ctx = RingContext::new(rings::johnson()?);
    let r = ctx.ring();
    let (a, bc) = (el(r, "e11+e22")?, el(r, "e11+e21")?);
    let y = el(r, "e11+e21+e31")?;
    let mut out = outcome(NAMES[0], &ctx);

    let x = ann_bc_inverse(&ctx, a, bc, bc)?.map(|c| c.witness);
    out.push("ann-inverse", "e11+e21", opt_label(r, x));
    let rann = sided_ann_inverses(&ctx, a, bc, bc, Side::Right);
    out.push("rann-set", set_label(r, &[bc, y]), set_label(r, &rann.solutions));
    out.push("rann e11+e21+e31 regular", "true", rann.is_regular(y).map_or("absent".into(), |b| b.to_string()));
    out.push("rann e11+e21+e31 differs from ann-inverse", "true", (Some(y) != x).to_string());
    let lann = sided_ann_inverses(&ctx, a, bc, bc, Side::Left);
    let mut products = Vec::new();
    for &xl in &lann.solutions {
        for &xr in &rann.solutions {
            products.push(compose_sided(&ctx, a, bc, bc, xl, xr)?);
        }
    }
    products.sort();
    products.dedup();
    out.push("x_l a x_r over all one-sided pairs", "{e11+e21}", set_label(r, &products));
    Ok(out)
}

/// A right solution that is not regular.
fn johnson_nonregular() -> Result<Outcome> {
    let ctx = RingContext::new(rings::johnson()?);
    let r = ctx.ring();
    let a = el(r, "e22")?;
    let y = el(r, "e22+e31")?;
    let mut out = outcome(NAMES[1], &ctx);

    let x = ann_bc_inverse(&ctx, a, a, a)?.map(|c| c.witness);
    out.push("ann-inverse", "e22", opt_label(r, x));
    let rann = sided_ann_inverses(&ctx, a, a, a, Side::Right);
    out.push("rann contains e22+e31", "true", rann.contains(y).to_string());
    out.push("rann e22+e31 regular", "false", rann.is_regular(y).map_or("absent".into(), |b| b.to_string()));
    out.push("rann e22+e31 differs from ann-inverse", "true", (Some(y) != x).to_string());
    Ok(out)
}

/// With `a = e11` and `x = 1` in M₂(ℤ₂), `x a a* = a*` holds but `x` is not a
/// left annihilator (a*,a*)-inverse: `e21` kills `a*` on the right but not `x`.
fn mp_annihilator_gap() -> Result<Outcome> {
    let ctx = RingContext::new(rings::builtin("M2Z2T")?);
    let r = ctx.ring();
    let a = el(r, "e11")?;
    let a_star = r.star(a).expect("transpose attached");
    let x = r.one().expect("matrix ring is unital");
    let w = el(r, "e21")?;
    let mut out = outcome(NAMES[2], &ctx);

    out.push("x", "e11+e22", r.label(x));
    out.push("x a a* = a*", "true", (r.mul3(x, a, a_star) == a_star).to_string());
    let inclusion = ctx.right_annihilator(a_star).is_subset(ctx.right_annihilator(x));
    out.push("(a*)° ⊆ x°", "false", inclusion.to_string());
    let witnesses: Vec<Elem> = r
        .elements()
        .filter(|&t| ctx.right_annihilator(a_star).contains(t) && !ctx.right_annihilator(x).contains(t))
        .collect();
    out.push("e21 ∈ (a*)° \\ x°", "true", witnesses.contains(&w).to_string());
    let lann = sided_ann_inverses(&ctx, a, a_star, a_star, Side::Left);
    out.push("x is a lann-(a*,a*)-inverse", "false", lann.contains(x).to_string());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_scenarios_match() {
        for name in NAMES {
            let o = run(name).unwrap();
            assert!(o.matches(), "{name}: {:?}", o.checks.iter().filter(|c| !c.ok).collect::<Vec<_>>());
        }
    }

    #[test]
    fn aliases_resolve() {
        for (alias, name) in ALIASES {
            assert_eq!(run(alias).unwrap().scenario, name);
        }
    }

    #[test]
    fn unknown_name() {
        assert!(run("johnson-9").is_err());
    }
}
