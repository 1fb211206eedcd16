//! Named rings and element lookup.
//!
//! A ring spec is either a path to a ring file or one of the names
//!
//! * `Z<n>`: integers modulo `n`;
//! * `M<k>Z<n>`: `k`×`k` matrices over ℤₙ;
//! * a trailing `T` on either of these attaches the transpose involution
//!   (the identity on ℤₙ);
//! * `johnson`: the subring of `M3Z2` generated by `e11, e21, e22, e31`;
//! * `UT2Z2`: upper triangular 2×2 matrices over ℤ₂;
//! * `<spec>x<spec>`: direct product, e.g. `Z2xZ3`.

use std::path::Path;

use anyhow::{bail, Context, Result};
use ringinv_core::{
    attach_involution, subring_closure, transpose_permutation, Elem, FiniteRing, RingError, RingFactory,
};

use crate::format;

/// The rings of the standard verification run.
pub const STANDARD_SUITE: [&str; 12] =
    ["Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z2xZ3", "UT2Z2", "johnson", "M2Z2"];

pub fn factory() -> RingFactory {
    RingFactory::with_cap(format::size_cap())
}

/// Resolves a ring spec, preferring an existing file over a name.
pub fn resolve(spec: &str) -> Result<FiniteRing> {
    let path = Path::new(spec);
    if path.is_file() {
        return Ok(format::load(path)?);
    }
    builtin(spec).with_context(|| format!("`{spec}` is neither a ring file nor a known ring name"))
}

pub fn builtin(name: &str) -> Result<FiniteRing> {
    let f = factory();
    match name {
        "johnson" => return Ok(johnson()?),
        "UT2Z2" => return Ok(upper_triangular()?),
        _ => {}
    }
    if let Some((l, r)) = name.split_once('x') {
        let ring = f.product(&builtin(l)?, &builtin(r)?)?;
        return Ok(ring.with_name(name));
    }
    let (base, star) = match name.strip_suffix('T') {
        Some(base) => (base, true),
        None => (name, false),
    };
    let ring = if let Some(n) = base.strip_prefix('Z') {
        f.zmod(parse_count(n, name)?)?
    } else if let Some((k, n)) = base.strip_prefix('M').and_then(|s| s.split_once('Z')) {
        f.matrix(parse_count(k, name)?, parse_count(n, name)?)?
    } else {
        bail!("unknown ring name `{name}`");
    };
    if !star {
        return Ok(ring);
    }
    let perm = if base.starts_with('Z') { (0..ring.size()).collect() } else { transpose_permutation(&ring)? };
    Ok(attach_involution(&ring, &perm)?.with_name(name))
}

fn parse_count(digits: &str, name: &str) -> Result<usize> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        bail!("unknown ring name `{name}`");
    }
    Ok(digits.parse()?)
}

fn closure(ambient: &FiniteRing, gens: &[&str]) -> Result<FiniteRing, RingError> {
    let gens = gens.iter().map(|g| element(ambient, g)).collect::<Result<Vec<_>, _>>()?;
    subring_closure(ambient, &gens)
}

/// The 16-element non-unital ring spanned by `e11, e21, e22, e31` in M₃(ℤ₂).
pub fn johnson() -> Result<FiniteRing, RingError> {
    Ok(closure(&factory().matrix(3, 2)?, &["e11", "e21", "e22", "e31"])?.with_name("johnson"))
}

pub fn upper_triangular() -> Result<FiniteRing, RingError> {
    Ok(closure(&factory().matrix(2, 2)?, &["e11", "e12", "e22"])?.with_name("UT2Z2"))
}

/// An element by exact label, or else by decimal index.
pub fn element(ring: &FiniteRing, text: &str) -> Result<Elem, RingError> {
    if let Some(e) = ring.find_label(text) {
        return Ok(e);
    }
    match text.parse::<usize>() {
        Ok(i) => ring.elem(i),
        Err(_) => Err(RingError::UnknownLabel(text.to_string())),
    }
}

/// Parses a comma-separated permutation, or `identity` / `transpose`.
pub fn permutation(ring: &FiniteRing, text: &str) -> Result<Vec<usize>> {
    match text {
        "identity" => Ok((0..ring.size()).collect()),
        "transpose" => Ok(transpose_permutation(ring)?),
        _ => text
            .split(',')
            .map(|p| p.trim().parse::<usize>().with_context(|| format!("bad permutation entry `{p}`")))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(builtin("Z6").unwrap().size(), 6);
        assert_eq!(builtin("M2Z3").unwrap().size(), 81);
        assert!(builtin("M2Z2T").unwrap().has_star());
        assert!(builtin("Z5T").unwrap().has_star());
        let p = builtin("Z2xZ3").unwrap();
        assert_eq!((p.size(), p.name()), (6, "Z2xZ3"));
        assert_eq!(builtin("UT2Z2").unwrap().size(), 8);
        assert!(builtin("Q8").is_err());
        assert!(builtin("Z").is_err());
    }

    #[test]
    fn johnson_is_non_unital() {
        let j = builtin("johnson").unwrap();
        assert_eq!(j.size(), 16);
        assert!(!j.is_unital());
    }

    #[test]
    fn element_lookup() {
        let j = johnson().unwrap();
        let e = element(&j, "e11+e21").unwrap();
        assert_eq!(j.label(e), "e11+e21");
        assert_eq!(element(&j, "3").unwrap(), Elem(3));
        assert_eq!(element(&j, "e12"), Err(RingError::UnknownLabel("e12".into())));
        assert!(matches!(element(&j, "99"), Err(RingError::ElementOutOfRange { .. })));
    }
}
