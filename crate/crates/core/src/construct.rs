//! Test-ring generators: ℤₙ, full matrix rings, subring closures, direct
//! products, and involutions.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::ring::{Elem, FiniteRing, RingError, DEFAULT_SIZE_CAP, HARD_SIZE_LIMIT};
use crate::validate::Axiom;

/// Constructors bounded by a configurable size cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RingFactory {
    pub size_cap: usize,
}

impl Default for RingFactory {
    fn default() -> Self {
        RingFactory { size_cap: DEFAULT_SIZE_CAP }
    }
}

impl RingFactory {
    pub fn with_cap(size_cap: usize) -> RingFactory {
        RingFactory { size_cap: size_cap.min(HARD_SIZE_LIMIT) }
    }

    fn check(&self, size: Option<usize>) -> Result<usize, RingError> {
        match size {
            Some(s) if s <= self.size_cap && s <= HARD_SIZE_LIMIT => Ok(s),
            Some(s) => Err(RingError::SizeCap { size: s, cap: self.size_cap }),
            None => Err(RingError::SizeCap { size: usize::MAX, cap: self.size_cap }),
        }
    }

    /// ℤₙ. `n = 1` gives the zero ring, in which zero is also the identity.
    pub fn zmod(&self, n: usize) -> Result<FiniteRing, RingError> {
        if n == 0 {
            return Err(RingError::Malformed("modulus must be positive".into()));
        }
        let n = self.check(Some(n))?;
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push(((a + b) % n) as u16);
                mul.push(((a * b) % n) as u16);
            }
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        Ok(FiniteRing::from_trusted(format!("Z{n}"), n, add, mul, Elem(0), None, labels))
    }

    /// The full ring of `k`×`k` matrices over ℤₙ.
    ///
    /// Elements are indexed by their entries read row-major as base-`n` digits
    /// (first entry most significant). Labels are sums of matrix units in the same
    /// order, e.g. `e11+e21` or `2e12`; the zero matrix is `0`.
    pub fn matrix(&self, k: usize, n: usize) -> Result<FiniteRing, RingError> {
        if k == 0 || n == 0 {
            return Err(RingError::Malformed("dimension and modulus must be positive".into()));
        }
        let cells = k * k;
        let size = self.check(u32::try_from(cells).ok().and_then(|c| n.checked_pow(c)))?;
        let decode = |mut idx: usize| -> Vec<usize> {
            let mut entries = vec![0; cells];
            for p in (0..cells).rev() {
                entries[p] = idx % n;
                idx /= n;
            }
            entries
        };
        let encode = |entries: &[usize]| entries.iter().fold(0usize, |acc, &v| acc * n + v);
        let mats: Vec<Vec<usize>> = (0..size).map(decode).collect();
        let mut add = Vec::with_capacity(size * size);
        let mut mul = Vec::with_capacity(size * size);
        let mut prod = vec![0; cells];
        for a in &mats {
            for b in &mats {
                let sum: Vec<usize> = a.iter().zip(b).map(|(x, y)| (x + y) % n).collect();
                add.push(encode(&sum) as u16);
                for i in 0..k {
                    for j in 0..k {
                        prod[i * k + j] = (0..k).map(|t| a[i * k + t] * b[t * k + j]).sum::<usize>() % n;
                    }
                }
                mul.push(encode(&prod) as u16);
            }
        }
        let labels = mats.iter().map(|m| matrix_label(k, m)).collect();
        Ok(FiniteRing::from_trusted(format!("M{k}Z{n}"), size, add, mul, Elem(0), None, labels))
    }

    /// Componentwise product; element `(x, y)` has index `x * |r2| + y`.
    pub fn product(&self, r1: &FiniteRing, r2: &FiniteRing) -> Result<FiniteRing, RingError> {
        let (n1, n2) = (r1.size(), r2.size());
        let n = self.check(n1.checked_mul(n2))?;
        let split = |i: usize| (Elem((i / n2) as u16), Elem((i % n2) as u16));
        let join = |a: Elem, b: Elem| (a.idx() * n2 + b.idx()) as u16;
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for i in 0..n {
            let (a1, a2) = split(i);
            for j in 0..n {
                let (b1, b2) = split(j);
                add.push(join(r1.add(a1, b1), r2.add(a2, b2)));
                mul.push(join(r1.mul(a1, b1), r2.mul(a2, b2)));
            }
        }
        let star = match (r1.star_table(), r2.star_table()) {
            (Some(_), Some(_)) => Some(
                (0..n)
                    .map(|i| {
                        let (a1, a2) = split(i);
                        join(r1.star(a1).unwrap(), r2.star(a2).unwrap())
                    })
                    .collect(),
            ),
            _ => None,
        };
        let labels = (0..n)
            .map(|i| {
                let (a1, a2) = split(i);
                format!("({},{})", r1.label(a1), r2.label(a2))
            })
            .collect();
        let zero = Elem(join(r1.zero(), r2.zero()));
        Ok(FiniteRing::from_trusted(
            format!("{}x{}", r1.name(), r2.name()),
            n,
            add,
            mul,
            zero,
            star,
            labels,
        ))
    }
}

/// ℤₙ under the default size cap.
pub fn make_zmod(n: usize) -> Result<FiniteRing, RingError> {
    RingFactory::default().zmod(n)
}

/// Mₖ(ℤₙ) under the default size cap.
pub fn make_matrix_ring(k: usize, n: usize) -> Result<FiniteRing, RingError> {
    RingFactory::default().matrix(k, n)
}

pub fn make_direct_product(r1: &FiniteRing, r2: &FiniteRing) -> Result<FiniteRing, RingError> {
    RingFactory::default().product(r1, r2)
}

fn matrix_label(k: usize, entries: &[usize]) -> String {
    let terms: Vec<String> = entries
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(p, &v)| {
            let unit = format!("e{}{}", p / k + 1, p % k + 1);
            if v == 1 {
                unit
            } else {
                format!("{v}{unit}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Elements of the smallest subring of `ambient` containing `generators`, in
/// ascending ambient index order.
pub fn closure_elements(ambient: &FiniteRing, generators: &[Elem]) -> Result<Vec<Elem>, RingError> {
    if generators.is_empty() {
        return Err(RingError::EmptyGenerators);
    }
    let n = ambient.size();
    let mut member = vec![false; n];
    let mut list = Vec::new();
    let admit = |e: Elem, member: &mut Vec<bool>, list: &mut Vec<Elem>| {
        if !member[e.idx()] {
            member[e.idx()] = true;
            list.push(e);
        }
    };
    for &g in generators {
        ambient.elem(g.idx())?;
        admit(g, &mut member, &mut list);
    }
    admit(ambient.zero(), &mut member, &mut list);
    // Every new element is combined with everything admitted before it.
    let mut done = 0;
    while done < list.len() {
        let x = list[done];
        admit(ambient.neg(x), &mut member, &mut list);
        for i in 0..=done {
            let y = list[i];
            for z in [ambient.add(x, y), ambient.mul(x, y), ambient.mul(y, x)] {
                admit(z, &mut member, &mut list);
            }
        }
        done += 1;
    }
    list.sort_unstable();
    Ok(list)
}

/// The subring generated by `generators`, re-indexed in ambient index order.
///
/// Labels are the ambient labels. The identity is recomputed, so a subring of a
/// unital ring may be non-unital. An ambient involution is kept when the subring
/// is closed under it.
pub fn subring_closure(ambient: &FiniteRing, generators: &[Elem]) -> Result<FiniteRing, RingError> {
    let elems = closure_elements(ambient, generators)?;
    let m = elems.len();
    let mut position = vec![u16::MAX; ambient.size()];
    for (i, e) in elems.iter().enumerate() {
        position[e.idx()] = i as u16;
    }
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &elems {
        for &b in &elems {
            add.push(position[ambient.add(a, b).idx()]);
            mul.push(position[ambient.mul(a, b).idx()]);
        }
    }
    let star = if ambient.has_star() {
        let mapped: Vec<u16> = elems.iter().map(|&e| position[ambient.star(e).unwrap().idx()]).collect();
        (!mapped.contains(&u16::MAX)).then_some(mapped)
    } else {
        None
    };
    let labels = elems.iter().map(|&e| ambient.label(e).to_string()).collect();
    let zero = Elem(position[ambient.zero().idx()]);
    let gen_labels: Vec<&str> = generators.iter().map(|&g| ambient.label(g)).collect();
    let name = format!("{}<{}>", ambient.name(), gen_labels.join(","));
    Ok(FiniteRing::from_trusted(name, m, add, mul, zero, star, labels))
}

/// Returns a copy of `r` carrying the involution `perm`.
///
/// Rejects `perm` with the first failing law and the pair witnessing it.
pub fn attach_involution(r: &FiniteRing, perm: &[usize]) -> Result<FiniteRing, RingError> {
    let n = r.size();
    if perm.len() != n {
        return Err(RingError::Malformed(format!("involution must have {n} entries")));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(RingError::Malformed("involution is not a permutation".into()));
        }
        seen[p] = true;
    }
    let s = |e: Elem| Elem(perm[e.idx()] as u16);
    for a in r.elements() {
        if s(s(a)) != a {
            return Err(RingError::Axiom { axiom: Axiom::StarInvolutive, witness: vec![a] });
        }
    }
    for a in r.elements() {
        for b in r.elements() {
            if s(r.add(a, b)) != r.add(s(a), s(b)) {
                return Err(RingError::Axiom { axiom: Axiom::StarAdditive, witness: vec![a, b] });
            }
            if s(r.mul(a, b)) != r.mul(s(b), s(a)) {
                return Err(RingError::Axiom {
                    axiom: Axiom::StarAntiMultiplicative,
                    witness: vec![a, b],
                });
            }
        }
    }
    let mut out = r.clone();
    out.set_star(Some(perm.iter().map(|&p| p as u16).collect()));
    Ok(out)
}

/// Transposition on a ring whose labels are matrix-unit sums (`e12+2e21`, `0`).
///
/// Fails when a label does not parse or its transpose is not an element.
pub fn transpose_permutation(r: &FiniteRing) -> Result<Vec<usize>, RingError> {
    let index: BTreeMap<&str, usize> =
        r.labels().iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    r.labels()
        .iter()
        .map(|label| {
            let mut terms = parse_matrix_label(label)
                .ok_or_else(|| RingError::UnknownLabel(label.clone()))?;
            for t in terms.iter_mut() {
                core::mem::swap(&mut t.1, &mut t.2);
            }
            terms.sort_by_key(|&(_, i, j)| (i, j));
            let transposed = format_terms(&terms);
            index.get(transposed.as_str()).copied().ok_or(RingError::UnknownLabel(transposed))
        })
        .collect()
}

fn parse_matrix_label(label: &str) -> Option<Vec<(usize, usize, usize)>> {
    if label == "0" {
        return Some(Vec::new());
    }
    label
        .split('+')
        .map(|term| {
            let pos = term.find('e')?;
            let coeff = if pos == 0 { 1 } else { term[..pos].parse().ok()? };
            let digits = term[pos + 1..].as_bytes();
            if digits.len() != 2 || !digits.iter().all(u8::is_ascii_digit) {
                return None;
            }
            Some((coeff, (digits[0] - b'0') as usize, (digits[1] - b'0') as usize))
        })
        .collect()
}

fn format_terms(terms: &[(usize, usize, usize)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = terms
        .iter()
        .map(|&(c, i, j)| if c == 1 { format!("e{i}{j}") } else { format!("{c}e{i}{j}") })
        .collect();
    parts.join("+")
}
