use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::validate::{validate_flat, Axiom, FlatTables, ValidationReport};

/// Default bound on the number of elements a constructor may produce.
pub const DEFAULT_SIZE_CAP: usize = 1024;

/// Largest size representable by the `u16` element indices.
pub const HARD_SIZE_LIMIT: usize = u16::MAX as usize + 1;

/// Index of an element of a [`FiniteRing`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u16);

impl Elem {
    #[inline]
    pub const fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingError {
    SizeCap { size: usize, cap: usize },
    Malformed(String),
    ElementOutOfRange { index: usize, size: usize },
    UnknownLabel(String),
    /// First failing axiom together with its witness elements.
    Axiom { axiom: Axiom, witness: Vec<Elem> },
    ZeroExponent,
    EmptyGenerators,
    /// The formal identity of R¹ would have to be returned as a ring element.
    FormalIdentity,
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::SizeCap { size, cap } => {
                write!(f, "ring of size {size} exceeds the size cap {cap}")
            }
            RingError::Malformed(msg) => write!(f, "malformed ring tables: {msg}"),
            RingError::ElementOutOfRange { index, size } => {
                write!(f, "element index {index} out of range for ring of size {size}")
            }
            RingError::UnknownLabel(l) => write!(f, "unknown element label `{l}`"),
            RingError::Axiom { axiom, witness } => {
                write!(f, "axiom `{}` fails at (", axiom.name())?;
                for (i, w) in witness.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{}", w.0)?;
                }
                f.write_str(")")
            }
            RingError::ZeroExponent => {
                f.write_str("exponent 0 is not defined (a^0 does not exist in a non-unital ring)")
            }
            RingError::EmptyGenerators => f.write_str("generator list is empty"),
            RingError::FormalIdentity => {
                f.write_str("the formal identity of R^1 is not an element of the ring")
            }
        }
    }
}

impl core::error::Error for RingError {}

/// Plain, unvalidated ring data in the shape of the ring file format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingTables {
    pub name: String,
    pub size: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: Option<usize>,
    pub star: Option<Vec<usize>>,
    pub labels: Vec<String>,
}

/// A finite ring given by its addition and multiplication tables.
///
/// Immutable after construction. Negation is derived from the addition table and
/// the identity (if any) is detected by scanning, so `one` is always consistent
/// with the tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    n: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: Elem,
    one: Option<Elem>,
    star: Option<Vec<u16>>,
    labels: Vec<String>,
}

/// A single arithmetic request, see [`FiniteRing::eval`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arith {
    Add(Elem, Elem),
    Mul(Elem, Elem),
    Neg(Elem),
    Pow(Elem, u32),
}

impl FiniteRing {
    /// Builds a ring from tables already known to satisfy the ring axioms.
    ///
    /// Used by the constructors; panics if some element has no additive inverse.
    pub(crate) fn from_trusted(
        name: String,
        n: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: Elem,
        star: Option<Vec<u16>>,
        labels: Vec<String>,
    ) -> FiniteRing {
        let neg = derive_negation(n, &add, zero).expect("constructor produced a non-group");
        let one = detect_identity(n, &mul);
        FiniteRing { name, n, add, mul, neg, zero, one, star, labels }
    }

    /// Validates `tables` exhaustively and builds the ring.
    ///
    /// Fails with the first failing axiom and its witness.
    pub fn from_tables(tables: &RingTables) -> Result<FiniteRing, RingError> {
        let flat = FlatTables::from_tables(tables)?;
        let report = validate_flat(&flat);
        if let Some(check) = report.first_failure() {
            return Err(RingError::Axiom {
                axiom: check.axiom,
                witness: check.witness.clone().unwrap_or_default(),
            });
        }
        let FlatTables { name, n, add, mul, zero, star, labels, .. } = flat;
        Ok(FiniteRing::from_trusted(name, n, add, mul, zero, star, labels))
    }

    pub fn to_tables(&self) -> RingTables {
        let n = self.n;
        let rows = |t: &[u16]| -> Vec<Vec<usize>> {
            (0..n).map(|i| t[i * n..(i + 1) * n].iter().map(|&v| v as usize).collect()).collect()
        };
        RingTables {
            name: self.name.clone(),
            size: n,
            add: rows(&self.add),
            mul: rows(&self.mul),
            zero: self.zero.idx(),
            one: self.one.map(Elem::idx),
            star: self.star.as_ref().map(|s| s.iter().map(|&v| v as usize).collect()),
            labels: self.labels.clone(),
        }
    }

    /// Re-runs the full axiom check on this ring.
    pub fn validate(&self) -> ValidationReport {
        validate_flat(&FlatTables {
            name: self.name.clone(),
            n: self.n,
            add: self.add.clone(),
            mul: self.mul.clone(),
            zero: self.zero,
            one: self.one,
            star: self.star.clone(),
            labels: self.labels.clone(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> FiniteRing {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> Option<Elem> {
        self.one
    }

    pub fn is_unital(&self) -> bool {
        self.one.is_some()
    }

    pub fn has_star(&self) -> bool {
        self.star.is_some()
    }

    pub(crate) fn star_table(&self) -> Option<&[u16]> {
        self.star.as_deref()
    }

    pub(crate) fn set_star(&mut self, star: Option<Vec<u16>>) {
        self.star = star;
    }

    /// The involution applied to `a`, if the ring carries one.
    #[inline]
    pub fn star(&self, a: Elem) -> Option<Elem> {
        self.star.as_ref().map(|s| Elem(s[a.idx()]))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a.idx()]
    }

    pub fn find_label(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label).map(|i| Elem(i as u16))
    }

    /// Checked conversion from a raw index.
    pub fn elem(&self, index: usize) -> Result<Elem, RingError> {
        if index < self.n {
            Ok(Elem(index as u16))
        } else {
            Err(RingError::ElementOutOfRange { index, size: self.n })
        }
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Elem> + ExactSizeIterator + Clone {
        (0..self.n as u16).map(Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.add[a.idx() * self.n + b.idx()])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.mul[a.idx() * self.n + b.idx()])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.idx()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul3(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        self.mul(self.mul(a, b), c)
    }

    /// Left-to-right product of a non-empty slice.
    pub fn product(&self, factors: &[Elem]) -> Elem {
        let (first, rest) = factors.split_first().expect("empty product");
        rest.iter().fold(*first, |acc, &f| self.mul(acc, f))
    }

    #[inline]
    pub fn is_zero(&self, a: Elem) -> bool {
        a == self.zero
    }

    /// `a^k` for `k >= 1` by iterated multiplication.
    pub fn pow(&self, a: Elem, k: u32) -> Result<Elem, RingError> {
        if k == 0 {
            return Err(RingError::ZeroExponent);
        }
        let mut acc = a;
        for _ in 1..k {
            acc = self.mul(acc, a);
        }
        Ok(acc)
    }

    /// Powers `a^1, ..., a^max` (index `k - 1` holds `a^k`).
    pub fn powers(&self, a: Elem, max: usize) -> Vec<Elem> {
        let mut out = Vec::with_capacity(max);
        let mut acc = a;
        for _ in 0..max {
            out.push(acc);
            acc = self.mul(acc, a);
        }
        out
    }

    pub fn eval(&self, op: Arith) -> Result<Elem, RingError> {
        let check = |e: Elem| self.elem(e.idx());
        Ok(match op {
            Arith::Add(a, b) => self.add(check(a)?, check(b)?),
            Arith::Mul(a, b) => self.mul(check(a)?, check(b)?),
            Arith::Neg(a) => self.neg(check(a)?),
            Arith::Pow(a, k) => self.pow(check(a)?, k)?,
        })
    }
}

pub(crate) fn derive_negation(n: usize, add: &[u16], zero: Elem) -> Option<Vec<u16>> {
    (0..n)
        .map(|a| (0..n).find(|&b| add[a * n + b] == zero.0).map(|b| b as u16))
        .collect()
}

pub(crate) fn detect_identity(n: usize, mul: &[u16]) -> Option<Elem> {
    (0..n)
        .find(|&e| (0..n).all(|x| mul[e * n + x] as usize == x && mul[x * n + e] as usize == x))
        .map(|e| Elem(e as u16))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::make_zmod;

    #[test]
    fn pow_rejects_zero_exponent() {
        let z6 = make_zmod(6).unwrap();
        assert_eq!(z6.pow(Elem(2), 0), Err(RingError::ZeroExponent));
        assert_eq!(z6.pow(Elem(2), 3), Ok(Elem(2)));
    }

    #[test]
    fn add_neg_is_zero() {
        let z6 = make_zmod(6).unwrap();
        for x in z6.elements() {
            assert_eq!(z6.add(x, z6.neg(x)), z6.zero());
        }
    }

    #[test]
    fn eval_checks_indices() {
        let z4 = make_zmod(4).unwrap();
        assert_eq!(z4.eval(Arith::Mul(Elem(2), Elem(2))), Ok(Elem(0)));
        assert!(matches!(
            z4.eval(Arith::Neg(Elem(9))),
            Err(RingError::ElementOutOfRange { index: 9, size: 4 })
        ));
    }

    #[test]
    fn tables_round_trip() {
        let z5 = make_zmod(5).unwrap();
        let back = FiniteRing::from_tables(&z5.to_tables()).unwrap();
        assert_eq!(back, z5);
    }
}
