//! Exhaustive axiom checking for ring tables.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::ring::{detect_identity, Elem, RingError, RingTables, HARD_SIZE_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    AddAssociative,
    AddCommutative,
    ZeroNeutral,
    AddInverses,
    MulAssociative,
    LeftDistributive,
    RightDistributive,
    OneIsIdentity,
    IdentityDeclared,
    StarInvolutive,
    StarAdditive,
    StarAntiMultiplicative,
    LabelsUnique,
}

impl Axiom {
    pub const ALL: [Axiom; 13] = [
        Axiom::AddAssociative,
        Axiom::AddCommutative,
        Axiom::ZeroNeutral,
        Axiom::AddInverses,
        Axiom::MulAssociative,
        Axiom::LeftDistributive,
        Axiom::RightDistributive,
        Axiom::OneIsIdentity,
        Axiom::IdentityDeclared,
        Axiom::StarInvolutive,
        Axiom::StarAdditive,
        Axiom::StarAntiMultiplicative,
        Axiom::LabelsUnique,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::AddAssociative => "add-associative",
            Axiom::AddCommutative => "add-commutative",
            Axiom::ZeroNeutral => "zero-neutral",
            Axiom::AddInverses => "add-inverses",
            Axiom::MulAssociative => "mul-associative",
            Axiom::LeftDistributive => "left-distributive",
            Axiom::RightDistributive => "right-distributive",
            Axiom::OneIsIdentity => "one-is-identity",
            Axiom::IdentityDeclared => "identity-declared",
            Axiom::StarInvolutive => "star-involutive",
            Axiom::StarAdditive => "star-additive",
            Axiom::StarAntiMultiplicative => "star-anti-multiplicative",
            Axiom::LabelsUnique => "labels-unique",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    /// Elements at which the axiom fails (one to three of them).
    pub witness: Option<Vec<Elem>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn get(&self, axiom: Axiom) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

/// Checks every ring axiom of `tables` exhaustively.
///
/// Structural problems (wrong dimensions, indices out of range, a star map that
/// is not a permutation) are reported as errors; axiom failures are data.
pub fn validate_axioms(tables: &RingTables) -> Result<ValidationReport, RingError> {
    Ok(validate_flat(&FlatTables::from_tables(tables)?))
}

pub(crate) struct FlatTables {
    pub name: String,
    pub n: usize,
    pub add: Vec<u16>,
    pub mul: Vec<u16>,
    pub zero: Elem,
    pub one: Option<Elem>,
    pub star: Option<Vec<u16>>,
    pub labels: Vec<String>,
}

impl FlatTables {
    pub fn from_tables(t: &RingTables) -> Result<FlatTables, RingError> {
        let n = t.size;
        if n == 0 {
            return Err(RingError::Malformed("size must be at least 1".into()));
        }
        if n > HARD_SIZE_LIMIT {
            return Err(RingError::SizeCap { size: n, cap: HARD_SIZE_LIMIT });
        }
        let flatten = |name: &str, rows: &[Vec<usize>]| -> Result<Vec<u16>, RingError> {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(RingError::Malformed(format!("{name} table is not {n}x{n}")));
            }
            let mut out = Vec::with_capacity(n * n);
            for &v in rows.iter().flatten() {
                if v >= n {
                    return Err(RingError::Malformed(format!(
                        "{name} table entry {v} out of range"
                    )));
                }
                out.push(v as u16);
            }
            Ok(out)
        };
        let add = flatten("add", &t.add)?;
        let mul = flatten("mul", &t.mul)?;
        let check_index = |what: &str, i: usize| {
            if i < n {
                Ok(Elem(i as u16))
            } else {
                Err(RingError::Malformed(format!("{what} index {i} out of range")))
            }
        };
        let zero = check_index("zero", t.zero)?;
        let one = t.one.map(|o| check_index("one", o)).transpose()?;
        let star = match &t.star {
            None => None,
            Some(perm) => {
                if perm.len() != n {
                    return Err(RingError::Malformed("star has wrong length".into()));
                }
                let mut seen = vec![false; n];
                for &p in perm {
                    if p >= n || seen[p] {
                        return Err(RingError::Malformed("star is not a permutation".into()));
                    }
                    seen[p] = true;
                }
                Some(perm.iter().map(|&p| p as u16).collect())
            }
        };
        if t.labels.len() != n {
            return Err(RingError::Malformed("label count differs from size".into()));
        }
        Ok(FlatTables {
            name: t.name.clone(),
            n,
            add,
            mul,
            zero,
            one,
            star,
            labels: t.labels.clone(),
        })
    }
}

pub(crate) fn validate_flat(t: &FlatTables) -> ValidationReport {
    let n = t.n;
    let add = |a: usize, b: usize| t.add[a * n + b] as usize;
    let mul = |a: usize, b: usize| t.mul[a * n + b] as usize;
    let z = t.zero.idx();
    let e = |i: usize| Elem(i as u16);
    let mut checks = Vec::with_capacity(Axiom::ALL.len());
    let mut push = |axiom, witness: Option<Vec<Elem>>| {
        checks.push(AxiomCheck { axiom, passed: witness.is_none(), witness })
    };

    let triples = || (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))));
    let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));

    push(
        Axiom::AddAssociative,
        triples()
            .find(|&(a, b, c)| add(add(a, b), c) != add(a, add(b, c)))
            .map(|(a, b, c)| vec![e(a), e(b), e(c)]),
    );
    push(
        Axiom::AddCommutative,
        pairs().find(|&(a, b)| add(a, b) != add(b, a)).map(|(a, b)| vec![e(a), e(b)]),
    );
    push(
        Axiom::ZeroNeutral,
        (0..n).find(|&a| add(a, z) != a || add(z, a) != a).map(|a| vec![e(a)]),
    );
    push(
        Axiom::AddInverses,
        (0..n).find(|&a| (0..n).all(|b| add(a, b) != z)).map(|a| vec![e(a)]),
    );
    push(
        Axiom::MulAssociative,
        triples()
            .find(|&(a, b, c)| mul(mul(a, b), c) != mul(a, mul(b, c)))
            .map(|(a, b, c)| vec![e(a), e(b), e(c)]),
    );
    push(
        Axiom::LeftDistributive,
        triples()
            .find(|&(a, b, c)| mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
            .map(|(a, b, c)| vec![e(a), e(b), e(c)]),
    );
    push(
        Axiom::RightDistributive,
        triples()
            .find(|&(a, b, c)| mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
            .map(|(a, b, c)| vec![e(a), e(b), e(c)]),
    );
    push(
        Axiom::OneIsIdentity,
        t.one.and_then(|one| {
            let o = one.idx();
            (0..n).find(|&x| mul(o, x) != x || mul(x, o) != x).map(|x| vec![one, e(x)])
        }),
    );
    push(
        Axiom::IdentityDeclared,
        match (t.one, detect_identity(n, &t.mul)) {
            (None, Some(found)) => Some(vec![found]),
            _ => None,
        },
    );
    match &t.star {
        Some(star) => {
            let s = |a: usize| star[a] as usize;
            push(Axiom::StarInvolutive, (0..n).find(|&a| s(s(a)) != a).map(|a| vec![e(a)]));
            push(
                Axiom::StarAdditive,
                pairs()
                    .find(|&(a, b)| s(add(a, b)) != add(s(a), s(b)))
                    .map(|(a, b)| vec![e(a), e(b)]),
            );
            push(
                Axiom::StarAntiMultiplicative,
                pairs()
                    .find(|&(a, b)| s(mul(a, b)) != mul(s(b), s(a)))
                    .map(|(a, b)| vec![e(a), e(b)]),
            );
        }
        None => {
            push(Axiom::StarInvolutive, None);
            push(Axiom::StarAdditive, None);
            push(Axiom::StarAntiMultiplicative, None);
        }
    }
    let mut first_seen: BTreeMap<&str, usize> = BTreeMap::new();
    let mut duplicate = None;
    for (i, label) in t.labels.iter().enumerate() {
        if let Some(&j) = first_seen.get(label.as_str()) {
            duplicate = Some(vec![e(j), e(i)]);
            break;
        }
        first_seen.insert(label, i);
    }
    push(Axiom::LabelsUnique, duplicate);

    ValidationReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::make_zmod;

    #[test]
    fn zmod_passes_everything() {
        let report = make_zmod(6).unwrap().validate();
        assert!(report.all_passed(), "{report:?}");
        assert_eq!(report.checks.len(), Axiom::ALL.len());
    }

    #[test]
    fn corrupted_mul_cell_is_detected_with_witness() {
        let mut t = make_zmod(6).unwrap().to_tables();
        t.mul[2][3] = 1;
        let report = validate_axioms(&t).unwrap();
        let failure = report.first_failure().expect("corruption must be detected");
        assert!(matches!(
            failure.axiom,
            Axiom::MulAssociative | Axiom::LeftDistributive | Axiom::RightDistributive
        ));
        let w = failure.witness.as_ref().unwrap();
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn missing_declared_identity_is_reported() {
        let mut t = make_zmod(3).unwrap().to_tables();
        t.one = None;
        let report = validate_axioms(&t).unwrap();
        assert_eq!(report.first_failure().unwrap().axiom, Axiom::IdentityDeclared);
    }

    #[test]
    fn duplicate_labels_fail() {
        let mut t = make_zmod(3).unwrap().to_tables();
        t.labels[2] = "1".into();
        let report = validate_axioms(&t).unwrap();
        let check = report.get(Axiom::LabelsUnique).unwrap();
        assert_eq!(check.witness, Some(vec![Elem(1), Elem(2)]));
    }

    #[test]
    fn structural_errors_are_errors() {
        let mut t = make_zmod(3).unwrap().to_tables();
        t.add[1].pop();
        assert!(matches!(validate_axioms(&t), Err(RingError::Malformed(_))));
        let mut t = make_zmod(3).unwrap().to_tables();
        t.star = Some(vec![0, 0, 1]);
        assert!(matches!(validate_axioms(&t), Err(RingError::Malformed(_))));
    }
}
