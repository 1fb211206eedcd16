//! File formats, parallel theorem suites, reports and the command-line driver
//! for `ringinv-core`.

pub mod format;
pub mod report;
pub mod rings;
pub mod scenarios;
pub mod suite;

use ringinv_core::{Elem, FiniteRing, InverseCertificate, SidedSolutionSet};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

pub use report::{CounterexampleRecord, Status, TheoremReport};
pub use suite::{run_suite, search_counterexamples, SuiteConfig};

#[derive(Serialize)]
pub struct CertificateJson<'a> {
    pub kind: &'static str,
    pub ring: &'a str,
    pub a: &'a str,
    pub b: &'a str,
    pub c: &'a str,
    pub witness: &'a str,
    pub conditions: Flags,
    pub drazin_index: Option<u32>,
}

impl<'a> CertificateJson<'a> {
    pub fn new(ring: &'a FiniteRing, cert: &InverseCertificate) -> Self {
        let conditions = Flags(cert.conditions.iter().map(|c| (c.name, c.holds)).collect());
        CertificateJson {
            kind: cert.kind.name(),
            ring: ring.name(),
            a: ring.label(cert.a),
            b: ring.label(cert.b),
            c: ring.label(cert.c),
            witness: ring.label(cert.witness),
            conditions,
            drazin_index: cert.drazin_index,
        }
    }
}

/// Named booleans in a fixed order, serialized as a JSON object.
pub struct Flags(pub Vec<(&'static str, bool)>);

impl Serialize for Flags {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
pub struct SolutionJson<'a> {
    pub witness: &'a str,
    pub regular: bool,
}

/// A one-sided solution set, each solution flagged regular or not.
#[derive(Serialize)]
pub struct SolutionSetJson<'a> {
    pub kind: &'static str,
    pub ring: &'a str,
    pub a: &'a str,
    pub b: &'a str,
    pub c: &'a str,
    pub solutions: Vec<SolutionJson<'a>>,
}

impl<'a> SolutionSetJson<'a> {
    pub fn new(ring: &'a FiniteRing, kind: &'static str, abc: [Elem; 3], set: &SidedSolutionSet) -> Self {
        let solutions = set
            .solutions
            .iter()
            .zip(&set.regular)
            .map(|(&x, &regular)| SolutionJson { witness: ring.label(x), regular })
            .collect();
        SolutionSetJson {
            kind,
            ring: ring.name(),
            a: ring.label(abc[0]),
            b: ring.label(abc[1]),
            c: ring.label(abc[2]),
            solutions,
        }
    }
}
