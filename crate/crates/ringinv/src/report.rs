//! Per-(theorem, ring) reports and their JSON and Markdown renderings.

use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn is_pass(&self) -> bool {
        *self == Status::Pass
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("pass"),
            Status::Fail => f.write_str("fail"),
            Status::Skipped(reason) => write!(f, "skipped({reason})"),
        }
    }
}

impl From<Status> for String {
    fn from(s: Status) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for Status {
    type Error = String;

    fn try_from(s: String) -> Result<Status, String> {
        match s.as_str() {
            "pass" => Ok(Status::Pass),
            "fail" => Ok(Status::Fail),
            _ => s
                .strip_prefix("skipped(")
                .and_then(|r| r.strip_suffix(')'))
                .map(|r| Status::Skipped(r.to_string()))
                .ok_or_else(|| format!("unknown status `{s}`")),
        }
    }
}

/// Variable assignments in scan order, serialized as a JSON object.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Vars(pub Vec<(String, String)>);

impl Vars {
    pub fn get(&self, name: &str) -> Option<&str> {
        self.0.iter().find(|(k, _)| k == name).map(|(_, v)| v.as_str())
    }
}

impl Serialize for Vars {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Vars {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Vars, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Vars;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an object of element labels")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut m: A) -> Result<Vars, A::Error> {
                let mut out = Vec::new();
                while let Some(entry) = m.next_entry()? {
                    out.push(entry);
                }
                Ok(Vars(out))
            }
        }
        d.deserialize_map(V)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub vars: Vars,
    pub failed_clause: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub ring: String,
    pub tuples_scanned: u64,
    pub counterexamples: Vec<CounterexampleRecord>,
    pub status: Status,
    pub elapsed_ms: u64,
}

impl TheoremReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// The report with `elapsed_ms` zeroed, for comparing runs.
    pub fn timeless(&self) -> TheoremReport {
        TheoremReport { elapsed_ms: 0, ..self.clone() }
    }

    /// File name used when reports are written to a directory.
    pub fn file_name(&self) -> String {
        let clean = |s: &str| -> String {
            s.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' }).collect()
        };
        format!("{}__{}.json", clean(&self.theorem), clean(&self.ring))
    }
}

/// A Markdown table with one row per report, followed by the first
/// counterexample of every failing report.
pub fn markdown(reports: &[TheoremReport]) -> String {
    let mut out = String::from("| theorem | ring | tuples | counterexamples | status | ms |\n");
    out.push_str("|---|---|---:|---:|---|---:|\n");
    for r in reports {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} |\n",
            r.theorem,
            r.ring,
            r.tuples_scanned,
            r.counterexamples.len(),
            r.status,
            r.elapsed_ms
        ));
    }
    let failing: Vec<_> = reports.iter().filter(|r| !r.counterexamples.is_empty()).collect();
    if !failing.is_empty() {
        out.push_str("\n## First counterexamples\n\n");
        for r in failing {
            let c = &r.counterexamples[0];
            let vars: Vec<String> = c.vars.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!("- {} on {}: `{}` at {}\n", r.theorem, r.ring, c.failed_clause, vars.join(", ")));
        }
    }
    let pass = reports.iter().filter(|r| r.status.is_pass()).count();
    out.push_str(&format!("\n{pass}/{} passed\n", reports.len()));
    out
}

/// Fixed-width rows for terminals.
pub fn table(reports: &[TheoremReport]) -> String {
    let tw = reports.iter().map(|r| r.theorem.len()).max().unwrap_or(0).max(7);
    let rw = reports.iter().map(|r| r.ring.len()).max().unwrap_or(0).max(4);
    let mut out = format!("{:tw$}  {:rw$}  {:>12}  {:>6}  status\n", "theorem", "ring", "tuples", "cex");
    for r in reports {
        out.push_str(&format!(
            "{:tw$}  {:rw$}  {:>12}  {:>6}  {}\n",
            r.theorem,
            r.ring,
            r.tuples_scanned,
            r.counterexamples.len(),
            r.status
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> TheoremReport {
        TheoremReport {
            theorem: "uniqueness".into(),
            ring: "M3Z2<e11,e21>".into(),
            tuples_scanned: 216,
            counterexamples: vec![CounterexampleRecord {
                vars: Vars(vec![("b".into(), "e11".into()), ("a".into(), "(1)".into())]),
                failed_clause: "x".into(),
            }],
            status: Status::Skipped("budget exhausted".into()),
            elapsed_ms: 3,
        }
    }

    #[test]
    fn json_shape() {
        assert_eq!(
            sample().to_json(),
            "{\"theorem\":\"uniqueness\",\"ring\":\"M3Z2<e11,e21>\",\"tuples_scanned\":216,\
             \"counterexamples\":[{\"vars\":{\"b\":\"e11\",\"a\":\"(1)\"},\"failed_clause\":\"x\"}],\
             \"status\":\"skipped(budget exhausted)\",\"elapsed_ms\":3}"
        );
    }

    #[test]
    fn json_round_trip_keeps_var_order() {
        let r = sample();
        let back: TheoremReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn status_strings() {
        for s in [Status::Pass, Status::Fail, Status::Skipped("no involution".into())] {
            assert_eq!(Status::try_from(s.to_string()), Ok(s));
        }
        assert!(Status::try_from("skipped".to_string()).is_err());
    }

    #[test]
    fn file_names_are_portable() {
        assert_eq!(sample().file_name(), "uniqueness__M3Z2_e11_e21_.json");
    }
}
