//! Registered numeric claims and their comparison against recomputed values.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimValue {
    Count(u64),
    /// Compared as multisets.
    Multiset(Vec<u64>),
    /// `(orbit length, stabiliser order)` pairs, compared as sets.
    Pairs(Vec<(u64, u64)>),
    Text(String),
}

impl ClaimValue {
    fn normalised(&self) -> ClaimValue {
        match self {
            ClaimValue::Multiset(xs) => {
                let mut xs = xs.clone();
                xs.sort_unstable();
                ClaimValue::Multiset(xs)
            }
            ClaimValue::Pairs(ps) => {
                let mut ps = ps.clone();
                ps.sort_unstable();
                ClaimValue::Pairs(ps)
            }
            other => other.clone(),
        }
    }
}

impl fmt::Display for ClaimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.normalised() {
            ClaimValue::Count(n) => write!(f, "{n}"),
            ClaimValue::Multiset(xs) => {
                let parts: Vec<String> = xs.iter().map(u64::to_string).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
            ClaimValue::Pairs(ps) => {
                let parts: Vec<String> = ps.iter().map(|(a, b)| format!("{a}:{b}")).collect();
                write!(f, "{}", parts.join(" "))
            }
            ClaimValue::Text(s) => f.write_str(&s),
        }
    }
}

/// A published value that the tool recomputes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditClaim {
    pub id: &'static str,
    pub what: &'static str,
    pub printed: &'static str,
    pub value: ClaimValue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum AuditStatus {
    Pass,
    Mismatch,
}

impl fmt::Display for AuditStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AuditStatus::Pass => "PASS",
            AuditStatus::Mismatch => "MISMATCH",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub id: String,
    pub what: String,
    pub printed: String,
    pub claimed: String,
    pub recomputed: String,
    pub status: AuditStatus,
}

fn claim(id: &'static str, what: &'static str, printed: &'static str, value: ClaimValue) -> AuditClaim {
    AuditClaim {
        id,
        what,
        printed,
        value,
    }
}

/// Every registered claim.
pub fn audit_manifest() -> Vec<AuditClaim> {
    use ClaimValue::*;
    vec![
        claim("ag24-c2", "|C2| for the lines of AG(2,4)", "2^3.3.5.7", Count(840)),
        claim(
            "ag24-seven",
            "7 divides |AGammaL(2,4)|",
            "false",
            Text("false".into()),
        ),
        claim(
            "unitals-c2",
            "|C2| = C(28,4) - 97.|C0| exceeds |Aut C| for both unitals",
            "true",
            Text("true".into()),
        ),
        claim("inversive-c0", "|C0| for the inversive plane of order 4", "68", Count(68)),
        claim("inversive-c1", "|C1| for the inversive plane of order 4", "|C0|.60", Count(4080)),
        claim("inversive-c2", "|C2| for the inversive plane of order 4", "2^2.11^2.17", Count(8228)),
        claim("inversive-radius", "covering radius of the circles", "r=2", Count(2)),
        claim(
            "biplane-orbits",
            "orbit lengths of PSL(2,11) on 5-subsets",
            "11 (C0), 330, 66, 55",
            Multiset(vec![11, 330, 66, 55]),
        ),
        claim(
            "biplane-stabilizers",
            "stabiliser orders of the orbits other than C0",
            "2, 12 and 10",
            Multiset(vec![2, 12, 10]),
        ),
        claim(
            "biplane-pairing",
            "stabiliser order of each orbit other than C0 (length:order)",
            "C1 (330): 2, C2 (66): 12, C3 (55): 10",
            Pairs(vec![(330, 2), (66, 12), (55, 10)]),
        ),
        claim("biplane-radius", "covering radius of the biplane", "2", Count(2)),
        claim(
            "m11-12-orbits",
            "orbit lengths of M11 on 6-subsets of 12 points",
            "22, 110, 132, 660",
            Multiset(vec![22, 110, 132, 660]),
        ),
        claim(
            "m11-12-stabilizers",
            "block stabiliser orders of the orbits of length 22 and 110",
            "A6 and 3^2:[2^4]",
            Pairs(vec![(22, 360), (110, 144)]),
        ),
        claim("m11-12-delta", "minimum distance of the 22-block orbit", "delta=3", Count(3)),
        claim("hs-cap", "largest k with C(176,k)/(k-1) <= |HS|", "k <= 19", Count(19)),
        claim(
            "affine-display",
            "exponent bounding (k-1)q^(d^2+d+1) when k <= q^d",
            "q^{(q+1)^2}",
            Text("(q+1)^2".into()),
        ),
        claim("fano-radius", "covering radius of the Fano plane", "1", Count(1)),
        claim("pg23-radius", "covering radius of the lines of PG(2,3)", "r=2", Count(2)),
        claim("witt24-radius", "covering radius of the octads", "2", Count(2)),
        claim("witt23-radius", "covering radius of S(4,7,23)", "3", Count(3)),
        claim("m24-orbits-8", "orbits of M24 on 8-subsets", "3", Count(3)),
        claim("m23-orbits-7", "orbits of M23 on 7-subsets", "4", Count(4)),
    ]
}

/// Compares a registered claim with a recomputed value.
pub fn audit_counts(id: &str, recomputed: ClaimValue) -> Result<AuditRow> {
    let c = audit_manifest()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::Unsupported(format!("no audit claim {id:?}")))?;
    let status = if c.value.normalised() == recomputed.normalised() {
        AuditStatus::Pass
    } else {
        AuditStatus::Mismatch
    };
    Ok(AuditRow {
        id: c.id.to_string(),
        what: c.what.to_string(),
        printed: c.printed.to_string(),
        claimed: c.value.to_string(),
        recomputed: recomputed.to_string(),
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_ids_are_unique() {
        let m = audit_manifest();
        let mut ids: Vec<_> = m.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), m.len());
    }

    #[test]
    fn comparisons() {
        let row = audit_counts("ag24-c2", ClaimValue::Count(840)).unwrap();
        assert_eq!(row.status, AuditStatus::Pass);
        let row = audit_counts("inversive-c2", ClaimValue::Count(2040)).unwrap();
        assert_eq!(row.status, AuditStatus::Mismatch);
        assert_eq!(row.claimed, "8228");
        let row = audit_counts("biplane-orbits", ClaimValue::Multiset(vec![55, 66, 330, 11])).unwrap();
        assert_eq!(row.status, AuditStatus::Pass);
        assert!(audit_counts("nonexistent", ClaimValue::Count(0)).is_err());
    }
}
