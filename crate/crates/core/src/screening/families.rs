use num_bigint::BigUint;

use super::bounds::{
    binomial_at_most, divisibility_ok, general_linear_order, orbit_bound_ok,
    point_stabilizer_divisibility_ok, prime_power, prime_powers, reduced_bound_ok,
};
use super::sporadic::sporadic_screen;
use super::table::{CandidateRow, CandidateTable, Predicate, Role};
use crate::error::{Error, Result};

/// The 2-transitive families screened by order and divisibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Suzuki,
    Unitary,
    Ree,
    Linear2,
    Projective,
    Affine,
    Sporadic,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Suzuki,
        Family::Unitary,
        Family::Ree,
        Family::Linear2,
        Family::Projective,
        Family::Affine,
        Family::Sporadic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Suzuki => "suzuki",
            Family::Unitary => "unitary",
            Family::Ree => "ree",
            Family::Linear2 => "l2",
            Family::Projective => "projective",
            Family::Affine => "affine",
            Family::Sporadic => "sporadic",
        }
    }

    pub fn from_name(name: &str) -> Result<Family> {
        let lower = name.to_ascii_lowercase();
        let f = match lower.as_str() {
            "suzuki" | "sz" => Family::Suzuki,
            "unitary" | "u3" => Family::Unitary,
            "ree" => Family::Ree,
            "l2" | "linear2" | "psl2" => Family::Linear2,
            "projective" | "pgaml" | "pgammal" => Family::Projective,
            "affine" | "agaml" | "agammal" => Family::Affine,
            "sporadic" | "mathieu" => Family::Sporadic,
            _ => return Err(Error::Unsupported(format!("unknown family {name:?}"))),
        };
        Ok(f)
    }
}

/// A family together with the parameter ranges to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupFamilySpec {
    pub family: Family,
    pub q_max: u64,
    pub d_max: u32,
}

impl GroupFamilySpec {
    pub fn new(family: Family) -> Self {
        let q_max = match family {
            Family::Suzuki => 1 << 13,
            Family::Ree => 3u64.pow(7),
            Family::Linear2 => 256,
            _ => 64,
        };
        GroupFamilySpec {
            family,
            q_max,
            d_max: 10,
        }
    }

    pub fn with_q_max(mut self, q_max: u64) -> Self {
        self.q_max = q_max;
        self
    }

    pub fn with_d_max(mut self, d_max: u32) -> Self {
        self.d_max = d_max;
        self
    }

    /// Degree `v(q,d)`, or `None` when it overflows.
    pub fn degree(&self, q: u64, d: u32) -> Option<u64> {
        match self.family {
            Family::Suzuki => q.checked_mul(q)?.checked_add(1),
            Family::Unitary | Family::Ree => q.checked_pow(3)?.checked_add(1),
            Family::Linear2 => q.checked_add(1),
            Family::Projective => Some((q.checked_pow(d)? - 1) / (q - 1)),
            Family::Affine => q.checked_pow(d),
            Family::Sporadic => None,
        }
    }

    /// Order of the largest group in the family at `(q,d)`.
    pub fn max_order(&self, q: u64, d: u32) -> Option<BigUint> {
        let (_, a) = prime_power(q)?;
        let big = BigUint::from(q);
        let a = u64::from(a);
        let order = match self.family {
            Family::Suzuki => (big.pow(2) + 1u32) * big.pow(2) * (q - 1) * a,
            Family::Unitary => (big.pow(3) + 1u32) * big.pow(3) * (big.pow(2) - 1u32) * (2 * a),
            Family::Ree => (big.pow(3) + 1u32) * big.pow(3) * (q - 1) * a,
            Family::Linear2 => BigUint::from(q + 1) * q * (q - 1) * a,
            Family::Projective => general_linear_order(d, q) * a / (q - 1),
            Family::Affine => big.pow(d) * general_linear_order(d, q) * a,
            Family::Sporadic => return None,
        };
        Some(order)
    }
}

fn predicate(name: &'static str, role: Role, statement: &str) -> Predicate {
    Predicate {
        name,
        role,
        statement: statement.to_string(),
    }
}

pub fn family_screen(spec: &GroupFamilySpec) -> CandidateTable {
    match spec.family {
        Family::Suzuki => suzuki(spec),
        Family::Unitary => unitary(spec),
        Family::Ree => ree(spec),
        Family::Linear2 => linear2(spec),
        Family::Projective => projective(spec),
        Family::Affine => affine(spec),
        Family::Sporadic => sporadic_screen(),
    }
}

/// `q = p^(2s+1)` for `s ≥ 1`.
fn odd_powers(p: u64, max: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = p.pow(3);
    while q <= max {
        out.push(q);
        match q.checked_mul(p * p) {
            Some(next) => q = next,
            None => break,
        }
    }
    out
}

fn suzuki(spec: &GroupFamilySpec) -> CandidateTable {
    let mut t = CandidateTable::new(
        "suzuki",
        vec![
            predicate("reduced-order", Role::Filter, "4|G| >= C(v,5)"),
            predicate("quintic", Role::Report, "q^5 < 480a"),
        ],
    );
    for q in odd_powers(2, spec.q_max) {
        let (Some(v), Some(order)) = (spec.degree(q, 2), spec.max_order(q, 2)) else {
            continue;
        };
        let a = u64::from(prime_power(q).map_or(1, |(_, a)| a));
        let quintic = BigUint::from(q).pow(5) < BigUint::from(480 * a);
        let row = CandidateRow::new(format!("Sz({q})"), Some(q), None, v, None, order.clone());
        t.push(
            row,
            vec![("reduced-order", reduced_bound_ok(v, &order)), ("quintic", quintic)],
        );
    }
    t
}

fn unitary(spec: &GroupFamilySpec) -> CandidateTable {
    let mut t = CandidateTable::new(
        "unitary",
        vec![
            predicate("septic", Role::Filter, "(q-1)^7 < 960a"),
            predicate("reduced-order", Role::Filter, "4|G| >= C(v,5)"),
            predicate("k-range", Role::Filter, "some k with 5 <= k <= v/2"),
        ],
    );
    for q in prime_powers(spec.q_max) {
        let (Some(v), Some(order)) = (spec.degree(q, 3), spec.max_order(q, 3)) else {
            continue;
        };
        let a = u64::from(prime_power(q).map_or(1, |(_, a)| a));
        let septic = BigUint::from(q - 1).pow(7) < BigUint::from(960 * a);
        let row = CandidateRow::new(format!("U3({q})"), Some(q), None, v, None, order.clone());
        t.push(
            row,
            vec![
                ("septic", septic),
                ("reduced-order", reduced_bound_ok(v, &order)),
                ("k-range", v >= 10),
            ],
        );
    }
    t
}

fn ree(spec: &GroupFamilySpec) -> CandidateTable {
    let mut t = CandidateTable::new(
        "ree",
        vec![predicate("reduced-order", Role::Filter, "4|G| >= C(v,5)")],
    );
    for q in odd_powers(3, spec.q_max) {
        let (Some(v), Some(order)) = (spec.degree(q, 3), spec.max_order(q, 3)) else {
            continue;
        };
        let row = CandidateRow::new(format!("Ree({q})"), Some(q), None, v, None, order.clone());
        t.push(row, vec![("reduced-order", reduced_bound_ok(v, &order))]);
    }
    t
}

fn linear2(spec: &GroupFamilySpec) -> CandidateTable {
    let mut t = CandidateTable::new(
        "l2",
        vec![
            predicate("k-range", Role::Filter, "v >= 10, so some k with 5 <= k <= v/2"),
            predicate(
                "small-degree-divisibility",
                Role::Filter,
                "for v <= 13: some k in 5..=v/2 with k(v-k) | |G|",
            ),
            predicate("reduced-order", Role::Filter, "4|G| >= C(v,5)"),
            predicate("quadratic", Role::Report, "(q-2)(q-3) <= 480a"),
            predicate("k5-divisibility", Role::Report, "5(v-5) | |G|"),
            predicate("k6-order", Role::Report, "(q-2)(q-3)(q-4) <= 3600a"),
            predicate("orbit-bound", Role::Filter, "(k-1)|G| >= C(v,k)"),
            predicate("flag-divisibility", Role::Filter, "k(v-k) | |G|"),
            predicate(
                "point-stabilizer-divisibility",
                Role::Filter,
                "(v-k) | |G|/v",
            ),
        ],
    );
    for q in prime_powers(spec.q_max) {
        let (Some(v), Some(order)) = (spec.degree(q, 2), spec.max_order(q, 2)) else {
            continue;
        };
        let a = u64::from(prime_power(q).map_or(1, |(_, a)| a));
        let mut checks = vec![("k-range", v >= 10)];
        if v <= 13 {
            let ok = (5..=v / 2).any(|k| divisibility_ok(v, k, &order));
            checks.push(("small-degree-divisibility", ok));
        }
        checks.push(("reduced-order", reduced_bound_ok(v, &order)));
        let (qi, ai) = (i128::from(q), i128::from(a));
        checks.push(("quadratic", (qi - 2) * (qi - 3) <= 480 * ai));
        checks.push(("k5-divisibility", divisibility_ok(v, 5, &order)));
        let cubic = (qi - 2) * (qi - 3) * (qi - 4) <= 3600 * ai;
        checks.push(("k6-order", cubic));
        let row = CandidateRow::new(format!("L2({q})"), Some(q), None, v, None, order.clone());
        t.push(row, checks);
        if !t.rows.last().is_some_and(|r| r.is_open()) {
            continue;
        }
        for k in 5..=v / 2 {
            let row = CandidateRow::new(format!("L2({q})"), Some(q), None, v, Some(k), order.clone());
            t.push(
                row,
                vec![
                    ("orbit-bound", orbit_bound_ok(v, k, &order)),
                    ("flag-divisibility", divisibility_ok(v, k, &order)),
                    (
                        "point-stabilizer-divisibility",
                        point_stabilizer_divisibility_ok(v, k, &order),
                    ),
                ],
            );
        }
    }
    t
}

fn projective(spec: &GroupFamilySpec) -> CandidateTable {
    let mut t = CandidateTable::new(
        "projective",
        vec![
            predicate("d2d1", Role::Filter, "d^2+d-1 > q^(d-2)+q^(d-3)"),
            predicate(
                "k1v1-exact",
                Role::Filter,
                "(k-1)|PGammaL(d,q)| >= C(v,k) at k = floor((v-1)/q)+1",
            ),
            predicate("k-range", Role::Filter, "5 <= k <= v/2 at k = floor((v-1)/q)+1"),
            predicate(
                "k1v1-power",
                Role::Report,
                "(k-1)q^(d^2) >= C(v,k) at k = floor((v-1)/q)+1",
            ),
            predicate(
                "k1v1-chain",
                Role::Report,
                "(k-2)|PGammaL(d,q)| >= C(v,k-1) at k = floor((v-1)/q)+1",
            ),
        ],
    );
    for d in 3..=spec.d_max {
        for q in prime_powers(spec.q_max) {
            let (Some(v), Some(order)) = (spec.degree(q, d), spec.max_order(q, d)) else {
                continue;
            };
            let qb = BigUint::from(q);
            let k = (v - 1) / q + 1;
            let lhs = u64::from(d * d + d - 1);
            let d2d1 = BigUint::from(lhs) > qb.pow(d - 2) + qb.pow(d - 3);
            let power = binomial_at_most(v, k, &(qb.pow(d * d) * (k - 1)));
            let chain = binomial_at_most(v, k - 1, &(&order * (k - 2)));
            let row = CandidateRow::new(format!("PGammaL({d},{q})"), Some(q), Some(u64::from(d)), v, Some(k), order.clone());
            t.push(
                row,
                vec![
                    ("d2d1", d2d1),
                    ("k1v1-exact", orbit_bound_ok(v, k, &order)),
                    ("k-range", k >= 5 && 2 * k <= v),
                    ("k1v1-power", power),
                    ("k1v1-chain", chain),
                ],
            );
        }
    }
    t
}

fn affine(spec: &GroupFamilySpec) -> CandidateTable {
    let mut t = CandidateTable::new(
        "affine",
        vec![
            predicate("d1-power", Role::Filter, "(d+1)^2 > q^(d-1)"),
            predicate(
                "hyperplane-exact",
                Role::Filter,
                "(k-1)|AGammaL(d,q)| >= C(v,k) at k = q^(d-1)",
            ),
        ],
    );
    for d in 2..=spec.d_max {
        for q in prime_powers(spec.q_max) {
            let (Some(v), Some(order)) = (spec.degree(q, d), spec.max_order(q, d)) else {
                continue;
            };
            let k = v / q;
            let d1 = BigUint::from(u64::from((d + 1) * (d + 1))) > BigUint::from(q).pow(d - 1);
            let row = CandidateRow::new(format!("AGammaL({d},{q})"), Some(q), Some(u64::from(d)), v, Some(k), order.clone());
            t.push(
                row,
                vec![("d1-power", d1), ("hyperplane-exact", orbit_bound_ok(v, k, &order))],
            );
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(Family::from_name(f.name()).unwrap(), f);
        }
        assert!(Family::from_name("symplectic").is_err());
    }

    #[test]
    fn order_formulas_match_known_orders() {
        let l2 = GroupFamilySpec::new(Family::Linear2);
        assert_eq!(l2.max_order(16, 2).unwrap(), BigUint::from(16320u32));
        let pr = GroupFamilySpec::new(Family::Projective);
        assert_eq!(pr.max_order(2, 3).unwrap(), BigUint::from(168u32));
        assert_eq!(pr.degree(3, 3), Some(13));
        let af = GroupFamilySpec::new(Family::Affine);
        assert_eq!(af.max_order(4, 2).unwrap(), BigUint::from(5760u32));
        let sz = GroupFamilySpec::new(Family::Suzuki);
        assert_eq!(sz.max_order(8, 2).unwrap(), BigUint::from(29120u32 * 3));
    }

    #[test]
    fn odd_power_sequences() {
        assert_eq!(odd_powers(2, 600), vec![8, 32, 128, 512]);
        assert_eq!(odd_powers(3, 3000), vec![27, 243, 2187]);
    }
}
