use num_bigint::BigUint;

use super::bounds::{divisibility_ok, factor_divisibility_ok, orbit_bound_ok};
use super::table::{CandidateRow, CandidateTable, Predicate, Role};

/// A 2-transitive group outside the infinite families, by degree and order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SporadicGroup {
    pub name: &'static str,
    pub v: u64,
    pub order: u64,
    /// An upper bound on `k` asserted in print rather than derived here.
    pub stated_cap: Option<u64>,
}

pub const SPORADIC_GROUPS: [SporadicGroup; 10] = [
    SporadicGroup { name: "M11", v: 11, order: 7_920, stated_cap: None },
    SporadicGroup { name: "L2(11)", v: 11, order: 660, stated_cap: None },
    SporadicGroup { name: "M12", v: 12, order: 95_040, stated_cap: None },
    SporadicGroup { name: "M11", v: 12, order: 7_920, stated_cap: None },
    SporadicGroup { name: "M22", v: 22, order: 443_520, stated_cap: None },
    SporadicGroup { name: "Aut(M22)", v: 22, order: 887_040, stated_cap: None },
    SporadicGroup { name: "M23", v: 23, order: 10_200_960, stated_cap: None },
    SporadicGroup { name: "M24", v: 24, order: 244_823_040, stated_cap: None },
    SporadicGroup { name: "HS", v: 176, order: 44_352_000, stated_cap: Some(19) },
    SporadicGroup { name: "Co3", v: 276, order: 495_766_656_000, stated_cap: None },
];

impl SporadicGroup {
    /// Largest `k ≤ v/2` passing the orbit bound, if any `k ≥ 2` does.
    pub fn orbit_bound_max_k(&self) -> Option<u64> {
        let order = BigUint::from(self.order);
        (2..=self.v / 2).take_while(|&k| orbit_bound_ok(self.v, k, &order)).last()
    }
}

/// Rows `(group, k)` for `5 ≤ k ≤ v/2`, stopping after the orbit bound first
/// fails unless a stated cap fixes the range.
pub fn sporadic_screen() -> CandidateTable {
    let mut t = CandidateTable::new(
        "sporadic",
        vec![
            Predicate {
                name: "orbit-bound",
                role: Role::Filter,
                statement: "(k-1)|G| >= C(v,k)".into(),
            },
            Predicate {
                name: "flag-divisibility",
                role: Role::Filter,
                statement: "k(v-k) | |G|".into(),
            },
            Predicate {
                name: "factor-divisibility",
                role: Role::Report,
                statement: "k | |G| and (v-k) | |G|".into(),
            },
        ],
    );
    for g in SPORADIC_GROUPS {
        let order = BigUint::from(g.order);
        let top = g.stated_cap.map_or(g.v / 2, |c| c.min(g.v / 2));
        for k in 5..=top {
            let bound = orbit_bound_ok(g.v, k, &order);
            let row = CandidateRow::new(g.name, None, None, g.v, Some(k), order.clone());
            t.push(
                row,
                vec![
                    ("orbit-bound", bound),
                    ("flag-divisibility", divisibility_ok(g.v, k, &order)),
                    ("factor-divisibility", factor_divisibility_ok(g.v, k, &order)),
                ],
            );
            if !bound && g.stated_cap.is_none() {
                break;
            }
        }
    }
    t
}
