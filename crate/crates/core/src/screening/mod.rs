//! Exact order and divisibility screening of 2-transitive group families.

mod audit;
mod bounds;
mod families;
mod sporadic;
mod table;

pub use audit::{audit_counts, audit_manifest, AuditClaim, AuditRow, AuditStatus, ClaimValue};
pub use bounds::{
    binomial, binomial_at_most, block_stabilizer_divisibility_ok, divisibility_ok,
    factor_divisibility_ok, general_linear_order, orbit_bound_ok, point_stabilizer_divisibility_ok,
    prime_power, prime_powers, reduced_bound_ok, reduction_exempt,
};
pub use families::{family_screen, Family, GroupFamilySpec};
pub use sporadic::{sporadic_screen, SporadicGroup, SPORADIC_GROUPS};
pub use table::{CandidateRow, CandidateTable, Check, Predicate, Role, Verdict};
