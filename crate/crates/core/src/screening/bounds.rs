//! Order bounds and divisibility filters, all in exact integer arithmetic.

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn binomial(v: u64, k: u64) -> BigUint {
    if k > v {
        return BigUint::zero();
    }
    let k = k.min(v - k);
    let mut c = BigUint::one();
    for i in 0..k {
        c = c * (v - i) / (i + 1);
    }
    c
}

/// `C(v,k) ≤ target`, stopping as soon as a partial product exceeds it.
pub fn binomial_at_most(v: u64, k: u64, target: &BigUint) -> bool {
    if k > v {
        return true;
    }
    let k = k.min(v - k);
    let mut c = BigUint::one();
    for i in 0..k {
        c = c * (v - i) / (i + 1);
        if &c > target {
            return false;
        }
    }
    true
}

/// At most `k−1` orbits on `k`-subsets forces `(k−1)·|G| ≥ C(v,k)`.
pub fn orbit_bound_ok(v: u64, k: u64, order: &BigUint) -> bool {
    if k < 2 {
        return true;
    }
    binomial_at_most(v, k, &(order * (k - 1)))
}

/// `(v,k) = (12,6)` is the one case where the five-subset form does not follow.
pub fn reduction_exempt(v: u64, k: u64) -> bool {
    v == 12 && k == 6
}

/// `4·|G| ≥ C(v,5)`.
pub fn reduced_bound_ok(v: u64, order: &BigUint) -> bool {
    binomial_at_most(v, 5, &(order * 4u32))
}

fn divides(n: &BigUint, by: u64) -> bool {
    by != 0 && (n % by).is_zero()
}

/// `k(v−k)` divides `|G|`.
pub fn divisibility_ok(v: u64, k: u64, order: &BigUint) -> bool {
    k < v && divides(order, k * (v - k))
}

/// `k(v−k)` divides `|G|/b`, the stabiliser order of a block when the
/// design is one orbit of `b` blocks.
pub fn block_stabilizer_divisibility_ok(v: u64, k: u64, order: &BigUint, blocks: u64) -> bool {
    if !divides(order, blocks) {
        return false;
    }
    divisibility_ok(v, k, &(order / blocks))
}

/// `v−k` divides the point stabiliser order `|G|/v`.
pub fn point_stabilizer_divisibility_ok(v: u64, k: u64, order: &BigUint) -> bool {
    k < v && divides(order, v) && divides(&(order / v), v - k)
}

/// `k` and `v−k` each divide `|G|`.
pub fn factor_divisibility_ok(v: u64, k: u64, order: &BigUint) -> bool {
    k < v && divides(order, k) && divides(order, v - k)
}

/// `(p, a)` with `q = p^a`, or `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d) || d * d > q).map(|d| if q.is_multiple_of(d) { d } else { q })?;
    let mut rest = q;
    let mut a = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        a += 1;
    }
    (rest == 1).then_some((p, a))
}

pub fn prime_powers(max: u64) -> impl Iterator<Item = u64> {
    (2..=max).filter(|&q| prime_power(q).is_some())
}

/// `|GL(d,q)|`.
pub fn general_linear_order(d: u32, q: u64) -> BigUint {
    let qd = BigUint::from(q).pow(d);
    (0..d).fold(BigUint::one(), |acc, i| acc * (&qd - BigUint::from(q).pow(i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(24, 8), BigUint::from(735_471u32));
        assert_eq!(binomial(5, 7), BigUint::zero());
        assert!(binomial_at_most(24, 8, &BigUint::from(735_471u32)));
        assert!(!binomial_at_most(24, 8, &BigUint::from(735_470u32)));
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(32), Some((2, 5)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        let small: Vec<u64> = prime_powers(16).collect();
        assert_eq!(small, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16]);
    }

    #[test]
    fn symmetric_group_passes_orbit_bound() {
        let s24: BigUint = (1u32..=24).map(BigUint::from).product();
        assert!(orbit_bound_ok(24, 8, &s24));
        assert!(reduction_exempt(12, 6));
        assert!(!reduction_exempt(12, 5));
    }

    #[test]
    fn divisibility_filters() {
        let m23 = BigUint::from(10_200_960u64);
        let ks: Vec<u64> = (5..=11).filter(|&k| divisibility_ok(23, k, &m23)).collect();
        assert_eq!(ks, vec![5, 7, 8, 9, 11]);
        let g = BigUint::from(4896u32);
        assert!(divisibility_ok(18, 6, &g));
        assert!(!point_stabilizer_divisibility_ok(18, 6, &g));
        assert!(block_stabilizer_divisibility_ok(11, 5, &BigUint::from(660u32), 11));
        assert!(!block_stabilizer_divisibility_ok(11, 5, &BigUint::from(660u32), 66));
    }

    #[test]
    fn linear_group_orders() {
        assert_eq!(general_linear_order(3, 2), BigUint::from(168u32));
        assert_eq!(general_linear_order(2, 4), BigUint::from(180u32));
    }
}
