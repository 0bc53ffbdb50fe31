//! Closed-form bounds the experiments are checked against.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::permcore::CycleType;

/// `max{1, ℓ}/(2√(n−1))`, with `ℓ` the fixed points of `λ`.
pub fn theorem1_bound(n: usize, lambda: &CycleType) -> f64 {
    let l = lambda.fixed_points().max(1) as f64;
    l / (2.0 * ((n - 1) as f64).sqrt())
}

/// `tv ≤ max{1,ℓ}/(2√(n−1))` decided exactly, as `(2·tv)²(n−1) ≤ max{1,ℓ}²`.
pub fn full_cycle_bound_holds_exact(tv: &BigRational, n: usize, fixed_points: usize) -> bool {
    if tv.is_negative() {
        return false;
    }
    let two_tv = tv * BigRational::from_integer(BigInt::from(2));
    let lhs = &two_tv * &two_tv * BigRational::from_integer(BigInt::from(n - 1));
    let l = BigInt::from(fixed_points.max(1));
    lhs <= BigRational::from_integer(&l * &l)
}

/// `2·E[F_{G−v}]/√(d−1)`: the bound on `‖L_v − U_{D_v,p}‖²` for a vertex of degree `d ≥ 2`.
pub fn theorem2_rhs(expected_faces_without_v: f64, degree: usize) -> f64 {
    assert!(degree >= 2, "the bound needs deg(v) ≥ 2");
    2.0 * expected_faces_without_v / ((degree - 1) as f64).sqrt()
}

/// `8 ln(n−1)/√(n−2)`: the `K_n` instance of the squared-TV bound (n ≥ 3).
pub fn kn_squared_tv_bound(n: usize) -> f64 {
    assert!(n >= 3);
    8.0 * ((n - 1) as f64).ln() / ((n - 2) as f64).sqrt()
}

/// `4 ln(n−1)/(e(n−1))`: the bound on `Pr[v ∉ F_e]` in `K_n`.
pub fn outside_face_bound(n: usize) -> f64 {
    assert!(n >= 3);
    let m = (n - 1) as f64;
    4.0 * m.ln() / (std::f64::consts::E * m)
}

/// `4 ln n`: the bound on the expected face count of a random map of `K_n`.
pub fn expected_faces_bound(n: usize) -> f64 {
    4.0 * (n as f64).ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::ratio;

    #[test]
    fn numeric_values() {
        assert!((theorem1_bound(3, &CycleType::full_cycle(3)) - 0.353_553).abs() < 1e-6);
        assert!((theorem1_bound(5, &CycleType::full_cycle(5)) - 0.25).abs() < 1e-12);
        assert!((kn_squared_tv_bound(100) - 3.7134).abs() < 1e-3);
        assert!((outside_face_bound(100) - 0.068_28).abs() < 1e-4);
        assert!((expected_faces_bound(100) - 18.4207).abs() < 1e-3);
    }

    #[test]
    fn theorem1_bound_decreases_in_n() {
        for l in 0..4 {
            let mut last = f64::INFINITY;
            for n in (l + 2).max(3)..40 {
                let mut parts = vec![n - l];
                parts.extend(std::iter::repeat_n(1, l));
                let b = theorem1_bound(n, &CycleType::from_parts_unsorted(parts));
                assert!(b <= last);
                last = b;
            }
        }
    }

    #[test]
    fn exact_comparison() {
        // 1/6 against 1/(2√2): (1/3)²·2 = 2/9 ≤ 1.
        assert!(full_cycle_bound_holds_exact(&ratio(1, 6), 3, 0));
        // 1/2 at n = 5 with ℓ = 0: (1)²·4 = 4 > 1.
        assert!(!full_cycle_bound_holds_exact(&ratio(1, 2), 5, 0));
        // Equality counts as holding: tv = 1/4, n = 5.
        assert!(full_cycle_bound_holds_exact(&ratio(1, 4), 5, 1));
    }

    #[test]
    fn squared_tv_bound_is_nonnegative() {
        assert_eq!(theorem2_rhs(0.0, 5), 0.0);
        assert!((theorem2_rhs(2.0, 3) - 4.0 / 2f64.sqrt()).abs() < 1e-12);
    }
}
