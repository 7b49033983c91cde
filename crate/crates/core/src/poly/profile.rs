use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{count_real_roots, PolyError, Polynomial};

/// Shape predicates of one coefficient sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyProfile {
    pub degree: usize,
    pub symmetric: bool,
    pub almost_symmetric: bool,
    pub unimodal: bool,
    pub log_concave: bool,
    pub real_rooted: bool,
}

pub fn classify(p: &Polynomial) -> Result<PolyProfile, PolyError> {
    let degree = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    let a = p.coeffs();
    Ok(PolyProfile {
        degree,
        symmetric: p.is_symmetric(),
        almost_symmetric: is_almost_symmetric(a),
        unimodal: is_unimodal(a),
        log_concave: is_log_concave(a),
        real_rooted: count_real_roots(p)?.real_rooted,
    })
}

/// Interior coefficients mirror each other (`a_j = a_{n-j}` for
/// `1 <= j <= n/2`) but the end coefficients differ.
fn is_almost_symmetric(a: &[BigInt]) -> bool {
    let n = a.len() - 1;
    a[0] != a[n] && (1..=n / 2).all(|j| a[j] == a[n - j])
}

fn is_unimodal(a: &[BigInt]) -> bool {
    let mut k = 0;
    while k + 1 < a.len() && a[k] <= a[k + 1] {
        k += 1;
    }
    a[k..].windows(2).all(|w| w[0] >= w[1])
}

fn is_log_concave(a: &[BigInt]) -> bool {
    a.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

/// True iff the coefficients are nondecreasing on `[0, rise_end]` and
/// nonincreasing on `[fall_start, degree]`.
pub fn check_monotone_window(
    p: &Polynomial,
    rise_end: usize,
    fall_start: usize,
) -> Result<bool, PolyError> {
    let degree = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    if rise_end > fall_start || fall_start > degree {
        return Err(PolyError::WindowOutOfRange {
            rise_end,
            fall_start,
            degree,
        });
    }
    let a = p.coeffs();
    let rises = a[..=rise_end].windows(2).all(|w| w[0] <= w[1]);
    let falls = a[fall_start..].windows(2).all(|w| w[0] >= w[1]);
    Ok(rises && falls)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(c: &[i64]) -> PolyProfile {
        classify(&Polynomial::from_i64s(c)).unwrap()
    }

    #[test]
    fn join_examples() {
        let p = profile(&[1, 63, 147, 343]);
        assert!(p.log_concave && p.unimodal);

        let p = profile(&[1, 64, 147, 343]);
        assert!(p.unimodal);
        assert!(!p.log_concave);

        assert!(!profile(&[1, 148, 147, 343]).unimodal);

        let p = profile(&[1, 31, 33, 31, 1]);
        assert!(p.symmetric && p.log_concave);

        let p = profile(&[1, 68, 54, 68, 1]);
        assert!(p.symmetric);
        assert!(!p.unimodal);
    }

    #[test]
    fn almost_symmetric_antiregular_shape() {
        // 2(1+x)^3 - 1
        let p = profile(&[1, 6, 6, 2]);
        assert!(p.almost_symmetric);
        assert!(!p.symmetric);
        assert_eq!(p.degree, 3);
    }

    #[test]
    fn constants_and_linear() {
        let p = profile(&[7]);
        assert!(p.symmetric && p.unimodal && p.log_concave && !p.almost_symmetric);
        assert!(p.real_rooted);
        let p = profile(&[1, 2]);
        assert!(p.almost_symmetric && !p.symmetric);
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(
            classify(&Polynomial::zero()),
            Err(PolyError::ZeroPolynomial)
        );
        assert!(check_monotone_window(&Polynomial::zero(), 0, 0).is_err());
    }

    #[test]
    fn windows() {
        let h1 = Polynomial::from_i64s(&[
            1, 18, 135, 565, 1485, 2601, 3126, 2601, 1485, 565, 135, 18, 1,
        ]);
        assert_eq!(check_monotone_window(&h1, 5, 7), Ok(true));
        assert_eq!(
            check_monotone_window(&Polynomial::from_i64s(&[1, 1]), 1, 1),
            Ok(true)
        );
        let bad = Polynomial::from_i64s(&[1, 148, 147, 343]);
        assert_eq!(check_monotone_window(&bad, 2, 2), Ok(false));
        assert!(matches!(
            check_monotone_window(&bad, 3, 2),
            Err(PolyError::WindowOutOfRange { .. })
        ));
        assert!(check_monotone_window(&bad, 1, 4).is_err());
    }
}
