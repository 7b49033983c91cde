//! Exact real-root counting with Sturm sequences over the integers.

use num_bigint::{BigInt, Sign};
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::{PolyError, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealRootCount {
    /// Real roots counted with multiplicity.
    pub count: usize,
    pub real_rooted: bool,
}

/// Counts real roots with multiplicity.
///
/// The derivative-gcd tower `g_0 = p`, `g_{j+1} = gcd(g_j, g_j')` holds every
/// root of multiplicity `m` in exactly `g_0..g_{m-1}`, so summing the number of
/// distinct real roots of each squarefree part `g_j / g_{j+1}` gives the count
/// with multiplicity.
pub fn count_real_roots(p: &Polynomial) -> Result<RealRootCount, PolyError> {
    let degree = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    let mut count = 0;
    let mut g = p.primitive_part();
    while g.degree().unwrap_or(0) > 0 {
        let next = gcd(&g, &g.derivative());
        let squarefree = g.exact_divide(&next)?;
        count += distinct_real_roots(&squarefree);
        g = next;
    }
    Ok(RealRootCount {
        count,
        real_rooted: count == degree,
    })
}

/// Primitive gcd with positive leading coefficient.
pub(crate) fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (mut a, mut b) = (a.primitive_part(), b.primitive_part());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = positive_remainder(&a, &b).primitive_part();
        a = b;
        b = r;
    }
    a
}

/// A positive integer multiple of the remainder of `a` by `b`.
fn positive_remainder(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let db = b.degree().expect("nonzero divisor");
    let lb = b.leading().expect("nonzero divisor").clone();
    let lb_abs = lb.abs();
    let lb_sign = if lb.is_negative() { -1 } else { 1 };
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lr = r.leading().expect("nonzero").clone() * lb_sign;
        r = &r.scale(&lb_abs) - &b.scale(&lr).shift(dr - db);
    }
    r
}

/// Number of distinct real roots via the Sturm sequence of `p`.
fn distinct_real_roots(p: &Polynomial) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        let r = positive_remainder(&chain[n - 2], &chain[n - 1]);
        if r.is_zero() {
            break;
        }
        // Dividing by the positive content keeps the sign pattern intact.
        let c = r.content();
        chain.push(-&Polynomial::new(
            r.coeffs().iter().map(|x| x / &c).collect(),
        ));
    }
    let at_pos_inf: Vec<Sign> = chain.iter().map(|q| leading_sign(q, false)).collect();
    let at_neg_inf: Vec<Sign> = chain.iter().map(|q| leading_sign(q, true)).collect();
    sign_changes(&at_neg_inf) - sign_changes(&at_pos_inf)
}

fn leading_sign(q: &Polynomial, negative_infinity: bool) -> Sign {
    let s = q.leading().map_or(Sign::NoSign, BigInt::sign);
    let odd = q.degree().is_some_and(|d| d % 2 == 1);
    if negative_infinity && odd {
        -s
    } else {
        s
    }
}

fn sign_changes(signs: &[Sign]) -> usize {
    let nonzero: Vec<&Sign> = signs.iter().filter(|s| **s != Sign::NoSign).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}
