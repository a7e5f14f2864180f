//! Cyclotomic polynomials and their binomial (Moebius) expansion
//! `Phi_d(x) = prod_{e | d} (x^e - 1)^{mu(d/e)}`.

use std::collections::BTreeMap;

use crate::spectral::{euler_phi, IntPoly};

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn mobius(mut n: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `(e, mu(d/e))` for every divisor `e` of `d` with nonzero Moebius value.
pub fn binomial_exponents(d: u64) -> Vec<(u64, i64)> {
    divisors(d)
        .into_iter()
        .map(|e| (e, mobius(d / e)))
        .filter(|&(_, m)| m != 0)
        .collect()
}

/// `x^e - 1`, constant term first.
pub fn x_pow_minus_one(e: u64) -> IntPoly {
    let mut c = vec![0i64; e as usize + 1];
    c[0] = -1;
    c[e as usize] = 1;
    IntPoly::from_i64(&c)
}

/// `Phi_d` as an integer polynomial, built from the binomial expansion.
pub fn cyclotomic_poly(d: u64) -> IntPoly {
    let (num, den): (Vec<_>, Vec<_>) = binomial_exponents(d).into_iter().partition(|&(_, m)| m > 0);
    let numerator = num.iter().fold(IntPoly::from_i64(&[1]), |acc, &(e, _)| {
        acc.mul(&x_pow_minus_one(e))
    });
    den.iter().fold(numerator, |acc, &(e, _)| {
        acc.div_exact(&x_pow_minus_one(e))
            .expect("cyclotomic binomial expansion divides exactly")
    })
}

/// Factor an integer polynomial as `sign * prod Phi_d^{m_d}`.
///
/// Returns the sign (the leftover unit) and the multiplicities, or `None`
/// if some factor is not cyclotomic.
pub fn factor_cyclotomic(p: &IntPoly) -> Option<(i64, BTreeMap<u64, usize>)> {
    let mut rest = p.clone();
    let mut mults = BTreeMap::new();
    let degree = p.degree() as u64;
    // phi(d) >= sqrt(d / 2), so no cyclotomic factor of degree <= `degree`
    // has order above 2 * degree^2.
    let bound = 2 * degree * degree + 2;
    let mut d = 1;
    while rest.degree() > 0 && d <= bound {
        if euler_phi(d) as usize <= rest.degree() {
            let phi = cyclotomic_poly(d);
            while let Some(q) = rest.div_exact(&phi) {
                rest = q;
                *mults.entry(d).or_insert(0) += 1;
            }
        }
        d += 1;
    }
    if rest.degree() != 0 {
        return None;
    }
    let unit = i64::try_from(&rest.coeffs()[0]).ok()?;
    (unit == 1 || unit == -1).then_some((unit, mults))
}
