use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use num_integer::Integer;
use serde::Serialize;

use crate::spectral::eigen::Spectrum;

/// Occupancy of the primitive `d`-th roots of unity: exponent `k` (coprime
/// to `d`) mapped to its multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassOccupancy {
    pub order: u64,
    pub counts: BTreeMap<u64, usize>,
}

impl ClassOccupancy {
    /// The common multiplicity if every primitive root of this order occurs
    /// equally often.
    pub fn uniform_multiplicity(&self) -> Option<usize> {
        if self.counts.len() as u64 != euler_phi(self.order) {
            return None;
        }
        let first = *self.counts.values().next()?;
        self.counts.values().all(|&c| c == first).then_some(first)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RootProfile {
    Matched {
        classes: BTreeMap<u64, ClassOccupancy>,
    },
    NotRootsOfUnity {
        re: f64,
        im: f64,
    },
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Smallest `(d, k)` with `d <= max_order` and `|z - e^{2 pi i k/d}| < tol`.
pub fn match_root_of_unity(z: Complex64, max_order: u64, tol: f64) -> Option<(u64, u64)> {
    if (z.norm() - 1.0).abs() >= tol {
        return None;
    }
    let turn = z.arg().rem_euclid(TAU) / TAU;
    for d in 1..=max_order {
        let k = ((turn * d as f64).round() as u64) % d;
        let root = Complex64::from_polar(1.0, TAU * k as f64 / d as f64);
        if (z - root).norm() < tol && k.gcd(&d) == 1 {
            return Some((d, k));
        }
    }
    None
}

/// Match every eigenvalue to a root of unity of order at most `max_order`.
pub fn roots_of_unity_profile(spec: &Spectrum, max_order: u64, tol: f64) -> RootProfile {
    let mut classes: BTreeMap<u64, ClassOccupancy> = BTreeMap::new();
    for e in &spec.eigs {
        match match_root_of_unity(e.value(), max_order, tol) {
            Some((d, k)) => {
                let class = classes.entry(d).or_insert_with(|| ClassOccupancy {
                    order: d,
                    counts: BTreeMap::new(),
                });
                *class.counts.entry(k).or_default() += e.mult;
            }
            None => return RootProfile::NotRootsOfUnity { re: e.re, im: e.im },
        }
    }
    RootProfile::Matched { classes }
}

/// Default search bound `2 * dim`.
pub fn default_max_order(dim: usize) -> u64 {
    2 * dim as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::eigen::Origin;

    #[test]
    fn phi_values() {
        let got: Vec<_> = (1..=12).map(euler_phi).collect();
        assert_eq!(got, [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }

    #[test]
    fn plus_minus_one() {
        let s = Spectrum::new(
            vec![
                (Complex64::new(1.0, 0.0), 4),
                (Complex64::new(-1.0, 0.0), 4),
            ],
            Origin::Numeric,
        );
        let RootProfile::Matched { classes } = roots_of_unity_profile(&s, 16, 1e-8) else {
            panic!("expected roots of unity");
        };
        assert_eq!(classes[&1].uniform_multiplicity(), Some(4));
        assert_eq!(classes[&2].uniform_multiplicity(), Some(4));
    }

    #[test]
    fn half_is_not_a_root() {
        let s = Spectrum::new(vec![(Complex64::new(0.5, 0.0), 1)], Origin::Numeric);
        assert!(matches!(
            roots_of_unity_profile(&s, 16, 1e-8),
            RootProfile::NotRootsOfUnity { .. }
        ));
    }

    #[test]
    fn incomplete_class_is_not_uniform() {
        let i = Complex64::new(0.0, 1.0);
        let s = Spectrum::new(vec![(i, 2)], Origin::Numeric);
        let RootProfile::Matched { classes } = roots_of_unity_profile(&s, 8, 1e-8) else {
            panic!();
        };
        assert_eq!(classes[&4].uniform_multiplicity(), None);
        assert_eq!(classes[&4].total(), 2);
    }

    #[test]
    fn primitive_cube_roots() {
        let w = Complex64::from_polar(1.0, TAU / 3.0);
        assert_eq!(match_root_of_unity(w, 10, 1e-9), Some((3, 1)));
        assert_eq!(match_root_of_unity(w.conj(), 10, 1e-9), Some((3, 2)));
        assert_eq!(match_root_of_unity(w, 2, 1e-9), None);
    }
}
