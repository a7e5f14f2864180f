use num_complex::{Complex, Complex64};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qca::config::Configuration;
use crate::scalar::{entry_to_c64, Entry, Scalar};

/// Amplitudes over the `2^N` configurations of an N-site path.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    sites: usize,
    amplitudes: Vec<Entry>,
}

/// How amplitudes are read as probabilities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    /// `|amplitude|^2`.
    Quantum,
    /// The amplitude itself, for a transposed-stochastic evolution of a
    /// probability vector.
    Stochastic,
}

impl StateVector {
    pub fn from_amplitudes(sites: usize, amplitudes: Vec<Entry>) -> Result<Self> {
        let expected = 1usize
            .checked_shl(sites as u32)
            .ok_or_else(|| Error::InvalidInput(format!("{sites} sites")))?;
        if amplitudes.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                actual: amplitudes.len(),
            });
        }
        Ok(StateVector { sites, amplitudes })
    }

    pub fn from_c64(sites: usize, amplitudes: &[Complex64]) -> Result<Self> {
        let v = amplitudes
            .iter()
            .map(|z| Complex::new(Scalar::Float(z.re), Scalar::Float(z.im)))
            .collect();
        StateVector::from_amplitudes(sites, v)
    }

    /// The basis vector of one configuration.
    pub fn basis(config: Configuration) -> Self {
        let mut amplitudes = vec![Entry::zero(); 1 << config.sites()];
        amplitudes[config.index()] = Entry::one();
        StateVector {
            sites: config.sites(),
            amplitudes,
        }
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn amplitudes(&self) -> &[Entry] {
        &self.amplitudes
    }

    pub fn amplitude(&self, config: Configuration) -> Entry {
        self.amplitudes[config.index()]
    }

    pub fn to_c64(&self) -> Vec<Complex64> {
        self.amplitudes.iter().map(entry_to_c64).collect()
    }

    pub fn norm(&self) -> f64 {
        self.to_c64()
            .iter()
            .map(Complex64::norm_sqr)
            .sum::<f64>()
            .sqrt()
    }

    /// Nonzero amplitudes with their configurations, in basis order.
    pub fn support(&self) -> Vec<(Configuration, Entry)> {
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| {
                (
                    Configuration::from_index(i as u64, self.sites).expect("index in range"),
                    *a,
                )
            })
            .collect()
    }
}

/// Probability of every basis configuration under the chosen reading.
///
/// Exact amplitudes give exact probabilities.
pub fn measure_probabilities(
    state: &StateVector,
    reading: Reading,
) -> Vec<(Configuration, Scalar)> {
    state
        .amplitudes
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let p = match reading {
                Reading::Quantum => a.re * a.re + a.im * a.im,
                Reading::Stochastic => a.re,
            };
            (
                Configuration::from_index(i as u64, state.sites).expect("index in range"),
                p,
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_state_has_unit_probability() {
        let c: Configuration = "101".parse().unwrap();
        let probs = measure_probabilities(&StateVector::basis(c), Reading::Quantum);
        assert_eq!(probs.len(), 8);
        for (cfg, p) in probs {
            let expected = if cfg == c { 1 } else { 0 };
            assert_eq!(p, Scalar::int(expected));
            assert!(p.is_exact());
        }
    }

    #[test]
    fn length_checked() {
        assert!(matches!(
            StateVector::from_amplitudes(3, vec![Entry::zero(); 7]),
            Err(Error::DimensionMismatch {
                expected: 8,
                actual: 7
            })
        ));
    }

    #[test]
    fn stochastic_reading_uses_amplitude() {
        let v = StateVector::from_c64(1, &[Complex64::new(0.25, 0.0), Complex64::new(0.75, 0.0)])
            .unwrap();
        let q = measure_probabilities(&v, Reading::Quantum);
        let s = measure_probabilities(&v, Reading::Stochastic);
        assert_eq!(q[1].1.to_f64(), 0.5625);
        assert_eq!(s[1].1.to_f64(), 0.75);
    }
}
