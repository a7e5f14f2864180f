use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::qca::config::{Configuration, MAX_SITES};
use crate::qca::local::{pair_index, LocalOperator};
use crate::qca::state::StateVector;
use crate::scalar::Entry;

/// Default largest N for which the dense `2^N x 2^N` matrix is built.
pub const DEFAULT_DENSE_CAP: usize = 12;

/// One factor `I (x) ... (x) Q (x) ... (x) I` of the global product, with the
/// local operator on sites `site` and `site + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Layer {
    pub site: usize,
}

impl Layer {
    /// Dense Kronecker form of this layer on `n` sites.
    pub fn dense(self, local: &LocalOperator, n: usize) -> Matrix {
        let left = Matrix::identity(1 << self.site);
        let right = Matrix::identity(1 << (n - self.site - 2));
        left.kron(local.matrix()).kron(&right)
    }
}

/// The evolution operator on a path of N sites.
///
/// It is the product `L_{N-2} ... L_1 L_0` where `L_x` applies the local
/// operator to sites `x, x+1`; `L_0` acts first. For N = 1 it is the 2x2
/// identity. The dense matrix is materialized lazily and cached.
#[derive(Debug)]
pub struct GlobalOperator {
    local: LocalOperator,
    sites: usize,
    dense_cap: usize,
    dense: OnceLock<Matrix>,
}

impl Clone for GlobalOperator {
    fn clone(&self) -> Self {
        let dense = OnceLock::new();
        if let Some(m) = self.dense.get() {
            let _ = dense.set(m.clone());
        }
        GlobalOperator {
            local: self.local.clone(),
            sites: self.sites,
            dense_cap: self.dense_cap,
            dense,
        }
    }
}

pub fn assemble_global(local: &LocalOperator, sites: usize) -> Result<GlobalOperator> {
    if sites == 0 || sites > MAX_SITES {
        return Err(Error::InvalidInput(format!(
            "site count {sites} out of range"
        )));
    }
    Ok(GlobalOperator {
        local: local.clone(),
        sites,
        dense_cap: DEFAULT_DENSE_CAP,
        dense: OnceLock::new(),
    })
}

impl GlobalOperator {
    pub fn with_dense_cap(mut self, cap: usize) -> Self {
        self.dense_cap = cap;
        self
    }

    pub fn local(&self) -> &LocalOperator {
        &self.local
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn dim(&self) -> usize {
        1 << self.sites
    }

    pub fn dense_cap(&self) -> usize {
        self.dense_cap
    }

    /// Factors in product order, leftmost first: sites `N-2, ..., 0`.
    pub fn layers(&self) -> Vec<Layer> {
        (0..self.sites.saturating_sub(1))
            .rev()
            .map(|site| Layer { site })
            .collect()
    }

    /// Apply the operator to an amplitude vector one layer at a time.
    pub fn apply(&self, amplitudes: &[Entry]) -> Result<Vec<Entry>> {
        if amplitudes.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: amplitudes.len(),
            });
        }
        let mut v = amplitudes.to_vec();
        for layer in self.layers().into_iter().rev() {
            self.apply_layer(layer, &mut v);
        }
        Ok(v)
    }

    fn apply_layer(&self, layer: Layer, v: &mut [Entry]) {
        let q = self.local.matrix();
        let shift = self.sites - 2 - layer.site;
        let mask = 0b11usize << shift;
        for base in (0..v.len()).filter(|b| b & mask == 0) {
            let idx = |p: usize| base | (p << shift);
            let input = [v[idx(0)], v[idx(1)], v[idx(2)], v[idx(3)]];
            for out in 0..4 {
                let mut acc = Entry::zero();
                for (col, x) in input.iter().enumerate() {
                    let a = q[(out, col)];
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc + a * *x;
                    }
                }
                v[idx(out)] = acc;
            }
        }
    }

    /// The dense matrix, built column by column from layer application.
    pub fn dense(&self) -> Result<&Matrix> {
        if self.sites > self.dense_cap {
            return Err(Error::CapExceeded {
                what: "dense materialization",
                n: self.sites,
                cap: self.dense_cap,
            });
        }
        if let Some(m) = self.dense.get() {
            return Ok(m);
        }
        let dim = self.dim();
        let mut m = Matrix::zeros(dim, dim);
        let mut e = vec![Entry::zero(); dim];
        for c in 0..dim {
            e[c] = Entry::one();
            let col = self.apply(&e)?;
            e[c] = Entry::zero();
            for (r, x) in col.into_iter().enumerate() {
                m[(r, c)] = x;
            }
        }
        Ok(self.dense.get_or_init(|| m))
    }

    /// Weight of the one-step transition `from -> to`; the matrix entry
    /// at row `to`, column `from`.
    pub fn transition_weight(&self, from: Configuration, to: Configuration) -> Result<Entry> {
        if from.sites() != self.sites || to.sites() != self.sites {
            return Err(Error::LengthMismatch(from.sites(), to.sites()));
        }
        transition_weight(&self.local, from, to)
    }

    pub fn evolve(&self, initial: &StateVector, steps: usize) -> Result<StateVector> {
        evolve(self, initial, steps)
    }
}

/// Weight of `from -> to` as a product of local weights.
///
/// When the layer on sites `x, x+1` fires, site `x+1` still holds its old
/// value `i_{x+1}` (it is only rewritten by the next layer), so the factor
/// is `a^{i_x i_{x+1}}_{k_x i_{x+1}}`; the last site never changes.
pub fn transition_weight(
    local: &LocalOperator,
    from: Configuration,
    to: Configuration,
) -> Result<Entry> {
    if from.sites() != to.sites() {
        return Err(Error::LengthMismatch(from.sites(), to.sites()));
    }
    let n = from.sites();
    if from.site(n - 1) != to.site(n - 1) {
        return Ok(Entry::zero());
    }
    let mut w = Entry::one();
    for x in 0..n - 1 {
        let (i, j, k) = (from.site(x), from.site(x + 1), to.site(x));
        let a = local.matrix()[(pair_index(k, j), pair_index(i, j))];
        if a.is_zero() {
            return Ok(Entry::zero());
        }
        w = w * a;
    }
    Ok(w)
}

/// `Q^steps` applied to `initial`, without materializing the dense matrix.
pub fn evolve(global: &GlobalOperator, initial: &StateVector, steps: usize) -> Result<StateVector> {
    if initial.sites() != global.sites() {
        return Err(Error::DimensionMismatch {
            expected: global.dim(),
            actual: initial.amplitudes().len(),
        });
    }
    let mut v = initial.amplitudes().to_vec();
    for _ in 0..steps {
        v = global.apply(&v)?;
    }
    StateVector::from_amplitudes(global.sites(), v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qca::local::{local_qca1, local_tensor};
    use crate::scalar::Scalar;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn single_site_is_identity() {
        let g = assemble_global(&local_qca1(0.4, 1.1), 1).unwrap();
        assert_eq!(g.dense().unwrap(), &Matrix::identity(2));
        assert!(g.layers().is_empty());
    }

    #[test]
    fn two_sites_is_local() {
        let q = local_qca1(0.4, 1.1);
        let g = assemble_global(&q, 2).unwrap();
        assert!(g.dense().unwrap().max_abs_diff(q.matrix()) == 0.0);
    }

    #[test]
    fn three_sites_four_branch_product() {
        let q = local_qca1(0.4, 1.1);
        let g = assemble_global(&q, 3).unwrap();
        let i2 = Matrix::identity(2);
        let expected = i2.kron(q.matrix()).mul(&q.matrix().kron(&i2)).unwrap();
        assert!(g.dense().unwrap().max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn layer_zero_applies_first() {
        let g = assemble_global(&LocalOperator::identity(), 5).unwrap();
        let sites: Vec<_> = g.layers().iter().map(|l| l.site).collect();
        assert_eq!(sites, [3, 2, 1, 0]);
    }

    #[test]
    fn dense_cap_enforced() {
        let g = assemble_global(&LocalOperator::identity(), 5)
            .unwrap()
            .with_dense_cap(4);
        assert!(matches!(g.dense(), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn tensor_quarter_turn_global_is_exact_diagonal() {
        let g = assemble_global(&local_tensor(FRAC_PI_2), 4).unwrap();
        let m = g.dense().unwrap();
        assert!(m.is_exact());
        for r in 0..16 {
            for c in 0..16 {
                if r != c {
                    assert!(m[(r, c)].is_zero());
                }
            }
        }
        // (0,1,1,1): only the pair at sites 0,1 reads 01.
        assert_eq!(m[(7, 7)].re, Scalar::int(-1));
    }

    #[test]
    fn transition_weight_mismatch() {
        let a: Configuration = "01".parse().unwrap();
        let b: Configuration = "011".parse().unwrap();
        assert!(matches!(
            transition_weight(&LocalOperator::identity(), a, b),
            Err(Error::LengthMismatch(2, 3))
        ));
    }

    #[test]
    fn identity_transition_weights() {
        for from in Configuration::all(4) {
            for to in Configuration::all(4) {
                let w = transition_weight(&LocalOperator::identity(), from, to).unwrap();
                let expected = if from == to { 1 } else { 0 };
                assert_eq!(w.re, Scalar::int(expected));
            }
        }
    }
}
