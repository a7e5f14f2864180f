//! Numeric eigenvalues with multiplicity clustering.
//!
//! Global operators are usually very sparse (diagonal at `xi = pi/2`, a
//! permutation for Rule 90), so the matrix is first split into the strongly
//! connected components of its sparsity graph. In that ordering the matrix is
//! block triangular and its spectrum is the union of the diagonal blocks'
//! spectra; only the nontrivial blocks go through a dense Schur solve.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qca::GlobalOperator;

pub const DEFAULT_CLUSTER_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Exact,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub re: f64,
    pub im: f64,
    pub mult: usize,
}

impl Eigenvalue {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Eigenvalues with multiplicities.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub dim: usize,
    pub eigs: Vec<Eigenvalue>,
    #[serde(default = "numeric_origin")]
    pub origin: Origin,
}

fn numeric_origin() -> Origin {
    Origin::Numeric
}

impl Spectrum {
    pub fn new(eigs: Vec<(Complex64, usize)>, origin: Origin) -> Self {
        let dim = eigs.iter().map(|(_, m)| m).sum();
        let mut eigs: Vec<Eigenvalue> = eigs
            .into_iter()
            .map(|(z, mult)| Eigenvalue {
                re: z.re,
                im: z.im,
                mult,
            })
            .collect();
        eigs.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));
        Spectrum { dim, eigs, origin }
    }

    /// Cluster raw eigenvalues: any two within `tol` are joined (transitively)
    /// and each cluster is represented by its mean.
    pub fn from_eigenvalues(values: &[Complex64], tol: f64) -> Self {
        let n = values.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for i in 0..n {
            for j in i + 1..n {
                if (values[i] - values[j]).norm() < tol {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut sums: Vec<(Complex64, usize)> = vec![(Complex64::new(0.0, 0.0), 0); n];
        for (i, v) in values.iter().enumerate() {
            let r = find(&mut parent, i);
            sums[r].0 += v;
            sums[r].1 += 1;
        }
        let eigs = sums
            .into_iter()
            .filter(|(_, m)| *m > 0)
            .map(|(s, m)| (s / m as f64, m))
            .collect();
        Spectrum::new(eigs, Origin::Numeric)
    }

    pub fn total_multiplicity(&self) -> usize {
        self.eigs.iter().map(|e| e.mult).sum()
    }

    /// Multiplicity of the cluster within `tol` of `z`, or 0.
    pub fn multiplicity_of(&self, z: Complex64, tol: f64) -> usize {
        self.eigs
            .iter()
            .filter(|e| (e.value() - z).norm() < tol)
            .map(|e| e.mult)
            .sum()
    }

    /// Every eigenvalue repeated by multiplicity.
    pub fn expanded(&self) -> Vec<Complex64> {
        self.eigs
            .iter()
            .flat_map(|e| std::iter::repeat(e.value()).take(e.mult))
            .collect()
    }

    /// Coefficients (constant first) of `prod (1 - lambda u)^mult`.
    pub fn reciprocal_char_poly(&self) -> Vec<Complex64> {
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        for lambda in self.expanded() {
            let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k] += c;
                next[k + 1] -= c * lambda;
            }
            coeffs = next;
        }
        coeffs
    }
}

/// Strongly connected components of the directed graph `i -> j` iff
/// `m[(i, j)] != 0` (iterative Tarjan).
fn strong_components(m: &DMatrix<Complex64>) -> Vec<Vec<usize>> {
    let n = m.nrows();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| m[(i, j)] != Complex64::new(0.0, 0.0))
                .collect()
        })
        .collect();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0;
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut edge)) = call.last_mut() {
            if *edge < adj[v].len() {
                let w = adj[v][*edge];
                *edge += 1;
                if index[w] == usize::MAX {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

/// Sweeps allowed per Schur attempt, per row of the block.
const SCHUR_SWEEPS_PER_ROW: usize = 60;
const SCHUR_ATTEMPTS: usize = 4;

/// Householder reflection `I - 2 v v^T / |v|^2` for a fixed pseudo-random `v`.
fn reflection(k: usize, attempt: usize) -> DMatrix<f64> {
    let v: Vec<f64> = (0..k)
        .map(|i| ((i + 1) as f64 * (1.618 + attempt as f64)).sin() + 0.5)
        .collect();
    let norm2: f64 = v.iter().map(|x| x * x).sum();
    DMatrix::from_fn(k, k, |r, c| {
        let id = if r == c { 1.0 } else { 0.0 };
        id - 2.0 * v[r] * v[c] / norm2
    })
}

fn dense_eigenvalues(block: DMatrix<Complex64>) -> Result<Vec<Complex64>> {
    let k = block.nrows();
    let max_iter = SCHUR_SWEEPS_PER_ROW * k.max(4);
    let real = block.iter().all(|z| z.im == 0.0);
    // Exact permutation cycles can stall the shifted QR iteration; a
    // similarity by a reflection leaves the spectrum alone but breaks the
    // symmetry that causes it.
    for attempt in 0..SCHUR_ATTEMPTS {
        let h = reflection(k, attempt);
        if real {
            let mut a = block.map(|z| z.re);
            if attempt > 0 {
                a = &h * a * &h;
            }
            if let Some(s) = nalgebra::Schur::try_new(a, f64::EPSILON, max_iter) {
                return Ok(s.complex_eigenvalues().iter().copied().collect());
            }
        } else {
            let mut a = block.clone();
            if attempt > 0 {
                let hc = h.map(|x| Complex64::new(x, 0.0));
                a = &hc * a * &hc;
            }
            if let Some(s) = nalgebra::Schur::try_new(a, f64::EPSILON, max_iter) {
                let (_, t) = s.unpack();
                return Ok(t.diagonal().iter().copied().collect());
            }
        }
    }
    Err(Error::EigenSolver(k))
}

/// All eigenvalues of a square matrix (with repetition).
pub fn eigenvalues(m: &DMatrix<Complex64>) -> Result<Vec<Complex64>> {
    assert!(m.is_square());
    let mut out = Vec::with_capacity(m.nrows());
    for comp in strong_components(m) {
        if comp.len() == 1 {
            out.push(m[(comp[0], comp[0])]);
            continue;
        }
        let k = comp.len();
        let block = DMatrix::from_fn(k, k, |r, c| m[(comp[r], comp[c])]);
        out.extend(dense_eigenvalues(block)?);
    }
    Ok(out)
}

/// Clustered spectrum of the dense global operator.
pub fn numeric_spectrum(global: &GlobalOperator, tol: f64) -> Result<Spectrum> {
    let dense = global.dense()?.to_c64();
    Ok(Spectrum::from_eigenvalues(&eigenvalues(&dense)?, tol))
}
