//! Irreducible representations of `S_n` in Young's orthogonal form, plus the
//! `n`-dimensional defining representation.
//!
//! The orthogonal form realizes the irrep indexed by a partition on the basis
//! of its standard tableaux: the adjacent transposition `s_i = (i, i+1)` acts
//! on the basis vector of a tableau `t` with diagonal coefficient `1/rho` and,
//! when swapping `i` and `i+1` in `t` yields another standard tableau,
//! off-diagonal coefficient `sqrt(1 - 1/rho^2)` coupling the two; `rho` is the
//! axial distance (content difference) from `i` to `i+1` in `t`. All generator
//! matrices come out real, symmetric and orthogonal, so evaluating at a
//! symmetric group-algebra element produces a real symmetric matrix.

use std::collections::HashMap;

use nalgebra::DMatrix;

use crate::algebra::GroupAlgebraElement;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::tableau::{standard_tableaux, StandardTableau};

/// A concrete irreducible representation: one generator matrix per adjacent
/// transposition, on the standard-tableau basis in last-letter order.
#[derive(Clone, Debug)]
pub struct OrthogonalRep {
    shape: Partition,
    basis: Vec<StandardTableau>,
    /// `generators[i - 1]` is the matrix of `s_i`, `i = 1, ..., n-1`.
    generators: Vec<DMatrix<f64>>,
}

/// Builds the orthogonal-form representation for a partition shape.
pub fn build_orthogonal_rep(shape: &Partition) -> OrthogonalRep {
    let n = shape.n();
    let basis = standard_tableaux(shape);
    let dim = basis.len();
    let index: HashMap<&StandardTableau, usize> =
        basis.iter().enumerate().map(|(i, t)| (t, i)).collect();

    let mut generators = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut m = DMatrix::<f64>::zeros(dim, dim);
        for (a, t) in basis.iter().enumerate() {
            let rho = t.axial_distance(i) as f64;
            m[(a, a)] = 1.0 / rho;
            if let Some(swapped) = t.swap_adjacent(i) {
                let b = index[&swapped];
                if b > a {
                    let off = (1.0 - 1.0 / (rho * rho)).sqrt();
                    m[(a, b)] = off;
                    m[(b, a)] = off;
                }
            }
        }
        generators.push(m);
    }
    OrthogonalRep {
        shape: shape.clone(),
        basis,
        generators,
    }
}

impl OrthogonalRep {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn degree(&self) -> usize {
        self.shape.n()
    }

    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    /// The matrix of the adjacent transposition `s_i`, 1-based.
    pub fn generator(&self, i: usize) -> &DMatrix<f64> {
        &self.generators[i - 1]
    }

    /// The representing matrix of an arbitrary permutation: the product of
    /// generator matrices along an adjacent-transposition word for `p`.
    /// The value is independent of the word since the generator matrices
    /// satisfy the Coxeter relations.
    pub fn matrix(&self, p: &Permutation) -> Result<DMatrix<f64>> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch(p.degree(), self.degree()));
        }
        let dim = self.dimension();
        let mut acc = DMatrix::<f64>::identity(dim, dim);
        for j in p.adjacent_factorization() {
            acc *= &self.generators[j - 1];
        }
        Ok(acc)
    }

    /// Evaluates the representation at a symmetric nonnegative group-algebra
    /// element: `T(w) = sum_g w_g T(g)`. Rejects asymmetric input, which
    /// would break the symmetric-eigenvalue contract downstream.
    pub fn apply(&self, w: &GroupAlgebraElement) -> Result<DMatrix<f64>> {
        if w.degree() != self.degree() {
            return Err(Error::DegreeMismatch(w.degree(), self.degree()));
        }
        w.require_symmetric()?;
        let dim = self.dimension();
        let mut acc = DMatrix::<f64>::zeros(dim, dim);
        for (p, weight) in w.terms() {
            acc += self.matrix(p)? * weight;
        }
        Ok(acc)
    }
}

/// The defining representation evaluated at `w`: the `n x n` matrix with
/// entry `(i, j) = sum of w_g over g with g(j) = i`. Row and column sums all
/// equal the l1 norm of `w`. As a representation it splits into the trivial
/// one-dimensional piece (the all-ones vector) plus the irrep at `(n-1, 1)`.
pub fn defining_rep_matrix(w: &GroupAlgebraElement) -> DMatrix<f64> {
    let n = w.degree();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for (p, weight) in w.terms() {
        for j in 1..=n {
            m[(p.apply(j) - 1, j - 1)] += weight;
        }
    }
    m
}

/// CSV encoding of a square matrix: a `dim` header line, then row-major rows.
pub fn matrix_to_csv(m: &DMatrix<f64>) -> String {
    let mut out = format!("dim,{}\n", m.nrows());
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|j| format!("{}", m[(i, j)])).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
