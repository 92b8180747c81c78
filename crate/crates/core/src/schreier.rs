//! Schreier coset graphs for the Young subgroup `S_(n-2,2)`.
//!
//! The subgroup permutes `{1, ..., n-2}` and `{n-1, n}` separately, so the
//! left coset `gH` is determined by the unordered pair `{g(n-1), g(n)}` --
//! the vertices are the 2-element subsets of `{1, ..., n}` and left
//! multiplication by a generator `z` sends `{i, j}` to `{z(i), z(j)}`. This
//! avoids any n!-sized coset enumeration.

use nalgebra::DMatrix;

use crate::algebra::GroupAlgebraElement;
use crate::error::{Error, Result};
use crate::perm::{GeneratingSet, Permutation};
use crate::spectrum::{sym_eigenvalues, Spectrum};

/// The Schreier graph of `S_n / S_(n-2,2)` for a weighted symmetric
/// generating set, stored as one vertex permutation per generator.
#[derive(Clone, Debug)]
pub struct SchreierGraph {
    n: usize,
    /// 2-subsets `{i, j}` with `i < j`, in lexicographic order.
    vertices: Vec<(usize, usize)>,
    /// `actions[g][v]` is the vertex index of `z_g . v`.
    actions: Vec<Vec<usize>>,
    /// Edge weight contributed by each generator.
    weights: Vec<f64>,
}

/// Builds the `(n-2, 2)` coset graph for a generating set; needs `n >= 3`.
pub fn schreier_graph_n22(z: &GeneratingSet) -> Result<SchreierGraph> {
    build(z.degree(), z.iter().map(|p| (p, 1.0)))
}

/// Weighted variant: one edge orbit per support permutation of a symmetric
/// nonnegative element, carrying its weight.
pub fn schreier_graph_n22_weighted(w: &GroupAlgebraElement) -> Result<SchreierGraph> {
    w.require_symmetric()?;
    build(w.degree(), w.terms())
}

fn build<'a>(
    n: usize,
    generators: impl Iterator<Item = (&'a Permutation, f64)>,
) -> Result<SchreierGraph> {
    if n < 3 {
        return Err(Error::DegreeTooSmall { min: 3, got: n });
    }
    let mut vertices = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..=n {
        for j in i + 1..=n {
            vertices.push((i, j));
        }
    }
    let index = |i: usize, j: usize| -> usize {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        // Lexicographic rank of the pair (a, b), 1-based points.
        (a - 1) * n - (a - 1) * a / 2 + (b - a - 1)
    };
    let mut actions = Vec::new();
    let mut weights = Vec::new();
    for (gen, weight) in generators {
        let action: Vec<usize> = vertices
            .iter()
            .map(|&(i, j)| index(gen.apply(i), gen.apply(j)))
            .collect();
        actions.push(action);
        weights.push(weight);
    }
    Ok(SchreierGraph {
        n,
        vertices,
        actions,
        weights,
    })
}

impl SchreierGraph {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[(usize, usize)] {
        &self.vertices
    }

    /// The vertex maps, one bijection per generator.
    pub fn actions(&self) -> &[Vec<usize>] {
        &self.actions
    }

    /// Total generator weight; the graph is regular of this degree
    /// (counting loops).
    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Weighted adjacency matrix: entry `(z . v, v) += weight(z)`.
    pub fn adjacency(&self) -> DMatrix<f64> {
        let m = self.vertex_count();
        let mut a = DMatrix::<f64>::zeros(m, m);
        for (action, &weight) in self.actions.iter().zip(&self.weights) {
            for (v, &image) in action.iter().enumerate() {
                a[(image, v)] += weight;
            }
        }
        a
    }

    /// The Laplacian `|Z| I - A`.
    pub fn laplacian(&self) -> DMatrix<f64> {
        let m = self.vertex_count();
        let total = self.total_weight();
        let mut lap = self.adjacency() * -1.0;
        for v in 0..m {
            lap[(v, v)] += total;
        }
        lap
    }

    /// Edge list as CSV, one line per (generator, vertex) pair, with
    /// 2-subset vertex labels `"i,j"`.
    pub fn edge_list_csv(&self) -> String {
        let mut out = String::from("src,dst,weight\n");
        for (action, &weight) in self.actions.iter().zip(&self.weights) {
            for (v, &image) in action.iter().enumerate() {
                let (i, j) = self.vertices[v];
                let (k, l) = self.vertices[image];
                out.push_str(&format!("\"{i},{j}\",\"{k},{l}\",{weight}\n"));
            }
        }
        out
    }
}

/// Laplacian spectrum of the Schreier graph, ascending.
pub fn schreier_spectrum(graph: &SchreierGraph) -> Result<Spectrum> {
    sym_eigenvalues(&graph.laplacian())
}
