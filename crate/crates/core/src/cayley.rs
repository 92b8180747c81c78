//! Spectra of weighted Cayley graphs `X(S_n, w)`.
//!
//! The adjacency matrix of `X(S_n, w)` is the left regular representation
//! evaluated at `w`, so its Laplacian is `|w| I - R(w)`. The regular
//! representation splits into irreps with multiplicity equal to their
//! dimension, which turns the n!-sized eigenproblem into one small
//! eigenproblem per partition: the spectral gap is
//! `min over partitions a != (n) of psi(a, w)` where
//! `psi(a, w) = |w| - lambda_max(T^a(w))`.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::algebra::GroupAlgebraElement;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::perm::{enumerate_group_with_cap, generates_symmetric_group};
use crate::rep::build_orthogonal_rep;
use crate::spectrum::{lambda_max, sym_eigenvalues, Spectrum, SPECTRUM_TOL};
use crate::tableau::dimension;
use crate::{DEFAULT_DENSE_CAP, DEFAULT_ENUM_CAP};

/// `psi(a, w) = |w| - lambda_max(T^a(w))`. Nonnegative for symmetric
/// nonnegative `w` since `lambda_max(T^a(w)) <= |w|`.
pub fn psi(shape: &Partition, w: &GroupAlgebraElement) -> Result<f64> {
    if shape.n() != w.degree() {
        return Err(Error::DegreeMismatch(shape.n(), w.degree()));
    }
    if w.is_zero() {
        return Ok(0.0);
    }
    let rep = build_orthogonal_rep(shape);
    let m = rep.apply(w)?;
    Ok(w.l1_norm() - lambda_max(&m)?)
}

/// One row of the per-partition gap scan.
#[derive(Clone, Debug, Serialize)]
pub struct PartitionRow {
    pub partition: Partition,
    pub lambda_max: f64,
    pub psi: f64,
}

/// Evaluates `lambda_max(T^a(w))` and `psi(a, w)` for every partition of the
/// degree of `w`, in enumeration order (the trivial partition `(n)` first).
pub fn psi_table(w: &GroupAlgebraElement) -> Result<Vec<PartitionRow>> {
    w.require_symmetric()?;
    let norm = w.l1_norm();
    partitions_of(w.degree())
        .into_iter()
        .map(|shape| {
            let lmax = if w.is_zero() {
                0.0
            } else {
                lambda_max(&build_orthogonal_rep(&shape).apply(w)?)?
            };
            Ok(PartitionRow {
                partition: shape,
                lambda_max: lmax,
                psi: norm - lmax,
            })
        })
        .collect()
}

/// Result of the per-irrep gap scan.
#[derive(Clone, Debug)]
pub struct CayleyGap {
    /// `min psi(a, w)` over all partitions `a != (n)`.
    pub gap: f64,
    /// The first partition (in enumeration order) attaining the minimum.
    pub argmin: Partition,
    /// Whether the support of `w` generates `S_n`; `None` when the degree is
    /// too large for the closure check. When `false`, the graph is
    /// disconnected, the reported value still equals the formula's minimum,
    /// and the dense Laplacian would instead give a second zero eigenvalue.
    pub generates: Option<bool>,
    /// Per-partition detail in enumeration order, including `(n)`.
    pub table: Vec<PartitionRow>,
}

/// Spectral gap of `X(S_n, w)` via the irreducible-representation formula.
pub fn cayley_gap_irrep(w: &GroupAlgebraElement) -> Result<CayleyGap> {
    let n = w.degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: n });
    }
    let table = psi_table(w)?;
    let (gap, argmin) = gap_from_table(&table).expect("n >= 2 has a nontrivial partition");

    let generates = if n <= DEFAULT_ENUM_CAP {
        Some(generates_symmetric_group(w.support(), n, DEFAULT_ENUM_CAP)?)
    } else {
        None
    };

    Ok(CayleyGap {
        gap,
        argmin,
        generates,
        table,
    })
}

/// The minimum of `psi` over nontrivial partitions, with the first argmin.
pub fn gap_from_table(table: &[PartitionRow]) -> Option<(f64, Partition)> {
    let mut best: Option<(f64, Partition)> = None;
    for row in table {
        if row.partition.num_rows() > 1 {
            match &best {
                Some((current, _)) if *current <= row.psi => {}
                _ => best = Some((row.psi, row.partition.clone())),
            }
        }
    }
    best
}

/// Dense Laplacian of `X(S_n, w)` on all `n!` group elements, in the order of
/// [`crate::perm::enumerate_group`]: `L = |w| I - R(w)` with
/// `R(w)[g h, h] += w_g`. Subject to the dense cap.
pub fn cayley_laplacian_dense(w: &GroupAlgebraElement) -> Result<DMatrix<f64>> {
    cayley_laplacian_dense_with_cap(w, DEFAULT_DENSE_CAP)
}

/// Same as [`cayley_laplacian_dense`] with an explicit cap override.
pub fn cayley_laplacian_dense_with_cap(
    w: &GroupAlgebraElement,
    cap: usize,
) -> Result<DMatrix<f64>> {
    let n = w.degree();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "dense Laplacian",
            n,
            cap,
        });
    }
    let group = enumerate_group_with_cap(n, cap)?;
    let order = group.len();
    let norm = w.l1_norm();
    let mut m = DMatrix::<f64>::zeros(order, order);
    for i in 0..order {
        m[(i, i)] = norm;
    }
    for (g, weight) in w.terms() {
        for (col, h) in group.iter().enumerate() {
            let row = g.compose(h)?.lex_rank();
            m[(row, col)] -= weight;
        }
    }
    Ok(m)
}

/// Laplacian spectrum of `X(S_n, w)` assembled from the irrep decomposition:
/// for each partition `a`, `dim(a)` copies of the spectrum of
/// `|w| I - T^a(w)`. The result has exactly `n!` values and matches the dense
/// Laplacian spectrum as a multiset.
pub fn full_spectrum_irrep(w: &GroupAlgebraElement) -> Result<Spectrum> {
    w.require_symmetric()?;
    let n = w.degree();
    let norm = w.l1_norm();
    let mut values = Vec::new();
    for shape in partitions_of(n) {
        let rep = build_orthogonal_rep(&shape);
        let block = rep.apply(w)?;
        let eigs = sym_eigenvalues(&block)?;
        let mult = dimension(&shape);
        for &lambda in eigs.values() {
            for _ in 0..mult {
                values.push(norm - lambda);
            }
        }
    }
    Ok(Spectrum::from_values(values, SPECTRUM_TOL))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{GeneratingSet, Permutation};
    use rand::SeedableRng;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn psi_of_trivial_partition_is_zero() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for n in 2..=5 {
            let w = GroupAlgebraElement::random_symmetric(n, 3, &mut rng);
            assert!(psi(&pt(&[n]), &w).unwrap().abs() < 1e-10);
        }
    }

    #[test]
    fn psi_sign_partition_of_s2() {
        let w2 = GroupAlgebraElement::reversal_element(2).unwrap();
        assert!((psi(&pt(&[1, 1]), &w2).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn psi_hook_of_reversals_is_one() {
        for n in 3..=8 {
            let w = GroupAlgebraElement::reversal_element(n).unwrap();
            let value = psi(&Partition::hook_n11(n).unwrap(), &w).unwrap();
            assert!((value - 1.0).abs() < 1e-9, "n={n}: psi = {value}");
        }
    }

    #[test]
    fn psi_bounded_by_l1_norm() {
        let w = GroupAlgebraElement::reversal_element(4).unwrap();
        for shape in partitions_of(4) {
            let rep = build_orthogonal_rep(&shape);
            let lmax = lambda_max(&rep.apply(&w).unwrap()).unwrap();
            assert!(lmax <= w.l1_norm() + 1e-10, "shape {shape}");
        }
    }

    #[test]
    fn gap_of_reversals() {
        for n in 3..=6 {
            let w = GroupAlgebraElement::reversal_element(n).unwrap();
            let result = cayley_gap_irrep(&w).unwrap();
            assert!((result.gap - 1.0).abs() < 1e-7, "n={n}: gap {}", result.gap);
            assert_eq!(result.generates, Some(true));
        }
        let w2 = GroupAlgebraElement::reversal_element(2).unwrap();
        let result = cayley_gap_irrep(&w2).unwrap();
        assert!((result.gap - 2.0).abs() < 1e-12);
        assert_eq!(result.argmin, pt(&[1, 1]));
    }

    #[test]
    fn gap_flags_non_generating_support() {
        let t = Permutation::transposition(1, 2, 4).unwrap();
        let w = GroupAlgebraElement::from_terms(4, [(t, 1.0)]).unwrap();
        let result = cayley_gap_irrep(&w).unwrap();
        assert_eq!(result.generates, Some(false));
        // Disconnected graph: the formula still reports the minimum over
        // nontrivial partitions, which is 0 here.
        assert!(result.gap.abs() < 1e-9);
    }

    #[test]
    fn dense_laplacian_basics() {
        let zero = GroupAlgebraElement::zero(3);
        assert_eq!(
            cayley_laplacian_dense(&zero).unwrap(),
            DMatrix::<f64>::zeros(6, 6)
        );

        let w = GroupAlgebraElement::reversal_element(3).unwrap();
        let lap = cayley_laplacian_dense(&w).unwrap();
        for i in 0..6 {
            assert!(lap.row(i).sum().abs() < 1e-12, "row {i}");
            assert!(lap.column(i).sum().abs() < 1e-12, "column {i}");
        }
        let spec = sym_eigenvalues(&lap).unwrap();
        assert!(spec.min().unwrap() > -1e-8);
        assert!((spec.gap().unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn dense_cap_enforced() {
        let w = GroupAlgebraElement::reversal_element(8).unwrap();
        assert!(matches!(
            cayley_laplacian_dense(&w),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn irrep_spectrum_matches_dense_for_reversals_n4() {
        let w = GroupAlgebraElement::reversal_element(4).unwrap();
        let from_irreps = full_spectrum_irrep(&w).unwrap();
        assert_eq!(from_irreps.len(), 24);
        let dense = sym_eigenvalues(&cayley_laplacian_dense(&w).unwrap()).unwrap();
        assert!(from_irreps.multiset_eq(&dense));
        // Connected graph: 0 is a simple eigenvalue.
        assert_eq!(from_irreps.multiplicity(0.0), 1);
    }

    #[test]
    fn irrep_spectrum_matches_dense_for_random_w() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for n in 2..=5 {
            let w = GroupAlgebraElement::random_symmetric(n, 3, &mut rng);
            let from_irreps = full_spectrum_irrep(&w).unwrap();
            let dense = sym_eigenvalues(&cayley_laplacian_dense(&w).unwrap()).unwrap();
            assert!(from_irreps.multiset_eq(&dense), "n={n}");
        }
    }

    #[test]
    fn gap_matches_dense_oracle_across_families() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(71);
        for n in 3..=5 {
            let mut suite = vec![
                GroupAlgebraElement::indicator(&GeneratingSet::reversals(n).unwrap()),
                GroupAlgebraElement::indicator(&GeneratingSet::adjacent_transpositions(n).unwrap()),
                GroupAlgebraElement::indicator(&GeneratingSet::all_transpositions(n).unwrap()),
                GroupAlgebraElement::indicator(&GeneratingSet::star_transpositions(n).unwrap()),
            ];
            for _ in 0..2 {
                suite.push(GroupAlgebraElement::random_symmetric(n, 3, &mut rng));
            }
            for w in suite {
                let via_irrep = cayley_gap_irrep(&w).unwrap();
                let dense = sym_eigenvalues(&cayley_laplacian_dense(&w).unwrap()).unwrap();
                // For a non-generating support the dense graph is
                // disconnected and its second eigenvalue is 0, which the
                // formula's minimum over irreps reproduces as well.
                assert!(
                    (via_irrep.gap - dense.gap().unwrap()).abs() < 1e-7,
                    "n={n}: irrep {} vs dense {}",
                    via_irrep.gap,
                    dense.gap().unwrap()
                );
            }
        }
    }

    #[test]
    fn psi_nonnegative_randomized() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for n in 2..=6 {
            let w = GroupAlgebraElement::random_symmetric(n, 4, &mut rng);
            for shape in partitions_of(n) {
                let value = psi(&shape, &w).unwrap();
                assert!(value >= -1e-9, "psi({shape}) = {value} at n={n}");
            }
        }
    }
}
