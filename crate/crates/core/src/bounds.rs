//! Lower bounds on the Cayley spectral gap via the branching rule, the
//! property-(A) check, and the end-to-end unit-gap verifier for initial
//! reversals.
//!
//! The bound: write `w_n = z_1 + z_2 + ... + z_n` with each `z_k` a symmetric
//! nonnegative element over `S_k`. Then with `w_k = z_1 + ... + z_k`,
//!
//! ```text
//! gap X(S_n, w_n) >= min over k = 2..n of psi((k-1,1), w_k)
//! ```
//!
//! which follows from the restriction rule for irreps of `S_n` to `S_{n-1}`
//! together with subadditivity of `lambda_max`. The base case is the exact
//! identity `gap X(S_2, w_2) = 2 * weight((1 2))`.

use serde::Serialize;

use crate::algebra::GroupAlgebraElement;
use crate::cayley::{
    cayley_gap_irrep, cayley_laplacian_dense_with_cap, psi, psi_table, PartitionRow,
};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::rep::defining_rep_matrix;
use crate::spectrum::{lambda_max, sym_eigenvalues};
use crate::{DEFAULT_DENSE_CAP, DEFAULT_IRREP_CAP};

/// Comparison slack for the property-(A) inequality on `lambda_max` values.
pub const PROPERTY_A_TOL: f64 = 1e-9;
/// Tolerance for the gap identities verified by [`verify_unit_gap`].
pub const GAP_TOL: f64 = 1e-7;

/// A splitting `w_n = z_1 + ... + z_n` with `z_k` over `S_k`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pieces: Vec<GroupAlgebraElement>,
}

impl Decomposition {
    /// Validates that piece `k` lives over `S_k` and is symmetric.
    pub fn new(pieces: Vec<GroupAlgebraElement>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::DegreeTooSmall { min: 1, got: 0 });
        }
        for (idx, piece) in pieces.iter().enumerate() {
            if piece.degree() != idx + 1 {
                return Err(Error::DegreeMismatch(piece.degree(), idx + 1));
            }
            piece.require_symmetric()?;
        }
        Ok(Self { pieces })
    }

    pub fn degree(&self) -> usize {
        self.pieces.len()
    }

    /// The piece `z_k`, `k = 1, ..., n`.
    pub fn piece(&self, k: usize) -> &GroupAlgebraElement {
        &self.pieces[k - 1]
    }

    pub fn pieces(&self) -> &[GroupAlgebraElement] {
        &self.pieces
    }

    /// The partial sum `w_k = z_1 + ... + z_k` as an element over `S_k`.
    pub fn partial(&self, k: usize) -> Result<GroupAlgebraElement> {
        let mut acc = GroupAlgebraElement::zero(k);
        for piece in &self.pieces[..k] {
            for (p, weight) in piece.embed(k)?.terms() {
                acc.add_weight(p.clone(), weight)?;
            }
        }
        Ok(acc)
    }

    /// The reconstructed target `w_n = z_1 + ... + z_n`.
    pub fn target(&self) -> Result<GroupAlgebraElement> {
        self.partial(self.degree())
    }
}

/// Splits `w` by largest moved point: `z_k` collects the weight of every
/// support permutation whose largest non-fixed point is exactly `k`, with
/// the identity assigned to `z_1`. Reconstruction is exact and each piece
/// inherits symmetry (a permutation and its inverse move the same points).
pub fn default_decomposition(w: &GroupAlgebraElement) -> Result<Decomposition> {
    w.require_symmetric()?;
    let n = w.degree();
    let mut pieces: Vec<GroupAlgebraElement> = (1..=n).map(GroupAlgebraElement::zero).collect();
    for (p, weight) in w.terms() {
        let k = p.largest_moved_point().unwrap_or(1);
        pieces[k - 1].add_weight(p.restrict(k)?, weight)?;
    }
    Decomposition::new(pieces)
}

/// The individual bound terms `(k, psi((k-1,1), w_k))` for `k = 2, ..., n`.
pub fn branching_terms(d: &Decomposition) -> Result<Vec<(usize, f64)>> {
    let n = d.degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: n });
    }
    (2..=n)
        .map(|k| Ok((k, psi(&Partition::hook_n11(k)?, &d.partial(k)?)?)))
        .collect()
}

/// The branching-rule lower bound: `min over k = 2..n of psi((k-1,1), w_k)`.
pub fn branching_lower_bound(d: &Decomposition) -> Result<f64> {
    Ok(branching_terms(d)?
        .into_iter()
        .map(|(_, v)| v)
        .fold(f64::INFINITY, f64::min))
}

/// One level of the recursive gap inequality.
#[derive(Clone, Debug, Serialize)]
pub struct RecursionLevel {
    pub degree: usize,
    /// `gap X(S_k, w_k)` computed by the irrep formula.
    pub lhs: f64,
    /// `min { gap X(S_{k-1}, w_{k-1}), psi((k-1,1), w_k) }`.
    pub rhs: f64,
}

/// Evaluates both sides of `gap X(S_k, w_k) >= min { gap X(S_{k-1}, w_{k-1}),
/// psi((k-1,1), w_k) }` for every degree `3 <= k <= n` of the decomposition.
pub fn recursion_check(d: &Decomposition) -> Result<Vec<RecursionLevel>> {
    let n = d.degree();
    if n < 3 {
        return Ok(Vec::new());
    }
    let mut gaps = Vec::with_capacity(n - 1);
    for k in 2..=n {
        gaps.push(cayley_gap_irrep(&d.partial(k)?)?.gap);
    }
    let mut out = Vec::new();
    for k in 3..=n {
        let lhs = gaps[k - 2];
        let prev_gap = gaps[k - 3];
        let hook_term = psi(&Partition::hook_n11(k)?, &d.partial(k)?)?;
        out.push(RecursionLevel {
            degree: k,
            lhs,
            rhs: prev_gap.min(hook_term),
        });
    }
    Ok(out)
}

/// The exact degree-2 gap: `gap X(S_2, w_2) = 2 * weight((1 2))`.
pub fn gap_s2(w: &GroupAlgebraElement) -> Result<f64> {
    if w.degree() != 2 {
        return Err(Error::DegreeMismatch(w.degree(), 2));
    }
    Ok(2.0 * w.weight(&Permutation::transposition(1, 2, 2)?))
}

/// Outcome of the property-(A) check.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyA {
    /// Whether `lambda_max(T^a(w)) <= lambda_max(T^{(n-1,1)}(w))` for every
    /// nontrivial partition `a` (with slack [`PROPERTY_A_TOL`]).
    pub holds: bool,
    /// The nontrivial partition maximizing `lambda_max` (first on ties).
    pub worst: Partition,
    pub lambda_max_worst: f64,
    pub lambda_max_hook: f64,
}

/// Checks property (A): among nontrivial partitions, `lambda_max` is
/// maximized at the hook `(n-1, 1)` -- equivalently, the spectral gap is
/// attained there.
pub fn has_property_a(w: &GroupAlgebraElement) -> Result<PropertyA> {
    let n = w.degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: n });
    }
    let table = psi_table(w)?;
    property_a_from_table(&table)
}

fn property_a_from_table(table: &[PartitionRow]) -> Result<PropertyA> {
    let hook = Partition::hook_n11(table[0].partition.n())?;
    let lambda_max_hook = table
        .iter()
        .find(|row| row.partition == hook)
        .map(|row| row.lambda_max)
        .expect("hook partition present for n >= 2");
    let worst_row = table
        .iter()
        .filter(|row| row.partition.num_rows() > 1)
        .fold(None::<&PartitionRow>, |acc, row| match acc {
            Some(best) if best.lambda_max >= row.lambda_max => Some(best),
            _ => Some(row),
        })
        .expect("n >= 2 has a nontrivial partition");
    Ok(PropertyA {
        holds: worst_row.lambda_max <= lambda_max_hook + PROPERTY_A_TOL,
        worst: worst_row.partition.clone(),
        lambda_max_worst: worst_row.lambda_max,
        lambda_max_hook,
    })
}

/// `psi((n-1,1), w)` computed from the defining representation: the defining
/// matrix acts on the all-ones vector with eigenvalue `|w|`, and on its
/// orthogonal complement as the hook irrep. Shifting the all-ones direction
/// out of the way leaves `lambda_max` of the hook block. Costs one `n x n`
/// eigensolve, so it scales far past the irrep cap.
pub fn psi_n11_via_defining(w: &GroupAlgebraElement) -> Result<f64> {
    let n = w.degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: n });
    }
    w.require_symmetric()?;
    if w.is_zero() {
        return Ok(0.0);
    }
    let norm = w.l1_norm();
    let mut m = defining_rep_matrix(w);
    // Rank-one shift: subtracting c/n * J moves the all-ones eigenvalue from
    // |w| to |w| - c and fixes the complement. With c = 2|w| + 1 the shifted
    // eigenvalue drops below -|w|, the floor for the rest of the spectrum.
    let shift = (2.0 * norm + 1.0) / n as f64;
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] -= shift;
        }
    }
    Ok(norm - lambda_max(&m)?)
}

/// Everything the unit-gap verifier measures for one degree.
#[derive(Clone, Debug, Serialize)]
pub struct GapReport {
    pub n: usize,
    /// `min psi` over nontrivial partitions (the spectral gap).
    pub gap_irrep: f64,
    /// Second-smallest eigenvalue of the dense `n! x n!` Laplacian, when the
    /// dense oracle was requested and the degree is within its cap.
    pub gap_dense: Option<f64>,
    /// `psi((n-1,1), w)`.
    pub psi_n11: f64,
    /// The branching-rule lower bound for the default decomposition.
    pub lower_bound: f64,
    pub argmin_partition: Partition,
    pub property_a: bool,
    pub generates: Option<bool>,
    /// Per-partition detail in enumeration order.
    pub table: Vec<PartitionRow>,
}

/// Verifies the unit spectral gap of the initial-reversal Cayley graphs for
/// every degree `3 <= n <= n_max`, returning one report per degree.
/// `use_dense_oracle` additionally cross-checks against the dense Laplacian
/// wherever the degree is within the dense cap.
pub fn verify_unit_gap(n_max: usize, use_dense_oracle: bool) -> Result<Vec<GapReport>> {
    verify_unit_gap_with_caps(
        n_max,
        use_dense_oracle,
        DEFAULT_IRREP_CAP,
        DEFAULT_DENSE_CAP,
    )
}

/// Same as [`verify_unit_gap`] with explicit irrep and dense cap overrides.
pub fn verify_unit_gap_with_caps(
    n_max: usize,
    use_dense_oracle: bool,
    irrep_cap: usize,
    dense_cap: usize,
) -> Result<Vec<GapReport>> {
    if n_max < 3 {
        return Err(Error::DegreeTooSmall { min: 3, got: n_max });
    }
    if n_max > irrep_cap {
        return Err(Error::CapExceeded {
            what: "irrep gap scan",
            n: n_max,
            cap: irrep_cap,
        });
    }
    (3..=n_max)
        .map(|n| {
            gap_report(
                &GroupAlgebraElement::reversal_element(n)?,
                use_dense_oracle,
                dense_cap,
            )
        })
        .collect()
}

/// Assembles a full gap report for an arbitrary symmetric nonnegative `w`.
pub fn gap_report(
    w: &GroupAlgebraElement,
    use_dense_oracle: bool,
    dense_cap: usize,
) -> Result<GapReport> {
    let n = w.degree();
    let scan = cayley_gap_irrep(w)?;
    let property = property_a_from_table(&scan.table)?;
    let hook = Partition::hook_n11(n)?;
    let psi_n11 = scan
        .table
        .iter()
        .find(|row| row.partition == hook)
        .map(|row| row.psi)
        .expect("hook partition present");
    let lower_bound = branching_lower_bound(&default_decomposition(w)?)?;
    let gap_dense = if use_dense_oracle && n <= dense_cap {
        let lap = cayley_laplacian_dense_with_cap(w, dense_cap)?;
        sym_eigenvalues(&lap)?.gap()
    } else {
        None
    };
    Ok(GapReport {
        n,
        gap_irrep: scan.gap,
        gap_dense,
        psi_n11,
        lower_bound,
        argmin_partition: scan.argmin,
        property_a: property.holds,
        generates: scan.generates,
        table: scan.table,
    })
}

/// Plain-text table over a batch of reports: one row per degree.
pub fn render_gap_table(reports: &[GapReport]) -> String {
    let mut out = String::from(
        "  n |  gap(irrep) |   gap(dense) |  psi(n-1,1) |  lower bound | argmin  | property(A) | generates\n",
    );
    for r in reports {
        let dense = r.gap_dense.map_or("-".to_string(), |g| format!("{g:.9}"));
        let generates = r.generates.map_or("-".to_string(), |g| g.to_string());
        out.push_str(&format!(
            "{:>3} | {:>11.9} | {:>12} | {:>11.9} | {:>12.9} | {:<7} | {:<11} | {}\n",
            r.n,
            r.gap_irrep,
            dense,
            r.psi_n11,
            r.lower_bound,
            r.argmin_partition.to_string(),
            r.property_a,
            generates,
        ));
    }
    out
}
