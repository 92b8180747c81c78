//! Batch verification: every headline identity run as a named pass/fail
//! check, suitable for the CLI `verify` command and the acceptance suite.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::GroupAlgebraElement;
use crate::bounds::{
    branching_lower_bound, default_decomposition, gap_s2, psi_n11_via_defining, recursion_check,
    verify_unit_gap_with_caps, GapReport, GAP_TOL,
};
use crate::cayley::{cayley_gap_irrep, cayley_laplacian_dense_with_cap, full_spectrum_irrep};
use crate::error::Result;
use crate::perm::GeneratingSet;
use crate::rep::defining_rep_matrix;
use crate::schreier::{schreier_graph_n22, schreier_spectrum};
use crate::spectrum::{sym_eigenvalues, INTEGRALITY_TOL};
use crate::{DEFAULT_DENSE_CAP, DEFAULT_IRREP_CAP};

/// One named check with its outcome.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Result of a [`verify_all`] run.
#[derive(Clone, Debug, Serialize)]
pub struct Verification {
    pub n_max: usize,
    pub checks: Vec<CheckOutcome>,
    pub reports: Vec<GapReport>,
}

impl Verification {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

fn check(checks: &mut Vec<CheckOutcome>, name: String, passed: bool, detail: String) {
    checks.push(CheckOutcome {
        name,
        passed,
        detail,
    });
}

/// Runs the full battery of checks up to degree `n_max`:
///
/// - the degree-2 base case `gap = 2`,
/// - unit gap, hook psi, lower bound and property (A) for reversals at
///   `3 <= n <= n_max`, with the dense oracle cross-check up to degree 5,
/// - irrep-vs-dense full-spectrum equivalence over four generating families
///   up to degree `min(n_max, 5)`,
/// - the recursive gap inequality for the reversal decomposition,
/// - Schreier spectrum integrality, unit gap and (for `n >= 8`) the exact
///   value set `{0, ..., n}`, for `3 <= n <= max(n_max, 12)`,
/// - Schreier-spectrum-subset-of-Cayley-spectrum up to degree `min(n_max, 6)`,
/// - the defining-representation route for `psi((n-1,1))` up to degree 12.
///
/// Dense work is deliberately bounded at degree 5 so a default run finishes
/// in seconds; the caps only gate what is allowed, not what is exercised.
pub fn verify_all(n_max: usize) -> Result<Verification> {
    verify_all_with_caps(n_max, DEFAULT_IRREP_CAP, DEFAULT_DENSE_CAP)
}

/// [`verify_all`] with explicit cap overrides for the irrep scan and the
/// dense oracle.
pub fn verify_all_with_caps(
    n_max: usize,
    irrep_cap: usize,
    dense_cap: usize,
) -> Result<Verification> {
    let mut checks = Vec::new();

    // Degree-2 base case, two routes.
    let w2 = GroupAlgebraElement::reversal_element(2)?;
    let base_direct = gap_s2(&w2)?;
    let base_scan = cayley_gap_irrep(&w2)?.gap;
    check(
        &mut checks,
        "base-case-n2".into(),
        (base_direct - 2.0).abs() < GAP_TOL && (base_scan - 2.0).abs() < GAP_TOL,
        format!("gap_s2 = {base_direct}, irrep scan = {base_scan}, expected 2"),
    );

    // Unit gap for reversals, degree by degree.
    let dense_check_cap = dense_cap.min(5);
    let mut reports = Vec::new();
    if n_max >= 3 {
        reports = verify_unit_gap_with_caps(n_max, true, irrep_cap, dense_check_cap)?;
        for r in &reports {
            let mut ok = (r.gap_irrep - 1.0).abs() < GAP_TOL
                && (r.psi_n11 - 1.0).abs() < GAP_TOL
                && (r.lower_bound - 1.0).abs() < GAP_TOL
                && r.property_a
                && r.generates != Some(false)
                && r.gap_irrep <= 1.0 + GAP_TOL;
            let mut detail = format!(
                "gap = {}, psi(n-1,1) = {}, bound = {}, property(A) = {}",
                r.gap_irrep, r.psi_n11, r.lower_bound, r.property_a
            );
            if let Some(dense) = r.gap_dense {
                ok &= (dense - r.gap_irrep).abs() < GAP_TOL;
                detail.push_str(&format!(", dense = {dense}"));
            }
            check(&mut checks, format!("unit-gap-n{}", r.n), ok, detail);
        }
    }

    // Full-spectrum equivalence (irrep assembly vs dense Laplacian) across
    // generating families, reproducible random support included.
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    for n in 2..=n_max.min(5).min(dense_cap) {
        let families: Vec<(&str, GroupAlgebraElement)> = vec![
            ("reversals", GroupAlgebraElement::reversal_element(n)?),
            (
                "adjacent-transpositions",
                GroupAlgebraElement::indicator(&GeneratingSet::adjacent_transpositions(n)?),
            ),
            (
                "all-transpositions",
                GroupAlgebraElement::indicator(&GeneratingSet::all_transpositions(n)?),
            ),
            (
                "random",
                GroupAlgebraElement::random_symmetric(n, 3, &mut rng),
            ),
        ];
        let mut ok = true;
        let mut detail = String::new();
        for (name, w) in &families {
            let assembled = full_spectrum_irrep(w)?;
            let dense = sym_eigenvalues(&cayley_laplacian_dense_with_cap(w, dense_cap)?)?;
            let agree = assembled.multiset_eq(&dense);
            ok &= agree;
            if !detail.is_empty() {
                detail.push_str(", ");
            }
            detail.push_str(&format!(
                "{name}: {}",
                if agree { "match" } else { "MISMATCH" }
            ));
        }
        check(&mut checks, format!("oracle-equivalence-n{n}"), ok, detail);
    }

    // Recursive inequality for the reversal decomposition.
    if n_max >= 3 {
        let d = default_decomposition(&GroupAlgebraElement::reversal_element(n_max.min(6))?)?;
        let levels = recursion_check(&d)?;
        let ok = levels.iter().all(|l| l.lhs >= l.rhs - GAP_TOL);
        let detail = levels
            .iter()
            .map(|l| format!("n={}: {} >= {}", l.degree, l.lhs, l.rhs))
            .collect::<Vec<_>>()
            .join("; ");
        check(&mut checks, "recursion-reversals".into(), ok, detail);

        let bound = branching_lower_bound(&d)?;
        check(
            &mut checks,
            "lower-bound-reversals".into(),
            (bound - 1.0).abs() < GAP_TOL,
            format!("branching lower bound = {bound}, expected 1"),
        );
    }

    // Schreier coset graphs: integral spectrum in [0, n], unit gap, and the
    // full value set from degree 8 on.
    for n in 3..=n_max.max(12) {
        let z = GeneratingSet::reversals(n)?;
        let spec = schreier_spectrum(&schreier_graph_n22(&z)?)?;
        let integral = spec.is_integral(INTEGRALITY_TOL);
        let in_range = spec.min().unwrap_or(0.0) > -INTEGRALITY_TOL
            && spec.max().unwrap_or(0.0) < n as f64 + INTEGRALITY_TOL;
        let unit_gap = (spec.gap().unwrap_or(f64::NAN) - 1.0).abs() < INTEGRALITY_TOL;
        let complete = n < 8 || spec.rounded_set() == (0..=n as i64).collect::<Vec<_>>();
        check(
            &mut checks,
            format!("schreier-spectrum-n{n}"),
            integral && in_range && unit_gap && complete,
            format!(
                "integral = {integral}, in [0,{n}] = {in_range}, gap = {}, values = {:?}",
                spec.gap().unwrap_or(f64::NAN),
                spec.rounded_set()
            ),
        );
    }

    // Schreier spectrum is contained in the Cayley spectrum.
    for n in 3..=n_max.min(6) {
        let z = GeneratingSet::reversals(n)?;
        let sch = schreier_spectrum(&schreier_graph_n22(&z)?)?;
        let cay = full_spectrum_irrep(&GroupAlgebraElement::indicator(&z))?;
        check(
            &mut checks,
            format!("schreier-subset-n{n}"),
            sch.subset_of(&cay),
            format!(
                "{} coset eigenvalues against {} Cayley eigenvalues",
                sch.len(),
                cay.len()
            ),
        );
    }

    // Defining-representation route: cheap n x n check far past the irrep cap.
    for n in 3..=n_max.max(12) {
        let w = GroupAlgebraElement::reversal_element(n)?;
        let value = psi_n11_via_defining(&w)?;
        let spec = sym_eigenvalues(&defining_rep_matrix(&w))?;
        let vals = spec.values();
        let top = vals[vals.len() - 1];
        let second = vals[vals.len() - 2];
        let third = vals[vals.len() - 3];
        let simple = (top - n as f64).abs() < 1e-8
            && (second - (n as f64 - 1.0)).abs() < 1e-8
            && (second - third) > 1e-6;
        check(
            &mut checks,
            format!("defining-psi-n{n}"),
            (value - 1.0).abs() < 1e-8 && simple,
            format!("psi = {value}, top eigenvalues = [{third}, {second}, {top}]"),
        );
    }

    Ok(Verification {
        n_max,
        checks,
        reports,
    })
}
