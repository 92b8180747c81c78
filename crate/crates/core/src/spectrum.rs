//! Real symmetric eigenvalue computation and multiset spectrum comparisons.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance used for multiset spectrum comparisons.
pub const SPECTRUM_TOL: f64 = 1e-7;
/// Maximum allowed asymmetry `max |M - M^T|` before an input is rejected.
pub const SYMMETRY_TOL: f64 = 1e-8;
/// Tolerance for the integer-membership check on Schreier spectra.
pub const INTEGRALITY_TOL: f64 = 1e-6;

/// A real spectrum: eigenvalues in ascending order with multiplicity, plus
/// the absolute tolerance used when comparing against other spectra.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tolerance: f64,
}

/// Serialization payload for a spectrum, tagged with the degree and the
/// method that produced the eigenvalues.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectrumExport {
    pub n: usize,
    pub method: String,
    pub eigenvalues: Vec<f64>,
}

impl Spectrum {
    /// Sorts the given eigenvalues ascending; NaN is rejected upstream
    /// (eigensolver output is always finite).
    pub fn from_values(mut values: Vec<f64>, tolerance: f64) -> Self {
        values.sort_by(f64::total_cmp);
        Self { values, tolerance }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn min(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn max(&self) -> Option<f64> {
        self.values.last().copied()
    }

    /// The second-smallest value: the spectral gap when this is a Laplacian
    /// spectrum of a connected graph.
    pub fn gap(&self) -> Option<f64> {
        self.values.get(1).copied()
    }

    /// Multiplicity of `value` within the comparison tolerance.
    pub fn multiplicity(&self, value: f64) -> usize {
        self.values
            .iter()
            .filter(|&&v| (v - value).abs() <= self.tolerance)
            .count()
    }

    /// Multiset equality: same length and, after sorting, elementwise within
    /// tolerance. Greedy matching of sorted sequences is optimal here.
    pub fn multiset_eq(&self, other: &Spectrum) -> bool {
        let tol = self.tolerance.max(other.tolerance);
        self.values.len() == other.values.len()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| (a - b).abs() <= tol)
    }

    /// Set containment: every value of `self` matches some value of `other`
    /// within tolerance (multiplicities are not compared).
    pub fn subset_of(&self, other: &Spectrum) -> bool {
        let tol = self.tolerance.max(other.tolerance);
        self.values.iter().all(|&a| {
            // Values are sorted: find the insertion point and check neighbors.
            let idx = other.values.partition_point(|&b| b < a);
            let lo = idx.checked_sub(1).and_then(|i| other.values.get(i));
            let hi = other.values.get(idx);
            lo.is_some_and(|&b| (a - b).abs() <= tol) || hi.is_some_and(|&b| (a - b).abs() <= tol)
        })
    }

    /// Whether every eigenvalue is within `tol` of an integer.
    pub fn is_integral(&self, tol: f64) -> bool {
        self.values.iter().all(|v| (v - v.round()).abs() <= tol)
    }

    /// The set of nearest integers to the eigenvalues, deduplicated.
    pub fn rounded_set(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.values.iter().map(|v| v.round() as i64).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn export(&self, n: usize, method: &str) -> SpectrumExport {
        SpectrumExport {
            n,
            method: method.to_string(),
            eigenvalues: self.values.clone(),
        }
    }

    /// CSV encoding: one eigenvalue per line under a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("eigenvalue\n");
        for v in &self.values {
            out.push_str(&format!("{v}\n"));
        }
        out
    }
}

/// Full spectrum of a real symmetric matrix, ascending. The input must be
/// symmetric within [`SYMMETRY_TOL`]; it is then symmetrized as
/// `(M + M^T) / 2` before the eigendecomposition.
pub fn sym_eigenvalues(m: &DMatrix<f64>) -> Result<Spectrum> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare(m.nrows(), m.ncols()));
    }
    let asym = (m - m.transpose()).amax();
    if asym > SYMMETRY_TOL {
        return Err(Error::AsymmetricMatrix(asym));
    }
    if m.nrows() == 0 {
        return Ok(Spectrum::from_values(Vec::new(), SPECTRUM_TOL));
    }
    let sym = (m + m.transpose()) * 0.5;
    let values: Vec<f64> = sym.symmetric_eigenvalues().iter().copied().collect();
    Ok(Spectrum::from_values(values, SPECTRUM_TOL))
}

/// Largest eigenvalue of a real symmetric matrix.
pub fn lambda_max(m: &DMatrix<f64>) -> Result<f64> {
    let spectrum = sym_eigenvalues(m)?;
    spectrum.max().ok_or(Error::NotSquare(0, 0))
}

/// Rounds to `sig` significant digits; used when serializing numeric output.
pub fn round_sig(x: f64, sig: u32) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(sig as i32 - 1 - magnitude);
    (x * factor).round() / factor
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::dmatrix;
    use proptest::prelude::*;

    #[test]
    fn identity_and_zero_spectra() {
        let id = DMatrix::<f64>::identity(4, 4);
        let s = sym_eigenvalues(&id).unwrap();
        assert_eq!(s.values(), &[1.0, 1.0, 1.0, 1.0]);

        let zero = DMatrix::<f64>::zeros(3, 3);
        assert_eq!(sym_eigenvalues(&zero).unwrap().values(), &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn reflection_spectrum() {
        let m = dmatrix![0.0, 1.0; 1.0, 0.0];
        let s = sym_eigenvalues(&m).unwrap();
        assert!((s.values()[0] + 1.0).abs() < 1e-12);
        assert!((s.values()[1] - 1.0).abs() < 1e-12);
        assert!((lambda_max(&m).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn asymmetric_input_rejected() {
        let m = dmatrix![0.0, 1.0; 0.0, 0.0];
        assert!(matches!(
            sym_eigenvalues(&m),
            Err(Error::AsymmetricMatrix(_))
        ));
        // Asymmetry below the threshold is symmetrized away.
        let m = dmatrix![0.0, 1.0 + 1e-10; 1.0, 0.0];
        assert!(sym_eigenvalues(&m).is_ok());
    }

    #[test]
    fn multiset_and_subset_semantics() {
        let a = Spectrum::from_values(vec![0.0], SPECTRUM_TOL);
        let b = Spectrum::from_values(vec![3.0, 0.0, 1.0, 1.0], SPECTRUM_TOL);
        assert!(a.subset_of(&b));
        assert!(!b.subset_of(&a));
        assert!(!a.multiset_eq(&b));

        let negative = Spectrum::from_values(vec![-1.0], SPECTRUM_TOL);
        assert!(!negative.subset_of(&b));

        let close = Spectrum::from_values(vec![1.0 + 5e-8, 0.0, 1.0, 3.0], SPECTRUM_TOL);
        assert!(b.multiset_eq(&close));
        assert_eq!(b.multiplicity(1.0), 2);
    }

    #[test]
    fn integrality_checks() {
        let s = Spectrum::from_values(vec![0.0, 1.0 + 2e-7, 2.0 - 1e-8], SPECTRUM_TOL);
        assert!(s.is_integral(INTEGRALITY_TOL));
        assert!(!s.is_integral(1e-8));
        assert_eq!(s.rounded_set(), vec![0, 1, 2]);
    }

    #[test]
    fn rounding_to_significant_digits() {
        assert_eq!(round_sig(0.9999999999997, 12), 1.0);
        assert_eq!(round_sig(1.0, 12), 1.0);
        assert_eq!(round_sig(0.0, 12), 0.0);
        assert_eq!(round_sig(123.4567890123456, 12), 123.456789012);
        assert_eq!(round_sig(-2.5e-9, 2), -2.5e-9);
    }

    #[test]
    fn export_shape() {
        let s = Spectrum::from_values(vec![1.0, 0.0], SPECTRUM_TOL);
        let json = serde_json::to_string(&s.export(3, "dense")).unwrap();
        assert_eq!(json, r#"{"n":3,"method":"dense","eigenvalues":[0.0,1.0]}"#);
        assert_eq!(s.to_csv(), "eigenvalue\n0\n1\n");
    }

    proptest! {
        #[test]
        fn spectrum_is_sorted_and_complete(vals in prop::collection::vec(-10.0f64..10.0, 1..12)) {
            let n = vals.len();
            // Build a symmetric matrix with the given diagonal plus noise.
            let mut m = DMatrix::<f64>::zeros(n, n);
            for (i, v) in vals.iter().enumerate() {
                m[(i, i)] = *v;
                if i + 1 < n {
                    m[(i, i + 1)] = 0.25;
                    m[(i + 1, i)] = 0.25;
                }
            }
            let s = sym_eigenvalues(&m).unwrap();
            prop_assert_eq!(s.len(), n);
            prop_assert!(s.values().windows(2).all(|w| w[0] <= w[1]));
            // Trace is preserved by the eigendecomposition.
            let trace: f64 = vals.iter().sum();
            let eig_sum: f64 = s.values().iter().sum();
            prop_assert!((trace - eig_sum).abs() < 1e-8);
        }

        #[test]
        fn multiset_eq_survives_jitter(vals in prop::collection::vec(-5.0f64..5.0, 1..10)) {
            let a = Spectrum::from_values(vals.clone(), SPECTRUM_TOL);
            let jittered: Vec<f64> = vals.iter().map(|v| v + 4e-8).collect();
            let b = Spectrum::from_values(jittered, SPECTRUM_TOL);
            prop_assert!(a.multiset_eq(&b));
            prop_assert!(a.subset_of(&b));
        }
    }
}
