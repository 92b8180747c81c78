//! Standard Young tableaux: the carrier basis for Young's orthogonal form.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A standard Young tableau: the cells of a partition shape filled with
/// `1, ..., n`, strictly increasing along rows and columns.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Self { rows };
        let shape = t.shape()?;
        let n = shape.n();
        let mut seen = vec![false; n];
        for (r, row) in t.rows.iter().enumerate() {
            for (c, &entry) in row.iter().enumerate() {
                if entry < 1 || entry > n || seen[entry - 1] {
                    return Err(Error::InvalidPermutation {
                        images: row.clone(),
                        reason: format!("tableau entry {entry} invalid or repeated"),
                    });
                }
                seen[entry - 1] = true;
                if c + 1 < row.len() && row[c + 1] <= entry {
                    return Err(Error::InvalidPermutation {
                        images: row.clone(),
                        reason: "row not strictly increasing".into(),
                    });
                }
                if r + 1 < t.rows.len() && c < t.rows[r + 1].len() && t.rows[r + 1][c] <= entry {
                    return Err(Error::InvalidPermutation {
                        images: row.clone(),
                        reason: "column not strictly increasing".into(),
                    });
                }
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> Result<Partition> {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// 0-based `(row, column)` of an entry.
    pub fn position_of(&self, entry: usize) -> Option<(usize, usize)> {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&e| e == entry) {
                return Some((r, c));
            }
        }
        None
    }

    /// The content `column - row` of the cell holding `entry`.
    pub fn content_of(&self, entry: usize) -> Option<i64> {
        self.position_of(entry).map(|(r, c)| c as i64 - r as i64)
    }

    /// Axial distance from `i` to `i+1`: `content(i+1) - content(i)`.
    /// It is `1` when they share a row, `-1` when they share a column.
    pub fn axial_distance(&self, i: usize) -> i64 {
        self.content_of(i + 1).expect("entry in range")
            - self.content_of(i).expect("entry in range")
    }

    /// Swaps the entries `i` and `i+1`, returning the result when it is
    /// again standard (i.e. when `i` and `i+1` share neither row nor column).
    pub fn swap_adjacent(&self, i: usize) -> Option<StandardTableau> {
        let (r1, c1) = self.position_of(i)?;
        let (r2, c2) = self.position_of(i + 1)?;
        if r1 == r2 || c1 == c2 {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[r1][c1] = i + 1;
        rows[r2][c2] = i;
        Some(StandardTableau { rows })
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// All standard tableaux of the given shape in last-letter order: tableaux
/// are grouped by the corner cell holding `n`, corners taken in the
/// [`Partition::branch_down`] row order, recursively.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    fn build(parts: &[usize], n: usize) -> Vec<Vec<Vec<usize>>> {
        if n == 0 {
            return vec![vec![]];
        }
        if n == 1 {
            return vec![vec![vec![1]]];
        }
        let mut out = Vec::new();
        for i in 0..parts.len() {
            let next = parts.get(i + 1).copied().unwrap_or(0);
            if parts[i] > next {
                let mut smaller: Vec<usize> = parts.to_vec();
                smaller[i] -= 1;
                if smaller[i] == 0 {
                    smaller.pop();
                }
                for mut rows in build(&smaller, n - 1) {
                    while rows.len() <= i {
                        rows.push(Vec::new());
                    }
                    rows[i].push(n);
                    out.push(rows);
                }
            }
        }
        out
    }
    build(shape.parts(), shape.n())
        .into_iter()
        .map(|rows| StandardTableau { rows })
        .collect()
}

/// The dimension of the irreducible representation indexed by `shape`:
/// the number of standard tableaux.
pub fn dimension(shape: &Partition) -> usize {
    fn count(parts: &[usize], n: usize) -> usize {
        if n <= 1 {
            return 1;
        }
        let mut total = 0;
        for i in 0..parts.len() {
            let next = parts.get(i + 1).copied().unwrap_or(0);
            if parts[i] > next {
                let mut smaller: Vec<usize> = parts.to_vec();
                smaller[i] -= 1;
                if smaller[i] == 0 {
                    smaller.pop();
                }
                total += count(&smaller, n - 1);
            }
        }
        total
    }
    count(shape.parts(), shape.n())
}

/// Dimension via the hook-length formula, `n! / prod(hooks)`. Independent of
/// the tableau recursion; used as a cross-check.
pub fn hook_length_dimension(shape: &Partition) -> u128 {
    let parts = shape.parts();
    let n = shape.n();
    let col_heights: Vec<usize> = (0..parts[0])
        .map(|c| parts.iter().filter(|&&p| p > c).count())
        .collect();
    let mut hooks: Vec<u128> = Vec::with_capacity(n);
    for (r, &len) in parts.iter().enumerate() {
        for (c, &height) in col_heights[..len].iter().enumerate() {
            let arm = len - c - 1;
            let leg = height - r - 1;
            hooks.push((arm + leg + 1) as u128);
        }
    }
    let mut num: u128 = 1;
    for k in 1..=n as u128 {
        num *= k;
    }
    let denom: u128 = hooks.iter().product();
    num / denom
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use itertools::Itertools;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Brute-force oracle: enumerate every row-major filling of the shape by
    /// a permutation of 1..n and keep those with increasing rows and columns.
    fn brute_force_tableaux(shape: &Partition) -> Vec<Vec<Vec<usize>>> {
        let n = shape.n();
        let mut found = Vec::new();
        for filling in (1..=n).permutations(n) {
            let mut rows = Vec::new();
            let mut it = filling.iter().copied();
            for &len in shape.parts() {
                rows.push(it.by_ref().take(len).collect::<Vec<usize>>());
            }
            if StandardTableau::from_rows(rows.clone()).is_ok() {
                found.push(rows);
            }
        }
        found
    }

    #[test]
    fn counts_match_brute_force() {
        for n in 1..=6 {
            for shape in partitions_of(n) {
                let fast = standard_tableaux(&shape);
                let brute = brute_force_tableaux(&shape);
                assert_eq!(fast.len(), brute.len(), "shape {shape}");
                let fast_set: std::collections::BTreeSet<_> =
                    fast.iter().map(|t| t.rows().to_vec()).collect();
                let brute_set: std::collections::BTreeSet<_> = brute.into_iter().collect();
                assert_eq!(fast_set, brute_set, "shape {shape}");
            }
        }
    }

    #[test]
    fn single_row_and_column_have_one_tableau() {
        for n in 1..=8 {
            assert_eq!(standard_tableaux(&pt(&[n])).len(), 1);
            assert_eq!(standard_tableaux(&pt(&vec![1; n])).len(), 1);
        }
        assert_eq!(standard_tableaux(&pt(&[3, 2])).len(), 5);
    }

    #[test]
    fn dimension_examples() {
        for n in 2..=9 {
            assert_eq!(dimension(&pt(&[n])), 1);
            assert_eq!(dimension(&Partition::hook_n11(n).unwrap()), n - 1);
        }
        assert_eq!(dimension(&pt(&[2, 2])), 2);
    }

    #[test]
    fn dimension_matches_enumeration_and_hooks() {
        for n in 1..=8 {
            for shape in partitions_of(n) {
                let d = dimension(&shape);
                assert_eq!(d, standard_tableaux(&shape).len(), "shape {shape}");
                assert_eq!(d as u128, hook_length_dimension(&shape), "shape {shape}");
            }
        }
    }

    #[test]
    fn branching_dimension_identity() {
        for n in 2..=10 {
            for alpha in partitions_of(n) {
                let total: usize = alpha.branch_down().unwrap().iter().map(dimension).sum();
                assert_eq!(dimension(&alpha), total, "shape {alpha}");
            }
        }
    }

    #[test]
    fn burnside_sum_of_squares() {
        for n in 1..=8usize {
            let total: usize = partitions_of(n).iter().map(|a| dimension(a).pow(2)).sum();
            let factorial: usize = (1..=n).product();
            assert_eq!(total, factorial, "n={n}");
        }
    }

    #[test]
    fn axial_distance_signs() {
        // Shape (2,1): tableaux 12/3 and 13/2 in last-letter order.
        let ts = standard_tableaux(&pt(&[2, 1]));
        assert_eq!(ts.len(), 2);
        let t12_3 = &ts[1]; // n=3 sits in row 1 removal first: [1,3]/[2]
        assert_eq!(ts[0].rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(t12_3.rows(), &[vec![1, 2], vec![3]]);
        // 1 and 2 share a row in 12/3 -> axial distance 1.
        assert_eq!(t12_3.axial_distance(1), 1);
        // 1 and 2 share a column in 13/2 -> axial distance -1.
        assert_eq!(ts[0].axial_distance(1), -1);
        assert!(t12_3.swap_adjacent(1).is_none());
        assert_eq!(t12_3.swap_adjacent(2).unwrap(), ts[0]);
    }

    #[test]
    fn rejects_invalid_fillings() {
        assert!(StandardTableau::from_rows(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(StandardTableau::from_rows(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1, 2], vec![2]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1], vec![2, 3]]).is_err());
    }
}
