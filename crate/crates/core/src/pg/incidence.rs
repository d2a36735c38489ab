use heap::permutations;

use super::ProjectiveSpace;
use crate::error::{Error, Result};

/// Exhaustive canonical forms are computed up to this many rows.
pub const MAX_CANONICAL_SIZE: usize = 9;

/// Rows are lines, columns are points.
pub fn incidence_matrix(space: &ProjectiveSpace) -> Result<Vec<Vec<u32>>> {
    if space.delta() != 2 {
        return Err(Error::NotAPlane);
    }
    let n = space.point_count();
    Ok(space
        .lines()
        .iter()
        .map(|line| {
            let mut row = vec![0u32; n];
            for &p in line {
                row[p] = 1;
            }
            row
        })
        .collect())
}

/// Lexicographically smallest matrix obtained by permuting rows and
/// then sorting the columns; equal for two matrices exactly when they
/// differ by row and column permutations.
pub fn canonical_form(matrix: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
    let rows = matrix.len();
    if rows > MAX_CANONICAL_SIZE {
        return Err(Error::MatrixTooLarge {
            n: rows,
            max: MAX_CANONICAL_SIZE,
        });
    }
    let cols = matrix.first().map_or(0, Vec::len);
    let mut best: Option<Vec<Vec<u32>>> = None;
    permutations(rows, |order| {
        let mut columns: Vec<Vec<u32>> = (0..cols)
            .map(|c| order.iter().map(|&r| matrix[r][c]).collect())
            .collect();
        columns.sort_unstable();
        let candidate: Vec<Vec<u32>> = (0..rows)
            .map(|r| columns.iter().map(|col| col[r]).collect())
            .collect();
        if best.as_ref().map_or(true, |b| candidate < *b) {
            best = Some(candidate);
        }
    });
    Ok(best.unwrap_or_default())
}

pub fn permutation_equivalent(a: &[Vec<u32>], b: &[Vec<u32>]) -> Result<bool> {
    if a.len() != b.len() || a.first().map(Vec::len) != b.first().map(Vec::len) {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

pub fn sum_of_two_squares(n: u64) -> bool {
    (0..)
        .map(|a: u64| a * a)
        .take_while(|&a2| a2 <= n)
        .any(|a2| {
            let rest = n - a2;
            let b = (rest as f64).sqrt().round() as u64;
            (b.saturating_sub(1)..=b + 1).any(|c| c * c == rest)
        })
}

/// Orders ruled out for projective planes: `q ≡ 1, 2 (mod 4)` and `q`
/// not a sum of two squares.
pub fn bruck_ryser_excluded(q: u64) -> bool {
    q >= 2 && matches!(q % 4, 1 | 2) && !sum_of_two_squares(q)
}

/// Largest arc in `PG(2, q)`: `q + 1` for odd `q`, `q + 2` for even `q`.
pub fn plane_max_arc(q: u64) -> u64 {
    if q % 2 == 0 {
        q + 2
    } else {
        q + 1
    }
}

/// Number of points of `PG(r-1, q)`.
pub fn max2(r: u32, q: u64) -> u64 {
    (0..r).map(|i| q.pow(i)).sum()
}

/// `2^{r-1}`, the largest cap in `PG(r-1, 2)`.
pub fn max3_binary(r: u32) -> u64 {
    1 << (r - 1)
}

/// Same values as [`plane_max_arc`].
pub fn max3_plane(q: u64) -> u64 {
    plane_max_arc(q)
}

/// `q² + 1`, the ovoid size in `PG(3, q)`.
pub fn max3_solid(q: u64) -> u64 {
    q * q + 1
}

mod heap {
    /// Heap's algorithm over `0..n`.
    pub fn permutations<F: FnMut(&[usize])>(n: usize, mut visit: F) {
        let mut order: Vec<usize> = (0..n).collect();
        let mut counters = vec![0usize; n];
        visit(&order);
        let mut i = 0;
        while i < n {
            if counters[i] < i {
                if i % 2 == 0 {
                    order.swap(0, i);
                } else {
                    order.swap(counters[i], i);
                }
                visit(&order);
                counters[i] += 1;
                i = 0;
            } else {
                counters[i] = 0;
                i += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::plane_axioms_check;
    use crate::gf::FieldSpec;
    use crate::pg::build_pg;

    #[test]
    fn heap_visits_every_permutation_once() {
        let mut seen = std::collections::BTreeSet::new();
        permutations(5, |p| {
            assert!(seen.insert(p.to_vec()));
        });
        assert_eq!(seen.len(), 120);
    }

    #[test]
    fn incidence_matrices_are_planes() {
        for (q, sum) in [(2u64, 3usize), (3, 4), (4, 5)] {
            let space = build_pg(2, &FieldSpec::with_order(q).unwrap()).unwrap();
            let m = incidence_matrix(&space).unwrap();
            assert!(m.iter().all(|r| r.iter().sum::<u32>() as usize == sum));
            let report = plane_axioms_check(&m);
            assert!(report.pass);
            assert_eq!(report.order, Some(q as usize));
        }
        let solid = build_pg(3, &FieldSpec::prime(2).unwrap()).unwrap();
        assert_eq!(incidence_matrix(&solid).unwrap_err(), Error::NotAPlane);
    }

    #[test]
    fn canonical_form_detects_relabelling() {
        let a = vec![vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]];
        let b = vec![vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, 1]];
        assert!(permutation_equivalent(&a, &b).unwrap());
        let c = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        assert!(!permutation_equivalent(&a, &c).unwrap());
        let big = vec![vec![0u32; 10]; 10];
        assert_eq!(
            canonical_form(&big).unwrap_err(),
            Error::MatrixTooLarge { n: 10, max: 9 }
        );
    }

    #[test]
    fn bruck_ryser_examples() {
        assert!(bruck_ryser_excluded(6));
        assert!(!bruck_ryser_excluded(10));
        assert!(!bruck_ryser_excluded(4));
    }

    #[test]
    fn formulas() {
        assert_eq!(plane_max_arc(2), 4);
        assert_eq!(plane_max_arc(3), 4);
        assert_eq!(max2(3, 2), 7);
        assert_eq!(max2(4, 3), 40);
        assert_eq!(max3_binary(4), 8);
        assert_eq!(max3_solid(2), 5);
    }
}
