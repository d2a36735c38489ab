//! Gaussian elimination over `F_q` on matrices of canonical indices.

use super::FieldSpec;

/// Reduced row echelon form with its pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowEchelon {
    pub rows: Vec<Vec<u32>>,
    pub pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn row_reduce(field: &FieldSpec, matrix: &[Vec<u32>]) -> RowEchelon {
    let mut rows: Vec<Vec<u32>> = matrix.to_vec();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv_idx(rows[r][c]).expect("pivot is nonzero");
        for v in rows[r].iter_mut() {
            *v = field.mul_idx(*v, inv);
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c] == 0 {
                continue;
            }
            let factor = rows[i][c];
            let pivot = rows[r].clone();
            for (x, &y) in rows[i].iter_mut().zip(&pivot) {
                *x = field.sub_idx(*x, field.mul_idx(factor, y));
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    RowEchelon { rows, pivots }
}

pub fn rank(field: &FieldSpec, matrix: &[Vec<u32>]) -> usize {
    row_reduce(field, matrix).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_over_f2_and_f3() {
        let f2 = FieldSpec::prime(2).unwrap();
        let m = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        assert_eq!(rank(&f2, &m), 2);
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(rank(&f3, &m), 3);
        let e = row_reduce(&f3, &m);
        assert_eq!(e.rows, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    }
}
