//! Exhaustive enumeration of homogeneous matrices in the monotone convention
//! with bounded entries, for oracle self-checks and acceptance sweeps.
//!
//! A homogeneous matrix is determined by its first row and first column, so
//! the enumeration walks nondecreasing first rows and nonincreasing first
//! columns; monotonicity then bounds every entry between the bottom-left and
//! top-right corners.

use crate::matrix::{DegreeMatrix, HomogeneousIntMatrix};

fn nondecreasing_rows(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn rec(out: &mut Vec<Vec<i64>>, current: &mut Vec<i64>, len: usize, lo: i64, hi: i64) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        let start = *current.last().unwrap_or(&lo);
        for v in start..=hi {
            current.push(v);
            rec(out, current, len, lo, hi);
            current.pop();
        }
    }
    rec(&mut out, &mut current, len, lo, hi);
    out
}

/// All homogeneous `t x (t+1)` matrices with every entry in `[lo, hi]`.
pub fn homogeneous_matrices(t: usize, lo: i64, hi: i64) -> Vec<HomogeneousIntMatrix> {
    let mut out = Vec::new();
    for first_row in nondecreasing_rows(t + 1, lo, hi) {
        // first column: a[1][1] fixed, entries nonincreasing, each >= lo
        let mut col = vec![first_row[0]];
        fn rec(
            out: &mut Vec<HomogeneousIntMatrix>,
            first_row: &[i64],
            col: &mut Vec<i64>,
            t: usize,
            lo: i64,
        ) {
            if col.len() == t {
                if let Ok(m) = HomogeneousIntMatrix::complete(first_row, col) {
                    out.push(m);
                }
                return;
            }
            let top = *col.last().unwrap();
            for v in lo..=top {
                col.push(v);
                rec(out, first_row, col, t, lo);
                col.pop();
            }
        }
        rec(&mut out, &first_row, &mut col, t, lo);
    }
    out
}

/// All degree matrices (positive diagonal) of size `t x (t+1)` with entries
/// in `[lo, hi]`.
pub fn degree_matrices(t: usize, lo: i64, hi: i64) -> Vec<DegreeMatrix> {
    homogeneous_matrices(t, lo, hi)
        .into_iter()
        .filter_map(|m| DegreeMatrix::new(m).ok())
        .collect()
}

/// All homogeneous grids (no ordering convention) of size `t x (t+1)` with
/// entries in `[lo, hi]`: an arbitrary first row and first column determine
/// the rest.
pub fn homogeneous_grids(t: usize, lo: i64, hi: i64) -> Vec<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    let mut row = vec![lo; t + 1];
    let mut col_offsets = vec![0i64; t - 1];
    fn build(row: &[i64], offsets: &[i64], lo: i64, hi: i64, out: &mut Vec<Vec<Vec<i64>>>) {
        let mut grid = vec![row.to_vec()];
        for &off in offsets {
            if row.iter().any(|&v| v + off < lo || v + off > hi) {
                return;
            }
            grid.push(row.iter().map(|&v| v + off).collect());
        }
        out.push(grid);
    }
    fn rec_row(
        row: &mut Vec<i64>,
        pos: usize,
        offsets: &mut Vec<i64>,
        lo: i64,
        hi: i64,
        out: &mut Vec<Vec<Vec<i64>>>,
    ) {
        if pos == row.len() {
            rec_offsets(row, offsets, 0, lo, hi, out);
            return;
        }
        for v in lo..=hi {
            row[pos] = v;
            rec_row(row, pos + 1, offsets, lo, hi, out);
        }
    }
    fn rec_offsets(
        row: &[i64],
        offsets: &mut Vec<i64>,
        pos: usize,
        lo: i64,
        hi: i64,
        out: &mut Vec<Vec<Vec<i64>>>,
    ) {
        if pos == offsets.len() {
            build(row, offsets, lo, hi, out);
            return;
        }
        for off in (lo - hi)..=(hi - lo) {
            offsets[pos] = off;
            rec_offsets(row, offsets, pos + 1, lo, hi, out);
        }
    }
    rec_row(&mut row, 0, &mut col_offsets, lo, hi, &mut out);
    out
}
