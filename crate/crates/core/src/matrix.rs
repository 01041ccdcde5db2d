//! Integer degree matrices with the homogeneity and monotone-ordering
//! conventions, Betti tables of codimension-two point schemes, and the
//! conversions between the two.
//!
//! Conventions, fixed once and for all:
//! * a degree matrix has size `t x (t+1)`, `t >= 1`;
//! * entries satisfy `a[i][j] + a[r][s] == a[i][s] + a[r][j]` (homogeneity);
//! * entries decrease from right to left and from top to bottom, so the
//!   bottom-left entry is the minimum and the top-right entry the maximum;
//! * generator and syzygy degrees are stored sorted descending, as multisets
//!   (duplicates kept with multiplicity);
//! * all public accessors use 1-based row/column indices to match the display
//!   convention; internal storage is 0-based.

use crate::error::{Error, Result};
use crate::poly;
use serde::{Deserialize, Serialize};

/// True iff the grid satisfies the 2x2 cross-sum identity everywhere.
///
/// Errors with `Shape` when the grid is not rectangular of size `t x (t+1)`.
pub fn check_homogeneous(entries: &[Vec<i64>]) -> Result<bool> {
    let t = entries.len();
    if t == 0 {
        return Err(Error::Shape("matrix must have at least one row".into()));
    }
    for row in entries {
        if row.len() != t + 1 {
            return Err(Error::Shape(format!(
                "expected {} columns for {} rows, found a row with {}",
                t + 1,
                t,
                row.len()
            )));
        }
    }
    // Homogeneity is equivalent to a[i][j] = a[i][0] + a[0][j] - a[0][0].
    for (i, row) in entries.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v != entries[i][0] + entries[0][j] - entries[0][0] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_monotone(entries: &[Vec<i64>]) -> bool {
    // increasing left to right along rows, decreasing top to bottom
    if entries.iter().any(|row| row.windows(2).any(|w| w[1] < w[0])) {
        return false;
    }
    entries
        .windows(2)
        .all(|rows| rows[0].iter().zip(&rows[1]).all(|(above, below)| below <= above))
}

/// A homogeneous `t x (t+1)` integer matrix in the monotone convention.
///
/// Entries may be zero or negative; positivity constraints live in the
/// validity predicates ([`DegreeMatrix`], [`HomogeneousIntMatrix::is_integral`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct HomogeneousIntMatrix {
    entries: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: Vec<Vec<i64>>,
}

impl TryFrom<MatrixJson> for HomogeneousIntMatrix {
    type Error = Error;
    fn try_from(m: MatrixJson) -> Result<Self> {
        HomogeneousIntMatrix::new(m.rows)
    }
}

impl From<HomogeneousIntMatrix> for MatrixJson {
    fn from(m: HomogeneousIntMatrix) -> Self {
        MatrixJson { rows: m.entries }
    }
}

impl HomogeneousIntMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        if !check_homogeneous(&entries)? {
            return Err(Error::Convention(
                "entries do not satisfy the homogeneity identity".into(),
            ));
        }
        if !check_monotone(&entries) {
            return Err(Error::Convention(
                "entries must increase left to right and decrease top to bottom".into(),
            ));
        }
        Ok(Self { entries })
    }

    /// The unique homogeneous completion of a first row and first column.
    ///
    /// `first_row` has length `t+1`, `first_column` length `t`, and they must
    /// agree on the shared corner entry.
    pub fn complete(first_row: &[i64], first_column: &[i64]) -> Result<Self> {
        if first_row.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::Convention(
                "first row must be nondecreasing left to right".into(),
            ));
        }
        if first_column.windows(2).any(|w| w[1] > w[0]) {
            return Err(Error::Convention(
                "first column must decrease downward".into(),
            ));
        }
        let t = first_column.len();
        if t == 0 || first_row.len() != t + 1 {
            return Err(Error::Shape(format!(
                "first row has length {}, expected {} for a column of length {}",
                first_row.len(),
                t + 1,
                t
            )));
        }
        if first_row[0] != first_column[0] {
            return Err(Error::Precondition(
                "first row and first column disagree on the corner entry".into(),
            ));
        }
        let entries: Vec<Vec<i64>> = first_column
            .iter()
            .map(|&ai1| first_row.iter().map(|&a1j| ai1 + a1j - first_row[0]).collect())
            .collect();
        Self::new(entries)
    }

    /// Row count `t`; the matrix has `t+1` columns.
    pub fn t(&self) -> usize {
        self.entries.len()
    }

    /// Entry `a[i][j]`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Minimum entry, i.e. `a[t][1]`.
    pub fn bottom_left(&self) -> i64 {
        self.entries[self.t() - 1][0]
    }

    /// Sum of the main diagonal `a[1][1] + ... + a[t][t]`.
    pub fn diagonal_sum(&self) -> i64 {
        (1..=self.t()).map(|h| self.entry(h, h)).sum()
    }

    pub fn has_entry(&self, v: i64) -> bool {
        self.entries.iter().flatten().any(|&x| x == v)
    }

    /// Positive diagonal, the degree-matrix criterion.
    pub fn has_positive_diagonal(&self) -> bool {
        (1..=self.t()).all(|h| self.entry(h, h) > 0)
    }

    /// Positive subdiagonal `a[h+1][h] > 0`; vacuously true for `t = 1`.
    /// Exactly the matrices arising from sections of integral aCM curves.
    pub fn is_integral(&self) -> bool {
        (1..self.t()).all(|h| self.entry(h + 1, h) > 0)
    }

    pub fn is_all_ones(&self) -> bool {
        self.entries.iter().flatten().all(|&x| x == 1)
    }

    /// Contiguous submatrix, 1-based inclusive ranges, as a raw block.
    pub fn block(&self, rows: (usize, usize), cols: (usize, usize)) -> Vec<Vec<i64>> {
        (rows.0..=rows.1)
            .map(|i| (cols.0..=cols.1).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Submatrix keeping the listed 1-based columns, over a 1-based row range.
    pub fn select(&self, rows: (usize, usize), cols: &[usize]) -> Vec<Vec<i64>> {
        (rows.0..=rows.1)
            .map(|i| cols.iter().map(|&j| self.entry(i, j)).collect())
            .collect()
    }

    /// Delete one row and one column (1-based), keeping the rest.
    pub fn delete_row_col(&self, row: usize, col: usize) -> Vec<Vec<i64>> {
        let mut out = Vec::with_capacity(self.t() - 1);
        for i in 1..=self.t() {
            if i == row {
                continue;
            }
            let mut r = Vec::with_capacity(self.t());
            for j in 1..=self.t() + 1 {
                if j == col {
                    continue;
                }
                r.push(self.entry(i, j));
            }
            out.push(r);
        }
        out
    }

    /// All maximal axis-aligned rectangles of entries equal to `v`.
    ///
    /// Homogeneity plus monotonicity make the level set `{a[i][j] = v}` a
    /// staircase of such rectangles: split rows and columns into maximal runs
    /// with equal row/column offsets and pair them up.
    pub fn find_blocks(&self, v: i64) -> Vec<Block> {
        let t = self.t();
        // a[i][j] = r_i + c_j with r_i = a[i][1], c_j = a[1][j] - a[1][1]
        let r: Vec<i64> = (1..=t).map(|i| self.entry(i, 1)).collect();
        let c: Vec<i64> = (1..=t + 1).map(|j| self.entry(1, j) - self.entry(1, 1)).collect();
        let runs = |vals: &[i64]| -> Vec<(usize, usize, i64)> {
            let mut out = Vec::new();
            let mut start = 0usize;
            for k in 1..=vals.len() {
                if k == vals.len() || vals[k] != vals[start] {
                    out.push((start + 1, k, vals[start]));
                    start = k;
                }
            }
            out
        };
        let mut blocks = Vec::new();
        for &(i1, i2, rv) in &runs(&r) {
            for &(j1, j2, cv) in &runs(&c) {
                if rv + cv == v {
                    blocks.push(Block {
                        rows: (i1, i2),
                        cols: (j1, j2),
                        value: v,
                    });
                }
            }
        }
        blocks
    }
}

/// A maximal rectangle of equal entries; 1-based inclusive ranges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub rows: (usize, usize),
    pub cols: (usize, usize),
    pub value: i64,
}

impl Block {
    pub fn height(&self) -> usize {
        self.rows.1 - self.rows.0 + 1
    }
    pub fn width(&self) -> usize {
        self.cols.1 - self.cols.0 + 1
    }
}

/// A homogeneous matrix with positive diagonal: the degree matrix of some
/// standard determinantal scheme.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct DegreeMatrix(HomogeneousIntMatrix);

impl TryFrom<MatrixJson> for DegreeMatrix {
    type Error = Error;
    fn try_from(m: MatrixJson) -> Result<Self> {
        DegreeMatrix::new(HomogeneousIntMatrix::new(m.rows)?)
    }
}

impl From<DegreeMatrix> for MatrixJson {
    fn from(m: DegreeMatrix) -> Self {
        MatrixJson {
            rows: m.0.entries,
        }
    }
}

impl DegreeMatrix {
    pub fn new(base: HomogeneousIntMatrix) -> Result<Self> {
        if !base.has_positive_diagonal() {
            return Err(Error::Precondition(
                "a degree matrix needs a positive diagonal".into(),
            ));
        }
        Ok(Self(base))
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(HomogeneousIntMatrix::new(rows)?)
    }

    /// Size-one degree matrix `(p, q)` of a complete-intersection section,
    /// with `0 < p <= q`.
    pub fn ci(p: i64, q: i64) -> Result<Self> {
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        Self::from_rows(vec![vec![p, q]])
    }

    pub fn base(&self) -> &HomogeneousIntMatrix {
        &self.0
    }

    /// The Betti table of the associated plane point scheme.
    ///
    /// With `S` the diagonal sum: syzygies `m_i = S + a[i][t+1]`, generators
    /// `d_j = S - a[j][j] + a[j][t+1]` for `j <= t` and `d_{t+1} = S`.
    pub fn betti(&self) -> BettiTable {
        let m = &self.0;
        let t = m.t();
        let s = m.diagonal_sum();
        let syz: Vec<i64> = (1..=t).map(|i| s + m.entry(i, t + 1)).collect();
        let mut gens: Vec<i64> = (1..=t)
            .map(|j| s - m.entry(j, j) + m.entry(j, t + 1))
            .collect();
        gens.push(s);
        BettiTable::new(gens, syz, 2).expect("a degree matrix always yields a valid table")
    }

    /// Append the degenerate row `(0, 2, ...)` below, shifting the matrix one
    /// column to the right and completing by homogeneity. Requires
    /// `a[t][1] >= 3`; the associated h-vector is unchanged.
    pub fn pad_with_degenerate_row(&self) -> Result<DegreeMatrix> {
        let m = &self.0;
        let t = m.t();
        if m.bottom_left() < 3 {
            return Err(Error::Precondition(format!(
                "padding needs a[t][1] >= 3, found {}",
                m.bottom_left()
            )));
        }
        // b[i][j] = a[i][j-1] for i <= t, j >= 2; b[t+1][1] = 0, b[t+1][2] = 2.
        let mut rows = Vec::with_capacity(t + 1);
        for i in 1..=t {
            let mut row = Vec::with_capacity(t + 2);
            row.push(m.entry(i, 1) - 2);
            for j in 1..=t + 1 {
                row.push(m.entry(i, j));
            }
            rows.push(row);
        }
        let mut last = Vec::with_capacity(t + 2);
        last.push(0);
        for j in 1..=t + 1 {
            last.push(2 + m.entry(1, j) - m.entry(1, 1));
        }
        rows.push(last);
        DegreeMatrix::from_rows(rows)
    }

    pub fn t(&self) -> usize {
        self.0.t()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.0.entry(i, j)
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        self.0.rows()
    }
}

/// Sort a raw homogeneous grid into the monotone convention: rows by
/// descending row offset, columns by ascending column offset.
pub fn canonicalize_homogeneous(entries: &[Vec<i64>]) -> Result<HomogeneousIntMatrix> {
    if !check_homogeneous(entries)? {
        return Err(Error::Convention(
            "entries do not satisfy the homogeneity identity".into(),
        ));
    }
    let mut rows: Vec<i64> = entries.iter().map(|r| r[0]).collect();
    let mut cols: Vec<i64> = entries[0].iter().map(|&v| v - entries[0][0]).collect();
    rows.sort_unstable_by(|a, b| b.cmp(a));
    cols.sort_unstable();
    HomogeneousIntMatrix::new(
        rows.iter()
            .map(|&r| cols.iter().map(|&c| r + c).collect())
            .collect(),
    )
}

/// Reverse both axes and swap them: entry `(i, j)` of the output is entry
/// `(k+1-j, l+1-i)` of a `k x l` input block.
pub fn transpose_antidiagonal(block: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let k = block.len();
    if k == 0 {
        return Vec::new();
    }
    let l = block[0].len();
    (0..l)
        .map(|i| (0..k).map(|j| block[k - 1 - j][l - 1 - i]).collect())
        .collect()
}

/// Graded Betti data of a zero-dimensional scheme: generator degrees `gens`
/// (sorted descending), top syzygy degrees `syz` (sorted descending), and the
/// dimension `ambient` of the projective space containing the points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BettiJson", into = "BettiJson")]
pub struct BettiTable {
    gens: Vec<i64>,
    syz: Vec<i64>,
    ambient: u32,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    gens: Vec<i64>,
    syz: Vec<i64>,
    ambient: u32,
}

impl TryFrom<BettiJson> for BettiTable {
    type Error = Error;
    fn try_from(b: BettiJson) -> Result<Self> {
        BettiTable::new(b.gens, b.syz, b.ambient)
    }
}

impl From<BettiTable> for BettiJson {
    fn from(b: BettiTable) -> Self {
        BettiJson {
            gens: b.gens,
            syz: b.syz,
            ambient: b.ambient,
        }
    }
}

impl BettiTable {
    pub fn new(mut gens: Vec<i64>, mut syz: Vec<i64>, ambient: u32) -> Result<Self> {
        if gens.is_empty() || syz.is_empty() {
            return Err(Error::InvalidInput(
                "a point-scheme table needs generators and syzygies".into(),
            ));
        }
        if gens.iter().chain(&syz).any(|&v| v < 1) {
            return Err(Error::InvalidInput(
                "generator and syzygy degrees of a point scheme are positive".into(),
            ));
        }
        if ambient < 2 {
            return Err(Error::InvalidInput("ambient dimension must be >= 2".into()));
        }
        if ambient == 2 && gens.len() != syz.len() + 1 {
            return Err(Error::Shape(format!(
                "Hilbert-Burch shape needs {} generators for {} syzygies, found {}",
                syz.len() + 1,
                syz.len(),
                gens.len()
            )));
        }
        gens.sort_unstable_by(|a, b| b.cmp(a));
        syz.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { gens, syz, ambient })
    }

    pub fn plane(gens: Vec<i64>, syz: Vec<i64>) -> Result<Self> {
        Self::new(gens, syz, 2)
    }

    pub fn gens(&self) -> &[i64] {
        &self.gens
    }

    pub fn syz(&self) -> &[i64] {
        &self.syz
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    /// Initial degree of the ideal: the smallest generator degree.
    pub fn alpha(&self) -> i64 {
        *self.gens.last().unwrap()
    }

    pub fn max_gen_degree(&self) -> i64 {
        self.gens[0]
    }

    pub fn max_syz(&self) -> i64 {
        self.syz[0]
    }

    pub fn min_syz(&self) -> i64 {
        *self.syz.last().unwrap()
    }

    /// Numerator `1 - sum z^{d_j} + sum z^{m_i}` of the Hilbert series.
    pub fn numerator(&self) -> Vec<i64> {
        let mut n = vec![1i64];
        for &d in &self.gens {
            debug_assert!(d >= 0, "generator degrees are nonnegative in valid tables");
            poly::add_term(&mut n, d as usize, -1);
        }
        for &m in &self.syz {
            poly::add_term(&mut n, m as usize, 1);
        }
        poly::normalize(n)
    }

    /// The raw grid `m_i - d_j`; the lifting matrix of the scheme. For
    /// `ambient = 2` this grid is the degree matrix.
    pub fn lifting_grid(&self) -> Vec<Vec<i64>> {
        self.syz
            .iter()
            .map(|&m| self.gens.iter().map(|&d| m - d).collect())
            .collect()
    }

    /// Degrees of the socle of `H^1` of the ideal sheaf: `{m_i - n - 1}`.
    pub fn socle_degrees(&self) -> Vec<i64> {
        let n = self.ambient as i64;
        self.syz.iter().map(|&m| m - n - 1).collect()
    }
}

/// The matrix `(m_i - d_j)` of a plane (ambient 2) table, as a degree matrix
/// candidate. The result is always homogeneous and monotone; positivity of
/// the diagonal is not checked here.
pub fn degree_matrix_from_betti(b: &BettiTable) -> Result<HomogeneousIntMatrix> {
    if b.ambient() != 2 {
        return Err(Error::Shape(
            "the degree matrix is the lifting grid of a plane table; use lifting_grid for ambient > 2"
                .into(),
        ));
    }
    HomogeneousIntMatrix::new(b.lifting_grid())
}

/// Degree matrix of `d >= 1` generic points in the plane.
///
/// With `n = max { i : i(i+1)/2 <= d }` and `s = d - n(n+1)/2` the matrix has
/// `n - s` rows: `s` rows of 2's over `n - 2s` rows of 1's when `2s <= n`, and
/// `s` rows `(1 x(2s-n), 2 x(n+1-s))` when `2s >= n`; both readings agree at
/// `2s = n`.
pub fn generic_points_matrix(d: i64) -> Result<DegreeMatrix> {
    if d < 1 {
        return Err(Error::Precondition("need at least one point".into()));
    }
    let mut n = 1i64;
    while (n + 1) * (n + 2) / 2 <= d {
        n += 1;
    }
    let s = d - n * (n + 1) / 2;
    debug_assert!((0..=n).contains(&s));
    let rows: Vec<Vec<i64>> = if 2 * s <= n {
        let width = (n + 1 - s) as usize;
        let mut rows = Vec::new();
        for _ in 0..s {
            rows.push(vec![2; width]);
        }
        for _ in 0..(n - 2 * s) {
            rows.push(vec![1; width]);
        }
        rows
    } else {
        let mut row = vec![1; (2 * s - n) as usize];
        row.extend(vec![2; (n + 1 - s) as usize]);
        (0..s).map(|_| row.clone()).collect()
    };
    DegreeMatrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> HomogeneousIntMatrix {
        HomogeneousIntMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn dm(rows: &[&[i64]]) -> DegreeMatrix {
        DegreeMatrix::new(m(rows)).unwrap()
    }

    #[test]
    fn homogeneity_check() {
        assert!(check_homogeneous(&[vec![1, 1, 1], vec![1, 1, 1]]).unwrap());
        assert!(check_homogeneous(&[vec![3, 4, 5], vec![1, 2, 3]]).unwrap());
        assert!(!check_homogeneous(&[vec![1, 2, 3], vec![1, 1, 1]]).unwrap());
        assert!(matches!(
            check_homogeneous(&[vec![1, 2], vec![1, 2]]),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn completion_is_the_unique_homogeneous_extension() {
        let c = HomogeneousIntMatrix::complete(&[1, 1, 1], &[1, 1]).unwrap();
        assert_eq!(c.rows(), &[vec![1, 1, 1], vec![1, 1, 1]]);
        let c = HomogeneousIntMatrix::complete(&[3, 4, 5], &[3, 1]).unwrap();
        assert_eq!(c.rows(), &[vec![3, 4, 5], vec![1, 2, 3]]);
        assert!(matches!(
            HomogeneousIntMatrix::complete(&[1, 2], &[1, 3]),
            Err(Error::Convention(_))
        ));
    }

    #[test]
    fn degree_matrix_needs_positive_diagonal() {
        assert!(DegreeMatrix::new(m(&[&[1, 1, 1], &[1, 1, 1]])).is_ok());
        assert!(DegreeMatrix::new(m(&[&[3, 4, 5], &[1, 2, 3]])).is_ok());
        assert!(DegreeMatrix::new(m(&[&[1, 1, 2], &[0, 0, 1]])).is_err());
    }

    #[test]
    fn integrality_is_the_positive_subdiagonal() {
        assert!(dm(&[&[1, 3, 3], &[1, 3, 3]]).base().is_integral());
        assert!(dm(&[&[2, 3]]).base().is_integral());
        assert!(!m(&[&[3, 3, 4], &[0, 0, 1]]).is_integral());
    }

    #[test]
    fn betti_from_degree_matrix_fixtures() {
        let b = dm(&[&[1, 1, 1], &[1, 1, 1]]).betti();
        assert_eq!((b.gens(), b.syz()), (&[2, 2, 2][..], &[3, 3][..]));
        let b = dm(&[&[1, 1, 2], &[1, 1, 2]]).betti();
        assert_eq!((b.gens(), b.syz()), (&[3, 3, 2][..], &[4, 4][..]));
        let b = dm(&[&[3, 4, 5], &[1, 2, 3]]).betti();
        assert_eq!((b.gens(), b.syz()), (&[7, 6, 5][..], &[10, 8][..]));
    }

    #[test]
    fn degree_matrix_from_betti_fixtures() {
        let b = BettiTable::plane(vec![2, 1], vec![3]).unwrap();
        assert_eq!(degree_matrix_from_betti(&b).unwrap().rows(), &[vec![1, 2]]);
        let b = BettiTable::plane(vec![3, 3, 2], vec![4, 4]).unwrap();
        assert_eq!(
            degree_matrix_from_betti(&b).unwrap().rows(),
            &[vec![1, 1, 2], vec![1, 1, 2]]
        );
        let b = BettiTable::plane(vec![7, 6, 5], vec![10, 8]).unwrap();
        assert_eq!(
            degree_matrix_from_betti(&b).unwrap().rows(),
            &[vec![3, 4, 5], vec![1, 2, 3]]
        );
    }

    #[test]
    fn betti_roundtrip_on_samples() {
        for rows in [
            vec![vec![1, 1, 1], vec![1, 1, 1]],
            vec![vec![3, 4, 5], vec![1, 2, 3]],
            vec![vec![2, 3]],
            vec![vec![1, 2, 2], vec![1, 2, 2]],
        ] {
            let d = DegreeMatrix::from_rows(rows.clone()).unwrap();
            let back = degree_matrix_from_betti(&d.betti()).unwrap();
            assert_eq!(back.rows(), &rows[..]);
        }
    }

    #[test]
    fn antidiagonal_transpose() {
        let block = vec![vec![10, 20], vec![30, 40]];
        assert_eq!(transpose_antidiagonal(&block), vec![vec![40, 20], vec![30, 10]]);
        let two_cols = vec![vec![3, 4], vec![1, 2]];
        assert_eq!(transpose_antidiagonal(&two_cols), vec![vec![2, 4], vec![1, 3]]);
        let row = vec![vec![1, 2, 3]];
        assert_eq!(transpose_antidiagonal(&row), vec![vec![3], vec![2], vec![1]]);
        // involution
        assert_eq!(transpose_antidiagonal(&transpose_antidiagonal(&block)), block);
    }

    #[test]
    fn padding_fixtures() {
        let p = dm(&[&[3, 4]]).pad_with_degenerate_row().unwrap();
        assert_eq!(p.rows(), &[vec![1, 3, 4], vec![0, 2, 3]]);
        let p = dm(&[&[4, 4]]).pad_with_degenerate_row().unwrap();
        assert_eq!(p.rows(), &[vec![2, 4, 4], vec![0, 2, 2]]);
        assert!(matches!(
            dm(&[&[1, 1, 1], &[1, 1, 1]]).pad_with_degenerate_row(),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn block_scan() {
        let blocks = m(&[&[1, 2, 2], &[1, 2, 2]]).find_blocks(2);
        assert_eq!(
            blocks,
            vec![Block { rows: (1, 2), cols: (2, 3), value: 2 }]
        );
        assert!(m(&[&[1, 1, 1], &[1, 1, 1]]).find_blocks(2).is_empty());
        let blocks = m(&[&[2, 3, 3], &[1, 2, 2]]).find_blocks(2);
        assert_eq!(
            blocks,
            vec![
                Block { rows: (1, 1), cols: (1, 1), value: 2 },
                Block { rows: (2, 2), cols: (2, 3), value: 2 },
            ]
        );
    }

    #[test]
    fn numerator_vanishes_at_one() {
        let b = dm(&[&[3, 4, 5], &[1, 2, 3]]).betti();
        assert_eq!(poly::eval_at_one(&b.numerator()), 0);
    }

    #[test]
    fn generic_points_matrices() {
        // d = 3: all-ones 2x3
        assert_eq!(
            generic_points_matrix(3).unwrap().rows(),
            &[vec![1, 1, 1], vec![1, 1, 1]]
        );
        // d = 4: CI(2,2), both display forms coincide
        assert_eq!(generic_points_matrix(4).unwrap().rows(), &[vec![2, 2]]);
        // d = 5: one row of 2's over ... n=2, s=2: rows (1 x2, 2 x1)? n=2,s=2: 2s-n=2, n+1-s=1
        assert_eq!(
            generic_points_matrix(5).unwrap().rows(),
            &[vec![1, 1, 2], vec![1, 1, 2]]
        );
    }
}
