//! Bounds on the deficiency module of an arithmetically Buchsbaum curve in
//! terms of the Betti data of its general hyperplane section, and the
//! minimal-curve family that attains them.

use crate::error::{Error, Result};
use crate::matrix::{BettiTable, Block, DegreeMatrix};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Bounds on the initial degree `alpha` and final degree `alpha^+` of the
/// deficiency module: `alpha >= max(m_t - n - 1, alpha(I_X) - 1)` and
/// `alpha^+ <= m_1 - n - 1`.
pub fn deficiency_bounds(b: &BettiTable) -> (i64, i64) {
    let n = b.ambient() as i64;
    let lower = (b.min_syz() - n - 1).max(b.alpha() - 1);
    let upper = b.max_syz() - n - 1;
    (lower, upper)
}

/// One block of 2's with its contribution to the dimension bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockBound {
    pub block: Block,
    /// Degree `d_j - 1` where the module can be nonzero.
    pub degree: i64,
    /// Rows equal to the block's rows, i.e. block height.
    pub lambda: usize,
    /// Columns equal to the block's columns, i.e. block width.
    pub mu: usize,
    pub bound: usize,
}

/// Per-degree and total dimension bounds for a plane section.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficiencyBounds {
    pub alpha_lower: i64,
    pub alpha_plus_upper: i64,
    /// Upper bound per degree, supported exactly on `{d_j - 1 : j in J}`.
    pub per_degree: BTreeMap<i64, usize>,
    pub delta: usize,
    pub blocks: Vec<BlockBound>,
}

/// Per-degree bounds for curves whose plane section has degree matrix `m`.
///
/// Each block of 2's contributes one entry: the columns of a block share the
/// generator degree `d_j`, the bound there is `min(lambda, mu)` with `lambda`
/// the number of rows equal to the block's rows and `mu` the number of equal
/// columns. By homogeneity these counts are the block height and width.
pub fn per_degree_dim_bounds(m: &DegreeMatrix) -> DeficiencyBounds {
    let table = m.betti();
    let (alpha_lower, alpha_plus_upper) = deficiency_bounds(&table);
    let t = m.t();
    let mut blocks = Vec::new();
    let mut per_degree = BTreeMap::new();
    for block in m.base().find_blocks(2) {
        let j = block.cols.0;
        let k = block.rows.0;
        // full-row / full-column equality, as literally stated
        let lambda = (1..=t)
            .filter(|&i| (1..=t + 1).all(|c| m.entry(i, c) == m.entry(k, c)))
            .count();
        let mu = (1..=t + 1)
            .filter(|&c| (1..=t).all(|i| m.entry(i, c) == m.entry(i, j)))
            .count();
        debug_assert_eq!(lambda, block.height(), "row equality must equal block height");
        debug_assert_eq!(mu, block.width(), "column equality must equal block width");
        // d_j - 1 with d_j = m_k - 2 read off the block position
        let sigma = m.base().diagonal_sum();
        let d_j = sigma + m.entry(k, t + 1) - 2;
        let bound = lambda.min(mu);
        blocks.push(BlockBound { block, degree: d_j - 1, lambda, mu, bound });
        per_degree.insert(d_j - 1, bound);
    }
    let delta = blocks.iter().map(|b| b.bound).sum();
    DeficiencyBounds { alpha_lower, alpha_plus_upper, per_degree, delta, blocks }
}

/// Total dimension bound: sum over blocks of 2's of `min(height, width)`.
/// Zero exactly when no entry equals 2.
pub fn delta(m: &DegreeMatrix) -> usize {
    per_degree_dim_bounds(m).delta
}

/// Shifts of the minimal free resolution of a curve ideal, as
/// (shift, multiplicity) pairs per module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalCurveFamily {
    /// Resolution shifts of the curve ideal: last, middle, first module.
    pub curve_shifts: [(i64, i64); 3],
    pub section: BettiTable,
    pub matrix: DegreeMatrix,
}

/// The `n`-th minimal curve: deficiency module `k^n` concentrated in degree
/// `2n - 2`, built from two skew lines by iterated liaison addition.
pub fn minimal_curve_family(n: i64) -> Result<MinimalCurveFamily> {
    if n < 1 {
        return Err(Error::Precondition("the family is indexed by n >= 1".into()));
    }
    let mut gens = vec![2 * n];
    gens.extend(vec![2 * n - 1; n as usize]);
    let syz = vec![2 * n + 1; n as usize];
    let section = BettiTable::plane(gens, syz)?;
    let mut row = vec![1i64];
    row.extend(vec![2; n as usize]);
    let matrix = DegreeMatrix::from_rows(vec![row; n as usize])?;
    Ok(MinimalCurveFamily {
        curve_shifts: [(2 * n + 2, n), (2 * n + 1, 4 * n), (2 * n, 3 * n + 1)],
        section,
        matrix,
    })
}
