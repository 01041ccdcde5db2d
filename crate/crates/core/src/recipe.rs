//! Constructive side: given a target degree matrix, emit an explicit curve
//! recipe (a base curve plus a sequence of links, basic double links, unions
//! and liaison additions) realizing it as a plane section, with predicted
//! deficiency data, and verify recipes by replaying them through the
//! transform engine.

use crate::buchsbaum::{delta, per_degree_dim_bounds};
use crate::classify::{classify_plane_section, TriState};
use crate::error::{Error, Result};
use crate::matrix::{
    degree_matrix_from_betti, transpose_antidiagonal, BettiTable, DegreeMatrix,
};
use crate::transforms::{
    replay, table_degree, BdlSpec, CiLinkSpec, LiaisonAddSpec, Step,
};
use serde::{Deserialize, Serialize};

/// Starting curve of a recipe. Each base has a known plane-section table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Base {
    /// Two disjoint lines; section is two points.
    TwoSkewLines,
    /// Smooth rational curve of degree `2a` on a smooth quadric; section is a
    /// `CI(2, a)`.
    RationalOnQuadric { a: i64 },
    /// General smooth rational curve of degree `d >= 4`; section is `d`
    /// generic points.
    GenericRationalCurve { degree: i64 },
    /// `lines >= 2` lines on a smooth quadric (one ruling for even counts,
    /// alternating rulings for odd ones); section is `lines` points on a
    /// conic.
    SkewLinesOnQuadric { lines: i64 },
    /// Union of `CI(first)` and `CI(second)`, generic through a common point
    /// or disjoint; `d_f` is the degree of the minimal generator of the
    /// second section used in the gluing computation.
    UnionOfTwoCi {
        first: (i64, i64),
        second: (i64, i64),
        d_f: i64,
        through_common_point: bool,
    },
    /// Union of `CI(a11, a12+a23)` and `CI(a22, a23)` meeting along the
    /// complement of one point of a `CI(a11, a22, a23)`; the low-degree
    /// variant of the 2x3 union with the same section table.
    LinkedPointComplement { matrix: DegreeMatrix },
    /// A reduced connected aCM curve with the given section degree matrix
    /// (cone over the section); used as a building block for unions.
    AcmCurve { matrix: DegreeMatrix },
}

fn ci_table(p: i64, q: i64) -> Result<BettiTable> {
    Ok(DegreeMatrix::ci(p, q)?.betti())
}

impl Base {
    /// Betti table of the general plane section of the base curve.
    pub fn section(&self) -> Result<BettiTable> {
        match self {
            Base::TwoSkewLines => BettiTable::plane(vec![2, 1], vec![3]),
            Base::RationalOnQuadric { a } => {
                if *a < 2 {
                    return Err(Error::InvalidInput(
                        "quadric rational curves need degree >= 4, i.e. a >= 2".into(),
                    ));
                }
                ci_table(2, *a)
            }
            Base::GenericRationalCurve { degree } => {
                if *degree < 4 {
                    return Err(Error::InvalidInput(
                        "rational curves of degree < 4 are aCM".into(),
                    ));
                }
                Ok(crate::matrix::generic_points_matrix(*degree)?.betti())
            }
            Base::SkewLinesOnQuadric { lines } => {
                let n = *lines;
                if n < 2 {
                    return Err(Error::InvalidInput("need at least two lines".into()));
                }
                if n % 2 == 0 {
                    ci_table(2, n / 2)
                } else {
                    let a = (n + 1) / 2;
                    BettiTable::plane(vec![a, a, 2], vec![a + 1, a + 1])
                }
            }
            Base::UnionOfTwoCi { first, second, d_f, .. } => crate::transforms::union_two_acm(
                &ci_table(first.0, first.1)?,
                &ci_table(second.0, second.1)?,
                *d_f,
            ),
            Base::LinkedPointComplement { matrix } => {
                if matrix.t() != 2 {
                    return Err(Error::InvalidInput(
                        "the point-complement construction is a 2x3 base".into(),
                    ));
                }
                Ok(matrix.betti())
            }
            Base::AcmCurve { matrix } => Ok(matrix.betti()),
        }
    }

    /// CI components of the base curve, when it is a union of complete
    /// intersections.
    pub fn components(&self) -> Option<Vec<(i64, i64)>> {
        match self {
            Base::TwoSkewLines => Some(vec![(1, 1), (1, 1)]),
            Base::SkewLinesOnQuadric { lines } => Some(vec![(1, 1); *lines as usize]),
            Base::UnionOfTwoCi { first, second, .. } => Some(vec![*first, *second]),
            Base::LinkedPointComplement { matrix } => Some(vec![
                (matrix.entry(2, 2), matrix.entry(2, 3)),
                (matrix.entry(1, 1), matrix.entry(1, 2) + matrix.entry(2, 3)),
            ]),
            _ => None,
        }
    }

    /// Largest degree of a minimal generator of the base curve ideal, when
    /// the construction pins one down.
    pub fn max_gen_degree(&self) -> Option<i64> {
        match self {
            Base::TwoSkewLines => Some(2),
            Base::RationalOnQuadric { a } => Some(if a % 2 == 0 { a + 1 } else { a + 2 }),
            Base::SkewLinesOnQuadric { lines } => Some(((lines + 1) / 2).max(2)),
            Base::UnionOfTwoCi { first, second, .. } => {
                Some(first.1.max(second.1) + first.1.min(second.1))
            }
            Base::LinkedPointComplement { matrix } => {
                Some(matrix.entry(1, 2) + matrix.entry(2, 3) + 1)
            }
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Goal {
    NonAcm,
    Buchsbaum,
    IntegralSmooth,
    MaxDeficiency,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Union,
    BdlChain,
    Nice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveProperties {
    pub reduced: bool,
    pub connected: bool,
    pub smooth: bool,
    pub integral: bool,
    pub buchsbaum: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeficiencyPrediction {
    pub alpha: Option<i64>,
    pub alpha_plus_upper: Option<i64>,
    pub dim: Option<i64>,
    pub presentation: String,
}

/// A constructive witness: base curve, transform steps, and predictions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveRecipe {
    pub goal: Goal,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mode: Option<Mode>,
    pub base: Base,
    pub steps: Vec<Step>,
    pub predicted_section: BettiTable,
    pub predicted_deficiency: DeficiencyPrediction,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_gen_degree: Option<i64>,
    pub properties: CurveProperties,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub components: Option<Vec<(i64, i64)>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pivot: Option<(usize, usize)>,
    pub notes: Vec<String>,
}

impl CurveRecipe {
    /// Replay the steps from the base section.
    pub fn replay(&self) -> Result<BettiTable> {
        replay(&self.base.section()?, &self.steps)
    }

    /// Scheme degree accounted through the transform identities.
    pub fn accounted_degree(&self) -> Result<i64> {
        let mut deg = table_degree(&self.base.section()?);
        for step in &self.steps {
            deg = step.transformed_degree(deg);
        }
        Ok(deg)
    }
}

/// Union pivots: rows `r` with `a[r][r-1] <= 2`.
pub fn union_pivots(m: &DegreeMatrix) -> Vec<usize> {
    (2..=m.t()).filter(|&r| m.entry(r, r - 1) <= 2).collect()
}

/// Chain pivots `(k, l)`: `a[k][l] <= 2` with positive entries above and to
/// the right, `l <= k-1`.
pub fn chain_pivots(m: &DegreeMatrix) -> Vec<(usize, usize)> {
    let t = m.t();
    let mut out = Vec::new();
    for k in 2..=t {
        for l in 1..k {
            if m.entry(k, l) <= 2 && m.entry(k - 1, l) > 0 && m.entry(k, l + 1) > 0 {
                out.push((k, l));
            }
        }
    }
    out
}

fn require_non_acm_target(m: &DegreeMatrix) -> Result<()> {
    if m.base().bottom_left() >= 3 {
        return Err(Error::NotRealizable(
            "every entry is at least 3: the section forces an aCM curve".into(),
        ));
    }
    if m.t() == 2 && m.base().is_all_ones() {
        return Err(Error::NotRealizable(
            "three generic points: a connected reduced cubic curve is aCM".into(),
        ));
    }
    Ok(())
}

/// Sum of entries along the skew path from `(i1, j1)` to `(i2, j2)` stepping
/// one row down and one column right at a time. Requires `i2-i1 == j2-j1`.
fn skew_sum(m: &DegreeMatrix, i1: usize, j1: usize, i2: usize, j2: usize) -> i64 {
    debug_assert_eq!(i2 - i1, j2 - j1);
    (0..=(i2 - i1)).map(|p| m.entry(i1 + p, j1 + p)).sum()
}

/// The 2x3 union base for the chain construction, rooted at pivot `(k, l)`:
/// the submatrix rows `(k-1, k)`, columns `(l, l+2)`.
fn chain_base(m: &DegreeMatrix, k: usize, l: usize, nice: bool) -> Result<(Base, DegreeMatrix)> {
    let sub = DegreeMatrix::from_rows(m.base().block((k - 1, k), (l, l + 2)))?;
    let all_ones = sub.base().is_all_ones();
    let base = if nice && !all_ones {
        Base::LinkedPointComplement { matrix: sub.clone() }
    } else {
        Base::UnionOfTwoCi {
            first: (sub.entry(2, 2), sub.entry(2, 3)),
            second: (sub.entry(1, 1), sub.entry(1, 2) + sub.entry(2, 3)),
            d_f: sub.entry(1, 1),
            through_common_point: !all_ones,
        }
    };
    Ok((base, sub))
}

/// Basic-double-link chain growing the pivot submatrix out to the full
/// matrix: first up-left to column 1, then up-right to row 1, then down-right
/// to the last row.
fn chain_steps(m: &DegreeMatrix, k: usize, l: usize) -> Vec<Step> {
    let t = m.t();
    let mut steps = Vec::new();
    let (mut i1, mut i2, mut j1, mut j2) = (k - 1, k, l, l + 2);
    while j1 > 1 {
        let s = skew_sum(m, i1 - 1, j1, i2, j2);
        steps.push(Step::BasicDoubleLink(BdlSpec {
            s,
            t_deg: m.entry(i1 - 1, j1 - 1),
            s_is_min_gen: false,
        }));
        i1 -= 1;
        j1 -= 1;
    }
    while i1 > 1 {
        let s = skew_sum(m, i1 - 1, j1, i2, j2);
        steps.push(Step::BasicDoubleLink(BdlSpec {
            s,
            t_deg: m.entry(i1 - 1, j2 + 1),
            s_is_min_gen: false,
        }));
        i1 -= 1;
        j2 += 1;
    }
    while i2 < t {
        let s = skew_sum(m, i1, j1, i2 + 1, j2);
        steps.push(Step::BasicDoubleLink(BdlSpec {
            s,
            t_deg: m.entry(i2 + 1, j2 + 1),
            s_is_min_gen: false,
        }));
        i2 += 1;
        j2 += 1;
    }
    debug_assert_eq!((i1, i2, j1, j2), (1, t, 1, t + 1));
    steps
}

fn bdl_sum(steps: &[Step]) -> i64 {
    steps
        .iter()
        .map(|s| match s {
            Step::BasicDoubleLink(b) => b.t_deg,
            _ => 0,
        })
        .sum()
}

fn fold_max_gen(base: Option<i64>, steps: &[Step]) -> Option<i64> {
    let mut g = base?;
    for step in steps {
        match step {
            Step::BasicDoubleLink(b) => g = (g + b.t_deg).max(b.s),
            _ => return None,
        }
    }
    Some(g)
}

fn synthesize_chain(
    m: &DegreeMatrix,
    pivot: (usize, usize),
    nice: bool,
) -> Result<CurveRecipe> {
    let (k, l) = pivot;
    let (base, sub) = chain_base(m, k, l, nice)?;
    let steps = chain_steps(m, k, l);
    let section = replay(&base.section()?, &steps)?;
    debug_assert_eq!(section, m.betti());
    let all_ones_base = sub.base().is_all_ones();
    let shift = bdl_sum(&steps);
    let (alpha, alpha_plus) = if nice && !all_ones_base {
        (
            Some(sub.entry(1, 1) + sub.entry(2, 2) + sub.entry(2, 3) - 3 + shift),
            Some(sub.entry(1, 2) + sub.entry(2, 3) - 1 + shift),
        )
    } else if all_ones_base {
        (Some(shift), None)
    } else {
        (Some(1 + shift), None)
    };
    let mut components = base.components().unwrap_or_default();
    for step in &steps {
        if let Step::BasicDoubleLink(b) = step {
            components.push((b.t_deg, b.s));
        }
    }
    let mut notes = vec![
        "surfaces of the double links are generic; their images in the section ideals are not minimal generators".to_string(),
    ];
    if all_ones_base {
        notes.push(
            "all-ones base: disjoint union of a line and a plane conic; the first double link reconnects the curve"
                .to_string(),
        );
    }
    let branch = if l <= k.saturating_sub(2) { "l <= k-2" } else { "l = k-1" };
    notes.push(format!("chain branch: {branch}"));
    Ok(CurveRecipe {
        goal: Goal::NonAcm,
        mode: Some(if nice { Mode::Nice } else { Mode::BdlChain }),
        base: base.clone(),
        steps: steps.clone(),
        predicted_section: section,
        predicted_deficiency: DeficiencyPrediction {
            alpha,
            alpha_plus_upper: alpha_plus,
            dim: None,
            presentation: if all_ones_base {
                format!("R/(I_C1 + I_C2) shifted by {shift}")
            } else {
                format!("(L1,L2,L3)/(F1,F2,G1,G2) shifted by {shift}")
            },
        },
        max_gen_degree: fold_max_gen(base.max_gen_degree(), &steps),
        properties: CurveProperties {
            reduced: true,
            connected: !all_ones_base || !steps.is_empty(),
            smooth: false,
            integral: false,
            buchsbaum: false,
        },
        components: Some(components),
        pivot: Some((k, l)),
        notes,
    })
}

/// Degenerate `t = 1` targets: honest bases for `(1,2)` and `(2,a)`; the
/// remaining collinear sections get a formal linkage bookkeeping recipe,
/// flagged as such.
fn synthesize_t1_non_acm(m: &DegreeMatrix) -> Result<CurveRecipe> {
    let (p, q) = (m.entry(1, 1), m.entry(1, 2));
    let (base, steps, notes, props) = if (p, q) == (1, 2) {
        (
            Base::TwoSkewLines,
            Vec::new(),
            vec!["two skew lines".to_string()],
            CurveProperties { reduced: true, connected: false, smooth: true, integral: false, buchsbaum: true },
        )
    } else if p == 2 {
        (
            Base::RationalOnQuadric { a: q },
            Vec::new(),
            vec![format!("smooth rational curve of degree {} on a smooth quadric", 2 * q)],
            CurveProperties { reduced: true, connected: true, smooth: true, integral: true, buchsbaum: false },
        )
    } else {
        // p = 1, q != 2: collinear section of degree > 2 or a single point;
        // no non-degenerate curve carries it, so the recipe is formal.
        (
            Base::TwoSkewLines,
            vec![Step::CiLink(CiLinkSpec { f: 1, g: q + 2, f_is_min_gen: true, g_is_min_gen: false })],
            vec![
                "degenerate collinear section: Betti-level bookkeeping only, no curve-level construction is certified"
                    .to_string(),
            ],
            CurveProperties { reduced: true, connected: false, smooth: false, integral: false, buchsbaum: false },
        )
    };
    let section = replay(&base.section()?, &steps)?;
    debug_assert_eq!(section, m.betti());
    Ok(CurveRecipe {
        goal: Goal::NonAcm,
        mode: Some(Mode::BdlChain),
        base,
        steps,
        predicted_section: section,
        predicted_deficiency: DeficiencyPrediction {
            alpha: None,
            alpha_plus_upper: None,
            dim: None,
            presentation: "see base curve".into(),
        },
        max_gen_degree: None,
        properties: props,
        components: None,
        pivot: None,
        notes,
    })
}

fn synthesize_union(m: &DegreeMatrix, r: usize) -> Result<CurveRecipe> {
    let t = m.t();
    if !(2..=t).contains(&r) || m.entry(r, r - 1) > 2 {
        return Err(Error::NoUnionPivot(format!(
            "row {r} does not qualify: need 2 <= r <= {t} and a[r][r-1] <= 2"
        )));
    }
    let a: i64 = m.entry(1, 1) + m.entry(r, t + 1) + (r..=t).map(|p| m.entry(p, p)).sum::<i64>()
        - m.entry(r, 1);
    if a <= m.entry(1, r - 1) {
        return Err(Error::Precondition(format!(
            "extended column head {a} must exceed a[1][{}] = {}",
            r - 1,
            m.entry(1, r - 1)
        )));
    }
    // L: the top-left (r-1) x (r-1) block extended by the a-column on the right.
    let mut l_rows = m.base().block((1, r - 1), (1, r - 1));
    for (i, row) in l_rows.iter_mut().enumerate() {
        row.push(a - m.entry(1, r - 1) + m.entry(i + 1, r - 1));
    }
    let l_matrix = DegreeMatrix::from_rows(l_rows)?;
    let n_matrix = DegreeMatrix::from_rows(m.base().block((r, t), (r, t + 1)))?;
    let d_f: i64 = (1..r).map(|p| m.entry(p, p)).sum();
    debug_assert_eq!(l_matrix.betti().alpha(), d_f);

    let (base, steps, components) = if l_matrix.t() == 1 && n_matrix.t() == 1 {
        let first = (n_matrix.entry(1, 1), n_matrix.entry(1, 2));
        let second = (l_matrix.entry(1, 1), l_matrix.entry(1, 2));
        (
            Base::UnionOfTwoCi { first, second, d_f, through_common_point: true },
            Vec::new(),
            Some(vec![first, second]),
        )
    } else {
        (
            Base::AcmCurve { matrix: n_matrix },
            vec![Step::Union {
                other: l_matrix.betti(),
                d_f,
                through_common_point: true,
            }],
            None,
        )
    };
    let section = replay(&base.section()?, &steps)?;
    debug_assert_eq!(section, m.betti());
    let max_gen = if t == 2 {
        Some(m.entry(1, 2) + 2 * m.entry(2, 3))
    } else {
        None
    };
    Ok(CurveRecipe {
        goal: Goal::NonAcm,
        mode: Some(Mode::Union),
        base,
        steps,
        predicted_section: section,
        predicted_deficiency: DeficiencyPrediction {
            alpha: Some(1),
            alpha_plus_upper: None,
            dim: None,
            presentation: "I_P/(I_C1 + I_C2), P the common point".into(),
        },
        max_gen_degree: max_gen,
        properties: CurveProperties {
            reduced: true,
            connected: true,
            smooth: false,
            integral: false,
            buchsbaum: false,
        },
        components,
        pivot: Some((r, r - 1)),
        notes: vec![
            "the two aCM components are generic through a fixed common point".to_string(),
        ],
    })
}

/// Synthesize a reduced non-aCM curve recipe for a matrix with minimum entry
/// at most 2 (and not the all-ones 2x3).
pub fn synthesize_non_acm(m: &DegreeMatrix, mode: Mode) -> Result<CurveRecipe> {
    require_non_acm_target(m)?;
    match mode {
        Mode::Union => {
            let r = *union_pivots(m).first().ok_or_else(|| {
                Error::NoUnionPivot(
                    "no row r has a[r][r-1] <= 2; the union mechanism does not apply".into(),
                )
            })?;
            synthesize_union(m, r)
        }
        Mode::BdlChain | Mode::Nice => {
            if m.t() == 1 {
                return synthesize_t1_non_acm(m);
            }
            let pivot = *chain_pivots(m).first().ok_or_else(|| {
                Error::Precondition("no chain pivot found".into())
            })?;
            synthesize_chain(m, pivot, mode == Mode::Nice)
        }
    }
}

/// Synthesis with a caller-chosen pivot: `(r, r-1)` for union mode, `(k, l)`
/// for the chain modes. Fails with the pivot-specific error when the chosen
/// pivot does not qualify.
pub fn synthesize_non_acm_with_pivot(
    m: &DegreeMatrix,
    mode: Mode,
    pivot: (usize, usize),
) -> Result<CurveRecipe> {
    require_non_acm_target(m)?;
    match mode {
        Mode::Union => synthesize_union(m, pivot.0),
        Mode::BdlChain | Mode::Nice => {
            if !chain_pivots(m).contains(&pivot) {
                return Err(Error::Precondition(format!(
                    "({}, {}) is not a qualifying chain pivot",
                    pivot.0, pivot.1
                )));
            }
            synthesize_chain(m, pivot, mode == Mode::Nice)
        }
    }
}

/// Every recipe over every qualifying pivot, in pivot order.
pub fn synthesize_non_acm_all_pivots(m: &DegreeMatrix, mode: Mode) -> Result<Vec<CurveRecipe>> {
    require_non_acm_target(m)?;
    match mode {
        Mode::Union => union_pivots(m)
            .into_iter()
            .map(|r| synthesize_union(m, r))
            .collect(),
        Mode::BdlChain | Mode::Nice => {
            if m.t() == 1 {
                return Ok(vec![synthesize_t1_non_acm(m)?]);
            }
            chain_pivots(m)
                .into_iter()
                .map(|p| synthesize_chain(m, p, mode == Mode::Nice))
                .collect()
        }
    }
}

fn degree_matrix_from_block(rows: Vec<Vec<i64>>) -> Result<DegreeMatrix> {
    DegreeMatrix::from_rows(rows)
}

/// Inductive link chain producing a Buchsbaum curve in the linkage class of
/// two skew lines whose section has degree matrix `m`; needs an entry 2.
fn buchsbaum_parts(m: &DegreeMatrix) -> Result<(Base, Vec<Step>)> {
    let t = m.t();
    if !m.base().has_entry(2) {
        return Err(Error::NotRealizable(
            "an entry equal to 2 in the degree matrix is necessary".into(),
        ));
    }
    if t == 1 {
        let (p, q) = (m.entry(1, 1), m.entry(1, 2));
        return if (p, q) == (1, 2) {
            Ok((Base::TwoSkewLines, Vec::new()))
        } else {
            debug_assert_eq!(p, 2);
            Ok((
                Base::TwoSkewLines,
                vec![Step::CiLink(CiLinkSpec {
                    f: 2,
                    g: q + 1,
                    f_is_min_gen: true,
                    g_is_min_gen: false,
                })],
            ))
        };
    }
    let interior = (1..=t).flat_map(|i| (2..=t).map(move |j| (i, j)));
    if interior.clone().any(|(i, j)| m.entry(i, j) == 2) {
        // flip the interior columns and link back by diagonal-degree surfaces
        let n = degree_matrix_from_block(transpose_antidiagonal(&m.base().block((1, t), (2, t))))?;
        let (base, mut steps) = buchsbaum_parts(&n)?;
        let f = m.base().diagonal_sum();
        let g = (2..=t).map(|i| m.entry(i, i)).sum::<i64>() + m.entry(1, t + 1);
        steps.push(Step::CiLink(CiLinkSpec::plain(f, g)));
        return Ok((base, steps));
    }
    if (2..=t).any(|i| m.entry(i, 1) == 2) {
        let cols: Vec<usize> = std::iter::once(1).chain(3..=t).collect();
        let n = degree_matrix_from_block(transpose_antidiagonal(&m.base().select((1, t), &cols)))?;
        let (base, mut steps) = buchsbaum_parts(&n)?;
        let tail: i64 = (3..=t).map(|i| m.entry(i, i)).sum();
        let f = tail + m.entry(2, 1) + m.entry(1, 2);
        let g = tail + m.entry(2, 1) + m.entry(1, t + 1);
        steps.push(Step::CiLink(CiLinkSpec::plain(f, g)));
        return Ok((base, steps));
    }
    if m.entry(1, 1) == 2 {
        let n = degree_matrix_from_block(m.base().block((1, t - 1), (1, t)))?;
        let (base, mut steps) = buchsbaum_parts(&n)?;
        steps.push(Step::BasicDoubleLink(BdlSpec {
            s: m.base().diagonal_sum(),
            t_deg: m.entry(t, t + 1),
            s_is_min_gen: false,
        }));
        return Ok((base, steps));
    }
    // an entry 2 in the last column
    debug_assert!((1..=t).any(|i| m.entry(i, t + 1) == 2));
    let cols: Vec<usize> = (2..=t - 1).chain(std::iter::once(t + 1)).collect();
    let n = degree_matrix_from_block(transpose_antidiagonal(&m.base().select((1, t), &cols)))?;
    let (base, mut steps) = buchsbaum_parts(&n)?;
    let head: i64 = (1..=t - 1).map(|i| m.entry(i, i)).sum();
    let f = m.entry(t, t + 1) + head;
    let g = m.entry(t, t + 1) + head - m.entry(1, 1) + m.entry(1, t);
    steps.push(Step::CiLink(CiLinkSpec::plain(f, g)));
    Ok((base, steps))
}

/// Buchsbaum synthesis: a curve in the linkage class of two skew lines
/// (deficiency module of dimension one) whose section has matrix `m`.
pub fn synthesize_buchsbaum(m: &DegreeMatrix) -> Result<CurveRecipe> {
    let (base, steps) = buchsbaum_parts(m)?;
    let section = replay(&base.section()?, &steps)?;
    debug_assert_eq!(section, m.betti());
    let bounds = crate::buchsbaum::deficiency_bounds(&section);
    let smooth_connected = m.t() == 1 && m.entry(1, 1) == 2;
    Ok(CurveRecipe {
        goal: Goal::Buchsbaum,
        mode: None,
        base,
        steps,
        predicted_section: section.clone(),
        predicted_deficiency: DeficiencyPrediction {
            alpha: None,
            alpha_plus_upper: Some(bounds.1),
            dim: Some(1),
            presentation: "k(-e): one socle generator".into(),
        },
        max_gen_degree: Some(section.max_gen_degree() + 1),
        properties: CurveProperties {
            reduced: true,
            connected: smooth_connected,
            smooth: smooth_connected || m.rows() == [vec![1, 2]],
            integral: false,
            buchsbaum: true,
        },
        components: None,
        pivot: None,
        notes: vec![
            "each linking surface is chosen so its image in the section ideal is not a minimal generator"
                .to_string(),
        ],
    })
}

/// Smooth integral synthesis following the case analysis on the matrix
/// entries; refuses matrices the classifier marks unrealizable.
pub fn synthesize_integral_smooth(m: &DegreeMatrix) -> Result<CurveRecipe> {
    let verdict = classify_plane_section(m);
    match verdict.realizable_integral_smooth_nonacm.state {
        TriState::Yes => {}
        _ => {
            return Err(Error::NotRealizable(format!(
                "{}: {}",
                verdict.realizable_integral_smooth_nonacm.rule,
                verdict.realizable_integral_smooth_nonacm.note
            )))
        }
    }
    let t = m.t();
    let (base, steps, dim, note): (Base, Vec<Step>, Option<i64>, String) = if t == 1 {
        (
            Base::RationalOnQuadric { a: m.entry(1, 2) },
            Vec::new(),
            None,
            "smooth rational curve on a smooth quadric".into(),
        )
    } else if t == 2 {
        let (a21, a11, a22, a23) = (m.entry(2, 1), m.entry(1, 1), m.entry(2, 2), m.entry(2, 3));
        if a21 == 2 {
            (
                Base::RationalOnQuadric { a: a11 },
                vec![Step::CiLink(CiLinkSpec::plain(a11 + a22, a11 + a23))],
                None,
                "link a rational quadric curve by smooth surfaces of the two diagonal sums".into(),
            )
        } else if a22 == 2 {
            (
                Base::TwoSkewLines,
                vec![Step::BasicDoubleLink(BdlSpec {
                    s: a11 + 2,
                    t_deg: a11 + a23 - 1,
                    s_is_min_gen: false,
                })],
                Some(1),
                "double link of two skew lines; smooth member of the linear system".into(),
            )
        } else if a11 == 2 {
            (
                Base::TwoSkewLines,
                vec![Step::CiLink(CiLinkSpec::plain(m.entry(1, 2) + 1, m.entry(1, 3) + 1))],
                Some(1),
                "link two skew lines by a CI of the top-row degrees plus one".into(),
            )
        } else if a11 == 1 {
            // remaining case: a21 = a22 = 1, matrix [[1,1,a],[1,1,a]]
            let a = a23;
            let mut extra = String::new();
            if a == 2 {
                extra = "; a general rational quintic is an alternative witness".to_string();
            }
            (
                Base::SkewLinesOnQuadric { lines: 2 * a - 1 },
                vec![Step::CiLink(CiLinkSpec {
                    f: 2,
                    g: 2 * a,
                    f_is_min_gen: true,
                    g_is_min_gen: false,
                })],
                None,
                format!("link {} ruling lines inside their quadric{extra}", 2 * a - 1),
            )
        } else if a23 == 2 {
            // a21 = a22 = 1, a11 >= 3
            (
                Base::TwoSkewLines,
                vec![Step::BasicDoubleLink(BdlSpec {
                    s: a11 + 2,
                    t_deg: a11,
                    s_is_min_gen: false,
                })],
                Some(1),
                "double link of two skew lines".into(),
            )
        } else {
            // a21 = a22 = a23 = 1, a11 >= 3: matrix [[a,a,a],[1,1,1]]
            let a = a11;
            (
                Base::SkewLinesOnQuadric { lines: 2 * a + 1 },
                vec![Step::CiLink(CiLinkSpec {
                    f: a + 1,
                    g: a + 2,
                    f_is_min_gen: true,
                    g_is_min_gen: false,
                })],
                None,
                format!("link {} ruling lines; the degree-{} surface induces a minimal generator", 2 * a + 1, a + 1),
            )
        }
    } else {
        // flip the first t-1 columns, build the reduced chain curve, link back
        let n = degree_matrix_from_block(transpose_antidiagonal(
            &m.base().block((1, t), (1, t - 1)),
        ))?;
        let (inner_base, mut steps) = if n.t() == 2 && n.base().is_all_ones() {
            // the chain base degenerates to the disjoint union of a line and
            // a plane conic
            (
                Base::UnionOfTwoCi {
                    first: (1, 1),
                    second: (1, 2),
                    d_f: 1,
                    through_common_point: false,
                },
                Vec::new(),
            )
        } else {
            let inner = synthesize_non_acm(&n, Mode::Nice)?;
            (inner.base, inner.steps)
        };
        let f = m.base().diagonal_sum();
        let g = (1..t).map(|j| m.entry(j, j)).sum::<i64>() + m.entry(t, t + 1);
        steps.push(Step::CiLink(CiLinkSpec::plain(f, g)));
        (
            inner_base,
            steps,
            None,
            "link the antidiagonal-flipped chain curve by a CI of diagonal degrees".into(),
        )
    };
    let section = replay(&base.section()?, &steps)?;
    debug_assert_eq!(section, m.betti());
    Ok(CurveRecipe {
        goal: Goal::IntegralSmooth,
        mode: None,
        base,
        steps,
        predicted_section: section,
        predicted_deficiency: DeficiencyPrediction {
            alpha: None,
            alpha_plus_upper: None,
            dim,
            presentation: "nontrivial deficiency module of a smooth integral curve".into(),
        },
        max_gen_degree: None,
        properties: CurveProperties {
            reduced: true,
            connected: true,
            smooth: true,
            integral: true,
            buchsbaum: false,
        },
        components: None,
        pivot: None,
        notes: vec![
            note,
            "smoothness and integrality come from generic members of basepoint-free linear systems"
                .to_string(),
        ],
    })
}

fn two_points() -> BettiTable {
    BettiTable::plane(vec![2, 1], vec![3]).unwrap()
}

/// Peel one unit of one block of 2's by liaison addition with a curve in the
/// linkage class of two skew lines.
fn maxdef_parts(m: &DegreeMatrix) -> Result<(Base, Vec<Step>)> {
    let d = delta(m);
    if d == 0 {
        return Err(Error::NotRealizable(
            "no entry equal to 2: the deficiency bound is zero".into(),
        ));
    }
    if d == 1 {
        return buchsbaum_parts(m);
    }
    let t = m.t();
    let target = m.betti();

    // blocks meeting the lower triangle peel directly
    let pivot = (1..=t)
        .flat_map(|i| (1..=i).map(move |j| (i, j)))
        .find(|&(i, j)| m.entry(i, j) == 2);
    if let Some((i, j)) = pivot {
        let n = degree_matrix_from_block(m.base().delete_row_col(i, j))?;
        debug_assert_eq!(delta(&n), d - 1);
        let deg_f = n.base().diagonal_sum() - 1 + m.entry(i, t + 1);
        let (base, mut steps) = maxdef_parts(&n)?;
        steps.push(Step::LiaisonAddition {
            z: two_points(),
            spec: LiaisonAddSpec {
                deg_f,
                deg_q: 2,
                f_is_min_gen_of_y: false,
                q_is_min_gen_of_z: true,
            },
        });
        if replay(&base.section()?, &steps)? == target {
            return Ok((base, steps));
        }
    }

    // all 2's strictly above the diagonal: try the two double-link reductions
    // that keep the block structure, then a direct decomposition search
    if t >= 2 {
        let n = degree_matrix_from_block(m.base().block((2, t), (2, t + 1)))?;
        if delta(&n) == d {
            let s: i64 = (1..=t).map(|p| m.entry(p, p + 1)).sum();
            if let Ok((base, mut steps)) = maxdef_parts(&n) {
                steps.push(Step::BasicDoubleLink(BdlSpec {
                    s,
                    t_deg: m.entry(1, 1),
                    s_is_min_gen: false,
                }));
                if replay(&base.section()?, &steps)? == target {
                    return Ok((base, steps));
                }
            }
        }
        let n = degree_matrix_from_block(m.base().block((1, t - 1), (1, t)))?;
        if delta(&n) == d {
            if let Ok((base, mut steps)) = maxdef_parts(&n) {
                steps.push(Step::BasicDoubleLink(BdlSpec {
                    s: m.base().diagonal_sum(),
                    t_deg: m.entry(t, t + 1),
                    s_is_min_gen: false,
                }));
                if replay(&base.section()?, &steps)? == target {
                    return Ok((base, steps));
                }
            }
        }
    }

    maxdef_search(m, &target)
}

/// Decomposition search: write the target as a liaison addition of a smaller
/// degree matrix (one less unit of deficiency) and a two-skew-lines-class
/// section, trying each cancellation pattern.
fn maxdef_search(m: &DegreeMatrix, target: &BettiTable) -> Result<(Base, Vec<Step>)> {
    let d = delta(m);
    let max_shift = target.max_syz();
    let mut z_candidates = vec![DegreeMatrix::ci(1, 2).unwrap()];
    for q in 2..=target.max_gen_degree() {
        z_candidates.push(DegreeMatrix::ci(2, q).unwrap());
    }
    let remove_all = |mut from: Vec<i64>, take: &[i64]| -> Option<Vec<i64>> {
        for &v in take {
            let k = from.iter().position(|&x| x == v)?;
            from.remove(k);
        }
        Some(from)
    };
    for z_matrix in &z_candidates {
        let z = z_matrix.betti();
        for deg_f in 1..=max_shift {
            for deg_q in z.alpha()..=max_shift {
                let cross = deg_f + deg_q;
                for flags in [(false, true), (true, false), (false, false)] {
                    let (f_flag, q_flag) = flags;
                    if q_flag && !z.gens().contains(&deg_q) {
                        continue;
                    }
                    let mut zg: Vec<i64> = z.gens().iter().map(|&x| x + deg_f).collect();
                    if q_flag {
                        match zg.iter().position(|&x| x == cross) {
                            Some(k) => {
                                zg.remove(k);
                            }
                            None => continue,
                        }
                    }
                    let Some(mut yg) = remove_all(target.gens().to_vec(), &zg) else {
                        continue;
                    };
                    if f_flag {
                        yg.push(cross);
                    }
                    let zs: Vec<i64> = z.syz().iter().map(|&x| x + deg_f).collect();
                    let Some(mut ys) = remove_all(target.syz().to_vec(), &zs) else {
                        continue;
                    };
                    if !f_flag && !q_flag {
                        match ys.iter().position(|&x| x == cross) {
                            Some(k) => {
                                ys.remove(k);
                            }
                            None => continue,
                        }
                    }
                    if yg.iter().any(|&x| x <= deg_q) || ys.iter().any(|&x| x <= deg_q) {
                        continue;
                    }
                    let y_gens: Vec<i64> = yg.iter().map(|&x| x - deg_q).collect();
                    let y_syz: Vec<i64> = ys.iter().map(|&x| x - deg_q).collect();
                    let Ok(y_table) = BettiTable::plane(y_gens, y_syz) else {
                        continue;
                    };
                    if deg_f < y_table.alpha() {
                        continue;
                    }
                    if f_flag && !y_table.gens().contains(&deg_f) {
                        continue;
                    }
                    let Ok(y_base) = degree_matrix_from_betti(&y_table) else {
                        continue;
                    };
                    let Ok(y_matrix) = DegreeMatrix::new(y_base) else {
                        continue;
                    };
                    if delta(&y_matrix) != d - 1 {
                        continue;
                    }
                    let Ok((base, mut steps)) = maxdef_parts(&y_matrix) else {
                        continue;
                    };
                    steps.push(Step::LiaisonAddition {
                        z: z.clone(),
                        spec: LiaisonAddSpec {
                            deg_f,
                            deg_q,
                            f_is_min_gen_of_y: f_flag,
                            q_is_min_gen_of_z: q_flag,
                        },
                    });
                    if replay(&base.section()?, &steps)? == *target {
                        return Ok((base, steps));
                    }
                }
            }
        }
    }
    Err(Error::NotRealizable(
        "no liaison-addition decomposition found for the deficiency chain".into(),
    ))
}

/// Sharpness synthesis: a Buchsbaum curve whose deficiency module attains the
/// per-degree bounds, of total dimension `delta(m)`.
pub fn synthesize_max_deficiency(m: &DegreeMatrix) -> Result<CurveRecipe> {
    let (base, steps) = maxdef_parts(m)?;
    let section = replay(&base.section()?, &steps)?;
    debug_assert_eq!(section, m.betti());
    let bounds = per_degree_dim_bounds(m);
    Ok(CurveRecipe {
        goal: Goal::MaxDeficiency,
        mode: None,
        base,
        steps,
        predicted_section: section.clone(),
        predicted_deficiency: DeficiencyPrediction {
            alpha: bounds.per_degree.keys().next().copied(),
            alpha_plus_upper: bounds.per_degree.keys().last().copied(),
            dim: Some(bounds.delta as i64),
            presentation: "direct sum of k(-e) attaining min(height, width) on every block of 2's"
                .into(),
        },
        max_gen_degree: Some(section.max_gen_degree() + 1),
        properties: CurveProperties {
            reduced: true,
            connected: false,
            smooth: false,
            integral: false,
            buchsbaum: true,
        },
        components: None,
        pivot: None,
        notes: vec![
            "each liaison addition appends one two-skew-lines-class summand to the deficiency module"
                .to_string(),
        ],
    })
}

/// Outcome of replaying a recipe against a target matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub final_table: BettiTable,
    pub final_matrix: Option<DegreeMatrix>,
    pub matches_target: bool,
    pub degree_expected: i64,
    pub degree_accounted: i64,
    pub degree_consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub component_degree_sum: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dim_prediction_matches_delta: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_gen_degree_within_section_bound: Option<bool>,
}

/// Replay a recipe and compare against the target degree matrix; checks the
/// degree accounting and, for Buchsbaum recipes, the curve-generation bound
/// (section bound plus one).
pub fn verify_recipe(recipe: &CurveRecipe, target: &DegreeMatrix) -> Result<VerificationReport> {
    let final_table = recipe.replay()?;
    let final_matrix = degree_matrix_from_betti(&final_table)
        .ok()
        .and_then(|b| DegreeMatrix::new(b).ok());
    let matches_target = final_table == target.betti();
    let degree_expected = crate::hvector::hvector_from_degree_matrix(target).degree();
    let degree_accounted = recipe.accounted_degree()?;
    let component_degree_sum = recipe
        .components
        .as_ref()
        .map(|cs| cs.iter().map(|(p, q)| p * q).sum());
    let dim_prediction_matches_delta = match recipe.goal {
        Goal::MaxDeficiency => Some(
            recipe.predicted_deficiency.dim == Some(delta(target) as i64),
        ),
        Goal::Buchsbaum => recipe
            .predicted_deficiency
            .dim
            .map(|d| d >= 1 && d <= delta(target) as i64),
        _ => None,
    };
    let max_gen_degree_within_section_bound = if recipe.properties.buchsbaum {
        recipe
            .max_gen_degree
            .map(|g| g <= final_table.max_gen_degree() + 1)
    } else {
        None
    };
    Ok(VerificationReport {
        degree_consistent: degree_accounted == degree_expected
            && component_degree_sum.is_none_or(|s| s == degree_expected),
        final_table,
        final_matrix,
        matches_target,
        degree_expected,
        degree_accounted,
        component_degree_sum,
        dim_prediction_matches_delta,
        max_gen_degree_within_section_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dm(rows: &[&[i64]]) -> DegreeMatrix {
        DegreeMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn assert_verified(recipe: &CurveRecipe, target: &DegreeMatrix) {
        let report = verify_recipe(recipe, target).unwrap();
        assert!(report.matches_target, "recipe does not reproduce {:?}", target.rows());
        assert!(report.degree_consistent, "degree accounting failed for {:?}", target.rows());
    }

    #[test]
    fn union_mode_2x3_fixture() {
        let m = dm(&[&[2, 2, 3], &[2, 2, 3]]);
        let recipe = synthesize_non_acm(&m, Mode::Union).unwrap();
        match &recipe.base {
            Base::UnionOfTwoCi { first, second, d_f, through_common_point } => {
                assert_eq!((*first, *second, *d_f, *through_common_point), ((2, 3), (2, 5), 2, true));
            }
            other => panic!("expected a union base, got {other:?}"),
        }
        assert_verified(&recipe, &m);
        assert_eq!(recipe.predicted_deficiency.alpha, Some(1));
    }

    #[test]
    fn union_mode_pivot_failure() {
        // a[3][2] = 3: forcing the pivot r = 3 is refused, while the default
        // pivot r = 2 qualifies and verifies
        let m = dm(&[
            &[3, 4, 4, 5],
            &[2, 3, 3, 4],
            &[2, 3, 3, 4],
        ]);
        assert!(matches!(
            synthesize_non_acm_with_pivot(&m, Mode::Union, (3, 2)),
            Err(Error::NoUnionPivot(_))
        ));
        let recipe = synthesize_non_acm(&m, Mode::Union).unwrap();
        assert_eq!(recipe.pivot, Some((2, 1)));
        assert_verified(&recipe, &m);
    }

    #[test]
    fn chain_mode_minimal_curve_matrix() {
        let m = dm(&[&[1, 2, 2], &[1, 2, 2]]);
        let recipe = synthesize_non_acm(&m, Mode::BdlChain).unwrap();
        assert!(recipe.steps.is_empty());
        assert_verified(&recipe, &m);
    }

    #[test]
    fn chain_mode_larger_matrices() {
        for rows in [
            vec![vec![2, 3, 4, 4], vec![1, 2, 3, 3], vec![0, 1, 2, 2]],
            vec![vec![1, 1, 1, 1], vec![1, 1, 1, 1], vec![1, 1, 1, 1]],
            vec![vec![3, 3, 5, 6], vec![1, 1, 3, 4], vec![0, 0, 2, 3]],
        ] {
            let m = DegreeMatrix::from_rows(rows).unwrap();
            let recipe = synthesize_non_acm(&m, Mode::BdlChain).unwrap();
            assert_verified(&recipe, &m);
        }
    }

    #[test]
    fn nice_mode_carries_alpha_prediction() {
        let m = dm(&[&[2, 3, 4], &[1, 2, 3]]);
        let recipe = synthesize_non_acm(&m, Mode::Nice).unwrap();
        assert_verified(&recipe, &m);
        // base 2x3 is the matrix itself: alpha = a11 + a22 + a23 - 3
        assert_eq!(recipe.predicted_deficiency.alpha, Some(2 + 2 + 3 - 3));
        assert_eq!(recipe.max_gen_degree, Some(3 + 3 + 1));
    }

    #[test]
    fn non_acm_refusals() {
        assert!(matches!(
            synthesize_non_acm(&dm(&[&[3, 4]]), Mode::BdlChain),
            Err(Error::NotRealizable(_))
        ));
        assert!(matches!(
            synthesize_non_acm(&dm(&[&[1, 1, 1], &[1, 1, 1]]), Mode::BdlChain),
            Err(Error::NotRealizable(_))
        ));
    }

    #[test]
    fn buchsbaum_base_cases() {
        let recipe = synthesize_buchsbaum(&dm(&[&[1, 2]])).unwrap();
        assert_eq!(recipe.base, Base::TwoSkewLines);
        assert!(recipe.steps.is_empty());
        for a in 2..=6 {
            let m = dm(&[&[2, a]]);
            let recipe = synthesize_buchsbaum(&m).unwrap();
            assert_verified(&recipe, &m);
        }
    }

    #[test]
    fn buchsbaum_case_split() {
        for rows in [
            vec![vec![1, 2, 2], vec![1, 2, 2]],          // interior column
            vec![vec![3, 4, 6], vec![2, 3, 5]],          // first column
            vec![vec![2, 3, 3], vec![2, 3, 3]],          // corner (1,1)
            vec![vec![1, 1, 2], vec![1, 1, 2]],          // last column
            vec![vec![2, 2, 3, 4], vec![1, 1, 2, 3], vec![0, 0, 1, 2]],
        ] {
            let m = DegreeMatrix::from_rows(rows).unwrap();
            let recipe = synthesize_buchsbaum(&m).unwrap();
            assert_verified(&recipe, &m);
            assert_eq!(recipe.predicted_deficiency.dim, Some(1));
        }
    }

    #[test]
    fn buchsbaum_refusal() {
        assert!(matches!(
            synthesize_buchsbaum(&dm(&[&[1, 1, 1], &[1, 1, 1]])),
            Err(Error::NotRealizable(_))
        ));
    }

    #[test]
    fn integral_smooth_cases() {
        // case 3 shape: [[2,a,b],[1,a-1,b-1]]
        let m = dm(&[&[2, 3, 4], &[1, 2, 3]]);
        let recipe = synthesize_integral_smooth(&m).unwrap();
        assert_verified(&recipe, &m);

        // case 4: [[1,1,2],[1,1,2]] via three ruling lines
        let m = dm(&[&[1, 1, 2], &[1, 1, 2]]);
        let recipe = synthesize_integral_smooth(&m).unwrap();
        assert_eq!(recipe.base, Base::SkewLinesOnQuadric { lines: 3 });
        assert_verified(&recipe, &m);
        assert_eq!(recipe.predicted_section.gens(), &[3, 3, 2]);
        assert_eq!(recipe.predicted_section.syz(), &[4, 4]);

        // exception family refusal
        assert!(matches!(
            synthesize_integral_smooth(&dm(&[&[1, 3, 3], &[1, 3, 3]])),
            Err(Error::NotRealizable(_))
        ));
    }

    #[test]
    fn integral_smooth_large() {
        let m = dm(&[
            &[2, 3, 4, 4],
            &[1, 2, 3, 3],
            &[1, 2, 3, 3],
        ]);
        let recipe = synthesize_integral_smooth(&m).unwrap();
        assert_verified(&recipe, &m);
        assert!(recipe.properties.integral && recipe.properties.smooth);
    }

    #[test]
    fn maxdef_minimal_curves() {
        for n in 1..=5 {
            let fam = crate::buchsbaum::minimal_curve_family(n).unwrap();
            let recipe = synthesize_max_deficiency(&fam.matrix).unwrap();
            assert_verified(&recipe, &fam.matrix);
            assert_eq!(recipe.predicted_deficiency.dim, Some(n));
        }
    }

    #[test]
    fn maxdef_two_blocks() {
        let m = dm(&[&[2, 3, 3], &[1, 2, 2]]);
        let recipe = synthesize_max_deficiency(&m).unwrap();
        assert_verified(&recipe, &m);
        assert_eq!(recipe.predicted_deficiency.dim, Some(2));
    }

    #[test]
    fn maxdef_tall_block_above_diagonal() {
        // one 2x2 block strictly above the diagonal; needs the search branch
        let m = dm(&[
            &[1, 1, 2, 2],
            &[1, 1, 2, 2],
            &[0, 0, 1, 1],
        ]);
        assert_eq!(delta(&m), 2);
        let recipe = synthesize_max_deficiency(&m).unwrap();
        assert_verified(&recipe, &m);
        assert_eq!(recipe.predicted_deficiency.dim, Some(2));
    }

    #[test]
    fn corrupted_recipe_is_flagged() {
        let m = dm(&[&[1, 2, 2], &[1, 2, 2]]);
        let mut recipe = synthesize_max_deficiency(&m).unwrap();
        if let Some(Step::LiaisonAddition { spec, .. }) = recipe.steps.last_mut() {
            spec.deg_f += 1;
        }
        match verify_recipe(&recipe, &m) {
            Ok(report) => assert!(!report.matches_target),
            Err(Error::Replay { .. }) => {}
            Err(e) => panic!("unexpected error {e:?}"),
        }
    }

    #[test]
    fn recipes_roundtrip_through_json() {
        let m = dm(&[&[1, 2, 2], &[1, 2, 2]]);
        let recipe = synthesize_max_deficiency(&m).unwrap();
        let json = serde_json::to_string(&recipe).unwrap();
        let back: CurveRecipe = serde_json::from_str(&json).unwrap();
        assert_eq!(back, recipe);
    }
}
