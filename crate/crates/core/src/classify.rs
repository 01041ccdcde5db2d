//! Decision procedures over degree matrices, lifting matrices and h-vectors:
//! when is a plane section forced to come from an aCM curve, and which
//! section data are realizable by non-aCM curves of the various flavours
//! (reduced/connected, disconnected, integral smooth, Buchsbaum).
//!
//! Verdicts carry machine-readable rule codes naming the criterion applied
//! and notes recording field assumptions, so fixtures can assert the rule
//! and not just the bit.

use crate::error::Result;
use crate::hvector::{degree_matrix_from_hvector, HVector};
use crate::matrix::{BettiTable, DegreeMatrix};
use serde::{Deserialize, Serialize};

pub const CHAR_ZERO_NOTE: &str =
    "characteristic 0 assumed for the forced-aCM, integral-smooth and integral-Buchsbaum tracks (socle-bound and generic-smoothness machinery)";
pub const ANY_CHAR_NOTE: &str =
    "the reduced/disconnected constructions and the Buchsbaum entry-2 characterization hold over any algebraically closed field";

/// A yes/no answer together with the rule that decided it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub holds: bool,
    pub rule: String,
    pub note: String,
}

impl Finding {
    fn yes(rule: &str, note: impl Into<String>) -> Self {
        Finding { holds: true, rule: rule.into(), note: note.into() }
    }
    fn no(rule: &str, note: impl Into<String>) -> Self {
        Finding { holds: false, rule: rule.into(), note: note.into() }
    }
}

/// Three-valued answer for questions that only make sense for integral
/// matrices (positive subdiagonal).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TriState {
    Yes,
    No,
    NotIntegralMatrix,
}

impl TriState {
    pub fn is_yes(self) -> bool {
        self == TriState::Yes
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriFinding {
    pub state: TriState,
    pub rule: String,
    pub note: String,
}

impl TriFinding {
    fn new(state: TriState, rule: &str, note: impl Into<String>) -> Self {
        TriFinding { state, rule: rule.into(), note: note.into() }
    }
}

/// Full classification of a plane-section degree matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    /// Every curve with this section matrix is aCM.
    pub forced_acm_all: Finding,
    /// Some reduced, connected, non-aCM curve has this section matrix.
    pub realizable_reduced_connected_nonacm: Finding,
    /// Some reduced, disconnected, non-aCM curve has this section matrix.
    pub realizable_disconnected_nonacm: Finding,
    /// Some integral (indeed smooth) non-aCM curve has this section matrix.
    pub realizable_integral_smooth_nonacm: TriFinding,
    /// Some Buchsbaum non-aCM curve has this section matrix.
    pub buchsbaum_nonacm: Finding,
    /// Some integral (smooth) Buchsbaum non-aCM curve has this section matrix.
    pub integral_buchsbaum_nonacm: TriFinding,
    pub assumptions: Vec<String>,
}

// Rule codes, named by the mathematical content they encode.
pub mod rules {
    pub const MIN_ENTRY_AT_LEAST_3_FORCES_ACM: &str = "min-entry-at-least-3-forces-acm";
    pub const MIN_ENTRY_AT_LEAST_N_PLUS_1_FORCES_ACM: &str =
        "min-entry-at-least-n-plus-1-forces-acm";
    pub const UNION_OF_ACM_CURVES: &str = "union-of-acm-curves";
    pub const BDL_CHAIN_CONSTRUCTION: &str = "bdl-chain-construction";
    pub const DISJOINT_UNION_CONSTRUCTION: &str = "disjoint-union-construction";
    pub const THREE_GENERIC_POINTS_EXCEPTION: &str = "three-generic-points-exception";
    pub const ENTRY_TWO_CHARACTERIZATION: &str = "entry-two-characterization";
    pub const NO_ENTRY_TWO: &str = "no-entry-two";
    pub const ENTRY_N_NECESSARY: &str = "entry-n-necessary";
    pub const QUADRIC_SECTION_RATIONAL_CURVE: &str = "quadric-section-rational-curve";
    pub const CI_SECTION_FORCES_CI: &str = "ci-section-forces-ci";
    pub const DEGENERATE_SECTION_FORCES_PLANE_CURVE: &str =
        "degenerate-section-forces-plane-curve";
    pub const PLANE_CONIC_EXCLUSION: &str = "plane-conic-exclusion";
    pub const INTEGRAL_EXCEPTION_LOW_LEFT_COLUMN: &str = "integral-exception-low-left-column";
    pub const INTEGRAL_EXCEPTION_HIGH_CORNERS: &str = "integral-exception-high-corners";
    pub const SMOOTH_LINK_CONSTRUCTION: &str = "smooth-link-construction";
    pub const SUBDIAGONAL_NOT_POSITIVE: &str = "subdiagonal-not-positive";
    pub const DECREASING_TYPE_REQUIRED: &str = "decreasing-type-required";
    pub const PADDED_MATRIX_CONSTRUCTION: &str = "padded-matrix-construction";
    pub const CONNECTED_UNLESS_THREE_POINTS: &str = "connected-unless-three-points";
}

/// Exception family: `a22 >= 3`, `a11 != 2`, `a21 != 2` on a 2x3 matrix
/// forces integral curves to be aCM (link to a CI section).
pub fn is_integral_exception_low_left(m: &DegreeMatrix) -> bool {
    m.t() == 2 && m.entry(2, 2) >= 3 && m.entry(1, 1) != 2 && m.entry(2, 1) != 2
}

/// Exception family: `a11 >= 3`, `a23 >= 3`, `a21 != 2`, `a22 != 2` on a
/// 2x3 matrix forces integral curves to be aCM.
pub fn is_integral_exception_high_corners(m: &DegreeMatrix) -> bool {
    m.t() == 2
        && m.entry(1, 1) >= 3
        && m.entry(2, 3) >= 3
        && m.entry(2, 1) != 2
        && m.entry(2, 2) != 2
}

fn integral_track(m: &DegreeMatrix) -> TriFinding {
    use rules::*;
    use TriState::*;
    if !m.base().is_integral() {
        return TriFinding::new(
            NotIntegralMatrix,
            SUBDIAGONAL_NOT_POSITIVE,
            "sections of integral curves have positive subdiagonal (uniform position)",
        );
    }
    let t = m.t();
    if t == 1 {
        let (a, b) = (m.entry(1, 1), m.entry(1, 2));
        return if a == 2 {
            TriFinding::new(
                Yes,
                QUADRIC_SECTION_RATIONAL_CURVE,
                format!("smooth rational curve of degree {} on a quadric surface", 2 * b),
            )
        } else if a == 1 {
            TriFinding::new(
                No,
                DEGENERATE_SECTION_FORCES_PLANE_CURVE,
                "collinear section: an integral curve carrying it is a plane curve, hence aCM",
            )
        } else {
            TriFinding::new(
                No,
                CI_SECTION_FORCES_CI,
                "initial degree >= 3 keeps the curve off quadrics, so a CI section forces a CI",
            )
        };
    }
    if t == 2 {
        if m.base().is_all_ones() {
            return TriFinding::new(
                No,
                THREE_GENERIC_POINTS_EXCEPTION,
                "a connected reduced cubic curve is aCM",
            );
        }
        if is_integral_exception_low_left(m) {
            return TriFinding::new(
                No,
                INTEGRAL_EXCEPTION_LOW_LEFT_COLUMN,
                "lifted low-degree generators link the curve to a CI section",
            );
        }
        if is_integral_exception_high_corners(m) {
            return TriFinding::new(
                No,
                INTEGRAL_EXCEPTION_HIGH_CORNERS,
                "linking by a high-degree CI lands in the previous exception family",
            );
        }
        return if m.entry(2, 1) <= 2 {
            TriFinding::new(
                Yes,
                SMOOTH_LINK_CONSTRUCTION,
                "case analysis on (a21, a11, a22, a23) produces a smooth integral non-aCM curve",
            )
        } else {
            TriFinding::new(
                No,
                MIN_ENTRY_AT_LEAST_3_FORCES_ACM,
                "every entry is at least 3",
            )
        };
    }
    if m.base().bottom_left() <= 2 {
        TriFinding::new(
            Yes,
            SMOOTH_LINK_CONSTRUCTION,
            "link the antidiagonal-transpose construction by a CI of diagonal degrees",
        )
    } else {
        TriFinding::new(No, MIN_ENTRY_AT_LEAST_3_FORCES_ACM, "every entry is at least 3")
    }
}

fn integral_buchsbaum_track(m: &DegreeMatrix) -> TriFinding {
    use rules::*;
    use TriState::*;
    if !m.base().is_integral() {
        return TriFinding::new(
            NotIntegralMatrix,
            SUBDIAGONAL_NOT_POSITIVE,
            "sections of integral curves have positive subdiagonal",
        );
    }
    if m.t() == 1 {
        return if m.entry(1, 1) == 2 {
            TriFinding::new(
                Yes,
                QUADRIC_SECTION_RATIONAL_CURVE,
                "link two skew lines inside the quadric",
            )
        } else if m.entry(1, 2) == 2 {
            TriFinding::new(
                No,
                PLANE_CONIC_EXCLUSION,
                "an integral curve of degree 2 is a plane conic, hence aCM",
            )
        } else {
            TriFinding::new(No, NO_ENTRY_TWO, "no entry equals 2")
        };
    }
    if m.base().has_entry(2) {
        TriFinding::new(
            Yes,
            ENTRY_TWO_CHARACTERIZATION,
            "smooth integral Buchsbaum curve in the linkage class of two skew lines",
        )
    } else {
        TriFinding::new(No, NO_ENTRY_TWO, "an entry equal to 2 is necessary")
    }
}

/// Classify a plane-section degree matrix against every liftability
/// criterion at once.
pub fn classify_plane_section(m: &DegreeMatrix) -> Verdict {
    use rules::*;
    let t = m.t();
    let min_entry = m.base().bottom_left();
    let all_ones_2x3 = t == 2 && m.base().is_all_ones();

    let forced = if min_entry >= 3 {
        Finding::yes(
            MIN_ENTRY_AT_LEAST_3_FORCES_ACM,
            "every generator of the section ideal lifts to the curve",
        )
    } else {
        Finding::no(
            MIN_ENTRY_AT_LEAST_3_FORCES_ACM,
            format!("minimum entry {} is below 3", min_entry),
        )
    };

    let reduced_connected = if min_entry <= 2 && !all_ones_2x3 {
        Finding::yes(
            BDL_CHAIN_CONSTRUCTION,
            "union of complete intersections glued by basic double links",
        )
    } else if all_ones_2x3 {
        Finding::no(
            THREE_GENERIC_POINTS_EXCEPTION,
            "a connected reduced cubic curve is aCM",
        )
    } else {
        Finding::no(MIN_ENTRY_AT_LEAST_3_FORCES_ACM, "forced aCM")
    };

    let disconnected = if min_entry <= 2 {
        Finding::yes(
            DISJOINT_UNION_CONSTRUCTION,
            "disjoint union of two aCM curves",
        )
    } else {
        Finding::no(MIN_ENTRY_AT_LEAST_3_FORCES_ACM, "forced aCM")
    };

    let buchsbaum = if m.base().has_entry(2) {
        Finding::yes(
            ENTRY_TWO_CHARACTERIZATION,
            "curve in the linkage class of two skew lines",
        )
    } else {
        Finding::no(NO_ENTRY_TWO, "an entry equal to 2 is necessary and sufficient")
    };

    Verdict {
        forced_acm_all: forced,
        realizable_reduced_connected_nonacm: reduced_connected,
        realizable_disconnected_nonacm: disconnected,
        realizable_integral_smooth_nonacm: integral_track(m),
        buchsbaum_nonacm: buchsbaum,
        integral_buchsbaum_nonacm: integral_buchsbaum_track(m),
        assumptions: vec![CHAR_ZERO_NOTE.to_string(), ANY_CHAR_NOTE.to_string()],
    }
}

/// Verdict for a general lifting matrix of points in `P^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictPn {
    pub forced_acm: Finding,
    /// Necessary condition only for `n > 2`; exact for `n = 2`.
    pub buchsbaum_possible: Finding,
    pub ambient: u32,
}

/// Classify the lifting matrix `(m_i - d_j)` of a section in `P^n`.
pub fn classify_lifting_matrix(b: &BettiTable) -> VerdictPn {
    use rules::*;
    let n = b.ambient() as i64;
    let grid = b.lifting_grid();
    let min_entry = *grid.last().unwrap().first().unwrap();
    let has_n = grid.iter().flatten().any(|&x| x == n);
    VerdictPn {
        forced_acm: if min_entry > n {
            Finding::yes(
                MIN_ENTRY_AT_LEAST_N_PLUS_1_FORCES_ACM,
                format!("minimum lifting entry {} >= n+1 = {}", min_entry, n + 1),
            )
        } else {
            Finding::no(
                MIN_ENTRY_AT_LEAST_N_PLUS_1_FORCES_ACM,
                format!("minimum lifting entry {} < {}", min_entry, n + 1),
            )
        },
        buchsbaum_possible: if has_n {
            Finding::yes(ENTRY_N_NECESSARY, "an entry equal to n is present")
        } else {
            Finding::no(
                ENTRY_N_NECESSARY,
                "a Buchsbaum non-aCM curve needs a lifting entry equal to n",
            )
        },
        ambient: b.ambient(),
    }
}

/// Verdict for an h-vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HVerdict {
    /// A reduced non-aCM curve with this section h-vector always exists.
    pub realizable_nonacm_reduced: Finding,
    /// It can be taken connected unless the h-vector is `1 + 2z`.
    pub connected_available: Finding,
    /// Realizable by an integral smooth non-aCM curve.
    pub realizable_integral_smooth_nonacm: TriFinding,
    /// Canonical zero-free degree matrix behind the h-vector.
    pub canonical_matrix: DegreeMatrix,
    pub assumptions: Vec<String>,
}

/// Classify an h-vector by inverting it to its canonical zero-free degree
/// matrix and delegating to the matrix rules; matrices whose minimum entry is
/// at least 3 go through the degenerate-row padding, which realizes the same
/// h-vector with a padded matrix of larger size.
pub fn classify_hvector(h: &HVector) -> Result<HVerdict> {
    use rules::*;
    let m = degree_matrix_from_hvector(h)?;
    let is_three_points = h.coeffs() == [1, 2];
    let realizable = Finding::yes(
        BDL_CHAIN_CONSTRUCTION,
        "every section h-vector is realized by a reduced non-aCM curve",
    );
    let connected = if is_three_points {
        Finding::no(
            CONNECTED_UNLESS_THREE_POINTS,
            "only the disjoint union of a plane conic and a line works here",
        )
    } else {
        Finding::yes(CONNECTED_UNLESS_THREE_POINTS, "connected construction available")
    };

    let integral = if !h.is_decreasing_type() {
        TriFinding::new(
            TriState::No,
            DECREASING_TYPE_REQUIRED,
            "sections of integral curves have h-vectors of decreasing type",
        )
    } else if m.base().bottom_left() >= 3 {
        if m.t() == 1 {
            TriFinding::new(
                TriState::No,
                CI_SECTION_FORCES_CI,
                "the h-vector of a CI(a,b) with a >= 3; integral curves carrying it are aCM",
            )
        } else {
            // the padded matrix realizes the same h-vector
            let padded = m.pad_with_degenerate_row().expect("min entry >= 3 allows padding");
            let inner = integral_track(&padded);
            debug_assert!(inner.state.is_yes());
            TriFinding::new(
                inner.state,
                PADDED_MATRIX_CONSTRUCTION,
                "realized through the degenerate-row padding of the canonical matrix",
            )
        }
    } else {
        integral_track(&m)
    };

    Ok(HVerdict {
        realizable_nonacm_reduced: realizable,
        connected_available: connected,
        realizable_integral_smooth_nonacm: integral,
        canonical_matrix: m,
        assumptions: vec![CHAR_ZERO_NOTE.to_string(), ANY_CHAR_NOTE.to_string()],
    })
}

/// Lift status of one generator column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LiftStatus {
    MustLift,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorLiftReport {
    /// One entry per generator column (1-based, leftmost = highest degree).
    pub columns: Vec<ColumnLift>,
    pub buchsbaum: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnLift {
    pub column: usize,
    pub degree: i64,
    pub status: LiftStatus,
    pub rule: String,
}

/// Which minimal generators of the section ideal are forced to lift to the
/// curve ideal.
///
/// General curves: `a[t][j] >= 3` forces the `t+2-j` lowest-degree
/// generators (columns `j..=t+1`) to lift. Buchsbaum curves: column `j`
/// lifts when no entry of column `j` equals 2; moreover `a[1][j] < 2` forces
/// columns `1..=j` to lift.
pub fn generator_lifting(m: &DegreeMatrix, buchsbaum: bool) -> GeneratorLiftReport {
    let t = m.t();
    let table = m.betti();
    let mut must = vec![false; t + 1];
    let mut why = vec![""; t + 1];
    if buchsbaum {
        for j in 1..=t + 1 {
            if (1..=t).all(|i| m.entry(i, j) != 2) {
                must[j - 1] = true;
                why[j - 1] = "column-free-of-2s";
            }
        }
        for j in (1..=t + 1).rev() {
            if m.entry(1, j) < 2 {
                for jj in 1..=j {
                    if !must[jj - 1] {
                        must[jj - 1] = true;
                        why[jj - 1] = "row-one-entry-below-2";
                    }
                }
                break;
            }
        }
    } else {
        // columns j..=t+1 are the t+2-j generators of lowest degrees
        if let Some(j) = (1..=t + 1).find(|&j| m.entry(t, j) >= 3) {
            for jj in j..=t + 1 {
                must[jj - 1] = true;
                why[jj - 1] = "socle-bound-on-low-degrees";
            }
        }
    }
    let columns = (1..=t + 1)
        .map(|j| ColumnLift {
            column: j,
            degree: table.gens()[j - 1],
            status: if must[j - 1] { LiftStatus::MustLift } else { LiftStatus::Undetermined },
            rule: if must[j - 1] { why[j - 1].to_string() } else { "no-forcing-rule".into() },
        })
        .collect();
    GeneratorLiftReport { columns, buchsbaum }
}
