//! Property tests for the structural invariants: canonical-form round trips,
//! the oracle identity, transform bookkeeping, and verdict coherence.

use hburch::buchsbaum::{delta, per_degree_dim_bounds};
use hburch::classify::{classify_hvector, classify_plane_section, TriState};
use hburch::hvector::hvector_from_degree_matrix;
use hburch::transforms::{basic_double_link, ci_link, BdlSpec, CiLinkSpec};
use hburch::{
    check_homogeneous, degree_matrix_from_betti, degree_matrix_from_hvector, hvector_from_betti,
    transpose_antidiagonal, DegreeMatrix, HomogeneousIntMatrix,
};
use proptest::prelude::*;

fn rows_from_offsets(cs: &[i64], rs: &[i64]) -> Vec<Vec<i64>> {
    rs.iter()
        .map(|r| cs.iter().map(|c| r + c).collect())
        .collect()
}

fn arb_homogeneous() -> impl Strategy<Value = HomogeneousIntMatrix> {
    (1usize..=4)
        .prop_flat_map(|t| {
            (
                proptest::collection::vec(-1i64..=5, t + 1),
                proptest::collection::vec(-3i64..=4, t),
            )
        })
        .prop_map(|(mut cs, mut rs)| {
            cs.sort_unstable();
            rs.sort_unstable_by(|a, b| b.cmp(a));
            HomogeneousIntMatrix::new(rows_from_offsets(&cs, &rs)).unwrap()
        })
}

fn arb_degree_matrix() -> impl Strategy<Value = DegreeMatrix> {
    arb_homogeneous().prop_filter_map("positive diagonal", |m| DegreeMatrix::new(m).ok())
}

proptest! {
    #[test]
    fn betti_roundtrip(m in arb_degree_matrix()) {
        let back = degree_matrix_from_betti(&m.betti()).unwrap();
        prop_assert_eq!(back.rows(), m.rows());
    }

    #[test]
    fn completion_recovers_any_homogeneous_matrix(m in arb_homogeneous()) {
        let first_row = m.rows()[0].clone();
        let first_col: Vec<i64> = m.rows().iter().map(|r| r[0]).collect();
        let completed = HomogeneousIntMatrix::complete(&first_row, &first_col).unwrap();
        prop_assert_eq!(completed, m);
    }

    #[test]
    fn numerator_vanishes_at_one(m in arb_degree_matrix()) {
        prop_assert_eq!(hburch::poly::eval_at_one(&m.betti().numerator()), 0);
    }

    #[test]
    fn antidiagonal_transpose_involution(m in arb_homogeneous()) {
        let block = m.rows().to_vec();
        let once = transpose_antidiagonal(&block);
        prop_assert!(check_homogeneous(&once).is_err() || check_homogeneous(&once).unwrap());
        prop_assert_eq!(transpose_antidiagonal(&once), block);
    }

    #[test]
    fn oracle_identity(m in arb_degree_matrix()) {
        let closed = hvector_from_degree_matrix(&m);
        let oracle = hvector_from_betti(&m.betti()).unwrap();
        prop_assert_eq!(closed, oracle);
    }

    #[test]
    fn inversion_roundtrip_without_zero_entries(m in arb_degree_matrix()) {
        prop_assume!(!m.base().has_entry(0));
        let h = hvector_from_degree_matrix(&m);
        prop_assert_eq!(degree_matrix_from_hvector(&h).unwrap(), m);
    }

    #[test]
    fn padding_preserves_hvector(m in arb_degree_matrix()) {
        prop_assume!(m.base().bottom_left() >= 3);
        let padded = m.pad_with_degenerate_row().unwrap();
        prop_assert_eq!(
            hvector_from_degree_matrix(&padded),
            hvector_from_degree_matrix(&m)
        );
    }

    #[test]
    fn uvws_profile_is_ordered(m in arb_degree_matrix()) {
        let h = hvector_from_degree_matrix(&m);
        let p = h.uvws();
        prop_assert!(p.u <= p.v && p.v <= p.s);
        if let Some(w) = p.w {
            prop_assert!(p.v <= w && w < p.s);
        }
    }

    #[test]
    fn verdict_coherence(m in arb_degree_matrix()) {
        let v = classify_plane_section(&m);
        // mutual exclusion
        prop_assert!(!(v.forced_acm_all.holds && v.realizable_reduced_connected_nonacm.holds));
        prop_assert!(!(v.forced_acm_all.holds && v.realizable_disconnected_nonacm.holds));
        // integral-smooth realizable implies reduced-connected realizable
        if v.realizable_integral_smooth_nonacm.state == TriState::Yes {
            prop_assert!(v.realizable_reduced_connected_nonacm.holds);
        }
        // integral Buchsbaum implies Buchsbaum
        if v.integral_buchsbaum_nonacm.state == TriState::Yes {
            prop_assert!(v.buchsbaum_nonacm.holds);
        }
        // Buchsbaum flag matches the block scan and the dimension bound
        prop_assert_eq!(v.buchsbaum_nonacm.holds, !m.base().find_blocks(2).is_empty());
        prop_assert_eq!(v.buchsbaum_nonacm.holds, delta(&m) > 0);
    }

    #[test]
    fn hvector_and_matrix_verdicts_agree_up_to_padding(m in arb_degree_matrix()) {
        prop_assume!(!m.base().has_entry(0) && m.base().is_integral());
        let mv = classify_plane_section(&m).realizable_integral_smooth_nonacm.state;
        let hv = classify_hvector(&hvector_from_degree_matrix(&m))
            .unwrap()
            .realizable_integral_smooth_nonacm
            .state;
        if m.t() == 1 || m.base().bottom_left() <= 2 {
            prop_assert_eq!(hv, mv);
        } else {
            // the degenerate-row padding realizes the h-vector even though
            // the matrix itself forces aCM
            prop_assert_eq!(mv, TriState::No);
            prop_assert_eq!(hv, TriState::Yes);
        }
    }

    #[test]
    fn per_degree_bounds_sum_to_delta(m in arb_degree_matrix()) {
        let bounds = per_degree_dim_bounds(&m);
        prop_assert_eq!(bounds.per_degree.values().sum::<usize>(), bounds.delta);
        let socle = m.betti().socle_degrees();
        for d in bounds.per_degree.keys() {
            prop_assert!(socle.contains(d));
        }
        if bounds.delta > 0 {
            prop_assert!(bounds.alpha_lower <= bounds.alpha_plus_upper);
        }
    }

    #[test]
    fn linkage_numerator_reversal(m in arb_degree_matrix(), df in 0i64..4, dg in 0i64..4) {
        // numerator of the residual equals N_CI(z) - z^c N_X(1/z)
        let b = m.betti();
        let (f, g) = (b.alpha() + df, b.alpha() + dg);
        prop_assume!(f + g > b.max_syz());
        let c = (f + g) as usize;
        let linked = ci_link(&b, &CiLinkSpec::plain(f, g)).unwrap();
        let mut n_ci = vec![0i64; c + 1];
        n_ci[0] = 1;
        n_ci[f as usize] -= 1;
        n_ci[g as usize] -= 1;
        n_ci[c] += 1;
        let expected = hburch::poly::sub(&n_ci, &hburch::poly::reverse_at(&b.numerator(), c));
        prop_assert_eq!(linked.numerator(), expected);
    }

    #[test]
    fn bound_support_matches_table_pairs(m in arb_degree_matrix()) {
        // {d_j - 1 : some m_k - d_j = 2} read off the table equals the
        // block-scan support
        let bounds = per_degree_dim_bounds(&m);
        let b = m.betti();
        let mut from_table: Vec<i64> = b
            .gens()
            .iter()
            .filter(|&&d| b.syz().iter().any(|&mk| mk - d == 2))
            .map(|&d| d - 1)
            .collect();
        from_table.sort_unstable();
        from_table.dedup();
        let from_blocks: Vec<i64> = bounds.per_degree.keys().copied().collect();
        prop_assert_eq!(from_table, from_blocks);
    }

    #[test]
    fn transforms_keep_hilbert_burch_shape(m in arb_degree_matrix(), df in 0i64..4, dg in 0i64..4, s_off in 0i64..4, t_deg in 1i64..5) {
        let b = m.betti();
        let alpha = b.alpha();
        prop_assume!(2 * alpha + df + dg > b.max_syz());
        let linked = ci_link(&b, &CiLinkSpec::plain(alpha + df, alpha + dg)).unwrap();
        prop_assert_eq!(linked.gens().len(), linked.syz().len() + 1);
        let bdl = basic_double_link(&b, &BdlSpec { s: alpha + s_off, t_deg, s_is_min_gen: false }).unwrap();
        prop_assert_eq!(bdl.gens().len(), bdl.syz().len() + 1);
        // double-link degree identity
        prop_assert_eq!(
            hburch::transforms::table_degree(&bdl),
            hburch::transforms::table_degree(&b) + (alpha + s_off) * t_deg
        );
    }
}
