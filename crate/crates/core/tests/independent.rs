mod common;

use common::{all_diagrams, roots_from_cartan, Realization};
use vogan::{cartan_matrix, positive_roots, Family, OracleVectors, VoganDiagram};

fn cartan_rows(family: Family, rank: usize) -> Vec<Vec<i64>> {
    let a = cartan_matrix::<i64>(family, rank).unwrap();
    a.rows().map(|r| r.to_vec()).collect()
}

#[test]
fn positive_roots_match_root_strings() {
    for family in Family::ALL {
        for rank in family.min_rank()..=12 {
            let expected = roots_from_cartan(&cartan_rows(family, rank));
            let got: Vec<Vec<i64>> = positive_roots(family, rank)
                .unwrap()
                .iter()
                .map(|r| r.coeffs().iter().map(|&c| c as i64).collect())
                .collect();
            assert_eq!(got, expected.into_iter().collect::<Vec<_>>(), "{family}{rank}");
        }
    }
}

#[test]
fn cartan_matrix_matches_realization() {
    for family in Family::ALL {
        for rank in family.min_rank()..=10 {
            let r = Realization::new(family, rank);
            let rows = cartan_rows(family, rank);
            for (i, row) in rows.iter().enumerate() {
                for (j, &entry) in row.iter().enumerate() {
                    let (gi, gj) = (&r.simple[i], &r.simple[j]);
                    assert_eq!(
                        entry,
                        2 * common::dot(gi, gj) / common::dot(gi, gi),
                        "{family}{rank} ({i},{j})"
                    );
                }
            }
        }
    }
}

#[test]
fn realization_roots_match_enumeration() {
    for family in Family::ALL {
        for rank in family.min_rank()..=12 {
            let r = Realization::new(family, rank);
            let mut from_basis: Vec<Vec<i64>> =
                r.positive.iter().map(|v| r.coefficients(v)).collect();
            from_basis.sort();
            let enumerated: Vec<Vec<i64>> = positive_roots(family, rank)
                .unwrap()
                .iter()
                .map(|x| x.coeffs().iter().map(|&c| c as i64).collect())
                .collect();
            assert_eq!(from_basis, enumerated, "{family}{rank}");
        }
    }
}

#[test]
fn xi_matches_inner_product_route_exhaustively() {
    for family in Family::ALL {
        for rank in family.min_rank()..=8 {
            let r = Realization::new(family, rank);
            for d in all_diagrams(family, rank) {
                let vectors = OracleVectors::compute(&d).unwrap();
                assert_eq!(vectors.xi, r.xi(&d), "{d}");
            }
        }
    }
}

#[test]
fn xi_matches_inner_product_route_at_larger_rank() {
    for family in Family::ALL {
        let rank = 40;
        let r = Realization::new(family, rank);
        for painted in [vec![1], vec![3, 17, 39], vec![rank - 1, rank], (1..=rank).step_by(3).collect()] {
            let d = VoganDiagram::new(family, rank, painted).unwrap();
            assert_eq!(OracleVectors::compute(&d).unwrap().xi, r.xi(&d), "{d}");
        }
    }
}
