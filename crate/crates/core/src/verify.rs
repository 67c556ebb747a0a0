//! Rebuilds the matrices behind both bounds on a concrete point set and
//! checks their claimed properties exactly.
//!
//! * The evaluation matrix `(f_x(y))` with `f_x(xi) = prod_i (|x - xi|^2 - a_i)`:
//!   modulo 𝔭 it must be invertible on the diagonal and vanish off it, which
//!   makes the `f_x` linearly independent.
//! * The LRS matrix `M = K_j I + A_j`, where `A_j` is the adjacency matrix of
//!   the pairs at squared distance `alpha_j`: its rank is at most
//!   `N = dim P_{s-1}(R^d)`, and its nullity is bounded by the multiplicity of
//!   `-K_j` as an eigenvalue of `A_j`.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::dim_p;
use crate::bounds::{lrs_ratio, modp_certificate, BoundError, ModPCertificate, SearchOutcome};
use crate::geometry::{distance_set, DistanceSet, GeometryError, PointSet};
use crate::linalg::{charpoly_int, rank};
use crate::number_field::NfElement;
use crate::prime_ideal::{reduce_element, PrimeIdeal, ReductionError};

/// Square matrix over the number field, rows and columns indexed by points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalMatrix {
    pub entries: Vec<Vec<NfElement>>,
}

impl EvalMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }
}

/// `entry(x, y) = prod_i (|x - y|^2 - a_i)`, using `0` on the diagonal.
pub fn fx_matrix(points: &PointSet, a_list: &[NfElement]) -> Result<EvalMatrix, GeometryError> {
    if a_list
        .iter()
        .any(|a| a.field().min_poly() != points.field().min_poly())
    {
        return Err(GeometryError::FieldMismatch);
    }
    let n = points.len();
    let field = points.field();
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let dist = points.squared_distance_or_zero(i, j);
                    a_list
                        .iter()
                        .fold(field.one(), |acc, a| &acc * &(&dist - a))
                })
                .collect()
        })
        .collect();
    Ok(EvalMatrix { entries })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternFailure {
    /// A diagonal entry lies in 𝔭.
    DiagonalZero,
    /// An off-diagonal entry is a unit mod 𝔭.
    OffDiagonalNonzero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PatternWitness {
    pub row: usize,
    pub col: usize,
    pub failure: PatternFailure,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PatternCheck {
    pub pass: bool,
    /// First offending entry in row-major order.
    pub witness: Option<PatternWitness>,
}

/// Passes iff every diagonal residue is nonzero and every off-diagonal
/// residue is zero.
pub fn check_congruence_pattern(m: &EvalMatrix, ideal: &PrimeIdeal) -> Result<PatternCheck, ReductionError> {
    for (row, entries) in m.entries.iter().enumerate() {
        for (col, entry) in entries.iter().enumerate() {
            let zero = reduce_element(entry, ideal)?.is_zero();
            let failure = match (row == col, zero) {
                (true, true) => Some(PatternFailure::DiagonalZero),
                (false, false) => Some(PatternFailure::OffDiagonalNonzero),
                _ => None,
            };
            if let Some(failure) = failure {
                return Ok(PatternCheck {
                    pass: false,
                    witness: Some(PatternWitness { row, col, failure }),
                });
            }
        }
    }
    Ok(PatternCheck {
        pass: true,
        witness: None,
    })
}

/// One distance per residue class mod 𝔭, first in distance order.
pub fn residue_representatives(distances: &DistanceSet, ideal: &PrimeIdeal) -> Result<Vec<NfElement>, ReductionError> {
    let mut seen = Vec::new();
    let mut reps = Vec::new();
    for alpha in distances.values() {
        let r = reduce_element(alpha, ideal)?;
        if !seen.contains(&r) {
            seen.push(r);
            reps.push(alpha.clone());
        }
    }
    Ok(reps)
}

/// `(0,1)` matrix of the pairs at squared distance `alpha_j`.
pub fn adjacency_matrix(points: &PointSet, distances: &DistanceSet, j: usize) -> Result<Vec<Vec<BigInt>>, BoundError> {
    let s = distances.s();
    if j == 0 || j > s {
        return Err(BoundError::IndexOutOfRange { j, s });
    }
    let target = &distances.values()[j - 1];
    let n = points.len();
    Ok((0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    if x != y && points.squared_distance_or_zero(x, y) == *target {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect())
}

/// `M = K_j I + A_j`.
pub fn lrs_matrix(points: &PointSet, j: usize) -> Result<EvalMatrix, BoundError> {
    let distances = distance_set(points)?;
    let k = lrs_ratio(&distances, j)?;
    let adj = adjacency_matrix(points, &distances, j)?;
    let field = points.field();
    let entries = adj
        .iter()
        .enumerate()
        .map(|(x, row)| {
            row.iter()
                .enumerate()
                .map(|(y, a)| {
                    if x == y {
                        k.clone()
                    } else if a.is_one() {
                        field.one()
                    } else {
                        field.zero()
                    }
                })
                .collect()
        })
        .collect();
    Ok(EvalMatrix { entries })
}

/// Exact rank over the number field.
pub fn rank_over_field(m: &EvalMatrix) -> usize {
    rank(&m.entries)
}

/// Multiplicity of `lambda` as a root of the characteristic polynomial of
/// the integer matrix `a`: the number of times the minimal polynomial of
/// `lambda` divides it.
pub fn eigen_multiplicity(a: &[Vec<BigInt>], lambda: &NfElement) -> usize {
    let chi = charpoly_int(a).to_qpoly();
    let m = lambda.min_poly();
    let mut rest = chi;
    let mut count = 0;
    while let Some(q) = rest.exact_div(&m) {
        if rest.degree() == Some(0) {
            break;
        }
        rest = q;
        count += 1;
    }
    count
}

#[derive(Clone, Debug)]
pub struct CongruenceVerification {
    pub ideal: PrimeIdeal,
    pub a_list: Vec<NfElement>,
    pub check: PatternCheck,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrsVerification {
    pub j: usize,
    pub k_j: NfElement,
    pub rank: usize,
    /// `N = dim P_{s-1}(R^d)`.
    pub n: BigUint,
    pub rank_ok: bool,
    /// Multiplicity of `-K_j` as an eigenvalue of `A_j`.
    pub eigen_multiplicity: usize,
    /// `|X| - rank(M) <= eigen_multiplicity`.
    pub nullity_ok: bool,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    /// Evaluation-matrix check at the best certificate's ideal, if any.
    pub congruence: Option<CongruenceVerification>,
    pub lrs: Vec<LrsVerification>,
}

/// The congruence-pattern check for one certificate, using its residue-class
/// representatives as `a_1..a_s'`.
pub fn verify_certificate(points: &PointSet, cert: &ModPCertificate) -> Result<CongruenceVerification, ReductionError> {
    let m = fx_matrix(points, &cert.representatives).map_err(|_| ReductionError::FieldMismatch)?;
    let check = check_congruence_pattern(&m, &cert.ideal)?;
    Ok(CongruenceVerification {
        ideal: cert.ideal.clone(),
        a_list: cert.representatives.clone(),
        check,
    })
}

/// Rank and eigenvalue checks of `K_j I + A_j` for every `j`.
pub fn verify_lrs(points: &PointSet) -> Result<Vec<LrsVerification>, BoundError> {
    let distances = distance_set(points)?;
    let s = distances.s();
    if s < 2 {
        return Ok(Vec::new());
    }
    let n = dim_p(points.dim() as u64, s as u64 - 1).ok_or(BoundError::ZeroDimension)?;
    (1..=s)
        .map(|j| {
            let m = lrs_matrix(points, j)?;
            let k_j = m.entries[0][0].clone();
            let r = rank_over_field(&m);
            let adj = adjacency_matrix(points, &distances, j)?;
            let mult = eigen_multiplicity(&adj, &-&k_j);
            Ok(LrsVerification {
                j,
                k_j,
                rank: r,
                rank_ok: BigUint::from(r) <= n,
                n: n.clone(),
                eigen_multiplicity: mult,
                nullity_ok: points.len() - r <= mult,
            })
        })
        .collect()
}

/// Full verification for a point set, given a finished certificate search.
pub fn verify_point_set(points: &PointSet, search: &SearchOutcome) -> Result<VerificationReport, BoundError> {
    let congruence = search.best().map(|cert| {
        verify_certificate(points, cert).expect("certificate residues were already computed at this ideal")
    });
    Ok(VerificationReport {
        congruence,
        lrs: verify_lrs(points)?,
    })
}

/// Evaluation-matrix check at an arbitrary ideal, with the residue-class
/// representatives of `D(X)` at that ideal. Passes exactly when
/// [`modp_certificate`] accepts the ideal.
pub fn congruence_at(points: &PointSet, ideal: &PrimeIdeal) -> Result<PatternCheck, ReductionError> {
    let distances = distance_set(points).map_err(|_| ReductionError::FieldMismatch)?;
    let reps = residue_representatives(&distances, ideal)?;
    let m = fx_matrix(points, &reps).map_err(|_| ReductionError::FieldMismatch)?;
    let check = check_congruence_pattern(&m, ideal)?;
    debug_assert_eq!(check.pass, modp_certificate(&distances, ideal, points.dim()).is_ok());
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn eigen_multiplicities_by_hand() {
        use crate::number_field::NumberField;
        use crate::poly::IntPoly;
        let q = NumberField::new(IntPoly::from_i64s(&[-1, 1])).unwrap();
        let c4 = int_matrix(&[&[0, 1, 0, 1], &[1, 0, 1, 0], &[0, 1, 0, 1], &[1, 0, 1, 0]]);
        assert_eq!(eigen_multiplicity(&c4, &q.from_int(-2)), 1);
        assert_eq!(eigen_multiplicity(&c4, &q.from_int(0)), 2);
        assert_eq!(eigen_multiplicity(&c4, &q.from_int(1)), 0);
        let matching = int_matrix(&[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]]);
        assert_eq!(eigen_multiplicity(&matching, &q.from_int(1)), 2);
        assert_eq!(eigen_multiplicity(&matching, &q.from_int(-1)), 2);
        let zero = int_matrix(&[&[0, 0], &[0, 0]]);
        assert_eq!(eigen_multiplicity(&zero, &q.from_int(0)), 2);
    }

    #[test]
    fn irrational_eigenvalue_multiplicity() {
        use crate::number_field::NumberField;
        use crate::poly::IntPoly;
        // The 5-cycle has eigenvalues 2, (-1 +- sqrt5)/2 twice each.
        let k = NumberField::new(IntPoly::from_i64s(&[-5, 0, 1])).unwrap();
        let c5: Vec<Vec<BigInt>> = (0..5)
            .map(|i| {
                (0..5)
                    .map(|j| BigInt::from(i64::from((i + 1) % 5 == j || (j + 1) % 5 == i)))
                    .collect()
            })
            .collect();
        let half = crate::arith::Rational::new(1.into(), 2.into());
        let lam = k.element(vec![-half.clone(), half]).unwrap();
        assert_eq!(eigen_multiplicity(&c5, &lam), 2);
        assert_eq!(eigen_multiplicity(&c5, &k.from_int(2)), 1);
    }

    use crate::arith::Rational;
    use crate::bounds::{certify_search, SearchConfig};
    use crate::number_field::NumberField;
    use crate::poly::IntPoly;
    use crate::prime_ideal::primes_above;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn kite() -> PointSet {
        let k = NumberField::new(IntPoly::from_i64s(&[-3, 0, 1])).unwrap();
        let c = |a: Rational, b: Rational| k.element(vec![a, b]).unwrap();
        let z = || q(0, 1);
        let pts = vec![
            vec![c(z(), z()), c(z(), z())],
            vec![c(q(1, 1), z()), c(z(), z())],
            vec![c(z(), q(-1, 2)), c(q(1, 2), z())],
            vec![c(z(), q(-1, 2)), c(q(-1, 2), z())],
        ];
        PointSet::new(k, 2, pts).unwrap()
    }

    fn unit_square() -> PointSet {
        let k = NumberField::new(IntPoly::from_i64s(&[-1, 1])).unwrap();
        let pt = |a: i64, b: i64| vec![k.from_int(a), k.from_int(b)];
        PointSet::new(k.clone(), 2, vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]).unwrap()
    }

    #[test]
    fn fx_entries_for_the_kite() {
        let x = kite();
        let k = x.field().clone();
        let m = fx_matrix(&x, &[k.one()]).unwrap();
        assert_eq!(m.size(), 4);
        assert!((0..4).all(|i| m.entries[i][i] == k.from_int(-1)));
        assert!(m.entries[0][1].is_zero());
        assert_eq!(m.entries[1][2], k.from_i64s(&[1, 1]).unwrap());
        let other = NumberField::new(IntPoly::from_i64s(&[-5, 0, 1])).unwrap();
        assert_eq!(fx_matrix(&x, &[other.one()]).unwrap_err(), GeometryError::FieldMismatch);
    }

    #[test]
    fn congruence_pattern_examples() {
        let x = kite();
        let k = x.field().clone();
        let above2 = primes_above(&k, 2, 0).unwrap().remove(0);
        let m = fx_matrix(&x, &[k.one()]).unwrap();
        assert!(check_congruence_pattern(&m, &above2).unwrap().pass);

        let sq = unit_square();
        let r = sq.field().clone();
        let above5 = primes_above(&r, 5, 0).unwrap().remove(0);
        let both = fx_matrix(&sq, &[r.from_int(1), r.from_int(2)]).unwrap();
        assert!(check_congruence_pattern(&both, &above5).unwrap().pass);
        let ones = fx_matrix(&sq, &[r.from_int(1)]).unwrap();
        let fail = check_congruence_pattern(&ones, &above5).unwrap();
        assert!(!fail.pass);
        assert_eq!(
            fail.witness,
            Some(PatternWitness {
                row: 0,
                col: 2,
                failure: PatternFailure::OffDiagonalNonzero
            })
        );
    }

    #[test]
    fn congruence_matches_certificate_validity() {
        for x in [kite(), unit_square()] {
            for p in [2u64, 3, 5, 7, 11, 13] {
                for ideal in primes_above(x.field(), p, 0).unwrap() {
                    let d = distance_set(&x).unwrap();
                    let valid = modp_certificate(&d, &ideal, x.dim()).is_ok();
                    assert_eq!(congruence_at(&x, &ideal).unwrap().pass, valid, "p = {p}");
                }
            }
        }
        let sq = unit_square();
        let above2 = primes_above(sq.field(), 2, 0).unwrap().remove(0);
        let w = congruence_at(&sq, &above2).unwrap().witness.unwrap();
        assert_eq!(w.failure, PatternFailure::DiagonalZero);
    }

    #[test]
    fn lrs_matrices_of_the_unit_square() {
        let sq = unit_square();
        let r = sq.field().clone();
        let m1 = lrs_matrix(&sq, 1).unwrap();
        assert!((0..4).all(|i| m1.entries[i][i] == r.from_int(2)));
        assert_eq!(rank_over_field(&m1), 3);
        let m2 = lrs_matrix(&sq, 2).unwrap();
        assert!((0..4).all(|i| m2.entries[i][i] == r.from_int(-1)));
        assert_eq!(rank_over_field(&m2), 2);
        assert!(matches!(lrs_matrix(&sq, 3), Err(BoundError::IndexOutOfRange { j: 3, s: 2 })));
        let id = EvalMatrix {
            entries: (0..3)
                .map(|i| (0..3).map(|j| if i == j { r.one() } else { r.zero() }).collect())
                .collect(),
        };
        assert_eq!(rank_over_field(&id), 3);
    }

    #[test]
    fn lrs_matrix_of_the_kite() {
        let x = kite();
        let k = x.field().clone();
        let m = lrs_matrix(&x, 1).unwrap();
        assert_eq!(m.entries[0][0], k.element(vec![q(1, 2), q(1, 2)]).unwrap());
    }

    #[test]
    fn full_verification() {
        let cfg = SearchConfig { prime_limit: 50, seed: 0 };
        for x in [kite(), unit_square()] {
            let search = certify_search(&distance_set(&x).unwrap(), 2, &cfg);
            let report = verify_point_set(&x, &search).unwrap();
            assert!(report.congruence.unwrap().check.pass);
            assert_eq!(report.lrs.len(), 2);
            for v in &report.lrs {
                assert!(v.rank_ok && v.nullity_ok);
                assert_eq!(v.n, BigUint::from(4u32));
            }
        }
        let sq = verify_lrs(&unit_square()).unwrap();
        assert_eq!(
            sq.iter().map(|v| (v.rank, v.eigen_multiplicity)).collect::<Vec<_>>(),
            vec![(3, 1), (2, 2)]
        );
    }
}
