//! Prime ideals above a rational prime `p`, read off from the factorization
//! of the defining polynomial mod `p`, and the residue map onto `F_{p^f}`.
//!
//! An ideal is `(p, g(theta))` for a monic irreducible factor `g` of `f mod p`.
//! This describes a prime of the full ring of integers only when `p` does not
//! divide the index `[O_K : Z[theta]]`; that is checked with Dedekind's
//! criterion and recorded in [`PrimeIdeal::dedekind_certified`]. Reduction is
//! refused at uncertified primes.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use thiserror::Error;

use crate::arith::{common_denominator, is_prime};
use crate::finite_field::{fp_factor, reduce_bigint, FpPoly, ResidueElement, ResidueField};
use crate::number_field::{NfElement, NumberField};
use crate::poly::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
}

/// Why an element could not be mapped into the residue field.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("{element} has a denominator divisible by {p}")]
    NotInLocalization { element: NfElement, p: u64 },
    #[error("Dedekind's criterion fails at {p}; Z[theta] does not describe the primes above it")]
    UncertifiedPrime { p: u64 },
    #[error("element and ideal belong to different number fields")]
    FieldMismatch,
}

/// A prime ideal `(p, g(theta))` together with its residue field.
#[derive(Clone, Debug)]
pub struct PrimeIdeal {
    field: Arc<NumberField>,
    p: u64,
    factor: FpPoly,
    e: u32,
    residue_field: Arc<ResidueField>,
    dedekind_certified: bool,
}

impl PrimeIdeal {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Monic irreducible factor `g` of `f mod p`.
    pub fn factor(&self) -> &FpPoly {
        &self.factor
    }

    /// Ramification index.
    pub fn e(&self) -> u32 {
        self.e
    }

    /// Residue degree.
    pub fn f(&self) -> usize {
        self.residue_field.degree()
    }

    pub fn residue_field(&self) -> &Arc<ResidueField> {
        &self.residue_field
    }

    pub fn dedekind_certified(&self) -> bool {
        self.dedekind_certified
    }

    /// Ordering key `(p, canonical factor order)`.
    pub fn key_cmp(&self, other: &PrimeIdeal) -> Ordering {
        self.p
            .cmp(&other.p)
            .then_with(|| self.factor.canonical_cmp(&other.factor))
    }
}

impl PartialEq for PrimeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.field.min_poly() == other.field.min_poly()
            && self.p == other.p
            && self.factor == other.factor
    }
}

impl Eq for PrimeIdeal {}

/// All prime ideals above `p`, one per irreducible factor of `f mod p`, in
/// canonical factor order.
///
/// With `g` the product of the distinct lifted factors, `h` the lifted
/// cofactor (`g h = f mod p`) and `F = (g h - f) / p`, Dedekind's criterion
/// says `p` does not divide the index iff `gcd(F, g, h) = 1` in `F_p[x]`.
pub fn primes_above(
    field: &Arc<NumberField>,
    p: u64,
    seed: u64,
) -> Result<Vec<PrimeIdeal>, IdealError> {
    if !is_prime(p) {
        return Err(IdealError::NotPrime(p));
    }
    let f = field.min_poly();
    let fbar = FpPoly::from_intpoly(p, f);
    let factors = fp_factor(&fbar, seed).expect("monic polynomial is nonzero mod p");

    let mut g = FpPoly::one(p);
    let mut h = FpPoly::one(p);
    for (factor, e) in &factors {
        g = &g * factor;
        for _ in 1..*e {
            h = &h * factor;
        }
    }
    let gh: IntPoly = g.lift().mul(&h.lift());
    let diff = gh.sub(f);
    let pb = BigInt::from(p);
    let quotient = IntPoly::new(
        diff.coeffs()
            .iter()
            .map(|c| {
                let (q, r) = c.div_rem(&pb);
                debug_assert!(r == BigInt::from(0));
                q
            })
            .collect(),
    );
    let fq = FpPoly::from_intpoly(p, &quotient);
    let certified = fq.gcd(&g).gcd(&h).is_one();

    Ok(factors
        .into_iter()
        .map(|(factor, e)| PrimeIdeal {
            field: Arc::clone(field),
            p,
            residue_field: ResidueField::new(factor.clone())
                .expect("factors from fp_factor are irreducible"),
            factor,
            e,
            dedekind_certified: certified,
        })
        .collect())
}

/// Image of `a` in `A_p / p A_p = F_p[x]/(g)`.
///
/// Writes `a = b/m` with `b` in `Z[theta]` and `m` the common denominator,
/// sends `theta` to the class of `x`, then divides by `m mod p`.
pub fn reduce_element(a: &NfElement, ideal: &PrimeIdeal) -> Result<ResidueElement, ReductionError> {
    if !ideal.dedekind_certified {
        return Err(ReductionError::UncertifiedPrime { p: ideal.p });
    }
    if a.field().min_poly() != ideal.field.min_poly() {
        return Err(ReductionError::FieldMismatch);
    }
    let p = ideal.p;
    let m = common_denominator(a.coeffs());
    let m_mod = reduce_bigint(&m, p);
    if m_mod == 0 {
        return Err(ReductionError::NotInLocalization {
            element: a.clone(),
            p,
        });
    }
    let numer: Vec<u64> = a
        .coeffs()
        .iter()
        .map(|c| {
            let scaled = (c * num_rational::BigRational::from_integer(m.clone())).to_integer();
            reduce_bigint(&scaled, p)
        })
        .collect();
    let rf = &ideal.residue_field;
    let b = rf.element(&FpPoly::new(p, numer));
    if m.is_one() {
        return Ok(b);
    }
    let m_inv = rf.from_u64(m_mod).inv().expect("m is a unit mod p");
    Ok(&b * &m_inv)
}

/// `a` is not in `p A_p`.
pub fn is_nonzero_mod(a: &NfElement, ideal: &PrimeIdeal) -> Result<bool, ReductionError> {
    reduce_element(a, ideal).map(|r| !r.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    fn sqrt3() -> Arc<NumberField> {
        NumberField::new(IntPoly::from_i64s(&[-3, 0, 1])).unwrap()
    }

    #[test]
    fn splitting_of_x2_minus_3() {
        let k = sqrt3();
        let above2 = primes_above(&k, 2, 0).unwrap();
        assert_eq!(above2.len(), 1);
        assert_eq!((above2[0].e(), above2[0].f()), (2, 1));
        assert_eq!(above2[0].factor(), &FpPoly::from_i64s(2, &[1, 1]));
        assert!(above2[0].dedekind_certified());

        let above11 = primes_above(&k, 11, 0).unwrap();
        assert_eq!(above11.len(), 2);
        assert!(above11.iter().all(|i| i.e() == 1 && i.f() == 1));

        let above5 = primes_above(&k, 5, 0).unwrap();
        assert_eq!(above5.len(), 1);
        assert_eq!((above5[0].e(), above5[0].f()), (1, 2));
    }

    #[test]
    fn composite_rejected() {
        assert_eq!(primes_above(&sqrt3(), 15, 0).unwrap_err(), IdealError::NotPrime(15));
    }

    #[test]
    fn index_divisible_prime_is_uncertified() {
        // Z[sqrt5] has index 2 in the ring of integers of Q(sqrt5).
        let k = NumberField::new(IntPoly::from_i64s(&[-5, 0, 1])).unwrap();
        let above2 = primes_above(&k, 2, 0).unwrap();
        assert!(above2.iter().all(|i| !i.dedekind_certified()));
        assert_eq!(
            reduce_element(&k.one(), &above2[0]).unwrap_err(),
            ReductionError::UncertifiedPrime { p: 2 }
        );
        // 5 is ramified but does not divide the index.
        assert!(primes_above(&k, 5, 0).unwrap()[0].dedekind_certified());
    }

    #[test]
    fn residues_above_two() {
        let k = sqrt3();
        let ideal = primes_above(&k, 2, 0).unwrap().remove(0);
        let two_plus = k.from_i64s(&[2, 1]).unwrap();
        assert!(reduce_element(&two_plus, &ideal).unwrap().is_one());
        assert!(reduce_element(&k.one(), &ideal).unwrap().is_one());
        assert!(is_nonzero_mod(&two_plus, &ideal).unwrap());
        assert!(!is_nonzero_mod(&k.from_i64s(&[1, 1]).unwrap(), &ideal).unwrap());
        assert!(!is_nonzero_mod(&k.zero(), &ideal).unwrap());
    }

    #[test]
    fn denominators_divisible_by_p_are_refused() {
        let k = sqrt3();
        let ideals = primes_above(&k, 11, 0).unwrap();
        let ideal = ideals
            .iter()
            .find(|i| i.factor() == &FpPoly::from_i64s(11, &[5, 1]))
            .unwrap();
        let a = k
            .element(vec![Rational::from_integer(0.into()), Rational::new(1.into(), 11.into())])
            .unwrap();
        assert!(matches!(
            reduce_element(&a, ideal),
            Err(ReductionError::NotInLocalization { p: 11, .. })
        ));
    }

    #[test]
    fn denominators_prime_to_p_are_inverted() {
        let k = sqrt3();
        let ideal = primes_above(&k, 5, 0).unwrap().remove(0);
        let half = k.from_rational(Rational::new(1.into(), 2.into()));
        let r = reduce_element(&half, &ideal).unwrap();
        let two = reduce_element(&k.from_int(2), &ideal).unwrap();
        assert!((&r * &two).is_one());
    }
}
