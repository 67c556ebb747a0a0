//! Upper bounds on `|X|` for an s-distance set `X` in `R^d`.
//!
//! * Absolute bound: `|X| <= C(d+s, s)`.
//! * Mod-𝔭 bound: if all squared distances are nonzero modulo a prime ideal
//!   𝔭 and occupy `s'` residue classes, then `|X| <= dim P_{s'}(R^d)`. The
//!   distinct residues themselves serve as the representatives `a_1..a_s'`.
//! * LRS ratios `K_j = prod_{i != j} a_i / (a_i - a_j)`, `i, j` in `1..=s`:
//!   with `N = dim P_{s-1}(R^d)`, a non-integral `K_j` gives `|X| <= N`, and
//!   when every `K_j` is integral of maximal degree `t > 1`,
//!   `|X| < N + (N+1)/(t-1)`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

use crate::arith::{binomial, dim_p, largest_integer_below, primes_up_to, Rational};
use crate::finite_field::{FpPoly, ResidueElement};
use crate::geometry::{distance_set, DistanceSet, GeometryError, PointSet};
use crate::number_field::NfElement;
use crate::poly::QPoly;
use crate::prime_ideal::{primes_above, reduce_element, PrimeIdeal, ReductionError};

pub const DEFAULT_PRIME_LIMIT: u64 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub prime_limit: u64,
    /// Seed for the equal-degree splitting in `F_p` factorization.
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            prime_limit: DEFAULT_PRIME_LIMIT,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("LRS ratios need at least two distances, got {0}")]
    TooFewDistances(usize),
    #[error("distance index {j} is outside 1..={s}")]
    IndexOutOfRange { j: usize, s: usize },
}

/// Why an ideal does not yield a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Rejection {
    #[error("{alpha} is zero modulo the ideal")]
    ZeroResidue { alpha: NfElement },
    #[error("{alpha} is not visibly in the localization (denominator divisible by p)")]
    NotInLocalization { alpha: NfElement },
    #[error("Dedekind's criterion fails at p = {p}")]
    UncertifiedPrime { p: u64 },
    #[error("distances and ideal belong to different number fields")]
    FieldMismatch,
    #[error("dimension must be positive")]
    ZeroDimension,
}

impl From<ReductionError> for Rejection {
    fn from(e: ReductionError) -> Self {
        match e {
            ReductionError::NotInLocalization { element, .. } => {
                Rejection::NotInLocalization { alpha: element }
            }
            ReductionError::UncertifiedPrime { p } => Rejection::UncertifiedPrime { p },
            ReductionError::FieldMismatch => Rejection::FieldMismatch,
        }
    }
}

/// A verified instance of the mod-𝔭 bound.
#[derive(Clone, Debug)]
pub struct ModPCertificate {
    pub ideal: PrimeIdeal,
    /// `(alpha, alpha mod 𝔭)` for every distance, in distance order.
    pub residues: Vec<(NfElement, ResidueElement)>,
    /// First distance of each residue class.
    pub representatives: Vec<NfElement>,
    /// Number of distinct residues.
    pub s_eff: usize,
    /// `dim P_{s_eff}(R^d)`.
    pub bound: BigUint,
    /// The known cardinality equals `bound`.
    pub tight: bool,
}

impl ModPCertificate {
    pub fn mark_tight(&mut self, cardinality: Option<usize>) {
        self.tight = cardinality.is_some_and(|n| BigUint::from(n) == self.bound);
    }

    /// Ordering `(bound, p, factor)`.
    pub fn rank_cmp(&self, other: &ModPCertificate) -> Ordering {
        self.bound
            .cmp(&other.bound)
            .then_with(|| self.ideal.key_cmp(&other.ideal))
    }
}

/// Checks the mod-𝔭 hypotheses for `distances` at `ideal` and computes the
/// resulting bound.
pub fn modp_certificate(
    distances: &DistanceSet,
    ideal: &PrimeIdeal,
    d: usize,
) -> Result<ModPCertificate, Rejection> {
    if d == 0 {
        return Err(Rejection::ZeroDimension);
    }
    if !ideal.dedekind_certified() {
        return Err(Rejection::UncertifiedPrime { p: ideal.p() });
    }
    let mut residues = Vec::with_capacity(distances.s());
    for alpha in distances.values() {
        let r = reduce_element(alpha, ideal)?;
        if r.is_zero() {
            return Err(Rejection::ZeroResidue {
                alpha: alpha.clone(),
            });
        }
        residues.push((alpha.clone(), r));
    }
    let mut classes: Vec<&ResidueElement> = Vec::new();
    let mut representatives = Vec::new();
    for (alpha, r) in &residues {
        if !classes.contains(&r) {
            classes.push(r);
            representatives.push(alpha.clone());
        }
    }
    let s_eff = classes.len();
    let bound = dim_p(d as u64, s_eff as u64).expect("d is positive");
    Ok(ModPCertificate {
        ideal: ideal.clone(),
        residues,
        representatives,
        s_eff,
        bound,
        tight: false,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkipReason {
    UncertifiedPrime,
    NotInLocalization { alpha: NfElement },
    ZeroResidue { alpha: NfElement },
}

/// An ideal the search looked at and could not use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkippedIdeal {
    pub p: u64,
    pub factor: FpPoly,
    pub reason: SkipReason,
}

/// Everything found at one rational prime.
#[derive(Clone, Debug)]
pub struct PrimeOutcome {
    pub certificates: Vec<ModPCertificate>,
    pub skipped: Vec<SkippedIdeal>,
}

/// Runs [`modp_certificate`] at every ideal above `p`.
pub fn search_prime(distances: &DistanceSet, d: usize, p: u64, seed: u64) -> PrimeOutcome {
    let mut out = PrimeOutcome {
        certificates: Vec::new(),
        skipped: Vec::new(),
    };
    let Ok(ideals) = primes_above(distances.field(), p, seed) else {
        return out;
    };
    for ideal in ideals {
        let skip = |reason| SkippedIdeal {
            p,
            factor: ideal.factor().clone(),
            reason,
        };
        match modp_certificate(distances, &ideal, d) {
            Ok(cert) => out.certificates.push(cert),
            Err(Rejection::UncertifiedPrime { .. }) => out.skipped.push(skip(SkipReason::UncertifiedPrime)),
            Err(Rejection::NotInLocalization { alpha }) => {
                out.skipped.push(skip(SkipReason::NotInLocalization { alpha }))
            }
            Err(Rejection::ZeroResidue { alpha }) => out.skipped.push(skip(SkipReason::ZeroResidue { alpha })),
            Err(Rejection::FieldMismatch | Rejection::ZeroDimension) => {}
        }
    }
    out
}

/// Result of a certificate search over all primes up to a limit.
#[derive(Clone, Debug, Default)]
pub struct SearchOutcome {
    /// Sorted by `(bound, p, factor)`.
    pub all: Vec<ModPCertificate>,
    /// Sorted by `(p, factor)`.
    pub skipped: Vec<SkippedIdeal>,
}

impl SearchOutcome {
    /// Merges per-prime results into canonical order, independent of the
    /// order the parts arrive in.
    pub fn merge<I: IntoIterator<Item = PrimeOutcome>>(parts: I) -> SearchOutcome {
        let mut out = SearchOutcome::default();
        for part in parts {
            out.all.extend(part.certificates);
            out.skipped.extend(part.skipped);
        }
        out.all.sort_by(ModPCertificate::rank_cmp);
        out.skipped
            .sort_by(|a, b| a.p.cmp(&b.p).then_with(|| a.factor.canonical_cmp(&b.factor)));
        out
    }

    /// Smallest bound, ties broken by smaller `p` then factor order.
    pub fn best(&self) -> Option<&ModPCertificate> {
        self.all.first()
    }

    pub fn mark_tight(&mut self, cardinality: Option<usize>) {
        for cert in &mut self.all {
            cert.mark_tight(cardinality);
        }
    }

    /// Primes with at least one ideal skipped for `pred`.
    fn primes_where(&self, pred: impl Fn(&SkipReason) -> bool) -> Vec<u64> {
        let mut ps: Vec<u64> = self
            .skipped
            .iter()
            .filter(|s| pred(&s.reason))
            .map(|s| s.p)
            .collect();
        ps.dedup();
        ps
    }
}

/// Tries every ideal above every prime `<= cfg.prime_limit`.
pub fn certify_search(distances: &DistanceSet, d: usize, cfg: &SearchConfig) -> SearchOutcome {
    SearchOutcome::merge(
        primes_up_to(cfg.prime_limit)
            .into_iter()
            .map(|p| search_prime(distances, d, p, cfg.seed)),
    )
}

/// `K_j = prod_{i != j} a_i / (a_i - a_j)` with `j` in `1..=s`.
pub fn lrs_ratio(distances: &DistanceSet, j: usize) -> Result<NfElement, BoundError> {
    let s = distances.s();
    if s < 2 {
        return Err(BoundError::TooFewDistances(s));
    }
    if j == 0 || j > s {
        return Err(BoundError::IndexOutOfRange { j, s });
    }
    let field = distances.field();
    let alpha = distances.values();
    let aj = &alpha[j - 1];
    let mut num = field.one();
    let mut den = field.one();
    for (i, ai) in alpha.iter().enumerate() {
        if i == j - 1 {
            continue;
        }
        num = &num * ai;
        den = &den * &(ai - aj);
    }
    Ok(num
        .checked_div(&den)
        .expect("distinct distances give a nonzero denominator"))
}

#[derive(Clone, Debug)]
pub struct LrsRatio {
    pub j: usize,
    pub value: NfElement,
    pub min_poly: QPoly,
    pub is_integer: bool,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LrsBound {
    /// Some `K_j` is not an algebraic integer: `|X| <= N`.
    NonIntegral { bound: BigUint },
    /// All `K_j` integral, maximal degree `t > 1`: `|X| < strict_below`,
    /// i.e. `|X| <= bound`.
    DegreeRefined {
        t: usize,
        strict_below: Rational,
        bound: BigUint,
    },
    /// All `K_j` are rational integers; no upper bound follows.
    ThresholdOnly,
}

/// `|X| >= threshold` forces every `K_j` to be an algebraic integer of degree
/// at most `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrsThreshold {
    pub t: usize,
    pub threshold: Rational,
    /// Whether the computed ratios meet the conclusion for this `t`.
    pub satisfied: bool,
}

#[derive(Clone, Debug)]
pub struct LrsReport {
    pub s: usize,
    /// `N = dim P_{s-1}(R^d)`.
    pub n: BigUint,
    pub ratios: Vec<LrsRatio>,
    /// Maximal degree of the `K_j` when all are integral.
    pub t: Option<usize>,
    pub bound: LrsBound,
    /// `(t, N + (N+1)/t)` for `t = 1..=[K:Q]`.
    pub thresholds: Vec<LrsThreshold>,
}

impl LrsReport {
    pub fn bound_value(&self) -> Option<&BigUint> {
        match &self.bound {
            LrsBound::NonIntegral { bound } | LrsBound::DegreeRefined { bound, .. } => Some(bound),
            LrsBound::ThresholdOnly => None,
        }
    }
}

fn biguint_to_rational(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

pub fn lrs_report(distances: &DistanceSet, d: usize) -> Result<LrsReport, BoundError> {
    if d == 0 {
        return Err(BoundError::ZeroDimension);
    }
    let s = distances.s();
    if s < 2 {
        return Err(BoundError::TooFewDistances(s));
    }
    let n = dim_p(d as u64, s as u64 - 1).expect("d is positive");
    let ratios: Vec<LrsRatio> = (1..=s)
        .map(|j| {
            let value = lrs_ratio(distances, j)?;
            let min_poly = value.min_poly();
            Ok(LrsRatio {
                j,
                is_integer: min_poly.has_integer_coeffs(),
                degree: min_poly.degree().unwrap_or(0),
                min_poly,
                value,
            })
        })
        .collect::<Result<_, BoundError>>()?;

    let all_integral = ratios.iter().all(|r| r.is_integer);
    let t = all_integral.then(|| ratios.iter().map(|r| r.degree).max().unwrap_or(1));
    let n_rat = biguint_to_rational(&n);
    let bound = match t {
        None => LrsBound::NonIntegral { bound: n.clone() },
        Some(1) => LrsBound::ThresholdOnly,
        Some(t) => {
            let strict_below = &n_rat + (&n_rat + Rational::from_integer(1.into())) / Rational::from_integer(BigInt::from(t - 1));
            let bound = largest_integer_below(&strict_below)
                .to_biguint()
                .expect("bound is positive");
            LrsBound::DegreeRefined {
                t,
                strict_below,
                bound,
            }
        }
    };
    let thresholds = (1..=distances.field().degree())
        .map(|tt| LrsThreshold {
            t: tt,
            threshold: &n_rat + (&n_rat + Rational::from_integer(1.into())) / Rational::from_integer(BigInt::from(tt)),
            satisfied: t.is_some_and(|t| t <= tt),
        })
        .collect();
    Ok(LrsReport {
        s,
        n,
        ratios,
        t,
        bound,
        thresholds,
    })
}

/// True iff every distance is nonzero mod 𝔭 and two of them are congruent.
/// In that case some `K_j` cannot be an algebraic integer.
pub fn congruent_pair_obstruction(
    distances: &DistanceSet,
    ideal: &PrimeIdeal,
) -> Result<bool, ReductionError> {
    let residues = distances
        .values()
        .iter()
        .map(|a| reduce_element(a, ideal))
        .collect::<Result<Vec<_>, _>>()?;
    if residues.iter().any(ResidueElement::is_zero) {
        return Ok(false);
    }
    Ok(residues
        .iter()
        .enumerate()
        .any(|(i, r)| residues[i + 1..].contains(r)))
}

/// What a report is computed from.
#[derive(Clone, Debug)]
pub enum BoundInput {
    Points(PointSet),
    Distances {
        set: DistanceSet,
        dim: usize,
        cardinality: Option<usize>,
    },
}

impl BoundInput {
    pub fn dim(&self) -> usize {
        match self {
            BoundInput::Points(x) => x.dim(),
            BoundInput::Distances { dim, .. } => *dim,
        }
    }

    pub fn cardinality(&self) -> Option<usize> {
        match self {
            BoundInput::Points(x) => Some(x.len()),
            BoundInput::Distances { cardinality, .. } => *cardinality,
        }
    }

    pub fn distance_set(&self) -> Result<DistanceSet, BoundError> {
        match self {
            BoundInput::Points(x) => Ok(distance_set(x)?),
            BoundInput::Distances { set, .. } => Ok(set.clone()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundSource {
    Absolute,
    ModP,
    Lrs,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Warning {
    /// The defining polynomial is not known to be irreducible.
    UnverifiedIrreducibility,
    /// Primes skipped because Dedekind's criterion fails there.
    UncertifiedPrimes(Vec<u64>),
    /// Primes skipped because some distance has a denominator divisible by them.
    NotInLocalization(Vec<u64>),
    /// The stated cardinality exceeds a proven bound, so no such set exists.
    CardinalityExceedsBound { cardinality: usize, bound: BigUint },
}

#[derive(Clone, Debug)]
pub struct BoundReport {
    pub d: usize,
    pub s: usize,
    pub cardinality: Option<usize>,
    pub distances: DistanceSet,
    /// `C(d+s, s)`.
    pub absolute_bound: BigUint,
    pub modp: SearchOutcome,
    /// Present when `s >= 2`.
    pub lrs: Option<LrsReport>,
    pub best_bound: BigUint,
    pub best_source: BoundSource,
    pub tight: bool,
    pub warnings: Vec<Warning>,
}

/// Certificate search, LRS analysis and the minimum of all applicable bounds.
pub fn combined_report(input: &BoundInput, cfg: &SearchConfig) -> Result<BoundReport, BoundError> {
    let distances = input.distance_set()?;
    let search = certify_search(&distances, input.dim(), cfg);
    assemble_report(input, distances, search)
}

/// [`combined_report`] with the certificate search already done.
pub fn assemble_report(
    input: &BoundInput,
    distances: DistanceSet,
    mut modp: SearchOutcome,
) -> Result<BoundReport, BoundError> {
    let d = input.dim();
    if d == 0 {
        return Err(BoundError::ZeroDimension);
    }
    let s = distances.s();
    let cardinality = input.cardinality();
    let absolute_bound = binomial((d + s) as u64, s as i64);
    modp.mark_tight(cardinality);
    let lrs = if s >= 2 {
        Some(lrs_report(&distances, d)?)
    } else {
        None
    };

    let mut best_bound = absolute_bound.clone();
    let mut best_source = BoundSource::Absolute;
    let candidates = [
        (BoundSource::ModP, modp.best().map(|c| &c.bound)),
        (BoundSource::Lrs, lrs.as_ref().and_then(LrsReport::bound_value)),
    ];
    for (source, value) in candidates {
        if let Some(v) = value {
            if *v < best_bound {
                best_bound = v.clone();
                best_source = source;
            }
        }
    }

    let mut warnings = Vec::new();
    if !distances.field().is_certified() {
        warnings.push(Warning::UnverifiedIrreducibility);
    }
    let uncertified = modp.primes_where(|r| *r == SkipReason::UncertifiedPrime);
    if !uncertified.is_empty() {
        warnings.push(Warning::UncertifiedPrimes(uncertified));
    }
    let not_local = modp.primes_where(|r| matches!(r, SkipReason::NotInLocalization { .. }));
    if !not_local.is_empty() {
        warnings.push(Warning::NotInLocalization(not_local));
    }
    if let Some(n) = cardinality {
        if BigUint::from(n) > best_bound {
            warnings.push(Warning::CardinalityExceedsBound {
                cardinality: n,
                bound: best_bound.clone(),
            });
        }
    }
    let tight = cardinality.is_some_and(|n| BigUint::from(n) == best_bound);

    Ok(BoundReport {
        d,
        s,
        cardinality,
        distances,
        absolute_bound,
        modp,
        lrs,
        best_bound,
        best_source,
        tight,
        warnings,
    })
}

/// `dim P_s(R^d)` for `s = 0..=max_s`.
pub fn dim_table(d: usize, max_s: usize) -> Option<Vec<(usize, BigUint)>> {
    (0..=max_s)
        .map(|s| dim_p(d as u64, s as u64).map(|v| (s, v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number_field::NumberField;
    use crate::poly::IntPoly;
    use alloc::sync::Arc;
    use alloc::vec;

    fn field(coeffs: &[i64]) -> Arc<NumberField> {
        NumberField::new(IntPoly::from_i64s(coeffs)).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    /// `{1, 2 + t}` over `x^2 - 3`.
    fn kite_distances() -> DistanceSet {
        let k = field(&[-3, 0, 1]);
        DistanceSet::direct(k.clone(), vec![k.one(), k.from_i64s(&[2, 1]).unwrap()]).unwrap()
    }

    /// `{1, (3 + t)/2}` over `x^2 - 5`.
    fn pentagon_distances() -> DistanceSet {
        let k = field(&[-5, 0, 1]);
        let phi2 = k.element(vec![q(3, 2), q(1, 2)]).unwrap();
        DistanceSet::direct(k.clone(), vec![k.one(), phi2]).unwrap()
    }

    fn rational_distances(values: &[i64]) -> DistanceSet {
        let k = field(&[-1, 1]);
        DistanceSet::direct(k.clone(), values.iter().map(|&v| k.from_int(v)).collect()).unwrap()
    }

    fn ideal_above(d: &DistanceSet, p: u64) -> PrimeIdeal {
        primes_above(d.field(), p, 0).unwrap().remove(0)
    }

    #[test]
    fn certificate_examples() {
        let d = kite_distances();
        let c2 = modp_certificate(&d, &ideal_above(&d, 2), 2).unwrap();
        assert_eq!((c2.s_eff, c2.bound.clone()), (1, BigUint::from(4u32)));
        assert_eq!(c2.representatives, vec![d.values()[0].clone()]);
        let c3 = modp_certificate(&d, &ideal_above(&d, 3), 2).unwrap();
        assert_eq!((c3.s_eff, c3.bound), (2, BigUint::from(9u32)));

        let two = rational_distances(&[2]);
        assert_eq!(
            modp_certificate(&two, &ideal_above(&two, 2), 3).unwrap_err(),
            Rejection::ZeroResidue { alpha: two.values()[0].clone() }
        );
    }

    #[test]
    fn uncertified_and_nonlocal_rejections() {
        let d = pentagon_distances();
        assert_eq!(
            modp_certificate(&d, &ideal_above(&d, 2), 2).unwrap_err(),
            Rejection::UncertifiedPrime { p: 2 }
        );
        let k = field(&[-1, 1]);
        let third = DistanceSet::direct(k.clone(), vec![k.from_rational(q(1, 3))]).unwrap();
        assert!(matches!(
            modp_certificate(&third, &ideal_above(&third, 3), 2),
            Err(Rejection::NotInLocalization { .. })
        ));
    }

    #[test]
    fn search_examples() {
        let cfg = SearchConfig { prime_limit: 50, seed: 0 };
        let kite = certify_search(&kite_distances(), 2, &cfg);
        let best = kite.best().unwrap();
        assert_eq!((best.ideal.p(), best.s_eff), (2, 1));
        assert_eq!(best.bound, BigUint::from(4u32));
        assert!(kite.all[1..].iter().all(|c| c.s_eff == 2 && c.bound == BigUint::from(9u32)));

        let square = certify_search(&rational_distances(&[1, 2]), 2, &cfg);
        assert_eq!(square.best().unwrap().bound, BigUint::from(9u32));
        assert!(square.all.iter().all(|c| c.s_eff == 2 && c.ideal.p() != 2));
        assert_eq!(square.skipped.len(), 1);

        let single = certify_search(&rational_distances(&[1]), 3, &cfg);
        assert!(single.all.iter().all(|c| c.bound == dim_p(3, 1).unwrap()));
        assert_eq!(single.all.len(), 15);
    }

    #[test]
    fn lrs_ratio_examples() {
        let d = rational_distances(&[1, 2]);
        let k = d.field().clone();
        assert_eq!(lrs_ratio(&d, 1).unwrap(), k.from_int(2));
        assert_eq!(lrs_ratio(&d, 2).unwrap(), k.from_int(-1));
        assert_eq!(lrs_ratio(&d, 3).unwrap_err(), BoundError::IndexOutOfRange { j: 3, s: 2 });
        assert_eq!(
            lrs_ratio(&rational_distances(&[1]), 1).unwrap_err(),
            BoundError::TooFewDistances(1)
        );

        let kite = kite_distances();
        let kk = kite.field().clone();
        assert_eq!(lrs_ratio(&kite, 1).unwrap(), kk.element(vec![q(1, 2), q(1, 2)]).unwrap());
        let pent = pentagon_distances();
        let kp = pent.field().clone();
        assert_eq!(lrs_ratio(&pent, 1).unwrap(), kp.element(vec![q(1, 2), q(1, 2)]).unwrap());
    }

    #[test]
    fn lrs_report_examples() {
        let kite = lrs_report(&kite_distances(), 2).unwrap();
        assert_eq!(kite.n, BigUint::from(4u32));
        assert!(kite.ratios.iter().all(|r| !r.is_integer && r.degree == 2));
        assert!(kite.ratios.iter().all(|r| r.min_poly.to_string() == "x^2 - x - 1/2"));
        assert_eq!(kite.t, None);
        assert_eq!(kite.bound, LrsBound::NonIntegral { bound: BigUint::from(4u32) });

        let pent = lrs_report(&pentagon_distances(), 2).unwrap();
        assert!(pent.ratios.iter().all(|r| r.is_integer && r.min_poly.to_string() == "x^2 - x - 1"));
        assert_eq!(pent.t, Some(2));
        assert_eq!(
            pent.bound,
            LrsBound::DegreeRefined {
                t: 2,
                strict_below: q(9, 1),
                bound: BigUint::from(8u32)
            }
        );
        assert_eq!(pent.thresholds.len(), 2);
        assert_eq!(pent.thresholds[0].threshold, q(9, 1));
        assert_eq!(pent.thresholds[1].threshold, q(13, 2));
        assert!(!pent.thresholds[0].satisfied && pent.thresholds[1].satisfied);

        let square = lrs_report(&rational_distances(&[1, 2]), 2).unwrap();
        assert_eq!(square.t, Some(1));
        assert_eq!(square.bound, LrsBound::ThresholdOnly);
        assert_eq!(square.bound_value(), None);
    }

    #[test]
    fn degree_refined_bound_with_fractional_value() {
        // t = 3 gives N + (N+1)/2; with N = 4 that is 13/2, so |X| <= 6.
        let v = Rational::from_integer(4.into()) + q(5, 2);
        assert_eq!(largest_integer_below(&v), BigInt::from(6));
    }

    #[test]
    fn obstruction_examples() {
        let kite = kite_distances();
        assert!(congruent_pair_obstruction(&kite, &ideal_above(&kite, 2)).unwrap());
        let sq = rational_distances(&[1, 2]);
        assert!(!congruent_pair_obstruction(&sq, &ideal_above(&sq, 3)).unwrap());
        let d13 = rational_distances(&[1, 3]);
        assert!(!congruent_pair_obstruction(&d13, &ideal_above(&d13, 3)).unwrap());
    }

    #[test]
    fn combined_report_examples() {
        let cfg = SearchConfig { prime_limit: 50, seed: 0 };
        let kite = BoundInput::Distances {
            set: kite_distances(),
            dim: 2,
            cardinality: Some(4),
        };
        let r = combined_report(&kite, &cfg).unwrap();
        assert_eq!(r.absolute_bound, BigUint::from(6u32));
        assert_eq!(r.best_bound, BigUint::from(4u32));
        assert_eq!(r.best_source, BoundSource::ModP);
        assert!(r.tight && r.modp.best().unwrap().tight);
        assert!(r.warnings.is_empty());

        let square = BoundInput::Distances {
            set: rational_distances(&[1, 2]),
            dim: 2,
            cardinality: Some(4),
        };
        let r = combined_report(&square, &cfg).unwrap();
        assert_eq!(r.best_bound, BigUint::from(6u32));
        assert_eq!(r.best_source, BoundSource::Absolute);
        assert_eq!(r.modp.best().unwrap().bound, BigUint::from(9u32));
        assert!(!r.tight);

        let pair = BoundInput::Distances {
            set: rational_distances(&[25]),
            dim: 2,
            cardinality: Some(2),
        };
        let r = combined_report(&pair, &cfg).unwrap();
        assert_eq!(r.s, 1);
        assert!(r.lrs.is_none());
        assert_eq!(r.modp.best().unwrap().bound, dim_p(2, 1).unwrap());
        assert_eq!(r.best_bound, BigUint::from(3u32));

        let pent = BoundInput::Distances {
            set: pentagon_distances(),
            dim: 2,
            cardinality: Some(5),
        };
        let r = combined_report(&pent, &cfg).unwrap();
        assert_eq!(r.best_bound, BigUint::from(6u32));
        assert_eq!(r.warnings, vec![Warning::UncertifiedPrimes(vec![2])]);

        let too_many = BoundInput::Distances {
            set: kite_distances(),
            dim: 2,
            cardinality: Some(5),
        };
        let r = combined_report(&too_many, &cfg).unwrap();
        assert!(r.warnings.contains(&Warning::CardinalityExceedsBound {
            cardinality: 5,
            bound: BigUint::from(4u32)
        }));
    }

    #[test]
    fn dim_table_values() {
        let t = dim_table(2, 3).unwrap();
        let values: Vec<u32> = t.iter().map(|(_, v)| u32::try_from(v.clone()).unwrap()).collect();
        assert_eq!(values, vec![1, 4, 9, 16]);
        assert!(dim_table(0, 2).is_none());
    }
}
