//! Serializable views of reports.
//!
//! Conventions: structural counts (`d`, `s`, `s_eff`, `e`, `f`, `j`, degrees,
//! ranks, multiplicities, cardinalities) are JSON numbers; arithmetic values
//! (primes, bounds, coefficients, rationals) are decimal strings, so big
//! integers never lose precision. Field elements are arrays of rational
//! strings in the power basis, constant term first.

use distbound_core::bounds::{
    BoundReport, BoundSource, LrsBound, LrsReport, ModPCertificate, SearchOutcome, SkipReason, SkippedIdeal,
    Warning,
};
use distbound_core::finite_field::{FpPoly, ResidueElement};
use distbound_core::geometry::DistanceSet;
use distbound_core::number_field::{Irreducibility, NfElement, NumberField};
use distbound_core::poly::QPoly;
use distbound_core::prime_ideal::PrimeIdeal;
use distbound_core::verify::{PatternFailure, VerificationReport};
use num_bigint::BigUint;
use serde::Serialize;

/// How `K_j` is indexed; carried in every LRS report.
pub const INDEX_CONVENTION: &str =
    "K_j = prod over i in 1..s, i != j, of alpha_i / (alpha_i - alpha_j); alpha_j is the j-th distance in canonical order";

pub fn element(a: &NfElement) -> Vec<String> {
    a.coeffs().iter().map(ToString::to_string).collect()
}

fn qpoly(p: &QPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn fp_coeffs(p: &FpPoly, len: usize) -> Vec<String> {
    (0..len.max(p.coeffs().len())).map(|i| p.coeff(i).to_string()).collect()
}

fn residue(r: &ResidueElement) -> Vec<String> {
    fp_coeffs(r.rep(), r.field().degree())
}

#[derive(Serialize)]
pub struct FieldJson {
    pub min_poly: Vec<String>,
    pub degree: usize,
    /// `"certified"` or `"unverified"`.
    pub irreducibility: &'static str,
    /// A prime modulo which the defining polynomial is irreducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_prime: Option<String>,
}

impl FieldJson {
    pub fn new(k: &NumberField) -> Self {
        let (irreducibility, witness_prime) = match k.irreducibility() {
            Irreducibility::Certified { witness } => ("certified", Some(witness.to_string())),
            Irreducibility::Unverified => ("unverified", None),
        };
        FieldJson {
            min_poly: k.min_poly().coeffs().iter().map(ToString::to_string).collect(),
            degree: k.degree(),
            irreducibility,
            witness_prime,
        }
    }
}

#[derive(Serialize)]
pub struct IdealJson {
    pub p: String,
    /// Monic irreducible factor of the defining polynomial mod `p`,
    /// constant term first.
    pub factor: Vec<String>,
    pub e: u32,
    pub f: usize,
    pub certified: bool,
}

impl IdealJson {
    pub fn new(i: &PrimeIdeal) -> Self {
        IdealJson {
            p: i.p().to_string(),
            factor: fp_coeffs(i.factor(), 0),
            e: i.e(),
            f: i.f(),
            certified: i.dedekind_certified(),
        }
    }
}

#[derive(Serialize)]
pub struct ResidueJson {
    pub alpha: Vec<String>,
    /// Coefficients in `F_p[x]/(factor)`, constant term first, length `f`.
    pub residue: Vec<String>,
}

#[derive(Serialize)]
pub struct CertificateJson {
    pub ideal: IdealJson,
    pub residues: Vec<ResidueJson>,
    pub representatives: Vec<Vec<String>>,
    pub s_eff: usize,
    pub bound: String,
    pub tight: bool,
}

impl CertificateJson {
    pub fn new(c: &ModPCertificate) -> Self {
        CertificateJson {
            ideal: IdealJson::new(&c.ideal),
            residues: c
                .residues
                .iter()
                .map(|(a, r)| ResidueJson {
                    alpha: element(a),
                    residue: residue(r),
                })
                .collect(),
            representatives: c.representatives.iter().map(element).collect(),
            s_eff: c.s_eff,
            bound: c.bound.to_string(),
            tight: c.tight,
        }
    }
}

#[derive(Serialize)]
pub struct SkippedJson {
    pub p: String,
    pub factor: Vec<String>,
    /// `"uncertified_prime"`, `"not_in_localization"` or `"zero_residue"`.
    pub reason: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<String>>,
}

impl SkippedJson {
    pub fn new(s: &SkippedIdeal) -> Self {
        let (reason, alpha) = match &s.reason {
            SkipReason::UncertifiedPrime => ("uncertified_prime", None),
            SkipReason::NotInLocalization { alpha } => ("not_in_localization", Some(element(alpha))),
            SkipReason::ZeroResidue { alpha } => ("zero_residue", Some(element(alpha))),
        };
        SkippedJson {
            p: s.p.to_string(),
            factor: fp_coeffs(&s.factor, 0),
            reason,
            alpha,
        }
    }
}

#[derive(Serialize)]
pub struct ModPJson {
    pub prime_limit: String,
    pub best: Option<CertificateJson>,
    pub all: Vec<CertificateJson>,
    pub skipped: Vec<SkippedJson>,
}

impl ModPJson {
    pub fn new(search: &SearchOutcome, prime_limit: u64) -> Self {
        ModPJson {
            prime_limit: prime_limit.to_string(),
            best: search.best().map(CertificateJson::new),
            all: search.all.iter().map(CertificateJson::new).collect(),
            skipped: search.skipped.iter().map(SkippedJson::new).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct LrsRatioJson {
    pub j: usize,
    pub value: Vec<String>,
    /// Monic minimal polynomial over `Q`, constant term first.
    pub min_poly: Vec<String>,
    pub is_integer: bool,
    pub degree: usize,
}

#[derive(Serialize)]
pub struct ThresholdJson {
    pub t: usize,
    pub threshold: String,
    pub satisfied: bool,
}

#[derive(Serialize)]
pub struct LrsJson {
    pub s: usize,
    #[serde(rename = "N")]
    pub n: String,
    pub ratios: Vec<LrsRatioJson>,
    pub t: Option<usize>,
    /// `"non_integral"`, `"degree_refined"` or `"threshold_only"`.
    pub bound_kind: &'static str,
    pub bound_value: Option<String>,
    /// For `degree_refined`: `|X| < strict_below`.
    pub strict_below: Option<String>,
    pub thresholds: Vec<ThresholdJson>,
    pub index_convention: &'static str,
}

impl LrsJson {
    pub fn new(r: &LrsReport) -> Self {
        let (bound_kind, strict_below) = match &r.bound {
            LrsBound::NonIntegral { .. } => ("non_integral", None),
            LrsBound::DegreeRefined { strict_below, .. } => ("degree_refined", Some(strict_below.to_string())),
            LrsBound::ThresholdOnly => ("threshold_only", None),
        };
        LrsJson {
            s: r.s,
            n: r.n.to_string(),
            ratios: r
                .ratios
                .iter()
                .map(|k| LrsRatioJson {
                    j: k.j,
                    value: element(&k.value),
                    min_poly: qpoly(&k.min_poly),
                    is_integer: k.is_integer,
                    degree: k.degree,
                })
                .collect(),
            t: r.t,
            bound_kind,
            bound_value: r.bound_value().map(ToString::to_string),
            strict_below,
            thresholds: r
                .thresholds
                .iter()
                .map(|t| ThresholdJson {
                    t: t.t,
                    threshold: t.threshold.to_string(),
                    satisfied: t.satisfied,
                })
                .collect(),
            index_convention: INDEX_CONVENTION,
        }
    }
}

#[derive(Serialize)]
pub struct WarningJson {
    pub kind: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cardinality: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<String>,
}

fn prime_list(ps: &[u64]) -> String {
    ps.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

impl WarningJson {
    pub fn new(w: &Warning) -> Self {
        let blank = |kind, message| WarningJson {
            kind,
            message,
            primes: None,
            cardinality: None,
            bound: None,
        };
        match w {
            Warning::UnverifiedIrreducibility => blank(
                "unverified_irreducibility",
                "the defining polynomial has no rational root but was not proven irreducible; results assume it is"
                    .to_string(),
            ),
            Warning::UncertifiedPrimes(ps) => WarningJson {
                primes: Some(ps.iter().map(ToString::to_string).collect()),
                ..blank(
                    "uncertified_primes",
                    format!(
                        "skipped primes {} where Z[theta] does not describe the prime ideals (Dedekind's criterion fails)",
                        prime_list(ps)
                    ),
                )
            },
            Warning::NotInLocalization(ps) => WarningJson {
                primes: Some(ps.iter().map(ToString::to_string).collect()),
                ..blank(
                    "not_in_localization",
                    format!("skipped primes {} dividing the denominator of some distance", prime_list(ps)),
                )
            },
            Warning::CardinalityExceedsBound { cardinality, bound } => WarningJson {
                cardinality: Some(*cardinality),
                bound: Some(bound.to_string()),
                ..blank(
                    "cardinality_exceeds_bound",
                    format!("the stated cardinality {cardinality} exceeds the proven bound {bound}; no such set exists"),
                )
            },
        }
    }
}

pub fn source_name(s: BoundSource) -> &'static str {
    match s {
        BoundSource::Absolute => "absolute",
        BoundSource::ModP => "modp",
        BoundSource::Lrs => "lrs",
    }
}

#[derive(Serialize)]
pub struct ReportJson {
    pub d: usize,
    pub s: usize,
    pub cardinality: Option<usize>,
    pub field: FieldJson,
    pub distances: Vec<Vec<String>>,
    pub absolute_bound: String,
    pub modp: ModPJson,
    pub lrs: Option<LrsJson>,
    pub best_bound: String,
    /// `"absolute"`, `"modp"` or `"lrs"`.
    pub best_source: &'static str,
    pub tight: bool,
    pub warnings: Vec<WarningJson>,
}

fn distances(d: &DistanceSet) -> Vec<Vec<String>> {
    d.values().iter().map(element).collect()
}

impl ReportJson {
    pub fn new(r: &BoundReport, prime_limit: u64) -> Self {
        ReportJson {
            d: r.d,
            s: r.s,
            cardinality: r.cardinality,
            field: FieldJson::new(r.distances.field()),
            distances: distances(&r.distances),
            absolute_bound: r.absolute_bound.to_string(),
            modp: ModPJson::new(&r.modp, prime_limit),
            lrs: r.lrs.as_ref().map(LrsJson::new),
            best_bound: r.best_bound.to_string(),
            best_source: source_name(r.best_source),
            tight: r.tight,
            warnings: r.warnings.iter().map(WarningJson::new).collect(),
        }
    }
}

/// Output of `certify`: the mod-𝔭 search alone.
#[derive(Serialize)]
pub struct CertifyJson {
    pub d: usize,
    pub s: usize,
    pub cardinality: Option<usize>,
    pub field: FieldJson,
    pub distances: Vec<Vec<String>>,
    pub modp: ModPJson,
    pub warnings: Vec<WarningJson>,
}

impl CertifyJson {
    /// `warnings` excludes anything derived from the LRS analysis.
    pub fn new(r: &BoundReport, prime_limit: u64) -> Self {
        CertifyJson {
            d: r.d,
            s: r.s,
            cardinality: r.cardinality,
            field: FieldJson::new(r.distances.field()),
            distances: distances(&r.distances),
            modp: ModPJson::new(&r.modp, prime_limit),
            warnings: r
                .warnings
                .iter()
                .filter(|w| !matches!(w, Warning::CardinalityExceedsBound { .. }))
                .map(WarningJson::new)
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct WitnessJson {
    pub row: usize,
    pub col: usize,
    /// `"diagonal_zero"` or `"off_diagonal_nonzero"`.
    pub kind: &'static str,
}

#[derive(Serialize)]
pub struct PatternJson {
    pub pass: bool,
    pub witness: Option<WitnessJson>,
    pub ideal: IdealJson,
    pub a_list: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct LrsCheckJson {
    pub j: usize,
    pub k_j: Vec<String>,
    pub rank: usize,
    #[serde(rename = "N")]
    pub n: String,
    pub rank_ok: bool,
    pub eigen_multiplicity: usize,
    pub nullity_ok: bool,
}

#[derive(Serialize)]
pub struct VerifyJson {
    /// `null` when no certificate exists up to the prime limit.
    pub congruence_pattern: Option<PatternJson>,
    pub lrs: Vec<LrsCheckJson>,
}

impl VerifyJson {
    pub fn new(v: &VerificationReport) -> Self {
        VerifyJson {
            congruence_pattern: v.congruence.as_ref().map(|c| PatternJson {
                pass: c.check.pass,
                witness: c.check.witness.map(|w| WitnessJson {
                    row: w.row,
                    col: w.col,
                    kind: match w.failure {
                        PatternFailure::DiagonalZero => "diagonal_zero",
                        PatternFailure::OffDiagonalNonzero => "off_diagonal_nonzero",
                    },
                }),
                ideal: IdealJson::new(&c.ideal),
                a_list: c.a_list.iter().map(element).collect(),
            }),
            lrs: v
                .lrs
                .iter()
                .map(|l| LrsCheckJson {
                    j: l.j,
                    k_j: element(&l.k_j),
                    rank: l.rank,
                    n: l.n.to_string(),
                    rank_ok: l.rank_ok,
                    eigen_multiplicity: l.eigen_multiplicity,
                    nullity_ok: l.nullity_ok,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct DimEntryJson {
    pub s: u64,
    pub dim: String,
}

/// Output of `dims d s`: `dim P_s(R^d)` and the table for `0..=s`.
#[derive(Serialize)]
pub struct DimsJson {
    pub d: u64,
    pub s: u64,
    pub dim: String,
    pub table: Vec<DimEntryJson>,
}

impl DimsJson {
    pub fn new(d: u64, table: &[(u64, BigUint)]) -> Self {
        let (s, dim) = table.last().expect("table covers s = 0");
        DimsJson {
            d,
            s: *s,
            dim: dim.to_string(),
            table: table
                .iter()
                .map(|(s, v)| DimEntryJson {
                    s: *s,
                    dim: v.to_string(),
                })
                .collect(),
        }
    }
}
