//! Arithmetic in `K = Q(theta) = Q[x]/(f)` for a monic integer polynomial `f`.
//!
//! Elements are coefficient vectors in the power basis `1, theta, ...,
//! theta^(n-1)`, so equality is coefficientwise. The field is only known
//! through its defining polynomial; no embedding into `R` or `C` is used.
//! Irreducibility of `f` is certified when some prime `p <= 200` leaves it
//! irreducible mod `p`; otherwise the field is accepted as
//! [`Irreducibility::Unverified`] and callers are expected to surface that.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{factor_integer, primes_up_to, Rational};
use crate::finite_field::{is_irreducible, FpPoly};
use crate::linalg::{kernel, ExactField};
use crate::poly::{IntPoly, QPoly};

/// Largest prime tried when certifying irreducibility.
pub const IRREDUCIBILITY_PRIME_LIMIT: u64 = 200;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("defining polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("defining polynomial {0} is not monic")]
    NotMonic(IntPoly),
    #[error("defining polynomial {0} is not squarefree over Q")]
    NotSquarefree(IntPoly),
    #[error("defining polynomial {poly} is reducible: it has the rational root {root}")]
    RationalRoot { poly: IntPoly, root: BigInt },
    #[error("expected {expected} coefficients, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("elements belong to different number fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is a zero divisor in Q[x]/(f)")]
    ZeroDivisor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Irreducibility {
    /// `f mod witness` is irreducible, hence `f` is irreducible over `Q`.
    Certified { witness: u64 },
    Unverified,
}

/// The number field presented by a monic integer polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumberField {
    min_poly: IntPoly,
    qpoly: QPoly,
    irreducibility: Irreducibility,
}

impl NumberField {
    /// Validates `min_poly` and builds the field.
    ///
    /// Rejects constant, non-monic and non-squarefree inputs, and any input of
    /// degree above one with an integer root (all rational roots of a monic
    /// integer polynomial are integer divisors of the constant term).
    pub fn new(min_poly: IntPoly) -> Result<Arc<NumberField>, FieldError> {
        let n = match min_poly.degree() {
            None | Some(0) => return Err(FieldError::ConstantPolynomial),
            Some(n) => n,
        };
        if !min_poly.is_monic() {
            return Err(FieldError::NotMonic(min_poly));
        }
        let qpoly = min_poly.to_qpoly();
        if qpoly.gcd(&qpoly.derivative()).degree() != Some(0) {
            return Err(FieldError::NotSquarefree(min_poly));
        }
        if n > 1 {
            if let Some(root) = integer_root(&min_poly) {
                return Err(FieldError::RationalRoot { poly: min_poly, root });
            }
        }
        let irreducibility = certify_irreducible(&min_poly);
        Ok(Arc::new(NumberField {
            min_poly,
            qpoly,
            irreducibility,
        }))
    }

    pub fn min_poly(&self) -> &IntPoly {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.qpoly.degree().unwrap_or(0)
    }

    pub fn irreducibility(&self) -> Irreducibility {
        self.irreducibility
    }

    pub fn is_certified(&self) -> bool {
        matches!(self.irreducibility, Irreducibility::Certified { .. })
    }

    pub fn element(self: &Arc<Self>, coeffs: Vec<Rational>) -> Result<NfElement, FieldError> {
        if coeffs.len() != self.degree() {
            return Err(FieldError::WrongLength {
                expected: self.degree(),
                got: coeffs.len(),
            });
        }
        Ok(NfElement {
            field: Arc::clone(self),
            coeffs,
        })
    }

    pub fn from_i64s(self: &Arc<Self>, coeffs: &[i64]) -> Result<NfElement, FieldError> {
        self.element(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_rational(self: &Arc<Self>, c: Rational) -> NfElement {
        let mut coeffs = vec![Rational::zero(); self.degree()];
        coeffs[0] = c;
        NfElement {
            field: Arc::clone(self),
            coeffs,
        }
    }

    pub fn from_int(self: &Arc<Self>, c: i64) -> NfElement {
        self.from_rational(Rational::from_integer(c.into()))
    }

    pub fn zero(self: &Arc<Self>) -> NfElement {
        self.from_int(0)
    }

    pub fn one(self: &Arc<Self>) -> NfElement {
        self.from_int(1)
    }

    /// The generator `theta`, reduced (so in degree one it is the root of `f`).
    pub fn generator(self: &Arc<Self>) -> NfElement {
        let x = QPoly::from_i64s(&[0, 1]);
        self.from_qpoly(&x)
    }

    /// Image of a rational polynomial under `x -> theta`.
    pub fn from_qpoly(self: &Arc<Self>, p: &QPoly) -> NfElement {
        let r = p.div_rem(&self.qpoly).1;
        let mut coeffs = r.into_coeffs();
        coeffs.resize(self.degree(), Rational::zero());
        NfElement {
            field: Arc::clone(self),
            coeffs,
        }
    }

    fn reduce(&self, mut prod: Vec<Rational>) -> Vec<Rational> {
        let n = self.degree();
        let f = self.min_poly.coeffs();
        for i in (n..prod.len()).rev() {
            let c = core::mem::take(&mut prod[i]);
            if c.is_zero() {
                continue;
            }
            for k in 0..n {
                if !f[k].is_zero() {
                    prod[i - n + k] -= &c * Rational::from_integer(f[k].clone());
                }
            }
        }
        prod.truncate(n);
        prod.resize(n, Rational::zero());
        prod
    }
}

fn integer_root(f: &IntPoly) -> Option<BigInt> {
    let c0 = f.coeff(0);
    if c0.is_zero() {
        return Some(BigInt::zero());
    }
    let fac = factor_integer(&c0)?;
    fac.divisors().into_iter().find_map(|d| {
        let d = BigInt::from(d);
        [d.clone(), -d].into_iter().find(|r| f.eval(r).is_zero())
    })
}

fn certify_irreducible(f: &IntPoly) -> Irreducibility {
    primes_up_to(IRREDUCIBILITY_PRIME_LIMIT)
        .into_iter()
        .find(|&p| is_irreducible(&FpPoly::from_intpoly(p, f)))
        .map_or(Irreducibility::Unverified, |witness| Irreducibility::Certified { witness })
}

/// An element of a [`NumberField`] in the power basis.
#[derive(Clone, Debug)]
pub struct NfElement {
    field: Arc<NumberField>,
    coeffs: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NfOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field arithmetic.
pub fn nf_arith(a: &NfElement, b: &NfElement, op: NfOp) -> Result<NfElement, FieldError> {
    if !a.same_field(b) {
        return Err(FieldError::FieldMismatch);
    }
    match op {
        NfOp::Add => Ok(a + b),
        NfOp::Sub => Ok(a - b),
        NfOp::Mul => Ok(a * b),
        NfOp::Div => a.checked_div(b),
    }
}

impl NfElement {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn same_field(&self, other: &NfElement) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field.min_poly == other.field.min_poly
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.coeffs.clone())
    }

    pub fn scale(&self, c: &Rational) -> NfElement {
        NfElement {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse via the extended gcd with the defining polynomial.
    pub fn inv(&self) -> Result<NfElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let (g, u, _) = self.to_qpoly().ext_gcd(&self.field.qpoly);
        if g.degree() != Some(0) {
            return Err(FieldError::ZeroDivisor);
        }
        Ok(self.field.from_qpoly(&u))
    }

    pub fn checked_div(&self, rhs: &NfElement) -> Result<NfElement, FieldError> {
        if !self.same_field(rhs) {
            return Err(FieldError::FieldMismatch);
        }
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut exp: u32) -> NfElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Monic minimal polynomial over `Q`: the first linear dependency among
    /// `1, a, a^2, ...`, found as a kernel vector of the power matrix.
    pub fn min_poly(&self) -> QPoly {
        let n = self.field.degree();
        let mut powers: Vec<Vec<Rational>> = vec![self.field.one().coeffs];
        let mut current = self.field.one();
        for _ in 1..=n {
            current = &current * self;
            powers.push(current.coeffs.clone());
            // n x (k + 1) matrix whose columns are the powers
            let m: Vec<Vec<Rational>> = (0..n)
                .map(|row| powers.iter().map(|v| v[row].clone()).collect())
                .collect();
            if let Some(v) = kernel(&m).into_iter().next() {
                return QPoly::new(v).monic();
            }
        }
        unreachable!("n + 1 vectors in an n-dimensional space are dependent")
    }

    /// True iff the minimal polynomial has integer coefficients.
    pub fn is_algebraic_integer(&self) -> bool {
        self.min_poly().has_integer_coeffs()
    }

    /// Degree of the minimal polynomial.
    pub fn degree(&self) -> usize {
        self.min_poly().degree().unwrap_or(0)
    }

    fn combine(&self, rhs: &NfElement) {
        assert!(self.same_field(rhs), "number field elements from different fields");
    }
}

impl PartialEq for NfElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.coeffs == other.coeffs
    }
}

impl Eq for NfElement {}

impl PartialOrd for NfElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the coefficient vector, constant term first.
impl Ord for NfElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .min_poly
            .cmp(&other.field.min_poly)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl core::hash::Hash for NfElement {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.field.min_poly.hash(state);
        self.coeffs.hash(state);
    }
}

impl Add for &NfElement {
    type Output = NfElement;
    fn add(self, rhs: &NfElement) -> NfElement {
        self.combine(rhs);
        NfElement {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &NfElement {
    type Output = NfElement;
    fn sub(self, rhs: &NfElement) -> NfElement {
        self.combine(rhs);
        NfElement {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &NfElement {
    type Output = NfElement;
    fn mul(self, rhs: &NfElement) -> NfElement {
        self.combine(rhs);
        let n = self.coeffs.len();
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        NfElement {
            field: Arc::clone(&self.field),
            coeffs: self.field.reduce(prod),
        }
    }
}

impl Neg for &NfElement {
    type Output = NfElement;
    fn neg(self) -> NfElement {
        NfElement {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl ExactField for NfElement {
    fn is_zero_elem(&self) -> bool {
        NfElement::is_zero(self)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self.checked_div(rhs).expect("exact division by a nonzero field element")
    }
}

/// `2 + 3*t - 1/2*t^2`, with `t` standing for the generator.
impl fmt::Display for NfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{a}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{a}*t^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
