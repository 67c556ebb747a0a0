//! Polynomials over `F_p`, their complete factorization, and the residue
//! fields `F_p[x]/(g)` that serve as residue fields of prime ideals.
//!
//! Factorization runs the usual three stages: squarefree decomposition,
//! distinct-degree factorization, then randomized equal-degree splitting
//! (Cantor-Zassenhaus for odd `p`, the trace map for `p = 2`). The splitting
//! PRNG is a ChaCha8 stream seeded from the caller's seed and a tag derived
//! from `(p, d, deg)`, so results are reproducible and independent of call
//! order. Output factors are monic and sorted by degree, then by coefficient
//! vector (constant term first).

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arith::{is_prime, pow_mod_u64};
use crate::poly::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FiniteFieldError {
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("residue field modulus must have positive degree")]
    ConstantModulus,
    #[error("residue field modulus {0} is not irreducible")]
    NotIrreducible(FpPoly),
    #[error("operands live in different residue fields")]
    FieldMismatch,
    #[error("zero has no inverse")]
    NotInvertible,
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod_u64(a, p - 2, p)
}

/// Polynomial over the prime field `F_p`, coefficients in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn from_i64s(p: u64, coeffs: &[i64]) -> Self {
        let m = p as i128;
        Self::new(
            p,
            coeffs
                .iter()
                .map(|&c| (c as i128).rem_euclid(m) as u64)
                .collect(),
        )
    }

    /// Reduces an integer polynomial coefficientwise.
    pub fn from_intpoly(p: u64, f: &IntPoly) -> Self {
        Self::new(p, f.coeffs().iter().map(|c| reduce_bigint(c, p)).collect())
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    /// The indeterminate `x`.
    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Lift to `Z[x]` with coefficients in `[0, p)`.
    pub fn lift(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.p;
        Self::new(
            p,
            self.coeffs
                .iter()
                .map(|&a| ((a as u128 * (c % p) as u128) % p as u128) as u64)
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.leading(), self.p))
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| ((c as u128 * (i as u64 % p) as u128) % p as u128) as u64)
                .collect(),
        )
    }

    pub fn div_rem(&self, divisor: &FpPoly) -> (FpPoly, FpPoly) {
        let p = self.p;
        let dd = divisor.degree().expect("polynomial division by zero");
        let Some(nd) = self.degree() else {
            return (Self::zero(p), Self::zero(p));
        };
        if nd < dd {
            return (Self::zero(p), self.clone());
        }
        let lc_inv = inv_mod(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; nd - dd + 1];
        for i in (dd..=nd).rev() {
            let c = mulm(rem[i], lc_inv, p);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (k, &dk) in divisor.coeffs.iter().enumerate() {
                let t = mulm(c, dk, p);
                let slot = &mut rem[i - dd + k];
                *slot = (*slot + p - t) % p;
            }
        }
        rem.truncate(dd);
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, divisor: &FpPoly) -> FpPoly {
        self.div_rem(divisor).1
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, u)` with `u * self = g (mod modulus)`, `g` the monic gcd.
    fn inverse_cofactor(&self, modulus: &FpPoly) -> (FpPoly, FpPoly) {
        let p = self.p;
        let (mut r0, mut r1) = (modulus.clone(), self.rem(modulus));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let t2 = &t0 - &(&q * &t1);
            r0 = core::mem::replace(&mut r1, r);
            t0 = core::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, t0);
        }
        let inv = inv_mod(r0.leading(), p);
        (r0.scale(inv), t0.scale(inv))
    }

    pub fn mul_mod(&self, other: &FpPoly, modulus: &FpPoly) -> FpPoly {
        (self * other).rem(modulus)
    }

    pub fn pow_mod(&self, mut exp: u64, modulus: &FpPoly) -> FpPoly {
        let mut base = self.rem(modulus);
        let mut acc = Self::one(self.p).rem(modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_mod(&base, modulus);
            }
            base = base.mul_mod(&base, modulus);
            exp >>= 1;
        }
        acc
    }

    /// Coefficientwise `p`-th root; valid when `f' = 0`.
    fn pth_root(&self) -> FpPoly {
        let p = self.p as usize;
        Self::new(self.p, self.coeffs.iter().step_by(p).copied().collect())
    }

    /// Order by degree, then lexicographically on the coefficient vector.
    pub fn canonical_cmp(&self, other: &FpPoly) -> Ordering {
        self.p
            .cmp(&other.p)
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for FpPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FpPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn reduce_bigint(c: &BigInt, p: u64) -> u64 {
    let r = c % BigInt::from(p);
    let r = if r < BigInt::zero() { r + BigInt::from(p) } else { r };
    r.to_u64().expect("residue below p")
}

impl Add for &FpPoly {
    type Output = FpPoly;
    fn add(self, rhs: &FpPoly) -> FpPoly {
        debug_assert_eq!(self.p, rhs.p);
        let p = self.p;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FpPoly::new(p, (0..n).map(|i| (self.coeff(i) + rhs.coeff(i)) % p).collect())
    }
}

impl Sub for &FpPoly {
    type Output = FpPoly;
    fn sub(self, rhs: &FpPoly) -> FpPoly {
        debug_assert_eq!(self.p, rhs.p);
        let p = self.p;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FpPoly::new(p, (0..n).map(|i| (self.coeff(i) + p - rhs.coeff(i)) % p).collect())
    }
}

impl Neg for &FpPoly {
    type Output = FpPoly;
    fn neg(self) -> FpPoly {
        let p = self.p;
        FpPoly::new(p, self.coeffs.iter().map(|&c| (p - c) % p).collect())
    }
}

impl Mul for &FpPoly {
    type Output = FpPoly;
    fn mul(self, rhs: &FpPoly) -> FpPoly {
        debug_assert_eq!(self.p, rhs.p);
        let p = self.p;
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero(p);
        }
        let mut out = vec![0u128; self.coeffs.len() + rhs.coeffs.len() - 1];
        let pm = p as u128;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % pm;
            }
        }
        FpPoly::new(p, out.into_iter().map(|c| c as u64).collect())
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{c}*x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        write!(f, " (mod {})", self.p)
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `x^(p^k) mod f` by `k` Frobenius steps starting from `start`.
fn frobenius_iter(start: &FpPoly, k: usize, f: &FpPoly) -> FpPoly {
    let mut h = start.rem(f);
    for _ in 0..k {
        h = h.pow_mod(f.p, f);
    }
    h
}

/// Rabin's test: `f` of degree `n` is irreducible iff `x^(p^n) = x mod f` and
/// `gcd(x^(p^(n/q)) - x, f) = 1` for every prime `q | n`.
pub fn is_irreducible(f: &FpPoly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let x = FpPoly::x(f.p);
    for q in prime_divisors(n) {
        let h = frobenius_iter(&x, n / q, f);
        if !(&h - &x).gcd(f).is_one() {
            return false;
        }
    }
    frobenius_iter(&x, n, f) == x.rem(f)
}

fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_rem(&c).0;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_rem(&y).0;
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.div_rem(&w).0;
        i += 1;
    }
    if !c.is_one() {
        let mult = u32::try_from(p).expect("multiplicity p fits in u32");
        for (g, m) in squarefree_decomposition(&c.pth_root()) {
            out.push((g, m * mult));
        }
    }
    out
}

/// Splits a squarefree monic `f` into products of all its irreducible factors
/// of each degree: `[(d, product of degree-d factors)]`.
fn distinct_degree(f: &FpPoly) -> Vec<(usize, FpPoly)> {
    let p = f.p;
    let x = FpPoly::x(p);
    let mut out = Vec::new();
    let mut h = f.clone();
    let mut xp = x.rem(&h);
    let mut d = 1;
    while h.degree().unwrap_or(0) >= 2 * d {
        xp = xp.pow_mod(p, &h);
        let g = (&xp - &x).gcd(&h);
        if !g.is_one() {
            h = h.div_rem(&g).0;
            xp = xp.rem(&h);
            out.push((d, g));
        }
        d += 1;
    }
    if h.degree().unwrap_or(0) > 0 {
        out.push((h.degree().unwrap(), h));
    }
    out
}

fn random_below(f: &FpPoly, rng: &mut ChaCha8Rng) -> FpPoly {
    let n = f.degree().unwrap_or(0);
    let p = f.p;
    FpPoly::new(p, (0..n).map(|_| rng.next_u64() % p).collect())
}

/// Candidate splitting polynomial: `a^((p^d-1)/2) - 1` for odd `p`, the
/// absolute trace `a + a^2 + ... + a^(2^(d-1))` for `p = 2`.
fn splitter(a: &FpPoly, d: usize, f: &FpPoly) -> FpPoly {
    let p = f.p;
    if p == 2 {
        let mut term = a.rem(f);
        let mut acc = term.clone();
        for _ in 1..d {
            term = term.mul_mod(&term, f);
            acc = &acc + &term;
        }
        return acc;
    }
    // (p^d - 1)/2 = ((p - 1)/2) * (1 + p + ... + p^(d-1))
    let mut term = a.rem(f);
    let mut norm = term.clone();
    for _ in 1..d {
        term = term.pow_mod(p, f);
        norm = norm.mul_mod(&term, f);
    }
    let half = norm.pow_mod((p - 1) / 2, f);
    &half - &FpPoly::one(p)
}

fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
    let n = f.degree().unwrap_or(0);
    if n == d {
        out.push(f.clone());
        return;
    }
    loop {
        let a = random_below(f, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut g = a.gcd(f);
        if g.is_one() {
            g = splitter(&a, d, f).gcd(f);
        }
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let cofactor = f.div_rem(&g).0;
            equal_degree(&g, d, rng, out);
            equal_degree(&cofactor, d, rng, out);
            return;
        }
    }
}

fn stream_tag(p: u64, d: usize, n: usize) -> u64 {
    let mut z = p
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add((d as u64) << 32)
        .wrapping_add(n as u64);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Complete factorization of `f` over `F_p` into monic irreducibles with
/// multiplicities, in canonical order. The product of `factor^multiplicity`
/// equals `f` divided by its leading coefficient.
pub fn fp_factor(f: &FpPoly, seed: u64) -> Result<Vec<(FpPoly, u32)>, FiniteFieldError> {
    if f.is_zero() {
        return Err(FiniteFieldError::ZeroPolynomial);
    }
    if !is_prime(f.p) {
        return Err(FiniteFieldError::NotPrime(f.p));
    }
    let monic = f.monic();
    let mut factors: Vec<(FpPoly, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic) {
        for (d, block) in distinct_degree(&part) {
            let n = block.degree().unwrap_or(0);
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ stream_tag(f.p, d, n));
            let mut pieces = Vec::new();
            equal_degree(&block, d, &mut rng, &mut pieces);
            factors.extend(pieces.into_iter().map(|g| (g, mult)));
        }
    }
    factors.sort();
    let mut merged: Vec<(FpPoly, u32)> = Vec::with_capacity(factors.len());
    for (g, m) in factors {
        match merged.last_mut() {
            Some((last, e)) if *last == g => *e += m,
            _ => merged.push((g, m)),
        }
    }
    Ok(merged)
}

/// The finite field `F_p[x]/(g)` for a monic irreducible `g` of degree `f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidueField {
    modulus: FpPoly,
}

impl ResidueField {
    pub fn new(modulus: FpPoly) -> Result<Arc<Self>, FiniteFieldError> {
        if !is_prime(modulus.p) {
            return Err(FiniteFieldError::NotPrime(modulus.p));
        }
        if modulus.degree().unwrap_or(0) == 0 {
            return Err(FiniteFieldError::ConstantModulus);
        }
        let modulus = modulus.monic();
        if !is_irreducible(&modulus) {
            return Err(FiniteFieldError::NotIrreducible(modulus));
        }
        Ok(Arc::new(ResidueField { modulus }))
    }

    /// The prime field `F_p`, presented as `F_p[x]/(x)`.
    pub fn prime_field(p: u64) -> Result<Arc<Self>, FiniteFieldError> {
        Self::new(FpPoly::x(p))
    }

    pub fn characteristic(&self) -> u64 {
        self.modulus.p
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }

    /// Residue degree `f`.
    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    /// `p^f`.
    pub fn order(&self) -> BigUint {
        num_traits::pow(BigUint::from(self.characteristic()), self.degree())
    }

    pub fn element(self: &Arc<Self>, rep: &FpPoly) -> ResidueElement {
        debug_assert_eq!(rep.p, self.characteristic());
        ResidueElement {
            field: Arc::clone(self),
            rep: rep.rem(&self.modulus),
        }
    }

    pub fn from_u64(self: &Arc<Self>, c: u64) -> ResidueElement {
        self.element(&FpPoly::constant(self.characteristic(), c))
    }

    pub fn zero(self: &Arc<Self>) -> ResidueElement {
        self.from_u64(0)
    }

    pub fn one(self: &Arc<Self>) -> ResidueElement {
        self.from_u64(1)
    }
}

/// An element of a [`ResidueField`], represented by a polynomial of degree `< f`.
#[derive(Clone, Debug)]
pub struct ResidueElement {
    field: Arc<ResidueField>,
    rep: FpPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidueOp {
    Add,
    Mul,
    /// Inverse of the first operand; the second is ignored.
    Inv,
}

/// Checked arithmetic in `F_{p^f}`.
pub fn residue_arith(
    a: &ResidueElement,
    b: &ResidueElement,
    op: ResidueOp,
) -> Result<ResidueElement, FiniteFieldError> {
    if op != ResidueOp::Inv && !a.same_field(b) {
        return Err(FiniteFieldError::FieldMismatch);
    }
    match op {
        ResidueOp::Add => Ok(a + b),
        ResidueOp::Mul => Ok(a * b),
        ResidueOp::Inv => a.inv(),
    }
}

impl ResidueElement {
    pub fn field(&self) -> &Arc<ResidueField> {
        &self.field
    }

    pub fn rep(&self) -> &FpPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep.is_one()
    }

    pub fn same_field(&self, other: &ResidueElement) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field == other.field
    }

    pub fn inv(&self) -> Result<ResidueElement, FiniteFieldError> {
        if self.is_zero() {
            return Err(FiniteFieldError::NotInvertible);
        }
        let (g, u) = self.rep.inverse_cofactor(&self.field.modulus);
        debug_assert!(g.is_one());
        Ok(self.field.element(&u))
    }

    pub fn pow(&self, exp: u64) -> ResidueElement {
        self.field.element(&self.rep.pow_mod(exp, &self.field.modulus))
    }

    /// `self^(p^k)`.
    pub fn frobenius(&self, k: usize) -> ResidueElement {
        let p = self.field.characteristic();
        let mut out = self.clone();
        for _ in 0..k {
            out = out.pow(p);
        }
        out
    }

    fn combine(&self, rhs: &ResidueElement, rep: FpPoly) -> ResidueElement {
        assert!(self.same_field(rhs), "residue elements from different fields");
        self.field.element(&rep)
    }
}

impl PartialEq for ResidueElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.rep == other.rep
    }
}

impl Eq for ResidueElement {}

impl PartialOrd for ResidueElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ResidueElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .modulus
            .cmp(&other.field.modulus)
            .then_with(|| self.rep.coeffs.cmp(&other.rep.coeffs))
    }
}

impl Add for &ResidueElement {
    type Output = ResidueElement;
    fn add(self, rhs: &ResidueElement) -> ResidueElement {
        self.combine(rhs, &self.rep + &rhs.rep)
    }
}

impl Sub for &ResidueElement {
    type Output = ResidueElement;
    fn sub(self, rhs: &ResidueElement) -> ResidueElement {
        self.combine(rhs, &self.rep - &rhs.rep)
    }
}

impl Mul for &ResidueElement {
    type Output = ResidueElement;
    fn mul(self, rhs: &ResidueElement) -> ResidueElement {
        self.combine(rhs, &self.rep * &rhs.rep)
    }
}

impl Neg for &ResidueElement {
    type Output = ResidueElement;
    fn neg(self) -> ResidueElement {
        self.field.element(&-&self.rep)
    }
}

impl fmt::Display for ResidueElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] in F_{}^{}", self.rep, self.field.characteristic(), self.field.degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(p: u64, factors: &[(FpPoly, u32)]) -> FpPoly {
        let mut acc = FpPoly::one(p);
        for (g, e) in factors {
            for _ in 0..*e {
                acc = &acc * g;
            }
        }
        acc
    }

    #[test]
    fn x2_minus_3_mod_2() {
        let f = FpPoly::from_i64s(2, &[-3, 0, 1]);
        let fac = fp_factor(&f, 0).unwrap();
        assert_eq!(fac, vec![(FpPoly::from_i64s(2, &[1, 1]), 2)]);
    }

    #[test]
    fn x2_minus_3_mod_11() {
        let f = FpPoly::from_i64s(11, &[-3, 0, 1]);
        let fac = fp_factor(&f, 0).unwrap();
        assert_eq!(
            fac,
            vec![(FpPoly::from_i64s(11, &[5, 1]), 1), (FpPoly::from_i64s(11, &[6, 1]), 1)]
        );
    }

    #[test]
    fn x2_minus_3_mod_5_is_inert() {
        let f = FpPoly::from_i64s(5, &[-3, 0, 1]);
        let fac = fp_factor(&f, 0).unwrap();
        assert_eq!(fac, vec![(FpPoly::from_i64s(5, &[2, 0, 1]), 1)]);
        assert!(is_irreducible(&f));
    }

    #[test]
    fn zero_and_composite_rejected() {
        assert_eq!(fp_factor(&FpPoly::zero(7), 0), Err(FiniteFieldError::ZeroPolynomial));
        assert_eq!(
            fp_factor(&FpPoly::from_i64s(9, &[1, 1]), 0),
            Err(FiniteFieldError::NotPrime(9))
        );
    }

    #[test]
    fn inseparable_parts() {
        // (x^2 + x + 1)^4 * x^3 over F_2, and (x + 1)^3 * (x + 2)^6 over F_3
        let g = FpPoly::from_i64s(2, &[1, 1, 1]);
        let x = FpPoly::x(2);
        let f = product(2, &[(g.clone(), 4), (x.clone(), 3)]);
        assert_eq!(fp_factor(&f, 3).unwrap(), vec![(x, 3), (g, 4)]);

        let a = FpPoly::from_i64s(3, &[1, 1]);
        let b = FpPoly::from_i64s(3, &[2, 1]);
        let f = product(3, &[(a.clone(), 3), (b.clone(), 6)]);
        assert_eq!(fp_factor(&f, 9).unwrap(), vec![(a, 3), (b, 6)]);
    }

    #[test]
    fn constants_have_no_factors() {
        assert!(fp_factor(&FpPoly::constant(7, 3), 0).unwrap().is_empty());
    }

    #[test]
    fn irreducible_brute_force_agreement() {
        // Every monic polynomial of degree <= 6 over F_2 against trial division.
        for n in 1..=6usize {
            for bits in 0u32..(1 << n) {
                let mut c: Vec<u64> = (0..n).map(|i| u64::from(bits >> i & 1)).collect();
                c.push(1);
                let f = FpPoly::new(2, c);
                let mut has_divisor = false;
                for m in 1..=n / 2 {
                    for dbits in 0u32..(1 << m) {
                        let mut dc: Vec<u64> = (0..m).map(|i| u64::from(dbits >> i & 1)).collect();
                        dc.push(1);
                        if f.rem(&FpPoly::new(2, dc)).is_zero() {
                            has_divisor = true;
                        }
                    }
                }
                assert_eq!(is_irreducible(&f), !has_divisor, "{f}");
            }
        }
    }

    #[test]
    fn residue_examples() {
        let f2 = ResidueField::new(FpPoly::from_i64s(2, &[1, 1])).unwrap();
        assert!((&f2.one() + &f2.one()).is_zero());

        let f9 = ResidueField::new(FpPoly::from_i64s(3, &[1, 0, 1])).unwrap();
        let x = f9.element(&FpPoly::x(3));
        assert_eq!(&x * &x, f9.from_u64(2));
        assert_eq!(f9.order(), BigUint::from(9u32));
    }

    #[test]
    fn residue_inverse_in_f121() {
        let f121 = ResidueField::new(FpPoly::from_i64s(11, &[3, 0, 1])).unwrap();
        for a0 in 0..11 {
            for a1 in 0..11 {
                let a = f121.element(&FpPoly::from_i64s(11, &[a0, a1]));
                if a.is_zero() {
                    assert_eq!(a.inv(), Err(FiniteFieldError::NotInvertible));
                    continue;
                }
                assert!((&a * &a.inv().unwrap()).is_one());
                assert_eq!(a.frobenius(2), a);
            }
        }
    }

    #[test]
    fn residue_field_rejects_reducible() {
        let g = FpPoly::from_i64s(11, &[-3, 0, 1]);
        assert!(matches!(ResidueField::new(g), Err(FiniteFieldError::NotIrreducible(_))));
        assert_eq!(
            ResidueField::new(FpPoly::constant(5, 2)).unwrap_err(),
            FiniteFieldError::ConstantModulus
        );
    }

    #[test]
    fn checked_arith_rejects_mixed_fields() {
        let a = ResidueField::prime_field(5).unwrap().one();
        let b = ResidueField::prime_field(7).unwrap().one();
        assert_eq!(residue_arith(&a, &b, ResidueOp::Add), Err(FiniteFieldError::FieldMismatch));
        assert_eq!(residue_arith(&a, &b, ResidueOp::Inv).unwrap(), a);
    }
}
