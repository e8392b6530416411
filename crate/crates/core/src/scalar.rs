//! Exact field arithmetic over Q, prime fields F_p and extension fields F_{p^n}.
//!
//! A [`Field`] is the arithmetic context; a [`Scalar`] is a plain value whose
//! variant records which kind of field produced it. Hot loops use the
//! unchecked methods on [`Field`] (`add`, `mul`, ...); [`Field::arithmetic`]
//! is the checked entry point that rejects foreign operands.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Default bound on p^n for [`find_irreducible`].
pub const DEFAULT_IRREDUCIBLE_CAP: u64 = 4096;

/// Largest prime accepted; keeps residue products inside `u128` comfortably
/// and residues inside `u64`.
pub const MAX_PRIME: u64 = u32::MAX as u64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands do not belong to the same field")]
    FieldMismatch,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} is larger than the supported maximum {MAX_PRIME}")]
    PrimeTooLarge(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus must be a monic polynomial of degree {degree} with coefficients in [0, {p})")]
    BadModulus { p: u64, degree: usize },
    #[error("modulus is reducible over F_{p}")]
    ReducibleModulus { p: u64 },
    #[error("{p}^{n} exceeds the cap {cap}")]
    CapExceeded { p: u64, n: usize, cap: u64 },
    #[error("cannot parse {input:?} as an element of {field}")]
    Parse { input: String, field: String },
}

/// Description of a ground field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField {
        p: u64,
    },
    /// `modulus` lists the coefficients of a monic irreducible polynomial of
    /// degree `n`, constant term first (so it has `n + 1` entries).
    ExtensionField {
        p: u64,
        n: usize,
        modulus: Vec<u64>,
    },
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField { p } => write!(f, "F_{p}"),
            FieldSpec::ExtensionField { p, n, .. } => write!(f, "F_{p}^{n}"),
        }
    }
}

/// A field element. Rationals are kept in lowest terms with a positive
/// denominator, residues in `[0, p)`, extension elements as `n` reduced
/// coefficients (constant term first).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rational(BigRational),
    Residue(u64),
    Poly(Vec<u64>),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue(r) => write!(f, "{r}"),
            Scalar::Poly(c) => {
                for (k, x) in c.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

impl Scalar {
    /// Rebuilds the canonical form. Values produced by [`Field`] are already
    /// canonical, so this is the identity on them.
    pub fn canonical(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(BigRational::new(q.numer().clone(), q.denom().clone())),
            other => other.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

/// Arithmetic context for one ground field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Field {
    spec: FieldSpec,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.spec.fmt(f)
    }
}

impl Field {
    pub fn rationals() -> Field {
        Field { spec: FieldSpec::Rationals }
    }

    pub fn prime(p: u64) -> Result<Field, ScalarError> {
        check_prime(p)?;
        Ok(Field { spec: FieldSpec::PrimeField { p } })
    }

    /// F_{p^n} realised with the lexicographically smallest monic
    /// irreducible modulus. Degree 1 yields the prime field itself.
    pub fn extension(p: u64, n: usize) -> Result<Field, ScalarError> {
        if n == 1 {
            return Field::prime(p);
        }
        let modulus = find_irreducible(p, n, DEFAULT_IRREDUCIBLE_CAP)?;
        Ok(Field { spec: FieldSpec::ExtensionField { p, n, modulus } })
    }

    /// Validates `spec` (primality, monic irreducible modulus).
    pub fn from_spec(spec: FieldSpec) -> Result<Field, ScalarError> {
        match &spec {
            FieldSpec::Rationals => {}
            FieldSpec::PrimeField { p } => check_prime(*p)?,
            FieldSpec::ExtensionField { p, n, modulus } => {
                check_prime(*p)?;
                if *n == 0 {
                    return Err(ScalarError::ZeroDegree);
                }
                if modulus.len() != n + 1 || modulus[*n] != 1 || modulus.iter().any(|&c| c >= *p) {
                    return Err(ScalarError::BadModulus { p: *p, degree: *n });
                }
                if !is_irreducible(modulus, *p) {
                    return Err(ScalarError::ReducibleModulus { p: *p });
                }
            }
        }
        Ok(Field { spec })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn is_rationals(&self) -> bool {
        matches!(self.spec, FieldSpec::Rationals)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_rationals()
    }

    /// 0 for Q, otherwise p.
    pub fn characteristic(&self) -> u64 {
        match &self.spec {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField { p } | FieldSpec::ExtensionField { p, .. } => *p,
        }
    }

    /// Number of elements, `None` for Q. Saturates at `u128::MAX`.
    pub fn order(&self) -> Option<u128> {
        match &self.spec {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField { p } => Some(*p as u128),
            FieldSpec::ExtensionField { p, n, .. } => Some(saturating_pow(*p as u128, *n as u32)),
        }
    }

    pub fn zero(&self) -> Scalar {
        match &self.spec {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::PrimeField { .. } => Scalar::Residue(0),
            FieldSpec::ExtensionField { n, .. } => Scalar::Poly(vec![0; *n]),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match &self.spec {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::PrimeField { p } => Scalar::Residue(reduce_i64(v, *p)),
            FieldSpec::ExtensionField { p, n, .. } => {
                let mut c = vec![0; *n];
                c[0] = reduce_i64(v, *p);
                Scalar::Poly(c)
            }
        }
    }

    /// Image of the rational `num/den`; `None` when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Scalar> {
        match &self.spec {
            FieldSpec::Rationals => {
                if den.is_zero() {
                    None
                } else {
                    Some(Scalar::Rational(BigRational::new(num.clone(), den.clone())))
                }
            }
            _ => {
                let p = BigInt::from(self.characteristic());
                let n = num.mod_floor(&p).to_u64().unwrap_or(0);
                let d = den.mod_floor(&p).to_u64().unwrap_or(0);
                let nn = self.embed_residue(n);
                let dd = self.embed_residue(d);
                self.div(&nn, &dd)
            }
        }
    }

    fn embed_residue(&self, r: u64) -> Scalar {
        match &self.spec {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(r))),
            FieldSpec::PrimeField { .. } => Scalar::Residue(r),
            FieldSpec::ExtensionField { n, .. } => {
                let mut c = vec![0; *n];
                c[0] = r;
                Scalar::Poly(c)
            }
        }
    }

    /// Whether `a` is a canonical element of this field.
    pub fn contains(&self, a: &Scalar) -> bool {
        match (&self.spec, a) {
            (FieldSpec::Rationals, Scalar::Rational(q)) => q.denom().is_positive() && q.numer().gcd(q.denom()).is_one(),
            (FieldSpec::PrimeField { p }, Scalar::Residue(r)) => r < p,
            (FieldSpec::ExtensionField { p, n, .. }, Scalar::Poly(c)) => c.len() == *n && c.iter().all(|x| x < p),
            _ => false,
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue(r) => *r == 0,
            Scalar::Poly(c) => c.iter().all(|&x| x == 0),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&self.spec, a, b) {
            (FieldSpec::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (FieldSpec::PrimeField { p }, Scalar::Residue(x), Scalar::Residue(y)) => Scalar::Residue(add_mod(*x, *y, *p)),
            (FieldSpec::ExtensionField { p, .. }, Scalar::Poly(x), Scalar::Poly(y)) => {
                Scalar::Poly(x.iter().zip(y).map(|(&u, &v)| add_mod(u, v, *p)).collect())
            }
            _ => mismatch(),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (&self.spec, a) {
            (FieldSpec::Rationals, Scalar::Rational(x)) => Scalar::Rational(-x),
            (FieldSpec::PrimeField { p }, Scalar::Residue(x)) => Scalar::Residue(neg_mod(*x, *p)),
            (FieldSpec::ExtensionField { p, .. }, Scalar::Poly(x)) => Scalar::Poly(x.iter().map(|&u| neg_mod(u, *p)).collect()),
            _ => mismatch(),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&self.spec, a, b) {
            (FieldSpec::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x - y),
            (FieldSpec::PrimeField { p }, Scalar::Residue(x), Scalar::Residue(y)) => Scalar::Residue(add_mod(*x, neg_mod(*y, *p), *p)),
            _ => self.add(a, &self.neg(b)),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&self.spec, a, b) {
            (FieldSpec::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (FieldSpec::PrimeField { p }, Scalar::Residue(x), Scalar::Residue(y)) => Scalar::Residue(mul_mod(*x, *y, *p)),
            (FieldSpec::ExtensionField { p, modulus, .. }, Scalar::Poly(x), Scalar::Poly(y)) => {
                Scalar::Poly(poly_mul_mod(x, y, modulus, *p))
            }
            _ => mismatch(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        Some(match (&self.spec, a) {
            (FieldSpec::Rationals, Scalar::Rational(x)) => Scalar::Rational(x.recip()),
            (FieldSpec::PrimeField { p }, Scalar::Residue(x)) => Scalar::Residue(pow_mod(*x, p - 2, *p)),
            (FieldSpec::ExtensionField { .. }, Scalar::Poly(_)) => {
                let q = self.order().expect("finite field");
                self.pow(a, q - 2)
            }
            _ => mismatch(),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    pub fn pow(&self, a: &Scalar, mut e: u128) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Checked binary operation on two elements of this field.
    pub fn arithmetic(&self, op: Op, a: &Scalar, b: &Scalar) -> Result<Scalar, ScalarError> {
        if !self.contains(a) || !self.contains(b) {
            return Err(ScalarError::FieldMismatch);
        }
        Ok(match op {
            Op::Add => self.add(a, b),
            Op::Sub => self.sub(a, b),
            Op::Mul => self.mul(a, b),
            Op::Div => self.div(a, b).ok_or(ScalarError::DivisionByZero)?,
        })
    }

    /// Some element outside {0, 1}; `None` for F_2.
    pub fn nontrivial_element(&self) -> Option<Scalar> {
        match &self.spec {
            FieldSpec::PrimeField { p: 2 } => None,
            FieldSpec::ExtensionField { p: 2, n, .. } => {
                let mut c = vec![0; *n];
                c[1] = 1;
                Some(Scalar::Poly(c))
            }
            _ => Some(self.from_i64(2)),
        }
    }

    /// Element with index `i` in a finite field: the base-p digits of `i`
    /// are the coefficients, constant term first.
    pub fn element(&self, mut i: u64) -> Option<Scalar> {
        match &self.spec {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField { p } => (i < *p).then_some(Scalar::Residue(i)),
            FieldSpec::ExtensionField { p, n, .. } => {
                let mut c = vec![0; *n];
                for slot in c.iter_mut() {
                    *slot = i % p;
                    i /= p;
                }
                (i == 0).then_some(Scalar::Poly(c))
            }
        }
    }

    /// Inverse of [`Field::element`].
    pub fn index_of(&self, a: &Scalar) -> Option<u64> {
        match (&self.spec, a) {
            (FieldSpec::PrimeField { .. }, Scalar::Residue(r)) => Some(*r),
            (FieldSpec::ExtensionField { p, .. }, Scalar::Poly(c)) => Some(c.iter().rev().fold(0u64, |acc, &x| acc * p + x)),
            _ => None,
        }
    }

    /// Parses the textual form: `num/den` or `num` over Q, a (possibly
    /// negative) integer over F_p, comma-joined coefficients over F_{p^n}.
    pub fn parse(&self, s: &str) -> Result<Scalar, ScalarError> {
        let err = || ScalarError::Parse { input: s.to_string(), field: self.to_string() };
        let s = s.trim();
        match &self.spec {
            FieldSpec::Rationals => {
                let (num, den) = match s.split_once('/') {
                    Some((a, b)) => (parse_bigint(a).ok_or_else(err)?, parse_bigint(b).ok_or_else(err)?),
                    None => (parse_bigint(s).ok_or_else(err)?, BigInt::one()),
                };
                self.from_ratio(&num, &den).ok_or_else(err)
            }
            FieldSpec::PrimeField { .. } => {
                let (num, den) = match s.split_once('/') {
                    Some((a, b)) => (parse_bigint(a).ok_or_else(err)?, parse_bigint(b).ok_or_else(err)?),
                    None => (parse_bigint(s).ok_or_else(err)?, BigInt::one()),
                };
                self.from_ratio(&num, &den).ok_or_else(err)
            }
            FieldSpec::ExtensionField { p, n, .. } => {
                let parts: Vec<&str> = s.split(',').collect();
                if parts.len() > *n {
                    return Err(err());
                }
                let pb = BigInt::from(*p);
                let mut c = vec![0; *n];
                for (slot, part) in c.iter_mut().zip(parts) {
                    let v = parse_bigint(part).ok_or_else(err)?;
                    *slot = v.mod_floor(&pb).to_u64().ok_or_else(err)?;
                }
                Ok(Scalar::Poly(c))
            }
        }
    }
}

fn parse_bigint(s: &str) -> Option<BigInt> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    s.parse::<BigInt>().ok()
}

#[cold]
fn mismatch() -> ! {
    panic!("scalar does not belong to the field it is combined in")
}

fn saturating_pow(base: u128, exp: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}

fn check_prime(p: u64) -> Result<(), ScalarError> {
    if p > MAX_PRIME {
        return Err(ScalarError::PrimeTooLarge(p));
    }
    if !is_prime(p) {
        return Err(ScalarError::NotPrime(p));
    }
    Ok(())
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce_i64(v: i64, p: u64) -> u64 {
    (v as i128).rem_euclid(p as i128) as u64
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn neg_mod(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Product of two reduced polynomials modulo the monic `modulus`.
fn poly_mul_mod(x: &[u64], y: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let n = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * n.max(1)];
    for (i, &a) in x.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in y.iter().enumerate() {
            prod[i + j] = add_mod(prod[i + j], mul_mod(a, b, p), p);
        }
    }
    for k in (n..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for j in 0..n {
            let t = mul_mod(c, modulus[j], p);
            prod[k - n + j] = add_mod(prod[k - n + j], neg_mod(t, p), p);
        }
    }
    prod.truncate(n);
    prod
}

/// Remainder of `a` modulo the monic polynomial `b` (both constant term
/// first, coefficients reduced mod p).
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (j, &bj) in b.iter().enumerate() {
                let t = mul_mod(lead, bj, p);
                r[shift + j] = add_mod(r[shift + j], neg_mod(t, p), p);
            }
        }
        r.pop();
    }
    r
}

/// Trial division of the monic `f` by every monic polynomial of degree
/// 1..=deg(f)/2.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    for d in 1..=n / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut rest = idx;
            for _ in 0..d {
                g.push(rest % p);
                rest /= p;
            }
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible polynomial of degree `n`
/// over F_p, comparing coefficient vectors from the constant term upward.
/// Returns the `n + 1` coefficients, constant term first.
pub fn find_irreducible(p: u64, n: usize, cap: u64) -> Result<Vec<u64>, ScalarError> {
    check_prime(p)?;
    if n == 0 {
        return Err(ScalarError::ZeroDegree);
    }
    let total = u32::try_from(n).ok().and_then(|e| p.checked_pow(e)).filter(|&t| t <= cap).ok_or(ScalarError::CapExceeded { p, n, cap })?;
    for idx in 0..total {
        // c_0 is the most significant digit so that idx order is lex order.
        let mut c = vec![0u64; n + 1];
        let mut rest = idx;
        for k in (0..n).rev() {
            c[k] = rest % p;
            rest /= p;
        }
        c[n] = 1;
        if is_irreducible(&c, p) {
            return Ok(c);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
