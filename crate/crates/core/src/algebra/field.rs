//! Coefficient fields: `Q` and number fields `Q[x]/(m)`, plus the monodromy type [`Scalar`].

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Debug};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::factor::rational_roots;
use super::poly::{IPoly, QPoly};
use super::rat::{format_rat, Rat};
use crate::error::AlgebraError;

/// Exact field arithmetic over an explicit context.
///
/// The context carries whatever the elements need (the modulus, for number fields),
/// so elements stay plain data.
pub trait Field {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, AlgebraError>;
    fn from_rat(&self, r: &Rat) -> Self::Elem;
    /// Canonical coordinates, usable as a map key.
    fn key(&self, a: &Self::Elem) -> Vec<Rat>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_rat(&Rat::from_integer(BigInt::from(n)))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, AlgebraError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Integer power; negative exponents invert.
    fn pow(&self, a: &Self::Elem, e: i64) -> Result<Self::Elem, AlgebraError> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = self.one();
        let mut b = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            n >>= 1;
        }
        Ok(acc)
    }

    /// Horner evaluation of a rational polynomial at `x`.
    fn eval_poly(&self, p: &QPoly, x: &Self::Elem) -> Self::Elem {
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, x), &self.from_rat(c));
        }
        acc
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn inv(&self, a: &Rat) -> Result<Rat, AlgebraError> {
        if a.is_zero() {
            Err(AlgebraError::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn from_rat(&self, r: &Rat) -> Rat {
        r.clone()
    }
    fn key(&self, a: &Rat) -> Vec<Rat> {
        vec![a.clone()]
    }
}

/// `Q[x]/(m)` for a primitive integer polynomial `m` asserted irreducible by the caller.
///
/// Construction only checks the cheap necessary conditions (squarefree, no rational root
/// when the degree is at least two). A hidden factorization surfaces later as
/// [`AlgebraError::ZeroDivisorEncountered`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NumberField {
    min_poly: IPoly,
    modulus: QPoly,
}

impl NumberField {
    pub fn new(min_poly: IPoly) -> Result<Self, AlgebraError> {
        let deg = min_poly
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| AlgebraError::InvalidMinPoly("degree must be at least 1".into()))?;
        let q = min_poly.to_qpoly();
        let min_poly = IPoly::from_qpoly(&q);
        if !q.gcd(&q.derivative()).is_one() {
            return Err(AlgebraError::InvalidMinPoly(format!("{} is not squarefree", q)));
        }
        if deg >= 2 {
            if let Some(r) = rational_roots(&min_poly).first() {
                return Err(AlgebraError::InvalidMinPoly(format!(
                    "{} has the rational root {}",
                    q,
                    format_rat(r)
                )));
            }
        }
        Ok(NumberField { min_poly, modulus: q.monic() })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self, AlgebraError> {
        Self::new(IPoly::from_ints(coeffs))
    }

    pub fn min_poly(&self) -> &IPoly {
        &self.min_poly
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    /// The class of `x`, a root of the minimal polynomial.
    pub fn generator(&self) -> QPoly {
        self.reduce(&QPoly::x())
    }

    pub fn reduce(&self, p: &QPoly) -> QPoly {
        p.rem(&self.modulus)
    }

    /// Matrix of multiplication by `a` in the power basis `1, x, …, x^{n-1}` (column `j` is `a·x^j`).
    pub fn multiplication_matrix(&self, a: &QPoly) -> Vec<Vec<Rat>> {
        let n = self.degree();
        let mut m = vec![vec![Rat::zero(); n]; n];
        let mut col = self.reduce(a);
        for j in 0..n {
            for i in 0..n {
                m[i][j] = col.coeff(i);
            }
            col = self.reduce(&(&col * &QPoly::x()));
        }
        m
    }
}

impl Field for NumberField {
    type Elem = QPoly;

    fn zero(&self) -> QPoly {
        QPoly::zero()
    }
    fn one(&self) -> QPoly {
        self.reduce(&QPoly::one())
    }
    fn is_zero(&self, a: &QPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &QPoly, b: &QPoly) -> QPoly {
        a + b
    }
    fn sub(&self, a: &QPoly, b: &QPoly) -> QPoly {
        a - b
    }
    fn mul(&self, a: &QPoly, b: &QPoly) -> QPoly {
        (a * b).rem(&self.modulus)
    }
    fn neg(&self, a: &QPoly) -> QPoly {
        -a
    }
    fn inv(&self, a: &QPoly) -> Result<QPoly, AlgebraError> {
        if a.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let (g, s, _) = a.xgcd(&self.modulus);
        if !g.is_one() {
            return Err(AlgebraError::ZeroDivisorEncountered(g));
        }
        Ok(self.reduce(&s))
    }
    fn from_rat(&self, r: &Rat) -> QPoly {
        self.reduce(&QPoly::constant(r.clone()))
    }
    fn key(&self, a: &QPoly) -> Vec<Rat> {
        (0..self.degree()).map(|i| a.coeff(i)).collect()
    }
}

impl Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[x]/({})", self.min_poly.to_qpoly())
    }
}

/// A nonzero monodromy value: an exact rational or an element of a number field.
#[derive(Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(Rat),
    Algebraic { field: Arc<NumberField>, residue: QPoly },
}

impl Scalar {
    pub fn rational(r: Rat) -> Self {
        Scalar::Rational(r)
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rational(Rat::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rational(Rat::new(BigInt::from(n), BigInt::from(d)))
    }

    /// The root class `x` of `Q[x]/(m)`.
    pub fn root_of(field: Arc<NumberField>) -> Self {
        let residue = field.generator();
        Scalar::Algebraic { field, residue }
    }

    pub fn algebraic(field: Arc<NumberField>, residue: QPoly) -> Self {
        let residue = field.reduce(&residue);
        Scalar::Algebraic { field, residue }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Algebraic { residue, .. } => residue.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Algebraic { field, residue } => *residue == field.one(),
        }
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Algebraic { field, .. } => Some(field),
        }
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Algebraic { .. } => None,
        }
    }

    /// Residue of this scalar inside `field` (rationals embed as constants).
    pub fn in_field(&self, field: &NumberField) -> Result<QPoly, AlgebraError> {
        match self {
            Scalar::Rational(r) => Ok(field.from_rat(r)),
            Scalar::Algebraic { field: f, residue } if **f == *field => Ok(residue.clone()),
            Scalar::Algebraic { .. } => Err(AlgebraError::FieldMismatch),
        }
    }

    pub fn inverse(&self) -> Result<Scalar, AlgebraError> {
        match self {
            Scalar::Rational(r) => RationalField.inv(r).map(Scalar::Rational),
            Scalar::Algebraic { field, residue } => Ok(Scalar::Algebraic {
                field: field.clone(),
                residue: field.inv(residue)?,
            }),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar, AlgebraError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Algebraic { field, residue }, o) | (o, Scalar::Algebraic { field, residue }) => {
                let other = o.in_field(field)?;
                Ok(Scalar::Algebraic { field: field.clone(), residue: field.mul(residue, &other) })
            }
        }
    }

    /// Primitive integer polynomial whose roots include this scalar, with the same
    /// content-free leading and constant coefficients as its minimal polynomial up to powers.
    ///
    /// For a rational `p/q` this is `q·x - p`; for a field element it is the primitive part of
    /// the characteristic polynomial of multiplication by the element (a power of the
    /// minimal polynomial when the modulus is irreducible).
    pub fn defining_polynomial(&self) -> IPoly {
        match self {
            Scalar::Rational(r) => {
                IPoly::new(vec![-r.numer().clone(), r.denom().clone()])
            }
            Scalar::Algebraic { field, residue } => {
                if *residue == field.generator() {
                    return field.min_poly().clone();
                }
                let m = field.multiplication_matrix(residue);
                IPoly::from_qpoly(&super::linalg::char_poly(&m))
            }
        }
    }

    /// True iff the scalar is a root of a monic integer polynomial.
    pub fn is_algebraic_integer(&self) -> Result<bool, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroMonodromy);
        }
        Ok(match self {
            Scalar::Rational(r) => r.is_integer(),
            Scalar::Algebraic { .. } => self.defining_polynomial().leading().is_some_and(|c| c.abs().is_one()),
        })
    }

    /// True iff both the scalar and its inverse are algebraic integers.
    pub fn is_dirichlet_unit(&self) -> Result<bool, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroMonodromy);
        }
        Ok(match self {
            Scalar::Rational(r) => r.abs().is_one(),
            Scalar::Algebraic { .. } => {
                let p = self.defining_polynomial();
                p.leading().is_some_and(|c| c.abs().is_one()) && p.constant_term().abs().is_one()
            }
        })
    }

    /// Evaluates a rational polynomial at this scalar.
    pub fn eval_poly(&self, p: &QPoly) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(p.eval(r)),
            Scalar::Algebraic { field, residue } => Scalar::Algebraic {
                field: field.clone(),
                residue: field.eval_poly(p, residue),
            },
        }
    }
}

impl Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", format_rat(r)),
            Scalar::Algebraic { field, residue } => {
                write!(f, "[{} in {:?}]", residue, field)
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Rational(r) => write!(f, "{}", format_rat(r)),
            Scalar::Algebraic { field, residue } => {
                let m = field.min_poly().to_qpoly();
                if *residue == field.generator() {
                    write!(f, "root of {}", m)
                } else {
                    write!(f, "({}) at x = root of {}", residue, m)
                }
            }
        }
    }
}

/// Parses `p/q`, an integer, or `@minpoly:c0,c1,...` (the root class of that polynomial).
pub fn parse_scalar(s: &str) -> Result<Scalar, AlgebraError> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("@minpoly:") {
        let m = super::poly::parse_int_coeffs(rest)?;
        if m.degree() == Some(1) {
            // a degree-one "field" is just Q
            let c = m.coeffs();
            return Ok(Scalar::Rational(Rat::new(-c[0].clone(), c[1].clone())));
        }
        return Ok(Scalar::root_of(Arc::new(NumberField::new(m)?)));
    }
    super::rat::parse_rat(s).map(Scalar::Rational)
}

impl Scalar {
    pub fn is_negative_rational(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }
}
