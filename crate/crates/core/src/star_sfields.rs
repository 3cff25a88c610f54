//! ⋆-sfields: fields with an involutive antiautomorphism.
//!
//! Two scalar kinds are registered: tower elements with the identity
//! involution (commutative) and rational quaternions with conjugation
//! (noncommutative). Both are Pythagorean and formally real, which is what
//! the inner-product layer needs for unit vectors and orthonormal bases.

use crate::exact_fields::{FieldElement, Tower};
use crate::{Error, Rat, Result};
use num::{BigInt, One, Signed, Zero};
use serde::Serialize;
use std::fmt;
use std::sync::Arc;

/// Scalar of a Pythagorean formally real ⋆-sfield.
///
/// `star` is an involutive antiautomorphism, `hypot` witnesses the
/// Pythagorean property: it returns `γ` with `γγ⋆ = aa⋆ + bb⋆` exactly.
pub trait StarScalar: Clone + PartialEq + fmt::Debug + fmt::Display + Sized {
    const COMMUTATIVE: bool;

    fn kind_name() -> &'static str;
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(r: &Rat) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn star(&self) -> Self;
    fn is_zero(&self) -> bool;

    /// Pythagorean witness: `γ` with `γγ⋆ = aa⋆ + bb⋆`.
    fn hypot(a: &Self, b: &Self) -> Result<Self>;

    /// The rational coefficients of the scalar over its fixed basis.
    fn to_rationals(&self) -> Vec<Rat>;

    /// The norm `x x⋆`.
    fn norm(&self) -> Self {
        self.mul(&self.star())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `γ` with `γγ⋆ = Σᵢ cᵢcᵢ⋆`, by iterated `hypot`.
    fn norm_sqrt(coords: &[Self]) -> Result<Self> {
        let mut acc = Self::zero();
        for c in coords {
            acc = Self::hypot(&acc, c)?;
        }
        Ok(acc)
    }

    /// Rewrites the slice so all entries are mutually combinable (towers
    /// along a chain get lifted to the deepest one). No-op for scalar kinds
    /// without contextual state.
    fn unify(xs: &mut [Self]) -> Result<()> {
        let _ = xs;
        Ok(())
    }
}

impl StarScalar for FieldElement {
    const COMMUTATIVE: bool = true;

    fn kind_name() -> &'static str {
        "tower"
    }

    fn zero() -> Self {
        FieldElement::zero(Tower::rationals())
    }

    fn one() -> Self {
        FieldElement::one(Tower::rationals())
    }

    fn from_rat(r: &Rat) -> Self {
        FieldElement::from_rat(Tower::rationals(), r.clone())
    }

    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("tower mismatch")
    }

    fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("tower mismatch")
    }

    fn neg(&self) -> Self {
        FieldElement::neg(self)
    }

    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("tower mismatch")
    }

    fn inv(&self) -> Result<Self> {
        FieldElement::inv(self)
    }

    fn star(&self) -> Self {
        // identity involution on commutative towers
        self.clone()
    }

    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }

    fn hypot(a: &Self, b: &Self) -> Result<Self> {
        crate::exact_fields::hypot(a, b)
    }

    fn to_rationals(&self) -> Vec<Rat> {
        self.coeffs().to_vec()
    }

    fn is_one(&self) -> bool {
        FieldElement::is_one(self)
    }

    fn norm_sqrt(coords: &[Self]) -> Result<Self> {
        // single adjunction of √(Σ cᵢ²) instead of one per iterated hypot
        let mut acc = <Self as StarScalar>::zero();
        for c in coords {
            acc = acc.try_add(&c.square())?;
        }
        acc.sqrt_nonneg()
    }

    fn unify(xs: &mut [Self]) -> Result<()> {
        let mut deepest: Option<Arc<Tower>> = None;
        for x in xs.iter() {
            match &deepest {
                None => deepest = Some(Arc::clone(x.tower())),
                Some(t) => {
                    if t.is_prefix_of(x.tower()) {
                        deepest = Some(Arc::clone(x.tower()));
                    } else if !x.tower().is_prefix_of(t) {
                        return Err(Error::TowerMismatch);
                    }
                }
            }
        }
        if let Some(t) = deepest {
            for x in xs.iter_mut() {
                *x = x.lift_to(&t)?;
            }
        }
        Ok(())
    }
}

/// Element of the rational-quaternion ⋆-sfield `ℚ + ℚi + ℚj + ℚk`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quaternion {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

impl Quaternion {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Quaternion {
        Quaternion { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Quaternion {
        Quaternion {
            a: Rat::from_integer(a.into()),
            b: Rat::from_integer(b.into()),
            c: Rat::from_integer(c.into()),
            d: Rat::from_integer(d.into()),
        }
    }

    pub fn i() -> Quaternion {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Quaternion {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Quaternion {
        Self::from_ints(0, 0, 0, 1)
    }

    /// The rational `a² + b² + c² + d²`, equal to `q q⋆`.
    pub fn norm_rat(&self) -> Rat {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c + &self.d * &self.d
    }

    pub fn coeff_strings(&self) -> [String; 4] {
        [
            self.a.to_string(),
            self.b.to_string(),
            self.c.to_string(),
            self.d.to_string(),
        ]
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (coef, unit) in [(&self.a, ""), (&self.b, "i"), (&self.c, "j"), (&self.d, "k")] {
            if !coef.is_zero() {
                terms.push(format!("{coef}{unit}"));
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl StarScalar for Quaternion {
    const COMMUTATIVE: bool = false;

    fn kind_name() -> &'static str {
        "quaternion"
    }

    fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    fn from_rat(r: &Rat) -> Self {
        Quaternion::new(r.clone(), Rat::zero(), Rat::zero(), Rat::zero())
    }

    fn add(&self, o: &Self) -> Self {
        Quaternion::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }

    fn sub(&self, o: &Self) -> Self {
        Quaternion::new(&self.a - &o.a, &self.b - &o.b, &self.c - &o.c, &self.d - &o.d)
    }

    fn neg(&self) -> Self {
        Quaternion::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    /// Hamilton product: `i² = j² = k² = −1`, `ij = k = −ji`.
    fn mul(&self, o: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }

    /// `q⁻¹ = q⋆ / (qq⋆)`.
    fn inv(&self) -> Result<Self> {
        let n = self.norm_rat();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let s = self.star();
        let ninv = n.recip();
        Ok(Quaternion::new(
            &s.a * &ninv,
            &s.b * &ninv,
            &s.c * &ninv,
            &s.d * &ninv,
        ))
    }

    fn star(&self) -> Self {
        Quaternion::new(self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    fn hypot(a: &Self, b: &Self) -> Result<Self> {
        quat_hypot(a, b)
    }

    fn to_rationals(&self) -> Vec<Rat> {
        vec![self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }
}

/// Cap on the cleared-denominator integer fed to the four-square search.
const FOUR_SQUARE_CAP: u64 = 1 << 40;

/// Writes a nonnegative rational `r = p/q` as `s₁² + s₂² + s₃² + s₄²` with
/// rational `sᵢ`, by decomposing the integer `N = p·q` (so that `r = N/q²`)
/// into four integer squares and dividing by `q`.
pub fn four_square(r: &Rat) -> Result<[Rat; 4]> {
    if r.is_negative() {
        return Err(Error::NegativeSquareRoot);
    }
    let n = r.numer() * r.denom();
    let n: u64 = u64::try_from(&n).map_err(|_| Error::SizeLimit {
        size: usize::MAX,
        cap: FOUR_SQUARE_CAP as usize,
    })?;
    if n > FOUR_SQUARE_CAP {
        return Err(Error::SizeLimit {
            size: n as usize,
            cap: FOUR_SQUARE_CAP as usize,
        });
    }
    let [s1, s2, s3, s4] = four_square_u64(n);
    let t = Rat::new(BigInt::one(), r.denom().clone());
    Ok([
        Rat::from_integer(s1.into()) * &t,
        Rat::from_integer(s2.into()) * &t,
        Rat::from_integer(s3.into()) * &t,
        Rat::from_integer(s4.into()) * &t,
    ])
}

/// Bounded brute force over `s₁ ≥ s₂ ≥ s₃ ≥ s₄ ≥ 0`; terminates by
/// Lagrange's four-square theorem.
fn four_square_u64(n: u64) -> [u64; 4] {
    let isqrt = |m: u64| (m as f64).sqrt() as u64 + 2;
    let exact_isqrt = |m: u64| {
        let mut r = isqrt(m);
        while r * r > m {
            r -= 1;
        }
        r
    };
    let r1 = exact_isqrt(n);
    for s1 in (0..=r1).rev() {
        let rem1 = n - s1 * s1;
        let r2 = exact_isqrt(rem1).min(s1);
        for s2 in (0..=r2).rev() {
            let rem2 = rem1 - s2 * s2;
            let r3 = exact_isqrt(rem2).min(s2);
            for s3 in (0..=r3).rev() {
                let rem3 = rem2 - s3 * s3;
                let s4 = exact_isqrt(rem3);
                if s4 <= s3 && s4 * s4 == rem3 {
                    return [s1, s2, s3, s4];
                }
            }
        }
    }
    unreachable!("Lagrange's theorem guarantees a decomposition")
}

/// `γ` with `γγ⋆ = αα⋆ + ββ⋆` exactly, built from the four-square witness:
/// `γ = s₁ + s₂i + s₃j + s₄k` with nonnegative coefficients in descending
/// order.
pub fn quat_hypot(alpha: &Quaternion, beta: &Quaternion) -> Result<Quaternion> {
    let target = alpha.norm_rat() + beta.norm_rat();
    let [s1, s2, s3, s4] = four_square(&target)?;
    let gamma = Quaternion::new(s1, s2, s3, s4);
    debug_assert_eq!(gamma.norm_rat(), target);
    Ok(gamma)
}

/// One case of the `x² = 2` insolvability analysis.
#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub case: String,
    pub argument: String,
    pub contradiction: bool,
}

/// Structured trace showing that no rational quaternion squares to 2.
#[derive(Debug, Clone, Serialize)]
pub struct NoSqrt2Report {
    pub expansion: String,
    pub cases: Vec<CaseReport>,
    pub insolvable: bool,
}

/// Case analysis for the insolvability of `α² = 2` over the rational
/// quaternions: expanding `(a+bi+cj+dk)² = a²−b²−c²−d² + 2a(bi+cj+dk)`,
/// the case `a = 0` would force `−(b²+c²+d²) = 2`, and `a ≠ 0` forces
/// `b = c = d = 0` and `a² = 2`, which the rational-root test refutes.
pub fn verify_no_sqrt2() -> NoSqrt2Report {
    let two = Rat::from_integer(2.into());

    // a = 0: the real part −(b²+c²+d²) is ≤ 0, so it cannot equal 2 > 0.
    let zero_case_contradiction = two.is_positive();

    // a ≠ 0: imaginary parts 2ab = 2ac = 2ad = 0 force b = c = d = 0,
    // leaving a² = 2 with rational a; refute by the exact square test.
    let two_elem = FieldElement::from_int(Tower::rationals(), 2);
    let nonzero_case_contradiction = two_elem.is_square().is_none();

    NoSqrt2Report {
        expansion: "(a+bi+cj+dk)^2 = a^2-b^2-c^2-d^2 + 2a(bi+cj+dk)".to_string(),
        cases: vec![
            CaseReport {
                case: "a = 0".to_string(),
                argument: "-(b^2+c^2+d^2) <= 0 cannot equal 2 > 0".to_string(),
                contradiction: zero_case_contradiction,
            },
            CaseReport {
                case: "a != 0".to_string(),
                argument:
                    "2ab = 2ac = 2ad = 0 forces b = c = d = 0; a^2 = 2 has no rational root"
                        .to_string(),
                contradiction: nonzero_case_contradiction,
            },
        ],
        insolvable: zero_case_contradiction && nonzero_case_contradiction,
    }
}

/// Parses a quaternion literal: signed terms `r`, `r i`, `r j`, `r k` with
/// rational coefficients, e.g. `1 + 2i - 3/4 j`.
pub fn parse_quaternion(text: &str) -> Result<Quaternion> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let mut q = <Quaternion as StarScalar>::zero();
    let err = |pos: usize, msg: &str| Error::Parse {
        pos,
        msg: msg.to_string(),
    };
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let mut first = true;
    loop {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            if first {
                return Err(err(pos, "empty quaternion literal"));
            }
            return Ok(q);
        }
        let mut sign = Rat::one();
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
        } else if !first {
            return Err(err(pos, "expected '+' or '-' between terms"));
        }
        skip_ws(&mut pos);
        // coefficient (optional before a unit)
        let num_start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
            pos += 1;
        }
        let coef = if pos > num_start {
            let s = std::str::from_utf8(&bytes[num_start..pos]).unwrap();
            crate::exact_fields::parse_rat(s)?
        } else {
            Rat::one()
        };
        skip_ws(&mut pos);
        let unit = if pos < bytes.len() && matches!(bytes[pos], b'i' | b'j' | b'k') {
            let u = bytes[pos];
            pos += 1;
            Some(u)
        } else {
            None
        };
        if unit.is_none() && pos == num_start {
            return Err(err(pos, "expected a coefficient or unit"));
        }
        let coef = coef * sign;
        match unit {
            None => q.a += coef,
            Some(b'i') => q.b += coef,
            Some(b'j') => q.c += coef,
            Some(b'k') => q.d += coef,
            _ => unreachable!(),
        }
        first = false;
    }
}
