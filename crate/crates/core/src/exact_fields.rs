//! Exact arithmetic in real quadratic extension towers over the rationals.
//!
//! A [`Tower`] is a chain of adjunctions `ℚ ⊂ ℚ(√d₁) ⊂ ℚ(√d₁)(√d₂) ⊂ …`
//! where each discriminant `dᵢ` is a positive non-square of the preceding
//! stage. A [`FieldElement`] stores a dense coefficient vector of length
//! `2^depth` over the product basis of the square-root generators, so the
//! zero test is coefficientwise and all arithmetic is exact.
//!
//! The tower generators are interpreted as the positive real roots, which
//! fixes a real embedding and makes [`FieldElement::sign`] well defined.

mod interval;
mod parser;

pub use parser::parse_element;

use crate::{Error, Rat, Result};
use num::{BigInt, One, Signed, Zero};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// Default cap on the number of quadratic adjunctions.
pub const DEFAULT_DEPTH_LIMIT: usize = 12;

/// A chain of real quadratic extensions of ℚ.
///
/// Stage `i` has basis size `2^i`; `discs[i]` is the coefficient vector of
/// the discriminant adjoined at stage `i`, expressed over the stage-`i`
/// basis. Towers are immutable; extension returns a new tower.
#[derive(Debug, Clone)]
pub struct Tower {
    discs: Vec<Vec<Rat>>,
    depth_limit: usize,
}

impl PartialEq for Tower {
    fn eq(&self, other: &Self) -> bool {
        self.discs == other.discs
    }
}

impl Eq for Tower {}

impl Tower {
    /// The trivial tower: just the rationals.
    pub fn rationals() -> Arc<Tower> {
        Arc::new(Tower {
            discs: Vec::new(),
            depth_limit: DEFAULT_DEPTH_LIMIT,
        })
    }

    /// The rationals with a custom depth limit.
    pub fn with_depth_limit(limit: usize) -> Arc<Tower> {
        Arc::new(Tower {
            discs: Vec::new(),
            depth_limit: limit,
        })
    }

    pub fn depth(&self) -> usize {
        self.discs.len()
    }

    pub fn depth_limit(&self) -> usize {
        self.depth_limit
    }

    /// Basis size of the top stage, `2^depth`.
    pub fn basis_len(&self) -> usize {
        1 << self.discs.len()
    }

    /// Coefficient vector of the `i`-th discriminant over the stage-`i` basis.
    pub fn disc_coeffs(&self, i: usize) -> &[Rat] {
        &self.discs[i]
    }

    /// The `i`-th discriminant as an element of stage `i`.
    pub fn disc(self: &Arc<Self>, i: usize) -> FieldElement {
        let mut coeffs = self.discs[i].clone();
        coeffs.resize(self.basis_len(), Rat::zero());
        FieldElement {
            tower: Arc::clone(self),
            coeffs,
        }
    }

    /// Whether `self`'s adjunction chain is an initial segment of `other`'s.
    pub fn is_prefix_of(&self, other: &Tower) -> bool {
        self.discs.len() <= other.discs.len() && self.discs == other.discs[..self.discs.len()]
    }

    /// Discriminants as `"p/q"` strings, one row per stage.
    pub fn to_rows(&self) -> Vec<Vec<String>> {
        self.discs
            .iter()
            .map(|d| d.iter().map(|c| c.to_string()).collect())
            .collect()
    }

    /// Rebuilds a tower from serialized discriminant rows, re-validating the
    /// positivity and non-squareness invariants stage by stage.
    pub fn from_rows(rows: &[Vec<String>], depth_limit: usize) -> Result<Arc<Tower>> {
        let mut tower = Tower::with_depth_limit(depth_limit);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != 1 << i {
                return Err(Error::DimensionMismatch {
                    expected: 1 << i,
                    got: row.len(),
                });
            }
            let mut coeffs = Vec::with_capacity(row.len());
            for s in row {
                coeffs.push(parse_rat(s)?);
            }
            let mut full = coeffs;
            full.resize(tower.basis_len(), Rat::zero());
            let disc = FieldElement::from_coeffs(Arc::clone(&tower), full)?;
            tower = extend_tower(&tower, &disc)?;
        }
        Ok(tower)
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.discs.is_empty() {
            return write!(f, "Q");
        }
        write!(f, "Q")?;
        for (i, d) in self.discs.iter().enumerate() {
            write!(f, "(r{} = sqrt({}))", i + 1, fmt_coeffs(d))?;
        }
        Ok(())
    }
}

/// Parses a rational in `"p/q"` or `"p"` form.
pub fn parse_rat(s: &str) -> Result<Rat> {
    Rat::from_str(s.trim()).map_err(|e| Error::Parse {
        pos: 0,
        msg: format!("bad rational {s:?}: {e}"),
    })
}

fn fmt_coeffs(coeffs: &[Rat]) -> String {
    let mut terms = Vec::new();
    for (idx, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut term = c.to_string();
        for bit in 0..usize::BITS {
            if idx & (1 << bit) != 0 {
                term.push_str(&format!("*r{}", bit + 1));
            }
        }
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// An exact element of a quadratic extension tower.
#[derive(Debug, Clone)]
pub struct FieldElement {
    tower: Arc<Tower>,
    coeffs: Vec<Rat>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        match common(self, other) {
            Ok((_, a, b)) => a == b,
            Err(_) => false,
        }
    }
}

impl Eq for FieldElement {}

/// Lifts both operands into the deeper of two prefix-compatible towers.
fn common(a: &FieldElement, b: &FieldElement) -> Result<(Arc<Tower>, Vec<Rat>, Vec<Rat>)> {
    if Arc::ptr_eq(&a.tower, &b.tower) || a.tower == b.tower {
        let t = if a.tower.depth_limit >= b.tower.depth_limit {
            Arc::clone(&a.tower)
        } else {
            Arc::clone(&b.tower)
        };
        return Ok((t, a.coeffs.clone(), b.coeffs.clone()));
    }
    if a.tower.is_prefix_of(&b.tower) {
        let mut lifted = a.coeffs.clone();
        lifted.resize(b.tower.basis_len(), Rat::zero());
        return Ok((Arc::clone(&b.tower), lifted, b.coeffs.clone()));
    }
    if b.tower.is_prefix_of(&a.tower) {
        let mut lifted = b.coeffs.clone();
        lifted.resize(a.tower.basis_len(), Rat::zero());
        return Ok((Arc::clone(&a.tower), a.coeffs.clone(), lifted));
    }
    Err(Error::TowerMismatch)
}

impl FieldElement {
    pub fn from_coeffs(tower: Arc<Tower>, coeffs: Vec<Rat>) -> Result<FieldElement> {
        if coeffs.len() != tower.basis_len() {
            return Err(Error::DimensionMismatch {
                expected: tower.basis_len(),
                got: coeffs.len(),
            });
        }
        Ok(FieldElement { tower, coeffs })
    }

    pub fn from_rat(tower: Arc<Tower>, r: Rat) -> FieldElement {
        let mut coeffs = vec![Rat::zero(); tower.basis_len()];
        coeffs[0] = r;
        FieldElement { tower, coeffs }
    }

    pub fn from_int(tower: Arc<Tower>, n: i64) -> FieldElement {
        Self::from_rat(tower, Rat::from_integer(n.into()))
    }

    pub fn zero(tower: Arc<Tower>) -> FieldElement {
        Self::from_rat(tower, Rat::zero())
    }

    pub fn one(tower: Arc<Tower>) -> FieldElement {
        Self::from_rat(tower, Rat::one())
    }

    /// The `i`-th square-root generator `√dᵢ` (zero-based).
    pub fn generator(tower: Arc<Tower>, i: usize) -> FieldElement {
        let mut coeffs = vec![Rat::zero(); tower.basis_len()];
        coeffs[1 << i] = Rat::one();
        FieldElement { tower, coeffs }
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rat::is_zero)
    }

    /// The element as a rational, if it lies in the prime field.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(Rat::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the element in a deeper tower of which its own tower is
    /// a prefix.
    pub fn lift_to(&self, tower: &Arc<Tower>) -> Result<FieldElement> {
        if !self.tower.is_prefix_of(tower) {
            return Err(Error::TowerMismatch);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(tower.basis_len(), Rat::zero());
        Ok(FieldElement {
            tower: Arc::clone(tower),
            coeffs,
        })
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement> {
        let (tower, a, b) = common(self, other)?;
        let coeffs = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        Ok(FieldElement { tower, coeffs })
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        let (tower, a, b) = common(self, other)?;
        let coeffs = a.iter().zip(&b).map(|(x, y)| x - y).collect();
        Ok(FieldElement { tower, coeffs })
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            tower: Arc::clone(&self.tower),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        let (tower, a, b) = common(self, other)?;
        let coeffs = mul_slice(&a, &b, tower.depth(), &tower.discs);
        Ok(FieldElement { tower, coeffs })
    }

    pub fn scale(&self, r: &Rat) -> FieldElement {
        FieldElement {
            tower: Arc::clone(&self.tower),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        match inv_slice(&self.coeffs, self.tower.depth(), &self.tower.discs) {
            Some(coeffs) => Ok(FieldElement {
                tower: Arc::clone(&self.tower),
                coeffs,
            }),
            None => Err(Error::DivisionByZero),
        }
    }

    pub fn try_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.try_mul(&other.inv()?)
    }

    pub fn square(&self) -> FieldElement {
        self.try_mul(self).expect("same tower")
    }

    pub fn pow(&self, exp: i64) -> Result<FieldElement> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = FieldElement::one(Arc::clone(&self.tower));
        for _ in 0..exp.unsigned_abs() {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    /// If the element is a square in its own tower, returns the nonnegative
    /// square root; otherwise `None`. Recursive criterion: `a + b√d` is a
    /// square in `K(√d)` iff the norm `a² − b²d` is a square `c²` in `K` and
    /// one of `(a±c)/2` is a square in `K`.
    pub fn is_square(&self) -> Option<FieldElement> {
        let root = is_square_slice(&self.coeffs, self.tower.depth(), &self.tower.discs)?;
        let r = FieldElement {
            tower: Arc::clone(&self.tower),
            coeffs: root,
        };
        debug_assert_eq!(r.square(), *self);
        if r.sign() < 0 {
            Some(r.neg())
        } else {
            Some(r)
        }
    }

    /// Sign of the element under the fixed real embedding (positive roots).
    ///
    /// Decided by the exact zero test, otherwise by interval refinement with
    /// doubling precision until the enclosure excludes zero.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let mut prec = 32u32;
        loop {
            let iv = interval::enclose(&self.coeffs, &self.tower.discs, prec);
            if iv.lo.is_positive() {
                return 1;
            }
            if iv.hi.is_negative() {
                return -1;
            }
            prec *= 2;
        }
    }

    /// Exact square root, adjoining a new generator when the element is not
    /// a square in its current tower. The result is nonnegative and lives in
    /// the (possibly extended) tower it reports.
    pub fn sqrt_nonneg(&self) -> Result<FieldElement> {
        match self.sign() {
            0 => Ok(self.clone()),
            -1 => Err(Error::NegativeSquareRoot),
            _ => {
                if let Some(r) = self.is_square() {
                    return Ok(r);
                }
                let tower = extend_tower(&self.tower, self)?;
                Ok(FieldElement::generator(
                    Arc::clone(&tower),
                    tower.depth() - 1,
                ))
            }
        }
    }

    /// Coefficients as `"p/q"` strings.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_coeff_strings(tower: Arc<Tower>, strings: &[String]) -> Result<FieldElement> {
        let coeffs = strings
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()?;
        FieldElement::from_coeffs(tower, coeffs)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_coeffs(&self.coeffs))
    }
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.try_add(rhs).expect("tower mismatch in add")
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.try_sub(rhs).expect("tower mismatch in sub")
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.try_mul(rhs).expect("tower mismatch in mul")
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

/// `γ ≥ 0` with `γ² = a² + b²` exactly, extending the tower by one
/// adjunction when `a² + b²` is not a square in the current tower.
pub fn hypot(a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
    let s = a.square().try_add(&b.square())?;
    s.sqrt_nonneg()
}

/// Adjoins `√disc` to a tower. The discriminant must be positive and not a
/// square; degenerate adjunctions are refused so equality testing stays
/// sound.
pub fn extend_tower(tower: &Arc<Tower>, disc: &FieldElement) -> Result<Arc<Tower>> {
    let disc = disc.lift_to(tower)?;
    if tower.depth() >= tower.depth_limit {
        return Err(Error::DepthLimit {
            limit: tower.depth_limit,
        });
    }
    if disc.sign() <= 0 {
        return Err(Error::NegativeSquareRoot);
    }
    if disc.is_square().is_some() {
        return Err(Error::NotASquare(format!(
            "{disc} is already a square; adjunction would be degenerate"
        )));
    }
    let mut discs = tower.discs.clone();
    discs.push(disc.coeffs.clone());
    Ok(Arc::new(Tower {
        discs,
        depth_limit: tower.depth_limit,
    }))
}

/// A coefficient-lift map between towers, given by images of the source
/// generators. Evaluation substitutes the images into the basis expansion.
#[derive(Debug, Clone)]
pub struct TowerLift {
    source: Arc<Tower>,
    target: Arc<Tower>,
    images: Vec<FieldElement>,
}

impl TowerLift {
    pub fn new(
        source: Arc<Tower>,
        target: Arc<Tower>,
        images: Vec<FieldElement>,
    ) -> Result<TowerLift> {
        if images.len() != source.depth() {
            return Err(Error::DimensionMismatch {
                expected: source.depth(),
                got: images.len(),
            });
        }
        Ok(TowerLift {
            source,
            target,
            images,
        })
    }

    /// The inclusion of a prefix tower into a deeper one.
    pub fn inclusion(source: Arc<Tower>, target: Arc<Tower>) -> Result<TowerLift> {
        if !source.is_prefix_of(&target) {
            return Err(Error::TowerMismatch);
        }
        let images = (0..source.depth())
            .map(|i| FieldElement::generator(Arc::clone(&target), i))
            .collect();
        Ok(TowerLift {
            source,
            target,
            images,
        })
    }

    pub fn source(&self) -> &Arc<Tower> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Tower> {
        &self.target
    }

    pub fn images(&self) -> &[FieldElement] {
        &self.images
    }

    pub fn apply(&self, x: &FieldElement) -> Result<FieldElement> {
        if !x.tower.is_prefix_of(&self.source) {
            return Err(Error::TowerMismatch);
        }
        substitute(&x.coeffs, &self.images, &self.target)
    }
}

/// Evaluates a coefficient vector against generator images:
/// `Σ_S c_S · Π_{i∈S} images[i]`.
pub(crate) fn substitute(
    coeffs: &[Rat],
    images: &[FieldElement],
    target: &Arc<Tower>,
) -> Result<FieldElement> {
    // basis[s] = product of images over the bits of s, built incrementally
    let mut basis = vec![FieldElement::one(Arc::clone(target))];
    let gens_needed = coeffs.len().trailing_zeros() as usize;
    for i in 0..gens_needed {
        for s in 0..(1 << i) {
            let prod = basis[s].try_mul(&images[i])?;
            basis.push(prod);
        }
    }
    let mut acc = FieldElement::zero(Arc::clone(target));
    for (s, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc = acc.try_add(&basis[s].scale(c))?;
        }
    }
    Ok(acc)
}

/// Merges two towers: adjoins `t2`'s discriminants to `t1` in order,
/// skipping any that become squares, and returns the merged tower with the
/// lift maps for both operands.
pub fn merge_towers(t1: &Arc<Tower>, t2: &Arc<Tower>) -> Result<(Arc<Tower>, TowerLift, TowerLift)> {
    let mut merged = if t1.depth_limit >= t2.depth_limit {
        Arc::clone(t1)
    } else {
        Arc::new(Tower {
            discs: t1.discs.clone(),
            depth_limit: t2.depth_limit,
        })
    };
    let mut images2: Vec<FieldElement> = Vec::with_capacity(t2.depth());
    for i in 0..t2.depth() {
        // express t2's i-th discriminant in the merged tower
        let d_img = substitute(t2.disc_coeffs(i), &images2, &merged)?;
        match d_img.is_square() {
            Some(root) => images2.push(root),
            None => {
                merged = extend_tower(&merged, &d_img)?;
                images2.push(FieldElement::generator(
                    Arc::clone(&merged),
                    merged.depth() - 1,
                ));
            }
        }
    }
    let images2 = images2
        .into_iter()
        .map(|g| g.lift_to(&merged))
        .collect::<Result<Vec<_>>>()?;
    let lift1 = TowerLift::inclusion(Arc::clone(t1), Arc::clone(&merged))?;
    let lift2 = TowerLift::new(Arc::clone(t2), Arc::clone(&merged), images2)?;
    Ok((merged, lift1, lift2))
}

// ---------------------------------------------------------------------------
// coefficient-vector kernels
// ---------------------------------------------------------------------------

fn add_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Multiplication at a given tower level by recursive splitting:
/// `(a₀ + a₁√d)(b₀ + b₁√d) = (a₀b₀ + a₁b₁d) + (a₀b₁ + a₁b₀)√d`,
/// with the cross terms combined Karatsuba-style.
fn mul_slice(a: &[Rat], b: &[Rat], level: usize, discs: &[Vec<Rat>]) -> Vec<Rat> {
    if level == 0 {
        return vec![&a[0] * &b[0]];
    }
    let h = a.len() / 2;
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h);
    let m0 = mul_slice(a0, b0, level - 1, discs);
    let m1 = mul_slice(a1, b1, level - 1, discs);
    let asum = add_vec(a0, a1);
    let bsum = add_vec(b0, b1);
    let m2 = mul_slice(&asum, &bsum, level - 1, discs);
    let high = sub_vec(&sub_vec(&m2, &m0), &m1);
    let m1d = mul_slice(&m1, &discs[level - 1], level - 1, discs);
    let mut out = add_vec(&m0, &m1d);
    out.extend(high);
    out
}

/// Inverse at a given level; `None` for zero. Writing `x = a + b√d`, the
/// norm `a² − b²d` vanishes only for `x = 0` because `d` is not a square.
fn inv_slice(x: &[Rat], level: usize, discs: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    if level == 0 {
        if x[0].is_zero() {
            return None;
        }
        return Some(vec![x[0].recip()]);
    }
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    if b.iter().all(Rat::is_zero) {
        let mut out = inv_slice(a, level - 1, discs)?;
        out.extend(vec![Rat::zero(); h]);
        return Some(out);
    }
    let a2 = mul_slice(a, a, level - 1, discs);
    let b2 = mul_slice(b, b, level - 1, discs);
    let b2d = mul_slice(&b2, &discs[level - 1], level - 1, discs);
    let norm = sub_vec(&a2, &b2d);
    let ninv = inv_slice(&norm, level - 1, discs)?;
    let mut out = mul_slice(a, &ninv, level - 1, discs);
    let low = mul_slice(b, &ninv, level - 1, discs);
    out.extend(low.iter().map(|c| -c));
    Some(out)
}

fn is_square_slice(x: &[Rat], level: usize, discs: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    if level == 0 {
        return rat_sqrt(&x[0]).map(|r| vec![r]);
    }
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let d = &discs[level - 1];
    if b.iter().all(Rat::is_zero) {
        if let Some(e) = is_square_slice(a, level - 1, discs) {
            let mut out = e;
            out.extend(vec![Rat::zero(); h]);
            return Some(out);
        }
        // a might be f²·d
        let dinv = inv_slice(d, level - 1, discs).expect("discriminant is nonzero");
        let quot = mul_slice(a, &dinv, level - 1, discs);
        if let Some(f) = is_square_slice(&quot, level - 1, discs) {
            let mut out = vec![Rat::zero(); h];
            out.extend(f);
            return Some(out);
        }
        return None;
    }
    let a2 = mul_slice(a, a, level - 1, discs);
    let b2 = mul_slice(b, b, level - 1, discs);
    let b2d = mul_slice(&b2, d, level - 1, discs);
    let norm = sub_vec(&a2, &b2d);
    let c = is_square_slice(&norm, level - 1, discs)?;
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    for cand in [add_vec(a, &c), sub_vec(a, &c)] {
        let s: Vec<Rat> = cand.iter().map(|v| v * &half).collect();
        if let Some(e) = is_square_slice(&s, level - 1, discs) {
            if e.iter().all(Rat::is_zero) {
                continue;
            }
            let two_e: Vec<Rat> = e.iter().map(|v| v + v).collect();
            let inv2e = inv_slice(&two_e, level - 1, discs).expect("nonzero");
            let f = mul_slice(b, &inv2e, level - 1, discs);
            let mut root = e;
            root.extend(f);
            // guard against the wrong branch of the ± choice
            let sq = mul_slice(&root, &root, level, discs);
            if sq == x {
                return Some(root);
            }
        }
    }
    None
}

/// Nonnegative rational square root, if one exists.
fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let pn = int_sqrt_exact(r.numer())?;
    let pd = int_sqrt_exact(r.denom())?;
    Some(Rat::new(pn, pd))
}

fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}
