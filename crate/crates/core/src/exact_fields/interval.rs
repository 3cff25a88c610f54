//! Rational interval arithmetic used by the sign routine.
//!
//! Every tower generator is enclosed by a dyadic-rational interval at the
//! requested precision; element enclosures follow the coefficient split.

use crate::Rat;
use num::{BigInt, Integer, Signed, Zero};

#[derive(Debug, Clone)]
pub(crate) struct Iv {
    pub lo: Rat,
    pub hi: Rat,
}

impl Iv {
    fn point(r: Rat) -> Iv {
        Iv {
            lo: r.clone(),
            hi: r,
        }
    }

    fn add(&self, other: &Iv) -> Iv {
        Iv {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    fn mul(&self, other: &Iv) -> Iv {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        Iv { lo, hi }
    }

    /// Interval enclosing `√self` for `self ⊆ [0, ∞)`, with endpoints on the
    /// dyadic grid `2^-prec`. A slightly negative lower endpoint (coarse
    /// enclosure of a positive value) is clamped to zero.
    fn sqrt(&self, prec: u32) -> Iv {
        let lo = if self.lo.is_positive() {
            sqrt_lower(&self.lo, prec)
        } else {
            Rat::zero()
        };
        let hi = sqrt_upper(&self.hi, prec);
        Iv { lo, hi }
    }
}

/// Largest `p/2^prec` with `(p/2^prec)² ≤ r`.
fn sqrt_lower(r: &Rat, prec: u32) -> Rat {
    let scale: BigInt = BigInt::from(1) << prec;
    let scaled = (r.numer() * &scale * &scale).div_floor(r.denom());
    Rat::new(scaled.sqrt(), scale)
}

/// Some `p/2^prec` with `(p/2^prec)² ≥ r`.
fn sqrt_upper(r: &Rat, prec: u32) -> Rat {
    let scale: BigInt = BigInt::from(1) << prec;
    let scaled = (r.numer() * &scale * &scale).div_ceil(r.denom());
    Rat::new(scaled.sqrt() + 1, scale)
}

/// Encloses an element, given its coefficient vector and the tower's
/// discriminant rows, at the given working precision.
pub(crate) fn enclose(coeffs: &[Rat], discs: &[Vec<Rat>], prec: u32) -> Iv {
    let mut gens: Vec<Iv> = Vec::with_capacity(discs.len());
    for d in discs {
        let d_iv = eval(d, &gens);
        gens.push(d_iv.sqrt(prec));
    }
    eval(coeffs, &gens)
}

fn eval(coeffs: &[Rat], gens: &[Iv]) -> Iv {
    if coeffs.len() == 1 {
        return Iv::point(coeffs[0].clone());
    }
    let h = coeffs.len() / 2;
    let level = coeffs.len().trailing_zeros() as usize;
    let (a, b) = coeffs.split_at(h);
    let a_iv = eval(a, gens);
    let b_iv = eval(b, gens);
    a_iv.add(&b_iv.mul(&gens[level - 1]))
}
