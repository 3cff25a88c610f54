//! Finite-dimensional Hermitian spaces `F^n` with the standard form
//! `⟨u, v⟩ = u₁v₁⋆ + … + uₙvₙ⋆`.
//!
//! Vectors are rows of a left module; scalars act on the left, so
//! `⟨αu, w⟩ = α⟨u, w⟩`. Subspaces are kept in reduced row echelon form
//! (left row operations, pivots normalized to 1), which is unique over a
//! division ring, so structural equality decides subspace equality.

use crate::star_sfields::StarScalar;
use crate::{Error, Rat, Result};
use num::{BigInt, One, Signed, Zero};
use std::fmt;

/// Coordinate vector in `F^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<S: StarScalar> {
    coords: Vec<S>,
}

impl<S: StarScalar> Vector<S> {
    pub fn new(mut coords: Vec<S>) -> Result<Vector<S>> {
        if coords.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            });
        }
        S::unify(&mut coords)?;
        Ok(Vector { coords })
    }

    pub fn zero(n: usize) -> Vector<S> {
        Vector {
            coords: vec![S::zero(); n],
        }
    }

    /// Standard basis vector `e_i` (zero-based).
    pub fn basis(n: usize, i: usize) -> Vector<S> {
        let mut coords = vec![S::zero(); n];
        coords[i] = S::one();
        Vector { coords }
    }

    pub fn from_ints(entries: &[i64]) -> Vector<S> {
        Vector {
            coords: entries
                .iter()
                .map(|&e| S::from_rat(&Rat::from_integer(e.into())))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &S {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(S::is_zero)
    }

    pub fn add(&self, other: &Vector<S>) -> Result<Vector<S>> {
        check_dim(self.dim(), other.dim())?;
        Vector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Vector<S>) -> Result<Vector<S>> {
        check_dim(self.dim(), other.dim())?;
        Vector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.sub(b))
                .collect(),
        )
    }

    /// Left scalar multiple `αu`.
    pub fn scale(&self, alpha: &S) -> Vector<S> {
        Vector {
            coords: self.coords.iter().map(|c| alpha.mul(c)).collect(),
        }
    }
}

impl<S: StarScalar> fmt::Display for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}

/// The standard Hermitian form `Σᵢ uᵢ vᵢ⋆`.
pub fn inner<S: StarScalar>(u: &Vector<S>, v: &Vector<S>) -> Result<S> {
    check_dim(u.dim(), v.dim())?;
    let mut acc = S::zero();
    for (a, b) in u.coords.iter().zip(&v.coords) {
        acc = acc.add(&a.mul(&b.star()));
    }
    Ok(acc)
}

/// The length `⟨u, u⟩`; zero only for the zero vector (anisotropy).
pub fn length<S: StarScalar>(u: &Vector<S>) -> S {
    inner(u, u).expect("same vector")
}

/// Unit vector spanning the same line. For tower scalars this may adjoin
/// one square root; for quaternions it left-multiplies by the inverse of a
/// four-square witness.
pub fn normalize<S: StarScalar>(u: &Vector<S>) -> Result<Vector<S>> {
    if u.is_zero() {
        return Err(Error::ZeroVector);
    }
    let u = reduce_direction(u);
    let gamma = S::norm_sqrt(&u.coords)?;
    let inv = gamma.inv()?;
    Vector::new(u.coords.iter().map(|c| inv.mul(c)).collect())
}

/// Rescales by a positive rational to clear shared denominators; keeps the
/// scalars small before a normalization adjoins roots.
pub fn reduce_direction<S: StarScalar>(u: &Vector<S>) -> Vector<S> {
    let mut denom_lcm = BigInt::one();
    let mut numer_gcd = BigInt::zero();
    for c in &u.coords {
        for r in scalar_rationals(c) {
            if r.is_zero() {
                continue;
            }
            denom_lcm = num::integer::lcm(denom_lcm, r.denom().clone());
            numer_gcd = num::integer::gcd(numer_gcd, r.numer().abs());
        }
    }
    if numer_gcd.is_zero() {
        return u.clone();
    }
    let factor = Rat::new(denom_lcm, numer_gcd);
    if factor.is_one() {
        return u.clone();
    }
    u.scale(&S::from_rat(&factor))
}

fn scalar_rationals<S: StarScalar>(s: &S) -> Vec<Rat> {
    s.to_rationals()
}

/// Gram–Schmidt orthonormalization; exact, normalizing at every step.
pub fn gram_schmidt<S: StarScalar>(vs: &[Vector<S>]) -> Result<Vec<Vector<S>>> {
    let mut basis: Vec<Vector<S>> = Vec::with_capacity(vs.len());
    for v in vs {
        if !gs_step(&mut basis, v)? {
            return Err(Error::DependentVectors);
        }
    }
    unify_vectors(&mut basis)?;
    Ok(basis)
}

/// Extends an orthonormal prefix by the orthonormalized components of the
/// candidates, silently skipping dependent ones. Returns the full basis.
pub fn extend_orthonormal<S: StarScalar>(
    prefix: &[Vector<S>],
    candidates: &[Vector<S>],
) -> Result<Vec<Vector<S>>> {
    let mut basis = prefix.to_vec();
    for v in candidates {
        gs_step(&mut basis, v)?;
    }
    unify_vectors(&mut basis)?;
    Ok(basis)
}

/// One Gram–Schmidt step; returns false when the candidate is dependent.
fn gs_step<S: StarScalar>(basis: &mut Vec<Vector<S>>, v: &Vector<S>) -> Result<bool> {
    let mut w = v.clone();
    for u in basis.iter() {
        let c = inner(&w, u)?;
        w = w.sub(&u.scale(&c))?;
    }
    if w.is_zero() {
        return Ok(false);
    }
    basis.push(normalize(&w)?);
    Ok(true)
}

/// Lifts all coordinates of all vectors into one common tower.
pub fn unify_vectors<S: StarScalar>(vs: &mut [Vector<S>]) -> Result<()> {
    let mut all: Vec<S> = vs.iter().flat_map(|v| v.coords.iter().cloned()).collect();
    S::unify(&mut all)?;
    let mut it = all.into_iter();
    for v in vs.iter_mut() {
        for c in v.coords.iter_mut() {
            *c = it.next().unwrap();
        }
    }
    Ok(())
}

/// A subspace of `F^n`, stored as a reduced-echelon canonical basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<S: StarScalar> {
    basis: Vec<Vector<S>>,
    ambient: usize,
}

impl<S: StarScalar> Subspace<S> {
    /// The span of the given vectors, in canonical form.
    pub fn span(vectors: &[Vector<S>], ambient: usize) -> Result<Subspace<S>> {
        for v in vectors {
            check_dim(ambient, v.dim())?;
        }
        let mut rows: Vec<Vector<S>> = vectors.iter().filter(|v| !v.is_zero()).cloned().collect();
        unify_vectors(&mut rows)?;
        let basis = rref(rows)?;
        Ok(Subspace { basis, ambient })
    }

    pub fn zero(ambient: usize) -> Subspace<S> {
        Subspace {
            basis: Vec::new(),
            ambient,
        }
    }

    pub fn full(ambient: usize) -> Subspace<S> {
        Subspace {
            basis: (0..ambient).map(|i| Vector::basis(ambient, i)).collect(),
            ambient,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vector<S>] {
        &self.basis
    }

    /// Membership via reduction against the canonical basis.
    pub fn contains(&self, v: &Vector<S>) -> Result<bool> {
        check_dim(self.ambient, v.dim())?;
        Ok(self.reduce(v)?.is_zero())
    }

    fn reduce(&self, v: &Vector<S>) -> Result<Vector<S>> {
        let mut w = v.clone();
        for b in &self.basis {
            let lead = pivot_col(b).expect("canonical basis has no zero rows");
            let c = w.coords[lead].clone();
            if !c.is_zero() {
                w = w.sub(&b.scale(&c))?;
            }
        }
        Ok(w)
    }

    pub fn sum(&self, other: &Subspace<S>) -> Result<Subspace<S>> {
        check_dim(self.ambient, other.ambient)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.clone());
        Subspace::span(&vs, self.ambient)
    }

    /// `M₁ ∩ M₂ = (M₁⊥ + M₂⊥)⊥`, valid because finite-dimensional
    /// subspaces of an anisotropic space split.
    pub fn intersection(&self, other: &Subspace<S>) -> Result<Subspace<S>> {
        self.orthocomplement()?
            .sum(&other.orthocomplement()?)?
            .orthocomplement()
    }

    /// `M⊥`, computed as the left kernel of the star-coordinate matrix.
    pub fn orthocomplement(&self) -> Result<Subspace<S>> {
        let n = self.ambient;
        let k = self.basis.len();
        // augmented rows [M | I] with M[i][j] = (basis_j[i])⋆
        let mut rows: Vec<Vector<S>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut coords = Vec::with_capacity(k + n);
            for b in &self.basis {
                coords.push(b.coords[i].star());
            }
            for j in 0..n {
                coords.push(if i == j { S::one() } else { S::zero() });
            }
            rows.push(Vector { coords });
        }
        unify_vectors(&mut rows)?;
        let reduced = rref_partial(rows, k)?;
        let mut kernel = Vec::new();
        for row in reduced {
            if row.coords[..k].iter().all(S::is_zero) {
                kernel.push(Vector {
                    coords: row.coords[k..].to_vec(),
                });
            }
        }
        Subspace::span(&kernel, n)
    }
}

impl<S: StarScalar> fmt::Display for Subspace<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}

fn pivot_col<S: StarScalar>(v: &Vector<S>) -> Option<usize> {
    v.coords.iter().position(|c| !c.is_zero())
}

/// Reduced row echelon form with left row operations; drops zero rows.
fn rref<S: StarScalar>(rows: Vec<Vector<S>>) -> Result<Vec<Vector<S>>> {
    let n = match rows.first() {
        Some(r) => r.dim(),
        None => return Ok(Vec::new()),
    };
    let mut out = rref_partial(rows, n)?;
    out.retain(|r| !r.is_zero());
    Ok(out)
}

/// Row reduction restricted to the first `cols` columns (used for the
/// augmented kernel computation). Rows stay in place past the pivot block.
fn rref_partial<S: StarScalar>(mut rows: Vec<Vector<S>>, cols: usize) -> Result<Vec<Vector<S>>> {
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(r) = (pivot_row..rows.len()).find(|&r| !rows[r].coords[col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let pinv = rows[pivot_row].coords[col].inv()?;
        rows[pivot_row] = rows[pivot_row].scale(&pinv);
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r].coords[col].is_zero() {
                let factor = rows[r].coords[col].clone();
                let scaled = rows[pivot_row].scale(&factor);
                rows[r] = rows[r].sub(&scaled)?;
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    // sort by pivot column so the canonical form is order-independent
    rows.sort_by_key(|r| pivot_col(r).unwrap_or(usize::MAX));
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_fields::FieldElement;
    use crate::star_sfields::Quaternion;

    type QVec = Vector<FieldElement>;

    #[test]
    fn inner_product_examples() {
        let e1: QVec = Vector::basis(4, 0);
        let e2: QVec = Vector::basis(4, 1);
        assert!(inner(&e1, &e2).unwrap().is_zero());
        let v: QVec = Vector::from_ints(&[3, 4]);
        assert_eq!(
            inner(&v, &v).unwrap(),
            StarScalar::from_rat(&Rat::from_integer(25.into()))
        );
        // quaternion case: ⟨(i,j),(i,j)⟩ = i·i⋆ + j·j⋆ = 2
        let q = Vector::new(vec![Quaternion::i(), Quaternion::j()]).unwrap();
        assert_eq!(
            inner(&q, &q).unwrap(),
            StarScalar::from_rat(&Rat::from_integer(2.into()))
        );
    }

    #[test]
    fn length_examples() {
        let z: QVec = Vector::zero(3);
        assert!(length(&z).is_zero());
        let v: QVec = Vector::from_ints(&[1, 1]);
        assert_eq!(length(&v), StarScalar::from_rat(&Rat::from_integer(2.into())));
        let half = Rat::new(1.into(), 2.into());
        let v: QVec = Vector::new(vec![StarScalar::from_rat(&half); 4]).unwrap();
        assert!(length(&v).is_one());
    }

    #[test]
    fn normalize_rational_case() {
        let v: QVec = Vector::from_ints(&[3, 4, 0]);
        let u = normalize(&v).unwrap();
        assert!(length(&u).is_one());
        // proportional to v
        let expected = Vector::new(vec![
            StarScalar::from_rat(&Rat::new(3.into(), 5.into())),
            StarScalar::from_rat(&Rat::new(4.into(), 5.into())),
            StarScalar::zero(),
        ])
        .unwrap();
        assert_eq!(u, expected);
    }

    #[test]
    fn normalize_extends_tower() {
        let v: QVec = Vector::from_ints(&[1, 1]);
        let u = normalize(&v).unwrap();
        assert!(length(&u).is_one());
        assert_eq!(u.coord(0), u.coord(1));
        assert_eq!(u.coord(0).tower().depth(), 1);
    }

    #[test]
    fn normalize_zero_errors() {
        let z: QVec = Vector::zero(2);
        assert_eq!(normalize(&z).unwrap_err(), Error::ZeroVector);
    }

    #[test]
    fn gram_schmidt_examples() {
        let vs: Vec<QVec> = vec![Vector::from_ints(&[1, 0]), Vector::from_ints(&[1, 1])];
        let ons = gram_schmidt(&vs).unwrap();
        assert_eq!(ons[0], Vector::basis(2, 0));
        assert_eq!(ons[1], Vector::basis(2, 1));

        let vs: Vec<QVec> = vec![Vector::from_ints(&[1, 1, 0]), Vector::from_ints(&[0, 1, 1])];
        let ons = gram_schmidt(&vs).unwrap();
        // verify orthonormality directly
        assert!(length(&ons[0]).is_one());
        assert!(length(&ons[1]).is_one());
        assert!(inner(&ons[0], &ons[1]).unwrap().is_zero());
        // same span prefix-by-prefix
        let span = Subspace::span(&vs, 3).unwrap();
        assert!(span.contains(&ons[0]).unwrap());
        assert!(span.contains(&ons[1]).unwrap());
    }

    #[test]
    fn gram_schmidt_rejects_dependent() {
        let vs: Vec<QVec> = vec![Vector::from_ints(&[1, 2]), Vector::from_ints(&[2, 4])];
        assert_eq!(gram_schmidt(&vs).unwrap_err(), Error::DependentVectors);
    }

    #[test]
    fn orthocomplement_examples() {
        let e1: QVec = Vector::basis(4, 0);
        let m = Subspace::span(&[e1], 4).unwrap();
        let perp = m.orthocomplement().unwrap();
        assert_eq!(perp.dim(), 3);
        for i in 1..4 {
            assert!(perp.contains(&Vector::basis(4, i)).unwrap());
        }

        let full: Subspace<FieldElement> = Subspace::full(3);
        assert_eq!(full.orthocomplement().unwrap().dim(), 0);

        let vs: Vec<QVec> = vec![
            Vector::from_ints(&[1, 1, 0, 0]),
            Vector::from_ints(&[0, 0, 1, 1]),
        ];
        let m = Subspace::span(&vs, 4).unwrap();
        let perp = m.orthocomplement().unwrap();
        assert_eq!(perp.dim(), 2);
        assert!(perp.contains(&Vector::from_ints(&[1, -1, 0, 0])).unwrap());
        assert!(perp.contains(&Vector::from_ints(&[0, 0, 1, -1])).unwrap());
        for b in perp.basis() {
            for c in m.basis() {
                assert!(inner(b, c).unwrap().is_zero());
            }
        }
        // involution and splitting
        assert_eq!(perp.orthocomplement().unwrap(), m);
        assert_eq!(m.intersection(&perp).unwrap().dim(), 0);
    }

    #[test]
    fn quaternion_subspace_roundtrip() {
        let v = Vector::new(vec![Quaternion::i(), Quaternion::from_ints(1, 0, 0, 0)]).unwrap();
        let m = Subspace::span(&[v.clone()], 2).unwrap();
        assert_eq!(m.dim(), 1);
        assert!(m.contains(&v).unwrap());
        let perp = m.orthocomplement().unwrap();
        assert_eq!(perp.dim(), 1);
        assert!(inner(&perp.basis()[0], &v).unwrap().is_zero());
        assert_eq!(perp.orthocomplement().unwrap(), m);
    }
}
