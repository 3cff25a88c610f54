//! The orthoset layer: projective points of `P(F^n)` with the orthogonality
//! relation, orthoclosure, lines and the linearity witnesses, plus finite
//! combinatorial orthosets with a brute-force closure.

use crate::inner_spaces::{inner, Subspace, Vector};
use crate::star_sfields::StarScalar;
use crate::{Error, Rat, Result};
use std::fmt;

/// A one-dimensional subspace `⟨x⟩`, canonicalized so the first nonzero
/// coordinate of the representative is 1. Canonical forms are unique per
/// line, so structural equality decides point equality.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectivePoint<S: StarScalar> {
    rep: Vector<S>,
}

impl<S: StarScalar> ProjectivePoint<S> {
    pub fn new(v: &Vector<S>) -> Result<ProjectivePoint<S>> {
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        let lead = v
            .coords()
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero vector");
        let inv = v.coord(lead).inv()?;
        Ok(ProjectivePoint {
            rep: v.scale(&inv),
        })
    }

    pub fn from_ints(entries: &[i64]) -> ProjectivePoint<S> {
        Self::new(&Vector::from_ints(entries)).expect("nonzero literal")
    }

    pub fn rep(&self) -> &Vector<S> {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }
}

impl<S: StarScalar> fmt::Display for ProjectivePoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.rep)
    }
}

/// `⟨u⟩ ⊥ ⟨v⟩` iff `⟨u, v⟩ = 0`. Symmetric by the Hermitian axioms and
/// irreflexive by anisotropy.
pub fn perp<S: StarScalar>(e: &ProjectivePoint<S>, f: &ProjectivePoint<S>) -> Result<bool> {
    Ok(inner(e.rep(), f.rep())?.is_zero())
}

/// `A⊥⊥` for a finite point set of `P(F^n)`: the span of the
/// representatives, by the splitting property.
pub fn orthoclosure<S: StarScalar>(pts: &[ProjectivePoint<S>]) -> Result<Subspace<S>> {
    let n = match pts.first() {
        Some(p) => p.dim(),
        None => {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            })
        }
    };
    let reps: Vec<Vector<S>> = pts.iter().map(|p| p.rep.clone()).collect();
    Subspace::span(&reps, n)
}

/// A line `e ⋆ f = {e, f}⊥⊥` of `P(F^n)`, carried by its two-dimensional
/// subspace together with the generating pair.
#[derive(Debug, Clone, PartialEq)]
pub struct LineHandle<S: StarScalar> {
    subspace: Subspace<S>,
    generators: (ProjectivePoint<S>, ProjectivePoint<S>),
}

impl<S: StarScalar> LineHandle<S> {
    pub fn subspace(&self) -> &Subspace<S> {
        &self.subspace
    }

    pub fn generators(&self) -> (&ProjectivePoint<S>, &ProjectivePoint<S>) {
        (&self.generators.0, &self.generators.1)
    }

    pub fn contains(&self, p: &ProjectivePoint<S>) -> Result<bool> {
        self.subspace.contains(p.rep())
    }
}

pub fn line<S: StarScalar>(
    e: &ProjectivePoint<S>,
    f: &ProjectivePoint<S>,
) -> Result<LineHandle<S>> {
    if e == f {
        return Err(Error::EqualPoints);
    }
    let subspace = orthoclosure(&[e.clone(), f.clone()])?;
    debug_assert_eq!(subspace.dim(), 2);
    Ok(LineHandle {
        subspace,
        generators: (e.clone(), f.clone()),
    })
}

/// Witness for axiom L1: a point `g ⊥ e` with `{e,f}⊥ = {e,g}⊥`, obtained
/// by clearing `f`'s component along `e`. Both defining conditions are
/// verified before returning.
pub fn witness_l1<S: StarScalar>(
    e: &ProjectivePoint<S>,
    f: &ProjectivePoint<S>,
) -> Result<ProjectivePoint<S>> {
    if e == f {
        return Err(Error::EqualPoints);
    }
    let coef = inner(f.rep(), e.rep())?.mul(&crate::inner_spaces::length(e.rep()).inv()?);
    let g_rep = f.rep().sub(&e.rep().scale(&coef))?;
    let g = ProjectivePoint::new(&g_rep)?;
    if !perp(&g, e)? {
        return Err(Error::WitnessInvalid("L1 witness not orthogonal".into()));
    }
    let span_ef = orthoclosure(&[e.clone(), f.clone()])?;
    let span_eg = orthoclosure(&[e.clone(), g.clone()])?;
    if span_ef != span_eg {
        return Err(Error::WitnessInvalid("L1 witness changes the span".into()));
    }
    Ok(g)
}

/// Witness for axiom L2: a third point of `{e,f}⊥⊥`, the class of
/// `rep(e) + rep(f)` (falling back to `rep(e) + 2·rep(f)`; distinctness is
/// guaranteed in characteristic 0).
pub fn witness_l2<S: StarScalar>(
    e: &ProjectivePoint<S>,
    f: &ProjectivePoint<S>,
) -> Result<ProjectivePoint<S>> {
    if e == f {
        return Err(Error::EqualPoints);
    }
    let sum = e.rep().add(f.rep())?;
    let candidate = ProjectivePoint::new(&sum)?;
    if candidate != *e && candidate != *f {
        return Ok(candidate);
    }
    let two = S::from_rat(&Rat::from_integer(2.into()));
    let sum2 = e.rep().add(&f.rep().scale(&two))?;
    let candidate = ProjectivePoint::new(&sum2)?;
    if candidate == *e || candidate == *f {
        return Err(Error::WitnessInvalid("L2 witness collapsed".into()));
    }
    Ok(candidate)
}

/// A finite orthoset: a symmetric, irreflexive relation on at most 64
/// points, stored as an adjacency bit matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteOrthoset {
    n: usize,
    adj: Vec<u64>,
}

/// Closure computations are exact brute force; the caps keep them
/// sub-second.
pub const FINITE_CLOSURE_CAP: usize = 64;
pub const FINITE_RANK_CAP: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrthosetFamily {
    Boolean,
    Edgeless,
    Other,
}

impl fmt::Display for OrthosetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrthosetFamily::Boolean => write!(f, "boolean"),
            OrthosetFamily::Edgeless => write!(f, "edgeless"),
            OrthosetFamily::Other => write!(f, "other"),
        }
    }
}

impl FiniteOrthoset {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<FiniteOrthoset> {
        if n > FINITE_CLOSURE_CAP {
            return Err(Error::SizeLimit {
                size: n,
                cap: FINITE_CLOSURE_CAP,
            });
        }
        let mut adj = vec![0u64; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::DimensionMismatch { expected: n, got: a.max(b) + 1 });
            }
            if a == b {
                // irreflexivity
                return Err(Error::WitnessInvalid(format!("loop at point {a}")));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(FiniteOrthoset { n, adj })
    }

    /// The Boolean orthoset `(X, ≠)`.
    pub fn boolean(n: usize) -> Result<FiniteOrthoset> {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        FiniteOrthoset::new(n, &edges)
    }

    /// The edgeless orthoset `(X, ∅)`.
    pub fn edgeless(n: usize) -> Result<FiniteOrthoset> {
        FiniteOrthoset::new(n, &[])
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn orthogonal(&self, a: usize, b: usize) -> bool {
        self.adj[a] & (1 << b) != 0
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.orthogonal(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn universe(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1 << self.n) - 1
        }
    }

    /// `A⊥` as a bit mask; `∅⊥ = X`.
    pub fn perp_set(&self, set: u64) -> u64 {
        let mut out = self.universe();
        for i in 0..self.n {
            if set & (1 << i) != 0 {
                out &= self.adj[i];
            }
        }
        out
    }

    /// `A⊥⊥` by two complement sweeps.
    pub fn closure(&self, set: u64) -> u64 {
        self.perp_set(self.perp_set(set))
    }

    /// Detects the two trivial families and computes the rank as the
    /// maximum clique of the orthogonality graph (exact search).
    pub fn classify(&self) -> Result<(OrthosetFamily, usize)> {
        if self.n > FINITE_RANK_CAP {
            return Err(Error::SizeLimit {
                size: self.n,
                cap: FINITE_RANK_CAP,
            });
        }
        let family = if self.n >= 2 && self.adj.iter().all(|&r| r == 0) {
            OrthosetFamily::Edgeless
        } else if (0..self.n).all(|i| self.adj[i] == self.universe() & !(1 << i)) && self.n >= 2 {
            OrthosetFamily::Boolean
        } else if self.adj.iter().all(|&r| r == 0) {
            OrthosetFamily::Edgeless
        } else {
            OrthosetFamily::Other
        };
        let rank = if self.n == 0 { 0 } else { self.max_clique(0, 0) };
        Ok((family, rank))
    }

    fn max_clique(&self, start: usize, current: u64) -> usize {
        let size = current.count_ones() as usize;
        let mut best = size;
        for v in start..self.n {
            // v must be orthogonal to everything chosen so far
            if current & !self.adj[v] == 0 {
                best = best.max(self.max_clique(v + 1, current | (1 << v)));
            }
        }
        best
    }
}

/// `A⊥⊥` for a finite orthoset given as an explicit subset.
pub fn finite_closure(x: &FiniteOrthoset, subset: &[usize]) -> Result<Vec<usize>> {
    let mut mask = 0u64;
    for &i in subset {
        if i >= x.size() {
            return Err(Error::DimensionMismatch {
                expected: x.size(),
                got: i + 1,
            });
        }
        mask |= 1 << i;
    }
    let closed = x.closure(mask);
    Ok((0..x.size()).filter(|&i| closed & (1 << i) != 0).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_fields::FieldElement;
    use crate::inner_spaces::length;

    type P = ProjectivePoint<FieldElement>;

    #[test]
    fn perp_examples() {
        let e1: P = ProjectivePoint::from_ints(&[1, 0, 0, 0]);
        let e2: P = ProjectivePoint::from_ints(&[0, 1, 0, 0]);
        assert!(perp(&e1, &e2).unwrap());
        assert!(!perp(&e1, &e1).unwrap());
        let a: P = ProjectivePoint::from_ints(&[1, 1, 0, 0]);
        let b: P = ProjectivePoint::from_ints(&[1, -1, 0, 0]);
        assert!(perp(&a, &b).unwrap());
    }

    #[test]
    fn canonical_form_decides_equality() {
        let a: P = ProjectivePoint::from_ints(&[2, 4]);
        let b: P = ProjectivePoint::from_ints(&[1, 2]);
        assert_eq!(a, b);
        let c: P = ProjectivePoint::from_ints(&[3, 5]);
        assert_ne!(a, c);
    }

    #[test]
    fn orthoclosure_examples() {
        let e1: P = ProjectivePoint::from_ints(&[1, 0, 0, 0]);
        let cl = orthoclosure(&[e1.clone()]).unwrap();
        assert!(cl.contains(e1.rep()).unwrap());
        for i in 1..4 {
            let ei: P = ProjectivePoint::from_ints(
                &(0..4).map(|j| (j == i) as i64).collect::<Vec<_>>(),
            );
            assert!(!cl.contains(ei.rep()).unwrap());
        }

        let a: P = ProjectivePoint::from_ints(&[1, 1, 1, 1]);
        let b: P = ProjectivePoint::from_ints(&[1, -1, 0, 0]);
        let cl = orthoclosure(&[a, b]).unwrap();
        let member: P = ProjectivePoint::from_ints(&[2, 0, 1, 1]);
        assert!(cl.contains(member.rep()).unwrap());

        let basis: Vec<P> = (0..4)
            .map(|i| ProjectivePoint::from_ints(&(0..4).map(|j| (j == i) as i64).collect::<Vec<_>>()))
            .collect();
        assert_eq!(orthoclosure(&basis).unwrap().dim(), 4);
    }

    #[test]
    fn line_examples() {
        let e1: P = ProjectivePoint::from_ints(&[1, 0, 0, 0]);
        let e2: P = ProjectivePoint::from_ints(&[0, 1, 0, 0]);
        let l = line(&e1, &e2).unwrap();
        assert_eq!(l.subspace().dim(), 2);
        let diag: P = ProjectivePoint::from_ints(&[1, 1, 0, 0]);
        let l2 = line(&e1, &diag).unwrap();
        assert_eq!(l.subspace(), l2.subspace());
        assert_eq!(line(&e1, &e1).unwrap_err(), Error::EqualPoints);
    }

    #[test]
    fn witness_l1_examples() {
        let e: P = ProjectivePoint::from_ints(&[1, 0, 0, 0]);
        let f: P = ProjectivePoint::from_ints(&[1, 1, 0, 0]);
        assert_eq!(witness_l1(&e, &f).unwrap(), ProjectivePoint::from_ints(&[0, 1, 0, 0]));

        let e2: P = ProjectivePoint::from_ints(&[0, 1, 0, 0]);
        assert_eq!(witness_l1(&e, &e2).unwrap(), e2);

        let e: P = ProjectivePoint::from_ints(&[1, 1]);
        let f: P = ProjectivePoint::from_ints(&[1, 0]);
        let g = witness_l1(&e, &f).unwrap();
        assert_eq!(g, ProjectivePoint::from_ints(&[1, -1]));
    }

    #[test]
    fn witness_l2_examples() {
        let e1: P = ProjectivePoint::from_ints(&[1, 0, 0, 0]);
        let e2: P = ProjectivePoint::from_ints(&[0, 1, 0, 0]);
        assert_eq!(witness_l2(&e1, &e2).unwrap(), ProjectivePoint::from_ints(&[1, 1, 0, 0]));

        let a: P = ProjectivePoint::from_ints(&[1, 0]);
        let b: P = ProjectivePoint::from_ints(&[1, 1]);
        let g = witness_l2(&a, &b).unwrap();
        assert_eq!(g, ProjectivePoint::from_ints(&[2, 1]));
        assert!(line(&a, &b).unwrap().contains(&g).unwrap());
    }

    #[test]
    fn anisotropy_keeps_lengths_nonzero() {
        let p: P = ProjectivePoint::from_ints(&[1, 2, 3]);
        assert!(!length(p.rep()).is_zero());
    }

    #[test]
    fn finite_closure_boolean_and_edgeless() {
        let boolean = FiniteOrthoset::boolean(3).unwrap();
        assert_eq!(finite_closure(&boolean, &[0]).unwrap(), vec![0]);
        // ∅⊥ = X, X⊥ = ∅ in the Boolean case with |X| ≥ 2
        assert_eq!(boolean.perp_set(0), 0b111);
        assert_eq!(boolean.perp_set(0b111), 0);
        assert_eq!(finite_closure(&boolean, &[]).unwrap(), Vec::<usize>::new());

        let edgeless = FiniteOrthoset::edgeless(4).unwrap();
        assert_eq!(finite_closure(&edgeless, &[0, 2]).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn two_sweep_oracle_by_hand() {
        // path 0-1-2: A = {0}; A⊥ = {1}; A⊥⊥ = {0, 2}
        let x = FiniteOrthoset::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(finite_closure(&x, &[0]).unwrap(), vec![0, 2]);
    }

    #[test]
    fn classify_examples() {
        let (family, rank) = FiniteOrthoset::boolean(5).unwrap().classify().unwrap();
        assert_eq!(family, OrthosetFamily::Boolean);
        assert_eq!(rank, 5);

        let (family, rank) = FiniteOrthoset::edgeless(5).unwrap().classify().unwrap();
        assert_eq!(family, OrthosetFamily::Edgeless);
        assert_eq!(rank, 1);

        let cycle = FiniteOrthoset::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (family, rank) = cycle.classify().unwrap();
        assert_eq!(family, OrthosetFamily::Other);
        assert_eq!(rank, 2);
    }

    #[test]
    fn classify_respects_cap() {
        let big = FiniteOrthoset::edgeless(40).unwrap();
        assert!(matches!(big.classify(), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn irreflexive_input_rejected() {
        assert!(FiniteOrthoset::new(2, &[(0, 0)]).is_err());
    }
}
