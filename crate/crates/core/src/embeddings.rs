//! Field homomorphisms between towers, their extension along quadratic
//! adjunctions, the structural embedding of finitely generated Hilbert-field
//! fragments into Pythagorean targets, and the induced maps of projective
//! orthosets.

use crate::exact_fields::{extend_tower, hypot, substitute, FieldElement, Tower};
use crate::orthosets::{perp, ProjectivePoint};
use crate::star_sfields::StarScalar;
use crate::{Error, Rat, Result};
use num::Zero;
use serde::Serialize;
use std::sync::Arc;

/// A field homomorphism between towers, stored by the images of the source
/// generators. Injectivity is automatic (fields have no proper ideals);
/// the generator relation `gᵢ² = image of dᵢ` is validated on construction.
#[derive(Debug, Clone)]
pub struct FieldHom {
    source: Arc<Tower>,
    target: Arc<Tower>,
    images: Vec<FieldElement>,
}

impl FieldHom {
    pub fn new(
        source: Arc<Tower>,
        target: Arc<Tower>,
        images: Vec<FieldElement>,
    ) -> Result<FieldHom> {
        if images.len() != source.depth() {
            return Err(Error::DimensionMismatch {
                expected: source.depth(),
                got: images.len(),
            });
        }
        let images = images
            .iter()
            .map(|g| g.lift_to(&target))
            .collect::<Result<Vec<_>>>()?;
        for i in 0..images.len() {
            let d_image = substitute(source.disc_coeffs(i), &images[..i], &target)?;
            if images[i].square() != d_image {
                return Err(Error::RootImageMismatch);
            }
        }
        Ok(FieldHom {
            source,
            target,
            images,
        })
    }

    /// The inclusion of a prefix tower (generators map to themselves).
    pub fn inclusion(source: Arc<Tower>, target: Arc<Tower>) -> Result<FieldHom> {
        if !source.is_prefix_of(&target) {
            return Err(Error::TowerMismatch);
        }
        let images = (0..source.depth())
            .map(|i| FieldElement::generator(Arc::clone(&target), i))
            .collect();
        FieldHom::new(source, target, images)
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
}

/// Evaluates `h` by substituting generator images into the coefficient
/// expansion of `x`.
pub fn apply_hom(h: &FieldHom, x: &FieldElement) -> Result<FieldElement> {
    if !x.tower().is_prefix_of(&h.source) {
        return Err(Error::TowerMismatch);
    }
    substitute(x.coeffs(), &h.images, &h.target)
}

/// Extends `h : G → F` along the adjunction `G[√s]`, sending the new root
/// to `β`. Requires `s` to be a positive non-square of `G` (so `x² − s` is
/// irreducible) and `β² = h(s)` exactly.
pub fn extend_hom(h: &FieldHom, s: &FieldElement, beta: &FieldElement) -> Result<FieldHom> {
    let s = s.lift_to(&h.source)?;
    let extended = extend_tower(&h.source, &s)?;
    let beta = beta.lift_to(&h.target)?;
    if beta.square() != apply_hom(h, &s)? {
        return Err(Error::RootImageMismatch);
    }
    let mut images = h.images.clone();
    images.push(beta);
    FieldHom::new(extended, Arc::clone(&h.target), images)
}

/// A finitely generated fragment of the Hilbert field: a tower whose
/// generators carry `hypot` provenance (`dᵢ = aᵢ² + bᵢ²` with `aᵢ, bᵢ` in
/// the preceding stage). Stages adjoined without provenance are recorded
/// as such and block the structural embedding.
#[derive(Debug, Clone)]
pub struct HilbertFragment {
    tower: Arc<Tower>,
    provenance: Vec<Option<(FieldElement, FieldElement)>>,
}

impl HilbertFragment {
    pub fn rationals() -> HilbertFragment {
        HilbertFragment {
            tower: Tower::rationals(),
            provenance: Vec::new(),
        }
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn depth(&self) -> usize {
        self.tower.depth()
    }

    pub fn provenance(&self, i: usize) -> Option<&(FieldElement, FieldElement)> {
        self.provenance[i].as_ref()
    }

    /// Adjoins `√(a² + b²)`; a no-op when the sum is already a square.
    pub fn adjoin_hypot(&self, a: &FieldElement, b: &FieldElement) -> Result<HilbertFragment> {
        let a = a.lift_to(&self.tower)?;
        let b = b.lift_to(&self.tower)?;
        let g = hypot(&a, &b)?;
        if g.tower().depth() == self.tower.depth() {
            return Ok(self.clone());
        }
        let mut provenance = self.provenance.clone();
        provenance.push(Some((a, b)));
        Ok(HilbertFragment {
            tower: Arc::clone(g.tower()),
            provenance,
        })
    }

    /// Adjoins a root without hypot provenance (membership in the Hilbert
    /// field not established).
    pub fn adjoin_root(&self, disc: &FieldElement) -> Result<HilbertFragment> {
        let disc = disc.lift_to(&self.tower)?;
        let tower = extend_tower(&self.tower, &disc)?;
        let mut provenance = self.provenance.clone();
        provenance.push(None);
        Ok(HilbertFragment { tower, provenance })
    }
}

/// The structural embedding `ν` of a Hilbert fragment into a Pythagorean
/// scalar kind, as generator images.
#[derive(Debug, Clone)]
pub struct FragmentEmbedding<S: StarScalar> {
    fragment: HilbertFragment,
    images: Vec<S>,
}

impl<S: StarScalar> FragmentEmbedding<S> {
    pub fn fragment(&self) -> &HilbertFragment {
        &self.fragment
    }

    pub fn images(&self) -> &[S] {
        &self.images
    }

    pub fn apply(&self, x: &FieldElement) -> Result<S> {
        if !x.tower().is_prefix_of(&self.fragment.tower) {
            return Err(Error::TowerMismatch);
        }
        Ok(substitute_scalar(x.coeffs(), &self.images))
    }
}

/// `Σ_S c_S · Π_{i∈S} images[i]` over an arbitrary scalar kind.
fn substitute_scalar<S: StarScalar>(coeffs: &[Rat], images: &[S]) -> S {
    let mut basis = vec![S::one()];
    let gens_needed = coeffs.len().trailing_zeros() as usize;
    for i in 0..gens_needed {
        for s in 0..(1usize << i) {
            basis.push(basis[s].mul(&images[i]));
        }
    }
    let mut acc = S::zero();
    for (s, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add(&S::from_rat(c).mul(&basis[s]));
        }
    }
    acc
}

/// Builds `ν` stage by stage: `ν(√(a²+b²)) = hypot(ν(a), ν(b))`, checking
/// `image² = ν(dᵢ)` exactly at every stage. This is the paper's extension
/// lemma applied finitely many times; for targets where `hypot` yields a
/// `γ` with `γγ⋆ = ν(d)` but `γ² ≠ ν(d)` (the quaternions), the check
/// fails, realizing the non-embeddability obstruction.
pub fn embed_hilbert_fragment<S: StarScalar>(
    fragment: &HilbertFragment,
) -> Result<FragmentEmbedding<S>> {
    let mut images: Vec<S> = Vec::with_capacity(fragment.depth());
    for i in 0..fragment.depth() {
        let Some((a, b)) = fragment.provenance[i].as_ref() else {
            return Err(Error::MissingProvenance);
        };
        let nu_a = substitute_scalar(a.coeffs(), &images);
        let nu_b = substitute_scalar(b.coeffs(), &images);
        let gamma = S::hypot(&nu_a, &nu_b)?;
        let nu_d = substitute_scalar(fragment.tower.disc_coeffs(i), &images);
        if !gamma.mul(&gamma).sub(&nu_d).is_zero() {
            return Err(Error::RootImageMismatch);
        }
        images.push(gamma);
    }
    Ok(FragmentEmbedding {
        fragment: fragment.clone(),
        images,
    })
}

/// Like [`embed_hilbert_fragment`], but anchored at a given target tower:
/// when the target already contains the needed root, `hypot`'s square
/// detection reuses it instead of adjoining a fresh generator. The final
/// images live in the (possibly extended) target.
pub fn embed_fragment_into_tower(
    fragment: &HilbertFragment,
    target: &Arc<Tower>,
) -> Result<FragmentEmbedding<FieldElement>> {
    let mut current = Arc::clone(target);
    let mut images: Vec<FieldElement> = Vec::with_capacity(fragment.depth());
    for i in 0..fragment.depth() {
        let Some((a, b)) = fragment.provenance[i].as_ref() else {
            return Err(Error::MissingProvenance);
        };
        let nu_a = substitute(a.coeffs(), &images, &current)?;
        let nu_b = substitute(b.coeffs(), &images, &current)?;
        let gamma = hypot(&nu_a, &nu_b)?;
        current = Arc::clone(gamma.tower());
        images = images
            .iter()
            .map(|g| g.lift_to(&current))
            .collect::<Result<Vec<_>>>()?;
        let nu_d = substitute(fragment.tower.disc_coeffs(i), &images, &current)?;
        if gamma.square() != nu_d {
            return Err(Error::RootImageMismatch);
        }
        images.push(gamma);
    }
    Ok(FragmentEmbedding {
        fragment: fragment.clone(),
        images,
    })
}

/// The induced orthoset map `⟨(α₁,…,αₙ)⟩ ↦ ⟨(α₁^σ,…,αₙ^σ)⟩`.
pub fn induced_point_map(
    h: &FieldHom,
    e: &ProjectivePoint<FieldElement>,
) -> Result<ProjectivePoint<FieldElement>> {
    let coords = e
        .rep()
        .coords()
        .iter()
        .map(|c| apply_hom(h, c))
        .collect::<Result<Vec<_>>>()?;
    ProjectivePoint::new(&crate::inner_spaces::Vector::new(coords)?)
}

/// The induced orthoset map of a fragment embedding, into `P(S^n)`.
pub fn induced_embedding_point_map<S: StarScalar>(
    emb: &FragmentEmbedding<S>,
    e: &ProjectivePoint<FieldElement>,
) -> Result<ProjectivePoint<S>> {
    let coords = e
        .rep()
        .coords()
        .iter()
        .map(|c| emb.apply(c))
        .collect::<Result<Vec<_>>>()?;
    ProjectivePoint::new(&crate::inner_spaces::Vector::new(coords)?)
}

#[derive(Debug, Clone, Serialize)]
pub struct EmbeddingReport {
    pub pairs_checked: usize,
    pub injectivity_failures: usize,
    pub preservation_failures: usize,
    pub reflection_failures: usize,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.injectivity_failures == 0
            && self.preservation_failures == 0
            && self.reflection_failures == 0
    }
}

/// Verifies the embedding contract on sample pairs: injectivity on
/// distinct points and `e ⊥ f ⇔ φ(e) ⊥ φ(f)`. Failures are reported, not
/// thrown.
pub fn check_embedding<S1, S2, F>(
    phi: F,
    pairs: &[(ProjectivePoint<S1>, ProjectivePoint<S1>)],
) -> Result<EmbeddingReport>
where
    S1: StarScalar,
    S2: StarScalar,
    F: Fn(&ProjectivePoint<S1>) -> Result<ProjectivePoint<S2>>,
{
    let mut report = EmbeddingReport {
        pairs_checked: 0,
        injectivity_failures: 0,
        preservation_failures: 0,
        reflection_failures: 0,
    };
    for (e, f) in pairs {
        report.pairs_checked += 1;
        let ie = phi(e)?;
        let i_f = phi(f)?;
        if (e != f) && ie == i_f {
            report.injectivity_failures += 1;
        }
        let before = perp(e, f)?;
        let after = perp(&ie, &i_f)?;
        if before && !after {
            report.preservation_failures += 1;
        }
        if after && !before {
            report.reflection_failures += 1;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star_sfields::Quaternion;

    fn q2() -> Arc<Tower> {
        extend_tower(
            &Tower::rationals(),
            &FieldElement::from_int(Tower::rationals(), 2),
        )
        .unwrap()
    }

    #[test]
    fn inclusion_hom_fixes_rationals() {
        let h = FieldHom::inclusion(Tower::rationals(), q2()).unwrap();
        let x = FieldElement::from_rat(Tower::rationals(), Rat::new(7.into(), 3.into()));
        let y = apply_hom(&h, &x).unwrap();
        assert_eq!(y.as_rat().unwrap(), Rat::new(7.into(), 3.into()));
    }

    #[test]
    fn identity_hom_on_sqrt2() {
        let t = q2();
        let h = FieldHom::inclusion(Arc::clone(&t), Arc::clone(&t)).unwrap();
        let x = FieldElement::one(Arc::clone(&t))
            .try_add(&FieldElement::generator(Arc::clone(&t), 0))
            .unwrap();
        assert_eq!(apply_hom(&h, &x).unwrap(), x);
    }

    #[test]
    fn conjugation_hom() {
        let t = q2();
        let root = FieldElement::generator(Arc::clone(&t), 0);
        let h = FieldHom::new(Arc::clone(&t), Arc::clone(&t), vec![root.neg()]).unwrap();
        let x = FieldElement::one(Arc::clone(&t)).try_add(&root).unwrap();
        // h((1+√2)²) = 3 − 2√2 = h(1+√2)²
        let img_sq = apply_hom(&h, &x.square()).unwrap();
        let expected = FieldElement::from_coeffs(
            Arc::clone(&t),
            vec![Rat::from_integer(3.into()), Rat::from_integer((-2).into())],
        )
        .unwrap();
        assert_eq!(img_sq, expected);
        assert_eq!(img_sq, apply_hom(&h, &x).unwrap().square());
    }

    #[test]
    fn hom_rejects_bad_root_image() {
        let t = q2();
        let one = FieldElement::one(Arc::clone(&t));
        assert_eq!(
            FieldHom::new(Arc::clone(&t), Arc::clone(&t), vec![one]).unwrap_err(),
            Error::RootImageMismatch
        );
    }

    #[test]
    fn extend_hom_examples() {
        let rat = Tower::rationals();
        let t = q2();
        let base = FieldHom::inclusion(Arc::clone(&rat), Arc::clone(&t)).unwrap();
        let two = FieldElement::from_int(Arc::clone(&rat), 2);
        let root = FieldElement::generator(Arc::clone(&t), 0);

        let h = extend_hom(&base, &two, &root).unwrap();
        assert_eq!(apply_hom(&h, &FieldElement::generator(h.source().clone(), 0)).unwrap(), root);
        // restriction to G equals the input hom
        let x = FieldElement::from_rat(Arc::clone(&rat), Rat::new(5.into(), 9.into()));
        assert_eq!(apply_hom(&h, &x).unwrap(), apply_hom(&base, &x).unwrap());

        // both roots admissible
        let h_neg = extend_hom(&base, &two, &root.neg()).unwrap();
        assert_eq!(
            apply_hom(&h_neg, &FieldElement::generator(h_neg.source().clone(), 0)).unwrap(),
            root.neg()
        );

        // s = 4 is a square in ℚ: irreducibility precondition fails
        let four = FieldElement::from_int(Arc::clone(&rat), 4);
        assert!(extend_hom(&base, &four, &FieldElement::from_int(Arc::clone(&t), 2)).is_err());

        // β² ≠ h(s)
        let bad = FieldElement::from_int(Arc::clone(&t), 3);
        assert_eq!(extend_hom(&base, &two, &bad).unwrap_err(), Error::RootImageMismatch);
    }

    fn sqrt2_fragment() -> HilbertFragment {
        let frag = HilbertFragment::rationals();
        let one = FieldElement::one(Tower::rationals());
        frag.adjoin_hypot(&one, &one).unwrap()
    }

    #[test]
    fn embed_sqrt2_fragment_into_deeper_tower() {
        let frag = sqrt2_fragment();
        let emb: FragmentEmbedding<FieldElement> = embed_hilbert_fragment(&frag).unwrap();
        // ν(√2) is the nonnegative square root of 2
        let image = &emb.images()[0];
        assert_eq!(image.square(), FieldElement::from_int(image.tower().clone(), 2));
        assert_eq!(image.sign(), 1);
    }

    #[test]
    fn embed_rational_fragment_is_trivial() {
        let frag = HilbertFragment::rationals();
        let emb: FragmentEmbedding<Quaternion> = embed_hilbert_fragment(&frag).unwrap();
        let x = FieldElement::from_rat(Tower::rationals(), Rat::new(7.into(), 3.into()));
        assert_eq!(
            emb.apply(&x).unwrap(),
            StarScalar::from_rat(&Rat::new(7.into(), 3.into()))
        );
    }

    #[test]
    fn embed_nested_fragment_is_multiplicative() {
        // ℚ(√2)(√3) via hypot(1,1) then hypot(1,√2)
        let frag = sqrt2_fragment();
        let root2 = FieldElement::generator(frag.tower().clone(), 0);
        let one = FieldElement::one(frag.tower().clone());
        let frag = frag.adjoin_hypot(&one, &root2).unwrap();
        assert_eq!(frag.depth(), 2);
        let emb: FragmentEmbedding<FieldElement> = embed_hilbert_fragment(&frag).unwrap();
        // ν(xy) = ν(x)ν(y) on a few elements
        let t = frag.tower().clone();
        let x = FieldElement::generator(Arc::clone(&t), 0)
            .try_add(&FieldElement::from_int(Arc::clone(&t), 3))
            .unwrap();
        let y = FieldElement::generator(Arc::clone(&t), 1)
            .try_sub(&FieldElement::from_rat(Arc::clone(&t), Rat::new(1.into(), 2.into())))
            .unwrap();
        let lhs = emb.apply(&x.try_mul(&y).unwrap()).unwrap();
        let rhs = emb.apply(&x).unwrap().try_mul(&emb.apply(&y).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let lhs = emb.apply(&x.try_add(&y).unwrap()).unwrap();
        let rhs = emb.apply(&x).unwrap().try_add(&emb.apply(&y).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn embedding_commutes_with_hypot() {
        let frag = sqrt2_fragment();
        let emb: FragmentEmbedding<FieldElement> = embed_hilbert_fragment(&frag).unwrap();
        let (a, b) = frag.provenance(0).unwrap();
        let nu_a = emb.apply(a).unwrap();
        let nu_b = emb.apply(b).unwrap();
        let lhs = emb
            .apply(&FieldElement::generator(frag.tower().clone(), 0))
            .unwrap();
        let rhs = crate::exact_fields::hypot(&nu_a, &nu_b).unwrap();
        assert_eq!(lhs, rhs.lift_to(lhs.tower()).unwrap());
    }

    #[test]
    fn target_anchored_embedding_reuses_existing_root() {
        // target ℚ(√2)(√3)(√5) already contains √2: no new adjunction
        let t = q2();
        let t = extend_tower(&t, &FieldElement::from_int(Arc::clone(&t), 3)).unwrap();
        let t = extend_tower(&t, &FieldElement::from_int(Arc::clone(&t), 5)).unwrap();
        let frag = sqrt2_fragment();
        let emb = embed_fragment_into_tower(&frag, &t).unwrap();
        let image = &emb.images()[0];
        assert_eq!(image.tower(), &t);
        assert_eq!(image, &FieldElement::generator(Arc::clone(&t), 0).lift_to(&t).unwrap());
    }

    #[test]
    fn quaternions_reject_sqrt2_fragment() {
        let frag = sqrt2_fragment();
        let err = embed_hilbert_fragment::<Quaternion>(&frag).unwrap_err();
        assert_eq!(err, Error::RootImageMismatch);
    }

    #[test]
    fn missing_provenance_blocks_embedding() {
        let frag = HilbertFragment::rationals()
            .adjoin_root(&FieldElement::from_int(Tower::rationals(), 7))
            .unwrap();
        let err = embed_hilbert_fragment::<FieldElement>(&frag).unwrap_err();
        assert_eq!(err, Error::MissingProvenance);
    }

    type P = ProjectivePoint<FieldElement>;

    #[test]
    fn induced_map_examples() {
        let h = FieldHom::inclusion(Tower::rationals(), q2()).unwrap();
        let e: P = ProjectivePoint::from_ints(&[1, 2, 3, 4]);
        let img = induced_point_map(&h, &e).unwrap();
        assert_eq!(img.rep().coords()[3].as_rat().unwrap(), Rat::from_integer(4.into()));

        let e1: P = ProjectivePoint::from_ints(&[1, 0, 0, 0]);
        let e2: P = ProjectivePoint::from_ints(&[0, 1, 0, 0]);
        assert!(perp(
            &induced_point_map(&h, &e1).unwrap(),
            &induced_point_map(&h, &e2).unwrap()
        )
        .unwrap());

        // ⊥-reflection: a non-perpendicular pair stays non-perpendicular
        let diag: P = ProjectivePoint::from_ints(&[1, 1, 0, 0]);
        let ip = crate::inner_spaces::inner(
            induced_point_map(&h, &e1).unwrap().rep(),
            induced_point_map(&h, &diag).unwrap().rep(),
        )
        .unwrap();
        assert!(ip.is_one());
    }

    #[test]
    fn check_embedding_examples() {
        let pairs: Vec<(P, P)> = vec![
            (
                ProjectivePoint::from_ints(&[1, 0, 0, 0]),
                ProjectivePoint::from_ints(&[0, 1, 0, 0]),
            ),
            (
                ProjectivePoint::from_ints(&[1, 1, 0, 0]),
                ProjectivePoint::from_ints(&[1, 2, 3, 4]),
            ),
        ];
        let identity =
            |e: &P| -> Result<P> { Ok(e.clone()) };
        let report = check_embedding(identity, &pairs).unwrap();
        assert!(report.passed());
        assert_eq!(report.pairs_checked, 2);

        let collapse = |_: &P| -> Result<P> { Ok(ProjectivePoint::from_ints(&[1, 0, 0, 0])) };
        let report = check_embedding(collapse, &pairs).unwrap();
        assert!(!report.passed());
        assert!(report.injectivity_failures > 0);
    }
}
