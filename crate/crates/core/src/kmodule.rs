//! The free `k[T~]`-module on Schubert classes `[O_{S_w}]`, `w` in `W`, with
//! Demazure operators acting on the right.
//!
//! On basis classes
//!
//! ```text
//! [O_{S_w}] . D_i = [O_{S_w}]        if w s_i < w
//!                 = [O_{S_{w s_i}}]  otherwise
//! ```
//!
//! extended `k[T~]`-linearly. `D_w` is the composite along a reduced word of
//! `w`, and `Y_w` acts through `D_w`. All operators are written postfix:
//! `v . D_i . D_j` applies `D_i` first.

use thiserror::Error;

use crate::coeffs::{CoeffError, Coefficient, Fp, GroupRingElement, LinearCombination};
use crate::hecke::{convert_basis, HeckeBasis, HeckeElement};
use crate::rootdata::{Coweight, RootSystem};
use crate::weyl::{AffineWeylElement, AffineWeylGroup, WeylError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("class {class} is not of the form w0 e^mu with mu dominant")]
    NotSpherical { class: String },
}

/// The basis rule used by [`KModule`].
///
/// Only [`DemazureRule::Standard`] is the Demazure action; the flipped
/// variants exist so that property checks can be shown to catch a broken
/// rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DemazureRule {
    #[default]
    Standard,
    /// On a descent, `[w] -> [w s_i]` instead of `[w]`, for every generator.
    FlippedDescent,
    /// As [`DemazureRule::FlippedDescent`] but only for one generator.
    FlippedDescentAt(usize),
}

/// A finite combination of Schubert classes. The default coefficient ring is
/// `k[T~]`; `SchubertVector<Fp>` is the specialization at `T~ = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertVector<C: Coefficient = GroupRingElement> {
    terms: LinearCombination<AffineWeylElement, C>,
}

impl<C: Coefficient> Default for SchubertVector<C> {
    fn default() -> Self {
        SchubertVector {
            terms: LinearCombination::new(),
        }
    }
}

impl<C: Coefficient> SchubertVector<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `coeff * [O_{S_w}]`.
    pub fn class(w: AffineWeylElement, coeff: C) -> Self {
        SchubertVector {
            terms: LinearCombination::single(w, coeff),
        }
    }

    pub fn from_terms(terms: LinearCombination<AffineWeylElement, C>) -> Self {
        SchubertVector { terms }
    }

    pub fn terms(&self) -> &LinearCombination<AffineWeylElement, C> {
        &self.terms
    }

    pub fn add_class(&mut self, w: AffineWeylElement, coeff: C) {
        self.terms.add_term(w, coeff);
    }

    pub fn plus(&self, other: &Self) -> Self {
        SchubertVector {
            terms: self.terms.plus(&other.terms),
        }
    }

    pub fn scaled(&self, c: &C) -> Self {
        SchubertVector {
            terms: self.terms.scaled(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// A finite combination of Schubert classes of the affine Grassmannian,
/// keyed by the antidominant representative of the coset `e^lambda W0`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GrassmannianVector {
    terms: LinearCombination<Coweight, GroupRingElement>,
}

impl GrassmannianVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `coeff * [lambda]`, with `lambda` normalized to the antidominant
    /// element of its `W0`-orbit.
    pub fn class(rs: &RootSystem, lambda: &Coweight, coeff: GroupRingElement) -> Self {
        let mut out = Self::zero();
        out.add_class(rs, lambda, coeff);
        out
    }

    pub fn add_class(&mut self, rs: &RootSystem, lambda: &Coweight, coeff: GroupRingElement) {
        self.terms.add_term(rs.antidominant_in_orbit(lambda), coeff);
    }

    pub fn terms(&self) -> &LinearCombination<Coweight, GroupRingElement> {
        &self.terms
    }
}

/// The Schubert-class module over one affine Weyl group.
#[derive(Debug, Clone, Copy)]
pub struct KModule<'g> {
    group: &'g AffineWeylGroup,
    rule: DemazureRule,
}

impl<'g> KModule<'g> {
    pub fn new(group: &'g AffineWeylGroup) -> Self {
        KModule {
            group,
            rule: DemazureRule::Standard,
        }
    }

    pub fn with_rule(group: &'g AffineWeylGroup, rule: DemazureRule) -> Self {
        KModule { group, rule }
    }

    pub fn group(&self) -> &'g AffineWeylGroup {
        self.group
    }

    pub fn rule(&self) -> DemazureRule {
        self.rule
    }

    /// Image of the single class `[O_{S_w}]` under `D_i`.
    pub fn demazure_target(&self, w: &AffineWeylElement, i: usize) -> AffineWeylElement {
        let descent = self.group.is_right_descent(w, i);
        let flipped = match self.rule {
            DemazureRule::Standard => false,
            DemazureRule::FlippedDescent => true,
            DemazureRule::FlippedDescentAt(j) => i == j,
        };
        if descent && !flipped {
            w.clone()
        } else {
            self.group.mul_gen(w, i)
        }
    }

    /// `v . D_i`.
    pub fn demazure_apply<C: Coefficient>(
        &self,
        v: &SchubertVector<C>,
        i: usize,
    ) -> SchubertVector<C> {
        SchubertVector {
            terms: v.terms.map_keys(|w| self.demazure_target(w, i)),
        }
    }

    /// `v . D_{i_1} . D_{i_2} ...` for an arbitrary sequence of letters.
    pub fn demazure_along<C: Coefficient>(
        &self,
        v: &SchubertVector<C>,
        letters: &[usize],
    ) -> SchubertVector<C> {
        SchubertVector {
            terms: v.terms.map_keys(|w| self.class_along(w, letters)),
        }
    }

    /// Image of one class along a sequence of letters.
    pub fn class_along(&self, w: &AffineWeylElement, letters: &[usize]) -> AffineWeylElement {
        letters
            .iter()
            .fold(w.clone(), |cur, &i| self.demazure_target(&cur, i))
    }

    /// `v . D_w`, along the canonical reduced word of `w`.
    pub fn demazure_word_apply<C: Coefficient>(
        &self,
        v: &SchubertVector<C>,
        w: &AffineWeylElement,
    ) -> SchubertVector<C> {
        let word = self.group.reduced_word(w);
        self.demazure_along(v, word.letters())
    }

    /// `v . h` with `Y_w` acting through `D_w` and coefficients multiplying.
    pub fn hecke_act<C: Coefficient>(
        &self,
        v: &SchubertVector<C>,
        h: &HeckeElement<C>,
    ) -> Result<SchubertVector<C>, ModuleError> {
        let members = v.terms.keys().chain(h.terms().keys());
        if let Some(x) = members
            .into_iter()
            .find(|x| x.cartan_type() != self.group.cartan_type())
        {
            return Err(WeylError::Mismatch {
                left: self.group.cartan_type(),
                right: x.cartan_type(),
            }
            .into());
        }
        if let Some(probe) = v.terms.some_coefficient().or(h.terms().some_coefficient()) {
            v.terms.coefficients_in_ring_of(probe)?;
            h.terms().coefficients_in_ring_of(probe)?;
        }

        let hy = convert_basis(self.group, h, HeckeBasis::Y);
        let mut out = LinearCombination::new();
        for (w, cw) in hy.terms().iter() {
            let word = self.group.reduced_word(w);
            for (x, cx) in v.terms.iter() {
                out.add_term(self.class_along(x, word.letters()), cx.times(cw));
            }
        }
        Ok(SchubertVector { terms: out })
    }

    /// `Xi: Y_w -> [O_{S_w}]`, termwise.
    pub fn xi_forward<C: Coefficient>(&self, h: &HeckeElement<C>) -> SchubertVector<C> {
        let hy = convert_basis(self.group, h, HeckeBasis::Y);
        SchubertVector {
            terms: hy.terms().clone(),
        }
    }

    /// Inverse of [`Self::xi_forward`], landing in the `Y` basis.
    pub fn xi_inverse<C: Coefficient>(&self, v: &SchubertVector<C>) -> HeckeElement<C> {
        HeckeElement::from_terms(HeckeBasis::Y, v.terms.clone())
    }

    /// `pi^*`: `[lambda_-] -> [O_{S_{e^{lambda_-} w0}}]`.
    pub fn grassmannian_pullback(
        &self,
        g: &GrassmannianVector,
    ) -> Result<SchubertVector, ModuleError> {
        let w0 = self.group.longest_finite_element();
        let mut out = LinearCombination::new();
        for (lambda, c) in g.terms.iter() {
            let t = self.group.antidominant_rep(lambda)?;
            out.add_term(self.group.mul(&t, w0), c.clone());
        }
        Ok(SchubertVector { terms: out })
    }

    /// For `x = w0 e^mu` with `mu` dominant, return `mu`.
    pub fn spherical_label(&self, x: &AffineWeylElement) -> Option<Coweight> {
        let w0 = self.group.longest_finite_element();
        if x.finite() != w0.finite() {
            return None;
        }
        // w0 e^mu = e^{w0(mu)} w0
        let mu = Coweight(w0.finite().act_on_coweight(&x.translation().0));
        self.group.root_system().is_dominant(&mu).then_some(mu)
    }

    /// `[O_{S_{w0 e^mu}}]` as a group element.
    pub fn spherical_class(&self, mu: &Coweight) -> Result<AffineWeylElement, ModuleError> {
        if !self.group.root_system().is_dominant(mu) {
            return Err(CoeffError::NotDominant(mu.clone()).into());
        }
        let t = self.group.translation(mu)?;
        Ok(self.group.mul(self.group.longest_finite_element(), &t))
    }

    /// Action of `e^lambda` in `k[Lambda_+]` on the spherical submodule:
    /// `[O_{S_{w0 e^mu}}] -> [O_{S_{w0 e^{mu+lambda}}}]`.
    pub fn spherical_act<C: Coefficient>(
        &self,
        lambda: &Coweight,
        v: &SchubertVector<C>,
    ) -> Result<SchubertVector<C>, ModuleError> {
        if !self.group.root_system().is_dominant(lambda) {
            return Err(CoeffError::NotDominant(lambda.clone()).into());
        }
        let mut out = LinearCombination::new();
        for (x, c) in v.terms.iter() {
            let mu = self
                .spherical_label(x)
                .ok_or_else(|| ModuleError::NotSpherical {
                    class: format!("{:?}", self.group.reduced_word(x).letters()),
                })?;
            let sum = mu.checked_add(lambda).ok_or(CoeffError::Overflow)?;
            out.add_term(self.spherical_class(&sum)?, c.clone());
        }
        Ok(SchubertVector { terms: out })
    }

    /// Evaluate every coefficient at `T~ = 1`.
    pub fn specialize(&self, v: &SchubertVector<GroupRingElement>) -> SchubertVector<Fp> {
        SchubertVector {
            terms: v
                .terms
                .map_coefficients(GroupRingElement::specialize_at_identity),
        }
    }
}
