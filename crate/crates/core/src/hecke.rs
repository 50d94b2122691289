//! The Iwahori-Hecke algebra of the affine Weyl group with all parameters
//! `q_s = 0`.
//!
//! Two bases are supported. In the `Ytilde` basis (identified with the
//! Iwahori-Matsumoto basis `tau_w`) the relations are
//! `Yt_w Yt_w' = Yt_ww'` when lengths add and `Yt_s^2 = -Yt_s`. The `Y` basis is
//! `Y_w = (-1)^l(w) Yt_w`, in which `Y_s^2 = Y_s`: the product of basis
//! elements is again a basis element.

use std::fmt;

use thiserror::Error;

use crate::coeffs::{
    CoeffError, Coefficient, DominantMonoidElement, Fp, GroupRingElement, LinearCombination,
};
use crate::weyl::{AffineWeylElement, AffineWeylGroup, WeylError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// Which basis the coefficients of a [`HeckeElement`] refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HeckeBasis {
    /// `Y_w = (-1)^l(w) Yt_w`.
    Y,
    /// `Yt_w`, equal to the Iwahori-Matsumoto `tau_w`.
    YTilde,
}

impl HeckeBasis {
    pub fn label(self) -> &'static str {
        match self {
            HeckeBasis::Y => "Y",
            HeckeBasis::YTilde => "Yt",
        }
    }
}

impl fmt::Display for HeckeBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A finite combination of basis elements with coefficients in `C`
/// (`GF(p)` or `k[T~]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElement<C: Coefficient> {
    basis: HeckeBasis,
    terms: LinearCombination<AffineWeylElement, C>,
}

impl<C: Coefficient> HeckeElement<C> {
    pub fn zero(basis: HeckeBasis) -> Self {
        HeckeElement {
            basis,
            terms: LinearCombination::new(),
        }
    }

    pub fn from_terms(basis: HeckeBasis, terms: LinearCombination<AffineWeylElement, C>) -> Self {
        HeckeElement { basis, terms }
    }

    pub fn basis_element(basis: HeckeBasis, w: AffineWeylElement, coeff: C) -> Self {
        HeckeElement {
            basis,
            terms: LinearCombination::single(w, coeff),
        }
    }

    pub fn basis(&self) -> HeckeBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinearCombination<AffineWeylElement, C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, other: &Self, group: &AffineWeylGroup) -> Self {
        let other = convert_basis(group, other, self.basis);
        HeckeElement {
            basis: self.basis,
            terms: self.terms.plus(&other.terms),
        }
    }

    pub fn scaled(&self, c: &C) -> Self {
        HeckeElement {
            basis: self.basis,
            terms: self.terms.scaled(c),
        }
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> HeckeElement<D> {
        HeckeElement {
            basis: self.basis,
            terms: self.terms.map_coefficients(f),
        }
    }
}

/// `Y_w` with coefficient one in `GF(p)`.
pub fn basis_y(w: AffineWeylElement, p: u64) -> HeckeElement<Fp> {
    HeckeElement::basis_element(HeckeBasis::Y, w, Fp::one(p))
}

/// `Yt_w` with coefficient one in `GF(p)`.
pub fn basis_ytilde(w: AffineWeylElement, p: u64) -> HeckeElement<Fp> {
    HeckeElement::basis_element(HeckeBasis::YTilde, w, Fp::one(p))
}

/// Re-express `h` in `target` by the termwise sign `(-1)^l(w)`.
pub fn convert_basis<C: Coefficient>(
    group: &AffineWeylGroup,
    h: &HeckeElement<C>,
    target: HeckeBasis,
) -> HeckeElement<C> {
    if h.basis == target {
        return h.clone();
    }
    let terms = h
        .terms
        .iter()
        .map(|(w, c)| {
            let c = if group.length(w) % 2 == 1 {
                c.negated()
            } else {
                c.clone()
            };
            (w.clone(), c)
        })
        .collect();
    HeckeElement {
        basis: target,
        terms,
    }
}

/// The product `Y_x Y_w`: right-multiply by the letters of a reduced word of
/// `w`, using `Y_x Y_s = Y_xs` if `l(xs) > l(x)` and `Y_x` otherwise.
pub fn basis_product(
    group: &AffineWeylGroup,
    x: &AffineWeylElement,
    w: &AffineWeylElement,
) -> AffineWeylElement {
    let word = group.reduced_word(w);
    basis_product_along(group, x, word.letters())
}

pub(crate) fn basis_product_along(
    group: &AffineWeylGroup,
    x: &AffineWeylElement,
    letters: &[usize],
) -> AffineWeylElement {
    let mut cur = x.clone();
    for &i in letters {
        if !group.is_right_descent(&cur, i) {
            cur = group.mul_gen(&cur, i);
        }
    }
    cur
}

fn check_members<C: Coefficient>(
    group: &AffineWeylGroup,
    h: &HeckeElement<C>,
) -> Result<(), HeckeError> {
    if let Some(w) = h
        .terms
        .keys()
        .find(|w| w.cartan_type() != group.cartan_type())
    {
        return Err(WeylError::Mismatch {
            left: group.cartan_type(),
            right: w.cartan_type(),
        }
        .into());
    }
    Ok(())
}

/// Bilinear extension of the basis product. The result is expressed in the
/// basis of `a`.
pub fn multiply_hecke<C: Coefficient>(
    group: &AffineWeylGroup,
    a: &HeckeElement<C>,
    b: &HeckeElement<C>,
) -> Result<HeckeElement<C>, HeckeError> {
    check_members(group, a)?;
    check_members(group, b)?;
    if let Some(probe) = a.terms.some_coefficient() {
        a.terms.coefficients_in_ring_of(probe)?;
        b.terms.coefficients_in_ring_of(probe)?;
    } else if let Some(probe) = b.terms.some_coefficient() {
        b.terms.coefficients_in_ring_of(probe)?;
    }

    let ya = convert_basis(group, a, HeckeBasis::Y);
    let yb = convert_basis(group, b, HeckeBasis::Y);
    let mut terms = LinearCombination::new();
    for (w, cw) in yb.terms.iter() {
        let word = group.reduced_word(w);
        for (x, cx) in ya.terms.iter() {
            terms.add_term(basis_product_along(group, x, word.letters()), cx.times(cw));
        }
    }
    Ok(convert_basis(
        group,
        &HeckeElement {
            basis: HeckeBasis::Y,
            terms,
        },
        a.basis,
    ))
}

/// `Theta: e^lambda -> Y_{e^lambda}` on the dominant monoid ring.
pub fn theta_embed(
    group: &AffineWeylGroup,
    a: &DominantMonoidElement,
) -> Result<HeckeElement<Fp>, HeckeError> {
    let rs = group.root_system();
    let mut terms = LinearCombination::new();
    for (lambda, c) in a.terms() {
        if !rs.is_dominant(lambda) {
            return Err(CoeffError::NotDominant(lambda.clone()).into());
        }
        terms.add_term(group.translation(lambda)?, *c);
    }
    Ok(HeckeElement {
        basis: HeckeBasis::Y,
        terms,
    })
}

/// View a `GF(p)`-combination as one over `k[T~]` with constant coefficients.
pub fn lift_to_group_ring(h: &HeckeElement<Fp>, width: usize) -> HeckeElement<GroupRingElement> {
    h.map_coefficients(|c| GroupRingElement::constant(*c, width))
}

/// Specialize `k[T~]` coefficients at the identity of `T~`.
pub fn specialize_hecke(h: &HeckeElement<GroupRingElement>) -> HeckeElement<Fp> {
    h.map_coefficients(GroupRingElement::specialize_at_identity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{Coweight, LieType, RootSystem};
    use crate::weyl::Word;

    fn group(t: LieType, l: usize) -> AffineWeylGroup {
        AffineWeylGroup::new(RootSystem::build(t, l).unwrap())
    }

    fn w(g: &AffineWeylGroup, letters: &[usize]) -> AffineWeylElement {
        g.word_product(&Word(letters.to_vec())).unwrap()
    }

    /// Oracle for `Y_x Y_w` via the `Ytilde` relations: multiply letter by
    /// letter tracking an integer sign, then twist back to `Y`.
    fn ytilde_oracle(
        g: &AffineWeylGroup,
        x: &AffineWeylElement,
        w: &AffineWeylElement,
    ) -> (AffineWeylElement, i64) {
        let mut cur = x.clone();
        let mut sign = if g.length(x).is_multiple_of(2) { 1 } else { -1 };
        for i in g.reduced_word(w).0 {
            if g.is_right_descent(&cur, i) {
                sign = -sign; // Yt_s^2 = -Yt_s
            } else {
                cur = g.mul_gen(&cur, i);
            }
        }
        let w_sign = if g.length(w).is_multiple_of(2) { 1 } else { -1 };
        let out_sign = if g.length(&cur).is_multiple_of(2) { 1 } else { -1 };
        (cur, sign * w_sign * out_sign)
    }

    #[test]
    fn basis_y_examples() {
        let g = group(LieType::A, 1);
        let unit = basis_y(g.identity().clone(), 3);
        let x = basis_y(w(&g, &[0, 1, 0]), 3);
        assert_eq!(multiply_hecke(&g, &unit, &x).unwrap(), x);
        for letters in [&[][..], &[0], &[0, 1], &[1, 0, 1]] {
            let e = w(&g, letters);
            let y = basis_y(e.clone(), 5);
            let yt = basis_ytilde(e.clone(), 5);
            let sign = if letters.len() % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                convert_basis(&g, &y, HeckeBasis::YTilde),
                yt.scaled(&Fp::new(sign, 5).unwrap())
            );
            let y2 = basis_y(e.clone(), 2);
            let yt2 = basis_ytilde(e, 2);
            assert_eq!(
                convert_basis(&g, &y2, HeckeBasis::YTilde).terms(),
                yt2.terms()
            );
        }
    }

    #[test]
    fn convert_examples() {
        let g = group(LieType::A, 2);
        let yt = basis_ytilde(g.generator(0).clone(), 5);
        let y = convert_basis(&g, &yt, HeckeBasis::Y);
        assert_eq!(
            y,
            basis_y(g.generator(0).clone(), 5).scaled(&Fp::new(-1, 5).unwrap())
        );
        assert_eq!(convert_basis(&g, &y, HeckeBasis::YTilde), yt);
    }

    #[test]
    fn multiplication_examples() {
        let g = group(LieType::A, 1);
        let y0 = basis_y(g.generator(0).clone(), 3);
        let y1 = basis_y(g.generator(1).clone(), 3);
        assert_eq!(multiply_hecke(&g, &y0, &y0).unwrap(), y0);
        assert_eq!(
            multiply_hecke(&g, &y0, &y1).unwrap(),
            basis_y(w(&g, &[0, 1]), 3)
        );
        let a = basis_y(w(&g, &[0, 1]), 3);
        let b = basis_y(w(&g, &[1, 0]), 3);
        assert_eq!(
            multiply_hecke(&g, &a, &b).unwrap(),
            basis_y(w(&g, &[0, 1, 0]), 3)
        );

        let yt0 = basis_ytilde(g.generator(0).clone(), 3);
        assert_eq!(
            multiply_hecke(&g, &yt0, &yt0).unwrap(),
            yt0.scaled(&Fp::new(-1, 3).unwrap())
        );
    }

    #[test]
    fn products_match_ytilde_oracle() {
        for (t, l) in [(LieType::A, 2), (LieType::C, 2)] {
            let g = group(t, l);
            let ball = g.enumerate_ball(3, 10_000).unwrap();
            for x in ball.iter() {
                for y in ball.iter() {
                    let (z, sign) = ytilde_oracle(&g, x, y);
                    assert_eq!(sign, 1, "Y-basis products carry no sign");
                    assert_eq!(basis_product(&g, x, y), z);
                }
            }
        }
    }

    #[test]
    fn associativity_on_small_basis_triples() {
        for (t, l) in [(LieType::A, 2), (LieType::C, 2)] {
            let g = group(t, l);
            let ball = g.enumerate_ball(3, 10_000).unwrap();
            let elems: Vec<_> = ball.iter().cloned().collect();
            for u in &elems {
                for v in &elems {
                    let uv = basis_product(&g, u, v);
                    for x in &elems {
                        assert_eq!(
                            basis_product(&g, &uv, x),
                            basis_product(&g, u, &basis_product(&g, v, x))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn product_independent_of_reduced_word() {
        let g = group(LieType::C, 2);
        let ball = g.enumerate_ball(4, 10_000).unwrap();
        for x in ball.up_to(3) {
            for y in ball.iter() {
                let expected = basis_product(&g, x, y);
                for word in g.all_reduced_words(y, 8).unwrap() {
                    assert_eq!(basis_product_along(&g, x, word.letters()), expected);
                }
            }
        }
    }

    #[test]
    fn theta_examples() {
        let g = group(LieType::A, 1);
        let rs = g.root_system().clone();
        let unit = DominantMonoidElement::one(3, 1);
        assert_eq!(
            theta_embed(&g, &unit).unwrap(),
            basis_y(g.identity().clone(), 3)
        );
        let x = DominantMonoidElement::monomial(&rs, 3, Coweight(vec![1])).unwrap();
        assert_eq!(theta_embed(&g, &x).unwrap(), basis_y(w(&g, &[0, 1]), 3));
    }

    #[test]
    fn mismatches_are_rejected() {
        let a2 = group(LieType::A, 2);
        let c2 = group(LieType::C, 2);
        let x = basis_y(a2.generator(1).clone(), 3);
        let y = basis_y(c2.generator(1).clone(), 3);
        assert!(matches!(
            multiply_hecke(&a2, &x, &y),
            Err(HeckeError::Weyl(WeylError::Mismatch { .. }))
        ));
        let z = basis_y(a2.generator(1).clone(), 5);
        assert!(matches!(
            multiply_hecke(&a2, &x, &z),
            Err(HeckeError::Coeff(CoeffError::Mismatch { .. }))
        ));
    }
}
