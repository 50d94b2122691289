//! Coefficient arithmetic: the prime field `GF(p)`, the group ring `k[T~]` of
//! the extended torus `T~ = G_m x T`, the dominant monoid ring `k[Lambda_+]`,
//! and specialization at the identity of `T~`.
//!
//! Characters of `T~` are integer vectors of length `l + 1`; index 0 is the
//! loop-rotation factor and indices `1..=l` are characters of `T`.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::rootdata::{Coweight, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("coefficient rings differ: {left} vs {right}")]
    Mismatch { left: String, right: String },
    #[error("character has {got} exponents, expected {expected}")]
    Width { expected: usize, got: usize },
    #[error("exponent arithmetic overflowed")]
    Overflow,
    #[error("{0} is not dominant")]
    NotDominant(Coweight),
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// What a coefficient ring must provide for sparse linear combinations.
///
/// The operations assume both operands live in the same ring and panic
/// otherwise; use [`Coefficient::same_ring`] to validate untrusted input.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn same_ring(&self, other: &Self) -> bool;
    /// Human-readable ring name used in mismatch diagnostics.
    fn ring_name(&self) -> String;
}

/// An element of `GF(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    residue: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, p: u64) -> Result<Fp, CoeffError> {
        if !is_prime(p) {
            return Err(CoeffError::NotPrime(p));
        }
        Ok(Fp::reduce(value, p))
    }

    /// Reduce `value` modulo `p` without checking primality.
    pub(crate) fn reduce(value: i64, p: u64) -> Fp {
        Fp {
            residue: value.rem_euclid(p as i64) as u64,
            modulus: p,
        }
    }

    pub fn zero(p: u64) -> Fp {
        Fp {
            residue: 0,
            modulus: p,
        }
    }

    pub fn one(p: u64) -> Fp {
        Fp::reduce(1, p)
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Multiplicative inverse by Fermat; `None` for zero.
    pub fn inverse(&self) -> Option<Fp> {
        if self.residue == 0 {
            return None;
        }
        let mut result = 1u64;
        let mut base = self.residue;
        let mut e = self.modulus - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % self.modulus;
            }
            base = base * base % self.modulus;
            e >>= 1;
        }
        Some(Fp {
            residue: result,
            modulus: self.modulus,
        })
    }

    fn check(&self, other: &Fp) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed GF({}) and GF({}) arithmetic",
            self.modulus, other.modulus
        );
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, other: Fp) -> Fp {
        self.check(&other);
        Fp {
            residue: (self.residue + other.residue) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, other: Fp) -> Fp {
        self + (-other)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            residue: (self.modulus - self.residue) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, other: Fp) -> Fp {
        self.check(&other);
        Fp {
            residue: self.residue * other.residue % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Coefficient for Fp {
    fn is_zero(&self) -> bool {
        self.residue == 0
    }
    fn plus(&self, other: &Self) -> Self {
        *self + *other
    }
    fn times(&self, other: &Self) -> Self {
        *self * *other
    }
    fn negated(&self) -> Self {
        -*self
    }
    fn same_ring(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }
    fn ring_name(&self) -> String {
        format!("GF({})", self.modulus)
    }
}

/// A finitely supported map `K -> C` with no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearCombination<K: Ord, C> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord, C> Default for LinearCombination<K, C> {
    fn default() -> Self {
        LinearCombination {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone, C: Coefficient> LinearCombination<K, C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(key: K, coeff: C) -> Self {
        let mut out = Self::new();
        out.add_term(key, coeff);
        out
    }

    /// Add `coeff * key`, pruning the entry if it cancels.
    pub fn add_term(&mut self, key: K, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().plus(&coeff);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn get(&self, key: &K) -> Option<&C> {
        self.terms.get(key)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, C> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, C> {
        self.terms.keys()
    }

    pub fn coefficients(&self) -> btree_map::Values<'_, K, C> {
        self.terms.values()
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn negated(&self) -> Self {
        self.map_coefficients(|c| c.negated())
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    /// Multiply every coefficient by `scalar`.
    pub fn scaled(&self, scalar: &C) -> Self {
        self.map_coefficients(|c| c.times(scalar))
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> LinearCombination<K, D> {
        let mut out = LinearCombination::new();
        for (k, c) in self.iter() {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    /// Relabel keys; colliding targets have their coefficients added.
    pub fn map_keys<J: Ord + Clone>(&self, f: impl Fn(&K) -> J) -> LinearCombination<J, C> {
        let mut out = LinearCombination::new();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Whether all coefficients live in the same ring as `probe`.
    pub fn coefficients_in_ring_of(&self, probe: &C) -> Result<(), CoeffError> {
        match self.coefficients().find(|c| !c.same_ring(probe)) {
            None => Ok(()),
            Some(c) => Err(CoeffError::Mismatch {
                left: probe.ring_name(),
                right: c.ring_name(),
            }),
        }
    }

    /// Any coefficient, used as the ring witness for consistency checks.
    pub fn some_coefficient(&self) -> Option<&C> {
        self.terms.values().next()
    }
}

impl<K: Ord + Clone, C: Coefficient> FromIterator<(K, C)> for LinearCombination<K, C> {
    fn from_iter<I: IntoIterator<Item = (K, C)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<'a, K: Ord, C> IntoIterator for &'a LinearCombination<K, C> {
    type Item = (&'a K, &'a C);
    type IntoIter = btree_map::Iter<'a, K, C>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

/// A character of `T~`, an integer vector of length `l + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusCharacter(pub Vec<i64>);

impl TorusCharacter {
    pub fn trivial(width: usize) -> TorusCharacter {
        TorusCharacter(vec![0; width])
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn checked_add(&self, other: &TorusCharacter) -> Result<TorusCharacter, CoeffError> {
        if self.width() != other.width() {
            return Err(CoeffError::Width {
                expected: self.width(),
                got: other.width(),
            });
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(CoeffError::Overflow))
            .collect::<Result<Vec<_>, _>>()
            .map(TorusCharacter)
    }
}

/// An element of `GF(p)[X^*(T~)]`: a Laurent polynomial in `l + 1`
/// variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    modulus: u64,
    width: usize,
    terms: LinearCombination<TorusCharacter, Fp>,
}

impl GroupRingElement {
    pub fn zero(p: u64, width: usize) -> GroupRingElement {
        GroupRingElement {
            modulus: p,
            width,
            terms: LinearCombination::new(),
        }
    }

    pub fn one(p: u64, width: usize) -> GroupRingElement {
        GroupRingElement::constant(Fp::one(p), width)
    }

    pub fn constant(c: Fp, width: usize) -> GroupRingElement {
        GroupRingElement::monomial(c, TorusCharacter::trivial(width))
    }

    pub fn monomial(c: Fp, chi: TorusCharacter) -> GroupRingElement {
        GroupRingElement {
            modulus: c.modulus(),
            width: chi.width(),
            terms: LinearCombination::single(chi, c),
        }
    }

    /// Build from `(exponents, coefficient)` pairs, reducing modulo `p`.
    pub fn from_terms(
        p: u64,
        width: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, i64)>,
    ) -> Result<GroupRingElement, CoeffError> {
        if !is_prime(p) {
            return Err(CoeffError::NotPrime(p));
        }
        let mut out = GroupRingElement::zero(p, width);
        for (exp, c) in terms {
            if exp.len() != width {
                return Err(CoeffError::Width {
                    expected: width,
                    got: exp.len(),
                });
            }
            out.terms.add_term(TorusCharacter(exp), Fp::reduce(c, p));
        }
        Ok(out)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&TorusCharacter, &Fp)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|chi| chi.0.iter().all(|&e| e == 0))
    }

    fn check(&self, other: &GroupRingElement) -> Result<(), CoeffError> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(CoeffError::Mismatch {
                left: self.ring_name(),
                right: other.ring_name(),
            })
        }
    }

    pub fn try_add(&self, other: &GroupRingElement) -> Result<GroupRingElement, CoeffError> {
        self.check(other)?;
        Ok(GroupRingElement {
            terms: self.terms.plus(&other.terms),
            ..self.clone()
        })
    }

    pub fn try_mul(&self, other: &GroupRingElement) -> Result<GroupRingElement, CoeffError> {
        self.check(other)?;
        let mut terms = LinearCombination::new();
        for (a, x) in self.terms.iter() {
            for (b, y) in other.terms.iter() {
                terms.add_term(a.checked_add(b)?, *x * *y);
            }
        }
        Ok(GroupRingElement {
            modulus: self.modulus,
            width: self.width,
            terms,
        })
    }

    pub fn negate(&self) -> GroupRingElement {
        GroupRingElement {
            terms: self.terms.negated(),
            ..self.clone()
        }
    }

    pub fn scale(&self, c: Fp) -> GroupRingElement {
        GroupRingElement {
            terms: self.terms.scaled(&c),
            ..self.clone()
        }
    }

    /// Evaluate every character at the identity: the sum of the
    /// coefficients.
    pub fn specialize_at_identity(&self) -> Fp {
        self.terms
            .coefficients()
            .fold(Fp::zero(self.modulus), |acc, c| acc + *c)
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (chi, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if chi.0.iter().all(|&e| e == 0) {
                write!(f, "{c}")?;
            } else {
                let exps: Vec<String> = chi.0.iter().map(i64::to_string).collect();
                write!(f, "{c}t{{{}}}", exps.join(","))?;
            }
        }
        Ok(())
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, other: &GroupRingElement) -> GroupRingElement {
        self.try_add(other).expect("group ring addition")
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, other: &GroupRingElement) -> GroupRingElement {
        self.try_mul(other).expect("group ring multiplication")
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        self.negate()
    }
}

impl Coefficient for GroupRingElement {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        self.negate()
    }
    fn same_ring(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.width == other.width
    }
    fn ring_name(&self) -> String {
        format!("GF({})[T~ of width {}]", self.modulus, self.width)
    }
}

/// An element of `GF(p)[Lambda_+]`; every key is a dominant coweight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantMonoidElement {
    modulus: u64,
    terms: LinearCombination<Coweight, Fp>,
}

impl DominantMonoidElement {
    pub fn zero(p: u64) -> DominantMonoidElement {
        DominantMonoidElement {
            modulus: p,
            terms: LinearCombination::new(),
        }
    }

    /// The unit `e^0`.
    pub fn one(p: u64, rank: usize) -> DominantMonoidElement {
        DominantMonoidElement {
            modulus: p,
            terms: LinearCombination::single(Coweight::zero(rank), Fp::one(p)),
        }
    }

    pub fn from_terms(
        rs: &RootSystem,
        p: u64,
        terms: impl IntoIterator<Item = (Coweight, i64)>,
    ) -> Result<DominantMonoidElement, CoeffError> {
        if !is_prime(p) {
            return Err(CoeffError::NotPrime(p));
        }
        let mut out = DominantMonoidElement::zero(p);
        for (lambda, c) in terms {
            if !rs.is_dominant(&lambda) {
                return Err(CoeffError::NotDominant(lambda));
            }
            out.terms.add_term(lambda, Fp::reduce(c, p));
        }
        Ok(out)
    }

    pub fn monomial(
        rs: &RootSystem,
        p: u64,
        lambda: Coweight,
    ) -> Result<DominantMonoidElement, CoeffError> {
        DominantMonoidElement::from_terms(rs, p, [(lambda, 1)])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Coweight, &Fp)> {
        self.terms.iter()
    }

    pub fn try_add(
        &self,
        other: &DominantMonoidElement,
    ) -> Result<DominantMonoidElement, CoeffError> {
        self.check(other)?;
        Ok(DominantMonoidElement {
            modulus: self.modulus,
            terms: self.terms.plus(&other.terms),
        })
    }

    /// Keys add coweight-wise; dominance is preserved because the dominant
    /// cone is a monoid.
    pub fn try_mul(
        &self,
        other: &DominantMonoidElement,
    ) -> Result<DominantMonoidElement, CoeffError> {
        self.check(other)?;
        let mut terms = LinearCombination::new();
        for (a, x) in self.terms.iter() {
            for (b, y) in other.terms.iter() {
                let key = a.checked_add(b).ok_or(CoeffError::Overflow)?;
                terms.add_term(key, *x * *y);
            }
        }
        Ok(DominantMonoidElement {
            modulus: self.modulus,
            terms,
        })
    }

    fn check(&self, other: &DominantMonoidElement) -> Result<(), CoeffError> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(CoeffError::Mismatch {
                left: format!("GF({})[Lambda_+]", self.modulus),
                right: format!("GF({})[Lambda_+]", other.modulus),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::LieType;
    use proptest::prelude::*;

    fn gr(p: u64, terms: &[(&[i64], i64)]) -> GroupRingElement {
        let width = terms.first().map_or(2, |t| t.0.len());
        GroupRingElement::from_terms(p, width, terms.iter().map(|(e, c)| (e.to_vec(), *c))).unwrap()
    }

    #[test]
    fn field_axioms_exhaustive() {
        for p in [2u64, 3, 5] {
            let elems: Vec<Fp> = (0..p as i64).map(|v| Fp::new(v, p).unwrap()).collect();
            let zero = Fp::zero(p);
            let one = Fp::one(p);
            for &a in &elems {
                assert_eq!(a + zero, a);
                assert_eq!(a * one, a);
                assert_eq!(a + (-a), zero);
                if a != zero {
                    assert_eq!(a * a.inverse().unwrap(), one);
                }
                for &b in &elems {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    for &c in &elems {
                        assert_eq!((a + b) + c, a + (b + c));
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
            }
            assert!(zero.inverse().is_none());
        }
        assert_eq!(Fp::new(3, 4), Err(CoeffError::NotPrime(4)));
        assert_eq!(Fp::new(-1, 5).unwrap().residue(), 4);
    }

    #[test]
    fn unit_and_frobenius() {
        let x = gr(2, &[(&[1, 0], 1), (&[0, -1], 1)]);
        let one = GroupRingElement::one(2, 2);
        assert_eq!(&one * &x, x);

        let chi_plus_one = gr(2, &[(&[1, 2], 1), (&[0, 0], 1)]);
        let square = &chi_plus_one * &chi_plus_one;
        assert_eq!(square, gr(2, &[(&[2, 4], 1), (&[0, 0], 1)]));
    }

    #[test]
    fn cancellation_prunes_terms() {
        let a = gr(3, &[(&[1, 0], 1)]);
        let b = gr(3, &[(&[1, 0], 2)]);
        let s = &a + &b;
        assert!(s.is_zero());
        assert_eq!(s.num_terms(), 0);
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = gr(3, &[(&[1, 0], 1)]);
        let b = gr(5, &[(&[1, 0], 1)]);
        assert!(matches!(a.try_mul(&b), Err(CoeffError::Mismatch { .. })));
        let c = gr(3, &[(&[1, 0, 0], 1)]);
        assert!(matches!(a.try_add(&c), Err(CoeffError::Mismatch { .. })));
        assert!(matches!(
            GroupRingElement::from_terms(3, 2, [(vec![1], 1)]),
            Err(CoeffError::Width {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn overflow_is_rejected() {
        let a = gr(3, &[(&[i64::MAX, 0], 1)]);
        let b = gr(3, &[(&[1, 0], 1)]);
        assert_eq!(a.try_mul(&b), Err(CoeffError::Overflow));
    }

    #[test]
    fn specialization_examples() {
        let m = GroupRingElement::monomial(Fp::new(4, 5).unwrap(), TorusCharacter(vec![1, -2, 3]));
        assert_eq!(m.specialize_at_identity(), Fp::new(4, 5).unwrap());
        let x = gr(3, &[(&[1, 0], 1), (&[0, 1], 2)]);
        assert_eq!(x.specialize_at_identity(), Fp::zero(3));
    }

    #[test]
    fn monoid_ring_examples() {
        let a1 = RootSystem::build(LieType::A, 1).unwrap();
        let unit = DominantMonoidElement::one(3, 1);
        let x = DominantMonoidElement::monomial(&a1, 3, Coweight(vec![1])).unwrap();
        assert_eq!(unit.try_mul(&x).unwrap(), x);
        assert_eq!(
            x.try_mul(&x).unwrap(),
            DominantMonoidElement::monomial(&a1, 3, Coweight(vec![2])).unwrap()
        );

        let a2 = RootSystem::build(LieType::A, 2).unwrap();
        let theta = Coweight(vec![1, 1]);
        let lhs = DominantMonoidElement::from_terms(
            &a2,
            5,
            [(theta.clone(), 1), (Coweight(vec![0, 0]), 1)],
        )
        .unwrap()
        .try_mul(&DominantMonoidElement::monomial(&a2, 5, theta.clone()).unwrap())
        .unwrap();
        let rhs =
            DominantMonoidElement::from_terms(&a2, 5, [(Coweight(vec![2, 2]), 1), (theta, 1)])
                .unwrap();
        assert_eq!(lhs, rhs);

        assert!(matches!(
            DominantMonoidElement::monomial(&a2, 5, Coweight(vec![1, 0])),
            Err(CoeffError::NotDominant(_))
        ));
    }

    fn group_ring(p: u64) -> impl Strategy<Value = GroupRingElement> {
        prop::collection::vec((prop::collection::vec(-2i64..=2, 3), 0i64..p as i64), 0..5)
            .prop_map(move |ts| GroupRingElement::from_terms(p, 3, ts).unwrap())
    }

    proptest! {
        #[test]
        fn ring_laws(a in group_ring(5), b in group_ring(5), c in group_ring(5)) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a + &(-&a)).is_zero());
            for x in [&a, &b, &(&a * &b)] {
                prop_assert!(x.terms().all(|(_, c)| !c.is_zero()));
            }
        }

        #[test]
        fn specialization_is_a_ring_map(a in group_ring(3), b in group_ring(3)) {
            prop_assert_eq!((&a * &b).specialize_at_identity(), a.specialize_at_identity() * b.specialize_at_identity());
            prop_assert_eq!((&a + &b).specialize_at_identity(), a.specialize_at_identity() + b.specialize_at_identity());
        }

        #[test]
        fn monomials_are_not_zero_divisors(e in prop::collection::vec(-3i64..=3, 3), f in prop::collection::vec(-3i64..=3, 3), c in 1i64..7, d in 1i64..7) {
            let x = GroupRingElement::monomial(Fp::new(c, 7).unwrap(), TorusCharacter(e));
            let y = GroupRingElement::monomial(Fp::new(d, 7).unwrap(), TorusCharacter(f));
            prop_assert!(!(&x * &y).is_zero());
        }
    }
}
