//! The affine Weyl group `W = Lambda x| W0` of a simply connected group.
//!
//! Elements are kept in the canonical form `e^lambda * u`: a translation in
//! the coroot lattice and a finite part given by its matrix on coweights.
//! Equality and hashing are componentwise.
//!
//! Affine roots `(alpha, m)` are acted on by
//!
//! ```text
//! (e^lambda u) . (alpha, m) = (u(alpha), m - <lambda, u(alpha)>)
//! ```
//!
//! and a root is positive when `m > 0`, or `m = 0` and `alpha` is positive.
//! The simple affine roots are `(alpha_i, 0)` for `i >= 1` and `(-theta, 1)`
//! for `i = 0`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

use crate::rootdata::{CartanType, Coweight, Root, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("elements belong to different root systems ({left} vs {right})")]
    Mismatch { left: CartanType, right: CartanType },
    #[error("generator index {index} out of range 0..={max}")]
    BadGenerator { index: usize, max: usize },
    #[error("coweight has {got} coordinates, rank is {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("element has length {length}, above the exhaustive-branching guard {guard}; raise the guard or pick a shorter element")]
    LengthGuard { length: usize, guard: usize },
    #[error("resource bound of {limit} elements exceeded; enumeration completed through length {attained}")]
    ResourceBound { limit: usize, attained: usize },
    #[error("{0} is not antidominant")]
    NotAntidominant(Coweight),
}

/// Action of an element of `W0`, stored both on coweights (simple-coroot
/// coordinates) and on roots (simple-root coordinates). Both matrices are
/// row-major `l x l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinitePart {
    coweight: Vec<i64>,
    root: Vec<i64>,
}

impl FinitePart {
    fn identity(l: usize) -> FinitePart {
        let mut m = vec![0; l * l];
        for i in 0..l {
            m[i * l + i] = 1;
        }
        FinitePart {
            coweight: m.clone(),
            root: m,
        }
    }

    fn rank(&self) -> usize {
        (self.coweight.len() as f64).sqrt() as usize
    }

    pub fn is_identity(&self) -> bool {
        let l = self.rank();
        (0..l).all(|r| (0..l).all(|c| self.coweight[r * l + c] == i64::from(r == c)))
    }

    /// Matrix on coweights, row-major.
    pub fn coweight_matrix(&self) -> &[i64] {
        &self.coweight
    }

    pub fn act_on_coweight(&self, lambda: &[i64]) -> Vec<i64> {
        mat_vec(&self.coweight, lambda)
    }

    pub fn act_on_root(&self, beta: &[i64]) -> Vec<i64> {
        mat_vec(&self.root, beta)
    }

    fn compose(&self, other: &FinitePart) -> FinitePart {
        FinitePart {
            coweight: mat_mul(&self.coweight, &other.coweight),
            root: mat_mul(&self.root, &other.root),
        }
    }
}

fn mat_vec(m: &[i64], v: &[i64]) -> Vec<i64> {
    let l = v.len();
    (0..l)
        .map(|r| {
            m[r * l..(r + 1) * l]
                .iter()
                .zip(v)
                .map(|(a, b)| a * b)
                .sum()
        })
        .collect()
}

fn mat_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let l = (a.len() as f64).sqrt() as usize;
    let mut out = vec![0; l * l];
    for r in 0..l {
        for k in 0..l {
            let x = a[r * l + k];
            if x == 0 {
                continue;
            }
            for c in 0..l {
                out[r * l + c] += x * b[k * l + c];
            }
        }
    }
    out
}

/// An element `e^lambda * u` of the affine Weyl group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElement {
    cartan_type: CartanType,
    translation: Coweight,
    finite: FinitePart,
}

impl AffineWeylElement {
    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn translation(&self) -> &Coweight {
        &self.translation
    }

    pub fn finite(&self) -> &FinitePart {
        &self.finite
    }

    pub fn is_identity(&self) -> bool {
        self.translation.is_zero() && self.finite.is_identity()
    }

    pub fn is_pure_translation(&self) -> bool {
        self.finite.is_identity()
    }
}

/// A sequence of generator indices in `0..=l`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

/// All elements of length at most `max_length`, grouped by length. Each
/// shell is sorted by canonical reduced word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ball {
    pub max_length: usize,
    pub shells: Vec<Vec<AffineWeylElement>>,
}

impl Ball {
    pub fn counts(&self) -> Vec<usize> {
        self.shells.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.shells.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Elements in (length, canonical word) order.
    pub fn iter(&self) -> impl Iterator<Item = &AffineWeylElement> {
        self.shells.iter().flatten()
    }

    /// Elements of length at most `n`.
    pub fn up_to(&self, n: usize) -> impl Iterator<Item = &AffineWeylElement> {
        self.shells.iter().take(n + 1).flatten()
    }
}

/// The affine Weyl group of one root system, with its generators and
/// longest finite element precomputed. Immutable after construction.
#[derive(Debug, Clone)]
pub struct AffineWeylGroup {
    root_system: RootSystem,
    roots: Vec<Root>,
    identity: AffineWeylElement,
    generators: Vec<AffineWeylElement>,
    simple_affine_roots: Vec<(Root, i64)>,
    longest_finite: AffineWeylElement,
}

impl AffineWeylGroup {
    pub fn new(root_system: RootSystem) -> AffineWeylGroup {
        let l = root_system.rank();
        let cartan_type = root_system.cartan_type();
        let identity = AffineWeylElement {
            cartan_type,
            translation: Coweight::zero(l),
            finite: FinitePart::identity(l),
        };

        let mut generators = Vec::with_capacity(l + 1);
        let theta = root_system.highest_root().clone();
        let theta_vee = root_system.coroot(&theta);
        generators.push(AffineWeylElement {
            cartan_type,
            translation: theta_vee.clone(),
            finite: reflection(&root_system, &theta, &theta_vee),
        });
        for i in 0..l {
            generators.push(AffineWeylElement {
                cartan_type,
                translation: Coweight::zero(l),
                finite: reflection(
                    &root_system,
                    &root_system.simple_root(i),
                    &Coweight::simple_coroot(l, i),
                ),
            });
        }

        let mut simple_affine_roots = vec![(-&theta, 1)];
        simple_affine_roots.extend((0..l).map(|i| (root_system.simple_root(i), 0)));

        let roots = root_system.roots().collect();
        let mut group = AffineWeylGroup {
            root_system,
            roots,
            identity: identity.clone(),
            generators,
            simple_affine_roots,
            longest_finite: identity,
        };
        group.longest_finite = group.greedy_longest_finite();
        group
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn cartan_type(&self) -> CartanType {
        self.root_system.cartan_type()
    }

    pub fn rank(&self) -> usize {
        self.root_system.rank()
    }

    /// Number of affine generators, `l + 1`.
    pub fn num_generators(&self) -> usize {
        self.rank() + 1
    }

    pub fn identity(&self) -> &AffineWeylElement {
        &self.identity
    }

    /// `s_i` for `1 <= i <= l`; `s_0 = e^{theta^vee} s_theta` for `i = 0`.
    ///
    /// Panics on an index outside `0..=l`; use [`Self::try_generator`] for
    /// untrusted input.
    pub fn generator(&self, i: usize) -> &AffineWeylElement {
        &self.generators[i]
    }

    pub fn try_generator(&self, i: usize) -> Result<&AffineWeylElement, WeylError> {
        self.generators.get(i).ok_or(WeylError::BadGenerator {
            index: i,
            max: self.rank(),
        })
    }

    /// `e^lambda`.
    pub fn translation(&self, lambda: &Coweight) -> Result<AffineWeylElement, WeylError> {
        self.check_coweight(lambda)?;
        Ok(AffineWeylElement {
            cartan_type: self.cartan_type(),
            translation: lambda.clone(),
            finite: self.identity.finite.clone(),
        })
    }

    fn check_coweight(&self, lambda: &Coweight) -> Result<(), WeylError> {
        if lambda.rank() == self.rank() {
            Ok(())
        } else {
            Err(WeylError::DimensionMismatch {
                expected: self.rank(),
                got: lambda.rank(),
            })
        }
    }

    fn check_member(&self, x: &AffineWeylElement) -> Result<(), WeylError> {
        if x.cartan_type == self.cartan_type() {
            Ok(())
        } else {
            Err(WeylError::Mismatch {
                left: self.cartan_type(),
                right: x.cartan_type,
            })
        }
    }

    /// `(e^lambda u)(e^mu v) = e^{lambda + u(mu)} uv`, with root-system checks.
    pub fn multiply(
        &self,
        x: &AffineWeylElement,
        y: &AffineWeylElement,
    ) -> Result<AffineWeylElement, WeylError> {
        self.check_member(x)?;
        self.check_member(y)?;
        Ok(self.mul(x, y))
    }

    /// Product without membership checks.
    pub fn mul(&self, x: &AffineWeylElement, y: &AffineWeylElement) -> AffineWeylElement {
        debug_assert_eq!(x.cartan_type, y.cartan_type);
        let moved = Coweight(x.finite.act_on_coweight(&y.translation.0));
        AffineWeylElement {
            cartan_type: x.cartan_type,
            translation: &x.translation + &moved,
            finite: x.finite.compose(&y.finite),
        }
    }

    /// `x * s_i`.
    pub fn mul_gen(&self, x: &AffineWeylElement, i: usize) -> AffineWeylElement {
        self.mul(x, &self.generators[i])
    }

    pub fn inverse(&self, x: &AffineWeylElement) -> AffineWeylElement {
        // u^{-1} from the reversed reduced word of the finite part
        let word = self.reduced_word(&AffineWeylElement {
            cartan_type: x.cartan_type,
            translation: Coweight::zero(self.rank()),
            finite: x.finite.clone(),
        });
        let mut u_inv = self.identity.clone();
        for &i in word.0.iter().rev() {
            u_inv = self.mul_gen(&u_inv, i);
        }
        let neg = -&x.translation;
        AffineWeylElement {
            cartan_type: x.cartan_type,
            translation: Coweight(u_inv.finite.act_on_coweight(&neg.0)),
            finite: u_inv.finite,
        }
    }

    pub fn word_product(&self, word: &Word) -> Result<AffineWeylElement, WeylError> {
        let mut x = self.identity.clone();
        for &i in &word.0 {
            self.try_generator(i)?;
            x = self.mul_gen(&x, i);
        }
        Ok(x)
    }

    /// Image of the affine root `(beta, m)` under `x`.
    pub fn act_on_affine_root(&self, x: &AffineWeylElement, beta: &Root, m: i64) -> (Root, i64) {
        let moved = x.finite.act_on_root(&beta.0);
        let shift = self.root_system.pair(&x.translation.0, &moved);
        (Root(moved), m - shift)
    }

    /// Number of positive affine roots sent to negative affine roots.
    ///
    /// For each finite root `beta` the affine roots `(beta, m)` form a string;
    /// the count per string is computed in closed form from the shift
    /// `k = <lambda, u(beta)>`.
    pub fn length(&self, x: &AffineWeylElement) -> usize {
        let mut total: i64 = 0;
        for beta in &self.roots {
            let moved = x.finite.act_on_root(&beta.0);
            let k = self.root_system.pair(&x.translation.0, &moved);
            let moved_negative = !Root(moved).is_positive();
            // positive affine roots on this string: m >= 0 (beta > 0) or m >= 1
            let m_min = if beta.is_positive() { 0 } else { 1 };
            // image (u beta, m - k) is negative iff m < k, or m == k with u beta < 0
            if k > m_min {
                total += k - m_min;
            }
            if moved_negative && k >= m_min {
                total += 1;
            }
        }
        total as usize
    }

    /// Whether `l(x s_i) < l(x)`, decided by whether `x` sends the `i`-th
    /// simple affine root to a negative affine root.
    pub fn is_right_descent(&self, x: &AffineWeylElement, i: usize) -> bool {
        let (beta, m) = &self.simple_affine_roots[i];
        let (image, shift) = self.act_on_affine_root(x, beta, *m);
        shift < 0 || (shift == 0 && !image.is_positive())
    }

    pub fn right_descents(&self, x: &AffineWeylElement) -> Vec<usize> {
        (0..self.num_generators())
            .filter(|&i| self.is_right_descent(x, i))
            .collect()
    }

    fn first_descent(&self, x: &AffineWeylElement) -> Option<usize> {
        (0..self.num_generators()).find(|&i| self.is_right_descent(x, i))
    }

    /// Canonical reduced word: repeatedly peel the smallest right descent.
    pub fn reduced_word(&self, x: &AffineWeylElement) -> Word {
        let mut letters = Vec::new();
        let mut cur = x.clone();
        while let Some(i) = self.first_descent(&cur) {
            letters.push(i);
            cur = self.mul_gen(&cur, i);
        }
        debug_assert!(cur.is_identity());
        letters.reverse();
        Word(letters)
    }

    /// Every reduced word of `x`, by branching over all right descents.
    pub fn all_reduced_words(
        &self,
        x: &AffineWeylElement,
        guard: usize,
    ) -> Result<BTreeSet<Word>, WeylError> {
        let length = self.length(x);
        if length > guard {
            return Err(WeylError::LengthGuard { length, guard });
        }
        let mut out = BTreeSet::new();
        let mut suffix = Vec::with_capacity(length);
        self.collect_words(x, &mut suffix, &mut out);
        Ok(out)
    }

    fn collect_words(
        &self,
        x: &AffineWeylElement,
        suffix: &mut Vec<usize>,
        out: &mut BTreeSet<Word>,
    ) {
        let descents = self.right_descents(x);
        if descents.is_empty() {
            out.insert(Word(suffix.iter().rev().copied().collect()));
            return;
        }
        for i in descents {
            suffix.push(i);
            self.collect_words(&self.mul_gen(x, i), suffix, out);
            suffix.pop();
        }
    }

    /// Bruhat order by the descent recursion (lifting property).
    pub fn bruhat_leq(&self, u: &AffineWeylElement, w: &AffineWeylElement) -> bool {
        let mut u = u.clone();
        let mut w = w.clone();
        let mut lu = self.length(&u);
        let mut lw = self.length(&w);
        loop {
            if lu == 0 {
                return true;
            }
            if lu > lw {
                return false;
            }
            let i = self
                .first_descent(&w)
                .expect("w has positive length, so it has a right descent");
            if self.is_right_descent(&u, i) {
                u = self.mul_gen(&u, i);
                lu -= 1;
            }
            w = self.mul_gen(&w, i);
            lw -= 1;
        }
    }

    /// Breadth-first enumeration of all elements of length at most
    /// `max_length`, refusing to hold more than `limit` elements.
    pub fn enumerate_ball(&self, max_length: usize, limit: usize) -> Result<Ball, WeylError> {
        let mut shells: Vec<Vec<AffineWeylElement>> = vec![vec![self.identity.clone()]];
        let mut total = 1usize;
        if total > limit {
            return Err(WeylError::ResourceBound { limit, attained: 0 });
        }
        for n in 0..max_length {
            let mut seen: HashSet<AffineWeylElement> = HashSet::new();
            let mut next = Vec::new();
            for x in &shells[n] {
                for i in 0..self.num_generators() {
                    if self.is_right_descent(x, i) {
                        continue;
                    }
                    let y = self.mul_gen(x, i);
                    if seen.insert(y.clone()) {
                        next.push(y);
                        total += 1;
                        if total > limit {
                            return Err(WeylError::ResourceBound { limit, attained: n });
                        }
                    }
                }
            }
            next.sort_by_cached_key(|x| self.reduced_word(x));
            shells.push(next);
        }
        Ok(Ball { max_length, shells })
    }

    pub fn longest_finite_element(&self) -> &AffineWeylElement {
        &self.longest_finite
    }

    fn greedy_longest_finite(&self) -> AffineWeylElement {
        let mut x = self.identity.clone();
        'ascend: loop {
            for i in 1..self.num_generators() {
                if !self.is_right_descent(&x, i) {
                    x = self.mul_gen(&x, i);
                    continue 'ascend;
                }
            }
            return x;
        }
    }

    /// The minimal-length element of `x * W_parabolic`.
    pub fn min_coset_rep(
        &self,
        x: &AffineWeylElement,
        parabolic: &[usize],
    ) -> Result<AffineWeylElement, WeylError> {
        for &i in parabolic {
            self.try_generator(i)?;
        }
        let mut cur = x.clone();
        'descend: loop {
            for &i in parabolic {
                if self.is_right_descent(&cur, i) {
                    cur = self.mul_gen(&cur, i);
                    continue 'descend;
                }
            }
            return Ok(cur);
        }
    }

    /// All elements of `W0`, by breadth-first closure under `s_1..s_l`.
    pub fn finite_elements(&self) -> Vec<AffineWeylElement> {
        let mut seen: HashSet<AffineWeylElement> = HashSet::new();
        let mut out = vec![self.identity.clone()];
        seen.insert(self.identity.clone());
        let mut k = 0;
        while k < out.len() {
            for i in 1..self.num_generators() {
                let y = self.mul_gen(&out[k], i);
                if seen.insert(y.clone()) {
                    out.push(y);
                }
            }
            k += 1;
        }
        out
    }

    /// Indices of the finite generators `s_1..s_l`.
    pub fn finite_generators(&self) -> Vec<usize> {
        (1..self.num_generators()).collect()
    }

    /// `e^lambda` for antidominant `lambda`, which is the minimal element of
    /// its coset modulo `W0`.
    pub fn antidominant_rep(&self, lambda: &Coweight) -> Result<AffineWeylElement, WeylError> {
        self.check_coweight(lambda)?;
        if !self.root_system.is_antidominant(lambda) {
            return Err(WeylError::NotAntidominant(lambda.clone()));
        }
        let x = self.translation(lambda)?;
        debug_assert_eq!(self.min_coset_rep(&x, &self.finite_generators())?, x);
        Ok(x)
    }

    /// Reassemble an element from its translation and a word in `s_1..s_l`
    /// for the finite part.
    pub fn from_parts(
        &self,
        lambda: &Coweight,
        finite_word: &Word,
    ) -> Result<AffineWeylElement, WeylError> {
        if let Some(&bad) = finite_word.0.iter().find(|&&i| i == 0 || i > self.rank()) {
            return Err(WeylError::BadGenerator {
                index: bad,
                max: self.rank(),
            });
        }
        let u = self.word_product(finite_word)?;
        Ok(self.mul(&self.translation(lambda)?, &u))
    }

    /// Canonical reduced word of the finite part `u` of `e^lambda u`.
    pub fn finite_word(&self, x: &AffineWeylElement) -> Word {
        self.reduced_word(&AffineWeylElement {
            cartan_type: x.cartan_type,
            translation: Coweight::zero(self.rank()),
            finite: x.finite.clone(),
        })
    }

    /// Order of `s_i s_j`, or `None` when it exceeds 6 (the affine `A1` case).
    pub fn braid_order(&self, i: usize, j: usize) -> Option<usize> {
        let st = self.mul(&self.generators[i], &self.generators[j]);
        let mut power = st.clone();
        for m in 1..=6 {
            if power.is_identity() {
                return Some(m);
            }
            power = self.mul(&power, &st);
        }
        None
    }
}

/// Reflection in the root `beta` with coroot `beta_vee`:
/// on coweights `lambda -> lambda - <lambda, beta> beta_vee`, on roots
/// `gamma -> gamma - <beta_vee, gamma> beta`.
fn reflection(rs: &RootSystem, beta: &Root, beta_vee: &Coweight) -> FinitePart {
    let l = rs.rank();
    let mut coweight = vec![0; l * l];
    let mut root = vec![0; l * l];
    for c in 0..l {
        let e = Coweight::simple_coroot(l, c);
        let p = rs.pair(&e.0, &beta.0);
        for r in 0..l {
            coweight[r * l + c] = i64::from(r == c) - p * beta_vee.0[r];
        }
        let g = Root::simple(l, c);
        let q = rs.pair(&beta_vee.0, &g.0);
        for r in 0..l {
            root[r * l + c] = i64::from(r == c) - q * beta.0[r];
        }
    }
    FinitePart { coweight, root }
}
