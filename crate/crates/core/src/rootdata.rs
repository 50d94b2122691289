//! Root data of a split, simply connected, simple group.
//!
//! Roots are stored in simple-root coordinates and cocharacters (coweights) in
//! simple-coroot coordinates. Everything is integral; there is no Euclidean
//! embedding.
//!
//! The Cartan matrix is stored with the convention
//!
//! ```text
//! cartan[i][j] = <alpha_j^vee, alpha_i>
//! ```
//!
//! so rows index roots and columns index coroots. Every pairing in the crate is
//! routed through this matrix.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDataError {
    #[error("invalid Cartan type ({lie_type}, {rank}): {reason}")]
    InvalidType {
        lie_type: char,
        rank: usize,
        reason: &'static str,
    },
    #[error("cannot parse a Cartan type from {0:?} (expected e.g. \"A2\", \"G2\")")]
    Parse(String),
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// The family letter of an irreducible reduced root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl LieType {
    pub fn letter(self) -> char {
        match self {
            LieType::A => 'A',
            LieType::B => 'B',
            LieType::C => 'C',
            LieType::D => 'D',
            LieType::E => 'E',
            LieType::F => 'F',
            LieType::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<LieType> {
        Some(match c.to_ascii_uppercase() {
            'A' => LieType::A,
            'B' => LieType::B,
            'C' => LieType::C,
            'D' => LieType::D,
            'E' => LieType::E,
            'F' => LieType::F,
            'G' => LieType::G,
            _ => return None,
        })
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A valid (family, rank) pair such as `A2` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    lie_type: LieType,
    rank: usize,
}

impl CartanType {
    pub fn new(lie_type: LieType, rank: usize) -> Result<CartanType, RootDataError> {
        let reason = match lie_type {
            LieType::A if rank >= 1 => None,
            LieType::A => Some("type A needs rank >= 1"),
            LieType::B | LieType::C if rank >= 2 => None,
            LieType::B | LieType::C => Some("types B and C need rank >= 2"),
            LieType::D if rank >= 4 => None,
            LieType::D => Some("type D needs rank >= 4"),
            LieType::E if (6..=8).contains(&rank) => None,
            LieType::E => Some("type E exists only in ranks 6, 7, 8"),
            LieType::F if rank == 4 => None,
            LieType::F => Some("type F exists only in rank 4"),
            LieType::G if rank == 2 => None,
            LieType::G => Some("type G exists only in rank 2"),
        };
        match reason {
            None => Ok(CartanType { lie_type, rank }),
            Some(reason) => Err(RootDataError::InvalidType {
                lie_type: lie_type.letter(),
                rank,
                reason,
            }),
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots, used as a self-check on the closure.
    pub fn expected_positive_roots(&self) -> usize {
        let l = self.rank;
        match self.lie_type {
            LieType::A => l * (l + 1) / 2,
            LieType::B | LieType::C => l * l,
            LieType::D => l * (l - 1),
            LieType::E => match l {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            LieType::F => 24,
            LieType::G => 6,
        }
    }

    /// Gram matrix `(alpha_i, alpha_j)` of an invariant form, scaled so that
    /// all entries are integers (Bourbaki numbering).
    fn inner_products(&self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut g = vec![vec![0i64; l]; l];
        let edge = |g: &mut Vec<Vec<i64>>, a: usize, b: usize, v: i64| {
            g[a][b] = v;
            g[b][a] = v;
        };
        match self.lie_type {
            LieType::A => {
                set_diagonal(&mut g, 2);
                for i in 0..l.saturating_sub(1) {
                    edge(&mut g, i, i + 1, -1);
                }
            }
            LieType::B => {
                set_diagonal(&mut g, 4);
                g[l - 1][l - 1] = 2;
                for i in 0..l - 1 {
                    edge(&mut g, i, i + 1, -2);
                }
            }
            LieType::C => {
                set_diagonal(&mut g, 2);
                g[l - 1][l - 1] = 4;
                for i in 0..l - 2 {
                    edge(&mut g, i, i + 1, -1);
                }
                edge(&mut g, l - 2, l - 1, -2);
            }
            LieType::D => {
                set_diagonal(&mut g, 2);
                for i in 0..l - 2 {
                    edge(&mut g, i, i + 1, -1);
                }
                edge(&mut g, l - 3, l - 1, -1);
            }
            LieType::E => {
                set_diagonal(&mut g, 2);
                edge(&mut g, 0, 2, -1);
                edge(&mut g, 1, 3, -1);
                for i in 2..l - 1 {
                    edge(&mut g, i, i + 1, -1);
                }
            }
            LieType::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                edge(&mut g, 0, 1, -2);
                edge(&mut g, 1, 2, -2);
                edge(&mut g, 2, 3, -1);
            }
            LieType::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                edge(&mut g, 0, 1, -3);
            }
        }
        g
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.lie_type, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| RootDataError::Parse(s.into()))?;
        let lie_type =
            LieType::from_letter(letter).ok_or_else(|| RootDataError::Parse(s.into()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootDataError::Parse(s.into()))?;
        CartanType::new(lie_type, rank)
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Roots are either nonnegative or nonpositive combinations of simple
    /// roots; the zero vector is not a root.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

/// A cocharacter in simple-coroot coordinates; an element of the coroot
/// lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn zero(rank: usize) -> Coweight {
        Coweight(vec![0; rank])
    }

    pub fn simple_coroot(rank: usize, i: usize) -> Coweight {
        let mut v = vec![0; rank];
        v[i] = 1;
        Coweight(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Coordinatewise sum that refuses to wrap around.
    pub fn checked_add(&self, other: &Coweight) -> Option<Coweight> {
        if self.0.len() != other.0.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .map(Coweight)
    }
}

impl Add for &Coweight {
    type Output = Coweight;
    fn add(self, other: &Coweight) -> Coweight {
        self.checked_add(other)
            .expect("coweight addition overflowed or mixed ranks")
    }
}

impl Sub for &Coweight {
    type Output = Coweight;
    fn sub(self, other: &Coweight) -> Coweight {
        self + &(-other)
    }
}

impl Neg for &Coweight {
    type Output = Coweight;
    fn neg(self) -> Coweight {
        Coweight(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{{")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// Root system of one irreducible type. Immutable after construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    inner: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    highest_root: Root,
    two_rho: Root,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.cartan_type == other.cartan_type
    }
}

impl Eq for RootSystem {}

impl RootSystem {
    pub fn build(lie_type: LieType, rank: usize) -> Result<RootSystem, RootDataError> {
        Ok(RootSystem::new(CartanType::new(lie_type, rank)?))
    }

    pub fn new(cartan_type: CartanType) -> RootSystem {
        let l = cartan_type.rank();
        let inner = cartan_type.inner_products();
        let cartan: Vec<Vec<i64>> = (0..l)
            .map(|i| (0..l).map(|j| 2 * inner[i][j] / inner[j][j]).collect())
            .collect();

        let positive_roots = close_under_reflections(&cartan);
        assert_eq!(
            positive_roots.len(),
            cartan_type.expected_positive_roots(),
            "root closure for {cartan_type} produced the wrong number of positive roots"
        );

        let highest_root = positive_roots
            .iter()
            .max_by_key(|r| r.height())
            .cloned()
            .expect("positive roots are nonempty");
        debug_assert!(positive_roots.iter().all(|r| r
            .0
            .iter()
            .zip(&highest_root.0)
            .all(|(a, b)| a <= b)));

        let mut two_rho = vec![0i64; l];
        for r in &positive_roots {
            for (acc, c) in two_rho.iter_mut().zip(&r.0) {
                *acc += c;
            }
        }

        RootSystem {
            cartan_type,
            inner,
            cartan,
            positive_roots,
            highest_root,
            two_rho: Root(two_rho),
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    /// `cartan()[i][j] = <alpha_j^vee, alpha_i>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// All roots, positive ones first (in closure order) followed by their
    /// negatives.
    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.positive_roots
            .iter()
            .cloned()
            .chain(self.positive_roots.iter().map(|r| -r))
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest_root
    }

    pub fn two_rho(&self) -> &Root {
        &self.two_rho
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn pairing(&self, lambda: &Coweight, beta: &Root) -> Result<i64, RootDataError> {
        self.check_len(lambda.0.len())?;
        self.check_len(beta.0.len())?;
        Ok(self.pair(&lambda.0, &beta.0))
    }

    /// Unchecked pairing on raw coordinates.
    pub(crate) fn pair(&self, lambda: &[i64], beta: &[i64]) -> i64 {
        let mut total = 0;
        for (i, &b) in beta.iter().enumerate() {
            if b == 0 {
                continue;
            }
            let row = &self.cartan[i];
            for (j, &lam) in lambda.iter().enumerate() {
                total += lam * b * row[j];
            }
        }
        total
    }

    /// `<lambda, alpha_i>`.
    pub fn simple_pairing(&self, lambda: &Coweight, i: usize) -> i64 {
        self.cartan[i]
            .iter()
            .zip(&lambda.0)
            .map(|(c, l)| c * l)
            .sum()
    }

    pub fn is_dominant(&self, lambda: &Coweight) -> bool {
        lambda.0.len() == self.rank()
            && (0..self.rank()).all(|i| self.simple_pairing(lambda, i) >= 0)
    }

    pub fn is_antidominant(&self, lambda: &Coweight) -> bool {
        self.is_dominant(&-lambda)
    }

    /// The coroot of a root, in simple-coroot coordinates.
    pub fn coroot(&self, beta: &Root) -> Coweight {
        let norm = self.norm(beta);
        Coweight(
            beta.0
                .iter()
                .enumerate()
                .map(|(i, &b)| {
                    let num = b * self.inner[i][i];
                    debug_assert_eq!(num % norm, 0);
                    num / norm
                })
                .collect(),
        )
    }

    fn norm(&self, beta: &Root) -> i64 {
        let mut n = 0;
        for (i, &a) in beta.0.iter().enumerate() {
            for (j, &b) in beta.0.iter().enumerate() {
                n += a * b * self.inner[i][j];
            }
        }
        n
    }

    pub fn reflect_root(&self, i: usize, beta: &Root) -> Root {
        let c: i64 = beta
            .0
            .iter()
            .enumerate()
            .map(|(k, &b)| b * self.cartan[k][i])
            .sum();
        let mut out = beta.clone();
        out.0[i] -= c;
        out
    }

    pub fn reflect_coweight(&self, i: usize, lambda: &Coweight) -> Coweight {
        let c = self.simple_pairing(lambda, i);
        let mut out = lambda.clone();
        out.0[i] -= c;
        out
    }

    /// The unique antidominant element of the W0-orbit of `lambda`.
    pub fn antidominant_in_orbit(&self, lambda: &Coweight) -> Coweight {
        let mut cur = lambda.clone();
        'outer: loop {
            for i in 0..self.rank() {
                if self.simple_pairing(&cur, i) > 0 {
                    cur = self.reflect_coweight(i, &cur);
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    pub fn dominant_in_orbit(&self, lambda: &Coweight) -> Coweight {
        -&self.antidominant_in_orbit(&-lambda)
    }

    fn check_len(&self, got: usize) -> Result<(), RootDataError> {
        if got == self.rank() {
            Ok(())
        } else {
            Err(RootDataError::DimensionMismatch {
                expected: self.rank(),
                got,
            })
        }
    }
}

/// Positive roots generated from the simple roots by simple reflections,
/// ordered by height and then lexicographically.
fn close_under_reflections(cartan: &[Vec<i64>]) -> Vec<Root> {
    let l = cartan.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..l {
        let r = Root::simple(l, i).0;
        seen.insert(r.clone());
        queue.push_back(r);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..l {
            let c: i64 = beta
                .iter()
                .enumerate()
                .map(|(k, &b)| b * cartan[k][i])
                .sum();
            if c >= 0 {
                continue;
            }
            let mut next = beta.clone();
            next[i] -= c;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut roots: Vec<Root> = seen.into_iter().map(Root).collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    roots
}

#[derive(Serialize, Deserialize)]
struct RootSystemRepr {
    #[serde(rename = "type")]
    lie_type: String,
    rank: usize,
}

impl Serialize for RootSystem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RootSystemRepr {
            lie_type: self.cartan_type.lie_type().to_string(),
            rank: self.rank(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RootSystem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = RootSystemRepr::deserialize(deserializer)?;
        let mut chars = repr.lie_type.chars();
        let lie_type = match (chars.next().and_then(LieType::from_letter), chars.next()) {
            (Some(t), None) => t,
            _ => {
                return Err(serde::de::Error::custom(format!(
                    "unknown Lie type {:?}",
                    repr.lie_type
                )))
            }
        };
        RootSystem::build(lie_type, repr.rank).map_err(serde::de::Error::custom)
    }
}

fn set_diagonal(g: &mut [Vec<i64>], v: i64) {
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<CartanType> {
        let mut v = vec![];
        for l in 1..=5 {
            v.push(CartanType::new(LieType::A, l).unwrap());
        }
        for l in 2..=5 {
            v.push(CartanType::new(LieType::B, l).unwrap());
            v.push(CartanType::new(LieType::C, l).unwrap());
        }
        for l in 4..=6 {
            v.push(CartanType::new(LieType::D, l).unwrap());
        }
        for l in 6..=8 {
            v.push(CartanType::new(LieType::E, l).unwrap());
        }
        v.push(CartanType::new(LieType::F, 4).unwrap());
        v.push(CartanType::new(LieType::G, 2).unwrap());
        v
    }

    /// Independent oracle: orbit of the simple roots under all simple
    /// reflections (both signs), then keep the positive half.
    fn reflection_orbit_positive(rs: &RootSystem) -> BTreeSet<Root> {
        let mut seen: BTreeSet<Root> = (0..rs.rank()).map(|i| rs.simple_root(i)).collect();
        let mut frontier: Vec<Root> = seen.iter().cloned().collect();
        while let Some(beta) = frontier.pop() {
            for i in 0..rs.rank() {
                let next = rs.reflect_root(i, &beta);
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        seen.into_iter().filter(|r| r.is_positive()).collect()
    }

    #[test]
    fn a1_data() {
        let rs = RootSystem::build(LieType::A, 1).unwrap();
        assert_eq!(rs.positive_roots(), &[Root(vec![1])]);
        assert_eq!(rs.highest_root(), &Root(vec![1]));
        assert_eq!(rs.two_rho(), &Root(vec![1]));
    }

    #[test]
    fn a2_and_g2_root_counts_match_orbit_oracle() {
        let a2 = RootSystem::build(LieType::A, 2).unwrap();
        assert_eq!(reflection_orbit_positive(&a2).len(), 3);
        assert_eq!(a2.positive_roots().len(), 3);
        assert_eq!(a2.highest_root(), &Root(vec![1, 1]));

        let g2 = RootSystem::build(LieType::G, 2).unwrap();
        assert_eq!(reflection_orbit_positive(&g2).len(), 6);
        assert_eq!(g2.positive_roots().len(), 6);
        assert_eq!(g2.highest_root(), &Root(vec![3, 2]));
    }

    #[test]
    fn every_type_satisfies_invariants() {
        for t in all_types() {
            let rs = RootSystem::new(t);
            let l = rs.rank();
            for i in 0..l {
                assert_eq!(rs.cartan()[i][i], 2);
                for j in 0..l {
                    if i != j {
                        assert!((-3..=0).contains(&rs.cartan()[i][j]), "{t}");
                    }
                }
            }
            let set: BTreeSet<_> = rs.positive_roots().iter().cloned().collect();
            assert_eq!(set.len(), rs.positive_roots().len());
            assert_eq!(set, reflection_orbit_positive(&rs), "{t}");
            for i in 0..l {
                assert!(set.contains(&rs.simple_root(i)));
            }
            // closed under adding a simple root when the result is a root
            for beta in &set {
                for i in 0..l {
                    let mut sum = beta.clone();
                    sum.0[i] += 1;
                    let in_orbit = rs.roots().any(|r| r == sum);
                    assert_eq!(in_orbit, set.contains(&sum));
                }
            }
            let theta = rs.highest_root();
            for beta in &set {
                assert!(beta.0.iter().zip(&theta.0).all(|(a, b)| a <= b));
            }
            for i in 0..l {
                let c: i64 = theta
                    .0
                    .iter()
                    .enumerate()
                    .map(|(k, &b)| b * rs.cartan()[k][i])
                    .sum();
                assert!(c >= 0, "theta not dominant in {t}");
            }
            let mut sum = vec![0; l];
            for r in &set {
                for (acc, b) in sum.iter_mut().zip(&r.0) {
                    *acc += b;
                }
            }
            assert_eq!(rs.two_rho().0, sum);
        }
    }

    #[test]
    fn invalid_types_are_rejected() {
        for (t, l) in [
            (LieType::A, 0),
            (LieType::B, 1),
            (LieType::C, 1),
            (LieType::D, 3),
            (LieType::E, 5),
            (LieType::E, 9),
            (LieType::F, 3),
            (LieType::G, 3),
        ] {
            let err = RootSystem::build(t, l).unwrap_err();
            let msg = err.to_string();
            assert!(msg.contains(&format!("({}, {})", t.letter(), l)), "{msg}");
        }
        assert!("X3".parse::<CartanType>().is_err());
        assert_eq!("g2".parse::<CartanType>().unwrap().to_string(), "G2");
    }

    #[test]
    fn pairing_examples() {
        let a1 = RootSystem::build(LieType::A, 1).unwrap();
        assert_eq!(a1.pairing(&Coweight(vec![1]), &Root(vec![1])).unwrap(), 2);
        let a2 = RootSystem::build(LieType::A, 2).unwrap();
        assert_eq!(
            a2.pairing(&Coweight(vec![1, 0]), &Root(vec![0, 1]))
                .unwrap(),
            -1
        );
        assert_eq!(
            a2.pairing(&Coweight(vec![1, 1]), &Root(vec![2, 2]))
                .unwrap(),
            4
        );
        assert!(matches!(
            a2.pairing(&Coweight(vec![1]), &Root(vec![0, 1])),
            Err(RootDataError::DimensionMismatch {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn dominance_examples() {
        let a1 = RootSystem::build(LieType::A, 1).unwrap();
        assert!(a1.is_dominant(&Coweight(vec![1])));
        let a2 = RootSystem::build(LieType::A, 2).unwrap();
        assert!(!a2.is_dominant(&Coweight(vec![1, 0])));
        assert!(a2.is_dominant(&Coweight(vec![1, 1])));
    }

    #[test]
    fn coroot_of_highest_root() {
        let a2 = RootSystem::build(LieType::A, 2).unwrap();
        assert_eq!(a2.coroot(a2.highest_root()), Coweight(vec![1, 1]));
        // In G2 the highest root 3a1+2a2 is long; its coroot is a1^v + 2a2^v.
        let g2 = RootSystem::build(LieType::G, 2).unwrap();
        assert_eq!(g2.coroot(g2.highest_root()), Coweight(vec![1, 2]));
        // C2: highest root 2a1+a2 is long, coroot a1^v + a2^v.
        let c2 = RootSystem::build(LieType::C, 2).unwrap();
        assert_eq!(c2.highest_root(), &Root(vec![2, 1]));
        assert_eq!(c2.coroot(c2.highest_root()), Coweight(vec![1, 1]));
        for t in all_types() {
            let rs = RootSystem::new(t);
            for beta in rs.positive_roots() {
                assert_eq!(rs.pairing(&rs.coroot(beta), beta).unwrap(), 2);
            }
        }
    }

    #[test]
    fn serde_regenerates_derived_data() {
        let g2 = RootSystem::build(LieType::G, 2).unwrap();
        let s = serde_json::to_string(&g2).unwrap();
        assert_eq!(s, r#"{"type":"G","rank":2}"#);
        let back: RootSystem = serde_json::from_str(&s).unwrap();
        assert_eq!(back.positive_roots(), g2.positive_roots());
        assert!(serde_json::from_str::<RootSystem>(r#"{"type":"D","rank":2}"#).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn types() -> impl Strategy<Value = CartanType> {
            prop::sample::select(all_types())
        }

        proptest! {
            #[test]
            fn pairing_is_bilinear(t in types(), seed in prop::collection::vec(-5i64..5, 32)) {
                let rs = RootSystem::new(t);
                let l = rs.rank();
                let lam = Coweight(seed[0..l].to_vec());
                let mu = Coweight(seed[8..8 + l].to_vec());
                let a = Root(seed[16..16 + l].to_vec());
                let b = Root(seed[24..24 + l].to_vec());
                let ab = Root(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect());
                prop_assert_eq!(
                    rs.pairing(&(&lam + &mu), &a).unwrap(),
                    rs.pairing(&lam, &a).unwrap() + rs.pairing(&mu, &a).unwrap()
                );
                prop_assert_eq!(
                    rs.pairing(&lam, &ab).unwrap(),
                    rs.pairing(&lam, &a).unwrap() + rs.pairing(&lam, &b).unwrap()
                );
            }

            #[test]
            fn dominant_monoid_is_closed(t in types(), seed in prop::collection::vec(0i64..4, 16)) {
                let rs = RootSystem::new(t);
                let l = rs.rank();
                let lam = rs.dominant_in_orbit(&Coweight(seed[0..l].to_vec()));
                let mu = rs.dominant_in_orbit(&Coweight(seed[8..8 + l].to_vec()));
                prop_assert!(rs.is_dominant(&lam));
                prop_assert!(rs.is_dominant(&mu));
                prop_assert!(rs.is_dominant(&(&lam + &mu)));
            }
        }
    }
}
