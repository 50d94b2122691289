//! Exact arithmetic for affine Weyl groups, the Iwahori-Hecke algebra with
//! parameters `q_s = 0`, and Demazure operators on Schubert classes of the
//! affine flag variety in characteristic `p`.
//!
//! The pieces, bottom up:
//!
//! * [`rootdata`]: Cartan data, positive roots, the highest root, `2 rho`.
//! * [`weyl`]: the affine Weyl group `Lambda x| W0`, lengths, reduced words,
//!   Bruhat order, balls, coset representatives.
//! * [`coeffs`]: `GF(p)`, the group ring `k[T~]`, the monoid ring `k[Lambda_+]`.
//! * [`hecke`]: the 0-parameter Hecke algebra in the `Y` and `Ytilde` bases.
//! * [`kmodule`]: Schubert classes with the right Demazure action.
//! * [`checks`]: property-check suites replicating the algebraic identities.
//! * [`serial`]: JSON schemas for all of the above.

pub mod checks;
pub mod coeffs;
pub mod hecke;
pub mod kmodule;
pub mod rootdata;
pub mod serial;
pub mod weyl;

pub use coeffs::{Coefficient, DominantMonoidElement, Fp, GroupRingElement, TorusCharacter};
pub use hecke::{HeckeBasis, HeckeElement};
pub use kmodule::{DemazureRule, GrassmannianVector, KModule, SchubertVector};
pub use rootdata::{CartanType, Coweight, LieType, Root, RootSystem};
pub use weyl::{AffineWeylElement, AffineWeylGroup, Ball, Word};
