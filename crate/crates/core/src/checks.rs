//! Property-check suites.
//!
//! Each suite replicates one family of identities on a length-truncation of
//! the affine Weyl group and reports every counterexample it finds. The
//! suites only use public operations, and the Bruhat suite carries its own
//! subword oracle, so a broken operation shows up as failures rather than as
//! a silently agreeing pair.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::coeffs::{
    DominantMonoidElement, Fp, GroupRingElement, LinearCombination, TorusCharacter,
};
use crate::hecke::{
    lift_to_group_ring, multiply_hecke, specialize_hecke, theta_embed, HeckeBasis, HeckeElement,
};
use crate::kmodule::{DemazureRule, GrassmannianVector, KModule, SchubertVector};
use crate::rootdata::{CartanType, Coweight, RootSystem};
use crate::serial::{element_to_json, hecke_to_json, schubert_to_json, word_to_json};
use crate::weyl::{AffineWeylElement, AffineWeylGroup, Ball, WeylError, Word};

/// Failure records kept per report; the total is always in `failure_count`.
pub const MAX_RECORDED_FAILURES: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Braid,
    Words,
    Compose,
    Xi,
    Theta,
    Spherical,
    Specialize,
    BruhatOracle,
    LengthFormula,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::LengthFormula,
        Suite::BruhatOracle,
        Suite::Braid,
        Suite::Words,
        Suite::Compose,
        Suite::Xi,
        Suite::Theta,
        Suite::Spherical,
        Suite::Specialize,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Braid => "braid",
            Suite::Words => "words",
            Suite::Compose => "compose",
            Suite::Xi => "xi",
            Suite::Theta => "theta",
            Suite::Spherical => "spherical",
            Suite::Specialize => "specialize",
            Suite::BruhatOracle => "bruhat-oracle",
            Suite::LengthFormula => "length-formula",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!(
                    "unknown suite {s:?}; expected one of {} or all",
                    names.join(", ")
                )
            })
    }
}

/// One counterexample: the inputs and both sides of the failed identity.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub input: Value,
    pub left: Value,
    pub right: Value,
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub check_name: String,
    pub instance_count: usize,
    pub failure_count: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check_name,
            "instances": self.instance_count,
            "failure_count": self.failure_count,
            "failures": self.failures.iter().map(|f| json!({
                "input": f.input,
                "left": f.left,
                "right": f.right,
            })).collect::<Vec<_>>(),
            "elapsed_ms": self.elapsed.as_millis() as u64,
        })
    }
}

/// Accumulates instances and failures for one report.
struct Recorder {
    name: String,
    start: Instant,
    instances: usize,
    failure_count: usize,
    failures: Vec<Failure>,
}

impl Recorder {
    fn new(name: impl Into<String>) -> Self {
        Recorder {
            name: name.into(),
            start: Instant::now(),
            instances: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    fn check<T: PartialEq>(&mut self, left: &T, right: &T, describe: impl FnOnce() -> Failure) {
        self.instances += 1;
        if left != right {
            self.failure_count += 1;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            check_name: self.name,
            instance_count: self.instances,
            failure_count: self.failure_count,
            failures: self.failures,
            elapsed: self.start.elapsed(),
        }
    }
}

fn one(group: &AffineWeylGroup, p: u64) -> GroupRingElement {
    GroupRingElement::one(p, group.rank() + 1)
}

fn random_group_ring(rng: &mut ChaCha8Rng, p: u64, width: usize) -> GroupRingElement {
    loop {
        let n = rng.gen_range(1..=3);
        let terms: Vec<(Vec<i64>, i64)> = (0..n)
            .map(|_| {
                let exp = (0..width).map(|_| rng.gen_range(-2..=2)).collect();
                (exp, rng.gen_range(1..p as i64))
            })
            .collect();
        let c = GroupRingElement::from_terms(p, width, terms).expect("valid random coefficient");
        if c.num_terms() > 0 {
            return c;
        }
    }
}

fn random_terms(
    rng: &mut ChaCha8Rng,
    pool: &[&AffineWeylElement],
    p: u64,
    width: usize,
    max_terms: usize,
) -> LinearCombination<AffineWeylElement, GroupRingElement> {
    let n = rng.gen_range(1..=max_terms);
    (0..n)
        .map(|_| {
            let x = pool[rng.gen_range(0..pool.len())].clone();
            (x, random_group_ring(rng, p, width))
        })
        .collect()
}

/// Sum of every class in `classes` with a pseudo-random coefficient, so that
/// collisions under an operator exercise coefficient addition mod `p`.
fn mixed_vector(
    group: &AffineWeylGroup,
    classes: &[&AffineWeylElement],
    p: u64,
    seed: u64,
) -> SchubertVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let width = group.rank() + 1;
    let mut v = SchubertVector::zero();
    for x in classes {
        v.add_class((*x).clone(), random_group_ring(&mut rng, p, width));
    }
    v
}

fn vec_json(group: &AffineWeylGroup, v: &SchubertVector) -> Value {
    schubert_to_json(group, v)
}

/// Alternating braid relations `D_i D_j D_i ... = D_j D_i D_j ...` (`m_ij`
/// factors each) on every class of length at most `class_len`.
pub fn check_braid(module: &KModule<'_>, ball: &Ball, class_len: usize, p: u64) -> CheckReport {
    let group = module.group();
    let mut rec = Recorder::new("braid");
    let classes: Vec<_> = ball.up_to(class_len).collect();
    let mixed = mixed_vector(group, &classes, p, 0xb7a1d);
    for i in 0..group.num_generators() {
        for j in i + 1..group.num_generators() {
            let Some(m) = group.braid_order(i, j) else {
                continue;
            };
            let left: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
            let right: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
            for x in &classes {
                let v = SchubertVector::class((*x).clone(), one(group, p));
                let a = module.demazure_along(&v, &left);
                let b = module.demazure_along(&v, &right);
                rec.check(&a, &b, || Failure {
                    input: json!({"class": element_to_json(group, x), "i": i, "j": j, "m": m}),
                    left: vec_json(group, &a),
                    right: vec_json(group, &b),
                });
            }
            let a = module.demazure_along(&mixed, &left);
            let b = module.demazure_along(&mixed, &right);
            rec.check(&a, &b, || Failure {
                input: json!({"class": "mixed", "i": i, "j": j, "m": m}),
                left: vec_json(group, &a),
                right: vec_json(group, &b),
            });
        }
    }
    rec.finish()
}

/// Every reduced word of every `w` with `l(w) <= word_len` induces the same
/// operator on all classes of length at most `class_len`.
pub fn check_reduced_words(
    module: &KModule<'_>,
    ball: &Ball,
    word_len: usize,
    class_len: usize,
    p: u64,
) -> Result<CheckReport, WeylError> {
    let group = module.group();
    let mut rec = Recorder::new("words");
    let classes: Vec<_> = ball.up_to(class_len).collect();
    let mixed = mixed_vector(group, &classes, p, 0x30d5);
    for w in ball.up_to(word_len) {
        let words = group.all_reduced_words(w, word_len)?;
        let canonical = group.reduced_word(w);
        let reference: Vec<_> = classes
            .iter()
            .map(|x| module.class_along(x, canonical.letters()))
            .collect();
        let mixed_reference = module.demazure_along(&mixed, canonical.letters());
        for word in words.iter().filter(|word| **word != canonical) {
            for (x, expected) in classes.iter().zip(&reference) {
                let v = SchubertVector::class((*x).clone(), one(group, p));
                let got = module.demazure_along(&v, word.letters());
                let want = SchubertVector::class(expected.clone(), one(group, p));
                rec.check(&got, &want, || Failure {
                    input: json!({
                        "class": element_to_json(group, x),
                        "word": word_to_json(word),
                        "canonical": word_to_json(&canonical),
                    }),
                    left: vec_json(group, &got),
                    right: vec_json(group, &want),
                });
            }
            let got = module.demazure_along(&mixed, word.letters());
            rec.check(&got, &mixed_reference, || Failure {
                input: json!({"class": "mixed", "word": word_to_json(word), "canonical": word_to_json(&canonical)}),
                left: vec_json(group, &got),
                right: vec_json(group, &mixed_reference),
            });
        }
    }
    Ok(rec.finish())
}

/// `D_u D_v = D_{uv}` whenever `l(uv) = l(u) + l(v) <= sum_len`, and
/// `D_s D_s = D_s`, as operators on classes of length at most `class_len`.
pub fn check_compose(
    module: &KModule<'_>,
    ball: &Ball,
    sum_len: usize,
    class_len: usize,
    p: u64,
) -> CheckReport {
    let group = module.group();
    let mut rec = Recorder::new("compose");
    let classes: Vec<_> = ball.up_to(class_len).collect();
    let mixed = mixed_vector(group, &classes, p, 0xc0de);
    let words: BTreeMap<&AffineWeylElement, Word> = ball
        .up_to(sum_len)
        .map(|x| (x, group.reduced_word(x)))
        .collect();

    for i in 0..group.num_generators() {
        for x in &classes {
            let v = SchubertVector::class((*x).clone(), one(group, p));
            let once = module.demazure_apply(&v, i);
            let twice = module.demazure_apply(&once, i);
            rec.check(&twice, &once, || Failure {
                input: json!({"class": element_to_json(group, x), "idempotent": i}),
                left: vec_json(group, &twice),
                right: vec_json(group, &once),
            });
        }
        let once = module.demazure_apply(&mixed, i);
        let twice = module.demazure_apply(&once, i);
        rec.check(&twice, &once, || Failure {
            input: json!({"class": "mixed", "idempotent": i}),
            left: vec_json(group, &twice),
            right: vec_json(group, &once),
        });
    }

    for (lu, shell_u) in ball.shells.iter().enumerate().take(sum_len + 1) {
        for u in shell_u {
            for shell_v in ball.shells.iter().take(sum_len - lu + 1) {
                for v in shell_v {
                    let uv = group.mul(u, v);
                    let luv = group.length(&uv);
                    if luv != lu + group.length(v) {
                        continue;
                    }
                    let (wu, wv) = (&words[u], &words[v]);
                    let wuv = group.reduced_word(&uv);
                    let describe = |x: Value, a: &SchubertVector, b: &SchubertVector| Failure {
                        input: json!({"class": x, "u": element_to_json(group, u), "v": element_to_json(group, v)}),
                        left: vec_json(group, a),
                        right: vec_json(group, b),
                    };
                    for x in &classes {
                        let vec = SchubertVector::class((*x).clone(), one(group, p));
                        let a = module.demazure_along(
                            &module.demazure_along(&vec, wu.letters()),
                            wv.letters(),
                        );
                        let b = module.demazure_along(&vec, wuv.letters());
                        rec.check(&a, &b, || describe(element_to_json(group, x), &a, &b));
                    }
                    let a = module
                        .demazure_along(&module.demazure_along(&mixed, wu.letters()), wv.letters());
                    let b = module.demazure_along(&mixed, wuv.letters());
                    rec.check(&a, &b, || describe(json!("mixed"), &a, &b));
                }
            }
        }
    }
    rec.finish()
}

/// `Xi(a * b) = Xi(a) . b`: exhaustively on basis pairs of length at most
/// `max_len` (with non-constant `k[T~]` coefficients), then on `random_pairs`
/// random sparse pairs.
pub fn check_xi(
    module: &KModule<'_>,
    ball: &Ball,
    max_len: usize,
    p: u64,
    random_pairs: usize,
    seed: u64,
) -> CheckReport {
    let group = module.group();
    let width = group.rank() + 1;
    let mut rec = Recorder::new("xi");
    let pool: Vec<_> = ball.up_to(max_len).collect();

    let mut chi_a = vec![0; width];
    chi_a[0] = 1;
    let mut chi_b = vec![0; width];
    chi_b[width - 1] = -1;
    let ca = GroupRingElement::from_terms(p, width, [(chi_a, 1), (vec![0; width], 1)])
        .expect("coefficient");
    let cb = GroupRingElement::monomial(Fp::reduce(p as i64 - 1, p), TorusCharacter(chi_b));

    let run = |rec: &mut Recorder,
               a: &HeckeElement<GroupRingElement>,
               b: &HeckeElement<GroupRingElement>| {
        let left = module.xi_forward(&multiply_hecke(group, a, b).expect("compatible operands"));
        let right = module
            .hecke_act(&module.xi_forward(a), b)
            .expect("compatible operands");
        rec.check(&left, &right, || Failure {
            input: json!({
                "a": hecke_to_json(group, a, HeckeBasis::Y),
                "b": hecke_to_json(group, b, HeckeBasis::Y),
            }),
            left: vec_json(group, &left),
            right: vec_json(group, &right),
        });
    };

    for u in &pool {
        let a = HeckeElement::basis_element(HeckeBasis::Y, (*u).clone(), ca.clone());
        for v in &pool {
            let b = HeckeElement::basis_element(HeckeBasis::Y, (*v).clone(), cb.clone());
            run(&mut rec, &a, &b);
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random_pairs {
        let a = HeckeElement::from_terms(HeckeBasis::Y, random_terms(&mut rng, &pool, p, width, 3));
        let b = HeckeElement::from_terms(HeckeBasis::Y, random_terms(&mut rng, &pool, p, width, 3));
        run(&mut rec, &a, &b);
    }
    rec.finish()
}

fn dominant_box(rs: &RootSystem, bound: i64) -> Vec<Coweight> {
    coweight_box(rs.rank(), 0, bound)
        .into_iter()
        .filter(|c| rs.is_dominant(c))
        .collect()
}

fn antidominant_box(rs: &RootSystem, bound: i64) -> Vec<Coweight> {
    coweight_box(rs.rank(), -bound, 0)
        .into_iter()
        .filter(|c| rs.is_antidominant(c))
        .collect()
}

fn coweight_box(rank: usize, lo: i64, hi: i64) -> Vec<Coweight> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (lo..=hi).map(move |c| {
                    let mut v = prefix.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Coweight).collect()
}

/// `Y_{e^lambda} Y_{e^mu} = Y_{e^{lambda+mu}}` for dominant coweights with
/// coordinates at most `bound`, injectivity of `Theta` on that box, and
/// `Theta(ab) = Theta(a) Theta(b)` on `samples` random monoid-ring pairs.
pub fn check_theta(
    group: &AffineWeylGroup,
    p: u64,
    bound: i64,
    samples: usize,
    seed: u64,
) -> CheckReport {
    let rs = group.root_system();
    let mut rec = Recorder::new("theta");
    let dominant = dominant_box(rs, bound);
    let monomial =
        |l: &Coweight| DominantMonoidElement::monomial(rs, p, l.clone()).expect("dominant");
    let h_json = |h: &HeckeElement<Fp>| hecke_to_json(group, h, HeckeBasis::Y);

    let mut keys = HashSet::new();
    for lambda in &dominant {
        let y = theta_embed(group, &monomial(lambda)).expect("dominant");
        let fresh = keys.insert(y.terms().keys().next().cloned());
        rec.check(&fresh, &true, || Failure {
            input: json!({"lambda": lambda.0, "injective": true}),
            left: h_json(&y),
            right: json!("distinct basis element"),
        });
        for mu in &dominant {
            let ymu = theta_embed(group, &monomial(mu)).expect("dominant");
            let left = multiply_hecke(group, &y, &ymu).expect("compatible");
            let right = theta_embed(group, &monomial(&(lambda + mu))).expect("dominant");
            rec.check(&left, &right, || Failure {
                input: json!({"lambda": lambda.0, "mu": mu.0}),
                left: h_json(&left),
                right: h_json(&right),
            });
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_element = |rng: &mut ChaCha8Rng| {
        let n = rng.gen_range(1..=3);
        let terms: Vec<_> = (0..n)
            .map(|_| {
                (
                    dominant[rng.gen_range(0..dominant.len())].clone(),
                    rng.gen_range(1..p as i64),
                )
            })
            .collect();
        DominantMonoidElement::from_terms(rs, p, terms).expect("dominant keys")
    };
    for _ in 0..samples {
        let a = random_element(&mut rng);
        let b = random_element(&mut rng);
        let left = theta_embed(group, &a.try_mul(&b).expect("same prime")).expect("dominant");
        let right = multiply_hecke(
            group,
            &theta_embed(group, &a).expect("dominant"),
            &theta_embed(group, &b).expect("dominant"),
        )
        .expect("compatible");
        rec.check(&left, &right, || Failure {
            input: json!({"random_pair": true}),
            left: h_json(&left),
            right: h_json(&right),
        });
    }
    rec.finish()
}

/// The Grassmannian pullback on antidominant `lambda_-` with coordinates at
/// least `-bound`: the image is `[O_{S_{e^{lambda_-} w0}}]`, lengths add, and
/// the image is the longest element of its coset.
pub fn check_pullback(module: &KModule<'_>, p: u64, bound: i64) -> CheckReport {
    let group = module.group();
    let rs = group.root_system();
    let mut rec = Recorder::new("pullback");
    let w0 = group.longest_finite_element();
    let finite = group.finite_elements();
    for lambda in antidominant_box(rs, bound) {
        let g = GrassmannianVector::class(rs, &lambda, one(group, p));
        let image = module.grassmannian_pullback(&g).expect("antidominant key");
        let t = group.translation(&lambda).expect("rank");
        let expected_key = group.mul(&t, w0);
        let expected = SchubertVector::class(expected_key.clone(), one(group, p));
        rec.check(&image, &expected, || Failure {
            input: json!({"lambda": lambda.0}),
            left: vec_json(group, &image),
            right: vec_json(group, &expected),
        });
        let lengths = (
            group.length(&expected_key),
            group.length(&t) + group.length(w0),
        );
        rec.check(&lengths.0, &lengths.1, || Failure {
            input: json!({"lambda": lambda.0, "length_additivity": true}),
            left: json!(lengths.0),
            right: json!(lengths.1),
        });
        let longest = finite
            .iter()
            .map(|u| group.length(&group.mul(&t, u)))
            .max()
            .unwrap_or(0);
        rec.check(&lengths.0, &longest, || Failure {
            input: json!({"lambda": lambda.0, "maximal_in_coset": true}),
            left: json!(lengths.0),
            right: json!(longest),
        });
    }
    rec.finish()
}

/// The spherical submodule: `e^lambda -> [O_{S_{w0 e^lambda}}]` is a
/// bijection onto the pulled-back antidominant classes, the `k[Lambda_+]`
/// action composes additively, and it agrees with acting by
/// `Theta(e^lambda)`.
pub fn check_spherical(module: &KModule<'_>, p: u64, bound: i64) -> CheckReport {
    let group = module.group();
    let rs = group.root_system();
    let width = group.rank() + 1;
    let mut rec = Recorder::new("spherical");
    let dominant = dominant_box(rs, bound);

    // bijection between the dominant box and the pullback support
    let mut forward: BTreeMap<AffineWeylElement, Coweight> = BTreeMap::new();
    for lambda in &dominant {
        let key = module.spherical_class(lambda).expect("dominant");
        let clash = forward.insert(key.clone(), lambda.clone());
        rec.check(&clash, &None, || Failure {
            input: json!({"lambda": lambda.0, "injective": true}),
            left: element_to_json(group, &key),
            right: json!("distinct class"),
        });
        let anti = rs.antidominant_in_orbit(lambda);
        let pulled = module
            .grassmannian_pullback(&GrassmannianVector::class(rs, &anti, one(group, p)))
            .expect("antidominant");
        let expected = SchubertVector::class(key.clone(), one(group, p));
        rec.check(&pulled, &expected, || Failure {
            input: json!({"lambda": lambda.0, "pullback": anti.0}),
            left: vec_json(group, &pulled),
            right: vec_json(group, &expected),
        });
    }
    for anti in antidominant_box(rs, bound) {
        let pulled = module
            .grassmannian_pullback(&GrassmannianVector::class(rs, &anti, one(group, p)))
            .expect("antidominant");
        for key in pulled.terms().keys() {
            let label = module.spherical_label(key);
            let expected = Some(rs.dominant_in_orbit(&anti));
            rec.check(&label, &expected, || Failure {
                input: json!({"antidominant": anti.0, "surjective": true}),
                left: json!(label.as_ref().map(|c| c.0.clone())),
                right: json!(expected.as_ref().map(|c| c.0.clone())),
            });
        }
    }

    // action: compose additively and agree with Theta
    let small = dominant_box(rs, 1);
    let coeff = GroupRingElement::from_terms(p, width, [(vec![1; width], 1), (vec![0; width], 1)])
        .expect("coefficient");
    for nu in &small {
        let v = SchubertVector::class(module.spherical_class(nu).expect("dominant"), coeff.clone());
        for lambda in &dominant {
            let acted = module.spherical_act(lambda, &v).expect("spherical");
            let theta = lift_to_group_ring(
                &theta_embed(
                    group,
                    &DominantMonoidElement::monomial(rs, p, lambda.clone()).expect("dominant"),
                )
                .expect("dominant"),
                width,
            );
            let via_hecke = module.hecke_act(&v, &theta).expect("compatible");
            rec.check(&acted, &via_hecke, || Failure {
                input: json!({"nu": nu.0, "lambda": lambda.0, "theta_agreement": true}),
                left: vec_json(group, &acted),
                right: vec_json(group, &via_hecke),
            });
            for mu in &dominant {
                let left = module.spherical_act(mu, &acted).expect("spherical");
                let right = module.spherical_act(&(lambda + mu), &v).expect("spherical");
                rec.check(&left, &right, || Failure {
                    input: json!({"nu": nu.0, "lambda": lambda.0, "mu": mu.0}),
                    left: vec_json(group, &left),
                    right: vec_json(group, &right),
                });
            }
        }
    }
    rec.finish()
}

/// Specialization at `T~ = 1` intertwines the right action, on `samples`
/// random `(v, h)` pairs supported in lengths at most `class_len`, and on
/// single Demazure operators.
pub fn check_specialize(
    module: &KModule<'_>,
    ball: &Ball,
    class_len: usize,
    p: u64,
    samples: usize,
    seed: u64,
) -> CheckReport {
    let group = module.group();
    let width = group.rank() + 1;
    let mut rec = Recorder::new("specialize");
    let pool: Vec<_> = ball.up_to(class_len).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fp_json = |v: &SchubertVector<Fp>| schubert_to_json(group, v);
    for _ in 0..samples {
        let v = SchubertVector::from_terms(random_terms(&mut rng, &pool, p, width, 4));
        let h = HeckeElement::from_terms(HeckeBasis::Y, random_terms(&mut rng, &pool, p, width, 3));
        let i = rng.gen_range(0..group.num_generators());

        let left = module.specialize(&module.hecke_act(&v, &h).expect("compatible"));
        let right = module
            .hecke_act(&module.specialize(&v), &specialize_hecke(&h))
            .expect("compatible");
        rec.check(&left, &right, || Failure {
            input: json!({"v": vec_json(group, &v), "h": hecke_to_json(group, &h, HeckeBasis::Y)}),
            left: fp_json(&left),
            right: fp_json(&right),
        });

        let left = module.specialize(&module.demazure_apply(&v, i));
        let right = module.demazure_apply(&module.specialize(&v), i);
        rec.check(&left, &right, || Failure {
            input: json!({"v": vec_json(group, &v), "i": i}),
            left: fp_json(&left),
            right: fp_json(&right),
        });
    }
    rec.finish()
}

/// Subword oracle for the Bruhat order: every subword product of a reduced
/// word of `w` (2^l(w) of them).
pub fn subword_products(
    group: &AffineWeylGroup,
    w: &AffineWeylElement,
) -> HashSet<AffineWeylElement> {
    let word = group.reduced_word(w);
    let n = word.len();
    let mut out = HashSet::new();
    for mask in 0u64..(1 << n) {
        let mut x = group.identity().clone();
        for (k, &i) in word.letters().iter().enumerate() {
            if mask >> k & 1 == 1 {
                x = group.mul_gen(&x, i);
            }
        }
        out.insert(x);
    }
    out
}

/// Descent-recursion Bruhat order against the subword oracle on all pairs of
/// length at most `max_len`, plus the partial-order axioms.
pub fn check_bruhat_oracle(group: &AffineWeylGroup, ball: &Ball, max_len: usize) -> CheckReport {
    let mut rec = Recorder::new("bruhat-oracle");
    let elems: Vec<_> = ball.up_to(max_len).collect();
    let n = elems.len();
    let mut leq = vec![vec![false; n]; n];
    for (b, w) in elems.iter().enumerate() {
        let below = subword_products(group, w);
        for (a, u) in elems.iter().enumerate() {
            let fast = group.bruhat_leq(u, w);
            let oracle = below.contains(*u);
            leq[a][b] = fast;
            rec.check(&fast, &oracle, || Failure {
                input: json!({"u": element_to_json(group, u), "w": element_to_json(group, w)}),
                left: json!(fast),
                right: json!(oracle),
            });
        }
    }
    for a in 0..n {
        rec.check(&leq[a][a], &true, || Failure {
            input: json!({"reflexive": element_to_json(group, elems[a])}),
            left: json!(false),
            right: json!(true),
        });
        for b in 0..n {
            if a != b && leq[a][b] {
                rec.check(&leq[b][a], &false, || Failure {
                    input: json!({"antisymmetric": [element_to_json(group, elems[a]), element_to_json(group, elems[b])]}),
                    left: json!(true),
                    right: json!(false),
                });
                for c in 0..n {
                    if leq[b][c] {
                        rec.check(&leq[a][c], &true, || Failure {
                            input: json!({"transitive": [
                                element_to_json(group, elems[a]),
                                element_to_json(group, elems[b]),
                                element_to_json(group, elems[c]),
                            ]}),
                            left: json!(false),
                            right: json!(true),
                        });
                    }
                }
            }
        }
    }
    rec.finish()
}

/// `l(e^lambda) = <lambda, 2 rho>` for dominant `lambda` with coordinates at
/// most `bound`, and `l(e^{-lambda} w) = l(w) + l(e^{-lambda})` for `w` in `W0`.
pub fn check_length_formula(group: &AffineWeylGroup, bound: i64) -> CheckReport {
    let rs = group.root_system();
    let mut rec = Recorder::new("length-formula");
    let finite = group.finite_elements();
    for lambda in dominant_box(rs, bound) {
        let t = group.translation(&lambda).expect("rank");
        let counted = group.length(&t) as i64;
        let formula = rs.pairing(&lambda, rs.two_rho()).expect("rank");
        rec.check(&counted, &formula, || Failure {
            input: json!({"lambda": lambda.0}),
            left: json!(counted),
            right: json!(formula),
        });
        let neg = group.translation(&-&lambda).expect("rank");
        let ln = group.length(&neg);
        for w in &finite {
            let left = group.length(&group.mul(&neg, w));
            let right = group.length(w) + ln;
            rec.check(&left, &right, || Failure {
                input: json!({"lambda": lambda.0, "w": element_to_json(group, w)}),
                left: json!(left),
                right: json!(right),
            });
        }
    }
    rec.finish()
}

/// Parameters for [`run_suite`].
#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub cartan_type: CartanType,
    pub prime: u64,
    /// Truncation length `N`.
    pub max_length: usize,
    pub seed: u64,
    /// Random instances for the randomized suites.
    pub samples: usize,
    pub element_limit: usize,
    pub rule: DemazureRule,
}

impl CheckConfig {
    pub fn new(cartan_type: CartanType, prime: u64, max_length: usize) -> Self {
        CheckConfig {
            cartan_type,
            prime,
            max_length,
            seed: 0,
            samples: 1000,
            element_limit: 200_000,
            rule: DemazureRule::Standard,
        }
    }
}

/// Run one suite at the scale given by `cfg`. Operators of length up to
/// `N` are checked on classes of length up to `N + 1` (`N + 2` for the
/// reduced-word suite).
pub fn run_suite(cfg: &CheckConfig, suite: Suite) -> Result<CheckReport, WeylError> {
    let group = AffineWeylGroup::new(RootSystem::new(cfg.cartan_type));
    run_suite_on(&group, cfg, suite)
}

pub fn run_suite_on(
    group: &AffineWeylGroup,
    cfg: &CheckConfig,
    suite: Suite,
) -> Result<CheckReport, WeylError> {
    let n = cfg.max_length;
    let p = cfg.prime;
    let module = KModule::with_rule(group, cfg.rule);
    let ball_len = match suite {
        Suite::Words => n + 2,
        Suite::Braid | Suite::Compose => n + 1,
        _ => n,
    };
    let ball = group.enumerate_ball(ball_len, cfg.element_limit)?;
    Ok(match suite {
        Suite::Braid => check_braid(&module, &ball, n + 1, p),
        Suite::Words => check_reduced_words(&module, &ball, n, n + 2, p)?,
        Suite::Compose => check_compose(&module, &ball, n, n + 1, p),
        Suite::Xi => check_xi(&module, &ball, n, p, cfg.samples, cfg.seed),
        Suite::Theta => check_theta(group, p, 2, cfg.samples.min(200), cfg.seed),
        Suite::Spherical => {
            let mut report = check_spherical(&module, p, 4);
            let pullback = check_pullback(&module, p, 3);
            report.instance_count += pullback.instance_count;
            report.failure_count += pullback.failure_count;
            report.failures.extend(
                pullback
                    .failures
                    .into_iter()
                    .take(MAX_RECORDED_FAILURES.saturating_sub(report.failures.len())),
            );
            report.elapsed += pullback.elapsed;
            report
        }
        Suite::Specialize => check_specialize(&module, &ball, n, p, cfg.samples, cfg.seed),
        Suite::BruhatOracle => check_bruhat_oracle(group, &ball, n),
        Suite::LengthFormula => check_length_formula(group, 3),
    })
}
