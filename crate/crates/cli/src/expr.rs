//! The `compute` expression language.
//!
//! ```text
//! expr     := "mul" elem elem | "len" elem | "word" elem | "bruhat" elem elem
//!           | "hecke-mul" hecke hecke | "theta" monoid
//!           | "demazure" vector ("D" word)* | "act" vector hecke
//!           | "xi" hecke | "xi-inv" vector | "pullback" grass
//!           | "spherical-act" coweight vector | "specialize" vector
//! elem     := atom+                  atoms written without spaces multiply
//! atom     := word | coweight
//! word     := "[" [int ("," int)*] "]"
//! coweight := "e{" int ("," int)* "}"
//! hecke    := hterm (("+" | "-") hterm)*
//! hterm    := [coeff "*"] ("Y" | "Yt") elem
//! vector   := [coeff "*"] "S" elem  (("+" | "-") ...)*
//! grass    := [coeff "*"] "G" coweight  (("+" | "-") ...)*
//! monoid   := [int "*"] coweight  (("+" | "-") ...)*
//! coeff    := "(" mono (("+" | "-") mono)* ")" | mono
//! mono     := int ["t{" int ("," int)* "}"] | "t{" int ("," int)* "}"
//! ```
//!
//! `hecke-mul` and `theta` work over `GF(p)`, so their coefficients are plain
//! integers. Everything touching Schubert classes uses `k[T~]`, where
//! `t{a0,...,al}` is the character with those exponents. Operators act on the
//! right: `demazure S[0] D[1] D[0]` is `[S_{s0}] . D_1 . D_0`.

use affhecke::coeffs::{Coefficient, DominantMonoidElement, Fp, GroupRingElement, TorusCharacter};
use affhecke::hecke::{multiply_hecke, theta_embed, HeckeBasis, HeckeElement};
use affhecke::kmodule::{GrassmannianVector, KModule, SchubertVector};
use affhecke::serial::{element_to_json, hecke_to_json, schubert_to_json, word_to_json};
use affhecke::{AffineWeylElement, AffineWeylGroup, Coweight, Word};
use serde_json::{json, Value};

use crate::error::CliError;

/// Parse and evaluate `input` against `group` with coefficients mod `prime`.
pub fn evaluate(group: &AffineWeylGroup, prime: u64, input: &str) -> Result<Value, CliError> {
    let mut p = Parser {
        src: input,
        pos: 0,
        group,
        prime,
    };
    let value = p.command()?;
    p.skip_ws();
    if p.pos < input.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    group: &'a AffineWeylGroup,
    prime: u64,
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> CliError {
        self.error_at(self.pos, message)
    }

    fn error_at(&self, position: usize, message: impl Into<String>) -> CliError {
        CliError::Parse {
            input: self.src.to_string(),
            position,
            message: message.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), CliError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected {token:?}")))
        }
    }

    fn width(&self) -> usize {
        self.group.rank() + 1
    }

    fn command(&mut self) -> Result<Value, CliError> {
        self.skip_ws();
        let start = self.pos;
        let name: String = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_lowercase() || *c == '-')
            .collect();
        self.pos += name.len();
        let g = self.group;
        let module = KModule::new(g);
        match name.as_str() {
            "mul" => {
                let x = self.arg_elem()?;
                let y = self.arg_elem()?;
                Ok(element_to_json(g, &g.mul(&x, &y)))
            }
            "len" => {
                let x = self.arg_elem()?;
                Ok(json!(g.length(&x)))
            }
            "word" => {
                let x = self.arg_elem()?;
                Ok(word_to_json(&g.reduced_word(&x)))
            }
            "bruhat" => {
                let x = self.arg_elem()?;
                let y = self.arg_elem()?;
                Ok(json!(g.bruhat_leq(&x, &y)))
            }
            "hecke-mul" => {
                let a = self.hecke(Self::fp_coeff)?;
                let b = self.hecke(Self::fp_coeff)?;
                let basis = a.basis();
                let product = multiply_hecke(g, &a, &b).map_err(domain)?;
                Ok(json!({"basis": basis.label(), "terms": hecke_to_json(g, &product, basis)}))
            }
            "theta" => {
                let a = self.monoid()?;
                let h = theta_embed(g, &a).map_err(domain)?;
                Ok(json!({"basis": "Y", "terms": hecke_to_json(g, &h, HeckeBasis::Y)}))
            }
            "demazure" => {
                let mut v = self.vector()?;
                loop {
                    self.skip_ws();
                    if !self.eat("D") {
                        break;
                    }
                    let word = self.word()?;
                    v = module.demazure_along(&v, word.letters());
                }
                Ok(schubert_to_json(g, &v))
            }
            "act" => {
                let v = self.vector()?;
                let h = self.hecke(Self::group_coeff)?;
                Ok(schubert_to_json(
                    g,
                    &module.hecke_act(&v, &h).map_err(domain)?,
                ))
            }
            "xi" => {
                let h = self.hecke(Self::group_coeff)?;
                Ok(schubert_to_json(g, &module.xi_forward(&h)))
            }
            "xi-inv" => {
                let v = self.vector()?;
                let h = module.xi_inverse(&v);
                Ok(json!({"basis": "Y", "terms": hecke_to_json(g, &h, HeckeBasis::Y)}))
            }
            "pullback" => {
                let gv = self.grass()?;
                Ok(schubert_to_json(
                    g,
                    &module.grassmannian_pullback(&gv).map_err(domain)?,
                ))
            }
            "spherical-act" => {
                self.skip_ws();
                let lambda = self.coweight()?;
                let v = self.vector()?;
                Ok(schubert_to_json(
                    g,
                    &module.spherical_act(&lambda, &v).map_err(domain)?,
                ))
            }
            "specialize" => {
                let v = self.vector()?;
                Ok(schubert_to_json(g, &module.specialize(&v)))
            }
            "" => Err(self.error_at(start, "expected a command")),
            other => Err(self.error_at(start, format!("unknown command {other:?}"))),
        }
    }

    fn arg_elem(&mut self) -> Result<AffineWeylElement, CliError> {
        self.skip_ws();
        self.elem()
    }

    fn int(&mut self) -> Result<i64, CliError> {
        let start = self.pos;
        let sign = if self.eat("-") { -1 } else { 1 };
        let digits: String = self
            .rest()
            .chars()
            .take_while(char::is_ascii_digit)
            .collect();
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        self.pos += digits.len();
        digits
            .parse::<i64>()
            .map(|n| sign * n)
            .map_err(|_| self.error_at(start, "integer out of range"))
    }

    fn int_list(&mut self, close: &str) -> Result<Vec<i64>, CliError> {
        let mut out = Vec::new();
        self.skip_ws();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            self.skip_ws();
            out.push(self.int()?);
            self.skip_ws();
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    fn word(&mut self) -> Result<Word, CliError> {
        let start = self.pos;
        self.expect("[")?;
        let letters = self.int_list("]")?;
        let max = self.group.num_generators();
        let word = letters
            .into_iter()
            .map(|i| usize::try_from(i).ok().filter(|&i| i < max))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| {
                self.error_at(start, format!("generator indices must lie in 0..{max}"))
            })?;
        Ok(Word(word))
    }

    fn coweight(&mut self) -> Result<Coweight, CliError> {
        let start = self.pos;
        self.expect("e{")?;
        let coords = self.int_list("}")?;
        if coords.len() != self.group.rank() {
            return Err(self.error_at(
                start,
                format!(
                    "coweight needs {} coordinates, got {}",
                    self.group.rank(),
                    coords.len()
                ),
            ));
        }
        Ok(Coweight(coords))
    }

    fn elem(&mut self) -> Result<AffineWeylElement, CliError> {
        let g = self.group;
        let mut x: Option<AffineWeylElement> = None;
        loop {
            let atom = if self.rest().starts_with('[') {
                let word = self.word()?;
                g.word_product(&word).map_err(domain)?
            } else if self.rest().starts_with("e{") {
                let lambda = self.coweight()?;
                g.translation(&lambda).map_err(domain)?
            } else {
                break;
            };
            x = Some(match x {
                Some(prev) => g.mul(&prev, &atom),
                None => atom,
            });
        }
        x.ok_or_else(|| self.error("expected an element such as [0,1] or e{1,0}"))
    }

    fn fp_coeff(&mut self) -> Result<Option<Fp>, CliError> {
        if !self.rest().starts_with(|c: char| c.is_ascii_digit()) {
            return Ok(None);
        }
        let start = self.pos;
        let n = self.int()?;
        if self.rest().starts_with("t{") {
            return Err(
                self.error("torus characters are not allowed here; coefficients lie in GF(p)")
            );
        }
        Fp::new(n, self.prime)
            .map(Some)
            .map_err(|e| self.error_at(start, e.to_string()))
    }

    fn monomial(&mut self) -> Result<GroupRingElement, CliError> {
        let start = self.pos;
        let n = if self.rest().starts_with(|c: char| c.is_ascii_digit()) {
            self.int()?
        } else {
            1
        };
        let c = Fp::new(n, self.prime).map_err(|e| self.error_at(start, e.to_string()))?;
        if self.eat("t{") {
            let exps = self.int_list("}")?;
            if exps.len() != self.width() {
                return Err(self.error_at(
                    start,
                    format!("torus character needs {} exponents", self.width()),
                ));
            }
            Ok(GroupRingElement::monomial(c, TorusCharacter(exps)))
        } else if self.pos == start {
            Err(self.error("expected a coefficient"))
        } else {
            Ok(GroupRingElement::constant(c, self.width()))
        }
    }

    fn group_coeff(&mut self) -> Result<Option<GroupRingElement>, CliError> {
        if self.eat("(") {
            let mut sum = GroupRingElement::zero(self.prime, self.width());
            let mut negative = false;
            loop {
                self.skip_ws();
                let m = self.monomial()?;
                sum = sum.plus(&if negative { m.negated() } else { m });
                self.skip_ws();
                if self.eat(")") {
                    return Ok(Some(sum));
                }
                negative = if self.eat("+") {
                    false
                } else if self.eat("-") {
                    true
                } else {
                    return Err(self.error("expected \"+\", \"-\" or \")\""));
                };
            }
        }
        if self.rest().starts_with(|c: char| c.is_ascii_digit()) || self.rest().starts_with("t{") {
            return self.monomial().map(Some);
        }
        Ok(None)
    }

    /// A signed sum of `[coeff "*"] body` terms, where a missing coefficient
    /// is one.
    fn sum<C: Coefficient, T>(
        &mut self,
        mut coeff: impl FnMut(&mut Self) -> Result<Option<C>, CliError>,
        unit: C,
        mut body: impl FnMut(&mut Self) -> Result<T, CliError>,
    ) -> Result<Vec<(T, C)>, CliError> {
        let mut out = Vec::new();
        self.skip_ws();
        let mut negative = self.eat("-");
        loop {
            self.skip_ws();
            let c = match coeff(self)? {
                Some(c) => {
                    self.skip_ws();
                    self.expect("*")?;
                    self.skip_ws();
                    c
                }
                None => unit.clone(),
            };
            let t = body(self)?;
            out.push((t, if negative { c.negated() } else { c }));
            let save = self.pos;
            self.skip_ws();
            negative = if self.eat("+") {
                false
            } else if self.eat("-") {
                true
            } else {
                self.pos = save;
                return Ok(out);
            };
        }
    }

    fn hecke<C: Coefficient>(
        &mut self,
        coeff: impl FnMut(&mut Self) -> Result<Option<C>, CliError>,
    ) -> Result<HeckeElement<C>, CliError>
    where
        Self: UnitFor<C>,
    {
        let unit = self.unit();
        let mut basis: Option<HeckeBasis> = None;
        let terms = self.sum(coeff, unit, |p| {
            let start = p.pos;
            let b = if p.eat("Yt") {
                HeckeBasis::YTilde
            } else if p.eat("Y") {
                HeckeBasis::Y
            } else {
                return Err(p.error("expected a Hecke term such as Y[0] or Yt[1,0]"));
            };
            if basis.is_some_and(|prev| prev != b) {
                return Err(p.error_at(start, "cannot mix Y and Yt terms in one element"));
            }
            basis = Some(b);
            p.skip_ws();
            p.elem()
        })?;
        let basis = basis.expect("at least one term");
        Ok(HeckeElement::from_terms(basis, terms.into_iter().collect()))
    }

    fn vector(&mut self) -> Result<SchubertVector, CliError> {
        let unit = GroupRingElement::one(self.prime, self.width());
        let terms = self.sum(Self::group_coeff, unit, |p| {
            p.expect("S")?;
            p.skip_ws();
            p.elem()
        })?;
        Ok(SchubertVector::from_terms(terms.into_iter().collect()))
    }

    fn grass(&mut self) -> Result<GrassmannianVector, CliError> {
        let unit = GroupRingElement::one(self.prime, self.width());
        let terms = self.sum(Self::group_coeff, unit, |p| {
            p.expect("G")?;
            p.skip_ws();
            p.coweight()
        })?;
        let rs = self.group.root_system();
        let mut out = GrassmannianVector::zero();
        for (lambda, c) in terms {
            out.add_class(rs, &lambda, c);
        }
        Ok(out)
    }

    fn monoid(&mut self) -> Result<DominantMonoidElement, CliError> {
        let start = self.pos;
        let terms = self.sum(Self::fp_coeff, Fp::one(self.prime), Self::coweight)?;
        let rs = self.group.root_system();
        if let Some((lambda, _)) = terms.iter().find(|(l, _)| !rs.is_dominant(l)) {
            return Err(CliError::Domain(format!(
                "theta needs dominant coweights; {lambda} is not dominant (column {})",
                start + 1
            )));
        }
        let terms = terms.into_iter().map(|(l, c)| (l, c.residue() as i64));
        DominantMonoidElement::from_terms(rs, self.prime, terms).map_err(domain)
    }
}

trait UnitFor<C> {
    fn unit(&self) -> C;
}

impl UnitFor<Fp> for Parser<'_> {
    fn unit(&self) -> Fp {
        Fp::one(self.prime)
    }
}

impl UnitFor<GroupRingElement> for Parser<'_> {
    fn unit(&self) -> GroupRingElement {
        GroupRingElement::one(self.prime, self.width())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use affhecke::RootSystem;

    fn group(t: &str) -> AffineWeylGroup {
        AffineWeylGroup::new(RootSystem::new(t.parse().unwrap()))
    }

    fn eval(t: &str, input: &str) -> Value {
        evaluate(&group(t), 3, input).unwrap_or_else(|e| panic!("{input}: {e}"))
    }

    #[test]
    fn element_queries() {
        assert_eq!(eval("A1", "len [0,1]"), json!(2));
        assert_eq!(eval("A1", "bruhat [0] [0,1]"), json!(true));
        assert_eq!(eval("A1", "bruhat [1,0] [0,1]"), json!(false));
        assert_eq!(eval("A1", "word [1,0,0]"), json!([1]));
        assert_eq!(eval("A1", "len e{1}"), json!(2));
        assert_eq!(eval("A2", "len e{1,1}"), json!(4));
        assert_eq!(
            eval("A1", "mul [0] [0]"),
            json!({"lambda": [0], "word": []})
        );
        assert_eq!(eval("A2", "len e{-1,-1}[1]"), json!(5));
    }

    #[test]
    fn hecke_products() {
        let y0 = eval("A1", "hecke-mul Y[0] Y[]");
        assert_eq!(eval("A1", "hecke-mul Y[0] Y[0]"), y0);
        let yt = eval("A1", "hecke-mul Yt[0] Yt[0]");
        assert_eq!(yt["basis"], json!("Yt"));
        assert_eq!(yt["terms"][0]["coeff"], json!(2));
        let sum = eval("A1", "hecke-mul Y[0] + 2*Y[1] Y[0]");
        assert_eq!(sum["terms"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn module_commands() {
        let v = eval("A1", "demazure S[0] D[0]");
        assert_eq!(v, eval("A1", "xi Y[0]"));
        let raised = eval("A1", "demazure S[0] D[1] D[0]");
        assert_eq!(raised, eval("A1", "xi Y[0,1,0]"));
        let with_t = eval("A1", "act (1 + t{1,0})*S[] Y[0]");
        assert_eq!(with_t[0]["coeff"].as_array().unwrap().len(), 2);
        assert_eq!(
            eval("A1", "specialize (1 + t{1,0})*S[]")[0]["coeff"],
            json!(2)
        );
        let pulled = eval("A2", "pullback G e{-1,0}");
        assert_eq!(pulled.as_array().unwrap().len(), 1);
        assert_eq!(
            eval("A2", "theta e{1,1}")["terms"][0]["elem"]["lambda"],
            json!([1, 1])
        );
        assert_eq!(
            eval("A1", "spherical-act e{1} S[1]"),
            eval("A1", "pullback G e{-1}")
        );
    }

    #[test]
    fn errors_carry_positions() {
        let g = group("A1");
        match evaluate(&g, 3, "len [0,5]") {
            Err(CliError::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
        match evaluate(&g, 3, "frobnicate [0]") {
            Err(CliError::Parse { position, .. }) => assert_eq!(position, 0),
            other => panic!("{other:?}"),
        }
        match evaluate(&g, 3, "len [0] junk") {
            Err(CliError::Parse { position, .. }) => assert_eq!(position, 8),
            other => panic!("{other:?}"),
        }
        let msg = evaluate(&group("A2"), 3, "theta e{-1,0}")
            .unwrap_err()
            .to_string();
        assert!(msg.contains("dominant"), "{msg}");
        assert!(evaluate(&g, 3, "hecke-mul 2t{1,0}*Y[0] Y[0]").is_err());
    }
}
