//! Regular expressions extended with multitilde nodes.
//!
//! Concrete syntax:
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor+                      (catenation by juxtaposition)
//! factor := atom '*'*
//! atom   := '0' | '1' | letter | '(' expr ')' | '~' '{' '[' pairs ']' '}' '(' expr,... ')'
//! ```
//!
//! `0` is the empty language, `1` the empty word, letters are single
//! alphanumerics, `*` binds tightest, then juxtaposition, then `+`, and the
//! binary operators associate to the left. Whitespace is ignored. A tilde
//! literal looks like `~{[(1,2),(2,3)]}(a,b,c)`; its arity is the number of
//! argument expressions.

use crate::error::{Error, Result};
use crate::lang::{act_tilde, FiniteLanguage, Word};
use crate::tilde::{Multitilde, Pair};

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

/// Expression tree over the empty language, the empty word, letters, sum,
/// catenation, star, and multitilde application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Emtre {
    Empty,
    Epsilon,
    Letter(String),
    Sum(Box<Emtre>, Box<Emtre>),
    Cat(Box<Emtre>, Box<Emtre>),
    Star(Box<Emtre>),
    Tilde(Multitilde, Vec<Emtre>),
}

/// Parses the concrete syntax above.
pub fn parse(input: &str) -> Result<Emtre> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, expected: u8) -> Result<()> {
        if self.peek() == Some(expected) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", expected as char)))
        }
    }

    fn expr(&mut self) -> Result<Emtre> {
        let mut e = self.term()?;
        while self.peek() == Some(b'+') {
            self.pos += 1;
            let rhs = self.term()?;
            e = Emtre::Sum(Box::new(e), Box::new(rhs));
        }
        Ok(e)
    }

    fn term(&mut self) -> Result<Emtre> {
        let mut e = self.factor()?;
        while self.peek().is_some_and(starts_atom) {
            let rhs = self.factor()?;
            e = Emtre::Cat(Box::new(e), Box::new(rhs));
        }
        Ok(e)
    }

    fn factor(&mut self) -> Result<Emtre> {
        let mut e = self.atom()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            e = Emtre::Star(Box::new(e));
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Emtre> {
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok(Emtre::Empty)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Emtre::Epsilon)
            }
            Some(c) if c.is_ascii_alphanumeric() => {
                self.pos += 1;
                Ok(Emtre::Letter((c as char).to_string()))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.eat(b')')?;
                Ok(e)
            }
            Some(b'~') => {
                self.pos += 1;
                self.tilde_literal()
            }
            _ => Err(self.error("expected an atom")),
        }
    }

    fn tilde_literal(&mut self) -> Result<Emtre> {
        self.eat(b'{')?;
        self.eat(b'[')?;
        let mut pairs = Vec::new();
        if self.peek() != Some(b']') {
            loop {
                pairs.push(self.pair_literal()?);
                if self.peek() == Some(b',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.eat(b']')?;
        self.eat(b'}')?;
        self.eat(b'(')?;
        let mut children = vec![self.expr()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            children.push(self.expr()?);
        }
        self.eat(b')')?;
        let tilde = Multitilde::new(children.len(), pairs)?;
        Ok(Emtre::Tilde(tilde, children))
    }

    fn pair_literal(&mut self) -> Result<Pair> {
        self.eat(b'(')?;
        let x = self.number()?;
        self.eat(b',')?;
        let y = self.number()?;
        self.eat(b')')?;
        Pair::new(x, y)
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.error("number out of range"))
    }
}

fn starts_atom(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'(' || c == b'~'
}

/// The words of the denoted language with length at most `max_len` —
/// exactly those, with the star iterated until no new short word appears.
/// For star-free input with a generous bound this is the full language.
pub fn eval_emtre(e: &Emtre, max_len: usize) -> Result<FiniteLanguage> {
    match e {
        Emtre::Empty => Ok(FiniteLanguage::empty()),
        Emtre::Epsilon => Ok(FiniteLanguage::epsilon()),
        Emtre::Letter(s) => Ok(FiniteLanguage::letter(s)?.truncate(max_len)),
        Emtre::Sum(l, r) => Ok(eval_emtre(l, max_len)?.union(&eval_emtre(r, max_len)?)),
        Emtre::Cat(l, r) => Ok(eval_emtre(l, max_len)?
            .catenate(&eval_emtre(r, max_len)?)
            .truncate(max_len)),
        Emtre::Star(f) => Ok(eval_emtre(f, max_len)?.star_bounded(max_len)),
        Emtre::Tilde(t, children) => {
            let langs: Vec<FiniteLanguage> = children
                .iter()
                .map(|c| eval_emtre(c, max_len))
                .collect::<Result<_>>()?;
            Ok(act_tilde(t, &langs)?.truncate(max_len))
        }
    }
}

/// A star-free expression reduced to one multitilde applied to a tuple of
/// letters and empty-language placeholders.
///
/// Serializes as `{"tilde": ..., "leaves": ["a", null, "b"]}` with `null`
/// standing for the empty language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompiledTilde {
    tilde: Multitilde,
    leaves: Vec<FiniteLanguage>,
}

impl CompiledTilde {
    pub fn new(tilde: Multitilde, leaves: Vec<FiniteLanguage>) -> Result<Self> {
        if leaves.len() != tilde.arity() {
            return Err(Error::ArityMismatch {
                expected: tilde.arity(),
                found: leaves.len(),
            });
        }
        for leaf in &leaves {
            if !is_sigma_zero(leaf) {
                return Err(Error::InvalidLeaf);
            }
        }
        Ok(CompiledTilde { tilde, leaves })
    }

    pub fn tilde(&self) -> &Multitilde {
        &self.tilde
    }

    pub fn leaves(&self) -> &[FiniteLanguage] {
        &self.leaves
    }

    /// The denoted language: the tilde applied to the leaves.
    pub fn language(&self) -> FiniteLanguage {
        act_tilde(&self.tilde, &self.leaves).expect("arity matches by construction")
    }
}

fn is_sigma_zero(l: &FiniteLanguage) -> bool {
    l.is_empty() || (l.len() == 1 && l.words().next().is_some_and(|w| w.len() == 1))
}

fn leaf_symbol(l: &FiniteLanguage) -> Option<&str> {
    l.words().next().map(|w| w.symbols()[0].as_str())
}

impl Serialize for CompiledTilde {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CompiledTilde", 2)?;
        s.serialize_field("tilde", &self.tilde)?;
        let leaves: Vec<Option<&str>> = self.leaves.iter().map(leaf_symbol).collect();
        s.serialize_field("leaves", &leaves)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for CompiledTilde {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        struct Raw {
            tilde: Multitilde,
            leaves: Vec<Option<String>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let leaves = raw
            .leaves
            .into_iter()
            .map(|l| match l {
                None => Ok(FiniteLanguage::empty()),
                Some(s) => Word::new([s]).map(|w| FiniteLanguage::from_words([w])),
            })
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        CompiledTilde::new(raw.tilde, leaves).map_err(D::Error::custom)
    }
}

/// Reduces a star-free expression to a single multitilde over letter/empty
/// leaves:
///
/// * `0`, `1`, `a` map to unary operators with leaves `∅`, `∅`, `{a}`;
/// * a sum plugs its operands and an `∅` spacer into the three slots of
///   `~{[(1,2),(2,3)]}`;
/// * a catenation plugs its operands into the empty binary operator;
/// * a tilde node plugs its compiled children into itself.
///
/// A star anywhere is an error.
pub fn compile_star_free(e: &Emtre) -> Result<CompiledTilde> {
    match e {
        Emtre::Empty => CompiledTilde::new(Multitilde::new(1, [])?, vec![FiniteLanguage::empty()]),
        Emtre::Epsilon => CompiledTilde::new(
            Multitilde::new(1, [Pair::new(1, 1)?])?,
            vec![FiniteLanguage::empty()],
        ),
        Emtre::Letter(s) => {
            CompiledTilde::new(Multitilde::new(1, [])?, vec![FiniteLanguage::letter(s)?])
        }
        Emtre::Sum(l, r) => {
            let cl = compile_star_free(l)?;
            let cr = compile_star_free(r)?;
            let spacer = compile_star_free(&Emtre::Empty)?;
            let shell = Multitilde::new(3, [Pair::new(1, 2)?, Pair::new(2, 3)?])?;
            assemble(shell, vec![cl, spacer, cr])
        }
        Emtre::Cat(l, r) => {
            let cl = compile_star_free(l)?;
            let cr = compile_star_free(r)?;
            let shell = Multitilde::new(2, [])?;
            assemble(shell, vec![cl, cr])
        }
        Emtre::Star(_) => Err(Error::StarNotSupported),
        Emtre::Tilde(t, children) => {
            let compiled: Vec<CompiledTilde> = children
                .iter()
                .map(compile_star_free)
                .collect::<Result<_>>()?;
            assemble(t.clone(), compiled)
        }
    }
}

fn assemble(shell: Multitilde, parts: Vec<CompiledTilde>) -> Result<CompiledTilde> {
    let tildes: Vec<Multitilde> = parts.iter().map(|c| c.tilde.clone()).collect();
    let tilde = shell.compose_full(&tildes)?;
    let leaves: Vec<FiniteLanguage> = parts.into_iter().flat_map(|c| c.leaves).collect();
    CompiledTilde::new(tilde, leaves)
}
