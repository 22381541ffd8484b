//! Inverse monoid presentations, the special-presentation predicate, maximal
//! group image extraction, and the named example presentations used by the
//! experiment suites.
//!
//! Relations are stored exactly as written, unreduced: Stephen's procedure
//! reads them letter by letter, so rewriting them would change the runs (not
//! the limit).

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::words::{free_reduce, invert, Alphabet, Letter, Word, WordParseError};

/// An inverse monoid presentation `Inv⟨X | u_i = v_i⟩`.
///
/// `e_unitary_asserted` is a user-supplied flag, never verified: there is no
/// general decision procedure. [`one_relator_cyclically_reduced`] gives a
/// sufficient-condition hint for the common one-relator special case.
#[derive(Clone, Debug)]
pub struct Presentation {
    alphabet: Alphabet,
    relations: Vec<(Word, Word)>,
    pub e_unitary_asserted: bool,
}

/// A group presentation `Gp⟨X | r_i = 1⟩` (relators only).
#[derive(Clone, Debug)]
pub struct GroupPresentation {
    pub alphabet: Alphabet,
    pub relators: Vec<Word>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("relation uses {0}")]
    BadRelationWord(WordParseError),
    #[error("fixture parameter out of range: {0}")]
    BadParameter(String),
    #[error("generator name clash: `{0}`")]
    NameClash(String),
}

impl Presentation {
    pub fn new(names: Vec<String>, relations: Vec<(Word, Word)>, e_unitary_asserted: bool) -> Self {
        let alphabet = Alphabet::new(names);
        for (l, r) in &relations {
            for letter in l.letters().iter().chain(r.letters()) {
                assert!(
                    (letter.gen as usize) < alphabet.size(),
                    "relation letter outside alphabet"
                );
            }
        }
        Presentation {
            alphabet,
            relations,
            e_unitary_asserted,
        }
    }

    /// Free inverse monoid of the given rank (no relations). Free inverse
    /// monoids are E-unitary, so the flag is set.
    pub fn free_inverse(rank: usize) -> Self {
        let names = default_names(rank);
        Presentation::new(names, Vec::new(), true)
    }

    /// The bicyclic monoid `Inv⟨a | a a⁻¹ = 1⟩` (E-unitary, over the integers).
    pub fn bicyclic() -> Self {
        let a = Alphabet::new(vec!["a".into()]);
        let rel = a.parse_word("a a^-1").unwrap();
        Presentation::new(vec!["a".into()], vec![(rel, Word::empty())], true)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn generator_count(&self) -> usize {
        self.alphabet.size()
    }

    pub fn relations(&self) -> &[(Word, Word)] {
        &self.relations
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, WordParseError> {
        self.alphabet.parse_word(text)
    }

    /// True iff every relation has one side equal to the empty word.
    pub fn is_special(&self) -> bool {
        self.relations
            .iter()
            .all(|(l, r)| l.is_empty() || r.is_empty())
    }

    /// The nonempty sides of the relations of a special presentation.
    pub fn relators(&self) -> Vec<Word> {
        self.relations
            .iter()
            .map(|(l, r)| if r.is_empty() { l.clone() } else { r.clone() })
            .collect()
    }

    /// Maximal group image: same generators, one relator `u·v⁻¹` per relation
    /// `u = v` (kept unreduced).
    pub fn group_image(&self) -> GroupPresentation {
        GroupPresentation {
            alphabet: self.alphabet.clone(),
            relators: self
                .relations
                .iter()
                .map(|(l, r)| l.concat(&invert(r)))
                .collect(),
        }
    }

    /// Split the generators into those occurring (in either sign) in some
    /// relation and the rest.
    pub fn split_generators(&self) -> (BTreeSet<u16>, BTreeSet<u16>) {
        let mut occurring = BTreeSet::new();
        for (l, r) in &self.relations {
            for letter in l.letters().iter().chain(r.letters()) {
                occurring.insert(letter.gen);
            }
        }
        let rest = (0..self.alphabet.size() as u16)
            .filter(|g| !occurring.contains(g))
            .collect();
        (occurring, rest)
    }

    /// Render in the text format accepted by [`parse_presentation`].
    pub fn print(&self) -> String {
        let mut out = String::new();
        out.push_str("gens:");
        for n in self.alphabet.names() {
            let _ = write!(out, " {}", n);
        }
        out.push_str(" ;\n");
        if !self.relations.is_empty() {
            out.push_str("rels: ");
            let rels: Vec<String> = self
                .relations
                .iter()
                .map(|(l, r)| {
                    format!(
                        "{} = {}",
                        self.alphabet.format_word(l),
                        self.alphabet.format_word(r)
                    )
                })
                .collect();
            out.push_str(&rels.join(" , "));
            out.push_str(" ;\n");
        }
        if self.e_unitary_asserted {
            out.push_str("flags: e_unitary ;\n");
        }
        out
    }
}

fn default_names(rank: usize) -> Vec<String> {
    const BASE: [&str; 6] = ["a", "b", "c", "d", "x", "y"];
    (0..rank)
        .map(|i| {
            if i < BASE.len() {
                BASE[i].to_string()
            } else {
                format!("g{}", i)
            }
        })
        .collect()
}

/// Parse the presentation file format:
///
/// ```text
/// # comment
/// gens: a b ;
/// rels: a b a^-1 b^-1 = 1 , a a^-1 = 1 ;
/// flags: e_unitary ;
/// ```
pub fn parse_presentation(text: &str) -> Result<Presentation, PresentationError> {
    let mut names: Option<Vec<String>> = None;
    let mut relations: Vec<(Word, Word)> = Vec::new();
    let mut e_unitary = false;

    // Strip comments, keep (line, col) positions of statement starts.
    let mut statements: Vec<(usize, usize, String)> = Vec::new();
    let mut cur = String::new();
    let mut cur_pos: Option<(usize, usize)> = None;
    for (ln, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        for (cn, ch) in line.chars().enumerate() {
            if ch == ';' {
                let (l, c) = cur_pos.unwrap_or((ln + 1, cn + 1));
                statements.push((l, c, std::mem::take(&mut cur)));
                cur_pos = None;
            } else {
                if cur_pos.is_none() && !ch.is_whitespace() {
                    cur_pos = Some((ln + 1, cn + 1));
                }
                cur.push(ch);
            }
        }
        cur.push(' ');
    }
    if !cur.trim().is_empty() {
        let (l, c) = cur_pos.unwrap_or((1, 1));
        return Err(PresentationError::Syntax {
            line: l,
            col: c,
            msg: "statement not terminated by `;`".into(),
        });
    }

    for (line, col, stmt) in statements {
        let stmt = stmt.trim();
        if stmt.is_empty() {
            continue;
        }
        let syntax = |msg: &str| PresentationError::Syntax {
            line,
            col,
            msg: msg.to_string(),
        };
        let (head, body) = stmt
            .split_once(':')
            .ok_or_else(|| syntax("expected `gens:`, `rels:` or `flags:`"))?;
        match head.trim() {
            "gens" => {
                let mut v = Vec::new();
                for tok in body.split_whitespace() {
                    if !tok
                        .chars()
                        .next()
                        .map(|c| c.is_ascii_alphabetic())
                        .unwrap_or(false)
                        || !tok.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                    {
                        return Err(syntax(&format!("bad generator name `{}`", tok)));
                    }
                    if v.contains(&tok.to_string()) {
                        return Err(syntax(&format!("duplicate generator `{}`", tok)));
                    }
                    v.push(tok.to_string());
                }
                names = Some(v);
            }
            "rels" => {
                let alphabet =
                    Alphabet::new(names.clone().ok_or_else(|| syntax("rels before gens"))?);
                for rel in body.split(',') {
                    let rel = rel.trim();
                    if rel.is_empty() {
                        continue;
                    }
                    let (lhs, rhs) = rel
                        .split_once('=')
                        .ok_or_else(|| syntax(&format!("relation `{}` lacks `=`", rel)))?;
                    let l = alphabet
                        .parse_word(lhs)
                        .map_err(PresentationError::BadRelationWord)?;
                    let r = alphabet
                        .parse_word(rhs)
                        .map_err(PresentationError::BadRelationWord)?;
                    relations.push((l, r));
                }
            }
            "flags" => {
                for tok in body.split_whitespace() {
                    match tok {
                        "e_unitary" => e_unitary = true,
                        other => return Err(syntax(&format!("unknown flag `{}`", other))),
                    }
                }
            }
            other => return Err(syntax(&format!("unknown section `{}`", other))),
        }
    }

    let names = names.ok_or(PresentationError::Syntax {
        line: 1,
        col: 1,
        msg: "missing gens section".into(),
    })?;
    Ok(Presentation::new(names, relations, e_unitary))
}

/// One-relator monoid `Inv⟨a,b,c,d | b c b⁻¹ a d⁻¹ a⁻¹ c⁻¹ c d⁻¹ d = 1⟩`.
///
/// Its maximal group image is free of rank 3 (on `a`, `b` and `u = bcb⁻¹`,
/// with `c = b⁻¹ub` and `d = a⁻¹ua`), yet Schützenberger graph distances
/// outgrow group distances without bound: the vertex pairs
/// `(u⁻ᵏb, u⁻ᵏa)` sit at graph distance `2k + 2` but group distance `2`.
/// E-unitarity holds because the relator reduces to a cyclically reduced
/// word; the flag is set.
pub fn fixture_onerelator_scary() -> Presentation {
    let names: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
    let alphabet = Alphabet::new(names.clone());
    let relator = alphabet
        .parse_word("b c b^-1 a d^-1 a^-1 c^-1 c d^-1 d")
        .unwrap();
    Presentation::new(names, vec![(relator, Word::empty())], true)
}

/// `Inv⟨a,b | a b a⁻ⁿ b⁻¹ = 1⟩`: its group image is the Baumslag–Solitar
/// group BS(1,n). The relator is cyclically reduced, so the monoid is
/// E-unitary and the flag is set.
pub fn fixture_bs(n: usize) -> Result<Presentation, PresentationError> {
    if n == 0 {
        return Err(PresentationError::BadParameter(
            "fixture_bs requires n >= 1".into(),
        ));
    }
    let names = vec!["a".to_string(), "b".to_string()];
    let mut relator = Word::empty();
    relator.push(Letter::pos(0));
    relator.push(Letter::pos(1));
    for _ in 0..n {
        relator.push(Letter::neg(0));
    }
    relator.push(Letter::neg(1));
    Ok(Presentation::new(
        names,
        vec![(relator, Word::empty())],
        true,
    ))
}

/// Special presentation over `X ∪ {t}` whose group image is
/// `Gp⟨X | r_i⟩ ∗ FG(t)`: relations `e·r₁ = 1, r₂ = 1, …, r_m = 1` where
///
/// ```text
/// e = ∏ᵢ xᵢxᵢ⁻¹ · ∏ⱼ (t sⱼ t⁻¹)(t sⱼ t⁻¹)⁻¹ · ∏ᵢ xᵢ⁻¹xᵢ
/// ```
///
/// with the middle product running over the words `s₁, …, s_k`. Every
/// Schützenberger graph of the resulting monoid embeds isometrically in the
/// group Cayley graph. Generator `t` is appended after `X`.
pub fn fixture_gray(
    x_names: &[String],
    group_relators: &[Word],
    s_words: &[Word],
) -> Result<Presentation, PresentationError> {
    if group_relators.is_empty() {
        return Err(PresentationError::BadParameter(
            "fixture_gray requires at least one group relator (use the empty word for a free group)".into(),
        ));
    }
    if x_names.iter().any(|n| n == "t") {
        return Err(PresentationError::NameClash("t".into()));
    }
    let n = x_names.len();
    let check = |w: &Word| -> Result<(), PresentationError> {
        if w.max_gen().map(|g| g as usize >= n).unwrap_or(false) {
            return Err(PresentationError::BadParameter(
                "relator/s-word letters must index X only".into(),
            ));
        }
        Ok(())
    };
    for w in group_relators.iter().chain(s_words) {
        check(w)?;
    }
    let t = n as u16;
    let mut e = Word::empty();
    for i in 0..n as u16 {
        e.push(Letter::pos(i));
        e.push(Letter::neg(i));
    }
    for s in s_words {
        let mut factor = Word::empty();
        factor.push(Letter::pos(t));
        for &l in s.letters() {
            factor.push(l);
        }
        factor.push(Letter::neg(t));
        e = e.concat(&factor).concat(&invert(&factor));
    }
    for i in 0..n as u16 {
        e.push(Letter::neg(i));
        e.push(Letter::pos(i));
    }
    let mut names = x_names.to_vec();
    names.push("t".to_string());
    let mut relations = vec![(e.concat(&group_relators[0]), Word::empty())];
    for r in &group_relators[1..] {
        relations.push((r.clone(), Word::empty()));
    }
    Ok(Presentation::new(names, relations, true))
}

/// The `e`-prefix length of a [`fixture_gray`] first relation:
/// `2n + Σⱼ (2|sⱼ| + 4) + 2n`.
pub fn gray_e_length(x_count: usize, s_words: &[Word]) -> usize {
    4 * x_count + s_words.iter().map(|s| 2 * s.len() + 4).sum::<usize>()
}

/// Clifford-monoid presentation gluing a group `G = Gp⟨Y | w_i⟩` to a copy
/// `H' = Gp⟨X' | u_i⟩` of a subgroup along `x' ↦ x`: generators
/// `X' ⊔ Y ⊔ {e}` subject to
///
/// ```text
/// (R1) 1 = x'x'⁻¹ = x'⁻¹x'     (R4) e = yy⁻¹ = y⁻¹y
/// (R2) e² = e                  (R5) uᵢ² = uᵢ
/// (R3) ex' = x'e = x           (R6) wᵢ² = wᵢ
/// ```
///
/// `x_to_y[i]` names the `Y`-generator corresponding to the `i`-th `X'`
/// generator. The result is not special ((R3) has two nonempty sides).
pub fn fixture_clifford(
    g_pres: &GroupPresentation,
    h_pres: &GroupPresentation,
    x_to_y: &[u16],
) -> Result<Presentation, PresentationError> {
    let nx = h_pres.alphabet.size();
    let ny = g_pres.alphabet.size();
    if x_to_y.len() != nx {
        return Err(PresentationError::BadParameter(
            "x_to_y must give one Y index per X' generator".into(),
        ));
    }
    if x_to_y.iter().any(|&y| y as usize >= ny) {
        return Err(PresentationError::BadParameter(
            "x_to_y index out of range".into(),
        ));
    }
    let mut names: Vec<String> = h_pres.alphabet.names().to_vec();
    names.extend(g_pres.alphabet.names().iter().cloned());
    names.push("e".to_string());
    {
        let mut seen = BTreeSet::new();
        for n in &names {
            if !seen.insert(n.clone()) {
                return Err(PresentationError::NameClash(n.clone()));
            }
        }
    }
    let y_off = nx as u16;
    let e = (nx + ny) as u16;
    let shift = |w: &Word, off: u16| {
        Word(
            w.letters()
                .iter()
                .map(|l| Letter {
                    gen: l.gen + off,
                    inverse: l.inverse,
                })
                .collect(),
        )
    };

    let mut rels: Vec<(Word, Word)> = Vec::new();
    // (R1)
    for x in 0..nx as u16 {
        rels.push((Word(vec![Letter::pos(x), Letter::neg(x)]), Word::empty()));
        rels.push((Word(vec![Letter::neg(x), Letter::pos(x)]), Word::empty()));
    }
    // (R2)
    rels.push((
        Word(vec![Letter::pos(e), Letter::pos(e)]),
        Word(vec![Letter::pos(e)]),
    ));
    // (R3)
    for x in 0..nx as u16 {
        let target = Word(vec![Letter::pos(x_to_y[x as usize] + y_off)]);
        rels.push((Word(vec![Letter::pos(e), Letter::pos(x)]), target.clone()));
        rels.push((Word(vec![Letter::pos(x), Letter::pos(e)]), target));
    }
    // (R4)
    for y in 0..ny as u16 {
        let yy = y + y_off;
        rels.push((
            Word(vec![Letter::pos(yy), Letter::neg(yy)]),
            Word(vec![Letter::pos(e)]),
        ));
        rels.push((
            Word(vec![Letter::neg(yy), Letter::pos(yy)]),
            Word(vec![Letter::pos(e)]),
        ));
    }
    // (R5)
    for u in &h_pres.relators {
        rels.push((u.concat(u), u.clone()));
    }
    // (R6)
    for w in &g_pres.relators {
        let w = shift(w, y_off);
        rels.push((w.concat(&w), w));
    }
    Ok(Presentation::new(names, rels, false))
}

/// Sufficient-condition hint for asserting E-unitarity: a special one-relator
/// presentation whose relator is freely and cyclically reduced presents an
/// E-unitary inverse monoid. This never verifies the flag for other shapes.
pub fn one_relator_cyclically_reduced(p: &Presentation) -> bool {
    if !p.is_special() {
        return false;
    }
    let relators: Vec<Word> = p.relators().into_iter().filter(|w| !w.is_empty()).collect();
    if relators.len() != 1 {
        return false;
    }
    let r = &relators[0];
    if free_reduce(r) != *r {
        return false;
    }
    let first = r.letters()[0];
    let last = r.letters()[r.len() - 1];
    first != last.inv()
}
