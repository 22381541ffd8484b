//! Word-problem and normal-form oracles for maximal group images, and
//! Cayley-ball enumeration.
//!
//! An oracle is a capability record: an identity test and, for the oracles
//! that can support geometry, a canonical normal form. Everything that
//! deduplicates group elements (balls, embedded closures, distortion rows)
//! demands normal forms; identity-only oracles are still accepted for
//! equality refutation.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::stephen::TriBool;
use crate::words::{free_reduce, Letter, Word};
use crate::xgraph::XGraph;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle could not normalize `{0:?}` (budget exhausted or capability absent)")]
    NormalFormUnavailable(Word),
    #[error("free product factors must have disjoint alphabets")]
    AlphabetOverlap,
    #[error("oracle alphabet too small for letter {0}")]
    LetterOutOfRange(u16),
    #[error("bad rules file: {0}")]
    BadRulesFile(String),
}

pub trait GroupOracle {
    /// Number of generators the oracle understands; words must index below it.
    fn alphabet_size(&self) -> usize;

    /// Does `w` represent the group identity?
    fn is_identity(&self, w: &Word) -> TriBool;

    /// Canonical representative of `[w]`, if this oracle can compute one.
    /// Idempotent where defined.
    fn normal_form(&self, w: &Word) -> Option<Word>;

    fn supports_normal_forms(&self) -> bool;

    /// True when normal forms are geodesic words over the same alphabet, so
    /// `|nf(u⁻¹v)|` is exactly the word-metric distance (free groups and
    /// free products of such).
    fn geodesic_normal_forms(&self) -> bool {
        false
    }
}

/// Exact oracle for the free group of the given rank; normal forms are the
/// freely reduced words.
pub struct FreeGroupOracle {
    rank: usize,
}

pub fn free_group_oracle(rank: usize) -> FreeGroupOracle {
    FreeGroupOracle { rank }
}

impl GroupOracle for FreeGroupOracle {
    fn alphabet_size(&self) -> usize {
        self.rank
    }

    fn is_identity(&self, w: &Word) -> TriBool {
        if free_reduce(w).is_empty() {
            TriBool::Confirmed
        } else {
            TriBool::Refuted
        }
    }

    fn normal_form(&self, w: &Word) -> Option<Word> {
        Some(free_reduce(w))
    }

    fn supports_normal_forms(&self) -> bool {
        true
    }

    fn geodesic_normal_forms(&self) -> bool {
        true
    }
}

/// Free product of two oracles over disjoint alphabets: letters `0..n₁` are
/// the left factor's, letters `n₁..n₁+n₂` the right factor's (shifted).
///
/// Normal forms are alternating sequences of non-identity factor normal
/// forms, computed by block splitting, per-block normalization, deletion of
/// identity blocks and re-merging of newly adjacent same-factor blocks to a
/// fixpoint.
pub struct FreeProductOracle {
    left: Box<dyn GroupOracle>,
    right: Box<dyn GroupOracle>,
}

pub fn free_product_oracle(
    left: Box<dyn GroupOracle>,
    right: Box<dyn GroupOracle>,
) -> Result<FreeProductOracle, OracleError> {
    if !left.supports_normal_forms() || !right.supports_normal_forms() {
        return Err(OracleError::NormalFormUnavailable(Word::empty()));
    }
    Ok(FreeProductOracle { left, right })
}

impl FreeProductOracle {
    fn split(&self) -> u16 {
        self.left.alphabet_size() as u16
    }

    /// Translate a block to factor-local letters, normalize, translate back.
    fn block_nf(&self, block: &Word, left_factor: bool) -> Option<Word> {
        let split = self.split();
        if left_factor {
            self.left.normal_form(block)
        } else {
            let local = Word(
                block
                    .letters()
                    .iter()
                    .map(|l| Letter {
                        gen: l.gen - split,
                        inverse: l.inverse,
                    })
                    .collect(),
            );
            let nf = self.right.normal_form(&local)?;
            Some(Word(
                nf.letters()
                    .iter()
                    .map(|l| Letter {
                        gen: l.gen + split,
                        inverse: l.inverse,
                    })
                    .collect(),
            ))
        }
    }
}

impl GroupOracle for FreeProductOracle {
    fn alphabet_size(&self) -> usize {
        self.left.alphabet_size() + self.right.alphabet_size()
    }

    fn is_identity(&self, w: &Word) -> TriBool {
        match self.normal_form(w) {
            Some(nf) if nf.is_empty() => TriBool::Confirmed,
            Some(_) => TriBool::Refuted,
            None => TriBool::Unknown,
        }
    }

    fn normal_form(&self, w: &Word) -> Option<Word> {
        let split = self.split();
        // (is_left_factor, block) list; iterate delete/merge to fixpoint.
        let mut blocks: Vec<(bool, Word)> = Vec::new();
        for &l in w.letters() {
            let side = l.gen < split;
            match blocks.last_mut() {
                Some((s, b)) if *s == side => b.push(l),
                _ => blocks.push((side, Word(vec![l]))),
            }
        }
        loop {
            let mut next: Vec<(bool, Word)> = Vec::new();
            let mut changed = false;
            for (side, block) in blocks.drain(..) {
                let nf = self.block_nf(&block, side)?;
                if nf.is_empty() {
                    changed = true;
                    continue;
                }
                if nf != block {
                    changed = true;
                }
                match next.last_mut() {
                    Some((s, b)) if *s == side => {
                        *b = b.concat(&nf);
                        changed = true;
                    }
                    _ => next.push((side, nf)),
                }
            }
            blocks = next;
            if !changed {
                break;
            }
        }
        let mut out = Word::empty();
        for (_, b) in blocks {
            out = out.concat(&b);
        }
        Some(out)
    }

    fn supports_normal_forms(&self) -> bool {
        true
    }

    fn geodesic_normal_forms(&self) -> bool {
        // Alternating normal forms over geodesic factors are geodesic for
        // the union generating set.
        self.left.geodesic_normal_forms() && self.right.geodesic_normal_forms()
    }
}

/// One string rewriting rule over signed letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Word,
}

/// Budgeted string rewriting oracle. Rules are applied leftmost-first,
/// trying rules in order at each position, interleaved with free reduction;
/// one application counts one step against the budget.
///
/// Reaching a fixpoint makes the answer exact *for systems the caller asserts
/// confluent and terminating*; without the flag every would-be refutation is
/// downgraded to `Unknown` (an unsound refutation would poison every
/// semi-decision built on top). A confirmed identity never needs the flag:
/// each rule is a valid group identity, so reducing to the empty word is
/// sound evidence on its own.
pub struct RewritingOracle {
    alphabet_size: usize,
    rules: Vec<RewriteRule>,
    step_budget: usize,
    pub confluent_terminating: bool,
}

pub fn rewriting_oracle(
    alphabet_size: usize,
    rules: Vec<RewriteRule>,
    step_budget: usize,
    confluent_terminating: bool,
) -> RewritingOracle {
    RewritingOracle {
        alphabet_size,
        rules,
        step_budget,
        confluent_terminating,
    }
}

impl RewritingOracle {
    fn reduce(&self, w: &Word) -> Option<Word> {
        let mut cur = free_reduce(w);
        let mut steps = 0usize;
        'outer: loop {
            let letters = cur.letters();
            for pos in 0..letters.len() {
                for rule in &self.rules {
                    let end = pos + rule.lhs.len();
                    if end <= letters.len() && letters[pos..end] == rule.lhs.0[..] {
                        if steps >= self.step_budget {
                            return None;
                        }
                        steps += 1;
                        let mut next = Vec::with_capacity(letters.len());
                        next.extend_from_slice(&letters[..pos]);
                        next.extend_from_slice(&rule.rhs.0);
                        next.extend_from_slice(&letters[end..]);
                        cur = free_reduce(&Word(next));
                        continue 'outer;
                    }
                }
            }
            return Some(cur);
        }
    }
}

impl GroupOracle for RewritingOracle {
    fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    fn is_identity(&self, w: &Word) -> TriBool {
        match self.reduce(w) {
            Some(nf) if nf.is_empty() => TriBool::Confirmed,
            Some(_) if self.confluent_terminating => TriBool::Refuted,
            Some(_) => TriBool::Unknown,
            None => TriBool::Unknown,
        }
    }

    fn normal_form(&self, w: &Word) -> Option<Word> {
        if !self.confluent_terminating {
            return None;
        }
        self.reduce(w)
    }

    fn supports_normal_forms(&self) -> bool {
        self.confluent_terminating
    }
}

/// Letter-renumbering wrapper: presents a sub-alphabet of an existing oracle
/// as an oracle in its own right. `to_outer[i]` is the outer letter for inner
/// generator `i`; normal forms must stay inside the image to translate back.
pub struct SubAlphabetOracle<'a> {
    inner: &'a dyn GroupOracle,
    to_outer: Vec<u16>,
    from_outer: HashMap<u16, u16>,
}

impl<'a> SubAlphabetOracle<'a> {
    pub fn new(inner: &'a dyn GroupOracle, to_outer: Vec<u16>) -> Self {
        let from_outer = to_outer
            .iter()
            .enumerate()
            .map(|(i, &o)| (o, i as u16))
            .collect();
        SubAlphabetOracle {
            inner,
            to_outer,
            from_outer,
        }
    }

    fn outward(&self, w: &Word) -> Word {
        Word(
            w.letters()
                .iter()
                .map(|l| Letter {
                    gen: self.to_outer[l.gen as usize],
                    inverse: l.inverse,
                })
                .collect(),
        )
    }

    fn inward(&self, w: &Word) -> Option<Word> {
        let mut out = Vec::with_capacity(w.len());
        for l in w.letters() {
            let g = *self.from_outer.get(&l.gen)?;
            out.push(Letter {
                gen: g,
                inverse: l.inverse,
            });
        }
        Some(Word(out))
    }
}

impl GroupOracle for SubAlphabetOracle<'_> {
    fn alphabet_size(&self) -> usize {
        self.to_outer.len()
    }

    fn is_identity(&self, w: &Word) -> TriBool {
        self.inner.is_identity(&self.outward(w))
    }

    fn normal_form(&self, w: &Word) -> Option<Word> {
        let nf = self.inner.normal_form(&self.outward(w))?;
        self.inward(&nf)
    }

    fn supports_normal_forms(&self) -> bool {
        self.inner.supports_normal_forms()
    }

    fn geodesic_normal_forms(&self) -> bool {
        self.inner.geodesic_normal_forms()
    }
}

/// Exact oracle for the group image of the one-relator fixture
/// `Inv⟨a,b,c,d | bcb⁻¹ad⁻¹a⁻¹c⁻¹cd⁻¹d = 1⟩`: the group is free on
/// `a, b, u` where `u = bcb⁻¹`; the oracle alphabet is `a,b,c,d,u` with `c`
/// and `d` rewritten to `b⁻¹ub` and `a⁻¹ua`, then freely reduced.
///
/// Normal forms are reduced words over `a, b, u`, which are *not* geodesics
/// for the presentation alphabet (a `u`-step costs three letters there).
pub fn scary_group_oracle() -> RewritingOracle {
    let (a, b, c, d, u) = (0u16, 1u16, 2u16, 3u16, 4u16);
    let conj = |outer: u16, mid: Letter| Word(vec![Letter::neg(outer), mid, Letter::pos(outer)]);
    let rules = vec![
        RewriteRule {
            lhs: Word(vec![Letter::pos(c)]),
            rhs: conj(b, Letter::pos(u)),
        },
        RewriteRule {
            lhs: Word(vec![Letter::neg(c)]),
            rhs: conj(b, Letter::neg(u)),
        },
        RewriteRule {
            lhs: Word(vec![Letter::pos(d)]),
            rhs: conj(a, Letter::pos(u)),
        },
        RewriteRule {
            lhs: Word(vec![Letter::neg(d)]),
            rhs: conj(a, Letter::neg(u)),
        },
    ];
    rewriting_oracle(5, rules, 100_000, true)
}

/// Convergent rewriting system for the Baumslag–Solitar group BS(1,n)
/// presented by `a b a⁻ⁿ b⁻¹ = 1` (so `b aⁿ = a b`).
///
/// Together with free reduction these rules rewrite every word to the adic
/// digit normal form `a^{m} (b a^{δ₁}) (b a^{δ₂}) ⋯ (b a^{δₚ}) b⁻ᵠ` with
/// `0 ≤ δᵢ < n`: both `b` and `b⁻¹` migrate right, `b` digesting `a^{±n}`
/// blocks and borrowing a digit when it crosses a lone `a⁻¹`, while `b⁻¹`
/// inflates every `a^{±1}` it crosses. Identifying the group with affine
/// maps `x ↦ x/nᵏ + c` (`a: x ↦ x+1`, `b: x ↦ x/n`), the form reads off
/// `k = p − q` and the base-n expansion `c = m + Σ δᵢ n⁻ⁱ`, so it is
/// canonical; the tests cross-check that against the affine representation.
pub fn bs_rules(n: usize) -> Vec<RewriteRule> {
    assert!(n >= 1);
    let (a, b) = (0u16, 1u16);
    let reps = |l: Letter, k: usize| -> Vec<Letter> { std::iter::repeat_n(l, k).collect() };
    let mut rules = Vec::new();
    // b a^n -> a b, b a^-n -> a^-1 b.
    rules.push(RewriteRule {
        lhs: Word([vec![Letter::pos(b)], reps(Letter::pos(a), n)].concat()),
        rhs: Word(vec![Letter::pos(a), Letter::pos(b)]),
    });
    rules.push(RewriteRule {
        lhs: Word([vec![Letter::pos(b)], reps(Letter::neg(a), n)].concat()),
        rhs: Word(vec![Letter::neg(a), Letter::pos(b)]),
    });
    // Digit borrow b a^-1 -> a^-1 b a^(n-1); for n = 1 the rule above already
    // covers it.
    if n > 1 {
        rules.push(RewriteRule {
            lhs: Word(vec![Letter::pos(b), Letter::neg(a)]),
            rhs: Word(
                [
                    vec![Letter::neg(a), Letter::pos(b)],
                    reps(Letter::pos(a), n - 1),
                ]
                .concat(),
            ),
        });
    }
    // b^-1 a -> a^n b^-1, b^-1 a^-1 -> a^-n b^-1.
    rules.push(RewriteRule {
        lhs: Word(vec![Letter::neg(b), Letter::pos(a)]),
        rhs: Word([reps(Letter::pos(a), n), vec![Letter::neg(b)]].concat()),
    });
    rules.push(RewriteRule {
        lhs: Word(vec![Letter::neg(b), Letter::neg(a)]),
        rhs: Word([reps(Letter::neg(a), n), vec![Letter::neg(b)]].concat()),
    });
    rules
}

pub fn bs_oracle(n: usize) -> RewritingOracle {
    rewriting_oracle(2, bs_rules(n), 200_000, true)
}

/// On-disk form of a rewriting oracle: generator names, rules, the
/// confluence flag and an optional step budget.
///
/// ```text
/// gens: a b ;
/// rule: b a a -> a b ;
/// confluent_terminating ;
/// budget: 200000 ;
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RulesFile {
    pub names: Vec<String>,
    pub rules: Vec<RewriteRule>,
    pub confluent_terminating: bool,
    pub step_budget: usize,
}

impl RulesFile {
    pub fn oracle(&self) -> RewritingOracle {
        rewriting_oracle(
            self.names.len(),
            self.rules.clone(),
            self.step_budget,
            self.confluent_terminating,
        )
    }
}

pub fn parse_rules_file(text: &str) -> Result<RulesFile, OracleError> {
    let bad = |msg: String| OracleError::BadRulesFile(msg);
    let mut names: Option<Vec<String>> = None;
    let mut rules = Vec::new();
    let mut flag = false;
    let mut budget = 200_000usize;
    let mut body = String::new();
    for line in text.lines() {
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        body.push_str(line);
        body.push('\n');
    }
    for stmt in body.split(';') {
        let stmt = stmt.trim();
        if stmt.is_empty() {
            continue;
        }
        if stmt == "confluent_terminating" {
            flag = true;
            continue;
        }
        let (head, rest) = stmt
            .split_once(':')
            .ok_or_else(|| bad(format!("unparsable statement `{stmt}`")))?;
        match head.trim() {
            "gens" => {
                names = Some(rest.split_whitespace().map(|s| s.to_string()).collect());
            }
            "rule" => {
                let alphabet = crate::words::Alphabet::new(
                    names
                        .clone()
                        .ok_or_else(|| bad("rule before gens".into()))?,
                );
                let (lhs, rhs) = rest
                    .split_once("->")
                    .ok_or_else(|| bad(format!("rule `{rest}` lacks ->")))?;
                let lhs = alphabet.parse_word(lhs).map_err(|e| bad(e.to_string()))?;
                let rhs = alphabet.parse_word(rhs).map_err(|e| bad(e.to_string()))?;
                if lhs.is_empty() {
                    return Err(bad("rule left side must be nonempty".into()));
                }
                rules.push(RewriteRule { lhs, rhs });
            }
            "flags" => {
                for tok in rest.split_whitespace() {
                    match tok {
                        "confluent_terminating" => flag = true,
                        other => return Err(bad(format!("unknown flag `{other}`"))),
                    }
                }
            }
            "budget" => {
                budget = rest
                    .trim()
                    .parse()
                    .map_err(|_| bad(format!("bad budget `{rest}`")))?;
            }
            other => return Err(bad(format!("unknown section `{other}`"))),
        }
    }
    Ok(RulesFile {
        names: names.ok_or_else(|| bad("missing gens section".into()))?,
        rules,
        confluent_terminating: flag,
        step_budget: budget,
    })
}

pub fn format_rules_file(f: &RulesFile) -> String {
    let alphabet = crate::words::Alphabet::new(f.names.clone());
    let mut out = String::from("gens:");
    for n in &f.names {
        out.push(' ');
        out.push_str(n);
    }
    out.push_str(" ;\n");
    for rule in &f.rules {
        out.push_str(&format!(
            "rule: {} -> {} ;\n",
            alphabet.format_word(&rule.lhs),
            alphabet.format_word(&rule.rhs)
        ));
    }
    if f.confluent_terminating {
        out.push_str("confluent_terminating ;\n");
    }
    out.push_str(&format!("budget: {} ;\n", f.step_budget));
    out
}

/// The BS(1,n) system as a shippable rules file.
pub fn bs_rules_file(n: usize) -> RulesFile {
    RulesFile {
        names: vec!["a".into(), "b".into()],
        rules: bs_rules(n),
        confluent_terminating: true,
        step_budget: 200_000,
    }
}

/// The one-relator fixture's group oracle as a shippable rules file.
pub fn scary_rules_file() -> RulesFile {
    let o = scary_group_oracle();
    RulesFile {
        names: vec!["a".into(), "b".into(), "c".into(), "d".into(), "u".into()],
        rules: o.rules.clone(),
        confluent_terminating: true,
        step_budget: o.step_budget,
    }
}

/// The ball of radius `r` in a group Cayley graph, enumerated from the
/// identity by BFS and deduplicated by normal form. Includes every edge
/// between stored vertices, so the ball is the induced subgraph.
pub struct CayleyBall {
    pub graph: XGraph,
    /// Normal form labeling each vertex; vertex 0 is the identity.
    pub labels: Vec<Word>,
    pub radius: usize,
}

impl CayleyBall {
    pub fn vertex_of(&self, nf: &Word) -> Option<u32> {
        self.labels.iter().position(|l| l == nf).map(|i| i as u32)
    }
}

/// Construct the radius-`r` ball. Errors if the oracle cannot normalize some
/// product encountered during the search.
pub fn cayley_ball(o: &dyn GroupOracle, r: usize) -> Result<CayleyBall, OracleError> {
    if !o.supports_normal_forms() {
        return Err(OracleError::NormalFormUnavailable(Word::empty()));
    }
    let width = 2 * o.alphabet_size();
    let identity = o
        .normal_form(&Word::empty())
        .ok_or(OracleError::NormalFormUnavailable(Word::empty()))?;
    let mut index: HashMap<Word, u32> = HashMap::new();
    let mut labels = vec![identity.clone()];
    let mut dist = vec![0usize];
    index.insert(identity, 0);
    let mut queue = VecDeque::from([0u32]);
    while let Some(v) = queue.pop_front() {
        if dist[v as usize] == r {
            continue;
        }
        for code in 0..width {
            let l = Letter::from_code(code);
            let mut w = labels[v as usize].clone();
            w.push(l);
            let nf = o
                .normal_form(&w)
                .ok_or_else(|| OracleError::NormalFormUnavailable(w.clone()))?;
            if !index.contains_key(&nf) {
                let id = labels.len() as u32;
                index.insert(nf.clone(), id);
                labels.push(nf);
                dist.push(dist[v as usize] + 1);
                queue.push_back(id);
            }
        }
    }
    let mut graph = XGraph::new(o.alphabet_size());
    for _ in 1..labels.len() {
        graph.add_vertex();
    }
    for v in 0..labels.len() as u32 {
        for g in 0..o.alphabet_size() as u16 {
            let l = Letter::pos(g);
            let mut w = labels[v as usize].clone();
            w.push(l);
            let nf = o
                .normal_form(&w)
                .ok_or_else(|| OracleError::NormalFormUnavailable(w.clone()))?;
            if let Some(&t) = index.get(&nf) {
                graph.add_edge(v, l, t);
            }
        }
    }
    graph.set_roots(0, 0);
    Ok(CayleyBall {
        graph,
        labels,
        radius: r,
    })
}

/// Exact word length of `[w]` over the first `letters` generators of the
/// oracle alphabet (the generating set may be a strict subset when the
/// oracle carries auxiliary generators). Geodesic oracles over exactly that
/// alphabet answer from the normal form; otherwise a breadth-first search
/// bounded by `|w|` decides it — which requires `w` itself to be written in
/// the allowed letters.
pub fn group_length(o: &dyn GroupOracle, w: &Word, letters: usize) -> Result<usize, OracleError> {
    debug_assert!(
        w.letters().iter().all(|l| (l.gen as usize) < letters),
        "group_length input must use the allowed generating letters"
    );
    if o.geodesic_normal_forms() && letters == o.alphabet_size() {
        return Ok(o
            .normal_form(w)
            .ok_or_else(|| OracleError::NormalFormUnavailable(w.clone()))?
            .len());
    }
    let target = o
        .normal_form(w)
        .ok_or_else(|| OracleError::NormalFormUnavailable(w.clone()))?;
    group_distance(o, &Word::empty(), &target, w.len(), letters)
        .map(|d| d.expect("an element is reachable within its own word length"))
}

/// Word-metric distance between `[x]` and `[y]` over the first `letters`
/// generators, bidirectional BFS with normal-form deduplication, `None`
/// beyond `cutoff`.
pub fn group_distance(
    o: &dyn GroupOracle,
    x: &Word,
    y: &Word,
    cutoff: usize,
    letters: usize,
) -> Result<Option<usize>, OracleError> {
    let nf = |w: &Word| -> Result<Word, OracleError> {
        o.normal_form(w)
            .ok_or_else(|| OracleError::NormalFormUnavailable(w.clone()))
    };
    let sx = nf(x)?;
    let sy = nf(y)?;
    if sx == sy {
        return Ok(Some(0));
    }
    let width = 2 * letters.min(o.alphabet_size());
    let mut side_a: HashMap<Word, usize> = HashMap::from([(sx.clone(), 0)]);
    let mut side_b: HashMap<Word, usize> = HashMap::from([(sy.clone(), 0)]);
    let mut frontier_a = vec![sx];
    let mut frontier_b = vec![sy];
    let mut depth_a = 0usize;
    let mut depth_b = 0usize;
    while depth_a + depth_b < cutoff && (!frontier_a.is_empty() || !frontier_b.is_empty()) {
        // Expand the smaller frontier.
        let expand_a = !frontier_a.is_empty()
            && (frontier_b.is_empty() || frontier_a.len() <= frontier_b.len());
        let (frontier, own, own_depth, other) = if expand_a {
            depth_a += 1;
            (&mut frontier_a, &mut side_a, depth_a, &side_b)
        } else {
            depth_b += 1;
            (&mut frontier_b, &mut side_b, depth_b, &side_a)
        };
        let mut next = Vec::new();
        for wrd in frontier.drain(..) {
            for code in 0..width {
                let mut step = wrd.clone();
                step.push(Letter::from_code(code));
                let n = nf(&step)?;
                if own.contains_key(&n) {
                    continue;
                }
                if let Some(&db) = other.get(&n) {
                    return Ok(Some(own_depth + db));
                }
                own.insert(n.clone(), own_depth);
                next.push(n);
            }
        }
        *frontier = next;
    }
    Ok(None)
}
