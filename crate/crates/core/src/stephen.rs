//! Budgeted Stephen's procedure and the semi-decision tests built on it.
//!
//! Stephen's procedure grows the Schützenberger graph of a word as a limit of
//! finite approximants: start from the linear graph, repeatedly sew on the
//! missing side of a relation wherever one side labels a path and the other
//! does not, and fold. The procedure need not terminate, so every run here is
//! budgeted; budget exhaustion is an ordinary `Unknown`, not an error.
//!
//! Rounds are batched: one round scans the whole frozen graph for missing
//! parallel paths (relations in presentation order, vertices in creation
//! order), sews them all, then folds once. The expansion steps are confluent,
//! so the batching only changes which finite approximant a given budget
//! reaches, never the limit.

use crate::oracle::GroupOracle;
use crate::presentation::Presentation;
use crate::words::{invert, Word};
use crate::xgraph::{FoldArena, XGraph};

/// Budget for one approximation run. Both bounds must be at least 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_rounds: usize,
    pub max_vertices: usize,
}

impl Budget {
    pub fn new(max_rounds: usize, max_vertices: usize) -> Self {
        assert!(
            max_rounds >= 1 && max_vertices >= 1,
            "budget bounds must be >= 1"
        );
        Budget {
            max_rounds,
            max_vertices,
        }
    }
}

/// Outcome of a semi-decision: positive evidence, a sound refutation, or
/// budget exhaustion. `Refuted` is only ever produced with oracle support.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriBool {
    Confirmed,
    Refuted,
    Unknown,
}

/// A finite stage of Stephen's procedure for one word.
#[derive(Clone, Debug)]
pub struct Approximant {
    pub graph: XGraph,
    pub rounds_done: usize,
    /// True iff no expansion applies: the graph is the whole Schützenberger graph.
    pub saturated: bool,
    /// True iff the vertex budget cut a round short.
    pub vertex_limit_hit: bool,
    pub source_word: Word,
}

enum Instr {
    /// Sew `Lin(word)` from `u` to `v`; an empty word identifies `u` and `v`.
    Sew { u: u32, word: usize, v: u32 },
    /// Attach the relator loop `word` at `u` (special fast path).
    Loop { u: u32, word: usize },
}

struct Engine<'a> {
    p: &'a Presentation,
    arena: FoldArena,
    alpha: u32,
    beta: u32,
    /// Sides indexed by `Instr::word`: for each relation both sides, flattened.
    sides: Vec<Word>,
    special: bool,
    /// For special presentations, the side index of each relation's nonempty side.
    relator_side: Vec<usize>,
    reverse_scan: bool,
}

impl<'a> Engine<'a> {
    fn new(p: &'a Presentation, w: &Word, reverse_scan: bool) -> Self {
        let mut arena = FoldArena::new(p.generator_count());
        let alpha = arena.add_vertex();
        let mut cur = alpha;
        for &l in w.letters() {
            let next = arena.add_vertex();
            arena.add_edge(cur, l, next);
            cur = next;
        }
        arena.process();
        let mut sides = Vec::new();
        for (l, r) in p.relations() {
            sides.push(l.clone());
            sides.push(r.clone());
        }
        let special = p.is_special() && p.relations().len() <= 64;
        let relator_side = if special {
            p.relations()
                .iter()
                .enumerate()
                .map(|(i, (_, r))| if r.is_empty() { 2 * i } else { 2 * i + 1 })
                .collect()
        } else {
            Vec::new()
        };
        Engine {
            p,
            arena,
            alpha,
            beta: cur,
            sides,
            special,
            relator_side,
            reverse_scan,
        }
    }

    /// Scan the frozen graph for missing parallel paths.
    fn scan(&mut self) -> Vec<Instr> {
        let mut roots = self.arena.roots_in_order();
        if self.reverse_scan {
            roots.reverse();
        }
        let mut out = Vec::new();
        if self.special {
            // P-expansions only ever attach relator loops; track which loops
            // are already present with a per-vertex done-mask.
            for ri in 0..self.relator_side.len() {
                let side = self.relator_side[ri];
                let relator = self.sides[side].clone();
                let bit = 1u64 << ri;
                for &u in &roots {
                    if self.arena.find(u) != u || self.arena.get_payload(u) & bit != 0 {
                        continue;
                    }
                    match self.arena.read(u, &relator) {
                        Some(v) if v == u => self.arena.or_payload(u, bit),
                        Some(v) => out.push(Instr::Sew {
                            u,
                            word: usize::MAX,
                            v,
                        }),
                        None => out.push(Instr::Loop { u, word: side }),
                    }
                }
            }
            return out;
        }
        for rel in 0..self.p.relations().len() {
            for dir in 0..2 {
                let have = 2 * rel + dir;
                let want = 2 * rel + (1 - dir);
                let have_w = self.sides[have].clone();
                let want_w = self.sides[want].clone();
                for &u in &roots {
                    if self.arena.find(u) != u {
                        continue;
                    }
                    if let Some(v) = self.arena.read(u, &have_w) {
                        if self.arena.read(u, &want_w) != Some(v) {
                            out.push(Instr::Sew { u, word: want, v });
                        }
                    }
                }
            }
        }
        out
    }

    /// Apply sews in order until the vertex budget is hit. Returns true if
    /// the budget cut the batch short.
    fn apply(&mut self, instrs: Vec<Instr>, max_vertices: usize) -> bool {
        for instr in instrs {
            match instr {
                Instr::Sew { u, word, v } => {
                    let w = if word == usize::MAX {
                        Word::empty()
                    } else {
                        self.sides[word].clone()
                    };
                    if w.is_empty() {
                        self.arena.enqueue_union(u, v);
                        continue;
                    }
                    let fresh = w.len() - 1;
                    if self.arena.alive() + fresh > max_vertices {
                        return true;
                    }
                    self.sew_path(u, &w, v);
                }
                Instr::Loop { u, word } => {
                    let w = self.sides[word].clone();
                    if w.is_empty() {
                        continue;
                    }
                    let fresh = w.len() - 1;
                    if self.arena.alive() + fresh > max_vertices {
                        return true;
                    }
                    self.sew_path(u, &w, u);
                    let rel = word / 2;
                    self.arena.or_payload(u, 1u64 << rel);
                }
            }
        }
        false
    }

    fn sew_path(&mut self, u: u32, w: &Word, v: u32) {
        debug_assert!(!w.is_empty());
        let mut cur = u;
        for (i, &l) in w.letters().iter().enumerate() {
            let next = if i + 1 == w.len() {
                v
            } else {
                self.arena.add_vertex()
            };
            self.arena.add_edge(cur, l, next);
            cur = next;
        }
    }

    fn run(&mut self, b: &Budget) -> (usize, bool, bool) {
        let mut rounds = 0;
        let mut saturated = false;
        let mut limit = false;
        while rounds < b.max_rounds {
            let instrs = self.scan();
            if instrs.is_empty() {
                saturated = true;
                break;
            }
            limit = self.apply(instrs, b.max_vertices);
            self.arena.process();
            rounds += 1;
            if limit {
                break;
            }
        }
        (rounds, saturated, limit)
    }

    fn export(&mut self, source: Word, rounds: usize, saturated: bool, limit: bool) -> Approximant {
        let (graph, _) = self.arena.export(self.alpha, self.beta);
        Approximant {
            graph,
            rounds_done: rounds,
            saturated,
            vertex_limit_hit: limit,
            source_word: source,
        }
    }
}

/// Run Stephen's procedure for `w` under `p` within the budget.
pub fn approximate(p: &Presentation, w: &Word, b: &Budget) -> Approximant {
    approximate_ordered(p, w, b, false)
}

/// Same, scanning vertices in reverse creation order. Expansion is confluent,
/// so saturated results agree with the forward scan up to isomorphism; only
/// the intermediate stages differ.
pub fn approximate_ordered(
    p: &Presentation,
    w: &Word,
    b: &Budget,
    reverse_scan: bool,
) -> Approximant {
    assert!(
        b.max_rounds >= 1 && b.max_vertices >= 1,
        "budget bounds must be >= 1"
    );
    let mut engine = Engine::new(p, w, reverse_scan);
    let (rounds, saturated, limit) = engine.run(b);
    engine.export(w.clone(), rounds, saturated, limit)
}

/// Semi-decide `[u] ≥ [w]`: confirmed once `u` labels an alpha→beta path in
/// an approximant of the Schützenberger graph of `w` (approximant paths
/// persist into the limit, so this is sound). Never refutes.
pub fn test_geq(p: &Presentation, u: &Word, w: &Word, b: &Budget) -> TriBool {
    let app = approximate(p, w, b);
    match app.graph.read(app.graph.alpha(), u) {
        Ok(Some(v)) if v == app.graph.beta() => TriBool::Confirmed,
        _ => TriBool::Unknown,
    }
}

/// Semi-decide `[u] = [w]` as mutual `≥`, with refutation delegated to a
/// group-image oracle: equal elements have equal images, so a confirmed
/// non-identity image of `u·w⁻¹` refutes.
pub fn test_equal(
    p: &Presentation,
    u: &Word,
    w: &Word,
    b: &Budget,
    oracle: Option<&dyn GroupOracle>,
) -> TriBool {
    if test_geq(p, u, w, b) == TriBool::Confirmed && test_geq(p, w, u, b) == TriBool::Confirmed {
        return TriBool::Confirmed;
    }
    if let Some(o) = oracle {
        if o.is_identity(&u.concat(&invert(w))) == TriBool::Refuted {
            return TriBool::Refuted;
        }
    }
    TriBool::Unknown
}

/// Semi-decide whether `w` is a right unit (lies in the R-class of 1), via
/// `w·w⁻¹ = 1`.
pub fn test_right_unit(p: &Presentation, w: &Word, b: &Budget) -> TriBool {
    test_equal(p, &w.concat(&invert(w)), &Word::empty(), b, None)
}

/// Munn tree of `w`: the folded linear graph. Two words are equal in the free
/// inverse monoid exactly when their Munn trees are isomorphic as birooted
/// graphs.
pub fn munn_graph(alphabet_size: usize, w: &Word) -> XGraph {
    XGraph::linear(alphabet_size, w).determinize().0
}

/// Equality in the free inverse monoid, decided by the Munn oracle.
pub fn fim_equal(alphabet_size: usize, u: &Word, w: &Word) -> bool {
    munn_graph(alphabet_size, u)
        .iso_rooted(&munn_graph(alphabet_size, w))
        .expect("munn graphs are deterministic")
}

/// Total equality tester refining budgeted Stephen runs with the Munn oracle:
/// Munn-equal words are equal in every inverse monoid (confirm), and words
/// the budget could not confirm are refuted on Munn difference.
///
/// The refutation direction is exact for the empty presentation and a
/// heuristic otherwise (a larger budget might still confirm), which is the
/// price of totality; see [`RightUnitTester::munn_refined`] for the intended
/// use as a total right-unit tester.
pub fn munn_refined_equal(p: &Presentation, u: &Word, w: &Word, b: &Budget) -> TriBool {
    if fim_equal(p.generator_count(), u, w) {
        return TriBool::Confirmed;
    }
    if test_equal(p, u, w, b, None) == TriBool::Confirmed {
        return TriBool::Confirmed;
    }
    TriBool::Refuted
}

/// A right-unit test used by prefix-membership search. `total` marks testers
/// that never answer `Unknown`.
pub struct RightUnitTester<'a> {
    pub total: bool,
    func: Box<dyn Fn(&Word) -> TriBool + 'a>,
}

impl<'a> RightUnitTester<'a> {
    pub fn new(total: bool, func: impl Fn(&Word) -> TriBool + 'a) -> Self {
        RightUnitTester {
            total,
            func: Box::new(func),
        }
    }

    pub fn test(&self, w: &Word) -> TriBool {
        (self.func)(w)
    }

    /// Sound and partial: budgeted Stephen confirmation only.
    pub fn budgeted(p: &'a Presentation, b: Budget) -> Self {
        RightUnitTester::new(false, move |w| test_right_unit(p, w, &b))
    }

    /// Total: Munn-refined equality of `w·w⁻¹` and 1. Exact on the empty
    /// presentation; elsewhere refutations are heuristic.
    pub fn munn_refined(p: &'a Presentation, b: Budget) -> Self {
        RightUnitTester::new(true, move |w| {
            munn_refined_equal(p, &w.concat(&invert(w)), &Word::empty(), &b)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::free_group_oracle;
    use crate::presentation::{parse_presentation, Presentation};
    use crate::words::{words_up_to, Alphabet, Letter};

    fn b(rounds: usize, vertices: usize) -> Budget {
        Budget::new(rounds, vertices)
    }

    fn word(al: &Alphabet, s: &str) -> Word {
        al.parse_word(s).unwrap()
    }

    #[test]
    fn approximate_no_relations_is_munn_tree() {
        let p = Presentation::free_inverse(2);
        let w = word(p.alphabet(), "a b b^-1");
        let app = approximate(&p, &w, &b(5, 1000));
        assert!(app.saturated);
        assert_eq!(app.rounds_done, 0);
        assert_eq!(app.graph.vertex_count(), 3);
        // Path a then b-spur: alpha --a--> v --b--> spur, beta = v after the fold.
        assert_eq!(
            app.graph
                .read(app.graph.alpha(), &word(p.alphabet(), "a"))
                .unwrap(),
            Some(app.graph.beta())
        );
        assert!(app.graph.iso_rooted(&munn_graph(2, &w)).unwrap());
    }

    #[test]
    fn bicyclic_identity_approximant_is_a_ray() {
        let p = Presentation::bicyclic();
        for k in 1..=6 {
            let app = approximate(&p, &Word::empty(), &b(k, 100_000));
            assert_eq!(app.rounds_done, k);
            assert!(!app.saturated);
            assert_eq!(app.graph.vertex_count(), k + 1);
            assert_eq!(app.graph.alpha(), 0);
            assert_eq!(app.graph.beta(), 0);
            for i in 0..k as u32 {
                assert_eq!(app.graph.step(i, Letter::pos(0)), Some(i + 1));
            }
            assert_eq!(app.graph.step(k as u32, Letter::pos(0)), None);
        }
    }

    #[test]
    fn collapsing_relation_saturates() {
        // Inv<a | a = 1>: the expansion glues Lin(1) across the a-edge,
        // leaving one vertex with an a-loop.
        let p = parse_presentation("gens: a ;\nrels: a = 1 ;").unwrap();
        let al = p.alphabet().clone();
        let app = approximate(&p, &word(&al, "a"), &b(10, 100));
        assert!(app.saturated);
        assert_eq!(app.graph.vertex_count(), 1);
        assert_eq!(app.graph.step(0, Letter::pos(0)), Some(0));
    }

    #[test]
    fn vertex_budget_marks_limit() {
        let p = Presentation::bicyclic();
        let app = approximate(&p, &Word::empty(), &b(50, 10));
        assert!(app.vertex_limit_hit);
        assert!(!app.saturated);
        assert!(app.graph.vertex_count() <= 11);
    }

    #[test]
    fn test_geq_examples() {
        let fim = Presentation::free_inverse(2);
        let al = fim.alphabet().clone();
        assert_eq!(
            test_geq(&fim, &word(&al, "a"), &word(&al, "a a^-1 a"), &b(4, 100)),
            TriBool::Confirmed
        );

        let bi = Presentation::bicyclic();
        let ba = bi.alphabet().clone();
        assert_eq!(
            test_geq(&bi, &Word::empty(), &word(&ba, "a^-1 a"), &b(4, 100)),
            TriBool::Confirmed
        );
        for budget in [1, 5, 10, 20] {
            assert_eq!(
                test_geq(
                    &bi,
                    &word(&ba, "a^-1 a"),
                    &Word::empty(),
                    &b(budget, 10_000)
                ),
                TriBool::Unknown
            );
        }
    }

    #[test]
    fn test_equal_examples() {
        let fim = Presentation::free_inverse(2);
        let al = fim.alphabet().clone();
        assert_eq!(
            test_equal(
                &fim,
                &word(&al, "a a^-1 a"),
                &word(&al, "a"),
                &b(4, 100),
                None
            ),
            TriBool::Confirmed
        );
        let fg = free_group_oracle(2);
        assert_eq!(
            test_equal(
                &fim,
                &word(&al, "a"),
                &word(&al, "b"),
                &b(4, 100),
                Some(&fg)
            ),
            TriBool::Refuted
        );
        // aa^-1 = 1 fails in the free inverse monoid but has trivial group
        // image: unknown without Munn refinement, refuted with it.
        assert_eq!(
            test_equal(
                &fim,
                &word(&al, "a a^-1"),
                &Word::empty(),
                &b(6, 100),
                Some(&fg)
            ),
            TriBool::Unknown
        );
        assert_eq!(
            munn_refined_equal(&fim, &word(&al, "a a^-1"), &Word::empty(), &b(6, 100)),
            TriBool::Refuted
        );
    }

    #[test]
    fn test_right_unit_examples() {
        let bi = Presentation::bicyclic();
        let al = bi.alphabet().clone();
        assert_eq!(
            test_right_unit(&bi, &word(&al, "a"), &b(6, 1000)),
            TriBool::Confirmed
        );
        for budget in [5, 10, 20] {
            assert_eq!(
                test_right_unit(&bi, &word(&al, "a^-1"), &b(budget, 20_000)),
                TriBool::Unknown
            );
        }
        assert_eq!(
            test_right_unit(&bi, &Word::empty(), &b(2, 10)),
            TriBool::Confirmed
        );
    }

    #[test]
    fn munn_graph_examples() {
        let al = Alphabet::new(vec!["a".into()]);
        let g = munn_graph(1, &word(&al, "a a^-1"));
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.alpha(), g.beta());

        assert!(fim_equal(1, &word(&al, "a"), &word(&al, "a a^-1 a")));
        assert_eq!(munn_graph(1, &Word::empty()).vertex_count(), 1);
    }

    #[test]
    fn confirmed_matches_munn_oracle_on_short_words() {
        // Scaled-down version of the exhaustive agreement suite: length <= 4.
        let p = Presentation::free_inverse(2);
        let words: Vec<Word> = words_up_to(2, 4).collect();
        let budget = b(2, 200);
        let apps: Vec<XGraph> = words
            .iter()
            .map(|w| approximate(&p, w, &budget).graph)
            .collect();
        for (i, u) in words.iter().enumerate() {
            for (j, w) in words.iter().enumerate() {
                let confirmed = apps[j].read(apps[j].alpha(), u).unwrap() == Some(apps[j].beta())
                    && apps[i].read(apps[i].alpha(), w).unwrap() == Some(apps[i].beta());
                assert_eq!(confirmed, fim_equal(2, u, w), "u={:?} w={:?}", u, w);
            }
        }
    }

    #[test]
    fn budget_monotonicity_preserves_confirmed() {
        let p = Presentation::bicyclic();
        let al = p.alphabet().clone();
        let pairs = [
            ("a a^-1", "1"),
            ("a a^-1 a", "a"),
            ("1", "a^-1 a"),
            ("a a a^-1", "a"),
        ];
        for (u, w) in pairs {
            let u = word(&al, u);
            let w = word(&al, w);
            let mut confirmed_at = None;
            for rounds in 1..=8 {
                let r = test_geq(&p, &u, &w, &b(rounds, 10_000));
                if confirmed_at.is_some() {
                    assert_eq!(r, TriBool::Confirmed, "u={u:?} w={w:?} rounds={rounds}");
                } else if r == TriBool::Confirmed {
                    confirmed_at = Some(rounds);
                }
            }
        }
    }

    #[test]
    fn approximants_grow_monotonically() {
        // The round-i graph maps label-preservingly into the round-(i+1)
        // graph with roots to roots.
        let p = Presentation::bicyclic();
        let scary = crate::presentation::fixture_onerelator_scary();
        let cases: Vec<(&Presentation, Word)> = vec![
            (&p, Word::empty()),
            (&p, word(p.alphabet(), "a^-1 a")),
            (&scary, Word::empty()),
        ];
        for (pres, w) in cases {
            for i in 1..4 {
                let gi = approximate(pres, &w, &b(i, 100_000)).graph;
                let gj = approximate(pres, &w, &b(i + 1, 100_000)).graph;
                assert!(morphism_exists(&gi, &gj), "round {i} for {w:?}");
            }
        }
    }

    /// Label-preserving root-to-root morphism test by parallel BFS.
    fn morphism_exists(small: &XGraph, big: &XGraph) -> bool {
        let mut map = vec![u32::MAX; small.vertex_count()];
        map[small.alpha() as usize] = big.alpha();
        let mut queue = std::collections::VecDeque::from([small.alpha()]);
        while let Some(u) = queue.pop_front() {
            for &(l, v) in small.neighbors(u) {
                let mv = match big.step(map[u as usize], l) {
                    Some(x) => x,
                    None => return false,
                };
                if map[v as usize] == u32::MAX {
                    map[v as usize] = mv;
                    queue.push_back(v);
                } else if map[v as usize] != mv {
                    return false;
                }
            }
        }
        map[small.beta() as usize] == big.beta()
    }

    #[test]
    fn scan_order_confluence_on_saturating_presentations() {
        let cases = [
            ("gens: a ;\nrels: a = 1 ;", "a a"),
            ("gens: a ;\nrels: a = 1 ;", "1"),
            // a is an idempotent: two-vertex graph with an a-loop.
            ("gens: a ;\nrels: a a = a ;", "a"),
            ("gens: a b ;", "a b b^-1 a^-1 a"),
            // The cyclic group of order 3: a triangle.
            (
                "gens: a ;\nrels: a a^-1 = 1 , a^-1 a = 1 , a a a = 1 ;",
                "a",
            ),
        ];
        for (pres, w) in cases {
            let p = parse_presentation(pres).unwrap();
            let w = p.parse_word(w).unwrap();
            let budget = b(30, 10_000);
            let fwd = approximate_ordered(&p, &w, &budget, false);
            let rev = approximate_ordered(&p, &w, &budget, true);
            assert!(fwd.saturated && rev.saturated, "{pres} {w:?}");
            assert!(fwd.graph.iso_rooted(&rev.graph).unwrap());
        }
    }
}
