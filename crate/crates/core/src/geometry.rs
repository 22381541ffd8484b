//! Geometry of E-unitary inverse monoids inside their group Cayley graphs:
//! embedded Schützenberger-graph closures restricted to a ball, empirical
//! group-distortion profiles, and prefix-monoid membership.
//!
//! For an E-unitary monoid the Schützenberger graph of `w` embeds in the
//! Cayley graph of the maximal group image as the smallest subgraph that
//! contains the `w`-path at 1 and is closed under completing relation paths
//! between existing vertex pairs. The closure computed here clips any
//! completion that would leave the radius ball and says so: paths that
//! detour outside the ball may be missed, so the result is an honest
//! under-approximation of the embedded graph intersected with the ball.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::oracle::{group_distance, GroupOracle, OracleError};
use crate::presentation::Presentation;
use crate::stephen::{approximate, Approximant, Budget, RightUnitTester, TriBool};
use crate::words::{invert, words_up_to, Letter, Word};
use crate::xgraph::XGraph;

#[derive(Error, Debug)]
pub enum GeometryError {
    #[error("presentation must assert E-unitarity for embedded-geometry operations")]
    EUnitaryRequired,
    #[error("operation requires a special presentation")]
    NotSpecial,
    #[error("oracle alphabet smaller than presentation alphabet")]
    AlphabetMismatch,
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// A finite under-approximation of the embedded Schützenberger graph of `w`
/// inside the group Cayley graph, restricted to the ball of the given radius
/// around 1.
pub struct EmbeddedApproximant {
    /// Subgraph of the Cayley graph; alpha is the vertex of 1, beta the
    /// vertex of `[w]`.
    pub graph: XGraph,
    /// Group normal form of each vertex.
    pub labels: Vec<Word>,
    /// True iff some relation-path completion was suppressed for leaving the ball.
    pub clipped: bool,
    /// True iff a fixpoint was reached (possibly clipped); false on budget stop.
    pub complete: bool,
    pub radius: usize,
}

impl EmbeddedApproximant {
    pub fn vertex_of(&self, nf: &Word) -> Option<u32> {
        self.labels.iter().position(|l| l == nf).map(|i| i as u32)
    }
}

struct ClosureBuilder<'a> {
    o: &'a dyn GroupOracle,
    radius: usize,
    labels: Vec<Word>,
    index: HashMap<Word, u32>,
    adj: Vec<Vec<(Letter, u32)>>,
    /// Shortest generating-path length seen so far; an upper bound on the
    /// group length, and exactly the group length for geodesic oracles.
    est: Vec<usize>,
    geodesic: bool,
    clipped: bool,
}

impl<'a> ClosureBuilder<'a> {
    fn new(o: &'a dyn GroupOracle, radius: usize) -> Result<Self, GeometryError> {
        let identity = o
            .normal_form(&Word::empty())
            .ok_or(OracleError::NormalFormUnavailable(Word::empty()))?;
        let mut b = ClosureBuilder {
            o,
            radius,
            labels: Vec::new(),
            index: HashMap::new(),
            adj: Vec::new(),
            est: Vec::new(),
            geodesic: o.geodesic_normal_forms(),
            clipped: false,
        };
        b.intern(identity, 0);
        Ok(b)
    }

    fn intern(&mut self, nf: Word, est: usize) -> u32 {
        if let Some(&id) = self.index.get(&nf) {
            let est_now = if self.geodesic { nf.len() } else { est };
            if est_now < self.est[id as usize] {
                self.est[id as usize] = est_now;
            }
            return id;
        }
        let id = self.labels.len() as u32;
        let est = if self.geodesic { nf.len() } else { est };
        self.index.insert(nf.clone(), id);
        self.labels.push(nf);
        self.est.push(est);
        self.adj.push(Vec::new());
        id
    }

    fn add_edge(&mut self, u: u32, l: Letter, v: u32) {
        for (src, lab, dst) in [(u, l, v), (v, l.inv(), u)] {
            let list = &mut self.adj[src as usize];
            if let Err(pos) = list.binary_search(&(lab, dst)) {
                list.insert(pos, (lab, dst));
            }
        }
    }

    fn step(&self, u: u32, l: Letter) -> Option<u32> {
        let list = &self.adj[u as usize];
        let at = list.partition_point(|&(e, _)| e < l);
        (at < list.len() && list[at].0 == l).then(|| list[at].1)
    }

    fn read(&self, start: u32, w: &Word) -> Option<u32> {
        let mut cur = start;
        for &l in w.letters() {
            cur = self.step(cur, l)?;
        }
        Some(cur)
    }

    fn nf_mul(&self, base: &Word, l: Letter) -> Result<Word, OracleError> {
        let mut w = base.clone();
        w.push(l);
        self.o
            .normal_form(&w)
            .ok_or(OracleError::NormalFormUnavailable(w))
    }

    /// Lay down a path labeled `w` from vertex `u`, interning every vertex it
    /// visits; no ball restriction (used for the seed path).
    fn add_path_unrestricted(&mut self, u: u32, w: &Word) -> Result<u32, OracleError> {
        let mut cur = u;
        for &l in w.letters() {
            let nf = self.nf_mul(&self.labels[cur as usize], l)?;
            let est = self.est[cur as usize] + 1;
            let next = self.intern(nf, est);
            self.add_edge(cur, l, next);
            cur = next;
        }
        Ok(cur)
    }

    /// Complete a relation path from `u` to `v` if every vertex stays inside
    /// the ball; otherwise record the clip. Returns true if added.
    ///
    /// Without geodesic normal forms, ball membership is judged by length
    /// estimates: a forward walk anchored at every already-known vertex plus
    /// a backward smoothing pass. The estimates upper-bound the true group
    /// length, so clipping errs toward dropping paths, never admitting
    /// outside vertices beyond the honest bound.
    fn complete_path(&mut self, u: u32, w: &Word, v: u32) -> Result<bool, OracleError> {
        let mut nfs: Vec<Word> = Vec::with_capacity(w.len());
        let mut est: Vec<usize> = Vec::with_capacity(w.len());
        let mut cur_nf = self.labels[u as usize].clone();
        let mut cur_est = self.est[u as usize];
        for &l in w.letters() {
            let mut next = cur_nf.clone();
            next.push(l);
            let nf = self
                .o
                .normal_form(&next)
                .ok_or(OracleError::NormalFormUnavailable(next))?;
            cur_est = match self.index.get(&nf) {
                Some(&id) => self.est[id as usize].min(cur_est + 1),
                None => cur_est + 1,
            };
            nfs.push(nf.clone());
            est.push(cur_est);
            cur_nf = nf;
        }
        debug_assert_eq!(
            nfs.last(),
            Some(&self.labels[v as usize]),
            "relation path must land on the vertex the other side reaches"
        );
        for i in (0..est.len().saturating_sub(1)).rev() {
            est[i] = est[i].min(est[i + 1] + 1);
        }
        for (i, nf) in nfs.iter().enumerate() {
            let bound = if self.geodesic { nf.len() } else { est[i] };
            if bound > self.radius {
                self.clipped = true;
                return Ok(false);
            }
        }
        let mut cur = u;
        for (i, l) in w.letters().iter().enumerate() {
            let next = self.intern(nfs[i].clone(), est[i]);
            self.add_edge(cur, *l, next);
            cur = next;
        }
        Ok(true)
    }
}

/// Grow the embedded closure of the `w`-path at 1 inside the radius ball.
///
/// The seed path itself is laid down unconditionally; relation-path
/// completions are clipped at the ball boundary. Stops at a fixpoint or when
/// the budget (rounds or vertices) runs out.
pub fn embedded_closure(
    p: &Presentation,
    w: &Word,
    o: &dyn GroupOracle,
    radius: usize,
    b: &Budget,
) -> Result<EmbeddedApproximant, GeometryError> {
    if !p.e_unitary_asserted {
        return Err(GeometryError::EUnitaryRequired);
    }
    if !o.supports_normal_forms() {
        return Err(GeometryError::Oracle(OracleError::NormalFormUnavailable(
            Word::empty(),
        )));
    }
    if o.alphabet_size() < p.generator_count() {
        return Err(GeometryError::AlphabetMismatch);
    }
    let mut builder = ClosureBuilder::new(o, radius)?;
    let beta = builder.add_path_unrestricted(0, w)?;
    let mut complete = false;
    'rounds: for _ in 0..b.max_rounds {
        let mut changed = false;
        let snapshot = builder.labels.len() as u32;
        for (lhs, rhs) in p.relations() {
            for (have, want) in [(lhs, rhs), (rhs, lhs)] {
                if want.is_empty() {
                    // The other side's endpoint is forced to be its start in
                    // the embedded graph; nothing to complete.
                    continue;
                }
                for u in 0..snapshot {
                    if let Some(v) = builder.read(u, have) {
                        if builder.read(u, want) != Some(v) && builder.complete_path(u, want, v)? {
                            changed = true;
                        }
                    }
                    if builder.labels.len() > b.max_vertices {
                        break 'rounds;
                    }
                }
            }
        }
        if !changed {
            complete = true;
            break;
        }
    }
    let mut graph = XGraph::new(p.generator_count());
    for _ in 1..builder.labels.len() {
        graph.add_vertex();
    }
    for (u, list) in builder.adj.iter().enumerate() {
        for &(l, v) in list {
            if !l.inverse {
                graph.add_edge(u as u32, l, v);
            }
        }
    }
    graph.set_roots(0, beta);
    Ok(EmbeddedApproximant {
        graph,
        labels: builder.labels,
        clipped: builder.clipped,
        complete,
        radius,
    })
}

/// Group normal form of every vertex of a Stephen approximant, computed by a
/// BFS from alpha with incremental normalization.
pub fn sigma_labels(g: &XGraph, o: &dyn GroupOracle) -> Result<Vec<Word>, GeometryError> {
    let identity = o
        .normal_form(&Word::empty())
        .ok_or(OracleError::NormalFormUnavailable(Word::empty()))?;
    let mut labels: Vec<Option<Word>> = vec![None; g.vertex_count()];
    labels[g.alpha() as usize] = Some(identity);
    let mut queue = std::collections::VecDeque::from([g.alpha()]);
    while let Some(u) = queue.pop_front() {
        let base = labels[u as usize].clone().expect("visited");
        for &(l, v) in g.neighbors(u) {
            if labels[v as usize].is_none() {
                let mut w = base.clone();
                w.push(l);
                let nf = o
                    .normal_form(&w)
                    .ok_or(OracleError::NormalFormUnavailable(w))?;
                labels[v as usize] = Some(nf);
                queue.push_back(v);
            }
        }
    }
    Ok(labels
        .into_iter()
        .map(|l| l.expect("approximant graphs are connected"))
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct DistortionRow {
    /// Group distance bucket.
    pub r: u64,
    /// Maximum approximant distance over pairs at group distance <= r.
    pub phi_hat: u64,
    /// Normal forms of a pair attaining the maximum.
    pub witness: [String; 2],
}

/// Empirical distortion profile of one Schützenberger approximant.
///
/// Approximant distances are upper bounds for true Schützenberger-graph
/// distances, and group distances are exact, so `phi_hat` is an empirical
/// upper-bound profile of the distortion function restricted to the pairs
/// the budget reached.
#[derive(Clone, Debug, Serialize)]
pub struct DistortionTable {
    pub radius: usize,
    pub budget: (usize, usize),
    /// True iff some pair's group distance exceeded `radius` and was dropped.
    pub clipped: bool,
    pub rows: Vec<DistortionRow>,
}

impl DistortionTable {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    /// Plain-text aligned rendering for terminals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "radius {}  budget {}r/{}v  clipped {}\n",
            self.radius, self.budget.0, self.budget.1, self.clipped
        ));
        out.push_str(&format!("{:>6}  {:>8}  witness\n", "d_G", "phi_hat"));
        for row in &self.rows {
            out.push_str(&format!(
                "{:>6}  {:>8}  {} | {}\n",
                row.r, row.phi_hat, row.witness[0], row.witness[1]
            ));
        }
        out
    }
}

/// Compute the distortion profile of the Stephen approximant of `w`: for
/// every vertex pair, the approximant path distance and the exact group
/// distance of the images, bucketed by group distance with a running max.
///
/// Pairs whose group distance exceeds `radius` are dropped and flagged via
/// `clipped`. `oracle_names` label the witness normal forms (the oracle
/// alphabet may extend the presentation's).
pub fn distortion_profile(
    p: &Presentation,
    w: &Word,
    o: &dyn GroupOracle,
    b: &Budget,
    radius: usize,
    oracle_names: &[String],
) -> Result<DistortionTable, GeometryError> {
    if !p.e_unitary_asserted {
        return Err(GeometryError::EUnitaryRequired);
    }
    if o.alphabet_size() < p.generator_count() {
        return Err(GeometryError::AlphabetMismatch);
    }
    let app: Approximant = approximate(p, w, b);
    let g = &app.graph;
    let sigma = sigma_labels(g, o)?;
    let n = g.vertex_count();
    let geodesic = o.geodesic_normal_forms() && o.alphabet_size() == p.generator_count();
    let mut clipped = false;
    let mut pairs: Vec<(u64, u64, u32, u32)> = Vec::new();
    for x in 0..n as u32 {
        let dist = g.distances_from(x);
        for y in x..n as u32 {
            let dhat = dist[y as usize] as u64;
            let dg = if geodesic {
                let diff = invert(&sigma[x as usize]).concat(&sigma[y as usize]);
                let nf = o
                    .normal_form(&diff)
                    .ok_or(OracleError::NormalFormUnavailable(diff))?;
                Some(nf.len())
            } else {
                group_distance(
                    o,
                    &sigma[x as usize],
                    &sigma[y as usize],
                    (dhat as usize).min(radius),
                    p.generator_count(),
                )?
            };
            match dg {
                Some(dg) if dg <= radius => pairs.push((dg as u64, dhat, x, y)),
                _ => clipped = true,
            }
        }
    }
    pairs.sort();
    let mut rows: Vec<DistortionRow> = Vec::new();
    let mut best: Option<(u64, u32, u32)> = None;
    let name_al = crate::words::Alphabet::new(oracle_names.to_vec());
    let print = |v: u32| -> String { name_al.format_word(&sigma[v as usize]) };
    for (dg, dhat, x, y) in pairs {
        if best.map(|(m, _, _)| dhat > m).unwrap_or(true) {
            best = Some((dhat, x, y));
        }
        let (m, bx, by) = best.unwrap();
        match rows.last_mut() {
            Some(row) if row.r == dg => {
                row.phi_hat = m;
                row.witness = [print(bx), print(by)];
            }
            _ => rows.push(DistortionRow {
                r: dg,
                phi_hat: m,
                witness: [print(bx), print(by)],
            }),
        }
    }
    Ok(DistortionTable {
        radius,
        budget: (b.max_rounds, b.max_vertices),
        clipped,
        rows,
    })
}

/// Decide membership of `[g]` in the prefix monoid (the vertex set of the
/// Schützenberger graph of 1 inside the group Cayley graph) of a special
/// presentation.
///
/// Positive path: `g` shows up as a closure vertex. Bounded path: with a
/// distortion bound `phi` in hand, every right unit mapping to `g` has a
/// representative of length at most `phi(l_G(g))`, so enumerate candidates
/// and test them; all candidates refuted by a total tester refutes
/// membership.
pub fn prefix_membership(
    p: &Presentation,
    g_word: &Word,
    o: &dyn GroupOracle,
    phi: Option<&dyn Fn(u64) -> u64>,
    tester: &RightUnitTester,
    radius: usize,
    b: &Budget,
) -> Result<TriBool, GeometryError> {
    if !p.is_special() {
        return Err(GeometryError::NotSpecial);
    }
    if !p.e_unitary_asserted {
        return Err(GeometryError::EUnitaryRequired);
    }
    let g_nf = o
        .normal_form(g_word)
        .ok_or(OracleError::NormalFormUnavailable(g_word.clone()))?;
    if g_nf.is_empty() {
        return Ok(TriBool::Confirmed);
    }
    let closure = embedded_closure(p, &Word::empty(), o, radius, b)?;
    if closure.vertex_of(&g_nf).is_some() {
        return Ok(TriBool::Confirmed);
    }
    let Some(phi) = phi else {
        return Ok(TriBool::Unknown);
    };
    let lg = crate::oracle::group_length(o, g_word, p.generator_count())? as u64;
    let max_len = phi(lg) as usize;
    let mut all_refuted = true;
    let mut any_candidate = false;
    for cand in words_up_to(p.generator_count(), max_len) {
        let nf = o
            .normal_form(&cand)
            .ok_or(OracleError::NormalFormUnavailable(cand.clone()))?;
        if nf != g_nf {
            continue;
        }
        any_candidate = true;
        match tester.test(&cand) {
            TriBool::Confirmed => return Ok(TriBool::Confirmed),
            TriBool::Refuted => {}
            TriBool::Unknown => all_refuted = false,
        }
    }
    // With no candidate at all, no word of admissible length maps to g, so g
    // is not in the image of the R-class of 1 under the bound.
    if tester.total && (all_refuted || !any_candidate) {
        return Ok(TriBool::Refuted);
    }
    Ok(TriBool::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{free_group_oracle, scary_group_oracle};
    use crate::presentation::{fixture_onerelator_scary, Presentation};
    use crate::words::Alphabet;

    fn b(rounds: usize, vertices: usize) -> Budget {
        Budget::new(rounds, vertices)
    }

    #[test]
    fn closure_of_free_monoid_is_the_path() {
        let p = Presentation::free_inverse(2);
        let w = p.parse_word("a b").unwrap();
        let fg = free_group_oracle(2);
        let c = embedded_closure(&p, &w, &fg, 3, &b(5, 100)).unwrap();
        assert_eq!(c.graph.vertex_count(), 3);
        assert!(!c.clipped);
        assert!(c.complete);
        assert_eq!(c.graph.alpha(), 0);
        assert_eq!(c.labels[c.graph.beta() as usize], w);
    }

    #[test]
    fn closure_of_bicyclic_identity_is_clipped_ray() {
        let p = Presentation::bicyclic();
        let fg = free_group_oracle(1);
        for radius in [2usize, 4, 6] {
            let c =
                embedded_closure(&p, &Word::empty(), &fg, radius, &b(radius + 3, 1000)).unwrap();
            assert_eq!(c.graph.vertex_count(), radius + 1, "radius {radius}");
            assert!(c.clipped);
            assert!(c.complete);
            // Vertices are exactly 1, a, ..., a^radius.
            for k in 0..=radius {
                let nf = Word(vec![Letter::pos(0); k]);
                assert!(c.vertex_of(&nf).is_some());
            }
        }
    }

    #[test]
    fn closure_monotone_in_radius_and_budget() {
        let p = Presentation::bicyclic();
        let fg = free_group_oracle(1);
        let mut prev = 0usize;
        for radius in 1..6 {
            let c = embedded_closure(&p, &Word::empty(), &fg, radius, &b(20, 1000)).unwrap();
            assert!(c.graph.vertex_count() >= prev);
            prev = c.graph.vertex_count();
        }
        let small = embedded_closure(&p, &Word::empty(), &fg, 5, &b(2, 1000)).unwrap();
        let large = embedded_closure(&p, &Word::empty(), &fg, 5, &b(9, 1000)).unwrap();
        assert!(small.graph.vertex_count() <= large.graph.vertex_count());
        for l in &small.labels {
            assert!(large.vertex_of(l).is_some());
        }
    }

    #[test]
    fn closure_requires_e_unitary_flag() {
        let mut p = Presentation::bicyclic();
        p.e_unitary_asserted = false;
        let fg = free_group_oracle(1);
        assert!(matches!(
            embedded_closure(&p, &Word::empty(), &fg, 3, &b(3, 100)),
            Err(GeometryError::EUnitaryRequired)
        ));
    }

    #[test]
    fn scary_closure_reaches_the_relator_hexagon() {
        let p = fixture_onerelator_scary();
        let o = scary_group_oracle();
        let c = embedded_closure(&p, &Word::empty(), &o, 4, &b(6, 5000)).unwrap();
        let names = vec!["a".into(), "b".into(), "c".into(), "d".into(), "u".into()];
        let al = Alphabet::new(names);
        for nf in ["1", "b", "u b", "u", "a", "u a"] {
            let nf = al.parse_word(nf).unwrap();
            assert!(c.vertex_of(&nf).is_some(), "missing {:?}", nf);
        }
    }

    #[test]
    fn distortion_profile_on_munn_trees_is_isometric() {
        let p = Presentation::free_inverse(2);
        let fg = free_group_oracle(2);
        for w in ["a b a^-1", "a a b b^-1", "a b"] {
            let w = p.parse_word(w).unwrap();
            let t =
                distortion_profile(&p, &w, &fg, &b(3, 100), 12, &["a".into(), "b".into()]).unwrap();
            assert!(!t.clipped);
            for row in &t.rows {
                assert_eq!(row.phi_hat, row.r, "word {:?}", w);
            }
        }
    }

    #[test]
    fn distortion_profile_on_integers_is_isometric() {
        // Inv<a | aa^-1 = 1, a^-1a = 1> presents the integers; sigma is an
        // isomorphism, so phi_hat(r) = r.
        let text = "gens: a ;\nrels: a a^-1 = 1 , a^-1 a = 1 ;\nflags: e_unitary ;";
        let p = crate::presentation::parse_presentation(text).unwrap();
        let w = p.parse_word("a").unwrap();
        let fg = free_group_oracle(1);
        let t = distortion_profile(&p, &w, &fg, &b(6, 200), 20, &["a".into()]).unwrap();
        assert!(t.rows.len() > 3);
        for row in &t.rows {
            assert_eq!(row.phi_hat, row.r);
        }
    }

    #[test]
    fn distortion_profile_sees_onerelator_growth() {
        // The first distortion pair (u^-1 b, u^-1 a) lies at group distance 2
        // but graph distance 4, and it is reachable within two rounds.
        let p = fixture_onerelator_scary();
        let o = scary_group_oracle();
        let names: Vec<String> = ["a", "b", "c", "d", "u"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let t = distortion_profile(&p, &Word::empty(), &o, &b(2, 5000), 5, &names).unwrap();
        let row2 = t
            .rows
            .iter()
            .find(|r| r.r == 2)
            .expect("row at group distance 2");
        assert!(row2.phi_hat >= 4, "phi_hat(2) = {}", row2.phi_hat);
    }

    #[test]
    fn distortion_rows_reverify() {
        let p = Presentation::bicyclic();
        let fg = free_group_oracle(1);
        let w = p.parse_word("a").unwrap();
        let budget = b(5, 500);
        let names = vec!["a".to_string()];
        let t = distortion_profile(&p, &w, &fg, &budget, 10, &names).unwrap();
        // Re-run and compare: deterministic, and rows monotone.
        let t2 = distortion_profile(&p, &w, &fg, &budget, 10, &names).unwrap();
        assert_eq!(t.to_json(), t2.to_json());
        let mut prev = 0;
        for row in &t.rows {
            assert!(row.phi_hat >= prev);
            prev = row.phi_hat;
        }
        // Every witness pair reproduces its row from scratch: locate the
        // stored normal forms in a fresh approximant, recompute both
        // distances, and compare against the row.
        let app = crate::stephen::approximate(&p, &w, &budget);
        let sigma = sigma_labels(&app.graph, &fg).unwrap();
        let al = crate::words::Alphabet::new(names);
        for row in &t.rows {
            let find = |nf: &str| -> u32 {
                let nf = al.parse_word(nf).unwrap();
                sigma.iter().position(|s| *s == nf).expect("witness vertex") as u32
            };
            let (x, y) = (find(&row.witness[0]), find(&row.witness[1]));
            let dhat = app.graph.path_metric(x, y).finite().unwrap();
            assert_eq!(dhat, row.phi_hat, "row r={}", row.r);
            let diff = invert(&sigma[x as usize]).concat(&sigma[y as usize]);
            let dg = fg.normal_form(&diff).unwrap().len() as u64;
            assert!(
                dg <= row.r,
                "row r={}: witness at group distance {dg}",
                row.r
            );
        }
    }

    #[test]
    fn prefix_membership_bicyclic() {
        let p = Presentation::bicyclic();
        let fg = free_group_oracle(1);
        let budget = b(12, 4000);
        let tester = RightUnitTester::munn_refined(&p, budget);

        let g = p.parse_word("a").unwrap();
        assert_eq!(
            prefix_membership(&p, &g, &fg, None, &tester, 6, &budget).unwrap(),
            TriBool::Confirmed
        );

        let g = p.parse_word("a^-1").unwrap();
        let phi = |n: u64| n;
        assert_eq!(
            prefix_membership(&p, &g, &fg, Some(&phi), &tester, 6, &budget).unwrap(),
            TriBool::Refuted
        );

        assert_eq!(
            prefix_membership(&p, &Word::empty(), &fg, None, &tester, 6, &budget).unwrap(),
            TriBool::Confirmed
        );
    }

    #[test]
    fn prefix_membership_requires_special() {
        let names = vec!["a".to_string()];
        let al = Alphabet::new(names.clone());
        let p = Presentation::new(
            names,
            vec![(al.parse_word("a a").unwrap(), al.parse_word("a").unwrap())],
            true,
        );
        let fg = free_group_oracle(1);
        let budget = b(3, 100);
        let tester = RightUnitTester::budgeted(&p, budget);
        assert!(matches!(
            prefix_membership(&p, &Word::empty(), &fg, None, &tester, 3, &budget),
            Err(GeometryError::NotSpecial)
        ));
    }
}
