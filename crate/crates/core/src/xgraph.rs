//! Birooted involutive edge-labeled graphs and the fold (determinization)
//! kernel.
//!
//! An `XGraph` is a directed graph with edges labeled by `X ∪ X⁻¹` in which
//! every edge `(u, x, v)` has an inverse twin `(v, x⁻¹, u)`; the twin is
//! inserted automatically so involution closure holds by construction. Linear
//! graphs of words, Munn trees, and Stephen approximants all live here.
//!
//! Folding identifies pairs of equally labeled edges sharing a source until
//! the graph is deterministic. It is implemented with union-find plus a
//! worklist ([`FoldArena`]), the usual near-linear Stallings kernel, and the
//! result is independent of the order in which conflicts are processed.

use std::collections::VecDeque;

use thiserror::Error;

use crate::words::{Letter, Word};

const NONE: u32 = u32::MAX;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum XGraphError {
    #[error("operation requires a deterministic graph")]
    Nondeterministic,
    #[error("vertex {0} out of range")]
    BadVertex(u32),
}

/// Extended natural number: a path distance that may be infinite.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtNat {
    Fin(u64),
    Inf,
}

impl ExtNat {
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Fin(d) => Some(d),
            ExtNat::Inf => None,
        }
    }
}

impl PartialOrd for ExtNat {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtNat {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (ExtNat::Fin(a), ExtNat::Fin(b)) => a.cmp(b),
            (ExtNat::Fin(_), ExtNat::Inf) => std::cmp::Ordering::Less,
            (ExtNat::Inf, ExtNat::Fin(_)) => std::cmp::Ordering::Greater,
            (ExtNat::Inf, ExtNat::Inf) => std::cmp::Ordering::Equal,
        }
    }
}

/// Birooted involutive edge-labeled graph.
///
/// Adjacency lists are kept sorted by letter then target, with both
/// directions of each involutive pair stored, so lookups never need a
/// separate reverse index. Parallel equally-labeled edges are allowed until
/// [`XGraph::determinize`] removes them.
#[derive(Clone, Debug)]
pub struct XGraph {
    alphabet_size: usize,
    adj: Vec<Vec<(Letter, u32)>>,
    alpha: u32,
    beta: u32,
    deterministic: bool,
}

impl XGraph {
    pub fn new(alphabet_size: usize) -> Self {
        XGraph {
            alphabet_size,
            adj: vec![Vec::new()],
            alpha: 0,
            beta: 0,
            deterministic: true,
        }
    }

    /// The linear graph of `w`: a single path reading `w` from alpha to beta,
    /// with `|w| + 1` vertices.
    pub fn linear(alphabet_size: usize, w: &Word) -> Self {
        let mut g = XGraph::new(alphabet_size);
        let mut cur = 0;
        for &l in w.letters() {
            let next = g.add_vertex();
            g.add_edge(cur, l, next);
            cur = next;
        }
        g.beta = cur;
        g
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    pub fn set_roots(&mut self, alpha: u32, beta: u32) {
        assert!((alpha as usize) < self.adj.len() && (beta as usize) < self.adj.len());
        self.alpha = alpha;
        self.beta = beta;
    }

    pub fn is_deterministic(&self) -> bool {
        self.deterministic
    }

    pub fn add_vertex(&mut self) -> u32 {
        self.adj.push(Vec::new());
        (self.adj.len() - 1) as u32
    }

    /// Insert the edge `(u, l, v)` together with its inverse twin. Duplicate
    /// edges are ignored.
    pub fn add_edge(&mut self, u: u32, l: Letter, v: u32) {
        self.insert_half(u, l, v);
        self.insert_half(v, l.inv(), u);
    }

    fn insert_half(&mut self, u: u32, l: Letter, v: u32) {
        let list = &mut self.adj[u as usize];
        match list.binary_search(&(l, v)) {
            Ok(_) => {}
            Err(pos) => {
                list.insert(pos, (l, v));
                // A second target under the same letter breaks determinism.
                if self.deterministic {
                    let clash = (pos > 0 && list[pos - 1].0 == l)
                        || (pos + 1 < list.len() && list[pos + 1].0 == l);
                    if clash {
                        self.deterministic = false;
                    }
                }
            }
        }
    }

    /// All edges `(source, letter, target)`, both orientations included.
    pub fn edges(&self) -> impl Iterator<Item = (u32, Letter, u32)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&(l, v)| (u as u32, l, v)))
    }

    pub fn neighbors(&self, u: u32) -> &[(Letter, u32)] {
        &self.adj[u as usize]
    }

    /// Unique `l`-successor of `u` in a deterministic graph.
    pub fn step(&self, u: u32, l: Letter) -> Option<u32> {
        let list = &self.adj[u as usize];
        let start = list.partition_point(|&(e, _)| e < l);
        if start < list.len() && list[start].0 == l {
            Some(list[start].1)
        } else {
            None
        }
    }

    /// Endpoint of the unique `w`-labeled path from `start`, or `None` if the
    /// reading fails. Rejects nondeterministic graphs.
    pub fn read(&self, start: u32, w: &Word) -> Result<Option<u32>, XGraphError> {
        if !self.deterministic {
            return Err(XGraphError::Nondeterministic);
        }
        if (start as usize) >= self.adj.len() {
            return Err(XGraphError::BadVertex(start));
        }
        let mut cur = start;
        for &l in w.letters() {
            match self.step(cur, l) {
                Some(next) => cur = next,
                None => return Ok(None),
            }
        }
        Ok(Some(cur))
    }

    /// Unweighted path distance; `Inf` across components.
    pub fn path_metric(&self, u: u32, v: u32) -> ExtNat {
        if u == v {
            return ExtNat::Fin(0);
        }
        let mut dist = vec![NONE; self.adj.len()];
        dist[u as usize] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            let d = dist[x as usize];
            for &(_, y) in &self.adj[x as usize] {
                if dist[y as usize] == NONE {
                    dist[y as usize] = d + 1;
                    if y == v {
                        return ExtNat::Fin((d + 1) as u64);
                    }
                    queue.push_back(y);
                }
            }
        }
        ExtNat::Inf
    }

    /// BFS distances from `u` to every vertex (`NONE` = unreachable).
    pub fn distances_from(&self, u: u32) -> Vec<u32> {
        let mut dist = vec![NONE; self.adj.len()];
        dist[u as usize] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            let d = dist[x as usize];
            for &(_, y) in &self.adj[x as usize] {
                if dist[y as usize] == NONE {
                    dist[y as usize] = d + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Fold until deterministic. Returns the folded graph and the map from
    /// input vertices onto output vertices; roots map to roots. The result
    /// does not depend on the fold order.
    pub fn determinize(&self) -> (XGraph, Vec<u32>) {
        let mut arena = FoldArena::new(self.alphabet_size);
        for _ in 0..self.adj.len() {
            arena.add_vertex();
        }
        for (u, l, v) in self.edges() {
            if !l.inverse {
                arena.add_edge(u, l, v);
            }
        }
        arena.process();
        let (g, map) = arena.export(self.alpha, self.beta);
        (g, map)
    }

    /// Disjoint union of `g1` and `g2` with `v1` (in `g1`) identified with
    /// `v2` (in `g2`), roots taken as `alpha` of `g1` and `beta` of `g2`.
    /// The result is generally nondeterministic; callers fold it.
    pub fn wedge(g1: &XGraph, g2: &XGraph, v1: u32, v2: u32) -> XGraph {
        assert_eq!(g1.alphabet_size, g2.alphabet_size);
        let n1 = g1.adj.len() as u32;
        let mut g = XGraph::new(g1.alphabet_size);
        for _ in 1..(n1 as usize + g2.adj.len() - 1) {
            g.add_vertex();
        }
        // g2 vertex ids shift by n1 - 1 positions after v2 collapses onto v1.
        let map2 = |v: u32| -> u32 {
            if v == v2 {
                v1
            } else if v < v2 {
                n1 + v
            } else {
                n1 + v - 1
            }
        };
        for (u, l, v) in g1.edges() {
            if !l.inverse {
                g.add_edge(u, l, v);
            }
        }
        for (u, l, v) in g2.edges() {
            if !l.inverse {
                g.add_edge(map2(u), l, map2(v));
            }
        }
        g.set_roots(g1.alpha, map2(g2.beta));
        g
    }

    /// Birooted label-preserving isomorphism test by parallel BFS from the
    /// roots. Rejects nondeterministic inputs.
    pub fn iso_rooted(&self, other: &XGraph) -> Result<bool, XGraphError> {
        if !self.deterministic || !other.deterministic {
            return Err(XGraphError::Nondeterministic);
        }
        if self.alphabet_size != other.alphabet_size || self.adj.len() != other.adj.len() {
            return Ok(false);
        }
        let n = self.adj.len();
        let mut map = vec![NONE; n];
        let mut seen_other = vec![false; n];
        map[self.alpha as usize] = other.alpha;
        seen_other[other.alpha as usize] = true;
        let mut queue = VecDeque::new();
        queue.push_back(self.alpha);
        let mut visited = 1usize;
        while let Some(u) = queue.pop_front() {
            let mu = map[u as usize];
            for code in 0..2 * self.alphabet_size {
                let l = Letter::from_code(code);
                match (self.step(u, l), other.step(mu, l)) {
                    (None, None) => {}
                    (Some(v), Some(mv)) => {
                        if map[v as usize] == NONE {
                            if seen_other[mv as usize] {
                                return Ok(false);
                            }
                            map[v as usize] = mv;
                            seen_other[mv as usize] = true;
                            visited += 1;
                            queue.push_back(v);
                        } else if map[v as usize] != mv {
                            return Ok(false);
                        }
                    }
                    _ => return Ok(false),
                }
            }
        }
        Ok(visited == n && map[self.beta as usize] == other.beta)
    }

    /// Canonical form under birooted isomorphism: vertices renumbered in
    /// BFS-from-alpha order with letters scanned in their fixed order, then
    /// serialized. Two deterministic graphs are `iso_rooted` exactly when
    /// their keys are equal (for connected graphs).
    pub fn canonical_key(&self) -> Result<Vec<u32>, XGraphError> {
        if !self.deterministic {
            return Err(XGraphError::Nondeterministic);
        }
        let n = self.adj.len();
        let mut order = vec![NONE; n];
        order[self.alpha as usize] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(self.alpha);
        let mut next_id = 1u32;
        let mut key = Vec::with_capacity(n * 2 * self.alphabet_size + 2);
        while let Some(u) = queue.pop_front() {
            for code in 0..2 * self.alphabet_size {
                match self.step(u, Letter::from_code(code)) {
                    Some(v) => {
                        if order[v as usize] == NONE {
                            order[v as usize] = next_id;
                            next_id += 1;
                            queue.push_back(v);
                        }
                        key.push(order[v as usize] + 1);
                    }
                    None => key.push(0),
                }
            }
        }
        key.push(next_id);
        key.push(order[self.beta as usize]);
        Ok(key)
    }

    /// True iff every edge has its inverse twin present.
    pub fn involution_closed(&self) -> bool {
        self.edges()
            .all(|(u, l, v)| self.adj[v as usize].binary_search(&(l.inv(), u)).is_ok())
    }

    /// DOT rendering: one directed edge per positive letter; alpha drawn as a
    /// doublecircle, beta as a square (alpha wins if the roots coincide).
    pub fn to_dot(&self, names: &[String]) -> String {
        let mut out = String::from("digraph xgraph {\n");
        for v in 0..self.adj.len() as u32 {
            let shape = if v == self.alpha {
                "doublecircle"
            } else if v == self.beta {
                "square"
            } else {
                "circle"
            };
            out.push_str(&format!("  {} [shape={}];\n", v, shape));
        }
        for (u, l, v) in self.edges() {
            if !l.inverse {
                out.push_str(&format!(
                    "  {} -> {} [label=\"{}\"];\n",
                    u, v, names[l.gen as usize]
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Union-find fold arena: the mutable working state of determinization and of
/// Stephen's procedure. Each class root carries a dense slot table
/// (letter code → target) plus an optional `u64` payload merged by OR (used
/// to track which relator loops are already attached to a vertex).
pub(crate) struct FoldArena {
    width: usize,
    parent: Vec<u32>,
    size: Vec<u32>,
    /// Earliest-created raw vertex in each class; gives the stable export order.
    min_id: Vec<u32>,
    slots: Vec<u32>,
    payload: Vec<u64>,
    pending: Vec<(u32, u32)>,
    alive: usize,
}

impl FoldArena {
    pub fn new(alphabet_size: usize) -> Self {
        FoldArena {
            width: 2 * alphabet_size,
            parent: Vec::new(),
            size: Vec::new(),
            min_id: Vec::new(),
            slots: Vec::new(),
            payload: Vec::new(),
            pending: Vec::new(),
            alive: 0,
        }
    }

    pub fn alive(&self) -> usize {
        self.alive
    }

    pub fn add_vertex(&mut self) -> u32 {
        let id = self.parent.len() as u32;
        self.parent.push(id);
        self.size.push(1);
        self.min_id.push(id);
        self.payload.push(0);
        self.slots.extend(std::iter::repeat_n(NONE, self.width));
        self.alive += 1;
        id
    }

    pub fn find(&mut self, mut v: u32) -> u32 {
        while self.parent[v as usize] != v {
            let p = self.parent[v as usize];
            self.parent[v as usize] = self.parent[p as usize];
            v = p;
        }
        v
    }

    fn slot(&self, root: u32, code: usize) -> u32 {
        self.slots[root as usize * self.width + code]
    }

    fn set_slot(&mut self, root: u32, code: usize, target: u32) {
        let idx = root as usize * self.width + code;
        let cur = self.slots[idx];
        if cur == NONE {
            self.slots[idx] = target;
        } else {
            let a = self.find(cur);
            let b = self.find(target);
            if a != b {
                self.pending.push((a, b));
            }
        }
    }

    /// Insert an involutive edge pair. `l` may be either orientation.
    pub fn add_edge(&mut self, u: u32, l: Letter, v: u32) {
        let ru = self.find(u);
        let rv = self.find(v);
        self.set_slot(ru, l.code(), rv);
        let rv = self.find(rv);
        let ru = self.find(ru);
        self.set_slot(rv, l.inv().code(), ru);
    }

    pub fn enqueue_union(&mut self, u: u32, v: u32) {
        let a = self.find(u);
        let b = self.find(v);
        if a != b {
            self.pending.push((a, b));
        }
    }

    pub fn get_payload(&mut self, v: u32) -> u64 {
        let r = self.find(v);
        self.payload[r as usize]
    }

    pub fn or_payload(&mut self, v: u32, bits: u64) {
        let r = self.find(v);
        self.payload[r as usize] |= bits;
    }

    /// Drain the pending-union worklist, merging slot tables and re-queueing
    /// any conflicts the merges expose.
    pub fn process(&mut self) {
        while let Some((a, b)) = self.pending.pop() {
            let ra = self.find(a);
            let rb = self.find(b);
            if ra == rb {
                continue;
            }
            let (keep, drop) = if self.size[ra as usize] >= self.size[rb as usize] {
                (ra, rb)
            } else {
                (rb, ra)
            };
            self.parent[drop as usize] = keep;
            self.size[keep as usize] += self.size[drop as usize];
            self.min_id[keep as usize] = self.min_id[keep as usize].min(self.min_id[drop as usize]);
            self.payload[keep as usize] |= self.payload[drop as usize];
            self.alive -= 1;
            for code in 0..self.width {
                let t = self.slots[drop as usize * self.width + code];
                if t != NONE {
                    self.set_slot(keep, code, t);
                }
            }
        }
    }

    /// Unique successor under a letter, if present. Only meaningful once
    /// `process()` has drained the worklist.
    pub fn step(&mut self, u: u32, l: Letter) -> Option<u32> {
        let r = self.find(u);
        let t = self.slot(r, l.code());
        if t == NONE {
            None
        } else {
            Some(self.find(t))
        }
    }

    pub fn read(&mut self, start: u32, w: &Word) -> Option<u32> {
        let mut cur = self.find(start);
        for &l in w.letters() {
            cur = self.step(cur, l)?;
        }
        Some(cur)
    }

    /// Class roots ordered by earliest-created member; this is the stable
    /// vertex numbering used by exports and by deterministic scans.
    pub fn roots_in_order(&mut self) -> Vec<u32> {
        let mut roots: Vec<u32> = (0..self.parent.len() as u32)
            .filter(|&v| self.parent[v as usize] == v)
            .collect();
        roots.sort_by_key(|&r| self.min_id[r as usize]);
        roots
    }

    /// Compact into a deterministic `XGraph` plus the raw-vertex → new-vertex map.
    pub fn export(&mut self, alpha: u32, beta: u32) -> (XGraph, Vec<u32>) {
        assert!(self.pending.is_empty());
        let roots = self.roots_in_order();
        let mut new_id = vec![NONE; self.parent.len()];
        for (i, &r) in roots.iter().enumerate() {
            new_id[r as usize] = i as u32;
        }
        let mut g = XGraph::new(self.width / 2);
        for _ in 1..roots.len() {
            g.add_vertex();
        }
        for &r in &roots {
            for code in 0..self.width {
                let l = Letter::from_code(code);
                if l.inverse {
                    continue;
                }
                let t = self.slot(r, code);
                if t != NONE {
                    let t = self.find(t);
                    g.add_edge(new_id[r as usize], l, new_id[t as usize]);
                }
            }
        }
        let map: Vec<u32> = (0..self.parent.len() as u32)
            .map(|v| new_id[self.find(v) as usize])
            .collect();
        g.set_roots(map[alpha as usize], map[beta as usize]);
        g.deterministic = true;
        (g, map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;
    use proptest::prelude::*;

    fn ab() -> Alphabet {
        Alphabet::new(vec!["a".into(), "b".into(), "c".into()])
    }

    fn w(s: &str) -> Word {
        ab().parse_word(s).unwrap()
    }

    #[test]
    fn linear_graph_examples() {
        let g = XGraph::linear(2, &w("a b"));
        assert_eq!(g.vertex_count(), 3);
        assert_eq!((g.alpha(), g.beta()), (0, 2));
        assert!(g.involution_closed());

        let g = XGraph::linear(2, &Word::empty());
        assert_eq!(g.vertex_count(), 1);
        assert_eq!((g.alpha(), g.beta()), (0, 0));
        assert_eq!(g.edges().count(), 0);

        let g = XGraph::linear(2, &w("a a^-1"));
        assert_eq!(g.vertex_count(), 3);
        // Vertex 1 carries a^-1-edges to both 0 and 2.
        assert!(!g.is_deterministic());
    }

    #[test]
    fn determinize_forced_folds() {
        let (g, map) = XGraph::linear(2, &w("a a^-1")).determinize();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(map[0], map[2]);
        assert_eq!((g.alpha(), g.beta()), (map[0], map[2]));

        // Already-deterministic graphs come back unchanged up to the identity map.
        let lin = XGraph::linear(2, &w("a b"));
        let (g, map) = lin.determinize();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(map, vec![0, 1, 2]);
        assert!(lin.iso_rooted(&g).unwrap());

        // Wedge of two copies of Lin(a) at alpha folds to a single a-edge.
        let l1 = XGraph::linear(2, &w("a"));
        let l2 = XGraph::linear(2, &w("a"));
        let mut wedge = XGraph::wedge(&l1, &l2, l1.alpha(), l2.alpha());
        wedge.set_roots(0, 0);
        let (g, _) = wedge.determinize();
        assert_eq!(g.vertex_count(), 2);
    }

    #[test]
    fn read_examples() {
        let (g, _) = XGraph::linear(2, &w("a b")).determinize();
        assert_eq!(g.read(0, &w("a b")).unwrap(), Some(2));
        assert_eq!(g.read(0, &w("b")).unwrap(), None);
        assert_eq!(g.read(2, &w("b^-1 a^-1")).unwrap(), Some(0));

        let nondet = XGraph::linear(2, &w("a a^-1"));
        assert_eq!(nondet.read(0, &w("a")), Err(XGraphError::Nondeterministic));
    }

    #[test]
    fn path_metric_examples() {
        let g = XGraph::linear(3, &w("a b c"));
        assert_eq!(g.path_metric(0, 3), ExtNat::Fin(3));
        assert_eq!(g.path_metric(2, 2), ExtNat::Fin(0));

        let mut two_points = XGraph::new(1);
        two_points.add_vertex();
        assert_eq!(two_points.path_metric(0, 1), ExtNat::Inf);
    }

    #[test]
    fn iso_rooted_examples() {
        let (g, _) = XGraph::linear(2, &w("a b")).determinize();
        assert!(g.iso_rooted(&g).unwrap());

        let (ga, _) = XGraph::linear(2, &w("a")).determinize();
        let (gb, _) = XGraph::linear(2, &w("b")).determinize();
        assert!(!ga.iso_rooted(&gb).unwrap());

        // a a^-1 a folds to the same birooted graph as a.
        let (g1, _) = XGraph::linear(2, &w("a a^-1 a")).determinize();
        assert_eq!(g1.vertex_count(), 2);
        assert!(g1.iso_rooted(&ga).unwrap());
        assert_eq!(g1.canonical_key().unwrap(), ga.canonical_key().unwrap());
    }

    #[test]
    fn determinize_idempotent() {
        for word in ["a a^-1 b c c^-1", "a b b^-1 a^-1 a", "c a a^-1 c^-1"] {
            let (g1, _) = XGraph::linear(3, &w(word)).determinize();
            let (g2, _) = g1.determinize();
            assert!(g1.iso_rooted(&g2).unwrap());
        }
    }

    /// Random connected involutive multigraph on at most `n` vertices:
    /// a random spanning tree plus random extra edges.
    fn random_graph(seed: u64, n: usize, alphabet: usize) -> XGraph {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut g = XGraph::new(alphabet);
        let n = 1 + rng.gen_range(0..n);
        for _ in 1..n {
            g.add_vertex();
        }
        for v in 1..n {
            let u = rng.gen_range(0..v) as u32;
            let l = Letter::from_code(rng.gen_range(0..2 * alphabet));
            g.add_edge(u, l, v as u32);
        }
        let extra = rng.gen_range(0..n);
        for _ in 0..extra {
            let u = rng.gen_range(0..n) as u32;
            let v = rng.gen_range(0..n) as u32;
            let l = Letter::from_code(rng.gen_range(0..2 * alphabet));
            g.add_edge(u, l, v);
        }
        let alpha = rng.gen_range(0..n) as u32;
        let beta = rng.gen_range(0..n) as u32;
        g.set_roots(alpha, beta);
        g
    }

    /// Rebuild `g` with vertices and edges presented in a shuffled order;
    /// folding then visits conflicts in an unrelated order.
    fn shuffled_copy(g: &XGraph, seed: u64) -> XGraph {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = g.vertex_count();
        let mut perm: Vec<u32> = (0..n as u32).collect();
        perm.shuffle(&mut rng);
        let mut h = XGraph::new(g.alphabet_size());
        for _ in 1..n {
            h.add_vertex();
        }
        let mut edges: Vec<(u32, Letter, u32)> = g.edges().filter(|(_, l, _)| !l.inverse).collect();
        edges.shuffle(&mut rng);
        for (u, l, v) in edges {
            h.add_edge(perm[u as usize], l, perm[v as usize]);
        }
        h.set_roots(perm[g.alpha() as usize], perm[g.beta() as usize]);
        h
    }

    #[test]
    fn fold_confluence_on_random_graphs() {
        let mut nontrivial = 0;
        for seed in 0..1000u64 {
            let g = random_graph(seed, 30, 2);
            let h = shuffled_copy(&g, seed ^ 0xdead_beef);
            let (fg, _) = g.determinize();
            let (fh, _) = h.determinize();
            assert!(fg.iso_rooted(&fh).unwrap(), "seed {seed}");
            if !g.is_deterministic() {
                nontrivial += 1;
            }
            assert!(fg.involution_closed());
        }
        assert!(nontrivial > 200, "want a decent share of real folds");
    }

    #[test]
    fn path_metric_triangle_inequality_sampled() {
        for seed in 0..50u64 {
            let (g, _) = random_graph(seed, 20, 2).determinize();
            let n = g.vertex_count().min(8);
            for u in 0..n as u32 {
                for v in 0..n as u32 {
                    for x in 0..n as u32 {
                        let duv = g.path_metric(u, v);
                        let dux = g.path_metric(u, x);
                        let dxv = g.path_metric(x, v);
                        if let (ExtNat::Fin(a), ExtNat::Fin(b)) = (dux, dxv) {
                            assert!(duv <= ExtNat::Fin(a + b));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dot_output_shapes() {
        let (g, _) = XGraph::linear(2, &w("a b")).determinize();
        let names = vec!["a".to_string(), "b".to_string()];
        let dot = g.to_dot(&names);
        assert!(dot.contains("0 [shape=doublecircle]"));
        assert!(dot.contains("2 [shape=square]"));
        assert!(dot.contains("0 -> 1 [label=\"a\"]"));
        assert!(!dot.contains("a^-1"));
    }

    proptest! {
        #[test]
        fn involution_closure_preserved(seed in 0u64..500) {
            let g = random_graph(seed, 15, 2);
            prop_assert!(g.involution_closed());
            let (f, map) = g.determinize();
            prop_assert!(f.involution_closed());
            prop_assert!(f.is_deterministic());
            prop_assert_eq!(map.len(), g.vertex_count());
            prop_assert_eq!(map[g.alpha() as usize], f.alpha());
            prop_assert_eq!(map[g.beta() as usize], f.beta());
        }
    }
}
