//! Finite extended metric spaces, Property A witness verification, weak
//! contractions, and witness transport along bounded-to-one contractions.
//!
//! A witness at parameters `(ε, R, S)` is a family of unit ℓ₁ vectors
//! `ξ_x`, one per point, supported in `B(x, S)`, with `‖ξ_x − ξ_y‖ ≤ ε`
//! whenever `d(x, y) ≤ R`. Given a weak contraction `f : X → Y` that is at
//! most `k`-to-one on each component of `X` and a witness on `Y`, transport
//! produces a witness on `X` at parameters `(ε, R, S′ = k·c·R)` where `c`
//! bounds the cardinality of `S`-balls in `Y`: mass sitting at `p ∈ Y` is
//! moved onto a chosen representative of the `∼_p`-class of `x` inside
//! `C_p = f⁻¹(B(p, S))`, where `∼_p` chains points at distance ≤ R.
//!
//! All identities involved are finite sums, so the whole module is generic
//! over the weight scalar: `f64` for speed, exact rationals for golden tests.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

pub mod gen;
pub mod io;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum PropaError {
    #[error("bad metric space: {0}")]
    BadSpace(String),
    #[error("map is not total or hits a point outside the codomain")]
    MapNotTotal,
    #[error("map increases the distance of pair ({0}, {1})")]
    ContractionViolated(u32, u32),
    #[error("witness rejected: {0}")]
    WitnessInvalid(String),
}

/// Weight scalar for witness vectors.
pub trait Weight: Clone + PartialEq + PartialOrd + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn abs_diff(&self, other: &Self) -> Self;
    fn from_ratio(num: u32, den: u32) -> Self;
    fn to_f64(&self) -> f64;
}

impl Weight for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn abs_diff(&self, other: &Self) -> Self {
        (self - other).abs()
    }
    fn from_ratio(num: u32, den: u32) -> Self {
        num as f64 / den as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Weight for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        BigRational::from_integer(BigInt::from(1))
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn abs_diff(&self, other: &Self) -> Self {
        (self - other).abs()
    }
    fn from_ratio(num: u32, den: u32) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// A finite extended metric space: symmetric, zero diagonal, triangle
/// inequality within components, `∞` exactly across components, and a
/// positive lower bound on distances between distinct points.
#[derive(Clone, Debug)]
pub struct FinExtMetric {
    n: usize,
    dist: Vec<f64>,
    component: Vec<u32>,
}

impl FinExtMetric {
    /// Validate and build from a dense matrix (`None` = infinite).
    pub fn new(matrix: &[Vec<Option<f64>>]) -> Result<Self, PropaError> {
        let n = matrix.len();
        let bad = |msg: String| Err(PropaError::BadSpace(msg));
        if n == 0 {
            return bad("empty space".into());
        }
        let mut dist = vec![f64::INFINITY; n * n];
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return bad(format!("row {i} has length {}", row.len()));
            }
            for (j, &v) in row.iter().enumerate() {
                let v = v.unwrap_or(f64::INFINITY);
                if v.is_nan() || v < 0.0 {
                    return bad(format!("d({i},{j}) = {v}"));
                }
                dist[i * n + j] = v;
            }
        }
        for i in 0..n {
            if dist[i * n + i] != 0.0 {
                return bad(format!("d({i},{i}) nonzero"));
            }
            for j in 0..n {
                if dist[i * n + j] != dist[j * n + i] {
                    return bad(format!("asymmetric at ({i},{j})"));
                }
                if i != j && dist[i * n + j] == 0.0 {
                    return bad(format!("distinct points {i},{j} at distance 0"));
                }
            }
        }
        // Components from finiteness; triangle inequality within them.
        let mut component = vec![u32::MAX; n];
        let mut next = 0u32;
        for i in 0..n {
            if component[i] != u32::MAX {
                continue;
            }
            let mut stack = vec![i];
            component[i] = next;
            while let Some(x) = stack.pop() {
                for y in 0..n {
                    if dist[x * n + y].is_finite() && component[y] == u32::MAX {
                        component[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        for i in 0..n {
            for j in 0..n {
                let finite = dist[i * n + j].is_finite();
                if finite != (component[i] == component[j]) {
                    return bad(format!(
                        "finiteness of d({i},{j}) disagrees with components"
                    ));
                }
                for k in 0..n {
                    if dist[i * n + j] > dist[i * n + k] + dist[k * n + j] {
                        return bad(format!("triangle violated at ({i},{k},{j})"));
                    }
                }
            }
        }
        Ok(FinExtMetric { n, dist, component })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn d(&self, x: u32, y: u32) -> f64 {
        self.dist[x as usize * self.n + y as usize]
    }

    pub fn component(&self, x: u32) -> u32 {
        self.component[x as usize]
    }

    pub fn ball(&self, x: u32, radius: f64) -> Vec<u32> {
        (0..self.n as u32)
            .filter(|&y| self.d(x, y) <= radius)
            .collect()
    }

    pub fn to_matrix(&self) -> Vec<Vec<Option<f64>>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let v = self.dist[i * self.n + j];
                        v.is_finite().then_some(v)
                    })
                    .collect()
            })
            .collect()
    }
}

/// Sparse nonnegative vector family with parameters; `xi[x]` is sorted by
/// point index.
#[derive(Clone, Debug)]
pub struct Witness<W: Weight> {
    pub xi: Vec<Vec<(u32, W)>>,
    pub eps: W,
    pub r: f64,
    pub s: f64,
}

impl<W: Weight> Witness<W> {
    pub fn l1_norm(v: &[(u32, W)]) -> W {
        v.iter().fold(W::zero(), |acc, (_, w)| acc.add(w))
    }

    /// ℓ₁ distance of two sorted sparse vectors.
    pub fn l1_diff(a: &[(u32, W)], b: &[(u32, W)]) -> W {
        let mut out = W::zero();
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out = out.add(&a[i].1.abs_diff(&W::zero()));
                i += 1;
            } else if i >= a.len() || b[j].0 < a[i].0 {
                out = out.add(&b[j].1.abs_diff(&W::zero()));
                j += 1;
            } else {
                out = out.add(&a[i].1.abs_diff(&b[j].1));
                i += 1;
                j += 1;
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    WrongArity { have: usize, want: usize },
    NegativeEntry { x: u32, q: u32 },
    NormOff { x: u32, norm: f64 },
    SupportOutsideBall { x: u32, q: u32 },
    VariationExceeded { x: u32, y: u32, value: f64 },
}

/// Outcome of [`check_witness`]: every violated condition with the offending
/// point or pair.
#[derive(Clone, Debug, Default)]
pub struct WitnessReport {
    pub violations: Vec<Violation>,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verify the four witness conditions on a space, with `tol` absorbing
/// floating-point slack in the norm and variation comparisons (use zero for
/// exact arithmetic).
pub fn check_witness<W: Weight>(space: &FinExtMetric, w: &Witness<W>, tol: &W) -> WitnessReport {
    let mut report = WitnessReport::default();
    if w.xi.len() != space.len() {
        report.violations.push(Violation::WrongArity {
            have: w.xi.len(),
            want: space.len(),
        });
        return report;
    }
    let one = W::one();
    for (x, vec) in w.xi.iter().enumerate() {
        let x = x as u32;
        for (q, weight) in vec {
            if *weight < W::zero() {
                report
                    .violations
                    .push(Violation::NegativeEntry { x, q: *q });
            }
            if space.d(x, *q) > w.s {
                report
                    .violations
                    .push(Violation::SupportOutsideBall { x, q: *q });
            }
        }
        let norm = Witness::<W>::l1_norm(vec);
        if norm.abs_diff(&one) > *tol {
            report.violations.push(Violation::NormOff {
                x,
                norm: norm.to_f64(),
            });
        }
    }
    for x in 0..space.len() as u32 {
        for y in (x + 1)..space.len() as u32 {
            if space.d(x, y) <= w.r {
                let diff = Witness::<W>::l1_diff(&w.xi[x as usize], &w.xi[y as usize]);
                if diff > w.eps.add(tol) {
                    report.violations.push(Violation::VariationExceeded {
                        x,
                        y,
                        value: diff.to_f64(),
                    });
                }
            }
        }
    }
    report
}

/// A verified weak contraction together with its per-component fiber bound.
#[derive(Clone, Debug)]
pub struct ContractionMap {
    pub f: Vec<u32>,
    /// Max fiber cardinality within any single component of the domain.
    pub k: usize,
}

/// Check that `f` never increases distances and compute the fiber bound.
pub fn analyze_contraction(
    x_space: &FinExtMetric,
    y_space: &FinExtMetric,
    f: &[u32],
) -> Result<ContractionMap, PropaError> {
    if f.len() != x_space.len() || f.iter().any(|&y| y as usize >= y_space.len()) {
        return Err(PropaError::MapNotTotal);
    }
    for x in 0..f.len() as u32 {
        for y in (x + 1)..f.len() as u32 {
            if y_space.d(f[x as usize], f[y as usize]) > x_space.d(x, y) {
                return Err(PropaError::ContractionViolated(x, y));
            }
        }
    }
    let mut fibers: HashMap<(u32, u32), usize> = HashMap::new();
    let mut k = 0usize;
    for x in 0..f.len() as u32 {
        let key = (x_space.component(x), f[x as usize]);
        let c = fibers.entry(key).or_insert(0);
        *c += 1;
        k = k.max(*c);
    }
    Ok(ContractionMap { f: f.to_vec(), k })
}

/// Result of [`transport_witness`]: the new witness plus the constants that
/// produced its support radius.
#[derive(Clone, Debug)]
pub struct TransportResult<W: Weight> {
    pub witness: Witness<W>,
    /// Ball-cardinality bound `max_y |B_Y(y, S)|`.
    pub c: usize,
    pub s_prime: f64,
}

/// Pull a witness on `Y` back along a verified weak contraction.
///
/// For each `p ∈ Y`, the class of `x` in `C_p = f⁻¹(B(p, S))` under chains
/// of steps of length ≤ R picks the cross-section point `h_p(x)` (least
/// index, for determinism); the transported vector is
/// `ζ_x(q) = Σ { ξ_{f(x)}(p) : h_p(x) = q }` restricted to `B(x, S′)`,
/// `S′ = k·c·R`. The norm and variation bounds carry over exactly.
pub fn transport_witness<W: Weight>(
    x_space: &FinExtMetric,
    y_space: &FinExtMetric,
    cm: &ContractionMap,
    wy: &Witness<W>,
    tol: &W,
) -> Result<TransportResult<W>, PropaError> {
    let report = check_witness(y_space, wy, tol);
    if !report.passed() {
        return Err(PropaError::WitnessInvalid(format!(
            "{:?}",
            report.violations[0]
        )));
    }
    let c = (0..y_space.len() as u32)
        .map(|y| y_space.ball(y, wy.s).len())
        .max()
        .unwrap_or(0);
    let s_prime = cm.k as f64 * c as f64 * wy.r;

    // Cross-sections h_p: for each p, union points of C_p chained by
    // distance <= R, then map each member to the least index in its class.
    let nx = x_space.len();
    let mut h: Vec<HashMap<u32, u32>> = Vec::with_capacity(y_space.len());
    for p in 0..y_space.len() as u32 {
        let members: Vec<u32> = (0..nx as u32)
            .filter(|&x| y_space.d(p, cm.f[x as usize]) <= wy.s)
            .collect();
        let mut parent: HashMap<u32, u32> = members.iter().map(|&m| (m, m)).collect();
        fn find(parent: &mut HashMap<u32, u32>, mut v: u32) -> u32 {
            while parent[&v] != v {
                let g = parent[&parent[&v]];
                parent.insert(v, g);
                v = g;
            }
            v
        }
        for i in 0..members.len() {
            for j in (i + 1)..members.len() {
                if x_space.d(members[i], members[j]) <= wy.r {
                    let a = find(&mut parent, members[i]);
                    let b = find(&mut parent, members[j]);
                    if a != b {
                        parent.insert(a.max(b), a.min(b));
                    }
                }
            }
        }
        let mut least: HashMap<u32, u32> = HashMap::new();
        for &m in &members {
            let root = find(&mut parent, m);
            let e = least.entry(root).or_insert(m);
            *e = (*e).min(m);
        }
        let map = members
            .iter()
            .map(|&m| (m, least[&find(&mut parent, m)]))
            .collect();
        h.push(map);
    }

    let mut zeta: Vec<Vec<(u32, W)>> = Vec::with_capacity(nx);
    for x in 0..nx as u32 {
        let fx = cm.f[x as usize];
        let mut acc: Vec<(u32, W)> = Vec::new();
        for (p, weight) in &wy.xi[fx as usize] {
            let q = *h[*p as usize]
                .get(&x)
                .expect("support of xi_f(x) lies within S of f(x), so x is in C_p");
            if x_space.d(x, q) > s_prime {
                // The class-diameter bound makes this unreachable; the
                // formula still restricts support to the ball.
                continue;
            }
            match acc.binary_search_by_key(&q, |e| e.0) {
                Ok(i) => acc[i].1 = acc[i].1.add(weight),
                Err(i) => acc.insert(i, (q, weight.clone())),
            }
        }
        zeta.push(acc);
    }
    Ok(TransportResult {
        witness: Witness {
            xi: zeta,
            eps: wy.eps.clone(),
            r: wy.r,
            s: s_prime,
        },
        c,
        s_prime,
    })
}
