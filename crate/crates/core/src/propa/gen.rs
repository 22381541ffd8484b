//! Seeded random instances for the transport suites: a target space `Y`,
//! a domain `X` with a weak contraction onto it that is at most 3-to-one on
//! components, and a witness on `Y` whose variation bound is computed
//! exactly, so the instance passes its own check by construction.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FinExtMetric, Weight, Witness};

pub struct Instance {
    pub x: FinExtMetric,
    pub y: FinExtMetric,
    pub f: Vec<u32>,
    pub witness_f64: Witness<f64>,
    pub witness_rat: Witness<BigRational>,
}

/// Random metric on `sizes.len()` components: integer entries capped at 10,
/// closed under min-plus within each component.
fn random_metric(rng: &mut ChaCha8Rng, sizes: &[usize]) -> FinExtMetric {
    let n: usize = sizes.iter().sum();
    let mut comp = Vec::with_capacity(n);
    for (ci, &s) in sizes.iter().enumerate() {
        comp.extend(std::iter::repeat_n(ci, s));
    }
    let mut d = vec![vec![None::<f64>; n]; n];
    for i in 0..n {
        d[i][i] = Some(0.0);
        for j in (i + 1)..n {
            if comp[i] == comp[j] {
                let v = rng.gen_range(1..=10) as f64;
                d[i][j] = Some(v);
                d[j][i] = Some(v);
            }
        }
    }
    // Min-plus closure restores the triangle inequality; entries only shrink.
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    let via = a + b;
                    if d[i][j].map(|c| via < c).unwrap_or(false) {
                        d[i][j] = Some(via);
                    }
                }
            }
        }
    }
    FinExtMetric::new(&d).expect("construction yields a valid extended metric")
}

/// One seeded instance: `|Y| ≤ 12`, `|X| ≤ 30`, fibers ≤ 3 per component,
/// integer distances ≤ 10.
pub fn random_instance(seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Y with 1..=3 components.
    let y_comp_count = rng.gen_range(1..=3usize);
    let mut y_sizes = Vec::new();
    let mut left = rng.gen_range(y_comp_count..=12usize);
    for i in 0..y_comp_count {
        let remaining_groups = y_comp_count - i - 1;
        let take = if remaining_groups == 0 {
            left
        } else {
            rng.gen_range(1..=left - remaining_groups)
        };
        y_sizes.push(take);
        left -= take;
    }
    let y = random_metric(&mut rng, &y_sizes);
    let ny = y.len();

    // X components: each maps into one Y component with fibers <= k.
    let k = rng.gen_range(1..=3usize);
    let x_comp_count = rng.gen_range(1..=4usize);
    let mut f: Vec<u32> = Vec::new();
    let mut x_sizes = Vec::new();
    for _ in 0..x_comp_count {
        let yc = rng.gen_range(0..ny as u32);
        let targets: Vec<u32> = (0..ny as u32)
            .filter(|&p| y.component(p) == y.component(yc))
            .collect();
        let max_size = (k * targets.len()).min(30 - f.len());
        if max_size == 0 {
            break;
        }
        let size = rng.gen_range(1..=max_size.min(10));
        let mut usage = vec![0usize; targets.len()];
        let mut members = 0;
        while members < size {
            let t = rng.gen_range(0..targets.len());
            if usage[t] < k {
                usage[t] += 1;
                f.push(targets[t]);
                members += 1;
            }
        }
        x_sizes.push(size);
    }

    // X distances dominate the pulled-back Y distances, then min-plus
    // closure (which preserves domination since d_Y obeys the triangle
    // inequality along any chain).
    let nx = f.len();
    let mut xd = vec![vec![None::<f64>; nx]; nx];
    let mut start = 0usize;
    let mut ranges = Vec::new();
    for &s in &x_sizes {
        ranges.push(start..start + s);
        start += s;
    }
    for r in &ranges {
        for i in r.clone() {
            xd[i][i] = Some(0.0);
            for j in (i + 1)..r.end {
                let base = y.d(f[i], f[j]).max(1.0);
                let v = (base + rng.gen_range(0..=3) as f64).min(10.0).max(base);
                xd[i][j] = Some(v);
                xd[j][i] = Some(v);
            }
        }
    }
    for k3 in 0..nx {
        for i in 0..nx {
            for j in 0..nx {
                if let (Some(a), Some(b)) = (xd[i][k3], xd[k3][j]) {
                    let via = a + b;
                    if xd[i][j].map(|c| via < c).unwrap_or(false) {
                        xd[i][j] = Some(via);
                    }
                }
            }
        }
    }
    let x = FinExtMetric::new(&xd).expect("valid domain metric");

    // Witness on Y: supports inside B(y, S), exact rational weights, eps
    // computed as the realized maximum variation over R-close pairs.
    let s = rng.gen_range(0..=6) as f64;
    let r = rng.gen_range(1..=5) as f64;
    let mut xi_rat: Vec<Vec<(u32, BigRational)>> = Vec::with_capacity(ny);
    for p in 0..ny as u32 {
        let ball = y.ball(p, s);
        let size = rng.gen_range(1..=ball.len().min(4));
        let mut picked: Vec<u32> = Vec::new();
        while picked.len() < size {
            let q = ball[rng.gen_range(0..ball.len())];
            if !picked.contains(&q) {
                picked.push(q);
            }
        }
        picked.sort_unstable();
        let raw: Vec<u32> = (0..size).map(|_| rng.gen_range(1..=9)).collect();
        let total: u32 = raw.iter().sum();
        xi_rat.push(
            picked
                .into_iter()
                .zip(raw.iter().map(|&w| BigRational::from_ratio(w, total)))
                .collect(),
        );
    }
    let mut eps: BigRational = Weight::zero();
    for a in 0..ny as u32 {
        for b in (a + 1)..ny as u32 {
            if y.d(a, b) <= r {
                let diff =
                    Witness::<BigRational>::l1_diff(&xi_rat[a as usize], &xi_rat[b as usize]);
                if diff > eps {
                    eps = diff;
                }
            }
        }
    }
    let xi_f64: Vec<Vec<(u32, f64)>> = xi_rat
        .iter()
        .map(|v| v.iter().map(|(q, w)| (*q, Weight::to_f64(w))).collect())
        .collect();
    let witness_rat = Witness {
        xi: xi_rat,
        eps: eps.clone(),
        r,
        s,
    };
    let witness_f64 = Witness {
        xi: xi_f64,
        eps: Weight::to_f64(&eps) + 1e-12,
        r,
        s,
    };
    Instance {
        x,
        y,
        f,
        witness_f64,
        witness_rat,
    }
}
