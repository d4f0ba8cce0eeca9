//! Seeded random diagrams used by the self-test battery and the property tests.

use rand::seq::SliceRandom;
use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::build::{from_indices, IndexPoint};
use crate::diagram::{ArcDiagram, ArcType, Component, ComponentKind, HeegaardDiagram, Orient};
use crate::rings::{GroupDescriptor, HWeight};

/// Size limits for a random diagram.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_circles: usize,
    pub max_points: usize,
    /// Probability that a given (β, α) pair carries any point.
    pub density: f64,
    /// Extra β circles beyond `a`, drawn from `0..=max_extra_beta` (capped by the arc count).
    pub max_extra_beta: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_circles: 3,
            max_points: 3,
            density: 0.3,
            max_extra_beta: 2,
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Arc diagram on one interval with `k` arcs and a random matching.
pub fn random_arc_diagram(r: &mut ChaCha8Rng, k: usize) -> ArcDiagram {
    let mut pts: Vec<usize> = (0..2 * k).collect();
    pts.shuffle(r);
    let matching = pts.chunks(2).map(|c| [c[0], c[1]]).collect();
    ArcDiagram {
        components: vec![Component {
            kind: ComponentKind::Interval,
            points: 2 * k,
        }],
        matching,
        arc_type: ArcType::Alpha,
    }
}

fn random_weight(r: &mut ChaCha8Rng, g: &GroupDescriptor) -> HWeight {
    HWeight {
        free_exponents: (0..g.free_rank).map(|_| r.gen_range(-1..=1)).collect(),
        torsion_exponent: r.gen_range(0..g.torsion_order.max(1)),
    }
}

/// Random diagram between the given boundaries.
pub fn random_diagram(
    r: &mut ChaCha8Rng,
    group: GroupDescriptor,
    z1: Option<ArcDiagram>,
    z0: Option<ArcDiagram>,
    lim: &Limits,
) -> HeegaardDiagram {
    let n1 = z1.as_ref().map_or(0, |z| z.arc_count());
    let n0 = z0.as_ref().map_or(0, |z| z.arc_count());
    let a = r.gen_range(0..=lim.max_circles);
    let extra = r.gen_range(0..=lim.max_extra_beta.min(n0 + n1));
    let b = a + extra;
    let alphas = n1 + a + n0;
    // One planted generator: β circles cover every α circle and `extra` distinct arcs.
    let mut arcs: Vec<usize> = (0..n1).chain(n1 + a..alphas).collect();
    arcs.shuffle(r);
    let mut targets: Vec<usize> = (n1..n1 + a).chain(arcs.into_iter().take(extra)).collect();
    targets.shuffle(r);
    let mut pts: Vec<IndexPoint> = targets
        .iter()
        .enumerate()
        .map(|(beta, &alpha)| IndexPoint {
            beta,
            alpha,
            sign: if r.gen_bool(0.5) { 1 } else { -1 },
            weight: random_weight(r, &group),
        })
        .collect();
    for beta in 0..b {
        for alpha in 0..alphas {
            if !r.gen_bool(lim.density) {
                continue;
            }
            let count = r.gen_range(1..=lim.max_points);
            for _ in 0..count {
                pts.push(IndexPoint {
                    beta,
                    alpha,
                    sign: if r.gen_bool(0.5) { 1 } else { -1 },
                    weight: random_weight(r, &group),
                });
            }
        }
    }
    from_indices(group, z1, a, z0, b, &pts)
}

/// Random closed diagram with `a` circles and `a` β circles.
pub fn random_ordinary(
    r: &mut ChaCha8Rng,
    group: GroupDescriptor,
    max_size: usize,
    lim: &Limits,
) -> HeegaardDiagram {
    let a = r.gen_range(1..=max_size);
    let mut pts = vec![];
    for beta in 0..a {
        for alpha in 0..a {
            if !r.gen_bool(lim.density.max(0.5)) {
                continue;
            }
            for _ in 0..r.gen_range(1..=lim.max_points) {
                pts.push(IndexPoint {
                    beta,
                    alpha,
                    sign: if r.gen_bool(0.5) { 1 } else { -1 },
                    weight: random_weight(r, &group),
                });
            }
        }
    }
    from_indices(group, None, a, None, a, &pts)
}

fn set_orients(h: &mut HeegaardDiagram, out: bool, orients: &[Orient]) {
    let arcs = if out {
        &mut h.alpha_out
    } else {
        &mut h.alpha_in
    };
    for (x, o) in arcs.iter_mut().zip(orients) {
        x.orient = *o;
    }
}

/// Random pair `(left, right)` such that `glue(left, right)` is defined.
///
/// The interface has `1..=3` arcs; the outer boundaries have `0..=outer` arcs.
pub fn random_gluable_pair(
    r: &mut ChaCha8Rng,
    group: GroupDescriptor,
    outer: usize,
    lim: &Limits,
) -> (HeegaardDiagram, HeegaardDiagram) {
    let k = r.gen_range(1..=3);
    let z = random_arc_diagram(r, k);
    let orients: Vec<Orient> = (0..k)
        .map(|_| {
            if r.gen_bool(0.5) {
                Orient::Same
            } else {
                Orient::Opposite
            }
        })
        .collect();
    let side = |r: &mut ChaCha8Rng| {
        let n = r.gen_range(0..=outer);
        (n > 0).then(|| random_arc_diagram(r, n))
    };
    let zl = side(r);
    let zr = side(r);
    let mut left = random_diagram(r, group, zl, Some(z.clone()), lim);
    let mut right = random_diagram(r, group, Some(z), zr, lim);
    set_orients(&mut left, false, &orients);
    set_orients(&mut right, true, &orients);
    (left, right)
}

/// Random two-sided diagram with `0..=max_arcs` arcs on each side.
pub fn random_two_sided(
    r: &mut ChaCha8Rng,
    group: GroupDescriptor,
    max_arcs: usize,
    lim: &Limits,
) -> HeegaardDiagram {
    let side = |r: &mut ChaCha8Rng| {
        let n = r.gen_range(0..=max_arcs);
        (n > 0).then(|| random_arc_diagram(r, n))
    };
    let z1 = side(r);
    let z0 = side(r);
    random_diagram(r, group, z1, z0, lim)
}
