//! The acceptance battery: twelve exact checks over fixtures and a seeded random corpus.

use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::Rng as _;

use crate::alexander::{
    alexander_functor_equivalent, alexander_functor_qh, alexander_functor_z,
    compare_bsda_alexander, random_equivalent_presentation, AlexRing,
};
use crate::bsda::{bsda_z, bsda_zh, bsdd_element, one_sided_composition, rebase};
use crate::corpus::{
    random_arc_diagram, random_gluable_pair, random_ordinary, random_two_sided, rng, Limits,
};
use crate::diagram::ops::{
    cap, disjoint, glue, identity_diagram, lift_change, normalize, reweight, symmetrizer, LiftCase,
};
use crate::diagram::{ArcDiagram, HeegaardDiagram};
use crate::exterior::{
    braiding, compose, global_unit, phi_map, super_tensor_with_parity, GradedMap, Subset,
};
use crate::fixtures::fixture_library;
use crate::homology::{
    generator_sum, presentation_z, presentation_zh, torsion_order, vfn_sut, weakly_balanced,
};
use crate::rings::parse::parse_zh;
use crate::rings::qh::divisors;
use crate::rings::{sign, Augment, GroupDescriptor, HWeight, Z};

/// Outcome of one criterion.
#[derive(Clone, Debug)]
pub struct Report {
    pub id: usize,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Report {
    pub fn line(&self) -> String {
        format!(
            "{} {:>2} {:<28} {} ({:.2}s)",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Diagrams shared by several criteria.
pub struct Corpus {
    pub fixtures: Vec<(String, HeegaardDiagram)>,
    pub pairs: Vec<(HeegaardDiagram, HeegaardDiagram)>,
    pub glued: Vec<HeegaardDiagram>,
    /// Fixtures, pieces, glued diagrams and random two-sided diagrams.
    pub diagrams: Vec<HeegaardDiagram>,
    /// Random diagrams weighted in small groups.
    pub weighted: Vec<HeegaardDiagram>,
}

pub const PAIRS: usize = 150;
pub const ORDINARY: usize = 150;

const GROUPS: [(usize, u32); 6] = [(1, 1), (2, 1), (0, 2), (1, 2), (1, 3), (2, 3)];

impl Corpus {
    pub fn build(seed: u64) -> Self {
        let mut r = rng(seed);
        let lim = Limits::default();
        let g = GroupDescriptor::default();
        let fixtures = fixture_library();
        let mut pairs = vec![];
        let mut glued = vec![];
        for _ in 0..PAIRS {
            let (a, b) = random_gluable_pair(&mut r, g, 2, &lim);
            glued.push(glue(&a, &b).expect("gluable by construction"));
            pairs.push((a, b));
        }
        let (hl, hr) = (
            fixtures
                .iter()
                .find(|(n, _)| n == "halfproj_left")
                .expect("shipped")
                .1
                .clone(),
            fixtures
                .iter()
                .find(|(n, _)| n == "halfproj_right")
                .expect("shipped")
                .1
                .clone(),
        );
        glued.push(glue(&hl, &hr).expect("gluable fixture pair"));
        pairs.push((hl, hr));
        let mut diagrams: Vec<HeegaardDiagram> = fixtures.iter().map(|(_, h)| h.clone()).collect();
        for (a, b) in &pairs {
            diagrams.push(a.clone());
            diagrams.push(b.clone());
        }
        diagrams.extend(glued.iter().cloned());
        for _ in 0..60 {
            diagrams.push(random_two_sided(&mut r, g, 2, &lim));
        }
        let wlim = Limits {
            max_circles: 2,
            max_points: 2,
            density: 0.35,
            max_extra_beta: 2,
        };
        let mut weighted = vec![];
        for (f, m) in GROUPS {
            let wg = GroupDescriptor {
                free_rank: f,
                torsion_order: m,
            };
            for _ in 0..12 {
                weighted.push(random_two_sided(&mut r, wg, 2, &wlim));
            }
            for _ in 0..4 {
                weighted.push(random_ordinary(&mut r, wg, 3, &wlim));
            }
        }
        Corpus {
            fixtures,
            pairs,
            glued,
            diagrams,
            weighted,
        }
    }

    fn fixture(&self, name: &str) -> &HeegaardDiagram {
        &self
            .fixtures
            .iter()
            .find(|(n, _)| n == name)
            .expect("shipped fixture")
            .1
    }

    fn weighted_fixtures(&self) -> Vec<&HeegaardDiagram> {
        self.fixtures
            .iter()
            .filter(|(_, h)| h.group != GroupDescriptor::default())
            .map(|(_, h)| h)
            .chain(&self.weighted)
            .collect()
    }
}

fn is_sign(u: &Option<Z>) -> bool {
    matches!(u, Some(x) if *x == Z::one() || *x == -Z::one())
}

fn sign_unit(f: &GradedMap<Z>, g: &GradedMap<Z>) -> bool {
    is_sign(&global_unit(f, g).unwrap_or(None))
}

struct Tally {
    checked: usize,
    failed: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failed: vec![],
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failed.len() < 3 {
            self.failed.push(what());
        }
    }

    fn ok(&self) -> bool {
        self.failed.is_empty()
    }

    fn summary(&self, extra: &str) -> String {
        if self.ok() {
            format!("{} checks{extra}", self.checked)
        } else {
            format!(
                "{} checks{extra}; failures: {}",
                self.checked,
                self.failed.join("; ")
            )
        }
    }
}

fn report(
    id: usize,
    title: &'static str,
    start: Instant,
    limit: Option<Duration>,
    t: &Tally,
    extra: &str,
) -> Report {
    let elapsed = start.elapsed();
    let in_time = limit.is_none_or(|l| elapsed < l);
    let mut detail = t.summary(extra);
    if !in_time {
        detail.push_str("; over time limit");
    }
    Report {
        id,
        title,
        pass: t.ok() && in_time,
        detail,
        elapsed,
    }
}

/// Identity diagrams give `±id`.
pub fn identity(c: &Corpus, seed: u64) -> Report {
    let start = Instant::now();
    let mut t = Tally::new();
    let mut zs: Vec<ArcDiagram> = (1..=4).map(ArcDiagram::interval).collect();
    zs.push(ArcDiagram::surface_family(1, 1, 1).expect("valid family"));
    let mut r = rng(seed ^ 0x1d);
    for k in 1..=4 {
        zs.push(random_arc_diagram(&mut r, k));
    }
    let g = GroupDescriptor::default();
    for z in &zs {
        let h = identity_diagram(z, g).expect("alpha arc diagram");
        let n = z.arc_count();
        t.check(sign_unit(&bsda_z(&h), &GradedMap::identity(n)), || {
            format!("identity on {n} arcs")
        });
    }
    for n in 1..=4 {
        let h = c.fixture(&format!("identity_n{n}"));
        t.check(sign_unit(&bsda_z(h), &GradedMap::identity(n)), || {
            format!("identity_n{n}")
        });
    }
    report(1, "identity", start, Some(Duration::from_secs(1)), &t, "")
}

/// Gluing matches composition.
pub fn gluing(c: &Corpus) -> Report {
    let start = Instant::now();
    let mut t = Tally::new();
    let mut nonzero = 0;
    for (k, ((a, b), h)) in c.pairs.iter().zip(&c.glued).enumerate() {
        let fh = bsda_z(h);
        nonzero += usize::from(!fh.is_zero());
        let comp = compose(&bsda_z(a), &bsda_z(b));
        let ok = comp.map(|f| sign_unit(&fh, &f)).unwrap_or(false);
        t.check(ok, || format!("pair {k}"));
    }
    let last = c.glued.last().map(bsda_z).is_some_and(|f| !f.is_zero());
    t.check(last, || "loop-closing fixture pair composes to zero".into());
    report(
        2,
        "gluing",
        start,
        Some(Duration::from_secs(30)),
        &t,
        &format!(", {nonzero} nonzero composites"),
    )
}

/// Normalizing does not change the map beyond a sign.
pub fn normalization(c: &Corpus) -> Report {
    let start = Instant::now();
    let mut t = Tally::new();
    for (k, h) in c.diagrams.iter().enumerate() {
        t.check(sign_unit(&bsda_z(&normalize(h)), &bsda_z(h)), || {
            format!("diagram {k}")
        });
    }
    report(3, "normalization", start, None, &t, "")
}

/// Closed diagrams give exactly the determinant.
pub fn ordinary(seed: u64) -> Report {
    let start = Instant::now();
    let mut t = Tally::new();
    let mut r = rng(seed ^ 0x0d);
    let lim = Limits::default();
    let g = GroupDescriptor::default();
    let mut hs: Vec<HeegaardDiagram> = (0..ORDINARY)
        .map(|_| random_ordinary(&mut r, g, 4, &lim))
        .collect();
    hs.push(crate::diagram::build::ordinary_from_matrix(
        &[vec![1, 1], vec![-1, 1]],
        2,
    ));
    for (k, h) in hs.iter().enumerate() {
        let f = bsda_z(h);
        let det = presentation_z(h).matrix.det().expect("square");
        let ok = f.degree == 0
            && f.entry(Subset::empty(), Subset::empty()) == det
            && f.nonzero_count() <= 1;
        t.check(ok, || {
            format!(
                "diagram {k}: entry {} vs det {det}",
                f.entry(Subset::empty(), Subset::empty())
            )
        });
    }
    report(4, "ordinary determinant", start, None, &t, "")
}

/// `V_FN` of the normal form equals the map up to one sign.
pub fn frohman_nicas(c: &Corpus) -> Report {
    let start = Instant::now();
    let mut t = Tally::new();
    let mut nonzero = 0;
    for (k, h) in c.diagrams.iter().enumerate() {
        let hn = normalize(h);
        let b = bsda_z(&hn);
        nonzero += usize::from(!b.is_zero());
        let ok = vfn_sut(&hn).map(|v| sign_unit(&v, &b)).unwrap_or(false);
        t.check(ok, || format!("diagram {k}"));
    }
    for name in ["idle_circle", "dup_beta"] {
        let hn = normalize(c.fixture(name));
        let ok = vfn_sut(&hn).map(|v| v.is_zero()).unwrap_or(false) && bsda_z(&hn).is_zero();
        t.check(ok, || format!("{name} should vanish on both sides"));
    }
    report(
        5,
        "Frohman-Nicas map",
        start,
        None,
        &t,
        &format!(", {nonzero} nonzero maps"),
    )
}

/// The one-sided element composed back gives the two-sided map.
pub fn one_sided(c: &Corpus) -> Report {
    let start = Instant::now();
    let mut t = Tally::new();
    for (k, h) in c.diagrams.iter().enumerate() {
        let kdeg = h.degree() + h.n0() as i64;
        let f = one_sided_composition(&bsdd_element(h), h.n0(), h.n1(), kdeg);
        t.check(sign_unit(&f, &bsda_z(h)), || format!("diagram {k}"));
    }
    report(6, "one-sided composition", start, None, &t, "")
}

/// Agreement with the integer Alexander functor and presentation independence.
pub fn alexander_z(c: &Corpus, seed: u64) -> Report {
    let start = Instant::now();
    let mut t = Tally::new();
    for (k, h) in c.diagrams.iter().enumerate() {
        let ok = compare_bsda_alexander(h, AlexRing::Z)
            .map(|cmp| matches!(cmp.unit.as_deref(), Some("+1") | Some("-1")))
            .unwrap_or(false);
        t.check(ok, || format!("diagram {k}"));
    }
    let mut stabilized = 0;
    let subjects: Vec<&HeegaardDiagram> = c
        .fixtures
        .iter()
        .map(|(_, h)| h)
        .chain(c.glued.iter().take(20))
        .collect();
    for (k, h) in subjects.iter().enumerate() {
        let hn = normalize(h);
        let Ok(base) = alexander_functor_z(&hn) else {
            t.check(false, || format!("subject {k}: functor"));
            continue;
        };
        let m = presentation_z(&hn).matrix;
        for p in 0..20u64 {
            let ep = random_equivalent_presentation(
                &m,
                seed.wrapping_mul(31).wrapping_add(1000 * k as u64 + p),
            );
            stabilized += usize::from(ep.stabilized > 0);
            let ok = alexander_functor_equivalent(&hn, &ep)
                .map(|f| sign_unit(&f, &base))
                .unwrap_or(false);
            t.check(ok, || format!("subject {k} presentation {p}"));
        }
    }
    report(
        7,
        "Alexander over Z",
        start,
        None,
        &t,
        &format!(", {stabilized} stabilized presentations"),
    )
}

/// Augmentation of the twisted map and the weighted annulus values.
pub fn specialization(c: &Corpus) -> Report {
    let start = Instant::now();
    let mut t = Tally::new();
    for (k, h) in c.weighted_fixtures().iter().enumerate() {
        let aug = bsda_zh(h).map_values(|x| x.augmentation());
        let f = bsda_z(h);
        t.check(aug.entries().eq(f.entries()), || {
            format!("weighted diagram {k}")
        });
    }
    for n in 1..=5usize {
        let h = c.fixture(&format!("annulus_n{n}_weighted"));
        let text = (0..n)
            .map(|k| format!("t^{k}"))
            .collect::<Vec<_>>()
            .join(" + ");
        let want = parse_zh(&text, 1).expect("well-formed");
        let got = bsda_zh(h).entry(Subset::empty(), Subset::empty());
        t.check(got == want, || format!("annulus {n}: {got}"));
        let order = torsion_order(&presentation_z(h).matrix);
        t.check(order == Z::from(n), || {
            format!("annulus {n}: torsion order {order}")
        });
    }
    report(8, "twisted specialization", start, None, &t, "")
}

/// Agreement over `Z[G]` and `Q[H]`, and the vanishing pattern of character components.
pub fn alexander_twisted(c: &Corpus) -> Report {
    let start = Instant::now();
    let mut t = Tally::new();
    let mut nonzero = 0;
    for (k, h) in c.weighted_fixtures().iter().enumerate() {
        nonzero += usize::from(!bsda_zh(h).is_zero());
        for ring in [AlexRing::ZG, AlexRing::QH] {
            let ok = compare_bsda_alexander(h, ring)
                .map(|cmp| cmp.pass())
                .unwrap_or(false);
            t.check(ok, || format!("weighted diagram {k} over {ring:?}"));
        }
    }
    let h = c.fixture("qh_vanishing");
    let m = h.group.torsion_order;
    let pres = presentation_zh(h).matrix;
    let predicted: Vec<bool> = divisors(m)
        .into_iter()
        .map(|d| {
            let md = pres.map(|x| x.to_component(d));
            md.rank() == md.cols()
        })
        .collect();
    let f = alexander_functor_qh(&normalize(h)).expect("normalized");
    let comps = f.entry(Subset::empty(), Subset::empty()).components(m);
    let actual: Vec<bool> = comps.iter().map(|x| !x.is_zero()).collect();
    t.check(actual == predicted && predicted == [false, true], || {
        format!("components nonzero {actual:?}, predicted {predicted:?}")
    });
    report(
        9,
        "Alexander over Z[G], Q[H]",
        start,
        None,
        &t,
        &format!(", {nonzero} nonzero maps"),
    )
}

fn small_two_sided(seed: u64) -> Vec<HeegaardDiagram> {
    let mut r = rng(seed);
    let lim = Limits {
        max_circles: 1,
        max_points: 2,
        density: 0.4,
        max_extra_beta: 2,
    };
    let g = GroupDescriptor::default();
    let mut hs = vec![];
    for n in 1..=2 {
        hs.push(identity_diagram(&ArcDiagram::interval(n), g).expect("alpha arc diagram"));
    }
    while hs.len() < 8 {
        let h = random_two_sided(&mut r, g, 2, &lim);
        if !bsda_z(&h).is_zero() {
            hs.push(h);
        }
    }
    hs
}

/// The monoidal structure maps and the symmetrizer.
pub fn monoidal(c: &Corpus, seed: u64) -> Report {
    let start = Instant::now();
    let mut t = Tally::new();
    let mut hs = small_two_sided(seed ^ 0x6d);
    hs.push(c.fixture("halfproj_left").clone());
    hs.push(c.fixture("halfproj_right").clone());
    for (x, h) in hs.iter().enumerate() {
        for (y, hp) in hs.iter().enumerate() {
            let joint = bsda_z(&disjoint(h, hp).expect("same group"));
            let (f, fp) = (bsda_z(h), bsda_z(hp));
            for shifts in 0..16u32 {
                let [d0, d0p, d1, d1p] = [0, 1, 2, 3].map(|b| i64::from((shifts >> b) & 1));
                let parity = h.degree() + d0 - d1;
                let left = compose(&joint, &phi_map(h.n0(), hp.n0(), d0));
                let right = compose(
                    &phi_map(h.n1(), hp.n1(), d1),
                    &super_tensor_with_parity(&f, parity, &fp),
                );
                let ok = match (left, right) {
                    (Ok(l), Ok(r)) => sign_unit(&l, &r),
                    _ => false,
                };
                t.check(ok, || format!("pair ({x},{y}) shifts {d0}{d0p}{d1}{d1p}"));
            }
        }
    }
    let g = GroupDescriptor::default();
    for n in 1..=2 {
        for np in 1..=2 {
            let (z, zp) = (ArcDiagram::interval(n), ArcDiagram::interval(np));
            let b = bsda_z(&symmetrizer(&z, &zp, g).expect("alpha arc diagrams"));
            t.check(sign_unit(&b, &braiding(n, 0, np, 0)), || {
                format!("(-1)^(kk') pattern, n={n}, n'={np}")
            });
            for d in 0..2 {
                for dp in 0..2 {
                    let left = compose(&b, &phi_map(n, np, d));
                    let right = compose(&phi_map(np, n, dp), &braiding(n, d, np, dp));
                    let ok = match (left, right) {
                        (Ok(l), Ok(r)) => sign_unit(&l, &r),
                        _ => false,
                    };
                    t.check(ok, || format!("braiding n={n} n'={np} d={d} d'={dp}"));
                }
            }
        }
    }
    report(10, "monoidal signs", start, None, &t, "")
}

/// Entries as signed generator sums of capped diagrams.
pub fn capping(c: &Corpus) -> Report {
    let start = Instant::now();
    let mut t = Tally::new();
    let subjects: Vec<&HeegaardDiagram> = c
        .diagrams
        .iter()
        .filter(|h| h.n0() + h.n1() <= 4 && h.b() <= 6)
        .take(120)
        .collect();
    let mut nonzero = 0;
    for (k, h) in subjects.iter().enumerate() {
        let hn = normalize(h);
        let f = bsda_z(&hn);
        let (n0, n1, a) = (hn.n0(), hn.n1(), hn.a() as i64);
        for i in Subset::all(n0) {
            for j in Subset::all(n1) {
                let Ok(capped) = cap(&hn, i, j) else {
                    t.check(false, || format!("diagram {k}: cap failed"));
                    continue;
                };
                let balanced = capped.a() == capped.b();
                t.check(weakly_balanced(&hn, i, j) == balanced, || {
                    format!("diagram {k}: balance at {i} {j}")
                });
                if !balanced {
                    continue;
                }
                let kk = i.len() as i64;
                let e = j.inversions_with(j.complement(n1)) as i64 + a * kk + n1 as i64 * kk;
                let want = generator_sum(&capped).map(|s| s * sign::<Z>(e));
                let ok = want.as_ref().is_ok_and(|w| *w == f.entry(i, j));
                nonzero += usize::from(!f.entry(i, j).is_zero());
                t.check(ok, || format!("diagram {k}: entry {i} -> {j}"));
            }
        }
    }
    report(
        11,
        "capping",
        start,
        None,
        &t,
        &format!(", {} diagrams, {nonzero} nonzero entries", subjects.len()),
    )
}

fn group_elements(g: &GroupDescriptor) -> Vec<HWeight> {
    let mut ws = vec![];
    for i in 0..g.free_rank {
        let mut e = vec![0; g.free_rank];
        e[i] = 1;
        ws.push(HWeight {
            free_exponents: e.clone(),
            torsion_exponent: 0,
        });
        e[i] = -2;
        ws.push(HWeight {
            free_exponents: e,
            torsion_exponent: 0,
        });
    }
    if g.torsion_order > 1 {
        ws.push(HWeight {
            free_exponents: vec![0; g.free_rank],
            torsion_exponent: 1,
        });
    }
    ws
}

/// Single-curve lift changes on normal forms.
pub fn lift_changes(c: &Corpus, seed: u64) -> Report {
    let start = Instant::now();
    let mut t = Tally::new();
    let mut cases = [0usize; 4];
    let mut r = rng(seed ^ 0x12);
    for (k, h) in c.weighted_fixtures().iter().enumerate() {
        let hn = normalize(h);
        let g = hn.group;
        let base = bsda_zh(&hn);
        let curves: Vec<String> = hn
            .alpha_circles
            .iter()
            .cloned()
            .chain(hn.beta.iter().map(|b| b.id.clone()))
            .collect();
        let ws = group_elements(&g);
        if ws.is_empty() {
            continue;
        }
        for curve in &curves {
            let w = &ws[r.gen_range(0..ws.len())];
            let Ok(lc) = lift_change(&hn, curve, w) else {
                t.check(false, || format!("diagram {k}: lift change on {curve}"));
                continue;
            };
            let expected_unit = match lc.case {
                LiftCase::AlphaCircle => w.clone(),
                LiftCase::CoreBeta | LiftCase::NewInBeta(_) => w.inverse(&g),
                LiftCase::NewOutBeta(_) => HWeight::identity(&g),
            };
            cases[match lc.case {
                LiftCase::AlphaCircle => 0,
                LiftCase::CoreBeta => 1,
                LiftCase::NewOutBeta(_) => 2,
                LiftCase::NewInBeta(_) => 3,
            }] += 1;
            let unit = crate::rings::ZH::monomial(&lc.unit, &g);
            let moved = rebase(&bsda_zh(&lc.diagram), &lc.rebase, &g);
            let ok = lc.unit == expected_unit && moved == base.scale(&unit);
            t.check(ok, || format!("diagram {k}: {:?} on {curve}", lc.case));
            let literal = reweight(&hn, curve, w).map(|d| bsda_zh(&d));
            let ok = literal.is_ok_and(|f| global_unit(&f, &base).unwrap_or(None).is_some());
            t.check(ok, || format!("diagram {k}: literal reweight of {curve}"));
        }
    }
    let all_cases = cases.iter().all(|&n| n > 0);
    t.check(all_cases, || format!("case counts {cases:?}"));
    report(
        12,
        "lift change",
        start,
        None,
        &t,
        &format!(", cases {cases:?}"),
    )
}

/// Every criterion in order.
pub fn run_all(seed: u64) -> Vec<Report> {
    let c = Corpus::build(seed);
    vec![
        identity(&c, seed),
        gluing(&c),
        normalization(&c),
        ordinary(seed),
        frohman_nicas(&c),
        one_sided(&c),
        alexander_z(&c, seed),
        specialization(&c),
        alexander_twisted(&c),
        monoidal(&c, seed),
        capping(&c),
        lift_changes(&c, seed),
    ]
}
