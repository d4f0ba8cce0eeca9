//! Named diagrams shipped as JSON under `fixtures/`.

use crate::bsda::bsda_z;
use crate::corpus::{random_two_sided, rng, Limits};
use crate::diagram::build::{annulus, from_indices, ordinary_from_matrix, IndexPoint};
use crate::diagram::ops::identity_diagram;
use crate::diagram::{ArcDiagram, HeegaardDiagram};
use crate::rings::{GroupDescriptor, HWeight};

fn pt(beta: usize, alpha: usize, sign: i8, g: &GroupDescriptor) -> IndexPoint {
    IndexPoint {
        beta,
        alpha,
        sign,
        weight: HWeight::identity(g),
    }
}

fn commented(mut h: HeegaardDiagram, text: &str) -> HeegaardDiagram {
    h.comment = Some(text.to_string());
    h
}

/// Merge piece: two incoming one-arc boundaries feed one outgoing arc.
pub fn halfproj_left() -> HeegaardDiagram {
    let g = GroupDescriptor::default();
    let z = ArcDiagram::interval(1);
    let pts = [pt(0, 0, -1, &g), pt(0, 1, 1, &g), pt(0, 2, 1, &g)];
    let h = from_indices(g, Some(z.clone()), 0, Some(z.disjoint_union(&z)), 1, &pts);
    commented(h, "Merge piece of a composable pair whose glued interface closes a loop; glue with halfproj_right.")
}

/// Split piece: one incoming arc branches to two outgoing one-arc boundaries.
pub fn halfproj_right() -> HeegaardDiagram {
    let g = GroupDescriptor::default();
    let z = ArcDiagram::interval(1);
    let pts = [
        pt(0, 0, -1, &g),
        pt(0, 2, 1, &g),
        pt(1, 1, -1, &g),
        pt(1, 2, 1, &g),
    ];
    let h = from_indices(g, Some(z.disjoint_union(&z)), 0, Some(z), 2, &pts);
    commented(h, "Split piece of a composable pair whose glued interface closes a loop; glue into halfproj_left.")
}

/// Identity of one arc plus an α circle no β meets: the presentation has a kernel.
pub fn idle_circle() -> HeegaardDiagram {
    let g = GroupDescriptor::default();
    let z = ArcDiagram::interval(1);
    let pts = [pt(0, 0, -1, &g), pt(0, 2, 1, &g)];
    let h = from_indices(g, Some(z.clone()), 1, Some(z), 1, &pts);
    commented(h, "One-arc identity with an extra alpha circle met by no beta circle; second relative homology is nonzero.")
}

/// Two β circles with identical intersections: the relative first homology has a free part.
pub fn dup_beta() -> HeegaardDiagram {
    let g = GroupDescriptor::default();
    let z = ArcDiagram::interval(1);
    let pts = [
        pt(0, 0, -1, &g),
        pt(0, 1, 1, &g),
        pt(1, 0, -1, &g),
        pt(1, 1, 1, &g),
    ];
    let h = from_indices(g, Some(z.clone()), 0, Some(z), 2, &pts);
    commented(
        h,
        "Two parallel beta circles across a one-arc product; the core block has infinite cokernel.",
    )
}

/// 1×1 presentation `1 - s` with `s` of order 2.
pub fn qh_vanishing() -> HeegaardDiagram {
    let g = GroupDescriptor {
        free_rank: 0,
        torsion_order: 2,
    };
    let s = HWeight {
        free_exponents: vec![],
        torsion_exponent: 1,
    };
    let pts = [
        pt(0, 0, 1, &g),
        IndexPoint {
            beta: 0,
            alpha: 0,
            sign: -1,
            weight: s,
        },
    ];
    let h = from_indices(g, None, 1, None, 1, &pts);
    commented(h, "Closed diagram with presentation 1 - s, s of order 2: zero under the trivial character, 2 under the sign character.")
}

/// First seeded random two-sided diagram over `group` with at least two nonzero entries.
pub fn twisted(group: GroupDescriptor, seed: u64) -> HeegaardDiagram {
    let lim = Limits {
        max_circles: 2,
        max_points: 2,
        density: 0.35,
        max_extra_beta: 2,
    };
    let mut r = rng(seed);
    loop {
        let h = random_two_sided(&mut r, group, 2, &lim);
        if h.n0() >= 1 && h.n1() >= 1 && h.a() >= 1 && bsda_z(&h).nonzero_count() >= 2 {
            return h;
        }
    }
}

fn twisted_fixture(free_rank: usize, torsion_order: u32) -> (String, HeegaardDiagram) {
    let g = GroupDescriptor {
        free_rank,
        torsion_order,
    };
    let name = format!("twisted_f{free_rank}_m{torsion_order}");
    let text = format!(
        "Seeded two-sided diagram weighted in Z^{free_rank} x Z/{torsion_order}, chosen with at least two nonzero integer entries."
    );
    (
        name,
        commented(
            twisted(g, 1000 + 10 * free_rank as u64 + u64::from(torsion_order)),
            &text,
        ),
    )
}

/// Every shipped fixture, by file stem.
pub fn fixture_library() -> Vec<(String, HeegaardDiagram)> {
    let g = GroupDescriptor::default();
    let mut v = vec![];
    for n in 1..=4 {
        let h = identity_diagram(&ArcDiagram::interval(n), g).expect("alpha arc diagram");
        v.push((
            format!("identity_n{n}"),
            commented(
                h,
                &format!("Product diagram of an interval carrying {n} matched arc(s)."),
            ),
        ));
    }
    let genus = ArcDiagram::surface_family(1, 1, 1).expect("valid family");
    let h = identity_diagram(&genus, g).expect("alpha arc diagram");
    v.push((
        "identity_genus1".into(),
        commented(
            h,
            "Product diagram of the genus one arc diagram with two interleaved arcs.",
        ),
    ));
    for n in 1..=5 {
        v.push((
            format!("annulus_n{n}"),
            commented(
                annulus(n, false),
                &format!("One alpha and one beta circle meeting in {n} positive point(s)."),
            ),
        ));
        v.push((
            format!("annulus_n{n}_weighted"),
            commented(
                annulus(n, true),
                &format!(
                    "Annulus with {n} positive point(s) weighted by the powers t^0 up to t^{}.",
                    n - 1
                ),
            ),
        ));
    }
    v.push((
        "mixed_2x2".into(),
        commented(
            ordinary_from_matrix(&[vec![1, 1], vec![-1, 1]], 2),
            "Closed diagram with presentation [[1, 1], [-1, 1]].",
        ),
    ));
    v.push(("halfproj_left".into(), halfproj_left()));
    v.push(("halfproj_right".into(), halfproj_right()));
    v.push(("idle_circle".into(), idle_circle()));
    v.push(("dup_beta".into(), dup_beta()));
    v.push(("qh_vanishing".into(), qh_vanishing()));
    for (f, m) in [(1, 1), (2, 1), (0, 2), (1, 2), (1, 3), (2, 3)] {
        v.push(twisted_fixture(f, m));
    }
    v
}

/// Fixture by name.
pub fn fixture(name: &str) -> Option<HeegaardDiagram> {
    fixture_library()
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, h)| h)
}
