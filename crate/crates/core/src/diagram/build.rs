//! Small builders for ordinary and bordered diagrams from index data.

use super::{AlphaArc, ArcDiagram, BetaCircle, HeegaardDiagram, Orient, Point};
use crate::rings::{GroupDescriptor, HWeight};

/// Intersection point given by indices: β index, α index in the total order, sign, weight.
#[derive(Clone, Debug)]
pub struct IndexPoint {
    pub beta: usize,
    pub alpha: usize,
    pub sign: i8,
    pub weight: HWeight,
}

/// Diagram with `n1` outgoing arcs over `z1`, `a` circles, `n0` incoming arcs over `z0`
/// and `b` β circles. Ids are `o1.., c1.., i1.., b1..`.
pub fn from_indices(
    group: GroupDescriptor,
    z1: Option<ArcDiagram>,
    a: usize,
    z0: Option<ArcDiagram>,
    b: usize,
    points: &[IndexPoint],
) -> HeegaardDiagram {
    let n1 = z1.as_ref().map_or(0, |z| z.arc_count());
    let n0 = z0.as_ref().map_or(0, |z| z.arc_count());
    let mut h = HeegaardDiagram::empty(group);
    h.boundary_left = z1;
    h.boundary_right = z0;
    h.alpha_out = (0..n1)
        .map(|j| AlphaArc {
            id: format!("o{}", j + 1),
            orient: Orient::Same,
        })
        .collect();
    h.alpha_circles = (0..a).map(|c| format!("c{}", c + 1)).collect();
    h.alpha_in = (0..n0)
        .map(|i| AlphaArc {
            id: format!("i{}", i + 1),
            orient: Orient::Same,
        })
        .collect();
    h.beta = (0..b)
        .map(|k| BetaCircle {
            id: format!("b{}", k + 1),
            role: None,
        })
        .collect();
    let ids = h.alpha_ids();
    h.points = points
        .iter()
        .map(|p| Point {
            alpha: ids[p.alpha].clone(),
            beta: format!("b{}", p.beta + 1),
            sign: p.sign,
            weight: p.weight.clone(),
        })
        .collect();
    h
}

/// Ordinary diagram whose `(β_i, α_j)` pair carries `|m[i][j]|` points of the sign of `m[i][j]`.
pub fn ordinary_from_matrix(m: &[Vec<i64>], a: usize) -> HeegaardDiagram {
    let g = GroupDescriptor::default();
    let mut pts = vec![];
    for (i, row) in m.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            for _ in 0..v.unsigned_abs() {
                pts.push(IndexPoint {
                    beta: i,
                    alpha: j,
                    sign: v.signum() as i8,
                    weight: HWeight::identity(&g),
                });
            }
        }
    }
    from_indices(g, None, a, None, m.len(), &pts)
}

/// One α circle, one β circle, `n` positive points; weighted version uses `1, t, .., t^(n-1)`.
pub fn annulus(n: usize, weighted: bool) -> HeegaardDiagram {
    let g = GroupDescriptor {
        free_rank: usize::from(weighted),
        torsion_order: 1,
    };
    let pts: Vec<IndexPoint> = (0..n)
        .map(|k| IndexPoint {
            beta: 0,
            alpha: 0,
            sign: 1,
            weight: if weighted {
                HWeight {
                    free_exponents: vec![k as i64],
                    torsion_exponent: 0,
                }
            } else {
                HWeight::identity(&g)
            },
        })
        .collect();
    from_indices(g, None, 1, None, 1, &pts)
}
