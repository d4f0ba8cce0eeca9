//! Identity diagrams, gluing, disjoint union, normalization, capping and reweighting.

use std::collections::{BTreeMap, BTreeSet};

use super::{
    fresh_id, AlphaArc, ArcDiagram, ArcType, BetaCircle, DiagramError, HeegaardDiagram, Orient,
    Point, Role,
};
use crate::exterior::Subset;
use crate::rings::{GroupDescriptor, HWeight};

/// Which side of an identity diagram a half-identity fragment covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Out,
    In,
}

fn arc(id: String) -> AlphaArc {
    AlphaArc {
        id,
        orient: Orient::Same,
    }
}

/// One half of the identity diagram: the arcs of one side and the cores of the 1-handles.
pub fn half_identity(
    z: &ArcDiagram,
    side: Side,
    group: GroupDescriptor,
) -> Result<HeegaardDiagram, DiagramError> {
    if z.arc_type != ArcType::Alpha {
        return Err(DiagramError::BetaInput);
    }
    let n = z.arc_count();
    let mut h = HeegaardDiagram::empty(group);
    let one = HWeight::identity(&group);
    for j in 0..n {
        let b = format!("b{}", j + 1);
        h.beta.push(BetaCircle {
            id: b.clone(),
            role: None,
        });
        let (a, sign) = match side {
            Side::Out => (format!("out{}", j + 1), -1),
            Side::In => (format!("in{}", j + 1), 1),
        };
        h.points.push(Point {
            alpha: a.clone(),
            beta: b,
            sign,
            weight: one.clone(),
        });
        match side {
            Side::Out => h.alpha_out.push(arc(a)),
            Side::In => h.alpha_in.push(arc(a)),
        }
    }
    match side {
        Side::Out => h.boundary_left = (n > 0).then(|| z.clone()),
        Side::In => h.boundary_right = (n > 0).then(|| z.clone()),
    }
    Ok(h)
}

/// Identity diagram of `Z`: β_j meets out_j with sign −1 and in_j with sign +1.
pub fn identity_diagram(
    z: &ArcDiagram,
    group: GroupDescriptor,
) -> Result<HeegaardDiagram, DiagramError> {
    let out = half_identity(z, Side::Out, group)?;
    let inn = half_identity(z, Side::In, group)?;
    let mut h = out;
    h.alpha_in = inn.alpha_in;
    h.boundary_right = inn.boundary_right;
    let mut pts = vec![];
    for (p, q) in h.points.iter().zip(&inn.points) {
        pts.push(p.clone());
        pts.push(q.clone());
    }
    h.points = pts;
    Ok(h)
}

fn boundary_eq(a: &Option<ArcDiagram>, b: &Option<ArcDiagram>) -> bool {
    let nonempty = |z: &Option<ArcDiagram>| {
        z.clone()
            .filter(|z| z.arc_count() > 0 || !z.components.is_empty())
    };
    nonempty(a) == nonempty(b)
}

/// Rename α and β ids of `h` that collide with `used`; returns the renaming.
fn rename_apart(
    h: &HeegaardDiagram,
    used: &mut BTreeSet<String>,
) -> (HeegaardDiagram, BTreeMap<String, String>) {
    let mut alpha_map = BTreeMap::new();
    for id in h.alpha_ids() {
        alpha_map.insert(id.clone(), fresh_id(&id, used));
    }
    let mut beta_map = BTreeMap::new();
    for b in &h.beta {
        beta_map.insert(b.id.clone(), fresh_id(&b.id, used));
    }
    let mut r = h.clone();
    for x in r.alpha_out.iter_mut().chain(r.alpha_in.iter_mut()) {
        x.id = alpha_map[&x.id].clone();
    }
    for c in r.alpha_circles.iter_mut() {
        *c = alpha_map[c].clone();
    }
    for b in r.beta.iter_mut() {
        b.id = beta_map[&b.id].clone();
    }
    for p in r.points.iter_mut() {
        p.alpha = alpha_map[&p.alpha].clone();
        p.beta = beta_map[&p.beta].clone();
    }
    (r, alpha_map)
}

/// Glue the outgoing side of `right` to the incoming side of `left`.
///
/// Arc `j` of `right`'s outgoing arcs merges with arc `j` of `left`'s incoming arcs.
pub fn glue(
    left: &HeegaardDiagram,
    right: &HeegaardDiagram,
) -> Result<HeegaardDiagram, DiagramError> {
    if left.group != right.group {
        return Err(DiagramError::GroupMismatch);
    }
    if left.n0() == 0 && right.n1() == 0 {
        return Err(DiagramError::EmptyInterface);
    }
    if !boundary_eq(&left.boundary_right, &right.boundary_left) {
        return Err(DiagramError::BoundaryMismatch(
            "interface arc diagrams differ".into(),
        ));
    }
    for (j, (x, y)) in left.alpha_in.iter().zip(&right.alpha_out).enumerate() {
        if x.orient != y.orient {
            return Err(DiagramError::BoundaryMismatch(format!(
                "arc {} is oriented differently on the two sides",
                j + 1
            )));
        }
    }
    let mut used = left.used_ids();
    let (r, _) = rename_apart(right, &mut used);
    let merged: BTreeMap<String, String> = r
        .alpha_out
        .iter()
        .zip(&left.alpha_in)
        .map(|(ro, li)| (ro.id.clone(), li.id.clone()))
        .collect();
    let mut h = HeegaardDiagram::empty(left.group);
    h.boundary_left = left.boundary_left.clone();
    h.boundary_right = r.boundary_right.clone();
    h.alpha_out = left.alpha_out.clone();
    h.alpha_in = r.alpha_in.clone();
    h.alpha_circles = left.alpha_circles.clone();
    h.alpha_circles
        .extend(left.alpha_in.iter().map(|x| x.id.clone()));
    h.alpha_circles.extend(r.alpha_circles.iter().cloned());
    h.beta = left
        .beta
        .iter()
        .chain(&r.beta)
        .map(|b| BetaCircle {
            id: b.id.clone(),
            role: None,
        })
        .collect();
    h.points = left.points.clone();
    for p in &r.points {
        let mut q = p.clone();
        if let Some(m) = merged.get(&q.alpha) {
            q.alpha = m.clone();
        }
        h.points.push(q);
    }
    Ok(h)
}

fn union_boundary(a: &Option<ArcDiagram>, b: &Option<ArcDiagram>) -> Option<ArcDiagram> {
    match (a, b) {
        (None, None) => None,
        (Some(x), None) => Some(x.clone()),
        (None, Some(y)) => Some(y.clone()),
        (Some(x), Some(y)) => Some(x.disjoint_union(y)),
    }
}

/// Disjoint union with every ordering concatenated, `h` first.
pub fn disjoint(
    h: &HeegaardDiagram,
    hp: &HeegaardDiagram,
) -> Result<HeegaardDiagram, DiagramError> {
    if h.group != hp.group {
        return Err(DiagramError::GroupMismatch);
    }
    let mut used = h.used_ids();
    let (r, _) = rename_apart(hp, &mut used);
    let mut d = h.clone();
    d.comment = None;
    d.boundary_left = union_boundary(&h.boundary_left, &r.boundary_left);
    d.boundary_right = union_boundary(&h.boundary_right, &r.boundary_right);
    d.alpha_out.extend(r.alpha_out);
    d.alpha_circles.extend(r.alpha_circles);
    d.alpha_in.extend(r.alpha_in);
    d.beta.extend(r.beta);
    for b in d.beta.iter_mut() {
        b.role = None;
    }
    d.points.extend(r.points);
    Ok(d)
}

/// Symmetrizer: the identity of `Z ⊔ Z'` with the outgoing side read as `Z' ⊔ Z`.
pub fn symmetrizer(
    z: &ArcDiagram,
    zp: &ArcDiagram,
    group: GroupDescriptor,
) -> Result<HeegaardDiagram, DiagramError> {
    let mut h = disjoint(&identity_diagram(z, group)?, &identity_diagram(zp, group)?)?;
    let n = z.arc_count();
    let mut outs = h.alpha_out.split_off(n);
    outs.append(&mut h.alpha_out);
    h.alpha_out = outs;
    h.boundary_left = match (z.arc_count(), zp.arc_count()) {
        (0, 0) => None,
        _ => Some(zp.disjoint_union(z)),
    };
    Ok(h)
}

/// Normal form: every arc turned into a circle, with a new β and a fresh arc per boundary arc.
pub fn normalize(h: &HeegaardDiagram) -> HeegaardDiagram {
    let mut used = h.used_ids();
    let one = HWeight::identity(&h.group);
    let mut out = HeegaardDiagram::empty(h.group);
    out.comment = h.comment.clone();
    out.boundary_left = h.boundary_left.clone();
    out.boundary_right = h.boundary_right.clone();
    let mut new_out_beta = vec![];
    let mut new_in_beta = vec![];
    let mut extra = vec![];
    for (j, x) in h.alpha_out.iter().enumerate() {
        let fa = fresh_id(&format!("aout{}", j + 1), &mut used);
        let fb = fresh_id(&format!("bout{}", j + 1), &mut used);
        out.alpha_out.push(AlphaArc {
            id: fa.clone(),
            orient: x.orient,
        });
        new_out_beta.push(BetaCircle {
            id: fb.clone(),
            role: Some(Role::NewOut(j)),
        });
        extra.push(Point {
            alpha: x.id.clone(),
            beta: fb.clone(),
            sign: 1,
            weight: one.clone(),
        });
        extra.push(Point {
            alpha: fa,
            beta: fb,
            sign: -1,
            weight: one.clone(),
        });
    }
    for (i, x) in h.alpha_in.iter().enumerate() {
        let fa = fresh_id(&format!("ain{}", i + 1), &mut used);
        let fb = fresh_id(&format!("bin{}", i + 1), &mut used);
        out.alpha_in.push(AlphaArc {
            id: fa.clone(),
            orient: x.orient,
        });
        new_in_beta.push(BetaCircle {
            id: fb.clone(),
            role: Some(Role::NewIn(i)),
        });
        extra.push(Point {
            alpha: x.id.clone(),
            beta: fb.clone(),
            sign: -1,
            weight: one.clone(),
        });
        extra.push(Point {
            alpha: fa,
            beta: fb,
            sign: 1,
            weight: one.clone(),
        });
    }
    out.alpha_circles = h
        .alpha_out
        .iter()
        .map(|x| x.id.clone())
        .chain(h.alpha_circles.iter().cloned())
        .chain(h.alpha_in.iter().map(|x| x.id.clone()))
        .collect();
    out.beta = new_out_beta;
    out.beta.extend(h.beta.iter().map(|b| BetaCircle {
        id: b.id.clone(),
        role: Some(Role::Core),
    }));
    out.beta.extend(new_in_beta);
    out.points = h.points.clone();
    out.points.extend(extra);
    out
}

/// View as a one-sided diagram: former incoming arcs (reversed) then outgoing arcs, all outgoing.
pub fn reinterpret_one_sided(h: &HeegaardDiagram) -> HeegaardDiagram {
    let mut r = h.clone();
    r.alpha_out = h
        .alpha_in
        .iter()
        .map(|x| AlphaArc {
            id: x.id.clone(),
            orient: x.orient.flipped(),
        })
        .chain(h.alpha_out.iter().cloned())
        .collect();
    r.alpha_in = vec![];
    let z0 = h.boundary_right.as_ref().map(|z| z.reverse());
    r.boundary_left = union_boundary(&z0, &h.boundary_left);
    r.boundary_right = None;
    for b in r.beta.iter_mut() {
        b.role = None;
    }
    r
}

/// Ordinary diagram capping the in arcs in `i` and the out arcs outside `j`.
pub fn cap(h: &HeegaardDiagram, i: Subset, j: Subset) -> Result<HeegaardDiagram, DiagramError> {
    if !h.has_roles() {
        return Err(DiagramError::MissingRoles);
    }
    let mut used = h.used_ids();
    let one = HWeight::identity(&h.group);
    let arcs: BTreeSet<String> = h
        .alpha_out
        .iter()
        .chain(&h.alpha_in)
        .map(|x| x.id.clone())
        .collect();
    let mut c = HeegaardDiagram::empty(h.group);
    c.beta = h
        .beta
        .iter()
        .map(|b| BetaCircle {
            id: b.id.clone(),
            role: None,
        })
        .collect();
    c.points = h
        .points
        .iter()
        .filter(|p| !arcs.contains(&p.alpha))
        .cloned()
        .collect();
    let mut out_circles = vec![];
    for jj in j.complement(h.n1()).iter() {
        let bi = h
            .beta_index(Role::NewOut(jj))
            .ok_or(DiagramError::MissingRoles)?;
        let id = fresh_id(&format!("capout{}", jj + 1), &mut used);
        c.points.push(Point {
            alpha: id.clone(),
            beta: h.beta[bi].id.clone(),
            sign: -1,
            weight: one.clone(),
        });
        out_circles.push(id);
    }
    let mut in_circles = vec![];
    for ii in i.iter().filter(|&x| x < h.n0()) {
        let bi = h
            .beta_index(Role::NewIn(ii))
            .ok_or(DiagramError::MissingRoles)?;
        let id = fresh_id(&format!("capin{}", ii + 1), &mut used);
        c.points.push(Point {
            alpha: id.clone(),
            beta: h.beta[bi].id.clone(),
            sign: 1,
            weight: one.clone(),
        });
        in_circles.push(id);
    }
    c.alpha_circles = out_circles;
    c.alpha_circles.extend(h.alpha_circles.iter().cloned());
    c.alpha_circles.extend(in_circles);
    Ok(c)
}

/// Multiply the weight of every point on an α curve by `w`, or on a β curve by `w⁻¹`.
pub fn reweight(
    h: &HeegaardDiagram,
    curve: &str,
    w: &HWeight,
) -> Result<HeegaardDiagram, DiagramError> {
    let is_alpha = h.alpha_ids().iter().any(|a| a == curve);
    let is_beta = h.beta.iter().any(|b| b.id == curve);
    if !is_alpha && !is_beta {
        return Err(DiagramError::MissingCurve(curve.into()));
    }
    let g = h.group;
    let factor = if is_alpha { w.clone() } else { w.inverse(&g) };
    let mut r = h.clone();
    for p in r.points.iter_mut() {
        if (is_alpha && p.alpha == curve) || (is_beta && p.beta == curve) {
            p.weight = p.weight.mul(&factor, &g);
        }
    }
    Ok(r)
}

/// Which curve of a normalized diagram a lift change modifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftCase {
    AlphaCircle,
    CoreBeta,
    NewOutBeta(usize),
    NewInBeta(usize),
}

/// A lift change on a normalized diagram together with its predicted effect.
///
/// `rebase` multiplies entries whose idempotents contain the given arc; applying it to the
/// new map must give `unit` times the old map.
#[derive(Clone, Debug)]
pub struct LiftChange {
    pub case: LiftCase,
    pub diagram: HeegaardDiagram,
    pub unit: HWeight,
    pub rebase: Rebase,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rebase {
    None,
    /// Multiply entries with out arc `j` in the output subset by the weight.
    Out(usize, HWeight),
    /// Multiply entries with in arc `i` in the input subset by the weight.
    In(usize, HWeight),
}

/// Change of the lift of one curve of a normalized diagram by `w`.
///
/// A new β circle only moves the point it shares with the old arc's circle; the fresh
/// arc's point stays, the change being absorbed by the cap on that arc.
pub fn lift_change(
    h: &HeegaardDiagram,
    curve: &str,
    w: &HWeight,
) -> Result<LiftChange, DiagramError> {
    if !h.has_roles() {
        return Err(DiagramError::MissingRoles);
    }
    let g = h.group;
    if h.alpha_circles.iter().any(|c| c == curve) {
        return Ok(LiftChange {
            case: LiftCase::AlphaCircle,
            diagram: reweight(h, curve, w)?,
            unit: w.clone(),
            rebase: Rebase::None,
        });
    }
    let bi = h
        .beta
        .iter()
        .position(|b| b.id == curve)
        .ok_or_else(|| DiagramError::MissingCurve(curve.into()))?;
    let winv = w.inverse(&g);
    let circle_of = |arc: &AlphaArc| -> Option<String> {
        // The fresh arc's partner circle is the other α curve on this β.
        h.points
            .iter()
            .find(|p| p.beta == curve && p.alpha != arc.id)
            .map(|p| p.alpha.clone())
    };
    match h.beta[bi].role {
        Some(Role::Core) => Ok(LiftChange {
            case: LiftCase::CoreBeta,
            diagram: reweight(h, curve, w)?,
            unit: winv,
            rebase: Rebase::None,
        }),
        Some(Role::NewOut(j)) => {
            let circle = circle_of(&h.alpha_out[j]).ok_or(DiagramError::MissingRoles)?;
            let mut d = h.clone();
            for p in d.points.iter_mut() {
                if p.beta == curve && p.alpha == circle {
                    p.weight = p.weight.mul(&winv, &g);
                }
            }
            Ok(LiftChange {
                case: LiftCase::NewOutBeta(j),
                diagram: d,
                unit: HWeight::identity(&g),
                rebase: Rebase::Out(j, w.clone()),
            })
        }
        Some(Role::NewIn(i)) => {
            let circle = circle_of(&h.alpha_in[i]).ok_or(DiagramError::MissingRoles)?;
            let mut d = h.clone();
            for p in d.points.iter_mut() {
                if p.beta == curve && p.alpha == circle {
                    p.weight = p.weight.mul(&winv, &g);
                }
            }
            Ok(LiftChange {
                case: LiftCase::NewInBeta(i),
                diagram: d,
                unit: winv.clone(),
                rebase: Rebase::In(i, winv),
            })
        }
        None => Err(DiagramError::MissingRoles),
    }
}
