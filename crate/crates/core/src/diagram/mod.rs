//! Combinatorial α-α bordered sutured Heegaard diagrams and their constructions.
//!
//! A diagram stores only curve identities, orderings, orientation flags, and signed,
//! weighted intersection points. Curve positions are not recorded.

pub mod arc;
pub mod build;
pub mod json;
pub mod ops;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use arc::{ArcDiagram, ArcType, Component, ComponentKind};

use crate::rings::{GroupDescriptor, HWeight, Mono};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("invalid JSON at line {line}, column {column}: {msg}")]
    Json {
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("invalid diagram: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error("boundaries do not match: {0}")]
    BoundaryMismatch(String),
    #[error("group descriptors differ")]
    GroupMismatch,
    #[error("diagram has no role tags; normalize it first")]
    MissingRoles,
    #[error("no curve with id {0:?}")]
    MissingCurve(String),
    #[error("gluing along an empty interface; use disjoint union instead")]
    EmptyInterface,
    #[error("identity diagrams need an alpha-type arc diagram")]
    BetaInput,
    #[error("bad weight {text:?}: {msg}")]
    Weight { text: String, msg: String },
}

/// Orientation of an α arc relative to its matching arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orient {
    Same,
    Opposite,
}

impl Orient {
    pub fn flipped(self) -> Self {
        match self {
            Orient::Same => Orient::Opposite,
            Orient::Opposite => Orient::Same,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlphaArc {
    pub id: String,
    pub orient: Orient,
}

/// Position of a β circle in a normalized diagram. Arc indices are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    NewOut(usize),
    Core,
    NewIn(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::NewOut(j) => write!(f, "newOut({})", j + 1),
            Role::Core => f.write_str("core"),
            Role::NewIn(i) => write!(f, "newIn({})", i + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaCircle {
    pub id: String,
    pub role: Option<Role>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub alpha: String,
    pub beta: String,
    pub sign: i8,
    pub weight: HWeight,
}

/// α-α diagram from the incoming boundary `Z0` (right) to the outgoing boundary `Z1` (left).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeegaardDiagram {
    pub group: GroupDescriptor,
    pub boundary_left: Option<ArcDiagram>,
    pub boundary_right: Option<ArcDiagram>,
    pub alpha_out: Vec<AlphaArc>,
    pub alpha_circles: Vec<String>,
    pub alpha_in: Vec<AlphaArc>,
    pub beta: Vec<BetaCircle>,
    pub points: Vec<Point>,
    pub comment: Option<String>,
}

/// Kind of an α curve together with its index inside its block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaKind {
    Out(usize),
    Circle(usize),
    In(usize),
}

/// Index-based view of a diagram used by the enumeration and matrices.
#[derive(Clone, Debug)]
pub struct Compiled {
    pub n1: usize,
    pub a: usize,
    pub n0: usize,
    pub b: usize,
    /// α curves in the total order: out arcs, circles, in arcs.
    pub alpha_ids: Vec<String>,
    pub beta_ids: Vec<String>,
    pub points: Vec<CPoint>,
    /// Point indices on each β, in point-list order.
    pub by_beta: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct CPoint {
    pub alpha: usize,
    pub beta: usize,
    pub sign: i8,
    pub weight: Mono,
}

impl Compiled {
    pub fn kind(&self, alpha: usize) -> AlphaKind {
        if alpha < self.n1 {
            AlphaKind::Out(alpha)
        } else if alpha < self.n1 + self.a {
            AlphaKind::Circle(alpha - self.n1)
        } else {
            AlphaKind::In(alpha - self.n1 - self.a)
        }
    }

    /// Declared degree `n1 + a - b`.
    pub fn degree(&self) -> i64 {
        self.n1 as i64 + self.a as i64 - self.b as i64
    }
}

impl HeegaardDiagram {
    /// Diagram with no boundary and no curves.
    pub fn empty(group: GroupDescriptor) -> Self {
        HeegaardDiagram {
            group,
            boundary_left: None,
            boundary_right: None,
            alpha_out: vec![],
            alpha_circles: vec![],
            alpha_in: vec![],
            beta: vec![],
            points: vec![],
            comment: None,
        }
    }

    pub fn n1(&self) -> usize {
        self.alpha_out.len()
    }

    pub fn n0(&self) -> usize {
        self.alpha_in.len()
    }

    pub fn a(&self) -> usize {
        self.alpha_circles.len()
    }

    pub fn b(&self) -> usize {
        self.beta.len()
    }

    /// `n1 + a - b`.
    pub fn degree(&self) -> i64 {
        self.n1() as i64 + self.a() as i64 - self.b() as i64
    }

    pub fn is_ordinary(&self) -> bool {
        self.alpha_out.is_empty() && self.alpha_in.is_empty()
    }

    pub fn has_roles(&self) -> bool {
        self.beta.iter().all(|b| b.role.is_some())
    }

    /// All α ids in the total order.
    pub fn alpha_ids(&self) -> Vec<String> {
        self.alpha_out
            .iter()
            .map(|x| x.id.clone())
            .chain(self.alpha_circles.iter().cloned())
            .chain(self.alpha_in.iter().map(|x| x.id.clone()))
            .collect()
    }

    pub fn beta_index(&self, role: Role) -> Option<usize> {
        self.beta.iter().position(|b| b.role == Some(role))
    }

    /// Structural violations; empty iff the diagram is well formed.
    pub fn validate(&self) -> Vec<String> {
        let mut v = vec![];
        if self.group.torsion_order == 0 {
            v.push("torsion order must be positive".into());
        }
        for (name, z) in [
            ("left", &self.boundary_left),
            ("right", &self.boundary_right),
        ] {
            if let Some(z) = z {
                v.extend(
                    z.violations()
                        .into_iter()
                        .map(|e| format!("boundary {name}: {e}")),
                );
            }
        }
        let arcs = |z: &Option<ArcDiagram>| z.as_ref().map_or(0, |z| z.arc_count());
        if self.alpha_out.len() != arcs(&self.boundary_left) {
            v.push(format!(
                "{} outgoing α arcs but the left boundary has {} arcs",
                self.alpha_out.len(),
                arcs(&self.boundary_left)
            ));
        }
        if self.alpha_in.len() != arcs(&self.boundary_right) {
            v.push(format!(
                "{} incoming α arcs but the right boundary has {} arcs",
                self.alpha_in.len(),
                arcs(&self.boundary_right)
            ));
        }
        let mut alphas = BTreeSet::new();
        for id in self.alpha_ids() {
            if !alphas.insert(id.clone()) {
                v.push(format!("duplicate α id {id:?}"));
            }
        }
        let mut betas = BTreeSet::new();
        for b in &self.beta {
            if !betas.insert(b.id.clone()) {
                v.push(format!("duplicate β id {:?}", b.id));
            }
        }
        for (k, p) in self.points.iter().enumerate() {
            if !alphas.contains(&p.alpha) {
                v.push(format!("point {k} refers to missing α id {:?}", p.alpha));
            }
            if !betas.contains(&p.beta) {
                v.push(format!("point {k} refers to missing β id {:?}", p.beta));
            }
            if p.sign != 1 && p.sign != -1 {
                v.push(format!("point {k} has sign {} (must be ±1)", p.sign));
            }
            if p.weight.free_exponents.len() != self.group.free_rank
                || p.weight.torsion_exponent >= self.group.torsion_order.max(1)
            {
                v.push(format!("point {k} has a weight outside the group"));
            }
        }
        v.extend(self.role_violations());
        v
    }

    fn role_violations(&self) -> Vec<String> {
        let tagged = self.beta.iter().filter(|b| b.role.is_some()).count();
        if tagged == 0 {
            return vec![];
        }
        if tagged != self.beta.len() {
            return vec!["role tags must be present on every β circle or none".into()];
        }
        let roles: Vec<Role> = self.beta.iter().map(|b| b.role.unwrap()).collect();
        let mut expect = vec![];
        expect.extend((0..self.n1()).map(Role::NewOut));
        let cores = roles.iter().filter(|r| **r == Role::Core).count();
        expect.extend((0..cores).map(|_| Role::Core));
        expect.extend((0..self.n0()).map(Role::NewIn));
        if roles != expect {
            return vec!["role tags must read newOut(1..n1), then core, then newIn(1..n0)".into()];
        }
        vec![]
    }

    /// Index view; assumes a valid diagram.
    pub fn compile(&self) -> Compiled {
        let alpha_ids = self.alpha_ids();
        let aidx: BTreeMap<&str, usize> = alpha_ids
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let bidx: BTreeMap<&str, usize> = self
            .beta
            .iter()
            .enumerate()
            .map(|(i, b)| (b.id.as_str(), i))
            .collect();
        let mut by_beta = vec![vec![]; self.beta.len()];
        let points: Vec<CPoint> = self
            .points
            .iter()
            .enumerate()
            .map(|(k, p)| {
                let beta = bidx[p.beta.as_str()];
                by_beta[beta].push(k);
                CPoint {
                    alpha: aidx[p.alpha.as_str()],
                    beta,
                    sign: p.sign,
                    weight: p.weight.mono(),
                }
            })
            .collect();
        Compiled {
            n1: self.n1(),
            a: self.a(),
            n0: self.n0(),
            b: self.b(),
            alpha_ids,
            beta_ids: self.beta.iter().map(|b| b.id.clone()).collect(),
            points,
            by_beta,
        }
    }

    /// All ids in use, α and β together.
    pub(crate) fn used_ids(&self) -> BTreeSet<String> {
        self.alpha_ids()
            .into_iter()
            .chain(self.beta.iter().map(|b| b.id.clone()))
            .collect()
    }
}

/// `base` if unused, else the first free `base.k`.
pub(crate) fn fresh_id(base: &str, used: &mut BTreeSet<String>) -> String {
    let mut id = base.to_string();
    let mut k = 2;
    while used.contains(&id) {
        id = format!("{base}.{k}");
        k += 1;
    }
    used.insert(id.clone());
    id
}
