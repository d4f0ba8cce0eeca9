//! Arc diagrams: oriented intervals and circles with a matching of marked points.

use serde::{Deserialize, Serialize};

use super::DiagramError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    Interval,
    Circle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArcType {
    Alpha,
    Beta,
}

impl ArcType {
    pub fn flipped(self) -> Self {
        match self {
            ArcType::Alpha => ArcType::Beta,
            ArcType::Beta => ArcType::Alpha,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Component {
    pub kind: ComponentKind,
    pub points: usize,
}

/// Marked points are numbered from 0 through the components in order.
/// A matched pair `[p, q]` is the matching arc oriented from `p` to `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcDiagram {
    pub components: Vec<Component>,
    pub matching: Vec<[usize; 2]>,
    #[serde(rename = "type")]
    pub arc_type: ArcType,
}

impl ArcDiagram {
    /// The diagram with no components.
    pub fn empty() -> Self {
        ArcDiagram {
            components: vec![],
            matching: vec![],
            arc_type: ArcType::Alpha,
        }
    }

    /// One interval carrying `k` consecutive matched pairs.
    pub fn interval(k: usize) -> Self {
        ArcDiagram {
            components: vec![Component {
                kind: ComponentKind::Interval,
                points: 2 * k,
            }],
            matching: (0..k).map(|i| [2 * i, 2 * i + 1]).collect(),
            arc_type: ArcType::Alpha,
        }
    }

    pub fn arc_count(&self) -> usize {
        self.matching.len()
    }

    pub fn point_count(&self) -> usize {
        self.components.iter().map(|c| c.points).sum()
    }

    /// Structural problems, empty when valid.
    pub fn violations(&self) -> Vec<String> {
        let mut v = vec![];
        let n = self.point_count();
        if n != 2 * self.matching.len() {
            v.push(format!(
                "arc diagram has {n} points but {} matched pairs",
                self.matching.len()
            ));
        }
        let mut seen = vec![0usize; n];
        for [p, q] in &self.matching {
            for x in [p, q] {
                match seen.get_mut(*x) {
                    Some(c) => *c += 1,
                    None => v.push(format!("matching refers to missing point {x}")),
                }
            }
        }
        for (i, c) in seen.iter().enumerate() {
            if *c != 1 {
                v.push(format!("point {i} is matched {c} times"));
            }
        }
        v
    }

    /// Build from a layout, rejecting malformed matchings.
    pub fn build(
        components: Vec<Component>,
        matching: Vec<[usize; 2]>,
        arc_type: ArcType,
    ) -> Result<Self, DiagramError> {
        let z = ArcDiagram {
            components,
            matching,
            arc_type,
        };
        let v = z.violations();
        if v.is_empty() {
            Ok(z)
        } else {
            Err(DiagramError::Invalid(v))
        }
    }

    /// Connected surface of genus `g` with `p >= 1` circles of one sign and `q >= 1` of the other.
    ///
    /// The first circle carries the handles: `p - 1` arcs to the other circles,
    /// `g` interleaved pairs of arcs and `q - 1` separating arcs, `2g + p + q - 2` arcs in all.
    pub fn surface_family(g: usize, p: usize, q: usize) -> Result<Self, DiagramError> {
        if p == 0 || q == 0 {
            return Err(DiagramError::Invalid(vec![
                "family needs p >= 1 and q >= 1".into(),
            ]));
        }
        let first = (p - 1) + 4 * g + 2 * (q - 1);
        let mut components = vec![Component {
            kind: ComponentKind::Circle,
            points: first,
        }];
        components.extend((1..p).map(|_| Component {
            kind: ComponentKind::Circle,
            points: 1,
        }));
        let mut matching = vec![];
        for i in 0..p - 1 {
            matching.push([i, first + i]);
        }
        let mut pos = p - 1;
        for _ in 0..g {
            matching.push([pos, pos + 2]);
            matching.push([pos + 1, pos + 3]);
            pos += 4;
        }
        for _ in 0..q - 1 {
            matching.push([pos, pos + 1]);
            pos += 2;
        }
        Self::build(components, matching, ArcType::Alpha)
    }

    /// Same arcs and components, opposite type.
    pub fn dual(&self) -> Self {
        ArcDiagram {
            arc_type: self.arc_type.flipped(),
            ..self.clone()
        }
    }

    /// Every matching arc oriented the other way.
    pub fn reverse(&self) -> Self {
        ArcDiagram {
            matching: self.matching.iter().map(|[p, q]| [*q, *p]).collect(),
            ..self.clone()
        }
    }

    /// Components of `self` followed by those of `o`.
    pub fn disjoint_union(&self, o: &Self) -> Self {
        let shift = self.point_count();
        let mut matching = self.matching.clone();
        matching.extend(o.matching.iter().map(|[p, q]| [p + shift, q + shift]));
        let mut components = self.components.clone();
        components.extend(o.components.iter().copied());
        let arc_type = if self.components.is_empty() {
            o.arc_type
        } else {
            self.arc_type
        };
        ArcDiagram {
            components,
            matching,
            arc_type,
        }
    }
}
