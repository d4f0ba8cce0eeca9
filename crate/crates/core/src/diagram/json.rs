//! JSON encoding of diagrams.

use serde::{Deserialize, Serialize};

use super::{AlphaArc, ArcDiagram, BetaCircle, DiagramError, HeegaardDiagram, Orient, Point, Role};
use crate::rings::parse::parse_zh;
use crate::rings::{GroupDescriptor, HWeight};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDiagram {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    comment: Option<String>,
    group: GroupDescriptor,
    boundary_left: Option<ArcDiagram>,
    boundary_right: Option<ArcDiagram>,
    alpha: RawAlpha,
    beta: RawBeta,
    points: Vec<RawPoint>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlpha {
    out: Vec<RawArc>,
    circles: Vec<String>,
    #[serde(rename = "in")]
    inn: Vec<RawArc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawArc {
    id: String,
    orient: RawOrient,
}

#[derive(Serialize, Deserialize, Clone, Copy)]
#[serde(rename_all = "lowercase")]
enum RawOrient {
    Same,
    Opposite,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBeta {
    circles: Vec<RawBetaCircle>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBetaCircle {
    id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    role: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoint {
    alpha: String,
    beta: String,
    sign: i8,
    #[serde(default = "one")]
    weight: String,
}

fn one() -> String {
    "1".into()
}

fn parse_role(s: &str) -> Option<Role> {
    if s == "core" {
        return Some(Role::Core);
    }
    let (name, rest) = s.split_once('(')?;
    let k: usize = rest.strip_suffix(')')?.trim().parse().ok()?;
    let k = k.checked_sub(1)?;
    match name {
        "newOut" => Some(Role::NewOut(k)),
        "newIn" => Some(Role::NewIn(k)),
        _ => None,
    }
}

fn parse_weight(s: &str, g: &GroupDescriptor) -> Result<HWeight, DiagramError> {
    let err = |msg: String| DiagramError::Weight {
        text: s.into(),
        msg,
    };
    let e = parse_zh(s, g.torsion_order).map_err(|e| err(e.to_string()))?;
    let mut terms = e.terms();
    let (h, c) = match (terms.next(), terms.next()) {
        (Some(t), None) => t,
        _ => return Err(err("weight must be a single group element".into())),
    };
    if *c != num_bigint::BigInt::from(1) {
        return Err(err("weight must have coefficient 1".into()));
    }
    if h.free().len() > g.free_rank {
        return Err(err(format!(
            "uses t{} but the free rank is {}",
            h.free().len(),
            g.free_rank
        )));
    }
    Ok(HWeight::from_mono(h, g))
}

fn json_err(e: serde_json::Error) -> DiagramError {
    DiagramError::Json {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    }
}

impl HeegaardDiagram {
    /// Parse the JSON form. Structural validity is checked separately by [`HeegaardDiagram::validate`].
    pub fn from_json(text: &str) -> Result<Self, DiagramError> {
        let raw: RawDiagram = serde_json::from_str(text).map_err(json_err)?;
        let g = raw.group;
        if g.torsion_order == 0 {
            return Err(DiagramError::Invalid(vec![
                "torsion_order must be positive".into(),
            ]));
        }
        let arc = |a: RawArc| AlphaArc {
            id: a.id,
            orient: match a.orient {
                RawOrient::Same => Orient::Same,
                RawOrient::Opposite => Orient::Opposite,
            },
        };
        let mut beta = vec![];
        for b in raw.beta.circles {
            let role = match &b.role {
                None => None,
                Some(s) => Some(parse_role(s).ok_or_else(|| {
                    DiagramError::Invalid(vec![format!("β {:?} has unknown role {s:?}", b.id)])
                })?),
            };
            beta.push(BetaCircle { id: b.id, role });
        }
        let points = raw
            .points
            .into_iter()
            .map(|p| {
                Ok(Point {
                    weight: parse_weight(&p.weight, &g)?,
                    alpha: p.alpha,
                    beta: p.beta,
                    sign: p.sign,
                })
            })
            .collect::<Result<Vec<_>, DiagramError>>()?;
        Ok(HeegaardDiagram {
            group: g,
            boundary_left: raw.boundary_left,
            boundary_right: raw.boundary_right,
            alpha_out: raw.alpha.out.into_iter().map(arc).collect(),
            alpha_circles: raw.alpha.circles,
            alpha_in: raw.alpha.inn.into_iter().map(arc).collect(),
            beta,
            points,
            comment: raw.comment,
        })
    }

    pub fn to_json(&self) -> String {
        let arc = |a: &AlphaArc| RawArc {
            id: a.id.clone(),
            orient: match a.orient {
                Orient::Same => RawOrient::Same,
                Orient::Opposite => RawOrient::Opposite,
            },
        };
        let raw = RawDiagram {
            comment: self.comment.clone(),
            group: self.group,
            boundary_left: self.boundary_left.clone(),
            boundary_right: self.boundary_right.clone(),
            alpha: RawAlpha {
                out: self.alpha_out.iter().map(arc).collect(),
                circles: self.alpha_circles.clone(),
                inn: self.alpha_in.iter().map(arc).collect(),
            },
            beta: RawBeta {
                circles: self
                    .beta
                    .iter()
                    .map(|b| RawBetaCircle {
                        id: b.id.clone(),
                        role: b.role.map(|r| r.to_string()),
                    })
                    .collect(),
            },
            points: self
                .points
                .iter()
                .map(|p| RawPoint {
                    alpha: p.alpha.clone(),
                    beta: p.beta.clone(),
                    sign: p.sign,
                    weight: p.weight.to_string(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("serializable") + "\n"
    }
}
