//! Alexander functions and functors over `Z`, `Z[G]` and `Q[H]`.

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bsda::{bsda_z, bsda_zh};
use crate::diagram::ops::normalize;
use crate::diagram::{DiagramError, HeegaardDiagram, Role};
use crate::exterior::{global_unit, ExteriorError, GradedMap, Subset};
use crate::homology::{presentation_z, presentation_zh};
use crate::rings::integer::signum;
use crate::rings::qh::divisors;
use crate::rings::{sign, Matrix, QHElem, Ring, FG, Z, ZG};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlexanderError {
    #[error("expected {want} appended vectors, got {got}")]
    Count { want: i64, got: usize },
    #[error("appended vector has length {got}, expected {want}")]
    Length { want: usize, got: usize },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
}

/// Coefficient ring for functors and comparisons.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlexRing {
    Z,
    ZG,
    QH,
}

/// `det [M | u_1 .. u_d]`, or zero when `M` has a kernel.
pub fn alexander_function<R: Ring>(m: &Matrix<R>, u: &[Vec<R>]) -> Result<R, AlexanderError> {
    let d = m.rows() as i64 - m.cols() as i64;
    if d < 0 || u.len() as i64 != d {
        return Err(AlexanderError::Count {
            want: d,
            got: u.len(),
        });
    }
    for v in u {
        if v.len() != m.rows() {
            return Err(AlexanderError::Length {
                want: m.rows(),
                got: v.len(),
            });
        }
    }
    if m.rank() < m.cols() {
        return Ok(R::zero());
    }
    Ok(m.with_columns(u).det().expect("square by construction"))
}

/// Alexander function over `Q[H]`, computed in each character component.
pub fn alexander_function_qh(
    m: &Matrix<ZG>,
    u: &[Vec<ZG>],
    torsion: u32,
) -> Result<QHElem, AlexanderError> {
    let comps = divisors(torsion)
        .into_iter()
        .map(|d| {
            let md = m.map(|x| x.to_component(d));
            let ud: Vec<Vec<FG>> = u
                .iter()
                .map(|v| v.iter().map(|x| x.to_component(d)).collect())
                .collect();
            alexander_function(&md, &ud)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QHElem::from_components(torsion, comps))
}

/// Image of an arc basis element: minus the one-cell of its new β circle.
fn unit_column<R: Ring>(rows: usize, at: usize) -> Vec<R> {
    let mut v = vec![R::zero(); rows];
    v[at] = -R::one();
    v
}

/// Functor entries from a normalized diagram's presentation over a domain.
fn functor_from<R: Ring>(
    h: &HeegaardDiagram,
    m: &Matrix<R>,
) -> Result<GradedMap<R>, AlexanderError> {
    functor_via(h, m, |v| v)
}

/// As [`functor_from`], with appended columns passed through `col` before the determinant.
fn functor_via<R: Ring>(
    h: &HeegaardDiagram,
    m: &Matrix<R>,
    col: impl Fn(Vec<R>) -> Vec<R>,
) -> Result<GradedMap<R>, AlexanderError> {
    let rows = h.b();
    if !h.has_roles() {
        return Err(DiagramError::MissingRoles.into());
    }
    let (n0, n1, c) = (h.n0(), h.n1(), h.degree());
    let outs: Vec<usize> = (0..n1)
        .map(|j| {
            h.beta_index(Role::NewOut(j))
                .ok_or(DiagramError::MissingRoles)
        })
        .collect::<Result<_, _>>()?;
    let ins: Vec<usize> = (0..n0)
        .map(|i| {
            h.beta_index(Role::NewIn(i))
                .ok_or(DiagramError::MissingRoles)
        })
        .collect::<Result<_, _>>()?;
    let mut f = GradedMap::zero(n0, n1, c);
    if m.rank() < m.cols() {
        return Ok(f);
    }
    for i in Subset::all(n0) {
        let size = i.len() as i64 + c;
        if size < 0 || size > n1 as i64 {
            continue;
        }
        for j in Subset::of_size(n1, size as usize) {
            let jc = j.complement(n1);
            let mut cols: Vec<Vec<R>> = i.iter().map(|x| col(unit_column(rows, ins[x]))).collect();
            cols.extend(jc.iter().map(|x| col(unit_column(rows, outs[x]))));
            let v = m.with_columns(&cols).det().expect("square");
            let s = j.inversions_with(jc) as i64 + c * (n1 as i64 - j.len() as i64);
            f.add_entry(i, j, v * sign::<R>(s));
        }
    }
    Ok(f)
}

/// Integer functor of a normalized diagram computed from an equivalent presentation.
pub fn alexander_functor_equivalent(
    h: &HeegaardDiagram,
    ep: &EquivalentPresentation<Z>,
) -> Result<GradedMap<Z>, AlexanderError> {
    functor_via(h, &ep.matrix, |v| ep.transport(&v))
}

pub fn alexander_functor_z(h: &HeegaardDiagram) -> Result<GradedMap<Z>, AlexanderError> {
    functor_from(h, &presentation_z(h).matrix)
}

/// Over `Z[G]`, with torsion parts of weights sent to 1.
pub fn alexander_functor_zg(h: &HeegaardDiagram) -> Result<GradedMap<ZG>, AlexanderError> {
    let m = presentation_zh(h).matrix.map(|x| x.project_free());
    functor_from(h, &m)
}

/// Over `Q[H]`: one functor per character component, reassembled.
pub fn alexander_functor_qh(h: &HeegaardDiagram) -> Result<GradedMap<QHElem>, AlexanderError> {
    let torsion = h.group.torsion_order;
    let m = presentation_zh(h).matrix;
    let parts = divisors(torsion)
        .into_iter()
        .map(|d| functor_from(h, &m.map(|x| x.to_component(d))))
        .collect::<Result<Vec<_>, _>>()?;
    let mut f = GradedMap::zero(h.n0(), h.n1(), h.degree());
    let mut keys: Vec<(Subset, Subset)> = parts
        .iter()
        .flat_map(|p| p.entries().map(|(k, _)| *k))
        .collect();
    keys.sort();
    keys.dedup();
    for (i, j) in keys {
        let comps = parts.iter().map(|p| p.entry(i, j)).collect();
        f.add_entry(i, j, QHElem::from_components(torsion, comps));
    }
    Ok(f)
}

/// Outcome of comparing `[BSDA]` with the Alexander functor.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub ring: AlexRing,
    /// The unit `u` with `bsda = u · functor`, printed, if any.
    pub unit: Option<String>,
    pub bsda: String,
    pub functor: String,
}

impl Comparison {
    pub fn pass(&self) -> bool {
        self.unit.is_some()
    }
}

fn compared<R: Ring>(
    ring: AlexRing,
    b: &GradedMap<R>,
    a: &GradedMap<R>,
    text: impl Fn(&R) -> String,
) -> Result<Comparison, AlexanderError> {
    let unit = global_unit(b, a)?.map(|u| text(&u));
    Ok(Comparison {
        ring,
        unit,
        bsda: b.render(),
        functor: a.render(),
    })
}

fn integer_unit_text(u: &Z) -> String {
    if signum(u) < 0 {
        format!("{u}")
    } else {
        format!("+{u}")
    }
}

/// `+t^0`, `-t1^2*t2^-1` and so on.
fn group_unit_text(u: &ZG) -> String {
    match u.as_unit_monomial() {
        Some((c, m)) => {
            let s = if signum(&c) < 0 { '-' } else { '+' };
            if m.is_identity() {
                format!("{s}t^0")
            } else {
                format!("{s}{m}")
            }
        }
        None => u.to_string(),
    }
}

/// `[BSDA](H)` against the Alexander functor of `normalize(H)`.
pub fn compare_bsda_alexander(
    h: &HeegaardDiagram,
    ring: AlexRing,
) -> Result<Comparison, AlexanderError> {
    let hn = normalize(h);
    match ring {
        AlexRing::Z => compared(
            ring,
            &bsda_z(h),
            &alexander_functor_z(&hn)?,
            integer_unit_text,
        ),
        AlexRing::ZG => {
            let b = bsda_zh(h).map_values(|x| x.project_free());
            compared(ring, &b, &alexander_functor_zg(&hn)?, group_unit_text)
        }
        AlexRing::QH => {
            let m = h.group.torsion_order;
            let b = bsda_zh(h).map_values(|x| QHElem::from_zh(x, m));
            compared(ring, &b, &alexander_functor_qh(&hn)?, |u| u.to_string())
        }
    }
}

fn small<R: Ring>(k: i64) -> R {
    let one = if k < 0 { -R::one() } else { R::one() };
    (0..k.unsigned_abs()).fold(R::zero(), |a, _| a + one.clone())
}

/// A presentation of the same module, with the row transform that moves appended vectors.
#[derive(Clone, Debug)]
pub struct EquivalentPresentation<R> {
    pub matrix: Matrix<R>,
    /// Number of stabilizing blocks.
    pub stabilized: usize,
    /// Unimodular row transform on the stabilized row space.
    pub rows: Matrix<R>,
}

impl<R: Ring> EquivalentPresentation<R> {
    /// `P · [u; 0]`.
    pub fn transport(&self, u: &[R]) -> Vec<R> {
        let mut v = u.to_vec();
        v.extend((0..self.stabilized).map(|_| R::zero()));
        self.rows.apply(&v)
    }
}

/// Random stabilizations `M -> [[M, -η], [0, I]]` followed by unimodular row and column operations.
pub fn random_equivalent_presentation<R: Ring>(
    m: &Matrix<R>,
    seed: u64,
) -> EquivalentPresentation<R> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = rng.gen_range(0..=2usize);
    let (r, c) = (m.rows(), m.cols());
    let mut big = Matrix::<R>::zeros(r + s, c + s);
    for i in 0..r {
        for j in 0..c {
            big.set(i, j, m.get(i, j).clone());
        }
        for k in 0..s {
            big.set(i, c + k, -small::<R>(rng.gen_range(-2..=2)));
        }
    }
    for k in 0..s {
        big.set(r + k, c + k, R::one());
    }
    let mut p = Matrix::<R>::identity(r + s);
    let rows = r + s;
    let cols = c + s;
    for _ in 0..rng.gen_range(2..8) {
        if rows >= 2 {
            let a = rng.gen_range(0..rows);
            let b = (a + rng.gen_range(1..rows)) % rows;
            let k = small::<R>(rng.gen_range(-2..=2));
            for mat in [&mut big, &mut p] {
                for j in 0..mat.cols() {
                    let v = mat.get(b, j).clone() + k.clone() * mat.get(a, j).clone();
                    mat.set(b, j, v);
                }
            }
            if rng.gen_bool(0.3) {
                big.swap_rows(a, b);
                p.swap_rows(a, b);
            }
        }
        if cols >= 2 {
            let a = rng.gen_range(0..cols);
            let b = (a + rng.gen_range(1..cols)) % cols;
            let k = small::<R>(rng.gen_range(-2..=2));
            for i in 0..rows {
                let v = big.get(i, b).clone() + k.clone() * big.get(i, a).clone();
                big.set(i, b, v);
            }
        }
    }
    EquivalentPresentation {
        matrix: big,
        stabilized: s,
        rows: p,
    }
}
