//! Presentation matrices, torsion orders, the kernel of `i_*`, the element `|K|`,
//! the sutured Frohman–Nicas map and the generator-sum surrogate for `χ(SFH)`.

use num_traits::{One, Zero};

use crate::bsda::{enumerate_compiled, one_sided_composition};
use crate::diagram::{AlphaKind, DiagramError, HeegaardDiagram, Role};
use crate::exterior::{wedge, ExtElement, GradedMap, Subset};
use crate::rings::{sign, smith_normal_form, Matrix, Mono, Ring, Z, ZH};

/// Matrix of signed (weighted) intersection counts: rows β circles, columns α circles.
#[derive(Clone, Debug)]
pub struct Presentation<R> {
    pub matrix: Matrix<R>,
    pub roles: Vec<Option<Role>>,
}

impl<R: Ring> Presentation<R> {
    /// Deficiency `rows - cols`.
    pub fn deficiency(&self) -> i64 {
        self.matrix.rows() as i64 - self.matrix.cols() as i64
    }
}

fn presentation_with<R: Ring>(
    h: &HeegaardDiagram,
    value: impl Fn(i8, &Mono) -> R,
) -> Presentation<R> {
    let c = h.compile();
    let mut m = Matrix::<R>::zeros(c.b, c.a);
    for p in &c.points {
        if let AlphaKind::Circle(j) = c.kind(p.alpha) {
            let v = m.get(p.beta, j).clone() + value(p.sign, &p.weight);
            m.set(p.beta, j, v);
        }
    }
    m.row_labels = c.beta_ids.clone();
    m.col_labels = h.alpha_circles.clone();
    Presentation {
        matrix: m,
        roles: h.beta.iter().map(|b| b.role).collect(),
    }
}

/// Integer presentation matrix.
pub fn presentation_z(h: &HeegaardDiagram) -> Presentation<Z> {
    presentation_with(h, |s, _| Z::from(s))
}

/// Presentation matrix over `Z[H]` with point weights.
pub fn presentation_zh(h: &HeegaardDiagram) -> Presentation<ZH> {
    let m = h.group.torsion_order;
    presentation_with(h, |s, w| ZH::term(Z::from(s), w.clone(), m))
}

/// Order of the cokernel when finite, else 0.
pub fn torsion_order(m: &Matrix<Z>) -> Z {
    let s = smith_normal_form(m);
    if s.rank() < m.rows() {
        return Z::zero();
    }
    s.diagonal().into_iter().fold(Z::one(), |a, d| a * d)
}

/// Rank of the cokernel's free part.
pub fn coker_rank(m: &Matrix<Z>) -> usize {
    m.rows() - smith_normal_form(m).rank()
}

/// Kernel of `i_*` read from a normalized diagram.
#[derive(Clone, Debug)]
pub struct Kernel {
    /// Vectors over incoming then outgoing arc coordinates.
    pub vectors: Vec<Vec<Z>>,
    pub k: i64,
    pub rank_ker: usize,
    /// The core block has full row rank.
    pub core_nonsingular: bool,
    /// The presentation matrix has zero kernel.
    pub injective: bool,
    /// Torsion order of the core block.
    pub prefactor: Z,
}

struct Blocks {
    m: Matrix<Z>,
    core: Vec<usize>,
    outs: Vec<usize>,
    ins: Vec<usize>,
}

fn blocks(h: &HeegaardDiagram) -> Result<Blocks, DiagramError> {
    if !h.has_roles() {
        return Err(DiagramError::MissingRoles);
    }
    let m = presentation_z(h).matrix;
    let core = (0..h.b())
        .filter(|&i| h.beta[i].role == Some(Role::Core))
        .collect();
    let outs = (0..h.n1())
        .map(|j| {
            h.beta_index(Role::NewOut(j))
                .ok_or(DiagramError::MissingRoles)
        })
        .collect::<Result<_, _>>()?;
    let ins = (0..h.n0())
        .map(|i| {
            h.beta_index(Role::NewIn(i))
                .ok_or(DiagramError::MissingRoles)
        })
        .collect::<Result<_, _>>()?;
    Ok(Blocks { m, core, outs, ins })
}

pub fn kernel_istar(h: &HeegaardDiagram) -> Result<Kernel, DiagramError> {
    let Blocks { m, core, outs, ins } = blocks(h)?;
    let n = m.cols();
    let all: Vec<usize> = (0..n).collect();
    let cb = m.select(&core, &all);
    let k = n as i64 - core.len() as i64;
    let rank_m = m.rank();
    let rank_core = cb.rank();
    let injective = rank_m == n;
    let core_nonsingular = rank_core == core.len();
    let prefactor = torsion_order(&cb);
    let mut vectors = vec![];
    if k >= 0 {
        let s = smith_normal_form(&cb);
        let mv = m.mul(&s.v);
        // Columns past the core rank span the kernel of the core block.
        for col in core.len()..n {
            let mut v: Vec<Z> = ins.iter().map(|&r| -mv.get(r, col).clone()).collect();
            v.extend(outs.iter().map(|&r| -mv.get(r, col).clone()));
            vectors.push(v);
        }
    }
    Ok(Kernel {
        vectors,
        k,
        rank_ker: rank_m - rank_core,
        core_nonsingular,
        injective,
        prefactor,
    })
}

/// `|K| = prefactor · (wedge of a basis of ker i_*)`, with one fixed sign.
#[derive(Clone, Debug, PartialEq)]
pub struct KElement {
    pub prefactor: Z,
    pub wedge: ExtElement<Z>,
    pub k: i64,
}

pub fn k_element(h: &HeegaardDiagram) -> Result<KElement, DiagramError> {
    let ker = kernel_istar(h)?;
    let rank = h.n0() + h.n1();
    let zero = KElement {
        prefactor: ker.prefactor.clone(),
        wedge: ExtElement::zero(rank),
        k: ker.k,
    };
    if ker.k < 0 || ker.prefactor.is_zero() || !ker.injective {
        return Ok(zero);
    }
    let mut w = ExtElement::basis(rank, Subset::empty());
    for v in &ker.vectors {
        w = wedge(&w, &ExtElement::vector(v)).expect("same rank");
    }
    Ok(KElement {
        prefactor: ker.prefactor.clone(),
        wedge: w.scale(&ker.prefactor),
        k: ker.k,
    })
}

/// The sutured Frohman–Nicas map `(ε ⊗ id) ∘ (id ⊗ |K|)`.
pub fn vfn_sut(h: &HeegaardDiagram) -> Result<GradedMap<Z>, DiagramError> {
    let ke = k_element(h)?;
    Ok(one_sided_composition(&ke.wedge, h.n0(), h.n1(), ke.k))
}

fn ordinary_sum<R: Ring>(
    h: &HeegaardDiagram,
    value: impl Fn(&[Mono]) -> R,
) -> Result<R, DiagramError> {
    if !h.is_ordinary() {
        return Err(DiagramError::BoundaryMismatch(
            "diagram has boundary arcs".into(),
        ));
    }
    let c = h.compile();
    let mut total = R::zero();
    for x in enumerate_compiled(&c) {
        let mut e = 0i64;
        for (i, &p) in x.iter().enumerate() {
            if c.points[p].sign < 0 {
                e += 1;
            }
            for &q in &x[i + 1..] {
                if c.points[p].alpha > c.points[q].alpha {
                    e += 1;
                }
            }
        }
        let ws: Vec<Mono> = x.iter().map(|&p| c.points[p].weight.clone()).collect();
        total = total + value(&ws) * sign::<R>(e);
    }
    Ok(total)
}

/// `Σ_x (-1)^{Σ i(x) + inv σ_x}` on an ordinary diagram.
pub fn generator_sum(h: &HeegaardDiagram) -> Result<Z, DiagramError> {
    ordinary_sum(h, |_| Z::one())
}

/// Weighted generator sum over `Z[H]`.
pub fn generator_sum_zh(h: &HeegaardDiagram) -> Result<ZH, DiagramError> {
    let m = h.group.torsion_order;
    ordinary_sum(h, |ws| {
        let g = ws.iter().fold(Mono::identity(), |a, w| a.mul(w, m));
        ZH::term(Z::one(), g, m)
    })
}

fn b1_sign(h: &HeegaardDiagram) -> i64 {
    coker_rank(&presentation_z(h).matrix) as i64
}

/// `(-1)^{b1} Σ_x (-1)^{Σ i(x) + inv σ_x}` with `b1` the free rank of the cokernel.
pub fn chi_sfh_surrogate(h: &HeegaardDiagram) -> Result<Z, DiagramError> {
    Ok(generator_sum(h)? * sign::<Z>(b1_sign(h)))
}

/// Weighted variant of [`chi_sfh_surrogate`].
pub fn chi_sfh_surrogate_zh(h: &HeegaardDiagram) -> Result<ZH, DiagramError> {
    Ok(generator_sum_zh(h)? * sign::<ZH>(b1_sign(h)))
}

/// `|J| = |I| + c`.
pub fn weakly_balanced(h: &HeegaardDiagram, i: Subset, j: Subset) -> bool {
    j.len() as i64 == i.len() as i64 + h.degree()
}
