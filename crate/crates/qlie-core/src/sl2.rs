//! Irreducible modules of the split and compact rank-one simple algebras,
//! Casimir operators, and isotypic decomposition of algebras carrying a
//! designated generator triple.

use crate::lie::{sl2_split, su2_compact, LieAlgebra};
use crate::matrix::{Matrix, RowReducer, Subspace};
use crate::scalar::{format_scalar, s_int, s_ratio, Scalar};
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Which rank-one simple algebra a generator triple spans: split with
/// relations [h,e] = 2e, [h,f] = -2f, [e,f] = h, or compact with cyclic
/// relations [x,y] = 2z, [y,z] = 2x, [z,x] = 2y.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TripleKind {
    Split,
    Compact,
}

/// A designated generator triple inside an ambient algebra, given by
/// coordinate vectors in the ambient basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeviTriple {
    pub kind: TripleKind,
    pub vectors: [Vec<Scalar>; 3],
}

/// Action of a generator triple on a module: three matrices in the order
/// (e, h, f) for split kind, (x, y, z) for compact kind.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleAction {
    pub kind: TripleKind,
    pub dim: usize,
    pub generators: [Matrix; 3],
}

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum Sl2Error {
    #[error("triple relation {relation} fails: residual [{residual}]")]
    TripleRelation { relation: String, residual: String },
    #[error("Casimir operator is not diagonalizable over the rationals: {found} of {ambient} dimensions in rational eigenspaces")]
    CasimirNotDiagonalizable { found: usize, ambient: usize },
    #[error("Casimir eigenvalue {value} does not match any irreducible module")]
    UnknownEigenvalue { value: String },
    #[error("eigenspace for {label} has dimension {eigendim}, not a multiple of the module dimension {module_dim}")]
    BadMultiplicity {
        label: String,
        eigendim: usize,
        module_dim: usize,
    },
    #[error("subspace is not invariant under generator {index}")]
    NotInvariant { index: usize },
}

/// Dimension of the irreducible module with highest weight n.
pub fn module_dim(kind: TripleKind, n: usize) -> usize {
    match kind {
        TripleKind::Split => n + 1,
        TripleKind::Compact => {
            if n % 2 == 0 {
                n + 1
            } else {
                2 * (n + 1)
            }
        }
    }
}

/// Display label: V(n) for split modules and odd compact modules, W(n) for
/// even compact modules.
pub fn module_label(kind: TripleKind, n: usize) -> String {
    match kind {
        TripleKind::Split => format!("V({n})"),
        TripleKind::Compact => {
            if n % 2 == 0 {
                format!("W({n})")
            } else {
                format!("V({n})")
            }
        }
    }
}

/// Casimir eigenvalue n(n+2)/8 on the module with highest weight n, for
/// the normalization used by `casimir_from_generators`. The value is the
/// same for both kinds; tests regenerate this table from the module
/// matrices themselves.
pub fn casimir_eigenvalue(n: usize) -> Scalar {
    s_ratio((n * (n + 2)) as i64, 8)
}

/// Weight-basis matrices of the split module V(n): h v_k = (n-2k) v_k,
/// f v_k = v_{k+1}, e v_k = k(n-k+1) v_{k-1}.
fn split_module(n: usize) -> ModuleAction {
    let d = n + 1;
    let mut e = Matrix::zeros(d, d);
    let mut h = Matrix::zeros(d, d);
    let mut f = Matrix::zeros(d, d);
    for k in 0..d {
        *h.at_mut(k, k) = s_int(n as i64 - 2 * k as i64);
        if k + 1 < d {
            *f.at_mut(k + 1, k) = Scalar::one();
        }
        if k > 0 {
            *e.at_mut(k - 1, k) = s_int((k * (n - k + 1)) as i64);
        }
    }
    ModuleAction {
        kind: TripleKind::Split,
        dim: d,
        generators: [e, h, f],
    }
}

/// Realification of a complex matrix A + iB as [[A, -B], [B, A]].
pub fn realify(re: &Matrix, im: &Matrix) -> Matrix {
    let n = re.rows();
    assert_eq!(re.cols(), n);
    assert_eq!(im.rows(), n);
    assert_eq!(im.cols(), n);
    Matrix::from_fn(2 * n, 2 * n, |i, j| {
        let (bi, ii) = (i / n, i % n);
        let (bj, ij) = (j / n, j % n);
        match (bi, bj) {
            (0, 0) | (1, 1) => re.at(ii, ij).clone(),
            (0, 1) => -im.at(ii, ij).clone(),
            (1, 0) => im.at(ii, ij).clone(),
            _ => unreachable!(),
        }
    })
}

/// Compact module with odd highest weight: the realification of the
/// complex module, acted on through x = ih, y = e - f, z = i(e + f).
fn compact_odd_module(n: usize) -> ModuleAction {
    let split = split_module(n);
    let [e, h, f] = &split.generators;
    let zero = Matrix::zeros(n + 1, n + 1);
    let x = realify(&zero, h);
    let y = realify(&e.sub(f), &zero);
    let z = realify(&zero, &e.add(f));
    ModuleAction {
        kind: TripleKind::Compact,
        dim: 2 * (n + 1),
        generators: [x, y, z],
    }
}

/// Matrices of the generators restricted to an invariant subspace, in the
/// subspace's canonical basis.
pub fn restrict_generators(
    generators: &[Matrix; 3],
    sub: &Subspace,
) -> Result<[Matrix; 3], Sl2Error> {
    let d = sub.dim();
    let mut out = Vec::with_capacity(3);
    for (index, g) in generators.iter().enumerate() {
        let mut m = Matrix::zeros(d, d);
        for (col, v) in sub.basis().iter().enumerate() {
            let image = g.mul_vec(v);
            let coords = sub
                .coordinates(&image)
                .ok_or(Sl2Error::NotInvariant { index })?;
            for (row, c) in coords.into_iter().enumerate() {
                *m.at_mut(row, col) = c;
            }
        }
        out.push(m);
    }
    Ok([out[0].clone(), out[1].clone(), out[2].clone()])
}

fn compact_even_module(n: usize) -> ModuleAction {
    if n == 0 {
        return ModuleAction {
            kind: TripleKind::Compact,
            dim: 1,
            generators: [
                Matrix::zeros(1, 1),
                Matrix::zeros(1, 1),
                Matrix::zeros(1, 1),
            ],
        };
    }
    if n == 2 {
        let g = su2_compact();
        return ModuleAction {
            kind: TripleKind::Compact,
            dim: 3,
            generators: [g.ad_basis(0), g.ad_basis(1), g.ad_basis(2)],
        };
    }
    // Highest component of W(2) (x) W(n-2), cut out by its Casimir
    // eigenvalue and restricted to the eigenspace basis.
    let a = compact_even_module(2);
    let b = compact_even_module(n - 2);
    let tensor = tensor_action(&a, &b);
    let omega = casimir_from_generators(TripleKind::Compact, &tensor.generators);
    let target = casimir_eigenvalue(n);
    let eig = omega
        .rational_eigenspaces()
        .into_iter()
        .find(|(v, _)| *v == target)
        .expect("top Casimir eigenvalue present in tensor product");
    let sub = Subspace::from_spanning(tensor.dim, eig.1);
    assert_eq!(sub.dim(), n + 1, "top isotypic component has dimension n+1");
    let generators =
        restrict_generators(&tensor.generators, &sub).expect("eigenspace is invariant");
    ModuleAction {
        kind: TripleKind::Compact,
        dim: n + 1,
        generators,
    }
}

/// The irreducible module with highest weight n for the given kind.
/// Split: any n >= 0. Compact: even n give modules of dimension n+1,
/// odd n give realified modules of dimension 2(n+1).
pub fn irreducible_action(kind: TripleKind, n: usize) -> ModuleAction {
    match kind {
        TripleKind::Split => split_module(n),
        TripleKind::Compact => {
            if n % 2 == 0 {
                compact_even_module(n)
            } else {
                compact_odd_module(n)
            }
        }
    }
}

/// Killing Gram matrix of the 3-dimensional base algebra of the kind, in
/// the generator basis. Used to form the Casimir operator.
pub fn base_killing(kind: TripleKind) -> Matrix {
    match kind {
        TripleKind::Split => sl2_split().killing_form(),
        TripleKind::Compact => su2_compact().killing_form(),
    }
}

/// Casimir operator of an action: sum over i,j of Kinv[i][j] g_i g_j with
/// K the base algebra's own Killing form.
pub fn casimir_from_generators(kind: TripleKind, generators: &[Matrix; 3]) -> Matrix {
    let kinv = base_killing(kind)
        .inverse()
        .expect("base Killing form is nondegenerate");
    let d = generators[0].rows();
    let mut omega = Matrix::zeros(d, d);
    for i in 0..3 {
        for j in 0..3 {
            if kinv.at(i, j).is_zero() {
                continue;
            }
            let prod = generators[i].mul(&generators[j]).scale(kinv.at(i, j));
            omega = omega.add(&prod);
        }
    }
    omega
}

/// Verifies the defining relations of a triple inside an ambient algebra
/// and returns the three adjoint matrices.
pub fn triple_adjoints(g: &LieAlgebra, triple: &LeviTriple) -> Result<[Matrix; 3], Sl2Error> {
    let [a, b, c] = &triple.vectors;
    let checks: Vec<(&str, Vec<Scalar>, Vec<Scalar>, i64)> = match triple.kind {
        TripleKind::Split => vec![
            // [h,e] = 2e, [h,f] = -2f, [e,f] = h
            ("[h,e]=2e", g.bracket(b, a), a.clone(), 2),
            ("[h,f]=-2f", g.bracket(b, c), c.clone(), -2),
            ("[e,f]=h", g.bracket(a, c), b.clone(), 1),
        ],
        TripleKind::Compact => vec![
            ("[x,y]=2z", g.bracket(a, b), c.clone(), 2),
            ("[y,z]=2x", g.bracket(b, c), a.clone(), 2),
            ("[z,x]=2y", g.bracket(c, a), b.clone(), 2),
        ],
    };
    for (relation, actual, target, factor) in checks {
        let residual: Vec<Scalar> = actual
            .iter()
            .zip(&target)
            .map(|(got, want)| got - &(want * &s_int(factor)))
            .collect();
        if residual.iter().any(|v| !v.is_zero()) {
            return Err(Sl2Error::TripleRelation {
                relation: relation.to_string(),
                residual: residual
                    .iter()
                    .map(format_scalar)
                    .collect::<Vec<_>>()
                    .join(", "),
            });
        }
    }
    Ok([g.ad(a), g.ad(b), g.ad(c)])
}

/// One isotypic component of a decomposition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Summand {
    pub n: usize,
    pub label: String,
    pub multiplicity: usize,
    pub isotypic: Subspace,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub kind: TripleKind,
    pub summands: Vec<Summand>,
}

impl Decomposition {
    /// Sorted (label, multiplicity) pairs, the shape used in fingerprints.
    pub fn multiset(&self) -> Vec<(String, usize)> {
        let mut out: Vec<(String, usize)> = self
            .summands
            .iter()
            .map(|s| (s.label.clone(), s.multiplicity))
            .collect();
        out.sort();
        out
    }

    /// Total number of irreducible summands, counted with multiplicity.
    pub fn summand_count(&self) -> usize {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }
}

fn decompose_matrices(
    kind: TripleKind,
    generators: &[Matrix; 3],
    ambient: usize,
    embed: impl Fn(Vec<Vec<Scalar>>) -> Subspace,
) -> Result<Decomposition, Sl2Error> {
    let dim = generators[0].rows();
    let omega = casimir_from_generators(kind, generators);
    let eigenspaces = omega.rational_eigenspaces();
    let found: usize = eigenspaces.iter().map(|(_, b)| b.len()).sum();
    if found != dim {
        return Err(Sl2Error::CasimirNotDiagonalizable {
            found,
            ambient: dim,
        });
    }
    let _ = ambient;
    let mut summands = Vec::new();
    for (value, basis) in eigenspaces {
        let n = (0..=2 * dim)
            .find(|&n| casimir_eigenvalue(n) == value)
            .ok_or_else(|| Sl2Error::UnknownEigenvalue {
                value: format_scalar(&value),
            })?;
        let label = module_label(kind, n);
        let md = module_dim(kind, n);
        let eigendim = basis.len();
        if eigendim % md != 0 {
            return Err(Sl2Error::BadMultiplicity {
                label,
                eigendim,
                module_dim: md,
            });
        }
        summands.push(Summand {
            n,
            label,
            multiplicity: eigendim / md,
            isotypic: embed(basis),
        });
    }
    summands.sort_by_key(|s| s.n);
    Ok(Decomposition { kind, summands })
}

/// Isotypic decomposition of the whole algebra under the triple's adjoint
/// action. Eigenspaces of the Casimir operator are the isotypic
/// components because the eigenvalue determines the highest weight.
pub fn decompose(g: &LieAlgebra, triple: &LeviTriple) -> Result<Decomposition, Sl2Error> {
    let ads = triple_adjoints(g, triple)?;
    let dim = g.dim();
    decompose_matrices(triple.kind, &ads, dim, |basis| {
        Subspace::from_spanning(dim, basis)
    })
}

/// Isotypic decomposition of an invariant subspace, with the components
/// reported in ambient coordinates.
pub fn decompose_subspace(
    g: &LieAlgebra,
    triple: &LeviTriple,
    sub: &Subspace,
) -> Result<Decomposition, Sl2Error> {
    let ads = triple_adjoints(g, triple)?;
    let restricted = restrict_generators(&ads, sub)?;
    let basis = sub.basis().to_vec();
    let ambient = sub.ambient_dim();
    decompose_matrices(triple.kind, &restricted, ambient, move |coord_vecs| {
        let vectors: Vec<Vec<Scalar>> = coord_vecs
            .into_iter()
            .map(|coords| {
                let mut v = vec![Scalar::zero(); ambient];
                for (c, bvec) in coords.iter().zip(&basis) {
                    if c.is_zero() {
                        continue;
                    }
                    for (k, b) in bvec.iter().enumerate() {
                        v[k] = &v[k] + &(c * b);
                    }
                }
                v
            })
            .collect();
        Subspace::from_spanning(ambient, vectors)
    })
}

/// Basis of the space of invariant bilinear forms on a module:
/// all B with B(gv, w) + B(v, gw) = 0 for the three generators.
pub fn invariant_bilinear_on_module(action: &ModuleAction) -> Vec<Matrix> {
    let n = action.dim;
    let mut red = RowReducer::new(n * n);
    for g in &action.generators {
        // Condition g^T B + B g = 0, component (i, j).
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![Scalar::zero(); n * n];
                for s in 0..n {
                    // (g^T B)[i][j] = sum_s g[s][i] B[s][j]
                    if !g.at(s, i).is_zero() {
                        row[s * n + j] = &row[s * n + j] + g.at(s, i);
                    }
                    // (B g)[i][j] = sum_s B[i][s] g[s][j]
                    if !g.at(s, j).is_zero() {
                        row[i * n + s] = &row[i * n + s] + g.at(s, j);
                    }
                }
                red.add_rational_row(&row);
            }
        }
    }
    red.kernel_basis()
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
        .collect()
}

/// Tensor product action: g acting as g (x) 1 + 1 (x) g.
pub fn tensor_action(a: &ModuleAction, b: &ModuleAction) -> ModuleAction {
    assert_eq!(a.kind, b.kind);
    let ia = Matrix::identity(a.dim);
    let ib = Matrix::identity(b.dim);
    let generators = [0, 1, 2].map(|i| {
        a.generators[i]
            .kronecker(&ib)
            .add(&ia.kronecker(&b.generators[i]))
    });
    ModuleAction {
        kind: a.kind,
        dim: a.dim * b.dim,
        generators,
    }
}

/// Exterior square action on the basis e_i ^ e_j, i < j.
pub fn wedge_action(a: &ModuleAction) -> ModuleAction {
    let n = a.dim;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).unwrap();
    let d = pairs.len();
    let generators = [0, 1, 2].map(|gi| {
        let g = &a.generators[gi];
        let mut m = Matrix::zeros(d, d);
        for (col, &(i, j)) in pairs.iter().enumerate() {
            // g(e_i ^ e_j) = (g e_i) ^ e_j + e_i ^ (g e_j)
            for k in 0..n {
                let c1 = g.at(k, i);
                if !c1.is_zero() && k != j {
                    let (r, sign) = if k < j { (index(k, j), 1) } else { (index(j, k), -1) };
                    *m.at_mut(r, col) = m.at(r, col) + &(c1 * &s_int(sign));
                }
                let c2 = g.at(k, j);
                if !c2.is_zero() && k != i {
                    let (r, sign) = if i < k { (index(i, k), 1) } else { (index(k, i), -1) };
                    *m.at_mut(r, col) = m.at(r, col) + &(c2 * &s_int(sign));
                }
            }
        }
        m
    });
    ModuleAction {
        kind: a.kind,
        dim: d,
        generators,
    }
}

/// Dimension of the space of intertwiners from `src` to `tgt`, by
/// brute-force solution of the commutation equations. The diagonal
/// generator is eliminated first, which keeps the system sparse.
pub fn hom_dimension(src: &ModuleAction, tgt: &ModuleAction) -> usize {
    assert_eq!(src.kind, tgt.kind);
    let (ns, nt) = (src.dim, tgt.dim);
    let unknowns = ns * nt;
    let mut red = RowReducer::new(unknowns);
    // Generator order: for the split kind h (index 1) is diagonal in the
    // weight basis, so its equations pin most unknowns immediately.
    let order: [usize; 3] = match src.kind {
        TripleKind::Split => [1, 0, 2],
        TripleKind::Compact => [0, 1, 2],
    };
    for gi in order {
        let gs = &src.generators[gi];
        let gt = &tgt.generators[gi];
        for r in 0..nt {
            for c in 0..ns {
                // (L gs - gt L)[r][c] = 0
                let mut row = vec![Scalar::zero(); unknowns];
                let mut nonzero = false;
                for s in 0..ns {
                    let v = gs.at(s, c);
                    if !v.is_zero() {
                        row[r * ns + s] = &row[r * ns + s] + v;
                        nonzero = true;
                    }
                }
                for s in 0..nt {
                    let v = gt.at(r, s);
                    if !v.is_zero() {
                        row[s * ns + c] = &row[s * ns + c] - v;
                        nonzero = true;
                    }
                }
                if nonzero {
                    red.add_rational_row(&row);
                }
            }
        }
    }
    unknowns - red.rank()
}

/// Expected dimension of Hom(V(n) (x) V(m), V(k)) over the split kind:
/// 1 when |n-m| <= k <= n+m with k = n+m mod 2, else 0. Frozen reference
/// for the brute-force computation.
pub fn clebsch_gordan_dim(n: usize, m: usize, k: usize) -> usize {
    let lo = n.abs_diff(m);
    let hi = n + m;
    if k >= lo && k <= hi && (hi - k) % 2 == 0 {
        1
    } else {
        0
    }
}
