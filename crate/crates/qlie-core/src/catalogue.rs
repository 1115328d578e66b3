//! The catalogue: every non-solvable quadratic Lie algebra of dimension
//! at most thirteen that has no proper nonzero nondegenerate ideal,
//! over a closed field (fourteen entries) and over the reals
//! (thirty-four entries). Each entry has a deterministic builder and a
//! table of expected invariants that `verify_entry` recomputes.

use crate::construct::matrices::{
    complex_sl2_as_real, complex_trace_gram, multiplication_by_i, orthogonal_algebra,
    plane_action, plane_form, special_linear_3, special_unitary_3, su2_matrices, symplectic_4,
    traceless_pairing_coords,
};
use crate::construct::{
    block_diag, double_extension, equal_squares_algebra, levi_for_scalar_extension,
    scalar_extension, trace_form_gram, trivial_t_star, truncated_polynomial_algebra,
    two_dual_generators_algebra, ConstructError, DoubleExtension, FrobeniusAlgebra,
};
use crate::lie::{basis_vector, sl2_split, su2_compact, LieAlgebra};
use crate::matrix::Matrix;
use crate::quad::{FieldMode, QuadraticLieAlgebra};
use crate::scalar::{s_int, s_ratio, Scalar};
use crate::sl2::{
    decompose, decompose_subspace, invariant_bilinear_on_module, irreducible_action, LeviTriple,
    TripleKind,
};
use num::Zero;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogueError {
    #[error("no entry named {id} in the {mode} catalogue")]
    UnknownId { id: String, mode: FieldMode },
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

/// One catalogue slot: identifier, field mode, and the invariants its
/// build is expected to have.
#[derive(Clone, Debug)]
pub struct CatalogueEntry {
    pub id: &'static str,
    pub mode: FieldMode,
    pub dim: usize,
    pub radical_dim: usize,
    pub killing_rank: usize,
    /// Signature of the Killing form; pinned for real entries only.
    pub killing_signature: Option<(usize, usize)>,
    /// Isotypic content of the whole algebra under the designated
    /// triple, when one is designated.
    pub modules: Option<&'static [(&'static str, usize)]>,
    /// Isotypic content of the orthogonal complement of the radical.
    pub rperp_modules: Option<&'static [(&'static str, usize)]>,
    /// Signatures attained by the nondegenerate invariant symmetric
    /// forms, when pinned.
    pub signatures: Option<&'static [(usize, usize)]>,
    pub notes: &'static str,
}

const V2: &[(&str, usize)] = &[("V(2)", 1)];
const W2: &[(&str, usize)] = &[("W(2)", 1)];
const V2X2: &[(&str, usize)] = &[("V(2)", 2)];
const W2X2: &[(&str, usize)] = &[("W(2)", 2)];
const V2X3: &[(&str, usize)] = &[("V(2)", 3)];
const W2X3: &[(&str, usize)] = &[("W(2)", 3)];
const V2X4: &[(&str, usize)] = &[("V(2)", 4)];
const W2X4: &[(&str, usize)] = &[("W(2)", 4)];
const VV_MODULES: &[(&str, usize)] = &[("V(1)", 2), ("V(2)", 2)];
const SU2W_MODULES: &[(&str, usize)] = &[("V(1)", 1), ("W(2)", 2)];
const D4_MODULES: &[(&str, usize)] = &[("V(2)", 2), ("V(4)", 1)];
const D4C_MODULES: &[(&str, usize)] = &[("W(2)", 2), ("W(4)", 1)];
const D6_MODULES: &[(&str, usize)] = &[("V(2)", 2), ("V(6)", 1)];
const D6C_MODULES: &[(&str, usize)] = &[("W(2)", 2), ("W(6)", 1)];
const NIL5_MODULES: &[(&str, usize)] = &[("V(0)", 1), ("V(1)", 2), ("V(2)", 2)];
const VVD_MODULES: &[(&str, usize)] = &[("V(0)", 2), ("V(1)", 2), ("V(2)", 2)];
const SU2WD_MODULES: &[(&str, usize)] = &[("V(1)", 1), ("W(0)", 2), ("W(2)", 2)];
const ADVV_MODULES: &[(&str, usize)] = &[("V(1)", 2), ("V(2)", 3)];
const GCHECK_MODULES: &[(&str, usize)] = &[("V(1)", 1), ("W(2)", 3)];

const CLOSED: &[CatalogueEntry] = &[
    CatalogueEntry {
        id: "sl2",
        mode: FieldMode::Closed,
        dim: 3,
        radical_dim: 0,
        killing_rank: 3,
        killing_signature: None,
        modules: Some(V2),
        rperp_modules: None,
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "tstar-sl2",
        mode: FieldMode::Closed,
        dim: 6,
        radical_dim: 3,
        killing_rank: 3,
        killing_signature: None,
        modules: Some(V2X2),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "coadjoint extension with totally isotropic radical",
    },
    CatalogueEntry {
        id: "sl3",
        mode: FieldMode::Closed,
        dim: 8,
        radical_dim: 0,
        killing_rank: 8,
        killing_signature: None,
        modules: None,
        rperp_modules: None,
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "sl2xX3",
        mode: FieldMode::Closed,
        dim: 9,
        radical_dim: 6,
        killing_rank: 3,
        killing_signature: None,
        modules: Some(V2X3),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "sp4",
        mode: FieldMode::Closed,
        dim: 10,
        radical_dim: 0,
        killing_rank: 10,
        killing_signature: None,
        modules: None,
        rperp_modules: None,
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "dx-vv",
        mode: FieldMode::Closed,
        dim: 10,
        radical_dim: 7,
        killing_rank: 3,
        killing_signature: None,
        modules: Some(VV_MODULES),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "d4",
        mode: FieldMode::Closed,
        dim: 11,
        radical_dim: 8,
        killing_rank: 3,
        killing_signature: None,
        modules: Some(D4_MODULES),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "dx-nil5",
        mode: FieldMode::Closed,
        dim: 11,
        radical_dim: 8,
        killing_rank: 3,
        killing_signature: None,
        modules: Some(NIL5_MODULES),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "base of the extension is nilpotent of class three",
    },
    CatalogueEntry {
        id: "sl2xX4",
        mode: FieldMode::Closed,
        dim: 12,
        radical_dim: 9,
        killing_rank: 3,
        killing_signature: None,
        modules: Some(V2X4),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "sl2xXY22",
        mode: FieldMode::Closed,
        dim: 12,
        radical_dim: 9,
        killing_rank: 3,
        killing_signature: None,
        modules: Some(V2X4),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "distinguished from the other tensor entry by the radical series",
    },
    CatalogueEntry {
        id: "dx-vvd-diag",
        mode: FieldMode::Closed,
        dim: 12,
        radical_dim: 9,
        killing_rank: 4,
        killing_signature: None,
        modules: Some(VVD_MODULES),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "dx-vvd-nilp",
        mode: FieldMode::Closed,
        dim: 12,
        radical_dim: 9,
        killing_rank: 3,
        killing_signature: None,
        modules: Some(VVD_MODULES),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "d6",
        mode: FieldMode::Closed,
        dim: 13,
        radical_dim: 10,
        killing_rank: 3,
        killing_signature: None,
        modules: Some(D6_MODULES),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "dx-advv",
        mode: FieldMode::Closed,
        dim: 13,
        radical_dim: 10,
        killing_rank: 3,
        killing_signature: None,
        modules: Some(ADVV_MODULES),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
];

const REAL: &[CatalogueEntry] = &[
    CatalogueEntry {
        id: "sl2r",
        mode: FieldMode::Real,
        dim: 3,
        radical_dim: 0,
        killing_rank: 3,
        killing_signature: Some((2, 1)),
        modules: Some(V2),
        rperp_modules: None,
        signatures: Some(&[(1, 2), (2, 1)]),
        notes: "",
    },
    CatalogueEntry {
        id: "su2",
        mode: FieldMode::Real,
        dim: 3,
        radical_dim: 0,
        killing_rank: 3,
        killing_signature: Some((0, 3)),
        modules: Some(W2),
        rperp_modules: None,
        signatures: Some(&[(0, 3), (3, 0)]),
        notes: "",
    },
    CatalogueEntry {
        id: "sl2c",
        mode: FieldMode::Real,
        dim: 6,
        radical_dim: 0,
        killing_rank: 6,
        killing_signature: Some((3, 3)),
        modules: None,
        rperp_modules: None,
        signatures: None,
        notes: "complex rank-one algebra viewed as a real algebra",
    },
    CatalogueEntry {
        id: "tstar-sl2r",
        mode: FieldMode::Real,
        dim: 6,
        radical_dim: 3,
        killing_rank: 3,
        killing_signature: Some((2, 1)),
        modules: Some(V2X2),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "tstar-su2",
        mode: FieldMode::Real,
        dim: 6,
        radical_dim: 3,
        killing_rank: 3,
        killing_signature: Some((0, 3)),
        modules: Some(W2X2),
        rperp_modules: Some(W2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "sl3r",
        mode: FieldMode::Real,
        dim: 8,
        radical_dim: 0,
        killing_rank: 8,
        killing_signature: Some((5, 3)),
        modules: None,
        rperp_modules: None,
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "su3",
        mode: FieldMode::Real,
        dim: 8,
        radical_dim: 0,
        killing_rank: 8,
        killing_signature: Some((0, 8)),
        modules: None,
        rperp_modules: None,
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "su21",
        mode: FieldMode::Real,
        dim: 8,
        radical_dim: 0,
        killing_rank: 8,
        killing_signature: Some((4, 4)),
        modules: None,
        rperp_modules: None,
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "sl2rxX3",
        mode: FieldMode::Real,
        dim: 9,
        radical_dim: 6,
        killing_rank: 3,
        killing_signature: Some((2, 1)),
        modules: Some(V2X3),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "su2xX3",
        mode: FieldMode::Real,
        dim: 9,
        radical_dim: 6,
        killing_rank: 3,
        killing_signature: Some((0, 3)),
        modules: Some(W2X3),
        rperp_modules: Some(W2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "so5",
        mode: FieldMode::Real,
        dim: 10,
        radical_dim: 0,
        killing_rank: 10,
        killing_signature: Some((0, 10)),
        modules: None,
        rperp_modules: None,
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "so41",
        mode: FieldMode::Real,
        dim: 10,
        radical_dim: 0,
        killing_rank: 10,
        killing_signature: Some((4, 6)),
        modules: None,
        rperp_modules: None,
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "so32",
        mode: FieldMode::Real,
        dim: 10,
        radical_dim: 0,
        killing_rank: 10,
        killing_signature: Some((6, 4)),
        modules: None,
        rperp_modules: None,
        signatures: None,
        notes: "isomorphic to the real symplectic rank-two algebra",
    },
    CatalogueEntry {
        id: "dx-vv",
        mode: FieldMode::Real,
        dim: 10,
        radical_dim: 7,
        killing_rank: 3,
        killing_signature: Some((2, 1)),
        modules: Some(VV_MODULES),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "dx-su2w",
        mode: FieldMode::Real,
        dim: 10,
        radical_dim: 7,
        killing_rank: 3,
        killing_signature: Some((0, 3)),
        modules: Some(SU2W_MODULES),
        rperp_modules: Some(W2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "d4",
        mode: FieldMode::Real,
        dim: 11,
        radical_dim: 8,
        killing_rank: 3,
        killing_signature: Some((2, 1)),
        modules: Some(D4_MODULES),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "d4c",
        mode: FieldMode::Real,
        dim: 11,
        radical_dim: 8,
        killing_rank: 3,
        killing_signature: Some((0, 3)),
        modules: Some(D4C_MODULES),
        rperp_modules: Some(W2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "dx-nil5",
        mode: FieldMode::Real,
        dim: 11,
        radical_dim: 8,
        killing_rank: 3,
        killing_signature: Some((2, 1)),
        modules: Some(NIL5_MODULES),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "sl2rxX4",
        mode: FieldMode::Real,
        dim: 12,
        radical_dim: 9,
        killing_rank: 3,
        killing_signature: Some((2, 1)),
        modules: Some(V2X4),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "su2xX4",
        mode: FieldMode::Real,
        dim: 12,
        radical_dim: 9,
        killing_rank: 3,
        killing_signature: Some((0, 3)),
        modules: Some(W2X4),
        rperp_modules: Some(W2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "sl2rxXY22",
        mode: FieldMode::Real,
        dim: 12,
        radical_dim: 9,
        killing_rank: 3,
        killing_signature: Some((2, 1)),
        modules: Some(V2X4),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "su2xXY22",
        mode: FieldMode::Real,
        dim: 12,
        radical_dim: 9,
        killing_rank: 3,
        killing_signature: Some((0, 3)),
        modules: Some(W2X4),
        rperp_modules: Some(W2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "sl2rxXY33",
        mode: FieldMode::Real,
        dim: 12,
        radical_dim: 9,
        killing_rank: 3,
        killing_signature: Some((2, 1)),
        modules: Some(V2X4),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "separated from the other split tensor entries only by the \
                invariant form signatures",
    },
    CatalogueEntry {
        id: "su2xXY33",
        mode: FieldMode::Real,
        dim: 12,
        radical_dim: 9,
        killing_rank: 3,
        killing_signature: Some((0, 3)),
        modules: Some(W2X4),
        rperp_modules: Some(W2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "dx-vvd-diag",
        mode: FieldMode::Real,
        dim: 12,
        radical_dim: 9,
        killing_rank: 4,
        killing_signature: Some((3, 1)),
        modules: Some(VVD_MODULES),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "dx-vvd-nilp",
        mode: FieldMode::Real,
        dim: 12,
        radical_dim: 9,
        killing_rank: 3,
        killing_signature: Some((2, 1)),
        modules: Some(VVD_MODULES),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "dx-vvd-rot",
        mode: FieldMode::Real,
        dim: 12,
        radical_dim: 9,
        killing_rank: 4,
        killing_signature: Some((2, 2)),
        modules: Some(VVD_MODULES),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "real form of the diagonal variant with a rotational outer action",
    },
    CatalogueEntry {
        id: "dx-su2wd",
        mode: FieldMode::Real,
        dim: 12,
        radical_dim: 9,
        killing_rank: 4,
        killing_signature: Some((0, 4)),
        modules: Some(SU2WD_MODULES),
        rperp_modules: Some(W2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "tstar-sl2c",
        mode: FieldMode::Real,
        dim: 12,
        radical_dim: 6,
        killing_rank: 6,
        killing_signature: Some((3, 3)),
        modules: Some(W2X4),
        rperp_modules: Some(W2X2),
        signatures: None,
        notes: "coadjoint extension of the six-dimensional simple real algebra; \
                irreducible over the reals although the complexification splits",
    },
    CatalogueEntry {
        id: "d6",
        mode: FieldMode::Real,
        dim: 13,
        radical_dim: 10,
        killing_rank: 3,
        killing_signature: Some((2, 1)),
        modules: Some(D6_MODULES),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "d6c",
        mode: FieldMode::Real,
        dim: 13,
        radical_dim: 10,
        killing_rank: 3,
        killing_signature: Some((0, 3)),
        modules: Some(D6C_MODULES),
        rperp_modules: Some(W2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "dx-advv",
        mode: FieldMode::Real,
        dim: 13,
        radical_dim: 10,
        killing_rank: 3,
        killing_signature: Some((2, 1)),
        modules: Some(ADVV_MODULES),
        rperp_modules: Some(V2),
        signatures: None,
        notes: "",
    },
    CatalogueEntry {
        id: "gcheck-plus",
        mode: FieldMode::Real,
        dim: 13,
        radical_dim: 10,
        killing_rank: 3,
        killing_signature: Some((0, 3)),
        modules: Some(GCHECK_MODULES),
        rperp_modules: Some(W2),
        signatures: Some(&[(6, 7), (7, 6)]),
        notes: "positive variant; the two variants share every invariant except \
                the signature sets, which are disjoint",
    },
    CatalogueEntry {
        id: "gcheck-minus",
        mode: FieldMode::Real,
        dim: 13,
        radical_dim: 10,
        killing_rank: 3,
        killing_signature: Some((0, 3)),
        modules: Some(GCHECK_MODULES),
        rperp_modules: Some(W2),
        signatures: Some(&[(3, 10), (10, 3)]),
        notes: "negative variant",
    },
];

/// All entries of the given mode, in roster order.
pub fn catalogue(mode: FieldMode) -> &'static [CatalogueEntry] {
    match mode {
        FieldMode::Closed => CLOSED,
        FieldMode::Real => REAL,
    }
}

/// Looks up one entry by identifier.
pub fn find(id: &str, mode: FieldMode) -> Option<&'static CatalogueEntry> {
    catalogue(mode).iter().find(|e| e.id == id)
}

fn natural_generators() -> [Matrix; 3] {
    irreducible_action(TripleKind::Split, 1).generators
}

fn split_trace_form() -> Matrix {
    trace_form_gram(&natural_generators())
}

fn compact_trace_form() -> Matrix {
    complex_trace_gram(&su2_matrices())
}

fn identity_levi(kind: TripleKind, dim: usize) -> LeviTriple {
    LeviTriple {
        kind,
        vectors: [
            basis_vector(dim, 0),
            basis_vector(dim, 1),
            basis_vector(dim, 2),
        ],
    }
}

fn rank_one(mode: FieldMode, kind: TripleKind) -> QuadraticLieAlgebra {
    let (lie, form) = match kind {
        TripleKind::Split => (sl2_split(), split_trace_form()),
        TripleKind::Compact => (su2_compact(), compact_trace_form()),
    };
    QuadraticLieAlgebra::new(lie, form, mode).with_levi(identity_levi(kind, 3))
}

fn simple_matrix_entry(
    built: (LieAlgebra, Matrix),
    mode: FieldMode,
) -> QuadraticLieAlgebra {
    QuadraticLieAlgebra::new(built.0, built.1, mode)
}

fn tensor_square_base() -> (LieAlgebra, Matrix) {
    let b = LieAlgebra::abelian(
        "vv",
        vec!["uu".into(), "uv".into(), "vu".into(), "vv".into()],
    );
    let omega = Matrix::from_int_rows(&[&[0, 1], &[-1, 0]]);
    (b, omega.kronecker(&omega))
}

fn first_factor_action() -> Vec<Matrix> {
    let id2 = Matrix::identity(2);
    natural_generators()
        .iter()
        .map(|m| m.kronecker(&id2))
        .collect()
}

fn zero_gamma() -> Matrix {
    Matrix::zeros(3, 3)
}

fn with_g2_levi(de: DoubleExtension, kind: TripleKind) -> QuadraticLieAlgebra {
    let levi = de.levi_from_g2(kind);
    de.algebra.with_levi(levi)
}

fn tensor_square_extension(mode: FieldMode) -> Result<QuadraticLieAlgebra, CatalogueError> {
    let (b, b1) = tensor_square_base();
    let de = double_extension(
        "dx-vv",
        &b,
        &b1,
        &sl2_split(),
        &first_factor_action(),
        &zero_gamma(),
        mode,
    )?;
    Ok(with_g2_levi(de, TripleKind::Split))
}

/// Double extension of a single irreducible module by the rank-one
/// algebra of the matching kind.
fn module_extension(
    id: &str,
    kind: TripleKind,
    n: usize,
    mode: FieldMode,
) -> Result<QuadraticLieAlgebra, CatalogueError> {
    let action = irreducible_action(kind, n);
    let forms = invariant_bilinear_on_module(&action);
    assert_eq!(forms.len(), 1, "irreducible module carries a unique form line");
    let t = forms[0].clone();
    assert!(t.is_symmetric(), "even modules carry symmetric forms");
    let labels = (0..action.dim).map(|i| format!("m{i}")).collect();
    let g1 = LieAlgebra::abelian("module", labels);
    let g2 = match kind {
        TripleKind::Split => sl2_split(),
        TripleKind::Compact => su2_compact(),
    };
    let de = double_extension(id, &g1, &t, &g2, &action.generators, &zero_gamma(), mode)?;
    Ok(with_g2_levi(de, kind))
}

/// Two-step extension: first the tensor square by a line acting on the
/// second factor, then by the split rank-one algebra on the first.
fn nested_vvd(
    id: &str,
    second_factor: Matrix,
    mode: FieldMode,
) -> Result<QuadraticLieAlgebra, CatalogueError> {
    let (b, b1) = tensor_square_base();
    let line = LieAlgebra::abelian("line", vec!["d".into()]);
    let inner_action = Matrix::identity(2).kronecker(&second_factor);
    let inner = double_extension(
        "inner",
        &b,
        &b1,
        &line,
        &[inner_action],
        &Matrix::zeros(1, 1),
        mode,
    )?;
    let zero1 = Matrix::zeros(1, 1);
    let phi: Vec<Matrix> = first_factor_action()
        .iter()
        .map(|m| block_diag(&[&zero1, m, &zero1]))
        .collect();
    let de = double_extension(
        id,
        &inner.algebra.lie,
        &inner.algebra.form,
        &sl2_split(),
        &phi,
        &zero_gamma(),
        mode,
    )?;
    Ok(with_g2_levi(de, TripleKind::Split))
}

/// The five-dimensional nilpotent base: the tensor square with one
/// extra direction pairing the first column into it and pushing it to
/// the second.
fn nilpotent_core() -> (LieAlgebra, Matrix) {
    let labels = vec![
        "uu".into(),
        "uv".into(),
        "vu".into(),
        "vv".into(),
        "d".into(),
    ];
    let entries = vec![
        (0, 2, vec![(4, s_int(1))]),
        (0, 4, vec![(1, s_int(-1))]),
        (2, 4, vec![(3, s_int(-1))]),
    ];
    let lie = LieAlgebra::from_brackets("nil5", labels, &entries);
    let omega = Matrix::from_int_rows(&[&[0, 1], &[-1, 0]]);
    let mut form = block_diag(&[&omega.kronecker(&omega), &Matrix::identity(1)]);
    *form.at_mut(4, 4) = s_int(-1);
    (lie, form)
}

fn nil5_extension(mode: FieldMode) -> Result<QuadraticLieAlgebra, CatalogueError> {
    let (core, form) = nilpotent_core();
    let zero1 = Matrix::zeros(1, 1);
    let phi: Vec<Matrix> = first_factor_action()
        .iter()
        .map(|m| block_diag(&[m, &zero1]))
        .collect();
    let de = double_extension("dx-nil5", &core, &form, &sl2_split(), &phi, &zero_gamma(), mode)?;
    Ok(with_g2_levi(de, TripleKind::Split))
}

/// Extension of the abelian sum of an adjoint copy and the tensor
/// square by the split rank-one algebra.
fn advv_extension(mode: FieldMode) -> Result<QuadraticLieAlgebra, CatalogueError> {
    let labels = vec![
        "ae".into(),
        "ah".into(),
        "af".into(),
        "uu".into(),
        "uv".into(),
        "vu".into(),
        "vv".into(),
    ];
    let g1 = LieAlgebra::abelian("advv", labels);
    let omega = Matrix::from_int_rows(&[&[0, 1], &[-1, 0]]);
    let b1 = block_diag(&[&split_trace_form(), &omega.kronecker(&omega)]);
    let sl2 = sl2_split();
    let id2 = Matrix::identity(2);
    let nat = natural_generators();
    let phi: Vec<Matrix> = (0..3)
        .map(|i| block_diag(&[&sl2.ad_basis(i), &nat[i].kronecker(&id2)]))
        .collect();
    let de = double_extension("dx-advv", &g1, &b1, &sl2, &phi, &zero_gamma(), mode)?;
    Ok(with_g2_levi(de, TripleKind::Split))
}

/// Extension of the realified plane by the compact rank-one algebra.
fn su2w_extension() -> Result<QuadraticLieAlgebra, CatalogueError> {
    let labels = (1..=4).map(|i| format!("w{i}")).collect();
    let g1 = LieAlgebra::abelian("plane", labels);
    let de = double_extension(
        "dx-su2w",
        &g1,
        &plane_form(),
        &su2_compact(),
        &plane_action(),
        &zero_gamma(),
        FieldMode::Real,
    )?;
    Ok(with_g2_levi(de, TripleKind::Compact))
}

/// Two-step extension: the realified plane by the line acting as the
/// imaginary unit, then by the compact rank-one algebra.
fn su2wd_extension() -> Result<QuadraticLieAlgebra, CatalogueError> {
    let labels = (1..=4).map(|i| format!("w{i}")).collect();
    let g1 = LieAlgebra::abelian("plane", labels);
    let line = LieAlgebra::abelian("line", vec!["d".into()]);
    let inner = double_extension(
        "inner",
        &g1,
        &plane_form(),
        &line,
        &[multiplication_by_i()],
        &Matrix::zeros(1, 1),
        FieldMode::Real,
    )?;
    let zero1 = Matrix::zeros(1, 1);
    let phi: Vec<Matrix> = plane_action()
        .iter()
        .map(|m| block_diag(&[&zero1, m, &zero1]))
        .collect();
    let de = double_extension(
        "dx-su2wd",
        &inner.algebra.lie,
        &inner.algebra.form,
        &su2_compact(),
        &phi,
        &zero_gamma(),
        FieldMode::Real,
    )?;
    Ok(with_g2_levi(de, TripleKind::Compact))
}

/// Extension of the abelian sum of a compact adjoint copy and the
/// realified plane, with the plane form weighted by the sign.
fn gcheck_extension(epsilon: i64) -> Result<QuadraticLieAlgebra, CatalogueError> {
    let mut labels = vec!["sx".to_string(), "sy".into(), "sz".into()];
    labels.extend((1..=4).map(|i| format!("w{i}")));
    let g1 = LieAlgebra::abelian("check", labels);
    let b1 = block_diag(&[
        &compact_trace_form(),
        &plane_form().scale(&s_int(epsilon)),
    ]);
    let su2 = su2_compact();
    let rho = plane_action();
    let phi: Vec<Matrix> = (0..3)
        .map(|i| block_diag(&[&su2.ad_basis(i), &rho[i]]))
        .collect();
    let id = if epsilon > 0 { "gcheck-plus" } else { "gcheck-minus" };
    let de = double_extension(id, &g1, &b1, &su2, &phi, &zero_gamma(), FieldMode::Real)?;
    Ok(with_g2_levi(de, TripleKind::Compact))
}

/// Current-algebra model of the same structure: the compact rank-one
/// algebra tensored with the truncated polynomials in one variable of
/// degree three, extended by the plane with a bracket pairing the plane
/// into the top graded piece.
pub fn gcheck_alternative(epsilon: i64) -> Result<QuadraticLieAlgebra, CatalogueError> {
    let su2 = su2_compact();
    let a = truncated_polynomial_algebra(3);
    let base = scalar_extension("current", &su2, &compact_trace_form(), &a, FieldMode::Real)?;
    let mut entries: Vec<(usize, usize, Vec<(usize, Scalar)>)> = Vec::new();
    for i in 0..9 {
        for j in i + 1..9 {
            let br = base.lie.bracket_basis(i, j);
            let coeffs: Vec<(usize, Scalar)> = br
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !coeffs.is_empty() {
                entries.push((i, j, coeffs));
            }
        }
    }
    let rho = plane_action();
    for i in 0..3 {
        // Only the degree-zero copy acts on the plane.
        for w in 0..4 {
            let coeffs: Vec<(usize, Scalar)> = (0..4)
                .filter(|wp| !rho[i].at(*wp, w).is_zero())
                .map(|wp| (9 + wp, rho[i].at(wp, w).clone()))
                .collect();
            if !coeffs.is_empty() {
                entries.push((3 * i, 9 + w, coeffs));
            }
        }
    }
    let eps = s_int(epsilon);
    for w in 0..4 {
        for wp in w + 1..4 {
            let coords = traceless_pairing_coords(&basis_vector(4, w), &basis_vector(4, wp));
            let coeffs: Vec<(usize, Scalar)> = coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(s, c)| (3 * s + 2, &eps * c))
                .collect();
            if !coeffs.is_empty() {
                entries.push((9 + w, 9 + wp, coeffs));
            }
        }
    }
    let mut labels: Vec<String> = base.lie.labels().to_vec();
    labels.extend((1..=4).map(|i| format!("w{i}")));
    let lie = LieAlgebra::from_brackets("gcheck-current", labels, &entries);
    let form = block_diag(&[&base.form, &plane_form().scale(&eps)]);
    Ok(QuadraticLieAlgebra::new(lie, form, FieldMode::Real))
}

/// The isometric isomorphism from the double-extension model onto the
/// current-algebra model: the outer copy lands in degree zero, the
/// abelian copy in degree one, and the dual copy in degree two scaled
/// by negative one half.
pub fn gcheck_matching_map() -> Matrix {
    let mut map = Matrix::zeros(13, 13);
    for i in 0..3 {
        *map.at_mut(3 * i, i) = s_int(1);
        *map.at_mut(3 * i + 1, 3 + i) = s_int(1);
        *map.at_mut(3 * i + 2, 10 + i) = s_ratio(-1, 2);
    }
    for w in 0..4 {
        *map.at_mut(9 + w, 6 + w) = s_int(1);
    }
    map
}

fn frobenius_tensor(
    id: &str,
    kind: TripleKind,
    a: FrobeniusAlgebra,
    mode: FieldMode,
) -> Result<QuadraticLieAlgebra, CatalogueError> {
    let (base, t) = match kind {
        TripleKind::Split => (sl2_split(), split_trace_form()),
        TripleKind::Compact => (su2_compact(), compact_trace_form()),
    };
    let na = a.dim();
    let q = scalar_extension(id, &base, &t, &a, mode)?;
    let dim = q.dim();
    Ok(q.with_levi(levi_for_scalar_extension(kind, na, dim)))
}

fn tstar(
    id: &str,
    s: &LieAlgebra,
    kind: TripleKind,
    mode: FieldMode,
) -> Result<QuadraticLieAlgebra, CatalogueError> {
    let de = trivial_t_star(id, s, mode)?;
    Ok(with_g2_levi(de, kind))
}

fn tstar_complex_rank_one() -> Result<QuadraticLieAlgebra, CatalogueError> {
    let (s, _) = complex_sl2_as_real()?;
    let de = trivial_t_star("tstar-sl2c", &s, FieldMode::Real)?;
    // Compact triple inside the realified complex algebra on the basis
    // (e, h, f, ie, ih, if): x = ih, y = e - f, z = ie + if.
    let n = de.algebra.dim();
    let mut x = vec![Scalar::zero(); n];
    x[4] = s_int(1);
    let mut y = vec![Scalar::zero(); n];
    y[0] = s_int(1);
    y[2] = s_int(-1);
    let mut z = vec![Scalar::zero(); n];
    z[3] = s_int(1);
    z[5] = s_int(1);
    Ok(de.algebra.with_levi(LeviTriple {
        kind: TripleKind::Compact,
        vectors: [x, y, z],
    }))
}

/// Builds the catalogue entry with the given identifier and mode.
pub fn build(id: &str, mode: FieldMode) -> Result<QuadraticLieAlgebra, CatalogueError> {
    if find(id, mode).is_none() {
        return Err(CatalogueError::UnknownId {
            id: id.to_string(),
            mode,
        });
    }
    let diag = Matrix::from_int_rows(&[&[1, 0], &[0, -1]]);
    let nilp = Matrix::from_int_rows(&[&[0, 0], &[1, 0]]);
    let rot = Matrix::from_int_rows(&[&[0, -1], &[1, 0]]);
    let q = match id {
        "sl2" | "sl2r" => rank_one(mode, TripleKind::Split),
        "su2" => rank_one(mode, TripleKind::Compact),
        "sl2c" => simple_matrix_entry(complex_sl2_as_real()?, mode),
        "tstar-sl2" | "tstar-sl2r" => tstar(id, &sl2_split(), TripleKind::Split, mode)?,
        "tstar-su2" => tstar(id, &su2_compact(), TripleKind::Compact, mode)?,
        "tstar-sl2c" => tstar_complex_rank_one()?,
        "sl3" | "sl3r" => simple_matrix_entry(special_linear_3()?, mode),
        "su3" => simple_matrix_entry(special_unitary_3("su3", &[1, 1, 1])?, mode),
        "su21" => simple_matrix_entry(special_unitary_3("su21", &[1, 1, -1])?, mode),
        "sp4" => simple_matrix_entry(symplectic_4()?, mode),
        "so5" => simple_matrix_entry(orthogonal_algebra("so5", &[1, 1, 1, 1, 1])?, mode),
        "so41" => simple_matrix_entry(orthogonal_algebra("so41", &[1, 1, 1, 1, -1])?, mode),
        "so32" => simple_matrix_entry(orthogonal_algebra("so32", &[1, 1, 1, -1, -1])?, mode),
        "sl2xX3" | "sl2rxX3" => {
            frobenius_tensor(id, TripleKind::Split, truncated_polynomial_algebra(3), mode)?
        }
        "su2xX3" => {
            frobenius_tensor(id, TripleKind::Compact, truncated_polynomial_algebra(3), mode)?
        }
        "sl2xX4" | "sl2rxX4" => {
            frobenius_tensor(id, TripleKind::Split, truncated_polynomial_algebra(4), mode)?
        }
        "su2xX4" => {
            frobenius_tensor(id, TripleKind::Compact, truncated_polynomial_algebra(4), mode)?
        }
        "sl2xXY22" | "sl2rxXY22" => {
            frobenius_tensor(id, TripleKind::Split, two_dual_generators_algebra(), mode)?
        }
        "su2xXY22" => {
            frobenius_tensor(id, TripleKind::Compact, two_dual_generators_algebra(), mode)?
        }
        "sl2rxXY33" => frobenius_tensor(id, TripleKind::Split, equal_squares_algebra(), mode)?,
        "su2xXY33" => frobenius_tensor(id, TripleKind::Compact, equal_squares_algebra(), mode)?,
        "dx-vv" => tensor_square_extension(mode)?,
        "dx-su2w" => su2w_extension()?,
        "d4" => module_extension(id, TripleKind::Split, 4, mode)?,
        "d4c" => module_extension(id, TripleKind::Compact, 4, mode)?,
        "d6" => module_extension(id, TripleKind::Split, 6, mode)?,
        "d6c" => module_extension(id, TripleKind::Compact, 6, mode)?,
        "dx-nil5" => nil5_extension(mode)?,
        "dx-vvd-diag" => nested_vvd(id, diag, mode)?,
        "dx-vvd-nilp" => nested_vvd(id, nilp, mode)?,
        "dx-vvd-rot" => nested_vvd(id, rot, mode)?,
        "dx-su2wd" => su2wd_extension()?,
        "dx-advv" => advv_extension(mode)?,
        "gcheck-plus" => gcheck_extension(1)?,
        "gcheck-minus" => gcheck_extension(-1)?,
        _ => unreachable!("roster membership was checked above"),
    };
    let mut q = q;
    q.lie.set_name(id);
    Ok(q)
}

/// Result of one named check on a catalogue entry.
#[derive(Clone, Debug)]
pub struct EntryCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Verification record for one entry.
#[derive(Clone, Debug)]
pub struct EntryReport {
    pub id: String,
    pub mode: FieldMode,
    pub checks: Vec<EntryCheck>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// One line per failed check.
    pub fn failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect()
    }
}

fn multiset_matches(
    computed: &[(String, usize)],
    expected: &[(&str, usize)],
) -> bool {
    computed.len() == expected.len()
        && computed
            .iter()
            .zip(expected.iter())
            .all(|((cl, cm), (el, em))| cl == el && cm == em)
}

fn format_multiset(ms: &[(String, usize)]) -> String {
    let parts: Vec<String> = ms.iter().map(|(l, m)| format!("{l} x{m}")).collect();
    parts.join(", ")
}

/// Recomputes every expected invariant of the entry from a fresh build.
pub fn verify_entry(entry: &CatalogueEntry) -> EntryReport {
    let mut checks = Vec::new();
    let mut check = |name: &'static str, passed: bool, detail: String| {
        checks.push(EntryCheck {
            name,
            passed,
            detail,
        });
    };
    let q = match build(entry.id, entry.mode) {
        Ok(q) => q,
        Err(e) => {
            check("build", false, e.to_string());
            return EntryReport {
                id: entry.id.to_string(),
                mode: entry.mode,
                checks,
            };
        }
    };
    match build(entry.id, entry.mode) {
        Ok(second) => check(
            "deterministic",
            second == q,
            "two builds agree".into(),
        ),
        Err(e) => check("deterministic", false, e.to_string()),
    }
    let lie_defects = q.lie.validate();
    check(
        "bracket-axioms",
        lie_defects.is_empty(),
        lie_defects
            .first()
            .map(|d| d.to_string())
            .unwrap_or_else(|| "antisymmetry and the Jacobi identity hold".into()),
    );
    let quad_defects = q.validate_quadratic();
    check(
        "form-axioms",
        quad_defects.is_empty(),
        quad_defects
            .first()
            .map(|d| d.to_string())
            .unwrap_or_else(|| "symmetric, nondegenerate, invariant".into()),
    );
    check(
        "dimension",
        q.dim() == entry.dim,
        format!("dim {} expected {}", q.dim(), entry.dim),
    );
    let radical = q.lie.radical();
    check(
        "radical-dimension",
        radical.dim() == entry.radical_dim,
        format!("dim {} expected {}", radical.dim(), entry.radical_dim),
    );
    let killing = q.lie.killing_form();
    check(
        "killing-rank",
        killing.rank() == entry.killing_rank,
        format!("rank {} expected {}", killing.rank(), entry.killing_rank),
    );
    if let Some(expected) = entry.killing_signature {
        let sig = killing.signature();
        check(
            "killing-signature",
            sig == expected,
            format!("signature {sig:?} expected {expected:?}"),
        );
    }
    let orth = q.orthogonality_report();
    check(
        "orthogonality",
        orth.passes(),
        format!(
            "derived-perp equals center: {}; perfect {} centerless {}; ideal-perp brackets vanish: {}",
            orth.derived_perp_equals_center,
            orth.perfect,
            orth.centerless,
            orth.ideal_perp_brackets.iter().all(|(_, ok)| *ok)
        ),
    );
    let irr = q.is_irreducible();
    check(
        "irreducible",
        irr.is_certified_irreducible(),
        format!("{irr:?}"),
    );
    if entry.radical_dim > 0 {
        let report = q.levi_radical_report();
        check(
            "radical-perp-isotropic",
            report.rperp_contained_in_radical && report.rperp_central_in_radical,
            format!(
                "contained {} central {}",
                report.rperp_contained_in_radical, report.rperp_central_in_radical
            ),
        );
        check(
            "radical-dichotomy",
            report.dichotomy_holds(),
            format!(
                "radical equals its perp: {}; perp inside derived radical: {}",
                report.r_equals_rperp, report.rperp_in_derived_radical
            ),
        );
        if let (Some(levi), Some(expected)) = (&q.levi, entry.rperp_modules) {
            match decompose_subspace(&q.lie, levi, &report.radical_perp) {
                Ok(dec) => {
                    let ms = dec.multiset();
                    check(
                        "radical-perp-modules",
                        multiset_matches(&ms, expected),
                        format_multiset(&ms),
                    );
                }
                Err(e) => check("radical-perp-modules", false, e.to_string()),
            }
            // The designated triple spans one simple summand, so the
            // number of irreducible radical summands bounds it below.
            match decompose_subspace(&q.lie, levi, &radical) {
                Ok(dec) => {
                    let n = dec.summand_count();
                    check(
                        "summand-bound",
                        n >= 1,
                        format!("radical splits into {n} irreducible summands"),
                    );
                }
                Err(e) => check("summand-bound", false, e.to_string()),
            }
        }
    }
    if let (Some(levi), Some(expected)) = (&q.levi, entry.modules) {
        match decompose(&q.lie, levi) {
            Ok(dec) => {
                let ms = dec.multiset();
                check(
                    "modules",
                    multiset_matches(&ms, expected),
                    format_multiset(&ms),
                );
            }
            Err(e) => check("modules", false, e.to_string()),
        }
    }
    if let Some(expected) = entry.signatures {
        match q.signature_set() {
            Some(set) => {
                let want: BTreeSet<(usize, usize)> = expected.iter().copied().collect();
                check(
                    "signatures",
                    set == want,
                    format!("{set:?} expected {want:?}"),
                );
            }
            None => check("signatures", false, "no signature set in this mode".into()),
        }
    }
    EntryReport {
        id: entry.id.to_string(),
        mode: entry.mode,
        checks,
    }
}
