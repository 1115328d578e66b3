//! Quadratic structures: invariant scalar products, orthogonal subspaces,
//! centroids, irreducibility certification, invariant form spaces,
//! signature sets, and isomorphism-invariant fingerprints.

use crate::lie::LieAlgebra;
use crate::matrix::{rational_roots, Matrix, RowReducer, Subspace};
use crate::poly::{poly_extended_gcd, poly_mul, poly_split_off_root, poly_squarefree_part};
use crate::scalar::{format_scalar, s_int, Scalar};
use crate::sl2::{decompose, LeviTriple, Sl2Error};
use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// Ground field of interpretation for the rational structure constants:
/// algebraically closed or real. The choice affects irreducibility
/// certification and which fingerprint fields are meaningful.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldMode {
    Closed,
    Real,
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldMode::Closed => write!(f, "closed"),
            FieldMode::Real => write!(f, "real"),
        }
    }
}

/// A Lie algebra together with a symmetric invariant nondegenerate form
/// (possibly defective; `validate_quadratic` reports violations), a field
/// mode, and an optional designated rank-one generator triple.
#[derive(Clone, PartialEq, Debug)]
pub struct QuadraticLieAlgebra {
    pub lie: LieAlgebra,
    pub form: Matrix,
    pub mode: FieldMode,
    pub levi: Option<LeviTriple>,
}

/// A violation of the quadratic structure axioms.
#[derive(Clone, PartialEq, Debug)]
pub enum QuadDefect {
    FormShape {
        rows: usize,
        cols: usize,
        dim: usize,
    },
    FormNotSymmetric {
        i: usize,
        j: usize,
    },
    FormDegenerate {
        kernel_vector: Vec<Scalar>,
    },
    FormNotInvariant {
        i: usize,
        j: usize,
        k: usize,
        labels: (String, String, String),
        residual: Scalar,
    },
}

impl fmt::Display for QuadDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadDefect::FormShape { rows, cols, dim } => {
                write!(f, "form is {rows}x{cols} but the algebra has dimension {dim}")
            }
            QuadDefect::FormNotSymmetric { i, j } => {
                write!(f, "form is not symmetric at entry ({i}, {j})")
            }
            QuadDefect::FormDegenerate { kernel_vector } => write!(
                f,
                "form is degenerate; kernel vector [{}]",
                kernel_vector
                    .iter()
                    .map(format_scalar)
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            QuadDefect::FormNotInvariant {
                labels, residual, ..
            } => write!(
                f,
                "invariance fails on ({}, {}, {}): B([x,y],z) - B(x,[y,z]) = {}",
                labels.0,
                labels.1,
                labels.2,
                format_scalar(residual)
            ),
        }
    }
}

/// Outcome of the irreducibility decision procedure.
#[derive(Clone, PartialEq, Debug)]
pub enum Irreducibility {
    /// No proper nonzero ideal on which the form stays nondegenerate.
    Irreducible { evidence: String },
    /// A splitting was found; when the split is rational the projection
    /// idempotent and the resulting nondegenerate ideal are included.
    Reducible {
        reason: String,
        idempotent: Option<Matrix>,
        ideal: Option<Subspace>,
    },
    /// The procedure could not certify either way; candidate ideals from
    /// invariant-subspace searches are listed for inspection.
    Inconclusive {
        detail: String,
        candidates: Vec<Subspace>,
    },
}

impl Irreducibility {
    pub fn is_certified_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible { .. })
    }

    pub fn is_certified_reducible(&self) -> bool {
        matches!(self, Irreducibility::Reducible { .. })
    }
}

/// Relation between the derived subalgebra's orthogonal complement and
/// the center, plus the derived perfect/centerless equivalence and the
/// vanishing of each tested ideal against its orthogonal complement.
#[derive(Clone, PartialEq, Debug)]
pub struct OrthogonalityReport {
    pub derived_perp: Subspace,
    pub center: Subspace,
    pub derived_perp_equals_center: bool,
    pub perfect: bool,
    pub centerless: bool,
    /// For each named ideal i, whether [i, orthogonal(i)] = 0.
    pub ideal_perp_brackets: Vec<(&'static str, bool)>,
}

impl OrthogonalityReport {
    pub fn passes(&self) -> bool {
        self.derived_perp_equals_center
            && (self.perfect == self.centerless)
            && self.ideal_perp_brackets.iter().all(|(_, ok)| *ok)
    }
}

/// Structure of the radical against the form: containment of the
/// orthogonal complement, centrality, and the equal-or-inside-derived
/// dichotomy.
#[derive(Clone, PartialEq, Debug)]
pub struct LeviRadicalReport {
    pub radical: Subspace,
    pub radical_perp: Subspace,
    pub rperp_contained_in_radical: bool,
    pub rperp_central_in_radical: bool,
    pub r_equals_rperp: bool,
    pub rperp_in_derived_radical: bool,
}

impl LeviRadicalReport {
    /// The dichotomy: exactly one of r = r-perp or r-perp inside [r, r].
    pub fn dichotomy_holds(&self) -> bool {
        self.r_equals_rperp != self.rperp_in_derived_radical
    }
}

/// Isomorphism-invariant summary of a quadratic Lie algebra. Real-mode
/// fields are absent in closed mode; module multiplicities are present
/// only when a generator triple is designated.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub dim_center: usize,
    pub dim_derived: usize,
    pub dim_radical: usize,
    pub derived_dims_of_radical: Vec<usize>,
    pub lower_central_dims_of_radical: Vec<usize>,
    pub killing_rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub killing_signature: Option<(usize, usize)>,
    pub dim_centroid: usize,
    pub dim_symmetric_centroid: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature_set: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module_multiplicities: Option<Vec<(String, usize)>>,
}

impl Fingerprint {
    /// Fields that do not depend on the field mode or on a designated
    /// triple, used to compare real forms of a common closed algebra.
    pub fn mode_independent(&self) -> impl PartialEq + fmt::Debug {
        (
            self.dim,
            self.dim_center,
            self.dim_derived,
            self.dim_radical,
            self.derived_dims_of_radical.clone(),
            self.lower_central_dims_of_radical.clone(),
            self.killing_rank,
            self.dim_centroid,
            self.dim_symmetric_centroid,
        )
    }
}

/// Coefficients sampled when sweeping combinations of a form-space basis.
pub const SIGNATURE_SAMPLES: [i64; 4] = [-2, -1, 1, 2];

/// At most this many basis directions are swept in `signature_set`.
pub const SIGNATURE_DIM_CAP: usize = 6;

impl QuadraticLieAlgebra {
    pub fn new(lie: LieAlgebra, form: Matrix, mode: FieldMode) -> Self {
        QuadraticLieAlgebra {
            lie,
            form,
            mode,
            levi: None,
        }
    }

    pub fn with_levi(mut self, levi: LeviTriple) -> Self {
        self.levi = Some(levi);
        self
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    /// Checks the form: square of the right size, symmetric,
    /// nondegenerate, and invariant. Bracket axioms are checked
    /// separately by `LieAlgebra::validate`.
    pub fn validate_quadratic(&self) -> Vec<QuadDefect> {
        let n = self.lie.dim();
        let mut defects = Vec::new();
        if self.form.rows() != n || self.form.cols() != n {
            defects.push(QuadDefect::FormShape {
                rows: self.form.rows(),
                cols: self.form.cols(),
                dim: n,
            });
            return defects;
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.form.at(i, j) != self.form.at(j, i) {
                    defects.push(QuadDefect::FormNotSymmetric { i, j });
                }
            }
        }
        if !defects.is_empty() {
            return defects;
        }
        if let Some(kernel_vector) = self.form.kernel_basis().into_iter().next() {
            defects.push(QuadDefect::FormDegenerate { kernel_vector });
        }
        // B([e_i, e_j], e_k) = B(e_i, [e_j, e_k]) on all basis triples.
        for i in 0..n {
            for j in 0..n {
                let bij = self.lie.bracket_basis(i, j);
                for k in 0..n {
                    let left: Scalar = bij
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(l, c)| c * self.form.at(l, k))
                        .sum();
                    let right: Scalar = (0..n)
                        .filter(|l| !self.lie.structure_constant(j, k, *l).is_zero())
                        .map(|l| self.lie.structure_constant(j, k, l) * self.form.at(i, l))
                        .sum();
                    let residual = &left - &right;
                    if !residual.is_zero() {
                        defects.push(QuadDefect::FormNotInvariant {
                            i,
                            j,
                            k,
                            labels: (
                                self.lie.labels()[i].clone(),
                                self.lie.labels()[j].clone(),
                                self.lie.labels()[k].clone(),
                            ),
                            residual,
                        });
                    }
                }
            }
        }
        defects
    }

    /// `{x : B(s, x) = 0 for all s in the subspace}`.
    pub fn orthogonal(&self, s: &Subspace) -> Subspace {
        let mut red = RowReducer::new(self.dim());
        for v in s.basis() {
            // Row (v^T G); the form is symmetric so sides agree.
            let row: Vec<Scalar> = (0..self.dim())
                .map(|j| {
                    v.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| c * self.form.at(i, j))
                        .sum()
                })
                .collect();
            red.add_rational_row(&row);
        }
        Subspace::from_spanning(self.dim(), red.kernel_basis())
    }

    /// Gram matrix of the form on the subspace basis.
    pub fn restrict_form(&self, s: &Subspace) -> Matrix {
        Matrix::from_fn(s.dim(), s.dim(), |i, j| {
            let gv = self.form.mul_vec(&s.basis()[j]);
            s.basis()[i]
                .iter()
                .zip(&gv)
                .map(|(a, b)| a * b)
                .sum()
        })
    }

    pub fn is_nondegenerate_on(&self, s: &Subspace) -> bool {
        self.restrict_form(s).rank() == s.dim()
    }

    /// The orthogonal of the derived subalgebra against the center, with
    /// the perfect/centerless equivalence.
    pub fn orthogonality_report(&self) -> OrthogonalityReport {
        let derived = self.lie.derived_subalgebra();
        let derived_perp = self.orthogonal(&derived);
        let center = self.lie.center();
        let perfect = derived.dim() == self.dim();
        let centerless = center.dim() == 0;
        // An ideal brackets to zero with its orthogonal complement;
        // probe the canonical ideals directly.
        let radical = self.lie.radical();
        let tested: [(&'static str, &Subspace); 3] =
            [("derived", &derived), ("center", &center), ("radical", &radical)];
        let ideal_perp_brackets = tested
            .iter()
            .map(|(name, ideal)| {
                let perp = self.orthogonal(ideal);
                (*name, self.lie.bracket_span(ideal, &perp).dim() == 0)
            })
            .collect();
        OrthogonalityReport {
            derived_perp_equals_center: derived_perp == center,
            derived_perp,
            center,
            perfect,
            centerless,
            ideal_perp_brackets,
        }
    }

    /// Radical structure against the form. The radical and its orthogonal
    /// are returned so callers can run module-level comparisons.
    pub fn levi_radical_report(&self) -> LeviRadicalReport {
        let radical = self.lie.radical();
        let radical_perp = self.orthogonal(&radical);
        let rperp_contained_in_radical = radical.contains(&radical_perp);
        let commutator = self.lie.bracket_span(&radical_perp, &radical);
        let derived_radical = self.lie.bracket_span(&radical, &radical);
        LeviRadicalReport {
            rperp_contained_in_radical,
            rperp_central_in_radical: commutator.dim() == 0,
            r_equals_rperp: radical == radical_perp,
            rperp_in_derived_radical: derived_radical.contains(&radical_perp),
            radical,
            radical_perp,
        }
    }

    /// Basis of the centroid: all operators commuting with every adjoint
    /// map, equivalently M with M[x,y] = [Mx,y] = [x,My].
    pub fn centroid(&self) -> Vec<Matrix> {
        let n = self.dim();
        let mut red = RowReducer::new(n * n);
        for t in 0..n {
            let a = self.lie.ad_basis(t);
            add_commutant_rows(&mut red, &a, n);
        }
        kernel_matrices(&red, n)
    }

    /// Basis of the symmetric centroid: centroid elements self-adjoint
    /// for the form.
    pub fn symmetric_centroid(&self) -> Vec<Matrix> {
        let n = self.dim();
        let mut red = RowReducer::new(n * n);
        for t in 0..n {
            let a = self.lie.ad_basis(t);
            add_commutant_rows(&mut red, &a, n);
        }
        // M^T G = G M, component (i, j).
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![Scalar::zero(); n * n];
                let mut nonzero = false;
                for s in 0..n {
                    let g = self.form.at(s, j);
                    if !g.is_zero() {
                        row[s * n + i] = &row[s * n + i] + g;
                        nonzero = true;
                    }
                    let g2 = self.form.at(i, s);
                    if !g2.is_zero() {
                        row[s * n + j] = &row[s * n + j] - g2;
                        nonzero = true;
                    }
                }
                if nonzero {
                    red.add_rational_row(&row);
                }
            }
        }
        kernel_matrices(&red, n)
    }

    /// Decides whether the algebra has a proper nonzero ideal on which
    /// the form is nondegenerate, via the symmetric centroid: such ideals
    /// correspond to nontrivial symmetric-centroid idempotents.
    pub fn is_irreducible(&self) -> Irreducibility {
        let n = self.dim();
        if n == 0 {
            return Irreducibility::Inconclusive {
                detail: "zero algebra".into(),
                candidates: Vec::new(),
            };
        }
        let sym = self.symmetric_centroid();
        let identity = Matrix::identity(n);
        let span = Subspace::from_spanning(n * n, sym.iter().map(Matrix::vectorize));
        assert!(
            span.contains_vector(&identity.vectorize()),
            "identity must lie in the symmetric centroid"
        );
        if sym.len() == 1 {
            return Irreducibility::Irreducible {
                evidence: "symmetric centroid is spanned by the identity".into(),
            };
        }

        // Classify every basis element, then random combinations of the
        // complement of the identity.
        for phi in &sym {
            if let Some(result) = self.splitting_from_element(phi) {
                return result;
            }
        }
        let id_line = Subspace::from_spanning(n * n, vec![identity.vectorize()]);
        let complement: Vec<Matrix> = sym
            .iter()
            .map(|m| {
                let reduced = id_line.reduce(m.vectorize());
                Matrix::from_fn(n, n, |i, j| reduced[i * n + j].clone())
            })
            .filter(|m| !m.is_zero())
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0x51_1e_c0_7e);
        for _ in 0..20 {
            let mut combo = Matrix::zeros(n, n);
            let mut any = false;
            for m in &complement {
                let c = rng.gen_range(-3i64..=3);
                if c != 0 {
                    combo = combo.add(&m.scale(&s_int(c)));
                    any = true;
                }
            }
            if !any {
                continue;
            }
            if let Some(result) = self.splitting_from_element(&combo) {
                return result;
            }
        }

        // Locality certificate needs the basis to commute pairwise.
        for (i, a) in sym.iter().enumerate() {
            for b in sym.iter().skip(i + 1) {
                if a.mul(b) != b.mul(a) {
                    return Irreducibility::Inconclusive {
                        detail: "symmetric centroid basis does not commute".into(),
                        candidates: self.reducibility_candidates(&sym),
                    };
                }
            }
        }
        let evidence = match self.mode {
            FieldMode::Closed => {
                "symmetric centroid is commutative with every sampled element \
                 a scalar plus a nilpotent"
            }
            FieldMode::Real => {
                "symmetric centroid is commutative with every sampled element \
                 local (scalar plus nilpotent, or a complex structure)"
            }
        };
        Irreducibility::Irreducible {
            evidence: evidence.into(),
        }
    }

    /// If the element's minimal polynomial has at least two distinct
    /// irreducible factors over the mode field, produce the reducibility
    /// verdict (with a rational spectral projection when available).
    fn splitting_from_element(&self, phi: &Matrix) -> Option<Irreducibility> {
        let mp = phi.minimal_polynomial();
        let sf = poly_squarefree_part(&mp);
        let deg = sf.len().saturating_sub(1);
        if deg <= 1 {
            return None; // scalar plus nilpotent
        }
        let roots = rational_roots(&sf);
        if self.mode == FieldMode::Real && deg == 2 && roots.is_empty() {
            // X^2 + bX + c with negative discriminant is a complex
            // structure after shift; positive discriminant splits over
            // the reals even though the roots are irrational.
            let b = &sf[1];
            let c = &sf[0];
            let disc = &(b * b) - &(&s_int(4) * c);
            if disc.is_negative() {
                return None;
            }
        }
        if let Some(root) = roots.first() {
            let (k, rest) = poly_split_off_root(&mp, root);
            // p = (X - root)^k, q = rest, gcd(p, q) = 1.
            let mut p = vec![Scalar::one()];
            let linear = vec![-root.clone(), Scalar::one()];
            for _ in 0..k {
                p = poly_mul(&p, &linear);
            }
            let (g, a, _) = poly_extended_gcd(&p, &rest);
            assert_eq!(g, vec![Scalar::one()], "factors are coprime");
            let e = phi.eval_poly(&poly_mul(&a, &p));
            debug_assert_eq!(e.mul(&e), e, "spectral projection is idempotent");
            let n = self.dim();
            let image = Subspace::from_spanning(
                n,
                (0..n).map(|j| (0..n).map(|i| e.at(i, j).clone()).collect()),
            );
            assert!(image.dim() > 0 && image.dim() < n, "splitting is proper");
            assert!(
                self.is_nondegenerate_on(&image),
                "image of a symmetric idempotent is a nondegenerate ideal"
            );
            Some(Irreducibility::Reducible {
                reason: format!(
                    "centroid element splits: minimal polynomial has the rational root {}",
                    format_scalar(root)
                ),
                idempotent: Some(e),
                ideal: Some(image),
            })
        } else {
            Some(Irreducibility::Reducible {
                reason: format!(
                    "centroid element splits over the {} field: squarefree part of \
                     the minimal polynomial has degree {} with no rational root",
                    self.mode, deg
                ),
                idempotent: None,
                ideal: None,
            })
        }
    }

    /// Best-effort candidate ideals for the inconclusive branch: ideal
    /// closures of Casimir eigenspaces (when a triple is designated) and
    /// of rational eigenspaces of centroid elements.
    fn reducibility_candidates(&self, sym: &[Matrix]) -> Vec<Subspace> {
        let n = self.dim();
        let mut candidates: Vec<Subspace> = Vec::new();
        let push = |s: Subspace, out: &mut Vec<Subspace>| {
            if s.dim() > 0 && s.dim() < n && !out.contains(&s) {
                out.push(s);
            }
        };
        if let Some(levi) = &self.levi {
            if let Ok(dec) = decompose(&self.lie, levi) {
                for summand in dec.summands {
                    push(self.lie.ideal_closure(&summand.isotypic), &mut candidates);
                }
            }
        }
        for phi in sym {
            for (_, basis) in phi.rational_eigenspaces() {
                let sub = Subspace::from_spanning(n, basis);
                push(self.lie.ideal_closure(&sub), &mut candidates);
            }
        }
        candidates
    }

    /// Basis of the space of all invariant symmetric bilinear forms.
    pub fn invariant_form_space(&self) -> Vec<Matrix> {
        let n = self.dim();
        let pairs = n * (n + 1) / 2;
        let index = |a: usize, b: usize| {
            let (i, j) = if a <= b { (a, b) } else { (b, a) };
            i * n + j - i * (i + 1) / 2
        };
        let mut red = RowReducer::new(pairs);
        for i in 0..n {
            for j in 0..n {
                let bij = self.lie.bracket_basis(i, j);
                for k in 0..n {
                    let mut row = vec![Scalar::zero(); pairs];
                    let mut nonzero = false;
                    for (l, c) in bij.iter().enumerate() {
                        if !c.is_zero() {
                            let idx = index(l, k);
                            row[idx] = &row[idx] + c;
                            nonzero = true;
                        }
                    }
                    for l in 0..n {
                        let c = self.lie.structure_constant(j, k, l);
                        if !c.is_zero() {
                            let idx = index(i, l);
                            row[idx] = &row[idx] - c;
                            nonzero = true;
                        }
                    }
                    if nonzero {
                        red.add_rational_row(&row);
                    }
                }
            }
        }
        red.kernel_basis()
            .into_iter()
            .map(|v| Matrix::from_fn(n, n, |i, j| v[index(i, j)].clone()))
            .collect()
    }

    /// The same algebra written in a new basis whose vectors are the
    /// columns of `p` (in old coordinates). Structure constants, form,
    /// and any designated triple transform along; every isomorphism
    /// invariant is unchanged.
    pub fn change_basis(&self, p: &Matrix) -> QuadraticLieAlgebra {
        let n = self.dim();
        assert!(p.rows() == n && p.cols() == n, "basis change shape");
        let pinv = p.inverse().expect("basis change must be invertible");
        let mut entries: Vec<(usize, usize, Vec<(usize, Scalar)>)> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let w = self.lie.bracket(&p.col(i), &p.col(j));
                let coords = pinv.mul_vec(&w);
                let terms: Vec<(usize, Scalar)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !terms.is_empty() {
                    entries.push((i, j, terms));
                }
            }
        }
        let lie = LieAlgebra::from_brackets(
            self.lie.name(),
            LieAlgebra::numbered_labels("b", n),
            &entries,
        );
        let form = p.transpose().mul(&self.form).mul(p);
        let mut out = QuadraticLieAlgebra::new(lie, form, self.mode);
        if let Some(levi) = &self.levi {
            out = out.with_levi(LeviTriple {
                kind: levi.kind,
                vectors: [
                    pinv.mul_vec(&levi.vectors[0]),
                    pinv.mul_vec(&levi.vectors[1]),
                    pinv.mul_vec(&levi.vectors[2]),
                ],
            });
        }
        out
    }

    /// Signatures of the nondegenerate members of the invariant form
    /// space, sampled on a small integer grid over the basis (real mode
    /// only). At most `SIGNATURE_DIM_CAP` basis directions are swept.
    pub fn signature_set(&self) -> Option<BTreeSet<(usize, usize)>> {
        let samples: Vec<Scalar> = SIGNATURE_SAMPLES.iter().map(|&c| s_int(c)).collect();
        self.signature_set_with(&samples)
    }

    /// `signature_set` over caller-chosen sample coefficients. Returns
    /// an empty set when the samples are empty.
    pub fn signature_set_with(&self, samples: &[Scalar]) -> Option<BTreeSet<(usize, usize)>> {
        if self.mode != FieldMode::Real {
            return None;
        }
        let mut out = BTreeSet::new();
        if samples.is_empty() {
            return Some(out);
        }
        let basis = self.invariant_form_space();
        let d = basis.len().min(SIGNATURE_DIM_CAP);
        let n = self.dim();
        let combos = samples.len().pow(d as u32);
        for code in 0..combos {
            let mut c = code;
            let mut form = Matrix::zeros(n, n);
            for b in basis.iter().take(d) {
                let coeff = &samples[c % samples.len()];
                c /= samples.len();
                form = form.add(&b.scale(coeff));
            }
            if form.rank() == n {
                out.insert(form.signature());
            }
        }
        Some(out)
    }

    /// Isomorphism-invariant summary. Module multiplicities are included
    /// when a triple is designated; designation errors propagate.
    pub fn fingerprint(&self) -> Result<Fingerprint, Sl2Error> {
        let radical = self.lie.radical();
        let derived_dims_of_radical: Vec<usize> = self
            .lie
            .derived_series_of(&radical)
            .iter()
            .map(Subspace::dim)
            .collect();
        let lower_central_dims_of_radical: Vec<usize> = self
            .lie
            .lower_central_series_of(&radical)
            .iter()
            .map(Subspace::dim)
            .collect();
        let killing = self.lie.killing_form();
        let module_multiplicities = match &self.levi {
            Some(levi) => Some(decompose(&self.lie, levi)?.multiset()),
            None => None,
        };
        Ok(Fingerprint {
            dim: self.dim(),
            dim_center: self.lie.center().dim(),
            dim_derived: self.lie.derived_subalgebra().dim(),
            dim_radical: radical.dim(),
            derived_dims_of_radical,
            lower_central_dims_of_radical,
            killing_rank: killing.rank(),
            killing_signature: match self.mode {
                FieldMode::Real => Some(killing.signature()),
                FieldMode::Closed => None,
            },
            dim_centroid: self.centroid().len(),
            dim_symmetric_centroid: self.symmetric_centroid().len(),
            signature_set: self.signature_set().map(|s| s.into_iter().collect()),
            module_multiplicities,
        })
    }
}

fn add_commutant_rows(red: &mut RowReducer, a: &Matrix, n: usize) {
    // A M - M A = 0, component (r, c), unknowns M[s][t] at index s*n + t.
    for r in 0..n {
        for c in 0..n {
            let mut row = vec![Scalar::zero(); n * n];
            let mut nonzero = false;
            for s in 0..n {
                let v = a.at(r, s);
                if !v.is_zero() {
                    row[s * n + c] = &row[s * n + c] + v;
                    nonzero = true;
                }
                let w = a.at(s, c);
                if !w.is_zero() {
                    row[r * n + s] = &row[r * n + s] - w;
                    nonzero = true;
                }
            }
            if nonzero {
                red.add_rational_row(&row);
            }
        }
    }
}

fn kernel_matrices(red: &RowReducer, n: usize) -> Vec<Matrix> {
    red.kernel_basis()
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{sl2_split, su2_compact};
    use crate::scalar::s_ratio;

    fn sl2_quarter_killing(mode: FieldMode) -> QuadraticLieAlgebra {
        let lie = sl2_split();
        let form = lie.killing_form().scale(&s_ratio(1, 4));
        QuadraticLieAlgebra::new(lie, form, mode)
    }

    fn su2_trace_form(mode: FieldMode) -> QuadraticLieAlgebra {
        let lie = su2_compact();
        // Killing is -8 I, so the quarter form is -2 I (negative definite).
        let form = lie.killing_form().scale(&s_ratio(1, 4));
        QuadraticLieAlgebra::new(lie, form, mode)
    }

    /// The realification of the closed rank-one simple algebra: basis
    /// e, h, f, ie, ih, if with complex-bilinear brackets, and the real
    /// part of the trace form.
    fn complexified_sl2_as_real() -> QuadraticLieAlgebra {
        let s = sl2_split();
        let n = 6;
        let mut c = vec![Scalar::zero(); n * n * n];
        // Basis index p*3 + a where p = 0 for real, 1 for imaginary part.
        for pa in 0..2usize {
            for pb in 0..2usize {
                for a in 0..3usize {
                    for b in 0..3usize {
                        let br = s.bracket_basis(a, b);
                        // i^(pa+pb): sign and output part.
                        let (sign, part) = match pa + pb {
                            0 => (1i64, 0usize),
                            1 => (1, 1),
                            2 => (-1, 0),
                            _ => unreachable!(),
                        };
                        for (k, v) in br.iter().enumerate() {
                            if !v.is_zero() {
                                let row = (pa * 3 + a) * n + (pb * 3 + b);
                                c[row * n + part * 3 + k] = v * &s_int(sign);
                            }
                        }
                    }
                }
            }
        }
        let labels = vec![
            "e".into(),
            "h".into(),
            "f".into(),
            "ie".into(),
            "ih".into(),
            "if".into(),
        ];
        let lie = LieAlgebra::new("sl2C", labels, c);
        assert!(lie.is_lie());
        // Re tr(xy): B(e,f) = 1, B(h,h) = 2, B(ie,if) = -1, B(ih,ih) = -2.
        let mut form = Matrix::zeros(6, 6);
        *form.at_mut(0, 2) = s_int(1);
        *form.at_mut(2, 0) = s_int(1);
        *form.at_mut(1, 1) = s_int(2);
        *form.at_mut(3, 5) = s_int(-1);
        *form.at_mut(5, 3) = s_int(-1);
        *form.at_mut(4, 4) = s_int(-2);
        QuadraticLieAlgebra::new(lie, form, FieldMode::Real)
    }

    #[test]
    fn valid_quadratic_structure_has_no_defects() {
        assert!(sl2_quarter_killing(FieldMode::Closed)
            .validate_quadratic()
            .is_empty());
    }

    #[test]
    fn identity_form_on_sl2_fails_invariance() {
        let lie = sl2_split();
        let q = QuadraticLieAlgebra::new(lie, Matrix::identity(3), FieldMode::Closed);
        let defects = q.validate_quadratic();
        assert!(defects
            .iter()
            .any(|d| matches!(d, QuadDefect::FormNotInvariant { .. })));
    }

    #[test]
    fn degenerate_and_asymmetric_forms_are_reported() {
        let lie = LieAlgebra::abelian("a2", vec!["u".into(), "v".into()]);
        let q = QuadraticLieAlgebra::new(
            lie.clone(),
            Matrix::from_int_rows(&[&[1, 0], &[0, 0]]),
            FieldMode::Closed,
        );
        assert!(matches!(
            q.validate_quadratic()[0],
            QuadDefect::FormDegenerate { .. }
        ));
        let q2 = QuadraticLieAlgebra::new(
            lie,
            Matrix::from_int_rows(&[&[1, 2], &[0, 1]]),
            FieldMode::Closed,
        );
        assert!(matches!(
            q2.validate_quadratic()[0],
            QuadDefect::FormNotSymmetric { i: 0, j: 1 }
        ));
    }

    #[test]
    fn orthogonal_complements_in_sl2() {
        let q = sl2_quarter_killing(FieldMode::Closed);
        // span{e}^perp = span{e, h}.
        let line = Subspace::from_spanning(3, vec![vec![s_int(1), s_int(0), s_int(0)]]);
        let perp = q.orthogonal(&line);
        assert_eq!(perp.dim(), 2);
        assert!(perp.contains_vector(&[s_int(1), s_int(0), s_int(0)]));
        assert!(perp.contains_vector(&[s_int(0), s_int(1), s_int(0)]));
        assert!(!q.is_nondegenerate_on(&line));
        let report = q.orthogonality_report();
        assert!(report.passes());
        assert!(report.perfect && report.centerless);
    }

    #[test]
    fn sl2_is_certified_irreducible() {
        let q = sl2_quarter_killing(FieldMode::Closed);
        assert_eq!(q.centroid().len(), 1);
        assert_eq!(q.symmetric_centroid().len(), 1);
        assert!(q.is_irreducible().is_certified_irreducible());
    }

    #[test]
    fn direct_sum_splits_with_rational_idempotent() {
        let lie = sl2_split().direct_sum(&sl2_split());
        let k = lie.killing_form();
        let q = QuadraticLieAlgebra::new(lie, k, FieldMode::Closed);
        assert_eq!(q.centroid().len(), 2);
        assert_eq!(q.symmetric_centroid().len(), 2);
        match q.is_irreducible() {
            Irreducibility::Reducible {
                idempotent, ideal, ..
            } => {
                let e = idempotent.expect("rational splitting");
                assert_eq!(e.mul(&e), e);
                let ideal = ideal.expect("witness ideal");
                assert_eq!(ideal.dim(), 3);
                assert!(q.is_nondegenerate_on(&ideal));
                assert!(q.lie.is_ideal(&ideal));
            }
            other => panic!("expected reducible, got {other:?}"),
        }
    }

    #[test]
    fn abelian_plane_is_reducible() {
        let lie = LieAlgebra::abelian("a2", vec!["u".into(), "v".into()]);
        let q = QuadraticLieAlgebra::new(lie, Matrix::identity(2), FieldMode::Real);
        // Every operator is in the centroid; symmetric ones form the
        // 3-dimensional symmetric matrices.
        assert_eq!(q.centroid().len(), 4);
        assert_eq!(q.symmetric_centroid().len(), 3);
        assert!(q.is_irreducible().is_certified_reducible());
        assert_eq!(q.invariant_form_space().len(), 3);
    }

    #[test]
    fn complex_structure_is_locality_not_splitting_over_the_reals() {
        let q = complexified_sl2_as_real();
        assert!(q.validate_quadratic().is_empty());
        assert_eq!(q.centroid().len(), 2);
        assert_eq!(q.symmetric_centroid().len(), 2);
        assert!(q.is_irreducible().is_certified_irreducible());
        // Over the closed field the same structure splits, with no
        // rational idempotent to witness it.
        let closed = QuadraticLieAlgebra::new(q.lie.clone(), q.form.clone(), FieldMode::Closed);
        match closed.is_irreducible() {
            Irreducibility::Reducible {
                idempotent: None,
                ideal: None,
                ..
            } => {}
            other => panic!("expected an irrational splitting, got {other:?}"),
        }
    }

    #[test]
    fn invariant_form_space_of_simple_algebras_is_a_line() {
        let q = sl2_quarter_killing(FieldMode::Real);
        let forms = q.invariant_form_space();
        assert_eq!(forms.len(), 1);
        // The defining form lies in the space.
        let span = Subspace::from_spanning(9, forms.iter().map(Matrix::vectorize));
        assert!(span.contains_vector(&q.form.vectorize()));
        assert_eq!(
            q.signature_set().unwrap().into_iter().collect::<Vec<_>>(),
            vec![(1, 2), (2, 1)]
        );
    }

    #[test]
    fn signature_sets_of_rank_one_algebras() {
        let su2 = su2_trace_form(FieldMode::Real);
        assert!(su2.validate_quadratic().is_empty());
        let sigs = su2.signature_set().unwrap();
        assert_eq!(sigs.into_iter().collect::<Vec<_>>(), vec![(0, 3), (3, 0)]);
        assert!(sl2_quarter_killing(FieldMode::Closed).signature_set().is_none());
    }

    #[test]
    fn fingerprint_of_sl2_real() {
        let q = sl2_quarter_killing(FieldMode::Real);
        let fp = q.fingerprint().unwrap();
        assert_eq!(fp.dim, 3);
        assert_eq!(fp.dim_center, 0);
        assert_eq!(fp.dim_derived, 3);
        assert_eq!(fp.dim_radical, 0);
        assert_eq!(fp.derived_dims_of_radical, vec![0]);
        assert_eq!(fp.killing_rank, 3);
        assert_eq!(fp.killing_signature, Some((2, 1)));
        assert_eq!(fp.dim_centroid, 1);
        assert_eq!(fp.signature_set, Some(vec![(1, 2), (2, 1)]));
        assert!(fp.module_multiplicities.is_none());
    }

    #[test]
    fn levi_radical_report_on_semisimple_algebra() {
        let q = sl2_quarter_killing(FieldMode::Closed);
        let report = q.levi_radical_report();
        assert_eq!(report.radical.dim(), 0);
        assert_eq!(report.radical_perp.dim(), 3);
        assert!(!report.rperp_contained_in_radical);
    }

    #[test]
    fn change_of_basis_preserves_every_invariant() {
        let q = sl2_quarter_killing(FieldMode::Real);
        let p = Matrix::from_int_rows(&[&[1, 2, 0], &[0, 1, 1], &[1, 0, 3]]);
        let moved = q.change_basis(&p);
        assert!(moved.lie.is_lie());
        assert!(moved.validate_quadratic().is_empty());
        assert_eq!(moved.lie.killing_form().rank(), 3);
        assert_eq!(moved.lie.killing_form().signature(), (2, 1));
        assert_eq!(moved.signature_set(), q.signature_set());
        assert_eq!(
            moved.change_basis(&p.inverse().unwrap()).form,
            q.form,
            "inverse change restores the form"
        );
    }
}
