//! Lie algebras presented by structure constants over exact rationals:
//! brackets, ideals, series, Killing form, solvability, radical.

use crate::matrix::{Matrix, RowReducer, Subspace};
use crate::scalar::{format_scalar, Scalar};
use num::Zero;
use std::fmt;

/// A finite-dimensional algebra with bracket `[e_i, e_j] = sum_k c[i][j][k] e_k`.
/// Antisymmetry and the Jacobi identity are not enforced by construction;
/// `validate` reports violations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    labels: Vec<String>,
    /// Flattened `dim^3` array, index `(i*dim + j)*dim + k`.
    c: Vec<Scalar>,
}

/// A single violation of the Lie algebra axioms, with the residual vector
/// as an independently checkable witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum StructureDefect {
    Antisymmetry {
        i: usize,
        j: usize,
        labels: (String, String),
        residual: Vec<Scalar>,
    },
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        labels: (String, String, String),
        residual: Vec<Scalar>,
    },
}

impl fmt::Display for StructureDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureDefect::Antisymmetry { labels, residual, .. } => write!(
                f,
                "antisymmetry fails on ({}, {}): residual [{}]",
                labels.0,
                labels.1,
                format_vector(residual)
            ),
            StructureDefect::Jacobi { labels, residual, .. } => write!(
                f,
                "Jacobi identity fails on ({}, {}, {}): residual [{}]",
                labels.0,
                labels.1,
                labels.2,
                format_vector(residual)
            ),
        }
    }
}

fn format_vector(v: &[Scalar]) -> String {
    v.iter().map(format_scalar).collect::<Vec<_>>().join(", ")
}

impl LieAlgebra {
    pub fn new(name: impl Into<String>, labels: Vec<String>, c: Vec<Scalar>) -> Self {
        let dim = labels.len();
        assert_eq!(c.len(), dim * dim * dim, "structure constant count");
        LieAlgebra {
            name: name.into(),
            dim,
            labels,
            c,
        }
    }

    /// Builds from `i < j` bracket entries; the `j > i` half is filled in by
    /// antisymmetry and the diagonal is zero.
    pub fn from_brackets(
        name: impl Into<String>,
        labels: Vec<String>,
        brackets: &[(usize, usize, Vec<(usize, Scalar)>)],
    ) -> Self {
        let dim = labels.len();
        let mut c = vec![Scalar::zero(); dim * dim * dim];
        for (i, j, terms) in brackets {
            assert!(i < j, "from_brackets expects i < j entries");
            assert!(*j < dim, "basis index out of range");
            for (k, coeff) in terms {
                assert!(*k < dim, "target index out of range");
                c[(i * dim + j) * dim + k] = &c[(i * dim + j) * dim + k] + coeff;
                c[(j * dim + i) * dim + k] = -c[(i * dim + j) * dim + k].clone();
            }
        }
        LieAlgebra {
            name: name.into(),
            dim,
            labels,
            c,
        }
    }

    pub fn abelian(name: impl Into<String>, labels: Vec<String>) -> Self {
        let dim = labels.len();
        LieAlgebra {
            name: name.into(),
            dim,
            labels,
            c: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    /// Standard labels "e1".."en" for throwaway algebras.
    pub fn numbered_labels(prefix: &str, dim: usize) -> Vec<String> {
        (1..=dim).map(|i| format!("{prefix}{i}")).collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// All nonzero `i < j` bracket entries, for serialization.
    pub fn bracket_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in 0..self.dim {
                    let v = self.structure_constant(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim)
            .map(|k| self.structure_constant(i, j, k).clone())
            .collect()
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim, "left argument dimension");
        assert_eq!(y.len(), self.dim, "right argument dimension");
        let mut out = vec![Scalar::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..self.dim {
                    let cijk = self.structure_constant(i, j, k);
                    if !cijk.is_zero() {
                        out[k] = &out[k] + &(&xy * cijk);
                    }
                }
            }
        }
        out
    }

    /// The operator `ad(x): v -> [x, v]` as a matrix acting on coordinate
    /// columns.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        assert_eq!(x.len(), self.dim);
        Matrix::from_fn(self.dim, self.dim, |k, j| {
            (0..self.dim)
                .filter(|i| !x[*i].is_zero())
                .map(|i| &x[i] * self.structure_constant(i, j, k))
                .sum()
        })
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |k, j| {
            self.structure_constant(i, j, k).clone()
        })
    }

    /// Reports every violated antisymmetry pair (i <= j) and Jacobi triple
    /// (i < j < k). Empty iff this is a Lie algebra.
    pub fn validate(&self) -> Vec<StructureDefect> {
        let mut defects = Vec::new();
        for i in 0..self.dim {
            for j in i..self.dim {
                let residual: Vec<Scalar> = (0..self.dim)
                    .map(|k| self.structure_constant(i, j, k) + self.structure_constant(j, i, k))
                    .collect();
                if residual.iter().any(|v| !v.is_zero()) {
                    defects.push(StructureDefect::Antisymmetry {
                        i,
                        j,
                        labels: (self.labels[i].clone(), self.labels[j].clone()),
                        residual,
                    });
                }
            }
        }
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let bij = self.bracket_basis(i, j);
                for k in j + 1..self.dim {
                    let ek = basis_vector(self.dim, k);
                    let ei = basis_vector(self.dim, i);
                    let ej = basis_vector(self.dim, j);
                    let mut residual = self.bracket(&bij, &ek);
                    let t2 = self.bracket(&self.bracket_basis(j, k), &ei);
                    let t3 = self.bracket(&self.bracket_basis(k, i), &ej);
                    for l in 0..self.dim {
                        residual[l] = &residual[l] + &(&t2[l] + &t3[l]);
                    }
                    if residual.iter().any(|v| !v.is_zero()) {
                        defects.push(StructureDefect::Jacobi {
                            i,
                            j,
                            k,
                            labels: (
                                self.labels[i].clone(),
                                self.labels[j].clone(),
                                self.labels[k].clone(),
                            ),
                            residual,
                        });
                    }
                }
            }
        }
        defects
    }

    pub fn is_lie(&self) -> bool {
        self.validate().is_empty()
    }

    /// Span of `[u, w]` over basis pairs of the two subspaces.
    pub fn bracket_span(&self, u: &Subspace, w: &Subspace) -> Subspace {
        let mut vectors = Vec::new();
        for x in u.basis() {
            for y in w.basis() {
                vectors.push(self.bracket(x, y));
            }
        }
        Subspace::from_spanning(self.dim, vectors)
    }

    /// Smallest ideal containing `s`: iterate `s <- s + [g, s]`.
    pub fn ideal_closure(&self, s: &Subspace) -> Subspace {
        let full = Subspace::full(self.dim);
        let mut current = s.clone();
        loop {
            let next = current.sum(&self.bracket_span(&full, &current));
            if next.dim() == current.dim() {
                return current;
            }
            current = next;
        }
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.contains(&self.bracket_span(&Subspace::full(self.dim), s))
    }

    /// Kernel of the joint adjoint action.
    pub fn center(&self) -> Subspace {
        self.centralizer_of(&Subspace::full(self.dim))
    }

    /// `{x in g : [x, s] = 0}`.
    pub fn centralizer_of(&self, s: &Subspace) -> Subspace {
        // Rows indexed by (basis vector of s, output coordinate k); columns
        // by the coordinates of x.
        let mut red = RowReducer::new(self.dim);
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for y in s.basis() {
            let mut per_k = vec![vec![Scalar::zero(); self.dim]; self.dim];
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for i in 0..self.dim {
                    for k in 0..self.dim {
                        let cijk = self.structure_constant(i, j, k);
                        if !cijk.is_zero() {
                            per_k[k][i] = &per_k[k][i] + &(yj * cijk);
                        }
                    }
                }
            }
            rows.extend(per_k);
        }
        for row in rows {
            red.add_rational_row(&row);
        }
        Subspace::from_spanning(self.dim, red.kernel_basis())
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.bracket_span(&full, &full)
    }

    /// D^0 = s, D^{i+1} = [D^i, D^i], listed until stabilization.
    pub fn derived_series_of(&self, s: &Subspace) -> Vec<Subspace> {
        let mut series = vec![s.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_span(last, last);
            if next.dim() == last.dim() {
                return series;
            }
            series.push(next);
        }
    }

    /// C^0 = s, C^{i+1} = [s, C^i], listed until stabilization.
    pub fn lower_central_series_of(&self, s: &Subspace) -> Vec<Subspace> {
        let mut series = vec![s.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_span(s, last);
            if next.dim() == last.dim() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn derived_series(&self) -> Vec<Subspace> {
        self.derived_series_of(&Subspace::full(self.dim))
    }

    pub fn lower_central_series(&self) -> Vec<Subspace> {
        self.lower_central_series_of(&Subspace::full(self.dim))
    }

    pub fn is_solvable_subspace(&self, s: &Subspace) -> bool {
        self.derived_series_of(s).last().unwrap().dim() == 0
    }

    pub fn is_solvable(&self) -> bool {
        self.is_solvable_subspace(&Subspace::full(self.dim))
    }

    pub fn is_nilpotent_algebra(&self) -> bool {
        self.lower_central_series().last().unwrap().dim() == 0
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    /// Gram matrix `K(e_i, e_j) = trace(ad e_i ad e_j)`.
    pub fn killing_form(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        Matrix::from_fn(self.dim, self.dim, |i, j| {
            let mut acc = Scalar::zero();
            for a in 0..self.dim {
                for b in 0..self.dim {
                    let left = ads[i].at(a, b);
                    if !left.is_zero() {
                        let right = ads[j].at(b, a);
                        if !right.is_zero() {
                            acc = acc + left * right;
                        }
                    }
                }
            }
            acc
        })
    }

    /// Killing form of g restricted to a subspace, as a Gram matrix in the
    /// subspace basis.
    pub fn killing_on(&self, s: &Subspace) -> Matrix {
        let killing = self.killing_form();
        let basis = s.basis();
        Matrix::from_fn(s.dim(), s.dim(), |i, j| {
            let kv = killing.mul_vec(&basis[j]);
            basis[i]
                .iter()
                .zip(&kv)
                .map(|(a, b)| a * b)
                .sum()
        })
    }

    pub fn is_semisimple(&self) -> bool {
        self.dim > 0 && self.killing_form().rank() == self.dim
    }

    /// The solvable radical, computed as the Killing-orthogonal of the
    /// derived subalgebra; checked to be a solvable ideal.
    pub fn radical(&self) -> Subspace {
        let killing = self.killing_form();
        let derived = self.derived_subalgebra();
        let mut red = RowReducer::new(self.dim);
        for v in derived.basis() {
            red.add_rational_row(&killing.mul_vec(v));
        }
        let rad = Subspace::from_spanning(self.dim, red.kernel_basis());
        assert!(
            self.is_ideal(&rad),
            "radical computation produced a non-ideal (kernel bug)"
        );
        assert!(
            self.is_solvable_subspace(&rad),
            "radical computation produced a non-solvable subspace (kernel bug)"
        );
        rad
    }

    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let dim = self.dim + other.dim;
        let mut labels = self.labels.clone();
        let clash = other.labels.iter().any(|l| labels.contains(l));
        for l in &other.labels {
            labels.push(if clash { format!("{l}'") } else { l.clone() });
        }
        let mut c = vec![Scalar::zero(); dim * dim * dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    c[(i * dim + j) * dim + k] = self.structure_constant(i, j, k).clone();
                }
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                for k in 0..other.dim {
                    c[((self.dim + i) * dim + self.dim + j) * dim + self.dim + k] =
                        other.structure_constant(i, j, k).clone();
                }
            }
        }
        LieAlgebra {
            name: format!("{}+{}", self.name, other.name),
            dim,
            labels,
            c,
        }
    }

    /// Structure constants of the bracket restricted to a subspace, if the
    /// subspace is closed under the bracket.
    pub fn subalgebra_structure(&self, s: &Subspace) -> Option<LieAlgebra> {
        let d = s.dim();
        let mut c = vec![Scalar::zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                if i == j {
                    continue;
                }
                let br = self.bracket(&s.basis()[i], &s.basis()[j]);
                let coords = s.coordinates(&br)?;
                for (k, v) in coords.into_iter().enumerate() {
                    c[(i * d + j) * d + k] = v;
                }
            }
        }
        Some(LieAlgebra {
            name: format!("{}|sub", self.name),
            dim: d,
            labels: LieAlgebra::numbered_labels("s", d),
            c,
        })
    }

    /// Quotient by an ideal: basis given by the coordinates outside the
    /// ideal's pivot set, brackets projected modulo the ideal.
    pub fn quotient_structure(&self, ideal: &Subspace) -> LieAlgebra {
        assert!(self.is_ideal(ideal), "quotient requires an ideal");
        let complement: Vec<usize> = (0..self.dim)
            .filter(|j| !ideal.pivot_columns().contains(j))
            .collect();
        let d = complement.len();
        assert_eq!(d, self.dim - ideal.dim());
        let mut c = vec![Scalar::zero(); d * d * d];
        for (qi, &i) in complement.iter().enumerate() {
            for (qj, &j) in complement.iter().enumerate() {
                if qi == qj {
                    continue;
                }
                let reduced = ideal.reduce(self.bracket_basis(i, j));
                for (qk, &k) in complement.iter().enumerate() {
                    c[(qi * d + qj) * d + qk] = reduced[k].clone();
                }
            }
        }
        LieAlgebra {
            name: format!("{}/ideal", self.name),
            dim: d,
            labels: complement
                .iter()
                .map(|&k| self.labels[k].clone())
                .collect(),
            c,
        }
    }
}

pub fn basis_vector(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = num::One::one();
    v
}

/// Split sl2 with basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
pub fn sl2_split() -> LieAlgebra {
    use crate::scalar::s_int;
    LieAlgebra::from_brackets(
        "sl2",
        vec!["e".into(), "h".into(), "f".into()],
        &[
            (0, 1, vec![(0, s_int(-2))]),
            (0, 2, vec![(1, s_int(1))]),
            (1, 2, vec![(2, s_int(-2))]),
        ],
    )
}

/// Compact su2 with basis (x, y, z): [x,y] = 2z, [y,z] = 2x, [z,x] = 2y.
pub fn su2_compact() -> LieAlgebra {
    use crate::scalar::s_int;
    LieAlgebra::from_brackets(
        "su2",
        vec!["x".into(), "y".into(), "z".into()],
        &[
            (0, 1, vec![(2, s_int(2))]),
            (0, 2, vec![(1, s_int(-2))]),
            (1, 2, vec![(0, s_int(2))]),
        ],
    )
}
