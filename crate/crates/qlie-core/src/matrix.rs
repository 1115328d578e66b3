//! Dense exact matrices, fraction-free elimination, and RREF-canonical
//! subspaces.
//!
//! Matrices are row-major over [`Scalar`]. The elimination engine
//! ([`RowReducer`]) clears denominators and works fraction-free over `BigInt`
//! with per-row content reduction, which keeps entries small on the sparse
//! systems that dominate this crate; results are converted back to reduced
//! rationals.

use crate::scalar::{s_int, Scalar};
use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Integer-entry convenience constructor.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| s_int(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let cur = out.at(i, j) + &(a * b);
                        *out.at_mut(i, j) = cur;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.at(i, i).clone()).sum()
    }

    /// Row-major flattening, used to treat operators as vectors.
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    /// Kronecker product, with the left factor indexing the coarse blocks.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(
            self.rows * other.rows,
            self.cols * other.cols,
            |i, j| self.at(i / other.rows, j / other.cols) * other.at(i % other.rows, j % other.cols),
        )
    }

    pub fn rank(&self) -> usize {
        let mut red = RowReducer::new(self.cols);
        for i in 0..self.rows {
            red.add_rational_row(self.row(i));
        }
        red.rank()
    }

    /// Basis of the right null space `{v : self * v = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut red = RowReducer::new(self.cols);
        for i in 0..self.rows {
            red.add_rational_row(self.row(i));
        }
        red.kernel_basis()
    }

    /// One solution of `self * x = rhs` (column-wise), or `None` if
    /// inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "rhs row count mismatch");
        // Eliminate on [self | rhs]; a pivot inside the rhs block means the
        // system is inconsistent.
        let mut red = RowReducer::new(self.cols + rhs.cols);
        for i in 0..self.rows {
            let mut row = self.row(i).to_vec();
            row.extend_from_slice(rhs.row(i));
            red.add_rational_row(&row);
        }
        let rref = red.rref_rows();
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (pivot, row) in &rref {
            if *pivot >= self.cols {
                return None;
            }
            for j in 0..rhs.cols {
                *x.at_mut(*pivot, j) = row[self.cols + j].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let x = self.solve(&Matrix::identity(self.rows))?;
        if self.mul(&x) == Matrix::identity(self.rows) {
            Some(x)
        } else {
            None
        }
    }

    /// Sylvester signature `(positive, negative)` of a symmetric matrix,
    /// computed by exact symmetric congruence diagonalization. Zero
    /// eigenvalues account for `n - p - q`.
    pub fn signature(&self) -> (usize, usize) {
        assert!(self.is_symmetric(), "signature requires a symmetric matrix");
        let n = self.rows;
        let mut g = self.clone();
        let (mut pos, mut neg) = (0usize, 0usize);
        let mut k = 0;
        while k < n {
            if g.at(k, k).is_zero() {
                // Prefer a later row with nonzero diagonal.
                if let Some(i) = (k + 1..n).find(|&i| !g.at(i, i).is_zero()) {
                    g.swap_symmetric(k, i);
                } else if let Some((i, j)) = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !g.at(i, j).is_zero())
                {
                    // All remaining diagonal entries vanish: fold column j
                    // into i to expose 2*g[i][j] on the diagonal, then move
                    // it up to position k.
                    g.add_symmetric(i, j);
                    g.swap_symmetric(k, i);
                } else {
                    break; // remaining block is zero
                }
            }
            let d = g.at(k, k).clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for i in k + 1..n {
                if g.at(i, k).is_zero() {
                    continue;
                }
                let factor = g.at(i, k) / &d;
                for j in k..n {
                    let v = g.at(i, j) - &(&factor * g.at(k, j));
                    *g.at_mut(i, j) = v;
                }
                for j in k..n {
                    let v = g.at(j, i) - &(&factor * g.at(j, k));
                    *g.at_mut(j, i) = v;
                }
            }
            k += 1;
        }
        (pos, neg)
    }

    fn swap_symmetric(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn add_symmetric(&mut self, dst: usize, src: usize) {
        for j in 0..self.cols {
            let v = self.at(dst, j) + self.at(src, j);
            *self.at_mut(dst, j) = v;
        }
        for i in 0..self.rows {
            let v = self.at(i, dst) + self.at(i, src);
            *self.at_mut(i, dst) = v;
        }
    }

    /// Monic minimal polynomial, coefficients low degree to high.
    /// Found as the first linear dependency among vectorized powers.
    pub fn minimal_polynomial(&self) -> Vec<Scalar> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return vec![Scalar::one()];
        }
        let max_deg = n + 1;
        let mut red = RowReducer::new(n * n + max_deg + 1);
        let mut power = Matrix::identity(n);
        for deg in 0..=max_deg {
            let mut row = power.vectorize();
            row.resize(n * n + max_deg + 1, Scalar::zero());
            row[n * n + deg] = Scalar::one();
            red.add_rational_row(&row);
            // A dependency appears exactly when some pivot lands inside the
            // augmented block; the augmented part of that row records the
            // dependency coefficients, with the top-degree one nonzero.
            if red.max_pivot().is_some_and(|p| p >= n * n) {
                let (_, row) = red
                    .rref_rows()
                    .into_iter()
                    .find(|(p, _)| *p >= n * n)
                    .unwrap();
                let mut coeffs: Vec<Scalar> = row[n * n..n * n + deg + 1].to_vec();
                let lead = coeffs.last().unwrap().clone();
                assert!(!lead.is_zero());
                for c in &mut coeffs {
                    *c = &*c / &lead;
                }
                return coeffs;
            }
            power = power.mul(self);
        }
        unreachable!("minimal polynomial degree exceeds dimension bound");
    }

    /// `p(self)` for coefficients low degree to high.
    pub fn eval_poly(&self, coeffs: &[Scalar]) -> Matrix {
        assert!(self.is_square());
        let n = self.rows;
        let mut out = Matrix::zeros(n, n);
        for c in coeffs.iter().rev() {
            out = out.mul(self);
            for i in 0..n {
                let v = out.at(i, i) + c;
                *out.at_mut(i, i) = v;
            }
        }
        out
    }

    /// Eigenspaces for every rational eigenvalue, sorted by eigenvalue.
    /// Rational eigenvalues are found as rational roots of the minimal
    /// polynomial.
    pub fn rational_eigenspaces(&self) -> Vec<(Scalar, Vec<Vec<Scalar>>)> {
        let minpoly = self.minimal_polynomial();
        let mut out = Vec::new();
        for root in rational_roots(&minpoly) {
            let mut shifted = self.clone();
            for i in 0..self.rows {
                let v = shifted.at(i, i) - &root;
                *shifted.at_mut(i, i) = v;
            }
            let basis = shifted.kernel_basis();
            debug_assert!(!basis.is_empty());
            out.push((root, basis));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// True iff the minimal polynomial is a power of X.
    pub fn is_nilpotent_op(&self) -> bool {
        let minpoly = self.minimal_polynomial();
        minpoly[..minpoly.len() - 1].iter().all(Scalar::is_zero)
    }
}

/// Evaluates a polynomial (coefficients low to high) at a scalar.
pub fn eval_poly_scalar(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in coeffs.iter().rev() {
        acc = &acc * x + c;
    }
    acc
}

/// All rational roots of a rational-coefficient polynomial, via the
/// rational-root bound on the denominator-cleared polynomial.
pub fn rational_roots(coeffs: &[Scalar]) -> Vec<Scalar> {
    let deg = match coeffs.iter().rposition(|c| !c.is_zero()) {
        Some(d) => d,
        None => return Vec::new(), // zero polynomial: treated as rootless
    };
    if deg == 0 {
        return Vec::new();
    }
    // Clear denominators.
    let denom_lcm = coeffs[..=deg]
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs[..=deg]
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let mut roots = Vec::new();
    // Strip trailing zero coefficients: X | p means 0 is a root.
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.push(Scalar::zero());
    }
    if low == deg {
        return roots;
    }
    let constant = ints[low].abs();
    let leading = ints[deg].abs();
    for p in divisors(&constant) {
        for q in divisors(&leading) {
            for candidate in [
                Scalar::new(p.clone(), q.clone()),
                Scalar::new(-p.clone(), q.clone()),
            ] {
                if !roots.contains(&candidate)
                    && eval_poly_scalar(coeffs, &candidate).is_zero()
                {
                    roots.push(candidate);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    assert!(n.is_positive());
    let mut out = Vec::new();
    let mut d = BigInt::one();
    loop {
        let d_sq = &d * &d;
        if d_sq > *n {
            break;
        }
        if (n % &d).is_zero() {
            out.push(d.clone());
            let other = n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += BigInt::one();
    }
    out.sort();
    out
}

/// Incremental fraction-free row echelon over cleared-denominator integer
/// rows. Rows are kept content-reduced with positive leading entry.
pub struct RowReducer {
    cols: usize,
    /// (pivot column, row), sorted by pivot column.
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        RowReducer {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Largest pivot column so far, if any row is nonzero.
    pub fn max_pivot(&self) -> Option<usize> {
        self.rows.last().map(|(pc, _)| *pc)
    }

    /// Adds a rational row (denominators cleared internally). Returns true
    /// if the rank increased.
    pub fn add_rational_row(&mut self, row: &[Scalar]) -> bool {
        assert_eq!(row.len(), self.cols);
        let denom_lcm = row
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = row
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        self.add_int_row(ints)
    }

    pub fn add_int_row(&mut self, mut row: Vec<BigInt>) -> bool {
        assert_eq!(row.len(), self.cols);
        for (pc, prow) in &self.rows {
            if row[*pc].is_zero() {
                continue;
            }
            // Fraction-free combine: row <- pivot*row - coeff*prow.
            let pivot = prow[*pc].clone();
            let coeff = row[*pc].clone();
            for j in 0..self.cols {
                let v = &row[j] * &pivot - &coeff * &prow[j];
                row[j] = v;
            }
            reduce_content(&mut row);
        }
        match row.iter().position(|v| !v.is_zero()) {
            None => false,
            Some(pc) => {
                if row[pc].is_negative() {
                    for v in &mut row {
                        *v = -std::mem::take(v);
                    }
                }
                let idx = self
                    .rows
                    .binary_search_by_key(&pc, |(c, _)| *c)
                    .unwrap_err();
                self.rows.insert(idx, (pc, row));
                true
            }
        }
    }

    /// Fully reduced rational rows (pivot entries 1, zeros above pivots),
    /// sorted by pivot column.
    pub fn rref_rows(&self) -> Vec<(usize, Vec<Scalar>)> {
        let mut out: Vec<(usize, Vec<Scalar>)> = self
            .rows
            .iter()
            .map(|(pc, row)| {
                let pivot = &row[*pc];
                (
                    *pc,
                    row.iter()
                        .map(|v| Scalar::new(v.clone(), pivot.clone()))
                        .collect(),
                )
            })
            .collect();
        // Back-substitute bottom-up.
        for i in (0..out.len()).rev() {
            for upper in 0..i {
                let (pc, _) = out[i];
                let factor = out[upper].1[pc].clone();
                if factor.is_zero() {
                    continue;
                }
                let lower = out[i].1.clone();
                for j in 0..self.cols {
                    if !lower[j].is_zero() {
                        let v = &out[upper].1[j] - &(&factor * &lower[j]);
                        out[upper].1[j] = v;
                    }
                }
            }
        }
        out
    }

    /// Basis of `{v : M v = 0}` where M has the added rows.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let rref = self.rref_rows();
        let pivot_cols: Vec<usize> = rref.iter().map(|(pc, _)| *pc).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.binary_search(&free).is_ok() {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (pc, row) in &rref {
                v[*pc] = -row[free].clone();
            }
            basis.push(v);
        }
        basis
    }
}

fn reduce_content(row: &mut [BigInt]) {
    let mut content = BigInt::zero();
    for v in row.iter() {
        if !v.is_zero() {
            content = content.gcd(v);
            if content.is_one() {
                return;
            }
        }
    }
    if content.is_zero() || content.is_one() {
        return;
    }
    for v in row.iter_mut() {
        *v = &*v / &content;
    }
}

/// A linear subspace in RREF-canonical form: equal subspaces have equal
/// representations, so `PartialEq` is semantic equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    /// Reduced rows sorted by pivot column; pivot entries are 1 with zeros
    /// above and below.
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_spanning(
            ambient,
            (0..ambient).map(|i| {
                let mut v = vec![Scalar::zero(); ambient];
                v[i] = Scalar::one();
                v
            }),
        )
    }

    pub fn from_spanning(
        ambient: usize,
        vectors: impl IntoIterator<Item = Vec<Scalar>>,
    ) -> Self {
        let mut red = RowReducer::new(ambient);
        for v in vectors {
            red.add_rational_row(&v);
        }
        let rref = red.rref_rows();
        Subspace {
            ambient,
            pivots: rref.iter().map(|(pc, _)| *pc).collect(),
            rows: rref.into_iter().map(|(_, row)| row).collect(),
        }
    }

    pub fn from_matrix_rows(m: &Matrix) -> Self {
        Subspace::from_spanning(m.cols(), m.row_vecs())
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Pivot coordinates of the canonical basis, one per basis row.
    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        if self.rows.is_empty() {
            Matrix::zeros(0, self.ambient)
        } else {
            Matrix::from_rows(self.rows.clone())
        }
    }

    /// Residual of `v` after reduction modulo this subspace; zero iff
    /// `v` is contained.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        for (row, pc) in self.rows.iter().zip(&self.pivots) {
            if v[*pc].is_zero() {
                continue;
            }
            let factor = v[*pc].clone();
            for j in 0..self.ambient {
                if !row[j].is_zero() {
                    let val = &v[j] - &(&factor * &row[j]);
                    v[j] = val;
                }
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(Scalar::is_zero)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_spanning(
            self.ambient,
            self.rows.iter().chain(&other.rows).cloned(),
        )
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        // (a, b) with Uᵀa = Wᵀb span the intersection via Uᵀa.
        let k = self.dim();
        let m = other.dim();
        if k == 0 || m == 0 {
            return Subspace::zero(self.ambient);
        }
        let stacked = Matrix::from_fn(self.ambient, k + m, |i, j| {
            if j < k {
                self.rows[j][i].clone()
            } else {
                -other.rows[j - k][i].clone()
            }
        });
        let vectors = stacked.kernel_basis().into_iter().map(|ab| {
            let mut v = vec![Scalar::zero(); self.ambient];
            for (idx, coeff) in ab[..k].iter().enumerate() {
                if !coeff.is_zero() {
                    for j in 0..self.ambient {
                        let val = &v[j] + &(coeff * &self.rows[idx][j]);
                        v[j] = val;
                    }
                }
            }
            v
        });
        Subspace::from_spanning(self.ambient, vectors)
    }

    /// Coordinates of `v` in this subspace's basis, if contained.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<Scalar> = self.pivots.iter().map(|pc| v[*pc].clone()).collect();
        let mut check = vec![Scalar::zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.rows) {
            for j in 0..self.ambient {
                if !row[j].is_zero() {
                    let val = &check[j] + &(c * &row[j]);
                    check[j] = val;
                }
            }
        }
        if check == v { Some(coords) } else { None }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::s_ratio;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_int_rows(rows)
    }

    #[test]
    fn rank_and_kernel_dimensions() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let kernel = a.kernel_basis();
        assert_eq!(kernel.len(), 1);
        for v in &kernel {
            assert!(a.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn empty_shapes() {
        assert_eq!(Matrix::zeros(0, 4).rank(), 0);
        assert_eq!(Matrix::zeros(0, 4).kernel_basis().len(), 4);
        assert_eq!(Matrix::zeros(4, 0).rank(), 0);
        assert_eq!(Matrix::zeros(4, 0).kernel_basis().len(), 0);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let rhs = m(&[&[3], &[1]]);
        let x = a.solve(&rhs).unwrap();
        assert_eq!(a.mul(&x), rhs);

        let singular = m(&[&[1, 1], &[2, 2]]);
        assert!(singular.solve(&m(&[&[1], &[3]])).is_none());
        // Consistent singular system still solves.
        let x = singular.solve(&m(&[&[1], &[2]])).unwrap();
        assert_eq!(singular.mul(&x), m(&[&[1], &[2]]));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn signature_of_diagonal_and_hyperbolic() {
        assert_eq!(m(&[&[2, 0], &[0, -3]]).signature(), (1, 1));
        // Hyperbolic plane: zero diagonal, off-diagonal pairing.
        assert_eq!(m(&[&[0, 1], &[1, 0]]).signature(), (1, 1));
        assert_eq!(Matrix::zeros(3, 3).signature(), (0, 0));
        let degenerate = m(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, -1]]);
        assert_eq!(degenerate.signature(), (1, 1));
    }

    #[test]
    fn signature_invariant_under_congruence() {
        let g = m(&[&[1, 0, 0], &[0, -2, 0], &[0, 0, 5]]);
        let p = m(&[&[1, 2, 0], &[0, 1, 3], &[1, 0, 1]]);
        assert!(p.inverse().is_some());
        let congruent = p.transpose().mul(&g).mul(&p);
        assert_eq!(congruent.signature(), g.signature());
    }

    #[test]
    fn minimal_polynomial_annihilates_and_is_minimal() {
        // Nilpotent Jordan block: minpoly X^3.
        let jordan = m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let mp = jordan.minimal_polynomial();
        assert_eq!(mp.len(), 4);
        assert!(mp[..3].iter().all(Scalar::is_zero));
        assert!(jordan.is_nilpotent_op());

        // Projection: minpoly X^2 - X.
        let proj = m(&[&[1, 0], &[0, 0]]);
        assert_eq!(
            proj.minimal_polynomial(),
            vec![s_int(0), s_int(-1), s_int(1)]
        );
        assert!(!proj.is_nilpotent_op());

        // Identity-like: scalar matrix has degree-1 minpoly.
        let two = m(&[&[2, 0], &[0, 2]]);
        assert_eq!(two.minimal_polynomial(), vec![s_int(-2), s_int(1)]);

        let generic = m(&[&[1, 2, 0], &[0, 3, 1], &[1, 1, 1]]);
        assert!(generic.eval_poly(&generic.minimal_polynomial()).is_zero());
    }

    #[test]
    fn rational_eigenspaces_of_diagonalizable_matrix() {
        let a = m(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, -1]]);
        let spaces = a.rational_eigenspaces();
        assert_eq!(spaces.len(), 2);
        assert_eq!(spaces[0].0, s_int(-1));
        assert_eq!(spaces[0].1.len(), 1);
        assert_eq!(spaces[1].0, s_int(2));
        assert_eq!(spaces[1].1.len(), 2);
    }

    #[test]
    fn rational_eigenspaces_skip_irrational_part() {
        // X^2 - 2 has no rational roots.
        let a = m(&[&[0, 2], &[1, 0]]);
        assert!(a.rational_eigenspaces().is_empty());
        // Rotation block plus rational eigenvalue 3.
        let b = m(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 3]]);
        let spaces = b.rational_eigenspaces();
        assert_eq!(spaces.len(), 1);
        assert_eq!(spaces[0].0, s_int(3));
    }

    #[test]
    fn rational_roots_with_fractions() {
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3
        let roots = rational_roots(&[s_int(-3), s_int(5), s_int(2)]);
        assert_eq!(roots, vec![s_int(-3), s_ratio(1, 2)]);
        // x^2(x - 1): roots 0, 1.
        let roots = rational_roots(&[s_int(0), s_int(0), s_int(-1), s_int(1)]);
        assert_eq!(roots, vec![s_int(0), s_int(1)]);
    }

    #[test]
    fn subspace_canonical_equality() {
        let u = Subspace::from_spanning(3, vec![vec![s_int(1), s_int(1), s_int(0)]]);
        let w = Subspace::from_spanning(3, vec![vec![s_int(2), s_int(2), s_int(0)]]);
        assert_eq!(u, w);
        assert!(u.contains_vector(&[s_int(-3), s_int(-3), s_int(0)]));
        assert!(!u.contains_vector(&[s_int(1), s_int(0), s_int(0)]));
    }

    #[test]
    fn subspace_sum_and_intersection() {
        let u = Subspace::from_spanning(
            3,
            vec![
                vec![s_int(1), s_int(0), s_int(0)],
                vec![s_int(0), s_int(1), s_int(0)],
            ],
        );
        let w = Subspace::from_spanning(
            3,
            vec![
                vec![s_int(0), s_int(1), s_int(0)],
                vec![s_int(0), s_int(0), s_int(1)],
            ],
        );
        assert_eq!(u.sum(&w).dim(), 3);
        let meet = u.intersection(&w);
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains_vector(&[s_int(0), s_int(5), s_int(0)]));
    }

    #[test]
    fn subspace_coordinates() {
        let u = Subspace::from_spanning(
            3,
            vec![
                vec![s_int(1), s_int(2), s_int(0)],
                vec![s_int(0), s_int(0), s_int(3)],
            ],
        );
        let v = vec![s_int(2), s_int(4), s_int(-1)];
        let coords = u.coordinates(&v).unwrap();
        assert_eq!(coords.len(), 2);
        assert!(u.coordinates(&[s_int(0), s_int(1), s_int(0)]).is_none());
    }
}
