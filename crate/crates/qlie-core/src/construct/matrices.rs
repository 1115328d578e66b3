//! Matrix models: complex matrices with exact rational parts, their
//! realifications, and bases for the classical algebras appearing in
//! the catalogue.

use super::{algebra_from_matrix_basis, ConstructError};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use num::{One, Zero};

/// A complex matrix split into real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMatrix {
    pub re: Matrix,
    pub im: Matrix,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            re: Matrix::zeros(rows, cols),
            im: Matrix::zeros(rows, cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        CMatrix {
            re: Matrix::identity(n),
            im: Matrix::zeros(n, n),
        }
    }

    pub fn from_re(re: Matrix) -> Self {
        let im = Matrix::zeros(re.rows(), re.cols());
        CMatrix { re, im }
    }

    pub fn rows(&self) -> usize {
        self.re.rows()
    }

    pub fn cols(&self) -> usize {
        self.re.cols()
    }

    pub fn add(&self, other: &Self) -> Self {
        CMatrix {
            re: self.re.add(&other.re),
            im: self.im.add(&other.im),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        CMatrix {
            re: self.re.sub(&other.re),
            im: self.im.sub(&other.im),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        CMatrix {
            re: self.re.mul(&other.re).sub(&self.im.mul(&other.im)),
            im: self.re.mul(&other.im).add(&self.im.mul(&other.re)),
        }
    }

    /// Multiplication by the complex scalar `re + i im`.
    pub fn scale_complex(&self, re: &Scalar, im: &Scalar) -> Self {
        CMatrix {
            re: self.re.scale(re).sub(&self.im.scale(im)),
            im: self.re.scale(im).add(&self.im.scale(re)),
        }
    }

    /// Multiplication by the imaginary unit.
    pub fn times_i(&self) -> Self {
        CMatrix {
            re: self.im.scale(&-Scalar::one()),
            im: self.re.clone(),
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn conj_transpose(&self) -> Self {
        CMatrix {
            re: self.re.transpose(),
            im: self.im.transpose().scale(&-Scalar::one()),
        }
    }

    pub fn trace(&self) -> (Scalar, Scalar) {
        (self.re.trace(), self.im.trace())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Subtracts the scalar multiple of the identity carrying the trace,
    /// leaving the traceless part.
    pub fn traceless_part(&self) -> Self {
        let n = self.rows();
        let (tr_re, tr_im) = self.trace();
        let d = Scalar::from_integer(n.try_into().unwrap());
        self.sub(&CMatrix::identity(n).scale_complex(&(tr_re / &d), &(tr_im / &d)))
    }

    /// The real matrix of this map acting on realified coordinates,
    /// where the complex coordinate `k` becomes the real pair `(2k, 2k+1)`
    /// holding real and imaginary parts.
    pub fn realify_interleaved(&self) -> Matrix {
        Matrix::from_fn(2 * self.rows(), 2 * self.cols(), |r, c| {
            let (j, rp) = (r / 2, r % 2);
            let (k, cp) = (c / 2, c % 2);
            match (rp, cp) {
                (0, 0) | (1, 1) => self.re.at(j, k).clone(),
                (0, 1) => -self.im.at(j, k),
                (1, 0) => self.im.at(j, k).clone(),
                _ => unreachable!(),
            }
        })
    }
}

/// Gram matrix of the complex trace form on a complex matrix basis;
/// panics if any pairing fails to be real.
pub fn complex_trace_gram(mats: &[CMatrix]) -> Matrix {
    Matrix::from_fn(mats.len(), mats.len(), |i, j| {
        let (re, im) = mats[i].mul(&mats[j]).trace();
        assert!(im.is_zero(), "trace pairing must be real");
        re
    })
}

fn c_entry(rows: usize, cols: usize, i: usize, j: usize, re: i64, im: i64) -> CMatrix {
    let mut m = CMatrix::zeros(rows, cols);
    *m.re.at_mut(i, j) = Scalar::from_integer(re.into());
    *m.im.at_mut(i, j) = Scalar::from_integer(im.into());
    m
}

/// The compact rank-one basis (x, y, z) as two-by-two complex matrices,
/// with brackets [x, y] = 2z, [y, z] = 2x, [z, x] = 2y.
pub fn su2_matrices() -> [CMatrix; 3] {
    let n = 2;
    let x = c_entry(n, n, 0, 0, 0, 1).add(&c_entry(n, n, 1, 1, 0, -1));
    let y = c_entry(n, n, 0, 1, 1, 0).add(&c_entry(n, n, 1, 0, -1, 0));
    let z = c_entry(n, n, 0, 1, 0, 1).add(&c_entry(n, n, 1, 0, 0, 1));
    [x, y, z]
}

/// The split rank-one basis (e, h, f) as two-by-two matrices.
pub fn sl2_matrices() -> [CMatrix; 3] {
    let n = 2;
    [
        c_entry(n, n, 0, 1, 1, 0),
        c_entry(n, n, 0, 0, 1, 0).add(&c_entry(n, n, 1, 1, -1, 0)),
        c_entry(n, n, 1, 0, 1, 0),
    ]
}

/// Realified action of the compact basis on the plane, in interleaved
/// coordinates; the module is irreducible of dimension four over the
/// reals.
pub fn plane_action() -> [Matrix; 3] {
    let [x, y, z] = su2_matrices();
    [
        x.realify_interleaved(),
        y.realify_interleaved(),
        z.realify_interleaved(),
    ]
}

/// Scalar product on the realified plane: twice the real part of the
/// hermitian form, positive definite.
pub fn plane_form() -> Matrix {
    Matrix::identity(4).scale(&Scalar::from_integer(2.into()))
}

/// Realified multiplication by the imaginary unit on the plane.
pub fn multiplication_by_i() -> Matrix {
    CMatrix::identity(2).times_i().realify_interleaved()
}

/// The pairing of two realified plane vectors against the hermitian
/// form: the complex matrix sending w to h(w, v) u - h(w, u) v. It is
/// skew-hermitian but not traceless in general.
pub fn plane_pairing(u: &[Scalar], v: &[Scalar]) -> CMatrix {
    assert_eq!(u.len(), 4);
    assert_eq!(v.len(), 4);
    let comp = |w: &[Scalar], j: usize| (w[2 * j].clone(), w[2 * j + 1].clone());
    let mut m = CMatrix::zeros(2, 2);
    for j in 0..2 {
        let (ure, uim) = comp(u, j);
        let (vre, vim) = comp(v, j);
        for k in 0..2 {
            // conj(v_k) u_j - conj(u_k) v_j
            let (cvre, cvim) = comp(v, k);
            let (cure, cuim) = comp(u, k);
            *m.re.at_mut(j, k) = &cvre * &ure + &cvim * &uim - (&cure * &vre + &cuim * &vim);
            *m.im.at_mut(j, k) = &cvre * &uim - &cvim * &ure - (&cure * &vim - &cuim * &vre);
        }
    }
    m
}

/// Coordinates of the traceless part of the plane pairing in the
/// compact basis, as a real bilinear expression in the two vectors.
pub fn traceless_pairing_coords(u: &[Scalar], v: &[Scalar]) -> [Scalar; 3] {
    let acts = plane_action();
    // c_s = u^T rho_s v, equivalent to -B_W(rho_s u, v) / 2.
    let coord = |s: &Matrix| {
        let sv = s.mul_vec(&v.to_vec());
        u.iter().zip(sv.iter()).map(|(a, b)| a * b).sum()
    };
    [coord(&acts[0]), coord(&acts[1]), coord(&acts[2])]
}

/// Expresses a complex two-by-two matrix in the compact basis with real
/// coordinates, if possible.
pub fn su2_coordinates(m: &CMatrix) -> Option<[Scalar; 3]> {
    let c1 = m.im.at(0, 0).clone();
    let c2 = m.re.at(0, 1).clone();
    let c3 = m.im.at(0, 1).clone();
    let [x, y, z] = su2_matrices();
    let rebuilt = x
        .scale_complex(&c1, &Scalar::zero())
        .add(&y.scale_complex(&c2, &Scalar::zero()))
        .add(&z.scale_complex(&c3, &Scalar::zero()));
    if rebuilt == *m {
        Some([c1, c2, c3])
    } else {
        None
    }
}

fn real_entry(n: usize, i: usize, j: usize, v: i64) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    *m.at_mut(i, j) = Scalar::from_integer(v.into());
    m
}

/// Traceless three-by-three matrices with the trace form.
pub fn special_linear_3() -> Result<(LieAlgebra, Matrix), ConstructError> {
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2), (1, 0), (2, 0), (2, 1)] {
        mats.push(real_entry(3, i, j, 1));
        labels.push(format!("e{}{}", i + 1, j + 1));
    }
    mats.push(real_entry(3, 0, 0, 1).add(&real_entry(3, 1, 1, -1)));
    labels.push("h1".into());
    mats.push(real_entry(3, 1, 1, 1).add(&real_entry(3, 2, 2, -1)));
    labels.push("h2".into());
    let gram = super::trace_form_gram(&mats);
    Ok((algebra_from_matrix_basis("sl3", labels, &mats)?, gram))
}

/// The rank-two symplectic algebra: matrices preserving the standard
/// skew form on four-dimensional space, with the trace form.
pub fn symplectic_4() -> Result<(LieAlgebra, Matrix), ConstructError> {
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    // Block form [[A, B], [C, -A^T]] with B and C symmetric.
    for i in 0..2 {
        for j in 0..2 {
            mats.push(real_entry(4, i, j, 1).add(&real_entry(4, 2 + j, 2 + i, -1)));
            labels.push(format!("a{}{}", i + 1, j + 1));
        }
    }
    for (i, j) in [(0, 0), (0, 1), (1, 1)] {
        let mut b = real_entry(4, i, 2 + j, 1);
        if i != j {
            b = b.add(&real_entry(4, j, 2 + i, 1));
        }
        mats.push(b);
        labels.push(format!("b{}{}", i + 1, j + 1));
        let mut c = real_entry(4, 2 + i, j, 1);
        if i != j {
            c = c.add(&real_entry(4, 2 + j, i, 1));
        }
        mats.push(c);
        labels.push(format!("c{}{}", i + 1, j + 1));
    }
    let gram = super::trace_form_gram(&mats);
    Ok((algebra_from_matrix_basis("sp4", labels, &mats)?, gram))
}

/// The orthogonal algebra of a diagonal form with the given signs, with
/// the trace form.
pub fn orthogonal_algebra(
    name: &str,
    signs: &[i64],
) -> Result<(LieAlgebra, Matrix), ConstructError> {
    let n = signs.len();
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            // g_j E_ij - g_i E_ji solves X^T G + G X = 0.
            mats.push(real_entry(n, i, j, signs[j]).add(&real_entry(n, j, i, -signs[i])));
            labels.push(format!("m{}{}", i + 1, j + 1));
        }
    }
    let gram = super::trace_form_gram(&mats);
    Ok((algebra_from_matrix_basis(name, labels, &mats)?, gram))
}

/// Realified basis of the traceless skew-hermitian matrices for the
/// hermitian form with the given diagonal signs, with the trace form of
/// the realification.
pub fn special_unitary_3(
    name: &str,
    signs: &[i64; 3],
) -> Result<(LieAlgebra, Matrix), ConstructError> {
    let mut cmats = Vec::new();
    let mut labels = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            if signs[i] * signs[j] == 1 {
                cmats.push(c_entry(3, 3, i, j, 1, 0).add(&c_entry(3, 3, j, i, -1, 0)));
                cmats.push(c_entry(3, 3, i, j, 0, 1).add(&c_entry(3, 3, j, i, 0, 1)));
            } else {
                cmats.push(c_entry(3, 3, i, j, 1, 0).add(&c_entry(3, 3, j, i, 1, 0)));
                cmats.push(c_entry(3, 3, i, j, 0, 1).add(&c_entry(3, 3, j, i, 0, -1)));
            }
            labels.push(format!("u{}{}", i + 1, j + 1));
            labels.push(format!("v{}{}", i + 1, j + 1));
        }
    }
    cmats.push(c_entry(3, 3, 0, 0, 0, 1).add(&c_entry(3, 3, 1, 1, 0, -1)));
    labels.push("t1".into());
    cmats.push(c_entry(3, 3, 1, 1, 0, 1).add(&c_entry(3, 3, 2, 2, 0, -1)));
    labels.push("t2".into());
    let mats: Vec<Matrix> = cmats.iter().map(CMatrix::realify_interleaved).collect();
    let gram = super::trace_form_gram(&mats);
    Ok((algebra_from_matrix_basis(name, labels, &mats)?, gram))
}

/// The complex rank-one algebra viewed as a real algebra of dimension
/// six, on the realified basis (e, h, f, ie, ih, if), with the real part
/// of the complex trace form.
pub fn complex_sl2_as_real() -> Result<(LieAlgebra, Matrix), ConstructError> {
    let [e, h, f] = sl2_matrices();
    let cmats = [
        e.clone(),
        h.clone(),
        f.clone(),
        e.times_i(),
        h.times_i(),
        f.times_i(),
    ];
    let labels: Vec<String> = ["e", "h", "f", "ie", "ih", "if"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let mats: Vec<Matrix> = cmats.iter().map(CMatrix::realify_interleaved).collect();
    // The realified trace form is twice the real part of the complex
    // trace form; use the real part itself.
    let gram = Matrix::from_fn(6, 6, |i, j| {
        let (re, _) = cmats[i].mul(&cmats[j]).trace();
        re
    });
    Ok((algebra_from_matrix_basis("sl2c", labels, &mats)?, gram))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{basis_vector, su2_compact};
    use crate::scalar::s_int;

    #[test]
    fn compact_matrices_match_the_structure_constants() {
        let [x, y, z] = su2_matrices();
        assert_eq!(x.commutator(&y), z.scale_complex(&s_int(2), &Scalar::zero()));
        assert_eq!(y.commutator(&z), x.scale_complex(&s_int(2), &Scalar::zero()));
        assert_eq!(z.commutator(&x), y.scale_complex(&s_int(2), &Scalar::zero()));
        let gram = complex_trace_gram(&su2_matrices());
        assert_eq!(gram, Matrix::identity(3).scale(&s_int(-2)));
    }

    #[test]
    fn realified_plane_action_represents_the_compact_algebra() {
        let su2 = su2_compact();
        let acts = plane_action();
        for i in 0..3 {
            for j in i + 1..3 {
                let comm = acts[i].mul(&acts[j]).sub(&acts[j].mul(&acts[i]));
                let mut expected = Matrix::zeros(4, 4);
                for k in 0..3 {
                    let c = su2.structure_constant(i, j, k);
                    if !c.is_zero() {
                        expected = expected.add(&acts[k].scale(c));
                    }
                }
                assert_eq!(comm, expected);
            }
        }
        // Skew for the plane form, which is a multiple of the identity.
        for a in &acts {
            assert!(a.add(&a.transpose()).is_zero());
        }
    }

    #[test]
    fn pairing_is_skew_hermitian_and_satisfies_the_trace_identity() {
        let acts = plane_action();
        let bw = plane_form();
        for ui in 0..4 {
            for vi in 0..4 {
                let u = basis_vector(4, ui);
                let v = basis_vector(4, vi);
                let gamma = plane_pairing(&u, &v);
                assert!(gamma.add(&gamma.conj_transpose()).is_zero());
                let g0 = gamma.traceless_part();
                let coords = su2_coordinates(&g0).expect("traceless part lies in the span");
                assert_eq!(coords, traceless_pairing_coords(&u, &v));
                // trace(s gamma0) = B_W(s u, v) for traceless s.
                let bw_v = bw.mul_vec(&v);
                for (s, rho) in su2_matrices().iter().zip(acts.iter()) {
                    let (re, im) = s.mul(&g0).trace();
                    assert!(im.is_zero());
                    let su = rho.mul_vec(&u);
                    let pairing: Scalar = su.iter().zip(bw_v.iter()).map(|(a, b)| a * b).sum();
                    assert_eq!(re, pairing);
                }
            }
        }
    }

    #[test]
    fn classical_algebras_close_and_have_nondegenerate_trace_forms() {
        let cases: Vec<(LieAlgebra, Matrix)> = vec![
            special_linear_3().unwrap(),
            symplectic_4().unwrap(),
            orthogonal_algebra("so5", &[1, 1, 1, 1, 1]).unwrap(),
            orthogonal_algebra("so41", &[1, 1, 1, 1, -1]).unwrap(),
            orthogonal_algebra("so32", &[1, 1, 1, -1, -1]).unwrap(),
            special_unitary_3("su3", &[1, 1, 1]).unwrap(),
            special_unitary_3("su21", &[1, 1, -1]).unwrap(),
            complex_sl2_as_real().unwrap(),
        ];
        for (lie, gram) in &cases {
            assert!(lie.is_lie(), "{} does not close", lie.name());
            assert!(lie.is_semisimple(), "{} is not semisimple", lie.name());
            assert_eq!(gram.rank(), lie.dim(), "{} trace form degenerate", lie.name());
        }
    }

    #[test]
    fn killing_signatures_of_the_real_forms() {
        let expected: Vec<(&str, (usize, usize))> = vec![
            ("so5", (0, 10)),
            ("so41", (4, 6)),
            ("so32", (6, 4)),
            ("su3", (0, 8)),
            ("su21", (4, 4)),
            ("sl3", (5, 3)),
        ];
        for (name, sig) in expected {
            let (lie, _) = match name {
                "so5" => orthogonal_algebra("so5", &[1, 1, 1, 1, 1]).unwrap(),
                "so41" => orthogonal_algebra("so41", &[1, 1, 1, 1, -1]).unwrap(),
                "so32" => orthogonal_algebra("so32", &[1, 1, 1, -1, -1]).unwrap(),
                "su3" => special_unitary_3("su3", &[1, 1, 1]).unwrap(),
                "su21" => special_unitary_3("su21", &[1, 1, -1]).unwrap(),
                "sl3" => special_linear_3().unwrap(),
                _ => unreachable!(),
            };
            assert_eq!(lie.killing_form().signature(), sig, "{name}");
        }
    }

    #[test]
    fn complex_rank_one_realification_has_split_killing_form() {
        let (lie, gram) = complex_sl2_as_real().unwrap();
        assert_eq!(lie.dim(), 6);
        let killing = lie.killing_form();
        assert_eq!(killing.rank(), 6);
        assert_eq!(killing.signature(), (3, 3));
        assert_eq!(gram.at(0, 2), &Scalar::one());
        assert_eq!(gram.at(3, 5), &s_int(-1));
        assert_eq!(gram.at(4, 4), &s_int(-2));
    }
}
