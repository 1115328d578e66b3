//! Assembly of quadratic Lie algebras from Jordan-theoretic data: a
//! unital commutative algebra J acting on a space of pairs T, with a
//! derivation algebra d and pairings tying the three together. Every
//! axiom the assembled bracket and form need is a named condition, so a
//! defective ingredient is reported by the condition it breaks.

use super::block_diag;
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::quad::{FieldMode, QuadraticLieAlgebra};
use crate::scalar::Scalar;
use crate::sl2::{irreducible_action, LeviTriple, TripleKind};
use num::{One, Zero};
use std::fmt;
use thiserror::Error;

/// A named failure of one structure condition.
#[derive(Clone, Debug)]
pub struct ConditionDefect {
    pub condition: &'static str,
    pub detail: String,
}

impl fmt::Display for ConditionDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.condition, self.detail)
    }
}

/// Failure modes of the assembly.
#[derive(Debug, Error)]
pub enum AssembleError {
    #[error("structure conditions fail: {}", format_defects(.0))]
    Conditions(Vec<ConditionDefect>),
    #[error("assembled algebra is defective: {0}")]
    Assembled(String),
}

fn format_defects(defects: &[ConditionDefect]) -> String {
    let shown: Vec<String> = defects.iter().take(3).map(|d| d.to_string()).collect();
    let suffix = if defects.len() > 3 {
        format!(" (+{} more)", defects.len() - 3)
    } else {
        String::new()
    };
    format!("{}{}", shown.join("; "), suffix)
}

/// Ingredients of the assembly. Multiplication tables are flattened
/// with the output index fastest; see the accessor methods for layout.
#[derive(Clone, Debug)]
pub struct JordanData {
    pub name: String,
    pub j_labels: Vec<String>,
    pub t_labels: Vec<String>,
    pub d_labels: Vec<String>,
    /// Commutative product on J: entry `(i*jd + j)*jd + k`.
    pub jordan: Vec<Scalar>,
    /// Coordinates of the unit of J.
    pub unit: Vec<Scalar>,
    /// Action of J on T: entry `(p*td + x)*td + y` is the coefficient
    /// of `t_y` in `a_p` acting on `t_x`.
    pub dot: Vec<Scalar>,
    /// Skew pairing of T into J: entry `(x*td + y)*jd + k`.
    pub angle: Vec<Scalar>,
    /// Symmetric pairing of T into d: entry `(x*td + y)*dd + m`.
    pub littled: Vec<Scalar>,
    /// Inner derivation pairing of J into d: entry `(i*jd + j)*dd + m`.
    pub big_d: Vec<Scalar>,
    /// Action of each d basis element on J.
    pub d_on_j: Vec<Matrix>,
    /// Action of each d basis element on T.
    pub d_on_t: Vec<Matrix>,
    /// Lie bracket of d: entry `(m*dd + p)*dd + q`.
    pub d_bracket: Vec<Scalar>,
    pub b_j: Matrix,
    pub b_t: Matrix,
    pub b_d: Matrix,
}

impl JordanData {
    pub fn j_dim(&self) -> usize {
        self.j_labels.len()
    }

    pub fn t_dim(&self) -> usize {
        self.t_labels.len()
    }

    pub fn d_dim(&self) -> usize {
        self.d_labels.len()
    }

    /// Dimension of the assembled algebra.
    pub fn total_dim(&self) -> usize {
        3 * self.j_dim() + 2 * self.t_dim() + self.d_dim()
    }

    fn jordan_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let jd = self.j_dim();
        &self.jordan[(i * jd + j) * jd..(i * jd + j + 1) * jd]
    }

    fn dot_basis(&self, p: usize, x: usize) -> &[Scalar] {
        let td = self.t_dim();
        &self.dot[(p * td + x) * td..(p * td + x + 1) * td]
    }

    fn angle_basis(&self, x: usize, y: usize) -> &[Scalar] {
        let (jd, td) = (self.j_dim(), self.t_dim());
        &self.angle[(x * td + y) * jd..(x * td + y + 1) * jd]
    }

    fn littled_basis(&self, x: usize, y: usize) -> &[Scalar] {
        let (td, dd) = (self.t_dim(), self.d_dim());
        &self.littled[(x * td + y) * dd..(x * td + y + 1) * dd]
    }

    fn big_d_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let (jd, dd) = (self.j_dim(), self.d_dim());
        &self.big_d[(i * jd + j) * dd..(i * jd + j + 1) * dd]
    }

    fn d_bracket_basis(&self, m: usize, p: usize) -> &[Scalar] {
        let dd = self.d_dim();
        &self.d_bracket[(m * dd + p) * dd..(m * dd + p + 1) * dd]
    }

    /// Product in J of coordinate vectors.
    pub fn jordan_mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        bilinear(a, b, self.j_dim(), |i, j| self.jordan_basis(i, j))
    }

    /// Action of a J vector on a T vector.
    pub fn dot_mul(&self, a: &[Scalar], t: &[Scalar]) -> Vec<Scalar> {
        bilinear(a, t, self.t_dim(), |p, x| self.dot_basis(p, x))
    }

    /// Pairing of two T vectors into J.
    pub fn angle_mul(&self, s: &[Scalar], t: &[Scalar]) -> Vec<Scalar> {
        bilinear(s, t, self.j_dim(), |x, y| self.angle_basis(x, y))
    }

    /// Pairing of two T vectors into d.
    pub fn littled_mul(&self, s: &[Scalar], t: &[Scalar]) -> Vec<Scalar> {
        bilinear(s, t, self.d_dim(), |x, y| self.littled_basis(x, y))
    }

    /// Inner derivation of two J vectors, in d coordinates.
    pub fn big_d_mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        bilinear(a, b, self.d_dim(), |i, j| self.big_d_basis(i, j))
    }

    /// Bracket of two d vectors.
    pub fn d_bracket_mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        bilinear(a, b, self.d_dim(), |m, p| self.d_bracket_basis(m, p))
    }

    /// Matrix of a d vector acting on J.
    pub fn d_action_j(&self, d: &[Scalar]) -> Matrix {
        action_sum(d, &self.d_on_j, self.j_dim())
    }

    /// Matrix of a d vector acting on T.
    pub fn d_action_t(&self, d: &[Scalar]) -> Matrix {
        action_sum(d, &self.d_on_t, self.t_dim())
    }

    fn shapes_valid(&self) -> bool {
        let (jd, td, dd) = (self.j_dim(), self.t_dim(), self.d_dim());
        self.jordan.len() == jd * jd * jd
            && self.unit.len() == jd
            && self.dot.len() == jd * td * td
            && self.angle.len() == td * td * jd
            && self.littled.len() == td * td * dd
            && self.big_d.len() == jd * jd * dd
            && self.d_on_j.len() == dd
            && self.d_on_j.iter().all(|m| m.rows() == jd && m.cols() == jd)
            && self.d_on_t.len() == dd
            && self.d_on_t.iter().all(|m| m.rows() == td && m.cols() == td)
            && self.d_bracket.len() == dd * dd * dd
            && self.b_j.rows() == jd
            && self.b_j.cols() == jd
            && self.b_t.rows() == td
            && self.b_t.cols() == td
            && self.b_d.rows() == dd
            && self.b_d.cols() == dd
    }
}

fn bilinear<'a, F>(a: &[Scalar], b: &[Scalar], out_dim: usize, table: F) -> Vec<Scalar>
where
    F: Fn(usize, usize) -> &'a [Scalar],
{
    let mut out = vec![Scalar::zero(); out_dim];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let c = ai * bj;
            for (o, t) in out.iter_mut().zip(table(i, j).iter()) {
                if !t.is_zero() {
                    *o = &*o + &(&c * t);
                }
            }
        }
    }
    out
}

fn action_sum(coords: &[Scalar], mats: &[Matrix], dim: usize) -> Matrix {
    let mut out = Matrix::zeros(dim, dim);
    for (c, m) in coords.iter().zip(mats.iter()) {
        if !c.is_zero() {
            out = out.add(&m.scale(c));
        }
    }
    out
}

fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

fn column(m: &Matrix, j: usize) -> Vec<Scalar> {
    (0..m.rows()).map(|i| m.at(i, j).clone()).collect()
}

fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

fn neg(v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|s| -s).collect()
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale(v: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * c).collect()
}

fn form_apply(g: &Matrix, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let gb = g.mul_vec(&b.to_vec());
    a.iter().zip(gb.iter()).map(|(x, y)| x * y).sum()
}

impl JordanData {
    /// Checks every named condition the assembled bracket and scalar
    /// product rely on; an empty result means assembly yields a
    /// quadratic Lie algebra.
    pub fn check_conditions(&self) -> Vec<ConditionDefect> {
        let mut out = Vec::new();
        if !self.shapes_valid() {
            out.push(ConditionDefect {
                condition: "shape",
                detail: "table lengths do not match the stated dimensions".into(),
            });
            return out;
        }
        let (jd, td, dd) = (self.j_dim(), self.t_dim(), self.d_dim());
        let mut push = |condition: &'static str, detail: String| {
            out.push(ConditionDefect { condition, detail });
        };
        let jb = |i: usize| unit_vec(jd, i);
        let tb = |x: usize| unit_vec(td, x);
        let db = |m: usize| unit_vec(dd, m);

        for j in 0..jd {
            if self.jordan_mul(&self.unit, &jb(j)) != jb(j) {
                push("unit-jordan", format!("1 * {} differs", self.j_labels[j]));
            }
        }
        for x in 0..td {
            if self.dot_mul(&self.unit, &tb(x)) != tb(x) {
                push("unit-dot", format!("1 . {} differs", self.t_labels[x]));
            }
        }
        for j in 0..jd {
            if !is_zero_vec(&self.big_d_mul(&self.unit, &jb(j))) {
                push(
                    "unit-derivation",
                    format!("D(1, {}) is nonzero", self.j_labels[j]),
                );
            }
        }
        for i in 0..jd {
            for j in i + 1..jd {
                if self.jordan_basis(i, j) != self.jordan_basis(j, i) {
                    push(
                        "commutativity",
                        format!("({}, {})", self.j_labels[i], self.j_labels[j]),
                    );
                }
            }
        }
        for i in 0..jd {
            for j in i..jd {
                if self.big_d_basis(i, j) != neg(self.big_d_basis(j, i)).as_slice() {
                    push(
                        "derivation-skew",
                        format!("({}, {})", self.j_labels[i], self.j_labels[j]),
                    );
                }
            }
        }
        // Jordan identity, fully linearized over basis quadruples.
        'jordan: for i in 0..jd {
            for j in 0..jd {
                for k in 0..jd {
                    for b in 0..jd {
                        let mut total = vec![Scalar::zero(); jd];
                        for (p, q, r) in
                            [(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)]
                        {
                            let pq = self.jordan_basis(p, q).to_vec();
                            let left = self.jordan_mul(&self.jordan_mul(&pq, &jb(b)), &jb(r));
                            let right = self.jordan_mul(&pq, &self.jordan_basis(b, r).to_vec());
                            total = add(&total, &sub(&left, &right));
                        }
                        if !is_zero_vec(&total) {
                            push(
                                "jordan-identity",
                                format!(
                                    "linearization at ({}, {}, {}; {})",
                                    self.j_labels[i],
                                    self.j_labels[j],
                                    self.j_labels[k],
                                    self.j_labels[b]
                                ),
                            );
                            break 'jordan;
                        }
                    }
                }
            }
        }
        let half = Scalar::one() / Scalar::from_integer(2.into());
        for i in 0..jd {
            for j in 0..jd {
                for x in 0..td {
                    let lhs = self.dot_mul(self.jordan_basis(i, j), &tb(x));
                    let rhs = scale(
                        &add(
                            &self.dot_mul(&jb(i), &self.dot_mul(&jb(j), &tb(x))),
                            &self.dot_mul(&jb(j), &self.dot_mul(&jb(i), &tb(x))),
                        ),
                        &half,
                    );
                    if lhs != rhs {
                        push(
                            "specialization",
                            format!(
                                "({}, {}) on {}",
                                self.j_labels[i], self.j_labels[j], self.t_labels[x]
                            ),
                        );
                    }
                }
            }
        }
        for i in 0..jd {
            for j in 0..jd {
                let action = self.d_action_j(self.big_d_basis(i, j));
                for k in 0..jd {
                    let lhs = column(&action, k);
                    let rhs = sub(
                        &self.jordan_mul(&jb(i), self.jordan_basis(j, k)),
                        &self.jordan_mul(&jb(j), self.jordan_basis(i, k)),
                    );
                    if lhs != rhs {
                        push(
                            "derivation-formula",
                            format!(
                                "D({}, {}) on {}",
                                self.j_labels[i], self.j_labels[j], self.j_labels[k]
                            ),
                        );
                    }
                }
                let action_t = self.d_action_t(self.big_d_basis(i, j));
                for x in 0..td {
                    let lhs = scale(&column(&action_t, x), &Scalar::from_integer(4.into()));
                    let rhs = sub(
                        &self.dot_mul(&jb(i), &self.dot_mul(&jb(j), &tb(x))),
                        &self.dot_mul(&jb(j), &self.dot_mul(&jb(i), &tb(x))),
                    );
                    if lhs != rhs {
                        push(
                            "derivation-dot",
                            format!(
                                "D({}, {}) on {}",
                                self.j_labels[i], self.j_labels[j], self.t_labels[x]
                            ),
                        );
                    }
                }
            }
        }
        for i in 0..jd {
            for j in 0..jd {
                for k in 0..jd {
                    let cyc = add(
                        &self.big_d_mul(self.jordan_basis(i, j), &jb(k)),
                        &add(
                            &self.big_d_mul(self.jordan_basis(j, k), &jb(i)),
                            &self.big_d_mul(self.jordan_basis(k, i), &jb(j)),
                        ),
                    );
                    if !is_zero_vec(&cyc) {
                        push(
                            "derivation-cycle",
                            format!(
                                "({}, {}, {})",
                                self.j_labels[i], self.j_labels[j], self.j_labels[k]
                            ),
                        );
                    }
                }
            }
        }
        for x in 0..td {
            for y in x..td {
                if self.angle_basis(x, y) != neg(self.angle_basis(y, x)).as_slice() {
                    push(
                        "angle-skew",
                        format!("({}, {})", self.t_labels[x], self.t_labels[y]),
                    );
                }
                if self.littled_basis(x, y) != self.littled_basis(y, x) {
                    push(
                        "littled-symmetric",
                        format!("({}, {})", self.t_labels[x], self.t_labels[y]),
                    );
                }
            }
        }
        let four = Scalar::from_integer(4.into());
        let two = Scalar::from_integer(2.into());
        for i in 0..jd {
            for x in 0..td {
                for y in 0..td {
                    let lhs = scale(
                        &self.big_d_mul(&jb(i), self.angle_basis(x, y)),
                        &four,
                    );
                    let rhs = sub(
                        &self.littled_mul(&tb(x), &self.dot_mul(&jb(i), &tb(y))),
                        &self.littled_mul(&self.dot_mul(&jb(i), &tb(x)), &tb(y)),
                    );
                    if lhs != rhs {
                        push(
                            "angle-derivation",
                            format!(
                                "{} with ({}, {})",
                                self.j_labels[i], self.t_labels[x], self.t_labels[y]
                            ),
                        );
                    }
                    let lhs = scale(&self.jordan_mul(&jb(i), self.angle_basis(x, y)), &two);
                    let rhs = add(
                        &self.angle_mul(&self.dot_mul(&jb(i), &tb(x)), &tb(y)),
                        &self.angle_mul(&tb(x), &self.dot_mul(&jb(i), &tb(y))),
                    );
                    if lhs != rhs {
                        push(
                            "angle-jordan",
                            format!(
                                "{} with ({}, {})",
                                self.j_labels[i], self.t_labels[x], self.t_labels[y]
                            ),
                        );
                    }
                }
            }
        }
        for x in 0..td {
            for y in 0..td {
                let action_j = self.d_action_j(self.littled_basis(x, y));
                for i in 0..jd {
                    let lhs = column(&action_j, i);
                    let rhs = sub(
                        &self.angle_mul(&self.dot_mul(&jb(i), &tb(x)), &tb(y)),
                        &self.angle_mul(&tb(x), &self.dot_mul(&jb(i), &tb(y))),
                    );
                    if lhs != rhs {
                        push(
                            "littled-jordan",
                            format!(
                                "d({}, {}) on {}",
                                self.t_labels[x], self.t_labels[y], self.j_labels[i]
                            ),
                        );
                    }
                }
                for z in 0..td {
                    let lhs = sub(
                        &column(&self.d_action_t(self.littled_basis(x, y)), z),
                        &column(&self.d_action_t(self.littled_basis(z, y)), x),
                    );
                    let rhs = add(
                        &sub(
                            &self.dot_mul(self.angle_basis(x, y), &tb(z)),
                            &self.dot_mul(self.angle_basis(z, y), &tb(x)),
                        ),
                        &scale(&self.dot_mul(self.angle_basis(x, z), &tb(y)), &two),
                    );
                    if lhs != rhs {
                        push(
                            "littled-dot",
                            format!(
                                "({}, {}, {})",
                                self.t_labels[x], self.t_labels[y], self.t_labels[z]
                            ),
                        );
                    }
                }
            }
        }
        // d is a Lie algebra represented on J and T.
        for m in 0..dd {
            for p in m..dd {
                if self.d_bracket_basis(m, p) != neg(self.d_bracket_basis(p, m)).as_slice() {
                    push(
                        "d-antisymmetry",
                        format!("({}, {})", self.d_labels[m], self.d_labels[p]),
                    );
                }
            }
        }
        for m in 0..dd {
            for p in 0..dd {
                for q in 0..dd {
                    let jac = add(
                        &self.d_bracket_mul(&db(m), self.d_bracket_basis(p, q)),
                        &add(
                            &self.d_bracket_mul(&db(p), self.d_bracket_basis(q, m)),
                            &self.d_bracket_mul(&db(q), self.d_bracket_basis(m, p)),
                        ),
                    );
                    if !is_zero_vec(&jac) {
                        push(
                            "d-jacobi",
                            format!(
                                "({}, {}, {})",
                                self.d_labels[m], self.d_labels[p], self.d_labels[q]
                            ),
                        );
                    }
                }
            }
        }
        for m in 0..dd {
            for p in m + 1..dd {
                let br = self.d_bracket_basis(m, p);
                let comm_j = self.d_on_j[m]
                    .mul(&self.d_on_j[p])
                    .sub(&self.d_on_j[p].mul(&self.d_on_j[m]));
                if comm_j != self.d_action_j(br) {
                    push(
                        "d-representation-j",
                        format!("({}, {})", self.d_labels[m], self.d_labels[p]),
                    );
                }
                let comm_t = self.d_on_t[m]
                    .mul(&self.d_on_t[p])
                    .sub(&self.d_on_t[p].mul(&self.d_on_t[m]));
                if comm_t != self.d_action_t(br) {
                    push(
                        "d-representation-t",
                        format!("({}, {})", self.d_labels[m], self.d_labels[p]),
                    );
                }
            }
        }
        // Every piece of structure is d-invariant.
        for m in 0..dd {
            let dj = &self.d_on_j[m];
            let dt = &self.d_on_t[m];
            for i in 0..jd {
                for j in 0..jd {
                    let lhs = dj.mul_vec(&self.jordan_basis(i, j).to_vec());
                    let rhs = add(
                        &self.jordan_mul(&column(dj, i), &jb(j)),
                        &self.jordan_mul(&jb(i), &column(dj, j)),
                    );
                    if lhs != rhs {
                        push(
                            "d-invariance-jordan",
                            format!(
                                "{} on ({}, {})",
                                self.d_labels[m], self.j_labels[i], self.j_labels[j]
                            ),
                        );
                    }
                    let lhs = self.d_bracket_mul(&db(m), self.big_d_basis(i, j));
                    let rhs = add(
                        &self.big_d_mul(&column(dj, i), &jb(j)),
                        &self.big_d_mul(&jb(i), &column(dj, j)),
                    );
                    if lhs != rhs {
                        push(
                            "d-invariance-derivation",
                            format!(
                                "{} on D({}, {})",
                                self.d_labels[m], self.j_labels[i], self.j_labels[j]
                            ),
                        );
                    }
                }
            }
            for i in 0..jd {
                for x in 0..td {
                    let lhs = dt.mul_vec(&self.dot_basis(i, x).to_vec());
                    let rhs = add(
                        &self.dot_mul(&column(dj, i), &tb(x)),
                        &self.dot_mul(&jb(i), &column(dt, x)),
                    );
                    if lhs != rhs {
                        push(
                            "d-invariance-dot",
                            format!(
                                "{} on ({}, {})",
                                self.d_labels[m], self.j_labels[i], self.t_labels[x]
                            ),
                        );
                    }
                }
            }
            for x in 0..td {
                for y in 0..td {
                    let lhs = dj.mul_vec(&self.angle_basis(x, y).to_vec());
                    let rhs = add(
                        &self.angle_mul(&column(dt, x), &tb(y)),
                        &self.angle_mul(&tb(x), &column(dt, y)),
                    );
                    if lhs != rhs {
                        push(
                            "d-invariance-angle",
                            format!(
                                "{} on ({}, {})",
                                self.d_labels[m], self.t_labels[x], self.t_labels[y]
                            ),
                        );
                    }
                    let lhs = self.d_bracket_mul(&db(m), self.littled_basis(x, y));
                    let rhs = add(
                        &self.littled_mul(&column(dt, x), &tb(y)),
                        &self.littled_mul(&tb(x), &column(dt, y)),
                    );
                    if lhs != rhs {
                        push(
                            "d-invariance-littled",
                            format!(
                                "{} on d({}, {})",
                                self.d_labels[m], self.t_labels[x], self.t_labels[y]
                            ),
                        );
                    }
                }
            }
        }
        // Forms: symmetry kinds, nondegeneracy, and compatibility.
        if !self.b_j.is_symmetric() {
            push("form-j-symmetric", "B_J is not symmetric".into());
        } else if self.b_j.rank() != jd {
            push("form-j-nondegenerate", "B_J is degenerate".into());
        } else {
            for i in 0..jd {
                for j in 0..jd {
                    for k in 0..jd {
                        let left = form_apply(&self.b_j, self.jordan_basis(i, j), &jb(k));
                        let right = form_apply(&self.b_j, &jb(i), self.jordan_basis(j, k));
                        if left != right {
                            push(
                                "form-j-associative",
                                format!(
                                    "({}, {}, {})",
                                    self.j_labels[i], self.j_labels[j], self.j_labels[k]
                                ),
                            );
                        }
                    }
                }
            }
        }
        if td > 0 {
            if !self.b_t.add(&self.b_t.transpose()).is_zero() {
                push("form-t-skew", "B_T is not skew".into());
            } else if self.b_t.rank() != td {
                push("form-t-nondegenerate", "B_T is degenerate".into());
            }
        }
        if dd > 0 {
            if !self.b_d.is_symmetric() {
                push("form-d-symmetric", "B_d is not symmetric".into());
            } else if self.b_d.rank() != dd {
                push("form-d-nondegenerate", "B_d is degenerate".into());
            }
            for m in 0..dd {
                for p in 0..dd {
                    for q in 0..dd {
                        let left = form_apply(&self.b_d, self.d_bracket_basis(m, p), &db(q));
                        let right = form_apply(&self.b_d, &db(m), self.d_bracket_basis(p, q));
                        if left != right {
                            push(
                                "form-d-invariant",
                                format!(
                                    "({}, {}, {})",
                                    self.d_labels[m], self.d_labels[p], self.d_labels[q]
                                ),
                            );
                        }
                    }
                }
            }
        }
        for m in 0..dd {
            let dj = &self.d_on_j[m];
            if !dj.transpose().mul(&self.b_j).add(&self.b_j.mul(dj)).is_zero() {
                push("d-skew-j", format!("{} on J", self.d_labels[m]));
            }
            let dt = &self.d_on_t[m];
            if !dt.transpose().mul(&self.b_t).add(&self.b_t.mul(dt)).is_zero() {
                push("d-skew-t", format!("{} on T", self.d_labels[m]));
            }
        }
        for i in 0..jd {
            for j in 0..jd {
                for m in 0..dd {
                    let lhs = form_apply(&self.b_d, self.big_d_basis(i, j), &db(m)) * &two;
                    let rhs = form_apply(&self.b_j, &column(&self.d_on_j[m], i), &jb(j));
                    if lhs != rhs {
                        push(
                            "form-derivation",
                            format!(
                                "D({}, {}) against {}",
                                self.j_labels[i], self.j_labels[j], self.d_labels[m]
                            ),
                        );
                    }
                }
            }
        }
        for x in 0..td {
            for y in 0..td {
                for m in 0..dd {
                    let lhs = form_apply(&self.b_d, self.littled_basis(x, y), &db(m));
                    let rhs = form_apply(&self.b_t, &column(&self.d_on_t[m], x), &tb(y));
                    if lhs != rhs {
                        push(
                            "form-littled",
                            format!(
                                "d({}, {}) against {}",
                                self.t_labels[x], self.t_labels[y], self.d_labels[m]
                            ),
                        );
                    }
                }
                for i in 0..jd {
                    let lhs = form_apply(&self.b_t, self.dot_basis(i, x), &tb(y));
                    let rhs = form_apply(&self.b_j, &jb(i), self.angle_basis(x, y)) * -&two;
                    if lhs != rhs {
                        push(
                            "form-angle",
                            format!(
                                "{} with ({}, {})",
                                self.j_labels[i], self.t_labels[x], self.t_labels[y]
                            ),
                        );
                    }
                }
            }
        }
        out
    }

    /// Builds the quadratic Lie algebra carried by this data. The
    /// underlying space is (rank-one split algebra tensor J) plus
    /// (plane tensor T) plus d, and assembly fails with the list of
    /// violated conditions if any check fails.
    pub fn assemble(&self, mode: FieldMode) -> Result<QuadraticLieAlgebra, AssembleError> {
        let defects = self.check_conditions();
        if !defects.is_empty() {
            return Err(AssembleError::Conditions(defects));
        }
        let q = self.assemble_unchecked(mode);
        if let Some(d) = q.lie.validate().first() {
            return Err(AssembleError::Assembled(d.to_string()));
        }
        if let Some(d) = q.validate_quadratic().first() {
            return Err(AssembleError::Assembled(d.to_string()));
        }
        Ok(q)
    }

    /// Assembly without the condition gate; the result may fail the Lie
    /// or invariance axioms and is meant for defect-detection tests.
    pub fn assemble_unchecked(&self, mode: FieldMode) -> QuadraticLieAlgebra {
        let (jd, td, dd) = (self.j_dim(), self.t_dim(), self.d_dim());
        let n = self.total_dim();
        let sl_idx = |i: usize, p: usize| i * jd + p;
        let v_idx = |c: usize, x: usize| 3 * jd + c * td + x;
        let d_idx = |m: usize| 3 * jd + 2 * td + m;
        let nat = irreducible_action(TripleKind::Split, 1).generators;
        let trace_table = super::trace_form_gram(&nat);
        let sl2 = crate::lie::sl2_split();
        // Pairing coefficients of plane vectors in the split basis:
        // gamma(u, u) = 2e, gamma(u, v) = -h, gamma(v, v) = -2f.
        let gamma_table: [[[i64; 3]; 2]; 2] =
            [[[2, 0, 0], [0, -1, 0]], [[0, -1, 0], [0, 0, -2]]];
        let omega: [[i64; 2]; 2] = [[0, 1], [-1, 0]];

        let mut entries: Vec<(usize, usize, Vec<(usize, Scalar)>)> = Vec::new();
        let put = |entries: &mut Vec<(usize, usize, Vec<(usize, Scalar)>)>,
                       a: usize,
                       b: usize,
                       coeffs: Vec<(usize, Scalar)>| {
            let coeffs: Vec<(usize, Scalar)> =
                coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !coeffs.is_empty() {
                entries.push((a, b, coeffs));
            }
        };
        // [s_i x a_p, s_j x a_q]
        for i in 0..3 {
            for p in 0..jd {
                for j in 0..3 {
                    for q in 0..jd {
                        let (a, b) = (sl_idx(i, p), sl_idx(j, q));
                        if a >= b {
                            continue;
                        }
                        let mut coeffs = Vec::new();
                        for k in 0..3 {
                            let cs = sl2.structure_constant(i, j, k);
                            if cs.is_zero() {
                                continue;
                            }
                            for (r, c) in self.jordan_basis(p, q).iter().enumerate() {
                                if !c.is_zero() {
                                    coeffs.push((sl_idx(k, r), cs * c));
                                }
                            }
                        }
                        let tr = trace_table.at(i, j);
                        if !tr.is_zero() {
                            let tr2 = tr * &Scalar::from_integer(2.into());
                            for (m, c) in self.big_d_basis(p, q).iter().enumerate() {
                                if !c.is_zero() {
                                    coeffs.push((d_idx(m), &tr2 * c));
                                }
                            }
                        }
                        put(&mut entries, a, b, coeffs);
                    }
                }
            }
        }
        // [s_i x a_p, u_c x t_x] = (s_i u_c) x (a_p . t_x)
        for i in 0..3 {
            for p in 0..jd {
                for c in 0..2 {
                    for x in 0..td {
                        let mut coeffs = Vec::new();
                        for cp in 0..2 {
                            let nc = nat[i].at(cp, c);
                            if nc.is_zero() {
                                continue;
                            }
                            for (y, dv) in self.dot_basis(p, x).iter().enumerate() {
                                if !dv.is_zero() {
                                    coeffs.push((v_idx(cp, y), nc * dv));
                                }
                            }
                        }
                        put(&mut entries, sl_idx(i, p), v_idx(c, x), coeffs);
                    }
                }
            }
        }
        // [s_i x a_p, d_m] = -s_i x d_m(a_p)
        for i in 0..3 {
            for p in 0..jd {
                for m in 0..dd {
                    let col = column(&self.d_on_j[m], p);
                    let coeffs = col
                        .iter()
                        .enumerate()
                        .map(|(q, c)| (sl_idx(i, q), -c))
                        .collect();
                    put(&mut entries, sl_idx(i, p), d_idx(m), coeffs);
                }
            }
        }
        // [u_c x t_x, u_cp x t_y] = gamma x angle + omega * littled
        for c in 0..2 {
            for x in 0..td {
                for cp in 0..2 {
                    for y in 0..td {
                        let (a, b) = (v_idx(c, x), v_idx(cp, y));
                        if a >= b {
                            continue;
                        }
                        let mut coeffs = Vec::new();
                        for i in 0..3 {
                            let g = gamma_table[c][cp][i];
                            if g == 0 {
                                continue;
                            }
                            let g = Scalar::from_integer(g.into());
                            for (r, av) in self.angle_basis(x, y).iter().enumerate() {
                                if !av.is_zero() {
                                    coeffs.push((sl_idx(i, r), &g * av));
                                }
                            }
                        }
                        let w = omega[c][cp];
                        if w != 0 {
                            let w = Scalar::from_integer(w.into());
                            for (m, lv) in self.littled_basis(x, y).iter().enumerate() {
                                if !lv.is_zero() {
                                    coeffs.push((d_idx(m), &w * lv));
                                }
                            }
                        }
                        put(&mut entries, a, b, coeffs);
                    }
                }
            }
        }
        // [u_c x t_x, d_m] = -u_c x d_m(t_x)
        for c in 0..2 {
            for x in 0..td {
                for m in 0..dd {
                    let col = column(&self.d_on_t[m], x);
                    let coeffs = col
                        .iter()
                        .enumerate()
                        .map(|(y, cv)| (v_idx(c, y), -cv))
                        .collect();
                    put(&mut entries, v_idx(c, x), d_idx(m), coeffs);
                }
            }
        }
        // [d_m, d_p]
        for m in 0..dd {
            for p in m + 1..dd {
                let coeffs = self
                    .d_bracket_basis(m, p)
                    .iter()
                    .enumerate()
                    .map(|(q, c)| (d_idx(q), c.clone()))
                    .collect();
                put(&mut entries, d_idx(m), d_idx(p), coeffs);
            }
        }
        let sl_names = ["e", "h", "f"];
        let v_names = ["u", "v"];
        let mut labels = Vec::with_capacity(n);
        for name in sl_names {
            for p in 0..jd {
                labels.push(format!("{name}.{}", self.j_labels[p]));
            }
        }
        for name in v_names {
            for x in 0..td {
                labels.push(format!("{name}.{}", self.t_labels[x]));
            }
        }
        labels.extend(self.d_labels.iter().cloned());
        let lie = LieAlgebra::from_brackets(&self.name, labels, &entries);

        let sl_gram = trace_table.kronecker(&self.b_j);
        let omega_gram = Matrix::from_fn(2, 2, |c, cp| Scalar::from_integer(omega[c][cp].into()));
        let v_gram = omega_gram.kronecker(&self.b_t);
        let form = block_diag(&[&sl_gram, &v_gram, &self.b_d]);
        QuadraticLieAlgebra::new(lie, form, mode)
    }

    /// The embedded rank-one split triple: the natural basis tensored
    /// with the unit of J.
    pub fn designated_levi(&self) -> LeviTriple {
        let jd = self.j_dim();
        let n = self.total_dim();
        let place = |i: usize| {
            let mut v = vec![Scalar::zero(); n];
            for (p, c) in self.unit.iter().enumerate() {
                v[i * jd + p] = c.clone();
            }
            v
        };
        LeviTriple {
            kind: TripleKind::Split,
            vectors: [place(0), place(1), place(2)],
        }
    }
}

/// Data whose assembly is the ten-dimensional double extension of the
/// tensor square of the plane: J is the dual numbers, T is a plane with
/// a symplectic form, and d vanishes.
pub fn tensor_square_data() -> JordanData {
    let jd = 2;
    let td = 2;
    let jidx = |i: usize, j: usize, k: usize| (i * jd + j) * jd + k;
    let mut jordan = vec![Scalar::zero(); jd * jd * jd];
    // 1 * 1 = 1, 1 * x = x * 1 = x, x * x = 0.
    jordan[jidx(0, 0, 0)] = Scalar::one();
    jordan[jidx(0, 1, 1)] = Scalar::one();
    jordan[jidx(1, 0, 1)] = Scalar::one();
    let mut dot = vec![Scalar::zero(); jd * td * td];
    for x in 0..td {
        dot[x * td + x] = Scalar::one();
    }
    let half = Scalar::one() / Scalar::from_integer(2.into());
    let aidx = |x: usize, y: usize, k: usize| (x * td + y) * jd + k;
    let mut angle = vec![Scalar::zero(); td * td * jd];
    // angle(p, q) = -(1/2) B_T(p, q) x.
    angle[aidx(0, 1, 1)] = -half.clone();
    angle[aidx(1, 0, 1)] = half;
    let mut b_j = Matrix::zeros(2, 2);
    *b_j.at_mut(0, 1) = Scalar::one();
    *b_j.at_mut(1, 0) = Scalar::one();
    let b_t = Matrix::from_int_rows(&[&[0, 1], &[-1, 0]]);
    JordanData {
        name: "vv-model".into(),
        j_labels: vec!["1".into(), "x".into()],
        t_labels: vec!["p".into(), "q".into()],
        d_labels: Vec::new(),
        jordan,
        unit: vec![Scalar::one(), Scalar::zero()],
        dot,
        angle,
        littled: Vec::new(),
        big_d: Vec::new(),
        d_on_j: Vec::new(),
        d_on_t: Vec::new(),
        d_bracket: Vec::new(),
        b_j,
        b_t,
        b_d: Matrix::zeros(0, 0),
    }
}

/// Extends the tensor-square data by a one-dimensional d acting
/// nilpotently on T, giving the eleven-dimensional extension of the
/// five-dimensional nilpotent core.
pub fn nilpotent_core_data() -> JordanData {
    let mut data = tensor_square_data();
    data.name = "nil5-model".into();
    data.d_labels = vec!["w".into()];
    let td = data.t_dim();
    let jd = data.j_dim();
    let dd = 1;
    let mut littled = vec![Scalar::zero(); td * td * dd];
    littled[0] = Scalar::one();
    data.littled = littled;
    data.big_d = vec![Scalar::zero(); jd * jd * dd];
    data.d_on_j = vec![Matrix::zeros(jd, jd)];
    data.d_on_t = vec![Matrix::from_int_rows(&[&[0, 0], &[1, 0]])];
    data.d_bracket = vec![Scalar::zero()];
    data.b_d = Matrix::from_int_rows(&[&[-1]]);
    data
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{s_int, s_ratio};
    use crate::sl2::decompose;

    #[test]
    fn tensor_square_data_assembles_cleanly() {
        let data = tensor_square_data();
        assert!(data.check_conditions().is_empty(), "{:?}", data.check_conditions());
        let q = data.assemble(FieldMode::Closed).unwrap();
        assert_eq!(q.dim(), 10);
        assert!(q.validate_quadratic().is_empty());
        let dec = decompose(&q.lie, &data.designated_levi()).unwrap();
        assert_eq!(
            dec.multiset(),
            vec![("V(1)".to_string(), 2), ("V(2)".to_string(), 2)]
        );
    }

    #[test]
    fn nilpotent_core_data_assembles_cleanly() {
        let data = nilpotent_core_data();
        assert!(data.check_conditions().is_empty(), "{:?}", data.check_conditions());
        let q = data.assemble(FieldMode::Closed).unwrap();
        assert_eq!(q.dim(), 11);
        let dec = decompose(&q.lie, &data.designated_levi()).unwrap();
        assert_eq!(
            dec.multiset(),
            vec![
                ("V(0)".to_string(), 1),
                ("V(1)".to_string(), 2),
                ("V(2)".to_string(), 2)
            ]
        );
        let radical = q.lie.radical();
        assert_eq!(radical.dim(), 8);
        assert!(q.lie.is_solvable_subspace(&radical));
    }

    #[test]
    fn broken_unit_is_caught_by_name() {
        let mut data = tensor_square_data();
        data.unit[1] = Scalar::one();
        let defects = data.check_conditions();
        assert!(defects.iter().any(|d| d.condition.starts_with("unit")));
    }

    #[test]
    fn broken_jordan_product_is_caught() {
        let mut data = tensor_square_data();
        // x * x = 1 is not compatible with the form or the identity.
        data.jordan[((1) * 2 + 1) * 2] = Scalar::one();
        let defects = data.check_conditions();
        assert!(!defects.is_empty());
        assert!(matches!(
            data.assemble(FieldMode::Closed),
            Err(AssembleError::Conditions(_))
        ));
    }

    #[test]
    fn broken_angle_scale_is_caught_by_the_form_conditions() {
        let mut data = tensor_square_data();
        for c in data.angle.iter_mut() {
            *c = &*c * &s_int(3);
        }
        let defects = data.check_conditions();
        assert!(defects.iter().any(|d| d.condition == "form-angle"));
    }

    #[test]
    fn broken_littled_form_is_caught() {
        let mut data = nilpotent_core_data();
        data.b_d = Matrix::from_int_rows(&[&[-2]]);
        let defects = data.check_conditions();
        assert!(defects.iter().any(|d| d.condition == "form-littled"));
    }

    #[test]
    fn mutated_action_fails_named_invariance() {
        let mut data = nilpotent_core_data();
        let mut m = Matrix::zeros(2, 2);
        *m.at_mut(1, 0) = Scalar::one();
        *m.at_mut(0, 1) = s_ratio(1, 2);
        data.d_on_t = vec![m];
        let defects = data.check_conditions();
        assert!(
            defects
                .iter()
                .any(|d| d.condition == "d-invariance-littled" || d.condition == "form-littled"),
            "{defects:?}"
        );
    }
}
