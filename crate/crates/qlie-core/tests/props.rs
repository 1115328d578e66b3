//! Property tests for the exact linear algebra, the scalar parser, the
//! file format, and the double-extension constructor. Each block states
//! an invariant that must hold for every generated input.

use proptest::prelude::*;

use qlie_core::construct::double_extension;
use qlie_core::io;
use qlie_core::{
    build, format_scalar, parse_scalar, s_int, s_ratio, FieldMode, LieAlgebra, Matrix, Scalar,
};

/// Small exact rationals; denominators stay tiny so reduction cost is
/// bounded and shrinking stays readable.
fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=3).prop_map(|(p, q)| s_ratio(p, q))
}

proptest! {
    #[test]
    fn rank_and_kernel_split_the_column_count(
        (rows, cols) in (1usize..=5, 1usize..=5),
        seed_rows in prop::collection::vec(prop::collection::vec(scalar_strategy(), 5), 5),
    ) {
        let m = Matrix::from_rows(
            seed_rows[..rows].iter().map(|r| r[..cols].to_vec()).collect(),
        );
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(|x| x == &s_int(0)));
        }
    }

    #[test]
    fn congruence_preserves_the_signature(
        n in 2usize..=4,
        diag in prop::collection::vec(-3i64..=3, 4),
        p_rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 4),
    ) {
        let mut d = Matrix::zeros(n, n);
        for i in 0..n {
            *d.at_mut(i, i) = s_int(diag[i]);
        }
        let p = Matrix::from_rows(
            p_rows[..n].iter().map(|r| r[..n].iter().copied().map(s_int).collect()).collect(),
        );
        prop_assume!(p.rank() == n);
        let congruent = p.transpose().mul(&d).mul(&p);
        prop_assert_eq!(congruent.signature(), d.signature());
    }

    #[test]
    fn eigenspaces_of_conjugated_diagonals_recover_the_spectrum(
        n in 2usize..=4,
        diag in prop::collection::vec(-3i64..=3, 4),
        p_rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 4),
    ) {
        let mut d = Matrix::zeros(n, n);
        for i in 0..n {
            *d.at_mut(i, i) = s_int(diag[i]);
        }
        let p = Matrix::from_rows(
            p_rows[..n].iter().map(|r| r[..n].iter().copied().map(s_int).collect()).collect(),
        );
        prop_assume!(p.rank() == n);
        let p_inv = p.inverse().expect("full-rank matrices invert");
        let op = p_inv.mul(&d).mul(&p);
        let spaces = op.rational_eigenspaces();
        // Soundness: every reported vector is an eigenvector for its value.
        let mut stacked: Vec<Vec<Scalar>> = Vec::new();
        for (value, vectors) in &spaces {
            for v in vectors {
                let image = op.mul_vec(v);
                let scaled: Vec<Scalar> = v.iter().map(|x| value * x).collect();
                prop_assert_eq!(&image, &scaled);
                stacked.push(v.clone());
            }
        }
        // Pairwise independence: the bases stay independent when stacked.
        let total = stacked.len();
        prop_assert_eq!(Matrix::from_rows(stacked).rank(), total);
        // Completeness on a diagonalizable operator: the eigenvalues are
        // exactly the diagonal entries and the eigenspaces fill the space.
        prop_assert_eq!(total, n);
        let mut expected: Vec<Scalar> = diag[..n].iter().copied().map(s_int).collect();
        expected.sort();
        expected.dedup();
        let mut found: Vec<Scalar> = spaces.iter().map(|(value, _)| value.clone()).collect();
        found.sort();
        prop_assert_eq!(found, expected);
    }

    #[test]
    fn minimal_polynomials_are_monic_and_annihilate(
        n in 1usize..=4,
        entries in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 4),
    ) {
        let a = Matrix::from_rows(
            entries[..n].iter().map(|r| r[..n].iter().copied().map(s_int).collect()).collect(),
        );
        let poly = a.minimal_polynomial();
        prop_assert!(poly.len() >= 2, "at least degree one");
        prop_assert!(poly.len() <= n + 1, "degree bounded by the size");
        prop_assert_eq!(poly.last().unwrap(), &s_int(1));
        prop_assert!(a.eval_poly(&poly).is_zero());
    }

    #[test]
    fn scalar_text_round_trips(p in -10_000i64..=10_000, q in 1i64..=999) {
        let x = s_ratio(p, q);
        let text = format_scalar(&x);
        prop_assert_eq!(parse_scalar(&text).unwrap(), x);
    }

    #[test]
    fn zero_denominators_never_parse(p in -100i64..=100) {
        let text = format!("{p}/0");
        prop_assert!(parse_scalar(&text).is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn algebra_files_round_trip(
        pick in prop::sample::select(vec![
            ("sl2", FieldMode::Closed),
            ("tstar-sl2", FieldMode::Closed),
            ("dx-vv", FieldMode::Closed),
            ("su2xX3", FieldMode::Real),
            ("so32", FieldMode::Real),
        ]),
    ) {
        let q = build(pick.0, pick.1).unwrap();
        let text = io::to_json(&q);
        let back = io::from_json(&text).unwrap();
        prop_assert_eq!(&back, &q);
        prop_assert_eq!(io::to_json(&back), text);
    }

    #[test]
    fn change_of_basis_preserves_the_fingerprint(
        p_rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 6), 6),
    ) {
        let p = Matrix::from_rows(
            p_rows.iter().map(|r| r.iter().copied().map(s_int).collect()).collect(),
        );
        prop_assume!(p.rank() == 6);
        let q = build("tstar-sl2", FieldMode::Closed).unwrap();
        let moved = q.change_basis(&p);
        prop_assert!(moved.lie.is_lie());
        prop_assert!(moved.validate_quadratic().is_empty());
        let original = q.fingerprint().unwrap();
        let transported = moved.fingerprint().unwrap();
        prop_assert_eq!(transported, original);
    }

    #[test]
    fn skew_actions_on_abelian_spaces_extend_validly(
        n in 2usize..=4,
        diag_signs in prop::collection::vec(prop::bool::ANY, 4),
        skew_upper in prop::collection::vec(scalar_strategy(), 6),
        gamma in scalar_strategy(),
    ) {
        let abelian = LieAlgebra::from_brackets(
            "a",
            LieAlgebra::numbered_labels("a", n),
            &[],
        );
        let line = LieAlgebra::from_brackets("z", LieAlgebra::numbered_labels("z", 1), &[]);
        let mut b1 = Matrix::zeros(n, n);
        for i in 0..n {
            *b1.at_mut(i, i) = if diag_signs[i] { s_int(1) } else { s_int(-1) };
        }
        // phi = b1^(-1) S with S skew is exactly the b1-skew condition.
        let mut s = Matrix::zeros(n, n);
        let mut next = skew_upper.iter();
        for i in 0..n {
            for j in (i + 1)..n {
                let x = next.next().unwrap().clone();
                *s.at_mut(i, j) = x.clone();
                *s.at_mut(j, i) = -x;
            }
        }
        let phi = b1.inverse().unwrap().mul(&s);
        let mut g = Matrix::zeros(1, 1);
        *g.at_mut(0, 0) = gamma;
        let de = double_extension("t", &abelian, &b1, &line, &[phi], &g, FieldMode::Real)
            .unwrap();
        prop_assert!(de.algebra.lie.is_lie());
        prop_assert!(de.algebra.validate_quadratic().is_empty());
        prop_assert_eq!(de.algebra.dim(), n + 2);
    }
}
