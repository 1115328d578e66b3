//! Dense univariate polynomials over the rationals, coefficients stored
//! low degree first. The zero polynomial is the empty vector.

use crate::scalar::Scalar;
use num::{One, Zero};

pub fn poly_trim(mut p: Vec<Scalar>) -> Vec<Scalar> {
    while p.last().map_or(false, Scalar::is_zero) {
        p.pop();
    }
    p
}

/// None for the zero polynomial.
pub fn poly_degree(p: &[Scalar]) -> Option<usize> {
    let p = p.iter().rposition(|c| !c.is_zero())?;
    Some(p)
}

pub fn poly_mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    poly_trim(out)
}

pub fn poly_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let n = a.len().max(b.len());
    let mut out = vec![Scalar::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] = &out[i] + c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = &out[i] + c;
    }
    poly_trim(out)
}

pub fn poly_scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    poly_trim(a.iter().map(|c| c * s).collect())
}

/// Euclidean division: `num = q * den + r` with `deg r < deg den`.
/// Panics if `den` is zero.
pub fn poly_divmod(num: &[Scalar], den: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    let den = poly_trim(den.to_vec());
    assert!(!den.is_empty(), "polynomial division by zero");
    let mut rem = poly_trim(num.to_vec());
    let d = den.len() - 1;
    let lead = den.last().unwrap().clone();
    if rem.len() <= d {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Scalar::zero(); rem.len() - d];
    while rem.len() > d {
        let k = rem.len() - 1 - d;
        let coeff = rem.last().unwrap() / &lead;
        quot[k] = coeff.clone();
        for (i, c) in den.iter().enumerate() {
            rem[k + i] = &rem[k + i] - &(&coeff * c);
        }
        rem = poly_trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    (poly_trim(quot), rem)
}

pub fn poly_monic(p: &[Scalar]) -> Vec<Scalar> {
    let p = poly_trim(p.to_vec());
    match p.last() {
        None => p,
        Some(lead) => {
            let inv = Scalar::one() / lead;
            p.iter().map(|c| c * &inv).collect()
        }
    }
}

/// Monic greatest common divisor.
pub fn poly_gcd(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut a = poly_trim(a.to_vec());
    let mut b = poly_trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = poly_divmod(&a, &b);
        a = b;
        b = r;
    }
    poly_monic(&a)
}

/// Returns `(g, s, t)` with `s*a + t*b = g` and `g` the monic gcd.
pub fn poly_extended_gcd(a: &[Scalar], b: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>, Vec<Scalar>) {
    let mut r0 = poly_trim(a.to_vec());
    let mut r1 = poly_trim(b.to_vec());
    let mut s0 = vec![Scalar::one()];
    let mut s1: Vec<Scalar> = Vec::new();
    let mut t0: Vec<Scalar> = Vec::new();
    let mut t1 = vec![Scalar::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_add(&s0, &poly_scale(&poly_mul(&q, &s1), &-Scalar::one()));
        let t = poly_add(&t0, &poly_scale(&poly_mul(&q, &t1), &-Scalar::one()));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    match r0.last() {
        None => (r0, s0, t0),
        Some(lead) => {
            let inv = Scalar::one() / lead;
            (
                poly_scale(&r0, &inv),
                poly_scale(&s0, &inv),
                poly_scale(&t0, &inv),
            )
        }
    }
}

pub fn poly_derivative(p: &[Scalar]) -> Vec<Scalar> {
    if p.len() <= 1 {
        return Vec::new();
    }
    poly_trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &crate::scalar::s_int(i as i64))
            .collect(),
    )
}

/// Monic product of the distinct irreducible factors: `p / gcd(p, p')`.
pub fn poly_squarefree_part(p: &[Scalar]) -> Vec<Scalar> {
    let p = poly_trim(p.to_vec());
    if p.len() <= 1 {
        return poly_monic(&p);
    }
    let g = poly_gcd(&p, &poly_derivative(&p));
    let (q, r) = poly_divmod(&p, &g);
    debug_assert!(r.is_empty());
    poly_monic(&q)
}

/// Largest k with `(X - root)^k` dividing p, together with the cofactor.
pub fn poly_split_off_root(p: &[Scalar], root: &Scalar) -> (usize, Vec<Scalar>) {
    let linear = vec![-root.clone(), Scalar::one()];
    let mut k = 0;
    let mut rest = poly_trim(p.to_vec());
    loop {
        let (q, r) = poly_divmod(&rest, &linear);
        if r.is_empty() && !rest.is_empty() {
            k += 1;
            rest = q;
        } else {
            return (k, rest);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::s_int;

    fn p(coeffs: &[i64]) -> Vec<Scalar> {
        coeffs.iter().map(|&c| s_int(c)).collect()
    }

    #[test]
    fn divmod_round_trip() {
        // (x^2 + 1)(x - 3) + 5 = x^3 - 3x^2 + x + 2
        let num = p(&[2, 1, -3, 1]);
        let den = p(&[1, 0, 1]);
        let (q, r) = poly_divmod(&num, &den);
        assert_eq!(q, p(&[-3, 1]));
        assert_eq!(r, p(&[5]));
        let back = poly_add(&poly_mul(&q, &den), &r);
        assert_eq!(back, poly_trim(num));
    }

    #[test]
    fn gcd_of_shared_factor() {
        // gcd((x-1)(x-2), (x-1)(x+5)) = x - 1
        let a = poly_mul(&p(&[-1, 1]), &p(&[-2, 1]));
        let b = poly_mul(&p(&[-1, 1]), &p(&[5, 1]));
        assert_eq!(poly_gcd(&a, &b), p(&[-1, 1]));
    }

    #[test]
    fn extended_gcd_bezout_identity() {
        let a = p(&[-1, 0, 1]); // x^2 - 1
        let b = p(&[2, 1]); // x + 2
        let (g, s, t) = poly_extended_gcd(&a, &b);
        assert_eq!(g, p(&[1]));
        let combo = poly_add(&poly_mul(&s, &a), &poly_mul(&t, &b));
        assert_eq!(combo, p(&[1]));
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        // (x-1)^2 (x+3) -> (x-1)(x+3)
        let sq = poly_mul(&poly_mul(&p(&[-1, 1]), &p(&[-1, 1])), &p(&[3, 1]));
        let sf = poly_squarefree_part(&sq);
        assert_eq!(sf, poly_mul(&p(&[-1, 1]), &p(&[3, 1])));
    }

    #[test]
    fn split_off_root_counts_multiplicity() {
        // x^2 (x - 1)^3
        let q = poly_mul(
            &p(&[0, 0, 1]),
            &poly_mul(&poly_mul(&p(&[-1, 1]), &p(&[-1, 1])), &p(&[-1, 1])),
        );
        let (k, rest) = poly_split_off_root(&q, &s_int(1));
        assert_eq!(k, 3);
        assert_eq!(rest, p(&[0, 0, 1]));
        let (k0, _) = poly_split_off_root(&q, &s_int(0));
        assert_eq!(k0, 2);
    }
}
