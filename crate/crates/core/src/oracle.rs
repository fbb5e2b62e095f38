//! Independent matrix models used to cross-check the twists: the operators
//! `φ_{x,y}(z) = <x,z> y - <y,z> x` spanning `so8`/`so7`, their graded
//! bases, and the octonion product.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::GGAlgebra;
use crate::error::{Error, Result};
use crate::fano::{star, wrap};
use crate::linalg::{unit, zeros, Matrix, Scalar};

/// Row/column of label `k` in an `n`-dimensional module: `e0..e7` for
/// `n = 8`, `e1..e7` for `n = 7`.
pub fn position(n: usize, k: usize) -> usize {
    match n {
        8 => k,
        7 => {
            assert!(k >= 1, "e0 is not part of the 7-dimensional module");
            k - 1
        }
        _ => panic!("module dimension must be 7 or 8"),
    }
}

/// Matrix of `φ_{x,y}`; entry `(r, c)` is `x_c y_r - y_c x_r`.
pub fn phi(x: &[Scalar], y: &[Scalar]) -> Result<Matrix> {
    let n = x.len();
    if y.len() != n {
        return Err(Error::DimensionMismatch { expected: n, actual: y.len() });
    }
    if n != 7 && n != 8 {
        return Err(Error::Unsupported(format!("φ is defined here on Q^7 or Q^8, not Q^{n}")));
    }
    let mut m = Matrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            m[(r, c)] = &x[c] * &y[r] - &y[c] * &x[r];
        }
    }
    Ok(m)
}

/// `φ_{e_i, e_j}` on the `n`-dimensional module.
pub fn phi_labels(n: usize, i: usize, j: usize) -> Matrix {
    phi(&unit(n, position(n, i)), &unit(n, position(n, j))).expect("valid module dimension")
}

/// Label pairs `(a, b)` of the graded basis `{φ_{i+1,i+3}, φ_{i+2,i+6}, φ_{i+4,i+5}, φ_{0,i}}`.
fn basis_pairs(n: usize, i: usize) -> Vec<(usize, usize)> {
    let mut pairs = vec![(wrap(i + 1), wrap(i + 3)), (wrap(i + 2), wrap(i + 6)), (wrap(i + 4), wrap(i + 5))];
    if n == 8 {
        pairs.push((0, i));
    }
    pairs
}

/// Basis of the homogeneous component of degree `g_i`, `i ∈ 1..=7`
/// (four matrices for `n = 8`, the first three for `n = 7`).
pub fn graded_basis(n: usize, i: usize) -> Result<Vec<Matrix>> {
    if !(1..=7).contains(&i) {
        return Err(Error::InvalidIndex(i));
    }
    if n != 7 && n != 8 {
        return Err(Error::Unsupported(format!("module dimension {n}")));
    }
    Ok(basis_pairs(n, i).into_iter().map(|(a, b)| phi_labels(n, a, b)).collect())
}

/// Whether `m` maps `e_h` into the span of `e_{g_i + h}` for every label `h`.
pub fn has_degree(n: usize, m: &Matrix, i: usize) -> bool {
    let labels: Vec<usize> = if n == 8 { (0..8).collect() } else { (1..8).collect() };
    labels.iter().all(|&h| labels.iter().all(|&r| r == star(i, h) || m[(position(n, r), position(n, h))].is_zero()))
}

/// Coordinates of `m` in the graded basis of degree `i`, if it lies in its span.
fn graded_coordinates(n: usize, i: usize, m: &Matrix) -> Option<Vec<Scalar>> {
    let pairs = basis_pairs(n, i);
    // φ_{a,b}(e_a) = e_b, and the basis elements have disjoint supports
    let coords: Vec<Scalar> = pairs.iter().map(|&(a, b)| m[(position(n, b), position(n, a))].clone()).collect();
    let mut rebuilt = Matrix::zeros(n, n);
    for (c, &(a, b)) in coords.iter().zip(&pairs) {
        rebuilt.add_scaled(c, &phi_labels(n, a, b));
    }
    (rebuilt == *m).then_some(coords)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleMismatch {
    pub i: usize,
    pub j: usize,
    pub p: usize,
    pub q: usize,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct OracleReport {
    pub mismatches: Vec<OracleMismatch>,
    pub pairs_checked: usize,
}

impl OracleReport {
    pub fn is_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `σ_{i,j}(e_p, e_q)` with the commutator of the `p`-th and
/// `q`-th graded basis matrices of degrees `i` and `j`, re-expressed in the
/// graded basis of degree `i∗j`, for all `i, j ∈ 1..=7`.
pub fn oracle_compare(a: &GGAlgebra) -> Result<OracleReport> {
    let d = a.coeff_dim();
    let n = match d {
        4 => 8,
        3 => 7,
        _ => return Err(Error::Unsupported(format!("no orthogonal model for coefficient dimension {d}"))),
    };
    let bases: Vec<Vec<Matrix>> = (1..=7).map(|i| graded_basis(n, i)).collect::<Result<_>>()?;
    let mut report = OracleReport::default();
    for i in 1..=7 {
        for j in 1..=7 {
            let k = star(i, j);
            for p in 0..d {
                for q in 0..d {
                    let comm = bases[i - 1][p].commutator(&bases[j - 1][q]);
                    let expected =
                        if k == 0 { comm.is_zero().then(|| zeros(d)) } else { graded_coordinates(n, k, &comm) };
                    let actual = a.twist().apply(i, j, &unit(d, p), &unit(d, q));
                    if expected.as_deref() != Some(actual.as_slice()) {
                        report.mismatches.push(OracleMismatch { i, j, p, q });
                    }
                    report.pairs_checked += 1;
                }
            }
        }
    }
    Ok(report)
}

/// `e_i e_j = sign · e_k`. Each Fano line `(i, i+1, i+3)` multiplies like
/// the quaternion units, `e0` is the unit and `e_i^2 = -1`.
pub fn basis_product(i: usize, j: usize) -> (i8, usize) {
    match (i, j) {
        (0, _) => (1, j),
        (_, 0) => (1, i),
        _ if i == j => (-1, 0),
        _ => {
            let k = star(i, j);
            // (i, j, k) is a cyclic rotation of some (l, l+1, l+3)
            let positive = (1..=7).any(|l| {
                let line = [l, wrap(l + 1), wrap(l + 3)];
                (0..3).any(|r| line[r] == i && line[(r + 1) % 3] == j)
            });
            (if positive { 1 } else { -1 }, k)
        }
    }
}

/// An element of the octonion algebra on `Q^8` with basis `e0..e7`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Octonion(pub Vec<Scalar>);

impl Octonion {
    pub fn basis(i: usize) -> Octonion {
        Octonion(unit(8, i))
    }

    pub fn mul(&self, other: &Octonion) -> Octonion {
        octonion_product(self, other)
    }
}

pub fn octonion_product(x: &Octonion, y: &Octonion) -> Octonion {
    let mut out = zeros(8);
    for (i, a) in x.0.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (j, b) in y.0.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            let (s, k) = basis_product(i, j);
            let ab = a * b;
            if s > 0 {
                out[k] += ab;
            } else {
                out[k] -= ab;
            }
        }
    }
    Octonion(out)
}

/// Matrices of `L_x(y) = xy` and `R_x(y) = yx`.
pub fn mult_operators(x: &Octonion) -> (Matrix, Matrix) {
    let mut l = Matrix::zeros(8, 8);
    let mut r = Matrix::zeros(8, 8);
    for c in 0..8 {
        let e = Octonion::basis(c);
        for (row, v) in x.mul(&e).0.into_iter().enumerate() {
            l[(row, c)] = v;
        }
        for (row, v) in e.mul(x).0.into_iter().enumerate() {
            r[(row, c)] = v;
        }
    }
    (l, r)
}

pub fn one() -> Octonion {
    let mut v = zeros(8);
    v[0] = Scalar::one();
    Octonion(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ComponentMask;
    use crate::catalog::{sigma_b3, sigma_d4};
    use crate::linalg::{int, ints};

    #[test]
    fn phi_on_basis() {
        for n in [7usize, 8] {
            let labels: Vec<usize> = if n == 8 { (0..8).collect() } else { (1..8).collect() };
            for &i in &labels {
                for &j in &labels {
                    let m = phi_labels(n, i, j);
                    assert!(m.is_skew());
                    for &k in &labels {
                        let img = m.mul_vec(&unit(n, position(n, k)));
                        let mut expect = zeros(n);
                        if i == k {
                            expect[position(n, j)] += int(1);
                        }
                        if j == k {
                            expect[position(n, i)] -= int(1);
                        }
                        assert_eq!(img, expect);
                    }
                }
            }
        }
        let x = ints(&[1, 2, 0, 0, 0, 0, 0, 3]);
        assert!(phi(&x, &x).unwrap().is_zero());
        let p = phi_labels(8, 1, 2);
        assert!(p.commutator(&p).is_zero());
        assert!(phi(&x, &ints(&[1])).is_err());
    }

    #[test]
    fn graded_basis_examples() {
        let b1 = graded_basis(8, 1).unwrap();
        let expect = [phi_labels(8, 2, 4), phi_labels(8, 3, 7), phi_labels(8, 5, 6), phi_labels(8, 0, 1)];
        assert_eq!(b1, expect);
        for n in [7, 8] {
            for i in 1..=7 {
                let b = graded_basis(n, i).unwrap();
                assert_eq!(b.len(), n - 4);
                for m in &b {
                    assert!(m.is_skew());
                    assert!(has_degree(n, m, i));
                    for m2 in &b {
                        assert!(m.commutator(m2).is_zero());
                    }
                }
            }
        }
        assert!(graded_basis(8, 0).is_err());
    }

    #[test]
    fn derivation_identity_of_phi() {
        // [ψ, φ_{x,y}] = φ_{ψx, y} + φ_{x, ψy} on basis vectors
        for i in 1..=7 {
            for psi in graded_basis(8, i).unwrap() {
                for a in 0..8 {
                    for b in 0..8 {
                        let x = unit(8, a);
                        let y = unit(8, b);
                        let lhs = psi.commutator(&phi(&x, &y).unwrap());
                        let rhs = phi(&psi.mul_vec(&x), &y).unwrap().add(&phi(&x, &psi.mul_vec(&y)).unwrap());
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn catalog_twists_match_the_oracle() {
        for twist in [sigma_d4(), sigma_b3()] {
            let a = GGAlgebra::new("t", twist, ComponentMask::FULL).unwrap();
            let r = oracle_compare(&a).unwrap();
            assert!(r.is_match(), "{:?}", r.mismatches);
            assert_eq!(r.pairs_checked, 49 * a.coeff_dim() * a.coeff_dim());
        }
    }

    #[test]
    fn flipped_sign_is_caught() {
        let mut twist = sigma_d4();
        let flipped = twist.get(1, 2).unwrap().scale(&int(-1));
        twist.set(1, 2, flipped);
        let a = GGAlgebra::new("bad", twist, ComponentMask::FULL).unwrap();
        let r = oracle_compare(&a).unwrap();
        assert!(!r.is_match());
        assert!(r.mismatches.iter().all(|m| (m.i, m.j) == (1, 2)));
        let g2like = GGAlgebra::new("x", crate::algebra::TwistTable::zero(2), ComponentMask::FULL).unwrap();
        assert!(oracle_compare(&g2like).is_err());
    }

    #[test]
    fn octonion_examples() {
        let e = Octonion::basis;
        assert_eq!(e(1).mul(&e(2)), e(4));
        assert_eq!(e(2).mul(&e(1)), Octonion(e(4).0.iter().map(|x| -x).collect()));
        for i in 1..8 {
            assert_eq!(e(i).mul(&e(i)), Octonion(one().0.iter().map(|x| -x).collect()));
        }
        let (l0, r0) = mult_operators(&one());
        assert_eq!(l0, Matrix::identity(8));
        assert_eq!(r0, Matrix::identity(8));
    }

    #[test]
    fn octonions_are_alternative() {
        for a in 0..8 {
            let x = Octonion::basis(a);
            let xx = x.mul(&x);
            for b in 0..8 {
                let y = Octonion::basis(b);
                assert_eq!(xx.mul(&y), x.mul(&x.mul(&y)), "left alternativity e{a} e{b}");
                assert_eq!(y.mul(&xx), y.mul(&x).mul(&x), "right alternativity e{a} e{b}");
            }
        }
        // sums of basis elements as well, since alternativity is not linear
        let x = Octonion(ints(&[1, 2, 0, -1, 0, 3, 0, 1]));
        let y = Octonion(ints(&[0, 1, 1, 0, 2, 0, -1, 0]));
        assert_eq!(x.mul(&x).mul(&y), x.mul(&x.mul(&y)));
        assert_eq!(y.mul(&x.mul(&x)), y.mul(&x).mul(&x));
    }
}
