//! The operators `δ(i)_{(a,b,c,d)}`, the three 8-dimensional
//! representations of the `so8` algebra on `G^×`, the 7-dimensional ones of
//! `so7` and `g2`, and the triality automorphism.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{AlgebraElement, GGAlgebra};
use crate::catalog::{catalog_algebra, AlgebraKind, MaskKind};
use crate::error::{Error, Result};
use crate::fano::wrap;
use crate::linalg::{frac, ints, scalar_product, unit, zeros, Matrix, Scalar, Subspace};
use crate::structure::StructureConstants;

/// `u1 = (1,1,1,-1)`; reflecting in it turns `ρ1` into `ρ2`.
pub fn u1() -> Vec<Scalar> {
    ints(&[1, 1, 1, -1])
}

/// `u2 = (1,1,1,1)`; reflecting in it turns `ρ1` into `ρ3`.
pub fn u2() -> Vec<Scalar> {
    ints(&[1, 1, 1, 1])
}

/// The skew map on `Q^8` sending `e_{i+1} ↦ a e_{i+3}`, `e_{i+2} ↦ b e_{i+6}`,
/// `e_{i+4} ↦ c e_{i+5}`, `e0 ↦ d e_i`, with the opposite signs on the
/// way back.
pub fn delta(i: usize, coeffs: &[Scalar]) -> Result<Matrix> {
    if !(1..=7).contains(&i) {
        return Err(Error::InvalidIndex(i));
    }
    if coeffs.len() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, actual: coeffs.len() });
    }
    let mut m = Matrix::zeros(8, 8);
    let pairs = [(wrap(i + 1), wrap(i + 3)), (wrap(i + 2), wrap(i + 6)), (wrap(i + 4), wrap(i + 5)), (0, i)];
    for ((from, to), c) in pairs.into_iter().zip(coeffs) {
        m[(to, from)] = c.clone();
        m[(from, to)] = -c.clone();
    }
    Ok(m)
}

/// `s_u(v) = v - 2 <v,u>/<u,u> u`.
pub fn reflection(u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
    let uu = scalar_product(u, u)?;
    if uu.is_zero() {
        return Err(Error::ZeroVector);
    }
    let c = frac(2, 1) * scalar_product(v, u)? / uu;
    Ok(v.iter().zip(u).map(|(x, y)| x - &c * y).collect())
}

/// Matrix of `s_u` on `Q^n`.
pub fn reflection_matrix(u: &[Scalar]) -> Result<Matrix> {
    let n = u.len();
    let cols = (0..n).map(|k| reflection(u, &unit(n, k))).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(cols).transpose())
}

/// `½ [[1,-1,-1,1], [-1,1,-1,1], [-1,-1,1,1], [-1,-1,-1,-1]]`, acting on each
/// coefficient vector of the `so8` algebra.
pub fn triality_matrix() -> Matrix {
    Matrix::from_int_rows(&[&[1, -1, -1, 1], &[-1, 1, -1, 1], &[-1, -1, 1, 1], &[-1, -1, -1, -1]]).scale(&frac(1, 2))
}

/// `θ(v g_i) = T v g_i` with `T` the triality matrix.
pub fn triality(x: &AlgebraElement) -> Result<AlgebraElement> {
    apply_degree_wise(&triality_matrix(), x)
}

/// Applies a coefficient map to every homogeneous component.
pub fn apply_degree_wise(m: &Matrix, x: &AlgebraElement) -> Result<AlgebraElement> {
    if m.cols() != x.dim() || m.rows() != x.dim() {
        return Err(Error::DimensionMismatch { expected: m.cols(), actual: x.dim() });
    }
    AlgebraElement::from_components(x.components().iter().map(|c| m.mul_vec(c)).collect())
}

/// The matrix on the algebra's flat basis of `v g_i ↦ (m v) g_i`.
pub fn degree_wise_matrix(a: &GGAlgebra, m: &Matrix) -> Result<Matrix> {
    let d = a.coeff_dim();
    if m.rows() != d || m.cols() != d {
        return Err(Error::DimensionMismatch { expected: d, actual: m.rows() });
    }
    let mut out = Matrix::zeros(a.dim(), a.dim());
    for block in 0..a.mask().len() {
        for r in 0..d {
            for c in 0..d {
                out[(block * d + r, block * d + c)] = m[(r, c)].clone();
            }
        }
    }
    Ok(out)
}

/// `{x : φ(x) = x}` for an automorphism `φ` given on the flat basis.
pub fn fixed_subalgebra(a: &GGAlgebra, auto: &Matrix) -> Result<Subspace> {
    if !a.structure().is_automorphism(auto) {
        return Err(Error::NotAutomorphism);
    }
    Ok(auto.sub(&Matrix::identity(a.dim())).kernel())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepKind {
    Rho1,
    Rho2,
    Rho3,
    B3,
    G2,
}

impl RepKind {
    pub const ALL: [RepKind; 5] = [RepKind::Rho1, RepKind::Rho2, RepKind::Rho3, RepKind::B3, RepKind::G2];

    pub fn name(self) -> &'static str {
        match self {
            RepKind::Rho1 => "rho1",
            RepKind::Rho2 => "rho2",
            RepKind::Rho3 => "rho3",
            RepKind::B3 => "b3",
            RepKind::G2 => "g2",
        }
    }

    pub fn source(self) -> AlgebraKind {
        match self {
            RepKind::Rho1 | RepKind::Rho2 | RepKind::Rho3 => AlgebraKind::D4,
            RepKind::B3 => AlgebraKind::B3,
            RepKind::G2 => AlgebraKind::G2,
        }
    }
}

impl FromStr for RepKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RepKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown representation {s:?}")))
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `ρ_k(v g_i)` for `k = 1, 2, 3`: `δ(i)` of `v`, `s_{u1}(v)`, `s_{u2}(v)`.
pub fn rho(k: u8, x: &AlgebraElement) -> Result<Matrix> {
    if x.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, actual: x.dim() });
    }
    if !x.component(0).iter().all(Zero::is_zero) {
        return Err(Error::OutsideMask(0));
    }
    let mut out = Matrix::zeros(8, 8);
    for i in 1..=7 {
        let v = x.component(i);
        let c = match k {
            1 => v.to_vec(),
            2 => reflection(&u1(), v)?,
            3 => reflection(&u2(), v)?,
            _ => return Err(Error::Unsupported(format!("rho{k}"))),
        };
        out = out.add(&delta(i, &c)?);
    }
    Ok(out)
}

/// Drops `e0` from an operator on `Q^8`.
fn restrict_to_imaginary(m: &Matrix) -> Matrix {
    Matrix::from_rows((1..8).map(|r| (1..8).map(|c| m[(r, c)].clone()).collect()).collect())
}

/// `ρ_{b3}((a,b,c) g_i) = δ(i)_{(a,b,c,0)}` on `span{e1..e7}`; for `g2` the
/// coefficients are `{s1, s2}` coordinates.
pub fn rho7(which: AlgebraKind, x: &AlgebraElement) -> Result<Matrix> {
    let d = match which {
        AlgebraKind::B3 => 3,
        AlgebraKind::G2 => 2,
        AlgebraKind::D4 => return Err(Error::Unsupported("rho7 is defined for b3 and g2".into())),
    };
    if x.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, actual: x.dim() });
    }
    if !x.component(0).iter().all(Zero::is_zero) {
        return Err(Error::OutsideMask(0));
    }
    let mut out = Matrix::zeros(8, 8);
    for i in 1..=7 {
        let mut c = which.ambient_coefficients(x.component(i));
        c.push(Scalar::zero());
        out = out.add(&delta(i, &c)?);
    }
    Ok(restrict_to_imaginary(&out))
}

/// `ρ_{g2}(s g_i)` from its closed form in the basis `B_i = {e_i, …, e_{i+6}}`,
/// written back in the standard basis `e1..e7`. `which` is 0 for `s1`, 1 for `s2`.
pub fn rho_g2_closed_form(i: usize, which: usize) -> Matrix {
    let image = |a: &[Scalar]| -> Vec<Scalar> {
        let neg = |x: &Scalar| -x.clone();
        let two = Scalar::from_integer(2.into());
        match which {
            0 => {
                vec![Scalar::zero(), Scalar::zero(), neg(&a[6]), Scalar::zero(), a[5].clone(), neg(&a[4]), a[2].clone()]
            }
            _ => {
                vec![Scalar::zero(), -(&two * &a[3]), a[6].clone(), &two * &a[1], a[5].clone(), neg(&a[4]), neg(&a[2])]
            }
        }
    };
    let mut m = Matrix::zeros(7, 7);
    for k in 0..7 {
        let out = image(&unit(7, k));
        let col = wrap(i + k) - 1;
        for (r, v) in out.into_iter().enumerate() {
            m[(wrap(i + r) - 1, col)] = v;
        }
    }
    m
}

/// A representation given by the images of the source algebra's flat basis.
#[derive(Debug, Clone)]
pub struct Representation {
    pub name: String,
    pub module_dim: usize,
    pub images: Vec<Matrix>,
}

impl Representation {
    /// One of the catalog representations, on the `G^×` part of its source algebra.
    pub fn catalog(kind: RepKind) -> Result<(Representation, GGAlgebra)> {
        let alg = catalog_algebra(kind.source(), MaskKind::NonNeutral);
        let images = alg
            .basis_labels()
            .into_iter()
            .map(|l| {
                let x = alg.basis_element(l);
                match kind {
                    RepKind::Rho1 => rho(1, &x),
                    RepKind::Rho2 => rho(2, &x),
                    RepKind::Rho3 => rho(3, &x),
                    RepKind::B3 => rho7(AlgebraKind::B3, &x),
                    RepKind::G2 => rho7(AlgebraKind::G2, &x),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let module_dim = images[0].rows();
        Ok((Representation { name: kind.name().into(), module_dim, images }, alg))
    }

    pub fn from_images(name: impl Into<String>, images: Vec<Matrix>) -> Result<Self> {
        let n = images.first().map_or(0, Matrix::rows);
        if let Some(bad) = images.iter().find(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::DimensionMismatch { expected: n, actual: bad.rows() });
        }
        Ok(Representation { name: name.into(), module_dim: n, images })
    }

    /// Image of a flat coordinate vector.
    pub fn image(&self, x: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.module_dim, self.module_dim);
        for (c, m) in x.iter().zip(&self.images) {
            if !c.is_zero() {
                out.add_scaled(c, m);
            }
        }
        out
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if self.images.len() != other.images.len() {
            return Err(Error::DimensionMismatch { expected: self.images.len(), actual: other.images.len() });
        }
        let images = self.images.iter().zip(&other.images).map(|(a, b)| a.direct_sum(b)).collect();
        Representation::from_images(format!("{}+{}", self.name, other.name), images)
    }

    /// `x ↦ ρ(φ x)` for a linear map `φ` on the flat basis.
    pub fn compose(&self, m: &Matrix) -> Representation {
        let images = (0..m.cols()).map(|c| self.image(&m.column(c))).collect();
        Representation { name: format!("{}∘φ", self.name), module_dim: self.module_dim, images }
    }
}

/// Basis pairs `(a, b)`, `a < b`, with `ρ([b_a, b_b]) != [ρ(b_a), ρ(b_b)]`.
pub fn verify_homomorphism(rep: &Representation, table: &StructureConstants) -> Result<Vec<(usize, usize)>> {
    let n = table.dim();
    if rep.images.len() != n {
        return Err(Error::DimensionMismatch { expected: n, actual: rep.images.len() });
    }
    let bad = (0..n)
        .into_par_iter()
        .flat_map_iter(|a| {
            (a + 1..n)
                .filter(|&b| {
                    let mut lhs = Matrix::zeros(rep.module_dim, rep.module_dim);
                    for (c, v) in table.basis_bracket(a, b) {
                        lhs.add_scaled(v, &rep.images[*c]);
                    }
                    lhs != rep.images[a].commutator(&rep.images[b])
                })
                .map(move |b| (a, b))
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(bad)
}

/// `dim {T : T ρ_A(x) = ρ_B(x) T for every basis x}`.
pub fn intertwiner_dim(a: &Representation, b: &Representation) -> Result<usize> {
    if a.images.len() != b.images.len() {
        return Err(Error::DimensionMismatch { expected: a.images.len(), actual: b.images.len() });
    }
    let (na, nb) = (a.module_dim, b.module_dim);
    let unknowns = na * nb;
    // T is nb × na with T[r][c] = t[r * na + c]
    let mut rows = Subspace::zero(unknowns);
    for (ma, mb) in a.images.iter().zip(&b.images) {
        for r in 0..nb {
            for c in 0..na {
                let mut eq = zeros(unknowns);
                for k in 0..na {
                    eq[r * na + k] += &ma[(k, c)];
                }
                for k in 0..nb {
                    eq[k * na + c] -= &mb[(r, k)];
                }
                rows.insert(eq);
            }
        }
        if rows.is_full() {
            break;
        }
    }
    Ok(unknowns - rows.dim())
}

/// Cyclic-vector test: every standard basis vector generates the whole
/// module under the operators.
pub fn verify_irreducible(rep: &Representation) -> bool {
    let n = rep.module_dim;
    (0..n).all(|k| {
        let mut span = Subspace::from_vectors(n, [unit(n, k)]);
        let mut frontier = vec![unit(n, k)];
        while let Some(v) = frontier.pop() {
            for m in &rep.images {
                let w = m.mul_vec(&v);
                if span.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        span.is_full()
    })
}

/// Whether the operators generate all of `End(Q^n)` as an associative
/// algebra, i.e. the module is absolutely irreducible.
pub fn generates_full_matrix_algebra(rep: &Representation) -> bool {
    let n = rep.module_dim;
    let flat = |m: &Matrix| m.as_slice().to_vec();
    let mut span = Subspace::from_vectors(n * n, [flat(&Matrix::identity(n))]);
    let mut frontier = vec![Matrix::identity(n)];
    while let Some(p) = frontier.pop() {
        for m in &rep.images {
            let q = m.mul(&p);
            if span.insert(flat(&q)) {
                frontier.push(q);
            }
        }
        if span.is_full() {
            return true;
        }
    }
    span.is_full()
}
