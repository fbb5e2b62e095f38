//! The concrete twists: `so8` on `Q^4`, `so7` on `Q^3`, and `g2` on the
//! twist-closed plane `a1 + a2 + a3 = 0` of `Q^3`.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{ComponentMask, GGAlgebra, Tensor3, TwistTable};
use crate::error::{Error, Result};
use crate::fano::wrap;
use crate::linalg::{int, ints, scalar_product, zeros, Matrix, Scalar};

/// `coef · a_p · b_q` contributing to one output coordinate (1-based `p`, `q`).
type Term = (i64, usize, usize);

// σ_{i,i+1}, σ_{i,i+2}, σ_{i,i+4} for so8; identical for every base index i.
const D4_OFFSET_1: [&[Term]; 4] =
    [&[(-1, 2, 1), (-1, 3, 3)], &[(-1, 2, 3), (-1, 3, 1)], &[(1, 1, 2), (1, 4, 4)], &[(1, 1, 4), (1, 4, 2)]];
const D4_OFFSET_2: [&[Term]; 4] =
    [&[(1, 2, 3), (1, 4, 4)], &[(-1, 1, 1), (-1, 3, 2)], &[(-1, 1, 2), (-1, 3, 1)], &[(1, 2, 4), (1, 4, 3)]];
const D4_OFFSET_4: [&[Term]; 4] =
    [&[(-1, 1, 2), (-1, 2, 3)], &[(1, 3, 1), (1, 4, 4)], &[(-1, 1, 3), (-1, 2, 2)], &[(1, 3, 4), (1, 4, 1)]];

const B3_OFFSET_1: [&[Term]; 3] = [&[(-1, 2, 1), (-1, 3, 3)], &[(-1, 2, 3), (-1, 3, 1)], &[(1, 1, 2)]];
const B3_OFFSET_2: [&[Term]; 3] = [&[(1, 2, 3)], &[(-1, 1, 1), (-1, 3, 2)], &[(-1, 1, 2), (-1, 3, 1)]];
const B3_OFFSET_4: [&[Term]; 3] = [&[(-1, 1, 2), (-1, 2, 3)], &[(1, 3, 1)], &[(-1, 1, 3), (-1, 2, 2)]];

fn pattern_tensor(coords: &[&[Term]]) -> Tensor3 {
    let d = coords.len();
    let mut t = Tensor3::zeros(d);
    for (r, terms) in coords.iter().enumerate() {
        for &(c, p, q) in terms.iter() {
            *t.get_mut(p - 1, q - 1, r) += int(c);
        }
    }
    t
}

/// Fills `σ_{i,i+k}` for every `i ∈ 1..=7`: offsets 1, 2, 4 from the
/// patterns, offsets 6, 5, 3 by `σ_{i,i+6}(r,s) = -σ_{i,i+1}(s,r)` etc.
/// Everything touching `g0` and the diagonal stays zero.
fn cyclic_twist(off1: &[&[Term]], off2: &[&[Term]], off4: &[&[Term]]) -> TwistTable {
    let t1 = pattern_tensor(off1);
    let t2 = pattern_tensor(off2);
    let t4 = pattern_tensor(off4);
    let mut twist = TwistTable::zero(t1.dim());
    for i in 1..=7 {
        twist.set(i, wrap(i + 1), t1.clone());
        twist.set(i, wrap(i + 2), t2.clone());
        twist.set(i, wrap(i + 4), t4.clone());
        twist.set(i, wrap(i + 3), t4.neg_swapped());
        twist.set(i, wrap(i + 5), t2.neg_swapped());
        twist.set(i, wrap(i + 6), t1.neg_swapped());
    }
    twist
}

/// Twist of the `so8` series on `V = Q^4`.
pub fn sigma_d4() -> TwistTable {
    cyclic_twist(&D4_OFFSET_1, &D4_OFFSET_2, &D4_OFFSET_4)
}

/// Twist of the `so7` series on `W = Q^3`.
pub fn sigma_b3() -> TwistTable {
    cyclic_twist(&B3_OFFSET_1, &B3_OFFSET_2, &B3_OFFSET_4)
}

/// `s1 = (0, 1, -1)` and `s2 = (2, -1, -1)`, spanning `S = <(1,1,1)>^⊥`.
pub fn s_basis() -> [Vec<Scalar>; 2] {
    [ints(&[0, 1, -1]), ints(&[2, -1, -1])]
}

/// Twist of the `g2` series, in `{s1, s2}` coordinates, obtained by
/// restricting the `so7` twist to `S`.
pub fn sigma_g2() -> TwistTable {
    let b3 = GGAlgebra::new("b3", sigma_b3(), ComponentMask::FULL).expect("b3 twist is mask-closed");
    b3.restrict(&s_basis()).expect("S is twist-closed").twist().clone()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    D4,
    B3,
    G2,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 3] = [AlgebraKind::D4, AlgebraKind::B3, AlgebraKind::G2];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::D4 => "d4",
            AlgebraKind::B3 => "b3",
            AlgebraKind::G2 => "g2",
        }
    }

    pub fn twist(self) -> TwistTable {
        match self {
            AlgebraKind::D4 => sigma_d4(),
            AlgebraKind::B3 => sigma_b3(),
            AlgebraKind::G2 => sigma_g2(),
        }
    }

    /// The constant `c` with `κ(r g_i, s g_j) = c <r, s> δ_ij` on the
    /// derived part.
    pub fn killing_constant(self) -> i64 {
        match self {
            AlgebraKind::D4 => -12,
            AlgebraKind::B3 => -10,
            AlgebraKind::G2 => -8,
        }
    }

    /// Gram matrix of the ambient scalar product on the coefficient basis.
    pub fn coefficient_gram(self) -> Matrix {
        match self {
            AlgebraKind::D4 => Matrix::identity(4),
            AlgebraKind::B3 => Matrix::identity(3),
            AlgebraKind::G2 => {
                let s = s_basis();
                Matrix::from_rows(s.iter().map(|a| s.iter().map(|b| scalar_product(a, b).unwrap()).collect()).collect())
            }
        }
    }

    /// Coefficient vector in the ambient `Q^4` / `Q^3` of a coordinate vector.
    pub fn ambient_coefficients(self, coords: &[Scalar]) -> Vec<Scalar> {
        match self {
            AlgebraKind::D4 | AlgebraKind::B3 => coords.to_vec(),
            AlgebraKind::G2 => {
                let mut out = zeros(3);
                for (c, s) in coords.iter().zip(s_basis()) {
                    crate::linalg::axpy(&mut out, c, &s);
                }
                out
            }
        }
    }
}

impl FromStr for AlgebraKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "d4" => Ok(AlgebraKind::D4),
            "b3" => Ok(AlgebraKind::B3),
            "g2" => Ok(AlgebraKind::G2),
            other => Err(Error::Parse(format!("unknown algebra {other:?} (expected d4, b3 or g2)"))),
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MaskKind {
    Full,
    /// `G^×`, dropping the neutral component.
    NonNeutral,
}

impl MaskKind {
    pub const ALL: [MaskKind; 2] = [MaskKind::Full, MaskKind::NonNeutral];

    pub fn mask(self) -> ComponentMask {
        match self {
            MaskKind::Full => ComponentMask::FULL,
            MaskKind::NonNeutral => ComponentMask::NON_NEUTRAL,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MaskKind::Full => "full",
            MaskKind::NonNeutral => "gx",
        }
    }
}

impl FromStr for MaskKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(MaskKind::Full),
            "gx" => Ok(MaskKind::NonNeutral),
            other => Err(Error::Parse(format!("unknown mask {other:?} (expected full or gx)"))),
        }
    }
}

impl fmt::Display for MaskKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn catalog_algebra(kind: AlgebraKind, mask: MaskKind) -> GGAlgebra {
    GGAlgebra::new(kind.name(), kind.twist(), mask.mask()).expect("catalog twists are mask-closed")
}
