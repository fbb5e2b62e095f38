//! The generalized group algebra data model and its twisted bracket
//! `[r g_i, s g_j] = σ_{i,j}(r, s) g_{i∗j}`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fano::star;
use crate::linalg::{self, express_in_basis, is_zero_vec, zeros, Matrix, Scalar, Subspace};
use crate::structure::{Fingerprint, LieReport, StructureConstants};

/// A bilinear map `Q^d × Q^d → Q^d`, stored as `t[p][q][r]` with
/// `σ(e_p, e_q) = Σ_r t[p][q][r] e_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    d: usize,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(d: usize) -> Self {
        Tensor3 { d, data: zeros(d * d * d) }
    }

    /// Builds the tensor of a bilinear map given by its values on basis pairs.
    pub fn from_fn(d: usize, mut f: impl FnMut(usize, usize) -> Vec<Scalar>) -> Self {
        let mut t = Tensor3::zeros(d);
        for p in 0..d {
            for q in 0..d {
                let v = f(p, q);
                assert_eq!(v.len(), d);
                for (r, x) in v.into_iter().enumerate() {
                    *t.get_mut(p, q, r) = x;
                }
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn get(&self, p: usize, q: usize, r: usize) -> &Scalar {
        &self.data[(p * self.d + q) * self.d + r]
    }

    #[inline]
    pub fn get_mut(&mut self, p: usize, q: usize, r: usize) -> &mut Scalar {
        &mut self.data[(p * self.d + q) * self.d + r]
    }

    /// `σ(e_p, e_q)` as a coefficient vector.
    pub fn basis_value(&self, p: usize, q: usize) -> &[Scalar] {
        let start = (p * self.d + q) * self.d;
        &self.data[start..start + self.d]
    }

    pub fn apply(&self, r: &[Scalar], s: &[Scalar]) -> Vec<Scalar> {
        let mut out = zeros(self.d);
        for (p, a) in r.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (q, b) in s.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                linalg::axpy(&mut out, &ab, self.basis_value(p, q));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn scale(&self, c: &Scalar) -> Tensor3 {
        Tensor3 { d: self.d, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// The map `(r, s) ↦ -σ(s, r)`.
    pub fn neg_swapped(&self) -> Tensor3 {
        Tensor3::from_fn(self.d, |p, q| self.basis_value(q, p).iter().map(|x| -x).collect())
    }

    /// Nested `[p][q][r]` view, used by the JSON format.
    pub fn to_nested(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.d).map(|p| (0..self.d).map(|q| self.basis_value(p, q).to_vec()).collect()).collect()
    }

    pub fn from_nested(nested: Vec<Vec<Vec<Scalar>>>) -> Result<Tensor3> {
        let d = nested.len();
        let mut t = Tensor3::zeros(d);
        for (p, plane) in nested.into_iter().enumerate() {
            if plane.len() != d {
                return Err(Error::DimensionMismatch { expected: d, actual: plane.len() });
            }
            for (q, row) in plane.into_iter().enumerate() {
                if row.len() != d {
                    return Err(Error::DimensionMismatch { expected: d, actual: row.len() });
                }
                for (r, x) in row.into_iter().enumerate() {
                    *t.get_mut(p, q, r) = x;
                }
            }
        }
        Ok(t)
    }
}

/// The twist `σ: G × G → Bil(V × V, V)`, one tensor per ordered pair of labels.
/// Missing entries are the zero map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistTable {
    d: usize,
    maps: Vec<Option<Tensor3>>,
}

impl TwistTable {
    pub fn zero(d: usize) -> Self {
        TwistTable { d, maps: vec![None; 64] }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Tensor3> {
        self.maps[i * 8 + j].as_ref()
    }

    pub fn set(&mut self, i: usize, j: usize, t: Tensor3) {
        assert_eq!(t.dim(), self.d, "tensor dimension");
        self.maps[i * 8 + j] = if t.is_zero() { None } else { Some(t) };
    }

    /// `σ_{i,j}(r, s)`.
    pub fn apply(&self, i: usize, j: usize, r: &[Scalar], s: &[Scalar]) -> Vec<Scalar> {
        match self.get(i, j) {
            Some(t) => t.apply(r, s),
            None => zeros(self.d),
        }
    }

    /// Ordered pairs with a nonzero map, in row-major order.
    pub fn nonzero_pairs(&self) -> Vec<(usize, usize)> {
        (0..64).filter(|k| self.maps[*k].is_some()).map(|k| (k / 8, k % 8)).collect()
    }

    /// The twist `(i, j) ↦ ε(i, j) σ_{i,j}`.
    pub fn scaled_by(&self, eps: impl Fn(usize, usize) -> Scalar) -> TwistTable {
        let mut out = TwistTable::zero(self.d);
        for (i, j) in self.nonzero_pairs() {
            let c = eps(i, j);
            if !c.is_zero() {
                out.set(i, j, self.get(i, j).unwrap().scale(&c));
            }
        }
        out
    }

    /// Pairs violating `σ_{j,i}(s, r) = -σ_{i,j}(r, s)` tensor-wise.
    pub fn skew_violations(&self) -> Vec<(usize, usize)> {
        let zero = Tensor3::zeros(self.d);
        let mut out = Vec::new();
        for i in 0..8 {
            for j in i..8 {
                let a = self.get(i, j).unwrap_or(&zero);
                let b = self.get(j, i).unwrap_or(&zero);
                if a.neg_swapped() != *b {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// A set of active group components, as an 8-bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ComponentMask(u8);

impl ComponentMask {
    pub const FULL: ComponentMask = ComponentMask(0xff);
    /// `G^×`: every component except the neutral one.
    pub const NON_NEUTRAL: ComponentMask = ComponentMask(0xfe);

    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut m = 0u8;
        for &i in indices {
            if i >= 8 {
                return Err(Error::InvalidIndex(i));
            }
            m |= 1 << i;
        }
        Ok(ComponentMask(m))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 8 && self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn indices(self) -> Vec<usize> {
        (0..8).filter(|&i| self.contains(i)).collect()
    }
}

/// Basis vector `e_p g_i` of a generalized group algebra (`coord` is 0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisLabel {
    pub component: usize,
    pub coord: usize,
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}g{}", self.coord + 1, self.component)
    }
}

/// A formal sum `Σ r_{g_i} g_i`, one coefficient vector per label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    coeffs: Vec<Vec<Scalar>>,
}

impl AlgebraElement {
    pub fn zero(d: usize) -> Self {
        AlgebraElement { coeffs: vec![zeros(d); 8] }
    }

    /// `r g_i`.
    pub fn homogeneous(i: usize, r: Vec<Scalar>) -> Result<Self> {
        if i >= 8 {
            return Err(Error::InvalidIndex(i));
        }
        let mut x = AlgebraElement::zero(r.len());
        x.coeffs[i] = r;
        Ok(x)
    }

    pub fn from_components(coeffs: Vec<Vec<Scalar>>) -> Result<Self> {
        if coeffs.len() != 8 {
            return Err(Error::DimensionMismatch { expected: 8, actual: coeffs.len() });
        }
        let d = coeffs[0].len();
        if let Some(bad) = coeffs.iter().find(|c| c.len() != d) {
            return Err(Error::DimensionMismatch { expected: d, actual: bad.len() });
        }
        Ok(AlgebraElement { coeffs })
    }

    pub fn dim(&self) -> usize {
        self.coeffs[0].len()
    }

    pub fn component(&self, i: usize) -> &[Scalar] {
        &self.coeffs[i]
    }

    pub fn components(&self) -> &[Vec<Scalar>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| is_zero_vec(c))
    }

    pub fn support(&self) -> Vec<usize> {
        (0..8).filter(|&i| !is_zero_vec(&self.coeffs[i])).collect()
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        AlgebraElement { coeffs: self.coeffs.iter().map(|v| v.iter().map(|x| x * c).collect()).collect() }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        }
    }
}

/// A generalized group algebra `V^σ[G]` restricted to the components in
/// `mask`. Mask closure is checked at construction, and the basis-level
/// structure constants are materialized once.
#[derive(Debug, Clone)]
pub struct GGAlgebra {
    name: String,
    twist: TwistTable,
    mask: ComponentMask,
    table: StructureConstants,
}

impl GGAlgebra {
    pub fn new(name: impl Into<String>, twist: TwistTable, mask: ComponentMask) -> Result<Self> {
        for (i, j) in twist.nonzero_pairs() {
            let k = star(i, j);
            if mask.contains(i) && mask.contains(j) && !mask.contains(k) {
                return Err(Error::MaskNotClosed(i, j, k));
            }
        }
        let table = build_table(&twist, mask);
        Ok(GGAlgebra { name: name.into(), twist, mask, table })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coeff_dim(&self) -> usize {
        self.twist.dim()
    }

    pub fn twist(&self) -> &TwistTable {
        &self.twist
    }

    pub fn mask(&self) -> ComponentMask {
        self.mask
    }

    /// `d × |mask|`.
    pub fn dim(&self) -> usize {
        self.coeff_dim() * self.mask.len()
    }

    pub fn structure(&self) -> &StructureConstants {
        &self.table
    }

    /// Basis ordered lexicographically by `(component, coord)` over the mask.
    pub fn basis_labels(&self) -> Vec<BasisLabel> {
        let d = self.coeff_dim();
        self.mask
            .indices()
            .into_iter()
            .flat_map(|i| (0..d).map(move |p| BasisLabel { component: i, coord: p }))
            .collect()
    }

    pub fn basis_index(&self, label: BasisLabel) -> Option<usize> {
        if !self.mask.contains(label.component) || label.coord >= self.coeff_dim() {
            return None;
        }
        let before = self.mask.indices().iter().filter(|&&i| i < label.component).count();
        Some(before * self.coeff_dim() + label.coord)
    }

    pub fn basis_element(&self, label: BasisLabel) -> AlgebraElement {
        AlgebraElement::homogeneous(label.component, linalg::unit(self.coeff_dim(), label.coord)).unwrap()
    }

    fn check_element(&self, x: &AlgebraElement) -> Result<()> {
        if x.dim() != self.coeff_dim() {
            return Err(Error::DimensionMismatch { expected: self.coeff_dim(), actual: x.dim() });
        }
        if let Some(i) = x.support().into_iter().find(|&i| !self.mask.contains(i)) {
            return Err(Error::OutsideMask(i));
        }
        Ok(())
    }

    pub fn flatten(&self, x: &AlgebraElement) -> Result<Vec<Scalar>> {
        self.check_element(x)?;
        Ok(self.mask.indices().into_iter().flat_map(|i| x.component(i).to_vec()).collect())
    }

    pub fn unflatten(&self, v: &[Scalar]) -> Result<AlgebraElement> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), actual: v.len() });
        }
        let d = self.coeff_dim();
        let mut x = AlgebraElement::zero(d);
        for (n, i) in self.mask.indices().into_iter().enumerate() {
            x.coeffs[i] = v[n * d..(n + 1) * d].to_vec();
        }
        Ok(x)
    }

    /// The bilinear extension of `[r g_i, s g_j] = σ_{i,j}(r, s) g_{i∗j}`.
    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_element(x)?;
        self.check_element(y)?;
        let mut out = AlgebraElement::zero(self.coeff_dim());
        for i in x.support() {
            for j in y.support() {
                if self.twist.get(i, j).is_some() {
                    let v = self.twist.apply(i, j, x.component(i), y.component(j));
                    let k = star(i, j);
                    for (o, a) in out.coeffs[k].iter_mut().zip(v) {
                        *o += a;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Skew-symmetry and Jacobi violations over the basis.
    pub fn verify_lie(&self) -> LieReport {
        self.table.lie_report()
    }

    pub fn is_lie(&self) -> bool {
        self.verify_lie().is_lie()
    }

    pub fn label(&self, index: usize) -> BasisLabel {
        let d = self.coeff_dim();
        BasisLabel { component: self.mask.indices()[index / d], coord: index % d }
    }

    pub fn center(&self) -> Subspace {
        self.table.center()
    }

    pub fn derived_series(&self) -> Vec<Subspace> {
        self.table.derived_series()
    }

    pub fn lower_central_series(&self) -> Vec<Subspace> {
        self.table.lower_central_series()
    }

    /// Gram matrix of `κ(x, y) = tr(ad x ad y)` on the basis.
    pub fn killing(&self) -> Matrix {
        self.table.killing_gram()
    }

    /// The `d × d` block `κ(e_p g_i, e_q g_j)` of the Killing Gram matrix.
    pub fn killing_block(&self, gram: &Matrix, i: usize, j: usize) -> Result<Matrix> {
        let d = self.coeff_dim();
        let row = self.basis_index(BasisLabel { component: i, coord: 0 }).ok_or(Error::OutsideMask(i))?;
        let col = self.basis_index(BasisLabel { component: j, coord: 0 }).ok_or(Error::OutsideMask(j))?;
        Ok(Matrix::from_rows((0..d).map(|p| (0..d).map(|q| gram[(row + p, col + q)].clone()).collect()).collect()))
    }

    pub fn killing_radical(&self) -> Subspace {
        self.killing().kernel()
    }

    pub fn fingerprint(&self) -> Fingerprint {
        self.table.fingerprint()
    }

    /// The subspace `V g_i` over the flat basis.
    pub fn component_subspace(&self, i: usize) -> Subspace {
        let d = self.coeff_dim();
        let vecs = (0..d).filter_map(|p| {
            self.basis_index(BasisLabel { component: i, coord: p }).map(|k| linalg::unit(self.dim(), k))
        });
        Subspace::from_vectors(self.dim(), vecs)
    }

    /// Re-expresses the twist on a twist-closed coefficient subspace spanned
    /// by `basis`; the new coordinates are those relative to `basis`.
    pub fn restrict(&self, basis: &[Vec<Scalar>]) -> Result<GGAlgebra> {
        let k = basis.len();
        for b in basis {
            if b.len() != self.coeff_dim() {
                return Err(Error::DimensionMismatch { expected: self.coeff_dim(), actual: b.len() });
            }
        }
        let mut twist = TwistTable::zero(k);
        for (i, j) in self.twist.nonzero_pairs() {
            let t = self.twist.get(i, j).unwrap();
            let mut values = Vec::with_capacity(k * k);
            for p in 0..k {
                for q in 0..k {
                    let w = t.apply(&basis[p], &basis[q]);
                    match express_in_basis(basis, &w)? {
                        Some(c) => values.push(c),
                        None => return Err(Error::NotTwistClosed(i, j)),
                    }
                }
            }
            let mut values = values.into_iter();
            twist.set(i, j, Tensor3::from_fn(k, |_, _| values.next().unwrap()));
        }
        GGAlgebra::new(format!("{}|restricted", self.name), twist, self.mask)
    }

    /// Same twist on a different set of components.
    pub fn with_mask(&self, mask: ComponentMask) -> Result<GGAlgebra> {
        GGAlgebra::new(self.name.clone(), self.twist.clone(), mask)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> GGAlgebra {
        self.name = name.into();
        self
    }
}

fn build_table(twist: &TwistTable, mask: ComponentMask) -> StructureConstants {
    let d = twist.dim();
    let comps = mask.indices();
    let pos = |i: usize| comps.iter().position(|&c| c == i);
    let n = d * comps.len();
    let mut entries = vec![Vec::new(); n * n];
    for (a_comp, &i) in comps.iter().enumerate() {
        for (b_comp, &j) in comps.iter().enumerate() {
            let Some(t) = twist.get(i, j) else { continue };
            let Some(k_comp) = pos(star(i, j)) else { continue };
            for p in 0..d {
                for q in 0..d {
                    let a = a_comp * d + p;
                    let b = b_comp * d + q;
                    let row: &mut Vec<(usize, Scalar)> = &mut entries[a * n + b];
                    for (r, v) in t.basis_value(p, q).iter().enumerate() {
                        if !v.is_zero() {
                            row.push((k_comp * d + r, v.clone()));
                        }
                    }
                }
            }
        }
    }
    StructureConstants::from_sparse(n, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ints;

    fn toy() -> TwistTable {
        // one nonzero bracket [e1 g1, e1 g2] = e1 g4 and its skew partner
        let mut t = TwistTable::zero(1);
        let one = Tensor3::from_fn(1, |_, _| ints(&[1]));
        t.set(1, 2, one.clone());
        t.set(2, 1, one.neg_swapped());
        t
    }

    #[test]
    fn mask_closure_is_enforced() {
        let err = GGAlgebra::new("toy", toy(), ComponentMask::from_indices(&[1, 2]).unwrap());
        assert!(matches!(err, Err(Error::MaskNotClosed(1, 2, 4))));
        assert!(GGAlgebra::new("toy", toy(), ComponentMask::from_indices(&[1, 2, 4]).unwrap()).is_ok());
        // components outside the mask are ignored
        assert!(GGAlgebra::new("toy", toy(), ComponentMask::from_indices(&[1, 3]).unwrap()).is_ok());
    }

    #[test]
    fn bracket_rejects_bad_elements() {
        let a = GGAlgebra::new("toy", toy(), ComponentMask::NON_NEUTRAL).unwrap();
        let x = AlgebraElement::homogeneous(0, ints(&[1])).unwrap();
        let y = AlgebraElement::homogeneous(1, ints(&[1])).unwrap();
        assert!(matches!(a.bracket(&x, &y), Err(Error::OutsideMask(0))));
        let wide = AlgebraElement::homogeneous(1, ints(&[1, 0])).unwrap();
        assert!(matches!(a.bracket(&wide, &y), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn flatten_roundtrip_and_labels() {
        let a = GGAlgebra::new("toy", TwistTable::zero(2), ComponentMask::NON_NEUTRAL).unwrap();
        assert_eq!(a.dim(), 14);
        let labels = a.basis_labels();
        for (k, l) in labels.iter().enumerate() {
            assert_eq!(a.basis_index(*l), Some(k));
            assert_eq!(a.label(k), *l);
        }
        let x = a.basis_element(labels[5]);
        let flat = a.flatten(&x).unwrap();
        assert_eq!(a.unflatten(&flat).unwrap(), x);
        assert_eq!(labels[0].to_string(), "e1g1");
    }

    #[test]
    fn skew_violation_detection() {
        let mut t = toy();
        assert!(t.skew_violations().is_empty());
        t.set(2, 1, Tensor3::from_fn(1, |_, _| ints(&[1])));
        assert_eq!(t.skew_violations(), vec![(1, 2)]);
    }
}
