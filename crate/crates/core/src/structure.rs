//! Basis-level structure constants of a finite-dimensional algebra and the
//! invariants computed from them: Lie axioms, center, derived and lower
//! central series, Killing form and the resulting fingerprint.

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, unit, zeros, Matrix, Scalar, Subspace};

/// `[b_a, b_b] = Σ_c C[a][b][c] b_c`, stored sparsely and sorted by `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    entries: Vec<Vec<(usize, Scalar)>>,
}

/// Basis-level violations of the Lie axioms.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LieReport {
    /// Pairs `(a, b)`, `a <= b`, with `[b_a, b_b] + [b_b, b_a] != 0`.
    pub skew: Vec<(usize, usize)>,
    /// Triples whose cyclic Jacobi sum is nonzero.
    pub jacobi: Vec<(usize, usize, usize)>,
    pub pairs_checked: usize,
    pub triples_checked: usize,
}

impl LieReport {
    pub fn is_lie(&self) -> bool {
        self.skew.is_empty() && self.jacobi.is_empty()
    }
}

/// Isomorphism invariants used as a necessary condition for two algebras
/// being isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub center_dim: usize,
    pub derived_series: Vec<usize>,
    pub lower_central_series: Vec<usize>,
    pub killing_rank: usize,
    pub abelian: bool,
    pub nilpotent: bool,
    pub nilpotency_class: Option<usize>,
    pub solvable: bool,
    pub derived_length: Option<usize>,
}

impl StructureConstants {
    pub fn from_sparse(dim: usize, entries: Vec<Vec<(usize, Scalar)>>) -> Self {
        assert_eq!(entries.len(), dim * dim, "structure constant table size");
        let entries = entries
            .into_iter()
            .map(|mut row| {
                row.sort_by_key(|(c, _)| *c);
                let mut merged: Vec<(usize, Scalar)> = Vec::with_capacity(row.len());
                for (c, v) in row {
                    match merged.last_mut() {
                        Some((lc, lv)) if *lc == c => *lv += v,
                        _ => merged.push((c, v)),
                    }
                }
                merged.retain(|(_, v)| !v.is_zero());
                merged
            })
            .collect();
        StructureConstants { dim, entries }
    }

    /// Table of the bracket given by a dense function on basis pairs.
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Vec<Scalar>) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                let v = f(a, b);
                entries.push(v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect());
            }
        }
        StructureConstants::from_sparse(dim, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn basis_bracket(&self, a: usize, b: usize) -> &[(usize, Scalar)] {
        &self.entries[a * self.dim + b]
    }

    fn coefficient(&self, a: usize, b: usize, c: usize) -> Option<&Scalar> {
        let row = self.basis_bracket(a, b);
        row.binary_search_by_key(&c, |(k, _)| *k).ok().map(|n| &row[n].1)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = zeros(self.dim);
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let row = self.basis_bracket(a, b);
                if row.is_empty() {
                    continue;
                }
                let c = xa * yb;
                for (k, v) in row {
                    out[*k] += &c * v;
                }
            }
        }
        out
    }

    fn bracket_sparse_with_basis(&self, x: &[(usize, Scalar)], b: usize, out: &mut [Scalar]) {
        for (m, v) in x {
            for (k, w) in self.basis_bracket(*m, b) {
                out[*k] += v * w;
            }
        }
    }

    fn jacobi_holds(&self, a: usize, b: usize, c: usize) -> bool {
        let mut sum = zeros(self.dim);
        self.bracket_sparse_with_basis(self.basis_bracket(a, b), c, &mut sum);
        self.bracket_sparse_with_basis(self.basis_bracket(b, c), a, &mut sum);
        self.bracket_sparse_with_basis(self.basis_bracket(c, a), b, &mut sum);
        is_zero_vec(&sum)
    }

    /// Checks skew-symmetry on all basis pairs and the Jacobi identity on
    /// basis triples. When the bracket is skew the Jacobi sum is alternating,
    /// so strictly increasing triples suffice; otherwise every ordered triple
    /// is checked.
    pub fn lie_report(&self) -> LieReport {
        let n = self.dim;
        let skew: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a..n).map(move |b| (a, b)))
            .filter(|&(a, b)| {
                let ab = self.basis_bracket(a, b);
                let ba = self.basis_bracket(b, a);
                ab.len() != ba.len() || ab.iter().zip(ba).any(|((k1, v1), (k2, v2))| k1 != k2 || !(v1 + v2).is_zero())
            })
            .collect();
        let pairs_checked = n * (n + 1) / 2;
        let (jacobi, triples_checked): (Vec<(usize, usize, usize)>, usize) = if skew.is_empty() {
            let bad = (0..n)
                .into_par_iter()
                .flat_map_iter(|a| {
                    (a + 1..n)
                        .flat_map(move |b| (b + 1..n).map(move |c| (a, b, c)))
                        .filter(|&(a, b, c)| !self.jacobi_holds(a, b, c))
                        .collect::<Vec<_>>()
                })
                .collect();
            (bad, n * n.saturating_sub(1) * n.saturating_sub(2) / 6)
        } else {
            let bad = (0..n)
                .into_par_iter()
                .flat_map_iter(|a| {
                    (0..n)
                        .flat_map(move |b| (0..n).map(move |c| (a, b, c)))
                        .filter(|&(a, b, c)| !self.jacobi_holds(a, b, c))
                        .collect::<Vec<_>>()
                })
                .collect();
            (bad, n * n * n)
        };
        LieReport { skew, jacobi, pairs_checked, triples_checked }
    }

    pub fn is_abelian(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    /// Matrix of `ad x = [x, ·]`.
    pub fn ad_matrix(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for e in 0..self.dim {
            let col = self.bracket(x, &unit(self.dim, e));
            for (c, v) in col.into_iter().enumerate() {
                m[(c, e)] = v;
            }
        }
        m
    }

    /// `κ(b_a, b_b) = tr(ad b_a ad b_b) = Σ_{c,e} C[a][e][c] C[b][c][e]`.
    pub fn killing_gram(&self) -> Matrix {
        let n = self.dim;
        let rows: Vec<Vec<Scalar>> = (0..n)
            .into_par_iter()
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let mut acc = Scalar::zero();
                        for e in 0..n {
                            for (c, v) in self.basis_bracket(a, e) {
                                if let Some(w) = self.coefficient(b, *c, e) {
                                    acc += v * w;
                                }
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(rows)
    }

    pub fn killing_rank(&self) -> usize {
        self.killing_gram().rank()
    }

    /// `{x : [x, b] = 0 for every basis vector b}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // one equation per (b, c): Σ_a x_a C[a][b][c] = 0
        let mut rows = Subspace::zero(n);
        for b in 0..n {
            let mut block = vec![zeros(n); n];
            #[allow(clippy::needless_range_loop)]
            for a in 0..n {
                for (c, v) in self.basis_bracket(a, b) {
                    block[*c][a] = v.clone();
                }
            }
            for row in block {
                if !is_zero_vec(&row) {
                    rows.insert(row);
                }
            }
            if rows.is_full() {
                break;
            }
        }
        rows.orthogonal_complement_basis()
    }

    /// `span{[u, w] : u ∈ U, w ∈ W}`.
    pub fn product(&self, u: &Subspace, w: &Subspace) -> Subspace {
        let mut out = Subspace::zero(self.dim);
        for x in u.basis() {
            for y in w.basis() {
                let v = self.bracket(x, y);
                if !is_zero_vec(&v) {
                    out.insert(v);
                }
            }
        }
        out
    }

    fn series(&self, derived: bool) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        let mut chain = vec![full.clone()];
        loop {
            let cur = chain.last().unwrap();
            let next = if derived { self.product(cur, cur) } else { self.product(&full, cur) };
            let stop = next.dim() == cur.dim() || next.is_zero();
            chain.push(next);
            if stop {
                break;
            }
        }
        chain
    }

    /// `L ⊇ [L, L] ⊇ …` until two consecutive terms agree or the zero space is reached.
    pub fn derived_series(&self) -> Vec<Subspace> {
        self.series(true)
    }

    /// `L ⊇ [L, L] ⊇ [L, [L, L]] ⊇ …`, same stopping rule.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        self.series(false)
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let dims = |s: Vec<Subspace>| s.iter().map(Subspace::dim).collect::<Vec<_>>();
        let derived = dims(self.derived_series());
        let lower = dims(self.lower_central_series());
        let reaches_zero = |v: &[usize]| v.last() == Some(&0) || self.dim == 0;
        let nilpotent = reaches_zero(&lower);
        let solvable = reaches_zero(&derived);
        Fingerprint {
            dim: self.dim,
            center_dim: self.center().dim(),
            killing_rank: self.killing_rank(),
            abelian: self.is_abelian(),
            nilpotent,
            nilpotency_class: nilpotent.then(|| lower.len() - 1),
            solvable,
            derived_length: solvable.then(|| derived.len() - 1),
            derived_series: derived,
            lower_central_series: lower,
        }
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|x| s.basis().iter().all(|y| s.contains(&self.bracket(x, y))))
    }

    /// Structure constants of a bracket-closed subspace in its echelon basis.
    pub fn subalgebra(&self, s: &Subspace) -> Result<StructureConstants> {
        let k = s.dim();
        let mut entries = Vec::with_capacity(k * k);
        for x in s.basis() {
            for y in s.basis() {
                let v = self.bracket(x, y);
                let coords = s.coordinates(&v).ok_or(Error::NotSubalgebra)?;
                entries.push(coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect());
            }
        }
        Ok(StructureConstants::from_sparse(k, entries))
    }

    /// Image of a linear map given by its matrix on this basis, checked for
    /// `φ([a, b]) = [φ a, φ b]` on basis pairs.
    pub fn is_automorphism(&self, m: &Matrix) -> bool {
        if m.rows() != self.dim || m.cols() != self.dim || m.rank() != self.dim {
            return false;
        }
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|c| m.column(c)).collect();
        (0..self.dim).into_par_iter().all(|a| {
            (0..self.dim).all(|b| {
                let mut lhs = zeros(self.dim);
                for (c, v) in self.basis_bracket(a, b) {
                    axpy(&mut lhs, v, &cols[*c]);
                }
                lhs == self.bracket(&cols[a], &cols[b])
            })
        })
    }
}
