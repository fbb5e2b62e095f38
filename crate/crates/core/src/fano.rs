//! Arithmetic of `G = Z2^3` under the labelling `g_i + g_{i+1} = g_{i+3}`,
//! the Fano plane on the nonzero labels and its collineation group.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// `Z2^3` triple of each label, packed as bits `x | y<<1 | z<<2`.
///
/// g0=(0,0,0) g1=(1,0,0) g2=(0,1,0) g3=(0,0,1)
/// g4=(1,1,0) g5=(0,1,1) g6=(1,1,1) g7=(1,0,1)
const TRIPLE: [u8; 8] = [0b000, 0b001, 0b010, 0b100, 0b011, 0b110, 0b111, 0b101];

const fn label_of(bits: u8) -> u8 {
    let mut i = 0;
    while i < 8 {
        if TRIPLE[i] == bits {
            return i as u8;
        }
        i += 1;
    }
    panic!("not a Z2^3 triple")
}

const STAR: [[u8; 8]; 8] = {
    let mut t = [[0u8; 8]; 8];
    let mut i = 0;
    while i < 8 {
        let mut j = 0;
        while j < 8 {
            t[i][j] = label_of(TRIPLE[i] ^ TRIPLE[j]);
            j += 1;
        }
        i += 1;
    }
    t
};

/// Index `k` with `g_i + g_j = g_k`.
#[inline]
pub fn star(i: usize, j: usize) -> usize {
    STAR[i][j] as usize
}

/// Reduce an integer onto `1..=7` modulo 7.
#[inline]
pub fn wrap(i: usize) -> usize {
    (i + 6) % 7 + 1
}

/// Whether three labels generate `G` (their triples have rank 3 over `Z2`).
pub fn generates(i: usize, j: usize, k: usize) -> bool {
    i != 0 && j != 0 && k != 0 && i != j && k != j && k != i && k != star(i, j)
}

/// An element `g_i` of `Z2^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(u8);

impl GroupElement {
    pub const NEUTRAL: GroupElement = GroupElement(0);

    pub fn new(index: usize) -> Result<Self> {
        if index < 8 {
            Ok(GroupElement(index as u8))
        } else {
            Err(Error::InvalidIndex(index))
        }
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Componentwise coordinates over `Z2`.
    pub fn triple(self) -> [u8; 3] {
        let b = TRIPLE[self.index()];
        [b & 1, (b >> 1) & 1, (b >> 2) & 1]
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: GroupElement) -> GroupElement {
        GroupElement(STAR[self.index()][other.index()])
    }

    pub fn all() -> impl Iterator<Item = GroupElement> {
        (0..8u8).map(GroupElement)
    }
}

impl std::ops::Add for GroupElement {
    type Output = GroupElement;
    fn add(self, rhs: GroupElement) -> GroupElement {
        GroupElement::add(self, rhs)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}", self.0)
    }
}

/// The seven lines `{i, i+1, i+3}` of the Fano plane on `1..=7`.
pub fn lines() -> [[usize; 3]; 7] {
    let mut out = [[0; 3]; 7];
    for (n, line) in out.iter_mut().enumerate() {
        let i = n + 1;
        *line = [i, wrap(i + 1), wrap(i + 3)];
    }
    out
}

/// The 21 unordered pairs `{i, j}`, `1 <= i < j <= 7`, in lexicographic order.
pub const PAIRS: [(usize, usize); 21] = {
    let mut out = [(0, 0); 21];
    let mut n = 0;
    let mut i = 1;
    while i <= 7 {
        let mut j = i + 1;
        while j <= 7 {
            out[n] = (i, j);
            n += 1;
            j += 1;
        }
        i += 1;
    }
    out
};

/// Position of the pair `{i, j}` in [`PAIRS`]. Panics on `i == j` or a zero label.
pub fn pair_index(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    assert!(a >= 1 && b <= 7 && a != b, "invalid pair {{{i}, {j}}}");
    // rows before `a` hold (7-1) + (7-2) + ... pairs
    let before: usize = (1..a).map(|r| 7 - r).sum();
    before + (b - a - 1)
}

/// A permutation of `1..=7` preserving `∗`, extended by `0 ↦ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Collineation {
    perm: [u8; 8],
}

impl Collineation {
    pub fn identity() -> Self {
        Collineation { perm: [0, 1, 2, 3, 4, 5, 6, 7] }
    }

    /// Builds a collineation from the images of `1..=7`.
    pub fn from_images(images: [usize; 7]) -> Result<Self> {
        let mut perm = [0u8; 8];
        let mut seen = [false; 8];
        for (i, &img) in images.iter().enumerate() {
            if img == 0 || img > 7 || seen[img] {
                return Err(Error::InvalidIndex(img));
            }
            seen[img] = true;
            perm[i + 1] = img as u8;
        }
        let c = Collineation { perm };
        if !c.preserves_star() {
            return Err(Error::Parse(format!("{images:?} does not preserve the Fano lines")));
        }
        Ok(c)
    }

    fn preserves_star(&self) -> bool {
        (1..=7)
            .all(|i| (1..=7).filter(|&j| j != i).all(|j| star(self.apply(i), self.apply(j)) == self.apply(star(i, j))))
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.perm[i] as usize
    }

    pub fn images(&self) -> [usize; 7] {
        let mut out = [0; 7];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.apply(i + 1);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Collineation) -> Collineation {
        let mut perm = [0u8; 8];
        for (i, p) in perm.iter_mut().enumerate() {
            *p = self.perm[other.perm[i] as usize];
        }
        Collineation { perm }
    }

    pub fn inverse(&self) -> Collineation {
        let mut perm = [0u8; 8];
        for i in 0..8 {
            perm[self.perm[i] as usize] = i as u8;
        }
        Collineation { perm }
    }

    /// Image of every pair index under the induced action on [`PAIRS`].
    pub fn pair_action(&self) -> [u8; 21] {
        let mut out = [0u8; 21];
        for (n, &(i, j)) in PAIRS.iter().enumerate() {
            out[n] = pair_index(self.apply(i), self.apply(j)) as u8;
        }
        out
    }
}

impl fmt::Display for Collineation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<[usize; 7]>) {
    if k == items.len() {
        let mut p = [0; 7];
        p.copy_from_slice(items);
        out.push(p);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

/// All collineations of the Fano plane, found by filtering the 5040
/// permutations of `1..=7`. Sorted by image tuple; the identity comes first.
pub fn collineations() -> &'static [Collineation] {
    static CACHE: OnceLock<Vec<Collineation>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut perms = Vec::with_capacity(5040);
        permutations(&mut (1..=7).collect(), 0, &mut perms);
        let mut out: Vec<Collineation> = perms.into_iter().filter_map(|p| Collineation::from_images(p).ok()).collect();
        out.sort_by_key(|c| c.images());
        out
    })
}
