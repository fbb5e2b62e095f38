//! JSON form of an algebra:
//! `{"name", "d", "mask": [i…], "twist": {"i,j": t[p][q][r]}}` with every
//! rational written as a `"p/q"` string and only nonzero tensors listed.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{ComponentMask, GGAlgebra, Tensor3, TwistTable};
use crate::error::{Error, Result};
use crate::linalg::{format_scalar, parse_scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub d: usize,
    pub mask: Vec<usize>,
    pub twist: BTreeMap<String, Vec<Vec<Vec<String>>>>,
}

impl AlgebraFile {
    pub fn from_algebra(a: &GGAlgebra) -> Self {
        let twist = a
            .twist()
            .nonzero_pairs()
            .into_iter()
            .map(|(i, j)| {
                let t = a.twist().get(i, j).expect("listed pair is nonzero");
                let nested = t
                    .to_nested()
                    .into_iter()
                    .map(|row| row.into_iter().map(|v| v.iter().map(format_scalar).collect()).collect())
                    .collect();
                (format!("{i},{j}"), nested)
            })
            .collect();
        AlgebraFile { name: a.name().to_string(), d: a.coeff_dim(), mask: a.mask().indices(), twist }
    }

    pub fn to_algebra(&self) -> Result<GGAlgebra> {
        let mut table = TwistTable::zero(self.d);
        for (key, nested) in &self.twist {
            let (i, j) = parse_key(key)?;
            let values = nested
                .iter()
                .map(|row| row.iter().map(|v| v.iter().map(|s| parse_scalar(s)).collect()).collect())
                .collect::<Result<Vec<Vec<Vec<_>>>>>()?;
            let t = Tensor3::from_nested(values)?;
            if t.dim() != self.d {
                return Err(Error::DimensionMismatch { expected: self.d, actual: t.dim() });
            }
            table.set(i, j, t);
        }
        GGAlgebra::new(self.name.clone(), table, ComponentMask::from_indices(&self.mask)?)
    }
}

fn parse_key(key: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("twist key {key:?} is not \"i,j\" with i, j in 0..=7"));
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    let i: usize = a.trim().parse().map_err(|_| bad())?;
    let j: usize = b.trim().parse().map_err(|_| bad())?;
    if i > 7 || j > 7 {
        return Err(bad());
    }
    Ok((i, j))
}

impl GGAlgebra {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&AlgebraFile::from_algebra(self))?)
    }

    pub fn from_json(text: &str) -> Result<GGAlgebra> {
        serde_json::from_str::<AlgebraFile>(text)?.to_algebra()
    }
}
