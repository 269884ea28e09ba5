use std::fmt;

use crate::scalar::RationalFunction;

use super::{ModuleObject, RepError};

/// A sparse exact matrix between two module words, stored column-major.
///
/// All tangle morphisms in scope are even (parity-preserving); raw
/// generator actions are also represented by this type but are not
/// themselves morphisms.
#[derive(Clone, PartialEq, Eq)]
pub struct EquivariantMap {
    source: ModuleObject,
    target: ModuleObject,
    cols: Vec<Vec<(usize, RationalFunction)>>,
}

impl EquivariantMap {
    pub fn zero(source: ModuleObject, target: ModuleObject) -> Self {
        let cols = vec![Vec::new(); source.dim()];
        Self {
            source,
            target,
            cols,
        }
    }

    pub fn identity(obj: &ModuleObject) -> Self {
        let mut m = Self::zero(obj.clone(), obj.clone());
        for c in 0..obj.dim() {
            m.cols[c].push((c, RationalFunction::one()));
        }
        m
    }

    /// Builds from per-column entry lists; rows are sorted and zeros
    /// dropped.
    pub fn from_cols(
        source: ModuleObject,
        target: ModuleObject,
        cols: Vec<Vec<(usize, RationalFunction)>>,
    ) -> Self {
        assert_eq!(cols.len(), source.dim());
        let nrows = target.dim();
        let cols = cols
            .into_iter()
            .map(|mut col| {
                col.retain(|(r, v)| {
                    assert!(*r < nrows, "row out of range");
                    !v.is_zero()
                });
                col.sort_by_key(|(r, _)| *r);
                let mut merged: Vec<(usize, RationalFunction)> = Vec::with_capacity(col.len());
                for (r, v) in col {
                    match merged.last_mut() {
                        Some((lr, lv)) if *lr == r => {
                            *lv = &*lv + &v;
                        }
                        _ => merged.push((r, v)),
                    }
                }
                merged.retain(|(_, v)| !v.is_zero());
                merged
            })
            .collect();
        Self {
            source,
            target,
            cols,
        }
    }

    pub fn source(&self) -> &ModuleObject {
        &self.source
    }

    pub fn target(&self) -> &ModuleObject {
        &self.target
    }

    pub fn col(&self, c: usize) -> &[(usize, RationalFunction)] {
        &self.cols[c]
    }

    pub fn entry(&self, row: usize, col: usize) -> RationalFunction {
        self.cols[col]
            .iter()
            .find(|(r, _)| *r == row)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(RationalFunction::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// `self . rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &Self) -> Result<Self, RepError> {
        if rhs.target != self.source {
            return Err(RepError::DimensionMismatch(format!(
                "compose: {} vs {}",
                rhs.target, self.source
            )));
        }
        let mut cols = Vec::with_capacity(rhs.cols.len());
        for col in &rhs.cols {
            let mut acc: std::collections::BTreeMap<usize, RationalFunction> =
                std::collections::BTreeMap::new();
            for (k, a) in col {
                for (r, b) in &self.cols[*k] {
                    let entry = acc.entry(*r).or_insert_with(RationalFunction::zero);
                    *entry = &*entry + &(a * b);
                }
            }
            cols.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        Ok(Self {
            source: rhs.source.clone(),
            target: self.target.clone(),
            cols,
        })
    }

    /// Tensor product of maps; valid for even maps, where no Koszul signs
    /// arise.
    pub fn tensor(&self, rhs: &Self) -> Self {
        let source = self.source.concat(&rhs.source);
        let target = self.target.concat(&rhs.target);
        let rdim_t = rhs.target.dim();
        let mut cols = Vec::with_capacity(source.dim());
        for c1 in 0..self.source.dim() {
            for c2 in 0..rhs.source.dim() {
                let mut col = Vec::new();
                for (r1, v1) in &self.cols[c1] {
                    for (r2, v2) in &rhs.cols[c2] {
                        col.push((r1 * rdim_t + r2, v1 * v2));
                    }
                }
                cols.push(col);
            }
        }
        Self {
            source,
            target,
            cols,
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, RepError> {
        if self.source != rhs.source || self.target != rhs.target {
            return Err(RepError::DimensionMismatch("add".into()));
        }
        let cols = self
            .cols
            .iter()
            .zip(&rhs.cols)
            .map(|(a, b)| {
                let mut acc: std::collections::BTreeMap<usize, RationalFunction> =
                    std::collections::BTreeMap::new();
                for (r, v) in a.iter().chain(b) {
                    let entry = acc.entry(*r).or_insert_with(RationalFunction::zero);
                    *entry = &*entry + v;
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Ok(Self {
            source: self.source.clone(),
            target: self.target.clone(),
            cols,
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, RepError> {
        self.add(&rhs.scale(&-&RationalFunction::one()))
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let cols = self
            .cols
            .iter()
            .map(|col| {
                col.iter()
                    .map(|(r, v)| (*r, v * c))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        Self {
            source: self.source.clone(),
            target: self.target.clone(),
            cols,
        }
    }

    /// Exact inverse of a square map by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self, RepError> {
        let n = self.source.dim();
        if self.target.dim() != n {
            return Err(RepError::DimensionMismatch("inverse of non-square".into()));
        }
        let mut a = vec![vec![RationalFunction::zero(); n]; n];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                a[*r][c] = v.clone();
            }
        }
        let mut inv = vec![vec![RationalFunction::zero(); n]; n];
        for (i, row) in inv.iter_mut().enumerate() {
            row[i] = RationalFunction::one();
        }
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(RepError::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            let pinv = p.inv().expect("nonzero pivot");
            for v in a[col].iter_mut() {
                *v = &*v * &pinv;
            }
            for v in inv[col].iter_mut() {
                *v = &*v * &pinv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..n {
                        let d = &f * &a[col][c];
                        a[r][c] = &a[r][c] - &d;
                        let d = &f * &inv[col][c];
                        inv[r][c] = &inv[r][c] - &d;
                    }
                }
            }
        }
        let mut cols = vec![Vec::new(); n];
        for (r, row) in inv.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    cols[c].push((r, v.clone()));
                }
            }
        }
        Ok(Self {
            source: self.target.clone(),
            target: self.source.clone(),
            cols,
        })
    }

    /// True if every stored entry connects basis vectors of equal total
    /// parity.
    pub fn is_parity_even(&self) -> bool {
        self.cols.iter().enumerate().all(|(c, col)| {
            col.iter()
                .all(|(r, _)| self.source.parity_of(c) == self.target.parity_of(*r))
        })
    }

    /// If the map is `c * Id`, returns `c`.
    pub fn as_scalar_multiple_of_identity(&self) -> Option<RationalFunction> {
        let n = self.source.dim();
        if self.target.dim() != n {
            return None;
        }
        let c = self.entry(0, 0);
        for col in 0..n {
            let entries = &self.cols[col];
            match (entries.len(), c.is_zero()) {
                (0, true) => continue,
                (1, false) if entries[0].0 == col && entries[0].1 == c => continue,
                _ => return None,
            }
        }
        Some(c)
    }

    /// Coordinate dump `(row, col) value`, one entry per line.
    pub fn dump_coords(&self) -> String {
        let mut out = String::new();
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                out.push_str(&format!("({r}, {c}) {v}\n"));
            }
        }
        out
    }
}

impl fmt::Debug for EquivariantMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} -> {}", self.source, self.target)?;
        write!(f, "{}", self.dump_coords())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{Factor, EPS1};

    fn l_eps1() -> ModuleObject {
        ModuleObject::simple(EPS1).unwrap()
    }

    #[test]
    fn identity_and_compose() {
        let v = l_eps1();
        let id = EquivariantMap::identity(&v);
        assert_eq!(id.compose(&id).unwrap(), id);
        assert!(id.is_parity_even());
    }

    #[test]
    fn inverse_of_small_matrix() {
        let v = l_eps1();
        // [[q, 1], [0, 1]]
        let m = EquivariantMap::from_cols(
            v.clone(),
            v.clone(),
            vec![
                vec![(0, RationalFunction::q_pow(1))],
                vec![(0, RationalFunction::one()), (1, RationalFunction::one())],
            ],
        );
        let inv = m.inverse().unwrap();
        assert_eq!(m.compose(&inv).unwrap(), EquivariantMap::identity(&v));
        assert_eq!(inv.compose(&m).unwrap(), EquivariantMap::identity(&v));
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let v = l_eps1();
        let m = EquivariantMap::zero(v.clone(), v);
        assert_eq!(m.inverse(), Err(RepError::Singular));
    }

    #[test]
    fn scalar_multiple_detection() {
        let v = ModuleObject::new(vec![Factor::simple(EPS1).unwrap()]);
        let id = EquivariantMap::identity(&v);
        let m = id.scale(&RationalFunction::q_pow(-2));
        assert_eq!(
            m.as_scalar_multiple_of_identity(),
            Some(RationalFunction::q_pow(-2))
        );
        let mut bad = id.clone();
        bad = bad
            .add(&EquivariantMap::from_cols(
                v.clone(),
                v.clone(),
                vec![vec![(1, RationalFunction::one())], vec![]],
            ))
            .unwrap();
        assert_eq!(bad.as_scalar_multiple_of_identity(), None);
    }

    #[test]
    fn tensor_of_identities() {
        let v = l_eps1();
        let id = EquivariantMap::identity(&v);
        let t = id.tensor(&id);
        assert_eq!(t, EquivariantMap::identity(&v.concat(&v)));
    }
}
