//! Incremental row echelon form over a field, for sparse vectors keyed by
//! any ordered index type.

use std::collections::BTreeMap;

use crate::coeff::{FieldElem, FieldSpec};

pub(crate) type SparseVec<K> = BTreeMap<K, FieldElem>;

struct Row<K> {
    v: SparseVec<K>,
    combo: Vec<FieldElem>,
}

/// Keeps a basis of the span of inserted vectors, with pivots normalized to 1.
pub(crate) struct Echelon<K: Ord + Clone> {
    field: FieldSpec,
    rows: BTreeMap<K, Row<K>>,
    inserted: usize,
}

impl<K: Ord + Clone> Echelon<K> {
    pub(crate) fn new(field: FieldSpec) -> Self {
        Echelon {
            field,
            rows: BTreeMap::new(),
            inserted: 0,
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts `v`. If it already lies in the span, returns coefficients
    /// `c_0, ..., c_j` (one per inserted vector, `c_j = 1`) with
    /// `sum c_i v_i = 0`.
    pub(crate) fn insert(&mut self, mut v: SparseVec<K>) -> Option<Vec<FieldElem>> {
        let idx = self.inserted;
        self.inserted += 1;
        let mut combo = vec![self.field.zero(); self.inserted];
        combo[idx] = self.field.one();
        v.retain(|_, c| !c.is_zero());
        loop {
            let Some((k, c)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
                return Some(combo);
            };
            let Some(row) = self.rows.get(&k) else {
                let inv = c.inv().expect("nonzero pivot");
                for x in v.values_mut() {
                    x.mul_assign(&inv);
                }
                for x in combo.iter_mut() {
                    x.mul_assign(&inv);
                }
                self.rows.insert(k, Row { v, combo });
                return None;
            };
            for (rk, rc) in &row.v {
                let e = v.entry(rk.clone()).or_insert_with(|| self.field.zero());
                e.sub_assign(&(&c * rc));
                if e.is_zero() {
                    v.remove(rk);
                }
            }
            for (i, rc) in row.combo.iter().enumerate() {
                combo[i].sub_assign(&(&c * rc));
            }
        }
    }
}

/// Rank of a list of sparse vectors.
pub(crate) fn rank<K: Ord + Clone>(field: FieldSpec, rows: impl IntoIterator<Item = SparseVec<K>>) -> usize {
    let mut e = Echelon::new(field);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}
