//! The machine-readable result document and its invariant checks.
//!
//! Multiplicities, orbit sizes and dimensions are serialized as decimal
//! strings: dimensions overflow 64-bit integers quickly as the rank grows,
//! and strings keep every JSON consumer exact.

use num::bigint::BigUint;
use num::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiplicity::{character_rows, dimension_of_rows, MultiplicityTable};
use crate::weights::{dynkin_labels, orbit_size, sub_dominant_set, DominantWeight, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominantView {
    pub partition: Vec<u32>,
    pub dynkin: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRow {
    pub partition: Vec<u32>,
    pub dynkin: Vec<u32>,
    pub multiplicity: String,
    pub orbit_size: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub algebra: String,
    pub rank_n: usize,
    pub dominant: DominantView,
    pub weight_m: u32,
    pub dimension: String,
    pub rows: Vec<CharacterRow>,
}

impl OutputDocument {
    pub fn from_table(table: &MultiplicityTable) -> Result<Self> {
        let n = table.rank();
        let rows = character_rows(table)?;
        let dimension = dimension_of_rows(&rows);
        let mut out_rows = Vec::with_capacity(rows.len());
        for (p, m, size) in rows {
            out_rows.push(CharacterRow {
                partition: p.parts().to_vec(),
                dynkin: dynkin_labels(&p, n)?,
                multiplicity: m.to_string(),
                orbit_size: size.to_string(),
            });
        }
        let dominant = table.dominant();
        Ok(OutputDocument {
            algebra: format!("A{}", n - 1),
            rank_n: n,
            dominant: DominantView {
                partition: dominant.partition().parts().to_vec(),
                dynkin: dominant.dynkin().to_vec(),
            },
            weight_m: dominant.weight(),
            dimension: dimension.to_string(),
            rows: out_rows,
        })
    }

    /// Rebuild the solver-side table, checking every structural invariant on
    /// the way: canonical row order, decimal-string integers, multiplicity
    /// one on the highest weight, orbit sizes, and the dimension sum.
    pub fn to_table(&self) -> Result<MultiplicityTable> {
        let n = self.rank_n;
        if self.algebra != format!("A{}", n - 1) {
            return Err(Error::arg("algebra label does not match rank_n"));
        }
        let partition = Partition::new(self.dominant.partition.clone())?;
        let dominant = DominantWeight::from_partition(n, &partition)?;
        if dominant.partition() != &partition {
            return Err(Error::arg("dominant partition not canonical"));
        }
        if dominant.dynkin() != self.dominant.dynkin {
            return Err(Error::arg("dominant Dynkin labels inconsistent"));
        }
        if dominant.weight() != self.weight_m {
            return Err(Error::arg("weight_m does not match the partition"));
        }
        let sub = sub_dominant_set(n, self.weight_m)?;
        if sub.len() != self.rows.len() {
            return Err(Error::arg("unexpected number of rows"));
        }
        let mut rows = Vec::with_capacity(self.rows.len());
        let mut dim = BigUint::ZERO;
        for (member, row) in sub.members().iter().zip(&self.rows) {
            let p = Partition::new(row.partition.clone())?;
            if member.partition() != &p {
                return Err(Error::arg(format!("row order mismatch at {p}")));
            }
            if dynkin_labels(&p, n)? != row.dynkin {
                return Err(Error::arg(format!("Dynkin labels mismatch at {p}")));
            }
            let m: BigUint = row
                .multiplicity
                .parse()
                .map_err(|_| Error::arg(format!("bad multiplicity {:?}", row.multiplicity)))?;
            let size: BigUint = row
                .orbit_size
                .parse()
                .map_err(|_| Error::arg(format!("bad orbit size {:?}", row.orbit_size)))?;
            if size != orbit_size(&p, n)? {
                return Err(Error::arg(format!("orbit size mismatch at {p}")));
            }
            dim += &m * &size;
            rows.push((p, m));
        }
        if dim.to_string() != self.dimension {
            return Err(Error::arg("dimension does not match the row sum"));
        }
        let table = MultiplicityTable::new(n, dominant, rows)
            .map_err(|e| Error::arg(format!("invalid table: {e}")))?;
        if !table
            .get(table.dominant().partition())
            .map(BigUint::is_one)
            .unwrap_or(false)
        {
            return Err(Error::arg("highest weight multiplicity must be 1"));
        }
        Ok(table)
    }
}
