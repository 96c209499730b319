// SPDX-License-Identifier: Apache-2.0

//! Signed multiplication tables for the imaginary units.
//!
//! A table with `dim` basis elements `{1, e_1, …, e_{dim-1}}` is fixed by the
//! signed triples `e_I e_J = ±e_K`; every triple fills all six orderings of
//! its indices with the permutation parity, and `e_I e_I = -1`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("unsupported dimension {0}, expected 4 or 8")]
    Dimension(usize),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("triple ({0}, {1}, {2}) repeats an index")]
    RepeatedIndex(usize, usize, usize),
    #[error("sign must be +1 or -1, got {0}")]
    Sign(i64),
    #[error("product e_{i} e_{j} defined twice with different values")]
    Conflict { i: usize, j: usize },
    #[error("product e_{i} e_{j} is not defined by any triple")]
    Missing { i: usize, j: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Product of two basis elements: `e_i e_j = sign · e_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisProduct {
    pub index: usize,
    pub sign: i8,
}

/// Complete basis multiplication table, including the unit.
#[derive(Clone, PartialEq, Eq)]
pub struct StructureTable {
    dim: usize,
    products: Vec<BasisProduct>,
}

impl fmt::Debug for StructureTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StructureTable")
            .field("dim", &self.dim)
            .field("triples", &self.triples())
            .finish()
    }
}

impl StructureTable {
    /// Builds a table from 1-based signed triples `(I, J, K, sign)`.
    pub fn from_triples(
        dim: usize,
        triples: &[(usize, usize, usize, i64)],
    ) -> Result<Self, TableError> {
        if dim != 4 && dim != 8 {
            return Err(TableError::Dimension(dim));
        }
        let max = dim - 1;
        let mut imag: Vec<Option<BasisProduct>> = vec![None; dim * dim];
        for &(i, j, k, sign) in triples {
            for idx in [i, j, k] {
                if idx == 0 || idx > max {
                    return Err(TableError::IndexOutOfRange { index: idx, max });
                }
            }
            if i == j || j == k || i == k {
                return Err(TableError::RepeatedIndex(i, j, k));
            }
            if sign != 1 && sign != -1 {
                return Err(TableError::Sign(sign));
            }
            let s = sign as i8;
            // even permutations keep the sign, odd ones flip it
            let orderings = [
                (i, j, k, s),
                (j, k, i, s),
                (k, i, j, s),
                (j, i, k, -s),
                (i, k, j, -s),
                (k, j, i, -s),
            ];
            for (a, b, c, sg) in orderings {
                let new = BasisProduct { index: c, sign: sg };
                let slot = &mut imag[a * dim + b];
                match slot {
                    Some(old) if *old != new => return Err(TableError::Conflict { i: a, j: b }),
                    _ => *slot = Some(new),
                }
            }
        }

        let mut products = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = if i == 0 {
                    BasisProduct { index: j, sign: 1 }
                } else if j == 0 {
                    BasisProduct { index: i, sign: 1 }
                } else if i == j {
                    BasisProduct { index: 0, sign: -1 }
                } else {
                    imag[i * dim + j].ok_or(TableError::Missing { i, j })?
                };
                products.push(p);
            }
        }
        Ok(StructureTable { dim, products })
    }

    /// Parses the `I J K sign` text format; `#` starts a comment.
    ///
    /// The dimension is inferred from the largest index (3 or 7).
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let mut triples = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 {
                return Err(TableError::Parse {
                    line: n + 1,
                    msg: format!("expected 4 fields, found {}", fields.len()),
                });
            }
            let num = |s: &str| -> Result<i64, TableError> {
                s.parse::<i64>().map_err(|e| TableError::Parse {
                    line: n + 1,
                    msg: format!("{s:?}: {e}"),
                })
            };
            let idx = |s: &str| -> Result<usize, TableError> {
                let v = num(s)?;
                usize::try_from(v).map_err(|_| TableError::Parse {
                    line: n + 1,
                    msg: format!("negative index {v}"),
                })
            };
            triples.push((
                idx(fields[0])?,
                idx(fields[1])?,
                idx(fields[2])?,
                num(fields[3])?,
            ));
        }
        let max = triples
            .iter()
            .flat_map(|&(i, j, k, _)| [i, j, k])
            .max()
            .unwrap_or(0);
        let dim = match max {
            3 => 4,
            7 => 8,
            0 => {
                return Err(TableError::Parse {
                    line: 0,
                    msg: "no triples".into(),
                })
            }
            m => return Err(TableError::Dimension(m + 1)),
        };
        Self::from_triples(dim, &triples)
    }

    /// Quaternion table, `e_1 e_2 = e_3` and cyclic.
    pub fn quaternion() -> Self {
        Self::from_triples(4, &[(1, 2, 3, 1)]).expect("quaternion table is complete")
    }

    /// Octonion table from the Cayley–Dickson doubling of the quaternions.
    ///
    /// Elements are pairs `(a, b)` of quaternions with
    /// `(a, b)(c, d) = (ac - d̄b, da + bc̄)`; basis `0..4` is `(e_q, 0)` and
    /// `4..8` is `(0, e_q)`.
    pub fn octonion() -> Self {
        let h = Self::quaternion();
        // signed quaternion unit: (index, sign)
        let qmul = |(a, sa): (usize, i8), (b, sb): (usize, i8)| {
            let p = h.product(a, b);
            (p.index, sa * sb * p.sign)
        };
        let qconj = |(a, s): (usize, i8)| if a == 0 { (a, s) } else { (a, -s) };

        let mut triples = Vec::new();
        for i in 1..8 {
            for j in (i + 1)..8 {
                let (x_hi, x) = (i >= 4, (i % 4, 1i8));
                let (y_hi, y) = (j >= 4, (j % 4, 1i8));
                let ((q, s), hi) = match (x_hi, y_hi) {
                    (false, false) => (qmul(x, y), false),
                    // (a,0)(0,d) = (0, da)
                    (false, true) => (qmul(y, x), true),
                    // (0,b)(c,0) = (0, b c̄)
                    (true, false) => (qmul(x, qconj(y)), true),
                    // (0,b)(0,d) = (-d̄ b, 0)
                    (true, true) => {
                        let (q, s) = qmul(qconj(y), x);
                        ((q, -s), false)
                    }
                };
                let k = q + if hi { 4 } else { 0 };
                if j < k {
                    triples.push((i, j, k, s as i64));
                }
            }
        }
        Self::from_triples(8, &triples).expect("Cayley-Dickson table is complete")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `e_i e_j` for 0-based basis indices (0 is the unit).
    #[inline]
    pub fn product(&self, i: usize, j: usize) -> BasisProduct {
        self.products[i * self.dim + j]
    }

    /// Canonical triples `(I, J, K, sign)` with `I < J < K`, 1-based.
    pub fn triples(&self) -> Vec<(usize, usize, usize, i64)> {
        let mut out = Vec::new();
        for i in 1..self.dim {
            for j in (i + 1)..self.dim {
                let p = self.product(i, j);
                if p.index > j {
                    out.push((i, j, p.index, p.sign as i64));
                }
            }
        }
        out
    }

    /// Renders the table in the text format accepted by [`StructureTable::parse`].
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, j, k, sign) in self.triples() {
            s.push_str(&format!("{i} {j} {k} {sign:+}\n"));
        }
        s
    }
}
