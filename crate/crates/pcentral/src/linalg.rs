//! Matrices over Z/pZ and the congruence reduction of alternating forms.
//!
//! The centerpiece is [`FpMatrix::reduce_alternating`]: given a
//! skew-symmetric matrix `M` with zero diagonal it produces an invertible
//! `D` with `D·M·Dᵗ = H ⊕ … ⊕ H ⊕ 0`, where `H = [[0,−1],[1,0]]`. The
//! reduction is a symplectic Gram–Schmidt with deterministic lowest-index
//! pivoting, and the congruence identity is certified by multiplication
//! before the result is returned.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::fp::{self, check_modulus, FpScalar};
use crate::json::{as_array, as_i64, as_usize, get, object};

/// A dense matrix over Z/pZ, entries kept reduced to `[0, p-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl FpMatrix {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Result<Self> {
        check_modulus(p)?;
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix { rows, cols });
        }
        Ok(Self {
            p,
            rows,
            cols,
            entries: vec![0; rows * cols],
        })
    }

    pub fn identity(p: u64, n: usize) -> Result<Self> {
        let mut m = Self::zero(p, n, n)?;
        for i in 0..n {
            m.set_raw(i, i, 1);
        }
        Ok(m)
    }

    /// Builds a matrix from signed row data, reducing every entry mod p.
    pub fn from_rows(p: u64, rows: &[Vec<i64>]) -> Result<Self> {
        check_modulus(p)?;
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        if height == 0 || width == 0 {
            return Err(Error::EmptyMatrix {
                rows: height,
                cols: width,
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(Error::Format(format!(
                    "row {i} has {} entries, expected {width}",
                    row.len()
                )));
            }
        }
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&v| fp::reduce_signed(v, p)))
            .collect();
        Ok(Self {
            p,
            rows: height,
            cols: width,
            entries,
        })
    }

    /// The hyperbolic block `H = [[0, −1], [1, 0]]` mod p.
    pub fn hyperbolic_block(p: u64) -> Result<Self> {
        Self::from_rows(p, &[vec![0, -1], vec![1, 0]])
    }

    /// `(⊕_{k=1}^m H) ⊕ 0` of size n×n.
    pub fn canonical_alternating(p: u64, n: usize, m: usize) -> Result<Self> {
        let mut out = Self::zero(p, n, n)?;
        assert!(2 * m <= n, "block count too large for dimension");
        for k in 0..m {
            out.set_raw(2 * k, 2 * k + 1, fp::neg_mod(1, p));
            out.set_raw(2 * k + 1, 2 * k, 1);
        }
        Ok(out)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> FpScalar {
        FpScalar::from_reduced(self.get_raw(row, col), self.p)
    }

    pub(crate) fn get_raw(&self, row: usize, col: usize) -> u64 {
        self.entries[row * self.cols + col]
    }

    pub(crate) fn set_raw(&mut self, row: usize, col: usize, value: u64) {
        debug_assert!(value < self.p);
        self.entries[row * self.cols + col] = value;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// Exact product mod p.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.p != rhs.p {
            return Err(Error::ModulusMismatch {
                left: self.p,
                right: rhs.p,
            });
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        let mut out = Self::zero(self.p, self.rows, rhs.cols)?;
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = 0u64;
                for k in 0..self.cols {
                    acc = fp::add_mod(
                        acc,
                        fp::mul_mod(self.get_raw(i, k), rhs.get_raw(k, j), self.p),
                        self.p,
                    );
                }
                out.set_raw(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self {
            p: self.p,
            rows: self.cols,
            cols: self.rows,
            entries: vec![0; self.entries.len()],
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set_raw(j, i, self.get_raw(i, j));
            }
        }
        out
    }

    /// Checks `Mᵗ = −M` with zero diagonal, naming the first offending entry.
    pub fn check_alternating(&self) -> Result<()> {
        self.require_square()?;
        for i in 0..self.rows {
            let d = self.get_raw(i, i);
            if d != 0 {
                return Err(Error::NonzeroDiagonal { index: i, value: d });
            }
            for j in (i + 1)..self.cols {
                let upper = self.get_raw(i, j);
                let lower = self.get_raw(j, i);
                if fp::add_mod(upper, lower, self.p) != 0 {
                    return Err(Error::NotSkewSymmetric {
                        row: i,
                        col: j,
                        value: upper,
                        transposed: lower,
                        p: self.p,
                    });
                }
            }
        }
        Ok(())
    }

    /// Row-reduces a copy to reduced row echelon form; returns pivot columns.
    fn rref(mut self) -> (Self, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(found) = (pivot_row..self.rows).find(|&r| self.get_raw(r, col) != 0) else {
                continue;
            };
            if found != pivot_row {
                for c in 0..self.cols {
                    let (a, b) = (self.get_raw(pivot_row, c), self.get_raw(found, c));
                    self.set_raw(pivot_row, c, b);
                    self.set_raw(found, c, a);
                }
            }
            let inv = fp::inv_mod(self.get_raw(pivot_row, col), self.p).expect("pivot is nonzero");
            for c in 0..self.cols {
                let v = fp::mul_mod(self.get_raw(pivot_row, c), inv, self.p);
                self.set_raw(pivot_row, c, v);
            }
            for r in 0..self.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = self.get_raw(r, col);
                if factor == 0 {
                    continue;
                }
                for c in 0..self.cols {
                    let v = fp::sub_mod(
                        self.get_raw(r, c),
                        fp::mul_mod(factor, self.get_raw(pivot_row, c), self.p),
                        self.p,
                    );
                    self.set_raw(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (self, pivots)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().1.len()
    }

    /// Rank together with a basis of the left kernel `{v : v·M = 0}`.
    ///
    /// The basis comes from the free columns of the row-reduced transpose,
    /// each normalized so its free coordinate is 1; the result is
    /// deterministic and satisfies `rank + basis.len() = n`.
    pub fn rank_and_kernel(&self) -> Result<(usize, Vec<Vec<u64>>)> {
        self.require_square()?;
        let n = self.rows;
        let (rref, pivots) = self.transpose().rref();
        let rank = pivots.len();
        let mut basis = Vec::with_capacity(n - rank);
        let free_cols = (0..n).filter(|c| !pivots.contains(c));
        for free in free_cols {
            let mut v = vec![0u64; n];
            v[free] = 1;
            for (row, &pivot_col) in pivots.iter().enumerate() {
                v[pivot_col] = fp::neg_mod(rref.get_raw(row, free), self.p);
            }
            basis.push(v);
        }
        Ok((rank, basis))
    }

    /// Gauss–Jordan inverse.
    pub fn invert(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = Self::identity(self.p, n)?;
        for col in 0..n {
            let Some(found) = (col..n).find(|&r| work.get_raw(r, col) != 0) else {
                return Err(Error::SingularMatrix { p: self.p });
            };
            if found != col {
                for c in 0..n {
                    let (a, b) = (work.get_raw(col, c), work.get_raw(found, c));
                    work.set_raw(col, c, b);
                    work.set_raw(found, c, a);
                    let (a, b) = (inv.get_raw(col, c), inv.get_raw(found, c));
                    inv.set_raw(col, c, b);
                    inv.set_raw(found, c, a);
                }
            }
            let scale = fp::inv_mod(work.get_raw(col, col), self.p)?;
            for c in 0..n {
                work.set_raw(col, c, fp::mul_mod(work.get_raw(col, c), scale, self.p));
                inv.set_raw(col, c, fp::mul_mod(inv.get_raw(col, c), scale, self.p));
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = work.get_raw(r, col);
                if factor == 0 {
                    continue;
                }
                for c in 0..n {
                    let w = fp::sub_mod(
                        work.get_raw(r, c),
                        fp::mul_mod(factor, work.get_raw(col, c), self.p),
                        self.p,
                    );
                    work.set_raw(r, c, w);
                    let v = fp::sub_mod(
                        inv.get_raw(r, c),
                        fp::mul_mod(factor, inv.get_raw(col, c), self.p),
                        self.p,
                    );
                    inv.set_raw(r, c, v);
                }
            }
        }
        Ok(inv)
    }

    /// The form value `u · M · vᵗ` for row vectors u, v.
    fn pair(&self, u: &[u64], v: &[u64]) -> u64 {
        let mut acc = 0u64;
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            let mut row_acc = 0u64;
            for (j, &vj) in v.iter().enumerate() {
                if vj == 0 {
                    continue;
                }
                row_acc = fp::add_mod(row_acc, fp::mul_mod(self.get_raw(i, j), vj, self.p), self.p);
            }
            acc = fp::add_mod(acc, fp::mul_mod(ui, row_acc, self.p), self.p);
        }
        acc
    }

    /// Congruence reduction of an alternating matrix to hyperbolic block
    /// normal form.
    ///
    /// Symplectic Gram–Schmidt with lowest-index pivoting: take the first
    /// basis vector that pairs non-trivially with anything, pair it with the
    /// first partner, rescale the partner so the pair spans an exact `H`
    /// block, clear everything else against the pair, and continue on the
    /// complement. The output is deterministic, and on an input already in
    /// canonical form the transform is the identity.
    pub fn reduce_alternating(&self) -> Result<AlternatingReduction> {
        self.check_alternating()?;
        let n = self.rows;
        let p = self.p;

        let mut remaining: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut v = vec![0u64; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut paired: Vec<Vec<u64>> = Vec::new();

        loop {
            let mut found = None;
            'scan: for i in 0..remaining.len() {
                for j in (i + 1)..remaining.len() {
                    if self.pair(&remaining[i], &remaining[j]) != 0 {
                        found = Some((i, j));
                        break 'scan;
                    }
                }
            }
            let Some((i, j)) = found else { break };

            let u = remaining.remove(i);
            // removal of i shifts j down by one
            let v = remaining.remove(j - 1);
            let c = self.pair(&u, &v);
            // rescale so that pair(u, v') = −1, pair(v', u) = 1: one H block
            let scale = fp::neg_mod(fp::inv_mod(c, p).expect("pivot pairing is nonzero"), p);
            let v: Vec<u64> = v.iter().map(|&x| fp::mul_mod(x, scale, p)).collect();

            for w in remaining.iter_mut() {
                let lambda = self.pair(w, &v);
                let mu = fp::neg_mod(self.pair(w, &u), p);
                for k in 0..n {
                    let mut x = w[k];
                    x = fp::add_mod(x, fp::mul_mod(lambda, u[k], p), p);
                    x = fp::add_mod(x, fp::mul_mod(mu, v[k], p), p);
                    w[k] = x;
                }
            }
            paired.push(u);
            paired.push(v);
        }

        let num_blocks = paired.len() / 2;
        let mut transform = Self::zero(p, n, n)?;
        for (i, row) in paired.iter().chain(remaining.iter()).enumerate() {
            for (j, &v) in row.iter().enumerate() {
                transform.set_raw(i, j, v);
            }
        }

        let canonical = Self::canonical_alternating(p, n, num_blocks)?;
        let certified = transform
            .mul(self)
            .and_then(|dm| dm.mul(&transform.transpose()))
            .expect("congruence dimensions agree");
        assert_eq!(
            certified, canonical,
            "internal error: congruence certificate D*M*D^t failed"
        );
        transform
            .invert()
            .expect("internal error: reduction transform must be invertible");

        Ok(AlternatingReduction {
            transform,
            num_blocks,
            canonical,
        })
    }

    /// JSON form: `{"p": int, "rows": int, "cols": int, "entries": [[int,...],...]}`.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = (0..self.rows)
            .map(|i| {
                Value::Array(
                    self.row(i)
                        .iter()
                        .map(|&v| Value::Number(v.into()))
                        .collect(),
                )
            })
            .collect();
        object(vec![
            ("p", Value::Number(self.p.into())),
            ("rows", Value::Number((self.rows as u64).into())),
            ("cols", Value::Number((self.cols as u64).into())),
            ("entries", Value::Array(entries)),
        ])
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let ctx = "matrix";
        let p = crate::json::as_u64(get(value, "p", ctx)?, "matrix modulus")?;
        let rows = as_usize(get(value, "rows", ctx)?, "matrix rows")?;
        let cols = as_usize(get(value, "cols", ctx)?, "matrix cols")?;
        let data = entries_from_json(get(value, "entries", ctx)?)?;
        if data.len() != rows || data.iter().any(|r| r.len() != cols) {
            return Err(Error::Format(format!(
                "matrix entries do not form a {rows}x{cols} grid"
            )));
        }
        Self::from_rows(p, &data)
    }
}

/// Parses a JSON array of arrays of integers (signed accepted).
pub(crate) fn entries_from_json(value: &Value) -> Result<Vec<Vec<i64>>> {
    as_array(value, "matrix entries")?
        .iter()
        .map(|row| {
            as_array(row, "matrix row")?
                .iter()
                .map(|e| as_i64(e, "matrix entry"))
                .collect()
        })
        .collect()
}

impl std::fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get_raw(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Result of [`FpMatrix::reduce_alternating`]: an invertible `transform`
/// with `transform · M · transformᵗ` equal to `canonical`, which consists of
/// `num_blocks` hyperbolic blocks followed by zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingReduction {
    pub transform: FpMatrix,
    pub num_blocks: usize,
    pub canonical: FpMatrix,
}
