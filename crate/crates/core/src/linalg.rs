//! Exact linear algebra over the coefficient field.
//!
//! Deterministic Gauss–Jordan elimination: columns are processed in basis
//! order and the pivot is always the first row with a nonzero entry, so
//! reduced forms, nullspace bases and quotient representatives are identical
//! across runs and platforms. All arithmetic is exact field arithmetic; both
//! coefficient fields normalize on every operation, which keeps the entries
//! small without any fraction-free bookkeeping.

use crate::field::Field;

/// Reduces `mat` in place to reduced row echelon form; returns the pivot
/// columns in order.
#[allow(clippy::needless_range_loop)] // in-place elimination over row pairs
pub fn rref<F: Field>(mat: &mut [Vec<F>]) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot_row) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, pivot_row);
        let inv = mat[r][c].clone();
        for j in c..cols {
            mat[r][j] = mat[r][j].clone() / inv.clone();
        }
        for i in 0..rows {
            if i == r || mat[i][c].is_zero() {
                continue;
            }
            let f = mat[i][c].clone();
            for j in c..cols {
                let t = f.clone() * mat[r][j].clone();
                mat[i][j] = mat[i][j].clone() - t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(mut mat: Vec<Vec<F>>) -> usize {
    rref(&mut mat).len()
}

/// Basis of the right nullspace of a `rows × cols` matrix.
///
/// One vector per free column, in column order, each normalized so that its
/// first nonzero coordinate is 1.
pub fn nullspace<F: Field>(mut mat: Vec<Vec<F>>, cols: usize) -> Vec<Vec<F>> {
    let pivots = rref(&mut mat);
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for (i, &pc) in pivots.iter().enumerate() {
            if pc < free {
                v[pc] = -mat[i][free].clone();
            }
        }
        normalize_leading(&mut v);
        basis.push(v);
    }
    basis
}

/// Scales a vector so its first nonzero coordinate is 1.
pub fn normalize_leading<F: Field>(v: &mut [F]) {
    if let Some(lead) = v.iter().find(|c| !c.is_zero()).cloned() {
        for c in v.iter_mut() {
            *c = c.clone() / lead.clone();
        }
    }
}

/// Determinant of a square matrix by exact elimination.
#[allow(clippy::needless_range_loop)] // in-place elimination over row pairs
pub fn determinant<F: Field>(mut mat: Vec<Vec<F>>) -> F {
    let n = mat.len();
    if n == 0 {
        return F::one();
    }
    debug_assert!(mat.iter().all(|row| row.len() == n));
    let mut det = F::one();
    for c in 0..n {
        let Some(pivot_row) = (c..n).find(|&i| !mat[i][c].is_zero()) else {
            return F::zero();
        };
        if pivot_row != c {
            mat.swap(c, pivot_row);
            det = -det;
        }
        let pivot = mat[c][c].clone();
        det = det * pivot.clone();
        for i in (c + 1)..n {
            if mat[i][c].is_zero() {
                continue;
            }
            let f = mat[i][c].clone() / pivot.clone();
            for j in c..n {
                let t = f.clone() * mat[c][j].clone();
                mat[i][j] = mat[i][j].clone() - t;
            }
        }
    }
    det
}

/// An incrementally maintained row space in reduced echelon form, used for
/// span membership, reduction modulo a subspace and greedy basis extension.
#[derive(Debug, Clone)]
pub struct RowSpace<F> {
    cols: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> RowSpace<F> {
    pub fn new(cols: usize) -> Self {
        RowSpace {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Eliminates the pivot coordinates of the span from `v`; the result is
    /// the canonical representative of `v` modulo the row space.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        debug_assert_eq!(v.len(), self.cols);
        let mut out = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let f = out[pc].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let t = f.clone() * row[j].clone();
                out[j] = out[j].clone() - t;
            }
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(F::is_zero)
    }

    /// Adds `v` to the span. Returns `true` when the rank grew.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let mut red = self.reduce(v);
        let Some(lead) = red.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = red[lead].clone();
        for c in red.iter_mut() {
            *c = c.clone() / inv.clone();
        }
        // Back-eliminate the new pivot from the existing rows, keeping the
        // reduced form, and keep rows sorted by pivot column.
        for row in self.rows.iter_mut() {
            let f = row[lead].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let t = f.clone() * red[j].clone();
                row[j] = row[j].clone() - t;
            }
        }
        let at = self
            .pivots
            .iter()
            .position(|&pc| pc > lead)
            .unwrap_or(self.pivots.len());
        self.pivots.insert(at, lead);
        self.rows.insert(at, red);
        true
    }
}
