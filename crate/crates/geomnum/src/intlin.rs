//! Exact integer linear algebra on coefficient matrices.
//!
//! Sublattices are stored as integer coefficient vectors in the parent basis,
//! so saturation (primitive closure), span membership and subgroup equality
//! are pure integer problems. Everything here runs over `BigInt` via a
//! column-style Hermite normal form, which keeps the results canonical:
//! two subgroups are equal iff their column HNF generator matrices agree.
//!
//! The one performance-sensitive consumer (the minimal-covolume subset scan)
//! avoids HNF entirely: it uses [`plucker_minors`] over `i128` and the fact
//! that the index of a subgroup inside its saturation equals the gcd of the
//! maximal minors of its coefficient matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// Column-major integer matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct IMat {
    pub nrows: usize,
    pub cols: Vec<Vec<BigInt>>,
}

impl IMat {
    pub fn from_cols_i64(nrows: usize, cols: &[Vec<i64>]) -> Self {
        IMat {
            nrows,
            cols: cols
                .iter()
                .map(|c| {
                    assert_eq!(c.len(), nrows);
                    c.iter().map(|&v| BigInt::from(v)).collect()
                })
                .collect(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn cols_to_i64(&self) -> Option<Vec<Vec<i64>>> {
        self.cols
            .iter()
            .map(|c| c.iter().map(BigInt::to_i64).collect())
            .collect()
    }

    fn is_col_zero(&self, j: usize) -> bool {
        self.cols[j].iter().all(Zero::is_zero)
    }
}

/// Column Hermite normal form. Returns `(h, u)` with `h = m · u`,
/// `u` unimodular, `h` in column echelon form: pivot rows strictly
/// increase column by column, pivots are positive, entries left of a
/// pivot in its row are reduced into `[0, pivot)`, entries right of it
/// are zero.
pub fn col_hnf(m: &IMat) -> (IMat, IMat) {
    let mut h = m.clone();
    let k = h.ncols();
    let mut u = IMat {
        nrows: k,
        cols: (0..k)
            .map(|j| {
                let mut e = vec![BigInt::zero(); k];
                e[j] = BigInt::from(1);
                e
            })
            .collect(),
    };

    let mut c = 0; // next pivot column slot
    for r in 0..h.nrows {
        if c == k {
            break;
        }
        if !(c..k).any(|j| !h.cols[j][r].is_zero()) {
            continue;
        }
        // Euclidean sweep: shrink row-r entries of columns c..k until only
        // column c is nonzero there.
        loop {
            let mut best: Option<usize> = None;
            for j in c..k {
                if h.cols[j][r].is_zero() {
                    continue;
                }
                if best.map_or(true, |b| h.cols[j][r].abs() < h.cols[b][r].abs()) {
                    best = Some(j);
                }
            }
            let b = best.expect("some nonzero entry remains");
            h.cols.swap(c, b);
            u.cols.swap(c, b);
            let mut done = true;
            for j in c + 1..k {
                if h.cols[j][r].is_zero() {
                    continue;
                }
                // Round-to-nearest quotient keeps intermediate entries small.
                let q = rounded_div(&h.cols[j][r], &h.cols[c][r]);
                col_axpy(&mut h, j, c, &q);
                col_axpy(&mut u, j, c, &q);
                if !h.cols[j][r].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.cols[c][r].is_negative() {
            col_negate(&mut h, c);
            col_negate(&mut u, c);
        }
        // Canonical left reduction: entries before the pivot into [0, pivot).
        let pivot = h.cols[c][r].clone();
        for j in 0..c {
            if h.cols[j][r].is_zero() {
                continue;
            }
            let q = h.cols[j][r].div_floor(&pivot);
            col_axpy(&mut h, j, c, &q);
            col_axpy(&mut u, j, c, &q);
        }
        c += 1;
    }
    (h, u)
}

/// `col_j -= q * col_c`.
fn col_axpy(m: &mut IMat, j: usize, c: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for r in 0..m.nrows {
        let sub = q * &m.cols[c][r];
        m.cols[j][r] -= sub;
    }
}

fn col_negate(m: &mut IMat, j: usize) {
    for v in &mut m.cols[j] {
        *v = -v.clone();
    }
}

fn rounded_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    // adjust toward nearest: |r| > |b|/2 → move one step
    if &r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Integer kernel basis of the linear map `x ↦ m · x`, `x ∈ Z^ncols`.
/// The returned columns generate the full (saturated) kernel lattice.
pub fn int_kernel(m: &IMat) -> IMat {
    let (h, u) = col_hnf(m);
    let cols: Vec<Vec<BigInt>> = (0..h.ncols())
        .filter(|&j| h.is_col_zero(j))
        .map(|j| u.cols[j].clone())
        .collect();
    IMat {
        nrows: m.ncols(),
        cols,
    }
}

/// Primitive closure of the subgroup generated by integer vectors in `Z^n`.
///
/// Computed as the kernel of the kernel: the integer kernel of the generator
/// matrix (as a map on coordinates) cuts out the rational span, and integer
/// vectors in that span form the saturation. Result is in canonical column
/// HNF, so saturations of equal subgroups compare equal.
pub fn saturate_gens(gens: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    if gens.is_empty() {
        return Vec::new();
    }
    // Rows = generators: entry (g, i). Kernel of x ↦ (gen·x)_g over x ∈ Z^n.
    let rows = IMat {
        nrows: gens.len(),
        cols: (0..n)
            .map(|i| gens.iter().map(|g| BigInt::from(g[i])).collect())
            .collect(),
    };
    let perp = int_kernel(&rows); // basis of { x : gen·x = 0 ∀gen }
    let sat = if perp.ncols() == 0 {
        // Full-rank generators: the saturation is all of Z^n.
        IMat::from_cols_i64(
            n,
            &(0..n)
                .map(|i| {
                    let mut e = vec![0i64; n];
                    e[i] = 1;
                    e
                })
                .collect::<Vec<_>>(),
        )
    } else {
        let perp_rows = IMat {
            nrows: perp.ncols(),
            cols: (0..n)
                .map(|i| perp.cols.iter().map(|c| c[i].clone()).collect())
                .collect(),
        };
        int_kernel(&perp_rows)
    };
    canonicalize(&sat)
}

/// Canonical generators (column HNF, zero columns dropped) as i64 vectors.
pub fn canonicalize(m: &IMat) -> Vec<Vec<i64>> {
    let (h, _) = col_hnf(m);
    let kept: Vec<Vec<BigInt>> = h
        .cols
        .iter()
        .filter(|c| c.iter().any(|v| !v.is_zero()))
        .cloned()
        .collect();
    IMat {
        nrows: m.nrows,
        cols: kept,
    }
    .cols_to_i64()
    .expect("canonical generators fit in i64")
}

/// Does `v` lie in the integer span of `gens` (vectors in Z^n)?
pub fn in_int_span(gens: &[Vec<i64>], v: &[i64]) -> bool {
    let n = v.len();
    let m = IMat::from_cols_i64(n, gens);
    let (h, _) = col_hnf(&m);
    let mut residual: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
    for j in 0..h.ncols() {
        if h.is_col_zero(j) {
            continue;
        }
        let r = (0..n)
            .find(|&r| !h.cols[j][r].is_zero())
            .expect("nonzero column has a pivot");
        if residual[r].is_zero() {
            continue;
        }
        let (q, rem) = residual[r].div_rem(&h.cols[j][r]);
        if !rem.is_zero() {
            return false;
        }
        for i in 0..n {
            let sub = &q * &h.cols[j][i];
            residual[i] -= sub;
        }
    }
    residual.iter().all(Zero::is_zero)
}

/// Exact determinant of a square integer matrix (Bareiss elimination).
pub fn int_det(m: &IMat) -> BigInt {
    let n = m.nrows;
    assert_eq!(m.ncols(), n);
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| m.cols[j][i].clone()).collect())
        .collect();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// All k×k minors of an n×k integer matrix (columns = vectors), indexed by
/// the lexicographically ordered k-subsets of rows. These are the Plücker
/// coordinates of the wedge of the columns.
pub fn plucker_minors(cols: &[Vec<i128>], n: usize) -> Vec<i128> {
    let k = cols.len();
    let mut out = Vec::new();
    let mut subset: Vec<usize> = (0..k).collect();
    if k == 0 {
        return vec![1];
    }
    if k > n {
        return out;
    }
    loop {
        out.push(minor_det(cols, &subset));
        // next lexicographic k-subset of {0..n-1}
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if subset[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// Determinant of the square submatrix of `cols` on the given rows,
/// by cofactor expansion (k ≤ 6 in practice).
fn minor_det(cols: &[Vec<i128>], rows: &[usize]) -> i128 {
    let k = rows.len();
    match k {
        0 => 1,
        1 => cols[0][rows[0]],
        2 => cols[0][rows[0]] * cols[1][rows[1]] - cols[1][rows[0]] * cols[0][rows[1]],
        _ => {
            let mut acc: i128 = 0;
            let sub_rows: Vec<usize> = rows[1..].to_vec();
            for (idx, _) in cols.iter().enumerate() {
                let entry = cols[idx][rows[0]];
                if entry == 0 {
                    continue;
                }
                let rest: Vec<Vec<i128>> = cols
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != idx)
                    .map(|(_, c)| c.clone())
                    .collect();
                let cof = minor_det(&rest, &sub_rows);
                if idx % 2 == 0 {
                    acc += entry * cof;
                } else {
                    acc -= entry * cof;
                }
            }
            acc
        }
    }
}

/// gcd of a slice; 0 for an all-zero slice.
pub fn gcd_all(values: &[i128]) -> i128 {
    values.iter().fold(0i128, |g, &v| g.gcd(&v))
}
