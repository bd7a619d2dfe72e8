//! Smith normal form: a dense routine that can track both transforms, and a
//! sparse routine that only produces invariant factors.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::domain::{row_get, row_sub_mul, Domain, Row};

pub(crate) struct DenseSnf<E> {
    /// Diagonal of length `min(rows, cols)`; zeros trail.
    pub diag: Vec<E>,
    pub u: Option<Vec<Vec<E>>>,
    pub v: Option<Vec<Vec<E>>>,
    pub vinv: Option<Vec<Vec<E>>>,
}

struct State<'a, D: Domain> {
    d: &'a D,
    a: Vec<Vec<D::E>>,
    u: Option<Vec<Vec<D::E>>>,
    v: Option<Vec<Vec<D::E>>>,
    vinv: Option<Vec<Vec<D::E>>>,
    rows: usize,
    cols: usize,
}

fn identity<D: Domain>(d: &D, n: usize) -> Vec<Vec<D::E>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { d.one() } else { d.zero() }).collect()).collect()
}

fn axpy_row<D: Domain>(d: &D, m: &mut [Vec<D::E>], dst: usize, q: &D::E, src: usize) {
    // row_dst += q * row_src
    let (a, b) = if dst < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in a.iter_mut().zip(b.iter()) {
        if !d.is_zero(y) {
            *x = d.add(x, &d.mul(q, y));
        }
    }
}

impl<D: Domain> State<'_, D> {
    /// `row_i -= q * row_t`.
    fn row_op(&mut self, i: usize, q: &D::E, t: usize) {
        let nq = self.d.neg(q);
        axpy_row(self.d, &mut self.a, i, &nq, t);
        if let Some(u) = self.u.as_mut() {
            axpy_row(self.d, u, i, &nq, t);
        }
    }

    /// `col_j -= q * col_t`.
    fn col_op(&mut self, j: usize, q: &D::E, t: usize) {
        let d = self.d;
        for row in self.a.iter_mut() {
            if !d.is_zero(&row[t]) {
                row[j] = d.sub(&row[j], &d.mul(q, &row[t]));
            }
        }
        if let Some(v) = self.v.as_mut() {
            for row in v.iter_mut() {
                if !d.is_zero(&row[t]) {
                    row[j] = d.sub(&row[j], &d.mul(q, &row[t]));
                }
            }
        }
        if let Some(vi) = self.vinv.as_mut() {
            // inverse of the column operation acts on rows: row_t += q * row_j
            axpy_row(d, vi, t, q, j);
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            if let Some(u) = self.u.as_mut() {
                u.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        if let Some(v) = self.v.as_mut() {
            for row in v.iter_mut() {
                row.swap(i, j);
            }
        }
        if let Some(vi) = self.vinv.as_mut() {
            vi.swap(i, j);
        }
    }

    fn scale_row(&mut self, t: usize, unit: &D::E) {
        let d = self.d;
        for x in self.a[t].iter_mut() {
            *x = d.mul(unit, x);
        }
        if let Some(u) = self.u.as_mut() {
            for x in u[t].iter_mut() {
                *x = d.mul(unit, x);
            }
        }
    }

    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let d = self.d;
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if d.is_zero(x) {
                    continue;
                }
                match best {
                    Some((bi, bj)) if !d.smaller(x, &self.a[bi][bj]) => {}
                    _ => best = Some((i, j)),
                }
                if d.is_unit(x) {
                    return best;
                }
            }
        }
        best
    }

    /// Clears row and column `t` around the pivot; returns once both are zero.
    fn clear_cross(&mut self, t: usize) {
        let d = self.d.clone();
        loop {
            let mut dirty = false;
            for i in t + 1..self.rows {
                if d.is_zero(&self.a[i][t]) {
                    continue;
                }
                let (q, r) = d.div_rem(&self.a[i][t], &self.a[t][t]);
                self.row_op(i, &q, t);
                dirty |= !d.is_zero(&r);
            }
            for j in t + 1..self.cols {
                if d.is_zero(&self.a[t][j]) {
                    continue;
                }
                let (q, r) = d.div_rem(&self.a[t][j], &self.a[t][t]);
                self.col_op(j, &q, t);
                dirty |= !d.is_zero(&r);
            }
            if !dirty {
                return;
            }
            // bring the smallest leftover onto the diagonal
            let mut best = (t, t);
            for i in t + 1..self.rows {
                let x = &self.a[i][t];
                if !d.is_zero(x) && d.smaller(x, &self.a[best.0][best.1]) {
                    best = (i, t);
                }
            }
            for j in t + 1..self.cols {
                let x = &self.a[t][j];
                if !d.is_zero(x) && d.smaller(x, &self.a[best.0][best.1]) {
                    best = (t, j);
                }
            }
            self.swap_rows(t, best.0);
            self.swap_cols(t, best.1);
        }
    }

    fn non_divisible(&self, t: usize) -> Option<usize> {
        let p = &self.a[t][t];
        if self.d.is_unit(p) {
            return None;
        }
        (t + 1..self.rows).find(|&i| (t + 1..self.cols).any(|j| !self.d.divides(p, &self.a[i][j])))
    }
}

pub(crate) fn dense_snf<D: Domain>(
    d: &D,
    a: Vec<Vec<D::E>>,
    rows: usize,
    cols: usize,
    track_u: bool,
    track_v: bool,
) -> DenseSnf<D::E> {
    let mut st = State {
        d,
        a,
        u: track_u.then(|| identity(d, rows)),
        v: track_v.then(|| identity(d, cols)),
        vinv: track_v.then(|| identity(d, cols)),
        rows,
        cols,
    };
    let n = rows.min(cols);
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        let Some((pi, pj)) = st.min_entry(t) else { break };
        st.swap_rows(t, pi);
        st.swap_cols(t, pj);
        loop {
            st.clear_cross(t);
            match st.non_divisible(t) {
                Some(i) => {
                    let one = d.one();
                    axpy_row(d, &mut st.a, t, &one, i);
                    if let Some(u) = st.u.as_mut() {
                        axpy_row(d, u, t, &one, i);
                    }
                }
                None => break,
            }
        }
        let unit = d.normalizing_unit(&st.a[t][t]);
        if unit != d.one() {
            st.scale_row(t, &unit);
        }
        diag.push(st.a[t][t].clone());
    }
    while diag.len() < n {
        diag.push(d.zero());
    }
    DenseSnf { diag, u: st.u, v: st.v, vinv: st.vinv }
}

/// Rank and non-unit invariant factors of a sparse matrix given by rows.
pub(crate) struct SparseFactors<E> {
    pub rank: usize,
    pub factors: Vec<E>,
}

/// Eliminates unit pivots with a fill-reducing order, then finishes the
/// residual block densely.
pub(crate) fn sparse_invariant_factors<D: Domain>(d: &D, ncols: usize, rows: Vec<Row<D::E>>) -> SparseFactors<D::E> {
    let mut rows: Vec<Option<Row<D::E>>> = rows.into_iter().map(|r| (!r.is_empty()).then_some(r)).collect();
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); ncols];
    for (i, r) in rows.iter().enumerate() {
        if let Some(r) = r {
            for (c, _) in r {
                col_rows[*c].push(i);
            }
        }
    }
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
        rows.iter().enumerate().filter_map(|(i, r)| r.as_ref().map(|r| Reverse((r.len(), i)))).collect();
    let mut rank = 0;
    while let Some(Reverse((len, i))) = heap.pop() {
        let Some(row) = rows[i].as_ref() else { continue };
        if row.len() != len {
            continue;
        }
        // unit entry whose column is sparsest
        let pivot = row
            .iter()
            .filter(|(_, v)| d.is_unit(v))
            .min_by_key(|(c, _)| col_rows[*c].len())
            .map(|(c, v)| (*c, v.clone()));
        let Some((c, pv)) = pivot else { continue };
        let row = rows[i].take().unwrap();
        rank += 1;
        let inv = d.inv(&pv);
        let targets = std::mem::take(&mut col_rows[c]);
        for s in targets {
            if s == i {
                continue;
            }
            let Some(other) = rows[s].as_ref() else { continue };
            let Some(x) = row_get(other, c) else { continue };
            let q = d.mul(x, &inv);
            let new = row_sub_mul(d, other, &q, &row);
            for (cc, _) in &new {
                if *cc != c && row_get(other, *cc).is_none() {
                    col_rows[*cc].push(s);
                }
            }
            if new.is_empty() {
                rows[s] = None;
            } else {
                heap.push(Reverse((new.len(), s)));
                rows[s] = Some(new);
            }
        }
    }
    let rest: Vec<Row<D::E>> = rows.into_iter().flatten().collect();
    if rest.is_empty() {
        return SparseFactors { rank, factors: Vec::new() };
    }
    let mut cols: Vec<usize> = rest.iter().flat_map(|r| r.iter().map(|(c, _)| *c)).collect();
    cols.sort_unstable();
    cols.dedup();
    let dense: Vec<Vec<D::E>> = rest
        .iter()
        .map(|r| {
            let mut v = vec![d.zero(); cols.len()];
            for (c, x) in r {
                v[cols.binary_search(c).unwrap()] = x.clone();
            }
            v
        })
        .collect();
    let snf = dense_snf(d, dense, rest.len(), cols.len(), false, false);
    let mut factors = Vec::new();
    for x in snf.diag {
        if d.is_zero(&x) {
            break;
        }
        rank += 1;
        if !d.is_unit(&x) {
            factors.push(x);
        }
    }
    SparseFactors { rank, factors }
}
