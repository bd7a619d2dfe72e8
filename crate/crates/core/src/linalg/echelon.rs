//! Sparse row echelon forms over a Euclidean domain.
//!
//! Rows are inserted one at a time into a Hermite-style pivot table. Over
//! `Z` a collision on a pivot column is resolved by a unimodular 2x2
//! transformation built from the extended gcd, so the row lattice is
//! preserved exactly.

use std::collections::BTreeMap;

use super::domain::{row_combine, row_get, row_scale, row_sub_mul, Domain, Row};

pub(crate) struct Echelon<D: Domain> {
    pub d: D,
    limit: usize,
    pivots: BTreeMap<usize, Row<D::E>>,
    /// Rows whose leading column is at or beyond `limit`.
    rest: Vec<Row<D::E>>,
}

impl<D: Domain> Echelon<D> {
    pub fn new(d: D, limit: usize) -> Self {
        Echelon { d, limit, pivots: BTreeMap::new(), rest: Vec::new() }
    }

    pub fn from_rows(d: D, limit: usize, rows: impl IntoIterator<Item = Row<D::E>>) -> Self {
        let mut e = Self::new(d, limit);
        for r in rows {
            e.insert(r);
        }
        e
    }

    fn normalized(&self, row: Row<D::E>) -> Row<D::E> {
        let u = self.d.normalizing_unit(&row[0].1);
        if u == self.d.one() {
            row
        } else {
            row_scale(&self.d, &u, &row)
        }
    }

    pub fn insert(&mut self, mut row: Row<D::E>) {
        let d = self.d.clone();
        loop {
            let Some(&(c, _)) = row.first() else { return };
            if c >= self.limit {
                self.rest.push(row);
                return;
            }
            let Some(p) = self.pivots.get(&c) else {
                let row = self.normalized(row);
                self.pivots.insert(c, row);
                return;
            };
            let pc = &p[0].1;
            let rc = &row[0].1;
            let (q, rem) = d.div_rem(rc, pc);
            if d.is_zero(&rem) {
                row = row_sub_mul(&d, &row, &q, p);
                continue;
            }
            // gcd step: [s t; rc/g -pc/g] has determinant -1
            let (g, s, t) = d.gcdext(pc, rc);
            let a = d.div_rem(rc, &g).0;
            let b = d.div_rem(pc, &g).0;
            let new_pivot = row_combine(&d, &s, p, &t, &row);
            let leftover = row_combine(&d, &a, p, &d.neg(&b), &row);
            let new_pivot = self.normalized(new_pivot);
            self.pivots.insert(c, new_pivot);
            row = leftover;
        }
    }

    pub fn take_rest(&mut self) -> Vec<Row<D::E>> {
        std::mem::take(&mut self.rest)
    }

    /// Reduces entries above each pivot, giving a canonical Hermite form.
    pub fn reduce_above(&mut self) {
        let d = self.d.clone();
        let cols: Vec<usize> = self.pivots.keys().copied().collect();
        for (idx, &c) in cols.iter().enumerate() {
            let pivot = self.pivots[&c].clone();
            let pv = pivot[0].1.clone();
            for &earlier in &cols[..idx] {
                let row = self.pivots.get_mut(&earlier).unwrap();
                if let Some(e) = row_get(row, c) {
                    let (q, _) = d.div_rem_canonical(e, &pv);
                    if !d.is_zero(&q) {
                        *row = row_sub_mul(&d, row, &q, &pivot);
                    }
                }
            }
        }
    }

    /// Rows in ascending pivot order.
    pub fn into_rows(self) -> Vec<Row<D::E>> {
        self.pivots.into_values().collect()
    }
}

/// Echelon basis of a submodule, able to express members in its basis.
pub(crate) struct EchelonBasis<D: Domain> {
    pub d: D,
    /// Ascending pivot order.
    pub rows: Vec<Row<D::E>>,
}

impl<D: Domain> EchelonBasis<D> {
    pub fn new(d: D, rows: impl IntoIterator<Item = Row<D::E>>, reduce: bool) -> Self {
        let mut e = Echelon::from_rows(d.clone(), usize::MAX, rows);
        if reduce {
            e.reduce_above();
        }
        EchelonBasis { d, rows: e.into_rows() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Coordinates of `v` with respect to the basis rows, if `v` lies in
    /// their span.
    pub fn coordinates(&self, v: &Row<D::E>) -> Option<Vec<D::E>> {
        let d = &self.d;
        let mut v = v.clone();
        let mut coords = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let (pc, pv) = (&row[0].0, &row[0].1);
            let c = match v.first() {
                Some((col, _)) if col < pc => return None,
                Some((col, val)) if col == pc => {
                    let (q, r) = d.div_rem(val, pv);
                    if !d.is_zero(&r) {
                        return None;
                    }
                    q
                }
                _ => d.zero(),
            };
            if !d.is_zero(&c) {
                v = row_sub_mul(d, &v, &c, row);
            }
            coords.push(c);
        }
        v.is_empty().then_some(coords)
    }

    pub fn contains(&self, v: &Row<D::E>) -> bool {
        self.coordinates(v).is_some()
    }

    /// Canonical remainder of `v` modulo the span: each pivot entry is
    /// reduced in turn.
    pub fn reduce(&self, v: &Row<D::E>) -> Row<D::E> {
        let d = &self.d;
        let mut v = v.clone();
        for row in &self.rows {
            let (pc, pv) = (row[0].0, &row[0].1);
            if let Some(x) = row_get(&v, pc) {
                let (q, _) = d.div_rem_canonical(x, pv);
                if !d.is_zero(&q) {
                    v = row_sub_mul(d, &v, &q, row);
                }
            }
        }
        v
    }
}

/// Column reduction of a matrix `A` given by its columns: yields a kernel
/// basis and a solver for `A x = b`.
pub(crate) struct ColumnReduction<D: Domain> {
    d: D,
    /// Pivot rows of `[A^T | I]` restricted to the `A^T` part, together with
    /// their transformation parts.
    image: Vec<(Row<D::E>, Row<D::E>)>,
    kernel: Vec<Row<D::E>>,
}

impl<D: Domain> ColumnReduction<D> {
    pub fn new(d: D, nrows: usize, columns: Vec<Row<D::E>>) -> Self {
        let mut ech = Echelon::new(d.clone(), nrows);
        for (j, mut col) in columns.into_iter().enumerate() {
            col.push((nrows + j, d.one()));
            ech.insert(col);
        }
        let shift = |r: &[(usize, D::E)]| -> Row<D::E> { r.iter().map(|(c, v)| (c - nrows, v.clone())).collect() };
        let kernel_rows: Vec<Row<D::E>> = ech.take_rest().iter().map(|r| shift(r)).collect();
        let image = ech
            .into_rows()
            .into_iter()
            .map(|r| {
                let split = r.partition_point(|(c, _)| *c < nrows);
                (r[..split].to_vec(), shift(&r[split..]))
            })
            .collect();
        // canonical Hermite form for the kernel
        let kernel = EchelonBasis::new(d.clone(), kernel_rows, true).rows;
        ColumnReduction { d, image, kernel }
    }

    pub fn kernel(&self) -> &[Row<D::E>] {
        &self.kernel
    }

    /// Some `x` with `A x = b`.
    pub fn solve(&self, b: &Row<D::E>) -> Option<Row<D::E>> {
        let d = &self.d;
        let mut v = b.clone();
        let mut x: Row<D::E> = Vec::new();
        for (e, t) in &self.image {
            let (pc, pv) = (&e[0].0, &e[0].1);
            match v.first() {
                Some((col, _)) if col < pc => return None,
                Some((col, val)) if col == pc => {
                    let (q, r) = d.div_rem(val, pv);
                    if !d.is_zero(&r) {
                        return None;
                    }
                    v = row_sub_mul(d, &v, &q, e);
                    x = row_combine(d, &d.one(), &x, &q, t);
                }
                _ => {}
            }
        }
        v.is_empty().then_some(x)
    }
}
