use std::collections::BTreeMap;

use super::domain::{row_combine, Domain, Row};

fn reduce_row<D: Domain>(d: &D, n: &D::E, r: Row<D::E>) -> Row<D::E> {
    r.into_iter().map(|(i, v)| (i, d.div_rem_canonical(&v, n).1)).filter(|(_, v)| !d.is_zero(v)).collect()
}

struct Col<E> {
    w: Row<E>,
    x: Row<E>,
}

/// Bucketed elimination modulo `n` on the `w` parts, carrying `x` along.
/// Returns the pivot columns (one per leading index, ascending) and the
/// `x` parts of columns whose `w` part vanished. A pivot `g` that is not a
/// unit leaves behind the column scaled by `n / gcd(g, n)`, which vanishes
/// in the pivot row.
fn eliminate<D: Domain>(d: &D, n: &D::E, cols: Vec<Col<D::E>>) -> (Vec<Col<D::E>>, Vec<Row<D::E>>) {
    let mut pool: Vec<Option<Col<D::E>>> = Vec::new();
    let mut buckets: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut kernel = Vec::new();
    let mut pivots = Vec::new();
    let mut push = |c: Col<D::E>, pool: &mut Vec<Option<Col<D::E>>>, buckets: &mut BTreeMap<usize, Vec<usize>>| {
        if let Some((lead, _)) = c.w.first() {
            buckets.entry(*lead).or_default().push(pool.len());
            pool.push(Some(c));
        } else if !c.x.is_empty() {
            kernel.push(c.x);
        }
    };
    for c in cols {
        let col = Col { w: reduce_row(d, n, c.w), x: c.x };
        push(col, &mut pool, &mut buckets);
    }
    while let Some((&i, _)) = buckets.iter().next() {
        let ids = buckets.remove(&i).unwrap_or_default();
        let mut piv = pool[ids[0]].take().expect("live column");
        for &k in &ids[1..] {
            let other = pool[k].take().expect("live column");
            let a = piv.w[0].1.clone();
            let b = other.w[0].1.clone();
            let (g, s, t) = d.gcdext(&a, &b);
            let (ag, bg) = (d.div_rem(&a, &g).0, d.div_rem(&b, &g).0);
            let rest = Col {
                w: reduce_row(d, n, row_combine(d, &bg, &piv.w, &d.neg(&ag), &other.w)),
                x: reduce_row(d, n, row_combine(d, &bg, &piv.x, &d.neg(&ag), &other.x)),
            };
            piv = Col {
                w: reduce_row(d, n, row_combine(d, &s, &piv.w, &t, &other.w)),
                x: reduce_row(d, n, row_combine(d, &s, &piv.x, &t, &other.x)),
            };
            push(rest, &mut pool, &mut buckets);
        }
        let g = piv.w[0].1.clone();
        let (h, _, _) = d.gcdext(&g, n);
        if !d.is_unit(&h) {
            let ann = d.div_rem(n, &h).0;
            let scaled = Col {
                w: reduce_row(d, n, piv.w.iter().map(|(r, v)| (*r, d.mul(&ann, v))).collect()),
                x: reduce_row(d, n, piv.x.iter().map(|(r, v)| (*r, d.mul(&ann, v))).collect()),
            };
            push(scaled, &mut pool, &mut buckets);
        }
        pivots.push(piv);
    }
    (pivots, kernel)
}

/// A unit `u` mod `n` with `u g ≡ gcd(g, n)`.
fn normalizing_unit_mod<D: Domain>(d: &D, n: &D::E, g: &D::E) -> D::E {
    let (h, s, _) = d.gcdext(g, n);
    let step = d.div_rem(n, &h).0;
    let mut u = d.div_rem_canonical(&s, n).1;
    while !d.is_unit(&d.gcdext(&u, n).0) {
        u = d.add(&u, &step);
    }
    u
}

/// Rows of a triangular basis of `span(rows) + n Z^dim`: the Howell form
/// of the rows, with `n e_c` added for every column `c` without a pivot.
pub(crate) fn lattice_basis_mod<D: Domain>(d: &D, n: &D::E, dim: usize, rows: Vec<Row<D::E>>) -> Vec<Row<D::E>> {
    let mut howell = echelon_mod(d, n, rows).into_iter().peekable();
    let mut out = Vec::with_capacity(dim);
    for c in 0..dim {
        match howell.peek() {
            Some(r) if r[0].0 == c => out.push(howell.next().expect("peeked")),
            _ => out.push(vec![(c, n.clone())]),
        }
    }
    out
}

/// Generators of `{x : A x ≡ 0 mod n}` for `A` given by its columns.
pub(crate) fn kernel_mod<D: Domain>(d: &D, n: &D::E, cols: Vec<Row<D::E>>) -> Vec<Row<D::E>> {
    let cols = cols.into_iter().enumerate().map(|(j, c)| Col { w: c, x: vec![(j, d.one())] }).collect();
    eliminate(d, n, cols).1
}

/// Howell form of the span of `rows` in `(Z/n)^dim`: entries in `[0, n)`,
/// leading entries dividing `n` and entries above each pivot reduced.
pub(crate) fn echelon_mod<D: Domain>(d: &D, n: &D::E, rows: Vec<Row<D::E>>) -> Vec<Row<D::E>> {
    let cols = rows.into_iter().map(|w| Col { w, x: Vec::new() }).collect();
    let mut pivots: Vec<Row<D::E>> = eliminate(d, n, cols)
        .0
        .into_iter()
        .map(|c| {
            let u = normalizing_unit_mod(d, n, &c.w[0].1);
            reduce_row(d, n, c.w.iter().map(|(i, v)| (*i, d.mul(&u, v))).collect())
        })
        .collect();
    for k in 0..pivots.len() {
        let (col, lead) = pivots[k][0].clone();
        for j in 0..k {
            let Some(e) = pivots[j].iter().find(|(i, _)| *i == col).map(|(_, v)| v.clone()) else { continue };
            let q = d.div_rem_canonical(&e, &lead).0;
            if !d.is_zero(&q) {
                let r = row_combine(d, &d.one(), &pivots[j], &d.neg(&q), &pivots[k]);
                pivots[j] = reduce_row(d, n, r);
            }
        }
    }
    pivots
}
