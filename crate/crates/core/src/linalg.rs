//! Exact linear algebra over the rationals: dense matrices, sparse nullspaces
//! and generic ranks of linear matrix pencils.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Formats a rational as `num/den`, or as an integer when the denominator is one.
pub fn q_string(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `a` or `a/b`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// Dense row-major matrix with exact rational entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Mat, c: &Q) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (x, y) in self.data.iter_mut().zip(&other.data) {
            if !y.is_zero() {
                *x += y * c;
            }
        }
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn rank(&self) -> usize {
        rank_of(self.rows, self.cols, self.data.clone())
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !a.get(r, c).is_zero())?;
            for j in 0..n {
                a.data.swap(p * n + j, c * n + j);
                inv.data.swap(p * n + j, c * n + j);
            }
            let pivot = a.get(c, c).recip();
            for j in 0..n {
                let x = a.get(c, j) * &pivot;
                a.set(c, j, x);
                let y = inv.get(c, j) * &pivot;
                inv.set(c, j, y);
            }
            for r in 0..n {
                if r == c || a.get(r, c).is_zero() {
                    continue;
                }
                let f = a.get(r, c).clone();
                for j in 0..n {
                    let x = a.get(r, j) - a.get(c, j) * &f;
                    a.set(r, j, x);
                    let y = inv.get(r, j) - inv.get(c, j) * &f;
                    inv.set(r, j, y);
                }
            }
        }
        Some(inv)
    }

    pub fn row_vec(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row_vec(i).iter().map(q_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Mat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows).map(|i| self.row_vec(i).iter().map(q_string).collect()).collect();
        rows.serialize(serializer)
    }
}

fn rank_of(rows: usize, cols: usize, mut data: Vec<Q>) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !data[r * cols + c].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                data.swap(p * cols + j, rank * cols + j);
            }
        }
        let pivot = data[rank * cols + c].clone();
        for r in rank + 1..rows {
            let x = data[r * cols + c].clone();
            if x.is_zero() {
                continue;
            }
            let factor = x / &pivot;
            for j in c..cols {
                let sub = &data[rank * cols + j] * &factor;
                if !sub.is_zero() {
                    data[r * cols + j] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub type SparseRow = Vec<(usize, Q)>;

/// `a - c·b` for sparse rows sorted by column.
fn sparse_axpy(a: &[(usize, Q)], c: &Q, b: &[(usize, Q)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(&b[j].1 * c)));
            j += 1;
        } else {
            let v = &a[i].1 - &b[j].1 * c;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Basis of `{x : row·x = 0 for all rows}` in `Q^nvars`, via reduced row
/// echelon form. Rows must be sorted by column with no zero entries.
pub fn sparse_nullspace(rows: Vec<SparseRow>, nvars: usize) -> Vec<Vec<Q>> {
    // pivot column -> normalized row, kept fully reduced
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for mut row in rows {
        loop {
            let hit = row.iter().find(|(c, _)| pivots.contains_key(c)).map(|(c, v)| (*c, v.clone()));
            match hit {
                Some((c, v)) => row = sparse_axpy(&row, &v, &pivots[&c]),
                None => break,
            }
        }
        let Some((pc, pv)) = row.first().cloned() else {
            continue;
        };
        let inv = pv.recip();
        let row: SparseRow = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        for other in pivots.values_mut() {
            if let Ok(pos) = other.binary_search_by_key(&pc, |(c, _)| *c) {
                let v = other[pos].1.clone();
                *other = sparse_axpy(other, &v, &row);
            }
        }
        pivots.insert(pc, row);
    }
    let mut basis = Vec::new();
    for free in (0..nvars).filter(|c| !pivots.contains_key(c)) {
        let mut x = vec![Q::zero(); nvars];
        x[free] = Q::one();
        for (&pc, row) in &pivots {
            if let Ok(pos) = row.binary_search_by_key(&free, |(c, _)| *c) {
                x[pc] = -row[pos].1.clone();
            }
        }
        basis.push(x);
    }
    basis
}

/// `Σ t_i B_i` for matrices of equal shape.
pub fn combine(blocks: &[&Mat], coeffs: &[Q]) -> Mat {
    let (r, c) = blocks.first().map_or((0, 0), |b| (b.rows(), b.cols()));
    let mut out = Mat::zeros(r, c);
    for (b, t) in blocks.iter().zip(coeffs) {
        if !t.is_zero() {
            out.add_scaled(b, t);
        }
    }
    out
}

/// Multivariate polynomial with integer coefficients; keys are exponent
/// vectors, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    /// Exact quotient `self / d`; panics if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        let (lead_e, lead_c) = d.terms.iter().next_back().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let qe: Vec<u32> =
                e.iter().zip(lead_e).map(|(a, b)| a.checked_sub(*b).expect("inexact polynomial division")).collect();
            let (qc, r) = c.div_rem(lead_c);
            assert!(r.is_zero(), "inexact polynomial division");
            let mut t = Poly::zero();
            t.add_term(qe.clone(), qc.clone());
            rem = rem.sub(&t.mul(d));
            quot.add_term(qe, qc);
        }
        quot
    }
}

/// Clears denominators of a rational matrix by a positive scalar.
fn integral(m: &Mat) -> Vec<BigInt> {
    let l = m.data.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    m.data.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect()
}

/// Rank of `Σ t_i B_i` over the rational function field `Q(t_1, …, t_k)`,
/// computed by fraction-free elimination on polynomial entries.
pub fn generic_rank(blocks: &[&Mat]) -> usize {
    let Some(first) = blocks.first() else {
        return 0;
    };
    let (r, c) = (first.rows(), first.cols());
    let blocks: Vec<&&Mat> = blocks.iter().filter(|b| !b.is_zero()).collect();
    let k = blocks.len();
    if k == 0 {
        return 0;
    }
    let ints: Vec<Vec<BigInt>> = blocks.iter().map(|b| integral(b)).collect();
    let mut a: Vec<Vec<Poly>> = (0..r)
        .map(|i| {
            (0..c)
                .map(|j| {
                    let mut p = Poly::zero();
                    for (v, m) in ints.iter().enumerate() {
                        let mut e = vec![0; k];
                        e[v] = 1;
                        p.add_term(e, m[i * c + j].clone());
                    }
                    p
                })
                .collect()
        })
        .collect();
    let mut prev = Poly::constant(k, BigInt::one());
    let mut rank = 0;
    for step in 0..r.min(c) {
        // sparsest nonzero pivot keeps intermediate polynomials small
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(step) {
            for (j, p) in row.iter().enumerate().skip(step) {
                if !p.is_zero() && best.is_none_or(|(_, _, n)| p.term_count() < n) {
                    best = Some((i, j, p.term_count()));
                }
            }
        }
        let Some((pi, pj, _)) = best else {
            break;
        };
        a.swap(step, pi);
        for row in a.iter_mut() {
            row.swap(step, pj);
        }
        let pivot = a[step][step].clone();
        for i in step + 1..r {
            let lead = a[i][step].clone();
            for j in step + 1..c {
                let num = pivot.mul(&a[i][j]).sub(&lead.mul(&a[step][j]));
                a[i][j] = if num.is_zero() { num } else { num.exact_div(&prev) };
            }
            a[i][step] = Poly::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Absolute value helper for reporting witness sizes.
pub fn max_abs(values: &[Q]) -> Q {
    values.iter().map(|v| v.abs()).max().unwrap_or_else(Q::zero)
}
