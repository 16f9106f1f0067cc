//! Brute-force reference: walks enumerated by DFS, bands as Jordan blocks,
//! Hom spaces by dense nullspace, monomorphisms by grid search and GR
//! measures by recursion over all shorter indecomposables. Shares no code
//! with the library beyond the quiver's arrow list.
#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeSet;

use grtame::linalg::Q;
use grtame::Quiver;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Matrix = Vec<Vec<Q>>;

fn int(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn rank(mut m: Matrix) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone() / &pivot;
                for k in c..cols {
                    let d = &f * &m[r][k];
                    m[i][k] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

fn nullspace(m: &Matrix, nvars: usize) -> Vec<Vec<Q>> {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nvars {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = Q::one() / &a[r][c];
        for k in 0..nvars {
            a[r][k] = &a[r][k] * &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..nvars {
                    let d = &f * &a[r][k];
                    a[i][k] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = Vec::new();
    for free in (0..nvars).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); nvars];
        v[free] = Q::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        out.push(v);
    }
    out
}

/// A representation with one matrix per arrow, `dims[target] × dims[source]`.
#[derive(Clone, Debug)]
pub struct OModule {
    pub name: String,
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
    pub band: bool,
}

impl OModule {
    pub fn length(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// Step along arrow `arrow`, forwards or backwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Step {
    arrow: usize,
    back: bool,
}

fn walk_vertices(q: &Quiver, start: usize, steps: &[Step]) -> Vec<usize> {
    let mut vs = vec![start];
    for s in steps {
        let a = &q.arrows()[s.arrow];
        vs.push(if s.back { a.source } else { a.target });
    }
    vs
}

fn string_module(q: &Quiver, start: usize, steps: &[Step]) -> OModule {
    let vs = walk_vertices(q, start, steps);
    let mut dims = vec![0; q.vertex_count()];
    let mut local = Vec::new();
    for &v in &vs {
        local.push(dims[v]);
        dims[v] += 1;
    }
    let mut maps: Vec<Matrix> =
        q.arrows().iter().map(|a| vec![vec![Q::zero(); dims[a.source]]; dims[a.target]]).collect();
    for (i, s) in steps.iter().enumerate() {
        let (from, to) = if s.back { (i + 1, i) } else { (i, i + 1) };
        maps[s.arrow][local[to]][local[from]] = Q::one();
    }
    let name = if steps.is_empty() {
        format!("S{start}")
    } else {
        steps.iter().map(|s| format!("{}{}", if s.back { "~" } else { "" }, s.arrow)).collect::<Vec<_>>().join(".")
    };
    OModule { name, dims, maps, band: false }
}

/// All string modules with at most `max_len` composition factors.
pub fn strings(q: &Quiver, max_len: usize) -> Vec<OModule> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for v in 0..q.vertex_count() {
        out.push(string_module(q, v, &[]));
    }
    fn dfs(
        q: &Quiver,
        start: usize,
        at: usize,
        steps: &mut Vec<Step>,
        max: usize,
        seen: &mut BTreeSet<Vec<Step>>,
        out: &mut Vec<OModule>,
    ) {
        if steps.len() == max {
            return;
        }
        for (id, a) in q.arrows().iter().enumerate() {
            for back in [false, true] {
                let from = if back { a.target } else { a.source };
                if from != at {
                    continue;
                }
                if steps.last() == Some(&Step { arrow: id, back: !back }) {
                    continue;
                }
                steps.push(Step { arrow: id, back });
                let rev: Vec<Step> = steps.iter().rev().map(|s| Step { arrow: s.arrow, back: !s.back }).collect();
                let key = std::cmp::min(steps.clone(), rev);
                if seen.insert(key) {
                    out.push(string_module(q, start, steps));
                }
                let next = if back { a.source } else { a.target };
                dfs(q, start, next, steps, max, seen, out);
                steps.pop();
            }
        }
    }
    for v in 0..q.vertex_count() {
        dfs(q, v, v, &mut Vec::new(), max_len.saturating_sub(1), &mut seen, &mut out);
    }
    out
}

/// `H_m` over a cycle: identities everywhere and `J_m(1)` on arrow 0.
pub fn homogeneous(q: &Quiver, m: usize) -> OModule {
    let dims = vec![m; q.vertex_count()];
    let maps = (0..q.arrows().len())
        .map(|a| {
            (0..m)
                .map(|i| (0..m).map(|j| if i == j || (a == 0 && j == i + 1) { Q::one() } else { Q::zero() }).collect())
                .collect()
        })
        .collect();
    OModule { name: format!("H{m}"), dims, maps, band: true }
}

/// Strings up to `max_len` plus `H_m` with `m·|δ| ≤ max_len`.
pub fn indecomposables(q: &Quiver, max_len: usize) -> Vec<OModule> {
    let mut out = strings(q, max_len);
    for m in 1..=max_len / q.vertex_count() {
        out.push(homogeneous(q, m));
    }
    out.sort_by_key(OModule::length);
    out
}

/// Basis of `Hom(x, y)`, each map stored as one matrix per vertex.
pub fn hom(q: &Quiver, x: &OModule, y: &OModule) -> Vec<Vec<Matrix>> {
    let n = q.vertex_count();
    let mut offset = vec![0; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + y.dims[v] * x.dims[v];
    }
    let nvars = offset[n];
    let var = |v: usize, i: usize, j: usize| offset[v] + i * x.dims[v] + j;
    let mut eqs = Vec::new();
    for (id, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        // y_a f_s - f_t x_a = 0
        for i in 0..y.dims[t] {
            for j in 0..x.dims[s] {
                let mut row = vec![Q::zero(); nvars];
                for k in 0..y.dims[s] {
                    row[var(s, k, j)] += &y.maps[id][i][k];
                }
                for k in 0..x.dims[t] {
                    row[var(t, i, k)] -= &x.maps[id][k][j];
                }
                eqs.push(row);
            }
        }
    }
    nullspace(&eqs, nvars)
        .into_iter()
        .map(|v| {
            (0..n)
                .map(|w| (0..y.dims[w]).map(|i| (0..x.dims[w]).map(|j| v[var(w, i, j)].clone()).collect()).collect())
                .collect()
        })
        .collect()
}

fn injective_at(basis: &[Vec<Matrix>], coeffs: &[Q], dims: &[usize]) -> bool {
    (0..dims.len()).all(|v| {
        if dims[v] == 0 {
            return true;
        }
        let rows = basis[0][v].len();
        let mut m = vec![vec![Q::zero(); dims[v]]; rows];
        for (b, c) in basis.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            for i in 0..rows {
                for j in 0..dims[v] {
                    m[i][j] += c * &b[v][i][j];
                }
            }
        }
        rank(m) == dims[v]
    })
}

/// Whether some map `x → y` is injective.
///
/// The product of one maximal minor per vertex is a homogeneous polynomial of
/// degree `|x|` in the coefficients, so it is nonzero somewhere on the grid
/// `{1} × {0..|x|}^(d-1)` as soon as it is nonzero at all.
pub fn embeds(q: &Quiver, x: &OModule, y: &OModule) -> bool {
    if x.dims.iter().zip(&y.dims).any(|(a, b)| a > b) {
        return false;
    }
    let basis = hom(q, x, y);
    if basis.is_empty() {
        return false;
    }
    let d = basis.len();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..4 {
        let c: Vec<Q> = (0..d).map(|_| int(rng.gen_range(-1000..=1000))).collect();
        if injective_at(&basis, &c, &x.dims) {
            return true;
        }
    }
    let side = x.length() as i64 + 1;
    let mut c = vec![0i64; d];
    c[0] = 1;
    loop {
        let coeffs: Vec<Q> = c.iter().map(|&k| int(k)).collect();
        if injective_at(&basis, &coeffs, &x.dims) {
            return true;
        }
        let mut k = 1;
        while k < d && c[k] == side - 1 {
            c[k] = 0;
            k += 1;
        }
        if k == d {
            return false;
        }
        c[k] += 1;
    }
}

/// The GR order: the smallest element of the symmetric difference lies in
/// the larger set.
pub fn gr_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let sa: BTreeSet<u32> = a.iter().copied().collect();
    let sb: BTreeSet<u32> = b.iter().copied().collect();
    match sa.symmetric_difference(&sb).next() {
        None => Ordering::Equal,
        Some(x) if sa.contains(x) => Ordering::Greater,
        Some(_) => Ordering::Less,
    }
}

/// Measures of `modules` (sorted by length), each the maximum over all
/// shorter indecomposables that embed, extended by its own length.
pub fn measures(q: &Quiver, modules: &[OModule]) -> Vec<Vec<u32>> {
    let mut mu: Vec<Vec<u32>> = Vec::with_capacity(modules.len());
    for (i, m) in modules.iter().enumerate() {
        let mut best: Option<Vec<u32>> = None;
        for (j, x) in modules[..i].iter().enumerate() {
            if x.length() >= m.length() {
                break;
            }
            if best.as_ref().is_some_and(|b| gr_cmp(&mu[j], b) != Ordering::Greater) {
                continue;
            }
            if embeds(q, x, m) {
                best = Some(mu[j].clone());
            }
        }
        let mut v = best.unwrap_or_default();
        v.push(m.length() as u32);
        mu.push(v);
    }
    mu
}

/// Number of GR submodules of `modules[i]` up to isomorphism.
pub fn gr_count(q: &Quiver, modules: &[OModule], mu: &[Vec<u32>], i: usize) -> usize {
    let target = &mu[i][..mu[i].len() - 1];
    modules
        .iter()
        .enumerate()
        .filter(|(j, x)| x.length() < modules[i].length() && mu[*j] == target && embeds(q, x, &modules[i]))
        .count()
}
