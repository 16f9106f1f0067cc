//! Hom spaces between representations and existence of monomorphisms and
//! epimorphisms via generic ranks.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::linalg::{combine, generic_rank, sparse_nullspace, Mat, SparseRow, Q};
use crate::qkit::{Quiver, StringWord};
use crate::strmod::{factor_intervals, substring_submodules, Representation};

/// A homomorphism given by one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomMap {
    pub blocks: Vec<Mat>,
}

impl HomMap {
    /// Residual check of `f_t X_a = Y_a f_s` for every arrow.
    pub fn is_homomorphism(&self, q: &Quiver, x: &Representation, y: &Representation) -> bool {
        q.arrows()
            .iter()
            .enumerate()
            .all(|(a, arrow)| self.blocks[arrow.target].mul(x.map(a)) == y.map(a).mul(&self.blocks[arrow.source]))
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn compose(&self, first: &HomMap) -> HomMap {
        HomMap { blocks: self.blocks.iter().zip(&first.blocks).map(|(g, f)| g.mul(f)).collect() }
    }

    pub fn trace(&self) -> Q {
        self.blocks.iter().map(|b| b.trace()).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomBasis {
    pub domain_dims: Vec<usize>,
    pub codomain_dims: Vec<usize>,
    pub maps: Vec<HomMap>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.maps.is_empty()
    }

    /// `Σ t_i f_i`.
    pub fn combination(&self, coeffs: &[Q]) -> HomMap {
        let blocks = (0..self.domain_dims.len())
            .map(|v| {
                let parts: Vec<&Mat> = self.maps.iter().map(|m| &m.blocks[v]).collect();
                if parts.is_empty() {
                    Mat::zeros(self.codomain_dims[v], self.domain_dims[v])
                } else {
                    combine(&parts, coeffs)
                }
            })
            .collect();
        HomMap { blocks }
    }
}

/// Exact basis of `Hom(X, Y)`: the solutions of `f_t X_a = Y_a f_s`.
pub fn hom_basis(q: &Quiver, x: &Representation, y: &Representation) -> HomBasis {
    let dx = x.dims();
    let dy = y.dims();
    let k = q.vertex_count();
    let mut offset = vec![0; k + 1];
    for v in 0..k {
        offset[v + 1] = offset[v] + dx[v] * dy[v];
    }
    let nvars = offset[k];
    let var = |v: usize, i: usize, j: usize| offset[v] + i * dx[v] + j;
    let mut rows: Vec<SparseRow> = Vec::new();
    for (a, arrow) in q.arrows().iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        let xa = x.map(a);
        let ya = y.map(a);
        for i in 0..dy[t] {
            for j in 0..dx[s] {
                let mut row: Vec<(usize, Q)> = Vec::new();
                for kk in 0..dx[t] {
                    let c = xa.get(kk, j);
                    if !c.is_zero() {
                        row.push((var(t, i, kk), c.clone()));
                    }
                }
                for kk in 0..dy[s] {
                    let c = ya.get(i, kk);
                    if !c.is_zero() {
                        row.push((var(s, kk, j), -c.clone()));
                    }
                }
                row.sort_by_key(|(c, _)| *c);
                // merge duplicate columns
                let mut merged: SparseRow = Vec::with_capacity(row.len());
                for (c, v) in row {
                    match merged.last_mut() {
                        Some((lc, lv)) if *lc == c => *lv += v,
                        _ => merged.push((c, v)),
                    }
                }
                merged.retain(|(_, v)| !v.is_zero());
                if !merged.is_empty() {
                    rows.push(merged);
                }
            }
        }
    }
    let maps = sparse_nullspace(rows, nvars)
        .into_iter()
        .map(|sol| {
            let blocks = (0..k)
                .map(|v| {
                    let mut m = Mat::zeros(dy[v], dx[v]);
                    for i in 0..dy[v] {
                        for j in 0..dx[v] {
                            let val = &sol[var(v, i, j)];
                            if !val.is_zero() {
                                m.set(i, j, val.clone());
                            }
                        }
                    }
                    m
                })
                .collect();
            HomMap { blocks }
        })
        .collect();
    HomBasis { domain_dims: dx.to_vec(), codomain_dims: dy.to_vec(), maps }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RankMethod {
    /// Sampled coefficients reached full rank at every vertex that needed it.
    Randomized,
    /// At least one vertex needed fraction-free elimination over `Q(t)`.
    Symbolic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericRankCertificate {
    /// Generic rank per vertex.
    pub vertex_ranks: Vec<usize>,
    /// Sum over vertices: the maximal rank over the hom space.
    pub rank: usize,
    pub method: RankMethod,
    /// Sampled coefficients realizing full rank, when that settled the question.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonoEpi {
    pub exists_mono: bool,
    pub exists_epi: bool,
    pub certificate: GenericRankCertificate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankOptions {
    pub random_fast_path: bool,
    pub seed: u64,
}

impl Default for RankOptions {
    fn default() -> Self {
        RankOptions { random_fast_path: true, seed: 0x5eed }
    }
}

const SAMPLE_BOUND: i64 = 1 << 16;

fn sample(basis: &HomBasis, seed: u64) -> Vec<Q> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..basis.dim()).map(|_| Q::from_integer(BigInt::from(rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND)))).collect()
}

/// Generic rank of the block at `v`, given a lower bound from sampling.
fn vertex_generic_rank(basis: &HomBasis, v: usize, sampled: Option<usize>) -> (usize, bool) {
    let rows = basis.codomain_dims[v];
    let cols = basis.domain_dims[v];
    let full = rows.min(cols);
    if let Some(r) = sampled {
        if r == full {
            return (r, false);
        }
    }
    let parts: Vec<&Mat> = basis.maps.iter().map(|m| &m.blocks[v]).filter(|b| !b.is_zero()).collect();
    if parts.is_empty() {
        return (0, true);
    }
    (generic_rank(&parts), true)
}

fn ranks(basis: &HomBasis, opts: RankOptions, needed: impl Fn(usize, usize) -> bool) -> GenericRankCertificate {
    let k = basis.domain_dims.len();
    let coeffs = (opts.random_fast_path && !basis.is_zero()).then(|| sample(basis, opts.seed));
    let sampled: Option<Vec<usize>> = coeffs.as_ref().map(|c| {
        let f = basis.combination(c);
        f.blocks.iter().map(|b| b.rank()).collect()
    });
    let mut vertex_ranks = Vec::with_capacity(k);
    let mut symbolic = false;
    for v in 0..k {
        let s = sampled.as_ref().map(|r| r[v]);
        if let Some(r) = s.filter(|&r| !needed(v, r)) {
            vertex_ranks.push(r);
            continue;
        }
        let (r, used) = vertex_generic_rank(basis, v, s);
        symbolic |= used;
        vertex_ranks.push(r);
    }
    let method = if symbolic || coeffs.is_none() { RankMethod::Symbolic } else { RankMethod::Randomized };
    let witness = match method {
        RankMethod::Randomized => coeffs.map(|c| c.iter().map(crate::linalg::q_string).collect()),
        RankMethod::Symbolic => None,
    };
    GenericRankCertificate { rank: vertex_ranks.iter().sum(), vertex_ranks, method, witness }
}

/// Decides whether some map `X → Y` is injective and whether some map is
/// surjective. Negative answers always come from exact elimination.
pub fn mono_epi_test(q: &Quiver, x: &Representation, y: &Representation, opts: RankOptions) -> MonoEpi {
    let basis = hom_basis(q, x, y);
    mono_epi_from_basis(&basis, opts)
}

pub fn mono_epi_from_basis(basis: &HomBasis, opts: RankOptions) -> MonoEpi {
    let cert = ranks(basis, opts, |_, _| true);
    let exists_mono = cert.vertex_ranks.iter().zip(&basis.domain_dims).all(|(r, d)| r == d);
    let exists_epi = cert.vertex_ranks.iter().zip(&basis.codomain_dims).all(|(r, d)| r == d);
    MonoEpi { exists_mono, exists_epi, certificate: cert }
}

/// Mono existence only; stops at the first vertex that cannot be injective.
pub fn exists_mono(q: &Quiver, x: &Representation, y: &Representation, opts: RankOptions) -> bool {
    let dx = x.dims();
    let dy = y.dims();
    if dx.iter().zip(dy).any(|(a, b)| a > b) {
        return false;
    }
    let basis = hom_basis(q, x, y);
    injective_generic(&basis, opts)
}

/// Epi existence only.
pub fn exists_epi(q: &Quiver, x: &Representation, y: &Representation, opts: RankOptions) -> bool {
    let dx = x.dims();
    let dy = y.dims();
    if dx.iter().zip(dy).any(|(a, b)| a < b) {
        return false;
    }
    let basis = hom_basis(q, x, y);
    surjective_generic(&basis, opts)
}

fn full_at_all(basis: &HomBasis, opts: RankOptions, target: &[usize]) -> bool {
    if target.iter().all(|&d| d == 0) {
        return true;
    }
    if basis.is_zero() {
        return false;
    }
    let k = target.len();
    let sampled: Option<Vec<usize>> = opts.random_fast_path.then(|| {
        let f = basis.combination(&sample(basis, opts.seed));
        f.blocks.iter().map(|b| b.rank()).collect()
    });
    if let Some(s) = &sampled {
        if s.iter().zip(target).all(|(r, d)| r == d) {
            return true;
        }
    }
    (0..k).all(|v| {
        let s = sampled.as_ref().map(|r| r[v]);
        if s == Some(target[v]) {
            return true;
        }
        vertex_generic_rank(basis, v, s).0 == target[v]
    })
}

pub fn injective_generic(basis: &HomBasis, opts: RankOptions) -> bool {
    full_at_all(basis, opts, &basis.domain_dims.clone())
}

pub fn surjective_generic(basis: &HomBasis, opts: RankOptions) -> bool {
    full_at_all(basis, opts, &basis.codomain_dims.clone())
}

/// A graph map: the factor string of `C` on `factor` is identified with the
/// substring submodule of `D` on `image`, possibly reversing direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphMap {
    pub factor: (usize, usize),
    pub image: (usize, usize),
    pub reversed: bool,
}

impl GraphMap {
    /// Injective exactly when the factor is all of `C`.
    pub fn is_mono(&self, c: &StringWord) -> bool {
        self.factor == (0, c.len())
    }

    pub fn to_hom(&self, q: &Quiver, c: &StringWord, d: &StringWord) -> HomMap {
        let bc = crate::strmod::string_basis(q, c);
        let bd = crate::strmod::string_basis(q, d);
        let dc = c.dim_vector(q).0;
        let dd = d.dim_vector(q).0;
        let mut blocks: Vec<Mat> = (0..q.vertex_count()).map(|v| Mat::zeros(dd[v], dc[v])).collect();
        let len = self.factor.1 - self.factor.0;
        for k in 0..=len {
            let from = bc[self.factor.0 + k];
            let to = if self.reversed { bd[self.image.1 - k] } else { bd[self.image.0 + k] };
            blocks[from.0].set(to.1, from.1, Q::one());
        }
        HomMap { blocks }
    }
}

/// The graph-map basis of `Hom(M(C), M(D))`.
pub fn graph_map_basis(q: &Quiver, c: &StringWord, d: &StringWord) -> Vec<GraphMap> {
    let subs = substring_submodules(q, d);
    let mut out = Vec::new();
    for (i1, j1) in factor_intervals(c) {
        let piece = &c.letters()[i1..j1];
        let start = c.walk()[i1];
        for s in &subs {
            let (i2, j2) = (s.start, s.end);
            if j2 - i2 != j1 - i1 {
                continue;
            }
            let target = &d.letters()[i2..j2];
            if piece.is_empty() {
                if d.walk()[i2] == start {
                    out.push(GraphMap { factor: (i1, j1), image: (i2, j2), reversed: false });
                }
                continue;
            }
            if piece == target {
                out.push(GraphMap { factor: (i1, j1), image: (i2, j2), reversed: false });
            }
            let inverted: Vec<_> = target.iter().rev().map(|l| l.inverse()).collect();
            if piece == inverted.as_slice() {
                out.push(GraphMap { factor: (i1, j1), image: (i2, j2), reversed: true });
            }
        }
    }
    out
}

/// Indecomposability over the rationals: the trace form `tr(fg)` on
/// `End(M)` has rank one exactly when `End(M)` is local with residue field `Q`.
pub fn is_indecomposable(q: &Quiver, m: &Representation) -> bool {
    if m.total_dim() == 0 {
        return false;
    }
    let end = hom_basis(q, m, m);
    let k = end.dim();
    let mut gram = Mat::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let t = end.maps[i].compose(&end.maps[j]).trace();
            gram.set(i, j, t.clone());
            gram.set(j, i, t);
        }
    }
    gram.rank() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q as qq;
    use crate::qkit::{band_words, cycle_quiver, enumerate_strings, parse_string};
    use crate::strmod::{band_to_rep, string_to_rep};

    fn s(q: &Quiver, t: &[&str]) -> StringWord {
        parse_string(q, &t.iter().map(|x| x.to_string()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn simple_homs() {
        let k = cycle_quiver("+-").unwrap();
        let s0 = string_to_rep(&k, &StringWord::trivial(&k, 0).unwrap());
        let s1 = string_to_rep(&k, &StringWord::trivial(&k, 1).unwrap());
        assert_eq!(hom_basis(&k, &s0, &s0).dim(), 1);
        assert_eq!(hom_basis(&k, &s0, &s1).dim(), 0);
    }

    #[test]
    fn kronecker_band_into_preinjective() {
        let k = cycle_quiver("+-").unwrap();
        let b = band_words(&k).remove(0);
        let h1 = band_to_rep(&k, &b, 1, &qq(1)).unwrap();
        let inj = string_to_rep(&k, &s(&k, &["-a0", "a1"]));
        assert_eq!(inj.dims(), &[2, 1]);
        let basis = hom_basis(&k, &h1, &inj);
        assert_eq!(basis.dim(), 1);
        assert!(basis.maps.iter().all(|f| f.is_homomorphism(&k, &h1, &inj)));
    }

    #[test]
    fn mono_epi_examples() {
        let k = cycle_quiver("+-").unwrap();
        let b = band_words(&k).remove(0);
        let h1 = band_to_rep(&k, &b, 1, &qq(1)).unwrap();
        let s1 = string_to_rep(&k, &StringWord::trivial(&k, 1).unwrap());
        for random in [true, false] {
            let opts = RankOptions { random_fast_path: random, seed: 7 };
            let r = mono_epi_test(&k, &h1, &h1, opts);
            assert!(r.exists_mono && r.exists_epi);
            assert!(exists_mono(&k, &s1, &h1, opts));
            assert!(!exists_mono(&k, &h1, &s1, opts));
        }
    }

    #[test]
    fn graph_maps_match_hom_dimension() {
        let q = cycle_quiver("++-").unwrap();
        let strings = enumerate_strings(&q, 4);
        for c in &strings {
            for d in &strings {
                let (rc, rd) = (string_to_rep(&q, c), string_to_rep(&q, d));
                let graph = graph_map_basis(&q, c, d);
                assert_eq!(graph.len(), hom_basis(&q, &rc, &rd).dim(), "{} -> {}", c.display(&q), d.display(&q));
                for g in &graph {
                    let f = g.to_hom(&q, c, d);
                    assert!(f.is_homomorphism(&q, &rc, &rd));
                    assert_eq!(f.is_injective(), g.is_mono(c));
                }
            }
        }
    }

    #[test]
    fn indecomposability() {
        let k = cycle_quiver("+-").unwrap();
        let b = band_words(&k).remove(0);
        assert!(is_indecomposable(&k, &band_to_rep(&k, &b, 2, &qq(1)).unwrap()));
        let split = Representation::new(&k, vec![1, 1], vec![Mat::zeros(1, 1), Mat::zeros(1, 1)]).unwrap();
        assert!(!is_indecomposable(&k, &split));
    }
}
