//! String and band modules as explicit representations, their substring
//! submodules, the covering by a linear quiver, and hook extensions.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Mat, Q};
use crate::qkit::{Arrow, BandWord, DimVector, Letter, Quiver, StringWord, Vertex};

/// A representation: a vector space `k^{dims[v]}` per vertex and a matrix
/// `dims[target] × dims[source]` per arrow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Representation {
    dims: Vec<usize>,
    maps: Vec<Mat>,
}

impl Representation {
    pub fn new(q: &Quiver, dims: Vec<usize>, maps: Vec<Mat>) -> Result<Self> {
        if dims.len() != q.vertex_count() || maps.len() != q.arrows().len() {
            return Err(Error::InvalidQuiver("representation does not fit the quiver".into()));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::InvalidQuiver(format!("matrix for {} has the wrong shape", a.name)));
            }
        }
        let rep = Representation { dims, maps };
        if !rep.satisfies_relations(q) {
            return Err(Error::RelationViolation("representation does not kill a relation".into()));
        }
        Ok(rep)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector(self.dims.clone())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn map(&self, arrow: usize) -> &Mat {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    pub fn satisfies_relations(&self, q: &Quiver) -> bool {
        q.relations().iter().all(|rel| {
            let mut acc = Mat::identity(self.dims[q.arrow(rel[0]).source]);
            for &a in rel {
                acc = self.maps[a].mul(&acc);
            }
            acc.is_zero()
        })
    }

    /// Whether the span of the given basis vectors (as `(vertex, index)`) is
    /// closed under every arrow.
    pub fn span_is_closed(&self, q: &Quiver, basis: &[(Vertex, usize)]) -> bool {
        q.arrows().iter().enumerate().all(|(a, arrow)| {
            basis.iter().filter(|(v, _)| *v == arrow.source).all(|&(_, col)| {
                let m = &self.maps[a];
                (0..m.rows()).all(|row| m.get(row, col).is_zero() || basis.contains(&(arrow.target, row)))
            })
        })
    }
}

/// Position of basis vector `z_i` inside its vertex space.
fn local_indices(walk: &[Vertex], vertex_count: usize) -> Vec<usize> {
    let mut seen = vec![0; vertex_count];
    walk.iter()
        .map(|&v| {
            let k = seen[v];
            seen[v] += 1;
            k
        })
        .collect()
}

/// The string module `M(C)` with basis `z_0, …, z_n`.
pub fn string_to_rep(q: &Quiver, c: &StringWord) -> Representation {
    let dims = c.dim_vector(q).0;
    let loc = local_indices(c.walk(), q.vertex_count());
    let mut maps: Vec<Mat> = q.arrows().iter().map(|a| Mat::zeros(dims[a.target], dims[a.source])).collect();
    for (i, l) in c.letters().iter().enumerate() {
        // letter c_{i+1} joins z_i and z_{i+1}
        let (from, to) = if l.inverse { (i + 1, i) } else { (i, i + 1) };
        maps[l.arrow].set(loc[to], loc[from], Q::one());
    }
    Representation { dims, maps }
}

/// Basis labels `(vertex, local index)` of `z_0, …, z_n`.
pub fn string_basis(q: &Quiver, c: &StringWord) -> Vec<(Vertex, usize)> {
    let loc = local_indices(c.walk(), q.vertex_count());
    c.walk().iter().copied().zip(loc).collect()
}

/// A band module: `band` with a Jordan block of size `multiplicity` and
/// eigenvalue `lambda` on the first letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BandModule {
    pub band: BandWord,
    pub multiplicity: usize,
    pub lambda: Q,
}

impl BandModule {
    pub fn new(band: BandWord, multiplicity: usize, lambda: Q) -> Result<Self> {
        if multiplicity == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        if lambda.is_zero() {
            return Err(Error::ZeroParameter);
        }
        Ok(BandModule { band, multiplicity, lambda })
    }

    pub fn dim_vector(&self, q: &Quiver) -> DimVector {
        self.band.dim_vector(q).scaled(self.multiplicity)
    }

    pub fn to_rep(&self, q: &Quiver) -> Representation {
        band_rep(q, &self.band, self.multiplicity, &self.lambda)
    }
}

/// Builds the band module; the Jordan block has `λ` on the diagonal and ones
/// on the superdiagonal.
pub fn band_to_rep(q: &Quiver, b: &BandWord, m: usize, lambda: &Q) -> Result<Representation> {
    if m == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    if lambda.is_zero() {
        return Err(Error::ZeroParameter);
    }
    Ok(band_rep(q, b, m, lambda))
}

fn band_rep(q: &Quiver, b: &BandWord, m: usize, lambda: &Q) -> Representation {
    let n = b.len();
    let walk = b.walk();
    let dims = b.dim_vector(q).scaled(m).0;
    let loc: Vec<usize> = local_indices(walk, q.vertex_count()).into_iter().map(|k| k * m).collect();
    let mut maps: Vec<Mat> = q.arrows().iter().map(|a| Mat::zeros(dims[a.target], dims[a.source])).collect();
    for (i, l) in b.letters().iter().enumerate() {
        let (p, r) = (i, (i + 1) % n);
        let (from, to) = if l.inverse { (r, p) } else { (p, r) };
        let map = &mut maps[l.arrow];
        for k in 0..m {
            if i == 0 {
                map.set(loc[to] + k, loc[from] + k, lambda.clone());
                if k + 1 < m {
                    map.set(loc[to] + k, loc[from] + k + 1, Q::one());
                }
            } else {
                map.set(loc[to] + k, loc[from] + k, Q::one());
            }
        }
    }
    Representation { dims, maps }
}

/// A substring submodule `z_i, …, z_j` of `M(C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstringInclusion {
    pub start: usize,
    pub end: usize,
    pub word: StringWord,
    /// Quotient `M(C)/M(E)`, a direct sum of at most two string modules.
    pub quotients: Vec<StringWord>,
}

impl SubstringInclusion {
    pub fn is_proper(&self, c: &StringWord) -> bool {
        self.start > 0 || self.end < c.len()
    }

    /// Every quotient summand is uniserial.
    pub fn quotient_uniserial(&self) -> bool {
        self.quotients.iter().all(|w| w.is_uniserial())
    }
}

/// All intervals `[i, j]` whose basis vectors span a submodule: `c_i` must be
/// direct (or `i = 0`) and `c_{j+1}` inverse (or `j = n`).
pub fn substring_submodules(q: &Quiver, c: &StringWord) -> Vec<SubstringInclusion> {
    let n = c.len();
    let letters = c.letters();
    let mut out = Vec::new();
    for i in 0..=n {
        if i > 0 && letters[i - 1].inverse {
            continue;
        }
        for j in i..=n {
            if j < n && !letters[j].inverse {
                continue;
            }
            let mut quotients = Vec::new();
            if i > 0 {
                quotients.push(c.substring(q, 0, i - 1));
            }
            if j < n {
                quotients.push(c.substring(q, j + 1, n));
            }
            out.push(SubstringInclusion { start: i, end: j, word: c.substring(q, i, j), quotients });
        }
    }
    out
}

/// Intervals `[i, j]` whose basis vectors span a factor module, the dual of
/// the substring condition.
pub fn factor_intervals(c: &StringWord) -> Vec<(usize, usize)> {
    let n = c.len();
    let letters = c.letters();
    let mut out = Vec::new();
    for i in 0..=n {
        if i > 0 && !letters[i - 1].inverse {
            continue;
        }
        for j in i..=n {
            if j < n && letters[j].inverse {
                continue;
            }
            out.push((i, j));
        }
    }
    out
}

/// The covering of a string by a linear quiver `A_{n+1}`.
#[derive(Clone, Debug)]
pub struct Covering {
    pub quiver: Quiver,
    /// The sincere string on the covering quiver.
    pub word: StringWord,
    original: StringWord,
    reversed: bool,
}

impl Covering {
    /// The covering submodule with the same basis interval as a substring
    /// submodule of `M(C)`.
    pub fn lift(&self, inclusion: &SubstringInclusion) -> (usize, usize) {
        (inclusion.start, inclusion.end)
    }

    /// The substring of `C` under an interval submodule of the covering module.
    pub fn push_down(&self, quiver: &Quiver, interval: (usize, usize)) -> StringWord {
        self.original.substring(quiver, interval.0, interval.1)
    }

    /// Interval `[i, j]` of the original basis as an interval of the covering
    /// string's own basis.
    pub fn covering_interval(&self, interval: (usize, usize)) -> (usize, usize) {
        if self.reversed {
            let n = self.original.len();
            (n - interval.1, n - interval.0)
        } else {
            interval
        }
    }

    pub fn original(&self) -> &StringWord {
        &self.original
    }
}

/// Builds the covering quiver whose vertex `i` carries `z_i`; letter `c_i`
/// becomes an arrow between `i-1` and `i` in the same direction.
pub fn covering_transport(q: &Quiver, c: &StringWord) -> Covering {
    let n = c.len();
    let arrows: Vec<Arrow> = c
        .letters()
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let (source, target) = if l.inverse { (i + 1, i) } else { (i, i + 1) };
            Arrow { name: format!("c{}", i + 1), source, target }
        })
        .collect();
    let quiver = Quiver::new(n + 1, arrows, Vec::new(), true).expect("covering quiver is a valid tree");
    let letters: Vec<Letter> =
        c.letters().iter().enumerate().map(|(i, l)| Letter { arrow: i, inverse: l.inverse }).collect();
    let word = if n == 0 {
        StringWord::trivial(&quiver, 0).expect("vertex exists")
    } else {
        crate::qkit::validate_walk(&quiver, &letters).expect("covering walk is a string")
    };
    let reversed = word.start() != 0;
    let _ = q;
    Covering { quiver, word, original: c.clone(), reversed }
}

/// Extends walk-ordered letters at the end by `γ⁻¹` followed by a maximal
/// direct path, for the first admissible arrow `γ`.
fn hook_at_end(q: &Quiver, letters: &[Letter], end: Vertex) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    for (g, arrow) in q.arrows().iter().enumerate() {
        if arrow.target != end {
            continue;
        }
        let hook = Letter::inv(g);
        if letters.last().is_some_and(|&last| last == hook.inverse()) {
            continue;
        }
        let mut word = letters.to_vec();
        word.push(hook);
        if crate::qkit::validate_walk(q, &word).is_err() {
            continue;
        }
        // the direct path is bounded by the number of arrows on acyclic
        // quivers and by the relations otherwise
        for _ in 0..=q.arrows().len() * (word.len() + 1) {
            let last = *word.last().unwrap();
            let at = last.end(q);
            let next = (0..q.arrows().len()).map(Letter::direct).find(|&d| {
                if d.start(q) != at || d == last.inverse() {
                    return false;
                }
                let mut w = word.clone();
                w.push(d);
                crate::qkit::validate_walk(q, &w).is_ok()
            });
            match next {
                Some(d) => word.push(d),
                None => break,
            }
        }
        out.push(word);
    }
    out
}

/// Strings `C'` obtained by adding a hook at either end of `C`; the natural
/// inclusion `M(C) → M(C')` is an irreducible monomorphism.
pub fn irreducible_mono_extensions(q: &Quiver, c: &StringWord) -> Vec<StringWord> {
    let mut words: Vec<Vec<Letter>> = Vec::new();
    if c.is_trivial() {
        words.extend(hook_at_end(q, &[], c.start()));
    } else {
        words.extend(hook_at_end(q, c.letters(), c.end()).into_iter().take(1));
        let inverse: Vec<Letter> = c.letters().iter().rev().map(|l| l.inverse()).collect();
        words.extend(hook_at_end(q, &inverse, c.start()).into_iter().take(1));
    }
    let mut out: Vec<StringWord> = Vec::new();
    for w in words {
        let s = crate::qkit::validate_walk(q, &w).expect("hook extension is a string");
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

/// Whether `sub` occurs as a substring submodule of `c`.
pub fn is_substring_submodule(q: &Quiver, sub: &StringWord, c: &StringWord) -> bool {
    substring_submodules(q, c).iter().any(|s| &s.word == sub)
}
