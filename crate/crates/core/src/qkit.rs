//! Quivers, strings and bands.
//!
//! Conventions: a string `C = c_n ⋯ c_1` is a walk whose letter `c_i` runs
//! from vertex `u_{i-1}` to `u_i`. A direct letter `β` runs from the source of
//! `β` to its target, an inverse letter `β⁻¹` from the target to the source.
//! Letters are kept in walk order (`c_1` first); the written form used for
//! parsing, printing and canonical forms lists them as `c_n ⋯ c_1`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type ArrowId = usize;
pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: Vertex,
    pub target: Vertex,
}

/// Signs around a cycle: `+` is an arrow `i → i+1`, `−` is `i+1 → i`
/// (indices modulo the cycle length).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleOrientation {
    signs: Vec<bool>,
}

impl CycleOrientation {
    pub fn new(signs: Vec<bool>) -> Result<Self> {
        if signs.len() < 2 {
            return Err(Error::InvalidOrientation("need at least two signs".into()));
        }
        if signs.iter().all(|&s| s) || signs.iter().all(|&s| !s) {
            return Err(Error::CyclicOrientation);
        }
        Ok(CycleOrientation { signs })
    }

    /// Parses words such as `"+−+−"`; both `-` and `−` are accepted.
    pub fn parse(word: &str) -> Result<Self> {
        let signs = word
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '+' => Ok(true),
                '-' | '−' => Ok(false),
                other => Err(Error::InvalidOrientation(format!("unexpected character `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        CycleOrientation::new(signs)
    }

    pub fn signs(&self) -> &[bool] {
        &self.signs
    }

    /// Number of clockwise arrows.
    pub fn p(&self) -> usize {
        self.signs.iter().filter(|&&s| s).count()
    }

    /// Number of counterclockwise arrows.
    pub fn q(&self) -> usize {
        self.signs.len() - self.p()
    }

    /// `n` in `Ã_n`; the cycle has `n + 1` vertices.
    pub fn n(&self) -> usize {
        self.signs.len() - 1
    }

    /// Alternating signs: every vertex is a sink or a source.
    pub fn is_sink_source(&self) -> bool {
        let k = self.signs.len();
        (0..k).all(|i| self.signs[i] != self.signs[(i + 1) % k])
    }

    /// Exactly one source and one sink.
    pub fn is_one_source_one_sink(&self) -> bool {
        let k = self.signs.len();
        (0..k).filter(|&i| self.signs[i] != self.signs[(i + 1) % k]).count() == 2
    }

    pub fn word(&self) -> String {
        self.signs.iter().map(|&s| if s { '+' } else { '-' }).collect()
    }
}

impl fmt::Display for CycleOrientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
    /// Monomial relations as arrow paths in application order.
    relations: Vec<Vec<ArrowId>>,
    string_algebra: bool,
    orientation: Option<CycleOrientation>,
}

impl Quiver {
    pub fn new(
        vertex_count: usize,
        arrows: Vec<Arrow>,
        relations: Vec<Vec<ArrowId>>,
        string_algebra: bool,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidQuiver("no vertices".into()));
        }
        for a in &arrows {
            if a.source >= vertex_count || a.target >= vertex_count {
                return Err(Error::InvalidQuiver(format!("arrow {} has an invalid endpoint", a.name)));
            }
            if a.source == a.target {
                return Err(Error::InvalidQuiver(format!("arrow {} is a loop", a.name)));
            }
        }
        let mut names = BTreeSet::new();
        for a in &arrows {
            if !names.insert(a.name.as_str()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow name {}", a.name)));
            }
        }
        for rel in &relations {
            if rel.len() < 2 {
                return Err(Error::InvalidQuiver("relations must have length at least 2".into()));
            }
            for w in rel.windows(2) {
                let (first, second) = (w[0], w[1]);
                if first >= arrows.len() || second >= arrows.len() {
                    return Err(Error::InvalidQuiver("relation uses an unknown arrow".into()));
                }
                if arrows[first].target != arrows[second].source {
                    return Err(Error::InvalidQuiver("relation is not a path".into()));
                }
            }
        }
        let quiver = Quiver { vertex_count, arrows, relations, string_algebra, orientation: None };
        if string_algebra {
            quiver.check_string_algebra()?;
        }
        let orientation = quiver.detect_cycle_orientation();
        Ok(Quiver { orientation, ..quiver })
    }

    /// Linear quiver `0 → 1 → ⋯ → (k-1)`, a Dynkin quiver of type `A_k`.
    pub fn line(k: usize) -> Result<Self> {
        let arrows =
            (0..k.saturating_sub(1)).map(|i| Arrow { name: format!("a{i}"), source: i, target: i + 1 }).collect();
        Quiver::new(k, arrows, Vec::new(), true)
    }

    fn check_string_algebra(&self) -> Result<()> {
        for v in 0..self.vertex_count {
            let outgoing = self.arrows.iter().filter(|a| a.source == v).count();
            let incoming = self.arrows.iter().filter(|a| a.target == v).count();
            if outgoing > 2 || incoming > 2 {
                return Err(Error::NotStringAlgebra(format!("vertex {v} has more than two arrows on one side")));
            }
        }
        for (b, beta) in self.arrows.iter().enumerate() {
            let before = (0..self.arrows.len())
                .filter(|&g| self.arrows[g].target == beta.source && !self.is_relation(&[g, b]))
                .count();
            let after = (0..self.arrows.len())
                .filter(|&g| self.arrows[g].source == beta.target && !self.is_relation(&[b, g]))
                .count();
            if before > 1 || after > 1 {
                return Err(Error::NotStringAlgebra(format!(
                    "arrow {} composes freely with more than one arrow",
                    beta.name
                )));
            }
        }
        Ok(())
    }

    fn is_relation(&self, path: &[ArrowId]) -> bool {
        self.relations.iter().any(|r| r.as_slice() == path)
    }

    fn detect_cycle_orientation(&self) -> Option<CycleOrientation> {
        let k = self.vertex_count;
        if k < 2 || self.arrows.len() != k || !self.relations.is_empty() {
            return None;
        }
        let mut degree = vec![0usize; k];
        for a in &self.arrows {
            degree[a.source] += 1;
            degree[a.target] += 1;
        }
        if degree.iter().any(|&d| d != 2) {
            return None;
        }
        // walk around the cycle from vertex 0 using each arrow once
        let mut used = vec![false; self.arrows.len()];
        let mut order = vec![0usize];
        let mut signs = Vec::with_capacity(k);
        let mut at = 0;
        for _ in 0..k {
            let (idx, forward) = self.arrows.iter().enumerate().filter(|(i, _)| !used[*i]).find_map(|(i, a)| {
                if a.source == at {
                    Some((i, true))
                } else if a.target == at {
                    Some((i, false))
                } else {
                    None
                }
            })?;
            used[idx] = true;
            signs.push(forward);
            let a = &self.arrows[idx];
            at = if forward { a.target } else { a.source };
            order.push(at);
        }
        if at != 0 || order[..k].iter().collect::<BTreeSet<_>>().len() != k {
            return None;
        }
        // only cycles numbered consecutively get an orientation word; this is
        // what `build_cycle_quiver` produces
        if (0..k).all(|i| order[i] == i) {
            CycleOrientation::new(signs).ok()
        } else {
            let walk: Vec<_> = order[..k].to_vec();
            let _ = walk;
            CycleOrientation::new(signs).ok()
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: ArrowId) -> &Arrow {
        &self.arrows[id]
    }

    pub fn relations(&self) -> &[Vec<ArrowId>] {
        &self.relations
    }

    pub fn is_string_algebra(&self) -> bool {
        self.string_algebra
    }

    /// The orientation word when the underlying graph is a single cycle
    /// without relations, i.e. the quiver is an acyclic `Ã_n`.
    pub fn cycle_orientation(&self) -> Option<&CycleOrientation> {
        self.orientation.as_ref()
    }

    pub fn is_cycle(&self) -> bool {
        self.orientation.is_some()
    }

    pub fn arrow_by_name(&self, name: &str) -> Result<ArrowId> {
        self.arrows.iter().position(|a| a.name == name).ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    /// The imaginary root `δ` for cycle quivers.
    pub fn delta(&self) -> Option<DimVector> {
        self.orientation.as_ref().map(|_| DimVector(vec![1; self.vertex_count]))
    }

    /// Euler form `⟨d, e⟩ = Σ d_v e_v − Σ_{a: i→j} d_i e_j`.
    pub fn euler_form(&self, d: &DimVector, e: &DimVector) -> i64 {
        let diag: i64 = (0..self.vertex_count).map(|v| (d.0[v] * e.0[v]) as i64).sum();
        let off: i64 = self.arrows.iter().map(|a| (d.0[a.source] * e.0[a.target]) as i64).sum();
        diag - off
    }

    fn letter_allowed_after(&self, prev: Option<Letter>, next: Letter, run: &[Letter]) -> bool {
        if let Some(p) = prev {
            if p.end(self) != next.start(self) || p == next.inverse() {
                return false;
            }
        }
        if self.relations.is_empty() {
            return true;
        }
        let mut word = run.to_vec();
        word.push(next);
        !self.contains_relation(&word)
    }

    /// Whether a letter sequence in walk order passes through a relation,
    /// in either direction.
    fn contains_relation(&self, letters: &[Letter]) -> bool {
        let mut i = 0;
        while i < letters.len() {
            let inverse = letters[i].inverse;
            let mut j = i;
            while j < letters.len() && letters[j].inverse == inverse {
                j += 1;
            }
            let mut path: Vec<ArrowId> = letters[i..j].iter().map(|l| l.arrow).collect();
            if inverse {
                path.reverse();
            }
            for rel in &self.relations {
                if path.windows(rel.len()).any(|w| w == rel.as_slice()) {
                    return true;
                }
            }
            i = j;
        }
        false
    }
}

/// The standard `Ã_n` quiver for an orientation word: vertices `0..=n`,
/// arrow `a_i` on the edge between `i` and `i+1 (mod n+1)`.
pub fn build_cycle_quiver(orientation: &CycleOrientation) -> Quiver {
    let k = orientation.signs.len();
    let arrows = orientation
        .signs
        .iter()
        .enumerate()
        .map(|(i, &clockwise)| {
            let (source, target) = if clockwise { (i, (i + 1) % k) } else { ((i + 1) % k, i) };
            Arrow { name: format!("a{i}"), source, target }
        })
        .collect();
    Quiver {
        vertex_count: k,
        arrows,
        relations: Vec::new(),
        string_algebra: true,
        orientation: Some(orientation.clone()),
    }
}

/// Parses an orientation word and builds the cycle quiver.
pub fn cycle_quiver(word: &str) -> Result<Quiver> {
    Ok(build_cycle_quiver(&CycleOrientation::parse(word)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub arrow: ArrowId,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrow: ArrowId) -> Self {
        Letter { arrow, inverse: false }
    }

    pub fn inv(arrow: ArrowId) -> Self {
        Letter { arrow, inverse: true }
    }

    pub fn inverse(self) -> Self {
        Letter { arrow: self.arrow, inverse: !self.inverse }
    }

    pub fn start(self, q: &Quiver) -> Vertex {
        let a = q.arrow(self.arrow);
        if self.inverse {
            a.target
        } else {
            a.source
        }
    }

    pub fn end(self, q: &Quiver) -> Vertex {
        let a = q.arrow(self.arrow);
        if self.inverse {
            a.source
        } else {
            a.target
        }
    }

    /// Direct letters first, then arrows by id.
    fn key(self) -> (bool, ArrowId) {
        (self.inverse, self.arrow)
    }

    pub fn token(self, q: &Quiver) -> String {
        let name = &q.arrow(self.arrow).name;
        if self.inverse {
            format!("-{name}")
        } else {
            name.clone()
        }
    }
}

fn written_cmp(a: &[Letter], b: &[Letter]) -> Ordering {
    // written order lists the last walk letter first
    a.iter().rev().map(|l| l.key()).cmp(b.iter().rev().map(|l| l.key()))
}

fn invert_word(letters: &[Letter]) -> Vec<Letter> {
    letters.iter().rev().map(|l| l.inverse()).collect()
}

/// A validated string, stored in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StringWord {
    start: Vertex,
    letters: Vec<Letter>,
    walk: Vec<Vertex>,
}

impl StringWord {
    /// The trivial string at a vertex.
    pub fn trivial(q: &Quiver, vertex: Vertex) -> Result<Self> {
        if vertex >= q.vertex_count() {
            return Err(Error::InvalidQuiver(format!("vertex {vertex} out of range")));
        }
        Ok(StringWord { start: vertex, letters: Vec::new(), walk: vec![vertex] })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of letters `n`; the module has length `n + 1`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Vertices `u_0, …, u_n`.
    pub fn walk(&self) -> &[Vertex] {
        &self.walk
    }

    pub fn start(&self) -> Vertex {
        self.start
    }

    pub fn end(&self) -> Vertex {
        *self.walk.last().unwrap()
    }

    pub fn module_length(&self) -> usize {
        self.letters.len() + 1
    }

    pub fn dim_vector(&self, q: &Quiver) -> DimVector {
        let mut d = vec![0; q.vertex_count()];
        for &v in &self.walk {
            d[v] += 1;
        }
        DimVector(d)
    }

    /// Consists of direct letters only, or of inverse letters only; the
    /// string modules of such words are exactly the uniserial ones.
    pub fn is_uniserial(&self) -> bool {
        self.letters.iter().all(|l| !l.inverse) || self.letters.iter().all(|l| l.inverse)
    }

    /// Written tokens `c_n … c_1`, or `e<v>` for a trivial string.
    pub fn tokens(&self, q: &Quiver) -> Vec<String> {
        if self.letters.is_empty() {
            return vec![format!("e{}", self.start)];
        }
        self.letters.iter().rev().map(|l| l.token(q)).collect()
    }

    pub fn display(&self, q: &Quiver) -> String {
        self.tokens(q).join(" ")
    }

    /// Lexicographic comparison of canonical written forms; used as a total
    /// order on iso-classes of string modules.
    pub fn canonical_cmp(&self, other: &StringWord) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| written_cmp(&self.letters, &other.letters))
            .then_with(|| self.start.cmp(&other.start))
    }

    /// Builds a canonical string from walk-ordered letters whose validity has
    /// already been established.
    pub(crate) fn from_valid(q: &Quiver, start: Vertex, letters: Vec<Letter>) -> Self {
        if letters.is_empty() {
            return StringWord { start, letters, walk: vec![start] };
        }
        let inverse = invert_word(&letters);
        let letters = if written_cmp(&inverse, &letters) == Ordering::Less { inverse } else { letters };
        let start = letters[0].start(q);
        let mut walk = Vec::with_capacity(letters.len() + 1);
        walk.push(start);
        for l in &letters {
            walk.push(l.end(q));
        }
        StringWord { start, letters, walk }
    }

    /// The letters `c_{i+1} … c_j` between basis indices `i ≤ j`.
    pub fn substring(&self, q: &Quiver, i: usize, j: usize) -> StringWord {
        StringWord::from_valid(q, self.walk[i], self.letters[i..j].to_vec())
    }
}

/// Validates walk-ordered letters (`c_1` first).
pub fn validate_walk(q: &Quiver, letters: &[Letter]) -> Result<StringWord> {
    if letters.is_empty() {
        return Err(Error::Parse("use `StringWord::trivial` for a trivial string".into()));
    }
    for l in letters {
        if l.arrow >= q.arrows().len() {
            return Err(Error::UnknownArrow(format!("#{}", l.arrow)));
        }
    }
    for (i, w) in letters.windows(2).enumerate() {
        if w[0].end(q) != w[1].start(q) {
            return Err(Error::NotComposable { position: i + 1, next: i + 2 });
        }
        if w[1] == w[0].inverse() {
            return Err(Error::Unreduced { position: i + 1 });
        }
    }
    if q.contains_relation(letters) {
        return Err(Error::RelationViolation(letters.iter().rev().map(|l| l.token(q)).collect::<Vec<_>>().join(" ")));
    }
    Ok(StringWord::from_valid(q, letters[0].start(q), letters.to_vec()))
}

/// Validates letters given in written order `c_n, …, c_1`.
pub fn validate_string(q: &Quiver, written: &[Letter]) -> Result<StringWord> {
    let walk: Vec<Letter> = written.iter().rev().copied().collect();
    validate_walk(q, &walk)
}

/// Parses written tokens such as `["a3", "-a2", "a1"]` or `["e2"]`.
pub fn parse_string(q: &Quiver, tokens: &[String]) -> Result<StringWord> {
    if let [single] = tokens {
        if let Some(rest) = single.strip_prefix('e') {
            if q.arrow_by_name(single).is_err() {
                let v: usize = rest.parse().map_err(|_| Error::Parse(format!("bad token {single}")))?;
                return StringWord::trivial(q, v);
            }
        }
    }
    let written = tokens
        .iter()
        .map(|t| {
            let t = t.trim();
            let (inverse, name) = match t.strip_prefix('-').or_else(|| t.strip_prefix('−')) {
                Some(rest) => (true, rest),
                None => (false, t),
            };
            Ok(Letter { arrow: q.arrow_by_name(name)?, inverse })
        })
        .collect::<Result<Vec<_>>>()?;
    validate_string(q, &written)
}

/// All string classes with at most `max_length` letters, including the
/// trivial strings, each class once; sorted by length then canonical form.
pub fn enumerate_strings(q: &Quiver, max_length: usize) -> Vec<StringWord> {
    let mut found: BTreeSet<(usize, Vec<(bool, ArrowId)>, Vertex)> = BTreeSet::new();
    let mut out = Vec::new();
    for v in 0..q.vertex_count() {
        out.push(StringWord { start: v, letters: Vec::new(), walk: vec![v] });
    }
    let all_letters: Vec<Letter> = (0..q.arrows().len()).flat_map(|a| [Letter::direct(a), Letter::inv(a)]).collect();
    let mut stack: Vec<Vec<Letter>> = all_letters.iter().map(|&l| vec![l]).collect();
    while let Some(word) = stack.pop() {
        if word.len() > max_length {
            continue;
        }
        if q.contains_relation(&word) {
            continue;
        }
        let s = StringWord::from_valid(q, word[0].start(q), word.clone());
        let key = (s.letters.len(), s.letters.iter().rev().map(|l| l.key()).collect(), s.start);
        if found.insert(key) {
            out.push(s);
        }
        if word.len() < max_length {
            let last = *word.last().unwrap();
            for &l in &all_letters {
                if q.letter_allowed_after(Some(last), l, &word) {
                    let mut next = word.clone();
                    next.push(l);
                    stack.push(next);
                }
            }
        }
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

/// A primitive cyclic word, stored in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BandWord {
    letters: Vec<Letter>,
    walk: Vec<Vertex>,
}

impl BandWord {
    /// Validates a cyclic word in walk order and brings it to canonical form.
    pub fn new(q: &Quiver, letters: Vec<Letter>) -> Result<Self> {
        let n = letters.len();
        if n == 0 {
            return Err(Error::InvalidBand("empty word".into()));
        }
        for i in 0..n {
            let (a, b) = (letters[i], letters[(i + 1) % n]);
            if a.end(q) != b.start(q) {
                return Err(Error::InvalidBand("not a closed walk".into()));
            }
            if b == a.inverse() {
                return Err(Error::InvalidBand("not cyclically reduced".into()));
            }
        }
        if letters.iter().all(|l| l.inverse) || letters.iter().all(|l| !l.inverse) {
            return Err(Error::InvalidBand("needs direct and inverse letters".into()));
        }
        for d in 1..n {
            if n % d == 0 && (0..n).all(|i| letters[i] == letters[i % d]) {
                return Err(Error::InvalidBand("proper power".into()));
            }
        }
        let doubled: Vec<Letter> = letters.iter().chain(letters.iter()).copied().collect();
        if q.contains_relation(&doubled) {
            return Err(Error::InvalidBand("passes through a relation".into()));
        }
        let mut best: Option<Vec<Letter>> = None;
        for word in [letters.clone(), invert_word(&letters)] {
            for r in 0..n {
                let rot: Vec<Letter> = word[r..].iter().chain(word[..r].iter()).copied().collect();
                if best.as_ref().is_none_or(|b| written_cmp(&rot, b) == Ordering::Less) {
                    best = Some(rot);
                }
            }
        }
        let letters = best.unwrap();
        let mut walk = Vec::with_capacity(n);
        walk.push(letters[0].start(q));
        for l in &letters[..n - 1] {
            walk.push(l.end(q));
        }
        Ok(BandWord { letters, walk })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Vertices `u_0, …, u_{n-1}`; letter `c_i` runs from `u_{i-1}` to `u_{i mod n}`.
    pub fn walk(&self) -> &[Vertex] {
        &self.walk
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn dim_vector(&self, q: &Quiver) -> DimVector {
        let mut d = vec![0; q.vertex_count()];
        for &v in &self.walk {
            d[v] += 1;
        }
        DimVector(d)
    }

    pub fn display(&self, q: &Quiver) -> String {
        self.letters.iter().rev().map(|l| l.token(q)).collect::<Vec<_>>().join(" ")
    }
}

/// Canonical bands with at most as many letters as the quiver has arrows.
/// For an acyclic orientation of a cycle this is the single cycle word.
pub fn band_words(q: &Quiver) -> Vec<BandWord> {
    let max_len = q.arrows().len();
    let mut out: Vec<BandWord> = Vec::new();
    let all_letters: Vec<Letter> = (0..q.arrows().len()).flat_map(|a| [Letter::direct(a), Letter::inv(a)]).collect();
    let mut stack: Vec<Vec<Letter>> = all_letters.iter().map(|&l| vec![l]).collect();
    while let Some(word) = stack.pop() {
        let first = word[0];
        let last = *word.last().unwrap();
        if word.len() >= 2 && last.end(q) == first.start(q) {
            if let Ok(band) = BandWord::new(q, word.clone()) {
                if !out.contains(&band) {
                    out.push(band);
                }
            }
        }
        if word.len() < max_len {
            for &l in &all_letters {
                if q.letter_allowed_after(Some(last), l, &word) {
                    let mut next = word.clone();
                    next.push(l);
                    stack.push(next);
                }
            }
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| written_cmp(&a.letters, &b.letters)));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn zero(k: usize) -> Self {
        DimVector(vec![0; k])
    }

    pub fn unit(k: usize, v: Vertex) -> Self {
        let mut d = vec![0; k];
        d[v] = 1;
        DimVector(d)
    }

    /// Coordinate sum, the length of any module with this dimension vector.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Coordinate-wise `≤`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn scaled(&self, m: usize) -> DimVector {
        DimVector(self.0.iter().map(|x| x * m).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Quiver input document: `{"cycle": "+−+−"}` or an explicit presentation.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QuiverDoc {
    Cycle {
        cycle: String,
    },
    Explicit {
        vertices: usize,
        arrows: Vec<(String, usize, usize)>,
        #[serde(default)]
        relations: Vec<Vec<String>>,
        #[serde(default = "default_true")]
        string_algebra: bool,
    },
}

fn default_true() -> bool {
    true
}

impl QuiverDoc {
    pub fn build(&self) -> Result<Quiver> {
        match self {
            QuiverDoc::Cycle { cycle } => cycle_quiver(cycle),
            QuiverDoc::Explicit { vertices, arrows, relations, string_algebra } => {
                let arrow_list: Vec<Arrow> =
                    arrows.iter().map(|(name, s, t)| Arrow { name: name.clone(), source: *s, target: *t }).collect();
                let lookup = |name: &String| {
                    arrow_list.iter().position(|a| &a.name == name).ok_or_else(|| Error::UnknownArrow(name.clone()))
                };
                // relations are written like strings: last arrow applied first
                let rels = relations
                    .iter()
                    .map(|r| r.iter().rev().map(lookup).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Quiver::new(*vertices, arrow_list, rels, *string_algebra)
            }
        }
    }

    pub fn parse(text: &str) -> Result<Quiver> {
        let doc: QuiverDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        doc.build()
    }
}
