//! Memoized GR measure computation.

use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::RwLock;
use rayon::prelude::*;
use serde::Serialize;

use super::iso::IsoClass;
use crate::artame::{ArClass, ArKind, TameContext};
use crate::error::{Error, Result};
use crate::grorder::GrMeasure;
use crate::homlin::{exists_mono, graph_map_basis, RankOptions};
use crate::linalg::{q as rat, Q};
use crate::qkit::{band_words, enumerate_strings, BandWord, DimVector, Quiver, StringWord};
use crate::strmod::substring_submodules;

/// How proper submodules are searched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Substring submodules only. Exact for strings without band submodules.
    Fast,
    /// Every enumerated candidate of smaller length, tested with a mono test.
    General,
    /// `Fast` where it is exact, `General` otherwise.
    Auto,
}

#[derive(Clone, Debug)]
pub struct EngineConfig {
    pub strategy: Strategy,
    pub rank: RankOptions,
    /// Parameter of enumerated band modules.
    pub lambda: Q,
    /// Skip preinjective candidates for non-preinjective targets.
    pub ar_pruning: bool,
    /// Recompute pruned answers without pruning and fail on disagreement.
    pub verify_pruning: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            strategy: Strategy::Auto,
            rank: RankOptions::default(),
            lambda: rat(1),
            ar_pruning: false,
            verify_pruning: false,
        }
    }
}

#[derive(Clone, Debug)]
struct Node {
    measure: GrMeasure,
    /// Candidates attaining the maximum, sorted by descriptor.
    subs: Vec<IsoClass>,
}

/// Quotient of a GR inclusion of string modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrQuotient {
    pub submodule: String,
    pub start: usize,
    pub end: usize,
    pub words: Vec<String>,
    pub uniserial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrResult {
    pub module: IsoClass,
    pub measure: GrMeasure,
    pub gr_submodules: Vec<IsoClass>,
    /// Iso classes, band powers of equal multiplicity counted once.
    pub gr_count: usize,
    /// Distinct dimension vectors among GR submodules.
    pub gr_count_dim: usize,
    /// `N_1 ⊂ … ⊂ N_s`, smallest descriptor at every step.
    pub filtration: Vec<IsoClass>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub quotients: Vec<GrQuotient>,
}

/// All canonical strings with module length at most `max_len`, and band
/// powers `H_m` (parameter `lambda`) with `m·|δ| ≤ max_len`.
pub fn enumerate_with_lambda(q: &Quiver, max_len: usize, lambda: &Q) -> Result<Vec<IsoClass>> {
    let bands = supported_bands(q)?;
    let mut out: Vec<IsoClass> = if max_len == 0 {
        Vec::new()
    } else {
        enumerate_strings(q, max_len - 1).into_iter().map(|s| IsoClass::string(q, s)).collect()
    };
    for b in &bands {
        let len = b.len();
        for m in 1..=max_len / len {
            out.push(IsoClass::band(q, b.clone(), m, lambda.clone())?);
        }
    }
    out.sort_by(|a, b| a.descriptor_cmp(b));
    Ok(out)
}

pub fn enumerate_indecomposables(q: &Quiver, max_len: usize) -> Result<Vec<IsoClass>> {
    enumerate_with_lambda(q, max_len, &rat(1))
}

fn supported_bands(q: &Quiver) -> Result<Vec<BandWord>> {
    let bands = band_words(q);
    if !bands.is_empty() && !q.is_cycle() {
        return Err(Error::Unsupported(format!("{} band(s) outside an Ã_n cycle", bands.len())));
    }
    Ok(bands)
}

/// Shared state for GR computations over one quiver.
pub struct GrEngine {
    quiver: Quiver,
    config: EngineConfig,
    tame: Option<TameContext>,
    bands: Vec<BandWord>,
    memo: RwLock<HashMap<IsoClass, Arc<Node>>>,
    catalog: RwLock<(usize, Arc<Vec<IsoClass>>)>,
    classes: RwLock<HashMap<IsoClass, ArClass>>,
    band_free: RwLock<HashMap<StringWord, bool>>,
}

impl GrEngine {
    pub fn new(q: &Quiver, config: EngineConfig) -> Result<Self> {
        let bands = supported_bands(q)?;
        let tame = if q.is_cycle() { Some(TameContext::new(q)?) } else { None };
        Ok(GrEngine {
            quiver: q.clone(),
            config,
            tame,
            bands,
            memo: RwLock::new(HashMap::new()),
            catalog: RwLock::new((0, Arc::new(Vec::new()))),
            classes: RwLock::new(HashMap::new()),
            band_free: RwLock::new(HashMap::new()),
        })
    }

    pub fn with_defaults(q: &Quiver) -> Result<Self> {
        Self::new(q, EngineConfig::default())
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn tame(&self) -> Option<&TameContext> {
        self.tame.as_ref()
    }

    pub fn tame_context(&self) -> Result<&TameContext> {
        self.tame.as_ref().ok_or(Error::NotCycleQuiver)
    }

    pub fn clear_cache(&self) {
        self.memo.write().clear();
    }

    /// `H_m` with the configured parameter.
    pub fn homogeneous(&self, m: usize) -> Result<IsoClass> {
        let b = self.bands.first().ok_or(Error::NotCycleQuiver)?;
        IsoClass::band(&self.quiver, b.clone(), m, self.config.lambda.clone())
    }

    pub fn string(&self, word: StringWord) -> IsoClass {
        IsoClass::string(&self.quiver, word)
    }

    /// Enumerated classes of length at most `max_len`.
    pub fn catalog(&self, max_len: usize) -> Result<Vec<IsoClass>> {
        let all = self.catalog_arc(max_len)?;
        Ok(all.iter().filter(|c| c.length() <= max_len).cloned().collect())
    }

    fn catalog_arc(&self, max_len: usize) -> Result<Arc<Vec<IsoClass>>> {
        {
            let c = self.catalog.read();
            if c.0 >= max_len {
                return Ok(c.1.clone());
            }
        }
        let list = Arc::new(enumerate_with_lambda(&self.quiver, max_len, &self.config.lambda)?);
        let mut c = self.catalog.write();
        if c.0 < max_len {
            *c = (max_len, list);
        }
        Ok(c.1.clone())
    }

    pub fn classify(&self, m: &IsoClass) -> Result<ArClass> {
        if let Some(c) = self.classes.read().get(m) {
            return Ok(c.clone());
        }
        let c = self.tame_context()?.classify(m)?;
        self.classes.write().insert(m.clone(), c.clone());
        Ok(c)
    }

    pub fn kind(&self, m: &IsoClass) -> Option<ArKind> {
        self.tame.as_ref().and_then(|_| self.classify(m).ok()).map(|c| c.kind)
    }

    /// Whether no band module embeds into the string module `s`.
    pub fn is_band_free(&self, s: &StringWord) -> bool {
        if self.bands.is_empty() {
            return true;
        }
        if let Some(&b) = self.band_free.read().get(s) {
            return b;
        }
        let q = &self.quiver;
        let d = s.dim_vector(q);
        // H_1 ⊂ H_m, so H_1 decides
        let free = self.bands.iter().all(|b| {
            let h = IsoClass::band(q, b.clone(), 1, self.config.lambda.clone()).expect("valid band");
            !h.dim().le(&d) || !exists_mono(q, &h.rep(q), &crate::strmod::string_to_rep(q, s), self.config.rank)
        });
        self.band_free.write().insert(s.clone(), free);
        free
    }

    pub fn embeds(&self, x: &IsoClass, m: &IsoClass) -> bool {
        let q = &self.quiver;
        if !x.dim().le(m.dim()) {
            return false;
        }
        if let (Some(a), Some(b)) = (x.as_string(), m.as_string()) {
            if graph_map_basis(q, a, b).iter().any(|g| g.is_mono(a)) {
                return true;
            }
        }
        exists_mono(q, &x.rep(q), &m.rep(q), self.config.rank)
    }

    fn uses_fast_path(&self, m: &IsoClass) -> bool {
        match (self.config.strategy, m.as_string()) {
            (Strategy::Fast, Some(_)) => true,
            (Strategy::Auto, Some(s)) => self.is_band_free(s),
            _ => false,
        }
    }

    fn node(&self, m: &IsoClass) -> Result<Arc<Node>> {
        if let Some(n) = self.memo.read().get(m) {
            return Ok(n.clone());
        }
        let node = Arc::new(self.compute(m)?);
        self.memo.write().entry(m.clone()).or_insert_with(|| node.clone());
        Ok(node)
    }

    fn compute(&self, m: &IsoClass) -> Result<Node> {
        let len = u32::try_from(m.length()).expect("module length fits in u32");
        if m.length() == 1 {
            return Ok(Node { measure: GrMeasure::new(vec![1])?, subs: Vec::new() });
        }
        let (best, subs) = if self.uses_fast_path(m) {
            self.best_substrings(m)?
        } else {
            let pruned = self.best_general(m, self.config.ar_pruning)?;
            if self.config.ar_pruning && self.config.verify_pruning {
                let full = self.best_general(m, false)?;
                if full != pruned {
                    return Err(Error::Precondition(format!("AR pruning changed the GR submodules of {m}")));
                }
            }
            pruned
        };
        Ok(Node { measure: best.extend(len)?, subs })
    }

    fn best_substrings(&self, m: &IsoClass) -> Result<(GrMeasure, Vec<IsoClass>)> {
        let q = &self.quiver;
        let s = m.as_string().expect("fast path runs on strings");
        let mut words: Vec<StringWord> =
            substring_submodules(q, s).into_iter().filter(|inc| inc.is_proper(s)).map(|inc| inc.word).collect();
        words.sort_by(|a, b| a.canonical_cmp(b));
        words.dedup();
        let mut best = GrMeasure::empty();
        let mut subs: Vec<IsoClass> = Vec::new();
        for w in words {
            let c = IsoClass::string(q, w);
            let mu = self.node(&c)?.measure.clone();
            if mu > best {
                best = mu;
                subs.clear();
                subs.push(c);
            } else if mu == best {
                subs.push(c);
            }
        }
        subs.sort_by(|a, b| a.descriptor_cmp(b));
        Ok((best, subs))
    }

    fn candidates(&self, m: &IsoClass, ar_pruning: bool) -> Result<Vec<IsoClass>> {
        let q = &self.quiver;
        let len = m.length();
        let catalog = self.catalog_arc(len - 1)?;
        let prune = ar_pruning && self.tame.is_some() && self.kind(m) != Some(ArKind::Preinjective);
        let mut out: Vec<IsoClass> = catalog
            .iter()
            .filter(|c| c.length() < len && !c.is_band() && c.dim().le(m.dim()))
            .filter(|c| !prune || self.kind(c) != Some(ArKind::Preinjective))
            .cloned()
            .collect();
        // bands with the target's own parameter, so that H_j(λ) ⊂ H_i(λ)
        let lambda = m.as_band().map(|b| b.lambda.clone()).unwrap_or_else(|| self.config.lambda.clone());
        for b in &self.bands {
            for j in 1..=(len - 1) / b.len() {
                let h = IsoClass::band(q, b.clone(), j, lambda.clone())?;
                if h.dim().le(m.dim()) {
                    out.push(h);
                }
            }
        }
        Ok(out)
    }

    fn best_general(&self, m: &IsoClass, ar_pruning: bool) -> Result<(GrMeasure, Vec<IsoClass>)> {
        let cands = self.candidates(m, ar_pruning)?;
        let mut scored: Vec<(GrMeasure, IsoClass)> =
            cands.into_iter().map(|c| Ok((self.node(&c)?.measure.clone(), c))).collect::<Result<_>>()?;
        scored.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.descriptor_cmp(&b.1)));
        let mut i = 0;
        while i < scored.len() {
            let mut j = i;
            while j < scored.len() && scored[j].0 == scored[i].0 {
                j += 1;
            }
            let hits: Vec<IsoClass> =
                scored[i..j].iter().filter(|(_, c)| self.embeds(c, m)).map(|(_, c)| c.clone()).collect();
            if !hits.is_empty() {
                return Ok((scored[i].0.clone(), hits));
            }
            i = j;
        }
        Err(Error::Precondition(format!("{m} has no indecomposable proper submodule")))
    }

    pub fn measure(&self, m: &IsoClass) -> Result<GrMeasure> {
        Ok(self.node(m)?.measure.clone())
    }

    /// Measures of every enumerated class up to `max_len`, computed level by
    /// level in parallel. Sorted by descriptor.
    pub fn measure_all(&self, max_len: usize) -> Result<Vec<(IsoClass, GrMeasure)>> {
        let catalog = self.catalog(max_len)?;
        let mut by_len: Vec<Vec<&IsoClass>> = vec![Vec::new(); max_len + 1];
        for c in &catalog {
            by_len[c.length()].push(c);
        }
        for level in &by_len {
            level.par_iter().map(|c| self.node(c).map(|_| ())).collect::<Result<Vec<()>>>()?;
        }
        catalog.into_iter().map(|c| Ok((c.clone(), self.measure(&c)?))).collect()
    }

    pub fn gr_submodules(&self, m: &IsoClass) -> Result<GrResult> {
        if m.is_simple() {
            return Err(Error::SimpleModule);
        }
        let q = &self.quiver;
        let node = self.node(m)?;
        let subs = node.subs.clone();
        let mut keys: Vec<String> = subs.iter().map(|s| self.identity_key(s)).collect();
        keys.sort();
        keys.dedup();
        let mut dims: Vec<&DimVector> = subs.iter().map(|s| s.dim()).collect();
        dims.sort();
        dims.dedup();
        let mut filtration = Vec::new();
        let mut cur = m.clone();
        loop {
            let n = self.node(&cur)?;
            let Some(next) = n.subs.first() else { break };
            filtration.push(next.clone());
            cur = next.clone();
        }
        filtration.reverse();
        let mut quotients = Vec::new();
        if let Some(s) = m.as_string() {
            if self.uses_fast_path(m) {
                for inc in substring_submodules(q, s) {
                    if !inc.is_proper(s) {
                        continue;
                    }
                    if let Some(t) = subs.iter().find(|t| t.as_string() == Some(&inc.word)) {
                        quotients.push(GrQuotient {
                            submodule: t.label().to_string(),
                            start: inc.start,
                            end: inc.end,
                            words: inc.quotients.iter().map(|w| w.display(q)).collect(),
                            uniserial: inc.quotient_uniserial(),
                        });
                    }
                }
            }
        }
        Ok(GrResult {
            module: m.clone(),
            measure: node.measure.clone(),
            gr_count: keys.len(),
            gr_count_dim: dims.len(),
            gr_submodules: subs,
            filtration,
            quotients,
        })
    }

    /// Band powers of one multiplicity share a key; strings in a rank one
    /// tube keep their own.
    fn identity_key(&self, m: &IsoClass) -> String {
        match m.as_band() {
            Some(b) => format!("H{}", b.multiplicity),
            None => m.label().to_string(),
        }
    }

    pub fn is_gr_inclusion(&self, n: &IsoClass, m: &IsoClass) -> Result<bool> {
        if n == m || n.length() >= m.length() {
            return Ok(false);
        }
        let len = u32::try_from(m.length()).expect("module length fits in u32");
        if self.measure(m)? != self.measure(n)?.extend(len)? {
            return Ok(false);
        }
        Ok(self.embeds(n, m))
    }
}

pub fn gr_measure(q: &Quiver, m: &IsoClass) -> Result<GrMeasure> {
    GrEngine::with_defaults(q)?.measure(m)
}

pub fn gr_submodules(q: &Quiver, m: &IsoClass) -> Result<GrResult> {
    GrEngine::with_defaults(q)?.gr_submodules(m)
}

pub fn is_gr_inclusion(q: &Quiver, n: &IsoClass, m: &IsoClass) -> Result<bool> {
    GrEngine::with_defaults(q)?.is_gr_inclusion(n, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkit::{cycle_quiver, parse_string};

    fn s(q: &Quiver, t: &[&str]) -> IsoClass {
        IsoClass::string(q, parse_string(q, &t.iter().map(|x| x.to_string()).collect::<Vec<_>>()).unwrap())
    }

    fn m(v: &[u32]) -> GrMeasure {
        GrMeasure::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let k = cycle_quiver("+-").unwrap();
        assert_eq!(enumerate_indecomposables(&k, 2).unwrap().len(), 5);
        let a3 = Quiver::line(3).unwrap();
        assert_eq!(enumerate_indecomposables(&a3, 3).unwrap().len(), 6);
    }

    #[test]
    fn kronecker_measures() {
        let k = cycle_quiver("+-").unwrap();
        let e = GrEngine::with_defaults(&k).unwrap();
        assert_eq!(e.measure(&e.homogeneous(1).unwrap()).unwrap(), m(&[1, 2]));
        assert_eq!(e.measure(&e.homogeneous(2).unwrap()).unwrap(), m(&[1, 2, 4]));
        let p = e.catalog(3).unwrap().into_iter().find(|c| c.dim() == &DimVector(vec![1, 2])).unwrap();
        assert_eq!(e.measure(&p).unwrap(), m(&[1, 3]));
    }

    #[test]
    fn strategies_agree_on_a2() {
        let q = cycle_quiver("++-").unwrap();
        let auto = GrEngine::with_defaults(&q).unwrap();
        let general = GrEngine::new(&q, EngineConfig { strategy: Strategy::General, ..Default::default() }).unwrap();
        for (c, mu) in auto.measure_all(7).unwrap() {
            assert_eq!(general.measure(&c).unwrap(), mu, "{c}");
        }
    }

    #[test]
    fn simple_has_no_gr_submodule() {
        let k = cycle_quiver("+-").unwrap();
        let e = GrEngine::with_defaults(&k).unwrap();
        let simple = e.catalog(1).unwrap().remove(0);
        assert_eq!(e.gr_submodules(&simple), Err(Error::SimpleModule));
        assert!(!e.is_gr_inclusion(&simple, &simple).unwrap());
    }

    #[test]
    fn quasi_simple_path_module() {
        let q = cycle_quiver("+++--").unwrap();
        let e = GrEngine::with_defaults(&q).unwrap();
        assert_eq!(e.measure(&e.homogeneous(1).unwrap()).unwrap(), m(&[1, 2, 3, 4, 5]));
        let x = s(&q, &["a2", "a1", "a0"]);
        assert_eq!(e.measure(&x).unwrap(), m(&[1, 2, 3, 4]));
    }
}
