//! Registered structural properties, each checked on every applicable
//! enumerated module below a bound.

use serde::Serialize;

use super::engine::GrEngine;
use super::iso::IsoClass;
use super::partition::{partition_report, regular_ceiling, PartLabel, PartitionReport};
use super::tree::{Certification, MeasureIndex};
use crate::artame::{ArKind, TubeRef};
use crate::error::{Error, Result};
use crate::grorder::GrMeasure;
use crate::homlin::{exists_epi, hom_basis};
use crate::strmod::irreducible_mono_extensions;

/// Registered property ids with a one-line description.
pub const PROPERTIES: &[(&str, &str)] = &[
    ("epi_factorization", "a GR inclusion X ⊂ M factors as an irreducible mono X → Y and an epi Y → M"),
    ("bigprop_1a", "GR inclusions into preprojectives are irreducible monos"),
    ("bigprop_1b", "GR submodules of quasi-simple regulars are preprojective"),
    ("bigprop_1c", "GR submodules of X_i (i > 1) are preprojective or X_{i-1}"),
    ("bigprop_1d", "GR submodules of preinjectives are regular"),
    ("bigprop_2", "preprojectives are take-off with measure below μ(H_1)"),
    ("bigprop_3", "μ(H_1) is central and preinjectives above δ have larger measure"),
    ("bigprop_4", "tube chains stay below μ(H_1) or become GR inclusions from X_r on"),
    ("bigprop_5", "every exceptional tube has X with μ(X_r) ≥ μ(H_1)"),
    ("bigprop_6", "chains over simple quasi-simples stay below μ(H_1)"),
    ("bigprop_7", "a non-take-off preinjective exceeds the whole chain of its GR quasi-socle"),
    ("onemap", "a preinjective receives maps from exactly one quasi-simple per tube"),
    ("two_gr_string", "band-free strings have at most two GR submodules"),
    ("uniserial_factors", "GR factors of band-free strings are uniserial"),
    ("prop_2gr", "exceptional regulars with two GR submodules have an irreducible GR inclusion"),
    ("gr_remark_7", "at most two dimension vectors of GR submodules, H_1 aside"),
    ("prepre", "direct predecessors of non-take-off preinjectives are longer preinjectives"),
    ("lemma2", "comparison of tube chains above μ(H_1)"),
    ("landing_iff", "landing labels agree with the top-down predecessor chain"),
    ("landing_order", "landing measures are ordered by reverse length"),
    ("landing_exceptional", "landing modules with homogeneous GR submodules are shorter than 2|δ|"),
    ("coro_cen", "modules with a GR submodule H_i, i ≥ 2, are central"),
    ("xq_h1", "with one source and one sink, μ(X_r) = μ(H_1) for non-simple quasi-simples"),
    ("inf_central", "central preinjective counts: none for sink-source, growing otherwise"),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub id: String,
    pub description: String,
    pub verdict: Verdict,
    pub bound: usize,
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyBounds {
    pub max_len: usize,
    /// Second bound for growth properties; defaults to `max_len + |δ|`.
    pub second_len: Option<usize>,
}

impl VerifyBounds {
    pub fn new(max_len: usize) -> Self {
        VerifyBounds { max_len, second_len: None }
    }
}

const MAX_FAILURES: usize = 20;

struct Tally {
    checked: usize,
    skipped: usize,
    failures: Vec<String>,
    notes: Vec<String>,
    applicable: bool,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, skipped: 0, failures: Vec::new(), notes: Vec::new(), applicable: true }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < MAX_FAILURES {
            self.failures.push(what());
        } else if !ok {
            self.failures.push(String::new());
            self.failures.truncate(MAX_FAILURES);
        }
    }

    fn fail_count(&self) -> bool {
        !self.failures.is_empty()
    }
}

struct Ctx<'a> {
    e: &'a GrEngine,
    bound: usize,
    catalog: Vec<IsoClass>,
    index: Option<MeasureIndex>,
    partition: Option<PartitionReport>,
}

impl<'a> Ctx<'a> {
    fn index(&mut self) -> Result<&MeasureIndex> {
        if self.index.is_none() {
            self.index = Some(MeasureIndex::build(self.e, self.bound)?);
        }
        Ok(self.index.as_ref().expect("just built"))
    }

    fn partition(&mut self) -> Result<&PartitionReport> {
        if self.partition.is_none() {
            self.index()?;
            let p = partition_report(self.e, self.index.as_ref().expect("built"))?;
            self.partition = Some(p);
        }
        Ok(self.partition.as_ref().expect("just built"))
    }

    fn kind(&self, m: &IsoClass) -> Option<ArKind> {
        self.e.kind(m)
    }

    fn of_kind(&self, k: ArKind) -> Vec<IsoClass> {
        self.catalog.iter().filter(|c| self.kind(c) == Some(k)).cloned().collect()
    }

    fn h1(&self) -> Result<GrMeasure> {
        self.e.measure(&self.e.homogeneous(1)?)
    }

    /// Quasi-simples with their tube rank, exceptional tubes first.
    fn quasi_simples(&self) -> Result<Vec<(TubeRef, usize, IsoClass)>> {
        let tame = self.e.tame_context()?;
        Ok(tame
            .tubes()
            .iter()
            .chain(std::iter::once(tame.homogeneous()))
            .flat_map(|t| t.quasi_simples.iter().map(move |x| (t.id, t.rank, x.clone())))
            .collect())
    }

    /// `X_1, X_2, …` up to the bound.
    fn chain(&self, x: &IsoClass) -> Result<Vec<IsoClass>> {
        let tame = self.e.tame_context()?;
        let mut out = Vec::new();
        for i in 1.. {
            let xi = tame.quasi_chain(x, i)?;
            if xi.length() > self.bound {
                break;
            }
            out.push(xi);
        }
        Ok(out)
    }

    fn mono_targets(&self, t: &IsoClass) -> Result<Vec<IsoClass>> {
        let q = self.e.quiver();
        if let Some(b) = t.as_band() {
            return Ok(vec![IsoClass::band(q, b.band.clone(), b.multiplicity + 1, b.lambda.clone())?]);
        }
        let s = t.as_string().expect("string descriptor");
        Ok(irreducible_mono_extensions(q, s).into_iter().map(|w| IsoClass::string(q, w)).collect())
    }

    fn non_simple(&self) -> impl Iterator<Item = &IsoClass> {
        self.catalog.iter().filter(|c| !c.is_simple())
    }
}

fn labels(ms: &[IsoClass]) -> String {
    ms.iter().map(|m| m.label().to_string()).collect::<Vec<_>>().join(" | ")
}

/// Runs one registered property.
pub fn verify_property(engine: &GrEngine, id: &str, bounds: VerifyBounds) -> Result<PropertyReport> {
    let description = PROPERTIES
        .iter()
        .find(|(p, _)| *p == id)
        .map(|(_, d)| d.to_string())
        .ok_or_else(|| Error::UnknownProperty(id.to_string()))?;
    let needs_tame = !matches!(id, "epi_factorization" | "two_gr_string" | "uniserial_factors" | "gr_remark_7");
    let mut t = Tally::new();
    if needs_tame && engine.tame().is_none() {
        t.applicable = false;
        t.notes.push("needs an acyclic orientation of a cycle".into());
    } else {
        let mut ctx = Ctx {
            e: engine,
            bound: bounds.max_len,
            catalog: engine.catalog(bounds.max_len)?,
            index: None,
            partition: None,
        };
        run(&mut ctx, id, bounds, &mut t)?;
    }
    let verdict = if !t.applicable {
        Verdict::NotApplicable
    } else if t.fail_count() {
        Verdict::Fail
    } else {
        Verdict::Pass
    };
    Ok(PropertyReport {
        id: id.to_string(),
        description,
        verdict,
        bound: bounds.max_len,
        checked: t.checked,
        skipped: t.skipped,
        failures: t.failures,
        notes: t.notes,
    })
}

fn run(ctx: &mut Ctx<'_>, id: &str, bounds: VerifyBounds, t: &mut Tally) -> Result<()> {
    let e = ctx.e;
    let q = e.quiver();
    let opts = e.config().rank;
    match id {
        "epi_factorization" => {
            for m in ctx.non_simple() {
                let r = e.gr_submodules(m)?;
                for x in &r.gr_submodules {
                    let mrep = m.rep(q);
                    let ok = ctx.mono_targets(x)?.iter().any(|y| exists_epi(q, &y.rep(q), &mrep, opts));
                    t.check(ok, || format!("{x} ⊂ {m}: no irreducible mono target maps onto {m}"));
                }
            }
        }
        "bigprop_1a" => {
            for m in ctx.of_kind(ArKind::Preprojective).iter().filter(|m| !m.is_simple()) {
                for x in e.gr_submodules(m)?.gr_submodules {
                    let ok = ctx.mono_targets(&x)?.contains(m);
                    t.check(ok, || format!("{x} ⊂ {m} is not irreducible"));
                }
            }
        }
        "bigprop_1b" | "bigprop_1c" => {
            let want_simple = id == "bigprop_1b";
            for m in ctx.of_kind(ArKind::Regular).iter().filter(|m| !m.is_simple()) {
                let c = e.classify(m)?;
                let ql = c.quasi_length.unwrap_or(0);
                if (ql == 1) != want_simple {
                    continue;
                }
                for x in e.gr_submodules(m)?.gr_submodules {
                    let ok = match ctx.kind(&x) {
                        Some(ArKind::Preprojective) => true,
                        Some(ArKind::Regular) if !want_simple => {
                            let cx = e.classify(&x)?;
                            cx.tube == c.tube && cx.quasi_socle == c.quasi_socle && cx.quasi_length == Some(ql - 1)
                        }
                        _ => false,
                    };
                    t.check(ok, || format!("{x} ⊂ {m} (quasi-length {ql})"));
                }
            }
        }
        "bigprop_1d" => {
            for m in ctx.of_kind(ArKind::Preinjective).iter().filter(|m| !m.is_simple()) {
                for x in e.gr_submodules(m)?.gr_submodules {
                    t.check(ctx.kind(&x) == Some(ArKind::Regular), || format!("{x} ⊂ {m} is not regular"));
                }
            }
        }
        "bigprop_2" => {
            let h1 = ctx.h1()?;
            let pre = ctx.of_kind(ArKind::Preprojective);
            let p = ctx.partition()?.clone();
            for x in pre {
                let mu = e.measure(&x)?;
                let ok = mu < h1 && p.label_of(&mu) == Some(PartLabel::TakeOff);
                t.check(ok, || format!("{x}: {mu} against μ(H_1) = {h1}"));
            }
        }
        "bigprop_3" => {
            let h1 = ctx.h1()?;
            let label = ctx.partition()?.label_of(&h1);
            t.check(label == Some(PartLabel::Central), || format!("μ(H_1) labelled {label:?}"));
            let delta = e.tame_context()?.delta();
            for m in ctx.of_kind(ArKind::Preinjective) {
                if !delta.le(m.dim()) || m.dim() == &delta {
                    continue;
                }
                let mu = e.measure(&m)?;
                t.check(mu > h1, || format!("{m}: {mu} ≤ {h1}"));
            }
        }
        "bigprop_4" => {
            let h1 = ctx.h1()?;
            let dl = e.tame_context()?.delta_len();
            let hs: Vec<GrMeasure> =
                (1..=ctx.bound / dl).map(|j| e.measure(&e.homogeneous(j)?)).collect::<Result<_>>()?;
            for (tube, r, x) in ctx.quasi_simples()? {
                if tube == TubeRef::Homogeneous {
                    continue;
                }
                let chain = ctx.chain(&x)?;
                let xr = e.measure(&e.tame_context()?.quasi_chain(&x, r)?)?;
                if xr < h1 {
                    for xi in &chain {
                        let mu = e.measure(xi)?;
                        for h in &hs {
                            t.check(&mu < h, || format!("{xi}: {mu} ≥ {h}"));
                        }
                    }
                } else {
                    for i in r..chain.len() {
                        let gr = e.gr_submodules(&chain[i])?;
                        t.check(gr.gr_submodules == vec![chain[i - 1].clone()], || {
                            format!("GR submodules of {} are {}", chain[i], labels(&gr.gr_submodules))
                        });
                    }
                    if r > 1 {
                        for xi in chain.iter().skip(r) {
                            let mu = e.measure(xi)?;
                            for h in &hs {
                                t.check(&mu > h, || format!("{xi}: {mu} ≤ {h}"));
                            }
                        }
                    }
                }
            }
        }
        "bigprop_5" => {
            let h1 = ctx.h1()?;
            let tame = e.tame_context()?;
            for tube in tame.tubes() {
                let mut found = false;
                for x in &tube.quasi_simples {
                    found |= e.measure(&tame.quasi_chain(x, tube.rank)?)? >= h1;
                }
                t.check(found, || format!("tube of rank {} starting at {}", tube.rank, tube.quasi_simples[0]));
            }
        }
        "bigprop_6" => {
            let h1 = ctx.h1()?;
            let tame = e.tame_context()?;
            for tube in tame.tubes() {
                for s in tube.quasi_simples.iter().filter(|s| s.is_simple()) {
                    let sr = e.measure(&tame.quasi_chain(s, tube.rank)?)?;
                    t.check(sr < h1, || format!("μ({s}_r) = {sr}"));
                    for sj in ctx.chain(s)? {
                        let mu = e.measure(&sj)?;
                        t.check(mu < h1, || format!("{sj}: {mu} ≥ {h1}"));
                    }
                }
            }
        }
        "bigprop_7" => {
            let ceiling = regular_ceiling(e)?;
            let h1 = ctx.h1()?;
            let p = ctx.partition()?.clone();
            let tame = e.tame_context()?;
            for m in ctx.of_kind(ArKind::Preinjective).iter().filter(|m| !m.is_simple()) {
                let mu = e.measure(m)?;
                match p.label_of(&mu) {
                    Some(PartLabel::TakeOff) => continue,
                    Some(PartLabel::UndeterminedAtBound) => {
                        t.skipped += 1;
                        continue;
                    }
                    _ => {}
                }
                for n in e.gr_submodules(m)?.gr_submodules {
                    let c = e.classify(&n)?;
                    let (Some(tube), Some(socle)) = (c.tube, c.quasi_socle) else { continue };
                    let tb = tame.tube(tube);
                    let x = &tb.quasi_simples[socle];
                    for xj in ctx.chain(x)? {
                        let mj = e.measure(&xj)?;
                        t.check(mu > mj, || format!("{m}: {mu} ≤ μ({xj}) = {mj}"));
                    }
                    // the chain's limit bounds every X_j beyond the enumeration
                    let xr = e.measure(&tame.quasi_chain(x, tb.rank)?)?;
                    if xr >= h1 {
                        let over = ceiling
                            .limits
                            .iter()
                            .any(|l| l.prefix == xr && l.compare_finite(&mu) == std::cmp::Ordering::Greater);
                        t.check(over, || format!("{m}: {mu} below the limit of the chain over {x}"));
                    }
                }
            }
        }
        "onemap" => {
            let tame = e.tame_context()?;
            for m in ctx.of_kind(ArKind::Preinjective) {
                for tube in tame.tubes() {
                    let hits = tame.hom_quasi_simples(tube, &m);
                    t.check(hits.len() == 1, || {
                        format!("{m}: {} quasi-simples of tube {:?} map in", hits.len(), tube.id)
                    });
                }
                let rep = m.rep(q);
                for x in &tame.homogeneous().quasi_simples {
                    let nz = !hom_basis(q, &x.rep(q), &rep).is_zero();
                    t.check(nz, || format!("Hom({x}, {m}) = 0"));
                }
                if m.is_simple() {
                    continue;
                }
                let subs = e.gr_submodules(&m)?.gr_submodules;
                let mut seen: Vec<String> = Vec::new();
                for x in subs {
                    let c = e.classify(&x)?;
                    let key = match c.tube {
                        Some(TubeRef::Exceptional(i)) => format!("T{i}"),
                        _ => format!("H:{}", c.quasi_socle.unwrap_or(0)),
                    };
                    t.check(!seen.contains(&key), || format!("{m}: two GR submodules in component {key}"));
                    seen.push(key);
                }
            }
        }
        "two_gr_string" | "uniserial_factors" => {
            for m in ctx.non_simple() {
                let Some(s) = m.as_string() else { continue };
                if !e.is_band_free(s) {
                    continue;
                }
                let r = e.gr_submodules(m)?;
                if id == "two_gr_string" {
                    t.check(r.gr_submodules.len() <= 2, || format!("{m}: {}", labels(&r.gr_submodules)));
                } else {
                    for qt in &r.quotients {
                        t.check(qt.uniserial, || format!("{m} / {} = {:?}", qt.submodule, qt.words));
                    }
                }
            }
        }
        "prop_2gr" => {
            for m in ctx.of_kind(ArKind::Regular) {
                let c = e.classify(&m)?;
                if !matches!(c.tube, Some(TubeRef::Exceptional(_))) || m.is_simple() {
                    continue;
                }
                let r = e.gr_submodules(&m)?;
                if r.gr_count != 2 {
                    continue;
                }
                let mut ok = false;
                for x in &r.gr_submodules {
                    ok |= ctx.mono_targets(x)?.contains(&m);
                }
                t.check(ok, || format!("{m}: {}", labels(&r.gr_submodules)));
            }
        }
        "gr_remark_7" => {
            for m in ctx.non_simple() {
                if e.tame().is_some() {
                    let c = e.classify(m)?;
                    if c.is_homogeneous() && c.quasi_length == Some(1) {
                        continue;
                    }
                }
                let r = e.gr_submodules(m)?;
                t.check(r.gr_count_dim <= 2, || format!("{m}: {}", labels(&r.gr_submodules)));
            }
        }
        "prepre" => {
            let p = ctx.partition()?.clone();
            let pre = ctx.of_kind(ArKind::Preinjective);
            let idx = ctx.index()?;
            for m in pre {
                let mu = e.measure(&m)?;
                if matches!(p.label_of(&mu), Some(PartLabel::TakeOff) | Some(PartLabel::UndeterminedAtBound) | None) {
                    continue;
                }
                let (prev, status) = idx.predecessor(&mu)?;
                let Some(prev) = prev else { continue };
                if status == Certification::Bounded {
                    t.skipped += 1;
                    continue;
                }
                let ns = &idx.get(&prev).expect("realized").realizers;
                for n in ns {
                    let ok = e.kind(n) == Some(ArKind::Preinjective) && n.length() > m.length();
                    t.check(ok, || format!("{n} precedes {m}"));
                }
            }
        }
        "lemma2" => {
            let h1 = ctx.h1()?;
            let tame = e.tame_context()?;
            let qs = ctx.quasi_simples()?;
            let chains: Vec<Vec<GrMeasure>> = qs
                .iter()
                .map(|(_, _, x)| ctx.chain(x)?.iter().map(|c| e.measure(c)).collect())
                .collect::<Result<_>>()?;
            for (a, (_, r, x)) in qs.iter().enumerate() {
                let xr = e.measure(&tame.quasi_chain(x, *r)?)?;
                if xr < h1 {
                    continue;
                }
                for (b, (_, s, y)) in qs.iter().enumerate() {
                    let ys = e.measure(&tame.quasi_chain(y, *s)?)?;
                    if xr > ys {
                        for xi in chains[a].iter().skip(r - 1) {
                            for yj in &chains[b] {
                                t.check(xi > yj, || format!("{x} vs {y}: {xi} ≤ {yj}"));
                            }
                        }
                    }
                    for (i, xi) in chains[a].iter().enumerate().skip(2 * r - 1) {
                        for (j, yj) in chains[b].iter().enumerate() {
                            if xi != yj {
                                continue;
                            }
                            let ok = r == s
                                && (r - 1..chains[a].len().min(chains[b].len())).all(|k| chains[a][k] == chains[b][k]);
                            t.check(ok, || format!("μ({x}_{}) = μ({y}_{}) but chains differ", i + 1, j + 1));
                        }
                    }
                }
            }
        }
        "landing_iff" => {
            let p = ctx.partition()?.clone();
            let idx = ctx.index()?;
            let n = idx.entries.len();
            let mut chain = Vec::new();
            if n > 0 && !idx.entries[n - 1].open {
                let mut k = n - 1;
                chain.push(k);
                while k > 0 && !idx.entries[k - 1].open {
                    k -= 1;
                    chain.push(k);
                }
            } else {
                t.notes.push("largest realized measure is open; no certified landing chain".into());
            }
            let mut seen_landing = false;
            for (k, r) in p.rows.iter().enumerate() {
                let landing = r.label == PartLabel::Landing;
                t.check(!seen_landing || landing, || {
                    format!("{} follows a landing measure but is {}", r.measure, r.label.as_str())
                });
                seen_landing |= landing;
                if chain.contains(&k) && r.measure >= p.h1 {
                    t.check(landing, || format!("{} is on the top-down chain but {}", r.measure, r.label.as_str()));
                }
            }
            t.notes.push(format!("certified top-down chain of {} measures", chain.len()));
        }
        "landing_order" => {
            let p = ctx.partition()?.clone();
            let idx = ctx.index()?;
            let mods: Vec<(GrMeasure, usize, String)> = p
                .rows
                .iter()
                .filter(|r| r.label == PartLabel::Landing)
                .flat_map(|r| {
                    idx.get(&r.measure)
                        .expect("realized")
                        .realizers
                        .iter()
                        .map(|c| (r.measure.clone(), c.length(), c.label().to_string()))
                })
                .collect();
            for a in &mods {
                for b in &mods {
                    let ok = (a.0 < b.0) == (a.1 > b.1);
                    t.check(ok, || format!("{} ({}) vs {} ({})", a.2, a.0, b.2, b.0));
                }
            }
        }
        "landing_exceptional" | "coro_cen" => {
            let tame = e.tame_context()?;
            if tame.tubes().iter().all(|tb| tb.rank < 2) {
                t.applicable = false;
                t.notes.push("no exceptional tube of rank > 1".into());
                return Ok(());
            }
            let p = ctx.partition()?.clone();
            let dl = tame.delta_len();
            for m in ctx.non_simple().cloned().collect::<Vec<_>>() {
                let mu = e.measure(&m)?;
                let label = p.label_of(&mu);
                let subs = e.gr_submodules(&m)?.gr_submodules;
                let mut hom_ql = Vec::new();
                for x in &subs {
                    let c = e.classify(x)?;
                    if c.is_homogeneous() {
                        hom_ql.push(c.quasi_length.unwrap_or(0));
                    }
                }
                if hom_ql.is_empty() {
                    continue;
                }
                if id == "landing_exceptional" {
                    if label == Some(PartLabel::Landing) {
                        t.check(m.length() < 2 * dl, || format!("{m}: landing with homogeneous GR submodule"));
                    }
                } else if hom_ql.iter().any(|&i| i >= 2) {
                    t.check(label == Some(PartLabel::Central), || format!("{m} labelled {label:?}"));
                }
            }
        }
        "xq_h1" => {
            let tame = e.tame_context()?;
            if !tame.orientation().is_one_source_one_sink() {
                t.applicable = false;
                t.notes.push("orientation has more than one source".into());
                return Ok(());
            }
            let h1 = ctx.h1()?;
            for tube in tame.tubes() {
                for x in tube.quasi_simples.iter().filter(|x| !x.is_simple()) {
                    let mu = e.measure(&tame.quasi_chain(x, tube.rank)?)?;
                    t.check(mu == h1, || format!("μ({x}_{}) = {mu}", tube.rank));
                }
            }
        }
        "inf_central" => {
            let tame = e.tame_context()?;
            let second = bounds.second_len.unwrap_or(bounds.max_len + tame.delta_len());
            let count = |len: usize| -> Result<usize> {
                let idx = MeasureIndex::build(e, len)?;
                let p = partition_report(e, &idx)?;
                Ok(p.central_preinjectives(e, &idx).len())
            };
            let (a, b) = (count(bounds.max_len)?, count(second)?);
            t.notes.push(format!("central preinjectives: {a} at {}, {b} at {second}", bounds.max_len));
            if tame.orientation().is_sink_source() {
                t.check(a == 0 && b == 0, || format!("sink-source orientation has {a} and {b}"));
            } else {
                t.check(b > a, || format!("count does not grow: {a} then {b}"));
            }
        }
        other => return Err(Error::UnknownProperty(other.to_string())),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkit::cycle_quiver;

    #[test]
    fn unknown_property() {
        let q = cycle_quiver("+-").unwrap();
        let e = GrEngine::with_defaults(&q).unwrap();
        assert!(matches!(verify_property(&e, "nope", VerifyBounds::new(4)), Err(Error::UnknownProperty(_))));
    }

    #[test]
    fn all_pass_on_small_quivers() {
        for w in ["+-", "++-", "+-+-"] {
            let q = cycle_quiver(w).unwrap();
            let e = GrEngine::with_defaults(&q).unwrap();
            let len = 3 * q.vertex_count();
            for (id, _) in PROPERTIES {
                let r = verify_property(&e, id, VerifyBounds::new(len)).unwrap();
                assert!(r.passed(), "{w} {id}: {:?}", r.failures);
            }
        }
    }
}
