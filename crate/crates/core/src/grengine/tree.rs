//! The realized measure order below a length bound.
//!
//! Every measure `K` of some indecomposable meets `[1, L]` in a measure `P`
//! realized by a module of length at most `L`. If `K ≠ P` the filtration of
//! `K` contains a GR inclusion `T ⊂ M` with `μ(T) = P` and `|M| > L`, and an
//! irreducible mono `T → Y` with an epi `Y → M` forces `|Y| > L`. So unseen
//! measures sit directly above realized measures `P` that have a realizer
//! with such a long irreducible mono; those nodes are *open*.

use serde::Serialize;

use super::engine::GrEngine;
use super::iso::IsoClass;
use crate::artame::ArKind;
use crate::error::{Error, Result};
use crate::grorder::GrMeasure;
use crate::strmod::irreducible_mono_extensions;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certification {
    Certified,
    Bounded,
}

impl Certification {
    pub fn as_str(self) -> &'static str {
        match self {
            Certification::Certified => "certified",
            Certification::Bounded => "bounded",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RealizedMeasure {
    pub measure: GrMeasure,
    pub realizers: Vec<IsoClass>,
    /// Longest irreducible mono out of a realizer that can be a GR submodule.
    pub reach: usize,
    pub open: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MeasureIndex {
    pub bound: usize,
    pub entries: Vec<RealizedMeasure>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuccessorAnswer {
    pub from: GrMeasure,
    pub successor: Option<GrMeasure>,
    pub status: Certification,
    pub bound: usize,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NoPredecessor {
    pub measure: GrMeasure,
    pub status: Certification,
    pub reason: String,
    pub witnesses: Vec<String>,
    pub bound: usize,
}

/// Length of the longest irreducible mono target of `t`, or 0 when `t`
/// is never a GR submodule.
pub fn reach(engine: &GrEngine, t: &IsoClass) -> usize {
    if engine.tame().is_some() && engine.kind(t) == Some(ArKind::Preinjective) {
        // GR submodules of preinjectives are regular, and nothing else
        // receives a mono from a preinjective
        return 0;
    }
    if let Some(b) = t.as_band() {
        return (b.multiplicity + 1) * b.band.len();
    }
    let s = t.as_string().expect("string descriptor");
    irreducible_mono_extensions(engine.quiver(), s).iter().map(|w| w.module_length()).max().unwrap_or(0)
}

impl MeasureIndex {
    pub fn build(engine: &GrEngine, bound: usize) -> Result<Self> {
        let mut all = engine.measure_all(bound)?;
        all.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.descriptor_cmp(&b.0)));
        let mut entries: Vec<RealizedMeasure> = Vec::new();
        for (c, mu) in all {
            let r = reach(engine, &c);
            match entries.last_mut() {
                Some(last) if last.measure == mu => {
                    last.reach = last.reach.max(r);
                    last.realizers.push(c);
                }
                _ => entries.push(RealizedMeasure { measure: mu, realizers: vec![c], reach: r, open: false }),
            }
        }
        for e in &mut entries {
            e.open = e.reach > bound;
        }
        Ok(MeasureIndex { bound, entries })
    }

    pub fn position(&self, m: &GrMeasure) -> Option<usize> {
        self.entries.binary_search_by(|e| e.measure.cmp(m)).ok()
    }

    pub fn get(&self, m: &GrMeasure) -> Option<&RealizedMeasure> {
        self.position(m).map(|i| &self.entries[i])
    }

    fn require(&self, m: &GrMeasure) -> Result<usize> {
        self.position(m).ok_or_else(|| Error::MeasureNotRealized(m.to_string()))
    }

    fn status_after(&self, idx: usize) -> Certification {
        if self.entries[idx].open {
            Certification::Bounded
        } else {
            Certification::Certified
        }
    }

    pub fn successor(&self, i: &GrMeasure) -> Result<SuccessorAnswer> {
        let idx = self.require(i)?;
        let next = self.entries.get(idx + 1);
        Ok(SuccessorAnswer {
            from: i.clone(),
            successor: next.map(|e| e.measure.clone()),
            status: self.status_after(idx),
            bound: self.bound,
            witnesses: next.map(|e| e.realizers.iter().map(|c| c.label().to_string()).collect()).unwrap_or_default(),
        })
    }

    /// Realized measure directly below `j`, certified when nothing unseen
    /// can sit in between.
    pub fn predecessor(&self, j: &GrMeasure) -> Result<(Option<GrMeasure>, Certification)> {
        let idx = self.require(j)?;
        if idx == 0 {
            return Ok((None, Certification::Certified));
        }
        Ok((Some(self.entries[idx - 1].measure.clone()), self.status_after(idx - 1)))
    }

    /// Successive direct successors from `i`, stopping at the first gap that
    /// the bound cannot close.
    pub fn successor_chain(&self, i: &GrMeasure, steps: usize) -> Result<Vec<SuccessorAnswer>> {
        let mut out = Vec::new();
        let mut cur = i.clone();
        for _ in 0..steps {
            let a = self.successor(&cur)?;
            let stop = a.status == Certification::Bounded || a.successor.is_none();
            let next = a.successor.clone();
            out.push(a);
            match next {
                Some(n) if !stop => cur = n,
                _ => break,
            }
        }
        Ok(out)
    }

    /// Realized measures whose realized predecessor may not be direct. `h1`
    /// is the measure of the homogeneous quasi-simple, which never has one.
    pub fn no_predecessor_report(&self, h1: Option<&GrMeasure>) -> Vec<NoPredecessor> {
        let mut out = Vec::new();
        for (idx, e) in self.entries.iter().enumerate() {
            let witnesses = e.realizers.iter().map(|c| c.label().to_string()).collect();
            if idx == 0 {
                out.push(NoPredecessor {
                    measure: e.measure.clone(),
                    status: Certification::Certified,
                    reason: "global minimum".into(),
                    witnesses,
                    bound: self.bound,
                });
                continue;
            }
            let prev = &self.entries[idx - 1];
            if !prev.open {
                continue;
            }
            let (status, reason) = if Some(&e.measure) == h1 {
                (Certification::Certified, "homogeneous quasi-simple".to_string())
            } else {
                (Certification::Bounded, format!("{} is open (reach {})", prev.measure, prev.reach))
            };
            out.push(NoPredecessor { measure: e.measure.clone(), status, reason, witnesses, bound: self.bound });
        }
        out
    }
}
