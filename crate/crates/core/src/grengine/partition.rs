//! Take-off / central / landing labels on the realized measures.

use std::cmp::Ordering;

use serde::Serialize;

use super::engine::GrEngine;
use super::iso::IsoClass;
use super::tree::{Certification, MeasureIndex};
use crate::artame::{ArKind, Tube};
use crate::error::Result;
use crate::grorder::{GrMeasure, PeriodicMeasure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartLabel {
    TakeOff,
    Central,
    Landing,
    UndeterminedAtBound,
}

impl PartLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            PartLabel::TakeOff => "take-off",
            PartLabel::Central => "central",
            PartLabel::Landing => "landing",
            PartLabel::UndeterminedAtBound => "undetermined-at-bound",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PartitionRow {
    pub measure: GrMeasure,
    pub label: PartLabel,
    pub status: Certification,
    pub rule: &'static str,
    pub witnesses: Vec<String>,
    pub kinds: Vec<ArKind>,
}

/// Regular measures are bounded above by these: a finite set together with
/// the limits of the GR chains `X_r ⊂ X_{r+1} ⊂ …`.
#[derive(Clone, Debug, Serialize)]
pub struct RegularCeiling {
    pub finite: Vec<GrMeasure>,
    pub limits: Vec<PeriodicMeasure>,
}

impl RegularCeiling {
    /// `μ > μ(X)` for every regular `X`.
    pub fn exceeds(&self, mu: &GrMeasure) -> bool {
        self.finite.iter().all(|f| mu > f) && self.limits.iter().all(|l| l.compare_finite(mu) == Ordering::Greater)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PartitionReport {
    pub bound: usize,
    pub h1: GrMeasure,
    /// `μ_1 < μ_2 < …` as far as each step is certified.
    pub take_off_prefix: Vec<GrMeasure>,
    pub ceiling: RegularCeiling,
    pub rows: Vec<PartitionRow>,
}

impl PartitionReport {
    pub fn row(&self, mu: &GrMeasure) -> Option<&PartitionRow> {
        self.rows.iter().find(|r| &r.measure == mu)
    }

    pub fn label_of(&self, mu: &GrMeasure) -> Option<PartLabel> {
        self.row(mu).map(|r| r.label)
    }

    /// Preinjective realizers of central measures.
    pub fn central_preinjectives(&self, engine: &GrEngine, index: &MeasureIndex) -> Vec<IsoClass> {
        self.rows
            .iter()
            .filter(|r| r.label == PartLabel::Central)
            .flat_map(|r| index.get(&r.measure).map(|e| e.realizers.clone()).unwrap_or_default())
            .filter(|c| engine.kind(c) == Some(ArKind::Preinjective))
            .collect()
    }
}

fn chain_limit(engine: &GrEngine, tube: &Tube, x: &IsoClass, h1: &GrMeasure) -> Result<Option<PeriodicMeasure>> {
    let tame = engine.tame_context()?;
    let r = tube.rank;
    let xr = tame.quasi_chain(x, r)?;
    let prefix = engine.measure(&xr)?;
    if &prefix < h1 {
        return Ok(None);
    }
    let mut steps = Vec::with_capacity(r);
    let mut prev = xr.length();
    for i in r + 1..=2 * r {
        let len = tame.quasi_chain(x, i)?.length();
        steps.push(u32::try_from(len - prev).expect("length fits in u32"));
        prev = len;
    }
    Ok(Some(PeriodicMeasure { prefix, steps }))
}

/// Upper bounds for all regular measures.
pub fn regular_ceiling(engine: &GrEngine) -> Result<RegularCeiling> {
    let tame = engine.tame_context()?;
    let h1 = engine.measure(&engine.homogeneous(1)?)?;
    let mut limits = Vec::new();
    let mut finite = vec![h1.clone()];
    for tube in tame.tubes().iter().chain(std::iter::once(tame.homogeneous())) {
        for x in &tube.quasi_simples {
            if let Some(l) = chain_limit(engine, tube, x, &h1)? {
                // below X_r the chain need not consist of GR inclusions
                for i in 1..tube.rank {
                    finite.push(engine.measure(&tame.quasi_chain(x, i)?)?);
                }
                limits.push(l);
            }
        }
    }
    finite.sort();
    finite.dedup();
    Ok(RegularCeiling { finite, limits })
}

pub fn partition_report(engine: &GrEngine, index: &MeasureIndex) -> Result<PartitionReport> {
    let h1 = engine.measure(&engine.homogeneous(1)?)?;
    let ceiling = regular_ceiling(engine)?;

    let mut take_off_prefix = Vec::new();
    if let Some(first) = index.entries.first() {
        take_off_prefix.push(first.measure.clone());
        let mut idx = 0;
        while idx + 1 < index.entries.len() && !index.entries[idx].open && index.entries[idx + 1].measure < h1 {
            idx += 1;
            take_off_prefix.push(index.entries[idx].measure.clone());
        }
    }

    let mut rows = Vec::with_capacity(index.entries.len());
    for e in &index.entries {
        let kinds: Vec<ArKind> = e.realizers.iter().filter_map(|c| engine.kind(c)).collect();
        let witnesses = e.realizers.iter().map(|c| c.label().to_string()).collect();
        let mu = &e.measure;
        let (label, status, rule) = if kinds.contains(&ArKind::Preprojective) {
            (PartLabel::TakeOff, Certification::Certified, "preprojective realizer")
        } else if take_off_prefix.contains(mu) {
            (PartLabel::TakeOff, Certification::Certified, "take-off successor chain")
        } else if ceiling.exceeds(mu) {
            (PartLabel::Landing, Certification::Certified, "above every regular measure")
        } else if mu >= &h1 {
            (PartLabel::Central, Certification::Certified, "between μ(H_1) and the landing part")
        } else {
            (
                PartLabel::UndeterminedAtBound,
                Certification::Bounded,
                "below μ(H_1), beyond the certified take-off prefix",
            )
        };
        rows.push(PartitionRow { measure: mu.clone(), label, status, rule, witnesses, kinds });
    }
    Ok(PartitionReport { bound: index.bound, h1, take_off_prefix, ceiling, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkit::cycle_quiver;

    #[test]
    fn kronecker_labels() {
        let k = cycle_quiver("+-").unwrap();
        let e = GrEngine::with_defaults(&k).unwrap();
        let idx = MeasureIndex::build(&e, 9).unwrap();
        let p = partition_report(&e, &idx).unwrap();
        for r in &p.rows {
            let want = match r.kinds[..] {
                [ArKind::Preinjective] => PartLabel::Landing,
                _ if r.kinds.contains(&ArKind::Preprojective) => PartLabel::TakeOff,
                _ => PartLabel::Central,
            };
            assert_eq!(r.label, want, "{}", r.measure);
        }
    }
}
