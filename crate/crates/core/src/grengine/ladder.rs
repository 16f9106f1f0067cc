//! Measures `μ_{i,j} = μ(X_i) ∪ {a_{i,j}}` just below the tube chain of a
//! quasi-simple `X` with `μ(X_r) ≥ μ(H_1)`.

use serde::Serialize;

use super::engine::GrEngine;
use super::iso::IsoClass;
use super::tree::{Certification, MeasureIndex};
use crate::artame::ArKind;
use crate::error::{Error, Result};
use crate::grorder::GrMeasure;

#[derive(Clone, Debug, Serialize)]
pub struct LadderEntry {
    pub i: usize,
    pub j: usize,
    pub a: u32,
    pub measure: GrMeasure,
    pub realizers: Vec<String>,
    pub all_preinjective: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LadderRow {
    pub i: usize,
    pub chain_measure: GrMeasure,
    /// `|X_{i+1}|`.
    pub next_length: usize,
    /// Every admissible `a < |X_{i+1}|` lies within the bound.
    pub complete: bool,
    pub entries: Vec<LadderEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PredecessorLink {
    pub upper: GrMeasure,
    pub lower: GrMeasure,
    pub adjacent: bool,
    pub status: Certification,
}

#[derive(Clone, Debug, Serialize)]
pub struct MuTable {
    pub quasi_simple: String,
    pub rank: usize,
    pub bound: usize,
    pub rows: Vec<LadderRow>,
    pub a_below_next: bool,
    pub rows_ordered: bool,
    pub realizers_preinjective: bool,
    pub predecessor_chain: bool,
    pub links: Vec<PredecessorLink>,
}

impl MuTable {
    pub fn passed(&self) -> bool {
        self.a_below_next && self.rows_ordered && self.realizers_preinjective && self.predecessor_chain
    }
}

pub fn mu_ij_table(engine: &GrEngine, index: &MeasureIndex, x: &IsoClass, i_max: usize) -> Result<MuTable> {
    let tame = engine.tame_context()?;
    let tube = tame
        .tubes()
        .iter()
        .chain(std::iter::once(tame.homogeneous()))
        .find(|t| t.quasi_simples.contains(x))
        .ok_or_else(|| Error::NotQuasiSimple(x.label().to_string()))?;
    let r = tube.rank;
    let h1 = engine.measure(&engine.homogeneous(1)?)?;
    let xr = engine.measure(&tame.quasi_chain(x, r)?)?;
    if xr < h1 {
        return Err(Error::Precondition(format!("μ({x}_{r}) = {xr} is below μ(H_1) = {h1}")));
    }
    if i_max < 2 * r {
        return Err(Error::Precondition(format!("i_max must be at least {}", 2 * r)));
    }
    let mut rows = Vec::new();
    for i in 2 * r..=i_max {
        let xi = tame.quasi_chain(x, i)?;
        if xi.length() > index.bound {
            break;
        }
        let next_length = tame.quasi_chain(x, i + 1)?.length();
        let base = engine.measure(&xi)?;
        let mut entries: Vec<LadderEntry> = index
            .entries
            .iter()
            .filter(|e| e.measure.len() == base.len() + 1 && base.is_start_of(&e.measure))
            .filter(|e| GrMeasure::max(&e.measure) != Some(next_length as u32))
            .map(|e| LadderEntry {
                i,
                j: 0,
                a: GrMeasure::max(&e.measure).expect("nonempty"),
                measure: e.measure.clone(),
                realizers: e.realizers.iter().map(|c| c.label().to_string()).collect(),
                all_preinjective: e.realizers.iter().all(|c| engine.kind(c) == Some(ArKind::Preinjective)),
            })
            .collect();
        entries.sort_by(|a, b| b.measure.cmp(&a.measure));
        for (j, e) in entries.iter_mut().enumerate() {
            e.j = j + 1;
        }
        rows.push(LadderRow { i, chain_measure: base, next_length, complete: next_length - 1 <= index.bound, entries });
    }
    let a_below_next = rows.iter().all(|row| {
        row.entries.iter().all(|e| (e.a as usize) < row.next_length) && row.entries.windows(2).all(|w| w[0].a < w[1].a)
    });
    let mut rows_ordered = true;
    for (k, row) in rows.iter().enumerate() {
        for later in &rows[k + 1..] {
            rows_ordered &= row.entries.iter().all(|e| later.entries.iter().all(|f| e.measure > f.measure));
        }
    }
    let realizers_preinjective = rows.iter().all(|row| row.entries.iter().all(|e| e.all_preinjective));
    // descending sequence μ_{i,1} > … > μ_{i,t_i} > μ_{i+1,1} > …
    let sequence: Vec<&GrMeasure> = rows.iter().flat_map(|row| row.entries.iter().map(|e| &e.measure)).collect();
    let mut links = Vec::new();
    for w in sequence.windows(2) {
        let (upper, lower) = (w[0], w[1]);
        let (pu, pl) = (index.position(upper).expect("realized"), index.position(lower).expect("realized"));
        let status = if index.entries[pl].open { Certification::Bounded } else { Certification::Certified };
        links.push(PredecessorLink { upper: upper.clone(), lower: lower.clone(), adjacent: pl + 1 == pu, status });
    }
    let predecessor_chain = links.iter().all(|l| l.adjacent);
    Ok(MuTable {
        quasi_simple: x.label().to_string(),
        rank: r,
        bound: index.bound,
        rows,
        a_below_next,
        rows_ordered,
        realizers_preinjective,
        predecessor_chain,
        links,
    })
}

/// Quasi-simples of exceptional tubes whose chain reaches `μ(H_1)` at `X_r`.
pub fn ladder_quasi_simples(engine: &GrEngine) -> Result<Vec<IsoClass>> {
    let tame = engine.tame_context()?;
    let h1 = engine.measure(&engine.homogeneous(1)?)?;
    let mut out = Vec::new();
    for tube in tame.tubes() {
        for x in &tube.quasi_simples {
            if engine.measure(&tame.quasi_chain(x, tube.rank)?)? >= h1 {
                out.push(x.clone());
            }
        }
    }
    Ok(out)
}
