//! Auslander-Reiten data for acyclic orientations of `Ã_n`: defect,
//! preprojective / regular / preinjective classes, tubes and `τ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grengine::IsoClass;
use crate::homlin::graph_map_basis;
use crate::linalg::{q as rat, Mat, Q};
use crate::qkit::{enumerate_strings, CycleOrientation, DimVector, Quiver, StringWord, Vertex};
use crate::strmod::{irreducible_mono_extensions, substring_submodules};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ArKind {
    Preprojective,
    Regular,
    Preinjective,
}

/// `τ^{-k} P(v)` for preprojectives, `τ^k I(v)` for preinjectives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OrbitIndex {
    pub vertex: Vertex,
    pub index: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "id")]
pub enum TubeRef {
    Exceptional(usize),
    Homogeneous,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ArClass {
    pub kind: ArKind,
    pub defect: i64,
    pub dim: DimVector,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit: Option<OrbitIndex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tube: Option<TubeRef>,
    /// Index of the quasi-socle among the tube's quasi-simples.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quasi_socle: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quasi_length: Option<usize>,
}

impl ArClass {
    pub fn is_regular(&self) -> bool {
        self.kind == ArKind::Regular
    }

    pub fn is_homogeneous(&self) -> bool {
        self.tube == Some(TubeRef::Homogeneous)
    }
}

/// A tube. Exceptional tubes list their quasi-simples so that
/// `τ E_i = E_{i+1 mod r}`; the homogeneous report lists `H_1` followed by
/// string quasi-simples of rank-one tubes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tube {
    pub id: TubeRef,
    pub rank: usize,
    pub quasi_simples: Vec<IsoClass>,
}

/// Quiver-level data shared by all AR computations.
#[derive(Clone, Debug)]
pub struct TameContext {
    quiver: Quiver,
    orientation: CycleOrientation,
    /// `E = I − A`, so that `⟨x, y⟩ = xᵀ E y`.
    euler: Mat,
    euler_inv: Mat,
    tubes: Vec<Tube>,
    homogeneous: Tube,
}

fn euler_matrix(q: &Quiver) -> Mat {
    let k = q.vertex_count();
    let mut e = Mat::identity(k);
    for a in q.arrows() {
        let x = e.get(a.source, a.target) - rat(1);
        e.set(a.source, a.target, x);
    }
    e
}

fn apply(m: &Mat, d: &[i64]) -> Vec<i64> {
    (0..m.rows())
        .map(|i| {
            let s: Q = (0..m.cols()).map(|j| m.get(i, j) * rat(d[j])).sum();
            assert!(s.is_integer(), "Coxeter transform left the integers");
            i64::try_from(s.to_integer()).expect("dimension fits in i64")
        })
        .collect()
}

fn to_dim(v: &[i64]) -> Option<DimVector> {
    v.iter().map(|&x| usize::try_from(x).ok()).collect::<Option<Vec<_>>>().map(DimVector)
}

impl TameContext {
    pub fn new(q: &Quiver) -> Result<Self> {
        let orientation = q.cycle_orientation().cloned().ok_or(Error::NotCycleQuiver)?;
        let euler = euler_matrix(q);
        let euler_inv = euler.inverse().expect("Euler matrix of an acyclic quiver is unitriangular");
        let mut ctx = TameContext {
            quiver: q.clone(),
            orientation,
            euler,
            euler_inv,
            tubes: Vec::new(),
            homogeneous: Tube { id: TubeRef::Homogeneous, rank: 1, quasi_simples: Vec::new() },
        };
        ctx.build_tubes()?;
        Ok(ctx)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn orientation(&self) -> &CycleOrientation {
        &self.orientation
    }

    pub fn delta(&self) -> DimVector {
        DimVector(vec![1; self.quiver.vertex_count()])
    }

    pub fn delta_len(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn defect(&self, d: &DimVector) -> i64 {
        self.quiver.euler_form(&self.delta(), d)
    }

    pub fn tubes(&self) -> &[Tube] {
        &self.tubes
    }

    pub fn homogeneous(&self) -> &Tube {
        &self.homogeneous
    }

    pub fn tube(&self, id: TubeRef) -> &Tube {
        match id {
            TubeRef::Exceptional(i) => &self.tubes[i],
            TubeRef::Homogeneous => &self.homogeneous,
        }
    }

    fn build_tubes(&mut self) -> Result<()> {
        let q = &self.quiver;
        let n1 = q.vertex_count();
        let mut simples: Vec<StringWord> = Vec::new();
        for s in enumerate_strings(q, n1 - 1) {
            let d = s.dim_vector(q);
            if self.defect(&d) != 0 {
                continue;
            }
            let has_regular_sub = substring_submodules(q, &s)
                .iter()
                .any(|inc| inc.is_proper(&s) && self.defect(&inc.word.dim_vector(q)) == 0);
            if !has_regular_sub {
                simples.push(s);
            }
        }
        let dims: Vec<DimVector> = simples.iter().map(|s| s.dim_vector(q)).collect();
        let mut used = vec![false; simples.len()];
        let mut tubes: Vec<Vec<usize>> = Vec::new();
        let mut rank_one: Vec<usize> = Vec::new();
        for i in 0..simples.len() {
            if used[i] {
                continue;
            }
            if q.euler_form(&dims[i], &dims[i]) == 0 {
                used[i] = true;
                rank_one.push(i);
                continue;
            }
            let mut orbit = vec![i];
            used[i] = true;
            let mut at = i;
            loop {
                let next = (0..simples.len())
                    .find(|&j| j != at && q.euler_form(&dims[at], &dims[j]) == -1)
                    .ok_or_else(|| Error::Precondition("quasi-simple without a translate".into()))?;
                if next == i {
                    break;
                }
                if used[next] {
                    return Err(Error::Precondition("inconsistent tube structure".into()));
                }
                used[next] = true;
                orbit.push(next);
                at = next;
            }
            tubes.push(orbit);
        }
        let mut built: Vec<Tube> = tubes
            .into_iter()
            .map(|orbit| Tube {
                id: TubeRef::Exceptional(0),
                rank: orbit.len(),
                quasi_simples: orbit.iter().map(|&i| IsoClass::string(q, simples[i].clone())).collect(),
            })
            .collect();
        built.sort_by(|a, b| b.rank.cmp(&a.rank).then_with(|| a.quasi_simples[0].descriptor_cmp(&b.quasi_simples[0])));
        for (i, t) in built.iter_mut().enumerate() {
            t.id = TubeRef::Exceptional(i);
        }
        let band = crate::qkit::band_words(q).into_iter().next().ok_or(Error::NotCycleQuiver)?;
        let mut hom = vec![IsoClass::band(q, band, 1, rat(1))?];
        hom.extend(rank_one.into_iter().map(|i| IsoClass::string(q, simples[i].clone())));
        self.tubes = built;
        self.homogeneous = Tube { id: TubeRef::Homogeneous, rank: 1, quasi_simples: hom };
        Ok(())
    }

    /// `dim τM` from `dim M` (meaningful for non-projective indecomposables).
    pub fn coxeter(&self, d: &[i64]) -> Vec<i64> {
        // τ: d ↦ −E⁻¹ Eᵀ d
        let m = self.euler_inv.mul(&self.euler.transpose());
        apply(&m, d).into_iter().map(|x| -x).collect()
    }

    /// `dim τ⁻¹M` from `dim M`.
    pub fn coxeter_inv(&self, d: &[i64]) -> Vec<i64> {
        let m = self.euler_inv.transpose().mul(&self.euler);
        apply(&m, d).into_iter().map(|x| -x).collect()
    }

    fn path_counts(&self, from: Vertex, forward: bool) -> Vec<i64> {
        let q = &self.quiver;
        let k = q.vertex_count();
        let mut count = vec![0i64; k];
        count[from] = 1;
        // longest paths in an acyclic quiver have fewer than k arrows
        for _ in 0..k {
            let mut next = vec![0i64; k];
            next[from] = 1;
            for a in q.arrows() {
                let (s, t) = if forward { (a.source, a.target) } else { (a.target, a.source) };
                next[t] += count[s];
            }
            count = next;
        }
        count
    }

    pub fn projective_dim(&self, v: Vertex) -> DimVector {
        to_dim(&self.path_counts(v, true)).expect("path counts are nonnegative")
    }

    pub fn injective_dim(&self, v: Vertex) -> DimVector {
        to_dim(&self.path_counts(v, false)).expect("path counts are nonnegative")
    }

    /// Dimension vector of `τ^{-k}P(v)` or `τ^k I(v)`.
    pub fn orbit_dim(&self, kind: ArKind, idx: OrbitIndex) -> DimVector {
        let (mut d, step): (Vec<i64>, fn(&TameContext, &[i64]) -> Vec<i64>) = match kind {
            ArKind::Preprojective => {
                (self.projective_dim(idx.vertex).0.iter().map(|&x| x as i64).collect(), TameContext::coxeter_inv)
            }
            ArKind::Preinjective => {
                (self.injective_dim(idx.vertex).0.iter().map(|&x| x as i64).collect(), TameContext::coxeter)
            }
            ArKind::Regular => panic!("regular modules have no orbit index"),
        };
        for _ in 0..idx.index {
            d = step(self, &d);
        }
        to_dim(&d).expect("orbit dimension vectors are nonnegative")
    }

    fn find_orbit(&self, kind: ArKind, d: &DimVector) -> Option<OrbitIndex> {
        let k = self.quiver.vertex_count();
        let target: Vec<i64> = d.0.iter().map(|&x| x as i64).collect();
        let mut current: Vec<Vec<i64>> = (0..k)
            .map(|v| {
                let base = match kind {
                    ArKind::Preprojective => self.projective_dim(v),
                    _ => self.injective_dim(v),
                };
                base.0.iter().map(|&x| x as i64).collect()
            })
            .collect();
        let bound = 2 * d.total() + 2 * k + 2;
        for index in 0..=bound {
            for (v, dv) in current.iter().enumerate() {
                if dv == &target {
                    return Some(OrbitIndex { vertex: v, index });
                }
            }
            current = current
                .iter()
                .map(|dv| match kind {
                    ArKind::Preprojective => self.coxeter_inv(dv),
                    _ => self.coxeter(dv),
                })
                .collect();
        }
        None
    }

    /// Lengths of `E, τ⁻¹E, τ⁻²E, …` inside a tube, starting at quasi-simple `i`.
    fn upward_lengths(&self, tube: &Tube, i: usize) -> impl Iterator<Item = usize> + '_ {
        let r = tube.rank;
        let lens: Vec<usize> = tube.quasi_simples.iter().map(|x| x.length()).collect();
        (0..).map(move |k| lens[(i + r * k - k) % r])
    }

    pub fn classify(&self, m: &IsoClass) -> Result<ArClass> {
        let q = &self.quiver;
        let d = m.dim().clone();
        let defect = self.defect(&d);
        let mut class = ArClass {
            kind: ArKind::Regular,
            defect,
            dim: d.clone(),
            orbit: None,
            tube: None,
            quasi_socle: None,
            quasi_length: None,
        };
        if defect < 0 {
            class.kind = ArKind::Preprojective;
            class.orbit = Some(self.find_orbit(ArKind::Preprojective, &d).ok_or(Error::Decomposable)?);
            return Ok(class);
        }
        if defect > 0 {
            class.kind = ArKind::Preinjective;
            class.orbit = Some(self.find_orbit(ArKind::Preinjective, &d).ok_or(Error::Decomposable)?);
            return Ok(class);
        }
        if let Some(b) = m.as_band() {
            class.tube = Some(TubeRef::Homogeneous);
            class.quasi_socle = Some(0);
            class.quasi_length = Some(b.multiplicity);
            return Ok(class);
        }
        let s = m.as_string().expect("non-band descriptor is a string");
        for tube in self.tubes.iter().chain(std::iter::once(&self.homogeneous)) {
            for (i, e) in tube.quasi_simples.iter().enumerate() {
                let Some(es) = e.as_string() else {
                    continue;
                };
                if graph_map_basis(q, es, s).is_empty() {
                    continue;
                }
                let mut total = 0;
                let mut ql = 0;
                for len in self.upward_lengths(tube, i) {
                    total += len;
                    ql += 1;
                    if total >= m.length() {
                        break;
                    }
                }
                if total != m.length() {
                    return Err(Error::Decomposable);
                }
                class.tube = Some(tube.id);
                class.quasi_socle = Some(i);
                class.quasi_length = Some(ql);
                return Ok(class);
            }
        }
        Err(Error::Decomposable)
    }

    /// `X_i`: quasi-length `i` with quasi-socle `X`.
    pub fn quasi_chain(&self, x: &IsoClass, i: usize) -> Result<IsoClass> {
        let q = &self.quiver;
        if i == 0 {
            return Err(Error::Precondition("quasi-length starts at 1".into()));
        }
        let is_simple = self.tubes.iter().chain(std::iter::once(&self.homogeneous)).any(|t| {
            t.quasi_simples.iter().any(|e| e == x || (e.is_band() && x.as_band().is_some_and(|b| b.multiplicity == 1)))
        });
        if !is_simple {
            return Err(Error::NotQuasiSimple(x.label().to_string()));
        }
        if let Some(b) = x.as_band() {
            return IsoClass::band(q, b.band.clone(), i, b.lambda.clone());
        }
        let socle = x.as_string().expect("string quasi-simple");
        let mut current = socle.clone();
        for _ in 1..i {
            let next = irreducible_mono_extensions(q, &current)
                .into_iter()
                .find(|c| self.defect(&c.dim_vector(q)) == 0 && !graph_map_basis(q, socle, c).is_empty())
                .ok_or_else(|| Error::Precondition("tube chain ended unexpectedly".into()))?;
            current = next;
        }
        Ok(IsoClass::string(q, current))
    }

    /// `τ` on class descriptors.
    pub fn tau_class(&self, c: &ArClass) -> Result<ArClass> {
        let mut out = c.clone();
        match c.kind {
            ArKind::Preprojective => {
                let o = c.orbit.expect("preprojective classes carry an orbit index");
                if o.index == 0 {
                    return Err(Error::ProjectiveTranslate);
                }
                let idx = OrbitIndex { vertex: o.vertex, index: o.index - 1 };
                out.orbit = Some(idx);
                out.dim = self.orbit_dim(ArKind::Preprojective, idx);
            }
            ArKind::Preinjective => {
                let o = c.orbit.expect("preinjective classes carry an orbit index");
                let idx = OrbitIndex { vertex: o.vertex, index: o.index + 1 };
                out.orbit = Some(idx);
                out.dim = self.orbit_dim(ArKind::Preinjective, idx);
            }
            ArKind::Regular => {
                if let Some(TubeRef::Exceptional(t)) = c.tube {
                    let tube = &self.tubes[t];
                    let socle = (c.quasi_socle.expect("regular class has a quasi-socle") + 1) % tube.rank;
                    out.quasi_socle = Some(socle);
                    let ql = c.quasi_length.expect("regular class has a quasi-length");
                    let mut d = vec![0; self.quiver.vertex_count()];
                    for k in 0..ql {
                        let e = &tube.quasi_simples[(socle + tube.rank * ql - k) % tube.rank];
                        for (x, y) in d.iter_mut().zip(&e.dim().0) {
                            *x += y;
                        }
                    }
                    out.dim = DimVector(d);
                }
            }
        }
        Ok(out)
    }

    /// Quasi-simples `X` of a tube with `Hom(X, M) ≠ 0`.
    pub fn hom_quasi_simples(&self, tube: &Tube, m: &IsoClass) -> Vec<usize> {
        let q = &self.quiver;
        let rep = m.rep(q);
        tube.quasi_simples
            .iter()
            .enumerate()
            .filter(|(_, x)| match (x.as_string(), m.as_string()) {
                (Some(a), Some(b)) => !graph_map_basis(q, a, b).is_empty(),
                _ => !crate::homlin::hom_basis(q, &x.rep(q), &rep).is_zero(),
            })
            .map(|(i, _)| i)
            .collect()
    }
}

/// `∂(d) = ⟨δ, d⟩`; negative on preprojectives.
pub fn defect(q: &Quiver, d: &DimVector) -> Result<i64> {
    let delta = q.delta().ok_or(Error::NotCycleQuiver)?;
    Ok(q.euler_form(&delta, d))
}

pub fn classify(q: &Quiver, m: &IsoClass) -> Result<ArClass> {
    TameContext::new(q)?.classify(m)
}

pub fn tubes(q: &Quiver) -> Result<Vec<Tube>> {
    Ok(TameContext::new(q)?.tubes().to_vec())
}

pub fn quasi_chain(q: &Quiver, x: &IsoClass, i: usize) -> Result<IsoClass> {
    TameContext::new(q)?.quasi_chain(x, i)
}

pub fn tau_class(q: &Quiver, c: &ArClass) -> Result<ArClass> {
    TameContext::new(q)?.tau_class(c)
}
