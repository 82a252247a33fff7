//! The chain of degree-`p` steps `y_i^p − B_i^(p−1)·y_i = y_(i−1)`, `y_0 = h/g`,
//! whose composite is the full trace equation, and the analysis of each
//! intermediate field `E^i = F(y_i)`.

use std::collections::BTreeSet;

use super::artin_schreier::analyze_root_space;
use super::linear::Linearized;
use super::{ExtensionKind, ExtensionReport, ExtensionSpec, Lhs, PlaceId, PlaceStatus};
use crate::error::{Error, Result};
use crate::field::{FFElement, FieldCtx};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerStep {
    /// 1-based step number `i`.
    pub index: usize,
    /// Index into the trace-zero basis of the generator `b_(r−i+1)` that seeds `B_i`.
    pub generator: usize,
    pub b: FFElement,
}

impl TowerStep {
    pub fn equation(&self, k: &FieldCtx) -> String {
        let p = k.p();
        let i = self.index;
        let rhs = if i == 1 { "h(x)/g(x)".to_string() } else { format!("y_{}", i - 1) };
        format!("y_{i}^{p} - ({})^{} * y_{i} = {rhs}", k.render(self.b), p - 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tower {
    /// The `F_p`-basis `b_1, …, b_r` of the trace-zero subspace actually used.
    pub basis: Vec<FFElement>,
    pub steps: Vec<TowerStep>,
}

impl Tower {
    /// `L_(B_1) ∘ … ∘ L_(B_i)`, so that `y_0 = M_i(y_i)`.
    pub fn prefix_map(&self, k: &FieldCtx, i: usize) -> Linearized {
        self.steps[..i].iter().fold(Linearized::identity(k), |acc, s| acc.compose(k, &Linearized::step(k, s.b)))
    }
}

/// Different of one step `E^i / E^(i−1)` above a place of `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepDifferent {
    pub step: usize,
    pub place: PlaceId,
    /// `degDiff` contribution of the step above the place, `d_i − p·d_(i−1)`.
    pub degree: Option<u64>,
    /// Different exponent of the step when the place is totally ramified up to `E^i`.
    pub exponent: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerAnalysis {
    pub tower: Tower,
    /// Report for `E^i / F`, `i = 1..=r`.
    pub prefixes: Vec<ExtensionReport>,
    pub step_differents: Vec<Vec<StepDifferent>>,
    /// `Σ_i p^(r−i)·degDiff(E^i/E^(i−1))`, by transitivity of the different.
    pub deg_different: Option<u64>,
}

fn steps_from_basis(k: &FieldCtx, basis: &[FFElement]) -> Option<Vec<TowerStep>> {
    let r = basis.len();
    // beta[j−1] holds β_(i,j); start from β_(r,j) = b_(r−j+1).
    let mut beta: Vec<FFElement> = (1..=r).map(|j| basis[r - j]).collect();
    let mut steps = Vec::with_capacity(r);
    for i in (1..=r).rev() {
        let b = beta[i - 1];
        if b.is_zero() {
            return None;
        }
        let step = Linearized::step(k, b);
        if !step.eval(k, b).is_zero() || step.root_space(k).dim() != 1 {
            return None;
        }
        steps.push(TowerStep { index: i, generator: r - i, b });
        for slot in beta.iter_mut().take(i - 1) {
            *slot = step.eval(k, *slot);
        }
    }
    steps.reverse();
    Some(steps)
}

pub fn build_tower(spec: &ExtensionSpec) -> Result<Tower> {
    if spec.kind != ExtensionKind::ArtinSchreier(Lhs::FullTrace) {
        return Err(Error::RequiresFullTrace);
    }
    let k = &spec.field;
    let target = Linearized::trace_form(k);
    let mut basis = Lhs::FullTrace.root_basis(k)?;
    for _ in 0..basis.len().max(1) {
        if let Some(steps) = steps_from_basis(k, &basis) {
            let tower = Tower { basis: basis.clone(), steps };
            if tower.prefix_map(k, tower.steps.len()) == target {
                return Ok(tower);
            }
        }
        basis.rotate_left(1);
    }
    Err(Error::DegenerateTower)
}

pub fn analyze_tower(spec: &ExtensionSpec, seed: u64) -> Result<TowerAnalysis> {
    let tower = build_tower(spec)?;
    let k = &spec.field;
    let p = k.p();
    let (h, g) = spec.normalized_rhs()?;
    let r = tower.steps.len();

    let mut prefixes = Vec::with_capacity(r);
    for i in 1..=r {
        let root = tower.prefix_map(k, i).root_space(k);
        prefixes.push(analyze_root_space(k, root.basis(), &h, &g, spec.qs_certified, seed)?);
    }

    let ramified_places = |rep: &ExtensionReport| -> BTreeSet<PlaceId> {
        rep.verdicts.iter().filter(|v| v.different_degree != Some(0)).map(|v| v.place.clone()).collect()
    };
    let mut step_differents = Vec::with_capacity(r);
    for i in 0..r {
        let cur = &prefixes[i];
        let prev = if i == 0 { None } else { Some(&prefixes[i - 1]) };
        let mut places = ramified_places(cur);
        if let Some(prev) = prev {
            places.extend(ramified_places(prev));
        }
        let row: Vec<StepDifferent> = places
            .into_iter()
            .map(|place| {
                let here = cur.verdict(&place);
                let before = prev.and_then(|pr| pr.verdict(&place));
                let d_here = here.and_then(|v| v.different_degree);
                let d_before = match before {
                    Some(v) => v.different_degree,
                    None => Some(0),
                };
                let degree = d_here.zip(d_before).map(|(a, b)| a - p * b);
                let exp_of = |s: Option<&PlaceStatus>| match s {
                    Some(PlaceStatus::TotallyRamified { different_exponent }) => Some(*different_exponent),
                    _ => None,
                };
                let exponent = match (exp_of(here.map(|v| &v.status)), before) {
                    (Some(a), None) => Some(a),
                    (Some(a), Some(b)) => exp_of(Some(&b.status)).map(|b| a - p * b),
                    _ => None,
                };
                StepDifferent { step: i + 1, place, degree, exponent }
            })
            .collect();
        step_differents.push(row);
    }

    let deg_different = step_differents.iter().enumerate().try_fold(0u64, |acc, (i, row)| {
        let step: Option<u64> = row.iter().map(|s| s.degree).sum();
        step.map(|s| acc + s * p.pow((r - 1 - i) as u32))
    });
    Ok(TowerAnalysis { tower, prefixes, step_differents, deg_different })
}
