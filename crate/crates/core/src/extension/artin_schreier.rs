//! Place-by-place analysis of `L_U(y) = h(x)/g(x)` for an `F_p`-subspace
//! `U ⊂ F_{q^n}`.
//!
//! Poles of order prime to `p` are totally ramified with the classical
//! different exponent. At a pole of order divisible by `p` each degree-`p`
//! subextension `w^p − c^(p−1)·w = h/g` (one per hyperplane `H ⊂ U`, with
//! `c = L_H(v)` for `v ∉ H`) is reduced to a pole order prime to `p` by
//! substitutions, and its conductor feeds the conductor–discriminant formula.

use serde::Serialize;

use super::irreducibility::{coprime_degree_criterion, subgroup_image_test, CoprimeVerdict, SubgroupVerdict};
use super::linear::{hyperplanes, Linearized, Subspace};
use super::{ExtensionKind, ExtensionReport, ExtensionSpec, Justification, Lhs, PlaceId, PlaceStatus, PlaceVerdict};
use crate::error::{Error, Result};
use crate::field::{FFElement, FieldCtx};
use crate::poly::{factorize, Poly};

/// One substitution `w ← w − (c'^p·x^(pk) − B^(p−1)·c'·x^k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Substitution {
    pub k: usize,
    #[serde(skip)]
    pub coeff: FFElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsReduction {
    pub reduced: Poly,
    pub substitutions: Vec<Substitution>,
    /// Degree of the reduced polynomial if positive (then prime to `p`), else 0.
    pub pole_order: u64,
}

impl AsReduction {
    /// Constant term, which is the residue once the pole is gone.
    pub fn residue(&self) -> FFElement {
        self.reduced.coeff(0)
    }

    /// Whether the reduced right-hand side is a constant in the image of the
    /// step map on `F_{q^n}`, i.e. the step equation is trivial.
    pub fn is_trivial(&self, k: &FieldCtx, b: FFElement) -> bool {
        self.pole_order == 0 && Linearized::step(k, b).image(k).contains(k, self.residue())
    }
}

/// Removes leading terms of degree divisible by `p` from the polynomial `w`
/// for the step `T^p − B^(p−1)·T`.
pub fn as_reduce_pole(k: &FieldCtx, b: FFElement, w: &Poly) -> AsReduction {
    let p = k.p() as usize;
    let bp = k.pow(b, k.p() - 1);
    let mut w = w.clone();
    let mut substitutions = Vec::new();
    while let Some(d) = w.degree() {
        if d == 0 || d % p != 0 {
            break;
        }
        let c = w.lead().expect("nonzero");
        let root = k.pth_root(c);
        let kk = d / p;
        let sub = Poly::from_terms(k, &[(d, c), (kk, k.neg(k.mul(bp, root)))]);
        w = w.sub(&sub, k);
        substitutions.push(Substitution { k: kk, coeff: root });
    }
    let pole_order = w.degree().unwrap_or(0) as u64;
    AsReduction { reduced: w, substitutions, pole_order }
}

/// `z^(deg f)·f(α + 1/z)`.
fn reversed_at(k: &FieldCtx, f: &Poly, alpha: FFElement) -> Poly {
    let shifted = f.compose(&Poly::from_coeffs(vec![alpha, k.one()]), k);
    let mut c = shifted.coeffs().to_vec();
    c.reverse();
    Poly::from_coeffs(c)
}

/// Polynomial part of `h/g` in the local parameter at a rational pole, with
/// the pole placed at `z = ∞`.
pub(crate) fn principal_part(k: &FieldCtx, h: &Poly, g: &Poly, place: &PlaceId) -> Poly {
    match place {
        PlaceId::Infinity => h.divrem(g, k).expect("g nonzero").0,
        PlaceId::Finite(pi) => {
            let alpha = k.neg(pi.coeff(0));
            let (dh, dg) = (h.degree().unwrap_or(0), g.degree().unwrap_or(0));
            let num = reversed_at(k, h, alpha).shift(dg.saturating_sub(dh));
            let den = reversed_at(k, g, alpha).shift(dh.saturating_sub(dg));
            num.divrem(&den, k).expect("den nonzero").0
        }
    }
}

struct HyperplaneStep {
    c: FFElement,
}

struct PoleOutcome {
    verdict: PlaceVerdict,
    /// Per hyperplane: whether the subextension ramifies here. `None` if unresolved.
    ramified: Option<Vec<bool>>,
}

fn analyze_pole(
    k: &FieldCtx,
    h: &Poly,
    g: &Poly,
    place: PlaceId,
    m: u64,
    order: u64,
    steps: &[HyperplaneStep],
) -> PoleOutcome {
    let p = k.p();
    let deg = place.degree() as u64;
    let rational = deg == 1;
    let base = PlaceVerdict {
        place: place.clone(),
        valuation: -(m as i64),
        status: PlaceStatus::Unresolved,
        places_above_degree1: 0,
        residue: None,
        justification: None,
        different_degree: None,
    };
    if !m.is_multiple_of(p) {
        let d = (order - 1) * (m + 1);
        return PoleOutcome {
            verdict: PlaceVerdict {
                status: PlaceStatus::TotallyRamified { different_exponent: d },
                places_above_degree1: u64::from(rational),
                different_degree: Some(deg * d),
                ..base
            },
            ramified: Some(vec![true; steps.len()]),
        };
    }
    if !rational {
        return PoleOutcome { verdict: base, ramified: None };
    }
    let w = principal_part(k, h, g, &place);
    let mut total = 0u64;
    let mut unramified = 0u64;
    let mut all_split = true;
    let mut flags = Vec::with_capacity(steps.len());
    for s in steps {
        let red = as_reduce_pole(k, s.c, &w);
        if red.pole_order > 0 {
            total += (p - 1) * (red.pole_order + 1);
            flags.push(true);
        } else {
            unramified += 1;
            all_split &= Linearized::step(k, s.c).image(k).contains(k, red.residue());
            flags.push(false);
        }
    }
    let verdict = if unramified == 0 {
        PlaceVerdict {
            status: PlaceStatus::TotallyRamified { different_exponent: total },
            places_above_degree1: 1,
            different_degree: Some(total),
            ..base
        }
    } else {
        // p^(r − log_p e) = 1 + (p − 1)·#unramified
        let count = 1 + (p - 1) * unramified;
        let e = order / count;
        PlaceVerdict {
            status: PlaceStatus::PartiallyRamified { e, different_exponent: total / count },
            places_above_degree1: if all_split { count } else { 0 },
            different_degree: Some(total),
            ..base
        }
    };
    PoleOutcome { verdict, ramified: Some(flags) }
}

pub(crate) fn analyze_root_space(
    k: &FieldCtx,
    basis: &[FFElement],
    h: &Poly,
    g: &Poly,
    theorem_applies: bool,
    seed: u64,
) -> Result<ExtensionReport> {
    let p = k.p();
    let r = basis.len();
    let order = p.pow(r as u32);
    let l = Linearized::from_root_basis(k, basis)?;
    let img: Subspace = l.image(k);

    let mut poles: Vec<(PlaceId, u64)> = Vec::new();
    let (dh, dg) = (h.degree().unwrap_or(0), g.degree().unwrap_or(0));
    if dh > dg {
        poles.push((PlaceId::Infinity, (dh - dg) as u64));
    }
    if dg > 0 {
        for (pi, e) in factorize(g, k, seed)?.factors {
            poles.push((PlaceId::Finite(pi), u64::from(e)));
        }
    }

    let wild = poles.iter().any(|(_, m)| m % p == 0);
    let steps: Vec<HyperplaneStep> = if wild {
        if r > super::DIMENSION_CAP {
            return Err(Error::DimensionGuard { dim: r, cap: super::DIMENSION_CAP });
        }
        hyperplanes(k, basis)
            .into_iter()
            .map(|(hb, v)| {
                let lh = Linearized::from_root_basis(k, &hb)?;
                Ok(HyperplaneStep { c: lh.eval(k, v) })
            })
            .collect::<Result<_>>()?
    } else {
        Vec::new()
    };

    let mut verdicts = Vec::new();
    let mut coverage: Vec<bool> = vec![false; steps.len()];
    let mut unresolved = false;
    let mut coprime_pole: Option<String> = None;
    for (place, m) in &poles {
        if m % p != 0 && coprime_pole.is_none() {
            coprime_pole = Some(format!("pole of order {m} prime to p at {}", place.render(k)));
        }
        let out = analyze_pole(k, h, g, place.clone(), *m, order, &steps);
        match &out.ramified {
            Some(flags) => {
                for (c, &f) in coverage.iter_mut().zip(flags) {
                    *c |= f;
                }
            }
            None => unresolved = true,
        }
        verdicts.push(out.verdict);
    }

    let irreducibility = if let Some(reason) = coprime_pole {
        reason
    } else if dg == 0 {
        polynomial_certificate(k, basis, h)?
    } else if coverage.iter().all(|&c| c) {
        "every degree-p subextension ramifies at a pole".to_string()
    } else if unresolved {
        return Err(Error::NotCertified);
    } else {
        return Err(Error::Reducible(
            "a degree-p subextension is unramified at every place (trivial or constant-field extension)".into(),
        ));
    };

    let rational_verdict = |place: PlaceId, valuation: i64, c: FFElement| {
        let splits = img.contains(k, c);
        PlaceVerdict {
            place,
            valuation,
            status: if splits { PlaceStatus::SplitsCompletely } else { PlaceStatus::UnramifiedNonsplit },
            places_above_degree1: if splits { order } else { 0 },
            residue: Some(c),
            justification: Some(if theorem_applies && splits {
                Justification::Theorem
            } else {
                Justification::RootCount
            }),
            different_degree: Some(0),
        }
    };
    if dh <= dg {
        let c = if dh < dg { FFElement::ZERO } else { h.lead().expect("nonzero") };
        verdicts.push(rational_verdict(PlaceId::Infinity, (dg - dh) as i64, c));
    }
    for alpha in k.elements() {
        let ga = g.eval(alpha, k);
        if ga.is_zero() {
            continue;
        }
        let ha = h.eval(alpha, k);
        let v = if ha.is_zero() { h.multiplicity(&Poly::from_coeffs(vec![k.neg(alpha), k.one()]), k) } else { 0 };
        verdicts.push(rational_verdict(PlaceId::rational(k, alpha), i64::from(v), k.div(ha, ga)?));
    }

    ExtensionReport::assemble("artin_schreier", k, order, verdicts, irreducibility)
}

fn polynomial_certificate(k: &FieldCtx, basis: &[FFElement], f: &Poly) -> Result<String> {
    if let CoprimeVerdict::IrreducibleCertified { coprime_degree } = coprime_degree_criterion(k, f) {
        return Ok(format!("coprime-degree criterion (term of degree {coprime_degree})"));
    }
    match subgroup_image_test(k, basis, f)? {
        SubgroupVerdict::IrreducibleCertified => Ok("subgroup image test".into()),
        SubgroupVerdict::ReducibleWitness(w) if !w.constant_in_field => Err(Error::ConstantFieldExtension(k.p())),
        SubgroupVerdict::ReducibleWitness(w) => Err(Error::Reducible(format!(
            "right-hand side is L_W'(g) for g = {} with dim W = {}",
            w.g.render(k, "x"),
            w.w.len()
        ))),
    }
}

pub fn analyze_artin_schreier(spec: &ExtensionSpec, seed: u64) -> Result<ExtensionReport> {
    let ExtensionKind::ArtinSchreier(lhs) = &spec.kind else {
        return Err(Error::Schema("expected an artin_schreier spec".into()));
    };
    let k = &spec.field;
    let (h, g) = spec.normalized_rhs()?;
    let basis = lhs.root_basis(k)?;
    let theorem = spec.qs_certified && *lhs == Lhs::FullTrace;
    analyze_root_space(k, &basis, &h, &g, theorem, seed)
}
