//! Artin–Schreier-type and Kummer-type extensions `E = F(y)` of
//! `F = F_{q^n}(x)`: irreducibility, per-place splitting and ramification,
//! the different, genus and the number of rational places.

mod artin_schreier;
mod irreducibility;
mod kummer;
pub mod linear;
mod tower;

use serde::Serialize;

pub use artin_schreier::{analyze_artin_schreier, as_reduce_pole, AsReduction, Substitution};
pub use irreducibility::{
    coprime_degree_criterion, solve_linearized_preimage, subgroup_image_search, subgroup_image_test, CoprimeVerdict,
    ReducibleWitness, SubgroupVerdict, DIMENSION_CAP,
};
pub use kummer::analyze_kummer;
pub use tower::{analyze_tower, build_tower, StepDifferent, Tower, TowerAnalysis, TowerStep};

use crate::error::{Error, Result};
use crate::field::{FFElement, FieldCtx};
use crate::poly::Poly;
use crate::quasisym::in_vqs;
use linear::{Linearized, Subspace};

/// Left-hand side of an Artin–Schreier-type equation `l(y) = h/g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lhs {
    /// `y^(q^(n−1)) + … + y^q + y`.
    FullTrace,
    /// `y^p − B^(p−1)·y`.
    PStep(FFElement),
    /// `L_U(y)` for the `F_p`-span `U` of the given independent elements.
    RootSpace(Vec<FFElement>),
}

impl Lhs {
    /// An `F_p`-basis of the root set of `l`.
    pub fn root_basis(&self, k: &FieldCtx) -> Result<Vec<FFElement>> {
        match self {
            Lhs::FullTrace => Ok(Linearized::trace_form(k).root_space(k).basis().to_vec()),
            Lhs::PStep(b) => {
                k.check(*b)?;
                if b.is_zero() {
                    return Err(Error::Schema("p_step constant must be nonzero".into()));
                }
                Ok(vec![*b])
            }
            Lhs::RootSpace(basis) => {
                for &b in basis {
                    k.check(b)?;
                }
                if Subspace::span(k, basis).dim() != basis.len() {
                    return Err(Error::DependentBasis);
                }
                Ok(basis.clone())
            }
        }
    }

    pub fn linearized(&self, k: &FieldCtx) -> Result<Linearized> {
        match self {
            Lhs::FullTrace => Ok(Linearized::trace_form(k)),
            Lhs::PStep(b) => {
                self.root_basis(k)?;
                Ok(Linearized::step(k, *b))
            }
            Lhs::RootSpace(_) => Linearized::from_root_basis(k, &self.root_basis(k)?),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionKind {
    ArtinSchreier(Lhs),
    /// `y^d = h/g`.
    Kummer(u64),
}

/// `E = F(y)` with `l(y) = h(x)/g(x)` or `y^d = h(x)/g(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSpec {
    pub field: FieldCtx,
    pub kind: ExtensionKind,
    pub h: Poly,
    pub g: Poly,
    /// Claims `h, g ∈ V_qs`; checked, and unlocks the theorem-backed verdicts.
    pub qs_certified: bool,
}

impl ExtensionSpec {
    pub fn artin_schreier(field: FieldCtx, lhs: Lhs, h: Poly, g: Poly, qs_certified: bool) -> Self {
        ExtensionSpec { field, kind: ExtensionKind::ArtinSchreier(lhs), h, g, qs_certified }
    }

    pub fn kummer(field: FieldCtx, d: u64, h: Poly, g: Poly, qs_certified: bool) -> Self {
        ExtensionSpec { field, kind: ExtensionKind::Kummer(d), h, g, qs_certified }
    }

    /// Validates the right-hand side and returns it with `g` made monic.
    pub(crate) fn normalized_rhs(&self) -> Result<(Poly, Poly)> {
        let k = &self.field;
        for c in self.h.coeffs().iter().chain(self.g.coeffs()) {
            k.check(*c)?;
        }
        let lc = self.g.lead().ok_or(Error::DivisionByZero)?;
        if self.h.is_zero() {
            return Err(Error::Reducible("right-hand side is zero".into()));
        }
        if self.h.gcd(&self.g, k).degree() != Some(0) {
            return Err(Error::NotLowestTerms);
        }
        if self.qs_certified && !(in_vqs(&self.h, k) && in_vqs(&self.g, k)) {
            return Err(Error::NotInVqs);
        }
        let inv = k.inv(lc)?;
        Ok((self.h.scale(inv, k), self.g.scale(inv, k)))
    }

    pub fn analyze(&self, seed: u64) -> Result<ExtensionReport> {
        match &self.kind {
            ExtensionKind::ArtinSchreier(_) => analyze_artin_schreier(self, seed),
            ExtensionKind::Kummer(_) => analyze_kummer(self, seed),
        }
    }
}

/// A place of `F_{q^n}(x)`: a monic irreducible polynomial or infinity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlaceId {
    Infinity,
    Finite(Poly),
}

impl PlaceId {
    pub fn rational(k: &FieldCtx, alpha: FFElement) -> Self {
        PlaceId::Finite(Poly::from_coeffs(vec![k.neg(alpha), k.one()]))
    }

    pub fn degree(&self) -> usize {
        match self {
            PlaceId::Infinity => 1,
            PlaceId::Finite(f) => f.degree().unwrap_or(0),
        }
    }

    /// `α` for the place `x − α`.
    pub fn alpha(&self, k: &FieldCtx) -> Option<FFElement> {
        match self {
            PlaceId::Finite(f) if f.degree() == Some(1) => Some(k.neg(f.coeff(0))),
            _ => None,
        }
    }

    pub fn render(&self, k: &FieldCtx) -> String {
        match self {
            PlaceId::Infinity => "P_inf".into(),
            PlaceId::Finite(f) => format!("P[{}]", f.render(k, "x")),
        }
    }
}

/// Why a rational place was declared split (or not).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Justification {
    /// Guaranteed by quasi-symmetry of `h` and `g`, and confirmed numerically.
    Theorem,
    /// Decided by testing the residue against the image of the left-hand side.
    RootCount,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PlaceStatus {
    SplitsCompletely,
    UnramifiedNonsplit,
    TotallyRamified {
        different_exponent: u64,
    },
    /// Wild ramification with `e < [E:F]`.
    PartiallyRamified {
        e: u64,
        different_exponent: u64,
    },
    TameRamified {
        e: u64,
        different_exponent: u64,
    },
    Unresolved,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaceVerdict {
    pub place: PlaceId,
    pub valuation: i64,
    pub status: PlaceStatus,
    pub places_above_degree1: u64,
    /// Residue of the right-hand side at a rational place where it is finite.
    pub residue: Option<FFElement>,
    pub justification: Option<Justification>,
    /// `Σ_{P'|P} d(P'|P)·deg P'`; `None` when unresolved.
    pub different_degree: Option<u64>,
}

/// Exact rational number in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        let g = crate::arith::gcd(num, den).max(1);
        Ratio { num: num / g, den: den / g }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    pub kind: &'static str,
    pub field_order: u64,
    pub degree: u64,
    pub verdicts: Vec<PlaceVerdict>,
    pub deg_different: Option<u64>,
    pub genus: Option<u64>,
    pub n_rational: u64,
    pub ratio: Ratio,
    pub irreducibility: String,
}

impl ExtensionReport {
    pub(crate) fn assemble(
        kind: &'static str,
        k: &FieldCtx,
        degree: u64,
        mut verdicts: Vec<PlaceVerdict>,
        irreducibility: String,
    ) -> Result<Self> {
        sort_verdicts(k, &mut verdicts);
        let deg_different = verdicts.iter().map(|v| v.different_degree).try_fold(0u64, |acc, d| d.map(|d| acc + d));
        let genus = deg_different.map(|dd| riemann_hurwitz_genus(degree, dd)).transpose()?;
        let n_rational = verdicts.iter().filter(|v| v.place.degree() == 1).map(|v| v.places_above_degree1).sum();
        Ok(ExtensionReport {
            kind,
            field_order: k.order(),
            degree,
            verdicts,
            deg_different,
            genus,
            n_rational,
            ratio: Ratio::new(n_rational, degree),
            irreducibility,
        })
    }

    pub fn verdict(&self, place: &PlaceId) -> Option<&PlaceVerdict> {
        self.verdicts.iter().find(|v| &v.place == place)
    }
}

fn is_ramified(s: &PlaceStatus) -> bool {
    !matches!(s, PlaceStatus::SplitsCompletely | PlaceStatus::UnramifiedNonsplit)
}

/// Infinity first, then ramified finite places by (degree, coefficients),
/// then unramified rational places by `α`.
fn sort_verdicts(k: &FieldCtx, verdicts: &mut [PlaceVerdict]) {
    verdicts.sort_by_cached_key(|v| match &v.place {
        PlaceId::Infinity => (0u8, 0usize, Vec::new(), FFElement::ZERO),
        PlaceId::Finite(f) if is_ramified(&v.status) || f.degree() != Some(1) => {
            (1, f.degree().unwrap_or(0), f.coeffs().to_vec(), FFElement::ZERO)
        }
        PlaceId::Finite(f) => (2, 1, Vec::new(), k.neg(f.coeff(0))),
    });
}

/// `g_E` from `2g_E − 2 = −2·[E:F] + degDiff`.
pub fn riemann_hurwitz_genus(degree: u64, deg_different: u64) -> Result<u64> {
    let two_g_minus_two = deg_different as i64 - 2 * degree as i64;
    if two_g_minus_two < -2 || two_g_minus_two % 2 != 0 {
        return Err(Error::GenusInconsistent(two_g_minus_two));
    }
    Ok(((two_g_minus_two + 2) / 2) as u64)
}

/// Whether every rational place of `F` splits completely.
pub fn max_ratio_check(report: &ExtensionReport) -> bool {
    report.n_rational == report.degree * (report.field_order + 1)
}
