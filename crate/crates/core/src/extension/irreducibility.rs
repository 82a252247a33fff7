//! Irreducibility tests for `L_V(T) − f(x)` with `f` a polynomial.

use serde::Serialize;

use super::linear::{hyperplanes, preimage, subspaces_of_dim, Linearized, Subspace};
use crate::arith::{gaussian_binomial, gcd};
use crate::error::{Error, Result};
use crate::field::{FFElement, FieldCtx};
use crate::poly::Poly;

/// Largest `F_p`-dimension of `V` the subgroup search accepts.
pub const DIMENSION_CAP: usize = 12;
/// Above this many proper subspaces only hyperplanes are searched.
pub const SUBSPACE_BUDGET: u128 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CoprimeVerdict {
    IrreducibleCertified { coprime_degree: usize },
    Inconclusive,
}

/// Looks for a coprime term of degree `d` such that no term of degree
/// `d·p^i` (`i > 0`) occurs; picks the largest such `d`.
pub fn coprime_degree_criterion(k: &FieldCtx, f: &Poly) -> CoprimeVerdict {
    let p = k.p() as usize;
    let Some(deg) = f.degree() else { return CoprimeVerdict::Inconclusive };
    for d in (1..=deg).rev() {
        if d % p == 0 || f.coeff(d).is_zero() {
            continue;
        }
        let mut e = d * p;
        let mut clean = true;
        while e <= deg {
            if !f.coeff(e).is_zero() {
                clean = false;
                break;
            }
            e *= p;
        }
        if clean {
            return CoprimeVerdict::IrreducibleCertified { coprime_degree: d };
        }
    }
    CoprimeVerdict::Inconclusive
}

/// `f = L_{W'}(g)` with `W' = L_W(V)` for a proper subspace `W ⊂ V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducibleWitness {
    pub w: Vec<FFElement>,
    pub w_image: Vec<FFElement>,
    pub g: Poly,
    /// Whether the constant term of `g` lies in `F_{q^n}`; otherwise it exists
    /// only over the algebraic closure and `g` carries constant term 0.
    pub constant_in_field: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupVerdict {
    IrreducibleCertified,
    ReducibleWitness(ReducibleWitness),
}

/// Solves `l(g) = f` for `g ∈ K[x]`, with `l` monic. The non-constant part of
/// `g` is forced coefficient by coefficient along each chain `c·p^s`; the
/// constant term is solvable over the algebraic closure, and the flag reports
/// whether a solution exists in `K`.
pub fn solve_linearized_preimage(k: &FieldCtx, l: &Linearized, f: &Poly) -> Option<(Poly, bool)> {
    let p = k.p() as usize;
    let e = l.p_degree();
    let pe = p.pow(e as u32);
    let deg_f = f.degree().unwrap_or(0);
    let deg_g = deg_f / pe;
    let mut g = vec![FFElement::ZERO; deg_g + 1];
    for c in (1..=deg_g).filter(|c| c % p != 0) {
        let mut chain = vec![c];
        while chain.last().unwrap() * p <= deg_g {
            chain.push(chain.last().unwrap() * p);
        }
        for s in (0..chain.len()).rev() {
            // equation at degree c·p^(s+e): Σ_j a_j g_{c p^(s+e−j)}^(p^j)
            let mut val = f.coeff(chain[s] * pe);
            for j in 0..e {
                let idx = chain[s] * p.pow((e - j) as u32);
                let gi = g.get(idx).copied().unwrap_or(FFElement::ZERO);
                let term = k.mul(l.coeffs[j], k.pow(gi, k.p().pow(j as u32)));
                val = k.sub(val, term);
            }
            g[chain[s]] = k.pth_power_root(val, e as u32);
        }
    }
    let g_nc = Poly::from_coeffs(g);
    let image = l.apply(k, &g_nc);
    let nonconstant_ok = (1..=deg_f.max(image.degree().unwrap_or(0))).all(|i| image.coeff(i) == f.coeff(i));
    if !nonconstant_ok {
        return None;
    }
    match preimage(k, |x| l.eval(k, x), f.coeff(0)) {
        Some(c0) => Some((g_nc.add(&Poly::constant(c0), k), true)),
        None => Some((g_nc, false)),
    }
}

fn check_dimension(v: &[FFElement]) -> Result<()> {
    if v.len() > DIMENSION_CAP {
        return Err(Error::DimensionGuard { dim: v.len(), cap: DIMENSION_CAP });
    }
    Ok(())
}

fn try_subspace(k: &FieldCtx, v_basis: &[FFElement], w: &[FFElement], f: &Poly) -> Result<Option<ReducibleWitness>> {
    let lw = Linearized::from_root_basis(k, w)?;
    let images: Vec<FFElement> = v_basis.iter().map(|&b| lw.eval(k, b)).collect();
    let w_image = Subspace::span(k, &images);
    let l = Linearized::from_root_basis(k, w_image.basis())?;
    Ok(solve_linearized_preimage(k, &l, f).map(|(g, constant_in_field)| ReducibleWitness {
        w: w.to_vec(),
        w_image: w_image.basis().to_vec(),
        g,
        constant_in_field,
    }))
}

/// Exhaustive search for a reducibility witness over proper subspaces `W` of
/// the root space `V` (given by an independent basis). All proper subspaces
/// are tried when there are few of them; otherwise hyperplanes only, which
/// suffices since a witness for `W` yields one for any proper `W₁ ⊇ W`.
pub fn subgroup_image_search(k: &FieldCtx, v_basis: &[FFElement], f: &Poly) -> Result<SubgroupVerdict> {
    check_dimension(v_basis)?;
    let r = v_basis.len() as u32;
    let total: u128 = (0..r).map(|s| gaussian_binomial(r, s, k.p())).sum();
    if total <= SUBSPACE_BUDGET {
        for s in 0..v_basis.len() {
            for w in subspaces_of_dim(k, v_basis, s) {
                if let Some(wit) = try_subspace(k, v_basis, &w, f)? {
                    return Ok(SubgroupVerdict::ReducibleWitness(wit));
                }
            }
        }
    } else {
        for (h, _) in hyperplanes(k, v_basis) {
            if let Some(wit) = try_subspace(k, v_basis, &h, f)? {
                return Ok(SubgroupVerdict::ReducibleWitness(wit));
            }
        }
    }
    Ok(SubgroupVerdict::IrreducibleCertified)
}

/// Like `subgroup_image_search`, short-circuiting to a certificate when the
/// coprime-degree criterion already applies or the exponents of `f` have gcd
/// coprime to `p`.
pub fn subgroup_image_test(k: &FieldCtx, v_basis: &[FFElement], f: &Poly) -> Result<SubgroupVerdict> {
    check_dimension(v_basis)?;
    let exps = f.support().filter(|&e| e > 0).fold(0u64, |acc, e| gcd(acc, e as u64));
    if exps != 0 && exps % k.p() != 0 {
        if let CoprimeVerdict::IrreducibleCertified { .. } = coprime_degree_criterion(k, f) {
            return Ok(SubgroupVerdict::IrreducibleCertified);
        }
    }
    subgroup_image_search(k, v_basis, f)
}
