#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use serde_json::Value;
use splitfield::extension::linear::{hyperplanes, Linearized};
use splitfield::extension::ExtensionSpec;
use splitfield::io::spec_from_json;
use splitfield::{FFElement, FieldCtx, Poly};

pub fn specs_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("specs")
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn read_json(path: &PathBuf) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

pub fn load_spec(name: &str) -> ExtensionSpec {
    spec_from_json(&read_json(&specs_dir().join(format!("{name}.json")))).unwrap()
}

/// Every bundled spec, by file stem, in name order.
pub fn bundled_specs() -> Vec<(String, ExtensionSpec)> {
    let mut names: Vec<String> = fs::read_dir(specs_dir())
        .unwrap()
        .filter_map(|e| {
            let p = e.unwrap().path();
            (p.extension()? == "json").then(|| p.file_stem().unwrap().to_string_lossy().into_owned())
        })
        .collect();
    names.sort();
    names.into_iter().map(|n| (n.clone(), load_spec(&n))).collect()
}

fn all_polys(k: &FieldCtx, max_deg: usize) -> impl Iterator<Item = Poly> + '_ {
    // g with zero constant term; the constant only shifts the right-hand side by a constant.
    let q = k.order();
    let total = q.pow(max_deg as u32);
    (1..total).map(move |mut code| {
        let mut c = vec![FFElement::ZERO];
        for _ in 0..max_deg {
            c.push(k.element_at(code % q).unwrap());
            code /= q;
        }
        Poly::from_coeffs(c)
    })
}

/// Number of candidate polynomials the direct search below will try.
pub fn direct_search_size(k: &FieldCtx, v_basis: &[FFElement], f: &Poly) -> u64 {
    let d = f.degree().unwrap_or(0) / k.p() as usize;
    let h = (k.p().pow(v_basis.len() as u32) - 1) / (k.p() - 1);
    k.order().saturating_pow(d as u32).saturating_mul(h)
}

/// Direct test of whether `L_V(T) = f(x)` fails to give a field extension
/// with the same constant field: searches every degree-`p` quotient
/// `w^p − c^(p−1)·w = f` for a polynomial `g` with `f − (g^p − c^(p−1)·g)`
/// constant.
pub fn directly_reducible(k: &FieldCtx, v_basis: &[FFElement], f: &Poly) -> bool {
    let d = f.degree().unwrap_or(0) / k.p() as usize;
    for (h, v) in hyperplanes(k, v_basis) {
        let lh = Linearized::from_root_basis(k, &h).unwrap();
        let c = lh.eval(k, v);
        let a = k.pow(c, k.p() - 1);
        if f.is_constant() {
            return true;
        }
        for g in all_polys(k, d) {
            let image = g.pow(k.p(), k).sub(&g.scale(a, k), k);
            if f.sub(&image, k).is_constant() {
                return true;
            }
        }
    }
    false
}

/// Rank of a list of vectors over the field.
pub fn rank(k: &FieldCtx, mut rows: Vec<Vec<FFElement>>) -> usize {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    for r in rows.iter_mut() {
        r.resize(width, FFElement::ZERO);
    }
    let mut rank = 0;
    for col in 0..width {
        let Some(sel) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(rank, sel);
        let inv = k.inv(rows[rank][col]).unwrap();
        let pivot: Vec<FFElement> = rows[rank].iter().map(|&x| k.mul(x, inv)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = k.sub(*x, k.mul(f, y));
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Sufficient test for `L_V(T) = f(x)` being a field extension of degree
/// `|V|`, checked over the quadratic extension of the constant field.
///
/// If a degree-`p` quotient had the form `w^p − a·w = g^p − a·g + c`, then
/// `f(α)` would lie in the image of `w ↦ w^p − a·w` for every `α` or for
/// none. Seeing both outcomes rules that out for the quotient.
pub fn solution_pattern_certifies(k: &FieldCtx, v_basis: &[FFElement], f: &Poly) -> bool {
    let big = FieldCtx::new(k.p(), k.m(), 2 * k.n()).unwrap();
    let modulus = k.modulus();
    let root = big
        .elements()
        .find(|&r| {
            let mut acc = FFElement::ZERO;
            for &c in modulus.iter().rev() {
                acc = big.add(big.mul(acc, r), big.from_int(c as i64));
            }
            acc.is_zero()
        })
        .unwrap();
    let embed = |a: FFElement| {
        let mut acc = FFElement::ZERO;
        for &c in k.coeffs(a).iter().rev() {
            acc = big.add(big.mul(acc, root), big.from_int(c as i64));
        }
        acc
    };
    let fe = Poly::from_coeffs(f.coeffs().iter().map(|&c| embed(c)).collect());
    let values: Vec<FFElement> = big.elements().map(|x| fe.eval(x, &big)).collect();
    hyperplanes(k, v_basis).into_iter().all(|(h, v)| {
        let lh = Linearized::from_root_basis(k, &h).unwrap();
        let a = embed(k.pow(lh.eval(k, v), k.p() - 1));
        let mut in_image = vec![false; big.order() as usize];
        for w in big.elements() {
            in_image[big.sub(big.pow(w, big.p()), big.mul(a, w)).index() as usize] = true;
        }
        let hits = values.iter().filter(|y| in_image[y.index() as usize]).count();
        hits > 0 && hits < values.len()
    })
}
