//! Duality data of a Frobenius pair: `α = φ∘η`, `β = ε∘ψ`, the zigzag
//! identities, the hom-set transports `λ`, `ρ` and their inverses, and the
//! comparison `Y → Hom(X, I)`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::frobenius::{comp, compare, id, AxiomReport, CheckId, CheckResult, FrobeniusPairData};
use crate::gvect::{EntryDiff, GradedObj, Mor};
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityData {
    /// `α: I → Y⊗X`
    pub alpha: Mor,
    /// `β: X⊗Y → I`
    pub beta: Mor,
}

pub fn duality_data(pair: &FrobeniusPairData) -> Result<DualityData> {
    pair.validate_shapes()?;
    Ok(DualityData {
        alpha: comp(&[&pair.phi, &pair.eta]),
        beta: comp(&[&pair.eps, &pair.psi]),
    })
}

/// `(β⊗X)∘(X⊗α) = X` and `(Y⊗β)∘(α⊗Y) = Y`.
pub fn check_zigzag(pair: &FrobeniusPairData) -> Result<AxiomReport> {
    let DualityData { alpha, beta } = duality_data(pair)?;
    let (idx, idy) = (id(&pair.x), id(&pair.y));
    let zx = comp(&[&beta.tensor(&idx), &idx.tensor(&alpha)]);
    let zy = comp(&[&idy.tensor(&beta), &alpha.tensor(&idy)]);
    Ok(AxiomReport {
        results: vec![
            compare(CheckId::ZigzagX, &zx, &idx),
            compare(CheckId::ZigzagY, &zy, &idy),
        ],
    })
}

fn expect_type(what: &str, f: &Mor, dom: &GradedObj, cod: &GradedObj) -> Result<()> {
    if f.dom() != dom || f.cod() != cod {
        return Err(Error::shape(
            format!("{what} has type {} -> {}", f.dom(), f.cod()),
            format!("expected {dom} -> {cod}"),
        ));
    }
    Ok(())
}

/// `λ: Hom(X⊗U, V) → Hom(U, Y⊗V)`, `λ(f) = (Y⊗f)∘(α⊗U)`.
pub fn lambda_transport(
    pair: &FrobeniusPairData,
    u: &GradedObj,
    v: &GradedObj,
    f: &Mor,
) -> Result<Mor> {
    let DualityData { alpha, .. } = duality_data(pair)?;
    expect_type("f", f, &pair.x.tensor(u), v)?;
    Ok(comp(&[&id(&pair.y).tensor(f), &alpha.tensor(&id(u))]))
}

/// `λ⁻¹(g) = (β⊗V)∘(X⊗g)` for `g: U → Y⊗V`.
pub fn lambda_inverse(
    pair: &FrobeniusPairData,
    u: &GradedObj,
    v: &GradedObj,
    g: &Mor,
) -> Result<Mor> {
    let DualityData { beta, .. } = duality_data(pair)?;
    expect_type("g", g, u, &pair.y.tensor(v))?;
    Ok(comp(&[&beta.tensor(&id(v)), &id(&pair.x).tensor(g)]))
}

/// `ρ: Hom(U⊗Y, V) → Hom(U, V⊗X)`, `ρ(f) = (f⊗X)∘(U⊗α)`.
pub fn rho_transport(
    pair: &FrobeniusPairData,
    u: &GradedObj,
    v: &GradedObj,
    f: &Mor,
) -> Result<Mor> {
    let DualityData { alpha, .. } = duality_data(pair)?;
    expect_type("f", f, &u.tensor(&pair.y), v)?;
    Ok(comp(&[&f.tensor(&id(&pair.x)), &id(u).tensor(&alpha)]))
}

/// `ρ⁻¹(g) = (V⊗β)∘(g⊗Y)` for `g: U → V⊗X`.
pub fn rho_inverse(pair: &FrobeniusPairData, u: &GradedObj, v: &GradedObj, g: &Mor) -> Result<Mor> {
    let DualityData { beta, .. } = duality_data(pair)?;
    expect_type("g", g, u, &v.tensor(&pair.x))?;
    Ok(comp(&[&id(v).tensor(&beta), &g.tensor(&id(&pair.y))]))
}

/// `λ(μ) = φ`, `ρ(ψ) = φ`, `λ(ψ) = δ` and `ρ(ε) = η`.
pub fn check_correspondences(pair: &FrobeniusPairData) -> Result<AxiomReport> {
    pair.validate_shapes()?;
    let (x, y, i) = (&pair.x, &pair.y, pair.unit());
    Ok(AxiomReport {
        results: vec![
            compare(
                CheckId::CorLambdaMu,
                &lambda_transport(pair, x, x, &pair.mu)?,
                &pair.phi,
            ),
            compare(
                CheckId::CorRhoPsi,
                &rho_transport(pair, x, y, &pair.psi)?,
                &pair.phi,
            ),
            compare(
                CheckId::CorLambdaPsi,
                &lambda_transport(pair, y, y, &pair.psi)?,
                &pair.delta,
            ),
            compare(
                CheckId::CorRhoEps,
                &rho_transport(pair, &i, &i, &pair.eps)?,
                &pair.eta,
            ),
        ],
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualComparison {
    /// `Y → X*`, sending `y` to `x ↦ β(x⊗y)`.
    pub map: Mor,
    /// Present iff the comparison is not invertible; see [`dual_comparison`].
    pub witness: Option<EntryDiff>,
}

impl DualComparison {
    pub fn is_invertible(&self) -> bool {
        self.witness.is_none()
    }

    pub fn check_result(&self) -> CheckResult {
        CheckResult {
            id: CheckId::DualComparison,
            witness: self.witness.clone(),
        }
    }
}

/// The comparison map `Y → Hom(X, I) = X*` adjoint to `β`, with its
/// invertibility verdict.
///
/// In degree `d` the block has rows indexed by the degree-`(-d)` basis of
/// `X` and columns by the degree-`d` basis of `Y`; entry `(a, k)` is
/// `β(e_a ⊗ f_k)`. When the block at degree `d` is singular (or not
/// square), the witness is `deg=d`, `row=col=r` with `r` its rank: the
/// first diagonal position of the reduced echelon form holding `0`
/// (reported as `lhs`) instead of `1` (reported as `rhs`).
pub fn dual_comparison(pair: &FrobeniusPairData) -> Result<DualComparison> {
    let DualityData { beta, .. } = duality_data(pair)?;
    let (x, y) = (&pair.x, &pair.y);
    let field = pair.field();
    let xdual = x.dual();
    let xy = x.tensor(y);
    let ny = y.total_dim();
    let beta0 = beta.dense_block(0);

    let mut blocks = BTreeMap::new();
    for (&d, &cols) in y.dims() {
        let rows = x.dim(-d);
        if rows == 0 {
            continue;
        }
        let mut block = Matrix::zeros(field, rows, cols);
        for a in 0..rows {
            let ga = x.global_index(-d, a);
            for k in 0..cols {
                let gk = y.global_index(d, k);
                let col = xy.local_index(ga * ny + gk);
                block.set(a, k, beta0.get(0, col).clone());
            }
        }
        blocks.insert(d, block);
    }
    let map = Mor::new(y.clone(), xdual.clone(), blocks)?;

    let degrees: BTreeSet<i32> = y
        .dims()
        .keys()
        .chain(xdual.dims().keys())
        .copied()
        .collect();
    let witness = degrees.into_iter().find_map(|d| {
        let block = map.dense_block(d);
        if block.inverse().is_some() {
            return None;
        }
        let r = block.rank();
        Some(EntryDiff {
            degree: d,
            row: r,
            col: r,
            lhs: field.zero(),
            rhs: field.one(),
        })
    });
    Ok(DualComparison { map, witness })
}

/// Zigzags, correspondences and the dual comparison.
pub fn check_duality(pair: &FrobeniusPairData) -> Result<AxiomReport> {
    let mut report = check_zigzag(pair)?;
    report.extend(check_correspondences(pair)?);
    report.results.push(dual_comparison(pair)?.check_result());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn trivial() -> FrobeniusPairData {
        let i = GradedObj::unit(Q);
        let one = Mor::identity(&i);
        FrobeniusPairData::from_frobenius_object(i, one.clone(), one.clone(), one.clone(), one)
            .unwrap()
    }

    fn scalar(c: i64) -> Mor {
        let i = GradedObj::unit(Q);
        Mor::from_fn(i.clone(), i, |_, _, _| Q.from_i64(c))
    }

    #[test]
    fn trivial_duality() {
        let p = trivial();
        let data = duality_data(&p).unwrap();
        assert_eq!(data.alpha.block(0).unwrap(), &Matrix::from_i64(Q, &[&[1]]));
        assert_eq!(data.beta.block(0).unwrap(), &Matrix::from_i64(Q, &[&[1]]));
        assert!(check_zigzag(&p).unwrap().all_pass());
        assert!(check_correspondences(&p).unwrap().all_pass());
        let cmp = dual_comparison(&p).unwrap();
        assert!(cmp.is_invertible());
        assert_eq!(cmp.map.block(0).unwrap(), &Matrix::from_i64(Q, &[&[1]]));
    }

    #[test]
    fn trivial_transports_are_identity_on_scalars() {
        let p = trivial();
        let i = p.unit();
        for c in [-3, 0, 7] {
            let f = scalar(c);
            assert_eq!(lambda_transport(&p, &i, &i, &f).unwrap(), f);
            assert_eq!(lambda_inverse(&p, &i, &i, &f).unwrap(), f);
            assert_eq!(rho_transport(&p, &i, &i, &f).unwrap(), f);
            assert_eq!(rho_inverse(&p, &i, &i, &f).unwrap(), f);
        }
    }

    #[test]
    fn zero_pairing_is_singular() {
        let p = trivial();
        let p = p
            .mutate(crate::frobenius::StructureMap::Eps, 0, 0, 0, Q.zero())
            .unwrap();
        let cmp = dual_comparison(&p).unwrap();
        let w = cmp.witness.unwrap();
        assert_eq!((w.degree, w.row, w.col), (0, 0, 0));
    }

    #[test]
    fn transport_rejects_wrong_type() {
        let p = trivial();
        let two = GradedObj::new(Q, [(0, 2)]);
        let f = Mor::identity(&two);
        let i = p.unit();
        assert!(lambda_transport(&p, &i, &i, &f).is_err());
    }
}
