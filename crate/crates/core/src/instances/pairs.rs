//! Pair constructors and transformers.

use crate::error::{Error, Result};
use crate::frobenius::{comp, id, FrobeniusPairData};
use crate::gvect::{GradedObj, Mor};
use crate::matrix::Matrix;
use crate::scalar::{FieldSpec, Scalar};

use super::algebra::{AlgebraPresentation, TraceFunctional};

/// `X = Y = I`, every structure map the identity.
pub fn trivial_pair(field: FieldSpec) -> FrobeniusPairData {
    let i = GradedObj::unit(field);
    let one = Mor::identity(&i);
    FrobeniusPairData::from_frobenius_object(i, one.clone(), one.clone(), one.clone(), one)
        .expect("identity maps of I are well typed")
}

/// Refuses to hand out a pair that fails a left axiom.
fn verified(pair: FrobeniusPairData, what: &str) -> Result<FrobeniusPairData> {
    let report = pair.check_left_frobenius()?;
    if let Some(f) = report.failures().next() {
        return Err(Error::InvalidArgument(format!(
            "{what}: constructed pair fails {}",
            f.id
        )));
    }
    Ok(pair)
}

/// An ungraded algebra object `{0: n}` with its unit and multiplication.
fn monoid_on(alg: &AlgebraPresentation, x: &GradedObj, pos: &[usize]) -> (Mor, Mor) {
    let n = alg.dim();
    let field = alg.field();
    let xx = x.tensor(x);
    let nx = x.total_dim();
    let mut at = vec![0; nx];
    for (i, &p) in pos.iter().enumerate() {
        at[p] = i;
    }
    let eta = Mor::from_global(GradedObj::unit(field), x.clone(), |r, _| {
        alg.unit()[at[r]].clone()
    });
    let mu = Mor::from_global(xx, x.clone(), |r, c| {
        let (i, j) = (at[c / nx], at[c % nx]);
        alg.product(i, j)[at[r]].clone()
    });
    debug_assert_eq!(n, nx);
    (eta, mu)
}

/// Gram matrix `g_ij = t(e_i e_j)`.
fn gram(alg: &AlgebraPresentation, t: &TraceFunctional) -> Matrix {
    let n = alg.dim();
    let mut g = Matrix::zeros(alg.field(), n, n);
    for i in 0..n {
        for j in 0..n {
            g.set(i, j, t.apply(alg.product(i, j)));
        }
    }
    g
}

fn degenerate(g: &Matrix) -> Error {
    let kernel = g
        .kernel_vector()
        .expect("singular square matrix has a kernel")
        .iter()
        .map(Scalar::to_string)
        .collect();
    Error::DegeneratePairing { kernel }
}

/// The Frobenius object `(A, η, μ, t, δ)` with
/// `δ(a) = Σ (g⁻¹)_ij (a·e_i) ⊗ e_j`. Any grading of `A` is forgotten.
pub fn frobenius_object_from_trace(
    alg: &AlgebraPresentation,
    t: &TraceFunctional,
) -> Result<FrobeniusPairData> {
    let n = alg.dim();
    let field = alg.field();
    if t.0.len() != n {
        return Err(Error::InvalidArgument(format!(
            "trace has {} coefficients for a {n}-dimensional algebra",
            t.0.len()
        )));
    }
    let g = gram(alg, t);
    let ginv = g.inverse().ok_or_else(|| degenerate(&g))?;

    let x = GradedObj::new(field, [(0, n)]);
    let pos: Vec<usize> = (0..n).collect();
    let (eta, mu) = monoid_on(alg, &x, &pos);
    let eps = Mor::from_global(x.clone(), GradedObj::unit(field), |_, c| t.0[c].clone());
    // column a of δ: Σ_ij ginv_ij (a·e_i) ⊗ e_j
    let mut delta_cols = vec![vec![field.zero(); n * n]; n];
    for (a, col) in delta_cols.iter_mut().enumerate() {
        for i in 0..n {
            let ae = alg.product(a, i);
            for j in 0..n {
                let w = ginv.get(i, j);
                if w.is_zero() {
                    continue;
                }
                for (k, c) in ae.iter().enumerate() {
                    col[k * n + j].add_product(w, c);
                }
            }
        }
    }
    let delta = Mor::from_global(x.clone(), x.tensor(&x), |r, c| delta_cols[c][r].clone());
    let pair = FrobeniusPairData::from_frobenius_object(x, eta, mu, eps, delta)?;
    verified(pair, "frobenius object")
}

/// `(X, X*)` from a monoid on `X` and the evaluation duality
/// `β(e_a ⊗ e_k*) = δ_ak`, `α = Σ e_i* ⊗ e_i`:
/// `φ = (Y⊗μ)∘(α⊗X)`, `ψ = (Y⊗β)∘(φ⊗Y)`, `δ = (Y⊗ψ)∘(α⊗Y)`, `ε = β∘(η⊗Y)`.
fn evaluation_pair(x: GradedObj, eta: Mor, mu: Mor) -> FrobeniusPairData {
    let field = x.field();
    let y = x.dual();
    let i = GradedObj::unit(field);
    let (nx, ny) = (x.total_dim(), y.total_dim());
    let degs = x.basis_degrees().to_vec();
    let dual_of: Vec<usize> = (0..nx)
        .map(|a| y.global_index(-degs[a], x.local_index(a)))
        .collect();
    let beta = Mor::from_global(x.tensor(&y), i.clone(), |_, c| {
        field.from_i64((dual_of[c / ny] == c % ny) as i64)
    });
    let alpha = Mor::from_global(i, y.tensor(&x), |r, _| {
        field.from_i64((dual_of[r % nx] == r / nx) as i64)
    });
    let (idx, idy) = (id(&x), id(&y));
    let phi = comp(&[&idy.tensor(&mu), &alpha.tensor(&idx)]);
    let psi = comp(&[&idy.tensor(&beta), &phi.tensor(&idy)]);
    let delta = comp(&[&idy.tensor(&psi), &alpha.tensor(&idy)]);
    let eps = comp(&[&beta, &eta.tensor(&idy)]);
    FrobeniusPairData {
        x,
        y,
        eta,
        mu,
        psi,
        eps,
        delta,
        phi,
    }
}

/// The pair `(A, A*)` for a commutative algebra, all in degree 0.
/// No nondegeneracy is needed.
pub fn commutative_pair(alg: &AlgebraPresentation) -> Result<FrobeniusPairData> {
    if let Some((i, j)) = alg.commutativity_witness() {
        return Err(Error::NotCommutative(i, j));
    }
    let n = alg.dim();
    let x = GradedObj::new(alg.field(), [(0, n)]);
    let pos: Vec<usize> = (0..n).collect();
    let (eta, mu) = monoid_on(alg, &x, &pos);
    verified(evaluation_pair(x, eta, mu), "commutative pair")
}

/// The graded pair `X_d = A^{-d}`, `Y_d = (A^d)*` of a graded-commutative
/// algebra whose default trace pairs it nondegenerately with itself.
pub fn manifold_shadow_pair(alg: &AlgebraPresentation) -> Result<FrobeniusPairData> {
    if alg.degrees().is_none() {
        return Err(Error::InvalidArgument(
            "shadow pair needs a graded algebra".into(),
        ));
    }
    if let Some((i, j)) = alg.graded_commutativity_witness() {
        return Err(Error::NotCommutative(i, j));
    }
    let t = alg
        .trace()
        .ok_or_else(|| Error::InvalidArgument("shadow pair needs a top-degree trace".into()))?;
    let g = gram(alg, t);
    if g.inverse().is_none() {
        return Err(degenerate(&g));
    }
    let n = alg.dim();
    let x = GradedObj::new(alg.field(), (0..n).map(|i| (-alg.degree(i), 1)));
    let mut seen = std::collections::BTreeMap::<i32, usize>::new();
    let pos: Vec<usize> = (0..n)
        .map(|i| {
            let d = -alg.degree(i);
            let local = seen.entry(d).or_default();
            *local += 1;
            x.global_index(d, *local - 1)
        })
        .collect();
    let (eta, mu) = monoid_on(alg, &x, &pos);
    verified(evaluation_pair(x, eta, mu), "shadow pair")
}

/// Transport of structure along isomorphisms `gX: X → X'`, `gY: Y → Y'`.
pub fn conjugate(pair: &FrobeniusPairData, gx: &Mor, gy: &Mor) -> Result<FrobeniusPairData> {
    pair.validate_shapes()?;
    if gx.dom() != &pair.x || gy.dom() != &pair.y {
        return Err(Error::shape(
            format!("conjugators from {} and {}", gx.dom(), gy.dom()),
            format!("pair on {} and {}", pair.x, pair.y),
        ));
    }
    let (hx, hy) = (gx.invert()?, gy.invert()?);
    Ok(FrobeniusPairData {
        x: gx.cod().clone(),
        y: gy.cod().clone(),
        eta: comp(&[gx, &pair.eta]),
        mu: comp(&[gx, &pair.mu, &hx.tensor(&hx)]),
        psi: comp(&[gy, &pair.psi, &hx.tensor(&hy)]),
        eps: comp(&[&pair.eps, &hy]),
        delta: comp(&[&gy.tensor(gy), &pair.delta, &hy]),
        phi: comp(&[&gy.tensor(gx), &pair.phi, &hx]),
    })
}

/// The same pair on atomic objects, conjugated by the identity matrices
/// `X → X.flatten()` and `Y → Y.flatten()`.
pub fn flatten_pair(pair: &FrobeniusPairData) -> Result<FrobeniusPairData> {
    let fx = Mor::identity(&pair.x).retype(pair.x.clone(), pair.x.flatten())?;
    let fy = Mor::identity(&pair.y).retype(pair.y.clone(), pair.y.flatten())?;
    conjugate(pair, &fx, &fy)
}

/// `(X₁⊗X₂, Y₁⊗Y₂)` with the structure maps interleaved by one symmetry
/// in the middle factors.
pub fn tensor_product(p1: &FrobeniusPairData, p2: &FrobeniusPairData) -> Result<FrobeniusPairData> {
    if p1.field() != p2.field() {
        return Err(Error::FieldMismatch(p1.field(), p2.field()));
    }
    p1.validate_shapes()?;
    p2.validate_shapes()?;
    let (x1, x2, y1, y2) = (&p1.x, &p2.x, &p1.y, &p2.y);
    let mid = |a: &GradedObj, s: Mor, b: &GradedObj| id(a).tensor(&s).tensor(&id(b));
    let pair = FrobeniusPairData {
        x: x1.tensor(x2),
        y: y1.tensor(y2),
        eta: p1.eta.tensor(&p2.eta),
        mu: comp(&[&p1.mu.tensor(&p2.mu), &mid(x1, Mor::symmetry(x2, x1), x2)]),
        psi: comp(&[&p1.psi.tensor(&p2.psi), &mid(x1, Mor::symmetry(x2, y1), y2)]),
        eps: p1.eps.tensor(&p2.eps),
        delta: comp(&[
            &mid(y1, Mor::symmetry(y1, y2), y2),
            &p1.delta.tensor(&p2.delta),
        ]),
        phi: comp(&[&mid(y1, Mor::symmetry(x1, y2), x2), &p1.phi.tensor(&p2.phi)]),
    };
    pair.validate_shapes()?;
    verified(pair, "tensor product")
}
