//! Finite-dimensional unital algebras given by structure constants.

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// `e_i · e_j = Σ_k c[i][j][k] e_k`, with an optional degree per basis
/// element and an optional default trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    field: FieldSpec,
    structure: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
    degrees: Option<Vec<i32>>,
    trace: Option<TraceFunctional>,
}

/// A linear functional `A → k`, as a row vector over the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceFunctional(pub Vec<Scalar>);

impl TraceFunctional {
    pub fn from_i64(field: FieldSpec, coeffs: &[i64]) -> Self {
        TraceFunctional(coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    /// The coordinate functional `e_k*` on an `n`-dimensional algebra.
    pub fn coordinate(field: FieldSpec, n: usize, k: usize) -> Self {
        TraceFunctional(
            (0..n)
                .map(|i| if i == k { field.one() } else { field.zero() })
                .collect(),
        )
    }

    pub fn apply(&self, v: &[Scalar]) -> Scalar {
        let mut acc = v[0].field().zero();
        for (t, x) in self.0.iter().zip(v) {
            acc.add_product(t, x);
        }
        acc
    }
}

impl AlgebraPresentation {
    /// Validates shapes, unit laws, associativity and, when graded, that
    /// products and the unit respect degrees.
    pub fn new(
        field: FieldSpec,
        structure: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
        degrees: Option<Vec<i32>>,
    ) -> Result<Self> {
        let n = unit.len();
        let bad = |msg: String| Err(Error::InvalidAlgebra(msg));
        if structure.len() != n
            || structure
                .iter()
                .any(|row| row.len() != n || row.iter().any(|v| v.len() != n))
        {
            return bad(format!("structure constants must be {n}×{n}×{n}"));
        }
        let all = structure.iter().flatten().flatten().chain(&unit);
        if let Some(s) = all.into_iter().find(|s| !field.contains(s)) {
            return Err(Error::FieldMismatch(field, s.field()));
        }
        if let Some(d) = &degrees {
            if d.len() != n {
                return bad(format!("{} degrees for {n} basis elements", d.len()));
            }
        }
        let alg = AlgebraPresentation {
            field,
            structure,
            unit,
            degrees,
            trace: None,
        };

        if let Some(deg) = &alg.degrees {
            for (k, u) in alg.unit.iter().enumerate() {
                if !u.is_zero() && deg[k] != 0 {
                    return bad(format!("unit has a component on e{k} of degree {}", deg[k]));
                }
            }
            for i in 0..n {
                for j in 0..n {
                    for (k, c) in alg.structure[i][j].iter().enumerate() {
                        if !c.is_zero() && deg[k] != deg[i] + deg[j] {
                            return bad(format!(
                                "e{i}·e{j} has a component on e{k} of wrong degree"
                            ));
                        }
                    }
                }
            }
        }
        for i in 0..n {
            let e = alg.basis_vector(i);
            if alg.mul(&alg.unit, &e) != e || alg.mul(&e, &alg.unit) != e {
                return bad(format!("unit law fails on e{i}"));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = alg.product(i, j).to_vec();
                for k in 0..n {
                    let left = alg.mul(&ij, &alg.basis_vector(k));
                    let right = alg.mul(&alg.basis_vector(i), alg.product(j, k));
                    if left != right {
                        return bad(format!("associativity fails on (e{i}, e{j}, e{k})"));
                    }
                }
            }
        }
        Ok(alg)
    }

    /// Attaches a default trace.
    pub fn with_trace(mut self, trace: TraceFunctional) -> Result<Self> {
        if trace.0.len() != self.dim() {
            return Err(Error::InvalidArgument(format!(
                "trace has {} coefficients for a {}-dimensional algebra",
                trace.0.len(),
                self.dim()
            )));
        }
        self.trace = Some(trace);
        Ok(self)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn degrees(&self) -> Option<&[i32]> {
        self.degrees.as_deref()
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.degrees.as_ref().map_or(0, |d| d[i])
    }

    pub fn trace(&self) -> Option<&TraceFunctional> {
        self.trace.as_ref()
    }

    /// Coordinates of `e_i · e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.structure[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        TraceFunctional::coordinate(self.field, self.dim(), i).0
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.structure[i][j].iter().enumerate() {
                    out[k].add_product(&xy, c);
                }
            }
        }
        out
    }

    /// First `(i, j)`, `i < j`, with `e_i e_j ≠ e_j e_i`.
    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        self.pairs()
            .find(|&(i, j)| self.structure[i][j] != self.structure[j][i])
    }

    /// First `(i, j)`, `i < j`, with `e_i e_j ≠ (-1)^{|i||j|} e_j e_i`.
    pub fn graded_commutativity_witness(&self) -> Option<(usize, usize)> {
        self.pairs().find(|&(i, j)| {
            let sign = self.field.sign((self.degree(i) * self.degree(j)) % 2 != 0);
            let swapped: Vec<Scalar> = self.structure[j][i].iter().map(|c| &sign * c).collect();
            self.structure[i][j] != swapped
        })
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.dim();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
    }

    /// Largest degree carrying a basis element (0 when ungraded).
    pub fn top_degree(&self) -> i32 {
        (0..self.dim()).map(|i| self.degree(i)).max().unwrap_or(0)
    }
}

fn constants(
    field: FieldSpec,
    n: usize,
    mut product: impl FnMut(usize, usize) -> Option<(usize, i64)>,
) -> Vec<Vec<Vec<Scalar>>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut v = vec![field.zero(); n];
                    if let Some((k, c)) = product(i, j) {
                        v[k] = field.from_i64(c);
                    }
                    v
                })
                .collect()
        })
        .collect()
}

fn build(
    field: FieldSpec,
    n: usize,
    product: impl FnMut(usize, usize) -> Option<(usize, i64)>,
    degrees: Option<Vec<i32>>,
    trace_at: usize,
) -> Result<AlgebraPresentation> {
    let structure = constants(field, n, product);
    let unit = TraceFunctional::coordinate(field, n, 0).0;
    AlgebraPresentation::new(field, structure, unit, degrees)?
        .with_trace(TraceFunctional::coordinate(field, n, trace_at))
}

/// Group algebra of `C_{n1} × ... × C_{nr}`; basis in mixed radix, first
/// factor slowest. Trace: coefficient of the identity.
pub fn group_algebra(orders: &[usize], field: FieldSpec) -> Result<AlgebraPresentation> {
    if orders.contains(&0) {
        return Err(Error::InvalidArgument(
            "cyclic group orders must be ≥ 1".into(),
        ));
    }
    let n: usize = orders.iter().product();
    let digits = |mut g: usize| {
        let mut out = vec![0; orders.len()];
        for (slot, &m) in out.iter_mut().zip(orders).rev() {
            *slot = g % m;
            g /= m;
        }
        out
    };
    let index = |d: &[usize]| d.iter().zip(orders).fold(0, |acc, (&x, &m)| acc * m + x);
    build(
        field,
        n,
        |i, j| {
            let sum: Vec<usize> = digits(i)
                .iter()
                .zip(digits(j))
                .zip(orders)
                .map(|((a, b), m)| (a + b) % m)
                .collect();
            Some((index(&sum), 1))
        },
        None,
        0,
    )
}

/// `k[x]/xⁿ`, basis `1, x, ..., x^{n-1}`, trace the coefficient of `x^{n-1}`.
pub fn truncated_polynomial(n: usize, field: FieldSpec) -> Result<AlgebraPresentation> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "truncation order must be ≥ 1".into(),
        ));
    }
    build(
        field,
        n,
        |i, j| (i + j < n).then_some((i + j, 1)),
        None,
        n - 1,
    )
}

/// Exterior algebra on `m` generators of degree 1. Basis: subsets ordered by
/// size, then lexicographically. Trace: the top coefficient.
pub fn exterior_algebra(m: usize, field: FieldSpec) -> Result<AlgebraPresentation> {
    if m > 6 {
        return Err(Error::InvalidArgument(
            "at most 6 exterior generators".into(),
        ));
    }
    let mut subsets: Vec<u32> = (0..1u32 << m).collect();
    subsets.sort_by_key(|&s| {
        (
            s.count_ones(),
            (0..m).map(|b| s >> b & 1 == 0).collect::<Vec<_>>(),
        )
    });
    let index = |s: u32| subsets.iter().position(|&t| t == s).unwrap();
    let degrees = subsets.iter().map(|s| s.count_ones() as i32).collect();
    let top = subsets.len() - 1;
    build(
        field,
        subsets.len(),
        |i, j| {
            let (s, t) = (subsets[i], subsets[j]);
            if s & t != 0 {
                return None;
            }
            let inversions: u32 = (0..m)
                .filter(|&b| s >> b & 1 == 1)
                .map(|b| (t & ((1 << b) - 1)).count_ones())
                .sum();
            Some((
                index(s | t),
                if inversions.is_multiple_of(2) { 1 } else { -1 },
            ))
        },
        Some(degrees),
        top,
    )
}

/// `H*(Sⁿ) = k[x]/x²`, `|x| = n`.
pub fn sphere_cohomology(n: usize, field: FieldSpec) -> Result<AlgebraPresentation> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "sphere dimension must be ≥ 1".into(),
        ));
    }
    build(
        field,
        2,
        |i, j| (i + j < 2).then_some((i + j, 1)),
        Some(vec![0, n as i32]),
        1,
    )
}

/// `H*(ℝPⁿ; F₂) = F₂[x]/x^{n+1}`, `|x| = 1`.
pub fn projective_space_mod2(n: usize) -> Result<AlgebraPresentation> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "projective dimension must be ≥ 1".into(),
        ));
    }
    let f2 = FieldSpec::prime(2)?;
    build(
        f2,
        n + 1,
        |i, j| (i + j <= n).then_some((i + j, 1)),
        Some((0..=n as i32).collect()),
        n,
    )
}

/// Full matrix algebra `M_k`, basis `E_ab` at index `a·k + b`, trace the
/// usual matrix trace.
pub fn matrix_algebra(k: usize, field: FieldSpec) -> Result<AlgebraPresentation> {
    if k == 0 {
        return Err(Error::InvalidArgument("matrix size must be ≥ 1".into()));
    }
    let n = k * k;
    let structure = constants(field, n, |i, j| {
        let (a, b, c, d) = (i / k, i % k, j / k, j % k);
        (b == c).then_some((a * k + d, 1))
    });
    let unit = (0..n)
        .map(|i| {
            if i / k == i % k {
                field.one()
            } else {
                field.zero()
            }
        })
        .collect::<Vec<_>>();
    let trace = TraceFunctional(unit.clone());
    AlgebraPresentation::new(field, structure, unit, None)?.with_trace(trace)
}

/// `k[x,y]/(x,y)²`, basis `1, x, y`; commutative but not Frobenius.
/// Default trace: the coefficient of `x`.
pub fn square_zero_algebra(field: FieldSpec) -> Result<AlgebraPresentation> {
    build(
        field,
        3,
        |i, j| match (i, j) {
            (0, j) => Some((j, 1)),
            (i, 0) => Some((i, 1)),
            _ => None,
        },
        None,
        1,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn int(alg: &AlgebraPresentation, i: usize, j: usize) -> Vec<i64> {
        alg.product(i, j)
            .iter()
            .map(|s| s.to_string().parse().unwrap())
            .collect()
    }

    #[test]
    fn c2_multiplication_table() {
        let a = group_algebra(&[2], Q).unwrap();
        assert_eq!(int(&a, 1, 1), vec![1, 0]);
        assert_eq!(int(&a, 0, 1), vec![0, 1]);
        let c3 = group_algebra(&[3], FieldSpec::prime(2).unwrap()).unwrap();
        assert_eq!(c3.product(2, 2), c3.basis_vector(1).as_slice());
        let klein = group_algebra(&[2, 2], Q).unwrap();
        assert_eq!(int(&klein, 1, 2), vec![0, 0, 0, 1]);
        assert_eq!(group_algebra(&[], Q).unwrap().dim(), 1);
    }

    #[test]
    fn exterior_signs() {
        let e1 = exterior_algebra(1, Q).unwrap();
        assert_eq!(e1.degrees().unwrap(), &[0, 1]);
        assert_eq!(int(&e1, 1, 1), vec![0, 0]);
        let e2 = exterior_algebra(2, Q).unwrap();
        // basis 1, e1, e2, e1e2
        assert_eq!(int(&e2, 1, 2), vec![0, 0, 0, 1]);
        assert_eq!(int(&e2, 2, 1), vec![0, 0, 0, -1]);
        assert_eq!(e2.graded_commutativity_witness(), None);
        assert_eq!(e2.commutativity_witness(), Some((1, 2)));
        assert_eq!(
            e2.trace().unwrap(),
            &TraceFunctional::from_i64(Q, &[0, 0, 0, 1])
        );
        assert_eq!(
            sphere_cohomology(1, Q).unwrap(),
            exterior_algebra(1, Q).unwrap()
        );
    }

    #[test]
    fn matrix_algebra_is_noncommutative() {
        let m = matrix_algebra(2, Q).unwrap();
        let (i, j) = m.commutativity_witness().unwrap();
        assert_ne!(m.product(i, j), m.product(j, i));
        // E12 E21 = E11, E21 E12 = E22
        assert_eq!(int(&m, 1, 2), vec![1, 0, 0, 0]);
        assert_eq!(int(&m, 2, 1), vec![0, 0, 0, 1]);
    }

    #[test]
    fn rejects_bad_presentations() {
        let z = || Q.zero();
        let o = || Q.one();
        // e0 is not a unit for e1 * e1 = e0 with e0 e1 = 0
        let structure = vec![
            vec![vec![o(), z()], vec![z(), z()]],
            vec![vec![z(), z()], vec![o(), z()]],
        ];
        assert!(matches!(
            AlgebraPresentation::new(Q, structure, vec![o(), z()], None),
            Err(Error::InvalidAlgebra(_))
        ));
        let sq = square_zero_algebra(Q).unwrap();
        assert!(sq
            .clone()
            .with_trace(TraceFunctional::from_i64(Q, &[1]))
            .is_err());
        let mut bad_deg = sphere_cohomology(2, Q).unwrap();
        bad_deg.degrees = Some(vec![0, 2]);
        assert!(AlgebraPresentation::new(
            Q,
            bad_deg.structure.clone(),
            bad_deg.unit.clone(),
            Some(vec![1, 2])
        )
        .is_err());
    }

    #[test]
    fn rp_over_f2() {
        let rp2 = projective_space_mod2(2).unwrap();
        assert_eq!(rp2.field(), FieldSpec::prime(2).unwrap());
        assert_eq!(rp2.product(1, 1), rp2.basis_vector(2).as_slice());
        assert_eq!(rp2.top_degree(), 2);
        assert_eq!(rp2.graded_commutativity_witness(), None);
    }
}
