//! Finitely supported graded vector spaces with the Koszul-signed symmetry.
//!
//! Objects are words of atomic graded spaces under `⊗`. A word is normalized
//! by dropping unit factors and collapsing to the zero object when any factor
//! is zero, so `(A⊗B)⊗C` and `A⊗(B⊗C)` are literally the same object and the
//! unit is literally neutral.
//!
//! The basis of an atomic object is enumerated degree-ascending, then by index
//! inside the degree. The basis of a word is the lexicographic product of the
//! enumerations of its factors; the degree-`d` part of a word keeps the
//! elements of total degree `d` in that order. For two atomic factors this is
//! the `(i, a, b)` order: `i` the degree in the first factor, `a` and `b` the
//! indices inside the respective degree parts.
//!
//! Morphisms are degree preserving and stored as one matrix per degree.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{FieldSpec, Scalar};

/// Positive dimensions of an atomic graded space, keyed by degree.
pub type Dims = BTreeMap<i32, usize>;

#[derive(Clone)]
pub struct GradedObj {
    inner: Arc<ObjInner>,
}

struct ObjInner {
    field: FieldSpec,
    factors: Vec<Dims>,
    dims: Dims,
    /// Degree of each basis element in the global enumeration.
    degrees: Vec<i32>,
    /// Index of each basis element inside its degree part.
    local: Vec<usize>,
    /// Global indices of the degree-`d` part, in basis order.
    by_degree: BTreeMap<i32, Vec<usize>>,
}

impl GradedObj {
    /// An atomic object. Zero dimensions are dropped.
    pub fn new(field: FieldSpec, dims: impl IntoIterator<Item = (i32, usize)>) -> Self {
        let mut atom = Dims::new();
        for (d, n) in dims {
            if n > 0 {
                *atom.entry(d).or_default() += n;
            }
        }
        Self::from_factors(field, vec![atom])
    }

    /// The unit object `I`, one dimension in degree zero.
    pub fn unit(field: FieldSpec) -> Self {
        Self::from_factors(field, Vec::new())
    }

    pub fn zero(field: FieldSpec) -> Self {
        Self::new(field, [])
    }

    fn from_factors(field: FieldSpec, factors: Vec<Dims>) -> Self {
        let unit_atom: Dims = [(0, 1)].into_iter().collect();
        let mut normalized: Vec<Dims> = factors.into_iter().filter(|f| *f != unit_atom).collect();
        if normalized.iter().any(BTreeMap::is_empty) {
            normalized = vec![Dims::new()];
        }

        let mut degrees = vec![0i32];
        for atom in &normalized {
            let atom_degrees: Vec<i32> = atom
                .iter()
                .flat_map(|(&d, &n)| std::iter::repeat_n(d, n))
                .collect();
            degrees = degrees
                .iter()
                .flat_map(|&a| atom_degrees.iter().map(move |&b| a + b))
                .collect();
        }

        let mut by_degree: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        let mut local = Vec::with_capacity(degrees.len());
        for (g, &d) in degrees.iter().enumerate() {
            let part = by_degree.entry(d).or_default();
            local.push(part.len());
            part.push(g);
        }
        let dims = by_degree.iter().map(|(&d, v)| (d, v.len())).collect();
        GradedObj {
            inner: Arc::new(ObjInner {
                field,
                factors: normalized,
                dims,
                degrees,
                local,
                by_degree,
            }),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.inner.field
    }

    pub fn dims(&self) -> &Dims {
        &self.inner.dims
    }

    pub fn dim(&self, degree: i32) -> usize {
        self.inner.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.inner.degrees.len()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn is_unit(&self) -> bool {
        self.inner.factors.is_empty()
    }

    /// Atomic factors of the normalized tensor word.
    pub fn factors(&self) -> &[Dims] {
        &self.inner.factors
    }

    pub fn is_atomic(&self) -> bool {
        self.inner.factors.len() <= 1
    }

    /// Degree of each basis element, in global basis order.
    pub fn basis_degrees(&self) -> &[i32] {
        &self.inner.degrees
    }

    pub(crate) fn local_index(&self, global: usize) -> usize {
        self.inner.local[global]
    }

    pub(crate) fn global_index(&self, degree: i32, local: usize) -> usize {
        self.inner.by_degree[&degree][local]
    }

    /// `self ⊗ other`.
    ///
    /// # Panics
    /// If the two objects live over different fields.
    pub fn tensor(&self, other: &GradedObj) -> GradedObj {
        assert_eq!(
            self.field(),
            other.field(),
            "tensor of objects over different fields"
        );
        let mut factors = self.inner.factors.clone();
        factors.extend(other.inner.factors.iter().cloned());
        Self::from_factors(self.field(), factors)
    }

    /// The graded dual `Hom(A, I)`: `(A*)_d = (A_{-d})*`, an atomic object
    /// whose degree-`d` basis is dual to the degree-`(-d)` basis of `self`.
    pub fn dual(&self) -> GradedObj {
        Self::new(self.field(), self.dims().iter().map(|(&d, &n)| (-d, n)))
    }

    /// The atomic object with the same dims and the same per-degree basis order.
    pub fn flatten(&self) -> GradedObj {
        if self.is_atomic() {
            return self.clone();
        }
        Self::new(self.field(), self.dims().iter().map(|(&d, &n)| (d, n)))
    }
}

impl PartialEq for GradedObj {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field && self.inner.factors == other.inner.factors)
    }
}

impl Eq for GradedObj {}

impl std::hash::Hash for GradedObj {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.field.hash(state);
        self.inner.factors.hash(state);
    }
}

pub(crate) fn fmt_dims(dims: &Dims) -> String {
    let body: Vec<String> = dims.iter().map(|(d, n)| format!("{d}:{n}")).collect();
    if body.is_empty() {
        "{ }".to_string()
    } else {
        format!("{{ {} }}", body.join(", "))
    }
}

impl fmt::Display for GradedObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "I");
        }
        let parts: Vec<String> = self.inner.factors.iter().map(fmt_dims).collect();
        write!(f, "{}", parts.join(" ⊗ "))
    }
}

impl fmt::Debug for GradedObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedObj({self} over {})", self.field())
    }
}

/// A degree-0 morphism, one `cod.dim(d) × dom.dim(d)` matrix per degree.
/// All-zero blocks are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mor {
    dom: GradedObj,
    cod: GradedObj,
    blocks: BTreeMap<i32, Matrix>,
}

/// First differing entry of two parallel morphisms, scanning degrees
/// ascending and each block row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryDiff {
    pub degree: i32,
    pub row: usize,
    pub col: usize,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl Mor {
    pub fn new(dom: GradedObj, cod: GradedObj, blocks: BTreeMap<i32, Matrix>) -> Result<Self> {
        if dom.field() != cod.field() {
            return Err(Error::FieldMismatch(dom.field(), cod.field()));
        }
        let mut kept = BTreeMap::new();
        for (d, m) in blocks {
            let shape = (cod.dim(d), dom.dim(d));
            if m.field() != dom.field() {
                return Err(Error::FieldMismatch(dom.field(), m.field()));
            }
            if m.shape() != shape {
                if m.rows() * m.cols() == 0 && shape.0 * shape.1 == 0 {
                    continue;
                }
                return Err(Error::InvalidBlock {
                    degree: d,
                    reason: format!(
                        "expected {}x{}, found {}x{}",
                        shape.0,
                        shape.1,
                        m.rows(),
                        m.cols()
                    ),
                });
            }
            if !m.is_zero() {
                kept.insert(d, m);
            }
        }
        Ok(Mor {
            dom,
            cod,
            blocks: kept,
        })
    }

    pub fn zero(dom: GradedObj, cod: GradedObj) -> Self {
        assert_eq!(dom.field(), cod.field());
        Mor {
            dom,
            cod,
            blocks: BTreeMap::new(),
        }
    }

    /// Builds a morphism entry by entry; `entry(degree, row, col)`.
    pub fn from_fn(
        dom: GradedObj,
        cod: GradedObj,
        mut entry: impl FnMut(i32, usize, usize) -> Scalar,
    ) -> Self {
        let field = dom.field();
        let mut blocks = BTreeMap::new();
        for (&d, &n) in dom.dims() {
            let m = cod.dim(d);
            if m == 0 {
                continue;
            }
            let mut block = Matrix::zeros(field, m, n);
            for r in 0..m {
                for c in 0..n {
                    block.set(r, c, entry(d, r, c));
                }
            }
            blocks.insert(d, block);
        }
        Mor::new(dom, cod, blocks).expect("shapes follow the objects")
    }

    /// Builds a morphism from a function of global basis indices
    /// `(cod index, dom index)`, read only where the degrees agree.
    pub fn from_global(
        dom: GradedObj,
        cod: GradedObj,
        mut entry: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let (d2, c2) = (dom.clone(), cod.clone());
        Self::from_fn(dom, cod, |d, r, c| {
            entry(c2.global_index(d, r), d2.global_index(d, c))
        })
    }

    /// Entry addressed by global basis indices; zero across degrees.
    pub fn global_entry(&self, row: usize, col: usize) -> Scalar {
        let d = self.cod.basis_degrees()[row];
        if self.dom.basis_degrees()[col] != d {
            return self.field().zero();
        }
        self.entry(d, self.cod.local_index(row), self.dom.local_index(col))
    }

    pub fn identity(obj: &GradedObj) -> Self {
        let field = obj.field();
        let blocks = obj
            .dims()
            .iter()
            .map(|(&d, &n)| (d, Matrix::identity(field, n)))
            .collect();
        Mor {
            dom: obj.clone(),
            cod: obj.clone(),
            blocks,
        }
    }

    pub fn dom(&self) -> &GradedObj {
        &self.dom
    }

    pub fn cod(&self) -> &GradedObj {
        &self.cod
    }

    pub fn field(&self) -> FieldSpec {
        self.dom.field()
    }

    pub fn blocks(&self) -> &BTreeMap<i32, Matrix> {
        &self.blocks
    }

    pub fn block(&self, degree: i32) -> Option<&Matrix> {
        self.blocks.get(&degree)
    }

    /// Block at `degree`, zero-filled when absent.
    pub fn dense_block(&self, degree: i32) -> Matrix {
        self.blocks.get(&degree).cloned().unwrap_or_else(|| {
            Matrix::zeros(self.field(), self.cod.dim(degree), self.dom.dim(degree))
        })
    }

    /// Degrees carrying a block of positive size, ascending.
    pub fn block_degrees(&self) -> Vec<i32> {
        self.dom
            .dims()
            .keys()
            .copied()
            .filter(|&d| self.cod.dim(d) > 0)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn entry(&self, degree: i32, row: usize, col: usize) -> Scalar {
        match self.blocks.get(&degree) {
            Some(m) => m.get(row, col).clone(),
            None => self.field().zero(),
        }
    }

    pub fn in_range(&self, degree: i32, row: usize, col: usize) -> bool {
        row < self.cod.dim(degree) && col < self.dom.dim(degree)
    }

    /// A copy with one entry replaced.
    pub fn with_entry(&self, degree: i32, row: usize, col: usize, value: Scalar) -> Result<Mor> {
        if !self.in_range(degree, row, col) {
            return Err(Error::OutOfRange {
                map: "morphism".into(),
                degree,
                row,
                col,
            });
        }
        if value.field() != self.field() {
            return Err(Error::FieldMismatch(self.field(), value.field()));
        }
        let mut blocks = self.blocks.clone();
        let mut block = self.dense_block(degree);
        block.set(row, col, value);
        blocks.insert(degree, block);
        Mor::new(self.dom.clone(), self.cod.clone(), blocks)
    }

    /// `self ∘ g` (apply `g` first).
    pub fn compose(&self, g: &Mor) -> Result<Mor> {
        if self.dom != g.cod {
            return Err(Error::shape(
                format!("dom {}", self.dom),
                format!("cod {}", g.cod),
            ));
        }
        let mut blocks = BTreeMap::new();
        for (d, f_block) in &self.blocks {
            if let Some(g_block) = g.blocks.get(d) {
                blocks.insert(*d, f_block.mul(g_block));
            }
        }
        Mor::new(g.dom.clone(), self.cod.clone(), blocks)
    }

    /// `self ⊗ g`, block-Kronecker in the basis order of the product objects.
    /// Degree-0 maps need no Koszul sign.
    pub fn tensor(&self, g: &Mor) -> Mor {
        let dom = self.dom.tensor(&g.dom);
        let cod = self.cod.tensor(&g.cod);
        let field = dom.field();
        let g_dom_len = g.dom.total_dim();
        let g_cod_len = g.cod.total_dim();
        let mut blocks: BTreeMap<i32, Matrix> = BTreeMap::new();
        for (&i, fb) in &self.blocks {
            for (&j, gb) in &g.blocks {
                let d = i + j;
                let block = blocks
                    .entry(d)
                    .or_insert_with(|| Matrix::zeros(field, cod.dim(d), dom.dim(d)));
                for (r1, c1, a) in fb.nonzero_entries() {
                    let gr1 = self.cod.global_index(i, r1);
                    let gc1 = self.dom.global_index(i, c1);
                    for (r2, c2, b) in gb.nonzero_entries() {
                        let gr = gr1 * g_cod_len + g.cod.global_index(j, r2);
                        let gc = gc1 * g_dom_len + g.dom.global_index(j, c2);
                        block.set(cod.local_index(gr), dom.local_index(gc), a * b);
                    }
                }
            }
        }
        Mor::new(dom, cod, blocks).expect("kronecker blocks follow the product objects")
    }

    /// `σ_{A,B}: A⊗B → B⊗A`, sending `x⊗y` to `(-1)^{|x||y|} y⊗x`.
    pub fn symmetry(a: &GradedObj, b: &GradedObj) -> Mor {
        let dom = a.tensor(b);
        let cod = b.tensor(a);
        let field = dom.field();
        let (na, nb) = (a.total_dim(), b.total_dim());
        let mut blocks: BTreeMap<i32, Matrix> = BTreeMap::new();
        for (x, &dx) in a.basis_degrees().iter().enumerate() {
            for (y, &dy) in b.basis_degrees().iter().enumerate() {
                let d = dx + dy;
                let src = x * nb + y;
                let dst = y * na + x;
                let block = blocks
                    .entry(d)
                    .or_insert_with(|| Matrix::zeros(field, cod.dim(d), dom.dim(d)));
                let odd = (dx * dy).rem_euclid(2) == 1;
                block.set(cod.local_index(dst), dom.local_index(src), field.sign(odd));
            }
        }
        Mor::new(dom, cod, blocks).expect("permutation blocks follow the objects")
    }

    /// Two-sided inverse. Requires dom and cod to have identical dims.
    pub fn invert(&self) -> Result<Mor> {
        let degrees: std::collections::BTreeSet<i32> = self
            .dom
            .dims()
            .keys()
            .chain(self.cod.dims().keys())
            .copied()
            .collect();
        let mut blocks = BTreeMap::new();
        for d in degrees {
            let inv = self
                .dense_block(d)
                .inverse()
                .ok_or(Error::Singular { degree: d })?;
            blocks.insert(d, inv);
        }
        Mor::new(self.cod.clone(), self.dom.clone(), blocks)
    }

    fn check_parallel(&self, g: &Mor) -> Result<()> {
        if self.dom != g.dom || self.cod != g.cod {
            return Err(Error::shape(
                format!("{} -> {}", self.dom, self.cod),
                format!("{} -> {}", g.dom, g.cod),
            ));
        }
        Ok(())
    }

    /// Exact equality of parallel morphisms.
    pub fn equal(&self, g: &Mor) -> Result<bool> {
        self.check_parallel(g)?;
        Ok(self.blocks == g.blocks)
    }

    /// The first differing entry, degree-ascending then row-major.
    pub fn first_difference(&self, g: &Mor) -> Result<Option<EntryDiff>> {
        self.check_parallel(g)?;
        if self.blocks == g.blocks {
            return Ok(None);
        }
        for d in self.block_degrees() {
            let (a, b) = (self.dense_block(d), g.dense_block(d));
            if let Some((row, col)) = a.first_difference(&b) {
                return Ok(Some(EntryDiff {
                    degree: d,
                    row,
                    col,
                    lhs: a.get(row, col).clone(),
                    rhs: b.get(row, col).clone(),
                }));
            }
        }
        unreachable!("unequal block maps must differ somewhere")
    }

    /// Every valid `(degree, row, col)` coordinate, in scan order.
    pub fn coordinates(&self) -> Vec<(i32, usize, usize)> {
        let mut out = Vec::new();
        for d in self.block_degrees() {
            for r in 0..self.cod.dim(d) {
                for c in 0..self.dom.dim(d) {
                    out.push((d, r, c));
                }
            }
        }
        out
    }

    /// The same matrices, read between other objects with identical dims.
    pub fn retype(&self, dom: GradedObj, cod: GradedObj) -> Result<Mor> {
        if dom.dims() != self.dom.dims() || cod.dims() != self.cod.dims() {
            return Err(Error::shape(
                format!("{} -> {}", self.dom, self.cod),
                format!("{dom} -> {cod}"),
            ));
        }
        Mor::new(dom, cod, self.blocks.clone())
    }
}

impl fmt::Display for Mor {
    /// `{ deg d : [[...]], ... }`, the model-file block syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "{{ }}");
        }
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|(d, m)| format!("deg {d} : {m}"))
            .collect();
        write!(f, "{{ {} }}", parts.join(", "))
    }
}

impl fmt::Debug for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mor({} -> {} = {self})", self.dom, self.cod)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn obj(dims: &[(i32, usize)]) -> GradedObj {
        GradedObj::new(Q, dims.iter().copied())
    }

    fn scalar_mor(a: &GradedObj, b: &GradedObj, rows: &[&[i64]], d: i32) -> Mor {
        let mut blocks = BTreeMap::new();
        blocks.insert(d, Matrix::from_i64(Q, rows));
        Mor::new(a.clone(), b.clone(), blocks).unwrap()
    }

    #[test]
    fn identity_blocks() {
        let a = obj(&[(-2, 1), (0, 2)]);
        let id = Mor::identity(&a);
        assert_eq!(id.block(-2), Some(&Matrix::identity(Q, 1)));
        assert_eq!(id.block(0), Some(&Matrix::identity(Q, 2)));
        assert!(Mor::identity(&GradedObj::zero(Q)).blocks().is_empty());
        let unit = GradedObj::unit(Q);
        assert_eq!(Mor::identity(&unit).block(0), Some(&Matrix::identity(Q, 1)));
    }

    #[test]
    fn compose_scalars() {
        let u = GradedObj::unit(Q);
        let f = scalar_mor(&u, &u, &[&[2]], 0);
        let g = scalar_mor(&u, &u, &[&[3]], 0);
        assert_eq!(
            f.compose(&g).unwrap().block(0).unwrap(),
            &Matrix::from_i64(Q, &[&[6]])
        );
    }

    #[test]
    fn compose_rejects_mismatch() {
        let a = obj(&[(0, 2)]);
        let b = obj(&[(0, 1)]);
        let f = Mor::identity(&a);
        let g = Mor::identity(&b);
        assert!(matches!(f.compose(&g), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn tensor_dims_convolve() {
        let a = obj(&[(0, 1), (2, 1)]);
        assert_eq!(
            a.tensor(&a).dims(),
            &[(0, 1), (2, 2), (4, 1)].into_iter().collect()
        );
        assert_eq!(GradedObj::unit(Q).tensor(&a), a);
        assert_eq!(
            obj(&[(-1, 1)]).tensor(&obj(&[(1, 2)])).dims(),
            &[(0, 2)].into_iter().collect()
        );
    }

    #[test]
    fn tensor_of_column_and_scalar() {
        let u = GradedObj::unit(Q);
        let two = obj(&[(0, 2)]);
        let f = scalar_mor(&u, &two, &[&[1], &[0]], 0);
        let g = scalar_mor(&u, &u, &[&[5]], 0);
        let fg = f.tensor(&g);
        assert_eq!(fg.block(0).unwrap(), &Matrix::from_i64(Q, &[&[5], &[0]]));
        assert_eq!(
            g.tensor(&f).block(0).unwrap(),
            &Matrix::from_i64(Q, &[&[5], &[0]])
        );
    }

    #[test]
    fn normative_binary_basis_order() {
        // A = {0:1, 1:1}, B = {0:1, 1:2}; degree-1 part of A⊗B is
        // (0, a0, b1_0), (0, a0, b1_1), (1, a1, b0_0).
        let a = obj(&[(0, 1), (1, 1)]);
        let b = obj(&[(0, 1), (1, 2)]);
        let ab = a.tensor(&b);
        let degree_one: Vec<usize> = ab.inner.by_degree[&1].clone();
        // global index = a_global * 3 + b_global
        assert_eq!(degree_one, vec![1, 2, 3]);
    }

    #[test]
    fn nested_words_are_associative() {
        let a = obj(&[(0, 1), (1, 1)]);
        let b = obj(&[(0, 1), (2, 1)]);
        let c = obj(&[(0, 1), (1, 1)]);
        let left = a.tensor(&b).tensor(&c);
        let right = a.tensor(&b.tensor(&c));
        assert_eq!(left, right);
        assert_eq!(left.basis_degrees(), right.basis_degrees());
    }

    #[test]
    fn zero_factor_collapses() {
        let a = obj(&[(1, 2)]);
        let z = GradedObj::zero(Q);
        assert_eq!(a.tensor(&z), z);
        assert_eq!(z.tensor(&a).tensor(&a), z);
    }

    #[test]
    fn koszul_sign_of_odd_swap() {
        let e = obj(&[(1, 1)]);
        let s = Mor::symmetry(&e, &e);
        assert_eq!(s.block(2).unwrap(), &Matrix::from_i64(Q, &[&[-1]]));
        let u = obj(&[(0, 1)]);
        assert_eq!(
            Mor::symmetry(&u, &u).block(0).unwrap(),
            &Matrix::from_i64(Q, &[&[1]])
        );
        let f2 = FieldSpec::prime(2).unwrap();
        let e2 = GradedObj::new(f2, [(1, 1)]);
        assert_eq!(
            Mor::symmetry(&e2, &e2).block(2).unwrap(),
            &Matrix::from_i64(f2, &[&[1]])
        );
    }

    #[test]
    fn dual_negates_degrees() {
        assert_eq!(obj(&[(0, 1), (2, 1)]).dual(), obj(&[(0, 1), (-2, 1)]));
        assert_eq!(GradedObj::unit(Q).dual(), GradedObj::unit(Q));
        assert_eq!(obj(&[(-3, 2)]).dual(), obj(&[(3, 2)]));
    }

    #[test]
    fn invert_cases() {
        let u = GradedObj::unit(Q);
        let f = scalar_mor(&u, &u, &[&[2]], 0);
        let inv = f.invert().unwrap();
        assert_eq!(inv.entry(0, 0, 0), Q.parse_scalar("1/2").unwrap());
        let a = obj(&[(-1, 2), (3, 1)]);
        assert_eq!(Mor::identity(&a).invert().unwrap(), Mor::identity(&a));
        let z = Mor::zero(u.clone(), u.clone());
        assert_eq!(z.invert(), Err(Error::Singular { degree: 0 }));
    }

    #[test]
    fn equality_is_exact() {
        let u = GradedObj::unit(Q);
        let half = Mor::from_fn(u.clone(), u.clone(), |_, _, _| {
            Q.parse_scalar("1/2").unwrap()
        });
        let two_quarters = Mor::from_fn(u.clone(), u.clone(), |_, _, _| {
            Q.parse_scalar("2/4").unwrap()
        });
        assert!(half.equal(&two_quarters).unwrap());
        assert!(half.equal(&half).unwrap());
        let one = Mor::identity(&u);
        let zero = Mor::zero(u.clone(), u.clone());
        assert!(!one.equal(&zero).unwrap());
        let diff = one.first_difference(&zero).unwrap().unwrap();
        assert_eq!((diff.degree, diff.row, diff.col), (0, 0, 0));
        assert!(one.equal(&Mor::identity(&obj(&[(0, 2)]))).is_err());
    }
}
