//! The named catalog, seeded random instances and the mutation harness.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64`, so streams are
//! reproducible across platforms.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::frobenius::{CheckResult, FrobeniusPairData, StructureMap};
use crate::gvect::{GradedObj, Mor};
use crate::matrix::Matrix;
use crate::scalar::{FieldSpec, Scalar};

use super::algebra::*;
use super::pairs::*;

/// How a catalog instance was built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstanceKind {
    Trivial,
    FrobeniusObject,
    Commutative,
    Shadow,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: InstanceKind,
    pub pair: FrobeniusPairData,
}

fn parse_suffix(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok()
}

/// Builds a catalog example by name: `trivial`, `c2`, `truncpoly<n>`,
/// `exterior<m>`, `sphere<n>`, `rp<n>`, `commpair-xy`, `torus2`.
/// `rp<n>` exists only over `F2`.
pub fn catalog_instance(name: &str, field: FieldSpec) -> Result<CatalogEntry> {
    use InstanceKind::*;
    let unknown = || Error::UnknownName(name.to_string());
    let from_trace = |a: AlgebraPresentation| {
        let t = a.trace().expect("builders attach a trace").clone();
        frobenius_object_from_trace(&a, &t)
    };
    let (kind, pair) = match name {
        "trivial" => (Trivial, trivial_pair(field)),
        "c2" => (FrobeniusObject, from_trace(group_algebra(&[2], field)?)?),
        "commpair-xy" => (Commutative, commutative_pair(&square_zero_algebra(field)?)?),
        "torus2" => {
            let s1 = manifold_shadow_pair(&sphere_cohomology(1, field)?)?;
            (Shadow, tensor_product(&s1, &s1)?)
        }
        _ => {
            if let Some(n) = parse_suffix(name, "truncpoly") {
                (
                    FrobeniusObject,
                    from_trace(truncated_polynomial(n, field)?)?,
                )
            } else if let Some(m) = parse_suffix(name, "exterior") {
                (Shadow, manifold_shadow_pair(&exterior_algebra(m, field)?)?)
            } else if let Some(n) = parse_suffix(name, "sphere") {
                (Shadow, manifold_shadow_pair(&sphere_cohomology(n, field)?)?)
            } else if let Some(n) = parse_suffix(name, "rp") {
                if field.characteristic() != 2 {
                    return Err(Error::InvalidField(format!(
                        "{name} is defined over F2 only"
                    )));
                }
                (Shadow, manifold_shadow_pair(&projective_space_mod2(n)?)?)
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(CatalogEntry {
        name: name.to_string(),
        kind,
        pair,
    })
}

/// The fixed list of named instances, tagged `name-field`.
pub fn catalog() -> Vec<CatalogEntry> {
    let q = FieldSpec::Rationals;
    let f2 = FieldSpec::prime(2).expect("2 is prime");
    let mut specs: Vec<(String, FieldSpec)> = vec![
        ("trivial".into(), q),
        ("c2".into(), q),
        ("c2".into(), f2),
        ("truncpoly2".into(), q),
        ("truncpoly3".into(), q),
        ("exterior1".into(), q),
        ("exterior2".into(), q),
    ];
    for n in 1..=4 {
        specs.push((format!("sphere{n}"), q));
        specs.push((format!("sphere{n}"), f2));
    }
    for n in 1..=3 {
        specs.push((format!("rp{n}"), f2));
    }
    specs.push(("commpair-xy".into(), q));
    specs.push(("torus2".into(), q));
    specs
        .into_iter()
        .map(|(name, field)| {
            let mut e = catalog_instance(&name, field).expect("catalog instances build");
            e.name = format!("{name}-{field}");
            e
        })
        .collect()
}

/// Limits for [`random_instance`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeBounds {
    /// Upper bound on the total dimension of `X` and of `Y`.
    pub max_total_dim: usize,
}

impl Default for SizeBounds {
    fn default() -> Self {
        SizeBounds { max_total_dim: 8 }
    }
}

/// A small random scalar: an integer in `-3..=3` over ℚ (occasionally
/// halved), a uniform residue over `F_p`.
pub fn random_scalar(rng: &mut impl Rng, field: FieldSpec) -> Scalar {
    match field {
        FieldSpec::Rationals => {
            let n = field.from_i64(rng.gen_range(-3..=3));
            if rng.gen_bool(0.25) {
                &n * &field.parse_scalar("1/2").expect("literal")
            } else {
                n
            }
        }
        FieldSpec::PrimeField(p) => field.from_i64(rng.gen_range(0..p.min(1 << 31)) as i64),
    }
}

/// A random scalar different from `old`.
pub fn fresh_scalar(rng: &mut impl Rng, old: &Scalar) -> Scalar {
    loop {
        let s = random_scalar(rng, old.field());
        if &s != old {
            return s;
        }
    }
}

/// A uniformly filled random morphism `dom → cod`.
pub fn random_mor(rng: &mut impl Rng, dom: &GradedObj, cod: &GradedObj) -> Mor {
    let field = dom.field();
    Mor::from_fn(dom.clone(), cod.clone(), |_, _, _| {
        random_scalar(rng, field)
    })
}

/// A random automorphism of `obj`, one invertible block per degree.
pub fn random_automorphism(rng: &mut impl Rng, obj: &GradedObj) -> Mor {
    let field = obj.field();
    let blocks = obj
        .dims()
        .iter()
        .map(|(&d, &n)| loop {
            let mut m = Matrix::zeros(field, n, n);
            for r in 0..n {
                for c in 0..n {
                    m.set(r, c, random_scalar(rng, field));
                }
            }
            if m.inverse().is_some() {
                break (d, m);
            }
        })
        .collect();
    Mor::new(obj.clone(), obj.clone(), blocks).expect("square blocks")
}

fn size(pair: &FrobeniusPairData) -> usize {
    pair.x.total_dim().max(pair.y.total_dim())
}

/// Deterministic in `seed`: a uniformly chosen catalog instance within
/// `bounds`, conjugated by random automorphisms of `X` and `Y`, and with
/// probability 1/2 tensored with a second one when that stays in bounds.
/// Tensor products are flattened onto atomic objects.
pub fn random_instance(seed: u64, bounds: SizeBounds) -> FrobeniusPairData {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<CatalogEntry> = catalog()
        .into_iter()
        .filter(|e| size(&e.pair) <= bounds.max_total_dim)
        .collect();
    let first = pool
        .choose(&mut rng)
        .expect("trivial pair is always in bounds");
    let mut pair = first.pair.clone();
    if rng.gen_bool(0.5) {
        let partners: Vec<&CatalogEntry> = pool
            .iter()
            .filter(|e| {
                e.pair.field() == pair.field()
                    && size(&e.pair) * size(&pair) <= bounds.max_total_dim
            })
            .collect();
        if let Some(second) = partners.choose(&mut rng) {
            pair = tensor_product(&pair, &second.pair)
                .and_then(|p| flatten_pair(&p))
                .expect("tensor of catalog pairs passes");
        }
    }
    let gx = random_automorphism(&mut rng, &pair.x);
    let gy = random_automorphism(&mut rng, &pair.y);
    conjugate(&pair, &gx, &gy).expect("automorphisms are invertible")
}

/// A random Frobenius object: a small algebra with a random nondegenerate
/// trace, conjugated by one random automorphism on both sides.
pub fn random_frobenius_object(seed: u64) -> FrobeniusPairData {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = FieldSpec::Rationals;
    let f2 = FieldSpec::prime(2).expect("2 is prime");
    let f3 = FieldSpec::prime(3).expect("3 is prime");
    let builders: [fn(FieldSpec) -> Result<AlgebraPresentation>; 6] = [
        |f| group_algebra(&[2], f),
        |f| group_algebra(&[3], f),
        |f| group_algebra(&[2, 2], f),
        |f| truncated_polynomial(3, f),
        |f| exterior_algebra(2, f),
        |f| matrix_algebra(2, f),
    ];
    let field = *[q, q, f2, f3].choose(&mut rng).expect("nonempty");
    let build = builders.choose(&mut rng).expect("nonempty");
    let alg = build(field).expect("builder inputs are valid");
    let pair = loop {
        let t = TraceFunctional(
            (0..alg.dim())
                .map(|_| random_scalar(&mut rng, field))
                .collect(),
        );
        if let Ok(p) = frobenius_object_from_trace(&alg, &t) {
            break p;
        }
    };
    let g = random_automorphism(&mut rng, &pair.x);
    conjugate(&pair, &g, &g).expect("automorphism is invertible")
}

/// One single-entry mutation and its verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutationOutcome {
    pub instance: usize,
    pub map: StructureMap,
    pub degree: i32,
    pub row: usize,
    pub col: usize,
    pub old: Scalar,
    pub new: Scalar,
    /// First failing left axiom, if the mutation was detected.
    pub detected_by: Option<CheckResult>,
}

impl MutationOutcome {
    pub fn detected(&self) -> bool {
        self.detected_by.is_some()
    }
}

/// `count` mutations drawn from stream 1 of `ChaCha8Rng(seed)`: an instance,
/// a structure map and a coordinate uniformly, then a fresh value.
pub fn mutation_trials(
    seed: u64,
    instances: &[FrobeniusPairData],
    count: usize,
) -> Result<Vec<MutationOutcome>> {
    if instances.is_empty() && count > 0 {
        return Err(Error::InvalidArgument("no instances to mutate".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let instance = rng.gen_range(0..instances.len());
        let pair = &instances[instance];
        let map = *StructureMap::ALL.choose(&mut rng).expect("six maps");
        let coords = pair.map(map).coordinates();
        let Some(&(degree, row, col)) = coords.choose(&mut rng) else {
            continue;
        };
        let old = pair.map(map).entry(degree, row, col);
        let new = fresh_scalar(&mut rng, &old);
        let mutated = pair.mutate(map, degree, row, col, new.clone())?;
        let detected_by = mutated.check_left_frobenius()?.failures().next().cloned();
        out.push(MutationOutcome {
            instance,
            map,
            degree,
            row,
            col,
            old,
            new,
            detected_by,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_names() {
        let names: Vec<String> = catalog().into_iter().map(|e| e.name).collect();
        assert_eq!(names.len(), 20);
        assert!(names.contains(&"rp2-F2".to_string()));
        assert!(names.contains(&"c2-Q".to_string()));
        assert!(catalog_instance("rp2", FieldSpec::Rationals).is_err());
        assert!(catalog_instance("klein", FieldSpec::Rationals).is_err());
    }

    #[test]
    fn random_instance_is_deterministic() {
        let b = SizeBounds::default();
        assert_eq!(random_instance(0, b), random_instance(0, b));
        for seed in 0..5 {
            let p = random_instance(seed, b);
            assert!(p.x.total_dim() <= 8 && p.y.total_dim() <= 8);
            assert!(p.check_left_frobenius().unwrap().all_pass());
        }
    }

    #[test]
    fn random_frobenius_objects_stay_frobenius() {
        for seed in 0..3 {
            let p = random_frobenius_object(seed);
            assert!(p.is_frobenius_object());
            assert!(p.check_left_frobenius().unwrap().all_pass());
        }
    }

    #[test]
    fn mutation_changes_one_entry() {
        let inst = vec![random_instance(3, SizeBounds::default())];
        let trials = mutation_trials(9, &inst, 5).unwrap();
        assert_eq!(trials, mutation_trials(9, &inst, 5).unwrap());
        for t in trials {
            assert_ne!(t.old, t.new);
        }
    }
}
