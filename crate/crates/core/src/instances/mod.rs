//! Concrete Frobenius pairs: algebras, the pairs built from them, and the
//! seeded random and mutation harness.

mod algebra;
mod pairs;
mod random;

pub use algebra::{
    exterior_algebra, group_algebra, matrix_algebra, projective_space_mod2, sphere_cohomology,
    square_zero_algebra, truncated_polynomial, AlgebraPresentation, TraceFunctional,
};
pub use pairs::{
    commutative_pair, conjugate, flatten_pair, frobenius_object_from_trace, manifold_shadow_pair,
    tensor_product, trivial_pair,
};
pub use random::{
    catalog, catalog_instance, fresh_scalar, mutation_trials, random_automorphism,
    random_frobenius_object, random_instance, random_mor, random_scalar, CatalogEntry,
    InstanceKind, MutationOutcome, SizeBounds,
};
