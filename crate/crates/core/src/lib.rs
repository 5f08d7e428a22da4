//! Exact computations with Hom-algebras.
//!
//! * [`trees`]: planar binary trees, weighted and diweighted trees, grafting
//!   and the `τ[m]` shift.
//! * [`linalg`]: exact dense and sparse row reduction.
//! * [`algebra`]: Hom-algebras, Hom-dialgebras and bimodules given by
//!   structure constants, their axiom checkers and the functors between them.
//! * [`free`]: the free Hom-nonassociative algebra and its two-product
//!   analogue, with the universal map into any target.
//! * [`envelope`]: window-truncated enveloping algebras `U_HLie`, `F_HAs`
//!   and `U_HLeib` as ideal quotients.
//! * [`io`]: JSON file formats.
//!
//! Everything is generic over an exact [`Scalar`] field; the aliases below
//! fix it to arbitrary-precision rationals.

pub mod algebra;
pub mod envelope;
pub mod error;
pub mod free;
pub mod io;
pub mod linalg;
pub mod scalar;
pub mod trees;

pub use algebra::{
    check_bimodule, check_hom_associative, check_hom_dialgebra, check_hom_leibniz, check_hom_lie,
    check_lie_morphism, check_morphism, dialgebra_from_associative, dialgebra_from_bimodule, hleib, hlie, twist,
    Axiom, BimoduleData, HomAlgebra, HomDialgebra, HomModule, HomStructure, StructureConstants, Violation,
    Violations,
};
pub use envelope::{
    check_quotient_axioms, f_has, fhas_ideal_generators, hleib_ideal_generators, hlie_ideal_generators,
    ideal_closure, induced_morphism_check, u_hleib, u_hlie, AdjunctionReport, CellDims, EnvelopeKind, IdealSpan,
    QuotientCheck, QuotientPresentation,
};
pub use error::{Error, Result};
pub use free::{
    eval_tree_product, universal_map, Element, FreeAlgebra, FreeLabel, Monomial, TreeAlgebra, UniversalMap, Window,
};
pub use linalg::{Echelon, Matrix, SparseVec};
pub use scalar::Scalar;
pub use trees::{DiWeight, DiweightedTree, PlanarTree, Side, Tree, WeightedTree};

/// Arbitrary-precision rationals, the default field.
pub type Q = num_rational::BigRational;
pub type QMatrix = Matrix<Q>;
pub type QHomModule = HomModule<Q>;
pub type QHomAlgebra = HomAlgebra<Q>;
pub type QHomDialgebra = HomDialgebra<Q>;
pub type QBimodule = BimoduleData<Q>;
pub type QElement = Element<Q, u32>;
pub type QDiElement = Element<Q, DiWeight>;
pub type QFree = FreeAlgebra<Q, u32>;
pub type QFreeDi = FreeAlgebra<Q, DiWeight>;
pub type QQuotient = QuotientPresentation<Q, u32>;
pub type QDiQuotient = QuotientPresentation<Q, DiWeight>;
