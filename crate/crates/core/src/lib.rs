//! Exact computer-algebra kernel for neutrosophic algebra: arithmetic with
//! the idempotent indeterminate I over Z, Q and Z_n, and witnessed
//! verification of set / semigroup / group vector spaces and linear
//! algebras, their substructures, generating sets, linear maps, fuzzy
//! membership maps and bistructures over finitely presented carriers.
//!
//! The kernel works with explicit finite carriers and scalar sets. All
//! verdicts are exhaustive over those sets, every failure carries a witness
//! that reproduces it, and all arithmetic is exact.
//!
//! ```
//! use neutra_core::{BaseRing, NeutroNumber};
//!
//! let ring = BaseRing::modular(5)?;
//! let i = NeutroNumber::indeterminate(ring);
//! assert_eq!(i.mul(&i)?, i); // the defining idempotence
//!
//! let x = NeutroNumber::from_ints(ring, 2, 3);
//! let y = NeutroNumber::from_ints(ring, 1, 4);
//! assert_eq!(x.mul(&y)?, NeutroNumber::from_ints(ring, 2, 23));
//! # Ok::<(), neutra_core::Error>(())
//! ```
//!
//! Structures are verified axiom by axiom:
//!
//! ```
//! use std::collections::BTreeSet;
//! use neutra_core::{
//!     verify, BaseRing, Element, NeutroNumber, ScalarSet, StructureDef, StructureKind,
//! };
//!
//! let ring = BaseRing::modular(12)?;
//! let carrier: BTreeSet<Element> = [(0, 0), (2, 0), (4, 0), (6, 0), (0, 6), (0, 8), (0, 10)]
//!     .into_iter()
//!     .map(|(a, b)| Element::scalar(NeutroNumber::from_ints(ring, a, b)))
//!     .collect();
//! let scalars = ScalarSet::from_ints(ring, &[(0, 0), (3, 0)]);
//! let space = StructureDef::new(carrier, scalars, StructureKind::SetVs)?;
//! assert!(verify(&space).passed());
//! # Ok::<(), neutra_core::Error>(())
//! ```

pub mod algebra;
pub mod bistructure;
pub mod carrier;
pub mod error;
pub mod fuzzy;
pub mod linmap;
pub mod report;
pub mod ring;
pub mod span;
pub mod substructure;

pub use algebra::{
    classify, magma_profile, mixedness, neutro_closure, scalar_profile, verify, ClosureOp,
    MagmaClass, MagmaProfile, Mixedness, ScalarProfile, ScalarSet, StructureDef, StructureKind,
};
pub use bistructure::{
    bigenerator, classify_bisubstructure, verify_bifuzzy, verify_bistructure, BiFuzzyKind,
    BiFuzzyMap, BiGeneratorReport, BiStructureDef, BisubstructureReport, FlavorFinding, ScalarMode,
};
pub use carrier::{degree, elem_add, elem_neg, scalar_act, zero_like, Element, Shape};
pub use error::{Error, Result};
pub use fuzzy::{restrict_fuzzy, verify_fuzzy, FuzzyKind, FuzzyMap};
pub use linmap::{
    compose, enumerate_maps, invert_map, is_projection_onto, preservation_profile, verify_map,
    zero_operator, MapTable, PreservationGrade, PreservationProfile,
};
pub use report::{AxiomCheck, VerificationReport, Verdict, Witness, WitnessValue};
pub use ring::{BaseRing, FuzzyNeutroValue, FuzzyOrder, NeutroNumber, NumberClass, Rational};
pub use span::{
    is_generating, is_independent, minimal_generating_set, span, GeneratorReport, GensetMethod,
    SpanMode,
};
pub use substructure::{
    check_direct_sum, check_direct_union, check_pseudo_direct_sum, enumerate_substructures,
    is_substructure, simplicity, Flavor, GradeCert, SimplicityReport, SubstructureQuery,
    ENUMERATION_LIMIT,
};
