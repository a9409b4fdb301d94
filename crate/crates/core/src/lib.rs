pub mod arrangements;
pub mod complex;
pub mod error;
pub mod face_ring;
pub mod field;
pub mod fvectors;
pub mod homology;
pub mod linalg;
pub mod moment_angle;
pub mod poly;
pub mod quotients;

pub use complex::{Face, SimplicialComplex};
pub use error::{Error, Result};
pub use field::{Coefficients, FieldScalar};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    mod complexes {}
    #[doc = include_str!("../../../book/src/fvectors.md")]
    mod fvectors {}
    #[doc = include_str!("../../../book/src/homology.md")]
    mod homology {}
    #[doc = include_str!("../../../book/src/face_ring.md")]
    mod face_ring {}
    #[doc = include_str!("../../../book/src/tor_algebra.md")]
    mod tor_algebra {}
    #[doc = include_str!("../../../book/src/moment_angle.md")]
    mod moment_angle {}
    #[doc = include_str!("../../../book/src/arrangements.md")]
    mod arrangements {}
    #[doc = include_str!("../../../book/src/quotients.md")]
    mod quotients {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
