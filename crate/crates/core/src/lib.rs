//! Exact homotopy invariants of combings of closed 3-manifolds given by
//! integral surgery on framed links in `S^3`.
//!
//! The crate is organized bottom-up:
//!
//! - [`linalg`]: Smith normal form, rational solves and exact signatures.
//! - [`surgery`]: homology of the surgered manifold and its torsion linking form.
//! - [`combing`]: characteristic vectors, the Gompf invariant `theta_G = p1`,
//!   the `gamma` action, Spin^c classes, stabilization.
//! - [`image`]: the set of `p1` values of torsion combings, computed from the
//!   linking form and, independently, by enumeration.
//! - [`modification`], [`framed`]: variation of `p1` under local changes and
//!   the framed-link bookkeeping of the Pontrjagin construction.
//! - [`theta`]: `Theta = 6 lambda + p1 / 4`.
//!
//! All arithmetic is exact (`BigInt` / `BigRational`).

pub mod combing;
pub mod error;
pub mod framed;
pub mod image;
pub mod linalg;
pub mod modification;
pub mod par;
pub mod residue;
pub mod surgery;
pub mod theta;

pub type Rational = num_rational::BigRational;

pub use combing::{
    combing_equal, euler_class, gamma, gamma_orbit_modulus, hf_grading, p1, parity_check,
    reference_parallelization, reparam_delta, reparam_lk, spin_c_equal, stabilize, theta_g,
    validate_combing, CombingSpec, EulerClassInfo,
};
pub use error::{Error, Result};
pub use framed::{
    add_hopf, band_sum, cobordism_class, framed_cobordant_zsphere, pontrjagin_p1,
    total_self_linking, twist_parallel, FramedCobordismClass, FramedLinkData,
};
pub use image::{p1_image, p1_image_with, ImageReport, ImageStatus};
pub use linalg::{IntMatrix, SignatureTriple, SnfResult};
pub use modification::{apply_modification, Modification};
pub use par::Execution;
pub use residue::{fmt_rational, ModClass};
pub use surgery::{HomologySummary, MeridianClass, SurgeryPresentation};
pub use theta::{theta_invariant, theta_variation, ThetaInput};
