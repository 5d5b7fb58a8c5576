//! Exact computer algebra for the restricted quantum group `U_q(sl₂)` at an odd root of unity.
//!
//! All arithmetic is in the cyclotomic field ℚ(ζ_N) ([`Field`], [`CycloNum`]). The algebra
//! itself is [`Uq`], with elements in the PBW basis `X₊ᵃ X₋ᵇ Kᶜ`. On top of it:
//!
//! - [`star`]: the Hopf and twisted star structures
//! - [`fun`] and [`plane`]: the dual Hopf algebra ℱ and the quantum plane ℳ
//! - [`rep`]: representations, the radical and projective covers
//! - [`forms`]: invariant hermitian forms and exact signatures
//! - [`killing`]: the adjoint action, Killing form and integrals
//! - [`tensor`] and [`double`]: tensor products and the `K^{2N} = 1` double
//!
//! ```
//! use uqsl2::{StarKind, StarStructure, Uq};
//!
//! let h = Uq::new(3)?;
//! let s = StarStructure::builtin(&h, StarKind::TwistedPlus);
//! assert_eq!(s.apply(&h, &h.xp()), h.xm());
//! # Ok::<(), uqsl2::Error>(())
//! ```

pub mod cyclo;
pub mod double;
pub mod error;
pub mod forms;
pub mod fun;
pub mod hopf;
pub mod interval;
pub mod killing;
pub mod linalg;
pub mod plane;
pub mod rep;
pub mod star;
pub mod tensor;

pub use cyclo::{CycloNum, EmbeddingChoice, Field};
pub use error::{Error, Result};
pub use forms::{signature, FormSolutionSpace, Signature};
pub use fun::{FElement, FGen, FMonomial, FunAlgebra};
pub use hopf::{Generator, HElement, HTensor, LawReport, PbwMonomial, Uq};
pub use linalg::{Matrix, Subspace, Vector};
pub use plane::{MElement, QuantumPlane};
pub use rep::{Representation, Structure};
pub use star::{CoproductLaw, StarKind, StarStructure};

macro_rules! book {
    ($($m:ident => $f:literal),* $(,)?) => {
        $(
            #[cfg(doctest)]
            #[doc = include_str!(concat!("../../../book/src/", $f))]
            mod $m {}
        )*
    };
}

book! {
    book_introduction => "introduction.md",
    book_field => "field.md",
    book_hopf => "hopf.md",
    book_stars => "stars.md",
    book_functions => "functions.md",
    book_representations => "representations.md",
    book_forms => "forms.md",
    book_killing => "killing.md",
    book_tensor => "tensor.md",
    book_double => "double.md",
    book_cli => "cli.md",
}
