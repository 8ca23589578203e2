//! π₀ and π₁ of simplicial complexes, guided loop groups of global
//! quotients and the exact sequence relating them.

pub mod fp;
pub mod intmat;
mod guided;
mod pi1;
mod sequence;

pub use fp::{AbelianInvariants, FpGroup, Word};
pub use guided::{change_basepoint, conj_action, guided_pi1, BasepointChange, GuidedPi1};
pub use pi1::{generator_name, pi0, pi1_presentation, Component, Pi1Presentation};
pub use sequence::{
    pi0_isotropy, sequence_check, sequence_check_all, IsotropyClass, Junction, SequenceReport, Verdict,
};
