//! Non-integrability tests and the case analysis that combines them.

pub mod logtest;
pub mod residue;
pub mod resonance;
pub mod theorem;
pub mod verdict;

pub use logtest::{
    commutator, families_commute, galois_local_classify, log_family, log_obstruction_test, unipotent_family,
    GaloisClass, GaloisFamily, LogTest, Matrix2,
};
pub use residue::{residue_obstruction, Chart, ResidueEntry, ResidueReport};
pub use resonance::{branching_test, denominator_gate, f_for_resonance, resonance_parameter, ResonanceParameter};
pub use theorem::{classify_quartic, theorem_evaluator, QuarticClass};
pub use verdict::{Obstruction, ObstructionKind, Outcome, VanishingLocus, Verdict};
