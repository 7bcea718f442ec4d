pub mod cone;
pub mod linalg;
pub mod monoid_ops;
pub mod polarized;
pub mod split;

pub use cone::RationalCone;
pub use monoid_ops::{DivisibilityReport, MonoidInfo};
pub use polarized::{AxiomOutcome, PolarizedReport, PolarizedTriple};
pub use split::PyramidSplit;
