pub mod base;
pub mod element;
pub mod exponent;
pub mod monoid;

pub use base::{BaseRing, Coeff};
pub use element::{RingDesc, RingElement, UnitAnswer};
pub use exponent::{Exp, ExponentVector};
pub use monoid::{MonoidKind, MonoidSpec};
