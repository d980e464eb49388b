//! Multisegment combinatorics: the Moeglin-Waldspurger involution, a ladder-valued
//! RSK correspondence with its inverse, socle recursions, the row-word picture
//! and a Grothendieck-ring layer, plus exhaustive verification suites.

pub mod error;
pub mod harness;
pub mod mw;
pub mod ring;
pub mod rsk;
pub mod segment;
pub mod socle;
pub mod tableaux;
pub mod words;

pub use error::{Error, Result};
pub use segment::{Ladder, Multisegment, Segment};
