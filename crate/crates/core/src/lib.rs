//! Split root systems, Weyl-group double cosets and apartment geometry for
//! generalized Steinberg representations of split reductive p-adic groups.
//!
//! Group-level objects are represented by their combinatorial shadows:
//! parabolic subgroups by subsets `I ⊆ Δ` and `W_I`, parahoric and
//! root-group data by per-root level vectors, and Iwasawa cells by Weyl
//! double cosets. Everything is exact; there is no floating point.
//!
//! ```
//! use parahoric::{RootSystem, WeylGroup, Subset, steinberg};
//!
//! let rs = RootSystem::from_str_spec("B2").unwrap();
//! let w = WeylGroup::generate(&rs).unwrap();
//! assert_eq!(w.order(), 8);
//! let st = steinberg::steinberg_polynomial(&w, Subset::EMPTY);
//! assert_eq!(st.to_string(), "q^4");
//! assert!(!parahoric::parabolics::is_admissible(&rs, Subset::full(2)));
//! ```

pub mod alcove;
pub mod cli;
pub mod error;
pub mod levels;
pub mod parabolics;
pub mod rootsys;
pub mod steinberg;
pub mod verdict;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{CartanType, Coweight, Point, Root, RootSystem, RootSystemSpec};
pub use weyl::{DoubleCosetTable, Side, Subset, WeylElement, WeylGroup};
