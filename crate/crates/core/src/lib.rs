pub mod certificate;
pub mod config;
pub mod error;
pub mod exactlinalg;
pub mod partitions;
pub mod qdual;
pub mod quiver;
pub mod resolution;
pub mod signs;
pub mod symgroup;

pub use certificate::{Certificate, Verdict};
pub use config::Bounds;
pub use error::{Error, Result};
pub use partitions::{Diamond, Node, Partition, SkewClass};

// The guide's code blocks run as doc-tests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/young-lattice.md")]
    mod young_lattice {}
    #[doc = include_str!("../../../book/src/group-algebra.md")]
    mod group_algebra {}
    #[doc = include_str!("../../../book/src/signs.md")]
    mod signs {}
    #[doc = include_str!("../../../book/src/resolutions.md")]
    mod resolutions {}
    #[doc = include_str!("../../../book/src/quadratic-duality.md")]
    mod quadratic_duality {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
}
