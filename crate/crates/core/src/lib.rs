pub mod checks;
pub mod hopfcore;
pub mod linalg;
pub mod scalars;
pub mod catalog;
pub mod repmod;
pub mod ydcat;
pub mod nichols;
pub mod bosonization;
pub mod report;

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/overview.md")]
    pub mod overview {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    pub mod scalars {}
    #[doc = include_str!("../../../book/src/hopf.md")]
    pub mod hopf {}
    #[doc = include_str!("../../../book/src/modules.md")]
    pub mod modules {}
    #[doc = include_str!("../../../book/src/yd.md")]
    pub mod yd {}
    #[doc = include_str!("../../../book/src/nichols.md")]
    pub mod nichols {}
    #[doc = include_str!("../../../book/src/bosonization.md")]
    pub mod bosonization {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
    #[doc = include_str!("../../../book/src/findings.md")]
    pub mod findings {}
}
