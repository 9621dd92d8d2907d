//! The guide in `book/` is compiled here so its listings run as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}
#[doc = include_str!("../../../book/src/rings.md")]
mod rings {}
#[doc = include_str!("../../../book/src/hilbert.md")]
mod hilbert {}
#[doc = include_str!("../../../book/src/resolutions.md")]
mod resolutions {}
#[doc = include_str!("../../../book/src/koszulness.md")]
mod koszulness {}
#[doc = include_str!("../../../book/src/constructions.md")]
mod constructions {}
#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}
