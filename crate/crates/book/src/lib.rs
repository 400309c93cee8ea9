//! The code listings of the guide in `book/src`, run as doc-tests so the
//! guide cannot drift from the library. One module per chapter, so a failing
//! listing names its chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/root-systems.md")]
pub mod root_systems {}
#[doc = include_str!("../../../book/src/classes-and-parabolics.md")]
pub mod classes_and_parabolics {}
#[doc = include_str!("../../../book/src/character-tables.md")]
pub mod character_tables {}
#[doc = include_str!("../../../book/src/induction.md")]
pub mod induction {}
#[doc = include_str!("../../../book/src/deligne-lusztig.md")]
pub mod deligne_lusztig {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
