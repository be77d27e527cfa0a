//! Runs the code samples of the guide in `book/` as doc tests. Each chapter
//! is its own module so a failure points at the file it came from.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/model.md")]
pub mod model {}
#[doc = include_str!("../../../book/src/negativity.md")]
pub mod negativity {}
#[doc = include_str!("../../../book/src/ground_states.md")]
pub mod ground_states {}
#[doc = include_str!("../../../book/src/thermal.md")]
pub mod thermal {}
#[doc = include_str!("../../../book/src/oracle.md")]
pub mod oracle {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
