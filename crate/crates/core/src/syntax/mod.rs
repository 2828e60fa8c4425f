//! Text front end: the distribution grammar and its renderers.

mod format;
mod parser;

pub use format::{format_dist, Format};
pub use parser::{parse_dist, parse_smooth};
