//! Reading and writing instances, DOT output.

pub mod dot;
pub mod text;

pub use dot::{export_dot, export_quotient_dot, export_weighted_dot, DotOptions};
pub use text::{format_instance, parse_instance};
