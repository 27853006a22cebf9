//! Text formats, diagrams, reports and the command-line driver.

pub mod command;
pub mod render;
pub mod report;
pub mod text;

pub use command::run;
pub use render::{render_diagram, Format};
pub use report::{report, Report};
pub use text::{format_word, parse_word};
