//! Parser, workspace and command layer behind the `neutra` binary.

pub mod commands;
pub mod format;
pub mod lex;
pub mod parse;
pub mod workspace;

pub use commands::{run, BiCmd, Cmd, FuzzyCmd};
pub use format::{parse_machine, Format, Report, EXIT_BUDGET, EXIT_ERROR, EXIT_FAIL, EXIT_PASS};
pub use parse::{parse_element, parse_workspace, ParseError};
pub use workspace::{Binding, Workspace};
