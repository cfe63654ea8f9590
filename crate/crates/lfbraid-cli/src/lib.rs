//! Library half of the `lfbraid` command-line tool: document formats,
//! seeded random generators, and the verification property suite shared
//! between the `verify` subcommand and the acceptance tests.

pub mod formats;
pub mod gen;
pub mod verify;
