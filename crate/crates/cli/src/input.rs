//! Reading inputs: file paths (`-` for stdin) and inline values.

use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use letgraph::Permutation;

use crate::output::{CliError, CliResult};

pub fn read(path: &Path) -> CliResult<String> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

/// Reads and parses a file in the library's text format.
pub fn load<T>(path: &Path) -> CliResult<T>
where
    T: FromStr<Err = letgraph::Error>,
{
    Ok(read(path)?.parse()?)
}

pub fn perm(text: &str) -> CliResult<Permutation> {
    Ok(text.parse()?)
}
