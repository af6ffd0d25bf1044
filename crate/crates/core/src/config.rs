use crate::error::Error;
use crate::rack::DEFAULT_ELEMENT_CAP;

/// Resource limits and defaults shared by the library and the CLI.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Largest rack handled by the cohomology routines.
    pub size_limit: usize,
    /// Bound on the number of elements when enumerating `Inn(Q)`.
    pub inner_group_cap: usize,
    /// Truncation order `N` of `Q[h]/(h^N)`.
    pub truncation: usize,
    /// Largest row count of an assembled coboundary matrix.
    pub max_matrix_rows: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            size_limit: 8,
            inner_group_cap: DEFAULT_ELEMENT_CAP,
            truncation: 3,
            max_matrix_rows: 1 << 22,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), Error> {
        if self.size_limit == 0 || self.inner_group_cap == 0 || self.truncation == 0 || self.max_matrix_rows == 0 {
            return Err(Error::OutOfRange("configuration limits must be positive".into()));
        }
        Ok(())
    }

    pub fn check_rack_size(&self, n: usize) -> Result<(), Error> {
        if n > self.size_limit {
            return Err(Error::SizeLimit(format!("rack of size {n} exceeds the limit {}", self.size_limit)));
        }
        Ok(())
    }
}
