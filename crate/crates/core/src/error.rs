use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by the solver library.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A parameter lies outside the range the operation accepts.
    Domain { name: &'static str, value: f64, expected: &'static str },
    /// Vector lengths disagree.
    DimensionMismatch { expected: usize, found: usize },
    /// A numerical routine could not certify its accuracy target.
    AccuracyNotAchieved { routine: &'static str, detail: &'static str },
    /// A spatial profile could not be evaluated at a required point.
    ProfileEvaluation { profile: &'static str, x: f64, y: f64 },
    /// The operation needs closed-form eigenpairs the operator does not have.
    NotDiagonalizable,
    /// A textual configuration fragment could not be parsed.
    Parse { input: alloc::string::String, reason: &'static str },
    /// Meshes in a refinement chain are not nested.
    NonNestedMeshes { coarse: usize, fine: usize },
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, expected: &'static str) -> Self {
        Error::Domain { name, value, expected }
    }

    /// True for errors caused by bad input rather than numerical breakdown.
    pub fn is_config_error(&self) -> bool {
        matches!(
            self,
            Error::Domain { .. } | Error::Parse { .. } | Error::NonNestedMeshes { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { name, value, expected } => {
                write!(f, "{name} = {value} is out of range (expected {expected})")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::AccuracyNotAchieved { routine, detail } => {
                write!(f, "{routine}: accuracy target not achieved ({detail})")
            }
            Error::ProfileEvaluation { profile, x, y } => {
                write!(f, "profile `{profile}` is not finite at ({x}, {y})")
            }
            Error::NotDiagonalizable => {
                f.write_str("operator has no closed-form eigen-decomposition")
            }
            Error::Parse { input, reason } => write!(f, "cannot parse `{input}`: {reason}"),
            Error::NonNestedMeshes { coarse, fine } => {
                write!(f, "mesh with M = {fine} is not a refinement of M = {coarse}")
            }
        }
    }
}

impl core::error::Error for Error {}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn display_mentions_parameter() {
        let e = Error::domain("alpha", 1.5, "0 < alpha < 1");
        assert!(e.to_string().contains("alpha = 1.5"));
        assert!(e.is_config_error());
        assert!(!Error::NotDiagonalizable.is_config_error());
    }
}
