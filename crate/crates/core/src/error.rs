use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("word expands to more than {limit} letters")]
    TooLong { limit: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("closure has {components} components")]
    NotAKnot { components: usize },
    #[error("closure is not strongly quasipositive (n = {n} < 0)")]
    NotStronglyQuasipositive { n: i64 },
    #[error("the signature formula does not apply to Garside case {case}")]
    UnsupportedCase { case: char },
    #[error("not a valid Xu normal form: {0}")]
    InvalidForm(String),
    #[error("Seifert surface is disconnected: generator {missing} never occurs")]
    DisconnectedSurface { missing: char },
    #[error("angle {angle} is within tolerance of a root of the Alexander polynomial")]
    AtJump { angle: f64 },
}

impl Error {
    /// Short stable tag for machine-readable reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotAKnot { .. } => "not_a_knot",
            Error::NotStronglyQuasipositive { .. } => "not_strongly_quasipositive",
            Error::UnsupportedCase { .. } => "unsupported_case",
            Error::InvalidForm(_) => "invalid_form",
            Error::DisconnectedSurface { .. } => "disconnected_surface",
            Error::AtJump { .. } => "at_jump",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
