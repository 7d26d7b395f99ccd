//! Paths, polyominoes and their statistics.

mod composition;
mod family;
mod path;
mod polyomino;

pub use composition::Composition;
pub use family::{is_shuffle_of, validate_family, Family};
pub use path::{DecoratedLabelledPath, DinvPair, DinvKind, PathRecord};
pub use polyomino::{Letter, PolyominoPaths, PolyominoStats, PolyominoWord, Step};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("invalid area word: {0}")]
    AreaWord(String),
    #[error("invalid labels: {0}")]
    Labels(String),
    #[error("invalid decorations: {0}")]
    Decorations(String),
    #[error("invalid ghost row: {0}")]
    Ghost(String),
    #[error("invalid polyomino word: {0}")]
    Word(String),
    #[error("invalid polyomino geometry: {0}")]
    Geometry(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not a member of {family}: {reason}")]
    NotMember { family: String, reason: String },
}
