use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("cyclic orientation: all arrows point the same way around the cycle")]
    CyclicOrientation,

    #[error("invalid orientation word: {0}")]
    InvalidOrientation(String),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("not a string algebra: {0}")]
    NotStringAlgebra(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("letters {position} and {next} do not compose")]
    NotComposable { position: usize, next: usize },

    #[error("unreduced: letter {position} is followed by its own inverse")]
    Unreduced { position: usize },

    #[error("string contains the relation {0}")]
    RelationViolation(String),

    #[error("band parameter must be nonzero")]
    ZeroParameter,

    #[error("band multiplicity must be at least 1")]
    ZeroMultiplicity,

    #[error("not a band: {0}")]
    InvalidBand(String),

    #[error("quiver is not an acyclic orientation of a cycle")]
    NotCycleQuiver,

    #[error("representation is decomposable")]
    Decomposable,

    #[error("{0} is not quasi-simple")]
    NotQuasiSimple(String),

    #[error("the translate of a projective module is zero")]
    ProjectiveTranslate,

    #[error("simple modules have no proper nonzero submodules")]
    SimpleModule,

    #[error("measure {0} is not realized by an enumerated module")]
    MeasureNotRealized(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("general string algebras: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
