use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("invalid Coxeter matrix: {0}")]
    Validation(String),

    #[error("generator subset {subset:?} is not contained in {ambient:?}")]
    NotSubset { subset: Vec<usize>, ambient: Vec<usize> },

    #[error("generator subset {0:?} contains an infinite bond")]
    InfiniteLabel(Vec<usize>),

    #[error("group enumeration exceeded the budget of {0} elements")]
    BudgetExceeded(usize),

    #[error("inexact polynomial division")]
    InexactDivision,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("boundary matrices of degrees {degree} and {next} are not composable")]
    ShapeMismatch { degree: usize, next: usize },

    #[error("boundary composition is nonzero in degree {0}")]
    NonZeroSquare(usize),

    #[error("conjugation by element {element} does not preserve the generator set")]
    NotGeneratorConjugate { element: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
