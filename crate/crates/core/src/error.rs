use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown identifier `{name}` at position {pos}")]
    UnknownIdentifier { name: String, pos: usize },
    #[error("invalid exponent at position {pos}: {msg}")]
    BadExponent { pos: usize, msg: String },

    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("the origin is not on the curve")]
    OriginNotOnCurve,
    #[error("singular coordinate change (determinant 0)")]
    SingularMatrix,
    #[error("total degree {degree} exceeds the factorization cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },

    #[error("isolating region contains {found} roots, expected exactly one")]
    NotIsolating { found: usize },
    #[error("defining polynomial is not square-free")]
    NotSquareFree,
    #[error("division by zero")]
    DivisionByZero,
    #[error("number is not real")]
    NotReal,
    #[error("multiset is not closed under complex conjugation")]
    NotConjugationClosed,

    #[error("segment is not on the Newton polygon")]
    NotOnPolygon,
    #[error("polynomial is divisible by x (vertical tangent)")]
    VerticalTangent,

    #[error("expansion exceeded the exponent cap {cap} before the branches separated")]
    CapExceeded { cap: String },
    #[error("curve has a multiple component")]
    MultipleComponent,

    #[error("branches are not pairwise separated")]
    NotSeparated,

    #[error("point ({x}, {y}) is not a singular point of the curve")]
    NotSingular { x: String, y: String },
}

pub type Result<T> = std::result::Result<T, Error>;
