use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("root of unity order must be positive")]
    ZeroOrder,
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent {exponent} is not coprime to {order}")]
    NotCoprime { exponent: i64, order: u32 },
    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: i32, strands: usize },
    #[error("word has {found} strands, expected {expected}")]
    StrandMismatch { expected: usize, found: usize },
    #[error("braid is not pure")]
    NotPure,
    #[error("parameter q = -1 gives an abelian representation")]
    AbelianParameter,
    #[error("matrix is not unitary (defect {0:.3e})")]
    NotUnitary(f64),
    #[error("degenerate parameter: {0}")]
    Degenerate(String),
    #[error("matrix does not preserve the unit disk (defect {0:.3e})")]
    NotDiskPreserving(f64),
    #[error("isometry is {0}, expected elliptic")]
    NotElliptic(&'static str),
    #[error("odd root order {0}: the image is the (2,3,{0}) triangle group, use the sub-triangle path")]
    OddOrder(u32),
    #[error("triangle group ({0},{0},{0}) is not hyperbolic")]
    NotHyperbolic(u32),
    #[error("element is not in the commutator subgroup (abelian image {0:?})")]
    NotInCommutator(Vec<i64>),
    #[error("word is not a conjugate of generator x{0}")]
    NotConjugate(usize),
    #[error("pure braid rewrite failed: {0}")]
    Rewrite(String),
    #[error("relation check failed: {0}")]
    RelationFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
