use thiserror::Error;

use crate::parametrization::SingularFactor;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero input where a nonzero value is required")]
    ZeroInput,
    #[error("modulus must be positive")]
    InvalidModulus,
    #[error("{0} is not square-free")]
    NotSquareFree(String),
    #[error("singular parameter point: {}", list_factors(.0))]
    SingularInput(Vec<SingularFactor>),
    #[error("degenerate curve parameter: {0}")]
    DegenerateParameter(&'static str),
    #[error("exceptional point w = {0} (w = ±1 lies outside the α-lift)")]
    ExceptionalPoint(String),
    #[error("point is not on the curve: {0}")]
    OffCurve(String),
    #[error("degenerate cubic curve (P = 0)")]
    DegenerateCurve,
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

fn list_factors(factors: &[SingularFactor]) -> String {
    factors
        .iter()
        .map(|f| f.name())
        .collect::<Vec<_>>()
        .join(", ")
}
