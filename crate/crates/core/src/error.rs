use thiserror::Error;

/// Errors surfaced by validating constructors and sum evaluations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p and q must be coprime (got p = {p}, q = {q})")]
    NotCoprime { p: i64, q: i64 },

    #[error("modulus must be positive (got p = {0})")]
    NonPositiveModulus(i64),

    #[error("modular inversion needs a modulus of at least 2 (got p = {0})")]
    InversionModulus(i64),

    #[error("p = 0 does not define a lens space")]
    ZeroOrder,

    #[error("lens space order {0} exceeds the supported bound of 2^31 - 1")]
    OrderTooLarge(i64),

    #[error(
        "reciprocity needs 0 < q < p coprime and 0 <= n < p + q (got p = {p}, q = {q}, n = {n})"
    )]
    ReciprocityRange { p: i64, q: i64, n: i64 },

    #[error("Alexander polynomial must satisfy \u{0394}(1)=\u{00b1}1 (got \u{0394}(1) = {0})")]
    AlexanderNormalization(i128),

    #[error("Alexander polynomial needs at least one coefficient")]
    EmptyAlexanderPolynomial,

    #[error("surgery slope must have p >= 1 and q >= 1 (got p = {p}, q = {q})")]
    NonPositiveSurgery { p: i64, q: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
