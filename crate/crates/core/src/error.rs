use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} is outside the supported range")]
    PrimeTooLarge(u64),
    #[error("zero has no unit part")]
    ZeroInput,
    #[error("{value} is not invertible modulo {prime}")]
    NotInvertible { value: String, prime: u64 },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial {0} is not monic")]
    NotMonic(String),
    #[error("modulus {0} is not irreducible")]
    ReducibleModulus(String),
    #[error("field of order {0} is too large")]
    FieldTooLarge(String),
    #[error("mismatched fields")]
    FieldMismatch,
    #[error("side does not belong to the principal polygon")]
    SideNotOnPolygon,
    #[error("phi does not reduce to an irreducible factor of F modulo {0}")]
    PhiNotAFactor(u64),
    #[error("polynomial is not {0}-regular")]
    NotRegular(u64),
    #[error("degenerate trinomial (zero discriminant)")]
    ZeroDiscriminant,
    #[error("trinomial is reducible over Q")]
    Reducible,
    #[error("trinomial is not normalized at {0}")]
    NotNormalized(u64),
    #[error("no rule matches (a, b) = ({a}, {b}) at p = {p}")]
    Unclassified { a: String, b: String, p: u64 },
    #[error("could not factor {0} within the effort bound")]
    Indeterminate(String),
}
