use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero is not allowed here")]
    Zero,

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("the prime 2 is not supported by {0}")]
    EvenPrime(&'static str),

    #[error("{value} is divisible by {prime}")]
    DivisibleByPrime { value: String, prime: u64 },

    #[error("elements over different primes ({0} and {1})")]
    PrimeMismatch(u64, u64),

    #[error("precision {requested} outside 1..={max}")]
    PrecisionOutOfRange { requested: i64, max: u32 },

    #[error("result is known to fewer than one digit")]
    PrecisionUnderflow,

    #[error("{0} is not a p-adic unit")]
    NotUnit(String),

    #[error("{0} is not congruent to 1 mod p")]
    NotOneModP(String),

    #[error("{value} is not a topological generator of the {ell}-adic units")]
    NotGenerator { value: String, ell: u64 },

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("integer too large: {0}")]
    TooLarge(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: &'static str },
}
