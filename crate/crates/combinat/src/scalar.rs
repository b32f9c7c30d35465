//! Exact rational scalars used throughout the workspace.

use num_bigint::BigInt;
use num_rational::BigRational;

/// The scalar type of every exact computation: arbitrary-precision rationals.
pub type Scalar = BigRational;

/// Shorthand for an integer scalar.
pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

/// Shorthand for the fraction `p/q`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Integer scalar from a `BigInt`.
pub fn from_big(v: BigInt) -> Scalar {
    Scalar::from_integer(v)
}

/// Parses "7", "-3/4" etc. `BigRational`'s `FromStr` already accepts this
/// grammar; this wrapper just normalizes the error message.
pub fn parse(s: &str) -> Result<Scalar, crate::InputError> {
    s.trim().parse::<Scalar>().map_err(|e| crate::InputError::Invalid {
        what: "rational",
        reason: format!("{s:?}: {e}"),
    })
}

/// `base^exp` for signed integer exponents (exp < 0 requires base != 0).
pub fn powi(base: &Scalar, exp: i64) -> Scalar {
    base.pow(exp as i32)
}
