use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational scalar. Values are kept reduced with a
/// positive denominator by the underlying representation, so equality is
/// structural and arithmetic never rounds.
pub type Rational = BigRational;

/// Commutative ring interface shared by scalars and polynomials.
///
/// `exact_div` is ring division without remainder: it returns `None` when
/// the divisor is zero or does not divide `self` exactly. Fraction-free
/// elimination depends on those divisions succeeding.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Whether the element mentions a variable with this name. Scalars
    /// never do; polynomial rings consult their variable sets so that
    /// fresh variables can be chosen without capture.
    fn uses_var(&self, _name: &str) -> bool {
        false
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
}

/// Shorthand for small integer rationals in tests.
#[cfg(test)]
pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
