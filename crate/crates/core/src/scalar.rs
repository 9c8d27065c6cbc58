//! Coefficient fields.
//!
//! Everything in `polycore` and `localring` is generic over [`Field`]. The
//! library only ever instantiates exact fields: floating point is not a
//! field in the sense required here (quotient dimensions depend on exact
//! cancellation), so there is no impl for `f32`/`f64`.

use std::fmt;
use std::ops::Neg;

use num_bigint::{BigInt, ToBigInt};
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, One, Signed, Zero};

/// An exact coefficient field.
pub trait Field:
    Clone + PartialEq + fmt::Debug + fmt::Display + Num + Neg<Output = Self> + Send + Sync + 'static
{
    /// Converts the reduced fraction `numer/denom` into the field, or `None`
    /// if it is not representable (overflow for fixed-width backends).
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Option<Self>;

    /// Exact rational value of this element.
    fn to_ratio(&self) -> BigRational;

    /// Scalar `s` such that `s * c` for all `c` in `coeffs` are coprime
    /// integers whose first entry is positive. Zero coefficients are
    /// ignored; an empty input yields one.
    fn primitive_factor<'a, I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
        Self: 'a;

    fn from_i64(value: i64) -> Self {
        Self::from_ratio(&BigInt::from(value), &BigInt::one()).expect("small integers are representable")
    }
}

impl<T> Field for Ratio<T>
where
    T: Integer + Signed + Clone + ToBigInt + TryFrom<BigInt> + fmt::Debug + fmt::Display + Send + Sync + 'static,
{
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Option<Self> {
        if denom.is_zero() {
            return None;
        }
        let n = T::try_from(numer.clone()).ok()?;
        let d = T::try_from(denom.clone()).ok()?;
        Some(Ratio::new(n, d))
    }

    fn to_ratio(&self) -> BigRational {
        BigRational::new(
            self.numer().to_bigint().expect("integer backend converts to BigInt"),
            self.denom().to_bigint().expect("integer backend converts to BigInt"),
        )
    }

    fn primitive_factor<'a, I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
        Self: 'a,
    {
        let mut denom_lcm = T::one();
        let mut numer_gcd = T::zero();
        let mut first_negative = None;
        for c in coeffs {
            if c.is_zero() {
                continue;
            }
            if first_negative.is_none() {
                first_negative = Some(c.is_negative());
            }
            denom_lcm = denom_lcm.lcm(c.denom());
            numer_gcd = numer_gcd.gcd(c.numer());
        }
        let Some(negative) = first_negative else {
            return Self::one();
        };
        // After scaling by lcm(denominators) every numerator is multiplied by
        // lcm/den_i, which is coprime to numer_i's denominator; the content
        // of the scaled vector is gcd(numerators) * lcm / lcm = gcd.
        let factor = Ratio::new(denom_lcm, numer_gcd);
        if negative {
            -factor
        } else {
            factor
        }
    }
}
