use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Field;

impl Field for BigRational {
    type Context = ();

    fn context(&self) {}

    fn zero_in(_: &()) -> Self {
        BigRational::zero()
    }

    fn one_in(_: &()) -> Self {
        BigRational::one()
    }

    fn from_rational_in(_: &(), q: &BigRational) -> Self {
        q.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_basics() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(Field::inverse(&q(-3, 7)), Some(q(-7, 3)));
        assert_eq!(Field::inverse(&q(0, 7)), None);
        assert_eq!(Field::pow(&q(2, 3), 3), q(8, 27));
        assert_eq!(Field::powi(&q(2, 3), -2), Some(q(9, 4)));
    }
}
