//! Rational functions over `F_q` in canonical form, places of `F_q(t)` and
//! the attached valuations.
//!
//! Canonical form: reduced fraction, monic denominator, zero stored as `0/1`.
//! Structural equality on `RatFunc` is therefore value equality.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::factor::is_irreducible;
use super::field::FieldDescriptor;
use super::poly::Polynomial;
use super::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Polynomial,
    den: Polynomial,
}

/// A place of `F_q(t)`: the zero place `t`, the infinite place `t^(-1)`, or a
/// finite place given by a monic irreducible polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Place {
    Zero,
    Infinity,
    Finite(Polynomial),
}

impl Place {
    /// A finite place; the polynomial must be monic irreducible.
    pub fn finite(field: &FieldDescriptor, q: Polynomial) -> Result<Place, AlgebraError> {
        if !q.is_monic(field) {
            return Err(AlgebraError::PlaceNotMonic);
        }
        if !is_irreducible(field, &q) {
            return Err(AlgebraError::PlaceReducible);
        }
        Ok(Place::Finite(q))
    }
}

/// Additive order of vanishing at a place, with `Infinity` as the value at 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Valuation {
    Finite(BigInt),
    Infinity,
}

impl Valuation {
    pub fn finite(v: i64) -> Valuation {
        Valuation::Finite(BigInt::from(v))
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Valuation::Infinity)
    }

    pub fn as_finite(&self) -> Option<&BigInt> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }

    pub fn add(&self, other: &Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinity,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match (self, other) {
            (Valuation::Infinity, Valuation::Infinity) => Ordering::Equal,
            (Valuation::Infinity, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Finite(_), Valuation::Infinity) => Ordering::Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl RatFunc {
    /// Canonicalize `num/den`: reduce, make the denominator monic.
    pub fn new(
        field: &FieldDescriptor,
        num: Polynomial,
        den: Polynomial,
    ) -> Result<RatFunc, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: Polynomial::one(field),
            });
        }
        let (num, den) = if den.is_one(field) {
            (num, den)
        } else {
            let g = num.gcd_monic(field, &den);
            if g.is_one(field) {
                (num, den)
            } else {
                (num.exact_div(field, &g), den.exact_div(field, &g))
            }
        };
        let lc = den.leading_coeff().unwrap().clone();
        if lc == field.one() {
            Ok(RatFunc { num, den })
        } else {
            let inv = field.inv(&lc);
            Ok(RatFunc {
                num: num.mul_elem(field, &inv),
                den: den.mul_elem(field, &inv),
            })
        }
    }

    pub fn from_poly(field: &FieldDescriptor, num: Polynomial) -> RatFunc {
        RatFunc {
            num,
            den: Polynomial::one(field),
        }
    }

    /// Assemble from parts already known to be canonical (coprime, monic
    /// denominator). Used by the enumerator to skip redundant gcd work.
    pub(crate) fn from_canonical_parts(num: Polynomial, den: Polynomial) -> RatFunc {
        RatFunc { num, den }
    }

    pub fn zero(field: &FieldDescriptor) -> RatFunc {
        RatFunc::from_poly(field, Polynomial::zero())
    }

    pub fn one(field: &FieldDescriptor) -> RatFunc {
        RatFunc::from_poly(field, Polynomial::one(field))
    }

    pub fn t(field: &FieldDescriptor) -> RatFunc {
        RatFunc::from_poly(field, Polynomial::t(field))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self, field: &FieldDescriptor) -> bool {
        self.den.is_one(field)
    }

    /// `max(deg num, deg den)`, with the zero function at height 0.
    pub fn height(&self) -> BigUint {
        let dn = self.num.degree().cloned().unwrap_or_else(BigUint::zero);
        let dd = self.den.degree().cloned().unwrap_or_else(BigUint::zero);
        dn.max(dd)
    }

    pub fn add(&self, field: &FieldDescriptor, other: &RatFunc) -> RatFunc {
        let num = self
            .num
            .mul(field, &other.den)
            .add(field, &other.num.mul(field, &self.den));
        let den = self.den.mul(field, &other.den);
        RatFunc::new(field, num, den).unwrap()
    }

    pub fn sub(&self, field: &FieldDescriptor, other: &RatFunc) -> RatFunc {
        self.add(field, &other.neg(field))
    }

    pub fn neg(&self, field: &FieldDescriptor) -> RatFunc {
        RatFunc {
            num: self.num.neg(field),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, field: &FieldDescriptor, other: &RatFunc) -> RatFunc {
        let num = self.num.mul(field, &other.num);
        let den = self.den.mul(field, &other.den);
        RatFunc::new(field, num, den).unwrap()
    }

    pub fn inv(&self, field: &FieldDescriptor) -> Result<RatFunc, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        RatFunc::new(field, self.den.clone(), self.num.clone())
    }

    pub fn div(&self, field: &FieldDescriptor, other: &RatFunc) -> Result<RatFunc, AlgebraError> {
        Ok(self.mul(field, &other.inv(field)?))
    }

    /// Order of vanishing at a place; `Valuation::Infinity` for the zero
    /// function. Satisfies `v(xy) = v(x) + v(y)` and
    /// `v(x+y) >= min(v(x), v(y))`.
    pub fn valuation(&self, field: &FieldDescriptor, place: &Place) -> Valuation {
        if self.is_zero() {
            return Valuation::Infinity;
        }
        match place {
            Place::Zero => {
                let on = BigInt::from(self.num.trailing_exponent().unwrap().clone());
                let od = BigInt::from(self.den.trailing_exponent().unwrap().clone());
                Valuation::Finite(on - od)
            }
            Place::Infinity => {
                let dn = BigInt::from(self.num.degree().unwrap().clone());
                let dd = BigInt::from(self.den.degree().unwrap().clone());
                Valuation::Finite(dd - dn)
            }
            Place::Finite(q) => {
                if q.as_monomial().map(|(e, _)| e == &BigUint::one()).unwrap_or(false) {
                    return self.valuation(field, &Place::Zero);
                }
                let mult = |f: &Polynomial| -> BigInt {
                    let mut count = BigInt::zero();
                    let mut rest = f.clone();
                    loop {
                        let (quot, rem) = rest.div_rem(field, q);
                        if !rem.is_zero() {
                            return count;
                        }
                        count += 1;
                        rest = quot;
                    }
                };
                Valuation::Finite(mult(&self.num) - mult(&self.den))
            }
        }
    }

    /// The multiplicative value `q^(-v(x))` at a place, as a pair
    /// `(numerator, denominator)` of natural numbers. The paper-facing form of
    /// the infinite-place value `q^deg` for polynomials.
    pub fn abs_value(&self, field: &FieldDescriptor, place: &Place) -> Option<(BigUint, BigUint)> {
        match self.valuation(field, place) {
            Valuation::Infinity => Some((BigUint::zero(), BigUint::one())),
            Valuation::Finite(v) => {
                let q = field.order();
                let e: u32 = v.abs().to_biguint().unwrap().try_into().ok()?;
                let power = q.pow(e);
                if v.is_negative() {
                    Some((power, BigUint::one()))
                } else {
                    Some((BigUint::one(), power))
                }
            }
        }
    }

    /// `self^k` for a signed exponent (negative powers invert).
    pub fn pow_i64(&self, field: &FieldDescriptor, k: i64) -> Result<RatFunc, AlgebraError> {
        let e = BigUint::from(k.unsigned_abs());
        let num = self.num.pow(field, &e);
        let den = self.den.pow(field, &e);
        if k >= 0 {
            RatFunc::new(field, num, den)
        } else {
            RatFunc::new(field, den, num)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::standard_field;
    use crate::algebra::text::parse_ratfunc;

    fn f3() -> FieldDescriptor {
        standard_field(3).unwrap()
    }

    #[test]
    fn normalize_cancels_common_factor() {
        let f = f3();
        // (t^2+t)/t -> (t+1)/1
        let num = Polynomial::from_coeffs(&f, &[0, 1, 1]);
        let den = Polynomial::t(&f);
        let x = RatFunc::new(&f, num, den).unwrap();
        assert_eq!(x.num(), &Polynomial::from_coeffs(&f, &[1, 1]));
        assert!(x.is_poly(&f));
    }

    #[test]
    fn normalize_scales_denominator_monic() {
        let f = f3();
        // (2t+2)/2 -> (t+1)/1
        let num = Polynomial::from_coeffs(&f, &[2, 2]);
        let den = Polynomial::from_coeffs(&f, &[2]);
        let x = RatFunc::new(&f, num, den).unwrap();
        assert_eq!(x.num(), &Polynomial::from_coeffs(&f, &[1, 1]));
        assert!(x.is_poly(&f));
    }

    #[test]
    fn zero_denominator_rejected() {
        let f = f3();
        assert_eq!(
            RatFunc::new(&f, Polynomial::t(&f), Polynomial::zero()).unwrap_err(),
            AlgebraError::ZeroDenominator
        );
    }

    #[test]
    fn equal_inputs_up_to_common_factor_identical() {
        let f = f3();
        let tp1 = Polynomial::from_coeffs(&f, &[1, 1]);
        let a = RatFunc::new(&f, Polynomial::t(&f).mul(&f, &tp1), tp1.mul(&f, &tp1)).unwrap();
        let b = RatFunc::new(&f, Polynomial::t(&f), tp1.clone()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn valuation_examples() {
        let f = f3();
        // t^2/(t+1) at Zero -> 2
        let x = parse_ratfunc(&f, "t^2/(t+1)").unwrap();
        assert_eq!(x.valuation(&f, &Place::Zero), Valuation::finite(2));
        // (t+1)/t^3 at Zero -> -3
        let y = parse_ratfunc(&f, "(t+1)/t^3").unwrap();
        assert_eq!(y.valuation(&f, &Place::Zero), Valuation::finite(-3));
        // t^9 - t^3 at Infinity -> -9, abs 3^9
        let z = parse_ratfunc(&f, "t^9+2*t^3").unwrap();
        assert_eq!(z.valuation(&f, &Place::Infinity), Valuation::finite(-9));
        let (n, d) = z.abs_value(&f, &Place::Infinity).unwrap();
        assert_eq!(n, BigUint::from(3u32).pow(9));
        assert_eq!(d, BigUint::one());
    }

    #[test]
    fn valuation_at_finite_place() {
        let f = f3();
        let tp1 = Polynomial::from_coeffs(&f, &[1, 1]);
        let place = Place::finite(&f, tp1.clone()).unwrap();
        let x = parse_ratfunc(&f, "(t^2+2*t+1)/t").unwrap(); // (t+1)^2/t
        assert_eq!(x.valuation(&f, &place), Valuation::finite(2));
        assert_eq!(x.valuation(&f, &Place::Zero), Valuation::finite(-1));
        // value at zero function
        assert!(RatFunc::zero(&f)
            .valuation(&f, &place)
            .is_infinity());
    }

    #[test]
    fn place_construction_checks() {
        let f = f3();
        // t^2+1 = (t+i)(t-i)? over F_3: t^2+1 is irreducible (no roots: 0->1,1->2,2->2)
        let q = Polynomial::from_coeffs(&f, &[1, 0, 1]);
        assert!(Place::finite(&f, q).is_ok());
        // t^2+2 = (t+1)(t+2) over F_3 has roots 1 and 2
        let r = Polynomial::from_coeffs(&f, &[2, 0, 1]);
        assert_eq!(
            Place::finite(&f, r).unwrap_err(),
            AlgebraError::PlaceReducible
        );
        let nm = Polynomial::from_coeffs(&f, &[1, 2]);
        assert_eq!(
            Place::finite(&f, nm).unwrap_err(),
            AlgebraError::PlaceNotMonic
        );
    }

    #[test]
    fn valuation_additive_on_samples() {
        let f = f3();
        let places = [
            Place::Zero,
            Place::Infinity,
            Place::finite(&f, Polynomial::from_coeffs(&f, &[1, 0, 1])).unwrap(),
        ];
        let samples = [
            "t", "t^2/(t+1)", "(t+1)/t^3", "(t^2+1)/(t+2)", "2*t+1", "1/(t^2+1)",
        ];
        for a in &samples {
            for b in &samples {
                let x = parse_ratfunc(&f, a).unwrap();
                let y = parse_ratfunc(&f, b).unwrap();
                for place in &places {
                    let vx = x.valuation(&f, place);
                    let vy = y.valuation(&f, place);
                    let vxy = x.mul(&f, &y).valuation(&f, place);
                    assert_eq!(vxy, vx.add(&vy));
                    let vsum = x.add(&f, &y).valuation(&f, place);
                    assert!(vsum >= vx.min(vy));
                }
            }
        }
    }
}
