//! Exact base rings (Z, Q, Z_n) extended by the idempotent indeterminate I,
//! together with the fuzzy value lattice N([0, 1]).
//!
//! Every number here is `a + bI` with `I * I = I`; the coefficients live in
//! one of the three base rings and are always kept canonical: rationals
//! gcd-reduced with positive denominator, modular residues in `[0, n)`.
//! There is no floating point anywhere in the kernel.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn narrow(v: i128) -> i64 {
    i64::try_from(v)
        .unwrap_or_else(|_| panic!("exact coefficient arithmetic overflowed 64 bits"))
}

/// A gcd-reduced rational with positive denominator. Integer and modular
/// coefficients are stored with denominator 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        Self::reduce(num as i128, den as i128)
    }

    fn reduce(num: i128, den: i128) -> Rational {
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = gcd(num, den);
        if g == 0 {
            return Rational::ZERO;
        }
        Rational {
            num: narrow(num / g),
            den: narrow(den / g),
        }
    }

    pub fn from_int(n: i64) -> Rational {
        Rational { num: n, den: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn add(&self, rhs: &Rational) -> Rational {
        Self::reduce(
            self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128,
            self.den as i128 * rhs.den as i128,
        )
    }

    pub fn sub(&self, rhs: &Rational) -> Rational {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Rational) -> Rational {
        Self::reduce(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
        )
    }

    pub fn neg(&self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// The coefficient ring a structure lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseRing {
    Integer,
    Rational,
    Modular(u64),
}

impl BaseRing {
    pub fn modular(n: u64) -> Result<BaseRing> {
        if n < 2 {
            return Err(Error::Internal(format!("modulus {n} must be at least 2")));
        }
        Ok(BaseRing::Modular(n))
    }

    /// Canonicalize a raw rational as a coefficient of this ring.
    /// Integer and modular rings reject proper fractions.
    pub fn canon(&self, value: Rational) -> Result<Rational> {
        match self {
            BaseRing::Rational => Ok(value),
            BaseRing::Integer => {
                if value.is_integer() {
                    Ok(value)
                } else {
                    Err(Error::NotExactInRing(format!("{value} over Z")))
                }
            }
            BaseRing::Modular(n) => {
                if !value.is_integer() {
                    return Err(Error::NotExactInRing(format!("{value} over Z{n}")));
                }
                let n = *n as i128;
                let r = ((value.numer() as i128 % n) + n) % n;
                Ok(Rational::from_int(narrow(r)))
            }
        }
    }

    fn canon_unchecked(&self, value: Rational) -> Rational {
        self.canon(value).expect("coefficient stayed integral")
    }
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseRing::Integer => write!(f, "Z"),
            BaseRing::Rational => write!(f, "Q"),
            BaseRing::Modular(n) => write!(f, "Z{n}"),
        }
    }
}

/// `a + bI` over a base ring, the atom every carrier element is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NeutroNumber {
    ring: BaseRing,
    real: Rational,
    icoef: Rational,
}

/// Partition of nonzero-ness between the real part and the I part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumberClass {
    PureNeutrosophic,
    RealOnly,
    Zero,
}

impl NeutroNumber {
    pub fn new(ring: BaseRing, real: Rational, icoef: Rational) -> Result<NeutroNumber> {
        Ok(NeutroNumber {
            ring,
            real: ring.canon(real)?,
            icoef: ring.canon(icoef)?,
        })
    }

    /// Convenience constructor from integer coefficients; always exact.
    pub fn from_ints(ring: BaseRing, real: i64, icoef: i64) -> NeutroNumber {
        NeutroNumber {
            ring,
            real: ring.canon_unchecked(Rational::from_int(real)),
            icoef: ring.canon_unchecked(Rational::from_int(icoef)),
        }
    }

    pub fn zero(ring: BaseRing) -> NeutroNumber {
        Self::from_ints(ring, 0, 0)
    }

    pub fn one(ring: BaseRing) -> NeutroNumber {
        Self::from_ints(ring, 1, 0)
    }

    /// The indeterminate itself, `0 + 1I`.
    pub fn indeterminate(ring: BaseRing) -> NeutroNumber {
        Self::from_ints(ring, 0, 1)
    }

    pub fn ring(&self) -> BaseRing {
        self.ring
    }

    pub fn real_part(&self) -> Rational {
        self.real
    }

    pub fn i_coeff(&self) -> Rational {
        self.icoef
    }

    pub fn is_zero(&self) -> bool {
        self.real.is_zero() && self.icoef.is_zero()
    }

    fn same_ring(&self, rhs: &NeutroNumber) -> Result<()> {
        if self.ring == rhs.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(
                self.ring.to_string(),
                rhs.ring.to_string(),
            ))
        }
    }

    pub fn add(&self, rhs: &NeutroNumber) -> Result<NeutroNumber> {
        self.same_ring(rhs)?;
        Ok(NeutroNumber {
            ring: self.ring,
            real: self.ring.canon_unchecked(self.real.add(&rhs.real)),
            icoef: self.ring.canon_unchecked(self.icoef.add(&rhs.icoef)),
        })
    }

    /// `(a1 + b1 I)(a2 + b2 I) = a1 a2 + (a1 b2 + b1 a2 + b1 b2) I`,
    /// the unique bilinear product forced by `I * I = I`.
    pub fn mul(&self, rhs: &NeutroNumber) -> Result<NeutroNumber> {
        self.same_ring(rhs)?;
        let real = self.real.mul(&rhs.real);
        let icoef = self
            .real
            .mul(&rhs.icoef)
            .add(&self.icoef.mul(&rhs.real))
            .add(&self.icoef.mul(&rhs.icoef));
        Ok(NeutroNumber {
            ring: self.ring,
            real: self.ring.canon_unchecked(real),
            icoef: self.ring.canon_unchecked(icoef),
        })
    }

    pub fn neg(&self) -> NeutroNumber {
        NeutroNumber {
            ring: self.ring,
            real: self.ring.canon_unchecked(self.real.neg()),
            icoef: self.ring.canon_unchecked(self.icoef.neg()),
        }
    }

    pub fn classify(&self) -> NumberClass {
        if !self.icoef.is_zero() {
            NumberClass::PureNeutrosophic
        } else if self.real.is_zero() {
            NumberClass::Zero
        } else {
            NumberClass::RealOnly
        }
    }
}

impl fmt::Display for NeutroNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.icoef.is_zero() {
            return write!(f, "{}", self.real);
        }
        let i_part = |f: &mut fmt::Formatter<'_>, c: Rational, lead: bool| -> fmt::Result {
            if c == Rational::ONE {
                write!(f, "I")
            } else if c == Rational::from_int(-1) && lead {
                write!(f, "-I")
            } else {
                write!(f, "{c}I")
            }
        };
        if self.real.is_zero() {
            i_part(f, self.icoef, true)
        } else if self.icoef > Rational::ZERO {
            write!(f, "{}+", self.real)?;
            i_part(f, self.icoef, false)
        } else {
            write!(f, "{}-", self.real)?;
            i_part(f, self.icoef.neg(), false)
        }
    }
}

/// An element of N([0, 1]) = {a + bI | a, b in [0, 1]}, kept as exact
/// rationals. Ordered componentwise (the product lattice on [0, 1]^2);
/// a dominance query `u >= v` is `FuzzyOrder::Le` with arguments swapped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FuzzyNeutroValue {
    real: Rational,
    icoef: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FuzzyOrder {
    Le,
    Gt,
    Incomparable,
}

impl FuzzyNeutroValue {
    pub fn new(real: Rational, icoef: Rational) -> Result<FuzzyNeutroValue> {
        for c in [real, icoef] {
            if c < Rational::ZERO || c > Rational::ONE {
                return Err(Error::FuzzyOutOfRange(c.to_string()));
            }
        }
        Ok(FuzzyNeutroValue { real, icoef })
    }

    /// `1 + 0I`, the classical "full membership" value.
    pub fn one() -> FuzzyNeutroValue {
        FuzzyNeutroValue {
            real: Rational::ONE,
            icoef: Rational::ZERO,
        }
    }

    /// `0 + 1I`, the value the indeterminate must map to.
    pub fn indeterminate() -> FuzzyNeutroValue {
        FuzzyNeutroValue {
            real: Rational::ZERO,
            icoef: Rational::ONE,
        }
    }

    /// `1 + I`, the top of the lattice.
    pub fn top() -> FuzzyNeutroValue {
        FuzzyNeutroValue {
            real: Rational::ONE,
            icoef: Rational::ONE,
        }
    }

    pub fn real_part(&self) -> Rational {
        self.real
    }

    pub fn i_coeff(&self) -> Rational {
        self.icoef
    }

    /// Componentwise minimum, the greatest lower bound for `compare`.
    pub fn meet(&self, other: &FuzzyNeutroValue) -> FuzzyNeutroValue {
        FuzzyNeutroValue {
            real: self.real.min(other.real),
            icoef: self.icoef.min(other.icoef),
        }
    }

    pub fn compare(&self, other: &FuzzyNeutroValue) -> FuzzyOrder {
        let le = self.real <= other.real && self.icoef <= other.icoef;
        let ge = other.real <= self.real && other.icoef <= self.icoef;
        match (le, ge) {
            (true, _) => FuzzyOrder::Le,
            (false, true) => FuzzyOrder::Gt,
            (false, false) => FuzzyOrder::Incomparable,
        }
    }

    /// Componentwise dominance: does `self` sit at or above `other`?
    pub fn dominates(&self, other: &FuzzyNeutroValue) -> bool {
        matches!(other.compare(self), FuzzyOrder::Le)
    }
}

impl fmt::Display for FuzzyNeutroValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.icoef.is_zero() {
            write!(f, "{}", self.real)
        } else if self.real.is_zero() {
            if self.icoef == Rational::ONE {
                write!(f, "I")
            } else {
                write!(f, "{}I", self.icoef)
            }
        } else if self.icoef == Rational::ONE {
            write!(f, "{}+I", self.real)
        } else {
            write!(f, "{}+{}I", self.real, self.icoef)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> BaseRing {
        BaseRing::Integer
    }

    fn n(a: i64, b: i64) -> NeutroNumber {
        NeutroNumber::from_ints(z(), a, b)
    }

    #[test]
    fn addition_is_componentwise() {
        assert_eq!(n(1, 1).add(&n(2, 3)).unwrap(), n(3, 4));
        let i = NeutroNumber::indeterminate(z());
        assert_eq!(i.add(&i).unwrap(), n(0, 2));
        let z4 = BaseRing::modular(4).unwrap();
        let x = NeutroNumber::from_ints(z4, 2, 3);
        let y = NeutroNumber::from_ints(z4, 1, 1);
        assert_eq!(x.add(&y).unwrap(), NeutroNumber::from_ints(z4, 3, 0));
    }

    #[test]
    fn indeterminate_is_idempotent() {
        let i = NeutroNumber::indeterminate(z());
        assert_eq!(i.mul(&i).unwrap(), i);
        assert_eq!(n(2, 3).mul(&n(1, 4)).unwrap(), n(2, 23));
        // (1 - I)(1 - I) = 1 - I over Q
        let q = BaseRing::Rational;
        let e = NeutroNumber::from_ints(q, 1, -1);
        assert_eq!(e.mul(&e).unwrap(), e);
    }

    #[test]
    fn idempotents_hold_in_every_base_ring() {
        for ring in [
            BaseRing::Integer,
            BaseRing::Rational,
            BaseRing::modular(2).unwrap(),
            BaseRing::modular(5).unwrap(),
        ] {
            let i = NeutroNumber::indeterminate(ring);
            assert_eq!(i.mul(&i).unwrap(), i);
            let e = NeutroNumber::one(ring).add(&i.neg()).unwrap();
            assert_eq!(e.mul(&e).unwrap(), e);
        }
    }

    #[test]
    fn classification_partitions() {
        assert_eq!(n(5, 2).classify(), NumberClass::PureNeutrosophic);
        assert_eq!(n(9, 0).classify(), NumberClass::RealOnly);
        assert_eq!(n(0, 0).classify(), NumberClass::Zero);
        assert_eq!(n(0, -3).classify(), NumberClass::PureNeutrosophic);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let x = NeutroNumber::from_ints(BaseRing::Integer, 1, 0);
        let y = NeutroNumber::from_ints(BaseRing::Rational, 1, 0);
        assert!(matches!(x.add(&y), Err(Error::RingMismatch(_, _))));
    }

    #[test]
    fn modular_literals_reduce_at_construction() {
        let z12 = BaseRing::modular(12).unwrap();
        assert_eq!(
            NeutroNumber::from_ints(z12, -27, 41),
            NeutroNumber::from_ints(z12, 9, 5)
        );
    }

    #[test]
    fn rational_canonical_form() {
        let q = BaseRing::Rational;
        let half = NeutroNumber::new(q, Rational::new(2, 4), Rational::new(-3, -6)).unwrap();
        assert_eq!(half.real_part(), Rational::new(1, 2));
        assert_eq!(half.i_coeff(), Rational::new(1, 2));
        assert_eq!(Rational::new(3, -9), Rational::new(-1, 3));
    }

    #[test]
    fn fuzzy_min_and_order() {
        let v = |a: (i64, i64), b: (i64, i64)| {
            FuzzyNeutroValue::new(Rational::new(a.0, a.1), Rational::new(b.0, b.1)).unwrap()
        };
        let x = v((3, 10), (1, 2));
        let y = v((2, 5), (1, 5));
        assert_eq!(x.meet(&y), v((3, 10), (1, 5)));
        assert_eq!(x.meet(&x), x);
        let top = FuzzyNeutroValue::top();
        let w = v((1, 5), (7, 10));
        assert_eq!(top.meet(&w), w);
        assert_eq!(v((1, 10), (1, 10)).compare(&v((1, 5), (3, 10))), FuzzyOrder::Le);
        assert_eq!(
            FuzzyNeutroValue::one().compare(&FuzzyNeutroValue::indeterminate()),
            FuzzyOrder::Incomparable
        );
        assert_eq!(x.compare(&x), FuzzyOrder::Le);
        assert_eq!(v((1, 2), (1, 2)).compare(&v((1, 10), (1, 10))), FuzzyOrder::Gt);
    }

    #[test]
    fn display_round_trips_signs() {
        assert_eq!(n(0, 1).to_string(), "I");
        assert_eq!(n(0, -1).to_string(), "-I");
        assert_eq!(n(3, -4).to_string(), "3-4I");
        assert_eq!(n(-38, 41).to_string(), "-38+41I");
        assert_eq!(n(0, 0).to_string(), "0");
        let q = BaseRing::Rational;
        let h = NeutroNumber::new(q, Rational::new(1, 2), Rational::new(-1, 3)).unwrap();
        assert_eq!(h.to_string(), "1/2-1/3I");
    }
}
