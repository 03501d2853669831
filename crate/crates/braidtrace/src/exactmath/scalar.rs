//! Arbitrary-precision rational scalars and the q-scalar environment.

use crate::error::Error;
use crate::Result;
use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// An exact rational number in canonical form (coprime, positive denominator).
///
/// `BigRational` maintains the canonical form on every operation, so equality
/// is plain structural equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den`; panics on zero denominator.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "division by zero");
        Rat(self.0.recip())
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn pow(&self, e: i64) -> Rat {
        if e == 0 {
            return Rat::one();
        }
        let base = if e < 0 { self.recip() } else { self.clone() };
        let mut acc = Rat::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Exact square root if the value is a perfect rational square.
    pub fn sqrt_exact(&self) -> Option<Rat> {
        if self.is_negative() {
            return None;
        }
        let ns = self.numer().sqrt();
        let ds = self.denom().sqrt();
        if &(&ns * &ns) == self.numer() && &(&ds * &ds) == self.denom() {
            Some(Rat(BigRational::new(ns, ds)))
        } else {
            None
        }
    }

    /// Decimal rendering for human-readable output only; never used in checks.
    pub fn to_f64(&self) -> f64 {
        let f = |b: &BigInt| -> f64 {
            let (s, digits) = b.to_radix_le(10);
            let mut v = 0.0;
            for &d in digits.iter().rev() {
                v = v * 10.0 + d as f64;
            }
            if s == Sign::Minus {
                -v
            } else {
                v
            }
        };
        f(self.numer()) / f(self.denom())
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = String;

    /// Parses `"p"` or `"p/q"` with arbitrary-precision integers.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n = BigInt::from_str(num).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
        let d = BigInt::from_str(den).map_err(|e| format!("bad denominator {den:?}: {e}"))?;
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(Rat(BigRational::new(n, d)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl std::iter::Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

/// The exact scalar environment: a specialized rational q and hbar, plus the
/// bound up to which the q-integers are certified nonzero.
///
/// q = +-1 is rejected unless the context is built with the classical flag;
/// q = 1 is the involutive (classical) degeneration and stays fully supported
/// downstream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QContext {
    q: Rat,
    hbar: Rat,
    genericity_bound: u32,
}

/// Default certification bound for `[n]_q != 0`.
pub const DEFAULT_GENERICITY_BOUND: u32 = 64;

impl QContext {
    /// Generic context; rejects q in {0, 1, -1} and any q with `[n]_q = 0`
    /// for `1 <= n <= bound`.
    pub fn new(q: Rat, hbar: Rat) -> Result<Self> {
        Self::with_bound(q, hbar, DEFAULT_GENERICITY_BOUND, false)
    }

    /// Context that additionally permits the involutive points q = +-1.
    pub fn new_allow_classical(q: Rat, hbar: Rat) -> Result<Self> {
        Self::with_bound(q, hbar, DEFAULT_GENERICITY_BOUND, true)
    }

    pub fn with_bound(q: Rat, hbar: Rat, bound: u32, allow_classical: bool) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::GenericityViolation("q = 0".into()));
        }
        let minus_one = -Rat::one();
        if !allow_classical && (q.is_one() || q == minus_one) {
            return Err(Error::GenericityViolation(
                "q = +-1 needs the classical flag".into(),
            ));
        }
        let ctx = QContext {
            q,
            hbar,
            genericity_bound: bound,
        };
        for n in 1..=bound {
            if ctx.qint(n as i64).is_zero() {
                return Err(Error::GenericityViolation(format!(
                    "[{n}]_q = 0 at q = {}",
                    ctx.q
                )));
            }
        }
        Ok(ctx)
    }

    pub fn q(&self) -> &Rat {
        &self.q
    }

    pub fn hbar(&self) -> &Rat {
        &self.hbar
    }

    pub fn genericity_bound(&self) -> u32 {
        self.genericity_bound
    }

    /// Same q-data with a different hbar.
    pub fn with_hbar(&self, hbar: Rat) -> QContext {
        QContext {
            q: self.q.clone(),
            hbar,
            genericity_bound: self.genericity_bound,
        }
    }

    /// lambda = q - q^{-1}.
    pub fn lambda(&self) -> Rat {
        &self.q - &self.q.recip()
    }

    /// The symmetric q-integer `[n]_q = (q^n - q^{-n}) / (q - q^{-1})`.
    ///
    /// Evaluated in the summed form `q^{n-1} + q^{n-3} + ... + q^{1-n}`, which
    /// agrees with the quotient for every nonzero q and stays finite at the
    /// involutive points q = +-1. `[0]_q = 0`, `[-n]_q = -[n]_q`.
    pub fn qint(&self, n: i64) -> Rat {
        if n == 0 {
            return Rat::zero();
        }
        let m = n.unsigned_abs();
        let mut acc = Rat::zero();
        let mut term = self.q.pow(m as i64 - 1);
        let qm2 = self.q.pow(-2);
        for _ in 0..m {
            acc += &term;
            term = &term * &qm2;
        }
        if n < 0 {
            -acc
        } else {
            acc
        }
    }

    /// `q^e` as an exact rational.
    pub fn qpow(&self, e: i64) -> Rat {
        self.q.pow(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(q: Rat) -> QContext {
        QContext::new_allow_classical(q, Rat::one()).unwrap()
    }

    #[test]
    fn qint_basics() {
        let c = ctx(Rat::new(3, 2));
        assert_eq!(c.qint(1), Rat::one());
        assert_eq!(c.qint(0), Rat::zero());
        // [3]_q at q = 2 is q^2 + 1 + q^-2 = 21/4, by direct evaluation
        let c2 = ctx(Rat::from_int(2));
        assert_eq!(c2.qint(3), Rat::new(21, 4));
    }

    #[test]
    fn qint_matches_quotient_form() {
        for q in [Rat::new(3, 2), Rat::from_int(2), Rat::new(5, 3)] {
            let c = ctx(q.clone());
            for n in 1..10i64 {
                let quot = (q.pow(n) - q.pow(-n)) / (q.pow(1) - q.pow(-1));
                assert_eq!(c.qint(n), quot, "n = {n}, q = {q}");
            }
        }
    }

    #[test]
    fn qint_symmetries() {
        let c = ctx(Rat::new(3, 2));
        let cinv = ctx(Rat::new(2, 3));
        for n in -8..=8i64 {
            assert_eq!(c.qint(n), cinv.qint(n), "[n]_q = [n]_(1/q)");
            assert_eq!(c.qint(-n), -c.qint(n), "[-n]_q = -[n]_q");
        }
    }

    #[test]
    fn qint_addition_identity() {
        // [k+m]_q + [k-m]_q = [k]_q (q^m + q^{-m})
        for q in [Rat::new(3, 2), Rat::from_int(2), Rat::new(5, 3), Rat::one()] {
            let c = ctx(q.clone());
            for k in 0..=10i64 {
                for m in 0..=k {
                    let lhs = c.qint(k + m) + c.qint(k - m);
                    let rhs = c.qint(k) * (q.pow(m) + q.pow(-m));
                    assert_eq!(lhs, rhs, "k={k} m={m} q={q}");
                }
            }
        }
    }

    #[test]
    fn context_rejects_degenerate_q() {
        assert!(QContext::new(Rat::zero(), Rat::one()).is_err());
        assert!(QContext::new(Rat::one(), Rat::one()).is_err());
        assert!(QContext::new(-Rat::one(), Rat::one()).is_err());
        assert!(QContext::new_allow_classical(Rat::one(), Rat::one()).is_ok());
        // q = -1 has [2]_q = 0, rejected even with the classical flag
        assert!(QContext::new_allow_classical(-Rat::one(), Rat::one()).is_err());
    }

    #[test]
    fn sqrt_exact_works() {
        assert_eq!(Rat::new(9, 4).sqrt_exact(), Some(Rat::new(3, 2)));
        assert_eq!(Rat::from_int(2).sqrt_exact(), None);
        assert_eq!((-Rat::one()).sqrt_exact(), None);
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for s in ["3/2", "-7/3", "5", "0"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!("4/6".parse::<Rat>().unwrap(), Rat::new(2, 3));
        assert!("1/0".parse::<Rat>().is_err());
    }

    proptest! {
        #[test]
        fn field_axioms_spot(a in -50i64..50, b in 1i64..30, c in -50i64..50, d in 1i64..30) {
            let x = Rat::new(a, b);
            let y = Rat::new(c, d);
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            if !y.is_zero() {
                prop_assert_eq!((&x / &y) * &y, x.clone());
            }
        }
    }
}
