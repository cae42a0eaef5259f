//! Exact numbers `a + b·i` where `a` and `b` are finite ℚ-linear
//! combinations of `√d` for squarefree `d ≥ 1`.
//!
//! The family `{√d, i·√d : d squarefree}` is linearly independent over ℚ,
//! so the coefficient maps below are canonical and equality is structural.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::Serialize;

/// Real or imaginary component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    Re,
    Im,
}

/// A basis element `√d` (for [`Part::Re`]) or `i·√d` (for [`Part::Im`]).
pub type BasisKey = (Part, u64);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgNum {
    re: BTreeMap<u64, BigRational>,
    im: BTreeMap<u64, BigRational>,
}

/// Writes `m = s² · d` with `d` squarefree; returns `(s, d)`.
pub fn squarefree_split(m: u64) -> (u64, u64) {
    let mut s = 1;
    let mut d = 1;
    let mut rest = m;
    let mut f = 2;
    while f * f <= rest {
        let mut e = 0;
        while rest.is_multiple_of(f) {
            rest /= f;
            e += 1;
        }
        s *= f.pow(e / 2);
        if e % 2 == 1 {
            d *= f;
        }
        f += 1;
    }
    (s, d * rest)
}

fn add_term(map: &mut BTreeMap<u64, BigRational>, d: u64, q: BigRational) {
    if q.is_zero() {
        return;
    }
    let entry = map.entry(d).or_insert_with(BigRational::zero);
    *entry += q;
    if entry.is_zero() {
        map.remove(&d);
    }
}

/// `√a · √b` for squarefree `a`, `b`: `(g, a·b/g²)` with `g = gcd(a, b)`.
fn radical_product(a: u64, b: u64) -> (u64, u64) {
    let g = a.gcd(&b);
    (g, (a / g) * (b / g))
}

impl AlgNum {
    pub fn zero() -> AlgNum {
        AlgNum::default()
    }

    pub fn one() -> AlgNum {
        AlgNum::from_int(1)
    }

    pub fn from_int(v: i64) -> AlgNum {
        AlgNum::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(q: BigRational) -> AlgNum {
        let mut out = AlgNum::zero();
        add_term(&mut out.re, 1, q);
        out
    }

    pub fn frac(num: i64, den: i64) -> AlgNum {
        AlgNum::from_rational(BigRational::new(num.into(), den.into()))
    }

    /// The imaginary unit.
    pub fn i() -> AlgNum {
        let mut out = AlgNum::zero();
        add_term(&mut out.im, 1, BigRational::one());
        out
    }

    /// `i^e`.
    pub fn i_pow(e: u64) -> AlgNum {
        match e % 4 {
            0 => AlgNum::one(),
            1 => AlgNum::i(),
            2 => AlgNum::from_int(-1),
            _ => -AlgNum::i(),
        }
    }

    /// The non-negative square root of `m`.
    pub fn sqrt(m: u64) -> AlgNum {
        if m == 0 {
            return AlgNum::zero();
        }
        let (s, d) = squarefree_split(m);
        let mut out = AlgNum::zero();
        add_term(&mut out.re, d, BigRational::from_integer(BigInt::from(s)));
        out
    }

    /// Builds a number from basis coefficients.
    pub fn from_terms<I: IntoIterator<Item = (BasisKey, BigRational)>>(terms: I) -> AlgNum {
        let mut out = AlgNum::zero();
        for ((part, d), q) in terms {
            let (s, d) = squarefree_split(d);
            let q = q * BigRational::from_integer(BigInt::from(s));
            match part {
                Part::Re => add_term(&mut out.re, d, q),
                Part::Im => add_term(&mut out.im, d, q),
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_empty() && self.im.is_empty()
    }

    /// Coefficients over the basis, in ascending key order.
    pub fn terms(&self) -> impl Iterator<Item = (BasisKey, &BigRational)> + '_ {
        self.re.iter().map(|(&d, q)| ((Part::Re, d), q)).chain(self.im.iter().map(|(&d, q)| ((Part::Im, d), q)))
    }

    pub fn coefficient(&self, key: BasisKey) -> BigRational {
        let map = match key.0 {
            Part::Re => &self.re,
            Part::Im => &self.im,
        };
        map.get(&key.1).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The value as a rational number, if it is one.
    pub fn to_rational(&self) -> Option<BigRational> {
        if !self.im.is_empty() || self.re.keys().any(|&d| d != 1) {
            return None;
        }
        Some(self.coefficient((Part::Re, 1)))
    }

    pub fn to_i64(&self) -> Option<i64> {
        let q = self.to_rational()?;
        if q.is_integer() {
            q.to_integer().to_i64()
        } else {
            None
        }
    }

    pub fn conj(&self) -> AlgNum {
        AlgNum { re: self.re.clone(), im: self.im.iter().map(|(&d, q)| (d, -q)).collect() }
    }

    pub fn scale(&self, q: &BigRational) -> AlgNum {
        if q.is_zero() {
            return AlgNum::zero();
        }
        AlgNum {
            re: self.re.iter().map(|(&d, c)| (d, c * q)).collect(),
            im: self.im.iter().map(|(&d, c)| (d, c * q)).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> AlgNum {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    /// Whether `self / denominator` lies in the localisation at `p` of the
    /// ring of algebraic integers, for an odd prime `p`.
    ///
    /// For odd `p` the order spanned by `{√d, i·√d}` is already maximal at
    /// `p` (adjoining `i` and `√d` with `p ∤ d` is unramified, and a single
    /// `√(p·u)` is Eisenstein on top), so it suffices that every coordinate
    /// has non-negative `p`-adic valuation.
    pub fn is_p_integral_over(&self, p: u32, denominator: u64) -> bool {
        assert!(denominator > 0, "denominator must be positive");
        let den_val = valuation(&BigInt::from(denominator), p);
        self.terms().all(|(_, q)| valuation(q.numer(), p) - valuation(q.denom(), p) >= den_val)
    }

    fn mul_ref(&self, rhs: &AlgNum) -> AlgNum {
        let mut out = AlgNum::zero();
        for (ka, qa) in self.terms() {
            for (kb, qb) in rhs.terms() {
                let (g, d) = radical_product(ka.1, kb.1);
                let q = qa * qb * BigRational::from_integer(BigInt::from(g));
                match (ka.0, kb.0) {
                    (Part::Re, Part::Re) => add_term(&mut out.re, d, q),
                    (Part::Im, Part::Im) => add_term(&mut out.re, d, -q),
                    _ => add_term(&mut out.im, d, q),
                }
            }
        }
        out
    }

    fn add_ref(&self, rhs: &AlgNum) -> AlgNum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

/// `p`-adic valuation of a non-zero integer; `i64::MAX` for zero.
fn valuation(v: &BigInt, p: u32) -> i64 {
    if v.is_zero() {
        return i64::MAX;
    }
    let p = BigInt::from(p);
    let mut v = v.abs();
    let mut e = 0;
    while (&v % &p).is_zero() {
        v /= &p;
        e += 1;
    }
    e
}

impl<'a> AddAssign<&'a AlgNum> for AlgNum {
    fn add_assign(&mut self, rhs: &'a AlgNum) {
        for (&d, q) in &rhs.re {
            add_term(&mut self.re, d, q.clone());
        }
        for (&d, q) in &rhs.im {
            add_term(&mut self.im, d, q.clone());
        }
    }
}

impl AddAssign for AlgNum {
    fn add_assign(&mut self, rhs: AlgNum) {
        *self += &rhs;
    }
}

impl Neg for AlgNum {
    type Output = AlgNum;
    fn neg(self) -> AlgNum {
        AlgNum {
            re: self.re.into_iter().map(|(d, q)| (d, -q)).collect(),
            im: self.im.into_iter().map(|(d, q)| (d, -q)).collect(),
        }
    }
}

impl Neg for &AlgNum {
    type Output = AlgNum;
    fn neg(self) -> AlgNum {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<AlgNum> for AlgNum {
            type Output = AlgNum;
            fn $method(self, rhs: AlgNum) -> AlgNum {
                $body(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a AlgNum> for AlgNum {
            type Output = AlgNum;
            fn $method(self, rhs: &'a AlgNum) -> AlgNum {
                $body(&self, rhs)
            }
        }
        impl<'a> $tr<AlgNum> for &'a AlgNum {
            type Output = AlgNum;
            fn $method(self, rhs: AlgNum) -> AlgNum {
                $body(self, &rhs)
            }
        }
        impl<'a, 'b> $tr<&'b AlgNum> for &'a AlgNum {
            type Output = AlgNum;
            fn $method(self, rhs: &'b AlgNum) -> AlgNum {
                $body(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &AlgNum, b: &AlgNum| a.add_ref(b));
forward_binop!(Sub, sub, |a: &AlgNum, b: &AlgNum| a.add_ref(&-b));
forward_binop!(Mul, mul, |a: &AlgNum, b: &AlgNum| a.mul_ref(b));

impl std::iter::Sum for AlgNum {
    fn sum<I: Iterator<Item = AlgNum>>(iter: I) -> AlgNum {
        let mut acc = AlgNum::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl From<i64> for AlgNum {
    fn from(v: i64) -> AlgNum {
        AlgNum::from_int(v)
    }
}

impl fmt::Display for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for ((part, d), q) in self.terms() {
            let neg = q.is_negative();
            let mag = q.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = match (part, d) {
                (Part::Re, 1) => String::new(),
                (Part::Re, d) => format!("√{d}"),
                (Part::Im, 1) => "i".to_string(),
                (Part::Im, d) => format!("i√{d}"),
            };
            let numer = mag.numer();
            let denom = mag.denom();
            if unit.is_empty() {
                write!(f, "{numer}")?;
            } else if numer.is_one() {
                f.write_str(&unit)?;
            } else {
                write!(f, "{numer}{unit}")?;
            }
            if !denom.is_one() {
                write!(f, "/{denom}")?;
            }
        }
        Ok(())
    }
}

/// `[num, den, d]` triples meaning `(num/den)·√d`.
fn triples(map: &BTreeMap<u64, BigRational>) -> Vec<serde_json_triple::Triple> {
    map.iter().map(|(&d, q)| serde_json_triple::Triple { num: q.numer().clone(), den: q.denom().clone(), d }).collect()
}

mod serde_json_triple {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::ser::{Error, SerializeSeq};
    use serde::Serialize;

    pub struct Triple {
        pub num: BigInt,
        pub den: BigInt,
        pub d: u64,
    }

    impl Serialize for Triple {
        fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            let num = self.num.to_i64().ok_or_else(|| S::Error::custom("numerator exceeds i64"))?;
            let den = self.den.to_i64().ok_or_else(|| S::Error::custom("denominator exceeds i64"))?;
            let mut seq = s.serialize_seq(Some(3))?;
            seq.serialize_element(&num)?;
            seq.serialize_element(&den)?;
            seq.serialize_element(&self.d)?;
            seq.end()
        }
    }
}

impl Serialize for AlgNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("re", &triples(&self.re))?;
        map.serialize_entry("im", &triples(&self.im))?;
        map.end()
    }
}
