//! Exact scalars over a prime field GF(p) or the rationals.
//!
//! Every [`Scalar`] carries enough information to identify its field, so
//! mixing operands from two different fields is reported instead of silently
//! producing garbage. Prime-field residues are always stored reduced into
//! `0..p`; rationals are kept in lowest terms with a positive denominator, so
//! structural equality coincides with field equality.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest supported prime modulus (residues fit in a byte).
pub const MAX_PRIME: u16 = 251;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported maximum {MAX_PRIME}")]
    PrimeTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields ({0} and {1})")]
    MixedFields(Field, Field),
    #[error("invalid scalar literal {literal:?} for {field}")]
    BadLiteral { literal: String, field: Field },
}

/// The ground field: GF(p) for a small prime `p`, or Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Prime(u16),
    Rationals,
}

impl Field {
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p > MAX_PRIME as u64 {
            return Err(FieldError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field::Prime(p as u16))
    }

    pub fn rationals() -> Self {
        Field::Rationals
    }

    /// `p` for GF(p), 0 for Q.
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Prime(p) => p as u64,
            Field::Rationals => 0,
        }
    }

    /// Number of elements, `None` for Q.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Prime(p) => Some(p as u64),
            Field::Rationals => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod { residue: 0, p },
            Field::Rationals => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod { residue: 1 % p, p },
            Field::Rationals => Scalar::Rat(BigRational::one()),
        }
    }

    /// Canonical image of an integer.
    pub fn from_int(self, n: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod {
                residue: n.rem_euclid(p as i64) as u16,
                p,
            },
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Mod {
                    residue: r.to_u16().expect("residue below p"),
                    p,
                }
            }
            Field::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
        }
    }

    /// Build a rational-valued scalar. Over GF(p) the fraction is mapped
    /// through the residue of the denominator, which must be invertible.
    pub fn from_fraction(self, num: &BigInt, den: &BigInt) -> Result<Scalar, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match self {
            Field::Rationals => Ok(Scalar::Rat(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(_) => self.from_bigint(num).checked_div(&self.from_bigint(den)),
        }
    }

    /// Parse a literal in the field's textual format: decimal integers for
    /// GF(p) (reduced mod p), `a` or `a/b` for Q.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar, FieldError> {
        let bad = || FieldError::BadLiteral {
            literal: text.to_string(),
            field: self,
        };
        let text = text.trim();
        match self {
            Field::Prime(_) => {
                let n = BigInt::from_str(text).map_err(|_| bad())?;
                Ok(self.from_bigint(&n))
            }
            Field::Rationals => {
                let (num, den) = match text.split_once('/') {
                    Some((a, b)) => (a.trim(), b.trim()),
                    None => (text, "1"),
                };
                let num = BigInt::from_str(num).map_err(|_| bad())?;
                let den = BigInt::from_str(den).map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rat(BigRational::new(num, den)))
            }
        }
    }

    /// All elements of a finite field in residue order.
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        match self {
            Field::Prime(p) => Some((0..p).map(move |residue| Scalar::Mod { residue, p })),
            Field::Rationals => None,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Rationals => write!(f, "Q"),
        }
    }
}

impl FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rationals);
        }
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| format!("expected GF(p) or Q, found {s:?}"))?;
        let p: u64 = inner
            .trim()
            .parse()
            .map_err(|_| format!("bad modulus {inner:?}"))?;
        Field::prime(p).map_err(|e| e.to_string())
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An exact field element in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { residue: u16, p: u16 },
    Rat(BigRational),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Mod { p, .. } => Field::Prime(*p),
            Scalar::Rat(_) => Field::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { residue, .. } => *residue == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { residue, .. } => *residue == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<(), FieldError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(FieldError::MixedFields(self.field(), other.field()))
        }
    }

    pub fn arith(op: ArithOp, a: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        match op {
            ArithOp::Add => a.checked_add(b),
            ArithOp::Sub => a.checked_sub(b),
            ArithOp::Mul => a.checked_mul(b),
            ArithOp::Div => a.checked_div(b),
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.same_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.same_field(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.same_field(other)?;
        let inv = other.inv()?;
        Ok(self.mul_unchecked(&inv))
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Mod { residue, p } => Scalar::Mod {
                residue: mod_inverse(*residue, *p),
                p: *p,
            },
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Mod { residue, p } => Scalar::Mod {
                residue: (p - residue) % p,
                p: *p,
            },
            Scalar::Rat(r) => Scalar::Rat(-r),
        }
    }

    // The unchecked variants back the linear algebra, where every operand
    // comes from one validated field.
    pub(crate) fn add_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Mod { residue: a, p }, Scalar::Mod { residue: b, .. }) => Scalar::Mod {
                residue: ((*a as u32 + *b as u32) % *p as u32) as u16,
                p: *p,
            },
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => panic!("mixed-field addition"),
        }
    }

    pub(crate) fn sub_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Mod { residue: a, p }, Scalar::Mod { residue: b, .. }) => Scalar::Mod {
                residue: ((*a as u32 + *p as u32 - *b as u32) % *p as u32) as u16,
                p: *p,
            },
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => panic!("mixed-field subtraction"),
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Mod { residue: a, p }, Scalar::Mod { residue: b, .. }) => Scalar::Mod {
                residue: ((*a as u32 * *b as u32) % *p as u32) as u16,
                p: *p,
            },
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => panic!("mixed-field multiplication"),
        }
    }

    /// `self - factor * other`, the row-operation kernel.
    pub(crate) fn sub_mul(&self, factor: &Scalar, other: &Scalar) -> Scalar {
        match (self, factor, other) {
            (
                Scalar::Mod { residue: a, p },
                Scalar::Mod { residue: f, .. },
                Scalar::Mod { residue: b, .. },
            ) => {
                let p32 = *p as u32;
                let prod = (*f as u32 * *b as u32) % p32;
                Scalar::Mod {
                    residue: ((*a as u32 + p32 - prod) % p32) as u16,
                    p: *p,
                }
            }
            _ => self.sub_unchecked(&factor.mul_unchecked(other)),
        }
    }

    /// Integer value for prime-field scalars or integral rationals.
    pub fn to_bigint(&self) -> Option<BigInt> {
        match self {
            Scalar::Mod { residue, .. } => Some(BigInt::from(*residue)),
            Scalar::Rat(r) if r.is_integer() => Some(r.to_integer()),
            Scalar::Rat(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod { .. } => None,
        }
    }

    /// Textual form used by the serializers: residue for GF(p), `num/den`
    /// for Q.
    pub fn to_literal(&self) -> String {
        match self {
            Scalar::Mod { residue, .. } => residue.to_string(),
            Scalar::Rat(r) => format!("{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { residue, .. } => write!(f, "{residue}"),
            Scalar::Rat(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Mod { residue, .. } => serializer.serialize_u16(*residue),
            Scalar::Rat(r) => serializer.collect_str(&format_args!("{}/{}", r.numer(), r.denom())),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Residue order on GF(p), numeric order on Q; GF(p) sorts before Q.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Mod { residue: a, p: pa }, Scalar::Mod { residue: b, p: pb }) => {
                pa.cmp(pb).then(a.cmp(b))
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Mod { .. }, Scalar::Rat(_)) => Ordering::Less,
            (Scalar::Rat(_), Scalar::Mod { .. }) => Ordering::Greater,
        }
    }
}

fn mod_inverse(a: u16, p: u16) -> u16 {
    let (mut old_r, mut r) = (a as i32, p as i32);
    let (mut old_s, mut s) = (1i32, 0i32);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(p as i32) as u16
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn q(n: i64, d: i64) -> Scalar {
        Field::Rationals
            .from_fraction(&BigInt::from(n), &BigInt::from(d))
            .unwrap()
    }

    #[test]
    fn small_examples() {
        let f5 = gf(5);
        let r = Scalar::arith(ArithOp::Div, &f5.from_int(1), &f5.from_int(2)).unwrap();
        assert_eq!(r, f5.from_int(3));

        let r = Scalar::arith(ArithOp::Add, &q(1, 2), &q(1, 3)).unwrap();
        assert_eq!(r, q(5, 6));

        let f2 = gf(2);
        assert!(f2.one().checked_add(&f2.one()).unwrap().is_zero());
    }

    #[test]
    fn integer_embedding() {
        assert_eq!(gf(5).from_int(7), Scalar::Mod { residue: 2, p: 5 });
        assert_eq!(gf(3).from_int(-1), Scalar::Mod { residue: 2, p: 3 });
        let four = Field::Rationals.from_int(4);
        assert_eq!(four.to_literal(), "4/1");
        assert_eq!(four, q(8, 2));
    }

    #[test]
    fn errors() {
        let f5 = gf(5);
        assert_eq!(
            f5.one().checked_div(&f5.zero()),
            Err(FieldError::DivisionByZero)
        );
        assert!(matches!(
            f5.one().checked_add(&gf(3).one()),
            Err(FieldError::MixedFields(..))
        ));
        assert!(matches!(
            Field::Rationals.one().checked_mul(&f5.one()),
            Err(FieldError::MixedFields(..))
        ));
        assert_eq!(Field::prime(9), Err(FieldError::NotPrime(9)));
        assert_eq!(Field::prime(1), Err(FieldError::NotPrime(1)));
        assert_eq!(Field::prime(257), Err(FieldError::PrimeTooLarge(257)));
        assert!(Field::prime(251).is_ok());
    }

    #[test]
    fn characteristic_and_parsing() {
        assert_eq!(gf(7).characteristic(), 7);
        assert_eq!(Field::Rationals.characteristic(), 0);
        assert_eq!("GF(3)".parse::<Field>().unwrap(), gf(3));
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rationals);
        assert!("GF(4)".parse::<Field>().is_err());
        assert_eq!(gf(3).parse_scalar("-4").unwrap(), gf(3).from_int(2));
        assert_eq!(Field::Rationals.parse_scalar("-6/4").unwrap(), q(-3, 2));
        assert!(Field::Rationals.parse_scalar("1/0").is_err());
        assert!(gf(3).parse_scalar("1/2").is_err());
    }

    #[test]
    fn field_axioms_exhaustive_small_primes() {
        for p in [2u64, 3, 5, 7] {
            let f = gf(p);
            let elems: Vec<Scalar> = f.elements().unwrap().collect();
            for a in &elems {
                if !a.is_zero() {
                    assert!(a.mul_unchecked(&a.inv().unwrap()).is_one());
                }
                for b in &elems {
                    assert_eq!(a.add_unchecked(b), b.add_unchecked(a));
                    assert_eq!(a.sub_mul(b, &f.one()), a.sub_unchecked(b));
                    for c in &elems {
                        assert_eq!(
                            a.add_unchecked(b).add_unchecked(c),
                            a.add_unchecked(&b.add_unchecked(c))
                        );
                        assert_eq!(
                            a.mul_unchecked(&b.add_unchecked(c)),
                            a.mul_unchecked(b).add_unchecked(&a.mul_unchecked(c))
                        );
                    }
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn rational() -> impl Strategy<Value = Scalar> {
            (-50i64..50, 1i64..30).prop_map(|(n, d)| q(n, d))
        }

        proptest! {
            #[test]
            fn rational_axioms(a in rational(), b in rational(), c in rational()) {
                prop_assert_eq!(
                    a.add_unchecked(&b).add_unchecked(&c),
                    a.add_unchecked(&b.add_unchecked(&c))
                );
                prop_assert_eq!(
                    a.mul_unchecked(&b.add_unchecked(&c)),
                    a.mul_unchecked(&b).add_unchecked(&a.mul_unchecked(&c))
                );
                if !a.is_zero() {
                    prop_assert!(a.mul_unchecked(&a.inv().unwrap()).is_one());
                }
            }

            #[test]
            fn canonical_form_is_unique(n in -40i64..40, d in 1i64..20, k in 1i64..9) {
                let x = q(n, d);
                let y = q(n * k, d * k);
                prop_assert_eq!(&x, &y);
                let lit = x.to_literal();
                prop_assert_eq!(Field::Rationals.parse_scalar(&lit).unwrap(), y);
            }
        }
    }
}
