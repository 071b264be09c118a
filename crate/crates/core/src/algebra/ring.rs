use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Which exact ring a matrix or scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingTag {
    #[serde(rename = "Z")]
    Z,
    #[serde(rename = "Q")]
    Q,
    #[serde(rename = "Zzeta")]
    Zzeta,
    #[serde(rename = "Qzeta")]
    Qzeta,
}

/// Commutative integral domain with exact arithmetic.
///
/// Elements that need runtime parameters (the prime of a cyclotomic ring)
/// carry them; `Ctx` is what is needed to build constants from nothing.
pub trait Ring: Clone + PartialEq + Eq + Hash + Debug + Send + Sync {
    type Ctx: Copy + Debug + PartialEq + Eq + Hash + Send + Sync;
    const TAG: RingTag;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: Self::Ctx) -> Self;
    fn one(ctx: Self::Ctx) -> Self;
    fn from_int(ctx: Self::Ctx, v: i64) -> Self;

    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;

    /// The quotient `self / o` when it exists in this ring.
    fn try_div(&self, o: &Self) -> Option<Self>;

    fn is_unit(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one(self.ctx())
    }
}

impl Ring for BigInt {
    type Ctx = ();
    const TAG: RingTag = RingTag::Z;

    fn ctx(&self) {}
    fn zero(_: ()) -> Self {
        <BigInt as Zero>::zero()
    }
    fn one(_: ()) -> Self {
        <BigInt as One>::one()
    }
    fn from_int(_: (), v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            return None;
        }
        let (q, r) = self.div_rem(o);
        Zero::is_zero(&r).then_some(q)
    }
    fn is_unit(&self) -> bool {
        One::is_one(&self.abs())
    }
}

impl Ring for BigRational {
    type Ctx = ();
    const TAG: RingTag = RingTag::Q;

    fn ctx(&self) {}
    fn zero(_: ()) -> Self {
        <BigRational as Zero>::zero()
    }
    fn one(_: ()) -> Self {
        <BigRational as One>::one()
    }
    fn from_int(_: (), v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        (!Zero::is_zero(o)).then(|| self / o)
    }
    fn is_unit(&self) -> bool {
        !Zero::is_zero(self)
    }
}
