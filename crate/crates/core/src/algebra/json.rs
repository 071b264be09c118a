//! Matrix JSON: `{"ring": "Z"|"Q"|"Zzeta"|"Qzeta", "p": <prime, cyclotomic only>, "rows": [[entry, ...], ...]}`.
//!
//! Integers are JSON numbers (decimal strings once they leave the `i64`
//! range), rationals are `[num, den]`, cyclotomic entries are coefficient
//! lists on the power basis.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use super::cyclotomic::{CycInt, CycNum};
use super::matrix::Matrix;
use super::ring::{Ring, RingTag};
use crate::arith::Prime;
use crate::error::{Error, Result};

/// A matrix over one of the supported rings, tagged at runtime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactMatrix {
    Z(Matrix<BigInt>),
    Q(Matrix<BigRational>),
    Zzeta(Matrix<CycInt>),
    Qzeta(Matrix<CycNum>),
}

impl From<Matrix<BigInt>> for ExactMatrix {
    fn from(m: Matrix<BigInt>) -> Self {
        ExactMatrix::Z(m)
    }
}

impl From<Matrix<BigRational>> for ExactMatrix {
    fn from(m: Matrix<BigRational>) -> Self {
        ExactMatrix::Q(m)
    }
}

impl From<Matrix<CycInt>> for ExactMatrix {
    fn from(m: Matrix<CycInt>) -> Self {
        ExactMatrix::Zzeta(m)
    }
}

impl From<Matrix<CycNum>> for ExactMatrix {
    fn from(m: Matrix<CycNum>) -> Self {
        ExactMatrix::Qzeta(m)
    }
}

fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn int_from(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("non-integer entry {n}"))),
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad integer `{s}`"))),
        other => Err(Error::Parse(format!("expected integer, got {other}"))),
    }
}

fn rat_json(x: &BigRational) -> Value {
    json!([int_json(x.numer()), int_json(x.denom())])
}

fn rat_from(v: &Value) -> Result<BigRational> {
    match v.as_array().map(Vec::as_slice) {
        Some([n, d]) => {
            let d = int_from(d)?;
            if Zero::is_zero(&d) {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(int_from(n)?, d))
        }
        _ => Err(Error::Parse(format!("expected [num, den], got {v}"))),
    }
}

fn cyc_coeffs(x: &CycNum) -> Vec<BigRational> {
    x.numerators()
        .iter()
        .map(|c| BigRational::new(c.clone(), x.denominator().clone()))
        .collect()
}

impl ExactMatrix {
    pub fn tag(&self) -> RingTag {
        match self {
            ExactMatrix::Z(_) => RingTag::Z,
            ExactMatrix::Q(_) => RingTag::Q,
            ExactMatrix::Zzeta(_) => RingTag::Zzeta,
            ExactMatrix::Qzeta(_) => RingTag::Qzeta,
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            ExactMatrix::Z(m) => m.rows(),
            ExactMatrix::Q(m) => m.rows(),
            ExactMatrix::Zzeta(m) => m.rows(),
            ExactMatrix::Qzeta(m) => m.rows(),
        }
    }

    pub fn to_json(&self) -> Value {
        fn rows<R: Ring>(m: &Matrix<R>, f: impl Fn(&R) -> Value) -> Value {
            Value::Array(
                (0..m.rows())
                    .map(|i| Value::Array(m.row(i).iter().map(&f).collect()))
                    .collect(),
            )
        }
        match self {
            ExactMatrix::Z(m) => json!({"ring": "Z", "rows": rows(m, int_json)}),
            ExactMatrix::Q(m) => json!({"ring": "Q", "rows": rows(m, rat_json)}),
            ExactMatrix::Zzeta(m) => json!({
                "ring": "Zzeta",
                "p": m.ctx().get(),
                "rows": rows(m, |x| Value::Array(x.as_num().numerators().iter().map(int_json).collect())),
            }),
            ExactMatrix::Qzeta(m) => json!({
                "ring": "Qzeta",
                "p": m.ctx().get(),
                "rows": rows(m, |x| Value::Array(cyc_coeffs(x).iter().map(rat_json).collect())),
            }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let tag: RingTag = serde_json::from_value(v.get("ring").cloned().unwrap_or(Value::Null))
            .map_err(|e| Error::Parse(format!("ring tag: {e}")))?;
        let rows = v
            .get("rows")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing rows".into()))?;
        let grid = |f: &dyn Fn(&Value) -> Result<()>| -> Result<()> {
            for row in rows {
                for x in row.as_array().ok_or_else(|| Error::Parse("row is not an array".into()))? {
                    f(x)?;
                }
            }
            Ok(())
        };
        grid(&|_| Ok(()))?;
        let prime = || -> Result<Prime> {
            let p = v
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Parse("cyclotomic matrix needs \"p\"".into()))?;
            Prime::new(p)
        };
        fn build<R: Ring>(ctx: R::Ctx, rows: &[Value], f: impl Fn(&Value) -> Result<R>) -> Result<Matrix<R>> {
            let parsed = rows
                .iter()
                .map(|r| r.as_array().expect("checked").iter().map(&f).collect::<Result<Vec<R>>>())
                .collect::<Result<Vec<_>>>()?;
            Matrix::from_rows(ctx, parsed)
        }
        Ok(match tag {
            RingTag::Z => ExactMatrix::Z(build((), rows, int_from)?),
            RingTag::Q => ExactMatrix::Q(build((), rows, rat_from)?),
            RingTag::Zzeta => {
                let p = prime()?;
                ExactMatrix::Zzeta(build(p, rows, |x| {
                    let coeffs = x
                        .as_array()
                        .ok_or_else(|| Error::Parse("cyclotomic entry must be a list".into()))?
                        .iter()
                        .map(int_from)
                        .collect::<Result<Vec<_>>>()?;
                    CycInt::new(CycNum::new(p, coeffs, BigInt::from(1))?)
                })?)
            }
            RingTag::Qzeta => {
                let p = prime()?;
                ExactMatrix::Qzeta(build(p, rows, |x| {
                    let coeffs = x
                        .as_array()
                        .ok_or_else(|| Error::Parse("cyclotomic entry must be a list".into()))?
                        .iter()
                        .map(rat_from)
                        .collect::<Result<Vec<_>>>()?;
                    Ok(coeffs.iter().enumerate().fold(CycNum::zero(p), |acc, (k, c)| {
                        acc.add(&CycNum::zeta_pow(p, k as i64).scale(c))
                    }))
                })?)
            }
        })
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        ExactMatrix::from_json(&v).map_err(serde::de::Error::custom)
    }
}
