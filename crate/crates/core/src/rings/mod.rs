//! The exact coefficient layer: one ring contract over rationals,
//! cyclotomic fields, sparse polynomials, twisted group algebras, and
//! matrices thereof.
//!
//! Every element is a [`Value`] that knows its own [`Ring`] descriptor;
//! binary operations require identical descriptors and fail with a
//! structure error otherwise. Promotions between rings (span widening,
//! scalar embeddings) are always explicit.

pub mod cyclotomic;
pub mod poly;
pub mod rational;
pub mod text;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::tga::{Algebra, Span, TgaElement};

pub use cyclotomic::Cyclotomic;
pub use poly::{Monomial, Poly, Scalar, ScalarRing, VarSet};
pub use rational::Rational;

/// Ring descriptor: a tag tree describing how a ring was constructed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ring {
    Rational,
    Cyclotomic(u32),
    Poly { vars: Arc<VarSet>, base: ScalarRing },
    Tga { algebra: Arc<Algebra>, span: Span },
    Matrix { size: usize, entry: Box<Ring> },
}

impl Ring {
    pub fn poly(vars: Arc<VarSet>, base: ScalarRing) -> Ring {
        Ring::Poly { vars, base }
    }

    pub fn zero(&self) -> Value {
        match self {
            Ring::Rational => Value::Rat(Rational::zero()),
            Ring::Cyclotomic(n) => Value::Cyc(Cyclotomic::zero(*n)),
            Ring::Poly { vars, base } => Value::Poly(Poly::zero(vars.clone(), base.clone())),
            Ring::Tga { algebra, span } => {
                Value::Tga(TgaElement::zero(algebra.clone(), span.clone()))
            }
            Ring::Matrix { size, entry } => {
                Value::Mat(Matrix::zero(*size, *size, entry.as_ref().clone()))
            }
        }
    }

    pub fn one(&self) -> Value {
        match self {
            Ring::Rational => Value::Rat(Rational::one()),
            Ring::Cyclotomic(n) => Value::Cyc(Cyclotomic::one(*n)),
            Ring::Poly { vars, base } => Value::Poly(Poly::one(vars.clone(), base.clone())),
            Ring::Tga { algebra, span } => {
                Value::Tga(TgaElement::one(algebra.clone(), span.clone()))
            }
            Ring::Matrix { size, entry } => {
                Value::Mat(Matrix::identity(*size, entry.as_ref().clone()))
            }
        }
    }

    pub fn from_integer(&self, v: i64) -> Result<Value> {
        match self {
            Ring::Rational => Ok(Value::Rat(Rational::from_integer(v))),
            Ring::Cyclotomic(n) => Ok(Value::Cyc(Cyclotomic::from_rational(
                *n,
                Rational::from_integer(v),
            ))),
            Ring::Poly { vars, base } => Ok(Value::Poly(Poly::constant(
                vars.clone(),
                base.from_integer(v),
            ))),
            _ => Err(Error::Structure(
                "integer lift only defined for scalar and polynomial rings".into(),
            )),
        }
    }

    pub fn is_commutative(&self) -> bool {
        match self {
            Ring::Rational | Ring::Cyclotomic(_) | Ring::Poly { .. } => true,
            Ring::Tga { algebra, span } => {
                let idx = span.indices(algebra.order());
                algebra.group().is_abelian_on(&idx)
                    && algebra.cocycle().is_symmetric_on(&idx)
            }
            Ring::Matrix { size, entry } => *size == 1 && entry.is_commutative(),
        }
    }

    /// True for the scalar fields Q and Q(zeta_n).
    pub fn is_scalar_field(&self) -> bool {
        matches!(self, Ring::Rational | Ring::Cyclotomic(_))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Rational => write!(f, "Q"),
            Ring::Cyclotomic(n) => write!(f, "Q(ζ_{n})"),
            Ring::Poly { vars, base } => write!(f, "{base}[{}]", vars.names().join(",")),
            Ring::Tga { algebra, span } => {
                let span_desc = match span {
                    Span::Full => "full".to_string(),
                    Span::Sub(v) => format!("span{:?}", v.as_ref()),
                };
                write!(f, "TGA({}, {span_desc})", algebra.label())
            }
            Ring::Matrix { size, entry } => write!(f, "M({size}, {entry})"),
        }
    }
}

/// Result of a unit test in a ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Invertibility {
    Invertible(Value),
    NotInvertible,
    /// The ring has no implemented unit test for this element shape.
    Undecidable(String),
}

/// A dynamically typed exact ring element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Rat(Rational),
    Cyc(Cyclotomic),
    Poly(Poly),
    Tga(TgaElement),
    Mat(Matrix),
}

impl Value {
    pub fn ring(&self) -> Ring {
        match self {
            Value::Rat(_) => Ring::Rational,
            Value::Cyc(c) => Ring::Cyclotomic(c.conductor()),
            Value::Poly(p) => Ring::Poly { vars: p.vars().clone(), base: p.base().clone() },
            Value::Tga(t) => Ring::Tga { algebra: t.algebra().clone(), span: t.span().clone() },
            Value::Mat(m) => {
                debug_assert!(m.is_square(), "matrix ring elements are square");
                Ring::Matrix { size: m.rows(), entry: Box::new(m.entry_ring().clone()) }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Rat(r) => r.is_zero(),
            Value::Cyc(c) => c.is_zero(),
            Value::Poly(p) => p.is_zero(),
            Value::Tga(t) => t.is_zero(),
            Value::Mat(m) => m.entries().iter().all(Value::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Value::Rat(r) => r.is_one(),
            Value::Cyc(c) => c.is_one(),
            Value::Poly(p) => p.is_one(),
            Value::Tga(t) => t.is_one(),
            Value::Mat(m) => *m == Matrix::identity(m.rows(), m.entry_ring().clone()),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        let (a, b) = (self.ring(), other.ring());
        if a != b {
            return Err(Error::Structure(format!("ring descriptor mismatch: {a} vs {b}")));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Value> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Value::Cyc(a), Value::Cyc(b)) => Value::Cyc(a.add(b)?),
            (Value::Poly(a), Value::Poly(b)) => Value::Poly(a.add(b)?),
            (Value::Tga(a), Value::Tga(b)) => Value::Tga(a.add(b)?),
            (Value::Mat(a), Value::Mat(b)) => Value::Mat(a.add(b)?),
            _ => unreachable!("descriptors checked"),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Value> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Value> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Value::Cyc(a), Value::Cyc(b)) => Value::Cyc(a.mul(b)?),
            (Value::Poly(a), Value::Poly(b)) => Value::Poly(a.mul(b)?),
            (Value::Tga(a), Value::Tga(b)) => Value::Tga(a.mul(b)?),
            (Value::Mat(a), Value::Mat(b)) => Value::Mat(a.mul(b)?),
            _ => unreachable!("descriptors checked"),
        })
    }

    pub fn neg(&self) -> Value {
        match self {
            Value::Rat(r) => Value::Rat(-r),
            Value::Cyc(c) => Value::Cyc(c.neg()),
            Value::Poly(p) => Value::Poly(p.neg()),
            Value::Tga(t) => Value::Tga(t.neg()),
            Value::Mat(m) => Value::Mat(m.neg()),
        }
    }

    pub fn pow(&self, k: u32) -> Result<Value> {
        let mut acc = self.ring().one();
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Complex conjugation where it makes sense (cyclotomic scalars, and
    /// structures built over them).
    pub fn conj(&self) -> Result<Value> {
        Ok(match self {
            Value::Rat(r) => Value::Rat(r.clone()),
            Value::Cyc(c) => Value::Cyc(c.conj()),
            Value::Poly(p) => {
                let mut terms = Vec::new();
                for (m, c) in p.terms_desc() {
                    terms.push((m.0.clone(), c.conj()));
                }
                Value::Poly(Poly::from_terms(p.vars().clone(), p.base().clone(), terms)?)
            }
            Value::Tga(_) => {
                return Err(Error::Structure(
                    "conjugation is not defined on group algebra elements".into(),
                ))
            }
            Value::Mat(m) => Value::Mat(m.conj_entries()?),
        })
    }

    /// Decide invertibility and produce the inverse when it exists.
    pub fn try_invert(&self) -> Result<Invertibility> {
        Ok(match self {
            Value::Rat(r) => match r.inverse() {
                Some(i) => Invertibility::Invertible(Value::Rat(i)),
                None => Invertibility::NotInvertible,
            },
            Value::Cyc(c) => match c.inverse() {
                Some(i) => Invertibility::Invertible(Value::Cyc(i)),
                None => Invertibility::NotInvertible,
            },
            // Polynomial rings over a field are integral domains: the
            // units are exactly the nonzero constants.
            Value::Poly(p) => match p.as_constant() {
                Some(c) => match c.inverse() {
                    Some(i) => Invertibility::Invertible(Value::Poly(Poly::constant(
                        p.vars().clone(),
                        i,
                    ))),
                    None => Invertibility::NotInvertible,
                },
                None => Invertibility::NotInvertible,
            },
            Value::Tga(t) => match t.inverse()? {
                Some(i) => Invertibility::Invertible(Value::Tga(i)),
                None => Invertibility::NotInvertible,
            },
            Value::Mat(m) => match m.inverse_via_adjugate()? {
                Some(i) => Invertibility::Invertible(Value::Mat(i)),
                None => Invertibility::NotInvertible,
            },
        })
    }

    /// Embed scalar coefficients into a larger scalar ring (rational into
    /// cyclotomic, cyclotomic into a multiple conductor), recursively for
    /// polynomials and matrices.
    pub fn embed_scalars(&self, target: &ScalarRing) -> Result<Value> {
        Ok(match self {
            Value::Rat(r) => match Scalar::Rat(r.clone()).embed_to(target)? {
                Scalar::Rat(x) => Value::Rat(x),
                Scalar::Cyc(x) => Value::Cyc(x),
            },
            Value::Cyc(c) => match Scalar::Cyc(c.clone()).embed_to(target)? {
                Scalar::Rat(x) => Value::Rat(x),
                Scalar::Cyc(x) => Value::Cyc(x),
            },
            Value::Poly(p) => Value::Poly(p.embed_base(target)?),
            Value::Mat(m) => {
                let sample = self.ringed_entry_target(m, target)?;
                Value::Mat(m.map_entries(sample, |v| v.embed_scalars(target))?)
            }
            Value::Tga(_) => {
                return Err(Error::Structure(
                    "scalar embedding of group algebra elements is not supported".into(),
                ))
            }
        })
    }

    fn ringed_entry_target(&self, m: &Matrix, target: &ScalarRing) -> Result<Ring> {
        fn embed_ring(r: &Ring, target: &ScalarRing) -> Result<Ring> {
            Ok(match r {
                Ring::Rational | Ring::Cyclotomic(_) => match target {
                    ScalarRing::Rational => Ring::Rational,
                    ScalarRing::Cyclotomic(n) => Ring::Cyclotomic(*n),
                },
                Ring::Poly { vars, .. } => {
                    Ring::Poly { vars: vars.clone(), base: target.clone() }
                }
                Ring::Matrix { size, entry } => Ring::Matrix {
                    size: *size,
                    entry: Box::new(embed_ring(entry, target)?),
                },
                Ring::Tga { .. } => {
                    return Err(Error::Structure(
                        "scalar embedding of group algebra elements is not supported".into(),
                    ))
                }
            })
        }
        embed_ring(m.entry_ring(), target)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Value::Rat(r) => Some(r.clone()),
            Value::Cyc(c) => c.as_rational(),
            Value::Poly(p) => p.as_constant().and_then(|s| s.as_rational()),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rat(r) => write!(f, "{r}"),
            Value::Cyc(c) => write!(f, "{c}"),
            Value::Poly(p) => write!(f, "{p}"),
            Value::Tga(t) => write!(f, "{t}"),
            Value::Mat(m) => write!(f, "{m}"),
        }
    }
}

/// The four arithmetic operations of the ring contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// Ring arithmetic with strict descriptor checking. `Neg` ignores `b`.
pub fn ring_arith(a: &Value, b: Option<&Value>, op: ArithOp) -> Result<Value> {
    match op {
        ArithOp::Neg => Ok(a.neg()),
        _ => {
            let b = b.ok_or_else(|| {
                Error::Structure("binary operation needs a second operand".into())
            })?;
            match op {
                ArithOp::Add => a.add(b),
                ArithOp::Sub => a.sub(b),
                ArithOp::Mul => a.mul(b),
                ArithOp::Neg => unreachable!(),
            }
        }
    }
}

/// Canonical reduction of a raw coefficient vector modulo the n-th
/// cyclotomic polynomial.
pub fn cyclo_reduce(raw: Vec<Rational>, n: u32) -> Result<Cyclotomic> {
    Cyclotomic::reduce(raw, n)
}

/// Normalize a raw term list into a canonical sparse polynomial.
pub fn poly_normalize(
    vars: Arc<VarSet>,
    base: ScalarRing,
    raw: Vec<(Vec<u32>, Scalar)>,
) -> Result<Poly> {
    Poly::from_terms(vars, base, raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptor_mismatch_is_structural() {
        let a = Value::Rat(Rational::one());
        let b = Value::Cyc(Cyclotomic::one(4));
        assert!(matches!(a.add(&b), Err(Error::Structure(_))));
    }

    #[test]
    fn ring_arith_surface() {
        let a = Value::Rat(Rational::from_pair(1, 2));
        let b = Value::Rat(Rational::from_pair(1, 3));
        let sum = ring_arith(&a, Some(&b), ArithOp::Add).unwrap();
        assert_eq!(sum, Value::Rat(Rational::from_pair(5, 6)));
        let neg = ring_arith(&a, None, ArithOp::Neg).unwrap();
        assert_eq!(neg, Value::Rat(Rational::from_pair(-1, 2)));
    }

    #[test]
    fn poly_units_are_nonzero_constants() {
        let vars = VarSet::new(vec!["x".into()]);
        let x = Value::Poly(Poly::var(vars.clone(), ScalarRing::Rational, 0));
        assert_eq!(x.try_invert().unwrap(), Invertibility::NotInvertible);
        let c = Value::Poly(Poly::constant(
            vars,
            Scalar::Rat(Rational::from_integer(2)),
        ));
        match c.try_invert().unwrap() {
            Invertibility::Invertible(i) => {
                assert!(c.mul(&i).unwrap().is_one());
            }
            other => panic!("expected invertible, got {other:?}"),
        }
    }
}
