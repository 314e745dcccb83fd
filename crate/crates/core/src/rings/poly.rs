//! Sparse multivariate polynomials over Q or Q(zeta_n).
//!
//! Terms live in a BTreeMap keyed by exponent vectors under the graded
//! lexicographic order, so every polynomial has exactly one
//! representation: no zero coefficients, fixed variable count, and a
//! deterministic term order for serialization.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rings::cyclotomic::Cyclotomic;
use crate::rings::rational::Rational;

/// Ordered list of variable names shared by all polynomials of a ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new(names: Vec<String>) -> Arc<Self> {
        Arc::new(VarSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Exponent vector with the graded lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The commutative coefficient rings polynomials are built over.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ScalarRing {
    Rational,
    Cyclotomic(u32),
}

impl ScalarRing {
    pub fn zero(&self) -> Scalar {
        match self {
            ScalarRing::Rational => Scalar::Rat(Rational::zero()),
            ScalarRing::Cyclotomic(n) => Scalar::Cyc(Cyclotomic::zero(*n)),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            ScalarRing::Rational => Scalar::Rat(Rational::one()),
            ScalarRing::Cyclotomic(n) => Scalar::Cyc(Cyclotomic::one(*n)),
        }
    }

    pub fn from_integer(&self, v: i64) -> Scalar {
        match self {
            ScalarRing::Rational => Scalar::Rat(Rational::from_integer(v)),
            ScalarRing::Cyclotomic(n) => {
                Scalar::Cyc(Cyclotomic::from_rational(*n, Rational::from_integer(v)))
            }
        }
    }
}

impl fmt::Display for ScalarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarRing::Rational => write!(f, "Q"),
            ScalarRing::Cyclotomic(n) => write!(f, "Q(ζ_{n})"),
        }
    }
}

/// A scalar coefficient: rational or cyclotomic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Cyc(Cyclotomic),
}

impl Scalar {
    pub fn ring(&self) -> ScalarRing {
        match self {
            Scalar::Rat(_) => ScalarRing::Rational,
            Scalar::Cyc(c) => ScalarRing::Cyclotomic(c.conductor()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Cyc(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Cyc(c) => c.is_one(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.ring() != other.ring() {
            return Err(Error::Structure(format!(
                "scalar ring mismatch: {} vs {}",
                self.ring(),
                other.ring()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::Cyc(a.add(b)?),
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Scalar> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::Cyc(a.mul(b)?),
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Cyc(c) => Scalar::Cyc(c.neg()),
        }
    }

    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => r.inverse().map(Scalar::Rat),
            Scalar::Cyc(c) => c.inverse().map(Scalar::Cyc),
        }
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.clone()),
            Scalar::Cyc(c) => Scalar::Cyc(c.conj()),
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rat(r) => Some(r.clone()),
            Scalar::Cyc(c) => c.as_rational(),
        }
    }

    /// Exact embedding into a larger scalar ring: Q into Q(zeta_n), or
    /// Q(zeta_n) into Q(zeta_m) with n | m.
    pub fn embed_to(&self, target: &ScalarRing) -> Result<Scalar> {
        match (self, target) {
            (s, t) if s.ring() == *t => Ok(s.clone()),
            (Scalar::Rat(r), ScalarRing::Cyclotomic(n)) => {
                Ok(Scalar::Cyc(Cyclotomic::from_rational(*n, r.clone())))
            }
            (Scalar::Cyc(c), ScalarRing::Cyclotomic(m)) => Ok(Scalar::Cyc(c.embed(*m)?)),
            (Scalar::Cyc(c), ScalarRing::Rational) => c
                .as_rational()
                .map(Scalar::Rat)
                .ok_or_else(|| Error::Structure("cyclotomic value is not rational".into())),
            (Scalar::Rat(r), ScalarRing::Rational) => Ok(Scalar::Rat(r.clone())),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Cyc(c) => write!(f, "{c}"),
        }
    }
}

/// Sparse multivariate polynomial in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    vars: Arc<VarSet>,
    base: ScalarRing,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(vars: Arc<VarSet>, base: ScalarRing) -> Self {
        Poly { vars, base, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Arc<VarSet>, scalar: Scalar) -> Self {
        let base = scalar.ring();
        let mut p = Poly::zero(vars, base);
        if !scalar.is_zero() {
            p.terms.insert(Monomial(vec![0; p.vars.len()]), scalar);
        }
        p
    }

    pub fn one(vars: Arc<VarSet>, base: ScalarRing) -> Self {
        let one = base.one();
        Poly::constant(vars, one)
    }

    /// The variable with the given index, as a degree-1 polynomial.
    pub fn var(vars: Arc<VarSet>, base: ScalarRing, index: usize) -> Self {
        let mut expo = vec![0u32; vars.len()];
        expo[index] = 1;
        let mut p = Poly::zero(vars, base.clone());
        p.terms.insert(Monomial(expo), base.one());
        p
    }

    /// Normalize a raw term list: merge duplicate exponent vectors by
    /// addition, drop zero coefficients. Idempotent and independent of
    /// the input order.
    pub fn from_terms(
        vars: Arc<VarSet>,
        base: ScalarRing,
        raw: Vec<(Vec<u32>, Scalar)>,
    ) -> Result<Self> {
        let width = vars.len();
        let mut terms: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (expo, coeff) in raw {
            if expo.len() != width {
                return Err(Error::Structure(format!(
                    "exponent vector length {} != variable count {width}",
                    expo.len()
                )));
            }
            if coeff.ring() != base {
                return Err(Error::Structure(format!(
                    "coefficient ring {} != polynomial base {base}",
                    coeff.ring()
                )));
            }
            let key = Monomial(expo);
            let merged = match terms.get(&key) {
                Some(existing) => existing.add(&coeff)?,
                None => coeff,
            };
            if merged.is_zero() {
                terms.remove(&key);
            } else {
                terms.insert(key, merged);
            }
        }
        Ok(Poly { vars, base, terms })
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn base(&self) -> &ScalarRing {
        &self.base
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_constant() && c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (graded-lex descending) order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        if self.terms.is_empty() {
            return Some(self.base.zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_constant() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Some(d) when every term has total degree d.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.base != other.base || self.vars.names() != other.vars.names() {
            return Err(Error::Structure(
                "polynomial ring mismatch (variables or base)".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let merged = match terms.get(m) {
                Some(existing) => existing.add(c)?,
                None => c.clone(),
            };
            if merged.is_zero() {
                terms.remove(m);
            } else {
                terms.insert(m.clone(), merged);
            }
        }
        Ok(Poly { vars: self.vars.clone(), base: self.base.clone(), terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            vars: self.vars.clone(),
            base: self.base.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut terms: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb)?;
                let merged = match terms.get(&m) {
                    Some(existing) => existing.add(&c)?,
                    None => c,
                };
                if merged.is_zero() {
                    terms.remove(&m);
                } else {
                    terms.insert(m, merged);
                }
            }
        }
        Ok(Poly { vars: self.vars.clone(), base: self.base.clone(), terms })
    }

    pub fn scale(&self, s: &Scalar) -> Result<Self> {
        if s.is_zero() {
            return Ok(Poly::zero(self.vars.clone(), self.base.clone()));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = c.mul(s)?;
            if !v.is_zero() {
                terms.insert(m.clone(), v);
            }
        }
        Ok(Poly { vars: self.vars.clone(), base: self.base.clone(), terms })
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Poly::one(self.vars.clone(), self.base.clone());
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Specialize every variable to a scalar.
    pub fn eval(&self, values: &[Scalar]) -> Result<Scalar> {
        if values.len() != self.vars.len() {
            return Err(Error::Structure("evaluation point has wrong arity".into()));
        }
        let mut acc = self.base.zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&values[i])?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Rewrite over a new variable set; `position[i]` gives the index in
    /// `new_vars` of the current variable i. Used to compare polynomials
    /// produced under different element numberings.
    pub fn reorder_vars(&self, new_vars: Arc<VarSet>, position: &[usize]) -> Result<Self> {
        if position.len() != self.vars.len() {
            return Err(Error::Structure("reorder map has wrong arity".into()));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut expo = vec![0u32; new_vars.len()];
            for (i, &e) in m.0.iter().enumerate() {
                expo[position[i]] += e;
            }
            terms.insert(Monomial(expo), c.clone());
        }
        Ok(Poly { vars: new_vars, base: self.base.clone(), terms })
    }

    /// Exact embedding of all coefficients into a larger scalar ring.
    pub fn embed_base(&self, target: &ScalarRing) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.clone(), c.embed_to(target)?);
        }
        Ok(Poly { vars: self.vars.clone(), base: target.clone(), terms })
    }
}

impl fmt::Display for Poly {
    /// Canonical text form: graded-lex descending terms, `*` between
    /// factors, exponents with `^`. Non-rational coefficients are
    /// parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms_desc() {
            // Sign handling: rational-valued coefficients carry their sign
            // into the join, true cyclotomics print as a parenthesized unit.
            let (neg, mag) = match c {
                Scalar::Rat(r) => (r.is_negative(), Scalar::Rat(r.abs())),
                Scalar::Cyc(cy) => match cy.as_rational() {
                    Some(r) => (r.is_negative(), Scalar::Rat(r.abs())),
                    None => (false, c.clone()),
                },
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_str = match &mag {
                Scalar::Rat(r) => {
                    if r.is_one() && !m.is_constant() {
                        None
                    } else {
                        Some(r.to_string())
                    }
                }
                Scalar::Cyc(cy) => Some(format!("({cy})")),
            };
            let mut pieces: Vec<String> = Vec::new();
            if let Some(cs) = coeff_str {
                pieces.push(cs);
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e == 1 {
                    pieces.push(self.vars.name(i).to_string());
                } else {
                    pieces.push(format!("{}^{}", self.vars.name(i), e));
                }
            }
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Arc<VarSet> {
        VarSet::new(vec!["x".into(), "y".into()])
    }

    fn rat(n: i64) -> Scalar {
        Scalar::Rat(Rational::from_integer(n))
    }

    #[test]
    fn normalize_cancellation() {
        let p = Poly::from_terms(
            xy(),
            ScalarRing::Rational,
            vec![(vec![1, 0], rat(2)), (vec![1, 0], rat(-2))],
        )
        .unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn normalize_merge() {
        let p = Poly::from_terms(
            xy(),
            ScalarRing::Rational,
            vec![(vec![1, 0], rat(1)), (vec![1, 0], rat(1))],
        )
        .unwrap();
        assert_eq!(p.to_string(), "2*x");
    }

    #[test]
    fn normalize_orders_terms() {
        let p = Poly::from_terms(
            xy(),
            ScalarRing::Rational,
            vec![(vec![0, 1], rat(1)), (vec![1, 0], rat(1))],
        )
        .unwrap();
        assert_eq!(p.to_string(), "x + y");
    }

    #[test]
    fn normalize_rejects_ragged_exponents() {
        let err = Poly::from_terms(xy(), ScalarRing::Rational, vec![(vec![1], rat(1))]);
        assert!(err.is_err());
    }

    #[test]
    fn difference_of_squares() {
        let x = Poly::var(xy(), ScalarRing::Rational, 0);
        let y = Poly::var(xy(), ScalarRing::Rational, 1);
        let sum = x.add(&y).unwrap();
        let diff = x.sub(&y).unwrap();
        let prod = sum.mul(&diff).unwrap();
        let expect = x.mul(&x).unwrap().sub(&y.mul(&y).unwrap()).unwrap();
        assert_eq!(prod, expect);
        assert_eq!(prod.to_string(), "x^2 - y^2");
    }

    #[test]
    fn homogeneous_degree_detection() {
        let x = Poly::var(xy(), ScalarRing::Rational, 0);
        let y = Poly::var(xy(), ScalarRing::Rational, 1);
        let h = x.mul(&y).unwrap().add(&x.mul(&x).unwrap()).unwrap();
        assert_eq!(h.homogeneous_degree(), Some(2));
        let nh = h.add(&x).unwrap();
        assert_eq!(nh.homogeneous_degree(), None);
    }

    #[test]
    fn eval_specializes() {
        let x = Poly::var(xy(), ScalarRing::Rational, 0);
        let y = Poly::var(xy(), ScalarRing::Rational, 1);
        let p = x.mul(&x).unwrap().sub(&y.mul(&y).unwrap()).unwrap();
        let v = p.eval(&[rat(3), rat(2)]).unwrap();
        assert_eq!(v, rat(5));
    }

    #[test]
    fn display_constant_and_zero() {
        let zero = Poly::zero(xy(), ScalarRing::Rational);
        assert_eq!(zero.to_string(), "0");
        let c = Poly::constant(xy(), rat(-7));
        assert_eq!(c.to_string(), "-7");
    }
}
