//! Twisted group algebras R^c[M]: finite groups with a 2-cocycle over an
//! exact commutative coefficient ring.
//!
//! This one construction realizes every algebra tower used elsewhere:
//! C over R is the sign-twisted C2, the quaternions over the Gaussian
//! rationals are the sign-twisted C2xC2, and the group-determinant
//! towers are plain group algebras with polynomial coefficients.

pub mod group;
pub mod tower;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rings::poly::{Poly, Scalar};
use crate::rings::{Ring, Value};

pub use group::{validate_group, FiniteGroupTable};
pub use tower::{
    basis_conditions, coset_decompose, subalgebra_commutative, BasisConditions, BasisVec,
    TowerBasis,
};

/// A normalized 2-cocycle with values in the units of the coefficient
/// ring (stored as exact scalars).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    values: Vec<Vec<Scalar>>,
}

/// Check normalization and the cocycle identity
/// c(i,j)c(ij,k) = c(j,k)c(i,jk) on all triples.
pub fn validate_cocycle(
    group: &FiniteGroupTable,
    values: &[Vec<Scalar>],
) -> std::result::Result<(), String> {
    let n = group.order();
    if values.len() != n || values.iter().any(|r| r.len() != n) {
        return Err(format!("cocycle must be a {n}x{n} matrix"));
    }
    for row in values {
        for v in row {
            if v.is_zero() {
                return Err("cocycle value is not a unit (zero)".into());
            }
        }
    }
    let e = group.identity();
    for g in 0..n {
        if !values[e][g].is_one() || !values[g][e].is_one() {
            return Err(format!("normalization fails: c(1,{g}) or c({g},1) != 1"));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = values[i][j]
                    .mul(&values[group.mul(i, j)][k])
                    .map_err(|e| e.to_string())?;
                let rhs = values[j][k]
                    .mul(&values[i][group.mul(j, k)])
                    .map_err(|e| e.to_string())?;
                if lhs != rhs {
                    return Err(format!("cocycle identity fails at triple ({i},{j},{k})"));
                }
            }
        }
    }
    Ok(())
}

impl Cocycle {
    pub fn new(group: &FiniteGroupTable, values: Vec<Vec<Scalar>>) -> Result<Self> {
        validate_cocycle(group, &values).map_err(Error::Validation)?;
        Ok(Cocycle { values })
    }

    /// The trivial cocycle (ordinary group algebra).
    pub fn trivial(order: usize) -> Self {
        let one = Scalar::Rat(crate::rings::rational::Rational::one());
        Cocycle {
            values: vec![vec![one; order]; order],
        }
    }

    pub fn value(&self, i: usize, j: usize) -> &Scalar {
        &self.values[i][j]
    }

    pub fn values(&self) -> &[Vec<Scalar>] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|r| r.iter().all(Scalar::is_one))
    }

    /// Symmetric on a subset: c(h,h') = c(h',h).
    pub fn is_symmetric_on(&self, subset: &[usize]) -> bool {
        subset
            .iter()
            .all(|&i| subset.iter().all(|&j| self.values[i][j] == self.values[j][i]))
    }
}

/// Coefficient span of a twisted group algebra element: either the full
/// group or the span of a subgroup. Part of the ring descriptor, so
/// elements of B = span(H) and of A mix only through explicit promotion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Span {
    Full,
    Sub(Arc<Vec<usize>>),
}

impl Span {
    pub fn sub(indices: Vec<usize>) -> Span {
        let mut sorted = indices;
        sorted.sort_unstable();
        Span::Sub(Arc::new(sorted))
    }

    pub fn contains(&self, idx: usize) -> bool {
        match self {
            Span::Full => true,
            Span::Sub(v) => v.binary_search(&idx).is_ok(),
        }
    }

    pub fn indices(&self, order: usize) -> Vec<usize> {
        match self {
            Span::Full => (0..order).collect(),
            Span::Sub(v) => v.as_ref().clone(),
        }
    }

    pub fn rank(&self, order: usize) -> usize {
        match self {
            Span::Full => order,
            Span::Sub(v) => v.len(),
        }
    }
}

/// The immutable data of a twisted group algebra: group, cocycle, and
/// coefficient ring. Shared by reference between all its elements.
#[derive(Debug)]
pub struct Algebra {
    group: FiniteGroupTable,
    cocycle: Cocycle,
    coeff: Ring,
    label: String,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.group == other.group
                && self.cocycle == other.cocycle
                && self.coeff == other.coeff)
    }
}

impl Eq for Algebra {}

impl Algebra {
    pub fn new(
        group: FiniteGroupTable,
        cocycle: Cocycle,
        coeff: Ring,
        label: impl Into<String>,
    ) -> Result<Arc<Self>> {
        match coeff {
            Ring::Rational | Ring::Cyclotomic(_) | Ring::Poly { .. } => {}
            _ => {
                return Err(Error::Structure(
                    "twisted group algebra coefficients must be a commutative scalar or polynomial ring".into(),
                ))
            }
        }
        validate_cocycle(&group, cocycle.values()).map_err(Error::Validation)?;
        Ok(Arc::new(Algebra {
            group,
            cocycle,
            coeff,
            label: label.into(),
        }))
    }

    pub fn group(&self) -> &FiniteGroupTable {
        &self.group
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }

    pub fn coeff_ring(&self) -> &Ring {
        &self.coeff
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Lift an exact scalar into the coefficient ring (constant poly for
    /// polynomial coefficients, exact field embedding otherwise).
    pub fn lift_scalar(&self, s: &Scalar) -> Result<Value> {
        match &self.coeff {
            Ring::Rational => Ok(match s.embed_to(&crate::rings::poly::ScalarRing::Rational)? {
                Scalar::Rat(r) => Value::Rat(r),
                Scalar::Cyc(_) => unreachable!(),
            }),
            Ring::Cyclotomic(n) => {
                match s.embed_to(&crate::rings::poly::ScalarRing::Cyclotomic(*n))? {
                    Scalar::Cyc(c) => Ok(Value::Cyc(c)),
                    Scalar::Rat(_) => unreachable!(),
                }
            }
            Ring::Poly { vars, base } => {
                let coeff = s.embed_to(base)?;
                Ok(Value::Poly(Poly::constant(vars.clone(), coeff)))
            }
            _ => unreachable!("validated at construction"),
        }
    }

    /// Full-group commutativity: abelian group with a symmetric cocycle.
    pub fn is_commutative(&self) -> bool {
        let all: Vec<usize> = (0..self.order()).collect();
        self.group.is_abelian() && self.cocycle.is_symmetric_on(&all)
    }
}

/// An element of a twisted group algebra: a finite map from group
/// monomials to nonzero coefficients. The coefficient ring is central;
/// all noncommutativity is carried by the table and cocycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TgaElement {
    algebra: Arc<Algebra>,
    span: Span,
    coords: BTreeMap<usize, Value>,
}

impl TgaElement {
    pub fn zero(algebra: Arc<Algebra>, span: Span) -> Self {
        TgaElement { algebra, span, coords: BTreeMap::new() }
    }

    pub fn one(algebra: Arc<Algebra>, span: Span) -> Self {
        let id = algebra.group().identity();
        let coeff_one = algebra.coeff_ring().one();
        let mut coords = BTreeMap::new();
        coords.insert(id, coeff_one);
        debug_assert!(span.contains(id));
        TgaElement { algebra, span, coords }
    }

    /// coeff * g as an algebra element.
    pub fn monomial(algebra: Arc<Algebra>, span: Span, elem: usize, coeff: Value) -> Result<Self> {
        if !span.contains(elem) {
            return Err(Error::Structure(format!(
                "monomial index {elem} outside span"
            )));
        }
        if coeff.ring() != *algebra.coeff_ring() {
            return Err(Error::Structure(
                "monomial coefficient not in the algebra's coefficient ring".into(),
            ));
        }
        let mut coords = BTreeMap::new();
        if !coeff.is_zero() {
            coords.insert(elem, coeff);
        }
        Ok(TgaElement { algebra, span, coords })
    }

    pub fn from_coords(
        algebra: Arc<Algebra>,
        span: Span,
        coords: Vec<(usize, Value)>,
    ) -> Result<Self> {
        let mut acc = TgaElement::zero(algebra.clone(), span.clone());
        for (elem, coeff) in coords {
            let mono = TgaElement::monomial(algebra.clone(), span.clone(), elem, coeff)?;
            acc = acc.add(&mono)?;
        }
        Ok(acc)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn span(&self) -> &Span {
        &self.span
    }

    pub fn coords(&self) -> &BTreeMap<usize, Value> {
        &self.coords
    }

    pub fn coeff_of(&self, elem: usize) -> Value {
        self.coords
            .get(&elem)
            .cloned()
            .unwrap_or_else(|| self.algebra.coeff_ring().zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coords.len() == 1
            && self
                .coords
                .get(&self.algebra.group().identity())
                .map(Value::is_one)
                .unwrap_or(false)
    }

    /// Support lies in the identity monomial only: the element is a
    /// coefficient-ring scalar. Returns that scalar.
    pub fn scalar_part(&self) -> Option<Value> {
        if self.coords.is_empty() {
            return Some(self.algebra.coeff_ring().zero());
        }
        if self.coords.len() == 1 {
            if let Some(v) = self.coords.get(&self.algebra.group().identity()) {
                return Some(v.clone());
            }
        }
        None
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.algebra != other.algebra || self.span != other.span {
            return Err(Error::Structure(
                "twisted group algebra descriptor mismatch".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut coords = self.coords.clone();
        for (g, c) in &other.coords {
            let merged = match coords.get(g) {
                Some(existing) => existing.add(c)?,
                None => c.clone(),
            };
            if merged.is_zero() {
                coords.remove(g);
            } else {
                coords.insert(*g, merged);
            }
        }
        Ok(TgaElement { algebra: self.algebra.clone(), span: self.span.clone(), coords })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TgaElement {
            algebra: self.algebra.clone(),
            span: self.span.clone(),
            coords: self.coords.iter().map(|(g, c)| (*g, c.neg())).collect(),
        }
    }

    /// Bilinear extension of g_i . g_j = c(i,j) g_{ij}.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let group = self.algebra.group();
        let mut coords: BTreeMap<usize, Value> = BTreeMap::new();
        for (&g, x) in &self.coords {
            for (&h, y) in &other.coords {
                let k = group.mul(g, h);
                debug_assert!(self.span.contains(k), "span not closed under product");
                let unit = self.algebra.lift_scalar(self.algebra.cocycle().value(g, h))?;
                let term = x.mul(y)?.mul(&unit)?;
                let merged = match coords.get(&k) {
                    Some(existing) => existing.add(&term)?,
                    None => term,
                };
                if merged.is_zero() {
                    coords.remove(&k);
                } else {
                    coords.insert(k, merged);
                }
            }
        }
        Ok(TgaElement { algebra: self.algebra.clone(), span: self.span.clone(), coords })
    }

    pub fn scale(&self, c: &Value) -> Result<Self> {
        let mut coords = BTreeMap::new();
        for (g, x) in &self.coords {
            let v = x.mul(c)?;
            if !v.is_zero() {
                coords.insert(*g, v);
            }
        }
        Ok(TgaElement { algebra: self.algebra.clone(), span: self.span.clone(), coords })
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = TgaElement::one(self.algebra.clone(), self.span.clone());
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Retype into another span of the same algebra; fails if the support
    /// does not fit.
    pub fn with_span(&self, span: Span) -> Result<Self> {
        for g in self.coords.keys() {
            if !span.contains(*g) {
                return Err(Error::Structure(format!(
                    "support element {g} outside target span"
                )));
            }
        }
        Ok(TgaElement {
            algebra: self.algebra.clone(),
            span,
            coords: self.coords.clone(),
        })
    }

    pub fn promote_to_full(&self) -> Self {
        TgaElement {
            algebra: self.algebra.clone(),
            span: Span::Full,
            coords: self.coords.clone(),
        }
    }

    /// Inverse of a single monomial u*g: u^{-1} c(g, g^{-1})^{-1} g^{-1}.
    pub fn monomial_inverse(&self) -> Result<Self> {
        if self.coords.len() != 1 {
            return Err(Error::Precondition("not a monomial".into()));
        }
        let (&g, coeff) = self.coords.iter().next().unwrap();
        let group = self.algebra.group();
        let ginv = group.inv(g);
        let unit = self
            .algebra
            .lift_scalar(self.algebra.cocycle().value(g, ginv))?;
        let inv_unit = match unit.try_invert()? {
            crate::rings::Invertibility::Invertible(v) => v,
            _ => return Err(Error::Structure("cocycle value is not a unit".into())),
        };
        let inv_coeff = match coeff.try_invert()? {
            crate::rings::Invertibility::Invertible(v) => v,
            _ => return Err(Error::Precondition("monomial coefficient is not a unit".into())),
        };
        if !self.span.contains(ginv) {
            return Err(Error::Structure("inverse leaves the span".into()));
        }
        TgaElement::monomial(
            self.algebra.clone(),
            self.span.clone(),
            ginv,
            inv_coeff.mul(&inv_unit)?,
        )
    }

    /// Inverse via the regular representation of the span over the
    /// coefficient ring. None when the element is not a unit.
    pub fn inverse(&self) -> Result<Option<Self>> {
        let order = self.algebra.order();
        let basis = self.span.indices(order);
        let coeff_ring = self.algebra.coeff_ring().clone();
        let n = basis.len();
        // Multiplication-by-self matrix: column j = coords of self * h_j.
        let mut cols: Vec<Vec<Value>> = Vec::with_capacity(n);
        for &h in &basis {
            let hj = TgaElement::monomial(
                self.algebra.clone(),
                self.span.clone(),
                h,
                coeff_ring.one(),
            )?;
            let prod = self.mul(&hj)?;
            cols.push(
                basis
                    .iter()
                    .map(|&g| prod.coeff_of(g))
                    .collect(),
            );
        }
        let mat = crate::matrix::Matrix::from_fn(n, n, coeff_ring.clone(), |i, j| {
            cols[j][i].clone()
        })?;
        let inv = match mat.inverse_via_adjugate()? {
            Some(m) => m,
            None => return Ok(None),
        };
        // self^{-1} = sum_j h_j * (inv e_identity)_j where e_identity is
        // the coordinate vector of 1.
        let id = self.algebra.group().identity();
        let id_pos = basis.iter().position(|&g| g == id).expect("span contains identity");
        let mut acc = TgaElement::zero(self.algebra.clone(), self.span.clone());
        for (j, &h) in basis.iter().enumerate() {
            let c = inv.get(j, id_pos).clone();
            if c.is_zero() {
                continue;
            }
            let mono = TgaElement::monomial(self.algebra.clone(), self.span.clone(), h, c)?;
            acc = acc.add(&mono)?;
        }
        Ok(Some(acc))
    }
}

impl fmt::Display for TgaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let names = self.algebra.group().element_names();
        let mut first = true;
        for (g, c) in &self.coords {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "({c})*[{}]", names[*g])?;
        }
        Ok(())
    }
}
