//! Coset bases realizing "A is a free right B-module".
//!
//! A tower pairs a domain subalgebra (the span of a subgroup, or the
//! whole group) with a smaller subgroup K; the basis vectors are
//! unit-scaled monomials hitting each left coset of K exactly once, with
//! the identity as the first vector. Every group element decomposes
//! uniquely as e_i * (unit * h) with h in K.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rings::poly::Scalar;
use crate::rings::rational::Rational;
use crate::rings::{Ring, Value};
use crate::tga::{Algebra, Span, TgaElement};

/// A basis vector e_i = unit * g_elem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisVec {
    pub unit: Scalar,
    pub elem: usize,
}

impl BasisVec {
    pub fn plain(elem: usize) -> Self {
        BasisVec { unit: Scalar::Rat(Rational::one()), elem }
    }
}

/// Unique decomposition data for one group monomial: g = e_{rep} * (unit * h).
#[derive(Debug, Clone)]
struct CosetDecomp {
    rep: usize, // basis position
    h: usize,   // subgroup element index
    unit: Scalar,
}

/// A subgroup-and-coset-representative structure: the basis e of the
/// domain as a free right module over the span of `sub`.
#[derive(Debug, Clone)]
pub struct TowerBasis {
    algebra: Arc<Algebra>,
    domain: Span,
    sub: Arc<Vec<usize>>,
    vecs: Vec<BasisVec>,
    decomp: BTreeMap<usize, CosetDecomp>,
}

/// Canonical coset basis: representative of each left coset gK is its
/// minimal element index, except the identity coset which is represented
/// by the identity itself (so e_1 = 1).
pub fn coset_decompose(
    algebra: &Arc<Algebra>,
    domain: Span,
    sub: &[usize],
) -> Result<TowerBasis> {
    let group = algebra.group();
    let domain_idx = domain.indices(group.order());
    if !group.is_subgroup(&domain_idx) {
        return Err(Error::Structure("domain is not a subgroup".into()));
    }
    if !group.is_subgroup(sub) {
        return Err(Error::Structure("H is not a subgroup".into()));
    }
    let cosets = group.left_cosets(&domain_idx, sub)?;
    let mut vecs = Vec::with_capacity(cosets.len());
    for (i, coset) in cosets.iter().enumerate() {
        let rep = if i == 0 { group.identity() } else { coset[0] };
        debug_assert!(coset.contains(&rep));
        vecs.push(BasisVec::plain(rep));
    }
    TowerBasis::with_vecs(algebra.clone(), domain, sub.to_vec(), vecs)
}

impl TowerBasis {
    /// Build a tower from explicit basis vectors (one per coset, the
    /// identity first). Used for the canonical basis, for randomized
    /// representative choices, and for composed bases e (x) f.
    pub fn with_vecs(
        algebra: Arc<Algebra>,
        domain: Span,
        sub: Vec<usize>,
        vecs: Vec<BasisVec>,
    ) -> Result<TowerBasis> {
        let group = algebra.group();
        let mut sub_sorted = sub;
        sub_sorted.sort_unstable();
        if !group.is_subgroup(&sub_sorted) {
            return Err(Error::Structure("H is not a subgroup".into()));
        }
        let domain_idx = domain.indices(group.order());
        if !group.is_subgroup(&domain_idx) {
            return Err(Error::Structure("domain is not a subgroup".into()));
        }
        if sub_sorted.iter().any(|h| !domain.contains(*h)) {
            return Err(Error::Structure("H not contained in the domain".into()));
        }
        match vecs.first() {
            Some(v) if v.elem == group.identity() && v.unit.is_one() => {}
            _ => {
                return Err(Error::Structure(
                    "first basis vector must be the identity".into(),
                ))
            }
        }
        if vecs.len() * sub_sorted.len() != domain_idx.len() {
            return Err(Error::Structure(format!(
                "{} basis vectors for index {}",
                vecs.len(),
                domain_idx.len() / sub_sorted.len().max(1)
            )));
        }
        // Build the decomposition map and check each coset is hit once.
        let mut decomp: BTreeMap<usize, CosetDecomp> = BTreeMap::new();
        for (pos, vec) in vecs.iter().enumerate() {
            if !domain.contains(vec.elem) {
                return Err(Error::Structure("basis vector outside domain".into()));
            }
            if vec.unit.is_zero() {
                return Err(Error::Structure("basis unit must be invertible".into()));
            }
            let unit_inv = vec
                .unit
                .inverse()
                .ok_or_else(|| Error::Structure("basis unit must be invertible".into()))?;
            for &h in sub_sorted.iter() {
                let g = group.mul(vec.elem, h);
                if decomp.contains_key(&g) {
                    return Err(Error::Structure(format!(
                        "element {g} covered by two basis vectors"
                    )));
                }
                // e_pos * h = unit * c(elem, h) * (elem h), so the monomial
                // g = elem*h decomposes with the reciprocal unit.
                let c = algebra.cocycle().value(vec.elem, h);
                let c_inv = c
                    .inverse()
                    .ok_or_else(|| Error::Structure("cocycle value not a unit".into()))?;
                let unit = unit_inv.mul(&c_inv)?;
                decomp.insert(g, CosetDecomp { rep: pos, h, unit });
            }
        }
        for &g in &domain_idx {
            if !decomp.contains_key(&g) {
                return Err(Error::Structure(format!("element {g} not covered")));
            }
        }
        Ok(TowerBasis {
            algebra,
            domain,
            sub: Arc::new(sub_sorted),
            vecs,
            decomp,
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn domain(&self) -> &Span {
        &self.domain
    }

    pub fn sub_indices(&self) -> &[usize] {
        &self.sub
    }

    pub fn sub_span(&self) -> Span {
        Span::Sub(self.sub.clone())
    }

    /// Rank m of the free module (number of basis vectors).
    pub fn rank(&self) -> usize {
        self.vecs.len()
    }

    pub fn vecs(&self) -> &[BasisVec] {
        &self.vecs
    }

    /// Ring descriptor of the represented algebra (domain).
    pub fn domain_ring(&self) -> Ring {
        Ring::Tga { algebra: self.algebra.clone(), span: self.domain.clone() }
    }

    /// Ring descriptor of the coefficient subalgebra B = span(K).
    pub fn sub_ring(&self) -> Ring {
        Ring::Tga { algebra: self.algebra.clone(), span: self.sub_span() }
    }

    /// e_i as an element of the domain algebra.
    pub fn vec_element(&self, i: usize) -> Result<TgaElement> {
        let unit = self.algebra.lift_scalar(&self.vecs[i].unit)?;
        TgaElement::monomial(
            self.algebra.clone(),
            self.domain.clone(),
            self.vecs[i].elem,
            unit,
        )
    }

    /// e_i^{-1} as an element of the domain algebra.
    pub fn vec_inverse(&self, i: usize) -> Result<TgaElement> {
        self.vec_element(i)?.monomial_inverse()
    }

    /// Decompose a in the domain as a = sum_i e_i b_i with b_i in B.
    pub fn decompose(&self, a: &TgaElement) -> Result<Vec<TgaElement>> {
        if *a.span() != self.domain || a.algebra() != &self.algebra {
            return Err(Error::Structure(
                "element does not belong to the tower's domain".into(),
            ));
        }
        let span_b = self.sub_span();
        let mut out = vec![TgaElement::zero(self.algebra.clone(), span_b.clone()); self.rank()];
        for (&g, coeff) in a.coords() {
            let d = self
                .decomp
                .get(&g)
                .ok_or_else(|| Error::Structure(format!("element {g} outside domain")))?;
            let unit = self.algebra.lift_scalar(&d.unit)?;
            let term = TgaElement::monomial(
                self.algebra.clone(),
                span_b.clone(),
                d.h,
                coeff.mul(&unit)?,
            )?;
            out[d.rep] = out[d.rep].add(&term)?;
        }
        Ok(out)
    }

    /// Recompose sum_i e_i b_i into a domain element.
    pub fn recompose(&self, coords: &[TgaElement]) -> Result<TgaElement> {
        if coords.len() != self.rank() {
            return Err(Error::Structure("coordinate count != rank".into()));
        }
        let mut acc = TgaElement::zero(self.algebra.clone(), self.domain.clone());
        for (i, b) in coords.iter().enumerate() {
            let e_i = self.vec_element(i)?;
            acc = acc.add(&e_i.mul(&b.with_span(self.domain.clone())?)?)?;
        }
        Ok(acc)
    }

    /// Promote a B element into the domain algebra.
    pub fn promote(&self, b: &TgaElement) -> Result<TgaElement> {
        b.with_span(self.domain.clone())
    }

    /// The coset position of the basis-vector product e_i e_j.
    pub fn coset_product(&self, i: usize, j: usize) -> usize {
        let g = self
            .algebra
            .group()
            .mul(self.vecs[i].elem, self.vecs[j].elem);
        self.decomp[&g].rep
    }

    /// Composed basis (e (x) f): upper = this (domain over H), lower = f
    /// (H over K). Ordering is f-major: position (j-1)m + i holds e_i f_j.
    pub fn compose(&self, lower: &TowerBasis) -> Result<TowerBasis> {
        if lower.algebra != self.algebra {
            return Err(Error::Structure("towers over different algebras".into()));
        }
        if lower.domain != self.sub_span() {
            return Err(Error::Structure(
                "lower tower domain must equal upper tower subalgebra".into(),
            ));
        }
        let group = self.algebra.group();
        let mut vecs = Vec::with_capacity(self.rank() * lower.rank());
        for f in lower.vecs.iter() {
            for e in self.vecs.iter() {
                let c = self.algebra.cocycle().value(e.elem, f.elem);
                let unit = e.unit.mul(&f.unit)?.mul(c)?;
                vecs.push(BasisVec { unit, elem: group.mul(e.elem, f.elem) });
            }
        }
        TowerBasis::with_vecs(
            self.algebra.clone(),
            self.domain.clone(),
            lower.sub.as_ref().clone(),
            vecs,
        )
    }
}

/// The basis-condition record: the predicates gating the
/// characteristic-polynomial and commutant results.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisConditions {
    /// (i) every e_i is invertible in A.
    pub invertible: bool,
    /// (ii) e_i^{-1} B e_i is contained in B for every i.
    pub conjugation_closed: bool,
    /// (iii) e_iB * e_jB is again some e_kB.
    pub coset_closed: bool,
    /// (iv) some e_k spans B itself.
    pub identity_coset: bool,
    /// (v) every e_iB has an inverse coset.
    pub coset_inverses: bool,
    /// (vi) coset products commute.
    pub commuting_cosets: bool,
    /// (eB, *) satisfies the group axioms (checked, not assumed).
    pub group_axioms: bool,
}

impl BasisConditions {
    pub fn holds_i_ii(&self) -> bool {
        self.invertible && self.conjugation_closed
    }

    pub fn holds_iii_v(&self) -> bool {
        self.coset_closed && self.identity_coset && self.coset_inverses
    }

    pub fn holds_iii_vi(&self) -> bool {
        self.holds_iii_v() && self.commuting_cosets
    }
}

/// Evaluate conditions (i)-(vi) by finite enumeration over monomials.
pub fn basis_conditions(basis: &TowerBasis) -> Result<BasisConditions> {
    let algebra = basis.algebra();
    let group = algebra.group();
    let m = basis.rank();

    // (i): each e_i has a two-sided inverse.
    let mut invertible = true;
    for i in 0..m {
        let e = basis.vec_element(i)?;
        match e.monomial_inverse() {
            Ok(inv) => {
                if !e.mul(&inv)?.is_one() || !inv.mul(&e)?.is_one() {
                    invertible = false;
                }
            }
            Err(_) => invertible = false,
        }
    }

    // (ii): e_i^{-1} h e_i supported in H for each H-monomial h.
    let mut conjugation_closed = true;
    'outer: for i in 0..m {
        let e = basis.vec_element(i)?;
        let e_inv = match e.monomial_inverse() {
            Ok(v) => v,
            Err(_) => {
                conjugation_closed = false;
                break;
            }
        };
        for &h in basis.sub_indices() {
            let hm = TgaElement::monomial(
                algebra.clone(),
                basis.domain().clone(),
                h,
                algebra.coeff_ring().one(),
            )?;
            let conj = e_inv.mul(&hm)?.mul(&e)?;
            if conj
                .coords()
                .keys()
                .any(|g| !basis.sub_indices().contains(g))
            {
                conjugation_closed = false;
                break 'outer;
            }
        }
    }

    // (iii)-(vi) are statements about the coset sets e_iB.
    let coset_of = |pos: usize| -> Vec<usize> {
        let mut v: Vec<usize> = basis
            .sub_indices()
            .iter()
            .map(|&h| group.mul(basis.vecs()[pos].elem, h))
            .collect();
        v.sort_unstable();
        v
    };
    let cosets: Vec<Vec<usize>> = (0..m).map(coset_of).collect();
    let product_pos = |i: usize, j: usize| -> Option<usize> {
        let g = group.mul(basis.vecs()[i].elem, basis.vecs()[j].elem);
        let mut set: Vec<usize> = basis
            .sub_indices()
            .iter()
            .map(|&h| group.mul(g, h))
            .collect();
        set.sort_unstable();
        cosets.iter().position(|c| *c == set)
    };

    let mut coset_closed = true;
    let mut table = vec![vec![usize::MAX; m]; m];
    for i in 0..m {
        for j in 0..m {
            match product_pos(i, j) {
                Some(k) => table[i][j] = k,
                None => coset_closed = false,
            }
        }
    }
    let commuting_cosets = (0..m).all(|i| {
        (0..m).all(|j| table[i][j] != usize::MAX && table[i][j] == table[j][i])
    });

    // (iv): B itself appears among the cosets (position of the identity).
    let b_set: Vec<usize> = {
        let mut v = basis.sub_indices().to_vec();
        v.sort_unstable();
        v
    };
    let b_pos = cosets.iter().position(|c| *c == b_set);
    let identity_coset = b_pos.is_some();

    // (v): each coset has an inverse coset.
    let coset_inverses = match b_pos {
        Some(bp) => (0..m).all(|i| (0..m).any(|j| table[i][j] == bp)),
        None => false,
    };

    // Group axioms of (eB, *): identity, inverses, associativity.
    let group_axioms = coset_closed
        && identity_coset
        && coset_inverses
        && {
            let bp = b_pos.unwrap();
            let identity_ok =
                (0..m).all(|i| table[bp][i] == i && table[i][bp] == i);
            let assoc_ok = (0..m).all(|i| {
                (0..m).all(|j| {
                    (0..m).all(|k| table[table[i][j]][k] == table[i][table[j][k]])
                })
            });
            identity_ok && assoc_ok
        };

    Ok(BasisConditions {
        invertible,
        conjugation_closed,
        coset_closed,
        identity_coset,
        coset_inverses,
        commuting_cosets,
        group_axioms,
    })
}

/// True iff the coefficient subalgebra B = span(H) is commutative:
/// H abelian and the cocycle symmetric on H.
pub fn subalgebra_commutative(basis: &TowerBasis) -> bool {
    let group = basis.algebra().group();
    group.is_abelian_on(basis.sub_indices())
        && basis.algebra().cocycle().is_symmetric_on(basis.sub_indices())
}

/// Check a candidate value as a B element and return it retyped.
pub fn into_sub_element(basis: &TowerBasis, v: &Value) -> Result<TgaElement> {
    match v {
        Value::Tga(t) => t.with_span(basis.sub_span()),
        _ => Err(Error::Structure("value is not an algebra element".into())),
    }
}
