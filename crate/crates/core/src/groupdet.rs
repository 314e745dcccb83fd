//! Group determinants and their factorizations.
//!
//! Theta(G) is the determinant of (x_{g h^{-1}})_{g,h}, a homogeneous
//! polynomial of degree |G|. For abelian G it splits into the linear
//! characters (Dedekind); for arbitrary G with an abelian subgroup H it
//! is the character product of the relative determinant Theta(G:H); and
//! with supplied irreducible representations it is the Frobenius product
//! of irreducible factors.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::regrep::regrep_element;
use crate::rings::cyclotomic::Cyclotomic;
use crate::rings::poly::{Poly, Scalar, ScalarRing, VarSet};
use crate::rings::rational::Rational;
use crate::rings::{Ring, Value};
use crate::tga::{coset_decompose, FiniteGroupTable, Span, TgaElement};

/// Desk-scale budget: symbolic determinants above this size blow up.
pub const MAX_GROUP_ORDER: usize = 8;

fn check_budget(group: &FiniteGroupTable) -> Result<()> {
    if group.order() > MAX_GROUP_ORDER {
        return Err(Error::Precondition(format!(
            "group order {} exceeds the budget of {MAX_GROUP_ORDER} (symbolic determinant growth)",
            group.order()
        )));
    }
    Ok(())
}

/// The variable set x_<element name> of a group, in element order.
pub fn group_vars(group: &FiniteGroupTable) -> Arc<VarSet> {
    VarSet::new(
        group
            .element_names()
            .iter()
            .map(|n| format!("x_{n}"))
            .collect(),
    )
}

/// The polynomial-coefficient group algebra hosting the general element.
pub fn general_element_algebra(
    group: &FiniteGroupTable,
    base: ScalarRing,
) -> Result<(Arc<crate::tga::Algebra>, Arc<VarSet>)> {
    let vars = group_vars(group);
    let coeff = Ring::poly(vars.clone(), base);
    let label = format!("{}[x]", group.name());
    let algebra = crate::fixtures::group_algebra(group.clone(), coeff, &label)?;
    Ok((algebra, vars))
}

/// The general element for a monomial subset S: sum over s in S of
/// s * x_s, one independent commuting variable per monomial.
pub fn general_element_for(
    algebra: &Arc<crate::tga::Algebra>,
    vars: &Arc<VarSet>,
    base: &ScalarRing,
    subset: &[usize],
) -> Result<TgaElement> {
    if subset.is_empty() {
        return Err(Error::Precondition("general element needs a nonempty set".into()));
    }
    let coords = subset
        .iter()
        .map(|&s| (s, Value::Poly(Poly::var(vars.clone(), base.clone(), s))))
        .collect();
    TgaElement::from_coords(algebra.clone(), Span::Full, coords)
}

/// The general element of the whole group.
pub fn general_element(
    algebra: &Arc<crate::tga::Algebra>,
    vars: &Arc<VarSet>,
    base: &ScalarRing,
) -> Result<TgaElement> {
    let all: Vec<usize> = (0..algebra.order()).collect();
    general_element_for(algebra, vars, base, &all)
}

/// Theta(G): computed both as Det(x_{g h^{-1}})_{g,h} and through the
/// left regular representation Det(L(general element)); the two routes
/// must agree. Homogeneous of degree |G| over Q.
pub fn group_determinant(group: &FiniteGroupTable) -> Result<Poly> {
    check_budget(group)?;
    let vars = group_vars(group);
    let base = ScalarRing::Rational;
    let n = group.order();
    // Route 1: the direct matrix of variables.
    let ring = Ring::poly(vars.clone(), base.clone());
    let direct = Matrix::from_fn(n, n, ring, |g, h| {
        let idx = group.mul(g, group.inv(h));
        Value::Poly(Poly::var(vars.clone(), base.clone(), idx))
    })?;
    let det_direct = match direct.det_divfree()? {
        Value::Poly(p) => p,
        _ => unreachable!(),
    };
    // Route 2: through the regular representation over the trivial
    // subgroup span.
    let (algebra, vars2) = general_element_algebra(group, base.clone())?;
    let x = general_element(&algebra, &vars2, &base)?;
    let tower = coset_decompose(&algebra, Span::Full, &[group.identity()])?;
    let l = regrep_element(&tower, &x)?;
    let scalars = l.map_entries(Ring::poly(vars2.clone(), base.clone()), |v| match v {
        Value::Tga(t) => t
            .scalar_part()
            .ok_or_else(|| Error::Structure("entry not a scalar".into())),
        _ => Err(Error::Structure("non-algebra entry".into())),
    })?;
    let det_regrep = match scalars.det_divfree()? {
        Value::Poly(p) => p,
        _ => unreachable!(),
    };
    if det_direct != det_regrep {
        return Err(Error::Structure(
            "group determinant routes disagree (direct matrix vs regular representation)".into(),
        ));
    }
    if det_direct.homogeneous_degree() != Some(n as u32) {
        return Err(Error::Structure(
            "group determinant is not homogeneous of degree |G|".into(),
        ));
    }
    Ok(det_direct)
}

/// Enumerated characters of a finite abelian group: all |G|
/// homomorphisms into the exponent-th roots of unity.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub conductor: u32,
    /// chars[k][g] = value of the k-th character on element g.
    pub chars: Vec<Vec<Cyclotomic>>,
}

/// Brute-force character enumeration over a generating sequence, with
/// full homomorphism verification and orthogonality checks.
pub fn abelian_characters(group: &FiniteGroupTable) -> Result<CharacterTable> {
    if !group.is_abelian() {
        return Err(Error::Precondition(format!(
            "character enumeration needs an abelian group; {} is not",
            group.name()
        )));
    }
    let n = group.order();
    let e = group.exponent();
    // Greedy generating sequence.
    let mut generated = vec![false; n];
    generated[group.identity()] = true;
    let mut generators = Vec::new();
    loop {
        let Some(next) = (0..n).find(|&g| !generated[g]) else { break };
        generators.push(next);
        // Close under multiplication by the new generator.
        let mut changed = true;
        while changed {
            changed = false;
            for g in 0..n {
                if !generated[g] {
                    continue;
                }
                for &h in &generators {
                    let gh = group.mul(g, h);
                    if !generated[gh] {
                        generated[gh] = true;
                        changed = true;
                    }
                }
            }
        }
    }
    // Candidate exponents per generator: multiples of e / ord(gen).
    let choice_sets: Vec<Vec<u32>> = generators
        .iter()
        .map(|&g| {
            let ord = group.element_order(g) as u32;
            (0..ord).map(|k| k * (e / ord)).collect()
        })
        .collect();
    let mut chars: Vec<Vec<u32>> = Vec::new();
    let mut assignment = vec![0u32; generators.len()];
    enumerate_assignments(
        group,
        &generators,
        &choice_sets,
        0,
        &mut assignment,
        e,
        &mut chars,
    );
    chars.sort();
    chars.dedup();
    if chars.len() != n {
        return Err(Error::Structure(format!(
            "expected {n} characters, found {}",
            chars.len()
        )));
    }
    let table: Vec<Vec<Cyclotomic>> = chars
        .iter()
        .map(|exps| {
            exps.iter()
                .map(|&k| Cyclotomic::zeta_power(e, k as i64))
                .collect()
        })
        .collect();
    // Orthogonality: sum_g chi(g) chi'(g^{-1}) = |G| [chi = chi'].
    for (a, ca) in table.iter().enumerate() {
        for (b, cb) in table.iter().enumerate() {
            let mut acc = Cyclotomic::zero(e);
            for g in 0..n {
                acc = acc.add(&ca[g].mul(&cb[group.inv(g)])?)?;
            }
            let expect = if a == b {
                Cyclotomic::from_rational(e, Rational::from_integer(n as i64))
            } else {
                Cyclotomic::zero(e)
            };
            if acc != expect {
                return Err(Error::Structure("character orthogonality failed".into()));
            }
        }
    }
    Ok(CharacterTable { conductor: e, chars: table })
}

fn enumerate_assignments(
    group: &FiniteGroupTable,
    generators: &[usize],
    choice_sets: &[Vec<u32>],
    depth: usize,
    assignment: &mut Vec<u32>,
    e: u32,
    out: &mut Vec<Vec<u32>>,
) {
    if depth == generators.len() {
        if let Some(exps) = extend_to_group(group, generators, assignment, e) {
            out.push(exps);
        }
        return;
    }
    for &choice in &choice_sets[depth] {
        assignment[depth] = choice;
        enumerate_assignments(group, generators, choice_sets, depth + 1, assignment, e, out);
    }
}

/// Extend generator exponents to the whole group by closure; None when
/// the assignment is inconsistent.
fn extend_to_group(
    group: &FiniteGroupTable,
    generators: &[usize],
    assignment: &[u32],
    e: u32,
) -> Option<Vec<u32>> {
    let n = group.order();
    let mut val: Vec<Option<u32>> = vec![None; n];
    val[group.identity()] = Some(0);
    let mut changed = true;
    while changed {
        changed = false;
        for g in 0..n {
            let Some(vg) = val[g] else { continue };
            for (gi, &h) in generators.iter().enumerate() {
                let gh = group.mul(g, h);
                let want = (vg + assignment[gi]) % e;
                match val[gh] {
                    None => {
                        val[gh] = Some(want);
                        changed = true;
                    }
                    Some(existing) if existing != want => return None,
                    _ => {}
                }
            }
        }
    }
    let exps: Vec<u32> = val.into_iter().collect::<Option<_>>()?;
    // Full homomorphism check.
    for a in 0..n {
        for b in 0..n {
            if (exps[a] + exps[b]) % e != exps[group.mul(a, b)] {
                return None;
            }
        }
    }
    Some(exps)
}

/// A factorization with an exact product check.
#[derive(Debug, Clone)]
pub struct FactorizationReport {
    /// (factor, multiplicity) pairs.
    pub factors: Vec<(Value, usize)>,
    /// Product of factors^multiplicity equals the target exactly.
    pub product_ok: bool,
    /// Total degree of each factor.
    pub degrees: Vec<usize>,
}

/// Dedekind factorization of an abelian group determinant:
/// Theta(G) = prod over characters of sum_g chi(g) x_g.
pub fn dedekind_factorize(group: &FiniteGroupTable) -> Result<FactorizationReport> {
    check_budget(group)?;
    let table = abelian_characters(group)?;
    let e = table.conductor;
    let vars = group_vars(group);
    let base = ScalarRing::Cyclotomic(e);
    let mut factors = Vec::new();
    for chi in &table.chars {
        let terms = chi
            .iter()
            .enumerate()
            .map(|(g, v)| {
                let mut expo = vec![0u32; vars.len()];
                expo[g] = 1;
                (expo, Scalar::Cyc(v.clone()))
            })
            .collect();
        factors.push(Poly::from_terms(vars.clone(), base.clone(), terms)?);
    }
    let mut product = Poly::one(vars.clone(), base.clone());
    for f in &factors {
        product = product.mul(f)?;
    }
    let theta = group_determinant(group)?.embed_base(&base)?;
    let product_ok = product == theta;
    Ok(FactorizationReport {
        degrees: vec![1; factors.len()],
        factors: factors.into_iter().map(|f| (Value::Poly(f), 1)).collect(),
        product_ok,
    })
}

/// The relative group determinant Theta(G:H): the Study-type determinant
/// of the general element over B = span(H), an element of B whose
/// coordinates are homogeneous polynomials of degree [G:H].
pub fn theta_relative(group: &FiniteGroupTable, sub: &[usize]) -> Result<TgaElement> {
    check_budget(group)?;
    if !group.is_subgroup(sub) {
        return Err(Error::Precondition("H is not a subgroup".into()));
    }
    if !group.is_abelian_on(sub) {
        return Err(Error::Precondition(format!(
            "subgroup must be abelian: {{{}}} is not",
            sub.iter()
                .map(|&i| group.element_name(i))
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    let e = group.exponent_on(sub);
    let base = ScalarRing::Cyclotomic(e);
    let (algebra, vars) = general_element_algebra(group, base.clone())?;
    let x = general_element(&algebra, &vars, &base)?;
    let tower = coset_decompose(&algebra, Span::Full, sub)?;
    let l = regrep_element(&tower, &x)?;
    let det = l.det_divfree()?;
    let theta = match det {
        Value::Tga(t) => t,
        _ => return Err(Error::Structure("relative determinant is not in B".into())),
    };
    // Every coordinate is homogeneous of degree [G:H].
    let index = tower.rank() as u32;
    for c in theta.coords().values() {
        let p = match c {
            Value::Poly(p) => p,
            _ => return Err(Error::Structure("coordinate is not a polynomial".into())),
        };
        if p.homogeneous_degree() != Some(index) {
            return Err(Error::Structure(format!(
                "coordinate degree differs from the index {index}"
            )));
        }
    }
    Ok(theta)
}

/// Apply a character of H coefficientwise to an element of span(H):
/// sum_h chi(h) c_h as a polynomial.
pub fn apply_character(
    theta: &TgaElement,
    sub: &[usize],
    chi_on_sub: &[Cyclotomic],
    vars: &Arc<VarSet>,
    base: &ScalarRing,
) -> Result<Poly> {
    let mut acc = Poly::zero(vars.clone(), base.clone());
    for (&g, c) in theta.coords() {
        let pos = sub
            .iter()
            .position(|&h| h == g)
            .ok_or_else(|| Error::Structure("support outside H".into()))?;
        let p = match c {
            Value::Poly(p) => p.clone(),
            _ => return Err(Error::Structure("coordinate is not a polynomial".into())),
        };
        acc = acc.add(&p.scale(&Scalar::Cyc(chi_on_sub[pos].clone()))?)?;
    }
    Ok(acc)
}

/// The extension of Dedekind's theorem:
/// Theta(G) = prod over chi in H-hat of chi(Theta(G:H)), verified
/// exactly.
pub fn extension_check(group: &FiniteGroupTable, sub: &[usize]) -> Result<FactorizationReport> {
    let theta_rel = theta_relative(group, sub)?;
    let e = group.exponent_on(sub);
    let base = ScalarRing::Cyclotomic(e);
    let vars = group_vars(group);
    let (sub_table, sub_map) = group.subgroup_table(sub, "H")?;
    let chars = abelian_characters(&sub_table)?;
    // Character values re-indexed by ambient subgroup order; conductors
    // match because exponent is computed on the same subgroup.
    debug_assert_eq!(chars.conductor, e);
    let mut factors = Vec::new();
    for chi in &chars.chars {
        // chi[k] is the value on sub_map[k]; align with `sub` order.
        let aligned: Vec<Cyclotomic> = sub
            .iter()
            .map(|&g| {
                let k = sub_map.iter().position(|&x| x == g).unwrap();
                chi[k].clone()
            })
            .collect();
        factors.push(apply_character(&theta_rel, sub, &aligned, &vars, &base)?);
    }
    let mut product = Poly::one(vars.clone(), base.clone());
    for f in &factors {
        product = product.mul(f)?;
    }
    let theta = group_determinant(group)?.embed_base(&base)?;
    let product_ok = product == theta;
    let index = group.order() / sub.len();
    Ok(FactorizationReport {
        degrees: vec![index; factors.len()],
        factors: factors.into_iter().map(|f| (Value::Poly(f), 1)).collect(),
        product_ok,
    })
}

/// A finite-dimensional representation supplied as input data, as exact
/// matrices over a cyclotomic field. Computing irreducible
/// representations is out of scope; callers provide them.
#[derive(Debug, Clone)]
pub struct SuppliedRepresentation {
    pub name: String,
    pub degree: usize,
    pub conductor: u32,
    /// Image matrix per group element index.
    pub images: Vec<Matrix>,
}

impl SuppliedRepresentation {
    /// Multiplicativity on the whole Cayley table and identity mapping
    /// to I_d; reports the violating pair.
    pub fn validate(&self, group: &FiniteGroupTable) -> Result<()> {
        let n = group.order();
        if self.images.len() != n {
            return Err(Error::Validation(format!(
                "representation {} has {} images for a group of order {n}",
                self.name,
                self.images.len()
            )));
        }
        let ring = Ring::Cyclotomic(self.conductor);
        for (g, img) in self.images.iter().enumerate() {
            if !img.is_square() || img.rows() != self.degree || *img.entry_ring() != ring {
                return Err(Error::Validation(format!(
                    "image of {} has wrong shape or ring",
                    group.element_name(g)
                )));
            }
        }
        let id = Matrix::identity(self.degree, ring);
        if self.images[group.identity()] != id {
            return Err(Error::Validation(format!(
                "representation {}: identity does not map to I",
                self.name
            )));
        }
        for a in 0..n {
            for b in 0..n {
                let lhs = self.images[a].mul(&self.images[b])?;
                if lhs != self.images[group.mul(a, b)] {
                    return Err(Error::Validation(format!(
                        "representation {} is not multiplicative at pair ({}, {})",
                        self.name,
                        group.element_name(a),
                        group.element_name(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// phi(general element) = sum_g x_g phi(g) over the polynomial ring
    /// with the given scalar base.
    pub fn general_image(
        &self,
        vars: &Arc<VarSet>,
        base: &ScalarRing,
    ) -> Result<Matrix> {
        let d = self.degree;
        let ring = Ring::poly(vars.clone(), base.clone());
        let mut out = Matrix::zero(d, d, ring);
        for (g, img) in self.images.iter().enumerate() {
            let xg = Poly::var(vars.clone(), base.clone(), g);
            for u in 0..d {
                for v in 0..d {
                    let c = match img.get(u, v) {
                        Value::Cyc(c) => Scalar::Cyc(c.clone()).embed_to(base)?,
                        Value::Rat(r) => Scalar::Rat(r.clone()).embed_to(base)?,
                        _ => return Err(Error::Structure("bad image entry".into())),
                    };
                    let term = Value::Poly(xg.scale(&c)?);
                    let merged = out.get(u, v).add(&term)?;
                    out.set(u, v, merged)?;
                }
            }
        }
        Ok(out)
    }
}

/// Frobenius' factorization with supplied irreducible representations:
/// Theta(G) = prod Det(phi(general element))^{deg phi}, with the degree
/// bookkeeping sum d_i^2 = |G| and per-factor degree checks.
pub fn frobenius_verify(
    group: &FiniteGroupTable,
    irreps: &[SuppliedRepresentation],
) -> Result<FactorizationReport> {
    check_budget(group)?;
    let sum_sq: usize = irreps.iter().map(|r| r.degree * r.degree).sum();
    if sum_sq != group.order() {
        return Err(Error::Validation(format!(
            "sum of squared degrees {sum_sq} != |G| = {}",
            group.order()
        )));
    }
    for rep in irreps {
        rep.validate(group)?;
    }
    let conductor = irreps
        .iter()
        .map(|r| r.conductor)
        .fold(1u32, num_integer::lcm);
    let base = ScalarRing::Cyclotomic(conductor);
    let vars = group_vars(group);
    let mut factors: Vec<(Poly, usize)> = Vec::new();
    for rep in irreps {
        let img = rep.general_image(&vars, &base)?;
        let det = match img.det_divfree()? {
            Value::Poly(p) => p,
            _ => unreachable!(),
        };
        if det.homogeneous_degree() != Some(rep.degree as u32) {
            return Err(Error::Validation(format!(
                "factor of representation {} does not have degree {}",
                rep.name, rep.degree
            )));
        }
        factors.push((det, rep.degree));
    }
    let mut product = Poly::one(vars.clone(), base.clone());
    for (f, mult) in &factors {
        product = product.mul(&f.pow(*mult as u32)?)?;
    }
    let theta = group_determinant(group)?.embed_base(&base)?;
    let product_ok = product == theta;
    Ok(FactorizationReport {
        degrees: factors.iter().map(|(_, d)| *d).collect(),
        factors: factors
            .into_iter()
            .map(|(f, d)| (Value::Poly(f), d))
            .collect(),
        product_ok,
    })
}

/// Character-level check that the left regular representation of G
/// decomposes as the direct sum of each irreducible with multiplicity
/// its degree: sum_i d_i tr(phi_i(g)) equals |G| at the identity and 0
/// elsewhere.
pub fn regular_decomposition_check(
    group: &FiniteGroupTable,
    irreps: &[SuppliedRepresentation],
) -> Result<bool> {
    let conductor = irreps
        .iter()
        .map(|r| r.conductor)
        .fold(1u32, num_integer::lcm);
    for g in 0..group.order() {
        let mut acc = Cyclotomic::zero(conductor);
        for rep in irreps {
            let img = &rep.images[g];
            let mut tr = Cyclotomic::zero(rep.conductor);
            for k in 0..rep.degree {
                match img.get(k, k) {
                    Value::Cyc(c) => tr = tr.add(c)?,
                    _ => return Err(Error::Structure("bad image entry".into())),
                }
            }
            let d = Rational::from_integer(rep.degree as i64);
            acc = acc.add(&tr.embed(conductor)?.scale(&d))?;
        }
        let expect = if g == group.identity() {
            Cyclotomic::from_rational(conductor, Rational::from_integer(group.order() as i64))
        } else {
            Cyclotomic::zero(conductor)
        };
        if acc != expect {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The degree bound: every irreducible degree is at most the index of an
/// abelian subgroup.
pub fn degree_bound_check(
    group: &FiniteGroupTable,
    sub: &[usize],
    irreps: &[SuppliedRepresentation],
) -> Result<bool> {
    if !group.is_subgroup(sub) || !group.is_abelian_on(sub) {
        return Err(Error::Precondition("need an abelian subgroup".into()));
    }
    let index = group.order() / sub.len();
    Ok(irreps.iter().all(|r| r.degree <= index))
}

/// The two factorizations of Theta(G) compared against each other
/// directly: prod Det(phi_i(X))^{d_i} = prod_chi chi(Theta(G:H)).
pub fn products_agree(
    group: &FiniteGroupTable,
    sub: &[usize],
    irreps: &[SuppliedRepresentation],
) -> Result<bool> {
    let frob = frobenius_verify(group, irreps)?;
    let ext = extension_check(group, sub)?;
    let e = group.exponent_on(sub);
    let n_frob = irreps
        .iter()
        .map(|r| r.conductor)
        .fold(1u32, num_integer::lcm);
    let common = ScalarRing::Cyclotomic(num_integer::lcm(e, n_frob));
    let expand = |report: &FactorizationReport| -> Result<Poly> {
        let mut acc: Option<Poly> = None;
        for (f, mult) in &report.factors {
            let p = match f {
                Value::Poly(p) => p.embed_base(&common)?,
                _ => return Err(Error::Structure("factor is not a polynomial".into())),
            };
            let powered = p.pow(*mult as u32)?;
            acc = Some(match acc {
                None => powered,
                Some(a) => a.mul(&powered)?,
            });
        }
        acc.ok_or_else(|| Error::Structure("empty factorization".into()))
    };
    Ok(expand(&frob)? == expand(&ext)?)
}

/// Relabel a group by a permutation of its element indices (the name
/// follows the element). Used to check renumbering invariance.
pub fn relabel_group(group: &FiniteGroupTable, perm: &[usize]) -> Result<FiniteGroupTable> {
    let n = group.order();
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let table = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| perm[group.mul(inv[i], inv[j])])
                .collect()
        })
        .collect();
    let elements = (0..n)
        .map(|i| group.element_name(inv[i]).to_string())
        .collect();
    FiniteGroupTable::new(format!("{}'", group.name()), elements, table, Default::default())
}
