//! Left regular representations over ring towers.
//!
//! Given a tower basis e of A over B, left multiplication a·e = e·L(a)
//! defines the injective algebra homomorphism L_e : A -> M(m, B); the
//! matrix extension L_{e (x) I_r} acts on M(r, A). This module computes
//! those maps, the indicator-function form of L_e, inverses through L,
//! characteristic polynomials with their Cayley-Hamilton property, the
//! monomial matrices J(e_k), and the commutant characterization of the
//! image of L_e.

use crate::error::{Error, Result};
use crate::matrix::{perm_action, rational_nullspace, sigma_perm, Matrix};
use crate::rings::rational::Rational;
use crate::rings::{Invertibility, Ring, Value};
use crate::tga::{basis_conditions, subalgebra_commutative, TgaElement, TowerBasis};

/// L_e(a): the m x m matrix over B with a e_j = sum_i e_i b_ij.
pub fn regrep_element(basis: &TowerBasis, a: &TgaElement) -> Result<Matrix> {
    let m = basis.rank();
    let mut cols = Vec::with_capacity(m);
    for j in 0..m {
        let aej = a.mul(&basis.vec_element(j)?)?;
        cols.push(basis.decompose(&aej)?);
    }
    Matrix::from_fn(m, m, basis.sub_ring(), |i, j| Value::Tga(cols[j][i].clone()))
}

/// L_{e (x) I_r}(a) for a square matrix a over A, in the flat form
/// sum_{ij} L_e(a_ij) (x) E_ij of size mr x mr over B. Row (p*r + i)
/// corresponds to basis vector e_p acting on matrix slot i.
pub fn regrep_matrix(basis: &TowerBasis, a: &Matrix) -> Result<Matrix> {
    if !a.is_square() {
        return Err(Error::Structure("regular representation of a non-square matrix".into()));
    }
    let expected = basis.domain_ring();
    if *a.entry_ring() != expected {
        return Err(Error::Structure(
            "matrix entries do not live in the tower's domain algebra".into(),
        ));
    }
    let r = a.rows();
    let m = basis.rank();
    let mut out = Matrix::zero(m * r, m * r, basis.sub_ring());
    for i in 0..r {
        for j in 0..r {
            let aij = match a.get(i, j) {
                Value::Tga(t) => t,
                _ => return Err(Error::Structure("non-algebra entry".into())),
            };
            let block = regrep_element(basis, aij)?;
            for p in 0..m {
                for q in 0..m {
                    out.set(p * r + i, q * r + j, block.get(p, q).clone())?;
                }
            }
        }
    }
    Ok(out)
}

/// The indicator-function form of L_e (valid under conditions
/// (iii)-(v)): L_e(a)_{ij} = sum_k 1_B(e_i^{-1} e_k e_j) e_i^{-1} e_k b_k e_j.
pub fn regrep_via_indicator(basis: &TowerBasis, a: &TgaElement) -> Result<Matrix> {
    let conds = basis_conditions(basis)?;
    if !conds.holds_iii_v() {
        return Err(Error::Precondition(
            "indicator form needs basis conditions (iii)-(v)".into(),
        ));
    }
    let m = basis.rank();
    let b_coords = basis.decompose(a)?;
    let sub = basis.sub_indices();
    let mut entries = Vec::with_capacity(m * m);
    for i in 0..m {
        let ei_inv = basis.vec_inverse(i)?;
        for j in 0..m {
            let ej = basis.vec_element(j)?;
            let mut acc = TgaElement::zero(basis.algebra().clone(), basis.domain().clone());
            for k in 0..m {
                let ek = basis.vec_element(k)?;
                // Indicator on the monomial e_i^{-1} e_k e_j.
                let probe = ei_inv.mul(&ek)?.mul(&ej)?;
                let in_b = probe.coords().keys().all(|g| sub.contains(g));
                if !in_b {
                    continue;
                }
                let bk = basis.promote(&b_coords[k])?;
                acc = acc.add(&ei_inv.mul(&ek)?.mul(&bk)?.mul(&ej)?)?;
            }
            // The accumulated entry lies in B; retype it.
            entries.push(Value::Tga(acc.with_span(basis.sub_span())?));
        }
    }
    Matrix::new(m, m, basis.sub_ring(), entries)
}

/// The 0/1 regular representation of the coset group eB:
/// L_{eB}(e_k B)_{ij} = 1_B(e_i^{-1} e_k e_j), over the domain algebra.
pub fn coset_group_rep(basis: &TowerBasis, k: usize) -> Result<Matrix> {
    let m = basis.rank();
    let sub = basis.sub_indices();
    let ring = basis.domain_ring();
    let mut entries = Vec::with_capacity(m * m);
    for i in 0..m {
        let ei_inv = basis.vec_inverse(i)?;
        for j in 0..m {
            let probe = ei_inv.mul(&basis.vec_element(k)?)?.mul(&basis.vec_element(j)?)?;
            let in_b = probe.coords().keys().all(|g| sub.contains(g));
            entries.push(if in_b { ring.one() } else { ring.zero() });
        }
    }
    Matrix::new(m, m, ring, entries)
}

/// The coset-group expression for the regular representation:
/// L_e(a) = P(e)^{-1} (sum_k L_{eB}(e_k B) e_k b_k) P(e), computed in A.
pub fn regrep_via_coset_form(basis: &TowerBasis, a: &TgaElement) -> Result<Matrix> {
    let conds = basis_conditions(basis)?;
    if !conds.holds_iii_v() {
        return Err(Error::Precondition(
            "coset form needs basis conditions (iii)-(v)".into(),
        ));
    }
    let m = basis.rank();
    let ring = basis.domain_ring();
    let b_coords = basis.decompose(a)?;
    let mut sum = Matrix::zero(m, m, ring.clone());
    for k in 0..m {
        let rep = coset_group_rep(basis, k)?;
        let ekbk = basis.vec_element(k)?.mul(&basis.promote(&b_coords[k])?)?;
        sum = sum.add(&rep.scale(&Value::Tga(ekbk))?)?;
    }
    // Conjugate by P(e) = diag(e_1, ..., e_m).
    let mut out = Matrix::zero(m, m, ring.clone());
    for i in 0..m {
        let ei_inv = Value::Tga(basis.vec_inverse(i)?);
        for j in 0..m {
            let ej = Value::Tga(basis.vec_element(j)?);
            out.set(i, j, ei_inv.mul(sum.get(i, j))?.mul(&ej)?)?;
        }
    }
    // Entries lie in B under the stated conditions; retype.
    out.map_entries(basis.sub_ring(), |v| match v {
        Value::Tga(t) => Ok(Value::Tga(t.with_span(basis.sub_span())?)),
        _ => Err(Error::Structure("non-algebra entry".into())),
    })
}

/// Invert a through its regular representation: a^{-1} =
/// sum_i e_i (L_e(a)^{-1})_{i1}. Returns None iff det L_e(a) is not a
/// unit of B.
pub fn inverse_via_regrep(basis: &TowerBasis, a: &TgaElement) -> Result<Option<TgaElement>> {
    let l = regrep_element(basis, a)?;
    let det = l.det_divfree()?;
    match det.try_invert()? {
        Invertibility::Invertible(_) => {}
        Invertibility::NotInvertible => return Ok(None),
        Invertibility::Undecidable(msg) => {
            return Err(Error::Precondition(format!(
                "invertibility of det L(a) undecidable: {msg}"
            )))
        }
    }
    let linv = match l.inverse_field() {
        Ok(Some(x)) => x,
        Ok(None) => return Ok(None),
        Err(Error::Precondition(_)) => match l.inverse_via_adjugate()? {
            Some(x) => x,
            None => return Ok(None),
        },
        Err(e) => return Err(e),
    };
    let mut acc = TgaElement::zero(basis.algebra().clone(), basis.domain().clone());
    for i in 0..basis.rank() {
        let coeff = match linv.get(i, 0) {
            Value::Tga(t) => basis.promote(t)?,
            _ => return Err(Error::Structure("non-algebra entry".into())),
        };
        acc = acc.add(&basis.vec_element(i)?.mul(&coeff)?)?;
    }
    Ok(Some(acc))
}

/// Inverse of a square matrix over A through L_{e (x) I_r}; the matrix
/// analogue of `inverse_via_regrep`. X^{-1} = sum_u e_u * (block u,1 of
/// L'(X)^{-1}).
pub fn matrix_inverse_via_regrep(basis: &TowerBasis, x: &Matrix) -> Result<Option<Matrix>> {
    let r = x.rows();
    let l = regrep_matrix(basis, x)?;
    let det = l.det_divfree()?;
    match det.try_invert()? {
        Invertibility::Invertible(_) => {}
        Invertibility::NotInvertible => return Ok(None),
        Invertibility::Undecidable(msg) => {
            return Err(Error::Precondition(format!(
                "invertibility of det L(X) undecidable: {msg}"
            )))
        }
    }
    let linv = match l.inverse_field() {
        Ok(Some(v)) => v,
        Ok(None) => return Ok(None),
        Err(Error::Precondition(_)) => match l.inverse_via_adjugate()? {
            Some(v) => v,
            None => return Ok(None),
        },
        Err(e) => return Err(e),
    };
    // Accumulate sum_u e_u * B_u where B_u is the r x r block of L^{-1}
    // at block row u, block column 0 (rows u*r+i, cols j), with e_u
    // multiplied on the left of each entry.
    let ring = basis.domain_ring();
    let mut acc = Matrix::zero(r, r, ring.clone());
    for u in 0..basis.rank() {
        let eu = Value::Tga(basis.vec_element(u)?);
        let mut block = Matrix::zero(r, r, ring.clone());
        for i in 0..r {
            for j in 0..r {
                let t = match linv.get(u * r + i, j) {
                    Value::Tga(t) => basis.promote(t)?,
                    _ => return Err(Error::Structure("non-algebra entry".into())),
                };
                block.set(i, j, eu.mul(&Value::Tga(t))?)?;
            }
        }
        acc = acc.add(&block)?;
    }
    Ok(Some(acc))
}

/// Characteristic polynomial of L_e(a): coefficients c_0..c_m over B
/// with c_m = 1 and Det(xI - L(a)) = sum c_k x^k.
pub fn charpoly_regrep(basis: &TowerBasis, a: &TgaElement) -> Result<Vec<Value>> {
    if !subalgebra_commutative(basis) {
        return Err(Error::Precondition(
            "characteristic polynomial needs a commutative subalgebra B".into(),
        ));
    }
    regrep_element(basis, a)?.charpoly_divfree()
}

/// The Cayley-Hamilton property: Phi_{L(a)}(a) = 0 evaluated in A with
/// coefficients multiplied on the right of the powers of a. Needs
/// conditions (i) and (ii) so the coefficients are central.
pub fn cayley_hamilton_check(basis: &TowerBasis, a: &TgaElement) -> Result<bool> {
    let conds = basis_conditions(basis)?;
    if !conds.holds_i_ii() {
        return Err(Error::Precondition(
            "Cayley-Hamilton substitution needs conditions (i) and (ii)".into(),
        ));
    }
    let coeffs = charpoly_regrep(basis, a)?;
    let mut acc = TgaElement::zero(basis.algebra().clone(), basis.domain().clone());
    for (k, c) in coeffs.iter().enumerate() {
        let ck = match c {
            Value::Tga(t) => basis.promote(t)?,
            _ => return Err(Error::Structure("non-algebra coefficient".into())),
        };
        acc = acc.add(&a.pow(k as u32)?.mul(&ck)?)?;
    }
    Ok(acc.is_zero())
}

/// Verify that a characteristic-polynomial coefficient lies in
/// Z(A) \cap B: supported on the subgroup and commuting with every
/// monomial generator of A.
pub fn central_in_a(basis: &TowerBasis, v: &Value) -> Result<bool> {
    let t = match v {
        Value::Tga(t) => t,
        _ => return Err(Error::Structure("not an algebra element".into())),
    };
    if !t.coords().keys().all(|g| basis.sub_indices().contains(g)) {
        return Ok(false);
    }
    let promoted = basis.promote(&t.with_span(basis.sub_span())?)?;
    let order = basis.algebra().order();
    for g in basis.domain().indices(order) {
        let gen = TgaElement::monomial(
            basis.algebra().clone(),
            basis.domain().clone(),
            g,
            basis.algebra().coeff_ring().one(),
        )?;
        if promoted.mul(&gen)? != gen.mul(&promoted)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The monomial matrices J(e_k) = P(e)^{-1} L_{eB}(e_k B) P(e) over A.
pub fn j_matrices(basis: &TowerBasis) -> Result<Vec<Matrix>> {
    let conds = basis_conditions(basis)?;
    if !conds.holds_iii_v() {
        return Err(Error::Precondition(
            "J matrices need basis conditions (iii)-(v)".into(),
        ));
    }
    let m = basis.rank();
    let ring = basis.domain_ring();
    let sub = basis.sub_indices();
    let mut out = Vec::with_capacity(m);
    for k in 0..m {
        let ek = basis.vec_element(k)?;
        let mut jk = Matrix::zero(m, m, ring.clone());
        for i in 0..m {
            let ei_inv = basis.vec_inverse(i)?;
            for j in 0..m {
                let ej = basis.vec_element(j)?;
                let probe = ei_inv.mul(&ek)?.mul(&ej)?;
                if probe.coords().keys().all(|g| sub.contains(g)) {
                    jk.set(i, j, Value::Tga(ei_inv.mul(&ej)?))?;
                }
            }
        }
        out.push(jk);
    }
    Ok(out)
}

/// Commutant membership: b in M(m, B) is an image of L_e
/// iff it commutes with every J(e_k). On membership the witness
/// a = sum_k e_k b_{k1} is reconstructed and L_e(a) = b is verified.
pub fn commutant_check(
    basis: &TowerBasis,
    b: &Matrix,
) -> Result<(bool, Option<TgaElement>)> {
    let conds = basis_conditions(basis)?;
    if !conds.holds_iii_vi() {
        return Err(Error::Precondition(
            "commutant characterization needs conditions (iii)-(vi)".into(),
        ));
    }
    if *b.entry_ring() != basis.sub_ring() || b.rows() != basis.rank() {
        return Err(Error::Structure(
            "candidate must be m x m over the subalgebra B".into(),
        ));
    }
    let b_in_a = b.map_entries(basis.domain_ring(), |v| match v {
        Value::Tga(t) => Ok(Value::Tga(basis.promote(t)?)),
        _ => Err(Error::Structure("non-algebra entry".into())),
    })?;
    for jk in j_matrices(basis)? {
        if jk.mul(&b_in_a)? != b_in_a.mul(&jk)? {
            return Ok((false, None));
        }
    }
    // Reconstruct from the first column.
    let mut a = TgaElement::zero(basis.algebra().clone(), basis.domain().clone());
    for k in 0..basis.rank() {
        let bk1 = match b.get(k, 0) {
            Value::Tga(t) => basis.promote(t)?,
            _ => unreachable!(),
        };
        a = a.add(&basis.vec_element(k)?.mul(&bk1)?)?;
    }
    if regrep_element(basis, &a)? == *b {
        Ok((true, Some(a)))
    } else {
        // Commutes but does not reconstruct: the characterization failed.
        Ok((true, None))
    }
}

/// Matrix form of the commutant test: b in M(mr, B) commutes with every
/// J(e_k) (x) I_r.
pub fn matrix_commutant_check(basis: &TowerBasis, r: usize, b: &Matrix) -> Result<bool> {
    let conds = basis_conditions(basis)?;
    if !conds.holds_iii_vi() {
        return Err(Error::Precondition(
            "commutant characterization needs conditions (iii)-(vi)".into(),
        ));
    }
    let m = basis.rank();
    if b.rows() != m * r || !b.is_square() || *b.entry_ring() != basis.sub_ring() {
        return Err(Error::Structure(
            "candidate must be mr x mr over the subalgebra B".into(),
        ));
    }
    let b_in_a = b.map_entries(basis.domain_ring(), |v| match v {
        Value::Tga(t) => Ok(Value::Tga(basis.promote(t)?)),
        _ => Err(Error::Structure("non-algebra entry".into())),
    })?;
    let id_r = Matrix::identity(r, basis.domain_ring());
    for jk in j_matrices(basis)? {
        let jk_r = jk.kron(&id_r)?;
        if jk_r.mul(&b_in_a)? != b_in_a.mul(&jk_r)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Blockwise witness reconstruction for the matrix commutant: when b is
/// in the image of L_{e (x) I_r}, return the preimage matrix over A.
pub fn matrix_commutant_witness(
    basis: &TowerBasis,
    r: usize,
    b: &Matrix,
) -> Result<Option<Matrix>> {
    let m = basis.rank();
    let mut a = Matrix::zero(r, r, basis.domain_ring());
    for i in 0..r {
        for j in 0..r {
            // Extract the m x m block beta with beta[p][q] = b[p*r+i][q*r+j].
            let beta = Matrix::from_fn(m, m, basis.sub_ring(), |p, q| {
                b.get(p * r + i, q * r + j).clone()
            })?;
            match commutant_check(basis, &beta)? {
                (true, Some(w)) => a.set(i, j, Value::Tga(w))?,
                _ => return Ok(None),
            }
        }
    }
    if regrep_matrix(basis, &a)? == *b {
        Ok(Some(a))
    } else {
        Ok(None)
    }
}

/// Commutative diagram of regular representations for nested towers
/// K <= H <= domain: L_{e (x) f} = iota . L_{f (x) I_m} . L_e.
pub fn diagram_check_tower(
    upper: &TowerBasis,
    lower: &TowerBasis,
    a: &TgaElement,
) -> Result<bool> {
    let composite = upper.compose(lower)?;
    let direct = regrep_element(&composite, a)?;
    let through = regrep_matrix(lower, &regrep_element(upper, a)?)?;
    Ok(direct == through)
}

/// Matrix version of the tower diagram (for a r x r over A).
pub fn diagram_check_matrix(
    upper: &TowerBasis,
    lower: &TowerBasis,
    a: &Matrix,
) -> Result<bool> {
    let composite = upper.compose(lower)?;
    let direct = regrep_matrix(&composite, a)?;
    let through = regrep_matrix(lower, &regrep_matrix(upper, a)?)?;
    Ok(direct == through)
}

/// Block layout of the matrix representation: sigma(m, r) applied to L_{e (x) I_r}(a)
/// equals the r x r block grid (L_e(a_ij)).
pub fn block_layout_check(basis: &TowerBasis, a: &Matrix) -> Result<bool> {
    let r = a.rows();
    let m = basis.rank();
    let flat = regrep_matrix(basis, a)?;
    let permuted = perm_action(&sigma_perm(m, r), &flat)?;
    let mut grid = Matrix::zero(m * r, m * r, basis.sub_ring());
    for i in 0..r {
        for j in 0..r {
            let aij = match a.get(i, j) {
                Value::Tga(t) => t,
                _ => return Err(Error::Structure("non-algebra entry".into())),
            };
            let block = regrep_element(basis, aij)?;
            for p in 0..m {
                for q in 0..m {
                    grid.set(i * m + p, j * m + q, block.get(p, q).clone())?;
                }
            }
        }
    }
    Ok(permuted == grid)
}

/// Rational coordinates of an algebra element with rational coefficient
/// ring, indexed by group element (for linear-algebra sampling).
fn rational_coords(t: &TgaElement) -> Result<Vec<Rational>> {
    let order = t.algebra().order();
    let mut out = vec![Rational::zero(); order];
    for (&g, c) in t.coords() {
        match c {
            Value::Rat(r) => out[g] = r.clone(),
            _ => {
                return Err(Error::Structure(
                    "rational coordinates need a rational coefficient ring".into(),
                ))
            }
        }
    }
    Ok(out)
}

/// Basis of the solution space of {J(e_k) b = b J(e_k)} over B, for
/// algebras with rational coefficients. Each solution is returned as an
/// m x m matrix over B.
pub fn commutant_solution_basis(basis: &TowerBasis) -> Result<Vec<Matrix>> {
    if *basis.algebra().coeff_ring() != Ring::Rational {
        return Err(Error::Precondition(
            "commutant sampling implemented over rational coefficients".into(),
        ));
    }
    let m = basis.rank();
    let sub = basis.sub_indices().to_vec();
    let order = basis.algebra().order();
    let js = j_matrices(basis)?;
    // Unknown directions: (u, v, h) -> the matrix with monomial h at (u, v).
    let mut directions = Vec::new();
    for u in 0..m {
        for v in 0..m {
            for &h in &sub {
                directions.push((u, v, h));
            }
        }
    }
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    // One row per (k, entry, group element) coordinate of J b - b J.
    let mut row_data: Vec<Vec<Vec<Rational>>> = Vec::new(); // per direction: flattened coords
    for &(u, v, h) in &directions {
        let mut z = Matrix::zero(m, m, basis.domain_ring());
        let mono = TgaElement::monomial(
            basis.algebra().clone(),
            basis.domain().clone(),
            h,
            basis.algebra().coeff_ring().one(),
        )?;
        z.set(u, v, Value::Tga(mono))?;
        let mut coords_for_dir = Vec::new();
        for jk in &js {
            let comm = jk.mul(&z)?.sub(&z.mul(jk)?)?;
            for e in comm.entries() {
                match e {
                    Value::Tga(t) => coords_for_dir.push(rational_coords(t)?),
                    _ => unreachable!(),
                }
            }
        }
        row_data.push(coords_for_dir);
    }
    let total_eqs = row_data[0].len() * order;
    for eq in 0..total_eqs {
        let (block, coord) = (eq / order, eq % order);
        let row: Vec<Rational> = row_data
            .iter()
            .map(|per_dir| per_dir[block][coord].clone())
            .collect();
        if row.iter().all(Rational::is_zero) {
            continue;
        }
        rows.push(row);
    }
    let null = rational_nullspace(&rows, directions.len());
    let mut out = Vec::new();
    for vec in null {
        let mut mat = Matrix::zero(m, m, basis.sub_ring());
        for (d, &(u, v, h)) in directions.iter().enumerate() {
            if vec[d].is_zero() {
                continue;
            }
            let mono = TgaElement::monomial(
                basis.algebra().clone(),
                basis.sub_span(),
                h,
                Value::Rat(vec[d].clone()),
            )?;
            let merged = match mat.get(u, v) {
                Value::Tga(t) => t.add(&mono)?,
                _ => unreachable!(),
            };
            mat.set(u, v, Value::Tga(merged))?;
        }
        out.push(mat);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{
        c2, complex_algebra, group_algebra, quaternion_element,
        quaternion_lower_tower, quaternion_tower, s3,
    };
    use crate::rings::poly::{Poly, ScalarRing, VarSet};
    use crate::tga::{coset_decompose, Span};

    fn rat(v: i64) -> Value {
        Value::Rat(Rational::from_integer(v))
    }

    // B-span element of the quaternion tower: a + b*i as span{1, i}.
    fn gauss(basis: &TowerBasis, a: i64, b: i64) -> Value {
        Value::Tga(
            TgaElement::from_coords(
                basis.algebra().clone(),
                basis.sub_span(),
                vec![(0, rat(a)), (1, rat(b))],
            )
            .unwrap(),
        )
    }

    #[test]
    fn complex_over_rational_block_form() {
        // b1 + i b2 represents as [[b1, -b2], [b2, b1]].
        let algebra = complex_algebra(Ring::Rational).unwrap();
        let tower = coset_decompose(&algebra, Span::Full, &[0]).unwrap();
        let a = TgaElement::from_coords(
            algebra.clone(),
            Span::Full,
            vec![(0, rat(3)), (1, rat(5))],
        )
        .unwrap();
        let l = regrep_element(&tower, &a).unwrap();
        let b = |v: i64| {
            Value::Tga(
                TgaElement::from_coords(algebra.clone(), tower.sub_span(), vec![(0, rat(v))])
                    .unwrap(),
            )
        };
        assert_eq!(l.get(0, 0), &b(3));
        assert_eq!(l.get(0, 1), &b(-5));
        assert_eq!(l.get(1, 0), &b(5));
        assert_eq!(l.get(1, 1), &b(3));
    }

    #[test]
    fn quaternion_j_block_form() {
        // L(j) = [[0, -1], [1, 0]] over B = span{1, i}.
        let tower = quaternion_tower(Ring::Rational).unwrap();
        let j = quaternion_element(tower.algebra(), [0, 0, 1, 0]).unwrap();
        let l = regrep_element(&tower, &j).unwrap();
        assert_eq!(l.get(0, 0), &gauss(&tower, 0, 0));
        assert_eq!(l.get(0, 1), &gauss(&tower, -1, 0));
        assert_eq!(l.get(1, 0), &gauss(&tower, 1, 0));
        assert_eq!(l.get(1, 1), &gauss(&tower, 0, 0));
    }

    #[test]
    fn quaternion_conjugation_in_columns() {
        // a = i: a(1) = i -> column (i, 0); a(j) = ij = k = j*(-i) ->
        // column (0, -i): the conjugation b |-> b-bar shows up.
        let tower = quaternion_tower(Ring::Rational).unwrap();
        let i_elt = quaternion_element(tower.algebra(), [0, 1, 0, 0]).unwrap();
        let l = regrep_element(&tower, &i_elt).unwrap();
        assert_eq!(l.get(0, 0), &gauss(&tower, 0, 1));
        assert_eq!(l.get(1, 1), &gauss(&tower, 0, -1));
        assert_eq!(l.get(0, 1), &gauss(&tower, 0, 0));
        assert_eq!(l.get(1, 0), &gauss(&tower, 0, 0));
    }

    #[test]
    fn group_algebra_c2_block_form() {
        // Q[x]C2 over Q[x]: b1 e + b2 g -> [[b1, b2], [b2, b1]].
        let vars = VarSet::new(vec!["x".into()]);
        let coeff = Ring::poly(vars.clone(), ScalarRing::Rational);
        let algebra = group_algebra(c2(), coeff.clone(), "QxC2").unwrap();
        let tower = coset_decompose(&algebra, Span::Full, &[0]).unwrap();
        let x = Value::Poly(Poly::var(vars.clone(), ScalarRing::Rational, 0));
        let x2p1 = x.mul(&x).unwrap().add(&coeff.one()).unwrap();
        let a = TgaElement::from_coords(
            algebra.clone(),
            Span::Full,
            vec![(0, x.clone()), (1, x2p1.clone())],
        )
        .unwrap();
        let l = regrep_element(&tower, &a).unwrap();
        let wrap = |v: &Value| {
            Value::Tga(
                TgaElement::from_coords(
                    algebra.clone(),
                    tower.sub_span(),
                    vec![(0, v.clone())],
                )
                .unwrap(),
            )
        };
        assert_eq!(l.get(0, 0), &wrap(&x));
        assert_eq!(l.get(0, 1), &wrap(&x2p1));
        assert_eq!(l.get(1, 0), &wrap(&x2p1));
        assert_eq!(l.get(1, 1), &wrap(&x));
    }

    #[test]
    fn regrep_is_multiplicative_and_unital() {
        let tower = quaternion_tower(Ring::Rational).unwrap();
        let one = TgaElement::one(tower.algebra().clone(), Span::Full);
        assert!(
            regrep_element(&tower, &one).unwrap()
                == Matrix::identity(2, tower.sub_ring())
        );
        let a = quaternion_element(tower.algebra(), [1, 2, 3, 4]).unwrap();
        let b = quaternion_element(tower.algebra(), [-2, 0, 1, 5]).unwrap();
        let lhs = regrep_element(&tower, &a.mul(&b).unwrap()).unwrap();
        let rhs = regrep_element(&tower, &a)
            .unwrap()
            .mul(&regrep_element(&tower, &b).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn indicator_and_coset_forms_match() {
        let tower = quaternion_tower(Ring::Rational).unwrap();
        for coeffs in [[0, 0, 1, 0], [1, 2, 3, 4], [0, -1, 0, 2]] {
            let a = quaternion_element(tower.algebra(), coeffs).unwrap();
            let plain = regrep_element(&tower, &a).unwrap();
            let ind = regrep_via_indicator(&tower, &a).unwrap();
            let coset = regrep_via_coset_form(&tower, &a).unwrap();
            assert_eq!(plain, ind);
            assert_eq!(plain, coset);
        }
    }

    #[test]
    fn inverse_examples() {
        let tower = quaternion_tower(Ring::Rational).unwrap();
        // j^{-1} = -j.
        let j = quaternion_element(tower.algebra(), [0, 0, 1, 0]).unwrap();
        let jinv = inverse_via_regrep(&tower, &j).unwrap().unwrap();
        assert_eq!(jinv, quaternion_element(tower.algebra(), [0, 0, -1, 0]).unwrap());
        // (1 + 2i + 3j + 4k)^{-1} = (1 - 2i - 3j - 4k)/30.
        let a = quaternion_element(tower.algebra(), [1, 2, 3, 4]).unwrap();
        let ainv = inverse_via_regrep(&tower, &a).unwrap().unwrap();
        let expect = crate::fixtures::quaternion_element_rat(
            tower.algebra(),
            [
                Rational::from_pair(1, 30),
                Rational::from_pair(-2, 30),
                Rational::from_pair(-3, 30),
                Rational::from_pair(-4, 30),
            ],
        )
        .unwrap();
        assert_eq!(ainv, expect);
        assert!(a.mul(&ainv).unwrap().is_one());
        assert!(ainv.mul(&a).unwrap().is_one());
        // 0 is not invertible.
        let zero = TgaElement::zero(tower.algebra().clone(), Span::Full);
        assert!(inverse_via_regrep(&tower, &zero).unwrap().is_none());
    }

    #[test]
    fn charpoly_examples() {
        let tower = quaternion_tower(Ring::Rational).unwrap();
        // j: x^2 + 1.
        let j = quaternion_element(tower.algebra(), [0, 0, 1, 0]).unwrap();
        let coeffs = charpoly_regrep(&tower, &j).unwrap();
        assert_eq!(coeffs.len(), 3);
        assert_eq!(coeffs[0], gauss(&tower, 1, 0));
        assert!(coeffs[1].is_zero());
        assert!(coeffs[2].is_one());
        // 1 + 2i + 3j + 4k: x^2 - 2x + 30.
        let a = quaternion_element(tower.algebra(), [1, 2, 3, 4]).unwrap();
        let coeffs = charpoly_regrep(&tower, &a).unwrap();
        assert_eq!(coeffs[0], gauss(&tower, 30, 0));
        assert_eq!(coeffs[1], gauss(&tower, -2, 0));
        assert!(coeffs[2].is_one());
        // Coefficients lie in Z(A) cap B.
        for c in &coeffs {
            assert!(central_in_a(&tower, c).unwrap());
        }
    }

    #[test]
    fn cayley_hamilton_on_quaternions() {
        let tower = quaternion_tower(Ring::Rational).unwrap();
        let a = quaternion_element(tower.algebra(), [1, 2, 3, 4]).unwrap();
        assert!(cayley_hamilton_check(&tower, &a).unwrap());
        let one = TgaElement::one(tower.algebra().clone(), Span::Full);
        assert!(cayley_hamilton_check(&tower, &one).unwrap());
    }

    #[test]
    fn j_matrix_examples() {
        let tower = quaternion_tower(Ring::Rational).unwrap();
        let js = j_matrices(&tower).unwrap();
        assert_eq!(js.len(), 2);
        // J(e_1) = I.
        assert_eq!(js[0], Matrix::identity(2, tower.domain_ring()));
        // J(e_2) = [[0, j], [-j, 0]].
        let jmono = |c: i64| {
            Value::Tga(
                TgaElement::from_coords(
                    tower.algebra().clone(),
                    Span::Full,
                    vec![(2, rat(c))],
                )
                .unwrap(),
            )
        };
        assert!(js[1].get(0, 0).is_zero());
        assert_eq!(js[1].get(0, 1), &jmono(1));
        assert_eq!(js[1].get(1, 0), &jmono(-1));
        assert!(js[1].get(1, 1).is_zero());
    }

    #[test]
    fn j_matrix_plain_c2() {
        // Q[x]C2 over Q[x]: J(e_2) = [[0, g], [g, 0]] with g^2 = 1.
        let algebra = group_algebra(c2(), Ring::Rational, "QC2").unwrap();
        let tower = coset_decompose(&algebra, Span::Full, &[0]).unwrap();
        let js = j_matrices(&tower).unwrap();
        let g = Value::Tga(
            TgaElement::from_coords(algebra.clone(), Span::Full, vec![(1, rat(1))]).unwrap(),
        );
        assert!(js[1].get(0, 0).is_zero());
        assert_eq!(js[1].get(0, 1), &g);
        assert_eq!(js[1].get(1, 0), &g);
        assert!(js[1].get(1, 1).is_zero());
    }

    #[test]
    fn commutant_membership_and_rejection() {
        let tower = quaternion_tower(Ring::Rational).unwrap();
        // Forward: L(a) is in the commutant and reconstructs a.
        let a = quaternion_element(tower.algebra(), [2, -1, 0, 3]).unwrap();
        let l = regrep_element(&tower, &a).unwrap();
        let (member, witness) = commutant_check(&tower, &l).unwrap();
        assert!(member);
        assert_eq!(witness.unwrap(), a);
        // Identity reconstructs 1.
        let id = Matrix::identity(2, tower.sub_ring());
        let (member, witness) = commutant_check(&tower, &id).unwrap();
        assert!(member);
        assert!(witness.unwrap().is_one());
        // E_12 over B is not in the image.
        let mut e12 = Matrix::zero(2, 2, tower.sub_ring());
        e12.set(0, 1, gauss(&tower, 1, 0)).unwrap();
        let (member, _) = commutant_check(&tower, &e12).unwrap();
        assert!(!member);
    }

    #[test]
    fn commutant_solution_space_is_the_image() {
        // The commutant of {J(e_k)} over the quaternion tower is exactly
        // L(H), a 4-dimensional rational space; every solution
        // reconstructs a witness.
        let tower = quaternion_tower(Ring::Rational).unwrap();
        let sols = commutant_solution_basis(&tower).unwrap();
        assert_eq!(sols.len(), 4);
        for b in &sols {
            let (member, witness) = commutant_check(&tower, b).unwrap();
            assert!(member);
            assert!(witness.is_some());
        }
    }

    #[test]
    fn matrix_commutant_and_witness() {
        let tower = quaternion_tower(Ring::Rational).unwrap();
        let ring = tower.domain_ring();
        let a11 = quaternion_element(tower.algebra(), [1, 0, 2, 0]).unwrap();
        let a12 = quaternion_element(tower.algebra(), [0, 1, 0, -1]).unwrap();
        let a21 = quaternion_element(tower.algebra(), [3, 0, 0, 0]).unwrap();
        let a22 = quaternion_element(tower.algebra(), [0, 0, 0, 2]).unwrap();
        let a = Matrix::new(
            2,
            2,
            ring,
            vec![
                Value::Tga(a11),
                Value::Tga(a12),
                Value::Tga(a21),
                Value::Tga(a22),
            ],
        )
        .unwrap();
        let image = regrep_matrix(&tower, &a).unwrap();
        assert!(matrix_commutant_check(&tower, 2, &image).unwrap());
        let witness = matrix_commutant_witness(&tower, 2, &image).unwrap().unwrap();
        assert_eq!(witness, a);
        // The identity is in the image; a generic non-commuting matrix is not.
        let id = Matrix::identity(4, tower.sub_ring());
        assert!(matrix_commutant_check(&tower, 2, &id).unwrap());
        let mut bad = Matrix::zero(4, 4, tower.sub_ring());
        bad.set(0, 1, gauss(&tower, 1, 0)).unwrap();
        assert!(!matrix_commutant_check(&tower, 2, &bad).unwrap());
    }

    #[test]
    fn tower_diagram_quaternions() {
        // Q in Q(i) in H(Q): both compositions give the same 4x4 matrix.
        let upper = quaternion_tower(Ring::Rational).unwrap();
        let lower = quaternion_lower_tower(Ring::Rational).unwrap();
        let j = quaternion_element(upper.algebra(), [0, 0, 1, 0]).unwrap();
        assert!(diagram_check_tower(&upper, &lower, &j).unwrap());
        let a = quaternion_element(upper.algebra(), [1, -2, 0, 3]).unwrap();
        assert!(diagram_check_tower(&upper, &lower, &a).unwrap());
    }

    #[test]
    fn tower_diagram_s3() {
        // {1} <= <r> <= S3 over Q.
        let algebra = group_algebra(s3(), Ring::Rational, "QS3").unwrap();
        let upper = coset_decompose(&algebra, Span::Full, &[0, 1, 2]).unwrap();
        let lower = coset_decompose(&algebra, Span::sub(vec![0, 1, 2]), &[0]).unwrap();
        let a = TgaElement::from_coords(
            algebra.clone(),
            Span::Full,
            vec![(0, rat(1)), (2, rat(-2)), (3, rat(3)), (5, rat(1))],
        )
        .unwrap();
        assert!(diagram_check_tower(&upper, &lower, &a).unwrap());
        // Trivial lower tower (C = B) composes trivially.
        let trivial_lower =
            coset_decompose(&algebra, Span::sub(vec![0, 1, 2]), &[0, 1, 2]).unwrap();
        assert!(diagram_check_tower(&upper, &trivial_lower, &a).unwrap());
    }

    #[test]
    fn lemma_4_2_block_layout() {
        let tower = quaternion_tower(Ring::Rational).unwrap();
        let ring = tower.domain_ring();
        let j = quaternion_element(tower.algebra(), [0, 0, 1, 0]).unwrap();
        let zero = TgaElement::zero(tower.algebra().clone(), Span::Full);
        // a = diag(j, j).
        let a = Matrix::new(
            2,
            2,
            ring,
            vec![
                Value::Tga(j.clone()),
                Value::Tga(zero.clone()),
                Value::Tga(zero),
                Value::Tga(j),
            ],
        )
        .unwrap();
        assert!(block_layout_check(&tower, &a).unwrap());
        // And the permuted form is block-diagonal with two copies of L(j).
        let flat = regrep_matrix(&tower, &a).unwrap();
        let permuted = perm_action(&sigma_perm(2, 2), &flat).unwrap();
        let lj = regrep_element(&tower, &quaternion_element(tower.algebra(), [0, 0, 1, 0]).unwrap())
            .unwrap();
        for p in 0..2 {
            for q in 0..2 {
                assert_eq!(permuted.get(p, q), lj.get(p, q));
                assert_eq!(permuted.get(2 + p, 2 + q), lj.get(p, q));
                assert!(permuted.get(p, 2 + q).is_zero());
            }
        }
    }

    #[test]
    fn matrix_regrep_reduces_to_element_and_identity() {
        let tower = quaternion_tower(Ring::Rational).unwrap();
        let a = quaternion_element(tower.algebra(), [1, 2, 3, 4]).unwrap();
        let single = Matrix::new(1, 1, tower.domain_ring(), vec![Value::Tga(a.clone())]).unwrap();
        assert_eq!(
            regrep_matrix(&tower, &single).unwrap(),
            regrep_element(&tower, &a).unwrap()
        );
        let id = Matrix::identity(3, tower.domain_ring());
        assert_eq!(
            regrep_matrix(&tower, &id).unwrap(),
            Matrix::identity(6, tower.sub_ring())
        );
    }

    #[test]
    fn basis_change_preserves_det_of_regrep() {
        // det . L is basis independent: canonical vs alternative representative choice.
        let algebra = group_algebra(s3(), Ring::Rational, "QS3").unwrap();
        let canonical = coset_decompose(&algebra, Span::Full, &[0, 1, 2]).unwrap();
        // Alternative: represent the non-identity coset by rs (index 4)
        // scaled by 2.
        let alt = TowerBasis::with_vecs(
            algebra.clone(),
            Span::Full,
            vec![0, 1, 2],
            vec![
                crate::tga::BasisVec::plain(0),
                crate::tga::BasisVec {
                    unit: crate::rings::poly::Scalar::Rat(Rational::from_integer(2)),
                    elem: 4,
                },
            ],
        )
        .unwrap();
        let a = TgaElement::from_coords(
            algebra.clone(),
            Span::Full,
            vec![(0, rat(2)), (1, rat(-1)), (3, rat(1)), (4, rat(3))],
        )
        .unwrap();
        let d1 = regrep_element(&canonical, &a).unwrap().det_divfree().unwrap();
        let d2 = regrep_element(&alt, &a).unwrap().det_divfree().unwrap();
        assert_eq!(d1, d2);
    }

    #[test]
    fn matrix_inverse_via_regrep_roundtrip() {
        let tower = quaternion_tower(Ring::Rational).unwrap();
        let ring = tower.domain_ring();
        let a11 = quaternion_element(tower.algebra(), [1, 1, 0, 0]).unwrap();
        let a12 = quaternion_element(tower.algebra(), [0, 0, 1, 0]).unwrap();
        let a21 = quaternion_element(tower.algebra(), [0, 0, 0, 0]).unwrap();
        let a22 = quaternion_element(tower.algebra(), [2, 0, 0, 1]).unwrap();
        let x = Matrix::new(
            2,
            2,
            ring.clone(),
            vec![
                Value::Tga(a11),
                Value::Tga(a12),
                Value::Tga(a21),
                Value::Tga(a22),
            ],
        )
        .unwrap();
        let xinv = matrix_inverse_via_regrep(&tower, &x).unwrap().unwrap();
        assert_eq!(x.mul(&xinv).unwrap(), Matrix::identity(2, ring.clone()));
        assert_eq!(xinv.mul(&x).unwrap(), Matrix::identity(2, ring.clone()));
        // Singular: repeated quaternion rows.
        let row = quaternion_element(tower.algebra(), [0, 0, 1, 0]).unwrap();
        let sing = Matrix::new(
            2,
            2,
            ring,
            vec![
                Value::Tga(row.clone()),
                Value::Tga(row.clone()),
                Value::Tga(row.clone()),
                Value::Tga(row),
            ],
        )
        .unwrap();
        assert!(matrix_inverse_via_regrep(&tower, &sing).unwrap().is_none());
    }
}

#[cfg(test)]
mod gate_tests {
    use super::*;
    use crate::fixtures::{group_algebra, quaternion_element, quaternion_tower, s3};
    use crate::tga::{coset_decompose, Span};

    #[test]
    fn charpoly_of_one_is_x_minus_one_to_the_m() {
        // a = 1: Phi = (x - 1)^m; for m = 2 the coefficients are 1, -2, 1.
        let tower = quaternion_tower(Ring::Rational).unwrap();
        let one = TgaElement::one(tower.algebra().clone(), Span::Full);
        let coeffs = charpoly_regrep(&tower, &one).unwrap();
        let scalar = |v: i64| {
            Value::Tga(
                TgaElement::from_coords(
                    tower.algebra().clone(),
                    tower.sub_span(),
                    vec![(0, Value::Rat(Rational::from_integer(v)))],
                )
                .unwrap(),
            )
        };
        assert_eq!(coeffs[0], scalar(1));
        assert_eq!(coeffs[1], scalar(-2));
        assert!(coeffs[2].is_one());
    }

    #[test]
    fn cayley_hamilton_gated_by_conjugation_closure() {
        // The basis of S3 over <s> violates condition (ii): r^{-1} s r
        // leaves the span of {e, s}. The substitution is refused.
        let algebra = group_algebra(s3(), Ring::Rational, "QS3").unwrap();
        let tower = coset_decompose(&algebra, Span::Full, &[0, 3]).unwrap();
        let conds = crate::tga::basis_conditions(&tower).unwrap();
        assert!(!conds.conjugation_closed);
        let a = TgaElement::one(algebra, Span::Full);
        assert!(matches!(
            cayley_hamilton_check(&tower, &a),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn commutant_gated_by_commuting_cosets() {
        // Over the trivial subgroup of S3 the coset products are the
        // group itself, which is nonabelian: condition (vi) fails and the
        // commutant characterization is refused.
        let algebra = group_algebra(s3(), Ring::Rational, "QS3").unwrap();
        let tower = coset_decompose(&algebra, Span::Full, &[0]).unwrap();
        let conds = crate::tga::basis_conditions(&tower).unwrap();
        assert!(conds.holds_iii_v());
        assert!(!conds.commuting_cosets);
        let b = Matrix::identity(6, tower.sub_ring());
        assert!(matches!(
            commutant_check(&tower, &b),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn indicator_form_gated() {
        // regrep_via_indicator needs (iii)-(v); they hold for coset bases,
        // so the quaternion case goes through while a deliberately broken
        // precondition is surfaced by the commutant gates above. Check the
        // positive path against a j input once more.
        let tower = quaternion_tower(Ring::Rational).unwrap();
        let j = quaternion_element(tower.algebra(), [0, 0, 1, 0]).unwrap();
        assert_eq!(
            regrep_via_indicator(&tower, &j).unwrap(),
            regrep_element(&tower, &j).unwrap()
        );
    }
}
