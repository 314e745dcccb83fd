//! Bundled groups, cocycles, algebras, and towers.
//!
//! These are the concrete instances every verification suite runs on:
//! the small cyclic and dihedral groups, S3, Q8, and the quaternions
//! realized as the sign-twisted Klein four-group.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::Result;
use crate::rings::poly::Scalar;
use crate::rings::rational::Rational;
use crate::rings::Ring;
use crate::tga::{coset_decompose, Algebra, Cocycle, FiniteGroupTable, Span, TowerBasis};

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// The trivial group.
pub fn trivial() -> FiniteGroupTable {
    FiniteGroupTable::new("C1", names(&["e"]), vec![vec![0]], BTreeMap::new()).unwrap()
}

/// Cyclic group of order n with elements named 0..n-1.
pub fn cyclic(n: usize) -> FiniteGroupTable {
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    let elements = (0..n).map(|i| i.to_string()).collect();
    let mut subgroups = BTreeMap::new();
    for d in 2..n {
        if n.is_multiple_of(d) {
            let sub: Vec<usize> = (0..d).map(|k| k * (n / d)).collect();
            subgroups.insert(format!("C{d}"), sub);
        }
    }
    FiniteGroupTable::new(format!("C{n}"), elements, table, subgroups).unwrap()
}

/// C2 with the element names used throughout the examples.
pub fn c2() -> FiniteGroupTable {
    FiniteGroupTable::new(
        "C2",
        names(&["e", "g"]),
        vec![vec![0, 1], vec![1, 0]],
        BTreeMap::new(),
    )
    .unwrap()
}

/// Klein four-group C2 x C2.
pub fn klein() -> FiniteGroupTable {
    // Elements as bit pairs ab with xor multiplication.
    let idx = |a: usize, b: usize| a + 2 * b;
    let table = (0..4usize)
        .map(|i| {
            (0..4usize)
                .map(|j| idx((i & 1) ^ (j & 1), (i >> 1) ^ (j >> 1)))
                .collect()
        })
        .collect();
    let mut subgroups = BTreeMap::new();
    subgroups.insert("C2a".to_string(), vec![0, 1]);
    subgroups.insert("C2b".to_string(), vec![0, 2]);
    subgroups.insert("C2c".to_string(), vec![0, 3]);
    FiniteGroupTable::new("C2xC2", names(&["00", "10", "01", "11"]), table, subgroups).unwrap()
}

/// Symmetric group S3 as r^k s^b with r^3 = s^2 = e, s r = r^{-1} s.
pub fn s3() -> FiniteGroupTable {
    dihedral_like(3, "S3", &["e", "r", "r2", "s", "rs", "r2s"], "R3")
}

/// Dihedral group D4 of order 8.
pub fn d4() -> FiniteGroupTable {
    dihedral_like(
        4,
        "D4",
        &["e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"],
        "C4",
    )
}

fn dihedral_like(n: usize, name: &str, elem: &[&str], rot_name: &str) -> FiniteGroupTable {
    let idx = |k: usize, b: usize| k + n * b;
    let mut table = vec![vec![0; 2 * n]; 2 * n];
    for k in 0..n {
        for b in 0..2 {
            for l in 0..n {
                for c in 0..2 {
                    // r^k s^b * r^l s^c = r^{k + l*(-1)^b} s^{b+c}
                    let l_signed = if b == 0 { l } else { (n - l) % n };
                    table[idx(k, b)][idx(l, c)] = idx((k + l_signed) % n, (b + c) % 2);
                }
            }
        }
    }
    let mut subgroups = BTreeMap::new();
    subgroups.insert(rot_name.to_string(), (0..n).collect());
    FiniteGroupTable::new(name, names(elem), table, subgroups).unwrap()
}

/// Sign of the product of two quaternion units from {1, i, j, k}
/// (indices 0..3), and the resulting unit.
fn quat_unit_mul(a: usize, b: usize) -> (i64, usize) {
    match (a, b) {
        (0, x) => (1, x),
        (x, 0) => (1, x),
        (1, 1) => (-1, 0),
        (2, 2) => (-1, 0),
        (3, 3) => (-1, 0),
        (1, 2) => (1, 3),
        (2, 1) => (-1, 3),
        (2, 3) => (1, 1),
        (3, 2) => (-1, 1),
        (3, 1) => (1, 2),
        (1, 3) => (-1, 2),
        _ => unreachable!(),
    }
}

/// The quaternion group Q8 of order 8.
pub fn q8() -> FiniteGroupTable {
    // Index 2*unit + sign_bit with units 1, i, j, k.
    let idx = |unit: usize, s: i64| 2 * unit + if s < 0 { 1 } else { 0 };
    let mut table = vec![vec![0; 8]; 8];
    for u in 0..4 {
        for su in [1i64, -1] {
            for v in 0..4 {
                for sv in [1i64, -1] {
                    let (sgn, w) = quat_unit_mul(u, v);
                    table[idx(u, su)][idx(v, sv)] = idx(w, sgn * su * sv);
                }
            }
        }
    }
    let mut subgroups = BTreeMap::new();
    subgroups.insert("C4".to_string(), vec![0, 1, 2, 3]); // <i> = {1, -1, i, -i}
    FiniteGroupTable::new(
        "Q8",
        names(&["1", "n1", "i", "ni", "j", "nj", "k", "nk"]),
        table,
        subgroups,
    )
    .unwrap()
}

/// The quaternion sign cocycle on the Klein four-group with basis
/// monomials named 1, i, j, k. Twisting C2 x C2 by it gives the
/// quaternions.
pub fn quaternion_cocycle_values() -> Vec<Vec<Scalar>> {
    // Klein element k1 + 2*k2 maps to unit: 0 -> 1, 1 -> i, 2 -> j, 3 -> k.
    (0..4)
        .map(|a| {
            (0..4)
                .map(|b| {
                    let (sgn, _) = quat_unit_mul(a, b);
                    Scalar::Rat(Rational::from_integer(sgn))
                })
                .collect()
        })
        .collect()
}

/// Klein group with quaternion-unit element names, for the twisted
/// realization of H.
pub fn quaternion_group() -> FiniteGroupTable {
    let idx = |a: usize, b: usize| {
        // unit product forgets sign: position in {1,i,j,k}
        let (_, w) = quat_unit_mul(a, b);
        w
    };
    let table = (0..4usize)
        .map(|i| (0..4usize).map(|j| idx(i, j)).collect())
        .collect();
    let mut subgroups = BTreeMap::new();
    subgroups.insert("Ci".to_string(), vec![0, 1]); // span {1, i}
    FiniteGroupTable::new("Quat", names(&["1", "i", "j", "k"]), table, subgroups).unwrap()
}

/// The rational quaternions H(Q) as the sign-twisted Klein group algebra.
pub fn quaternion_algebra(coeff: Ring) -> Result<Arc<Algebra>> {
    let group = quaternion_group();
    let cocycle = Cocycle::new(&group, quaternion_cocycle_values())?;
    Algebra::new(group, cocycle, coeff, "H")
}

/// The Gaussian rationals Q(i) as the sign-twisted C2 (basis 1, i with
/// i^2 = -1); the exact stand-in for C over R.
pub fn complex_algebra(coeff: Ring) -> Result<Arc<Algebra>> {
    let group = FiniteGroupTable::new(
        "Ci",
        names(&["1", "i"]),
        vec![vec![0, 1], vec![1, 0]],
        BTreeMap::new(),
    )?;
    let one = Scalar::Rat(Rational::one());
    let m1 = Scalar::Rat(Rational::from_integer(-1));
    let values = vec![vec![one.clone(), one.clone()], vec![one, m1]];
    let cocycle = Cocycle::new(&group, values)?;
    Algebra::new(group, cocycle, coeff, "C")
}

/// Plain group algebra with the trivial cocycle.
pub fn group_algebra(
    group: FiniteGroupTable,
    coeff: Ring,
    label: &str,
) -> Result<Arc<Algebra>> {
    let n = group.order();
    Algebra::new(group, Cocycle::trivial(n), coeff, label)
}

/// Tower H(Q) over its Gaussian subfield span{1, i}, basis e = (1, j).
pub fn quaternion_tower(coeff: Ring) -> Result<TowerBasis> {
    let algebra = quaternion_algebra(coeff)?;
    coset_decompose(&algebra, Span::Full, &[0, 1])
}

/// Lower tower of the quaternions: span{1, i} over span{1}, basis (1, i).
pub fn quaternion_lower_tower(coeff: Ring) -> Result<TowerBasis> {
    let algebra = quaternion_algebra(coeff)?;
    coset_decompose(&algebra, Span::sub(vec![0, 1]), &[0])
}

/// Tower of a plain group algebra over the span of a subgroup.
pub fn group_tower(
    group: FiniteGroupTable,
    sub: &[usize],
    coeff: Ring,
    label: &str,
) -> Result<TowerBasis> {
    let algebra = group_algebra(group, coeff, label)?;
    coset_decompose(&algebra, Span::Full, sub)
}

/// w + xi + yj + zk in the twisted realization, with rational
/// coefficients.
pub fn quaternion_element(
    algebra: &Arc<Algebra>,
    coeffs: [i64; 4],
) -> Result<crate::tga::TgaElement> {
    quaternion_element_rat(
        algebra,
        [
            Rational::from_integer(coeffs[0]),
            Rational::from_integer(coeffs[1]),
            Rational::from_integer(coeffs[2]),
            Rational::from_integer(coeffs[3]),
        ],
    )
}

pub fn quaternion_element_rat(
    algebra: &Arc<Algebra>,
    coeffs: [Rational; 4],
) -> Result<crate::tga::TgaElement> {
    crate::tga::TgaElement::from_coords(
        algebra.clone(),
        Span::Full,
        coeffs
            .into_iter()
            .enumerate()
            .map(|(g, c)| (g, crate::rings::Value::Rat(c)))
            .collect(),
    )
}

use crate::groupdet::SuppliedRepresentation;
use crate::matrix::Matrix;
use crate::rings::cyclotomic::Cyclotomic;
use crate::rings::Value;

fn cyc_mat(n: u32, d: usize, entries: Vec<Cyclotomic>) -> Matrix {
    Matrix::new(
        d,
        d,
        Ring::Cyclotomic(n),
        entries.into_iter().map(Value::Cyc).collect(),
    )
    .unwrap()
}

fn scalar_rep(name: &str, group: &FiniteGroupTable, value: impl Fn(usize) -> i64) -> SuppliedRepresentation {
    let images = (0..group.order())
        .map(|g| {
            cyc_mat(
                1,
                1,
                vec![Cyclotomic::from_rational(1, Rational::from_integer(value(g)))],
            )
        })
        .collect();
    SuppliedRepresentation {
        name: name.to_string(),
        degree: 1,
        conductor: 1,
        images,
    }
}

/// A complete set of irreducible representations of S3: the two linear
/// characters and the standard two-dimensional representation over
/// Q(zeta_3).
pub fn s3_irreps() -> Vec<SuppliedRepresentation> {
    let group = s3();
    let trivial_rep = scalar_rep("trivial", &group, |_| 1);
    let sign = scalar_rep("sign", &group, |g| if g < 3 { 1 } else { -1 });
    // Standard representation: r -> diag(z, z^2), s -> swap.
    let z = |k: i64| Cyclotomic::zeta_power(3, k);
    let zero = Cyclotomic::zero(3);
    let phi_r = cyc_mat(3, 2, vec![z(1), zero.clone(), zero.clone(), z(2)]);
    let phi_s = cyc_mat(3, 2, vec![zero.clone(), z(0), z(0), zero.clone()]);
    let images = (0..6)
        .map(|idx| {
            let (k, b) = (idx % 3, idx / 3);
            let mut m = Matrix::identity(2, Ring::Cyclotomic(3));
            for _ in 0..k {
                m = m.mul(&phi_r).unwrap();
            }
            if b == 1 {
                m = m.mul(&phi_s).unwrap();
            }
            m
        })
        .collect();
    let standard = SuppliedRepresentation {
        name: "standard".to_string(),
        degree: 2,
        conductor: 3,
        images,
    };
    vec![trivial_rep, sign, standard]
}

/// A complete set of irreducible representations of Q8: four linear
/// characters factoring through the Klein quotient and the
/// two-dimensional symplectic representation over Q(i).
pub fn q8_irreps() -> Vec<SuppliedRepresentation> {
    let group = q8();
    // Element idx = 2*unit + sign_bit with units 1, i, j, k.
    let mut reps = Vec::new();
    for (si, sj) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
        let name = format!("chi_{}{}", if si > 0 { "p" } else { "m" }, if sj > 0 { "p" } else { "m" });
        reps.push(scalar_rep(&name, &group, move |g| match g / 2 {
            0 => 1,
            1 => si,
            2 => sj,
            3 => si * sj,
            _ => unreachable!(),
        }));
    }
    // 2-dimensional: i -> [[i, 0], [0, -i]], j -> [[0, 1], [-1, 0]].
    let z = |k: i64| Cyclotomic::zeta_power(4, k);
    let zero = Cyclotomic::zero(4);
    let unit_images = [
        cyc_mat(4, 2, vec![z(0), zero.clone(), zero.clone(), z(0)]),
        cyc_mat(4, 2, vec![z(1), zero.clone(), zero.clone(), z(3)]),
        cyc_mat(4, 2, vec![zero.clone(), z(0), z(2), zero.clone()]),
        cyc_mat(4, 2, vec![zero.clone(), z(1), z(1), zero.clone()]),
    ];
    let images = (0..8)
        .map(|idx| {
            let (unit, s) = (idx / 2, idx % 2);
            let m = unit_images[unit].clone();
            if s == 1 {
                m.neg()
            } else {
                m
            }
        })
        .collect();
    reps.push(SuppliedRepresentation {
        name: "symplectic".to_string(),
        degree: 2,
        conductor: 4,
        images,
    });
    reps
}
