//! Seeded verification suites.
//!
//! Every identity in the library has a randomized (or enumerated) check
//! here, driven by SplitMix64 sub-seeds so a failure prints a minimal
//! reproducer: master seed, trial index, and the serialized inputs.
//! The CLI `verify` command and the acceptance tests both run these.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fixtures;
use crate::groupdet::{
    abelian_characters, dedekind_factorize, degree_bound_check, extension_check,
    frobenius_verify, group_determinant, group_vars, products_agree,
    regular_decomposition_check, relabel_group, theta_relative,
};
use crate::matrix::{perm_action, sigma_perm, Matrix, Permutation};
use crate::regrep::{
    block_layout_check, cayley_hamilton_check, central_in_a, charpoly_regrep, commutant_check,
    commutant_solution_basis, diagram_check_matrix, diagram_check_tower, inverse_via_regrep,
    j_matrices, matrix_commutant_check, matrix_commutant_witness, regrep_element, regrep_matrix,
    regrep_via_coset_form, regrep_via_indicator,
};
use crate::rings::cyclotomic::Cyclotomic;
use crate::rings::poly::{Poly, Scalar, ScalarRing, VarSet};
use crate::rings::rational::Rational;
use crate::rings::{cyclo_reduce, Ring, Value};
use crate::rng::SplitMix64;
use crate::sdet::{
    phi, psi, psi_via_regrep, sdet_centrality, sdet_compose, sdet_power,
    sdet_row_op_invariance, study_det, study_det_is_real, study_invertibility,
    study_membership, MembershipKind, RowOp, SdetContext,
};
use crate::tga::{coset_decompose, Span, TgaElement, TowerBasis};

/// Outcome of one named property across its trials.
#[derive(Debug, Clone)]
pub struct PropertyResult {
    pub name: String,
    pub pass: usize,
    pub total: usize,
    /// Reproducers for failed trials: seed, trial index, inputs.
    pub failures: Vec<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.pass == self.total && self.failures.is_empty()
    }

    pub fn detail(&self) -> String {
        format!("{}/{} pass", self.pass, self.total)
    }
}

fn salt(name: &str) -> u64 {
    // FNV-1a over the property name keeps per-property streams apart.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01B3);
    }
    h
}

struct Runner {
    seed: u64,
    results: Vec<PropertyResult>,
}

impl Runner {
    fn new(seed: u64) -> Self {
        Runner { seed, results: Vec::new() }
    }

    /// Run `total` seeded trials of a property. The closure returns
    /// Ok(None) on success and Ok(Some(description)) when the property
    /// fails on the drawn input.
    fn property(
        &mut self,
        name: &str,
        total: usize,
        mut trial: impl FnMut(&mut SplitMix64) -> Result<Option<String>>,
    ) {
        let mut pass = 0;
        let mut failures = Vec::new();
        for t in 0..total {
            let mut rng = SplitMix64::for_trial(self.seed ^ salt(name), t as u64);
            match trial(&mut rng) {
                Ok(None) => pass += 1,
                Ok(Some(desc)) => {
                    failures.push(format!("seed={} trial={t} {desc}", self.seed));
                }
                Err(e) => {
                    failures.push(format!("seed={} trial={t} error: {e}", self.seed));
                }
            }
        }
        self.results.push(PropertyResult {
            name: name.to_string(),
            pass,
            total,
            failures,
        });
    }
}

// ---------------------------------------------------------------------
// Random element recipes (documented draw discipline: coefficients are
// integers uniform in {-3, ..., 3}).
// ---------------------------------------------------------------------

pub fn rand_rational(rng: &mut SplitMix64) -> Rational {
    Rational::from_integer(rng.small_int())
}

pub fn rand_scalar(rng: &mut SplitMix64, ring: &ScalarRing) -> Scalar {
    match ring {
        ScalarRing::Rational => Scalar::Rat(rand_rational(rng)),
        ScalarRing::Cyclotomic(n) => {
            let phi_n = crate::rings::cyclotomic::euler_phi(*n) as usize;
            let coeffs = (0..phi_n).map(|_| rand_rational(rng)).collect();
            Scalar::Cyc(Cyclotomic::reduce(coeffs, *n).expect("valid conductor"))
        }
    }
}

/// Random polynomial: up to three terms of total degree at most two.
pub fn rand_poly(rng: &mut SplitMix64, vars: &Arc<VarSet>, base: &ScalarRing) -> Poly {
    let nterms = 1 + rng.choose(3);
    let mut terms = Vec::new();
    for _ in 0..nterms {
        let mut expo = vec![0u32; vars.len()];
        let degree = rng.choose(3);
        for _ in 0..degree {
            expo[rng.choose(vars.len().max(1))] += 1;
        }
        terms.push((expo, rand_scalar(rng, base)));
    }
    Poly::from_terms(vars.clone(), base.clone(), terms).expect("well-formed terms")
}

/// Random coefficient-ring value.
pub fn rand_coeff(rng: &mut SplitMix64, ring: &Ring) -> Value {
    match ring {
        Ring::Rational => Value::Rat(rand_rational(rng)),
        Ring::Cyclotomic(n) => match rand_scalar(rng, &ScalarRing::Cyclotomic(*n)) {
            Scalar::Cyc(c) => Value::Cyc(c),
            _ => unreachable!(),
        },
        Ring::Poly { vars, base } => Value::Poly(rand_poly(rng, vars, base)),
        _ => unreachable!("not a coefficient ring"),
    }
}

/// Random algebra element with support across the given span.
pub fn rand_tga(rng: &mut SplitMix64, algebra: &Arc<crate::tga::Algebra>, span: &Span) -> TgaElement {
    let coeff_ring = algebra.coeff_ring().clone();
    let coords = span
        .indices(algebra.order())
        .into_iter()
        .map(|g| (g, rand_coeff(rng, &coeff_ring)))
        .collect();
    TgaElement::from_coords(algebra.clone(), span.clone(), coords).expect("valid coords")
}

/// Random integer matrix over Q.
pub fn rand_int_matrix(rng: &mut SplitMix64, n: usize) -> Matrix {
    Matrix::from_fn(n, n, Ring::Rational, |_, _| Value::Rat(rand_rational(rng)))
        .expect("well-formed")
}

/// Random matrix over a twisted group algebra span.
pub fn rand_tga_matrix(
    rng: &mut SplitMix64,
    algebra: &Arc<crate::tga::Algebra>,
    span: &Span,
    r: usize,
) -> Matrix {
    let ring = Ring::Tga { algebra: algebra.clone(), span: span.clone() };
    let mut entries = Vec::with_capacity(r * r);
    for _ in 0..r * r {
        entries.push(Value::Tga(rand_tga(rng, algebra, span)));
    }
    Matrix::new(r, r, ring, entries).expect("well-formed")
}

fn rand_quaternion_matrix(rng: &mut SplitMix64, r: usize) -> Result<Matrix> {
    let algebra = fixtures::quaternion_algebra(Ring::Rational)?;
    Ok(rand_tga_matrix(rng, &algebra, &Span::Full, r))
}

// ---------------------------------------------------------------------
// Suites.
// ---------------------------------------------------------------------

/// Names of the implemented suites, in CLI order.
pub fn suite_names() -> &'static [&'static str] {
    &[
        "rings",
        "kron",
        "block-det",
        "oracle",
        "regrep",
        "diagram",
        "study",
        "cayley-hamilton",
        "commutant",
        "dedekind",
        "extension",
        "frobenius",
        "groupdet",
    ]
}

/// Run one suite (or "all") and return the per-property results.
pub fn run_suite(name: &str, seed: u64, trials: usize) -> Result<Vec<PropertyResult>> {
    let mut runner = Runner::new(seed);
    match name {
        "rings" => rings_suite(&mut runner, trials),
        "kron" => kron_suite(&mut runner, trials),
        "block-det" => block_det_suite(&mut runner, trials),
        "oracle" => oracle_suite(&mut runner, trials),
        "regrep" => regrep_suite(&mut runner, trials),
        "diagram" => diagram_suite(&mut runner, trials),
        "study" => study_suite(&mut runner, trials),
        "cayley-hamilton" => cayley_hamilton_suite(&mut runner, trials),
        "commutant" => commutant_suite(&mut runner, trials),
        "dedekind" => dedekind_suite(&mut runner),
        "extension" => extension_suite(&mut runner),
        "frobenius" => frobenius_suite(&mut runner),
        "groupdet" => groupdet_suite(&mut runner, trials),
        "all" => {
            for n in suite_names() {
                match *n {
                    "rings" => rings_suite(&mut runner, trials),
                    "kron" => kron_suite(&mut runner, trials),
                    "block-det" => block_det_suite(&mut runner, trials),
                    "oracle" => oracle_suite(&mut runner, trials),
                    "regrep" => regrep_suite(&mut runner, trials),
                    "diagram" => diagram_suite(&mut runner, trials),
                    "study" => study_suite(&mut runner, trials),
                    "cayley-hamilton" => cayley_hamilton_suite(&mut runner, trials),
                    "commutant" => commutant_suite(&mut runner, trials),
                    "dedekind" => dedekind_suite(&mut runner),
                    "extension" => extension_suite(&mut runner),
                    "frobenius" => frobenius_suite(&mut runner),
                    "groupdet" => groupdet_suite(&mut runner, trials),
                    _ => unreachable!(),
                }
            }
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown suite {other:?}; available: {}, all",
                suite_names().join(", ")
            )))
        }
    }
    Ok(runner.results)
}

/// Ring axioms, the cyclotomic reduction homomorphism, and polynomial
/// normalization.
fn rings_suite(r: &mut Runner, trials: usize) {
    let vars = VarSet::new(vec!["x".into(), "y".into()]);
    r.property("ring-axioms", trials, |rng| {
        let rings: Vec<Ring> = vec![
            Ring::Rational,
            Ring::Cyclotomic(3),
            Ring::Cyclotomic(4),
            Ring::poly(vars.clone(), ScalarRing::Rational),
        ];
        let ring = &rings[rng.choose(rings.len())];
        let a = rand_coeff(rng, ring);
        let b = rand_coeff(rng, ring);
        let c = rand_coeff(rng, ring);
        let assoc = a.mul(&b)?.mul(&c)? == a.mul(&b.mul(&c)?)?;
        let distrib = a.mul(&b.add(&c)?)? == a.mul(&b)?.add(&a.mul(&c)?)?;
        let comm = a.mul(&b)? == b.mul(&a)?;
        if assoc && distrib && comm {
            Ok(None)
        } else {
            Ok(Some(format!("ring axioms fail in {ring} for a={a} b={b} c={c}")))
        }
    });
    r.property("cyclo-reduce-homomorphism", trials, |rng| {
        let n = [3u32, 4, 5, 6][rng.choose(4)];
        let deg = 1 + rng.choose(6);
        let p: Vec<Rational> = (0..=deg).map(|_| rand_rational(rng)).collect();
        let q: Vec<Rational> = (0..=deg).map(|_| rand_rational(rng)).collect();
        // Convolution in Q[x].
        let mut pq = vec![Rational::zero(); p.len() + q.len() - 1];
        for (i, a) in p.iter().enumerate() {
            for (j, b) in q.iter().enumerate() {
                pq[i + j] = &pq[i + j] + &(a * b);
            }
        }
        let lhs = cyclo_reduce(pq, n)?;
        let rhs = cyclo_reduce(p, n)?.mul(&cyclo_reduce(q, n)?)?;
        if lhs == rhs {
            Ok(None)
        } else {
            Ok(Some(format!("reduce(pq) != reduce(p)reduce(q) at n={n}")))
        }
    });
    r.property("poly-normalize-idempotent", trials, |rng| {
        let base = ScalarRing::Rational;
        let nterms = 1 + rng.choose(5);
        let mut raw = Vec::new();
        for _ in 0..nterms {
            let expo = vec![rng.choose(3) as u32, rng.choose(3) as u32];
            raw.push((expo, rand_scalar(rng, &base)));
        }
        let p1 = Poly::from_terms(vars.clone(), base.clone(), raw.clone())?;
        // Rebuild from its own canonical terms: must be identical.
        let back: Vec<(Vec<u32>, Scalar)> = p1
            .terms_desc()
            .map(|(m, c)| (m.0.clone(), c.clone()))
            .collect();
        let p2 = Poly::from_terms(vars.clone(), base.clone(), back)?;
        // And input order must not matter.
        raw.reverse();
        let p3 = Poly::from_terms(vars.clone(), base.clone(), raw)?;
        if p1 == p2 && p1 == p3 {
            Ok(None)
        } else {
            Ok(Some("normalization not canonical".into()))
        }
    });
    r.property("tga-associativity", trials, |rng| {
        // Random triples in each bundled algebra: the quaternions over Q,
        // Q(zeta_4)C4, and Q[x]S3.
        let algebra = match rng.below(3) {
            0 => fixtures::quaternion_algebra(Ring::Rational)?,
            1 => fixtures::group_algebra(fixtures::cyclic(4), Ring::Cyclotomic(4), "QiC4")?,
            _ => {
                let vars = VarSet::new(vec!["x".into()]);
                fixtures::group_algebra(
                    fixtures::s3(),
                    Ring::poly(vars, ScalarRing::Rational),
                    "QxS3",
                )?
            }
        };
        let a = rand_tga(rng, &algebra, &Span::Full);
        let b = rand_tga(rng, &algebra, &Span::Full);
        let c = rand_tga(rng, &algebra, &Span::Full);
        let assoc = a.mul(&b)?.mul(&c)? == a.mul(&b.mul(&c)?)?;
        let distrib = a.mul(&b.add(&c)?)? == a.mul(&b)?.add(&a.mul(&c)?)?;
        if assoc && distrib {
            Ok(None)
        } else {
            Ok(Some(format!(
                "algebra {} fails associativity/distributivity",
                algebra.label()
            )))
        }
    });
    r.property("tower-decompose-roundtrip", trials, |rng| {
        // Every group element recomposes from its coset decomposition
        // with coefficient one, and random elements round-trip.
        let tower = match rng.below(2) {
            0 => fixtures::quaternion_tower(Ring::Rational)?,
            _ => fixtures::group_tower(fixtures::s3(), &[0, 1, 2], Ring::Rational, "QS3")?,
        };
        let algebra = tower.algebra().clone();
        for g in 0..algebra.order() {
            let mono = TgaElement::monomial(
                algebra.clone(),
                Span::Full,
                g,
                algebra.coeff_ring().one(),
            )?;
            let parts = tower.decompose(&mono)?;
            if tower.recompose(&parts)? != mono {
                return Ok(Some(format!("monomial {g} does not recompose")));
            }
        }
        let a = rand_tga(rng, &algebra, &Span::Full);
        if tower.recompose(&tower.decompose(&a)?)? == a {
            Ok(None)
        } else {
            Ok(Some(format!("element does not recompose: {a}")))
        }
    });
    r.property("cyclotomic-poly-root-product", 3, |rng| {
        let n = [3u32, 4, 6][rng.choose(3)];
        // prod over k coprime to n of (x - zeta^k) = Phi_n with rational
        // coefficients.
        let mut poly = vec![Cyclotomic::one(n)];
        for k in 1..=n {
            if num_integer::gcd(k, n) != 1 {
                continue;
            }
            let root = Cyclotomic::zeta_power(n, k as i64);
            let mut next = vec![Cyclotomic::zero(n); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] = next[i + 1].add(c)?;
                next[i] = next[i].sub(&c.mul(&root)?)?;
            }
            poly = next;
        }
        let expect = crate::rings::cyclotomic::cyclotomic_poly(n);
        for (i, c) in poly.iter().enumerate() {
            match c.as_rational() {
                Some(r) if r == expect[i] => {}
                _ => return Ok(Some(format!("coefficient {i} of Phi_{n} differs"))),
            }
        }
        Ok(None)
    });
}

/// Kronecker reversal (and determinant invariance under the symmetric
/// group action).
fn kron_suite(r: &mut Runner, trials: usize) {
    r.property("kron-reversal", trials, |rng| {
        let m = 1 + rng.choose(4);
        let n = 1 + rng.choose(4);
        let x = rand_int_matrix(rng, m);
        let y = rand_int_matrix(rng, n);
        let lhs = perm_action(&sigma_perm(m, n), &x.kron(&y)?)?;
        let rhs = y.kron(&x)?;
        if lhs == rhs {
            Ok(None)
        } else {
            Ok(Some(format!("sigma({m},{n})·(X⊗Y) != Y⊗X for X={x:?} Y={y:?}")))
        }
    });
    r.property("det-perm-invariance", trials, |rng| {
        let m = 1 + rng.choose(4);
        let x = rand_int_matrix(rng, m);
        // Random permutation via Fisher-Yates.
        let mut image: Vec<usize> = (0..m).collect();
        for i in (1..m).rev() {
            image.swap(i, rng.choose(i + 1));
        }
        let p = Permutation::new(image)?;
        if perm_action(&p, &x)?.det_divfree()? == x.det_divfree()? {
            Ok(None)
        } else {
            Ok(Some(format!("det changed under action of {p:?} on {x:?}")))
        }
    });
}

/// Commuting-block determinants: blocks are polynomials of a single
/// random matrix, so they commute pairwise.
fn block_det_suite(r: &mut Runner, trials: usize) {
    r.property("commuting-block-det", trials, |rng| {
        let m = 1 + rng.choose(3);
        let n = 1 + rng.choose(3);
        let t = rand_int_matrix(rng, m);
        let t2 = t.mul(&t)?;
        let id = Matrix::identity(m, Ring::Rational);
        // Assemble the mn x mn matrix of blocks p_kl(T), deg p_kl <= 2.
        let mut x = Matrix::zero(m * n, m * n, Ring::Rational);
        for bk in 0..n {
            for bl in 0..n {
                let c0 = Value::Rat(rand_rational(rng));
                let c1 = Value::Rat(rand_rational(rng));
                let c2 = Value::Rat(rand_rational(rng));
                let block = id
                    .scale(&c0)?
                    .add(&t.scale(&c1)?)?
                    .add(&t2.scale(&c2)?)?;
                for u in 0..m {
                    for v in 0..m {
                        x.set(bk * m + u, bl * m + v, block.get(u, v).clone())?;
                    }
                }
            }
        }
        let outer = x.det_divfree()?;
        let inner = x.block_det_inner(m)?.det_divfree()?;
        if outer == inner {
            Ok(None)
        } else {
            Ok(Some(format!("outer {outer} != inner {inner} (m={m}, n={n})")))
        }
    });
}

/// Division-free determinant against the Leibniz oracle, over Q and
/// over Q[x, y].
fn oracle_suite(r: &mut Runner, trials: usize) {
    let vars = VarSet::new(vec!["x".into(), "y".into()]);
    r.property("divfree-vs-leibniz", trials, |rng| {
        let n = 1 + rng.choose(5);
        let over_poly = rng.below(2) == 1;
        let m = if over_poly {
            let ring = Ring::poly(vars.clone(), ScalarRing::Rational);
            Matrix::from_fn(n, n, ring, |_, _| {
                Value::Poly(rand_poly(rng, &vars, &ScalarRing::Rational))
            })?
        } else {
            rand_int_matrix(rng, n)
        };
        let fast = m.det_divfree()?;
        let oracle = m.det_leibniz()?;
        if fast != oracle {
            return Ok(Some(format!("det mismatch on {m}")));
        }
        // Characteristic polynomial constant term: (-1)^n det.
        let coeffs = m.charpoly_divfree()?;
        let expect = if n % 2 == 1 { oracle.neg() } else { oracle };
        if coeffs[0] != expect {
            return Ok(Some("charpoly constant term mismatch".into()));
        }
        Ok(None)
    });
}

fn quaternion_full_tower() -> Result<TowerBasis> {
    fixtures::quaternion_tower(Ring::Rational)
}

fn s3_rot_tower(base: ScalarRing) -> Result<TowerBasis> {
    let coeff = match base {
        ScalarRing::Rational => Ring::Rational,
        ScalarRing::Cyclotomic(n) => Ring::Cyclotomic(n),
    };
    fixtures::group_tower(fixtures::s3(), &[0, 1, 2], coeff, "S3")
}

/// Multiplicativity, basis independence, invertibility preservation, the
/// indicator and coset forms, and the block layout lemma.
fn regrep_suite(r: &mut Runner, trials: usize) {
    r.property("regrep-multiplicative", trials, |rng| {
        let tower = match rng.below(2) {
            0 => quaternion_full_tower()?,
            _ => s3_rot_tower(ScalarRing::Cyclotomic(3))?,
        };
        let a = rand_tga(rng, tower.algebra(), tower.domain());
        let b = rand_tga(rng, tower.algebra(), tower.domain());
        let lhs = regrep_element(&tower, &a.mul(&b)?)?;
        let rhs = regrep_element(&tower, &a)?.mul(&regrep_element(&tower, &b)?)?;
        let unital = regrep_element(
            &tower,
            &TgaElement::one(tower.algebra().clone(), tower.domain().clone()),
        )? == Matrix::identity(tower.rank(), tower.sub_ring());
        if lhs == rhs && unital {
            Ok(None)
        } else {
            Ok(Some(format!("L(ab) != L(a)L(b) for a={a} b={b}")))
        }
    });
    r.property("regrep-injective", trials, |rng| {
        let tower = quaternion_full_tower()?;
        let a = rand_tga(rng, tower.algebra(), tower.domain());
        let is_zero_image = regrep_element(&tower, &a)?
            .entries()
            .iter()
            .all(Value::is_zero);
        if is_zero_image == a.is_zero() {
            Ok(None)
        } else {
            Ok(Some(format!("L(a) = 0 but a = {a} != 0")))
        }
    });
    r.property("basis-independence-of-det", trials, |rng| {
        // det . L is basis independent: canonical vs a random representative choice.
        let algebra = fixtures::group_algebra(fixtures::s3(), Ring::Rational, "QS3")?;
        let sub = vec![0usize, 1, 2];
        let canonical = coset_decompose(&algebra, Span::Full, &sub)?;
        // The non-identity coset {3, 4, 5}: pick a random representative
        // and a random invertible unit.
        let rep = 3 + rng.choose(3);
        let units = [
            Rational::from_integer(1),
            Rational::from_integer(-1),
            Rational::from_integer(2),
            Rational::from_pair(-1, 2),
        ];
        let unit = units[rng.choose(units.len())].clone();
        let alt = TowerBasis::with_vecs(
            algebra.clone(),
            Span::Full,
            sub,
            vec![
                crate::tga::BasisVec::plain(0),
                crate::tga::BasisVec { unit: Scalar::Rat(unit), elem: rep },
            ],
        )?;
        let a = rand_tga(rng, &algebra, &Span::Full);
        let d1 = regrep_element(&canonical, &a)?.det_divfree()?;
        let d2 = regrep_element(&alt, &a)?.det_divfree()?;
        if d1 == d2 {
            Ok(None)
        } else {
            Ok(Some(format!("det L differs between bases for a={a}")))
        }
    });
    r.property("invertibility-preserving", trials, |rng| {
        let tower = quaternion_full_tower()?;
        let a = rand_tga(rng, tower.algebra(), tower.domain());
        let det = regrep_element(&tower, &a)?.det_divfree()?;
        match inverse_via_regrep(&tower, &a)? {
            Some(inv) => {
                if det.is_zero() {
                    return Ok(Some(format!("inverse found but det L(a) = 0 for a={a}")));
                }
                if !(a.mul(&inv)?.is_one() && inv.mul(&a)?.is_one()) {
                    return Ok(Some(format!("two-sided inverse check failed for a={a}")));
                }
            }
            None => {
                if !det.is_zero() {
                    return Ok(Some(format!("no inverse but det L(a) != 0 for a={a}")));
                }
            }
        }
        Ok(None)
    });
    r.property("indicator-and-coset-forms", trials, |rng| {
        let tower = match rng.below(2) {
            0 => quaternion_full_tower()?,
            _ => s3_rot_tower(ScalarRing::Rational)?,
        };
        let a = rand_tga(rng, tower.algebra(), tower.domain());
        let plain = regrep_element(&tower, &a)?;
        if regrep_via_indicator(&tower, &a)? == plain
            && regrep_via_coset_form(&tower, &a)? == plain
        {
            Ok(None)
        } else {
            Ok(Some(format!("alternate forms differ for a={a}")))
        }
    });
    r.property("block-layout-lemma", trials, |rng| {
        let tower = quaternion_full_tower()?;
        let r_dim = 1 + rng.choose(3);
        let a = rand_tga_matrix(rng, tower.algebra(), &Span::Full, r_dim);
        if block_layout_check(&tower, &a)? {
            Ok(None)
        } else {
            Ok(Some(format!("sigma(m,r) layout mismatch at r={r_dim}")))
        }
    });
    r.property("membership-subring-det", trials, |rng| {
        // Entrywise images have determinants in the scalar subring, and
        // so does the full flattened determinant.
        let tower = quaternion_full_tower()?;
        let r_dim = 1 + rng.choose(2);
        let a = rand_tga_matrix(rng, tower.algebra(), &Span::Full, r_dim);
        for e in a.entries() {
            let t = match e {
                Value::Tga(t) => t,
                _ => unreachable!(),
            };
            let d = regrep_element(&tower, t)?.det_divfree()?;
            match d {
                Value::Tga(v) => {
                    if !(v.scalar_part().is_some() || v.is_zero()) {
                        return Ok(Some(format!("entry norm not scalar: {v}")));
                    }
                }
                _ => unreachable!(),
            }
        }
        let full = regrep_matrix(&tower, &a)?.det_divfree()?;
        match full {
            Value::Tga(v) => {
                if v.scalar_part().is_some() || v.is_zero() {
                    Ok(None)
                } else {
                    Ok(Some(format!("full determinant not in subring: {v}")))
                }
            }
            _ => unreachable!(),
        }
    });
}

/// The backbone diagrams: determinant composition through a tower and the
/// regular-representation tower diagrams.
fn diagram_suite(r: &mut Runner, trials: usize) {
    // Tower fixtures for the determinant composition: B over C.
    struct TowerFixture {
        name: &'static str,
        lower: TowerBasis,
    }
    let make_fixtures = || -> Result<Vec<TowerFixture>> {
        let quat = fixtures::quaternion_lower_tower(Ring::Rational)?;
        let c4_alg = fixtures::group_algebra(fixtures::cyclic(4), Ring::Rational, "QC4")?;
        let c4 = coset_decompose(&c4_alg, Span::Full, &[0])?;
        let klein_alg = fixtures::group_algebra(fixtures::klein(), Ring::Rational, "QV4")?;
        let klein = coset_decompose(&klein_alg, Span::Full, &[0])?;
        let s3_alg = fixtures::group_algebra(fixtures::s3(), Ring::Rational, "QS3")?;
        let s3_rot = coset_decompose(&s3_alg, Span::sub(vec![0, 1, 2]), &[0])?;
        Ok(vec![
            TowerFixture { name: "Q(i)/Q", lower: quat },
            TowerFixture { name: "QC4/Q", lower: c4 },
            TowerFixture { name: "QV4/Q", lower: klein },
            TowerFixture { name: "QC3/Q (inside S3)", lower: s3_rot },
        ])
    };
    r.property("det-composition", trials, |rng| {
        let fixtures_list = make_fixtures()?;
        let fx = &fixtures_list[rng.choose(fixtures_list.len())];
        let r_dim = 1 + rng.choose(3);
        let b = rand_tga_matrix(rng, fx.lower.algebra(), fx.lower.domain(), r_dim);
        // Down the left: Det_C of the flat representation.
        let lhs = regrep_matrix(&fx.lower, &b)?.det_divfree()?;
        // Across the top: Det_B first, then L, then Det_C.
        let det_b = match b.det_divfree()? {
            Value::Tga(t) => t,
            _ => unreachable!(),
        };
        let rhs = regrep_element(&fx.lower, &det_b)?.det_divfree()?;
        if lhs == rhs {
            Ok(None)
        } else {
            Ok(Some(format!("composition differs on {} at r={r_dim}", fx.name)))
        }
    });
    r.property("regrep-tower-diagram", trials, |rng| {
        // Element-level tower diagram, quaternions and S3.
        match rng.below(2) {
            0 => {
                let upper = fixtures::quaternion_tower(Ring::Rational)?;
                let lower = fixtures::quaternion_lower_tower(Ring::Rational)?;
                let a = rand_tga(rng, upper.algebra(), &Span::Full);
                if diagram_check_tower(&upper, &lower, &a)? {
                    Ok(None)
                } else {
                    Ok(Some(format!("quaternion tower diagram fails for a={a}")))
                }
            }
            _ => {
                let algebra =
                    fixtures::group_algebra(fixtures::s3(), Ring::Rational, "QS3")?;
                let upper = coset_decompose(&algebra, Span::Full, &[0, 1, 2])?;
                let lower = coset_decompose(&algebra, Span::sub(vec![0, 1, 2]), &[0])?;
                let a = rand_tga(rng, &algebra, &Span::Full);
                if diagram_check_tower(&upper, &lower, &a)? {
                    Ok(None)
                } else {
                    Ok(Some(format!("S3 tower diagram fails for a={a}")))
                }
            }
        }
    });
    r.property("regrep-tower-diagram-matrix", trials, |rng| {
        let upper = fixtures::quaternion_tower(Ring::Rational)?;
        let lower = fixtures::quaternion_lower_tower(Ring::Rational)?;
        let r_dim = 1 + rng.choose(2);
        let a = rand_tga_matrix(rng, upper.algebra(), &Span::Full, r_dim);
        if diagram_check_matrix(&upper, &lower, &a)? {
            Ok(None)
        } else {
            Ok(Some(format!("matrix tower diagram fails at r={r_dim}")))
        }
    });
    r.property("sdet-composition", trials, |rng| {
        // Sdet^C = Sdet^C_{M(1,B)} . Sdet^B on the quaternion tower.
        let ctx = SdetContext::with_lower(
            fixtures::quaternion_tower(Ring::Rational)?,
            fixtures::quaternion_lower_tower(Ring::Rational)?,
        )?;
        let r_dim = 1 + rng.choose(2);
        let a = rand_tga_matrix(rng, ctx.basis.algebra(), &Span::Full, r_dim);
        let (_, _, equal) = sdet_compose(&ctx, &a)?;
        if equal {
            Ok(None)
        } else {
            Ok(Some(format!("Sdet composition differs at r={r_dim}")))
        }
    });
}

/// The classical Study determinant: S0' through S7'.
fn study_suite(r: &mut Runner, trials: usize) {
    r.property("psi-phi-homomorphic", trials, |rng| {
        let r_dim = 1 + rng.choose(3);
        let a = rand_quaternion_matrix(rng, r_dim)?;
        let b = rand_quaternion_matrix(rng, r_dim)?;
        if psi(&a.mul(&b)?)? != psi(&a)?.mul(&psi(&b)?)? {
            return Ok(Some("psi not multiplicative".into()));
        }
        let pa = psi(&a)?;
        let pb = psi(&b)?;
        if phi(&pa.mul(&pb)?)? != phi(&pa)?.mul(&phi(&pb)?)? {
            return Ok(Some("phi not multiplicative".into()));
        }
        // Injectivity on this pair: equal images imply equal inputs.
        if pa == pb && a != b {
            return Ok(Some("psi not injective".into()));
        }
        Ok(None)
    });
    r.property("psi-equals-regrep-route", trials, |rng| {
        let tower = quaternion_full_tower()?;
        let r_dim = 1 + rng.choose(3);
        let a = rand_quaternion_matrix(rng, r_dim)?;
        if psi(&a)? == psi_via_regrep(&tower, &a)? {
            Ok(None)
        } else {
            Ok(Some("psi differs from iota . L".into()))
        }
    });
    r.property("s1-multiplicative", trials, |rng| {
        let r_dim = 1 + rng.choose(3);
        let a = rand_quaternion_matrix(rng, r_dim)?;
        let b = rand_quaternion_matrix(rng, r_dim)?;
        let lhs = study_det(&a.mul(&b)?)?;
        let rhs = study_det(&a)?.mul(&study_det(&b)?)?;
        if lhs == rhs {
            Ok(None)
        } else {
            Ok(Some(format!("Sdet(ab) != Sdet(a)Sdet(b) at r={r_dim}")))
        }
    });
    r.property("s3-row-ops", trials, |rng| {
        let ctx = SdetContext::new(quaternion_full_tower()?)?;
        let r_dim = 2 + rng.choose(2);
        let a = rand_quaternion_matrix(rng, r_dim)?;
        let src = rng.choose(r_dim);
        let mut dst = rng.choose(r_dim);
        if dst == src {
            dst = (dst + 1) % r_dim;
        }
        let algebra = fixtures::quaternion_algebra(Ring::Rational)?;
        let q = rand_tga(rng, &algebra, &Span::Full);
        let op = if rng.below(2) == 0 {
            RowOp::AddLeftMultipleOfRow
        } else {
            RowOp::AddRightMultipleOfCol
        };
        if sdet_row_op_invariance(&ctx, &a, op, src, dst, &q)? {
            Ok(None)
        } else {
            Ok(Some(format!("row-op changed Sdet at r={r_dim}")))
        }
    });
    r.property("s4-real", trials, |rng| {
        let r_dim = 1 + rng.choose(3);
        let a = rand_quaternion_matrix(rng, r_dim)?;
        let s = study_det(&a)?;
        if study_det_is_real(&s) {
            Ok(None)
        } else {
            Ok(Some(format!("Sdet not real: {s}")))
        }
    });
    r.property("s5-phi-psi-square", trials, |rng| {
        let r_dim = 1 + rng.choose(3);
        let a = rand_quaternion_matrix(rng, r_dim)?;
        let lhs = phi(&psi(&a)?)?.det_divfree()?;
        let s = study_det(&a)?;
        let rhs = s.mul(&s)?;
        let rhs_rat = match &rhs {
            Value::Cyc(c) => c.as_rational(),
            _ => None,
        };
        match (lhs, rhs_rat) {
            (Value::Rat(l), Some(rr)) if l == rr => Ok(None),
            _ => Ok(Some(format!("det(phi psi a) != Sdet^2 at r={r_dim}"))),
        }
    });
    r.property("s2-invertible", trials.clamp(1, 50), |rng| {
        let tower = quaternion_full_tower()?;
        let r_dim = 1 + rng.choose(2);
        // Draw until nonsingular (the singular case is measure-ish zero
        // but possible with small integer draws).
        for _ in 0..20 {
            let a = rand_quaternion_matrix(rng, r_dim)?;
            let s = study_det(&a)?;
            if s.is_zero() {
                continue;
            }
            let (s2, invertible) = study_invertibility(&tower, &a)?;
            if !invertible || s2 != s {
                return Ok(Some("invertible verdict failed".into()));
            }
            return Ok(None);
        }
        Ok(Some("no invertible draw in 20 attempts".into()))
    });
    r.property("s2-singular", trials.clamp(1, 20), |rng| {
        let tower = quaternion_full_tower()?;
        let algebra = fixtures::quaternion_algebra(Ring::Rational)?;
        let r_dim = 2 + rng.choose(2);
        let mut a = rand_quaternion_matrix(rng, r_dim)?;
        // Construct singularity: row dst := q * row src.
        let q = rand_tga(rng, &algebra, &Span::Full);
        let src = 0;
        let dst = 1;
        for j in 0..r_dim {
            let v = Value::Tga(q.clone()).mul(a.get(src, j))?;
            a.set(dst, j, v)?;
        }
        let (s, invertible) = study_invertibility(&tower, &a)?;
        if !invertible && s.is_zero() {
            Ok(None)
        } else {
            Ok(Some("constructed-singular matrix not detected".into()))
        }
    });
    r.property("s6-s7-membership", trials, |rng| {
        let r_dim = 1 + rng.choose(2);
        // Members.
        let a = rand_quaternion_matrix(rng, r_dim)?;
        let pa = psi(&a)?;
        if !study_membership(MembershipKind::PsiImage, &pa)? {
            return Ok(Some("psi image rejected".into()));
        }
        let gauss = Matrix::from_fn(r_dim, r_dim, Ring::Cyclotomic(4), |_, _| {
            match rand_scalar(rng, &ScalarRing::Cyclotomic(4)) {
                Scalar::Cyc(c) => Value::Cyc(c),
                _ => unreachable!(),
            }
        })?;
        let pg = phi(&gauss)?;
        if !study_membership(MembershipKind::PhiImage, &pg)? {
            return Ok(Some("phi image rejected".into()));
        }
        // Non-members: perturb one off-diagonal block entry.
        let mut bad = pa.clone();
        let v = bad.get(0, r_dim).clone();
        bad.set(0, r_dim, v.add(&Ring::Cyclotomic(4).one())?)?;
        if study_membership(MembershipKind::PsiImage, &bad)? {
            return Ok(Some("perturbed psi image accepted".into()));
        }
        let mut badg = pg.clone();
        let v = badg.get(0, r_dim).clone();
        badg.set(0, r_dim, v.add(&Ring::Rational.one())?)?;
        if study_membership(MembershipKind::PhiImage, &badg)? {
            return Ok(Some("perturbed phi image accepted".into()));
        }
        Ok(None)
    });
    r.property("sdet-centrality-and-power", trials, |rng| {
        let ctx = SdetContext::with_lower(
            fixtures::quaternion_tower(Ring::Rational)?,
            fixtures::quaternion_lower_tower(Ring::Rational)?,
        )?;
        let r_dim = 1 + rng.choose(2);
        let a = rand_tga_matrix(rng, ctx.basis.algebra(), &Span::Full, r_dim);
        if sdet_centrality(&ctx, &a)? && sdet_power(&ctx, &a)? {
            Ok(None)
        } else {
            Ok(Some(format!("centrality/power law fails at r={r_dim}")))
        }
    });
}

fn cayley_hamilton_fixture(idx: usize) -> Result<TowerBasis> {
    match idx {
        // H(Q) over span{1, i}.
        0 => fixtures::quaternion_tower(Ring::Rational),
        // Q(i)C4 over Q(i).
        1 => {
            let algebra =
                fixtures::group_algebra(fixtures::cyclic(4), Ring::Cyclotomic(4), "QiC4")?;
            coset_decompose(&algebra, Span::Full, &[0])
        }
        // Q(zeta_3)S3 over the span of the rotations.
        _ => s3_rot_tower(ScalarRing::Cyclotomic(3)),
    }
}

/// The Cayley-Hamilton-type theorem and the centrality of
/// characteristic-polynomial coefficients.
fn cayley_hamilton_suite(r: &mut Runner, trials: usize) {
    r.property("cayley-hamilton", trials, |rng| {
        let tower = cayley_hamilton_fixture(rng.choose(3))?;
        let a = rand_tga(rng, tower.algebra(), tower.domain());
        if cayley_hamilton_check(&tower, &a)? {
            Ok(None)
        } else {
            Ok(Some(format!("Phi_L(a)(a) != 0 for a={a}")))
        }
    });
    r.property("charpoly-coefficients-central", trials, |rng| {
        let tower = cayley_hamilton_fixture(rng.choose(3))?;
        let a = rand_tga(rng, tower.algebra(), tower.domain());
        for c in charpoly_regrep(&tower, &a)? {
            if !central_in_a(&tower, &c)? {
                return Ok(Some(format!("non-central coefficient for a={a}")));
            }
        }
        Ok(None)
    });
    r.property("charpoly-closed-form", 1, |_rng| {
        // 1 + 2i + 3j + 4k has characteristic polynomial x^2 - 2x + 30.
        let tower = quaternion_full_tower()?;
        let algebra = tower.algebra().clone();
        let a = fixtures::quaternion_element(&algebra, [1, 2, 3, 4])?;
        let coeffs = charpoly_regrep(&tower, &a)?;
        let expect = |v: i64| -> Result<Value> {
            Ok(Value::Tga(TgaElement::from_coords(
                algebra.clone(),
                Span::sub(vec![0, 1]),
                vec![(0, Value::Rat(Rational::from_integer(v)))],
            )?))
        };
        if coeffs.len() == 3
            && coeffs[0] == expect(30)?
            && coeffs[1] == expect(-2)?
            && coeffs[2].is_one()
            && cayley_hamilton_check(&tower, &a)?
        {
            Ok(None)
        } else {
            Ok(Some("closed-form charpoly differs".into()))
        }
    });
}

/// Commutant characterization: forward on random images, reverse by
/// solving the commutation equations.
fn commutant_suite(r: &mut Runner, trials: usize) {
    r.property("commutant-forward", trials, |rng| {
        let tower = match rng.below(2) {
            0 => quaternion_full_tower()?,
            _ => s3_rot_tower(ScalarRing::Rational)?,
        };
        let a = rand_tga(rng, tower.algebra(), tower.domain());
        let image = regrep_element(&tower, &a)?;
        match commutant_check(&tower, &image)? {
            (true, Some(w)) => {
                if regrep_element(&tower, &w)? == image {
                    Ok(None)
                } else {
                    Ok(Some(format!("witness does not reproduce image for a={a}")))
                }
            }
            other => Ok(Some(format!("forward direction failed: {other:?} for a={a}"))),
        }
    });
    r.property("commutant-j-commutation", trials, |rng| {
        // Images commute with every J(e_k) (the inclusion direction
        // stated directly).
        let tower = quaternion_full_tower()?;
        let a = rand_tga(rng, tower.algebra(), tower.domain());
        let image = regrep_element(&tower, &a)?;
        let image_in_a = image.map_entries(tower.domain_ring(), |v| match v {
            Value::Tga(t) => Ok(Value::Tga(tower.promote(t)?)),
            _ => unreachable!(),
        })?;
        for jk in j_matrices(&tower)? {
            if jk.mul(&image_in_a)? != image_in_a.mul(&jk)? {
                return Ok(Some(format!("J(e_k) does not commute with L(a) for a={a}")));
            }
        }
        Ok(None)
    });
    r.property("commutant-reverse", trials, |rng| {
        // Random solutions of the linear commutation system reconstruct
        // witnesses.
        let tower = quaternion_full_tower()?;
        let sols = commutant_solution_basis(&tower)?;
        if sols.is_empty() {
            return Ok(Some("empty solution space".into()));
        }
        let mut b = Matrix::zero(tower.rank(), tower.rank(), tower.sub_ring());
        for s in &sols {
            let c = Value::Tga(TgaElement::from_coords(
                tower.algebra().clone(),
                tower.sub_span(),
                vec![(0, Value::Rat(rand_rational(rng)))],
            )?);
            b = b.add(&s.scale(&c)?)?;
        }
        match commutant_check(&tower, &b)? {
            (true, Some(w)) => {
                if regrep_element(&tower, &w)? == b {
                    Ok(None)
                } else {
                    Ok(Some("reverse witness mismatch".into()))
                }
            }
            other => Ok(Some(format!("reverse direction failed: {other:?}"))),
        }
    });
    r.property("matrix-commutant", trials, |rng| {
        let tower = quaternion_full_tower()?;
        let r_dim = 1 + rng.choose(2);
        let a = rand_tga_matrix(rng, tower.algebra(), &Span::Full, r_dim);
        let image = regrep_matrix(&tower, &a)?;
        if !matrix_commutant_check(&tower, r_dim, &image)? {
            return Ok(Some("image rejected by matrix commutant".into()));
        }
        match matrix_commutant_witness(&tower, r_dim, &image)? {
            Some(w) if w == a => Ok(None),
            _ => Ok(Some("matrix witness mismatch".into())),
        }
    });
}

/// Dedekind's theorem on the bundled abelian groups.
fn dedekind_suite(r: &mut Runner) {
    let groups: Vec<crate::tga::FiniteGroupTable> = vec![
        fixtures::c2(),
        fixtures::cyclic(3),
        fixtures::cyclic(4),
        fixtures::klein(),
        fixtures::cyclic(6),
    ];
    let mut pass = 0;
    let mut failures = Vec::new();
    for g in &groups {
        match dedekind_factorize(g) {
            Ok(rep) if rep.product_ok => pass += 1,
            Ok(_) => failures.push(format!("product mismatch for {}", g.name())),
            Err(e) => failures.push(format!("error for {}: {e}", g.name())),
        }
    }
    r.results.push(PropertyResult {
        name: "dedekind-product".into(),
        pass,
        total: groups.len(),
        failures,
    });
}

/// The extension of Dedekind's theorem on (G, H) pairs.
fn extension_suite(r: &mut Runner) {
    let cases: Vec<(crate::tga::FiniteGroupTable, Vec<usize>, &str)> = vec![
        (fixtures::cyclic(4), vec![0, 2], "(C4, C2)"),
        (fixtures::s3(), vec![0, 1, 2], "(S3, <r>)"),
        (fixtures::d4(), vec![0, 1, 2, 3], "(D4, C4)"),
        (fixtures::q8(), vec![0, 1, 2, 3], "(Q8, <i>)"),
    ];
    let mut pass = 0;
    let mut failures = Vec::new();
    for (g, sub, label) in &cases {
        match extension_check(g, sub) {
            Ok(rep) if rep.product_ok => pass += 1,
            Ok(_) => failures.push(format!("product mismatch for {label}")),
            Err(e) => failures.push(format!("error for {label}: {e}")),
        }
    }
    r.results.push(PropertyResult {
        name: "extension-product".into(),
        pass,
        total: cases.len(),
        failures,
    });
    // Degree bookkeeping of the relative determinant coordinates is
    // validated inside theta_relative; surface it as its own line.
    let mut pass = 0;
    let mut failures = Vec::new();
    for (g, sub, label) in &cases {
        match theta_relative(g, sub) {
            Ok(_) => pass += 1,
            Err(e) => failures.push(format!("error for {label}: {e}")),
        }
    }
    r.results.push(PropertyResult {
        name: "theta-relative-degrees".into(),
        pass,
        total: cases.len(),
        failures,
    });
}

/// Frobenius factorization with the bundled irreducible representations.
fn frobenius_suite(r: &mut Runner) {
    let cases: Vec<(
        crate::tga::FiniteGroupTable,
        Vec<crate::groupdet::SuppliedRepresentation>,
        Vec<usize>,
        &str,
    )> = vec![
        (fixtures::s3(), fixtures::s3_irreps(), vec![0, 1, 2], "S3"),
        (fixtures::q8(), fixtures::q8_irreps(), vec![0, 1, 2, 3], "Q8"),
    ];
    let mut pass = 0;
    let mut failures = Vec::new();
    for (g, irreps, _, label) in &cases {
        match frobenius_verify(g, irreps) {
            Ok(rep) if rep.product_ok => pass += 1,
            Ok(_) => failures.push(format!("product mismatch for {label}")),
            Err(e) => failures.push(format!("error for {label}: {e}")),
        }
    }
    r.results.push(PropertyResult {
        name: "frobenius-product".into(),
        pass,
        total: cases.len(),
        failures,
    });
    let mut pass = 0;
    let mut failures = Vec::new();
    for (g, irreps, sub, label) in &cases {
        match degree_bound_check(g, sub, irreps) {
            Ok(true) => pass += 1,
            Ok(false) => failures.push(format!("degree bound violated for {label}")),
            Err(e) => failures.push(format!("error for {label}: {e}")),
        }
    }
    r.results.push(PropertyResult {
        name: "degree-bound".into(),
        pass,
        total: cases.len(),
        failures,
    });
    let mut pass = 0;
    let mut failures = Vec::new();
    for (g, irreps, sub, label) in &cases {
        match products_agree(g, sub, irreps) {
            Ok(true) => pass += 1,
            Ok(false) => failures.push(format!("factorizations disagree for {label}")),
            Err(e) => failures.push(format!("error for {label}: {e}")),
        }
    }
    r.results.push(PropertyResult {
        name: "factorizations-agree".into(),
        pass,
        total: cases.len(),
        failures,
    });
    let mut pass = 0;
    let mut failures = Vec::new();
    for (g, irreps, _, label) in &cases {
        match regular_decomposition_check(g, irreps) {
            Ok(true) => pass += 1,
            Ok(false) => failures.push(format!("regular character mismatch for {label}")),
            Err(e) => failures.push(format!("error for {label}: {e}")),
        }
    }
    r.results.push(PropertyResult {
        name: "regular-decomposition".into(),
        pass,
        total: cases.len(),
        failures,
    });
}

/// Group determinant structure: route agreement, renumbering invariance,
/// character table sanity.
fn groupdet_suite(r: &mut Runner, trials: usize) {
    let groups = || -> Vec<crate::tga::FiniteGroupTable> {
        vec![
            fixtures::trivial(),
            fixtures::c2(),
            fixtures::cyclic(3),
            fixtures::cyclic(4),
            fixtures::klein(),
            fixtures::cyclic(6),
            fixtures::s3(),
            fixtures::d4(),
            fixtures::q8(),
        ]
    };
    {
        // Route agreement and homogeneity are validated inside
        // group_determinant for every bundled group.
        let gs = groups();
        let mut pass = 0;
        let mut failures = Vec::new();
        for g in &gs {
            match group_determinant(g) {
                Ok(_) => pass += 1,
                Err(e) => failures.push(format!("{}: {e}", g.name())),
            }
        }
        r.results.push(PropertyResult {
            name: "theta-routes-agree".into(),
            pass,
            total: gs.len(),
            failures,
        });
    }
    r.property("theta-renumbering-invariant", trials.clamp(1, 20), |rng| {
        let gs = groups();
        // Only the small groups: relabeling recomputes Theta.
        let g = &gs[rng.choose(6)];
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.choose(i + 1));
        }
        let relabeled = relabel_group(g, &perm)?;
        let theta1 = group_determinant(g)?;
        let theta2 = group_determinant(&relabeled)?;
        let vars1 = group_vars(g);
        let vars2 = group_vars(&relabeled);
        let position: Vec<usize> = vars2
            .names()
            .iter()
            .map(|n| vars1.index_of(n).expect("same names"))
            .collect();
        if theta2.reorder_vars(vars1.clone(), &position)? == theta1 {
            Ok(None)
        } else {
            Ok(Some(format!("renumbering changed Theta({})", g.name())))
        }
    });
    r.property("character-tables", 1, |_rng| {
        for g in [
            fixtures::c2(),
            fixtures::cyclic(3),
            fixtures::cyclic(4),
            fixtures::klein(),
            fixtures::cyclic(6),
        ] {
            let t = abelian_characters(&g)?;
            if t.chars.len() != g.order() {
                return Ok(Some(format!("wrong character count for {}", g.name())));
            }
        }
        Ok(None)
    });
}
