//! Exact arithmetic in cyclotomic fields Q(zeta_n).
//!
//! Elements are vectors of rationals of length phi(n) representing
//! residues in Q[x]/(Phi_n(x)). Reduction modulo the n-th cyclotomic
//! polynomial keeps every element in canonical form, so equality is a
//! plain coefficient comparison. n = 1 embeds Q itself and n = 4 gives
//! the Gaussian rationals.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::rings::rational::Rational;

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Quotient of `num / den` for univariate rational polynomials with `den`
/// monic; remainder is returned alongside. Coefficients low to high.
fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false), "divisor must be monic");
    let dd = den.len() - 1;
    let mut rem: Vec<Rational> = num.to_vec();
    if rem.len() <= dd {
        return (vec![], rem);
    }
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![Rational::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let lead = rem[k + dd].clone();
        if lead.is_zero() {
            continue;
        }
        quot[k] = lead.clone();
        for (i, dc) in den.iter().enumerate() {
            rem[k + i] = &rem[k + i] - &(&lead * dc);
        }
    }
    while rem.len() > dd {
        rem.pop();
    }
    (quot, rem)
}

/// Phi_n as a rational coefficient vector, low to high: recursively
/// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
fn compute_cyclotomic_poly(n: u32) -> Vec<Rational> {
    if n == 1 {
        return vec![-&Rational::one(), Rational::one()];
    }
    let mut num = vec![Rational::zero(); n as usize + 1];
    num[0] = -&Rational::one();
    num[n as usize] = Rational::one();
    let mut result = num;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_poly(d);
            let (q, r) = poly_divmod(&result, &phi_d);
            debug_assert!(r.iter().all(Rational::is_zero));
            result = q;
        }
    }
    result
}

/// Cached Phi_n.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<Rational>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let computed = Arc::new(compute_cyclotomic_poly(n));
    cache
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| computed.clone())
        .clone()
}

/// An element of Q(zeta_n) in canonical reduced form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>, // length phi(n), coefficient of zeta^k at index k
}

impl Cyclotomic {
    /// Canonical representative of an arbitrary-length coefficient vector
    /// modulo Phi_n. Total on valid inputs.
    pub fn reduce(raw: Vec<Rational>, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Structure("conductor must be positive".into()));
        }
        let phi = euler_phi(n) as usize;
        let modulus = cyclotomic_poly(n);
        let (_, mut rem) = poly_divmod(&raw, &modulus);
        rem.resize(phi, Rational::zero());
        Ok(Cyclotomic { conductor: n, coeffs: rem })
    }

    pub fn zero(n: u32) -> Self {
        Cyclotomic {
            conductor: n,
            coeffs: vec![Rational::zero(); euler_phi(n) as usize],
        }
    }

    pub fn one(n: u32) -> Self {
        Self::from_rational(n, Rational::one())
    }

    pub fn from_rational(n: u32, r: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); euler_phi(n) as usize];
        coeffs[0] = r;
        Cyclotomic { conductor: n, coeffs }
    }

    /// zeta_n^k.
    pub fn zeta_power(n: u32, k: i64) -> Self {
        let k = k.rem_euclid(n as i64) as usize;
        let mut raw = vec![Rational::zero(); k + 1];
        raw[k] = Rational::one();
        Self::reduce(raw, n).expect("valid conductor")
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// Some(r) when the element lies in the rational subfield.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.conductor != other.conductor {
            return Err(Error::Structure(format!(
                "cyclotomic conductor mismatch: {} vs {}",
                self.conductor, other.conductor
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cyclotomic { conductor: self.conductor, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Cyclotomic { conductor: self.conductor, coeffs })
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut raw = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] = &raw[i + j] + &(a * b);
            }
        }
        Self::reduce(raw, self.conductor)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Cyclotomic::one(self.conductor);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplicative inverse, computed by solving the linear system of
    /// the multiplication-by-self matrix over Q. None for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi = self.coeffs.len();
        if phi == 1 {
            return self.coeffs[0]
                .inverse()
                .map(|r| Cyclotomic::from_rational(self.conductor, r));
        }
        // Columns: coefficients of self * zeta^j.
        let mut cols = Vec::with_capacity(phi);
        let mut current = self.clone();
        for _ in 0..phi {
            cols.push(current.coeffs.clone());
            current = current
                .mul(&Cyclotomic::zeta_power(self.conductor, 1))
                .expect("same conductor");
        }
        // Augmented system M v = e_0, Gaussian elimination over Q.
        let mut m = vec![vec![Rational::zero(); phi + 1]; phi];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..phi {
                m[i][j] = col[i].clone();
            }
        }
        m[0][phi] = Rational::one();
        for col in 0..phi {
            let pivot = (col..phi).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, pivot);
            let inv = m[col][col].inverse()?;
            for j in col..=phi {
                m[col][j] = &m[col][j] * &inv;
            }
            for r in 0..phi {
                if r != col && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for j in col..=phi {
                        m[r][j] = &m[r][j] - &(&factor * &m[col][j]);
                    }
                }
            }
        }
        let coeffs = (0..phi).map(|i| m[i][phi].clone()).collect();
        Some(Cyclotomic { conductor: self.conductor, coeffs })
    }

    /// The Galois automorphism zeta -> zeta^k, defined for gcd(k, n) = 1.
    pub fn galois(&self, k: u32) -> Result<Self> {
        let n = self.conductor;
        if n > 1 && num_integer::gcd(k % n, n) != 1 {
            return Err(Error::Precondition(format!(
                "galois exponent {k} not coprime to conductor {n}"
            )));
        }
        let mut acc = Cyclotomic::zero(n);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = Cyclotomic::zeta_power(n, (j as i64) * (k as i64)).scale(c);
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Complex conjugation, zeta -> zeta^{-1}.
    pub fn conj(&self) -> Self {
        if self.conductor <= 2 {
            return self.clone();
        }
        self.galois(self.conductor - 1).expect("n-1 coprime to n")
    }

    /// Embed into Q(zeta_m) for n | m via zeta_n = zeta_m^{m/n}.
    pub fn embed(&self, m: u32) -> Result<Self> {
        if !m.is_multiple_of(self.conductor) {
            return Err(Error::Structure(format!(
                "cannot embed conductor {} into {}",
                self.conductor, m
            )));
        }
        let step = (m / self.conductor) as i64;
        let mut acc = Cyclotomic::zero(m);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&Cyclotomic::zeta_power(m, j as i64 * step).scale(c))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Cyclotomic {
    /// Canonical text form: rational coefficients against ascending powers
    /// of the conductor's root, written with the symbol `ζ`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if k == 1 {
                    write!(f, "ζ")?;
                } else {
                    write!(f, "ζ^{k}")?;
                }
            }
        }
        Ok(())
    }
}
