//! Exact arithmetic in the cyclotomic field ℚ(ζ_N).
//!
//! Elements are stored as coefficient vectors in the power basis
//! `1, ζ, …, ζ^{φ(N)−1}` reduced modulo the N-th cyclotomic polynomial, so two
//! numbers are equal exactly when their coefficient vectors are.
//!
//! Every field carries a table of `x^k mod Φ_N` for `0 ≤ k < N`. Because
//! `Φ_N | x^N − 1`, any polynomial can first be folded modulo `x^N − 1` (a
//! cyclic shift) and then reduced with that table. [`CycAccumulator`] exploits
//! this to sum many products and root-of-unity multiples before a single
//! reduction.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
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

/// Integer polynomial multiplication, coefficients low to high.
pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic integer polynomial; panics if the remainder is nonzero.
fn poly_exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    let mut rem = num.to_vec();
    let qlen = num.len() - dd;
    let mut quot = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, d) in den.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "inexact polynomial division");
    quot
}

/// The N-th cyclotomic polynomial Φ_N, coefficients from the constant term up.
///
/// Built by dividing `x^N − 1` by Φ_d for every proper divisor `d` of `N`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomial needs N >= 1");
    let divs = divisors(n);
    let mut table: Vec<(u64, Vec<i64>)> = Vec::with_capacity(divs.len());
    for &d in &divs {
        let mut poly = vec![0i64; d as usize + 1];
        poly[0] = -1;
        poly[d as usize] = 1;
        for (e, phi_e) in &table {
            if d % e == 0 {
                poly = poly_exact_div_monic(&poly, phi_e);
            }
        }
        table.push((d, poly));
    }
    table.pop().expect("n has at least one divisor").1
}

/// Shared per-conductor data: Φ_N and the reduction table for `x^k`, `k < N`.
#[derive(Debug)]
pub struct CyclotomicField {
    conductor: u64,
    degree: usize,
    modulus: Vec<i64>,
    /// Sparse `x^k mod Φ_N` for `k` in `0..N`.
    powers: Vec<Vec<(usize, i64)>>,
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
    }
}

impl Eq for CyclotomicField {}

impl CyclotomicField {
    pub fn new(conductor: u64) -> Arc<Self> {
        assert!(conductor >= 1, "conductor must be positive");
        let modulus = cyclotomic_polynomial(conductor);
        let degree = modulus.len() - 1;
        let n = conductor as usize;
        let mut powers = Vec::with_capacity(n);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(
                cur.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(j, &c)| (j, c))
                    .collect(),
            );
            // multiply by x and reduce with the monic modulus
            let top = cur[degree - 1];
            for j in (1..degree).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..degree {
                    cur[j] -= top * modulus[j];
                }
            }
        }
        Arc::new(CyclotomicField {
            conductor,
            degree,
            modulus,
            powers,
        })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// φ(N), the length of every coefficient vector.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    /// Reduces a polynomial given modulo `x^N − 1` (length exactly N).
    fn reduce_cyclic(&self, cyclic: Vec<Rational>) -> Vec<Rational> {
        debug_assert_eq!(cyclic.len(), self.conductor as usize);
        let mut it = cyclic.into_iter();
        let mut out: Vec<Rational> = it.by_ref().take(self.degree).collect();
        for (k, c) in it.enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(j, m) in &self.powers[self.degree + k] {
                out[j] += &c.mul_int(m);
            }
        }
        out
    }
}

/// An element of ℚ(ζ_N).
#[derive(Clone)]
pub struct CycNumber {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl CycNumber {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        CycNumber {
            field: field.clone(),
            coeffs: vec![Rational::ZERO; field.degree],
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_rational(field, Rational::ONE)
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, r: Rational) -> Self {
        let mut x = Self::zero(field);
        x.coeffs[0] = r;
        x
    }

    pub fn from_int(field: &Arc<CyclotomicField>, n: i64) -> Self {
        Self::from_rational(field, Rational::from_int(n))
    }

    /// ζ_N^k for any integer `k`.
    pub fn root_of_unity(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let n = field.conductor as i64;
        let idx = k.rem_euclid(n) as usize;
        let mut coeffs = vec![Rational::ZERO; field.degree];
        for &(j, c) in &field.powers[idx] {
            coeffs[j] = Rational::from_int(c);
        }
        CycNumber {
            field: field.clone(),
            coeffs,
        }
    }

    /// Builds the element `Σ poly[j] ζ^j` for a polynomial of any length.
    pub fn from_polynomial(field: &Arc<CyclotomicField>, poly: &[Rational]) -> Self {
        let mut acc = CycAccumulator::new(field);
        for (j, c) in poly.iter().enumerate() {
            acc.add_rational_root(c, j as i64);
        }
        acc.finish()
    }

    /// Wraps an already reduced coefficient vector.
    pub fn from_reduced(field: &Arc<CyclotomicField>, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != field.degree {
            return Err(Error::Dimension(format!(
                "expected {} coefficients for conductor {}, got {}",
                field.degree,
                field.conductor,
                coeffs.len()
            )));
        }
        Ok(CycNumber {
            field: field.clone(),
            coeffs,
        })
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor
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

    /// The value as a rational, if it lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..]
            .iter()
            .all(Rational::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn check(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field.conductor == other.field.conductor
        {
            Ok(())
        } else {
            Err(Error::ConductorMismatch(
                self.field.conductor,
                other.field.conductor,
            ))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycNumber {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycNumber {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if let Some(r) = self.as_rational() {
            return Ok(other.scale(r));
        }
        if let Some(r) = other.as_rational() {
            return Ok(self.scale(r));
        }
        let mut acc = CycAccumulator::new(&self.field);
        acc.add_product(self, other);
        Ok(acc.finish())
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let inv = other.inv()?;
        self.try_mul(&inv)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// `self · ζ^k`.
    pub fn mul_root(&self, k: i64) -> Self {
        let mut acc = CycAccumulator::new(&self.field);
        acc.add_shifted(self, k);
        acc.finish()
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on
    /// (representative polynomial, Φ_N).
    pub fn inv(&self) -> Result<Self> {
        if let Some(r) = self.as_rational() {
            let inv = r.inv().ok_or(Error::DivisionByZero)?;
            return Ok(Self::from_rational(&self.field, inv));
        }
        let mut nonzero = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        if let (Some((j, c)), None) = (nonzero.next(), nonzero.next()) {
            // c ζ^j
            let inv = Self::from_rational(&self.field, c.inv().expect("nonzero"));
            return Ok(inv.mul_root(-(j as i64)));
        }
        let a: Vec<Rational> = self.coeffs.clone();
        let m: Vec<Rational> = self
            .field
            .modulus
            .iter()
            .map(|&c| Rational::from_int(c))
            .collect();
        let s = poly::inverse_mod(&a, &m).ok_or(Error::DivisionByZero)?;
        Ok(Self::from_polynomial(&self.field, &s))
    }

    /// Applies the automorphism ζ ↦ ζ^k (`gcd(k, N) = 1`).
    pub fn galois(&self, k: i64) -> Self {
        let n = self.field.conductor as i64;
        let mut acc = CycAccumulator::new(&self.field);
        for (j, c) in self.coeffs.iter().enumerate() {
            acc.add_rational_root(c, (j as i64 * k).rem_euclid(n));
        }
        acc.finish()
    }

    /// Complex conjugation, ζ ↦ ζ^{-1}.
    pub fn conjugate(&self) -> Self {
        self.galois(-1)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// If `self = ζ_N^k`, returns `k` in `0..N`.
    pub fn root_exponent(&self) -> Option<u64> {
        (0..self.field.conductor)
            .find(|&k| *self == Self::root_of_unity(&self.field, k as i64))
    }

    /// Display-only complex approximation. Never used for comparisons.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.field.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64();
            let theta = 2.0 * std::f64::consts::PI * j as f64 / n;
            re += v * theta.cos();
            im += v * theta.sin();
        }
        (re, im)
    }

    /// Float rendering such as `0.5+0.866i`, for human output.
    pub fn approx_string(&self) -> String {
        let (re, im) = self.to_complex();
        let clean = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
        let (re, im) = (clean(re), clean(im));
        if im == 0.0 {
            format!("{re:.6}")
        } else if re == 0.0 {
            format!("{im:.6}i")
        } else {
            format!("{re:.6}{im:+.6}i")
        }
    }
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coeffs == other.coeffs
    }
}

impl Eq for CycNumber {}

impl Hash for CycNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.conductor.hash(state);
        self.coeffs.hash(state);
    }
}

// Operator forms panic on conductor mismatch; the `try_*` methods report it.
impl Add for &CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        self.try_add(rhs).expect("cyclotomic addition")
    }
}

impl Sub for &CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        self.try_sub(rhs).expect("cyclotomic subtraction")
    }
}

impl Mul for &CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        self.try_mul(rhs).expect("cyclotomic multiplication")
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.field.conductor;
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.signum() < 0;
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match j {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    write!(f, "z{n}")?;
                    if j > 1 {
                        write!(f, "^{j}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

/// Sums of products and root-of-unity multiples, reduced once at the end.
pub struct CycAccumulator {
    field: Arc<CyclotomicField>,
    acc: Vec<Rational>,
}

impl CycAccumulator {
    pub fn new(field: &Arc<CyclotomicField>) -> Self {
        CycAccumulator {
            field: field.clone(),
            acc: vec![Rational::ZERO; field.conductor as usize],
        }
    }

    pub fn add(&mut self, x: &CycNumber) {
        for (slot, c) in self.acc.iter_mut().zip(&x.coeffs) {
            *slot += c;
        }
    }

    /// Adds `r · ζ^k`.
    pub fn add_rational_root(&mut self, r: &Rational, k: i64) {
        let n = self.field.conductor as i64;
        self.acc[k.rem_euclid(n) as usize] += r;
    }

    /// Adds `x · ζ^k`.
    pub fn add_shifted(&mut self, x: &CycNumber, k: i64) {
        let n = self.field.conductor as usize;
        let shift = k.rem_euclid(n as i64) as usize;
        for (j, c) in x.coeffs.iter().enumerate() {
            if !c.is_zero() {
                self.acc[(j + shift) % n] += c;
            }
        }
    }

    /// Adds `a · b`.
    pub fn add_product(&mut self, a: &CycNumber, b: &CycNumber) {
        let n = self.field.conductor as usize;
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    self.acc[(i + j) % n].add_mul(x, y);
                }
            }
        }
    }

    pub fn finish(self) -> CycNumber {
        let coeffs = self.field.reduce_cyclic(self.acc);
        CycNumber {
            field: self.field,
            coeffs,
        }
    }
}

/// ζ_N^k as a fresh field element; creates the field for conductor `n`.
pub fn root_of_unity(n: u64, k: i64) -> CycNumber {
    CycNumber::root_of_unity(&CyclotomicField::new(n), k)
}

mod poly {
    //! Dense polynomials over ℚ, coefficients low to high.

    use crate::rational::Rational;

    fn trim(p: &mut Vec<Rational>) {
        while p.last().is_some_and(Rational::is_zero) {
            p.pop();
        }
    }

    fn sub_scaled_shift(a: &mut Vec<Rational>, b: &[Rational], c: &Rational, shift: usize) {
        if a.len() < b.len() + shift {
            a.resize(b.len() + shift, Rational::ZERO);
        }
        for (j, x) in b.iter().enumerate() {
            a[j + shift] -= &(x * c);
        }
        trim(a);
    }

    fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead_inv = b[db].inv().expect("nonzero leading coefficient");
        let mut q = vec![Rational::ZERO; r.len().saturating_sub(db).max(1)];
        while r.len() > db && !r.is_empty() {
            let shift = r.len() - 1 - db;
            let c = &r[r.len() - 1] * &lead_inv;
            q[shift] = c.clone();
            sub_scaled_shift(&mut r, b, &c, shift);
        }
        trim(&mut q);
        (q, r)
    }

    fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Rational::ZERO; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j].add_mul(x, y);
            }
        }
        trim(&mut out);
        out
    }

    fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::ZERO; a.len().max(b.len())];
        for (j, x) in a.iter().enumerate() {
            out[j] += x;
        }
        for (j, x) in b.iter().enumerate() {
            out[j] -= x;
        }
        trim(&mut out);
        out
    }

    /// `s` with `s·a ≡ 1 (mod m)`, or `None` when `gcd(a, m) ≠ 1`.
    pub fn inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
        let mut r0 = m.to_vec();
        let mut r1 = a.to_vec();
        trim(&mut r0);
        trim(&mut r1);
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::ONE];
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1);
            let s2 = sub(&s0, &mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is the gcd; it must be a nonzero constant
        if r0.len() != 1 {
            return None;
        }
        let c = r0[0].inv()?;
        Some(s0.iter().map(|x| x * &c).collect())
    }
}

#[derive(Serialize, Deserialize)]
struct CycNumberJson {
    conductor: u64,
    coeffs: Vec<[String; 2]>,
}

impl Serialize for CycNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycNumberJson {
            conductor: self.field.conductor,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| [c.numer().to_string(), c.denom().to_string()])
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = CycNumberJson::deserialize(d)?;
        if raw.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let field = CyclotomicField::new(raw.conductor);
        let coeffs = raw
            .coeffs
            .iter()
            .map(|[n, den]| {
                let n: BigInt = n.parse().map_err(D::Error::custom)?;
                let den: BigInt = den.parse().map_err(D::Error::custom)?;
                if den == BigInt::from(0) {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok(Rational::from_bigints(n, den))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        CycNumber::from_reduced(&field, coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(n: u64) -> Arc<CyclotomicField> {
        CyclotomicField::new(n)
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn divisor_products_give_x_n_minus_one() {
        // Oracle: multiply Φ_d over all d | 4 and compare with x⁴ − 1.
        let prod = divisors(4)
            .into_iter()
            .fold(vec![1i64], |acc, d| poly_mul(&acc, &cyclotomic_polynomial(d)));
        assert_eq!(prod, vec![-1, 0, 0, 0, 1]);
        let prod6 = divisors(6)
            .into_iter()
            .fold(vec![1i64], |acc, d| poly_mul(&acc, &cyclotomic_polynomial(d)));
        assert_eq!(prod6, vec![-1, 0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn phi_matches_degree() {
        for n in 1..=64 {
            assert_eq!(
                cyclotomic_polynomial(n).len() as u64 - 1,
                euler_phi(n),
                "N = {n}"
            );
        }
    }

    #[test]
    fn roots_of_unity() {
        let i = root_of_unity(4, 1);
        assert_eq!(i.coeffs(), &[Rational::ZERO, Rational::ONE]);
        let minus_one = root_of_unity(2, 1);
        assert_eq!(minus_one, CycNumber::from_int(minus_one.field(), -1));
        let f3 = field(3);
        let sum = &(&CycNumber::one(&f3) + &CycNumber::root_of_unity(&f3, 1))
            + &CycNumber::root_of_unity(&f3, 2);
        assert!(sum.is_zero());
        assert!(CycNumber::root_of_unity(&f3, 0).is_one());
        assert_eq!(
            CycNumber::root_of_unity(&f3, -1),
            CycNumber::root_of_unity(&f3, 2)
        );
    }

    #[test]
    fn basic_field_ops() {
        let f4 = field(4);
        let i = CycNumber::root_of_unity(&f4, 1);
        assert_eq!(&i * &i, CycNumber::from_int(&f4, -1));
        let one_plus_i = &CycNumber::one(&f4) + &i;
        assert!(one_plus_i.try_div(&one_plus_i).unwrap().is_one());

        let f3 = field(3);
        let x = &CycNumber::one(&f3) + &CycNumber::root_of_unity(&f3, 1);
        let inv = x.inv().unwrap();
        // 1 + ζ₃ = −ζ₃², so its inverse is −ζ₃
        assert_eq!(inv, -&CycNumber::root_of_unity(&f3, 1));
        assert!((&inv * &x).is_one());
    }

    #[test]
    fn division_errors() {
        let f5 = field(5);
        assert_eq!(
            CycNumber::one(&f5).try_div(&CycNumber::zero(&f5)),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            CycNumber::one(&f5).try_add(&CycNumber::one(&field(3))),
            Err(Error::ConductorMismatch(5, 3))
        );
    }

    #[test]
    fn conjugation() {
        let f4 = field(4);
        assert_eq!(
            CycNumber::root_of_unity(&f4, 1).conjugate(),
            CycNumber::root_of_unity(&f4, 3)
        );
        let half = CycNumber::from_rational(&f4, Rational::new(1, 2));
        assert_eq!(half.conjugate(), half);
        // ζ₅ + ζ₅⁴ is real. Oracle: apply ζ ↦ ζ⁴ to each monomial separately.
        let f5 = field(5);
        let x = &CycNumber::root_of_unity(&f5, 1) + &CycNumber::root_of_unity(&f5, 4);
        let by_hand = &CycNumber::root_of_unity(&f5, 4) + &CycNumber::root_of_unity(&f5, 16);
        assert_eq!(x.conjugate(), by_hand);
        assert_eq!(x.conjugate(), x);
    }

    #[test]
    fn root_exponent_lookup() {
        let f12 = field(12);
        for k in 0..12 {
            assert_eq!(CycNumber::root_of_unity(&f12, k).root_exponent(), Some(k as u64));
        }
        assert_eq!(CycNumber::from_int(&f12, 2).root_exponent(), None);
    }

    #[test]
    fn display_and_approx() {
        let f4 = field(4);
        let x = &CycNumber::from_rational(&f4, Rational::new(1, 2))
            - &CycNumber::root_of_unity(&f4, 1);
        assert_eq!(x.to_string(), "1/2 - z4");
        assert_eq!(x.approx_string(), "0.500000-1.000000i");
        assert_eq!(CycNumber::zero(&f4).to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let f4 = field(4);
        let x = &CycNumber::from_rational(&f4, Rational::new(-3, 2))
            + &CycNumber::root_of_unity(&f4, 1);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"conductor":4,"coeffs":[["-3","2"],["1","1"]]}"#);
        let back: CycNumber = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<CycNumber>(r#"{"conductor":4,"coeffs":[["1","1"]]}"#)
            .is_err());
    }
}
