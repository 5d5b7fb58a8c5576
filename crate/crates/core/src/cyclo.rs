//! Exact arithmetic in the cyclotomic field Q(q), q a primitive N-th root of unity.
//!
//! Elements are stored as `num / den` with `num` an integer vector in the basis
//! `1, q, ..., q^(phi(N)-1)` of `Q[q] / (Phi_N)`. The representation is kept reduced
//! (`den > 0`, content of `num` coprime to `den`), so equality is structural.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::interval;

/// Environment variable overriding the starting precision (bits) of the sign oracle.
pub const SIGN_PRECISION_ENV: &str = "UQSL2_SIGN_PRECISION";

#[derive(Debug)]
pub struct FieldData {
    n: u32,
    phi: usize,
    /// `q^k` reduced modulo `Phi_N`, for `0 <= k < max(N, 2 phi)`.
    powers: Vec<Vec<BigInt>>,
}

/// Handle to the field Q(q) for a fixed N. Cheap to clone; one shared instance per N.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.0.n)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.n == other.0.n
    }
}
impl Eq for Field {}

fn poly_divexact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic
    let mut rem = num.to_vec();
    let dl = den.len();
    let mut quot = vec![BigInt::zero(); num.len() + 1 - dl];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dl - 1].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(|r| r.is_zero()));
    quot
}

/// Integer coefficients (low degree first) of the N-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_divexact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

impl Field {
    pub fn new(n: u32) -> Result<Field> {
        if n == 0 {
            return Err(Error::UnsupportedN(n, "N must be positive"));
        }
        static CACHE: OnceLock<Mutex<HashMap<u32, Field>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("field cache poisoned");
        if let Some(f) = guard.get(&n) {
            return Ok(f.clone());
        }
        let modulus = cyclotomic_polynomial(n);
        let phi = modulus.len() - 1;
        let count = (n as usize).max(2 * phi);
        let mut powers = Vec::with_capacity(count);
        let mut cur = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by q: shift, then fold the q^phi term
            let top = cur[phi - 1].clone();
            let mut next = vec![BigInt::zero(); phi];
            next[1..phi].clone_from_slice(&cur[..(phi - 1)]);
            if !top.is_zero() {
                for (j, m) in modulus.iter().take(phi).enumerate() {
                    next[j] -= &top * m;
                }
            }
            cur = next;
        }
        let f = Field(Arc::new(FieldData { n, phi, powers }));
        guard.insert(n, f.clone());
        Ok(f)
    }

    pub fn n(&self) -> u32 {
        self.0.n
    }

    /// Degree of Q(q) over Q, Euler's phi(N).
    pub fn degree(&self) -> usize {
        self.0.phi
    }

    pub fn zero(&self) -> CycloNum {
        CycloNum { field: self.clone(), num: vec![BigInt::zero(); self.0.phi], den: BigInt::one() }
    }

    pub fn one(&self) -> CycloNum {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> CycloNum {
        let mut x = self.zero();
        x.num[0] = BigInt::from(v);
        x
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<CycloNum> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut x = self.zero();
        x.num[0] = BigInt::from(num);
        x.den = BigInt::from(den);
        x.normalize();
        Ok(x)
    }

    pub fn from_rational(&self, r: &BigRational) -> CycloNum {
        let mut x = self.zero();
        x.num[0] = r.numer().clone();
        x.den = r.denom().clone();
        x.normalize();
        x
    }

    /// Builds `sum_j coeffs[j] q^j`; the slice may be longer than phi(N).
    pub fn from_coeffs(&self, coeffs: &[BigRational]) -> CycloNum {
        let mut acc = self.zero();
        for (j, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += &(self.q_pow(j as i64) * &self.from_rational(c));
            }
        }
        acc
    }

    /// `q^e` for any integer exponent.
    pub fn q_pow(&self, e: i64) -> CycloNum {
        let k = e.rem_euclid(self.0.n as i64) as usize;
        CycloNum { field: self.clone(), num: self.0.powers[k].clone(), den: BigInt::one() }
    }

    pub fn q(&self) -> CycloNum {
        self.q_pow(1)
    }

    /// `q - q^{-1}`, a purely imaginary element used to split Q(q) over its real subfield.
    pub fn theta(&self) -> CycloNum {
        self.q() - self.q_pow(-1)
    }

    /// The square root `q^((N+1)/2)` of q.
    pub fn sqrt_q(&self) -> Result<CycloNum> {
        let n = self.0.n;
        if n.is_multiple_of(2) {
            return Err(Error::UnsupportedN(n, "q has no square root among powers of q for even N"));
        }
        Ok(self.q_pow((n as i64 + 1) / 2))
    }

    /// Quantum integer `[m] = (q^m - q^{-m}) / (q - q^{-1})`.
    pub fn qint(&self, m: i64) -> CycloNum {
        let mut acc = self.zero();
        // [m] = q^{m-1} + q^{m-3} + ... + q^{1-m}
        if m >= 0 {
            for j in 0..m {
                acc += &self.q_pow(m - 1 - 2 * j);
            }
        } else {
            acc = -self.qint(-m);
        }
        acc
    }

    /// Parses the canonical text form, e.g. `-1/2 + 3*q` or `q^2 - 1`.
    pub fn parse(&self, s: &str) -> Result<CycloNum> {
        let err = || Error::Parse(format!("cannot parse cyclotomic number from {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut acc = self.zero();
        for t in terms {
            let (sign, body) = match t.as_bytes()[0] {
                b'-' => (-1, &t[1..]),
                b'+' => (1, &t[1..]),
                _ => (1, t),
            };
            let (coef, power) = match body.find('q') {
                None => (body, 0i64),
                Some(pos) => {
                    let c = body[..pos].trim_end_matches('*');
                    let rest = &body[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').ok_or_else(err)?.parse::<i64>().map_err(|_| err())?
                    };
                    (if c.is_empty() { "1" } else { c }, e)
                }
            };
            let r: BigRational = if let Some((a, b)) = coef.split_once('/') {
                let a: BigInt = a.parse().map_err(|_| err())?;
                let b: BigInt = b.parse().map_err(|_| err())?;
                if b.is_zero() {
                    return Err(err());
                }
                BigRational::new(a, b)
            } else {
                BigRational::from_integer(coef.parse().map_err(|_| err())?)
            };
            let r = if sign < 0 { -r } else { r };
            acc += &(self.from_rational(&r) * self.q_pow(power));
        }
        Ok(acc)
    }
}

/// Choice of complex embedding `q -> exp(2 pi i k / N)` and starting bit precision
/// for certified sign evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct EmbeddingChoice {
    pub k: u32,
    pub precision: u32,
}

impl Default for EmbeddingChoice {
    fn default() -> Self {
        let precision = std::env::var(SIGN_PRECISION_ENV)
            .ok()
            .and_then(|v| v.parse::<u32>().ok())
            .filter(|&p| p >= 8)
            .unwrap_or(64);
        EmbeddingChoice { k: 1, precision }
    }
}

impl EmbeddingChoice {
    pub fn new(k: u32, n: u32) -> Result<Self> {
        if k == 0 || k.gcd(&n) != 1 {
            return Err(Error::BadEmbedding { k, n });
        }
        Ok(EmbeddingChoice { k, ..Default::default() })
    }
}

#[derive(Clone)]
pub struct CycloNum {
    field: Field,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.den == other.den && self.num == other.num
    }
}
impl Eq for CycloNum {}

impl std::hash::Hash for CycloNum {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.n().hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl CycloNum {
    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|c| c.is_zero())
    }

    /// Rational coordinates in the power basis `1, q, ..., q^(phi-1)`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect()
    }

    pub fn conj(&self) -> CycloNum {
        let f = &self.field;
        let n = f.n() as usize;
        let mut out = vec![BigInt::zero(); f.degree()];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let img = &f.0.powers[(n - j % n) % n];
            for (o, p) in out.iter_mut().zip(img) {
                *o += c * p;
            }
        }
        let mut x = CycloNum { field: f.clone(), num: out, den: self.den.clone() };
        x.normalize();
        x
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Real part `(x + conj x) / 2`.
    pub fn re(&self) -> CycloNum {
        let mut s = self + &self.conj();
        s.den *= 2;
        s.normalize();
        s
    }

    /// The real number `(x - conj x) / (2 theta)` with `theta = q - q^{-1}`, so that
    /// `x = re(x) + theta * im_theta(x)`.
    pub fn im_theta(&self) -> CycloNum {
        let d = self - &self.conj();
        if d.is_zero() {
            return d;
        }
        let two_theta = &self.field.theta() * &self.field.from_int(2);
        d.div(&two_theta).expect("theta is nonzero")
    }

    pub fn inv(&self) -> Result<CycloNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let phi = self.field.degree();
        if phi == 1 {
            let mut x = self.field.zero();
            x.num[0] = self.den.clone();
            x.den = self.num[0].clone();
            x.normalize();
            return Ok(x);
        }
        // Solve M y = e_0 where column j of M is (num * q^j) in the power basis.
        let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); phi + 1]; phi];
        let numer = CycloNum { field: self.field.clone(), num: self.num.clone(), den: BigInt::one() };
        for j in 0..phi {
            let col = &numer * &self.field.q_pow(j as i64);
            for i in 0..phi {
                m[i][j] = BigRational::from_integer(col.num[i].clone());
            }
        }
        m[0][phi] = BigRational::one();
        for c in 0..phi {
            let p = (c..phi).find(|&r| !m[r][c].is_zero()).ok_or(Error::DivisionByZero)?;
            m.swap(c, p);
            let pv = m[c][c].clone();
            for v in m[c].iter_mut() {
                *v /= &pv;
            }
            for r in 0..phi {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    for k in c..=phi {
                        let t = &f * &m[c][k];
                        m[r][k] -= t;
                    }
                }
            }
        }
        let sol: Vec<BigRational> = m.iter().map(|row| row[phi].clone()).collect();
        // y = sol, and x^{-1} = den * y
        let mut y = self.field.from_coeffs(&sol);
        for c in &mut y.num {
            *c *= &self.den;
        }
        y.normalize();
        Ok(y)
    }

    pub fn div(&self, other: &CycloNum) -> Result<CycloNum> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<CycloNum> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field.one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Exact sign of a real element under the embedding `q -> exp(2 pi i k / N)`.
    pub fn sign_real(&self, e: &EmbeddingChoice) -> Result<i8> {
        if !self.is_real() {
            return Err(Error::NotReal);
        }
        if self.is_zero() {
            return Ok(0);
        }
        let n = self.field.n();
        if e.k.gcd(&n) != 1 {
            return Err(Error::BadEmbedding { k: e.k, n });
        }
        // A real element equals its real part, sum_j c_j cos(2 pi k j / N).
        let mut prec = e.precision.max(8);
        loop {
            if let Some(s) = interval::sign_of_cos_sum(&self.num, e.k, n, prec) {
                return Ok(s);
            }
            prec = prec.checked_mul(2).expect("sign refinement overflowed");
        }
    }

    /// Floating-point image under `q -> exp(2 pi i k / N)`; for diagnostics and test oracles only.
    pub fn to_complex(&self, k: u32) -> (f64, f64) {
        let n = self.field.n() as f64;
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.num.iter().enumerate() {
            let a = 2.0 * std::f64::consts::PI * (k as f64) * (j as f64) / n;
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            re += c * a.cos();
            im += c * a.sin();
        }
        (re, im)
    }

    fn add_scaled(&self, other: &CycloNum, sign: i8) -> CycloNum {
        debug_assert!(self.field == other.field, "mixing different cyclotomic fields");
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if sign > 0 { other.clone() } else { -other.clone() };
        }
        let (num, den) = if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if sign > 0 { a + b } else { a - b })
                .collect();
            (num, self.den.clone())
        } else {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let x = a * &other.den;
                    let y = b * &self.den;
                    if sign > 0 {
                        x + y
                    } else {
                        x - y
                    }
                })
                .collect();
            (num, &self.den * &other.den)
        };
        let mut r = CycloNum { field: self.field.clone(), num, den };
        r.normalize();
        r
    }

    fn mul_impl(&self, other: &CycloNum) -> CycloNum {
        debug_assert!(self.field == other.field, "mixing different cyclotomic fields");
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return f.zero();
        }
        let phi = f.degree();
        if phi == 1 {
            let mut r = f.zero();
            r.num[0] = &self.num[0] * &other.num[0];
            r.den = &self.den * &other.den;
            r.normalize();
            return r;
        }
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<BigInt> = prod[..phi].to_vec();
        for (k, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&f.0.powers[k]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        let mut r = CycloNum { field: f.clone(), num: out, den: &self.den * &other.den };
        r.normalize();
        r
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = BigRational::new(c.clone(), self.den.clone());
            let neg = r.is_negative();
            let a = r.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let coef = if a.is_integer() { a.numer().to_string() } else { format!("{}/{}", a.numer(), a.denom()) };
            match (j, a.is_one()) {
                (0, _) => write!(f, "{coef}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{coef}*q")?,
                (_, true) => write!(f, "q^{j}")?,
                (_, false) => write!(f, "{coef}*q^{j}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&CycloNum> for &CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: &CycloNum) -> CycloNum {
                $body(self, rhs)
            }
        }
        impl $tr<CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: CycloNum) -> CycloNum {
                $body(&self, &rhs)
            }
        }
        impl $tr<&CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: &CycloNum) -> CycloNum {
                $body(&self, rhs)
            }
        }
        impl $tr<CycloNum> for &CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: CycloNum) -> CycloNum {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &CycloNum, b: &CycloNum| a.add_scaled(b, 1));
binop!(Sub, sub, |a: &CycloNum, b: &CycloNum| a.add_scaled(b, -1));
binop!(Mul, mul, |a: &CycloNum, b: &CycloNum| a.mul_impl(b));

impl AddAssign<&CycloNum> for CycloNum {
    fn add_assign(&mut self, rhs: &CycloNum) {
        *self = self.add_scaled(rhs, 1);
    }
}
impl SubAssign<&CycloNum> for CycloNum {
    fn sub_assign(&mut self, rhs: &CycloNum) {
        *self = self.add_scaled(rhs, -1);
    }
}
impl MulAssign<&CycloNum> for CycloNum {
    fn mul_assign(&mut self, rhs: &CycloNum) {
        *self = self.mul_impl(rhs);
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(mut self) -> CycloNum {
        for c in &mut self.num {
            *c = -&*c;
        }
        self
    }
}
impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::new(3).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        let show = |n| cyclotomic_polynomial(n).iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        assert_eq!(show(3), "1,1,1");
        assert_eq!(show(4), "1,0,1");
        assert_eq!(show(6), "1,-1,1");
        assert_eq!(show(9), "1,0,0,1,0,0,1");
        assert_eq!(cyclotomic_polynomial(15).len(), 9);
    }

    #[test]
    fn phi_three_reduction() {
        let f = f3();
        let q = f.q();
        assert_eq!(&q * &q, f.parse("-1 - q").unwrap());
        assert_eq!(&q + &(&q * &q), f.from_int(-1));
    }

    #[test]
    fn conjugation_examples() {
        let f = f3();
        assert_eq!(f.q().conj(), f.q_pow(2));
        let x = f.parse("3 + 2*q").unwrap();
        assert_eq!(x.conj(), f.parse("1 - 2*q").unwrap());
        let r = f.from_ratio(7, 3).unwrap();
        assert_eq!(r.conj(), r);
    }

    #[test]
    fn sqrt_q_examples() {
        let f = f3();
        assert_eq!(f.sqrt_q().unwrap(), f.q_pow(2));
        assert_eq!(f.sqrt_q().unwrap().inv().unwrap(), f.q());
        let f5 = Field::new(5).unwrap();
        assert_eq!(f5.sqrt_q().unwrap(), f5.q_pow(3));
        assert!(matches!(Field::new(4).unwrap().sqrt_q(), Err(Error::UnsupportedN(4, _))));
    }

    #[test]
    fn inverse_of_theta_matches_numeric_value() {
        let f = f3();
        let t = f.theta().inv().unwrap();
        // 1/(q - q^-1) = 1/(i sqrt 3) = -i/sqrt 3
        let (re, im) = t.to_complex(1);
        assert!(re.abs() < 1e-12);
        assert!((im + 1.0 / 3f64.sqrt()).abs() < 1e-12);
        assert!(f.zero().inv().is_err());
    }

    #[test]
    fn sign_examples() {
        let f = f3();
        let e = EmbeddingChoice::default();
        assert_eq!(f.zero().sign_real(&e).unwrap(), 0);
        assert_eq!((f.q() + f.q_pow(2)).sign_real(&e).unwrap(), -1);
        let d = f.q() - f.q_pow(2);
        let sq = &d * &d;
        assert_eq!(sq, f.from_int(-3));
        assert_eq!(sq.sign_real(&e).unwrap(), -1);
        assert_eq!(f.q().sign_real(&e), Err(Error::NotReal));
    }

    #[test]
    fn sign_of_tiny_real_number_refines() {
        // 2 cos(2 pi / 7) - 1.2469796 is about 3.7e-8
        let f = Field::new(7).unwrap();
        let c = f.q() + f.q_pow(-1);
        let approx = f.from_ratio(12469796, 10000000).unwrap();
        let e = EmbeddingChoice { k: 1, precision: 8 };
        assert_eq!((&c - &approx).sign_real(&e).unwrap(), 1);
        let e3 = EmbeddingChoice { k: 3, precision: 8 };
        assert_eq!(c.sign_real(&e3).unwrap(), -1);
    }

    #[test]
    fn text_round_trip() {
        let f = Field::new(5).unwrap();
        for s in ["0", "1", "-1/2 + 3*q", "q^2", "-q - 2/7*q^3", "5/3 - q + q^2 - 4*q^3"] {
            let x = f.parse(s).unwrap();
            assert_eq!(x.to_string(), s);
        }
        assert_eq!(f.parse("q^5").unwrap(), f.one());
        assert_eq!(f.parse("q^-1").unwrap(), f.q_pow(4));
        assert!(f.parse("q^").is_err());
        assert!(f.parse("1/0").is_err());
    }

    #[test]
    fn quantum_integers() {
        let f = f3();
        assert_eq!(f.qint(1), f.one());
        assert_eq!(f.qint(2), f.from_int(-1));
        assert!(f.qint(3).is_zero());
        assert_eq!(f.qint(-2), f.one());
    }

    #[test]
    fn embedding_validation() {
        assert!(EmbeddingChoice::new(2, 3).is_ok());
        assert!(EmbeddingChoice::new(3, 3).is_err());
        assert!(EmbeddingChoice::new(5, 15).is_err());
    }
}
