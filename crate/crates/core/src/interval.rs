//! Fixed-point interval arithmetic used to certify signs of real cyclotomic numbers.
//!
//! An [`Interval`] at precision `p` stores integers `lo <= hi` and stands for the real
//! interval `[lo / 2^p, hi / 2^p]`. Every operation rounds outward, so the true value of
//! any expression built from these operations stays inside the computed interval.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigInt,
    pub hi: BigInt,
    pub prec: u32,
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

impl Interval {
    pub fn exact_int(v: impl Into<BigInt>, prec: u32) -> Self {
        let v: BigInt = v.into() << prec;
        Interval { lo: v.clone(), hi: v, prec }
    }

    /// Smallest interval of this precision containing `num / den` (`den > 0`).
    pub fn ratio(num: &BigInt, den: &BigInt, prec: u32) -> Self {
        let scaled = num << prec;
        Interval { lo: scaled.div_floor(den), hi: ceil_div(&scaled, den), prec }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi, prec: self.prec }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo, prec: self.prec }
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: -&self.hi, hi: -&self.lo, prec: self.prec }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let cands = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let min = cands.iter().min().unwrap();
        let max = cands.iter().max().unwrap();
        let unit = BigInt::one() << self.prec;
        Interval { lo: min.div_floor(&unit), hi: ceil_div(max, &unit), prec: self.prec }
    }

    pub fn scale(&self, k: &BigInt) -> Interval {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k.is_negative() {
            Interval { lo: b, hi: a, prec: self.prec }
        } else {
            Interval { lo: a, hi: b, prec: self.prec }
        }
    }

    pub fn div_int(&self, d: &BigInt) -> Interval {
        assert!(d.is_positive(), "interval division by non-positive integer");
        Interval { lo: self.lo.div_floor(d), hi: ceil_div(&self.hi, d), prec: self.prec }
    }

    /// Widen by `ulps` units in the last place on both sides.
    pub fn widen(&self, ulps: u32) -> Interval {
        Interval { lo: &self.lo - ulps, hi: &self.hi + ulps, prec: self.prec }
    }

    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn contains_ratio(&self, num: &BigInt, den: &BigInt) -> bool {
        let v = num << self.prec;
        &self.lo * den <= v && v <= &self.hi * den
    }

    pub fn width(&self) -> BigInt {
        &self.hi - &self.lo
    }

    pub fn to_f64(&self) -> f64 {
        let mid: BigInt = (&self.lo + &self.hi) >> 1usize;
        let s = mid.to_string().parse::<f64>().unwrap_or(f64::NAN);
        s / 2f64.powi(self.prec as i32)
    }
}

/// `atan(1/k)` for an integer `k >= 2`, via the alternating Taylor series.
fn atan_inv(k: u64, prec: u32) -> Interval {
    let k = BigInt::from(k);
    let k2 = &k * &k;
    let mut sum = Interval::exact_int(0, prec);
    let mut pow = k.clone();
    let mut n: u64 = 0;
    let limit = BigInt::one() << prec;
    loop {
        let den = &pow * (2 * n + 1);
        let term = Interval::ratio(&BigInt::one(), &den, prec);
        sum = if n.is_multiple_of(2) { sum.add(&term) } else { sum.sub(&term) };
        if den > limit {
            // the remainder of an alternating decreasing series is below the next term
            return sum.widen(1);
        }
        pow = &pow * &k2;
        n += 1;
    }
}

pub fn pi(prec: u32) -> Interval {
    let a = atan_inv(5, prec).scale(&BigInt::from(16));
    let b = atan_inv(239, prec).scale(&BigInt::from(4));
    a.sub(&b)
}

/// `cos(theta)` for `theta` known to lie in `[0, 4]`.
pub fn cos(theta: &Interval) -> Interval {
    let prec = theta.prec;
    let t2 = theta.mul(theta);
    let one = Interval::exact_int(1, prec);
    let mut term = one.clone();
    let mut sum = one;
    let mut n: u64 = 1;
    loop {
        term = term.mul(&t2).div_int(&BigInt::from((2 * n - 1) * (2 * n)));
        sum = if n % 2 == 1 { sum.sub(&term) } else { sum.add(&term) };
        // from n >= 2 on the terms decrease, since theta^2 < (2n+1)(2n+2)
        if n >= 2 && term.hi <= BigInt::one() {
            return sum.widen(1);
        }
        n += 1;
    }
}

/// `cos(2 pi m / n)` as a certified interval.
pub fn cos_two_pi_frac(m: i64, n: u32, prec: u32) -> Interval {
    let n_i = n as i64;
    let mut r = m.rem_euclid(n_i);
    if 2 * r > n_i {
        r = n_i - r;
    }
    if r == 0 {
        return Interval::exact_int(1, prec);
    }
    if 2 * r == n_i {
        return Interval::exact_int(-1, prec);
    }
    let theta = pi(prec).scale(&BigInt::from(2 * r)).div_int(&BigInt::from(n));
    let c = cos(&theta);
    clamp_unit(c)
}

fn clamp_unit(c: Interval) -> Interval {
    let one = BigInt::one() << c.prec;
    let lo = if c.lo < -&one { -&one } else { c.lo };
    let hi = if c.hi > one { one } else { c.hi };
    Interval { lo, hi, prec: c.prec }
}

/// Certified sign of `sum_j coeffs[j] * cos(2 pi k j / n)`, or `None` if the
/// interval at this precision still contains zero.
pub fn sign_of_cos_sum(coeffs: &[BigInt], k: u32, n: u32, prec: u32) -> Option<i8> {
    let guard = prec + 16;
    let mut acc = Interval::exact_int(0, guard);
    for (j, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let cj = cos_two_pi_frac(k as i64 * j as i64, n, guard);
        acc = acc.add(&cj.scale(c));
    }
    acc.sign()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_brackets_known_digits() {
        let p = pi(128);
        // 3.14159265358979323846 = 314159265358979323846 / 10^20
        let lo = BigInt::parse_bytes(b"314159265358979323846", 10).unwrap();
        let den = BigInt::from(10).pow(20);
        let lower = Interval::ratio(&lo, &den, 128);
        let upper = Interval::ratio(&(lo + 1), &den, 128);
        assert!(lower.lo <= p.lo && p.hi <= upper.hi);
        assert!(p.width() < BigInt::from(1 << 12));
    }

    #[test]
    fn cosine_values() {
        for (m, n, want) in [(1, 3, -0.5), (1, 6, 0.5), (1, 4, 0.0), (2, 5, -0.809016994)] {
            let c = cos_two_pi_frac(m, n, 80);
            assert!((c.to_f64() - want).abs() < 1e-8, "cos(2pi {m}/{n})");
        }
    }

    #[test]
    fn cosine_interval_contains_float_value() {
        for n in [3u32, 5, 7, 9, 11] {
            for m in 0..n as i64 {
                let c = cos_two_pi_frac(m, n, 60);
                let f = (2.0 * std::f64::consts::PI * m as f64 / n as f64).cos();
                let scale = 2f64.powi(60);
                let lo = c.lo.to_string().parse::<f64>().unwrap() / scale;
                let hi = c.hi.to_string().parse::<f64>().unwrap() / scale;
                assert!(lo - 1e-12 <= f && f <= hi + 1e-12);
            }
        }
    }

    #[test]
    fn refinement_stays_nested_in_value() {
        // cos(2pi/7) is irrational; every precision must bracket the same number
        let coarse = cos_two_pi_frac(1, 7, 40);
        let fine = cos_two_pi_frac(1, 7, 200);
        assert!((coarse.to_f64() - fine.to_f64()).abs() < 1e-10);
        assert!(fine.width() < BigInt::from(1u64 << 20));
    }
}
