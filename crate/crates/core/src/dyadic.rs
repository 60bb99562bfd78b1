//! Dyadic rationals and directed-rounding interval arithmetic.
//!
//! Every real-place quantity in the crate is carried as an interval with
//! exact dyadic endpoints; operations round outward at an explicit bit
//! precision, so enclosures are sound by construction.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// m * 2^e with m odd (or zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dyadic {
    pub m: BigInt,
    pub e: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    Down,
    Up,
}

impl Dyadic {
    pub fn new(m: BigInt, e: i64) -> Self {
        let mut d = Dyadic { m, e };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic { m: BigInt::zero(), e: 0 }
    }

    pub fn one() -> Self {
        Dyadic { m: BigInt::one(), e: 0 }
    }

    pub fn from_int(n: i64) -> Self {
        Dyadic::new(BigInt::from(n), 0)
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        Dyadic::new(n.clone(), 0)
    }

    fn normalize(&mut self) {
        if self.m.is_zero() {
            self.e = 0;
            return;
        }
        let tz = self.m.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.m >>= tz;
            self.e += tz as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.m.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.m.is_negative()
    }

    pub fn neg(&self) -> Self {
        Dyadic { m: -&self.m, e: self.e }
    }

    pub fn abs(&self) -> Self {
        Dyadic { m: self.m.abs(), e: self.e }
    }

    pub fn add(&self, o: &Dyadic) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.e.min(o.e);
        let a = &self.m << (self.e - e) as u64;
        let b = &o.m << (o.e - e) as u64;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, o: &Dyadic) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Dyadic) -> Self {
        Dyadic::new(&self.m * &o.m, self.e + o.e)
    }

    pub fn shl(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic { m: self.m.clone(), e: self.e + k }
    }

    /// Number of bits in the mantissa.
    pub fn mant_bits(&self) -> u64 {
        self.m.bits()
    }

    /// Round to at most `prec` mantissa bits in direction `dir`.
    pub fn round(&self, prec: u32, dir: Dir) -> Dyadic {
        let bits = self.m.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let drop = (bits - prec as u64) as i64;
        let mut q = &self.m >> drop as u64;
        let exact = (&q << drop as u64) == self.m;
        if !exact {
            match dir {
                Dir::Up => q += 1,
                Dir::Down => {} // shifting truncates toward -inf for BigInt? No: >> on negative BigInt rounds toward -inf.
            }
        }
        Dyadic::new(q, self.e + drop)
    }

    pub fn to_rational(&self) -> BigRational {
        if self.e >= 0 {
            BigRational::from_integer(&self.m << self.e as u64)
        } else {
            BigRational::new(self.m.clone(), BigInt::one() << (-self.e) as u64)
        }
    }

    /// Outward-rounded dyadic enclosure endpoint of a rational.
    pub fn from_rational(q: &BigRational, prec: u32, dir: Dir) -> Dyadic {
        if q.is_zero() {
            return Dyadic::zero();
        }
        if q.denom().is_one() {
            return Dyadic::from_bigint(q.numer()).round(prec, dir);
        }
        // scale so that numerator/denominator has `prec+2` quotient bits
        let nbits = q.numer().bits() as i64;
        let dbits = q.denom().bits() as i64;
        let shift = prec as i64 + 2 - (nbits - dbits);
        let (num, den) = if shift >= 0 {
            (q.numer() << shift as u64, q.denom().clone())
        } else {
            (q.numer().clone(), q.denom() << (-shift) as u64)
        };
        let (quot, rem) = num.div_rem(&den);
        let mut m = quot;
        if !rem.is_zero() {
            // div_rem truncates toward zero; fix direction
            let q_neg = q.is_negative();
            match dir {
                Dir::Up if !q_neg => m += 1,
                Dir::Down if q_neg => m -= 1,
                _ => {}
            }
        }
        Dyadic::new(m, -shift).round(prec, dir)
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.to_rational();
        r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
    }

    /// Exact decimal string (dyadics have finite decimal expansions).
    pub fn to_decimal_string(&self) -> String {
        if self.e >= 0 {
            return (&self.m << self.e as u64).to_string();
        }
        let k = (-self.e) as u32;
        // m / 2^k = m * 5^k / 10^k
        let scaled = &self.m * BigInt::from(5u32).pow(k);
        let neg = scaled.is_negative();
        let digits = scaled.abs().to_string();
        let digits = if digits.len() <= k as usize {
            format!("{}{}", "0".repeat(k as usize - digits.len() + 1), digits)
        } else {
            digits
        };
        let point = digits.len() - k as usize;
        let mut s = String::new();
        if neg {
            s.push('-');
        }
        s.push_str(&digits[..point]);
        s.push('.');
        s.push_str(&digits[point..]);
        // trim trailing zeros but keep at least one digit after the point
        while s.ends_with('0') && !s.ends_with(".0") {
            s.pop();
        }
        s
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.m.sign(), other.m.sign()) {
            (Sign::Minus, Sign::NoSign) | (Sign::Minus, Sign::Plus) | (Sign::NoSign, Sign::Plus) => {
                return Ordering::Less
            }
            (Sign::Plus, Sign::NoSign) | (Sign::Plus, Sign::Minus) | (Sign::NoSign, Sign::Minus) => {
                return Ordering::Greater
            }
            (Sign::NoSign, Sign::NoSign) => return Ordering::Equal,
            _ => {}
        }
        let e = self.e.min(other.e);
        let a = &self.m << (self.e - e) as u64;
        let b = &other.m << (other.e - e) as u64;
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string())
    }
}

/// Closed interval with dyadic endpoints; every op rounds outward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealInterval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl RealInterval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        debug_assert!(lo <= hi, "inverted interval");
        RealInterval { lo, hi }
    }

    pub fn point(d: Dyadic) -> Self {
        RealInterval { lo: d.clone(), hi: d }
    }

    pub fn zero() -> Self {
        RealInterval::point(Dyadic::zero())
    }

    pub fn one() -> Self {
        RealInterval::point(Dyadic::one())
    }

    pub fn from_int(n: i64) -> Self {
        RealInterval::point(Dyadic::from_int(n))
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        RealInterval {
            lo: Dyadic::from_rational(q, prec, Dir::Down),
            hi: Dyadic::from_rational(q, prec, Dir::Up),
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn midpoint(&self) -> Dyadic {
        self.lo.add(&self.hi).shl(-1)
    }

    pub fn neg(&self) -> Self {
        RealInterval { lo: self.hi.neg(), hi: self.lo.neg() }
    }

    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            RealInterval { lo: Dyadic::zero(), hi: self.lo.neg().max(self.hi.clone()) }
        }
    }

    pub fn add(&self, o: &Self, prec: u32) -> Self {
        RealInterval {
            lo: self.lo.add(&o.lo).round(prec, Dir::Down),
            hi: self.hi.add(&o.hi).round(prec, Dir::Up),
        }
    }

    pub fn sub(&self, o: &Self, prec: u32) -> Self {
        self.add(&o.neg(), prec)
    }

    pub fn mul(&self, o: &Self, prec: u32) -> Self {
        let cands = [
            self.lo.mul(&o.lo),
            self.lo.mul(&o.hi),
            self.hi.mul(&o.lo),
            self.hi.mul(&o.hi),
        ];
        let lo = cands.iter().min().unwrap().round(prec, Dir::Down);
        let hi = cands.iter().max().unwrap().round(prec, Dir::Up);
        RealInterval { lo, hi }
    }

    /// Reciprocal; requires the interval to exclude zero.
    pub fn recip(&self, prec: u32) -> Self {
        assert!(!self.contains_zero(), "recip of interval containing zero");
        let inv = |d: &Dyadic, dir: Dir| -> Dyadic {
            let q = d.to_rational().recip();
            Dyadic::from_rational(&q, prec, dir)
        };
        RealInterval { lo: inv(&self.hi, Dir::Down), hi: inv(&self.lo, Dir::Up) }
    }

    pub fn div(&self, o: &Self, prec: u32) -> Self {
        self.mul(&o.recip(prec), prec)
    }

    pub fn max_i(&self, o: &Self) -> Self {
        RealInterval {
            lo: self.lo.clone().max(o.lo.clone()),
            hi: self.hi.clone().max(o.hi.clone()),
        }
    }

    pub fn min_i(&self, o: &Self) -> Self {
        RealInterval {
            lo: self.lo.clone().min(o.lo.clone()),
            hi: self.hi.clone().min(o.hi.clone()),
        }
    }

    /// Integer power by repeated squaring with outward rounding.
    pub fn pow_u(&self, mut k: u64, prec: u32) -> Self {
        let mut base = self.clone();
        let mut acc = RealInterval::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, prec);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base, prec);
            }
        }
        acc
    }

    /// x^(n/d) for a nonnegative interval.
    pub fn pow_ratio(&self, n: i64, d: u64, prec: u32) -> Self {
        assert!(d > 0);
        assert!(!self.lo.is_negative(), "pow_ratio needs nonnegative base");
        let powed = if n >= 0 {
            self.pow_u(n as u64, prec)
        } else {
            self.pow_u((-n) as u64, prec).recip(prec)
        };
        if d == 1 {
            powed
        } else {
            powed.root_u(d, prec)
        }
    }

    /// Nonnegative d-th root, outward rounded.
    pub fn root_u(&self, d: u64, prec: u32) -> Self {
        assert!(!self.lo.is_negative());
        RealInterval {
            lo: dyadic_root(&self.lo, d, prec, Dir::Down),
            hi: dyadic_root(&self.hi, d, prec, Dir::Up),
        }
    }

    pub fn sqrt(&self, prec: u32) -> Self {
        self.root_u(2, prec)
    }

    /// Natural log of a strictly positive interval.
    pub fn ln(&self, prec: u32) -> Self {
        assert!(self.lo.is_positive(), "ln of non-positive interval");
        RealInterval {
            lo: ln_dyadic(&self.lo, prec, Dir::Down),
            hi: ln_dyadic(&self.hi, prec, Dir::Up),
        }
    }

    /// max(ln, 0).
    pub fn ln_plus(&self, prec: u32) -> Self {
        // Values at or below 1 contribute zero; clamp before taking logs so
        // enclosures straddling 1 stay sound.
        if self.hi <= Dyadic::one() {
            return RealInterval::zero();
        }
        let clamped = RealInterval {
            lo: self.lo.clone().max(Dyadic::one()),
            hi: self.hi.clone(),
        };
        let l = clamped.ln(prec);
        RealInterval { lo: l.lo.max(Dyadic::zero()), hi: l.hi.max(Dyadic::zero()) }
    }

    /// Certified strict comparison: Some(true) if self < other everywhere.
    pub fn certainly_lt(&self, o: &Self) -> Option<bool> {
        if self.hi < o.lo {
            Some(true)
        } else if self.lo >= o.hi {
            Some(false)
        } else {
            None
        }
    }

    /// Certified non-strict comparison: Some(true) if self <= other everywhere.
    pub fn certainly_le(&self, o: &Self) -> Option<bool> {
        if self.hi <= o.lo {
            Some(true)
        } else if self.lo > o.hi {
            Some(false)
        } else {
            None
        }
    }

    pub fn intersects(&self, o: &Self) -> bool {
        !(self.hi < o.lo || o.hi < self.lo)
    }

    pub fn contains(&self, o: &Self) -> bool {
        self.lo <= o.lo && o.hi <= self.hi
    }

    pub fn hull(&self, o: &Self) -> Self {
        RealInterval {
            lo: self.lo.clone().min(o.lo.clone()),
            hi: self.hi.clone().max(o.hi.clone()),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64()
    }
}

impl fmt::Display for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// d-th root of a nonnegative dyadic, directed rounding at `prec` bits.
fn dyadic_root(x: &Dyadic, d: u64, prec: u32, dir: Dir) -> Dyadic {
    use num_integer::Roots;
    assert!(!x.is_negative());
    if x.is_zero() {
        return Dyadic::zero();
    }
    let mbits = x.m.bits() as i64;
    // N = m * 2^t must be an integer (t >= max(0, -e) not needed since we
    // only add powers of two to m: t >= 0 always works because x = m*2^e and
    // root(x) = root(m*2^t) * 2^((e-? ) ...): we root N = m*2^t and attach
    // exponent (e - t)/d ... so we need (t - 0) with (e + ?) -- use:
    //   x = m*2^e = (m*2^t) * 2^(e-t),  require d | (e - t).
    let mut t = (d as i64) * (prec as i64 + 4) - mbits;
    if t < 0 {
        t = 0;
    }
    // adjust so that (e - t) is divisible by d
    let rem = (x.e - t).rem_euclid(d as i64);
    t += rem; // now (e - t) ≡ 0 (mod d), t grew by < d
    let n: BigInt = &x.m << t as u64;
    let root = n.nth_root(d as u32);
    let e_out = (x.e - t) / d as i64;
    let mut r = Dyadic::new(root, e_out);
    // nth_root floors: r <= x^(1/d) < (root+1)*2^e_out
    if dir == Dir::Up && r.to_rational().pow(d as i32) != x.to_rational() {
        r = r.add(&Dyadic::new(BigInt::one(), e_out));
    }
    r.round(prec + 8, dir)
}

/// ln of a positive dyadic with directed rounding.
fn ln_dyadic(x: &Dyadic, prec: u32, dir: Dir) -> Dyadic {
    assert!(x.is_positive());
    // x = m * 2^e with m odd; write x = t * 2^k with t in [1, 2)
    let mbits = x.m.bits() as i64;
    let k = x.e + mbits - 1;
    // t = m / 2^(mbits-1) in [1,2)
    let t = BigRational::new(x.m.clone(), BigInt::one() << (mbits - 1) as u64);
    let ln_t = ln_series(&t, prec + 8);
    let ln2 = ln2_interval(prec + 8);
    // ln x = ln t + k ln 2
    let k_r = RealInterval::from_int(k);
    let total = ln_t.add(&k_r.mul(&ln2, prec + 8), prec + 8);
    match dir {
        Dir::Down => total.lo.round(prec, Dir::Down),
        Dir::Up => total.hi.round(prec, Dir::Up),
    }
}

/// Interval for ln of a rational in [1, 2) (or any q > 0 with |z| < 1) via
/// atanh series: ln q = 2 * sum z^(2j+1)/(2j+1), z = (q-1)/(q+1).
fn ln_series(q: &BigRational, prec: u32) -> RealInterval {
    let one = BigRational::one();
    let z = (q - &one) / (q + &one);
    let z2 = &z * &z;
    let mut term = z.clone();
    let mut sum = BigRational::zero();
    let mut j = 0u32;
    // |z| < 1/3 for q in [1,2); each term gains >= 3.1 bits
    let terms = prec / 3 + 4;
    while j <= terms {
        sum += &term / BigRational::from_integer(BigInt::from(2 * j + 1));
        term *= &z2;
        j += 1;
    }
    // tail bound: |z|^(2J+1)/(2J+1) * 1/(1 - z^2), term currently = z^(2j+1)
    let tail = (&term / BigRational::from_integer(BigInt::from(2 * j + 1)))
        / (&one - &z2);
    let two = BigRational::from_integer(BigInt::from(2));
    let lo_q = &two * (&sum - tail.abs());
    let hi_q = &two * (&sum + tail.abs());
    RealInterval {
        lo: Dyadic::from_rational(&lo_q, prec, Dir::Down),
        hi: Dyadic::from_rational(&hi_q, prec, Dir::Up),
    }
}

/// Enclosure of ln 2 = 2 atanh(1/3).
pub fn ln2_interval(prec: u32) -> RealInterval {
    let q = BigRational::new(BigInt::from(2), BigInt::from(1));
    // ln 2 via series on q=2 gives z = 1/3, still fine
    ln_series(&q, prec)
}

/// Enclosure of ln of an arbitrary positive rational.
pub fn ln_rational(q: &BigRational, prec: u32) -> RealInterval {
    assert!(q.is_positive());
    RealInterval::from_rational(q, prec + 8).ln(prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn dyadic_basics() {
        let a = Dyadic::new(BigInt::from(12), 0); // 12 = 3*2^2
        assert_eq!(a.m, BigInt::from(3));
        assert_eq!(a.e, 2);
        assert_eq!(a.to_decimal_string(), "12");
        let h = Dyadic::new(BigInt::from(1), -1);
        assert_eq!(h.to_decimal_string(), "0.5");
        assert!(h < a);
    }

    #[test]
    fn rounding_direction() {
        let third = rat(1, 3);
        let lo = Dyadic::from_rational(&third, 20, Dir::Down);
        let hi = Dyadic::from_rational(&third, 20, Dir::Up);
        assert!(lo.to_rational() < third);
        assert!(hi.to_rational() > third);
        let neg = rat(-1, 3);
        let lo = Dyadic::from_rational(&neg, 20, Dir::Down);
        let hi = Dyadic::from_rational(&neg, 20, Dir::Up);
        assert!(lo.to_rational() < neg && neg < hi.to_rational());
    }

    #[test]
    fn interval_mul_div() {
        let a = RealInterval::from_rational(&rat(1, 3), 64);
        let b = RealInterval::from_rational(&rat(3, 1), 64);
        let c = a.mul(&b, 64);
        assert!(c.lo.to_rational() <= BigRational::one());
        assert!(c.hi.to_rational() >= BigRational::one());
        let d = b.recip(64);
        assert!(d.lo.to_rational() <= rat(1, 3));
    }

    #[test]
    fn sqrt_two() {
        let two = RealInterval::from_int(2);
        let r = two.sqrt(100);
        let lo = r.lo.to_rational();
        let hi = r.hi.to_rational();
        assert!(&lo * &lo < rat(2, 1));
        assert!(&hi * &hi > rat(2, 1));
        let w = r.width().to_rational();
        assert!(w < rat(1, 1i64 << 40));
    }

    #[test]
    fn ln_values() {
        // ln 2 = 0.693147180559945...
        let l2 = ln_rational(&rat(2, 1), 80);
        let ref_lo = rat(693147180, 1_000_000_000);
        let ref_hi = rat(693147181, 1_000_000_000);
        assert!(l2.lo.to_rational() > ref_lo && l2.hi.to_rational() < ref_hi);
        // ln 1 = 0
        let l1 = ln_rational(&BigRational::one(), 64);
        assert!(l1.contains_zero());
        // ln(e)~1: check ln(27/10) ~ 0.9932...
        let l = ln_rational(&rat(27, 10), 80);
        assert!(l.lo.to_rational() > rat(99, 100) && l.hi.to_rational() < rat(1, 1));
    }

    #[test]
    fn ln_plus_clamps() {
        let below = RealInterval::from_rational(&rat(1, 2), 64);
        assert_eq!(below.ln_plus(64), RealInterval::zero());
        let straddle = RealInterval::new(Dyadic::from_rational(&rat(9, 10), 32, Dir::Down), Dyadic::from_int(3));
        let lp = straddle.ln_plus(64);
        assert!(!lp.lo.is_negative());
    }

    #[test]
    fn pow_ratio_roots() {
        let x = RealInterval::from_int(8);
        let r = x.pow_ratio(1, 3, 64);
        assert!(r.lo.to_rational() <= rat(2, 1) && rat(2, 1) <= r.hi.to_rational());
        let r = x.pow_ratio(-1, 3, 64);
        assert!(r.lo.to_rational() <= rat(1, 2) && rat(1, 2) <= r.hi.to_rational());
    }
}
