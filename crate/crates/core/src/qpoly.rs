//! Dense univariate polynomials over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::dyadic::RealInterval;

/// Coefficients ascending: c[0] + c[1] x + ... Trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    pub c: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.len() > 1 && c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        if c.is_empty() {
            c.push(BigRational::zero());
        }
        QPoly { c }
    }

    pub fn zero() -> Self {
        QPoly { c: vec![BigRational::zero()] }
    }

    pub fn one() -> Self {
        QPoly { c: vec![BigRational::one()] }
    }

    pub fn x() -> Self {
        QPoly::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn constant(q: BigRational) -> Self {
        QPoly::new(vec![q])
    }

    pub fn from_bigints(v: &[BigInt]) -> Self {
        QPoly::new(v.iter().map(|n| BigRational::from_integer(n.clone())).collect())
    }

    pub fn from_i64(v: &[i64]) -> Self {
        QPoly::new(v.iter().map(|n| BigRational::from_integer(BigInt::from(*n))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.c.len() - 1
    }

    pub fn lead(&self) -> &BigRational {
        self.c.last().unwrap()
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn add(&self, o: &QPoly) -> QPoly {
        let n = self.c.len().max(o.c.len());
        let mut c = vec![BigRational::zero(); n];
        for (i, x) in self.c.iter().enumerate() {
            c[i] += x;
        }
        for (i, x) in o.c.iter().enumerate() {
            c[i] += x;
        }
        QPoly::new(c)
    }

    pub fn neg(&self) -> QPoly {
        QPoly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn sub(&self, o: &QPoly) -> QPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                c[i + j] += a * b;
            }
        }
        QPoly::new(c)
    }

    pub fn scale(&self, q: &BigRational) -> QPoly {
        QPoly::new(self.c.iter().map(|x| x * q).collect())
    }

    pub fn monic(&self) -> QPoly {
        assert!(!self.is_zero());
        self.scale(&self.lead().recip())
    }

    /// Euclidean division: (quotient, remainder).
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.c.clone();
        let dd = d.degree();
        if self.degree() < dd || self.is_zero() {
            return (QPoly::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); self.degree() - dd + 1];
        let inv_lead = d.lead().recip();
        for i in (dd..r.len()).rev() {
            let coef = &r[i] * &inv_lead;
            if coef.is_zero() {
                continue;
            }
            q[i - dd] = coef.clone();
            for j in 0..=dd {
                let t = &coef * &d.c[j];
                r[i - dd + j] -= t;
            }
        }
        (QPoly::new(q), QPoly::new(r[..dd.max(1)].to_vec()))
    }

    pub fn rem(&self, d: &QPoly) -> QPoly {
        self.div_rem(d).1
    }

    /// Exact division; panics if not divisible.
    pub fn div_exact(&self, d: &QPoly) -> QPoly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn derivative(&self) -> QPoly {
        if self.degree() == 0 {
            return QPoly::zero();
        }
        QPoly::new(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, x)| x * BigRational::from_integer(BigInt::from(i as u64 + 1)))
                .collect(),
        )
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
            // keep coefficients small
            if !b.is_zero() {
                b = b.monic();
            }
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Extended gcd: returns (g, u, v) with u*self + v*o = g, g monic.
    pub fn xgcd(&self, o: &QPoly) -> (QPoly, QPoly, QPoly) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
        let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let l = r0.lead().recip();
        (r0.scale(&l), s0.scale(&l), t0.scale(&l))
    }

    /// Squarefree part (radical).
    pub fn squarefree_part(&self) -> QPoly {
        let d = self.derivative();
        if d.is_zero() {
            return self.monic();
        }
        let g = self.gcd(&d);
        self.div_exact(&g).monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_interval(&self, x: &RealInterval, prec: u32) -> RealInterval {
        let mut acc = RealInterval::zero();
        for c in self.c.iter().rev() {
            acc = acc.mul(x, prec).add(&RealInterval::from_rational(c, prec), prec);
        }
        acc
    }

    /// Substitute x -> r*x.
    pub fn scale_arg(&self, r: &BigRational) -> QPoly {
        let mut pw = BigRational::one();
        let mut c = Vec::with_capacity(self.c.len());
        for a in &self.c {
            c.push(a * &pw);
            pw *= r;
        }
        QPoly::new(c)
    }

    /// Reverse coefficients: x^n f(1/x).
    pub fn reversed(&self) -> QPoly {
        let mut c = self.c.clone();
        c.reverse();
        QPoly::new(c)
    }

    /// Clear denominators and content: primitive integer coefficients,
    /// positive leading coefficient.
    pub fn primitive_bigint(&self) -> Vec<BigInt> {
        use num_integer::Integer;
        let mut den = BigInt::one();
        for q in &self.c {
            den = den.lcm(q.denom());
        }
        let mut ints: Vec<BigInt> = self.c.iter().map(|q| q.numer() * (&den / q.denom())).collect();
        let mut content = BigInt::zero();
        for n in &ints {
            content = content.gcd(n);
        }
        if !content.is_zero() && !content.is_one() {
            for n in ints.iter_mut() {
                *n /= &content;
            }
        }
        if ints.last().map_or(false, |l| l.is_negative()) {
            for n in ints.iter_mut() {
                *n = -&*n;
            }
        }
        ints
    }

    /// Strip zero roots: returns (k, g) with self = x^k * g, g(0) != 0.
    pub fn strip_zero_roots(&self) -> (usize, QPoly) {
        if self.is_zero() {
            return (0, self.clone());
        }
        let k = self.c.iter().position(|x| !x.is_zero()).unwrap();
        (k, QPoly::new(self.c[k..].to_vec()))
    }

    /// Cauchy bound: all complex roots have |z| <= 1 + max|a_i/a_n|.
    pub fn cauchy_root_bound(&self) -> BigRational {
        assert!(!self.is_zero() && self.degree() >= 1);
        let lead = self.lead();
        let mut m = BigRational::zero();
        for a in &self.c[..self.degree()] {
            let r = (a / lead).abs();
            if r > m {
                m = r;
            }
        }
        m + BigRational::one()
    }

    /// Sign of the polynomial at a rational point.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }
}

/// Sturm chain of a squarefree polynomial.
pub struct SturmChain {
    chain: Vec<QPoly>,
}

impl SturmChain {
    pub fn new(f: &QPoly) -> Self {
        let f = f.squarefree_part();
        let mut chain = vec![f.clone(), f.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]).neg();
            if r.is_zero() {
                break;
            }
            // scale by a positive constant only; signs carry the information
            let s = r.lead().abs().recip();
            chain.push(r.scale(&s));
        }
        SturmChain { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut last = 0i32;
        let mut v = 0usize;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        let mut last = 0i32;
        let mut v = 0usize;
        for p in &self.chain {
            let mut s = if p.lead().is_positive() { 1 } else { -1 };
            if !positive && p.degree() % 2 == 1 {
                s = -s;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Number of distinct real roots in the half-open interval (a, b].
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        assert!(a <= b);
        self.variations(a) - self.variations(b)
    }

    pub fn count_all_real_roots(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }
}

/// Isolating intervals (a, b] for all distinct real roots of f, ascending.
pub fn isolate_real_roots(f: &QPoly) -> Vec<(BigRational, BigRational)> {
    let sf = f.squarefree_part();
    if sf.degree() == 0 {
        return Vec::new();
    }
    let chain = SturmChain::new(&sf);
    let bound = sf.cauchy_root_bound();
    let a = -&bound - BigRational::one();
    let b = bound + BigRational::one();
    let mut out = Vec::new();
    let total = chain.count_roots(&a, &b);
    if total == 0 {
        return out;
    }
    let mut stack = vec![(a, b, total)];
    while let Some((a, b, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((a, b));
            continue;
        }
        let mid = (&a + &b) / BigRational::from_integer(BigInt::from(2));
        let left = chain.count_roots(&a, &mid);
        stack.push((a, mid.clone(), left));
        stack.push((mid, b, n - left));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Shrink an isolating interval of a squarefree polynomial by bisection until
/// width <= tol. The root stays in (a, b].
pub fn refine_root(f: &QPoly, mut a: BigRational, mut b: BigRational, tol: &BigRational) -> (BigRational, BigRational) {
    let sf = f.squarefree_part();
    let two = BigRational::from_integer(BigInt::from(2));
    let sa = sf.sign_at(&a);
    debug_assert!(sa != 0, "left endpoint must not be a root");
    while &b - &a > *tol {
        let mid = (&a + &b) / &two;
        let sm = sf.sign_at(&mid);
        if sm == 0 {
            // root exactly at mid: keep a half-open sliver around it
            let quarter = (&b - &a) / BigRational::from_integer(BigInt::from(4));
            a = &mid - &quarter;
            b = mid;
            if sf.sign_at(&a) == 0 {
                a = &b - tol;
            }
            break;
        }
        if sm == sa {
            a = mid;
        } else {
            b = mid;
        }
    }
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn div_rem_roundtrip() {
        let f = QPoly::from_i64(&[2, 0, -3, 1]); // x^3 - 3x^2 + 2
        let g = QPoly::from_i64(&[-1, 1]); // x - 1
        let (q, r) = f.div_rem(&g);
        assert!(r.is_zero());
        assert_eq!(q.mul(&g), f);
    }

    #[test]
    fn gcd_of_common_factor() {
        let f = QPoly::from_i64(&[-1, 1]).mul(&QPoly::from_i64(&[-2, 1]));
        let g = QPoly::from_i64(&[-1, 1]).mul(&QPoly::from_i64(&[3, 1]));
        let d = f.gcd(&g);
        assert_eq!(d, QPoly::from_i64(&[-1, 1]));
        let (gg, u, v) = f.xgcd(&g);
        assert_eq!(gg, d);
        assert_eq!(u.mul(&f).add(&v.mul(&g)), d);
    }

    #[test]
    fn squarefree() {
        let f = QPoly::from_i64(&[-1, 1]);
        let f2 = f.mul(&f).mul(&QPoly::from_i64(&[1, 1]));
        let sf = f2.squarefree_part();
        assert_eq!(sf.degree(), 2); // (x-1)(x+1)
    }

    #[test]
    fn sturm_counts() {
        // (x-1)(x-2)(x+3)
        let f = QPoly::from_i64(&[-1, 1]).mul(&QPoly::from_i64(&[-2, 1])).mul(&QPoly::from_i64(&[3, 1]));
        let chain = SturmChain::new(&f);
        assert_eq!(chain.count_all_real_roots(), 3);
        assert_eq!(chain.count_roots(&rat(0, 1), &rat(5, 1)), 2);
        assert_eq!(chain.count_roots(&rat(-4, 1), &rat(0, 1)), 1);
        // x^2 + 1 has no real roots
        let g = QPoly::from_i64(&[1, 0, 1]);
        assert_eq!(SturmChain::new(&g).count_all_real_roots(), 0);
    }

    #[test]
    fn isolate_and_refine() {
        // x^2 - 2
        let f = QPoly::from_i64(&[-2, 0, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 2);
        let (a, b) = roots[1].clone();
        let (a, b) = refine_root(&f, a, b, &rat(1, 1_000_000));
        // sqrt(2) = 1.41421356...
        assert!(a < rat(14143, 10000) && b > rat(14142, 10000));
        assert!(&b - &a <= rat(1, 1_000_000));
    }

    #[test]
    fn primitive_parts() {
        let f = QPoly::new(vec![rat(1, 2), rat(-3, 4), rat(1, 1)]);
        let ints = f.primitive_bigint();
        assert_eq!(ints, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(4)]);
    }
}
