//! Double-double arithmetic: an unevaluated sum of two `f64` words giving
//! roughly 32 significant digits.
//!
//! Only the primitive operations needed by the compensated evaluation paths
//! and the oracle suite are provided. Error-free transforms follow Dekker and
//! Knuth; `two_prod` relies on `f64::mul_add` for a single-rounding product.

#[derive(Copy, Clone, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// a + b with (hi, lo) exact, no assumption on magnitudes.
#[inline]
fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    Dd { hi: s, lo: err }
}

/// a + b with (hi, lo) exact, valid for |a| >= |b|.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let err = b - (s - a);
    Dd { hi: s, lo: err }
}

/// a * b with (hi, lo) exact.
#[inline]
fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    let err = a.mul_add(b, -p);
    Dd { hi: p, lo: err }
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    /// pi to double-double precision.
    pub const PI: Dd = Dd {
        hi: std::f64::consts::PI,
        lo: 1.2246467991473532e-16,
    };
    /// ln 2 to double-double precision.
    pub const LN_2: Dd = Dd {
        hi: std::f64::consts::LN_2,
        lo: 2.3190468138462996e-17,
    };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact ratio of two f64-representable numbers (e.g. integer Bernoulli ratios).
    pub fn from_ratio(num: f64, den: f64) -> Dd {
        Dd::from_f64(num).div(Dd::from_f64(den))
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub fn add(self, other: Dd) -> Dd {
        let s = two_sum(self.hi, other.hi);
        let t = two_sum(self.lo, other.lo);
        let mut v = quick_two_sum(s.hi, s.lo + t.hi);
        v = quick_two_sum(v.hi, v.lo + t.lo);
        v
    }

    #[inline]
    pub fn add_f64(self, other: f64) -> Dd {
        let s = two_sum(self.hi, other);
        quick_two_sum(s.hi, s.lo + self.lo)
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    pub fn mul(self, other: Dd) -> Dd {
        let p = two_prod(self.hi, other.hi);
        let e = self.hi * other.lo + self.lo * other.hi + p.lo;
        quick_two_sum(p.hi, e)
    }

    #[inline]
    pub fn mul_f64(self, other: f64) -> Dd {
        let p = two_prod(self.hi, other);
        quick_two_sum(p.hi, self.lo * other + p.lo)
    }

    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r2 = r.sub(other.mul_f64(q2));
        let q3 = r2.hi / other.hi;
        quick_two_sum(q1, q2).add_f64(q3)
    }

    #[inline]
    pub fn div_f64(self, other: f64) -> Dd {
        self.div(Dd::from_f64(other))
    }

    #[inline]
    pub fn recip(self) -> Dd {
        Dd::ONE.div(self)
    }

    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::ZERO;
        }
        let x = self.hi.sqrt();
        // One Newton step: x + (self - x^2) / (2x).
        let x2 = two_prod(x, x);
        let r = self.sub(x2).to_f64() / (2.0 * x);
        quick_two_sum(x, r)
    }

    /// exp(self) via argument reduction against ln 2 and a Taylor tail.
    pub fn exp(self) -> Dd {
        let k = (self.hi / std::f64::consts::LN_2).round();
        let r = self.sub(Dd::LN_2.mul_f64(k));
        // |r| <= ln2/2; Taylor to degree 26 reaches ~1e-35.
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for j in 1..=26 {
            term = term.mul(r).div_f64(j as f64);
            sum = sum.add(term);
        }
        let scale = (2.0f64).powi(k as i32);
        sum.mul_f64(scale)
    }

    /// ln(self) via base-2 reduction and the atanh series; requires self > 0.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let e = self.hi.log2().floor();
        let m = self.mul_f64((2.0f64).powi(-(e as i32)));
        // m in [1, 2): ln m = 2 atanh((m-1)/(m+1)), |t| < 1/3.
        let t = m.sub(Dd::ONE).div(m.add(Dd::ONE));
        let t2 = t.mul(t);
        let mut sum = Dd::ZERO;
        let mut pow = t;
        let mut j = 1usize;
        loop {
            let term = pow.div_f64(j as f64);
            sum = sum.add(term);
            if term.hi.abs() < 1e-36 * sum.hi.abs() || j > 80 {
                break;
            }
            pow = pow.mul(t2);
            j += 2;
        }
        sum.mul_f64(2.0).add(Dd::LN_2.mul_f64(e))
    }

    /// self^p for real p via exp(p ln self); requires self > 0.
    pub fn powf(self, p: f64) -> Dd {
        self.ln().mul_f64(p).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_roundtrip() {
        let x = Dd::from_ratio(1.0, 3.0);
        assert!((x.mul_f64(3.0).to_f64() - 1.0).abs() < 1e-31);
    }

    #[test]
    fn sqrt_squares_back() {
        let x = Dd::from_f64(2.0).sqrt();
        let back = x.mul(x).sub(Dd::from_f64(2.0));
        assert!(back.to_f64().abs() < 1e-31);
    }

    #[test]
    fn exp_ln_roundtrip() {
        let x = Dd::from_f64(0.731);
        let y = x.ln().exp().sub(x);
        assert!(y.to_f64().abs() < 1e-30);
    }

    #[test]
    fn ln_2_matches_series() {
        let l = Dd::from_f64(2.0).ln();
        assert!((l.sub(Dd::LN_2)).to_f64().abs() < 1e-31);
    }

    #[test]
    fn exp_one_is_e() {
        let e = Dd::ONE.exp();
        assert!((e.hi - std::f64::consts::E).abs() < 1e-15);
        assert!((e.ln().sub(Dd::ONE)).to_f64().abs() < 1e-30);
    }
}
