//! Arithmetic scalars for the two regimes.
//!
//! [`Exact`] is a Gaussian rational (pair of `rug::Rational`); all exact-regime
//! computations (nullspaces, ODE extraction, residuals) run on it and are
//! bit-identical across runs. [`Cplx`] is a complex number over `rug::Float`
//! (MPFR); precision travels with the value and every operation allocates at the
//! larger precision of its operands. Elementary functions use the principal
//! branch: `arg` in (-pi, pi].

use std::fmt;

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};

/// Default working precision in bits for the float regime.
pub const DEFAULT_PREC: u32 = 256;

/// Minimal coefficient interface shared by the two regimes.
///
/// Constructors are contextual (`zero_like`) so that float values can carry
/// their precision; `Exact` ignores the context.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Field division. Callers guarantee a nonzero divisor.
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

// ---------------------------------------------------------------------------
// Exact Gaussian rationals
// ---------------------------------------------------------------------------

/// Exact scalar: `re + im*i` with rational parts. Error-free arithmetic.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Exact {
    pub re: Rational,
    pub im: Rational,
}

impl Exact {
    pub fn zero() -> Self {
        Exact { re: Rational::new(), im: Rational::new() }
    }

    pub fn one() -> Self {
        Exact::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Exact { re: Rational::from(v), im: Rational::new() }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Exact { re: Rational::from((num, den)), im: Rational::new() }
    }

    pub fn from_rational(re: Rational) -> Self {
        Exact { re, im: Rational::new() }
    }

    pub fn new(re: Rational, im: Rational) -> Self {
        Exact { re, im }
    }

    /// Purely imaginary `v*i`.
    pub fn imag_ratio(num: i64, den: i64) -> Self {
        Exact { re: Rational::new(), im: Rational::from((num, den)) }
    }

    pub fn is_real(&self) -> bool {
        self.im == 0
    }

    /// True when the value is a (real) integer.
    pub fn is_integer(&self) -> bool {
        self.im == 0 && *self.re.denom() == 1
    }

    pub fn conj(&self) -> Self {
        Exact { re: self.re.clone(), im: -self.im.clone() }
    }

    /// |z|^2 as a rational.
    pub fn norm_sqr(&self) -> Rational {
        Rational::from(&self.re * &self.re) + Rational::from(&self.im * &self.im)
    }

    pub fn scale_int(&self, v: &Integer) -> Self {
        Exact {
            re: Rational::from(&self.re * v),
            im: Rational::from(&self.im * v),
        }
    }

    pub fn to_cplx(&self, prec: u32) -> Cplx {
        Cplx {
            re: Float::with_val(prec, &self.re),
            im: Float::with_val(prec, &self.im),
        }
    }

    /// Parse a Gaussian rational string: "3", "-2/5", "1/2*i", "i", "-1+1/2*i",
    /// "3/4-i". Whitespace is ignored.
    pub fn parse(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        // Split at the last top-level '+' or '-' that is not the leading sign
        // and not part of "e" exponents (we do not accept floats here anyway).
        let bytes = compact.as_bytes();
        let mut split = None;
        for i in (1..bytes.len()).rev() {
            let c = bytes[i] as char;
            if (c == '+' || c == '-') && bytes[i - 1] as char != '/' {
                split = Some(i);
                break;
            }
        }
        let (a, b) = match split {
            Some(i) => (&compact[..i], &compact[i..]),
            None => ("", compact.as_str()),
        };
        let parse_part = |part: &str| -> Result<(Rational, bool)> {
            // returns (value, is_imaginary)
            let mut p = part.to_string();
            let imag = p.ends_with('i');
            if imag {
                p.pop();
                if p.ends_with('*') {
                    p.pop();
                }
                if p.is_empty() || p == "+" {
                    p = "1".into();
                } else if p == "-" {
                    p = "-1".into();
                }
            }
            let val: Rational = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational '{part}'")))?;
            Ok((val, imag))
        };
        let mut re = Rational::new();
        let mut im = Rational::new();
        for part in [a, b] {
            if part.is_empty() {
                continue;
            }
            let (v, imag) = parse_part(part)?;
            if imag {
                if im != 0 {
                    return Err(Error::Parse(format!("two imaginary parts in '{s}'")));
                }
                im = v;
            } else {
                if re != 0 {
                    return Err(Error::Parse(format!("two real parts in '{s}'")));
                }
                re = v;
            }
        }
        Ok(Exact { re, im })
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0 {
            write!(f, "{}", self.re)
        } else if self.re == 0 {
            write!(f, "{}*i", self.im)
        } else if self.im < 0 {
            write!(f, "{}{}*i", self.re, self.im)
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl Coeff for Exact {
    fn zero_like(&self) -> Self {
        Exact::zero()
    }
    fn one_like(&self) -> Self {
        Exact::one()
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Exact::from_int(v)
    }
    fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }
    fn add(&self, o: &Self) -> Self {
        Exact {
            re: Rational::from(&self.re + &o.re),
            im: Rational::from(&self.im + &o.im),
        }
    }
    fn sub(&self, o: &Self) -> Self {
        Exact {
            re: Rational::from(&self.re - &o.re),
            im: Rational::from(&self.im - &o.im),
        }
    }
    fn mul(&self, o: &Self) -> Self {
        let re = Rational::from(&self.re * &o.re) - Rational::from(&self.im * &o.im);
        let im = Rational::from(&self.re * &o.im) + Rational::from(&self.im * &o.re);
        Exact { re, im }
    }
    fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero scalar");
        let n = o.norm_sqr();
        let re = (Rational::from(&self.re * &o.re) + Rational::from(&self.im * &o.im)) / n.clone();
        let im = (Rational::from(&self.im * &o.re) - Rational::from(&self.re * &o.im)) / n;
        Exact { re, im }
    }
    fn neg(&self) -> Self {
        Exact { re: -self.re.clone(), im: -self.im.clone() }
    }
}

// ---------------------------------------------------------------------------
// Arbitrary-precision complex floats
// ---------------------------------------------------------------------------

/// Complex number over MPFR floats. Precision >= 64 bits, uniform per value.
#[derive(Clone, PartialEq, Debug)]
pub struct Cplx {
    pub re: Float,
    pub im: Float,
}

/// pi at the given precision.
pub fn real_pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

/// Rational -> float at the given precision.
pub fn real_from_rational(q: &Rational, prec: u32) -> Float {
    Float::with_val(prec, q)
}

/// Decimal string for JSON/CSV output, `digits` significant digits.
pub fn float_to_decimal(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.to_string_radix(10, Some(digits))
}

impl Cplx {
    pub fn new(prec: u32) -> Self {
        Cplx { re: Float::new(prec), im: Float::new(prec) }
    }

    pub fn with_f64(prec: u32, re: f64, im: f64) -> Self {
        Cplx { re: Float::with_val(prec, re), im: Float::with_val(prec, im) }
    }

    pub fn from_real(re: Float) -> Self {
        let p = re.prec();
        Cplx { im: Float::new(p), re }
    }

    pub fn from_parts(re: Float, im: Float) -> Self {
        Cplx { re, im }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn zero(prec: u32) -> Self {
        Cplx::new(prec)
    }

    pub fn one(prec: u32) -> Self {
        Cplx { re: Float::with_val(prec, 1), im: Float::new(prec) }
    }

    pub fn i(prec: u32) -> Self {
        Cplx { re: Float::new(prec), im: Float::with_val(prec, 1) }
    }

    pub fn conj(&self) -> Self {
        Cplx { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn abs(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.clone().hypot(&self.im))
    }

    /// Principal argument in (-pi, pi].
    pub fn arg(&self) -> Float {
        self.im.clone().atan2(&self.re)
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, &self.re * &self.re) + Float::with_val(p, &self.im * &self.im)
    }

    pub fn scale(&self, s: &Float) -> Self {
        let p = self.prec().max(s.prec());
        Cplx {
            re: Float::with_val(p, &self.re * s),
            im: Float::with_val(p, &self.im * s),
        }
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let p = self.prec();
        if self.im.is_zero() && self.re >= 0 {
            return Cplx { re: self.re.clone().sqrt(), im: Float::new(p) };
        }
        let r = self.abs();
        let sr = r.sqrt();
        let half_arg = self.arg() / 2u32;
        let (s, c) = half_arg.sin_cos(Float::new(p));
        Cplx {
            re: Float::with_val(p, &sr * &c),
            im: Float::with_val(p, &sr * &s),
        }
    }

    /// Principal logarithm: ln|z| + i arg z.
    pub fn ln(&self) -> Self {
        Cplx { re: self.abs().ln(), im: self.arg() }
    }

    pub fn exp(&self) -> Self {
        let p = self.prec();
        let m = self.re.clone().exp();
        let (s, c) = self.im.clone().sin_cos(Float::new(p));
        Cplx {
            re: Float::with_val(p, &m * &c),
            im: Float::with_val(p, &m * &s),
        }
    }

    /// Principal power with a real float exponent: exp(a ln z).
    pub fn pow_real(&self, a: &Float) -> Self {
        let ln = self.ln();
        Cplx {
            re: Float::with_val(ln.prec().max(a.prec()), &ln.re * a),
            im: Float::with_val(ln.prec().max(a.prec()), &ln.im * a),
        }
        .exp()
    }

    /// Principal power with rational exponent.
    pub fn pow_ratio(&self, q: &Rational, prec: u32) -> Self {
        self.pow_real(&Float::with_val(prec, q))
    }

    pub fn pow_i64(&self, mut e: i64) -> Self {
        let p = self.prec();
        if e == 0 {
            return Cplx::one(p);
        }
        let invert = e < 0;
        if invert {
            e = -e;
        }
        let mut base = self.clone();
        let mut acc = Cplx::one(p);
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        if invert {
            Cplx::one(p).div(&acc)
        } else {
            acc
        }
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl fmt::Display for Cplx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            float_to_decimal(&self.re, 25),
            float_to_decimal(&self.im, 25)
        )
    }
}

impl Coeff for Cplx {
    fn zero_like(&self) -> Self {
        Cplx::new(self.prec())
    }
    fn one_like(&self) -> Self {
        Cplx::one(self.prec())
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Cplx { re: Float::with_val(self.prec(), v), im: Float::new(self.prec()) }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        let p = self.prec().max(o.prec());
        Cplx {
            re: Float::with_val(p, &self.re + &o.re),
            im: Float::with_val(p, &self.im + &o.im),
        }
    }
    fn sub(&self, o: &Self) -> Self {
        let p = self.prec().max(o.prec());
        Cplx {
            re: Float::with_val(p, &self.re - &o.re),
            im: Float::with_val(p, &self.im - &o.im),
        }
    }
    fn mul(&self, o: &Self) -> Self {
        let p = self.prec().max(o.prec());
        let re = Float::with_val(p, &self.re * &o.re) - Float::with_val(p, &self.im * &o.im);
        let im = Float::with_val(p, &self.re * &o.im) + Float::with_val(p, &self.im * &o.re);
        Cplx { re, im }
    }
    fn div(&self, o: &Self) -> Self {
        let p = self.prec().max(o.prec());
        let n = o.norm_sqr();
        let re = (Float::with_val(p, &self.re * &o.re) + Float::with_val(p, &self.im * &o.im)) / &n;
        let im = (Float::with_val(p, &self.im * &o.re) - Float::with_val(p, &self.re * &o.im)) / &n;
        Cplx { re, im }
    }
    fn neg(&self) -> Self {
        Cplx { re: -self.re.clone(), im: -self.im.clone() }
    }
}

/// 10^(-k) at the given precision.
pub fn pow10(k: i32, prec: u32) -> Float {
    Float::with_val(prec, 10).pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_gaussian_rationals() {
        assert_eq!(Exact::parse("1/3").unwrap(), Exact::from_ratio(1, 3));
        assert_eq!(Exact::parse("-2/5").unwrap(), Exact::from_ratio(-2, 5));
        assert_eq!(Exact::parse("7").unwrap(), Exact::from_int(7));
        assert_eq!(Exact::parse("i").unwrap(), Exact::imag_ratio(1, 1));
        assert_eq!(Exact::parse("-i").unwrap(), Exact::imag_ratio(-1, 1));
        assert_eq!(Exact::parse("1/2*i").unwrap(), Exact::imag_ratio(1, 2));
        assert_eq!(Exact::parse("2i").unwrap(), Exact::imag_ratio(2, 1));
        assert_eq!(
            Exact::parse("-1+1/2*i").unwrap(),
            Exact::new(Rational::from(-1), Rational::from((1, 2)))
        );
        assert_eq!(
            Exact::parse("3/4-i").unwrap(),
            Exact::new(Rational::from((3, 4)), Rational::from(-1))
        );
        assert!(Exact::parse("").is_err());
        assert!(Exact::parse("1/0").is_err());
        assert!(Exact::parse("x+y").is_err());
    }

    #[test]
    fn exact_field_ops() {
        let a = Exact::new(Rational::from((1, 2)), Rational::from((1, 3)));
        let b = Exact::new(Rational::from(2), Rational::from((-1, 5)));
        let q = a.div(&b);
        assert_eq!(q.mul(&b), a);
        assert_eq!(a.sub(&a), Exact::zero());
        assert_eq!(a.mul(&a.one_like()), a);
    }

    #[test]
    fn display_roundtrip() {
        for s in ["1/3", "-2/5", "0", "1/2*i", "-1+1/2*i", "2-3/7*i"] {
            let v = Exact::parse(s).unwrap();
            let v2 = Exact::parse(&v.to_string()).unwrap();
            assert_eq!(v, v2);
        }
    }

    #[test]
    fn cplx_principal_branch() {
        let p = 128;
        let z = Cplx::with_f64(p, -1.0, 0.0);
        // arg(-1) = +pi (principal)
        let pi = real_pi(p);
        assert!((z.arg() - &pi).abs() < pow10(-30, p));
        let i = Cplx::i(p);
        let s = i.sqrt();
        // sqrt(i) = e^{i pi/4}
        let c = Float::with_val(p, 0.5f64).sqrt();
        assert!((s.re.clone() - &c).abs() < pow10(-30, p));
        assert!((s.im.clone() - &c).abs() < pow10(-30, p));
    }

    #[test]
    fn cplx_exp_ln_roundtrip() {
        let p = 192;
        let z = Cplx::with_f64(p, 0.7, -2.1);
        let w = z.ln().exp();
        assert!((w.re - &z.re).abs() < pow10(-50, p));
        assert!((w.im - &z.im).abs() < pow10(-50, p));
    }

    #[test]
    fn pow_ratio_cube_root_of_i() {
        let p = 256;
        let i = Cplx::i(p);
        let y = i.pow_ratio(&Rational::from((1, 3)), p);
        // principal cube root of i = e^{i pi/6}
        let pi = real_pi(p);
        let expect_re = Float::with_val(p, &pi / 6u32).cos();
        let expect_im = Float::with_val(p, &pi / 6u32).sin();
        assert!((y.re - expect_re).abs() < pow10(-70, p));
        assert!((y.im - expect_im).abs() < pow10(-70, p));
    }
}
