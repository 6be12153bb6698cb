//! Exact integers in `Z[w]`, `w = e^{2*pi*i/p}` a primitive p-th root of unity.
//!
//! Values are stored in the canonical basis `{1, w, ..., w^{p-2}}`: the
//! coordinate of `w^{p-1}` is eliminated via `1 + w + ... + w^{p-1} = 0` by
//! subtracting it from every other coordinate. Canonical coordinates are
//! unique, so equality and the "is this a rational integer" test are plain
//! coordinate comparisons. Every Walsh coefficient in this crate lives here;
//! magnitudes squared are computed in the ring, never in floating point.

use std::fmt;

/// An element of `Z[w_p]` in canonical coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    p: u64,
    /// Length `p - 1`; coordinate `j` multiplies `w^j`.
    coeffs: Vec<i128>,
}

/// Result of [`CyclotomicInt::magnitude_squared`]: `z * conj(z)` is a rational
/// integer exactly when its canonical form is constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MagnitudeSq {
    Rational(i128),
    NonRational(CyclotomicInt),
}

impl MagnitudeSq {
    pub fn as_rational(&self) -> Option<i128> {
        match self {
            MagnitudeSq::Rational(v) => Some(*v),
            MagnitudeSq::NonRational(_) => None,
        }
    }
}

fn ovf() -> ! {
    panic!("cyclotomic coefficient overflow");
}

impl CyclotomicInt {
    pub fn zero(p: u64) -> Self {
        assert!(p >= 3 && p % 2 == 1, "root order must be an odd prime");
        CyclotomicInt { p, coeffs: vec![0; (p - 1) as usize] }
    }

    pub fn from_int(p: u64, c: i128) -> Self {
        let mut z = Self::zero(p);
        z.coeffs[0] = c;
        z
    }

    /// `w^t` for any integer `t` (reduced mod `p`).
    pub fn omega_pow(p: u64, t: i64) -> Self {
        let mut ext = vec![0i128; p as usize];
        ext[t.rem_euclid(p as i64) as usize] = 1;
        Self::from_extended(p, &ext)
    }

    /// Builds `sum ext[e] * w^e` from coordinates over all exponents `0..p`.
    pub fn from_extended(p: u64, ext: &[i128]) -> Self {
        assert_eq!(ext.len(), p as usize);
        let last = ext[(p - 1) as usize];
        let coeffs = ext[..(p - 1) as usize]
            .iter()
            .map(|&c| c.checked_sub(last).unwrap_or_else(|| ovf()))
            .collect();
        CyclotomicInt { p, coeffs }
    }

    pub fn root_order(&self) -> u64 {
        self.p
    }

    /// Canonical coordinates over `{1, w, ..., w^{p-2}}`.
    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `Some(c)` iff the canonical form is the rational integer `c`.
    pub fn as_rational(&self) -> Option<i128> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    fn assert_order(&self, rhs: &Self) {
        assert_eq!(self.p, rhs.p, "mixed cyclotomic root orders");
    }

    pub fn scale(&self, k: i128) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| c.checked_mul(k).unwrap_or_else(|| ovf()))
            .collect();
        CyclotomicInt { p: self.p, coeffs }
    }

    /// Multiplication by `w^j`: a rotation of the exponent coordinates.
    pub fn mul_omega_pow(&self, j: i64) -> Self {
        let p = self.p as usize;
        let shift = j.rem_euclid(self.p as i64) as usize;
        let mut ext = vec![0i128; p];
        for (e, &c) in self.coeffs.iter().enumerate() {
            ext[(e + shift) % p] = c;
        }
        Self::from_extended(self.p, &ext)
    }

    /// The ring automorphism `w -> w^{-1}` (complex conjugation).
    pub fn conjugate(&self) -> Self {
        let p = self.p as usize;
        let mut ext = vec![0i128; p];
        for (e, &c) in self.coeffs.iter().enumerate() {
            ext[(p - e) % p] = c;
        }
        Self::from_extended(self.p, &ext)
    }

    /// `z * conj(z)`, exact; rational precisely when the product's canonical
    /// form is constant.
    pub fn magnitude_squared(&self) -> MagnitudeSq {
        let prod = self * &self.conjugate();
        match prod.as_rational() {
            Some(v) => MagnitudeSq::Rational(v),
            None => MagnitudeSq::NonRational(prod),
        }
    }

    /// Embedding into `C` in double precision.
    pub fn to_complex(&self) -> (f64, f64) {
        let (mut re, mut im) = (0.0, 0.0);
        for (e, &c) in self.coeffs.iter().enumerate() {
            let theta = 2.0 * std::f64::consts::PI * e as f64 / self.p as f64;
            re += c as f64 * theta.cos();
            im += c as f64 * theta.sin();
        }
        (re, im)
    }

    /// Exact division by a rational integer.
    ///
    /// Panics unless every canonical coordinate is divisible by `k`; the Walsh
    /// shift identities guarantee divisibility wherever this is used.
    pub fn div_exact(&self, k: i128) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| {
                assert!(c % k == 0, "inexact cyclotomic division by {k}");
                c / k
            })
            .collect();
        CyclotomicInt { p: self.p, coeffs }
    }
}

impl std::ops::Add<&CyclotomicInt> for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.assert_order(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| a.checked_add(b).unwrap_or_else(|| ovf()))
            .collect();
        CyclotomicInt { p: self.p, coeffs }
    }
}

impl std::ops::Sub<&CyclotomicInt> for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn sub(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.assert_order(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| a.checked_sub(b).unwrap_or_else(|| ovf()))
            .collect();
        CyclotomicInt { p: self.p, coeffs }
    }
}

impl std::ops::Mul<&CyclotomicInt> for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.assert_order(rhs);
        let p = self.p as usize;
        let mut ext = vec![0i128; p];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let t = a.checked_mul(b).unwrap_or_else(|| ovf());
                let slot = &mut ext[(i + j) % p];
                *slot = slot.checked_add(t).unwrap_or_else(|| ovf());
            }
        }
        CyclotomicInt::from_extended(self.p, &ext)
    }
}

impl std::ops::Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        self.scale(-1)
    }
}

macro_rules! forward_cyc_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<CyclotomicInt> for CyclotomicInt {
            type Output = CyclotomicInt;
            fn $method(self, rhs: CyclotomicInt) -> CyclotomicInt {
                (&self).$method(&rhs)
            }
        }
        impl<'b> std::ops::$trait<&'b CyclotomicInt> for CyclotomicInt {
            type Output = CyclotomicInt;
            fn $method(self, rhs: &'b CyclotomicInt) -> CyclotomicInt {
                (&self).$method(rhs)
            }
        }
        impl std::ops::$trait<CyclotomicInt> for &CyclotomicInt {
            type Output = CyclotomicInt;
            fn $method(self, rhs: CyclotomicInt) -> CyclotomicInt {
                self.$method(&rhs)
            }
        }
    };
}
forward_cyc_binop!(Add, add);
forward_cyc_binop!(Sub, sub);
forward_cyc_binop!(Mul, mul);

impl std::ops::Neg for CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        -&self
    }
}

impl fmt::Display for CyclotomicInt {
    /// `c0 + c1*w + ... + c_{p-2}*w^{p-2}` with zero terms omitted; `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if e == 0 {
                    write!(f, "{c}")?;
                } else if e == 1 {
                    write!(f, "{c}*w")?;
                } else {
                    write!(f, "{c}*w^{e}")?;
                }
                first = false;
            } else {
                let sign = if c < 0 { '-' } else { '+' };
                let a = c.unsigned_abs();
                if e == 0 {
                    write!(f, " {sign} {a}")?;
                } else if e == 1 {
                    write!(f, " {sign} {a}*w")?;
                } else {
                    write!(f, " {sign} {a}*w^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(p: u64, t: i64) -> CyclotomicInt {
        CyclotomicInt::omega_pow(p, t)
    }

    #[test]
    fn root_sum_identity() {
        // (1 + w) + w^2 = 0 for p = 3.
        let z = CyclotomicInt::from_int(3, 1) + w(3, 1) + w(3, 2);
        assert!(z.is_zero());
        assert_eq!(w(3, 1) * w(3, 2), CyclotomicInt::from_int(3, 1));
        assert_eq!(w(5, 3).mul_omega_pow(2), CyclotomicInt::from_int(5, 1));
    }

    #[test]
    fn p5_product_matches_float_oracle() {
        // (w - w^4)(w^2 - w^3) over p = 5; the canonical form was frozen from
        // an independent complex-float expansion.
        let z = (w(5, 1) - w(5, 4)) * (w(5, 2) - w(5, 3));
        assert_eq!(z.coeffs(), &[1, 0, 2, 2]);
        let (re, im) = z.to_complex();
        assert!((re - (-f64::sqrt(5.0))).abs() < 1e-9);
        assert!(im.abs() < 1e-9);
    }

    #[test]
    fn conjugation() {
        assert_eq!(w(5, 1).conjugate(), w(5, 4));
        assert_eq!(CyclotomicInt::from_int(7, -9).conjugate(), CyclotomicInt::from_int(7, -9));
        // p = 3: conj(a + b*w) = (a - b) - b*w.
        for a in -6i128..=6 {
            for b in -6i128..=6 {
                let z = CyclotomicInt::from_int(3, a) + w(3, 1).scale(b);
                let c = z.conjugate();
                assert_eq!(c.coeffs(), &[a - b, -b]);
                assert_eq!(c.conjugate(), z);
            }
        }
    }

    #[test]
    fn magnitudes() {
        assert_eq!(CyclotomicInt::zero(3).magnitude_squared(), MagnitudeSq::Rational(0));
        // -3^{k+1} w has |z|^2 = 3^{2k+2}; k = 1 here.
        let z = w(3, 1).scale(-9);
        assert_eq!(z.magnitude_squared(), MagnitudeSq::Rational(81));
        // w - w^2 = sqrt(-3).
        let z = w(3, 1) - w(3, 2);
        assert_eq!(z.magnitude_squared(), MagnitudeSq::Rational(3));
        // 1 + w over p = 5 has irrational |z|^2.
        let z = CyclotomicInt::from_int(5, 1) + w(5, 1);
        assert!(matches!(z.magnitude_squared(), MagnitudeSq::NonRational(_)));
    }

    #[test]
    fn p3_magnitude_closed_form() {
        // |a + b*w|^2 = a^2 - a*b + b^2 serves as an independent oracle.
        for a in -10i128..=10 {
            for b in -10i128..=10 {
                let z = CyclotomicInt::from_int(3, a) + w(3, 1).scale(b);
                assert_eq!(z.magnitude_squared(), MagnitudeSq::Rational(a * a - a * b + b * b));
            }
        }
    }

    #[test]
    fn magnitude_invariant_under_rotation() {
        let z = CyclotomicInt::from_int(5, 2) + w(5, 1).scale(-3) + w(5, 3).scale(7);
        let m = z.magnitude_squared();
        for j in 0..5 {
            assert_eq!(z.mul_omega_pow(j).magnitude_squared(), m);
        }
    }

    #[test]
    fn to_complex_basics() {
        assert_eq!(CyclotomicInt::from_int(3, 1).to_complex(), (1.0, 0.0));
        let (re, im) = w(3, 1).to_complex();
        assert!((re + 0.5).abs() < 1e-12 && (im - 0.75f64.sqrt()).abs() < 1e-12);
        let (re, im) = CyclotomicInt::from_int(3, -3).to_complex();
        assert!((re + 3.0).abs() < 1e-12 && im.abs() < 1e-12);
    }

    #[test]
    fn ring_axioms_exhaustive_p3() {
        // All triples with coordinates in [-5, 5].
        let vals: Vec<CyclotomicInt> = (-5i128..=5)
            .flat_map(|a| (-5i128..=5).map(move |b| {
                CyclotomicInt::from_int(3, a) + CyclotomicInt::omega_pow(3, 1).scale(b)
            }))
            .collect();
        for x in &vals {
            for y in &vals {
                let xy = x * y;
                for z in &vals {
                    assert_eq!(&xy * z, x * &(y * z));
                    assert_eq!(x * &(y + z), &(x * y) + &(x * z));
                }
            }
        }
    }

    #[test]
    fn exact_division() {
        let z = (w(3, 1).scale(6) + CyclotomicInt::from_int(3, -9)).div_exact(3);
        assert_eq!(z, w(3, 1).scale(2) + CyclotomicInt::from_int(3, -3));
    }

    #[test]
    #[should_panic(expected = "inexact")]
    fn inexact_division_panics() {
        let _ = CyclotomicInt::from_int(3, 4).div_exact(3);
    }

    #[test]
    fn display_format() {
        assert_eq!(CyclotomicInt::zero(3).to_string(), "0");
        assert_eq!(CyclotomicInt::from_int(3, -81).to_string(), "-81");
        assert_eq!(w(3, 1).scale(-81).to_string(), "-81*w");
        let z = CyclotomicInt::from_int(5, 2) - w(5, 1) + w(5, 3).scale(4);
        assert_eq!(z.to_string(), "2 - 1*w + 4*w^3");
    }

    proptest! {
        #[test]
        fn float_magnitude_agrees(p in prop::sample::select(vec![3u64, 5, 7]),
                                  coords in prop::collection::vec(-50i128..=50, 6)) {
            let mut z = CyclotomicInt::zero(p);
            for (e, &c) in coords.iter().take((p - 1) as usize).enumerate() {
                z = z + CyclotomicInt::omega_pow(p, e as i64).scale(c);
            }
            let (re, im) = z.to_complex();
            let float_mag = re * re + im * im;
            let exact = match z.magnitude_squared() {
                MagnitudeSq::Rational(v) => v as f64,
                MagnitudeSq::NonRational(c) => c.to_complex().0,
            };
            let tol = 1e-6 * float_mag.abs().max(1.0);
            prop_assert!((float_mag - exact).abs() <= tol);
        }

        #[test]
        fn conjugation_is_multiplicative(a in prop::collection::vec(-9i128..=9, 4),
                                         b in prop::collection::vec(-9i128..=9, 4)) {
            let mk = |v: &[i128]| {
                let mut z = CyclotomicInt::zero(5);
                for (e, &c) in v.iter().enumerate() {
                    z = z + CyclotomicInt::omega_pow(5, e as i64).scale(c);
                }
                z
            };
            let (x, y) = (mk(&a), mk(&b));
            prop_assert_eq!((&x * &y).conjugate(), x.conjugate() * y.conjugate());
        }
    }
}
