//! Exact arithmetic in `Z_p` and `GF(p^n)` for odd primes `p`, plus the trace,
//! norm and quadratic-character maps.
//!
//! Elements are coefficient vectors in the polynomial basis `1, a, ..., a^{n-1}`
//! where `a` is the class of `x` modulo the field modulus. The canonical index
//! of an element is the little-endian base-`p` packing of its coefficients, so
//! index `i` encodes `sum c_j a^j` with `c_j` the base-`p` digits of `i`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug)]
struct FieldRepr {
    p: u64,
    n: usize,
    /// Ascending coefficients, monic, length `n + 1`.
    modulus: Vec<u64>,
    /// `x^n = sum reduction[k] x^k` modulo the field modulus.
    reduction: Vec<u64>,
    /// `p^n`.
    size: u64,
    /// Whether the class of `x` generates the multiplicative group.
    primitive: bool,
}

/// A concrete `GF(p^n)` with a fixed monic irreducible modulus.
///
/// Cheap to clone; all state is immutable and shared.
#[derive(Clone)]
pub struct Field(Arc<FieldRepr>);

/// An element of a [`Field`], held as its polynomial-basis coefficients.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    coeffs: Vec<u64>,
}

/// Membership view of the subfield `F_{p^k}` inside `F_{p^n}`, `k | n`.
#[derive(Clone)]
pub struct SubfieldHandle {
    field: Field,
    k: usize,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.spec_string())
    }
}

impl Field {
    /// Validates `p` and the modulus, confirms irreducibility (Rabin's test)
    /// and computes whether the class of `x` is a multiplicative generator.
    pub fn new(p: u64, modulus: &[u64]) -> Result<Field> {
        if p < 3 || p % 2 == 0 || !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(Error::FieldTooLarge);
        }
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::NotMonic);
        }
        let n = modulus.len() - 1;
        let size = (p as u128)
            .checked_pow(n as u32)
            .filter(|&s| s < 1 << 63)
            .ok_or(Error::FieldTooLarge)?;
        let size = size as u64;
        check_irreducible(p, modulus)?;
        let reduction: Vec<u64> = modulus[..n].iter().map(|&c| (p - c) % p).collect();
        let repr = FieldRepr {
            p,
            n,
            modulus: modulus.to_vec(),
            reduction,
            size,
            primitive: false,
        };
        let mut field = Field(Arc::new(repr));
        let primitive = generator_order(&field) == size - 1;
        Arc::get_mut(&mut field.0).unwrap().primitive = primitive;
        Ok(field)
    }

    /// Parses the field-spec format `p=<prime>,n=<deg>,mod=[c0,c1,...,cn]`.
    pub fn parse(spec: &str) -> Result<Field> {
        let mut cur = Cursor::new(spec);
        cur.expect("p=")?;
        let p = cur.number()?;
        cur.expect(",n=")?;
        let n = cur.number()? as usize;
        cur.expect(",mod=[")?;
        let mut modulus = Vec::new();
        loop {
            modulus.push(cur.number()?);
            if cur.eat(',') {
                continue;
            }
            cur.expect("]")?;
            break;
        }
        cur.end()?;
        if modulus.len() != n + 1 {
            return Err(Error::Parse {
                pos: spec.len(),
                msg: format!("modulus has {} coefficients, expected n+1 = {}", modulus.len(), n + 1),
            });
        }
        Field::new(p, &modulus)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    /// Extension degree `n`.
    pub fn degree(&self) -> usize {
        self.0.n
    }

    /// `p^n`.
    pub fn size(&self) -> u64 {
        self.0.size
    }

    /// Ascending modulus coefficients (length `n + 1`, monic).
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn is_primitive(&self) -> bool {
        self.0.primitive
    }

    pub fn spec_string(&self) -> String {
        let mods: Vec<String> = self.0.modulus.iter().map(|c| c.to_string()).collect();
        format!("p={},n={},mod=[{}]", self.0.p, self.0.n, mods.join(","))
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.scalar(1)
    }

    /// The constant `c mod p` embedded in the prime subfield.
    pub fn scalar(&self, c: u64) -> FieldElement {
        let mut coeffs = vec![0; self.0.n];
        coeffs[0] = c % self.0.p;
        FieldElement { field: self.clone(), coeffs }
    }

    /// The class of `x` modulo the field modulus.
    pub fn generator(&self) -> FieldElement {
        let n = self.0.n;
        let mut coeffs = vec![0; n];
        if n == 1 {
            coeffs[0] = self.0.reduction[0];
        } else {
            coeffs[1] = 1;
        }
        FieldElement { field: self.clone(), coeffs }
    }

    /// `g^k` for the generator `g`; requires a primitive modulus.
    pub fn generator_power(&self, k: u64) -> Result<FieldElement> {
        if !self.0.primitive {
            return Err(Error::NotPrimitive);
        }
        Ok(self.generator().pow(k as u128))
    }

    /// The element with the given canonical index.
    ///
    /// Panics if `index >= p^n`.
    pub fn element(&self, index: u64) -> FieldElement {
        assert!(index < self.0.size, "element index out of range");
        let mut coeffs = vec![0; self.0.n];
        let mut v = index;
        for c in coeffs.iter_mut() {
            *c = v % self.0.p;
            v /= self.0.p;
        }
        FieldElement { field: self.clone(), coeffs }
    }

    /// Builds an element from explicit coefficients (length `n`, entries in `[0, p)`).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.0.n || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(Error::BadCoefficients);
        }
        Ok(FieldElement { field: self.clone(), coeffs: coeffs.to_vec() })
    }

    /// Parses `g^<k>` (primitive moduli only) or `[c0,...,c_{n-1}]`.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("g^") {
            let k: u64 = rest.trim().parse().map_err(|_| Error::Parse {
                pos: 2,
                msg: format!("invalid generator exponent {rest:?}"),
            })?;
            return self.generator_power(k);
        }
        if s.starts_with('[') && s.ends_with(']') {
            let inner = &s[1..s.len() - 1];
            let mut coeffs = Vec::new();
            for (i, tok) in inner.split(',').enumerate() {
                coeffs.push(tok.trim().parse::<u64>().map_err(|_| Error::Parse {
                    pos: i,
                    msg: format!("invalid coefficient {tok:?}"),
                })?);
            }
            return self.from_coeffs(&coeffs);
        }
        Err(Error::Parse { pos: 0, msg: format!("expected g^<k> or [c0,...], got {s:?}") })
    }

    /// All field elements in canonical index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.size).map(move |i| self.element(i))
    }

    /// The basis elements `1, a, ..., a^{n-1}`.
    pub fn basis(&self) -> Vec<FieldElement> {
        let g = self.generator();
        let mut out = Vec::with_capacity(self.0.n);
        let mut cur = self.one();
        for _ in 0..self.0.n {
            out.push(cur.clone());
            cur = &cur * &g;
        }
        out
    }

    /// Discrete log base `g` by linear scan; available for primitive moduli of
    /// size at most `3^8`.
    pub fn discrete_log(&self, x: &FieldElement) -> Option<u64> {
        if !self.0.primitive || self.0.size > 6561 || x.is_zero() {
            return None;
        }
        let g = self.generator();
        let mut cur = self.one();
        for k in 0..self.0.size - 1 {
            if cur == *x {
                return Some(k);
            }
            cur = &cur * &g;
        }
        None
    }

    pub fn subfield(&self, k: usize) -> Result<SubfieldHandle> {
        if k == 0 || self.0.n % k != 0 {
            return Err(Error::NotADivisor { k, n: self.0.n });
        }
        Ok(SubfieldHandle { field: self.clone(), k })
    }

    /// Divisors of `n` in ascending order (degrees of the subfields).
    pub fn subfield_degrees(&self) -> Vec<usize> {
        (1..=self.0.n).filter(|k| self.0.n % k == 0).collect()
    }
}

impl SubfieldHandle {
    pub fn degree(&self) -> usize {
        self.k
    }

    /// `x` lies in `F_{p^k}` iff `x^{p^k} = x`.
    pub fn contains(&self, x: &FieldElement) -> bool {
        assert_eq!(self.field, x.field, "element from a different field");
        x.frobenius(self.k) == *x
    }

    /// Indices of the subfield elements, ascending.
    pub fn element_indices(&self) -> Vec<u64> {
        (0..self.field.size())
            .filter(|&i| self.contains(&self.field.element(i)))
            .collect()
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Canonical index: little-endian base-`p` packing of the coefficients.
    pub fn index(&self) -> u64 {
        let p = self.field.0.p;
        let mut v = 0u64;
        for &c in self.coeffs.iter().rev() {
            v = v * p + c;
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `self^e` by square-and-multiply; `x^0 = 1` for every `x`.
    pub fn pow(&self, mut e: u128) -> FieldElement {
        let mut result = self.field.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    /// `x^{p^k}`.
    pub fn frobenius(&self, k: usize) -> FieldElement {
        let pk = (self.field.0.p as u128).pow(k as u32);
        self.pow(pk)
    }

    /// Multiplicative inverse via `x^{p^n - 2}`.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.field.0.size as u128 - 2))
    }

    pub fn try_div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        Ok(self * &rhs.inv()?)
    }

    /// `Tr_k^n(x) = x + x^{p^k} + ... + x^{p^{n-k}}`, a member of `F_{p^k}`.
    pub fn trace(&self, k: usize) -> Result<FieldElement> {
        let n = self.field.0.n;
        if k == 0 || n % k != 0 {
            return Err(Error::NotADivisor { k, n });
        }
        let mut acc = self.clone();
        let mut cur = self.clone();
        for _ in 1..n / k {
            cur = cur.frobenius(k);
            acc = &acc + &cur;
        }
        debug_assert!(acc.frobenius(k) == acc, "trace landed outside the subfield");
        Ok(acc)
    }

    /// Absolute trace `Tr_1^n(x)` as a scalar in `Z_p`.
    pub fn trace_to_prime(&self) -> u64 {
        let t = self.trace(1).expect("1 divides n");
        assert!(
            t.coeffs[1..].iter().all(|&c| c == 0),
            "absolute trace is not a prime-field constant"
        );
        t.coeffs[0]
    }

    /// `Tr_1^k(x)` for `x` already in `F_{p^k}`: the subfield's own absolute trace.
    pub fn subfield_trace_to_prime(&self, k: usize) -> Result<u64> {
        let n = self.field.0.n;
        if k == 0 || n % k != 0 {
            return Err(Error::NotADivisor { k, n });
        }
        if self.frobenius(k) != *self {
            return Err(Error::NotInSubfield { k });
        }
        let mut acc = self.clone();
        let mut cur = self.clone();
        for _ in 1..k {
            cur = cur.frobenius(1);
            acc = &acc + &cur;
        }
        assert!(
            acc.coeffs[1..].iter().all(|&c| c == 0),
            "subfield trace is not a prime-field constant"
        );
        Ok(acc.coeffs[0])
    }

    /// Norm `N_l^n(x) = x^{(p^n-1)/(p^l-1)}` onto `F_{p^l}`, with `N(0) = 0`.
    pub fn norm(&self, l: usize) -> Result<FieldElement> {
        let n = self.field.0.n;
        if l == 0 || n % l != 0 {
            return Err(Error::NotADivisor { k: l, n });
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let e = (self.field.0.size as u128 - 1) / ((self.field.0.p as u128).pow(l as u32) - 1);
        let r = self.pow(e);
        debug_assert!(r.frobenius(l) == r, "norm landed outside the subfield");
        Ok(r)
    }

    /// Quadratic character: `0` at zero, `+1` on nonzero squares, `-1` otherwise.
    pub fn quadratic_character(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let r = self.pow((self.field.0.size as u128 - 1) / 2);
        if r == self.field.one() {
            1
        } else {
            assert!(
                r == self.field.scalar(self.field.0.p - 1),
                "x^((q-1)/2) must be +-1 for nonzero x"
            );
            -1
        }
    }

    /// Formats as `[c0,c1,...]`, annotated with the generator power when the
    /// field supports a discrete log scan.
    pub fn display_annotated(&self) -> String {
        match self.field.discrete_log(self) {
            Some(k) => format!("{self} (g^{k})"),
            None => format!("{self}"),
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}
impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn assert_same_field(a: &FieldElement, b: &FieldElement) {
    assert!(a.field == b.field, "elements from different fields");
}

impl<'b> std::ops::Add<&'b FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &'b FieldElement) -> FieldElement {
        assert_same_field(self, rhs);
        let p = self.field.0.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        FieldElement { field: self.field.clone(), coeffs }
    }
}

impl<'b> std::ops::Sub<&'b FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &'b FieldElement) -> FieldElement {
        assert_same_field(self, rhs);
        let p = self.field.0.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        FieldElement { field: self.field.clone(), coeffs }
    }
}

impl<'b> std::ops::Mul<&'b FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &'b FieldElement) -> FieldElement {
        assert_same_field(self, rhs);
        let repr = &self.field.0;
        let (p, n) = (repr.p, repr.n);
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &ai) in self.coeffs.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in rhs.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % p;
            }
        }
        for d in (n..2 * n - 1).rev() {
            let c = prod[d];
            if c != 0 {
                prod[d] = 0;
                for k in 0..n {
                    prod[d - n + k] = (prod[d - n + k] + c * repr.reduction[k]) % p;
                }
            }
        }
        prod.truncate(n);
        FieldElement { field: self.field.clone(), coeffs: prod }
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let p = self.field.0.p;
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement { field: self.field.clone(), coeffs }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl<'b> std::ops::$trait<&'b FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'b FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl std::ops::$trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

// ---------------------------------------------------------------------------
// Validation helpers: primality, factorization and Z_p[x] arithmetic.
// ---------------------------------------------------------------------------

fn is_prime_u64(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if m == q {
            return true;
        }
        if m % q == 0 {
            return false;
        }
    }
    // Deterministic Miller-Rabin for u64.
    let d = (m - 1) >> (m - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, m);
        if x == 1 || x == m - 1 {
            continue;
        }
        let mut e = d;
        while e != m - 1 {
            x = mul_mod_u64(x, x, m);
            e <<= 1;
            if x == m - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod_u64(r, a, m);
        }
        a = mul_mod_u64(a, a, m);
        e >>= 1;
    }
    r
}

/// Prime factorization of a u64 (trial division plus Pollard's rho).
pub(crate) fn factorize_u64(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        while m % q == 0 {
            out.push(q);
            m /= q;
        }
    }
    let mut stack = vec![m];
    while let Some(v) = stack.pop() {
        if v == 1 {
            continue;
        }
        if is_prime_u64(v) {
            out.push(v);
            continue;
        }
        let d = pollard_rho(v);
        stack.push(d);
        stack.push(v / d);
    }
    out.sort_unstable();
    out
}

fn pollard_rho(m: u64) -> u64 {
    if m % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod_u64(x, x, m) + c) % m;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x.abs_diff(y), m);
        }
        if d != m {
            return d;
        }
        c += 1;
    }
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

fn generator_order(field: &Field) -> u64 {
    let size = field.size();
    let g = field.generator();
    let one = field.one();
    let mut order = size - 1;
    let mut primes = factorize_u64(size - 1);
    primes.dedup();
    for q in primes {
        while order % q == 0 && g.pow((order / q) as u128) == one {
            order /= q;
        }
    }
    order
}

// Dense Z_p[x] helpers for the irreducibility test; polynomials are ascending
// coefficient vectors with no trailing zeros.

fn zp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn zp_mulmod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let n = modulus.len() - 1;
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    for d in (n..prod.len()).rev() {
        let c = prod[d];
        if c != 0 {
            prod[d] = 0;
            for k in 0..n {
                prod[d - n + k] = (prod[d - n + k] + c * (p - modulus[k]) % p) % p;
            }
        }
    }
    prod.truncate(n);
    zp_trim(&mut prod);
    prod
}

fn zp_powmod(base: &[u64], mut e: u128, modulus: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = zp_mulmod(&result, &b, modulus, p);
        }
        b = zp_mulmod(&b, &b, modulus, p);
        e >>= 1;
    }
    result
}

fn zp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    zp_trim(&mut a);
    zp_trim(&mut b);
    while !b.is_empty() {
        // a <- a mod b
        let inv_lead = pow_mod_u64(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() && !a.is_empty() {
            let c = mul_mod_u64(*a.last().unwrap(), inv_lead, p);
            let off = a.len() - b.len();
            for (k, &bk) in b.iter().enumerate() {
                a[off + k] = (a[off + k] + (p - mul_mod_u64(c, bk, p)) % p) % p;
            }
            zp_trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

fn zp_sub_x(h: &[u64], p: u64) -> Vec<u64> {
    let mut d = h.to_vec();
    if d.len() < 2 {
        d.resize(2, 0);
    }
    d[1] = (d[1] + p - 1) % p;
    zp_trim(&mut d);
    d
}

/// Rabin's irreducibility test: `x^{p^n} = x (mod f)` and
/// `gcd(x^{p^{n/q}} - x, f) = 1` for every prime `q | n`.
fn check_irreducible(p: u64, modulus: &[u64]) -> Result<()> {
    let n = modulus.len() - 1;
    if n == 1 {
        return Ok(());
    }
    let x = vec![0u64, 1];
    let pn = (p as u128).pow(n as u32);
    let xq = zp_powmod(&x, pn, modulus, p);
    let mut irreducible = xq == x;
    if irreducible {
        let mut primes = factorize_u64(n as u64);
        primes.dedup();
        for q in primes {
            let h = zp_powmod(&x, (p as u128).pow((n / q as usize) as u32), modulus, p);
            let g = zp_gcd(&zp_sub_x(&h, p), modulus, p);
            if g.len() > 1 {
                irreducible = false;
                break;
            }
        }
    }
    if irreducible {
        return Ok(());
    }
    Err(Error::Reducible { factor_degree: smallest_factor_degree(p, modulus) })
}

/// Smallest degree of an irreducible factor, located with a distinct-degree scan.
fn smallest_factor_degree(p: u64, modulus: &[u64]) -> usize {
    let n = modulus.len() - 1;
    let x = vec![0u64, 1];
    for d in 1..=n / 2 {
        let h = zp_powmod(&x, (p as u128).pow(d as u32), modulus, p);
        let g = zp_gcd(&zp_sub_x(&h, p), modulus, p);
        if g.len() > 1 {
            return d;
        }
    }
    n
}

// Minimal cursor for the field-spec format; errors carry byte positions.
struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { s: s.trim(), pos: 0 }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.s[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            Ok(())
        } else {
            Err(Error::Parse { pos: self.pos, msg: format!("expected {tok:?}") })
        }
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.s[self.pos..].starts_with(ch) {
            self.pos += ch.len_utf8();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64> {
        let rest = &self.s[self.pos..];
        let len = rest.chars().take_while(|c| c.is_ascii_digit()).count();
        if len == 0 {
            return Err(Error::Parse { pos: self.pos, msg: "expected a number".into() });
        }
        let v = rest[..len].parse().map_err(|_| Error::Parse {
            pos: self.pos,
            msg: "number too large".into(),
        })?;
        self.pos += len;
        Ok(v)
    }

    fn end(&mut self) -> Result<()> {
        if self.pos == self.s.len() {
            Ok(())
        } else {
            Err(Error::Parse { pos: self.pos, msg: "trailing input".into() })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields;

    #[test]
    fn conway_moduli_are_primitive() {
        for f in [
            fields::f3_6(),
            fields::f3_4(),
            fields::f7_4(),
            fields::f5_3(),
            fields::f9(),
            fields::f3_5(),
            fields::f5_2(),
            fields::f7_2(),
            fields::f5_4(),
        ] {
            assert!(f.is_primitive(), "{} should be primitive", f.spec_string());
        }
    }

    #[test]
    fn x2_plus_1_is_irreducible_but_not_primitive() {
        let f = Field::new(3, &[1, 0, 1]).unwrap();
        assert_eq!(f.size(), 9);
        assert!(!f.is_primitive());
        assert_eq!(f.generator_power(1), Err(Error::NotPrimitive));
    }

    #[test]
    fn x2_minus_1_is_reducible() {
        assert_eq!(
            Field::new(3, &[2, 0, 1]),
            Err(Error::Reducible { factor_degree: 1 })
        );
    }

    #[test]
    fn rejects_non_primes_and_bad_moduli() {
        assert_eq!(Field::new(9, &[1, 0, 1]), Err(Error::NotPrime(9)));
        assert_eq!(Field::new(2, &[1, 1]), Err(Error::NotPrime(2)));
        assert_eq!(Field::new(3, &[1, 0, 2]), Err(Error::NotMonic));
        assert_eq!(Field::new(3, &[1]), Err(Error::NotMonic));
        assert_eq!(Field::new(3, &[5, 0, 1]), Err(Error::NotMonic));
    }

    #[test]
    fn generator_exponent_arithmetic() {
        let f = fields::f3_4();
        let a10 = f.generator_power(10).unwrap();
        let a71 = f.generator_power(71).unwrap();
        assert_eq!(&a10 * &a71, f.generator_power(1).unwrap());

        let f6 = fields::f3_6();
        let a84 = f6.generator_power(84).unwrap();
        assert_eq!(a84.inv().unwrap(), f6.generator_power(644).unwrap());
        let a4 = f6.generator_power(4).unwrap();
        assert_eq!(a4.pow(27), f6.generator_power(108).unwrap());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let f = fields::f9();
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(f.one().try_div(&f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn encode_decode_roundtrip() {
        for f in [fields::f9(), fields::f5_2()] {
            for i in 0..f.size() {
                assert_eq!(f.element(i).index(), i);
            }
        }
    }

    #[test]
    fn frobenius_fixed_points_exhaustive() {
        let f = fields::f3_6();
        for x in f.elements() {
            assert_eq!(x.frobenius(f.degree()), x);
        }
    }

    #[test]
    fn frobenius_is_additive() {
        let f = fields::f5_3();
        let mut rng = crate::survey::SplitMix64::new(11);
        for _ in 0..100 {
            let a = f.element(rng.next_below(f.size()));
            let b = f.element(rng.next_below(f.size()));
            assert_eq!((&a + &b).pow(f.p() as u128), a.pow(f.p() as u128) + b.pow(f.p() as u128));
        }
    }

    #[test]
    fn trace_values_from_generator_powers() {
        // Tr_1^6(lam^{-1} u^{27} v) = 1 for lam = g^84, u = g^4, v = g^6.
        let f = fields::f3_6();
        let lam_inv = f.generator_power(84).unwrap().inv().unwrap();
        let u = f.generator_power(4).unwrap();
        let v = f.generator_power(6).unwrap();
        let w = &lam_inv * &u.pow(27) * &v;
        assert_eq!(w.trace_to_prime(), 1);

        assert_eq!(f.zero().trace_to_prime(), 0);
        assert_eq!(f.one().trace_to_prime(), 6 % 3);
        assert_eq!(fields::f5_3().one().trace_to_prime(), 3);
        assert_eq!(fields::f7_4().one().trace_to_prime(), 4);
    }

    #[test]
    fn trace_transitivity_and_fibers() {
        let f = fields::f3_6();
        for k in f.subfield_degrees() {
            let mut fibers = vec![0u64; 3];
            for x in f.elements() {
                let tkn = x.trace(k).unwrap();
                let t = tkn.subfield_trace_to_prime(k).unwrap();
                assert_eq!(t, x.trace_to_prime(), "transitivity failed at k={k}");
                if k == 1 {
                    fibers[t as usize] += 1;
                }
            }
            if k == 1 {
                assert!(fibers.iter().all(|&c| c == f.size() / 3));
            }
        }
    }

    #[test]
    fn trace_is_linear_and_onto() {
        let f = fields::f5_2();
        let mut fibers = vec![0u64; 5];
        for x in f.elements() {
            fibers[x.trace_to_prime() as usize] += 1;
        }
        assert!(fibers.iter().all(|&c| c == 5));
        let mut rng = crate::survey::SplitMix64::new(3);
        for _ in 0..50 {
            let a = f.element(rng.next_below(f.size()));
            let b = f.element(rng.next_below(f.size()));
            let c = rng.next_below(5);
            assert_eq!(
                (&(&f.scalar(c) * &a) + &b).trace_to_prime(),
                (c * a.trace_to_prime() + b.trace_to_prime()) % 5
            );
        }
    }

    #[test]
    fn norm_values_and_multiplicativity() {
        let f = fields::f3_4();
        assert_eq!(f.one().norm(1).unwrap(), f.one());
        assert_eq!(f.one().norm(2).unwrap(), f.one());
        // N_1^4(a) = a^40 is the prime-field constant 2.
        let a = f.generator();
        let na = a.norm(1).unwrap();
        assert_eq!(na, f.generator_power(40).unwrap());
        assert_eq!(na, f.scalar(2));
        // Feed for the permutation-binomial criterion: N_2^4(a) * (-1)^2 != 1,
        // computed by direct exponentiation.
        let n24 = a.pow((81 - 1) / (9 - 1));
        assert_eq!(a.norm(2).unwrap(), n24);
        assert!(n24 != f.one());

        let mut rng = crate::survey::SplitMix64::new(5);
        for _ in 0..50 {
            let x = f.element(rng.next_below(f.size()));
            let y = f.element(rng.next_below(f.size()));
            assert_eq!((&x * &y).norm(2).unwrap(), x.norm(2).unwrap() * y.norm(2).unwrap());
        }
    }

    #[test]
    fn quadratic_character_basics() {
        let f = fields::f3_4();
        assert_eq!(f.zero().quadratic_character(), 0);
        assert_eq!(f.one().quadratic_character(), 1);
        assert_eq!(f.generator().quadratic_character(), -1);
        assert_eq!(fields::f5_3().generator().quadratic_character(), -1);
        // Multiplicative on nonzero elements.
        let mut rng = crate::survey::SplitMix64::new(7);
        for _ in 0..50 {
            let x = f.element(1 + rng.next_below(f.size() - 1));
            let y = f.element(1 + rng.next_below(f.size() - 1));
            assert_eq!(
                (&x * &y).quadratic_character(),
                x.quadratic_character() * y.quadratic_character()
            );
        }
    }

    #[test]
    fn subfield_membership() {
        let f = fields::f3_6();
        let sub = f.subfield(3).unwrap();
        assert_eq!(sub.element_indices().len(), 27);
        assert!(f.subfield(4).is_err());
        assert!(f.subfield(0).is_err());
        // g^{(3^6-1)/(3^3-1)} generates the subfield's multiplicative group.
        let h = f.generator_power(728 / 26).unwrap();
        assert!(sub.contains(&h));
        assert!(!sub.contains(&f.generator()));
    }

    #[test]
    fn parse_roundtrips_and_errors() {
        let f = fields::f3_6();
        let f2 = Field::parse(&f.spec_string()).unwrap();
        assert_eq!(f, f2);

        let e = Field::parse("p=3,n=2").unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
        let e = Field::parse("p=3,n=2,mod=[1,0,1,9]").unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));

        let x = f.parse_element("g^84").unwrap();
        assert_eq!(x, f.generator_power(84).unwrap());
        let y = f.parse_element(&x.to_string()).unwrap();
        assert_eq!(x, y);
        assert!(f.parse_element("[1,2]").is_err());
        assert!(f.parse_element("q^3").is_err());

        // Annotation carries the generator power for small primitive fields.
        let g3 = fields::f9().generator_power(3).unwrap();
        assert_eq!(g3.display_annotated(), format!("{g3} (g^3)"));
    }

    #[test]
    fn display_matches_coefficients() {
        let f = fields::f9();
        assert_eq!(f.scalar(2).to_string(), "[2,0]");
        assert_eq!(f.generator().to_string(), "[0,1]");
    }
}
