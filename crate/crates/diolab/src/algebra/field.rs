//! Finite fields `F_q`, `q = p^n`, with an explicit user-supplied modulus
//! for extensions.
//!
//! Elements are coordinate vectors in the basis `(1, w, ..., w^(n-1))` where
//! `w` is a root of the modulus. The descriptor owns the arithmetic; elements
//! are plain data. The "element code" of `sum c_i w^i` is `sum c_i p^i`, read
//! least significant coordinate first; it fixes a total order on `F_q` that
//! the rest of the crate relies on for canonical choices.

use num_bigint::BigUint;
use num_traits::Zero;

use super::AlgebraError;

/// Description of a finite field `F_q` with `q = p^n`.
///
/// For `n = 1` no modulus is stored. For `n > 1` the modulus is a monic
/// irreducible polynomial over `F_p`, verified at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldDescriptor {
    p: u64,
    n: usize,
    /// Monic modulus coefficients, ascending degree, length `n + 1`.
    /// Empty for prime fields.
    modulus: Vec<u64>,
    /// `w^n = sum reduction[i] * w^i`, coefficients already reduced mod `p`.
    /// Empty for prime fields.
    reduction: Vec<u64>,
}

/// An element of `F_q` as a coordinate vector of length `n`, entries in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coords: Vec<u64>,
}

fn is_prime_u64(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    if m % 2 == 0 {
        return m == 2;
    }
    let mut d = 3u64;
    while d * d <= m {
        if m % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldDescriptor {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<FieldDescriptor, AlgebraError> {
        if !is_prime_u64(p) {
            return Err(AlgebraError::NonPrime(p));
        }
        if p >= 1 << 31 {
            return Err(AlgebraError::PrimeTooLarge(p));
        }
        Ok(FieldDescriptor {
            p,
            n: 1,
            modulus: Vec::new(),
            reduction: Vec::new(),
        })
    }

    /// An extension field `F_(p^n)` given a monic irreducible modulus over
    /// `F_p`, supplied as ascending coefficients (degree = `len - 1`).
    pub fn extension(p: u64, modulus: &[u64]) -> Result<FieldDescriptor, AlgebraError> {
        let base = FieldDescriptor::prime(p)?;
        let mut m: Vec<u64> = modulus.iter().map(|&c| c % p).collect();
        while m.last() == Some(&0) {
            m.pop();
        }
        if m.len() < 2 {
            return Err(AlgebraError::ModulusConstant);
        }
        if *m.last().unwrap() != 1 {
            return Err(AlgebraError::ModulusNotMonic);
        }
        if m.len() == 2 {
            // Degree-1 modulus: w is a prime-field constant, so this is F_p.
            return Ok(base);
        }
        if !fp_is_irreducible(&m, p) {
            return Err(AlgebraError::ReducibleModulus);
        }
        let n = m.len() - 1;
        let reduction: Vec<u64> = m[..n].iter().map(|&c| (p - c % p) % p).collect();
        Ok(FieldDescriptor {
            p,
            n,
            modulus: m,
            reduction,
        })
    }

    /// Field from `(p, optional modulus)`; `None` gives the prime field.
    pub fn new(p: u64, modulus: Option<&[u64]>) -> Result<FieldDescriptor, AlgebraError> {
        match modulus {
            None => FieldDescriptor::prime(p),
            Some(m) => FieldDescriptor::extension(p, m),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> usize {
        self.n
    }

    /// `q = p^n`.
    pub fn order(&self) -> BigUint {
        BigUint::from(self.p).pow(self.n as u32)
    }

    /// `q` as `u64` when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        let mut q: u64 = 1;
        for _ in 0..self.n {
            q = q.checked_mul(self.p)?;
        }
        Some(q)
    }

    /// Modulus coefficients (ascending); empty for prime fields.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coords: vec![0; self.n],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_u64(1)
    }

    /// The residue of an integer, embedded in the prime subfield.
    pub fn from_u64(&self, c: u64) -> FieldElement {
        let mut coords = vec![0; self.n];
        coords[0] = c % self.p;
        FieldElement { coords }
    }

    /// The generator `w` of the coordinate basis (requires `n > 1`).
    pub fn gen_w(&self) -> FieldElement {
        assert!(self.n > 1, "prime field has no basis generator w");
        let mut coords = vec![0; self.n];
        coords[1] = 1;
        FieldElement { coords }
    }

    /// Element from explicit coordinates (reduced mod `p`, padded/truncated to `n`).
    pub fn from_coords(&self, coords: &[u64]) -> FieldElement {
        let mut c = vec![0; self.n];
        for (i, &v) in coords.iter().enumerate().take(self.n) {
            c[i] = v % self.p;
        }
        FieldElement { coords: c }
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FieldElement { coords }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect();
        FieldElement { coords }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let coords = a.coords.iter().map(|&x| (self.p - x) % self.p).collect();
        FieldElement { coords }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        if self.n == 1 {
            return FieldElement {
                coords: vec![(a.coords[0] as u128 * b.coords[0] as u128 % self.p as u128) as u64],
            };
        }
        let n = self.n;
        let mut acc = vec![0u128; 2 * n - 1];
        for i in 0..n {
            if a.coords[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc[i + j] += a.coords[i] as u128 * b.coords[j] as u128;
            }
        }
        // Fold degrees >= n back down using w^n = reduction.
        for k in (n..2 * n - 1).rev() {
            let c = (acc[k] % self.p as u128) as u64;
            acc[k] = 0;
            if c != 0 {
                for i in 0..n {
                    acc[k - n + i] += c as u128 * self.reduction[i] as u128;
                }
            }
        }
        let coords = acc[..n]
            .iter()
            .map(|&x| (x % self.p as u128) as u64)
            .collect();
        FieldElement { coords }
    }

    /// `a^e` by binary exponentiation.
    pub fn pow(&self, a: &FieldElement, e: &BigUint) -> FieldElement {
        let mut result = self.one();
        let mut base = a.clone();
        for i in 0..e.bits() {
            if e.bit(i) {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
        }
        result
    }

    /// Multiplicative inverse of a nonzero element, via `a^(q-2)`.
    pub fn inv(&self, a: &FieldElement) -> FieldElement {
        assert!(!self.is_zero(a), "inverse of zero");
        let e = self.order() - 2u32;
        self.pow(a, &e)
    }

    /// The unique `b` with `b^p = a`: the inverse Frobenius, `a^(p^(n-1))`.
    pub fn frobenius_root(&self, a: &FieldElement) -> FieldElement {
        if self.n == 1 {
            return a.clone();
        }
        let e = BigUint::from(self.p).pow(self.n as u32 - 1);
        self.pow(a, &e)
    }

    /// Field trace down to the prime field: `a + a^p + ... + a^(p^(n-1))`,
    /// returned as a residue mod `p`.
    pub fn trace_to_prime(&self, a: &FieldElement) -> u64 {
        let mut sum = self.zero();
        let mut x = a.clone();
        let pe = BigUint::from(self.p);
        for _ in 0..self.n {
            sum = self.add(&sum, &x);
            x = self.pow(&x, &pe);
        }
        debug_assert!(sum.coords[1..].iter().all(|&c| c == 0));
        sum.coords[0]
    }

    /// Element code `sum coords[i] * p^i`, fixing the canonical order on `F_q`.
    pub fn element_code(&self, a: &FieldElement) -> BigUint {
        let mut code = BigUint::zero();
        let p = BigUint::from(self.p);
        for &c in a.coords.iter().rev() {
            code = code * &p + BigUint::from(c);
        }
        code
    }

    /// Element code as `u64`; only valid while `q` fits, which holds for every
    /// field this crate enumerates.
    pub fn element_code_u64(&self, a: &FieldElement) -> u64 {
        let mut code: u64 = 0;
        for &c in a.coords.iter().rev() {
            code = code * self.p + c;
        }
        code
    }

    /// Inverse of [`FieldDescriptor::element_code`].
    pub fn element_from_code(&self, code: &BigUint) -> FieldElement {
        let p = BigUint::from(self.p);
        let mut rest = code.clone();
        let mut coords = vec![0u64; self.n];
        for slot in coords.iter_mut() {
            let digit = &rest % &p;
            *slot = digit.to_u64_digits().first().copied().unwrap_or(0);
            rest /= &p;
        }
        debug_assert!(rest.is_zero(), "element code out of range");
        FieldElement { coords }
    }

    /// All `q` elements in code order.
    pub fn elements(&self) -> Vec<FieldElement> {
        let q = self
            .order_u64()
            .expect("field too large to enumerate") as usize;
        let mut out = Vec::with_capacity(q);
        let mut coords = vec![0u64; self.n];
        loop {
            out.push(FieldElement {
                coords: coords.clone(),
            });
            let mut i = 0;
            loop {
                if i == self.n {
                    return out;
                }
                coords[i] += 1;
                if coords[i] < self.p {
                    break;
                }
                coords[i] = 0;
                i += 1;
            }
        }
    }

    /// Canonical text for an element: an integer for prime fields, a
    /// `w`-polynomial like `w^2+w+1` otherwise.
    pub fn element_text(&self, a: &FieldElement) -> String {
        if self.n == 1 {
            return a.coords[0].to_string();
        }
        let mut parts = Vec::new();
        for (i, &c) in a.coords.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let part = match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "w".to_string(),
                (1, c) => format!("{c}*w"),
                (i, 1) => format!("w^{i}"),
                (i, c) => format!("{c}*w^{i}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }

    /// Number of terms in the element's `w`-polynomial form.
    pub fn element_term_count(&self, a: &FieldElement) -> usize {
        a.coords.iter().filter(|&&c| c != 0).count()
    }
}

impl FieldElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

// ---------------------------------------------------------------------------
// Dense F_p[x] helpers, used only to validate extension moduli. The general
// F_q[t] machinery lives in poly.rs / factor.rs and cannot be used here
// because the field does not exist yet.
// ---------------------------------------------------------------------------

fn fp_trim(f: &mut Vec<u64>) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

fn fp_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] += x as u128 * y as u128;
        }
    }
    let mut r: Vec<u64> = acc.iter().map(|&x| (x % p as u128) as u64).collect();
    // reduce mod the monic m
    let dm = m.len() - 1;
    while r.len() > dm {
        let k = r.len() - 1;
        let c = r[k];
        if c != 0 {
            for i in 0..dm {
                let sub = c as u128 * m[i] as u128 % p as u128;
                r[k - dm + i] = ((r[k - dm + i] as u128 + p as u128 - sub) % p as u128) as u64;
            }
        }
        r.pop();
        fp_trim(&mut r);
    }
    fp_trim(&mut r);
    r
}

fn fp_powmod_xq(e: u64, m: &[u64], p: u64) -> Vec<u64> {
    // x^(p^e) mod m, by repeated p-th powers
    let mut x = vec![0, 1];
    if m.len() == 2 {
        x = fp_mulmod(&x, &[1], m, p); // reduce degree-1 case
    }
    for _ in 0..e {
        // x := x^p mod m by square-and-multiply over the exponent p
        let mut result = vec![1u64];
        let mut base = x.clone();
        let mut exp = p;
        while exp > 0 {
            if exp & 1 == 1 {
                result = fp_mulmod(&result, &base, m, p);
            }
            base = fp_mulmod(&base, &base, m, p);
            exp >>= 1;
        }
        x = result;
    }
    x
}

fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    fp_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = fp_inv_scalar(*b.last().unwrap(), p);
    while r.len() > db {
        let k = r.len() - 1;
        let c = r[k] as u128 * lead_inv as u128 % p as u128;
        for i in 0..=db {
            let sub = c * b[i] as u128 % p as u128;
            r[k - db + i] = ((r[k - db + i] as u128 + p as u128 - sub) % p as u128) as u64;
        }
        fp_trim(&mut r);
    }
    r
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    fp_trim(&mut a);
    fp_trim(&mut b);
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = std::mem::replace(&mut b, r);
    }
    a
}

fn fp_inv_scalar(c: u64, p: u64) -> u64 {
    let mut result: u64 = 1;
    let mut base = c % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = (result as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    result
}

/// Rabin irreducibility test for a monic polynomial over `F_p`.
fn fp_is_irreducible(m: &[u64], p: u64) -> bool {
    let n = (m.len() - 1) as u64;
    if n == 1 {
        return true;
    }
    // x^(p^n) == x mod m
    let xq = fp_powmod_xq(n, m, p);
    let mut diff = xq.clone();
    // subtract x
    if diff.len() < 2 {
        diff.resize(2, 0);
    }
    diff[1] = (diff[1] + p - 1) % p;
    fp_trim(&mut diff);
    if !diff.is_empty() {
        return false;
    }
    // for each prime divisor r of n: gcd(x^(p^(n/r)) - x, m) == 1
    let mut rest = n;
    let mut r = 2;
    let mut prime_divisors = Vec::new();
    while r * r <= rest {
        if rest % r == 0 {
            prime_divisors.push(r);
            while rest % r == 0 {
                rest /= r;
            }
        }
        r += 1;
    }
    if rest > 1 {
        prime_divisors.push(rest);
    }
    for r in prime_divisors {
        let mut d = fp_powmod_xq(n / r, m, p);
        if d.len() < 2 {
            d.resize(2, 0);
        }
        d[1] = (d[1] + p - 1) % p;
        fp_trim(&mut d);
        let g = fp_gcd(m, &d, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// A few standard moduli so extension fields do not require digging up
/// irreducible polynomials: `(p, n, ascending coefficients)`.
pub const STANDARD_MODULI: &[(u64, usize, &[u64])] = &[
    (2, 2, &[1, 1, 1]),    // GF(4):  w^2+w+1
    (2, 3, &[1, 1, 0, 1]), // GF(8):  w^3+w+1
    (3, 2, &[1, 0, 1]),    // GF(9):  w^2+1
    (2, 4, &[1, 1, 0, 0, 1]), // GF(16): w^4+w+1
    (5, 2, &[1, 1, 1]),    // GF(25): w^2+w+1
    (3, 3, &[1, 2, 0, 1]), // GF(27): w^3+2w+1
];

/// Build `F_q` for a small prime power `q`, using [`STANDARD_MODULI`] when an
/// extension is needed.
pub fn standard_field(q: u64) -> Result<FieldDescriptor, AlgebraError> {
    if is_prime_u64(q) {
        return FieldDescriptor::prime(q);
    }
    for &(p, n, m) in STANDARD_MODULI {
        let mut qq: u64 = 1;
        for _ in 0..n {
            qq *= p;
        }
        if qq == q {
            return FieldDescriptor::extension(p, m);
        }
    }
    Err(AlgebraError::NonPrime(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f3 = FieldDescriptor::prime(3).unwrap();
        assert_eq!(f3.order_u64(), Some(3));
        let two = f3.from_u64(2);
        assert_eq!(f3.mul(&two, &two), f3.from_u64(1));
        assert_eq!(f3.inv(&two), two);
    }

    #[test]
    fn non_prime_rejected() {
        assert_eq!(
            FieldDescriptor::prime(6).unwrap_err(),
            AlgebraError::NonPrime(6)
        );
        assert_eq!(
            FieldDescriptor::prime(1).unwrap_err(),
            AlgebraError::NonPrime(1)
        );
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2+1 = (x+1)^2 over F_2
        assert_eq!(
            FieldDescriptor::extension(2, &[1, 0, 1]).unwrap_err(),
            AlgebraError::ReducibleModulus
        );
        // x^2+x+1 is fine
        let f4 = FieldDescriptor::extension(2, &[1, 1, 1]).unwrap();
        assert_eq!(f4.order_u64(), Some(4));
    }

    #[test]
    fn gf4_arithmetic() {
        let f4 = FieldDescriptor::extension(2, &[1, 1, 1]).unwrap();
        let w = f4.gen_w();
        // w^2 = w + 1
        let w2 = f4.mul(&w, &w);
        assert_eq!(w2, f4.add(&w, &f4.one()));
        // w^3 = 1
        assert_eq!(f4.mul(&w2, &w), f4.one());
        // frobenius root of w is w^2 since (w^2)^2 = w^4 = w
        assert_eq!(f4.frobenius_root(&w), w2);
    }

    #[test]
    fn frobenius_root_exhaustive_small_fields() {
        for q in [2u64, 3, 4, 5, 8, 9, 27] {
            let f = standard_field(q).unwrap();
            let p = BigUint::from(f.characteristic());
            for c in f.elements() {
                let b = f.frobenius_root(&c);
                assert_eq!(f.pow(&b, &p), c, "q={q}");
            }
        }
    }

    #[test]
    fn trace_examples() {
        let f4 = FieldDescriptor::extension(2, &[1, 1, 1]).unwrap();
        assert_eq!(f4.trace_to_prime(&f4.one()), 0);
        assert_eq!(f4.trace_to_prime(&f4.gen_w()), 1);
        let f3 = FieldDescriptor::prime(3).unwrap();
        assert_eq!(f3.trace_to_prime(&f3.from_u64(2)), 2);
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2u64, 3, 4, 5, 8, 9] {
            let f = standard_field(q).unwrap();
            let elems = f.elements();
            for a in &elems {
                for b in &elems {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    if !f.is_zero(a) {
                        assert_eq!(f.mul(a, &f.inv(a)), f.one());
                    }
                    for c in &elems {
                        assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
                        assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
                        assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn element_codes_round_trip() {
        let f9 = standard_field(9).unwrap();
        for (i, e) in f9.elements().iter().enumerate() {
            let code = f9.element_code(e);
            assert_eq!(code, BigUint::from(i));
            assert_eq!(&f9.element_from_code(&code), e);
        }
    }

    #[test]
    fn standard_moduli_all_valid() {
        for &(p, n, m) in STANDARD_MODULI {
            let f = FieldDescriptor::extension(p, m).unwrap();
            assert_eq!(f.extension_degree(), n);
        }
    }
}
