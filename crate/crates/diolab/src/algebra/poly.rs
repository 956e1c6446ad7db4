//! Sparse univariate polynomials over `F_q` with arbitrary-precision
//! exponents.
//!
//! Terms are stored as an exponent -> coefficient map with no zero
//! coefficients; the zero polynomial is the empty map and its degree is
//! `None`. Exponents are `BigUint` so monomials like `t^(3^24)` are exact
//! values rather than overflow hazards.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::{FieldDescriptor, FieldElement};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<BigUint, FieldElement>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &FieldDescriptor, c: FieldElement) -> Polynomial {
        Polynomial::monomial(field, c, BigUint::zero())
    }

    pub fn one(field: &FieldDescriptor) -> Polynomial {
        Polynomial::constant(field, field.one())
    }

    /// The variable `t`.
    pub fn t(field: &FieldDescriptor) -> Polynomial {
        Polynomial::monomial(field, field.one(), BigUint::one())
    }

    pub fn monomial(field: &FieldDescriptor, c: FieldElement, exp: BigUint) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !field.is_zero(&c) {
            terms.insert(exp, c);
        }
        Polynomial { terms }
    }

    /// Dense prime-subfield coefficients, ascending degree.
    pub fn from_coeffs(field: &FieldDescriptor, coeffs: &[u64]) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (i, &c) in coeffs.iter().enumerate() {
            let e = field.from_u64(c);
            if !field.is_zero(&e) {
                terms.insert(BigUint::from(i), e);
            }
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree, with `None` standing for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<&BigUint> {
        self.terms.keys().next_back()
    }

    pub fn degree_u64(&self) -> Option<u64> {
        self.degree().map(|d| {
            d.to_u64_digits().first().copied().unwrap_or(0)
        })
    }

    /// Smallest exponent with a nonzero coefficient (the order at `t = 0`).
    pub fn trailing_exponent(&self) -> Option<&BigUint> {
        self.terms.keys().next()
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.terms.values().next_back()
    }

    pub fn coeff(&self, field: &FieldDescriptor, exp: &BigUint) -> FieldElement {
        self.terms.get(exp).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &FieldElement)> {
        self.terms.iter()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| e.is_zero())
    }

    /// The constant term.
    pub fn constant_term(&self, field: &FieldDescriptor) -> FieldElement {
        self.coeff(field, &BigUint::zero())
    }

    pub fn is_one(&self, field: &FieldDescriptor) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&BigUint::zero())
                .map(|c| *c == field.one())
                .unwrap_or(false)
    }

    pub fn is_monic(&self, field: &FieldDescriptor) -> bool {
        self.leading_coeff().map(|c| *c == field.one()).unwrap_or(false)
    }

    /// Single term `c * t^e`?
    pub fn as_monomial(&self) -> Option<(&BigUint, &FieldElement)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn insert_add(
        terms: &mut BTreeMap<BigUint, FieldElement>,
        field: &FieldDescriptor,
        exp: BigUint,
        c: FieldElement,
    ) {
        if field.is_zero(&c) {
            return;
        }
        match terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = field.add(o.get(), &c);
                if field.is_zero(&sum) {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, field: &FieldDescriptor, other: &Polynomial) -> Polynomial {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert_add(&mut terms, field, e.clone(), c.clone());
        }
        Polynomial { terms }
    }

    pub fn neg(&self, field: &FieldDescriptor) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), field.neg(c)))
            .collect();
        Polynomial { terms }
    }

    pub fn sub(&self, field: &FieldDescriptor, other: &Polynomial) -> Polynomial {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert_add(&mut terms, field, e.clone(), field.neg(c));
        }
        Polynomial { terms }
    }

    pub fn mul(&self, field: &FieldDescriptor, other: &Polynomial) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let c = field.mul(c1, c2);
                Self::insert_add(&mut terms, field, e1 + e2, c);
            }
        }
        Polynomial { terms }
    }

    pub fn mul_elem(&self, field: &FieldDescriptor, c: &FieldElement) -> Polynomial {
        if field.is_zero(c) {
            return Polynomial::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, a)| (e.clone(), field.mul(a, c)))
            .collect();
        Polynomial { terms }
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: &BigUint) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e + k, c.clone()))
            .collect();
        Polynomial { terms }
    }

    /// `self^e` by binary exponentiation, with a fast path for monomials.
    pub fn pow(&self, field: &FieldDescriptor, e: &BigUint) -> Polynomial {
        if e.is_zero() {
            return Polynomial::one(field);
        }
        if let Some((exp, c)) = self.as_monomial() {
            return Polynomial::monomial(field, field.pow(c, e), exp * e);
        }
        let mut result = Polynomial::one(field);
        let mut base = self.clone();
        for i in 0..e.bits() {
            if e.bit(i) {
                result = result.mul(field, &base);
            }
            if i + 1 < e.bits() {
                base = base.mul(field, &base);
            }
        }
        result
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    /// Panics on a zero divisor.
    pub fn div_rem(&self, field: &FieldDescriptor, d: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = d.degree().expect("division by zero polynomial").clone();
        if let Some((exp, c)) = d.as_monomial() {
            // Split at the monomial exponent: terms with e >= exp go to the
            // quotient (shifted down and scaled), the rest is the remainder.
            let c_inv = field.inv(c);
            let mut q = BTreeMap::new();
            let mut r = BTreeMap::new();
            for (e, a) in &self.terms {
                if e >= exp {
                    q.insert(e - exp, field.mul(a, &c_inv));
                } else {
                    r.insert(e.clone(), a.clone());
                }
            }
            return (Polynomial { terms: q }, Polynomial { terms: r });
        }
        let lead_inv = field.inv(d.leading_coeff().unwrap());
        let mut r = self.clone();
        let mut q = Polynomial::zero();
        while let Some(dr) = r.degree() {
            if *dr < dd {
                break;
            }
            let shift = dr - &dd;
            let c = field.mul(r.leading_coeff().unwrap(), &lead_inv);
            let term = Polynomial::monomial(field, c, shift);
            r = r.sub(field, &term.mul(field, d));
            q = q.add(field, &term);
        }
        (q, r)
    }

    /// Exact division; panics if `d` does not divide `self`.
    pub fn exact_div(&self, field: &FieldDescriptor, d: &Polynomial) -> Polynomial {
        let (q, r) = self.div_rem(field, d);
        assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    pub fn divides(&self, field: &FieldDescriptor, other: &Polynomial) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        other.div_rem(field, self).1.is_zero()
    }

    /// Monic gcd. Fast paths: constants and pure monomial arguments.
    pub fn gcd_monic(&self, field: &FieldDescriptor, other: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return other.make_monic(field);
        }
        if other.is_zero() {
            return self.make_monic(field);
        }
        if self.is_constant() || other.is_constant() {
            return Polynomial::one(field);
        }
        // gcd(c*t^k, g) = t^min(k, ord_0 g)
        if let Some((exp, _)) = self.as_monomial() {
            let k = exp.min(other.trailing_exponent().unwrap()).clone();
            return Polynomial::monomial(field, field.one(), k);
        }
        if let Some((exp, _)) = other.as_monomial() {
            let k = exp.min(self.trailing_exponent().unwrap()).clone();
            return Polynomial::monomial(field, field.one(), k);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(field, &b).1;
            a = std::mem::replace(&mut b, r);
        }
        a.make_monic(field)
    }

    pub fn make_monic(&self, field: &FieldDescriptor) -> Polynomial {
        match self.leading_coeff() {
            None => Polynomial::zero(),
            Some(lc) if *lc == field.one() => self.clone(),
            Some(lc) => self.mul_elem(field, &field.inv(lc)),
        }
    }

    pub fn eval(&self, field: &FieldDescriptor, x: &FieldElement) -> FieldElement {
        let mut acc = field.zero();
        for (e, c) in &self.terms {
            acc = field.add(&acc, &field.mul(c, &field.pow(x, e)));
        }
        acc
    }

    /// Formal derivative (exponents reduced mod `p`, as usual in char `p`).
    pub fn derivative(&self, field: &FieldDescriptor) -> Polynomial {
        let p = BigUint::from(field.characteristic());
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.is_zero() {
                continue;
            }
            let em = e.mod_floor(&p);
            let scaled = field.mul(c, &field.from_u64(em.to_u64_digits().first().copied().unwrap_or(0)));
            if !field.is_zero(&scaled) {
                terms.insert(e - 1u32, scaled);
            }
        }
        Polynomial { terms }
    }

    /// The `p`-th root, when `self = g^p`: every exponent must be divisible
    /// by `p` (coefficients always have roots since `F_q` is perfect).
    pub fn pth_root(&self, field: &FieldDescriptor) -> Option<Polynomial> {
        let p = BigUint::from(field.characteristic());
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let (q, r) = e.div_rem(&p);
            if !r.is_zero() {
                return None;
            }
            terms.insert(q, field.frobenius_root(c));
        }
        Some(Polynomial { terms })
    }

    /// Positional code `sum code(a_i) * q^i`, the bijection `F_q[t] -> Z>=0`
    /// that also fixes the canonical order on polynomials.
    pub fn code(&self, field: &FieldDescriptor) -> BigUint {
        let q = field.order();
        let mut acc = BigUint::zero();
        for (e, c) in self.terms.iter().rev() {
            acc += field.element_code(c) * q.pow(e.try_into().expect("exponent too large to encode"));
        }
        acc
    }

    /// Inverse of [`Polynomial::code`].
    pub fn from_code(field: &FieldDescriptor, code: &BigUint) -> Polynomial {
        let q = field.order();
        let mut rest = code.clone();
        let mut terms = BTreeMap::new();
        let mut e = BigUint::zero();
        while !rest.is_zero() {
            let (next, digit) = rest.div_rem(&q);
            if !digit.is_zero() {
                terms.insert(e.clone(), field.element_from_code(&digit));
            }
            rest = next;
            e += 1u32;
        }
        Polynomial { terms }
    }

    /// Compare in code order (degree first, then coefficients from the top),
    /// without materializing the codes.
    pub fn cmp_code(&self, field: &FieldDescriptor, other: &Polynomial) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match (self.degree(), other.degree()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(a), Some(b)) => match a.cmp(b) {
                Ordering::Equal => {}
                ord => return ord,
            },
        }
        let mut it_a = self.terms.iter().rev().peekable();
        let mut it_b = other.terms.iter().rev().peekable();
        loop {
            match (it_a.peek(), it_b.peek()) {
                (None, None) => return Ordering::Equal,
                // remaining terms mean a bigger code at that position
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((ea, ca)), Some((eb, cb))) => match ea.cmp(eb) {
                    Ordering::Less => return Ordering::Less,
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Equal => {
                        match field.element_code(ca).cmp(&field.element_code(cb)) {
                            Ordering::Equal => {
                                it_a.next();
                                it_b.next();
                            }
                            ord => return ord,
                        }
                    }
                },
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::standard_field;

    fn f3() -> FieldDescriptor {
        standard_field(3).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let f = f3();
        // (t+1)^2 = t^2 + 2t + 1 over F_3
        let tp1 = Polynomial::from_coeffs(&f, &[1, 1]);
        let sq = tp1.mul(&f, &tp1);
        assert_eq!(sq, Polynomial::from_coeffs(&f, &[1, 2, 1]));
        // char wraps: (t+1) + (t+2) = 2t
        let tp2 = Polynomial::from_coeffs(&f, &[2, 1]);
        assert_eq!(tp1.add(&f, &tp2), Polynomial::from_coeffs(&f, &[0, 2]));
    }

    #[test]
    fn zero_degree_sentinel() {
        let f = f3();
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(
            Polynomial::one(&f).degree(),
            Some(&num_traits::Zero::zero())
        );
    }

    #[test]
    fn div_rem_roundtrip() {
        let f = f3();
        let a = Polynomial::from_coeffs(&f, &[1, 0, 2, 1]); // t^3+2t^2+1
        let d = Polynomial::from_coeffs(&f, &[1, 1]);
        let (q, r) = a.div_rem(&f, &d);
        assert_eq!(q.mul(&f, &d).add(&f, &r), a);
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn monomial_division_shortcut() {
        let f = f3();
        let a = Polynomial::from_coeffs(&f, &[2, 0, 1]); // t^2+2
        let t = Polynomial::t(&f);
        let (q, r) = a.div_rem(&f, &t);
        assert_eq!(q, Polynomial::from_coeffs(&f, &[0, 1]));
        assert_eq!(r, Polynomial::from_coeffs(&f, &[2]));
    }

    #[test]
    fn gcd_cases() {
        let f = f3();
        // gcd(t^2+t, t) = t
        let a = Polynomial::from_coeffs(&f, &[0, 1, 1]);
        let t = Polynomial::t(&f);
        assert_eq!(a.gcd_monic(&f, &t), t);
        // gcd(2t+2, 2) = 1
        let b = Polynomial::from_coeffs(&f, &[2, 2]);
        let two = Polynomial::from_coeffs(&f, &[2]);
        assert_eq!(b.gcd_monic(&f, &two), Polynomial::one(&f));
        // gcd((t+1)^2, (t+1)(t+2)) = t+1
        let tp1 = Polynomial::from_coeffs(&f, &[1, 1]);
        let tp2 = Polynomial::from_coeffs(&f, &[2, 1]);
        assert_eq!(
            tp1.mul(&f, &tp1).gcd_monic(&f, &tp1.mul(&f, &tp2)),
            tp1
        );
    }

    #[test]
    fn big_exponent_monomials() {
        let f = f3();
        // t^(3^24) is representable and survives a multiply
        let e = BigUint::from(3u32).pow(24);
        let m = Polynomial::monomial(&f, f.one(), e.clone());
        let sq = m.mul(&f, &m);
        assert_eq!(sq.degree(), Some(&(&e + &e)));
        assert_eq!(sq.term_count(), 1);
    }

    #[test]
    fn code_round_trip() {
        let f = f3();
        for n in 0u32..200 {
            let code = BigUint::from(n);
            let p = Polynomial::from_code(&f, &code);
            assert_eq!(p.code(&f), code);
        }
        // 2t^2+1 -> 19
        let p = Polynomial::from_coeffs(&f, &[1, 0, 2]);
        assert_eq!(p.code(&f), BigUint::from(19u32));
    }

    #[test]
    fn cmp_code_matches_code_order() {
        let f = f3();
        let polys: Vec<Polynomial> = (0u32..60)
            .map(|n| Polynomial::from_code(&f, &BigUint::from(n)))
            .collect();
        for a in &polys {
            for b in &polys {
                assert_eq!(a.cmp_code(&f, b), a.code(&f).cmp(&b.code(&f)));
            }
        }
    }

    #[test]
    fn pth_root_round_trip() {
        let f = f3();
        let g = Polynomial::from_coeffs(&f, &[1, 2, 0, 1]);
        let gp = g.pow(&f, &BigUint::from(3u32));
        assert_eq!(gp.pth_root(&f), Some(g));
        let not_power = Polynomial::from_coeffs(&f, &[0, 1]);
        assert_eq!(not_power.pth_root(&f), None);
    }
}
