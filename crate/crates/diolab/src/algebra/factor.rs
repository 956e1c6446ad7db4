//! Irreducibility testing, factorization of monic polynomials and partial
//! fraction decomposition over `F_q(t)`.
//!
//! Factorization uses distinct-degree splitting plus trial division inside a
//! degree block, which is deterministic and entirely sufficient for the
//! small-degree denominators that place construction produces. Equal-degree
//! blocks are split by enumerating monic candidates in code order, capped by
//! [`TRIAL_ENUM_BOUND`].

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::field::FieldDescriptor;
use super::poly::Polynomial;
use super::ratfunc::RatFunc;
use super::AlgebraError;

/// Largest number of candidates enumerated when splitting an equal-degree
/// block by trial division.
pub const TRIAL_ENUM_BOUND: u64 = 1 << 21;

/// `base^exp mod m` over `F_q[t]`.
pub(crate) fn polymod_pow(
    field: &FieldDescriptor,
    base: &Polynomial,
    exp: &BigUint,
    m: &Polynomial,
) -> Polynomial {
    let mut result = Polynomial::one(field);
    let mut b = base.div_rem(field, m).1;
    for i in 0..exp.bits() {
        if exp.bit(i) {
            result = result.mul(field, &b).div_rem(field, m).1;
        }
        if i + 1 < exp.bits() {
            b = b.mul(field, &b).div_rem(field, m).1;
        }
    }
    result
}

/// Rabin test: a monic polynomial of degree `n >= 1` is irreducible over
/// `F_q` iff `x^(q^n) = x (mod f)` and `gcd(x^(q^(n/r)) - x, f) = 1` for
/// every prime `r | n`.
pub fn is_irreducible(field: &FieldDescriptor, f: &Polynomial) -> bool {
    let n = match f.degree_u64() {
        None | Some(0) => return false,
        Some(n) => n,
    };
    if n == 1 {
        return true;
    }
    let q = field.order();
    let t = Polynomial::t(field);
    // x^(q^d) mod f for increasing d, by repeated q-th powers
    let mut frob = polymod_pow(field, &t, &q, f);
    let mut frob_at = vec![Polynomial::zero(); (n + 1) as usize];
    frob_at[1] = frob.clone();
    for d in 2..=n {
        frob = polymod_pow(field, &frob, &q, f);
        frob_at[d as usize] = frob.clone();
    }
    if frob_at[n as usize] != t.div_rem(field, f).1 {
        return false;
    }
    let mut rest = n;
    let mut r = 2;
    let mut prime_divs = Vec::new();
    while r * r <= rest {
        if rest % r == 0 {
            prime_divs.push(r);
            while rest % r == 0 {
                rest /= r;
            }
        }
        r += 1;
    }
    if rest > 1 {
        prime_divs.push(rest);
    }
    for r in prime_divs {
        let diff = frob_at[(n / r) as usize].sub(field, &t);
        if !diff.gcd_monic(field, f).is_one(field) {
            return false;
        }
    }
    true
}

/// Factor a nonzero polynomial into monic irreducibles with multiplicities,
/// sorted by (degree, code order). The leading coefficient is dropped.
pub fn factor_monic(
    field: &FieldDescriptor,
    f: &Polynomial,
) -> Result<Vec<(Polynomial, BigUint)>, AlgebraError> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut out: Vec<(Polynomial, BigUint)> = Vec::new();
    let mut f = f.make_monic(field);
    // strip the t-power first; its multiplicity can be huge and is read off
    // the trailing exponent.
    if let Some(k) = f.trailing_exponent() {
        if !k.is_zero() {
            let k = k.clone();
            f = f.div_rem(field, &Polynomial::monomial(field, field.one(), k.clone())).0;
            out.push((Polynomial::t(field), k));
        }
    }
    factor_inner(field, &f, &BigUint::one(), &mut out)?;
    out.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.cmp_code(field, b))
    });
    Ok(out)
}

fn factor_inner(
    field: &FieldDescriptor,
    f: &Polynomial,
    mult_scale: &BigUint,
    out: &mut Vec<(Polynomial, BigUint)>,
) -> Result<(), AlgebraError> {
    if f.is_constant() {
        return Ok(());
    }
    let deriv = f.derivative(field);
    if deriv.is_zero() {
        // f = g^p exactly
        let root = f.pth_root(field).expect("zero derivative implies p-th power");
        let p = BigUint::from(field.characteristic());
        return factor_inner(field, &root, &(mult_scale * p), out);
    }
    let g = f.gcd_monic(field, &deriv);
    let squarefree = f.exact_div(field, &g);
    let mut rest = f.clone();
    for prime in factor_squarefree(field, &squarefree)? {
        let mut mult = BigUint::zero();
        loop {
            let (quot, rem) = rest.div_rem(field, &prime);
            if !rem.is_zero() {
                break;
            }
            mult += 1u32;
            rest = quot;
        }
        out.push((prime, mult * mult_scale));
    }
    if !rest.is_constant() {
        // remaining factors all have multiplicity divisible by p
        let p = BigUint::from(field.characteristic());
        let root = rest
            .pth_root(field)
            .expect("residual factor must be a p-th power");
        factor_inner(field, &root, &(mult_scale * p), out)?;
    }
    Ok(())
}

/// Factor a monic squarefree polynomial.
fn factor_squarefree(
    field: &FieldDescriptor,
    f: &Polynomial,
) -> Result<Vec<Polynomial>, AlgebraError> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    if rest.is_constant() {
        return Ok(out);
    }
    let q = field.order();
    let t = Polynomial::t(field);
    let mut h = t.div_rem(field, &rest).1;
    let mut d: u64 = 0;
    while rest.degree_u64().unwrap_or(0) > 2 * d {
        d += 1;
        h = polymod_pow(field, &h, &q, &rest);
        let g = h.sub(field, &t).gcd_monic(field, &rest);
        if !g.is_one(field) {
            split_equal_degree(field, &g, d, &mut out)?;
            rest = rest.exact_div(field, &g);
            h = h.div_rem(field, &rest).1;
        }
    }
    if !rest.is_constant() {
        out.push(rest);
    }
    Ok(out)
}

/// Split a product of distinct monic irreducibles, all of degree `d`, by
/// trial division over monic degree-`d` candidates in code order.
fn split_equal_degree(
    field: &FieldDescriptor,
    g: &Polynomial,
    d: u64,
    out: &mut Vec<Polynomial>,
) -> Result<(), AlgebraError> {
    let mut rest = g.clone();
    if rest.degree_u64() == Some(d) {
        out.push(rest);
        return Ok(());
    }
    let q = field
        .order_u64()
        .ok_or(AlgebraError::FactorDegreeBound(d))?;
    let count = q
        .checked_pow(d as u32)
        .filter(|&c| c <= TRIAL_ENUM_BOUND)
        .ok_or(AlgebraError::FactorDegreeBound(d))?;
    let base = BigUint::from(q).pow(d as u32);
    for m in 0..count {
        let cand = Polynomial::from_code(field, &(&base + BigUint::from(m)));
        let (quot, rem) = rest.div_rem(field, &cand);
        if rem.is_zero() {
            out.push(cand);
            rest = quot;
            match rest.degree_u64() {
                Some(deg) if deg == d => {
                    out.push(rest);
                    return Ok(());
                }
                Some(0) | None => return Ok(()),
                _ => {}
            }
        }
    }
    Ok(())
}

/// Extended gcd: returns monic `g` and `(u, v)` with `u*a + v*b = g`.
fn ext_gcd(
    field: &FieldDescriptor,
    a: &Polynomial,
    b: &Polynomial,
) -> (Polynomial, Polynomial, Polynomial) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = Polynomial::one(field);
    let mut s1 = Polynomial::zero();
    let mut t0 = Polynomial::zero();
    let mut t1 = Polynomial::one(field);
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(field, &r1);
        r0 = std::mem::replace(&mut r1, r);
        let s = s0.sub(field, &q.mul(field, &s1));
        s0 = std::mem::replace(&mut s1, s);
        let t = t0.sub(field, &q.mul(field, &t1));
        t0 = std::mem::replace(&mut t1, t);
    }
    let lc = r0.leading_coeff().expect("gcd of zero polynomials").clone();
    let inv = field.inv(&lc);
    (
        r0.mul_elem(field, &inv),
        s0.mul_elem(field, &inv),
        t0.mul_elem(field, &inv),
    )
}

/// One proper term `a / q^j` of a partial fraction decomposition, with
/// `deg a < deg q` and `a != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFractionTerm {
    pub place_poly: Polynomial,
    pub pole_order: BigUint,
    pub numerator: Polynomial,
}

/// Decompose `x` as `polyPart + sum a/(q^j)`; the representation is unique
/// and recomposes to `x` exactly. Terms are sorted by place (code order) and
/// ascending pole order.
pub fn partial_fractions(
    field: &FieldDescriptor,
    x: &RatFunc,
) -> Result<(Polynomial, Vec<PartialFractionTerm>), AlgebraError> {
    let (poly_part, proper_num) = x.num().div_rem(field, x.den());
    let mut terms = Vec::new();
    if proper_num.is_zero() {
        return Ok((poly_part, terms));
    }
    // fast path: pure monomial denominator t^k reads digits off the terms
    if let Some((k, _)) = x.den().as_monomial() {
        let t = Polynomial::t(field);
        for (e, c) in proper_num.terms() {
            let j = k - e;
            terms.push(PartialFractionTerm {
                place_poly: t.clone(),
                pole_order: j,
                numerator: Polynomial::constant(field, c.clone()),
            });
        }
        terms.sort_by(|a, b| a.pole_order.cmp(&b.pole_order));
        return Ok((poly_part, terms));
    }
    let factors = factor_monic(field, x.den())?;
    // peel one primary component q^e at a time via a Bezout identity
    let mut num = proper_num;
    let mut den = x.den().clone();
    for (idx, (q, e)) in factors.iter().enumerate() {
        let e_u64: u64 = e.try_into().map_err(|_| {
            AlgebraError::FactorDegreeBound(u64::MAX)
        })?;
        let q_pow = q.pow(field, e);
        let (prim_num, rest_num) = if idx + 1 == factors.len() {
            (num.clone(), Polynomial::zero())
        } else {
            let d_rest = den.exact_div(field, &q_pow);
            let (g, _u, v) = ext_gcd(field, &q_pow, &d_rest);
            debug_assert!(g.is_one(field));
            // num/(q^e * d_rest) = num*v/q^e + num*u/d_rest
            let prim = num.mul(field, &v).div_rem(field, &q_pow).1;
            // remaining numerator: (num - prim*d_rest)/q^e
            let rest = num
                .sub(field, &prim.mul(field, &d_rest))
                .exact_div(field, &q_pow);
            den = d_rest;
            (prim, rest)
        };
        num = rest_num;
        // q-adic digits of prim_num: prim/q^e = sum digit_i / q^(e-i)
        let mut rest = prim_num;
        let mut i: u64 = 0;
        while !rest.is_zero() && i < e_u64 {
            let (quot, digit) = rest.div_rem(field, q);
            if !digit.is_zero() {
                terms.push(PartialFractionTerm {
                    place_poly: q.clone(),
                    pole_order: BigUint::from(e_u64 - i),
                    numerator: digit,
                });
            }
            rest = quot;
            i += 1;
        }
    }
    terms.sort_by(|a, b| {
        a.place_poly
            .degree()
            .cmp(&b.place_poly.degree())
            .then_with(|| a.place_poly.cmp_code(field, &b.place_poly))
            .then_with(|| a.pole_order.cmp(&b.pole_order))
    });
    Ok((poly_part, terms))
}

/// Rebuild `polyPart + sum a/(q^j)`; used as the decomposition oracle.
pub fn recompose(
    field: &FieldDescriptor,
    poly_part: &Polynomial,
    terms: &[PartialFractionTerm],
) -> RatFunc {
    let mut acc = RatFunc::from_poly(field, poly_part.clone());
    for term in terms {
        let den = term.place_poly.pow(field, &term.pole_order);
        let frac = RatFunc::new(field, term.numerator.clone(), den).unwrap();
        acc = acc.add(field, &frac);
    }
    acc
}
