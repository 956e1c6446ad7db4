//! Height-bounded enumeration of canonical rational functions, the driver
//! behind every brute-force oracle in this crate.
//!
//! Order: by height, then by numerator code, then by denominator code. The
//! list for height `h` is a prefix of the list for `h + 1`.

use num_bigint::BigUint;

use super::field::FieldDescriptor;
use super::poly::Polynomial;
use super::ratfunc::RatFunc;

/// All polynomials of degree at most `d` (including zero), in code order.
pub fn polynomials_of_degree_at_most(field: &FieldDescriptor, d: u64) -> Vec<Polynomial> {
    let q = field.order();
    let count = q.pow(d as u32 + 1);
    let mut out = Vec::new();
    let mut code = BigUint::ZERO;
    while code < count {
        out.push(Polynomial::from_code(field, &code));
        code += 1u32;
    }
    out
}

fn monic_of_degree(field: &FieldDescriptor, e: u64) -> Vec<Polynomial> {
    let q = field.order();
    let base = q.pow(e as u32);
    let mut out = Vec::new();
    let mut offset = BigUint::ZERO;
    while offset < base {
        out.push(Polynomial::from_code(field, &(&base + &offset)));
        offset += 1u32;
    }
    out
}

/// Exactly the canonical rational functions of height at most `h`, without
/// duplicates, in the fixed deterministic order.
pub fn enumerate_by_height(field: &FieldDescriptor, h: u64) -> Vec<RatFunc> {
    let mut out = Vec::new();
    for height in 0..=h {
        let nums = polynomials_of_degree_at_most(field, height);
        let monic_exact: Vec<Polynomial> = monic_of_degree(field, height);
        let monic_all: Vec<Polynomial> = (0..=height)
            .flat_map(|e| monic_of_degree(field, e))
            .collect();
        for num in &nums {
            if num.is_zero() {
                if height == 0 {
                    out.push(RatFunc::zero(field));
                }
                continue;
            }
            let dens: &[Polynomial] = if num.degree_u64() == Some(height) {
                &monic_all
            } else {
                &monic_exact
            };
            for den in dens {
                if den.is_one(field) || num.gcd_monic(field, den).is_one(field) {
                    out.push(RatFunc::from_canonical_parts(num.clone(), den.clone()));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::standard_field;
    use std::collections::HashSet;

    #[test]
    fn base_counts() {
        let f2 = standard_field(2).unwrap();
        assert_eq!(enumerate_by_height(&f2, 0).len(), 2);
        assert_eq!(enumerate_by_height(&f2, 1).len(), 8);
        let f3 = standard_field(3).unwrap();
        assert_eq!(enumerate_by_height(&f3, 0).len(), 3);
    }

    #[test]
    fn f2_height_one_contents() {
        use crate::algebra::text::parse_ratfunc;
        let f = standard_field(2).unwrap();
        let got = enumerate_by_height(&f, 1);
        let expected: HashSet<RatFunc> = [
            "0", "1", "t", "t+1", "1/t", "1/(t+1)", "(t+1)/t", "t/(t+1)",
        ]
        .iter()
        .map(|s| parse_ratfunc(&f, s).unwrap())
        .collect();
        assert_eq!(got.iter().cloned().collect::<HashSet<_>>(), expected);
    }

    #[test]
    fn no_duplicates_heights_respected_prefix_compatible() {
        for q in [2u64, 3] {
            let f = standard_field(q).unwrap();
            let big = enumerate_by_height(&f, 3);
            let mut seen = HashSet::new();
            for x in &big {
                assert!(seen.insert(x.clone()), "duplicate at q={q}");
                assert!(x.height() <= BigUint::from(3u32));
            }
            let small = enumerate_by_height(&f, 2);
            assert_eq!(&big[..small.len()], &small[..]);
            // everything of height <= 2 canonical appears
            for x in &small {
                let renorm =
                    RatFunc::new(&f, x.num().clone(), x.den().clone()).unwrap();
                assert_eq!(&renorm, x);
            }
        }
    }
}
