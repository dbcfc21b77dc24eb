//! Minimal polynomials of vectors and roots in the base field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{FieldSpec, Matrix, Scalar};

/// Largest absolute constant/leading coefficient whose divisors we enumerate.
const DIVISOR_LIMIT: u64 = 1 << 40;
/// Largest prime for which roots are found by exhaustive search.
const EXHAUSTIVE_LIMIT: u64 = 1 << 17;

/// Coefficients `a_0, ..., a_k` (with `a_k = 1`) of the minimal polynomial of
/// `u` under `b`.
pub fn krylov_min_poly(b: &Matrix, u: &[Scalar]) -> Vec<Scalar> {
    let f = b.field();
    let n = b.rows();
    let mut vecs: Vec<Vec<Scalar>> = vec![u.to_vec()];
    loop {
        let next = b.mul_vec(vecs.last().expect("nonempty"));
        let k = Matrix::from_columns(f, n, &vecs);
        if let Some(c) = k.solve(&next).expect("shapes agree") {
            let mut poly: Vec<Scalar> = c.into_iter().map(|x| -x).collect();
            poly.push(f.one());
            return poly;
        }
        vecs.push(next);
    }
}

pub fn eval(poly: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = x.field().zero();
    for c in poly.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > DIVISOR_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Distinct roots of `poly` in its field, in a deterministic order. Returns
/// `None` when the search is too expensive to be exhaustive.
pub fn roots(field: FieldSpec, poly: &[Scalar]) -> Option<Vec<Scalar>> {
    let mut out: Vec<Scalar> = Vec::new();
    let mut push = |x: Scalar| {
        if !out.contains(&x) {
            out.push(x);
        }
    };
    match field {
        FieldSpec::PrimeField(p) => {
            if p > EXHAUSTIVE_LIMIT {
                return None;
            }
            for x in field.elements().expect("finite field") {
                if eval(poly, &x).is_zero() {
                    push(x);
                }
            }
        }
        FieldSpec::Rationals => {
            let start = poly.iter().position(|c| !c.is_zero())?;
            if start > 0 {
                push(field.zero());
            }
            let trimmed = &poly[start..];
            if trimmed.len() == 1 {
                return Some(out);
            }
            let lcm = trimmed.iter().fold(BigInt::one(), |acc, c| {
                acc.lcm(c.as_rational().expect("rational").denom())
            });
            let ints: Vec<BigInt> = trimmed
                .iter()
                .map(|c| {
                    let r = c.as_rational().expect("rational");
                    r.numer() * (&lcm / r.denom())
                })
                .collect();
            let ps = divisors(&ints[0])?;
            let qs = divisors(ints.last().expect("nonempty"))?;
            let mut cands: Vec<(BigInt, BigInt)> = Vec::new();
            for q in &qs {
                for p in &ps {
                    if p.gcd(q).is_one() {
                        cands.push((p.clone(), q.clone()));
                        cands.push((-p, q.clone()));
                    }
                }
            }
            cands.sort_by(|a, b| {
                let (x, y) = (&a.0 * &b.1, &b.0 * &a.1);
                x.abs().cmp(&y.abs()).then(x.cmp(&y)).then(a.1.cmp(&b.1))
            });
            for (p, q) in cands {
                debug_assert!(!q.is_zero());
                let x = field.from_ratio(&p, &q).expect("nonzero denominator");
                if eval(trimmed, &x).is_zero() {
                    push(x);
                }
            }
        }
    }
    Some(out)
}
