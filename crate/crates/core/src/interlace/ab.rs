use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact_algebra::{is_perfect_square, Polynomial, QuadraticSurd};

/// Convergent polynomials `A_j(x,s)`, `B_j(x,s)` for `0 <= j <= jmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ABSequence {
    pub s: BigInt,
    pub a: Vec<Polynomial>,
    pub b: Vec<Polynomial>,
}

impl ABSequence {
    pub fn a(&self, j: usize) -> &Polynomial {
        &self.a[j]
    }
    pub fn b(&self, j: usize) -> &Polynomial {
        &self.b[j]
    }
    pub fn jmax(&self) -> usize {
        self.a.len() - 1
    }
}

/// Runs `u_j = ((s+1)x + 1) u_{j-2} - x u_{j-4}` from four seeds.
fn four_term<T, F>(seeds: [T; 4], jmax: usize, step: F) -> Vec<T>
where
    T: Clone,
    F: Fn(&T, &T) -> T,
{
    let mut out: Vec<T> = seeds.into_iter().take(jmax + 1).collect();
    for j in 4..=jmax {
        let next = step(&out[j - 2], &out[j - 4]);
        out.push(next);
    }
    out
}

/// `A_j(x,s)` and `B_j(x,s)` from
/// `A_0 = x`, `A_1 = (s+1)x`, `A_2 = (s+1)x^2 + x`, `A_3 = (s+1)^2 x^2 + s x`,
/// `B_0 = 1`, `B_1 = s`, `B_2 = s x + 1`, `B_3 = s(s+1)x + s`
/// and the four-term recurrence shared by both.
pub fn ab_polynomials(s: &BigInt, jmax: usize) -> ABSequence {
    let s1 = s + 1u32;
    let p = |c: Vec<BigInt>| Polynomial::new(c);
    let z = BigInt::from(0);
    let one = BigInt::one();
    let a_seeds = [
        p(vec![z.clone(), one.clone()]),
        p(vec![z.clone(), s1.clone()]),
        p(vec![z.clone(), one.clone(), s1.clone()]),
        p(vec![z.clone(), s.clone(), &s1 * &s1]),
    ];
    let b_seeds = [
        Polynomial::one(),
        p(vec![s.clone()]),
        p(vec![one.clone(), s.clone()]),
        p(vec![s.clone(), s * &s1]),
    ];
    let c = p(vec![one, s1]);
    let step = |u2: &Polynomial, u4: &Polynomial| &(&c * u2) - &u4.shift(1);
    ABSequence {
        s: s.clone(),
        a: four_term(a_seeds, jmax, step),
        b: four_term(b_seeds, jmax, step),
    }
}

/// `A_j(x,s)` and `B_j(x,s)` evaluated at an integer `x`, by the same recurrence.
pub fn ab_values(x: &BigInt, s: &BigInt, jmax: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let s1 = s + 1u32;
    let a_seeds = [
        x.clone(),
        &s1 * x,
        x * (&s1 * x + 1u32),
        x * (&s1 * &s1 * x + s),
    ];
    let b_seeds = [BigInt::one(), s.clone(), s * x + 1u32, s * &s1 * x + s];
    let c = &s1 * x + 1u32;
    let step = |u2: &BigInt, u4: &BigInt| &c * u2 - x * u4;
    (
        four_term(a_seeds, jmax, step),
        four_term(b_seeds, jmax, step),
    )
}

/// Positive root of `s z^2 - ((s+1)x - 1) z - x`, i.e.
/// `(P + sqrt(P^2 + 4 s x)) / (2s)` with `P = (s+1)x - 1`.
pub fn limit_root(x: &BigInt, s: &BigInt) -> Result<QuadraticSurd> {
    if !x.is_positive() || !s.is_positive() {
        return Err(Error::domain(format!(
            "need x >= 1 and s >= 1, got x = {x}, s = {s}"
        )));
    }
    let p = (s + 1u32) * x - 1u32;
    let d = &p * &p + 4u32 * s * x;
    if is_perfect_square(&d) {
        return Err(Error::DegenerateRoot(d.to_string()));
    }
    QuadraticSurd::new(p, 2u32 * s, d)
}

/// `A_j(x)`, `B_j(x)` at `s = 1` for `j = 0..=10`, transcribed coefficient
/// lists (constant term first). Used as an independent reference.
pub const REFERENCE_ROWS: [(&[i64], &[i64]); 11] = [
    (&[0, 1], &[1]),
    (&[0, 2], &[1]),
    (&[0, 1, 2], &[1, 1]),
    (&[0, 1, 4], &[1, 2]),
    (&[0, 1, 3, 4], &[1, 2, 2]),
    (&[0, 1, 4, 8], &[1, 3, 4]),
    (&[0, 1, 4, 8, 8], &[1, 3, 5, 4]),
    (&[0, 1, 5, 12, 16], &[1, 4, 8, 8]),
    (&[0, 1, 5, 13, 20, 16], &[1, 4, 9, 12, 8]),
    (&[0, 1, 6, 18, 32, 32], &[1, 5, 13, 20, 16]),
    (&[0, 1, 6, 19, 38, 48, 32], &[1, 5, 14, 25, 28, 16]),
];
