//! Exact inertia of integer symmetric matrices by congruence diagonalisation.
//!
//! Sylvester's law of inertia: eliminating with a nonzero diagonal pivot `p`
//! leaves the Schur complement `B - c c^T / p`, whose inertia plus `sign(p)`
//! is the inertia of the whole matrix. When every remaining diagonal entry is
//! zero but some `a_ij != 0`, the 2x2 block `[[0, a_ij], [a_ij, 0]]` is used as
//! pivot; it contributes one positive and one negative eigenvalue.
//!
//! The elimination runs fraction-free: the working block is `lambda * S` for
//! the true Schur complement `S` and some nonzero scalar `lambda` whose sign is
//! tracked, and after every step the block is divided by the gcd of its
//! entries. Entries then stay bounded by minors of the input. Arithmetic is
//! checked `i128`, retried in `BigInt` on overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Inertia {
            positive,
            negative,
            zero,
        }
    }

    pub fn total(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    pub fn as_tuple(&self) -> (usize, usize, usize) {
        (self.positive, self.negative, self.zero)
    }
}

trait Exact: Clone + Zero + One + Signed + Integer + CheckedAdd + CheckedMul + CheckedSub {
    fn from_i64(v: i64) -> Self;
}

impl Exact for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
}

impl Exact for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

/// Inertia of the integer symmetric matrix `m` (row-major, `n x n`).
pub fn integer_matrix_inertia(m: &[i64], n: usize) -> Inertia {
    assert_eq!(m.len(), n * n, "matrix shape");
    congruence::<i128>(m, n).unwrap_or_else(|| {
        congruence::<BigInt>(m, n).expect("BigInt arithmetic does not overflow")
    })
}

/// Exact inertia `(pi, nu, gamma)` of the adjacency matrix of `g`.
pub fn exact_inertia(g: &Graph) -> Inertia {
    let n = g.order();
    let mut m = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            if g.has_edge(i, j) {
                m[i * n + j] = 1;
            }
        }
    }
    integer_matrix_inertia(&m, n)
}

fn congruence<T: Exact>(m: &[i64], n: usize) -> Option<Inertia> {
    let mut a: Vec<T> = m.iter().map(|&x| T::from_i64(x)).collect();
    let at = |i: usize, j: usize| i * n + j;
    let mut active: Vec<usize> = (0..n).collect();
    let mut flipped = false;
    let mut inertia = Inertia::default();

    while !active.is_empty() {
        let diag = active.iter().position(|&i| !a[at(i, i)].is_zero());
        if let Some(slot) = diag {
            let k = active.remove(slot);
            let p = a[at(k, k)].clone();
            if p.is_positive() != flipped {
                inertia.positive += 1;
            } else {
                inertia.negative += 1;
            }
            for (x, &u) in active.iter().enumerate() {
                for &v in &active[x..] {
                    let val = p
                        .checked_mul(&a[at(u, v)])?
                        .checked_sub(&a[at(u, k)].checked_mul(&a[at(k, v)])?)?;
                    a[at(u, v)] = val.clone();
                    a[at(v, u)] = val;
                }
            }
            if p.is_negative() {
                flipped = !flipped;
            }
        } else {
            let mut pair = None;
            'search: for (x, &i) in active.iter().enumerate() {
                for (y, &j) in active.iter().enumerate().skip(x + 1) {
                    if !a[at(i, j)].is_zero() {
                        pair = Some((x, y));
                        break 'search;
                    }
                }
            }
            let Some((x, y)) = pair else {
                inertia.zero += active.len();
                break;
            };
            let (i, j) = (active[x], active[y]);
            active.remove(y);
            active.remove(x);
            inertia.positive += 1;
            inertia.negative += 1;
            let q = a[at(i, j)].clone();
            for (s, &u) in active.iter().enumerate() {
                for &v in &active[s..] {
                    let cross = CheckedAdd::checked_add(
                        &a[at(u, i)].checked_mul(&a[at(j, v)])?,
                        &a[at(u, j)].checked_mul(&a[at(i, v)])?,
                    )?;
                    let val = q.checked_mul(&a[at(u, v)])?.checked_sub(&cross)?;
                    a[at(u, v)] = val.clone();
                    a[at(v, u)] = val;
                }
            }
            if q.is_negative() {
                flipped = !flipped;
            }
        }

        let mut content = T::zero();
        'gcd: for (x, &u) in active.iter().enumerate() {
            for &v in &active[x..] {
                content = content.gcd(&a[at(u, v)]);
                if content.is_one() {
                    break 'gcd;
                }
            }
        }
        if !content.is_zero() && !content.is_one() {
            for (x, &u) in active.iter().enumerate() {
                for &v in &active[x..] {
                    let val = a[at(u, v)].div_floor(&content);
                    a[at(u, v)] = val.clone();
                    a[at(v, u)] = val;
                }
            }
        }
    }
    Some(inertia)
}
