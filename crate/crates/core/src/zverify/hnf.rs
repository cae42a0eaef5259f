//! Row Hermite normal form over ℤ with a unimodular transform.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `U·A = H` with `U` unimodular and `H` in row echelon form: the first
/// `rank` rows carry positive pivots at increasing columns `pivots`, entries
/// above a pivot are reduced into `[0, pivot)`, and the remaining rows are
/// zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hnf {
    pub h: Vec<Vec<BigInt>>,
    pub u: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
}

fn sub_multiple(rows: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (src, tgt) = if source < target {
        let (a, b) = rows.split_at_mut(target);
        (&a[source], &mut b[0])
    } else {
        let (a, b) = rows.split_at_mut(source);
        (&b[0], &mut a[target])
    };
    for (t, s) in tgt.iter_mut().zip(src) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}

impl Hnf {
    pub fn new(a: &[Vec<BigInt>]) -> Hnf {
        let m = a.len();
        let ncols = a.first().map_or(0, Vec::len);
        let mut h = a.to_vec();
        let mut u: Vec<Vec<BigInt>> =
            (0..m).map(|i| (0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r == m {
                break;
            }
            let mut found = false;
            while let Some(piv) = (r..m).filter(|&i| !h[i][c].is_zero()).min_by_key(|&i| h[i][c].abs()) {
                found = true;
                h.swap(r, piv);
                u.swap(r, piv);
                let mut clean = true;
                for i in r + 1..m {
                    if h[i][c].is_zero() {
                        continue;
                    }
                    let q = h[i][c].div_floor(&h[r][c]);
                    sub_multiple(&mut h, i, r, &q);
                    sub_multiple(&mut u, i, r, &q);
                    clean &= h[i][c].is_zero();
                }
                if clean {
                    break;
                }
            }
            if !found {
                continue;
            }
            if h[r][c].is_negative() {
                for x in h[r].iter_mut().chain(u[r].iter_mut()) {
                    *x = -&*x;
                }
            }
            for i in 0..r {
                let q = h[i][c].div_floor(&h[r][c]);
                sub_multiple(&mut h, i, r, &q);
                sub_multiple(&mut u, i, r, &q);
            }
            pivots.push(c);
            r += 1;
        }
        Hnf { h, u, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The non-zero rows of `H`, which determine the row lattice.
    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.h[..self.rank()]
    }

    /// Rational `y` with `y·A = f`, if `f` lies in the ℚ-row span of `A`.
    /// When the rows of `A` are independent the solution is unique.
    pub fn solve(&self, f: &[BigInt]) -> Option<Vec<BigRational>> {
        let rank = self.rank();
        let mut x: Vec<BigRational> = Vec::with_capacity(rank);
        for (i, &c) in self.pivots.iter().enumerate() {
            let mut acc = BigRational::from_integer(f[c].clone());
            for (j, xj) in x.iter().enumerate() {
                acc -= xj * BigRational::from_integer(self.h[j][c].clone());
            }
            x.push(acc / BigRational::from_integer(self.h[i][c].clone()));
        }
        for (c, fc) in f.iter().enumerate() {
            let mut acc = BigRational::from_integer(fc.clone());
            for (j, xj) in x.iter().enumerate() {
                acc -= xj * BigRational::from_integer(self.h[j][c].clone());
            }
            if !acc.is_zero() {
                return None;
            }
        }
        let m = self.u.len();
        Some(
            (0..m)
                .map(|k| {
                    x.iter()
                        .enumerate()
                        .map(|(j, xj)| xj * BigRational::from_integer(self.u[j][k].clone()))
                        .fold(BigRational::zero(), |a, b| a + b)
                })
                .collect(),
        )
    }
}
