//! Schur Q-functions in odd power sums, used as an independent source of
//! spin character values on classes with odd parts.

#![allow(dead_code)]

use std::collections::HashMap;

use barspin_core::{BarPartition, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A polynomial in `p_1, p_3, p_5, …`, keyed by the multiset of indices.
type Poly = HashMap<Vec<u32>, BigRational>;

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            let mut k: Vec<u32> = ka.iter().chain(kb).copied().collect();
            k.sort_unstable_by(|x, y| y.cmp(x));
            *out.entry(k).or_insert_with(BigRational::zero) += va * vb;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn add_scaled(acc: &mut Poly, a: &Poly, c: i64) {
    for (k, v) in a {
        *acc.entry(k.clone()).or_insert_with(BigRational::zero) += v * BigRational::from_integer(c.into());
    }
    acc.retain(|_, v| !v.is_zero());
}

pub struct QFunctions {
    q: Vec<Poly>,
}

impl QFunctions {
    /// `q_r = Σ_{ρ ⊢ r, odd parts} 2^{ℓ(ρ)} p_ρ / z_ρ` for `r ≤ max`.
    pub fn new(max: u32) -> QFunctions {
        let q = (0..=max)
            .map(|r| {
                Partition::all_odd_parts(r)
                    .into_iter()
                    .map(|rho| {
                        let c = BigRational::new(BigInt::from(1u64 << rho.len()), BigInt::from(rho.z()));
                        (rho.parts().to_vec(), c)
                    })
                    .collect()
            })
            .collect();
        QFunctions { q }
    }

    /// `Q_{(a,b)} = q_a q_b + 2 Σ_{i=1}^{b} (-1)^i q_{a+i} q_{b-i}`.
    fn two_row(&self, a: u32, b: u32) -> Poly {
        let mut out = mul(&self.q[a as usize], &self.q[b as usize]);
        for i in 1..=b {
            let sign = if i % 2 == 0 { 2 } else { -2 };
            add_scaled(&mut out, &mul(&self.q[(a + i) as usize], &self.q[(b - i) as usize]), sign);
        }
        out
    }

    fn pfaffian(&self, parts: &[u32]) -> Poly {
        if parts.is_empty() {
            let mut one = Poly::new();
            one.insert(Vec::new(), BigRational::one());
            return one;
        }
        let mut out = Poly::new();
        for k in 1..parts.len() {
            let rest: Vec<u32> = parts.iter().enumerate().filter(|&(i, _)| i != 0 && i != k).map(|(_, &x)| x).collect();
            let term = mul(&self.two_row(parts[0], parts[k]), &self.pfaffian(&rest));
            add_scaled(&mut out, &term, if k % 2 == 1 { 1 } else { -1 });
        }
        out
    }

    pub fn q_function(&self, lambda: &BarPartition) -> Poly {
        let mut parts = lambda.parts().to_vec();
        if parts.len() % 2 == 1 {
            parts.push(0);
        }
        self.pfaffian(&parts)
    }

    /// `z_ρ · [p_ρ] Q_λ / 2^{⌈(ℓ(λ) + ℓ(ρ))/2⌉}`.
    pub fn value(&self, lambda: &BarPartition, rho: &Partition) -> BigRational {
        let q = self.q_function(lambda);
        let coeff = q.get(rho.parts()).cloned().unwrap_or_else(BigRational::zero);
        let e = (lambda.len() + rho.len()).div_ceil(2);
        coeff * BigRational::from_integer(BigInt::from(rho.z())) / BigRational::from_integer(BigInt::from(1u64 << e))
    }
}
