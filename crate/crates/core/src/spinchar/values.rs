//! Character values on split classes.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Assoc, ClassType, Cover, Half, SpinLabel};
use crate::algnum::AlgNum;
use crate::barcomb::{bar_removals, BarPartition, Sign};

/// Memo for the bar-strip recursion, keyed on `(λ, ρ)`.
#[derive(Default)]
pub(crate) struct Memo(HashMap<(Vec<u32>, Vec<u32>), i64>);

/// `ξ_λ(t_ρ)` for `ρ` with odd parts, where `ξ_λ` is any spin character of
/// the symmetric cover labelled by `λ` (associates agree on these classes).
///
/// Removing the first part `r` of `ρ`:
/// `ξ_λ(ρ) = Σ (-1)^{leg} · c · ξ_μ(ρ \ r)` over the `r`-bars of `λ`, where
/// `c = 2` when `λ` is self-associate and `μ` is not, and `c = 1` otherwise.
pub(crate) fn odd_class_value(lambda: &BarPartition, rho: &[u32], memo: &mut Memo) -> i64 {
    if rho.is_empty() {
        return i64::from(lambda.is_empty());
    }
    let key = (lambda.parts().to_vec(), rho.to_vec());
    if let Some(&v) = memo.0.get(&key) {
        return v;
    }
    let lambda_self = lambda.sigma() == Sign::Plus;
    let mut acc = 0i64;
    for removal in bar_removals(lambda, rho[0]) {
        let c = if lambda_self && removal.result.sigma() == Sign::Minus { 2 } else { 1 };
        let sign = if removal.leg % 2 == 0 { 1 } else { -1 };
        acc += sign * c * odd_class_value(&removal.result, &rho[1..], memo);
    }
    memo.0.insert(key, acc);
    acc
}

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

/// `i^{(n-k+1)/2} √(z_λ/2)` for `λ ∈ D_n⁻` with `k` parts: the value of
/// `ξ_λ⁺` at `t_λ`.
pub(crate) fn sym_split_value(lambda: &BarPartition) -> AlgNum {
    let n = lambda.size() as u64;
    let k = lambda.len() as u64;
    let z = lambda.part_product();
    AlgNum::i_pow((n - k).div_ceil(2)) * AlgNum::sqrt(2 * z).scale(&half())
}

/// `d` with `d² = (-1)^{(n-k)/2} z_λ` for `λ ∈ D_n⁺`: the real root
/// `√z_λ` or `i·√z_λ`, so that `Im d ≥ 0`.
pub(crate) fn alt_split_root(lambda: &BarPartition) -> AlgNum {
    let n = lambda.size() as u64;
    let k = lambda.len() as u64;
    AlgNum::i_pow(((n - k) / 2) % 2) * AlgNum::sqrt(lambda.part_product())
}

/// Value of `label` at the class `ty` with `z`-flag 0.
pub(crate) fn value(label: &SpinLabel, ty: &ClassType, memo: &mut Memo) -> AlgNum {
    let lambda = &label.shape;
    let pi = &ty.cycle_type;
    let odd = pi.all_odd();
    match label.cover {
        Cover::Sym => {
            if odd {
                AlgNum::from_int(odd_class_value(lambda, pi.parts(), memo))
            } else if pi.parts() == lambda.parts() && label.assoc != Assoc::SelfAssoc {
                let v = sym_split_value(lambda);
                if label.assoc == Assoc::Plus {
                    v
                } else {
                    -v
                }
            } else {
                AlgNum::zero()
            }
        }
        Cover::Alt => {
            if label.assoc == Assoc::SelfAssoc {
                return if odd { AlgNum::from_int(odd_class_value(lambda, pi.parts(), memo)) } else { AlgNum::zero() };
            }
            let at_lambda = pi.parts() == lambda.parts();
            let plus = matches!(
                (label.assoc, ty.half),
                (Assoc::Plus, None | Some(Half::First)) | (Assoc::Minus, Some(Half::Second))
            );
            let signed_root = || {
                let d = alt_split_root(lambda).scale(&half());
                if plus {
                    d
                } else {
                    -d
                }
            };
            if odd {
                let s = AlgNum::from_int(odd_class_value(lambda, pi.parts(), memo)).scale(&half());
                if at_lambda && ty.half.is_some() {
                    s + signed_root()
                } else {
                    s
                }
            } else if at_lambda {
                signed_root()
            } else {
                AlgNum::zero()
            }
        }
    }
}
