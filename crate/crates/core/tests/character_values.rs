mod common;

use barspin_core::spinchar::{odd_class_value, CharacterTable};
use barspin_core::{AlgNum, BarPartition, Cover, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;

#[test]
fn recursion_matches_q_functions() {
    let q = common::QFunctions::new(9);
    for n in 1..=9 {
        for lambda in BarPartition::all(n) {
            for rho in Partition::all_odd_parts(n) {
                let expected = q.value(&lambda, &rho);
                let got = odd_class_value(&lambda, &rho).unwrap();
                assert_eq!(BigRational::from_integer(BigInt::from(got)), expected, "{lambda} at {rho}");
            }
        }
    }
}

#[test]
fn z_flag_negates_every_value() {
    for n in 1..=8 {
        for cover in [Cover::Sym, Cover::Alt] {
            let t = CharacterTable::new(cover, n).unwrap();
            let classes = t.split_classes();
            for x in t.labels() {
                for pair in classes.chunks(2) {
                    assert!(!pair[0].z && pair[1].z);
                    assert_eq!(t.value(x, &pair[1]).unwrap(), -t.value(x, &pair[0]).unwrap());
                    assert_eq!(barspin_core::spinchar::char_value(x, &pair[0]).unwrap(), t.value(x, &pair[0]).unwrap());
                }
            }
        }
    }
}

#[test]
fn non_odd_shapes_are_rejected() {
    let lambda = BarPartition::new(vec![3, 1]).unwrap();
    assert!(odd_class_value(&lambda, &Partition::new(vec![2, 2]).unwrap()).is_err());
    assert!(odd_class_value(&lambda, &Partition::new(vec![3]).unwrap()).is_err());
    assert_eq!(
        AlgNum::from_int(odd_class_value(&lambda, &Partition::new(vec![1; 4]).unwrap()).unwrap()),
        AlgNum::from_int(4)
    );
}
