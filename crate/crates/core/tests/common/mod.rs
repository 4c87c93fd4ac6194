#![allow(clippy::needless_range_loop)]
#![allow(dead_code)]

//! Shared fixture groups for the integration suites.

use qhg_core::group::FiniteGroup;
use qhg_core::scalar::Scalar;

pub fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

pub fn r(n: i64, d: i64) -> Scalar {
    Scalar::from_ratio(n, d)
}

/// The symmetric group on three letters; composition is left-to-right, so
/// `table[i][j]` is "apply i, then j".
pub fn s3() -> FiniteGroup {
    let perms: [([usize; 3], &str); 6] = [
        ([0, 1, 2], "e"),
        ([1, 0, 2], "(12)"),
        ([0, 2, 1], "(23)"),
        ([2, 1, 0], "(13)"),
        ([1, 2, 0], "(123)"),
        ([2, 0, 1], "(132)"),
    ];
    let compose = |p: &[usize; 3], q: &[usize; 3]| [q[p[0]], q[p[1]], q[p[2]]];
    let table = perms
        .iter()
        .map(|(p, _)| {
            perms
                .iter()
                .map(|(q, _)| {
                    let out = compose(p, q);
                    perms.iter().position(|(x, _)| *x == out).unwrap()
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(perms.iter().map(|(_, l)| l.to_string()).collect(), table).unwrap()
}

pub fn s3_transposition_subgroup(g: &FiniteGroup) -> Vec<usize> {
    vec![g.identity(), g.index_of("(12)").unwrap()]
}

pub fn s3_alternating_subgroup(g: &FiniteGroup) -> Vec<usize> {
    vec![
        g.identity(),
        g.index_of("(123)").unwrap(),
        g.index_of("(132)").unwrap(),
    ]
}

/// Dihedral group of the square: elements `r^a s^b` with
/// `(a, b)·(c, d) = (a + (-1)^b c mod 4, b + d mod 2)`.
pub fn d4() -> FiniteGroup {
    let idx = |a: usize, b: usize| b * 4 + a;
    let labels: Vec<String> = (0..8)
        .map(|i| {
            let (a, b) = (i % 4, i / 4);
            match (a, b) {
                (0, 0) => "e".to_string(),
                (a, 0) => format!("r{a}"),
                (0, _) => "s".to_string(),
                (a, _) => format!("r{a}s"),
            }
        })
        .collect();
    let mut table = vec![vec![0usize; 8]; 8];
    for i in 0..8 {
        let (a, b) = (i % 4, i / 4);
        for j in 0..8 {
            let (c, d) = (j % 4, j / 4);
            let a2 = if b == 0 {
                (a + c) % 4
            } else {
                (a + 4 - c % 4) % 4
            };
            table[i][j] = idx(a2, (b + d) % 2);
        }
    }
    FiniteGroup::from_table(labels, table).unwrap()
}

/// A non-normal order-two subgroup of the dihedral group: `{e, s}`.
pub fn d4_reflection_subgroup(g: &FiniteGroup) -> Vec<usize> {
    vec![g.identity(), g.index_of("s").unwrap()]
}
