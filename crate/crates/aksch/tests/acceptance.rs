//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! The two worked infinite-type instances (n = 5, e = 6, f = (0,1,3) and
//! n = 7, e = 16, f = (0,2,8,10)) serve as golden fixtures; everything else
//! is exhaustive on small parameter grids.

use std::collections::BTreeSet;

use aksch::blocks::{block_partition_of, morita_reduction, residue_content};
use aksch::combinatorics::{
    enumerate_multipartitions, multipartition_as_type, Multipartition, Partition,
};
use aksch::grading::{graded_dim_check, weights, LevelComposition};
use aksch::jantzen::{decomposition_matrix, jantzen_coefficient, ModularConfig};
use aksch::parameters::{classify, Extended, ParameterSet, VerdictKind};
use aksch::quiver::AmAlgebra;
use aksch::tableaux::{
    count_semistandard, count_standard, dim_schur, enumerate_standard, omega,
};

fn params(e: u64, f: &[u64]) -> ParameterSet {
    ParameterSet::new(Extended::Finite(e), f.to_vec(), 0).unwrap()
}

fn mp(spec: &[&[u32]]) -> Multipartition {
    Multipartition::new(spec.iter().map(|p| Partition::new(p.to_vec())).collect())
}

fn pass(criterion: &str) {
    println!("criterion {criterion}: PASS");
}

/// All exponent vectors of length `r` over `0..e`.
fn f_vectors(e: u64, r: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..e).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

#[test]
fn criterion_01_classifier_matches_the_worked_instances() {
    let v = classify(5, &params(6, &[0, 1, 3]));
    assert_eq!(v.kind, VerdictKind::Infinite);
    let v = classify(7, &params(16, &[0, 2, 8, 10]));
    assert_eq!(v.kind, VerdictKind::Infinite);
    pass("01 (classifier vs worked instances)");
}

#[test]
fn criterion_02_one_component_trichotomy() {
    for e in 2..=5u64 {
        let p = params(e, &[0]);
        for n in 1..=12usize {
            let v = classify(n, &p);
            let nn = n as u64;
            assert_eq!(v.kind == VerdictKind::Semisimple, nn < e, "e={e} n={n}");
            assert_eq!(v.is_finite_type(), nn < 2 * e, "e={e} n={n}");
            assert_eq!(v.kind == VerdictKind::Wild, nn >= 2 * e, "e={e} n={n}");
        }
    }
    pass("02 (r = 1 trichotomy)");
}

#[test]
fn criterion_03_q_one_law() {
    for r in 2..=3usize {
        let p = ParameterSet::q_one(r, 0).unwrap();
        for n in 1..=4usize {
            let v = classify(n, &p);
            assert_eq!(v.is_finite_type(), n == 1, "r={r} n={n}");
            if n >= 3 {
                assert_eq!(v.kind, VerdictKind::Wild, "r={r} n={n}");
            }
            if n == 2 {
                assert_eq!(v.kind, VerdictKind::Infinite);
                assert_eq!(v.note.as_deref(), Some("tame-or-wild unknown"));
            }
        }
    }
    pass("03 (q = 1 law)");
}

#[test]
fn criterion_04_block_engine() {
    // e = 5: sizes {3,1,1} with the named three-member block
    let p = params(5, &[0, 1]);
    let blocks = block_partition_of(&enumerate_multipartitions(2, 2), &p);
    let mut sizes: Vec<usize> = blocks.iter().map(|b| b.members.len()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 1, 3]);
    let three = blocks.iter().find(|b| b.members.len() == 3).unwrap();
    let expect: BTreeSet<Multipartition> = [
        mp(&[&[2], &[]]),
        mp(&[&[1], &[1]]),
        mp(&[&[], &[1, 1]]),
    ]
    .into_iter()
    .collect();
    assert_eq!(three.members.iter().cloned().collect::<BTreeSet<_>>(), expect);

    // the five named members of the e = 6 instance share content {3,2,1,0,5}
    let p = params(6, &[0, 1, 3]);
    let named = [
        mp(&[&[], &[], &[1, 1, 1, 1, 1]]),
        mp(&[&[], &[1, 1, 1], &[1, 1]]),
        mp(&[&[], &[2, 1, 1], &[1]]),
        mp(&[&[], &[3, 1, 1], &[]]),
        mp(&[&[1, 1], &[], &[1, 1, 1]]),
    ];
    for la in &named {
        assert_eq!(residue_content(la, &p), vec![0, 1, 2, 3, 5], "la={la}");
    }
    pass("04 (block engine)");
}

#[test]
fn criterion_05_finite_regime_decomposition() {
    let p = params(5, &[0, 1]);
    let cfg = ModularConfig::default_for(2, 2);
    let blocks = block_partition_of(&enumerate_multipartitions(2, 2), &p);
    let three = blocks.iter().find(|b| b.members.len() == 3).unwrap();
    // decomposition_matrix validates J[la_i][la_{i-1}] > 0 internally
    let dec = decomposition_matrix(three, &p, &cfg).unwrap();
    assert_eq!(dec.d, vec![vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, 1]]);
    assert_eq!(dec.c, vec![vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 1]]);
    assert!(dec.table.get(1, 0) > 0);
    assert!(dec.table.get(2, 1) > 0);
    pass("05 (finite-regime decomposition)");
}

#[test]
fn criterion_06_jantzen_pattern_of_the_infinite_proofs() {
    // three-exponent instance
    let p = params(6, &[0, 1, 3]);
    let cfg = ModularConfig::default_for(5, 3);
    let la0 = mp(&[&[], &[], &[1, 1, 1, 1, 1]]);
    let la1 = mp(&[&[], &[1, 1, 1], &[1, 1]]);
    let lak = mp(&[&[1, 1], &[], &[1, 1, 1]]);
    let j10 = jantzen_coefficient(&la1, &la0, &p, &cfg).unwrap();
    let jk0 = jantzen_coefficient(&lak, &la0, &p, &cfg).unwrap();
    let jk1 = jantzen_coefficient(&lak, &la1, &p, &cfg).unwrap();
    assert!(j10 > 0 && jk0 > 0 && jk1 == 0);
    // magnitudes under the default config, frozen as fixtures
    assert_eq!((j10, jk0), (4, 2));

    // four-exponent instance
    let p = params(16, &[0, 2, 8, 10]);
    let cfg = ModularConfig::default_for(7, 4);
    let mu0 = mp(&[&[], &[1, 1, 1], &[], &[1, 1, 1, 1]]);
    let mu1 = mp(&[&[], &[1, 1, 1], &[1, 1], &[1, 1]]);
    let muk = mp(&[&[1], &[1, 1], &[], &[1, 1, 1, 1]]);
    let j10 = jantzen_coefficient(&mu1, &mu0, &p, &cfg).unwrap();
    let jk0 = jantzen_coefficient(&muk, &mu0, &p, &cfg).unwrap();
    let jk1 = jantzen_coefficient(&muk, &mu1, &p, &cfg).unwrap();
    assert!(j10 > 0 && jk0 > 0 && jk1 == 0);
    assert_eq!((j10, jk0), (6, 2));
    pass("06 (Jantzen pattern of the infinite proofs)");
}

#[test]
fn criterion_07_finite_blocks_vary_in_two_components() {
    let mut checked = 0usize;
    for n in 1..=5usize {
        let all = enumerate_multipartitions(n, 3);
        for e in 2..=9u64 {
            for f in f_vectors(e, 3) {
                let p = params(e, &f);
                if !classify(n, &p).is_finite_type() {
                    continue;
                }
                for b in block_partition_of(&all, &p) {
                    assert!(
                        b.varying.len() <= 2,
                        "n={n} e={e} f={f:?} content={:?}",
                        b.content
                    );
                    let red = morita_reduction(&b, &p).unwrap();
                    assert_eq!(
                        red.reduced_block.members.len(),
                        b.members.len(),
                        "n={n} e={e} f={f:?}"
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000, "grid too small: {checked}");
    pass("07 (finite blocks vary in at most two components)");
}

#[test]
fn criterion_08_dimension_identities() {
    // cellular basis count via exhaustive standard fillings
    for n in 0..=5usize {
        for r in 1..=3usize {
            let total: u128 = enumerate_multipartitions(n, r)
                .iter()
                .map(|la| {
                    let c = enumerate_standard(la).len() as u128;
                    c * c
                })
                .sum();
            let expect = (r as u128).pow(n as u32) * (1..=n as u128).product::<u128>();
            assert_eq!(total, expect, "n={n} r={r}");
        }
    }
    assert_eq!(dim_schur(2, 1, &[2]), 10);
    // type-omega semistandard tableaux biject with standard tableaux
    for n in 1..=4usize {
        for r in 1..=3usize {
            let m = vec![n; r];
            let w = multipartition_as_type(&omega(n, r), &m);
            for la in enumerate_multipartitions(n, r) {
                assert_eq!(
                    count_semistandard(&la, &w).unwrap() as u128,
                    count_standard(&la)
                );
            }
        }
    }
    // graded dimension identity for two groups
    for n in 0..=3usize {
        for r in 2..=3usize {
            let m = vec![n.max(1); r];
            let groupings: Vec<Vec<usize>> = if r == 2 {
                vec![vec![1, 1]]
            } else {
                vec![vec![1, 2], vec![2, 1]]
            };
            for parts in groupings {
                let p = LevelComposition::new(parts).unwrap();
                for eps in weights(n, 2) {
                    let rep = graded_dim_check(n, r, &m, &p, &eps).unwrap();
                    assert!(rep.pass, "n={n} r={r} p={:?} eps={eps:?}", p.parts());
                }
            }
        }
    }
    pass("08 (dimension identities)");
}

#[test]
fn criterion_09_quiver_model() {
    for m in 1..=6usize {
        // construction checks the relations and associativity exhaustively
        let a = AmAlgebra::new(m);
        assert_eq!(a.dim(), 4 * m - 3);
        let cartan = a.cartan();
        let mut d = vec![vec![0u64; m]; m];
        for i in 0..m {
            d[i][i] = 1;
            if i > 0 {
                d[i][i - 1] = 1;
            }
        }
        for i in 0..m {
            for j in 0..m {
                let expect: u64 = (0..m).map(|k| d[k][i] * d[k][j]).sum();
                assert_eq!(cartan[i][j], expect, "m={m} C[{i}][{j}]");
            }
        }
        for i in 1..=m {
            for j in 1..=m {
                let expect = if i == j {
                    if i == m {
                        1
                    } else {
                        2
                    }
                } else if i.abs_diff(j) == 1 {
                    1
                } else {
                    0
                };
                assert_eq!(a.hom_dim(i, j), expect, "m={m} hom({i},{j})");
            }
            let layers = a.projective_radical_series(i);
            assert_eq!(layers.last().unwrap().len(), 1, "simple socle m={m} v={i}");
        }
    }
    pass("09 (quiver model of finite blocks)");
}

#[test]
fn criterion_10_invariance_suite() {
    // classifier invariance under exponent shifts and permutations
    for e in 2..=8u64 {
        for r in 1..=3usize {
            for f in f_vectors(e, r) {
                let p = params(e, &f);
                let kinds: Vec<VerdictKind> = (1..=6).map(|n| classify(n, &p).kind).collect();
                for s in 1..e {
                    let shifted: Vec<u64> = f.iter().map(|&x| (x + s) % e).collect();
                    let ps = params(e, &shifted);
                    for (i, n) in (1..=6usize).enumerate() {
                        assert_eq!(classify(n, &ps).kind, kinds[i], "shift e={e} f={f:?} s={s}");
                    }
                }
                for perm in permutations(r) {
                    let permuted: Vec<u64> = perm.iter().map(|&i| f[i]).collect();
                    let pp = params(e, &permuted);
                    for (i, n) in (1..=6usize).enumerate() {
                        assert_eq!(classify(n, &pp).kind, kinds[i], "perm e={e} f={f:?}");
                    }
                }
            }
        }
    }

    // block partitions are equivariant under component permutations: the
    // relabelled diagram has the same content under the relabelled exponents
    for e in 2..=8u64 {
        for n in 1..=5usize {
            let all = enumerate_multipartitions(n, 3);
            for f in f_vectors(e, 3) {
                let p = params(e, &f);
                for perm in permutations(3) {
                    let permuted_f: Vec<u64> = perm.iter().map(|&i| f[i]).collect();
                    let p2 = params(e, &permuted_f);
                    for la in &all {
                        let relabelled = Multipartition::new(
                            perm.iter().map(|&i| la.components()[i].clone()).collect(),
                        );
                        assert_eq!(
                            residue_content(&relabelled, &p2),
                            residue_content(la, &p),
                            "e={e} f={f:?} perm={perm:?} la={la}"
                        );
                    }
                }
            }
        }
    }

    // in the finite regime with r >= 3, n stays below e
    for e in 2..=8u64 {
        for f in f_vectors(e, 3) {
            let p = params(e, &f);
            for n in 1..=6usize {
                if classify(n, &p).is_finite_type() {
                    assert!((n as u64) < e, "e={e} f={f:?} n={n}");
                }
            }
        }
    }
    pass("10 (invariance suite)");
}

fn permutations(r: usize) -> Vec<Vec<usize>> {
    fn rec(rest: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            rec(rest, prefix, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..r).collect(), &mut Vec::new(), &mut out);
    out
}
