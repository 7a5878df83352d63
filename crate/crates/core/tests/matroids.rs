mod common;

use polychrome::bits::{self, Subset};
use polychrome::matroid::{enumerate_matroids, is_quotient, matroid_summands, Matroid};
use polychrome::polymatroid::Polymatroid;

use common::{all_polymatroids, is_matroid_table, oracle_matroids, satisfies_axioms};

fn tables(ms: &[Matroid]) -> Vec<Vec<u32>> {
    ms.iter().map(|m| m.table().to_vec()).collect()
}

/// Flats found by definition: no outside element keeps the rank.
fn flats(t: &[u32], n: usize) -> Vec<usize> {
    let full = (1usize << n) - 1;
    (0..=full)
        .filter(|&x| (0..n).filter(|e| x >> e & 1 == 0).all(|e| t[x | 1 << e] > t[x]))
        .collect()
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 0..=4 {
        assert_eq!(tables(&enumerate_matroids(n, n).unwrap()), oracle_matroids(n), "n = {n}");
    }
}

#[test]
fn enumeration_respects_rank_bound() {
    for n in 0..=4 {
        for r in 0..=n {
            let want: Vec<Vec<u32>> = oracle_matroids(n)
                .into_iter()
                .filter(|t| t[(1 << n) - 1] as usize <= r)
                .collect();
            assert_eq!(tables(&enumerate_matroids(n, r).unwrap()), want);
        }
    }
    assert_eq!(enumerate_matroids(5, 5).unwrap().len(), 406);
    assert_eq!(enumerate_matroids(6, 6).unwrap().len(), 3807);
}

#[test]
fn constructors() {
    let u24 = Matroid::uniform(2, 0b1111, 4).unwrap();
    assert_eq!(u24.rank(0b0111), 2);
    assert_eq!(u24.rank(0b0001), 1);
    let partial = Matroid::uniform(1, 0b011, 3).unwrap();
    assert_eq!(partial.loops(), 0b100);
    assert!(Matroid::uniform(4, 0b111, 3).is_err());
    assert_eq!(Matroid::free(3).unwrap().coloops(), 0b111);
    assert!(Matroid::from_table(2, vec![0, 2, 1, 2]).is_err());
    assert!(Matroid::new(Polymatroid::from_table(1, vec![0, 2]).unwrap()).is_err());
}

#[test]
fn circuits_match_definition() {
    for n in 0..=4 {
        for t in oracle_matroids(n) {
            let m = Matroid::from_table(n, t.clone()).unwrap();
            let dependent = |x: usize| (t[x] as usize) < (x as u32).count_ones() as usize;
            let want: Vec<Subset> = (1..1usize << n)
                .filter(|&c| dependent(c) && (0..n).all(|e| c >> e & 1 == 0 || !dependent(c & !(1 << e))))
                .map(|c| c as Subset)
                .collect();
            assert_eq!(m.circuits(), want);
        }
    }
}

#[test]
fn parallel_classes_partition_non_loops() {
    for t in oracle_matroids(4) {
        let m = Matroid::from_table(4, t).unwrap();
        let classes = m.parallel_classes();
        let union = classes.iter().fold(0, |a, &c| a | c);
        assert_eq!(union, m.full() & !m.loops());
        for &c in &classes {
            assert_eq!(m.rank(c), 1);
        }
        for (i, &a) in classes.iter().enumerate() {
            for &b in &classes[i + 1..] {
                assert_eq!(a & b, 0);
                assert_eq!(m.rank(a | b), 2);
            }
        }
    }
}

#[test]
fn dual_is_an_involution_and_swaps_loops_and_coloops() {
    for n in 0..=4 {
        for t in oracle_matroids(n) {
            let m = Matroid::from_table(n, t).unwrap();
            let d = m.dual();
            assert!(is_matroid_table(d.table(), n));
            assert_eq!(d.dual(), m);
            assert_eq!(d.loops(), m.coloops());
            assert_eq!(d.total_rank() as usize, n - m.total_rank() as usize);
        }
    }
}

#[test]
fn quotient_matches_flat_containment() {
    let n = 3;
    let all = oracle_matroids(n);
    for q in &all {
        for l in &all {
            let want = flats(q, n).iter().all(|f| flats(l, n).contains(f));
            let mq = Matroid::from_table(n, q.clone()).unwrap();
            let ml = Matroid::from_table(n, l.clone()).unwrap();
            assert_eq!(is_quotient(&mq, &ml).unwrap(), want, "{q:?} vs {l:?}");
            // Q is a quotient of L exactly when L* is a quotient of Q*.
            assert_eq!(is_quotient(&ml.dual(), &mq.dual()).unwrap(), want);
        }
    }
}

#[test]
fn quotient_examples() {
    let u13 = Matroid::uniform(1, 0b111, 3).unwrap();
    let u23 = Matroid::uniform(2, 0b111, 3).unwrap();
    assert!(is_quotient(&u13, &u23).unwrap());
    assert!(!is_quotient(&u23, &u13).unwrap());
    assert!(is_quotient(&Matroid::zero(3).unwrap(), &u13).unwrap());
    assert!(is_quotient(&u13, &Matroid::uniform(1, 0b111, 4).unwrap()).is_err());
}

#[test]
fn minors_of_matroids_are_matroids() {
    for t in oracle_matroids(4) {
        let m = Matroid::from_table(4, t).unwrap();
        for a in 0..16u32 {
            for b in bits::subsets_of(15 & !a) {
                let minor = m.polymatroid().minor(a, b).unwrap();
                assert!(is_matroid_table(minor.table(), minor.n()));
            }
        }
    }
}

#[test]
fn relaxation_of_a_paving_hyperplane() {
    // Two disjoint 3-point lines in rank 3 on six elements.
    let lines = [0b000111u32, 0b111000];
    let m = Matroid::new(
        Polymatroid::from_fn(6, |x| {
            let s = bits::size(x) as u32;
            if lines.contains(&x) {
                2
            } else {
                s.min(3)
            }
        })
        .unwrap(),
    )
    .unwrap();
    assert_eq!(m.cyclic_hyperplanes(), lines.to_vec());
    let r1 = m.relax(&lines[..1]).unwrap();
    assert_eq!(r1.rank(0b000111), 3);
    assert_eq!(r1.rank(0b111000), 2);
    assert_eq!(m.relax(&lines).unwrap(), Matroid::uniform(3, 0b111111, 6).unwrap());
    assert!(m.relax(&[0b000011]).is_err());
}

#[test]
fn summands_match_brute_force() {
    for n in 1..=3 {
        let pool = oracle_matroids(n);
        for rho in all_polymatroids(n, 2) {
            let p = Polymatroid::from_table(n, rho.clone()).unwrap();
            let want: Vec<Vec<u32>> = pool
                .iter()
                .filter(|m| {
                    let rest: Vec<i64> = rho.iter().zip(m.iter()).map(|(&a, &b)| a as i64 - b as i64).collect();
                    satisfies_axioms(&rest, n)
                })
                .cloned()
                .collect();
            assert_eq!(tables(&matroid_summands(&p).unwrap()), want, "{rho:?}");
        }
    }
}
