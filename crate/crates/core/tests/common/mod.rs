#![allow(dead_code)]

use knotinv::diagram::{pretzel_diagram, Crossing, KnotDiagram, PretzelSpec};
use knotinv::IntMatrix;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Every tuple of length `len` over `lo..=hi`, lexicographic.
pub fn tuples(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (lo..=hi).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

/// Compositions of `total` into at least two positive parts.
pub fn compositions(total: i64) -> Vec<Vec<i64>> {
    fn go(rest: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rest == 0 {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for part in 1..=rest {
            cur.push(part);
            go(rest - part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, &mut Vec::new(), &mut out);
    out
}

pub fn spec(tassels: &[i64]) -> PretzelSpec {
    PretzelSpec::new(tassels.to_vec()).unwrap()
}

/// Pretzel diagrams with at most `max` crossings, plus the crossingless and
/// one-kink diagrams.
pub fn small_diagrams(max: i64) -> Vec<(String, KnotDiagram)> {
    let mut out = vec![("unknot".to_string(), KnotDiagram::unknot())];
    let kink = KnotDiagram::new(vec![Crossing::new(0, 0, 0)]).unwrap();
    out.push(("kink".to_string(), kink));
    for total in 2..=max {
        for t in compositions(total) {
            let s = spec(&t);
            out.push((s.to_string(), pretzel_diagram(&s).unwrap()));
        }
    }
    out
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let rows: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    IntMatrix::from_rows(rows).unwrap()
}

/// Rank over `Z_p` by Gaussian elimination.
pub fn rank_mod_p(m: &IntMatrix, p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m
        .to_rows()
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| (i64::try_from(&x).unwrap()).rem_euclid(p))
                .collect()
        })
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let inv = |x: i64| (1..p).find(|y| x * y % p == 1).unwrap();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, pr);
        let s = inv(a[rank][c]);
        for x in a[rank].iter_mut() {
            *x = *x * s % p;
        }
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                let pivot_row = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}
