//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls the solvers under test.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use spectrum_core::Graph;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Largest independent set by scanning all subsets (n <= 20).
pub fn brute_alpha(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    (0u64..1 << n)
        .filter(|&m| {
            let s = members(m, n);
            s.iter().all(|&a| s.iter().all(|&b| a == b || !g.has_edge(a, b)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest number of cliques covering the vertices, by dynamic programming
/// over vertex subsets (n <= 12).
pub fn brute_clique_cover(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 12);
    let full = (1usize << n) - 1;
    let is_clique: Vec<bool> = (0..=full)
        .map(|m| {
            let s = members(m as u64, n);
            s.iter().all(|&a| s.iter().all(|&b| a == b || g.has_edge(a, b)))
        })
        .collect();
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for m in 1..=full {
        let low = m & m.wrapping_neg();
        // Enumerate cliques containing the lowest vertex of m.
        let rest = m ^ low;
        let mut sub = rest;
        loop {
            let c = sub | low;
            if is_clique[c] && best[m ^ c] != usize::MAX {
                best[m] = best[m].min(best[m ^ c] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full]
}

/// Maximal cliques by scanning all subsets.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let clique = |m: u64| {
        let s = members(m, n);
        s.iter().all(|&a| s.iter().all(|&b| a == b || g.has_edge(a, b)))
    };
    (1u64..1 << n)
        .filter(|&m| clique(m) && (0..n).all(|v| m >> v & 1 == 1 || !clique(m | 1 << v)))
        .map(|m| members(m, n))
        .collect()
}

/// Solves a square system exactly; `None` when singular.
fn solve(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[col][col];
                for c in col..n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
                let t = &f * &b[col];
                b[r] -= t;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Fractional clique cover number via its dual: maximise `sum y` over
/// `y >= 0` with `sum_{v in C} y_v <= 1` for every maximal clique `C`, by
/// enumerating every vertex of the polytope.
pub fn brute_fractional_clique_cover(g: &Graph) -> Q {
    let n = g.n();
    let mut rows: Vec<(Vec<Q>, Q)> = maximal_cliques(g)
        .into_iter()
        .map(|c| {
            let mut r = vec![q(0); n];
            for v in c {
                r[v] = q(1);
            }
            (r, q(1))
        })
        .collect();
    for v in 0..n {
        let mut r = vec![q(0); n];
        r[v] = q(-1);
        rows.push((r, q(0)));
    }
    let m = rows.len();
    let mut best: Option<Q> = None;
    let mut pick: Vec<usize> = (0..n).collect();
    loop {
        let a = pick.iter().map(|&i| rows[i].0.clone()).collect();
        let b = pick.iter().map(|&i| rows[i].1.clone()).collect();
        if let Some(y) = solve(a, b) {
            let feasible = rows.iter().all(|(r, rhs)| {
                let lhs: Q = r.iter().zip(&y).map(|(x, y)| x * y).sum();
                lhs <= *rhs
            });
            if feasible {
                let value: Q = y.iter().sum();
                if best.as_ref().is_none_or(|b| value > *b) {
                    best = Some(value);
                }
            }
        }
        // Next n-combination of 0..m.
        let mut i = n;
        loop {
            if i == 0 {
                return best.unwrap_or_else(|| q(0));
            }
            i -= 1;
            if pick[i] < m - n + i {
                pick[i] += 1;
                for j in i + 1..n {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Rank over GF(p) by elimination on `i64`.
pub fn rank_gf(m: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..a.len()).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, r);
        let inv = (1..p).find(|x| x * a[rank][c] % p == 1).unwrap();
        for i in 0..a.len() {
            if i != rank && a[i][c] != 0 {
                let f = a[i][c] * inv % p;
                for j in 0..cols {
                    a[i][j] = (a[i][j] - f * a[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Minimum rank over all matrices with nonzero diagonal and zeros at
/// non-adjacent pairs, by enumerating every such matrix.
pub fn brute_min_rank(g: &Graph, p: i64) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    // Free cells: the diagonal (values 1..p) and both orientations of each edge (0..p).
    let mut cells: Vec<(usize, usize, i64)> = (0..n).map(|v| (v, v, 1)).collect();
    for u in 0..n {
        for v in 0..n {
            if u != v && g.has_edge(u, v) {
                cells.push((u, v, 0));
            }
        }
    }
    let mut digits: Vec<i64> = cells.iter().map(|c| c.2).collect();
    let mut best = n;
    loop {
        let mut m = vec![vec![0i64; n]; n];
        for (k, &(u, v, _)) in cells.iter().enumerate() {
            m[u][v] = digits[k];
        }
        best = best.min(rank_gf(&m, p));
        let mut k = 0;
        loop {
            if k == cells.len() {
                return best;
            }
            digits[k] += 1;
            if digits[k] < p {
                break;
            }
            digits[k] = cells[k].2;
            k += 1;
        }
    }
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// `n cos(π/n) / (1 + cos(π/n))`, the theta number of an odd cycle.
pub fn odd_cycle_theta(n: usize) -> f64 {
    let c = (std::f64::consts::PI / n as f64).cos();
    n as f64 * c / (1.0 + c)
}

/// Theta of the circulant on `Z_n` joining `i` to `i ± d`, from its
/// spectrum. The graph is edge-transitive and regular, so
/// `θ = n·(−λ_min)/(λ_max − λ_min)` with `λ_k = 2 cos(2πkd/n)`.
pub fn circulant_theta(n: usize, d: usize) -> f64 {
    let lambdas: Vec<f64> = (0..n)
        .map(|k| 2.0 * (2.0 * std::f64::consts::PI * (k * d) as f64 / n as f64).cos())
        .collect();
    let max = lambdas.iter().cloned().fold(f64::MIN, f64::max);
    let min = lambdas.iter().cloned().fold(f64::MAX, f64::min);
    n as f64 * -min / (max - min)
}
