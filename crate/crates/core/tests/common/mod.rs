//! Reference implementations used only by tests. None of these call into the
//! library paths they are compared against.

#![allow(dead_code)]

use ooc::{Cell, MatrixCode};
use rand::Rng;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn totient(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of binary necklaces of length `n` with `w` ones:
/// `(1/n) * sum over d | gcd(n, w) of phi(d) * C(n/d, w/d)`.
pub fn necklace_count(n: u64, w: u64) -> u64 {
    let g = gcd(n, w);
    let total: u64 = (1..=g)
        .filter(|d| g.is_multiple_of(*d))
        .map(|d| totient(d) * binomial(n / d, w / d))
        .sum();
    total / n
}

/// Counts rotation classes of weight-`w` words of length `n` by visiting
/// every word and keeping those that are the smallest of their rotations.
pub fn brute_force_necklaces(n: u32, w: u32) -> u64 {
    let mask = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let rotate = |x: u32, k: u32| ((x << k) | (x >> (n - k))) & mask;
    (0..=mask)
        .filter(|x| x.count_ones() == w)
        .filter(|&x| (1..n).all(|k| rotate(x, k) >= x))
        .count() as u64
}

/// `x[i][j] * y[i][(j - tau) mod N]` summed over the grid, i.e. the overlap
/// of `x` with `y` moved right by `tau` columns.
pub fn shifted_overlap(x: &[Vec<bool>], y: &[Vec<bool>], tau: usize) -> u32 {
    let mut total = 0;
    for (rx, ry) in x.iter().zip(y) {
        let n = rx.len();
        for j in 0..n {
            if rx[j] && ry[(j + n - tau % n) % n] {
                total += 1;
            }
        }
    }
    total
}

/// Moves every one of `grid` right by `p` columns.
pub fn shift_grid(grid: &[Vec<bool>], p: usize) -> Vec<Vec<bool>> {
    grid.iter()
        .map(|row| {
            let n = row.len();
            (0..n).map(|j| row[(j + n - p % n) % n]).collect()
        })
        .collect()
}

/// True if the grids coincide after some column shift.
pub fn equal_up_to_shift(a: &[Vec<bool>], b: &[Vec<bool>]) -> bool {
    let n = a.first().map_or(0, Vec::len);
    (0..n.max(1)).any(|p| shift_grid(b, p) == a)
}

/// Every maximal clique of a graph on at most 20 vertices, found by checking
/// all vertex subsets. `adj[v]` is the neighbour bitmask of `v`.
pub fn brute_force_maximal_cliques(adj: &[u32]) -> Vec<Vec<usize>> {
    let n = adj.len();
    assert!(n <= 20);
    if n == 0 {
        return Vec::new();
    }
    let full = 1usize << n;
    let mut is_clique = vec![false; full];
    is_clique[0] = true;
    for s in 1..full {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        is_clique[s] = is_clique[rest] && (adj[low] as usize & rest) == rest;
    }
    let mut out = Vec::new();
    for s in 1..full {
        if !is_clique[s] {
            continue;
        }
        let extendable = (0..n).any(|v| s & (1 << v) == 0 && (adj[v] as usize & s) == s);
        if !extendable {
            out.push((0..n).filter(|v| s & (1 << v) != 0).collect::<Vec<_>>());
        }
    }
    out.sort();
    out
}

pub fn random_graph<R: Rng>(rng: &mut R, max_n: usize) -> (usize, Vec<(usize, usize)>, Vec<u32>) {
    let n = rng.gen_range(1..=max_n);
    let density: f64 = rng.gen_range(0.05..0.95);
    let mut edges = Vec::new();
    let mut adj = vec![0u32; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
    }
    (n, edges, adj)
}

/// A random code on an `L x N` grid with `1 <= L, N <= max_dim`.
pub fn random_code<R: Rng>(rng: &mut R, max_dim: u32) -> MatrixCode {
    let rows = rng.gen_range(1..=max_dim);
    let columns = rng.gen_range(1..=max_dim);
    random_code_on(rng, rows, columns)
}

pub fn random_code_on<R: Rng>(rng: &mut R, rows: u32, columns: u32) -> MatrixCode {
    let total = rows * columns;
    let weight = rng.gen_range(1..=total);
    let picked = rand::seq::index::sample(rng, total as usize, weight as usize);
    let cells: Vec<Cell> = picked
        .into_iter()
        .map(|q| Cell::new(q as u32 % rows, q as u32 / rows))
        .collect();
    MatrixCode::from_cells(rows, columns, cells).unwrap()
}
