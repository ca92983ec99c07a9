//! Independent oracles shared by the integration tests. Nothing here calls
//! the cohomology module: coboundaries are rebuilt from the group table.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use modext::groups::FiniteGroup;

fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Normalized n-tuples (no identity entry), first slot most significant.
fn tuples(order: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                (1..order).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

fn index_of(t: &[usize], order: usize) -> Option<usize> {
    let mut k = 0;
    for &a in t {
        if a == 0 {
            return None;
        }
        k = k * (order - 1) + (a - 1);
    }
    Some(k)
}

/// Dense matrix of δ: C^n → C^{n+1}, rows by (n+1)-tuples.
pub fn dense_coboundary(g: &FiniteGroup, n: usize) -> Vec<Vec<i64>> {
    let order = g.order();
    let cols = (order - 1).pow(n as u32);
    tuples(order, n + 1)
        .into_iter()
        .map(|t| {
            let mut row = vec![0i64; cols];
            let mut add = |args: Vec<usize>, s: i64| {
                if let Some(c) = index_of(&args, order) {
                    row[c] += s;
                }
            };
            add(t[1..].to_vec(), 1);
            for i in 0..n {
                let mut a = t[..i].to_vec();
                a.push(g.mul(t[i], t[i + 1]));
                a.extend_from_slice(&t[i + 2..]);
                add(a, if i % 2 == 0 { -1 } else { 1 });
            }
            add(t[..n].to_vec(), if n % 2 == 0 { -1 } else { 1 });
            row
        })
        .collect()
}

/// Valuations of the nonzero elementary divisors of `m` modulo p^e by
/// dense elimination with minimal-valuation pivots.
pub fn dense_local_valuations(m: &[Vec<i64>], p: u64, e: u32) -> Vec<u32> {
    let q = (p as u128).pow(e);
    let mut a: Vec<Vec<u128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| (x.rem_euclid(q as i64)) as u128).collect())
        .collect();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let val = |x: u128| -> u32 {
        if x == 0 {
            return e;
        }
        let mut v = 0;
        let mut y = x;
        while y % p as u128 == 0 {
            y /= p as u128;
            v += 1;
        }
        v
    };
    let inv = |x: u128| -> u128 {
        // unit inverse mod q by exponentiation over the unit group order
        let phi = q / p as u128 * (p as u128 - 1);
        let mut r = 1u128;
        let mut b = x % q;
        let mut k = phi - 1;
        while k > 0 {
            if k & 1 == 1 {
                r = r * b % q;
            }
            b = b * b % q;
            k >>= 1;
        }
        r
    };
    let mut out = Vec::new();
    let mut live_rows: Vec<usize> = (0..rows).collect();
    let mut live_cols: Vec<usize> = (0..cols).collect();
    loop {
        let mut best: Option<(u32, usize, usize)> = None;
        'scan: for (ri, &r) in live_rows.iter().enumerate() {
            for (ci, &c) in live_cols.iter().enumerate() {
                let v = val(a[r][c]);
                if v < e && best.map_or(true, |b| v < b.0) {
                    best = Some((v, ri, ci));
                    if v == 0 {
                        break 'scan;
                    }
                }
            }
        }
        let Some((v, ri, ci)) = best else { break };
        let (r, c) = (live_rows[ri], live_cols[ci]);
        out.push(v);
        let pv = a[r][c];
        let unit = inv(pv / (p as u128).pow(v));
        // clear column c using row r
        for &r2 in &live_rows {
            if r2 == r || a[r2][c] == 0 {
                continue;
            }
            let f = (a[r2][c] / (p as u128).pow(v)) % q * unit % q;
            for &c2 in &live_cols {
                let sub = f * a[r][c2] % q;
                a[r2][c2] = (a[r2][c2] + q - sub) % q;
            }
        }
        live_rows.swap_remove(ri);
        live_cols.swap_remove(ci);
    }
    out.sort_unstable();
    out
}

/// Invariant factors of the torsion of coker δ_n, i.e. H^n(G, U(1)).
pub fn dense_cohomology_invariants(g: &FiniteGroup, n: usize) -> Vec<u64> {
    let m = dense_coboundary(g, n);
    let mut parts: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for (p, k) in factor(g.order() as u64) {
        let vals = dense_local_valuations(&m, p, k + 2);
        let mut powers: Vec<u64> = vals.into_iter().filter(|&v| v > 0).map(|v| p.pow(v)).collect();
        powers.sort_unstable_by(|a, b| b.cmp(a));
        parts.insert(p, powers);
    }
    combine(parts)
}

fn combine(parts: BTreeMap<u64, Vec<u64>>) -> Vec<u64> {
    let len = parts.values().map(|v| v.len()).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for v in parts.values() {
        for (i, q) in v.iter().enumerate() {
            out[len - 1 - i] *= q;
        }
    }
    out
}

/// Brute force: normalized Z_m-valued n-cocycles with m = |G|, modulo
/// those that are coboundaries of Z_{|G|²}-valued (n−1)-cochains. Returns
/// the invariant factors of the quotient.
pub fn exhaustive_cohomology(g: &FiniteGroup, n: usize) -> Vec<u64> {
    let order = g.order();
    if order == 1 {
        return vec![];
    }
    let m = order as u64;
    let big = m * m;
    let d_n = dense_coboundary(g, n);
    let cochains_n = tuples(order, n).len() as u32;
    // cocycles, stored in units of 1/big
    let mut cocycles: Vec<Vec<u64>> = Vec::new();
    let total = m.pow(cochains_n);
    for mut idx in 0..total {
        let mut c = vec![0u64; cochains_n as usize];
        for x in c.iter_mut() {
            *x = (idx % m) * (big / m);
            idx /= m;
        }
        let closed = d_n.iter().all(|row| {
            row.iter().zip(&c).fold(0i128, |acc, (&a, &x)| acc + a as i128 * x as i128).rem_euclid(big as i128) == 0
        });
        if closed {
            cocycles.push(c);
        }
    }
    // coboundaries of Z_big-valued (n−1)-cochains
    let d_prev = if n == 0 { vec![] } else { dense_coboundary(g, n - 1) };
    let prev_len = if n == 0 { 0 } else { tuples(order, n - 1).len() as u32 };
    let mut bounds: HashSet<Vec<u64>> = HashSet::new();
    if n == 0 {
        bounds.insert(vec![0; cochains_n as usize]);
    } else {
        for mut idx in 0..big.pow(prev_len) {
            let mut b = vec![0u64; prev_len as usize];
            for x in b.iter_mut() {
                *x = idx % big;
                idx /= big;
            }
            let img: Vec<u64> = d_prev
                .iter()
                .map(|row| row.iter().zip(&b).fold(0i128, |acc, (&a, &x)| acc + a as i128 * x as i128).rem_euclid(big as i128) as u64)
                .collect();
            bounds.insert(img);
        }
    }
    let exact: Vec<&Vec<u64>> = cocycles.iter().filter(|c| bounds.contains(*c)).collect();
    let h_order = cocycles.len() as u64 / exact.len() as u64;
    // torsion counts |H[p^j]| determine the invariant factors
    let mut parts: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for (p, _) in factor(h_order) {
        let mut counts = vec![1u64];
        let mut pj = 1u64;
        loop {
            pj *= p;
            let killed = cocycles
                .iter()
                .filter(|c| {
                    let s: Vec<u64> = c.iter().map(|&x| x * pj % big).collect();
                    bounds.contains(&s)
                })
                .count() as u64
                / exact.len() as u64;
            if killed == *counts.last().unwrap() {
                break;
            }
            counts.push(killed);
        }
        // number of cyclic factors of order ≥ p^j is log_p(counts[j]/counts[j-1])
        let ge: Vec<u32> = counts.windows(2).map(|w| (w[1] / w[0]).ilog(p)).collect();
        let mut powers = Vec::new();
        for j in 0..ge.len() {
            let exactly = ge[j] - ge.get(j + 1).copied().unwrap_or(0);
            for _ in 0..exactly {
                powers.push(p.pow(j as u32 + 1));
            }
        }
        powers.sort_unstable_by(|a, b| b.cmp(a));
        parts.insert(p, powers);
    }
    combine(parts)
}
