//! Sparse Smith normal form over the local rings Z/p^e.
//!
//! Integer matrices here are coboundary matrices of bar complexes: very
//! sparse, with small entries. Reducing modulo p^e keeps every entry in a
//! machine word; as long as `e` exceeds the p-adic valuation of every
//! nonzero elementary divisor, the elimination recovers exactly the p-part
//! of the integral Smith form.
//!
//! Pivoting always takes an entry of minimal valuation, so both the row
//! and the column of a pivot can be cleared. Row and column operations are
//! logged; this is enough to solve linear systems and to recover columns of
//! the right transform afterwards without ever storing it densely.

/// Sparse integer matrix stored by rows; entries sorted by column, no zeros.
#[derive(Clone, Debug, Default)]
pub struct IntMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<Vec<(u32, i64)>>,
}

impl IntMatrix {
    pub fn new(ncols: usize) -> IntMatrix {
        IntMatrix {
            nrows: 0,
            ncols,
            rows: Vec::new(),
        }
    }

    /// Appends a row given as unsorted (column, value) pairs; duplicates add up.
    pub fn push_row(&mut self, mut entries: Vec<(u32, i64)>) {
        entries.sort_unstable_by_key(|e| e.0);
        let mut row: Vec<(u32, i64)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            match row.last_mut() {
                Some(last) if last.0 == c => last.1 += v,
                _ => row.push((c, v)),
            }
        }
        row.retain(|e| e.1 != 0);
        self.rows.push(row);
        self.nrows += 1;
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn mul_vec_mod(&self, x: &[u64], modulus: u64) -> Vec<u64> {
        self.rows
            .iter()
            .map(|row| {
                row.iter().fold(0u64, |acc, &(c, v)| {
                    add_mod(acc, mul_mod(to_residue(v, modulus), x[c as usize], modulus), modulus)
                })
            })
            .collect()
    }
}

#[inline]
fn to_residue(v: i64, q: u64) -> u64 {
    v.rem_euclid(q as i64) as u64
}

#[inline]
fn add_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 + b as u128) % q as u128) as u64
}

#[inline]
fn sub_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 + q as u128 - (b % q) as u128) % q as u128) as u64
}

#[inline]
fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

fn valuation(mut x: u64, p: u64, cap: u32) -> u32 {
    if x == 0 {
        return cap;
    }
    let mut v = 0;
    while x % p == 0 && v < cap {
        x /= p;
        v += 1;
    }
    v
}

/// Inverse of a unit modulo m via extended Euclid.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(m as i128) as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pivot {
    pub row: u32,
    pub col: u32,
    /// The pivot is `p^valuation · unit`.
    pub valuation: u32,
    pub unit: u64,
}

/// Result of eliminating an integer matrix over Z/p^e.
#[derive(Clone, Debug)]
pub struct LocalSmith {
    pub prime: u64,
    pub exponent: u32,
    pub modulus: u64,
    pub nrows: usize,
    pub ncols: usize,
    pub pivots: Vec<Pivot>,
    /// `(target, source, f)`: row_target -= f · row_source, in order.
    row_ops: Vec<(u32, u32, u64)>,
    /// `(c, j, f)`: col_j -= f · col_c, in order.
    col_ops: Vec<(u32, u32, u64)>,
    has_row_log: bool,
}

impl LocalSmith {
    pub fn compute(m: &IntMatrix, prime: u64, exponent: u32) -> LocalSmith {
        Self::compute_with(m, prime, exponent, true)
    }

    /// As [`compute`](Self::compute); without the row log `solve` is unavailable.
    pub fn compute_with(m: &IntMatrix, prime: u64, exponent: u32, log_rows: bool) -> LocalSmith {
        let q = prime.pow(exponent);
        let mut rows: Vec<Vec<(u32, u64)>> = m
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&(c, v)| (c, to_residue(v, q)))
                    .filter(|e| e.1 != 0)
                    .collect()
            })
            .collect();
        let mut active = vec![true; m.nrows];
        // col_rows may hold stale or duplicate row indices; col_count is exact
        let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); m.ncols];
        let mut col_count = vec![0usize; m.ncols];
        for (i, r) in rows.iter().enumerate() {
            for &(c, _) in r {
                col_rows[c as usize].push(i as u32);
                col_count[c as usize] += 1;
            }
        }
        let mut col_done = vec![false; m.ncols];
        let mut pivots = Vec::new();
        let mut row_ops = Vec::new();
        let mut col_ops = Vec::new();
        let mut seen = vec![false; m.nrows];

        let entry = |row: &Vec<(u32, u64)>, c: u32| -> Option<u64> {
            row.binary_search_by_key(&c, |e| e.0).ok().map(|k| row[k].1)
        };

        for v in 0..exponent {
            let pv = prime.pow(v);
            let rest = prime.pow(exponent - v);
            // columns known to have no entry of valuation v
            let mut skipped = vec![false; m.ncols];
            loop {
                let pick = (0..m.ncols)
                    .filter(|&c| !col_done[c] && !skipped[c] && col_count[c] > 0)
                    .min_by_key(|&c| (col_count[c], c));
                let Some(c) = pick else { break };
                let mut live = Vec::with_capacity(col_count[c]);
                for &i in &col_rows[c] {
                    if active[i as usize] && !seen[i as usize] && entry(&rows[i as usize], c as u32).is_some() {
                        seen[i as usize] = true;
                        live.push(i);
                    }
                }
                for &i in &live {
                    seen[i as usize] = false;
                }
                col_rows[c] = live.clone();
                debug_assert_eq!(live.len(), col_count[c]);
                let best = live
                    .iter()
                    .copied()
                    .filter(|&i| valuation(entry(&rows[i as usize], c as u32).unwrap(), prime, exponent) == v)
                    .min_by_key(|&i| (rows[i as usize].len(), i));
                let Some(r) = best else {
                    skipped[c] = true;
                    continue;
                };
                let a = entry(&rows[r as usize], c as u32).unwrap();
                let unit = (a / pv) % rest;
                let uinv = inv_mod(unit, rest).expect("pivot unit");
                let pivot_row = std::mem::take(&mut rows[r as usize]);
                for &i in &live {
                    if i == r {
                        continue;
                    }
                    let aic = entry(&rows[i as usize], c as u32).unwrap();
                    let f = mul_mod((aic / pv) % rest, uinv, rest);
                    if log_rows {
                        row_ops.push((i, r, f));
                    }
                    let old = std::mem::take(&mut rows[i as usize]);
                    let merged = axpy(&old, &pivot_row, f, q, |col, delta| {
                        let col = col as usize;
                        if delta > 0 {
                            col_rows[col].push(i);
                            col_count[col] += 1;
                        } else {
                            col_count[col] -= 1;
                        }
                    });
                    rows[i as usize] = merged;
                }
                for &(j, b) in &pivot_row {
                    col_count[j as usize] -= 1;
                    if j as usize == c {
                        continue;
                    }
                    let f = mul_mod((b / pv) % rest, uinv, rest);
                    if f != 0 {
                        col_ops.push((c as u32, j, f));
                    }
                    // the pivot row leaves the active set, which may expose new valuation-v entries elsewhere
                }
                debug_assert_eq!(col_count[c], 0);
                active[r as usize] = false;
                col_done[c] = true;
                pivots.push(Pivot {
                    row: r,
                    col: c as u32,
                    valuation: v,
                    unit,
                });
                // row operations can create valuation-v entries in skipped columns
                for s in skipped.iter_mut() {
                    *s = false;
                }
            }
        }
        LocalSmith {
            prime,
            exponent,
            modulus: q,
            nrows: m.nrows,
            ncols: m.ncols,
            pivots,
            row_ops,
            col_ops,
            has_row_log: log_rows,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Valuations of the nonzero elementary divisors, ascending.
    pub fn valuations(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.pivots.iter().map(|p| p.valuation).collect();
        v.sort_unstable();
        v
    }

    /// y ← V·y where V is the accumulated right transform.
    pub fn apply_right(&self, y: &mut [u64]) {
        let q = self.modulus;
        for &(c, j, f) in self.col_ops.iter().rev() {
            let yj = y[j as usize];
            if yj != 0 {
                y[c as usize] = sub_mod(y[c as usize], mul_mod(f, yj, q), q);
            }
        }
    }

    /// Column `col` of the right transform V.
    pub fn right_column(&self, col: u32) -> Vec<u64> {
        let mut y = vec![0u64; self.ncols];
        y[col as usize] = 1;
        self.apply_right(&mut y);
        y
    }

    /// Applies the logged row operations to a right-hand side.
    pub fn apply_left(&self, rhs: &mut [u64]) {
        let q = self.modulus;
        for &(t, s, f) in &self.row_ops {
            let rs = rhs[s as usize];
            if rs != 0 {
                rhs[t as usize] = sub_mod(rhs[t as usize], mul_mod(f, rs, q), q);
            }
        }
    }

    /// Some solution x of A·x ≡ b (mod p^e), or None.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert!(self.has_row_log, "solve needs the row-operation log");
        let q = self.modulus;
        let mut rhs: Vec<u64> = b.iter().map(|&x| x % q).collect();
        self.apply_left(&mut rhs);
        let mut pivot_rows = vec![false; self.nrows];
        let mut y = vec![0u64; self.ncols];
        for p in &self.pivots {
            pivot_rows[p.row as usize] = true;
            let val = rhs[p.row as usize];
            let pv = self.prime.pow(p.valuation);
            if val % pv != 0 {
                return None;
            }
            let rest = self.prime.pow(self.exponent - p.valuation);
            let uinv = inv_mod(p.unit, rest).unwrap();
            y[p.col as usize] = mul_mod((val / pv) % rest, uinv, rest);
        }
        if rhs.iter().zip(pivot_rows.iter()).any(|(&r, &is_p)| !is_p && r != 0) {
            return None;
        }
        self.apply_right(&mut y);
        Some(y)
    }
}

/// dst - f·src over Z/q, merging two sorted sparse rows. Columns that
/// appear (+1) or cancel (-1) are reported through `on_change`.
fn axpy<F: FnMut(u32, i32)>(dst: &[(u32, u64)], src: &[(u32, u64)], f: u64, q: u64, mut on_change: F) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() || j < src.len() {
        if j >= src.len() || (i < dst.len() && dst[i].0 < src[j].0) {
            out.push(dst[i]);
            i += 1;
        } else if i >= dst.len() || src[j].0 < dst[i].0 {
            let v = sub_mod(0, mul_mod(f, src[j].1, q), q);
            if v != 0 {
                on_change(src[j].0, 1);
                out.push((src[j].0, v));
            }
            j += 1;
        } else {
            let v = sub_mod(dst[i].1, mul_mod(f, src[j].1, q), q);
            if v != 0 {
                out.push((dst[i].0, v));
            } else {
                on_change(dst[i].0, -1);
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Prime factorisation by trial division.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
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

/// Combines residues `x ≡ r_i (mod m_i)` for pairwise coprime moduli.
pub fn crt(residues: &[(u64, u64)]) -> (u64, u64) {
    let mut x: u128 = 0;
    let mut m: u128 = 1;
    for &(r, mi) in residues {
        let mi128 = mi as u128;
        // x + m·t ≡ r (mod mi)
        let minv = inv_mod((m % mi128) as u64, mi).expect("moduli must be coprime") as u128;
        let diff = ((r as u128 % mi128) + mi128 - (x % mi128)) % mi128;
        let t = diff * minv % mi128;
        x += m * t;
        m *= mi128;
        x %= m;
    }
    (x as u64, m as u64)
}
