//! Group cohomology H^n(G, U(1)) = H^n(G, Q/Z) through normalized bar
//! cochains.
//!
//! The invariant factors are the nontrivial elementary divisors of the
//! integral coboundary `δ_n : C^n → C^{n+1}` (which compute the torsion of
//! H^{n+1}(G, Z)). They are found prime by prime with [`LocalSmith`];
//! representatives come from columns of the right transform.

use std::collections::BTreeMap;

use crate::error::{check_cap, Error, Result};
use crate::groups::{FiniteGroup, Subgroup};
use crate::limits;
use crate::scalars::Phase;
use crate::snf::{crt, factorize, IntMatrix, LocalSmith};

/// A normalized Q/Z-valued n-cochain, stored densely over tuples of
/// non-identity elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    order: usize,
    values: Vec<Phase>,
}

fn tuple_count(order: usize, degree: usize) -> usize {
    (order.saturating_sub(1)).pow(degree as u32)
}

impl Cochain {
    pub fn zero(order: usize, degree: usize) -> Cochain {
        Cochain {
            degree,
            order,
            values: vec![Phase::ZERO; tuple_count(order, degree)],
        }
    }

    /// Builds a cochain from a function on tuples; identity arguments are
    /// never passed.
    pub fn from_fn<F: FnMut(&[usize]) -> Phase>(order: usize, degree: usize, mut f: F) -> Cochain {
        let mut c = Cochain::zero(order, degree);
        let mut t = vec![1usize; degree];
        for k in 0..c.values.len() {
            c.values[k] = f(&t);
            advance(&mut t, order);
        }
        c
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Order of the group the cochain lives on.
    pub fn group_order(&self) -> usize {
        self.order
    }

    fn index(&self, args: &[usize]) -> Option<usize> {
        let mut k = 0;
        for &a in args {
            if a == 0 {
                return None;
            }
            k = k * (self.order - 1) + (a - 1);
        }
        Some(k)
    }

    pub fn get(&self, args: &[usize]) -> Phase {
        debug_assert_eq!(args.len(), self.degree);
        match self.index(args) {
            Some(k) => self.values[k],
            None => Phase::ZERO,
        }
    }

    /// Sets a value; setting a nonzero value on an identity argument is an error.
    pub fn set(&mut self, args: &[usize], v: Phase) -> Result<()> {
        if args.len() != self.degree || args.iter().any(|&a| a >= self.order) {
            return Err(Error::invalid("cochain argument out of range"));
        }
        match self.index(args) {
            Some(k) => {
                self.values[k] = v;
                Ok(())
            }
            None if v.is_zero() => Ok(()),
            None => Err(Error::invalid("cochains are normalized: identity arguments must map to 0")),
        }
    }

    /// Non-zero entries in tuple order.
    pub fn entries(&self) -> Vec<(Vec<usize>, Phase)> {
        let mut out = Vec::new();
        let mut t = vec![1usize; self.degree];
        for k in 0..self.values.len() {
            if !self.values[k].is_zero() {
                out.push((t.clone(), self.values[k]));
            }
            advance(&mut t, self.order);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// lcm of the denominators of all values.
    pub fn denominator(&self) -> u64 {
        use num_integer::Integer;
        self.values.iter().fold(1u64, |l, v| l.lcm(&v.den()))
    }

    pub fn scaled(&self, k: i64) -> Cochain {
        Cochain {
            degree: self.degree,
            order: self.order,
            values: self.values.iter().map(|v| v.times(k)).collect(),
        }
    }

    fn check_compatible(&self, other: &Cochain) {
        assert_eq!((self.degree, self.order), (other.degree, other.order), "incompatible cochains");
    }
}

fn advance(t: &mut [usize], order: usize) {
    for i in (0..t.len()).rev() {
        t[i] += 1;
        if t[i] < order {
            return;
        }
        t[i] = 1;
    }
}

impl std::ops::Add<&Cochain> for &Cochain {
    type Output = Cochain;
    fn add(self, rhs: &Cochain) -> Cochain {
        self.check_compatible(rhs);
        Cochain {
            degree: self.degree,
            order: self.order,
            values: self.values.iter().zip(&rhs.values).map(|(&a, &b)| a + b).collect(),
        }
    }
}

impl std::ops::Sub<&Cochain> for &Cochain {
    type Output = Cochain;
    fn sub(self, rhs: &Cochain) -> Cochain {
        self.check_compatible(rhs);
        Cochain {
            degree: self.degree,
            order: self.order,
            values: self.values.iter().zip(&rhs.values).map(|(&a, &b)| a - b).collect(),
        }
    }
}

impl std::ops::Neg for &Cochain {
    type Output = Cochain;
    fn neg(self) -> Cochain {
        self.scaled(-1)
    }
}

/// The bar differential, evaluated term by term.
pub fn coboundary(g: &FiniteGroup, c: &Cochain) -> Cochain {
    assert_eq!(g.order(), c.order, "cochain lives on a different group");
    let n = c.degree;
    let mut buf = vec![0usize; n];
    Cochain::from_fn(g.order(), n + 1, |t| {
        let mut acc = c.get(&t[1..]);
        for i in 0..n {
            buf[..i].copy_from_slice(&t[..i]);
            buf[i] = g.mul(t[i], t[i + 1]);
            buf[i + 1..].copy_from_slice(&t[i + 2..]);
            let v = c.get(&buf);
            if i % 2 == 0 {
                acc -= v;
            } else {
                acc += v;
            }
        }
        let last = c.get(&t[..n]);
        if n % 2 == 0 {
            acc -= last;
        } else {
            acc += last;
        }
        acc
    })
}

pub fn is_cocycle(g: &FiniteGroup, c: &Cochain) -> bool {
    coboundary(g, c).is_zero()
}

/// Integer matrix of δ_n with rows indexed by (n+1)-tuples and columns by
/// n-tuples of non-identity elements (lexicographic, first slot most
/// significant).
pub fn coboundary_matrix(g: &FiniteGroup, n: usize) -> IntMatrix {
    let order = g.order();
    let m = order - 1;
    let col = |args: &[usize]| -> Option<u32> {
        let mut k = 0usize;
        for &a in args {
            if a == 0 {
                return None;
            }
            k = k * m + (a - 1);
        }
        Some(k as u32)
    };
    let mut mat = IntMatrix::new(tuple_count(order, n));
    if n == 0 {
        // constant cochains are cocycles for the trivial action
        for _ in 0..tuple_count(order, 1) {
            mat.push_row(Vec::new());
        }
        return mat;
    }
    let mut t = vec![1usize; n + 1];
    let mut buf = vec![0usize; n];
    for _ in 0..tuple_count(order, n + 1) {
        let mut row = Vec::with_capacity(n + 2);
        row.push((col(&t[1..]).unwrap(), 1));
        for i in 0..n {
            buf[..i].copy_from_slice(&t[..i]);
            buf[i] = g.mul(t[i], t[i + 1]);
            buf[i + 1..].copy_from_slice(&t[i + 2..]);
            if let Some(c) = col(&buf) {
                row.push((c, if i % 2 == 0 { -1 } else { 1 }));
            }
        }
        row.push((col(&t[..n]).unwrap(), if n % 2 == 0 { -1 } else { 1 }));
        mat.push_row(row);
        advance(&mut t, order);
    }
    mat
}

/// H^n(G, U(1)) with one representative cocycle per invariant factor.
#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    pub degree: usize,
    /// d₁ | d₂ | … , all > 1.
    pub invariants: Vec<u64>,
    pub representatives: Vec<Cochain>,
}

impl CohomologyGroup {
    pub fn order(&self) -> u64 {
        self.invariants.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    /// Σ kᵢ·repᵢ.
    pub fn combination(&self, coeffs: &[u64]) -> Cochain {
        assert_eq!(coeffs.len(), self.representatives.len());
        let order = self.representatives.first().map(|r| r.order).unwrap_or(1);
        let mut acc = match self.representatives.first() {
            Some(r) => Cochain::zero(r.order, r.degree),
            None => Cochain::zero(order, self.degree),
        };
        for (r, &k) in self.representatives.iter().zip(coeffs) {
            acc = &acc + &r.scaled(k as i64);
        }
        acc
    }

    /// Coefficients of the `index`-th element in mixed radix, the last
    /// invariant factor varying fastest.
    pub fn coefficients_of(&self, mut index: u64) -> Option<Vec<u64>> {
        if index >= self.order() {
            return None;
        }
        let mut out = vec![0u64; self.invariants.len()];
        for i in (0..self.invariants.len()).rev() {
            out[i] = index % self.invariants[i];
            index /= self.invariants[i];
        }
        Some(out)
    }

    /// The `index`-th class representative in the deterministic enumeration.
    pub fn element(&self, index: u64) -> Option<Cochain> {
        self.coefficients_of(index).map(|c| self.combination(&c))
    }
}

fn degree_cap(n: usize) -> usize {
    if n <= 3 {
        limits::order_cap(limits::COHOMOLOGY_LOW)
    } else {
        limits::order_cap(limits::COHOMOLOGY_DEG4)
    }
}

pub fn cohomology_group(g: &FiniteGroup, n: usize) -> Result<CohomologyGroup> {
    if !(1..=4).contains(&n) {
        return Err(Error::invalid(format!("cohomology degree {n} outside 1..4")));
    }
    check_cap("group order", g.order(), degree_cap(n))?;
    let order = g.order();
    if order == 1 {
        return Ok(CohomologyGroup {
            degree: n,
            invariants: Vec::new(),
            representatives: Vec::new(),
        });
    }
    let mat = coboundary_matrix(g, n);
    // p-primary parts: (valuation, local representative) sorted descending
    let mut primary: Vec<(u64, Vec<(u32, Cochain)>)> = Vec::new();
    for (p, k) in factorize(order as u64) {
        let ls = LocalSmith::compute_with(&mat, p, k + 1, false);
        let mut parts = Vec::new();
        for piv in ls.pivots.iter().filter(|piv| piv.valuation > 0) {
            let pv = p.pow(piv.valuation);
            let w = ls.right_column(piv.col);
            let rep = Cochain {
                degree: n,
                order,
                values: w.iter().map(|&x| Phase::new((x % pv) as i64, pv)).collect(),
            };
            parts.push((piv.valuation, rep));
        }
        parts.sort_by(|a, b| b.0.cmp(&a.0));
        if !parts.is_empty() {
            primary.push((p, parts));
        }
    }
    let count = primary.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
    let mut invariants = Vec::with_capacity(count);
    let mut reps = Vec::with_capacity(count);
    // largest factor first, then reverse into divisibility order
    for i in 0..count {
        let mut d = 1u64;
        let mut rep = Cochain::zero(order, n);
        for (p, parts) in &primary {
            if let Some((v, r)) = parts.get(i) {
                d *= p.pow(*v);
                rep = &rep + r;
            }
        }
        invariants.push(d);
        reps.push(rep);
    }
    invariants.reverse();
    reps.reverse();
    let h = CohomologyGroup {
        degree: n,
        invariants,
        representatives: reps,
    };
    verify_representatives(g, &h)?;
    Ok(h)
}

/// Every representative must be a cocycle with denominator dividing |G|
/// and the listed factor, and the generated subgroup must inject into
/// cohomology.
fn verify_representatives(g: &FiniteGroup, h: &CohomologyGroup) -> Result<()> {
    for (r, &d) in h.representatives.iter().zip(&h.invariants) {
        if !is_cocycle(g, r) {
            return Err(Error::Verification("cohomology representative is not a cocycle".into()));
        }
        if d % r.denominator() != 0 || (g.order() as u64) % d != 0 {
            return Err(Error::Verification(format!(
                "representative failed to lift with denominator dividing |G| = {}",
                g.order()
            )));
        }
    }
    if h.is_trivial() {
        return Ok(());
    }
    let solver = CoboundarySolver::new(g, h.degree, *h.invariants.last().unwrap());
    let total = h.order();
    let check = |coeffs: &[u64]| -> Result<()> {
        if coeffs.iter().all(|&c| c == 0) {
            return Ok(());
        }
        if solver.solve(&h.combination(coeffs)).is_some() {
            return Err(Error::Verification("cohomology representatives are not independent".into()));
        }
        Ok(())
    };
    if total <= 256 {
        for idx in 1..total {
            check(&h.coefficients_of(idx).unwrap())?;
        }
    } else {
        // generators of every cyclic factor and their pairwise differences
        let m = h.invariants.len();
        for i in 0..m {
            let mut c = vec![0u64; m];
            c[i] = h.invariants[i] / factor_min_prime(h.invariants[i]);
            check(&c)?;
            for j in i + 1..m {
                let mut c2 = vec![0u64; m];
                c2[i] = 1;
                c2[j] = h.invariants[j] - 1;
                check(&c2)?;
            }
        }
    }
    Ok(())
}

fn factor_min_prime(d: u64) -> u64 {
    factorize(d).first().map(|f| f.0).unwrap_or(1)
}

/// Solves δβ = c for β with values in (1/M)Z/Z, M = |G|·L, where every input
/// has denominator dividing L.
pub struct CoboundarySolver {
    degree: usize,
    order: usize,
    modulus: u64,
    locals: Vec<LocalSmith>,
    denominator: u64,
}

impl CoboundarySolver {
    /// `denominator` bounds the denominators of the cochains to be solved for.
    pub fn new(g: &FiniteGroup, degree: usize, denominator: u64) -> CoboundarySolver {
        let modulus = g.order() as u64 * denominator;
        let locals = if degree >= 2 {
            let mat = coboundary_matrix(g, degree - 1);
            factorize(modulus)
                .into_iter()
                .map(|(p, e)| LocalSmith::compute(&mat, p, e))
                .collect()
        } else {
            Vec::new()
        };
        CoboundarySolver {
            degree,
            order: g.order(),
            modulus,
            locals,
            denominator,
        }
    }

    /// Some β of degree n−1 with δβ = c, or None when c is not a coboundary.
    pub fn solve(&self, c: &Cochain) -> Option<Cochain> {
        assert_eq!((c.degree, c.order), (self.degree, self.order));
        assert_eq!(self.denominator % c.denominator(), 0, "cochain denominator exceeds solver bound");
        if self.degree == 1 || self.order == 1 {
            return c.is_zero().then(|| Cochain::zero(self.order, self.degree.saturating_sub(1)));
        }
        let m = self.modulus;
        let b: Vec<u64> = c.values.iter().map(|v| v.numerator_over(m).unwrap()).collect();
        let mut sols = Vec::with_capacity(self.locals.len());
        for ls in &self.locals {
            sols.push(ls.solve(&b)?);
        }
        let ncols = tuple_count(self.order, self.degree - 1);
        let values = (0..ncols)
            .map(|j| {
                let residues: Vec<(u64, u64)> = sols.iter().zip(&self.locals).map(|(s, ls)| (s[j], ls.modulus)).collect();
                let (x, _) = crt(&residues);
                Phase::new(x as i64, m)
            })
            .collect();
        Some(Cochain {
            degree: self.degree - 1,
            order: self.order,
            values,
        })
    }
}

/// A witness β with δβ = a − b, or None if the classes differ.
pub fn are_cohomologous(g: &FiniteGroup, a: &Cochain, b: &Cochain) -> Result<Option<Cochain>> {
    if a.degree != b.degree || a.order != g.order() || b.order != g.order() {
        return Err(Error::invalid("cochains must have equal degree over the same group"));
    }
    if !is_cocycle(g, a) || !is_cocycle(g, b) {
        return Err(Error::NotCocycle);
    }
    let diff = a - b;
    let solver = CoboundarySolver::new(g, a.degree, diff.denominator());
    Ok(solver.solve(&diff))
}

/// τ_h(ω)(x,y) = ω(h,x,y) + ω(x,y,h) − ω(x,h,y) on the centralizer of h.
pub fn transgress3(g: &FiniteGroup, omega: &Cochain, h: usize) -> Result<(Subgroup, Cochain)> {
    if omega.degree != 3 || omega.order != g.order() {
        return Err(Error::invalid("transgression needs a 3-cochain on the group"));
    }
    if !is_cocycle(g, omega) {
        return Err(Error::NotCocycle);
    }
    let c = g.centralizer(h);
    let tau = transgress_on(omega, h, &c);
    Ok((c, tau))
}

/// The transgression formula without the cocycle check.
pub(crate) fn transgress_on(omega: &Cochain, h: usize, c: &Subgroup) -> Cochain {
    Cochain::from_fn(c.order(), 2, |t| {
        let (x, y) = (c.embed(t[0]), c.embed(t[1]));
        omega.get(&[h, x, y]) + omega.get(&[x, y, h]) - omega.get(&[x, h, y])
    })
}

/// Pulls a cochain back along a map of element indices (e.g. an inclusion).
pub fn pullback<F: Fn(usize) -> usize>(c: &Cochain, new_order: usize, f: F) -> Cochain {
    let mut buf = vec![0usize; c.degree];
    Cochain::from_fn(new_order, c.degree, |t| {
        for (b, &x) in buf.iter_mut().zip(t) {
            *b = f(x);
        }
        c.get(&buf)
    })
}

/// Invariant factors as a human-readable product, e.g. "Z2 x Z6".
pub fn describe_invariants(inv: &[u64]) -> String {
    if inv.is_empty() {
        return "trivial".into();
    }
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for &d in inv {
        *counts.entry(d).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(d, k)| if k == 1 { format!("Z{d}") } else { format!("Z{d}^{k}") })
        .collect::<Vec<_>>()
        .join(" x ")
}
