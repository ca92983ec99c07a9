//! Ordinary characters, one-dimensional characters and projective
//! characters of abelian groups.
//!
//! Character tables are computed with Dixon's method: the class-algebra
//! eigenvectors are found over a prime field F_p with p ≡ 1 (mod exp G),
//! and each value is lifted exactly through its eigenvalue multiplicities.
//! The resulting table is then checked by exact orthogonality.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cohomology::{is_cocycle, pullback, Cochain, CoboundarySolver};
use crate::error::{check_cap, Error, Result};
use crate::groups::{abelian_invariants, ConjugacyClasses, FermionicSymmetry, FiniteGroup, Subgroup};
use crate::limits;
use crate::scalars::{Cyc, Phase};

#[derive(Clone, Debug)]
pub struct Irrep {
    pub dim: u64,
    /// Character value on each conjugacy class, in class order.
    pub values: Vec<Cyc>,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub classes: ConjugacyClasses,
    pub group_order: usize,
    pub exponent: usize,
    pub irreps: Vec<Irrep>,
    duals: Vec<usize>,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.irreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreps.is_empty()
    }

    /// χ_i(g) for an element index.
    pub fn value(&self, i: usize, g: usize) -> &Cyc {
        &self.irreps[i].values[self.classes.class_of[g]]
    }

    pub fn dim(&self, i: usize) -> u64 {
        self.irreps[i].dim
    }

    /// Index of the complex-conjugate irrep.
    pub fn dual(&self, i: usize) -> usize {
        self.duals[i]
    }

    /// ⟨f, χ_i⟩ for a class function f given on classes.
    pub fn inner_product(&self, f: &[Cyc], i: usize) -> Cyc {
        let mut acc = Cyc::zero();
        for (c, v) in f.iter().enumerate() {
            acc += v * self.irreps[i].values[c].conj() * Cyc::from_int(self.classes.size(c) as i64);
        }
        acc * Cyc::from_ratio(1, self.group_order as i64)
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_p(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// A prime p ≡ 1 (mod e) with p > bound.
fn dixon_prime(e: u64, bound: u64) -> u64 {
    let mut p = (bound / e + 1) * e + 1;
    while !is_prime(p) {
        p += e;
    }
    p
}

fn primitive_root(p: u64) -> u64 {
    let factors: Vec<u64> = crate::snf::factorize(p - 1).into_iter().map(|f| f.0).collect();
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("prime field has a primitive root")
}

/// Characteristic polynomial over F_p through Hessenberg reduction;
/// coefficients low degree first, monic.
fn charpoly(mut h: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = h.len();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else { continue };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = inv_p(h[j + 1][j], p);
        for r in j + 2..n {
            let u = h[r][j] * inv % p;
            if u == 0 {
                continue;
            }
            for c in 0..n {
                h[r][c] = (h[r][c] + p - u * h[j + 1][c] % p) % p;
            }
            for row in h.iter_mut() {
                row[j + 1] = (row[j + 1] + u * row[r]) % p;
            }
        }
    }
    // p_{m+1} = (x - h_mm) p_m - Σ_{i<m} h_im (Π_{k=i+1}^{m} h_{k,k-1}) p_i
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let mut next = vec![0u64; m + 2];
        for (d, &c) in polys[m].iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + p - h[m][m] * c % p) % p;
        }
        let mut prod = 1u64;
        for i in (0..m).rev() {
            prod = prod * h[i + 1][i] % p;
            let coef = h[i][m] * prod % p;
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = (next[d] + p - coef * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// Kernel vector of a matrix over F_p with nullity one, normalized so the
/// first coordinate is 1.
fn kernel_vector(mut a: Vec<Vec<u64>>, p: u64) -> Option<Vec<u64>> {
    let n = a.len();
    let mut pivot_col = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(r) = (row..n).find(|&r| a[r][col] != 0) else { continue };
        a.swap(r, row);
        let inv = inv_p(a[row][col], p);
        for c in 0..n {
            a[row][c] = a[row][c] * inv % p;
        }
        for r2 in 0..n {
            if r2 != row && a[r2][col] != 0 {
                let f = a[r2][col];
                for c in 0..n {
                    a[r2][c] = (a[r2][c] + p - f * a[row][c] % p) % p;
                }
            }
        }
        pivot_col.push(col);
        row += 1;
    }
    if row != n - 1 {
        return None;
    }
    let free = (0..n).find(|c| !pivot_col.contains(c)).unwrap();
    let mut v = vec![0u64; n];
    v[free] = 1;
    for (r, &c) in pivot_col.iter().enumerate() {
        v[c] = (p - a[r][free]) % p;
    }
    if v[0] == 0 {
        return None;
    }
    let inv = inv_p(v[0], p);
    Some(v.iter().map(|x| x * inv % p).collect())
}

fn isqrt(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&s| s * s == n)
}

pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    check_cap("group order", g.order(), limits::order_cap(limits::CHARACTER_TABLE))?;
    let order = g.order();
    let classes = g.conjugacy_classes();
    let k = classes.len();
    let e = g.exponent();
    let p = dixon_prime(e as u64, (2 * order as u64).max(20_000));
    let z = pow_mod(primitive_root(p), (p - 1) / e as u64, p);

    // a[j][kk][l] = #{x ∈ C_j : x⁻¹ g_l ∈ C_kk}
    let mut mats = vec![vec![vec![0u64; k]; k]; k];
    for (j, mat) in mats.iter_mut().enumerate() {
        for l in 0..k {
            let gl = classes.representative(l);
            for &x in &classes.classes[j] {
                let y = g.mul(g.inv(x), gl);
                mat[classes.class_of[y]][l] += 1;
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + order as u64);
    let mut vectors: Option<Vec<Vec<u64>>> = None;
    for _attempt in 0..64 {
        let coeffs: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        let mut m = vec![vec![0u64; k]; k];
        for (j, &r) in coeffs.iter().enumerate() {
            for a in 0..k {
                for b in 0..k {
                    m[a][b] = (m[a][b] + r * (mats[j][a][b] % p)) % p;
                }
            }
        }
        // eigenvectors w with M w = λ w, i.e. right eigenvectors
        let cp = charpoly(m.clone(), p);
        let roots: Vec<u64> = (0..p)
            .filter(|&x| cp.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p) == 0)
            .collect();
        if roots.len() != k {
            continue;
        }
        let mut found = Vec::with_capacity(k);
        for &lam in &roots {
            let mut shifted = m.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] = (row[i] + p - lam) % p;
            }
            match kernel_vector(shifted, p) {
                Some(v) => found.push(v),
                None => break,
            }
        }
        if found.len() == k {
            vectors = Some(found);
            break;
        }
    }
    let vectors = vectors.ok_or_else(|| Error::Verification("class-algebra eigenvectors did not separate".into()))?;

    let roots_exact: Vec<Cyc> = (0..e).map(|j| Cyc::root(e as u32, j as i64)).collect();
    let e_inv = inv_p(e as u64 % p, p);
    let z_inv = inv_p(z, p);
    let mut irreps = Vec::with_capacity(k);
    let mut keys = Vec::with_capacity(k);
    for w in &vectors {
        // χ(1)² = |G| / Σ_l ω_l ω_{l*} / |C_l|
        let mut s = 0u64;
        for l in 0..k {
            let star = classes.class_of[g.inv(classes.representative(l))];
            s = (s + w[l] * w[star] % p * inv_p(classes.size(l) as u64, p)) % p;
        }
        let d2 = order as u64 % p * inv_p(s, p) % p;
        let d = isqrt(d2).filter(|d| order as u64 % d == 0).ok_or_else(|| Error::Verification("character degree did not lift".into()))?;
        let chi_p: Vec<u64> = (0..k)
            .map(|l| w[l] * (d % p) % p * inv_p(classes.size(l) as u64, p) % p)
            .collect();
        let mut values = Vec::with_capacity(k);
        let mut key = Vec::with_capacity(k * e);
        for l in 0..k {
            let gl = classes.representative(l);
            let mut powers = Vec::with_capacity(e);
            let mut x = 0usize;
            for _ in 0..e {
                powers.push(chi_p[classes.class_of[x]]);
                x = g.mul(x, gl);
            }
            let mut value = Cyc::zero();
            for j in 0..e {
                // m_j = (1/e) Σ_t χ(g^t) z^{-jt}
                let zj = pow_mod(z_inv, j as u64, p);
                let mut acc = 0u64;
                let mut zt = 1u64;
                for &pw in &powers {
                    acc = (acc + pw * zt) % p;
                    zt = zt * zj % p;
                }
                let mj = acc * e_inv % p;
                if mj > d {
                    return Err(Error::Verification("eigenvalue multiplicity did not lift".into()));
                }
                key.push(mj);
                if mj > 0 {
                    value += &roots_exact[j] * Cyc::from_int(mj as i64);
                }
            }
            values.push(value);
        }
        keys.push((d, key));
        irreps.push(Irrep { dim: d, values });
    }
    // trivial first, then by dimension and multiplicity pattern
    let mut idx: Vec<usize> = (0..k).collect();
    let is_trivial = |i: usize| irreps[i].values.iter().all(|v| v.is_one());
    idx.sort_by(|&a, &b| (!is_trivial(a), &keys[a]).cmp(&(!is_trivial(b), &keys[b])));
    let irreps: Vec<Irrep> = idx.into_iter().map(|i| irreps[i].clone()).collect();

    let duals = (0..k)
        .map(|i| {
            let conj: Vec<Cyc> = irreps[i].values.iter().map(|v| v.conj()).collect();
            irreps.iter().position(|r| r.values == conj).expect("dual irrep")
        })
        .collect();
    let table = CharacterTable {
        classes,
        group_order: order,
        exponent: e,
        irreps,
        duals,
    };
    verify_orthogonality(&table)?;
    Ok(table)
}

fn verify_orthogonality(t: &CharacterTable) -> Result<()> {
    let sum_sq: u64 = t.irreps.iter().map(|r| r.dim * r.dim).sum();
    if sum_sq != t.group_order as u64 || t.irreps.len() != t.classes.len() {
        return Err(Error::Verification("character table dimension count".into()));
    }
    for i in 0..t.len() {
        for j in i..t.len() {
            let ip = t.inner_product(&t.irreps[j].values, i);
            let want = if i == j { Cyc::one() } else { Cyc::zero() };
            if ip != want {
                return Err(Error::Verification(format!("characters {i} and {j} are not orthonormal")));
            }
        }
    }
    Ok(())
}

/// All homomorphisms G → Q/Z, trivial first, in lexicographic order of
/// their coordinates on the abelianization.
pub fn one_dim_characters(g: &FiniteGroup) -> Result<Vec<Vec<Phase>>> {
    let comm = g.commutator_subgroup();
    let (q, coset_of) = g.quotient(&comm)?;
    let dec = abelian_invariants(&q)?;
    let coord = dec.coordinate_group();
    let mut out = Vec::with_capacity(q.order());
    for idx in 0..coord.order() {
        let k = coord.coords_of(idx).unwrap_or_default();
        let chi: Vec<Phase> = (0..g.order())
            .map(|x| {
                let c = coord.coords_of(dec.to_coordinate[coset_of[x]]).unwrap_or_default();
                c.iter()
                    .zip(&k)
                    .zip(&dec.invariants)
                    .map(|((&ci, &ki), &d)| Phase::new((ci * ki % d) as i64, d))
                    .sum()
            })
            .collect();
        out.push(chi);
    }
    Ok(out)
}

/// χ(z)/χ(1) for every irrep, which must be ±1.
pub fn parity_grading(sym: &FermionicSymmetry, table: &CharacterTable) -> Result<Vec<i8>> {
    (0..table.len())
        .map(|i| {
            let ratio = table.value(i, sym.z) * Cyc::from_ratio(1, table.dim(i) as i64);
            if ratio.is_one() {
                Ok(1)
            } else if (&ratio + Cyc::one()).is_zero() {
                Ok(-1)
            } else {
                Err(Error::invalid("z does not act by a sign on every irrep"))
            }
        })
        .collect()
}

/// N_ij^k = ⟨χ_i χ_j, χ_k⟩.
pub fn fusion_coefficients_rep(table: &CharacterTable) -> Result<Vec<Vec<Vec<u64>>>> {
    let k = table.len();
    let mut n = vec![vec![vec![0u64; k]; k]; k];
    for i in 0..k {
        for j in i..k {
            let prod: Vec<Cyc> = (0..table.classes.len())
                .map(|c| &table.irreps[i].values[c] * &table.irreps[j].values[c])
                .collect();
            for l in 0..k {
                let v = table
                    .inner_product(&prod, l)
                    .as_integer()
                    .and_then(|b| u64::try_from(b).ok())
                    .ok_or_else(|| Error::Verification("tensor multiplicity is not a nonnegative integer".into()))?;
                n[i][j][l] = v;
                n[j][i][l] = v;
            }
        }
    }
    Ok(n)
}

/// Projective irreps of an abelian group for a 2-cocycle τ.
///
/// Every τ-projective irrep ρ restricts to scalars on the radical R; writing
/// τ|_R = δμ, these scalars are e^{2πi(μ(x)+λ(x))} for the characters λ of R.
/// The section μ is the one returned by the coboundary solver.
#[derive(Clone, Debug)]
pub struct ProjectiveIrrepData {
    pub radical: Subgroup,
    pub dimension: u64,
    /// μ on radical elements (radical-local indices).
    pub section: Vec<Phase>,
    /// Characters λ of the radical, one per irrep (radical-local indices).
    pub lambdas: Vec<Vec<Phase>>,
}

impl ProjectiveIrrepData {
    pub fn irrep_count(&self) -> usize {
        self.lambdas.len()
    }

    /// The scalar phase of irrep `i` at a radical element (parent index), or
    /// None off the radical.
    pub fn phase(&self, i: usize, x: usize) -> Option<Phase> {
        let r = self.radical.index_of(x)?;
        Some(self.section[r] + self.lambdas[i][r])
    }

    /// Character value χ_i(x).
    pub fn character(&self, i: usize, x: usize) -> Cyc {
        match self.phase(i, x) {
            Some(ph) => Cyc::from_phase(ph) * Cyc::from_int(self.dimension as i64),
            None => Cyc::zero(),
        }
    }
}

pub fn projective_irrep_data(a: &FiniteGroup, tau: &Cochain) -> Result<ProjectiveIrrepData> {
    if !a.is_abelian() {
        return Err(Error::NotAbelian);
    }
    if tau.degree() != 2 || tau.group_order() != a.order() {
        return Err(Error::invalid("projective data needs a 2-cochain on the group"));
    }
    if !is_cocycle(a, tau) {
        return Err(Error::NotCocycle);
    }
    let n = a.order();
    let radical: Vec<usize> = (0..n)
        .filter(|&x| (0..n).all(|y| tau.get(&[x, y]) == tau.get(&[y, x])))
        .collect();
    let radical = Subgroup::new(a, &radical)?;
    let dimension = {
        let ratio = n / radical.order();
        let d = isqrt(ratio as u64).ok_or_else(|| Error::Verification("|A/R| is not a square".into()))?;
        d
    };
    let restricted = pullback(tau, radical.order(), |i| radical.embed(i));
    let solver = CoboundarySolver::new(&radical.group, 2, restricted.denominator());
    let mu = solver
        .solve(&restricted)
        .ok_or_else(|| Error::Verification("τ restricted to the radical is not a coboundary".into()))?;
    let section: Vec<Phase> = (0..radical.order())
        .map(|i| if i == 0 { Phase::ZERO } else { mu.get(&[i]) })
        .collect();
    let lambdas = one_dim_characters(&radical.group)?;
    Ok(ProjectiveIrrepData {
        radical,
        dimension,
        section,
        lambdas,
    })
}

/// Smallest common level of a list of phases.
pub fn phase_level(phases: &[Phase]) -> u64 {
    phases.iter().fold(1u64, |l, p| l.lcm(&p.den()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(g: &FiniteGroup) -> Vec<u64> {
        let mut d: Vec<u64> = character_table(g).unwrap().irreps.iter().map(|r| r.dim).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn small_tables() {
        let t = character_table(&FiniteGroup::cyclic(2)).unwrap();
        assert_eq!(t.irreps[0].values, vec![Cyc::one(), Cyc::one()]);
        assert_eq!(t.irreps[1].values, vec![Cyc::one(), Cyc::from_int(-1)]);
        assert_eq!(dims(&FiniteGroup::symmetric(3)), vec![1, 1, 2]);
        assert_eq!(dims(&FiniteGroup::quaternion()), vec![1, 1, 1, 1, 2]);
        assert_eq!(dims(&FiniteGroup::symmetric(4)), vec![1, 1, 2, 3, 3]);
        assert_eq!(dims(&FiniteGroup::trivial()), vec![1]);
    }

    #[test]
    fn cyclic_duals() {
        let t = character_table(&FiniteGroup::cyclic(5)).unwrap();
        for i in 0..5 {
            assert_eq!(t.dual(t.dual(i)), i);
        }
        assert_eq!(t.dual(0), 0);
    }

    #[test]
    fn linear_characters() {
        assert_eq!(one_dim_characters(&FiniteGroup::cyclic(3)).unwrap().len(), 3);
        assert_eq!(one_dim_characters(&FiniteGroup::symmetric(3)).unwrap().len(), 2);
        assert_eq!(one_dim_characters(&FiniteGroup::quaternion()).unwrap().len(), 4);
        let g = FiniteGroup::dihedral(4);
        for chi in one_dim_characters(&g).unwrap() {
            for x in 0..8 {
                for y in 0..8 {
                    assert_eq!(chi[g.mul(x, y)], chi[x] + chi[y]);
                }
            }
        }
    }

    #[test]
    fn parities() {
        let z2 = FermionicSymmetry::new(FiniteGroup::cyclic(2), 1).unwrap();
        let t = character_table(&z2.group).unwrap();
        assert_eq!(parity_grading(&z2, &t).unwrap(), vec![1, -1]);
        let z4 = FermionicSymmetry::new(FiniteGroup::cyclic(4), 2).unwrap();
        let t = character_table(&z4.group).unwrap();
        let par = parity_grading(&z4, &t).unwrap();
        assert_eq!(par.iter().filter(|&&s| s == -1).count(), 2);
        let q = FiniteGroup::quaternion();
        let minus_one = q.center().into_iter().find(|&c| c != 0).unwrap();
        let q8 = FermionicSymmetry::new(q, minus_one).unwrap();
        let t = character_table(&q8.group).unwrap();
        let par = parity_grading(&q8, &t).unwrap();
        for i in 0..t.len() {
            assert_eq!(par[i] == -1, t.dim(i) == 2);
        }
    }

    #[test]
    fn s3_fusion() {
        let t = character_table(&FiniteGroup::symmetric(3)).unwrap();
        let n = fusion_coefficients_rep(&t).unwrap();
        let two = (0..3).find(|&i| t.dim(i) == 2).unwrap();
        let sign = (0..3).find(|&i| i != 0 && t.dim(i) == 1).unwrap();
        assert_eq!(n[two][two], vec![1, 1, 1]);
        assert_eq!(n[sign][sign][0], 1);
        for i in 0..3 {
            assert_eq!(n[0][i][i], 1);
            assert_eq!(n[i][t.dual(i)][0], 1);
        }
    }

    #[test]
    fn projective_examples() {
        let v4 = FiniteGroup::abelian(&[2, 2]);
        let c = |g: &FiniteGroup, x: usize, i: usize| g.coords_of(x).unwrap()[i];
        let tau = Cochain::from_fn(4, 2, |t| Phase::new((c(&v4, t[0], 0) * c(&v4, t[1], 1)) as i64, 2));
        let d = projective_irrep_data(&v4, &tau).unwrap();
        assert_eq!((d.radical.order(), d.irrep_count(), d.dimension), (1, 1, 2));
        let z23 = FiniteGroup::abelian(&[2, 2, 2]);
        let tau = Cochain::from_fn(8, 2, |t| Phase::new((c(&z23, t[0], 0) * c(&z23, t[1], 1)) as i64, 2));
        let d = projective_irrep_data(&z23, &tau).unwrap();
        assert_eq!((d.radical.order(), d.irrep_count(), d.dimension), (2, 2, 2));
        assert!(d.radical.contains(z23.element_at(&[0, 0, 1]).unwrap()));
        let d = projective_irrep_data(&z23, &Cochain::zero(8, 2)).unwrap();
        assert_eq!((d.irrep_count(), d.dimension), (8, 1));
    }
}
