//! Modular data and minimal modular extensions.
//!
//! `s` holds the unnormalized S-matrix S̃ (row of the unit = quantum
//! dimensions) and `total_dim` holds D, so the unitary S-matrix is S̃/D.
//! The convention is S̃_ab = Σ_c N_ab^c d_c θ_c / (θ_a θ_b); for a metric
//! group this is S̃_xy = e^{2πi b(x,y)}.

use std::collections::HashMap;

use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{check_cap, Error, Result};
use crate::groups::{FermionicSymmetry, FiniteGroup};
use crate::limits;
use crate::reps::{character_table, parity_grading, CharacterTable};
use crate::scalars::{Cyc, CycMatrix, Phase};

#[derive(Clone, Debug)]
pub struct ModularData {
    pub labels: Vec<String>,
    pub dims: Vec<Cyc>,
    pub theta: Vec<Phase>,
    pub s: CycMatrix,
    pub total_dim: Cyc,
    pub unit: usize,
}

impl ModularData {
    /// Assembles modular data, checking only shapes; use [`verify_modular`]
    /// for the axioms.
    pub fn new(labels: Vec<String>, dims: Vec<Cyc>, theta: Vec<Phase>, s: CycMatrix, total_dim: Cyc, unit: usize) -> Result<ModularData> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::invalid("modular data needs at least one label"));
        }
        if dims.len() != n || theta.len() != n || s.len() != n || s.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("modular data fields have inconsistent sizes"));
        }
        if unit >= n {
            return Err(Error::invalid("unit index out of range"));
        }
        let mut md = ModularData {
            labels,
            dims,
            theta,
            s,
            total_dim,
            unit,
        };
        md.lift_to_common_level();
        Ok(md)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn label_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    /// Level of the cyclotomic field holding all scalars.
    pub fn level(&self) -> u32 {
        let mut l = self.total_dim.level();
        for x in self.dims.iter().chain(self.s.iter().flatten()) {
            l = l.lcm(&x.level());
        }
        l
    }

    /// Rewrites every scalar at one level so arithmetic never re-lifts.
    fn lift_to_common_level(&mut self) {
        let l = self.level();
        for x in self.dims.iter_mut().chain(self.s.iter_mut().flatten()) {
            *x = x.lift(l);
        }
        self.total_dim = self.total_dim.lift(l);
    }

    /// The global dimension D² = Σ d².
    pub fn global_dim(&self) -> Cyc {
        self.dims.iter().map(|d| d * d).sum()
    }

    /// Relabels by a permutation: new label `i` is old label `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> ModularData {
        let n = self.rank();
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        ModularData {
            labels: perm.iter().map(|&p| self.labels[p].clone()).collect(),
            dims: perm.iter().map(|&p| self.dims[p].clone()).collect(),
            theta: perm.iter().map(|&p| self.theta[p]).collect(),
            s: perm.iter().map(|&p| perm.iter().map(|&q| self.s[p][q].clone()).collect()).collect(),
            total_dim: self.total_dim.clone(),
            unit: inv[self.unit],
        }
    }
}

/// Fusion coefficients N_ab^c, stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fusion {
    rank: usize,
    n: Vec<u64>,
}

impl Fusion {
    pub fn get(&self, a: usize, b: usize, c: usize) -> u64 {
        self.n[(a * self.rank + b) * self.rank + c]
    }

    /// Nonzero channels of a ⊗ b.
    pub fn channels(&self, a: usize, b: usize) -> Vec<(usize, u64)> {
        (0..self.rank)
            .filter_map(|c| {
                let m = self.get(a, b, c);
                (m > 0).then_some((c, m))
            })
            .collect()
    }

    pub fn multiplicity_free(&self) -> bool {
        self.n.iter().all(|&m| m <= 1)
    }

    /// The dual label: the unique b with N_ab^unit = 1.
    pub fn dual(&self, a: usize, unit: usize) -> Option<usize> {
        (0..self.rank).find(|&b| self.get(a, b, unit) == 1)
    }
}

/// Verlinde formula N_ab^c = (1/D²) Σ_x S̃_ax S̃_bx conj(S̃_cx) / S̃_0x.
pub fn verlinde_fusion(md: &ModularData) -> Result<Fusion> {
    let n = md.rank();
    let u = md.unit;
    let d2_inv = md
        .global_dim()
        .inv()
        .ok_or_else(|| Error::Verification("global dimension vanishes".into()))?;
    let inv0: Vec<Cyc> = (0..n)
        .map(|x| md.s[u][x].inv().ok_or_else(|| Error::Verification("S̃ has a zero in the unit row".into())))
        .collect::<Result<_>>()?;
    let conj: Vec<Vec<Cyc>> = md.s.iter().map(|r| r.iter().map(|x| x.conj()).collect()).collect();
    let mut out = vec![0u64; n * n * n];
    for a in 0..n {
        for b in a..n {
            let w: Vec<Cyc> = (0..n).map(|x| &md.s[a][x] * &md.s[b][x] * &inv0[x] * &d2_inv).collect();
            for c in 0..n {
                let mut acc = Cyc::zero();
                for x in 0..n {
                    if !w[x].is_zero() && !conj[c][x].is_zero() {
                        acc += &w[x] * &conj[c][x];
                    }
                }
                let v = acc
                    .as_integer()
                    .and_then(|v| u64::try_from(v).ok())
                    .ok_or_else(|| Error::Verification(format!("N_{{{a},{b}}}^{c} is not a nonnegative integer")))?;
                out[(a * n + b) * n + c] = v;
                out[(b * n + a) * n + c] = v;
            }
        }
    }
    Ok(Fusion { rank: n, n: out })
}

/// Double-braiding scalar S̃_ab · S̃_00 / (S̃_0a S̃_0b); 1 means a and b are
/// mutually transparent.
pub fn monodromy(md: &ModularData, a: usize, b: usize) -> Cyc {
    let u = md.unit;
    let den = &md.s[u][a] * &md.s[u][b];
    &md.s[a][b] * &md.s[u][u] * den.inv().expect("nonzero dimensions")
}

pub fn is_transparent_pair(md: &ModularData, a: usize, b: usize) -> bool {
    // S̃_ab = d_a d_b, avoiding the division
    md.s[a][b] == &md.s[md.unit][a] * &md.s[md.unit][b]
}

/// All labels transparent to every label of `subset`.
pub fn muger_centralizer(md: &ModularData, subset: &[usize]) -> Vec<usize> {
    (0..md.rank())
        .filter(|&b| subset.iter().all(|&a| is_transparent_pair(md, a, b)))
        .collect()
}

/// c mod 8, stored as the phase c/8 in Q/Z.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CentralCharge(pub Phase);

impl CentralCharge {
    /// c in [0, 8) as (numerator, denominator).
    pub fn value(&self) -> (u64, u64) {
        let p = self.0;
        let num = 8 * p.num();
        let g = num.gcd(&p.den());
        (num / g, p.den() / g)
    }

    pub fn from_value(num: i64, den: u64) -> CentralCharge {
        CentralCharge(Phase::new(num, den * 8))
    }
}

impl std::fmt::Display for CentralCharge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (n, d) = self.value();
        if d == 1 {
            write!(f, "{n}")
        } else {
            write!(f, "{n}/{d}")
        }
    }
}

pub fn gauss_sum(md: &ModularData) -> Cyc {
    md.dims
        .iter()
        .zip(&md.theta)
        .map(|(d, &t)| d * d * Cyc::from_phase(t))
        .sum()
}

/// Σ d_i² θ_i = D·e^{2πi c/8}.
pub fn central_charge(md: &ModularData) -> Result<CentralCharge> {
    let g = gauss_sum(md);
    if g.is_zero() {
        return Err(Error::Verification("Gauss sum vanishes".into()));
    }
    let ratio = g * md.total_dim.inv().ok_or_else(|| Error::Verification("D vanishes".into()))?;
    ratio
        .as_root_of_unity()
        .map(CentralCharge)
        .ok_or_else(|| Error::Verification("Gauss sum is not D times a root of unity".into()))
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name,
            passed,
            detail: detail.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect()
    }

    pub fn to_markdown(&self, title: &str) -> String {
        let mut s = format!("# {title}\n\n| check | result | detail |\n|---|---|---|\n");
        for c in &self.checks {
            s.push_str(&format!("| {} | {} | {} |\n", c.name, if c.passed { "pass" } else { "FAIL" }, c.detail));
        }
        for n in &self.notes {
            s.push_str(&format!("\n- {n}"));
        }
        s.push('\n');
        s
    }
}

fn mat_mul(a: &CycMatrix, b: &CycMatrix) -> CycMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = Cyc::zero();
                    for k in 0..n {
                        if !a[i][k].is_zero() && !b[k][j].is_zero() {
                            acc += &a[i][k] * &b[k][j];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Runs every modular-data axiom check; failures are report content.
pub fn verify_modular(md: &ModularData) -> Report {
    let mut r = Report::default();
    let n = md.rank();
    let u = md.unit;
    let d2 = md.global_dim();

    let unit_ok = md.s[u] == md.dims && md.theta[u].is_zero() && md.dims[u].is_one();
    r.push("unit", unit_ok, "unit row of S̃ equals the dimensions, θ_unit = 1, d_unit = 1");

    let dims_ok = md
        .dims
        .iter()
        .all(|d| d.is_real() && d.to_complex().re >= 1.0 - 1e-9);
    r.push("dimensions", dims_ok, "dimensions real and at least 1");

    let d_ok = &md.total_dim * &md.total_dim == d2 && md.total_dim.is_real() && md.total_dim.to_complex().re > 0.0;
    r.push("total-dimension", d_ok, "D > 0 and D² = Σ d²");

    let sym = (0..n).all(|i| (i + 1..n).all(|j| md.s[i][j] == md.s[j][i]));
    r.push("S-symmetry", sym, "S̃ = S̃ᵀ");

    let sdag: CycMatrix = (0..n).map(|i| (0..n).map(|j| md.s[j][i].conj()).collect()).collect();
    let ssd = mat_mul(&md.s, &sdag);
    let unitary = (0..n).all(|i| (0..n).all(|j| if i == j { ssd[i][j] == d2 } else { ssd[i][j].is_zero() }));
    r.push("S-unitarity", unitary, "S̃ S̃† = D² I");

    let s2 = mat_mul(&md.s, &md.s);
    let mut perm = vec![usize::MAX; n];
    let mut cc_ok = true;
    for i in 0..n {
        for j in 0..n {
            if s2[i][j] == d2 {
                if perm[i] != usize::MAX {
                    cc_ok = false;
                }
                perm[i] = j;
            } else if !s2[i][j].is_zero() {
                cc_ok = false;
            }
        }
    }
    cc_ok = cc_ok && perm.iter().all(|&p| p != usize::MAX) && perm[u] == u && (0..n).all(|i| perm[perm[i]] == i);
    r.push("charge-conjugation", cc_ok, "S̃² = D² C with C an involutive permutation fixing the unit");

    let fusion = if unitary { verlinde_fusion(md) } else { Err(Error::Verification("skipped: S not unitary".into())) };
    match &fusion {
        Ok(f) => {
            let comm = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| f.get(a, b, c) == f.get(b, a, c))));
            let unit_row = (0..n).all(|a| (0..n).all(|c| f.get(u, a, c) == u64::from(a == c)));
            r.push("verlinde", comm && unit_row, "fusion coefficients are nonnegative integers, commutative, unital");
            let mut balanced = true;
            let inv_theta: Vec<Cyc> = md.theta.iter().map(|&t| Cyc::from_phase(-t)).collect();
            'outer: for a in 0..n {
                for b in a..n {
                    let mut acc = Cyc::zero();
                    for c in 0..n {
                        let m = f.get(a, b, c);
                        if m > 0 {
                            acc += Cyc::from_int(m as i64) * &md.dims[c] * Cyc::from_phase(md.theta[c]);
                        }
                    }
                    if acc * &inv_theta[a] * &inv_theta[b] != md.s[a][b] {
                        balanced = false;
                        break 'outer;
                    }
                }
            }
            r.push("balancing", balanced, "S̃_ab = Σ_c N_ab^c d_c θ_c / (θ_a θ_b)");
            if !f.multiplicity_free() {
                r.notes.push("fusion has multiplicities > 1; transparency is detected by monodromy only".into());
            }
        }
        Err(e) => {
            r.push("verlinde", false, e.to_string());
            r.push("balancing", false, "skipped: no fusion rules");
        }
    }

    let gs = gauss_sum(md);
    let gauss_ok = &gs * gs.conj() == d2;
    r.push("gauss-sum", gauss_ok, "|Σ d² θ| = D");

    let t_order = md.theta.iter().fold(1u64, |l, t| l.lcm(&t.den()));
    r.push("theta-finite-order", true, format!("T has order {t_order}"));

    // (S T⁻¹)³ = conj(Σd²θ / D) S² with the unitary S
    let modular_rel = if unitary && d_ok && gauss_ok {
        let dinv = md.total_dim.inv().unwrap();
        let st: CycMatrix = (0..n)
            .map(|i| (0..n).map(|j| &md.s[i][j] * &dinv * Cyc::from_phase(-md.theta[j])).collect())
            .collect();
        let cube = mat_mul(&mat_mul(&st, &st), &st);
        let phase = (&gs * &dinv).conj();
        let rhs_scale = &phase * &dinv * &dinv;
        (0..n).all(|i| (0..n).all(|j| cube[i][j] == &s2[i][j] * &rhs_scale))
    } else {
        false
    };
    r.push("modular-relation", modular_rel, "(S T⁻¹)³ = e^{-2πi c/8} S²");

    let all: Vec<usize> = (0..n).collect();
    let center = muger_centralizer(md, &all);
    r.push("muger-center", center == vec![u], format!("Müger center has {} label(s)", center.len()));
    r
}

/// Symmetry category of an extension.
#[derive(Clone, Debug)]
pub enum Symmetry {
    Bosonic { group: FiniteGroup },
    Fermionic { group: FiniteGroup, z: usize },
}

impl Symmetry {
    pub fn group(&self) -> &FiniteGroup {
        match self {
            Symmetry::Bosonic { group } | Symmetry::Fermionic { group, .. } => group,
        }
    }

    pub fn is_fermionic(&self) -> bool {
        matches!(self, Symmetry::Fermionic { .. })
    }

    pub fn character_table(&self) -> Result<CharacterTable> {
        character_table(self.group())
    }

    /// Twist each embedded irrep must carry: 0 (bosons), ½ for odd irreps.
    pub fn required_twists(&self) -> Result<Vec<Phase>> {
        let t = self.character_table()?;
        match self {
            Symmetry::Bosonic { .. } => Ok(vec![Phase::ZERO; t.len()]),
            Symmetry::Fermionic { group, z } => {
                let sym = FermionicSymmetry::new(group.clone(), *z)?;
                Ok(parity_grading(&sym, &t)?
                    .into_iter()
                    .map(|s| if s == 1 { Phase::ZERO } else { Phase::HALF })
                    .collect())
            }
        }
    }

    pub fn same_as(&self, other: &Symmetry) -> bool {
        match (self, other) {
            (Symmetry::Bosonic { group: a }, Symmetry::Bosonic { group: b }) => a.cayley_table() == b.cayley_table(),
            (Symmetry::Fermionic { group: a, z: za }, Symmetry::Fermionic { group: b, z: zb }) => {
                za == zb && a.cayley_table() == b.cayley_table()
            }
            _ => false,
        }
    }

    /// sVec = Rep(Z₂, z).
    pub fn svec() -> Symmetry {
        Symmetry::Fermionic {
            group: FiniteGroup::cyclic(2),
            z: 1,
        }
    }
}

/// Modular data together with an embedding of Irr(E); `embedding[i]` is
/// the label of irrep `i` in character-table order.
#[derive(Clone, Debug)]
pub struct ModularExtension {
    pub md: ModularData,
    pub symmetry: Symmetry,
    pub embedding: Vec<usize>,
}

impl ModularExtension {
    /// Checks that the embedding is an injective map onto labels with the
    /// right dimensions and twists.
    pub fn validate(&self) -> Result<()> {
        let t = self.symmetry.character_table()?;
        if self.embedding.len() != t.len() {
            return Err(Error::invalid("embedding must list one label per irrep"));
        }
        let twists = self.symmetry.required_twists()?;
        let mut seen = vec![false; self.md.rank()];
        for (i, &l) in self.embedding.iter().enumerate() {
            if l >= self.md.rank() || seen[l] {
                return Err(Error::invalid("embedding is not injective into labels"));
            }
            seen[l] = true;
            if self.md.dims[l] != Cyc::from_int(t.dim(i) as i64) {
                return Err(Error::invalid(format!("embedded label {} has the wrong dimension", self.md.labels[l])));
            }
            if self.md.theta[l] != twists[i] {
                return Err(Error::invalid(format!("embedded label {} has the wrong twist", self.md.labels[l])));
            }
        }
        if self.embedding[0] != self.md.unit {
            return Err(Error::invalid("the trivial irrep must map to the unit"));
        }
        Ok(())
    }

    /// The centralizer of the embedded image equals the image.
    pub fn is_minimal(&self) -> bool {
        let mut img = self.embedding.clone();
        img.sort_unstable();
        muger_centralizer(&self.md, &self.embedding) == img
    }
}

/// Interns scalars of two data sets into shared integer ids.
struct Interner {
    level: u32,
    ids: HashMap<Vec<BigRational>, u32>,
}

impl Interner {
    fn id(&mut self, x: &Cyc) -> u32 {
        let key = x.key_at(self.level);
        let next = self.ids.len() as u32;
        *self.ids.entry(key).or_insert(next)
    }
}

struct Encoded {
    s: Vec<Vec<u32>>,
    fingerprint: Vec<(u32, Phase, Vec<u32>)>,
}

fn encode(md: &ModularData, int: &mut Interner) -> Encoded {
    let dims: Vec<u32> = md.dims.iter().map(|d| int.id(d)).collect();
    let s: Vec<Vec<u32>> = md.s.iter().map(|r| r.iter().map(|x| int.id(x)).collect()).collect();
    let fingerprint = (0..md.rank())
        .map(|i| {
            let mut row = s[i].clone();
            row.sort_unstable();
            (dims[i], md.theta[i], row)
        })
        .collect();
    Encoded { s, fingerprint }
}

/// A bijection `perm` with label i of `a` ↦ label perm[i] of `b` preserving
/// dims, twists, S̃ and the unit; `fixed` pins some labels in advance.
fn find_equivalence(a: &ModularData, b: &ModularData, fixed: &[(usize, usize)]) -> Result<Option<Vec<usize>>> {
    let n = a.rank();
    check_cap("label count", n.max(b.rank()), limits::order_cap(limits::EQUIVALENCE_LABELS))?;
    if n != b.rank() || a.total_dim != b.total_dim {
        return Ok(None);
    }
    let mut int = Interner {
        level: a.level().lcm(&b.level()),
        ids: HashMap::new(),
    };
    let ea = encode(a, &mut int);
    let eb = encode(b, &mut int);
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| ea.fingerprint[i] == eb.fingerprint[j]).collect())
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(None);
    }
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut pins = fixed.to_vec();
    pins.push((a.unit, b.unit));
    for &(i, j) in &pins {
        if !candidates[i].contains(&j) || (perm[i] != usize::MAX && perm[i] != j) || (perm[i] != j && used[j]) {
            return Ok(None);
        }
        perm[i] = j;
        used[j] = true;
    }
    for &(i, _) in &pins {
        for &(k, _) in &pins {
            if ea.s[i][k] != eb.s[perm[i]][perm[k]] {
                return Ok(None);
            }
        }
    }
    let mut order: Vec<usize> = (0..n).filter(|&i| perm[i] == usize::MAX).collect();
    order.sort_by_key(|&i| (candidates[i].len(), i));
    let assigned: Vec<usize> = (0..n).filter(|&i| perm[i] != usize::MAX).collect();

    fn backtrack(
        depth: usize,
        order: &[usize],
        assigned: &mut Vec<usize>,
        candidates: &[Vec<usize>],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        ea: &Encoded,
        eb: &Encoded,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let i = order[depth];
        for &j in &candidates[i] {
            if used[j] {
                continue;
            }
            if ea.s[i][i] != eb.s[j][j] {
                continue;
            }
            if assigned.iter().any(|&k| ea.s[i][k] != eb.s[j][perm[k]]) {
                continue;
            }
            perm[i] = j;
            used[j] = true;
            assigned.push(i);
            if backtrack(depth + 1, order, assigned, candidates, perm, used, ea, eb) {
                return true;
            }
            assigned.pop();
            used[j] = false;
            perm[i] = usize::MAX;
        }
        false
    }
    let mut assigned = assigned;
    if backtrack(0, &order, &mut assigned, &candidates, &mut perm, &mut used, &ea, &eb) {
        Ok(Some(perm))
    } else {
        Ok(None)
    }
}

pub fn equivalent(a: &ModularData, b: &ModularData) -> Result<Option<Vec<usize>>> {
    find_equivalence(a, b, &[])
}

pub fn extension_equivalent(a: &ModularExtension, b: &ModularExtension) -> Result<Option<Vec<usize>>> {
    if !a.symmetry.same_as(&b.symmetry) {
        return Err(Error::invalid("extensions of different symmetry categories"));
    }
    if a.embedding.len() != b.embedding.len() {
        return Ok(None);
    }
    let pins: Vec<(usize, usize)> = a.embedding.iter().copied().zip(b.embedding.iter().copied()).collect();
    find_equivalence(&a.md, &b.md, &pins)
}

pub fn deligne_product(a: &ModularData, b: &ModularData) -> ModularData {
    let (na, nb) = (a.rank(), b.rank());
    let mut labels = Vec::with_capacity(na * nb);
    let mut dims = Vec::with_capacity(na * nb);
    let mut theta = Vec::with_capacity(na * nb);
    for i in 0..na {
        for j in 0..nb {
            labels.push(format!("({},{})", a.labels[i], b.labels[j]));
            dims.push(&a.dims[i] * &b.dims[j]);
            theta.push(a.theta[i] + b.theta[j]);
        }
    }
    let s = (0..na * nb)
        .map(|x| (0..na * nb).map(|y| &a.s[x / nb][y / nb] * &b.s[x % nb][y % nb]).collect())
        .collect();
    ModularData::new(labels, dims, theta, s, &a.total_dim * &b.total_dim, a.unit * nb + b.unit).expect("product shapes")
}

pub fn conjugate(md: &ModularData) -> ModularData {
    ModularData {
        labels: md.labels.clone(),
        dims: md.dims.clone(),
        theta: md.theta.iter().map(|&t| -t).collect(),
        s: md.s.iter().map(|r| r.iter().map(|x| x.conj()).collect()).collect(),
        total_dim: md.total_dim.clone(),
        unit: md.unit,
    }
}

pub fn time_reversal(ext: &ModularExtension) -> ModularExtension {
    ModularExtension {
        md: conjugate(&ext.md),
        symmetry: ext.symmetry.clone(),
        embedding: ext.embedding.clone(),
    }
}
