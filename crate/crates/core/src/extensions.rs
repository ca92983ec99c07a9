//! Minimal modular extensions: Drinfeld doubles, twisted doubles of abelian
//! groups, the sixteenfold catalog over sVec, condensation of invertible
//! bosons and the stacking product.

use num_integer::Integer;

use crate::cohomology::{is_cocycle, transgress_on, Cochain};
use crate::error::{check_cap, Error, Result};
use crate::groups::{FiniteGroup, Subgroup};
use crate::limits;
use crate::metric::{metric_to_modular, QuadraticForm};
use crate::modular::{
    central_charge, deligne_product, equivalent, extension_equivalent, is_transparent_pair, verify_modular, ModularData,
    ModularExtension, Report, Symmetry,
};
use crate::reps::{character_table, projective_irrep_data, ProjectiveIrrepData};
use crate::scalars::{Cyc, Phase};

fn element_label(g: &FiniteGroup, x: usize) -> String {
    match g.coords_of(x) {
        Some(c) if !c.is_empty() => c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(""),
        _ => x.to_string(),
    }
}

/// Runs the modular checks and minimality, turning failures into an error.
fn certify(ext: &ModularExtension) -> Result<()> {
    let report = verify_modular(&ext.md);
    if !report.all_passed() {
        return Err(Error::Verification(format!("constructed data fails {:?}", report.failed())));
    }
    ext.validate()?;
    if !ext.is_minimal() {
        return Err(Error::Verification("constructed extension is not minimal".into()));
    }
    Ok(())
}

/// The modular checks plus minimality, as a report.
pub fn verify_extension(ext: &ModularExtension) -> Report {
    let mut r = verify_modular(&ext.md);
    match ext.validate() {
        Ok(()) => r.push("embedding", true, "embedded labels have the irrep dimensions and required twists"),
        Err(e) => r.push("embedding", false, e.to_string()),
    }
    r.push("minimality", ext.is_minimal(), "centralizer of the embedded image is the image");
    r
}

pub fn minimality_check(ext: &ModularExtension) -> bool {
    ext.is_minimal()
}

/// Z₁(Vec_G): labels (conjugacy class, irrep of the centralizer).
pub fn drinfeld_double(g: &FiniteGroup) -> Result<ModularExtension> {
    check_cap("group order", g.order(), limits::order_cap(limits::DOUBLE))?;
    let n = g.order();
    let classes = g.conjugacy_classes();
    let mut cents = Vec::with_capacity(classes.len());
    let mut tables = Vec::with_capacity(classes.len());
    for c in 0..classes.len() {
        let cent = g.centralizer(classes.representative(c));
        tables.push(character_table(&cent.group)?);
        cents.push(cent);
    }
    // label = (class, irrep)
    let mut labels = Vec::new();
    let mut names = Vec::new();
    let mut dims = Vec::new();
    let mut theta = Vec::new();
    for c in 0..classes.len() {
        let a = classes.representative(c);
        let local_a = cents[c].index_of(a).unwrap();
        for i in 0..tables[c].len() {
            labels.push((c, i));
            names.push(format!("C{c}:{i}"));
            let d = tables[c].dim(i);
            dims.push(Cyc::from_int((classes.size(c) as u64 * d) as i64));
            let ratio = tables[c].value(i, local_a) * Cyc::from_ratio(1, d as i64);
            theta.push(
                ratio
                    .as_root_of_unity()
                    .ok_or_else(|| Error::Verification("central element acts by a non-root of unity".into()))?,
            );
        }
    }
    let k = labels.len();
    let mut s = vec![vec![Cyc::zero(); k]; k];
    // pairs (x = g b g⁻¹ in C(a), y = g⁻¹ a g in C(b)) for each class pair
    let mut offsets = Vec::with_capacity(classes.len());
    let mut acc = 0;
    for t in &tables {
        offsets.push(acc);
        acc += t.len();
    }
    for ca in 0..classes.len() {
        let a = classes.representative(ca);
        for cb in ca..classes.len() {
            let b = classes.representative(cb);
            let mut pairs = Vec::new();
            for x in 0..n {
                let gbg = g.conj(x, b);
                if g.mul(a, gbg) == g.mul(gbg, a) {
                    let y = g.mul(g.mul(g.inv(x), a), x);
                    pairs.push((cents[ca].index_of(gbg).unwrap(), cents[cb].index_of(y).unwrap()));
                }
            }
            let scale = Cyc::from_ratio(n as i64, (cents[ca].order() * cents[cb].order()) as i64);
            for i in 0..tables[ca].len() {
                for j in 0..tables[cb].len() {
                    let mut sum = Cyc::zero();
                    for &(x, y) in &pairs {
                        sum += tables[ca].value(i, x) * tables[cb].value(j, y);
                    }
                    let v = sum * &scale;
                    s[offsets[ca] + i][offsets[cb] + j] = v.clone();
                    s[offsets[cb] + j][offsets[ca] + i] = v;
                }
            }
        }
    }
    let md = ModularData::new(names, dims, theta, s, Cyc::from_int(n as i64), 0)?;
    // Rep(G) sits in the identity class; match irreps by their characters
    let gt = character_table(g)?;
    let embedding = (0..gt.len())
        .map(|i| {
            (0..tables[0].len())
                .find(|&j| (0..n).all(|x| gt.value(i, x) == tables[0].value(j, cents[0].index_of(x).unwrap())))
                .map(|j| offsets[0] + j)
                .ok_or_else(|| Error::Verification("irrep of G missing from the identity sector".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let ext = ModularExtension {
        md,
        symmetry: Symmetry::Bosonic { group: g.clone() },
        embedding,
    };
    certify(&ext)?;
    if ext.md.global_dim() != Cyc::from_int((n * n) as i64) {
        return Err(Error::Verification("D² differs from |G|²".into()));
    }
    Ok(ext)
}

/// γ_x(a,b) = ω(a,b,x) − ω(a,x,b) + ω(x,a,b).
fn gamma(omega: &Cochain, a: usize, b: usize, x: usize) -> Phase {
    omega.get(&[a, b, x]) - omega.get(&[a, x, b]) + omega.get(&[x, a, b])
}

/// Z₁(Vec_G^ω) for abelian G.
pub fn twisted_double_abelian(g: &FiniteGroup, omega: &Cochain) -> Result<ModularExtension> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    check_cap("group order", g.order(), limits::order_cap(limits::TWISTED_DOUBLE))?;
    if omega.degree() != 3 || omega.group_order() != g.order() {
        return Err(Error::invalid("twisted double needs a 3-cocycle on the group"));
    }
    if !is_cocycle(g, omega) {
        return Err(Error::NotCocycle);
    }
    let n = g.order();
    let whole = Subgroup::new(g, &(0..n).collect::<Vec<_>>())?;
    let betas: Vec<Cochain> = (0..n).map(|a| transgress_on(omega, a, &whole)).collect();
    let data: Vec<ProjectiveIrrepData> = betas.iter().map(|b| projective_irrep_data(g, b)).collect::<Result<_>>()?;

    // sign s with β_ab − β_a − β_b = s·δγ(a,b)
    let sign = {
        let test = |s: i64| {
            (0..n).all(|a| {
                (0..n).all(|b| {
                    let ab = g.mul(a, b);
                    (0..n).all(|x| {
                        (0..n).all(|y| {
                            let lhs = betas[ab].get(&[x, y]) - betas[a].get(&[x, y]) - betas[b].get(&[x, y]);
                            let dg = gamma(omega, a, b, x) + gamma(omega, a, b, y) - gamma(omega, a, b, g.mul(x, y));
                            lhs == dg.times(s)
                        })
                    })
                })
            })
        };
        if test(1) {
            1
        } else if test(-1) {
            -1
        } else {
            return Err(Error::Verification("transgressed cocycles are not related by γ".into()));
        }
    };

    let mut labels = Vec::new();
    let mut names = Vec::new();
    let mut dims = Vec::new();
    let mut theta = Vec::new();
    let mut offsets = Vec::with_capacity(n);
    for a in 0..n {
        offsets.push(labels.len());
        let d = &data[a];
        for i in 0..d.irrep_count() {
            labels.push((a, i));
            names.push(format!("{}:{}", element_label(g, a), i));
            dims.push(Cyc::from_int(d.dimension as i64));
            theta.push(d.phase(i, a).ok_or_else(|| Error::Verification("flux outside its own radical".into()))?);
        }
    }
    let k = labels.len();
    let total = Cyc::from_int(n as i64);
    let inv_n = Cyc::from_ratio(1, n as i64);

    // N_{(a,ρ),(b,σ)}^{(ab,π)} = (1/|G|) Σ_x χ_ρ(x) χ_σ(x) e^{2πi s γ_x(a,b)} conj χ_π(x)
    let fusion = |la: usize, lb: usize| -> Result<Vec<(usize, u64)>> {
        let (a, i) = labels[la];
        let (b, j) = labels[lb];
        let ab = g.mul(a, b);
        let mut out = Vec::new();
        for p in 0..data[ab].irrep_count() {
            let mut acc = Cyc::zero();
            for x in 0..n {
                let (Some(pa), Some(pb), Some(pc)) = (data[a].phase(i, x), data[b].phase(j, x), data[ab].phase(p, x)) else {
                    continue;
                };
                let ph = pa + pb - pc + gamma(omega, a, b, x).times(sign);
                acc += Cyc::from_phase(ph) * Cyc::from_int((data[a].dimension * data[b].dimension * data[ab].dimension) as i64);
            }
            let m = (acc * &inv_n)
                .as_integer()
                .and_then(|v| u64::try_from(v).ok())
                .ok_or_else(|| Error::Verification("twisted fusion coefficient is not a nonnegative integer".into()))?;
            if m > 0 {
                out.push((offsets[ab] + p, m));
            }
        }
        Ok(out)
    };
    let mut s = vec![vec![Cyc::zero(); k]; k];
    for la in 0..k {
        for lb in la..k {
            let mut acc = Cyc::zero();
            for (c, m) in fusion(la, lb)? {
                acc += Cyc::from_int(m as i64) * &dims[c] * Cyc::from_phase(theta[c]);
            }
            let v = acc * Cyc::from_phase(-theta[la] - theta[lb]);
            s[la][lb] = v.clone();
            s[lb][la] = v;
        }
    }
    let md = ModularData::new(names, dims, theta, s, total, 0)?;
    let gt = character_table(g)?;
    let embedding = (0..gt.len())
        .map(|i| {
            (0..data[0].irrep_count())
                .find(|&l| (0..n).all(|x| *gt.value(i, x) == data[0].character(l, x)))
                .map(|l| offsets[0] + l)
                .ok_or_else(|| Error::Verification("irrep of G missing from the trivial-flux sector".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let ext = ModularExtension {
        md,
        symmetry: Symmetry::Bosonic { group: g.clone() },
        embedding,
    };
    certify(&ext)?;
    Ok(ext)
}

/// The ν-th minimal modular extension of sVec, ν mod 16.
pub fn sixteenfold(nu: i64) -> ModularExtension {
    let nu = nu.rem_euclid(16);
    let md = if nu % 2 == 1 {
        let r2 = Cyc::sqrt_int(2);
        ModularData::new(
            vec!["1".into(), "f".into(), "sigma".into()],
            vec![Cyc::one(), Cyc::one(), r2.clone()],
            vec![Phase::ZERO, Phase::HALF, Phase::new(nu, 16)],
            vec![
                vec![Cyc::one(), Cyc::one(), r2.clone()],
                vec![Cyc::one(), Cyc::one(), -&r2],
                vec![r2.clone(), -&r2, Cyc::zero()],
            ],
            Cyc::from_int(2),
            0,
        )
        .expect("Ising shapes")
    } else if nu % 4 == 0 {
        let q = vec![Phase::ZERO, Phase::new(nu, 16), Phase::new(nu, 16), Phase::HALF];
        let form = QuadraticForm::new(&[2, 2], q).expect("valid form").with_names(&["1", "e", "m", "f"]);
        metric_to_modular(&form).expect("nondegenerate")
    } else {
        let q = (0..4).map(|j| Phase::new(nu * j * j, 16)).collect();
        let form = QuadraticForm::new(&[4], q).expect("valid form").with_names(&["1", "a", "f", "abar"]);
        metric_to_modular(&form).expect("nondegenerate")
    };
    let f = md.label_index("f").expect("fermion label");
    ModularExtension {
        md,
        symmetry: Symmetry::svec(),
        embedding: vec![0, f],
    }
}

/// Index ν of the catalog entry equivalent to `ext`, if any.
pub fn identify_sixteenfold(ext: &ModularExtension) -> Result<Option<i64>> {
    for nu in 0..16 {
        let c = sixteenfold(nu);
        if !c.symmetry.same_as(&ext.symmetry) {
            return Err(Error::invalid("not an extension of sVec"));
        }
        if extension_equivalent(&c, ext)?.is_some() {
            return Ok(Some(nu));
        }
    }
    Ok(None)
}

/// The permutation x ↦ b ⊗ x for an invertible label b, read off from
/// S̃_{b⊗x, z} = S̃_{x,z} S̃_{b,z} / d_z.
pub fn invertible_action(md: &ModularData, b: usize) -> Result<Vec<usize>> {
    let u = md.unit;
    if !md.dims[b].is_one() {
        return Err(Error::invalid(format!("label {} is not invertible", md.labels[b])));
    }
    let n = md.rank();
    let inv_dims: Vec<Cyc> = md.s[u].iter().map(|d| d.inv().expect("nonzero dimension")).collect();
    let ratio: Vec<Cyc> = (0..n).map(|z| &md.s[b][z] * &inv_dims[z]).collect();
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    for x in 0..n {
        let row: Vec<Cyc> = (0..n).map(|z| &md.s[x][z] * &ratio[z]).collect();
        let y = (0..n)
            .find(|&y| !used[y] && md.dims[y] == md.dims[x] && (0..n).all(|z| md.s[y][z] == row[z]))
            .ok_or_else(|| Error::Verification(format!("no fusion product {} x {} found", md.labels[b], md.labels[x])))?;
        used[y] = true;
        perm.push(y);
    }
    Ok(perm)
}

/// A condensed theory together with where parent labels went.
#[derive(Clone, Debug)]
pub struct Condensed {
    pub md: ModularData,
    /// Child label of each parent label lying in an unsplit transparent
    /// orbit (None for non-transparent or split labels).
    pub parent_to_child: Vec<Option<usize>>,
}

/// Child labels before the split-sector entries are known.
struct ChildLayout {
    /// (orbit representative, piece index, split count)
    labels: Vec<(usize, usize, usize)>,
    parent_to_child: Vec<Option<usize>>,
}

pub fn validate_boson_group(md: &ModularData, bosons: &[usize]) -> Result<Vec<Vec<usize>>> {
    let mut b = bosons.to_vec();
    b.sort_unstable();
    b.dedup();
    if !b.contains(&md.unit) {
        b.push(md.unit);
        b.sort_unstable();
    }
    let mut actions = Vec::with_capacity(b.len());
    for &x in &b {
        if x >= md.rank() {
            return Err(Error::invalid("boson label out of range"));
        }
        if !md.theta[x].is_zero() {
            return Err(Error::invalid(format!("{} has twist {} and is not a boson", md.labels[x], md.theta[x])));
        }
        actions.push(invertible_action(md, x)?);
    }
    for &x in &b {
        for &y in &b {
            if !is_transparent_pair(md, x, y) {
                return Err(Error::invalid(format!("{} and {} braid nontrivially", md.labels[x], md.labels[y])));
            }
        }
    }
    for act in &actions {
        for &y in &b {
            if !b.contains(&act[y]) {
                return Err(Error::invalid("boson set is not closed under fusion"));
            }
        }
    }
    Ok(actions)
}

/// Condenses a group of invertible bosons, returning every consistent
/// completion of the split-sector S-matrix entries up to equivalence.
pub fn condense_invertible(md: &ModularData, bosons: &[usize]) -> Result<Vec<Condensed>> {
    let actions = validate_boson_group(md, bosons)?;
    let order = actions.len();
    let n = md.rank();
    let bset: Vec<usize> = actions.iter().map(|a| a[md.unit]).collect();
    let transparent: Vec<usize> = (0..n).filter(|&x| bset.iter().all(|&b| is_transparent_pair(md, b, x))).collect();

    let mut layout = ChildLayout {
        labels: Vec::new(),
        parent_to_child: vec![None; n],
    };
    let mut seen = vec![false; n];
    for &x in &transparent {
        if seen[x] {
            continue;
        }
        let mut orbit: Vec<usize> = actions.iter().map(|a| a[x]).collect();
        let stab = orbit.iter().filter(|&&y| y == x).count();
        orbit.sort_unstable();
        orbit.dedup();
        for &y in &orbit {
            seen[y] = true;
            if md.theta[y] != md.theta[x] {
                return Err(Error::invalid("twist is not constant on a boson orbit"));
            }
        }
        if stab == 1 {
            let idx = layout.labels.len();
            for &y in &orbit {
                layout.parent_to_child[y] = Some(idx);
            }
            layout.labels.push((x, 0, 1));
        } else {
            for i in 0..stab {
                layout.labels.push((x, i, stab));
            }
        }
    }
    let k = layout.labels.len();
    let child_dims: Vec<Cyc> = layout
        .labels
        .iter()
        .map(|&(x, _, s)| &md.dims[x] * Cyc::from_ratio(1, s as i64))
        .collect();
    let child_theta: Vec<Phase> = layout.labels.iter().map(|&(x, _, _)| md.theta[x]).collect();
    let names: Vec<String> = layout
        .labels
        .iter()
        .map(|&(x, i, s)| if s == 1 { format!("[{}]", md.labels[x]) } else { format!("[{}]_{}", md.labels[x], i) })
        .collect();
    let total = &md.total_dim * Cyc::from_ratio(1, order as i64);
    let d2 = &total * &total;
    let unit = layout.parent_to_child[md.unit].expect("unit orbit is free");

    let mut s: Vec<Vec<Option<Cyc>>> = vec![vec![None; k]; k];
    for i in 0..k {
        for j in 0..k {
            let (x, _, sx) = layout.labels[i];
            let (y, _, sy) = layout.labels[j];
            if sx == 1 || sy == 1 {
                s[i][j] = Some(&md.s[x][y] * Cyc::from_ratio(1, (sx * sy) as i64));
            }
        }
    }
    let unknowns: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i..k).map(move |j| (i, j)))
        .filter(|&(i, j)| s[i][j].is_none())
        .collect();
    let level = child_theta.iter().fold(2u64, |l, t| l.lcm(&t.den())) as u32;
    let parent_c = central_charge(md)?;

    let mut found: Vec<ModularData> = Vec::new();
    let mut solve_state = s.clone();
    let mut out_err: Option<Error> = None;
    search_split(
        0,
        &unknowns,
        &mut solve_state,
        &child_dims,
        &d2,
        level,
        &mut |full: &Vec<Vec<Option<Cyc>>>| {
            let sm: Vec<Vec<Cyc>> = full.iter().map(|r| r.iter().map(|x| x.clone().unwrap()).collect()).collect();
            let cand = match ModularData::new(names.clone(), child_dims.clone(), child_theta.clone(), sm, total.clone(), unit) {
                Ok(c) => c,
                Err(e) => {
                    out_err = Some(e);
                    return;
                }
            };
            if !verify_modular(&cand).all_passed() {
                return;
            }
            if central_charge(&cand).ok() != Some(parent_c) {
                return;
            }
            for f in &found {
                if matches!(equivalent_pinned(f, &cand, unit, &layout), Some(true)) {
                    return;
                }
            }
            found.push(cand);
        },
    );
    if let Some(e) = out_err {
        return Err(e);
    }
    if found.is_empty() {
        return Err(Error::NoCompletion);
    }
    Ok(found
        .into_iter()
        .map(|md| Condensed {
            md,
            parent_to_child: layout.parent_to_child.clone(),
        })
        .collect())
}

/// Two completions coincide when an equivalence fixes every unsplit child.
fn equivalent_pinned(a: &ModularData, b: &ModularData, _unit: usize, layout: &ChildLayout) -> Option<bool> {
    if a.s == b.s {
        return Some(true);
    }
    let perm = equivalent(a, b).ok()??;
    let fixes = layout
        .labels
        .iter()
        .enumerate()
        .all(|(i, &(_, _, s))| s > 1 || perm[i] == i);
    Some(fixes)
}

fn search_split<F: FnMut(&Vec<Vec<Option<Cyc>>>)>(
    depth: usize,
    unknowns: &[(usize, usize)],
    s: &mut Vec<Vec<Option<Cyc>>>,
    dims: &[Cyc],
    d2: &Cyc,
    level: u32,
    emit: &mut F,
) {
    if depth == unknowns.len() {
        emit(s);
        return;
    }
    let (i, j) = unknowns[depth];
    let base = &dims[i] * &dims[j];
    let mut options = vec![Cyc::zero()];
    options.extend((0..level).map(|t| &base * Cyc::root(level, t as i64)));
    for v in options {
        s[i][j] = Some(v.clone());
        s[j][i] = Some(v);
        if rows_consistent(s, i, j, d2) {
            search_split(depth + 1, unknowns, s, dims, d2, level, emit);
        }
    }
    s[i][j] = None;
    s[j][i] = None;
}

/// Orthogonality among fully known rows touching i or j.
fn rows_consistent(s: &[Vec<Option<Cyc>>], i: usize, j: usize, d2: &Cyc) -> bool {
    let k = s.len();
    let complete = |r: usize| s[r].iter().all(|x| x.is_some());
    for &r in &[i, j] {
        if !complete(r) {
            continue;
        }
        for r2 in 0..k {
            if !complete(r2) {
                continue;
            }
            let mut acc = Cyc::zero();
            for z in 0..k {
                acc += s[r][z].as_ref().unwrap() * s[r2][z].as_ref().unwrap().conj();
            }
            let ok = if r == r2 { acc == *d2 } else { acc.is_zero() };
            if !ok {
                return false;
            }
        }
    }
    true
}

fn stack_supported(sym: &Symmetry) -> Result<()> {
    match sym {
        Symmetry::Bosonic { group } if group.is_abelian() => Ok(()),
        Symmetry::Bosonic { .. } => Err(Error::Unsupported("stacking over Rep(G) for nonabelian G".into())),
        Symmetry::Fermionic { group, .. } if group.order() == 2 => Ok(()),
        Symmetry::Fermionic { .. } => Err(Error::Unsupported("stacking over Rep(G, z) with G other than Z2".into())),
    }
}

/// The stacking product: condense the diagonal {(ι_a(χ), ι_b(χ^∨))} in
/// the Deligne product and carry the embedding along the first factor.
pub fn stack(a: &ModularExtension, b: &ModularExtension) -> Result<ModularExtension> {
    if !a.symmetry.same_as(&b.symmetry) {
        return Err(Error::invalid("stacking needs extensions of the same symmetry"));
    }
    stack_supported(&a.symmetry)?;
    let table = a.symmetry.character_table()?;
    let prod = deligne_product(&a.md, &b.md);
    let nb = b.md.rank();
    let bosons: Vec<usize> = (0..table.len())
        .map(|i| a.embedding[i] * nb + b.embedding[table.dual(i)])
        .collect();
    let candidates = condense_invertible(&prod, &bosons)?;
    let mut exts: Vec<ModularExtension> = Vec::new();
    for cand in candidates {
        let embedding = (0..table.len())
            .map(|i| {
                cand.parent_to_child[a.embedding[i] * nb + b.md.unit]
                    .ok_or_else(|| Error::Verification("embedded label did not survive condensation".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let ext = ModularExtension {
            md: cand.md,
            symmetry: a.symmetry.clone(),
            embedding,
        };
        if ext.validate().is_err() || !ext.is_minimal() {
            continue;
        }
        let mut dup = false;
        for e in &exts {
            if extension_equivalent(e, &ext)?.is_some() {
                dup = true;
                break;
            }
        }
        if !dup {
            exts.push(ext);
        }
    }
    match exts.len() {
        0 => Err(Error::NoCompletion),
        1 => Ok(exts.pop().unwrap()),
        m => Err(Error::Ambiguous(m)),
    }
}

/// Trivial extension of a symmetry: the untwisted double for Rep(G),
/// ν = 0 for sVec.
pub fn trivial_extension(sym: &Symmetry) -> Result<ModularExtension> {
    match sym {
        Symmetry::Bosonic { group } => drinfeld_double(group),
        Symmetry::Fermionic { group, .. } if group.order() == 2 => Ok(sixteenfold(0)),
        Symmetry::Fermionic { .. } => Err(Error::Unsupported("minimal modular extensions of Rep(G, z) with G other than Z2".into())),
    }
}
