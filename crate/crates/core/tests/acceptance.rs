//! Acceptance run: one PASS/FAIL line per criterion. Exits nonzero if any
//! criterion fails.

mod support;

use std::time::{Duration, Instant};

use modext::classify::classify;
use modext::cohomology::{cohomology_group, Cochain};
use modext::extensions::{
    drinfeld_double, identify_sixteenfold, minimality_check, sixteenfold, stack, twisted_double_abelian,
};
use modext::groups::{abelian_invariants, FermionicSymmetry, FiniteGroup};
use modext::metric::{metric_to_modular, QuadraticForm};
use modext::modular::{
    central_charge, equivalent, extension_equivalent, muger_centralizer, time_reversal, verify_modular, verlinde_fusion,
    CentralCharge, ModularData, ModularExtension, Symmetry,
};
use modext::scalars::{Cyc, Phase};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn timed(limit: Duration, what: &str, start: Instant) -> Result<(), String> {
    ensure(start.elapsed() <= limit, format!("{what} took {:?} (limit {:?})", start.elapsed(), limit))
}

fn q8_minus_one(g: &FiniteGroup) -> usize {
    g.center().into_iter().find(|&x| x != 0).unwrap()
}

fn catalog_groups() -> Vec<FiniteGroup> {
    vec![
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::abelian(&[2, 2]),
        FiniteGroup::abelian(&[2, 2, 2]),
        FiniteGroup::symmetric(3),
        FiniteGroup::dihedral(4),
        FiniteGroup::quaternion(),
    ]
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn criterion1() -> Outcome {
    let expected_h2: &[(&str, Vec<u64>)] = &[
        ("Z2", vec![]),
        ("Z3", vec![]),
        ("Z4", vec![]),
        ("Z2xZ2", vec![2]),
        ("Z2xZ2xZ2", vec![2, 2, 2]),
        ("S3", vec![]),
        ("D4", vec![2]),
        ("Q8", vec![]),
    ];
    let expected_h3: &[(&str, Vec<u64>)] = &[
        ("Z2", vec![2]),
        ("Z3", vec![3]),
        ("Z4", vec![4]),
        ("Z2xZ2", vec![2, 2, 2]),
        ("Z2xZ2xZ2", vec![2; 7]),
        ("S3", vec![6]),
    ];
    let mut oracle_checks = 0;
    for g in catalog_groups() {
        let start = Instant::now();
        let (ab, _) = g.quotient(&g.commutator_subgroup()).map_err(e)?;
        let h1 = cohomology_group(&g, 1).map_err(e)?;
        ensure(h1.invariants == abelian_invariants(&ab).map_err(e)?.invariants, format!("H1({}) mismatch", g.name()))?;
        let h2 = cohomology_group(&g, 2).map_err(e)?;
        let want2 = &expected_h2.iter().find(|x| x.0 == g.name()).unwrap().1;
        ensure(&h2.invariants == want2, format!("H2({}) = {:?}", g.name(), h2.invariants))?;
        let h3 = cohomology_group(&g, 3).map_err(e)?;
        if let Some((_, want3)) = expected_h3.iter().find(|x| x.0 == g.name()) {
            ensure(&h3.invariants == want3, format!("H3({}) = {:?}", g.name(), h3.invariants))?;
        }
        if g.order() <= 4 {
            for (n, h) in [(1, &h1), (2, &h2)] {
                ensure(support::exhaustive_cohomology(&g, n) == h.invariants, format!("exhaustive H{n}({})", g.name()))?;
                oracle_checks += 1;
            }
            if g.order() <= 3 {
                ensure(support::exhaustive_cohomology(&g, 3) == h3.invariants, format!("exhaustive H3({})", g.name()))?;
                oracle_checks += 1;
            }
        }
        timed(Duration::from_secs(60), g.name(), start)?;
    }
    Ok(format!(
        "8 groups, degrees 1-3 exact; {oracle_checks} exhaustive-oracle confirmations (H3 of Z4 and Z2xZ2 beyond brute force)"
    ))
}

fn criterion2() -> Outcome {
    for g in catalog_groups() {
        let start = Instant::now();
        let r = classify(&g, None, 0).map_err(e)?;
        let h1 = cohomology_group(&g, 1).map_err(e)?;
        ensure(r.invariants.as_ref() == Some(&h1.invariants), format!("dim 0 for {}", g.name()))?;
        let ab = g.order() / g.commutator_subgroup().len();
        ensure(r.realizations.len() == ab, "realization count differs from |G/[G,G]|")?;
        timed(Duration::from_secs(1), g.name(), start)?;
    }
    Ok("classify(dim 0) = H1 for 8 groups".into())
}

fn criterion3() -> Outcome {
    let q8 = FiniteGroup::quaternion();
    let cases = [
        (FiniteGroup::abelian(&[2, 2]), 1usize, vec![2u64, 2], true),
        (FiniteGroup::cyclic(4), 2, vec![], false),
        (q8.clone(), q8_minus_one(&q8), vec![], false),
    ];
    for (g, z, want, split) in cases {
        let r = classify(&g, Some(z), 1).map_err(e)?;
        ensure(r.invariants.as_ref() == Some(&want), format!("{} gives {:?}", g.name(), r.invariants))?;
        let detected = FermionicSymmetry::new(g.clone(), z).map_err(e)?.detect_split().map_err(e)?.is_some();
        ensure(detected == split, format!("detect_split({})", g.name()))?;
        let branch = if split { "dim1-fermionic-split" } else { "dim1-fermionic-nonsplit" };
        ensure(r.branch == branch, format!("branch {} for {}", r.branch, g.name()))?;
    }
    Ok("Z2xZ2 -> Z2xZ2 (split), Z4 -> 0, Q8 -> 0 (non-split)".into())
}

fn as_ext(md: ModularData, group: FiniteGroup, embedding: Vec<usize>) -> ModularExtension {
    ModularExtension {
        md,
        symmetry: Symmetry::Bosonic { group },
        embedding,
    }
}

fn criterion4(corpus: &mut Vec<ModularData>) -> Outcome {
    let z2 = FiniteGroup::cyclic(2);
    let start = Instant::now();
    let tc = drinfeld_double(&z2).map_err(e)?;
    let tc_oracle = as_ext(metric_to_modular(&QuadraticForm::toric_code()).map_err(e)?, z2.clone(), vec![0, 1]);
    ensure(extension_equivalent(&tc, &tc_oracle).map_err(e)?.is_some(), "D(Z2) is not the toric code")?;
    let h3 = cohomology_group(&z2, 3).map_err(e)?;
    let ds = twisted_double_abelian(&z2, &h3.representatives[0]).map_err(e)?;
    let ds_oracle = as_ext(metric_to_modular(&QuadraticForm::double_semion()).map_err(e)?, z2.clone(), vec![0, 3]);
    ensure(extension_equivalent(&ds, &ds_oracle).map_err(e)?.is_some(), "twisted D(Z2) is not the double semion")?;
    timed(Duration::from_secs(30), "Z2 doubles", start)?;

    let start = Instant::now();
    let d = drinfeld_double(&FiniteGroup::symmetric(3)).map_err(e)?;
    let mut dims: Vec<i64> = d.md.dims.iter().map(|x| i64::try_from(x.as_integer().unwrap()).unwrap()).collect();
    dims.sort_unstable();
    ensure(dims == vec![1, 1, 2, 2, 2, 2, 3, 3], format!("D(S3) dims {dims:?}"))?;
    ensure(d.md.global_dim() == Cyc::from_int(36), "D(S3) D^2")?;
    ensure(verify_modular(&d.md).all_passed() && minimality_check(&d), "D(S3) checks")?;
    timed(Duration::from_secs(30), "D(S3)", start)?;

    let start = Instant::now();
    let g = FiniteGroup::abelian(&[2, 2, 2]);
    let w = Cochain::from_fn(8, 3, |a| {
        let c = |x: usize, i: usize| g.coords_of(x).unwrap()[i] as i64;
        Phase::new(c(a[0], 0) * c(a[1], 1) * c(a[2], 2), 2)
    });
    let t3 = twisted_double_abelian(&g, &w).map_err(e)?;
    ensure(t3.md.rank() == 22, format!("type-III rank {}", t3.md.rank()))?;
    ensure(t3.md.global_dim() == Cyc::from_int(64), "type-III sum of d^2")?;
    let twos = t3.md.dims.iter().filter(|d| **d == Cyc::from_int(2)).count();
    let ones = t3.md.dims.iter().filter(|d| d.is_one()).count();
    ensure(twos == 14 && ones == 8, format!("{ones} invertible and {twos} two-dimensional labels"))?;
    timed(Duration::from_secs(30), "type-III double", start)?;
    for x in [tc, ds, d, t3] {
        corpus.push(x.md);
    }
    Ok("toric code, double semion, D(S3) (8 labels, D^2=36), type-III Z2^3 (22 labels: 8 invertible, 14 of dim 2)".into())
}

fn criterion5(corpus: &mut Vec<ModularData>) -> Outcome {
    let start = Instant::now();
    let cat: Vec<ModularExtension> = (0..16).map(sixteenfold).collect();
    for (nu, x) in cat.iter().enumerate() {
        ensure(verify_modular(&x.md).all_passed(), format!("nu={nu} fails verify"))?;
        ensure(minimality_check(x), format!("nu={nu} not minimal"))?;
        let c = central_charge(&x.md).map_err(e)?;
        ensure(c == CentralCharge::from_value(nu as i64, 2), format!("nu={nu} has c={c}"))?;
    }
    for i in 0..16 {
        for j in i + 1..16 {
            ensure(extension_equivalent(&cat[i], &cat[j]).map_err(e)?.is_none(), format!("nu={i} ~ nu={j}"))?;
        }
    }
    for (a, b, c) in [(1, 1, 2), (2, 2, 4), (8, 8, 0), (1, 15, 0), (3, 5, 8)] {
        let s = stack(&cat[a], &cat[b]).map_err(e)?;
        let hits: Vec<usize> = (0..16).filter(|&k| extension_equivalent(&cat[k], &s).ok().flatten().is_some()).collect();
        ensure(hits == vec![c], format!("{a} * {b} identified as {hits:?}"))?;
        corpus.push(s.md);
    }
    timed(Duration::from_secs(120), "sixteenfold suite", start)?;
    corpus.extend(cat.into_iter().map(|x| x.md));
    Ok("16 entries verified, minimal, pairwise inequivalent, c = nu/2; 5 stacking samples unique".into())
}

fn criterion6(corpus: &mut Vec<ModularData>) -> Outcome {
    let start = Instant::now();
    let z2 = FiniteGroup::cyclic(2);
    let h = cohomology_group(&z2, 3).map_err(e)?;
    let tc = twisted_double_abelian(&z2, &h.element(0).unwrap()).map_err(e)?;
    let ds = twisted_double_abelian(&z2, &h.element(1).unwrap()).map_err(e)?;
    let eq = |a: &ModularExtension, b: &ModularExtension| extension_equivalent(a, b).map(|p| p.is_some()).map_err(e);
    ensure(eq(&stack(&tc, &ds).map_err(e)?, &ds)?, "toric * DS")?;
    ensure(eq(&stack(&ds, &ds).map_err(e)?, &tc)?, "DS * DS")?;
    ensure(eq(&stack(&tc, &tc).map_err(e)?, &tc)?, "toric * toric")?;
    let mut pairs = 3;
    for n in [3u64, 4] {
        let g = FiniteGroup::cyclic(n);
        let h = cohomology_group(&g, 3).map_err(e)?;
        let exts: Vec<ModularExtension> = (0..h.order())
            .map(|i| twisted_double_abelian(&g, &h.element(i).unwrap()))
            .collect::<Result<_, _>>()
            .map_err(e)?;
        for i in 0..exts.len() {
            for j in 0..exts.len() {
                let s = stack(&exts[i], &exts[j]).map_err(e)?;
                let k = (i + j) % exts.len();
                ensure(eq(&s, &exts[k])?, format!("Z{n}: {i} * {j} is not {k}"))?;
                pairs += 1;
            }
            let inv = stack(&time_reversal(&exts[i]), &exts[i]).map_err(e)?;
            ensure(eq(&inv, &exts[0])?, format!("Z{n}: reverse({i}) * {i} nontrivial"))?;
        }
        corpus.extend(exts.into_iter().map(|x| x.md));
    }
    let inv = stack(&time_reversal(&ds), &ds).map_err(e)?;
    ensure(eq(&inv, &tc)?, "reverse(DS) * DS")?;
    for nu in [1, 2, 5, 8] {
        let x = sixteenfold(nu);
        let s = stack(&time_reversal(&x), &x).map_err(e)?;
        ensure(identify_sixteenfold(&s).map_err(e)? == Some(0), format!("reverse(nu={nu}) * nu={nu}"))?;
    }
    timed(Duration::from_secs(120), "bosonic stacking", start)?;
    corpus.push(tc.md);
    corpus.push(ds.md);
    Ok(format!("{pairs} products match H3 addition over Z2, Z3, Z4; inverses via time reversal trivial"))
}

fn criterion7(corpus: &[ModularData]) -> Outcome {
    let wanted = ["S-unitarity", "verlinde", "charge-conjugation", "gauss-sum", "muger-center"];
    for (i, md) in corpus.iter().enumerate() {
        let r = verify_modular(md);
        for c in &r.checks {
            if wanted.contains(&c.name) {
                ensure(c.passed, format!("corpus item {i} ({} labels) fails {}", md.rank(), c.name))?;
            }
        }
        let all: Vec<usize> = (0..md.rank()).collect();
        let trivial_center = muger_centralizer(md, &all) == vec![md.unit];
        let unitary = r.checks.iter().find(|c| c.name == "S-unitarity").unwrap().passed;
        ensure(trivial_center == unitary, format!("modularity and Muger center disagree on item {i}"))?;
    }
    // a degenerate datum: sVec itself
    let svec = ModularData::new(
        vec!["1".into(), "f".into()],
        vec![Cyc::one(), Cyc::one()],
        vec![Phase::ZERO, Phase::HALF],
        vec![vec![Cyc::one(), Cyc::one()], vec![Cyc::one(), Cyc::one()]],
        Cyc::sqrt_int(2),
        0,
    )
    .map_err(e)?;
    let r = verify_modular(&svec);
    let unitary = r.checks.iter().find(|c| c.name == "S-unitarity").unwrap().passed;
    ensure(!unitary && muger_centralizer(&svec, &[0, 1]).len() == 2, "sVec must be degenerate")?;
    for md in corpus.iter().take(4) {
        verlinde_fusion(md).map_err(e)?;
    }
    // equivalence search on relabelled data
    let mut worst = Duration::ZERO;
    let mut searched = 0;
    for md in corpus.iter().filter(|m| m.rank() <= 32) {
        let n = md.rank();
        let perm: Vec<usize> = (0..n).map(|i| if i == md.unit { i } else { (i * 7 + 3) % n }).collect();
        let perm = if is_perm(&perm) { perm } else { rotate(n, md.unit) };
        let shuffled = md.permuted(&perm);
        let start = Instant::now();
        ensure(equivalent(md, &shuffled).map_err(e)?.is_some(), format!("relabelled {n}-label data not recognised"))?;
        worst = worst.max(start.elapsed());
        searched += 1;
    }
    let big = modext::modular::deligne_product(&corpus[2], &sixteenfold(0).md);
    let start = Instant::now();
    ensure(equivalent(&big, &big.permuted(&rotate(big.rank(), big.unit))).map_err(e)?.is_some(), "32-label search")?;
    worst = worst.max(start.elapsed());
    ensure(worst <= Duration::from_secs(10), format!("slowest equivalence search {worst:?}"))?;
    Ok(format!("{} data sets pass; {} equivalence searches (up to 32 labels), slowest {:?}", corpus.len(), searched + 1, worst))
}

fn is_perm(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

/// Cyclic shift of every label except the unit.
fn rotate(n: usize, unit: usize) -> Vec<usize> {
    let others: Vec<usize> = (0..n).filter(|&i| i != unit).collect();
    let mut p: Vec<usize> = (0..n).collect();
    for (k, &i) in others.iter().enumerate() {
        p[i] = others[(k + 1) % others.len()];
    }
    p
}

fn criterion8() -> Outcome {
    let r3 = classify(&FiniteGroup::cyclic(2), None, 3).map_err(e)?;
    ensure(!r3.is_supported(), "dimension 3 must be unsupported")?;
    let f = classify(&FiniteGroup::cyclic(4), Some(2), 2).map_err(e)?;
    ensure(!f.is_supported(), "Rep(Z4, z) extensions must be unsupported")?;
    let s3 = drinfeld_double(&FiniteGroup::symmetric(3)).map_err(e)?;
    ensure(matches!(stack(&s3, &s3), Err(modext::Error::Unsupported(_))), "nonabelian stacking must be unsupported")?;
    Ok("n >= 3, Rep(G,z) with G != Z2 and nonabelian stacking report \"unsupported\"; group-law claims rest on criteria 5-6".into())
}

fn main() {
    let mut corpus = Vec::new();
    let mut results: Vec<(usize, Outcome, Duration)> = Vec::new();
    let mut run = |n: usize, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let r = std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        results.push((n, r, start.elapsed()));
    };
    run(1, &mut criterion1);
    run(2, &mut criterion2);
    run(3, &mut criterion3);
    run(4, &mut || criterion4(&mut corpus));
    run(5, &mut || criterion5(&mut corpus));
    run(6, &mut || criterion6(&mut corpus));
    run(7, &mut || criterion7(&corpus));
    run(8, &mut criterion8);
    let mut failed = 0;
    for (n, r, t) in &results {
        match r {
            Ok(msg) => println!("criterion {n}: PASS ({:.2?}) {msg}", t),
            Err(msg) => {
                failed += 1;
                println!("criterion {n}: FAIL ({:.2?}) {msg}", t)
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
