//! Classification tables of SPT/SET orders by spatial dimension.

use serde_json::{json, Value};

use crate::cohomology::{cohomology_group, describe_invariants, Cochain};
use crate::error::{check_cap, Result};
use crate::extensions::{drinfeld_double, sixteenfold, twisted_double_abelian};
use crate::groups::{abelian_invariants, FermionicSymmetry, FiniteGroup};
use crate::json::{cochain_to_json, group_to_json, phase_to_json};
use crate::limits;
use crate::modular::{central_charge, extension_equivalent, ModularExtension};
use crate::reps::one_dim_characters;
use crate::snf::factorize;

/// Enumerate every class when the classifying group is at most this large.
pub const ENUMERATION_LIMIT: u64 = 16;

#[derive(Clone, Debug)]
pub struct Realization {
    pub name: String,
    /// Coordinates in the invariant factors of the result group.
    pub coefficients: Vec<u64>,
    pub cocycle: Option<Cochain>,
    pub extension: Option<ModularExtension>,
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub group: FiniteGroup,
    pub z: Option<usize>,
    pub dimension: usize,
    pub fermionic: bool,
    /// None when the case is not computed.
    pub invariants: Option<Vec<u64>>,
    pub branch: &'static str,
    pub realizations: Vec<Realization>,
    /// Whether `realizations` lists every element of the result group.
    pub enumerated: bool,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    pub fn order(&self) -> Option<u64> {
        self.invariants.as_ref().map(|v| v.iter().product())
    }

    pub fn is_supported(&self) -> bool {
        self.invariants.is_some()
    }

    pub fn to_json(&self) -> Value {
        let realizations: Vec<Value> = self
            .realizations
            .iter()
            .map(|r| {
                let mut v = json!({"name": r.name, "coefficients": r.coefficients});
                if let Some(c) = &r.cocycle {
                    v["cocycle"] = cochain_to_json(c);
                }
                if let Some(e) = &r.extension {
                    v["rank"] = json!(e.md.rank());
                    if let Ok(c) = central_charge(&e.md) {
                        v["central_charge"] = phase_to_json(c.0.times(8));
                    }
                }
                v
            })
            .collect();
        json!({
            "group": group_to_json(&self.group, self.z),
            "dimension": self.dimension,
            "fermionic": self.fermionic,
            "supported": self.is_supported(),
            "invariants": self.invariants,
            "order": self.order(),
            "branch": self.branch,
            "enumerated": self.enumerated,
            "realizations": realizations,
            "notes": self.notes,
        })
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!(
            "# Classification: {} ({}), {}d, {}\n\n",
            self.group.name(),
            self.group.order(),
            self.dimension,
            if self.fermionic { "fermionic" } else { "bosonic" }
        );
        match &self.invariants {
            Some(inv) => s += &format!("Result group: **{}** (order {})\n\n", describe_invariants(inv), self.order().unwrap()),
            None => s += "Result group: **not computed**\n\n",
        }
        s += &format!("Branch: `{}`\n\n", self.branch);
        if !self.realizations.is_empty() {
            s += "| realization | coefficients | detail |\n|---|---|---|\n";
            for r in &self.realizations {
                let detail = match &r.extension {
                    Some(e) => format!(
                        "{} labels, c = {}",
                        e.md.rank(),
                        central_charge(&e.md).map(|c| c.to_string()).unwrap_or_else(|_| "?".into())
                    ),
                    None => r.cocycle.as_ref().map(|c| format!("cocycle, {} nonzero values", c.entries().len())).unwrap_or_default(),
                };
                s += &format!("| {} | {:?} | {} |\n", r.name, r.coefficients, detail);
            }
            s += "\n";
        }
        for n in &self.notes {
            s += &format!("- {n}\n");
        }
        s
    }
}

/// Rewrites a list of cyclic orders as invariant factors d1 | d2 | …
pub fn normalize_invariants(orders: &[u64]) -> Vec<u64> {
    let mut by_prime: std::collections::BTreeMap<u64, Vec<u64>> = Default::default();
    for &n in orders {
        for (p, e) in factorize(n) {
            by_prime.entry(p).or_default().push(p.pow(e));
        }
    }
    let len = by_prime.values().map(|v| v.len()).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for v in by_prime.values_mut() {
        v.sort_unstable_by(|a, b| b.cmp(a));
        for (i, q) in v.iter().enumerate() {
            out[len - 1 - i] *= q;
        }
    }
    out
}

fn coefficient_list(inv: &[u64], limit: u64) -> (Vec<Vec<u64>>, bool) {
    let order: u64 = inv.iter().product();
    if order <= limit {
        let all = (0..order)
            .map(|mut idx| {
                let mut c = vec![0u64; inv.len()];
                for i in (0..inv.len()).rev() {
                    c[i] = idx % inv[i];
                    idx /= inv[i];
                }
                c
            })
            .collect();
        (all, true)
    } else {
        let mut gens = vec![vec![0u64; inv.len()]];
        for i in 0..inv.len() {
            let mut c = vec![0u64; inv.len()];
            c[i] = 1;
            gens.push(c);
        }
        (gens, false)
    }
}

fn unsupported(group: &FiniteGroup, z: Option<usize>, dimension: usize, fermionic: bool, why: String) -> ClassificationReport {
    ClassificationReport {
        group: group.clone(),
        z,
        dimension,
        fermionic,
        invariants: None,
        branch: "unsupported",
        realizations: Vec::new(),
        enumerated: false,
        notes: vec![format!("unsupported: {why}")],
    }
}

/// Classifies anomaly-free orders with symmetry G (and fermion parity z
/// when `z` is given) in spatial dimension 0, 1 or 2.
pub fn classify(group: &FiniteGroup, z: Option<usize>, dimension: usize) -> Result<ClassificationReport> {
    check_cap("group order", group.order(), limits::order_cap(limits::CHARACTER_TABLE))?;
    let fermionic = z.is_some();
    let sym = match z {
        Some(z) => Some(FermionicSymmetry::new(group.clone(), z)?),
        None => None,
    };
    let mut report = ClassificationReport {
        group: group.clone(),
        z,
        dimension,
        fermionic,
        invariants: None,
        branch: "",
        realizations: Vec::new(),
        enumerated: false,
        notes: Vec::new(),
    };
    match dimension {
        0 => {
            report.branch = "dim0-characters";
            let chars = one_dim_characters(group)?;
            let comm = group.commutator_subgroup();
            let (ab, _) = group.quotient(&comm)?;
            let inv = abelian_invariants(&ab)?.invariants;
            let h1 = cohomology_group(group, 1)?;
            report.notes.push("0d orders are classified by H^1(G, U(1)), the group of one-dimensional characters".into());
            if h1.invariants != inv || chars.len() as u64 != inv.iter().product::<u64>() {
                return Err(crate::Error::Verification("character count disagrees with H^1".into()));
            }
            report.notes.push(format!("|G/[G,G]| = {} one-dimensional characters", chars.len()));
            let (coeffs, full) = coefficient_list(&inv, u64::MAX);
            report.enumerated = full;
            for c in coeffs {
                let co = h1.combination(&c);
                report.realizations.push(Realization {
                    name: format!("character {:?}", c),
                    coefficients: c,
                    cocycle: Some(co),
                    extension: None,
                });
            }
            report.invariants = Some(inv);
        }
        1 => {
            let h2 = cohomology_group(group, 2)?;
            let mut inv = h2.invariants.clone();
            let mut split = false;
            match &sym {
                None => {
                    report.branch = "dim1-bosonic";
                    report.notes.push("1d orders over Rep(G) are classified by Pic(Rep(G)) = H^2(G, U(1))".into());
                }
                Some(s) => match s.detect_split()? {
                    Some(gb) => {
                        report.branch = "dim1-fermionic-split";
                        split = true;
                        report.notes.push(format!(
                            "G = G_b x <z> with |G_b| = {}: classified by H^2(G, U(1)) x Z2 (the extra Z2 is the Kitaev chain)",
                            gb.order()
                        ));
                        inv.push(2);
                    }
                    None => {
                        report.branch = "dim1-fermionic-nonsplit";
                        report.notes.push("z does not split off as a direct factor: classified by H^2(G, U(1))".into());
                    }
                },
            }
            report.notes.push("every anomaly-free 1d SET order is an SPT order".into());
            let ordered = if split { inv.clone() } else { h2.invariants.clone() };
            let (coeffs, full) = coefficient_list(&ordered, 64);
            report.enumerated = full;
            for c in coeffs {
                let (cocycle_part, kitaev) = if split { (&c[..c.len() - 1], c[c.len() - 1]) } else { (&c[..], 0) };
                let co = h2.combination(cocycle_part);
                let name = if split {
                    format!("class {:?}{}", cocycle_part, if kitaev == 1 { " + Kitaev chain" } else { "" })
                } else {
                    format!("class {:?}", c)
                };
                report.realizations.push(Realization {
                    name,
                    coefficients: c,
                    cocycle: Some(co),
                    extension: None,
                });
            }
            report.invariants = Some(normalize_invariants(&inv));
            if split {
                report.notes.push("realization coefficients are listed as (H^2 coordinates, Kitaev bit)".into());
            }
        }
        2 => match &sym {
            None => {
                let h3 = cohomology_group(group, 3)?;
                report.notes.push("2d orders over Rep(G) are minimal modular extensions, classified by H^3(G, U(1))".into());
                if group.is_abelian() {
                    report.branch = "dim2-bosonic-abelian";
                    let (coeffs, full) = coefficient_list(&h3.invariants, ENUMERATION_LIMIT);
                    report.enumerated = full;
                    for c in coeffs {
                        let omega = h3.combination(&c);
                        let ext = twisted_double_abelian(group, &omega)?;
                        report.realizations.push(Realization {
                            name: format!("twisted double {:?}", c),
                            coefficients: c,
                            cocycle: Some(omega),
                            extension: Some(ext),
                        });
                    }
                    if full {
                        let n = report.realizations.len();
                        for i in 0..n {
                            for j in i + 1..n {
                                let (a, b) = (&report.realizations[i], &report.realizations[j]);
                                if extension_equivalent(a.extension.as_ref().unwrap(), b.extension.as_ref().unwrap())?.is_some() {
                                    return Err(crate::Error::Verification(format!(
                                        "realizations {} and {} are equivalent",
                                        a.name, b.name
                                    )));
                                }
                            }
                        }
                        report.notes.push(format!("all {n} twisted doubles are pairwise inequivalent"));
                    } else {
                        report.notes.push("realizations listed for the trivial class and each generator only".into());
                    }
                } else {
                    report.branch = "dim2-bosonic-nonabelian";
                    let ext = drinfeld_double(group)?;
                    report.realizations.push(Realization {
                        name: "untwisted double".into(),
                        coefficients: vec![0; h3.invariants.len()],
                        cocycle: Some(Cochain::zero(group.order(), 3)),
                        extension: Some(ext),
                    });
                    for (i, rep) in h3.representatives.iter().enumerate() {
                        let mut c = vec![0u64; h3.invariants.len()];
                        c[i] = 1;
                        report.realizations.push(Realization {
                            name: format!("generator {i} (cohomology only)"),
                            coefficients: c,
                            cocycle: Some(rep.clone()),
                            extension: None,
                        });
                    }
                    report.notes.push("twisted doubles of nonabelian groups are not constructed; generators listed as cocycles".into());
                }
                report.invariants = Some(h3.invariants);
            }
            Some(_) if group.order() == 2 => {
                report.branch = "dim2-fermionic-sixteenfold";
                report.notes.push("minimal modular extensions of sVec form Z16 (the sixteenfold way), c = nu/2 mod 8".into());
                for nu in 0..16 {
                    report.realizations.push(Realization {
                        name: format!("sixteenfold nu={nu}"),
                        coefficients: vec![nu as u64],
                        cocycle: None,
                        extension: Some(sixteenfold(nu)),
                    });
                }
                report.enumerated = true;
                report.invariants = Some(vec![16]);
            }
            Some(_) => {
                return Ok(unsupported(
                    group,
                    z,
                    dimension,
                    fermionic,
                    "minimal modular extensions of Rep(G, z) are computed only for G = Z2".into(),
                ))
            }
        },
        _ => {
            return Ok(unsupported(
                group,
                z,
                dimension,
                fermionic,
                "classifications in spatial dimension 3 and higher need fusion 2-categories and are not computed".into(),
            ))
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizing() {
        assert_eq!(normalize_invariants(&[2, 2]), vec![2, 2]);
        assert_eq!(normalize_invariants(&[2, 3]), vec![6]);
        assert_eq!(normalize_invariants(&[4, 2, 3]), vec![2, 12]);
        assert!(normalize_invariants(&[]).is_empty());
    }

    #[test]
    fn branches() {
        let z2 = FiniteGroup::cyclic(2);
        let r = classify(&z2, None, 2).unwrap();
        assert_eq!(r.invariants, Some(vec![2]));
        assert_eq!(r.realizations.len(), 2);
        let f = classify(&FiniteGroup::cyclic(4), Some(2), 1).unwrap();
        assert_eq!(f.branch, "dim1-fermionic-nonsplit");
        assert_eq!(f.order(), Some(1));
        let v = classify(&FiniteGroup::abelian(&[2, 2]), Some(1), 1).unwrap();
        assert_eq!(v.invariants, Some(vec![2, 2]));
        let u = classify(&FiniteGroup::cyclic(4), Some(2), 2).unwrap();
        assert!(!u.is_supported());
    }
}
