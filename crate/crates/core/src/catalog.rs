//! The shipped data files: sample groups, standard doubles and the
//! sixteen extensions of sVec. `entries()` regenerates every file; a test
//! compares the result byte for byte with `data/`.

use serde_json::Value;

use crate::cohomology::cohomology_group;
use crate::error::Result;
use crate::extensions::{drinfeld_double, sixteenfold, twisted_double_abelian};
use crate::groups::FiniteGroup;
use crate::json::{extension_to_json, group_to_json, to_canonical_string};

pub const VERSION: u32 = 1;

/// Unique central involution, used as the fermion parity of Q8.
fn central_involution(g: &FiniteGroup) -> Option<usize> {
    let c: Vec<usize> = g.center().into_iter().filter(|&x| x != 0 && g.mul(x, x) == 0).collect();
    (c.len() == 1).then(|| c[0])
}

pub fn groups() -> Vec<(&'static str, FiniteGroup, Option<usize>)> {
    let q8 = FiniteGroup::quaternion();
    let minus_one = central_involution(&q8);
    vec![
        ("z2", FiniteGroup::cyclic(2), None),
        ("z3", FiniteGroup::cyclic(3), None),
        ("z4", FiniteGroup::cyclic(4), None),
        ("z2xz2", FiniteGroup::abelian(&[2, 2]), None),
        ("z2xz2xz2", FiniteGroup::abelian(&[2, 2, 2]), None),
        ("s3", FiniteGroup::symmetric(3), None),
        ("d4", FiniteGroup::dihedral(4), None),
        ("q8", q8.clone(), None),
        ("z2f", FiniteGroup::cyclic(2), Some(1)),
        ("z4f", FiniteGroup::cyclic(4), Some(2)),
        ("z2xz2f", FiniteGroup::abelian(&[2, 2]), Some(1)),
        ("q8f", q8, minus_one),
    ]
}

/// (relative path, file contents) for every shipped file.
pub fn entries() -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (name, g, z) in groups() {
        out.push((format!("groups/{name}.json"), to_canonical_string(&group_to_json(&g, z))));
    }
    let z2 = FiniteGroup::cyclic(2);
    let h3 = cohomology_group(&z2, 3)?;
    let ds = twisted_double_abelian(&z2, &h3.representatives[0])?;
    out.push(("extensions/toric_code.json".into(), to_canonical_string(&extension_to_json(&drinfeld_double(&z2)?))));
    out.push(("extensions/double_semion.json".into(), to_canonical_string(&extension_to_json(&ds))));
    out.push((
        "extensions/double_s3.json".into(),
        to_canonical_string(&extension_to_json(&drinfeld_double(&FiniteGroup::symmetric(3))?)),
    ));
    for nu in 0..16 {
        out.push((format!("sixteenfold/nu_{nu:02}.json"), to_canonical_string(&extension_to_json(&sixteenfold(nu)))));
    }
    let index: Vec<Value> = out.iter().map(|(p, _)| Value::String(p.clone())).collect();
    out.push((
        "index.json".into(),
        to_canonical_string(&serde_json::json!({"version": VERSION, "files": index})),
    ));
    Ok(out)
}

/// Directory of the shipped files inside the source tree.
pub fn data_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

/// Writes every file below `dir`.
pub fn write_all(dir: &std::path::Path) -> Result<Vec<String>> {
    let mut written = Vec::new();
    for (rel, text) in entries()? {
        let path = dir.join(&rel);
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent).map_err(|e| crate::Error::invalid(format!("{}: {e}", parent.display())))?;
        }
        std::fs::write(&path, text).map_err(|e| crate::Error::invalid(format!("{}: {e}", path.display())))?;
        written.push(rel);
    }
    Ok(written)
}
