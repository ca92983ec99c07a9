use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use modext::classify::classify;
use modext::cohomology::{cohomology_group, describe_invariants, is_cocycle, Cochain};
use modext::extensions::{
    condense_invertible, drinfeld_double, identify_sixteenfold, sixteenfold, stack, twisted_double_abelian, verify_extension,
};
use modext::groups::{abelian_invariants, FermionicSymmetry, FiniteGroup};
use modext::json::{self as mj, Document};
use modext::modular::{central_charge, verify_modular, ModularExtension};
use modext::{Error, Result};

#[derive(Parser)]
#[command(name = "modext", version, about = "Exact modular data, group cohomology and minimal modular extensions")]
struct Cli {
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Also write a markdown report to this path.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a group file.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// H^n(G, U(1)) with representative cocycles.
    Cohomology {
        group: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    /// (Twisted) Drinfeld double of a group.
    Double {
        group: PathBuf,
        /// Index into the enumeration of H^3 elements (0 = untwisted).
        #[arg(long, conflicts_with = "cocycle")]
        omega: Option<u64>,
        /// Explicit 3-cocycle file.
        #[arg(long)]
        cocycle: Option<PathBuf>,
    },
    /// The ν-th minimal modular extension of sVec.
    Sixteenfold {
        #[arg(long, allow_negative_numbers = true)]
        nu: i64,
    },
    /// Condense a group of invertible bosons.
    Condense {
        data: PathBuf,
        /// Comma-separated boson labels.
        #[arg(long, value_delimiter = ',')]
        bosons: Vec<String>,
    },
    /// Stacking product of two extensions of the same symmetry.
    Stack { a: PathBuf, b: PathBuf },
    /// Classification table entry for a symmetry.
    Classify {
        group: PathBuf,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Use the "z" of the group file as fermion parity.
        #[arg(long)]
        fermionic: bool,
        /// Fermion parity element (implies --fermionic).
        #[arg(long)]
        z: Option<usize>,
    },
    /// Check modular data or an extension.
    Verify { file: PathBuf },
    /// List the shipped catalog, or write it to a directory.
    Catalog {
        #[arg(long)]
        write: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GroupAction {
    Info { group: PathBuf },
}

struct Output {
    json: Value,
    markdown: String,
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    mj::parse(&text)
}

fn read_group(path: &Path) -> Result<(FiniteGroup, Option<usize>)> {
    mj::group_from_json(&read_json(path)?)
}

fn read_extension(path: &Path) -> Result<ModularExtension> {
    mj::extension_from_json(&read_json(path)?)
}

fn group_info(g: &FiniteGroup, z: Option<usize>) -> Result<Output> {
    let classes = g.conjugacy_classes();
    let class_json: Vec<Value> = (0..classes.len())
        .map(|c| json!({"representative": classes.representative(c), "size": classes.size(c)}))
        .collect();
    let mut v = json!({
        "group": mj::group_to_json(g, z),
        "order": g.order(),
        "exponent": g.exponent(),
        "abelian": g.is_abelian(),
        "classes": class_json,
        "center": g.center(),
    });
    let mut md = format!("# Group {}\n\n- order {}\n- exponent {}\n- {} conjugacy classes\n", g.name(), g.order(), g.exponent(), classes.len());
    if g.is_abelian() {
        let inv = abelian_invariants(g)?.invariants;
        md += &format!("- abelian, invariant factors {}\n", describe_invariants(&inv));
        v["invariants"] = json!(inv);
    }
    if let Some(z) = z {
        let sym = FermionicSymmetry::new(g.clone(), z)?;
        let split = sym.detect_split()?;
        v["split"] = json!(split.as_ref().map(|s| s.elements.clone()));
        md += &format!(
            "- fermion parity z = {z}: {}\n",
            match &split {
                Some(s) => format!("splits, G_b of order {}", s.order()),
                None => "does not split".into(),
            }
        );
    }
    Ok(Output { json: v, markdown: md })
}

fn extension_output(ext: &ModularExtension, title: &str) -> Result<Output> {
    let c = central_charge(&ext.md)?;
    let report = verify_extension(ext);
    let mut md = report.to_markdown(title);
    md += &format!("\nRank {}, central charge {}\n", ext.md.rank(), c);
    Ok(Output {
        json: mj::extension_to_json(ext),
        markdown: md,
    })
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Group {
            action: GroupAction::Info { group },
        } => {
            let (g, z) = read_group(group)?;
            group_info(&g, z)
        }
        Command::Cohomology { group, degree } => {
            let (g, _) = read_group(group)?;
            if !(1..=4).contains(degree) {
                return Err(Error::Invalid("degree must be between 1 and 4".into()));
            }
            let h = cohomology_group(&g, *degree)?;
            Ok(Output {
                json: mj::cohomology_to_json(&h),
                markdown: format!(
                    "# H^{}({}, U(1))\n\n{} (order {})\n",
                    degree,
                    g.name(),
                    describe_invariants(&h.invariants),
                    h.order()
                ),
            })
        }
        Command::Double { group, omega, cocycle } => {
            let (g, _) = read_group(group)?;
            let w: Option<Cochain> = match (omega, cocycle) {
                (_, Some(path)) => {
                    let c = mj::cochain_from_json(&read_json(path)?, g.order())?;
                    if c.degree() != 3 {
                        return Err(Error::Invalid("--cocycle must be a 3-cochain".into()));
                    }
                    if !is_cocycle(&g, &c) {
                        return Err(Error::NotCocycle);
                    }
                    Some(c)
                }
                (Some(0) | None, None) => None,
                (Some(idx), None) => {
                    let h = cohomology_group(&g, 3)?;
                    Some(h.element(*idx).ok_or_else(|| {
                        Error::Invalid(format!("--omega {idx} is out of range, |H^3| = {}", h.order()))
                    })?)
                }
            };
            let ext = match w {
                Some(w) if g.is_abelian() => twisted_double_abelian(&g, &w)?,
                Some(w) if w.is_zero() => drinfeld_double(&g)?,
                Some(_) => return Err(Error::Unsupported("twisted doubles of nonabelian groups".into())),
                None => drinfeld_double(&g)?,
            };
            extension_output(&ext, &format!("Double of {}", g.name()))
        }
        Command::Sixteenfold { nu } => extension_output(&sixteenfold(*nu), &format!("Sixteenfold entry nu = {}", nu.rem_euclid(16))),
        Command::Condense { data, bosons } => {
            let doc = mj::document_from_json(&read_json(data)?)?;
            let md = match doc {
                Document::Data(md) => md,
                Document::Extension(e) => e.md,
            };
            let idx = bosons
                .iter()
                .map(|b| md.label_index(b.trim()).ok_or_else(|| Error::Invalid(format!("unknown label {b}"))))
                .collect::<Result<Vec<_>>>()?;
            let cands = condense_invertible(&md, &idx)?;
            let mut text = format!("# Condensation of {} boson(s)\n\n{} candidate(s)\n", idx.len(), cands.len());
            for (i, c) in cands.iter().enumerate() {
                text += &format!("\n## Candidate {i}\n\n{}", verify_modular(&c.md).to_markdown("checks"));
            }
            Ok(Output {
                json: json!({"candidates": cands.iter().map(|c| mj::modular_data_to_json(&c.md)).collect::<Vec<_>>()}),
                markdown: text,
            })
        }
        Command::Stack { a, b } => {
            let (a, b) = (read_extension(a)?, read_extension(b)?);
            let st = stack(&a, &b)?;
            let mut out = extension_output(&st, "Stacking product")?;
            if st.symmetry.is_fermionic() {
                if let Ok(Some(nu)) = identify_sixteenfold(&st) {
                    out.markdown += &format!("\nIdentified as sixteenfold entry nu = {nu}\n");
                }
            }
            Ok(out)
        }
        Command::Classify { group, dim, fermionic, z } => {
            let (g, fz) = read_group(group)?;
            let z = match (z, fermionic) {
                (Some(z), _) => Some(*z),
                (None, true) => Some(fz.ok_or_else(|| Error::Invalid("--fermionic needs \"z\" in the group file or --z".into()))?),
                (None, false) => None,
            };
            let r = classify(&g, z, *dim)?;
            Ok(Output {
                json: r.to_json(),
                markdown: r.to_markdown(),
            })
        }
        Command::Verify { file } => {
            let doc = mj::document_from_json(&read_json(file)?)?;
            let (report, title) = match &doc {
                Document::Data(md) => (verify_modular(md), "Modular data"),
                Document::Extension(e) => (verify_extension(e), "Modular extension"),
            };
            let markdown = report.to_markdown(title);
            let mut v = serde_json::to_value(&report)?;
            v["passed"] = json!(report.all_passed());
            Ok(Output { json: v, markdown })
        }
        Command::Catalog { write } => {
            let entries = modext::catalog::entries()?;
            if let Some(dir) = write {
                modext::catalog::write_all(dir)?;
            }
            let files: Vec<&str> = entries.iter().map(|(p, _)| p.as_str()).collect();
            let mut markdown = format!("# Catalog v{}\n\n", modext::catalog::VERSION);
            for f in &files {
                markdown += &format!("- {f}\n");
            }
            Ok(Output {
                json: json!({"version": modext::catalog::VERSION, "files": files}),
                markdown,
            })
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| {
        let text = mj::to_canonical_string(&out.json);
        match &cli.output {
            Some(p) => write_file(p, &text)?,
            None => print!("{text}"),
        }
        if let Some(p) = &cli.report {
            write_file(p, &out.markdown)?;
        }
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
