use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use quiverfold::cartan::FoldData;
use quiverfold::enumerate::{
    ii_classes, species_count, verify_kac, verify_main_theorem, verify_species_theorem, Catalog, CatalogCache,
    ClassEntry, EnumConfig, IiSummary, SpeciesSetup,
};
use quiverfold::field::{FieldSpec, FiniteField};
use quiverfold::io::{classify_report, fixture_files, parse_vector, roots_report, to_json, FoldReport, Input};
use quiverfold::quiver::{act, QuiverFile};
use quiverfold::rep::SearchConfig;
use quiverfold::roots::{RootKind, DEFAULT_ROOT_CAP};
use quiverfold::skew::{skew, unfold, Provenance};
use quiverfold::{Error, Result};

mod render;

#[derive(Parser)]
#[command(name = "quiverfold", version, about = "Fold quivers with automorphisms and count their representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args, Clone)]
struct RunArgs {
    /// Finite field `p` or `p^m`.
    #[arg(long, global = true, default_value = "2")]
    field: FieldSpec,
    /// Height bound for root and dimension vector sweeps.
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(i64).range(1..))]
    max_height: i64,
    /// Dimension vector, comma separated.
    #[arg(long, global = true)]
    dim: Option<String>,
    /// Lattice vector, comma separated.
    #[arg(long, global = true)]
    vector: Option<String>,
    /// Work in the folded lattice of a quiver file.
    #[arg(long, global = true)]
    folded: bool,
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Largest number of slice states a catalog may hold.
    #[arg(long, global = true, default_value_t = quiverfold::enumerate::DEFAULT_STATE_CAP,
          value_parser = clap::value_parser!(u64).range(1..))]
    cap_states: u64,
    /// Largest endomorphism or Hom space searched exhaustively.
    #[arg(long, global = true, default_value_t = 1 << 20, value_parser = clap::value_parser!(u64).range(1..))]
    cap_end: u64,
    /// Seed for randomised searches.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Fold a quiver with its automorphism into a valued quiver.
    Fold { file: PathBuf },
    /// Unfold a valued quiver into a quiver with an automorphism.
    Unfold { file: PathBuf },
    /// Build the skew quiver of a quiver with its automorphism.
    Skew { file: PathBuf },
    /// Positive roots up to `--max-height`.
    Roots { file: PathBuf },
    /// Classify `--vector` as a real root, an imaginary root or neither.
    Classify { file: PathBuf },
    /// Indecomposable classes of dimension `--dim` over `--field`.
    Indecs { file: PathBuf },
    /// Representations isomorphic to their twist that do not split as two such, of dimension `--dim`.
    IiIndecs { file: PathBuf },
    /// Number of indecomposable species representations of dimension `--vector`.
    SpeciesCount { file: PathBuf },
    /// Check a theorem at every dimension vector up to `--max-height`.
    Verify {
        which: Theorem,
        file: PathBuf,
    },
    /// Write the example quivers as JSON files.
    Fixtures {
        #[arg(long, default_value = "fixtures")]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    Kac,
    Main,
    Species,
}

/// What a command printed and whether its check passed.
struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

impl RunArgs {
    fn enum_config(&self) -> EnumConfig {
        EnumConfig {
            cap_states: self.cap_states,
            search: SearchConfig {
                end_cap: self.cap_end,
                hom_cap: self.cap_end,
                seed: self.seed,
                ..SearchConfig::default()
            },
        }
    }

    fn field(&self) -> Result<Arc<FiniteField>> {
        Ok(Arc::new(FiniteField::from_spec(self.field)?))
    }

    fn vector(&self) -> Result<Vec<i64>> {
        let v = self.vector.as_deref().ok_or_else(|| Error::BadParameter("--vector is required".into()))?;
        parse_vector(v)
    }

    fn dims(&self) -> Result<Vec<usize>> {
        let d = self.dim.as_deref().ok_or_else(|| Error::BadParameter("--dim is required".into()))?;
        parse_vector(d)?
            .into_iter()
            .map(|x| usize::try_from(x).map_err(|_| Error::BadParameter(format!("negative dimension in `{d}`"))))
            .collect()
    }

    fn emit<T: Serialize>(&self, value: &T, human: impl FnOnce(&T) -> String) -> String {
        if self.json {
            to_json(value)
        } else {
            human(value)
        }
    }
}

fn read(path: &Path) -> Result<Input> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Input::parse(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

#[derive(Serialize)]
struct SkewOutput {
    quiver: QuiverFile,
    base_orbit: Vec<usize>,
    provenance: Vec<Provenance>,
}

#[derive(Serialize)]
struct IndecsOutput {
    dims: Vec<usize>,
    field: String,
    class_count: usize,
    indecomposables: Vec<ClassEntry>,
}

#[derive(Serialize)]
struct IiOutput {
    dims: Vec<usize>,
    field: String,
    folded: Vec<i64>,
    root: Option<RootKind>,
    classes: Vec<IiSummary>,
}

#[derive(Serialize)]
struct SpeciesOutput {
    alpha: Vec<i64>,
    q: u64,
    root: Option<RootKind>,
    count: usize,
}

fn run(cli: &Cli) -> Result<Outcome> {
    let args = &cli.run;
    match &cli.command {
        Command::Fold { file } => {
            let input = read(file)?;
            let (q, a) = input.quiver()?;
            let report = FoldReport::new(&FoldData::new(q, a));
            Ok(Outcome::ok(args.emit(&report, render::fold)))
        }
        Command::Unfold { file } => {
            let (q, a) = unfold(read(file)?.valued()?)?;
            let out = QuiverFile::from_pair(&q, &a);
            Ok(Outcome::ok(args.emit(&out, |f| render::quiver_file(f, a.order()))))
        }
        Command::Skew { file } => {
            let input = read(file)?;
            let (q, a) = input.quiver()?;
            let s = skew(q, a)?;
            let out = SkewOutput {
                quiver: QuiverFile::from_pair(&s.quiver, &s.automorphism),
                base_orbit: s.base_orbit.clone(),
                provenance: s.provenance.clone(),
            };
            Ok(Outcome::ok(
                args.emit(&out, |o| render::quiver_file(&o.quiver, s.automorphism.order())),
            ))
        }
        Command::Roots { file } => {
            let lat = read(file)?.lattice(args.folded);
            let report = roots_report(&lat, args.max_height, DEFAULT_ROOT_CAP)?;
            Ok(Outcome::ok(args.emit(&report, render::roots)))
        }
        Command::Classify { file } => {
            let lat = read(file)?.lattice(args.folded);
            let report = classify_report(&lat, &args.vector()?)?;
            Ok(Outcome::ok(args.emit(&report, render::classify)))
        }
        Command::Indecs { file } => {
            let input = read(file)?;
            let (q, _) = input.quiver()?;
            let catalog = Catalog::build(q, args.field()?, &args.dims()?, &args.enum_config())?;
            let file = catalog.to_file();
            let out = IndecsOutput {
                dims: file.dims,
                field: file.field,
                class_count: file.class_count,
                indecomposables: file.classes.into_iter().filter(|c| c.indecomposable).collect(),
            };
            Ok(Outcome::ok(args.emit(&out, |o| {
                render::indecs(&o.dims, &o.field, o.class_count, &o.indecomposables)
            })))
        }
        Command::IiIndecs { file } => {
            let input = read(file)?;
            let (q, a) = input.quiver()?;
            let dims = args.dims()?;
            let field = args.field()?;
            let fold = FoldData::new(q, a);
            let di: Vec<i64> = dims.iter().map(|&x| x as i64).collect();
            if act(a, &di) != di {
                return Err(Error::NotFixed(di));
            }
            let folded = fold.f_map(a, &di)?;
            let root = quiverfold::roots::RootLattice::from_fold(&fold)
                .classify(&folded)
                .ok()
                .and_then(|c| c.kind());
            let mut cache = CatalogCache::new(q, field.clone(), args.enum_config());
            let classes = ii_classes(&mut cache, a, &dims)?;
            let out = IiOutput {
                dims,
                field: field.spec().to_string(),
                folded,
                root,
                classes: classes.iter().map(IiSummary::from).collect(),
            };
            Ok(Outcome::ok(args.emit(&out, |o| {
                render::ii(&o.dims, &o.folded, o.root, &o.classes)
            })))
        }
        Command::SpeciesCount { file } => {
            let vq = read(file)?.valued()?.clone();
            let alpha = args.vector()?;
            let setup = SpeciesSetup::new(&vq, args.field)?;
            let mut cache = CatalogCache::new(&setup.quiver, setup.big_field.clone(), args.enum_config());
            let count = species_count(&setup, &mut cache, &alpha)?;
            let root = quiverfold::roots::RootLattice::from_valued(&vq)
                .classify(&alpha)
                .ok()
                .and_then(|c| c.kind());
            let out = SpeciesOutput {
                alpha,
                q: args.field.size(),
                root,
                count,
            };
            Ok(Outcome::ok(args.emit(&out, |o| {
                format!("I({:?}, {}) = {} ({})\n", o.alpha, o.q, o.count, render::kind(o.root))
            })))
        }
        Command::Verify { which, file } => {
            let input = read(file)?;
            let cfg = args.enum_config();
            let h = args.max_height;
            let (text, passed) = match which {
                Theorem::Kac => {
                    let (q, _) = input.quiver()?;
                    let r = verify_kac(q, args.field()?, h, &cfg)?;
                    (args.emit(&r, render::kac), r.passed)
                }
                Theorem::Main => {
                    let (q, a) = input.quiver()?;
                    let r = verify_main_theorem(q, a, args.field()?, h, &cfg)?;
                    (args.emit(&r, render::main_report), r.passed)
                }
                Theorem::Species => {
                    let r = verify_species_theorem(input.valued()?, args.field, h, &cfg)?;
                    (args.emit(&r, render::species), r.passed)
                }
            };
            Ok(Outcome { text, passed })
        }
        Command::Fixtures { out } => {
            fs::create_dir_all(out).map_err(|e| Error::Parse(format!("{}: {e}", out.display())))?;
            let mut written = Vec::new();
            for (name, json) in fixture_files() {
                let path = out.join(&name);
                fs::write(&path, json + "\n").map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                written.push(path.display().to_string());
            }
            Ok(Outcome::ok(args.emit(&written, |w| {
                w.iter().map(|p| format!("wrote {p}\n")).collect()
            })))
        }
    }
}

/// 0 on success, 1 when a theorem check fails, 2 on any error.
fn exit_code(result: &Result<Outcome>) -> u8 {
    match result {
        Ok(Outcome { passed: true, .. }) => 0,
        Ok(_) => 1,
        Err(_) => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli);
    match &result {
        Ok(out) => {
            print!("{}", out.text);
            if !out.text.ends_with('\n') {
                println!();
            }
        }
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(exit_code(&result))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Ok(Outcome::ok(String::new()))), 0);
        let failed = Outcome {
            text: String::new(),
            passed: false,
        };
        assert_eq!(exit_code(&Ok(failed)), 1);
        assert_eq!(exit_code(&Err(Error::ZeroVector)), 2);
    }

    #[test]
    fn cli_is_well_formed() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
