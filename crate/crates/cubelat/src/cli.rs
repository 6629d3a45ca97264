//! Subcommands. Every command reads files named by flags and writes to `--out` or stdout.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use cubelat_classify::{classify, rebuild, Certificate, ClassifyError};
use cubelat_enum::{enumerate_torus, reduce_by_congruence, EnumOptions, Mode};
use cubelat_gen::{generator_by_name, SigmaWord};
use cubelat_lattice::{Axis, Domain, FacePatch};
use cubelat_local::{criterion_by_name, slice_diagram, validate};
use cubelat_topology::topology_report;
use cubelat_transforms::{
    insert_slab, insertable_pattern, push_tower, remove_slab_shift, slab_at, substitute, tower_by_base, InsertPattern,
    InsertSpec, Plane, Shift,
};
use thiserror::Error;

use crate::mesh::{export_mesh, MeshFormat};
use crate::patch_io::{parse_domain_tokens, parse_patch, serialize_domain, serialize_patch, tokens};

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or unreadable input: exit code 2.
    #[error("{0}")]
    Usage(String),
    /// The input was read but fails the requested check: exit code 1.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn failed(e: impl std::fmt::Display) -> CliError {
    CliError::Failed(e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "cubelat", version, about = "Cubic lattice polyhedra: generate, check, classify, transform, export")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Patch file (`domain ...` header plus `x y z N` lines)
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write here instead of stdout
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a named family on a domain
    Gen {
        /// Generator name (p0, p1, sigma, tau, scherk, flatcenter, column, slab, sheet)
        name: String,
        /// Word argument for sigma/tau/column/slab
        word: Option<String>,
        /// `torus px py pz [shear a b c]` or `window lox loy loz hix hiy hiz`
        #[arg(long, num_args = 4..=8, allow_negative_numbers = true, required = true, value_name = "DOMAIN")]
        domain: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Check a patch against a criterion; exit 1 on violations
    Validate {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "cubic")]
        criterion: String,
        #[command(flatten)]
        out: Output,
    },
    /// Print a certificate for a torus patch
    Classify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Build the patch described by a certificate file
    Rebuild {
        /// Certificate file as written by `classify`
        #[arg(long, value_name = "FILE")]
        cert: PathBuf,
        /// Override the domain header of the certificate file
        #[arg(long, num_args = 4..=8, allow_negative_numbers = true, value_name = "DOMAIN")]
        domain: Option<Vec<String>>,
        #[command(flatten)]
        out: Output,
    },
    /// Push a tower one unit along its axis
    Push {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_axis)]
        axis: Axis,
        /// Base of the central cell in the (next, prev) axis coordinates
        #[arg(long, num_args = 2, allow_negative_numbers = true, value_names = ["I", "J"])]
        base: Vec<i32>,
        #[command(flatten)]
        out: Output,
    },
    /// Remove or insert slabs
    Slab {
        #[command(subcommand)]
        op: SlabOp,
    },
    /// Euler characteristic, genus, orientability and curvature of a torus patch
    Topology {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// List all valid patches on a small torus
    Enumerate {
        #[arg(long, num_args = 3, value_names = ["PX", "PY", "PZ"])]
        torus: Vec<i32>,
        /// Discrete minimal surfaces instead of cubic polyhedra
        #[arg(long)]
        minimal: bool,
        /// Keep one representative per congruence class
        #[arg(long)]
        up_to_congruence: bool,
        /// Count mirror images as congruent
        #[arg(long)]
        mirror: bool,
        /// Keep disconnected discrete minimal surfaces
        #[arg(long)]
        allow_disconnected: bool,
        /// Maximum number of face slots searched
        #[arg(long, default_value_t = 48)]
        limit: usize,
        /// Output directory
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
    },
    /// Slice a patch by a lattice plane
    Diagram {
        #[command(flatten)]
        input: Input,
        /// Plane normal and level
        #[arg(long, num_args = 2, allow_negative_numbers = true, value_names = ["AXIS", "LEVEL"])]
        plane: Vec<String>,
        #[arg(long)]
        svg: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Write a polygon mesh
    Export {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "obj")]
        format: Format,
        /// Split each square into two triangles
        #[arg(long)]
        triangles: bool,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Subcommand)]
pub enum SlabOp {
    /// Remove the slab lying in the plane `AXIS = LEVEL`
    Remove {
        #[command(flatten)]
        input: Input,
        #[arg(long, num_args = 2, allow_negative_numbers = true, value_names = ["AXIS", "LEVEL"])]
        plane: Vec<String>,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        shift: String,
        #[command(flatten)]
        out: Output,
    },
    /// Insert slabs along the half-integer plane `AXIS = LEVEL + 1/2`
    Insert {
        #[command(flatten)]
        input: Input,
        #[arg(long, num_args = 2, allow_negative_numbers = true, value_names = ["AXIS", "LEVEL"])]
        plane: Vec<String>,
        /// Expected pattern word over {u, p}; must match the plane's pattern
        #[arg(long, conflicts_with = "axis")]
        word: Option<String>,
        /// Axis of an untwisted slab (trivial pattern only)
        #[arg(long, value_parser = parse_axis)]
        axis: Option<Axis>,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        shift: String,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Obj,
    Off,
}

fn parse_axis(s: &str) -> Result<Axis, String> {
    Axis::parse(s).ok_or_else(|| format!("expected x, y or z, got `{s}`"))
}

fn parse_plane(v: &[String]) -> Result<(Axis, i32), CliError> {
    let a = parse_axis(&v[0]).map_err(usage)?;
    let l = v[1].parse().map_err(|_| usage(format!("bad plane level `{}`", v[1])))?;
    Ok((a, l))
}

fn domain_arg(v: &[String]) -> Result<Domain, CliError> {
    let toks: Vec<&str> = v.iter().map(String::as_str).collect();
    parse_domain_tokens(0, &toks).map_err(|e| usage(format!("--domain: {}", e.msg)))
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_patch(input: &Input) -> Result<FacePatch, CliError> {
    parse_patch(&read(&input.input)?).map_err(|e| usage(format!("{}: {e}", input.input.display())))
}

fn emit(out: &Output, text: &str) -> Result<(), CliError> {
    match &out.out {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn require_cubic(p: &FacePatch) -> Result<(), CliError> {
    let r = validate(p, &cubelat_local::Cubic);
    if r.ok() {
        Ok(())
    } else {
        Err(failed(format!("input is not a valid cubic polyhedron\n{r}")))
    }
}

fn shift_arg(s: &str) -> Result<Shift, CliError> {
    s.parse().map_err(usage)
}

/// Certificate file: a domain header, the certificate lines, and `#` comments.
pub fn parse_certificate_file(text: &str) -> Result<(Option<Domain>, Certificate), CliError> {
    let mut domain = None;
    let mut body = String::new();
    for (i, raw) in text.lines().enumerate() {
        let toks = tokens(raw);
        if toks.first() == Some(&"domain") {
            domain = Some(parse_domain_tokens(i + 1, &toks[1..]).map_err(usage)?);
        } else if !toks.is_empty() {
            body.push_str(&toks.join(" "));
            body.push('\n');
        }
    }
    let cert = body.parse().map_err(|e: ClassifyError| usage(format!("certificate: {e}")))?;
    Ok((domain, cert))
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gen { name, word, domain, out } => {
            let g = generator_by_name(&name).map_err(usage)?;
            let d = domain_arg(&domain)?;
            let p = g.generate(word.as_deref(), d).map_err(failed)?;
            emit(&out, &serialize_patch(&p))
        }
        Command::Validate { input, criterion, out } => {
            let c = criterion_by_name(&criterion).ok_or_else(|| usage(format!("unknown criterion `{criterion}`")))?;
            let p = read_patch(&input)?;
            let r = validate(&p, c.as_ref());
            emit(&out, &r.to_string())?;
            if r.ok() {
                Ok(())
            } else {
                Err(failed(format!("{} violation(s)", r.violations.len())))
            }
        }
        Command::Classify { input, out } => {
            let p = read_patch(&input)?;
            let c = classify(&p).map_err(failed)?;
            let mut text = String::new();
            let _ = writeln!(text, "{}", serialize_domain(&c.domain));
            let _ = writeln!(text, "# kind {}", c.certificate.kind());
            let _ = writeln!(text, "# frame {} shift {}", c.frame.op, c.frame.shift);
            let _ = writeln!(text, "{}", c.certificate);
            emit(&out, &text)
        }
        Command::Rebuild { cert, domain, out } => {
            let (file_domain, c) = parse_certificate_file(&read(&cert)?)?;
            let d = match domain {
                Some(v) => domain_arg(&v)?,
                None => file_domain.ok_or_else(|| usage("certificate file has no domain; pass --domain"))?,
            };
            let p = rebuild(&c, d).map_err(failed)?;
            emit(&out, &serialize_patch(&p))
        }
        Command::Push { input, axis, base, out } => {
            let p = read_patch(&input)?;
            require_cubic(&p)?;
            let t = tower_by_base(&p, axis, (base[0], base[1])).map_err(failed)?;
            let q = push_tower(&p, &t).map_err(failed)?;
            emit(&out, &serialize_patch(&q))
        }
        Command::Slab { op } => run_slab(op),
        Command::Topology { input, out } => {
            let p = read_patch(&input)?;
            let r = topology_report(&p).map_err(failed)?;
            emit(&out, &r.to_string())
        }
        Command::Enumerate { torus, minimal, up_to_congruence, mirror, allow_disconnected, limit, out } => {
            let d = Domain::torus(torus[0], torus[1], torus[2]).map_err(usage)?;
            let mode = if minimal { Mode::DiscreteMinimal } else { Mode::Cubic };
            let opts = EnumOptions { mode, limit, connected: !allow_disconnected };
            let (patches, stats) = enumerate_torus(d, opts).map_err(usage)?;
            fs::create_dir_all(&out).map_err(|e| usage(format!("{}: {e}", out.display())))?;
            let mut counts = String::new();
            let _ = writeln!(counts, "mode {}", mode.criterion_name());
            let _ = writeln!(counts, "{}", serialize_domain(&d));
            let _ = writeln!(counts, "raw {}", stats.raw);
            let _ = writeln!(counts, "valid {}", stats.valid);
            let items: Vec<(FacePatch, usize)> = if up_to_congruence {
                let classes = reduce_by_congruence(&patches, mirror);
                let _ = writeln!(counts, "classes {}", classes.len());
                classes.into_iter().map(|c| (c.representative, c.size)).collect()
            } else {
                patches.into_iter().map(|p| (p, 1)).collect()
            };
            for (i, (p, size)) in items.iter().enumerate() {
                let mut text = String::new();
                if up_to_congruence {
                    let _ = writeln!(text, "# class size {size}");
                }
                text.push_str(&serialize_patch(p));
                let path = out.join(format!("patch_{i:04}.txt"));
                fs::write(&path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            let path = out.join("counts.txt");
            fs::write(&path, counts).map_err(|e| usage(format!("{}: {e}", path.display())))
        }
        Command::Diagram { input, plane, svg, out } => {
            let p = read_patch(&input)?;
            let (a, l) = parse_plane(&plane)?;
            let d = slice_diagram(&p, a, l);
            emit(&out, &if svg { d.to_svg() } else { d.to_ascii() })
        }
        Command::Export { input, format, triangles, out } => {
            let p = read_patch(&input)?;
            let f = match format {
                Format::Obj => MeshFormat::Obj,
                Format::Off => MeshFormat::Off,
            };
            let m = export_mesh(&p, f, triangles).map_err(failed)?;
            if !m.oriented {
                eprintln!("warning: surface is not orientable; winding is arbitrary");
            }
            emit(&out, &m.text)
        }
    }
}

fn run_slab(op: SlabOp) -> Result<(), CliError> {
    match op {
        SlabOp::Remove { input, plane, shift, out } => {
            let p = read_patch(&input)?;
            require_cubic(&p)?;
            let (a, l) = parse_plane(&plane)?;
            let s = slab_at(&p, a, l).ok_or_else(|| failed(format!("no slab in plane {a} = {l}")))?;
            let q = remove_slab_shift(&p, &s, shift_arg(&shift)?).map_err(failed)?;
            emit(&out, &serialize_patch(&q))
        }
        SlabOp::Insert { input, plane, word, axis, count, shift, out } => {
            let p = read_patch(&input)?;
            require_cubic(&p)?;
            let (a, l) = parse_plane(&plane)?;
            let pl = Plane::new(a, l);
            let pattern = insertable_pattern(&p, pl).ok_or_else(|| failed(format!("plane {a} = {l}+1/2 admits no slab")))?;
            let spec = match (&pattern, axis) {
                (InsertPattern::Trivial, Some(ax)) => {
                    if count != 1 {
                        return Err(usage("--count applies to word patterns only"));
                    }
                    InsertSpec::Trivial(ax)
                }
                (InsertPattern::Trivial, None) => return Err(usage("trivial pattern: pass --axis x|y")),
                (InsertPattern::Word { .. }, Some(_)) => return Err(failed(format!("pattern is {pattern}, not trivial"))),
                (InsertPattern::Word { omega, .. }, None) => {
                    if let Some(w) = &word {
                        if !w.chars().all(|c| matches!(c, 'u' | 'p')) || w.is_empty() {
                            return Err(usage(format!("pattern words use the letters u and p, got `{w}`")));
                        }
                        let want: SigmaWord = substitute(omega).class();
                        if substitute(w).class() != want {
                            return Err(failed(format!("plane pattern is `{omega}`, not `{w}`")));
                        }
                    }
                    InsertSpec::Word { count }
                }
            };
            let q = insert_slab(&p, pl, &spec, shift_arg(&shift)?).map_err(failed)?;
            emit(&out, &serialize_patch(&q))
        }
    }
}
