//! Command-line front end. The binary parses [`Cli`] and hands it to [`run`],
//! which returns everything to print together with the exit status.

use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::deodhar::{defect_set, deodhar_table_parallel, Mask, MAX_WORD_LEN};
use crate::enumerate::{enum_table, EnumRow};
use crate::error::Error;
use crate::heap::{build_heap, render_ascii};
use crate::hecke::{is_tight_in, poincare_ih_in, KlStore};
use crate::perm::{
    canonical_reduced_word, is_321_avoiding, is_321_hexagon_avoiding, is_hexagon_avoiding,
    Permutation, Word,
};
use crate::poly::QPoly;
use crate::schubert::{
    is_smooth, locus_to_csv, locus_to_json, locus_to_text, max_singular_locus_of_word,
    max_singular_locus_oracle_in,
};
use crate::table::{PolyTable, TableRow};
use crate::verify::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Mask-prefix bits used to split table work across threads.
const PREFIX_BITS: usize = 6;

#[derive(Parser, Debug)]
#[command(
    name = "klheap",
    version,
    about = "Kazhdan-Lusztig polynomials via Deodhar masks"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// KL-table cache file, read before and written after oracle work.
    #[arg(long, global = true, env = "KLHEAP_CACHE")]
    pub cache: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Reduced word, e.g. "2 1 3 2 4 3".
    #[arg(long)]
    pub word: Option<String>,
    /// One-line notation, e.g. 3,4,5,1,2.
    #[arg(long)]
    pub perm: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Pattern tests for a permutation.
    Check { perm: String },
    /// P_{x,w}, or the whole table when --x is absent.
    Kl {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        x: Option<String>,
        /// Use the Hecke-algebra recursion instead of masks.
        #[arg(long)]
        oracle: bool,
    },
    /// The mask sum P_x(a) for every x.
    Table {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        oracle: bool,
    },
    /// Intersection-cohomology Poincare polynomial.
    Poincare { perm: String },
    /// Whether C'_w is the product of C'_s along a reduced word.
    Tight { perm: String },
    /// Maximal singular locus with codimensions.
    Singular {
        perm: String,
        #[arg(long)]
        oracle: bool,
    },
    /// Heap diagram of a fully commutative word.
    Heap {
        #[arg(long)]
        word: String,
        #[arg(long)]
        mask: Option<String>,
    },
    /// Masks with their defect sets and products.
    Masks {
        #[arg(long)]
        word: String,
        #[arg(long)]
        x: Option<String>,
        /// Only masks with at least this many defects.
        #[arg(long, default_value_t = 0)]
        min_defects: usize,
    },
    /// Counts of 321-avoiding and 321-hexagon-avoiding permutations.
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        force: bool,
    },
    /// Equivalence battery over S_n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

enum Failure {
    Input(String),
    Resource(String),
    Verify(String, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::WordTooLong { .. } | Error::RankTooLarge { .. } => {
                Failure::Resource(e.to_string())
            }
            Error::Internal(_) => Failure::Verify(String::new(), e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CmdResult = std::result::Result<String, Failure>;

pub fn run(cli: Cli) -> Outcome {
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            return Outcome {
                stderr: format!("error: {e}\n"),
                code: EXIT_RESOURCE,
                ..Outcome::default()
            }
        }
    };
    match pool.install(|| dispatch(&cli)) {
        Ok(stdout) => Outcome {
            stdout,
            ..Outcome::default()
        },
        Err(Failure::Input(msg)) => Outcome {
            stderr: format!("error: {msg}\n"),
            code: EXIT_INPUT,
            ..Outcome::default()
        },
        Err(Failure::Resource(msg)) => Outcome {
            stderr: format!("error: {msg}\n"),
            code: EXIT_RESOURCE,
            ..Outcome::default()
        },
        Err(Failure::Verify(stdout, msg)) => Outcome {
            stdout,
            stderr: format!("{msg}\n"),
            code: EXIT_VERIFY,
        },
    }
}

fn with_store<T>(
    cli: &Cli,
    f: impl FnOnce(&KlStore) -> std::result::Result<T, Failure>,
) -> std::result::Result<T, Failure> {
    let store = KlStore::new();
    if let Some(path) = &cli.cache {
        store.load(path)?;
    }
    let out = f(&store)?;
    if let Some(path) = &cli.cache {
        store.save(path)?;
    }
    Ok(out)
}

fn parse_perm(s: &str) -> std::result::Result<Permutation, Failure> {
    Ok(Permutation::parse_with_rank(s, None)?)
}

fn resolve(input: &Input) -> std::result::Result<Word, Failure> {
    let a = match (&input.word, &input.perm) {
        (Some(w), _) => Word::parse(w, None)?,
        (None, Some(p)) => canonical_reduced_word(&parse_perm(p)?),
        (None, None) => return Err(Failure::Input("pass --word or --perm".into())),
    };
    if !a.is_reduced() {
        return Err(Error::NotReduced.into());
    }
    if a.len() > MAX_WORD_LEN {
        return Err(Error::WordTooLong {
            len: a.len(),
            max: MAX_WORD_LEN,
        }
        .into());
    }
    Ok(a)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn csv_of(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

fn json<T: Serialize>(v: &T) -> String {
    format!("{}\n", serde_json::to_string(v).expect("serialises"))
}

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Check { perm } => cmd_check(cli.format, &parse_perm(perm)?),
        Command::Kl { input, x, oracle } => cmd_kl(cli, input, x.as_deref(), *oracle),
        Command::Table { input, oracle } => cmd_table(cli, input, *oracle),
        Command::Poincare { perm } => {
            let w = parse_perm(perm)?;
            let p = with_store(cli, |s| Ok(poincare_ih_in(s, &w)?))?;
            Ok(poly_output(cli.format, &w, &p))
        }
        Command::Tight { perm } => {
            let w = parse_perm(perm)?;
            let t = with_store(cli, |s| Ok(is_tight_in(s, &w)?))?;
            Ok(match cli.format {
                Format::Text => format!("tight: {}\n", yes(t)),
                Format::Json => json(&serde_json::json!({"perm": w, "tight": t})),
                Format::Csv => csv_of(&["perm", "tight"], vec![vec![w.to_string(), t.to_string()]]),
            })
        }
        Command::Singular { perm, oracle } => {
            let w = parse_perm(perm)?;
            let locus = if *oracle {
                with_store(cli, |s| Ok(max_singular_locus_oracle_in(s, &w)?))?
            } else {
                max_singular_locus_of_word(&resolve(&Input {
                    word: None,
                    perm: Some(perm.clone()),
                })?)?
            };
            Ok(locus_output(cli.format, &w, &locus))
        }
        Command::Heap { word, mask } => cmd_heap(cli.format, word, mask.as_deref()),
        Command::Masks {
            word,
            x,
            min_defects,
        } => cmd_masks(cli.format, word, x.as_deref(), *min_defects),
        Command::Enum { n, force } => cmd_enum(cli.format, *n, *force),
        Command::Verify { n, sample, seed } => {
            let r = verify(*n, *sample, *seed)?;
            let text = match cli.format {
                Format::Text => r.to_text(),
                Format::Json => format!("{}\n", r.to_json()),
                Format::Csv => r.to_csv(),
            };
            if r.passed() {
                Ok(text)
            } else {
                Err(Failure::Verify(
                    text,
                    format!("verification failed: {} failures", r.total_failures()),
                ))
            }
        }
    }
}

fn cmd_check(format: Format, w: &Permutation) -> CmdResult {
    let (a, h, s) = (is_321_avoiding(w), is_hexagon_avoiding(w), is_smooth(w));
    Ok(match format {
        Format::Text => format!(
            "321-avoiding: {}\nhexagon-avoiding: {}\n321-hexagon-avoiding: {}\nsmooth: {}\nlength: {}\n",
            yes(a),
            yes(h),
            yes(a && h),
            yes(s),
            w.length()
        ),
        Format::Json => json(&serde_json::json!({
            "perm": w,
            "length": w.length(),
            "avoids_321": a,
            "hexagon_avoiding": h,
            "smooth": s,
        })),
        Format::Csv => csv_of(
            &["perm", "length", "avoids_321", "hexagon_avoiding", "smooth"],
            vec![vec![
                w.to_string(),
                w.length().to_string(),
                a.to_string(),
                h.to_string(),
                s.to_string(),
            ]],
        ),
    })
}

fn table_output(format: Format, t: &PolyTable) -> String {
    match format {
        Format::Text => t.to_text(),
        Format::Json => format!("{}\n", t.to_json()),
        Format::Csv => t.to_csv(),
    }
}

fn poly_output(format: Format, x: &Permutation, p: &QPoly) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Json => json(&TableRow {
            x: x.clone(),
            poly: p.clone(),
        }),
        Format::Csv => {
            let coeffs: Vec<String> = p.coeffs().iter().map(i64::to_string).collect();
            csv_of(
                &["x", "coeffs"],
                vec![vec![x.to_string(), coeffs.join(" ")]],
            )
        }
    }
}

fn locus_output(format: Format, w: &Permutation, locus: &BTreeSet<Permutation>) -> String {
    match format {
        Format::Text => locus_to_text(w, locus),
        Format::Json => format!("{}\n", locus_to_json(w, locus)),
        Format::Csv => locus_to_csv(w, locus),
    }
}

fn cmd_kl(cli: &Cli, input: &Input, x: Option<&str>, oracle: bool) -> CmdResult {
    let a = resolve(input)?;
    let w = a.apply();
    let table = if oracle {
        with_store(cli, |s| Ok(s.table(&w)?.entries().clone()))?
    } else {
        if !is_321_hexagon_avoiding(&w) {
            return Err(Failure::Input(format!(
                "{w} is not 321-hexagon-avoiding, so the mask sum need not equal the \
                 KL polynomial; pass --oracle to use the Hecke-algebra recursion"
            )));
        }
        deodhar_table_parallel(&a, PREFIX_BITS)?
    };
    match x {
        Some(x) => {
            let x = Permutation::parse_with_rank(x, Some(w.n()))?;
            Ok(poly_output(cli.format, &x, &table.get(&x)))
        }
        None => Ok(table_output(cli.format, &table)),
    }
}

fn cmd_table(cli: &Cli, input: &Input, oracle: bool) -> CmdResult {
    let a = resolve(input)?;
    let table = if oracle {
        let w = a.apply();
        with_store(cli, |s| Ok(s.table(&w)?.entries().clone()))?
    } else {
        deodhar_table_parallel(&a, PREFIX_BITS)?
    };
    Ok(table_output(cli.format, &table))
}

fn cmd_heap(format: Format, word: &str, mask: Option<&str>) -> CmdResult {
    let a = Word::parse(word, None)?;
    let h = build_heap(&a)?;
    let mask = mask.map(str::parse::<Mask>).transpose()?;
    Ok(match format {
        Format::Text => render_ascii(&h, mask.as_ref())?,
        Format::Json => format!("{}\n", h.to_json()),
        Format::Csv => csv_of(
            &["position", "col", "level"],
            h.points()
                .iter()
                .enumerate()
                .map(|(j, p)| vec![(j + 1).to_string(), p.col.to_string(), p.level.to_string()])
                .collect(),
        ),
    })
}

#[derive(Serialize)]
struct MaskRow {
    mask: String,
    defects: Vec<usize>,
    product: Permutation,
    word: String,
}

fn cmd_masks(format: Format, word: &str, x: Option<&str>, min_defects: usize) -> CmdResult {
    let a = resolve(&Input {
        word: Some(word.to_string()),
        perm: None,
    })?;
    let x = x
        .map(|s| Permutation::parse_with_rank(s, Some(a.n())))
        .transpose()?;
    let mut rows = Vec::new();
    for index in 0u64..1 << a.len() {
        let m = Mask::from_index(index, a.len());
        let rec = defect_set(&a, &m)?;
        if rec.defects.len() < min_defects || x.as_ref().is_some_and(|x| *x != rec.product) {
            continue;
        }
        let reduced = canonical_reduced_word(&rec.product);
        rows.push(MaskRow {
            mask: m.to_string(),
            defects: rec.defects.into_iter().collect(),
            word: if reduced.is_empty() {
                "e".into()
            } else {
                reduced.to_string()
            },
            product: rec.product,
        });
    }
    rows.sort_by_cached_key(|r| (r.product.table_key(), r.defects.clone(), r.mask.clone()));
    let set = |d: &[usize]| {
        let inner: Vec<String> = d.iter().map(usize::to_string).collect();
        format!("{{{}}}", inner.join(","))
    };
    Ok(match format {
        Format::Text => rows
            .iter()
            .map(|r| {
                format!(
                    "{}\t{}\t{}\t{}\n",
                    r.mask,
                    set(&r.defects),
                    r.product,
                    r.word
                )
            })
            .collect(),
        Format::Json => json(&rows),
        Format::Csv => csv_of(
            &["mask", "defects", "product", "word"],
            rows.iter()
                .map(|r| {
                    vec![
                        r.mask.clone(),
                        set(&r.defects),
                        r.product.to_string(),
                        r.word.clone(),
                    ]
                })
                .collect(),
        ),
    })
}

fn cmd_enum(format: Format, n: usize, force: bool) -> CmdResult {
    let rows: Vec<EnumRow> = enum_table(n, force)?;
    Ok(match format {
        Format::Text => {
            let mut out = String::from("n\t321-avoiding\t321-hexagon-avoiding\n");
            for r in &rows {
                out.push_str(&format!(
                    "{}\t{}\t{}\n",
                    r.n, r.count_321, r.count_321_hexagon
                ));
            }
            out
        }
        Format::Json => json(&rows),
        Format::Csv => csv_of(
            &["n", "count_321", "count_321_hexagon"],
            rows.iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.count_321.to_string(),
                        r.count_321_hexagon.to_string(),
                    ]
                })
                .collect(),
        ),
    })
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => Outcome {
            code: if e.use_stderr() { EXIT_INPUT } else { EXIT_OK },
            stdout: if e.use_stderr() {
                String::new()
            } else {
                e.to_string()
            },
            stderr: if e.use_stderr() {
                e.to_string()
            } else {
                String::new()
            },
        },
    }
}
