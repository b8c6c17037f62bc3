//! `nc`: command-line front end for the ncschur library.

mod output;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use ncschur::classic::{plactic_board, plactic_class, stanley_symmetric, Permutation};
use ncschur::ideal::{
    congruent_all, containment_failure, degree_basis, intersect_degree, DegreeBasis, IdealExpr, IdealSpec,
};
use ncschur::llt::{inv_k, llt_polynomial, llt_switchboard, schur_coeffs_sqread, SkewTuple};
use ncschur::nc_schur::{augmented_flagged_schur, complete, elementary, nc_schur_e, nc_schur_h};
use ncschur::partition::Partition;
use ncschur::poly::NCPoly;
use ncschur::positivity::{
    q_monomial_positive, search_expansions, verify_expansion, verify_witness, Verdict,
};
use ncschur::scalar::{Embed, Field, RatFunc, Ring};
use ncschur::switchboard::{build_unique, Flavor, Switchboard};
use ncschur::tableau::{enumerate, Tableau, TableauKind};
use ncschur::word::Word;

use output::{Format, Out};

#[derive(Parser)]
#[command(name = "nc", version, about = "Noncommutative Schur functions and switchboards")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Worker threads for sharded searches; output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Elementary function e_k over [N] or over --letters.
    E {
        #[arg(long)]
        k: usize,
        #[arg(long = "N")]
        n: u8,
        #[arg(long, value_delimiter = ',')]
        letters: Option<Vec<u8>>,
    },
    /// Complete homogeneous function h_l over [N].
    H {
        #[arg(long)]
        l: usize,
        #[arg(long = "N")]
        n: u8,
    },
    /// Noncommutative Schur function J_lambda.
    Jschur {
        #[arg(long)]
        lambda: String,
        #[arg(long = "N")]
        n: u8,
        /// Use the complete-homogeneous determinant.
        #[arg(long)]
        via_h: bool,
    },
    /// Column-flagged function; `--words` gives the words placed between consecutive factors, `;`-separated.
    Flagged {
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        flags: Vec<u8>,
        #[arg(long)]
        words: Option<String>,
    },
    /// Normal form of a vector file modulo an ideal.
    Reduce {
        #[arg(long)]
        ideal: String,
        #[arg(long = "N")]
        n: u8,
        file: PathBuf,
    },
    /// Exit 0 when the two vector files are congruent, 1 otherwise.
    Congruent {
        #[arg(long)]
        ideal: String,
        #[arg(long = "N")]
        n: u8,
        lhs: PathBuf,
        rhs: PathBuf,
    },
    /// Exit 0 when the dual vector pairs to zero with the ideal, 1 otherwise.
    Perp {
        #[arg(long)]
        ideal: String,
        #[arg(long = "N")]
        n: u8,
        file: PathBuf,
    },
    /// Exit 0 when BIG contains SMALL up to degree dmax, 1 otherwise.
    IdealContains {
        #[arg(long = "N")]
        n: u8,
        #[arg(long, default_value_t = 5)]
        dmax: usize,
        big: String,
        small: String,
    },
    Board {
        #[command(subcommand)]
        cmd: BoardCmd,
    },
    Llt {
        #[command(subcommand)]
        cmd: LltCmd,
    },
    /// Stanley symmetric function of a permutation.
    Stanley {
        perm: String,
        #[arg(long)]
        words: bool,
    },
    /// Plactic class of a tableau and the symmetric function of its board.
    Plactic {
        #[arg(long)]
        tableau: String,
    },
    Positivity {
        #[command(subcommand)]
        cmd: PosCmd,
    },
    /// Regression over the published example values.
    Selftest,
    /// Search for counterexamples to an open positivity statement; asserts nothing.
    Conjecture {
        #[command(subcommand)]
        cmd: ConjCmd,
    },
}

#[derive(Subcommand)]
enum BoardCmd {
    /// Exit 0 valid, 1 invalid.
    Validate {
        file: PathBuf,
        #[arg(long, default_value = "plain")]
        flavor: String,
    },
    Components { file: PathBuf },
    Symfunc {
        file: PathBuf,
        #[arg(long)]
        fundamental: bool,
    },
    /// Axiom 5, locality and strong locality; exit 1 if any fails.
    Axioms { file: PathBuf },
    /// The unique switchboard on a word list for a semimatched ideal.
    Build {
        #[arg(long)]
        ideal: String,
        #[arg(long = "N")]
        n: u8,
        file: PathBuf,
    },
}

#[derive(clap::Args)]
struct Shapes {
    /// Level; must equal the number of components.
    #[arg(long)]
    k: usize,
    #[arg(long)]
    shapes: String,
}

impl Shapes {
    fn tuple(&self) -> Result<SkewTuple> {
        let t = SkewTuple::parse(&self.shapes)?;
        if t.level() != self.k {
            bail!("--k {} does not match the {} components of {:?}", self.k, t.level(), self.shapes);
        }
        Ok(t)
    }
}

#[derive(Subcommand)]
enum LltCmd {
    Poly {
        #[command(flatten)]
        s: Shapes,
        #[arg(long)]
        fundamental: bool,
    },
    Board {
        #[command(flatten)]
        s: Shapes,
        #[arg(long)]
        t: usize,
    },
    SqreadCoeffs {
        #[command(flatten)]
        s: Shapes,
    },
    Words {
        #[command(flatten)]
        s: Shapes,
    },
}

#[derive(clap::Args)]
struct PosArgs {
    #[arg(long)]
    lambda: String,
    #[arg(long = "N")]
    n: u8,
    #[arg(long)]
    ideal: String,
}

#[derive(Subcommand)]
enum PosCmd {
    /// Exit 0 Positive, 1 NotPositive; the certificate or witness goes to --out or stdout.
    Check {
        #[command(flatten)]
        p: PosArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a witness (dual vector) or a signed monomial expansion.
    Verify {
        #[command(flatten)]
        p: PosArgs,
        #[arg(long, conflicts_with = "expansion", required_unless_present = "expansion")]
        witness: Option<PathBuf>,
        #[arg(long)]
        expansion: Option<PathBuf>,
    },
    /// One word per plactic class of the standard tableaux of shape lambda.
    Search {
        #[command(flatten)]
        p: PosArgs,
    },
}

#[derive(clap::Args)]
struct ConjArgs {
    #[arg(long = "N")]
    n: u8,
    #[arg(long)]
    dmax: usize,
}

#[derive(Subcommand)]
enum ConjCmd {
    /// LP positivity of every J_lambda modulo Iaba:k.
    Aba {
        #[arg(long)]
        k: u8,
        #[command(flatten)]
        a: ConjArgs,
    },
    /// LP positivity of every J_lambda modulo Iassaf:k.
    Assaf {
        #[arg(long)]
        k: u8,
        #[command(flatten)]
        a: ConjArgs,
    },
    /// The square-reading expansion modulo IlamLE:3 and Iassaf:3.
    Sqread {
        #[command(flatten)]
        a: ConjArgs,
    },
}

type Q = BigRational;

fn read(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        return std::io::read_to_string(std::io::stdin()).context("reading stdin");
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_vec<R: Ring>(path: &Path) -> Result<NCPoly<R>> {
    NCPoly::parse_vec_file(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn read_board(path: &Path) -> Result<Switchboard> {
    Switchboard::parse(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn read_words(path: &Path) -> Result<BTreeSet<Word>> {
    read(path)?
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| Ok(Word::parse(l)?))
        .collect()
}

fn expr_basis<F: Field>(ideal: &IdealExpr, d: usize) -> Result<std::sync::Arc<DegreeBasis<F>>>
where
    BigInt: Embed<F>,
{
    Ok(match ideal {
        IdealExpr::Spec(s) => degree_basis::<F>(s, d, None)?,
        IdealExpr::Cap(specs) => intersect_degree::<F>(specs, d, None)?,
    })
}

fn degree_of<R: Ring>(p: &NCPoly<R>) -> Result<usize> {
    Ok(p.homogeneous_degree()?.unwrap_or(0))
}

fn reduce_with<F: Field>(ideal: &IdealExpr, path: &Path, out: &mut Out) -> Result<()>
where
    BigInt: Embed<F>,
{
    let f: NCPoly<F> = read_vec(path)?;
    let nf = expr_basis::<F>(ideal, degree_of(&f)?)?.reduce(&f)?;
    out.poly(&nf, ideal.n());
    Ok(())
}

fn congruent_with<F: Field>(ideal: &IdealExpr, lhs: &Path, rhs: &Path) -> Result<bool>
where
    BigInt: Embed<F>,
{
    let f: NCPoly<F> = read_vec(lhs)?;
    let g: NCPoly<F> = read_vec(rhs)?;
    Ok(congruent_all(&f, &g, &ideal.specs())?)
}

fn perp_with<F: Field>(ideal: &IdealExpr, path: &Path, out: &mut Out) -> Result<bool>
where
    BigInt: Embed<F>,
{
    let gamma: NCPoly<F> = read_vec(path)?;
    let basis = expr_basis::<F>(ideal, degree_of(&gamma)?)?;
    match basis.perp_witness(&gamma)? {
        None => {
            out.field("in_perp", true);
            Ok(true)
        }
        Some(w) => {
            out.field("in_perp", false);
            out.field("witness", w.to_text(ideal.n()));
            Ok(false)
        }
    }
}

fn flag_code(ok: bool) -> u8 {
    if ok {
        0
    } else {
        1
    }
}

fn run(cli: Cli, out: &mut Out) -> Result<u8> {
    match cli.cmd {
        Cmd::E { k, n, letters } => {
            let s = letters.unwrap_or_else(|| (1..=n).collect());
            if let Some(bad) = s.iter().find(|&&x| x == 0 || x > n) {
                bail!("letter {bad} outside 1..={n}");
            }
            out.poly(&elementary(k, &s), n);
        }
        Cmd::H { l, n } => {
            let s: Vec<u8> = (1..=n).collect();
            out.poly(&complete(l, &s), n);
        }
        Cmd::Jschur { lambda, n, via_h } => {
            let l = Partition::parse(&lambda)?;
            let j = if via_h { nc_schur_h(&l, n) } else { nc_schur_e(&l, n) };
            out.poly(&j, n);
        }
        Cmd::Flagged { alpha, flags, words } => {
            let ws: Vec<Word> = match words {
                None => Vec::new(),
                Some(s) => s
                    .split(';')
                    .map(|w| if w.trim().is_empty() { Ok(Word::empty()) } else { Word::parse(w.trim()) })
                    .collect::<ncschur::Result<_>>()?,
            };
            let n = flags.iter().copied().max().unwrap_or(1).max(1);
            let n = ws.iter().map(Word::max_letter).fold(n, u8::max);
            out.poly(&augmented_flagged_schur(&alpha, &flags, &ws)?, n);
        }
        Cmd::Reduce { ideal, n, file } => {
            let ideal = IdealExpr::parse(&ideal, n)?;
            if ideal.needs_q() {
                reduce_with::<RatFunc>(&ideal, &file, out)?;
            } else {
                reduce_with::<Q>(&ideal, &file, out)?;
            }
        }
        Cmd::Congruent { ideal, n, lhs, rhs } => {
            let ideal = IdealExpr::parse(&ideal, n)?;
            let ok = if ideal.needs_q() {
                congruent_with::<RatFunc>(&ideal, &lhs, &rhs)?
            } else {
                congruent_with::<Q>(&ideal, &lhs, &rhs)?
            };
            out.field("congruent", ok);
            return Ok(flag_code(ok));
        }
        Cmd::Perp { ideal, n, file } => {
            let ideal = IdealExpr::parse(&ideal, n)?;
            let ok = if ideal.needs_q() {
                perp_with::<RatFunc>(&ideal, &file, out)?
            } else {
                perp_with::<Q>(&ideal, &file, out)?
            };
            return Ok(flag_code(ok));
        }
        Cmd::IdealContains { n, dmax, big, small } => {
            let a = IdealSpec::parse(&big, n)?;
            let b = IdealSpec::parse(&small, n)?;
            let fail = if a.needs_q() || b.needs_q() {
                containment_failure::<RatFunc>(&a, &b, dmax)?.map(|g| g.to_text(n))
            } else {
                containment_failure::<Q>(&a, &b, dmax)?.map(|g| g.to_text(n))
            };
            out.field("contains", fail.is_none());
            if let Some(g) = &fail {
                out.field("missing_generator", g);
            }
            return Ok(flag_code(fail.is_none()));
        }
        Cmd::Board { cmd } => return board(cmd, out),
        Cmd::Llt { cmd } => llt(cmd, out)?,
        Cmd::Stanley { perm, words } => {
            let pi = Permutation::parse(&perm)?;
            let st = stanley_symmetric(&pi)?;
            if st.from_descents != st.from_tableaux {
                bail!("descent and tableau computations disagree for {pi}");
            }
            if words {
                for w in ncschur::classic::reduced_words(&pi)? {
                    out.field("reduced_word", w);
                }
            }
            out.schur(&st.from_descents);
        }
        Cmd::Plactic { tableau } => {
            let t = Tableau::parse(&tableau)?;
            let n = t.cells().map(|c| c.2).max().unwrap_or(1);
            for w in plactic_class(&t) {
                out.field("word", w.to_text(n));
            }
            out.schur(&plactic_board(&t)?.symfunc()?);
        }
        Cmd::Positivity { cmd } => return positivity(cmd, out),
        Cmd::Selftest => {
            let mut all = true;
            for c in ncschur::selftest::run_all() {
                all &= c.passed;
                let status = if c.passed { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    out.field(c.name, status);
                } else {
                    out.field(c.name, format!("{status} ({})", c.detail));
                }
            }
            return Ok(flag_code(all));
        }
        Cmd::Conjecture { cmd } => return conjecture(cmd, out),
    }
    Ok(0)
}

fn board(cmd: BoardCmd, out: &mut Out) -> Result<u8> {
    match cmd {
        BoardCmd::Validate { file, flavor } => {
            let b = read_board(&file)?;
            let flavor = Flavor::parse(&flavor, b.n())?;
            let v = b.violations(&flavor);
            for msg in &v {
                out.field("violation", msg);
            }
            out.field("valid", v.is_empty());
            Ok(flag_code(v.is_empty()))
        }
        BoardCmd::Components { file } => {
            let b = read_board(&file)?;
            for (i, c) in b.components().iter().enumerate() {
                out.field("component", format!("{i} ({} vertices)", c.vertices().len()));
                out.schur(&c.symfunc()?);
            }
            Ok(0)
        }
        BoardCmd::Symfunc { file, fundamental } => {
            let b = read_board(&file)?;
            if fundamental {
                out.fundamental(&b.fundamental());
            }
            out.schur(&b.symfunc()?);
            Ok(0)
        }
        BoardCmd::Axioms { file } => {
            let b = read_board(&file)?;
            let a5 = b.axiom5_violations();
            for v in &a5 {
                out.field("axiom5_violation", format!("{} at ({}, {})", v.v, v.i, v.j));
            }
            let loc = b.locality_violations();
            for (i, v, w) in &loc {
                out.field("locality_violation", format!("{v} {w} at {i}"));
            }
            let strong = b.strong_locality_violations();
            for i in &strong {
                out.field("strong_locality_violation", i);
            }
            out.field("axiom5", a5.is_empty());
            out.field("locality", loc.is_empty());
            out.field("strong_locality", strong.is_empty());
            Ok(flag_code(a5.is_empty() && loc.is_empty() && strong.is_empty()))
        }
        BoardCmd::Build { ideal, n, file } => {
            let spec = IdealSpec::parse(&ideal, n)?;
            let b = build_unique(&read_words(&file)?, &spec)?;
            out.raw(&b.to_text());
            Ok(0)
        }
    }
}

fn llt(cmd: LltCmd, out: &mut Out) -> Result<()> {
    match cmd {
        LltCmd::Poly { s, fundamental } => {
            let p = llt_polynomial(&s.tuple()?)?;
            if fundamental {
                out.fundamental(&p.fundamental);
            }
            out.q_schur(&p.schur);
        }
        LltCmd::Board { s, t } => out.raw(&llt_switchboard(&s.tuple()?, t)?.to_text()),
        LltCmd::SqreadCoeffs { s } => out.q_schur(&schur_coeffs_sqread(&s.tuple()?)?),
        LltCmd::Words { s } => {
            let b = s.tuple()?;
            let n = b.alphabet()?;
            for w in b.words()? {
                out.field(&w.to_text(n), inv_k(&w, s.k as u8));
            }
        }
    }
    Ok(())
}

fn positivity(cmd: PosCmd, out: &mut Out) -> Result<u8> {
    let setup = |p: &PosArgs| -> Result<(Partition, NCPoly<BigInt>, IdealExpr)> {
        let lambda = Partition::parse(&p.lambda)?;
        let ideal = IdealExpr::parse(&p.ideal, p.n)?;
        if ideal.needs_q() {
            bail!("positivity is decided over the rationals; {} needs Q(q)", p.ideal);
        }
        Ok((lambda.clone(), nc_schur_e(&lambda, p.n), ideal))
    };
    match cmd {
        PosCmd::Check { p, out: file } => {
            let (_, j, ideal) = setup(&p)?;
            let verdict = q_monomial_positive(&j, &ideal)?;
            let mut vec_text = String::new();
            match &verdict {
                Verdict::Positive(c) => {
                    out.field("verdict", "Positive");
                    out.field("scale", &c.scale);
                    vec_text.push_str(&format!("# scale {}\n", c.scale));
                    let cert = NCPoly::from_terms(c.monomials.iter().cloned());
                    vec_text.push_str(&cert.to_vec_file(p.n));
                }
                Verdict::NotPositive(w) => {
                    out.field("verdict", "NotPositive");
                    out.field("pairing", &w.pairing);
                    vec_text.push_str(&format!("# pairing {}\n", w.pairing));
                    vec_text.push_str(&w.gamma.to_vec_file(p.n));
                }
            }
            match file {
                Some(path) => {
                    std::fs::write(&path, vec_text).with_context(|| format!("writing {}", path.display()))?;
                    out.field("vector_file", path.display());
                }
                None => out.raw(&vec_text),
            }
            Ok(if verdict.is_positive() { 0 } else { 1 })
        }
        PosCmd::Verify { p, witness, expansion } => {
            let (_, j, ideal) = setup(&p)?;
            if let Some(path) = witness {
                let gamma: NCPoly<BigInt> = read_vec(&path)?;
                match verify_witness(&j, &ideal, &gamma)? {
                    Some(pairing) => {
                        out.field("witness", "valid");
                        out.field("pairing", pairing);
                        Ok(1)
                    }
                    None => {
                        out.field("witness", "invalid");
                        Ok(2)
                    }
                }
            } else {
                let path = expansion.expect("clap enforces one of the two");
                let e: NCPoly<BigInt> = read_vec(&path)?;
                let signed: Vec<(i64, Word)> = e
                    .terms()
                    .map(|(w, c)| {
                        let c = ncschur::scalar::to_i64(c).context("coefficient out of range")?;
                        Ok((c, w.clone()))
                    })
                    .collect::<Result<_>>()?;
                let ok = verify_expansion(&j, &signed, &ideal)?;
                out.field("expansion", if ok { "valid" } else { "invalid" });
                Ok(flag_code(ok))
            }
        }
        PosCmd::Search { p } => {
            let (lambda, _, ideal) = setup(&p)?;
            let r = search_expansions(&lambda, &ideal)?;
            out.field("candidates", r.candidates);
            out.field("expansions", r.expansions.len());
            for e in &r.expansions {
                let text: Vec<String> = e.iter().map(|w| w.to_text(p.n)).collect();
                out.field("expansion", text.join(" "));
            }
            Ok(0)
        }
    }
}

fn lp_harness(family: &str, a: &ConjArgs, out: &mut Out) -> Result<u8> {
    let ideal = IdealExpr::parse(family, a.n)?;
    let lambdas: Vec<Partition> = (1..=a.dmax).flat_map(Partition::all).collect();
    let verdicts: Vec<ncschur::Result<Verdict>> = lambdas
        .par_iter()
        .map(|l| q_monomial_positive(&nc_schur_e(l, a.n), &ideal))
        .collect();
    let mut violations = 0;
    for (l, v) in lambdas.iter().zip(verdicts) {
        match v? {
            Verdict::Positive(_) => out.field(&format!("J[{l}]"), "positive"),
            Verdict::NotPositive(w) => {
                violations += 1;
                out.field(&format!("J[{l}]"), format!("VIOLATION (pairing {})", w.pairing));
            }
        }
    }
    out.field("violations", violations);
    Ok(0)
}

fn conjecture(cmd: ConjCmd, out: &mut Out) -> Result<u8> {
    match cmd {
        ConjCmd::Aba { k, a } => lp_harness(&format!("Iaba:{k}"), &a, out),
        ConjCmd::Assaf { k, a } => lp_harness(&format!("Iassaf:{k}"), &a, out),
        ConjCmd::Sqread { a } => {
            let specs = [IdealSpec::parse("IlamLE:3", a.n)?, IdealSpec::parse("Iassaf:3", a.n)?];
            let lambdas: Vec<Partition> = (1..=a.dmax).flat_map(Partition::all).collect();
            let results: Vec<ncschur::Result<bool>> = lambdas
                .par_iter()
                .map(|l| {
                    let j = nc_schur_e(l, a.n).embed::<Q>();
                    let mut sq: NCPoly<Q> = NCPoly::zero();
                    for t in enumerate(&TableauKind::Rsst { n: a.n }, l) {
                        sq.add_term(t.sqread(), Q::from_integer(1.into()));
                    }
                    congruent_all(&j, &sq, &specs)
                })
                .collect();
            let mut violations = 0;
            for (l, r) in lambdas.iter().zip(results) {
                let ok = r?;
                violations += usize::from(!ok);
                out.field(&format!("J[{l}]"), if ok { "holds" } else { "VIOLATION" });
            }
            out.field("violations", violations);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = Out::new(cli.format);
    let code = match run(cli, &mut out) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if out.flush().is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
