use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hopf_forests::contraction::{c_ck_d, coaction_check};
use hopf_forests::cut_hopf::h_ck_d;
use hopf_forests::forest::enumerate::{self, edge_decorated, packed_word_list, permutation_words, vertex_decorated};
use hopf_forests::forest::{
    atoms, Atom, DecoratedForest, EdgeForest, EdgeTree, Family, Flat, Grading, LabeledForest, RootedForest,
};
use hopf_forests::linear::{fmt_q, LinComb};
use hopf_forests::morphisms::{
    heap_ordered_to_permutation, max_word, phi_violations, phi_wqsym, theta, theta_violations,
};
use hopf_forests::prelie::{compre_lie_check, generation_span};
use hopf_forests::registry::{algebra, Options, ALGEBRA_NAMES};
use hopf_forests::series::{
    cho_recursion, cho_table_live, dimension_table, embedded_by_name, packed_word_table, tree_table,
    DimensionTable, Shape, CHO_BY_LENGTH, EMBEDDED,
};
use hopf_forests::universal::{Lift, Seed, Target, VTree};
use hopf_forests::words::{Bracket, DWord, Word};
use hopf_forests::Error;

#[derive(Parser)]
#[command(name = "hopf", version, about = "Exact Hopf algebras of rooted forests and words")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Plain,
    Tsv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BracketArg {
    Free,
    Zero,
}

#[derive(Args, Clone)]
struct AlgebraArgs {
    /// Registered algebra name, e.g. h-ck, c-po, wqsym-star, csh-d.
    #[arg(long)]
    algebra: String,
    /// Decoration atoms of the decorated algebras.
    #[arg(long, default_value = "a,b")]
    atoms: String,
    /// Bracket of csh-d.
    #[arg(long, value_enum, default_value_t = BracketArg::Free)]
    bracket: BracketArg,
    /// Largest bracket letter enumerated by csh-d.
    #[arg(long, default_value_t = 4)]
    max_letter: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Lists the basis of a family degree by degree.
    Enumerate {
        /// A forest family, `vertex-decorated`, `edge-decorated`,
        /// `permutations` or `packed-words`.
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "vertices")]
        grading: String,
        /// Drop forests with isolated vertices.
        #[arg(long)]
        quotient: bool,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value = "a,b")]
        atoms: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Product of basis elements, left to right.
    Product {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// Coproduct of a basis element.
    Coproduct {
        #[command(flatten)]
        alg: AlgebraArgs,
        element: String,
    },
    /// Antipode of a basis element.
    Antipode {
        #[command(flatten)]
        alg: AlgebraArgs,
        element: String,
    },
    /// Applies one of the morphisms to a forest.
    Morphism {
        /// theta, phi-wqsym, m-word, ho-perm, hck-sh, hck-csh, cck-sh,
        /// cck-csh or arbor.
        #[arg(long)]
        name: String,
        /// `arbor`, `symbolic`, or a file of lines `tree => value`.
        #[arg(long)]
        seed: Option<String>,
        #[arg(long, value_enum, default_value_t = BracketArg::Free)]
        bracket: BracketArg,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        forest: String,
    },
    /// Runs a verification suite; exits 1 on failure.
    Check {
        /// hopf (alias axioms), comodule, prelie, morphisms or series.
        #[arg(long)]
        suite: String,
        /// Algebra of the hopf suite; all of them when omitted.
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, default_value = "a,b")]
        atoms: String,
    },
    /// Prints a dimension table next to the printed values; exits 1 on a
    /// mismatch.
    Series {
        /// A forest family or `packed-words`.
        #[arg(long)]
        family: Option<String>,
        /// A printed table by name (H_po, C_CK, C_NCK trees, C_ho, ...), or
        /// `cho` for the C_ho table by edges and length.
        #[arg(long)]
        table: Option<String>,
        #[arg(long, default_value = "vertices")]
        grading: String,
        #[arg(long)]
        quotient: bool,
        /// Count trees instead of forests.
        #[arg(long)]
        trees: bool,
        #[arg(long, alias = "max-degree", default_value_t = 5)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Echoes the canonical form of a forest or word.
    Parse {
        /// Validate and canonicalize in this algebra.
        #[arg(long)]
        algebra: Option<String>,
        /// Validate as a labeled forest of this family.
        #[arg(long)]
        family: Option<String>,
        element: String,
    },
}

fn options(alg: &AlgebraArgs) -> Options {
    Options {
        atoms: atoms(&alg.atoms),
        bracket: bracket(alg.bracket),
        max_letter: alg.max_letter,
    }
}

fn bracket(b: BracketArg) -> Bracket {
    match b {
        BracketArg::Free => Bracket::Free,
        BracketArg::Zero => Bracket::Zero,
    }
}

fn print_expr(e: &hopf_forests::registry::Expr, format: Format) {
    match format {
        Format::Plain => println!("{e}"),
        Format::Tsv => print!("{}", e.tsv()),
    }
}

fn print_lin<B: Ord + Clone + std::fmt::Display>(x: &LinComb<B>, format: Format) {
    match format {
        Format::Plain => println!("{x}"),
        Format::Tsv => {
            for (b, c) in x.iter() {
                println!("{}\t{b}", fmt_q(c));
            }
        }
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.cmd {
        Cmd::Enumerate {
            family,
            grading,
            quotient,
            max_degree,
            count_only,
            atoms: atom_list,
            format,
        } => {
            let grading = Grading::parse(&grading)?;
            let ab = atoms(&atom_list);
            for n in 0..=max_degree {
                let items: Vec<String> = match family.replace('_', "-").as_str() {
                    "permutations" => permutation_words(n).into_iter().map(|w| Word(w).to_string()).collect(),
                    "packed-words" => packed_word_list(n).into_iter().map(|w| Word(w).to_string()).collect(),
                    "vertex-decorated" => strings(vertex_decorated(&ab, grading, n, quotient)?),
                    "edge-decorated" => strings(edge_decorated(&ab, n)),
                    other => match Family::parse(other)? {
                        Family::Rooted => strings(enumerate::rooted(grading, n, quotient)?),
                        Family::Planar => strings(enumerate::planar(grading, n, quotient)?),
                        f => strings(enumerate::labeled(f, grading, n, quotient)?),
                    },
                };
                match (count_only, format) {
                    (true, Format::Plain) => println!("{n} {}", items.len()),
                    (true, Format::Tsv) => println!("{n}\t{}", items.len()),
                    (false, Format::Plain) => items.iter().for_each(|s| println!("{s}")),
                    (false, Format::Tsv) => items.iter().for_each(|s| println!("{n}\t{s}")),
                }
            }
            Ok(true)
        }
        Cmd::Product { alg, factors } => {
            let a = algebra(&alg.algebra, &options(&alg))?;
            let refs: Vec<&str> = factors.iter().map(String::as_str).collect();
            print_expr(&a.product(&refs)?, alg.format);
            Ok(true)
        }
        Cmd::Coproduct { alg, element } => {
            let a = algebra(&alg.algebra, &options(&alg))?;
            print_expr(&a.coproduct(&element)?, alg.format);
            Ok(true)
        }
        Cmd::Antipode { alg, element } => {
            let a = algebra(&alg.algebra, &options(&alg))?;
            print_expr(&a.antipode(&element)?, alg.format);
            Ok(true)
        }
        Cmd::Morphism {
            name,
            seed,
            bracket: br,
            format,
            forest,
        } => morphism(&name, seed.as_deref(), bracket(br), format, &forest).map(|_| true),
        Cmd::Check {
            suite,
            algebra: name,
            max_degree,
            atoms: atom_list,
        } => check(&suite, name.as_deref(), max_degree, &atoms(&atom_list)),
        Cmd::Series {
            family,
            table,
            grading,
            quotient,
            trees,
            max_n,
            format,
        } => series(family.as_deref(), table.as_deref(), &grading, quotient, trees, max_n, format),
        Cmd::Parse {
            algebra: name,
            family,
            element,
        } => {
            println!("{}", canonical(name.as_deref(), family.as_deref(), &element)?);
            Ok(true)
        }
    }
}

fn strings<T: ToString>(xs: Vec<T>) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn canonical(name: Option<&str>, family: Option<&str>, s: &str) -> Result<String, Error> {
    if let Some(name) = name {
        return algebra(name, &Options::default())?.canonical(s);
    }
    if let Some(family) = family {
        return Ok(hopf_forests::forest::parse_labeled(s, Family::parse(family)?)?.to_string());
    }
    if s.trim_start().starts_with('(') {
        return Ok(DWord::parse(s)?.to_string());
    }
    // The first grammar that accepts the input wins.
    RootedForest::parse_canonical(s)
        .map(|f| f.to_string())
        .or_else(|_| LabeledForest::parse_canonical(s).map(|f| f.to_string()))
        .or_else(|_| DecoratedForest::parse_canonical(s).map(|f| f.to_string()))
        .or_else(|_| EdgeForest::parse_canonical(s).map(|f| f.to_string()))
}

fn vertex_atoms(f: &DecoratedForest) -> Vec<Atom> {
    let set: BTreeSet<Atom> = Flat::from_forest(f).label.into_iter().collect();
    set.into_iter().collect()
}

fn edge_atoms(f: &EdgeForest) -> Vec<Atom> {
    let set: BTreeSet<Atom> = Flat::from_forest(f).edge.into_iter().flatten().collect();
    set.into_iter().collect()
}

fn seed_of<T>(choice: Option<&str>, default_arbor: bool) -> Result<Seed<T>, Error>
where
    T: hopf_forests::universal::SeedTree,
{
    match choice {
        Some("arbor") => Ok(Seed::Arborification),
        Some("symbolic") => Ok(Seed::Symbolic),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Contract(format!("cannot read seed file {path}: {e}")))?;
            Seed::parse_table(&text)
        }
        None if default_arbor => Ok(Seed::Arborification),
        None => Ok(Seed::Symbolic),
    }
}

fn morphism(name: &str, seed: Option<&str>, br: Bracket, format: Format, forest: &str) -> Result<(), Error> {
    let target = |quasi: bool| if quasi { Target::QuasiShuffle(br.clone()) } else { Target::Shuffle };
    match name.replace('_', "-").as_str() {
        "theta" => print_lin(&theta(&LabeledForest::parse_canonical(forest)?)?, format),
        "phi-wqsym" => print_lin(&phi_wqsym(&LabeledForest::parse_canonical(forest)?)?, format),
        "m-word" => println!("{}", max_word(&LabeledForest::parse_canonical(forest)?)?),
        "ho-perm" => println!("{}", heap_ordered_to_permutation(&LabeledForest::parse_canonical(forest)?)?),
        n @ ("hck-sh" | "hck-csh" | "arbor") => {
            let f = DecoratedForest::parse_canonical(forest)?;
            let h = h_ck_d(vertex_atoms(&f));
            let seed: Seed<VTree> = seed_of(seed, n == "arbor")?;
            print_lin(&Lift::new(&h, target(n == "hck-csh"), &seed).apply(&f)?, format);
        }
        n @ ("cck-sh" | "cck-csh") => {
            let f = EdgeForest::parse_canonical(forest)?;
            let h = c_ck_d(edge_atoms(&f));
            let seed: Seed<EdgeTree> = seed_of(seed, false)?;
            print_lin(&Lift::new(&h, target(n == "cck-csh"), &seed).apply(&f)?, format);
        }
        other => {
            return Err(Error::UnknownName {
                kind: "morphism",
                name: other.to_string(),
                expected: "theta, phi-wqsym, m-word, ho-perm, hck-sh, hck-csh, cck-sh, cck-csh, arbor".into(),
            })
        }
    }
    Ok(())
}

/// Degrees used by the hopf suite when none is given.
fn default_degree(name: &str) -> usize {
    match name {
        "h-ck" | "h-nck" | "h-o" | "h-ho" => 5,
        "c-po" | "c-o" | "c-ho" | "c-hpo" | "h-ck-d" | "h-nck-d" | "c-ck-d" => 3,
        _ => 4,
    }
}

fn check(suite: &str, name: Option<&str>, max: Option<usize>, ab: &[Atom]) -> Result<bool, Error> {
    let mut out = String::new();
    let ok = match suite {
        "hopf" | "axioms" => {
            let names: Vec<&str> = match name {
                Some(n) => vec![n],
                None => ALGEBRA_NAMES.to_vec(),
            };
            let opts = Options {
                atoms: ab.to_vec(),
                ..Options::default()
            };
            let mut ok = true;
            for n in names {
                let rep = algebra(n, &opts)?.check(max.unwrap_or_else(|| default_degree(n)));
                writeln!(out, "{} {rep}", status(rep.passed())).unwrap();
                for f in &rep.failures {
                    writeln!(out, "  {f}").unwrap();
                }
                ok &= rep.passed();
            }
            ok
        }
        "comodule" => {
            let rep = coaction_check(max.unwrap_or(3));
            writeln!(
                out,
                "{} C_NCK coaction up to {} edges: {} forests, {} terms",
                status(rep.passed()),
                rep.max_edges,
                rep.forests_checked,
                rep.terms_checked
            )
            .unwrap();
            rep.violations.iter().for_each(|v| writeln!(out, "  {v}").unwrap());
            rep.passed()
        }
        "prelie" => {
            let max = max.unwrap_or(3);
            let trees: Vec<EdgeTree> = (1..=max)
                .flat_map(|n| enumerate::trees_only(edge_decorated(&ab[..1], n)))
                .collect();
            let mut bad = 0;
            let mut triples = 0;
            for x in &trees {
                for y in &trees {
                    for z in &trees {
                        let (x, y, z) = (LinComb::basis(x.clone()), LinComb::basis(y.clone()), LinComb::basis(z.clone()));
                        let rep = compre_lie_check(&x, &y, &z);
                        triples += 1;
                        if !rep.passed() {
                            bad += 1;
                            writeln!(out, "  {x}, {y}, {z}: {:?}", rep.failures).unwrap();
                        }
                    }
                }
            }
            writeln!(out, "{} ComPreLie identities on {triples} tree triples", status(bad == 0)).unwrap();
            let span = generation_span(max + 1, ab);
            for (n, dim, count) in &span.rows {
                writeln!(out, "  {n} edges: span {dim}, trees {count}").unwrap();
            }
            writeln!(out, "{} generation by E(d) over {} atoms", status(span.passed()), ab.len()).unwrap();
            bad == 0 && span.passed()
        }
        "morphisms" => {
            let max = max.unwrap_or(4);
            let t = theta_violations(max);
            let p = phi_violations(max);
            writeln!(out, "{} Θ is a Hopf morphism up to degree {max}", status(t.is_empty())).unwrap();
            t.iter().for_each(|v| writeln!(out, "  {v}").unwrap());
            writeln!(out, "{} Φ is a Hopf morphism up to degree {max}", status(p.is_empty())).unwrap();
            p.iter().for_each(|v| writeln!(out, "  {v}").unwrap());
            t.is_empty() && p.is_empty()
        }
        "series" => {
            let max = max.unwrap_or(5);
            let mut ok = true;
            for e in EMBEDDED {
                let n = max.min(e.first + e.values.len() - 1);
                let table = table_for(e.family, e.grading, e.quotient, e.shape, n)?;
                writeln!(out, "{} {}", status(table.passed()), table.name).unwrap();
                table.mismatches().iter().for_each(|m| writeln!(out, "  {m}").unwrap());
                ok &= table.passed();
            }
            let cho = cho_table_live(max, max);
            let cho_ok = (0..=max.min(5)).all(|n| (0..=max.min(5)).all(|l| cho[n][l] == CHO_BY_LENGTH[n][l]))
                && (0..=max.min(5)).all(|n| (0..=max.min(5)).all(|l| cho_recursion(n, l) == CHO_BY_LENGTH[n][l] as u128));
            writeln!(out, "{} C_ho by edges and length", status(cho_ok)).unwrap();
            ok && cho_ok
        }
        other => {
            return Err(Error::UnknownName {
                kind: "suite",
                name: other.to_string(),
                expected: "hopf, axioms, comodule, prelie, morphisms, series".into(),
            })
        }
    };
    print!("{out}");
    Ok(ok)
}

fn table_for(
    family: Option<Family>,
    grading: Grading,
    quotient: bool,
    shape: Shape,
    n: usize,
) -> Result<DimensionTable, Error> {
    match (family, shape) {
        (None, _) => Ok(packed_word_table(n)),
        (Some(f), Shape::Forests) => dimension_table(f, grading, quotient, n),
        (Some(f), Shape::Trees) => tree_table(f, grading, quotient, n),
    }
}

fn series(
    family: Option<&str>,
    table: Option<&str>,
    grading: &str,
    quotient: bool,
    trees: bool,
    max_n: usize,
    format: Format,
) -> Result<bool, Error> {
    if table.is_some_and(|t| t.eq_ignore_ascii_case("cho")) {
        let live = cho_table_live(max_n, max_n);
        let mut ok = true;
        for (n, row) in live.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            match format {
                Format::Plain => println!("{n:>3}  {}", cells.join(" ")),
                Format::Tsv => println!("{n}\t{}", cells.join("\t")),
            }
            for (l, v) in row.iter().enumerate() {
                ok &= cho_recursion(n, l) == *v as u128;
                if n < 6 && l < 6 {
                    ok &= CHO_BY_LENGTH[n][l] == *v;
                }
            }
        }
        println!("{}", status(ok));
        return Ok(ok);
    }
    let t = match (table, family) {
        (Some(name), _) => {
            let e = embedded_by_name(name).ok_or_else(|| Error::UnknownName {
                kind: "table",
                name: name.to_string(),
                expected: EMBEDDED.iter().map(|e| e.name).chain(["cho"]).collect::<Vec<_>>().join(", "),
            })?;
            table_for(e.family, e.grading, e.quotient, e.shape, max_n)?
        }
        (None, Some(f)) if f.replace('_', "-") == "packed-words" => packed_word_table(max_n),
        (None, Some(f)) => {
            let shape = if trees { Shape::Trees } else { Shape::Forests };
            table_for(Some(Family::parse(f)?), Grading::parse(grading)?, quotient, shape, max_n)?
        }
        (None, None) => return Err(Error::Contract("series needs --family or --table".into())),
    };
    match format {
        Format::Plain => print!("{t}"),
        Format::Tsv => {
            for r in &t.rows {
                let e = r.expected.map_or("-".to_string(), |v| v.to_string());
                println!("{}\t{}\t{e}", r.n, r.live);
            }
        }
    }
    println!("{}", status(t.passed()));
    Ok(t.passed())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
