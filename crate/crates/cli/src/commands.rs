use std::fmt::Write as _;

use braidkit::bmod::{
    hopf_module_to_braided, regular_dual_hopf_module, regular_hopf_module, BraidedModule, Side,
};
use braidkit::braid::{
    bialgebra_crossed_data, build_b, build_b_prime, extract_antipode, sigma_ass, BraidedSystem,
};
use braidkit::btp::{
    check_algebra_map, check_associativity, enveloping_algebra, factor_permutation_iso, group_crossed_data,
    heisenberg, named_member, smash_left, theta_w, two_sided_crossed, w_algebra, AssocMode, BraidedTensorAlgebra,
};
use braidkit::format::AlgebraFile;
use braidkit::homology::{
    bar_complex, bicomplex_homology, format_table, gs_bicomplex, homology_dims, hochschild_complex, ps_bicomplex,
    ps_bicomplex_hopf, Direction, HomologyEntry,
};
use braidkit::hopf::{
    check_antipode, check_bialgebra, check_coalgebra, check_uaa, dual_bialgebra, solve_antipode, Bialgebra,
};
use braidkit::perm::Perm;
use braidkit::report::Report;
use braidkit::shuffle::check_qsh_associativity;
use braidkit::tensorspace::{embed_at, swap, BasedSpace};
use braidkit::{Error, Field, LinMap, Result};

use crate::input::{load, target_field, Loaded};
use crate::{
    AntipodeMethod, Axioms, Cli, Coefficients, Command, Construction, DirectionArg, HomologyKind, Outcome, SystemKind,
};

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Check { file, axioms } => check(cli, file, *axioms),
        Command::Ybe { file, system } => ybe(cli, file, *system),
        Command::Build { construction, files, theta, output } => {
            let t = build(cli, *construction, files, theta.as_deref())?;
            emit_product(cli, &t, &product_name(*construction, files), output.as_deref())
        }
        Command::Permute { product, theta, output } => permute(cli, product, theta, output.as_deref()),
        Command::Antipode { file, method } => antipode(cli, file, *method),
        Command::Homology { kind, file, max_degree, variant, direction, coefficients } => {
            homology(cli, *kind, file, *max_degree, *variant, *direction, *coefficients)
        }
        Command::ShuffleTest { file, max_degree, system } => shuffle_test(cli, file, *max_degree, *system),
    }
}

fn meta(cli: &Cli, msg: impl AsRef<str>) {
    if !cli.quiet {
        eprintln!("# {}", msg.as_ref());
    }
}

fn open(cli: &Cli, path: &str) -> Result<Loaded> {
    let l = load(path, cli.field.as_deref())?;
    meta(cli, format!("{}: {} over {}, dim {}", l.origin, l.file.name, l.field(), l.file.dim()));
    Ok(l)
}

fn bialgebra(cli: &Cli, path: &str) -> Result<Bialgebra> {
    open(cli, path)?.bialgebra(!cli.unchecked)
}

fn guard(cli: &Cli, what: &str, estimate: u128) -> Result<()> {
    if estimate > cli.memory_cap as u128 {
        return Err(Error::TooLarge(format!(
            "{what} needs a space of about {estimate} basis elements, above the cap of {}",
            cli.memory_cap
        )));
    }
    Ok(())
}

fn pow(d: usize, n: usize) -> u128 {
    (d as u128).saturating_pow(n as u32)
}

fn finish(rep: &Report) -> Outcome {
    print!("{rep}");
    if !rep.to_string().ends_with('\n') {
        println!();
    }
    if rep.is_clean() {
        Outcome::Clean
    } else {
        Outcome::Violation
    }
}

fn check(cli: &Cli, path: &str, axioms: Option<Axioms>) -> Result<Outcome> {
    let l = open(cli, path)?;
    let axioms = axioms.unwrap_or(match (l.file.has_coalgebra(), l.file.antipode.is_some()) {
        (false, _) => Axioms::Uaa,
        (true, false) => Axioms::Bialg,
        (true, true) => Axioms::Hopf,
    });
    meta(cli, format!("axioms: {axioms:?}").to_lowercase());
    let rep = match axioms {
        Axioms::Uaa => check_uaa(&l.algebra(false)?),
        Axioms::Coalg => check_coalgebra(&l.bialgebra(false)?.coalgebra()),
        Axioms::Bialg => check_bialgebra(&l.bialgebra(false)?),
        Axioms::Hopf => {
            let h = l.bialgebra(false)?;
            let mut rep = check_bialgebra(&h);
            if h.antipode.is_some() {
                rep.merge(check_antipode(&h));
            } else if solve_antipode(&h).is_none() {
                rep.push("antipode exists", vec![], "the convolution identities have no solution");
            }
            rep
        }
    };
    Ok(finish(&rep))
}

fn system(h: &Bialgebra, kind: SystemKind) -> Result<BraidedSystem> {
    Ok(match kind {
        SystemKind::B => build_b(h),
        SystemKind::BPrime => build_b_prime(h),
        SystemKind::Ass => BraidedSystem::single(h.space.clone(), sigma_ass(&h.algebra()))?,
    })
}

fn ybe(cli: &Cli, path: &str, kind: SystemKind) -> Result<Outcome> {
    let h = bialgebra(cli, path)?;
    let s = system(&h, kind)?;
    meta(cli, format!("system {kind:?}, dims {:?}", s.dims()));
    Ok(finish(&s.check_ybe()))
}

fn stem(path: &str) -> String {
    let name = std::path::Path::new(path).file_name().and_then(|s| s.to_str()).unwrap_or(path);
    name.trim_end_matches(".json").to_string()
}

fn product_name(c: Construction, files: &[String]) -> String {
    let args: Vec<String> = files.iter().map(|f| stem(f)).collect();
    let label = match c {
        Construction::Heisenberg => "heisenberg",
        Construction::Enveloping => "enveloping",
        Construction::W => "W",
        Construction::ThetaW => "thetaW",
        Construction::Smash => "smash",
        Construction::TwoSided => "two-sided",
    };
    format!("{label}({})", args.join(","))
}

fn parse_theta(s: &str, n: usize) -> Result<Perm> {
    if let Some(p) = named_member(s.trim()).filter(|p| p.len() == n) {
        return Ok(p);
    }
    let p = Perm::parse(s, n)?;
    if p.len() != n {
        return Err(Error::Parse(format!("permutation {s:?} has {} letters, expected {n}", p.len())));
    }
    Ok(p)
}

fn arity(c: Construction, files: &[String], allowed: std::ops::RangeInclusive<usize>) -> Result<()> {
    if !allowed.contains(&files.len()) {
        return Err(Error::Invalid(format!("{c:?} takes {allowed:?} files, got {}", files.len()).to_lowercase()));
    }
    Ok(())
}

/// `h ⊗ a ↦ h_(1) a S(h_(2))`.
fn adjoint_action(h: &Bialgebra) -> Result<LinMap> {
    let s = match &h.antipode {
        Some(s) => s.clone(),
        None => solve_antipode(h).ok_or_else(|| Error::NotInvertible("the adjoint action needs an antipode".into()))?,
    };
    let d = h.dim();
    let f = h.field();
    let split = h.comul.kron(&LinMap::identity(f, d));
    let shuffle = embed_at(&swap(f, d, d), 2, 2, &[d, d, d])?;
    let anti = embed_at(&s, 3, 1, &[d, d, d])?;
    let left = h.mul.kron(&LinMap::identity(f, d));
    LinMap::chain(&[&h.mul, &left, &anti, &shuffle, &split])
}

fn build(cli: &Cli, c: Construction, files: &[String], theta: Option<&str>) -> Result<BraidedTensorAlgebra> {
    if theta.is_some() && c != Construction::ThetaW {
        return Err(Error::Invalid("--theta only applies to thetaW".into()));
    }
    let estimate = |cli: &Cli, dim: usize| guard(cli, "the product multiplication", pow(dim, 2));
    match c {
        Construction::Heisenberg | Construction::W | Construction::ThetaW => {
            arity(c, files, 1..=1)?;
            let h = bialgebra(cli, &files[0])?;
            estimate(cli, h.dim().pow(if c == Construction::Heisenberg { 2 } else { 4 }))?;
            match c {
                Construction::Heisenberg => heisenberg(&h),
                Construction::W => w_algebra(&h),
                _ => {
                    let t = theta.ok_or_else(|| Error::Invalid("thetaW needs --theta".into()))?;
                    Ok(theta_w(&h, &parse_theta(t, 4)?)?.0)
                }
            }
        }
        Construction::Enveloping => {
            arity(c, files, 1..=1)?;
            let a = open(cli, &files[0])?.algebra(!cli.unchecked)?;
            estimate(cli, a.dim().pow(2))?;
            enveloping_algebra(&a)
        }
        Construction::Smash => {
            arity(c, files, 1..=2)?;
            let h = bialgebra(cli, &files[0])?;
            let (a, lambda) = match files.get(1) {
                Some(p) => {
                    let a = open(cli, p)?.algebra(!cli.unchecked)?;
                    let lambda = h.counit.kron(&LinMap::identity(h.field(), a.dim()));
                    (a, lambda)
                }
                None => (h.algebra(), adjoint_action(&h)?),
            };
            estimate(cli, a.dim() * h.dim())?;
            smash_left(&a, &h, &lambda)
        }
        Construction::TwoSided => {
            arity(c, files, 0..=1)?;
            let data = match files.first() {
                Some(p) => bialgebra_crossed_data(&bialgebra(cli, p)?),
                None => group_crossed_data(target_field(cli.field.as_deref(), Field::Rational)?),
            };
            estimate(cli, data.a.dim() * data.c.dim() * data.b.dim())?;
            two_sided_crossed(&data)
        }
    }
}

fn certificate(t: &BraidedTensorAlgebra) -> Report {
    check_associativity(&t.algebra, AssocMode::Exhaustive)
}

fn emit_product(cli: &Cli, t: &BraidedTensorAlgebra, name: &str, output: Option<&str>) -> Result<Outcome> {
    let json = AlgebraFile::from_algebra(name, &t.algebra).to_canonical_string();
    let rep = certificate(t);
    let cert = format!("associativity ({name}, dim {}): {rep}", t.algebra.dim());
    meta(cli, format!("system dims {:?}", t.source.dims()));
    match output {
        Some(path) => {
            std::fs::write(path, &json).map_err(|e| Error::Invalid(format!("{path}: {e}")))?;
            print!("{cert}");
            if !cert.ends_with('\n') {
                println!();
            }
        }
        None => {
            print!("{json}");
            eprintln!("{}", cert.trim_end());
        }
    }
    Ok(if rep.is_clean() { Outcome::Clean } else { Outcome::Violation })
}

/// `construction(file[,file])`.
fn parse_product(expr: &str) -> Result<(Construction, Vec<String>)> {
    let bad = || Error::Parse(format!("expected construction(file), got {expr:?}"));
    let t = expr.trim();
    let open = t.find('(').ok_or_else(bad)?;
    let inner = t[open + 1..].strip_suffix(')').ok_or_else(bad)?;
    let c = match &t[..open] {
        "heisenberg" => Construction::Heisenberg,
        "enveloping" => Construction::Enveloping,
        "W" => Construction::W,
        "smash" => Construction::Smash,
        "two-sided" => Construction::TwoSided,
        other => return Err(Error::Parse(format!("unknown construction {other:?}"))),
    };
    let files = inner.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect();
    Ok((c, files))
}

fn dense_dump(m: &LinMap) -> String {
    let mut out = String::new();
    for row in m.to_dense() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", cells.join("\t"));
    }
    out
}

fn permute(cli: &Cli, product: &str, theta: &str, output: Option<&str>) -> Result<Outcome> {
    let (c, files) = parse_product(product)?;
    let t = build(cli, c, &files, None)?;
    let p = parse_theta(theta, t.source.rank())?;
    let (target, iso) = factor_permutation_iso(&t, &p)?;
    let mut rep = check_algebra_map(&iso, &t.algebra, &target.algebra);
    if iso.try_inverse().is_none() {
        rep.push("isomorphism is invertible", vec![], "singular");
    }
    println!("product: {}", product_name(c, &files));
    println!("theta: {p}");
    println!("dim: {}", t.algebra.dim());
    println!("iso:");
    print!("{}", dense_dump(&iso));
    print!("algebra map: {rep}");
    if !rep.to_string().ends_with('\n') {
        println!();
    }
    if let Some(path) = output {
        let name = format!("{}·{}", p, product_name(c, &files));
        std::fs::write(path, AlgebraFile::from_algebra(&name, &target.algebra).to_canonical_string())
            .map_err(|e| Error::Invalid(format!("{path}: {e}")))?;
    }
    Ok(if rep.is_clean() { Outcome::Clean } else { Outcome::Violation })
}

fn antipode(cli: &Cli, path: &str, method: AntipodeMethod) -> Result<Outcome> {
    let h = bialgebra(cli, path)?;
    let plain = h.with_antipode(None);
    let solved = solve_antipode(&plain);
    let braided = extract_antipode(&plain);
    let chosen = match method {
        AntipodeMethod::Solve => &solved,
        AntipodeMethod::Braiding => &braided,
    };
    match chosen {
        Some(s) => print!("{}", dense_dump(s)),
        None => println!("none"),
    }
    let agree = solved == braided;
    println!("agreement: {}", if agree { "yes" } else { "no" });
    Ok(if agree { Outcome::Clean } else { Outcome::Violation })
}

fn direction(d: DirectionArg) -> Direction {
    match d {
        DirectionArg::Total => Direction::Total,
        DirectionArg::Rows => Direction::Rows,
        DirectionArg::Columns => Direction::Columns,
    }
}

fn graded(dims: Vec<usize>) -> Vec<HomologyEntry> {
    dims.into_iter().enumerate().map(|(n, dim)| HomologyEntry { n, m: None, dim }).collect()
}

/// The ground field as a module through the counit.
fn trivial_module(h: &Bialgebra) -> (BasedSpace, LinMap) {
    (BasedSpace::unit(), h.counit.clone())
}

fn homology(
    cli: &Cli,
    kind: HomologyKind,
    path: &str,
    max_degree: usize,
    variant: u8,
    dir: DirectionArg,
    coefficients: Option<Coefficients>,
) -> Result<Outcome> {
    // one degree beyond the table so that its top row has incoming maps
    let top = max_degree + 1;
    let l = open(cli, path)?;
    let entries = match kind {
        HomologyKind::Gs | HomologyKind::Ps => {
            let h = l.bialgebra(!cli.unchecked)?;
            let b = if kind == HomologyKind::Gs {
                if coefficients.is_some() {
                    return Err(Error::Invalid("gs takes no coefficients".into()));
                }
                guard(cli, "the top bidegree", pow(h.dim(), top))?;
                gs_bicomplex(&h, variant, top)?
            } else {
                let co = coefficients.unwrap_or(Coefficients::Regular);
                let m = regular_hopf_module(&h);
                match co {
                    Coefficients::Regular => {
                        guard(cli, "the top bidegree", pow(h.dim(), top + 2))?;
                        ps_bicomplex_hopf(&h, &m, &regular_dual_hopf_module(&h), top)?
                    }
                    Coefficients::Character => {
                        guard(cli, "the top bidegree", pow(h.dim(), top + 1))?;
                        let mm = hopf_module_to_braided(&h, &m)?;
                        let mut nn = BraidedModule::unit_object(&mm.system, Side::Left);
                        nn.actions[1] = dual_bialgebra(&h).counit;
                        ps_bicomplex(&h, &mm, &nn, top)?
                    }
                    Coefficients::Trivial => {
                        return Err(Error::Invalid(
                            "the ground field with both counits is not a module over B(H); use regular or character"
                                .into(),
                        ))
                    }
                }
            };
            meta(cli, format!("{}, total degree up to {top}", b.name));
            bicomplex_homology(&b, direction(dir))?
        }
        HomologyKind::Bar | HomologyKind::Hochschild => {
            if dir != DirectionArg::Total {
                return Err(Error::Invalid(format!("{kind:?} complexes are single-graded").to_lowercase()));
            }
            let a = l.algebra(!cli.unchecked)?;
            let default = if kind == HomologyKind::Bar { Coefficients::Trivial } else { Coefficients::Regular };
            let (space, rho, lambda) = match coefficients.unwrap_or(default) {
                Coefficients::Trivial => {
                    let (sp, eps) = trivial_module(&l.bialgebra(!cli.unchecked).map_err(|_| {
                        Error::Invalid("trivial coefficients need a counit in the file".into())
                    })?);
                    (sp, eps.clone(), eps)
                }
                Coefficients::Regular => (a.space.clone(), a.mul.clone(), a.mul.clone()),
                Coefficients::Character => return Err(Error::Invalid("character coefficients are for ps".into())),
            };
            guard(cli, "the top degree", pow(a.dim(), top).saturating_mul(space.dim() as u128))?;
            let c = if kind == HomologyKind::Bar {
                bar_complex(&a, &space, &rho, top)?
            } else {
                hochschild_complex(&a, &space, &rho, &lambda, top)?
            };
            meta(cli, format!("{} complex, degree up to {top}", c.name));
            graded(homology_dims(&c)?)
        }
    };
    print!("{}", format_table(&entries));
    Ok(Outcome::Clean)
}

fn shuffle_test(cli: &Cli, path: &str, max_degree: usize, kind: SystemKind) -> Result<Outcome> {
    let h = bialgebra(cli, path)?;
    let s = system(&h, kind)?;
    let width: usize = s.dims().iter().sum();
    guard(cli, "the largest word space", pow(width, max_degree))?;
    meta(cli, format!("system {kind:?}, dims {:?}", s.dims()));
    Ok(finish(&check_qsh_associativity(&s, max_degree)?))
}
