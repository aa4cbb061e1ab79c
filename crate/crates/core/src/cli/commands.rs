use super::{out_dir, parse_group, AnalyzeCommand, Cli, CliError, Command, FlipsCommand, Input, Output};
use crate::analysis::{
    edge_matrix_npq, fixed_point_complex, intersection_table, s_distribution, symmetry_group,
    tournament_automorphisms,
};
use crate::complex::{parse_complex, Complex, VertexSet};
use crate::flips::{
    bistellar_options, build_k_s, distinguished_triples, k2_triple, nu_parameters, nu_table, subgroup_census,
    triple_flip, BistellarOptions, DistinguishedTriple,
};
use crate::group::{g351, PermGroup, Permutation};
use crate::search::{run_search, SearchConfig};
use crate::verify::{certify_manifold, CertifyOptions, Outcome};
use crate::{fixtures, Error};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

type Res = Result<Output, CliError>;

pub(super) fn run(cli: &Cli) -> Res {
    match &cli.command {
        Command::Search { m, d, group, min_facets, branch_weight, budget_factor, complementary } => {
            search(cli, *m, *d, group, *min_facets, *branch_weight, *budget_factor, *complementary)
        }
        Command::Verify { input, trace } => verify(cli, input, trace.as_deref()),
        Command::Flips(f) => flips(cli, f),
        Command::Analyze(a) => analyze(cli, a),
        Command::Fixtures => export_fixtures(cli),
    }
}

struct Loaded {
    reps: Complex,
    group: PermGroup,
    full: Complex,
}

fn read_complex(path: &Path) -> Result<Complex, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        CliError::Data(Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
    })?;
    Ok(parse_complex(&text)?)
}

fn load(input: &Input) -> Result<Loaded, CliError> {
    let reps = read_complex(&input.complex)?;
    let group = parse_group(&input.group, reps.m())?;
    let full = if group.order() == 1 { reps.clone() } else { group.expand_orbits(&reps)? };
    Ok(Loaded { reps, group, full })
}

fn parse_row(row: &str, m: usize) -> Result<VertexSet, CliError> {
    if row.len() != m || !row.bytes().all(|c| c == b'0' || c == b'1') {
        return Err(CliError::Usage(format!("expected a row of {m} characters 0/1, got {row:?}")));
    }
    Ok(row.bytes().enumerate().filter(|&(_, c)| c == b'1').map(|(i, _)| i + 1).collect())
}

fn write_file(cli: &Cli, name: &str, text: &str, files: &mut Vec<PathBuf>) -> Result<(), CliError> {
    if let Some(dir) = out_dir(cli) {
        std::fs::create_dir_all(dir)?;
        let p = dir.join(name);
        std::fs::write(&p, text)?;
        files.push(p);
    }
    Ok(())
}

/// Right-aligned columns.
fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let n = header.len();
    let widths: Vec<usize> =
        (0..n).map(|j| rows.iter().map(|r| r[j].len()).chain([header[j].len()]).max().unwrap_or(0)).collect();
    let line = |cells: &[String]| {
        let mut s = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect::<Vec<_>>().join("  ");
        s.push('\n');
        s
    };
    let mut out = line(header);
    for r in rows {
        out.push_str(&line(r));
    }
    out
}

fn strs<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

#[allow(clippy::too_many_arguments)]
fn search(
    cli: &Cli,
    m: usize,
    d: usize,
    group: &str,
    min_facets: u64,
    branch_weight: u64,
    budget_factor: u64,
    complementary: bool,
) -> Res {
    if d + 1 > m {
        return Err(CliError::Usage(format!("d + 1 = {} exceeds m = {m}", d + 1)));
    }
    let g = parse_group(group, m)?;
    let mut cfg = SearchConfig::new(m, d, g, min_facets);
    cfg.branch_weight = branch_weight;
    cfg.budget_factor = budget_factor;
    let report = run_search(&cfg, cli.jobs);
    let kept: Vec<_> =
        report.results.iter().filter(|r| !complementary || r.complex.check_complementarity()).collect();
    let mut files = Vec::new();
    let mut by_f: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
    for (i, r) in kept.iter().enumerate() {
        write_file(cli, &format!("complex_{:05}.dat", i + 1), &r.reps.to_dat(), &mut files)?;
        *by_f.entry(r.complex.f_vector().f.clone()).or_default() += 1;
    }
    let st = &report.stats;
    let mut text = String::new();
    let _ = writeln!(text, "orbits {}  admissible {}  adjacency groups {}", st.total_orbits, st.admissible_orbits, st.adjacency_groups);
    let _ = writeln!(text, "branches {}  max level {}  solutions {}  kept {}", st.branches, st.max_level, st.solutions, kept.len());
    for (f, n) in &by_f {
        let _ = writeln!(text, "f = ({})  x{n}", strs(f).join(","));
    }
    let mut out = Output::new(
        text,
        json!({
            "stats": st,
            "kept": kept.len(),
            "f_vectors": by_f.iter().map(|(f, n)| json!({"f": f, "count": n})).collect::<Vec<_>>(),
        }),
    );
    for (name, secs) in &report.phase_seconds {
        out.counters.insert(format!("seconds_{name}"), json!(secs));
    }
    out.counters.insert("orbits".into(), json!(st.total_orbits));
    out.counters.insert("admissible_orbits".into(), json!(st.admissible_orbits));
    out.counters.insert("adjacency_groups".into(), json!(st.adjacency_groups));
    out.counters.insert("branches".into(), json!(st.branches));
    out.counters.insert("max_level".into(), json!(st.max_level));
    out.files = files;
    Ok(out)
}

fn verify(cli: &Cli, input: &Input, trace: Option<&Path>) -> Res {
    let l = load(input)?;
    if !l.full.is_weak_pseudomanifold() {
        let mut out = Output::new("not a weak pseudomanifold\n".into(), json!({"weak_pseudomanifold": false}));
        out.ok = false;
        return Ok(out);
    }
    let opts = CertifyOptions { traces: trace.is_some(), ..Default::default() };
    let rep = certify_manifold(&l.reps, &l.group, &opts)?;
    let mut files = Vec::new();
    write_file(cli, "certificate.txt", &rep.certificate.to_lines(), &mut files)?;
    if let Some(p) = trace {
        let traces: Vec<_> = rep.certificate.entries.iter().map(|e| json!({"rho": e.rho, "sigma": e.sigma, "trace": e.trace})).collect();
        std::fs::write(p, serde_json::to_string(&traces)?)?;
        files.push(p.to_path_buf());
    }
    let mut text = String::new();
    match &rep.outcome {
        Outcome::Certified => {
            let _ = writeln!(text, "certified: {} orbit entries", rep.certificate.entries.len());
        }
        Outcome::Inconclusive { uncovered } => {
            let _ = writeln!(text, "inconclusive: {} simplex orbits without a nonevasive witness", uncovered.len());
            for u in uncovered.iter().take(20) {
                let _ = writeln!(text, "  {}", u.to_row(l.reps.m()));
            }
        }
    }
    let s = &rep.stats;
    let _ = writeln!(text, "facets used {}  L checked {}  evasive {}", s.facets_used, s.l_checked, s.l_evasive);
    let mut out = Output::new(text, json!({"outcome": rep.outcome, "entries": rep.certificate.entries.len(), "stats": s}));
    out.ok = rep.is_certified();
    let lookups = (s.memo_hits + s.memo_misses).max(1);
    out.counters.insert("memo_hit_rate".into(), json!(s.memo_hits as f64 / lookups as f64));
    out.counters.insert("l_checked".into(), json!(s.l_checked));
    out.files = files;
    Ok(out)
}

fn triple_orbits(ts: &[DistinguishedTriple], g: &PermGroup) -> Vec<DistinguishedTriple> {
    let mut reps: Vec<DistinguishedTriple> = ts
        .iter()
        .map(|t| g.elements().iter().map(|p| t.apply(p).canonical()).min().expect("identity present"))
        .collect();
    reps.sort_unstable();
    reps.dedup();
    reps
}

fn triple_json(t: &DistinguishedTriple, m: usize) -> Value {
    json!([t.d1.to_row(m), t.d2.to_row(m), t.d3.to_row(m)])
}

fn flips(cli: &Cli, f: &FlipsCommand) -> Res {
    match f {
        FlipsCommand::Nu { input, facet } => {
            let l = load(input)?;
            let m = l.full.m();
            if let Some(row) = facet {
                let r = nu_parameters(&l.full, parse_row(row, m)?)?;
                let rows: Vec<Vec<String>> = r.nu.iter().map(|&(v, n)| strs([v as u64, n as u64])).collect();
                let text = table(&strs(["v", "nu"]), &rows);
                return Ok(Output::new(text, json!(r)));
            }
            let table_all = nu_table(&l.full);
            let reps: std::collections::HashSet<VertexSet> = l.reps.facets().iter().copied().collect();
            let mut hist: BTreeMap<u32, usize> = BTreeMap::new();
            let mut rows = Vec::new();
            for r in table_all.iter().filter(|r| reps.contains(&r.sigma)) {
                *hist.entry(r.max()).or_default() += 1;
                rows.push(json!({"sigma": r.sigma.to_row(m), "max": r.max(), "sum": r.sum()}));
            }
            let hrows: Vec<Vec<String>> = hist.iter().map(|(&k, &n)| strs([k as u64, n as u64])).collect();
            let text = table(&strs(["max nu", "facet rows"]), &hrows);
            Ok(Output::new(text, json!({"max_nu_histogram": hist, "rows": rows})))
        }
        FlipsCommand::Triples { input } => {
            let l = load(input)?;
            let ts = distinguished_triples(&l.full)?;
            let orbits = triple_orbits(&ts, &l.group);
            let m = l.full.m();
            let mut text = format!("{} distinguished triples in {} orbits\n", ts.len(), orbits.len());
            for t in &orbits {
                let _ = writeln!(text, "{} {} {}", t.d1.to_row(m), t.d2.to_row(m), t.d3.to_row(m));
            }
            let mut out = Output::new(
                text,
                json!({"count": ts.len(), "orbits": orbits.iter().map(|t| triple_json(t, m)).collect::<Vec<_>>()}),
            );
            out.counters.insert("triples".into(), json!(ts.len()));
            Ok(out)
        }
        FlipsCommand::Apply { input, triple } => {
            let l = load(input)?;
            let m = l.full.m();
            let rows = triple.iter().map(|r| parse_row(r, m)).collect::<Result<Vec<_>, _>>()?;
            let t = DistinguishedTriple::new(rows[0], rows[1], rows[2]);
            let k = triple_flip(&l.full, &t)?;
            let mut files = Vec::new();
            write_file(cli, "flipped.dat", &k.to_dat(), &mut files)?;
            let text = if files.is_empty() { k.to_dat() } else { format!("flipped: {} facets\n", k.len()) };
            let mut out = Output::new(text, json!({"facets": k.len()}));
            out.files = files;
            Ok(out)
        }
        FlipsCommand::Ks { input, subset_file } => {
            let l = load(input)?;
            let text = std::fs::read_to_string(subset_file)?;
            let subset = text
                .split_whitespace()
                .map(|w| w.parse::<usize>().map_err(|_| CliError::Data(Error::domain(format!("bad index {w:?}")))))
                .collect::<Result<Vec<_>, _>>()?;
            let k = build_k_s(&l.full, &k2_triple(), &l.group, &subset)?;
            let mut files = Vec::new();
            write_file(cli, "ks.dat", &k.to_dat(), &mut files)?;
            let text = format!("K_S for |S| = {}: {} facets\n", subset.len(), k.len());
            let mut out = Output::new(text, json!({"subset_size": subset.len(), "facets": k.len()}));
            out.files = files;
            Ok(out)
        }
        FlipsCommand::Census => {
            let c = subgroup_census()?;
            let rows: Vec<Vec<String>> = c
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.label.clone(),
                        r.order.to_string(),
                        r.class_size.to_string(),
                        r.normalizer_order.to_string(),
                        r.n_exact.to_string(),
                        r.m.to_string(),
                    ]
                })
                .collect();
            let mut text = table(&strs(["H", "|H|", "class", "|N(H)|", "n_H", "m_H"]), &rows);
            let _ = writeln!(text, "total {}", c.total);
            let _ = writeln!(text, "with the two complexes without triples {}", c.with_exceptional);
            Ok(Output::new(text, serde_json::to_value(&c)?))
        }
        FlipsCommand::Options { input, vertex, neighborly } => {
            let l = load(input)?;
            let target = match vertex {
                Some(v) => {
                    if *v == 0 || *v > l.full.m() {
                        return Err(CliError::Usage(format!("vertex {v} out of range")));
                    }
                    l.full.link(VertexSet::singleton(*v))?
                }
                None => l.full.clone(),
            };
            let moves = bistellar_options(&target, BistellarOptions { neighborly: *neighborly });
            let m = target.m();
            let mut text = format!("{} bistellar moves\n", moves.len());
            for mv in moves.iter().take(20) {
                let _ = writeln!(text, "  k={} sigma {} tau {}", mv.k(), mv.sigma.to_row(m), mv.tau.to_row(m));
            }
            let mut out = Output::new(
                text,
                json!({"count": moves.len(), "moves": moves.iter().map(|mv| json!({"sigma": mv.sigma.to_row(m), "tau": mv.tau.to_row(m)})).collect::<Vec<_>>()}),
            );
            out.counters.insert("moves".into(), json!(moves.len()));
            Ok(out)
        }
    }
}

fn analyze(cli: &Cli, a: &AnalyzeCommand) -> Res {
    match a {
        AnalyzeCommand::Sdist { input } => {
            let l = load(input)?;
            let s = s_distribution(&l.full);
            let rows: Vec<Vec<String>> = s.iter().map(|(&k, &n)| strs([k as u64, n])).collect();
            Ok(Output::new(table(&strs(["s", "count"]), &rows), json!(s)))
        }
        AnalyzeCommand::Npq { input, a, b } => {
            let l = load(input)?;
            let mat = edge_matrix_npq(&l.full, *a, *b)?;
            let (lo, hi) = mat.range().unwrap_or((0, 0));
            let header: Vec<String> = std::iter::once("p\\q".to_string()).chain((lo..=hi).map(|q| q.to_string())).collect();
            let rows: Vec<Vec<String>> = mat
                .dense()
                .iter()
                .zip(lo..)
                .map(|(r, p)| std::iter::once(p.to_string()).chain(r.iter().map(|x| x.to_string())).collect())
                .collect();
            let mut text = table(&header, &rows);
            let _ = writeln!(text, "symmetric: {}", if mat.is_symmetric() { "yes" } else { "no" });
            Ok(Output::new(
                text,
                json!({"a": a, "b": b, "lo": lo, "hi": hi, "matrix": mat.dense(), "symmetric": mat.is_symmetric()}),
            ))
        }
        AnalyzeCommand::Sym { input, within } => {
            let l = load(input)?;
            let sup = within.as_deref().map(|w| parse_group(w, l.full.m())).transpose()?;
            let g = symmetry_group(&l.full, sup.as_ref())?;
            let gens: Vec<String> = g.generators().iter().map(|p| p.to_string()).collect();
            let mut text = format!("order {}\n", g.order());
            for s in &gens {
                let _ = writeln!(text, "  {s}");
            }
            Ok(Output::new(text, json!({"order": g.order(), "generators": gens})))
        }
        AnalyzeCommand::Fixed { input, subgroup } => {
            let l = load(input)?;
            let h = parse_group(subgroup, l.full.m())?;
            let fp = fixed_point_complex(&l.full, &h)?;
            let labels: Vec<Vec<usize>> = fp.labels.iter().map(|o| o.iter().collect()).collect();
            let facets: Vec<Vec<usize>> = fp.complex.facets().iter().map(|f| f.iter().collect()).collect();
            let mut text = format!("{} vertices, {} facets\n", labels.len(), facets.len());
            for (i, o) in labels.iter().enumerate() {
                let _ = writeln!(text, "  b{} = {{{}}}", i + 1, strs(o).join(", "));
            }
            for f in &facets {
                let _ = writeln!(text, "  [{}]", f.iter().map(|v| format!("b{v}")).collect::<Vec<_>>().join(" "));
            }
            let mut files = Vec::new();
            if !fp.complex.is_empty() {
                write_file(cli, "fixed.dat", &fp.complex.to_dat(), &mut files)?;
            }
            let mut out = Output::new(text, json!({"orbits": labels, "facets": facets}));
            out.files = files;
            Ok(out)
        }
        AnalyzeCommand::Intersect { complexes, group } => {
            let ks = complexes.iter().map(|p| read_complex(p)).collect::<Result<Vec<_>, _>>()?;
            let m = ks[0].m();
            if ks.iter().any(|k| k.m() != m) {
                return Err(CliError::Data(Error::domain("complexes on different vertex universes")));
            }
            let g = parse_group(group, m)?;
            let names: Vec<String> = complexes
                .iter()
                .map(|p| p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default())
                .collect();
            let twists: Vec<(&str, Permutation)> = if m == 27 {
                let (s, f) = (g351::perm_s(), g351::perm_f());
                vec![("", Permutation::identity(27)), ("S", s.clone()), ("F", f.clone()), ("SF", s.compose(&f))]
            } else {
                vec![("", Permutation::identity(m))]
            };
            let mut text = String::new();
            let mut blocks = Vec::new();
            for (label, q) in &twists {
                let t = intersection_table(&ks, &ks, q, &g)?;
                let header: Vec<String> =
                    std::iter::once(String::new()).chain(names.iter().map(|n| format!("{label}{n}"))).collect();
                let rows: Vec<Vec<String>> = t
                    .iter()
                    .zip(&names)
                    .map(|(r, n)| std::iter::once(n.clone()).chain(r.iter().map(|x| x.to_string())).collect())
                    .collect();
                text.push_str(&table(&header, &rows));
                text.push('\n');
                blocks.push(json!({"twist": label, "table": t}));
            }
            Ok(Output::new(text, json!({"names": names, "blocks": blocks})))
        }
        AnalyzeCommand::Tournament => {
            let plain = tournament_automorphisms(false)?;
            let signed = tournament_automorphisms(true)?;
            let n = g351::build_normalizer()?;
            let eq = signed == n;
            let text = format!(
                "|Sym| = {}\n|Sym+-| = {}\nSym+- equals <A,B,S,F>: {}\n",
                plain.order(),
                signed.order(),
                if eq { "yes" } else { "no" }
            );
            let mut out =
                Output::new(text, json!({"sym": plain.order(), "sym_pm": signed.order(), "equals_normalizer": eq}));
            out.ok = eq;
            Ok(out)
        }
    }
}

fn export_fixtures(cli: &Cli) -> Res {
    fixtures::self_check()?;
    let dir = out_dir(cli).map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("fixtures"));
    let files = fixtures::export(&dir)?;
    let mut text = format!("self-check passed; wrote {} files to {}\n", files.len(), dir.display());
    for f in &files {
        let _ = writeln!(text, "  {}", f.display());
    }
    let mut out = Output::new(text, json!({"self_check": true}));
    out.files = files;
    Ok(out)
}
