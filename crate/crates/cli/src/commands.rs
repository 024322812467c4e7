use crate::{input, Cli, Command, CopositiveAction, CpAction, DecompAction, Failure, Format, Outcome, Table1Action};
use cprank_core::case_engine::{
    diagnostics, load_table1, run_case, verify_certificate, verify_theorem_main, TARGET_BOUND,
};
use cprank_core::copositive::{
    horn_matrix, irreducibility, minimal_zeros, simplex_minimum, spn_connected_test, zero_supports,
};
use cprank_core::cp_decomp::{
    cpr_bound_derivation, dd_decomposition, distinct_supports, nearly_positive_witness, orthogonality_defect,
    pairmove, WeightedCpDecomposition,
};
use cprank_core::matrix_core::rational::{fmt_rational, to_f64};
use cprank_core::matrix_core::{dd_orbit_witness, graph_minus_one, graph_of, RationalJson};
use cprank_core::zero_structure::tf_exact;
use cprank_core::Rational;
use serde::Serialize;
use serde_json::json;
use std::fmt::Write as _;
use std::path::Path;

type Run = Result<Outcome, Failure>;

fn ok(output: String) -> Run {
    Ok(Outcome { output, code: 0 })
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn no_dot(cli: &Cli) -> Result<(), Failure> {
    if cli.format == Format::Dot {
        return Err(Failure::input("--format dot is only available for tf, cp bound and horn"));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Copositive { action: CopositiveAction::Check { matrix } } => copositive_check(cli, matrix),
        Command::Zeros { matrix } => zeros(cli, matrix),
        Command::Irreducible { matrix } => irreducible(cli, matrix),
        Command::Tf { graph } => tf(cli, graph),
        Command::Cp { action: CpAction::Bound { matrix } } => cp_bound(cli, matrix),
        Command::Decomp { action } => decomp(cli, action),
        Command::Table1 { action: Table1Action::Verify { case, dot_dir } } => table1_verify(cli, *case, dot_dir.as_deref()),
        Command::Horn => horn(cli),
        Command::NearlyPositive { matrix } => nearly_positive(cli, matrix),
    }
}

fn copositive_check(cli: &Cli, path: &Path) -> Run {
    no_dot(cli)?;
    let a = input::matrix(path)?;
    let min = simplex_minimum(&a)?;
    let copositive = min.value >= Rational::from_integer(0.into());
    // Only decidable this way for unit diagonal, entries ≥ -1 and connected G_{-1}.
    let spn = if copositive { spn_connected_test(&a).ok() } else { None };
    let faces: Vec<Vec<usize>> = min.faces.iter().map(|f| f.support.labels()).collect();
    let output = match cli.format {
        Format::Json => to_json(&json!({
            "copositive": copositive,
            "minimum": RationalJson(min.value.clone()),
            "attaining_faces": faces,
            "spn": spn,
        })),
        _ => {
            let mut s = format!("copositive: {}\nsimplex minimum: {}\n", yes(copositive), fmt_rational(&min.value));
            let faces: Vec<String> = min.faces.iter().map(|f| f.support.to_string()).collect();
            let _ = writeln!(s, "attained on: {}", faces.join(" "));
            if let Some(b) = spn {
                let _ = writeln!(s, "SPN: {}{}", yes(b), if b { "" } else { " (exceptional)" });
            }
            s
        }
    };
    Ok(Outcome { output, code: if copositive { 0 } else { 1 } })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(fmt_rational).collect();
    format!("({})", parts.join(", "))
}

fn zeros(cli: &Cli, path: &Path) -> Run {
    no_dot(cli)?;
    let a = input::matrix(path)?;
    let analysis = zero_supports(&a)?;
    let w = minimal_zeros(&a);
    let output = match cli.format {
        Format::Json => to_json(&json!({
            "zero_supports": analysis,
            "minimal_zeros": w.as_ref().ok(),
            "minimal_zeros_error": w.as_ref().err().map(|e| e.to_string()),
        })),
        _ => {
            let mut s = format!("{} zero supports\n", analysis.supports.len());
            for z in &analysis.witnesses {
                let _ = writeln!(s, "  {:<14} {}{}", z.support.to_string(), vector(&z.vector), if z.minimal { "  minimal" } else { "" });
            }
            match &w {
                Ok(w) => {
                    let _ = writeln!(s, "W ({} × {}):", w.n, w.k());
                    for row in w.matrix() {
                        let _ = writeln!(s, "  {}", row.iter().map(fmt_rational).collect::<Vec<_>>().join(" "));
                    }
                }
                Err(e) => {
                    let _ = writeln!(s, "W unavailable: {e}");
                }
            }
            s
        }
    };
    ok(output)
}

fn irreducible(cli: &Cli, path: &Path) -> Run {
    no_dot(cli)?;
    let a = input::matrix(path)?;
    let r = irreducibility(&a)?;
    let output = match cli.format {
        Format::Json => to_json(&r),
        _ => {
            let mut s = format!("N-irreducible: {}\nN~-irreducible: {}\n", yes(r.n_irreducible), yes(r.n_tilde_irreducible));
            let pairs: Vec<String> = r.reducible_pairs().iter().map(|(i, j)| format!("({},{})", i + 1, j + 1)).collect();
            let _ = writeln!(s, "reducible pairs: {}", if pairs.is_empty() { "none".into() } else { pairs.join(" ") });
            s
        }
    };
    ok(output)
}

fn tf(cli: &Cli, path: &Path) -> Run {
    let g = input::graph(path)?;
    let w = tf_exact(&g)?;
    let label = |(u, v): (usize, usize)| (g.label(u).to_string(), g.label(v).to_string());
    let removed: Vec<(String, String)> =
        g.edges().into_iter().filter(|&(u, v)| !w.subgraph.has_edge(u, v)).map(label).collect();
    let kept: Vec<(String, String)> = w.edges.iter().copied().map(label).collect();
    let output = match cli.format {
        Format::Json => to_json(&json!({ "value": w.value, "edges": kept, "removed": removed })),
        Format::Dot => w.subgraph.to_dot("tf"),
        Format::Text => {
            let mut s = format!("tf = {}\n", w.value);
            for (a, b) in &kept {
                let _ = writeln!(s, "  {a} -- {b}");
            }
            if !removed.is_empty() {
                let r: Vec<String> = removed.iter().map(|(a, b)| format!("{a}--{b}")).collect();
                let _ = writeln!(s, "removed: {}", r.join(" "));
            }
            s
        }
    };
    ok(output)
}

fn cp_bound(cli: &Cli, path: &Path) -> Run {
    let a = input::matrix(path)?;
    if let Some((i, j)) = a.first_negative() {
        return Err(Failure::input(format!("entry ({}, {}) is negative; not a completely positive candidate", i + 1, j + 1)));
    }
    let g = graph_of(&a);
    let d = cpr_bound_derivation(&g);
    let output = match cli.format {
        Format::Json => to_json(&d),
        Format::Dot => g.to_dot("G(A)"),
        Format::Text => format!("cp-rank <= {} (if completely positive)\n{}", d.bound, d.render()),
    };
    ok(output)
}

fn render_decomposition(cli: &Cli, d: &WeightedCpDecomposition, header: &str) -> String {
    match cli.format {
        Format::Json => to_json(d),
        _ => {
            let mut s = format!("{header}: {} terms\n", d.len());
            for t in &d.terms {
                let _ = writeln!(s, "  {:>8}  {}", fmt_rational(&t.weight), vector(&t.vector));
            }
            s
        }
    }
}

fn decomp(cli: &Cli, action: &DecompAction) -> Run {
    no_dot(cli)?;
    match action {
        DecompAction::Pairmove { decomposition } => {
            let d = input::decomposition(decomposition)?;
            if d.len() != 2 {
                return Err(Failure::input(format!("pairmove needs exactly two terms, got {}", d.len())));
            }
            let (b, dt) = pairmove(&d.terms[0], &d.terms[1])?;
            let terms = b.into_iter().chain(std::iter::once(dt)).collect();
            let out = WeightedCpDecomposition::new(d.n, terms)?;
            debug_assert_eq!(out.realize(), d.realize());
            ok(render_decomposition(cli, &out, "pairmove"))
        }
        DecompAction::Distinct { decomposition } => {
            let d = input::decomposition(decomposition)?;
            ok(render_decomposition(cli, &distinct_supports(&d), "distinct supports"))
        }
        DecompAction::Dd { matrix } => {
            let a = input::matrix(matrix)?;
            let Some(d) = dd_orbit_witness(&a)? else {
                return Err(Failure::negative("matrix is not in the orbit of a diagonally dominant matrix"));
            };
            let out = dd_decomposition(&a, &d)?;
            let header = format!("scaling d = {}", vector(&d));
            ok(render_decomposition(cli, &out, &header))
        }
    }
}

fn table1_verify(cli: &Cli, case: Option<u32>, dot_dir: Option<&Path>) -> Run {
    no_dot(cli)?;
    if let Some(id) = case {
        if dot_dir.is_some() {
            return Err(Failure::input("--dot-dir writes the figures of the full run; drop --case"));
        }
        let table = load_table1()?;
        let entry = table
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| Failure::input(format!("case {id} is not in 1..=44")))?;
        let cert = run_case(entry)?;
        verify_certificate(entry, &cert)?;
        let diags = diagnostics(entry);
        let code = if cert.bound <= TARGET_BOUND { 0 } else { 1 };
        let output = match cli.format {
            Format::Json => to_json(&json!({ "certificate": cert, "diagnostics": diags })),
            _ => {
                let mut s = format!("case {id}: {} bound {} (re-verified)\n", cert.strategy, cert.bound);
                for d in &diags {
                    match (d.bound_label(), &d.reason) {
                        (Some(b), _) => {
                            let p = d.pivot.map(|p| format!(" pivot {p}")).unwrap_or_default();
                            let _ = writeln!(s, "  also {}{p}: {b}", d.strategy);
                        }
                        (None, Some(r)) => {
                            let _ = writeln!(s, "  not {}: {r}", d.strategy);
                        }
                        _ => {}
                    }
                }
                s
            }
        };
        return Ok(Outcome { output, code });
    }
    let report = verify_theorem_main()?;
    if let Some(dir) = dot_dir {
        std::fs::create_dir_all(dir).map_err(|e| Failure::input(format!("cannot create {}: {e}", dir.display())))?;
        for f in &report.figures {
            let p = dir.join(f.file_name());
            std::fs::write(&p, f.to_dot()).map_err(|e| Failure::input(format!("cannot write {}: {e}", p.display())))?;
        }
    }
    let code = if report.all_within_target() { 0 } else { 1 };
    let output = match cli.format {
        Format::Json => to_json(&report),
        _ => report.render(),
    };
    Ok(Outcome { output, code })
}

fn horn(cli: &Cli) -> Run {
    let h = horn_matrix();
    let output = match cli.format {
        Format::Json => to_json(&h),
        Format::Dot => graph_minus_one(&h).to_dot("G_-1(H)"),
        Format::Text => h.to_string(),
    };
    ok(output)
}

fn nearly_positive(cli: &Cli, path: &Path) -> Run {
    no_dot(cli)?;
    let y = input::rows(path)?;
    let q = nearly_positive_witness(&y, cli.epsilon, cli.seed)?;
    let yf: Vec<Vec<f64>> = y.iter().map(|r| r.iter().map(to_f64).collect()).collect();
    let min_entry = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .map(|(i, j)| (0..3).map(|k| yf[i][k] * q[j][k]).sum::<f64>())
        .fold(f64::INFINITY, f64::min);
    let defect = orthogonality_defect(&q);
    let output = match cli.format {
        Format::Json => to_json(&json!({ "q": q, "min_entry": min_entry, "orthogonality_defect": defect })),
        _ => {
            let mut s = String::from("Q =\n");
            for row in &q {
                let _ = writeln!(s, "  {:>20.15} {:>20.15} {:>20.15}", row[0], row[1], row[2]);
            }
            let _ = writeln!(s, "min entry of YQ^T: {min_entry:.3e}\n|QQ^T - I|_max: {defect:.3e}");
            s
        }
    };
    ok(output)
}
