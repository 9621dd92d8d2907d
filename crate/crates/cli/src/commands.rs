//! One function per subcommand. Ring-based commands are generic over the
//! coefficient field and receive an already validated ring file.

use std::collections::BTreeMap;

use koszul::constructions::{
    cartwright_sturmfels_check, ci_lift, diagonal_subalgebra, pinched_veronese, rees_ci_presentation,
    veronese_module_presentation, veronese_presentation, SubalgebraPresentation,
};
use koszul::hilbert::{
    bounded_degree_identity, count_identity, format_z_polynomial, hilbert_series, multigraded_hilbert_function,
};
use koszul::koszulness::{
    full_report, lg_obstruction_search, strongly_koszul_check, verify_koszul_filtration,
    DiagnosticReport, FiltrationVerdict, GQuadBudget, GQuadOutcome, LgSearchResult, ReportOptions,
    StronglyKoszulOutcome, Verdict,
};
use koszul::resolution::{
    betti_table_over_quotient, koszul_homology_dims, minimal_betti_table_s, BettiTable, RModule,
};
use koszul::{Field, Ideal, Monomial, MonomialOrder, Polynomial, PolynomialRing};
use serde_json::json;

use crate::error::CliError;
use crate::output::{Outcome, Status};
use crate::ringfile::{print_ring_file, RingFile};

type Result<T> = std::result::Result<T, CliError>;

/// Shared bounds; the defaults are part of the interface.
#[derive(Clone, Debug)]
pub struct Bounds {
    pub hom: usize,
    pub deg: i64,
    pub truncation: usize,
}

fn mono_str<K: Field>(ring: &PolynomialRing<K>, m: &Monomial) -> String {
    let mut s = String::new();
    m.fmt_with(ring.names(), &mut s).expect("string write");
    s
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn degree_summary(degrees: &[u32]) -> String {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &d in degrees {
        *counts.entry(d).or_default() += 1;
    }
    counts
        .iter()
        .map(|(d, c)| format!("{c} in degree {d}"))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn gb<K: Field>(r: &RingFile<K>, order: Option<&MonomialOrder>) -> Result<Outcome> {
    let ring = r.quotient.ambient();
    let order = order.unwrap_or(ring.order());
    let gb = r.quotient.defining_ideal().groebner_basis_with(order)?;
    let mut out = Outcome::new();
    out.line(format!("order: {order}"));
    out.line(format!("reduced groebner basis ({} elements):", gb.len()));
    for g in gb.elements() {
        out.line(format!("  {g}"));
    }
    let lead: Vec<String> = gb.leading_monomials().iter().map(|m| mono_str(ring, m)).collect();
    out.field("order", order.to_string());
    out.field("basis", strings(gb.elements()));
    out.field("leading_monomials", lead);
    Ok(out)
}

pub fn hilbert<K: Field>(r: &RingFile<K>, multidegree: Option<&[i64]>, terms: Option<usize>) -> Result<Outcome> {
    let mut out = Outcome::new();
    if let Some(a) = multidegree {
        let v = multigraded_hilbert_function(&r.quotient, a)?;
        out.line(format!("HF({}) = {v}", strings(a).join(",")));
        out.field("multidegree", a);
        out.field("value", v);
        return Ok(out);
    }
    let h = hilbert_series(&r.quotient)?;
    out.line(h.to_string());
    out.field("series", h.to_string());
    out.field("h_polynomial", h.h_polynomial());
    out.field("dimension", h.dimension());
    out.field("multiplicity", h.multiplicity());
    if let Some(n) = terms {
        let c = h.coefficients(n);
        out.line(format!("hilbert function: {}", strings(&c).join(", ")));
        out.field("hilbert_function", c);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Over {
    /// The ambient polynomial ring.
    #[value(name = "S", alias = "s")]
    S,
    /// The quotient ring.
    #[value(name = "R", alias = "r")]
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ModuleArg {
    /// The residue field.
    #[value(name = "K", alias = "k")]
    K,
    /// The quotient ring itself.
    #[value(name = "R", alias = "r")]
    R,
}

fn betti_fields(out: &mut Outcome, t: &BettiTable) {
    let entries: serde_json::Map<String, serde_json::Value> =
        t.to_keyed().into_iter().map(|(k, v)| (k, json!(v))).collect();
    let uncertified: Vec<String> = t.boundary_entries().iter().map(|((i, j), _)| format!("{i},{j}")).collect();
    out.field("hom_bound", t.hom_bound());
    out.field("deg_bound", t.deg_bound());
    out.field("entries", entries);
    out.field("uncertified", uncertified);
}

fn uncertified_note(out: &mut Outcome, t: &BettiTable) {
    if !t.boundary_entries().is_empty() {
        out.line(format!("entries in degree {} are at the bound and not certified", t.deg_bound()));
    }
}

pub fn betti<K: Field>(r: &RingFile<K>, over: Over, module: Option<ModuleArg>, b: &Bounds) -> Result<Outcome> {
    let q = &r.quotient;
    let module = module.unwrap_or(match over {
        Over::S => ModuleArg::R,
        Over::R => ModuleArg::K,
    });
    let (label, table) = match (over, module) {
        (Over::S, ModuleArg::R) => ("R over S", minimal_betti_table_s(q.defining_ideal(), b.hom, b.deg)?),
        (Over::S, ModuleArg::K) => {
            let vars: Vec<usize> = (0..q.nvars()).collect();
            let m = Ideal::of_variables(q.ambient(), &vars);
            ("K over S", minimal_betti_table_s(&m, b.hom, b.deg)?)
        }
        (Over::R, ModuleArg::K) => (
            "K over R",
            betti_table_over_quotient(q, &RModule::ResidueField, b.hom, b.deg)?,
        ),
        (Over::R, ModuleArg::R) => {
            return Err(CliError::Usage("R is free over itself; use --module K or --over S".into()))
        }
    };
    let mut out = Outcome::new();
    out.line(format!("betti numbers of {label} (i <= {}, j <= {})", b.hom, b.deg));
    out.block(&table.to_string());
    uncertified_note(&mut out, &table);
    out.field("module", label);
    betti_fields(&mut out, &table);
    match over {
        Over::S => {
            let pd = table.projective_dimension();
            match pd {
                Some(p) => out.line(format!("projective dimension: {p}")),
                None => out.line("projective dimension: not determined within the bounds"),
            }
            if let Some(reg) = table.regularity() {
                out.line(format!("regularity: {reg}"));
            }
            out.field("projective_dimension", pd);
            out.field("regularity", table.regularity());
        }
        Over::R => {
            let off = table.first_off_diagonal();
            match off {
                Some(((i, j), v)) => out.line(format!("first off-diagonal entry: beta_{i},{j} = {v}")),
                None => out.line("all certified entries are on the diagonal"),
            }
            out.field(
                "first_off_diagonal",
                off.map(|((i, j), v)| json!({"i": i, "j": j, "value": v})),
            );
        }
    }
    Ok(out)
}

pub fn koszul_homology<K: Field>(r: &RingFile<K>, b: &Bounds) -> Result<Outcome> {
    let slices = koszul_homology_dims(&r.quotient, b.hom, b.deg)?;
    let mut out = Outcome::new();
    out.line(format!("koszul homology of R (i <= {}, j <= {})", b.hom, b.deg));
    for s in &slices {
        let parts: Vec<String> = s
            .dims
            .iter()
            .filter(|(_, &d)| d > 0)
            .map(|(j, d)| format!("{d} in degree {j}"))
            .collect();
        let body = if parts.is_empty() { "0".to_string() } else { parts.join(", ") };
        let scope = if s.complete { "" } else { " (degrees above the bound not examined)" };
        out.line(format!("H_{}: {body}{scope}", s.i));
    }
    out.field("slices", &slices);
    Ok(out)
}

pub struct ReportArgs {
    pub g_quadratic: bool,
    pub random_changes: usize,
    pub lg_extra_vars: Option<usize>,
    pub use_filtration: bool,
    pub seed: u64,
}

fn report_lines(out: &mut Outcome, rep: &DiagnosticReport, truncation: usize) {
    let quad = &rep.quadratic.value;
    if quad.quadratic {
        out.line(format!("quadratic: yes ({} generators)", quad.degrees.len()));
    } else {
        out.line(format!("quadratic: no (minimal generators: {})", degree_summary(&quad.degrees)));
    }
    if let Some(n) = &rep.numeric {
        let n = &n.value;
        out.line(format!("hilbert series: {}", n.hilbert_series));
        out.line(format!(
            "complete intersection: {}",
            if n.complete_intersection { "yes" } else { "no" }
        ));
        match n.series.first_negative_inverse {
            Some(k) => out.line(format!("1/H(-z): negative coefficient at z^{k}")),
            None => out.line(format!("1/H(-z): nonnegative through z^{truncation}")),
        }
        let d = &n.series.deviations;
        let mut notes: Vec<String> = Vec::new();
        if let Some(h) = n.series.first_nonpositive_deviation {
            notes.push(format!("e'_{h} = {}", d.get(h)));
        }
        if let Some(h) = d.first_negative().filter(|&h| Some(h) != n.series.first_nonpositive_deviation) {
            notes.push(format!("e'_{h} = {}", d.get(h)));
        }
        if notes.is_empty() {
            out.line(format!("deviations: positive through e'_{truncation}"));
        } else {
            out.line(format!("deviations: {}", notes.join(", ")));
        }
    }
    if let Some(b) = &rep.betti {
        let c = &b.value;
        match c.first_off_diagonal {
            Some(((i, j), v)) => out.line(format!("betti numbers of K over R: beta_{i},{j} = {v} off the diagonal")),
            None => out.line(format!(
                "betti numbers of K over R: diagonal for i <= {}, j < {}",
                c.table.hom_bound(),
                c.table.deg_bound()
            )),
        }
    }
    if let Some(g) = &rep.g_quadratic {
        match &g.value {
            GQuadOutcome::Found(cert) => out.line(format!(
                "g-quadratic: quadratic groebner basis found ({}, {})",
                cert.label, cert.order
            )),
            GQuadOutcome::NotFound { attempts } => {
                out.line(format!("g-quadratic: nothing found in {attempts} attempts"))
            }
            GQuadOutcome::NotQuadratic => out.line("g-quadratic: not quadratic"),
        }
    }
    if let Some(l) = &rep.lg {
        out.line(format!("lg search: {}", lg_summary(&l.value)));
    }
    if let Some(f) = &rep.filtration {
        match &f.value {
            FiltrationVerdict::Verified => out.line("filtration: verified"),
            FiltrationVerdict::Failed { ideal, reason } => out.line(format!("filtration: fails at {ideal}: {reason}")),
        }
    }
    let verdict = match rep.verdict {
        Verdict::Koszul => "koszul",
        Verdict::NotKoszul => "not koszul",
        Verdict::Inconclusive => "inconclusive",
    };
    match &rep.decided_by {
        Some(by) => out.line(format!("verdict: {verdict} (decided by {by})")),
        None => out.line(format!("verdict: {verdict}")),
    }
}

fn lg_summary(l: &LgSearchResult) -> String {
    let found = l.all_ideals().count();
    if found > 0 {
        format!("{found} quadratic monomial ideals with this h-polynomial")
    } else if l.exhaustive {
        "no quadratic monomial ideal has this h-polynomial, so R is not LG-quadratic".to_string()
    } else {
        "no quadratic monomial ideal found within the variable bound".to_string()
    }
}

pub fn koszul_report<K: Field>(r: &RingFile<K>, b: &Bounds, args: &ReportArgs) -> Result<Outcome> {
    let opts = ReportOptions {
        truncation: b.truncation,
        hom_bound: b.hom,
        deg_bound: b.deg,
        g_quadratic: args.g_quadratic.then(|| GQuadBudget {
            random_changes: args.random_changes,
            seed: args.seed,
            ..GQuadBudget::default()
        }),
        lg_extra_vars: args.lg_extra_vars,
        filtration: if args.use_filtration { r.filtration.clone() } else { None },
    };
    let rep = full_report(&r.quotient, &opts)?;
    let mut out = Outcome::new();
    out.line(format!("ring: {}", r.quotient));
    report_lines(&mut out, &rep, b.truncation);
    out.status = match rep.verdict {
        Verdict::Koszul => Status::Computed,
        Verdict::NotKoszul => Status::Negative,
        Verdict::Inconclusive => Status::Inconclusive,
    };
    out.field("ring", r.quotient.to_string());
    out.field("report", &rep);
    Ok(out)
}

pub fn filtration_verify<K: Field>(r: &RingFile<K>) -> Result<Outcome> {
    let f = r
        .filtration
        .as_ref()
        .ok_or_else(|| CliError::Usage("the ring file has no filtration block".into()))?;
    let verdict = verify_koszul_filtration(&r.quotient, f)?;
    let mut out = Outcome::new();
    match &verdict {
        FiltrationVerdict::Verified => out.line(format!(
            "filtration verified: {} ideals, {} witnesses",
            f.ideals.len(),
            f.witnesses.len()
        )),
        FiltrationVerdict::Failed { ideal, reason } => {
            out.status = Status::Negative;
            out.line(format!("filtration fails at {ideal}: {reason}"));
        }
    }
    out.field("verdict", &verdict);
    Ok(out)
}

pub fn strongly_koszul<K: Field>(r: &RingFile<K>, basis: Option<&[String]>) -> Result<Outcome> {
    let ring = r.quotient.ambient();
    let basis: Vec<Polynomial<K>> = match basis {
        Some(texts) => texts.iter().map(|t| ring.parse(t)).collect::<std::result::Result<_, _>>()?,
        None => (0..ring.nvars()).map(|i| ring.var(i)).collect(),
    };
    let outcome = strongly_koszul_check(&r.quotient, &basis)?;
    let mut out = Outcome::new();
    match &outcome {
        StronglyKoszulOutcome::Verified => {
            out.line(format!("strongly koszul with respect to {}", strings(&basis).join(", ")))
        }
        StronglyKoszulOutcome::Counterexample { y, x } => {
            out.status = Status::Negative;
            out.line(format!(
                "not strongly koszul for this basis: ({}) : {x} is not generated by basis elements",
                if y.is_empty() { "0".to_string() } else { y.join(", ") }
            ));
        }
    }
    out.field("basis", strings(&basis));
    out.field("outcome", &outcome);
    Ok(out)
}

pub fn lg_search(h: &[i64], max_extra_vars: usize) -> Result<Outcome> {
    let res = lg_obstruction_search(h, max_extra_vars)?;
    let mut out = Outcome::new();
    out.line(format!(
        "h-polynomial {}: codimension {}, {} quadrics",
        format_z_polynomial(h),
        res.codimension,
        res.quadrics
    ));
    for level in &res.levels {
        if level.ideals.is_empty() {
            out.line(format!("{} variables: none", level.nvars));
        } else {
            out.line(format!("{} variables: {}", level.nvars, level.ideals.len()));
            for i in &level.ideals {
                out.line(format!("  {i}"));
            }
        }
    }
    if res.all_ideals().next().is_none() {
        out.line("no quadratic monomial ideal found");
        if res.exhaustive {
            out.line("the search covers every possible number of variables: no LG-quadratic ring has this h-polynomial");
        }
    }
    out.field("result", &res);
    out.field("obstructed", res.obstructed());
    Ok(out)
}

pub fn h_polynomial_of<K: Field>(r: &RingFile<K>) -> Result<Vec<i64>> {
    Ok(hilbert_series(&r.quotient)?.h_polynomial().to_vec())
}

fn emit_presentation<K: Field>(out: &mut Outcome, title: &str, p: &SubalgebraPresentation<K>) -> Result<()> {
    let kernel = p.kernel.minimal_generators()?;
    let degrees = p.kernel_degrees()?;
    let names = p.ring.names();
    out.line(format!("# {title}"));
    let map: Vec<String> = names.iter().zip(&p.generators).map(|(t, g)| format!("{t} -> {g}")).collect();
    for chunk in map.chunks(6) {
        out.line(format!("# {}", chunk.join(", ")));
    }
    if degrees.is_empty() {
        out.line("# kernel: zero");
    } else {
        out.line(format!("# kernel minimal generators: {}", degree_summary(&degrees)));
    }
    let text = print_ring_file(&p.ring, &kernel, None);
    out.block(&text);
    let generators: serde_json::Map<String, serde_json::Value> =
        names.iter().zip(&p.generators).map(|(t, g)| (t.clone(), json!(g.to_string()))).collect();
    out.field("generators", generators);
    out.field("kernel_degrees", degrees);
    out.field("ring_file", text);
    Ok(())
}

pub fn veronese<K: Field>(r: &RingFile<K>, c: u32, module: Option<u32>, bound: i64) -> Result<Outcome> {
    let mut out = Outcome::new();
    let Some(u) = module else {
        let p = veronese_presentation(&r.quotient, c)?;
        emit_presentation(&mut out, &format!("Veronese subring of degree {c} of {}", r.quotient), &p)?;
        return Ok(out);
    };
    let m = veronese_module_presentation(&r.quotient, c, u, bound)?;
    emit_presentation(&mut out, &format!("Veronese subring of degree {c} of {}", r.quotient), &m.base)?;
    let names: Vec<String> = (1..=m.generators.len()).map(|k| format!("e{k}")).collect();
    let gens: Vec<String> = names.iter().zip(&m.generators).map(|(e, g)| format!("{e} -> {g}")).collect();
    out.line(format!("# module V_{u}: {}", gens.join(", ")));
    out.line(format!("# relations (complete through degree {}):", m.bound));
    let relations: Vec<Vec<String>> = m.relations.iter().map(|rel| strings(rel)).collect();
    for rel in &relations {
        out.line(format!("#   ({})", rel.join(", ")));
    }
    out.field(
        "module",
        json!({
            "u": u,
            "generators": strings(&m.generators),
            "relations": relations,
            "bound": m.bound,
        }),
    );
    Ok(out)
}

pub fn pinched(n: usize, d: u32, s: usize) -> Result<Outcome> {
    let p = pinched_veronese(n, d, s)?;
    let mut out = Outcome::new();
    emit_presentation(&mut out, &format!("pinched Veronese PV({n},{d},{s})"), &p)?;
    Ok(out)
}

pub fn diagonal<K: Field>(r: &RingFile<K>, c1: i64, c2: i64) -> Result<Outcome> {
    let p = diagonal_subalgebra(&r.quotient, c1, c2)?;
    let mut out = Outcome::new();
    emit_presentation(&mut out, &format!("diagonal ({c1},{c2}) of {}", r.quotient), &p)?;
    Ok(out)
}

pub fn rees_ci<K: Field>(r: &RingFile<K>) -> Result<Outcome> {
    let gens: Vec<Polynomial<K>> = r.generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    let rees = rees_ci_presentation(&gens)?;
    let mut out = Outcome::new();
    out.line(format!("# Rees algebra of ({})", strings(&gens).join(", ")));
    let text = print_ring_file(rees.ambient(), rees.defining_ideal().gens(), None);
    out.block(&text);
    out.field("ring_file", text);
    Ok(out)
}

pub fn ci_lift_cmd<K: Field>(r: &RingFile<K>) -> Result<Outcome> {
    let lift = ci_lift(&r.quotient)?;
    let mut out = Outcome::new();
    let yes = |b: bool| if b { "yes" } else { "no" };
    out.line(format!("# lift of {}", r.quotient));
    out.line(format!(
        "# {} initial ideal: ({})",
        lift.certificate.order,
        lift.certificate.initial_ideal.join(", ")
    ));
    out.line(format!("# lift variables form a regular sequence: {}", yes(lift.y_regular)));
    out.line(format!(
        "# h-polynomial preserved: {} ({})",
        yes(lift.h_preserved),
        format_z_polynomial(&lift.h_polynomial)
    ));
    let text = print_ring_file(lift.ring.ambient(), lift.ring.defining_ideal().gens(), None);
    out.block(&text);
    if !(lift.y_regular && lift.h_preserved) {
        out.status = Status::Negative;
    }
    out.field("lift", &lift);
    out.field("ring_file", text);
    Ok(out)
}

pub fn cs_check(m: usize, n: usize, box_max: i64) -> Result<Outcome> {
    let rep = cartwright_sturmfels_check(m, n, box_max)?;
    let mut out = Outcome::new();
    out.line(format!("m = {m}, n = {n}: dimensions of T/I_2(t), T/J and the binomial formula"));
    for row in &rep.rows {
        let mark = if row.agrees() { "" } else { "  mismatch" };
        out.line(format!(
            "a = ({}): {} {} {}{mark}",
            strings(&row.a).join(","),
            row.determinantal,
            row.monomial,
            row.formula
        ));
    }
    if rep.all_equal {
        out.line(format!("all {} multidegrees agree", rep.rows.len()));
    } else {
        out.status = Status::Negative;
        out.line("the Hilbert functions differ");
    }
    out.field("report", &rep);
    Ok(out)
}

pub fn identity_check(n: u64, b: &[u64], bounded: bool) -> Result<Outcome> {
    if b.is_empty() {
        return Err(CliError::Usage("--b needs at least one part".into()));
    }
    let id = if bounded { bounded_degree_identity(n, b) } else { count_identity(n, b) };
    let mut out = Outcome::new();
    out.line(format!("left: {}", id.left));
    out.line(format!("right: {}", id.right));
    if id.holds() {
        out.line("identity holds");
    } else {
        out.status = Status::Negative;
        out.line("identity fails");
    }
    out.field("n", n);
    out.field("b", b);
    out.field("bounded", bounded);
    out.field("identity", &id);
    out.field("holds", id.holds());
    Ok(out)
}

/// Every `b` in `{1..=max_b}^v` for `v <= max_v`, every `n <= max_n`.
pub fn identity_grid(max_n: u64, max_v: usize, max_b: u64) -> Result<Outcome> {
    let mut checked = 0usize;
    let mut failures: Vec<(u64, Vec<u64>)> = Vec::new();
    for v in 1..=max_v {
        let mut b = vec![1u64; v];
        loop {
            for n in 0..=max_n {
                checked += 1;
                if !count_identity(n, &b).holds() {
                    failures.push((n, b.clone()));
                }
            }
            let Some(p) = b.iter().position(|&x| x < max_b) else { break };
            b[p] += 1;
            b[..p].fill(1);
        }
    }
    let mut out = Outcome::new();
    out.line(format!("checked {checked} cases (n <= {max_n}, v <= {max_v}, b_i <= {max_b})"));
    for (n, b) in &failures {
        out.line(format!("fails at n = {n}, b = ({})", strings(b).join(",")));
    }
    if failures.is_empty() {
        out.line("identity holds on the grid");
    } else {
        out.status = Status::Negative;
    }
    out.field("checked", checked);
    out.field("failures", &failures);
    Ok(out)
}
