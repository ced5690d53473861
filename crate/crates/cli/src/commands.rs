use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use catsimp::algebra::{check_group, eckmann_hilton_scan, orbit};
use catsimp::budget::{DEFAULT_FUNCTOR_BUDGET, DEFAULT_SSET_BUDGET};
use catsimp::homotopy::{abelian_invariants, pi0, pi1, svk_pushout, tietze_simplify, EdgeOrder, Presentation};
use catsimp::io::{
    morphism_list, parse_json, to_json, ActionFile, BifunctorFile, CategoryFile, DiagramFile, FunctorFile, IoError,
    ModelFile, MonoidFile, PresentationFile, SimplicialSetFile, SvkFile,
};
use catsimp::modelcat::{check_model, localize, saturate_two_of_three};
use catsimp::setcalc::{coend, colimit, end, lan, limit, ran, KanExtension};
use catsimp::simplicial::{classify, nerve, ClassifyReport};
use catsimp::subdivision::{ex, ex_iter, sd};
use catsimp::{Budget, Cone, Diagram, Error, FinCategory, SimplicialSet};

use crate::{Cli, Command, Global};

/// Default horn-scan dimension when neither `--max-dim` nor the file says otherwise.
const DEFAULT_MAX_DIM: usize = 3;

/// Tietze moves allowed when printing a simplified presentation.
const TIETZE_STEPS: usize = 10_000;

pub struct Output {
    pub text: String,
    pub status: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, status: 0 }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| IoError::Schema(format!("{}: {e}", path.display())).into())
}

fn load<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Error> {
    parse_json(&read(path)?)
}

fn load_sset(path: &Path) -> Result<SimplicialSet, Error> {
    load::<SimplicialSetFile>(path)?.to_sset()
}

fn sset_budget(g: &Global) -> Budget {
    Budget::new(g.budget.unwrap_or(DEFAULT_SSET_BUDGET))
}

fn functor_budget(g: &Global) -> Budget {
    Budget::new(g.budget.unwrap_or(DEFAULT_FUNCTOR_BUDGET))
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn counts_line(counts: &[usize]) -> String {
    let parts: Vec<String> = counts.iter().map(usize::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn run(cli: &Cli) -> Result<Output, Error> {
    let g = &cli.global;
    match &cli.command {
        Command::Check { file } => check(&read(file)?).map(Output::ok),
        Command::Limit { diagram } => {
            let d = load::<DiagramFile>(diagram)?.to_diagram()?;
            Ok(Output::ok(cone_report("limit", &d, &limit(&d))))
        }
        Command::Colimit { diagram } => {
            let d = load::<DiagramFile>(diagram)?.to_diagram()?;
            Ok(Output::ok(cone_report("colimit", &d, &colimit(&d))))
        }
        Command::KanLeft { diagram, functor } | Command::KanRight { diagram, functor } => {
            let d = load::<DiagramFile>(diagram)?.to_diagram()?;
            let i = load::<FunctorFile>(functor)?.to_functor()?;
            let left = matches!(cli.command, Command::KanLeft { .. });
            let k = if left { lan(&d, &i)? } else { ran(&d, &i)? };
            Ok(Output::ok(kan_report(if left { "Lan" } else { "Ran" }, &k)))
        }
        Command::End { bifunctor } => {
            let h = load::<BifunctorFile>(bifunctor)?.to_bifunctor()?;
            let e = end(&h);
            Ok(Output::ok(format!(
                "end: {} elements\n{}\n",
                e.len(),
                braces(e.elements())
            )))
        }
        Command::Coend { bifunctor } => {
            let h = load::<BifunctorFile>(bifunctor)?.to_bifunctor()?;
            let e = coend(&h);
            Ok(Output::ok(format!(
                "coend: {} elements\n{}\n",
                e.len(),
                braces(e.elements())
            )))
        }
        Command::Nerve { category, json } => {
            let c = load::<CategoryFile>(category)?.to_category()?;
            let n = nerve(&c, g.max_dim.unwrap_or(DEFAULT_MAX_DIM));
            if *json {
                return Ok(Output::ok(to_json(&SimplicialSetFile::from_sset(&n))));
            }
            Ok(Output::ok(sset_counts(&n)))
        }
        Command::Horns { sset } => {
            let x = load_sset(sset)?;
            let r = classify(&x, g.max_dim.unwrap_or(x.max_dim()), &mut sset_budget(g))?;
            Ok(Output::ok(horn_table(&r)))
        }
        Command::Classify { sset } => {
            let x = load_sset(sset)?;
            let r = classify(&x, g.max_dim.unwrap_or(x.max_dim()), &mut sset_budget(g))?;
            Ok(Output::ok(classify_report(&r)))
        }
        Command::Pi0 { sset } => {
            let x = load_sset(sset)?;
            let comps = pi0(&x);
            let mut out = format!("components: {}\n", comps.len());
            for c in &comps {
                writeln!(out, "{}", braces(c)).unwrap();
            }
            Ok(Output::ok(out))
        }
        Command::Pi1 { sset, base, reversed } => {
            let x = load_sset(sset)?;
            let order = if *reversed {
                EdgeOrder::Reversed
            } else {
                EdgeOrder::Lexicographic
            };
            let p = pi1(&x, base, order)?;
            let mut out = presentation_report(&p.presentation);
            writeln!(out, "tree: {}", braces(&p.tree)).unwrap();
            writeln!(out, "simplified: {}", tietze_simplify(&p.presentation, TIETZE_STEPS)).unwrap();
            Ok(Output::ok(out))
        }
        Command::Svk { span } => {
            let (phi1, phi2) = load::<SvkFile>(span)?.to_homs()?;
            let p = svk_pushout(&phi1, &phi2)?;
            let mut out = presentation_report(&p);
            writeln!(out, "simplified: {}", tietze_simplify(&p, TIETZE_STEPS)).unwrap();
            Ok(Output::ok(out))
        }
        Command::Sd { sset } => {
            let x = load_sset(sset)?;
            Ok(Output::ok(to_json(&SimplicialSetFile::from_sset(&sd(&x)))))
        }
        Command::Ex { sset } => {
            let x = load_sset(sset)?;
            let y = ex(&x, &mut sset_budget(g))?;
            Ok(Output::ok(to_json(&SimplicialSetFile::from_sset(&y))))
        }
        Command::ExIter { sset, k, out } => {
            let x = load_sset(sset)?;
            let max_dim = g.max_dim.unwrap_or(x.max_dim());
            let (last, stages) = ex_iter(&x, *k, max_dim, &mut sset_budget(g))?;
            let mut text = String::new();
            for s in &stages {
                writeln!(
                    text,
                    "stage {}: cells {}, unfilled horns {} (inner {}), verdict {}",
                    s.stage,
                    counts_line(&s.nondegenerate_counts),
                    s.horns.unfilled(),
                    s.horns.unfilled_inner(),
                    s.horns.verdict
                )
                .unwrap();
            }
            if let Some(path) = out {
                fs::write(path, to_json(&SimplicialSetFile::from_sset(&last)))
                    .map_err(|e| IoError::Schema(format!("{}: {e}", path.display())))?;
            }
            Ok(Output::ok(text))
        }
        Command::Localize { category, weq, cap } => {
            let c = load::<CategoryFile>(category)?.to_category()?;
            let seed = morphism_list(&c, weq)?;
            let m = saturate_two_of_three(&c, &seed);
            let loc = localize(&m, *cap)?;
            let names: Vec<String> = m
                .weak_equivalences()
                .iter()
                .map(|&f| c.morphism_name(f).to_string())
                .collect();
            let mut out = format!("weak equivalences: {}\n", braces(&names));
            out.push_str(&category_summary(&loc.category));
            for f in c.morphisms() {
                writeln!(
                    out,
                    "{} ↦ {}",
                    c.morphism_name(f),
                    loc.category.morphism_name(loc.functor.mor(f))
                )
                .unwrap();
            }
            Ok(Output::ok(out))
        }
        Command::ModelCheck { model } => {
            let m = load::<ModelFile>(model)?.to_model()?;
            let report = check_model(&m);
            let status = if report.passed() { 0 } else { 1 };
            Ok(Output {
                text: format!("{report}\n"),
                status,
            })
        }
        Command::CheckMonoid { monoid } => {
            let m = load::<MonoidFile>(monoid)?.to_monoid()?;
            let mut out = format!("monoid: {} elements, unit {}\n", m.len(), m.carrier.element(m.unit));
            match check_group(&m) {
                Ok(_) => out.push_str("group: yes\n"),
                Err(e) => writeln!(out, "group: no ({e})").unwrap(),
            }
            let commutative = (0..m.len()).all(|a| (0..m.len()).all(|b| m.mul(a, b) == m.mul(b, a)));
            writeln!(out, "commutative: {}", if commutative { "yes" } else { "no" }).unwrap();
            Ok(Output::ok(out))
        }
        Command::CheckAction { action } => {
            let a = load::<ActionFile>(action)?.to_action()?;
            Ok(Output::ok(format!(
                "action: monoid of {} elements on {} points\n",
                a.actor.len(),
                a.space.len()
            )))
        }
        Command::Orbit { action } => {
            let a = load::<ActionFile>(action)?.to_action()?;
            let orbits = orbit(&a)?;
            let mut out = format!("orbits: {}\n", orbits.len());
            for o in &orbits {
                writeln!(out, "{}", braces(o)).unwrap();
            }
            Ok(Output::ok(out))
        }
        Command::EckmannHilton { max_size } => {
            let reports = eckmann_hilton_scan(*max_size, &mut functor_budget(g))?;
            let mut out = String::new();
            let mut failed = false;
            for r in &reports {
                writeln!(
                    out,
                    "size {}: unital operations {}, interchange pairs {}, distinct units {}, counterexamples {}",
                    r.size,
                    r.unital_operations,
                    r.interchange_pairs,
                    r.distinct_units,
                    r.counterexamples.len()
                )
                .unwrap();
                for c in &r.counterexamples {
                    failed = true;
                    writeln!(
                        out,
                        "  counterexample: {} (∘ = {:?}, ⋆ = {:?})",
                        c.reason, c.circ, c.star
                    )
                    .unwrap();
                }
            }
            Ok(Output {
                text: out,
                status: u8::from(failed),
            })
        }
    }
}

fn cone_report(kind: &str, d: &Diagram, cone: &Cone) -> String {
    let mut out = format!(
        "{kind}: {} elements\n{}\n",
        cone.apex.len(),
        braces(cone.apex.elements())
    );
    for (x, leg) in d.shape.objects().zip(&cone.legs) {
        let pairs: Vec<String> = (0..leg.source.len())
            .map(|a| format!("{} ↦ {}", leg.source.element(a), leg.target.element(leg.apply(a))))
            .collect();
        writeln!(out, "leg {}: {}", d.shape.object_name(x), braces(&pairs)).unwrap();
    }
    out
}

fn kan_report(kind: &str, k: &KanExtension) -> String {
    let e = &k.extension;
    let mut out = String::new();
    for x in e.shape.objects() {
        let s = e.set(x);
        writeln!(
            out,
            "{kind}({}): {} elements {}",
            e.shape.object_name(x),
            s.len(),
            braces(s.elements())
        )
        .unwrap();
    }
    out
}

fn sset_counts(x: &SimplicialSet) -> String {
    let all: Vec<usize> = (0..=x.max_dim()).map(|n| x.count_cells(n)).collect();
    format!(
        "nondegenerate: {}\ntotal: {}\n",
        counts_line(&x.nondegenerate_counts()),
        counts_line(&all)
    )
}

fn horn_table(r: &ClassifyReport) -> String {
    let mut out = String::from("n k assignments unfilled ambiguous\n");
    for s in &r.stats {
        writeln!(out, "{} {} {} {} {}", s.n, s.k, s.assignments, s.unfilled, s.ambiguous).unwrap();
    }
    out
}

fn classify_report(r: &ClassifyReport) -> String {
    let mut out = format!("verdict: {} (checked through dimension {})\n", r.verdict, r.max_dim);
    writeln!(out, "unfilled horns: {} (inner {})", r.unfilled(), r.unfilled_inner()).unwrap();
    if let Some(w) = &r.inner_witness {
        writeln!(out, "inner witness: {w}").unwrap();
    }
    if let Some(w) = &r.outer_witness {
        writeln!(out, "outer witness: {w}").unwrap();
    }
    out
}

fn presentation_report(p: &Presentation) -> String {
    format!(
        "generators: {}, relators: {}, abelianization: {}\npresentation: {p}\n",
        p.generators.len(),
        p.relators.len(),
        abelian_invariants(p)
    )
}

fn category_summary(c: &FinCategory) -> String {
    let isos = c.morphisms().filter(|&f| c.is_iso(f)).count();
    format!(
        "objects: {}, morphisms: {} ({} non-identity, {} isomorphisms)\n",
        c.num_objects(),
        c.num_morphisms(),
        c.non_identities().count(),
        isos
    )
}

/// Validates a file of any kind, recognised by its top-level keys.
fn check(text: &str) -> Result<String, Error> {
    let value: serde_json::Value = parse_json(text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| IoError::Schema("expected a JSON object".into()))?;
    let has = |k: &str| obj.contains_key(k);
    if has("shape") {
        let d = parse_json::<DiagramFile>(text)?.to_diagram()?;
        Ok(format!(
            "diagram: shape with {} objects, {} morphisms; total elements {}\n",
            d.shape.num_objects(),
            d.shape.num_morphisms(),
            d.total_size()
        ))
    } else if has("source") && has("target") {
        let f = parse_json::<FunctorFile>(text)?.to_functor()?;
        Ok(format!(
            "functor: {} objects, {} morphisms → {} objects, {} morphisms\n",
            f.source.num_objects(),
            f.source.num_morphisms(),
            f.target.num_objects(),
            f.target.num_morphisms()
        ))
    } else if has("category") && has("sets") {
        let h = parse_json::<BifunctorFile>(text)?.to_bifunctor()?;
        Ok(format!("bifunctor: total elements {}\n", h.diagram().total_size()))
    } else if has("category") && has("weq") {
        let m = parse_json::<ModelFile>(text)?.to_model()?;
        let mut out = String::from("model structure:");
        for (i, k) in catsimp::modelcat::ModelClass::ALL.iter().enumerate() {
            let n = m.class(*k).iter().filter(|&&b| b).count();
            write!(out, "{} {} {n}", if i == 0 { "" } else { "," }, k.name()).unwrap();
        }
        out.push('\n');
        Ok(out)
    } else if has("objects") {
        let c = parse_json::<CategoryFile>(text)?.to_category()?;
        Ok(format!("category: {}", category_summary(&c)))
    } else if has("cells") {
        let x = parse_json::<SimplicialSetFile>(text)?.to_sset()?;
        Ok(format!(
            "simplicial set: dimension {}, {}",
            x.max_dim(),
            sset_counts(&x)
        ))
    } else if has("p0") {
        let (phi1, phi2) = parse_json::<SvkFile>(text)?.to_homs()?;
        Ok(format!(
            "span: {} generators into {} and {}\n",
            phi1.source.generators.len(),
            phi1.target.generators.len(),
            phi2.target.generators.len()
        ))
    } else if has("gens") {
        let p = parse_json::<PresentationFile>(text)?.to_presentation()?;
        Ok(presentation_report(&p))
    } else if has("space") {
        let a = parse_json::<ActionFile>(text)?.to_action()?;
        Ok(format!(
            "action: monoid of {} elements on {} points\n",
            a.actor.len(),
            a.space.len()
        ))
    } else if has("table") {
        let m = parse_json::<MonoidFile>(text)?.to_monoid()?;
        Ok(format!(
            "monoid: {} elements, unit {}\n",
            m.len(),
            m.carrier.element(m.unit)
        ))
    } else {
        Err(IoError::Schema("unrecognised file kind".into()).into())
    }
}
