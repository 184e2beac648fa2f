use std::collections::BTreeMap;

use nondeg_core::export::{
    graph_dot, graph_json, graph_text, int_json, parse_rational, poly_json, rational_string,
    spectrum_json, vec3_json,
};
use nondeg_core::newton::{
    classify_diagram, is_convenient, is_isolated, is_rhs_link, newton_polyhedron, poincare_newton,
    saito_spectrum, Anatomy, CentralPart,
};
use nondeg_core::sequences::minus_reduced;
use nondeg_core::series::{complement_of_gamma_plus, counting_q_auto, enumerate_p};
use nondeg_core::{
    canonical_cycle, intersection_data, merle_teissier_zk, minimal_model, oka_graph, Analysis,
    Error, Rational, Support, TieBreak,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::{Command, Failure, Format, Output, Suite};

type Outcome = Result<Output, Failure>;

fn report(result: Value) -> Outcome {
    Ok(Output::Report { result, oracles: None })
}

pub fn run(cmd: &Command, s: &Support) -> Outcome {
    match cmd {
        Command::Diagram => diagram(s),
        Command::Graph { minimal, format } => graph(s, *minimal, *format),
        Command::Pg => pg(s),
        Command::Spectrum => spectrum(s),
        Command::Poincare { max_exponent } => poincare(s, max_exponent),
        Command::Sw => sw(s),
        Command::Verify { suite } => verify(s, *suite),
    }
}

fn require_isolated(s: &Support) -> Result<(), Failure> {
    if is_isolated(s) {
        Ok(())
    } else {
        Err(Error::NotIsolated.into())
    }
}

fn anatomy_json(a: &Anatomy) -> Value {
    let central = match &a.central {
        CentralPart::Triangle(f) => json!({ "kind": "triangle", "face": f }),
        CentralPart::Trapezoid(f) => json!({ "kind": "trapezoid", "face": f }),
        CentralPart::Edges(edges) => json!({
            "kind": "edges",
            "edges": edges.iter().map(|(p, q)| json!([vec3_json(p), vec3_json(q)])).collect::<Vec<_>>(),
        }),
        CentralPart::None => json!({ "kind": "none" }),
    };
    json!({ "central": central, "arms": a.arms })
}

fn diagram(s: &Support) -> Outcome {
    require_isolated(s)?;
    let poly = newton_polyhedron(s)?;
    poly.require_compact()?;
    let mut faces = Vec::new();
    for f in poly.compact_faces() {
        faces.push(json!({
            "normal": vec3_json(&f.normal),
            "value": int_json(&f.value),
            "vertices": f.vertices.iter().map(vec3_json).collect::<Vec<_>>(),
            "interior_points": int_json(&f.interior_point_count()?),
        }));
    }
    let rhs = is_rhs_link(s)?;
    let anatomy = if rhs { anatomy_json(&classify_diagram(s)?) } else { Value::Null };
    report(json!({
        "faces": faces,
        "convenient": is_convenient(s),
        "rational_homology_sphere": rhs,
        "anatomy": anatomy,
    }))
}

fn graph(s: &Support, minimal: bool, format: Format) -> Outcome {
    require_isolated(s)?;
    let og = oka_graph(s)?;
    let (g, ell) = if minimal {
        (minimal_model(&og.graph)?, None)
    } else {
        (og.graph.clone(), Some(og.ell.as_slice()))
    };
    match format {
        Format::Json => report(json!({ "graph": graph_json(&g, ell), "nodes": og.num_nodes() })),
        Format::Text => Ok(Output::Plain(graph_text(&g, ell))),
        Format::Dot => Ok(Output::Plain(graph_dot(&g))),
    }
}

fn pg(s: &Support) -> Outcome {
    let a = Analysis::new(s)?;
    let (s1, s3) = a.genus_pair();
    Ok(Output::Report {
        result: json!({ "pg": int_json(&a.geometric_genus()) }),
        oracles: Some(json!({ "sequence_i": s1 == s3 })),
    })
}

fn spectrum(s: &Support) -> Outcome {
    let a = Analysis::new(s)?;
    let sp = a.spectrum_leq0()?;
    let saito = saito_spectrum(s)?;
    Ok(Output::Report {
        result: json!({ "spectrum": spectrum_json(&sp), "multiplicity": sp.len() }),
        oracles: Some(json!({ "saito": sp == saito })),
    })
}

fn poincare(s: &Support, max: &str) -> Outcome {
    let r = parse_rational(max).map_err(|e| Failure { error: e, code: 2 })?;
    if r <= Rational::from_integer(BigInt::from(0)) {
        return Err(Failure {
            error: Error::OutOfRange("maximal exponent must be positive".into()),
            code: 2,
        });
    }
    let a = Analysis::new(s)?;
    let series = a.poincare_via_sequence(&r)?;
    let newton = poincare_newton(s, &r)?;
    Ok(Output::Report {
        result: json!({ "max_exponent": rational_string(&r), "series": poly_json(&series) }),
        oracles: Some(json!({ "newton_filtration": series == newton })),
    })
}

fn sw(s: &Support) -> Outcome {
    let a = Analysis::new(s)?;
    let sw = a.sw_invariant();
    report(json!({
        "value": int_json(&sw.value),
        "zk_squared": int_json(&sw.zk_sq),
        "vertices": sw.vertex_count,
        "sw_canonical": rational_string(&a.sw_canonical()),
    }))
}

fn verify(s: &Support, suite: Suite) -> Outcome {
    let a = Analysis::new(s)?;
    let pg = a.geometric_genus();
    let mut checks: BTreeMap<&str, bool> = BTreeMap::new();
    if matches!(suite, Suite::All | Suite::Points) {
        let conv = &a.convenient;
        let outside = complement_of_gamma_plus(&conv.oka, &minus_reduced(&conv.zk));
        checks.insert("pg_equals_point_count", BigInt::from(outside.len()) == pg);
        checks.insert("spectrum_equals_saito", a.spectrum_leq0()? == saito_spectrum(s)?);
        checks.insert("point_sets_partition", enumerate_p(&conv.oka, &a.seq_iii).is_ok());
    }
    if matches!(suite, Suite::All | Suite::Sequences) {
        let (s1, s3) = a.genus_pair();
        checks.insert("sequence_i_equals_sequence_iii", s1 == s3);
        checks.insert(
            "ratios_nondecreasing",
            a.seq_i.ratios_nondecreasing() && a.seq_iii.ratios_nondecreasing(),
        );
        let three = Rational::from_integer(BigInt::from(3));
        checks.insert(
            "poincare_equals_newton",
            a.poincare_via_sequence(&three)? == poincare_newton(s, &three)?,
        );
        let rev = Analysis::with_tie_break(s, TieBreak::Reversed)?;
        checks.insert(
            "tie_break_invariant",
            rev.geometric_genus() == pg
                && rev.spectrum_leq0()? == a.spectrum_leq0()?
                && rev.sw_invariant() == a.sw_invariant(),
        );
    }
    if matches!(suite, Suite::All | Suite::Series) {
        let data = intersection_data(&a.minimal)?;
        checks.insert("q_zk_equals_pg", counting_q_auto(&data, &a.minimal, &a.minimal_zk)? == pg);
        let og = &a.convenient.oka;
        let adj = canonical_cycle(&og.graph)?.to_integral();
        checks.insert(
            "zk_equals_merle_teissier",
            adj.is_some_and(|z| z == merle_teissier_zk(og, &a.convenient.support)),
        );
    }
    let passed = checks.values().all(|&b| b);
    Ok(Output::Report {
        result: json!({ "pg": int_json(&pg), "passed": passed }),
        oracles: Some(json!(checks)),
    })
}
