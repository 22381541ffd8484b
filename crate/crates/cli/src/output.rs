//! Textual and JSON renderings of library results.

use fpinv::finverse::Certificate;
use fpinv::stephen::Approximant;
use fpinv::words::Alphabet;

/// Deterministic JSON for an approximant: sorted positive edges plus run
/// metadata.
pub fn approximant_json(app: &Approximant, alphabet: &Alphabet) -> String {
    let g = &app.graph;
    let mut edges: Vec<serde_json::Value> = Vec::new();
    for (u, l, v) in g.edges() {
        if !l.inverse {
            edges.push(serde_json::json!([u, alphabet.name(l.gen), v]));
        }
    }
    let value = serde_json::json!({
        "source_word": alphabet.format_word(&app.source_word),
        "vertices": g.vertex_count(),
        "alpha": g.alpha(),
        "beta": g.beta(),
        "rounds": app.rounds_done,
        "saturated": app.saturated,
        "vertex_limit_hit": app.vertex_limit_hit,
        "edges": edges,
    });
    serde_json::to_string_pretty(&value).expect("serializes")
}

/// Human rendering of a max-search certificate.
pub fn certificate_text(
    cert: &Certificate,
    presentation_names: &Alphabet,
    oracle_names: &Alphabet,
) -> String {
    match cert {
        Certificate::Identity => "certificate: identity class\n".to_string(),
        Certificate::SprawlingPath { radius, steps } => {
            let mut out = format!("certificate: path in Sg(1) ∪ g·Sg(1) at radius {radius}\n");
            for (l, vertex, side) in steps {
                let side = match side {
                    fpinv::finverse::UnionSide::Base => "Sg",
                    fpinv::finverse::UnionSide::Translate => "g·Sg",
                    fpinv::finverse::UnionSide::Both => "both",
                };
                out.push_str(&format!(
                    "  --{}--> {}   [{}]\n",
                    presentation_names.format_word(&fpinv::words::Word(vec![*l])),
                    oracle_names.format_word(vertex),
                    side
                ));
            }
            out
        }
        Certificate::Blocks(blocks) => {
            let mut out = String::from("certificate: alternating block decomposition\n");
            for b in blocks {
                out.push_str(&format!(
                    "  {} block {} -> {}\n",
                    if b.relational { "relational" } else { "free" },
                    presentation_names.format_word(&b.fragment),
                    presentation_names.format_word(&b.representative),
                ));
            }
            out
        }
    }
}
