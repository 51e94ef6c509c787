//! Text and DOT renderings. Everything here is a pure function of its input,
//! so repeated runs produce identical bytes.

use std::fmt::Write as _;

use edgewise::homology::{HomologyReport, Verdict};
use edgewise::simplicial::SkeletonGraph;
use edgewise::word::{Gap, SimplicialInterval, Word};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn dot(word: &Word, m: usize, g: &SkeletonGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(&format!("{word} on Delta^{m}")));
    for v in &g.vertices {
        let _ = writeln!(out, "  {};", quote(v));
    }
    for e in &g.edges {
        let _ = writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(&e.from),
            quote(&e.to),
            quote(&e.label)
        );
    }
    if !g.triangles.is_empty() {
        out.push_str("  /* triangles\n");
        for t in &g.triangles {
            let _ = writeln!(
                out,
                "     {} {} {}  {}",
                t.vertices[0], t.vertices[1], t.vertices[2], t.label
            );
        }
        out.push_str("  */\n");
    }
    out.push_str("}\n");
    out
}

pub fn skeleton_text(word: &Word, m: usize, g: &SkeletonGraph) -> String {
    let (v, e, f) = g.counts();
    let mut out = String::new();
    let _ = writeln!(out, "{word} on Δ^{m}");
    let _ = writeln!(out, "vertices ({v}): {}", g.vertices.join(" "));
    let _ = writeln!(out, "edges ({e}):");
    for edge in &g.edges {
        let _ = writeln!(out, "  {} -> {}  {}", edge.from, edge.to, edge.label);
    }
    let _ = writeln!(out, "triangles ({f}):");
    for t in &g.triangles {
        let _ = writeln!(
            out,
            "  {} {} {}  {}",
            t.vertices[0], t.vertices[1], t.vertices[2], t.label
        );
    }
    let _ = writeln!(out, "euler characteristic: {}", g.euler_characteristic());
    out
}

/// `0 -> 1 <- 2 | 3`: arrows for edges, a bar where a gap is empty.
pub fn zigzag(interval: &SimplicialInterval) -> String {
    let mut out = String::from("0");
    for (k, gap) in interval.gaps.iter().enumerate() {
        let joint = match gap {
            Gap::Forward => "->",
            Gap::Backward => "<-",
            Gap::Empty => "|",
        };
        let _ = write!(out, " {joint} {}", k + 1);
    }
    out
}

fn groups(report: &HomologyReport) -> String {
    report
        .degrees
        .iter()
        .map(|d| {
            let mut parts: Vec<String> = Vec::new();
            if d.betti > 0 {
                parts.push(if d.betti == 1 {
                    "Z".into()
                } else {
                    format!("Z^{}", d.betti)
                });
            }
            parts.extend(d.torsion.iter().map(|t| format!("Z/{t}")));
            let group = if parts.is_empty() {
                "0".into()
            } else {
                parts.join(" + ")
            };
            format!("H{}={group}", d.degree)
        })
        .collect::<Vec<_>>()
        .join("  ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn verdict_text(v: &Verdict) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "word: {}", v.word);
    let _ = writeln!(out, "constant summand absent: {}", yes_no(v.criterion));
    let _ = writeln!(
        out,
        "interval T*(Δ^1): {}  ({} component{})",
        zigzag(&v.interval),
        v.interval.components(),
        if v.interval.components() == 1 {
            ""
        } else {
            "s"
        }
    );
    for e in &v.evidence {
        let _ = writeln!(
            out,
            "reduced homology of T*(Δ^{}): {}  vanishes: {}",
            e.n,
            groups(&e.reduced),
            yes_no(e.vanishes)
        );
    }
    let _ = writeln!(out, "evidence consistent: {}", yes_no(v.consistent));
    let _ = writeln!(out, "verdict: {}", v.certification);
    out
}

pub fn homology_text(
    word: &str,
    m: usize,
    ranks: &[usize],
    unreduced: &HomologyReport,
    reduced: &HomologyReport,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{word} on Δ^{m}");
    let ranks: Vec<String> = ranks.iter().map(usize::to_string).collect();
    let _ = writeln!(out, "chain ranks: {}", ranks.join(" "));
    let _ = writeln!(out, "homology:         {}", groups(unreduced));
    let _ = writeln!(out, "reduced homology: {}", groups(reduced));
    if !unreduced.top_degree_exact {
        let _ = writeln!(
            out,
            "note: simplices exist above degree {}; the top group is an upper bound",
            unreduced.degrees.len() - 1
        );
    }
    out
}
