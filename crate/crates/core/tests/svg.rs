mod common;

use common::{analyze, curve};
use curve_invariants::svg::{render_svg, Labels};

fn svg(name: &str, labels: &str) -> String {
    let a = analyze(&curve(name));
    render_svg(&a.immersion, Some(&a.smoothed), Some(&a.weights), labels.parse::<Labels>().unwrap())
}

fn texts<'a>(doc: &'a str, class: &str) -> Vec<&'a str> {
    let open = format!(r#"<text class="{class}""#);
    doc.lines()
        .filter(|l| l.trim_start().starts_with(&open))
        .map(|l| {
            let body = &l[l.find('>').unwrap() + 1..];
            &body[..body.find("</text>").unwrap()]
        })
        .collect()
}

#[test]
fn circle_index_labels() {
    let doc = svg("circle16", "indices");
    assert_eq!(texts(&doc, "region-index"), ["1"]);
    assert_eq!(texts(&doc, "edge-index"), ["1/2"]);
    assert!(texts(&doc, "double-index").is_empty());
}

#[test]
fn k2_weight_label() {
    let doc = svg("k2", "weights");
    assert_eq!(texts(&doc, "weight"), ["+1"]);
    assert!(texts(&doc, "edge-index").is_empty());
}

#[test]
fn k2_indices() {
    let doc = svg("k2", "indices");
    let mut regions = texts(&doc, "region-index");
    regions.sort();
    assert_eq!(regions, ["1", "2"]);
    assert_eq!(texts(&doc, "double-index"), ["ind 1"]);
}

#[test]
fn figure_eight_circles_and_alpha() {
    let doc = svg("f8", "circles,alpha");
    assert_eq!(doc.matches(r#"<path class="circle""#).count(), 2);
    let mut alpha = texts(&doc, "alpha");
    alpha.sort();
    assert_eq!(alpha, ["α=+1", "α=-1"]);
}

#[test]
fn layers_are_optional() {
    let doc = svg("k2", "");
    assert!(!doc.contains("<text"));
    assert!(!doc.contains(r#"class="circle""#));
    assert!(doc.contains(r#"class="curve""#) && doc.contains(r#"class="base""#));
}

#[test]
fn rendering_is_deterministic() {
    assert_eq!(svg("f8", "indices,weights,alpha,circles"), svg("f8", "indices,weights,alpha,circles"));
}
