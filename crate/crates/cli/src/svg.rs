//! Braid strand diagrams as standalone SVG documents.
//!
//! One horizontal lane per strand, one column per letter, crossings drawn
//! with the under strand broken. Strands are colored by the closure
//! component they belong to, so split links are visible at a glance.

use std::fmt::Write;
use ttlink::BraidWord;

const STEP: f64 = 36.0;
const PITCH: f64 = 28.0;
const MARGIN: f64 = 20.0;
/// Fraction of a crossing left blank around the over strand.
const GAP: f64 = 0.30;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

fn line(out: &mut String, x1: f64, y1: f64, x2: f64, y2: f64, color: &str) {
    writeln!(
        out,
        r#"  <line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="{color}" stroke-width="2.5" stroke-linecap="round"/>"#
    )
    .expect("writing to a String cannot fail");
}

/// Renders the braid as an SVG document. Reading left to right, the strand
/// headed for the higher-numbered lane passes on top at positive letters and
/// underneath at negative ones.
pub fn braid_svg(word: &BraidWord) -> String {
    let n = word.strands();
    let steps = word.letters().len();
    let lane_y = |lane: usize| MARGIN + PITCH * lane as f64;
    let col_x = |col: usize| MARGIN + STEP * (col as f64 + 0.5);
    let width = 2.0 * MARGIN + STEP * (steps as f64 + 1.0);
    let height = 2.0 * MARGIN + PITCH * (n as f64 - 1.0);

    let labels = word.closure_components();
    let color_of = |strand: usize| PALETTE[labels.label()[strand] % PALETTE.len()];

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    )
    .unwrap();
    writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#).unwrap();

    // Strand occupying each lane, updated as the crossings are drawn.
    let mut at: Vec<usize> = (0..n).collect();

    // Lead-in stubs.
    for (lane, &strand) in at.iter().enumerate() {
        line(&mut out, MARGIN, lane_y(lane), col_x(0), lane_y(lane), color_of(strand));
    }
    for (col, &letter) in word.letters().iter().enumerate() {
        let (x0, x1) = (col_x(col), col_x(col + 1));
        let upper = letter.unsigned_abs() as usize - 1;
        let lower = upper + 1;
        for lane in (0..n).filter(|&l| l != upper && l != lower) {
            line(&mut out, x0, lane_y(lane), x1, lane_y(lane), color_of(at[lane]));
        }
        // The strand leaving the upper lane heads down and passes over at
        // positive letters; the other diagonal is drawn in two pieces.
        let (ya, yb) = (lane_y(upper), lane_y(lower));
        let (over_from, over_to, under_from, under_to, over_strand, under_strand) = if letter > 0 {
            (ya, yb, yb, ya, at[upper], at[lower])
        } else {
            (yb, ya, ya, yb, at[lower], at[upper])
        };
        line(&mut out, x0, over_from, x1, over_to, color_of(over_strand));
        let cut = |f: f64| (x0 + (x1 - x0) * f, under_from + (under_to - under_from) * f);
        let (bx, by) = cut(0.5 - GAP / 2.0);
        let (cx, cy) = cut(0.5 + GAP / 2.0);
        line(&mut out, x0, under_from, bx, by, color_of(under_strand));
        line(&mut out, cx, cy, x1, under_to, color_of(under_strand));
        at.swap(upper, lower);
    }
    // Lead-out stubs.
    for (lane, &strand) in at.iter().enumerate() {
        line(
            &mut out,
            col_x(steps),
            lane_y(lane),
            width - MARGIN,
            lane_y(lane),
            color_of(strand),
        );
    }
    writeln!(out, "</svg>").unwrap();
    out
}
