//! DOT rendering of the Bruhat covering relation on a ball.

use std::fmt::Write;

use affhecke::{AffineWeylGroup, Ball};

/// Hasse diagram with edges `u -> w` for `u < w`, `l(w) = l(u) + 1`. Nodes are
/// numbered in (length, canonical word) order.
pub fn hasse_dot(group: &AffineWeylGroup, ball: &Ball) -> String {
    let mut out = String::new();
    let ct = group.cartan_type();
    writeln!(out, "digraph bruhat_{ct} {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();

    let mut offsets = Vec::with_capacity(ball.shells.len());
    let mut next = 0;
    for shell in &ball.shells {
        offsets.push(next);
        next += shell.len();
    }
    for (length, shell) in ball.shells.iter().enumerate() {
        for (k, x) in shell.iter().enumerate() {
            let word = group.reduced_word(x);
            writeln!(out, "  n{} [label=\"{word}\"];", offsets[length] + k).unwrap();
        }
    }
    for (length, pair) in ball.shells.windows(2).enumerate() {
        for (a, u) in pair[0].iter().enumerate() {
            for (b, w) in pair[1].iter().enumerate() {
                if group.bruhat_leq(u, w) {
                    writeln!(
                        out,
                        "  n{} -> n{};",
                        offsets[length] + a,
                        offsets[length + 1] + b
                    )
                    .unwrap();
                }
            }
        }
    }
    out.push_str("}\n");
    out
}
