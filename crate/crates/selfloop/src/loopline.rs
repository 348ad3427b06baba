//! One self-loop graph per line: `<graph6> | <loops>`, where `<loops>` is
//! `-` (no loops), `*` (every vertex) or comma-separated vertex indices.

use selfloop_core::graph::{LoopSet, LoopedGraph};

use crate::error::{Result, ShellError};
use crate::graph6::{parse_graph6, print_graph6};

fn err(msg: impl Into<String>) -> ShellError {
    ShellError::LoopLine(msg.into())
}

pub fn parse_loopline(line: &str) -> Result<LoopedGraph> {
    // `|` is a legal graph6 byte, so the separator is the last one.
    let Some((g6, spec)) = line.trim().rsplit_once('|') else {
        return Err(err(format!(
            "expected `<graph6> | <loops>`, got `{}`",
            line.trim()
        )));
    };
    let g = parse_graph6(g6.trim())?;
    let n = g.order();
    let loops = match spec.trim() {
        "-" => LoopSet::empty(),
        "*" => LoopSet::full(n),
        "" => return Err(err("empty loop spec; use `-` for no loops")),
        list => {
            let indices = list
                .split(',')
                .map(|t| {
                    let t = t.trim();
                    t.parse::<usize>()
                        .map_err(|_| err(format!("bad loop index `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if let Some(&v) = indices.iter().find(|&&v| v >= n) {
                return Err(err(format!("loop index {v} out of range for order {n}")));
            }
            LoopSet::from_indices(indices).map_err(|e| err(e.to_string()))?
        }
    };
    Ok(LoopedGraph::new(g, loops)?)
}

/// Canonical form: `-` when there are no loops, `*` when every vertex has
/// one, otherwise increasing indices.
pub fn print_loopline(gs: &LoopedGraph) -> Result<String> {
    let g6 = print_graph6(gs.base())?;
    let spec = if gs.sigma() == 0 {
        "-".to_string()
    } else if gs.sigma() == gs.order() {
        "*".to_string()
    } else {
        let items: Vec<String> = gs.loops().members().iter().map(usize::to_string).collect();
        items.join(",")
    };
    Ok(format!("{g6} | {spec}"))
}

/// Non-empty lines that are not `#` comments, with their 1-based line numbers.
pub fn instance_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let gs = parse_loopline("A_ | 0").unwrap();
        assert_eq!((gs.size(), gs.loops().members()), (1, &[0][..]));
        assert_eq!(parse_loopline("A_ | *").unwrap().sigma(), 2);
        assert_eq!(parse_loopline("A_ | -").unwrap().sigma(), 0);
    }

    #[test]
    fn canonical_print() {
        for line in ["A_ | 0", "A_ | *", "A_ | -", "Bw | 0,2", "? | -"] {
            assert_eq!(print_loopline(&parse_loopline(line).unwrap()).unwrap(), line);
        }
        let gs = parse_loopline("  Bw|2, 0 ").unwrap();
        assert_eq!(print_loopline(&gs).unwrap(), "Bw | 0,2");
        assert_eq!(
            print_loopline(&parse_loopline("A_ | 1,0").unwrap()).unwrap(),
            "A_ | *"
        );
    }

    #[test]
    fn errors() {
        for bad in [
            "A_ | 2",
            "A_ | 0,0",
            "A_ 0",
            "A_ | 0 | 1",
            "A_ |",
            "A_ | x",
            "A | -",
        ] {
            assert!(parse_loopline(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn skips_comments_and_blanks() {
        let text = "# header\n\nA_ | 0\n  \nBw | -\n";
        let lines: Vec<_> = instance_lines(text).collect();
        assert_eq!(lines, vec![(3, "A_ | 0"), (5, "Bw | -")]);
    }
}
