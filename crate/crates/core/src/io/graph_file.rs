use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::content_lines;

fn numbers<const N: usize>(line: usize, fields: &[&str]) -> Result<[usize; N]> {
    if fields.len() != N {
        return Err(Error::parse(line, format!("expected {N} numbers, found {}", fields.len())));
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f.parse().map_err(|_| Error::parse(line, format!("invalid number {f:?}")))?;
    }
    Ok(out)
}

/// Reads `p graph <n> <m>` followed by `m` lines `e <u> <v>`. Edge order in
/// the file is the edge labelling.
pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header `p graph <n> <m>`"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() < 2 || fields[0] != "p" || fields[1] != "graph" {
        return Err(Error::parse(hline, "expected header `p graph <n> <m>`"));
    }
    let [n, m] = numbers::<2>(hline, &fields[2..])?;
    if n == 0 {
        return Err(Error::parse(hline, "graph needs at least one vertex"));
    }

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, l) in lines {
        last_line = line;
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields[0] != "e" {
            return Err(Error::parse(line, format!("expected edge line `e <u> <v>`, found {l:?}")));
        }
        let [u, v] = numbers::<2>(line, &fields[1..])?;
        if u == v {
            return Err(Error::parse(line, format!("self-loop on vertex {u}")));
        }
        if u == 0 || v == 0 || u > n || v > n {
            return Err(Error::parse(line, format!("vertex outside 1..={n} in edge ({u}, {v})")));
        }
        if edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == (u.min(v), u.max(v))) {
            return Err(Error::parse(line, format!("duplicate edge ({u}, {v})")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(last_line, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p graph {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE5: &str = "p graph 5 7\ne 1 2\ne 2 5\ne 3 5\ne 3 4\ne 4 5\ne 1 4\ne 1 5\n";

    #[test]
    fn reads_sample5() {
        assert_eq!(read_graph(SAMPLE5).unwrap(), Graph::paper_fig2());
        assert_eq!(write_graph(&Graph::paper_fig2()), SAMPLE5);
    }

    #[test]
    fn isolated_vertex() {
        let g = read_graph("p graph 1 0").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = read_graph("c a triangle\n\np graph 3 3\ne 1 2\nc middle\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    fn line_of(text: &str) -> usize {
        match read_graph(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of("p graph 2 1\ne 1 1\n"), 2);
        assert_eq!(line_of("p graph 2 2\ne 1 2\ne 2 1\n"), 3);
        assert_eq!(line_of("p graph 2 1\ne 1 3\n"), 2);
        assert_eq!(line_of("p graph 2 1\nx 1 2\n"), 2);
        assert_eq!(line_of("p graph 2 1\ne 1\n"), 2);
        assert_eq!(line_of("p graph 3 2\ne 1 2\n"), 2);
        assert_eq!(line_of("p cnf 3 2\n"), 1);
        assert_eq!(line_of(""), 1);
        assert_eq!(line_of("p graph 0 0"), 1);
    }
}
