use crate::boolean::{Clause, Cnf};
use crate::error::{Error, Result};
use crate::io::content_lines;

/// Reads DIMACS CNF. Clauses may span lines and each ends with `0`.
pub fn read_cnf(text: &str) -> Result<(Cnf, usize)> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header `p cnf <n> <m>`"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
        return Err(Error::parse(hline, "expected header `p cnf <n> <m>`"));
    }
    let parse_count = |s: &str| s.parse::<usize>().map_err(|_| Error::parse(hline, format!("invalid number {s:?}")));
    let (n, m) = (parse_count(fields[2])?, parse_count(fields[3])?);

    let mut clauses = Vec::with_capacity(m);
    let mut pending: Vec<i64> = Vec::new();
    let mut last_line = hline;
    for (line, l) in lines {
        last_line = line;
        for tok in l.split_whitespace() {
            let lit: i64 = tok.parse().map_err(|_| Error::parse(line, format!("invalid literal {tok:?}")))?;
            if lit == 0 {
                let clause = Clause::from_dimacs(&pending).map_err(|e| Error::parse(line, e.to_string()))?;
                clauses.push(clause);
                pending.clear();
            } else {
                if lit.unsigned_abs() as usize > n {
                    return Err(Error::parse(line, format!("literal {lit} out of range for {n} variables")));
                }
                pending.push(lit);
            }
        }
    }
    if !pending.is_empty() {
        return Err(Error::parse(last_line, "last clause is missing its terminating 0"));
    }
    if clauses.len() != m {
        return Err(Error::parse(last_line, format!("header declares {m} clauses, found {}", clauses.len())));
    }
    Ok((Cnf::new(clauses), n))
}

pub fn write_cnf(cnf: &Cnf, n: usize) -> String {
    let mut out = format!("p cnf {n} {}\n", cnf.len());
    for c in cnf.clauses() {
        for l in c.literals() {
            out.push_str(&l.to_dimacs().to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}
