use std::path::Path;

use hardy_means::{Error, ExtReal, MeanParams, PositiveVector, Result};

fn parse_entry(token: &str) -> Result<f64> {
    token
        .parse::<f64>()
        .map_err(|_| Error::domain(format!("not a number: {token:?}")))
}

/// `1,4,9` into a validated vector.
pub fn parse_data(data: &str) -> Result<PositiveVector> {
    let xs = data
        .split(',')
        .map(|t| parse_entry(t.trim()))
        .collect::<Result<Vec<_>>>()?;
    PositiveVector::new(xs)
}

/// One entry per line. Blank lines and `#` comments are skipped.
pub fn parse_lines(text: &str) -> Result<PositiveVector> {
    let mut xs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        xs.push(parse_entry(body).map_err(|e| e.context(format!("line {}", i + 1)))?);
    }
    PositiveVector::new(xs)
}

pub fn read_vector(path: &Path) -> Result<PositiveVector> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::domain(format!("cannot read {}: {e}", path.display())))?;
    parse_lines(&text).map_err(|e| e.context(path.display()))
}

/// `k,s,q`.
pub fn parse_point(text: &str) -> Result<MeanParams> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [k, s, q] = parts[..] else {
        return Err(Error::domain(format!("expected k,s,q, got {text:?}")));
    };
    let k = k
        .parse::<usize>()
        .map_err(|_| Error::domain(format!("bad subset size {k:?}")))?;
    MeanParams::new(k, s.parse()?, q.parse()?)
}

/// `a..b` inclusive, or a comma-separated list.
pub fn parse_k_grid(text: &str) -> Result<Vec<usize>> {
    let bad = || Error::domain(format!("bad k grid {text:?}"));
    let ks: Vec<usize> = match text.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().parse().map_err(|_| bad())?;
            (a..=b).collect()
        }
        None => text
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?,
    };
    if ks.is_empty() || ks.contains(&0) {
        return Err(bad());
    }
    Ok(ks)
}

pub fn parse_exponent_grid(text: &str) -> Result<Vec<ExtReal>> {
    let grid = text
        .split(',')
        .map(|t| t.trim().parse::<ExtReal>())
        .collect::<Result<Vec<_>>>()
        .map_err(|e| e.context(format!("grid {text:?}")))?;
    if grid.is_empty() {
        return Err(Error::domain("empty grid"));
    }
    Ok(grid)
}
