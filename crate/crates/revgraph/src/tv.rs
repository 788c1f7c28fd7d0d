//! Plain-text truth vectors: `#` comment lines, then `2^n` decimal values
//! separated by whitespace or newlines.

use revgraph_core::TruthVector;

use crate::{Error, Result};

pub fn parse_truth_vector(text: &str) -> Result<TruthVector> {
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        for token in line.split_whitespace() {
            let value = token
                .parse::<u32>()
                .map_err(|_| Error::parse(idx + 1, format!("expected a non-negative integer, found `{token}`")))?;
            entries.push(value);
        }
    }
    if entries.is_empty() {
        return Err(Error::Format("truth vector is empty".into()));
    }
    Ok(TruthVector::from_entries(entries)?)
}

/// Single line of space-separated values with a trailing newline.
pub fn write_truth_vector(tv: &TruthVector) -> String {
    let mut out = tv.entries().iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_newlines() {
        let tv = parse_truth_vector("# example\n1 0 3 2\n5 7\n  4 6\n").unwrap();
        assert_eq!(tv.entries(), &[1, 0, 3, 2, 5, 7, 4, 6]);
        assert_eq!(tv.lines(), 3);
        assert_eq!(write_truth_vector(&tv), "1 0 3 2 5 7 4 6\n");
    }

    #[test]
    fn rejects_bad_input() {
        let dup = parse_truth_vector("0 1 1 3").unwrap_err().to_string();
        assert!(dup.contains("value 1"), "{dup}");
        assert!(parse_truth_vector("0 1 2").is_err());
        assert!(parse_truth_vector("0 1 x 3").unwrap_err().to_string().starts_with("line 1"));
        assert!(parse_truth_vector("0 1 2 4").is_err());
        assert!(parse_truth_vector("# nothing\n").is_err());
        assert!(parse_truth_vector("0").is_err());
    }
}
