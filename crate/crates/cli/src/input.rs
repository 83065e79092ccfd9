use std::fs;
use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use dib_core::codec::{from_edge_list, read_digraph6_lines, DIGRAPH6_HEADER};
use dib_core::constructions::FamilySpec;
use dib_core::{Coloring, Digraph, Error};

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    D6,
    Edges,
}

/// A digraph source: a file path, `-` for stdin, or a family spec string.
pub fn read_digraphs(source: &str, format: Option<Format>) -> Result<Vec<Digraph>, Failure> {
    if source != "-" && !Path::new(source).exists() && source.contains(':') {
        let spec: FamilySpec = source.parse()?;
        return Ok(vec![spec.generate()?]);
    }
    let text = read_text(source)?;
    let format = format.unwrap_or_else(|| sniff(&text));
    let digraphs = match format {
        Format::D6 => read_digraph6_lines(&text)?,
        Format::Edges => vec![from_edge_list(&text)?],
    };
    if digraphs.is_empty() {
        return Err(Error::Parse {
            line: 1,
            offset: 0,
            message: format!("no digraph found in `{source}`"),
        }
        .into());
    }
    Ok(digraphs)
}

pub fn read_one(source: &str, format: Option<Format>) -> Result<Digraph, Failure> {
    let mut all = read_digraphs(source, format)?;
    if all.len() != 1 {
        return Err(Failure::Usage(format!(
            "`{source}` holds {} digraphs; this command takes exactly one",
            all.len()
        )));
    }
    Ok(all.remove(0))
}

fn read_text(source: &str) -> Result<String, Failure> {
    if source == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(source).map_err(|e| Failure::Io(format!("{source}: {e}")))
    }
}

fn sniff(text: &str) -> Format {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with('&') || l.starts_with(DIGRAPH6_HEADER) => Format::D6,
        _ => Format::Edges,
    }
}

/// Coloring file: a JSON array with one color index per vertex.
pub fn read_coloring(source: &str) -> Result<Coloring, Failure> {
    let text = read_text(source)?;
    let colors: Vec<usize> = serde_json::from_str(&text).map_err(|e| {
        Failure::Core(Error::Parse {
            line: e.line(),
            offset: e.column().saturating_sub(1),
            message: format!("coloring must be a JSON array of color indices: {e}"),
        })
    })?;
    Ok(Coloring::new(colors)?)
}
