use std::io::Read;

use monopos::{generate_family, parse_graph, Error, Family, Graph, GraphFormat, Result};

/// Loads a graph argument. Three spellings: a family descriptor such as
/// `gear:4` (anything containing a colon), `-` for graph6 on standard input,
/// or a file path. Files holding edge lists start with the ASCII order
/// digit; graph6 bytes never do, so the first character decides the format.
pub fn load_graph(arg: &str) -> Result<Graph> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Io(format!("standard input: {e}")))?;
        return parse_graph_text(&text);
    }
    if arg.contains(':') {
        let family: Family = arg.parse()?;
        return generate_family(&family);
    }
    let text =
        std::fs::read_to_string(arg).map_err(|e| Error::Io(format!("{arg}: {e}")))?;
    parse_graph_text(&text)
}

fn parse_graph_text(text: &str) -> Result<Graph> {
    let trimmed = text.trim_start();
    if trimmed.starts_with(|c: char| c.is_ascii_digit()) {
        return parse_graph(text, GraphFormat::EdgeList);
    }
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::InvalidArgument("empty graph input".into()))?;
    parse_graph(line, GraphFormat::Graph6)
}

/// Name to display for a graph: its family label when it has one, otherwise
/// its graph6 serialization.
pub fn display_name(g: &Graph) -> String {
    match g.name() {
        Some(name) => name.to_string(),
        None => monopos::serialize_graph(g, GraphFormat::Graph6),
    }
}
