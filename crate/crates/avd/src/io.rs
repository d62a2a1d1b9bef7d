//! Graph input: graph6 line streams and the edge-list text format, from
//! files, standard input or inline strings.

use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader};

use avd_core::graph6::GRAPH6_HEADER;
use avd_core::{parse_graph6, Graph, GraphError};

/// A graph together with the 1-based input line it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberedGraph {
    pub line: usize,
    pub graph: Graph,
}

/// A line that could not be decoded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for LineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[derive(Debug)]
pub enum ReadError {
    Io(io::Error),
    /// Strict mode stops at the first malformed line.
    Malformed(LineError),
}

impl fmt::Display for ReadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReadError::Io(e) => write!(f, "read error: {e}"),
            ReadError::Malformed(e) => write!(f, "malformed input at {e}"),
        }
    }
}

impl std::error::Error for ReadError {}

impl From<io::Error> for ReadError {
    fn from(e: io::Error) -> Self {
        ReadError::Io(e)
    }
}

/// Decoded graphs plus the lines that were skipped.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GraphStream {
    pub graphs: Vec<NumberedGraph>,
    pub skipped: Vec<LineError>,
}

impl GraphStream {
    pub fn single(graph: Graph) -> GraphStream {
        GraphStream { graphs: vec![NumberedGraph { line: 1, graph }], skipped: Vec::new() }
    }

    pub fn into_graphs(self) -> Vec<Graph> {
        self.graphs.into_iter().map(|g| g.graph).collect()
    }
}

/// Opens a file, or standard input for `"-"`.
pub fn open_input(path: &str) -> io::Result<Box<dyn BufRead>> {
    if path == "-" {
        Ok(Box::new(BufReader::new(io::stdin())))
    } else {
        Ok(Box::new(BufReader::new(File::open(path)?)))
    }
}

/// Reads one graph6 graph per line. Blank lines and a bare `>>graph6<<`
/// header line are ignored; malformed lines are skipped with their line
/// number, or abort the read when `strict` is set.
pub fn read_graph6<R: BufRead>(reader: R, strict: bool) -> Result<GraphStream, ReadError> {
    let mut stream = GraphStream::default();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let number = i + 1;
        let text = line.trim_end_matches('\r');
        if text.trim().is_empty() || text == GRAPH6_HEADER {
            continue;
        }
        match parse_graph6(text) {
            Ok(graph) => stream.graphs.push(NumberedGraph { line: number, graph }),
            Err(e) => {
                let err = LineError { line: number, message: e.to_string() };
                if strict {
                    return Err(ReadError::Malformed(err));
                }
                stream.skipped.push(err);
            }
        }
    }
    Ok(stream)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    MissingHeader,
    BadNumber { token: String },
    WrongEdgeCount { declared: usize, found: usize },
    /// An edge line with a single endpoint.
    DanglingEndpoint,
    Graph(GraphError),
}

impl fmt::Display for EdgeListError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeListError::MissingHeader => f.write_str("edge list needs a header \"n m\""),
            EdgeListError::BadNumber { token } => write!(f, "not a vertex count or index: {token:?}"),
            EdgeListError::WrongEdgeCount { declared, found } => {
                write!(f, "header declares {declared} edges but {found} follow")
            }
            EdgeListError::DanglingEndpoint => f.write_str("edge with a single endpoint"),
            EdgeListError::Graph(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for EdgeListError {}

/// Parses `"n m"` followed by `m` pairs `"u v"`, vertices numbered from 0.
///
/// Tokens may be separated by any whitespace, `;` or `,`, so an inline list
/// such as `"3 2; 0 1; 1 2"` is accepted. Repeated edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut numbers = text
        .split(|c: char| c.is_whitespace() || c == ';' || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| EdgeListError::BadNumber { token: t.to_string() }));
    let n = numbers.next().ok_or(EdgeListError::MissingHeader)??;
    let m = numbers.next().ok_or(EdgeListError::MissingHeader)??;
    let rest: Vec<usize> = numbers.collect::<Result<_, _>>()?;
    if rest.len() % 2 == 1 {
        return Err(EdgeListError::DanglingEndpoint);
    }
    if rest.len() / 2 != m {
        return Err(EdgeListError::WrongEdgeCount { declared: m, found: rest.len() / 2 });
    }
    let edges: Vec<(usize, usize)> = rest.chunks(2).map(|p| (p[0], p[1])).collect();
    Graph::from_edges(n, &edges).map_err(EdgeListError::Graph)
}

/// Writes `g` in the edge-list format.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
