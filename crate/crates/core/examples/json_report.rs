// Parsing the text input format and emitting the JSON report.

use std::error::Error;

use geoconn::cli::{build_report, parse_hypergraph, ReportDocument};
use geoconn::ConnectivityOptions;

const INPUT: &str = "\
# k n m
3 6 3
1 2 3
2 3 4
5 6 1
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = parse_hypergraph(INPUT)?;
    let doc = build_report(&g, "<inline>", &ConnectivityOptions::default())?;
    let json = doc.to_json();
    print!("{json}");
    assert_eq!(ReportDocument::from_json(&json)?, doc);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
