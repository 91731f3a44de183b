//! Reading a scheme file, writing one back, and rendering a result document.

use kaehler::io::{Entry, ResultDocument, SchemeFile, SchemeSummary, Value};
use kaehler::kaehler::omega_hilbert;
use kaehler::schemes::compile;

const TEXT: &str = r#"{
  "format": 1,
  "label": "conic and cubic over F3",
  "field": "F3",
  "n": 2,
  "ideal": ["X1^2 + X2^2", "X0*X1^2 + X1^3 + X2^3"]
}"#;

fn main() -> kaehler::Result<()> {
    let file = SchemeFile::parse(TEXT)?;
    let spec = file.to_spec()?;
    println!("{}", SchemeFile::from_spec(&spec).to_json());

    let x = compile(spec)?;
    let mut doc = ResultDocument::new(vec!["example".into()]);
    doc.scheme = Some(SchemeSummary::of(&x));
    doc.push(Entry::new("Omega1", Value::Hilbert(omega_hilbert(&x, 1)?)));
    doc.push(Entry::check("deg", Value::Number(x.deg() as i64), Value::Number(6)));
    print!("{}", doc.to_table());
    println!("{}", doc.to_json());
    Ok(())
}
