//! Reading and writing matrices and JSON reports.
//!
//! cargo run --example matrix_io

use spectral_fence::eigenvalues_default;
use spectral_fence::io::{
    canonical_json, parse_complex, parse_matrix, parse_partition, parse_report, write_dense_text, write_matrix_market,
    FormatHint, Report,
};

fn main() -> spectral_fence::Result<()> {
    let text = "# complex entries: a, bi or a+bi\n2, 1-i, 0\n0.5i 3 -1e-2\n1 i -2.5\n";
    let doc = parse_matrix(text.as_bytes(), FormatHint::Auto)?;
    println!("parsed {}x{} from {:?}", doc.matrix.dim(), doc.matrix.dim(), doc.format);

    let dense = write_dense_text(&doc.matrix);
    let market = write_matrix_market(&doc.matrix);
    print!("dense text:\n{dense}Matrix Market:\n{market}");
    assert_eq!(parse_matrix(dense.as_bytes(), FormatHint::Auto)?.matrix, doc.matrix);
    assert_eq!(parse_matrix(market.as_bytes(), FormatHint::Auto)?.matrix, doc.matrix);

    for token in ["-i", "2.5e-3+4i", "7", "1+2"] {
        println!("{token:>12} -> {:?}", parse_complex(token));
    }
    match parse_matrix(b"1 2\n3\n", FormatHint::DenseText) {
        Err(e) => println!("ragged input: {e}"),
        Ok(_) => unreachable!(),
    }

    let report = Report {
        matrix_name: Some("demo".into()),
        n: Some(doc.matrix.dim()),
        partition: Some(parse_partition("1,3", 3)?),
        spectrum: Some(eigenvalues_default(&doc.matrix)?),
        ..Default::default()
    };
    let bytes = report.to_json();
    println!("{}", String::from_utf8_lossy(&bytes));
    assert_eq!(canonical_json(&parse_report(&bytes)?), bytes);
    Ok(())
}
