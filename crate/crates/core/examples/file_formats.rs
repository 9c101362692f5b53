// Reading and writing the JSON interchange format.

use smashkit::catalog::sweedler;
use smashkit::format::Document;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let doc = Document::Hopf(sweedler().k);
    let text = doc.to_json();
    println!("{}", text.lines().take(12).collect::<Vec<_>>().join("\n"));

    let dir = std::env::temp_dir().join(format!("smashkit-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("h4.json");
    doc.save(&path)?;
    let back = Document::load(&path)?;
    assert_eq!(back.to_json(), text);
    println!("round-trip through {} is byte-identical", path.display());

    let bad = r#"{"format": 1, "kind": "matrix", "field": "Q", "rows": 1, "cols": 1,
                  "entries": [{"r": 0, "c": 4, "v": "1"}]}"#;
    match Document::from_json(bad) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
