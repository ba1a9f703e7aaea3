// Writes a synthetic road grid as a pair of DIMACS files (one per cost),
// reads it back, gzipped too, and checks nothing changed.

use bicrit::bench::synthetic_grid;
use bicrit::dimacs::{load_bigraph, write_bigraph};
use flate2::{write::GzEncoder, Compression};

fn main() {
    let g = synthetic_grid(7, 20, 15).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let (d, t) = (dir.path().join("grid-d.gr"), dir.path().join("grid-t.gr"));
    write_bigraph(&g, &d, &t).unwrap();

    let back = load_bigraph(&d, &t).unwrap();
    println!(
        "{} vertices, {} arcs",
        back.vertex_count(),
        back.edge_count()
    );
    println!("hash {}", back.content_hash());
    assert_eq!(back.content_hash(), g.content_hash());

    let gz = dir.path().join("grid-d.gr.gz");
    let mut enc = GzEncoder::new(std::fs::File::create(&gz).unwrap(), Compression::fast());
    std::io::copy(&mut std::fs::File::open(&d).unwrap(), &mut enc).unwrap();
    enc.finish().unwrap();
    let from_gz = load_bigraph(&gz, &t).unwrap();
    assert_eq!(from_gz.content_hash(), g.content_hash());
    println!("gzip round trip ok");
}
